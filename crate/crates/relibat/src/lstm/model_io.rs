//! Versioned text serialization for trained models.
//!
//! The file carries everything prediction needs: dimensions, the window
//! length and split fraction used in training, Adam hyperparameters, the
//! per-column normalization statistics, and every weight array row-major
//! with its declared shape. Values print in shortest round-trip form, so
//! save -> load is bit-exact.

use std::io::{BufRead, Write};

use super::{AdamHyper, LstmDims, LstmParams, GATES};
use crate::dataset::ColumnStats;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

const MAGIC: &str = "relibat-model v1";

/// A trained model bundled with its training-time context.
#[derive(Debug, Clone, PartialEq)]
pub struct SavedModel<T: Scalar = f64> {
    pub params: LstmParams<T>,
    pub adam: AdamHyper<T>,
    /// Rolling-window length the model was trained with.
    pub window: usize,
    /// Train fraction of the block split, kept for comparison reports.
    pub train_fraction: f64,
    /// Feature column names, last one the prediction target.
    pub column_names: Vec<String>,
    /// Normalization statistics per feature column.
    pub stats: Vec<ColumnStats<T>>,
}

impl<T: Scalar> SavedModel<T> {
    /// Statistics of the prediction target column.
    pub fn target_stats(&self) -> ColumnStats<T> {
        *self.stats.last().expect("model has feature columns")
    }
}

pub fn save_model<T: Scalar, W: Write>(model: &SavedModel<T>, mut out: W) -> Result<()> {
    let dims = model.params.dims();
    if model.stats.len() != dims.input_dim || model.column_names.len() != dims.input_dim {
        return Err(Error::DimensionMismatch {
            got: model.stats.len(),
            expected: dims.input_dim,
        });
    }
    writeln!(out, "{MAGIC}")?;
    writeln!(out, "input_dim {}", dims.input_dim)?;
    writeln!(out, "hidden_dim {}", dims.hidden_dim)?;
    writeln!(out, "window {}", model.window)?;
    writeln!(out, "train_frac {}", model.train_fraction)?;
    writeln!(out, "adam_lr {}", model.adam.learning_rate)?;
    writeln!(out, "adam_beta1 {}", model.adam.beta1)?;
    writeln!(out, "adam_beta2 {}", model.adam.beta2)?;
    writeln!(out, "adam_eps {}", model.adam.epsilon)?;
    for (name, stats) in model.column_names.iter().zip(&model.stats) {
        writeln!(out, "stats {name} {} {} {}", stats.mean, stats.min, stats.max)?;
    }
    let h = dims.hidden_dim;
    let eta = dims.input_dim;
    for gate in GATES {
        write_block(&mut out, &format!("w_x_{}", gate.tag()), model.params.w_x(gate), h, eta)?;
        write_block(&mut out, &format!("w_h_{}", gate.tag()), model.params.w_h(gate), h, h)?;
        write_block(&mut out, &format!("b_{}", gate.tag()), model.params.bias(gate), 1, h)?;
    }
    write_block(&mut out, "w_out", model.params.output_weights(), 1, h)?;
    write_block(&mut out, "b_out", &[model.params.output_bias()], 1, 1)?;
    writeln!(out, "end")?;
    Ok(())
}

fn write_block<T: Scalar, W: Write>(
    out: &mut W,
    name: &str,
    values: &[T],
    rows: usize,
    cols: usize,
) -> Result<()> {
    debug_assert_eq!(values.len(), rows * cols);
    writeln!(out, "param {name} {rows} {cols}")?;
    for row in values.chunks(cols) {
        let cells: Vec<String> = row.iter().map(|v| format!("{v}")).collect();
        writeln!(out, "{}", cells.join(" "))?;
    }
    Ok(())
}

pub fn load_model<T: Scalar, R: BufRead>(input: R) -> Result<SavedModel<T>> {
    let mut lines = input.lines();
    let magic = next_line(&mut lines)?;
    if magic.trim() != MAGIC {
        return Err(bad(format!("expected \"{MAGIC}\", found \"{magic}\"")));
    }
    let input_dim = parse_usize(&next_line(&mut lines)?, "input_dim")?;
    let hidden_dim = parse_usize(&next_line(&mut lines)?, "hidden_dim")?;
    let window = parse_usize(&next_line(&mut lines)?, "window")?;
    let train_fraction: f64 = parse_value(&next_line(&mut lines)?, "train_frac")?;
    let adam = AdamHyper {
        learning_rate: parse_value(&next_line(&mut lines)?, "adam_lr")?,
        beta1: parse_value(&next_line(&mut lines)?, "adam_beta1")?,
        beta2: parse_value(&next_line(&mut lines)?, "adam_beta2")?,
        epsilon: parse_value(&next_line(&mut lines)?, "adam_eps")?,
    };

    let mut column_names = Vec::with_capacity(input_dim);
    let mut stats = Vec::with_capacity(input_dim);
    for _ in 0..input_dim {
        let line = next_line(&mut lines)?;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 5 || fields[0] != "stats" {
            return Err(bad(format!("expected a stats line, found \"{line}\"")));
        }
        column_names.push(fields[1].to_string());
        stats.push(ColumnStats {
            mean: parse_scalar(fields[2])?,
            min: parse_scalar(fields[3])?,
            max: parse_scalar(fields[4])?,
        });
    }

    let dims = LstmDims::new(input_dim, hidden_dim);
    let mut theta = vec![T::zero(); dims.param_count()];
    let mut expected: Vec<(String, usize, usize, usize)> = Vec::new();
    for gate in GATES {
        expected.push((
            format!("w_x_{}", gate.tag()),
            dims.w_x_offset(gate),
            hidden_dim,
            input_dim,
        ));
        expected.push((
            format!("w_h_{}", gate.tag()),
            dims.w_h_offset(gate),
            hidden_dim,
            hidden_dim,
        ));
        expected.push((format!("b_{}", gate.tag()), dims.bias_offset(gate), 1, hidden_dim));
    }
    expected.push(("w_out".into(), dims.output_weights_offset(), 1, hidden_dim));
    expected.push(("b_out".into(), dims.output_bias_offset(), 1, 1));

    for (name, offset, rows, cols) in expected {
        let line = next_line(&mut lines)?;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 || fields[0] != "param" || fields[1] != name {
            return Err(bad(format!("expected block \"{name}\", found \"{line}\"")));
        }
        let got_rows: usize = fields[2].parse().map_err(|_| bad(line.clone()))?;
        let got_cols: usize = fields[3].parse().map_err(|_| bad(line.clone()))?;
        if got_rows != rows || got_cols != cols {
            return Err(bad(format!(
                "block {name} declares {got_rows}x{got_cols}, expected {rows}x{cols}"
            )));
        }
        for r in 0..rows {
            let line = next_line(&mut lines)?;
            let cells: Vec<&str> = line.split_whitespace().collect();
            if cells.len() != cols {
                return Err(bad(format!(
                    "block {name} row {r} has {} values, expected {cols}",
                    cells.len()
                )));
            }
            for (c, cell) in cells.iter().enumerate() {
                theta[offset + r * cols + c] = parse_scalar(cell)?;
            }
        }
    }
    let terminator = next_line(&mut lines)?;
    if terminator.trim() != "end" {
        return Err(bad(format!("expected \"end\", found \"{terminator}\"")));
    }

    Ok(SavedModel {
        params: LstmParams::from_flat(dims, theta)?,
        adam,
        window,
        train_fraction,
        column_names,
        stats,
    })
}

fn next_line<I: Iterator<Item = std::io::Result<String>>>(lines: &mut I) -> Result<String> {
    match lines.next() {
        Some(line) => Ok(line?),
        None => Err(bad("unexpected end of file".into())),
    }
}

fn bad(message: String) -> Error {
    Error::Format {
        what: "model file",
        message,
    }
}

fn parse_usize(line: &str, key: &str) -> Result<usize> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 || fields[0] != key {
        return Err(bad(format!("expected \"{key} <value>\", found \"{line}\"")));
    }
    fields[1]
        .parse()
        .map_err(|_| bad(format!("bad {key} value \"{}\"", fields[1])))
}

fn parse_value<T: Scalar>(line: &str, key: &str) -> Result<T> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 || fields[0] != key {
        return Err(bad(format!("expected \"{key} <value>\", found \"{line}\"")));
    }
    parse_scalar(fields[1])
}

fn parse_scalar<T: Scalar>(s: &str) -> Result<T> {
    s.parse::<T>()
        .map_err(|_| bad(format!("bad numeric value \"{s}\"")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_model() -> SavedModel<f64> {
        let dims = LstmDims::new(3, 2);
        let params = LstmParams::init(dims, 77);
        SavedModel {
            params,
            adam: AdamHyper::default(),
            window: 5,
            train_fraction: 0.9,
            column_names: vec!["pr_a1".into(), "pr_a2".into(), "r_star".into()],
            stats: vec![
                ColumnStats {
                    mean: 0.5,
                    min: 0.1,
                    max: 0.9,
                },
                ColumnStats {
                    mean: 0.25,
                    min: 0.0,
                    max: 0.5,
                },
                ColumnStats {
                    mean: 1.0 / 3.0,
                    min: 0.05,
                    max: 0.777,
                },
            ],
        }
    }

    #[test]
    fn roundtrip_is_bit_exact() {
        let model = sample_model();
        let mut buffer = Vec::new();
        save_model(&model, &mut buffer).unwrap();
        let back: SavedModel<f64> = load_model(std::io::Cursor::new(&buffer)).unwrap();
        assert_eq!(model, back);
        // Saving again produces identical bytes.
        let mut buffer2 = Vec::new();
        save_model(&back, &mut buffer2).unwrap();
        assert_eq!(buffer, buffer2);
    }

    #[test]
    fn serialized_value_count_matches_param_count() {
        let model = sample_model();
        let mut buffer = Vec::new();
        save_model(&model, &mut buffer).unwrap();
        let text = String::from_utf8(buffer).unwrap();
        let mut counted = 0usize;
        let mut in_params = false;
        for line in text.lines() {
            if line.starts_with("param ") {
                in_params = true;
                continue;
            }
            if line == "end" {
                break;
            }
            if in_params {
                counted += line.split_whitespace().count();
            }
        }
        let dims = model.params.dims();
        assert_eq!(counted, dims.param_count());
        let (first, second, total) =
            super::super::param_count(dims.input_dim, dims.hidden_dim);
        assert_eq!(first + second, total);
        assert_eq!(counted, total);
    }

    #[test]
    fn rejects_corrupted_files() {
        let model = sample_model();
        let mut buffer = Vec::new();
        save_model(&model, &mut buffer).unwrap();
        let text = String::from_utf8(buffer).unwrap();
        // Wrong magic.
        let bad_magic = text.replacen("v1", "v9", 1);
        assert!(load_model::<f64, _>(std::io::Cursor::new(bad_magic.into_bytes())).is_err());
        // Truncated.
        let truncated = &text[..text.len() / 2];
        assert!(load_model::<f64, _>(std::io::Cursor::new(truncated.as_bytes())).is_err());
    }
}
