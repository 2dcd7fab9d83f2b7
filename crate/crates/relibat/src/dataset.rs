//! Reliability time-series datasets: labeling, normalization, windowing,
//! and the CSV formats the CLI exchanges.
//!
//! A dataset row is `P_t = (Pr(t, a_1), ..., Pr(t, a_m), R*(t))` — the arc
//! reliabilities plus the estimated network reliability — for `t = 1..=N`.
//! Rows are never shuffled. Every feature column is mean-normalized with
//! statistics over the whole table, then consecutive rows are grouped into
//! rolling windows whose target is the normalized reliability one step past
//! the window.

use std::io::{BufRead, Write};

use rayon::prelude::*;

use crate::batmcs::{multi_run_average, BatMcsConfig};
use crate::error::{Error, Result};
use crate::network::{Network, TimeDistribution};
use crate::rng::mix_seed;
use crate::scalar::Scalar;

/// Raw labeled dataset: row `i` belongs to time step `times[i]` and holds
/// the `m + 1` features.
#[derive(Debug, Clone, PartialEq)]
pub struct ReliabilityDataset<T: Scalar = f64> {
    times: Vec<usize>,
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> ReliabilityDataset<T> {
    /// Assembles a dataset from pre-computed rows. Every row must share one
    /// width (the feature count `m + 1`).
    pub fn from_parts(times: Vec<usize>, rows: Vec<Vec<T>>) -> Result<Self> {
        if times.len() != rows.len() {
            return Err(Error::Format {
                what: "dataset",
                message: format!(
                    "{} time labels for {} rows",
                    times.len(),
                    rows.len()
                ),
            });
        }
        let width = rows.first().map(Vec::len).unwrap_or(0);
        if width < 2 {
            return Err(Error::Format {
                what: "dataset",
                message: "rows need at least one arc column and the reliability column".into(),
            });
        }
        for row in &rows {
            if row.len() != width {
                return Err(Error::Format {
                    what: "dataset",
                    message: format!("row width {} differs from {}", row.len(), width),
                });
            }
        }
        Ok(Self { times, rows })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Feature count `m + 1`.
    pub fn width(&self) -> usize {
        self.rows.first().map(Vec::len).unwrap_or(0)
    }

    pub fn arc_count(&self) -> usize {
        self.width() - 1
    }

    pub fn times(&self) -> &[usize] {
        &self.times
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    /// The reliability column `R*(t)`.
    pub fn reliability_column(&self) -> Vec<T> {
        let last = self.width() - 1;
        self.rows.iter().map(|row| row[last]).collect()
    }

    /// Mean-normalizes every feature column with statistics over all rows.
    pub fn normalize(&self) -> NormalizedDataset<T> {
        let width = self.width();
        let stats: Vec<ColumnStats<T>> = (0..width)
            .map(|c| {
                let column: Vec<T> = self.rows.iter().map(|row| row[c]).collect();
                ColumnStats::of(&column)
            })
            .collect();
        self.normalize_with(&stats)
            .expect("statistics were computed for this dataset")
    }

    /// Normalizes with externally supplied statistics (e.g. the ones a model
    /// was trained with).
    pub fn normalize_with(&self, stats: &[ColumnStats<T>]) -> Result<NormalizedDataset<T>> {
        if stats.len() != self.width() {
            return Err(Error::DimensionMismatch {
                got: stats.len(),
                expected: self.width(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(stats)
                    .map(|(&x, s)| s.normalize(x))
                    .collect()
            })
            .collect();
        Ok(NormalizedDataset {
            times: self.times.clone(),
            rows,
            stats: stats.to_vec(),
        })
    }
}

/// Mean, minimum, and maximum of one feature column.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ColumnStats<T: Scalar = f64> {
    pub mean: T,
    pub min: T,
    pub max: T,
}

impl<T: Scalar> ColumnStats<T> {
    pub fn of(column: &[T]) -> Self {
        let n = T::from_usize(column.len()).unwrap();
        let mean = column.iter().copied().fold(T::zero(), |a, b| a + b) / n;
        let min = column.iter().copied().fold(T::infinity(), T::min);
        let max = column.iter().copied().fold(T::neg_infinity(), T::max);
        Self { mean, min, max }
    }

    /// `(x - mean) / (max - min)`; constant columns map to zero.
    pub fn normalize(&self, x: T) -> T {
        let range = self.max - self.min;
        if range == T::zero() {
            T::zero()
        } else {
            (x - self.mean) / range
        }
    }

    pub fn denormalize(&self, x: T) -> T {
        x * (self.max - self.min) + self.mean
    }
}

/// Mean-normalizes one value series; constant series map to all zeros.
pub fn mean_normalize<T: Scalar>(column: &[T]) -> Vec<T> {
    let stats = ColumnStats::of(column);
    column.iter().map(|&x| stats.normalize(x)).collect()
}

/// Normalized dataset together with the statistics that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedDataset<T: Scalar = f64> {
    pub times: Vec<usize>,
    pub rows: Vec<Vec<T>>,
    pub stats: Vec<ColumnStats<T>>,
}

impl<T: Scalar> NormalizedDataset<T> {
    pub fn width(&self) -> usize {
        self.rows.first().map(Vec::len).unwrap_or(0)
    }

    /// Statistics of the reliability column (the prediction target).
    pub fn target_stats(&self) -> ColumnStats<T> {
        *self.stats.last().expect("dataset has columns")
    }
}

/// One rolling-window block: `window` consecutive normalized rows and the
/// normalized reliability at the following step.
#[derive(Debug, Clone, PartialEq)]
pub struct WindowBlock<T: Scalar = f64> {
    pub inputs: Vec<Vec<T>>,
    pub target: T,
    /// Time step the target belongs to.
    pub target_time: usize,
}

/// Splits a normalized dataset into rolling-window blocks and cuts the
/// first `train_fraction` of them (in time order, no shuffling) for
/// training, leaving the rest for testing.
///
/// A block needs `window + 1` consecutive rows (`window` inputs plus the
/// target), and the final row is never used as an input, so `n` rows yield
/// `n - window - 1` blocks.
pub fn window_split<T: Scalar>(
    dataset: &NormalizedDataset<T>,
    window: usize,
    train_fraction: f64,
) -> Result<(Vec<WindowBlock<T>>, Vec<WindowBlock<T>>)> {
    let n = dataset.rows.len();
    if window == 0 {
        return Err(Error::Format {
            what: "window",
            message: "window must be at least 1".into(),
        });
    }
    if n < window + 2 {
        return Err(Error::DatasetTooShort { rows: n, window });
    }
    if !(0.0..=1.0).contains(&train_fraction) {
        return Err(Error::Format {
            what: "train fraction",
            message: format!("{train_fraction} outside [0, 1]"),
        });
    }
    let target_column = dataset.width() - 1;
    let total = n - window - 1;
    let mut blocks = Vec::with_capacity(total);
    for start in 0..total {
        let inputs = dataset.rows[start..start + window].to_vec();
        let target = dataset.rows[start + window][target_column];
        blocks.push(WindowBlock {
            inputs,
            target,
            target_time: dataset.times[start + window],
        });
    }
    let train_count = (total as f64 * train_fraction).floor() as usize;
    let test = blocks.split_off(train_count);
    Ok((blocks, test))
}

/// Labels every time step of a distribution with its multi-run stratified
/// reliability estimate. Step `t` re-seeds from `(config.seed, t)`, so rows
/// are independent work items and the table is reproducible regardless of
/// how many workers label it.
pub fn label_dataset<T: Scalar>(
    network: &Network,
    distribution: &TimeDistribution<T>,
    config: &BatMcsConfig,
) -> Result<ReliabilityDataset<T>> {
    let steps = distribution.steps();
    let rows: Result<Vec<Vec<T>>> = (1..=steps)
        .into_par_iter()
        .map(|t| {
            let run_config = BatMcsConfig {
                seed: mix_seed(config.seed, t as u64),
                ..config.clone()
            };
            let probs = distribution.row(t);
            let label = multi_run_average(network, probs, &run_config)?.mean;
            let mut row = probs.to_vec();
            row.push(label);
            Ok(row)
        })
        .collect();
    ReliabilityDataset::from_parts((1..=steps).collect(), rows?)
}

fn column_names(arc_count: usize) -> Vec<String> {
    let mut names: Vec<String> = (1..=arc_count).map(|i| format!("pr_a{i}")).collect();
    names.push("r_star".into());
    names
}

/// Writes the raw dataset CSV: header `t,pr_a1,...,pr_am,r_star`, one row
/// per time step. Values print with enough digits to re-read identically.
pub fn write_csv<T: Scalar, W: Write>(dataset: &ReliabilityDataset<T>, mut out: W) -> Result<()> {
    let names = column_names(dataset.arc_count());
    writeln!(out, "t,{}", names.join(","))?;
    for (t, row) in dataset.times.iter().zip(&dataset.rows) {
        let values: Vec<String> = row.iter().map(|v| format!("{v}")).collect();
        writeln!(out, "{t},{}", values.join(","))?;
    }
    Ok(())
}

/// Reads a raw dataset CSV produced by [`write_csv`].
pub fn read_csv<T: Scalar, R: BufRead>(input: R) -> Result<ReliabilityDataset<T>> {
    let mut lines = input.lines();
    let header = lines
        .next()
        .ok_or(Error::Format {
            what: "dataset CSV",
            message: "empty file".into(),
        })??;
    let columns: Vec<&str> = header.trim().split(',').collect();
    if columns.first() != Some(&"t") || columns.last() != Some(&"r_star") || columns.len() < 3 {
        return Err(Error::Format {
            what: "dataset CSV",
            message: format!("unexpected header \"{header}\""),
        });
    }
    let width = columns.len() - 1;
    let mut times = Vec::new();
    let mut rows = Vec::new();
    for (idx, line) in lines.enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != width + 1 {
            return Err(Error::Format {
                what: "dataset CSV",
                message: format!("row {} has {} fields, expected {}", idx + 2, fields.len(), width + 1),
            });
        }
        let t: usize = fields[0].parse().map_err(|_| Error::Format {
            what: "dataset CSV",
            message: format!("bad time step \"{}\"", fields[0]),
        })?;
        let mut row = Vec::with_capacity(width);
        for field in &fields[1..] {
            let value = field.parse::<T>().map_err(|_| Error::Format {
                what: "dataset CSV",
                message: format!("bad value \"{field}\""),
            })?;
            row.push(value);
        }
        times.push(t);
        rows.push(row);
    }
    ReliabilityDataset::from_parts(times, rows)
}

/// Writes the normalized CSV: a `#stats` line per feature column (mean,
/// min, max with full precision), then the same layout as the raw CSV.
pub fn write_normalized_csv<T: Scalar, W: Write>(
    dataset: &NormalizedDataset<T>,
    mut out: W,
) -> Result<()> {
    let names = column_names(dataset.width() - 1);
    writeln!(out, "#stats,column,mean,min,max")?;
    for (name, stats) in names.iter().zip(&dataset.stats) {
        writeln!(out, "#stats,{name},{},{},{}", stats.mean, stats.min, stats.max)?;
    }
    writeln!(out, "t,{}", names.join(","))?;
    for (t, row) in dataset.times.iter().zip(&dataset.rows) {
        let values: Vec<String> = row.iter().map(|v| format!("{v}")).collect();
        writeln!(out, "{t},{}", values.join(","))?;
    }
    Ok(())
}

/// Reads a normalized CSV produced by [`write_normalized_csv`].
pub fn read_normalized_csv<T: Scalar, R: BufRead>(input: R) -> Result<NormalizedDataset<T>> {
    let mut stats = Vec::new();
    let mut body = String::new();
    for line in input.lines() {
        let line = line?;
        if let Some(rest) = line.strip_prefix("#stats,") {
            if rest == "column,mean,min,max" {
                continue;
            }
            let fields: Vec<&str> = rest.split(',').collect();
            if fields.len() != 4 {
                return Err(Error::Format {
                    what: "normalized CSV",
                    message: format!("bad stats line \"{line}\""),
                });
            }
            let parse = |s: &str| {
                s.parse::<T>().map_err(|_| Error::Format {
                    what: "normalized CSV",
                    message: format!("bad stats value \"{s}\""),
                })
            };
            stats.push(ColumnStats {
                mean: parse(fields[1])?,
                min: parse(fields[2])?,
                max: parse(fields[3])?,
            });
            continue;
        }
        body.push_str(&line);
        body.push('\n');
    }
    let dataset = read_csv::<T, _>(std::io::Cursor::new(body))?;
    if stats.len() != dataset.width() {
        return Err(Error::Format {
            what: "normalized CSV",
            message: format!(
                "{} stats lines for {} feature columns",
                stats.len(),
                dataset.width()
            ),
        });
    }
    Ok(NormalizedDataset {
        times: dataset.times,
        rows: dataset.rows,
        stats,
    })
}
