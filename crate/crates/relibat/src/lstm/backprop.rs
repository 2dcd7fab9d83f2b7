//! Exact gradients of the window loss by backpropagation through time.

use super::{LstmParams, StepRecord, GATES};
use crate::dataset::WindowBlock;
use crate::error::{Error, Result};
use crate::scalar::{cast, Scalar};

/// Gradient of the mean squared error over `blocks` with respect to every
/// parameter, in flat layout order.
///
/// Forward traces are cached per window so the backward sweep is a single
/// pass. Blocks accumulate in order, so the result is deterministic.
pub fn gradients<T: Scalar>(
    params: &LstmParams<T>,
    blocks: &[WindowBlock<T>],
) -> Result<Vec<T>> {
    if blocks.is_empty() {
        return Err(Error::EmptyBlocks);
    }
    let dims = params.dims();
    let mut grad = vec![T::zero(); dims.param_count()];
    let scale = cast::<T>(2.0) / T::from_usize(blocks.len()).unwrap();
    for block in blocks {
        let records = params.forward_window(&block.inputs)?;
        let prediction = params.readout(records.last().unwrap());
        let upstream = scale * (prediction - block.target);
        backward_window(params, &block.inputs, &records, upstream, &mut grad);
    }
    for (idx, g) in grad.iter().enumerate() {
        if !g.is_finite() {
            return Err(Error::NonFinite {
                place: format!("gradient of {}", dims.block_name(idx)),
            });
        }
    }
    Ok(grad)
}

/// Backward sweep for one window; `upstream` is dLoss/dPrediction.
fn backward_window<T: Scalar>(
    params: &LstmParams<T>,
    inputs: &[Vec<T>],
    records: &[StepRecord<T>],
    upstream: T,
    grad: &mut [T],
) {
    let dims = params.dims();
    let h = dims.hidden_dim;
    let eta = dims.input_dim;
    let steps = records.len();
    let zeros = vec![T::zero(); h];

    // Output neuron.
    let final_hidden = &records[steps - 1].hidden;
    let wo = dims.output_weights_offset();
    for r in 0..h {
        grad[wo + r] = grad[wo + r] + upstream * final_hidden[r];
    }
    let bo = dims.output_bias_offset();
    grad[bo] = grad[bo] + upstream;

    // Seed the recurrent error at the last step.
    let out_w = params.output_weights();
    let mut d_hidden: Vec<T> = out_w.iter().map(|&w| upstream * w).collect();
    let mut d_cell = vec![T::zero(); h];

    let mut d_gates = vec![T::zero(); 4 * h];
    for t in (0..steps).rev() {
        let record = &records[t];
        let (h_prev, c_prev) = if t > 0 {
            (&records[t - 1].hidden, &records[t - 1].cell)
        } else {
            (&zeros, &zeros)
        };

        // Through H_t = O_t o tanh(C_t) and C_t = F_t o C_{t-1} + I_t o N_t,
        // down to the four pre-activation errors.
        for r in 0..h {
            let tanh_c = record.cell_tanh[r];
            let d_out = d_hidden[r] * tanh_c;
            let dc = d_cell[r] + d_hidden[r] * record.output[r] * (T::one() - tanh_c * tanh_c);
            let d_forget = dc * c_prev[r];
            let d_input = dc * record.candidate[r];
            let d_candidate = dc * record.input[r];
            d_cell[r] = dc * record.forget[r];

            let f = record.forget[r];
            let i = record.input[r];
            let o = record.output[r];
            let n = record.candidate[r];
            d_gates[r] = d_forget * f * (T::one() - f);
            d_gates[h + r] = d_input * i * (T::one() - i);
            d_gates[2 * h + r] = d_out * o * (T::one() - o);
            d_gates[3 * h + r] = d_candidate * (T::one() - n * n);
        }

        // Parameter accumulation and the error flowing into h_{t-1}.
        let x = &inputs[t];
        for value in d_hidden.iter_mut() {
            *value = T::zero();
        }
        for gate in GATES {
            let g = gate.index();
            let da = &d_gates[g * h..(g + 1) * h];
            let wx = dims.w_x_offset(gate);
            let wh = dims.w_h_offset(gate);
            let b = dims.bias_offset(gate);
            let w_h = params.w_h(gate);
            for r in 0..h {
                let d = da[r];
                if d == T::zero() {
                    continue;
                }
                let row = &mut grad[wx + r * eta..wx + (r + 1) * eta];
                for (slot, &xv) in row.iter_mut().zip(x) {
                    *slot = *slot + d * xv;
                }
                let row = &mut grad[wh + r * h..wh + (r + 1) * h];
                for (slot, &hv) in row.iter_mut().zip(h_prev) {
                    *slot = *slot + d * hv;
                }
                grad[b + r] = grad[b + r] + d;
                let w_row = &w_h[r * h..(r + 1) * h];
                for (dh, &w) in d_hidden.iter_mut().zip(w_row) {
                    *dh = *dh + d * w;
                }
            }
        }
    }
}
