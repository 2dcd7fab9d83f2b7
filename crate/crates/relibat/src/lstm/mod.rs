//! Self-contained single-hidden-layer LSTM regressor.
//!
//! One LSTM layer (four gates, hidden width `h`) unrolls over a fixed
//! window of feature rows; a dense output neuron maps the final hidden
//! state to the predicted next-step reliability. Training is mini-batch
//! gradient descent with Adam over exact backpropagation-through-time
//! gradients. Everything lives in one flat parameter vector so the
//! optimizer, the gradient checker, and serialization all see the same
//! layout.

mod adam;
mod backprop;
mod model_io;
mod train;

pub use adam::{adam_step, AdamHyper, AdamState};
pub use backprop::gradients;
pub use model_io::{load_model, save_model, SavedModel};
pub use train::{train, EpochRecord, TrainConfig, TrainOutcome};

use crate::dataset::WindowBlock;
use crate::error::{Error, Result};
use crate::rng::stream_rng;
use crate::scalar::{cast, Scalar};


/// Gate order inside the flat parameter vector.
pub(crate) const GATES: [Gate; 4] = [Gate::Forget, Gate::Input, Gate::Output, Gate::Cell];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gate {
    Forget,
    Input,
    Output,
    Cell,
}

impl Gate {
    fn index(self) -> usize {
        match self {
            Gate::Forget => 0,
            Gate::Input => 1,
            Gate::Output => 2,
            Gate::Cell => 3,
        }
    }

    pub(crate) fn tag(self) -> &'static str {
        match self {
            Gate::Forget => "f",
            Gate::Input => "i",
            Gate::Output => "o",
            Gate::Cell => "c",
        }
    }
}

/// Model dimensions: `input_dim` features per row, `hidden_dim` LSTM units.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LstmDims {
    pub input_dim: usize,
    pub hidden_dim: usize,
}

impl LstmDims {
    pub fn new(input_dim: usize, hidden_dim: usize) -> Self {
        Self {
            input_dim,
            hidden_dim,
        }
    }

    fn gate_block(&self) -> usize {
        let h = self.hidden_dim;
        h * self.input_dim + h * h + h
    }

    pub(crate) fn w_x_offset(&self, gate: Gate) -> usize {
        gate.index() * self.gate_block()
    }

    pub(crate) fn w_h_offset(&self, gate: Gate) -> usize {
        self.w_x_offset(gate) + self.hidden_dim * self.input_dim
    }

    pub(crate) fn bias_offset(&self, gate: Gate) -> usize {
        self.w_h_offset(gate) + self.hidden_dim * self.hidden_dim
    }

    pub(crate) fn output_weights_offset(&self) -> usize {
        4 * self.gate_block()
    }

    pub(crate) fn output_bias_offset(&self) -> usize {
        self.output_weights_offset() + self.hidden_dim
    }

    /// Total trainable parameter count, `4h(eta + h + 1) + h + 1`.
    pub fn param_count(&self) -> usize {
        self.output_bias_offset() + 1
    }

    /// Human name of the parameter block holding flat index `idx`.
    pub(crate) fn block_name(&self, idx: usize) -> String {
        for gate in GATES {
            if idx < self.w_h_offset(gate) {
                return format!("w_x_{}", gate.tag());
            }
            if idx < self.bias_offset(gate) {
                return format!("w_h_{}", gate.tag());
            }
            if idx < self.w_x_offset(gate) + self.gate_block() {
                return format!("b_{}", gate.tag());
            }
        }
        if idx < self.output_bias_offset() {
            "w_out".into()
        } else {
            "b_out".into()
        }
    }
}

/// Layer-wise trainable parameter counts for the architecture:
/// `(first layer, output layer, total)` for `input_dim` features and
/// `hidden` LSTM units.
pub fn param_count(input_dim: usize, hidden: usize) -> (usize, usize, usize) {
    let first = 4 * hidden * (input_dim + hidden + 1);
    let second = hidden + 1;
    (first, second, first + second)
}

/// All trainable parameters in one flat vector.
///
/// Layout: for each gate in order f, i, o, c — input weights (`h x eta`,
/// row-major), recurrent weights (`h x h`), bias (`h`) — then the output
/// weights (`h`) and output bias.
#[derive(Debug, Clone, PartialEq)]
pub struct LstmParams<T: Scalar = f64> {
    dims: LstmDims,
    theta: Vec<T>,
}

impl<T: Scalar> LstmParams<T> {
    pub fn zeros(dims: LstmDims) -> Self {
        Self {
            theta: vec![T::zero(); dims.param_count()],
            dims,
        }
    }

    /// Seeded initialization: every weight uniform on `[-1/sqrt(h),
    /// +1/sqrt(h)]`, all biases zero.
    pub fn init(dims: LstmDims, seed: u64) -> Self {
        let mut params = Self::zeros(dims);
        let mut rng = stream_rng(seed, 0);
        let bound = T::one() / T::from_usize(dims.hidden_dim).unwrap().sqrt();
        let two = cast::<T>(2.0);
        let mut fill = |slice: &mut [T]| {
            for w in slice {
                *w = (T::unit_uniform(&mut rng) * two - T::one()) * bound;
            }
        };
        for gate in GATES {
            let (wx, wh) = (dims.w_x_offset(gate), dims.w_h_offset(gate));
            fill(&mut params.theta[wx..wx + dims.hidden_dim * dims.input_dim]);
            fill(&mut params.theta[wh..wh + dims.hidden_dim * dims.hidden_dim]);
        }
        let wo = dims.output_weights_offset();
        fill(&mut params.theta[wo..wo + dims.hidden_dim]);
        params
    }

    pub fn from_flat(dims: LstmDims, theta: Vec<T>) -> Result<Self> {
        if theta.len() != dims.param_count() {
            return Err(Error::DimensionMismatch {
                got: theta.len(),
                expected: dims.param_count(),
            });
        }
        Ok(Self { dims, theta })
    }

    pub fn dims(&self) -> LstmDims {
        self.dims
    }

    pub fn input_dim(&self) -> usize {
        self.dims.input_dim
    }

    pub fn hidden_dim(&self) -> usize {
        self.dims.hidden_dim
    }

    pub fn as_flat(&self) -> &[T] {
        &self.theta
    }

    pub fn as_flat_mut(&mut self) -> &mut [T] {
        &mut self.theta
    }

    pub fn w_x(&self, gate: Gate) -> &[T] {
        let at = self.dims.w_x_offset(gate);
        &self.theta[at..at + self.dims.hidden_dim * self.dims.input_dim]
    }

    pub fn w_h(&self, gate: Gate) -> &[T] {
        let at = self.dims.w_h_offset(gate);
        &self.theta[at..at + self.dims.hidden_dim * self.dims.hidden_dim]
    }

    pub fn bias(&self, gate: Gate) -> &[T] {
        let at = self.dims.bias_offset(gate);
        &self.theta[at..at + self.dims.hidden_dim]
    }

    pub fn output_weights(&self) -> &[T] {
        let at = self.dims.output_weights_offset();
        &self.theta[at..at + self.dims.hidden_dim]
    }

    pub fn output_bias(&self) -> T {
        self.theta[self.dims.output_bias_offset()]
    }

    /// One LSTM cell step.
    pub fn cell_forward(&self, x: &[T], prev: &CellState<T>) -> Result<(CellState<T>, GateTrace<T>)> {
        if x.len() != self.dims.input_dim {
            return Err(Error::DimensionMismatch {
                got: x.len(),
                expected: self.dims.input_dim,
            });
        }
        if prev.hidden.len() != self.dims.hidden_dim || prev.cell.len() != self.dims.hidden_dim {
            return Err(Error::DimensionMismatch {
                got: prev.hidden.len(),
                expected: self.dims.hidden_dim,
            });
        }
        let record = self.step(x, &prev.hidden, &prev.cell);
        let state = CellState {
            hidden: record.hidden.clone(),
            cell: record.cell.clone(),
        };
        let trace = GateTrace {
            forget: record.forget,
            input: record.input,
            output: record.output,
            candidate: record.candidate,
        };
        Ok((state, trace))
    }

    /// Unchecked single step used by the window paths; caches everything
    /// backpropagation needs.
    pub(crate) fn step(&self, x: &[T], h_prev: &[T], c_prev: &[T]) -> StepRecord<T> {
        let h = self.dims.hidden_dim;
        let mut pre = vec![T::zero(); 4 * h];
        for gate in GATES {
            let g = gate.index();
            let wx = self.w_x(gate);
            let wh = self.w_h(gate);
            let b = self.bias(gate);
            for r in 0..h {
                let mut acc = T::zero();
                let row = &wx[r * self.dims.input_dim..(r + 1) * self.dims.input_dim];
                for (w, &xv) in row.iter().zip(x) {
                    acc = acc + *w * xv;
                }
                let row = &wh[r * h..(r + 1) * h];
                for (w, &hv) in row.iter().zip(h_prev) {
                    acc = acc + *w * hv;
                }
                pre[g * h + r] = acc + b[r];
            }
        }
        let sigmoid = |v: T| T::one() / (T::one() + (-v).exp());
        let forget: Vec<T> = pre[..h].iter().map(|&v| sigmoid(v)).collect();
        let input: Vec<T> = pre[h..2 * h].iter().map(|&v| sigmoid(v)).collect();
        let output: Vec<T> = pre[2 * h..3 * h].iter().map(|&v| sigmoid(v)).collect();
        let candidate: Vec<T> = pre[3 * h..].iter().map(|&v| v.tanh()).collect();
        let cell: Vec<T> = (0..h)
            .map(|r| forget[r] * c_prev[r] + input[r] * candidate[r])
            .collect();
        let cell_tanh: Vec<T> = cell.iter().map(|&v| v.tanh()).collect();
        let hidden: Vec<T> = (0..h).map(|r| output[r] * cell_tanh[r]).collect();
        debug_assert!(hidden.iter().all(|&v| v.abs() < T::one()));
        StepRecord {
            forget,
            input,
            output,
            candidate,
            cell,
            cell_tanh,
            hidden,
        }
    }

    /// Runs the unrolled forward pass from the zero state, returning the
    /// per-step records.
    pub(crate) fn forward_window(&self, window: &[Vec<T>]) -> Result<Vec<StepRecord<T>>> {
        if window.is_empty() {
            return Err(Error::EmptyWindow);
        }
        let h = self.dims.hidden_dim;
        let zero_h = vec![T::zero(); h];
        let zero_c = vec![T::zero(); h];
        let mut records: Vec<StepRecord<T>> = Vec::with_capacity(window.len());
        for row in window {
            if row.len() != self.dims.input_dim {
                return Err(Error::DimensionMismatch {
                    got: row.len(),
                    expected: self.dims.input_dim,
                });
            }
            let record = match records.last() {
                Some(prev) => self.step(row, &prev.hidden, &prev.cell),
                None => self.step(row, &zero_h, &zero_c),
            };
            records.push(record);
        }
        Ok(records)
    }

    /// Many-to-one prediction: unrolls the cell over the window rows from
    /// the zero state and maps the final hidden state through the output
    /// neuron. The result is on the normalized scale of the training data.
    pub fn predict_window(&self, window: &[Vec<T>]) -> Result<T> {
        let records = self.forward_window(window)?;
        Ok(self.readout(records.last().unwrap()))
    }

    pub(crate) fn readout(&self, record: &StepRecord<T>) -> T {
        let mut acc = T::zero();
        for (w, &hv) in self.output_weights().iter().zip(&record.hidden) {
            acc = acc + *w * hv;
        }
        acc + self.output_bias()
    }
}

/// Mean squared prediction error over a block set.
pub fn loss<T: Scalar>(params: &LstmParams<T>, blocks: &[WindowBlock<T>]) -> Result<T> {
    if blocks.is_empty() {
        return Err(Error::EmptyBlocks);
    }
    let mut total = T::zero();
    for block in blocks {
        let err = params.predict_window(&block.inputs)? - block.target;
        total = total + err * err;
    }
    Ok(total / T::from_usize(blocks.len()).unwrap())
}

/// Hidden and cell state carried between steps.
#[derive(Debug, Clone, PartialEq)]
pub struct CellState<T: Scalar = f64> {
    pub hidden: Vec<T>,
    pub cell: Vec<T>,
}

impl<T: Scalar> CellState<T> {
    pub fn zeros(hidden_dim: usize) -> Self {
        Self {
            hidden: vec![T::zero(); hidden_dim],
            cell: vec![T::zero(); hidden_dim],
        }
    }
}

/// Gate activations of one step.
#[derive(Debug, Clone, PartialEq)]
pub struct GateTrace<T: Scalar = f64> {
    pub forget: Vec<T>,
    pub input: Vec<T>,
    pub output: Vec<T>,
    pub candidate: Vec<T>,
}

/// Full per-step cache for backpropagation through time.
#[derive(Debug, Clone)]
pub(crate) struct StepRecord<T: Scalar> {
    pub forget: Vec<T>,
    pub input: Vec<T>,
    pub output: Vec<T>,
    pub candidate: Vec<T>,
    pub cell: Vec<T>,
    pub cell_tanh: Vec<T>,
    pub hidden: Vec<T>,
}
