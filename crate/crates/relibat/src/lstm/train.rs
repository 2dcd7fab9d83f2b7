//! Mini-batch training loop.

use super::{adam_step, gradients, loss, AdamHyper, AdamState, LstmDims, LstmParams};
use crate::dataset::WindowBlock;
use crate::error::{Error, Result};
use crate::scalar::{cast, Scalar};

/// Training configuration. The seed controls weight initialization only;
/// batches are consumed in time order without shuffling, so a run is fully
/// determined by (data, config).
#[derive(Debug, Clone)]
pub struct TrainConfig<T: Scalar = f64> {
    pub hidden_dim: usize,
    pub epochs: usize,
    pub batch_size: usize,
    pub seed: u64,
    pub adam: AdamHyper<T>,
    /// Stop once the best training loss has not improved by more than
    /// `early_stop_min_delta` for this many consecutive epochs.
    pub early_stop_patience: usize,
    pub early_stop_min_delta: T,
}

impl<T: Scalar> Default for TrainConfig<T> {
    fn default() -> Self {
        Self {
            hidden_dim: 10,
            epochs: 500,
            batch_size: 32,
            seed: 0,
            adam: AdamHyper::default(),
            early_stop_patience: 20,
            early_stop_min_delta: cast(1e-10),
        }
    }
}

/// Loss record for one completed epoch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EpochRecord<T: Scalar = f64> {
    pub epoch: usize,
    pub train_loss: T,
    pub eval_loss: Option<T>,
}

/// Trained parameters plus the per-epoch loss history.
#[derive(Debug, Clone)]
pub struct TrainOutcome<T: Scalar = f64> {
    pub params: LstmParams<T>,
    pub history: Vec<EpochRecord<T>>,
    pub stopped_early: bool,
}

/// Trains a fresh model on `train_blocks`; `eval_blocks`, when given, are
/// scored after every epoch but never influence the updates.
pub fn train<T: Scalar>(
    train_blocks: &[WindowBlock<T>],
    eval_blocks: Option<&[WindowBlock<T>]>,
    config: &TrainConfig<T>,
) -> Result<TrainOutcome<T>> {
    if train_blocks.is_empty() {
        return Err(Error::EmptyBlocks);
    }
    if config.batch_size == 0 {
        return Err(Error::Format {
            what: "batch size",
            message: "must be at least 1".into(),
        });
    }
    let input_dim = train_blocks[0].inputs[0].len();
    let dims = LstmDims::new(input_dim, config.hidden_dim);
    let mut params = LstmParams::init(dims, config.seed);
    let mut adam = AdamState::new(dims.param_count(), config.adam);

    let mut history = Vec::with_capacity(config.epochs);
    let mut best = T::infinity();
    let mut stalled = 0usize;
    let mut stopped_early = false;

    for epoch in 1..=config.epochs {
        for batch in train_blocks.chunks(config.batch_size) {
            let grad = gradients(&params, batch)?;
            adam_step(&mut adam, &mut params, &grad);
        }
        let train_loss = loss(&params, train_blocks)?;
        if !train_loss.is_finite() {
            return Err(Error::NonFinite {
                place: format!("training loss at epoch {epoch}"),
            });
        }
        let eval_loss = match eval_blocks {
            Some(blocks) if !blocks.is_empty() => Some(loss(&params, blocks)?),
            _ => None,
        };
        history.push(EpochRecord {
            epoch,
            train_loss,
            eval_loss,
        });
        if best - train_loss > config.early_stop_min_delta {
            best = train_loss;
            stalled = 0;
        } else {
            stalled += 1;
            if stalled >= config.early_stop_patience {
                stopped_early = true;
                break;
            }
        }
    }

    Ok(TrainOutcome {
        params,
        history,
        stopped_early,
    })
}
