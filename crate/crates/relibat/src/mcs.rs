//! Crude Monte Carlo estimation of two-terminal reliability.
//!
//! Each trial samples every arc independently (working iff the uniform draw
//! falls below the arc's reliability) and checks source-sink connectivity by
//! layered search. Trials are partitioned into fixed-size blocks; block `b`
//! draws from its own random stream, so the estimate is bit-identical for
//! any worker count.

use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::network::{Network, StateVector};
use crate::plsa;
use crate::rng::stream_rng;
use crate::scalar::Scalar;

/// Trials per random-stream block. Fixed: changing it would change which
/// stream each trial draws from and therefore the results.
const TRIALS_PER_BLOCK: u64 = 8192;

/// Configuration for a crude Monte Carlo run.
#[derive(Debug, Clone)]
pub struct McsConfig {
    /// Number of simulated trials.
    pub n_sim: u64,
    /// Master seed for the trial streams.
    pub seed: u64,
    /// Standard-normal quantile used by the sample-size rule.
    pub z: f64,
    /// Target relative error; when set, callers size `n_sim` from it.
    pub epsilon: Option<f64>,
}

impl McsConfig {
    pub fn new(n_sim: u64, seed: u64) -> Self {
        Self {
            n_sim,
            seed,
            z: 1.96,
            epsilon: None,
        }
    }
}

/// Outcome of a Monte Carlo run: `estimate` is exactly `passes / trials`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McsResult<T: Scalar = f64> {
    pub estimate: T,
    pub passes: u64,
    pub trials: u64,
}

impl<T: Scalar> McsResult<T> {
    pub fn from_counts(passes: u64, trials: u64) -> Self {
        let estimate = T::from_u64(passes).unwrap() / T::from_u64(trials).unwrap();
        Self {
            estimate,
            passes,
            trials,
        }
    }
}

/// Draws one arc-state vector: arc `i` works iff a fresh uniform draw on
/// `[0, 1)` is strictly below `probs[i]`. Consumes exactly one draw per arc,
/// in arc order.
pub fn sample_state<T: Scalar, R: Rng + ?Sized>(probs: &[T], rng: &mut R) -> StateVector {
    let mut states = vec![false; probs.len()];
    sample_state_into(probs, rng, &mut states);
    StateVector::new(states)
}

/// Buffer-reusing variant of [`sample_state`].
#[inline]
pub fn sample_state_into<T: Scalar, R: Rng + ?Sized>(probs: &[T], rng: &mut R, out: &mut [bool]) {
    debug_assert_eq!(probs.len(), out.len());
    for (slot, &p) in out.iter_mut().zip(probs) {
        *slot = T::unit_uniform(rng) < p;
    }
}

/// Crude Monte Carlo estimate of two-terminal reliability.
///
/// Identical `(network, probs, config)` including the seed yields
/// bit-identical results, independent of how many workers run the blocks.
pub fn mcs_estimate<T: Scalar>(
    network: &Network,
    probs: &[T],
    config: &McsConfig,
) -> Result<McsResult<T>> {
    if config.n_sim == 0 {
        return Err(Error::ZeroBudget);
    }
    if probs.len() != network.arc_count() {
        return Err(Error::LengthMismatch {
            got: probs.len(),
            expected: network.arc_count(),
        });
    }
    let blocks = config.n_sim.div_ceil(TRIALS_PER_BLOCK);
    let passes: u64 = (0..blocks)
        .into_par_iter()
        .map(|block| {
            let trials =
                TRIALS_PER_BLOCK.min(config.n_sim - block * TRIALS_PER_BLOCK);
            let mut rng = stream_rng(config.seed, block);
            let mut states = vec![false; network.arc_count()];
            let mut workspace = plsa::Workspace::new(network);
            let mut passes = 0u64;
            for _ in 0..trials {
                sample_state_into(probs, &mut rng, &mut states);
                if workspace.is_connected(network, &states) {
                    passes += 1;
                }
            }
            passes
        })
        .sum();
    Ok(McsResult::from_counts(passes, config.n_sim))
}

/// Minimal trial count for relative error `epsilon` at quantile `z`:
/// the ceiling of `z^2 / (4 epsilon^2)`.
pub fn required_simulations(epsilon: f64, z: f64) -> Result<u64> {
    if epsilon <= 0.0 {
        return Err(Error::NonPositive {
            name: "epsilon",
            value: epsilon,
        });
    }
    if z <= 0.0 {
        return Err(Error::NonPositive { name: "z", value: z });
    }
    Ok((z * z / (4.0 * epsilon * epsilon)).ceil() as u64)
}

/// Mean and sample standard deviation (n-1 denominator) of per-run values;
/// a single run reports zero deviation.
pub fn mean_and_std<T: Scalar>(values: &[T]) -> (T, T) {
    let n = T::from_usize(values.len()).unwrap();
    let mean = values.iter().copied().fold(T::zero(), |a, b| a + b) / n;
    if values.len() < 2 {
        return (mean, T::zero());
    }
    let ss = values
        .iter()
        .map(|&v| (v - mean) * (v - mean))
        .fold(T::zero(), |a, b| a + b);
    (mean, (ss / (n - T::one())).sqrt())
}
