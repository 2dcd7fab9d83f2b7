//! Arc-reliability degradation laws and time-distribution construction.
//!
//! Three laws cover the usual integrated rate shapes: a linear decrement per
//! step, exponential decay, and second-order decay where the derivative is
//! the negative square of the current value. All outputs are clamped to
//! [0, 1]; each law is monotone non-increasing in `t`.



use crate::error::{Error, Result};
use crate::network::{Network, TimeDistribution};
use crate::rng::{mix_seed, stream_rng};
use crate::scalar::{cast, Scalar};

/// Default linear decrement per step, `1 / (2 * 256)`.
pub const DEFAULT_LINEAR_STEP: f64 = 1.0 / 512.0;
/// Default exponential decay rate, `1 / 100` per step.
pub const DEFAULT_EXPONENTIAL_RATE: f64 = 0.01;
/// Shortest horizon that still yields one training window.
pub const MIN_HORIZON: usize = 7;

/// Degradation law for a single arc.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DecayLaw<T: Scalar = f64> {
    /// `p(t) = max(p0 - t * step, 0)`.
    Linear { step: T },
    /// `p(t) = p0 * exp(-rate * t)`.
    Exponential { rate: T },
    /// `p(t) = p0 / (1 + t * p0)`.
    SecondOrder,
}

impl<T: Scalar> DecayLaw<T> {
    pub fn linear_default() -> Self {
        DecayLaw::Linear {
            step: cast(DEFAULT_LINEAR_STEP),
        }
    }

    pub fn exponential_default() -> Self {
        DecayLaw::Exponential {
            rate: cast(DEFAULT_EXPONENTIAL_RATE),
        }
    }

    /// Reliability of an arc with initial reliability `p0` after `t` steps.
    pub fn apply(&self, p0: T, t: usize) -> T {
        let value = match *self {
            DecayLaw::Linear { step } => linear(p0, t, step),
            DecayLaw::Exponential { rate } => exponential(p0, t, rate),
            DecayLaw::SecondOrder => second_order(p0, t),
        };
        value.max(T::zero()).min(T::one())
    }

    pub fn kind(&self) -> &'static str {
        match self {
            DecayLaw::Linear { .. } => "linear",
            DecayLaw::Exponential { .. } => "exp",
            DecayLaw::SecondOrder => "second",
        }
    }
}

/// Linear law: `max(p0 - t * step, 0)`.
pub fn linear<T: Scalar>(p0: T, t: usize, step: T) -> T {
    (p0 - T::from_usize(t).unwrap() * step).max(T::zero())
}

/// Exponential law: `p0 * exp(-rate * t)`.
pub fn exponential<T: Scalar>(p0: T, t: usize, rate: T) -> T {
    p0 * (-rate * T::from_usize(t).unwrap()).exp()
}

/// Second-order law: `p0 / (1 + t * p0)`.
pub fn second_order<T: Scalar>(p0: T, t: usize) -> T {
    p0 / (T::one() + T::from_usize(t).unwrap() * p0)
}

/// A law together with the number of time steps to generate.
#[derive(Debug, Clone)]
pub struct DecaySpec<T: Scalar = f64> {
    pub law: DecayLaw<T>,
    /// Number of time steps `N_term` (row 0 is generated in addition).
    pub horizon: usize,
}

/// Where the initial arc reliabilities come from.
#[derive(Debug, Clone)]
pub enum InitialReliability<T: Scalar = f64> {
    /// Explicit per-arc values, e.g. from the network file.
    Given(Vec<T>),
    /// Independent uniform draws on `[low, high)` from a derived stream.
    Sampled { low: T, high: T, seed: u64 },
}

impl<T: Scalar> InitialReliability<T> {
    /// The conventional sampling range for fresh arcs.
    pub fn sampled_default(seed: u64) -> Self {
        InitialReliability::Sampled {
            low: cast(0.9),
            high: cast(1.0),
            seed,
        }
    }
}

/// Label reserved for the initial-reliability stream in the seed-derivation
/// tree; labeling uses the time-step labels `1..=horizon`.
const P0_SEED_LABEL: u64 = u64::MAX;

/// Builds the full reliability table: row 0 holds the initial values, row
/// `t` the law applied at step `t`, for `t = 1..=horizon`.
pub fn build_distribution<T: Scalar>(
    network: &Network,
    spec: &DecaySpec<T>,
    initial: &InitialReliability<T>,
) -> Result<TimeDistribution<T>> {
    if spec.horizon < MIN_HORIZON {
        return Err(Error::HorizonTooShort {
            horizon: spec.horizon,
            min: MIN_HORIZON,
        });
    }
    let m = network.arc_count();
    let p0: Vec<T> = match initial {
        InitialReliability::Given(values) => {
            if values.len() != m {
                return Err(Error::LengthMismatch {
                    got: values.len(),
                    expected: m,
                });
            }
            for (i, &p) in values.iter().enumerate() {
                if !(p >= T::zero() && p <= T::one()) {
                    return Err(Error::ProbabilityRange {
                        index: i,
                        value: p.to_f64().unwrap_or(f64::NAN),
                    });
                }
            }
            values.clone()
        }
        InitialReliability::Sampled { low, high, seed } => {
            let mut rng = stream_rng(mix_seed(*seed, P0_SEED_LABEL), 0);
            (0..m)
                .map(|_| *low + (*high - *low) * T::unit_uniform(&mut rng))
                .collect()
        }
    };
    let mut rows = Vec::with_capacity(spec.horizon + 1);
    rows.push(p0.clone());
    for t in 1..=spec.horizon {
        rows.push(p0.iter().map(|&p| spec.law.apply(p, t)).collect());
    }
    TimeDistribution::new(spec.horizon, rows)
}
