//! Adam optimizer over the flat parameter vector.

use super::LstmParams;
use crate::scalar::{cast, Scalar};

/// Adam hyperparameters. Defaults follow the standard recommendation:
/// learning rate 0.001, beta1 0.9, beta2 0.999, epsilon 1e-8.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdamHyper<T: Scalar = f64> {
    pub learning_rate: T,
    pub beta1: T,
    pub beta2: T,
    pub epsilon: T,
}

impl<T: Scalar> Default for AdamHyper<T> {
    fn default() -> Self {
        Self {
            learning_rate: cast(0.001),
            beta1: cast(0.9),
            beta2: cast(0.999),
            epsilon: cast(1e-8),
        }
    }
}

/// Optimizer state: first and second moment estimates, one entry per
/// parameter, plus the update counter.
#[derive(Debug, Clone)]
pub struct AdamState<T: Scalar = f64> {
    pub hyper: AdamHyper<T>,
    first_moment: Vec<T>,
    second_moment: Vec<T>,
    step: u64,
}

impl<T: Scalar> AdamState<T> {
    pub fn new(param_count: usize, hyper: AdamHyper<T>) -> Self {
        Self {
            hyper,
            first_moment: vec![T::zero(); param_count],
            second_moment: vec![T::zero(); param_count],
            step: 0,
        }
    }

    pub fn step_count(&self) -> u64 {
        self.step
    }
}

/// One Adam update: moment accumulation, bias correction, then the step
/// `theta -= lr * m_hat / sqrt(v_hat + eps)` (epsilon inside the root).
pub fn adam_step<T: Scalar>(state: &mut AdamState<T>, params: &mut LstmParams<T>, grad: &[T]) {
    assert_eq!(grad.len(), state.first_moment.len());
    assert_eq!(grad.len(), params.as_flat().len());
    state.step += 1;
    let AdamHyper {
        learning_rate,
        beta1,
        beta2,
        epsilon,
    } = state.hyper;
    let bias1 = T::one() - beta1.powi(state.step as i32);
    let bias2 = T::one() - beta2.powi(state.step as i32);
    let theta = params.as_flat_mut();
    for k in 0..grad.len() {
        let g = grad[k];
        let m = beta1 * state.first_moment[k] + (T::one() - beta1) * g;
        let v = beta2 * state.second_moment[k] + (T::one() - beta2) * g * g;
        state.first_moment[k] = m;
        state.second_moment[k] = v;
        debug_assert!(v >= T::zero());
        let m_hat = m / bias1;
        let v_hat = v / bias2;
        theta[k] = theta[k] - learning_rate * m_hat / (v_hat + epsilon).sqrt();
    }
}
