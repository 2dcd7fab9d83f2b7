//! Stratified reliability estimation over supervector strata, plus the
//! exact enumeration it degenerates to.
//!
//! Enumeration produces every assignment of the first `delta` arc
//! coordinates. A stratum whose all-zero completion is already connected is
//! decided (it contributes its whole probability); one whose all-one
//! completion is disconnected is pruned (zero contribution) — both by
//! monotonicity of connectivity. The simulation budget is split across the
//! surviving strata in proportion to their probability, each stratum
//! samples only the free coordinates from its own random stream, and the
//! contributions sum in enumeration order. At `delta = m` every stratum is
//! decided and the result equals exact enumeration bit for bit.

use rayon::prelude::*;

use crate::bat::BatCursor;
use crate::error::{Error, Result};
use crate::mcs::mean_and_std;
use crate::network::{prefix_probability, Network, StateVector, Supervector};
use crate::plsa;
use crate::rng::{mix_seed, stream_rng};
use crate::scalar::Scalar;

/// Enumeration guard for [`exact_reliability`]: beyond this the vector count
/// no longer fits a machine word.
pub const MAX_EXACT_ARCS: usize = 62;

/// Configuration shared by single- and multi-run stratified estimation.
#[derive(Debug, Clone)]
pub struct BatMcsConfig {
    /// Supervector width (number of leading coordinates enumerated).
    pub delta: usize,
    /// Total simulation budget per run.
    pub n_sim: u64,
    /// Number of independent runs for multi-run averaging.
    pub n_run: u64,
    /// Master seed.
    pub seed: u64,
}

/// How a stratum was resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StratumStatus {
    DecidedConnected,
    DecidedDisconnected,
    Simulated,
}

impl StratumStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            StratumStatus::DecidedConnected => "decided-connected",
            StratumStatus::DecidedDisconnected => "decided-disconnected",
            StratumStatus::Simulated => "simulated",
        }
    }
}

/// Per-stratum account of one stratified run.
#[derive(Debug, Clone)]
pub struct StratumReport<T: Scalar = f64> {
    pub supervector: Supervector,
    pub probability: T,
    pub status: StratumStatus,
    /// Simulation allocation; zero for decided strata.
    pub allocation: u64,
    /// Connected outcomes among the allocated trials; zero for decided strata.
    pub passes: u64,
    /// Mass added to the estimate: `Pr(S)` when decided connected,
    /// `Pr(S) * passes / allocation` when simulated, zero when pruned.
    pub contribution: T,
}

/// Result of one stratified run.
#[derive(Debug, Clone)]
pub struct BatMcsRun<T: Scalar = f64> {
    pub estimate: T,
    pub strata: Vec<StratumReport<T>>,
}

/// Completion of a supervector with failed trailing arcs.
pub fn lower_extension(prefix: &Supervector, m: usize) -> Result<StateVector> {
    extend(prefix, m, false)
}

/// Completion of a supervector with working trailing arcs.
pub fn upper_extension(prefix: &Supervector, m: usize) -> Result<StateVector> {
    extend(prefix, m, true)
}

fn extend(prefix: &Supervector, m: usize, fill: bool) -> Result<StateVector> {
    if prefix.delta() > m {
        return Err(Error::DeltaTooLarge {
            delta: prefix.delta(),
            m,
        });
    }
    let mut states = Vec::with_capacity(m);
    states.extend_from_slice(prefix.as_slice());
    states.resize(m, fill);
    Ok(StateVector::new(states))
}

/// Splits `n_sim` across surviving strata proportionally to probability:
/// `floor(n_sim * p / total)`, raised to at least one trial per stratum so
/// every surviving stratum yields a defined pass ratio.
pub fn allocate_simulations<T: Scalar>(probabilities: &[T], n_sim: u64) -> Vec<u64> {
    let total: T = probabilities.iter().copied().fold(T::zero(), |a, b| a + b);
    let budget = T::from_u64(n_sim).unwrap();
    probabilities
        .iter()
        .map(|&p| {
            if total <= T::zero() {
                return 1;
            }
            let share = (budget * p / total).floor().to_u64().unwrap_or(0);
            share.max(1)
        })
        .collect()
}

/// One stratified estimation run.
///
/// Deterministic given the seed: stratum `k` (its enumeration index) draws
/// from stream `k`, so pruning one stratum never shifts another stratum's
/// draws, and strata may be simulated by any number of workers.
pub fn bat_mcs_estimate<T: Scalar>(
    network: &Network,
    probs: &[T],
    config: &BatMcsConfig,
) -> Result<BatMcsRun<T>> {
    let m = network.arc_count();
    if probs.len() != m {
        return Err(Error::LengthMismatch {
            got: probs.len(),
            expected: m,
        });
    }
    if config.delta == 0 || config.delta > m {
        return Err(Error::DeltaTooLarge {
            delta: config.delta,
            m,
        });
    }
    if config.n_sim == 0 {
        return Err(Error::ZeroBudget);
    }

    // Enumerate strata and decide what the extensions already settle.
    let mut strata: Vec<StratumReport<T>> = Vec::with_capacity(1usize << config.delta);
    let mut workspace = plsa::Workspace::new(network);
    let mut cursor = BatCursor::new(config.delta)?;
    let mut completion = vec![false; m];
    loop {
        let prefix = cursor.current();
        let probability = prefix_probability(prefix, probs);
        completion[..config.delta].copy_from_slice(prefix);

        completion[config.delta..].fill(false);
        let status = if workspace.is_connected(network, &completion) {
            StratumStatus::DecidedConnected
        } else {
            completion[config.delta..].fill(true);
            if workspace.is_connected(network, &completion) {
                StratumStatus::Simulated
            } else {
                StratumStatus::DecidedDisconnected
            }
        };
        let contribution = match status {
            StratumStatus::DecidedConnected => probability,
            _ => T::zero(),
        };
        strata.push(StratumReport {
            supervector: Supervector::new(prefix.to_vec()),
            probability,
            status,
            allocation: 0,
            passes: 0,
            contribution,
        });
        if cursor.advance().is_none() {
            break;
        }
    }

    // Budget split over the surviving strata only.
    let surviving: Vec<usize> = strata
        .iter()
        .enumerate()
        .filter(|(_, s)| s.status == StratumStatus::Simulated)
        .map(|(k, _)| k)
        .collect();
    let survivor_probs: Vec<T> = surviving.iter().map(|&k| strata[k].probability).collect();
    let allocations = allocate_simulations(&survivor_probs, config.n_sim);

    // Simulate surviving strata independently; only trailing coordinates draw.
    let outcomes: Vec<(usize, u64, u64)> = surviving
        .par_iter()
        .zip(allocations.par_iter())
        .map(|(&k, &allocation)| {
            let prefix = strata[k].supervector.as_slice();
            let mut rng = stream_rng(config.seed, k as u64);
            let mut workspace = plsa::Workspace::new(network);
            let mut states = vec![false; m];
            states[..config.delta].copy_from_slice(prefix);
            let mut passes = 0u64;
            for _ in 0..allocation {
                for (slot, &p) in states[config.delta..].iter_mut().zip(&probs[config.delta..]) {
                    *slot = T::unit_uniform(&mut rng) < p;
                }
                if workspace.is_connected(network, &states) {
                    passes += 1;
                }
            }
            (k, allocation, passes)
        })
        .collect();
    for (k, allocation, passes) in outcomes {
        let report = &mut strata[k];
        report.allocation = allocation;
        report.passes = passes;
        report.contribution = report.probability * T::from_u64(passes).unwrap()
            / T::from_u64(allocation).unwrap();
    }

    // Decided mass first, then simulated mass, both in enumeration order.
    let mut estimate = T::zero();
    for report in &strata {
        if report.status == StratumStatus::DecidedConnected {
            estimate = estimate + report.contribution;
        }
    }
    for report in &strata {
        if report.status == StratumStatus::Simulated {
            estimate = estimate + report.contribution;
        }
    }
    Ok(BatMcsRun { estimate, strata })
}

/// Exact two-terminal reliability by exhaustive enumeration: the sum of
/// state-vector probabilities over all connected vectors, in enumeration
/// order.
pub fn exact_reliability<T: Scalar>(network: &Network, probs: &[T]) -> Result<T> {
    let m = network.arc_count();
    if probs.len() != m {
        return Err(Error::LengthMismatch {
            got: probs.len(),
            expected: m,
        });
    }
    if m > MAX_EXACT_ARCS {
        return Err(Error::TooManyArcs {
            m,
            max: MAX_EXACT_ARCS,
        });
    }
    let mut workspace = plsa::Workspace::new(network);
    let mut cursor = BatCursor::new(m)?;
    let mut total = T::zero();
    loop {
        let states = cursor.current();
        if workspace.is_connected(network, states) {
            total = total + prefix_probability(states, probs);
        }
        if cursor.advance().is_none() {
            break;
        }
    }
    Ok(total)
}

/// Multi-run aggregate: mean, sample standard deviation, and the per-run
/// estimates themselves.
#[derive(Debug, Clone)]
pub struct MultiRunResult<T: Scalar = f64> {
    pub mean: T,
    pub std_dev: T,
    pub runs: Vec<T>,
}

/// Averages `n_run` independent stratified runs; run `i` re-seeds from
/// `(seed, i)`.
pub fn multi_run_average<T: Scalar>(
    network: &Network,
    probs: &[T],
    config: &BatMcsConfig,
) -> Result<MultiRunResult<T>> {
    let n_run = config.n_run.max(1);
    let mut runs = Vec::with_capacity(n_run as usize);
    for run in 0..n_run {
        let run_config = BatMcsConfig {
            seed: mix_seed(config.seed, run),
            ..config.clone()
        };
        runs.push(bat_mcs_estimate(network, probs, &run_config)?.estimate);
    }
    let (mean, std_dev) = mean_and_std(&runs);
    Ok(MultiRunResult {
        mean,
        std_dev,
        runs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::{parse_network, vector_probability};

    const TABLE1_T0: [f64; 5] = [0.9, 0.8, 0.7, 0.6, 0.5];

    fn bridge() -> Network {
        parse_network("4 5\n1 2\n1 3\n2 3\n2 4\n3 4\n")
            .unwrap()
            .network
    }

    /// Truth-table oracle: direct integer counting + BFS, no shared code
    /// with the enumeration path.
    fn brute_force_reliability(network: &Network, probs: &[f64]) -> f64 {
        let m = network.arc_count();
        let mut total = 0.0;
        for code in 0u64..(1 << m) {
            let states: Vec<bool> = (0..m).map(|i| code >> i & 1 == 1).collect();
            let mut seen = vec![false; network.node_count() + 1];
            let mut stack = vec![network.source()];
            seen[network.source()] = true;
            while let Some(node) = stack.pop() {
                for &(neighbor, arc) in network.neighbors(node) {
                    if states[arc] && !seen[neighbor] {
                        seen[neighbor] = true;
                        stack.push(neighbor);
                    }
                }
            }
            if seen[network.sink()] {
                let mut p = 1.0;
                for (i, &up) in states.iter().enumerate() {
                    p *= if up { probs[i] } else { 1.0 - probs[i] };
                }
                total += p;
            }
        }
        total
    }

    #[test]
    fn extensions_fill_trailing_coordinates() {
        let s = Supervector::new(vec![true, true]);
        assert_eq!(
            lower_extension(&s, 5).unwrap().as_slice(),
            &[true, true, false, false, false]
        );
        let s = Supervector::new(vec![false, false]);
        assert_eq!(
            lower_extension(&s, 5).unwrap().as_slice(),
            &[false; 5]
        );
        assert_eq!(
            upper_extension(&s, 5).unwrap().as_slice(),
            &[false, false, true, true, true]
        );
        let s = Supervector::new(vec![true, false]);
        assert_eq!(
            upper_extension(&s, 5).unwrap().as_slice(),
            &[true, false, true, true, true]
        );
        // delta = m leaves the vector unchanged.
        let s = Supervector::new(vec![true, false, true]);
        assert_eq!(lower_extension(&s, 3).unwrap().as_slice(), s.as_slice());
        assert!(lower_extension(&s, 2).is_err());
    }

    #[test]
    fn upper_extension_of_all_failed_prefix_isolates_source() {
        let net = bridge();
        let s = Supervector::new(vec![false, false]);
        let upper = upper_extension(&s, 5).unwrap();
        assert!(!plsa::is_connected(&net, upper.as_slice()).unwrap());
    }

    #[test]
    fn allocation_replays_worked_example() {
        // 512 trials over probabilities {0.18, 0.08, 0.72}.
        let allocations = allocate_simulations(&[0.18f64, 0.08, 0.72], 512);
        assert_eq!(allocations, vec![94, 41, 376]);
    }

    #[test]
    fn allocation_edge_cases() {
        assert_eq!(allocate_simulations(&[0.5f64], 100), vec![100]);
        assert_eq!(allocate_simulations(&[0.5f64, 0.5], 10), vec![5, 5]);
        assert_eq!(allocate_simulations::<f64>(&[], 100), Vec::<u64>::new());
        // Zero-probability strata still get one trial each.
        assert_eq!(allocate_simulations(&[0.0f64, 0.0], 8), vec![1, 1]);
    }

    #[test]
    fn stratified_run_replays_worked_tables() {
        let net = bridge();
        let config = BatMcsConfig {
            delta: 2,
            n_sim: 512,
            n_run: 1,
            seed: 11,
        };
        let run = bat_mcs_estimate(&net, &TABLE1_T0, &config).unwrap();
        assert_eq!(run.strata.len(), 4);

        let s1 = &run.strata[0];
        assert_eq!(s1.supervector.as_slice(), &[false, false]);
        assert_eq!(s1.status, StratumStatus::DecidedDisconnected);
        assert_eq!(s1.contribution, 0.0);

        let s2 = &run.strata[1];
        assert_eq!(s2.supervector.as_slice(), &[true, false]);
        assert!((s2.probability - 0.18).abs() < 1e-15);
        assert_eq!(s2.allocation, 94);

        let s3 = &run.strata[2];
        assert!((s3.probability - 0.08).abs() < 1e-15);
        assert_eq!(s3.allocation, 41);

        let s4 = &run.strata[3];
        assert!((s4.probability - 0.72).abs() < 1e-15);
        assert_eq!(s4.allocation, 376);

        let surviving_mass: f64 = run
            .strata
            .iter()
            .filter(|s| s.status == StratumStatus::Simulated)
            .map(|s| s.probability)
            .sum();
        assert!((surviving_mass - 0.98).abs() < 1e-12);

        // Total stratum mass is a partition of the probability space.
        let total: f64 = run.strata.iter().map(|s| s.probability).sum();
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn injected_pass_counts_reproduce_worked_sum() {
        // Pr = {0.18, 0.08, 0.72}, allocations {94, 41, 376}, passes
        // {55, 39, 237}.
        let sum = 0.18 * 55.0 / 94.0 + 0.08 * 39.0 / 41.0 + 0.72 * 237.0 / 376.0;
        assert!((sum - 0.635246).abs() < 1e-6);
    }

    #[test]
    fn certain_arcs_give_certain_estimate() {
        let net = bridge();
        let config = BatMcsConfig {
            delta: 2,
            n_sim: 64,
            n_run: 1,
            seed: 3,
        };
        let run = bat_mcs_estimate(&net, &[1.0; 5], &config).unwrap();
        assert_eq!(run.estimate, 1.0);
    }

    #[test]
    fn delta_m_matches_exact_enumeration_bit_for_bit() {
        let net = bridge();
        let exact = exact_reliability(&net, &TABLE1_T0).unwrap();
        let config = BatMcsConfig {
            delta: 5,
            n_sim: 16,
            n_run: 1,
            seed: 1,
        };
        let run = bat_mcs_estimate(&net, &TABLE1_T0, &config).unwrap();
        assert_eq!(run.estimate, exact);
        assert!(run
            .strata
            .iter()
            .all(|s| s.status != StratumStatus::Simulated));
        assert!((exact - brute_force_reliability(&net, &TABLE1_T0)).abs() < 1e-12);
    }

    #[test]
    fn exact_reliability_small_cases() {
        // Single arc: reliability is the arc probability.
        let net = parse_network("2 1\n1 2\n").unwrap().network;
        let r = exact_reliability(&net, &[0.7]).unwrap();
        assert!((r - 0.7).abs() < 1e-15);
        // Two arcs in series: product rule.
        let net = parse_network("3 2\n1 2\n2 3\n").unwrap().network;
        let r = exact_reliability(&net, &[0.9, 0.8]).unwrap();
        assert!((r - 0.72).abs() < 1e-15);
    }

    #[test]
    fn exact_reliability_matches_minimal_path_inclusion_exclusion() {
        // Bridge minimal paths: {a1 a4}, {a2 a5}, {a1 a3 a5}, {a2 a3 a4}.
        let paths: [&[usize]; 4] = [&[0, 3], &[1, 4], &[0, 2, 4], &[1, 2, 3]];
        let p = TABLE1_T0;
        let mut total = 0.0;
        for subset in 1u32..(1 << paths.len()) {
            let mut union: u32 = 0;
            for (i, path) in paths.iter().enumerate() {
                if subset >> i & 1 == 1 {
                    for &arc in *path {
                        union |= 1 << arc;
                    }
                }
            }
            let mut term = 1.0;
            for (arc, &prob) in p.iter().enumerate() {
                if union >> arc & 1 == 1 {
                    term *= prob;
                }
            }
            if subset.count_ones() % 2 == 1 {
                total += term;
            } else {
                total -= term;
            }
        }
        let net = bridge();
        let r = exact_reliability(&net, &p).unwrap();
        assert!((r - total).abs() < 1e-12);
        assert!((r - 0.766).abs() < 1e-12);
    }

    #[test]
    fn pruning_is_sound() {
        let net = bridge();
        let config = BatMcsConfig {
            delta: 3,
            n_sim: 256,
            n_run: 1,
            seed: 8,
        };
        let run = bat_mcs_estimate(&net, &TABLE1_T0, &config).unwrap();
        for report in &run.strata {
            let lower = lower_extension(&report.supervector, 5).unwrap();
            let upper = upper_extension(&report.supervector, 5).unwrap();
            match report.status {
                StratumStatus::DecidedConnected => {
                    assert!(plsa::is_connected(&net, lower.as_slice()).unwrap());
                }
                StratumStatus::DecidedDisconnected => {
                    assert!(!plsa::is_connected(&net, upper.as_slice()).unwrap());
                }
                StratumStatus::Simulated => {
                    assert!(!plsa::is_connected(&net, lower.as_slice()).unwrap());
                    assert!(plsa::is_connected(&net, upper.as_slice()).unwrap());
                    assert!(report.passes <= report.allocation);
                }
            }
        }
    }

    #[test]
    fn estimator_is_deterministic_given_seed() {
        let net = bridge();
        let config = BatMcsConfig {
            delta: 2,
            n_sim: 4096,
            n_run: 1,
            seed: 1234,
        };
        let a = bat_mcs_estimate(&net, &TABLE1_T0, &config).unwrap();
        let b = bat_mcs_estimate(&net, &TABLE1_T0, &config).unwrap();
        assert_eq!(a.estimate, b.estimate);
        for (x, y) in a.strata.iter().zip(&b.strata) {
            assert_eq!(x.passes, y.passes);
        }
    }

    #[test]
    fn conditional_pass_ratio_is_unbiased_per_stratum() {
        // Exact conditional reliability of each surviving stratum by
        // enumerating the 2^3 completions; simulated ratios should agree in
        // the mean across seeds.
        let net = bridge();
        let mut conditional = vec![0.0f64; 4];
        for (k, prefix) in [[false, false], [true, false], [false, true], [true, true]]
            .iter()
            .enumerate()
        {
            let mut c = 0.0;
            for code in 0u32..8 {
                let mut states = vec![prefix[0], prefix[1], false, false, false];
                for i in 0..3 {
                    states[2 + i] = code >> i & 1 == 1;
                }
                if plsa::is_connected(&net, &states).unwrap() {
                    let mut p = 1.0;
                    for i in 0..3 {
                        p *= if states[2 + i] {
                            TABLE1_T0[2 + i]
                        } else {
                            1.0 - TABLE1_T0[2 + i]
                        };
                    }
                    c += p;
                }
            }
            conditional[k] = c;
        }
        assert!((conditional[1] - 0.74).abs() < 1e-12);
        assert!((conditional[2] - 0.71).abs() < 1e-12);
        assert!((conditional[3] - 0.80).abs() < 1e-12);

        let mut ratios = vec![Vec::new(); 4];
        for seed in 0..200u64 {
            let config = BatMcsConfig {
                delta: 2,
                n_sim: 512,
                n_run: 1,
                seed,
            };
            let run = bat_mcs_estimate(&net, &TABLE1_T0, &config).unwrap();
            for (k, s) in run.strata.iter().enumerate() {
                if s.status == StratumStatus::Simulated {
                    ratios[k].push(s.passes as f64 / s.allocation as f64);
                }
            }
        }
        for k in 1..4 {
            let (mean, sd) = mean_and_std(&ratios[k]);
            let sem = sd / (ratios[k].len() as f64).sqrt();
            assert!(
                (mean - conditional[k]).abs() < 4.0 * sem.max(1e-4),
                "stratum {k}: mean {mean} vs exact {}",
                conditional[k]
            );
        }
    }

    #[test]
    fn multi_run_basics() {
        let net = bridge();
        let config = BatMcsConfig {
            delta: 2,
            n_sim: 256,
            n_run: 1,
            seed: 5,
        };
        let result = multi_run_average(&net, &TABLE1_T0, &config).unwrap();
        assert_eq!(result.runs.len(), 1);
        assert_eq!(result.mean, result.runs[0]);
        assert_eq!(result.std_dev, 0.0);

        let config = BatMcsConfig {
            n_run: 4,
            ..config
        };
        let result = multi_run_average(&net, &[1.0; 5], &config).unwrap();
        assert_eq!(result.mean, 1.0);
        assert_eq!(result.std_dev, 0.0);
    }

    #[test]
    fn multi_run_mean_tracks_exact_value() {
        let net = bridge();
        let config = BatMcsConfig {
            delta: 2,
            n_sim: 1 << 16,
            n_run: 30,
            seed: 21,
        };
        let result = multi_run_average(&net, &TABLE1_T0, &config).unwrap();
        let exact = exact_reliability(&net, &TABLE1_T0).unwrap();
        let sem = result.std_dev / (result.runs.len() as f64).sqrt();
        assert!((result.mean - exact).abs() < 3.0 * sem.max(1e-5));
    }

    #[test]
    fn invalid_configs_error() {
        let net = bridge();
        let bad_delta = BatMcsConfig {
            delta: 6,
            n_sim: 16,
            n_run: 1,
            seed: 0,
        };
        assert!(bat_mcs_estimate(&net, &TABLE1_T0, &bad_delta).is_err());
        let zero_budget = BatMcsConfig {
            delta: 2,
            n_sim: 0,
            n_run: 1,
            seed: 0,
        };
        assert!(bat_mcs_estimate(&net, &TABLE1_T0, &zero_budget).is_err());
    }

    #[test]
    fn random_networks_delta_m_equals_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(1000);
        for _ in 0..25 {
            let n = rng.gen_range(2..=6);
            let mut arcs = Vec::new();
            for v in 2..=n {
                arcs.push((rng.gen_range(1..v), v));
            }
            for _ in 0..3 {
                let u = rng.gen_range(1..=n);
                let v = rng.gen_range(1..=n);
                if u != v
                    && !arcs
                        .iter()
                        .any(|&(a, b)| (a.min(b), a.max(b)) == (u.min(v), u.max(v)))
                {
                    arcs.push((u, v));
                }
            }
            let net = Network::new(n, arcs).unwrap();
            let probs: Vec<f64> = (0..net.arc_count()).map(|_| rng.gen()).collect();
            let exact = exact_reliability(&net, &probs).unwrap();
            let config = BatMcsConfig {
                delta: net.arc_count(),
                n_sim: 4,
                n_run: 1,
                seed: 0,
            };
            let run = bat_mcs_estimate(&net, &probs, &config).unwrap();
            assert_eq!(run.estimate, exact);
            assert!((exact - brute_force_reliability(&net, &probs)).abs() < 1e-12);
            // Exact reliability is monotone in the arc probabilities.
            let raised: Vec<f64> = probs.iter().map(|p| (p + 0.1).min(1.0)).collect();
            assert!(exact_reliability(&net, &raised).unwrap() >= exact - 1e-15);
        }
    }

    #[test]
    fn vector_probability_consistency_at_delta_m() {
        // The stratified path computes stratum probabilities through the
        // same product as full vectors.
        let probs = TABLE1_T0;
        let states = [true, false, true, true, false];
        let sv = Supervector::new(states.to_vec());
        let via_vector = vector_probability(&states, &probs).unwrap();
        let via_prefix = prefix_probability(sv.as_slice(), &probs);
        assert_eq!(via_vector, via_prefix);
    }
}
