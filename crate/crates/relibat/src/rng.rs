//! Deterministic random-stream derivation.
//!
//! All randomness flows from ChaCha12, a counter-based generator with an
//! explicit stream parameter, so any unit of work can be handed its own
//! independent stream addressed by `(seed, stream index)`. Structural seeds
//! (per run, per time step) are derived with a SplitMix64 mix of the parent
//! seed and a label, giving a reproducible derivation tree:
//!
//! * plain MCS: trial block `b` uses `stream_rng(seed, b)`
//! * BAT-MCS: stratum at enumeration index `k` uses `stream_rng(seed, k)`
//! * multi-run averaging: run `i` uses parent seed `mix_seed(seed, i)`
//! * dataset labeling: time step `t` uses parent seed `mix_seed(seed, t)`
//!
//! Results therefore never depend on worker count or completion order.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// Derives a child seed from a parent seed and an integer label
/// (SplitMix64 finalizer over the combined value).
pub fn mix_seed(seed: u64, label: u64) -> u64 {
    let mut z = seed ^ label.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// ChaCha12 generator positioned on stream `stream` of `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha12Rng {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
