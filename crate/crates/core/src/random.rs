//! Deterministic random-number contract.
//!
//! Every stochastic operation in the crate draws from a ChaCha8 stream seeded
//! with a caller-supplied 64-bit seed, so identical (seed, parameters) give
//! bit-identical outputs. Draw order is part of each operation's contract and
//! documented where it matters (see the synth module).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{CoreError, Result};
use crate::types::RandomField;

/// RNG used everywhere; a fixed algorithm keeps seeded runs reproducible
/// across platforms and dependency updates.
pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One uniform draw on `[lo, hi]`; `lo == hi` returns `lo` exactly.
pub fn draw_uniform(rng: &mut SeededRng, lo: f64, hi: f64) -> f64 {
    // 53-bit uniform in [0, 1), scaled; degenerate range short-circuits so the
    // endpoint is exact (no lo + 0.0 * span rounding concerns).
    if lo == hi {
        // still consume one draw so sequences keep a fixed shape
        let _ = rng.gen::<f64>();
        return lo;
    }
    let u: f64 = rng.gen();
    lo + u * (hi - lo)
}

/// `count` i.i.d. uniform draws on `[lo, hi]` from an existing stream.
pub fn draw_uniform_vec(rng: &mut SeededRng, lo: f64, hi: f64, count: usize) -> Vec<f64> {
    (0..count).map(|_| draw_uniform(rng, lo, hi)).collect()
}

/// Realizes `count` i.i.d. uniform draws on `[lo, hi]`, deterministic per seed.
///
/// This is the reference realization of a [`RandomField`]: the draws equal the
/// first `count` uniform values of the seed's stream.
pub fn make_uniform_field(seed: u64, lo: f64, hi: f64, count: usize) -> Result<Vec<f64>> {
    if !lo.is_finite() || !hi.is_finite() {
        return Err(CoreError::NonFinite { name: "range" });
    }
    if lo > hi {
        return Err(CoreError::InvalidParameter {
            name: "range",
            reason: format!("lo {lo} > hi {hi}"),
        });
    }
    if count == 0 {
        return Err(CoreError::InvalidParameter {
            name: "count",
            reason: "count must be >= 1".into(),
        });
    }
    let mut rng = rng_from_seed(seed);
    Ok(draw_uniform_vec(&mut rng, lo, hi, count))
}

/// Realizes the draws described by a validated [`RandomField`].
pub fn realize_field(field: &RandomField) -> Vec<f64> {
    let mut rng = rng_from_seed(field.seed());
    draw_uniform_vec(&mut rng, field.range_lo(), field.range_hi(), field.count())
}
