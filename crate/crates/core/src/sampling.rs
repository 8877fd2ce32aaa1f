//! Seeded random rational parameter points.
//!
//! Numerators are uniform in [−10⁴, 10⁴] and denominators in [1, 10³]. Guard
//! failures are resampled; the degenerate locus has measure zero, so the
//! expected number of resamples is essentially zero.

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::context::VariableContext;
use crate::error::{Error, Result};
use crate::ideal::SaturationResult;
use crate::polynomial::ParameterPoint;
use crate::rational::Rational;

pub const MAX_GENERIC_ATTEMPTS: u32 = 100;

/// Deterministic stream for one (seed, trial) pair, stable across platforms.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&trial.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

pub fn sample_rational<R: Rng>(rng: &mut R) -> Rational {
    let numer = rng.gen_range(-10_000i64..=10_000);
    let denom = rng.gen_range(1i64..=1_000);
    Rational::new(numer, denom).expect("positive denominator")
}

pub fn sample_parameter_point<R: Rng>(ctx: &Arc<VariableContext>, rng: &mut R) -> ParameterPoint {
    let values = (0..ctx.num_params()).map(|_| sample_rational(rng)).collect();
    ParameterPoint::from_values(ctx, values).expect("complete assignment")
}

/// A parameter point at which every recorded parameter leading coefficient is
/// nonzero, together with the number of resamples it took.
pub fn sample_generic_point<R: Rng>(
    sat: &SaturationResult,
    ctx: &Arc<VariableContext>,
    rng: &mut R,
) -> Result<(ParameterPoint, u32)> {
    let mut resamples = 0;
    for _ in 0..MAX_GENERIC_ATTEMPTS {
        let q = sample_parameter_point(ctx, rng);
        if sat.guard_passes(&q)? {
            return Ok((q, resamples));
        }
        resamples += 1;
    }
    Err(Error::GenericSamplingFailed(MAX_GENERIC_ATTEMPTS))
}
