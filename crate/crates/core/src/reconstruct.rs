//! The yield relation between single-attempt and expected cost,
//! `v_expected = v_single / p_succ`, plus a Monte Carlo restart process
//! that validates it empirically.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::record_store::{NumericField, ProtocolRecord, Provenance};

/// Summary statistics of a simulated restart process.
///
/// `std_error` is the standard error of `mean_cost`; dividing it by the
/// single-attempt cost gives the standard error of `mean_attempts`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RestartStats {
    pub trials: u64,
    pub mean_cost: f64,
    pub std_error: f64,
    pub mean_attempts: f64,
}

fn check_positive(name: &str, v: f64) -> Result<(), Error> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "{name} must be positive and finite, got {v}"
        )))
    }
}

pub(crate) fn check_psucc(p: f64) -> Result<(), Error> {
    if p.is_finite() && p > 0.0 && p <= 1.0 {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "p_succ must lie in (0, 1], got {p}"
        )))
    }
}

/// Expected cost per accepted output from single-attempt cost and
/// acceptance probability.
pub fn reconstruct_expected(v_single: f64, p_succ: f64) -> Result<f64, Error> {
    check_positive("v_single", v_single)?;
    check_psucc(p_succ)?;
    Ok(v_single / p_succ)
}

/// Single-attempt cost from expected cost; inverse of
/// [`reconstruct_expected`].
pub fn reconstruct_single(v_expected: f64, p_succ: f64) -> Result<f64, Error> {
    check_positive("v_expected", v_expected)?;
    check_psucc(p_succ)?;
    Ok(v_expected * p_succ)
}

fn valid_cost(v: Option<f64>) -> Option<f64> {
    v.filter(|x| x.is_finite() && *x > 0.0)
}

fn valid_psucc(p: Option<f64>) -> Option<f64> {
    p.filter(|x| x.is_finite() && *x > 0.0 && *x <= 1.0)
}

/// Fill the one reconstructable missing cost field, if any.
///
/// When exactly one of {v_single, v_expected} is absent and p_succ plus the
/// other are present and in range, the copy gets the missing field computed
/// from the yield relation and tagged reconstructed. Everything else passes
/// through unchanged; present fields and their provenance are never touched,
/// and p_succ is never inferred.
pub fn fill_record(r: &ProtocolRecord) -> ProtocolRecord {
    let mut out = r.clone();
    match (valid_cost(r.v_single), valid_cost(r.v_expected), valid_psucc(r.p_succ)) {
        (Some(v), None, Some(p)) if r.v_expected.is_none() => {
            out.v_expected = Some(v / p);
            out.provenance
                .insert(NumericField::VExpected, Provenance::Reconstructed);
        }
        (None, Some(ve), Some(p)) if r.v_single.is_none() => {
            out.v_single = Some(ve * p);
            out.provenance
                .insert(NumericField::VSingle, Provenance::Reconstructed);
        }
        _ => {}
    }
    out
}

/// Simulate independent restart processes: each attempt succeeds with
/// probability `p_succ` and costs `v_single`; a trial repeats until the
/// first success and its cost is attempts times `v_single`.
///
/// Attempt counts are drawn by inverting the geometric CDF on a ChaCha8
/// stream seeded with `seed`, so results are bit-for-bit reproducible for a
/// fixed (seed, trials) pair.
pub fn simulate_restarts(
    v_single: f64,
    p_succ: f64,
    trials: u64,
    seed: u64,
) -> Result<RestartStats, Error> {
    check_positive("v_single", v_single)?;
    check_psucc(p_succ)?;
    if trials == 0 {
        return Err(Error::invalid("trials must be at least 1"));
    }

    if p_succ == 1.0 {
        // Every trial takes exactly one attempt; nothing to sample.
        return Ok(RestartStats {
            trials,
            mean_cost: v_single,
            std_error: 0.0,
            mean_attempts: 1.0,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ln_q = (1.0 - p_succ).ln();
    let mut mean = 0.0f64;
    let mut m2 = 0.0f64;
    for i in 1..=trials {
        let u: f64 = rng.random();
        // Inverse geometric CDF; u in [0,1) keeps the argument of ln positive.
        let attempts = ((1.0 - u).ln() / ln_q).ceil().max(1.0);
        let delta = attempts - mean;
        mean += delta / i as f64;
        m2 += delta * (attempts - mean);
    }
    let se_attempts = if trials > 1 {
        (m2 / (trials as f64 * (trials - 1) as f64)).sqrt()
    } else {
        0.0
    };

    Ok(RestartStats {
        trials,
        mean_cost: mean * v_single,
        std_error: se_attempts * v_single,
        mean_attempts: mean,
    })
}
