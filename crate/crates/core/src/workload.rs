//! Shor-workload model: polynomial demand formulas for an n-bit RSA run,
//! the per-T error-budget filter, the algorithmic reach n_max, and the
//! serial-cost and parallel-footprint estimates built on them.

use crate::error::Error;

/// Workload parameters: modulus size, Toffoli-to-T compilation coefficient,
/// and the fraction of the algorithm failure budget granted to T states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WorkloadModel {
    pub n: u64,
    pub c_t: f64,
    pub eta_t: f64,
}

impl WorkloadModel {
    pub fn new(n: u64, c_t: f64, eta_t: f64) -> Result<Self, Error> {
        check_n(n)?;
        check_c_t(c_t)?;
        check_eta(eta_t)?;
        Ok(WorkloadModel { n, c_t, eta_t })
    }
}

/// Outcome of the error-budget filter for one protocol at one workload.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BudgetReport {
    pub n_t: f64,
    pub per_t_target: f64,
    pub ratio: f64,
    pub feasible: bool,
}

fn check_n(n: u64) -> Result<(), Error> {
    if n >= 2 {
        Ok(())
    } else {
        Err(Error::invalid(format!("n must be at least 2, got {n}")))
    }
}

fn check_c_t(c_t: f64) -> Result<(), Error> {
    if c_t.is_finite() && c_t > 0.0 {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "c_t must be positive and finite, got {c_t}"
        )))
    }
}

fn check_eta(eta_t: f64) -> Result<(), Error> {
    if eta_t.is_finite() && eta_t > 0.0 && eta_t < 1.0 {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "eta_t must lie in (0, 1), got {eta_t}"
        )))
    }
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

// The real-argument demand formulas. Every feasibility decision in this
// module goes through these and through budget_terms, so budget_check and
// n_max can never disagree at a boundary.

fn q_data_real(n: f64) -> f64 {
    3.0 * n + 0.002 * n * n.log2()
}

fn n_tof_real(n: f64) -> f64 {
    let cube = n * n * n;
    0.3 * cube + 0.0005 * cube * n.log2()
}

fn l_meas_real(n: f64) -> f64 {
    let square = n * n;
    500.0 * square + square * n.log2()
}

fn budget_terms(n_real: f64, c_t: f64, eta_t: f64, epsilon_out: f64) -> (f64, f64, f64) {
    let n_t = c_t * n_tof_real(n_real);
    let per_t_target = eta_t / n_t;
    let ratio = epsilon_out / per_t_target;
    (n_t, per_t_target, ratio)
}

/// Logical data qubits of the modular-exponentiation workload.
pub fn q_data(n: u64) -> Result<f64, Error> {
    check_n(n)?;
    Ok(q_data_real(n as f64))
}

/// Toffoli count of the workload.
pub fn n_tof(n: u64) -> Result<f64, Error> {
    check_n(n)?;
    Ok(n_tof_real(n as f64))
}

/// Measurement depth of the workload, in measurement layers.
pub fn l_meas(n: u64) -> Result<f64, Error> {
    check_n(n)?;
    Ok(l_meas_real(n as f64))
}

/// Total T-state demand: the Toffoli count scaled by the compilation
/// coefficient.
pub fn n_t(n: u64, c_t: f64) -> Result<f64, Error> {
    check_n(n)?;
    check_c_t(c_t)?;
    Ok(c_t * n_tof_real(n as f64))
}

/// First-order union-bound filter: a protocol with output error epsilon_out
/// fits the workload iff `n_t * epsilon_out <= eta_t`, reported as the ratio
/// of epsilon_out to the per-T target `eta_t / n_t`.
pub fn budget_check(epsilon_out: f64, w: &WorkloadModel) -> Result<BudgetReport, Error> {
    check_positive("epsilon_out", epsilon_out)?;
    let (n_t, per_t_target, ratio) = budget_terms(w.n as f64, w.c_t, w.eta_t, epsilon_out);
    Ok(BudgetReport {
        n_t,
        per_t_target,
        ratio,
        feasible: ratio <= 1.0,
    })
}

/// Largest modulus size n >= 2 whose T-budget admits the given output error,
/// or None when even n = 2 is over budget.
///
/// The demand is strictly increasing in n, so an exponential bracket plus
/// binary search finds the boundary; a final linear verification walk pins
/// the exact integer. The search refuses to leave the exactly representable
/// integer range (2^53) instead of returning a rounded answer.
pub fn n_max(epsilon_out: f64, c_t: f64, eta_t: f64) -> Result<Option<u64>, Error> {
    check_positive("epsilon_out", epsilon_out)?;
    check_c_t(c_t)?;
    check_eta(eta_t)?;
    let feasible = |n: u64| budget_terms(n as f64, c_t, eta_t, epsilon_out).2 <= 1.0;

    if !feasible(2) {
        return Ok(None);
    }
    let mut lo: u64 = 2;
    let mut hi: u64 = 4;
    while feasible(hi) {
        lo = hi;
        if hi > (1u64 << 52) {
            return Err(Error::ReachOverflow);
        }
        hi *= 2;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if feasible(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut best = lo;
    while feasible(best + 1) {
        best += 1;
    }
    while best > 2 && !feasible(best) {
        best -= 1;
    }
    Ok(Some(best))
}

/// Cost of serving the whole workload from one preparation unit.
pub fn serial_cost(n: u64, c_t: f64, v_expected: f64) -> Result<f64, Error> {
    check_positive("v_expected", v_expected)?;
    Ok(n_t(n, c_t)? * v_expected)
}

/// Peak qubit count of the workload running beside m preparation units.
/// The two terms are usually in different native units (logical data qubits
/// plus the record's footprint unit); callers label the output accordingly.
pub fn total_qubits(n: u64, m: u64, q_peak: f64) -> Result<f64, Error> {
    check_n(n)?;
    if m < 1 {
        return Err(Error::invalid(format!("m must be at least 1, got {m}")));
    }
    check_positive("q_peak", q_peak)?;
    Ok(q_data_real(n as f64) + m as f64 * q_peak)
}

/// Preparation units needed to keep pace with the measurement depth, with
/// latency scaled by 1/p_succ to cover expected restarts per accepted state.
/// The latency must be expressed in the same time step as the measurement
/// depth for the quotient to be meaningful.
pub fn factory_multiplicity(
    n: u64,
    c_t: f64,
    latency: f64,
    p_succ: f64,
) -> Result<u64, Error> {
    check_positive("latency", latency)?;
    crate::reconstruct::check_psucc(p_succ)?;
    let demand = n_t(n, c_t)? * (latency / p_succ) / l_meas(n)?;
    Ok((demand.ceil() as u64).max(1))
}
