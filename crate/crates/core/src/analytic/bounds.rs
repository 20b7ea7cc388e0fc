use crate::error::{check_probability, LabError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TailSide {
    /// `Pr[S >= k]`
    Upper,
    /// `Pr[S <= k]`
    Lower,
}

/// `exp(-T delta^2 / (3 p (1 - p)))`, the Chernoff estimate for
/// `Pr[S_T >= T(p + delta)]` and `Pr[S_T <= T(p - delta)]`.
pub fn chernoff_tail_bound(trials: u64, p: f64, delta: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(LabError::invalid(format!("Chernoff bound needs 0 < p < 1, got {p}")));
    }
    if delta.is_nan() || delta < 0.0 {
        return Err(LabError::invalid(format!("delta must be >= 0, got {delta}")));
    }
    Ok((-(trials as f64) * delta * delta / (3.0 * p * (1.0 - p))).exp())
}

/// Exact binomial tail of `S ~ Binomial(trials, p)`, summed in log space.
pub fn exact_binomial_tail(trials: u64, p: f64, k: u64, side: TailSide) -> Result<f64> {
    check_probability(p)?;
    if k > trials {
        return Err(LabError::invalid(format!("k={k} exceeds T={trials}")));
    }
    // Degenerate laws: S = 0 or S = T surely.
    if p == 0.0 || p == 1.0 {
        let s = if p == 0.0 { 0 } else { trials };
        let hit = match side {
            TailSide::Upper => s >= k,
            TailSide::Lower => s <= k,
        };
        return Ok(if hit { 1.0 } else { 0.0 });
    }
    let range = match side {
        TailSide::Upper => k..=trials,
        TailSide::Lower => 0..=k,
    };
    let ln_p = p.ln();
    let ln_q = (-p).ln_1p();
    let ln_fact = ln_factorials(trials);
    let t = trials as usize;
    let logs: Vec<f64> = range
        .map(|j| {
            let j = j as usize;
            ln_fact[t] - ln_fact[j] - ln_fact[t - j] + j as f64 * ln_p + (t - j) as f64 * ln_q
        })
        .collect();
    Ok(log_sum_exp(&logs).exp().min(1.0))
}

fn ln_factorials(up_to: u64) -> Vec<f64> {
    let mut out = Vec::with_capacity(up_to as usize + 1);
    let mut acc = 0.0f64;
    out.push(0.0);
    for i in 1..=up_to {
        acc += (i as f64).ln();
        out.push(acc);
    }
    out
}

pub(crate) fn log_sum_exp(logs: &[f64]) -> f64 {
    let max = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    max + logs.iter().map(|l| (l - max).exp()).sum::<f64>().ln()
}

/// Kővári–Sós–Turán upper bound on `ex(N; K_{m,n})`:
/// `((n-1)^(1/m) N^(2-1/m) + (m-1) N) / 2`.
pub fn kst_extremal_bound(vertex_count: usize, m: usize, n: usize) -> f64 {
    let big_n = vertex_count as f64;
    let inv_m = 1.0 / m as f64;
    0.5 * (((n as f64) - 1.0).powf(inv_m) * big_n.powf(2.0 - inv_m) + (m as f64 - 1.0) * big_n)
}
