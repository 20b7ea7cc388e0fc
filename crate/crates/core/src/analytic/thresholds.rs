//! Threshold formulas for `K_{m,n}` and `K_m + \bar K_n` in `G(N, p)` with
//! `N = floor(c 2^m n)`. All logarithms are natural.

use crate::error::{LabError, Result};

/// A probability produced by an asymptotic formula, clamped into `[0, 1]`.
/// `clamped` records whether the raw value had to be moved.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClampedProbability {
    pub value: f64,
    pub raw: f64,
    pub clamped: bool,
}

impl ClampedProbability {
    fn from_raw(raw: f64) -> Self {
        let value = raw.clamp(0.0, 1.0);
        ClampedProbability {
            value,
            raw,
            clamped: value != raw,
        }
    }
}

/// Safety factor applied to [`m_min`] when no `M` is supplied.
pub const DEFAULT_M_SAFETY_FACTOR: f64 = 2.0;

/// Default growth function `omega(n) = max(10, (ln n)^2)`.
pub fn default_omega(n: usize) -> f64 {
    let l = (n as f64).ln();
    (l * l).max(10.0)
}

/// `floor(c * 2^m * n)`.
#[allow(non_snake_case)]
pub fn ramsey_window_N(c: f64, m: usize, n: usize) -> Result<usize> {
    if !c.is_finite() || c <= 1.0 {
        return Err(LabError::invalid(format!("c must be a finite real > 1, got {c}")));
    }
    if m == 0 || n == 0 {
        return Err(LabError::invalid(format!("m and n must be >= 1, got m={m}, n={n}")));
    }
    let exp = i32::try_from(m).map_err(|_| LabError::invalid("m too large"))?;
    let raw = (c * 2f64.powi(exp) * n as f64).floor();
    if raw > (usize::MAX / 2) as f64 {
        return Err(LabError::invalid(format!("window size {raw} does not fit")));
    }
    Ok(raw as usize)
}

/// Asymptotic floor on the constant `M` for which the union bound over all
/// `m`-sets survives: `6 m c 2^m p0 q0` with `p0 = 1 / (c 2^m)`, which
/// simplifies to `6 m q0`.
pub fn m_min(c: f64, m: usize) -> Result<f64> {
    if !c.is_finite() || c <= 1.0 {
        return Err(LabError::invalid(format!("c must be a finite real > 1, got {c}")));
    }
    if m == 0 {
        return Err(LabError::invalid("m must be >= 1"));
    }
    let scale = c * 2f64.powi(m as i32);
    let p0 = 1.0 / scale;
    let q0 = 1.0 - p0;
    Ok(6.0 * m as f64 * scale * p0 * q0)
}

/// Every symbol the threshold formulas use.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThresholdParams {
    pub m: usize,
    pub c: f64,
    pub n: usize,
    /// `floor(c 2^m n)`
    pub vertex_count: usize,
    /// The value `omega(n)`.
    pub omega: f64,
    /// The constant `M`.
    pub big_m: f64,
}

impl ThresholdParams {
    /// Parameters with `omega = default_omega(n)` and `M = 2 * m_min(c, m)`.
    pub fn new(c: f64, m: usize, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(LabError::invalid(format!("n must be >= 2, got {n}")));
        }
        let vertex_count = ramsey_window_N(c, m, n)?;
        Ok(ThresholdParams {
            m,
            c,
            n,
            vertex_count,
            omega: default_omega(n),
            big_m: DEFAULT_M_SAFETY_FACTOR * m_min(c, m)?,
        })
    }

    pub fn with_omega(mut self, omega: f64) -> Result<Self> {
        if !omega.is_finite() || omega <= 0.0 {
            return Err(LabError::invalid(format!("omega must be > 0, got {omega}")));
        }
        self.omega = omega;
        Ok(self)
    }

    pub fn with_big_m(mut self, big_m: f64) -> Result<Self> {
        if !big_m.is_finite() || big_m <= 0.0 {
            return Err(LabError::invalid(format!("M must be > 0, got {big_m}")));
        }
        self.big_m = big_m;
        Ok(self)
    }

    /// `c^(-1/m)`, the location both thresholds converge to.
    pub fn critical_probability(&self) -> f64 {
        self.c.powf(-1.0 / self.m as f64)
    }

    /// `sqrt(M ln n / n)`
    pub fn deviation(&self) -> f64 {
        self.deviation_squared().sqrt()
    }

    fn deviation_squared(&self) -> f64 {
        self.big_m * (self.n as f64).ln() / self.n as f64
    }

    /// Whether `M ln n / n < 1`, i.e. [`p_lower`] is defined.
    pub fn lower_is_usable(&self) -> bool {
        self.deviation_squared() < 1.0
    }
}

/// `c^(-1/m) (1 + omega / n)`, clamped to 1.
pub fn p_upper(params: &ThresholdParams) -> ClampedProbability {
    ClampedProbability::from_raw(
        params.critical_probability() * (1.0 + params.omega / params.n as f64),
    )
}

/// `c^(-1/m) (1 + sqrt(M ln n / n))`, clamped to 1; the upper threshold
/// used for the book.
pub fn p_upper_book(params: &ThresholdParams) -> ClampedProbability {
    ClampedProbability::from_raw(params.critical_probability() * (1.0 + params.deviation()))
}

/// `c^(-1/m) (1 - sqrt(M ln n / n))`; undefined when `M ln n / n >= 1`.
pub fn p_lower(params: &ThresholdParams) -> Result<f64> {
    if !params.lower_is_usable() {
        return Err(LabError::invalid(format!(
            "lower threshold undefined: M ln n / n = {} >= 1",
            params.deviation_squared()
        )));
    }
    Ok(params.critical_probability() * (1.0 - params.deviation()))
}
