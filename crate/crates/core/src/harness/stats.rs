use statrs::distribution::{ChiSquared, ContinuousCDF, Normal};

use crate::error::{LabError, Result};

/// Two-sided normal quantile for a confidence level, e.g. 0.95 -> 1.95996.
pub fn z_for_confidence(confidence: f64) -> Result<f64> {
    if !(confidence > 0.0 && confidence < 1.0) {
        return Err(LabError::invalid(format!("confidence must be in (0, 1), got {confidence}")));
    }
    let normal = Normal::new(0.0, 1.0).expect("standard normal");
    Ok(normal.inverse_cdf(0.5 + confidence / 2.0))
}

/// Wilson score interval for `successes` out of `trials` at normal quantile `z`.
pub fn wilson_interval(successes: u64, trials: u64, z: f64) -> (f64, f64) {
    assert!(trials > 0 && successes <= trials);
    let n = trials as f64;
    let p_hat = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p_hat + z2 / (2.0 * n)) / denom;
    let half = z / denom * (p_hat * (1.0 - p_hat) / n + z2 / (4.0 * n * n)).sqrt();
    let low = (center - half).clamp(0.0, 1.0).min(p_hat);
    let high = (center + half).clamp(0.0, 1.0).max(p_hat);
    (low, high)
}

/// Upper tail of the chi-square law; 1 for zero degrees of freedom.
pub fn chi_square_sf(statistic: f64, degrees_of_freedom: usize) -> f64 {
    if degrees_of_freedom == 0 {
        return 1.0;
    }
    ChiSquared::new(degrees_of_freedom as f64)
        .expect("positive degrees of freedom")
        .sf(statistic)
}

#[derive(Clone, Debug, PartialEq)]
pub struct GoodnessOfFit {
    pub statistic: f64,
    pub degrees_of_freedom: usize,
    pub p_value: f64,
    /// Pooled bins as `(first category, last category, observed, expected)`.
    pub bins: Vec<(usize, usize, u64, f64)>,
}

/// Pearson chi-square test of observed category counts against expected
/// counts. Adjacent categories are pooled left to right until each bin
/// expects at least `min_expected`; a short final run joins the last bin.
pub fn chi_square_gof(observed: &[u64], expected: &[f64], min_expected: f64) -> GoodnessOfFit {
    assert_eq!(observed.len(), expected.len());
    let mut bins: Vec<(usize, usize, u64, f64)> = Vec::new();
    let mut open: Option<(usize, u64, f64)> = None;
    for (k, (&o, &e)) in observed.iter().zip(expected).enumerate() {
        let (start, obs, exp) = open.unwrap_or((k, 0, 0.0));
        let (obs, exp) = (obs + o, exp + e);
        if exp >= min_expected {
            bins.push((start, k, obs, exp));
            open = None;
        } else {
            open = Some((start, obs, exp));
        }
    }
    if let Some((_, obs, exp)) = open {
        match bins.last_mut() {
            Some(last) => {
                last.1 = observed.len() - 1;
                last.2 += obs;
                last.3 += exp;
            }
            None => bins.push((0, observed.len().saturating_sub(1), obs, exp)),
        }
    }
    let statistic: f64 = bins
        .iter()
        .filter(|b| b.3 > 0.0)
        .map(|&(_, _, o, e)| {
            let d = o as f64 - e;
            d * d / e
        })
        .sum();
    let degrees_of_freedom = bins.len().saturating_sub(1);
    GoodnessOfFit {
        statistic,
        degrees_of_freedom,
        p_value: chi_square_sf(statistic, degrees_of_freedom),
        bins,
    }
}
