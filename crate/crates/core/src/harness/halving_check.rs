use rayon::prelude::*;
use statrs::distribution::{Binomial, Discrete};

use super::stats::{chi_square_gof, GoodnessOfFit};
use crate::error::{check_probability, LabError, Result};
use crate::graph::{pair_count, random_split, sample_gnp};
use crate::rng::RngStream;

pub const MIN_HALVING_SAMPLES: u64 = 1000;
/// Histogram length limit; the test keeps one category per edge count.
pub const MAX_HISTOGRAM_PAIRS: usize = 1 << 22;
const MIN_EXPECTED: f64 = 5.0;

#[derive(Clone, Debug, PartialEq)]
pub struct HalvingReport {
    pub vertex_count: usize,
    pub p: f64,
    /// Red probability of the colouring coin; 1/2 for a fair halving.
    pub red_probability: f64,
    pub samples: u64,
    /// Mean of the reference law `Binomial(C(N,2), p/2)`.
    pub expected_mean: f64,
    pub observed_mean: f64,
    pub fit: GoodnessOfFit,
}

impl HalvingReport {
    pub fn statistic(&self) -> f64 {
        self.fit.statistic
    }

    pub fn p_value(&self) -> f64 {
        self.fit.p_value
    }
}

/// Halves `samples` draws of `G(N, p)` and tests the red edge counts against
/// `Binomial(C(N,2), p/2)`. Sample `s` uses stream `rng.child(s)`.
pub fn verify_halving_statistical(
    vertex_count: usize,
    p: f64,
    samples: u64,
    rng: &RngStream,
) -> Result<HalvingReport> {
    verify_split_statistical(vertex_count, p, 0.5, samples, rng)
}

/// Same test with a possibly unfair colouring coin, so the test's power can
/// be measured. The reference law is always the fair one.
pub fn verify_split_statistical(
    vertex_count: usize,
    p: f64,
    red_probability: f64,
    samples: u64,
    rng: &RngStream,
) -> Result<HalvingReport> {
    check_probability(p)?;
    check_probability(red_probability)?;
    if samples < MIN_HALVING_SAMPLES {
        return Err(LabError::invalid(format!(
            "need at least {MIN_HALVING_SAMPLES} samples, got {samples}"
        )));
    }
    let pairs = pair_count(vertex_count);
    if pairs > MAX_HISTOGRAM_PAIRS {
        return Err(LabError::SizeCap {
            what: "vertex pairs",
            actual: pairs,
            cap: MAX_HISTOGRAM_PAIRS,
        });
    }

    let counts: Vec<usize> = (0..samples)
        .into_par_iter()
        .map(|s| {
            let stream = rng.child(s);
            let graph = sample_gnp(vertex_count, p, &stream.child(0))?;
            Ok(random_split(&graph, red_probability, &stream.child(1))?.red.edge_count())
        })
        .collect::<Result<_>>()?;

    let mut observed = vec![0u64; pairs + 1];
    for &c in &counts {
        observed[c] += 1;
    }
    let law = Binomial::new(p / 2.0, pairs as u64)
        .map_err(|e| LabError::invalid(format!("reference binomial: {e}")))?;
    let expected: Vec<f64> = (0..=pairs as u64).map(|k| samples as f64 * law.pmf(k)).collect();

    Ok(HalvingReport {
        vertex_count,
        p,
        red_probability,
        samples,
        expected_mean: pairs as f64 * p / 2.0,
        observed_mean: counts.iter().sum::<usize>() as f64 / samples as f64,
        fit: chi_square_gof(&observed, &expected, MIN_EXPECTED),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fair_halving_fits() {
        let r = verify_halving_statistical(8, 0.5, 5000, &RngStream::new(3, 1)).unwrap();
        assert!(r.p_value() > 1e-4, "{r:?}");
        assert!((r.observed_mean - 7.0).abs() < 0.2);
    }

    #[test]
    fn degenerate_zero_probability() {
        let r = verify_halving_statistical(20, 0.0, 1000, &RngStream::new(1, 1)).unwrap();
        assert_eq!(r.observed_mean, 0.0);
        assert_eq!(r.fit.degrees_of_freedom, 0);
        assert_eq!(r.p_value(), 1.0);
    }

    #[test]
    fn biased_coin_is_detected() {
        let r = verify_split_statistical(20, 0.5, 0.6, 20_000, &RngStream::new(2, 1)).unwrap();
        assert!(r.p_value() < 1e-6, "{r:?}");
    }

    #[test]
    fn undersized_sample_rejected() {
        assert!(verify_halving_statistical(5, 0.5, 999, &RngStream::new(0, 0)).is_err());
        assert!(verify_halving_statistical(5, 1.5, 1000, &RngStream::new(0, 0)).is_err());
    }

    #[test]
    fn deterministic() {
        let a = verify_halving_statistical(6, 0.7, 1000, &RngStream::new(9, 9)).unwrap();
        let b = verify_halving_statistical(6, 0.7, 1000, &RngStream::new(9, 9)).unwrap();
        assert_eq!(a, b);
    }
}
