use rand::seq::index::sample;

use crate::error::{check_probability, LabError, Result};
use crate::graph::Graph;
use crate::rng::RngStream;

pub type VertexPair = (Vec<usize>, Vec<usize>);

#[derive(Clone, Debug, PartialEq)]
pub struct DensityReport {
    /// `p / 2`.
    pub threshold: f64,
    pub densities: Vec<f64>,
    pub all_pass: bool,
}

impl DensityReport {
    pub fn failures(&self) -> usize {
        self.densities.iter().filter(|&&d| d < self.threshold).count()
    }

    pub fn min_density(&self) -> Option<f64> {
        self.densities.iter().copied().reduce(f64::min)
    }
}

/// Edge density of `graph` across each pair, compared with `p / 2`.
pub fn density_property_check(graph: &Graph, p: f64, pairs: &[VertexPair]) -> Result<DensityReport> {
    check_probability(p)?;
    let threshold = p / 2.0;
    let densities = pairs
        .iter()
        .map(|(xs, ys)| graph.pair_density(xs, ys))
        .collect::<Result<Vec<_>>>()?;
    let all_pass = densities.iter().all(|&d| d >= threshold);
    Ok(DensityReport {
        threshold,
        densities,
        all_pass,
    })
}

/// `count` uniformly random disjoint pairs `(X, Y)` with `|X| = x_size`,
/// `|Y| = y_size`; pair `i` is drawn from stream `rng.child(i)`.
pub fn random_disjoint_pairs(
    vertex_count: usize,
    x_size: usize,
    y_size: usize,
    count: usize,
    rng: &RngStream,
) -> Result<Vec<VertexPair>> {
    if x_size == 0 || y_size == 0 || x_size + y_size > vertex_count {
        return Err(LabError::invalid(format!(
            "cannot pick disjoint sets of sizes {x_size} and {y_size} from {vertex_count} vertices"
        )));
    }
    Ok((0..count)
        .map(|i| {
            let mut gen = rng.child(i as u64).generator();
            let picked = sample(&mut gen, vertex_count, x_size + y_size).into_vec();
            let mut xs = picked[..x_size].to_vec();
            let mut ys = picked[x_size..].to_vec();
            xs.sort_unstable();
            ys.sort_unstable();
            (xs, ys)
        })
        .collect())
}
