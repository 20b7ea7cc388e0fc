//! Exact laws on tiny vertex sets by full enumeration of labelled graphs.

use std::collections::BTreeMap;

use crate::error::{check_probability, LabError, Result};
use crate::graph::{graph_probability, pair_count, Graph};
use crate::witness::{brute_force_contains, PatternSpec};

pub const MAX_HALVING_VERTICES: usize = 4;
pub const MAX_CONTAINMENT_VERTICES: usize = 6;

fn cap(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(LabError::SizeCap { what, actual, cap: limit })
    } else {
        Ok(())
    }
}

/// For every labelled graph `L` on `vertex_count` vertices, the probability
/// that sampling `F ~ G(N, p)` and colouring each edge red with probability
/// 1/2 leaves red part `L`. Sums `p^e(F) (1-p)^(C - e(F)) 2^-e(F)` over all
/// `F` containing `L`.
pub fn exact_halving_distribution(vertex_count: usize, p: f64) -> Result<BTreeMap<Graph, f64>> {
    cap("vertex count", vertex_count, MAX_HALVING_VERTICES)?;
    check_probability(p)?;
    let pairs = pair_count(vertex_count) as u32;
    let atoms = 1u64 << pairs;
    let mut red = vec![0.0f64; atoms as usize];
    for source in 0..atoms {
        let e = source.count_ones() as i32;
        let weight = p.powi(e) * (1.0 - p).powi(pairs as i32 - e) * 0.5f64.powi(e);
        if weight == 0.0 {
            continue;
        }
        // Each red subgraph of `source` has exactly one colouring producing it.
        let mut sub = source;
        loop {
            red[sub as usize] += weight;
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & source;
        }
    }
    Ok(red
        .into_iter()
        .enumerate()
        .map(|(mask, pr)| (Graph::from_pair_mask(vertex_count, mask as u64), pr))
        .collect())
}

/// `Pr[pattern ⊆ G(N, p)]`, summing exact graph probabilities over all
/// labelled graphs that contain the pattern (decided by brute force).
pub fn exact_containment_prob(vertex_count: usize, p: f64, pattern: &PatternSpec) -> Result<f64> {
    cap("vertex count", vertex_count, MAX_CONTAINMENT_VERTICES)?;
    check_probability(p)?;
    let atoms = 1u64 << pair_count(vertex_count);
    let mut total = 0.0;
    for mask in 0..atoms {
        let g = Graph::from_pair_mask(vertex_count, mask);
        if brute_force_contains(&g, pattern)? {
            total += graph_probability(&g, p);
        }
    }
    Ok(total)
}
