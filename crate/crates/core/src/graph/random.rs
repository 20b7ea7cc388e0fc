use rand::RngCore;

use super::{pair_count, Graph};
use crate::error::{check_probability, Result};
use crate::rng::{Coin, RngStream};

/// A red/blue partition of the edges of a source graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredSplit {
    pub red: Graph,
    pub blue: Graph,
}

impl ColoredSplit {
    /// Same partition with the colour labels exchanged.
    pub fn swapped(self) -> ColoredSplit {
        ColoredSplit {
            red: self.blue,
            blue: self.red,
        }
    }

    /// Union of the two colour classes.
    pub fn source(&self) -> Graph {
        let mut g = self.red.clone();
        for (u, v) in self.blue.edges() {
            g.insert_edge(u, v);
        }
        g
    }

    /// Checks that the parts are edge-disjoint and together make up `source`.
    pub fn partitions(&self, source: &Graph) -> bool {
        let n = source.vertex_count();
        if self.red.vertex_count() != n || self.blue.vertex_count() != n {
            return false;
        }
        (0..n).all(|v| {
            let (r, b, s) = (self.red.row(v), self.blue.row(v), source.row(v));
            r.iter()
                .zip(b)
                .zip(s)
                .all(|((r, b), s)| r & b == 0 && (r | b) == *s)
        })
    }
}

/// Samples `G(N, p)`. Pair `e` in lexicographic order is present iff draw `e`
/// of `rng` falls below `p * 2^64`.
pub fn sample_gnp(vertex_count: usize, p: f64, rng: &RngStream) -> Result<Graph> {
    check_probability(p)?;
    let mut g = Graph::empty(vertex_count);
    if p == 0.0 {
        return Ok(g);
    }
    if p == 1.0 {
        return Ok(Graph::complete(vertex_count));
    }
    let coin = Coin::new(p);
    let mut gen = rng.generator();
    for u in 0..vertex_count {
        for v in u + 1..vertex_count {
            if coin.flip(gen.next_u64()) {
                g.set_pair_unchecked(u, v);
            }
        }
    }
    g.recount_edges();
    Ok(g)
}

/// Colours every edge red with probability 1/2, blue otherwise.
pub fn random_halving(graph: &Graph, rng: &RngStream) -> ColoredSplit {
    random_split(graph, 0.5, rng).expect("1/2 is a valid probability")
}

/// Colours every edge red with probability `red_probability`, blue otherwise.
/// The edge at lexicographic pair index `e` is decided by draw `e` of `rng`,
/// whether or not the other pairs are edges.
pub fn random_split(graph: &Graph, red_probability: f64, rng: &RngStream) -> Result<ColoredSplit> {
    check_probability(red_probability)?;
    let n = graph.vertex_count();
    let mut red = Graph::empty(n);
    let mut blue = Graph::empty(n);
    if graph.edge_count() > 0 {
        let coin = Coin::new(red_probability);
        let mut gen = rng.generator();
        let mut consumed: u64 = 0;
        for (u, v) in graph.edges() {
            // Skip draws belonging to non-edges.
            let target = super::pair_index(n, u, v) as u64;
            if target > consumed + 64 {
                gen.set_word_pos(u128::from(target) * 2);
            } else {
                while consumed < target {
                    gen.next_u64();
                    consumed += 1;
                }
            }
            consumed = target + 1;
            if coin.flip(gen.next_u64()) {
                red.set_pair_unchecked(u, v);
            } else {
                blue.set_pair_unchecked(u, v);
            }
        }
        red.recount_edges();
        blue.recount_edges();
    }
    debug_assert_eq!(red.edge_count() + blue.edge_count(), graph.edge_count());
    Ok(ColoredSplit { red, blue })
}

/// Probability that `G(N, p)` equals `graph` exactly:
/// `p^e (1-p)^(C(N,2) - e)`.
pub fn graph_probability(graph: &Graph, p: f64) -> f64 {
    let e = graph.edge_count() as f64;
    let absent = (pair_count(graph.vertex_count()) - graph.edge_count()) as f64;
    p.powf(e) * (1.0 - p).powf(absent)
}
