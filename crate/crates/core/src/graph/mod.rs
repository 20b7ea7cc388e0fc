//! Simple undirected graphs on labelled vertices `0..N`, stored as bit-packed
//! adjacency rows.
//!
//! Row `v` holds the neighbour set of `v`; each row is `ceil(N / 64)` words.
//! Common neighbourhoods are word-wise ANDs of rows followed by a popcount,
//! which is the hot path of every containment search in this crate.

pub(crate) mod bitset;
pub mod io;
mod random;

pub use random::{graph_probability, random_halving, random_split, sample_gnp, ColoredSplit};

use crate::error::{LabError, Result};

/// Number of unordered vertex pairs, `N(N-1)/2`.
#[inline]
pub fn pair_count(vertex_count: usize) -> usize {
    vertex_count * vertex_count.saturating_sub(1) / 2
}

/// Position of the pair `(u, v)`, `u < v`, in the lexicographic enumeration
/// `(0,1), (0,2), .., (0,N-1), (1,2), ..`.
#[inline]
pub fn pair_index(vertex_count: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < vertex_count);
    u * (2 * vertex_count - u - 1) / 2 + (v - u - 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    vertex_count: usize,
    words: usize,
    rows: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(vertex_count: usize) -> Self {
        let words = bitset::words_for(vertex_count);
        Graph {
            vertex_count,
            words,
            rows: vec![0; words * vertex_count],
            edge_count: 0,
        }
    }

    pub fn complete(vertex_count: usize) -> Self {
        let mut g = Graph::empty(vertex_count);
        let full = bitset::full(vertex_count);
        for v in 0..vertex_count {
            let row = g.row_mut(v);
            row.copy_from_slice(&full);
            bitset::clear(row, v);
        }
        g.edge_count = pair_count(vertex_count);
        g
    }

    /// Builds a graph from unordered pairs. Duplicate pairs, in either
    /// orientation, collapse to one edge.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(vertex_count);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(LabError::LoopEdge(u));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Decodes a graph on at most 11 vertices from a bitmask in which bit `e`
    /// is the pair with lexicographic index `e`.
    pub fn from_pair_mask(vertex_count: usize, mask: u64) -> Self {
        assert!(pair_count(vertex_count) <= 64, "pair mask supports at most 11 vertices");
        let mut g = Graph::empty(vertex_count);
        let mut e = 0;
        for u in 0..vertex_count {
            for v in u + 1..vertex_count {
                if (mask >> e) & 1 == 1 {
                    g.insert_edge(u, v);
                }
                e += 1;
            }
        }
        g
    }

    /// Inverse of [`Graph::from_pair_mask`]; `None` above 11 vertices.
    pub fn pair_mask(&self) -> Option<u64> {
        if pair_count(self.vertex_count) > 64 {
            return None;
        }
        Some(
            self.edges()
                .map(|(u, v)| 1u64 << pair_index(self.vertex_count, u, v))
                .fold(0, |a, b| a | b),
        )
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && v < self.vertex_count && bitset::test(self.row(u), v)
    }

    /// Neighbour set of `v` as packed words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub(crate) fn words_per_row(&self) -> usize {
        self.words
    }

    pub fn degree(&self, v: usize) -> usize {
        bitset::count(self.row(v))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bitset::iter_ones(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count).flat_map(move |u| {
            self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    /// True when every edge of `self` is an edge of `other` (same vertex set).
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.vertex_count == other.vertex_count
            && self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    /// Vertices outside `set` adjacent to every member of `set`. The empty set
    /// yields every vertex.
    pub fn common_neighborhood(&self, set: &[usize]) -> Result<Vec<usize>> {
        for &u in set {
            self.check_vertex(u)?;
        }
        let mut acc = bitset::full(self.vertex_count);
        for &u in set {
            bitset::and_assign(&mut acc, self.row(u));
        }
        Ok(bitset::iter_ones(&acc).collect())
    }

    /// Edge density `e(X, Y) / (|X| |Y|)` between two disjoint nonempty sets.
    pub fn pair_density(&self, xs: &[usize], ys: &[usize]) -> Result<f64> {
        let ymask = self.mask_of(ys)?;
        let xmask = self.mask_of(xs)?;
        if bitset::count(&xmask) == 0 || bitset::count(&ymask) == 0 {
            return Err(LabError::invalid("pair_density needs two nonempty vertex sets"));
        }
        if bitset::and_count(&xmask, &ymask) != 0 {
            return Err(LabError::invalid("pair_density needs disjoint vertex sets"));
        }
        let crossing: usize = bitset::iter_ones(&xmask)
            .map(|x| bitset::and_count(self.row(x), &ymask))
            .sum();
        let denom = bitset::count(&xmask) * bitset::count(&ymask);
        Ok(crossing as f64 / denom as f64)
    }

    pub(crate) fn mask_of(&self, set: &[usize]) -> Result<Vec<u64>> {
        let mut mask = vec![0u64; self.words];
        for &v in set {
            self.check_vertex(v)?;
            bitset::set(&mut mask, v);
        }
        Ok(mask)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(LabError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        }
    }

    #[inline]
    fn row_mut(&mut self, v: usize) -> &mut [u64] {
        &mut self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Adds `{u, v}`; returns false if it was already present.
    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> bool {
        if bitset::test(self.row(u), v) {
            return false;
        }
        bitset::set(self.row_mut(u), v);
        bitset::set(self.row_mut(v), u);
        self.edge_count += 1;
        true
    }

    /// Sets `{u, v}` without touching the cached edge count; callers finish
    /// with [`Graph::recount_edges`].
    #[inline]
    pub(crate) fn set_pair_unchecked(&mut self, u: usize, v: usize) {
        let w = self.words;
        self.rows[u * w + (v >> 6)] |= 1u64 << (v & 63);
        self.rows[v * w + (u >> 6)] |= 1u64 << (u & 63);
    }

    pub(crate) fn recount_edges(&mut self) {
        self.edge_count = bitset::count(&self.rows) / 2;
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if !bitset::test(self.row(u), v) {
            return false;
        }
        bitset::clear(self.row_mut(u), v);
        bitset::clear(self.row_mut(v), u);
        self.edge_count -= 1;
        true
    }
}

/// Builds a graph from an edge list; see [`Graph::from_edges`].
pub fn build_graph(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::from_edges(vertex_count, edges.iter().copied())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn build_examples() {
        let g = build_graph(3, &[(0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(1, 0));

        let g = build_graph(2, &[]).unwrap();
        assert_eq!(g.edge_count(), 0);

        let g = build_graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g, Graph::complete(3));
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn build_deduplicates_and_rejects_bad_pairs() {
        let g = build_graph(4, &[(0, 1), (1, 0), (0, 1), (2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(matches!(
            build_graph(3, &[(0, 3)]),
            Err(LabError::VertexOutOfRange { vertex: 3, vertex_count: 3 })
        ));
        assert!(matches!(build_graph(3, &[(1, 1)]), Err(LabError::LoopEdge(1))));
    }

    #[test]
    fn pair_index_is_lexicographic() {
        let n = 7;
        let mut expected = 0;
        for u in 0..n {
            for v in u + 1..n {
                assert_eq!(pair_index(n, u, v), expected);
                expected += 1;
            }
        }
        assert_eq!(expected, pair_count(n));
    }

    #[test]
    fn pair_mask_round_trip() {
        for mask in 0..(1u64 << 6) {
            let g = Graph::from_pair_mask(4, mask);
            assert_eq!(g.pair_mask(), Some(mask));
            assert_eq!(g.edge_count(), mask.count_ones() as usize);
        }
        assert_eq!(Graph::empty(12).pair_mask(), None);
    }

    #[test]
    fn complete_graph_rows_exclude_diagonal() {
        for n in [0, 1, 5, 64, 65, 130] {
            let g = Graph::complete(n);
            assert_eq!(g.edge_count(), pair_count(n));
            for v in 0..n {
                assert!(!g.has_edge(v, v));
                assert_eq!(g.degree(v), n - 1);
            }
        }
    }

    #[test]
    fn common_neighborhood_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.common_neighborhood(&[0, 1]).unwrap(), vec![2, 3]);

        let c5 = cycle(5);
        for i in 0..5 {
            assert!(c5.common_neighborhood(&[i, (i + 1) % 5]).unwrap().is_empty());
        }

        let c4 = cycle(4);
        assert_eq!(c4.common_neighborhood(&[0, 2]).unwrap(), vec![1, 3]);
        assert_eq!(c4.common_neighborhood(&[]).unwrap(), vec![0, 1, 2, 3]);
        assert!(c4.common_neighborhood(&[4]).is_err());
    }

    #[test]
    fn pair_density_examples() {
        let k = Graph::complete(9);
        assert_eq!(k.pair_density(&[0, 1, 2], &[5, 7]).unwrap(), 1.0);
        assert_eq!(Graph::empty(9).pair_density(&[0, 1], &[5, 7]).unwrap(), 0.0);
        let c4 = cycle(4);
        let d = c4.pair_density(&[0], &[1, 2, 3]).unwrap();
        assert!((d - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn pair_density_rejects_bad_parts() {
        let g = Graph::complete(5);
        assert!(g.pair_density(&[], &[1]).is_err());
        assert!(g.pair_density(&[0, 1], &[1, 2]).is_err());
        assert!(g.pair_density(&[0], &[9]).is_err());
    }

    #[test]
    fn subgraph_relation_and_edge_order() {
        let c4 = cycle(4);
        assert!(c4.is_subgraph_of(&Graph::complete(4)));
        assert!(!Graph::complete(4).is_subgraph_of(&c4));
        assert_eq!(c4.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    }
}
