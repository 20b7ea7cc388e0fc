//! Containment of `K_{m,n}` and of the book `K_m + \bar K_n`, with witnesses.
//!
//! Both searches enumerate candidate cores `U` (`|U| = m`) in lexicographic
//! order, maintaining the running common neighbourhood as a bitset, and stop
//! at the first core with at least `n` common neighbours. Cores whose
//! vertices cannot have enough neighbours are dropped before the scan.
//!
//! [`brute_force_contains`] is an unrelated exhaustive embedding search used
//! as an oracle for small instances.

use crate::error::{LabError, Result};
use crate::graph::{bitset, Graph};

/// Largest pattern accepted by [`PatternSpec::explicit`] and the brute-force oracle.
pub const MAX_PATTERN_VERTICES: usize = 8;
/// Largest host graph accepted by the brute-force oracle.
pub const MAX_BRUTE_FORCE_HOST: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternKind {
    /// `K_{m,n}`
    CompleteBipartite,
    /// `K_m + \bar K_n`
    Book,
}

impl std::str::FromStr for PatternKind {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "kmn" => Ok(PatternKind::CompleteBipartite),
            "book" => Ok(PatternKind::Book),
            other => Err(LabError::invalid(format!("unknown pattern `{other}` (expected kmn|book)"))),
        }
    }
}

impl std::fmt::Display for PatternKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PatternKind::CompleteBipartite => "kmn",
            PatternKind::Book => "book",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternSpec {
    CompleteBipartite { m: usize, n: usize },
    Book { m: usize, n: usize },
    Explicit(Graph),
}

impl PatternSpec {
    pub fn new(kind: PatternKind, m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(LabError::invalid(format!("pattern sizes must be >= 1, got m={m}, n={n}")));
        }
        Ok(match kind {
            PatternKind::CompleteBipartite => PatternSpec::CompleteBipartite { m, n },
            PatternKind::Book => PatternSpec::Book { m, n },
        })
    }

    pub fn complete_bipartite(m: usize, n: usize) -> Result<Self> {
        Self::new(PatternKind::CompleteBipartite, m, n)
    }

    pub fn book(m: usize, n: usize) -> Result<Self> {
        Self::new(PatternKind::Book, m, n)
    }

    pub fn explicit(graph: Graph) -> Result<Self> {
        if graph.vertex_count() > MAX_PATTERN_VERTICES {
            return Err(LabError::SizeCap {
                what: "explicit pattern vertex count",
                actual: graph.vertex_count(),
                cap: MAX_PATTERN_VERTICES,
            });
        }
        Ok(PatternSpec::Explicit(graph))
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            PatternSpec::CompleteBipartite { m, n } | PatternSpec::Book { m, n } => m + n,
            PatternSpec::Explicit(g) => g.vertex_count(),
        }
    }

    pub fn edge_count(&self) -> usize {
        match self {
            PatternSpec::CompleteBipartite { m, n } => m * n,
            PatternSpec::Book { m, n } => m * n + m * (m - 1) / 2,
            PatternSpec::Explicit(g) => g.edge_count(),
        }
    }

    /// The pattern as a graph: core `0..m`, leaves `m..m+n`.
    pub fn to_graph(&self) -> Graph {
        match self {
            PatternSpec::Explicit(g) => g.clone(),
            PatternSpec::CompleteBipartite { m, n } | PatternSpec::Book { m, n } => {
                let (m, n) = (*m, *n);
                let mut g = Graph::empty(m + n);
                for u in 0..m {
                    for v in m..m + n {
                        g.insert_edge(u, v);
                    }
                    if matches!(self, PatternSpec::Book { .. }) {
                        for w in u + 1..m {
                            g.insert_edge(u, w);
                        }
                    }
                }
                g
            }
        }
    }

    /// Fast containment test; explicit patterns fall back to the oracle.
    pub fn is_contained_in(&self, graph: &Graph) -> Result<bool> {
        match self {
            PatternSpec::CompleteBipartite { m, n } => {
                Ok(m + n <= graph.vertex_count() && contains_kmn(graph, *m, *n)?.is_some())
            }
            PatternSpec::Book { m, n } => {
                Ok(m + n <= graph.vertex_count() && contains_book(graph, *m, *n)?.is_some())
            }
            PatternSpec::Explicit(_) => brute_force_contains(graph, self),
        }
    }
}

/// A core `U` together with its common neighbourhood outside `U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub core: Vec<usize>,
    pub leaves: Vec<usize>,
}

impl Witness {
    /// Re-checks the witness against `graph` for `K_{m,n}`: disjoint parts of
    /// sizes `min(m,n)` and at least `max(m,n)`, completely joined.
    pub fn certifies_kmn(&self, graph: &Graph, m: usize, n: usize) -> bool {
        let (small, large) = (m.min(n), m.max(n));
        self.core.len() == small && self.leaves.len() >= large && self.parts_joined(graph)
    }

    /// As [`Witness::certifies_kmn`] with core size `m`, leaves at least `n`,
    /// and the core inducing a clique.
    pub fn certifies_book(&self, graph: &Graph, m: usize, n: usize) -> bool {
        self.core.len() == m
            && self.leaves.len() >= n
            && self.parts_joined(graph)
            && self
                .core
                .iter()
                .enumerate()
                .all(|(i, &u)| self.core[i + 1..].iter().all(|&w| graph.has_edge(u, w)))
    }

    fn parts_joined(&self, graph: &Graph) -> bool {
        let distinct = |s: &[usize]| s.windows(2).all(|w| w[0] < w[1]);
        distinct(&self.core)
            && distinct(&self.leaves)
            && self.core.iter().all(|c| !self.leaves.contains(c))
            && self
                .core
                .iter()
                .all(|&c| self.leaves.iter().all(|&l| graph.has_edge(c, l)))
    }
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |s: &[usize]| s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "core={} leaves={}", join(&self.core), join(&self.leaves))
    }
}

fn check_sizes(graph: &Graph, m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(LabError::invalid(format!("m and n must be >= 1, got m={m}, n={n}")));
    }
    if m > graph.vertex_count() {
        return Err(LabError::invalid(format!(
            "m={m} exceeds the vertex count {}",
            graph.vertex_count()
        )));
    }
    Ok(())
}

/// Lexicographically first `U` of size `min(m, n)` with at least `max(m, n)`
/// common neighbours, or `None` when `graph` has no `K_{m,n}`.
pub fn contains_kmn(graph: &Graph, m: usize, n: usize) -> Result<Option<Witness>> {
    check_sizes(graph, m, n)?;
    let (core, need) = (m.min(n), m.max(n));
    Ok(CoreSearch::new(graph, core, need, false).run())
}

/// Lexicographically first `m`-clique `U` with at least `n` common
/// neighbours, or `None` when `graph` has no `K_m + \bar K_n`.
pub fn contains_book(graph: &Graph, m: usize, n: usize) -> Result<Option<Witness>> {
    check_sizes(graph, m, n)?;
    Ok(CoreSearch::new(graph, m, n, true).run())
}

struct CoreSearch<'g> {
    graph: &'g Graph,
    candidates: Vec<usize>,
    core_size: usize,
    need: usize,
    clique: bool,
}

impl<'g> CoreSearch<'g> {
    fn new(graph: &'g Graph, core_size: usize, need: usize, clique: bool) -> Self {
        let min_degree = if clique { need + core_size - 1 } else { need };
        let candidates = (0..graph.vertex_count())
            .filter(|&v| graph.degree(v) >= min_degree)
            .collect();
        CoreSearch {
            graph,
            candidates,
            core_size,
            need,
            clique,
        }
    }

    fn run(&self) -> Option<Witness> {
        if self.candidates.len() < self.core_size {
            return None;
        }
        let words = self.graph.words_per_row();
        let acc = bitset::full(self.graph.vertex_count());
        let mut scratch = vec![vec![0u64; words]; self.core_size];
        let mut chosen = Vec::with_capacity(self.core_size);
        self.descend(0, &acc, &mut scratch, &mut chosen)
    }

    fn descend(
        &self,
        start: usize,
        acc: &[u64],
        scratch: &mut [Vec<u64>],
        chosen: &mut Vec<usize>,
    ) -> Option<Witness> {
        let remaining = self.core_size - chosen.len();
        if remaining == 0 {
            return Some(Witness {
                core: chosen.clone(),
                leaves: bitset::iter_ones(acc).collect(),
            });
        }
        // Future core members of a book sit inside `acc` but not among the leaves.
        let bound = if self.clique { self.need + remaining - 1 } else { self.need };
        let (next, rest) = scratch.split_first_mut().expect("one buffer per level");
        let last = self.candidates.len() + 1 - remaining;
        for i in start..last {
            let v = self.candidates[i];
            if self.clique && !bitset::test(acc, v) {
                continue;
            }
            let row = self.graph.row(v);
            let mut count = 0;
            for ((dst, a), r) in next.iter_mut().zip(acc).zip(row) {
                *dst = a & r;
                count += dst.count_ones() as usize;
            }
            if count < bound {
                continue;
            }
            chosen.push(v);
            if let Some(w) = self.descend(i + 1, next, rest, chosen) {
                return Some(w);
            }
            chosen.pop();
        }
        None
    }
}

/// Exhaustive backtracking: does `pattern` embed into `graph` as a (not
/// necessarily induced) subgraph?
pub fn brute_force_contains(graph: &Graph, pattern: &PatternSpec) -> Result<bool> {
    let pg = pattern.to_graph();
    if pg.vertex_count() > MAX_PATTERN_VERTICES {
        return Err(LabError::SizeCap {
            what: "pattern vertex count",
            actual: pg.vertex_count(),
            cap: MAX_PATTERN_VERTICES,
        });
    }
    if graph.vertex_count() > MAX_BRUTE_FORCE_HOST {
        return Err(LabError::SizeCap {
            what: "host vertex count",
            actual: graph.vertex_count(),
            cap: MAX_BRUTE_FORCE_HOST,
        });
    }
    if pg.vertex_count() > graph.vertex_count() || pg.edge_count() > graph.edge_count() {
        return Ok(false);
    }
    // Place high-degree pattern vertices first.
    let mut order: Vec<usize> = (0..pg.vertex_count()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(pg.degree(v)));
    let mut image = vec![usize::MAX; pg.vertex_count()];
    let mut used = vec![false; graph.vertex_count()];
    Ok(embed(graph, &pg, &order, 0, &mut image, &mut used))
}

fn embed(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let pv = order[depth];
    for hv in 0..host.vertex_count() {
        if used[hv] || host.degree(hv) < pattern.degree(pv) {
            continue;
        }
        let fits = order[..depth]
            .iter()
            .filter(|&&q| pattern.has_edge(pv, q))
            .all(|&q| host.has_edge(hv, image[q]));
        if !fits {
            continue;
        }
        image[pv] = hv;
        used[hv] = true;
        if embed(host, pattern, order, depth + 1, image, used) {
            return true;
        }
        used[hv] = false;
    }
    false
}
