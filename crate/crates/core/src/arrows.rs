//! The arrow relation `F -> G`: every red/blue colouring of the edges of `F`
//! has a monochromatic copy of `G`.
//!
//! Three ways to answer, in decreasing strength:
//! * [`arrow_certificate_kmn`]: `e(F) > 2 ex(N; K_{m,n})` via the KST bound.
//!   One-sided: `true` proves the arrow, `false` says nothing.
//! * [`arrow_exhaustive`]: decides the relation exactly for `e(F) <= 25`.
//! * [`refute_arrow_by_halving`]: random halvings; a split with no
//!   monochromatic pattern disproves the arrow.

use rayon::prelude::*;

use crate::analytic::kst_extremal_bound;
use crate::error::{LabError, Result};
use crate::graph::{random_halving, ColoredSplit, Graph};
use crate::rng::RngStream;
use crate::witness::{PatternKind, PatternSpec};

/// Edge cap for [`arrow_exhaustive`].
pub const MAX_EXHAUSTIVE_EDGES: usize = 25;
pub const DEFAULT_REFUTE_TRIALS: usize = 128;

/// Colourings of this many leading edges (after the fixed first edge) are
/// handed out as independent parallel jobs.
const PREFIX_EDGES: usize = 6;

/// `true` only if `e(F) > 2 * kst_extremal_bound(N, m, n)`, which forces one
/// colour class above the extremal number and hence a monochromatic `K_{m,n}`.
pub fn arrow_certificate_kmn(graph: &Graph, m: usize, n: usize) -> Result<bool> {
    if m == 0 || n == 0 {
        return Err(LabError::invalid(format!("m and n must be >= 1, got m={m}, n={n}")));
    }
    let bound = kst_extremal_bound(graph.vertex_count(), m, n);
    Ok(graph.edge_count() as f64 > 2.0 * bound)
}

/// Decides `F -> pattern` by searching all `2^e(F)` colourings. The first
/// edge is fixed red (colour swap symmetry) and a branch is abandoned as soon
/// as the partial colouring has a monochromatic copy.
pub fn arrow_exhaustive(graph: &Graph, pattern: &PatternSpec) -> Result<bool> {
    if graph.edge_count() > MAX_EXHAUSTIVE_EDGES {
        return Err(LabError::SizeCap {
            what: "edge count for exhaustive arrow search",
            actual: graph.edge_count(),
            cap: MAX_EXHAUSTIVE_EDGES,
        });
    }
    if pattern.edge_count() > graph.edge_count() || pattern.vertex_count() > graph.vertex_count() {
        return Ok(false);
    }
    let edges: Vec<(usize, usize)> = graph.edges().collect();
    let search = ColoringSearch { edges: &edges, pattern };

    let n = graph.vertex_count();
    let mut red = Graph::empty(n);
    red.insert_edge(edges[0].0, edges[0].1);
    if search.contains(&red)? {
        return Ok(true);
    }
    let prefix = PREFIX_EDGES.min(edges.len() - 1);
    let jobs: Vec<u64> = (0..1u64 << prefix).collect();
    let avoiding = jobs
        .par_iter()
        .map(|&bits| {
            let mut red = red.clone();
            let mut blue = Graph::empty(n);
            for (j, &(u, v)) in edges[1..=prefix].iter().enumerate() {
                let target = if (bits >> j) & 1 == 0 { &mut red } else { &mut blue };
                target.insert_edge(u, v);
                if search.contains(target)? {
                    return Ok(false);
                }
            }
            search.find_avoiding(prefix + 1, &mut red, &mut blue)
        })
        .collect::<Result<Vec<bool>>>()?;
    Ok(!avoiding.into_iter().any(|found| found))
}

struct ColoringSearch<'a> {
    edges: &'a [(usize, usize)],
    pattern: &'a PatternSpec,
}

impl ColoringSearch<'_> {
    fn contains(&self, g: &Graph) -> Result<bool> {
        if g.edge_count() < self.pattern.edge_count() {
            return Ok(false);
        }
        self.pattern.is_contained_in(g)
    }

    /// Is there a completion of the partial colouring (edges `..next`
    /// coloured) without a monochromatic pattern?
    fn find_avoiding(&self, next: usize, red: &mut Graph, blue: &mut Graph) -> Result<bool> {
        if next == self.edges.len() {
            return Ok(true);
        }
        let (u, v) = self.edges[next];
        red.insert_edge(u, v);
        if !self.contains(red)? && self.find_avoiding(next + 1, red, blue)? {
            red.remove_edge(u, v);
            return Ok(true);
        }
        red.remove_edge(u, v);
        blue.insert_edge(u, v);
        let found = !self.contains(blue)? && self.find_avoiding(next + 1, red, blue)?;
        blue.remove_edge(u, v);
        Ok(found)
    }
}

/// Up to `trials` independent random halvings of `graph` (trial `t` uses
/// `rng.child(t)`); returns the first split in which neither colour class
/// contains the pattern.
pub fn refute_arrow_by_halving(
    graph: &Graph,
    m: usize,
    n: usize,
    kind: PatternKind,
    trials: usize,
    rng: &RngStream,
) -> Result<Option<ColoredSplit>> {
    if trials == 0 {
        return Err(LabError::invalid("refutation needs at least one trial"));
    }
    let pattern = PatternSpec::new(kind, m, n)?;
    for t in 0..trials {
        let split = random_halving(graph, &rng.child(t as u64));
        if !pattern.is_contained_in(&split.red)? && !pattern.is_contained_in(&split.blue)? {
            return Ok(Some(split));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tier {
    Certificate,
    Exact,
    Refutation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArrowMode {
    Certificate,
    Exhaustive,
    Refute,
    /// Certificate, then exhaustive search when within the edge cap, then
    /// refutation sampling.
    Auto,
}

impl std::str::FromStr for ArrowMode {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "certificate" => Ok(ArrowMode::Certificate),
            "exhaustive" => Ok(ArrowMode::Exhaustive),
            "refute" => Ok(ArrowMode::Refute),
            "auto" => Ok(ArrowMode::Auto),
            other => Err(LabError::invalid(format!(
                "unknown arrow mode `{other}` (expected certificate|exhaustive|refute|auto)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowReport {
    pub verdict: Verdict,
    pub tier: Tier,
    /// Present when the refutation tier found a colouring.
    pub refutation: Option<ColoredSplit>,
}

impl ArrowReport {
    /// Exact verdicts come from exhaustive search; a certificate `yes` or a
    /// refutation `no` is also conclusive. `unknown` never is.
    pub fn is_conclusive(&self) -> bool {
        self.verdict != Verdict::Unknown
    }

    /// `verdict=<yes|no|unknown> tier=<cert|exact|refute>`
    pub fn verdict_line(&self) -> String {
        let verdict = match self.verdict {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        };
        let tier = match self.tier {
            Tier::Certificate => "cert",
            Tier::Exact => "exact",
            Tier::Refutation => "refute",
        };
        format!("verdict={verdict} tier={tier}")
    }
}

/// Answers `F -> pattern` with the requested tier(s).
pub fn decide_arrow(
    graph: &Graph,
    kind: PatternKind,
    m: usize,
    n: usize,
    mode: ArrowMode,
    trials: usize,
    rng: &RngStream,
) -> Result<ArrowReport> {
    let pattern = PatternSpec::new(kind, m, n)?;
    let report = |verdict, tier| ArrowReport { verdict, tier, refutation: None };
    let certificate = || -> Result<ArrowReport> {
        // The KST certificate only speaks about K_{m,n}.
        let yes = kind == PatternKind::CompleteBipartite && arrow_certificate_kmn(graph, m, n)?;
        Ok(report(if yes { Verdict::Yes } else { Verdict::Unknown }, Tier::Certificate))
    };
    let exhaustive = || -> Result<ArrowReport> {
        let yes = arrow_exhaustive(graph, &pattern)?;
        Ok(report(if yes { Verdict::Yes } else { Verdict::No }, Tier::Exact))
    };
    let refute = || -> Result<ArrowReport> {
        let split = refute_arrow_by_halving(graph, m, n, kind, trials, rng)?;
        Ok(ArrowReport {
            verdict: if split.is_some() { Verdict::No } else { Verdict::Unknown },
            tier: Tier::Refutation,
            refutation: split,
        })
    };
    match mode {
        ArrowMode::Certificate => certificate(),
        ArrowMode::Exhaustive => exhaustive(),
        ArrowMode::Refute => refute(),
        ArrowMode::Auto => {
            let cert = certificate()?;
            if cert.verdict == Verdict::Yes {
                return Ok(cert);
            }
            if graph.edge_count() <= MAX_EXHAUSTIVE_EDGES {
                return exhaustive();
            }
            refute()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn k12() -> PatternSpec {
        PatternSpec::complete_bipartite(1, 2).unwrap()
    }

    #[test]
    fn certificate_examples() {
        assert!(arrow_certificate_kmn(&Graph::complete(6), 1, 2).unwrap());
        assert!(!arrow_certificate_kmn(&Graph::empty(6), 1, 2).unwrap());
        // e = 3 equals 2 * 1.5: not strict.
        assert!(!arrow_certificate_kmn(&Graph::complete(3), 1, 2).unwrap());
        assert!(arrow_exhaustive(&Graph::complete(3), &k12()).unwrap());
        assert!(arrow_certificate_kmn(&Graph::complete(3), 0, 2).is_err());
    }

    #[test]
    fn exhaustive_examples() {
        assert!(arrow_exhaustive(&Graph::complete(3), &k12()).unwrap());
        assert!(!arrow_exhaustive(&cycle(4), &k12()).unwrap());
        assert!(!arrow_exhaustive(&Graph::complete(2), &k12()).unwrap());
        assert!(!arrow_exhaustive(&Graph::empty(4), &k12()).unwrap());
    }

    /// Plain enumeration of all 2^e colourings, no symmetry or pruning.
    fn arrow_by_enumeration(graph: &Graph, pattern: &PatternSpec) -> bool {
        let edges: Vec<_> = graph.edges().collect();
        (0..1u64 << edges.len()).all(|mask| {
            let red = Graph::from_edges(
                graph.vertex_count(),
                edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e),
            )
            .unwrap();
            let blue = Graph::from_edges(
                graph.vertex_count(),
                edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 0).map(|(_, &e)| e),
            )
            .unwrap();
            pattern.is_contained_in(&red).unwrap() || pattern.is_contained_in(&blue).unwrap()
        })
    }

    #[test]
    fn exhaustive_matches_plain_enumeration() {
        let patterns = [
            k12(),
            PatternSpec::complete_bipartite(2, 2).unwrap(),
            PatternSpec::book(2, 1).unwrap(),
            PatternSpec::explicit(Graph::complete(3)).unwrap(),
        ];
        let rng = RngStream::new(77, 0);
        for i in 0..40u64 {
            let g = crate::graph::sample_gnp(6, 0.55, &rng.child(i)).unwrap();
            if g.edge_count() > 12 {
                continue;
            }
            for p in &patterns {
                assert_eq!(arrow_exhaustive(&g, p).unwrap(), arrow_by_enumeration(&g, p), "graph {i}");
            }
        }
    }

    #[test]
    fn exhaustive_cap() {
        assert!(matches!(
            arrow_exhaustive(&Graph::complete(8), &k12()),
            Err(LabError::SizeCap { actual: 28, .. })
        ));
    }

    #[test]
    fn refutation_examples() {
        let rng = RngStream::new(2024, 0);
        // No K_{2,2} anywhere in C_5: the first split already refutes.
        let c5 = cycle(5);
        let split = refute_arrow_by_halving(&c5, 2, 2, PatternKind::CompleteBipartite, 1, &rng)
            .unwrap()
            .unwrap();
        assert!(split.partitions(&c5));

        let c4 = cycle(4);
        let split = refute_arrow_by_halving(&c4, 1, 2, PatternKind::CompleteBipartite, 64, &rng)
            .unwrap()
            .expect("an alternating colouring within 64 trials");
        assert!(split.partitions(&c4));
        assert_eq!(split.red.edge_count(), 2);
        assert!(crate::witness::contains_kmn(&split.red, 1, 2).unwrap().is_none());

        let k3 = Graph::complete(3);
        for seed in 0..5 {
            let r = refute_arrow_by_halving(&k3, 1, 2, PatternKind::CompleteBipartite, 128, &RngStream::new(seed, 3));
            assert_eq!(r.unwrap(), None);
        }
        assert!(refute_arrow_by_halving(&k3, 1, 2, PatternKind::Book, 0, &rng).is_err());
    }

    #[test]
    fn decide_tiers() {
        let rng = RngStream::new(5, 5);
        let k6 = Graph::complete(6);
        let r = decide_arrow(&k6, PatternKind::CompleteBipartite, 1, 2, ArrowMode::Auto, 8, &rng).unwrap();
        assert_eq!(r.verdict_line(), "verdict=yes tier=cert");

        let r = decide_arrow(&cycle(4), PatternKind::CompleteBipartite, 1, 2, ArrowMode::Auto, 8, &rng).unwrap();
        assert_eq!(r.verdict_line(), "verdict=no tier=exact");

        let r = decide_arrow(&Graph::complete(3), PatternKind::Book, 1, 2, ArrowMode::Certificate, 8, &rng).unwrap();
        assert_eq!(r.verdict_line(), "verdict=unknown tier=cert");
        assert!(!r.is_conclusive());

        // r(K_2 + \bar K_2) = 10, so every colouring of K_12 has a monochromatic book.
        let big = Graph::complete(12);
        let r = decide_arrow(&big, PatternKind::Book, 2, 2, ArrowMode::Auto, 16, &rng).unwrap();
        assert_eq!(r.tier, Tier::Refutation);
        assert_eq!(r.verdict, Verdict::Unknown);

        let c30 = cycle(30);
        let r = decide_arrow(&c30, PatternKind::Book, 2, 1, ArrowMode::Auto, 16, &rng).unwrap();
        assert_eq!(r.verdict_line(), "verdict=no tier=refute");
        assert!(r.refutation.is_some());
    }
}
