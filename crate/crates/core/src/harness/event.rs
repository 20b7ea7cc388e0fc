use rayon::prelude::*;

use super::stats::{wilson_interval, z_for_confidence};
use crate::arrows::{arrow_certificate_kmn, refute_arrow_by_halving, DEFAULT_REFUTE_TRIALS};
use crate::error::{check_probability, LabError, Result};
use crate::graph::{sample_gnp, Graph};
use crate::rng::RngStream;
use crate::witness::{PatternKind, PatternSpec};

/// Default confidence level of reported intervals.
pub const DEFAULT_CONFIDENCE: f64 = 0.95;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EventKind {
    /// The pattern appears in the sampled graph.
    WeakContainment(PatternKind),
    /// The KST certificate proves `F -> K_{m,n}`.
    ArrowCertificateKmn,
    /// Random halving finds a colouring of `F` without a monochromatic pattern.
    ArrowRefutedByHalving(PatternKind),
}

impl EventKind {
    pub fn name(&self) -> &'static str {
        match self {
            EventKind::WeakContainment(PatternKind::CompleteBipartite) => "weak-containment-kmn",
            EventKind::WeakContainment(PatternKind::Book) => "weak-containment-book",
            EventKind::ArrowCertificateKmn => "arrow-certificate-kmn",
            EventKind::ArrowRefutedByHalving(PatternKind::CompleteBipartite) => "arrow-refuted-by-halving",
            EventKind::ArrowRefutedByHalving(PatternKind::Book) => "arrow-refuted-by-halving-book",
        }
    }
}

/// Which edge probability a trial samples at, given the grid value `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sampling {
    Raw,
    /// `G(N, p/2)`, the law of one colour class of a halved `G(N, p)`.
    Halved,
}

impl Sampling {
    pub fn effective(&self, p: f64) -> f64 {
        match self {
            Sampling::Raw => p,
            Sampling::Halved => p / 2.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EventSpec {
    pub kind: EventKind,
    pub m: usize,
    pub n: usize,
    pub sampling: Sampling,
    /// Halvings per trial for [`EventKind::ArrowRefutedByHalving`].
    pub refute_trials: usize,
}

impl EventSpec {
    /// Containment sampled at `p / 2`.
    pub fn weak_containment(kind: PatternKind, m: usize, n: usize) -> Self {
        EventSpec {
            kind: EventKind::WeakContainment(kind),
            m,
            n,
            sampling: Sampling::Halved,
            refute_trials: DEFAULT_REFUTE_TRIALS,
        }
    }

    pub fn arrow_certificate(m: usize, n: usize) -> Self {
        EventSpec {
            kind: EventKind::ArrowCertificateKmn,
            m,
            n,
            sampling: Sampling::Raw,
            refute_trials: DEFAULT_REFUTE_TRIALS,
        }
    }

    pub fn arrow_refuted(kind: PatternKind, m: usize, n: usize) -> Self {
        EventSpec {
            kind: EventKind::ArrowRefutedByHalving(kind),
            m,
            n,
            sampling: Sampling::Raw,
            refute_trials: DEFAULT_REFUTE_TRIALS,
        }
    }

    pub fn with_sampling(mut self, sampling: Sampling) -> Self {
        self.sampling = sampling;
        self
    }

    pub fn with_refute_trials(mut self, trials: usize) -> Self {
        self.refute_trials = trials;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 || self.n == 0 {
            return Err(LabError::invalid(format!(
                "event needs m, n >= 1, got m={}, n={}",
                self.m, self.n
            )));
        }
        if matches!(self.kind, EventKind::ArrowRefutedByHalving(_)) && self.refute_trials == 0 {
            return Err(LabError::invalid("refute_trials must be >= 1"));
        }
        Ok(())
    }

    /// Evaluates the event on an already sampled graph. `rng` feeds the
    /// refutation halvings.
    pub fn holds_on(&self, graph: &Graph, rng: &RngStream) -> Result<bool> {
        match self.kind {
            EventKind::WeakContainment(kind) => {
                PatternSpec::new(kind, self.m, self.n)?.is_contained_in(graph)
            }
            EventKind::ArrowCertificateKmn => arrow_certificate_kmn(graph, self.m, self.n),
            EventKind::ArrowRefutedByHalving(kind) => Ok(refute_arrow_by_halving(
                graph,
                self.m,
                self.n,
                kind,
                self.refute_trials,
                rng,
            )?
            .is_some()),
        }
    }

    /// One trial: sample from stream `rng.child(0)`, evaluate with `rng.child(1)`.
    pub fn run_trial(&self, vertex_count: usize, p: f64, rng: &RngStream) -> Result<bool> {
        let graph = sample_gnp(vertex_count, self.sampling.effective(p), &rng.child(0))?;
        self.holds_on(&graph, &rng.child(1))
    }
}

impl std::fmt::Display for EventSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sampling = match self.sampling {
            Sampling::Raw => "raw",
            Sampling::Halved => "halved",
        };
        write!(f, "{} m={} n={} sampling={sampling}", self.kind.name(), self.m, self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub trials: u64,
    pub successes: u64,
    pub p_hat: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

impl Estimate {
    pub fn from_counts(successes: u64, trials: u64, confidence: f64) -> Result<Self> {
        let z = z_for_confidence(confidence)?;
        let (ci_low, ci_high) = wilson_interval(successes, trials, z);
        Ok(Estimate {
            trials,
            successes,
            p_hat: successes as f64 / trials as f64,
            ci_low,
            ci_high,
        })
    }
}

/// Counts successes over `trials` independent trials; trial `t` runs on
/// stream `rng.child(t)`. Trials run on the current rayon pool.
pub fn count_successes(
    event: &EventSpec,
    vertex_count: usize,
    p: f64,
    trials: u64,
    rng: &RngStream,
) -> Result<u64> {
    event.validate()?;
    check_probability(p)?;
    if trials == 0 {
        return Err(LabError::invalid("trials must be >= 1"));
    }
    (0..trials)
        .into_par_iter()
        .map(|t| event.run_trial(vertex_count, p, &rng.child(t)).map(u64::from))
        .try_reduce(|| 0, |a, b| Ok(a + b))
}

/// Success fraction with its 95% Wilson interval.
pub fn estimate_event_prob(
    event: &EventSpec,
    vertex_count: usize,
    p: f64,
    trials: u64,
    rng: &RngStream,
) -> Result<Estimate> {
    let successes = count_successes(event, vertex_count, p, trials, rng)?;
    Estimate::from_counts(successes, trials, DEFAULT_CONFIDENCE)
}
