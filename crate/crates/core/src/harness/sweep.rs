//! Probability-grid sweeps and their CSV output.
//!
//! Config file, one `key = value` per line (`#` starts a comment):
//!
//! ```text
//! c = 2
//! m = 1
//! n = 500
//! event = weak-containment      # weak-containment | arrow-certificate | arrow-refuted
//! pattern = kmn                 # kmn | book
//! p_grid = 0.40:0.60:0.02       # start:stop:step, or an explicit list 0.4, 0.5, 0.6
//! trials = 100
//! seed = 12345
//! ```
//!
//! Optional keys: `sampling` (`raw` | `halved`, default halved for
//! weak containment and raw otherwise), `vertices` (overrides
//! `floor(c 2^m n)`), `refute_trials` (default 128).
//!
//! Row `i`, trial `t` runs on stream `RngStream::new(seed, 0).child(i).child(t)`,
//! so the output is a function of the config alone.

use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;

use super::event::{Estimate, EventSpec, Sampling, DEFAULT_CONFIDENCE};
use crate::analytic::ramsey_window_N;
use crate::arrows::DEFAULT_REFUTE_TRIALS;
use crate::error::{check_probability, LabError, Result};
use crate::rng::RngStream;
use crate::witness::PatternKind;

pub const DEFAULT_TRIALS: u64 = 100;
pub const CSV_HEADER: &str = "p,trials,successes,p_hat,ci_low,ci_high,seed";

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub c: f64,
    pub m: usize,
    pub n: usize,
    pub event: EventSpec,
    /// Ascending grid of probabilities.
    pub p_grid: Vec<f64>,
    pub trials: u64,
    pub seed: u64,
    pub vertices: Option<usize>,
}

impl SweepConfig {
    pub fn vertex_count(&self) -> Result<usize> {
        match self.vertices {
            Some(v) => Ok(v),
            None => ramsey_window_N(self.c, self.m, self.n),
        }
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut c = None;
        let mut m = None;
        let mut n = None;
        let mut event = None;
        let mut pattern = PatternKind::CompleteBipartite;
        let mut pattern_given = false;
        let mut sampling = None;
        let mut grid = None;
        let mut trials = DEFAULT_TRIALS;
        let mut seed = None;
        let mut vertices = None;
        let mut refute_trials = DEFAULT_REFUTE_TRIALS;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| LabError::Parse { line: line_no, message };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err(format!("expected `key = value`, found `{line}`")))?;
            let (key, value) = (key.trim(), value.trim());
            let num = |v: &str| -> Result<f64> {
                v.parse::<f64>().map_err(|_| err(format!("`{key}`: `{v}` is not a number")))
            };
            let int = |v: &str| -> Result<u64> {
                v.parse::<u64>().map_err(|_| err(format!("`{key}`: `{v}` is not a non-negative integer")))
            };
            match key {
                "c" => c = Some(num(value)?),
                "m" => m = Some(int(value)? as usize),
                "n" => n = Some(int(value)? as usize),
                "event" => event = Some(value.to_string()),
                "pattern" => {
                    pattern = value.parse().map_err(|e: LabError| err(e.to_string()))?;
                    pattern_given = true;
                }
                "sampling" => {
                    sampling = Some(match value {
                        "raw" => Sampling::Raw,
                        "halved" => Sampling::Halved,
                        other => return Err(err(format!("unknown sampling `{other}`"))),
                    })
                }
                "p_grid" => grid = Some(parse_grid(value).map_err(|e| err(e.to_string()))?),
                "trials" => trials = int(value)?,
                "seed" => seed = Some(int(value)?),
                "vertices" => vertices = Some(int(value)? as usize),
                "refute_trials" => refute_trials = int(value)? as usize,
                other => return Err(err(format!("unknown key `{other}`"))),
            }
        }

        let missing = |k: &str| LabError::invalid(format!("sweep config is missing `{k}`"));
        let c = c.ok_or_else(|| missing("c"))?;
        let m = m.ok_or_else(|| missing("m"))?;
        let n = n.ok_or_else(|| missing("n"))?;
        let event_name = event.ok_or_else(|| missing("event"))?;
        let p_grid = grid.ok_or_else(|| missing("p_grid"))?;
        let seed = seed.ok_or_else(|| missing("seed"))?;

        let mut event = match event_name.as_str() {
            "weak-containment" => EventSpec::weak_containment(pattern, m, n),
            "weak-containment-kmn" => EventSpec::weak_containment(PatternKind::CompleteBipartite, m, n),
            "weak-containment-book" => EventSpec::weak_containment(PatternKind::Book, m, n),
            "arrow-certificate" | "arrow-certificate-kmn" => {
                if pattern_given && pattern != PatternKind::CompleteBipartite {
                    return Err(LabError::invalid("arrow-certificate only supports pattern = kmn"));
                }
                EventSpec::arrow_certificate(m, n)
            }
            "arrow-refuted" | "arrow-refuted-by-halving" => EventSpec::arrow_refuted(pattern, m, n),
            other => return Err(LabError::invalid(format!("unknown event `{other}`"))),
        }
        .with_refute_trials(refute_trials);
        if let Some(s) = sampling {
            event = event.with_sampling(s);
        }

        let config = SweepConfig {
            c,
            m,
            n,
            event,
            p_grid,
            trials,
            seed,
            vertices,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        self.event.validate()?;
        if self.trials == 0 {
            return Err(LabError::invalid("trials must be >= 1"));
        }
        if self.p_grid.is_empty() {
            return Err(LabError::invalid("p_grid is empty"));
        }
        for &p in &self.p_grid {
            check_probability(p)?;
        }
        if self.vertices.is_none() {
            ramsey_window_N(self.c, self.m, self.n)?;
        }
        Ok(())
    }
}

/// `start:stop:step` (inclusive of `stop` up to rounding) or a comma list.
/// The result is sorted ascending.
pub fn parse_grid(text: &str) -> Result<Vec<f64>> {
    let bad = |what: &str| LabError::invalid(format!("bad p_grid `{text}`: {what}"));
    let mut grid: Vec<f64> = if text.contains(':') {
        let parts: Vec<f64> = text
            .split(':')
            .map(|s| s.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad("expected numbers"))?;
        let [start, stop, step] = parts[..] else {
            return Err(bad("expected start:stop:step"));
        };
        if step.is_nan() || step <= 0.0 || stop < start {
            return Err(bad("need step > 0 and stop >= start"));
        }
        let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
        (0..count)
            .map(|i| ((start + i as f64 * step) * 1e12).round() / 1e12)
            .collect()
    } else {
        text.split(',')
            .map(|s| s.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad("expected a comma-separated list of numbers"))?
    };
    if grid.iter().any(|p| !p.is_finite()) {
        return Err(bad("non-finite value"));
    }
    grid.sort_by(f64::total_cmp);
    Ok(grid)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub p: f64,
    pub estimate: Estimate,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let e = &r.estimate;
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                format_significant(r.p, 6),
                e.trials,
                e.successes,
                format_significant(e.p_hat, 6),
                format_significant(e.ci_low, 6),
                format_significant(e.ci_high, 6),
                r.seed
            );
        }
        out
    }
}

/// Runs every grid point. Rows and trials are spread over the current rayon
/// pool; the result does not depend on the pool size.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepResult> {
    config.validate()?;
    let vertex_count = config.vertex_count()?;
    let root = RngStream::new(config.seed, 0);
    let jobs: Vec<(usize, u64)> = (0..config.p_grid.len())
        .flat_map(|row| (0..config.trials).map(move |t| (row, t)))
        .collect();
    let outcomes: Vec<bool> = jobs
        .par_iter()
        .map(|&(row, t)| {
            let stream = root.child(row as u64).child(t);
            config.event.run_trial(vertex_count, config.p_grid[row], &stream)
        })
        .collect::<Result<_>>()?;

    let rows = config
        .p_grid
        .iter()
        .enumerate()
        .map(|(row, &p)| {
            let start = row * config.trials as usize;
            let successes = outcomes[start..start + config.trials as usize]
                .iter()
                .filter(|&&hit| hit)
                .count() as u64;
            Ok(SweepRow {
                p,
                estimate: Estimate::from_counts(successes, config.trials, DEFAULT_CONFIDENCE)?,
                seed: config.seed,
            })
        })
        .collect::<Result<_>>()?;
    Ok(SweepResult { rows })
}

/// Env var capping the worker count.
pub const THREADS_ENV: &str = "RAMSEY_LAB_THREADS";

/// Worker count from `RAMSEY_LAB_THREADS`, if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

/// Runs `f` inside a dedicated rayon pool with `workers` threads (the rayon
/// default when `None`).
pub fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = workers {
        builder = builder.num_threads(w);
    }
    let pool = builder
        .build()
        .map_err(|e| LabError::invalid(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}

/// Decimal rendering with `digits` significant digits (`0` for zero).
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let render = |magnitude: i32| {
        let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
        format!("{x:.decimals$}")
    };
    let magnitude = x.abs().log10().floor() as i32;
    let s = render(magnitude);
    // Rounding can carry into the next power of ten (0.9999996 -> 1.000000).
    let rounded: f64 = s.parse().unwrap_or(x);
    if rounded != 0.0 && (rounded.abs().log10().floor() as i32) > magnitude {
        render(magnitude + 1)
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::event::EventKind;

    const BASE: &str = "c = 2\nm = 1\nn = 3\nevent = weak-containment\npattern = kmn\n\
                        p_grid = 0.2, 0.6, 1.0\ntrials = 50\nseed = 7\n";

    #[test]
    fn parses_full_config() {
        let cfg = SweepConfig::parse(BASE).unwrap();
        assert_eq!(cfg.vertex_count().unwrap(), 12);
        assert_eq!(cfg.p_grid, vec![0.2, 0.6, 1.0]);
        assert_eq!(cfg.event.sampling, Sampling::Halved);
        assert_eq!(cfg.event.kind, EventKind::WeakContainment(PatternKind::CompleteBipartite));
        assert_eq!(cfg.trials, 50);
        assert_eq!(cfg.seed, 7);
    }

    #[test]
    fn optional_keys() {
        let text = format!("{BASE}sampling = raw\nvertices = 5\nrefute_trials = 3 # comment\n");
        let cfg = SweepConfig::parse(&text).unwrap();
        assert_eq!(cfg.vertex_count().unwrap(), 5);
        assert_eq!(cfg.event.sampling, Sampling::Raw);
        assert_eq!(cfg.event.refute_trials, 3);
    }

    #[test]
    fn rejects_malformed_config() {
        assert!(SweepConfig::parse("c = 2\n").is_err());
        assert!(SweepConfig::parse(&BASE.replace("p_grid = 0.2, 0.6, 1.0", "p_grid = 0.2, 1.6")).is_err());
        assert!(SweepConfig::parse(&BASE.replace("event = weak-containment", "event = nope")).is_err());
        assert!(SweepConfig::parse(&format!("{BASE}bogus = 1\n")).is_err());
        assert!(SweepConfig::parse(&format!("{BASE}no equals sign\n")).is_err());
        assert!(SweepConfig::parse(&BASE.replace("c = 2", "c = 1")).is_err());
        assert!(SweepConfig::parse(&BASE.replace("trials = 50", "trials = 0")).is_err());
        assert!(SweepConfig::parse(&BASE.replace("pattern = kmn", "pattern = book"))
            .map(|c| c.event.kind)
            .is_ok());
        let cert = BASE
            .replace("event = weak-containment", "event = arrow-certificate")
            .replace("pattern = kmn", "pattern = book");
        assert!(SweepConfig::parse(&cert).is_err());
    }

    #[test]
    fn grid_forms() {
        let g = parse_grid("0.40:0.60:0.02").unwrap();
        assert_eq!(g.len(), 11);
        assert_eq!(g[0], 0.4);
        assert_eq!(g[1], 0.42);
        assert_eq!(g[10], 0.6);
        assert_eq!(parse_grid("0.5, 0.1").unwrap(), vec![0.1, 0.5]);
        assert_eq!(parse_grid("0.3:0.3:0.1").unwrap(), vec![0.3]);
        assert!(parse_grid("0.5:0.1:0.1").is_err());
        assert!(parse_grid("0.1:0.5").is_err());
        assert!(parse_grid("0.1:0.5:0").is_err());
        assert!(parse_grid("a, b").is_err());
    }

    #[test]
    fn csv_has_one_row_per_grid_point() {
        let cfg = SweepConfig::parse(BASE).unwrap();
        let csv = run_sweep(&cfg).unwrap().to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines.len(), 4);
        assert!(lines[3].starts_with("1.00000,50,"));
        assert!(lines[1].ends_with(",7"));
    }

    #[test]
    fn same_config_same_bytes() {
        let cfg = SweepConfig::parse(BASE).unwrap();
        let a = with_workers(Some(1), || run_sweep(&cfg)).unwrap().unwrap().to_csv();
        let b = with_workers(Some(3), || run_sweep(&cfg)).unwrap().unwrap().to_csv();
        let c = run_sweep(&cfg).unwrap().to_csv();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(0.4, 6), "0.400000");
        assert_eq!(format_significant(1.0, 6), "1.00000");
        assert_eq!(format_significant(0.963_006_501_793, 6), "0.963007");
        assert_eq!(format_significant(0.036_993_498, 6), "0.0369935");
        assert_eq!(format_significant(0.999_999_6, 6), "1.00000");
        assert_eq!(format_significant(0.0, 6), "0");
        assert_eq!(format_significant(123.456_789, 6), "123.457");
    }
}
