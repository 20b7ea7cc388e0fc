//! Monte Carlo estimation, statistical checks and sweeps.

mod density;
mod event;
mod halving_check;
pub mod stats;
mod sweep;

pub use density::{density_property_check, random_disjoint_pairs, DensityReport, VertexPair};
pub use event::{
    count_successes, estimate_event_prob, Estimate, EventKind, EventSpec, Sampling, DEFAULT_CONFIDENCE,
};
pub use halving_check::{verify_halving_statistical, verify_split_statistical, HalvingReport, MIN_HALVING_SAMPLES};
pub use sweep::{
    format_significant, parse_grid, run_sweep, threads_from_env, with_workers, SweepConfig, SweepResult,
    SweepRow, CSV_HEADER, DEFAULT_TRIALS, THREADS_ENV,
};
