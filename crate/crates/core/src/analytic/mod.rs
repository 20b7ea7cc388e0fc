//! Closed-form threshold quantities, tail bounds, and exact small-case laws.

mod bounds;
mod exact;
mod thresholds;

pub use bounds::{chernoff_tail_bound, exact_binomial_tail, kst_extremal_bound, TailSide};
pub use exact::{
    exact_containment_prob, exact_halving_distribution, MAX_CONTAINMENT_VERTICES,
    MAX_HALVING_VERTICES,
};
pub use thresholds::{
    default_omega, m_min, p_lower, p_upper, p_upper_book, ramsey_window_N, ClampedProbability,
    ThresholdParams, DEFAULT_M_SAFETY_FACTOR,
};
