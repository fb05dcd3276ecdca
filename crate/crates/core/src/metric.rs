//! Distance on the phase space.
//!
//! `d(X, Y) = d_e(E, Ě) + d_s(S, Š)` where `d_e` is the Hamming distance of
//! the states and
//!
//! ```text
//! d_s(S, Š) = 9/N · Σ_{k=1..K} |S_k − Š_k| / 10^k
//! ```
//!
//! The series term `k` reads storage index `k − 1`. Terms past the end of a
//! finite strategy read as the sentinel `0`, which no valid cell uses, so a
//! present term always differs from an absent one.
//!
//! Since every summand is below `9 · 10^{-k}`, truncating at horizon `K`
//! changes `d_s` by less than `10^{-K}`. With the default `K = 16` all
//! comparisons against `10^{-k}` are meaningful for `k ≤ 14`.

use crate::dynamics::{Point, StateVector, Strategy};
use crate::{Error, Result};

/// Number of strategy terms summed by [`strategy_distance`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MetricConfig {
    horizon: usize,
}

impl MetricConfig {
    pub const DEFAULT_HORIZON: usize = 16;

    pub fn new(horizon: usize) -> Result<Self> {
        if horizon == 0 {
            return Err(Error::ZeroCount("metric horizon"));
        }
        Ok(MetricConfig { horizon })
    }

    #[inline]
    pub fn horizon(&self) -> usize {
        self.horizon
    }

    /// Largest `k` for which thresholds of the form `10^{-k}` can be resolved.
    #[inline]
    pub fn max_resolved_digits(&self) -> usize {
        self.horizon.saturating_sub(2)
    }
}

impl Default for MetricConfig {
    fn default() -> Self {
        MetricConfig {
            horizon: Self::DEFAULT_HORIZON,
        }
    }
}

/// Hamming distance `d_e`.
pub fn state_distance(a: &StateVector, b: &StateVector) -> Result<usize> {
    a.hamming(b)
}

/// Strategy distance `d_s`, truncated at `cfg.horizon()` terms.
pub fn strategy_distance(a: &Strategy, b: &Strategy, cfg: &MetricConfig) -> Result<f64> {
    if a.width() != b.width() {
        return Err(Error::WidthMismatch {
            left: a.width(),
            right: b.width(),
        });
    }
    let term = |s: &Strategy, i: usize| s.terms().get(i).copied().unwrap_or(0);
    // Horner from the least significant digit keeps every partial sum in [0, N).
    let mut acc = 0.0f64;
    for i in (0..cfg.horizon).rev() {
        let diff = term(a, i).abs_diff(term(b, i));
        acc = (acc + diff as f64) / 10.0;
    }
    Ok(acc * 9.0 / a.width() as f64)
}

/// Full distance `d = d_e + d_s`.
///
/// The fractional part is kept strictly below one so that the floor of the
/// result is always the Hamming distance of the states, even when `d_s`
/// rounds up to `1.0` in floating point.
pub fn distance(x: &Point, y: &Point, cfg: &MetricConfig) -> Result<f64> {
    let de = state_distance(x.state(), y.state())?;
    let ds = strategy_distance(x.strategy(), y.strategy(), cfg)?;
    let ceiling = (de + 1) as f64;
    let d = de as f64 + ds;
    Ok(if d >= ceiling { ceiling.next_down() } else { d })
}
