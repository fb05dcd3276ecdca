//! Constructive witnesses for the chaotic behaviour of `G_{f_0}`.
//!
//! Each constructor follows a concrete recipe and returns a witness; each
//! witness has a `verify` method that recomputes the relevant distances and
//! orbits instead of trusting the construction.
//!
//! Prefix lengths are derived from a radius `r` as
//! `k0(r) = max(1, ⌈−log10 r⌉)`: two points with equal states whose
//! strategies share their first `k0` terms are closer than `10^{-k0} ≤ r`.
//!
//! Transit witnesses append the target strategy starting from its first term,
//! so after `k0 + k1` steps the orbit sits exactly on the target point.

use alloc::vec::Vec;

use crate::dynamics::{iterate, Negation, Point, Strategy};
use crate::metric::{distance, MetricConfig};
use crate::{Error, Result};

fn check_radius(r: f64) -> Result<()> {
    if r.is_finite() && r > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidRadius(r))
    }
}

/// Smallest `k ≥ 0` with `10^{-k} ≤ r`.
fn decimal_digits(r: f64) -> usize {
    let mut k = libm::ceil(-libm::log10(r)).max(0.0) as usize;
    // log10 may be off by an ulp around exact powers of ten.
    while libm::pow(10.0, -(k as f64)) > r {
        k += 1;
    }
    while k > 0 && libm::pow(10.0, -((k - 1) as f64)) <= r {
        k -= 1;
    }
    k
}

/// Strategy prefix length `k0(r) = max(1, ⌈−log10 r⌉)` that keeps a point
/// inside the ball of radius `r`.
pub fn prefix_length(r: f64) -> Result<usize> {
    check_radius(r)?;
    Ok(decimal_digits(r).max(1))
}

fn check_resolved(k: usize, cfg: &MetricConfig) -> Result<()> {
    if k > cfg.max_resolved_digits() {
        Err(Error::HorizonExceeded {
            needed: k + 2,
            horizon: cfg.horizon(),
        })
    } else {
        Ok(())
    }
}

fn check_available(strategy: &Strategy, needed: usize) -> Result<()> {
    if strategy.len() < needed {
        Err(Error::InsufficientPrefix {
            needed,
            available: strategy.len(),
        })
    } else {
        Ok(())
    }
}

/// A point whose strategy repeats with period `period`, close to a target.
#[derive(Clone, Debug, PartialEq)]
pub struct PeriodicWitness {
    /// Starting state and one period of the strategy.
    pub point: Point,
    pub period: usize,
    pub k0: usize,
    pub distance_to_target: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PeriodicCheck {
    pub distance: f64,
    pub within_epsilon: bool,
    pub returns_to_start: bool,
}

impl PeriodicCheck {
    pub fn passed(&self) -> bool {
        self.within_epsilon && self.returns_to_start
    }
}

impl PeriodicWitness {
    /// The witness with its period repeated to exactly `len` terms.
    pub fn cycled_point(&self, len: usize) -> Point {
        Point::new(self.point.strategy().cycled(len), self.point.state().clone())
            .expect("cycling preserves width")
    }

    pub fn verify(&self, target: &Point, epsilon: f64, cfg: &MetricConfig) -> Result<PeriodicCheck> {
        let len = self.period.max(cfg.horizon()).max(target.strategy().len());
        let extended = self.cycled_point(len + self.period);
        let d = distance(&extended, target, cfg)?;
        let after = iterate(&Negation, &extended, self.period)?;
        Ok(PeriodicCheck {
            distance: d,
            within_epsilon: d < epsilon,
            returns_to_start: after.state() == extended.state()
                && after.strategy().terms()[..len] == extended.strategy().terms()[..len],
        })
    }
}

/// Builds a periodic point of `G_{f_0}` within `epsilon` of `target`.
///
/// The period is the first `k0(epsilon)` terms of the target strategy followed
/// by, in ascending order, every cell those terms leave flipped. Replaying the
/// period therefore toggles each cell an even number of times.
pub fn construct_periodic_point(
    target: &Point,
    epsilon: f64,
    cfg: &MetricConfig,
) -> Result<PeriodicWitness> {
    let k0 = prefix_length(epsilon)?;
    check_resolved(k0, cfg)?;
    check_available(target.strategy(), k0)?;

    let reached = iterate(&Negation, target, k0)?;
    let corrections = reached.state().differing_cells(target.state())?;
    let mut terms: Vec<usize> = target.strategy().terms()[..k0].to_vec();
    terms.extend_from_slice(&corrections);
    let period = terms.len();

    let point = Point::new(Strategy::new(target.width(), terms)?, target.state().clone())?;
    let mut witness = PeriodicWitness {
        point,
        period,
        k0,
        distance_to_target: 0.0,
    };
    let len = period.max(cfg.horizon()).max(target.strategy().len());
    witness.distance_to_target = distance(&witness.cycled_point(len), target, cfg)?;
    Ok(witness)
}

/// A point in ball A whose orbit lands on the centre of ball B.
#[derive(Clone, Debug, PartialEq)]
pub struct TransitWitness {
    pub point: Point,
    pub k0: usize,
    pub k1: usize,
    /// Prefix length implied by `r_B`; used only when validating.
    pub k2: usize,
    pub steps: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TransitCheck {
    pub distance_to_a: f64,
    pub landed: Point,
    pub distance_to_b: f64,
    pub state_matches: bool,
    pub in_ball_a: bool,
    pub in_ball_b: bool,
}

impl TransitCheck {
    pub fn passed(&self) -> bool {
        self.in_ball_a && self.in_ball_b && self.state_matches
    }
}

impl TransitWitness {
    pub fn verify(
        &self,
        a: &Point,
        r_a: f64,
        b: &Point,
        r_b: f64,
        cfg: &MetricConfig,
    ) -> Result<TransitCheck> {
        let distance_to_a = distance(&self.point, a, cfg)?;
        let landed = iterate(&Negation, &self.point, self.steps)?;
        let distance_to_b = distance(&landed, b, cfg)?;
        Ok(TransitCheck {
            distance_to_a,
            distance_to_b,
            state_matches: landed.state() == b.state(),
            in_ball_a: distance_to_a < r_a,
            in_ball_b: distance_to_b < r_b,
            landed,
        })
    }
}

/// Builds a point within `r_a` of `a` whose `G_{f_0}` orbit reaches `b`
/// after `k0 + k1` steps.
///
/// The strategy is the first `k0(r_a)` terms of `a`'s strategy, then the
/// cells that still differ from `b`'s state (ascending), then `b`'s strategy.
pub fn construct_transit_point(
    a: &Point,
    r_a: f64,
    b: &Point,
    r_b: f64,
    cfg: &MetricConfig,
) -> Result<TransitWitness> {
    if a.width() != b.width() {
        return Err(Error::WidthMismatch {
            left: a.width(),
            right: b.width(),
        });
    }
    let k0 = prefix_length(r_a)?;
    let k2 = prefix_length(r_b)?;
    check_resolved(k0, cfg)?;
    check_available(a.strategy(), k0)?;

    let reached = iterate(&Negation, a, k0)?;
    let corrections = reached.state().differing_cells(b.state())?;
    let k1 = corrections.len();

    let mut terms: Vec<usize> = a.strategy().terms()[..k0].to_vec();
    terms.extend_from_slice(&corrections);
    terms.extend_from_slice(b.strategy().terms());
    Ok(TransitWitness {
        point: Point::new(Strategy::new(a.width(), terms)?, a.state().clone())?,
        k0,
        k1,
        k2,
        steps: k0 + k1,
    })
}

/// A neighbour whose orbit separates from the original one.
#[derive(Clone, Debug, PartialEq)]
pub struct SensitivityWitness {
    pub neighbor: Point,
    /// Number of steps after which the two states differ.
    pub divergence_step: usize,
    /// Distance between the two points after `divergence_step` steps.
    pub separation: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SensitivityCheck {
    pub initial_distance: f64,
    pub state_separation: usize,
    pub separation: f64,
}

impl SensitivityCheck {
    pub fn passed(&self, r: f64) -> bool {
        self.initial_distance < r
            && self.state_separation as f64 >= SENSITIVITY_CONSTANT
            && self.separation >= SENSITIVITY_CONSTANT
    }
}

/// Guaranteed orbit separation: one full cell.
pub const SENSITIVITY_CONSTANT: f64 = 1.0;

impl SensitivityWitness {
    pub fn verify(&self, x: &Point, cfg: &MetricConfig) -> Result<SensitivityCheck> {
        let initial_distance = distance(x, &self.neighbor, cfg)?;
        let fx = iterate(&Negation, x, self.divergence_step)?;
        let fy = iterate(&Negation, &self.neighbor, self.divergence_step)?;
        Ok(SensitivityCheck {
            initial_distance,
            state_separation: fx.state().hamming(fy.state())?,
            separation: distance(&fx, &fy, cfg)?,
        })
    }
}

/// Builds a point closer than `r` to `x` whose `G_{f_0}` orbit is at least
/// one cell away from `x`'s orbit at the divergence step.
///
/// With `k = ⌈−log10 r⌉ + 1` (at least 1), the neighbour replaces the term at
/// storage index `k` by the next cell; both orbits then flip different cells
/// at step `k + 1` and stay two cells apart.
pub fn construct_sensitivity_witness(
    x: &Point,
    r: f64,
    cfg: &MetricConfig,
) -> Result<SensitivityWitness> {
    check_radius(r)?;
    let n = x.width();
    if n < 2 {
        return Err(Error::NoDistinctCell);
    }
    let k = decimal_digits(r) + 1;
    if k + 1 > cfg.horizon() {
        return Err(Error::HorizonExceeded {
            needed: k + 1,
            horizon: cfg.horizon(),
        });
    }
    check_available(x.strategy(), k + 1)?;

    let mut terms = x.strategy().terms().to_vec();
    terms[k] = terms[k] % n + 1;
    let neighbor = Point::new(Strategy::new(n, terms)?, x.state().clone())?;

    let divergence_step = k + 1;
    let fx = iterate(&Negation, x, divergence_step)?;
    let fy = iterate(&Negation, &neighbor, divergence_step)?;
    Ok(SensitivityWitness {
        separation: distance(&fx, &fy, cfg)?,
        neighbor,
        divergence_step,
    })
}

/// Smallest proper period `p` of a finite sequence: `p` divides the length,
/// `p < len`, and `s[i] == s[i + p]` throughout. `None` when there is none
/// (including the empty sequence).
pub fn is_periodic_but_finite<T: PartialEq>(terms: &[T]) -> Option<usize> {
    let n = terms.len();
    (1..n)
        .filter(|p| n % p == 0)
        .find(|&p| (0..n - p).all(|i| terms[i] == terms[i + p]))
}
