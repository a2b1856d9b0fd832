//! Slope intervals: the set of `M` satisfying a conjunction of constraints
//! `u ≥ M·(t − T)`.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::rational::{from_u64, Rational};

/// A closed interval of slopes, `None` bounds being infinite.
///
/// Infeasible intervals are normalised to a single representation so that
/// equality is semantic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SlopeInterval {
    feasible: bool,
    lower: Option<Rational>,
    upper: Option<Rational>,
}

impl SlopeInterval {
    /// The whole line.
    pub fn full() -> Self {
        SlopeInterval {
            feasible: true,
            lower: None,
            upper: None,
        }
    }

    pub fn infeasible() -> Self {
        SlopeInterval {
            feasible: false,
            lower: None,
            upper: None,
        }
    }

    /// `[lower, upper]`; empty bounds are infinite.
    pub fn new(lower: Option<Rational>, upper: Option<Rational>) -> Self {
        match (&lower, &upper) {
            (Some(l), Some(u)) if l > u => Self::infeasible(),
            _ => SlopeInterval {
                feasible: true,
                lower,
                upper,
            },
        }
    }

    pub fn at_least(lower: Rational) -> Self {
        Self::new(Some(lower), None)
    }

    pub fn at_most(upper: Rational) -> Self {
        Self::new(None, Some(upper))
    }

    pub fn is_feasible(&self) -> bool {
        self.feasible
    }

    pub fn lower(&self) -> Option<&Rational> {
        self.lower.as_ref()
    }

    pub fn upper(&self) -> Option<&Rational> {
        self.upper.as_ref()
    }

    pub fn contains(&self, m: &Rational) -> bool {
        self.feasible
            && self.lower.as_ref().is_none_or(|l| l <= m)
            && self.upper.as_ref().is_none_or(|u| m <= u)
    }

    /// Conjunction of the two constraints.
    pub fn intersect(&self, other: &SlopeInterval) -> SlopeInterval {
        if !self.feasible || !other.feasible {
            return Self::infeasible();
        }
        let lower = match (&self.lower, &other.lower) {
            (Some(a), Some(b)) => Some(a.max(b).clone()),
            (a, b) => a.clone().or_else(|| b.clone()),
        };
        let upper = match (&self.upper, &other.upper) {
            (Some(a), Some(b)) => Some(a.min(b).clone()),
            (a, b) => a.clone().or_else(|| b.clone()),
        };
        Self::new(lower, upper)
    }

    /// Whether every slope allowed by `other` is allowed by `self`.
    pub fn includes(&self, other: &SlopeInterval) -> bool {
        if !other.feasible {
            return true;
        }
        if !self.feasible {
            return false;
        }
        let lower_ok = match (&self.lower, &other.lower) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(a), Some(b)) => a <= b,
        };
        let upper_ok = match (&self.upper, &other.upper) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(a), Some(b)) => a >= b,
        };
        lower_ok && upper_ok
    }

    /// Largest slope in the interval that is at most `cap`, if any.
    pub fn highest_at_most(&self, cap: &Rational) -> Option<Rational> {
        if !self.feasible || self.lower.as_ref().is_some_and(|l| l > cap) {
            return None;
        }
        Some(match &self.upper {
            Some(u) if u < cap => u.clone(),
            _ => cap.clone(),
        })
    }
}

impl fmt::Display for SlopeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.feasible {
            return write!(f, "empty");
        }
        match &self.lower {
            Some(l) => write!(f, "[{l}, ")?,
            None => write!(f, "(-inf, ")?,
        }
        match &self.upper {
            Some(u) => write!(f, "{u}]"),
            None => write!(f, "+inf)"),
        }
    }
}

/// Slopes `M` with `u ≥ M·(t − T)`.
pub fn slope_constraint(u: &Rational, t: u64, horizon: &Rational) -> SlopeInterval {
    let offset = from_u64(t) - horizon;
    if offset.is_zero() {
        if u.is_negative() {
            SlopeInterval::infeasible()
        } else {
            SlopeInterval::full()
        }
    } else if offset.is_negative() {
        SlopeInterval::at_least(u / offset)
    } else {
        SlopeInterval::at_most(u / offset)
    }
}

/// Conjunction of [`slope_constraint`] over `u_0, u_1, …` read at times
/// `t0, t0 + 1, …`.
pub fn path_constraint<'a>(
    utilities: impl IntoIterator<Item = &'a Rational>,
    t0: u64,
    horizon: &Rational,
) -> SlopeInterval {
    utilities
        .into_iter()
        .zip(t0..)
        .fold(SlopeInterval::full(), |acc, (u, t)| {
            acc.intersect(&slope_constraint(u, t, horizon))
        })
}
