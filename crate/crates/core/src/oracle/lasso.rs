//! Closed-form adversarial values of single lassos, and the two-point and
//! general-distribution probes they are checked against.

use num_traits::{Signed, Zero};

use crate::distribution::{expected_utility, StoppingDistribution};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::path::{Lasso, LassoUtilities};
use crate::rational::{ceil_nat, floor_nat, from_u64, Rational};

/// Adversarial value of one lasso, with the supporting line that realises it:
/// `value = u_{t1} + (T − t1)·ν`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LassoValue {
    pub value: Rational,
    /// Whether some distribution with expected time `T` achieves the value.
    pub attained: bool,
    pub t1: u64,
    pub nu: Rational,
    /// The infimum slope is the cycle mean, approached but never reached.
    pub limit_used: bool,
}

fn check_horizon(horizon: &Rational) -> Result<()> {
    if horizon.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositiveHorizon(horizon.clone()))
    }
}

fn slope(u: &LassoUtilities, t1: u64, t2: u64) -> Rational {
    (u.at(t2) - u.at(t1)) / from_u64(t2 - t1)
}

/// `min_{t1 ≤ T} u_{t1} + (T − t1)·ν(t1)`, `ν(t1)` being the infimum slope
/// from `(t1, u_{t1})` to points at or after `T`.
///
/// For `t2` past the stem, the slope to the `n`-th repetition of a cycle
/// position is a monotone function of `n` tending to the cycle mean, so the
/// infimum is either a slope to a point of the window
/// `[max(⌈T⌉, t1 + 1), max(⌈T⌉, t1 + 1, |A|) + |C|]` or the cycle mean
/// itself. The latter is a limit: the adversary pushes mass ever further out.
/// Among minimising `t1` the steepest line wins, then the smallest `t1`;
/// the value counts as attained if any minimiser attains it.
pub fn lasso_value(lasso: &Lasso, graph: &WeightedGraph, horizon: &Rational) -> Result<LassoValue> {
    check_horizon(horizon)?;
    let u = lasso.utilities(graph)?;
    let mean = u.cycle_mean();
    let stem = u.stem_len() as u64;
    let cycle = u.cycle_len() as u64;
    let ceil = ceil_nat(horizon);
    let integral = horizon.is_integer();
    let mut best: Option<LassoValue> = None;
    for t1 in 0..=floor_nat(horizon) {
        let lo = ceil.max(t1 + 1);
        let hi = lo.max(stem) + cycle;
        let finite = (lo..=hi).map(|t2| slope(&u, t1, t2)).min().unwrap();
        let dirac = integral && from_u64(t1) == *horizon;
        let attained = dirac || finite <= mean;
        let nu = if finite <= mean { finite } else { mean.clone() };
        let value = u.at(t1) + (horizon - from_u64(t1)) * &nu;
        let candidate = LassoValue {
            value,
            attained,
            t1,
            nu,
            limit_used: !attained,
        };
        match &mut best {
            Some(b) if candidate.value > b.value => {}
            Some(b) if candidate.value == b.value => {
                // Every tied line passes through (T, value); the steepest is
                // the lowest to the left of T, hence the supporting one.
                let attained = b.attained || candidate.attained;
                if candidate.nu > b.nu {
                    *b = candidate;
                }
                b.attained = attained;
                b.limit_used = !attained;
            }
            _ => best = Some(candidate),
        }
    }
    Ok(best.expect("t1 = 0 is always a candidate"))
}

/// Minimum of the expected utility over distributions supported on
/// `{t1, t2}` with `t1 ≤ T ≤ t2 ≤ cap` (plus the Dirac at `T` when `T` is
/// an integer). An upper bound on [`lasso_value`] that tends to it as the
/// cap grows.
pub fn bidirac_value(
    lasso: &Lasso,
    graph: &WeightedGraph,
    horizon: &Rational,
    cap: u64,
) -> Result<Rational> {
    check_horizon(horizon)?;
    let ceil = ceil_nat(horizon);
    if cap < ceil {
        return Err(Error::InvalidParameter(format!(
            "cap {cap} is below the horizon {horizon}"
        )));
    }
    let u = lasso.utilities(graph)?;
    let mut best: Option<Rational> = None;
    let mut offer = |v: Rational| {
        if best.as_ref().is_none_or(|b| v < *b) {
            best = Some(v);
        }
    };
    if horizon.is_integer() {
        offer(u.at(ceil));
    }
    for t1 in 0..=floor_nat(horizon) {
        for t2 in ceil.max(t1 + 1)..=cap {
            let ut1 = u.at(t1);
            offer(&ut1 + (horizon - from_u64(t1)) * slope(&u, t1, t2));
        }
    }
    Ok(best.expect("the window is nonempty"))
}

/// `E_δ(u)` of the lasso for one distribution with `E_δ = T`.
pub fn distribution_value(
    lasso: &Lasso,
    graph: &WeightedGraph,
    horizon: &Rational,
    dist: &StoppingDistribution,
) -> Result<Rational> {
    let actual = dist.expected_time();
    if actual != *horizon {
        return Err(Error::ExpectedTimeMismatch {
            expected: Box::new(horizon.clone()),
            actual: Box::new(actual),
        });
    }
    expected_utility(&lasso.utilities(graph)?, dist)
}

/// Height at `T` of the lower convex hull of `{(t, u_t)}`.
///
/// The hull is built over `0 ..= max(⌈T⌉, |A|) + 2|C|` by a monotone chain
/// and closed on the right by a ray of slope `M_C`.
pub fn convex_hull_value(
    lasso: &Lasso,
    graph: &WeightedGraph,
    horizon: &Rational,
) -> Result<Rational> {
    check_horizon(horizon)?;
    let u = lasso.utilities(graph)?;
    let mean = u.cycle_mean();
    let end = ceil_nat(horizon).max(u.stem_len() as u64) + 2 * u.cycle_len() as u64;
    let slope_of =
        |a: &(Rational, Rational), b: &(Rational, Rational)| (&b.1 - &a.1) / (&b.0 - &a.0);
    let mut hull: Vec<(Rational, Rational)> = Vec::new();
    for t in 0..=end {
        let p = (from_u64(t), u.at(t));
        while hull.len() >= 2 {
            let k = hull.len();
            if slope_of(&hull[k - 2], &hull[k - 1]) >= slope_of(&hull[k - 1], &p) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    while hull.len() >= 2 && slope_of(&hull[hull.len() - 2], &hull[hull.len() - 1]) >= mean {
        hull.pop();
    }
    for w in hull.windows(2) {
        if &w[0].0 <= horizon && horizon <= &w[1].0 {
            return Ok(&w[0].1 + (horizon - &w[0].0) * slope_of(&w[0], &w[1]));
        }
    }
    let last = hull.last().unwrap();
    debug_assert!(&last.0 <= horizon || hull.len() == 1);
    let offset = horizon - &last.0;
    Ok(if offset.is_zero() {
        last.1.clone()
    } else {
        &last.1 + offset * mean
    })
}
