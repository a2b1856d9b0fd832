//! The optimal adversarial value and an optimal stationary plan.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::adversarial::decide::{exists_positive_path, Certificate};
use crate::decomposition::first_good_cycle;
use crate::error::{Error, Result};
use crate::fixed_horizon::StationaryPlan;
use crate::graph::WeightedGraph;
use crate::path::Lasso;
use crate::rational::{from_usize, lcm_denominators, Rational};

/// Adds `eta` to every edge weight. Every plan's value moves by `eta · T`.
pub fn shift_weights(graph: &WeightedGraph, eta: &Rational) -> WeightedGraph {
    graph.map_weights(|w| w + eta)
}

/// The rational with the smallest denominator in `[lo, hi]`, provided that
/// denominator is at most `qmax`.
///
/// Descends the Stern-Brocot tree in continued-fraction steps: peel off the
/// integer part, and recurse on the reciprocal interval when no integer fits.
/// Two distinct fractions with denominators at most `qmax` are more than
/// `1/qmax²` apart, so on narrower intervals the answer is unique.
pub fn bounded_denominator_rational(lo: &Rational, hi: &Rational, qmax: u64) -> Result<Rational> {
    fn simplest(lo: &Rational, hi: &Rational) -> Rational {
        let floor = lo.floor();
        if &floor == lo {
            return floor;
        }
        let next = &floor + Rational::one();
        if &next <= hi {
            return next;
        }
        let inner = simplest(&(hi - &floor).recip(), &(lo - &floor).recip());
        floor + inner.recip()
    }
    let none = || Error::NoBoundedRational {
        lo: Box::new(lo.clone()),
        hi: Box::new(hi.clone()),
        qmax,
    };
    if lo > hi || qmax == 0 {
        return Err(none());
    }
    let r = simplest(lo, hi);
    if r.denom() > &BigInt::from(qmax) {
        return Err(none());
    }
    Ok(r)
}

/// Whether some plan from `start` has value at least `threshold`: the value
/// test of the graph shifted by `−threshold / T`.
pub fn decide_at_least(
    graph: &WeightedGraph,
    start: usize,
    horizon: &Rational,
    threshold: &Rational,
) -> Result<Option<Certificate>> {
    if !horizon.is_positive() {
        return Err(Error::NonPositiveHorizon(horizon.clone()));
    }
    let shifted = shift_weights(graph, &(-(threshold / horizon)));
    exists_positive_path(&shifted, start, horizon)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdversarialResult {
    /// `val(G, T)`.
    pub value: Rational,
    /// A simple lasso, i.e. a stationary plan, of that value.
    pub plan: Lasso,
    /// Number of threshold tests run.
    pub probes: usize,
}

/// `val(G, T)` from `start`: the best worst-case expected utility over all
/// distributions with expected stopping time `T`, with an optimal simple
/// lasso.
///
/// Write `T = a/d`, let `D` clear every weight denominator and `W` be the
/// largest absolute weight. The optimum is attained by a simple lasso, and
/// its value times `d·D` is a fraction with denominator at most `|V|` in
/// `[−W·a·D, W·a·D]`. Binary search with threshold tests narrows it to an
/// interval shorter than `1/|V|²`, which isolates it; a final test at the
/// recovered value yields the certificate, and cycle surgery turns the
/// certificate's lasso into a simple one.
///
/// `T = 0` forces stopping at time 0, so the value is 0 and any plan is
/// optimal.
pub fn adversarial_value(
    graph: &WeightedGraph,
    start: usize,
    horizon: &Rational,
) -> Result<AdversarialResult> {
    graph.check_vertex(start)?;
    if horizon.is_negative() {
        return Err(Error::NonPositiveHorizon(horizon.clone()));
    }
    let n = graph.vertex_count();
    if horizon.is_zero() {
        let choices = graph.vertices().map(|v| graph.successors(v)[0].0).collect();
        let plan = StationaryPlan::new(graph, choices)?.lasso_from(start);
        return Ok(AdversarialResult {
            value: Rational::zero(),
            plan,
            probes: 0,
        });
    }

    let a = Rational::from_integer(horizon.numer().clone());
    let d = Rational::from_integer(horizon.denom().clone());
    let weights: Vec<Rational> = graph.edges().map(|e| e.weight).collect();
    let clear = Rational::from_integer(lcm_denominators(&weights));
    let scale = &d * &clear;
    let reach = graph.max_abs_weight() * &a * &clear;

    // decide(x) <=> val >= x / scale; true at lo, false at hi.
    let mut probes = 0;
    let mut decide = |x: &Rational| -> Result<Option<Certificate>> {
        probes += 1;
        decide_at_least(graph, start, horizon, &(x / &scale))
    };
    let mut lo = -reach.clone();
    let mut hi = reach + Rational::one();
    let qmax = from_usize(n);
    let width = (&qmax * &qmax).recip();
    while &hi - &lo >= width {
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        if decide(&mid)?.is_some() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let x = bounded_denominator_rational(&lo, &hi, n as u64)?;
    let value = &x / &scale;
    let certificate = decide(&x)?.expect("the optimum passes its own threshold test");
    let shifted = shift_weights(graph, &(-(&value / horizon)));
    let plan = first_good_cycle(&certificate.lasso, &shifted, &certificate.slope)?;
    debug_assert!(plan.is_simple());
    Ok(AdversarialResult {
        value,
        plan,
        probes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{fig1, fig2, FIG2_DEFAULT_LOOPS};
    use crate::rational::{frac, int};

    #[test]
    fn stern_brocot_recovery() {
        assert_eq!(
            bounded_denominator_rational(&frac(28, 100), &frac(35, 100), 3).unwrap(),
            frac(1, 3)
        );
        assert_eq!(
            bounded_denominator_rational(&frac(37, 10), &frac(41, 10), 1).unwrap(),
            int(4)
        );
        assert_eq!(
            bounded_denominator_rational(&frac(1, 3), &frac(1, 3), 3).unwrap(),
            frac(1, 3)
        );
        assert_eq!(
            bounded_denominator_rational(&frac(-7, 10), &frac(-6, 10), 3).unwrap(),
            frac(-2, 3)
        );
        assert!(bounded_denominator_rational(&frac(1, 5), &frac(1, 5), 3).is_err());
    }

    #[test]
    fn shift_adds_constant() {
        let g = WeightedGraph::from_int_edges(2, &[(0, 1, 2), (1, 0, -1)]).unwrap();
        assert_eq!(shift_weights(&g, &int(0)), g);
        let s = shift_weights(&g, &frac(1, 2));
        assert_eq!(s.weight(0, 1), Some(&frac(5, 2)));
        assert_eq!(s.weight(1, 0), Some(&frac(-1, 2)));
    }

    #[test]
    fn self_loop_line() {
        let g = WeightedGraph::from_int_edges(1, &[(0, 0, -3)]).unwrap();
        for t in [frac(3, 2), int(4), frac(17, 3)] {
            let r = adversarial_value(&g, 0, &t).unwrap();
            assert_eq!(r.value, int(-3) * &t);
            assert!(r.plan.is_simple());
        }
        let shifted = shift_weights(&g, &int(1));
        assert_eq!(
            adversarial_value(&shifted, 0, &int(4)).unwrap().value,
            int(-8)
        );
    }

    #[test]
    fn cycle_beats_exit() {
        let g = fig1(3).unwrap();
        let r = adversarial_value(&g, 0, &int(7)).unwrap();
        assert_eq!(r.value, int(-1));
        assert_eq!(r.plan.to_string(), "0 | 0 1 2 0");
    }

    #[test]
    fn three_loops_value_zero() {
        let g = fig2(FIG2_DEFAULT_LOOPS).unwrap();
        let r = adversarial_value(&g, 0, &int(32)).unwrap();
        assert_eq!(r.value, int(0));
        assert_eq!(r.plan.cycle_weight(&g).unwrap(), int(0));
    }

    #[test]
    fn zero_horizon() {
        let g = fig1(3).unwrap();
        assert_eq!(adversarial_value(&g, 0, &int(0)).unwrap().value, int(0));
        assert!(adversarial_value(&g, 0, &int(-1)).is_err());
    }
}
