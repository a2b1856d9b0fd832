//! Utility/constraint pairs and their preference order.

use std::cmp::Ordering;

use crate::adversarial::slope::SlopeInterval;
use crate::path::FinitePath;
use crate::rational::Rational;

/// The pair `⟨u, ψ⟩` of a finite path: its final utility and the slope
/// interval allowed by all of its prefixes, with the path itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankedPair {
    pub utility: Rational,
    pub constraint: SlopeInterval,
    pub witness: FinitePath,
}

impl RankedPair {
    pub fn new(utility: Rational, constraint: SlopeInterval, witness: FinitePath) -> Self {
        RankedPair {
            utility,
            constraint,
            witness,
        }
    }

    /// Same utility and same constraint.
    pub fn equivalent(&self, other: &RankedPair) -> bool {
        self.utility == other.utility && self.constraint == other.constraint
    }
}

/// `a ⪰ b`: `a` has at least the utility of `b` and a weaker constraint.
pub fn pair_preferred(a: &RankedPair, b: &RankedPair) -> bool {
    a.utility >= b.utility && a.constraint.includes(&b.constraint)
}

/// Canonical order: higher utility first, then by constraint, then by
/// witness.
fn canonical(a: &RankedPair, b: &RankedPair) -> Ordering {
    b.utility
        .cmp(&a.utility)
        .then_with(|| a.constraint.cmp(&b.constraint))
        .then_with(|| a.witness.cmp(&b.witness))
}

/// The `⪰`-maximal elements of `pairs`.
///
/// Of several equivalent maximal pairs only the one with the
/// lexicographically smallest witness is kept, so the result is an
/// antichain. It is returned in canonical order.
pub fn maximal_set(mut pairs: Vec<RankedPair>) -> Vec<RankedPair> {
    pairs.sort_by(canonical);
    pairs.dedup_by(|later, earlier| later.equivalent(earlier));
    let keep: Vec<bool> = pairs
        .iter()
        .enumerate()
        .map(|(i, z)| {
            !pairs
                .iter()
                .enumerate()
                .any(|(j, other)| i != j && pair_preferred(other, z))
        })
        .collect();
    pairs
        .into_iter()
        .zip(keep)
        .filter_map(|(z, k)| k.then_some(z))
        .collect()
}
