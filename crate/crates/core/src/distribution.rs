//! Stopping-time distributions with finite support.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::path::{LassoUtilities, UtilitySequence};
use crate::rational::{from_u64, Rational};

/// A finite-support sub-distribution over stopping times.
///
/// Support times are strictly increasing and every probability is positive;
/// the total mass lies in `(0, 1]`. Use [`StoppingDistribution::new`] to also
/// require mass exactly 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StoppingDistribution {
    points: Vec<(u64, Rational)>,
}

impl StoppingDistribution {
    /// A distribution: total mass must be exactly 1.
    pub fn new(points: Vec<(u64, Rational)>) -> Result<Self> {
        let d = Self::sub(points)?;
        let mass = d.mass();
        if !mass.is_one() {
            let deficit = Rational::one() - &mass;
            return Err(Error::MassNotOne {
                mass: Box::new(mass),
                deficit: Box::new(deficit),
            });
        }
        Ok(d)
    }

    /// A sub-distribution: total mass in `(0, 1]`.
    pub fn sub(points: Vec<(u64, Rational)>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyDistribution);
        }
        for w in points.windows(2) {
            if w[1].0 <= w[0].0 {
                return Err(Error::UnsortedSupport(w[1].0));
            }
        }
        if let Some((time, p)) = points.iter().find(|(_, p)| !p.is_positive()) {
            return Err(Error::NonPositiveProbability {
                time: *time,
                probability: p.clone(),
            });
        }
        let d = StoppingDistribution { points };
        let mass = d.mass();
        if mass > Rational::one() {
            return Err(Error::MassAboveOne(mass));
        }
        Ok(d)
    }

    pub fn dirac(t: u64) -> Self {
        StoppingDistribution {
            points: vec![(t, Rational::one())],
        }
    }

    pub fn points(&self) -> &[(u64, Rational)] {
        &self.points
    }

    pub fn support(&self) -> impl Iterator<Item = u64> + '_ {
        self.points.iter().map(|(t, _)| *t)
    }

    pub fn max_time(&self) -> u64 {
        self.points.last().unwrap().0
    }

    /// `p_δ`.
    pub fn mass(&self) -> Rational {
        self.points.iter().map(|(_, p)| p).sum()
    }

    /// `E_δ`, normalised by the mass.
    pub fn expected_time(&self) -> Rational {
        self.expectation(from_u64)
    }

    /// `(1/p_δ) · Σ f(t) δ(t)`.
    pub fn expectation(&self, mut f: impl FnMut(u64) -> Rational) -> Rational {
        let mut total = Rational::zero();
        for (t, p) in &self.points {
            total += f(*t) * p;
        }
        total / self.mass()
    }
}

/// Something that assigns a utility to every stopping time it covers.
pub trait Utilities {
    fn utility(&self, t: u64) -> Result<Rational>;
}

impl Utilities for UtilitySequence {
    fn utility(&self, t: u64) -> Result<Rational> {
        self.get(t).cloned()
    }
}

impl Utilities for LassoUtilities {
    fn utility(&self, t: u64) -> Result<Rational> {
        Ok(self.at(t))
    }
}

/// `E_δ(u)`.
pub fn expected_utility(seq: &impl Utilities, dist: &StoppingDistribution) -> Result<Rational> {
    let mut total = Rational::zero();
    for (t, p) in dist.points() {
        total += seq.utility(*t)? * p;
    }
    Ok(total / dist.mass())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn seq(values: &[i64]) -> UtilitySequence {
        UtilitySequence::from_values(values.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn two_point_expectation() {
        let d = StoppingDistribution::new(vec![(1, frac(1, 2)), (3, frac(1, 2))]).unwrap();
        assert_eq!(expected_utility(&seq(&[0, 1, 2, 3]), &d).unwrap(), int(2));
        assert_eq!(d.expected_time(), int(2));
    }

    #[test]
    fn dirac_reads_single_value() {
        let u = seq(&[0, 4, -3, 8]);
        for t in 0..4 {
            assert_eq!(
                expected_utility(&u, &StoppingDistribution::dirac(t)).unwrap(),
                u.values()[t as usize]
            );
        }
    }

    #[test]
    fn sub_distribution_is_normalised() {
        let d = StoppingDistribution::sub(vec![(2, frac(1, 2))]).unwrap();
        assert_eq!(expected_utility(&seq(&[0, 4, 6]), &d).unwrap(), int(6));
        assert!(matches!(
            StoppingDistribution::new(vec![(2, frac(1, 2))]),
            Err(Error::MassNotOne { .. })
        ));
    }

    #[test]
    fn support_beyond_sequence_is_an_error() {
        let d = StoppingDistribution::dirac(5);
        assert_eq!(
            expected_utility(&seq(&[0, 1]), &d).unwrap_err(),
            Error::SequenceTooShort { time: 5, len: 2 }
        );
    }

    #[test]
    fn validation() {
        assert_eq!(
            StoppingDistribution::new(vec![]).unwrap_err(),
            Error::EmptyDistribution
        );
        assert_eq!(
            StoppingDistribution::new(vec![(2, frac(1, 2)), (2, frac(1, 2))]).unwrap_err(),
            Error::UnsortedSupport(2)
        );
        assert!(matches!(
            StoppingDistribution::new(vec![(1, int(0)), (2, int(1))]),
            Err(Error::NonPositiveProbability { time: 1, .. })
        ));
        assert!(matches!(
            StoppingDistribution::sub(vec![(1, int(1)), (2, int(1))]),
            Err(Error::MassAboveOne(_))
        ));
        match StoppingDistribution::new(vec![(1, frac(1, 3))]).unwrap_err() {
            Error::MassNotOne { deficit, .. } => assert_eq!(*deficit, frac(2, 3)),
            e => panic!("unexpected {e}"),
        }
    }
}
