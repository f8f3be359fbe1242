//! Length-k tuples of exact rationals in [0,1] — the elements of Dom(M).

use crate::rational::{fmt_q, Q};
use num_traits::Zero;

/// An uncertainty degree tuple. The derived `Ord` is plain lexicographic
/// component order and is used only as a canonical map/set key; the model
/// order (score, then lexicographic) lives on `Model::compare`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Degree(Vec<Q>);

impl Degree {
    pub fn new(components: Vec<Q>) -> Self {
        Degree(components)
    }

    pub fn zero(k: usize) -> Self {
        Degree(vec![Q::zero(); k])
    }

    pub fn one(k: usize) -> Self {
        Degree(vec![Q::from_integer(1.into()); k])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Q] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn component_min(&self, other: &Degree) -> Degree {
        Degree(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| if a <= b { a.clone() } else { b.clone() })
                .collect(),
        )
    }

    pub fn component_max(&self, other: &Degree) -> Degree {
        Degree(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| if a >= b { a.clone() } else { b.clone() })
                .collect(),
        )
    }

    /// Mean of the components (the default Δ/ω/δ/Φ evaluation).
    pub fn mean(&self) -> Q {
        if self.0.is_empty() {
            return Q::zero();
        }
        let sum: Q = self.0.iter().sum();
        sum / Q::from_integer((self.0.len() as i64).into())
    }

    pub fn render(&self) -> Vec<String> {
        self.0.iter().map(fmt_q).collect()
    }
}

impl std::fmt::Display for Degree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.render().join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_from;

    #[test]
    fn zero_one() {
        assert!(Degree::zero(3).is_zero());
        assert!(!Degree::one(3).is_zero());
        assert_eq!(Degree::one(2).components().len(), 2);
    }

    #[test]
    fn componentwise() {
        let a = Degree::new(vec![q_from(1, 2), q_from(4, 5)]);
        let b = Degree::new(vec![q_from(7, 10), q_from(1, 5)]);
        assert_eq!(
            a.component_min(&b),
            Degree::new(vec![q_from(1, 2), q_from(1, 5)])
        );
        assert_eq!(
            a.component_max(&b),
            Degree::new(vec![q_from(7, 10), q_from(4, 5)])
        );
    }

    #[test]
    fn mean_value() {
        let d = Degree::new(vec![q_from(3, 10), q_from(3, 5), q_from(9, 10)]);
        assert_eq!(d.mean(), q_from(3, 5));
    }
}
