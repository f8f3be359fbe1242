//! Positive trapezoidal uncertain numbers, closed under the alpha-cut-wise
//! reciprocal, with a score map used to collapse judgment matrices.

use ugt_core::{q_one, q_to_f64, q_zero, Q};

use crate::error::{input, DecisionError};

/// A positive uncertain number. The breakpoints describe a trapezoid
/// `0 < a <= b <= c <= d`; when `inverted` is set, the number is the
/// alpha-cut-wise reciprocal of that trapezoid instead. The reciprocal of a
/// trapezoid with sloped sides is not a trapezoid (1/linear is not linear),
/// so the flag is what makes the class closed under inversion — and it makes
/// inversion an exact involution, which the reciprocity check on judgment
/// matrices relies on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UncertainNumber {
    a: Q,
    b: Q,
    c: Q,
    d: Q,
    inverted: bool,
}

impl UncertainNumber {
    pub fn new(a: Q, b: Q, c: Q, d: Q) -> Result<Self, DecisionError> {
        if a <= q_zero() {
            return Err(input("uncertain number must have positive support"));
        }
        if a > b || b > c || c > d {
            return Err(input("trapezoid breakpoints must satisfy a <= b <= c <= d"));
        }
        Ok(UncertainNumber { a, b, c, d, inverted: false })
    }

    /// The number concentrated at 1.
    pub fn one() -> Self {
        Self::crisp(q_one()).expect("1 is positive")
    }

    /// A crisp positive value (all four breakpoints equal).
    pub fn crisp(v: Q) -> Result<Self, DecisionError> {
        Self::new(v.clone(), v.clone(), v.clone(), v)
    }

    /// The alpha-cut `[lo, hi]` for `alpha` in `[0, 1]`; alpha = 0 reads as
    /// the support interval, alpha = 1 as the core.
    pub fn alpha_cut(&self, alpha: &Q) -> (Q, Q) {
        assert!(
            *alpha >= q_zero() && *alpha <= q_one(),
            "alpha outside [0, 1]"
        );
        let lo = &self.a + alpha * (&self.b - &self.a);
        let hi = &self.d - alpha * (&self.d - &self.c);
        if self.inverted {
            (hi.recip(), lo.recip())
        } else {
            (lo, hi)
        }
    }

    /// Alpha-cut-wise reciprocal: `[x^{-1}]_alpha = [1/hi, 1/lo]`. When the
    /// sides are vertical (`a = b` and `c = d`) the reciprocal is again a
    /// trapezoid and is returned in plain form, so structurally equal numbers
    /// always compare equal.
    pub fn inverse(&self) -> Self {
        if self.a == self.b && self.c == self.d {
            let lo = self.d.recip();
            let hi = self.a.recip();
            return UncertainNumber {
                a: lo.clone(),
                b: lo,
                c: hi.clone(),
                d: hi,
                inverted: false,
            };
        }
        UncertainNumber {
            a: self.a.clone(),
            b: self.b.clone(),
            c: self.c.clone(),
            d: self.d.clone(),
            inverted: !self.inverted,
        }
    }

    /// Geometric mean of sqrt(lo * hi) over the alpha grid {0, 1/2, 1}.
    /// The grid products are accumulated exactly, so Score(x) * Score(1/x)
    /// is the sixth root of an exact 1 — reciprocity holds to float
    /// round-off, and Score(one) is exactly 1.
    pub fn score(&self) -> f64 {
        let half = Q::new(1.into(), 2.into());
        let mut prod = q_one();
        for alpha in [q_zero(), half, q_one()] {
            let (lo, hi) = self.alpha_cut(&alpha);
            prod *= lo * hi;
        }
        q_to_f64(&prod).powf(1.0 / 6.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use ugt_core::{parse_q, q_from};

    fn num(a: &str, b: &str, c: &str, d: &str) -> UncertainNumber {
        UncertainNumber::new(
            parse_q(a).unwrap(),
            parse_q(b).unwrap(),
            parse_q(c).unwrap(),
            parse_q(d).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn breakpoints_are_checked() {
        assert!(UncertainNumber::new(q_from(0, 1), q_one(), q_one(), q_one()).is_err());
        assert!(UncertainNumber::new(q_from(-1, 2), q_one(), q_one(), q_one()).is_err());
        assert!(UncertainNumber::new(q_one(), q_from(1, 2), q_one(), q_one()).is_err());
    }

    #[test]
    fn alpha_cut_interpolates() {
        let x = num("1", "2", "3", "4");
        assert_eq!(x.alpha_cut(&q_from(0, 1)), (q_from(1, 1), q_from(4, 1)));
        assert_eq!(x.alpha_cut(&q_one()), (q_from(2, 1), q_from(3, 1)));
        assert_eq!(x.alpha_cut(&q_from(1, 2)), (q_from(3, 2), q_from(7, 2)));
    }

    #[test]
    fn inverse_swaps_and_inverts_cuts() {
        let x = num("1", "2", "3", "4");
        let y = x.inverse();
        assert_eq!(y.alpha_cut(&q_from(0, 1)), (q_from(1, 4), q_from(1, 1)));
        // at alpha = 1/2 the cut of x is [3/2, 7/2], so the inverse cut is
        // [2/7, 2/3] — not what any trapezoid through the same support gives
        assert_eq!(y.alpha_cut(&q_from(1, 2)), (q_from(2, 7), q_from(2, 3)));
        assert_eq!(y.inverse(), x);
    }

    #[test]
    fn rectangular_inverse_stays_plain() {
        let x = num("1/2", "1/2", "2", "2");
        let y = x.inverse();
        assert_eq!(y, num("1/2", "1/2", "2", "2"));
        let crisp = UncertainNumber::crisp(q_from(3, 1)).unwrap();
        assert_eq!(crisp.inverse(), UncertainNumber::crisp(q_from(1, 3)).unwrap());
        assert_eq!(crisp.inverse().inverse(), crisp);
    }

    #[test]
    fn one_scores_one_and_crisp_scores_itself() {
        assert_eq!(UncertainNumber::one().score(), 1.0);
        let two = UncertainNumber::crisp(q_from(2, 1)).unwrap();
        assert!((two.score() - 2.0).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn score_reciprocity(parts in proptest::collection::vec((1i64..60, 1i64..12), 4)) {
            let mut qs: Vec<Q> = parts.iter().map(|&(n, d)| q_from(n, d)).collect();
            qs.sort();
            let x = UncertainNumber::new(qs[0].clone(), qs[1].clone(), qs[2].clone(), qs[3].clone()).unwrap();
            let prod = x.score() * x.inverse().score();
            prop_assert!((prod - 1.0).abs() <= 1e-12);
        }
    }
}
