//! Reciprocal judgment matrices and their score-induced Perron priorities.

use crate::error::{input, DecisionError};
use crate::number::UncertainNumber;

/// Square matrix of positive uncertain numbers with unit diagonal and
/// `a[s][r] = a[r][s]^{-1}`. The reciprocity is structural: the lower
/// triangle must be the exact alpha-cut-wise inverse of the upper one.
#[derive(Debug, Clone)]
pub struct JudgmentMatrix {
    entries: Vec<Vec<UncertainNumber>>,
}

impl JudgmentMatrix {
    pub fn new(entries: Vec<Vec<UncertainNumber>>) -> Result<Self, DecisionError> {
        let n = entries.len();
        if n == 0 {
            return Err(input("judgment matrix must have at least one row"));
        }
        if entries.iter().any(|row| row.len() != n) {
            return Err(input("judgment matrix must be square"));
        }
        for (r, row) in entries.iter().enumerate() {
            if row[r] != UncertainNumber::one() {
                return Err(input(format!("diagonal entry ({}, {}) is not 1", r + 1, r + 1)));
            }
        }
        for r in 0..n {
            for s in (r + 1)..n {
                if entries[s][r] != entries[r][s].inverse() {
                    return Err(input(format!(
                        "entries ({}, {}) and ({}, {}) are not reciprocal",
                        r + 1,
                        s + 1,
                        s + 1,
                        r + 1
                    )));
                }
            }
        }
        Ok(JudgmentMatrix { entries })
    }

    /// Build from the free part alone: the strict upper triangle, 0-based.
    /// The diagonal is filled with 1 and the lower triangle with inverses,
    /// so the result is reciprocal by construction.
    pub fn from_upper(
        n: usize,
        upper: &[(usize, usize, UncertainNumber)],
    ) -> Result<Self, DecisionError> {
        if n == 0 {
            return Err(input("judgment matrix must have at least one row"));
        }
        let mut entries = vec![vec![UncertainNumber::one(); n]; n];
        let mut seen = vec![false; n * n];
        for (r, s, value) in upper {
            if *r >= *s {
                return Err(input(format!(
                    "judgment entry ({}, {}) is not in the upper triangle",
                    r + 1,
                    s + 1
                )));
            }
            if *s >= n {
                return Err(input(format!(
                    "judgment entry ({}, {}) is outside a {n}x{n} matrix",
                    r + 1,
                    s + 1
                )));
            }
            if seen[r * n + s] {
                return Err(input(format!("duplicate judgment entry ({}, {})", r + 1, s + 1)));
            }
            seen[r * n + s] = true;
            entries[*s][*r] = value.inverse();
            entries[*r][*s] = value.clone();
        }
        let expected = n * (n - 1) / 2;
        let given = seen.iter().filter(|&&b| b).count();
        if given != expected {
            return Err(input(format!(
                "judgment matrix of size {n} needs {expected} upper-triangle entries, got {given}"
            )));
        }
        Ok(JudgmentMatrix { entries })
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, r: usize, s: usize) -> &UncertainNumber {
        &self.entries[r][s]
    }

    /// The induced crisp reciprocal matrix.
    pub fn score_matrix(&self) -> Vec<Vec<f64>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(UncertainNumber::score).collect())
            .collect()
    }
}

/// Normalized Perron vector of the score matrix: power iteration to 1e-12
/// in the max norm, result scaled to sum 1. The score matrix is strictly
/// positive, so the iteration converges for every valid input; the cap is a
/// refusal, not an answer.
pub fn anp_priorities(matrix: &JudgmentMatrix) -> Result<Vec<f64>, DecisionError> {
    let a = matrix.score_matrix();
    perron_vector(&a)
}

pub(crate) fn perron_vector(a: &[Vec<f64>]) -> Result<Vec<f64>, DecisionError> {
    let n = a.len();
    let mut x = vec![1.0 / n as f64; n];
    for _ in 0..100_000 {
        let mut y = vec![0.0; n];
        for r in 0..n {
            for s in 0..n {
                y[r] += a[r][s] * x[s];
            }
        }
        let total: f64 = y.iter().sum();
        if !(total > 0.0) || !total.is_finite() {
            return Err(input("matrix is not positive enough for power iteration"));
        }
        for v in &mut y {
            *v /= total;
        }
        let step = y
            .iter()
            .zip(&x)
            .map(|(p, q)| (p - q).abs())
            .fold(0.0f64, f64::max);
        x = y;
        if step < 1e-12 {
            let sum: f64 = x.iter().sum();
            for v in &mut x {
                *v /= sum;
            }
            return Ok(x);
        }
    }
    Err(DecisionError::NoConverge(
        "power iteration did not reach 1e-12 within 1e5 steps".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use ugt_core::{q_from, Q};

    fn crisp(n: i64, d: i64) -> UncertainNumber {
        UncertainNumber::crisp(q_from(n, d)).unwrap()
    }

    #[test]
    fn identity_judgments_give_uniform_priorities() {
        let m = JudgmentMatrix::from_upper(
            3,
            &[
                (0, 1, UncertainNumber::one()),
                (0, 2, UncertainNumber::one()),
                (1, 2, UncertainNumber::one()),
            ],
        )
        .unwrap();
        let w = anp_priorities(&m).unwrap();
        for v in &w {
            assert!((v - 1.0 / 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn crisp_two_to_one() {
        let m = JudgmentMatrix::from_upper(2, &[(0, 1, crisp(2, 1))]).unwrap();
        let w = anp_priorities(&m).unwrap();
        assert!((w[0] - 2.0 / 3.0).abs() < 1e-9);
        assert!((w[1] - 1.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn consistent_matrix_recovers_weights() {
        // a_rs = w_r / w_s for w = (1/2, 3/10, 1/5)
        let w = [q_from(1, 2), q_from(3, 10), q_from(1, 5)];
        let mut upper = Vec::new();
        for r in 0..3 {
            for s in (r + 1)..3 {
                upper.push((r, s, UncertainNumber::crisp(&w[r] / &w[s]).unwrap()));
            }
        }
        let m = JudgmentMatrix::from_upper(3, &upper).unwrap();
        let got = anp_priorities(&m).unwrap();
        let want = [0.5, 0.3, 0.2];
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < 1e-9, "{got:?}");
        }
    }

    #[test]
    fn trapezoid_judgments_still_sum_to_one() {
        let wide = UncertainNumber::new(q_from(1, 1), q_from(2, 1), q_from(3, 1), q_from(4, 1)).unwrap();
        let m = JudgmentMatrix::from_upper(2, &[(0, 1, wide)]).unwrap();
        let w = anp_priorities(&m).unwrap();
        assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(w.iter().all(|v| *v > 0.0));
        assert!(w[0] > w[1]);
    }

    #[test]
    fn broken_reciprocity_is_rejected() {
        let one = UncertainNumber::one;
        let bad = vec![
            vec![one(), crisp(2, 1)],
            vec![crisp(2, 1), one()],
        ];
        let err = JudgmentMatrix::new(bad).unwrap_err();
        assert!(err.to_string().contains("not reciprocal"));

        let worse = vec![vec![crisp(2, 1)]];
        assert!(JudgmentMatrix::new(worse).unwrap_err().to_string().contains("diagonal"));
    }

    #[test]
    fn upper_builder_demands_every_pair() {
        let err = JudgmentMatrix::from_upper(3, &[(0, 1, crisp(2, 1))]).unwrap_err();
        assert!(err.to_string().contains("needs 3"));
        let err = JudgmentMatrix::from_upper(2, &[(1, 0, crisp(2, 1))]).unwrap_err();
        assert!(err.to_string().contains("upper triangle"));
    }

    #[test]
    fn reciprocity_with_sloped_sides_needs_the_exact_inverse() {
        let wide = UncertainNumber::new(q_from(1, 1), q_from(2, 1), q_from(3, 1), q_from(4, 1)).unwrap();
        // mirroring the support as a trapezoid is NOT the alpha-cut inverse
        let fake = UncertainNumber::new(q_from(1, 4), q_from(1, 3), q_from(1, 2), q_from(1, 1)).unwrap();
        let bad = vec![
            vec![UncertainNumber::one(), wide.clone()],
            vec![fake, UncertainNumber::one()],
        ];
        assert!(JudgmentMatrix::new(bad).is_err());
        let good = vec![
            vec![UncertainNumber::one(), wide.clone()],
            vec![wide.inverse(), UncertainNumber::one()],
        ];
        assert!(JudgmentMatrix::new(good).is_ok());
    }

    proptest! {
        #[test]
        fn priorities_are_positive_sum_one_and_permutation_equivariant(
            parts in proptest::collection::vec((1i64..9, 1i64..4), 3),
        ) {
            let vals: Vec<Q> = parts.iter().map(|&(n, d)| q_from(n, d)).collect();
            let upper = vec![
                (0, 1, UncertainNumber::crisp(vals[0].clone()).unwrap()),
                (0, 2, UncertainNumber::crisp(vals[1].clone()).unwrap()),
                (1, 2, UncertainNumber::crisp(vals[2].clone()).unwrap()),
            ];
            let m = JudgmentMatrix::from_upper(3, &upper).unwrap();
            let w = anp_priorities(&m).unwrap();
            prop_assert!((w.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
            prop_assert!(w.iter().all(|v| *v > 0.0));

            // swap indices 0 and 2 throughout and compare
            let perm = [2usize, 1, 0];
            let mut swapped = vec![vec![UncertainNumber::one(); 3]; 3];
            for r in 0..3 {
                for s in 0..3 {
                    swapped[perm[r]][perm[s]] = m.entry(r, s).clone();
                }
            }
            let m2 = JudgmentMatrix::new(swapped).unwrap();
            let w2 = anp_priorities(&m2).unwrap();
            for r in 0..3 {
                prop_assert!((w[r] - w2[perm[r]]).abs() <= 1e-12);
            }
        }
    }
}
