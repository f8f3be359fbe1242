//! Trapezoidal fuzzy intervals and the tolerance graph built from them.

use crate::error::ConstructError;
use num_traits::Zero;
use ugt_core::{fmt_q, q_one, q_zero, Degree, Graph, Model, Q};

/// Trapezoid with breakpoints a <= b <= c <= d: support [a, d], core [b, c].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyInterval {
    a: Q,
    b: Q,
    c: Q,
    d: Q,
}

impl FuzzyInterval {
    pub fn new(a: Q, b: Q, c: Q, d: Q) -> Result<Self, ConstructError> {
        if !(a <= b && b <= c && c <= d) {
            return Err(ConstructError::Input(format!(
                "trapezoid breakpoints must be ordered a <= b <= c <= d, got [{}, {}, {}, {}]",
                fmt_q(&a),
                fmt_q(&b),
                fmt_q(&c),
                fmt_q(&d)
            )));
        }
        Ok(FuzzyInterval { a, b, c, d })
    }

    pub fn breakpoints(&self) -> (&Q, &Q, &Q, &Q) {
        (&self.a, &self.b, &self.c, &self.d)
    }

    pub fn support_len(&self) -> Q {
        &self.d - &self.a
    }

    pub fn core_len(&self) -> Q {
        &self.c - &self.b
    }

    /// Length of core(self) ∩ core(other); intersecting trapezoids pointwise
    /// keeps cores and supports interval-valued, so overlap is closed-form.
    pub fn core_overlap(&self, other: &Self) -> Q {
        seg_overlap(&self.b, &self.c, &other.b, &other.c)
    }

    /// Length of support(self) ∩ support(other).
    pub fn support_overlap(&self, other: &Self) -> Q {
        seg_overlap(&self.a, &self.d, &other.a, &other.d)
    }
}

fn seg_overlap(lo1: &Q, hi1: &Q, lo2: &Q, hi2: &Q) -> Q {
    let lo = lo1.clone().max(lo2.clone());
    let hi = hi1.clone().min(hi2.clone());
    if hi > lo {
        hi - lo
    } else {
        q_zero()
    }
}

/// Fuzzy tolerance graph on trapezoidal intervals. Vertices v1..vn carry
/// membership 1; the pair {vi, vj} gets membership 1 when the core overlap
/// reaches the smaller core tolerance, otherwise the support-overlap ratio
/// (capped at 1) when it reaches the smaller support tolerance, otherwise 0.
pub fn tolerance_graph(
    intervals: &[FuzzyInterval],
    tolerances: &[FuzzyInterval],
) -> Result<Graph, ConstructError> {
    if intervals.len() != tolerances.len() {
        return Err(ConstructError::Input(format!(
            "{} intervals but {} tolerances",
            intervals.len(),
            tolerances.len()
        )));
    }
    for (i, t) in tolerances.iter().enumerate() {
        if t.core_len().is_zero() {
            return Err(ConstructError::Input(format!(
                "tolerance {} has an empty core",
                i + 1
            )));
        }
    }

    let n = intervals.len();
    let vertices = (0..n)
        .map(|i| (format!("v{}", i + 1), Degree::new(vec![q_one()])))
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mu = pair_membership(
                &intervals[i],
                &intervals[j],
                &tolerances[i],
                &tolerances[j],
            );
            if !mu.is_zero() {
                edges.push((
                    format!("v{}", i + 1),
                    format!("v{}", j + 1),
                    Degree::new(vec![mu]),
                ));
            }
        }
    }
    Ok(Graph::new(Model::fuzzy(), vertices, edges)?)
}

fn pair_membership(ii: &FuzzyInterval, ij: &FuzzyInterval, ti: &FuzzyInterval, tj: &FuzzyInterval) -> Q {
    let core_tol = ti.core_len().min(tj.core_len());
    if ii.core_overlap(ij) >= core_tol {
        return q_one();
    }
    let supp_tol = ti.support_len().min(tj.support_len());
    let overlap = ii.support_overlap(ij);
    if !supp_tol.is_zero() && overlap >= supp_tol {
        // the branch condition forces overlap/supp_tol >= 1, so the cap
        // keeps the membership inside [0,1]
        (overlap / supp_tol).min(q_one())
    } else {
        q_zero()
    }
}
