//! Uncertainty models: dimension, per-kind degree constraints, the total
//! order, and the pluggable operator bundle (Ψ, Γ, Δ/ω/δ, Λ, Φ, Λ_line,
//! Dombi conjunction).

use crate::degree::Degree;
use crate::error::CoreError;
use crate::rational::{q_one, q_zero, Q};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModelKind {
    Fuzzy,
    Intuitionistic,
    Neutrosophic,
    Interval,
    Kdim,
}

impl ModelKind {
    pub fn parse(s: &str) -> Result<Self, CoreError> {
        Ok(match s {
            "fuzzy" => ModelKind::Fuzzy,
            "intuitionistic" => ModelKind::Intuitionistic,
            "neutrosophic" => ModelKind::Neutrosophic,
            "interval" => ModelKind::Interval,
            "kdim" => ModelKind::Kdim,
            _ => return Err(CoreError::BadModel(format!("unknown model kind {s:?}"))),
        })
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            ModelKind::Fuzzy => "fuzzy",
            ModelKind::Intuitionistic => "intuitionistic",
            ModelKind::Neutrosophic => "neutrosophic",
            ModelKind::Interval => "interval",
            ModelKind::Kdim => "kdim",
        }
    }

    /// The dimension the kind forces, if any.
    pub fn fixed_dim(&self) -> Option<usize> {
        match self {
            ModelKind::Fuzzy => Some(1),
            ModelKind::Intuitionistic => Some(2),
            ModelKind::Neutrosophic => Some(3),
            ModelKind::Interval => Some(2),
            ModelKind::Kdim => None,
        }
    }
}

/// Edge-vs-vertex constraint rule checked at graph construction.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum ConstraintProfile {
    #[default]
    None,
    FuzzyCap,
    IntuitionisticCap,
    SvnCap,
}

impl ConstraintProfile {
    pub fn parse(s: &str) -> Result<Self, CoreError> {
        Ok(match s {
            "none" => ConstraintProfile::None,
            "fuzzy_cap" => ConstraintProfile::FuzzyCap,
            "intuitionistic_cap" => ConstraintProfile::IntuitionisticCap,
            "svn_cap" => ConstraintProfile::SvnCap,
            _ => return Err(CoreError::BadModel(format!("unknown profile {s:?}"))),
        })
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            ConstraintProfile::None => "none",
            ConstraintProfile::FuzzyCap => "fuzzy_cap",
            ConstraintProfile::IntuitionisticCap => "intuitionistic_cap",
            ConstraintProfile::SvnCap => "svn_cap",
        }
    }
}

/// Scalar evaluation maps Δ/ω/δ/Φ.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum ScalarOp {
    #[default]
    Mean,
    Component(usize),
    Min,
    Max,
}

/// Path strength Ψ.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum PathOp {
    #[default]
    ComponentMin,
    OrderMin,
}

/// Binary combiners (Γ, Λ_line).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CombineOp {
    ComponentMin,
    OrderMin,
    Dombi,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OperatorBundle {
    pub psi: PathOp,
    pub gamma: CombineOp,
    pub delta: ScalarOp,
    pub omega: ScalarOp,
    pub delta_edge: ScalarOp,
    pub phi: ScalarOp,
    pub lambda_line: CombineOp,
}

impl Default for OperatorBundle {
    fn default() -> Self {
        OperatorBundle {
            psi: PathOp::ComponentMin,
            gamma: CombineOp::ComponentMin,
            delta: ScalarOp::Mean,
            omega: ScalarOp::Mean,
            delta_edge: ScalarOp::Mean,
            phi: ScalarOp::Mean,
            lambda_line: CombineOp::OrderMin,
        }
    }
}

/// Which evaluation map `Model::evaluate` should apply.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EvalMap {
    Delta,
    Omega,
    DeltaEdge,
    LambdaLen,
    Phi,
}

/// Which combiner `Model::combine` should apply.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CombineKind {
    CompleteEdge,
    LineAdjacency,
    Dombi,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Model {
    pub kind: ModelKind,
    pub k: usize,
    pub profile: ConstraintProfile,
    pub ops: OperatorBundle,
    pub dombi_lambda: Option<Q>,
}

impl Model {
    pub fn new(
        kind: ModelKind,
        k: usize,
        profile: ConstraintProfile,
        dombi_lambda: Option<Q>,
    ) -> Result<Model, CoreError> {
        if k == 0 {
            return Err(CoreError::BadModel("dimension k must be positive".into()));
        }
        if let Some(fixed) = kind.fixed_dim() {
            if fixed != k {
                return Err(CoreError::BadModel(format!(
                    "kind {} requires k={}, got {}",
                    kind.as_str(),
                    fixed,
                    k
                )));
            }
        }
        if let Some(l) = &dombi_lambda {
            if !l.is_positive() {
                return Err(CoreError::BadModel("dombi_lambda must be > 0".into()));
            }
        }
        match profile {
            ConstraintProfile::IntuitionisticCap if k != 2 => {
                return Err(CoreError::BadModel("intuitionistic_cap needs k=2".into()))
            }
            ConstraintProfile::SvnCap if k != 3 => {
                return Err(CoreError::BadModel("svn_cap needs k=3".into()))
            }
            _ => {}
        }
        let ops = OperatorBundle::default();
        for op in [ops.delta, ops.omega, ops.delta_edge, ops.phi] {
            if let ScalarOp::Component(i) = op {
                if i >= k {
                    return Err(CoreError::BadModel(format!(
                        "scalar op component index {i} out of range for k={k}"
                    )));
                }
            }
        }
        Ok(Model {
            kind,
            k,
            profile,
            ops,
            dombi_lambda,
        })
    }

    pub fn fuzzy() -> Model {
        Model::new(ModelKind::Fuzzy, 1, ConstraintProfile::FuzzyCap, None).unwrap()
    }

    pub fn zero(&self) -> Degree {
        Degree::zero(self.k)
    }

    /// The greatest valid degree under this model's kind constraint.
    /// All-ones except intuitionistic, where mu+nu <= 1 forces (1, 0).
    pub fn one(&self) -> Degree {
        match self.kind {
            ModelKind::Intuitionistic => Degree::new(vec![q_one(), q_zero()]),
            _ => Degree::one(self.k),
        }
    }

    /// Box membership plus the per-kind constraint.
    pub fn check_degree(&self, d: &Degree) -> Result<(), String> {
        if d.dim() != self.k {
            return Err(format!("degree has {} components, model needs {}", d.dim(), self.k));
        }
        for c in d.components() {
            if c.is_negative() || c > &q_one() {
                return Err(format!("component {} outside [0,1]", crate::rational::fmt_q(c)));
            }
        }
        match self.kind {
            ModelKind::Intuitionistic => {
                let sum = &d.components()[0] + &d.components()[1];
                if sum > q_one() {
                    return Err("intuitionistic degree needs mu+nu <= 1".into());
                }
            }
            ModelKind::Interval => {
                if d.components()[0] > d.components()[1] {
                    return Err("interval degree needs lower <= upper".into());
                }
            }
            _ => {}
        }
        Ok(())
    }

    fn scalar(&self, op: ScalarOp, d: &Degree) -> Q {
        match op {
            ScalarOp::Mean => d.mean(),
            ScalarOp::Component(i) => d.components()[i].clone(),
            ScalarOp::Min => d
                .components()
                .iter()
                .min()
                .cloned()
                .unwrap_or_else(q_zero),
            ScalarOp::Max => d
                .components()
                .iter()
                .max()
                .cloned()
                .unwrap_or_else(q_zero),
        }
    }

    /// The score Δ_M used by the total order and by degree/order/size sums.
    pub fn delta(&self, d: &Degree) -> Q {
        self.scalar(self.ops.delta, d)
    }

    /// Vertex-weight evaluation ω_M.
    pub fn omega(&self, d: &Degree) -> Q {
        self.scalar(self.ops.omega, d)
    }

    /// Edge evaluation δ_M (matching capacities, Sombor degrees).
    pub fn delta_edge(&self, d: &Degree) -> Q {
        self.scalar(self.ops.delta_edge, d)
    }

    /// Adjacency evaluation Φ_M.
    pub fn phi(&self, d: &Degree) -> Q {
        self.scalar(self.ops.phi, d)
    }

    pub fn evaluate(&self, map: EvalMap, d: &Degree) -> Result<Q, CoreError> {
        match map {
            EvalMap::Delta => Ok(self.delta(d)),
            EvalMap::Omega => Ok(self.omega(d)),
            EvalMap::DeltaEdge => Ok(self.delta_edge(d)),
            EvalMap::Phi => Ok(self.phi(d)),
            EvalMap::LambdaLen => self.lambda_len(d),
        }
    }

    /// Edge length Λ_M = 1/Δ_M, defined away from 0_M.
    pub fn lambda_len(&self, d: &Degree) -> Result<Q, CoreError> {
        if d.is_zero() {
            return Err(CoreError::LambdaOnZero);
        }
        let score = self.delta(d);
        if score.is_zero() {
            return Err(CoreError::LambdaOnZero);
        }
        Ok(q_one() / score)
    }

    /// The total order ⪯_M: score first, lexicographic tie-break.
    pub fn compare(&self, a: &Degree, b: &Degree) -> Ordering {
        match self.delta(a).cmp(&self.delta(b)) {
            Ordering::Equal => a.components().cmp(b.components()),
            ord => ord,
        }
    }

    pub fn deg_min<'a>(&self, a: &'a Degree, b: &'a Degree) -> &'a Degree {
        if self.compare(a, b) == Ordering::Greater {
            b
        } else {
            a
        }
    }

    pub fn deg_max<'a>(&self, a: &'a Degree, b: &'a Degree) -> &'a Degree {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }

    /// Path strength Ψ_M over a nonempty list of edge degrees.
    pub fn path_strength(&self, degrees: &[Degree]) -> Result<Degree, CoreError> {
        let (first, rest) = degrees.split_first().ok_or(CoreError::EmptyPath)?;
        Ok(match self.ops.psi {
            PathOp::ComponentMin => rest
                .iter()
                .fold(first.clone(), |acc, d| acc.component_min(d)),
            PathOp::OrderMin => rest
                .iter()
                .fold(first.clone(), |acc, d| self.deg_min(&acc, d).clone()),
        })
    }

    fn combine_op(&self, op: CombineOp, a: &Degree, b: &Degree) -> Result<Degree, CoreError> {
        Ok(match op {
            CombineOp::ComponentMin => a.component_min(b),
            CombineOp::OrderMin => self.deg_min(a, b).clone(),
            CombineOp::Dombi => {
                let lambda = self
                    .dombi_lambda
                    .as_ref()
                    .ok_or(CoreError::DombiUnset)?;
                Degree::new(
                    a.components()
                        .iter()
                        .zip(b.components())
                        .map(|(x, y)| dombi_t(lambda, x, y))
                        .collect(),
                )
            }
        })
    }

    pub fn combine(&self, kind: CombineKind, a: &Degree, b: &Degree) -> Result<Degree, CoreError> {
        match kind {
            CombineKind::CompleteEdge => self.combine_op(self.ops.gamma, a, b),
            CombineKind::LineAdjacency => self.combine_op(self.ops.lambda_line, a, b),
            CombineKind::Dombi => self.combine_op(CombineOp::Dombi, a, b),
        }
    }

    /// Γ_M — the complete-edge degree of a vertex pair.
    pub fn gamma(&self, a: &Degree, b: &Degree) -> Degree {
        self.combine_op(self.ops.gamma, a, b)
            .expect("gamma never needs lambda")
    }
}

/// Dombi conjunction with the boundary extension T(0,·)=0. λ=1 stays exact
/// (ab/(a+b−ab)); other λ go through f64 powers and come back as the exact
/// rational value of the computed float.
pub fn dombi_t(lambda: &Q, a: &Q, b: &Q) -> Q {
    if a.is_zero() || b.is_zero() {
        return q_zero();
    }
    if lambda.is_one() {
        let prod = a * b;
        return prod.clone() / (a + b - prod);
    }
    let lf = lambda.to_f64().unwrap_or(1.0);
    let af = a.to_f64().unwrap_or(0.0);
    let bf = b.to_f64().unwrap_or(0.0);
    let x = (1.0 - af) / af;
    let y = (1.0 - bf) / bf;
    let t = 1.0 / (1.0 + (x.powf(lf) + y.powf(lf)).powf(1.0 / lf));
    Q::from_float(t.clamp(0.0, 1.0)).unwrap_or_else(q_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{parse_q, q_from};

    fn deg(parts: &[&str]) -> Degree {
        Degree::new(parts.iter().map(|p| parse_q(p).unwrap()).collect())
    }

    #[test]
    fn kind_dimension_checks() {
        assert!(Model::new(ModelKind::Fuzzy, 1, ConstraintProfile::None, None).is_ok());
        assert!(Model::new(ModelKind::Fuzzy, 2, ConstraintProfile::None, None).is_err());
        assert!(Model::new(ModelKind::Kdim, 5, ConstraintProfile::None, None).is_ok());
        assert!(Model::new(ModelKind::Kdim, 0, ConstraintProfile::None, None).is_err());
        assert!(
            Model::new(ModelKind::Fuzzy, 1, ConstraintProfile::None, Some(q_from(-1, 2)))
                .is_err()
        );
    }

    #[test]
    fn degree_constraints() {
        let intu = Model::new(ModelKind::Intuitionistic, 2, ConstraintProfile::None, None).unwrap();
        assert!(intu.check_degree(&deg(&["7/10", "1/5"])).is_ok());
        // 0.7 + 0.4 > 1
        assert!(intu.check_degree(&deg(&["7/10", "2/5"])).is_err());
        let interval = Model::new(ModelKind::Interval, 2, ConstraintProfile::None, None).unwrap();
        assert!(interval.check_degree(&deg(&["3/5", "2/5"])).is_err());
        assert!(interval.check_degree(&deg(&["2/5", "3/5"])).is_ok());
        let fuzzy = Model::fuzzy();
        assert!(fuzzy.check_degree(&deg(&["3/2"])).is_err());
        assert!(fuzzy.check_degree(&deg(&["1", "1"])).is_err());
    }

    #[test]
    fn order_is_score_then_lex() {
        let m = Model::new(ModelKind::Kdim, 2, ConstraintProfile::None, None).unwrap();
        // equal means, lexicographic tie-break on components
        let a = deg(&["1/2", "1/10"]);
        let b = deg(&["1/10", "1/2"]);
        assert_eq!(m.delta(&a), m.delta(&b));
        assert_eq!(m.compare(&b, &a), Ordering::Less);
        assert_eq!(m.compare(&a, &a), Ordering::Equal);
        let fuzzy = Model::fuzzy();
        assert_eq!(fuzzy.compare(&deg(&["3/10"]), &deg(&["1/2"])), Ordering::Less);
    }

    #[test]
    fn path_strength_componentwise_min() {
        let fuzzy = Model::fuzzy();
        // strength of the five-vertex fixture path: min(0.6, 0.5, 0.4)
        let s = fuzzy
            .path_strength(&[deg(&["3/5"]), deg(&["1/2"]), deg(&["2/5"])])
            .unwrap();
        assert_eq!(s, deg(&["2/5"]));
        assert_eq!(fuzzy.path_strength(&[deg(&["1/4"])]).unwrap(), deg(&["1/4"]));
        assert!(fuzzy.path_strength(&[]).is_err());

        let m2 = Model::new(ModelKind::Kdim, 2, ConstraintProfile::None, None).unwrap();
        let s2 = m2
            .path_strength(&[deg(&["1/2", "4/5"]), deg(&["7/10", "1/5"])])
            .unwrap();
        assert_eq!(s2, deg(&["1/2", "1/5"]));
    }

    #[test]
    fn evaluate_maps() {
        let fuzzy = Model::fuzzy();
        assert_eq!(
            fuzzy.lambda_len(&deg(&["4/5"])).unwrap(),
            q_from(5, 4)
        );
        assert!(fuzzy.lambda_len(&deg(&["0"])).is_err());
        let k3 = Model::new(ModelKind::Kdim, 3, ConstraintProfile::None, None).unwrap();
        assert_eq!(k3.delta(&deg(&["3/10", "3/5", "9/10"])), q_from(3, 5));
        assert_eq!(k3.delta(&Degree::zero(3)), q_from(0, 1));
    }

    #[test]
    fn combine_ops() {
        let fuzzy = Model::fuzzy();
        assert_eq!(
            fuzzy
                .combine(CombineKind::CompleteEdge, &deg(&["9/10"]), &deg(&["7/10"]))
                .unwrap(),
            deg(&["7/10"])
        );
        // line adjacency returns 0_M exactly when an operand is 0_M
        assert_eq!(
            fuzzy
                .combine(CombineKind::LineAdjacency, &deg(&["0"]), &deg(&["7/10"]))
                .unwrap(),
            deg(&["0"])
        );
        assert!(fuzzy
            .combine(CombineKind::Dombi, &deg(&["1/2"]), &deg(&["1/2"]))
            .is_err());
        let with_lambda =
            Model::new(ModelKind::Fuzzy, 1, ConstraintProfile::None, Some(q_from(1, 1))).unwrap();
        assert_eq!(
            with_lambda
                .combine(CombineKind::Dombi, &deg(&["1/2"]), &deg(&["1/2"]))
                .unwrap(),
            deg(&["1/3"])
        );
    }

    #[test]
    fn dombi_boundaries() {
        let one = q_from(1, 1);
        assert_eq!(dombi_t(&one, &q_from(0, 1), &q_from(1, 2)), q_from(0, 1));
        assert_eq!(dombi_t(&one, &one, &one), one);
        // non-unit lambda goes through floats but stays in [0,1]
        let l2 = q_from(2, 1);
        let t = dombi_t(&l2, &q_from(1, 2), &q_from(1, 2));
        assert!(t > q_from(0, 1) && t < q_from(1, 2));
    }
}
