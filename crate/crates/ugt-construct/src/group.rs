//! Finite abelian groups (direct products of cyclic factors) and Cayley
//! graphs decorated by an uncertain generating subset.

use crate::error::ConstructError;
use std::collections::{BTreeMap, BTreeSet};
use ugt_core::{Degree, Graph, Model};

/// Z_{n1} × … × Z_{nm}; elements are tuples reduced mod the factors, the
/// identity is the zero tuple and inversion is componentwise negation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    factors: Vec<u64>,
}

impl GroupSpec {
    pub fn new(factors: Vec<u64>) -> Result<Self, ConstructError> {
        if factors.is_empty() {
            return Err(ConstructError::Input(
                "a group needs at least one cyclic factor".into(),
            ));
        }
        if factors.iter().any(|&n| n == 0) {
            return Err(ConstructError::Input("cyclic factors must be >= 1".into()));
        }
        let mut order = 1u64;
        for &n in &factors {
            order = order.checked_mul(n).ok_or_else(|| {
                ConstructError::Input("group order overflows 64 bits".into())
            })?;
        }
        Ok(GroupSpec { factors })
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn identity(&self) -> Vec<u64> {
        vec![0; self.factors.len()]
    }

    /// All elements in mixed-radix ascending order.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![self.identity()];
        loop {
            let mut next = out.last().expect("nonempty").clone();
            let mut i = next.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                next[i] += 1;
                if next[i] < self.factors[i] {
                    break;
                }
                next[i] = 0;
            }
            out.push(next);
        }
    }

    pub fn neg(&self, x: &[u64]) -> Vec<u64> {
        x.iter()
            .zip(&self.factors)
            .map(|(&c, &n)| (n - c % n) % n)
            .collect()
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter()
            .zip(y)
            .zip(&self.factors)
            .map(|((&a, &b), &n)| (a + b) % n)
            .collect()
    }

    /// x⁻¹y, the difference that carries x to y.
    pub fn diff(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        self.add(&self.neg(x), y)
    }

    pub fn contains(&self, x: &[u64]) -> bool {
        x.len() == self.factors.len() && x.iter().zip(&self.factors).all(|(&c, &n)| c < n)
    }

    /// Element rendered as a vertex id: components joined by commas.
    pub fn id_of(&self, x: &[u64]) -> String {
        x.iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Cayley graph of a group under an uncertain subset: every element becomes a
/// vertex of degree 1_M and the pair {x, y} receives the subset degree of
/// x⁻¹y. The subset must vanish at the identity, be inversion-symmetric, and
/// its support must generate the group, which makes the degrees well-defined
/// and the support graph connected.
pub fn cayley_graph(
    model: &Model,
    group: &GroupSpec,
    subset: &[(Vec<u64>, Degree)],
) -> Result<Graph, ConstructError> {
    let mut map: BTreeMap<Vec<u64>, Degree> = BTreeMap::new();
    for (x, d) in subset {
        if !group.contains(x) {
            return Err(ConstructError::Input(format!(
                "subset element ({}) is outside the group",
                group.id_of(x)
            )));
        }
        if let Err(why) = model.check_degree(d) {
            return Err(ConstructError::Input(format!(
                "subset degree at ({}): {why}",
                group.id_of(x)
            )));
        }
        if map.insert(x.clone(), d.clone()).is_some() {
            return Err(ConstructError::Input(format!(
                "subset lists element ({}) twice",
                group.id_of(x)
            )));
        }
    }

    let zero = model.zero();
    let at = |x: &[u64]| map.get(x).cloned().unwrap_or_else(|| zero.clone());

    if !at(&group.identity()).is_zero() {
        return Err(ConstructError::Input(
            "subset assigns a nonzero degree to the identity".into(),
        ));
    }
    for x in map.keys() {
        if at(x) != at(&group.neg(x)) {
            return Err(ConstructError::Input(format!(
                "subset is not inversion-symmetric at ({})",
                group.id_of(x)
            )));
        }
    }

    let generators: Vec<Vec<u64>> = map
        .iter()
        .filter(|(_, d)| !d.is_zero())
        .map(|(x, _)| x.clone())
        .collect();
    let mut reached: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut frontier = vec![group.identity()];
    reached.insert(group.identity());
    while let Some(x) = frontier.pop() {
        for s in &generators {
            let y = group.add(&x, s);
            if reached.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    if reached.len() as u64 != group.order() {
        return Err(ConstructError::Input(
            "subset support does not generate the group".into(),
        ));
    }

    let elements = group.elements();
    let one = model.one();
    let vertices: Vec<(String, Degree)> = elements
        .iter()
        .map(|x| (group.id_of(x), one.clone()))
        .collect();
    let mut edges = Vec::new();
    for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            let d = at(&group.diff(&elements[i], &elements[j]));
            if !d.is_zero() {
                edges.push((vertices[i].0.clone(), vertices[j].0.clone(), d));
            }
        }
    }
    Ok(Graph::new(model.clone(), vertices, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ugt_core::parse_q;

    fn deg(m: &str) -> Degree {
        Degree::new(vec![parse_q(m).unwrap()])
    }

    #[test]
    fn z5_with_symmetric_pair_is_a_five_cycle() {
        let group = GroupSpec::new(vec![5]).unwrap();
        let g = cayley_graph(
            &Model::fuzzy(),
            &group,
            &[(vec![1], deg("0.8")), (vec![4], deg("0.8"))],
        )
        .unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 5);
        for (_, _, d) in g.edges() {
            assert_eq!(d, &deg("4/5"));
        }
        // every vertex has exactly two neighbours
        let adj = g.support_adj();
        assert!(adj.iter().all(|l| l.len() == 2));
    }

    #[test]
    fn non_generating_support_is_rejected() {
        let group = GroupSpec::new(vec![4]).unwrap();
        let err = cayley_graph(&Model::fuzzy(), &group, &[(vec![2], deg("0.6"))]).unwrap_err();
        assert!(err.to_string().contains("generate"));
    }

    #[test]
    fn z2_single_generator() {
        let group = GroupSpec::new(vec![2]).unwrap();
        let g = cayley_graph(&Model::fuzzy(), &group, &[(vec![1], deg("1"))]).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.eta_or_zero(0, 1), deg("1"));
    }

    #[test]
    fn identity_must_vanish() {
        let group = GroupSpec::new(vec![2]).unwrap();
        let err = cayley_graph(
            &Model::fuzzy(),
            &group,
            &[(vec![0], deg("0.3")), (vec![1], deg("1"))],
        )
        .unwrap_err();
        assert!(err.to_string().contains("identity"));
    }

    #[test]
    fn asymmetric_subset_is_rejected() {
        let group = GroupSpec::new(vec![5]).unwrap();
        let err = cayley_graph(
            &Model::fuzzy(),
            &group,
            &[(vec![1], deg("0.8")), (vec![4], deg("0.5"))],
        )
        .unwrap_err();
        assert!(err.to_string().contains("inversion-symmetric"));
    }

    #[test]
    fn product_group_torus() {
        // Z2 x Z2 with both unit vectors: a 4-cycle
        let group = GroupSpec::new(vec![2, 2]).unwrap();
        let g = cayley_graph(
            &Model::fuzzy(),
            &group,
            &[(vec![1, 0], deg("0.5")), (vec![0, 1], deg("0.7"))],
        )
        .unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.ids(), ["0,0", "0,1", "1,0", "1,1"]);
    }

    #[test]
    fn translation_invariance_of_degrees() {
        let group = GroupSpec::new(vec![6]).unwrap();
        let subset = [
            (vec![1], deg("0.4")),
            (vec![5], deg("0.4")),
            (vec![3], deg("0.9")),
        ];
        let g = cayley_graph(&Model::fuzzy(), &group, &subset).unwrap();
        let els = group.elements();
        let shift = vec![2u64];
        for i in 0..els.len() {
            for j in 0..els.len() {
                if i == j {
                    continue;
                }
                let (si, sj) = (group.add(&els[i], &shift), group.add(&els[j], &shift));
                let (a, b) = (g.vertex(&group.id_of(&si)).unwrap(), g.vertex(&group.id_of(&sj)).unwrap());
                assert_eq!(g.eta_or_zero(i, j), g.eta_or_zero(a, b));
            }
        }
    }
}
