//! The uncertain graph itself: declared vertices with σ, unordered pairs
//! with η (absent pair = 0_M), immutable after a validating construction.

use crate::degree::Degree;
use crate::error::Violation;
use crate::model::{ConstraintProfile, Model};
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub struct Graph {
    model: Model,
    ids: Vec<String>,
    index: BTreeMap<String, usize>,
    sigma: Vec<Degree>,
    /// keys are (i, j) with i < j in declared order; zero degrees are
    /// normalized away at construction
    eta: BTreeMap<(usize, usize), Degree>,
}

/// Crisp (V*, E*) extracted by comparing degrees against 0_M.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportGraph {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(
        model: Model,
        vertices: Vec<(String, Degree)>,
        edges: Vec<(String, String, Degree)>,
    ) -> Result<Graph, Vec<Violation>> {
        let mut violations = Vec::new();
        let mut ids = Vec::with_capacity(vertices.len());
        let mut index = BTreeMap::new();
        let mut sigma = Vec::with_capacity(vertices.len());
        for (id, d) in vertices {
            if id.is_empty() {
                violations.push(Violation::new("empty vertex id", "\"\""));
                continue;
            }
            if index.contains_key(&id) {
                violations.push(Violation::new("duplicate vertex id", &id));
                continue;
            }
            if let Err(why) = model.check_degree(&d) {
                violations.push(Violation::new(format!("bad vertex degree: {why}"), &id));
            }
            index.insert(id.clone(), ids.len());
            ids.push(id);
            sigma.push(d);
        }

        let mut eta = BTreeMap::new();
        for (u, v, d) in edges {
            let subject = format!("{{{u},{v}}}");
            let (Some(&iu), Some(&iv)) = (index.get(&u), index.get(&v)) else {
                violations.push(Violation::new("edge endpoint not declared", &subject));
                continue;
            };
            if iu == iv {
                violations.push(Violation::new("self-loop edge", &subject));
                continue;
            }
            let key = (iu.min(iv), iu.max(iv));
            if eta.contains_key(&key) {
                violations.push(Violation::new("duplicate edge pair", &subject));
                continue;
            }
            if let Err(why) = model.check_degree(&d) {
                violations.push(Violation::new(format!("bad edge degree: {why}"), &subject));
                continue;
            }
            if d.is_zero() {
                continue; // absent edge, normalized away
            }
            if let Err(rule) = profile_rule(&model, &sigma[key.0], &sigma[key.1], &d) {
                violations.push(Violation::new(rule, &subject));
                continue;
            }
            eta.insert(key, d);
        }

        if violations.is_empty() {
            Ok(Graph {
                model,
                ids,
                index,
                sigma,
                eta,
            })
        } else {
            Err(violations)
        }
    }

    pub fn model(&self) -> &Model {
        &self.model
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    pub fn vertex(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn sigma(&self, i: usize) -> &Degree {
        &self.sigma[i]
    }

    /// η for a pair, if nonzero.
    pub fn eta(&self, i: usize, j: usize) -> Option<&Degree> {
        self.eta.get(&(i.min(j), i.max(j)))
    }

    pub fn eta_or_zero(&self, i: usize, j: usize) -> Degree {
        self.eta(i, j).cloned().unwrap_or_else(|| self.model.zero())
    }

    /// All stored (nonzero) edges in canonical (i<j) order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &Degree)> {
        self.eta.iter().map(|(&(i, j), d)| (i, j, d))
    }

    pub fn edge_count(&self) -> usize {
        self.eta.len()
    }

    pub fn is_support_vertex(&self, i: usize) -> bool {
        !self.sigma[i].is_zero()
    }

    pub fn support(&self) -> SupportGraph {
        let vertices: Vec<usize> = (0..self.n()).filter(|&i| self.is_support_vertex(i)).collect();
        let edges: Vec<(usize, usize)> = self
            .eta
            .keys()
            .filter(|&&(i, j)| self.is_support_vertex(i) && self.is_support_vertex(j))
            .copied()
            .collect();
        SupportGraph { vertices, edges }
    }

    /// Adjacency over support edges, indexed by vertex, neighbors sorted.
    pub fn support_adj(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n()];
        for (i, j) in self.support().edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }
}

fn profile_rule(model: &Model, su: &Degree, sv: &Degree, d: &Degree) -> Result<(), String> {
    match model.profile {
        ConstraintProfile::None => Ok(()),
        ConstraintProfile::FuzzyCap => {
            let cap = su.component_min(sv);
            for (e, c) in d.components().iter().zip(cap.components()) {
                if e > c {
                    return Err("edge degree exceeds componentwise min of endpoints".into());
                }
            }
            Ok(())
        }
        ConstraintProfile::IntuitionisticCap => {
            let (mu_b, nu_b) = (&d.components()[0], &d.components()[1]);
            let mu_cap = su.components()[0].clone().min(sv.components()[0].clone());
            let nu_floor = su.components()[1].clone().max(sv.components()[1].clone());
            if mu_b > &mu_cap {
                return Err("intuitionistic edge mu exceeds min of endpoint mu".into());
            }
            if nu_b < &nu_floor {
                return Err("intuitionistic edge nu below max of endpoint nu".into());
            }
            Ok(())
        }
        ConstraintProfile::SvnCap => {
            let t_cap = su.components()[0].clone().min(sv.components()[0].clone());
            let i_cap = su.components()[1].clone().min(sv.components()[1].clone());
            let f_floor = su.components()[2].clone().max(sv.components()[2].clone());
            if &d.components()[0] > &t_cap {
                return Err("svn edge T exceeds min of endpoint T".into());
            }
            if &d.components()[1] > &i_cap {
                return Err("svn edge I exceeds min of endpoint I".into());
            }
            if &d.components()[2] < &f_floor {
                return Err("svn edge F below max of endpoint F".into());
            }
            Ok(())
        }
    }
}
