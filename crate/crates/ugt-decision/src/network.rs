//! Cluster networks and the supermatrix pipeline: local priorities fill the
//! unweighted blocks, cluster weights make the columns stochastic, and the
//! limit (plain power or Cesàro) yields global priorities.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{input, DecisionError};
use crate::matrix::{anp_priorities, JudgmentMatrix};

#[derive(Debug, Clone)]
pub struct Cluster {
    pub name: String,
    pub elements: Vec<String>,
}

/// Pairwise comparison of the influencing cluster's elements with respect to
/// one target element.
#[derive(Debug, Clone)]
pub struct ElementJudgment {
    pub target: String,
    pub matrix: JudgmentMatrix,
}

/// "`from` influences `to`", carrying one judgment per element of `to`.
#[derive(Debug, Clone)]
pub struct Dependence {
    pub from: String,
    pub to: String,
    pub judgments: Vec<ElementJudgment>,
}

/// Comparison of the clusters influencing `target`, in network declaration
/// order. Redundant (and optional) when only one cluster influences it.
#[derive(Debug, Clone)]
pub struct ClusterJudgment {
    pub target: String,
    pub matrix: JudgmentMatrix,
}

#[derive(Debug, Clone)]
pub struct AnpNetwork {
    pub clusters: Vec<Cluster>,
    pub dependence: Vec<Dependence>,
    pub cluster_judgments: Vec<ClusterJudgment>,
    /// The elements ranked at the end; must be declared above.
    pub alternatives: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct AnpLimit {
    /// Global element order indexing the matrix rows and columns.
    pub elements: Vec<String>,
    pub weighted: Vec<Vec<f64>>,
    pub limit: Vec<Vec<f64>>,
    /// Alternatives with their renormalized global priorities, in input order.
    pub global: Vec<(String, f64)>,
}

/// Build the weighted supermatrix, take its limit, and read off the
/// alternatives. Primitive matrices (some power with all entries positive,
/// checked up to the n-squared bound) go through plain powers; everything
/// else through the Cesàro average, evaluated by detecting the asymptotic
/// period of the power sequence and averaging one full cycle.
pub fn anp_limit(net: &AnpNetwork) -> Result<AnpLimit, DecisionError> {
    let (elements, weighted) = weighted_supermatrix(net)?;
    let n = elements.len();

    for (col, e) in elements.iter().enumerate() {
        let sum: f64 = (0..n).map(|row| weighted[row][col]).sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(input(format!("column for element {e} sums to {sum}, not 1")));
        }
    }

    let limit = if is_primitive(&weighted) {
        power_limit(&weighted)?
    } else {
        cesaro_limit(&weighted)?
    };

    let index: BTreeMap<&str, usize> =
        elements.iter().enumerate().map(|(i, e)| (e.as_str(), i)).collect();
    let mut raw = Vec::new();
    for a in &net.alternatives {
        let row = index[a.as_str()];
        let mean: f64 = limit[row].iter().sum::<f64>() / n as f64;
        raw.push((a.clone(), mean));
    }
    let total: f64 = raw.iter().map(|(_, v)| v).sum();
    if !(total > 0.0) {
        return Err(input("alternatives receive zero weight in the limit"));
    }
    let global = raw.into_iter().map(|(a, v)| (a, v / total)).collect();

    Ok(AnpLimit { elements, weighted, limit, global })
}

fn weighted_supermatrix(net: &AnpNetwork) -> Result<(Vec<String>, Vec<Vec<f64>>), DecisionError> {
    if net.clusters.is_empty() {
        return Err(input("network needs at least one cluster"));
    }
    let mut cluster_of: BTreeMap<&str, usize> = BTreeMap::new();
    for (i, c) in net.clusters.iter().enumerate() {
        if c.name.is_empty() {
            return Err(input("cluster names must be nonempty"));
        }
        if cluster_of.insert(c.name.as_str(), i).is_some() {
            return Err(input(format!("duplicate cluster {}", c.name)));
        }
        if c.elements.is_empty() {
            return Err(input(format!("cluster {} has no elements", c.name)));
        }
    }

    let mut elements = Vec::new();
    let mut global: BTreeMap<&str, usize> = BTreeMap::new();
    for c in &net.clusters {
        for e in &c.elements {
            if e.is_empty() {
                return Err(input("element names must be nonempty"));
            }
            if global.insert(e.as_str(), elements.len()).is_some() {
                return Err(input(format!("duplicate element {e}")));
            }
            elements.push(e.clone());
        }
    }
    let n = elements.len();

    // dependence pairs, each with a complete set of per-target judgments
    let mut deps: BTreeMap<(usize, usize), &Dependence> = BTreeMap::new();
    for d in &net.dependence {
        let i = *cluster_of
            .get(d.from.as_str())
            .ok_or_else(|| input(format!("unknown cluster {} in dependence", d.from)))?;
        let j = *cluster_of
            .get(d.to.as_str())
            .ok_or_else(|| input(format!("unknown cluster {} in dependence", d.to)))?;
        if deps.insert((i, j), d).is_some() {
            return Err(input(format!("duplicate dependence {} -> {}", d.from, d.to)));
        }
        let target_cluster = &net.clusters[j];
        let mut seen: BTreeSet<&str> = BTreeSet::new();
        for jm in &d.judgments {
            if !target_cluster.elements.contains(&jm.target) {
                return Err(input(format!(
                    "judgment target {} is not an element of cluster {}",
                    jm.target, d.to
                )));
            }
            if !seen.insert(jm.target.as_str()) {
                return Err(input(format!("duplicate judgment for target {}", jm.target)));
            }
            let ni = net.clusters[i].elements.len();
            if jm.matrix.n() != ni {
                return Err(input(format!(
                    "judgment for target {} must compare the {} elements of cluster {}, got {}",
                    jm.target,
                    ni,
                    d.from,
                    jm.matrix.n()
                )));
            }
        }
        for e in &target_cluster.elements {
            if !seen.contains(e.as_str()) {
                return Err(input(format!(
                    "dependence {} -> {} is missing a judgment for target {e}",
                    d.from, d.to
                )));
            }
        }
    }

    // influencers of each target cluster, in declaration order
    let m = net.clusters.len();
    let influencers: Vec<Vec<usize>> = (0..m)
        .map(|j| (0..m).filter(|i| deps.contains_key(&(*i, j))).collect())
        .collect();
    for (j, c) in net.clusters.iter().enumerate() {
        if influencers[j].is_empty() {
            return Err(input(format!(
                "element {} is influenced by no cluster (zero column)",
                c.elements[0]
            )));
        }
    }

    // cluster weights per target cluster
    let mut cluster_judgment: BTreeMap<usize, &JudgmentMatrix> = BTreeMap::new();
    for cj in &net.cluster_judgments {
        let j = *cluster_of
            .get(cj.target.as_str())
            .ok_or_else(|| input(format!("unknown cluster {} in cluster judgment", cj.target)))?;
        if cluster_judgment.insert(j, &cj.matrix).is_some() {
            return Err(input(format!("duplicate cluster judgment for {}", cj.target)));
        }
    }
    let mut alpha: Vec<Vec<f64>> = Vec::with_capacity(m);
    for j in 0..m {
        let k = influencers[j].len();
        match cluster_judgment.get(&j) {
            Some(matrix) => {
                if matrix.n() != k {
                    return Err(input(format!(
                        "cluster judgment for {} must compare its {} influencers, got {}",
                        net.clusters[j].name,
                        k,
                        matrix.n()
                    )));
                }
                alpha.push(anp_priorities(matrix)?);
            }
            None if k == 1 => alpha.push(vec![1.0]),
            None => {
                return Err(input(format!(
                    "cluster {} needs a cluster judgment over its {} influencers",
                    net.clusters[j].name, k
                )));
            }
        }
    }

    // assemble: column of target element k = stacked alpha-scaled local
    // priority vectors of its influencing clusters
    let offset: Vec<usize> = net
        .clusters
        .iter()
        .scan(0usize, |acc, c| {
            let here = *acc;
            *acc += c.elements.len();
            Some(here)
        })
        .collect();
    let mut w = vec![vec![0.0; n]; n];
    for j in 0..m {
        for (pos, &i) in influencers[j].iter().enumerate() {
            let d = deps[&(i, j)];
            let weight = alpha[j][pos];
            for jm in &d.judgments {
                let col = global[jm.target.as_str()];
                let local = anp_priorities(&jm.matrix)?;
                for (r, v) in local.iter().enumerate() {
                    w[offset[i] + r][col] = weight * v;
                }
            }
        }
    }

    // alternatives must exist and be distinct
    if net.alternatives.is_empty() {
        return Err(input("network declares no alternatives"));
    }
    let mut seen: BTreeSet<&str> = BTreeSet::new();
    for a in &net.alternatives {
        if !global.contains_key(a.as_str()) {
            return Err(input(format!("alternative {a} is not a declared element")));
        }
        if !seen.insert(a.as_str()) {
            return Err(input(format!("duplicate alternative {a}")));
        }
    }

    Ok((elements, w))
}

fn mat_mul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    let mut out = vec![vec![0.0; n]; n];
    for r in 0..n {
        for k in 0..n {
            let ark = a[r][k];
            if ark == 0.0 {
                continue;
            }
            for s in 0..n {
                out[r][s] += ark * b[k][s];
            }
        }
    }
    out
}

fn max_diff(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
    let mut d = 0.0f64;
    for (ra, rb) in a.iter().zip(b) {
        for (x, y) in ra.iter().zip(rb) {
            d = d.max((x - y).abs());
        }
    }
    d
}

/// Some power up to n^2 is strictly positive (Wielandt's bound for
/// primitive matrices is (n-1)^2 + 1, so n^2 checks are enough).
fn is_primitive(w: &[Vec<f64>]) -> bool {
    let n = w.len();
    let b: Vec<Vec<bool>> = w
        .iter()
        .map(|row| row.iter().map(|&x| x > 0.0).collect())
        .collect();
    let mut c = b.clone();
    for _ in 0..n * n {
        if c.iter().all(|row| row.iter().all(|&x| x)) {
            return true;
        }
        let mut next = vec![vec![false; n]; n];
        for r in 0..n {
            for k in 0..n {
                if c[r][k] {
                    for s in 0..n {
                        if b[k][s] {
                            next[r][s] = true;
                        }
                    }
                }
            }
        }
        c = next;
    }
    false
}

fn power_limit(w: &[Vec<f64>]) -> Result<Vec<Vec<f64>>, DecisionError> {
    let mut p = w.to_vec();
    for _ in 0..100_000 {
        let next = mat_mul(&p, w);
        let d = max_diff(&next, &p);
        p = next;
        if d < 1e-9 {
            return Ok(p);
        }
    }
    Err(DecisionError::NoConverge(
        "supermatrix powers did not settle within 1e5 steps".into(),
    ))
}

/// Cesàro limit of the power sequence. The peripheral eigenvalues of a
/// nonnegative column-stochastic matrix are roots of unity, so the powers
/// are asymptotically periodic; once two powers agree to 1e-12 the running
/// average over whole periods has stabilized far below the stated 1e-9, and
/// the mean of one full cycle is the Cesàro limit (the transient has density
/// zero). A bounded window of recent powers keeps memory flat; a period
/// longer than the window is reported as non-convergence, never guessed.
fn cesaro_limit(w: &[Vec<f64>]) -> Result<Vec<Vec<f64>>, DecisionError> {
    let n = w.len();
    const WINDOW: usize = 512;
    let mut identity = vec![vec![0.0; n]; n];
    for (r, row) in identity.iter_mut().enumerate() {
        row[r] = 1.0;
    }
    // powers W^base, W^{base+1}, ... with the front index tracked in `base`
    let mut powers: VecDeque<Vec<Vec<f64>>> = VecDeque::new();
    powers.push_back(identity);
    let mut base = 0usize;
    for t in 1..=100_000usize {
        let next = mat_mul(powers.back().unwrap(), w);
        let mut hit = None;
        for (k, old) in powers.iter().enumerate() {
            if max_diff(&next, old) < 1e-12 {
                hit = Some(k);
                break;
            }
        }
        if let Some(k) = hit {
            let period = t - (base + k);
            let mut avg = vec![vec![0.0; n]; n];
            for old in powers.iter().skip(k) {
                for r in 0..n {
                    for s in 0..n {
                        avg[r][s] += old[r][s];
                    }
                }
            }
            for row in &mut avg {
                for v in row.iter_mut() {
                    *v /= period as f64;
                }
            }
            return Ok(avg);
        }
        powers.push_back(next);
        if powers.len() > WINDOW {
            powers.pop_front();
            base += 1;
        }
    }
    Err(DecisionError::NoConverge(
        "Cesàro averaging found no stable period within 1e5 powers".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::UncertainNumber;
    use ugt_core::q_from;

    fn one_by_one() -> JudgmentMatrix {
        JudgmentMatrix::from_upper(1, &[]).unwrap()
    }

    fn crisp_pair(n: i64, d: i64) -> JudgmentMatrix {
        let v = UncertainNumber::crisp(q_from(n, d)).unwrap();
        JudgmentMatrix::from_upper(2, &[(0, 1, v)]).unwrap()
    }

    fn singleton(name: &str, element: &str) -> Cluster {
        Cluster { name: name.into(), elements: vec![element.into()] }
    }

    fn dep(from: &str, to: &str, judgments: Vec<(&str, JudgmentMatrix)>) -> Dependence {
        Dependence {
            from: from.into(),
            to: to.into(),
            judgments: judgments
                .into_iter()
                .map(|(t, m)| ElementJudgment { target: t.into(), matrix: m })
                .collect(),
        }
    }

    fn assert_column_stochastic(m: &[Vec<f64>], tol: f64) {
        let n = m.len();
        for col in 0..n {
            let sum: f64 = (0..n).map(|row| m[row][col]).sum();
            assert!((sum - 1.0).abs() <= tol, "column {col} sums to {sum}");
        }
    }

    #[test]
    fn two_state_flip_averages_to_one_half() {
        let net = AnpNetwork {
            clusters: vec![singleton("X", "x"), singleton("Y", "y")],
            dependence: vec![
                dep("X", "Y", vec![("y", one_by_one())]),
                dep("Y", "X", vec![("x", one_by_one())]),
            ],
            cluster_judgments: vec![],
            alternatives: vec!["x".into(), "y".into()],
        };
        let out = anp_limit(&net).unwrap();
        assert_eq!(out.weighted[0], vec![0.0, 1.0]);
        assert_eq!(out.weighted[1], vec![1.0, 0.0]);
        for row in &out.limit {
            for v in row {
                assert!((v - 0.5).abs() < 1e-9);
            }
        }
        assert_column_stochastic(&out.limit, 1e-6);
        for (_, g) in &out.global {
            assert!((g - 0.5).abs() < 1e-9);
        }
    }

    #[test]
    fn absorbing_supermatrix_is_its_own_limit() {
        // x feeds itself and y; nothing feeds back: W = [[1,1],[0,0]]
        let net = AnpNetwork {
            clusters: vec![singleton("X", "x"), singleton("Y", "y")],
            dependence: vec![
                dep("X", "X", vec![("x", one_by_one())]),
                dep("X", "Y", vec![("y", one_by_one())]),
            ],
            cluster_judgments: vec![],
            alternatives: vec!["x".into()],
        };
        let out = anp_limit(&net).unwrap();
        assert_eq!(out.weighted, vec![vec![1.0, 1.0], vec![0.0, 0.0]]);
        assert_eq!(out.limit, out.weighted);
        assert_eq!(out.global, vec![("x".to_string(), 1.0)]);
    }

    #[test]
    fn starved_alternative_is_an_error() {
        let net = AnpNetwork {
            clusters: vec![singleton("X", "x"), singleton("Y", "y")],
            dependence: vec![
                dep("X", "X", vec![("x", one_by_one())]),
                dep("X", "Y", vec![("y", one_by_one())]),
            ],
            cluster_judgments: vec![],
            alternatives: vec!["y".into()],
        };
        let err = anp_limit(&net).unwrap_err();
        assert!(err.to_string().contains("zero weight"));
    }

    #[test]
    fn identity_judgments_spread_uniformly() {
        let ones = || {
            JudgmentMatrix::from_upper(
                3,
                &[
                    (0, 1, UncertainNumber::one()),
                    (0, 2, UncertainNumber::one()),
                    (1, 2, UncertainNumber::one()),
                ],
            )
            .unwrap()
        };
        let net = AnpNetwork {
            clusters: vec![Cluster {
                name: "C".into(),
                elements: vec!["e1".into(), "e2".into(), "e3".into()],
            }],
            dependence: vec![dep("C", "C", vec![("e1", ones()), ("e2", ones()), ("e3", ones())])],
            cluster_judgments: vec![],
            alternatives: vec!["e1".into(), "e2".into(), "e3".into()],
        };
        let out = anp_limit(&net).unwrap();
        assert_column_stochastic(&out.weighted, 1e-9);
        for (_, g) in &out.global {
            assert!((g - 1.0 / 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn bipartite_network_cesaro_mixes_with_a_transient() {
        // criteria and alternatives feed each other; the power sequence
        // alternates block structure, so the limit comes from the cycle
        // average after the geometric transient dies out
        let net = AnpNetwork {
            clusters: vec![
                Cluster { name: "crit".into(), elements: vec!["c1".into(), "c2".into()] },
                Cluster { name: "alts".into(), elements: vec!["a1".into(), "a2".into()] },
            ],
            dependence: vec![
                dep("crit", "alts", vec![("a1", crisp_pair(2, 1)), ("a2", crisp_pair(1, 2))]),
                dep("alts", "crit", vec![("c1", crisp_pair(1, 1)), ("c2", crisp_pair(1, 1))]),
            ],
            cluster_judgments: vec![],
            alternatives: vec!["a1".into(), "a2".into()],
        };
        let out = anp_limit(&net).unwrap();
        assert_column_stochastic(&out.weighted, 1e-9);
        assert_column_stochastic(&out.limit, 1e-6);
        // the wiring is symmetric under swapping c1<->c2, a1<->a2
        assert!((out.global[0].1 - 0.5).abs() < 1e-9);
        assert!((out.global[1].1 - 0.5).abs() < 1e-9);
    }

    #[test]
    fn network_shape_errors_are_named() {
        let missing = AnpNetwork {
            clusters: vec![singleton("X", "x"), singleton("Y", "y")],
            dependence: vec![dep("X", "Y", vec![("y", one_by_one())])],
            cluster_judgments: vec![],
            alternatives: vec!["y".into()],
        };
        assert!(anp_limit(&missing)
            .unwrap_err()
            .to_string()
            .contains("influenced by no cluster"));

        let wrong_size = AnpNetwork {
            clusters: vec![
                Cluster { name: "X".into(), elements: vec!["x1".into(), "x2".into()] },
                singleton("Y", "y"),
            ],
            dependence: vec![
                dep("X", "Y", vec![("y", one_by_one())]),
                dep("Y", "X", vec![("x1", one_by_one()), ("x2", one_by_one())]),
            ],
            cluster_judgments: vec![],
            alternatives: vec!["y".into()],
        };
        assert!(anp_limit(&wrong_size)
            .unwrap_err()
            .to_string()
            .contains("must compare the 2 elements"));

        let no_target = AnpNetwork {
            clusters: vec![
                singleton("X", "x"),
                Cluster { name: "Y".into(), elements: vec!["y1".into(), "y2".into()] },
            ],
            dependence: vec![
                dep("X", "Y", vec![("y1", one_by_one())]),
                dep("Y", "X", vec![("x", crisp_pair(2, 1))]),
            ],
            cluster_judgments: vec![],
            alternatives: vec!["x".into()],
        };
        assert!(anp_limit(&no_target)
            .unwrap_err()
            .to_string()
            .contains("missing a judgment for target y2"));

        let bad_alt = AnpNetwork {
            clusters: vec![singleton("X", "x"), singleton("Y", "y")],
            dependence: vec![
                dep("X", "Y", vec![("y", one_by_one())]),
                dep("Y", "X", vec![("x", one_by_one())]),
            ],
            cluster_judgments: vec![],
            alternatives: vec!["z".into()],
        };
        assert!(anp_limit(&bad_alt)
            .unwrap_err()
            .to_string()
            .contains("not a declared element"));
    }

    #[test]
    fn two_influencers_need_cluster_weights() {
        let clusters = vec![
            singleton("X", "x"),
            singleton("Y", "y"),
            singleton("Z", "z"),
        ];
        let dependence = vec![
            dep("X", "Z", vec![("z", one_by_one())]),
            dep("Y", "Z", vec![("z", one_by_one())]),
            dep("Z", "X", vec![("x", one_by_one())]),
            dep("Z", "Y", vec![("y", one_by_one())]),
        ];
        let net = AnpNetwork {
            clusters: clusters.clone(),
            dependence: dependence.clone(),
            cluster_judgments: vec![],
            alternatives: vec!["z".into()],
        };
        assert!(anp_limit(&net)
            .unwrap_err()
            .to_string()
            .contains("needs a cluster judgment"));

        // X weighs three times Y toward Z
        let net = AnpNetwork {
            clusters,
            dependence,
            cluster_judgments: vec![ClusterJudgment {
                target: "Z".into(),
                matrix: crisp_pair(3, 1),
            }],
            alternatives: vec!["z".into()],
        };
        let out = anp_limit(&net).unwrap();
        assert_column_stochastic(&out.weighted, 1e-9);
        let zi = 2;
        assert!((out.weighted[0][zi] - 0.75).abs() < 1e-9);
        assert!((out.weighted[1][zi] - 0.25).abs() < 1e-9);
    }
}
