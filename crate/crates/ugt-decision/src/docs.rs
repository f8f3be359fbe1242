//! JSON documents for cognitive maps, judgment matrices, and networks.
//! Rationals travel as strings (`"p/q"`, integers, or decimals) so nothing
//! is rounded at the boundary.

use serde::Deserialize;
use ugt_core::{parse_q, q_int, Q};

use crate::error::{input, DecisionError};
use crate::fcm::{Activation, CognitiveMap};
use crate::matrix::JudgmentMatrix;
use crate::network::{AnpNetwork, Cluster, ClusterJudgment, Dependence, ElementJudgment};
use crate::number::UncertainNumber;

fn bad(err: serde_json::Error) -> DecisionError {
    DecisionError::Json(err.to_string())
}

fn rational_of(text: &str, what: &str) -> Result<Q, DecisionError> {
    parse_q(text).map_err(|e| input(format!("{what}: {e}")))
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct FcmDoc {
    #[serde(rename = "W")]
    w: Vec<Vec<String>>,
    #[serde(rename = "A0")]
    a0: Vec<String>,
    f: ActivationDoc,
    #[serde(default)]
    concepts: Option<Vec<String>>,
}

#[derive(Deserialize, Debug)]
#[serde(tag = "kind", deny_unknown_fields)]
enum ActivationDoc {
    #[serde(rename = "clamp01")]
    Clamp01,
    #[serde(rename = "bivalent")]
    Bivalent { theta: String },
    #[serde(rename = "sigmoid")]
    Sigmoid { lambda: String },
}

/// `{ "W": [[...]], "A0": [...], "f": {"kind": "clamp01"} }` with an
/// optional `"concepts"` name list (defaults to c1..cn).
pub fn fcm_from_json(text: &str) -> Result<CognitiveMap, DecisionError> {
    let doc: FcmDoc = serde_json::from_str(text).map_err(bad)?;
    let n = doc.w.len();
    let concepts = doc
        .concepts
        .unwrap_or_else(|| (1..=n).map(|i| format!("c{i}")).collect());
    let mut weights = Vec::with_capacity(n);
    for (i, row) in doc.w.iter().enumerate() {
        let mut out = Vec::with_capacity(row.len());
        for (j, cell) in row.iter().enumerate() {
            out.push(rational_of(cell, &format!("W[{}][{}]", i + 1, j + 1))?);
        }
        weights.push(out);
    }
    let mut initial = Vec::with_capacity(doc.a0.len());
    for (j, cell) in doc.a0.iter().enumerate() {
        initial.push(rational_of(cell, &format!("A0[{}]", j + 1))?);
    }
    let activation = match doc.f {
        ActivationDoc::Clamp01 => Activation::Clamp01,
        ActivationDoc::Bivalent { theta } => Activation::Bivalent {
            theta: rational_of(&theta, "bivalent theta")?,
        },
        ActivationDoc::Sigmoid { lambda } => Activation::Sigmoid {
            lambda: rational_of(&lambda, "sigmoid lambda")?,
        },
    };
    CognitiveMap::new(concepts, weights, initial, activation)
}

/// Tolerances on the command line allow scientific notation on top of the
/// plain rational forms, e.g. `1e-6` or `2.5E-3`.
pub fn parse_tolerance(text: &str) -> Result<Q, DecisionError> {
    let t = text.trim();
    if let Some(pos) = t.find(['e', 'E']) {
        let mantissa = rational_of(&t[..pos], "tolerance mantissa")?;
        let exp: i32 = t[pos + 1..]
            .parse()
            .map_err(|_| input(format!("bad exponent in tolerance {t:?}")))?;
        return Ok(mantissa * q_int(10).pow(exp));
    }
    rational_of(t, "tolerance")
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct EntryDoc {
    r: usize,
    s: usize,
    value: [String; 4],
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct MatrixDoc {
    n: usize,
    #[serde(default)]
    entries: Vec<EntryDoc>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct MatrixWrapperDoc {
    matrix: MatrixDoc,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct NetworkDoc {
    clusters: Vec<ClusterDoc>,
    dependence: Vec<DependenceDoc>,
    #[serde(default)]
    cluster_judgments: Vec<ClusterJudgmentDoc>,
    alternatives: Vec<String>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct ClusterDoc {
    name: String,
    elements: Vec<String>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct DependenceDoc {
    from: String,
    to: String,
    judgments: Vec<TargetDoc>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct TargetDoc {
    target: String,
    #[serde(default)]
    entries: Vec<EntryDoc>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct ClusterJudgmentDoc {
    target: String,
    #[serde(default)]
    entries: Vec<EntryDoc>,
}

/// Entries are 1-based upper-triangle positions; the diagonal and lower
/// triangle are implied, which is the only way to keep reciprocity exact —
/// the alpha-cut reciprocal of a sloped trapezoid has no `[a,b,c,d]` form.
fn build_upper(n: usize, entries: &[EntryDoc], what: &str) -> Result<JudgmentMatrix, DecisionError> {
    let mut upper = Vec::with_capacity(entries.len());
    for e in entries {
        if e.r == 0 || e.s == 0 {
            return Err(input(format!("{what}: entry indices are 1-based")));
        }
        let mut parts = Vec::with_capacity(4);
        for (k, cell) in e.value.iter().enumerate() {
            parts.push(rational_of(
                cell,
                &format!("{what}: entry ({}, {}) breakpoint {}", e.r, e.s, k + 1),
            )?);
        }
        let d = parts.pop().unwrap();
        let c = parts.pop().unwrap();
        let b = parts.pop().unwrap();
        let a = parts.pop().unwrap();
        let value = UncertainNumber::new(a, b, c, d)
            .map_err(|err| input(format!("{what}: entry ({}, {}): {err}", e.r, e.s)))?;
        upper.push((e.r - 1, e.s - 1, value));
    }
    JudgmentMatrix::from_upper(n, &upper).map_err(|err| input(format!("{what}: {err}")))
}

fn network_from_doc(doc: &NetworkDoc) -> Result<AnpNetwork, DecisionError> {
    let size_of = |name: &str| {
        doc.clusters
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.elements.len())
    };
    let clusters = doc
        .clusters
        .iter()
        .map(|c| Cluster { name: c.name.clone(), elements: c.elements.clone() })
        .collect();

    let mut dependence = Vec::new();
    for d in &doc.dependence {
        // the matrix order is the influencing cluster's element list
        let n = size_of(&d.from)
            .ok_or_else(|| input(format!("unknown cluster {} in dependence", d.from)))?;
        let mut judgments = Vec::with_capacity(d.judgments.len());
        for t in &d.judgments {
            let what = format!("judgment for {} in {} -> {}", t.target, d.from, d.to);
            judgments.push(ElementJudgment {
                target: t.target.clone(),
                matrix: build_upper(n, &t.entries, &what)?,
            });
        }
        dependence.push(Dependence { from: d.from.clone(), to: d.to.clone(), judgments });
    }

    let mut cluster_judgments = Vec::new();
    for cj in &doc.cluster_judgments {
        // the matrix order is the influencer list in cluster declaration order
        let influencers = doc
            .clusters
            .iter()
            .filter(|c| {
                doc.dependence
                    .iter()
                    .any(|d| d.from == c.name && d.to == cj.target)
            })
            .count();
        if influencers == 0 {
            return Err(input(format!(
                "cluster judgment for {}: no cluster influences it",
                cj.target
            )));
        }
        let what = format!("cluster judgment for {}", cj.target);
        cluster_judgments.push(ClusterJudgment {
            target: cj.target.clone(),
            matrix: build_upper(influencers, &cj.entries, &what)?,
        });
    }

    Ok(AnpNetwork {
        clusters,
        dependence,
        cluster_judgments,
        alternatives: doc.alternatives.clone(),
    })
}

pub fn network_from_json(text: &str) -> Result<AnpNetwork, DecisionError> {
    let doc: NetworkDoc = serde_json::from_str(text).map_err(bad)?;
    network_from_doc(&doc)
}

/// A standalone judgment matrix: `{ "matrix": { "n": 3, "entries": [...] } }`.
pub fn matrix_from_json(text: &str) -> Result<JudgmentMatrix, DecisionError> {
    let doc: MatrixWrapperDoc = serde_json::from_str(text).map_err(bad)?;
    build_upper(doc.matrix.n, &doc.matrix.entries, "judgment matrix")
}

/// Either input the `anp` pipeline accepts.
#[derive(Debug, Clone)]
pub enum AnpInput {
    Matrix(JudgmentMatrix),
    Network(AnpNetwork),
}

/// Dispatch on shape: a network document carries `"clusters"`, a bare
/// matrix carries `"matrix"`.
pub fn anp_from_json(text: &str) -> Result<AnpInput, DecisionError> {
    let probe: serde_json::Value =
        serde_json::from_str(text).map_err(bad)?;
    let obj = probe
        .as_object()
        .ok_or_else(|| DecisionError::Json("expected a JSON object".into()))?;
    if obj.contains_key("clusters") {
        Ok(AnpInput::Network(network_from_json(text)?))
    } else if obj.contains_key("matrix") {
        Ok(AnpInput::Matrix(matrix_from_json(text)?))
    } else {
        Err(DecisionError::Json(
            "expected a network ({\"clusters\": ...}) or a judgment matrix ({\"matrix\": ...})".into(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fcm::{fcm_run, Terminal};
    use crate::matrix::anp_priorities;
    use crate::network::anp_limit;
    use ugt_core::{q_from, q_one};

    #[test]
    fn fcm_doc_round_trips_the_ramp() {
        let text = r#"{
            "W": [["0", "1"], ["0", "0"]],
            "A0": ["0.5", "0"],
            "f": {"kind": "clamp01"}
        }"#;
        let map = fcm_from_json(text).unwrap();
        assert_eq!(map.concepts(), ["c1", "c2"]);
        let run = fcm_run(&map, &q_from(1, 1_000_000), 50).unwrap();
        assert_eq!(run.terminal, Terminal::FixedPoint { t: 2 });
        assert_eq!(run.trajectory.last().unwrap(), &vec![q_from(1, 2), q_one()]);
    }

    #[test]
    fn activation_docs_parse_their_knobs() {
        let text = r#"{
            "W": [["0"]],
            "A0": ["1"],
            "f": {"kind": "bivalent", "theta": "1/2"},
            "concepts": ["stress"]
        }"#;
        let map = fcm_from_json(text).unwrap();
        assert_eq!(map.concepts(), ["stress"]);

        let text = r#"{"W": [["0"]], "A0": ["1"], "f": {"kind": "sigmoid", "lambda": "5"}}"#;
        assert!(fcm_from_json(text).is_ok());

        let text = r#"{"W": [["0"]], "A0": ["1"], "f": {"kind": "softmax"}}"#;
        assert!(matches!(fcm_from_json(text), Err(DecisionError::Json(_))));

        let text = r#"{"W": [["0"]], "A0": ["1"], "f": {"kind": "clamp01"}, "extra": 1}"#;
        assert!(matches!(fcm_from_json(text), Err(DecisionError::Json(_))));
    }

    #[test]
    fn tolerances_accept_scientific_notation() {
        assert_eq!(parse_tolerance("1e-6").unwrap(), q_from(1, 1_000_000));
        assert_eq!(parse_tolerance("2.5E-3").unwrap(), q_from(1, 400));
        assert_eq!(parse_tolerance("1/100").unwrap(), q_from(1, 100));
        assert_eq!(parse_tolerance("0.05").unwrap(), q_from(1, 20));
        assert!(parse_tolerance("1e").is_err());
        assert!(parse_tolerance("e-3").is_err());
    }

    #[test]
    fn matrix_doc_builds_and_scores() {
        let text = r#"{
            "matrix": {
                "n": 2,
                "entries": [{"r": 1, "s": 2, "value": ["2", "2", "2", "2"]}]
            }
        }"#;
        let m = matrix_from_json(text).unwrap();
        let w = anp_priorities(&m).unwrap();
        assert!((w[0] - 2.0 / 3.0).abs() < 1e-9);

        let zero_based = r#"{
            "matrix": {"n": 2, "entries": [{"r": 0, "s": 1, "value": ["2", "2", "2", "2"]}]}
        }"#;
        assert!(matrix_from_json(zero_based)
            .unwrap_err()
            .to_string()
            .contains("1-based"));
    }

    #[test]
    fn network_doc_runs_the_flip() {
        let text = r#"{
            "clusters": [
                {"name": "X", "elements": ["x"]},
                {"name": "Y", "elements": ["y"]}
            ],
            "dependence": [
                {"from": "X", "to": "Y", "judgments": [{"target": "y"}]},
                {"from": "Y", "to": "X", "judgments": [{"target": "x"}]}
            ],
            "alternatives": ["x", "y"]
        }"#;
        match anp_from_json(text).unwrap() {
            AnpInput::Network(net) => {
                let out = anp_limit(&net).unwrap();
                for row in &out.limit {
                    for v in row {
                        assert!((v - 0.5).abs() < 1e-9);
                    }
                }
            }
            AnpInput::Matrix(_) => panic!("parsed as matrix"),
        }
    }

    #[test]
    fn anp_dispatch_rejects_unrecognized_shapes() {
        assert!(anp_from_json("[1, 2]").is_err());
        assert!(anp_from_json(r#"{"W": [["0"]]}"#).is_err());
    }
}
