//! Cognitive-map dynamics: iterate `A <- f(A + A W)` with f applied
//! componentwise, watching for fixed points and limit cycles.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use ugt_core::{q_int, q_one, q_to_f64, q_zero, Q};

use crate::error::{input, DecisionError};

/// Componentwise activation applied after the causal update.
#[derive(Debug, Clone, PartialEq)]
pub enum Activation {
    /// Clip into [0, 1].
    Clamp01,
    /// 1 when the drive reaches the threshold, else 0.
    Bivalent { theta: Q },
    /// Logistic 1/(1 + e^{-lambda x}). Evaluated in floats; the result is a
    /// dyadic rational, stored back exactly so the trajectory stays in Q.
    Sigmoid { lambda: Q },
}

impl Activation {
    fn apply(&self, x: &Q) -> Q {
        match self {
            Activation::Clamp01 => {
                if *x < q_zero() {
                    q_zero()
                } else if *x > q_one() {
                    q_one()
                } else {
                    x.clone()
                }
            }
            Activation::Bivalent { theta } => {
                if x >= theta {
                    q_one()
                } else {
                    q_zero()
                }
            }
            Activation::Sigmoid { lambda } => {
                let v = 1.0 / (1.0 + (-q_to_f64(lambda) * q_to_f64(x)).exp());
                Q::from_float(v).expect("logistic values are finite")
            }
        }
    }
}

/// Concepts, a signed causal weight matrix with zero diagonal, an initial
/// activation vector in [0, 1]^n, and an activation function.
#[derive(Debug, Clone)]
pub struct CognitiveMap {
    concepts: Vec<String>,
    weights: Vec<Vec<Q>>,
    initial: Vec<Q>,
    activation: Activation,
}

impl CognitiveMap {
    pub fn new(
        concepts: Vec<String>,
        weights: Vec<Vec<Q>>,
        initial: Vec<Q>,
        activation: Activation,
    ) -> Result<Self, DecisionError> {
        let n = concepts.len();
        if n == 0 {
            return Err(input("cognitive map needs at least one concept"));
        }
        {
            let mut names: Vec<&String> = concepts.iter().collect();
            names.sort();
            names.dedup();
            if names.len() != n || concepts.iter().any(|c| c.is_empty()) {
                return Err(input("concept names must be distinct and nonempty"));
            }
        }
        if weights.len() != n || weights.iter().any(|row| row.len() != n) {
            return Err(input(format!("weight matrix must be {n}x{n}")));
        }
        for (i, row) in weights.iter().enumerate() {
            for (j, w) in row.iter().enumerate() {
                if i == j && !w.is_zero() {
                    return Err(input(format!("diagonal weight at {} must be 0", concepts[i])));
                }
                if w.abs() > q_one() {
                    return Err(input(format!(
                        "weight {} -> {} lies outside [-1, 1]",
                        concepts[i], concepts[j]
                    )));
                }
            }
        }
        if initial.len() != n {
            return Err(input(format!("initial state must have {n} components")));
        }
        for (j, a) in initial.iter().enumerate() {
            if *a < q_zero() || *a > q_one() {
                return Err(input(format!(
                    "initial activation of {} lies outside [0, 1]",
                    concepts[j]
                )));
            }
        }
        Ok(CognitiveMap { concepts, weights, initial, activation })
    }

    pub fn concepts(&self) -> &[String] {
        &self.concepts
    }

    pub fn n(&self) -> usize {
        self.concepts.len()
    }

    fn step(&self, state: &[Q]) -> Vec<Q> {
        let n = self.n();
        (0..n)
            .map(|j| {
                let mut drive = state[j].clone();
                for i in 0..n {
                    drive += &state[i] * &self.weights[i][j];
                }
                self.activation.apply(&drive)
            })
            .collect()
    }
}

/// How a trajectory ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Terminal {
    /// `trajectory[t]` moves by less than tol under one more update.
    FixedPoint { t: usize },
    /// The state returned (up to quantization) to one seen `period` steps
    /// earlier without first meeting the fixed-point test.
    LimitCycle { period: usize },
    /// Neither happened within the iteration budget.
    MaxIters,
}

#[derive(Debug, Clone)]
pub struct FcmRun {
    /// All states computed, starting with the initial one.
    pub trajectory: Vec<Vec<Q>>,
    pub terminal: Terminal,
}

/// Iterate the map. A fixed point is declared when successive states differ
/// by less than `tol` in the max norm; cycles are caught by hashing states
/// quantized to bins of width tol/10, so two states land in the same bin
/// only when they agree to well below the fixed-point resolution.
pub fn fcm_run(map: &CognitiveMap, tol: &Q, max_iters: usize) -> Result<FcmRun, DecisionError> {
    if *tol <= q_zero() {
        return Err(input("tolerance must be positive"));
    }
    if max_iters == 0 {
        return Err(input("max_iters must be at least 1"));
    }
    let quantum = tol / q_int(10);
    let quantize = |state: &[Q]| -> Vec<Q> { state.iter().map(|x| (x / &quantum).floor()).collect() };

    let mut trajectory = vec![map.initial.clone()];
    let mut seen: BTreeMap<Vec<Q>, usize> = BTreeMap::new();
    seen.insert(quantize(&map.initial), 0);

    for t in 0..max_iters {
        let next = map.step(&trajectory[t]);
        let moved = next
            .iter()
            .zip(&trajectory[t])
            .map(|(a, b)| (a - b).abs())
            .max()
            .unwrap_or_else(q_zero);
        trajectory.push(next);
        if moved < *tol {
            return Ok(FcmRun { trajectory, terminal: Terminal::FixedPoint { t } });
        }
        let key = quantize(&trajectory[t + 1]);
        if let Some(&s) = seen.get(&key) {
            return Ok(FcmRun { trajectory, terminal: Terminal::LimitCycle { period: t + 1 - s } });
        }
        seen.insert(key, t + 1);
    }
    Ok(FcmRun { trajectory, terminal: Terminal::MaxIters })
}
