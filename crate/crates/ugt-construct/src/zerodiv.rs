//! Zero-divisor graphs over Z_n.

use crate::error::ConstructError;
use std::collections::BTreeMap;
use ugt_core::{Degree, Graph, Model};

/// Nonzero zero divisors of Z_n in ascending order: x with gcd(x, n) > 1.
pub fn zero_divisors(n: u64) -> Vec<u64> {
    (1..n).filter(|&x| gcd(x, n) > 1).collect()
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Zero-divisor graph of Z_n: vertices are the nonzero zero divisors, edges
/// the distinct annihilating pairs (xy ≡ 0 mod n). With `eta = None` the
/// strong form fills every edge with Γ of its endpoint degrees; otherwise the
/// supplied map decorates exactly the annihilating pairs it mentions.
pub fn zero_divisor_graph(
    model: &Model,
    n: u64,
    sigma: &BTreeMap<u64, Degree>,
    eta: Option<&BTreeMap<(u64, u64), Degree>>,
) -> Result<Graph, ConstructError> {
    if n < 2 {
        return Err(ConstructError::Input(format!(
            "Z_{n} has no zero-divisor graph; n must be at least 2"
        )));
    }
    let divisors = zero_divisors(n);
    for x in &divisors {
        if !sigma.contains_key(x) {
            return Err(ConstructError::Input(format!(
                "sigma is missing the zero divisor {x}"
            )));
        }
    }
    for x in sigma.keys() {
        if !divisors.contains(x) {
            return Err(ConstructError::Input(format!(
                "{x} is not a nonzero zero divisor of Z_{n}"
            )));
        }
    }

    let vertices: Vec<(String, Degree)> = divisors
        .iter()
        .map(|x| (x.to_string(), sigma[x].clone()))
        .collect();

    let mut edges = Vec::new();
    match eta {
        None => {
            for (i, &x) in divisors.iter().enumerate() {
                for &y in &divisors[i + 1..] {
                    if (x * y) % n == 0 {
                        edges.push((x.to_string(), y.to_string(), model.gamma(&sigma[&x], &sigma[&y])));
                    }
                }
            }
        }
        Some(map) => {
            for (&(x, y), d) in map {
                let annihilating = x != y
                    && divisors.contains(&x)
                    && divisors.contains(&y)
                    && (x * y) % n == 0;
                if !annihilating {
                    return Err(ConstructError::Input(format!(
                        "{{{x},{y}}} is not an annihilating pair in Z_{n}"
                    )));
                }
                edges.push((x.to_string(), y.to_string(), d.clone()));
            }
        }
    }
    Ok(Graph::new(model.clone(), vertices, edges)?)
}
