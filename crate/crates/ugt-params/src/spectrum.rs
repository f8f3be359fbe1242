//! Adjacency spectrum of the Φ-scored matrix via cyclic Jacobi rotations.

use crate::error::ParamError;
use ugt_core::{q_to_f64, Graph};

#[derive(Clone, Debug)]
pub struct Spectrum {
    /// ascending
    pub eigenvalues: Vec<f64>,
    /// Σ|λ|
    pub energy: f64,
    /// the symmetric zero-diagonal input matrix, declaration order
    pub matrix: Vec<Vec<f64>>,
}

fn offdiag_norm(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i][j] * a[i][j];
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues of A with a_ii = 0 and a_ij = Φ(η(vi, vj)) over all declared
/// vertices; energy is the absolute eigenvalue sum. Rotations stop when the
/// off-diagonal norm falls below 1e-12; more than 100 sweeps is an error.
pub fn spectrum_energy(g: &Graph) -> Result<Spectrum, ParamError> {
    let n = g.n();
    let m = g.model();
    let mut a = vec![vec![0f64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let x = q_to_f64(&m.phi(&g.eta_or_zero(i, j)));
            a[i][j] = x;
            a[j][i] = x;
        }
    }
    let matrix = a.clone();

    let mut sweeps = 0;
    while offdiag_norm(&a) > 1e-12 {
        if sweeps == 100 {
            return Err(ParamError::NoConverge);
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for i in 0..n {
                    if i == p || i == q {
                        continue;
                    }
                    let aip = a[i][p];
                    let aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[p][i] = a[i][p];
                    a[i][q] = s * aip + c * aiq;
                    a[q][i] = a[i][q];
                }
                let apq = a[p][q];
                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
    }
    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eigenvalues.sort_by(|x, y| x.partial_cmp(y).expect("finite"));
    let energy = eigenvalues.iter().map(|l| l.abs()).sum();
    Ok(Spectrum { eigenvalues, energy, matrix })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{ex_4_8_2, fuzzy};

    #[test]
    fn edgeless_spectrum_is_zero() {
        let s = spectrum_energy(&fuzzy(&[("a", "0.5"), ("b", "0.5")], &[])).unwrap();
        assert_eq!(s.eigenvalues, vec![0.0, 0.0]);
        assert_eq!(s.energy, 0.0);
    }

    #[test]
    fn single_edge_is_plus_minus_mu() {
        let g = fuzzy(&[("a", "1"), ("b", "1")], &[("a", "b", "0.5")]);
        let s = spectrum_energy(&g).unwrap();
        assert!((s.eigenvalues[0] + 0.5).abs() < 1e-12);
        assert!((s.eigenvalues[1] - 0.5).abs() < 1e-12);
        assert!((s.energy - 1.0).abs() < 1e-12);
    }

    #[test]
    fn complete_triangle_energy() {
        let s = spectrum_energy(&ex_4_8_2()).unwrap();
        assert!((s.energy - 2.2780).abs() < 1e-3);
        let trace: f64 = s.eigenvalues.iter().sum();
        assert!(trace.abs() < 1e-9);
    }

    #[test]
    fn energy_is_order_invariant() {
        let g1 = fuzzy(
            &[("a", "0.9"), ("b", "0.7"), ("c", "0.5")],
            &[("a", "b", "0.7"), ("a", "c", "0.5"), ("b", "c", "0.5")],
        );
        let g2 = fuzzy(
            &[("c", "0.5"), ("a", "0.9"), ("b", "0.7")],
            &[("b", "c", "0.5"), ("a", "c", "0.5"), ("a", "b", "0.7")],
        );
        let e1 = spectrum_energy(&g1).unwrap().energy;
        let e2 = spectrum_energy(&g2).unwrap().energy;
        assert!((e1 - e2).abs() < 1e-12);
    }

    #[test]
    fn zero_sigma_vertices_still_enter_the_matrix() {
        // the matrix ranges over all declared vertices, support or not
        let g = fuzzy(&[("a", "0"), ("b", "1")], &[]);
        let s = spectrum_energy(&g).unwrap();
        assert_eq!(s.matrix.len(), 2);
    }
}
