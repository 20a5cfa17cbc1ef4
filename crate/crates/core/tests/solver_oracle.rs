//! Cross-checks the tridiagonal bisection eigensolver against an independent
//! dense Jacobi-rotation solver on random matrices.

mod common;

use ndarray::Array2;
use qdho_core::{eigendecompose, TridiagonalSymmetric};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn dense_from(t: &TridiagonalSymmetric) -> Array2<f64> {
    let n = t.dim();
    let mut a = Array2::zeros((n, n));
    for i in 0..n {
        a[(i, i)] = t.diag[i];
        if i + 1 < n {
            a[(i, i + 1)] = t.offdiag[i];
            a[(i + 1, i)] = t.offdiag[i];
        }
    }
    a
}

#[test]
fn bisection_matches_dense_jacobi_on_random_tridiagonals() {
    let mut rng = StdRng::seed_from_u64(0x51ab);
    for trial in 0..100 {
        let n = rng.gen_range(2..=64);
        let diag: Vec<f64> = (0..n).map(|_| rng.gen_range(-5.0..5.0)).collect();
        let offdiag: Vec<f64> = (0..n - 1).map(|_| rng.gen_range(-3.0..3.0)).collect();
        let t = TridiagonalSymmetric::new(diag, offdiag).unwrap();
        let (vals, _) = eigendecompose(&t, false).unwrap();
        let oracle = common::jacobi_eigenvalues(&dense_from(&t));
        let scale = oracle.iter().map(|v| v.abs()).fold(1.0, f64::max);
        for (a, b) in vals.iter().zip(oracle.iter()) {
            assert!((a - b).abs() < 1e-9 * scale, "trial {trial}, n {n}: {a} vs {b}");
        }
    }
}

#[test]
fn eigenvectors_from_random_matrices_have_small_residuals() {
    let mut rng = StdRng::seed_from_u64(0xbead);
    for _ in 0..20 {
        let n = rng.gen_range(3..=40);
        let diag: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let offdiag: Vec<f64> = (0..n - 1).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let t = TridiagonalSymmetric::new(diag, offdiag).unwrap();
        let (vals, vecs) = eigendecompose(&t, true).unwrap();
        let vecs = vecs.unwrap();
        let norm = vals.iter().map(|v| v.abs()).fold(1.0, f64::max);
        for (lambda, v) in vals.iter().zip(vecs.iter()) {
            // residual ||T v - lambda v||
            let mut res = 0.0f64;
            for i in 0..n {
                let mut tv = t.diag[i] * v[i];
                if i > 0 {
                    tv += t.offdiag[i - 1] * v[i - 1];
                }
                if i + 1 < n {
                    tv += t.offdiag[i] * v[i + 1];
                }
                res += (tv - lambda * v[i]).powi(2);
            }
            assert!(res.sqrt() < 1e-9 * norm, "lambda {lambda}: residual {}", res.sqrt());
        }
    }
}
