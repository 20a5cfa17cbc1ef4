//! Shared oracles for the integration suites: a dense Jacobi-rotation
//! eigensolver (independent of the library's bisection solver) and a seeded
//! random-frame sampler.

use ndarray::Array2;
use qdho_core::DeformedFrame;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
/// ascending. Independent of the library's Sturm-bisection path.
pub fn jacobi_eigenvalues(a: &Array2<f64>) -> Vec<f64> {
    let n = a.nrows();
    assert_eq!(n, a.ncols());
    let mut m = a.clone();
    for _sweep in 0..200 {
        let mut off = 0.0f64;
        for i in 0..n {
            for j in i + 1..n {
                off += m[(i, j)] * m[(i, j)];
            }
        }
        if off.sqrt() < 1e-14 * (1.0 + m.iter().map(|v| v.abs()).fold(0.0, f64::max)) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (m[(q, q)] - m[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = c * mkp - s * mkq;
                    m[(k, q)] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = c * mpk - s * mqk;
                    m[(q, k)] = s * mpk + c * mqk;
                }
            }
        }
    }
    let mut vals: Vec<f64> = (0..n).map(|i| m[(i, i)]).collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    vals
}

/// Seeded frames with `alpha, beta ~ U(0.02, 0.5)`: q stays below ~3 so
/// double-precision contracts at 1e-10 are meaningful.
pub fn random_frames(seed: u64, count: usize) -> Vec<DeformedFrame> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let alpha = rng.gen_range(0.02..0.5);
            let beta = rng.gen_range(0.02..0.5);
            DeformedFrame::derive(alpha, beta).expect("bounded parameters are always valid")
        })
        .collect()
}
