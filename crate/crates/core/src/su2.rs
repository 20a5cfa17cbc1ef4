//! Finite su(2)-style ladder representations on an m-grid of step alpha, the
//! quadratic Hamiltonian in its two equivalent operator forms, and the
//! closed-form eigenvalue expressions.
//!
//! The commutator `[J+, J-]` built from the displayed ladder coefficients has
//! diagonal `2 alpha m`, not `2 alpha^{-2} m`; the latter relation is
//! published as a residual magnitude in the report, never asserted.

use std::collections::BTreeMap;

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{build_momentum, build_position, OperatorLabel, TruncatedOperator};
use crate::frame::DeformedFrame;

/// The m-grid `-j, -j + step, ..., j` with `step = alpha`.
#[derive(Debug, Clone)]
pub struct Su2Frame {
    pub j: f64,
    pub alpha: f64,
    pub m_values: Vec<f64>,
}

impl Su2Frame {
    /// Requires `j > 0`, `alpha > 0` and `2j/alpha` a nonnegative integer
    /// (grid closure); non-closing inputs are rejected, not padded.
    pub fn new(j: f64, alpha: f64) -> Result<Self> {
        if !j.is_finite() || !alpha.is_finite() || j <= 0.0 || alpha <= 0.0 {
            return Err(Error::Domain(format!(
                "su2 frame requires j > 0 and alpha > 0, got (j = {j}, alpha = {alpha})"
            )));
        }
        let steps = 2.0 * j / alpha;
        let k = steps.round();
        if (steps - k).abs() > 1e-9 * steps.max(1.0) {
            return Err(Error::Domain(format!(
                "grid does not close: 2j/alpha = {steps} is not an integer"
            )));
        }
        let n_points = k as usize + 1;
        let m_values = (0..n_points).map(|i| -j + alpha * i as f64).collect();
        Ok(Self { j, alpha, m_values })
    }

    pub fn n_points(&self) -> usize {
        self.m_values.len()
    }
}

/// Ladder matrices on the m-grid with a residual report for the claimed
/// commutation relations.
#[derive(Debug, Clone)]
pub struct Su2Representation {
    pub frame: Su2Frame,
    pub j_plus: Array2<f64>,
    pub j_minus: Array2<f64>,
    pub theta: Array2<f64>,
    /// Frobenius norms keyed by relation name (`r1`, `r2`, `r3`).
    pub residuals: BTreeMap<String, f64>,
}

/// `C+ = sqrt((j-m)(j+m+alpha))`, `C- = sqrt((j+m)(j-m+alpha))`.
pub fn ladder_coefficients(j: f64, m: f64, alpha: f64) -> Result<(f64, f64)> {
    if m < -j - 1e-12 || m > j + 1e-12 {
        return Err(Error::Domain(format!("m = {m} outside [-j, j] with j = {j}")));
    }
    let up = (j - m) * (j + m + alpha);
    let down = (j + m) * (j - m + alpha);
    if up < -1e-12 || down < -1e-12 {
        return Err(Error::Domain(format!(
            "negative radicand at (j = {j}, m = {m}, alpha = {alpha}): {up}, {down}"
        )));
    }
    Ok((up.max(0.0).sqrt(), down.max(0.0).sqrt()))
}

fn frobenius(a: &Array2<f64>) -> f64 {
    a.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// Matrices realizing `J+|j,m> = C+|j,m+alpha>`, `J-|j,m> = C-|j,m-alpha>`,
/// `Theta = diag(m)` on the closed grid. The residual map holds Frobenius
/// norms of
/// `r1 = [Theta, J+] - alpha J+`, `r2 = [Theta, J-] + alpha J-` (both vanish
/// by construction) and `r3 = [J+, J-] - 2 alpha^{-2} Theta` (reported,
/// nonzero: the commutator diagonal is actually `2 alpha m`).
pub fn build_representation(j: f64, alpha: f64) -> Result<Su2Representation> {
    let frame = Su2Frame::new(j, alpha)?;
    let n = frame.n_points();
    let mut j_plus = Array2::<f64>::zeros((n, n));
    let mut theta = Array2::<f64>::zeros((n, n));
    for (i, &m) in frame.m_values.iter().enumerate() {
        theta[(i, i)] = m;
        if i + 1 < n {
            let (c_plus, _) = ladder_coefficients(j, m, alpha)?;
            j_plus[(i + 1, i)] = c_plus;
        }
    }
    let j_minus = j_plus.t().to_owned();

    let comm = |a: &Array2<f64>, b: &Array2<f64>| a.dot(b) - b.dot(a);
    let r1 = comm(&theta, &j_plus) - alpha * &j_plus;
    let r2 = comm(&theta, &j_minus) + alpha * &j_minus;
    let r3 = comm(&j_plus, &j_minus) - (2.0 / (alpha * alpha)) * &theta;
    let mut residuals = BTreeMap::new();
    residuals.insert("r1".to_string(), frobenius(&r1));
    residuals.insert("r2".to_string(), frobenius(&r2));
    residuals.insert("r3".to_string(), frobenius(&r3));

    Ok(Su2Representation { frame, j_plus, j_minus, theta, residuals })
}

impl Su2Representation {
    /// Diagonal of `[J+, J-]` (equals `2 alpha m` on every grid point).
    pub fn commutator_diagonal(&self) -> Vec<f64> {
        let c = self.j_plus.dot(&self.j_minus) - self.j_minus.dot(&self.j_plus);
        (0..self.frame.n_points()).map(|i| c[(i, i)]).collect()
    }
}

/// `H = (1/2)[(1 + alpha) Mx^2 + (1 + beta) Mp^2 + I]` on the truncated
/// Fock matrices.
pub fn quadratic_hamiltonian(frame: &DeformedFrame, n: usize) -> Result<TruncatedOperator> {
    let mx = build_position(frame, n)?;
    let mp = build_momentum(frame, n)?;
    let mut h = mx.entries().dot(mx.entries()).mapv(|v| v * (1.0 + frame.alpha()))
        + mp.entries().dot(mp.entries()).mapv(|v| v * (1.0 + frame.beta()));
    for i in 0..n {
        h[(i, i)] += Complex64::new(1.0, 0.0);
    }
    Ok(TruncatedOperator::new(h.mapv(|v| 0.5 * v), OperatorLabel::Hamiltonian))
}

/// The ladder-product route `(1/2)(Mx + i Mp)(Mx - i Mp)`, which equals the
/// quadratic form wherever the deformed commutator identity holds (interior
/// of the truncation).
pub fn quadratic_hamiltonian_ladder_route(
    frame: &DeformedFrame,
    n: usize,
) -> Result<TruncatedOperator> {
    let mx = build_position(frame, n)?;
    let mp = build_momentum(frame, n)?;
    let i = Complex64::i();
    let a_dag = mx.entries() + &mp.entries().mapv(|v| i * v);
    let a = mx.entries() - &mp.entries().mapv(|v| i * v);
    let h = a_dag.dot(&a).mapv(|v| 0.5 * v);
    Ok(TruncatedOperator::new(h, OperatorLabel::Hamiltonian))
}

/// The displayed closed form
/// `(alpha^2/2) sqrt((j+m)(j-m)(j+m+alpha)(j-m+alpha))`.
pub fn hamiltonian_eigenvalue_formula(j: f64, m: f64, alpha: f64) -> f64 {
    let rad = (j + m) * (j - m) * (j + m + alpha) * (j - m + alpha);
    0.5 * alpha * alpha * rad.max(0.0).sqrt()
}

/// The representation-theoretic route: eigenvalue of `(alpha^2/2) J+ J-` on
/// `|j,m>`, i.e. `(alpha^2/2)(j+m)(j-m+alpha)`. Agrees with the geometric
/// mean form exactly at `m = 0`, differs elsewhere.
pub fn hamiltonian_eigenvalue_ladder_route(j: f64, m: f64, alpha: f64) -> f64 {
    0.5 * alpha * alpha * (j + m) * (j - m + alpha)
}

/// The displayed `J^2` eigenvalue
/// `2 alpha^2 sqrt((j+m)(j-m)(j+m+2alpha)(j-m+2alpha))`.
pub fn j2_eigenvalue_formula(j: f64, m: f64, alpha: f64) -> f64 {
    let rad = (j + m) * (j - m) * (j + m + 2.0 * alpha) * (j - m + 2.0 * alpha);
    2.0 * alpha * alpha * rad.max(0.0).sqrt()
}
