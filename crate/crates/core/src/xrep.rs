//! Position-representation grid realization at the beta = 0 specialization:
//! the weighted momentum operator `-i (1 + alpha x^2) d/dx`, Hermiticity in
//! the `dx / (1 + alpha x^2)` inner product, and the deformed plane-wave
//! kernel with its Fourier limit.

use ndarray::{Array1, Array2};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Uniform grid on `[x_min, x_max]`.
#[derive(Debug, Clone)]
pub struct Grid1D {
    pub x_min: f64,
    pub x_max: f64,
    pub n_points: usize,
    pub h: f64,
}

impl Grid1D {
    pub fn new(x_min: f64, x_max: f64, n_points: usize) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite()) || x_max <= x_min {
            return Err(Error::Domain(format!("bad grid bounds [{x_min}, {x_max}]")));
        }
        if n_points < 8 {
            return Err(Error::Domain(format!("need at least 8 grid points, got {n_points}")));
        }
        let h = (x_max - x_min) / (n_points - 1) as f64;
        Ok(Self { x_min, x_max, n_points, h })
    }

    /// Symmetric grid `[-half_width, half_width]`, the shape the parity
    /// checks assume.
    pub fn symmetric(half_width: f64, n_points: usize) -> Result<Self> {
        Self::new(-half_width, half_width, n_points)
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n_points).map(|i| self.x_min + self.h * i as f64).collect()
    }
}

/// Discretized `-i theta(x) d/dx` together with the `1/theta` quadrature
/// weights of its natural inner product.
#[derive(Debug, Clone)]
pub struct WeightedOperator {
    pub grid: Grid1D,
    pub op_matrix: Array2<Complex64>,
    pub weight: Array1<f64>,
}

/// `-i diag(1 + alpha x^2) D` with `D` the central-difference derivative
/// (two-point one-sided stencils at the endpoints); weights `1/(1+alpha x^2)`.
pub fn build_momentum_xrep(grid: &Grid1D, alpha: f64) -> Result<WeightedOperator> {
    if !alpha.is_finite() || alpha < 0.0 {
        return Err(Error::Domain(format!("alpha must be >= 0, got {alpha}")));
    }
    let n = grid.n_points;
    let xs = grid.points();
    let mut d = Array2::<f64>::zeros((n, n));
    let inv_2h = 1.0 / (2.0 * grid.h);
    for i in 1..n - 1 {
        d[(i, i - 1)] = -inv_2h;
        d[(i, i + 1)] = inv_2h;
    }
    d[(0, 0)] = -1.0 / grid.h;
    d[(0, 1)] = 1.0 / grid.h;
    d[(n - 1, n - 2)] = -1.0 / grid.h;
    d[(n - 1, n - 1)] = 1.0 / grid.h;

    let mut op = Array2::<Complex64>::zeros((n, n));
    let mut weight = Array1::<f64>::zeros(n);
    for i in 0..n {
        let theta = 1.0 + alpha * xs[i] * xs[i];
        weight[i] = 1.0 / theta;
        for j in 0..n {
            if d[(i, j)] != 0.0 {
                op[(i, j)] = Complex64::new(0.0, -theta * d[(i, j)]);
            }
        }
    }
    Ok(WeightedOperator { grid: grid.clone(), op_matrix: op, weight })
}

fn weighted_inner(op: &WeightedOperator, f: &[Complex64], g: &[Complex64]) -> Complex64 {
    // weighted trapezoid: endpoint samples carry half weight
    let n = op.grid.n_points;
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..n {
        let trap = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
        acc += f[i].conj() * g[i] * (op.weight[i] * trap);
    }
    acc * op.grid.h
}

fn apply(op: &WeightedOperator, f: &[Complex64]) -> Vec<Complex64> {
    let v = Array1::from(f.to_vec());
    op.op_matrix.dot(&v).to_vec()
}

/// `|<f, Pg>_w - <Pf, g>_w|` with the weighted trapezoid inner product.
///
/// Returns the residual and a boundary flag: `true` when either function
/// exceeds 1e-12 at a grid endpoint, in which case the decay precondition is
/// violated and the residual carries an uncontrolled boundary term.
pub fn weighted_hermiticity_residual(
    op: &WeightedOperator,
    f: &[Complex64],
    g: &[Complex64],
) -> Result<(f64, bool)> {
    let n = op.grid.n_points;
    if f.len() != n || g.len() != n {
        return Err(Error::Domain(format!(
            "sample lengths ({}, {}) do not match the {n}-point grid",
            f.len(),
            g.len()
        )));
    }
    let boundary = [f[0], f[n - 1], g[0], g[n - 1]]
        .iter()
        .any(|z| z.norm() > 1e-12);
    let lhs = weighted_inner(op, f, &apply(op, g));
    let rhs = weighted_inner(op, &apply(op, f), g);
    Ok(((lhs - rhs).norm(), boundary))
}

/// Phase `(p / (alpha sigma)) arctan(x / sigma)` with
/// `sigma = sqrt(p^2 + 1/alpha)`; tends to `p x` as `alpha -> 0`.
pub fn kernel_phase(x: f64, p: f64, alpha: f64) -> Result<f64> {
    if !alpha.is_finite() || alpha <= 0.0 {
        return Err(Error::Domain(format!("kernel phase requires alpha > 0, got {alpha}")));
    }
    let sigma = (p * p + 1.0 / alpha).sqrt();
    Ok(p / (alpha * sigma) * (x / sigma).atan())
}

/// Trapezoid quadrature of `integral dp exp(i phase(x, p)) psi(p)` at each
/// target `x`. Contract is limited to finiteness, parity, and linear-in-alpha
/// convergence to the plain `e^{ipx}` transform of the same samples.
pub fn kernel_transform(
    p_grid: &Grid1D,
    psi: &[Complex64],
    alpha: f64,
    x_targets: &[f64],
) -> Result<Vec<Complex64>> {
    let n = p_grid.n_points;
    if psi.len() != n {
        return Err(Error::Domain(format!(
            "sample length {} does not match the {n}-point p grid",
            psi.len()
        )));
    }
    let ps = p_grid.points();
    let mut out = Vec::with_capacity(x_targets.len());
    for &x in x_targets {
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..n {
            let trap = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
            let phase = kernel_phase(x, ps[i], alpha)?;
            acc += Complex64::new(0.0, phase).exp() * psi[i] * trap;
        }
        out.push(acc * p_grid.h);
    }
    Ok(out)
}
