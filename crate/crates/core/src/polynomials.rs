//! The three deformed polynomial families generated by the Jacobi-matrix
//! recurrences: the deficiency-vector polynomials `P_n(z)`, the q-Hermite
//! family `H_{n,q}(x)`, and its complex momentum variant `H_{n,q}(ip)`.
//!
//! Everything is evaluated by forward recurrence; no closed forms are
//! assumed.

use num_complex::Complex64;

use crate::error::Result;
use crate::frame::{q_number, DeformedFrame, QContext};
use crate::spectra::{eigendecompose, TridiagonalSymmetric};

/// Which recurrence a [`RecurrencePolynomial`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `sqrt([n]) P_{n-1} + sqrt([n+1]) P_{n+1} = z P_n`, `P_{-1} = 0`, `P_0 = 1`.
    Deficiency,
    /// `2x H_n = H_{n+1} + (1 - q^n) H_{n-1}`, `H_0 = 1`.
    HermitePosition,
    /// `H_{n+1}(ip) = 2ip H_n(ip) + (1 - q^n) H_{n-1}(ip)`.
    HermiteMomentum,
}

/// A three-term-recurrence family bound to its q context.
#[derive(Debug, Clone, Copy)]
pub struct RecurrencePolynomial {
    pub family: Family,
    pub ctx: QContext,
}

impl RecurrencePolynomial {
    pub fn new(family: Family, ctx: QContext) -> Self {
        Self { family, ctx }
    }

    pub fn eval(&self, n: u32, z: Complex64) -> Complex64 {
        match self.family {
            Family::Deficiency => eval_p(n, z, &self.ctx),
            Family::HermitePosition => Complex64::new(eval_qhermite(n, z.re, &self.ctx), 0.0),
            Family::HermiteMomentum => eval_qhermite_momentum(n, z.re, &self.ctx),
        }
    }
}

/// `P_n(z)` by forward recurrence
/// `P_{n+1} = (z P_n - sqrt([n]) P_{n-1}) / sqrt([n+1])`.
pub fn eval_p(n: u32, z: Complex64, ctx: &QContext) -> Complex64 {
    let mut prev = Complex64::new(0.0, 0.0);
    let mut cur = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let next = (z * cur - q_number(k, ctx).sqrt() * prev) / q_number(k + 1, ctx).sqrt();
        prev = cur;
        cur = next;
    }
    cur
}

/// `P_0(z) .. P_n(z)` in one pass (used for deficiency-vector norms).
pub fn eval_p_sequence(n: usize, z: Complex64, ctx: &QContext) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(n + 1);
    let mut prev = Complex64::new(0.0, 0.0);
    let mut cur = Complex64::new(1.0, 0.0);
    out.push(cur);
    for k in 0..n as u32 {
        let next = (z * cur - q_number(k, ctx).sqrt() * prev) / q_number(k + 1, ctx).sqrt();
        prev = cur;
        cur = next;
        out.push(cur);
    }
    out
}

/// `H_{n,q}(x)` from `2x H_n = H_{n+1} + (1 - q^n) H_{n-1}` with `H_0 = 1`
/// (`H_1 = 2x` is forced by the n = 0 step with `H_{-1} = 0`).
pub fn eval_qhermite(n: u32, x: f64, ctx: &QContext) -> f64 {
    let q = ctx.q();
    let mut prev = 0.0f64;
    let mut cur = 1.0f64;
    for k in 0..n {
        let next = 2.0 * x * cur - (1.0 - q.powi(k as i32)) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The momentum variant `H_{n,q}(ip)`, whose recurrence carries the opposite
/// sign on the lower term: `H_{n+1}(ip) = 2ip H_n(ip) + (1 - q^n) H_{n-1}(ip)`.
pub fn eval_qhermite_momentum(n: u32, p: f64, ctx: &QContext) -> Complex64 {
    let q = ctx.q();
    let two_ip = Complex64::new(0.0, 2.0 * p);
    let mut prev = Complex64::new(0.0, 0.0);
    let mut cur = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let next = two_ip * cur + (1.0 - q.powi(k as i32)) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Coefficient vector (ascending degree) of `H_{n,q}` via the same recurrence
/// run on coefficient arrays. Leading coefficient is `2^n`.
pub fn qhermite_coefficients(n: u32, ctx: &QContext) -> Vec<f64> {
    let q = ctx.q();
    let mut prev: Vec<f64> = vec![];
    let mut cur: Vec<f64> = vec![1.0];
    for k in 0..n {
        let mut next = vec![0.0; cur.len() + 1];
        for (d, c) in cur.iter().enumerate() {
            next[d + 1] += 2.0 * c;
        }
        let damp = 1.0 - q.powi(k as i32);
        for (d, c) in prev.iter().enumerate() {
            next[d] -= damp * c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// Coefficient vector (ascending degree) of `P_n`.
pub fn p_coefficients(n: u32, ctx: &QContext) -> Vec<f64> {
    let mut prev: Vec<f64> = vec![];
    let mut cur: Vec<f64> = vec![1.0];
    for k in 0..n {
        let down = q_number(k, ctx).sqrt();
        let up = q_number(k + 1, ctx).sqrt();
        let mut next = vec![0.0; cur.len() + 1];
        for (d, c) in cur.iter().enumerate() {
            next[d + 1] += c / up;
        }
        for (d, c) in prev.iter().enumerate() {
            next[d] -= down * c / up;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// Both sides of the bridge between the deficiency and q-Hermite families:
/// `H_{n,q}(x) = (q;q)_n^{1/2} P_n(2x / (1-q)^{1/2})`.
///
/// For q > 1 the factors `(1 - q^k)` are negative, so both the Pochhammer
/// square root (taken factor by factor on the principal branch) and the
/// argument scaling live in the complex plane; the two sides agree there.
pub fn relate_p_to_h(n: u32, x: f64, frame: &DeformedFrame) -> (Complex64, Complex64) {
    let ctx = frame.q_context();
    let q = ctx.q();
    let sqrt_one_minus_q = Complex64::new(1.0 - q, 0.0).sqrt();
    let mut pochhammer_sqrt = Complex64::new(1.0, 0.0);
    for k in 1..=n {
        pochhammer_sqrt *= Complex64::new(1.0 - q.powi(k as i32), 0.0).sqrt();
    }
    let z = if n == 0 {
        Complex64::new(0.0, 0.0)
    } else {
        Complex64::new(2.0 * x, 0.0) / sqrt_one_minus_q
    };
    let lhs = pochhammer_sqrt * eval_p(n, z, &ctx);
    let rhs = Complex64::new(eval_qhermite(n, x, &ctx), 0.0);
    (lhs, rhs)
}

/// Real zeros of `P_n` as the eigenvalues of the n-by-n Jacobi matrix with
/// off-diagonal `sqrt([k]_q)`. Real, simple, symmetric about 0.
pub fn zeros(n: u32, ctx: &QContext) -> Result<Vec<f64>> {
    let t = TridiagonalSymmetric::recurrence_jacobi(ctx, n as usize);
    let (vals, _) = eigendecompose(&t, false)?;
    Ok(vals)
}
