//! Truncated Fock-space operator matrices and the operator identities that
//! hold on them.
//!
//! Truncation convention: the creator annihilates the top state,
//! `B†|N-1> = 0`. Operator identities therefore hold exactly only on
//! "interior" indices untouched by the cutoff; every contract below states
//! which rows/columns are distorted.

use ndarray::Array2;
use num_complex::Complex64;

use crate::dd::{q_number_dd, Dd};
use crate::error::{Error, Result};
use crate::frame::{q_number, DeformedFrame, QContext};

/// Identity tag carried by a truncated matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorLabel {
    Annihilator,
    Creator,
    Position,
    Momentum,
    Hamiltonian,
    Theta,
    Custom,
}

/// Dense complex matrix on the first `dim` Fock states.
#[derive(Debug, Clone)]
pub struct TruncatedOperator {
    dim: usize,
    label: OperatorLabel,
    entries: Array2<Complex64>,
}

impl TruncatedOperator {
    pub fn new(entries: Array2<Complex64>, label: OperatorLabel) -> Self {
        let dim = entries.nrows();
        assert_eq!(dim, entries.ncols(), "operator matrix must be square");
        Self { dim, label, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> OperatorLabel {
        self.label
    }

    pub fn entries(&self) -> &Array2<Complex64> {
        &self.entries
    }

    pub fn adjoint(&self) -> TruncatedOperator {
        let mut out = Array2::zeros((self.dim, self.dim));
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(i, j)] = self.entries[(j, i)].conj();
            }
        }
        TruncatedOperator::new(out, OperatorLabel::Custom)
    }

    /// Largest |entry| over the block with both indices `<= max_index`.
    pub fn max_abs_interior(&self, max_index: usize) -> f64 {
        let m = max_index.min(self.dim - 1);
        let mut best = 0.0f64;
        for i in 0..=m {
            for j in 0..=m {
                best = best.max(self.entries[(i, j)].norm());
            }
        }
        best
    }
}

fn identity(n: usize) -> Array2<Complex64> {
    Array2::eye(n)
}

fn check_finite(m: &Array2<Complex64>, what: &str) -> Result<()> {
    if m.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Ok(())
    } else {
        Err(Error::Overflow(format!("{what} left the floating range")))
    }
}

/// Annihilator and creator on `N` Fock states: `B` is the upper shift with
/// entries `sqrt([n]_q)` at `(n-1, n)`, `B†` its conjugate transpose.
pub fn build_ladder(n: usize, ctx: &QContext) -> Result<(TruncatedOperator, TruncatedOperator)> {
    assert!(n >= 2, "need at least two Fock states");
    let mut b = Array2::<Complex64>::zeros((n, n));
    for k in 1..n {
        let v = q_number(k as u32, ctx).sqrt();
        if !v.is_finite() {
            return Err(Error::Overflow(format!("sqrt([{k}]_q) overflowed at q = {}", ctx.q())));
        }
        b[(k - 1, k)] = Complex64::new(v, 0.0);
    }
    let b = TruncatedOperator::new(b, OperatorLabel::Annihilator);
    let mut bd = b.adjoint();
    bd.label = OperatorLabel::Creator;
    Ok((b, bd))
}

/// Position matrix `(B + B†)/m_alpha`, real symmetric tridiagonal.
pub fn build_position(frame: &DeformedFrame, n: usize) -> Result<TruncatedOperator> {
    let (b, bd) = build_ladder(n, &frame.q_context())?;
    let scale = Complex64::new(1.0 / frame.m_alpha(), 0.0);
    let m = (&b.entries + &bd.entries).mapv(|z| z * scale);
    Ok(TruncatedOperator::new(m, OperatorLabel::Position))
}

/// Momentum matrix `i(B† - B)/m_beta`, Hermitian tridiagonal with entries
/// `±i x_{n,beta}`.
pub fn build_momentum(frame: &DeformedFrame, n: usize) -> Result<TruncatedOperator> {
    let (b, bd) = build_ladder(n, &frame.q_context())?;
    let scale = Complex64::new(0.0, 1.0 / frame.m_beta());
    let m = (&bd.entries - &b.entries).mapv(|z| z * scale);
    Ok(TruncatedOperator::new(m, OperatorLabel::Momentum))
}

/// `B B† + B† B` by direct matrix product: diagonal `[n]_q + [n+1]_q` for
/// `n <= N-2`, and `[N-1]_q` on the truncated top entry.
pub fn build_hamiltonian(ctx: &QContext, n: usize) -> Result<TruncatedOperator> {
    let (b, bd) = build_ladder(n, ctx)?;
    let m = b.entries.dot(&bd.entries) + bd.entries.dot(&b.entries);
    check_finite(&m, "hamiltonian")?;
    Ok(TruncatedOperator::new(m, OperatorLabel::Hamiltonian))
}

/// `B B† - q B† B - I`. All entries vanish except the truncation artifact
/// `(N-1, N-1) = -q [N-1]_q - 1`.
pub fn commutator_residual(ctx: &QContext, n: usize) -> Result<TruncatedOperator> {
    assert!(n >= 2);
    // double-double: the diagonal cancels numbers of size [N]_q down to
    // zero, which plain f64 only resolves to [N]_q * eps
    let (b, bd) = dd_shift_matrices(n, ctx);
    let mut acc = b.matmul(&bd);
    acc.axpy(Dd::from(-ctx.q()), &bd.matmul(&b));
    acc.axpy(Dd::from(-1.0), &DdMatrix::eye(n));
    acc.to_operator()
}

/// `[M_x, M_p] - i(I + alpha M_x^2 + beta M_p^2)`. Entries with both indices
/// `<= N-3` vanish; truncation corrupts only the top two rows/columns.
pub fn theta_identity_residual(frame: &DeformedFrame, n: usize) -> Result<TruncatedOperator> {
    let mx = build_position(frame, n)?;
    let mp = build_momentum(frame, n)?;
    let comm = mx.entries.dot(&mp.entries) - mp.entries.dot(&mx.entries);
    let theta = identity(n)
        + mx.entries.dot(&mx.entries).mapv(|z| z * frame.alpha())
        + mp.entries.dot(&mp.entries).mapv(|z| z * frame.beta());
    let m = comm - theta.mapv(|z| z * Complex64::i());
    check_finite(&m, "theta identity residual")?;
    Ok(TruncatedOperator::new(m, OperatorLabel::Custom))
}

fn expectation(op: &Array2<Complex64>, state: &[Complex64]) -> Complex64 {
    let n = state.len();
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..n {
        let mut row = Complex64::new(0.0, 0.0);
        for j in 0..n {
            row += op[(i, j)] * state[j];
        }
        acc += state[i].conj() * row;
    }
    acc
}

/// `Δx Δp - (1 + alpha Δx² + beta Δp²)/2` for a normalized state, variances
/// taken against the truncated matrices. Nonnegative (up to truncation) for
/// states with negligible weight on the top two Fock levels; the vacuum
/// saturates it at zero.
pub fn uncertainty_check(state: &[Complex64], frame: &DeformedFrame, n: usize) -> Result<f64> {
    if state.len() != n {
        return Err(Error::Domain(format!(
            "state length {} does not match dimension {n}",
            state.len()
        )));
    }
    let norm2: f64 = state.iter().map(|z| z.norm_sqr()).sum();
    if (norm2 - 1.0).abs() > 1e-12 {
        return Err(Error::Domain(format!("state is not normalized: |psi|^2 = {norm2}")));
    }
    let mx = build_position(frame, n)?;
    let mp = build_momentum(frame, n)?;
    let ex = expectation(&mx.entries, state).re;
    let ex2 = expectation(&mx.entries.dot(&mx.entries), state).re;
    let ep = expectation(&mp.entries, state).re;
    let ep2 = expectation(&mp.entries.dot(&mp.entries), state).re;
    let var_x = ex2 - ex * ex;
    let var_p = ep2 - ep * ep;
    let lhs = (var_x * var_p).sqrt();
    let rhs = 0.5 * (1.0 + frame.alpha() * var_x + frame.beta() * var_p);
    Ok(lhs - rhs)
}

/// One term `coefficient * b†^dagger_power * b^plain_power` of a
/// normal-ordered expansion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalWord {
    pub dagger_power: u32,
    pub plain_power: u32,
    pub coefficient: Complex64,
}

fn binomial(n: u32, k: u32) -> f64 {
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * f64::from(n - i) / f64::from(i + 1);
    }
    acc
}

/// Normal-ordered expansion of `x^l p^r` in ladder words.
///
/// Expands `x = (b† + b)/m_alpha` and `p = i(b† - b)/m_beta` and drops all
/// reordering corrections: the `(s, t)` term picks `s` annihilators from the
/// position factors and `t` creators from the momentum factors, carrying the
/// sign `(-1)^{r-t}` of the `-b` choices. `(l+1)(r+1)` words before merging.
pub fn normal_order_expansion(l: u32, r: u32, frame: &DeformedFrame) -> Vec<NormalWord> {
    let base = Complex64::i().powu(r)
        / Complex64::new(frame.m_alpha().powi(l as i32) * frame.m_beta().powi(r as i32), 0.0);
    let mut words = Vec::with_capacity(((l + 1) * (r + 1)) as usize);
    for s in 0..=l {
        for t in 0..=r {
            let sign = if (r - t) % 2 == 0 { 1.0 } else { -1.0 };
            let coeff = base * Complex64::new(sign * binomial(l, s) * binomial(r, t), 0.0);
            words.push(NormalWord {
                dagger_power: l - s + t,
                plain_power: s + r - t,
                coefficient: coeff,
            });
        }
    }
    words
}

/// Merge words with equal `(dagger, plain)` powers, summing coefficients;
/// sorted by powers, zero-coefficient words dropped.
pub fn merge_normal_words(words: &[NormalWord]) -> Vec<NormalWord> {
    let mut merged: Vec<NormalWord> = Vec::new();
    for w in words {
        match merged
            .iter_mut()
            .find(|m| m.dagger_power == w.dagger_power && m.plain_power == w.plain_power)
        {
            Some(m) => m.coefficient += w.coefficient,
            None => merged.push(*w),
        }
    }
    merged.retain(|w| w.coefficient.norm() > 0.0);
    merged.sort_by_key(|w| (w.dagger_power, w.plain_power));
    merged
}

// ---- vacuum projector series (double-double internals) ----

struct DdMatrix {
    n: usize,
    data: Vec<Dd>,
}

impl DdMatrix {
    fn zeros(n: usize) -> Self {
        Self { n, data: vec![Dd::ZERO; n * n] }
    }

    fn eye(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Dd::ONE;
        }
        m
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> Dd {
        self.data[i * self.n + j]
    }

    fn matmul(&self, other: &DdMatrix) -> DdMatrix {
        let n = self.n;
        let mut out = DdMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a.hi == 0.0 && a.lo == 0.0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.at(k, j);
                    if b.hi == 0.0 && b.lo == 0.0 {
                        continue;
                    }
                    out.data[i * n + j] = out.data[i * n + j].add(a.mul(b));
                }
            }
        }
        out
    }

    fn axpy(&mut self, c: Dd, other: &DdMatrix) {
        for (d, o) in self.data.iter_mut().zip(other.data.iter()) {
            *d = d.add(c.mul(*o));
        }
    }

    fn scale(&mut self, c: Dd) {
        for d in self.data.iter_mut() {
            *d = d.mul(c);
        }
    }

    fn to_operator(&self) -> Result<TruncatedOperator> {
        let n = self.n;
        let mut out = Array2::<Complex64>::zeros((n, n));
        for i in 0..n {
            for j in 0..n {
                let v = self.at(i, j).to_f64();
                if !v.is_finite() {
                    return Err(Error::Overflow("projector series entry overflowed".into()));
                }
                out[(i, j)] = Complex64::new(v, 0.0);
            }
        }
        Ok(TruncatedOperator::new(out, OperatorLabel::Custom))
    }
}

fn dd_shift_matrices(n: usize, ctx: &QContext) -> (DdMatrix, DdMatrix) {
    let q = ctx.q();
    let mut b = DdMatrix::zeros(n);
    let mut bd = DdMatrix::zeros(n);
    for k in 1..n {
        let v = q_number_dd(k as u32, q).sqrt();
        b.data[(k - 1) * n + k] = v;
        bd.data[k * n + (k - 1)] = v;
    }
    (b, bd)
}

/// Coefficient ratio `c_k / c_{k-1} = -q^{k-1} / [k]_q`, written so neither
/// numerator nor denominator overflows.
fn q_exp_coeff_ratio(k: u32, q: f64) -> Dd {
    if q == 1.0 {
        return Dd::from(-1.0).div(Dd::from(f64::from(k)));
    }
    // -q^{k-1}/[k]_q = (q-1) / (q^{1-k} - q)
    let qinv = Dd::ONE.div(Dd::from(q));
    let denom = qinv.powi(k - 1).sub(Dd::from(q));
    Dd::from(q).sub(Dd::ONE).div(denom)
}

fn projector_series_dd(ctx: &QContext, n: usize, plain_factorial: bool) -> DdMatrix {
    let (b, bd) = dd_shift_matrices(n, ctx);
    let mut power = DdMatrix::eye(n); // B†^k B^k, by repeated sandwich product
    let mut acc = DdMatrix::eye(n);
    let mut coeff = Dd::ONE;
    for k in 1..=n as u32 {
        power = bd.matmul(&power).matmul(&b);
        coeff = coeff.mul(if plain_factorial {
            Dd::from(-1.0).div(Dd::from(f64::from(k)))
        } else {
            q_exp_coeff_ratio(k, ctx.q())
        });
        acc.axpy(coeff, &power);
    }
    acc
}

/// The normal-ordered series `Σ_k (-1)^k q^{k(k-1)/2}/[k]_q! B†^k B^k`,
/// truncated at `k = N`.
///
/// With these q-exponential coefficients the series reproduces the rank-one
/// vacuum projector on interior indices. The literal classical coefficients
/// `(-1)^k/k!` do not (see [`vacuum_projector_plain_exponential`]).
pub fn vacuum_projector_series(ctx: &QContext, n: usize) -> Result<TruncatedOperator> {
    assert!(n >= 2);
    projector_series_dd(ctx, n, false).to_operator()
}

/// Same series with the classical coefficients `(-1)^k/k!`. At q > 1 this is
/// NOT a projector: its `(2,2)` entry equals `(1-q)/2`. Kept as the
/// documented counterexample that fixes the coefficient law above.
pub fn vacuum_projector_plain_exponential(ctx: &QContext, n: usize) -> Result<TruncatedOperator> {
    assert!(n >= 2);
    projector_series_dd(ctx, n, true).to_operator()
}

/// `|m><n| = B†^m/sqrt([m]!) · (vacuum projector series) · B^n/sqrt([n]!)`:
/// equals the elementary matrix with 1 at `(m, n)` on interior entries.
pub fn ketbra(m: u32, n: u32, ctx: &QContext, dim: usize) -> Result<TruncatedOperator> {
    if (m as usize) > dim - 3 || (n as usize) > dim - 3 {
        return Err(Error::Domain(format!(
            "ketbra indices ({m}, {n}) too close to the truncation edge for dim {dim}"
        )));
    }
    let (b, bd) = dd_shift_matrices(dim, ctx);
    let mut acc = projector_series_dd(ctx, dim, false);
    for _ in 0..m {
        acc = bd.matmul(&acc);
    }
    for _ in 0..n {
        acc = acc.matmul(&b);
    }
    let mut fact = Dd::ONE;
    for k in 1..=m {
        fact = fact.mul(q_number_dd(k, ctx.q()));
    }
    for k in 1..=n {
        fact = fact.mul(q_number_dd(k, ctx.q()));
    }
    acc.scale(Dd::ONE.div(fact.sqrt()));
    acc.to_operator()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::energy_level;

    fn ctx(q: f64) -> QContext {
        QContext::new(q).unwrap()
    }

    #[test]
    fn ladder_small_cases() {
        let (b, _) = build_ladder(2, &ctx(2.0)).unwrap();
        assert_eq!(b.entries()[(0, 1)], Complex64::new(1.0, 0.0));
        let (b, bd) = build_ladder(3, &ctx(2.0)).unwrap();
        assert!((b.entries()[(1, 2)].re - 3.0f64.sqrt()).abs() < 1e-15);
        assert!((bd.entries()[(2, 1)].re - 3.0f64.sqrt()).abs() < 1e-15);
        // q = 1 recovers the undeformed matrix
        let (b, _) = build_ladder(3, &ctx(1.0)).unwrap();
        assert_eq!(b.entries()[(0, 1)].re, 1.0);
        assert!((b.entries()[(1, 2)].re - 2.0f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn position_momentum_entries() {
        let frame = DeformedFrame::derive(1.0 / 3.0, 1.0 / 3.0).unwrap();
        let mx = build_position(&frame, 2).unwrap();
        assert!((mx.entries()[(0, 1)].re - 1.0 / frame.m_alpha()).abs() < 1e-12);
        let mx = build_position(&frame, 5).unwrap();
        let x3 = q_number(3, &frame.q_context()).sqrt() / frame.m_alpha();
        assert!((mx.entries()[(2, 3)].re - x3).abs() < 1e-12);
        assert!((x3 - 7.0f64.sqrt() / frame.m_alpha()).abs() < 1e-12);
        let mp = build_momentum(&frame, 4).unwrap();
        let x1b = 1.0 / frame.m_beta();
        assert!((mp.entries()[(1, 0)] - Complex64::new(0.0, x1b)).norm() < 1e-12);
        assert!((mp.entries()[(0, 1)] - Complex64::new(0.0, -x1b)).norm() < 1e-12);
    }

    #[test]
    fn hamiltonian_diagonal() {
        let h = build_hamiltonian(&ctx(2.0), 3).unwrap();
        for (k, want) in [1.0, 4.0, 3.0].iter().enumerate() {
            assert!((h.entries()[(k, k)].re - want).abs() < 1e-14);
        }
        assert!((h.entries()[(0, 0)].re - 2.0 * energy_level(0, &ctx(2.0))).abs() < 1e-14);
        assert!((h.entries()[(1, 1)].re - 2.0 * energy_level(1, &ctx(2.0))).abs() < 1e-14);
        let h = build_hamiltonian(&ctx(1.0), 2).unwrap();
        assert_eq!(h.entries()[(0, 0)].re, 1.0);
        assert_eq!(h.entries()[(1, 1)].re, 1.0);
    }

    #[test]
    fn commutator_residual_structure() {
        let r = commutator_residual(&ctx(2.0), 2).unwrap();
        assert!(r.entries()[(0, 0)].norm() < 1e-15);
        assert!((r.entries()[(1, 1)].re + 3.0).abs() < 1e-14);
        let r = commutator_residual(&ctx(1.1), 16).unwrap();
        assert!(r.max_abs_interior(14) < 1e-12);
        let r = commutator_residual(&ctx(1.0), 3).unwrap();
        assert!((r.entries()[(2, 2)].re + 3.0).abs() < 1e-14);
        assert!(r.max_abs_interior(1) < 1e-14);
    }

    #[test]
    fn theta_identity_interior_vanishes() {
        let frame = DeformedFrame::derive(1.0 / 3.0, 1.0 / 3.0).unwrap();
        let r = theta_identity_residual(&frame, 8).unwrap();
        assert!(r.max_abs_interior(5) < 1e-10);
        let frame = DeformedFrame::derive(0.25, 1.0 / 9.0).unwrap();
        let r = theta_identity_residual(&frame, 12).unwrap();
        assert!(r.max_abs_interior(9) < 1e-10);
        // canonical limit: [x, p] = i I on the interior
        let frame = DeformedFrame::derive(1e-9, 1e-9).unwrap();
        let mx = build_position(&frame, 8).unwrap();
        let mp = build_momentum(&frame, 8).unwrap();
        let comm = mx.entries().dot(mp.entries()) - mp.entries().dot(mx.entries());
        for i in 0..6 {
            assert!((comm[(i, i)] - Complex64::i()).norm() < 1e-6);
        }
    }

    #[test]
    fn uncertainty_vacuum_saturates() {
        let frame = DeformedFrame::derive(1.0 / 3.0, 1.0 / 3.0).unwrap();
        let n = 16;
        let mut vac = vec![Complex64::new(0.0, 0.0); n];
        vac[0] = Complex64::new(1.0, 0.0);
        let gap = uncertainty_check(&vac, &frame, n).unwrap();
        assert!(gap.abs() < 1e-12, "vacuum gap {gap}");
        let mut one = vec![Complex64::new(0.0, 0.0); n];
        one[1] = Complex64::new(1.0, 0.0);
        assert!(uncertainty_check(&one, &frame, n).unwrap() > 0.0);
        let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let mut sup = vec![Complex64::new(0.0, 0.0); n];
        sup[0] = s;
        sup[1] = s;
        assert!(uncertainty_check(&sup, &frame, n).unwrap() >= -1e-10);
        // unnormalized input rejected
        let bad = vec![Complex64::new(0.5, 0.0); n];
        assert!(uncertainty_check(&bad, &frame, n).is_err());
    }

    #[test]
    fn normal_order_small_words() {
        let frame = DeformedFrame::derive(1.0 / 3.0, 1.0 / 3.0).unwrap();
        let words = merge_normal_words(&normal_order_expansion(1, 0, &frame));
        assert_eq!(words.len(), 2);
        let inv_ma = Complex64::new(1.0 / frame.m_alpha(), 0.0);
        for w in &words {
            assert!((w.coefficient - inv_ma).norm() < 1e-15);
        }
        let words = merge_normal_words(&normal_order_expansion(0, 1, &frame));
        let i_mb = Complex64::new(0.0, 1.0 / frame.m_beta());
        assert_eq!(words.len(), 2);
        let creator = words.iter().find(|w| w.dagger_power == 1).unwrap();
        let plain = words.iter().find(|w| w.plain_power == 1).unwrap();
        assert!((creator.coefficient - i_mb).norm() < 1e-15);
        assert!((plain.coefficient + i_mb).norm() < 1e-15);
        // x p: the two b†b routes cancel, leaving i(b†² - b²)/(m_a m_b)
        assert_eq!(normal_order_expansion(1, 1, &frame).len(), 4);
        let words = merge_normal_words(&normal_order_expansion(1, 1, &frame));
        assert_eq!(words.len(), 2);
        let scale = Complex64::new(0.0, 1.0 / (frame.m_alpha() * frame.m_beta()));
        let up = words.iter().find(|w| w.dagger_power == 2).unwrap();
        let down = words.iter().find(|w| w.plain_power == 2).unwrap();
        assert!((up.coefficient - scale).norm() < 1e-15);
        assert!((down.coefficient + scale).norm() < 1e-15);
    }

    #[test]
    fn vacuum_projector_is_rank_one() {
        let p = vacuum_projector_series(&ctx(2.0), 12).unwrap();
        assert!((p.entries()[(0, 0)].re - 1.0).abs() < 1e-12);
        for i in 0..=10 {
            for j in 0..=10 {
                if (i, j) != (0, 0) {
                    assert!(p.entries()[(i, j)].norm() < 1e-12, "entry ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn plain_exponential_fails_at_deformed_q() {
        // classical coefficients reduce correctly at q = 1 ...
        let p = vacuum_projector_plain_exponential(&ctx(1.0), 10).unwrap();
        assert!((p.entries()[(0, 0)].re - 1.0).abs() < 1e-12);
        assert!(p.entries()[(2, 2)].norm() < 1e-12);
        // ... but at q = 2 the (2,2) entry is (1-q)/2, not zero
        let p = vacuum_projector_plain_exponential(&ctx(2.0), 12).unwrap();
        assert!((p.entries()[(2, 2)].re + 0.5).abs() < 1e-13);
    }

    #[test]
    fn ketbra_elementary_matrices() {
        for (m, n, q, dim) in [(0u32, 0u32, 2.0, 12usize), (1, 0, 2.0, 12), (2, 3, 1.5, 14)] {
            let e = ketbra(m, n, &ctx(q), dim).unwrap();
            for i in 0..=dim - 2 {
                for j in 0..=dim - 2 {
                    let want = if (i, j) == (m as usize, n as usize) { 1.0 } else { 0.0 };
                    assert!(
                        (e.entries()[(i, j)].re - want).abs() < 1e-10,
                        "ketbra({m},{n}) entry ({i},{j}) = {}",
                        e.entries()[(i, j)]
                    );
                }
            }
        }
        assert!(ketbra(10, 0, &ctx(2.0), 12).is_err());
    }
}
