//! Deformation parameters and q-number arithmetic.
//!
//! The commutator `[x, p] = i(1 + alpha x^2 + beta p^2)` admits a ladder
//! realization with `b b† - q b† b = 1`, where `q = (1+sqrt(ab))/(1-sqrt(ab))`
//! and the scale factors `m_alpha`, `m_beta` relate `(x, p)` to `(b, b†)`.
//! Everything downstream consumes either a [`DeformedFrame`] or a bare
//! [`QContext`].

use crate::error::{Error, Result};

/// The q parameter on its own, for computations that do not need the
/// underlying `(alpha, beta)` pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QContext {
    q: f64,
}

impl QContext {
    pub fn new(q: f64) -> Result<Self> {
        if !q.is_finite() || q < 1.0 {
            return Err(Error::Domain(format!("q must be finite and >= 1, got {q}")));
        }
        Ok(Self { q })
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// The undeformed limit is an exact branch, not a limit of the rational
    /// form (which is 0/0 at q = 1).
    pub fn is_classical(&self) -> bool {
        self.q == 1.0
    }
}

/// Parameter bundle `(alpha, beta, q, m_alpha, m_beta)`.
///
/// Constructed only through [`DeformedFrame::derive`], so the derived fields
/// always match the stored `alpha`, `beta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformedFrame {
    alpha: f64,
    beta: f64,
    q: f64,
    m_alpha: f64,
    m_beta: f64,
}

impl DeformedFrame {
    /// Derive `q`, `m_alpha`, `m_beta` from the deformation pair.
    ///
    /// Requires `alpha > 0`, `beta > 0` and `alpha * beta < 1`; with exactly
    /// one of the two zero the matching scale factor diverges, so such frames
    /// are rejected rather than approximated.
    pub fn derive(alpha: f64, beta: f64) -> Result<Self> {
        if !alpha.is_finite() || !beta.is_finite() || alpha <= 0.0 || beta <= 0.0 {
            return Err(Error::Domain(format!(
                "alpha and beta must be finite and positive, got ({alpha}, {beta})"
            )));
        }
        let s = (alpha * beta).sqrt();
        if s >= 1.0 {
            return Err(Error::Domain(format!(
                "alpha*beta must be < 1 for the q-realization to exist, got {}",
                alpha * beta
            )));
        }
        let q = (1.0 + s) / (1.0 - s);
        let m_alpha = (2.0 * alpha * (1.0 / s - 1.0)).sqrt();
        let m_beta = (2.0 * beta * (1.0 / s - 1.0)).sqrt();
        Ok(Self { alpha, beta, q, m_alpha, m_beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn m_alpha(&self) -> f64 {
        self.m_alpha
    }

    pub fn m_beta(&self) -> f64 {
        self.m_beta
    }

    pub fn q_context(&self) -> QContext {
        QContext { q: self.q }
    }
}

/// The q-integer `[n]_q = (1 - q^n) / (1 - q)`, with `[n]_1 = n`.
pub fn q_number(n: u32, ctx: &QContext) -> f64 {
    if ctx.is_classical() {
        return f64::from(n);
    }
    let q = ctx.q();
    (1.0 - q.powi(n as i32)) / (1.0 - q)
}

/// `ln [n]_q` for `n >= 1`, stable against `q^n` overflow.
pub fn log_q_number(n: u32, ctx: &QContext) -> f64 {
    assert!(n >= 1, "log_q_number requires n >= 1");
    if ctx.is_classical() {
        return f64::from(n).ln();
    }
    let q = ctx.q();
    // [n]_q = (q^n - 1)/(q - 1) = q^n (1 - q^{-n}) / (q - 1)
    f64::from(n) * q.ln() + (-q.powi(-(n as i32))).ln_1p() - (q - 1.0).ln()
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q` (empty product = 1).
pub fn q_factorial(n: u32, ctx: &QContext) -> Result<f64> {
    let mut prod = 1.0;
    for k in 1..=n {
        prod *= q_number(k, ctx);
        if !prod.is_finite() {
            return Err(Error::Overflow(format!(
                "[{n}]_q! exceeds the floating range at q = {}; use log_q_factorial",
                ctx.q()
            )));
        }
    }
    Ok(prod)
}

/// `ln [n]_q!` as a sum of logs; finite wherever the individual factors are.
pub fn log_q_factorial(n: u32, ctx: &QContext) -> f64 {
    (1..=n).map(|k| log_q_number(k, ctx)).sum()
}

/// Oscillator level `E_n = ([n]_q + [n+1]_q) / 2`.
pub fn energy_level(n: u32, ctx: &QContext) -> f64 {
    0.5 * (q_number(n, ctx) + q_number(n + 1, ctx))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(q: f64) -> QContext {
        QContext::new(q).unwrap()
    }

    #[test]
    fn derive_frame_symmetric_third() {
        let f = DeformedFrame::derive(1.0 / 3.0, 1.0 / 3.0).unwrap();
        assert!((f.q() - 2.0).abs() < 1e-14);
        let expect = (4.0f64 / 3.0).sqrt();
        assert!((f.m_alpha() - expect).abs() < 1e-12);
        assert!((f.m_beta() - expect).abs() < 1e-12);
        // product identity m_alpha m_beta = 2(1 - sqrt(ab)) = 4/3
        assert!((f.m_alpha() * f.m_beta() - 4.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn derive_frame_asymmetric() {
        let f = DeformedFrame::derive(0.25, 1.0 / 9.0).unwrap();
        assert!((f.q() - 1.4).abs() < 1e-14);
        assert!((f.m_alpha() - (2.5f64).sqrt()).abs() < 1e-12);
        assert!((f.m_beta() - (10.0f64 / 9.0).sqrt()).abs() < 1e-12);
        let s: f64 = 1.0 / 6.0;
        assert!((f.m_alpha() * f.m_beta() - 2.0 * (1.0 - s)).abs() < 1e-14);
    }

    #[test]
    fn derive_frame_small_parameters_approach_classical() {
        let f = DeformedFrame::derive(1e-12, 1e-12).unwrap();
        assert!((f.q() - 1.0).abs() < 1e-10);
        assert!((f.m_alpha() - std::f64::consts::SQRT_2).abs() < 1e-6);
    }

    #[test]
    fn derive_frame_rejects_bad_parameters() {
        assert!(DeformedFrame::derive(2.0, 1.0).is_err());
        assert!(DeformedFrame::derive(0.0, 0.5).is_err());
        assert!(DeformedFrame::derive(0.5, 0.0).is_err());
        assert!(DeformedFrame::derive(-0.1, 0.5).is_err());
    }

    #[test]
    fn q_number_values() {
        assert_eq!(q_number(0, &ctx(2.0)), 0.0);
        assert!((q_number(2, &ctx(1.7)) - 2.7).abs() < 1e-14);
        // oracle: sum of powers 1 + 2 + 4 + 8 + 16
        assert_eq!(q_number(5, &ctx(2.0)), 31.0);
        assert_eq!(q_number(7, &ctx(1.0)), 7.0);
    }

    #[test]
    fn q_factorial_values() {
        assert_eq!(q_factorial(0, &ctx(2.0)).unwrap(), 1.0);
        // oracle: 1 * 3 * 7
        assert_eq!(q_factorial(3, &ctx(2.0)).unwrap(), 21.0);
        assert!((q_factorial(2, &ctx(1.5)).unwrap() - 2.5).abs() < 1e-14);
        assert!(q_factorial(5000, &ctx(2.0)).is_err());
    }

    #[test]
    fn log_q_factorial_matches_direct_product() {
        assert_eq!(log_q_factorial(0, &ctx(2.0)), 0.0);
        let lg = log_q_factorial(3, &ctx(2.0));
        assert!((lg - 21.0f64.ln()).abs() < 1e-12);
        for q in [1.2, 2.0, 3.5] {
            for n in [1u32, 4, 9, 17] {
                let direct = q_factorial(n, &ctx(q)).unwrap();
                let rel = (log_q_factorial(n, &ctx(q)).exp() - direct).abs() / direct;
                assert!(rel < 1e-12, "q={q} n={n} rel={rel}");
            }
        }
        // finite where the plain product overflows
        assert!(q_factorial(200, &ctx(1.2)).is_err());
        assert!(log_q_factorial(200, &ctx(1.2)).is_finite());
    }

    #[test]
    fn energy_levels() {
        assert_eq!(energy_level(0, &ctx(3.3)), 0.5);
        assert_eq!(energy_level(1, &ctx(2.0)), 2.0);
        assert_eq!(energy_level(2, &ctx(2.0)), 5.0);
        assert_eq!(energy_level(4, &ctx(1.0)), 4.5);
    }
}
