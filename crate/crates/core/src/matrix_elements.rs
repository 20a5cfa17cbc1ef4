//! Closed-form Fock matrix elements of ladder words and of normal-ordered
//! `x^l p^r` monomials.
//!
//! All factorial ratios are evaluated in log space and exponentiated once, so
//! intermediate `[k]_q!` overflow never poisons an element whose final value
//! is representable. [`Error::Overflow`] is raised only when the element
//! itself leaves the floating range.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{merge_normal_words, normal_order_expansion};
use crate::frame::{log_q_factorial, DeformedFrame, QContext};

/// `<n - r + l | b†^l b^r | n>`, the single nonzero element of the word
/// `b†^l b^r` in column `n`: `sqrt([n]! [n-r+l]!) / [n-r]!`. Zero when
/// `n < r` (the annihilators empty the state).
pub fn normal_word_element(l: u32, r: u32, n: u32, ctx: &QContext) -> Result<f64> {
    if n < r {
        return Ok(0.0);
    }
    let log_val = 0.5 * (log_q_factorial(n, ctx) + log_q_factorial(n - r + l, ctx))
        - log_q_factorial(n - r, ctx);
    let val = log_val.exp();
    if !val.is_finite() {
        return Err(Error::Overflow(format!(
            "<{}|b†^{l} b^{r}|{n}> exceeds the floating range (log value {log_val})",
            n - r + l
        )));
    }
    Ok(val)
}

/// `<n + l - r | b^r b†^l | n>`: `[n+l]! / sqrt([n]! [n+l-r]!)`. Zero when
/// `n + l < r`.
pub fn antinormal_word_element(l: u32, r: u32, n: u32, ctx: &QContext) -> Result<f64> {
    if n + l < r {
        return Ok(0.0);
    }
    let log_val = log_q_factorial(n + l, ctx)
        - 0.5 * (log_q_factorial(n, ctx) + log_q_factorial(n + l - r, ctx));
    let val = log_val.exp();
    if !val.is_finite() {
        return Err(Error::Overflow(format!(
            "<{}|b^{r} b†^{l}|{n}> exceeds the floating range (log value {log_val})",
            n + l - r
        )));
    }
    Ok(val)
}

/// `<m | x^l p^r | n>` assembled from the normal-ordered expansion: each word
/// `c b†^a b^b` contributes `c <m|b†^a b^b|n>`, nonzero only when
/// `m = n - b + a`.
pub fn normal_ordered_xp_element(
    l: u32,
    r: u32,
    m: u32,
    n: u32,
    frame: &DeformedFrame,
) -> Result<Complex64> {
    let ctx = frame.q_context();
    let words = merge_normal_words(&normal_order_expansion(l, r, frame));
    let mut acc = Complex64::new(0.0, 0.0);
    for w in &words {
        if n < w.plain_power {
            continue;
        }
        if n - w.plain_power + w.dagger_power != m {
            continue;
        }
        acc += w.coefficient * normal_word_element(w.dagger_power, w.plain_power, n, &ctx)?;
    }
    if !acc.re.is_finite() || !acc.im.is_finite() {
        return Err(Error::Overflow(format!(
            "<{m}|x^{l} p^{r}|{n}> exceeds the floating range"
        )));
    }
    Ok(acc)
}

/// Level shifts `m - n` on which `<m|x^l p^r|n>` can be nonzero: every shift
/// in `[-(l+r), l+r]` with the parity of `l + r`.
pub fn selection_rule_shifts(l: u32, r: u32) -> Vec<i64> {
    let span = i64::from(l + r);
    (-span..=span).step_by(2).collect()
}
