//! Double-double arithmetic (~31 significant digits).
//!
//! The normal-ordered vacuum-projector series cancels terms that grow like
//! `q^{k(n-k) + k(k-1)/2}`; at q = 2, N = 12 the largest terms reach ~1e14,
//! so plain f64 accumulation leaves absolute residuals around 1e-5 where the
//! contract demands 1e-12. Carrying the series in double-double keeps the
//! cancellation error below 1e-16.

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul(Dd::from(q1)));
        let q2 = r.hi / other.hi;
        let r = r.sub(other.mul(Dd::from(q2)));
        let q3 = r.hi / other.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }.add(Dd::from(q3))
    }

    /// One Newton refinement of the f64 square root.
    #[inline]
    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 {
            return Dd::ZERO;
        }
        let s = self.hi.sqrt();
        let sd = Dd::from(s);
        let diff = self.sub(sd.mul(sd));
        sd.add(diff.div(Dd::from(2.0 * s)))
    }

    pub fn powi(self, n: u32) -> Dd {
        let mut acc = Dd::ONE;
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

/// `[n]_q` in double-double.
pub(crate) fn q_number_dd(n: u32, q: f64) -> Dd {
    if q == 1.0 {
        return Dd::from(f64::from(n));
    }
    let qd = Dd::from(q);
    Dd::ONE.sub(qd.powi(n)).div(Dd::ONE.sub(qd))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_tracks_exact_integers() {
        let a = Dd::from(1e16).add(Dd::from(1.0));
        assert_eq!(a.hi, 1e16);
        assert_eq!(a.lo, 1.0);
        let b = a.sub(Dd::from(1e16));
        assert_eq!(b.to_f64(), 1.0);
    }

    #[test]
    fn division_and_sqrt_roundtrip() {
        let x = Dd::from(7.0).div(Dd::from(3.0));
        let back = x.mul(Dd::from(3.0)).to_f64();
        assert!((back - 7.0).abs() < 1e-30);
        let r = Dd::from(2.0).sqrt();
        let err = r.mul(r).sub(Dd::from(2.0));
        assert!(err.to_f64().abs() < 1e-30);
    }

    #[test]
    fn q_numbers_exact_at_q2() {
        let v = q_number_dd(20, 2.0);
        assert_eq!(v.to_f64(), (1u64 << 20) as f64 - 1.0);
    }
}
