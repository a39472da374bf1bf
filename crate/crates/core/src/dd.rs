//! Double-double arithmetic: an unevaluated sum `hi + lo` with `|lo| ≤ ulp(hi)/2`,
//! giving roughly 32 significant digits.

use core::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub(crate) struct DD {
    pub hi: f64,
    pub lo: f64,
}

pub(crate) const DD_PI: DD = DD {
    hi: core::f64::consts::PI,
    lo: 1.224_646_799_147_353_2e-16,
};

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, libm::fma(a, b, -p))
}

impl DD {
    pub const ZERO: DD = DD { hi: 0.0, lo: 0.0 };
    pub const ONE: DD = DD { hi: 1.0, lo: 0.0 };

    pub const fn from_f64(x: f64) -> DD {
        DD { hi: x, lo: 0.0 }
    }

    pub fn new(hi: f64, lo: f64) -> DD {
        let (hi, lo) = two_sum(hi, lo);
        DD { hi, lo }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn mul_f64(self, b: f64) -> DD {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        DD { hi, lo }
    }

    pub fn div_f64(self, b: f64) -> DD {
        let q1 = self.hi / b;
        let r = self - DD::from_f64(q1).mul_f64(b);
        let q2 = r.hi / b;
        let r = r - DD::from_f64(q2).mul_f64(b);
        let q3 = r.hi / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        DD { hi, lo } + DD::from_f64(q3)
    }

    pub fn half(self) -> DD {
        DD {
            hi: self.hi * 0.5,
            lo: self.lo * 0.5,
        }
    }
}

impl Add for DD {
    type Output = DD;
    fn add(self, b: DD) -> DD {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        DD { hi, lo }
    }
}

impl Neg for DD {
    type Output = DD;
    fn neg(self) -> DD {
        DD {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Sub for DD {
    type Output = DD;
    fn sub(self, b: DD) -> DD {
        self + (-b)
    }
}

impl Mul for DD {
    type Output = DD;
    fn mul(self, b: DD) -> DD {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        DD { hi, lo }
    }
}

/// `sin(θ)` and `cos(θ)` for `θ` in `[0, π/4]` by Taylor series.
fn sin_cos_reduced(x: DD) -> (DD, DD) {
    let x2 = x * x;
    let mut sin = x;
    let mut cos = DD::ONE;
    let mut term_s = x;
    let mut term_c = DD::ONE;
    let mut k = 1.0;
    loop {
        term_s = (term_s * x2).div_f64(-(2.0 * k) * (2.0 * k + 1.0));
        term_c = (term_c * x2).div_f64(-(2.0 * k - 1.0) * (2.0 * k));
        sin = sin + term_s;
        cos = cos + term_c;
        if libm::fabs(term_s.hi) < 1e-36 && libm::fabs(term_c.hi) < 1e-36 {
            break;
        }
        k += 1.0;
    }
    (sin, cos)
}

/// `(sin(kπ/n), cos(kπ/n))` to double-double accuracy, for `0 ≤ k ≤ n`.
pub(crate) fn sin_cos_pi_fraction(k: u64, n: u64) -> (DD, DD) {
    debug_assert!(n > 0 && k <= n);
    // Fold to angles jπ/(4n) with j ≤ n, i.e. θ ≤ π/4.
    let (kk, cos_sign) = if 2 * k > n { (n - k, -1.0) } else { (k, 1.0) };
    // θ = kk·π/n ∈ [0, π/2]; in quarter units: 4·kk·π/(4n).
    let quarter = 4 * kk;
    if quarter <= n {
        let theta = DD_PI.mul_f64(kk as f64).div_f64(n as f64);
        let (s, c) = sin_cos_reduced(theta);
        (s, c.mul_f64(cos_sign))
    } else {
        // π/2 - θ = (n - 2kk)π/(2n)
        let comp = DD_PI.mul_f64((n - 2 * kk) as f64).div_f64(2.0 * n as f64);
        let (s, c) = sin_cos_reduced(comp);
        (c, s.mul_f64(cos_sign))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_keeps_extra_precision() {
        let third = DD::ONE.div_f64(3.0);
        let back = third.mul_f64(3.0) - DD::ONE;
        assert!(back.to_f64().abs() < 1e-31);
        let a = DD::new(1.0, 1e-20);
        let sq = a * a;
        assert_eq!(sq.hi, 1.0);
        assert!((sq.lo - 2e-20).abs() < 1e-34);
    }

    #[test]
    fn trig_on_special_angles() {
        let (s, c) = sin_cos_pi_fraction(1, 6);
        assert!((s - DD::from_f64(0.5)).to_f64().abs() < 1e-31);
        assert!((c * c - DD::from_f64(0.75)).to_f64().abs() < 1e-31);
        let (s, c) = sin_cos_pi_fraction(1, 4);
        assert!((s - c).to_f64().abs() < 1e-31);
        assert!((s * s - DD::from_f64(0.5)).to_f64().abs() < 1e-31);
        let (s, c) = sin_cos_pi_fraction(2, 3);
        assert!((c + DD::from_f64(0.5)).to_f64().abs() < 1e-31);
        assert!((s * s - DD::from_f64(0.75)).to_f64().abs() < 1e-31);
        let (s, c) = sin_cos_pi_fraction(7, 7);
        assert!(s.to_f64().abs() < 1e-31 && (c.to_f64() + 1.0).abs() < 1e-31);
    }

    #[test]
    fn pythagoras_across_angles() {
        for n in 1..60u64 {
            for k in 0..=n {
                let (s, c) = sin_cos_pi_fraction(k, n);
                let one = s * s + c * c - DD::ONE;
                assert!(one.to_f64().abs() < 1e-30, "k={k} n={n}");
                let x = core::f64::consts::PI * k as f64 / n as f64;
                assert!((s.to_f64() - x.sin()).abs() < 1e-15);
                assert!((c.to_f64() - x.cos()).abs() < 1e-15);
            }
        }
    }
}
