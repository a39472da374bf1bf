//! The polynomial families: Φₙ, Ψₙ, Πₙ, Tₙ, Uₙ, Sₙ and binomials.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{FromPrimitive, One, Zero};

use super::{BinaryForm, IntPolynomial};
use crate::dd::{sin_cos_pi_fraction, DD};
use crate::error::{Error, Result};
use crate::numtheory;

/// The n-th cyclotomic polynomial.
///
/// For `n ≥ 2`, `Φₙ = Π_{d|n} (1 - x^d)^μ(n/d)`; the product is expanded as a
/// power series truncated at degree φ(n), which is exact because the result
/// is a polynomial of that degree.
pub fn cyclotomic(n: u64) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::Domain("cyclotomic requires n ≥ 1"));
    }
    if n == 1 {
        return Ok(IntPolynomial::from_i64(&[-1, 1]));
    }
    let len = numtheory::euler_phi(n)? as usize + 1;
    let mut factors: Vec<(usize, i8)> = Vec::new();
    for d in numtheory::divisors(n)? {
        let mu = numtheory::mobius(n / d)?;
        if mu != 0 {
            factors.push((d as usize, mu));
        }
    }
    // Apply all multiplications first so intermediate values stay small.
    factors.sort_by_key(|&(_, mu)| -mu);
    if let Some(c) = cyclotomic_series_i128(len, &factors) {
        return Ok(IntPolynomial::new(
            c.into_iter().map(BigInt::from).collect(),
        ));
    }
    let mut a = vec![BigInt::zero(); len];
    a[0] = BigInt::one();
    for &(d, mu) in &factors {
        if d >= len {
            continue;
        }
        if mu > 0 {
            for i in (d..len).rev() {
                let t = a[i - d].clone();
                a[i] -= t;
            }
        } else {
            for i in d..len {
                let t = a[i - d].clone();
                a[i] += t;
            }
        }
    }
    Ok(IntPolynomial::new(a))
}

fn cyclotomic_series_i128(len: usize, factors: &[(usize, i8)]) -> Option<Vec<i128>> {
    let mut a = vec![0i128; len];
    a[0] = 1;
    for &(d, mu) in factors {
        if d >= len {
            continue;
        }
        if mu > 0 {
            for i in (d..len).rev() {
                a[i] = a[i].checked_sub(a[i - d])?;
            }
        } else {
            for i in d..len {
                a[i] = a[i].checked_add(a[i - d])?;
            }
        }
    }
    Some(a)
}

/// Minimal polynomial of `2cos(2π/n)`.
///
/// For `n ≥ 3`, Φₙ is palindromic of degree `2m`, and
/// `x^(-m) Φₙ(x) = c_m + Σ_{k≥1} c_{m+k} (x^k + x^(-k))`; substituting
/// `x^k + x^(-k) = V_k(x + 1/x)` with `V_0 = 2`, `V_1 = z`,
/// `V_k = z V_{k-1} - V_{k-2}` gives Ψₙ(z).
pub fn psi(n: u64) -> Result<IntPolynomial> {
    match n {
        0 => return Err(Error::Domain("psi requires n ≥ 1")),
        1 => return Ok(IntPolynomial::from_i64(&[-2, 1])),
        2 => return Ok(IntPolynomial::from_i64(&[2, 1])),
        _ => {}
    }
    let phi = cyclotomic(n)?;
    let c = phi.coeffs();
    let m = (c.len() - 1) / 2;
    let z = IntPolynomial::x();
    let mut out = IntPolynomial::constant(c[m].clone());
    let mut v_prev = IntPolynomial::constant(BigInt::from(2));
    let mut v = z.clone();
    for k in 1..=m {
        out = &out + &v.scale(&c[m + k]);
        let next = &(&z * &v) - &v_prev;
        v_prev = v;
        v = next;
    }
    Ok(out)
}

/// Minimal polynomial of `2sin(2π/n)`, namely `Ψ_{c(n)}`.
pub fn pi_form(n: u64) -> Result<IntPolynomial> {
    psi(numtheory::c_of_n(n)?)
}

fn chebyshev(n: u64, first: IntPolynomial) -> IntPolynomial {
    let two_x = IntPolynomial::from_i64(&[0, 2]);
    let (mut prev, mut cur) = (IntPolynomial::one(), first);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Chebyshev polynomial of the first kind.
pub fn chebyshev_t(n: u64) -> IntPolynomial {
    chebyshev(n, IntPolynomial::x())
}

/// Chebyshev polynomial of the second kind.
pub fn chebyshev_u(n: u64) -> IntPolynomial {
    chebyshev(n, IntPolynomial::from_i64(&[0, 2]))
}

/// `Sₙ(x, 1) = 2^(n-1-ν₂(n)) Π_{k=1}^{n-1} (sin(kπ/n) x - cos(kπ/n))`.
///
/// The factor for `k = n` is the constant 1. The product is expanded in
/// double-double arithmetic and each coefficient is rounded; the result is
/// rejected if any coefficient is farther than 1e-6 from an integer.
pub fn s_form(n: u64) -> Result<IntPolynomial> {
    if n < 3 {
        return Err(Error::Domain("s_form requires n ≥ 3"));
    }
    if n > 1000 {
        return Err(Error::Domain("s_form supports n ≤ 1000"));
    }
    let mut prod = vec![DD::ONE];
    for k in 1..n {
        let (s, c) = sin_cos_pi_fraction(k, n);
        let mut next = vec![DD::ZERO; prod.len() + 1];
        for (i, &a) in prod.iter().enumerate() {
            next[i + 1] = next[i + 1] + a * s;
            next[i] = next[i] - a * c;
        }
        prod = next;
    }
    let shift = (n - 1 - numtheory::nu2(n)? as u64) as i32;
    let scale = libm::ldexp(1.0, shift);
    let mut coeffs = Vec::with_capacity(prod.len());
    let mut worst = 0.0f64;
    for a in prod {
        let (hi, lo) = (a.hi * scale, a.lo * scale);
        let r_hi = libm::round(hi);
        let rem = (hi - r_hi) + lo;
        let r_lo = libm::round(rem);
        worst = worst.max(libm::fabs(rem - r_lo));
        let c = BigInt::from_f64(r_hi).ok_or(Error::Precision { residual: f64::NAN })?
            + BigInt::from_f64(r_lo).unwrap_or_default();
        coeffs.push(c);
    }
    if worst.is_nan() || worst >= 1e-6 {
        return Err(Error::Precision { residual: worst });
    }
    Ok(IntPolynomial::new(coeffs))
}

/// `a x^n + b y^n`.
pub fn binomial_form(a: &BigInt, b: &BigInt, n: u64) -> Result<BinaryForm> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Domain("binomial form needs a ≠ 0 and b ≠ 0"));
    }
    if n < 3 {
        return Err(Error::Domain("binomial form needs n ≥ 3"));
    }
    let mut c = vec![BigInt::zero(); n as usize + 1];
    c[0] = b.clone();
    c[n as usize] = a.clone();
    BinaryForm::new(IntPolynomial::new(c), n as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1).unwrap(), p(&[-1, 1]));
        assert_eq!(cyclotomic(2).unwrap(), p(&[1, 1]));
        assert_eq!(cyclotomic(6).unwrap(), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12).unwrap(), p(&[1, 0, -1, 0, 1]));
        let f = cyclotomic(105).unwrap();
        assert_eq!(f.degree(), Some(48));
        assert_eq!(f.coeff(7), BigInt::from(-2));
        assert!(cyclotomic(0).is_err());
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(1).unwrap(), p(&[-2, 1]));
        assert_eq!(psi(2).unwrap(), p(&[2, 1]));
        assert_eq!(psi(3).unwrap(), p(&[1, 1]));
        assert_eq!(psi(4).unwrap(), p(&[0, 1]));
        assert_eq!(psi(5).unwrap(), p(&[-1, 1, 1]));
        assert_eq!(psi(7).unwrap(), p(&[-1, -2, 1, 1]));
        assert_eq!(psi(12).unwrap(), p(&[-3, 0, 1]));
        assert_eq!(psi(36).unwrap(), p(&[-3, 0, 9, 0, -6, 0, 1]));
        assert_eq!(pi_form(4).unwrap(), p(&[-2, 1]));
        assert_eq!(pi_form(5).unwrap(), psi(20).unwrap());
        assert_eq!(pi_form(9).unwrap().degree(), Some(6));
    }

    #[test]
    fn chebyshev_examples() {
        assert_eq!(chebyshev_t(0), p(&[1]));
        assert_eq!(chebyshev_t(3), p(&[0, -3, 0, 4]));
        assert_eq!(chebyshev_t(6), p(&[-1, 0, 18, 0, -48, 0, 32]));
        assert_eq!(chebyshev_u(0), p(&[1]));
        assert_eq!(chebyshev_u(1), p(&[0, 2]));
        assert_eq!(chebyshev_u(3), p(&[0, -4, 0, 8]));
        assert_eq!(chebyshev_u(6), p(&[-1, 0, 24, 0, -80, 0, 64]));
    }

    #[test]
    fn s_form_examples() {
        assert_eq!(s_form(3).unwrap(), p(&[-1, 0, 3]));
        assert_eq!(s_form(4).unwrap(), p(&[0, -1, 0, 1]));
        assert_eq!(s_form(5).unwrap(), p(&[1, 0, -10, 0, 5]));
        assert_eq!(s_form(6).unwrap(), p(&[0, 3, 0, -10, 0, 3]));
        assert_eq!(s_form(9).unwrap(), p(&[1, 0, -36, 0, 126, 0, -84, 0, 9]));
        assert!(s_form(2).is_err());
    }

    #[test]
    fn binomial_examples() {
        let f = binomial_form(&BigInt::from(2), &BigInt::from(-3), 4).unwrap();
        assert_eq!(f.poly, p(&[-3, 0, 0, 0, 2]));
        assert_eq!(f.form_degree, 4);
        assert!(binomial_form(&BigInt::zero(), &BigInt::one(), 3).is_err());
        assert!(binomial_form(&BigInt::one(), &BigInt::one(), 2).is_err());
    }
}
