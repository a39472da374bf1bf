//! Dense univariate polynomials over arbitrary-precision integers, and
//! binary forms given by their dehomogenization `F(x, 1)`.

mod construct;
mod resultant;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use construct::{binomial_form, chebyshev_t, chebyshev_u, cyclotomic, pi_form, psi, s_form};
pub use resultant::{discriminant, poly_discriminant, resultant};

/// `coeffs[i]` is the coefficient of `x^i`; the last entry is never zero.
/// The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn lead(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub fn div_scalar(&self, c: &BigInt) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::Domain("division by zero"));
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            out.push(q);
        }
        Ok(IntPolynomial { coeffs: out })
    }

    /// Quotient `self / q`, which must be exact over the integers.
    pub fn exact_div(&self, q: &Self) -> Result<Self> {
        let dq = q
            .degree()
            .ok_or(Error::Domain("division by the zero polynomial"))?;
        let Some(dp) = self.degree() else {
            return Ok(Self::zero());
        };
        if dp < dq {
            return Err(Error::InexactDivision);
        }
        let lead = q.lead().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dp - dq + 1];
        for k in (0..=dp - dq).rev() {
            let top = &rem[k + dq];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (i, qc) in q.coeffs.iter().enumerate() {
                rem[k + i] -= &c * qc;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(Self::new(quot))
    }

    /// Pseudo-remainder: `lead(q)^(deg p - deg q + 1) · p mod q`.
    pub fn prem(&self, q: &Self) -> Result<Self> {
        let dq = q
            .degree()
            .ok_or(Error::Domain("division by the zero polynomial"))?;
        let Some(dp) = self.degree() else {
            return Ok(Self::zero());
        };
        if dp < dq {
            return Ok(self.clone());
        }
        let lead = q.lead().unwrap();
        let mut r = self.coeffs.clone();
        let mut e = dp - dq + 1;
        for top in (dq..=dp).rev() {
            let c = r[top].clone();
            for a in r.iter_mut().take(top + 1) {
                *a *= lead;
            }
            if !c.is_zero() {
                for (i, qc) in q.coeffs.iter().enumerate() {
                    r[top - dq + i] -= &c * qc;
                }
            }
            e -= 1;
        }
        debug_assert_eq!(e, 0);
        r.truncate(dq);
        Ok(Self::new(r))
    }

    /// Gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self / content`, with a positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.lead().unwrap().is_negative() {
            c = -c;
        }
        self.div_scalar(&c)
            .expect("content divides every coefficient")
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Sum of the absolute values of the coefficients.
    pub fn l1_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `den^deg_bound · p(num/den)`, an integer whenever `deg_bound ≥ deg p`.
    pub fn eval_scaled(&self, num: &BigInt, den: &BigInt, deg_bound: usize) -> BigInt {
        debug_assert!(self.degree().is_none_or(|d| d <= deg_bound));
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        let top = self.coeffs.len();
        // Σ c_i num^i den^(deg_bound - i), Horner in num with den powers.
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &dpow;
            dpow *= den;
        }
        let extra = deg_bound + 1 - top.max(1);
        if top == 0 {
            return acc;
        }
        acc * den.pow(extra as u32)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + big_to_f64(c);
        }
        acc
    }

    /// `p(x + 1)`.
    pub fn taylor_shift_one(&self) -> Self {
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = a[j + 1].clone();
                a[j] += t;
            }
        }
        Self::new(a)
    }

    /// `x^deg · p(1/x)`.
    pub fn reverse(&self) -> Self {
        let mut a = self.coeffs.clone();
        a.reverse();
        Self::new(a)
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `p(2^k x)`.
    pub fn scale_var_pow2(&self, k: u32) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c << (k as usize * i))
                .collect(),
        )
    }

    /// Number of sign changes in the coefficient sequence.
    pub fn sign_variations(&self) -> usize {
        let mut last = Sign::NoSign;
        let mut count = 0;
        for c in &self.coeffs {
            let s = c.sign();
            if s == Sign::NoSign {
                continue;
            }
            if last != Sign::NoSign && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Greatest common divisor with positive leading coefficient, by the
    /// primitive remainder sequence.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let g = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem(&b).expect("b is nonzero");
            a = b;
            b = r.primitive_part();
        }
        a.scale(&g)
    }

    /// Yun's square-free decomposition: primitive, pairwise coprime factors
    /// `(g_i, i)` with `self = c · Π g_i^i`. Constant factors are omitted.
    pub fn square_free_decomposition(&self) -> Vec<(IntPolynomial, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.primitive_part();
        let df = f.derivative();
        let a0 = f.gcd(&df).primitive_part();
        let mut b = f.exact_div(&a0).expect("gcd divides f");
        let c = df.exact_div(&a0).expect("gcd divides f'");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d).primitive_part();
            let nb = b.exact_div(&a).expect("gcd divides b");
            let nc = d.exact_div(&a).expect("gcd divides d");
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            d = &nc - &nb.derivative();
            b = nb;
            i += 1;
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

pub(crate) fn big_to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(if c.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

/// Renders as e.g. `x^3 + x^2 - 2x - 1`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            if i == 0 || !mag.is_one() {
                out.push_str(&alloc::format!("{mag}"));
            }
            match i {
                0 => {}
                1 => out.push('x'),
                _ => out.push_str(&alloc::format!("x^{i}")),
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// A binary form `F(x, y)` of degree `form_degree`, stored as `F(x, 1)`.
/// `form_degree` may exceed `deg F(x, 1)` when `y` divides `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    pub poly: IntPolynomial,
    pub form_degree: usize,
}

impl BinaryForm {
    pub fn new(poly: IntPolynomial, form_degree: usize) -> Result<Self> {
        let Some(d) = poly.degree() else {
            return Err(Error::Domain("the zero polynomial is not a binary form"));
        };
        if form_degree == 0 {
            return Err(Error::Domain("form degree must be at least 1"));
        }
        if form_degree < d {
            return Err(Error::Domain("form degree is below the polynomial degree"));
        }
        Ok(BinaryForm { poly, form_degree })
    }

    /// `F(x, y) = Σ c_i x^i y^(n - i)`.
    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.poly.eval_scaled(x, y, self.form_degree)
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        let n = self.form_degree;
        let mut acc = 0.0;
        for (i, c) in self.poly.coeffs().iter().enumerate() {
            acc += big_to_f64(c) * libm::pow(x, i as f64) * libm::pow(y, (n - i) as f64);
        }
        acc
    }

    pub fn discriminant(&self) -> BigInt {
        discriminant(self)
    }
}
