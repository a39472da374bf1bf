//! Closed-form areas, area bounds, discriminant formulas and the invariant
//! `Q(F) = |D_F|^(1/(n(n-1))) A_F`.
//!
//! Bound expressions are written out term by term as they are usually
//! displayed, without simplification.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{divisor_count, euler_phi, factorize, nu2, omega};
use crate::polycore::BinaryForm;
use crate::quadrature::roots_ln_abs_big as ln_abs_big;
use crate::specialfn::{beta, PI};

/// The leading constants of the Ψₙ, Tₙ and Uₙ area bounds. Only exposed so
/// that verification can be checked for sensitivity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    pub psi_lead: f64,
    pub t_lead: f64,
    pub u_lead: f64,
}

impl Constants {
    pub const EXACT: Constants = Constants {
        psi_lead: 16.0 / 3.0,
        t_lead: 8.0 / 3.0,
        u_lead: 8.0 / 3.0,
    };
}

impl Default for Constants {
    fn default() -> Self {
        Constants::EXACT
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// Within 1e-12 (relative) of a bound.
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub n: u64,
    pub alpha: f64,
    pub lower: f64,
    pub upper: f64,
    /// `None` for a divergent integral.
    pub computed: Option<f64>,
    pub verdict: Verdict,
}

impl BoundReport {
    pub fn new(n: u64, alpha: f64, (lower, upper): (f64, f64), computed: Option<f64>) -> Self {
        let verdict = match computed {
            Some(v) => sandwich(lower, v, upper),
            None => Verdict::Fail,
        };
        BoundReport {
            n,
            alpha,
            lower,
            upper,
            computed,
            verdict,
        }
    }

    pub fn sandwich_ok(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Strict `lower < value < upper`, with near-ties reported as inconclusive.
pub fn sandwich(lower: f64, value: f64, upper: f64) -> Verdict {
    let tie = |a: f64, b: f64| libm::fabs(a - b) <= 1e-12 * libm::fabs(a).max(libm::fabs(b));
    if tie(lower, value) || tie(value, upper) {
        return Verdict::Inconclusive;
    }
    if lower < value && value < upper {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

fn b(x: f64, y: f64) -> f64 {
    beta(x, y).expect("bound formulas call beta with positive arguments")
}

/// Lower and upper bounds on `A_{Ψₙ}` for `φ(n) ≥ 6`.
pub fn psi_area_bounds(n: u64) -> Result<(f64, f64)> {
    psi_area_bounds_with(n, &Constants::EXACT)
}

pub fn psi_area_bounds_with(n: u64, k: &Constants) -> Result<(f64, f64)> {
    let phi = euler_phi(n)? as f64;
    if phi < 6.0 {
        return Err(Error::Domain("psi area bounds require φ(n) ≥ 6"));
    }
    let d = divisor_count(n)? as f64;
    let nf = n as f64;
    let ln_n = libm::log(nf);
    let lower = k.psi_lead * libm::exp(-(2.0 * d * ln_n) / phi);
    let upper = libm::pow(2.0, 4.0 / phi)
        * libm::exp((2.0 * d * d * ln_n) / phi)
        * (k.psi_lead + libm::pow(2.0, 1.0 - 4.0 / phi) * b(0.5, 0.5 - 2.0 / phi) - 2.0 * PI
            + (2.0 / nf * b(1.0 / nf, 1.0 - 4.0 / phi) - 2.0)
            - (2.0 / nf * b(3.0 / nf, 1.0 - 4.0 / phi) - 2.0 / 3.0));
    Ok((lower, upper))
}

/// Bounds on `∫ |Ψₙ(x)|^(-α) dx` for `φ(n) ≥ 4` and `2/φ(n) < α < 1`.
pub fn psi_integral_bounds(n: u64, alpha: f64) -> Result<(f64, f64)> {
    let phi = euler_phi(n)? as f64;
    if phi < 4.0 {
        return Err(Error::Domain("psi integral bounds require φ(n) ≥ 4"));
    }
    if !(2.0 / phi < alpha && alpha < 1.0) {
        return Err(Error::Domain("psi integral bounds require 2/φ(n) < α < 1"));
    }
    let d = divisor_count(n)? as f64;
    let nf = n as f64;
    let ln_n = libm::log(nf);
    let lower =
        (4.0 + 16.0 / (phi * phi * alpha * alpha - 4.0)) * libm::exp(-(d * ln_n / 2.0) * alpha);
    let upper = libm::pow(2.0, alpha)
        * libm::exp((d * d * ln_n / 2.0) * alpha)
        * (4.0 + libm::pow(2.0, 1.0 - alpha) * b((1.0 - alpha) / 2.0, 0.5) - 2.0 * PI
            + 2.0 / nf * b((phi * alpha - 2.0) / (2.0 * nf), 1.0 - alpha)
            - 2.0 / nf * b((phi * alpha + 2.0) / (2.0 * nf), 1.0 - alpha));
    Ok((lower, upper))
}

fn need_n3(n: u64) -> Result<f64> {
    if n < 3 {
        return Err(Error::Domain("n must be at least 3"));
    }
    Ok(n as f64)
}

fn need_alpha(n: f64, alpha: f64) -> Result<()> {
    if !(2.0 / n <= alpha && alpha < 1.0) {
        return Err(Error::Domain("alpha must satisfy 2/n ≤ α < 1"));
    }
    Ok(())
}

/// `8/3 < A_{Tₙ} < 8/3 + (2/3)(4^(1/n) - 1) + B(1/2 - 1/n, 1/2) - π`.
pub fn tn_area_bounds(n: u64) -> Result<(f64, f64)> {
    tn_area_bounds_with(n, &Constants::EXACT)
}

pub fn tn_area_bounds_with(n: u64, k: &Constants) -> Result<(f64, f64)> {
    let nf = need_n3(n)?;
    let upper =
        k.t_lead + 2.0 / 3.0 * (libm::pow(4.0, 1.0 / nf) - 1.0) + b(0.5 - 1.0 / nf, 0.5) - PI;
    Ok((k.t_lead, upper))
}

/// Bounds on `∫ |Tₙ(x)|^(-α) dx` for `n ≥ 3`, `2/n ≤ α < 1`.
pub fn tn_integral_bounds(n: u64, alpha: f64) -> Result<(f64, f64)> {
    let nf = need_n3(n)?;
    need_alpha(nf, alpha)?;
    let q = nf * nf * alpha * alpha - 1.0;
    let lower = 2.0 + 2.0 / q;
    let upper = 2.0 + libm::pow(2.0, 1.0 + alpha) / q + b((1.0 - alpha) / 2.0, 0.5) - PI;
    Ok((lower, upper))
}

/// Bounds on `A_{Uₙ}` for `n ≥ 3`.
pub fn un_area_bounds(n: u64) -> Result<(f64, f64)> {
    un_area_bounds_with(n, &Constants::EXACT)
}

pub fn un_area_bounds_with(n: u64, k: &Constants) -> Result<(f64, f64)> {
    let nf = need_n3(n)?;
    let lower = k.u_lead
        + (b(1.0 + 1.0 / nf, 0.5) - 2.0)
        + 2.0 / 3.0 * (libm::pow(nf + 1.0, -2.0 / nf) - 1.0);
    let upper = k.u_lead + (b(1.0 + 1.0 / nf, 0.5) - 2.0) + b(0.5 - 1.0 / nf, 0.5) - PI;
    Ok((lower, upper))
}

/// Bounds on `∫ |Uₙ(x)|^(-α) dx` for `n ≥ 3`, `2/n ≤ α < 1`.
pub fn un_integral_bounds(n: u64, alpha: f64) -> Result<(f64, f64)> {
    let nf = need_n3(n)?;
    need_alpha(nf, alpha)?;
    let q = nf * nf * alpha * alpha - 1.0;
    let lower = b((2.0 + alpha) / 2.0, 0.5) + 2.0 / q * libm::pow(nf + 1.0, -alpha);
    let upper = b((2.0 + alpha) / 2.0, 0.5) + 2.0 / q + b((1.0 - alpha) / 2.0, 0.5) - PI;
    Ok((lower, upper))
}

/// Area of the region `|a x^n + b y^n| ≤ 1`.
pub fn binomial_area_closed(a: &BigInt, bb: &BigInt, n: u64) -> Result<f64> {
    let nf = need_n3(n)?;
    if a.is_zero() || bb.is_zero() {
        return Err(Error::Domain("binomial area needs ab ≠ 0"));
    }
    let ab = a * bb;
    let root = libm::exp(ln_abs_big(&ab) / nf);
    let v = if n % 2 == 1 {
        1.0 / (nf * root) * (2.0 * b(1.0 / nf, 1.0 - 2.0 / nf) + b(1.0 / nf, 1.0 / nf))
    } else if ab.is_positive() {
        2.0 / (nf * root) * b(1.0 / nf, 1.0 / nf)
    } else {
        4.0 / (nf * root) * b(1.0 / nf, 1.0 - 2.0 / nf)
    };
    Ok(v)
}

/// `A_{Sₙ} = 4^(ν₂(n)/n) B(1/2 - 1/n, 1/2)`.
pub fn s_area_closed(n: u64) -> Result<f64> {
    let nf = need_n3(n)?;
    Ok(libm::pow(4.0, nu2(n)? as f64 / nf) * b(0.5 - 1.0 / nf, 0.5))
}

/// `Q(Fₙ*) = 2^(1 - 2/n) n^(1/(n-1)) B(1/2 - 1/n, 1/2)`.
pub fn q_star_closed(n: u64) -> Result<f64> {
    let nf = need_n3(n)?;
    Ok(libm::pow(2.0, 1.0 - 2.0 / nf) * libm::pow(nf, 1.0 / (nf - 1.0)) * b(0.5 - 1.0 / nf, 0.5))
}

/// `2^((n-1)^2) n^n`.
pub fn disc_tn_closed(n: u64) -> BigInt {
    let n = n as u32;
    (BigInt::one() << ((n as usize).saturating_sub(1)).pow(2)) * BigInt::from(n).pow(n)
}

/// `2^(n^2) (n+1)^(n-2)`; for `n < 2` the negative power is not integral
/// and `n + 1` is returned to the power zero.
pub fn disc_un_closed(n: u64) -> BigInt {
    let n = n as u32;
    (BigInt::one() << (n as usize).pow(2)) * BigInt::from(n + 1).pow(n.saturating_sub(2))
}

/// Discriminant of Ψₙ by the three-case formula for the maximal real
/// subfield of the n-th cyclotomic field.
pub fn disc_psi_closed(n: u64) -> Result<BigInt> {
    if n <= 2 {
        return Err(Error::Domain("no discriminant formula applies for n ≤ 2"));
    }
    let fac = factorize(n)?;
    if fac.len() == 1 && fac[0].0 == 2 {
        let m = fac[0].1 as u64;
        if m <= 2 {
            return Err(Error::Domain("no discriminant formula applies for n = 4"));
        }
        return Ok(BigInt::one() << ((m - 1) * (1u64 << (m - 2)) - 1) as usize);
    }
    let odd: alloc::vec::Vec<_> = fac.iter().filter(|(p, _)| *p != 2).collect();
    let two_exp = fac.iter().find(|(p, _)| *p == 2).map_or(0, |f| f.1);
    if odd.len() == 1 && two_exp <= 1 {
        let (p, m) = (odd[0].0, odd[0].1 as u64);
        let pm = p.pow(m as u32);
        let pm1 = p.pow(m as u32 - 1);
        let e = (m * pm - (m + 1) * pm1 - 1) / 2;
        return Ok(BigInt::from(p).pow(e as u32));
    }
    debug_assert!(omega(n)? > 1);
    let half_phi = euler_phi(n)? / 2;
    let mut out = BigInt::one();
    for &(p, e) in &fac {
        // (e - 1/(p - 1)) · φ(n)/2 = (e(p - 1) - 1) · φ(n) / (2(p - 1))
        let num = (e as u64 * (p - 1) - 1) * half_phi;
        if !num.is_multiple_of(p - 1) {
            return Err(Error::Domain("discriminant exponent is not an integer"));
        }
        out *= BigInt::from(p).pow((num / (p - 1)) as u32);
    }
    Ok(out)
}

/// `|D|^(1/(n(n-1))) · area`, `+∞` for divergent areas or zero discriminant.
pub fn q_invariant(f: &BinaryForm, area: f64) -> f64 {
    let d = f.discriminant();
    q_from_discriminant(&d, f.form_degree, area)
}

pub fn q_from_discriminant(d: &BigInt, form_degree: usize, area: f64) -> f64 {
    if form_degree < 3 || d.is_zero() || !area.is_finite() {
        return f64::INFINITY;
    }
    let n = form_degree as f64;
    libm::exp(ln_abs_big(d) / (n * (n - 1.0))) * area
}

/// Right-hand sides of the rescaled upper bounds on `Q(Tₙ)` and `Q(Uₙ)`.
pub fn q_comparison_bounds(n: u64) -> Result<(f64, f64)> {
    q_comparison_bounds_with(n, &Constants::EXACT)
}

pub fn q_comparison_bounds_with(n: u64, k: &Constants) -> Result<(f64, f64)> {
    let nf = need_n3(n)?;
    let t_side =
        k.t_lead + 2.0 / 3.0 * (libm::pow(4.0, 1.0 / nf) - 1.0) + b(0.5 - 1.0 / nf, 0.5) - PI;
    let u_side = k.u_lead + (b(1.0 + 1.0 / nf, 0.5) - 2.0) + b(0.5 - 1.0 / nf, 0.5) - PI;
    Ok((t_side, u_side))
}

/// Upper bounds on `Q(Tₙ)` and `Q(Uₙ)` obtained by undoing the rescaling.
pub fn q_upper_bounds_with(n: u64, k: &Constants) -> Result<(f64, f64)> {
    let (t_side, u_side) = q_comparison_bounds_with(n, k)?;
    let nf = n as f64;
    let qt = libm::pow(2.0, (nf - 1.0) / nf) * libm::pow(nf, 1.0 / (nf - 1.0)) * t_side;
    let qu = libm::pow(2.0, nf / (nf - 1.0))
        * libm::pow(nf + 1.0, (nf - 2.0) / (nf * (nf - 1.0)))
        * u_side;
    Ok((qt, qu))
}

/// `((2 - n^(-1+ε))^2, (2 + n^(-1+ε))^2)`.
pub fn fw_cyclotomic_envelope(n: u64, epsilon: f64) -> Result<(f64, f64)> {
    if n < 3 || euler_phi(n)? < 3 {
        return Err(Error::Domain("envelope requires n ≥ 3 and φ(n) ≥ 3"));
    }
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::Domain("envelope requires 0 < ε < 1"));
    }
    let t = libm::pow(n as f64, -1.0 + epsilon);
    Ok(((2.0 - t) * (2.0 - t), (2.0 + t) * (2.0 + t)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn psi_bound_values() {
        let (lo, hi) = psi_area_bounds(7).unwrap();
        assert!(close(lo, 1.457_471_377_350_392, 1e-12));
        assert!(close(hi, 176.069_585_085_439_07, 1e-9));
        let (l2, h2) = psi_integral_bounds(7, 4.0 / 6.0).unwrap();
        assert!(close(lo, l2, 1e-12 * lo) && close(hi, h2, 1e-12 * hi));
        assert!(psi_area_bounds(8).is_err());
        assert!(psi_integral_bounds(8, 0.4).is_err());
        assert!(psi_integral_bounds(8, 0.6).is_ok());
    }

    #[test]
    fn chebyshev_bound_values() {
        let (lo, hi) = tn_area_bounds(3).unwrap();
        assert_eq!(lo, 8.0 / 3.0);
        assert!(close(hi, 7.202_626_658_051_751, 1e-12));
        let (_, hi) = tn_area_bounds(10_000).unwrap();
        assert!(hi - 8.0 / 3.0 < 1e-2);
        let (a, b) = tn_integral_bounds(4, 0.5).unwrap();
        let (c, d) = tn_area_bounds(4).unwrap();
        assert!(close(a, c, 1e-14) && close(b, d, 1e-13));
        let (a, b) = un_integral_bounds(7, 2.0 / 7.0).unwrap();
        let (c, d) = un_area_bounds(7).unwrap();
        assert!(close(a, c, 1e-13) && close(b, d, 1e-13));
        assert!(tn_area_bounds(2).is_err());
        assert!(un_integral_bounds(5, 0.3).is_err());
    }

    #[test]
    fn closed_areas() {
        let one = BigInt::one();
        let v = binomial_area_closed(&one, &one, 3).unwrap();
        assert!(close(v, 5.299_916_250_856_35, 1e-12));
        let v = binomial_area_closed(&one, &one, 400).unwrap();
        assert!(close(v, 3.999_959_026_525_821, 1e-9));
        assert!((v - 4.0).abs() < 0.05);
        assert!(close(
            s_area_closed(3).unwrap(),
            7.285_951_943_662_745,
            1e-12
        ));
        assert!(close(s_area_closed(4).unwrap(), 10.488_23, 1e-5));
        assert!(close(
            q_star_closed(3).unwrap(),
            15.899_748_752_569_05,
            1e-11
        ));
        assert!(close(q_star_closed(9).unwrap(), 8.472_65, 1e-5));
        assert!((q_star_closed(100_000).unwrap() - 2.0 * PI).abs() < 1e-3);
    }

    #[test]
    fn discriminant_formulas() {
        assert_eq!(disc_tn_closed(4), BigInt::one() << 17);
        assert_eq!(disc_tn_closed(3), BigInt::from(432));
        assert_eq!(disc_un_closed(5), (BigInt::one() << 28) * 27);
        assert_eq!(disc_psi_closed(8).unwrap(), BigInt::from(8));
        assert_eq!(disc_psi_closed(7).unwrap(), BigInt::from(49));
        assert_eq!(disc_psi_closed(9).unwrap(), BigInt::from(81));
        assert_eq!(disc_psi_closed(12).unwrap(), BigInt::from(12));
        assert_eq!(disc_psi_closed(20).unwrap(), BigInt::from(2000));
        assert!(disc_psi_closed(4).is_err());
        assert!(disc_psi_closed(2).is_err());
    }

    #[test]
    fn verdicts() {
        assert_eq!(sandwich(1.0, 2.0, 3.0), Verdict::Pass);
        assert_eq!(sandwich(1.0, 3.5, 3.0), Verdict::Fail);
        assert_eq!(sandwich(1.0, 1.0 + 1e-14, 3.0), Verdict::Inconclusive);
        let (lo, hi) = fw_cyclotomic_envelope(20, 0.5).unwrap();
        let t = 20f64.powf(-0.5);
        assert!(close(lo, (2.0 - t).powi(2), 1e-15) && close(hi, (2.0 + t).powi(2), 1e-15));
        assert!(fw_cyclotomic_envelope(20, 1.0).is_err());
    }
}
