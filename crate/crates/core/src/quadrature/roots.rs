//! Real-root isolation over the integers and a factored, log-domain
//! evaluator for `|p(x)|` built from all real and complex roots.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::LN_2;

use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::dd::DD;
use crate::error::{Error, Result};
use crate::polycore::{big_to_f64, IntPolynomial};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealRoot {
    /// Nearest double to the root.
    pub location: f64,
    /// `location + location_lo` approximates the root to about 2^-106 relative.
    pub location_lo: f64,
    pub multiplicity: u32,
}

impl RealRoot {
    pub(crate) fn dd(&self) -> DD {
        DD {
            hi: self.location,
            lo: self.location_lo,
        }
    }
}

/// All real roots of a polynomial, in increasing order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RootSet {
    pub roots: Vec<RealRoot>,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn locations(&self) -> Vec<f64> {
        self.roots.iter().map(|r| r.location).collect()
    }
}

/// `m / 2^e`.
#[derive(Clone, Debug)]
struct Dyadic {
    m: BigInt,
    e: u32,
}

impl Dyadic {
    fn to_dd(&self) -> DD {
        let mut m = self.m.clone();
        let mut e = self.e as i64;
        let bits = m.bits() as i64;
        if bits > 900 {
            m >>= (bits - 900) as usize;
            e -= bits - 900;
        }
        let hi = m.to_f64().unwrap_or(0.0);
        let rest = &m - BigInt::from_f64(hi).unwrap_or_default();
        let lo = rest.to_f64().unwrap_or(0.0);
        let s = -e as i32;
        DD::new(libm::ldexp(hi, s), libm::ldexp(lo, s))
    }

    fn neg(self) -> Dyadic {
        Dyadic {
            m: -self.m,
            e: self.e,
        }
    }
}

fn sign_at(p: &IntPolynomial, m: &BigInt, e: u32) -> Sign {
    let d = p.degree().unwrap_or(0);
    p.eval_scaled(m, &(BigInt::one() << e as usize), d).sign()
}

/// Roots of a square-free `g` with `g(0) ≠ 0` lying in `(0, ∞)`: exact
/// dyadic roots and isolating open intervals `(lo/2^e, hi/2^e)`.
fn positive_isolation(g: &IntPolynomial) -> (Vec<Dyadic>, Vec<(BigInt, BigInt, u32)>) {
    let d = g.degree().unwrap();
    let lead = g.lead().unwrap().abs();
    let max = g.coeffs()[..d]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    // Cauchy: every root is below 1 + max/|lead| < 2^k_scale.
    let k_scale = (max.bits() as i64 + 1 - lead.bits() as i64).max(0) as u32 + 1;
    let q0 = g.scale_var_pow2(k_scale);

    let mut exact = Vec::new();
    let mut intervals = Vec::new();
    // (Q, c, k): Q(x) ∝ q0((c + x) / 2^k), covering (c/2^k, (c+1)/2^k).
    let mut stack = vec![(q0, BigInt::zero(), 0u32)];
    while let Some((q, c, k)) = stack.pop() {
        let v = q.reverse().taylor_shift_one().sign_variations();
        if v == 0 {
            continue;
        }
        let to_orig = |m: BigInt, k: u32| {
            if k >= k_scale {
                Dyadic { m, e: k - k_scale }
            } else {
                Dyadic {
                    m: m << (k_scale - k) as usize,
                    e: 0,
                }
            }
        };
        if v == 1 {
            let lo = to_orig(c.clone(), k);
            let hi = to_orig(c + 1, k);
            intervals.push((lo.m, hi.m, lo.e));
            continue;
        }
        let dq = q.degree().unwrap();
        let left = IntPolynomial::new(
            q.coeffs()
                .iter()
                .enumerate()
                .map(|(i, a)| a << (dq - i))
                .collect(),
        );
        let mut right = left.taylor_shift_one();
        let c2 = &c << 1usize;
        if right.coeff(0).is_zero() {
            exact.push(to_orig(&c2 + 1, k + 1));
            let mut cs = right.into_coeffs();
            cs.remove(0);
            right = IntPolynomial::new(cs);
        }
        stack.push((left, c2.clone(), k + 1));
        stack.push((right, c2 + 1, k + 1));
    }
    (exact, intervals)
}

/// Bisects an isolating interval `(lo/2^e, hi/2^e)` down to ~2^-106 relative.
fn refine(g: &IntPolynomial, (mut lo, mut hi, mut e): (BigInt, BigInt, u32)) -> Dyadic {
    // Sign just right of `lo`; `lo` itself may be a neighbouring simple root.
    let s_lo = match sign_at(g, &lo, e) {
        Sign::NoSign => sign_at(&g.derivative(), &lo, e),
        s => s,
    };
    for _ in 0..1400 {
        let width = &hi - &lo;
        let mag = if lo.is_zero() { hi.abs() } else { lo.abs() };
        if (width << 107usize) <= mag {
            break;
        }
        lo <<= 1;
        hi <<= 1;
        e += 1;
        let mid = (&lo + &hi) >> 1usize;
        match sign_at(g, &mid, e) {
            Sign::NoSign => return Dyadic { m: mid, e },
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    let mid_m = &lo + &hi;
    Dyadic { m: mid_m, e: e + 1 }
}

fn real_roots_square_free(g: &IntPolynomial) -> Vec<DD> {
    let mut out = Vec::new();
    let mut g = g.clone();
    if g.coeff(0).is_zero() {
        out.push(DD::ZERO);
        let mut cs = g.into_coeffs();
        cs.remove(0);
        g = IntPolynomial::new(cs);
    }
    if g.degree().unwrap_or(0) == 0 {
        return out;
    }
    for negative in [false, true] {
        let h = if negative { g.reflect() } else { g.clone() };
        let (exact, intervals) = positive_isolation(&h);
        for r in exact {
            let r = if negative { r.neg() } else { r };
            out.push(r.to_dd());
        }
        for iv in intervals {
            let r = refine(&h, iv);
            let r = if negative { r.neg() } else { r };
            out.push(r.to_dd());
        }
    }
    out
}

/// Real roots of `p` with multiplicities, via square-free decomposition,
/// Descartes-rule bisection on exact integer polynomials, and exact dyadic
/// bisection refinement.
pub fn isolate_real_roots(p: &IntPolynomial) -> Result<RootSet> {
    if p.is_zero() {
        return Err(Error::Domain("roots of the zero polynomial"));
    }
    let mut roots = Vec::new();
    for (g, mult) in p.square_free_decomposition() {
        for r in real_roots_square_free(&g) {
            roots.push(RealRoot {
                location: r.hi,
                location_lo: r.lo,
                multiplicity: mult,
            });
        }
    }
    roots.sort_by(|a, b| {
        a.location
            .total_cmp(&b.location)
            .then(a.location_lo.total_cmp(&b.location_lo))
    });
    Ok(RootSet { roots })
}

/// A conjugate pair `re ± i·im` with `im > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPair {
    pub re: f64,
    pub im: f64,
    pub multiplicity: u32,
}

fn horner_c(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// All roots of `g` by Aberth–Ehrlich iteration in double precision.
fn aberth(g: &IntPolynomial) -> Vec<Complex64> {
    let d = g.degree().unwrap();
    let lead = big_to_f64(g.lead().unwrap());
    let c: Vec<f64> = g.coeffs().iter().map(|a| big_to_f64(a) / lead).collect();
    // Fujiwara bound.
    let mut radius = 0.0f64;
    for (i, a) in c[..d].iter().enumerate() {
        let k = (d - i) as f64;
        let b = libm::pow(libm::fabs(*a), 1.0 / k);
        radius = radius.max(if i == 0 {
            libm::pow(libm::fabs(*a) / 2.0, 1.0 / k)
        } else {
            b
        });
    }
    let radius = 2.0 * radius.max(1e-3);
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let t = 2.0 * core::f64::consts::PI * k as f64 / d as f64 + 0.4;
            Complex64::from_polar(radius, t)
        })
        .collect();
    for _ in 0..2000 {
        let mut worst = 0.0f64;
        for k in 0..d {
            let (p, dp) = horner_c(&c, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..d {
                if j != k {
                    s += (z[k] - z[j]).inv();
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.re.is_finite() && w.im.is_finite() {
                z[k] -= w;
                worst = worst.max(w.norm() / z[k].norm().max(1e-300));
            }
        }
        if worst < 1e-15 {
            break;
        }
    }
    for zk in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = horner_c(&c, *zk);
            if dp.norm() == 0.0 {
                break;
            }
            let step = p / dp;
            if step.re.is_finite() && step.im.is_finite() {
                *zk -= step;
            }
        }
    }
    z
}

/// `ln|p(x)| = ln|lead| + Σ m ln|x - r| + Σ m ln((x - a)^2 + b^2)`.
#[derive(Debug, Clone)]
pub struct FactoredPoly {
    ln_lead: f64,
    degree: usize,
    real: Vec<(DD, u32)>,
    complex: Vec<ComplexPair>,
}

/// Where an evaluation point sits: at a signed offset from a real root
/// (by index) or from an arbitrary point.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Anchor {
    Root(usize),
    Point(DD),
}

impl FactoredPoly {
    pub fn new(p: &IntPolynomial) -> Result<FactoredPoly> {
        let degree = p
            .degree()
            .ok_or(Error::Domain("factoring the zero polynomial"))?;
        let lead = p.lead().unwrap();
        let ln_lead = ln_abs_big(lead);
        let mut real = Vec::new();
        let mut complex = Vec::new();
        for (g, mult) in p.square_free_decomposition() {
            let rr = real_roots_square_free(&g);
            let dg = g.degree().unwrap();
            let n_complex = dg - rr.len();
            for r in &rr {
                real.push((*r, mult));
            }
            if n_complex == 0 {
                continue;
            }
            let mut zs = aberth(&g);
            zs.sort_by(|a, b| libm::fabs(b.im).total_cmp(&libm::fabs(a.im)));
            let upper: Vec<Complex64> = zs[..n_complex]
                .iter()
                .filter(|z| z.im > 0.0)
                .copied()
                .collect();
            if upper.len() * 2 != n_complex {
                return Err(Error::Precision {
                    residual: libm::fabs(zs[n_complex - 1].im),
                });
            }
            for z in upper {
                complex.push(ComplexPair {
                    re: z.re,
                    im: z.im,
                    multiplicity: mult,
                });
            }
        }
        real.sort_by(|a, b| a.0.hi.total_cmp(&b.0.hi).then(a.0.lo.total_cmp(&b.0.lo)));
        let f = FactoredPoly {
            ln_lead,
            degree,
            real,
            complex,
        };
        f.validate(p)?;
        Ok(f)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn real_roots(&self) -> RootSet {
        RootSet {
            roots: self
                .real
                .iter()
                .map(|&(r, m)| RealRoot {
                    location: r.hi,
                    location_lo: r.lo,
                    multiplicity: m,
                })
                .collect(),
        }
    }

    pub fn complex_pairs(&self) -> &[ComplexPair] {
        &self.complex
    }

    pub(crate) fn root_dd(&self, i: usize) -> DD {
        self.real[i].0
    }

    /// Checks the factored form against exact evaluation at a spread of
    /// points; a failure means the complex roots were not resolved.
    fn validate(&self, p: &IntPolynomial) -> Result<()> {
        let mut xs: Vec<f64> = vec![-2.5, -0.75, 0.3125, 1.375, 3.0];
        for w in self.real.windows(2) {
            xs.push(0.5 * (w[0].0.hi + w[1].0.hi));
        }
        if let (Some(a), Some(b)) = (self.real.first(), self.real.last()) {
            xs.push(a.0.hi - 1.0);
            xs.push(b.0.hi + 1.0);
        }
        for c in &self.complex {
            xs.push(c.re);
        }
        let mut worst = 0.0f64;
        for x in xs {
            let exact = exact_ln_abs(p, x);
            if !exact.is_finite() {
                continue;
            }
            let fact = self.ln_abs(Anchor::Point(DD::from_f64(x)), 0.0, f64::NEG_INFINITY);
            let tol = 1e-9 * (1.0 + libm::fabs(exact));
            let err = libm::fabs(exact - fact);
            worst = worst.max(err / tol);
            if err.is_nan() || err > tol {
                return Err(Error::Precision { residual: err });
            }
        }
        Ok(())
    }

    /// `ln|p(x)|` at `x = anchor + offset`; `ln_abs_offset = ln|offset|` is
    /// used for the factor vanishing at a root anchor.
    pub(crate) fn ln_abs(&self, anchor: Anchor, offset: f64, ln_abs_offset: f64) -> f64 {
        let (base, own) = match anchor {
            Anchor::Root(i) => (self.real[i].0, Some(i)),
            Anchor::Point(p) => (p, None),
        };
        let mut acc = self.ln_lead;
        for (j, &(r, m)) in self.real.iter().enumerate() {
            let term = if own == Some(j) {
                ln_abs_offset
            } else {
                libm::log(libm::fabs((base - r + DD::from_f64(offset)).to_f64()))
            };
            acc += m as f64 * term;
        }
        for c in &self.complex {
            let u = (base - DD::from_f64(c.re) + DD::from_f64(offset)).to_f64();
            acc += 2.0 * c.multiplicity as f64 * libm::log(libm::hypot(u, c.im));
        }
        acc
    }

    /// `ln|p(x)|` at `x = base + sign·scale/t`, written so that `t → 0` is
    /// harmless: `x - r = sign·(scale + sign·(base - r)·t)/t`.
    pub(crate) fn ln_abs_tail(&self, base: DD, sign: f64, scale: f64, t: f64, ln_t: f64) -> f64 {
        let mut acc = self.ln_lead - self.degree as f64 * ln_t;
        for &(r, m) in &self.real {
            let v = scale + sign * (base - r).to_f64() * t;
            acc += m as f64 * libm::log(libm::fabs(v));
        }
        for c in &self.complex {
            let v = scale + sign * (base - DD::from_f64(c.re)).to_f64() * t;
            acc += 2.0 * c.multiplicity as f64 * libm::log(libm::hypot(v, c.im * t));
        }
        acc
    }

    /// `ln|F(c, s)|` for the form `F(x, y) = y^form_degree · p(x/y)`:
    /// each real root contributes `c - r s`, each pair `(c - a s)^2 + (b s)^2`.
    pub fn ln_abs_form(&self, form_degree: usize, c: f64, s: f64) -> f64 {
        let mut acc = self.ln_lead;
        if form_degree > self.degree {
            acc += (form_degree - self.degree) as f64 * libm::log(libm::fabs(s));
        }
        for &(r, m) in &self.real {
            let v = c - r.hi * s - r.lo * s;
            acc += m as f64 * libm::log(libm::fabs(v));
        }
        for cp in &self.complex {
            acc += 2.0 * cp.multiplicity as f64 * libm::log(libm::hypot(c - cp.re * s, cp.im * s));
        }
        acc
    }
}

pub(crate) fn ln_abs_big(n: &BigInt) -> f64 {
    if n.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = n.bits();
    if bits <= 1000 {
        return libm::log(libm::fabs(big_to_f64(n)));
    }
    let shift = bits - 64;
    let top = (n.abs() >> shift as usize).to_f64().unwrap();
    libm::log(top) + shift as f64 * LN_2
}

/// `ln|p(x)|` by exact evaluation at the dyadic rational `x`.
pub(crate) fn exact_ln_abs(p: &IntPolynomial, x: f64) -> f64 {
    let d = p.degree().unwrap_or(0);
    if x == 0.0 {
        return ln_abs_big(&p.coeff(0));
    }
    let (fr, ex) = libm::frexp(x);
    let m = BigInt::from((fr * 9_007_199_254_740_992.0) as i64);
    let k = 53 - ex;
    if k <= 0 {
        let m = m << (-k) as usize;
        return ln_abs_big(&p.eval(&m));
    }
    let den = BigInt::one() << k as usize;
    let v = p.eval_scaled(&m, &den, d);
    ln_abs_big(&v) - (k as f64) * (d as f64) * LN_2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{chebyshev_t, psi};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn simple_roots() {
        let rs = isolate_real_roots(&p(&[-3, 0, 1])).unwrap();
        let s3 = 3f64.sqrt();
        assert_eq!(rs.len(), 2);
        assert!((rs.roots[0].location + s3).abs() < 1e-15);
        assert!((rs.roots[1].location - s3).abs() < 1e-15);
        let rs = isolate_real_roots(&p(&[0, -1, 0, 1])).unwrap();
        assert_eq!(rs.locations(), vec![-1.0, 0.0, 1.0]);
        assert!(isolate_real_roots(&IntPolynomial::zero()).is_err());
        assert!(isolate_real_roots(&p(&[1, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn chebyshev_and_psi_roots() {
        let rs = isolate_real_roots(&chebyshev_t(4)).unwrap();
        let mut want: Vec<f64> = (0..4)
            .map(|k| ((2 * k + 1) as f64 * core::f64::consts::PI / 8.0).cos())
            .collect();
        want.sort_by(f64::total_cmp);
        for (r, w) in rs.roots.iter().zip(&want) {
            assert!((r.location - w).abs() < 1e-15);
            assert_eq!(r.multiplicity, 1);
        }
        let rs = isolate_real_roots(&psi(7).unwrap()).unwrap();
        let mut want: Vec<f64> = (1..=3)
            .map(|k| 2.0 * (2.0 * core::f64::consts::PI * k as f64 / 7.0).cos())
            .collect();
        want.sort_by(f64::total_cmp);
        for (r, w) in rs.roots.iter().zip(&want) {
            assert!((r.location - w).abs() < 1e-14);
        }
    }

    #[test]
    fn multiplicities_and_close_roots() {
        // (x - 1)^2 (x + 1/2)^3 (2x + 1 has root -1/2)
        let f = &p(&[-1, 1]).pow(2) * &p(&[1, 2]).pow(3);
        let rs = isolate_real_roots(&f).unwrap();
        assert_eq!(rs.len(), 2);
        assert_eq!((rs.roots[0].location, rs.roots[0].multiplicity), (-0.5, 3));
        assert_eq!((rs.roots[1].location, rs.roots[1].multiplicity), (1.0, 2));
        // (1000x - 1)(1001x - 1)
        let g = &p(&[-1, 1000]) * &p(&[-1, 1001]);
        let rs = isolate_real_roots(&g).unwrap();
        assert!((rs.roots[0].location - 1.0 / 1001.0).abs() < 1e-19);
        assert!((rs.roots[1].location - 1.0 / 1000.0).abs() < 1e-19);
    }

    #[test]
    fn dyadic_roots_next_to_isolating_intervals() {
        // 2x(4x^2 - 1)(4x^2 - 3): ±1/2 are found exactly at bisection points.
        let rs = isolate_real_roots(&crate::polycore::chebyshev_u(5)).unwrap();
        let h = 3f64.sqrt() / 2.0;
        assert_eq!(rs.locations(), vec![-h, -0.5, 0.0, 0.5, h]);
    }

    #[test]
    fn double_double_location() {
        let rs = isolate_real_roots(&p(&[-2, 0, 1])).unwrap();
        let r = rs.roots[1].dd();
        let err = (r * r - DD::from_f64(2.0)).to_f64();
        assert!(err.abs() < 1e-30, "{err}");
    }

    #[test]
    fn factored_matches_exact() {
        for poly in [
            p(&[1, 0, 0, 1]),
            p(&[1, 1, 1, 1, 1]),
            &p(&[1, 0, 1]) * &p(&[-2, 0, 1]),
            chebyshev_t(9),
        ] {
            let f = FactoredPoly::new(&poly).unwrap();
            for x in [-1.7, -0.2, 0.0, 0.61, 2.9] {
                let a = f.ln_abs(Anchor::Point(DD::from_f64(x)), 0.0, 0.0);
                let b = exact_ln_abs(&poly, x);
                if b == f64::NEG_INFINITY {
                    assert_eq!(a, b);
                    continue;
                }
                assert!((a - b).abs() < 1e-12, "{poly} at {x}: {a} vs {b}");
            }
        }
        let f = FactoredPoly::new(&p(&[1, 0, 0, 1])).unwrap();
        assert_eq!(f.complex_pairs().len(), 1);
        assert!((f.complex_pairs()[0].re - 0.5).abs() < 1e-14);
        // ln|F(1, 0)| = ln|lead|
        assert!(f.ln_abs_form(3, 1.0, 0.0).abs() < 1e-15);
    }
}
