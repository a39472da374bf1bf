//! Resultants by the subresultant remainder sequence, and discriminants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{BinaryForm, IntPolynomial};
use crate::error::{Error, Result};

/// `Res(p, q) = lead(p)^deg q · Π_{p(α)=0} q(α)`.
pub fn resultant(p: &IntPolynomial, q: &IntPolynomial) -> Result<BigInt> {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return Err(Error::Domain("resultant of the zero polynomial"));
    };
    let (mut a, mut b, mut s) = (p.clone(), q.clone(), BigInt::one());
    let (mut da, mut db) = (dp, dq);
    if da < db {
        core::mem::swap(&mut a, &mut b);
        core::mem::swap(&mut da, &mut db);
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
    }
    if db == 0 {
        return Ok(s * b.coeff(0).pow(da as u32));
    }
    let (ca, cb) = (a.content(), b.content());
    let mut a = a.div_scalar(&ca)?;
    let mut b = b.div_scalar(&cb)?;
    let t = ca.pow(db as u32) * cb.pow(da as u32);
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = a.prem(&b)?;
        a = b;
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        b = r.div_scalar(&(&g * h.pow(delta as u32)))?;
        g = a.lead().unwrap().clone();
        // h <- h^(1-δ) g^δ
        h = if delta == 0 {
            h
        } else {
            exact_quo(&g.pow(delta as u32), &h.pow(delta as u32 - 1))?
        };
        let db = b.degree().unwrap();
        if db == 0 {
            let da = a.degree().unwrap();
            let lb = b.lead().unwrap();
            let h = exact_quo(&lb.pow(da as u32), &h.pow(da as u32 - 1))?;
            return Ok(s * t * h);
        }
    }
}

fn exact_quo(a: &BigInt, b: &BigInt) -> Result<BigInt> {
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InexactDivision)
    }
}

/// `(-1)^(m(m-1)/2) Res(p, p') / lead(p)` for `m = deg p ≥ 1`.
pub fn poly_discriminant(p: &IntPolynomial) -> Result<BigInt> {
    let m = p
        .degree()
        .ok_or(Error::Domain("discriminant of the zero polynomial"))?;
    if m == 0 {
        return Err(Error::Domain("discriminant of a constant"));
    }
    if m == 1 {
        return Ok(BigInt::one());
    }
    let r = resultant(p, &p.derivative())?;
    let d = exact_quo(&r, p.lead().unwrap())?;
    Ok(if (m * (m - 1) / 2) % 2 == 1 { -d } else { d })
}

/// Discriminant of the binary form.
///
/// With `n = form_degree` and `m = deg F(x, 1)`:
/// * `n = m`: the polynomial discriminant of `F(x, 1)`;
/// * `n = m + 1`: `F = y·G`, and `D(F) = D(G)·G(1, 0)^2 = D(p)·lead(p)^2`;
/// * `n ≥ m + 2`: `y^2` divides `F`, so `D(F) = 0`.
///
/// Linear forms have discriminant 1.
pub fn discriminant(f: &BinaryForm) -> BigInt {
    let m = f.poly.degree().expect("binary forms are nonzero");
    let n = f.form_degree;
    if n == 1 {
        return BigInt::one();
    }
    if n >= m + 2 {
        return BigInt::zero();
    }
    let lead = f.poly.lead().unwrap();
    let d = if m == 0 {
        BigInt::one()
    } else {
        poly_discriminant(&f.poly).expect("m ≥ 1 and exact")
    };
    if n == m {
        d
    } else {
        d * lead * lead
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(
            resultant(&p(&[-1, 0, 1]), &p(&[-2, 1])).unwrap(),
            BigInt::from(3)
        );
        assert_eq!(
            resultant(&p(&[-1, 1]), &p(&[-2, 1])).unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(
            resultant(&p(&[-2, 1]), &p(&[-1, 1])).unwrap(),
            BigInt::from(1)
        );
        assert!(resultant(&IntPolynomial::zero(), &p(&[1])).is_err());
        // common root
        assert!(resultant(&p(&[-1, 0, 1]), &p(&[1, 1])).unwrap().is_zero());
        let (a, b) = (p(&[1, -3, 0, 2, 5]), p(&[-7, 0, 4, 1]));
        let r1 = resultant(&a, &b).unwrap();
        let r2 = resultant(&b, &a).unwrap();
        assert_eq!(r1, r2); // 4·3 even
        let c = p(&[2, 1, 1]);
        assert_eq!(resultant(&b, &c).unwrap(), resultant(&c, &b).unwrap());
        assert_eq!(
            resultant(&p(&[1, 1]), &b).unwrap(),
            -resultant(&b, &p(&[1, 1])).unwrap()
        );
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(
            poly_discriminant(&p(&[0, -3, 0, 4])).unwrap(),
            BigInt::from(432)
        );
        assert_eq!(
            poly_discriminant(&p(&[0, -4, 0, 8])).unwrap(),
            BigInt::from(2048)
        );
        assert_eq!(
            poly_discriminant(&p(&[-1, -2, 1, 1])).unwrap(),
            BigInt::from(49)
        );
        // b^2 - 4ac
        assert_eq!(poly_discriminant(&p(&[3, 5, 2])).unwrap(), BigInt::from(1));
        let s3 = BinaryForm::new(p(&[-1, 0, 3]), 3).unwrap();
        assert_eq!(discriminant(&s3), BigInt::from(108));
        let s4 = BinaryForm::new(p(&[0, -1, 0, 1]), 4).unwrap();
        assert_eq!(discriminant(&s4), BigInt::from(4));
        let lin = BinaryForm::new(p(&[-2, 1]), 1).unwrap();
        assert_eq!(discriminant(&lin), BigInt::one());
        let y2 = BinaryForm::new(p(&[1, 1]), 3).unwrap();
        assert!(discriminant(&y2).is_zero());
    }
}
