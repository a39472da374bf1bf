//! The named families as binary forms with their form degrees.

use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numtheory;
use crate::polycore::{self, BinaryForm};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilyId {
    /// Minimal polynomial of `2cos(2π/n)`.
    Psi(u64),
    /// Minimal polynomial of `2sin(2π/n)`.
    Pi(u64),
    ChebyshevT(u64),
    ChebyshevU(u64),
    /// `2^(n-1-ν₂(n)) Π_{k=1}^{n} (sin(kπ/n) x - cos(kπ/n) y)`.
    S(u64),
    Cyclotomic(u64),
    /// `a x^n + b y^n`.
    Binomial {
        a: BigInt,
        b: BigInt,
        n: u64,
    },
}

impl FamilyId {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilyId::Psi(_) => "psi",
            FamilyId::Pi(_) => "pi",
            FamilyId::ChebyshevT(_) => "chebyshev-t",
            FamilyId::ChebyshevU(_) => "chebyshev-u",
            FamilyId::S(_) => "s",
            FamilyId::Cyclotomic(_) => "cyclotomic",
            FamilyId::Binomial { .. } => "binomial",
        }
    }

    pub fn n(&self) -> u64 {
        match *self {
            FamilyId::Psi(n)
            | FamilyId::Pi(n)
            | FamilyId::ChebyshevT(n)
            | FamilyId::ChebyshevU(n)
            | FamilyId::S(n)
            | FamilyId::Cyclotomic(n)
            | FamilyId::Binomial { n, .. } => n,
        }
    }

    /// Same family with a different `n`.
    pub fn with_n(&self, n: u64) -> FamilyId {
        match self {
            FamilyId::Psi(_) => FamilyId::Psi(n),
            FamilyId::Pi(_) => FamilyId::Pi(n),
            FamilyId::ChebyshevT(_) => FamilyId::ChebyshevT(n),
            FamilyId::ChebyshevU(_) => FamilyId::ChebyshevU(n),
            FamilyId::S(_) => FamilyId::S(n),
            FamilyId::Cyclotomic(_) => FamilyId::Cyclotomic(n),
            FamilyId::Binomial { a, b, .. } => FamilyId::Binomial {
                a: a.clone(),
                b: b.clone(),
                n,
            },
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::Binomial { a, b, n } => write!(f, "binomial({a}, {b}, {n})"),
            other => write!(f, "{}({})", other.tag(), other.n()),
        }
    }
}

/// Builds the form. Ψₙ, Πₙ, Φₙ, Tₙ, Uₙ have form degree equal to their
/// polynomial degree; Sₙ and binomials have form degree `n`.
pub fn make(id: &FamilyId) -> Result<BinaryForm> {
    let n = id.n();
    let (poly, degree) = match id {
        FamilyId::Psi(_) | FamilyId::Pi(_) | FamilyId::Cyclotomic(_) if n == 0 => {
            return Err(Error::Domain("n must be at least 1"));
        }
        FamilyId::Psi(_) => (polycore::psi(n)?, None),
        FamilyId::Pi(_) => (polycore::pi_form(n)?, None),
        FamilyId::Cyclotomic(_) => (polycore::cyclotomic(n)?, None),
        FamilyId::ChebyshevT(_) | FamilyId::ChebyshevU(_) if n == 0 => {
            return Err(Error::Domain("Chebyshev forms need n ≥ 1"));
        }
        FamilyId::ChebyshevT(_) => (polycore::chebyshev_t(n), None),
        FamilyId::ChebyshevU(_) => (polycore::chebyshev_u(n), None),
        FamilyId::S(_) => (polycore::s_form(n)?, Some(n as usize)),
        FamilyId::Binomial { a, b, .. } => return polycore::binomial_form(a, b, n),
    };
    let degree = degree.unwrap_or_else(|| poly.degree().unwrap());
    BinaryForm::new(poly, degree)
}

/// Form degree at least 3 and nonzero discriminant.
pub fn is_area_finite(id: &FamilyId) -> Result<bool> {
    if let FamilyId::Psi(n) | FamilyId::Pi(n) = *id {
        // deg Ψ_m = φ(m)/2 for m ≥ 3 and these are separable.
        let m = if let FamilyId::Pi(_) = id {
            numtheory::c_of_n(n)?
        } else {
            n
        };
        if m == 0 {
            return Err(Error::Domain("n must be at least 1"));
        }
        return Ok(m >= 3 && numtheory::euler_phi(m)? >= 6);
    }
    let f = make(id)?;
    Ok(f.form_degree >= 3 && !f.discriminant().is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let f = make(&FamilyId::Psi(13)).unwrap();
        assert_eq!(f.form_degree, 6);
        let f = make(&FamilyId::Pi(9)).unwrap();
        assert_eq!(f.poly, polycore::psi(36).unwrap());
        assert_eq!(f.form_degree, 6);
        let f = make(&FamilyId::S(6)).unwrap();
        assert_eq!(f.form_degree, 6);
        assert_eq!(f.poly.degree(), Some(5));
        assert_eq!(make(&FamilyId::Psi(1)).unwrap().form_degree, 1);
        assert_eq!(make(&FamilyId::Cyclotomic(12)).unwrap().form_degree, 4);
        assert!(make(&FamilyId::S(2)).is_err());
        assert!(make(&FamilyId::Psi(0)).is_err());
        assert!(make(&FamilyId::ChebyshevT(0)).is_err());
    }

    #[test]
    fn finiteness() {
        assert!(!is_area_finite(&FamilyId::Psi(8)).unwrap());
        assert!(!is_area_finite(&FamilyId::Pi(6)).unwrap());
        assert!(is_area_finite(&FamilyId::ChebyshevT(4)).unwrap());
        assert!(is_area_finite(&FamilyId::Pi(5)).unwrap());
        assert!(!is_area_finite(&FamilyId::ChebyshevU(2)).unwrap());
        for n in 3..=100u64 {
            let direct = {
                let f = make(&FamilyId::Psi(n)).unwrap();
                f.form_degree >= 3 && !f.discriminant().is_zero()
            };
            assert_eq!(is_area_finite(&FamilyId::Psi(n)).unwrap(), direct, "n={n}");
        }
    }
}
