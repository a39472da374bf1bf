//! Family names on the command line.

use formarea_core::numtheory;
use formarea_core::FamilyId;
use num_bigint::BigInt;

use crate::error::CliError;

/// Largest `n` accepted for the polynomial families.
pub const MAX_N: u64 = 5000;

pub const NAMES: &str = "psi, pi, s, chebyshev-t, chebyshev-u, cyclotomic, binomial";

pub fn parse(name: &str, n: u64, a: Option<&str>, b: Option<&str>) -> Result<FamilyId, CliError> {
    let usage = |m: String| Err(CliError::Usage(m));
    if n == 0 {
        return usage("n must be at least 1".into());
    }
    let id = match name {
        "psi" => FamilyId::Psi(n),
        "pi" => FamilyId::Pi(n),
        "s" => FamilyId::S(n),
        "chebyshev-t" | "t" => FamilyId::ChebyshevT(n),
        "chebyshev-u" | "u" => FamilyId::ChebyshevU(n),
        "cyclotomic" | "phi" => FamilyId::Cyclotomic(n),
        "binomial" => {
            let parse_big = |s: Option<&str>, which| -> Result<BigInt, CliError> {
                let s = s.unwrap_or("1");
                s.parse().map_err(|_| {
                    CliError::Usage(format!(
                        "binomial coefficient {which} is not an integer: {s}"
                    ))
                })
            };
            FamilyId::Binomial {
                a: parse_big(a, "a")?,
                b: parse_big(b, "b")?,
                n,
            }
        }
        other => {
            return usage(format!(
                "unknown family '{other}' (expected one of: {NAMES})"
            ))
        }
    };
    if !matches!(id, FamilyId::Binomial { .. }) && (a.is_some() || b.is_some()) {
        return usage(format!("family '{name}' takes no coefficients"));
    }
    let limit = match id {
        // Πₙ is built from Ψ_{c(n)} with c(n) up to 4n.
        FamilyId::Pi(_) => MAX_N / 4,
        FamilyId::S(_) => 1000,
        FamilyId::Binomial { .. } => 100_000,
        _ => MAX_N,
    };
    if n > limit {
        return usage(format!(
            "n = {n} is out of range for {name} (at most {limit})"
        ));
    }
    if let FamilyId::S(_) = id {
        if n < 3 {
            return usage("s needs n ≥ 3".into());
        }
    }
    numtheory::factorize(n)?;
    Ok(id)
}

/// Limit of the area (or of Q when `q` is set) as n grows, with a label.
pub fn limit_of(id: &FamilyId, q: bool) -> Result<(f64, &'static str), CliError> {
    use std::f64::consts::PI;
    let v = match (id, q) {
        (FamilyId::Psi(_), false) => (16.0 / 3.0, "16/3"),
        (FamilyId::ChebyshevT(_) | FamilyId::ChebyshevU(_), false) => (8.0 / 3.0, "8/3"),
        (FamilyId::ChebyshevT(_) | FamilyId::ChebyshevU(_), true) => (16.0 / 3.0, "16/3"),
        (FamilyId::Cyclotomic(_) | FamilyId::Binomial { .. }, false) => (4.0, "4"),
        (FamilyId::S(_), false) => (PI, "pi"),
        (FamilyId::S(_), true) => (2.0 * PI, "2pi"),
        _ => {
            return Err(CliError::Usage(format!(
                "no limit is known for {}{}",
                id.tag(),
                if q { " with --q" } else { "" }
            )))
        }
    };
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(parse("t", 4, None, None).unwrap(), FamilyId::ChebyshevT(4));
        assert!(parse("psi", 0, None, None).is_err());
        assert!(parse("nope", 3, None, None).is_err());
        assert!(parse("psi", 3, Some("1"), None).is_err());
        assert!(parse("s", 2, None, None).is_err());
        let b = parse("binomial", 5, Some("-2"), Some("3")).unwrap();
        assert_eq!(b.n(), 5);
        assert!(parse("binomial", 5, Some("x"), None).is_err());
    }
}
