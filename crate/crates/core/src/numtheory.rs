//! Arithmetic functions on machine-range naturals.
//!
//! Factorization is trial division up to `√n`, which is plenty for the
//! `n ≤ 10^9` range the families are evaluated on.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::specialfn::EULER_GAMMA;

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn factorize(n: u64) -> Result<Vec<(u64, u32)>> {
    if n == 0 {
        return Err(Error::Domain("factorize requires n >= 1"));
    }
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    Ok(out)
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let mut divs = alloc::vec![1u64];
    for (p, e) in factorize(n)? {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

pub fn euler_phi(n: u64) -> Result<u64> {
    Ok(factorize(n)?
        .into_iter()
        .map(|(p, e)| (p - 1) * p.pow(e - 1))
        .product())
}

pub fn divisor_count(n: u64) -> Result<u64> {
    Ok(factorize(n)?
        .into_iter()
        .map(|(_, e)| u64::from(e) + 1)
        .product())
}

pub fn mobius(n: u64) -> Result<i8> {
    let f = factorize(n)?;
    if f.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if f.len() % 2 == 0 { 1 } else { -1 })
}

/// 2-adic valuation.
pub fn nu2(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::Domain("nu2 requires n >= 1"));
    }
    Ok(n.trailing_zeros())
}

/// Number of distinct prime divisors.
pub fn omega(n: u64) -> Result<u32> {
    Ok(factorize(n)?.len() as u32)
}

/// Index `c(n)` such that `2sin(2π/n)` is conjugate to `2cos(2π/c(n))`,
/// read off the residue of `n` modulo 16.
pub fn c_of_n(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("c(n) requires n >= 1"));
    }
    Ok(if n % 2 == 1 {
        4 * n
    } else if n % 4 == 2 {
        2 * n
    } else if n.is_multiple_of(8) {
        n
    } else if n % 16 == 12 {
        n / 2
    } else {
        n / 4
    })
}

/// Reduced denominator of `(n - 4) / (4n)`; defined for `n != 4`.
pub fn c_of_n_by_gcd(n: u64) -> Result<u64> {
    if n == 0 || n == 4 {
        return Err(Error::Domain(
            "(n - 4)/(4n) has no reduced denominator here",
        ));
    }
    let num = (n as i128 - 4).unsigned_abs() as u64;
    let den = 4 * n;
    Ok(den / num_integer::gcd(num, den))
}

fn log_log(n: u64) -> Result<f64> {
    if n <= 2 {
        return Err(Error::Domain("log log n requires n > 2"));
    }
    Ok(libm::log(libm::log(n as f64)))
}

/// Upper bound `n^(1.067 / log log n)` on the divisor count, valid for `n > 2`.
pub fn d_upper_bound(n: u64) -> Result<f64> {
    let ll = log_log(n)?;
    Ok(libm::pow(n as f64, 1.067 / ll))
}

/// Lower bound `n / (e^γ log log n + 3 / log log n)` on Euler's totient, valid for `n > 2`.
pub fn phi_lower_bound(n: u64) -> Result<f64> {
    let ll = log_log(n)?;
    Ok(n as f64 / (libm::exp(EULER_GAMMA) * ll + 3.0 / ll))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_phi(n: u64) -> u64 {
        (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count() as u64
    }

    fn naive_divisor_count(n: u64) -> u64 {
        (1..=n).filter(|k| n.is_multiple_of(*k)).count() as u64
    }

    fn naive_is_prime(p: u64) -> bool {
        p >= 2 && (2..p).all(|k| !p.is_multiple_of(k))
    }

    fn naive_primes_dividing(n: u64) -> Vec<u64> {
        (2..=n)
            .filter(|&p| n.is_multiple_of(p) && naive_is_prime(p))
            .collect()
    }

    fn naive_mobius(n: u64) -> i8 {
        let ps = naive_primes_dividing(n);
        if ps.iter().any(|p| n.is_multiple_of(p * p)) {
            0
        } else if ps.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    #[test]
    fn examples() {
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(12).unwrap(), 4);
        assert_eq!(euler_phi(7).unwrap(), 6);
        assert_eq!(divisor_count(1).unwrap(), 1);
        assert_eq!(divisor_count(12).unwrap(), 6);
        assert_eq!(divisor_count(9).unwrap(), 3);
        assert_eq!(mobius(1).unwrap(), 1);
        assert_eq!(mobius(6).unwrap(), 1);
        assert_eq!(mobius(12).unwrap(), 0);
        assert_eq!(nu2(6).unwrap(), 1);
        assert_eq!(nu2(8).unwrap(), 3);
        assert_eq!(nu2(7).unwrap(), 0);
        assert_eq!(omega(1).unwrap(), 0);
        assert_eq!(omega(12).unwrap(), 2);
        assert_eq!(omega(30).unwrap(), 3);
        assert_eq!(c_of_n(5).unwrap(), 20);
        assert_eq!(c_of_n(6).unwrap(), 12);
        // 28 ≡ 12 (mod 16), and 24/112 = 3/14.
        assert_eq!(c_of_n(28).unwrap(), 14);
        assert_eq!(c_of_n(20).unwrap(), 5);
        assert_eq!([1, 2, 3, 4].map(|n| c_of_n(n).unwrap()), [4, 4, 12, 1]);
    }

    #[test]
    fn zero_is_rejected() {
        assert!(euler_phi(0).is_err());
        assert!(divisor_count(0).is_err());
        assert!(mobius(0).is_err());
        assert!(nu2(0).is_err());
        assert!(omega(0).is_err());
        assert!(c_of_n(0).is_err());
        assert!(d_upper_bound(2).is_err());
        assert!(phi_lower_bound(1).is_err());
    }

    #[test]
    fn agrees_with_trial_division_oracle() {
        for n in 1..=10_000u64 {
            assert_eq!(euler_phi(n).unwrap(), naive_phi(n), "phi({n})");
            assert_eq!(divisor_count(n).unwrap(), naive_divisor_count(n), "d({n})");
            if n <= 2000 {
                assert_eq!(mobius(n).unwrap(), naive_mobius(n), "mu({n})");
                assert_eq!(omega(n).unwrap() as usize, naive_primes_dividing(n).len());
            }
            let mut k = 0;
            while n % (1 << (k + 1)) == 0 {
                k += 1;
            }
            assert_eq!(nu2(n).unwrap(), k);
        }
    }

    #[test]
    fn case_table_matches_gcd_reduction() {
        for n in (5..=100_000u64).chain(1..=3) {
            assert_eq!(c_of_n(n).unwrap(), c_of_n_by_gcd(n).unwrap(), "n = {n}");
        }
        for n in (5..1000u64).step_by(2) {
            assert_eq!(c_of_n(n).unwrap(), 4 * n);
        }
    }

    #[test]
    fn growth_bounds_values() {
        // Direct high-precision evaluation of both formulas.
        assert!((d_upper_bound(10).unwrap() - 19.025_090_394_720_15).abs() < 1e-9);
        assert!((d_upper_bound(100).unwrap() - 24.965_891_918_728_91).abs() < 1e-9);
        assert!((phi_lower_bound(10).unwrap() - 1.967_553_255_530_723).abs() < 1e-12);
        assert!((phi_lower_bound(1000).unwrap() - 200.22195624715158).abs() < 1e-9);
    }

    #[test]
    fn growth_bounds_hold_strictly() {
        for n in 3..=100_000u64 {
            let d = divisor_count(n).unwrap() as f64;
            let phi = euler_phi(n).unwrap() as f64;
            assert!(d < d_upper_bound(n).unwrap(), "d({n})");
            assert!(phi > phi_lower_bound(n).unwrap(), "phi({n})");
        }
    }
}
