//! Gamma, log-gamma and beta on the positive real axis.

use crate::error::{Error, Result};
use crate::quadrature::tanh_sinh::{self, Abscissa, TanhSinhConfig};

pub const PI: f64 = core::f64::consts::PI;
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

// B_{2k} / (2k (2k - 1)) for k = 1..=8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// `log Γ(x)` for `x > 0`: Stirling series at `x ≥ 10`, upward recurrence below.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 || !x.is_finite() {
        return Err(Error::Domain("ln_gamma requires a finite x > 0"));
    }
    let mut z = x;
    let mut prod = 1.0;
    while z < 10.0 {
        prod *= z;
        z += 1.0;
    }
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut pow = inv;
    for c in STIRLING {
        series += c * pow;
        pow *= inv2;
    }
    let stirling = (z - 0.5) * libm::log(z) - z + HALF_LN_TWO_PI + series;
    Ok(stirling - libm::log(prod))
}

pub fn gamma(x: f64) -> Result<f64> {
    ln_gamma(x).map(libm::exp)
}

/// `B(x, y) = Γ(x)Γ(y)/Γ(x + y)`.
pub fn beta(x: f64, y: f64) -> Result<f64> {
    if !(x > 0.0 && y > 0.0) {
        return Err(Error::Domain("beta requires x > 0 and y > 0"));
    }
    Ok(libm::exp(ln_gamma(x)? + ln_gamma(y)? - ln_gamma(x + y)?))
}

/// `2 ∫_0^{π/2} sin(θ)^(2x-1) cos(θ)^(2y-1) dθ` by tanh-sinh quadrature.
/// Independent of [`beta`]; used to cross-check it.
pub fn beta_trig_quadrature(x: f64, y: f64) -> Result<f64> {
    if !(x > 0.0 && y > 0.0) {
        return Err(Error::Domain(
            "beta_trig_quadrature requires x > 0 and y > 0",
        ));
    }
    let (ps, pc) = (2.0 * x - 1.0, 2.0 * y - 1.0);
    // sin θ = sin(distance to 0), cos θ = sin(distance to π/2).
    let ln_sin = |d: f64, ln_d: f64| {
        if d < 1e-8 {
            ln_d
        } else {
            libm::log(libm::sin(d))
        }
    };
    let integrand = |a: &Abscissa| {
        ps * ln_sin(a.from_left, a.ln_from_left) + pc * ln_sin(a.from_right, a.ln_from_right)
    };
    let cfg = TanhSinhConfig {
        target_rel_error: 1e-13,
        ..TanhSinhConfig::default()
    };
    match tanh_sinh::integrate_ln(integrand, PI / 2.0, &cfg) {
        Ok(est) => Ok(2.0 * est.value),
        Err(est) => Err(Error::Accuracy {
            value: 2.0 * est.value,
            abs_error_estimate: 2.0 * est.abs_error,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn lattice_values() {
        assert!(ln_gamma(1.0).unwrap().abs() < 1e-14);
        assert!(ln_gamma(2.0).unwrap().abs() < 1e-14);
        assert!((ln_gamma(0.5).unwrap() - 0.5 * PI.ln()).abs() < 1e-14);
        assert!(rel(ln_gamma(5.0).unwrap(), 24f64.ln()) < 1e-14);
        let mut fact = 1.0f64;
        for k in 1..=100u32 {
            // Γ(k + 1) = k!
            fact *= k as f64;
            if fact.is_finite() {
                assert!(
                    (ln_gamma(k as f64 + 1.0).unwrap() - fact.ln()).abs()
                        < 1e-13 * fact.ln().max(1.0),
                    "k={k}"
                );
            }
        }
        // Γ(k + 1/2) = (2k)! √π / (4^k k!)
        let mut g = PI.sqrt();
        for k in 0..40 {
            assert!(
                (ln_gamma(k as f64 + 0.5).unwrap() - g.ln()).abs() < 1e-13 * g.ln().abs().max(1.0)
            );
            g *= k as f64 + 0.5;
        }
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(ln_gamma(0.0).is_err());
        assert!(ln_gamma(-1.5).is_err());
        assert!(beta(0.0, 1.0).is_err());
        assert!(beta(1.0, -1.0).is_err());
        assert!(beta_trig_quadrature(0.0, 1.0).is_err());
    }

    #[test]
    fn functional_equation_and_residue() {
        let mut z = 0.37;
        while z <= 50.0 {
            let ratio = (ln_gamma(z + 1.0).unwrap() - ln_gamma(z).unwrap()).exp();
            assert!(rel(ratio, z) < 1e-12, "z={z}");
            z += 0.493;
        }
        let x = 1e-8;
        assert!((x * gamma(x).unwrap() - 1.0).abs() <= 1e-6);
    }

    #[test]
    fn named_beta_values() {
        assert!(rel(beta(0.5, 0.5).unwrap(), PI) < 1e-13);
        assert!(rel(beta(1.0, 0.5).unwrap(), 2.0) < 1e-13);
        let b = beta(1.0 / 3.0, 1.0 / 3.0).unwrap();
        assert!((3.0 * b - 15.899_748_752_569_05).abs() < 1e-11);
        assert!(rel(beta(1.0 / 6.0, 0.5).unwrap(), 7.285_951_943_662_745) < 1e-13);
        assert!(rel(beta(0.5, 0.4).unwrap(), 3.679_093_980_405_881) < 1e-13);
        for (x, y) in [(0.3, 1.7), (2.5, 0.1), (10.0, 3.0)] {
            assert_eq!(beta(x, y).unwrap(), beta(y, x).unwrap());
        }
    }

    #[test]
    fn trig_quadrature_examples() {
        assert!((beta_trig_quadrature(0.5, 0.5).unwrap() - PI).abs() < 1e-9);
        assert!((beta_trig_quadrature(1.0, 1.0).unwrap() - 1.0).abs() < 1e-9);
        let q = beta_trig_quadrature(1.0 / 6.0, 0.5).unwrap();
        assert!(rel(q, beta(1.0 / 6.0, 0.5).unwrap()) < 1e-9);
    }
}
