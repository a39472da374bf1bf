//! Tanh-sinh rule for positive integrands given in logarithmic form.
//!
//! The integrand receives the distance of each node to both ends of the
//! interval, together with the logarithms of those distances, so nodes that
//! sit closer to an endpoint than the smallest normal double still carry an
//! exact offset. Returning `ln f` keeps `w·f` representable when `w`
//! underflows and `f` blows up at an algebraic endpoint singularity.

use core::f64::consts::{FRAC_PI_2, LN_2};

/// A quadrature node, described by its distances to `a` and to `b`.
#[derive(Debug, Clone, Copy)]
pub struct Abscissa {
    pub from_left: f64,
    pub from_right: f64,
    pub ln_from_left: f64,
    pub ln_from_right: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct TanhSinhConfig {
    pub target_rel_error: f64,
    pub min_level: u32,
    pub max_level: u32,
}

impl Default for TanhSinhConfig {
    fn default() -> Self {
        TanhSinhConfig {
            target_rel_error: 1e-9,
            min_level: 3,
            max_level: 12,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub abs_error: f64,
    pub levels: u32,
    pub evaluations: usize,
}

// Truncation: stop marching outward once a node contributes less than this
// fraction of the running sum.
const NEGLIGIBLE: f64 = 1e-24;
const TAU_CAP: f64 = 24.0;

struct Node {
    ln_weight: f64,
    near: f64,
    ln_near: f64,
    far: f64,
    ln_far: f64,
}

fn node(tau: f64, width: f64, ln_width: f64) -> Node {
    let g = FRAC_PI_2 * libm::sinh(tau);
    // 1 + e^{2g} and 1 + e^{-2g} in log form.
    let l1p_neg = libm::log1p(libm::exp(-2.0 * g));
    let ln_near = ln_width - (2.0 * g + l1p_neg);
    let ln_far = ln_width - l1p_neg;
    let ln_cosh_g = g + l1p_neg - LN_2;
    let ln_weight = ln_width - LN_2 + libm::log(FRAC_PI_2 * libm::cosh(tau)) - 2.0 * ln_cosh_g;
    Node {
        ln_weight,
        near: libm::exp(ln_near),
        ln_near,
        far: if tau == 0.0 {
            width * 0.5
        } else {
            width / (1.0 + libm::exp(-2.0 * g))
        },
        ln_far,
    }
}

struct Sum {
    total: f64,
    comp: f64,
}

impl Sum {
    fn add(&mut self, x: f64) {
        let t = self.total + x;
        if libm::fabs(self.total) >= libm::fabs(x) {
            self.comp += (self.total - t) + x;
        } else {
            self.comp += (x - t) + self.total;
        }
        self.total = t;
    }
    fn value(&self) -> f64 {
        self.total + self.comp
    }
}

/// Integrates `exp(ln_f)` over an interval of length `width`.
///
/// `Ok` carries a converged estimate; `Err` carries the best estimate when the
/// level-to-level difference is still above `target_rel_error` at `max_level`.
pub fn integrate_ln<F>(ln_f: F, width: f64, cfg: &TanhSinhConfig) -> Result<Estimate, Estimate>
where
    F: Fn(&Abscissa) -> f64,
{
    let ln_width = libm::log(width);
    let mut evaluations = 0usize;
    let mut eval = |tau: f64| -> f64 {
        let nd = node(tau, width, ln_width);
        let left = Abscissa {
            from_left: nd.near,
            from_right: nd.far,
            ln_from_left: nd.ln_near,
            ln_from_right: nd.ln_far,
        };
        evaluations += 1;
        let mut s = libm::exp(nd.ln_weight + ln_f(&left));
        if tau > 0.0 {
            let right = Abscissa {
                from_left: nd.far,
                from_right: nd.near,
                ln_from_left: nd.ln_far,
                ln_from_right: nd.ln_near,
            };
            evaluations += 1;
            s += libm::exp(nd.ln_weight + ln_f(&right));
        }
        s
    };

    // Level 0 fixes the truncation point of the abscissa range.
    let mut sum = Sum {
        total: 0.0,
        comp: 0.0,
    };
    sum.add(eval(0.0));
    let mut tau_max = 0.0;
    let mut k = 1.0;
    while k <= TAU_CAP {
        let term = eval(k);
        sum.add(term);
        tau_max = k;
        if k >= 2.0 && term <= NEGLIGIBLE * sum.value() {
            break;
        }
        k += 1.0;
    }
    let mut h = 1.0;
    let mut prev = sum.value() * h;
    let mut last_diff = f64::INFINITY;
    for level in 1..=cfg.max_level {
        h *= 0.5;
        let mut j = 1u64;
        loop {
            let tau = j as f64 * h;
            if tau > tau_max {
                break;
            }
            sum.add(eval(tau));
            j += 2;
        }
        let current = sum.value() * h;
        let diff = libm::fabs(current - prev);
        let floor = 64.0 * f64::EPSILON * libm::fabs(current);
        last_diff = if diff > floor { diff } else { floor };
        prev = current;
        if level >= cfg.min_level && diff <= cfg.target_rel_error * libm::fabs(current) {
            return Ok(Estimate {
                value: current,
                abs_error: last_diff,
                levels: level,
                evaluations,
            });
        }
    }
    Err(Estimate {
        value: prev,
        abs_error: last_diff,
        levels: cfg.max_level,
        evaluations,
    })
}
