use alloc::vec::Vec;

use num_traits::Zero;

use super::roots::{Anchor, FactoredPoly};
use super::tanh_sinh::{self, Abscissa, TanhSinhConfig};
use super::{AreaResult, AreaStatus, PanelResult, QuadratureConfig};
use crate::dd::DD;
use crate::error::{Error, Result};
use crate::polycore::{discriminant, BinaryForm, IntPolynomial};

#[derive(Debug, Clone, Copy)]
enum PanelKind {
    Bounded {
        left: Anchor,
        right: Anchor,
        width: f64,
    },
    Tail {
        base: DD,
        sign: f64,
    },
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    kind: PanelKind,
    lo: f64,
    hi: f64,
}

/// A finite integral split into independent panels. Panels can be evaluated
/// in any order or concurrently and then combined with [`AreaPlan::assemble`].
#[derive(Debug, Clone)]
pub struct AreaPlan {
    factored: FactoredPoly,
    alpha: f64,
    scale: f64,
    panels: Vec<Panel>,
    ts: TanhSinhConfig,
}

#[derive(Debug, Clone)]
pub enum Plan {
    Divergent,
    Finite(AreaPlan),
}

fn check_config(cfg: &QuadratureConfig) -> Result<()> {
    if !(cfg.target_rel_error > 0.0 && cfg.target_rel_error < 1.0) {
        return Err(Error::Domain("target_rel_error must lie in (0, 1)"));
    }
    if cfg.max_level < 3 {
        return Err(Error::Domain("max_level must be at least 3"));
    }
    if let Some(c) = cfg.tail_cutoff {
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::Domain("tail_cutoff must be positive"));
        }
    }
    Ok(())
}

/// Plans `∫ |p(x)|^(-alpha) dx` over the real line, or reports divergence:
/// the tail diverges when `deg p · alpha ≤ 1`, a root of multiplicity `m`
/// when `m · alpha ≥ 1`.
pub fn plan_integral(p: &IntPolynomial, alpha: f64, cfg: &QuadratureConfig) -> Result<Plan> {
    check_config(cfg)?;
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::Domain("alpha must lie in (0, 1)"));
    }
    let deg = p
        .degree()
        .ok_or(Error::Domain("integrand of the zero polynomial"))?;
    if deg as f64 * alpha <= 1.0 {
        return Ok(Plan::Divergent);
    }
    let factored = FactoredPoly::new(p)?;
    let roots = factored.real_roots();
    if roots
        .roots
        .iter()
        .any(|r| r.multiplicity as f64 * alpha >= 1.0)
    {
        return Ok(Plan::Divergent);
    }
    let scale = cfg.tail_cutoff.unwrap_or(1.0);

    let mut bps: Vec<(f64, Anchor)> = Vec::new();
    for i in 0..roots.len() {
        bps.push((roots.roots[i].location, Anchor::Root(i)));
        if i + 1 < roots.len() {
            let mid = (factored.root_dd(i) + factored.root_dd(i + 1)).half();
            bps.push((mid.hi, Anchor::Point(mid)));
        }
    }
    let mut lo_base: Option<DD> = roots.roots.first().map(|r| r.dd());
    let mut hi_base: Option<DD> = roots.roots.last().map(|r| r.dd());
    for c in factored.complex_pairs() {
        let re = DD::from_f64(c.re);
        if lo_base.is_none_or(|b| c.re < b.hi) {
            lo_base = Some(re);
        }
        if hi_base.is_none_or(|b| c.re > b.hi) {
            hi_base = Some(re);
        }
    }
    let (lo_base, hi_base) = (lo_base.unwrap(), hi_base.unwrap());
    let left_cut = lo_base - DD::from_f64(scale);
    let right_cut = hi_base + DD::from_f64(scale);
    for c in factored.complex_pairs() {
        if c.im < 1.0 {
            bps.push((c.re, Anchor::Point(DD::from_f64(c.re))));
        }
    }
    bps.push((left_cut.hi, Anchor::Point(left_cut)));
    bps.push((right_cut.hi, Anchor::Point(right_cut)));
    bps.sort_by(|a, b| a.0.total_cmp(&b.0));
    // Drop points that coincide with a neighbour; roots win.
    let mut merged: Vec<(f64, Anchor)> = Vec::with_capacity(bps.len());
    for bp in bps {
        if let Some(last) = merged.last_mut() {
            let tol = 1e-12 * (1.0 + libm::fabs(bp.0));
            if libm::fabs(bp.0 - last.0) <= tol {
                if let Anchor::Root(_) = bp.1 {
                    *last = bp;
                }
                continue;
            }
        }
        merged.push(bp);
    }

    let anchor_dd = |a: Anchor| match a {
        Anchor::Root(i) => factored.root_dd(i),
        Anchor::Point(p) => p,
    };
    let mut panels = Vec::with_capacity(merged.len() + 1);
    panels.push(Panel {
        kind: PanelKind::Tail {
            base: lo_base,
            sign: -1.0,
        },
        lo: f64::NEG_INFINITY,
        hi: merged[0].0,
    });
    for w in merged.windows(2) {
        let width = (anchor_dd(w[1].1) - anchor_dd(w[0].1)).to_f64();
        panels.push(Panel {
            kind: PanelKind::Bounded {
                left: w[0].1,
                right: w[1].1,
                width,
            },
            lo: w[0].0,
            hi: w[1].0,
        });
    }
    panels.push(Panel {
        kind: PanelKind::Tail {
            base: hi_base,
            sign: 1.0,
        },
        lo: merged[merged.len() - 1].0,
        hi: f64::INFINITY,
    });
    Ok(Plan::Finite(AreaPlan {
        factored,
        alpha,
        scale,
        panels,
        ts: TanhSinhConfig {
            target_rel_error: cfg.target_rel_error,
            min_level: 3,
            max_level: cfg.max_level,
        },
    }))
}

/// Plans the area of the fundamental region of `f`, which is finite exactly
/// when `f` has degree at least 3 and nonzero discriminant.
pub fn plan_area(f: &BinaryForm, cfg: &QuadratureConfig) -> Result<Plan> {
    check_config(cfg)?;
    if f.form_degree < 3 || discriminant(f).is_zero() {
        return Ok(Plan::Divergent);
    }
    plan_integral(&f.poly, 2.0 / f.form_degree as f64, cfg)
}

impl AreaPlan {
    pub fn panel_count(&self) -> usize {
        self.panels.len()
    }

    pub fn factored(&self) -> &FactoredPoly {
        &self.factored
    }

    pub fn eval_panel(&self, i: usize) -> PanelResult {
        let panel = &self.panels[i];
        let alpha = self.alpha;
        let f = &self.factored;
        let out = match panel.kind {
            PanelKind::Bounded { left, right, width } => {
                let integrand = |a: &Abscissa| {
                    let ln_p = if a.from_left <= a.from_right {
                        f.ln_abs(left, a.from_left, a.ln_from_left)
                    } else {
                        f.ln_abs(right, -a.from_right, a.ln_from_right)
                    };
                    -alpha * ln_p
                };
                tanh_sinh::integrate_ln(integrand, width, &self.ts)
            }
            PanelKind::Tail { base, sign } => {
                let scale = self.scale;
                let ln_scale = libm::log(scale);
                // x = base + sign·scale/t, dx = scale·dt/t^2.
                let integrand = |a: &Abscissa| {
                    let ln_p = f.ln_abs_tail(base, sign, scale, a.from_left, a.ln_from_left);
                    -alpha * ln_p + ln_scale - 2.0 * a.ln_from_left
                };
                tanh_sinh::integrate_ln(integrand, 1.0, &self.ts)
            }
        };
        let (est, converged) = match out {
            Ok(e) => (e, true),
            Err(e) => (e, false),
        };
        PanelResult {
            lo: panel.lo,
            hi: panel.hi,
            value: est.value,
            abs_error: est.abs_error,
            converged,
        }
    }

    /// Compensated sum of the panel contributions.
    pub fn assemble(&self, panels: Vec<PanelResult>) -> Result<AreaResult> {
        let mut sum = 0.0f64;
        let mut comp = 0.0f64;
        let mut err = 0.0f64;
        let mut ok = true;
        for p in &panels {
            let t = sum + p.value;
            if libm::fabs(sum) >= libm::fabs(p.value) {
                comp += (sum - t) + p.value;
            } else {
                comp += (p.value - t) + sum;
            }
            sum = t;
            err += p.abs_error;
            ok &= p.converged && p.value.is_finite();
        }
        let value = sum + comp;
        if !ok || !value.is_finite() {
            return Err(Error::Accuracy {
                value,
                abs_error_estimate: err,
            });
        }
        Ok(AreaResult {
            value,
            abs_error_estimate: err,
            status: AreaStatus::Finite,
            panels,
        })
    }

    pub fn run(&self) -> Result<AreaResult> {
        let results = (0..self.panels.len()).map(|i| self.eval_panel(i)).collect();
        self.assemble(results)
    }
}

impl Plan {
    pub fn run(&self) -> Result<AreaResult> {
        match self {
            Plan::Divergent => Ok(AreaResult::divergent()),
            Plan::Finite(p) => p.run(),
        }
    }
}

/// `A_F = ∫ |F(x, 1)|^(-2/n) dx` with `n` the form degree.
pub fn area_integral(f: &BinaryForm, cfg: &QuadratureConfig) -> Result<AreaResult> {
    plan_area(f, cfg)?.run()
}

/// `∫ |p(x)|^(-alpha) dx` for `0 < alpha < 1`.
pub fn integral_alpha(p: &IntPolynomial, alpha: f64, cfg: &QuadratureConfig) -> Result<AreaResult> {
    plan_integral(p, alpha, cfg)?.run()
}
