//! Areas of fundamental regions, `∫ |F(x, 1)|^(-2/n) dx`, and the more general
//! `∫ |p(x)|^(-α) dx`, by tanh-sinh quadrature on panels split at the real
//! roots.

mod area;
mod curve;
mod roots;
pub mod tanh_sinh;

use alloc::vec::Vec;

pub use area::{area_integral, integral_alpha, plan_area, plan_integral, AreaPlan, Plan};
pub use curve::{curve_samples, CurvePoint, CurveSampler};
pub(crate) use roots::ln_abs_big as roots_ln_abs_big;
pub use roots::{isolate_real_roots, ComplexPair, FactoredPoly, RealRoot, RootSet};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub target_rel_error: f64,
    /// Number of step halvings allowed per panel.
    pub max_level: u32,
    /// Distance from the outermost root to where each tail panel starts;
    /// `None` means 1.
    pub tail_cutoff: Option<f64>,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            target_rel_error: 1e-9,
            max_level: 12,
            tail_cutoff: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AreaStatus {
    Finite,
    Divergent,
}

/// Contribution of one panel `[lo, hi]` (infinite for the tails).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PanelResult {
    pub lo: f64,
    pub hi: f64,
    pub value: f64,
    pub abs_error: f64,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AreaResult {
    /// `+∞` when divergent.
    pub value: f64,
    pub abs_error_estimate: f64,
    pub status: AreaStatus,
    pub panels: Vec<PanelResult>,
}

impl AreaResult {
    pub fn divergent() -> Self {
        AreaResult {
            value: f64::INFINITY,
            abs_error_estimate: 0.0,
            status: AreaStatus::Divergent,
            panels: Vec::new(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.status == AreaStatus::Finite
    }
}
