//! poly, area, bounds, curve and limits.

use formarea_core::bounds::{
    self, binomial_area_closed, disc_tn_closed, disc_un_closed, q_from_discriminant, q_star_closed,
    s_area_closed, BoundReport, Verdict,
};
use formarea_core::families::make;
use formarea_core::polycore::BinaryForm;
use formarea_core::quadrature::{self, curve_samples, CurvePoint, Plan};
use formarea_core::{AreaResult, AreaStatus, FamilyId, QuadratureConfig};
use rayon::prelude::*;

use crate::error::CliError;
use crate::family::limit_of;
use crate::output::{fmt_real, Record, Table};

/// Area with the panels evaluated in parallel.
pub fn area_of(f: &BinaryForm, cfg: &QuadratureConfig) -> Result<AreaResult, CliError> {
    run_plan(quadrature::plan_area(f, cfg)?)
}

pub fn integral_of(
    p: &formarea_core::IntPolynomial,
    alpha: f64,
    cfg: &QuadratureConfig,
) -> Result<AreaResult, CliError> {
    run_plan(quadrature::plan_integral(p, alpha, cfg)?)
}

fn run_plan(plan: Plan) -> Result<AreaResult, CliError> {
    match plan {
        Plan::Divergent => Ok(AreaResult::divergent()),
        Plan::Finite(plan) => {
            let panels = (0..plan.panel_count())
                .into_par_iter()
                .map(|i| plan.eval_panel(i))
                .collect();
            Ok(plan.assemble(panels)?)
        }
    }
}

pub fn area_value(id: &FamilyId, cfg: &QuadratureConfig) -> Result<f64, CliError> {
    Ok(area_of(&make(id)?, cfg)?.value)
}

pub fn poly(id: &FamilyId) -> Result<Record, CliError> {
    let f = make(id)?;
    Ok(Record::new("poly")
        .text("family", id.tag())
        .count("n", id.n())
        .text("poly", f.poly.to_string())
        .count("form_degree", f.form_degree as u64)
        .list(
            "coefficients",
            f.poly.coeffs().iter().map(|c| c.to_string()).collect(),
        ))
}

pub fn area(id: &FamilyId, cfg: &QuadratureConfig) -> Result<Record, CliError> {
    let f = make(id)?;
    let r = area_of(&f, cfg)?;
    let status = match r.status {
        AreaStatus::Finite => "finite",
        AreaStatus::Divergent => "divergent",
    };
    Ok(Record::new("area")
        .text("family", id.tag())
        .count("n", id.n())
        .count("form_degree", f.form_degree as u64)
        .real("area", r.value)
        .real("abs_error_estimate", r.abs_error_estimate)
        .text("status", status)
        .count("panels", r.panels.len() as u64))
}

pub fn bounds(
    id: &FamilyId,
    alpha: Option<f64>,
    cfg: &QuadratureConfig,
) -> Result<(Record, Verdict), CliError> {
    let n = id.n();
    let f = make(id)?;
    let range = match (id, alpha) {
        (FamilyId::Psi(_), None) => bounds::psi_area_bounds(n)?,
        (FamilyId::Psi(_), Some(a)) => bounds::psi_integral_bounds(n, a)?,
        (FamilyId::ChebyshevT(_), None) => bounds::tn_area_bounds(n)?,
        (FamilyId::ChebyshevT(_), Some(a)) => bounds::tn_integral_bounds(n, a)?,
        (FamilyId::ChebyshevU(_), None) => bounds::un_area_bounds(n)?,
        (FamilyId::ChebyshevU(_), Some(a)) => bounds::un_integral_bounds(n, a)?,
        _ => {
            return Err(CliError::Usage(format!(
                "no bounds for family '{}' (expected psi, chebyshev-t or chebyshev-u)",
                id.tag()
            )))
        }
    };
    let r = match alpha {
        None => area_of(&f, cfg)?,
        Some(a) => integral_of(&f.poly, a, cfg)?,
    };
    let computed = r.is_finite().then_some(r.value);
    let report = BoundReport::new(
        n,
        alpha.unwrap_or(2.0 / f.form_degree as f64),
        range,
        computed,
    );
    let verdict = match report.verdict {
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
        Verdict::Inconclusive => "INCONCLUSIVE",
    };
    let value = r.value;
    let rec = Record::new("bounds")
        .text("family", id.tag())
        .count("n", n)
        .real("alpha", report.alpha)
        .real("lower", report.lower)
        .real("computed", value)
        .real("upper", report.upper)
        .real("margin_lower", value - report.lower)
        .real("margin_upper", report.upper - value)
        .text("verdict", verdict);
    Ok((rec, report.verdict))
}

pub fn curve(id: &FamilyId, samples: usize) -> Result<Table, CliError> {
    let f = make(id)?;
    let pts = curve_samples(&f, samples)?;
    let mut t = Table::new(&["theta", "x", "y", "kind"]).reals(&["theta", "x", "y"]);
    for p in pts {
        t.rows.push(match p {
            CurvePoint::Point { theta, x, y } => {
                vec![fmt_real(theta), fmt_real(x), fmt_real(y), "point".into()]
            }
            CurvePoint::Ray { theta } => {
                vec![fmt_real(theta), String::new(), String::new(), "ray".into()]
            }
        });
    }
    Ok(t)
}

/// One row of a convergence study.
#[derive(Debug, Clone)]
pub struct LimitRow {
    pub n: u64,
    pub value: f64,
    pub gap: f64,
    pub method: &'static str,
}

/// Values along `ns`, by closed form where one exists and by quadrature
/// otherwise. With `q` set the invariant Q is tracked instead of the
/// area, using the closed-form discriminants for Tₙ and Uₙ.
pub fn limit_rows(
    id: &FamilyId,
    ns: &[u64],
    q: bool,
    cfg: &QuadratureConfig,
) -> Result<Vec<LimitRow>, CliError> {
    let (limit, _) = limit_of(id, q)?;
    ns.par_iter()
        .map(|&n| {
            let id = id.with_n(n);
            let (value, method) = match (&id, q) {
                (FamilyId::Binomial { a, b, n }, false) => {
                    (binomial_area_closed(a, b, *n)?, "closed")
                }
                (FamilyId::S(n), false) => (s_area_closed(*n)?, "closed"),
                (FamilyId::S(n), true) => (q_star_closed(*n)?, "closed"),
                (FamilyId::ChebyshevT(n), true) => {
                    let a = area_value(&id, cfg)?;
                    (
                        q_from_discriminant(&disc_tn_closed(*n), *n as usize, a),
                        "quadrature",
                    )
                }
                (FamilyId::ChebyshevU(n), true) => {
                    let a = area_value(&id, cfg)?;
                    (
                        q_from_discriminant(&disc_un_closed(*n), *n as usize, a),
                        "quadrature",
                    )
                }
                _ => (area_value(&id, cfg)?, "quadrature"),
            };
            Ok(LimitRow {
                n,
                value,
                gap: (value - limit).abs(),
                method,
            })
        })
        .collect()
}

pub fn limits(
    id: &FamilyId,
    ns: &[u64],
    q: bool,
    cfg: &QuadratureConfig,
) -> Result<Table, CliError> {
    let (_, label) = limit_of(id, q)?;
    let rows = limit_rows(id, ns, q, cfg)?;
    let mut t = Table::new(&["n", "value", "limit", "gap", "method"])
        .reals(&["value", "gap"])
        .counts(&["n"]);
    for r in rows {
        t.rows.push(vec![
            r.n.to_string(),
            fmt_real(r.value),
            label.into(),
            fmt_real(r.gap),
            r.method.into(),
        ]);
    }
    Ok(t)
}
