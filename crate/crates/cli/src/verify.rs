//! The acceptance checks behind `formarea verify`.
//!
//! Reference values marked "printed" are the published table entries,
//! transcribed as they appear (including their last-digit rounding).

use std::time::Instant;

use formarea_core::bounds::{
    self, binomial_area_closed, disc_psi_closed, disc_tn_closed, disc_un_closed,
    q_from_discriminant, q_star_closed, q_upper_bounds_with, s_area_closed, BoundReport, Constants,
    Verdict,
};
use formarea_core::families::{is_area_finite, make};
use formarea_core::numtheory::{c_of_n, divisor_count, divisors, euler_phi};
use formarea_core::polycore::{
    self, binomial_form, cyclotomic, discriminant, pi_form, psi, s_form, BinaryForm, IntPolynomial,
};
use formarea_core::specialfn::{beta, beta_trig_quadrature, gamma, PI};
use formarea_core::{FamilyId, QuadratureConfig};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;

use crate::commands::{area_of, area_value, integral_of, limit_rows};
use crate::error::CliError;
use crate::tables::{self, families};

pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub group: &'static str,
}

pub const CRITERIA: [Criterion; 10] = [
    Criterion {
        id: 1,
        name: "table1-areas",
        group: "tables",
    },
    Criterion {
        id: 2,
        name: "table1-discriminants",
        group: "tables",
    },
    Criterion {
        id: 3,
        name: "table2-q",
        group: "tables",
    },
    Criterion {
        id: 4,
        name: "closed-forms",
        group: "oracles",
    },
    Criterion {
        id: 5,
        name: "sandwich",
        group: "bounds",
    },
    Criterion {
        id: 6,
        name: "discriminant-formulas",
        group: "exact",
    },
    Criterion {
        id: 7,
        name: "identities",
        group: "exact",
    },
    Criterion {
        id: 8,
        name: "limits",
        group: "limits",
    },
    Criterion {
        id: 9,
        name: "special-functions",
        group: "specialfn",
    },
    Criterion {
        id: 10,
        name: "q-comparison",
        group: "bounds",
    },
];

#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

#[derive(Debug, Clone, Default)]
pub struct Context {
    pub constants: Constants,
    pub cfg: QuadratureConfig,
}

/// Parses `--only`: a comma list of criterion numbers, names or groups.
pub fn select(only: Option<&str>) -> Result<Vec<u8>, CliError> {
    let Some(only) = only else {
        return Ok(CRITERIA.iter().map(|c| c.id).collect());
    };
    let mut ids = Vec::new();
    for tok in only.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let hit: Vec<u8> = CRITERIA
            .iter()
            .filter(|c| c.name == tok || c.group == tok || c.id.to_string() == tok)
            .map(|c| c.id)
            .collect();
        if hit.is_empty() {
            return Err(CliError::Usage(format!("unknown check '{tok}'")));
        }
        ids.extend(hit);
    }
    ids.sort_unstable();
    ids.dedup();
    Ok(ids)
}

/// Applies `name=factor` to one of the bound constants.
pub fn perturb(k: &mut Constants, arg: &str) -> Result<(), CliError> {
    let bad = || {
        CliError::Usage(format!(
            "bad perturbation '{arg}' (expected psi_lead|t_lead|u_lead=FACTOR)"
        ))
    };
    let (name, factor) = arg.split_once('=').ok_or_else(bad)?;
    let factor: f64 = factor.parse().map_err(|_| bad())?;
    let slot = match name {
        "psi_lead" => &mut k.psi_lead,
        "t_lead" => &mut k.t_lead,
        "u_lead" => &mut k.u_lead,
        _ => return Err(bad()),
    };
    *slot *= factor;
    Ok(())
}

pub fn run(ids: &[u8], ctx: &Context) -> Vec<Outcome> {
    ids.iter().map(|&id| run_one(id, ctx)).collect()
}

pub fn run_one(id: u8, ctx: &Context) -> Outcome {
    let c = CRITERIA.iter().find(|c| c.id == id).expect("criterion id");
    let t0 = Instant::now();
    let res = match id {
        1 => table1_areas(ctx),
        2 => table1_discriminants(),
        3 => table2(ctx),
        4 => closed_forms(ctx),
        5 => sandwich(ctx),
        6 => discriminant_formulas(),
        7 => identities(),
        8 => limits(ctx),
        9 => special_functions(),
        10 => q_comparison(ctx),
        _ => unreachable!(),
    };
    let (passed, detail) = match res {
        Ok(v) => v,
        Err(e) => (false, format!("error: {e}")),
    };
    Outcome {
        id,
        name: c.name,
        passed,
        detail,
        seconds: t0.elapsed().as_secs_f64(),
    }
}

type Check = Result<(bool, String), CliError>;

// Printed discriminants and areas for n = 3..9 in the order Ψ, Π, S, T, U;
// `None` is a printed ∞.
const PRINTED_D: [[&str; 5]; 7] = [
    ["1", "2^2*3", "2^2*3^3", "2^4*3^3", "2^11"],
    ["1", "1", "2^2", "2^17", "2^16*5^2"],
    ["5", "2^4*5^3", "2^12*5^5", "2^16*5^5", "2^28*3^3"],
    ["1", "2^2*3", "2^16*3^6", "2^31*3^6", "2^36*7^4"],
    ["7^2", "2^6*7^5", "2^30*7^7", "2^36*7^7", "2^64"],
    ["2^3", "2^3", "2^24", "2^73", "2^64*3^12"],
    ["3^4", "2^6*3^9", "2^56*3^18", "2^64*3^18", "2^88*5^7"],
];

const PRINTED_A: [[Option<&str>; 5]; 7] = [
    [
        None,
        None,
        Some("7.28585"),
        Some("5.78286"),
        Some("4.46217"),
    ],
    [
        None,
        None,
        Some("10.4882"),
        Some("4.30008"),
        Some("3.50332"),
    ],
    [
        None,
        Some("5.78302"),
        Some("4.55444"),
        Some("3.78568"),
        Some("3.19719"),
    ],
    [
        None,
        None,
        Some("5.29992"),
        Some("3.52082"),
        Some("3.04985"),
    ],
    [
        Some("8.31171"),
        Some("5.38644"),
        Some("3.99650"),
        Some("3.35841"),
        Some("2.96434"),
    ],
    [
        None,
        None,
        Some("6.48467"),
        Some("3.24832"),
        Some("2.90894"),
    ],
    [
        Some("7.64379"),
        Some("5.63543"),
        Some("3.75495"),
        Some("3.16867"),
        Some("2.87035"),
    ],
];

const PRINTED_Q: [[Option<f64>; 5]; 7] = [
    [None, None, Some(15.8997), Some(15.8997), Some(15.8997)],
    [None, None, Some(11.7726), Some(11.4798), Some(11.5438)],
    [
        None,
        Some(10.8953),
        Some(10.3228),
        Some(9.85622),
        Some(9.94897),
    ],
    [None, None, Some(9.55526), Some(8.97702), Some(9.08227)],
    [
        Some(15.8997),
        Some(8.5577),
        Some(9.06881),
        Some(8.41412),
        Some(8.52393),
    ],
    [None, None, Some(8.72772), Some(8.01814), Some(8.12848)],
    [
        Some(15.8997),
        Some(9.00056),
        Some(8.47265),
        Some(7.72218),
        Some(7.83097),
    ],
];

/// Agreement with a printed entry: `tol`, or one unit in the last printed
/// decimal place when the entry carries fewer decimals than that.
fn printed_tol(printed: &str, tol: f64) -> f64 {
    let decimals = printed.split_once('.').map_or(0, |(_, f)| f.len()) as i32;
    tol.max(10f64.powi(-decimals))
}

fn label(id: &FamilyId) -> String {
    let short = match id {
        FamilyId::Psi(_) => "Psi",
        FamilyId::Pi(_) => "Pi",
        FamilyId::S(_) => "S",
        FamilyId::ChebyshevT(_) => "T",
        FamilyId::ChebyshevU(_) => "U",
        FamilyId::Cyclotomic(_) => "Phi",
        FamilyId::Binomial { .. } => "F",
    };
    format!("{short}{}", id.n())
}

/// Parses `2^4*3^3`.
pub fn parse_factored(s: &str) -> Option<BigInt> {
    let mut out = BigInt::one();
    for part in s.split('*') {
        let (p, e) = match part.split_once('^') {
            Some((p, e)) => (p.parse::<u64>().ok()?, e.parse::<u32>().ok()?),
            None => (part.parse::<u64>().ok()?, 1),
        };
        out *= BigInt::from(p).pow(e);
    }
    Some(out)
}

fn summarize(total: usize, failures: &[String]) -> (bool, String) {
    if failures.is_empty() {
        (true, format!("{total}/{total} ok"))
    } else {
        let shown: Vec<_> = failures.iter().take(8).cloned().collect();
        let more = if failures.len() > 8 {
            format!(" (+{} more)", failures.len() - 8)
        } else {
            String::new()
        };
        (
            false,
            format!(
                "{}/{total} ok; {}{more}",
                total - failures.len(),
                shown.join("; ")
            ),
        )
    }
}

fn table1_areas(ctx: &Context) -> Check {
    let t0 = Instant::now();
    let cells = tables::cells(&ctx.cfg)?;
    let elapsed = t0.elapsed().as_secs_f64();
    let mut fails = Vec::new();
    let mut total = 0;
    for (c, want) in cells.iter().zip(PRINTED_A.iter().flatten()) {
        total += 1;
        match want {
            Some(w) if (c.area - w.parse::<f64>().unwrap()).abs() >= printed_tol(w, 1e-5) => fails
                .push(format!(
                    "{} = {:.8} vs printed {w} (diff {:.1e})",
                    label(&c.id),
                    c.area,
                    (c.area - w.parse::<f64>().unwrap()).abs()
                )),
            None if c.area.is_finite() => {
                fails.push(format!("{} finite, printed inf", label(&c.id)))
            }
            _ => {}
        }
    }
    if elapsed >= 5.0 {
        fails.push(format!("took {elapsed:.2} s (budget 5 s)"));
    }
    let (ok, mut detail) = summarize(total, &fails);
    detail.push_str(&format!("; {elapsed:.2} s"));
    Ok((ok, detail))
}

fn table1_discriminants() -> Check {
    let ids: Vec<FamilyId> = tables::NS.flat_map(families).collect();
    let got: Vec<BigInt> = ids
        .par_iter()
        .map(|id| make(id).map(|f| f.discriminant()))
        .collect::<Result<_, _>>()?;
    let mut fails = Vec::new();
    for ((id, d), want) in ids.iter().zip(&got).zip(PRINTED_D.iter().flatten()) {
        let want = parse_factored(want).expect("well-formed table entry");
        if d.abs() != want {
            fails.push(format!("{}: {d} vs printed {want}", label(id)));
        }
    }
    Ok(summarize(ids.len(), &fails))
}

fn table2(ctx: &Context) -> Check {
    let cells = tables::cells(&ctx.cfg)?;
    let mut fails = Vec::new();
    for (c, want) in cells.iter().zip(PRINTED_Q.iter().flatten()) {
        match want {
            Some(w) if (c.q - w).abs() >= 1e-4 => {
                fails.push(format!("Q({}) = {:.7} vs printed {w}", label(&c.id), c.q))
            }
            None if c.q.is_finite() || is_area_finite(&c.id)? => {
                fails.push(format!("Q({}) finite, printed inf", label(&c.id)))
            }
            _ => {}
        }
    }
    Ok(summarize(cells.len(), &fails))
}

fn closed_forms(ctx: &Context) -> Check {
    let mut cases = Vec::new();
    for n in [3u64, 4, 5, 6, 10] {
        for (a, b) in [(1i64, 1i64), (1, -1), (2, 3), (-2, 3)] {
            cases.push((BigInt::from(a), BigInt::from(b), n));
        }
    }
    let mut fails: Vec<String> = cases
        .par_iter()
        .map(|(a, b, n)| -> Result<Option<String>, CliError> {
            let q = area_of(&binomial_form(a, b, *n)?, &ctx.cfg)?.value;
            let c = binomial_area_closed(a, b, *n)?;
            Ok(((q - c).abs() > 1e-8 * c).then(|| format!("{a}x^{n} + {b}y^{n}: {q} vs {c}")))
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    let s: Vec<Option<String>> = (3..=12u64)
        .into_par_iter()
        .map(|n| -> Result<Option<String>, CliError> {
            let q = area_value(&FamilyId::S(n), &ctx.cfg)?;
            let c = s_area_closed(n)?;
            Ok(((q - c).abs() > 1e-8 * c).then(|| format!("S{n}: {q} vs {c}")))
        })
        .collect::<Result<_, _>>()?;
    fails.extend(s.into_iter().flatten());
    let q3 = q_star_closed(3)?;
    let cubic = 3.0 * beta(1.0 / 3.0, 1.0 / 3.0)?;
    if (q3 - 15.8997).abs() >= 1e-4 || (q3 - cubic).abs() > 1e-12 * cubic {
        fails.push(format!("Q*(3) = {q3}"));
    }
    Ok(summarize(cases.len() + 10 + 1, &fails))
}

fn sandwich(ctx: &Context) -> Check {
    let k = &ctx.constants;
    let cfg = &ctx.cfg;
    let verdict_ok = |r: &BoundReport| r.verdict == Verdict::Pass;
    let psi_ns: Vec<u64> = (3..=60)
        .filter(|&n| euler_phi(n).is_ok_and(|p| p >= 6))
        .collect();
    let mut reports: Vec<(String, BoundReport)> = psi_ns
        .par_iter()
        .map(|&n| {
            let a = area_value(&FamilyId::Psi(n), cfg)?;
            Ok((
                format!("Psi{n}"),
                BoundReport::new(n, 0.0, bounds::psi_area_bounds_with(n, k)?, Some(a)),
            ))
        })
        .collect::<Result<_, CliError>>()?;
    let cheb: Vec<(String, BoundReport)> = (3..=40u64)
        .into_par_iter()
        .flat_map_iter(|n| {
            let t = (|| -> Result<_, CliError> {
                let a = area_value(&FamilyId::ChebyshevT(n), cfg)?;
                Ok((
                    format!("T{n}"),
                    BoundReport::new(n, 0.0, bounds::tn_area_bounds_with(n, k)?, Some(a)),
                ))
            })();
            let u = (|| -> Result<_, CliError> {
                let a = area_value(&FamilyId::ChebyshevU(n), cfg)?;
                Ok((
                    format!("U{n}"),
                    BoundReport::new(n, 0.0, bounds::un_area_bounds_with(n, k)?, Some(a)),
                ))
            })();
            [t, u]
        })
        .collect::<Result<_, _>>()?;
    reports.extend(cheb);
    let grid = alpha_grid();
    let lemma: Vec<(String, BoundReport)> = grid
        .par_iter()
        .map(|(id, alpha)| {
            let n = id.n();
            let p = make(id)?.poly;
            let range = match id {
                FamilyId::Psi(_) => bounds::psi_integral_bounds(n, *alpha)?,
                FamilyId::ChebyshevT(_) => bounds::tn_integral_bounds(n, *alpha)?,
                _ => bounds::un_integral_bounds(n, *alpha)?,
            };
            let r = integral_of(&p, *alpha, cfg)?;
            Ok((
                format!("{} alpha={alpha:.4}", label(id)),
                BoundReport::new(n, *alpha, range, r.is_finite().then_some(r.value)),
            ))
        })
        .collect::<Result<_, CliError>>()?;
    let n_lemma = lemma.len();
    reports.extend(lemma);
    let fails: Vec<String> = reports
        .iter()
        .filter(|(_, r)| !verdict_ok(r))
        .map(|(name, r)| {
            format!(
                "{name}: {:?} lower {:.6} value {:.6} upper {:.6}",
                r.verdict,
                r.lower,
                r.computed.unwrap_or(f64::INFINITY),
                r.upper
            )
        })
        .collect();
    let (ok, detail) = summarize(reports.len(), &fails);
    Ok((
        ok,
        format!(
            "{detail} ({} area, {n_lemma} grid points)",
            reports.len() - n_lemma
        ),
    ))
}

/// Admissible `(family, α)` points for the generalized integral bounds.
pub fn alpha_grid() -> Vec<(FamilyId, f64)> {
    let mut grid = Vec::new();
    for n in [7u64, 9, 11, 13, 15, 21] {
        let phi = euler_phi(n).unwrap() as f64;
        for k in 1..=5 {
            grid.push((
                FamilyId::Psi(n),
                2.0 / phi + (1.0 - 2.0 / phi) * k as f64 / 6.0,
            ));
        }
    }
    for n in 3..=8u64 {
        for k in 0..5 {
            let alpha = 2.0 / n as f64 + (1.0 - 2.0 / n as f64) * k as f64 / 5.0;
            grid.push((FamilyId::ChebyshevT(n), alpha));
            grid.push((FamilyId::ChebyshevU(n), alpha));
        }
    }
    grid
}

fn discriminant_formulas() -> Check {
    let mut fails = Vec::new();
    let mut total = 0;
    for n in 3..=12u64 {
        let t = BinaryForm::new(polycore::chebyshev_t(n), n as usize)?;
        let u = BinaryForm::new(polycore::chebyshev_u(n), n as usize)?;
        total += 2;
        if discriminant(&t) != disc_tn_closed(n) {
            fails.push(format!("T{n}"));
        }
        if discriminant(&u) != disc_un_closed(n) {
            fails.push(format!("U{n}"));
        }
    }
    let psi_checks: Vec<Option<String>> = (3..=100u64)
        .into_par_iter()
        .filter(|&n| n != 4)
        .map(|n| -> Result<Option<String>, CliError> {
            let closed = match disc_psi_closed(n) {
                Ok(d) => d,
                Err(e) => return Ok(Some(format!("Psi{n}: {e}"))),
            };
            let exact = polycore::poly_discriminant(&psi(n)?)?;
            Ok((exact != closed).then(|| format!("Psi{n}: {exact} vs {closed}")))
        })
        .collect::<Result<_, _>>()?;
    total += psi_checks.len();
    fails.extend(psi_checks.into_iter().flatten());
    Ok(summarize(total, &fails))
}

fn ln_l1(p: &IntPolynomial) -> f64 {
    let l = p.l1_norm();
    let bits = l.bits();
    if bits < 1000 {
        l.to_f64().unwrap().ln()
    } else {
        let shift = bits - 64;
        (&l >> shift).to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
    }
}

fn eval_unit(p: &IntPolynomial, re: f64, im: f64) -> (f64, f64) {
    let mut acc = (0.0, 0.0);
    for c in p.coeffs().iter().rev() {
        let c = c.to_f64().unwrap();
        acc = (acc.0 * re - acc.1 * im + c, acc.0 * im + acc.1 * re);
    }
    acc
}

fn identities() -> Check {
    let mut fails = Vec::new();
    let mut total = 0;

    // ∏_{d|n} Φ_d = x^n - 1
    let prod: Vec<Option<String>> = (1..=200u64)
        .into_par_iter()
        .map(|n| -> Result<Option<String>, CliError> {
            let mut p = IntPolynomial::one();
            for d in divisors(n)? {
                p = &p * &cyclotomic(d)?;
            }
            let want = &IntPolynomial::monomial(BigInt::one(), n as usize) - &IntPolynomial::one();
            Ok((p != want).then(|| format!("product n={n}")))
        })
        .collect::<Result<_, _>>()?;
    total += prod.len();
    fails.extend(prod.into_iter().flatten());

    // |Ψₙ(2cos θ)| = |Φₙ(e^{iθ})| and Ψₙ(2cosh θ) = e^{φθ/2} Φₙ(e^{-θ})
    for n in [5u64, 7, 9, 12, 15] {
        total += 1;
        let ps = psi(n)?;
        let ph = cyclotomic(n)?;
        let half = euler_phi(n)? as f64 / 2.0;
        let mut worst: f64 = 0.0;
        for k in 1..=100 {
            let th = PI * k as f64 / 101.0;
            let a = ps.eval_f64(2.0 * th.cos()).abs();
            let (re, im) = eval_unit(&ph, th.cos(), th.sin());
            let b = re.hypot(im);
            worst = worst.max((a - b).abs() / b);
            let th = 3.0 * k as f64 / 100.0;
            let a = ps.eval_f64(2.0 * th.cosh());
            let b = (half * th).exp() * ph.eval_f64((-th).exp());
            worst = worst.max((a - b).abs() / b.abs());
        }
        if worst > 1e-10 {
            fails.push(format!("modulus identity n={n}: rel {worst:.1e}"));
        }
    }

    // Πₙ = Ψ_{c(n)}, and 2 sin(2π/n) is a root
    for n in 1..=64u64 {
        total += 1;
        let p = pi_form(n)?;
        let x = 2.0 * (2.0 * PI / n as f64).sin();
        let scale: f64 = p
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| c.abs().to_f64().unwrap() * x.abs().powi(i as i32))
            .sum();
        if p != psi(c_of_n(n)?)? || p.eval_f64(x).abs() > 1e-11 * scale.max(1.0) {
            fails.push(format!("Pi{n}"));
        }
    }

    // L(Φₙ) ≤ n^{d(n)/2} and ∏_{m|n, m>1} L(Φ_m) ≤ exp(d(n)² log n / 2)
    const N: u64 = 10_000;
    let ln_l: Vec<f64> = (0..=N)
        .into_par_iter()
        .map(|n| {
            if n < 2 {
                Ok(0.0)
            } else {
                cyclotomic(n).map(|p| ln_l1(&p))
            }
        })
        .collect::<Result<_, _>>()?;
    let mut bad = Vec::new();
    for n in 2..=N {
        let d = divisor_count(n)? as f64;
        let ln_n = (n as f64).ln();
        let total_ln: f64 = divisors(n)?
            .iter()
            .filter(|&&m| m > 1)
            .map(|&m| ln_l[m as usize])
            .sum();
        if ln_l[n as usize] > d / 2.0 * ln_n + 1e-9 || total_ln > d * d * ln_n / 2.0 + 1e-9 {
            bad.push(n);
        }
    }
    total += 1;
    if !bad.is_empty() {
        fails.push(format!(
            "coefficient bounds fail at n = {:?}",
            &bad[..bad.len().min(5)]
        ));
    }

    // Sₙ is primitive
    for n in 3..=32u64 {
        total += 1;
        if !s_form(n)?.content().is_one() {
            fails.push(format!("content S{n}"));
        }
    }
    Ok(summarize(total, &fails))
}

fn decreasing(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[1] < w[0])
}

fn limits(ctx: &Context) -> Check {
    let ns = [12u64, 24, 48, 96];
    let one = BigInt::one();
    let fams = [
        FamilyId::ChebyshevT(3),
        FamilyId::ChebyshevU(3),
        FamilyId::Binomial {
            a: one.clone(),
            b: one,
            n: 3,
        },
        FamilyId::Cyclotomic(3),
    ];
    let mut fails = Vec::new();
    let mut parts = Vec::new();
    for f in &fams {
        let rows = limit_rows(f, &ns, false, &ctx.cfg)?;
        let gaps: Vec<f64> = rows.iter().map(|r| r.gap).collect();
        let name = label(f).trim_end_matches('3').to_string();
        parts.push(format!(
            "{name} gaps {}",
            gaps.iter()
                .map(|g| format!("{g:.4}"))
                .collect::<Vec<_>>()
                .join(" > ")
        ));
        if !decreasing(&gaps) {
            fails.push(format!("{name} gaps not decreasing"));
        }
    }
    let q = limit_rows(&FamilyId::ChebyshevT(96), &[96], true, &ctx.cfg)?[0].value;
    let gap = (q - 16.0 / 3.0).abs();
    parts.push(format!("|Q(T96) - 16/3| = {gap:.4}"));
    if gap >= 0.1 {
        fails.push("Q(T96) not within 0.1 of 16/3".to_string());
    }
    let detail = parts.join("; ");
    if fails.is_empty() {
        Ok((true, detail))
    } else {
        Ok((false, format!("{}; {detail}", fails.join("; "))))
    }
}

fn special_functions() -> Check {
    let mut fails = Vec::new();
    let mut total = 0;
    for k in 1..=200 {
        total += 1;
        let x = 0.1 * k as f64 - 0.05;
        let (g1, g) = (gamma(x + 1.0)?, gamma(x)?);
        if (g1 - x * g).abs() > 1e-12 * g1.abs() {
            fails.push(format!("Gamma({x}+1) vs x Gamma(x)"));
        }
    }
    for (x, y, want) in [(0.5, 0.5, PI), (1.0, 0.5, 2.0)] {
        total += 1;
        let b = beta(x, y)?;
        if (b - want).abs() > 1e-12 {
            fails.push(format!("B({x}, {y}) = {b}"));
        }
    }
    let grid: Vec<(f64, f64)> = (1..=20)
        .flat_map(|i| (1..=20).map(move |j| (0.1 * i as f64, 0.1 * j as f64)))
        .collect();
    let bad: Vec<Option<String>> = grid
        .par_iter()
        .map(|&(x, y)| -> Result<Option<String>, CliError> {
            let (a, b) = (beta(x, y)?, beta_trig_quadrature(x, y)?);
            Ok(((a - b).abs() > 1e-9 * a).then(|| format!("B({x:.1}, {y:.1}): {a} vs {b}")))
        })
        .collect::<Result<_, _>>()?;
    total += grid.len();
    fails.extend(bad.into_iter().flatten());
    Ok(summarize(total, &fails))
}

fn q_comparison(ctx: &Context) -> Check {
    let mut fails = Vec::new();
    let mut total = 0;
    let small: Vec<(u64, f64, f64)> = (3..=9u64)
        .into_par_iter()
        .map(|n| -> Result<_, CliError> {
            let qt = q_from_discriminant(
                &disc_tn_closed(n),
                n as usize,
                area_value(&FamilyId::ChebyshevT(n), &ctx.cfg)?,
            );
            let qu = q_from_discriminant(
                &disc_un_closed(n),
                n as usize,
                area_value(&FamilyId::ChebyshevU(n), &ctx.cfg)?,
            );
            Ok((n, qt, qu))
        })
        .collect::<Result<_, _>>()?;
    for (n, qt, qu) in small {
        total += 2;
        let qs = q_star_closed(n)?;
        // Equality holds at n = 3.
        let slack = 1e-9 * qs;
        if qt > qs + slack {
            fails.push(format!("Q(T{n}) = {qt} > Q(S{n}) = {qs}"));
        }
        if qu > qs + slack {
            fails.push(format!("Q(U{n}) = {qu} > Q(S{n}) = {qs}"));
        }
    }
    let mut tightest = (f64::INFINITY, 0u64);
    for n in 10..=40u64 {
        total += 2;
        let (qt, qu) = q_upper_bounds_with(n, &ctx.constants)?;
        let qs = q_star_closed(n)?;
        if qs - qt.max(qu) < tightest.0 {
            tightest = (qs - qt.max(qu), n);
        }
        if qt >= qs {
            fails.push(format!("n={n}: bound on Q(T) {qt:.6} >= Q(S) {qs:.6}"));
        }
        if qu >= qs {
            fails.push(format!("n={n}: bound on Q(U) {qu:.6} >= Q(S) {qs:.6}"));
        }
    }
    let (ok, detail) = summarize(total, &fails);
    Ok((
        ok,
        format!(
            "{detail}; smallest margin {:.4} at n={}",
            tightest.0, tightest.1
        ),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selection() {
        assert_eq!(select(Some("tables")).unwrap(), vec![1, 2, 3]);
        assert_eq!(select(Some("9,sandwich")).unwrap(), vec![5, 9]);
        assert_eq!(select(None).unwrap().len(), 10);
        assert!(select(Some("nope")).is_err());
    }

    #[test]
    fn perturbation() {
        let mut k = Constants::EXACT;
        perturb(&mut k, "u_lead=1.01").unwrap();
        assert!((k.u_lead - 8.0 / 3.0 * 1.01).abs() < 1e-15);
        assert!(perturb(&mut k, "v_lead=2").is_err());
        assert!(perturb(&mut k, "u_lead").is_err());
    }

    #[test]
    fn printed_precision() {
        assert_eq!(printed_tol("10.4882", 1e-5), 1e-4);
        assert_eq!(printed_tol("3.99650", 1e-5), 1e-5);
    }

    #[test]
    fn factored_strings() {
        assert_eq!(parse_factored("2^4*3^3"), Some(BigInt::from(432)));
        assert_eq!(parse_factored("1"), Some(BigInt::one()));
        assert!(BigInt::from(0) < parse_factored("2^88*5^7").unwrap());
    }

    #[test]
    fn grid_is_large_enough() {
        assert!(alpha_grid().len() >= 50);
    }
}
