//! Command-line front end for `formarea-core`: argument handling, CSV and
//! JSON output, table reproduction and the verification suite.

pub mod commands;
pub mod error;
pub mod family;
pub mod output;
pub mod tables;
pub mod verify;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use formarea_core::bounds::Verdict;
use formarea_core::QuadratureConfig;
use serde_json::Value;

pub use error::CliError;
use output::{Record, Sink};

#[derive(Debug, Parser)]
#[command(
    name = "formarea",
    version,
    about = "Areas of fundamental regions of integer binary forms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON instead of text/CSV
    #[arg(long, global = true)]
    pub json: bool,
    /// Target relative error for quadrature
    #[arg(long, global = true, value_name = "X")]
    pub tol: Option<f64>,
    /// Write output to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum WhichTable {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the dehomogenized polynomial of a form
    #[command(allow_negative_numbers = true)]
    Poly(FamilyArgs),
    /// Area of the fundamental region |F(x, y)| <= 1
    #[command(allow_negative_numbers = true)]
    Area(FamilyArgs),
    /// Check an area (or, with --alpha, a generalized integral) against its bounds
    Bounds {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        alpha: Option<f64>,
    },
    /// Reproduce the invariant tables for n = 3..9 as CSV
    Tables {
        /// Only the discriminant/area table (1) or the Q table (2)
        #[arg(long)]
        which: Option<WhichTable>,
        /// Add prime factorizations of the discriminants
        #[arg(long)]
        factored: bool,
    },
    /// Sample the curve |F(x, y)| = 1 in polar form
    #[command(allow_negative_numbers = true)]
    Curve {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 720)]
        samples: usize,
    },
    /// Convergence study along a list of n
    #[command(allow_negative_numbers = true)]
    Limits {
        /// psi, pi, s, chebyshev-t, chebyshev-u, cyclotomic or binomial
        family: String,
        /// Binomial coefficients a and b
        coeffs: Vec<String>,
        /// Comma-separated values of n
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<u64>,
        /// Track Q instead of the area (chebyshev-t, chebyshev-u, s)
        #[arg(long)]
        q: bool,
    },
    /// Run the acceptance checks; exit 3 if any fails
    Verify {
        /// Comma-separated criteria: numbers, names or groups
        #[arg(long)]
        only: Option<String>,
        /// Scale a bound constant, e.g. u_lead=1.01 (sensitivity testing)
        #[arg(long, value_name = "NAME=FACTOR")]
        perturb: Vec<String>,
    },
}

#[derive(Debug, clap::Args)]
pub struct FamilyArgs {
    /// psi, pi, s, chebyshev-t, chebyshev-u, cyclotomic or binomial
    pub family: String,
    pub n: u64,
    /// Binomial coefficients a and b (a x^n + b y^n)
    pub coeffs: Vec<String>,
}

impl FamilyArgs {
    fn id(&self) -> Result<formarea_core::FamilyId, CliError> {
        family_id(&self.family, self.n, &self.coeffs)
    }
}

fn family_id(name: &str, n: u64, coeffs: &[String]) -> Result<formarea_core::FamilyId, CliError> {
    if coeffs.len() > 2 {
        return Err(CliError::Usage(
            "at most two coefficients (a b) are accepted".into(),
        ));
    }
    family::parse(
        name,
        n,
        coeffs.first().map(String::as_str),
        coeffs.get(1).map(String::as_str),
    )
}

fn config(tol: Option<f64>) -> Result<QuadratureConfig, CliError> {
    let mut cfg = QuadratureConfig::default();
    if let Some(t) = tol {
        // Below about 1e-15 the panel sums are limited by rounding anyway.
        if !(1e-15..1.0).contains(&t) {
            return Err(CliError::Usage(format!(
                "--tol must lie in [1e-15, 1), got {t}"
            )));
        }
        cfg.target_rel_error = t;
    }
    Ok(cfg)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn record_out(rec: &Record, json: bool) -> String {
    if json {
        pretty(&rec.to_json())
    } else {
        rec.to_text()
    }
}

fn table_out(t: &output::Table, json: bool) -> String {
    if json {
        pretty(&t.to_json())
    } else {
        t.to_csv()
    }
}

/// Runs one command, writing its output; the error carries the exit code.
pub fn run(cli: &Cli) -> Result<(), CliError> {
    let cfg = config(cli.tol)?;
    let sink = Sink::new(cli.out.as_deref());
    match &cli.command {
        Command::Poly(f) => sink.write(&record_out(&commands::poly(&f.id()?)?, cli.json)),
        Command::Area(f) => sink.write(&record_out(&commands::area(&f.id()?, &cfg)?, cli.json)),
        Command::Bounds { family, alpha } => {
            let (rec, verdict) = commands::bounds(&family.id()?, *alpha, &cfg)?;
            sink.write(&record_out(&rec, cli.json))?;
            if verdict == Verdict::Fail {
                return Err(CliError::Verification("bound check failed".into()));
            }
            Ok(())
        }
        Command::Tables { which, factored } => {
            let which = match which {
                None => tables::Which::Both,
                Some(WhichTable::One) => tables::Which::One,
                Some(WhichTable::Two) => tables::Which::Two,
            };
            let cells = tables::cells(&cfg)?;
            sink.write(&table_out(
                &tables::render(&cells, which, *factored),
                cli.json,
            ))
        }
        Command::Curve { family, samples } => {
            if *samples < 8 {
                return Err(CliError::Usage("--samples must be at least 8".into()));
            }
            sink.write(&table_out(
                &commands::curve(&family.id()?, *samples)?,
                cli.json,
            ))
        }
        Command::Limits {
            family,
            coeffs,
            n_list,
            q,
        } => {
            let first = *n_list
                .first()
                .ok_or_else(|| CliError::Usage("--n-list is empty".into()))?;
            // validate every n up front
            for &n in n_list {
                family_id(family, n, coeffs)?;
            }
            let id = family_id(family, first, coeffs)?;
            sink.write(&table_out(
                &commands::limits(&id, n_list, *q, &cfg)?,
                cli.json,
            ))
        }
        Command::Verify { only, perturb } => {
            let mut ctx = verify::Context {
                cfg,
                ..Default::default()
            };
            for p in perturb {
                verify::perturb(&mut ctx.constants, p)?;
            }
            let ids = verify::select(only.as_deref())?;
            let outcomes = verify::run(&ids, &ctx);
            let text = if cli.json {
                let arr = outcomes
                    .iter()
                    .map(|o| {
                        serde_json::json!({
                            "criterion": o.id,
                            "name": o.name,
                            "status": if o.passed { "PASS" } else { "FAIL" },
                            "detail": o.detail,
                            "seconds": output::real_json(o.seconds),
                        })
                    })
                    .collect();
                pretty(&Value::Array(arr))
            } else {
                outcomes
                    .iter()
                    .map(|o| {
                        format!(
                            "{} {:>2} {}: {} [{:.2} s]\n",
                            if o.passed { "PASS" } else { "FAIL" },
                            o.id,
                            o.name,
                            o.detail,
                            o.seconds
                        )
                    })
                    .collect()
            };
            sink.write(&text)?;
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            if failed > 0 {
                return Err(CliError::Verification(format!(
                    "{failed} of {} checks failed",
                    outcomes.len()
                )));
            }
            Ok(())
        }
    }
}

/// Caps the global rayon pool at `FORMAREA_THREADS` when set.
pub fn init_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("FORMAREA_THREADS") else {
        return Ok(());
    };
    let n: usize = v.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        CliError::Usage(format!(
            "FORMAREA_THREADS must be a positive integer, got '{v}'"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot configure thread pool: {e}")))
}
