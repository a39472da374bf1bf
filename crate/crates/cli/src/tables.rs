//! Discriminants, areas and Q for Ψₙ, Πₙ, Sₙ, Tₙ, Uₙ with n = 3..9.

use formarea_core::bounds::q_from_discriminant;
use formarea_core::families::make;
use formarea_core::{FamilyId, QuadratureConfig};
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::commands::area_of;
use crate::error::CliError;
use crate::output::{factored, fmt_real, Table};

pub const NS: std::ops::RangeInclusive<u64> = 3..=9;

pub fn families(n: u64) -> [FamilyId; 5] {
    [
        FamilyId::Psi(n),
        FamilyId::Pi(n),
        FamilyId::S(n),
        FamilyId::ChebyshevT(n),
        FamilyId::ChebyshevU(n),
    ]
}

#[derive(Debug, Clone)]
pub struct Cell {
    pub id: FamilyId,
    pub discriminant: BigInt,
    pub area: f64,
    pub abs_error_estimate: f64,
    pub q: f64,
}

/// All 35 cells in row order (n, then Ψ, Π, S, T, U).
pub fn cells(cfg: &QuadratureConfig) -> Result<Vec<Cell>, CliError> {
    let ids: Vec<FamilyId> = NS.flat_map(families).collect();
    ids.into_par_iter()
        .map(|id| {
            let f = make(&id)?;
            let discriminant = f.discriminant();
            let r = area_of(&f, cfg)?;
            let q = q_from_discriminant(&discriminant, f.form_degree, r.value);
            Ok(Cell {
                id,
                discriminant,
                area: r.value,
                abs_error_estimate: r.abs_error_estimate,
                q,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    One,
    Two,
    Both,
}

pub fn render(cells: &[Cell], which: Which, with_factored: bool) -> Table {
    let mut header = vec!["n", "family"];
    if which != Which::Two {
        header.push("discriminant");
        if with_factored {
            header.push("factored");
        }
        header.push("area");
    }
    if which != Which::One {
        header.push("q");
    }
    let reals: Vec<&str> = header
        .iter()
        .copied()
        .filter(|h| *h == "area" || *h == "q")
        .collect();
    let mut t = Table::new(&header).reals(&reals).counts(&["n"]);
    for c in cells {
        let mut row = vec![c.id.n().to_string(), c.id.tag().to_string()];
        if which != Which::Two {
            row.push(c.discriminant.to_string());
            if with_factored {
                row.push(factored(&c.discriminant));
            }
            row.push(fmt_real(c.area));
        }
        if which != Which::One {
            row.push(fmt_real(c.q));
        }
        t.rows.push(row);
    }
    t
}
