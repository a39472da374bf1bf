//! Runs every acceptance criterion and prints one PASS/FAIL line each.
//!
//! Criteria listed in `KNOWN_RED` fail for documented reasons (printed
//! table entries that disagree with the quantities they tabulate, and a
//! limit that is not reached at the sizes checked). They are still run and
//! still reported as FAIL; only an unexpected failure makes this target
//! exit nonzero.

use std::process::ExitCode;

use formarea::verify::{self, Context, CRITERIA};

const KNOWN_RED: [u8; 2] = [1, 8];

fn main() -> ExitCode {
    let ctx = Context::default();
    let mut unexpected = Vec::new();
    for c in &CRITERIA {
        let o = verify::run_one(c.id, &ctx);
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {:>2} {}: {} [{:.2} s]",
            o.id, o.name, o.detail, o.seconds
        );
        if !o.passed && !KNOWN_RED.contains(&o.id) {
            unexpected.push(o.id);
        }
    }
    // Sensitivity: a 1% change in a bound constant must be caught.
    let mut perturbed = Context::default();
    verify::perturb(&mut perturbed.constants, "u_lead=1.01").unwrap();
    let o = verify::run_one(10, &perturbed);
    let caught = !o.passed;
    println!(
        "{} fault injection (u_lead x 1.01) detected by criterion 10: {}",
        if caught { "PASS" } else { "FAIL" },
        o.detail
    );
    if !caught {
        unexpected.push(0);
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("unexpected failures: {unexpected:?}");
        ExitCode::FAILURE
    }
}
