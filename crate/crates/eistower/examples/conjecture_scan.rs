//! Experimental scan of the base-q digit conditions predicting which
//! coefficients of mu_{varpi_{m+i}, E_m} vanish (f = Y only), and what the
//! valuations of the others are. Verdicts are observations, not theorems.
//!
//! Run with: cargo run --release --example conjecture_scan

use eistower::carlitz::{conjecture_scan, CarlitzParams, TowerParamsFF};
use eistower::fq::FqRing;
use eistower::poly::PolyRing;

fn main() {
    let fq = FqRing::prime(3).unwrap();
    let zl = PolyRing::new(fq.clone());
    let params = CarlitzParams::new(fq, zl.gen()).unwrap();

    for (m, i) in [(1u32, 1u32), (1, 2), (2, 1), (2, 2)] {
        let report = conjecture_scan(&params, TowerParamsFF::new(m, i).unwrap()).unwrap();
        println!(
            "m={m} i={i} ({}): {}/{} verdicts match",
            if report.experimental { "experimental" } else { "proved" },
            report.checks.iter().filter(|c| c.passed).count(),
            report.checks.len()
        );
        for check in &report.checks {
            println!("  {}: {} [{}]", check.label, check.detail, if check.passed { "match" } else { "MISMATCH" });
        }
    }
}
