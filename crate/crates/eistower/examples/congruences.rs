//! Coefficient congruences of shifted cyclotomic polynomials and the
//! binomial congruences underlying them.
//!
//! Run with: cargo run --release --example congruences

use eistower::cyclotomic::{
    check_binomial_congruences, check_congruence_i, check_congruence_ii, phi_shifted,
};

fn main() {
    // Phi_{p^n}(X+1) is Eisenstein; print the small cases
    for (p, n) in [(3u64, 1u32), (3, 2)] {
        let phi = phi_shifted(p, n).unwrap();
        println!("Phi_{{{p}^{n}}}(X+1) coefficients: {:?}", phi.coeffs());
    }

    // the congruences between coefficients of consecutive levels
    for (p, n) in [(3u64, 2u32), (3, 3), (5, 2), (7, 2)] {
        let r1 = check_congruence_i(p, n).unwrap();
        let r2 = check_congruence_ii(p, n).unwrap();
        println!(
            "p={p} n={n}: level congruence {}, difference congruence {}",
            if r1.passed() { "ok" } else { "FAILED" },
            if r2.passed() { "ok" } else { "FAILED" }
        );
    }

    // (X+pY)^k = X^k + k X^{k-1} pY modulo k[p] p^2 Y^2, and the iterated
    // freshman's dream modulo p^{alpha+1}
    for p in [3u64, 5] {
        let report = check_binomial_congruences(p, 10, 2, 2).unwrap();
        println!(
            "binomial congruences p={p}: {} checks, {} failed",
            report.checks.len(),
            report.failures().len()
        );
    }
}
