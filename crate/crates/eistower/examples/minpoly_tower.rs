//! Computes relative minimal polynomials of the cyclotomic tower
//! uniformizers and checks the coefficient valuation bounds.
//!
//! Run with: cargo run --release --example minpoly_tower

use eistower::pitower::{coeff_valuation, minpoly_rel, verify_th11, TowerParams};
use eistower::poly::PolyRing;
use eistower::ring::RatRing;

fn main() {
    let qx = PolyRing::new(RatRing);

    // mu_{pi_2, Q} for p = 3: the minimal polynomial of the degree-3
    // subfield uniformizer of Q(zeta_9)
    let params = TowerParams::new(3, 1, 1).unwrap();
    let rel = minpoly_rel(params).unwrap();
    println!("p=3, m=1, i=1 (pi_2 over Q):");
    for (j, c) in rel.coeffs.iter().enumerate() {
        println!("  X^{j}: {}", qx.coeff(c, 0));
    }

    // p = 5, two steps at once: mu_{pi_3, Q} of degree 25
    let params = TowerParams::new(5, 1, 2).unwrap();
    let rel = minpoly_rel(params).unwrap();
    println!("\np=5, m=1, i=2 (pi_3 over Q), degree {}:", rel.degree());
    for (j, c) in rel.coeffs.iter().enumerate().take(4) {
        println!("  X^{j}: {}", qx.coeff(c, 0));
    }
    println!("  ...");

    // divisibility: p^i | j a_{i,j}, sharpened below the threshold
    println!("\nvaluation bounds for p=5, m=1, i=2:");
    for vr in verify_th11(&rel) {
        println!(
            "  j={:2}  v_5(j a_j) = {}  bound {}  exact={} {}",
            vr.j,
            vr.v,
            vr.bound,
            vr.exact,
            if vr.passed { "ok" } else { "VIOLATED" }
        );
    }

    // a relative step higher up the tower: pi_3 over E_2 for p = 3; the
    // coefficients are now polynomials in pi_2
    let params = TowerParams::new(3, 2, 1).unwrap();
    let rel = minpoly_rel(params).unwrap();
    println!("\np=3, m=2, i=1 (pi_3 over E_2), coefficients in pi_2:");
    for (j, c) in rel.coeffs.iter().enumerate() {
        let coords: Vec<String> = (0..3).map(|k| qx.coeff(c, k).to_string()).collect();
        let v = coeff_valuation(&params, c);
        println!("  X^{j}: [{}]  v_pi = {v}", coords.join(", "));
    }
}
