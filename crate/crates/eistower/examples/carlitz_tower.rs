//! The Carlitz module tower over F_r[Y]: additive polynomials, the
//! Eisenstein polynomials Psi_{f^n}, the uniformizers varpi_n and their
//! relative minimal polynomials.
//!
//! Run with: cargo run --release --example carlitz_tower

use eistower::carlitz::{
    carlitz_poly, compute_varpi, minpoly_rel_ff, psi, verify_car11, CarlitzParams,
    TowerParamsFF, DEFAULT_DIM_CAP,
};
use eistower::fq::FqRing;
use eistower::poly::PolyRing;
use eistower::ring::Ring;

fn main() {
    let fq = FqRing::prime(3).unwrap();
    let zl = PolyRing::new(fq.clone());
    let params = CarlitzParams::new(fq.clone(), zl.gen()).unwrap();

    // P_Y = YX + X^3 and P_{Y^2} = Y^2 X + (Y + Y^3) X^3 + X^9
    for e in [zl.gen(), zl.mul(&zl.gen(), &zl.gen())] {
        let ap = carlitz_poly(&params, &e);
        println!("P_e for e of degree {}: {} X^{{3^k}} terms", e.degree().unwrap(), ap.coeffs.len());
        for (k, c) in ap.coeffs.iter().enumerate() {
            println!("  X^{}: {:?}", 3usize.pow(k as u32), c.coeffs());
        }
    }

    // Psi_{Y^2} = P_{Y^2}/P_Y, Eisenstein at Y with constant term Y
    let field = psi(&params, 2).unwrap();
    println!("\nPsi_{{Y^2}} degree {} (Eisenstein at Y)", field.dim());

    // varpi_2 = -theta_2^{q-1}
    let w2 = compute_varpi(&field).unwrap();
    println!("varpi_2 coords (powers of theta_2): {} nonzero", w2.coeffs().len());

    // closed form of the one-step minimal polynomial for f = Y:
    // mu = -varpi_m + sum_j Y^{q-j} X^j
    for m in [1u32, 2] {
        let report = verify_car11(&params, m, DEFAULT_DIM_CAP).unwrap();
        println!("closed form at m={m}: {}", if report.passed() { "matches" } else { "MISMATCH" });
    }

    // a two-step relation: mu_{varpi_3, E_1} of degree q^2 = 9
    let rel = minpoly_rel_ff(&params, TowerParamsFF::new(1, 2).unwrap()).unwrap();
    println!("\nmu_{{varpi_3, E_1}} coefficients (elements of F_3(Y)):");
    for (j, c) in rel.coeffs.iter().enumerate() {
        let desc = if c.is_zero() {
            "0".to_string()
        } else {
            format!("{:?}", c.coeffs()[0].num.coeffs())
        };
        println!("  X^{j}: {desc}");
    }
}
