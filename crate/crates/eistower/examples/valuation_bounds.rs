//! Certified upper bounds N(p) >= N_0(p) for the stationarity index of the
//! subset-sum counts, computed with rational interval arithmetic: the floor
//! of phi(p-1)(1 - log pi / log p) + 1 is pinned by escalating precision.
//!
//! Run with: cargo run --release --example valuation_bounds

use eistower::padic::{is_prime_u64, n_upper_bound};

fn main() {
    println!("p    N(p)");
    for p in 5..=211u64 {
        if is_prime_u64(p) {
            println!("{:<4} {}", p, n_upper_bound(p).unwrap());
        }
    }
}
