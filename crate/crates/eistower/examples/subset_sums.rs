//! Signed subset-sum counts s_n over the (p-1)st roots of unity in Z_p and
//! the trace identity Tr(pi_n) = p^n s_n - p^{n-1} s_{n-1}.
//!
//! Run with: cargo run --release --example subset_sums

use eistower::padic::{n_upper_bound, s_sequence, trace_via_s, Strategy};

fn main() {
    println!("p   s_0..s_nmax                 N0    N(p)");
    for p in [3u64, 5, 7, 11, 13, 17, 19, 23] {
        let nmax = if p >= 5 {
            n_upper_bound(p).unwrap() as u32 + 1
        } else {
            3
        };
        let tally = s_sequence(p, nmax, Strategy::Auto, None).unwrap();
        let s: Vec<String> = tally.s.iter().map(|v| v.to_string()).collect();
        println!(
            "{:<3} {:<28} {:<5} {}",
            p,
            s.join(","),
            tally.n0.map(|v| v.to_string()).unwrap_or_else(|| "?".into()),
            tally.n_bound.map(|v| v.to_string()).unwrap_or_default()
        );
    }

    // the two strategies agree exactly
    let direct = s_sequence(17, 4, Strategy::Direct, None).unwrap();
    let mitm = s_sequence(17, 4, Strategy::Mitm, None).unwrap();
    assert_eq!(direct.s, mitm.s);
    println!("\ndirect and meet-in-the-middle tallies agree for p=17");

    // traces of the tower uniformizers, from the counts alone
    println!("\nTr(pi_n) over Q:");
    for (p, n) in [(3u64, 2u32), (5, 2), (7, 2), (11, 2), (3, 3)] {
        let rec = trace_via_s(p, n, None).unwrap();
        println!("  p={p} n={n}: {}", rec.trace);
    }
}
