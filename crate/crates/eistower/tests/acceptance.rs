//! Acceptance gate: one test per criterion, each emitting a single
//! `criterion N: PASS/FAIL` line (visible with `--nocapture`; failures show
//! the line in the panic message as well).

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;

use eistower::carlitz::{self, CarlitzParams, TowerParamsFF};
use eistower::cli::{run, Cli};
use eistower::cyclotomic;
use eistower::error::Error;
use eistower::fq::FqRing;
use eistower::padic::{self, Strategy};
use eistower::pitower::{self, TowerParams};
use eistower::poly::PolyRing;
use eistower::report::Val;
use eistower::ring::{RatRing, Ring};

use clap::Parser;

fn pass(n: u32, msg: &str) {
    println!("criterion {n}: PASS - {msg}");
}

fn fail(n: u32, msg: &str) -> ! {
    println!("criterion {n}: FAIL - {msg}");
    panic!("criterion {n} failed: {msg}");
}

#[test]
fn criterion_01_golden_minimal_polynomial() {
    // (factor, power of 5) per coefficient index j
    let golden: [(i64, u32); 26] = [
        (-5, 0),
        (4, 4),
        (-514, 4),
        (121494, 3),
        (-2832523, 3),
        (185467152, 2),
        (-291561379, 3),
        (287207871, 4),
        (-4603857997, 3),
        (2002848591, 4),
        (-15357724251, 3),
        (685227294, 5),
        (-113846228, 6),
        (1791452496, 4),
        (-4323587013, 3),
        (8064511079, 2),
        (-466901494, 3),
        (4197451, 5),
        (-18252879, 3),
        (12194014, 2),
        (-6175454, 1),
        (92823, 2),
        (-8, 6),
        (182, 2),
        (-4, 2),
        (1, 0),
    ];
    let start = Instant::now();
    let rel = pitower::minpoly_rel(TowerParams::new(5, 1, 2).unwrap()).unwrap();
    let qx = PolyRing::new(RatRing);
    for (j, &(factor, power)) in golden.iter().enumerate() {
        let expected = BigInt::from(factor) * BigInt::from(5).pow(power);
        let got = qx.coeff(rel.coeff(j), 0);
        if !got.denom().is_one() || got.numer() != &expected {
            fail(1, &format!("coefficient of X^{j}: got {got}, expected {expected}"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs() >= 60 {
        fail(1, &format!("runtime {elapsed:?} exceeds 60 s"));
    }
    pass(1, &format!("all 26 coefficients match ({elapsed:?})"));
}

#[test]
fn criterion_02_s_table() {
    let direct_rows: [(u64, &[i64]); 8] = [
        (3, &[0, 1]),
        (5, &[0, 1]),
        (7, &[0, 1]),
        (11, &[0, 1, 3]),
        (13, &[0, 1, 3]),
        (17, &[0, 1, 8, 16]),
        (19, &[0, 1, 10, 12]),
        (23, &[0, 1, 33, 89, 93]),
    ];
    for (p, expected) in direct_rows {
        let start = Instant::now();
        let tally = padic::s_sequence(p, (expected.len() - 1) as u32, Strategy::Direct, None)
            .unwrap();
        let elapsed = start.elapsed();
        if tally.s != expected {
            fail(2, &format!("p={p} direct: got {:?}, expected {expected:?}", tally.s));
        }
        if elapsed.as_secs() >= 1 {
            fail(2, &format!("p={p} took {elapsed:?}, budget 1 s"));
        }
    }
    let mitm_rows: [(u64, &[i64]); 3] = [
        (29, &[0, 1, 377, 571, 567]),
        (31, &[0, 1, 315, 271, 259]),
        (37, &[0, 1, 107, 940, 1296]),
    ];
    for (p, expected) in mitm_rows {
        let start = Instant::now();
        let tally =
            padic::s_sequence(p, (expected.len() - 1) as u32, Strategy::Mitm, None).unwrap();
        let elapsed = start.elapsed();
        if tally.s != expected {
            fail(2, &format!("p={p} mitm: got {:?}, expected {expected:?}", tally.s));
        }
        if p == 37 && elapsed.as_secs() >= 300 {
            fail(2, &format!("p=37 took {elapsed:?}, budget 5 min"));
        }
    }
    // stretch row, non-gating
    let stretch = padic::s_sequence(41, 6, Strategy::Mitm, None)
        .map(|t| t.s == vec![0, 1, 6621, 51693, 18286, 20186, 20250])
        .unwrap_or(false);
    pass(
        2,
        &format!("11 table rows match exactly (stretch p=41: {})", if stretch { "match" } else { "not reproduced (non-gating)" }),
    );
}

#[test]
fn criterion_03_n_upper_bound_table() {
    let table: [(u64, u64); 45] = [
        (5, 1), (7, 1), (11, 3), (13, 3), (17, 5), (19, 4), (23, 7), (29, 8),
        (31, 6), (37, 9), (41, 12), (43, 9), (47, 16), (53, 18), (59, 21),
        (61, 12), (67, 15), (71, 18), (73, 18), (79, 18), (83, 30), (89, 30),
        (97, 24), (101, 31), (103, 25), (107, 40), (109, 28), (113, 37),
        (127, 28), (131, 37), (137, 50), (139, 34), (149, 56), (151, 31),
        (157, 38), (163, 42), (167, 64), (173, 66), (179, 69), (181, 38),
        (191, 57), (193, 51), (197, 66), (199, 48), (211, 39),
    ];
    let start = Instant::now();
    let mut mismatches = vec![];
    for (p, expected) in table {
        let got = padic::n_upper_bound(p).unwrap();
        if got != expected {
            mismatches.push(format!("p={p}: computed {got}, table says {expected}"));
        }
    }
    let elapsed = start.elapsed();
    if !mismatches.is_empty() {
        // The certified interval evaluation of floor(phi(p-1)(1 - log pi /
        // log p) + 1) gives 38 at p = 211 (the value is 38.733...), while
        // the published table row says 39; every other row agrees with the
        // floor. The computed value is kept; the row is reported as a
        // discrepancy rather than reproduced.
        fail(3, &format!("{} of 45 rows disagree: {}", mismatches.len(), mismatches.join("; ")));
    }
    if elapsed.as_secs() >= 1 {
        fail(3, &format!("runtime {elapsed:?} exceeds 1 s"));
    }
    pass(3, "all 45 rows match");
}

#[test]
fn criterion_04_trace_identity() {
    for (p, n) in [(3u64, 2u32), (3, 3), (5, 2), (7, 2)] {
        let from_minpoly = pitower::trace_from_minpoly(p, n, 400).unwrap();
        let from_s = padic::trace_via_s(p, n, None).unwrap().trace;
        if !from_minpoly.denom().is_one() || from_minpoly.numer() != &from_s {
            fail(4, &format!("(p,n)=({p},{n}): minpoly side {from_minpoly}, s side {from_s}"));
        }
    }
    for (p, expected) in [(3u64, 6i64), (5, 20), (7, 42)] {
        let got = padic::trace_via_s(p, 2, None).unwrap().trace;
        if got != BigInt::from(expected) {
            fail(4, &format!("Tr(pi_2) for p={p}: got {got}, expected {expected}"));
        }
    }
    let got = padic::trace_via_s(11, 2, None).unwrap().trace;
    if got != BigInt::from(352) {
        fail(4, &format!("Tr(pi_2) for p=11: got {got}, expected 352"));
    }
    pass(4, "minimal-polynomial and subset-sum traces agree, golden values match");
}

#[test]
fn criterion_05_congruence_suites() {
    let mut grid: Vec<(u64, u32)> = vec![];
    for p in [3u64, 5, 7] {
        for n in [2u32, 3] {
            grid.push((p, n));
        }
    }
    grid.push((3, 4));
    for (p, n) in grid {
        let r1 = cyclotomic::check_congruence_i(p, n).unwrap();
        if !r1.passed() {
            fail(5, &format!("congruence (I) p={p} n={n}: {:?}", r1.failures()));
        }
        let r2 = cyclotomic::check_congruence_ii(p, n).unwrap();
        if !r2.passed() {
            fail(5, &format!("congruence (II) p={p} n={n}: {:?}", r2.failures()));
        }
    }
    for p in [3u64, 5] {
        let r = cyclotomic::check_binomial_congruences(p, 10, 2, 2).unwrap();
        if !r.passed() {
            fail(5, &format!("binomial congruences p={p}: {:?}", r.failures()));
        }
    }
    pass(5, "congruence suites (I), (II) and binomial all pass");
}

fn dim_num(p: u64, m: u32, i: u32) -> u64 {
    p.pow(m + i - 1) * (p - 1)
}

#[test]
fn criterion_06_theorem_suites() {
    let mut ran = 0;
    let mut capped = 0;
    for p in [3u64, 5, 7] {
        for m in [1u32, 2] {
            for i in [1u32, 2] {
                let params = TowerParams::with_cap(p, m, i, 400).unwrap();
                if dim_num(p, m, i) > 400 {
                    match pitower::minpoly_rel(params) {
                        Err(Error::CapExceeded(_)) => capped += 1,
                        other => fail(6, &format!("p={p} m={m} i={i}: expected cap refusal, got {other:?}")),
                    }
                    continue;
                }
                let rel = pitower::minpoly_rel(params).unwrap();
                let r = pitower::verify_th11_report(&rel);
                if !r.passed() {
                    fail(6, &format!("th11 p={p} m={m} i={i}: {:?}", r.failures()));
                }
                let r = pitower::verify_cor_diff(&rel);
                if !r.passed() {
                    fail(6, &format!("cordiff p={p} m={m} i={i}: {:?}", r.failures()));
                }
                if dim_num(p, m, i + 1) <= 400 {
                    let r = pitower::verify_th11_cong(params, 1).unwrap();
                    if !r.passed() {
                        fail(6, &format!("th11-cong p={p} m={m} i={i}: {:?}", r.failures()));
                    }
                }
                ran += 1;
            }
        }
        for n in [2u32, 3, 4] {
            if dim_num(p, 1, n - 1) > 400 {
                continue;
            }
            let r = pitower::verify_lem10(p, n, 400).unwrap();
            if !r.passed() {
                fail(6, &format!("lem10 p={p} n={n}: {:?}", r.failures()));
            }
            let r = pitower::verify_eis13(p, n, 400).unwrap();
            if !r.passed() {
                fail(6, &format!("eis13 p={p} n={n}: {:?}", r.failures()));
            }
        }
    }
    for p in [3u64, 19] {
        let (report, non_exact) = pitower::exactness_scan(p, 1, 400).unwrap();
        if !report.passed() || non_exact != 0 {
            fail(6, &format!("exactness scan p={p}: {non_exact} non-exact indices"));
        }
    }
    pass(6, &format!("theorem suites pass on {ran} grid points ({capped} cap refusals), exactness scans clean"));
}

fn params_f3_y() -> CarlitzParams {
    let fq = FqRing::prime(3).unwrap();
    let zl = PolyRing::new(fq.clone());
    CarlitzParams::new(fq, zl.gen()).unwrap()
}

fn params_f3_y2p1() -> CarlitzParams {
    let fq = FqRing::prime(3).unwrap();
    let zl = PolyRing::new(fq.clone());
    let f = zl.from_coeffs(vec![vec![1], vec![], vec![1]]);
    CarlitzParams::new(fq, f).unwrap()
}

fn poly_y(params: &CarlitzParams, coeffs: &[i64]) -> carlitz::PolyY {
    let zl = params.zl();
    zl.from_coeffs(coeffs.iter().map(|&c| params.fq.from_i64(c)).collect())
}

#[test]
fn criterion_07_function_field_golden() {
    let start = Instant::now();
    let params = params_f3_y();
    for m in [1u32, 2] {
        let r = carlitz::verify_car11(&params, m, 400).unwrap();
        if !r.passed() {
            fail(7, &format!("closed form at m={m}: {:?}", r.failures()));
        }
    }

    // varpi_2 for r=3, f=Y^2+1, against the published table of theta_2
    // coefficients (all other coefficients zero)
    let params2 = params_f3_y2p1();
    let field = carlitz::psi(&params2, 2).unwrap();
    let w2 = carlitz::compute_varpi(&field).unwrap();
    let expected: &[(usize, &[i64])] = &[
        (60, &[1]),
        (58, &[0, -1]),
        (56, &[0, 0, 1]),
        (42, &[0, -1, 0, -1, 0, 0, 0, 0, 0, -1]),
        (40, &[1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1]),
        (38, &[0, 1, 0, -1, 0, -1, 0, 0, 0, 0, 0, -1]),
        (36, &[0, 0, -1, 0, -1, 0, -1]),
        (34, &[0, 1, 0, 1, 0, 1, 0, 1]),
        (32, &[-1, 0, -1, 0, 1, 0, -1, 0, -1]),
        (30, &[0, -1, 0, 1, 0, -1]),
        (24, &[0, 0, 1, 0, -1, 0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 0, 0, 1]),
        (22, &[0, 1, 0, 0, 0, 1, 0, -1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, -1]),
        (20, &[1, 0, 1, 0, -1, 0, -1, 0, 1, 0, 1, 0, -1, 0, -1, 0, 0, 0, 0, 0, 1]),
        (18, &[0, 0, 0, -1, 0, 1, 0, 1, 0, -1, 0, -1, 0, -1, 0, -1]),
        (16, &[0, 0, -1, 0, 0, 0, 0, 0, -1, 0, -1, 0, 1, 0, 1, 0, 1]),
        (14, &[0, 1, 0, -1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 1, 0, -1, 0, -1]),
        (12, &[1, 0, 1, 0, -1, 0, -1, 0, -1, 0, 1, 0, -1, 0, -1]),
        (10, &[0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 1, 0, -1]),
        (8, &[0, 0, 0, 0, 1, 0, 1, 0, 0, 0, -1, 0, -1, 0, 1]),
        (6, &[0, 1, 0, 1, 0, 1, 0, -1, 0, 0, 0, -1]),
        (4, &[1, 0, 1, 0, 0, 0, 1, 0, 1]),
    ];
    let ql = params2.ql();
    let qlx = PolyRing::new(ql.clone());
    let mut want = qlx.zero();
    for (exp, coeffs) in expected {
        let c = ql.from_base(poly_y(&params2, coeffs));
        want = qlx.add(&want, &qlx.monomial(c, *exp));
    }
    if w2 != want {
        fail(7, "varpi_2 for r=3, f=Y^2+1 differs from the published expression");
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs() >= 120 {
        fail(7, &format!("runtime {elapsed:?} exceeds 120 s"));
    }
    pass(7, &format!("closed form (m=1,2) and the full varpi_2 table match ({elapsed:?})"));
}

#[test]
fn criterion_08_function_field_suites() {
    let params = params_f3_y();
    let mut capped = 0;
    for m in [1u32, 2] {
        for i in [1u32, 2] {
            let tower = TowerParamsFF::new(m, i).unwrap();
            let rel = carlitz::minpoly_rel_ff(&params, tower).unwrap();
            let r = carlitz::verify_th11a(&rel).unwrap();
            if !r.passed() {
                fail(8, &format!("th11a f=Y m={m} i={i}: {:?}", r.failures()));
            }
            let r = carlitz::verify_th11a_cong(&params, tower, 1).unwrap();
            if !r.passed() {
                fail(8, &format!("th11a-cong f=Y m={m} i={i}: {:?}", r.failures()));
            }
            let r = carlitz::verify_cor_diff2(&rel).unwrap();
            if !r.passed() {
                fail(8, &format!("cordiff2 f=Y m={m} i={i}: {:?}", r.failures()));
            }
            let r = carlitz::verify_cor_bu(&params, tower).unwrap();
            if !r.passed() {
                fail(8, &format!("corbu f=Y m={m} i={i}: {:?}", r.failures()));
            }
        }
    }
    for n in [2u32, 3] {
        let r = carlitz::verify_lem10a(&params, n, 400).unwrap();
        if !r.passed() {
            fail(8, &format!("lem10a f=Y n={n}: {:?}", r.failures()));
        }
    }

    let params2 = params_f3_y2p1();
    let tower = TowerParamsFF::new(1, 1).unwrap();
    let rel = carlitz::minpoly_rel_ff(&params2, tower).unwrap();
    let r = carlitz::verify_th11a(&rel).unwrap();
    if !r.passed() {
        fail(8, &format!("th11a f=Y^2+1: {:?}", r.failures()));
    }
    let r = carlitz::verify_cor_diff2(&rel).unwrap();
    if !r.passed() {
        fail(8, &format!("cordiff2 f=Y^2+1: {:?}", r.failures()));
    }
    let r = carlitz::verify_lem10a(&params2, 2, 400).unwrap();
    if !r.passed() {
        fail(8, &format!("lem10a f=Y^2+1: {:?}", r.failures()));
    }
    // th11a-cong at q=9 needs the i=2 relation of ambient dimension 648,
    // beyond the 400 cap: the refusal is asserted instead
    match carlitz::verify_th11a_cong(&params2, tower, 1) {
        Err(Error::CapExceeded(_)) => capped += 1,
        other => fail(8, &format!("th11a-cong f=Y^2+1: expected cap refusal, got {other:?}")),
    }

    for (p, n) in [(true, 1u32), (true, 2), (false, 1)] {
        let pr = if p { &params } else { &params2 };
        let r = carlitz::discriminant_check(pr, n).unwrap();
        if !r.passed() {
            fail(8, &format!("disc f={} n={n}: {:?}", if p { "Y" } else { "Y^2+1" }, r.failures()));
        }
    }
    pass(8, &format!("function-field suites pass ({capped} cap refusal asserted)"));
}

#[test]
fn criterion_09_conjecture_scan() {
    let params = params_f3_y();
    let q = params.q;
    for m in [1u32, 2] {
        for i in [1u32, 2] {
            let report =
                carlitz::conjecture_scan(&params, TowerParamsFF::new(m, i).unwrap()).unwrap();
            if !report.experimental {
                fail(9, "scan output is not labeled experimental");
            }
            if !report.passed() {
                fail(9, &format!("m={m} i={i}: {:?}", report.failures()));
            }
            // consistency points j* = q^i - (q^i - q^beta)/(q-1)
            for beta in 0..i {
                let jstar = q.pow(i) - (q.pow(i) - q.pow(beta)) / (q - 1);
                let label = format!("j={jstar}");
                let found = report
                    .checks
                    .iter()
                    .find(|c| c.label == label)
                    .unwrap_or_else(|| panic!("missing scan entry {label}"));
                if !found.passed {
                    fail(9, &format!("consistency point {label} at m={m} i={i} mismatches"));
                }
            }
        }
    }
    pass(9, "all verdicts match on the m,i in {1,2} grid; output labeled experimental");
}

fn run_to_file(args: &[&str], path: &std::path::Path) -> i32 {
    let mut argv = vec!["eistower"];
    argv.extend_from_slice(args);
    argv.push("--output");
    let path_str = path.to_str().unwrap();
    argv.push(path_str);
    let cli = Cli::try_parse_from(argv).unwrap();
    run(&cli)
}

#[test]
fn criterion_10_determinism() {
    let commands: Vec<Vec<&str>> = vec![
        vec!["strace", "--p", "13", "--nmax", "4", "--strategy", "direct"],
        vec!["strace", "--p", "29", "--nmax", "3", "--strategy", "mitm"],
        vec!["verify", "th11", "--p", "5", "--m", "1", "--i", "1", "--format", "json"],
        vec!["minpoly-num", "--p", "3", "--m", "1", "--i", "2"],
        vec!["nbound", "--pmax", "23"],
    ];
    let dir = std::env::temp_dir();
    for (k, cmd) in commands.iter().enumerate() {
        let p1 = dir.join(format!("eistower-acc-{k}-w1.out"));
        let p4 = dir.join(format!("eistower-acc-{k}-w4.out"));
        let mut c1 = cmd.clone();
        c1.extend_from_slice(&["--workers", "1"]);
        let mut c4 = cmd.clone();
        c4.extend_from_slice(&["--workers", "4"]);
        let e1 = run_to_file(&c1, &p1);
        let e4 = run_to_file(&c4, &p4);
        let b1 = std::fs::read(&p1).unwrap();
        let b4 = std::fs::read(&p4).unwrap();
        let _ = std::fs::remove_file(&p1);
        let _ = std::fs::remove_file(&p4);
        if e1 != e4 || b1 != b4 {
            fail(10, &format!("command {cmd:?} differs between 1 and 4 workers"));
        }
    }
    pass(10, "byte-identical output for 1 vs 4 workers on all sampled commands");
}

#[test]
fn criterion_11_oracle_equivalence() {
    for p in [11u64, 13, 17, 19, 23] {
        let direct = padic::s_sequence(p, 4, Strategy::Direct, None).unwrap();
        let mitm = padic::s_sequence(p, 4, Strategy::Mitm, None).unwrap();
        if direct.s != mitm.s {
            fail(11, &format!("p={p}: direct {:?} vs mitm {:?}", direct.s, mitm.s));
        }
    }
    for p in [5u64, 7, 13] {
        let (got, want, ok) = padic::max_sum_modulus_check(p).unwrap();
        if !ok {
            fail(11, &format!("max-modulus p={p}: {got} vs 1/sin = {want}"));
        }
    }
    pass(11, "direct = mitm for p in {11..23}; max-modulus identity holds for p in {5,7,13}");
}

#[test]
fn valuation_spot_check_from_example_text() {
    // after the golden polynomial: 5^1 exactly divides a_{2,20} and 5^2
    // exactly divides a_{2,19}
    let rel = pitower::minpoly_rel(TowerParams::new(5, 1, 2).unwrap()).unwrap();
    let qx = PolyRing::new(RatRing);
    let params = TowerParams::new(5, 1, 2).unwrap();
    let v20 = pitower::coeff_valuation(&params, rel.coeff(20));
    let v19 = pitower::coeff_valuation(&params, rel.coeff(19));
    assert_eq!(v20, Val::Finite(1));
    assert_eq!(v19, Val::Finite(2));
    let _ = qx;
}
