//! Command-line frontend: every verifier and computation behind subcommands
//! with machine-readable output and scriptable exit codes.
//!
//! Exit codes: 0 pass, 1 usage error, 2 resource-cap refusal,
//! 3 verification failure, 4 internal invariant violation.

use std::io::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::One;
use serde::Serialize;

use crate::carlitz::{self, CarlitzParams, TowerParamsFF};
use crate::cyclotomic;
use crate::error::Error;
use crate::fq::FqRing;
use crate::padic::{self, Strategy};
use crate::pitower::{self, TowerParams};
use crate::poly::PolyRing;
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "eistower", version, about = "Eisenstein tower verifiers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output file; stdout when omitted
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Worker threads for subset enumeration (default: EISTOWER_WORKERS or
    /// the available parallelism)
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    /// Ambient dimension cap for minimal-polynomial solves
    #[arg(long, global = true, default_value_t = 400)]
    pub dim_cap: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Relative minimal polynomial of pi_{m+i} over E_m as a JSON document
    MinpolyNum {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        i: u32,
    },
    /// Run a verification suite
    Verify {
        /// th11 | th11-cong | cordiff | lem10 | eis13 | cong-I | cong-II |
        /// binom | exactness | th11a | th11a-cong | cordiff2 | lem10a |
        /// car11 | corbu | conj-car12 | disc
        suite: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        i: Option<u32>,
        #[arg(long)]
        beta: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        r: Option<u64>,
        /// f as comma-separated F_r coefficients low-to-high ("1,0,1" is
        /// Y^2+1); the plain variable may be written "Y"
        #[arg(long)]
        f: Option<String>,
        #[arg(long, default_value_t = 10)]
        kmax: u64,
        #[arg(long, default_value_t = 2)]
        alpha_max: u32,
        #[arg(long, default_value_t = 2)]
        beta_max: u32,
    },
    /// s_n table as CSV
    Strace {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        nmax: u32,
        #[arg(long, default_value = "auto")]
        strategy: String,
    },
    /// Certified upper bounds N(p) for primes 5 <= p <= pmax as CSV
    Nbound {
        #[arg(long)]
        pmax: u64,
    },
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parameter(_) => 1,
        Error::CapExceeded(_) => 2,
        Error::InexactDivision
        | Error::Inconsistent
        | Error::Underdetermined
        | Error::Internal(_) => 4,
    }
}

#[derive(Serialize)]
struct MinpolyDoc {
    p: u64,
    m: u32,
    i: u32,
    coefficients: Vec<MinpolyCoeff>,
}

#[derive(Serialize)]
struct MinpolyCoeff {
    j: usize,
    /// decimal strings, index = power of pi_m ("num/den" for the rare
    /// p-integral non-integer coordinate)
    base_coeffs: Vec<String>,
}

fn minpoly_doc(p: u64, m: u32, i: u32, dim_cap: usize) -> Result<MinpolyDoc, Error> {
    let rel = pitower::minpoly_rel(TowerParams::with_cap(p, m, i, dim_cap)?)?;
    let coefficients = rel
        .coeffs
        .iter()
        .enumerate()
        .map(|(j, piece)| MinpolyCoeff {
            j,
            base_coeffs: piece
                .coeffs()
                .iter()
                .map(|c| {
                    if c.denom().is_one() {
                        c.numer().to_string()
                    } else {
                        format!("{}/{}", c.numer(), c.denom())
                    }
                })
                .collect(),
        })
        .collect();
    Ok(MinpolyDoc {
        p,
        m,
        i,
        coefficients,
    })
}

fn parse_f(params_r: u64, f: &str) -> Result<(FqRing, CarlitzParams), Error> {
    // r must be a prime power p^rho
    let mut p = 0u64;
    let mut rho = 0u32;
    for cand in 2..=params_r {
        if padic::is_prime_u64(cand) {
            let mut acc = cand;
            let mut e = 1;
            while acc < params_r {
                acc = acc.saturating_mul(cand);
                e += 1;
            }
            if acc == params_r {
                p = cand;
                rho = e;
                break;
            }
        }
    }
    if p == 0 {
        return Err(Error::Parameter(format!("r = {params_r} is not a prime power")));
    }
    let fq = FqRing::default_extension(p, rho)?;
    let zl = PolyRing::new(fq.clone());
    let poly = if f == "Y" {
        zl.gen()
    } else {
        let coeffs: Result<Vec<u64>, _> = f.split(',').map(|s| s.trim().parse::<u64>()).collect();
        let coeffs =
            coeffs.map_err(|_| Error::Parameter(format!("cannot parse f = {f:?}")))?;
        // each integer encodes an F_r element by its base-p digits
        zl.from_coeffs(
            coeffs
                .into_iter()
                .map(|v| {
                    let mut digits = vec![];
                    let mut v = v;
                    while v > 0 {
                        digits.push(v % p);
                        v /= p;
                    }
                    digits
                })
                .collect(),
        )
    };
    let params = CarlitzParams::new(fq.clone(), poly)?;
    Ok((fq, params))
}

fn need<T: Copy>(opt: Option<T>, name: &str) -> Result<T, Error> {
    opt.ok_or_else(|| Error::Parameter(format!("missing required flag --{name}")))
}

fn run_verify(cli: &Cli) -> Result<Report, Error> {
    let Command::Verify {
        suite,
        p,
        m,
        i,
        beta,
        n,
        r,
        f,
        kmax,
        alpha_max,
        beta_max,
    } = &cli.command
    else {
        unreachable!()
    };
    let cap = cli.dim_cap;
    let ff = || -> Result<CarlitzParams, Error> {
        let r = need(*r, "r")?;
        let f = f.clone().unwrap_or_else(|| "Y".into());
        Ok(parse_f(r, &f)?.1)
    };
    match suite.as_str() {
        "th11" => {
            let params = TowerParams::with_cap(need(*p, "p")?, need(*m, "m")?, need(*i, "i")?, cap)?;
            let rel = pitower::minpoly_rel(params)?;
            Ok(pitower::verify_th11_report(&rel))
        }
        "th11-cong" => {
            let params = TowerParams::with_cap(need(*p, "p")?, need(*m, "m")?, need(*i, "i")?, cap)?;
            pitower::verify_th11_cong(params, beta.unwrap_or(1))
        }
        "cordiff" => {
            let params = TowerParams::with_cap(need(*p, "p")?, need(*m, "m")?, need(*i, "i")?, cap)?;
            let rel = pitower::minpoly_rel(params)?;
            Ok(pitower::verify_cor_diff(&rel))
        }
        "lem10" => pitower::verify_lem10(need(*p, "p")?, need(*n, "n")?, cap),
        "eis13" => pitower::verify_eis13(need(*p, "p")?, need(*n, "n")?, cap),
        "cong-I" => cyclotomic::check_congruence_i(need(*p, "p")?, need(*n, "n")?),
        "cong-II" => cyclotomic::check_congruence_ii(need(*p, "p")?, need(*n, "n")?),
        "binom" => cyclotomic::check_binomial_congruences(need(*p, "p")?, *kmax, *alpha_max, *beta_max),
        "exactness" => {
            let (report, _) = pitower::exactness_scan(need(*p, "p")?, need(*i, "i")?, cap)?;
            Ok(report)
        }
        "th11a" => {
            let params = ff()?;
            let rel = carlitz::minpoly_rel_ff(
                &params,
                TowerParamsFF::with_cap(need(*m, "m")?, need(*i, "i")?, cap)?,
            )?;
            carlitz::verify_th11a(&rel)
        }
        "th11a-cong" => {
            let params = ff()?;
            carlitz::verify_th11a_cong(
                &params,
                TowerParamsFF::with_cap(need(*m, "m")?, need(*i, "i")?, cap)?,
                beta.unwrap_or(1),
            )
        }
        "cordiff2" => {
            let params = ff()?;
            let rel = carlitz::minpoly_rel_ff(
                &params,
                TowerParamsFF::with_cap(need(*m, "m")?, need(*i, "i")?, cap)?,
            )?;
            carlitz::verify_cor_diff2(&rel)
        }
        "lem10a" => carlitz::verify_lem10a(&ff()?, need(*n, "n")?, cap),
        "car11" => carlitz::verify_car11(&ff()?, need(*m, "m")?, cap),
        "corbu" => carlitz::verify_cor_bu(
            &ff()?,
            TowerParamsFF::with_cap(need(*m, "m")?, need(*i, "i")?, cap)?,
        ),
        "conj-car12" => carlitz::conjecture_scan(
            &ff()?,
            TowerParamsFF::with_cap(need(*m, "m")?, need(*i, "i")?, cap)?,
        ),
        "disc" => carlitz::discriminant_check(&ff()?, need(*n, "n")?),
        other => Err(Error::Parameter(format!("unknown suite {other:?}"))),
    }
}

fn render_report(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("serializable");
            s.push('\n');
            s
        }
        _ => {
            let mut out = String::new();
            out.push_str(&format!(
                "suite: {}{}\n",
                report.suite,
                if report.experimental {
                    " (experimental)"
                } else {
                    ""
                }
            ));
            for check in &report.checks {
                out.push_str(&format!(
                    "{} {} {}\n",
                    if check.passed { "PASS" } else { "FAIL" },
                    check.label,
                    check.detail
                ));
            }
            let failed = report.failures().len();
            out.push_str(&format!(
                "{}: {} checks, {} failed\n",
                if failed == 0 { "ok" } else { "FAILED" },
                report.checks.len(),
                failed
            ));
            out
        }
    }
}

fn strace_csv(p: u64, nmax: u32, strategy: &str, workers: Option<usize>) -> Result<String, Error> {
    let strategy: Strategy = strategy.parse()?;
    let tally = padic::s_sequence(p, nmax, strategy, workers)?;
    let mut out = String::from("p,n,s_n,N0_reached,N_upper\n");
    let nb = tally
        .n_bound
        .map(|b| b.to_string())
        .unwrap_or_default();
    for (n, s) in tally.s.iter().enumerate() {
        let reached = tally
            .n0
            .map(|n0| n as u32 >= n0)
            .unwrap_or(false);
        out.push_str(&format!("{p},{n},{s},{reached},{nb}\n"));
    }
    Ok(out)
}

fn nbound_csv(pmax: u64) -> Result<String, Error> {
    let mut out = String::from("p,n,s_n,N0_reached,N_upper\n");
    for p in 5..=pmax {
        if padic::is_prime_u64(p) {
            let b = padic::n_upper_bound(p)?;
            out.push_str(&format!("{p},,,,{b}\n"));
        }
    }
    Ok(out)
}

fn emit(cli: &Cli, content: &str) -> Result<(), Error> {
    match &cli.output {
        Some(path) => {
            let mut file = std::fs::File::create(path)
                .map_err(|e| Error::Parameter(format!("cannot open {}: {e}", path.display())))?;
            file.write_all(content.as_bytes())
                .map_err(|e| Error::Internal(format!("write failed: {e}")))?;
        }
        None => {
            print!("{content}");
        }
    }
    Ok(())
}

/// Dispatches a parsed command line; returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let result: Result<(String, bool), Error> = match &cli.command {
        Command::MinpolyNum { p, m, i } => minpoly_doc(*p, *m, *i, cli.dim_cap).map(|doc| {
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            (s, true)
        }),
        Command::Verify { .. } => {
            run_verify(cli).map(|report| (render_report(&report, cli.format), report.passed()))
        }
        Command::Strace {
            p,
            nmax,
            strategy,
        } => strace_csv(*p, *nmax, strategy, cli.workers).map(|s| (s, true)),
        Command::Nbound { pmax } => nbound_csv(*pmax).map(|s| (s, true)),
    };
    match result {
        Ok((content, passed)) => {
            if emit(cli, &content).is_err() {
                return 4;
            }
            if passed {
                0
            } else {
                3
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            exit_code(&err)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("eistower").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn minpoly_doc_golden() {
        let doc = minpoly_doc(3, 1, 1, 400).unwrap();
        let flat: Vec<&str> = doc
            .coefficients
            .iter()
            .map(|c| c.base_coeffs[0].as_str())
            .collect();
        assert_eq!(flat, vec!["-3", "9", "-6", "1"]);
    }

    #[test]
    fn minpoly_doc_round_trips() {
        let doc = minpoly_doc(3, 1, 2, 400).unwrap();
        let json = serde_json::to_string(&doc).unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        let coeffs = parsed["coefficients"].as_array().unwrap();
        assert_eq!(coeffs.len(), 10);
        // reconstruct and compare against the original polynomial
        let rel =
            pitower::minpoly_rel(TowerParams::new(3, 1, 2).unwrap()).unwrap();
        for (j, c) in coeffs.iter().enumerate() {
            let strings: Vec<String> = c["base_coeffs"]
                .as_array()
                .unwrap()
                .iter()
                .map(|v| v.as_str().unwrap().to_string())
                .collect();
            for (k, s) in strings.iter().enumerate() {
                let expect = crate::poly::PolyRing::new(crate::ring::RatRing)
                    .coeff(rel.coeff(j), k);
                assert_eq!(s.parse::<num_bigint::BigInt>().unwrap(), expect.numer().clone());
                assert!(expect.denom().is_one());
            }
        }
    }

    #[test]
    fn verify_suites_exit_zero() {
        let cli = parse(&["verify", "eis13", "--p", "3", "--n", "2"]);
        assert_eq!(run_verify(&cli).unwrap().passed(), true);
        let cli = parse(&["verify", "car11", "--r", "3", "--f", "Y", "--m", "1"]);
        assert_eq!(run_verify(&cli).unwrap().passed(), true);
    }

    #[test]
    fn verify_unknown_suite_is_usage_error() {
        let cli = parse(&["verify", "nope", "--p", "3"]);
        assert!(matches!(run_verify(&cli), Err(Error::Parameter(_))));
    }

    #[test]
    fn strace_rows() {
        let csv = strace_csv(3, 3, "direct", Some(1)).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "p,n,s_n,N0_reached,N_upper");
        assert_eq!(lines[1], "3,0,0,false,");
        assert_eq!(lines[2], "3,1,1,false,");
        assert_eq!(lines[4], "3,3,1,false,");
        let csv = strace_csv(11, 4, "direct", Some(1)).unwrap();
        assert!(csv.contains("11,2,3,true,3"));
    }

    #[test]
    fn nbound_rows() {
        let csv = nbound_csv(13).unwrap();
        assert!(csv.contains("5,,,,1"));
        assert!(csv.contains("11,,,,3"));
        assert!(csv.contains("13,,,,3"));
        assert!(!csv.contains("9,"));
    }

    #[test]
    fn f_parsing() {
        let (_, params) = parse_f(3, "1,0,1").unwrap();
        assert_eq!(params.q, 9);
        let (_, params) = parse_f(3, "Y").unwrap();
        assert_eq!(params.q, 3);
        assert!(parse_f(6, "Y").is_err());
        assert!(parse_f(3, "2,0,1").is_err()); // Y^2 - 1 reducible
    }

    #[test]
    fn cap_exceeded_maps_to_exit_2() {
        assert_eq!(exit_code(&Error::CapExceeded("x".into())), 2);
        assert_eq!(exit_code(&Error::Parameter("x".into())), 1);
        assert_eq!(exit_code(&Error::Internal("x".into())), 4);
    }
}
