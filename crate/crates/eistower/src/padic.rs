//! Teichmueller lifts in Z_p, signed subset-sum counts s_n over the
//! (p-1)st roots of unity, the stationarity index N_0(p), the certified
//! upper bound N(p), and the trace formula Tr(pi_n) = p^n s_n - p^{n-1} s_{n-1}.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

pub const DIRECT_CAP: u64 = 26;
pub const MITM_CAP: u64 = 44;
/// Extra p-adic digits beyond n_max; the valuation predicate only reads
/// residues mod p^n, so two guard digits absorb carries.
pub const PRECISION_GUARD: u32 = 2;

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn effective_workers(requested: Option<usize>) -> usize {
    if let Some(w) = requested {
        return w.max(1);
    }
    if let Ok(s) = std::env::var("EISTOWER_WORKERS") {
        if let Ok(w) = s.parse::<usize>() {
            return w.max(1);
        }
    }
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

/// Residues mod p^N.
#[derive(Clone, Debug)]
pub struct PadicRing {
    pub p: u64,
    pub precision: u32,
    pub modulus: u128,
}

impl PadicRing {
    pub fn new(p: u64, precision: u32) -> Result<Self, Error> {
        if !is_prime_u64(p) || p < 3 {
            return Err(Error::Parameter(format!("p = {p} must be an odd prime")));
        }
        if precision < 1 {
            return Err(Error::Parameter("precision must be >= 1".into()));
        }
        let modulus = (p as u128)
            .checked_pow(precision)
            .filter(|&m| m < 1u128 << 100)
            .ok_or_else(|| {
                Error::CapExceeded(format!("p^N = {p}^{precision} exceeds the residue width"))
            })?;
        Ok(PadicRing {
            p,
            precision,
            modulus,
        })
    }
}

/// The Teichmueller lifts xi(1), ..., xi(p-1), i.e. the (p-1)st roots of
/// unity in Z_p truncated mod p^N.
#[derive(Clone, Debug)]
pub struct TeichmullerSet {
    pub ring: PadicRing,
    pub xi: Vec<u128>,
}

/// xi(j) = lim j^{p^n}, computed by iterating x <- x^p mod p^N to its
/// fixed point.
pub fn teichmuller(p: u64, precision: u32) -> Result<TeichmullerSet, Error> {
    let ring = PadicRing::new(p, precision)?;
    let modulus = BigUint::from(ring.modulus);
    let pe = BigUint::from(p);
    let mut xi = Vec::with_capacity((p - 1) as usize);
    for j in 1..p {
        let mut x = BigUint::from(j);
        loop {
            let next = x.modpow(&pe, &modulus);
            if next == x {
                break;
            }
            x = next;
        }
        xi.push(x.to_u128().expect("residue fits"));
    }
    debug_assert!(xi.iter().all(|&x| {
        BigUint::from(x).modpow(&pe, &modulus) == BigUint::from(x)
    }));
    debug_assert_eq!(
        {
            let mut s = xi.clone();
            s.sort_unstable();
            s.dedup();
            s.len()
        },
        xi.len()
    );
    Ok(TeichmullerSet { ring, xi })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Auto,
    Direct,
    Mitm,
}

impl std::str::FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "direct" => Ok(Strategy::Direct),
            "mitm" => Ok(Strategy::Mitm),
            other => Err(Error::Parameter(format!("unknown strategy {other}"))),
        }
    }
}

/// s_0, ..., s_{n_max} together with the observed stationarity index and the
/// certified upper bound N(p) where available (p >= 5).
#[derive(Clone, Debug)]
pub struct SubsetSumTally {
    pub p: u64,
    pub s: Vec<i64>,
    /// smallest index from which s is constant through n_max, certified by
    /// n_max >= N(p); None when the bound is unknown or not yet covered
    pub n0: Option<u32>,
    pub n_bound: Option<u64>,
}

fn val_count(mut r: u128, p: u128, n_max: u32) -> u32 {
    // number of levels n in [0, n_max] with v_p(r) >= n; r = 0 counts all
    if r == 0 {
        return n_max + 1;
    }
    let mut v = 0u32;
    while v < n_max && r % p == 0 {
        r /= p;
        v += 1;
    }
    v + 1
}

/// Signed counts per level from one Gray-code range of subset indices.
fn direct_chunk(
    xi: &[u128],
    modulus: u128,
    p: u128,
    n_max: u32,
    lo: u64,
    hi: u64,
) -> Vec<i64> {
    let mut counts = vec![0i64; n_max as usize + 1];
    let gray = |k: u64| k ^ (k >> 1);
    let mut mask = gray(lo);
    let mut sum: u128 = 0;
    for (b, &x) in xi.iter().enumerate() {
        if mask >> b & 1 == 1 {
            sum = (sum + x) % modulus;
        }
    }
    let mut parity = (mask.count_ones() & 1) as i64;
    let mut k = lo;
    loop {
        let sign = 1 - 2 * parity;
        let upto = val_count(sum, p, n_max);
        for c in counts.iter_mut().take(upto as usize) {
            *c += sign;
        }
        k += 1;
        if k == hi {
            break;
        }
        let bit = k.trailing_zeros() as usize;
        let x = xi[bit];
        if mask >> bit & 1 == 1 {
            sum = (sum + modulus - x) % modulus;
        } else {
            sum = (sum + x) % modulus;
        }
        mask ^= 1 << bit;
        parity ^= 1;
    }
    counts
}

fn run_chunked<T: Send>(
    workers: usize,
    chunks: Vec<(u64, u64)>,
    job: impl Fn(u64, u64) -> T + Sync,
) -> Vec<T> {
    let next = AtomicUsize::new(0);
    let mut slots: Vec<Option<T>> = (0..chunks.len()).map(|_| None).collect();
    let slot_refs: Vec<_> = slots.iter_mut().map(std::sync::Mutex::new).collect();
    std::thread::scope(|scope| {
        for _ in 0..workers.min(chunks.len()).max(1) {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                if idx >= chunks.len() {
                    break;
                }
                let (lo, hi) = chunks[idx];
                let out = job(lo, hi);
                **slot_refs[idx].lock().unwrap() = Some(out);
            });
        }
    });
    slots.into_iter().map(|s| s.unwrap()).collect()
}

fn split_range(total: u64, pieces: u64) -> Vec<(u64, u64)> {
    let pieces = pieces.min(total).max(1);
    let step = total / pieces;
    let rem = total % pieces;
    let mut out = Vec::with_capacity(pieces as usize);
    let mut lo = 0;
    for i in 0..pieces {
        let hi = lo + step + u64::from(i < rem);
        out.push((lo, hi));
        lo = hi;
    }
    out
}

fn signed_counts_direct(ts: &TeichmullerSet, n_max: u32, workers: usize) -> Vec<i64> {
    let xi = &ts.xi;
    let total = 1u64 << xi.len();
    // chunk layout is fixed so results do not depend on the worker count
    let chunks = split_range(total, 256);
    let p = ts.ring.p as u128;
    let modulus = ts.ring.modulus;
    let per_chunk = run_chunked(workers, chunks, |lo, hi| {
        direct_chunk(xi, modulus, p, n_max, lo, hi)
    });
    let mut counts = vec![0i64; n_max as usize + 1];
    for c in per_chunk {
        for (a, b) in counts.iter_mut().zip(c) {
            *a += b;
        }
    }
    counts
}

/// All subset sums of `xi` mod `modulus`, paired with the sign (-1)^{#H}.
fn half_sums(xi: &[u128], modulus: u128, workers: usize) -> Vec<(u128, i64)> {
    let total = 1u64 << xi.len();
    let chunks = split_range(total, 64);
    let per_chunk = run_chunked(workers, chunks, |lo, hi| {
        let gray = |k: u64| k ^ (k >> 1);
        let mut mask = gray(lo);
        let mut sum: u128 = 0;
        for (b, &x) in xi.iter().enumerate() {
            if mask >> b & 1 == 1 {
                sum = (sum + x) % modulus;
            }
        }
        let mut parity = (mask.count_ones() & 1) as i64;
        let mut out = Vec::with_capacity((hi - lo) as usize);
        let mut k = lo;
        loop {
            out.push((sum, 1 - 2 * parity));
            k += 1;
            if k == hi {
                break;
            }
            let bit = k.trailing_zeros() as usize;
            let x = xi[bit];
            if mask >> bit & 1 == 1 {
                sum = (sum + modulus - x) % modulus;
            } else {
                sum = (sum + x) % modulus;
            }
            mask ^= 1 << bit;
            parity ^= 1;
        }
        out
    });
    per_chunk.into_iter().flatten().collect()
}

/// Meet-in-the-middle tally: mu_{p-1} is split in halves; signed counts are
/// tabulated per residue so (-1)^{#H} factorizes over the halves, and for
/// each level n pairs of residues summing to 0 mod p^n are combined.
fn signed_counts_mitm(ts: &TeichmullerSet, n_max: u32, workers: usize) -> Vec<i64> {
    let half = ts.xi.len() / 2;
    let (a, b) = ts.xi.split_at(half);
    let sums_a = half_sums(a, ts.ring.modulus, workers);
    let sums_b = half_sums(b, ts.ring.modulus, workers);
    let (small, large) = if sums_a.len() <= sums_b.len() {
        (&sums_a, &sums_b)
    } else {
        (&sums_b, &sums_a)
    };

    let p = ts.ring.p as u128;
    let mut counts = vec![0i64; n_max as usize + 1];
    counts[0] = 0; // every pair of halves contributes; signs cancel to 0
    let mut pn: u128 = 1;
    for n in 1..=n_max as usize {
        pn *= p;
        let mut table: HashMap<u128, i64> = HashMap::new();
        for &(r, sign) in large.iter() {
            *table.entry(r % pn).or_insert(0) += sign;
        }
        let mut acc = 0i64;
        for &(r, sign) in small.iter() {
            let want = (pn - r % pn) % pn;
            if let Some(&c) = table.get(&want) {
                acc += sign * c;
            }
        }
        counts[n] = acc;
    }
    counts
}

/// s_n = (1/(p-1)) sum over subsets H of mu_{p-1} of (-1)^{#H} [v_p(sum H) >= n].
pub fn s_sequence(
    p: u64,
    n_max: u32,
    strategy: Strategy,
    workers: Option<usize>,
) -> Result<SubsetSumTally, Error> {
    let strategy = match strategy {
        Strategy::Auto => {
            if p - 1 <= 20 {
                Strategy::Direct
            } else {
                Strategy::Mitm
            }
        }
        s => s,
    };
    let cap = match strategy {
        Strategy::Direct => DIRECT_CAP,
        Strategy::Mitm => MITM_CAP,
        Strategy::Auto => unreachable!(),
    };
    if p - 1 > cap {
        return Err(Error::CapExceeded(format!(
            "p-1 = {} exceeds the {:?} cap {cap}",
            p - 1,
            strategy
        )));
    }
    if n_max < 1 {
        return Err(Error::Parameter("n_max must be >= 1".into()));
    }
    let ts = teichmuller(p, n_max + PRECISION_GUARD)?;
    let workers = effective_workers(workers);
    let counts = match strategy {
        Strategy::Direct => signed_counts_direct(&ts, n_max, workers),
        Strategy::Mitm => signed_counts_mitm(&ts, n_max, workers),
        Strategy::Auto => unreachable!(),
    };
    let d = p as i64 - 1;
    let mut s = Vec::with_capacity(counts.len());
    for (n, &c) in counts.iter().enumerate() {
        if c % d != 0 {
            return Err(Error::Internal(format!(
                "signed count {c} at level {n} is not divisible by p-1 = {d}"
            )));
        }
        s.push(c / d);
    }
    if s[0] != 0 {
        return Err(Error::Internal(format!("s_0 = {} but must be 0", s[0])));
    }
    if s.len() > 1 && s[1] != 1 {
        return Err(Error::Internal(format!("s_1 = {} but must be 1", s[1])));
    }

    let n_bound = if p >= 5 { Some(n_upper_bound(p)?) } else { None };
    let n0 = match n_bound {
        Some(nb) if (n_max as u64) >= nb => {
            let tail = *s.last().unwrap();
            let mut idx = s.len() - 1;
            while idx > 0 && s[idx - 1] == tail {
                idx -= 1;
            }
            Some(idx as u32)
        }
        _ => None,
    };
    Ok(SubsetSumTally { p, s, n0, n_bound })
}

fn round_down(q: &BigRational, scale: &BigInt) -> BigRational {
    BigRational::new((q * scale).floor().to_integer(), scale.clone())
}

fn round_up(q: &BigRational, scale: &BigInt) -> BigRational {
    BigRational::new((q * scale).ceil().to_integer(), scale.clone())
}

/// Closed rational interval certified to contain a real number.
#[derive(Clone, Debug)]
struct Interval {
    lo: BigRational,
    hi: BigRational,
}

impl Interval {
    fn tighten(&self, scale: &BigInt) -> Interval {
        Interval {
            lo: round_down(&self.lo, scale),
            hi: round_up(&self.hi, scale),
        }
    }
}

/// 2 atanh(z) = 2 sum z^{2k+1}/(2k+1) for rational z in (0,1), with the
/// geometric tail bound z^{2K+1}/((2K+1)(1-z^2)).
fn two_atanh(z: &BigRational, scale: &BigInt) -> Interval {
    assert!(z.is_positive() && z < &BigRational::one());
    let z2 = z * z;
    let eps = BigRational::new(BigInt::one(), scale.clone());
    let mut term = z.clone();
    let mut k = 0u64;
    let mut sum = BigRational::zero();
    loop {
        sum += &term / BigRational::from_integer(BigInt::from(2 * k + 1));
        sum = round_down(&sum, &(scale * BigInt::from(4)));
        term *= &z2;
        let tail = &term / ((BigRational::one() - &z2)
            * BigRational::from_integer(BigInt::from(2 * k + 3)));
        if tail < eps {
            // each round-down lost at most 1/(4 scale); k+1 terms so far
            let drift = BigRational::new(BigInt::from(k + 1), scale * BigInt::from(4));
            let lo = &sum + &sum;
            let hi = &lo + (&tail + &tail) + (&drift + &drift) + &eps;
            return Interval { lo, hi }.tighten(scale);
        }
        k += 1;
    }
}

fn ln_rational(q: &BigRational, scale: &BigInt) -> Interval {
    assert!(q > &BigRational::one());
    let z = (q - BigRational::one()) / (q + BigRational::one());
    two_atanh(&z, scale)
}

/// ln p = ln(p / 2^k) + k ln 2 with p/2^k in [1,2), keeping the atanh
/// argument small.
fn ln_integer(p: u64, scale: &BigInt) -> Interval {
    let k = 63 - p.leading_zeros() as u64;
    let reduced = BigRational::new(BigInt::from(p), BigInt::from(1u64 << k));
    let ln2 = ln_two_cached(scale);
    let part = if reduced.is_one() {
        Interval {
            lo: BigRational::zero(),
            hi: BigRational::zero(),
        }
    } else {
        ln_rational(&reduced, scale)
    };
    let kq = BigRational::from_integer(BigInt::from(k));
    Interval {
        lo: part.lo + &kq * ln2.lo,
        hi: part.hi + &kq * ln2.hi,
    }
    .tighten(scale)
}

/// Machin's formula pi = 16 atan(1/5) - 4 atan(1/239); the alternating
/// series partial sums bracket each arctangent.
fn pi_interval(scale: &BigInt) -> Interval {
    let eps = BigRational::new(BigInt::one(), scale.clone());
    let atan_inv = |x: u64| -> Interval {
        let z = BigRational::new(BigInt::one(), BigInt::from(x));
        let z2 = &z * &z;
        let mut term = z.clone();
        let mut k = 0u64;
        let mut sum = BigRational::zero();
        loop {
            let contrib = &term / BigRational::from_integer(BigInt::from(2 * k + 1));
            if k % 2 == 0 {
                sum += contrib;
            } else {
                sum -= contrib;
            }
            term *= &z2;
            let next = &term / BigRational::from_integer(BigInt::from(2 * k + 3));
            if next < eps {
                // consecutive partial sums bracket the limit
                let (lo, hi) = if k % 2 == 0 {
                    (&sum - &next, sum.clone())
                } else {
                    (sum.clone(), &sum + &next)
                };
                return Interval { lo, hi }.tighten(scale);
            }
            k += 1;
        }
    };
    let a = atan_inv(5);
    let b = atan_inv(239);
    let c16 = BigRational::from_integer(BigInt::from(16));
    let c4 = BigRational::from_integer(BigInt::from(4));
    Interval {
        lo: &c16 * a.lo - &c4 * b.hi,
        hi: &c16 * a.hi - &c4 * b.lo,
    }
    .tighten(scale)
}

type ConstCache = Mutex<HashMap<u32, (BigRational, BigRational, Interval)>>;

/// (ln pi lower, ln pi upper, ln 2) at a given scale; the series are the
/// slow part of the bound computation and are shared across all primes.
fn log_constants(bits: u32, scale: &BigInt) -> (BigRational, BigRational, Interval) {
    static CACHE: OnceLock<ConstCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(entry) = cache.lock().unwrap().get(&bits) {
        return entry.clone();
    }
    let pi = pi_interval(scale);
    let lnpi_lo = ln_rational(&pi.lo, scale).lo;
    let lnpi_hi = ln_rational(&pi.hi, scale).hi;
    let ln2 = ln_rational(&BigRational::from_integer(BigInt::from(2)), scale);
    let entry = (lnpi_lo, lnpi_hi, ln2);
    cache.lock().unwrap().insert(bits, entry.clone());
    entry
}

fn ln_two_cached(scale: &BigInt) -> Interval {
    let bits = scale.bits() as u32 - 1;
    let (_, _, ln2) = log_constants(bits, scale);
    ln2
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut phi = n;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            phi -= phi / d;
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// floor(phi(p-1) (1 - ln pi / ln p) + 1), evaluated with rational interval
/// arithmetic at escalating precision until the interval pins the floor.
pub fn n_upper_bound(p: u64) -> Result<u64, Error> {
    if p < 5 || !is_prime_u64(p) {
        return Err(Error::Parameter(format!(
            "upper bound needs a prime p >= 5, got {p}"
        )));
    }
    let phi = BigRational::from_integer(BigInt::from(euler_phi(p - 1)));
    let mut bits = 64u32;
    loop {
        let scale = BigInt::one() << bits;
        let (lnpi_lo, lnpi_hi, _) = log_constants(bits, &scale);
        let lnp = ln_integer(p, &scale);
        // 1 - ln pi / ln p is positive (p > pi) and both logs are positive
        let frac_lo = BigRational::one() - &lnpi_hi / &lnp.lo;
        let frac_hi = BigRational::one() - &lnpi_lo / &lnp.hi;
        let lo = &phi * frac_lo + BigRational::one();
        let hi = &phi * frac_hi + BigRational::one();
        let f_lo = lo.floor().to_integer();
        let f_hi = hi.floor().to_integer();
        if f_lo == f_hi {
            return Ok(u64::try_from(&f_lo)
                .map_err(|_| Error::Internal("negative upper bound".into()))?);
        }
        bits *= 2;
        if bits > 1 << 16 {
            return Err(Error::Internal(format!(
                "interval for N({p}) did not separate from an integer"
            )));
        }
    }
}

#[derive(Clone, Debug)]
pub struct TraceRecord {
    pub p: u64,
    pub n: u32,
    pub trace: BigInt,
}

/// Tr_{E_n|Q}(pi_n) = p^n s_n - p^{n-1} s_{n-1}.
pub fn trace_via_s(p: u64, n: u32, workers: Option<usize>) -> Result<TraceRecord, Error> {
    if n < 1 {
        return Err(Error::Parameter("n must be >= 1".into()));
    }
    let tally = s_sequence(p, n, Strategy::Auto, workers)?;
    let pb = BigInt::from(p);
    let trace = pb.pow(n) * BigInt::from(tally.s[n as usize])
        - pb.pow(n - 1) * BigInt::from(tally.s[n as usize - 1]);
    if n == 2 {
        let p2 = BigInt::from(p).pow(2);
        let r = (&trace + BigInt::from(p)).mod_floor(&p2);
        if !r.is_zero() {
            return Err(Error::Internal(format!(
                "Tr(pi_2) = {trace} is not -p mod p^2"
            )));
        }
    }
    Ok(TraceRecord { p, n, trace })
}

/// max over subsets H of mu_{p-1} of |sum H| equals 1/sin(pi/(p-1)),
/// checked in floating point.
pub fn max_sum_modulus_check(p: u64) -> Result<(f64, f64, bool), Error> {
    if p - 1 > DIRECT_CAP {
        return Err(Error::CapExceeded(format!(
            "p-1 = {} exceeds the enumeration cap {DIRECT_CAP}",
            p - 1
        )));
    }
    let m = (p - 1) as usize;
    let roots: Vec<(f64, f64)> = (0..m)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * k as f64 / m as f64;
            (t.cos(), t.sin())
        })
        .collect();
    let mut best = 0.0f64;
    let mut re = 0.0f64;
    let mut im = 0.0f64;
    let mut mask = 0u64;
    for k in 1..(1u64 << m) {
        let bit = k.trailing_zeros() as usize;
        if mask >> bit & 1 == 1 {
            re -= roots[bit].0;
            im -= roots[bit].1;
        } else {
            re += roots[bit].0;
            im += roots[bit].1;
        }
        mask ^= 1 << bit;
        let norm = (re * re + im * im).sqrt();
        if norm > best {
            best = norm;
        }
    }
    let expected = 1.0 / (std::f64::consts::PI / m as f64).sin();
    let ok = ((best - expected) / expected).abs() < 1e-9;
    Ok((best, expected, ok))
}
