//! Shifted cyclotomic polynomials and their coefficient congruences.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::poly::{DensePoly, PolyRing};
use crate::report::Report;
use crate::ring::{IntRing, Ring};

fn zx() -> PolyRing<IntRing> {
    PolyRing::new(IntRing)
}

fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// The minimal polynomial of zeta_{p^n} - 1, i.e. the p^n-th cyclotomic
/// polynomial shifted by one.
#[derive(Clone, Debug)]
pub struct ShiftedCyclotomic {
    pub p: u64,
    pub n: u32,
    poly: DensePoly<BigInt>,
}

impl ShiftedCyclotomic {
    pub fn coeffs(&self) -> &[BigInt] {
        self.poly.coeffs()
    }

    pub fn coeff(&self, j: usize) -> BigInt {
        zx().coeff(&self.poly, j)
    }

    pub fn poly(&self) -> &DensePoly<BigInt> {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap()
    }
}

/// (X+1)^e as an integer polynomial.
fn x_plus_one_pow(e: u64) -> DensePoly<BigInt> {
    let r = zx();
    r.pow(&r.from_coeffs(vec![BigInt::one(), BigInt::one()]), e)
}

pub fn phi_shifted(p: u64, n: u32) -> Result<ShiftedCyclotomic, Error> {
    if !is_odd_prime(p) {
        return Err(Error::Parameter(format!("p = {p} must be an odd prime")));
    }
    if n < 1 {
        return Err(Error::Parameter("level n must be >= 1".into()));
    }
    let r = zx();
    let num = r.sub(&x_plus_one_pow(p.pow(n)), &r.one());
    let den = r.sub(&x_plus_one_pow(p.pow(n - 1)), &r.one());
    let poly = r.exact_div(&num, &den)?;

    let deg = p.pow(n - 1) as usize * (p as usize - 1);
    debug_assert_eq!(poly.degree(), Some(deg));
    debug_assert!(r.is_monic(&poly));
    debug_assert_eq!(r.coeff(&poly, 0), BigInt::from(p));
    Ok(ShiftedCyclotomic { p, n, poly })
}

/// The unshifted p^n-th cyclotomic polynomial Phi_{p^n}(X) = Phi_p(X^{p^{n-1}}).
pub fn phi_unshifted(p: u64, n: u32) -> DensePoly<BigInt> {
    let r = zx();
    let step = p.pow(n - 1) as usize;
    let mut coeffs = vec![BigInt::zero(); step * (p as usize - 1) + 1];
    for k in 0..p as usize {
        coeffs[k * step] = BigInt::one();
    }
    r.from_coeffs(coeffs)
}

fn divisible(a: &BigInt, m: &BigInt) -> bool {
    (a % m).is_zero()
}

/// Coefficient congruences relating level n to level n-1, with the stronger
/// modulus below the index threshold p^{n-1}(p-2).
pub fn check_congruence_i(p: u64, n: u32) -> Result<Report, Error> {
    if n < 2 {
        return Err(Error::Parameter("congruence (I) needs n >= 2".into()));
    }
    let cur = phi_shifted(p, n)?;
    let prev = phi_shifted(p, n - 1)?;
    let pn = BigInt::from(p).pow(n);
    let pn1 = BigInt::from(p).pow(n - 1);
    let threshold = p.pow(n - 1) as usize * (p as usize - 2);

    let mut report = Report::new(format!("cong-I p={p} n={n}"));
    for j in 0..=cur.degree() {
        let (value, case) = if j % p as usize == 0 {
            (
                cur.coeff(j) - prev.coeff(j / p as usize),
                "d[n,j]-d[n-1,j/p]",
            )
        } else {
            (cur.coeff(j), "d[n,j]")
        };
        let modulus = if j <= threshold { &pn } else { &pn1 };
        report.push(
            format!("j={j}"),
            divisible(&value, modulus),
            format!("{case} = {value} mod {modulus}"),
        );
    }
    Ok(report)
}

/// The lifting congruence between Phi_{p^n}(X+1) and Phi_{p^{n-1}}(X^p+1),
/// plus its reformulation in terms of F_n(X).
pub fn check_congruence_ii(p: u64, n: u32) -> Result<Report, Error> {
    if n < 2 {
        return Err(Error::Parameter("congruence (II) needs n >= 2".into()));
    }
    let r = zx();
    let pn = BigInt::from(p).pow(n);
    let xp = r.monomial(BigInt::one(), p as usize); // X^p

    let shifted = |level: u32| -> Result<DensePoly<BigInt>, Error> {
        Ok(phi_shifted(p, level)?.poly().clone())
    };
    // Phi_{p^{n-1}}(X^p + 1): substitute X -> X^p into the shifted polynomial.
    let lhs = r.sub(&shifted(n)?, &r.compose(&shifted(n - 1)?, &xp));
    let inner = r.sub(
        &r.compose(
            &x_plus_one_pow(p.pow(n - 2)),
            &xp,
        ),
        &x_plus_one_pow(p.pow(n - 1)),
    );
    let rhs = r.mul(
        &r.monomial(BigInt::one(), p.pow(n - 1) as usize * (p as usize - 2)),
        &inner,
    );
    let diff = r.sub(&lhs, &rhs);
    let ii_ok = diff.coeffs().iter().all(|c| divisible(c, &pn));

    let mut report = Report::new(format!("cong-II p={p} n={n}"));
    report.push(
        "(II)",
        ii_ok,
        format!("difference has {} nonzero coefficients mod p^n", diff.coeffs().iter().filter(|c| !divisible(c, &pn)).count()),
    );

    // (II'): F_n(X) := Phi_{p^n}(X+1) + X^{p^n - 2p^{n-1}} (X+1)^{p^{n-1}}
    let f_at = |level: u32| -> Result<DensePoly<BigInt>, Error> {
        let tail = r.mul(
            &r.monomial(
                BigInt::one(),
                (p.pow(level) - 2 * p.pow(level - 1)) as usize,
            ),
            &x_plus_one_pow(p.pow(level - 1)),
        );
        Ok(r.add(&shifted(level)?, &tail))
    };
    let diff2 = r.sub(&f_at(n)?, &r.compose(&f_at(n - 1)?, &xp));
    let iiprime_ok = diff2.coeffs().iter().all(|c| divisible(c, &pn));
    report.push(
        "(II')",
        iiprime_ok,
        format!("difference has {} nonzero coefficients mod p^n", diff2.coeffs().iter().filter(|c| !divisible(c, &pn)).count()),
    );
    Ok(report)
}

type Bivar = DensePoly<DensePoly<BigInt>>;

fn yx() -> PolyRing<PolyRing<IntRing>> {
    // outer variable Y over Z[X]
    PolyRing::new(zx())
}

fn p_part(k: u64, p: u64) -> BigInt {
    let mut m = BigInt::one();
    let mut k = k;
    while k % p == 0 {
        m *= p;
        k /= p;
    }
    m
}

/// Binomial congruences in Z[X,Y]: the p-part bound on (X+pY)^k and the
/// freshman's-dream lifting (X+Y)^{p^{beta+alpha}} mod p^{alpha+1}.
pub fn check_binomial_congruences(
    p: u64,
    k_max: u64,
    alpha_max: u32,
    beta_max: u32,
) -> Result<Report, Error> {
    if !is_odd_prime(p) {
        return Err(Error::Parameter(format!("p = {p} must be an odd prime")));
    }
    let ring = yx();
    let inner = zx();
    let x: Bivar = ring.constant(inner.gen());
    let mut report = Report::new(format!("binom p={p}"));

    // (X + pY)^k = X^k + k X^{k-1} p Y  modulo  k[p] p^2 Y^2
    for k in 1..=k_max {
        let py: Bivar = ring.monomial(inner.constant(BigInt::from(p)), 1);
        let lhs = ring.pow(&ring.add(&x, &py), k);
        let linear = ring.monomial(
            inner.scale(
                &inner.pow(&inner.gen(), k - 1),
                &BigInt::from(p * k),
            ),
            1,
        );
        let diff = ring.sub(&lhs, &ring.add(&ring.pow(&x, k), &linear));
        let modulus = p_part(k, p) * BigInt::from(p).pow(2);
        // membership in (k[p] p^2 Y^2) Z[X,Y]
        let mut ok = true;
        for (ydeg, coeff) in diff.coeffs().iter().enumerate() {
            if ydeg < 2 {
                ok &= coeff.is_zero();
            } else {
                ok &= coeff.coeffs().iter().all(|c| divisible(c, &modulus));
            }
        }
        report.push(format!("lem2 k={k}"), ok, format!("modulus {modulus}·Y^2"));
    }

    // (X+Y)^{p^{beta+alpha}} = (X^{p^beta} + Y^{p^beta})^{p^alpha} mod p^{alpha+1}
    let y: Bivar = ring.gen();
    for alpha in 0..=alpha_max {
        for beta in 0..=beta_max {
            let lhs = ring.pow(&ring.add(&x, &y), p.pow(beta + alpha));
            let xb = ring.constant(inner.pow(&inner.gen(), p.pow(beta)));
            let yb = ring.pow(&y, p.pow(beta));
            let rhs = ring.pow(&ring.add(&xb, &yb), p.pow(alpha));
            let diff = ring.sub(&lhs, &rhs);
            let modulus = BigInt::from(p).pow(alpha + 1);
            let ok = diff
                .coeffs()
                .iter()
                .all(|c| c.coeffs().iter().all(|z| divisible(z, &modulus)));
            report.push(
                format!("cor2b alpha={alpha} beta={beta}"),
                ok,
                format!("mod {modulus}"),
            );
        }
    }
    Ok(report)
}
