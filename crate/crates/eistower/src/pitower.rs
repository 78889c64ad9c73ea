//! The cyclotomic number-field tower: arithmetic in Q(zeta_{p^n}), the
//! uniformizers pi_n of the fixed fields E_n, their relative minimal
//! polynomials, and the valuation/congruence verifiers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cyclotomic::phi_unshifted;
use crate::error::Error;
use crate::linalg::{solve_unique, LinearSystem};
use crate::poly::{resultant, DensePoly, PolyRing};
use crate::report::{Report, Val, ValuationReport};
use crate::ring::{rat_val_p, RatRing, Ring};

pub const DEFAULT_DIM_CAP: usize = 400;

fn qx() -> PolyRing<RatRing> {
    PolyRing::new(RatRing)
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// An element of Q(zeta_{p^n}) in the power basis of zeta, reduced modulo the
/// p^n-th cyclotomic polynomial.
pub type CycElt = DensePoly<BigRational>;

/// Q(zeta_{p^n}) as the quotient Q[X]/Phi_{p^n}(X).
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    pub p: u64,
    pub n: u32,
    modulus: DensePoly<BigRational>,
    dim: usize,
}

impl CyclotomicField {
    pub fn new(p: u64, n: u32) -> Result<Self, Error> {
        let ring = qx();
        let modulus = ring.from_coeffs(
            phi_unshifted(p, n)
                .coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        );
        let dim = modulus.degree().unwrap();
        debug_assert_eq!(dim as u64, p.pow(n - 1) * (p - 1));
        Ok(CyclotomicField { p, n, modulus, dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn zero(&self) -> CycElt {
        qx().zero()
    }

    pub fn one(&self) -> CycElt {
        qx().one()
    }

    pub fn from_rational(&self, c: BigRational) -> CycElt {
        qx().constant(c)
    }

    /// zeta^k (k reduced mod p^n).
    pub fn zeta_pow(&self, k: u64) -> CycElt {
        let k = (k % self.p.pow(self.n)) as usize;
        self.reduce(&qx().monomial(BigRational::one(), k))
    }

    pub fn reduce(&self, a: &DensePoly<BigRational>) -> CycElt {
        let (_, r) = qx().div_rem_monic(a, &self.modulus);
        r
    }

    pub fn add(&self, a: &CycElt, b: &CycElt) -> CycElt {
        qx().add(a, b)
    }

    pub fn sub(&self, a: &CycElt, b: &CycElt) -> CycElt {
        qx().sub(a, b)
    }

    pub fn mul(&self, a: &CycElt, b: &CycElt) -> CycElt {
        self.reduce(&qx().mul(a, b))
    }

    pub fn pow(&self, a: &CycElt, e: u64) -> CycElt {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// theta_n = zeta_{p^n} - 1.
    pub fn theta(&self) -> CycElt {
        qx().from_coeffs(vec![rat(-1), rat(1)])
    }

    /// Valuation at theta_n, via v_p of the resultant with the field
    /// modulus. Total ramification with residue degree 1 makes this exact.
    pub fn theta_valuation(&self, x: &CycElt) -> Val {
        if x.is_zero() {
            return Val::Infinite;
        }
        let res = resultant(&qx(), &self.modulus, x).expect("nonzero inputs");
        Val::Finite(rat_val_p(self.p, &res).expect("nonzero resultant of coprime polynomials"))
    }
}

/// pi_m as an element of Q(zeta_{p^n}) for m <= n: the product over
/// j in [1,p-1] of (zeta^{p^{n-m} e_j} - 1) with e_j = j^{p^{m-1}} mod p^m.
pub fn pi_element(field: &CyclotomicField, m: u32) -> CycElt {
    assert!(m >= 1 && m <= field.n);
    let p = field.p;
    let pm = BigInt::from(p).pow(m);
    let lift = p.pow(field.n - m);
    let mut acc = field.one();
    for j in 1..p {
        let e = BigInt::from(j).modpow(&BigInt::from(p).pow(m - 1), &pm);
        let e: u64 = u64::try_from(&e).expect("exponent fits");
        let factor = field.sub(&field.zeta_pow(lift * e), &field.one());
        acc = field.mul(&acc, &factor);
    }
    acc
}

/// pi_n in its own field F_n.
pub fn compute_pi(p: u64, n: u32) -> Result<(CyclotomicField, CycElt), Error> {
    let field = CyclotomicField::new(p, n)?;
    let pi = pi_element(&field, n);
    Ok((field, pi))
}

/// Parameters of the relative step E_{m+i} | E_m.
#[derive(Clone, Copy, Debug)]
pub struct TowerParams {
    pub p: u64,
    pub m: u32,
    pub i: u32,
    pub dim_cap: usize,
}

impl TowerParams {
    pub fn new(p: u64, m: u32, i: u32) -> Result<Self, Error> {
        Self::with_cap(p, m, i, DEFAULT_DIM_CAP)
    }

    pub fn with_cap(p: u64, m: u32, i: u32, dim_cap: usize) -> Result<Self, Error> {
        if p < 3 || p % 2 == 0 || !crate::padic::is_prime_u64(p) {
            return Err(Error::Parameter(format!("p = {p} must be an odd prime")));
        }
        if m < 1 || i < 1 {
            return Err(Error::Parameter("m and i must be >= 1".into()));
        }
        Ok(TowerParams { p, m, i, dim_cap })
    }

    /// Dimension of the ambient cyclotomic field Q(zeta_{p^{m+i}}).
    pub fn ambient_dim(&self) -> u64 {
        self.p.pow(self.m + self.i - 1) * (self.p - 1)
    }

    pub fn check_cap(&self) -> Result<(), Error> {
        if self.ambient_dim() > self.dim_cap as u64 {
            return Err(Error::CapExceeded(format!(
                "ambient dimension {} exceeds cap {}",
                self.ambient_dim(),
                self.dim_cap
            )));
        }
        Ok(())
    }

    /// True when j lies below the sharpened-bound threshold p^i (p-2)/(p-1).
    pub fn below_threshold(&self, j: u64) -> bool {
        j * (self.p - 1) < self.p.pow(self.i) * (self.p - 2)
    }
}

/// The relative minimal polynomial of pi_{m+i} over E_m. Each coefficient is
/// a polynomial in pi_m of degree < p^{m-1} with rational (p-integral)
/// coefficients.
#[derive(Clone, Debug)]
pub struct RelMinPoly {
    pub params: TowerParams,
    /// indexed by j in [0, p^i]; coeffs[p^i] is the constant polynomial 1
    pub coeffs: Vec<DensePoly<BigRational>>,
}

impl RelMinPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// a_{i,j} as a polynomial in pi_m.
    pub fn coeff(&self, j: usize) -> &DensePoly<BigRational> {
        &self.coeffs[j]
    }
}

fn assert_p_integral(p: u64, c: &BigRational) -> Result<(), Error> {
    if (c.denom() % BigInt::from(p)).is_zero() {
        return Err(Error::Internal(format!(
            "coefficient {c} is not p-integral at p = {p}"
        )));
    }
    Ok(())
}

/// Finds the unique monic degree-p^i relation over E_m annihilating pi_{m+i}
/// by exact linear algebra in the zeta_{p^{m+i}} power basis.
pub fn minpoly_rel(params: TowerParams) -> Result<RelMinPoly, Error> {
    params.check_cap()?;
    let TowerParams { p, m, i, .. } = params;
    let field = CyclotomicField::new(p, m + i)?;
    let deg = p.pow(i) as usize;
    let base_dim = p.pow(m - 1) as usize;

    let pi_hi = pi_element(&field, m + i);
    let pi_lo = pi_element(&field, m);

    let mut hi_pows = Vec::with_capacity(deg + 1);
    hi_pows.push(field.one());
    for _ in 0..deg {
        let next = field.mul(hi_pows.last().unwrap(), &pi_hi);
        hi_pows.push(next);
    }
    let mut lo_pows = Vec::with_capacity(base_dim);
    lo_pows.push(field.one());
    for _ in 1..base_dim {
        let next = field.mul(lo_pows.last().unwrap(), &pi_lo);
        lo_pows.push(next);
    }

    let dim = field.dim();
    let ring = qx();
    let cols = deg * base_dim;
    let mut matrix = vec![vec![RatRing.zero(); cols]; dim];
    for j in 0..deg {
        for k in 0..base_dim {
            let col = field.mul(&hi_pows[j], &lo_pows[k]);
            for (row, slot) in matrix.iter_mut().enumerate() {
                slot[j * base_dim + k] = ring.coeff(&col, row);
            }
        }
    }
    let rhs: Vec<BigRational> = (0..dim)
        .map(|row| -ring.coeff(&hi_pows[deg], row))
        .collect();

    let solution = solve_unique(&RatRing, &LinearSystem::new(matrix, rhs)).map_err(|e| {
        Error::Internal(format!("minimal-polynomial system failed: {e}"))
    })?;

    let mut coeffs = Vec::with_capacity(deg + 1);
    for j in 0..deg {
        let piece = ring.from_coeffs(solution[j * base_dim..(j + 1) * base_dim].to_vec());
        for c in piece.coeffs() {
            assert_p_integral(p, c)?;
        }
        coeffs.push(piece);
    }
    coeffs.push(ring.one());

    // the found polynomial must annihilate pi_{m+i} exactly
    let mut acc = field.zero();
    for (j, piece) in coeffs.iter().enumerate() {
        let mut base_elt = field.zero();
        for (k, c) in piece.coeffs().iter().enumerate() {
            let term = field.mul(&lo_pows.get(k).cloned().unwrap_or_else(|| field.pow(&pi_lo, k as u64)), &field.from_rational(c.clone()));
            base_elt = field.add(&base_elt, &term);
        }
        acc = field.add(&acc, &field.mul(&base_elt, &hi_pows[j]));
    }
    if !acc.is_zero() {
        return Err(Error::Internal("relative minimal polynomial does not annihilate".into()));
    }

    // Eisenstein shape: constant term equals -pi_m
    let expect = ring.from_coeffs({
        let mut v = vec![RatRing.zero(); base_dim.max(2)];
        if base_dim == 1 {
            // pi_1 = p is a scalar
            v[0] = rat(-(p as i64));
        } else {
            v[1] = rat(-1);
        }
        v
    });
    if coeffs[0] != expect {
        return Err(Error::Internal("constant term is not -pi_m".into()));
    }

    Ok(RelMinPoly { params, coeffs })
}

/// v_{pi_m} of a coefficient polynomial, computed as v_{theta_m}/(p-1) after
/// evaluating at pi_m inside F_m.
pub fn coeff_valuation(params: &TowerParams, a: &DensePoly<BigRational>) -> Val {
    let field = CyclotomicField::new(params.p, params.m).expect("valid params");
    let pi_lo = pi_element(&field, params.m);
    let ring = qx();
    let mut elt = field.zero();
    let mut pow = field.one();
    for c in a.coeffs() {
        elt = field.add(&elt, &field.mul(&pow, &field.from_rational(c.clone())));
        pow = field.mul(&pow, &pi_lo);
    }
    let _ = ring;
    match field.theta_valuation(&elt) {
        Val::Infinite => Val::Infinite,
        Val::Finite(v) => {
            let e = params.p as i64 - 1;
            assert!(v % e == 0, "theta-valuation {v} not divisible by ramification index {e}");
            Val::Finite(v / e)
        }
    }
}

/// Divisibility bounds on j·a_{i,j}, with the sharpened bound below the
/// threshold; exactness flags follow the exact-index convention.
pub fn verify_th11(rel: &RelMinPoly) -> Vec<ValuationReport> {
    let params = rel.params;
    let e = params.p.pow(params.m - 1) as i64;
    let mut out = Vec::new();
    for j in 1..rel.degree() {
        let ja = qx().scale(rel.coeff(j), &rat(j as i64));
        let v = coeff_valuation(&params, &ja);
        let mut bound = params.i as i64 * e;
        if params.below_threshold(j as u64) {
            bound += 1;
        }
        out.push(ValuationReport::new(j, v, bound));
    }
    out
}

pub fn verify_th11_report(rel: &RelMinPoly) -> Report {
    let params = rel.params;
    let mut report = Report::new(format!(
        "th11 p={} m={} i={}",
        params.p, params.m, params.i
    ));
    for vr in verify_th11(rel) {
        report.push_valuation(format!("j={}", vr.j), &vr);
    }
    report
}

/// The congruence a_{i,j} = a_{i+beta, p^beta j} modulo p^{i+1} (and modulo
/// p^{i+1} pi_m below the threshold), checked by valuation of the difference.
pub fn verify_th11_cong(params: TowerParams, beta: u32) -> Result<Report, Error> {
    let rel_lo = minpoly_rel(params)?;
    let hi_params = TowerParams::with_cap(params.p, params.m, params.i + beta, params.dim_cap)?;
    let rel_hi = minpoly_rel(hi_params)?;
    let e = params.p.pow(params.m - 1) as i64;
    let pb = params.p.pow(beta) as usize;

    let mut report = Report::new(format!(
        "th11-cong p={} m={} i={} beta={beta}",
        params.p, params.m, params.i
    ));
    for j in 1..rel_lo.degree() {
        let diff = qx().sub(rel_lo.coeff(j), rel_hi.coeff(pb * j));
        let v = coeff_valuation(&params, &diff);
        let mut bound = (params.i as i64 + 1) * e;
        if params.below_threshold(j as u64) {
            bound += 1;
        }
        let vr = ValuationReport::new(j, v, bound);
        report.push_valuation(format!("j={j}"), &vr);
    }
    Ok(report)
}

/// Exact unit statements: a_{i,j*} / p^{i-beta} is a unit for
/// j* = p^i - (p^i - p^beta)/(p-1).
pub fn verify_cor_diff(rel: &RelMinPoly) -> Report {
    let params = rel.params;
    let e = params.p.pow(params.m - 1) as i64;
    let mut report = Report::new(format!(
        "cordiff p={} m={} i={}",
        params.p, params.m, params.i
    ));
    for beta in 0..params.i {
        let pi_pow = params.p.pow(params.i);
        let jstar = (pi_pow - (pi_pow - params.p.pow(beta)) / (params.p - 1)) as usize;
        let v = coeff_valuation(&params, rel.coeff(jstar));
        let want = (params.i - beta) as i64 * e;
        report.push(
            format!("beta={beta}"),
            v == Val::Finite(want),
            format!("j*={jstar} v={v} expected exactly {want}"),
        );
    }
    report
}

/// pi_n^p = pi_{n-1} modulo pi_n^{p-1} p, plus the divisibility transfer
/// from the theta-level congruence.
pub fn verify_lem10(p: u64, n: u32, dim_cap: usize) -> Result<Report, Error> {
    if n < 2 {
        return Err(Error::Parameter("lem10 needs n >= 2".into()));
    }
    let dim = p.pow(n - 1) * (p - 1);
    if dim > dim_cap as u64 {
        return Err(Error::CapExceeded(format!(
            "dimension {dim} exceeds cap {dim_cap}"
        )));
    }
    let field = CyclotomicField::new(p, n)?;
    let pi_n = pi_element(&field, n);
    let pi_prev = pi_element(&field, n - 1);
    let theta_n = field.theta();
    let theta_prev = field.sub(&field.zeta_pow(p), &field.one());

    let lhs = field.sub(&field.pow(&pi_n, p), &pi_prev);
    let rhs = field.mul(
        &field.pow(&pi_n, p - 1),
        &field.from_rational(rat(p as i64)),
    );
    let v_lhs = field.theta_valuation(&lhs);
    let v_rhs = field.theta_valuation(&rhs);
    let mut report = Report::new(format!("lem10 p={p} n={n}"));
    let ok = match (v_lhs, v_rhs) {
        (Val::Infinite, _) => true,
        (Val::Finite(a), Val::Finite(b)) => a >= b,
        (Val::Finite(_), Val::Infinite) => false,
    };
    report.push(
        "pi_n^p = pi_{n-1} mod pi_n^{p-1} p",
        ok,
        format!("v(diff)={v_lhs} >= v(modulus)={v_rhs}"),
    );

    // v(1 - pi_n^p/pi_{n-1}) >= v(1 - theta_n^p/theta_{n-1})
    let theta_diff = field.sub(&field.pow(&theta_n, p), &theta_prev);
    let lhs_rel = match (v_lhs, field.theta_valuation(&pi_prev)) {
        (Val::Infinite, _) => None,
        (Val::Finite(a), Val::Finite(b)) => Some(a - b),
        _ => unreachable!("pi_{{n-1}} is nonzero"),
    };
    let rhs_rel = match (
        field.theta_valuation(&theta_diff),
        field.theta_valuation(&theta_prev),
    ) {
        (Val::Infinite, _) => None,
        (Val::Finite(a), Val::Finite(b)) => Some(a - b),
        _ => unreachable!("theta_{{n-1}} is nonzero"),
    };
    let ok2 = match (lhs_rel, rhs_rel) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(a), Some(b)) => a >= b,
    };
    report.push(
        "1 - pi_n^p/pi_{n-1} divisible by 1 - theta_n^p/theta_{n-1}",
        ok2,
        format!("relative valuations {lhs_rel:?} >= {rhs_rel:?}"),
    );
    Ok(report)
}

/// mu_{pi_n,Q}(X) = X^{p^{n-1}} + p X^{(p-1)p^{n-2}} - p  modulo p^2.
pub fn verify_eis13(p: u64, n: u32, dim_cap: usize) -> Result<Report, Error> {
    if n < 2 {
        return Err(Error::Parameter("eis13 needs n >= 2".into()));
    }
    let params = TowerParams::with_cap(p, 1, n - 1, dim_cap)?;
    let rel = minpoly_rel(params)?;
    let p2 = BigInt::from(p).pow(2);
    let deg = rel.degree();
    let special = (p - 1).checked_mul(p.pow(n.saturating_sub(2))).unwrap() as usize;

    let mut report = Report::new(format!("eis13 p={p} n={n}"));
    for j in 0..=deg {
        let a = rel.coeff(j);
        // coefficients lie in Z for m = 1
        let c = if a.is_zero() {
            BigInt::zero()
        } else {
            assert_eq!(a.degree(), Some(0));
            let c = qx().coeff(a, 0);
            assert!(c.denom().is_one(), "non-integral coefficient over Q");
            c.numer().clone()
        };
        let expected: BigInt = if j == 0 {
            BigInt::from(-(p as i64))
        } else if j == special {
            BigInt::from(p)
        } else if j == deg {
            BigInt::one()
        } else {
            BigInt::zero()
        };
        let ok = ((&c - &expected) % &p2).is_zero();
        report.push(format!("j={j}"), ok, format!("{c} = {expected} mod {p2}"));
    }
    Ok(report)
}

/// Classifies every index of mu_{pi_{1+i},Q} as exact or non-exact.
pub fn exactness_scan(p: u64, i: u32, dim_cap: usize) -> Result<(Report, usize), Error> {
    let params = TowerParams::with_cap(p, 1, i, dim_cap)?;
    let rel = minpoly_rel(params)?;
    let mut report = Report::new(format!("exactness p={p} i={i}"));
    let mut non_exact = 0usize;
    for vr in verify_th11(&rel) {
        if !vr.exact {
            non_exact += 1;
        }
        report.push(
            format!("j={}", vr.j),
            vr.passed,
            format!("v={} bound={} exact={}", vr.v, vr.bound, vr.exact),
        );
    }
    Ok((report, non_exact))
}

/// Trace of pi_n over Q read off the minimal polynomial: the negated
/// second-highest coefficient of mu_{pi_n,Q}.
pub fn trace_from_minpoly(p: u64, n: u32, dim_cap: usize) -> Result<BigRational, Error> {
    if n < 2 {
        return Err(Error::Parameter("trace from minpoly needs n >= 2".into()));
    }
    let rel = minpoly_rel(TowerParams::with_cap(p, 1, n - 1, dim_cap)?)?;
    let a = rel.coeff(rel.degree() - 1);
    Ok(-qx().coeff(a, 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(c: i64) -> BigRational {
        rat(c)
    }

    #[test]
    fn pi_at_level_one_is_p() {
        for p in [3u64, 5, 7] {
            let (field, pi) = compute_pi(p, 1).unwrap();
            assert_eq!(pi, field.from_rational(int(p as i64)));
        }
    }

    #[test]
    fn pi_level_two_matches_direct_reduction() {
        // oracle: expand (X-1)(X^8-1) and reduce mod Phi_9 by hand-rolled
        // division, independent of the field's product path
        let (field, pi) = compute_pi(3, 2).unwrap();
        let ring = qx();
        let prod = ring.mul(
            &ring.from_coeffs(vec![int(-1), int(1)]),
            &ring.sub(&ring.monomial(int(1), 8), &ring.one()),
        );
        let phi9 = ring.from_coeffs(vec![int(1), int(0), int(0), int(1), int(0), int(0), int(1)]);
        let (_, reduced) = ring.div_rem_monic(&prod, &phi9);
        assert_eq!(pi, reduced);
        // 2 - zeta - zeta^{-1}: zeta^{-1} = zeta^8 = -zeta^5 - zeta^2 mod Phi_9
        assert_eq!(
            pi,
            ring.from_coeffs(vec![int(2), int(-1), int(1), int(0), int(0), int(1)])
        );
        let _ = field;
    }

    #[test]
    fn theta_valuations() {
        let field = CyclotomicField::new(3, 2).unwrap();
        assert_eq!(field.theta_valuation(&field.theta()), Val::Finite(1));
        let pi2 = pi_element(&field, 2);
        assert_eq!(field.theta_valuation(&pi2), Val::Finite(2));
        let p_scalar = field.from_rational(int(3));
        assert_eq!(field.theta_valuation(&p_scalar), Val::Finite(6));
        assert_eq!(field.theta_valuation(&field.zero()), Val::Infinite);
    }

    #[test]
    fn exponent_representatives_well_defined() {
        // e_j = j^{p^{n-1}} mod p^n is unchanged when j shifts by p
        let p = 5u64;
        let n = 2u32;
        let pn = BigInt::from(p).pow(n);
        for j in 1..p {
            let a = BigInt::from(j).modpow(&BigInt::from(p).pow(n - 1), &pn);
            let b = BigInt::from(j + p).modpow(&BigInt::from(p).pow(n - 1), &pn);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn minpoly_3_1_1_golden() {
        // oracle: the minimal polynomial of 2cos(2pi/9) is X^3 - 3X + 1;
        // substituting X -> 2 - X gives X^3 - 6X^2 + 9X - 3 for pi_2
        let rel = minpoly_rel(TowerParams::new(3, 1, 1).unwrap()).unwrap();
        let got: Vec<BigRational> = (0..=3).map(|j| qx().coeff(rel.coeff(j), 0)).collect();
        assert_eq!(got, vec![int(-3), int(9), int(-6), int(1)]);
    }

    #[test]
    fn minpoly_is_eisenstein() {
        for (p, m, i) in [(3u64, 1u32, 1u32), (3, 1, 2), (3, 2, 1), (5, 1, 1)] {
            let params = TowerParams::new(p, m, i).unwrap();
            let rel = minpoly_rel(params).unwrap();
            for j in 0..rel.degree() {
                let v = coeff_valuation(&params, rel.coeff(j));
                assert!(v.at_least(1), "p={p} m={m} i={i} j={j}: v={v}");
                if j == 0 {
                    assert_eq!(v, Val::Finite(1), "constant term has valuation 1");
                }
            }
        }
    }

    #[test]
    fn th11_small_grid() {
        for (p, m, i) in [(3u64, 1u32, 1u32), (3, 1, 2), (3, 2, 1), (5, 1, 1)] {
            let rel = minpoly_rel(TowerParams::new(p, m, i).unwrap()).unwrap();
            let report = verify_th11_report(&rel);
            assert!(report.passed(), "failures: {:?}", report.failures());
        }
    }

    #[test]
    fn th11_spot_values_p3() {
        // from X^3 - 6X^2 + 9X - 3: j=1 below threshold, j=2 above
        let params = TowerParams::new(3, 1, 1).unwrap();
        let rel = minpoly_rel(params).unwrap();
        let reports = verify_th11(&rel);
        assert_eq!(reports[0].j, 1);
        assert_eq!(reports[0].v, Val::Finite(2)); // v_3(1·9) = 2
        assert_eq!(reports[0].bound, 2);
        assert!(reports[0].exact);
        assert_eq!(reports[1].j, 2);
        assert_eq!(reports[1].v, Val::Finite(1)); // v_3(2·(-6)) = 1
        assert_eq!(reports[1].bound, 1);
        assert!(reports[1].exact);
    }

    #[test]
    fn th11_cong_p3() {
        let params = TowerParams::new(3, 1, 1).unwrap();
        let report = verify_th11_cong(params, 1).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures());
    }

    #[test]
    fn cor_diff_p3() {
        let rel = minpoly_rel(TowerParams::new(3, 1, 1).unwrap()).unwrap();
        let report = verify_cor_diff(&rel);
        assert!(report.passed(), "failures: {:?}", report.failures());
    }

    #[test]
    fn lem10_small() {
        let report = verify_lem10(3, 2, DEFAULT_DIM_CAP).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures());
    }

    #[test]
    fn eis13_p3_n2() {
        // X^3 - 6X^2 + 9X - 3 = X^3 + 3X^2 - 3 mod 9
        let report = verify_eis13(3, 2, DEFAULT_DIM_CAP).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures());
    }

    #[test]
    fn exactness_p3() {
        let (report, non_exact) = exactness_scan(3, 1, DEFAULT_DIM_CAP).unwrap();
        assert!(report.passed());
        assert_eq!(non_exact, 0);
    }

    #[test]
    fn cap_refusal() {
        let params = TowerParams::with_cap(7, 2, 2, DEFAULT_DIM_CAP).unwrap();
        assert!(matches!(minpoly_rel(params), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn trace_small() {
        assert_eq!(
            trace_from_minpoly(3, 2, DEFAULT_DIM_CAP).unwrap(),
            int(6)
        );
    }
}
