//! The Carlitz module tower over F_r[Y]: additive polynomials P_e, the
//! Eisenstein polynomials Psi_{f^n}, the quotient fields F_r(Y)(theta_n),
//! the uniformizers varpi_n, their relative minimal polynomials, and the
//! function-field verifiers.

use crate::error::Error;
use crate::fq::{FqElem, FqRing};
use crate::frac::{Frac, FracRing};
use crate::linalg::{solve_unique, LinearSystem};
use crate::poly::{resultant, DensePoly, PolyRing};
use crate::report::{Report, Val, ValuationReport};
use crate::ring::{GcdRing, Ring};

pub const DEFAULT_DIM_CAP: usize = 400;
pub const DISCRIMINANT_CAP: u64 = 100;

pub type PolyY = DensePoly<FqElem>;
pub type QlElem = Frac<PolyY>;
pub type ZlRing = PolyRing<FqRing>;
pub type QlRing = FracRing<ZlRing>;

/// The tower datum: F_r = F_p[Z]/(fq modulus), f monic irreducible in
/// F_r[Y], q = r^{deg f}.
#[derive(Clone, Debug)]
pub struct CarlitzParams {
    pub fq: FqRing,
    pub f: PolyY,
    pub q: u64,
}

impl CarlitzParams {
    pub fn new(fq: FqRing, f: PolyY) -> Result<Self, Error> {
        if fq.p() == 2 {
            return Err(Error::Parameter("p = 2 is out of scope".into()));
        }
        let zl = PolyRing::new(fq.clone());
        let deg = f
            .degree()
            .ok_or_else(|| Error::Parameter("f must be nonzero".into()))?;
        if deg < 1 || !zl.is_monic(&f) {
            return Err(Error::Parameter("f must be monic of degree >= 1".into()));
        }
        if !irreducible_over_fq(&zl, &f) {
            return Err(Error::Parameter("f is reducible over F_r".into()));
        }
        let q = fq
            .order()
            .checked_pow(deg as u32)
            .ok_or_else(|| Error::CapExceeded("q = r^{deg f} overflows".into()))?;
        Ok(CarlitzParams { fq, f, q })
    }

    pub fn r(&self) -> u64 {
        self.fq.order()
    }

    pub fn deg_f(&self) -> usize {
        self.f.degree().unwrap()
    }

    pub fn zl(&self) -> ZlRing {
        PolyRing::new(self.fq.clone())
    }

    pub fn ql(&self) -> QlRing {
        FracRing::new(self.zl())
    }

    /// The q-1 nonzero representatives of (F_r[Y]/f)^* of degree < deg f,
    /// in lexicographic order (constant coefficient fastest).
    pub fn unit_representatives(&self) -> Vec<PolyY> {
        let zl = self.zl();
        let elems = self.fq.all_elements();
        let deg = self.deg_f();
        let mut out = Vec::with_capacity(self.q as usize - 1);
        let mut idx = vec![0usize; deg];
        loop {
            let coeffs: Vec<FqElem> = idx.iter().map(|&i| elems[i].clone()).collect();
            let e = zl.from_coeffs(coeffs);
            if !e.is_zero() {
                out.push(e);
            }
            let mut k = 0;
            loop {
                if k == deg {
                    return out;
                }
                idx[k] += 1;
                if idx[k] < elems.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }
}

fn irreducible_over_fq(zl: &ZlRing, f: &PolyY) -> bool {
    let deg = f.degree().unwrap();
    let elems = zl.base.all_elements();
    // trial division by every monic polynomial of degree in [1, deg/2]
    for d in 1..=deg / 2 {
        let mut idx = vec![0usize; d];
        loop {
            let mut coeffs: Vec<FqElem> = idx.iter().map(|&i| elems[i].clone()).collect();
            coeffs.push(zl.base.one());
            let div = zl.from_coeffs(coeffs);
            let (_, rem) = zl.div_rem_monic(f, &div);
            if rem.is_zero() {
                return false;
            }
            let mut k = 0;
            loop {
                if k == d {
                    break;
                }
                idx[k] += 1;
                if idx[k] < elems.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if idx.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    true
}

/// v_f of a nonzero element of F_r[Y]; None for 0.
pub fn zl_val_f(zl: &ZlRing, f: &PolyY, a: &PolyY) -> Option<u64> {
    if a.is_zero() {
        return None;
    }
    let mut v = 0;
    let mut a = a.clone();
    while let Ok(q) = zl.exact_div(&a, f) {
        v += 1;
        a = q;
    }
    Some(v)
}

/// An F_r-linear (additive) polynomial: only monomials X^{r^k} occur;
/// coeffs[k] is the coefficient of X^{r^k}.
#[derive(Clone, Debug, PartialEq)]
pub struct AdditivePoly {
    pub coeffs: Vec<PolyY>,
}

impl AdditivePoly {
    pub fn to_poly_x(&self, params: &CarlitzParams) -> DensePoly<PolyY> {
        let zl = params.zl();
        let zlx = PolyRing::new(zl);
        let r = params.r();
        let mut acc = zlx.zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let e = (r as usize).pow(k as u32);
            acc = zlx.add(&acc, &zlx.monomial(c.clone(), e));
        }
        acc
    }
}

/// P_e(X), built F_r[Y]-linearly from P_1 = X and the composition recursion
/// P_{Y^{t+1}}(X) = Y P_{Y^t}(X) + (P_{Y^t}(X))^r.
pub fn carlitz_poly(params: &CarlitzParams, e: &PolyY) -> AdditivePoly {
    let zl = params.zl();
    let r = params.r();
    if e.is_zero() {
        return AdditivePoly { coeffs: vec![] };
    }
    let deg = e.degree().unwrap();
    // towers[t] = P_{Y^t}
    let mut towers: Vec<Vec<PolyY>> = Vec::with_capacity(deg + 1);
    towers.push(vec![zl.one()]);
    for t in 0..deg {
        let prev = &towers[t];
        let mut next = vec![zl.zero(); prev.len() + 1];
        for (k, c) in prev.iter().enumerate() {
            // Y * c X^{r^k}
            next[k] = zl.add(&next[k], &zl.mul(&zl.gen(), c));
            // (c X^{r^k})^r = c^r X^{r^{k+1}}
            next[k + 1] = zl.add(&next[k + 1], &zl.pow(c, r));
        }
        towers.push(next);
    }
    let mut coeffs = vec![zl.zero(); deg + 1];
    for (t, scalar) in e.coeffs().iter().enumerate() {
        if params.fq.is_zero(scalar) {
            continue;
        }
        let sc = zl.constant(scalar.clone());
        for (k, c) in towers[t].iter().enumerate() {
            coeffs[k] = zl.add(&coeffs[k], &zl.mul(&sc, c));
        }
    }
    while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
    let out = AdditivePoly { coeffs };
    debug_assert!(out.coeffs.first().map(|c| c == e).unwrap_or(e.is_zero()));
    out
}

/// F_r(Y)(theta_n) presented as Ql[X]/Psi_{f^n}(X).
#[derive(Clone, Debug)]
pub struct ThetaField {
    pub params: CarlitzParams,
    pub n: u32,
    /// Psi_{f^n} over F_r[Y]
    pub psi_zl: DensePoly<PolyY>,
    modulus: DensePoly<QlElem>,
    dim: usize,
}

pub type ThetaElt = DensePoly<QlElem>;

/// Psi_{f^n} = P_{f^n}/P_{f^{n-1}}, with the Eisenstein-at-f shape asserted.
pub fn psi(params: &CarlitzParams, n: u32) -> Result<ThetaField, Error> {
    if n < 1 {
        return Err(Error::Parameter("n must be >= 1".into()));
    }
    let zl = params.zl();
    let zlx = PolyRing::new(zl.clone());
    let fn_pow = zl.pow(&params.f, n as u64);
    let fn_prev = zl.pow(&params.f, (n - 1) as u64);
    let num = carlitz_poly(params, &fn_pow).to_poly_x(params);
    let den = carlitz_poly(params, &fn_prev).to_poly_x(params);
    let psi_zl = zlx
        .exact_div(&num, &den)
        .map_err(|_| Error::Internal("P_{f^n} not divisible by P_{f^{n-1}}".into()))?;

    let q = params.q;
    let dim = ((q - 1) * q.pow(n - 1)) as usize;
    if psi_zl.degree() != Some(dim) || !zlx.is_monic(&psi_zl) {
        return Err(Error::Internal("Psi has wrong degree or is not monic".into()));
    }
    if zlx.coeff(&psi_zl, 0) != params.f {
        return Err(Error::Internal("Psi(0) != f".into()));
    }
    for k in 0..dim {
        let c = zlx.coeff(&psi_zl, k);
        if !c.is_zero() && zl.exact_div(&c, &params.f).is_err() {
            return Err(Error::Internal(format!(
                "coefficient of X^{k} in Psi is not divisible by f"
            )));
        }
    }

    let ql = params.ql();
    let modulus = PolyRing::new(ql.clone()).from_coeffs(
        psi_zl.coeffs().iter().map(|c| ql.from_base(c.clone())).collect(),
    );
    Ok(ThetaField {
        params: params.clone(),
        n,
        psi_zl,
        modulus,
        dim,
    })
}

impl ThetaField {
    fn qlx(&self) -> PolyRing<QlRing> {
        PolyRing::new(self.params.ql())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn zero(&self) -> ThetaElt {
        self.qlx().zero()
    }

    pub fn one(&self) -> ThetaElt {
        self.qlx().one()
    }

    pub fn scalar(&self, c: QlElem) -> ThetaElt {
        self.qlx().constant(c)
    }

    pub fn scalar_zl(&self, c: PolyY) -> ThetaElt {
        self.scalar(self.params.ql().from_base(c))
    }

    pub fn theta(&self) -> ThetaElt {
        self.qlx().gen()
    }

    pub fn reduce(&self, a: &ThetaElt) -> ThetaElt {
        let (_, r) = self.qlx().div_rem_monic(a, &self.modulus);
        r
    }

    pub fn add(&self, a: &ThetaElt, b: &ThetaElt) -> ThetaElt {
        self.qlx().add(a, b)
    }

    pub fn sub(&self, a: &ThetaElt, b: &ThetaElt) -> ThetaElt {
        self.qlx().sub(a, b)
    }

    pub fn mul(&self, a: &ThetaElt, b: &ThetaElt) -> ThetaElt {
        self.reduce(&self.qlx().mul(a, b))
    }

    pub fn pow(&self, a: &ThetaElt, mut e: u64) -> ThetaElt {
        let mut acc = self.one();
        let mut base = a.clone();
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

    /// v_{theta_n}(x), via v_f of the resultant with Psi_{f^n} after
    /// clearing denominators.
    pub fn theta_valuation(&self, x: &ThetaElt) -> Val {
        if x.is_zero() {
            return Val::Infinite;
        }
        let zl = self.params.zl();
        let mut den = zl.one();
        for c in x.coeffs() {
            let g = zl.gcd(&den, &c.den);
            let extra = zl.exact_div(&c.den, &g).expect("gcd divides");
            den = zl.mul(&den, &extra);
        }
        let zlx = PolyRing::new(zl.clone());
        let cleared = zlx.from_coeffs(
            x.coeffs()
                .iter()
                .map(|c| {
                    let factor = zl.exact_div(&den, &c.den).expect("common denominator");
                    zl.mul(&c.num, &factor)
                })
                .collect(),
        );
        let res = resultant(&zlx, &self.psi_zl, &cleared).expect("nonzero inputs");
        match zl_val_f(&zl, &self.params.f, &res) {
            None => Val::Infinite, // x is a zero divisor image: cannot happen for field elements
            Some(v) => {
                let correction =
                    self.dim as i64 * zl_val_f(&zl, &self.params.f, &den).unwrap() as i64;
                Val::Finite(v as i64 - correction)
            }
        }
    }
}

/// e mod f^n, then P_{e mod f^n}(x) evaluated in the quotient.
pub fn module_power(field: &ThetaField, x: &ThetaElt, e: &PolyY) -> ThetaElt {
    let zl = field.params.zl();
    let modulus = zl.pow(&field.params.f, field.n as u64);
    let (_, reduced) = zl.div_rem_monic(e, &modulus);
    let ap = carlitz_poly(&field.params, &reduced);
    let r = field.params.r();
    let mut acc = field.zero();
    let mut xr = x.clone();
    for (k, c) in ap.coeffs.iter().enumerate() {
        if k > 0 {
            xr = field.pow(&xr, r);
        }
        if !c.is_zero() {
            acc = field.add(&acc, &field.mul(&field.scalar_zl(c.clone()), &xr));
        }
    }
    acc
}

/// x^g for g in F_r[Y]/f^n given as base^exp mod f^n.
fn modpow_zl(zl: &ZlRing, base: &PolyY, mut exp: u64, modulus: &PolyY) -> PolyY {
    let mut acc = zl.one();
    let (_, mut b) = zl.div_rem_monic(base, modulus);
    while exp > 0 {
        if exp & 1 == 1 {
            let (_, t) = zl.div_rem_monic(&zl.mul(&acc, &b), modulus);
            acc = t;
        }
        exp >>= 1;
        if exp > 0 {
            let (_, t) = zl.div_rem_monic(&zl.mul(&b, &b), modulus);
            b = t;
        }
    }
    acc
}

/// varpi_m as an element of F_r(Y)(theta_n) for m <= n: theta_m is the
/// i-fold module power theta_n^{f^{n-m}}, and varpi_m is the product of its
/// e^{q^{m-1}}-th module powers over the unit representatives e.
pub fn varpi_element(field: &ThetaField, m: u32) -> Result<ThetaElt, Error> {
    assert!(m >= 1 && m <= field.n);
    let params = &field.params;
    let zl = params.zl();
    let mut t = field.theta();
    for _ in 0..field.n - m {
        t = module_power(field, &t, &params.f);
    }
    let exp = params
        .q
        .checked_pow(m - 1)
        .ok_or_else(|| Error::CapExceeded("q^{m-1} overflows".into()))?;
    let fm = zl.pow(&params.f, m as u64);
    let mut acc = field.one();
    for e in params.unit_representatives() {
        let g = modpow_zl(&zl, &e, exp, &fm);
        acc = field.mul(&acc, &module_power(field, &t, &g));
    }
    Ok(acc)
}

pub fn compute_varpi(field: &ThetaField) -> Result<ThetaElt, Error> {
    varpi_element(field, field.n)
}

/// Parameters of the relative step over the fixed field of level m.
#[derive(Clone, Copy, Debug)]
pub struct TowerParamsFF {
    pub m: u32,
    pub i: u32,
    pub dim_cap: usize,
}

impl TowerParamsFF {
    pub fn new(m: u32, i: u32) -> Result<Self, Error> {
        Self::with_cap(m, i, DEFAULT_DIM_CAP)
    }

    pub fn with_cap(m: u32, i: u32, dim_cap: usize) -> Result<Self, Error> {
        if m < 1 || i < 1 {
            return Err(Error::Parameter("m and i must be >= 1".into()));
        }
        Ok(TowerParamsFF { m, i, dim_cap })
    }
}

/// mu_{varpi_{m+i}, E_m}: monic of degree q^i; each coefficient is a
/// polynomial in varpi_m of degree < q^{m-1} over F_r(Y).
#[derive(Clone, Debug)]
pub struct RelMinPolyFF {
    pub params: CarlitzParams,
    pub tower: TowerParamsFF,
    pub coeffs: Vec<DensePoly<QlElem>>,
}

impl RelMinPolyFF {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, j: usize) -> &DensePoly<QlElem> {
        &self.coeffs[j]
    }
}

fn checked_dim(params: &CarlitzParams, n: u32, cap: usize) -> Result<u64, Error> {
    let q = params.q;
    let dim = q
        .checked_pow(n - 1)
        .and_then(|x| x.checked_mul(q - 1))
        .ok_or_else(|| Error::CapExceeded("dimension overflows".into()))?;
    if dim > cap as u64 {
        return Err(Error::CapExceeded(format!(
            "ambient dimension {dim} exceeds cap {cap}"
        )));
    }
    Ok(dim)
}

/// Finds the unique monic degree-q^i relation over E_m annihilating
/// varpi_{m+i}, by exact linear algebra over F_r(Y) in the theta power basis.
pub fn minpoly_rel_ff(
    params: &CarlitzParams,
    tower: TowerParamsFF,
) -> Result<RelMinPolyFF, Error> {
    let TowerParamsFF { m, i, dim_cap } = tower;
    let n = m + i;
    checked_dim(params, n, dim_cap)?;
    let field = psi(params, n)?;
    let q = params.q;
    let deg = q.pow(i) as usize;
    let base_dim = q.pow(m - 1) as usize;

    let w_hi = compute_varpi(&field)?;
    let w_lo = varpi_element(&field, m)?;

    let mut hi_pows = Vec::with_capacity(deg + 1);
    hi_pows.push(field.one());
    for _ in 0..deg {
        let next = field.mul(hi_pows.last().unwrap(), &w_hi);
        hi_pows.push(next);
    }
    let mut lo_pows = Vec::with_capacity(base_dim);
    lo_pows.push(field.one());
    for _ in 1..base_dim {
        let next = field.mul(lo_pows.last().unwrap(), &w_lo);
        lo_pows.push(next);
    }

    let ql = params.ql();
    let qlx = PolyRing::new(ql.clone());
    let dim = field.dim();
    let cols = deg * base_dim;
    let mut matrix = vec![vec![ql.zero(); cols]; dim];
    for j in 0..deg {
        for k in 0..base_dim {
            let col = field.mul(&hi_pows[j], &lo_pows[k]);
            for (row, slot) in matrix.iter_mut().enumerate() {
                slot[j * base_dim + k] = qlx.coeff(&col, row);
            }
        }
    }
    let rhs: Vec<QlElem> = (0..dim)
        .map(|row| ql.neg(&qlx.coeff(&hi_pows[deg], row)))
        .collect();
    let solution = solve_unique(&ql, &LinearSystem::new(matrix, rhs))
        .map_err(|e| Error::Internal(format!("minimal-polynomial system failed: {e}")))?;

    let zl = params.zl();
    let mut coeffs: Vec<DensePoly<QlElem>> = Vec::with_capacity(deg + 1);
    for j in 0..deg {
        let piece = qlx.from_coeffs(solution[j * base_dim..(j + 1) * base_dim].to_vec());
        for c in piece.coeffs() {
            if zl_val_f(&zl, &params.f, &c.den) != Some(0) {
                return Err(Error::Internal("coefficient is not f-integral".into()));
            }
        }
        coeffs.push(piece);
    }
    coeffs.push(qlx.one());

    // annihilation check
    let mut acc = field.zero();
    for (j, piece) in coeffs.iter().enumerate() {
        let mut base_elt = field.zero();
        for (k, c) in piece.coeffs().iter().enumerate() {
            base_elt = field.add(&base_elt, &field.mul(&lo_pows[k], &field.scalar(c.clone())));
        }
        acc = field.add(&acc, &field.mul(&base_elt, &hi_pows[j]));
    }
    if !acc.is_zero() {
        return Err(Error::Internal(
            "relative minimal polynomial does not annihilate".into(),
        ));
    }

    // Eisenstein shape: constant term equals -varpi_m
    let expect = if base_dim == 1 {
        qlx.constant(ql.neg(&ql.from_base(params.f.clone())))
    } else {
        qlx.monomial(ql.from_i64(-1), 1)
    };
    if coeffs[0] != expect {
        return Err(Error::Internal("constant term is not -varpi_m".into()));
    }

    Ok(RelMinPolyFF {
        params: params.clone(),
        tower,
        coeffs,
    })
}

/// v_{varpi_m} of a coefficient polynomial, as v_{theta_m}/(q-1) after
/// evaluating at varpi_m in the level-m field.
pub fn coeff_valuation_ff(
    params: &CarlitzParams,
    m: u32,
    a: &DensePoly<QlElem>,
) -> Result<Val, Error> {
    let field = psi(params, m)?;
    let w = compute_varpi(&field)?;
    let mut elt = field.zero();
    let mut pow = field.one();
    for (k, c) in a.coeffs().iter().enumerate() {
        if k > 0 {
            pow = field.mul(&pow, &w);
        }
        elt = field.add(&elt, &field.mul(&pow, &field.scalar(c.clone())));
    }
    match field.theta_valuation(&elt) {
        Val::Infinite => Ok(Val::Infinite),
        Val::Finite(v) => {
            let e = params.q as i64 - 1;
            if v % e != 0 {
                return Err(Error::Internal(format!(
                    "theta-valuation {v} not divisible by ramification index {e}"
                )));
            }
            Ok(Val::Finite(v / e))
        }
    }
}

/// max alpha with q^alpha | j.
pub fn v_q(q: u64, j: u64) -> u32 {
    let mut v = 0;
    let mut j = j;
    while j % q == 0 {
        j /= q;
        v += 1;
    }
    v
}

/// f^{i - v_q(j)} | a_{i,j}, sharpened by one varpi_m factor below the
/// threshold j < q^i (q-2)/(q-1).
pub fn verify_th11a(rel: &RelMinPolyFF) -> Result<Report, Error> {
    let params = &rel.params;
    let TowerParamsFF { m, i, .. } = rel.tower;
    let q = params.q;
    let e = q.pow(m - 1) as i64;
    let mut report = Report::new(format!(
        "th11a r={} f={} m={m} i={i}",
        params.r(),
        poly_y_str(params, &params.f)
    ));
    for j in 1..rel.degree() as u64 {
        let v = coeff_valuation_ff(params, m, rel.coeff(j as usize))?;
        let mut bound = (i - v_q(q, j)) as i64 * e;
        if j * (q - 1) < q.pow(i) * (q - 2) {
            bound += 1;
        }
        let vr = ValuationReport::new(j as usize, v, bound);
        report.push_valuation(format!("j={j}"), &vr);
    }
    Ok(report)
}

/// a_{i,j} = a_{i+beta, q^beta j} modulo f^{i+1}.
pub fn verify_th11a_cong(
    params: &CarlitzParams,
    tower: TowerParamsFF,
    beta: u32,
) -> Result<Report, Error> {
    let rel_lo = minpoly_rel_ff(params, tower)?;
    let hi = TowerParamsFF::with_cap(tower.m, tower.i + beta, tower.dim_cap)?;
    let rel_hi = minpoly_rel_ff(params, hi)?;
    let q = params.q;
    let e = q.pow(tower.m - 1) as i64;
    let qb = q.pow(beta) as usize;
    let qlx = PolyRing::new(params.ql());

    let mut report = Report::new(format!(
        "th11a-cong r={} f={} m={} i={} beta={beta}",
        params.r(),
        poly_y_str(params, &params.f),
        tower.m,
        tower.i
    ));
    for j in 1..rel_lo.degree() {
        let diff = qlx.sub(rel_lo.coeff(j), rel_hi.coeff(qb * j));
        let v = coeff_valuation_ff(params, tower.m, &diff)?;
        let mut bound = (tower.i as i64 + 1) * e;
        if (j as u64) * (q - 1) < q.pow(tower.i) * (q - 2) {
            bound += 1;
        }
        let vr = ValuationReport::new(j, v, bound);
        report.push_valuation(format!("j={j}"), &vr);
    }
    Ok(report)
}

/// Exact valuations v(a_{i,j*}) = (i-beta) q^{m-1} at
/// j* = q^i - (q^i - q^beta)/(q-1).
pub fn verify_cor_diff2(rel: &RelMinPolyFF) -> Result<Report, Error> {
    let params = &rel.params;
    let TowerParamsFF { m, i, .. } = rel.tower;
    let q = params.q;
    let e = q.pow(m - 1) as i64;
    let mut report = Report::new(format!(
        "cordiff2 r={} f={} m={m} i={i}",
        params.r(),
        poly_y_str(params, &params.f)
    ));
    for beta in 0..i {
        let qi = q.pow(i);
        let jstar = (qi - (qi - q.pow(beta)) / (q - 1)) as usize;
        let v = coeff_valuation_ff(params, m, rel.coeff(jstar))?;
        let want = (i - beta) as i64 * e;
        report.push(
            format!("beta={beta}"),
            v == Val::Finite(want),
            format!("j*={jstar} v={v} expected exactly {want}"),
        );
    }
    Ok(report)
}

/// varpi_n^q = varpi_{n-1} modulo varpi_n^{q-1} f.
pub fn verify_lem10a(params: &CarlitzParams, n: u32, dim_cap: usize) -> Result<Report, Error> {
    if n < 2 {
        return Err(Error::Parameter("lem10a needs n >= 2".into()));
    }
    checked_dim(params, n, dim_cap)?;
    let field = psi(params, n)?;
    let w_n = compute_varpi(&field)?;
    let w_prev = varpi_element(&field, n - 1)?;
    let lhs = field.sub(&field.pow(&w_n, params.q), &w_prev);
    let rhs = field.mul(
        &field.pow(&w_n, params.q - 1),
        &field.scalar_zl(params.f.clone()),
    );
    let v_lhs = field.theta_valuation(&lhs);
    let v_rhs = field.theta_valuation(&rhs);
    let ok = match (v_lhs, v_rhs) {
        (Val::Infinite, _) => true,
        (Val::Finite(a), Val::Finite(b)) => a >= b,
        (Val::Finite(_), Val::Infinite) => false,
    };
    let mut report = Report::new(format!(
        "lem10a r={} f={} n={n}",
        params.r(),
        poly_y_str(params, &params.f)
    ));
    report.push(
        "varpi_n^q = varpi_{n-1} mod varpi_n^{q-1} f",
        ok,
        format!("v(diff)={v_lhs} >= v(modulus)={v_rhs}"),
    );
    Ok(report)
}

fn require_f_is_y(params: &CarlitzParams) -> Result<(), Error> {
    let zl = params.zl();
    if params.f != zl.gen() {
        return Err(Error::Parameter("this check requires f = Y".into()));
    }
    Ok(())
}

/// For f = Y: mu = X^{q^i} + Y X^{(q-1)q^{i-1}} - varpi_m modulo Y^2,
/// decided by v_{varpi_m}(difference) >= 2 q^{m-1}.
pub fn verify_cor_bu(params: &CarlitzParams, tower: TowerParamsFF) -> Result<Report, Error> {
    require_f_is_y(params)?;
    let rel = minpoly_rel_ff(params, tower)?;
    let TowerParamsFF { m, i, .. } = tower;
    let q = params.q;
    let ql = params.ql();
    let qlx = PolyRing::new(ql.clone());
    let zl = params.zl();
    let base_dim = q.pow(m - 1) as usize;
    let special = ((q - 1) * q.pow(i - 1)) as usize;
    let deg = rel.degree();

    let mut report = Report::new(format!("corbu r={} m={m} i={i}", params.r()));
    for j in 0..=deg {
        let expected = if j == 0 {
            if base_dim == 1 {
                qlx.constant(ql.neg(&ql.from_base(params.f.clone())))
            } else {
                qlx.monomial(ql.from_i64(-1), 1)
            }
        } else if j == special {
            qlx.constant(ql.from_base(zl.gen()))
        } else if j == deg {
            qlx.one()
        } else {
            qlx.zero()
        };
        let diff = qlx.sub(rel.coeff(j), &expected);
        let v = coeff_valuation_ff(params, m, &diff)?;
        let bound = 2 * q.pow(m - 1) as i64;
        report.push(
            format!("j={j}"),
            v.at_least(bound),
            format!("v(diff)={v} >= {bound}"),
        );
    }
    Ok(report)
}

/// The base-q digit conditions of the zero/valuation conjecture for f = Y:
/// writing q^i - j = sum d_k q^k, condition (i) is d_{k+1} < d_k for some k,
/// condition (ii) is v_p(d_{k+1}) > v_p(d_k) for some k (v_p(0) infinite);
/// either predicts a_{i,j} = 0, otherwise v(a_{i,j}) = q^{m-1} sum d_k.
pub fn conjecture_scan(params: &CarlitzParams, tower: TowerParamsFF) -> Result<Report, Error> {
    require_f_is_y(params)?;
    let rel = minpoly_rel_ff(params, tower)?;
    let TowerParamsFF { m, i, .. } = tower;
    let q = params.q;
    let p = params.fq.p();
    let vp = |d: u64| -> Option<u32> {
        if d == 0 {
            return None; // infinite
        }
        let mut v = 0;
        let mut d = d;
        while d % p == 0 {
            d /= p;
            v += 1;
        }
        Some(v)
    };

    let mut report = Report::experimental(format!(
        "conj-car12 r={} m={m} i={i}",
        params.r()
    ));
    for j in 1..=q.pow(i) {
        let mut rest = q.pow(i) - j;
        let mut digits = Vec::with_capacity(i as usize);
        for _ in 0..i {
            digits.push(rest % q);
            rest /= q;
        }
        let cond_i = digits.windows(2).any(|w| w[1] < w[0]);
        let cond_ii = digits.windows(2).any(|w| match (vp(w[1]), vp(w[0])) {
            (None, None) => false,
            (None, Some(_)) => true,
            (Some(_), None) => false,
            (Some(a), Some(b)) => a > b,
        });
        let v = coeff_valuation_ff(params, m, rel.coeff(j as usize))?;
        let (verdict, detail) = if cond_i || cond_ii {
            (
                v == Val::Infinite,
                format!("predicted a=0, v={v}"),
            )
        } else {
            let want = q.pow(m - 1) as i64 * digits.iter().sum::<u64>() as i64;
            (
                v == Val::Finite(want),
                format!("predicted v={want}, got v={v}"),
            )
        };
        report.push(format!("j={j}"), verdict, detail);
    }
    Ok(report)
}

/// disc(Psi_{f^n}) equals f^{q^{n-1}(nq-n-1)} up to a scalar in F_r^*.
pub fn discriminant_check(params: &CarlitzParams, n: u32) -> Result<Report, Error> {
    let dim = checked_dim(params, n, DISCRIMINANT_CAP as usize)?;
    let field = psi(params, n)?;
    let zl = params.zl();
    let zlx = PolyRing::new(zl.clone());
    let d = dim as usize;
    let res = resultant(&zlx, &field.psi_zl, &zlx.derivative(&field.psi_zl))?;
    let disc = if (d * (d - 1) / 2) % 2 == 1 {
        zl.neg(&res)
    } else {
        res
    };
    let expected_exp = params.q.pow(n - 1) * ((n as u64) * params.q - n as u64 - 1);
    let v = zl_val_f(&zl, &params.f, &disc);
    let mut report = Report::new(format!(
        "disc r={} f={} n={n}",
        params.r(),
        poly_y_str(params, &params.f)
    ));
    let ok = match v {
        Some(v) if v == expected_exp => {
            let unit = zl
                .exact_div(&disc, &zl.pow(&params.f, expected_exp))
                .expect("valuation counted");
            unit.degree() == Some(0)
        }
        _ => false,
    };
    report.push(
        "disc = unit * f^{q^{n-1}(nq-n-1)}",
        ok,
        format!("v_f(disc)={v:?} expected {expected_exp}"),
    );
    Ok(report)
}

/// For f = Y, the closed form mu_{varpi_{m+1}, E_m} = -varpi_m +
/// sum_{j in [1,q]} Y^{q-j} X^j, compared coefficient by coefficient.
pub fn verify_car11(params: &CarlitzParams, m: u32, dim_cap: usize) -> Result<Report, Error> {
    require_f_is_y(params)?;
    let rel = minpoly_rel_ff(params, TowerParamsFF::with_cap(m, 1, dim_cap)?)?;
    let q = params.q;
    let ql = params.ql();
    let qlx = PolyRing::new(ql.clone());
    let zl = params.zl();
    let base_dim = q.pow(m - 1) as usize;

    let mut report = Report::new(format!("car11 r={} m={m}", params.r()));
    for j in 0..=q as usize {
        let expected = if j == 0 {
            if base_dim == 1 {
                qlx.constant(ql.neg(&ql.from_base(zl.gen())))
            } else {
                qlx.monomial(ql.from_i64(-1), 1)
            }
        } else {
            qlx.constant(ql.from_base(zl.monomial(params.fq.one(), q as usize - j)))
        };
        let ok = rel.coeff(j) == &expected;
        report.push(format!("j={j}"), ok, format!("closed-form match: {ok}"));
    }
    Ok(report)
}

fn poly_y_str(params: &CarlitzParams, f: &PolyY) -> String {
    // compact display: comma-separated coefficient list, low to high
    let _ = params;
    let parts: Vec<String> = f
        .coeffs()
        .iter()
        .map(|c| {
            if c.len() <= 1 {
                format!("{}", c.first().copied().unwrap_or(0))
            } else {
                format!("({c:?})")
            }
        })
        .collect();
    parts.join(",")
}
