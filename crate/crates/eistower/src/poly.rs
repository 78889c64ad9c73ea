//! Dense univariate polynomials over a pluggable coefficient ring.
//!
//! Canonical form: no trailing zero coefficients, the zero polynomial is the
//! empty coefficient vector. All operations go through a ring object, so the
//! same code serves Z[X], Q[X], F_r[Y], F_r[Y][X] and F_r(Y)[X].

use std::fmt::Debug;

use crate::error::Error;
use crate::ring::{Field, GcdRing, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensePoly<T> {
    coeffs: Vec<T>,
}

impl<T> DensePoly<T> {
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
}

/// The polynomial ring R[X] as a ring object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing<R> {
    pub base: R,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing { base }
    }

    pub fn from_coeffs(&self, coeffs: Vec<R::Elem>) -> DensePoly<R::Elem> {
        let mut coeffs = coeffs;
        while coeffs.last().map(|c| self.base.is_zero(c)).unwrap_or(false) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn constant(&self, c: R::Elem) -> DensePoly<R::Elem> {
        self.from_coeffs(vec![c])
    }

    pub fn gen(&self) -> DensePoly<R::Elem> {
        self.from_coeffs(vec![self.base.zero(), self.base.one()])
    }

    /// c·X^k
    pub fn monomial(&self, c: R::Elem, k: usize) -> DensePoly<R::Elem> {
        if self.base.is_zero(&c) {
            return self.zero();
        }
        let mut coeffs = vec![self.base.zero(); k + 1];
        coeffs[k] = c;
        DensePoly { coeffs }
    }

    pub fn coeff(&self, a: &DensePoly<R::Elem>, k: usize) -> R::Elem {
        a.coeffs.get(k).cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn leading(&self, a: &DensePoly<R::Elem>) -> R::Elem {
        a.coeffs.last().cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn is_monic(&self, a: &DensePoly<R::Elem>) -> bool {
        !a.is_zero() && self.base.eq(&self.leading(a), &self.base.one())
    }

    pub fn scale(&self, a: &DensePoly<R::Elem>, c: &R::Elem) -> DensePoly<R::Elem> {
        self.from_coeffs(a.coeffs.iter().map(|x| self.base.mul(x, c)).collect())
    }

    /// a·X^k
    pub fn shift(&self, a: &DensePoly<R::Elem>, k: usize) -> DensePoly<R::Elem> {
        if a.is_zero() {
            return self.zero();
        }
        let mut coeffs = vec![self.base.zero(); k];
        coeffs.extend(a.coeffs.iter().cloned());
        DensePoly { coeffs }
    }

    pub fn derivative(&self, a: &DensePoly<R::Elem>) -> DensePoly<R::Elem> {
        if a.coeffs.len() <= 1 {
            return self.zero();
        }
        let coeffs = a
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| self.base.mul(c, &self.base.from_i64(k as i64)))
            .collect();
        self.from_coeffs(coeffs)
    }

    pub fn evaluate(&self, a: &DensePoly<R::Elem>, x: &R::Elem) -> R::Elem {
        let mut acc = self.base.zero();
        for c in a.coeffs.iter().rev() {
            acc = self.base.add(&self.base.mul(&acc, x), c);
        }
        acc
    }

    /// a(b(X))
    pub fn compose(
        &self,
        a: &DensePoly<R::Elem>,
        b: &DensePoly<R::Elem>,
    ) -> DensePoly<R::Elem> {
        let mut acc = self.zero();
        for c in a.coeffs.iter().rev() {
            acc = self.add(&self.mul(&acc, b), &self.constant(c.clone()));
        }
        acc
    }

    /// Quotient and remainder by a monic divisor; exact in any ring.
    pub fn div_rem_monic(
        &self,
        a: &DensePoly<R::Elem>,
        b: &DensePoly<R::Elem>,
    ) -> (DensePoly<R::Elem>, DensePoly<R::Elem>) {
        assert!(self.is_monic(b), "divisor must be monic");
        let db = b.degree().unwrap();
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return (self.zero(), a.clone());
        }
        let mut quot = vec![self.base.zero(); rem.len() - db];
        while rem.len() > db {
            let top = rem.len() - 1;
            let c = rem[top].clone();
            if !self.base.is_zero(&c) {
                quot[top - db] = c.clone();
                for k in 0..db {
                    let t = self.base.mul(&c, &b.coeffs[k]);
                    rem[top - db + k] = self.base.sub(&rem[top - db + k], &t);
                }
            }
            rem.pop();
        }
        (self.from_coeffs(quot), self.from_coeffs(rem))
    }

    /// Exact division: returns q with a = q·b, or an error when the division
    /// leaves a remainder (in the coefficients or at the end).
    pub fn exact_div(
        &self,
        a: &DensePoly<R::Elem>,
        b: &DensePoly<R::Elem>,
    ) -> Result<DensePoly<R::Elem>, Error> {
        if b.is_zero() {
            return Err(Error::InexactDivision);
        }
        if a.is_zero() {
            return Ok(self.zero());
        }
        let db = b.degree().unwrap();
        let lb = self.leading(b);
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return Err(Error::InexactDivision);
        }
        let mut quot = vec![self.base.zero(); rem.len() - db];
        while rem.len() > db {
            let top = rem.len() - 1;
            let c = rem[top].clone();
            if !self.base.is_zero(&c) {
                let q = self
                    .base
                    .exact_div(&c, &lb)
                    .ok_or(Error::InexactDivision)?;
                quot[top - db] = q.clone();
                for k in 0..db {
                    let t = self.base.mul(&q, &b.coeffs[k]);
                    rem[top - db + k] = self.base.sub(&rem[top - db + k], &t);
                }
            }
            rem.pop();
        }
        if rem.iter().any(|c| !self.base.is_zero(c)) {
            return Err(Error::InexactDivision);
        }
        Ok(self.from_coeffs(quot))
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = DensePoly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        DensePoly { coeffs: vec![] }
    }
    fn one(&self) -> Self::Elem {
        DensePoly {
            coeffs: vec![self.base.one()],
        }
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.coeffs.is_empty()
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        DensePoly {
            coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect(),
        }
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.coeffs.len().max(b.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let x = a.coeffs.get(i);
            let y = b.coeffs.get(i);
            out.push(match (x, y) {
                (Some(x), Some(y)) => self.base.add(x, y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => y.clone(),
                (None, None) => unreachable!(),
            });
        }
        self.from_coeffs(out)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut out = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] = self.base.add(&out[i + j], &self.base.mul(x, y));
            }
        }
        self.from_coeffs(out)
    }
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        PolyRing::exact_div(self, a, b).ok()
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_coeffs(vec![self.base.from_i64(n)])
    }
}

impl<F: Field> PolyRing<F> {
    /// Quotient and remainder over field coefficients.
    pub fn div_rem(
        &self,
        a: &DensePoly<F::Elem>,
        b: &DensePoly<F::Elem>,
    ) -> (DensePoly<F::Elem>, DensePoly<F::Elem>) {
        assert!(!b.is_zero(), "division by zero polynomial");
        let inv = self.base.inv(&self.leading(b));
        let monic = self.scale(b, &inv);
        let (q, r) = self.div_rem_monic(a, &monic);
        (self.scale(&q, &inv), r)
    }

    pub fn monic(&self, a: &DensePoly<F::Elem>) -> DensePoly<F::Elem> {
        if a.is_zero() {
            return self.zero();
        }
        self.scale(a, &self.base.inv(&self.leading(a)))
    }
}

impl<F: Field> GcdRing for PolyRing<F> {
    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let (_, r) = self.div_rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }
    fn normalize(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem) {
        if a.is_zero() {
            return (self.one(), self.zero());
        }
        let u = self.base.inv(&self.leading(a));
        (self.constant(u.clone()), self.scale(a, &u))
    }
}

/// Pseudo-remainder: returns lc(b)^(deg a - deg b + 1) · a mod b.
fn pseudo_rem<R: Ring>(
    ring: &PolyRing<R>,
    a: &DensePoly<R::Elem>,
    b: &DensePoly<R::Elem>,
) -> DensePoly<R::Elem> {
    let db = b.degree().unwrap();
    let lb = ring.leading(b);
    let mut r = a.clone();
    let mut e = a.degree().unwrap() as i64 - db as i64 + 1;
    while !r.is_zero() && r.degree().unwrap() >= db {
        let shift = r.degree().unwrap() - db;
        let lr = ring.leading(&r);
        r = ring.sub(&ring.scale(&r, &lb), &ring.shift(&ring.scale(b, &lr), shift));
        e -= 1;
    }
    let mut scale = ring.base.one();
    for _ in 0..e.max(0) {
        scale = ring.base.mul(&scale, &lb);
    }
    ring.scale(&r, &scale)
}

/// Resultant by the subresultant polynomial remainder sequence.
///
/// Valid over any integral domain with exact division. Errors when both
/// inputs are zero; the resultant with a single zero input is 0.
pub fn resultant<R: Ring>(
    ring: &PolyRing<R>,
    a: &DensePoly<R::Elem>,
    b: &DensePoly<R::Elem>,
) -> Result<R::Elem, Error> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::Parameter("resultant of two zero polynomials".into()));
    }
    if a.is_zero() || b.is_zero() {
        return Ok(ring.base.zero());
    }
    let base = &ring.base;
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut sign_neg = false;
    if a.degree().unwrap() < b.degree().unwrap() {
        if a.degree().unwrap() % 2 == 1 && b.degree().unwrap() % 2 == 1 {
            sign_neg = !sign_neg;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if b.degree().unwrap() == 0 {
        let res = base.pow(&ring.leading(&b), a.degree().unwrap() as u64);
        return Ok(res);
    }
    let mut g = base.one();
    let mut h = base.one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let d = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign_neg = !sign_neg;
        }
        let r = pseudo_rem(ring, &a, &b);
        if r.is_zero() {
            // positive-degree common factor
            return Ok(base.zero());
        }
        a = b;
        let gh = {
            let mut t = g.clone();
            for _ in 0..d {
                t = base.mul(&t, &h);
            }
            t
        };
        b = ring
            .from_coeffs(
                r.coeffs()
                    .iter()
                    .map(|c| base.exact_div(c, &gh).ok_or(Error::InexactDivision))
                    .collect::<Result<Vec<_>, _>>()?,
            );
        g = ring.leading(&a);
        h = if d == 0 {
            h
        } else {
            // h^(1-d) g^d, exact in the domain
            let gd = base.pow(&g, d as u64);
            if d == 1 {
                gd
            } else {
                let hd = base.pow(&h, (d - 1) as u64);
                base.exact_div(&gd, &hd).ok_or(Error::InexactDivision)?
            }
        };
        if b.degree().unwrap() == 0 {
            let da = a.degree().unwrap();
            let lb = base.pow(&ring.leading(&b), da as u64);
            let res = if da <= 1 {
                lb
            } else {
                let hd = base.pow(&h, (da - 1) as u64);
                base.exact_div(&lb, &hd).ok_or(Error::InexactDivision)?
            };
            return Ok(if sign_neg { base.neg(&res) } else { res });
        }
    }
}
