//! Coefficient ring abstraction.
//!
//! All higher layers (polynomials, linear algebra, quotient rings) are written
//! against a ring *object* carrying its elements as an associated type, so the
//! same code serves `Z`, `Q`, `F_r`, `F_r[Y]` and `F_r(Y)`. Every ring here is
//! an integral domain with decidable exact division.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub trait Ring: Clone {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// Returns `a / b` when `b` divides `a` exactly, `None` otherwise.
    /// Division by zero is a caller bug and may panic.
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        let one = self.one();
        let mut acc = self.zero();
        for _ in 0..n.unsigned_abs() {
            acc = self.add(&acc, &one);
        }
        if n < 0 {
            self.neg(&acc)
        } else {
            acc
        }
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
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
}

/// Domain with a gcd normalizing to a canonical associate (positive for `Z`,
/// monic for `F[Y]`). Used to reduce fractions.
pub trait GcdRing: Ring {
    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Canonical unit-normalization: returns `(u, a·u)` with `a·u` the
    /// canonical associate of `a` and `u` a unit.
    fn normalize(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem);
}

pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    /// Pivot preference for exact Gaussian elimination; larger wins.
    fn pivot_score(&self, _a: &Self::Elem) -> u64 {
        0
    }
}

/// The ring of arbitrary-precision integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IntRing;

impl Ring for IntRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn exact_div(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        let (q, r) = a.div_rem(b);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }
    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
}

impl GcdRing for IntRing {
    fn gcd(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a.gcd(b)
    }
    fn normalize(&self, a: &BigInt) -> (BigInt, BigInt) {
        if a.is_negative() {
            (BigInt::from(-1), -a)
        } else {
            (BigInt::one(), a.clone())
        }
    }
}

/// The field of rationals.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RatRing;

impl Ring for RatRing {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn exact_div(&self, a: &BigRational, b: &BigRational) -> Option<BigRational> {
        if b.is_zero() {
            None
        } else {
            Some(a / b)
        }
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl Field for RatRing {
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn pivot_score(&self, a: &BigRational) -> u64 {
        a.numer().bits()
    }
}

/// p-adic valuation of a nonzero integer.
pub fn int_val_p(p: u64, a: &BigInt) -> Option<u64> {
    if a.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut v = 0u64;
    let mut a = a.clone();
    loop {
        let (q, r) = a.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        v += 1;
        a = q;
    }
}

/// p-adic valuation of a nonzero rational.
pub fn rat_val_p(p: u64, a: &BigRational) -> Option<i64> {
    if a.is_zero() {
        return None;
    }
    let vn = int_val_p(p, a.numer()).unwrap() as i64;
    let vd = int_val_p(p, a.denom()).unwrap() as i64;
    Some(vn - vd)
}
