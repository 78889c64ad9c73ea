//! Field of fractions of a gcd domain; used for `F_r(Y)`.

use std::fmt::Debug;

use crate::ring::{Field, GcdRing, Ring};

/// A reduced fraction: gcd(num, den) = 1, den unit-normalized (monic).
#[derive(Clone, Debug, PartialEq)]
pub struct Frac<T> {
    pub num: T,
    pub den: T,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FracRing<R> {
    pub base: R,
}

impl<R: GcdRing> FracRing<R> {
    pub fn new(base: R) -> Self {
        FracRing { base }
    }

    pub fn from_base(&self, num: R::Elem) -> Frac<R::Elem> {
        Frac {
            num,
            den: self.base.one(),
        }
    }

    pub fn make(&self, num: R::Elem, den: R::Elem) -> Frac<R::Elem> {
        assert!(!self.base.is_zero(&den), "zero denominator");
        if self.base.is_zero(&num) {
            return Frac {
                num,
                den: self.base.one(),
            };
        }
        let g = self.base.gcd(&num, &den);
        let num = self.base.exact_div(&num, &g).expect("gcd divides");
        let den = self.base.exact_div(&den, &g).expect("gcd divides");
        let (u, den) = self.base.normalize(&den);
        let num = self.base.mul(&num, &u);
        Frac { num, den }
    }

    /// True when the reduced denominator is a unit, i.e. the element lies in
    /// the base ring.
    pub fn is_integral(&self, a: &Frac<R::Elem>) -> bool {
        let (_, n) = self.base.normalize(&a.den);
        self.base.eq(&n, &self.base.one())
    }
}

impl<R: GcdRing> Ring for FracRing<R> {
    type Elem = Frac<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Frac {
            num: self.base.zero(),
            den: self.base.one(),
        }
    }
    fn one(&self) -> Self::Elem {
        Frac {
            num: self.base.one(),
            den: self.base.one(),
        }
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.base.is_zero(&a.num)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Frac {
            num: self.base.neg(&a.num),
            den: a.den.clone(),
        }
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let num = self.base.add(
            &self.base.mul(&a.num, &b.den),
            &self.base.mul(&b.num, &a.den),
        );
        let den = self.base.mul(&a.den, &b.den);
        self.make(num, den)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.make(
            self.base.mul(&a.num, &b.num),
            self.base.mul(&a.den, &b.den),
        )
    }
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(b) {
            return None;
        }
        Some(self.div(a, b))
    }
    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        // canonical forms, but denominators may differ by representation of
        // the same reduced fraction only if normalize is canonical; compare
        // cross products to be safe.
        self.base.eq(
            &self.base.mul(&a.num, &b.den),
            &self.base.mul(&b.num, &a.den),
        )
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_base(self.base.from_i64(n))
    }
}

impl<R: GcdRing> Field for FracRing<R> {
    fn inv(&self, a: &Self::Elem) -> Self::Elem {
        assert!(!self.is_zero(a), "inversion of zero fraction");
        self.make(a.den.clone(), a.num.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fq::FqRing;
    use crate::poly::PolyRing;
    use crate::ring::Ring;

    #[test]
    fn rational_function_arithmetic() {
        let f3y = PolyRing::new(FqRing::prime(3).unwrap());
        let k = FracRing::new(f3y.clone());
        let y = k.from_base(f3y.gen());
        // 1/Y + Y = (1 + Y^2)/Y
        let s = k.add(&k.inv(&y), &y);
        assert_eq!(s.num, f3y.from_coeffs(vec![vec![1], vec![], vec![1]]));
        assert_eq!(s.den, f3y.gen());
        assert!(!k.is_integral(&s));
        // (Y^2 - 1)/(Y - 1) reduces to Y + 1
        let num = f3y.from_coeffs(vec![vec![2], vec![], vec![1]]);
        let den = f3y.from_coeffs(vec![vec![2], vec![1]]);
        let red = k.make(num, den);
        assert_eq!(red.num, f3y.from_coeffs(vec![vec![1], vec![1]]));
        assert!(k.is_integral(&red));
    }
}
