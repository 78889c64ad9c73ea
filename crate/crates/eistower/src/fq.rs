//! The finite field `F_r`, `r = p^ρ`, as `F_p[Z]/(modulus)`.
//!
//! Elements are coefficient vectors over `F_p`, trailing zeros trimmed, so the
//! zero element is the empty vector and prime-subfield elements have length 1.

use crate::error::Error;
use crate::ring::{Field, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FqRing {
    p: u64,
    /// Modulus over F_p, low-to-high, monic of degree ρ.
    modulus: Vec<u64>,
}

pub type FqElem = Vec<u64>;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FqRing {
    /// Prime field F_p.
    pub fn prime(p: u64) -> Result<Self, Error> {
        Self::extension(p, vec![0, 1])
    }

    /// F_{p^ρ} with the given monic modulus over F_p (low-to-high, degree ρ).
    pub fn extension(p: u64, modulus: Vec<u64>) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::Parameter(format!("{p} is not prime")));
        }
        if modulus.len() < 2 {
            return Err(Error::Parameter("modulus must have degree >= 1".into()));
        }
        let deg = modulus.len() - 1;
        if deg < 1 || modulus[deg] % p != 1 {
            return Err(Error::Parameter("modulus must be monic of degree >= 1".into()));
        }
        let modulus: Vec<u64> = modulus.into_iter().map(|c| c % p).collect();
        let ring = FqRing { p, modulus };
        if deg > 1 && !ring.modulus_irreducible() {
            return Err(Error::Parameter("modulus is reducible over F_p".into()));
        }
        Ok(ring)
    }

    /// The default modulus used for (p, ρ) when the caller does not supply
    /// one: Z^ρ + Z + c for the smallest c making it irreducible, except the
    /// documented fixed choice Z^2 + 1 for (3, 2).
    pub fn default_extension(p: u64, rho: u32) -> Result<Self, Error> {
        if rho == 1 {
            return Self::prime(p);
        }
        if p == 3 && rho == 2 {
            return Self::extension(3, vec![1, 0, 1]);
        }
        for b in 0..p {
            for c in 1..p {
                let mut m = vec![0u64; rho as usize + 1];
                m[rho as usize] = 1;
                m[1] = b;
                m[0] = c;
                if let Ok(ring) = Self::extension(p, m) {
                    return Ok(ring);
                }
            }
        }
        Err(Error::Parameter(format!("no irreducible modulus found for p={p}, rho={rho}")))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn rho(&self) -> u32 {
        (self.modulus.len() - 1) as u32
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.rho())
    }

    pub fn from_u64(&self, n: u64) -> FqElem {
        trim(vec![n % self.p])
    }

    /// The generator Z of the extension (for ρ = 1 this is p mod p = 0's
    /// successor representation, i.e. the scalar 0·1+...; callers only use it
    /// for ρ > 1).
    pub fn gen(&self) -> FqElem {
        if self.rho() == 1 {
            // Z reduces to the root of the degree-1 modulus: -modulus[0].
            trim(vec![(self.p - self.modulus[0] % self.p) % self.p])
        } else {
            vec![0, 1]
        }
    }

    /// All q elements, in lexicographic order by coefficient vector
    /// (constant coefficient fastest).
    pub fn all_elements(&self) -> Vec<FqElem> {
        let rho = self.rho() as usize;
        let mut out = Vec::with_capacity(self.order() as usize);
        let mut digits = vec![0u64; rho];
        loop {
            out.push(trim(digits.clone()));
            let mut k = 0;
            loop {
                if k == rho {
                    return out;
                }
                digits[k] += 1;
                if digits[k] < self.p {
                    break;
                }
                digits[k] = 0;
                k += 1;
            }
        }
    }

    fn modulus_irreducible(&self) -> bool {
        // Brute force: no root-free degree check needed at desk scale; test
        // divisibility by every monic polynomial of degree <= ρ/2.
        let deg = self.modulus.len() - 1;
        let mut divisors: Vec<Vec<u64>> = vec![];
        fn gen_monic(p: u64, deg: usize, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if acc.len() == deg {
                let mut poly = acc.clone();
                poly.push(1);
                out.push(poly);
                return;
            }
            for c in 0..p {
                acc.push(c);
                gen_monic(p, deg, acc, out);
                acc.pop();
            }
        }
        for d in 1..=deg / 2 {
            gen_monic(self.p, d, &mut vec![], &mut divisors);
        }
        for div in divisors {
            if poly_rem_fp(self.p, &self.modulus, &div).iter().all(|&c| c == 0) {
                return false;
            }
        }
        true
    }

    fn reduce(&self, mut a: Vec<u64>) -> FqElem {
        let deg = self.modulus.len() - 1;
        while a.len() > deg {
            let top = a.len() - 1;
            let c = a[top];
            if c != 0 {
                for k in 0..deg {
                    let idx = top - deg + k;
                    a[idx] = (a[idx] + c * (self.p - self.modulus[k])) % self.p;
                }
            }
            a.pop();
        }
        trim(a)
    }
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Remainder of a by b over F_p (both low-to-high, b nonzero).
fn poly_rem_fp(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut a: Vec<u64> = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    while a.len() > db {
        let top = a.len() - 1;
        let c = a[top] % p;
        if c != 0 {
            let factor = c * lead_inv % p;
            for k in 0..=db {
                let idx = top - db + k;
                a[idx] = (a[idx] + factor * (p - b[k] % p)) % p;
            }
        }
        a.pop();
    }
    trim(a)
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a nonzero mod p.
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

impl Ring for FqRing {
    type Elem = FqElem;

    fn zero(&self) -> FqElem {
        vec![]
    }
    fn one(&self) -> FqElem {
        vec![1]
    }
    fn is_zero(&self, a: &FqElem) -> bool {
        a.is_empty()
    }
    fn neg(&self, a: &FqElem) -> FqElem {
        trim(a.iter().map(|&c| (self.p - c) % self.p).collect())
    }
    fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let n = a.len().max(b.len());
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *slot = (x + y) % self.p;
        }
        trim(out)
    }
    fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        self.reduce(out)
    }
    fn exact_div(&self, a: &FqElem, b: &FqElem) -> Option<FqElem> {
        if self.is_zero(b) {
            return None;
        }
        Some(self.mul(a, &self.inv(b)))
    }
    fn from_i64(&self, n: i64) -> FqElem {
        let p = self.p as i64;
        trim(vec![(n.rem_euclid(p)) as u64])
    }
}

impl Field for FqRing {
    fn inv(&self, a: &FqElem) -> FqElem {
        assert!(!a.is_empty(), "inversion of zero in F_q");
        // a^(q-2) by square-and-multiply in the quotient.
        self.pow(a, self.order() - 2)
    }
}
