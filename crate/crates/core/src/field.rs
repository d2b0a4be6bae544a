//! Finite fields of order `p` and `p²`.
//!
//! Elements are plain integers in `0..q`: for a prime field the residue
//! itself, for `GF(p²) = GF(p)[z]/(z² + c1·z + c0)` the element `a0 + a1·z`
//! is stored as `a0 + a1·p`. This fixed enumeration is also the element to
//! point-index map used by the difference constructions.

use crate::error::{Error, Result};

/// A field element in the enumeration described at module level.
pub type Element = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    p: u32,
    deg: u32,
    /// `[c0, c1]` of the monic modulus `z² + c1·z + c0`; unused for `deg = 1`.
    modulus: [u32; 2],
}

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d: &u32| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<FieldSpec> {
        if !is_prime(p) || p > 1 << 16 {
            return Err(Error::UnsupportedField(format!("{p} is not a supported prime")));
        }
        Ok(FieldSpec { p, deg: 1, modulus: [0, 0] })
    }

    /// `GF(p²)` with the first irreducible `z² + c1·z + c0` in order of
    /// `c0 + c1·p`.
    pub fn prime_square(p: u32) -> Result<FieldSpec> {
        if !is_prime(p) || p > 1 << 8 {
            return Err(Error::UnsupportedField(format!("{p} is not a supported prime")));
        }
        let modulus = (0..p * p)
            .map(|code| [code % p, code / p])
            .find(|&m| Self::quadratic_irreducible(p, m))
            .expect("an irreducible quadratic exists over every prime field");
        Ok(FieldSpec { p, deg: 2, modulus })
    }

    /// `GF(p²)` with a caller-chosen modulus `z² + c1·z + c0`.
    pub fn with_modulus(p: u32, c0: u32, c1: u32) -> Result<FieldSpec> {
        if !is_prime(p) || p > 1 << 8 || c0 >= p || c1 >= p {
            return Err(Error::UnsupportedField(format!("bad parameters p={p}, c0={c0}, c1={c1}")));
        }
        if !Self::quadratic_irreducible(p, [c0, c1]) {
            return Err(Error::UnsupportedField(format!("z^2 + {c1}z + {c0} is reducible mod {p}")));
        }
        Ok(FieldSpec { p, deg: 2, modulus: [c0, c1] })
    }

    /// The field of order `q`, which must be a prime or the square of one.
    pub fn for_order(q: u32) -> Result<FieldSpec> {
        if is_prime(q) {
            return FieldSpec::prime(q);
        }
        let root = (q as f64).sqrt().round() as u32;
        if root * root == q && is_prime(root) {
            return FieldSpec::prime_square(root);
        }
        Err(Error::UnsupportedField(format!("{q} is neither a prime nor a prime squared")))
    }

    // A monic quadratic is irreducible iff it has no root.
    fn quadratic_irreducible(p: u32, [c0, c1]: [u32; 2]) -> bool {
        let p64 = p as u64;
        (0..p64).all(|z| !(z * z + c1 as u64 * z + c0 as u64).is_multiple_of(p64))
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn modulus(&self) -> [u32; 2] {
        self.modulus
    }

    pub fn order(&self) -> u32 {
        self.p.pow(self.deg)
    }

    pub fn contains(&self, a: Element) -> bool {
        a < self.order()
    }

    fn split(&self, a: Element) -> (u64, u64) {
        ((a % self.p) as u64, (a / self.p) as u64)
    }

    fn join(&self, a0: u64, a1: u64) -> Element {
        let p = self.p as u64;
        ((a0 % p) + (a1 % p) * p) as Element
    }

    pub fn add(&self, a: Element, b: Element) -> Element {
        let (a0, a1) = self.split(a);
        let (b0, b1) = self.split(b);
        self.join(a0 + b0, a1 + b1)
    }

    pub fn neg(&self, a: Element) -> Element {
        let p = self.p as u64;
        let (a0, a1) = self.split(a);
        self.join(p - a0, p - a1)
    }

    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Element, b: Element) -> Element {
        let p = self.p as u64;
        let (a0, a1) = self.split(a);
        let (b0, b1) = self.split(b);
        if self.deg == 1 {
            return self.join(a0 * b0, 0);
        }
        // z² = -c1·z - c0
        let [c0, c1] = self.modulus.map(u64::from);
        let top = a1 * b1 % p;
        let lin = (a0 * b1 + a1 * b0) % p;
        let con = a0 * b0 % p;
        self.join(con + top * (p - c0), lin + top * (p - c1))
    }

    pub fn pow(&self, mut base: Element, mut exp: u64) -> Element {
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Element) -> Option<Element> {
        (a != 0).then(|| self.pow(a, self.order() as u64 - 2))
    }

    /// The image of an integer under `Z → GF(p) ⊆ GF(q)`.
    pub fn from_int(&self, k: i64) -> Element {
        k.rem_euclid(self.p as i64) as Element
    }

    /// Multiplicative order of a non-zero element, by trying the divisors of `q - 1`.
    pub fn multiplicative_order(&self, a: Element) -> Option<u32> {
        if a == 0 || !self.contains(a) {
            return None;
        }
        let mut ord = self.order() - 1;
        for r in prime_factors(ord) {
            while ord.is_multiple_of(r) && self.pow(a, (ord / r) as u64) == 1 {
                ord /= r;
            }
        }
        Some(ord)
    }
}

/// The first element in enumeration order whose multiplicative order is `q - 1`.
pub fn find_primitive(field: &FieldSpec) -> Element {
    let q = field.order();
    let factors = prime_factors(q - 1);
    (1..q)
        .find(|&g| factors.iter().all(|&r| field.pow(g, ((q - 1) / r) as u64) != 1))
        .expect("the multiplicative group of a finite field is cyclic")
}

/// The exponent `e` in `0..q-1` with `x^e = target`, by walking the powers of `x`.
pub fn discrete_log(field: &FieldSpec, x: Element, target: Element) -> Result<u32> {
    if target == 0 {
        return Err(Error::ZeroTarget);
    }
    if !field.contains(target) {
        return Err(Error::ElementOutOfRange(target, field.order()));
    }
    let mut acc = 1;
    for e in 0..field.order() - 1 {
        if acc == target {
            return Ok(e);
        }
        acc = field.mul(acc, x);
    }
    // only reachable when x is not primitive
    Err(Error::UnsupportedField(format!("{target} is not a power of {x}")))
}
