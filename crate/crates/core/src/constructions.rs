//! Builders for the families of systems used throughout the crate.

use crate::error::{Error, Result};
use crate::field::{discrete_log, find_primitive, Element, FieldSpec};
use crate::model::{validate, Point, SteinerTripleSystem};

/// Collects the blocks of the quasigroup `star` on `0..n` and validates them.
fn from_quasigroup(n: u32, star: impl Fn(Point, Point) -> Point) -> Result<SteinerTripleSystem> {
    let mut raw = Vec::with_capacity(n as usize * (n as usize).saturating_sub(1) / 6);
    for a in 0..n {
        for b in a + 1..n {
            let c = star(a, b);
            if c > b {
                raw.push([a, b, c]);
            }
        }
    }
    validate(n, &raw)
}

/// `PG(k, 2)`: the non-zero vectors of `GF(2)^(k+1)`, with lines `{a, b, a ⊕ b}`.
///
/// The vector with integer value `v` is point `v - 1`.
pub fn pg(k: u32) -> Result<SteinerTripleSystem> {
    if k < 2 {
        return Err(Error::KTooSmall(k));
    }
    if k > 19 {
        return Err(Error::OrderTooLarge(u32::MAX));
    }
    let n = (1u32 << (k + 1)) - 1;
    from_quasigroup(n, |a, b| ((a + 1) ^ (b + 1)) - 1)
}

/// The `m`-fold direct power of STS(3): points of `Z_3^m`, lines the triples
/// summing to zero.
///
/// Point index is the base-3 number whose digits are the coordinates, so the
/// result coincides with repeated [`direct_product`] of STS(3).
pub fn ag_power(m: u32) -> Result<SteinerTripleSystem> {
    if m < 1 {
        return Err(Error::MTooSmall(m));
    }
    if m > 12 {
        return Err(Error::OrderTooLarge(u32::MAX));
    }
    let n = 3u32.pow(m);
    from_quasigroup(n, |mut a, mut b| {
        let (mut c, mut place) = (0, 1);
        for _ in 0..m {
            // -(x + y) mod 3
            c += ((6 - a % 3 - b % 3) % 3) * place;
            a /= 3;
            b /= 3;
            place *= 3;
        }
        c
    })
}

/// The system with a single block.
pub fn trivial3() -> SteinerTripleSystem {
    validate(3, &[[0, 1, 2]]).expect("STS(3)")
}

/// `S × T` with `(a, x) ⋆ (b, y) = (a ⋆ b, x ⋆ y)`; point `(a, x)` is `a·n + x`
/// where `n` is the order of `t`.
pub fn direct_product(s: &SteinerTripleSystem, t: &SteinerTripleSystem) -> Result<SteinerTripleSystem> {
    let (m, n) = (s.order(), t.order());
    let order = m
        .checked_mul(n)
        .filter(|&o| o <= crate::model::MAX_ORDER)
        .ok_or(Error::OrderTooLarge(u32::MAX))?;
    from_quasigroup(order, |u, v| s.star(u / n, v / n) * n + t.star(u % n, v % n))
}

/// Parameters of a Netto-type system `S_C = { c·{1, y, y²} + a }` over `GF(q)`,
/// `q = 6t + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NettoSpec {
    pub field: FieldSpec,
    pub t: u32,
    /// Primitive element.
    pub x: Element,
    /// `x^(2t)`, a primitive cube root of unity.
    pub y: Element,
    /// The multiplier set, in increasing element order.
    pub c: Vec<Element>,
    /// `exponents[i]` is the discrete log of `c[i]` base `x`.
    pub exponents: Vec<u32>,
}

fn netto_t(field: &FieldSpec) -> Result<u32> {
    let q = field.order();
    if q % 6 != 1 {
        return Err(Error::BadOrderModSix(q));
    }
    Ok((q - 1) / 6)
}

impl NettoSpec {
    /// Checks `c` against the coset-transversal condition, using the
    /// smallest primitive element of the field.
    pub fn new(field: FieldSpec, c: &[Element]) -> Result<NettoSpec> {
        let t = netto_t(&field)?;
        let x = find_primitive(&field);
        Self::with_primitive(field, x, c, t)
    }

    fn with_primitive(field: FieldSpec, x: Element, c: &[Element], t: u32) -> Result<NettoSpec> {
        let mut c = c.to_vec();
        c.sort_unstable();
        for &e in &c {
            if !field.contains(e) {
                return Err(Error::ElementOutOfRange(e, field.order()));
            }
        }
        if c.contains(&0) {
            return Err(Error::ZeroInC);
        }
        if c.len() != t as usize {
            return Err(Error::WrongCSize { expected: t, found: c.len() });
        }
        let exponents = c
            .iter()
            .map(|&e| discrete_log(&field, x, e))
            .collect::<Result<Vec<_>>>()?;
        for i in 0..c.len() {
            for j in i + 1..c.len() {
                if exponents[i] % t == exponents[j] % t {
                    return Err(Error::CosetCollision(c[i], c[j]));
                }
            }
        }
        let y = field.pow(x, 2 * t as u64);
        debug_assert!(y != 1 && field.pow(y, 3) == 1);
        Ok(NettoSpec { field, t, x, y, c, exponents })
    }

    /// The blocks `{c + a, c·y + a, c·y² + a}` for all `c ∈ C`, `a ∈ GF(q)`.
    pub fn system(&self) -> Result<SteinerTripleSystem> {
        let f = &self.field;
        let y2 = f.mul(self.y, self.y);
        let mut raw = Vec::with_capacity((self.t * f.order()) as usize);
        for &c in &self.c {
            let base = [c, f.mul(c, self.y), f.mul(c, y2)];
            for a in 0..f.order() {
                raw.push(base.map(|e| f.add(e, a)));
            }
        }
        validate(f.order(), &raw)
    }
}

pub fn netto(field: &FieldSpec, c: &[Element]) -> Result<SteinerTripleSystem> {
    NettoSpec::new(*field, c)?.system()
}

/// [`netto`] over the field of order `q` (a prime or a prime squared).
pub fn netto_for_order(q: u32, c: &[Element]) -> Result<SteinerTripleSystem> {
    netto(&FieldSpec::for_order(q)?, c)
}

/// Picks a multiplier set closed under "2c or c/2 is also in C".
///
/// Works on exponents base `x`: with `2 = x^s`, start from `{0, s}`, then
/// repeatedly take the smallest residue class `j` mod `t` not yet hit. If the
/// class of `j + s` is free too, add `j` and `j + s`; otherwise some member
/// `r` has `r ≡ j + s`, and `r - s` (the element `x^r / 2`) is added.
pub fn choose_enough_c(field: &FieldSpec) -> Result<NettoSpec> {
    let t = netto_t(field)?;
    let x = find_primitive(field);
    let group = field.order() - 1;
    let s = discrete_log(field, x, field.from_int(2))?;
    if s % t == 0 {
        return Err(Error::SDivisibleByT { s, t });
    }

    let mut exponents = vec![0, s];
    let mut covered = vec![false; t as usize];
    covered[0] = true;
    covered[(s % t) as usize] = true;
    while let Some(j) = (0..t).find(|&j| !covered[j as usize]) {
        let partner = (j + s) % t;
        if !covered[partner as usize] {
            exponents.push(j);
            exponents.push((j + s) % group);
            covered[partner as usize] = true;
        } else {
            let r = *exponents
                .iter()
                .find(|&&r| r % t == partner)
                .expect("covered class has a member");
            exponents.push((r + group - s) % group);
        }
        covered[j as usize] = true;
    }

    let c: Vec<Element> = exponents.iter().map(|&e| field.pow(x, e as u64)).collect();
    NettoSpec::with_primitive(*field, x, &c, t)
}

/// Bose's construction for `n = 6t + 3` over `Z_{2t+1} × Z_3`, using the
/// idempotent commutative quasigroup `i ∘ j = (i + j)/2` on `Z_{2t+1}`.
///
/// Point `(i, k)` is `i + (2t + 1)·k`.
pub fn bose(n: u32) -> Result<SteinerTripleSystem> {
    if n % 6 != 3 {
        return Err(Error::BadOrderModSix(n));
    }
    let v = n / 3;
    let half = v.div_ceil(2);
    let idx = |i: u32, k: u32| i + v * (k % 3);
    let mut raw = Vec::new();
    for i in 0..v {
        raw.push([idx(i, 0), idx(i, 1), idx(i, 2)]);
        for j in i + 1..v {
            let mid = (i + j) * half % v;
            for k in 0..3 {
                raw.push([idx(i, k), idx(j, k), idx(mid, k + 1)]);
            }
        }
    }
    validate(n, &raw)
}
