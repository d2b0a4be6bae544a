//! Points, triples, sets of triples and the Steiner triple system itself.
//!
//! A system is stored twice over: as its sorted block list and as the dense
//! `n × n` table of its Steiner quasigroup, where `a ⋆ a = a` and for
//! distinct `a, b` the product `a ⋆ b` is the third point of the unique block
//! through `a` and `b`.

use std::fmt;

use crate::error::{Error, Result};

/// A point of the foundation, an index in `0..n`.
pub type Point = u32;

/// Largest supported order. Packed triple keys need `n³ < 2^64`.
pub const MAX_ORDER: u32 = 1 << 20;

/// Sentinel used on the diagonal of the pair-to-block table.
const NO_BLOCK: u32 = u32::MAX;

/// A 3-subset of points, always stored in increasing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple([Point; 3]);

impl Triple {
    /// Sorts the three points; fails when two of them coincide.
    pub fn new(a: Point, b: Point, c: Point) -> Result<Triple> {
        let mut p = [a, b, c];
        p.sort_unstable();
        if p[0] == p[1] || p[1] == p[2] {
            return Err(Error::RepeatedPoint([a, b, c]));
        }
        Ok(Triple(p))
    }

    /// Builds a triple from three points the caller knows to be distinct.
    #[inline]
    pub(crate) fn from_distinct(a: Point, b: Point, c: Point) -> Triple {
        debug_assert!(a != b && b != c && a != c);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        if c < lo {
            Triple([c, lo, hi])
        } else if c < hi {
            Triple([lo, c, hi])
        } else {
            Triple([lo, hi, c])
        }
    }

    pub fn points(&self) -> [Point; 3] {
        self.0
    }

    pub fn contains(&self, p: Point) -> bool {
        self.0.contains(&p)
    }

    /// Packs the triple into `((p0·n) + p1)·n + p2`.
    #[inline]
    pub fn key(&self, n: u32) -> u64 {
        let n = n as u64;
        ((self.0[0] as u64 * n) + self.0[1] as u64) * n + self.0[2] as u64
    }

    /// Inverse of [`Triple::key`].
    #[inline]
    pub fn from_key(key: u64, n: u32) -> Triple {
        let n = n as u64;
        let p2 = (key % n) as u32;
        let rest = key / n;
        Triple([(rest / n) as u32, (rest % n) as u32, p2])
    }

    /// Number of points shared with `other`.
    pub fn meet(&self, other: &Triple) -> usize {
        self.0.iter().filter(|p| other.contains(**p)).count()
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.0[0], self.0[1], self.0[2])
    }
}

/// A set of triples over a foundation of `n` points, held as sorted packed keys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleSet {
    n: u32,
    keys: Vec<u64>,
}

impl TripleSet {
    /// Sorts and deduplicates `keys`.
    pub fn from_keys(n: u32, mut keys: Vec<u64>) -> TripleSet {
        keys.sort_unstable();
        keys.dedup();
        TripleSet { n, keys }
    }

    pub fn from_triples<I: IntoIterator<Item = Triple>>(n: u32, triples: I) -> TripleSet {
        TripleSet::from_keys(n, triples.into_iter().map(|t| t.key(n)).collect())
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn contains(&self, t: &Triple) -> bool {
        self.keys.binary_search(&t.key(self.n)).is_ok()
    }

    pub fn keys(&self) -> &[u64] {
        &self.keys
    }

    pub fn iter(&self) -> impl Iterator<Item = Triple> + '_ {
        self.keys.iter().map(move |&k| Triple::from_key(k, self.n))
    }

    pub fn union(&self, other: &TripleSet) -> TripleSet {
        assert_eq!(self.n, other.n, "union of sets over different foundations");
        let mut keys = Vec::with_capacity(self.len() + other.len());
        keys.extend_from_slice(&self.keys);
        keys.extend_from_slice(&other.keys);
        TripleSet::from_keys(self.n, keys)
    }

    pub fn intersection_len(&self, other: &TripleSet) -> usize {
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        small.keys.iter().filter(|k| large.keys.binary_search(k).is_ok()).count()
    }
}

/// A validated Steiner triple system on the points `0..n`.
///
/// Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct SteinerTripleSystem {
    n: u32,
    blocks: Vec<Triple>,
    star: Vec<Point>,
    pair_block: Vec<u32>,
}

impl fmt::Debug for SteinerTripleSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SteinerTripleSystem")
            .field("n", &self.n)
            .field("blocks", &self.blocks)
            .finish()
    }
}

/// Number of blocks of an STS(n), or `None` when `n(n-1)` is not divisible by 6.
pub fn block_count_for(n: u32) -> Option<u64> {
    let n = n as u64;
    let pairs = n * n.saturating_sub(1);
    pairs.is_multiple_of(6).then_some(pairs / 6)
}

/// Checks `raw_blocks` against the definition and builds the indexed system.
///
/// Ranges are checked first, then pair coverage (doubled pairs while filling
/// the table, uncovered pairs afterwards). An order with `n(n-1)` not
/// divisible by 6 is rejected up front with [`Error::WrongBlockCount`].
pub fn validate(n: u32, raw_blocks: &[[Point; 3]]) -> Result<SteinerTripleSystem> {
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let Some(expected) = block_count_for(n) else {
        return Err(Error::WrongBlockCount {
            n,
            expected: format!("{}/6", n as u64 * (n as u64 - 1)),
            found: raw_blocks.len(),
        });
    };

    let mut blocks = Vec::with_capacity(raw_blocks.len());
    for &[a, b, c] in raw_blocks {
        for point in [a, b, c] {
            if point >= n {
                return Err(Error::PointOutOfRange { point, n });
            }
        }
        blocks.push(Triple::new(a, b, c)?);
    }
    blocks.sort_unstable();

    let size = n as usize;
    let mut pair_block = vec![NO_BLOCK; size * size];
    for (idx, block) in blocks.iter().enumerate() {
        let [a, b, c] = block.points();
        for (x, y) in [(a, b), (a, c), (b, c)] {
            let slot = x as usize * size + y as usize;
            if pair_block[slot] != NO_BLOCK {
                return Err(Error::PairDoubled(x, y));
            }
            pair_block[slot] = idx as u32;
            pair_block[y as usize * size + x as usize] = idx as u32;
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            if pair_block[x as usize * size + y as usize] == NO_BLOCK {
                return Err(Error::PairUncovered(x, y));
            }
        }
    }
    if blocks.len() as u64 != expected {
        return Err(Error::WrongBlockCount { n, expected: expected.to_string(), found: blocks.len() });
    }

    let mut star = vec![0; size * size];
    for x in 0..size {
        for y in 0..size {
            star[x * size + y] = if x == y {
                x as Point
            } else {
                let [a, b, c] = blocks[pair_block[x * size + y] as usize].points();
                a ^ b ^ c ^ x as Point ^ y as Point
            };
        }
    }

    Ok(SteinerTripleSystem { n, blocks, star, pair_block })
}

impl SteinerTripleSystem {
    /// Validates a list of typed triples.
    pub fn from_triples(n: u32, triples: &[Triple]) -> Result<SteinerTripleSystem> {
        let raw: Vec<[Point; 3]> = triples.iter().map(Triple::points).collect();
        validate(n, &raw)
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    /// Blocks in increasing lexicographic order.
    pub fn blocks(&self) -> &[Triple] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// `a ⋆ b` without range checks.
    #[inline(always)]
    pub fn star(&self, a: Point, b: Point) -> Point {
        self.star[a as usize * self.n as usize + b as usize]
    }

    /// The dense quasigroup table, row-major.
    pub fn star_table(&self) -> &[Point] {
        &self.star
    }

    pub fn star_of(&self, a: Point, b: Point) -> Result<Point> {
        for point in [a, b] {
            if point >= self.n {
                return Err(Error::PointOutOfRange { point, n: self.n });
            }
        }
        Ok(self.star(a, b))
    }

    /// Whether `t` is a block, decided through the quasigroup table.
    #[inline]
    pub fn contains(&self, t: &Triple) -> bool {
        let [a, b, c] = t.points();
        c < self.n && self.star(a, b) == c
    }

    /// Position of `t` in [`SteinerTripleSystem::blocks`], if it is a block.
    pub fn block_index(&self, t: &Triple) -> Option<usize> {
        let [a, b, c] = t.points();
        if c >= self.n {
            return None;
        }
        let idx = self.pair_block[a as usize * self.n as usize + b as usize];
        (idx != NO_BLOCK && self.blocks[idx as usize] == *t).then_some(idx as usize)
    }

    /// The block through two distinct points.
    pub fn block_through(&self, a: Point, b: Point) -> Triple {
        self.blocks[self.pair_block[a as usize * self.n as usize + b as usize] as usize]
    }

    /// Blocks as a [`TripleSet`].
    pub fn block_set(&self) -> TripleSet {
        TripleSet::from_triples(self.n, self.blocks.iter().copied())
    }

    /// Applies a point bijection: block `{a, b, c}` becomes `{p(a), p(b), p(c)}`.
    pub fn relabel(&self, perm: &[Point]) -> Result<SteinerTripleSystem> {
        check_permutation(self.n, perm)?;
        let raw: Vec<[Point; 3]> = self
            .blocks
            .iter()
            .map(|b| b.points().map(|p| perm[p as usize]))
            .collect();
        validate(self.n, &raw)
    }
}

pub(crate) fn check_permutation(n: u32, perm: &[Point]) -> Result<()> {
    if perm.len() != n as usize {
        return Err(Error::NotAPermutation(format!("length {} for order {}", perm.len(), n)));
    }
    let mut seen = vec![false; n as usize];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p as usize], true) {
            return Err(Error::NotAPermutation(format!("image {p} is out of range or repeated")));
        }
    }
    Ok(())
}

/// Inverse of a permutation of `0..perm.len()`.
pub fn invert_permutation(perm: &[Point]) -> Vec<Point> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p as usize] = i as Point;
    }
    inv
}

/// Four blocks `{a,b,c}, {a,d,e}, {f,b,d}, {f,c,e}` on six distinct points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PaschConfig {
    /// The labels `a, b, c, d, e, f` in that order.
    pub points: [Point; 6],
}

impl PaschConfig {
    /// Labels the configuration; fails if the six points are not distinct.
    pub fn new(points: [Point; 6]) -> Option<PaschConfig> {
        let mut sorted = points;
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1]).then_some(PaschConfig { points })
    }

    /// The blocks in pattern order.
    pub fn blocks(&self) -> [Triple; 4] {
        let [a, b, c, d, e, f] = self.points;
        [
            Triple::from_distinct(a, b, c),
            Triple::from_distinct(a, d, e),
            Triple::from_distinct(f, b, d),
            Triple::from_distinct(f, c, e),
        ]
    }

    /// Sorted block keys; two labellings of the same configuration share it.
    pub fn signature(&self, n: u32) -> [u64; 4] {
        let mut keys = self.blocks().map(|t| t.key(n));
        keys.sort_unstable();
        keys
    }
}
