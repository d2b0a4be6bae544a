//! Exhaustive generation of all labelled STS(n) for small `n`, and their
//! isomorphism classes.
//!
//! The search always covers the lexicographically smallest uncovered pair
//! `{a, b}`; the third point `c` of its block is the only choice, so each
//! labelled system is produced exactly once.
//!
//! With normalization the blocks through point 0 are fixed to
//! `{0,1,2}, {0,3,4}, …, {0,n-2,n-1}`. Every labelled system is a relabelling
//! of one of these, so no isomorphism class is lost.

use crate::error::{Error, Result};
use crate::iso::{are_isomorphic, point_pasch_degrees};
use crate::model::{validate, Point, SteinerTripleSystem};

pub const SUPPORTED_ORDERS: [u32; 3] = [7, 9, 13];

struct Generator<F> {
    n: u32,
    covered: Vec<bool>,
    blocks: Vec<[Point; 3]>,
    visit: F,
}

impl<F: FnMut(&[[Point; 3]])> Generator<F> {
    fn is_covered(&self, a: Point, b: Point) -> bool {
        self.covered[(a * self.n + b) as usize]
    }

    fn set(&mut self, [a, b, c]: [Point; 3], value: bool) {
        let n = self.n;
        for (x, y) in [(a, b), (a, c), (b, c)] {
            self.covered[(x * n + y) as usize] = value;
            self.covered[(y * n + x) as usize] = value;
        }
    }

    fn run(&mut self, from: (Point, Point)) {
        let n = self.n;
        let (mut a, mut b) = from;
        // the smallest uncovered pair never moves backwards along a branch
        loop {
            if a + 1 >= n {
                (self.visit)(&self.blocks);
                return;
            }
            if b >= n {
                a += 1;
                b = a + 1;
                continue;
            }
            if !self.is_covered(a, b) {
                break;
            }
            b += 1;
        }
        for c in b + 1..n {
            if self.is_covered(a, c) || self.is_covered(b, c) {
                continue;
            }
            self.set([a, b, c], true);
            self.blocks.push([a, b, c]);
            self.run((a, b + 1));
            self.blocks.pop();
            self.set([a, b, c], false);
        }
    }
}

/// Calls `visit` with the block list of every labelled STS(n) (optionally
/// normalized at point 0) and returns how many there were.
pub fn for_each_labelled<F: FnMut(&[[Point; 3]])>(n: u32, normalize: bool, visit: F) -> u64 {
    let mut count = 0u64;
    let mut visit = visit;
    let mut gen = Generator {
        n,
        covered: vec![false; (n * n) as usize],
        blocks: Vec::new(),
        visit: |blocks: &[[Point; 3]]| {
            count += 1;
            visit(blocks)
        },
    };
    if normalize && n >= 3 {
        for i in (1..n).step_by(2) {
            let block = [0, i, i + 1];
            gen.set(block, true);
            gen.blocks.push(block);
        }
    }
    gen.run((0, 1));
    drop(gen);
    count
}

/// Labelled count and class representatives for one order.
#[derive(Clone, Debug)]
pub struct Census {
    pub n: u32,
    pub normalized: bool,
    pub labelled_count: u64,
    /// One representative per isomorphism class, in order of discovery.
    pub classes: Vec<SteinerTripleSystem>,
    /// Number of generated labelled systems falling in each class.
    pub class_sizes: Vec<u64>,
}

/// Generates every labelled STS(n) for `n ∈ {7, 9, 13}` and sorts them into
/// isomorphism classes.
pub fn gen_all(n: u32, normalize: bool) -> Result<Census> {
    if !SUPPORTED_ORDERS.contains(&n) {
        return Err(Error::UnsupportedOrder(n));
    }
    let mut classes: Vec<(Vec<u32>, SteinerTripleSystem)> = Vec::new();
    let mut class_sizes: Vec<u64> = Vec::new();
    let labelled_count = for_each_labelled(n, normalize, |blocks| {
        let s = validate(n, blocks).expect("generator emits valid systems");
        let mut fingerprint = point_pasch_degrees(&s);
        fingerprint.sort_unstable();
        let known = classes
            .iter()
            .position(|(fp, rep)| *fp == fingerprint && are_isomorphic(&s, rep).is_some());
        match known {
            Some(i) => class_sizes[i] += 1,
            None => {
                classes.push((fingerprint, s));
                class_sizes.push(1);
            }
        }
    });
    Ok(Census {
        n,
        normalized: normalize,
        labelled_count,
        classes: classes.into_iter().map(|(_, s)| s).collect(),
        class_sizes,
    })
}
