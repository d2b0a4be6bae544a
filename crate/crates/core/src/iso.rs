//! Isomorphism search between two systems of the same order.
//!
//! Plain backtracking: fix the image of one unmapped point at a time and let
//! the quasigroup force the rest (`f(u ⋆ w) = f(u) ⋆ f(w)`). Candidate images
//! are restricted to points with the same local Pasch degree, which plays the
//! role of a degree sequence here since every point of an STS lies on the
//! same number of blocks.

use crate::model::{Point, SteinerTripleSystem};

const UNSET: Point = Point::MAX;

/// Number of Pasch configurations through each point.
pub fn point_pasch_degrees(s: &SteinerTripleSystem) -> Vec<u32> {
    let n = s.order();
    (0..n)
        .map(|u| {
            let others: Vec<(Point, Point)> = (0..n)
                .filter(|&v| v != u && v < s.star(u, v))
                .map(|v| (v, s.star(u, v)))
                .collect();
            let mut count = 0;
            for (i, &(b, c)) in others.iter().enumerate() {
                for &(d, e) in &others[i + 1..] {
                    if s.star(b, d) == s.star(c, e) {
                        count += 1;
                    }
                    if s.star(b, e) == s.star(c, d) {
                        count += 1;
                    }
                }
            }
            count
        })
        .collect()
}

struct Search<'a> {
    s: &'a SteinerTripleSystem,
    t: &'a SteinerTripleSystem,
    inv_s: Vec<u32>,
    inv_t: Vec<u32>,
    forward: Vec<Point>,
    backward: Vec<Point>,
    mapped: Vec<Point>,
}

impl Search<'_> {
    /// Maps `u ↦ v` and everything it forces. On failure the partial map is
    /// left dirty; the caller rolls back to its saved `mapped` length.
    fn assign(&mut self, u: Point, v: Point) -> bool {
        let mut queue = vec![(u, v)];
        while let Some((u, v)) = queue.pop() {
            let fu = self.forward[u as usize];
            if fu == v {
                continue;
            }
            if fu != UNSET
                || self.backward[v as usize] != UNSET
                || self.inv_s[u as usize] != self.inv_t[v as usize]
            {
                return false;
            }
            self.forward[u as usize] = v;
            self.backward[v as usize] = u;
            for &w in &self.mapped {
                let fw = self.forward[w as usize];
                queue.push((self.s.star(u, w), self.t.star(v, fw)));
            }
            self.mapped.push(u);
        }
        true
    }

    fn rollback(&mut self, len: usize) {
        for u in self.mapped.drain(len..) {
            let v = self.forward[u as usize];
            self.forward[u as usize] = UNSET;
            self.backward[v as usize] = UNSET;
        }
    }

    fn run(&mut self) -> bool {
        let Some(u) = (0..self.s.order()).find(|&u| self.forward[u as usize] == UNSET) else {
            return true;
        };
        let saved = self.mapped.len();
        for v in 0..self.t.order() {
            if self.backward[v as usize] != UNSET || self.inv_s[u as usize] != self.inv_t[v as usize] {
                continue;
            }
            if self.assign(u, v) && self.run() {
                return true;
            }
            self.rollback(saved);
        }
        false
    }
}

/// A bijection `p` with `{p(a), p(b), p(c)}` a block of `t` for every block
/// `{a, b, c}` of `s`, or `None` if the systems are not isomorphic.
pub fn are_isomorphic(s: &SteinerTripleSystem, t: &SteinerTripleSystem) -> Option<Vec<Point>> {
    if s.order() != t.order() {
        return None;
    }
    let inv_s = point_pasch_degrees(s);
    let inv_t = point_pasch_degrees(t);
    let (mut sorted_s, mut sorted_t) = (inv_s.clone(), inv_t.clone());
    sorted_s.sort_unstable();
    sorted_t.sort_unstable();
    if sorted_s != sorted_t {
        return None;
    }
    let n = s.order() as usize;
    let mut search = Search {
        s,
        t,
        inv_s,
        inv_t,
        forward: vec![UNSET; n],
        backward: vec![UNSET; n],
        mapped: Vec::with_capacity(n),
    };
    search.run().then_some(search.forward)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{ag_power, bose, netto_for_order, pg};
    use crate::model::validate;

    fn maps_blocks(s: &SteinerTripleSystem, t: &SteinerTripleSystem, p: &[Point]) -> bool {
        s.relabel(p).unwrap().blocks() == t.blocks()
    }

    #[test]
    fn self_isomorphism() {
        let s = pg(3).unwrap();
        let p = are_isomorphic(&s, &s).unwrap();
        assert!(maps_blocks(&s, &s, &p));
    }

    #[test]
    fn fano_models_agree() {
        let cyclic: Vec<[Point; 3]> = (0..7).map(|i| [i, (i + 1) % 7, (i + 3) % 7]).collect();
        let a = validate(7, &cyclic).unwrap();
        let b = pg(2).unwrap();
        let p = are_isomorphic(&a, &b).unwrap();
        assert!(maps_blocks(&a, &b, &p));
    }

    #[test]
    fn sts9_models_agree() {
        let a = ag_power(2).unwrap();
        let b = bose(9).unwrap();
        let p = are_isomorphic(&a, &b).unwrap();
        assert!(maps_blocks(&a, &b, &p));
    }

    #[test]
    fn relabelled_copy_is_found() {
        let s = netto_for_order(13, &[1, 2]).unwrap();
        let perm: Vec<Point> = (0..13).map(|i| (i * 5 + 3) % 13).collect();
        let t = s.relabel(&perm).unwrap();
        let p = are_isomorphic(&s, &t).unwrap();
        assert!(maps_blocks(&s, &t, &p));
    }

    #[test]
    fn different_orders_or_classes() {
        assert!(are_isomorphic(&pg(2).unwrap(), &ag_power(2).unwrap()).is_none());
        let pg3 = pg(3).unwrap();
        let b15 = bose(15).unwrap();
        assert!(are_isomorphic(&pg3, &b15).is_none());
    }
}
