//! The Pasch-derived invariants of a system.
//!
//! For distinct points `a, b, c` write `ψ({a,b,c}) = {a⋆b, b⋆c, c⋆a}`; the
//! three images are again distinct. Then
//!
//! * `B(S)` is the image of ψ over all triples, with `β = |B(S)|`;
//! * `A(S)` is the image of ψ over triples that are not blocks (`φ`), with
//!   `α = |A(S)|`. A triple lies in `A(S)` exactly when adding it to `S`
//!   creates a Pasch configuration through it;
//! * `γ = β − α`, the number of blocks that lie in no Pasch configuration.
//!
//! For `n > 3` these satisfy
//! `C(n,2)/3 ≤ α ≤ β ≤ α + C(n,2)/3 ≤ C(n,3)`.
//!
//! All set computations run over the triple range in parallel and finish
//! with a sort, so results never depend on the number of worker threads.

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::NettoSpec;
use crate::error::{Error, Result};
use crate::model::{PaschConfig, Point, SteinerTripleSystem, Triple, TripleSet};

pub fn binom2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

pub fn binom3(n: u64) -> u64 {
    n * n.saturating_sub(1) * n.saturating_sub(2) / 6
}

/// `C(n,2)/3`, the number of blocks of an STS(n).
pub fn third_binom2(n: u64) -> u64 {
    binom2(n) / 3
}

#[inline]
fn psi(s: &SteinerTripleSystem, a: Point, b: Point, c: Point) -> Triple {
    Triple::from_distinct(s.star(a, b), s.star(b, c), s.star(c, a))
}

/// Runs `f(a, b, c, is_block)` over every triple `a < b < c` and gathers the
/// emitted keys, sorted and deduplicated.
fn collect_images<F>(s: &SteinerTripleSystem, f: F) -> TripleSet
where
    F: Fn(Point, Point, Point, bool, &mut Vec<u64>) + Sync,
{
    let n = s.order();
    let keys: Vec<u64> = (0..n)
        .into_par_iter()
        .flat_map_iter(|a| {
            let mut local = Vec::new();
            for b in a + 1..n {
                let ab = s.star(a, b);
                for c in b + 1..n {
                    f(a, b, c, ab == c, &mut local);
                }
            }
            local
        })
        .collect();
    par_set(n, keys)
}

fn par_set(n: u32, mut keys: Vec<u64>) -> TripleSet {
    keys.par_sort_unstable();
    keys.dedup();
    TripleSet::from_keys(n, keys)
}

/// `B(S)`, the image of ψ over all triples.
pub fn psi_image(s: &SteinerTripleSystem) -> TripleSet {
    let n = s.order();
    collect_images(s, |a, b, c, _, out| out.push(psi(s, a, b, c).key(n)))
}

/// `A(S)`, the image of ψ over the triples that are not blocks.
pub fn a_set(s: &SteinerTripleSystem) -> TripleSet {
    let n = s.order();
    collect_images(s, |a, b, c, is_block, out| {
        if !is_block {
            out.push(psi(s, a, b, c).key(n))
        }
    })
}

/// `(A(S), B(S))` in a single pass.
pub fn a_and_b(s: &SteinerTripleSystem) -> (TripleSet, TripleSet) {
    let n = s.order();
    let pairs: Vec<(u64, bool)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|a| {
            let mut local = Vec::new();
            for b in a + 1..n {
                let ab = s.star(a, b);
                for c in b + 1..n {
                    local.push((psi(s, a, b, c).key(n), ab == c));
                }
            }
            local
        })
        .collect();
    let a_keys = pairs.iter().filter(|(_, blk)| !blk).map(|&(k, _)| k).collect();
    // blocks are fixed by ψ, so B(S) = A(S) ∪ S without re-reading the pairs
    let b_keys = pairs.into_iter().map(|(k, _)| k).collect();
    (par_set(n, a_keys), par_set(n, b_keys))
}

/// Every Pasch configuration of `s`, sorted by signature.
///
/// Two blocks `{a,b,c}`, `{a,d,e}` through a common point close into a
/// Pasch when `b⋆d = c⋆e` (or `b⋆e = c⋆d`). Each configuration is recorded
/// from its smallest point only, then deduplicated by signature.
pub fn pasch_configs(s: &SteinerTripleSystem) -> Vec<PaschConfig> {
    let n = s.order();
    let mut found: Vec<([u64; 4], PaschConfig)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|a| {
            let lines: Vec<(Point, Point)> = (0..n)
                .filter(|&b| b != a && b < s.star(a, b))
                .map(|b| (b, s.star(a, b)))
                .collect();
            let mut local = Vec::new();
            for (i, &(b, c)) in lines.iter().enumerate() {
                for &(d, e) in &lines[i + 1..] {
                    for (d, e) in [(d, e), (e, d)] {
                        let f = s.star(b, d);
                        if f == s.star(c, e) && [b, c, d, e, f].iter().all(|&p| p > a) {
                            let cfg = PaschConfig::new([a, b, c, d, e, f]).expect("distinct points");
                            local.push((cfg.signature(n), cfg));
                        }
                    }
                }
            }
            local
        })
        .collect();
    found.par_sort_unstable_by_key(|(sig, _)| *sig);
    found.dedup_by_key(|(sig, _)| *sig);
    found.into_iter().map(|(_, cfg)| cfg).collect()
}

pub fn pasch_count(s: &SteinerTripleSystem) -> u64 {
    pasch_configs(s).len() as u64
}

/// Whether some Pasch configuration inside `s` uses the block `block`.
///
/// A Pasch through `{a,b,c}` contains exactly one other block through `a`,
/// so it is enough to scan the blocks through `a`.
pub fn block_in_pasch(s: &SteinerTripleSystem, block: &Triple) -> Result<bool> {
    if !s.contains(block) {
        return Err(Error::BlockNotInSystem(*block));
    }
    Ok(block_in_pasch_unchecked(s, block))
}

fn block_in_pasch_unchecked(s: &SteinerTripleSystem, block: &Triple) -> bool {
    let [a, b, c] = block.points();
    (0..s.order())
        .filter(|&d| !block.contains(d))
        .any(|d| {
            let e = s.star(a, d);
            s.star(b, d) == s.star(c, e)
        })
}

/// For each triple of `A(S)`, the number of non-block triples mapped onto it.
pub fn phi_preimage_census(s: &SteinerTripleSystem) -> Vec<(Triple, u64)> {
    let n = s.order();
    let mut keys: Vec<u64> = (0..n)
        .into_par_iter()
        .flat_map_iter(|a| {
            let mut local = Vec::new();
            for b in a + 1..n {
                let ab = s.star(a, b);
                for c in b + 1..n {
                    if ab != c {
                        local.push(psi(s, a, b, c).key(n));
                    }
                }
            }
            local
        })
        .collect();
    keys.par_sort_unstable();
    let mut out: Vec<(Triple, u64)> = Vec::new();
    for key in keys {
        match out.last_mut() {
            Some((t, count)) if t.key(n) == key => *count += 1,
            _ => out.push((Triple::from_key(key, n), 1)),
        }
    }
    out
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    /// `β = C(n,2)/3`; only ever set for `n > 3`.
    pub projective: bool,
    /// No Pasch configuration.
    pub anti_pasch: bool,
    /// `β = C(n,3)`.
    pub strongly_anti_pasch: bool,
    /// `γ = 0`: every block lies in a Pasch configuration.
    pub enough_pasch: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub n: u32,
    pub block_count: u64,
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
    pub pasch_count: u64,
    pub flags: ClassFlags,
    /// The inequality chain; vacuously true when `degenerate`.
    pub bounds_ok: bool,
    /// `n ≤ 3`, where the bounds and the projective class are not defined.
    pub degenerate: bool,
}

/// `C(n,2)/3 ≤ α ≤ β ≤ α + C(n,2)/3 ≤ C(n,3)`.
pub fn bounds_hold(n: u64, alpha: u64, beta: u64) -> bool {
    let third = third_binom2(n);
    third <= alpha && alpha <= beta && beta <= alpha + third && alpha + third <= binom3(n)
}

pub fn invariant_report(s: &SteinerTripleSystem) -> InvariantReport {
    let (a, b) = a_and_b(s);
    report_from_counts(s.order(), a.len() as u64, b.len() as u64, pasch_count(s))
}

pub(crate) fn report_from_counts(n: u32, alpha: u64, beta: u64, pasch_count: u64) -> InvariantReport {
    let n64 = n as u64;
    let degenerate = n <= 3;
    let flags = ClassFlags {
        projective: !degenerate && beta == third_binom2(n64),
        anti_pasch: pasch_count == 0,
        strongly_anti_pasch: beta == binom3(n64),
        enough_pasch: alpha == beta,
    };
    InvariantReport {
        n,
        block_count: third_binom2(n64),
        alpha,
        beta,
        gamma: beta - alpha,
        pasch_count,
        flags,
        bounds_ok: degenerate || bounds_hold(n64, alpha, beta),
        degenerate,
    }
}

/// `(α, β, γ)` of a direct product as predicted from its factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductPrediction {
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
}

/// Closed forms for `S × T` where `S` has order `m` and `T` order `n`:
///
/// ```text
/// α = 6αβ' + 6βα' − 6αα' + 6C(n,2)β + 6C(m,2)β' + nα + mα' + 4C(m,2)C(n,2)
/// β = 6ββ' + (6C(n,2) + n)β + (6C(m,2) + m)β' + 4C(m,2)C(n,2)
/// γ = 6γγ' + nγ + mγ'
/// ```
pub fn product_formulas(left: &InvariantReport, right: &InvariantReport) -> ProductPrediction {
    let (m, n) = (left.n as i128, right.n as i128);
    let (a, b, g) = (left.alpha as i128, left.beta as i128, left.gamma as i128);
    let (a2, b2, g2) = (right.alpha as i128, right.beta as i128, right.gamma as i128);
    let cm = m * (m - 1) / 2;
    let cn = n * (n - 1) / 2;
    let alpha = 6 * a * b2 + 6 * b * a2 - 6 * a * a2 + 6 * cn * b + 6 * cm * b2 + n * a + m * a2 + 4 * cm * cn;
    let beta = 6 * b * b2 + (6 * cn + n) * b + (6 * cm + m) * b2 + 4 * cm * cn;
    let gamma = 6 * g * g2 + n * g + m * g2;
    ProductPrediction {
        alpha: u64::try_from(alpha).expect("non-negative"),
        beta: u64::try_from(beta).expect("non-negative"),
        gamma: u64::try_from(gamma).expect("non-negative"),
    }
}

/// Checks, block by block, that a block lies in a Pasch configuration iff
/// `2B` or `B/2` (elementwise field scaling) is again a block.
///
/// Fails with [`Error::NotANettoSystem`] unless `s` is exactly the system
/// built from `spec`.
pub fn brouwer_criterion_check(s: &SteinerTripleSystem, spec: &NettoSpec) -> Result<bool> {
    let built = spec.system()?;
    if built.blocks() != s.blocks() {
        return Err(Error::NotANettoSystem);
    }
    let f = &spec.field;
    let two = f.from_int(2);
    let half = f.inv(two).ok_or(Error::NotANettoSystem)?;
    let scaled = |b: &Triple, k| {
        let [x, y, z] = b.points().map(|e| f.mul(e, k));
        Triple::from_distinct(x, y, z)
    };
    Ok(s.blocks().par_iter().all(|b| {
        let in_pasch = block_in_pasch_unchecked(s, b);
        let criterion = s.contains(&scaled(b, two)) || s.contains(&scaled(b, half));
        in_pasch == criterion
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{ag_power, choose_enough_c, netto_for_order, pg, trivial3};
    use crate::field::FieldSpec;

    #[test]
    fn fano_sets() {
        let fano = pg(2).unwrap();
        assert_eq!(psi_image(&fano), fano.block_set());
        assert_eq!(a_set(&fano), fano.block_set());
        let r = invariant_report(&fano);
        assert_eq!((r.alpha, r.beta, r.gamma, r.pasch_count), (7, 7, 0, 7));
        assert!(r.flags.projective && r.flags.enough_pasch && !r.flags.anti_pasch);
        assert!(!r.flags.strongly_anti_pasch);
        assert!(r.bounds_ok && !r.degenerate);
    }

    #[test]
    fn sts9_sets() {
        let s = ag_power(2).unwrap();
        assert_eq!(psi_image(&s).len(), 84);
        assert_eq!(a_set(&s).len(), 72);
        let r = invariant_report(&s);
        assert_eq!((r.alpha, r.beta, r.gamma, r.pasch_count), (72, 84, 12, 0));
        assert!(r.flags.anti_pasch && r.flags.strongly_anti_pasch);
        assert!(!r.flags.enough_pasch && !r.flags.projective);
    }

    #[test]
    fn sts3_is_degenerate() {
        let s = trivial3();
        assert_eq!(psi_image(&s), s.block_set());
        assert!(a_set(&s).is_empty());
        let r = invariant_report(&s);
        assert!(r.degenerate && r.bounds_ok);
        assert!(!r.flags.projective && r.flags.strongly_anti_pasch && r.flags.anti_pasch);
        assert_eq!(r.gamma, 1);
    }

    #[test]
    fn pg3_counts() {
        let r = invariant_report(&pg(3).unwrap());
        assert_eq!((r.beta, r.pasch_count), (35, 105));
        assert!(r.flags.projective);
    }

    #[test]
    fn pasch_membership() {
        let fano = pg(2).unwrap();
        for b in fano.blocks() {
            assert!(block_in_pasch(&fano, b).unwrap());
        }
        let s9 = ag_power(2).unwrap();
        for b in s9.blocks() {
            assert!(!block_in_pasch(&s9, b).unwrap());
        }
        let s13 = netto_for_order(13, &[1, 2]).unwrap();
        assert!(s13.blocks().iter().all(|b| block_in_pasch(&s13, b).unwrap()));
        let bogus = Triple::new(0, 1, 3).unwrap();
        assert!(!fano.contains(&bogus));
        assert_eq!(block_in_pasch(&fano, &bogus), Err(Error::BlockNotInSystem(bogus)));
    }

    #[test]
    fn pasch_blocks_each_meet_once() {
        let s = pg(3).unwrap();
        for cfg in pasch_configs(&s) {
            let blocks = cfg.blocks();
            for b in &blocks {
                assert!(s.contains(b));
            }
            for i in 0..4 {
                for j in i + 1..4 {
                    assert_eq!(blocks[i].meet(&blocks[j]), 1);
                }
            }
        }
    }

    #[test]
    fn census_extremes() {
        let fano = phi_preimage_census(&pg(2).unwrap());
        assert_eq!(fano.len(), 7);
        assert!(fano.iter().all(|&(_, k)| k == 4));
        let s9 = phi_preimage_census(&ag_power(2).unwrap());
        assert_eq!(s9.len(), 72);
        assert!(s9.iter().all(|&(_, k)| k == 1));
    }

    #[test]
    fn product_predictions() {
        let s3 = invariant_report(&trivial3());
        let p = product_formulas(&s3, &s3);
        assert_eq!((p.alpha, p.beta, p.gamma), (72, 84, 12));
        let fano = invariant_report(&pg(2).unwrap());
        let p = product_formulas(&fano, &fano);
        assert_eq!((p.alpha, p.beta, p.gamma), (3920, 3920, 0));
        let s9 = invariant_report(&ag_power(2).unwrap());
        let p = product_formulas(&s9, &s9);
        assert_eq!(p.gamma, 1080);
        assert_eq!(p.gamma, third_binom2(81));
    }

    #[test]
    fn brouwer_on_small_netto() {
        let f13 = FieldSpec::prime(13).unwrap();
        let spec = crate::constructions::NettoSpec::new(f13, &[1, 2]).unwrap();
        assert!(brouwer_criterion_check(&spec.system().unwrap(), &spec).unwrap());
        let spec19 = choose_enough_c(&FieldSpec::prime(19).unwrap()).unwrap();
        assert!(brouwer_criterion_check(&spec19.system().unwrap(), &spec19).unwrap());
        let spec7 = crate::constructions::NettoSpec::new(FieldSpec::prime(7).unwrap(), &[1]).unwrap();
        assert!(brouwer_criterion_check(&spec7.system().unwrap(), &spec7).unwrap());
        assert_eq!(brouwer_criterion_check(&pg(3).unwrap(), &spec), Err(Error::NotANettoSystem));
    }

    #[test]
    fn report_is_thread_count_independent() {
        let s = pg(4).unwrap();
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| (invariant_report(&s), a_set(&s), pasch_configs(&s)))
        };
        assert_eq!(run(1), run(4));
    }
}
