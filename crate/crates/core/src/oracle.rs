//! Brute-force reference implementations, written straight from the
//! definitions.
//!
//! Nothing here touches the quasigroup table or the fast engines in
//! [`crate::invariants`]: block membership comes from a plain hash set built
//! out of the block list. [`theorem_suite`] then compares the two sides.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::invariants::{
    a_and_b, binom3, block_in_pasch, bounds_hold, pasch_count, phi_preimage_census, report_from_counts,
    third_binom2, InvariantReport,
};
use crate::model::{PaschConfig, Point, SteinerTripleSystem, Triple, TripleSet};

/// Default ceiling on the number of blocks for [`pasch_count_by_4subsets`].
pub const DEFAULT_MAX_BLOCKS: u64 = 160;
/// Default ceiling on the order for [`a_set_by_definition`] inside the suite.
pub const DEFAULT_MAX_ORDER: u64 = 21;

/// Labels four blocks as `{a,b,c}, {a,d,e}, {f,b,d}, {f,c,e}` if they form a
/// Pasch configuration.
///
/// The blocks are sorted first; `a < b < c` are the points of the smallest
/// one, so the labelling does not depend on the input order.
pub fn pasch_pattern_match(blocks: [Triple; 4]) -> Option<PaschConfig> {
    let mut blocks = blocks;
    blocks.sort_unstable();
    if blocks.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let mut points: Vec<Point> = blocks.iter().flat_map(|b| b.points()).collect();
    points.sort_unstable();
    points.dedup();
    if points.len() != 6 {
        return None;
    }
    for &p in &points {
        if blocks.iter().filter(|b| b.contains(p)).count() != 2 {
            return None;
        }
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if blocks[i].meet(&blocks[j]) != 1 {
                return None;
            }
        }
    }

    let [a, b, c] = blocks[0].points();
    let other_through = |p: Point| blocks[1..].iter().find(|blk| blk.contains(p)).copied();
    let ade = other_through(a)?;
    let fbd = other_through(b)?;
    let d = ade.points().into_iter().find(|&p| p != a && fbd.contains(p))?;
    let e = ade.points().into_iter().find(|&p| p != a && p != d)?;
    let f = fbd.points().into_iter().find(|&p| p != b && p != d)?;
    let cfg = PaschConfig::new([a, b, c, d, e, f])?;
    let mut expected = cfg.blocks();
    expected.sort_unstable();
    (expected == blocks).then_some(cfg)
}

fn block_lookup(s: &SteinerTripleSystem) -> HashSet<[Point; 3]> {
    s.blocks().iter().map(Triple::points).collect()
}

/// `A(S)` straight from its definition: a triple `B` belongs to it iff
/// `S ∪ {B}` contains a Pasch configuration one of whose blocks is `B`.
///
/// Blocks of `S` are candidates too; for them `S ∪ {B} = S`.
pub fn a_set_by_definition(s: &SteinerTripleSystem) -> TripleSet {
    let n = s.order();
    let blocks: Vec<Triple> = s.blocks().to_vec();
    let mut members = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let candidate = Triple::new(a, b, c).expect("distinct");
                // in a Pasch any two blocks share exactly one point
                let partners: Vec<Triple> =
                    blocks.iter().copied().filter(|blk| blk.meet(&candidate) == 1).collect();
                if completes_pasch(candidate, &partners) {
                    members.push(candidate);
                }
            }
        }
    }
    TripleSet::from_triples(n, members)
}

fn completes_pasch(candidate: Triple, partners: &[Triple]) -> bool {
    for i in 0..partners.len() {
        for j in i + 1..partners.len() {
            for k in j + 1..partners.len() {
                if pasch_pattern_match([candidate, partners[i], partners[j], partners[k]]).is_some() {
                    return true;
                }
            }
        }
    }
    false
}

/// Counts Pasch configurations by testing every 4-subset of blocks.
///
/// Refuses systems with more than `max_blocks` blocks.
pub fn pasch_count_by_4subsets(s: &SteinerTripleSystem, max_blocks: u64) -> Result<u64> {
    let blocks = s.blocks();
    let b = blocks.len();
    if b as u64 > max_blocks {
        return Err(Error::TooLargeForOracle { what: "block count", size: b as u64, limit: max_blocks });
    }
    let mut count = 0;
    for i in 0..b {
        for j in i + 1..b {
            for k in j + 1..b {
                for l in k + 1..b {
                    if pasch_pattern_match([blocks[i], blocks[j], blocks[k], blocks[l]]).is_some() {
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(count)
}

/// One named check of [`theorem_suite`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    /// Run [`a_set_by_definition`] only up to this order.
    pub max_oracle_order: u64,
    /// Run [`pasch_count_by_4subsets`] only up to this many blocks.
    pub max_oracle_blocks: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { max_oracle_order: DEFAULT_MAX_ORDER, max_oracle_blocks: DEFAULT_MAX_BLOCKS }
    }
}

struct Suite(Vec<Check>);

impl Suite {
    fn push(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        self.0.push(Check { name, passed, detail: detail.into() });
    }
}

/// Evaluates every structural law on `s`, comparing fast and brute-force
/// routes where both exist.
pub fn theorem_suite(s: &SteinerTripleSystem, opts: SuiteOptions) -> Vec<Check> {
    let n = s.order();
    let n64 = n as u64;
    let blocks = s.blocks();
    let lookup = block_lookup(s);
    let (a, b) = a_and_b(s);
    let pasch = pasch_count(s);
    let report = report_from_counts(n, a.len() as u64, b.len() as u64, pasch);
    let third = third_binom2(n64);
    let mut suite = Suite(Vec::new());

    let mut axioms = true;
    for x in 0..n {
        for y in 0..n {
            let xy = s.star(x, y);
            axioms &= s.star(x, x) == x && xy == s.star(y, x) && s.star(x, xy) == y;
            if x != y {
                axioms &= lookup.contains(&Triple::new(x, y, xy).map(|t| t.points()).unwrap_or([0; 3]));
            }
        }
    }
    suite.push("quasigroup-axioms", axioms, "idempotent, commutative, self-inverse, consistent with blocks");

    let mut cover = vec![0u32; (n * n) as usize];
    for blk in blocks {
        let [x, y, z] = blk.points();
        for (u, v) in [(x, y), (x, z), (y, z)] {
            cover[(u * n + v) as usize] += 1;
        }
    }
    let covered_once = (0..n).all(|u| (u + 1..n).all(|v| cover[(u * n + v) as usize] == 1));
    suite.push("pair-coverage", covered_once, "every pair in exactly one block");

    let mut fixed_ok = true;
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                let image = Triple::new(s.star(x, y), s.star(y, z), s.star(z, x));
                let fixed = image == Triple::new(x, y, z);
                fixed_ok &= fixed == lookup.contains(&[x, y, z]);
            }
        }
    }
    suite.push("fixed-point-law", fixed_ok, "psi(T) = T iff T is a block");

    let union = a.union(&s.block_set());
    suite.push("union-law", union == b, format!("|A ∪ S| = {}, beta = {}", union.len(), b.len()));

    if report.degenerate {
        suite.push("inequality-chain", true, "skipped: n <= 3");
    } else {
        suite.push(
            "inequality-chain",
            bounds_hold(n64, report.alpha, report.beta),
            format!(
                "{} <= {} <= {} <= {} <= {}",
                third,
                report.alpha,
                report.beta,
                report.alpha + third,
                binom3(n64)
            ),
        );
    }

    suite.push(
        "anti-pasch-equivalence",
        (pasch == 0) == (report.gamma == third),
        format!("pasch = {pasch}, gamma = {}, C(n,2)/3 = {third}", report.gamma),
    );

    let strongly_by_beta = report.beta == binom3(n64);
    let strongly_by_alpha = report.alpha + third == binom3(n64);
    suite.push(
        "strongly-anti-pasch-equivalence",
        strongly_by_beta == strongly_by_alpha,
        format!("beta = {}, alpha = {}", report.beta, report.alpha),
    );
    suite.push(
        "strongly-implies-anti-pasch",
        !strongly_by_beta || pasch == 0,
        format!("strongly = {strongly_by_beta}, pasch = {pasch}"),
    );

    let outside = blocks
        .iter()
        .filter(|blk| !block_in_pasch(s, blk).expect("block of s"))
        .count() as u64;
    suite.push(
        "gamma-counts-pasch-free-blocks",
        outside == report.gamma,
        format!("blocks in no Pasch = {outside}, gamma = {}", report.gamma),
    );

    if report.degenerate {
        suite.push("projective-equivalence", true, "skipped: n <= 3");
        suite.push("preimage-bound", true, "skipped: n <= 3");
    } else {
        let by_beta = report.beta == third;
        let by_alpha = report.alpha == third;
        let by_count = 24 * pasch == n64 * (n64 - 1) * (n64 - 3);
        suite.push(
            "projective-equivalence",
            by_beta == by_alpha && by_alpha == by_count,
            format!("beta: {by_beta}, alpha: {by_alpha}, pasch count n(n-1)(n-3)/24: {by_count}"),
        );
        let census = phi_preimage_census(s);
        let max = census.iter().map(|&(_, k)| k).max().unwrap_or(0);
        let min = census.iter().map(|&(_, k)| k).min().unwrap_or(0);
        let total: u64 = census.iter().map(|&(_, k)| k).sum();
        suite.push(
            "preimage-bound",
            min >= 1 && max <= n64 - 3 && total == binom3(n64) - blocks.len() as u64,
            format!("sizes in [{min}, {max}], total {total}"),
        );
    }

    suite.push(
        "gamma-gap",
        third == 0 || report.gamma != third - 1,
        format!("gamma = {}, C(n,2)/3 - 1 = {}", report.gamma, third.saturating_sub(1)),
    );

    if n64 <= opts.max_oracle_order {
        let oracle = a_set_by_definition(s);
        suite.push(
            "a-set-oracle",
            oracle == a,
            format!("definition: {}, quasigroup formula: {}", oracle.len(), a.len()),
        );
    } else {
        suite.push("a-set-oracle", true, format!("skipped: n > {}", opts.max_oracle_order));
    }
    match pasch_count_by_4subsets(s, opts.max_oracle_blocks) {
        Ok(count) => suite.push(
            "pasch-count-oracle",
            count == pasch,
            format!("4-subsets: {count}, fast: {pasch}"),
        ),
        Err(e) => suite.push("pasch-count-oracle", true, format!("skipped: {e}")),
    }

    let relabelled = s.relabel(&affine_permutation(n)).expect("affine map is a bijection");
    let other = crate::invariants::invariant_report(&relabelled);
    suite.push("relabel-invariance", same_invariants(&report, &other), "affine relabelling");

    suite.0
}

fn same_invariants(x: &InvariantReport, y: &InvariantReport) -> bool {
    (x.alpha, x.beta, x.gamma, x.pasch_count, x.flags) == (y.alpha, y.beta, y.gamma, y.pasch_count, y.flags)
}

/// `i ↦ (k·i + 1) mod n` for the smallest `k ≥ 2` coprime to `n`.
fn affine_permutation(n: u32) -> Vec<Point> {
    if n <= 1 {
        return (0..n).collect();
    }
    let gcd = |mut a: u32, mut b: u32| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let k = (2..).find(|&k| gcd(k, n) == 1).expect("coprime multiplier");
    (0..n).map(|i| ((k as u64 * i as u64 + 1) % n as u64) as Point).collect()
}
