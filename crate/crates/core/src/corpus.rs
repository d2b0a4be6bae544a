//! A fixed set of small systems used by the test suites and the CLI.

use crate::constructions::{ag_power, bose, choose_enough_c, netto_for_order, pg, trivial3};
use crate::field::FieldSpec;
use crate::model::{validate, Point, SteinerTripleSystem};

/// The STS(13) that is not cyclic: 8 Pasch configurations, `γ = 3`.
/// Normalized at point 0 as produced by [`crate::generate::gen_all`].
pub const STS13_NONCYCLIC: [[Point; 3]; 26] = [
    [0, 1, 2], [0, 3, 4], [0, 5, 6], [0, 7, 8], [0, 9, 10], [0, 11, 12],
    [1, 3, 5], [1, 4, 6], [1, 7, 9], [1, 8, 11], [1, 10, 12],
    [2, 3, 7], [2, 4, 8], [2, 5, 10], [2, 6, 12], [2, 9, 11],
    [3, 6, 9], [3, 8, 12], [3, 10, 11],
    [4, 5, 11], [4, 7, 10], [4, 9, 12],
    [5, 7, 12], [5, 8, 9],
    [6, 7, 11], [6, 8, 10],
];

pub fn sts13_noncyclic() -> SteinerTripleSystem {
    validate(13, &STS13_NONCYCLIC).expect("hard-coded STS(13)")
}

/// The cyclic STS(13), built as the Netto system with `C = {1, 2}`.
pub fn sts13_cyclic() -> SteinerTripleSystem {
    netto_for_order(13, &[1, 2]).expect("netto(13)")
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub system: SteinerTripleSystem,
}

/// Every built-in system, in increasing order.
pub fn builtin() -> Vec<CorpusEntry> {
    let entry = |name, system| CorpusEntry { name, system };
    vec![
        entry("sts3", trivial3()),
        entry("fano", pg(2).expect("pg(2)")),
        entry("sts9", ag_power(2).expect("ag(2)")),
        entry("sts13-cyclic", sts13_cyclic()),
        entry("sts13-noncyclic", sts13_noncyclic()),
        entry("pg3", pg(3).expect("pg(3)")),
        entry("bose15", bose(15).expect("bose(15)")),
        entry(
            "netto19",
            choose_enough_c(&FieldSpec::prime(19).expect("GF(19)"))
                .and_then(|spec| spec.system())
                .expect("netto(19)"),
        ),
        entry("bose21", bose(21).expect("bose(21)")),
        entry("ag3", ag_power(3).expect("ag(3)")),
    ]
}

/// Built-in systems of order at most `max_n`.
pub fn builtin_up_to(max_n: u32) -> Vec<CorpusEntry> {
    builtin().into_iter().filter(|e| e.system.order() <= max_n).collect()
}
