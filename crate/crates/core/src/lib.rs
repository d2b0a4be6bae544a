//! Steiner triple systems and the invariants built from their Pasch
//! configurations.
//!
//! The crate is organised bottom-up:
//!
//! * [`model`]: triples, triple sets and validated systems with their
//!   Steiner quasigroup;
//! * [`field`] and [`constructions`]: projective and affine systems, direct
//!   products, Bose systems and Netto-type systems over `GF(p)` and `GF(p²)`;
//! * [`invariants`]: `A(S)`, `B(S)`, `α`, `β`, `γ`, Pasch counting and the
//!   direct-product formulas;
//! * [`oracle`]: brute-force reference implementations and a suite that
//!   compares them with the fast engines;
//! * [`format`], [`generate`] and [`corpus`]: file formats, exhaustive
//!   small-order generation and a built-in set of test systems.
//!
//! ```
//! use steiner_pasch::{constructions::pg, invariants::invariant_report};
//!
//! let fano = pg(2).unwrap();
//! let report = invariant_report(&fano);
//! assert_eq!((report.alpha, report.beta, report.gamma), (7, 7, 0));
//! assert_eq!(report.pasch_count, 7);
//! ```

pub mod constructions;
pub mod corpus;
pub mod error;
pub mod field;
pub mod format;
pub mod generate;
pub mod invariants;
pub mod iso;
pub mod model;
pub mod oracle;

pub use error::{Error, Result};
pub use model::{validate, PaschConfig, Point, SteinerTripleSystem, Triple, TripleSet};
