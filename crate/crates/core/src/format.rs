//! The `.sts` text format and the JSON invariant report.
//!
//! An `.sts` file is
//!
//! ```text
//! # construction: pg
//! # k: 2
//! 7
//! 0 1 2
//! 0 3 4
//! ...
//! ```
//!
//! Optional `#` comment lines come first, then the order `n`, then one block
//! per line as three 0-based indices. Indices within a line ascend and lines
//! ascend lexicographically, so every system has exactly one canonical file.
//! Every line, including the last, ends in `\n`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{ClassFlags, InvariantReport};
use crate::model::{block_count_for, validate, Point, SteinerTripleSystem};

#[derive(Clone, Debug)]
pub struct StsFile {
    /// Comment lines with the leading `#` removed.
    pub comments: Vec<String>,
    pub n: u32,
    pub blocks: Vec<[Point; 3]>,
}

/// Comments are provenance only and do not take part in equality.
impl PartialEq for StsFile {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.blocks == other.blocks
    }
}

impl Eq for StsFile {}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

impl StsFile {
    pub fn from_system(s: &SteinerTripleSystem) -> StsFile {
        StsFile { comments: Vec::new(), n: s.order(), blocks: s.blocks().iter().map(|b| b.points()).collect() }
    }

    /// Appends a `# key: value` provenance header.
    pub fn with_comment(mut self, key: &str, value: impl std::fmt::Display) -> StsFile {
        self.comments.push(format!(" {key}: {value}"));
        self
    }

    /// Reads a canonical file. Block lines must be sorted and unique and the
    /// number of block lines must be `n(n-1)/6`; pair coverage is left to
    /// [`StsFile::to_system`].
    pub fn parse(text: &str) -> Result<StsFile> {
        let mut comments = Vec::new();
        let mut lines = text.split_terminator('\n').enumerate().map(|(i, l)| (i + 1, l));
        let mut n = None;
        for (no, line) in lines.by_ref() {
            if let Some(rest) = line.strip_prefix('#') {
                comments.push(rest.to_string());
                continue;
            }
            let value: u32 = line
                .trim()
                .parse()
                .map_err(|_| parse_err(no, format!("expected the order, found {line:?}")))?;
            n = Some((no, value));
            break;
        }
        let Some((n_line, n)) = n else {
            return Err(parse_err(1, "missing order line"));
        };

        let mut blocks: Vec<[Point; 3]> = Vec::new();
        let mut last_line = n_line;
        for (no, line) in lines {
            last_line = no;
            let fields: Vec<&str> = line.split(' ').collect();
            if fields.len() != 3 {
                return Err(parse_err(no, format!("expected three indices separated by single spaces, found {line:?}")));
            }
            let mut block = [0; 3];
            for (slot, field) in block.iter_mut().zip(&fields) {
                *slot = field.parse().map_err(|_| parse_err(no, format!("bad index {field:?}")))?;
                if *slot >= n {
                    return Err(parse_err(no, format!("PointOutOfRange: {} is not below {n}", *slot)));
                }
            }
            if !(block[0] < block[1] && block[1] < block[2]) {
                return Err(parse_err(no, "indices must be strictly increasing"));
            }
            if let Some(prev) = blocks.last() {
                if *prev == block {
                    return Err(parse_err(no, "duplicate block"));
                }
                if *prev > block {
                    return Err(parse_err(no, "blocks out of lexicographic order"));
                }
            }
            blocks.push(block);
        }
        match block_count_for(n) {
            Some(expected) if expected == blocks.len() as u64 => {}
            expected => {
                return Err(parse_err(
                    last_line,
                    format!(
                        "WrongBlockCount: order {n} needs {} block lines, found {}",
                        expected.map_or("a whole number of".to_string(), |e| e.to_string()),
                        blocks.len()
                    ),
                ))
            }
        }
        Ok(StsFile { comments, n, blocks })
    }

    pub fn to_system(&self) -> Result<SteinerTripleSystem> {
        validate(self.n, &self.blocks)
    }

    /// Canonical text: comments, order, then sorted blocks.
    pub fn render(&self) -> String {
        let mut out = String::with_capacity(12 * (self.blocks.len() + 1));
        for c in &self.comments {
            let _ = writeln!(out, "#{c}");
        }
        let _ = writeln!(out, "{}", self.n);
        let mut blocks = self.blocks.clone();
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable();
        for [a, b, c] in blocks {
            let _ = writeln!(out, "{a} {b} {c}");
        }
        out
    }
}

/// Machine-readable invariant report; field order is the serialized key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportJson {
    pub n: u32,
    pub blocks: u64,
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
    pub pasch_count: u64,
    pub flags: ClassFlags,
    pub bounds_ok: bool,
    pub degenerate: bool,
}

impl From<&InvariantReport> for ReportJson {
    fn from(r: &InvariantReport) -> Self {
        ReportJson {
            n: r.n,
            blocks: r.block_count,
            alpha: r.alpha,
            beta: r.beta,
            gamma: r.gamma,
            pasch_count: r.pasch_count,
            flags: r.flags,
            bounds_ok: r.bounds_ok,
            degenerate: r.degenerate,
        }
    }
}

impl ReportJson {
    /// Compact single-line JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain struct serializes")
    }
}
