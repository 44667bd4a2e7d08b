//! SAP intervals and interesting intervals over the sorted suffix skeleton:
//! the only places where separator-based variants can differ. Also the run
//! counting and run-length coding used throughout.

use alloc::vec::Vec;

use crate::arrays::build_gsa;
use crate::collection::{StringCollection, DOLLAR};

/// A maximal block of transform positions whose rotations start with the
/// same shared suffix followed by a separator. Positions are 1-based and
/// inclusive; `chars` lists the preceding characters in block order, with
/// every dollar collapsed to the one dollar byte.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SapInterval {
    pub begin: usize,
    pub end: usize,
    pub suffix: Vec<u8>,
    pub chars: Vec<u8>,
    /// 1-based indices of the strings contributing each position.
    pub members: Vec<usize>,
}

impl SapInterval {
    pub fn len(&self) -> usize {
        self.end - self.begin + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Distinct preceding symbols, ascending, dollars as one class.
    pub fn distinct_symbols(&self) -> Vec<u8> {
        let mut syms = self.chars.clone();
        syms.sort_unstable();
        syms.dedup();
        syms
    }

    /// An interval is interesting when at least two distinct symbols precede
    /// the shared suffix.
    pub fn is_interesting(&self) -> bool {
        self.distinct_symbols().len() >= 2
    }
}

/// All SAP intervals of the collection in position order: maximal groups of
/// two or more consecutive suffix-array entries whose whole-string suffixes
/// are equal. The block of the empty suffix covers positions `1..=m`.
pub fn sap_intervals(c: &StringCollection) -> Vec<SapInterval> {
    let gsa = build_gsa(c);
    let entries = gsa.entries();
    let suffix_of = |&(d, i): &(usize, usize)| -> &[u8] { &c.item(d - 1).as_bytes()[i - 1..] };
    let mut out = Vec::new();
    let mut start = 0;
    while start < entries.len() {
        let u = suffix_of(&entries[start]);
        let mut end = start + 1;
        while end < entries.len() && suffix_of(&entries[end]) == u {
            end += 1;
        }
        if end - start >= 2 {
            let block = &entries[start..end];
            let chars = block
                .iter()
                .map(|&(d, i)| {
                    if i == 1 {
                        DOLLAR
                    } else {
                        c.item(d - 1).as_bytes()[i - 2]
                    }
                })
                .collect();
            let members = block.iter().map(|&(d, _)| d).collect();
            out.push(SapInterval {
                begin: start + 1,
                end,
                suffix: u.to_vec(),
                chars,
                members,
            });
        }
        start = end;
    }
    out
}

/// The SAP intervals whose preceding characters are not all equal.
pub fn interesting_intervals(c: &StringCollection) -> Vec<SapInterval> {
    sap_intervals(c).into_iter().filter(SapInterval::is_interesting).collect()
}

/// Number of maximal equal-byte runs.
pub fn count_runs(text: &[u8]) -> usize {
    if text.is_empty() {
        return 0;
    }
    1 + text.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Run-length encoding: adjacent runs carry distinct symbols and lengths
/// sum to the total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunLengthEncoding {
    pub runs: Vec<(u8, usize)>,
    pub total_len: usize,
}

impl RunLengthEncoding {
    pub fn decode(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.total_len);
        for &(b, len) in &self.runs {
            out.extend(core::iter::repeat_n(b, len));
        }
        out
    }
}

pub fn rle(text: &[u8]) -> RunLengthEncoding {
    let mut runs: Vec<(u8, usize)> = Vec::new();
    for &b in text {
        match runs.last_mut() {
            Some((sym, len)) if *sym == b => *len += 1,
            _ => runs.push((b, 1)),
        }
    }
    RunLengthEncoding { runs, total_len: text.len() }
}
