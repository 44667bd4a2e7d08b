//! Conjugate-array and suffix-array constructions with the exact tie rules
//! the transforms rely on: conjugates in omega order with ties by string
//! index then position, suffixes with dollar-rank ties.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::collection::{StringCollection, DOLLAR};
use crate::order::cyclic_compare;

/// Sorted start positions (1-based) of the conjugates of one string.
/// Lexicographic order, ties by start position ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugateArray {
    entries: Vec<usize>,
}

impl ConjugateArray {
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }
}

pub fn build_ca(t: &[u8]) -> ConjugateArray {
    let n = t.len();
    let mut doubled = Vec::with_capacity(2 * n);
    doubled.extend_from_slice(t);
    doubled.extend_from_slice(t);
    let mut idx: Vec<usize> = (0..n).collect();
    // stable sort keeps equal rotations in ascending start order
    idx.sort_by(|&a, &b| doubled[a..a + n].cmp(&doubled[b..b + n]));
    ConjugateArray { entries: idx.into_iter().map(|i| i + 1).collect() }
}

/// How the collection's strings are extended before sorting conjugates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DollarMode {
    /// Raw strings, no separator.
    None,
    /// One shared dollar appended to every string.
    Shared,
    /// A ranked dollar per string, `$_1 < $_2 < ... < $_m`.
    Distinct,
}

/// Conjugates of all (possibly dollar-extended) strings in omega order,
/// ties broken by string index, then by position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedConjugateArray {
    entries: Vec<(usize, usize)>,
    mode: DollarMode,
}

impl GeneralizedConjugateArray {
    /// `(d, i)` pairs, both 1-based; `i` ranges over the extended string.
    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    pub fn mode(&self) -> DollarMode {
        self.mode
    }

    pub fn to_text(&self) -> String {
        render_pairs(&self.entries)
    }
}

pub fn build_gca(c: &StringCollection, mode: DollarMode) -> GeneralizedConjugateArray {
    let exts: Vec<Vec<u8>> = match mode {
        DollarMode::None => c.items().iter().map(|s| s.as_bytes().to_vec()).collect(),
        DollarMode::Shared | DollarMode::Distinct => dollar_extended(c),
    };
    let mut entries: Vec<(usize, usize)> = Vec::new();
    for (d, ext) in exts.iter().enumerate() {
        for i in 0..ext.len() {
            entries.push((d, i));
        }
    }
    match mode {
        DollarMode::Distinct => {
            // With ranked dollars two distinct rotations always differ at or
            // before the first dollar, so a plain symbol-wise scan decides.
            entries.sort_by(|&(d, i), &(e, j)| {
                ranked_rotation_compare(&exts[d], i, d, &exts[e], j, e)
                    .then(d.cmp(&e))
                    .then(i.cmp(&j))
            });
        }
        _ => {
            entries.sort_by(|&(d, i), &(e, j)| {
                cyclic_compare(&exts[d], i, &exts[e], j)
                    .then(exts[d].len().cmp(&exts[e].len()))
                    .then(d.cmp(&e))
                    .then(i.cmp(&j))
            });
        }
    }
    GeneralizedConjugateArray {
        entries: entries.into_iter().map(|(d, i)| (d + 1, i + 1)).collect(),
        mode,
    }
}

fn ranked_rotation_compare(
    a: &[u8],
    ai: usize,
    da: usize,
    b: &[u8],
    bi: usize,
    db: usize,
) -> Ordering {
    let la = a.len();
    let lb = b.len();
    for k in 0..la + lb {
        let x = a[(ai + k) % la];
        let y = b[(bi + k) % lb];
        let kx = (x, if x == DOLLAR { da + 1 } else { 0 });
        let ky = (y, if y == DOLLAR { db + 1 } else { 0 });
        match kx.cmp(&ky) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}

/// Lexicographically sorted suffixes of the dollar-terminated strings, ties
/// resolved by dollar rank. Entry `(d, i)` is 1-based with
/// `i in 1..=|T_d|+1`; the first `m` entries are the bare dollar suffixes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedSuffixArray {
    entries: Vec<(usize, usize)>,
}

impl GeneralizedSuffixArray {
    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    pub fn to_text(&self) -> String {
        render_pairs(&self.entries)
    }
}

pub fn build_gsa(c: &StringCollection) -> GeneralizedSuffixArray {
    let exts = dollar_extended(c);
    let mut entries: Vec<(usize, usize)> = Vec::new();
    for (d, ext) in exts.iter().enumerate() {
        for i in 0..ext.len() {
            entries.push((d, i));
        }
    }
    // Each suffix ends with the only dollar of its string, so slice
    // comparison never hits the proper-prefix case; equal slices are the
    // same suffix of equal strings and fall to the rank.
    entries.sort_by(|&(d, i), &(e, j)| exts[d][i..].cmp(&exts[e][j..]).then(d.cmp(&e)));
    GeneralizedSuffixArray {
        entries: entries.into_iter().map(|(d, i)| (d + 1, i + 1)).collect(),
    }
}

/// Plain suffix array of a byte string, 0-based. Intended for inputs with a
/// unique smallest terminator; comparison sort at desk scale.
pub fn suffix_array(v: &[u8]) -> Vec<usize> {
    let mut sa: Vec<usize> = (0..v.len()).collect();
    sa.sort_by(|&a, &b| v[a..].cmp(&v[b..]));
    sa
}

pub(crate) fn dollar_extended(c: &StringCollection) -> Vec<Vec<u8>> {
    c.items()
        .iter()
        .map(|s| {
            let mut ext = Vec::with_capacity(s.len() + 1);
            ext.extend_from_slice(s.as_bytes());
            ext.push(DOLLAR);
            ext
        })
        .collect()
}

fn render_pairs(entries: &[(usize, usize)]) -> String {
    let mut out = String::new();
    for &(d, i) in entries {
        out.push_str(&format!("({d},{i})\n"));
    }
    out
}
