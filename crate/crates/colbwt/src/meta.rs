//! Meta-strings: the length-m abstraction where every string is replaced by
//! its lexicographic rank among the distinct inputs. Models the input and
//! output orders of the separator-based variants, including the fact that
//! the concatenated variant permutes the input order exactly like a
//! sentinel-free transform of the meta-string itself.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arrays::{build_gca, build_gsa, suffix_array, DollarMode};
use crate::collection::{StringCollection, DOLLAR, HASH};
use crate::error::{Error, Result};
use crate::transforms::{mdol_ebwt, Transform, Variant};

/// Sequence of 0-based meta ranks over an alphabet of `distinct` symbols.
/// Two positions carry the same rank iff the underlying strings are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetaString {
    symbols: Vec<usize>,
    distinct: usize,
}

impl MetaString {
    pub fn symbols(&self) -> &[usize] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn distinct(&self) -> usize {
        self.distinct
    }

    /// Lowercase letters in rank order: rank 0 prints as `a`.
    pub fn render(&self) -> String {
        self.symbols
            .iter()
            .map(|&r| {
                if r < 26 {
                    (b'a' + r as u8) as char
                } else {
                    '?'
                }
            })
            .collect()
    }
}

/// Meta-string of the input order: each string mapped to its lexicographic
/// rank among the distinct strings.
pub fn input_meta(c: &StringCollection) -> MetaString {
    let mut by_rank: BTreeMap<&[u8], usize> = BTreeMap::new();
    for item in c.items() {
        by_rank.insert(item.as_bytes(), 0);
    }
    // sorted iteration assigns the lexicographic ranks
    for (rank, slot) in by_rank.values_mut().enumerate() {
        *slot = rank;
    }
    let symbols = c.items().iter().map(|s| by_rank[s.as_bytes()]).collect();
    MetaString { symbols, distinct: by_rank.len() }
}

/// Meta-string read off the order in which the strings occupy the first m
/// positions of a separator-based transform (for the concatenated variant,
/// the first m positions of its adapted form).
pub fn output_meta(variant: Variant, c: &StringCollection) -> Result<MetaString> {
    let order = separator_block_order(variant, c)?;
    let input = input_meta(c);
    let symbols = order.iter().map(|&d| input.symbols()[d]).collect();
    Ok(MetaString { symbols, distinct: input.distinct() })
}

/// 0-based string indices in the order their separator rotations occupy the
/// first m transform positions.
pub(crate) fn separator_block_order(variant: Variant, c: &StringCollection) -> Result<Vec<usize>> {
    let m = c.len();
    match variant {
        Variant::MdolEbwt | Variant::MdolBwt => {
            let gsa = build_gsa(c);
            Ok(gsa.entries()[..m].iter().map(|&(d, _)| d - 1).collect())
        }
        Variant::DolEbwt => {
            let gca = build_gca(c, DollarMode::Shared);
            Ok(gca.entries()[..m].iter().map(|&(d, _)| d - 1).collect())
        }
        Variant::ConcatBwt | Variant::AdaptedConcatBwt => {
            let mut v = Vec::with_capacity(c.total_len() + m + 1);
            let mut owner = Vec::new(); // string index of each dollar position
            for (d, item) in c.items().iter().enumerate() {
                v.extend_from_slice(item.as_bytes());
                owner.push((v.len(), d));
                v.push(DOLLAR);
            }
            v.push(HASH);
            let owner: BTreeMap<usize, usize> = owner.into_iter().collect();
            let sa = suffix_array(&v);
            // rows 1..=m are the dollar-initial rotations; the hash row is first
            Ok(sa[1..=m].iter().map(|&p| owner[&p]).collect())
        }
        Variant::Ebwt | Variant::Bwt => Err(Error::VariantNotSeparatorBased),
    }
}

/// Sentinel-free transform of the meta-string: transform of `t·$` with the
/// end marker removed.
pub fn bwt_star(t: &MetaString) -> MetaString {
    let mut v: Vec<usize> = t.symbols().iter().map(|&s| s + 1).collect();
    v.push(0);
    let n = v.len();
    let mut sa: Vec<usize> = (0..n).collect();
    sa.sort_by(|&a, &b| v[a..].cmp(&v[b..]));
    let symbols = sa
        .iter()
        .map(|&p| v[(p + n - 1) % n])
        .filter(|&s| s != 0)
        .map(|s| s - 1)
        .collect();
    MetaString { symbols, distinct: t.distinct() }
}

/// Find an input order whose multidollar transform equals the target text
/// (dollars unified). The order is read off the target variant's separator
/// block; if verification fails, all orders up to the guard are tried.
/// `Ok(None)` means no order realizes the target.
pub fn simulate_order(
    variant: Variant,
    c: &StringCollection,
    target: &Transform,
    guard: usize,
) -> Result<Option<Vec<usize>>> {
    let goal = unified_text(target);
    let candidate = separator_block_order(variant, c)?;
    if mdol_ebwt(&c.permuted(&candidate)).text() == goal.as_slice() {
        return Ok(Some(candidate));
    }
    let m = c.len();
    if m > guard {
        return Err(Error::GuardExceeded { m, guard });
    }
    let mut perm: Vec<usize> = (0..m).collect();
    loop {
        if mdol_ebwt(&c.permuted(&perm)).text() == goal.as_slice() {
            return Ok(Some(perm));
        }
        if !crate::optimize::next_permutation(&mut perm) {
            return Ok(None);
        }
    }
}

/// Target text with every separator collapsed to the dollar byte; the
/// concatenated variant contributes its adapted form.
fn unified_text(t: &Transform) -> Vec<u8> {
    match t.variant() {
        Variant::ConcatBwt => t.text()[1..]
            .iter()
            .map(|&b| if b == HASH { DOLLAR } else { b })
            .collect(),
        _ => t.text().to_vec(),
    }
}
