//! Standard permutation, cycle decomposition, and exact recovery of the
//! input collection from every transform variant.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::collection::{Sequence, StringCollection, DOLLAR, HASH};
use crate::error::{Error, Result};
use crate::transforms::{Transform, Variant};

/// The rank-stable permutation induced by a word's symbols: position `i`
/// maps below position `j` iff `S[i] < S[j]`, or the symbols are equal and
/// `i < j`. All indices 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardPermutation {
    pi: Vec<usize>,
    cycles: Vec<Vec<usize>>,
}

impl StandardPermutation {
    pub fn mapping(&self) -> &[usize] {
        &self.pi
    }

    pub fn apply(&self, i: usize) -> usize {
        self.pi[i]
    }

    /// Disjoint cycles covering `0..n`, each starting at its smallest
    /// element, ordered by that element.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn len(&self) -> usize {
        self.pi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pi.is_empty()
    }
}

pub fn standard_permutation(s: &[u8]) -> StandardPermutation {
    from_keys(s.iter().map(|&b| (b, 0)).collect())
}

/// Standard permutation of a transform's text, with ranked dollars treated
/// as distinct symbols ordered by rank.
pub fn transform_permutation(t: &Transform) -> StandardPermutation {
    match t.dollar_ranks() {
        None => standard_permutation(t.text()),
        Some(ranks) => {
            let mut next = ranks.iter().copied();
            let keys = t
                .text()
                .iter()
                .map(|&b| (b, if b == DOLLAR { next.next().unwrap_or(0) } else { 0 }))
                .collect();
            from_keys(keys)
        }
    }
}

fn from_keys(keys: Vec<(u8, usize)>) -> StandardPermutation {
    let n = keys.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| keys[i]); // stable: equal symbols keep index order
    let mut pi = vec![0usize; n];
    for (rank, &i) in order.iter().enumerate() {
        pi[i] = rank;
    }
    let mut cycles = Vec::new();
    let mut visited = vec![false; n];
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut p = start;
        while !visited[p] {
            visited[p] = true;
            cycle.push(p);
            p = pi[p];
        }
        cycles.push(cycle);
    }
    StandardPermutation { pi, cycles }
}

/// Recover the multiset from an extended transform and its index tuple.
/// Strings come out in omega order (ascending index).
pub fn invert_ebwt(t: &Transform) -> Result<StringCollection> {
    if t.variant() != Variant::Ebwt {
        return Err(Error::MalformedTransform("not an extended transform".to_string()));
    }
    let tuple = t
        .i_tuple()
        .ok_or_else(|| Error::InvalidIndexTuple("index tuple missing".to_string()))?;
    let text = t.text();
    let sp = standard_permutation(text);
    let m = tuple.len();
    if sp.cycle_count() != m {
        return Err(Error::InvalidIndexTuple(format!(
            "{} cycles for {} indices",
            sp.cycle_count(),
            m
        )));
    }
    // map position -> cycle id to ensure the indices hit distinct cycles
    let mut cycle_of = vec![usize::MAX; text.len()];
    for (id, cycle) in sp.cycles().iter().enumerate() {
        for &p in cycle {
            cycle_of[p] = id;
        }
    }
    let mut used = vec![false; m];
    let mut items = Vec::with_capacity(m);
    for &i1 in tuple {
        if i1 < 1 || i1 > text.len() {
            return Err(Error::InvalidIndexTuple(format!("index {i1} out of range")));
        }
        let start = i1 - 1;
        let id = cycle_of[start];
        if used[id] {
            return Err(Error::InvalidIndexTuple(format!(
                "index {i1} shares a cycle with an earlier index"
            )));
        }
        used[id] = true;
        let mut chars = Vec::new();
        let mut p = start;
        loop {
            chars.push(text[p]);
            p = sp.apply(p);
            if p == start {
                break;
            }
        }
        chars.reverse();
        items.push(Sequence::new(chars).map_err(|_| {
            Error::MalformedTransform("recovered string contains a sentinel".to_string())
        })?);
    }
    StringCollection::new(items)
}

/// Recover the collection from a separator-based variant.
///
/// dolEBWT walks from the dollars in increasing position and yields the
/// strings in lexicographic order; the multidollar variants walk from the
/// dollar of each rank and yield the original input order; the adapted
/// concatenated form is un-adapted by searching for the erased hash.
pub fn invert_dollar_variant(t: &Transform) -> Result<StringCollection> {
    match t.variant() {
        Variant::DolEbwt => {
            let sp = standard_permutation(t.text());
            let dollars: Vec<usize> = dollar_positions(t.text());
            if dollars.is_empty() {
                return Err(Error::MalformedTransform("no dollar in text".to_string()));
            }
            let mut items = Vec::with_capacity(dollars.len());
            for &p in &dollars {
                items.push(walk_string(t.text(), &sp, p)?);
            }
            StringCollection::new(items)
        }
        Variant::MdolEbwt => {
            let ranks = t.dollar_ranks().ok_or(Error::MissingDollarRanks)?;
            let sp = transform_permutation(t);
            let by_rank = positions_by_rank(t.text(), ranks)?;
            let mut items = Vec::with_capacity(by_rank.len());
            for &p in &by_rank {
                items.push(walk_string(t.text(), &sp, p)?);
            }
            StringCollection::new(items)
        }
        Variant::MdolBwt => {
            let ranks = t.dollar_ranks().ok_or(Error::MissingDollarRanks)?;
            let sp = transform_permutation(t);
            if sp.cycle_count() != 1 {
                return Err(Error::MalformedTransform(format!(
                    "expected one cycle, found {}",
                    sp.cycle_count()
                )));
            }
            let by_rank = positions_by_rank(t.text(), ranks)?;
            let m = by_rank.len();
            let rank_at = rank_by_position(t.text(), ranks);
            let mut items = Vec::with_capacity(m);
            for (d1, &p) in by_rank.iter().enumerate() {
                let d = d1 + 1;
                // walk until the previous string's dollar closes the record
                let mut chars = Vec::new();
                let mut q = sp.apply(p);
                let mut steps = 0;
                while t.text()[q] != DOLLAR {
                    chars.push(t.text()[q]);
                    q = sp.apply(q);
                    steps += 1;
                    if steps > t.len() {
                        return Err(Error::MalformedTransform("walk does not close".to_string()));
                    }
                }
                let stop_rank = rank_at[q];
                let expect = if d == 1 { m } else { d - 1 };
                if stop_rank != expect {
                    return Err(Error::MalformedTransform(format!(
                        "walk from rank {d} stopped at rank {stop_rank}, expected {expect}"
                    )));
                }
                chars.reverse();
                items.push(Sequence::new(chars).map_err(|_| {
                    Error::MalformedTransform("empty or invalid recovered string".to_string())
                })?);
            }
            StringCollection::new(items)
        }
        Variant::AdaptedConcatBwt => {
            // the hash was rewritten to a dollar; try each dollar as the
            // erased hash and accept the first structurally valid inversion
            let text = t.text();
            for q in dollar_positions(text) {
                let mut candidate = Vec::with_capacity(text.len() + 1);
                candidate.push(DOLLAR);
                candidate.extend_from_slice(text);
                candidate[q + 1] = HASH;
                if let Ok(collection) = invert_concat_text(&candidate) {
                    return Ok(collection);
                }
            }
            Err(Error::MalformedTransform(
                "no dollar position yields a valid concatenated transform".to_string(),
            ))
        }
        other => Err(Error::MalformedTransform(format!(
            "invert_dollar_variant does not handle {}",
            other.name()
        ))),
    }
}

/// Recover the collection from a concatenated transform (with hash) by one
/// cycle walk from the hash rotation, splitting the concatenation on
/// dollars. Output is in original input order.
pub fn invert_concat_bwt(t: &Transform) -> Result<StringCollection> {
    if t.variant() != Variant::ConcatBwt {
        return Err(Error::MalformedTransform("not a concatenated transform".to_string()));
    }
    invert_concat_text(t.text())
}

pub(crate) fn invert_concat_text(text: &[u8]) -> Result<StringCollection> {
    let n = text.len();
    let hashes = text.iter().filter(|&&b| b == HASH).count();
    if hashes != 1 {
        return Err(Error::MalformedTransform(format!(
            "expected exactly one hash, found {hashes}"
        )));
    }
    let sp = standard_permutation(text);
    if sp.cycle_count() != 1 {
        return Err(Error::MalformedTransform(format!(
            "expected one cycle, found {}",
            sp.cycle_count()
        )));
    }
    // row 0 is the rotation starting with the hash; n steps recover the
    // concatenation backwards, ending on the hash itself
    let mut chars = Vec::with_capacity(n);
    let mut p = 0;
    for _ in 0..n {
        chars.push(text[p]);
        p = sp.apply(p);
    }
    if p != 0 || chars.pop() != Some(HASH) {
        return Err(Error::MalformedTransform("walk does not close on the hash".to_string()));
    }
    chars.reverse();
    let v = chars; // T_1 $ T_2 $ ... T_m $
    if v.last() != Some(&DOLLAR) {
        return Err(Error::MalformedTransform("concatenation does not end with a dollar".to_string()));
    }
    let mut items = Vec::new();
    for segment in v.split(|&b| b == DOLLAR) {
        if segment.is_empty() {
            continue; // the final split piece after the last dollar
        }
        items.push(Sequence::new(segment.to_vec()).map_err(|_| {
            Error::MalformedTransform("recovered segment contains a sentinel".to_string())
        })?);
    }
    let dollar_count = v.iter().filter(|&&b| b == DOLLAR).count();
    if items.len() != dollar_count {
        return Err(Error::MalformedTransform("empty segment between dollars".to_string()));
    }
    StringCollection::new(items)
}

fn dollar_positions(text: &[u8]) -> Vec<usize> {
    text.iter()
        .enumerate()
        .filter_map(|(i, &b)| (b == DOLLAR).then_some(i))
        .collect()
}

/// Position of the dollar with rank d, indexed by d-1.
fn positions_by_rank(text: &[u8], ranks: &[usize]) -> Result<Vec<usize>> {
    let positions = dollar_positions(text);
    if positions.len() != ranks.len() {
        return Err(Error::MalformedTransform(format!(
            "{} dollar ranks for {} dollars",
            ranks.len(),
            positions.len()
        )));
    }
    let m = ranks.len();
    let mut by_rank = vec![usize::MAX; m];
    for (&p, &r) in positions.iter().zip(ranks) {
        if r < 1 || r > m || by_rank[r - 1] != usize::MAX {
            return Err(Error::MalformedTransform("dollar ranks are not a permutation".to_string()));
        }
        by_rank[r - 1] = p;
    }
    Ok(by_rank)
}

fn rank_by_position(text: &[u8], ranks: &[usize]) -> Vec<usize> {
    let mut rank_at = vec![0usize; text.len()];
    for (p, &r) in dollar_positions(text).iter().zip(ranks) {
        rank_at[*p] = r;
    }
    rank_at
}

/// Walk the cycle of the dollar at position `p`, collecting the string it
/// terminates. Hitting another dollar mid-walk means the transform text is
/// not in the variant's image.
fn walk_string(text: &[u8], sp: &StandardPermutation, p: usize) -> Result<Sequence> {
    let mut chars = Vec::new();
    let mut q = sp.apply(p);
    let mut steps = 0;
    while q != p {
        let b = text[q];
        if b == DOLLAR || b == HASH {
            return Err(Error::MalformedTransform(
                "cycle holds more than one separator".to_string(),
            ));
        }
        chars.push(b);
        q = sp.apply(q);
        steps += 1;
        if steps > text.len() {
            return Err(Error::MalformedTransform("walk does not close".to_string()));
        }
    }
    chars.reverse();
    Sequence::new(chars)
        .map_err(|_| Error::MalformedTransform("empty recovered string".to_string()))
}
