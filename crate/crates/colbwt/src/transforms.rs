//! The five collection transforms (extended, dollar, multidollar, and the
//! two concatenation-based forms) plus the single-string transform, all
//! computed from the sorted arrays of the `arrays` module.

use alloc::format;
use alloc::vec::Vec;

use crate::arrays::{build_gca, build_gsa, dollar_extended, suffix_array, DollarMode};
use crate::collection::{StringCollection, DOLLAR, HASH};
use crate::error::{Error, Result};
use crate::order::root_decompose;

/// Which construction produced a transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Ebwt,
    DolEbwt,
    MdolEbwt,
    MdolBwt,
    ConcatBwt,
    AdaptedConcatBwt,
    Bwt,
}

impl Variant {
    /// Everything but the raw extended transform appends separators.
    pub fn is_separator_based(self) -> bool {
        !matches!(self, Variant::Ebwt | Variant::Bwt)
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Ebwt => "ebwt",
            Variant::DolEbwt => "dolEBWT",
            Variant::MdolEbwt => "mdolEBWT",
            Variant::MdolBwt => "mdolBWT",
            Variant::ConcatBwt => "concatBWT",
            Variant::AdaptedConcatBwt => "adaptedConcatBWT",
            Variant::Bwt => "bwt",
        }
    }
}

/// A transform output: the text over alphabet ∪ {dollar, hash}, plus the
/// recovery metadata its variant calls for (dollar ranks for the
/// multidollar forms, the index tuple for the extended transform).
///
/// Sentinels are stored as the reserved bytes and rendered as `$`/`#`;
/// dollar ranks never appear in the text itself, so byte equality of two
/// texts is exactly equality "with dollars unified".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transform {
    variant: Variant,
    text: Vec<u8>,
    dollar_ranks: Option<Vec<usize>>,
    i_tuple: Option<Vec<usize>>,
}

impl Transform {
    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn text(&self) -> &[u8] {
        &self.text
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    /// Rank (1-based) of each dollar occurrence, in text order.
    pub fn dollar_ranks(&self) -> Option<&[usize]> {
        self.dollar_ranks.as_deref()
    }

    /// 1-based positions of the input strings in the sorted conjugate list,
    /// ascending. Present only for the extended transform.
    pub fn i_tuple(&self) -> Option<&[usize]> {
        self.i_tuple.as_deref()
    }

    /// Text with sentinels rendered as `$` and `#`.
    pub fn render(&self) -> Vec<u8> {
        self.text
            .iter()
            .map(|&b| match b {
                DOLLAR => b'$',
                HASH => b'#',
                other => other,
            })
            .collect()
    }

    /// Number of maximal equal-symbol runs. With `dollars_equal` every
    /// dollar is one symbol; otherwise ranked dollars split runs wherever
    /// the rank changes (rank-free variants are unaffected).
    pub fn count_runs(&self, dollars_equal: bool) -> usize {
        if self.text.is_empty() {
            return 0;
        }
        if dollars_equal || self.dollar_ranks.is_none() {
            return crate::intervals::count_runs(&self.text);
        }
        let ranks = self.dollar_ranks.as_ref().unwrap();
        let mut next_rank = ranks.iter().copied();
        let mut runs = 0;
        let mut prev: Option<(u8, usize)> = None;
        for &b in &self.text {
            let key = (b, if b == DOLLAR { next_rank.next().unwrap_or(0) } else { 0 });
            if prev != Some(key) {
                runs += 1;
            }
            prev = Some(key);
        }
        runs
    }

    /// Rebuild a transform from parsed text and sidecar metadata, running
    /// the structural checks of the declared variant.
    pub fn from_parts(
        variant: Variant,
        text: Vec<u8>,
        dollar_ranks: Option<Vec<usize>>,
        i_tuple: Option<Vec<usize>>,
    ) -> Result<Self> {
        let dollars = text.iter().filter(|&&b| b == DOLLAR).count();
        let hashes = text.iter().filter(|&&b| b == HASH).count();
        match variant {
            Variant::Ebwt => {
                if dollars + hashes > 0 {
                    return Err(Error::MalformedTransform(
                        "extended transform text must not contain sentinels".into(),
                    ));
                }
                let tuple = i_tuple
                    .as_deref()
                    .ok_or_else(|| Error::InvalidIndexTuple("index tuple missing".into()))?;
                if tuple.is_empty()
                    || tuple.windows(2).any(|w| w[0] >= w[1])
                    || tuple.iter().any(|&p| p < 1 || p > text.len())
                {
                    return Err(Error::InvalidIndexTuple(
                        "indices must be ascending and within the text".into(),
                    ));
                }
                if dollar_ranks.is_some() {
                    return Err(Error::MalformedTransform(
                        "extended transform carries no dollar ranks".into(),
                    ));
                }
            }
            Variant::MdolEbwt | Variant::MdolBwt => {
                let ranks = dollar_ranks.as_deref().ok_or(Error::MissingDollarRanks)?;
                if ranks.len() != dollars {
                    return Err(Error::MalformedTransform(format!(
                        "{} dollar ranks for {} dollars",
                        ranks.len(),
                        dollars
                    )));
                }
                let mut seen = ranks.to_vec();
                seen.sort_unstable();
                if seen.iter().enumerate().any(|(k, &r)| r != k + 1) {
                    return Err(Error::MalformedTransform(
                        "dollar ranks must be a permutation of 1..=m".into(),
                    ));
                }
                if hashes > 0 {
                    return Err(Error::MalformedTransform("unexpected hash byte".into()));
                }
            }
            Variant::DolEbwt | Variant::AdaptedConcatBwt => {
                if dollar_ranks.is_some() || i_tuple.is_some() {
                    return Err(Error::MalformedTransform("unexpected metadata".into()));
                }
                if hashes > 0 {
                    return Err(Error::MalformedTransform("unexpected hash byte".into()));
                }
                if dollars == 0 {
                    return Err(Error::MalformedTransform("no dollar in text".into()));
                }
            }
            Variant::ConcatBwt => {
                if dollar_ranks.is_some() || i_tuple.is_some() {
                    return Err(Error::MalformedTransform("unexpected metadata".into()));
                }
                if hashes != 1 {
                    return Err(Error::MalformedTransform(format!(
                        "concatenated transform needs exactly one hash, found {hashes}"
                    )));
                }
            }
            Variant::Bwt => {
                if dollar_ranks.is_some() || i_tuple.is_some() || hashes > 0 || dollars > 1 {
                    return Err(Error::MalformedTransform(
                        "single-string transform carries no metadata".into(),
                    ));
                }
            }
        }
        Ok(Transform { variant, text, dollar_ranks, i_tuple })
    }

    pub(crate) fn new(
        variant: Variant,
        text: Vec<u8>,
        dollar_ranks: Option<Vec<usize>>,
        i_tuple: Option<Vec<usize>>,
    ) -> Self {
        Transform { variant, text, dollar_ranks, i_tuple }
    }
}

/// Extended transform of a multiset of primitive strings: last symbols of
/// the omega-sorted conjugates. Rejects proper powers; see
/// [`ebwt_permissive`] for the total extension.
pub fn ebwt(c: &StringCollection) -> Result<Transform> {
    for (d, item) in c.items().iter().enumerate() {
        if root_decompose(item.as_bytes()).exponent > 1 {
            return Err(Error::NonPrimitiveInput { index: d + 1 });
        }
    }
    Ok(ebwt_permissive(c))
}

/// Extended transform without the primitivity check: conjugates of powers
/// are admitted with ties broken by string index, then position. The index
/// tuple of a non-primitive input does not support recovery.
pub fn ebwt_permissive(c: &StringCollection) -> Transform {
    let gca = build_gca(c, DollarMode::None);
    let mut text = Vec::with_capacity(c.total_len());
    let mut tuple = Vec::with_capacity(c.len());
    for (rank, &(d, i)) in gca.entries().iter().enumerate() {
        let t = c.item(d - 1).as_bytes();
        text.push(t[(i + t.len() - 2) % t.len()]);
        if i == 1 {
            tuple.push(rank + 1);
        }
    }
    Transform::new(Variant::Ebwt, text, None, Some(tuple))
}

/// Extended transform of the strings with one shared dollar appended.
/// Order-independent; the dollar positions suffice for recovery.
pub fn dol_ebwt(c: &StringCollection) -> Transform {
    let gca = build_gca(c, DollarMode::Shared);
    let exts = dollar_extended(c);
    let mut text = Vec::with_capacity(c.total_len() + c.len());
    for &(d, i) in gca.entries() {
        let ext = &exts[d - 1];
        text.push(ext[(i + ext.len() - 2) % ext.len()]);
    }
    Transform::new(Variant::DolEbwt, text, None, None)
}

/// Multidollar extended transform, built from the generalized suffix array.
/// Input-order dependent; each dollar keeps the rank of its string.
///
/// ```
/// use colbwt::{transforms, StringCollection};
///
/// let c = StringCollection::from_lines(b"GTC\nGT\n").unwrap();
/// let t = transforms::mdol_ebwt(&c);
/// assert_eq!(t.render(), b"CTT$$GG");
/// assert_eq!(t.dollar_ranks(), Some(&[2, 1][..]));
/// ```
pub fn mdol_ebwt(c: &StringCollection) -> Transform {
    let (text, ranks) = mdol_text(c, |d, _| d);
    Transform::new(Variant::MdolEbwt, text, Some(ranks), None)
}

/// Transform of the dollar-separated concatenation `T_1 $_1 T_2 $_2 ...`.
/// Same text as [`mdol_ebwt`]; the dollar of string `d` carries rank `d-1`
/// (rank `m` for `d = 1`), and the standard permutation is a single cycle.
pub fn mdol_bwt(c: &StringCollection) -> Transform {
    let m = c.len();
    let (text, ranks) = mdol_text(c, |d, _| if d == 1 { m } else { d - 1 });
    Transform::new(Variant::MdolBwt, text, Some(ranks), None)
}

fn mdol_text(c: &StringCollection, rank_of: impl Fn(usize, usize) -> usize) -> (Vec<u8>, Vec<usize>) {
    let gsa = build_gsa(c);
    let exts = dollar_extended(c);
    let mut text = Vec::with_capacity(c.total_len() + c.len());
    let mut ranks = Vec::with_capacity(c.len());
    for &(d, i) in gsa.entries() {
        if i == 1 {
            text.push(DOLLAR);
            ranks.push(rank_of(d, i));
        } else {
            text.push(exts[d - 1][i - 2]);
        }
    }
    (text, ranks)
}

/// Classic transform of `T_1 $ T_2 $ ... T_m $ #` with one shared dollar
/// and a final hash. The first output symbol is always a dollar.
pub fn concat_bwt(c: &StringCollection) -> Transform {
    let mut v = Vec::with_capacity(c.total_len() + c.len() + 1);
    for item in c.items() {
        v.extend_from_slice(item.as_bytes());
        v.push(DOLLAR);
    }
    v.push(HASH);
    let sa = suffix_array(&v);
    let n = v.len();
    let text = sa.iter().map(|&p| v[(p + n - 1) % n]).collect();
    Transform::new(Variant::ConcatBwt, text, None, None)
}

/// [`concat_bwt`] with the leading symbol dropped and the hash rewritten to
/// a dollar, aligning its length with the other separator-based variants.
pub fn adapted_concat_bwt(c: &StringCollection) -> Transform {
    let full = concat_bwt(c);
    let text = full.text[1..]
        .iter()
        .map(|&b| if b == HASH { DOLLAR } else { b })
        .collect();
    Transform::new(Variant::AdaptedConcatBwt, text, None, None)
}

/// Single-string transform. With a sentinel this is the classic
/// dollar-terminated form; without, the last column of the sorted
/// conjugates (position ties ascending).
pub fn bwt_single(t: &[u8], with_sentinel: bool) -> Transform {
    assert!(!t.is_empty(), "transform of an empty string");
    if with_sentinel {
        let mut v = Vec::with_capacity(t.len() + 1);
        v.extend_from_slice(t);
        v.push(DOLLAR);
        let sa = suffix_array(&v);
        let n = v.len();
        let text = sa.iter().map(|&p| v[(p + n - 1) % n]).collect();
        Transform::new(Variant::Bwt, text, None, None)
    } else {
        let ca = crate::arrays::build_ca(t);
        let n = t.len();
        let text = ca.entries().iter().map(|&i| t[(i + n - 2) % n]).collect();
        Transform::new(Variant::Bwt, text, None, None)
    }
}

/// Transform of the k-th power of a primitive string, obtained from the
/// root's sentinel-free transform by repeating every symbol k times.
pub fn bwt_power(bwt_of_root: &Transform, k: usize) -> Transform {
    assert!(k >= 1);
    let mut text = Vec::with_capacity(bwt_of_root.len() * k);
    for &b in bwt_of_root.text() {
        for _ in 0..k {
            text.push(b);
        }
    }
    Transform::new(Variant::Bwt, text, None, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::String;
    use alloc::vec;

    fn toy() -> StringCollection {
        StringCollection::from_lines(b"CTGA\nTG\nGTCC\nTCA\nCGACC\nCGA\n").unwrap()
    }

    fn glyphs(t: &Transform) -> String {
        String::from_utf8(t.render()).unwrap()
    }

    #[test]
    fn ebwt_toy() {
        let t = ebwt(&toy()).unwrap();
        assert_eq!(glyphs(&t), "GGGCTACTCACACCTCTAGCG");
        assert_eq!(t.i_tuple(), Some(&[9, 10, 12, 16, 18, 21][..]));
    }

    #[test]
    fn ebwt_two_strings() {
        let c = StringCollection::from_lines(b"GTC\nGT\n").unwrap();
        let t = ebwt(&c).unwrap();
        assert_eq!(glyphs(&t), "TCTGG");
        assert_eq!(t.i_tuple(), Some(&[2, 3][..]));
    }

    #[test]
    fn ebwt_singleton() {
        let c = StringCollection::from_lines(b"A\n").unwrap();
        let t = ebwt(&c).unwrap();
        assert_eq!(glyphs(&t), "A");
        assert_eq!(t.i_tuple(), Some(&[1][..]));
    }

    #[test]
    fn ebwt_duplicate_strings_get_consecutive_indices() {
        let c = StringCollection::from_lines(b"AB\nAB\n").unwrap();
        let t = ebwt(&c).unwrap();
        assert_eq!(glyphs(&t), "BBAA");
        assert_eq!(t.i_tuple(), Some(&[1, 2][..]));
        let rec = crate::inversion::invert_ebwt(&t).unwrap();
        let names: Vec<&[u8]> = rec.items().iter().map(|s| s.as_bytes()).collect();
        assert_eq!(names, vec![&b"AB"[..], b"AB"]);
    }

    #[test]
    fn ebwt_rejects_powers_strict() {
        let c = StringCollection::from_lines(b"GTC\nABAB\n").unwrap();
        assert_eq!(ebwt(&c), Err(Error::NonPrimitiveInput { index: 2 }));
    }

    #[test]
    fn ebwt_permissive_handles_powers() {
        let c = StringCollection::from_lines(b"AB\nABAB\n").unwrap();
        let t = ebwt_permissive(&c);
        assert_eq!(glyphs(&t), "BBBAAA");
    }

    #[test]
    fn dol_ebwt_toy() {
        assert_eq!(glyphs(&dol_ebwt(&toy())), "ACACAGGGCGCCTAT$$$TCTC$$G$C");
    }

    #[test]
    fn dol_ebwt_two_strings_and_singleton() {
        let c = StringCollection::from_lines(b"GTC\nGT\n").unwrap();
        assert_eq!(glyphs(&dol_ebwt(&c)), "TCT$$GG");
        let a = StringCollection::from_lines(b"A\n").unwrap();
        assert_eq!(glyphs(&dol_ebwt(&a)), "A$");
    }

    #[test]
    fn mdol_ebwt_toy() {
        let t = mdol_ebwt(&toy());
        assert_eq!(glyphs(&t), "AGCACAGCGGCCTTA$$$TTCC$$G$C");
        assert_eq!(t.dollar_ranks(), Some(&[6, 5, 1, 3, 4, 2][..]));
    }

    #[test]
    fn mdol_ebwt_permuted_toy() {
        let c = StringCollection::from_lines(b"TCA\nCTGA\nCGA\nTG\nGTCC\nCGACC\n").unwrap();
        let t = mdol_ebwt(&c);
        assert_eq!(glyphs(&t), "AAAGCCCGGGCCTTA$$$TTCC$$G$C");
        assert_eq!(t.dollar_ranks(), Some(&[3, 6, 2, 5, 1, 4][..]));
    }

    #[test]
    fn mdol_ebwt_two_strings() {
        let c = StringCollection::from_lines(b"GTC\nGT\n").unwrap();
        let t = mdol_ebwt(&c);
        assert_eq!(glyphs(&t), "CTT$$GG");
        assert_eq!(t.dollar_ranks(), Some(&[2, 1][..]));
        // the concatenation-based twin shifts every rank down by one
        let b = mdol_bwt(&c);
        assert_eq!(glyphs(&b), "CTT$$GG");
        assert_eq!(b.dollar_ranks(), Some(&[1, 2][..]));
    }

    #[test]
    fn mdol_bwt_toy() {
        let t = mdol_bwt(&toy());
        assert_eq!(glyphs(&t), "AGCACAGCGGCCTTA$$$TTCC$$G$C");
        assert_eq!(t.dollar_ranks(), Some(&[5, 4, 6, 2, 3, 1][..]));
    }

    #[test]
    fn mdol_bwt_colex_ordered_toy() {
        let c = StringCollection::from_lines(b"TCA\nCGA\nCTGA\nCGACC\nGTCC\nTG\n").unwrap();
        let t = mdol_bwt(&c);
        assert_eq!(glyphs(&t), "AAACCGCGGGCCTAT$$$TCTC$$G$C");
        assert_eq!(t.dollar_ranks(), Some(&[1, 3, 2, 4, 6, 5][..]));
    }

    #[test]
    fn mdol_bwt_singleton() {
        let c = StringCollection::from_lines(b"A\n").unwrap();
        let t = mdol_bwt(&c);
        assert_eq!(glyphs(&t), "A$");
        assert_eq!(t.dollar_ranks(), Some(&[1][..]));
    }

    #[test]
    fn concat_bwt_toy() {
        assert_eq!(glyphs(&concat_bwt(&toy())), "$ACAGCAGCGGCCTAT$$#TCTC$$G$C");
    }

    #[test]
    fn concat_bwt_small_examples() {
        let c = StringCollection::from_lines(b"CCA\nACA\nTCA\n").unwrap();
        assert_eq!(glyphs(&concat_bwt(&c)), "$AAACCC$TCA#$");
        let s = StringCollection::from_lines(b"CCA\nACA\n").unwrap();
        assert_eq!(glyphs(&concat_bwt(&s)), "$AACC$AC#");
    }

    #[test]
    fn concat_bwt_starts_with_dollar() {
        for input in [&b"A\n"[..], b"CCA\nACA\n", b"CTGA\nTG\nGTCC\nTCA\nCGACC\nCGA\n"] {
            let c = StringCollection::from_lines(input).unwrap();
            let t = concat_bwt(&c);
            assert_eq!(t.text()[0], DOLLAR);
            assert_eq!(t.len(), c.total_len() + c.len() + 1);
        }
    }

    #[test]
    fn adapted_concat_examples() {
        assert_eq!(glyphs(&adapted_concat_bwt(&toy())), "ACAGCAGCGGCCTAT$$$TCTC$$G$C");
        let s = StringCollection::from_lines(b"CCA\nACA\n").unwrap();
        assert_eq!(glyphs(&adapted_concat_bwt(&s)), "AACC$AC$");
        let a = StringCollection::from_lines(b"A\n").unwrap();
        assert_eq!(glyphs(&adapted_concat_bwt(&a)), "A$");
    }

    #[test]
    fn bwt_single_banana() {
        assert_eq!(glyphs(&bwt_single(b"banana", true)), "annb$aa");
        assert_eq!(glyphs(&bwt_single(b"banana", false)), "nnbaaa");
        assert_eq!(glyphs(&bwt_single(b"A", false)), "A");
    }

    #[test]
    fn bwt_power_examples() {
        let root = bwt_single(b"AB", false);
        assert_eq!(glyphs(&root), "BA");
        assert_eq!(glyphs(&bwt_power(&root, 2)), "BBAA");
        assert_eq!(glyphs(&bwt_power(&root, 2)), glyphs(&bwt_single(b"ABAB", false)));
        assert_eq!(glyphs(&bwt_power(&root, 1)), "BA");
        let a = bwt_single(b"A", false);
        assert_eq!(glyphs(&bwt_power(&a, 3)), "AAA");
    }

    #[test]
    fn character_conservation() {
        let c = toy();
        let mut input: Vec<u8> = c.items().iter().flat_map(|s| s.as_bytes().to_vec()).collect();
        input.sort_unstable();
        for t in [
            ebwt(&c).unwrap(),
            dol_ebwt(&c),
            mdol_ebwt(&c),
            mdol_bwt(&c),
            concat_bwt(&c),
            adapted_concat_bwt(&c),
        ] {
            let mut got: Vec<u8> = t.text().iter().copied().filter(|&b| b > DOLLAR).collect();
            got.sort_unstable();
            assert_eq!(got, input, "{:?}", t.variant());
        }
    }

    #[test]
    fn run_counting_with_and_without_ranks() {
        let t = mdol_ebwt(&toy());
        assert_eq!(t.count_runs(true), 19);
        // the $$$ and $$ blocks split into singleton runs under ranked dollars
        assert_eq!(t.count_runs(false), 22);
        let d = dol_ebwt(&toy());
        assert_eq!(d.count_runs(false), d.count_runs(true));
    }

    #[test]
    fn from_parts_validates_structure() {
        let t = mdol_ebwt(&toy());
        let rebuilt = Transform::from_parts(
            Variant::MdolEbwt,
            t.text().to_vec(),
            t.dollar_ranks().map(|r| r.to_vec()),
            None,
        )
        .unwrap();
        assert_eq!(rebuilt, t);
        assert!(Transform::from_parts(Variant::MdolEbwt, t.text().to_vec(), None, None).is_err());
        assert!(Transform::from_parts(
            Variant::MdolEbwt,
            t.text().to_vec(),
            Some(vec![1, 1, 2, 3, 4, 5]),
            None
        )
        .is_err());
        assert!(Transform::from_parts(Variant::ConcatBwt, b"AC".to_vec(), None, None).is_err());
        assert!(Transform::from_parts(
            Variant::Ebwt,
            b"GATT".to_vec(),
            None,
            Some(vec![3, 2])
        )
        .is_err());
    }
}
