//! Dynamicity checks: whether the transform of a sub-collection embeds as a
//! subsequence of the full collection's transform. Verified by
//! recomputation, not by incremental updates.

use alloc::vec::Vec;

use crate::collection::{StringCollection, DOLLAR};
use crate::error::{Error, Result};
use crate::transforms::{self, Transform, Variant};

/// Strictly increasing 0-based positions selecting a sub-collection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubCollectionSelector {
    indices: Vec<usize>,
}

impl SubCollectionSelector {
    pub fn new(indices: Vec<usize>, m: usize) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::EmptyCollection);
        }
        let increasing = indices.windows(2).all(|w| w[0] < w[1]);
        if !increasing || *indices.last().unwrap() >= m {
            return Err(Error::MalformedTransform(
                "selector indices must be strictly increasing and within the collection".into(),
            ));
        }
        Ok(SubCollectionSelector { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }
}

/// Order-preserving subsequence test. With `dollars_equal` the two sentinel
/// bytes form one separator class, so any separator matches any separator.
pub fn is_subsequence(s: &[u8], t: &[u8], dollars_equal: bool) -> bool {
    let matches = |a: u8, b: u8| {
        a == b || (dollars_equal && a <= DOLLAR && b <= DOLLAR)
    };
    let mut i = 0;
    for &b in t {
        if i == s.len() {
            break;
        }
        if matches(s[i], b) {
            i += 1;
        }
    }
    i == s.len()
}

/// Compute the variant on the selected sub-collection and on the full
/// collection and report whether the former is a subsequence of the latter
/// (separators unified).
pub fn check_dynamicity(
    c: &StringCollection,
    sel: &SubCollectionSelector,
    variant: Variant,
) -> Result<bool> {
    let sub = c.subcollection(sel.indices())?;
    let (small, large) = match variant {
        Variant::Ebwt => (transforms::ebwt(&sub)?, transforms::ebwt(c)?),
        Variant::DolEbwt => (transforms::dol_ebwt(&sub), transforms::dol_ebwt(c)),
        Variant::MdolEbwt => (transforms::mdol_ebwt(&sub), transforms::mdol_ebwt(c)),
        Variant::MdolBwt => (transforms::mdol_bwt(&sub), transforms::mdol_bwt(c)),
        Variant::ConcatBwt => (transforms::concat_bwt(&sub), transforms::concat_bwt(c)),
        Variant::AdaptedConcatBwt => (
            transforms::adapted_concat_bwt(&sub),
            transforms::adapted_concat_bwt(c),
        ),
        Variant::Bwt => return Err(Error::VariantNotSeparatorBased),
    };
    Ok(embeds(&small, &large))
}

fn embeds(small: &Transform, large: &Transform) -> bool {
    is_subsequence(small.text(), large.text(), true)
}

/// The per-string laws: the single-string transform of every member embeds
/// into each collection transform (with its sentinel for the separator
/// variants, without for the extended transform).
pub fn per_string_laws_hold(c: &StringCollection) -> Result<bool> {
    let full_ebwt = transforms::ebwt(c)?;
    let full_dol = transforms::dol_ebwt(c);
    let full_mdol_e = transforms::mdol_ebwt(c);
    let full_mdol = transforms::mdol_bwt(c);
    let full_concat = transforms::concat_bwt(c);
    for item in c.items() {
        let bare = transforms::bwt_single(item.as_bytes(), false);
        let dollar = transforms::bwt_single(item.as_bytes(), true);
        if !is_subsequence(bare.text(), full_ebwt.text(), false) {
            return Ok(false);
        }
        for full in [&full_dol, &full_mdol_e, &full_mdol, &full_concat] {
            if !is_subsequence(dollar.text(), full.text(), true) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collection::HASH;

    fn toy() -> StringCollection {
        StringCollection::from_lines(b"CTGA\nTG\nGTCC\nTCA\nCGACC\nCGA\n").unwrap()
    }

    #[test]
    fn subsequence_basics() {
        assert!(is_subsequence(b"AC", b"ABC", false));
        assert!(is_subsequence(b"", b"ABC", false));
        assert!(is_subsequence(b"", b"", false));
        assert!(!is_subsequence(b"CA", b"ABC", false));
        assert!(is_subsequence(&[DOLLAR], &[HASH], true));
        assert!(!is_subsequence(&[DOLLAR], &[HASH], false));
    }

    #[test]
    fn concat_counterexample_is_pinned() {
        let c = StringCollection::from_lines(b"CCA\nACA\nTCA\n").unwrap();
        let sel = SubCollectionSelector::new(alloc::vec![0, 1], 3).unwrap();
        assert_eq!(check_dynamicity(&c, &sel, Variant::ConcatBwt), Ok(false));
        // the same removal is safe for every other variant
        for v in [Variant::Ebwt, Variant::DolEbwt, Variant::MdolEbwt, Variant::MdolBwt] {
            assert_eq!(check_dynamicity(&c, &sel, v), Ok(true), "{}", v.name());
        }
    }

    #[test]
    fn subset_laws_on_toy() {
        let c = toy();
        for sel in [
            SubCollectionSelector::new(alloc::vec![0], 6).unwrap(),
            SubCollectionSelector::new(alloc::vec![1, 3, 5], 6).unwrap(),
            SubCollectionSelector::new(alloc::vec![0, 1, 2, 3, 4, 5], 6).unwrap(),
        ] {
            for v in [Variant::Ebwt, Variant::DolEbwt, Variant::MdolEbwt, Variant::MdolBwt] {
                assert_eq!(check_dynamicity(&c, &sel, v), Ok(true), "{}", v.name());
            }
        }
    }

    #[test]
    fn per_string_laws_on_toy() {
        assert_eq!(per_string_laws_hold(&toy()), Ok(true));
    }

    #[test]
    fn selector_validation() {
        assert!(SubCollectionSelector::new(alloc::vec![], 3).is_err());
        assert!(SubCollectionSelector::new(alloc::vec![1, 1], 3).is_err());
        assert!(SubCollectionSelector::new(alloc::vec![0, 3], 3).is_err());
        assert!(SubCollectionSelector::new(alloc::vec![0, 2], 3).is_ok());
    }
}
