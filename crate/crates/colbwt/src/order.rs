//! String comparators (lexicographic, colexicographic, omega) and
//! primitive-word machinery: root/exponent decomposition and the Lyndon
//! rotation.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};

/// Standard lexicographic byte comparison; a proper prefix sorts before its
/// extension.
pub fn lex_compare(a: &[u8], b: &[u8]) -> Ordering {
    a.cmp(b)
}

/// Colexicographic order: lexicographic on the reversed strings, scanned
/// right to left without materializing the reversals.
pub fn colex_compare(a: &[u8], b: &[u8]) -> Ordering {
    let mut i = a.len();
    let mut j = b.len();
    while i > 0 && j > 0 {
        i -= 1;
        j -= 1;
        match a[i].cmp(&b[j]) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

/// Omega order: compares the infinite self-concatenations, with the smaller
/// exponent winning when the infinite words coincide. Equal only for
/// identical strings.
///
/// Implemented via the concatenation test: for `a·b != b·a` the verdict of
/// `a^ω` vs `b^ω` shows up within the first `|a|+|b|` symbols; when all of
/// them agree the two strings are powers of a common root and the exponent
/// (equivalently the length) decides.
pub fn omega_compare(a: &[u8], b: &[u8]) -> Ordering {
    if a.is_empty() || b.is_empty() {
        return a.len().cmp(&b.len());
    }
    match cyclic_compare(a, 0, b, 0) {
        Ordering::Equal => a.len().cmp(&b.len()),
        other => other,
    }
}

/// Compare `rot_i(a)^ω` against `rot_j(b)^ω`, reading at most `|a|+|b|`
/// symbols. Returns Equal iff the infinite words coincide.
pub(crate) fn cyclic_compare(a: &[u8], i: usize, b: &[u8], j: usize) -> Ordering {
    let la = a.len();
    let lb = b.len();
    for k in 0..la + lb {
        let x = a[(i + k) % la];
        let y = b[(j + k) % lb];
        match x.cmp(&y) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}

/// The unique primitive root and exponent with `root^exponent == t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDecomposition {
    pub root: Vec<u8>,
    pub exponent: usize,
}

/// Smallest period dividing `|t|`, found with the KMP failure function.
pub fn root_decompose(t: &[u8]) -> RootDecomposition {
    let n = t.len();
    assert!(n >= 1, "root decomposition needs a nonempty string");
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && t[i] != t[k] {
            k = fail[k - 1];
        }
        if t[i] == t[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let period = n - fail[n - 1];
    if n.is_multiple_of(period) {
        RootDecomposition { root: t[..period].to_vec(), exponent: n / period }
    } else {
        RootDecomposition { root: t.to_vec(), exponent: 1 }
    }
}

pub fn is_primitive(t: &[u8]) -> bool {
    root_decompose(t).exponent == 1
}

/// Lexicographically smallest conjugate of a primitive string, together with
/// its 1-based start position.
pub fn lyndon_rotation(t: &[u8]) -> Result<(Vec<u8>, usize)> {
    if !is_primitive(t) {
        return Err(Error::NotPrimitive);
    }
    let n = t.len();
    let mut doubled = Vec::with_capacity(2 * n);
    doubled.extend_from_slice(t);
    doubled.extend_from_slice(t);
    let mut best = 0;
    for i in 1..n {
        if doubled[i..i + n] < doubled[best..best + n] {
            best = i;
        }
    }
    Ok((doubled[best..best + n].to_vec(), best + 1))
}
