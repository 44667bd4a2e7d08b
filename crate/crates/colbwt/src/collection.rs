//! String collections: the ordered multiset of byte strings every transform
//! consumes, plus line/FASTA ingestion and the sentinel policy.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Internal end-of-string byte, rendered as `$` on output.
pub const DOLLAR: u8 = 0x01;
/// Internal final terminator byte, rendered as `#` on output.
pub const HASH: u8 = 0x00;

/// Reserved separator bytes. The ordering `hash < dollar < b` must hold for
/// every alphabet byte `b`, which is why both sentinels sit below 0x02.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SentinelPolicy {
    pub dollar: u8,
    pub hash: u8,
}

impl Default for SentinelPolicy {
    fn default() -> Self {
        SentinelPolicy { dollar: DOLLAR, hash: HASH }
    }
}

/// One nonempty byte string over the alphabet; sentinel bytes are rejected.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sequence {
    bytes: Vec<u8>,
}

impl Sequence {
    pub fn new(bytes: Vec<u8>) -> Result<Self> {
        Self::with_line(bytes, 0)
    }

    fn with_line(bytes: Vec<u8>, line: usize) -> Result<Self> {
        if bytes.is_empty() {
            return Err(Error::EmptySequence { line });
        }
        if let Some(&byte) = bytes.iter().find(|&&b| b <= DOLLAR) {
            return Err(Error::ReservedByte { line, byte });
        }
        Ok(Sequence { bytes })
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }
}

/// Ordered multiset of sequences. Input order is preserved exactly as
/// ingested; duplicates are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringCollection {
    items: Vec<Sequence>,
    labels: Option<Vec<String>>,
    alphabet: Vec<u8>,
}

impl StringCollection {
    pub fn new(items: Vec<Sequence>) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::EmptyCollection);
        }
        let alphabet = collect_alphabet(&items);
        Ok(StringCollection { items, labels: None, alphabet })
    }

    pub fn with_labels(items: Vec<Sequence>, labels: Vec<String>) -> Result<Self> {
        let mut c = Self::new(items)?;
        c.labels = Some(labels);
        Ok(c)
    }

    /// Parse newline-delimited sequences (LF or CRLF). Every line must be
    /// nonempty after stripping the terminator.
    pub fn from_lines(data: &[u8]) -> Result<Self> {
        let mut items = Vec::new();
        let mut line_no = 0;
        for mut line in split_lines(data) {
            line_no += 1;
            if line.last() == Some(&b'\r') {
                line = &line[..line.len() - 1];
            }
            items.push(Sequence::with_line(line.to_vec(), line_no)?);
        }
        Self::new(items)
    }

    /// Parse FASTA records: a `>` header line followed by one or more
    /// sequence lines, which are concatenated. Headers are kept as labels.
    pub fn from_fasta(data: &[u8]) -> Result<Self> {
        let mut items = Vec::new();
        let mut labels = Vec::new();
        let mut current: Option<(String, Vec<u8>, usize)> = None;
        let mut line_no = 0;
        for mut line in split_lines(data) {
            line_no += 1;
            if line.last() == Some(&b'\r') {
                line = &line[..line.len() - 1];
            }
            if line.is_empty() {
                continue;
            }
            if line[0] == b'>' {
                if let Some((label, seq, start)) = current.take() {
                    items.push(Sequence::with_line(seq, start)?);
                    labels.push(label);
                }
                let label = String::from_utf8_lossy(&line[1..]).into_owned();
                current = Some((label, Vec::new(), line_no));
            } else {
                match current.as_mut() {
                    Some((_, seq, _)) => seq.extend_from_slice(line),
                    None => return Err(Error::MalformedFasta { line: line_no }),
                }
            }
        }
        if let Some((label, seq, start)) = current.take() {
            items.push(Sequence::with_line(seq, start)?);
            labels.push(label);
        }
        Self::with_labels(items, labels)
    }

    /// Number of strings, `m`.
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Total length over all strings.
    pub fn total_len(&self) -> usize {
        self.items.iter().map(Sequence::len).sum()
    }

    /// Distinct bytes in use, ascending.
    pub fn alphabet(&self) -> &[u8] {
        &self.alphabet
    }

    pub fn items(&self) -> &[Sequence] {
        &self.items
    }

    /// 0-based access.
    pub fn item(&self, d: usize) -> &Sequence {
        &self.items[d]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Byte-exact line serialization; re-ingesting yields an equal collection.
    pub fn to_lines(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.total_len() + self.len());
        for item in &self.items {
            out.extend_from_slice(item.as_bytes());
            out.push(b'\n');
        }
        out
    }

    /// Reorder by `order`, where `order[k]` is the 0-based input index of the
    /// string placed at position `k`. `order` must be a permutation of `0..m`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        debug_assert_eq!(order.len(), self.items.len());
        let items: Vec<Sequence> = order.iter().map(|&d| self.items[d].clone()).collect();
        let labels = self
            .labels
            .as_ref()
            .map(|ls| order.iter().map(|&d| ls[d].clone()).collect());
        let alphabet = self.alphabet.clone();
        StringCollection { items, labels, alphabet }
    }

    /// Restrict to the given strictly increasing 0-based indices.
    pub fn subcollection(&self, indices: &[usize]) -> Result<Self> {
        let items: Vec<Sequence> = indices.iter().map(|&d| self.items[d].clone()).collect();
        Self::new(items)
    }
}

fn collect_alphabet(items: &[Sequence]) -> Vec<u8> {
    let mut seen = [false; 256];
    for item in items {
        for &b in item.as_bytes() {
            seen[b as usize] = true;
        }
    }
    (0..=255u8).filter(|&b| seen[b as usize]).collect()
}

/// Split on `\n`, dropping the empty trailing piece of a terminated stream
/// but keeping interior empty lines so they can be reported.
fn split_lines(data: &[u8]) -> impl Iterator<Item = &[u8]> {
    let data = if data.last() == Some(&b'\n') { &data[..data.len() - 1] } else { data };
    let mut done = data.is_empty();
    let mut rest = data;
    core::iter::from_fn(move || {
        if done {
            return None;
        }
        match rest.iter().position(|&b| b == b'\n') {
            Some(i) => {
                let piece = &rest[..i];
                rest = &rest[i + 1..];
                Some(piece)
            }
            None => {
                done = true;
                Some(rest)
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn ingest_lines_basic() {
        let c = StringCollection::from_lines(b"CTGA\nTG\n").unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.item(0).as_bytes(), b"CTGA");
        assert_eq!(c.item(1).as_bytes(), b"TG");
        assert_eq!(c.alphabet(), b"ACGT");
    }

    #[test]
    fn ingest_lines_toy_collection() {
        let c = StringCollection::from_lines(b"CTGA\nTG\nGTCC\nTCA\nCGACC\nCGA\n").unwrap();
        assert_eq!(c.len(), 6);
        assert_eq!(c.total_len(), 21);
    }

    #[test]
    fn ingest_lines_rejects_empty_stream() {
        assert_eq!(StringCollection::from_lines(b""), Err(Error::EmptyCollection));
    }

    #[test]
    fn ingest_lines_rejects_blank_line() {
        assert_eq!(
            StringCollection::from_lines(b"AC\n\nGT\n"),
            Err(Error::EmptySequence { line: 2 })
        );
    }

    #[test]
    fn ingest_lines_rejects_reserved_bytes() {
        assert_eq!(
            StringCollection::from_lines(&[b'A', 0x01, b'\n']),
            Err(Error::ReservedByte { line: 1, byte: 0x01 })
        );
        assert_eq!(
            StringCollection::from_lines(&[0x00, b'\n']),
            Err(Error::ReservedByte { line: 1, byte: 0x00 })
        );
    }

    #[test]
    fn ingest_lines_handles_crlf() {
        let c = StringCollection::from_lines(b"AC\r\nGT\r\n").unwrap();
        assert_eq!(c.item(0).as_bytes(), b"AC");
        assert_eq!(c.item(1).as_bytes(), b"GT");
    }

    #[test]
    fn ingest_fasta_concatenates_record_lines() {
        let c = StringCollection::from_fasta(b">a\nCT\nGA\n>b\nTG\n").unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.item(0).as_bytes(), b"CTGA");
        assert_eq!(c.item(1).as_bytes(), b"TG");
        assert_eq!(c.labels(), Some(&["a".into(), "b".into()][..]));
    }

    #[test]
    fn ingest_fasta_rejects_empty_record() {
        assert_eq!(
            StringCollection::from_fasta(b">a\n>b\nTG\n"),
            Err(Error::EmptySequence { line: 1 })
        );
    }

    #[test]
    fn ingest_fasta_single_record() {
        let c = StringCollection::from_fasta(b">x\nACGTACGT\n").unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.item(0).as_bytes(), b"ACGTACGT");
    }

    #[test]
    fn ingest_fasta_rejects_headerless_data() {
        assert_eq!(
            StringCollection::from_fasta(b"ACGT\n"),
            Err(Error::MalformedFasta { line: 1 })
        );
    }

    #[test]
    fn line_round_trip_is_byte_exact() {
        let data = b"CTGA\nTG\nGTCC\nTCA\nCGACC\nCGA\n";
        let c = StringCollection::from_lines(data).unwrap();
        assert_eq!(c.to_lines(), data);
        let again = StringCollection::from_lines(&c.to_lines()).unwrap();
        assert_eq!(again.items(), c.items());
    }

    #[test]
    fn permuted_reorders_items() {
        let c = StringCollection::from_lines(b"A\nC\nG\n").unwrap();
        let p = c.permuted(&[2, 0, 1]);
        assert_eq!(p.item(0).as_bytes(), b"G");
        assert_eq!(p.item(1).as_bytes(), b"A");
        assert_eq!(p.item(2).as_bytes(), b"C");
    }

    #[test]
    fn sentinel_policy_orders_below_alphabet() {
        let p = SentinelPolicy::default();
        assert!(p.hash < p.dollar);
        let c = StringCollection::from_lines(b"AC\n").unwrap();
        assert!(p.dollar < c.alphabet()[0]);
    }

    #[test]
    fn sequence_rejects_empty_and_reserved() {
        assert_eq!(Sequence::new(vec![]), Err(Error::EmptySequence { line: 0 }));
        assert!(Sequence::new(vec![0x01]).is_err());
        assert!(Sequence::new(b"ACGT".to_vec()).is_ok());
    }
}
