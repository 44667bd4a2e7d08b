//! Text formats: transform rendering and parsing (`$`/`#` glyphs), sidecar
//! metadata files, and the interval report.

use std::fmt::Write as _;

use colbwt::intervals::SapInterval;
use colbwt::transforms::{Transform, Variant};
use colbwt::{DOLLAR, HASH};

use crate::Failure;

/// Map a rendered transform line back to sentinel bytes. Only the first
/// line is read; a trailing newline is ignored.
pub fn parse_transform_text(data: &[u8]) -> Result<Vec<u8>, Failure> {
    let line = data.split(|&b| b == b'\n').next().unwrap_or(&[]);
    let line = if line.last() == Some(&b'\r') { &line[..line.len() - 1] } else { line };
    if line.is_empty() {
        return Err(Failure::new(4, "transform file is empty"));
    }
    Ok(line
        .iter()
        .map(|&b| match b {
            b'$' => DOLLAR,
            b'#' => HASH,
            other => other,
        })
        .collect())
}

/// Sidecar for the extended transform: one line `I: i1 i2 ...` with the
/// 1-based recovery indices; for the multidollar variants one `pos rank`
/// line per dollar.
pub fn render_sidecar(t: &Transform) -> Option<String> {
    if let Some(tuple) = t.i_tuple() {
        let mut out = String::from("I:");
        for i in tuple {
            let _ = write!(out, " {i}");
        }
        out.push('\n');
        return Some(out);
    }
    if let Some(ranks) = t.dollar_ranks() {
        let mut out = String::new();
        let mut next = ranks.iter();
        for (pos0, &b) in t.text().iter().enumerate() {
            if b == DOLLAR {
                let rank = next.next().expect("one rank per dollar");
                let _ = writeln!(out, "{} {}", pos0 + 1, rank);
            }
        }
        return Some(out);
    }
    None
}

pub fn parse_index_tuple(data: &str) -> Result<Vec<usize>, Failure> {
    let line = data
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| Failure::new(4, "metadata file is empty"))?;
    let rest = line
        .trim()
        .strip_prefix("I:")
        .ok_or_else(|| Failure::new(4, "expected an 'I:' index line"))?;
    rest.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Failure::new(4, format!("bad index '{tok}' in metadata")))
        })
        .collect()
}

/// Parse `pos rank` lines and return the ranks in text order, validated
/// against the actual dollar positions of `text`.
pub fn parse_dollar_ranks(data: &str, text: &[u8]) -> Result<Vec<usize>, Failure> {
    let mut pairs = Vec::new();
    for line in data.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let pos = it
            .next()
            .and_then(|t| t.parse::<usize>().ok())
            .ok_or_else(|| Failure::new(4, format!("bad metadata line '{line}'")))?;
        let rank = it
            .next()
            .and_then(|t| t.parse::<usize>().ok())
            .ok_or_else(|| Failure::new(4, format!("bad metadata line '{line}'")))?;
        if it.next().is_some() {
            return Err(Failure::new(4, format!("bad metadata line '{line}'")));
        }
        pairs.push((pos, rank));
    }
    pairs.sort_unstable();
    let dollar_positions: Vec<usize> = text
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| (b == DOLLAR).then_some(i + 1))
        .collect();
    let listed: Vec<usize> = pairs.iter().map(|&(p, _)| p).collect();
    if listed != dollar_positions {
        return Err(Failure::new(
            4,
            "metadata positions do not match the dollars in the transform",
        ));
    }
    Ok(pairs.into_iter().map(|(_, r)| r).collect())
}

pub fn interval_report(sap: &[SapInterval]) -> String {
    let mut out = String::from("# begin end suffix chars kind\n");
    for iv in sap {
        let suffix = if iv.suffix.is_empty() {
            "-".to_string()
        } else {
            String::from_utf8_lossy(&iv.suffix).into_owned()
        };
        let chars: String = iv
            .chars
            .iter()
            .map(|&b| if b == DOLLAR { '$' } else { b as char })
            .collect();
        let kind = if iv.is_interesting() { "interesting" } else { "sap" };
        let _ = writeln!(out, "{} {} {} {} {}", iv.begin, iv.end, suffix, chars, kind);
    }
    out
}

pub fn variant_of(arg: crate::VariantArg) -> Variant {
    match arg {
        crate::VariantArg::Ebwt => Variant::Ebwt,
        crate::VariantArg::DolEbwt => Variant::DolEbwt,
        crate::VariantArg::MdolEbwt => Variant::MdolEbwt,
        crate::VariantArg::MdolBwt => Variant::MdolBwt,
        crate::VariantArg::ConcatBwt => Variant::ConcatBwt,
        crate::VariantArg::AdaptedConcatBwt => Variant::AdaptedConcatBwt,
    }
}
