//! Command line front end: compute the collection transforms, invert them,
//! report SAP/interesting intervals, compare variants, and print run
//! statistics. Data goes to stdout, diagnostics to stderr.
//!
//! Exit codes: 2 I/O or parse error, 3 invalid variant/order combination,
//! 4 malformed transform or metadata, 5 brute-force guard exceeded,
//! 6 a variant difference outside every interesting interval.

mod textio;

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use colbwt::intervals::{interesting_intervals, sap_intervals};
use colbwt::inversion::{invert_concat_bwt, invert_dollar_variant, invert_ebwt};
use colbwt::optimize::{
    brute_force_ropt, colex_bwt, input_order_bwt, opt_bwt, plus_bwt, OptimizationResult,
};
use colbwt::transforms::{
    adapted_concat_bwt, concat_bwt, dol_ebwt, ebwt, mdol_bwt, mdol_ebwt, Transform, Variant,
};
use colbwt::{Error, StringCollection, DOLLAR, HASH};

use textio::{
    interval_report, parse_dollar_ranks, parse_index_tuple, parse_transform_text, render_sidecar,
    variant_of,
};

#[derive(Parser)]
#[command(name = "colbwt", version, about = "Burrows-Wheeler transforms of string collections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    #[value(name = "ebwt")]
    Ebwt,
    #[value(name = "dolEBWT")]
    DolEbwt,
    #[value(name = "mdolEBWT")]
    MdolEbwt,
    #[value(name = "mdolBWT")]
    MdolBwt,
    #[value(name = "concatBWT")]
    ConcatBwt,
    #[value(name = "adaptedConcatBWT")]
    AdaptedConcatBwt,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum OrderArg {
    #[default]
    Input,
    Colex,
    Plus,
    Opt,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum FormatArg {
    #[default]
    Lines,
    Fasta,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a transform of the collection
    Transform {
        /// Collection file; stdin when omitted
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "mdolEBWT")]
        variant: VariantArg,
        /// String order; non-input orders require a multidollar variant
        #[arg(long, value_enum, default_value_t)]
        order: OrderArg,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
        /// Write recovery metadata (index tuple or dollar ranks) here
        #[arg(long)]
        meta: Option<PathBuf>,
    },
    /// Recover the collection from a transform
    Invert {
        /// Transform file; stdin when omitted
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Metadata sidecar (required for ebwt and the multidollar variants)
        #[arg(long)]
        meta: Option<PathBuf>,
    },
    /// Run statistics per string order
    Stats {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "mdolEBWT")]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
        /// Count all dollars as one symbol
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        dollars_equal: bool,
        /// Add the exhaustive minimum over all input orders
        #[arg(long)]
        ropt: bool,
        /// Cap on the collection size for exhaustive enumeration
        #[arg(long, default_value_t = colbwt::optimize::DEFAULT_GUARD)]
        guard: usize,
    },
    /// Report SAP and interesting intervals
    Intervals {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
    },
    /// Compare two separator-based variants position by position
    Compare {
        variant_a: VariantArg,
        variant_b: VariantArg,
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
    },
}

/// An error with the exit code it maps to.
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("colbwt: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Transform { input, variant, order, format, meta } => {
            cmd_transform(input, variant, order, format, meta)
        }
        Command::Invert { input, variant, meta } => cmd_invert(input, variant, meta),
        Command::Stats { input, variant, format, dollars_equal, ropt, guard } => {
            cmd_stats(input, variant, format, dollars_equal, ropt, guard)
        }
        Command::Intervals { input, format } => cmd_intervals(input, format),
        Command::Compare { variant_a, variant_b, input, format } => {
            cmd_compare(variant_a, variant_b, input, format)
        }
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<Vec<u8>, Failure> {
    match path {
        Some(p) => fs::read(p).map_err(|e| Failure::new(2, format!("{}: {e}", p.display()))),
        None => {
            let mut buf = Vec::new();
            std::io::stdin()
                .read_to_end(&mut buf)
                .map_err(|e| Failure::new(2, format!("stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn read_collection(path: Option<&PathBuf>, format: FormatArg) -> Result<StringCollection, Failure> {
    let data = read_input(path)?;
    let parsed = match format {
        FormatArg::Lines => StringCollection::from_lines(&data),
        FormatArg::Fasta => StringCollection::from_fasta(&data),
    };
    parsed.map_err(|e| Failure::new(2, e.to_string()))
}

fn ordered(c: &StringCollection, order: OrderArg) -> OptimizationResult {
    match order {
        OrderArg::Input => input_order_bwt(c),
        OrderArg::Colex => colex_bwt(c),
        OrderArg::Plus => plus_bwt(c),
        OrderArg::Opt => opt_bwt(c),
    }
}

fn write_stdout(bytes: &[u8]) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    out.write_all(bytes)
        .and_then(|_| out.flush())
        .map_err(|e| Failure::new(2, format!("stdout: {e}")))
}

fn cmd_transform(
    input: Option<PathBuf>,
    variant: VariantArg,
    order: OrderArg,
    format: FormatArg,
    meta: Option<PathBuf>,
) -> Result<(), Failure> {
    let v = variant_of(variant);
    if order != OrderArg::Input && !matches!(v, Variant::MdolEbwt | Variant::MdolBwt) {
        return Err(Failure::new(
            3,
            format!("--order only applies to the multidollar variants, not {}", v.name()),
        ));
    }
    let c = read_collection(input.as_ref(), format)?;
    let t = match v {
        Variant::Ebwt => ebwt(&c).map_err(|e| Failure::new(2, e.to_string()))?,
        Variant::DolEbwt => dol_ebwt(&c),
        Variant::MdolEbwt => ordered(&c, order).transform,
        Variant::MdolBwt => {
            let result = ordered(&c, order);
            mdol_bwt(&c.permuted(&result.order))
        }
        Variant::ConcatBwt => concat_bwt(&c),
        Variant::AdaptedConcatBwt => adapted_concat_bwt(&c),
        Variant::Bwt => unreachable!("not constructible from the command line"),
    };
    let mut line = t.render();
    line.push(b'\n');
    write_stdout(&line)?;
    if let Some(path) = meta {
        match render_sidecar(&t) {
            Some(contents) => fs::write(&path, contents)
                .map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))?,
            None => eprintln!("colbwt: {} carries no recovery metadata", t.variant().name()),
        }
    }
    Ok(())
}

fn cmd_invert(
    input: Option<PathBuf>,
    variant: VariantArg,
    meta: Option<PathBuf>,
) -> Result<(), Failure> {
    let v = variant_of(variant);
    let text = parse_transform_text(&read_input(input.as_ref())?)?;
    let meta_contents = match &meta {
        Some(p) => Some(
            fs::read_to_string(p).map_err(|e| Failure::new(2, format!("{}: {e}", p.display())))?,
        ),
        None => None,
    };
    let malformed = |e: Error| Failure::new(4, e.to_string());
    let recovered = match v {
        Variant::Ebwt => {
            let tuple = parse_index_tuple(
                meta_contents
                    .as_deref()
                    .ok_or_else(|| Failure::new(4, "ebwt inversion needs --meta"))?,
            )?;
            let t = Transform::from_parts(v, text, None, Some(tuple)).map_err(malformed)?;
            invert_ebwt(&t).map_err(malformed)?
        }
        Variant::MdolEbwt | Variant::MdolBwt => {
            let ranks = parse_dollar_ranks(
                meta_contents
                    .as_deref()
                    .ok_or_else(|| Failure::new(4, "multidollar inversion needs --meta"))?,
                &text,
            )?;
            let t = Transform::from_parts(v, text, Some(ranks), None).map_err(malformed)?;
            invert_dollar_variant(&t).map_err(malformed)?
        }
        Variant::DolEbwt | Variant::AdaptedConcatBwt => {
            let t = Transform::from_parts(v, text, None, None).map_err(malformed)?;
            invert_dollar_variant(&t).map_err(malformed)?
        }
        Variant::ConcatBwt => {
            let t = Transform::from_parts(v, text, None, None).map_err(malformed)?;
            invert_concat_bwt(&t).map_err(malformed)?
        }
        Variant::Bwt => unreachable!("not constructible from the command line"),
    };
    write_stdout(&recovered.to_lines())
}

fn cmd_stats(
    input: Option<PathBuf>,
    variant: VariantArg,
    format: FormatArg,
    dollars_equal: bool,
    ropt: bool,
    guard: usize,
) -> Result<(), Failure> {
    let v = variant_of(variant);
    let c = read_collection(input.as_ref(), format)?;
    let mut rows: Vec<(String, Transform)> = Vec::new();
    match v {
        Variant::MdolEbwt | Variant::MdolBwt => {
            for order in [OrderArg::Input, OrderArg::Colex, OrderArg::Plus, OrderArg::Opt] {
                let result = ordered(&c, order);
                let t = if v == Variant::MdolBwt {
                    mdol_bwt(&c.permuted(&result.order))
                } else {
                    result.transform
                };
                let name = match order {
                    OrderArg::Input => "input",
                    OrderArg::Colex => "colex",
                    OrderArg::Plus => "plus",
                    OrderArg::Opt => "opt",
                };
                rows.push((name.to_string(), t));
            }
        }
        Variant::Ebwt => {
            rows.push(("input".to_string(), ebwt(&c).map_err(|e| Failure::new(2, e.to_string()))?));
        }
        Variant::DolEbwt => rows.push(("input".to_string(), dol_ebwt(&c))),
        Variant::ConcatBwt => rows.push(("input".to_string(), concat_bwt(&c))),
        Variant::AdaptedConcatBwt => rows.push(("input".to_string(), adapted_concat_bwt(&c))),
        Variant::Bwt => unreachable!("not constructible from the command line"),
    }
    let mut out = format!("variant {}\norder\tlength\truns\tn/r\n", v.name());
    for (name, t) in &rows {
        let runs = t.count_runs(dollars_equal);
        out.push_str(&format!(
            "{name}\t{}\t{runs}\t{:.2}\n",
            t.len(),
            t.len() as f64 / runs as f64
        ));
    }
    if ropt {
        let (runs, order) = brute_force_ropt(&c, guard).map_err(|e| match e {
            Error::GuardExceeded { .. } => Failure::new(5, e.to_string()),
            other => Failure::new(2, other.to_string()),
        })?;
        let witness: Vec<String> = order.iter().map(|d| (d + 1).to_string()).collect();
        out.push_str(&format!("ropt\t-\t{runs}\t- (order: {})\n", witness.join(" ")));
    }
    write_stdout(out.as_bytes())
}

fn cmd_intervals(input: Option<PathBuf>, format: FormatArg) -> Result<(), Failure> {
    let c = read_collection(input.as_ref(), format)?;
    if c.len() < 2 {
        return write_stdout(b"# m < 2: no shared suffixes, no intervals\n");
    }
    let sap = sap_intervals(&c);
    write_stdout(interval_report(&sap).as_bytes())
}

fn cmd_compare(
    variant_a: VariantArg,
    variant_b: VariantArg,
    input: Option<PathBuf>,
    format: FormatArg,
) -> Result<(), Failure> {
    let c = read_collection(input.as_ref(), format)?;
    let text = |arg: VariantArg| -> Result<Vec<u8>, Failure> {
        match variant_of(arg) {
            Variant::Ebwt => Err(Failure::new(
                3,
                "ebwt has no separators; positional comparison is undefined",
            )),
            Variant::DolEbwt => Ok(dol_ebwt(&c).text().to_vec()),
            Variant::MdolEbwt => Ok(mdol_ebwt(&c).text().to_vec()),
            Variant::MdolBwt => Ok(mdol_bwt(&c).text().to_vec()),
            Variant::ConcatBwt => {
                eprintln!("colbwt: comparing concatBWT through its adapted form");
                Ok(adapted_concat_bwt(&c).text().to_vec())
            }
            Variant::AdaptedConcatBwt => Ok(adapted_concat_bwt(&c).text().to_vec()),
            Variant::Bwt => unreachable!("not constructible from the command line"),
        }
    };
    let a = text(variant_a)?;
    let b = text(variant_b)?;
    if a.len() != b.len() {
        return Err(Failure::new(3, "transform lengths differ; comparison undefined"));
    }
    let intervals = interesting_intervals(&c);
    let glyph = |x: u8| if x == DOLLAR { '$' } else if x == HASH { '#' } else { x as char };
    let mut out = String::new();
    let mut diffs = 0usize;
    let mut outside = 0usize;
    for (pos0, (&x, &y)) in a.iter().zip(&b).enumerate() {
        if x == y {
            continue;
        }
        diffs += 1;
        let pos = pos0 + 1;
        match intervals.iter().find(|iv| iv.begin <= pos && pos <= iv.end) {
            Some(iv) => {
                let suffix = if iv.suffix.is_empty() {
                    "-".to_string()
                } else {
                    String::from_utf8_lossy(&iv.suffix).into_owned()
                };
                out.push_str(&format!(
                    "pos {pos} {} {} interval {}..{} suffix {}\n",
                    glyph(x),
                    glyph(y),
                    iv.begin,
                    iv.end,
                    suffix
                ));
            }
            None => {
                outside += 1;
                out.push_str(&format!("pos {pos} {} {} OUTSIDE\n", glyph(x), glyph(y)));
            }
        }
    }
    out.push_str(&format!("{diffs} differing positions, {outside} outside interesting intervals\n"));
    write_stdout(out.as_bytes())?;
    if outside > 0 {
        return Err(Failure::new(6, "differences outside interesting intervals"));
    }
    Ok(())
}
