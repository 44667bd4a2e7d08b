//! Run minimization over the multidollar transform family: the colex
//! reordering, the greedy plus heuristic, the exact optimum via a layered
//! DAG over chains of adjacent interesting intervals, and the brute-force
//! oracles that check them.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::collection::{StringCollection, DOLLAR};
use crate::error::{Error, Result};
use crate::intervals::sap_intervals;
use crate::order::colex_compare;
use crate::transforms::{mdol_ebwt, Transform};

/// Default cap on exhaustive order enumeration.
pub const DEFAULT_GUARD: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Input,
    Colex,
    Plus,
    Opt,
    BruteForce,
}

/// A member of the multidollar family together with its run count and the
/// witness order that realizes it: `order[k]` is the 0-based input index of
/// the string placed at position `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimizationResult {
    pub transform: Transform,
    pub runs: usize,
    pub order: Vec<usize>,
    pub method: Method,
}

impl OptimizationResult {
    /// Text form: the rendered transform, a `runs:` line, and the witness
    /// order as 1-based input indices.
    pub fn render(&self) -> String {
        let mut out = String::from_utf8_lossy(&self.transform.render()).into_owned();
        out.push('\n');
        let _ = core::fmt::Write::write_fmt(&mut out, format_args!("runs: {}\n", self.runs));
        out.push_str("order:");
        for d in &self.order {
            let _ = core::fmt::Write::write_fmt(&mut out, format_args!(" {}", d + 1));
        }
        out.push('\n');
        out
    }
}

fn result_for_order(c: &StringCollection, order: Vec<usize>, method: Method) -> OptimizationResult {
    let transform = mdol_ebwt(&c.permuted(&order));
    let runs = transform.count_runs(true);
    OptimizationResult { transform, runs, order, method }
}

/// The multidollar transform of the collection in the order it came in.
pub fn input_order_bwt(c: &StringCollection) -> OptimizationResult {
    result_for_order(c, (0..c.len()).collect(), Method::Input)
}

/// Sort the strings colexicographically (ties by input index) before the
/// multidollar transform. Every interesting interval then carries each of
/// its symbols in one run.
pub fn colex_bwt(c: &StringCollection) -> OptimizationResult {
    let mut order: Vec<usize> = (0..c.len()).collect();
    order.sort_by(|&a, &b| colex_compare(c.item(a).as_bytes(), c.item(b).as_bytes()));
    result_for_order(c, order, Method::Colex)
}

/// Greedy rearrangement: every interesting interval is grouped into one run
/// per symbol; the run matching the character just before the interval goes
/// first and the run matching the fixed character just after goes last,
/// when those runs exist. Intervals are processed left to right; when the
/// following position belongs to another free interval the last-run
/// adjustment is skipped. Remaining runs stay in ascending symbol order
/// with the dollar smallest.
pub fn plus_bwt(c: &StringCollection) -> OptimizationResult {
    let skel = Skeleton::build(c);
    let mut decided = skel.template.clone();
    let mut arrangements: BTreeMap<Vec<u8>, Vec<u8>> = BTreeMap::new();
    for (r, region) in skel.regions.iter().enumerate() {
        let symbols = &region.symbols;
        let prec = if region.begin > 0 { Some(decided[region.begin - 1]) } else { None };
        let next_is_free = skel
            .regions
            .get(r + 1)
            .is_some_and(|next| next.begin == region.end + 1);
        let follow = if !next_is_free && region.end + 1 < skel.template.len() {
            Some(skel.template[region.end + 1])
        } else {
            None
        };
        let first = prec.filter(|p| symbols.contains(p));
        let last = follow.filter(|f| symbols.contains(f) && Some(*f) != first && symbols.len() >= 2);
        let arrangement = assemble(symbols, first, last);
        write_region(&mut decided, region, &arrangement);
        arrangements.insert(region.suffix.clone(), arrangement);
    }
    let order = realize_order(c, &arrangements);
    let result = result_for_order(c, order, Method::Plus);
    debug_assert_eq!(result.transform.text(), decided.as_slice());
    result
}

/// Exact minimum number of runs over all input orders. Fixed positions and
/// non-interesting intervals form a skeleton; each chain of directly
/// adjacent interesting intervals is solved by shortest path on a layered
/// DAG whose layer-i states are the candidate last-run symbols of interval
/// i, with an edge saving one run when the next interval can open with the
/// incoming symbol.
///
/// ```
/// use colbwt::{optimize, StringCollection};
///
/// let c = StringCollection::from_lines(b"CTGA\nTG\nGTCC\nTCA\nCGACC\nCGA\n").unwrap();
/// let best = optimize::opt_bwt(&c);
/// assert_eq!(best.runs, 14);
/// assert_eq!(optimize::input_order_bwt(&c).runs, 19);
/// ```
pub fn opt_bwt(c: &StringCollection) -> OptimizationResult {
    let skel = Skeleton::build(c);
    let mut decided = skel.template.clone();
    let mut arrangements: BTreeMap<Vec<u8>, Vec<u8>> = BTreeMap::new();
    let mut i = 0;
    while i < skel.regions.len() {
        let mut j = i + 1;
        while j < skel.regions.len() && skel.regions[j].begin == skel.regions[j - 1].end + 1 {
            j += 1;
        }
        let chain = &skel.regions[i..j];
        let entry = if chain[0].begin > 0 { Some(skel.template[chain[0].begin - 1]) } else { None };
        let exit = if chain[j - i - 1].end + 1 < skel.template.len() {
            Some(skel.template[chain[j - i - 1].end + 1])
        } else {
            None
        };
        for (region, arrangement) in chain.iter().zip(solve_chain(chain, entry, exit)) {
            write_region(&mut decided, region, &arrangement);
            arrangements.insert(region.suffix.clone(), arrangement);
        }
        i = j;
    }
    let order = realize_order(c, &arrangements);
    let result = result_for_order(c, order, Method::Opt);
    debug_assert_eq!(result.transform.text(), decided.as_slice());
    result
}

/// Enumerate all `m!` input orders and return the minimum run count of the
/// multidollar transform together with the lexicographically smallest order
/// attaining it.
pub fn brute_force_ropt(c: &StringCollection, guard: usize) -> Result<(usize, Vec<usize>)> {
    let m = c.len();
    if m > guard {
        return Err(Error::GuardExceeded { m, guard });
    }
    let mut perm: Vec<usize> = (0..m).collect();
    let mut best = usize::MAX;
    let mut best_perm = perm.clone();
    loop {
        let runs = mdol_ebwt(&c.permuted(&perm)).count_runs(true);
        if runs < best {
            best = runs;
            best_perm = perm.clone();
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok((best, best_perm))
}

/// Minimum run count of the adapted concatenated transform over all input
/// orders.
pub fn concat_runs_floor(c: &StringCollection, guard: usize) -> Result<usize> {
    let m = c.len();
    if m > guard {
        return Err(Error::GuardExceeded { m, guard });
    }
    let mut perm: Vec<usize> = (0..m).collect();
    let mut best = usize::MAX;
    loop {
        let runs = crate::transforms::adapted_concat_bwt(&c.permuted(&perm)).count_runs(true);
        best = best.min(runs);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(best)
}

/// Lexicographic successor in place; false once the last permutation is
/// reached.
pub fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// One interesting interval in 0-based text coordinates.
struct Region {
    begin: usize,
    end: usize,
    suffix: Vec<u8>,
    symbols: Vec<u8>,
    char_counts: Vec<(u8, usize)>,
}

/// The order-independent part of the transform: every position outside an
/// interesting interval has a fixed character (the input-order text serves
/// as the template), and each interesting interval knows its symbol
/// multiset.
struct Skeleton {
    template: Vec<u8>,
    regions: Vec<Region>,
}

impl Skeleton {
    fn build(c: &StringCollection) -> Skeleton {
        let template = mdol_ebwt(c).text().to_vec();
        let regions = sap_intervals(c)
            .into_iter()
            .filter(|iv| iv.is_interesting())
            .map(|iv| {
                let symbols = iv.distinct_symbols();
                let char_counts = symbols
                    .iter()
                    .map(|&s| (s, iv.chars.iter().filter(|&&ch| ch == s).count()))
                    .collect();
                Region {
                    begin: iv.begin - 1,
                    end: iv.end - 1,
                    suffix: iv.suffix,
                    symbols,
                    char_counts,
                }
            })
            .collect();
        Skeleton { template, regions }
    }
}

/// Expand an arrangement into the template slice, repeating each symbol by
/// its multiplicity.
fn write_region(text: &mut [u8], region: &Region, arrangement: &[u8]) {
    let mut pos = region.begin;
    for &sym in arrangement {
        let count = region
            .char_counts
            .iter()
            .find(|&&(s, _)| s == sym)
            .map(|&(_, n)| n)
            .unwrap_or(0);
        for _ in 0..count {
            text[pos] = sym;
            pos += 1;
        }
    }
    debug_assert_eq!(pos, region.end + 1);
}

/// Order: chosen first, remaining symbols ascending, chosen last.
fn assemble(symbols: &[u8], first: Option<u8>, last: Option<u8>) -> Vec<u8> {
    let mut arrangement = Vec::with_capacity(symbols.len());
    if let Some(f) = first {
        arrangement.push(f);
    }
    for &s in symbols {
        if Some(s) != first && Some(s) != last {
            arrangement.push(s);
        }
    }
    if let Some(l) = last {
        arrangement.push(l);
    }
    arrangement
}

/// Shortest path over the chain: state = last-run symbol of the current
/// interval; an interval costs its symbol count minus one boundary merge
/// when it can open with the incoming symbol.
fn solve_chain(chain: &[Region], entry: Option<u8>, exit: Option<u8>) -> Vec<Vec<u8>> {
    #[derive(Clone)]
    struct State {
        cost: usize,
        first: u8,
        prev: usize, // state index in the previous layer
    }
    // Given the incoming symbol, the cheapest way to end interval `syms` on
    // `last`: open with the incoming symbol when it is available, otherwise
    // pay the boundary break and open with the smallest remaining symbol.
    let enter = |syms: &[u8], last: u8, incoming: Option<u8>| -> (u8, usize) {
        match incoming {
            Some(inc) if inc != last && syms.contains(&inc) => (inc, 0),
            None => (*syms.iter().find(|&&s| s != last).unwrap_or(&last), 0),
            Some(_) => (*syms.iter().find(|&&s| s != last).unwrap_or(&last), 1),
        }
    };
    let mut layers: Vec<Vec<State>> = Vec::with_capacity(chain.len());
    for (li, region) in chain.iter().enumerate() {
        let syms = &region.symbols;
        let k = syms.len();
        debug_assert!(k >= 2, "interesting intervals carry at least two symbols");
        let mut layer: Vec<State> = Vec::with_capacity(k);
        for &last in syms {
            let best = if li == 0 {
                let (first, boundary) = enter(syms, last, entry);
                State { cost: (k - 1) + boundary, first, prev: usize::MAX }
            } else {
                let prev_layer = &layers[li - 1];
                let prev_syms = &chain[li - 1].symbols;
                let mut best: Option<State> = None;
                for (pi, prev_state) in prev_layer.iter().enumerate() {
                    let (first, boundary) = enter(syms, last, Some(prev_syms[pi]));
                    let cost = prev_state.cost + (k - 1) + boundary;
                    if best.as_ref().is_none_or(|b| cost < b.cost) {
                        best = Some(State { cost, first, prev: pi });
                    }
                }
                best.expect("previous layer is nonempty")
            };
            layer.push(best);
        }
        layers.push(layer);
    }
    // close the chain against the fixed exit character
    let last_layer = layers.len() - 1;
    let mut best_end = 0;
    let mut best_cost = usize::MAX;
    for (si, state) in layers[last_layer].iter().enumerate() {
        let exit_break = match exit {
            Some(x) if x == chain[last_layer].symbols[si] => 0,
            Some(_) => 1,
            None => 0,
        };
        let total = state.cost + exit_break;
        if total < best_cost {
            best_cost = total;
            best_end = si;
        }
    }
    // backtrack
    let mut picks = vec![0usize; chain.len()];
    let mut cur = best_end;
    for li in (0..chain.len()).rev() {
        picks[li] = cur;
        cur = layers[li][cur].prev;
    }
    chain
        .iter()
        .enumerate()
        .map(|(li, region)| {
            let si = picks[li];
            let last = region.symbols[si];
            let first = layers[li][si].first;
            assemble(&region.symbols, Some(first), Some(last))
        })
        .collect()
}

/// Translate per-interval run arrangements into one input order. Works down
/// the shared-suffix tree: at suffix depth `k` the member strings split into
/// the group that ends exactly here (the dollar class) and one group per
/// preceding character; the interval's arrangement fixes the group order
/// and each character group recurses one level deeper.
fn realize_order(c: &StringCollection, arrangements: &BTreeMap<Vec<u8>, Vec<u8>>) -> Vec<usize> {
    let mut out = Vec::with_capacity(c.len());
    let all: Vec<usize> = (0..c.len()).collect();
    descend(c, &all, 0, arrangements, &mut out);
    out
}

fn descend(
    c: &StringCollection,
    set: &[usize],
    depth: usize,
    arrangements: &BTreeMap<Vec<u8>, Vec<u8>>,
    out: &mut Vec<usize>,
) {
    if set.len() == 1 {
        out.push(set[0]);
        return;
    }
    let mut dollar_group: Vec<usize> = Vec::new();
    let mut groups: BTreeMap<u8, Vec<usize>> = BTreeMap::new();
    for &d in set {
        let t = c.item(d).as_bytes();
        if t.len() == depth {
            dollar_group.push(d);
        } else {
            groups.entry(t[t.len() - depth - 1]).or_default().push(d);
        }
    }
    let suffix = {
        let t = c.item(set[0]).as_bytes();
        t[t.len() - depth..].to_vec()
    };
    let default_order = || {
        let mut order = Vec::new();
        if !dollar_group.is_empty() {
            order.push(DOLLAR);
        }
        order.extend(groups.keys().copied());
        order
    };
    let order = arrangements.get(&suffix).cloned().unwrap_or_else(default_order);
    debug_assert_eq!(order.len(), groups.len() + usize::from(!dollar_group.is_empty()));
    for sym in order {
        if sym == DOLLAR {
            out.extend_from_slice(&dollar_group);
        } else {
            descend(c, &groups[&sym], depth + 1, arrangements, out);
        }
    }
}
