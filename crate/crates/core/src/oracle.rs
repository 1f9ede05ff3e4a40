//! Exhaustive tree enumeration: extremal σ, bound audits, and the σ
//! identity and degree-sequence formula scans.
//!
//! Labeled trees on `L` vertices are enumerated through their Prüfer codes
//! in lexicographic order. Work is split by the leading code symbol; every
//! partition produces a partial result and partials are merged in
//! partition order, so reports do not depend on the worker count.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::bounds::{self, BoundContext, BoundError, BoundSpec, Convention, Field, Overrides, Verdict};
use crate::degseq::{
    self, decode_into, DegreeSequence, MultisetPermutations, PruferCode, SequenceError,
};
use crate::graph::Graph;
use crate::indices;
use crate::par::{map_partitions, Exec};

pub const MIN_ORDER: usize = 2;
pub const MAX_ORDER: usize = 10;
/// Largest fixed-degree tree family [`extremal_sigma_for_sequence`] will enumerate.
pub const MAX_SEQUENCE_TREES: u128 = 10_000_000;
/// Witnesses kept on each side (violations, tightest non-violations).
pub const WITNESSES_PER_SIDE: usize = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("tree order {l} outside the enumeration guard {min}..={max}")]
    OutOfRange { l: usize, min: usize, max: usize },
    #[error("{count} trees exceed the enumeration guard of {limit}")]
    TooManyTrees { count: String, limit: u128 },
    #[error("empty tree family")]
    EmptyFamily,
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Bound(#[from] BoundError),
}

fn check_order(l: usize) -> Result<(), OracleError> {
    if (MIN_ORDER..=MAX_ORDER).contains(&l) {
        Ok(())
    } else {
        Err(OracleError::OutOfRange { l, min: MIN_ORDER, max: MAX_ORDER })
    }
}

/// A family of trees to enumerate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeFamily {
    /// Every labeled tree on each listed order.
    AllLabeled(Vec<usize>),
    /// The path `0 - 1 - ... - (L-1)` for each order.
    Paths(Vec<usize>),
    /// The star centered at 0 for each order.
    Stars(Vec<usize>),
}

impl TreeFamily {
    pub fn all_labeled(range: std::ops::RangeInclusive<usize>) -> Self {
        TreeFamily::AllLabeled(range.collect())
    }

    fn orders(&self) -> &[usize] {
        match self {
            TreeFamily::AllLabeled(v) | TreeFamily::Paths(v) | TreeFamily::Stars(v) => v,
        }
    }

    fn check(&self) -> Result<(), OracleError> {
        if self.orders().is_empty() {
            return Err(OracleError::EmptyFamily);
        }
        match self {
            TreeFamily::AllLabeled(v) => v.iter().try_for_each(|&l| check_order(l)),
            // single trees; no combinatorial blow-up
            TreeFamily::Paths(v) | TreeFamily::Stars(v) => match v.iter().find(|&&l| l < 2) {
                Some(&l) => Err(OracleError::OutOfRange { l, min: 2, max: usize::MAX }),
                None => Ok(()),
            },
        }
    }

    fn partitions(&self) -> Vec<Part> {
        let mut parts = Vec::new();
        for &l in self.orders() {
            match self {
                TreeFamily::AllLabeled(_) if l == 2 => parts.push(Part::Single(l, Vec::new())),
                TreeFamily::AllLabeled(_) => parts.extend((0..l).map(|s| Part::Prefix(l, s))),
                TreeFamily::Paths(_) => parts.push(Part::Single(l, (1..l - 1).collect())),
                TreeFamily::Stars(_) => parts.push(Part::Single(l, vec![0; l - 2])),
            }
        }
        parts
    }
}

fn describe_orders(v: &[usize]) -> String {
    let contiguous = v.windows(2).all(|w| w[1] == w[0] + 1);
    match v {
        [one] => format!("n={one}"),
        [first, .., last] if contiguous => format!("n={first}..{last}"),
        _ => format!("n∈{v:?}"),
    }
}

impl fmt::Display for TreeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeFamily::AllLabeled(v) => write!(f, "all labeled trees {}", describe_orders(v)),
            TreeFamily::Paths(v) => write!(f, "paths {}", describe_orders(v)),
            TreeFamily::Stars(v) => write!(f, "stars {}", describe_orders(v)),
        }
    }
}

#[derive(Clone, Debug)]
enum Part {
    /// All codes of length `l - 2` starting with the given symbol.
    Prefix(usize, usize),
    /// One fixed code.
    Single(usize, Vec<usize>),
}

/// A decoded tree handed to visitors, borrowing enumeration buffers.
pub struct TreeRef<'a> {
    pub code: &'a [usize],
    pub edges: &'a [(usize, usize)],
    pub degree: &'a [usize],
}

impl TreeRef<'_> {
    pub fn order(&self) -> usize {
        self.degree.len()
    }

    pub fn sigma(&self) -> u64 {
        self.edges
            .iter()
            .map(|&(u, v)| (self.degree[u] as u64).abs_diff(self.degree[v] as u64).pow(2))
            .sum()
    }

    pub fn graph(&self) -> Graph {
        Graph::from_trusted_edges(self.degree.len(), self.edges)
    }

    pub fn sorted_degrees(&self) -> Vec<usize> {
        sorted(self.degree)
    }
}

fn sorted(degree: &[usize]) -> Vec<usize> {
    let mut d = degree.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

/// Advances the suffix `code[from..]` as a base-`l` counter; false on wrap.
fn advance(code: &mut [usize], from: usize, l: usize) -> bool {
    for i in (from..code.len()).rev() {
        code[i] += 1;
        if code[i] < l {
            return true;
        }
        code[i] = 0;
    }
    false
}

fn visit_part<A>(part: &Part, acc: &mut A, visit: &(impl Fn(&mut A, &TreeRef) + Sync)) {
    let mut edges = Vec::new();
    let mut degree = Vec::new();
    match part {
        Part::Single(l, code) => {
            decode_into(code, *l, &mut edges, &mut degree);
            visit(acc, &TreeRef { code, edges: &edges, degree: &degree });
        }
        Part::Prefix(l, first) => {
            let mut code = vec![0; l - 2];
            code[0] = *first;
            loop {
                decode_into(&code, *l, &mut edges, &mut degree);
                visit(acc, &TreeRef { code: &code, edges: &edges, degree: &degree });
                if !advance(&mut code, 1, *l) {
                    break;
                }
            }
        }
    }
}

/// Visits every tree of `family`, one accumulator per partition, and
/// returns the accumulators in partition order.
pub fn fold_family<A, M, V>(family: &TreeFamily, exec: Exec, make: M, visit: V) -> Result<Vec<A>, OracleError>
where
    A: Send,
    M: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &TreeRef) + Sync + Send,
{
    family.check()?;
    Ok(map_partitions(family.partitions(), exec, |part| {
        let mut acc = make();
        visit_part(&part, &mut acc, &visit);
        acc
    }))
}

/// All `L^(L-2)` labeled trees on `0..L` with their Prüfer codes, in code order.
pub fn enumerate_labeled_trees(l: usize) -> Result<impl Iterator<Item = (PruferCode, Graph)>, OracleError> {
    check_order(l)?;
    let mut next = Some(vec![0usize; l - 2]);
    Ok(std::iter::from_fn(move || {
        let code = next.take()?;
        let mut succ = code.clone();
        if advance(&mut succ, 0, l) {
            next = Some(succ);
        }
        let g = degseq::prufer_decode(&PruferCode(code.clone()), l).expect("code in range");
        Some((PruferCode(code), g))
    }))
}

/// Extremal σ over a family, with the first witness (in code order) for each side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalResult {
    pub family: String,
    pub trees: u64,
    pub min_sigma: u64,
    pub min_witness: Vec<usize>,
    pub min_degrees: Vec<usize>,
    pub max_sigma: u64,
    pub max_witness: Vec<usize>,
    pub max_degrees: Vec<usize>,
}

impl ExtremalResult {
    pub fn min_graph(&self) -> Graph {
        decode_witness(&self.min_witness)
    }

    pub fn max_graph(&self) -> Graph {
        decode_witness(&self.max_witness)
    }
}

fn decode_witness(code: &[usize]) -> Graph {
    degseq::prufer_decode(&PruferCode(code.to_vec()), code.len() + 2).expect("witness code is valid")
}

#[derive(Clone, Debug, Default)]
struct Extremes {
    trees: u64,
    min: Option<(u64, Vec<usize>, Vec<usize>)>,
    max: Option<(u64, Vec<usize>, Vec<usize>)>,
}

impl Extremes {
    fn observe(&mut self, sigma: u64, code: &[usize], degree: &[usize]) {
        self.trees += 1;
        if self.min.as_ref().is_none_or(|(s, _, _)| sigma < *s) {
            self.min = Some((sigma, code.to_vec(), sorted(degree)));
        }
        if self.max.as_ref().is_none_or(|(s, _, _)| sigma > *s) {
            self.max = Some((sigma, code.to_vec(), sorted(degree)));
        }
    }

    /// `self` precedes `other` in code order, so it wins ties.
    fn merge(mut self, other: Extremes) -> Extremes {
        self.trees += other.trees;
        if let Some(b) = other.min {
            if self.min.as_ref().is_none_or(|a| b.0 < a.0) {
                self.min = Some(b);
            }
        }
        if let Some(b) = other.max {
            if self.max.as_ref().is_none_or(|a| b.0 > a.0) {
                self.max = Some(b);
            }
        }
        self
    }

    fn finish(self, family: String) -> Result<ExtremalResult, OracleError> {
        let (min_sigma, min_witness, min_degrees) = self.min.ok_or(OracleError::EmptyFamily)?;
        let (max_sigma, max_witness, max_degrees) = self.max.ok_or(OracleError::EmptyFamily)?;
        Ok(ExtremalResult {
            family,
            trees: self.trees,
            min_sigma,
            min_witness,
            min_degrees,
            max_sigma,
            max_witness,
            max_degrees,
        })
    }
}

/// Exact min and max σ over all labeled trees on `l` vertices.
pub fn extremal_sigma(l: usize, exec: Exec) -> Result<ExtremalResult, OracleError> {
    let family = TreeFamily::AllLabeled(vec![l]);
    let parts = fold_family(&family, exec, Extremes::default, |acc, t| {
        acc.observe(t.sigma(), t.code, t.degree)
    })?;
    parts.into_iter().fold(Extremes::default(), Extremes::merge).finish(family.to_string())
}

/// Min and max σ over the labeled trees realizing `d` (vertex `i` has degree `d_i`).
pub fn extremal_sigma_for_sequence(d: &DegreeSequence, exec: Exec) -> Result<ExtremalResult, OracleError> {
    if !d.tree_realizable()? {
        return Err(SequenceError::NotRealizable(d.entries().to_vec()).into());
    }
    let count = degseq::sequence_tree_count(d);
    if count.is_none_or(|c| c > MAX_SEQUENCE_TREES) {
        let count = count.map_or_else(|| "overflowing".to_string(), |c| c.to_string());
        return Err(OracleError::TooManyTrees { count, limit: MAX_SEQUENCE_TREES });
    }
    let l = d.len();
    let multiset = degseq::code_multiset(d);
    let mut firsts = multiset.clone();
    firsts.dedup();
    let parts: Vec<Option<usize>> =
        if multiset.is_empty() { vec![None] } else { firsts.into_iter().map(Some).collect() };
    let partials = map_partitions(parts, exec, |first| {
        let mut acc = Extremes::default();
        let mut edges = Vec::new();
        let mut degree = Vec::new();
        let mut rest = multiset.clone();
        if let Some(s) = first {
            let at = rest.iter().position(|&x| x == s).expect("symbol from multiset");
            rest.remove(at);
        }
        for tail in MultisetPermutations::new(rest) {
            let code: Vec<usize> = first.into_iter().chain(tail).collect();
            decode_into(&code, l, &mut edges, &mut degree);
            let t = TreeRef { code: &code, edges: &edges, degree: &degree };
            acc.observe(t.sigma(), &code, &degree);
        }
        acc
    });
    let family = format!("labeled trees with degree sequence {:?}", d.entries());
    partials.into_iter().fold(Extremes::default(), Extremes::merge).finish(family)
}

/// One audited instance kept as evidence.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub prufer: Vec<usize>,
    pub degrees: Vec<usize>,
    pub sigma: u64,
    pub value: Option<f64>,
    pub margin: f64,
}

/// 2×2 tally for equivalence claims: (window claim, √σ > n).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EquivTable {
    pub both_true: u64,
    pub window_only: u64,
    pub sigma_only: u64,
    pub both_false: u64,
}

impl EquivTable {
    fn add(&mut self, o: &EquivTable) {
        self.both_true += o.both_true;
        self.window_only += o.window_only;
        self.sigma_only += o.sigma_only;
        self.both_false += o.both_false;
    }
}

/// Tally of one claim over a tree family.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditReport {
    pub bound_id: String,
    pub family: String,
    pub instances: u64,
    pub holds: u64,
    pub violated: u64,
    pub undecidable: u64,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equiv_table: Option<EquivTable>,
    #[serde(skip_serializing_if = "is_zero")]
    pub near_ties: u64,
}

fn is_zero(v: &u64) -> bool {
    *v == 0
}

impl AuditReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn witness_order(a: &Witness, b: &Witness) -> Ordering {
    a.margin.total_cmp(&b.margin).then_with(|| a.prufer.cmp(&b.prufer))
}

fn closeness_order(a: &Witness, b: &Witness) -> Ordering {
    a.margin.abs().total_cmp(&b.margin.abs()).then_with(|| a.prufer.cmp(&b.prufer))
}

type TightWitnesses = (fn(&Witness, &Witness) -> Ordering, usize);

const BOUND_TIGHT: TightWitnesses = (witness_order, WITNESSES_PER_SIDE);
const SCAN_TIGHT: TightWitnesses = (closeness_order, 2 * WITNESSES_PER_SIDE);

/// Partial audit state for one partition.
#[derive(Clone, Debug, Default)]
struct Tally {
    instances: u64,
    holds: u64,
    violated: u64,
    undecidable: u64,
    near_ties: u64,
    violations: Vec<Witness>,
    tightest: Vec<Witness>,
    equiv: Option<EquivTable>,
}

fn keep_best(list: &mut Vec<Witness>, w: Witness, cmp: fn(&Witness, &Witness) -> Ordering, cap: usize) {
    if list.len() == cap && list.last().is_some_and(|worst| cmp(&w, worst) != Ordering::Less) {
        return;
    }
    let at = list.partition_point(|x| cmp(x, &w) == Ordering::Less);
    list.insert(at, w);
    list.truncate(cap);
}

impl Tally {
    /// Merges a later partition; `tight` orders and caps the non-violation witnesses.
    fn merge(mut self, other: Tally, tight: TightWitnesses) -> Tally {
        self.instances += other.instances;
        self.holds += other.holds;
        self.violated += other.violated;
        self.undecidable += other.undecidable;
        self.near_ties += other.near_ties;
        for w in other.violations {
            keep_best(&mut self.violations, w, witness_order, WITNESSES_PER_SIDE);
        }
        for w in other.tightest {
            keep_best(&mut self.tightest, w, tight.0, tight.1);
        }
        match (&mut self.equiv, other.equiv) {
            (Some(a), Some(b)) => a.add(&b),
            (None, b) => self.equiv = b,
            _ => {}
        }
        self
    }

    fn into_report(self, bound_id: &str, family: &TreeFamily) -> AuditReport {
        let mut witnesses = self.violations;
        witnesses.extend(self.tightest);
        AuditReport {
            bound_id: bound_id.to_string(),
            family: family.to_string(),
            instances: self.instances,
            holds: self.holds,
            violated: self.violated,
            undecidable: self.undecidable,
            witnesses,
            equiv_table: self.equiv,
            near_ties: self.near_ties,
        }
    }
}

/// Parameters fixed across an audit.
#[derive(Clone, Copy, Debug, Default)]
pub struct AuditParams {
    pub k: Option<i64>,
    pub eta: Option<u32>,
}

fn tree_context(spec: &BoundSpec, t: &TreeRef, params: AuditParams) -> Result<BoundContext, BoundError> {
    let g = t.graph();
    let needs = |f: Field| spec.needs.contains(&f);
    let overrides = Overrides {
        k: params.k,
        eta: params.eta,
        sigma: Some(t.sigma()),
        harmonic: needs(Field::Harmonic).then(|| indices::harmonic(&g)),
        forgotten: needs(Field::Forgotten).then(|| indices::forgotten(&g)),
        zagreb1: needs(Field::Zagreb1).then(|| indices::zagreb1(&g)),
    };
    BoundContext::from_entries(&t.sorted_degrees(), Convention::FullSequence, overrides)
}

/// Evaluates one registry entry on every tree of `family`, each under the
/// full-sequence convention with σ, F, M1 and H taken from the tree.
pub fn audit_bound(
    bound_id: &str,
    family: &TreeFamily,
    params: AuditParams,
    exec: Exec,
) -> Result<AuditReport, OracleError> {
    let spec = bounds::lookup(bound_id)?;
    let is_equiv = spec.direction == bounds::Direction::Equiv;
    let partials = fold_family(family, exec, Tally::default, |acc, t| {
        acc.instances += 1;
        let result = tree_context(&spec, t, params).and_then(|ctx| bounds::evaluate_spec(&spec, &ctx));
        let Ok(r) = result else {
            acc.undecidable += 1;
            return;
        };
        if r.near_tie {
            acc.near_ties += 1;
        }
        if let (true, Some((lhs, Some(rhs)))) = (is_equiv, r.equiv) {
            let table = acc.equiv.get_or_insert_with(EquivTable::default);
            match (lhs, rhs) {
                (true, true) => table.both_true += 1,
                (true, false) => table.window_only += 1,
                (false, true) => table.sigma_only += 1,
                (false, false) => table.both_false += 1,
            }
        }
        let Some(margin) = r.margin.as_ref().map(|m| m.to_f64()) else {
            acc.undecidable += 1;
            return;
        };
        let witness = Witness {
            prufer: t.code.to_vec(),
            degrees: t.sorted_degrees(),
            sigma: t.sigma(),
            value: r.value.as_ref().map(|v| v.to_f64()),
            margin,
        };
        match r.verdict {
            Verdict::Holds => {
                acc.holds += 1;
                keep_best(&mut acc.tightest, witness, witness_order, WITNESSES_PER_SIDE);
            }
            Verdict::Violated => {
                acc.violated += 1;
                keep_best(&mut acc.violations, witness, witness_order, WITNESSES_PER_SIDE);
            }
            Verdict::Undecidable => acc.undecidable += 1,
        }
    })?;
    let merged = partials.into_iter().fold(Tally::default(), |a, b| a.merge(b, BOUND_TIGHT));
    Ok(merged.into_report(spec.id, family))
}

/// Compares the degree-sequence σ formula with the true σ on every tree.
/// `holds` counts exact matches; witnesses are the closest instances,
/// matches first, with margin = formula − σ.
pub fn scan_thm23(family: &TreeFamily, exec: Exec) -> Result<AuditReport, OracleError> {
    let partials = fold_family(family, exec, Tally::default, |acc, t| {
        acc.instances += 1;
        let degrees = t.sorted_degrees();
        let sigma = t.sigma();
        let Ok(formula) = indices::thm23_formula(&degrees) else {
            acc.undecidable += 1;
            return;
        };
        let margin = formula as f64 - sigma as f64;
        if formula == sigma {
            acc.holds += 1;
        } else {
            acc.violated += 1;
        }
        let w = Witness { prufer: t.code.to_vec(), degrees, sigma, value: Some(formula as f64), margin };
        keep_best(&mut acc.tightest, w, SCAN_TIGHT.0, SCAN_TIGHT.1);
    })?;
    let merged = partials.into_iter().fold(Tally::default(), |a, b| a.merge(b, SCAN_TIGHT));
    Ok(merged.into_report("THM23", family))
}

/// Checks σ = F − 2·M2 on every tree; `violated` counts mismatches.
pub fn audit_identity(family: &TreeFamily, exec: Exec) -> Result<AuditReport, OracleError> {
    let partials = fold_family(family, exec, Tally::default, |acc, t| {
        acc.instances += 1;
        let g = t.graph();
        let direct = indices::compute_index(indices::IndexKind::Sigma, &g);
        let via = indices::sigma_via_identity(&g);
        if direct == via {
            acc.holds += 1;
        } else {
            acc.violated += 1;
            let w = Witness {
                prufer: t.code.to_vec(),
                degrees: t.sorted_degrees(),
                sigma: indices::sigma(&g),
                value: Some(via.to_f64()),
                margin: via.to_f64() - direct.to_f64(),
            };
            keep_best(&mut acc.violations, w, witness_order, WITNESSES_PER_SIDE);
        }
    })?;
    let merged = partials.into_iter().fold(Tally::default(), |a, b| a.merge(b, BOUND_TIGHT));
    Ok(merged.into_report("IDENTITY", family))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;
    use std::collections::HashSet;

    fn seq(v: &[i64]) -> DegreeSequence {
        DegreeSequence::validate(v).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled_trees(2).unwrap().count(), 1);
        assert_eq!(enumerate_labeled_trees(4).unwrap().count(), 16);
        assert_eq!(enumerate_labeled_trees(7).unwrap().count(), 16807);
        assert!(matches!(enumerate_labeled_trees(11), Err(OracleError::OutOfRange { .. })));
        assert!(matches!(enumerate_labeled_trees(1), Err(OracleError::OutOfRange { .. })));
    }

    #[test]
    fn enumerated_trees_are_distinct() {
        let edge_sets: HashSet<Vec<(usize, usize)>> = enumerate_labeled_trees(5)
            .unwrap()
            .map(|(_, g)| {
                let mut e: Vec<_> = g.edges().collect();
                e.sort();
                e
            })
            .collect();
        assert_eq!(edge_sets.len(), 125);
    }

    #[test]
    fn fold_matches_iterator() {
        let family = TreeFamily::AllLabeled(vec![6]);
        let counts = fold_family(&family, Exec::Sequential, || 0u64, |c, _| *c += 1).unwrap();
        assert_eq!(counts.len(), 6);
        assert_eq!(counts.iter().sum::<u64>(), 1296);
        let sigmas: Vec<u64> = fold_family(&family, Exec::Parallel, Vec::new, |v, t| v.push(t.sigma()))
            .unwrap()
            .concat();
        let direct: Vec<u64> =
            enumerate_labeled_trees(6).unwrap().map(|(_, g)| indices::sigma(&g)).collect();
        assert_eq!(sigmas, direct);
    }

    #[test]
    fn extremal_small_orders() {
        let r = extremal_sigma(4, Exec::Sequential).unwrap();
        assert_eq!((r.min_sigma, r.max_sigma), (2, 12));
        let r = extremal_sigma(2, Exec::Sequential).unwrap();
        assert_eq!((r.min_sigma, r.max_sigma), (0, 0));
        let r = extremal_sigma(7, Exec::Parallel).unwrap();
        assert_eq!((r.min_sigma, r.max_sigma, r.trees), (2, 150, 16807));
        assert_eq!(indices::sigma(&r.max_graph()), 150);
        assert_eq!(r.max_graph().sorted_degrees(), graph::star(6).sorted_degrees());
        assert_eq!(r.min_graph().sorted_degrees(), graph::path(7).sorted_degrees());
        assert_eq!(r.max_degrees, vec![6, 1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn extremal_for_sequences() {
        let r = extremal_sigma_for_sequence(&seq(&[3, 1, 1, 1]), Exec::Sequential).unwrap();
        assert_eq!((r.min_sigma, r.max_sigma, r.trees), (12, 12, 1));
        let r = extremal_sigma_for_sequence(&seq(&[2, 2, 1, 1]), Exec::Sequential).unwrap();
        assert_eq!((r.min_sigma, r.max_sigma, r.trees), (2, 2, 2));
        let r = extremal_sigma_for_sequence(&seq(&[3, 2, 1, 1, 1]), Exec::Parallel).unwrap();
        assert_eq!((r.min_sigma, r.max_sigma), (10, 10));
        let r = extremal_sigma_for_sequence(&seq(&[1, 1]), Exec::Sequential).unwrap();
        assert_eq!((r.min_sigma, r.max_sigma, r.trees), (0, 0, 1));
        assert!(matches!(
            extremal_sigma_for_sequence(&seq(&[2, 2, 2]), Exec::Sequential),
            Err(OracleError::Sequence(SequenceError::NotRealizable(_)))
        ));
        let mut big = vec![2i64; 14];
        big.extend([1, 1]);
        assert!(matches!(
            extremal_sigma_for_sequence(&seq(&big), Exec::Sequential),
            Err(OracleError::TooManyTrees { .. })
        ));
    }

    #[test]
    fn fixed_sequence_extremes_bracket_all_trees() {
        let d = seq(&[3, 3, 2, 1, 1, 1, 1]);
        let r = extremal_sigma_for_sequence(&d, Exec::Sequential).unwrap();
        let all: Vec<u64> = degseq::trees_with_sequence(&d).unwrap().map(|(_, g)| indices::sigma(&g)).collect();
        assert_eq!(r.min_sigma, *all.iter().min().unwrap());
        assert_eq!(r.max_sigma, *all.iter().max().unwrap());
        assert_eq!(r.trees as usize, all.len());
        assert!(r.min_sigma < r.max_sigma);
    }

    #[test]
    fn forgotten_bound_audit_has_no_violations() {
        let family = TreeFamily::all_labeled(4..=6);
        let r = audit_bound("B09", &family, AuditParams::default(), Exec::Parallel).unwrap();
        assert_eq!(r.violated, 0);
        assert_eq!(r.instances, 16 + 125 + 1296);
        assert_eq!(r.holds + r.violated + r.undecidable, r.instances);
    }

    #[test]
    fn b12_audit_on_path() {
        let family = TreeFamily::Paths(vec![20]);
        let params = AuditParams { k: Some(1), eta: None };
        let r = audit_bound("B12", &family, params, Exec::Sequential).unwrap();
        assert_eq!((r.instances, r.violated), (1, 1));
        assert_eq!(r.witnesses[0].value, Some(380.25));
        assert_eq!(r.witnesses[0].degrees.len(), 20);
    }

    #[test]
    fn equivalence_audit_tallies_truth_table() {
        let family = TreeFamily::all_labeled(4..=6);
        let r = audit_bound("B02", &family, AuditParams::default(), Exec::Sequential).unwrap();
        let t = r.equiv_table.clone().unwrap();
        assert_eq!(t.both_true + t.window_only + t.sigma_only + t.both_false, r.holds + r.violated);
        assert_eq!(r.holds, t.both_true + t.both_false);
        assert!(r.to_json().contains("\"equiv_table\""));
    }

    #[test]
    fn p2_is_undecidable_not_an_error() {
        let r = audit_bound("B12", &TreeFamily::AllLabeled(vec![2]), AuditParams::default(), Exec::Sequential)
            .unwrap();
        assert_eq!((r.instances, r.undecidable), (1, 1));
    }

    #[test]
    fn thm23_scan_small() {
        let r = scan_thm23(&TreeFamily::AllLabeled(vec![4]), Exec::Sequential).unwrap();
        assert_eq!(r.instances, 16);
        // P4: 14 vs 2; K_{1,3}: 22 vs 12
        assert_eq!(r.holds, 0);
        let p4 = r.witnesses.iter().find(|w| w.degrees == vec![2, 2, 1, 1]).unwrap();
        assert_eq!((p4.sigma, p4.value), (2, Some(14.0)));
    }

    #[test]
    fn identity_audit_small() {
        let r = audit_identity(&TreeFamily::all_labeled(2..=6), Exec::Parallel).unwrap();
        assert_eq!(r.violated, 0);
        assert_eq!(r.instances, 1 + 3 + 16 + 125 + 1296);
    }

    #[test]
    fn report_is_worker_independent() {
        let family = TreeFamily::all_labeled(5..=6);
        let one = audit_bound("B14", &family, AuditParams::default(), Exec::Sequential).unwrap();
        let many = audit_bound("B14", &family, AuditParams::default(), Exec::Threads(4)).unwrap();
        assert_eq!(one.to_json(), many.to_json());
        assert!(one.witnesses.len() <= 2 * WITNESSES_PER_SIDE);
    }

    #[test]
    fn family_descriptions() {
        assert_eq!(TreeFamily::all_labeled(4..=8).to_string(), "all labeled trees n=4..8");
        assert_eq!(TreeFamily::Paths(vec![20]).to_string(), "paths n=20");
        assert_eq!(TreeFamily::Stars(vec![3, 5]).to_string(), "stars n∈[3, 5]");
        assert!(matches!(
            fold_family(&TreeFamily::AllLabeled(vec![]), Exec::Sequential, || (), |_, _| ()),
            Err(OracleError::EmptyFamily)
        ));
    }
}
