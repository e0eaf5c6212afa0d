//! Verdicts for the known inequalities between λ_t, χ, χ_ℓ and n, and for the
//! two open conjectures, evaluated on computed tables.
//!
//! Every comparison is exact: both sides are kept as unreduced big-integer
//! fractions and compared by cross-multiplication. A verdict whose `proved`
//! flag is set concerns a statement with a proof, so its failure means the
//! computation is wrong; the others may legitimately fail.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::adversary::{lambda_table, AdversaryOptions, LambdaTable};
use crate::assignment::{restrict_assignment, ListAssignment, PartialColoring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rng::XorShift64;
use crate::solver::{lambda_of_assignment, max_partial_constant};

/// Every statement id a full report covers, in report order.
pub const CHECKLIST: &[&str] = &[
    "Conjecture1",
    "Conjecture2",
    "Theorem1",
    "Chappell",
    "Theorem2",
    "Corollary3.1",
    "Corollary3.2",
    "Corollary4",
    "Corollary5",
    "Corollary6",
    "Corollary7",
    "Corollary8.1",
    "Corollary8.2",
    "Theorem9.1",
    "Theorem9.2",
    "Theorem9.3",
    "Theorem9.4",
    "Lemma10",
    "Theorem11",
    "Theorem12",
    "Corollary13",
    "Theorem14.1",
    "Theorem14.2",
];

/// The statements that are open; all others carry proofs.
pub const CONJECTURES: &[&str] = &["Conjecture1", "Conjecture2"];

/// Exact fraction `num / den` with `den > 0`, kept unreduced so that the two
/// sides of a verdict show the quantities actually compared.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RatioWire", into = "RatioWire")]
pub struct Ratio {
    pub num: BigInt,
    pub den: BigInt,
}

impl Ratio {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Ratio {
        let den = den.into();
        assert!(den > BigInt::from(0), "denominator must be positive");
        Ratio { num: num.into(), den }
    }

    pub fn int(x: impl Into<BigInt>) -> Ratio {
        Ratio::new(x, 1)
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == BigInt::from(1) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

// integers outside i64 travel as decimal strings
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum WireInt {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for WireInt {
    fn from(x: &BigInt) -> Self {
        match i64::try_from(x) {
            Ok(v) => WireInt::Small(v),
            Err(_) => WireInt::Big(x.to_string()),
        }
    }
}

impl TryFrom<WireInt> for BigInt {
    type Error = String;
    fn try_from(w: WireInt) -> std::result::Result<Self, String> {
        match w {
            WireInt::Small(v) => Ok(v.into()),
            WireInt::Big(s) => s.parse().map_err(|_| format!("bad integer {s:?}")),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RatioWire {
    num: WireInt,
    den: WireInt,
}

impl From<Ratio> for RatioWire {
    fn from(r: Ratio) -> Self {
        RatioWire { num: (&r.num).into(), den: (&r.den).into() }
    }
}

impl TryFrom<RatioWire> for Ratio {
    type Error = String;
    fn try_from(w: RatioWire) -> std::result::Result<Self, String> {
        let num = BigInt::try_from(w.num)?;
        let den = BigInt::try_from(w.den)?;
        if den <= BigInt::from(0) {
            return Err("denominator must be positive".into());
        }
        Ok(Ratio { num, den })
    }
}

fn int(x: usize) -> BigInt {
    BigInt::from(x)
}

fn pow(x: usize, e: usize) -> BigInt {
    int(x).pow(e as u32)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    #[default]
    Ge,
    Gt,
}

/// `lhs >= rhs` or `lhs > rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub lhs: Ratio,
    pub rhs: Ratio,
    #[serde(default, skip_serializing_if = "is_ge")]
    pub relation: Relation,
}

fn is_ge(r: &Relation) -> bool {
    *r == Relation::Ge
}

impl Comparison {
    pub fn ge(lhs: Ratio, rhs: Ratio) -> Comparison {
        Comparison { lhs, rhs, relation: Relation::Ge }
    }

    /// The negation of `lhs >= rhs`, written as `rhs > lhs`.
    pub fn not_ge(lhs: Ratio, rhs: Ratio) -> Comparison {
        Comparison { lhs: rhs, rhs: lhs, relation: Relation::Gt }
    }

    pub fn holds(&self) -> bool {
        match self.relation {
            Relation::Ge => self.lhs >= self.rhs,
            Relation::Gt => self.lhs > self.rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Param {
    Int(u64),
    List(Vec<u64>),
    Text(String),
}

pub type Params = BTreeMap<String, Param>;

fn params(items: &[(&str, usize)]) -> Params {
    items.iter().map(|&(k, v)| (k.to_string(), Param::Int(v as u64))).collect()
}

fn vertex_list(s: VertexSet) -> Param {
    Param::List(s.iter().map(|v| v as u64).collect())
}

/// An assignment on some graph and a maximum partial coloring under it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub t: usize,
    pub assignment: ListAssignment,
    pub coloring: PartialColoring,
}

/// One checked inequality. It holds when the main comparison does or, for
/// disjunctions and implications, when any of the `or` comparisons does.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub statement: String,
    pub params: Params,
    pub holds: bool,
    pub proved: bool,
    pub lhs: Ratio,
    pub rhs: Ratio,
    #[serde(default, skip_serializing_if = "is_ge")]
    pub relation: Relation,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub or: Vec<Comparison>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<WitnessEntry>>,
}

impl Verdict {
    fn new(statement: &str, params: Params, main: Comparison, or: Vec<Comparison>) -> Verdict {
        let holds = main.holds() || or.iter().any(Comparison::holds);
        Verdict {
            statement: statement.to_string(),
            proved: !CONJECTURES.contains(&statement),
            params,
            holds,
            lhs: main.lhs,
            rhs: main.rhs,
            relation: main.relation,
            or,
            witness: None,
        }
    }

    fn ge(statement: &str, params: Params, lhs: Ratio, rhs: Ratio) -> Verdict {
        Verdict::new(statement, params, Comparison::ge(lhs, rhs), vec![])
    }

    fn param(&self, key: &str) -> Option<usize> {
        match self.params.get(key) {
            Some(Param::Int(v)) => Some(*v as usize),
            _ => None,
        }
    }

    /// A failure here means the computation, not the statement, is wrong.
    pub fn is_bug(&self) -> bool {
        !self.holds && self.proved
    }

    pub fn is_counterexample(&self) -> bool {
        !self.holds && !self.proved
    }

    /// The comparison that decided the verdict, as text.
    pub fn describe(&self) -> String {
        let mut s = format!("{} {:?}: {} >= {}", self.statement, self.params, self.lhs, self.rhs);
        if self.relation == Relation::Gt {
            s = s.replacen(">=", ">", 1);
        }
        for c in &self.or {
            let op = if c.relation == Relation::Gt { ">" } else { ">=" };
            s.push_str(&format!(" or {} {op} {}", c.lhs, c.rhs));
        }
        s
    }
}

fn agh(tab: &LambdaTable, t: usize) -> Comparison {
    Comparison::ge(Ratio::int(int(tab.lambda(t)) * tab.chi_l), Ratio::int(int(t) * tab.n))
}

fn not_agh(tab: &LambdaTable, t: usize) -> Comparison {
    let c = agh(tab, t);
    Comparison::not_ge(c.lhs, c.rhs)
}

fn ratio_of(tab: &LambdaTable, r: usize) -> Ratio {
    Ratio::new(int(tab.lambda(r)), int(r))
}

fn in_td(tab: &LambdaTable, r: usize, s: usize) -> Comparison {
    Comparison::ge(ratio_of(tab, r), ratio_of(tab, s))
}

/// λ_t χ_ℓ >= t n for every `0 <= t <= χ_ℓ`. Cases with t | χ_ℓ (and t = 0)
/// have proofs and are flagged as such.
pub fn check_agh(tab: &LambdaTable) -> Vec<Verdict> {
    (0..=tab.chi_l)
        .map(|t| {
            let mut v = Verdict::new("Conjecture1", params(&[("t", t)]), agh(tab, t), vec![]);
            v.proved = t == 0 || tab.chi_l.is_multiple_of(t);
            v
        })
        .collect()
}

fn partitions(m: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if m == 0 {
        out.push(prefix.clone());
        return;
    }
    for p in (1..=m.min(max_part)).rev() {
        prefix.push(p);
        partitions(m - p, p, prefix, out);
        prefix.pop();
    }
}

/// λ_r + λ_s >= λ_{r+s}, its k-fold form over every multiset of at least two
/// parts with sum at most χ_ℓ, and (s/r) λ_r >= λ_s for r | s.
pub fn check_triangle(tab: &LambdaTable) -> Vec<Verdict> {
    let c = tab.chi_l;
    let mut out = Vec::new();
    for r in 1..=c {
        for s in r..=c - r {
            out.push(Verdict::ge(
                "Theorem2",
                params(&[("r", r), ("s", s)]),
                Ratio::int(int(tab.lambda(r) + tab.lambda(s))),
                Ratio::int(int(tab.lambda(r + s))),
            ));
        }
    }
    for m in 2..=c {
        let mut parts = Vec::new();
        partitions(m, m - 1, &mut Vec::new(), &mut parts);
        for p in parts {
            let sum: usize = p.iter().map(|&r| tab.lambda(r)).sum();
            let mut ps = Params::new();
            ps.insert("parts".into(), Param::List(p.iter().map(|&x| x as u64).collect()));
            out.push(Verdict::ge("Corollary3.1", ps, Ratio::int(int(sum)), Ratio::int(int(tab.lambda(m)))));
        }
    }
    for r in 1..=c {
        for s in (2 * r..=c).step_by(r) {
            out.push(Verdict::ge("Corollary3.2", params(&[("r", r), ("s", s)]), ratio_of(tab, r), ratio_of(tab, s)));
        }
    }
    out
}

/// λ_r / r >= λ_s / s for `1 <= r <= s <= χ_ℓ`; the r | s cases are proved.
pub fn check_conjecture2(tab: &LambdaTable) -> Vec<Verdict> {
    let mut out = Vec::new();
    for r in 1..=tab.chi_l {
        for s in r..=tab.chi_l {
            let mut v = Verdict::new("Conjecture2", params(&[("r", r), ("s", s)]), in_td(tab, r, s), vec![]);
            v.proved = s % r == 0;
            out.push(v);
        }
    }
    out
}

/// The pairs `(r, s)`, `1 <= r <= s <= χ_ℓ`, with λ_r s >= λ_s r.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TdRelation {
    pub chi_l: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl TdRelation {
    pub fn contains(&self, r: usize, s: usize) -> bool {
        self.pairs.binary_search(&(r, s)).is_ok()
    }
}

/// Materializes Td and checks the four structural statements about it. The
/// order axioms are reported one verdict each, as (satisfied instances) >=
/// (instances).
pub fn compute_td(tab: &LambdaTable) -> (TdRelation, Vec<Verdict>) {
    let c = tab.chi_l;
    let mut pairs = Vec::new();
    for r in 1..=c {
        for s in r..=c {
            if in_td(tab, r, s).holds() {
                pairs.push((r, s));
            }
        }
    }
    let td = TdRelation { chi_l: c, pairs };
    let mut out = Vec::new();
    for s in 1..=c {
        for r in 1..s {
            out.push(Verdict::new(
                "Theorem9.1",
                params(&[("r", r), ("s", s)]),
                in_td(tab, r, s),
                vec![in_td(tab, s - r, s)],
            ));
            let r0 = s % r;
            if r0 > 0 {
                out.push(Verdict::new(
                    "Theorem9.2",
                    params(&[("r", r), ("s", s), ("k", s / r), ("r0", r0)]),
                    in_td(tab, r, s),
                    vec![in_td(tab, r0, s)],
                ));
            }
        }
        for r in 1..=s {
            out.push(Verdict::ge(
                "Theorem9.3",
                params(&[("r", r), ("s", s)]),
                Ratio::int(int(s.div_ceil(r) * tab.lambda(r))),
                Ratio::int(int(tab.lambda(s))),
            ));
        }
    }
    let member = |r: usize, s: usize| r <= s && td.contains(r, s);
    let axiom = |name: &str, good: usize, total: usize| {
        let mut ps = Params::new();
        ps.insert("axiom".into(), Param::Text(name.into()));
        Verdict::ge("Theorem9.4", ps, Ratio::int(int(good)), Ratio::int(int(total)))
    };
    let reflexive = (1..=c).filter(|&r| member(r, r)).count();
    out.push(axiom("reflexive", reflexive, c));
    let (mut good, mut total) = (0, 0);
    for r in 1..=c {
        for s in 1..=c {
            if r != s {
                total += 1;
                good += usize::from(!(member(r, s) && member(s, r)));
            }
        }
    }
    out.push(axiom("antisymmetric", good, total));
    let (mut good, mut total) = (0, 0);
    for &(r, s) in &td.pairs {
        for &(s2, u) in &td.pairs {
            if s2 == s {
                total += 1;
                good += usize::from(member(r, u));
            }
        }
    }
    out.push(axiom("transitive", good, total));
    (td, out)
}

/// The general lower bounds: λ_t χ^t >= (χ^t - (χ-1)^t) n, 7 λ_t χ_ℓ >= 6 t n,
/// λ_r ⌈χ_ℓ/r⌉ >= n, and λ_t χ_ℓ >= t n for t | χ_ℓ.
pub fn check_lower_bounds(tab: &LambdaTable) -> Vec<Verdict> {
    let (n, c, chi) = (tab.n, tab.chi_l, tab.chi);
    let mut out = Vec::new();
    for t in 0..=c {
        let l = tab.lambda(t);
        out.push(Verdict::ge(
            "Theorem1",
            params(&[("t", t)]),
            Ratio::int(int(l) * pow(chi, t)),
            Ratio::int((pow(chi, t) - pow(chi.saturating_sub(1), t)) * n),
        ));
    }
    for t in 0..=c {
        out.push(Verdict::ge(
            "Chappell",
            params(&[("t", t)]),
            Ratio::int(int(7 * tab.lambda(t) * c)),
            Ratio::int(int(6 * t * n)),
        ));
    }
    for r in 1..=c {
        out.push(Verdict::ge(
            "Corollary7",
            params(&[("r", r)]),
            Ratio::int(int(tab.lambda(r) * c.div_ceil(r))),
            Ratio::int(int(n)),
        ));
    }
    for t in (1..=c).filter(|t| c % t == 0) {
        let a = agh(tab, t);
        out.push(Verdict::ge("Corollary4", params(&[("t", t)]), a.lhs, a.rhs));
    }
    out
}

/// The statements that pin the conjecture down on part of the range: it
/// holds for r or χ_ℓ - r, for r or the remainder r0 of χ_ℓ mod r, and it
/// descends from s to r (r | s) or to r or r0 (s = k r + r0).
pub fn check_agh_consequences(tab: &LambdaTable) -> Vec<Verdict> {
    let c = tab.chi_l;
    let mut out = Vec::new();
    for r in 1..=c {
        out.push(Verdict::new("Corollary5", params(&[("r", r)]), agh(tab, r), vec![agh(tab, c - r)]));
        let r0 = c % r;
        out.push(Verdict::new(
            "Corollary6",
            params(&[("r", r), ("k", c / r), ("r0", r0)]),
            agh(tab, r),
            vec![agh(tab, r0)],
        ));
    }
    for s in 1..=c {
        for r in 1..=s {
            let r0 = s % r;
            if r0 == 0 {
                out.push(Verdict::new(
                    "Corollary8.1",
                    params(&[("r", r), ("s", s)]),
                    agh(tab, r),
                    vec![not_agh(tab, s)],
                ));
            }
            out.push(Verdict::new(
                "Corollary8.2",
                params(&[("r", r), ("s", s), ("k", s / r), ("r0", r0)]),
                agh(tab, r),
                vec![agh(tab, r0), not_agh(tab, s)],
            ));
        }
    }
    out
}

fn random_assignment(g: &Graph, t: usize, palette: usize, rng: &mut XorShift64) -> Result<ListAssignment> {
    let lists = (0..g.n())
        .map(|_| {
            let mut m = 0u64;
            while (m.count_ones() as usize) < t {
                m |= 1 << rng.below(palette as u64);
            }
            m
        })
        .collect();
    ListAssignment::new(g, lists, palette)
}

fn random_subset(n: usize, rng: &mut XorShift64) -> VertexSet {
    loop {
        let s = VertexSet(rng.next_u64() & VertexSet::full(n).0);
        if !s.is_empty() {
            return s;
        }
    }
}

fn entry(g: &Graph, t: usize, l: &ListAssignment) -> Result<WitnessEntry> {
    Ok(WitnessEntry { t, assignment: l.clone(), coloring: lambda_of_assignment(g, l)?.witness })
}

/// λ_L(G) >= λ_{L|S}(G[S]) on `samples` seeded pairs of a random
/// t-assignment (t from 1 to χ_ℓ, palette t + n) and a random vertex set.
pub fn check_lemma10(g: &Graph, tab: &LambdaTable, samples: usize, seed: u64) -> Result<Vec<Verdict>> {
    let n = g.n();
    let mut rng = XorShift64::new(seed);
    let mut out = Vec::with_capacity(samples);
    for i in 0..samples {
        let t = 1 + rng.below(tab.chi_l.max(1) as u64) as usize;
        let palette = (t + n).min(64);
        let l = random_assignment(g, t, palette, &mut rng)?;
        let s = random_subset(n, &mut rng);
        let (h, lh, _) = restrict_assignment(g, &l, s)?;
        let whole = lambda_of_assignment(g, &l)?;
        let part = lambda_of_assignment(&h, &lh)?;
        let mut ps = params(&[("sample", i), ("t", t)]);
        ps.insert("subset".into(), vertex_list(s));
        let mut v = Verdict::ge("Lemma10", ps, Ratio::int(int(whole.value)), Ratio::int(int(part.value)));
        if !v.holds {
            v.witness = Some(vec![
                WitnessEntry { t, assignment: l, coloring: whole.witness },
                WitnessEntry { t, assignment: lh, coloring: part.witness },
            ]);
        }
        out.push(v);
    }
    Ok(out)
}

/// Where induced subgraphs get their tables from.
pub trait TableSource {
    fn table(&mut self, g: &Graph) -> Result<LambdaTable>;
}

/// Computes tables directly, memoized by graph6 string.
pub struct MemoTables {
    pub opts: AdversaryOptions,
    memo: HashMap<String, LambdaTable>,
}

impl MemoTables {
    pub fn new(opts: AdversaryOptions) -> Self {
        MemoTables { opts, memo: HashMap::new() }
    }
}

impl TableSource for MemoTables {
    fn table(&mut self, g: &Graph) -> Result<LambdaTable> {
        let key = g.to_graph6();
        if let Some(t) = self.memo.get(&key) {
            return Ok(t.clone());
        }
        let t = lambda_table(g, &self.opts)?;
        self.memo.insert(key, t.clone());
        Ok(t)
    }
}

/// λ_t(G) >= λ_t(H) for each sampled induced H and each `1 <= t <= χ_ℓ(H)`.
pub fn check_theorem11(
    g: &Graph,
    tab: &LambdaTable,
    sample: &[VertexSet],
    tables: &mut dyn TableSource,
) -> Result<Vec<Verdict>> {
    let mut out = Vec::new();
    for &s in sample {
        let (h, _) = g.induced_subgraph(s)?;
        let th = tables.table(&h)?;
        for t in 1..=th.chi_l {
            let mut ps = params(&[("t", t)]);
            ps.insert("subset".into(), vertex_list(s));
            let mut v = Verdict::ge("Theorem11", ps, Ratio::int(int(tab.lambda(t))), Ratio::int(int(th.lambda(t))));
            if !v.holds {
                v.witness = Some(vec![entry(g, t, &tab.witnesses[t])?, entry(&h, t, &th.witnesses[t])?]);
            }
            out.push(v);
        }
    }
    Ok(out)
}

/// λ_r s^r >= (s^r - (s-1)^r) λ_{L_s}, where L_s gives every vertex the
/// same s colors, and the same with λ_s in place of λ_{L_s}.
pub fn check_theorem12(g: &Graph, tab: &LambdaTable, r: usize, s: usize) -> Result<Vec<Verdict>> {
    if !(1 <= r && r <= s && s <= tab.chi_l) {
        return Err(Error::InvalidArgument(format!("need 1 <= r <= s <= chi_l = {} (r = {r}, s = {s})", tab.chi_l)));
    }
    let constant = max_partial_constant(g, s).value;
    let lhs = Ratio::int(int(tab.lambda(r)) * pow(s, r));
    let factor = pow(s, r) - pow(s - 1, r);
    let ps = || params(&[("r", r), ("s", s)]);
    Ok(vec![
        Verdict::ge("Theorem12", ps(), lhs.clone(), Ratio::int(&factor * constant)),
        Verdict::ge("Corollary13", ps(), lhs, Ratio::int(factor * tab.lambda(s))),
    ])
}

/// Induced subgraphs examined exhaustively by [`check_theorem14`] part 1
/// only up to this order unless the caps are lifted.
pub const THEOREM14_PART1_MAX_VERTICES: usize = 7;

/// Part 1: the largest induced H with χ_ℓ(H) = t has at most λ_t(G)
/// vertices. Part 2: the vertices colored by a maximum coloring under the
/// minimizing t-assignment induce a subgraph with χ_ℓ >= t.
pub fn check_theorem14(
    g: &Graph,
    tab: &LambdaTable,
    t: usize,
    tables: &mut dyn TableSource,
    part1: bool,
) -> Result<Vec<Verdict>> {
    if !(1 <= t && t <= tab.chi_l) {
        return Err(Error::InvalidArgument(format!("need 1 <= t <= chi_l = {} (t = {t})", tab.chi_l)));
    }
    let mut out = Vec::new();
    if part1 {
        let n = g.n();
        let mut best: Option<VertexSet> = None;
        for m in 1..(1u64 << n) {
            let s = VertexSet(m);
            if best.is_some_and(|b| b.len() >= s.len()) {
                continue;
            }
            let (h, _) = g.induced_subgraph(s)?;
            if tables.table(&h)?.chi_l == t {
                best = Some(s);
            }
        }
        let size = best.map_or(0, |b| b.len());
        let mut ps = params(&[("t", t)]);
        ps.insert("subset".into(), vertex_list(best.unwrap_or(VertexSet::EMPTY)));
        let mut v = Verdict::ge("Theorem14.1", ps, Ratio::int(int(tab.lambda(t))), Ratio::int(int(size)));
        if !v.holds {
            v.witness = Some(vec![entry(g, t, &tab.witnesses[t])?]);
        }
        out.push(v);
    }
    let l = &tab.witnesses[t];
    let coloring = lambda_of_assignment(g, l)?.witness;
    let colored = coloring.colored_set();
    let (h, _) = g.induced_subgraph(colored)?;
    let th = tables.table(&h)?;
    let mut ps = params(&[("t", t)]);
    ps.insert("subset".into(), vertex_list(colored));
    let mut v = Verdict::ge("Theorem14.2", ps, Ratio::int(int(th.chi_l)), Ratio::int(int(t)));
    if !v.holds {
        v.witness = Some(vec![
            WitnessEntry { t, assignment: l.clone(), coloring },
            entry(&h, th.chi_l, &th.witnesses[th.chi_l])?,
        ]);
    }
    out.push(v);
    Ok(out)
}

/// Which checks run and with what sampling.
#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub lemma10_samples: usize,
    /// Induced subgraphs sampled for the "Theorem11" checks when G is too large to take
    /// them all.
    pub theorem11_samples: usize,
    pub seed: u64,
    /// Largest order on which every induced subgraph is examined.
    pub exhaustive_max_vertices: usize,
    /// Statement ids to evaluate; `None` runs the whole checklist.
    pub statements: Option<Vec<String>>,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            lemma10_samples: 24,
            theorem11_samples: 16,
            seed: 0,
            exhaustive_max_vertices: THEOREM14_PART1_MAX_VERTICES,
            statements: None,
        }
    }
}

impl CheckConfig {
    pub fn conjectures_only(mut self) -> Self {
        self.statements = Some(CONJECTURES.iter().map(|s| s.to_string()).collect());
        self
    }

    pub fn wants(&self, statement: &str) -> bool {
        self.statements.as_ref().is_none_or(|f| f.iter().any(|s| s == statement))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub checked: usize,
    pub held: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skip {
    pub statement: String,
    pub reason: String,
}

/// Every verdict for one graph, with per-statement counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub graph: String,
    pub table: LambdaTable,
    pub td: TdRelation,
    pub verdicts: Vec<Verdict>,
    pub summary: BTreeMap<String, Tally>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<Skip>,
}

impl ConjectureReport {
    pub fn bugs(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| v.is_bug())
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| v.is_counterexample())
    }
}

fn attach_table_witnesses(g: &Graph, tab: &LambdaTable, v: &mut Verdict) -> Result<()> {
    if v.holds || v.witness.is_some() {
        return Ok(());
    }
    let mut ts: Vec<usize> = ["t", "r", "s", "r0"].iter().filter_map(|k| v.param(k)).collect();
    if let Some(Param::List(parts)) = v.params.get("parts") {
        ts.extend(parts.iter().map(|&p| p as usize));
        ts.push(parts.iter().sum::<u64>() as usize);
    }
    ts.retain(|&t| t <= tab.chi_l);
    ts.sort_unstable();
    ts.dedup();
    v.witness = Some(ts.into_iter().map(|t| entry(g, t, &tab.witnesses[t])).collect::<Result<_>>()?);
    Ok(())
}

/// Runs the checklist on one graph and its table.
pub fn check_all(
    g: &Graph,
    tab: &LambdaTable,
    cfg: &CheckConfig,
    tables: &mut dyn TableSource,
) -> Result<ConjectureReport> {
    if tab.graph != g.to_graph6() {
        return Err(Error::GraphMismatch { graph: g.to_graph6(), assignment: tab.graph.clone() });
    }
    let n = g.n();
    let mut verdicts = Vec::new();
    let mut skipped = Vec::new();
    verdicts.extend(check_agh(tab));
    verdicts.extend(check_conjecture2(tab));
    verdicts.extend(check_lower_bounds(tab));
    verdicts.extend(check_triangle(tab));
    verdicts.extend(check_agh_consequences(tab));
    let (td, td_verdicts) = compute_td(tab);
    verdicts.extend(td_verdicts);
    if cfg.wants("Lemma10") {
        verdicts.extend(check_lemma10(g, tab, cfg.lemma10_samples, cfg.seed)?);
    }
    let exhaustive = n <= cfg.exhaustive_max_vertices;
    if cfg.wants("Theorem11") {
        let sample: Vec<VertexSet> = if exhaustive {
            (1..1u64 << n).map(VertexSet).collect()
        } else {
            let mut rng = XorShift64::new(cfg.seed ^ 0x0007_4311);
            (0..cfg.theorem11_samples).map(|_| random_subset(n, &mut rng)).collect()
        };
        match check_theorem11(g, tab, &sample, tables) {
            Ok(v) => verdicts.extend(v),
            Err(e @ Error::TooLarge(_)) => skipped.push(Skip { statement: "Theorem11".into(), reason: e.to_string() }),
            Err(e) => return Err(e),
        }
    }
    if cfg.wants("Theorem12") || cfg.wants("Corollary13") {
        for s in 1..=tab.chi_l {
            for r in 1..=s {
                verdicts.extend(check_theorem12(g, tab, r, s)?);
            }
        }
    }
    if cfg.wants("Theorem14.1") || cfg.wants("Theorem14.2") {
        if !exhaustive {
            skipped.push(Skip {
                statement: "Theorem14.1".into(),
                reason: format!("{n} vertices exceeds the exhaustive limit {}", cfg.exhaustive_max_vertices),
            });
        }
        for t in 1..=tab.chi_l {
            match check_theorem14(g, tab, t, tables, exhaustive) {
                Ok(v) => verdicts.extend(v),
                Err(e @ Error::TooLarge(_)) => {
                    skipped.push(Skip { statement: "Theorem14".into(), reason: e.to_string() });
                    break;
                }
                Err(e) => return Err(e),
            }
        }
    }
    verdicts.retain(|v| cfg.wants(&v.statement));
    for v in &mut verdicts {
        attach_table_witnesses(g, tab, v)?;
    }
    let mut summary: BTreeMap<String, Tally> =
        CHECKLIST.iter().filter(|s| cfg.wants(s)).map(|s| (s.to_string(), Tally::default())).collect();
    for v in &verdicts {
        let e = summary.entry(v.statement.clone()).or_default();
        e.checked += 1;
        if v.holds {
            e.held += 1;
        } else {
            e.failed += 1;
        }
    }
    Ok(ConjectureReport { graph: g.to_graph6(), table: tab.clone(), td, verdicts, summary, skipped })
}
