//! The adversary's side: minimizing λ_L over all t-uniform list assignments.
//!
//! Two assignments that differ by a renaming of colors have the same λ_L, so
//! only one representative per renaming class is visited. Vertices are
//! processed in a fixed order (descending degree, then index). The colors
//! seen so far form an ordered partition into *cells*: colors that have so far
//! appeared in exactly the same lists, occupying a contiguous block of labels.
//! A list is canonical when, inside every cell, it takes the lowest labels of
//! the block, and its brand-new colors are the next unused labels. That rule
//! is the lexicographically least image of the assignment under renaming, so
//! every class is emitted exactly once, and the choices at one vertex are
//! generated directly (no rejection). Choices are ordered by colex rank of
//! the list, so the first class is the constant assignment `{0..t-1}`.
//!
//! The minimum search walks the same tree and prunes with the value of the
//! prefix: if the lists fixed so far already let `best` vertices of the
//! prefix be colored, no completion can do better than `best`. On top of
//! that, vertices with fewer than `t` neighbors are peeled off first (they
//! can always be colored last), and when the palette is unrestricted only
//! *tight* assignments are searched, where every color of every list also
//! appears in some neighbor's list. A non-tight assignment has a vertex `v`
//! that can always be colored, so its value is `1 + λ_L(G - v) >= 1 +
//! λ_t(G - v)`, which is itself attained; that term is computed recursively.
//! Searches stop early on reaching the greedy lower bound: every induced
//! `(t-1)`-degenerate subgraph is colorable from any t-lists.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::assignment::{ListAssignment, MAX_PALETTE};
use crate::error::{Error, Result};
use crate::graph::{Bits, Graph, VertexSet};
use crate::solver::{
    alon_tarsi_certifies, chromatic_number, independence_number, lambda_of_assignment, lambda_of_assignment_oracle,
    MaxColoring,
};

/// Size limits for the exponential searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub max_vertices: usize,
    pub max_t: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_vertices: 10, max_t: 4 }
    }
}

impl Caps {
    pub fn unlimited() -> Self {
        Caps { max_vertices: 64, max_t: 64 }
    }

    fn check(&self, n: usize, t: usize) -> Result<()> {
        if n > self.max_vertices || t > self.max_t {
            return Err(Error::TooLarge(format!(
                "adversary search on {n} vertices with lists of size {t} exceeds the caps \
                 (n <= {}, t <= {}); the running time is exponential in both, pass \
                 --unsafe-caps to lift the limits",
                self.max_vertices, self.max_t
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct AdversaryOptions {
    pub caps: Caps,
    /// Palette bound override. Below `n * t` results may overestimate λ_t.
    pub palette: Option<usize>,
    /// Split the top-level search across the rayon pool.
    pub parallel: bool,
    /// Skip the Alon-Tarsi shortcut (for cross-checking the search).
    pub no_certificate: bool,
}

/// λ_t together with a minimizing assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdversaryResult {
    pub value: usize,
    pub witness: ListAssignment,
    /// Complete assignments evaluated.
    pub classes: u64,
    /// Subtrees cut off.
    pub pruned: u64,
    /// Induced subgraphs settled by the Alon-Tarsi certificate.
    pub certified: u64,
    pub palette: usize,
    pub palette_limited: bool,
}

/// Processing order: descending degree inside `mask`, then ascending index.
pub fn vertex_order(g: &Graph, mask: VertexSet) -> Vec<usize> {
    let mut order: Vec<usize> = mask.iter().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse((g.adjacency()[v] & mask.0).count_ones()), v));
    order
}

/// Ordered partition of the labels used so far into contiguous cells.
#[derive(Clone, Debug, Default)]
struct Cells {
    blocks: Vec<(u8, u8)>,
    used: usize,
}

/// Canonical lists for the next vertex, in colex order, each with the
/// refined cells it leads to.
fn canonical_choices(cells: &Cells, t: usize, palette: usize) -> Vec<(u64, Cells)> {
    fn go(
        cells: &Cells,
        i: usize,
        left: usize,
        palette: usize,
        mask: u64,
        blocks: &mut Vec<(u8, u8)>,
        out: &mut Vec<(u64, Cells)>,
    ) {
        if i == cells.blocks.len() {
            let used = cells.used + left;
            if used > palette {
                return;
            }
            let fresh = low_bits(left) << cells.used;
            let mut blocks = blocks.clone();
            if left > 0 {
                blocks.push((cells.used as u8, left as u8));
            }
            out.push((mask | fresh, Cells { blocks, used }));
            return;
        }
        let (start, len) = cells.blocks[i];
        for k in 0..=left.min(len as usize) {
            let k8 = k as u8;
            let taken = low_bits(k) << start;
            let before = blocks.len();
            if k > 0 {
                blocks.push((start, k8));
            }
            if k8 < len {
                blocks.push((start + k8, len - k8));
            }
            go(cells, i + 1, left - k, palette, mask | taken, blocks, out);
            blocks.truncate(before);
        }
    }
    let mut out = Vec::new();
    go(cells, 0, t, palette, 0, &mut Vec::with_capacity(cells.blocks.len() + 2), &mut out);
    out.sort_unstable_by_key(|(m, _)| *m);
    out
}

/// Relabels an assignment (lists indexed by vertex) to the representative of
/// its renaming class, scanning vertices in `order`.
pub(crate) fn canonical_lists(order: &[usize], lists: &[u64]) -> Vec<u64> {
    let mut cells: Vec<u64> = Vec::new();
    for &v in order {
        let l = lists[v];
        let mut next = Vec::with_capacity(cells.len() + 1);
        let mut seen = 0u64;
        for &c in &cells {
            seen |= c;
            if c & l != 0 {
                next.push(c & l);
            }
            if c & !l != 0 {
                next.push(c & !l);
            }
        }
        if l & !seen != 0 {
            next.push(l & !seen);
        }
        cells = next;
    }
    let mut label = [0u8; 64];
    let mut k = 0;
    for c in &cells {
        for color in Bits(*c) {
            label[color] = k;
            k += 1;
        }
    }
    lists.iter().map(|&l| Bits(l).fold(0u64, |m, c| m | 1u64 << label[c])).collect()
}

/// Streams one representative of every renaming class of t-uniform
/// assignments over the palette `0..p`.
pub struct CanonicalAssignments {
    graph: Graph,
    order: Vec<usize>,
    t: usize,
    palette: usize,
    lists: Vec<u64>,
    stack: Vec<(Vec<(u64, Cells)>, usize)>,
    started: bool,
}

impl CanonicalAssignments {
    pub fn order(&self) -> &[usize] {
        &self.order
    }
}

impl Iterator for CanonicalAssignments {
    type Item = ListAssignment;

    fn next(&mut self) -> Option<ListAssignment> {
        let n = self.order.len();
        if !self.started {
            self.started = true;
            self.stack.push((canonical_choices(&Cells::default(), self.t, self.palette), 0));
        } else {
            // advance past the last emitted leaf
            if let Some(top) = self.stack.last_mut() {
                top.1 += 1;
            }
        }
        loop {
            let depth = self.stack.len();
            let (choices, idx) = self.stack.last_mut()?;
            if *idx >= choices.len() {
                self.lists[self.order[depth - 1]] = 0;
                self.stack.pop();
                if let Some(top) = self.stack.last_mut() {
                    top.1 += 1;
                }
                continue;
            }
            let (mask, cells) = &choices[*idx];
            self.lists[self.order[depth - 1]] = *mask;
            if depth == n {
                return Some(
                    ListAssignment::new(&self.graph, self.lists.clone(), self.palette)
                        .expect("canonical lists are valid"),
                );
            }
            let next = canonical_choices(cells, self.t, self.palette);
            self.stack.push((next, 0));
        }
    }
}

/// All renaming classes of t-uniform assignments with colors in `0..p`.
pub fn enumerate_canonical_assignments(g: &Graph, t: usize, p: usize, caps: &Caps) -> Result<CanonicalAssignments> {
    if t == 0 {
        return Err(Error::InvalidArgument("list size must be at least 1".into()));
    }
    if p < t || p > MAX_PALETTE {
        return Err(Error::InvalidArgument(format!("palette {p} must lie in {t}..=64")));
    }
    caps.check(g.n(), t)?;
    Ok(CanonicalAssignments {
        graph: g.clone(),
        order: vertex_order(g, g.vertices()),
        t,
        palette: p,
        lists: vec![0; g.n()],
        stack: Vec::new(),
        started: false,
    })
}

fn low_bits(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

fn pack(value: usize, branch: usize) -> u64 {
    (value as u64) << 32 | branch as u64
}

fn unpack(x: u64) -> (usize, usize) {
    ((x >> 32) as usize, (x & 0xFFFF_FFFF) as usize)
}

/// Largest induced subgraph of `G[mask]` whose degeneracy is below `t`.
fn degenerate_lower_bound(g: &Graph, mask: u64, t: usize) -> usize {
    if t == 0 {
        return 0;
    }
    let k = mask.count_ones();
    if k > 16 {
        // peel greedily: drop a max-degree vertex until the rest is (t-1)-degenerate
        let mut s = mask;
        while g.degeneracy_within(VertexSet(s)) >= t {
            let v = Bits(s).max_by_key(|&v| ((g.adjacency()[v] & s).count_ones(), v)).unwrap();
            s &= !(1 << v);
        }
        return s.count_ones() as usize;
    }
    let bits: Vec<usize> = Bits(mask).collect();
    let mut best = 0;
    for sub in 0u64..(1u64 << k) {
        let size = sub.count_ones() as usize;
        if size <= best {
            continue;
        }
        let s = bits.iter().enumerate().fold(0u64, |m, (i, &v)| m | (sub >> i & 1) << v);
        if g.degeneracy_within(VertexSet(s)) < t {
            best = size;
        }
    }
    best
}

/// One branch of the minimum search over a fixed vertex subset.
#[derive(Clone)]
struct MinSearch<'a> {
    g: &'a Graph,
    mask: u64,
    order: Vec<usize>,
    coloring_order: Vec<usize>,
    t: usize,
    palette: usize,
    tight: bool,
    lower: usize,
    lists: Vec<u64>,
    best: usize,
    witness: Option<Vec<u64>>,
    branch: usize,
    global: &'a AtomicU64,
    stop: bool,
    classes: u64,
    pruned: u64,
}

impl MinSearch<'_> {
    fn cut(&self, value: usize) -> bool {
        if value >= self.best {
            return true;
        }
        let (gv, gb) = unpack(self.global.load(Ordering::Relaxed));
        value > gv || (value == gv && gb < self.branch)
    }

    fn aborted(&self) -> bool {
        if self.stop {
            return true;
        }
        let (gv, gb) = unpack(self.global.load(Ordering::Relaxed));
        gv <= self.lower && gb < self.branch
    }

    /// Tightness is still reachable after fixing the list of `u`.
    fn tight_ok(&self, u: usize, assigned: u64) -> bool {
        let adj = self.g.adjacency();
        let check = |w: usize| {
            let nbrs = adj[w] & self.mask;
            let cover = Bits(nbrs & assigned).fold(0u64, |m, x| m | self.lists[x]);
            let uncovered = (self.lists[w] & !cover).count_ones() as usize;
            uncovered <= self.t * (nbrs & !assigned).count_ones() as usize
        };
        check(u) && Bits(adj[u] & assigned).all(check)
    }

    fn prefix_value(&mut self, prev: usize) -> usize {
        let search =
            MaxColoring::new(self.g.adjacency(), &self.lists, &self.coloring_order).above(prev).stop_at(prev + 1).run();
        if search.best > prev {
            prev + 1
        } else {
            prev
        }
    }

    /// Handles the child where `order[d]` gets `list`.
    fn visit(&mut self, d: usize, list: u64, cells: &Cells, prev: usize, assigned: u64) {
        let u = self.order[d];
        self.lists[u] = list;
        let assigned = assigned | 1 << u;
        if self.tight && !self.tight_ok(u, assigned) {
            self.pruned += 1;
        } else {
            let value = self.prefix_value(prev);
            if self.cut(value) {
                self.pruned += 1;
            } else if d + 1 == self.order.len() {
                self.classes += 1;
                self.best = value;
                self.witness = Some(self.lists.clone());
                self.global.fetch_min(pack(value, self.branch), Ordering::Relaxed);
                if value <= self.lower {
                    self.stop = true;
                }
            } else {
                self.dfs(d + 1, cells, value, assigned);
            }
        }
        self.lists[u] = 0;
    }

    fn dfs(&mut self, d: usize, cells: &Cells, prev: usize, assigned: u64) {
        for (list, next) in canonical_choices(cells, self.t, self.palette) {
            if self.aborted() {
                return;
            }
            self.visit(d, list, &next, prev, assigned);
        }
    }
}

struct SearchOutcome {
    value: usize,
    lists: Vec<u64>,
    classes: u64,
    pruned: u64,
}

/// Minimizes over the classes of `G[mask]`, starting from the constant
/// assignment (value `upper`). Branches on the list of the second vertex.
#[allow(clippy::too_many_arguments)]
fn search_classes(
    g: &Graph,
    mask: u64,
    t: usize,
    palette: usize,
    tight: bool,
    lower: usize,
    upper: usize,
    constant: Vec<u64>,
    parallel: bool,
) -> SearchOutcome {
    let global = AtomicU64::new(pack(upper, 0));
    let order = vertex_order(g, VertexSet(mask));
    let template = MinSearch {
        g,
        mask,
        coloring_order: g.degeneracy_order_within(VertexSet(mask)),
        order,
        t,
        palette,
        tight,
        lower,
        lists: vec![0; g.n()],
        best: upper,
        witness: None,
        branch: 0,
        global: &global,
        stop: false,
        classes: 0,
        pruned: 0,
    };
    let mut results: Vec<MinSearch> = Vec::new();
    let first = canonical_choices(&Cells::default(), t, palette);
    debug_assert_eq!(first.len(), 1);
    let (list0, cells0) = &first[0];
    let v0 = template.order[0];
    if template.order.len() < 2 {
        let mut s = template.clone();
        s.visit(0, *list0, cells0, 0, 0);
        results.push(s);
    } else {
        let mut root = template.clone();
        root.lists[v0] = *list0;
        let assigned = 1u64 << v0;
        let branches = canonical_choices(cells0, t, palette);
        let run = |(i, (list, cells)): (usize, &(u64, Cells))| {
            let mut s = root.clone();
            s.branch = i;
            if i > 0 {
                s.best = usize::MAX;
            }
            if !s.aborted() {
                s.visit(1, *list, cells, 1, assigned);
            }
            s
        };
        results = if parallel {
            branches.par_iter().enumerate().map(run).collect()
        } else {
            branches.iter().enumerate().map(run).collect()
        };
    }
    let classes = results.iter().map(|s| s.classes).sum();
    let pruned = results.iter().map(|s| s.pruned).sum();
    let winner = results
        .into_iter()
        .filter_map(|s| s.witness.map(|w| (s.best, s.branch, w)))
        .filter(|(v, _, _)| *v < upper)
        .min_by_key(|(v, b, _)| (*v, *b));
    match winner {
        Some((value, _, lists)) => SearchOutcome { value, lists, classes, pruned },
        None => SearchOutcome { value: upper, lists: constant, classes, pruned },
    }
}

/// Memoized λ_t over induced subgraphs of one graph.
struct Adversary<'a> {
    g: &'a Graph,
    t: usize,
    palette: usize,
    tight: bool,
    parallel_mask: Option<u64>,
    certify: bool,
    memo: HashMap<u64, (usize, Vec<u64>)>,
    lower: HashMap<u64, usize>,
    classes: u64,
    pruned: u64,
    certified: u64,
}

impl Adversary<'_> {
    fn full_list(&self) -> u64 {
        low_bits(self.t)
    }

    fn lower_bound(&mut self, mask: u64) -> usize {
        if let Some(&b) = self.lower.get(&mask) {
            return b;
        }
        let b = degenerate_lower_bound(self.g, mask, self.t);
        self.lower.insert(mask, b);
        b
    }

    fn solve(&mut self, mask: u64) -> (usize, Vec<u64>) {
        let n = self.g.n();
        if mask == 0 {
            return (0, vec![0; n]);
        }
        if let Some(hit) = self.memo.get(&mask) {
            return hit.clone();
        }
        let core = self.g.core_within(VertexSet(mask), self.t).0;
        let result = if core != mask {
            let (value, mut lists) = self.solve(core);
            for v in Bits(mask & !core) {
                lists[v] = self.full_list();
            }
            (value + (mask & !core).count_ones() as usize, lists)
        } else {
            self.solve_core(mask)
        };
        self.memo.insert(mask, result.clone());
        result
    }

    fn solve_core(&mut self, mask: u64) -> (usize, Vec<u64>) {
        let n = self.g.n();
        let mut constant = vec![0u64; n];
        for v in Bits(mask) {
            constant[v] = self.full_list();
        }
        if self.certify && alon_tarsi_certifies(self.g, mask, self.t) {
            self.certified += 1;
            return (mask.count_ones() as usize, constant);
        }
        let lower = self.lower_bound(mask);
        let order = self.g.degeneracy_order_within(VertexSet(mask));
        let upper = MaxColoring::new(self.g.adjacency(), &constant, &order).interchangeable().run().best;
        let mut best = (upper, constant.clone());
        if upper > lower {
            let out = search_classes(
                self.g,
                mask,
                self.t,
                self.palette,
                self.tight,
                lower,
                upper,
                constant,
                self.parallel_mask == Some(mask),
            );
            self.classes += out.classes;
            self.pruned += out.pruned;
            best = (out.value, out.lists);
        }
        if self.tight {
            for v in Bits(mask) {
                if best.0 <= lower {
                    break;
                }
                let rest = mask & !(1 << v);
                if 1 + self.lower_bound(rest) >= best.0 {
                    continue;
                }
                let (value, mut lists) = self.solve(rest);
                if value + 1 < best.0 {
                    let used = lists.iter().fold(0u64, |m, &l| m | l);
                    let fresh_from = 64 - used.leading_zeros() as usize;
                    lists[v] = self.full_list() << fresh_from;
                    best = (value + 1, lists);
                }
            }
        }
        best
    }
}

/// The palette `lambda_t` enumerates over: the override if given, else
/// `n * t` (at most 64).
pub fn effective_palette(n: usize, t: usize, opts: &AdversaryOptions) -> usize {
    if t == 0 {
        return 0;
    }
    opts.palette.unwrap_or((n * t).min(MAX_PALETTE))
}

/// λ_t(G): the minimum of λ_L over all t-uniform assignments, with a
/// minimizing assignment in canonical form.
pub fn lambda_t(g: &Graph, t: usize, opts: &AdversaryOptions) -> Result<AdversaryResult> {
    let n = g.n();
    if t == 0 {
        return Ok(AdversaryResult {
            value: 0,
            witness: ListAssignment::new(g, vec![0; n], 0)?,
            classes: 0,
            pruned: 0,
            certified: 0,
            palette: 0,
            palette_limited: false,
        });
    }
    if t > MAX_PALETTE {
        return Err(Error::InvalidArgument(format!("list size {t} exceeds 64")));
    }
    let safe = n * t;
    let palette = effective_palette(n, t, opts);
    if palette < t || palette > MAX_PALETTE {
        return Err(Error::InvalidArgument(format!("palette {palette} must lie in {t}..=64")));
    }
    let palette_limited = palette < safe;
    let core = g.core_within(g.vertices(), t);
    if core.is_empty() {
        return Ok(AdversaryResult {
            value: n,
            witness: ListAssignment::constant(g, t)?,
            classes: 0,
            pruned: 0,
            certified: 0,
            palette,
            palette_limited,
        });
    }
    opts.caps.check(core.len(), t)?;
    let mut adversary = Adversary {
        g,
        t,
        palette,
        tight: !palette_limited,
        parallel_mask: opts.parallel.then_some(core.0),
        certify: !opts.no_certificate,
        memo: HashMap::new(),
        lower: HashMap::new(),
        classes: 0,
        pruned: 0,
        certified: 0,
    };
    let (value, lists) = adversary.solve(g.vertices().0);
    let lists = canonical_lists(&vertex_order(g, g.vertices()), &lists);
    let witness = ListAssignment::new(g, lists, palette)?;
    let check = lambda_of_assignment(g, &witness)?.value;
    if check != value || witness.uniform_size() != Some(t) {
        return Err(Error::Integrity(format!(
            "adversary witness for t = {t} on {} gives {check}, expected {value}",
            g.to_graph6()
        )));
    }
    Ok(AdversaryResult {
        value,
        witness,
        classes: adversary.classes,
        pruned: adversary.pruned,
        certified: adversary.certified,
        palette,
        palette_limited,
    })
}

/// λ_t by brute force: every t-subset of `0..n*t` at every vertex, no
/// symmetry reduction, each scored by the brute-force λ_L oracle.
/// Limited to `n <= 5`, `t <= 2`.
pub fn lambda_t_oracle(g: &Graph, t: usize) -> Result<usize> {
    let n = g.n();
    if n > 5 || t > 2 {
        return Err(Error::TooLarge(format!("oracle needs n <= 5 and t <= 2 (n = {n}, t = {t})")));
    }
    if t == 0 {
        return Ok(0);
    }
    let p = n * t;
    let subsets: Vec<u64> = (0u64..1 << p).filter(|m| m.count_ones() as usize == t).collect();
    let mut digits = vec![0usize; n];
    let mut best = usize::MAX;
    loop {
        let lists = digits.iter().map(|&d| subsets[d]).collect();
        let l = ListAssignment::new(g, lists, p)?;
        best = best.min(lambda_of_assignment_oracle(g, &l)?);
        let mut i = 0;
        loop {
            if i == n {
                return Ok(best);
            }
            digits[i] += 1;
            if digits[i] < subsets.len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// χ_ℓ(G): the least t with λ_t = n, scanning upward from χ(G).
pub fn list_chromatic_number(g: &Graph, opts: &AdversaryOptions) -> Result<usize> {
    let n = g.n();
    let mut t = chromatic_number(g).max(1);
    loop {
        if lambda_t(g, t, opts)?.value == n {
            return Ok(t);
        }
        t += 1;
    }
}

/// The sequence λ_0, ..., λ_{χ_ℓ} with the invariants it is checked against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaTable {
    pub graph: String,
    pub n: usize,
    pub alpha: usize,
    pub chi: usize,
    pub chi_l: usize,
    /// `values[t] = λ_t` for `0 <= t <= χ_ℓ`.
    pub values: Vec<usize>,
    /// A minimizing assignment for every entry.
    pub witnesses: Vec<ListAssignment>,
    pub palette_limited: bool,
}

impl LambdaTable {
    /// λ_t, extended by `n` past χ_ℓ.
    pub fn lambda(&self, t: usize) -> usize {
        self.values.get(t).copied().unwrap_or(self.n)
    }

    /// Checks the structural invariants of a table: λ_0 = 0, λ_1 = α,
    /// λ_{χ_ℓ} = n, monotone, and below n before χ_ℓ.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let v = &self.values;
        if v.len() != self.chi_l + 1 {
            out.push(format!("{} entries for chi_l = {}", v.len(), self.chi_l));
            return out;
        }
        if v[0] != 0 {
            out.push(format!("lambda_0 = {}", v[0]));
        }
        if self.chi_l >= 1 && v[1] != self.alpha {
            out.push(format!("lambda_1 = {} but alpha = {}", v[1], self.alpha));
        }
        if v[self.chi_l] != self.n {
            out.push(format!("lambda_chi_l = {} but n = {}", v[self.chi_l], self.n));
        }
        for t in 0..self.chi_l {
            if v[t] > v[t + 1] {
                out.push(format!("lambda_{t} = {} > lambda_{} = {}", v[t], t + 1, v[t + 1]));
            }
            if v[t] >= self.n {
                out.push(format!("lambda_{t} = {} reaches n before chi_l", v[t]));
            }
        }
        if self.chi > self.chi_l {
            out.push(format!("chi = {} > chi_l = {}", self.chi, self.chi_l));
        }
        out
    }
}

/// Builds the table with a caller-supplied λ_t source (e.g. a cache).
pub fn lambda_table_with<F>(g: &Graph, t_max: usize, mut lambda: F) -> Result<LambdaTable>
where
    F: FnMut(&Graph, usize) -> Result<AdversaryResult>,
{
    let n = g.n();
    let mut values = vec![0];
    let mut witnesses = vec![ListAssignment::new(g, vec![0; n], 0)?];
    let mut palette_limited = false;
    let mut t = 0;
    while values[t] < n {
        t += 1;
        if t > t_max {
            return Err(Error::TooLarge(format!(
                "list chromatic number of {} exceeds the t limit {t_max}",
                g.to_graph6()
            )));
        }
        let r = lambda(g, t)?;
        palette_limited |= r.palette_limited;
        values.push(r.value);
        witnesses.push(r.witness);
    }
    Ok(LambdaTable {
        graph: g.to_graph6(),
        n,
        alpha: independence_number(g),
        chi: chromatic_number(g),
        chi_l: t,
        values,
        witnesses,
        palette_limited,
    })
}

pub fn lambda_table(g: &Graph, opts: &AdversaryOptions) -> Result<LambdaTable> {
    lambda_table_with(g, usize::MAX, |g, t| lambda_t(g, t, opts))
}
