//! Exact partial list coloring and the classic invariants χ and α.
//!
//! One depth-first kernel maximizes the number of colored vertices: vertices
//! are visited in degeneracy order, each either takes an available color from
//! its list (ascending) or stays uncolored, and a branch is cut once
//! `colored + still-colorable <= best`. A vertex is still colorable when its
//! list is not already covered by the colors of its colored neighbors.
//! Strict improvement is required to replace the incumbent, so the witness is
//! the first optimum in that visiting order.
//!
//! When every list is the same palette the colors are interchangeable, and
//! the kernel only opens one fresh color per vertex. χ uses the
//! full-coloring variant of the same search; α is a clique search in the
//! complement.

use crate::assignment::{ListAssignment, PartialColoring};
use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

const NONE: u8 = u8::MAX;

/// Outcome of a λ_L maximization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    /// Number of colored vertices.
    pub value: usize,
    pub witness: PartialColoring,
    pub nodes: u64,
}

/// Depth-first maximizer shared by every partial coloring query.
pub(crate) struct MaxColoring<'a> {
    adj: &'a [u64],
    lists: &'a [u64],
    order: Vec<usize>,
    interchangeable: bool,
    colors: [u8; 64],
    colored: u64,
    pub best: usize,
    pub best_colors: Option<[u8; 64]>,
    stop_at: usize,
    done: bool,
    pub nodes: u64,
}

impl<'a> MaxColoring<'a> {
    /// `order` must list every vertex that may be colored (others are skipped).
    pub fn new(adj: &'a [u64], lists: &'a [u64], order: &[usize]) -> Self {
        let order = order.iter().copied().filter(|&v| lists[v] != 0).collect();
        MaxColoring {
            adj,
            lists,
            order,
            interchangeable: false,
            colors: [NONE; 64],
            colored: 0,
            best: 0,
            best_colors: None,
            stop_at: usize::MAX,
            done: false,
            nodes: 0,
        }
    }

    /// All lists are equal, so unused colors are interchangeable.
    pub fn interchangeable(mut self) -> Self {
        self.interchangeable = true;
        self
    }

    /// Only colorings with more than `best` vertices are of interest.
    pub fn above(mut self, best: usize) -> Self {
        self.best = best;
        self
    }

    /// Stop as soon as a coloring with at least `k` vertices is found.
    pub fn stop_at(mut self, k: usize) -> Self {
        self.stop_at = k;
        self
    }

    pub fn run(mut self) -> Self {
        if self.order.len() > self.best {
            self.dfs(0, 0, 0);
        }
        self
    }

    #[inline]
    fn forbidden(&self, v: usize) -> u64 {
        Bits(self.adj[v] & self.colored).fold(0, |m, u| m | 1u64 << self.colors[u])
    }

    fn dfs(&mut self, pos: usize, count: usize, used: u64) {
        self.nodes += 1;
        let remaining = self.order.len() - pos;
        if count + remaining <= self.best {
            return;
        }
        if pos == self.order.len() {
            self.best = count;
            self.best_colors = Some(self.colors);
            if count >= self.stop_at {
                self.done = true;
            }
            return;
        }
        let mut live = 0;
        for &w in &self.order[pos + 1..] {
            if self.lists[w] & !self.forbidden(w) != 0 {
                live += 1;
            }
        }
        let v = self.order[pos];
        let mut avail = self.lists[v] & !self.forbidden(v);
        if count + live + (avail != 0) as usize <= self.best {
            return;
        }
        if self.interchangeable {
            let fresh = avail & !used;
            avail &= used | (fresh & fresh.wrapping_neg());
        }
        for c in Bits(avail) {
            self.colors[v] = c as u8;
            self.colored |= 1 << v;
            self.dfs(pos + 1, count + 1, used | 1 << c);
            self.colored &= !(1 << v);
            self.colors[v] = NONE;
            if self.done {
                return;
            }
        }
        self.dfs(pos + 1, count, used);
    }

    pub fn witness(&self, n: usize) -> PartialColoring {
        let colors = match &self.best_colors {
            Some(cs) => cs[..n].iter().map(|&c| (c != NONE).then_some(c)).collect(),
            None => vec![None; n],
        };
        PartialColoring::from_colors(colors)
    }
}

/// Full-coloring search with most-constrained-vertex branching.
pub(crate) fn find_full_coloring(
    adj: &[u64],
    lists: &[u64],
    interchangeable: bool,
    nodes: &mut u64,
) -> Option<Vec<u8>> {
    fn go(
        adj: &[u64],
        lists: &[u64],
        colors: &mut [u8],
        colored: u64,
        used: u64,
        interchangeable: bool,
        nodes: &mut u64,
    ) -> bool {
        *nodes += 1;
        let n = lists.len();
        let mut pick = None;
        let mut pick_avail = 0u64;
        let mut pick_count = u32::MAX;
        for v in 0..n {
            if colored >> v & 1 == 1 {
                continue;
            }
            let forb = Bits(adj[v] & colored).fold(0u64, |m, u| m | 1 << colors[u]);
            let avail = lists[v] & !forb;
            let k = avail.count_ones();
            if k == 0 {
                return false;
            }
            if k < pick_count {
                pick = Some(v);
                pick_avail = avail;
                pick_count = k;
            }
        }
        let Some(v) = pick else { return true };
        let mut avail = pick_avail;
        if interchangeable {
            let fresh = avail & !used;
            avail &= used | (fresh & fresh.wrapping_neg());
        }
        for c in Bits(avail) {
            colors[v] = c as u8;
            if go(adj, lists, colors, colored | 1 << v, used | 1 << c, interchangeable, nodes) {
                return true;
            }
        }
        colors[v] = NONE;
        false
    }
    let mut colors = vec![NONE; lists.len()];
    go(adj, lists, &mut colors, 0, 0, interchangeable, nodes).then_some(colors)
}

/// λ_L(G): the maximum number of vertices colorable from their lists.
pub fn lambda_of_assignment(g: &Graph, l: &ListAssignment) -> Result<SolveResult> {
    l.ensure_bound_to(g)?;
    let order = g.degeneracy_order();
    let search = MaxColoring::new(g.adjacency(), l.masks(), &order).run();
    let witness = search.witness(g.n());
    debug_assert!(witness.validate(g, l).is_ok());
    Ok(SolveResult { value: search.best, witness, nodes: search.nodes })
}

/// λ_L by brute force over every map `v -> L(v) ∪ {uncolored}`.
///
/// Deliberately naive; it is the reference the kernel is tested against.
/// Limited to `n <= 8` and lists of at most 3 colors.
pub fn lambda_of_assignment_oracle(g: &Graph, l: &ListAssignment) -> Result<usize> {
    l.ensure_bound_to(g)?;
    let n = g.n();
    if n > 8 || l.max_list_size() > 3 {
        return Err(Error::TooLarge(format!(
            "oracle needs n <= 8 and lists of size <= 3 (n = {n}, max list {})",
            l.max_list_size()
        )));
    }
    let choices: Vec<Vec<Option<usize>>> =
        (0..n).map(|v| l.colors(v).map(Some).chain(std::iter::once(None)).collect()).collect();
    let mut digits = vec![0usize; n];
    let mut best = 0;
    loop {
        let pick: Vec<Option<usize>> = (0..n).map(|v| choices[v][digits[v]]).collect();
        let proper = g.edges().all(|(u, v)| pick[u].is_none() || pick[u] != pick[v]);
        if proper {
            best = best.max(pick.iter().filter(|c| c.is_some()).count());
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(best);
            }
            digits[i] += 1;
            if digits[i] < choices[i].len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Whether every vertex can be colored from its list. Stops at the first
/// full coloring.
pub fn is_list_colorable(g: &Graph, l: &ListAssignment) -> Result<bool> {
    Ok(list_coloring(g, l)?.is_some())
}

/// A full list coloring, if one exists.
pub fn list_coloring(g: &Graph, l: &ListAssignment) -> Result<Option<PartialColoring>> {
    l.ensure_bound_to(g)?;
    let mut nodes = 0;
    Ok(find_full_coloring(g.adjacency(), l.masks(), false, &mut nodes)
        .map(|cs| PartialColoring::from_colors(cs.into_iter().map(Some).collect())))
}

/// λ for the constant assignment `{0, ..., s-1}`: the largest induced
/// subgraph that is `s`-colorable. `s = 0` gives 0.
pub fn max_partial_constant(g: &Graph, s: usize) -> SolveResult {
    let n = g.n();
    if s == 0 {
        return SolveResult { value: 0, witness: PartialColoring::uncolored(n), nodes: 0 };
    }
    let s = s.min(n);
    let lists = vec![if s == 64 { u64::MAX } else { (1u64 << s) - 1 }; n];
    let order = g.degeneracy_order();
    let search = MaxColoring::new(g.adjacency(), &lists, &order).interchangeable().stop_at(n).run();
    SolveResult { value: search.best, witness: search.witness(n), nodes: search.nodes }
}

/// Whether `g` has a proper coloring with `k` colors.
pub fn is_k_colorable(g: &Graph, k: usize) -> bool {
    if k >= g.n() {
        return true;
    }
    if k == 0 {
        return false;
    }
    let lists = vec![(1u64 << k) - 1; g.n()];
    let mut nodes = 0;
    find_full_coloring(g.adjacency(), &lists, true, &mut nodes).is_some()
}

/// χ(G), between the clique number and the DSATUR count.
pub fn chromatic_number(g: &Graph) -> usize {
    let lower = max_clique(g).len();
    let upper = dsatur_colors(g);
    (lower..upper).find(|&k| is_k_colorable(g, k)).unwrap_or(upper)
}

/// α(G), as the clique number of the complement.
pub fn independence_number(g: &Graph) -> usize {
    max_clique(&g.complement()).len()
}

/// A maximum independent set.
pub fn maximum_independent_set(g: &Graph) -> Vec<usize> {
    max_clique(&g.complement())
}

/// A maximum clique, lowest-index-first on ties.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    fn expand(adj: &[u64], current: u64, cand: u64, best: &mut u64) {
        if cand == 0 {
            if current.count_ones() > best.count_ones() {
                *best = current;
            }
            return;
        }
        let mut cand = cand;
        while cand != 0 {
            if current.count_ones() + cand.count_ones() <= best.count_ones() {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            expand(adj, current | 1 << v, cand & adj[v], best);
        }
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
    }
    let mut best = 0u64;
    expand(g.adjacency(), 0, g.vertices().0, &mut best);
    Bits(best).collect()
}

/// Number of colors DSATUR uses.
pub fn dsatur_colors(g: &Graph) -> usize {
    let n = g.n();
    let mut colors = vec![NONE; n];
    let mut used = 0;
    for _ in 0..n {
        let sat =
            |v: usize| Bits(g.adjacency()[v]).filter(|&u| colors[u] != NONE).fold(0u64, |m, u| m | 1 << colors[u]);
        let v = (0..n)
            .filter(|&v| colors[v] == NONE)
            .max_by_key(|&v| (sat(v).count_ones(), g.degree(v), std::cmp::Reverse(v)))
            .expect("uncolored vertex left");
        let c = (!sat(v)).trailing_zeros() as u8;
        colors[v] = c;
        used = used.max(c as usize + 1);
    }
    used
}

/// Alon-Tarsi test on `G[mask]`: some monomial with every exponent below `t`
/// has a nonzero coefficient in the graph polynomial, which certifies that
/// `G[mask]` is t-choosable. A false answer proves nothing.
pub fn alon_tarsi_certifies(g: &Graph, mask: u64, t: usize) -> bool {
    let verts: Vec<usize> = Bits(mask).collect();
    let k = verts.len();
    if k == 0 {
        return true;
    }
    if t == 0 {
        return false;
    }
    let edges: Vec<(usize, usize)> =
        (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| g.has_edge(verts[i], verts[j])).collect();
    if edges.len() > k * (t - 1) || (t as f64).powi(k as i32) > 4.0e7 {
        return false;
    }
    let weights: Vec<usize> = (0..k).map(|i| t.pow(i as u32)).collect();
    let size = t.pow(k as u32);
    let mut poly = vec![0i64; size];
    poly[0] = 1;
    for &(a, b) in &edges {
        let mut next = vec![0i64; size];
        for (idx, &c) in poly.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if (idx / weights[a]) % t + 1 < t {
                next[idx + weights[a]] += c;
            }
            if (idx / weights[b]) % t + 1 < t {
                next[idx + weights[b]] -= c;
            }
        }
        poly = next;
    }
    poly.iter().any(|&c| c != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn fam(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    fn lists(g: &Graph, ls: &[&[u32]]) -> ListAssignment {
        let v: Vec<Vec<u32>> = ls.iter().map(|l| l.to_vec()).collect();
        ListAssignment::from_color_lists(g, &v).unwrap()
    }

    #[test]
    fn lambda_examples() {
        let k3 = fam("complete:3");
        let same = ListAssignment::constant(&k3, 2).unwrap();
        let r = lambda_of_assignment(&k3, &same).unwrap();
        assert_eq!(r.value, 2);
        assert!(r.witness.validate(&k3, &same).is_ok());
        assert_eq!(r.witness.colored_count(), 2);
        assert_eq!(lambda_of_assignment_oracle(&k3, &same).unwrap(), 2);

        let c4 = fam("cycle:4");
        let two = ListAssignment::constant(&c4, 2).unwrap();
        assert_eq!(lambda_of_assignment(&c4, &two).unwrap().value, 4);
        assert_eq!(lambda_of_assignment_oracle(&c4, &two).unwrap(), 4);

        let c5 = fam("cycle:5");
        let one = ListAssignment::constant(&c5, 1).unwrap();
        assert_eq!(lambda_of_assignment(&c5, &one).unwrap().value, 2);
    }

    #[test]
    fn oracle_trivial_cases_and_guard() {
        let k1 = Graph::empty(1);
        assert_eq!(lambda_of_assignment_oracle(&k1, &lists(&k1, &[&[5]])).unwrap(), 1);
        let e4 = Graph::empty(4);
        let l = lists(&e4, &[&[0], &[0], &[3], &[0]]);
        assert_eq!(lambda_of_assignment_oracle(&e4, &l).unwrap(), 4);
        let k9 = fam("complete:9");
        let err = lambda_of_assignment_oracle(&k9, &ListAssignment::constant(&k9, 1).unwrap());
        assert!(matches!(err, Err(Error::TooLarge(_))));
        let k3 = fam("complete:3");
        let err = lambda_of_assignment_oracle(&k3, &ListAssignment::constant(&k3, 4).unwrap());
        assert!(matches!(err, Err(Error::TooLarge(_))));
    }

    #[test]
    fn colorability() {
        let k3 = fam("complete:3");
        assert!(is_list_colorable(&k3, &lists(&k3, &[&[0, 1], &[1, 2], &[0, 2]])).unwrap());
        assert!(!is_list_colorable(&k3, &ListAssignment::constant(&k3, 2).unwrap()).unwrap());
        let k1 = Graph::empty(1);
        assert!(is_list_colorable(&k1, &lists(&k1, &[&[7]])).unwrap());
        let c4 = fam("cycle:4");
        assert!(is_list_colorable(&k3, &ListAssignment::constant(&c4, 2).unwrap()).is_err());
    }

    #[test]
    fn constant_palette() {
        assert_eq!(max_partial_constant(&fam("complete:4"), 2).value, 2);
        assert_eq!(max_partial_constant(&fam("cycle:5"), 2).value, 4);
        assert_eq!(max_partial_constant(&fam("cycle:5"), 3).value, 5);
        assert_eq!(max_partial_constant(&fam("petersen"), 3).value, 10);
        let zero = max_partial_constant(&fam("cycle:5"), 0);
        assert_eq!((zero.value, zero.witness.colored_count()), (0, 0));
    }

    #[test]
    fn classic_invariants() {
        for n in 1..=6 {
            let k = fam(&format!("complete:{n}"));
            assert_eq!(chromatic_number(&k), n);
            assert_eq!(independence_number(&k), 1);
            assert_eq!(independence_number(&Graph::empty(n)), n);
        }
        assert_eq!(chromatic_number(&fam("cycle:5")), 3);
        assert_eq!(chromatic_number(&fam("bipartite:2,4")), 2);
        assert_eq!(chromatic_number(&fam("petersen")), 3);
        assert_eq!(independence_number(&fam("cycle:5")), 2);
        assert_eq!(independence_number(&fam("petersen")), 4);
        assert_eq!(max_clique(&fam("petersen")).len(), 2);
        assert!(fam("cycle:7")
            .is_independent(crate::graph::VertexSet::from_vertices(maximum_independent_set(&fam("cycle:7")))));
    }

    #[test]
    fn alon_tarsi_landmarks() {
        let f = |s: &str| s.parse::<FamilySpec>().unwrap().generate().unwrap();
        let all = |g: &Graph| g.vertices().0;
        for n in 1..=5 {
            let k = f(&format!("complete:{n}"));
            assert!(alon_tarsi_certifies(&k, all(&k), n));
            assert!(!alon_tarsi_certifies(&k, all(&k), n - 1));
        }
        let c4 = f("cycle:4");
        let c5 = f("cycle:5");
        assert!(alon_tarsi_certifies(&c4, all(&c4), 2));
        assert!(!alon_tarsi_certifies(&c5, all(&c5), 2));
        assert!(alon_tarsi_certifies(&c5, all(&c5), 3));
        let k24 = f("bipartite:2,4");
        assert!(!alon_tarsi_certifies(&k24, all(&k24), 2));
        assert!(alon_tarsi_certifies(&k24, 0b000111, 2));
    }
}
