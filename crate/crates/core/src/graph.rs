//! Simple graphs on at most 64 vertices, stored as one adjacency word per vertex.
//!
//! Text formats:
//!
//! * graph6: a size header (one byte `n + 63`, or `~` followed by three bytes
//!   for 63 <= n <= 64) followed by the upper triangle of the adjacency matrix
//!   in column-major order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six
//!   bits per byte, most significant bit first, each byte offset by 63.
//! * edge list: a first line holding `n`, then one `u v` pair per line with
//!   0-based endpoints. In files, graphs are separated by blank lines.

use std::fmt;

use crate::error::ParseError;
use crate::rng::XorShift64;

pub const MAX_VERTICES: usize = 64;

/// A set of vertices of one graph, as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Bits {}

/// An undirected simple graph.
///
/// Equality ignores the label.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    label: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.to_graph6())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n` is 0 or exceeds [`MAX_VERTICES`].
    pub fn empty(n: usize) -> Self {
        assert!((1..=MAX_VERTICES).contains(&n), "vertex count {n} out of range");
        Graph { n, adj: vec![0; n], label: None }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge {u}-{v}");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    #[must_use]
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Adjacency words, one per vertex.
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).0;
        let adj = (0..self.n).map(|v| !self.adj[v] & full & !(1u64 << v)).collect();
        Graph { n: self.n, adj, label: None }
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == VertexSet::full(self.n).0
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.0 == 0)
    }

    /// Checks the structural invariants: symmetric, irreflexive, in range.
    pub fn is_valid(&self) -> bool {
        let full = VertexSet::full(self.n).0;
        (0..self.n).all(|v| {
            self.adj[v] & !full == 0
                && self.adj[v] >> v & 1 == 0
                && Bits(self.adj[v]).all(|u| self.adj[u] >> v & 1 == 1)
        })
    }

    /// Smallest-last order: repeatedly remove a minimum-degree vertex (lowest
    /// index on ties) and return the removals reversed, so every vertex has
    /// at most `degeneracy` neighbors before it.
    pub fn degeneracy_order(&self) -> Vec<usize> {
        self.degeneracy_order_within(self.vertices())
    }

    pub(crate) fn degeneracy_order_within(&self, s: VertexSet) -> Vec<usize> {
        let mut left = s.0;
        let mut removed = Vec::with_capacity(s.len());
        while left != 0 {
            let v = Bits(left).min_by_key(|&v| ((self.adj[v] & left).count_ones(), v)).expect("nonempty");
            removed.push(v);
            left &= !(1u64 << v);
        }
        removed.reverse();
        removed
    }

    /// Largest minimum degree over subgraphs of `G[s]`.
    pub fn degeneracy_within(&self, s: VertexSet) -> usize {
        let mut left = s.0;
        let mut best = 0;
        while left != 0 {
            let (d, v) = Bits(left).map(|v| ((self.adj[v] & left).count_ones() as usize, v)).min().expect("nonempty");
            best = best.max(d);
            left &= !(1u64 << v);
        }
        best
    }

    /// Vertices of the `k`-core of `G[s]`: what is left after repeatedly
    /// deleting vertices with fewer than `k` neighbors.
    pub fn core_within(&self, s: VertexSet, k: usize) -> VertexSet {
        let mut left = s.0;
        loop {
            let weak =
                Bits(left).filter(|&v| ((self.adj[v] & left).count_ones() as usize) < k).fold(0u64, |m, v| m | 1 << v);
            if weak == 0 {
                return VertexSet(left);
            }
            left &= !weak;
        }
    }

    /// Subgraph induced by `s`, relabeled by ascending original index,
    /// together with the map from new to original indices.
    pub fn induced_subgraph(&self, s: VertexSet) -> crate::Result<(Graph, Vec<usize>)> {
        if s.is_empty() {
            return Err(crate::Error::InvalidArgument("induced subgraph of an empty vertex set".into()));
        }
        if !s.is_subset(self.vertices()) {
            return Err(crate::Error::InvalidArgument(format!(
                "vertex set {s:?} not contained in a {}-vertex graph",
                self.n
            )));
        }
        let map: Vec<usize> = s.iter().collect();
        let mut h = Graph::empty(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.add_edge(i, j);
                }
            }
        }
        Ok((h, map))
    }

    pub fn to_graph6(&self) -> String {
        let n = self.n;
        let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
        if n <= 62 {
            out.push(n as u8 + 63);
        } else {
            out.push(126);
            out.push(((n >> 12) & 63) as u8 + 63);
            out.push(((n >> 6) & 63) as u8 + 63);
            out.push((n & 63) as u8 + 63);
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = acc << 1 | self.has_edge(i, j) as u8;
                filled += 1;
                if filled == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((acc << (6 - filled)) + 63);
        }
        String::from_utf8(out).expect("graph6 is ASCII")
    }

    /// Decodes one graph6 line. A single trailing newline is tolerated.
    pub fn from_graph6(text: &str) -> Result<Graph, ParseError> {
        let bytes = text.strip_suffix('\n').unwrap_or(text).as_bytes();
        let bytes = bytes.strip_suffix(b"\r").unwrap_or(bytes);
        if bytes.is_empty() {
            return Err(ParseError::Empty);
        }
        for (offset, &byte) in bytes.iter().enumerate() {
            if !(63..=126).contains(&byte) {
                return Err(ParseError::ByteOutOfRange { offset, byte });
            }
        }
        let (n, start) = if bytes[0] != 126 {
            ((bytes[0] - 63) as usize, 1)
        } else {
            if bytes.len() < 4 {
                return Err(ParseError::BadHeader { offset: bytes.len() });
            }
            if bytes[1] == 126 {
                // 8-byte form, only used for n >= 258048.
                if bytes.len() < 8 {
                    return Err(ParseError::BadHeader { offset: bytes.len() });
                }
                let n = bytes[2..8].iter().fold(0usize, |a, &b| a << 6 | (b - 63) as usize);
                return Err(ParseError::TooManyVertices { n, offset: 0 });
            }
            let n = bytes[1..4].iter().fold(0usize, |a, &b| a << 6 | (b - 63) as usize);
            if n < 63 {
                return Err(ParseError::BadHeader { offset: 1 });
            }
            (n, 4)
        };
        if n > MAX_VERTICES {
            return Err(ParseError::TooManyVertices { n, offset: 0 });
        }
        if n == 0 {
            return Err(ParseError::NoVertices);
        }
        let bits = n * (n - 1) / 2;
        let need = bits.div_ceil(6);
        let payload = &bytes[start..];
        if payload.len() < need {
            return Err(ParseError::Truncated { expected: need, found: payload.len() });
        }
        if payload.len() > need {
            return Err(ParseError::TrailingGarbage { offset: start + need });
        }
        if bits % 6 != 0 {
            let last = payload[need - 1] - 63;
            if last & ((1 << (6 - bits % 6)) - 1) != 0 {
                return Err(ParseError::NonzeroPadding { offset: start + need - 1 });
            }
        }
        let mut g = Graph::empty(n);
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = payload[k / 6] - 63;
                if byte >> (5 - k % 6) & 1 == 1 {
                    g.add_edge(i, j);
                }
                k += 1;
            }
        }
        Ok(g.with_label(String::from_utf8_lossy(bytes).into_owned()))
    }

    /// Parses the edge-list format: `n` on the first line, then `u v` lines.
    /// Blank lines and `#` comments are ignored; repeated edges are merged.
    pub fn from_edge_list(text: &str) -> Result<Graph, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line, head) = lines.next().ok_or(ParseError::Empty)?;
        let n: usize = parse_int(head, line)?;
        if n == 0 {
            return Err(ParseError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(ParseError::TooManyVertices { n, offset: 0 });
        }
        let mut g = Graph::empty(n);
        for (line, l) in lines {
            let mut it = l.split_whitespace();
            let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
                return Err(ParseError::BadEdgeLine { line });
            };
            let u = parse_int(a, line)?;
            let v = parse_int(b, line)?;
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(ParseError::VertexOutOfRange { line, vertex, n });
                }
            }
            if u == v {
                return Err(ParseError::Loop { line, vertex: u });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

fn parse_int(token: &str, line: usize) -> Result<usize, ParseError> {
    token.parse().map_err(|_| ParseError::NotAnInteger { line, token: token.to_string() })
}

/// Reads a file holding one graph6 string per line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, (usize, ParseError)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i, l.trim()))
        .map(|(i, l)| (i, l.strip_prefix(">>graph6<<").unwrap_or(l)))
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| Graph::from_graph6(l).map_err(|e| (i + 1, e)))
        .collect()
}

/// Reads a file of edge-list blocks separated by blank lines.
pub fn parse_edge_list_blocks(text: &str) -> Result<Vec<Graph>, (usize, ParseError)> {
    let mut graphs = Vec::new();
    let mut block = String::new();
    let mut block_start = 1;
    for (i, line) in text.lines().chain(std::iter::once("")).enumerate() {
        if line.trim().is_empty() {
            if !block.trim().is_empty() {
                graphs.push(Graph::from_edge_list(&block).map_err(|e| (block_start, e))?);
            }
            block.clear();
            block_start = i + 2;
        } else {
            block.push_str(line);
            block.push('\n');
        }
    }
    Ok(graphs)
}

/// Named graph families with a fixed vertex ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// K_n.
    Complete(usize),
    /// C_n in cyclic order `0-1-...-(n-1)-0`.
    Cycle(usize),
    /// P_n in path order.
    Path(usize),
    /// K_{m,n}, left block `0..m` first.
    CompleteBipartite(usize, usize),
    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i+5`.
    Petersen,
    /// C_k x K_2: two k-cycles `0..k` and `k..2k` joined by `i ~ i+k`.
    Prism(usize),
    /// Edgeless graph on n vertices.
    Empty(usize),
    /// G(n, p) with `p = num/den`, drawn by [`XorShift64`].
    Gnp { n: usize, num: u64, den: u64, seed: u64 },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Graph, ParseError> {
        let bad = || ParseError::BadFamily(self.to_string());
        let check = |n: usize| if (1..=MAX_VERTICES).contains(&n) { Ok(n) } else { Err(bad()) };
        let g = match *self {
            FamilySpec::Complete(n) => {
                let mut g = Graph::empty(check(n)?);
                for v in 0..n {
                    for u in 0..v {
                        g.add_edge(u, v);
                    }
                }
                g
            }
            FamilySpec::Cycle(n) => {
                if n < 3 {
                    return Err(bad());
                }
                let mut g = Graph::empty(check(n)?);
                for v in 0..n {
                    g.add_edge(v, (v + 1) % n);
                }
                g
            }
            FamilySpec::Path(n) => {
                let mut g = Graph::empty(check(n)?);
                for v in 1..n {
                    g.add_edge(v - 1, v);
                }
                g
            }
            FamilySpec::CompleteBipartite(a, b) => {
                let mut g = Graph::empty(check(a + b)?);
                if a == 0 || b == 0 {
                    return Err(bad());
                }
                for u in 0..a {
                    for v in a..a + b {
                        g.add_edge(u, v);
                    }
                }
                g
            }
            FamilySpec::Petersen => {
                let mut g = Graph::empty(10);
                for i in 0..5 {
                    g.add_edge(i, (i + 1) % 5);
                    g.add_edge(5 + i, 5 + (i + 2) % 5);
                    g.add_edge(i, i + 5);
                }
                g
            }
            FamilySpec::Prism(k) => {
                if k < 3 {
                    return Err(bad());
                }
                let mut g = Graph::empty(check(2 * k)?);
                for i in 0..k {
                    g.add_edge(i, (i + 1) % k);
                    g.add_edge(k + i, k + (i + 1) % k);
                    g.add_edge(i, k + i);
                }
                g
            }
            FamilySpec::Empty(n) => Graph::empty(check(n)?),
            FamilySpec::Gnp { n, num, den, seed } => {
                if den == 0 || num > den {
                    return Err(bad());
                }
                let mut g = Graph::empty(check(n)?);
                let mut rng = XorShift64::new(seed);
                for j in 1..n {
                    for i in 0..j {
                        if rng.bernoulli(num, den) {
                            g.add_edge(i, j);
                        }
                    }
                }
                g
            }
        };
        Ok(g.with_label(self.to_string()))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "bipartite:{a},{b}"),
            FamilySpec::Petersen => write!(f, "petersen"),
            FamilySpec::Prism(k) => write!(f, "prism:{k}"),
            FamilySpec::Empty(n) => write!(f, "empty:{n}"),
            FamilySpec::Gnp { n, num, den, seed } => write!(f, "gnp:{n},{num}/{den},{seed}"),
        }
    }
}

impl std::str::FromStr for FamilySpec {
    type Err = ParseError;

    /// Accepts the [`Display`](fmt::Display) forms, e.g. `complete:4`,
    /// `bipartite:2,4`, `petersen`, `gnp:6,1/2,7`.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let bad = || ParseError::BadFamily(s.to_string());
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let nums = |args: &str| -> Result<Vec<u64>, ParseError> {
            args.split([',', '/']).map(|a| a.trim().parse::<u64>().map_err(|_| bad())).collect()
        };
        let one = |args: &str| -> Result<usize, ParseError> {
            match nums(args)?.as_slice() {
                [n] => Ok(*n as usize),
                _ => Err(bad()),
            }
        };
        Ok(match name.trim() {
            "complete" | "K" => FamilySpec::Complete(one(args)?),
            "cycle" | "C" => FamilySpec::Cycle(one(args)?),
            "path" | "P" => FamilySpec::Path(one(args)?),
            "empty" => FamilySpec::Empty(one(args)?),
            "prism" => FamilySpec::Prism(one(args)?),
            "petersen" if args.is_empty() => FamilySpec::Petersen,
            "bipartite" | "complete_bipartite" => match nums(args)?.as_slice() {
                [a, b] => FamilySpec::CompleteBipartite(*a as usize, *b as usize),
                _ => return Err(bad()),
            },
            "gnp" => match nums(args)?.as_slice() {
                [n, num, den, seed] => FamilySpec::Gnp { n: *n as usize, num: *num, den: *den, seed: *seed },
                _ => return Err(bad()),
            },
            _ => return Err(bad()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        FamilySpec::Complete(n).generate().unwrap()
    }

    #[test]
    fn graph6_small_cases() {
        assert_eq!(Graph::from_graph6("Bw").unwrap(), k(3));
        let two = Graph::from_graph6("A?").unwrap();
        assert_eq!((two.n(), two.edge_count()), (2, 0));
        let one = Graph::from_graph6("@").unwrap();
        assert_eq!((one.n(), one.edge_count()), (1, 0));
        assert_eq!(k(3).to_graph6(), "Bw");
        assert_eq!(Graph::empty(1).to_graph6(), "@");
    }

    #[test]
    fn graph6_c4_payload_bits() {
        let c4 = FamilySpec::Cycle(4).generate().unwrap();
        // x01,x02,x12,x03,x13,x23 = 1,0,1,1,0,1
        let expected = [b'C', 0b101101 + 63];
        assert_eq!(c4.to_graph6().as_bytes(), expected);
        assert_eq!(c4.to_graph6(), "Cl");
    }

    #[test]
    fn graph6_long_header() {
        let g = FamilySpec::Cycle(64).generate().unwrap();
        let s = g.to_graph6();
        assert_eq!(&s[..4], "~?@?");
        assert_eq!(Graph::from_graph6(&s).unwrap(), g);
        let g63 = FamilySpec::Path(63).generate().unwrap();
        assert_eq!(Graph::from_graph6(&g63.to_graph6()).unwrap(), g63);
    }

    #[test]
    fn graph6_errors() {
        assert_eq!(Graph::from_graph6(""), Err(ParseError::Empty));
        assert_eq!(Graph::from_graph6("B w"), Err(ParseError::ByteOutOfRange { offset: 1, byte: b' ' }));
        assert_eq!(Graph::from_graph6("Bww"), Err(ParseError::TrailingGarbage { offset: 2 }));
        assert_eq!(Graph::from_graph6("C"), Err(ParseError::Truncated { expected: 1, found: 0 }));
        assert_eq!(Graph::from_graph6("~?"), Err(ParseError::BadHeader { offset: 2 }));
        assert_eq!(Graph::from_graph6("~??B"), Err(ParseError::BadHeader { offset: 1 }));
        assert!(matches!(Graph::from_graph6("~?A?"), Err(ParseError::TooManyVertices { n: 128, .. })));
        // K_3 payload with a padding bit set
        assert_eq!(Graph::from_graph6("Bx"), Err(ParseError::NonzeroPadding { offset: 1 }));
        assert_eq!(Graph::from_graph6("?"), Err(ParseError::NoVertices));
    }

    #[test]
    fn edge_list_parsing() {
        assert_eq!(Graph::from_edge_list("3\n0 1\n1 2\n0 2").unwrap(), k(3));
        assert_eq!(Graph::from_edge_list("3\n0 1\n1 2\n0 2\n2 0\n").unwrap(), k(3));
        let two = Graph::from_edge_list("2\n").unwrap();
        assert_eq!((two.n(), two.edge_count()), (2, 0));
        assert_eq!(Graph::from_edge_list("3\n0 0"), Err(ParseError::Loop { line: 2, vertex: 0 }));
        assert_eq!(Graph::from_edge_list("3\n0 3"), Err(ParseError::VertexOutOfRange { line: 2, vertex: 3, n: 3 }));
        assert!(matches!(Graph::from_edge_list("3\n0 x"), Err(ParseError::NotAnInteger { line: 2, .. })));
        assert_eq!(Graph::from_edge_list("3\n0 1 2"), Err(ParseError::BadEdgeLine { line: 2 }));
    }

    #[test]
    fn edge_list_blocks() {
        let gs = parse_edge_list_blocks("3\n0 1\n1 2\n0 2\n\n2\n\n\n1\n").unwrap();
        assert_eq!(gs.len(), 3);
        assert_eq!(gs[0], k(3));
        assert_eq!(gs[1].n(), 2);
        assert_eq!(gs[2].n(), 1);
    }

    #[test]
    fn families() {
        assert_eq!(k(4).edge_count(), 6);
        let kb = FamilySpec::CompleteBipartite(2, 4).generate().unwrap();
        assert_eq!((kb.n(), kb.edge_count()), (6, 8));
        assert!(kb.neighbors(0) == VertexSet(0b111100));
        let c5 = FamilySpec::Cycle(5).generate().unwrap();
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert!(FamilySpec::Cycle(2).generate().is_err());
        let p = FamilySpec::Petersen.generate().unwrap();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        let prism = FamilySpec::Prism(3).generate().unwrap();
        assert_eq!(prism.edge_count(), 9);
        let a = FamilySpec::Gnp { n: 5, num: 1, den: 2, seed: 7 }.generate().unwrap();
        let b = FamilySpec::Gnp { n: 5, num: 1, den: 2, seed: 7 }.generate().unwrap();
        assert_eq!(a, b);
        let full = FamilySpec::Gnp { n: 6, num: 1, den: 1, seed: 3 }.generate().unwrap();
        assert_eq!(full, k(6));
    }

    #[test]
    fn family_spec_strings() {
        for s in ["complete:4", "cycle:5", "path:3", "bipartite:2,4", "petersen", "prism:3", "gnp:6,1/2,7"] {
            let f: FamilySpec = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!("gnp:6,1/2".parse::<FamilySpec>().is_err());
        assert!("wheel:5".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let (h, map) = k(4).induced_subgraph(VertexSet::from_vertices([0, 2, 3])).unwrap();
        assert_eq!(h, k(3));
        assert_eq!(map, vec![0, 2, 3]);
        let c5 = FamilySpec::Cycle(5).generate().unwrap();
        let (p3, _) = c5.induced_subgraph(VertexSet::from_vertices([0, 1, 2])).unwrap();
        assert_eq!(p3, FamilySpec::Path(3).generate().unwrap());
        assert_eq!(c5.induced_subgraph(c5.vertices()).unwrap().0, c5);
        assert!(c5.induced_subgraph(VertexSet::EMPTY).is_err());
    }

    #[test]
    fn cores_and_degeneracy() {
        let c5 = FamilySpec::Cycle(5).generate().unwrap();
        assert_eq!(c5.core_within(c5.vertices(), 2), c5.vertices());
        assert_eq!(c5.core_within(c5.vertices(), 3), VertexSet::EMPTY);
        assert_eq!(c5.degeneracy_within(c5.vertices()), 2);
        assert_eq!(k(5).degeneracy_within(k(5).vertices()), 4);
        let order = k(4).degeneracy_order();
        assert_eq!(order.len(), 4);
        assert!(c5.complement().is_valid());
        assert_eq!(c5.complement().edge_count(), 5);
    }
}
