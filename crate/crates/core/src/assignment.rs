//! List assignments, partial colorings, and the algebra between them.
//!
//! Colors are small dense integers. A list is a `u64` bitmask, so a palette
//! holds at most 64 colors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph, VertexSet};

pub const MAX_PALETTE: usize = 64;

/// A list of allowed colors for every vertex of one graph.
///
/// Either every list is nonempty, or every list is empty (the 0-uniform
/// assignment). Equality ignores the palette bound.
#[derive(Clone)]
pub struct ListAssignment {
    graph: String,
    lists: Vec<u64>,
    palette: usize,
}

impl PartialEq for ListAssignment {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph && self.lists == other.lists
    }
}

impl Eq for ListAssignment {}

impl std::hash::Hash for ListAssignment {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.graph.hash(state);
        self.lists.hash(state);
    }
}

impl fmt::Debug for ListAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.graph)?;
        f.debug_list().entries(self.lists.iter().map(|&l| Bits(l).collect::<Vec<_>>())).finish()
    }
}

impl ListAssignment {
    /// Builds an assignment from bitmask lists; every color must be `< palette`.
    pub fn new(g: &Graph, lists: Vec<u64>, palette: usize) -> Result<Self> {
        Self::from_parts(g.to_graph6(), g.n(), lists, palette)
    }

    fn from_parts(graph: String, n: usize, lists: Vec<u64>, palette: usize) -> Result<Self> {
        if lists.len() != n {
            return Err(Error::InvalidAssignment(format!("{} lists for {n} vertices", lists.len())));
        }
        if palette > MAX_PALETTE {
            return Err(Error::InvalidAssignment(format!("palette {palette} exceeds 64 colors")));
        }
        let allowed = if palette == 64 { u64::MAX } else { (1u64 << palette) - 1 };
        if let Some(v) = lists.iter().position(|&l| l & !allowed != 0) {
            return Err(Error::InvalidAssignment(format!("vertex {v} uses a color outside the palette 0..{palette}")));
        }
        let empty = lists.iter().filter(|&&l| l == 0).count();
        if empty != 0 && empty != n {
            return Err(Error::InvalidAssignment("some but not all lists are empty".to_string()));
        }
        Ok(ListAssignment { graph, lists, palette })
    }

    /// Builds an assignment from arbitrary nonnegative color labels,
    /// relabeling them to `0..k` in increasing order.
    pub fn from_color_lists(g: &Graph, lists: &[Vec<u32>]) -> Result<Self> {
        Self::relabeled(g.to_graph6(), g.n(), lists)
    }

    fn relabeled(graph: String, n: usize, lists: &[Vec<u32>]) -> Result<Self> {
        let mut colors: Vec<u32> = lists.iter().flatten().copied().collect();
        colors.sort_unstable();
        colors.dedup();
        if colors.len() > MAX_PALETTE {
            return Err(Error::InvalidAssignment(format!(
                "{} distinct colors; at most 64 are supported",
                colors.len()
            )));
        }
        let masks = lists
            .iter()
            .map(|l| l.iter().fold(0u64, |m, c| m | 1u64 << colors.binary_search(c).expect("present")))
            .collect();
        Self::from_parts(graph, n, masks, colors.len())
    }

    /// Every vertex gets `{0, ..., t-1}`.
    pub fn constant(g: &Graph, t: usize) -> Result<Self> {
        if t > MAX_PALETTE {
            return Err(Error::InvalidAssignment(format!("list size {t} exceeds 64")));
        }
        let mask = if t == 64 { u64::MAX } else { (1u64 << t) - 1 };
        Self::new(g, vec![mask; g.n()], t)
    }

    /// graph6 string of the graph this assignment is bound to.
    pub fn graph6(&self) -> &str {
        &self.graph
    }

    pub fn is_bound_to(&self, g: &Graph) -> bool {
        self.lists.len() == g.n() && self.graph == g.to_graph6()
    }

    pub fn ensure_bound_to(&self, g: &Graph) -> Result<()> {
        if self.is_bound_to(g) {
            Ok(())
        } else {
            Err(Error::GraphMismatch { graph: g.to_graph6(), assignment: self.graph.clone() })
        }
    }

    pub fn n(&self) -> usize {
        self.lists.len()
    }

    /// All colors are `< palette`.
    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn masks(&self) -> &[u64] {
        &self.lists
    }

    pub fn list(&self, v: usize) -> u64 {
        self.lists[v]
    }

    pub fn colors(&self, v: usize) -> impl Iterator<Item = usize> {
        Bits(self.lists[v])
    }

    /// `Some(t)` if every list has exactly `t` colors.
    pub fn uniform_size(&self) -> Option<usize> {
        let t = self.lists.first().map_or(0, |l| l.count_ones() as usize);
        self.lists.iter().all(|l| l.count_ones() as usize == t).then_some(t)
    }

    /// The union of all lists.
    pub fn color_list(&self) -> u64 {
        self.lists.iter().fold(0, |a, &l| a | l)
    }

    pub fn max_list_size(&self) -> usize {
        self.lists.iter().map(|l| l.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn to_color_lists(&self) -> Vec<Vec<u32>> {
        self.lists.iter().map(|&l| Bits(l).map(|c| c as u32).collect()).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct AssignmentJson {
    graph: String,
    lists: Vec<Vec<u32>>,
}

impl Serialize for ListAssignment {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AssignmentJson { graph: self.graph.clone(), lists: self.to_color_lists() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ListAssignment {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = AssignmentJson::deserialize(d)?;
        let g = Graph::from_graph6(&raw.graph).map_err(serde::de::Error::custom)?;
        ListAssignment::relabeled(raw.graph, g.n(), &raw.lists).map_err(serde::de::Error::custom)
    }
}

/// A coloring of some of the vertices. `None` means uncolored.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PartialColoring {
    colors: Vec<Option<u8>>,
}

impl fmt::Debug for PartialColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.colors.iter().map(|c| c.map_or(-1, i32::from))).finish()
    }
}

impl PartialColoring {
    pub fn uncolored(n: usize) -> Self {
        PartialColoring { colors: vec![None; n] }
    }

    pub fn from_colors(colors: Vec<Option<u8>>) -> Self {
        PartialColoring { colors }
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn get(&self, v: usize) -> Option<u8> {
        self.colors[v]
    }

    pub fn set(&mut self, v: usize, c: Option<u8>) {
        self.colors[v] = c;
    }

    pub fn colors(&self) -> &[Option<u8>] {
        &self.colors
    }

    pub fn colored_set(&self) -> VertexSet {
        VertexSet::from_vertices(self.colors.iter().enumerate().filter_map(|(v, c)| c.map(|_| v)))
    }

    pub fn colored_count(&self) -> usize {
        self.colors.iter().filter(|c| c.is_some()).count()
    }

    /// Adjacent colored vertices get different colors.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && g.edges().all(|(u, v)| match (self.colors[u], self.colors[v]) {
                (Some(a), Some(b)) => a != b,
                _ => true,
            })
    }

    /// Every colored vertex uses a color from its own list.
    pub fn conforms_to(&self, l: &ListAssignment) -> bool {
        self.colors.len() == l.n()
            && self.colors.iter().enumerate().all(|(v, c)| c.is_none_or(|c| c < 64 && l.list(v) >> c & 1 == 1))
    }

    /// Proper, conformant, and bound to `g`.
    pub fn validate(&self, g: &Graph, l: &ListAssignment) -> Result<()> {
        l.ensure_bound_to(g)?;
        if !self.is_proper(g) {
            return Err(Error::InvalidColoring("adjacent vertices share a color".into()));
        }
        if !self.conforms_to(l) {
            return Err(Error::InvalidColoring("a vertex is colored outside its list".into()));
        }
        Ok(())
    }
}

/// The union of two uniform assignments over disjoint palettes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinedAssignment {
    pub assignment: ListAssignment,
    /// Colors of the second assignment are shifted up by this much.
    pub shift: usize,
}

/// `v -> L1(v) ∪ (L2(v) + p1)`, where `p1` is the palette bound of `L1`, so
/// the two color lists are disjoint and the result is `(r+s)`-uniform.
pub fn combine_assignments(l1: &ListAssignment, l2: &ListAssignment) -> Result<CombinedAssignment> {
    if l1.graph != l2.graph || l1.n() != l2.n() {
        return Err(Error::GraphMismatch { graph: l1.graph.clone(), assignment: l2.graph.clone() });
    }
    if l1.uniform_size().is_none() || l2.uniform_size().is_none() {
        return Err(Error::InvalidAssignment("combination needs uniform assignments".into()));
    }
    let shift = l1.palette;
    let palette = shift + l2.palette;
    if palette > MAX_PALETTE {
        return Err(Error::InvalidAssignment(format!("combined palette {palette} exceeds 64")));
    }
    let lists = l1.lists.iter().zip(&l2.lists).map(|(&a, &b)| a | b << shift).collect();
    let assignment = ListAssignment::from_parts(l1.graph.clone(), l1.n(), lists, palette)?;
    Ok(CombinedAssignment { assignment, shift })
}

/// Splits the colored vertices of a coloring under the combined assignment
/// into those using a color of `L1` and those using a (shifted) color of `L2`.
pub fn split_coloring(l1: &ListAssignment, l2: &ListAssignment, c: &PartialColoring) -> Result<(VertexSet, VertexSet)> {
    let combined = combine_assignments(l1, l2)?;
    if !c.conforms_to(&combined.assignment) {
        return Err(Error::InvalidColoring("coloring does not conform to the combined assignment".into()));
    }
    let mut first = VertexSet::EMPTY;
    let mut second = VertexSet::EMPTY;
    for (v, color) in c.colors.iter().enumerate() {
        let Some(color) = color.map(usize::from) else { continue };
        if color < combined.shift {
            first = first.with(v);
        } else {
            second = second.with(v);
        }
    }
    Ok((first, second))
}

/// The restriction of `l` to the subgraph induced by `s`, with the induced
/// subgraph and the map from its vertices to the originals.
pub fn restrict_assignment(g: &Graph, l: &ListAssignment, s: VertexSet) -> Result<(Graph, ListAssignment, Vec<usize>)> {
    l.ensure_bound_to(g)?;
    let (h, map) = g.induced_subgraph(s)?;
    let lists = map.iter().map(|&v| l.lists[v]).collect();
    let restricted = ListAssignment::new(&h, lists, l.palette)?;
    Ok((h, restricted, map))
}

/// `L1(v) ⊆ L2(v)` for every vertex.
pub fn is_sub_assignment(l1: &ListAssignment, l2: &ListAssignment) -> Result<bool> {
    if l1.graph != l2.graph || l1.n() != l2.n() {
        return Err(Error::GraphMismatch { graph: l2.graph.clone(), assignment: l1.graph.clone() });
    }
    Ok(l1.lists.iter().zip(&l2.lists).all(|(&a, &b)| a & !b == 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn c4() -> Graph {
        FamilySpec::Cycle(4).generate().unwrap()
    }

    #[test]
    fn construction_rules() {
        let g = c4();
        assert!(ListAssignment::new(&g, vec![1, 1, 1], 1).is_err());
        assert!(ListAssignment::new(&g, vec![1, 0, 1, 1], 1).is_err());
        assert!(ListAssignment::new(&g, vec![0; 4], 0).is_ok());
        assert!(ListAssignment::new(&g, vec![2, 1, 1, 1], 1).is_err());
        let l = ListAssignment::from_color_lists(&g, &[vec![5], vec![9, 5], vec![7], vec![5]]).unwrap();
        assert_eq!(l.to_color_lists(), vec![vec![0], vec![0, 2], vec![1], vec![0]]);
        assert_eq!(l.palette(), 3);
        assert_eq!(l.uniform_size(), None);
        assert_eq!(ListAssignment::constant(&g, 2).unwrap().uniform_size(), Some(2));
    }

    #[test]
    fn json_shape_is_stable() {
        let g = c4();
        let l = ListAssignment::constant(&g, 2).unwrap();
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(s, r#"{"graph":"Cl","lists":[[0,1],[0,1],[0,1],[0,1]]}"#);
        let back: ListAssignment = serde_json::from_str(&s).unwrap();
        assert_eq!(back, l);
        assert!(serde_json::from_str::<ListAssignment>(r#"{"graph":"Cl","lists":[[0]]}"#).is_err());
    }

    #[test]
    fn combine_shifts_second_palette() {
        let g = c4();
        let zero = ListAssignment::constant(&g, 1).unwrap();
        let c = combine_assignments(&zero, &zero).unwrap();
        assert_eq!(c.shift, 1);
        assert!(c.assignment.masks().iter().all(|&m| m == 0b11));
        assert_eq!(c.assignment.uniform_size(), Some(2));
        let nonuniform = ListAssignment::new(&g, vec![1, 3, 1, 1], 2).unwrap();
        assert!(combine_assignments(&zero, &nonuniform).is_err());
        let k3 = FamilySpec::Complete(3).generate().unwrap();
        assert!(combine_assignments(&zero, &ListAssignment::constant(&k3, 1).unwrap()).is_err());
    }

    #[test]
    fn split_partitions_colored_vertices() {
        let g = c4();
        let l1 = ListAssignment::constant(&g, 1).unwrap();
        let l2 = ListAssignment::constant(&g, 2).unwrap();
        let empty = PartialColoring::uncolored(4);
        assert_eq!(split_coloring(&l1, &l2, &empty).unwrap(), (VertexSet::EMPTY, VertexSet::EMPTY));
        let only_first = PartialColoring::from_colors(vec![Some(0), None, Some(0), None]);
        let (r, s) = split_coloring(&l1, &l2, &only_first).unwrap();
        assert_eq!((r.len(), s.len()), (2, 0));
        let mixed = PartialColoring::from_colors(vec![Some(0), Some(1), Some(0), Some(2)]);
        let (r, s) = split_coloring(&l1, &l2, &mixed).unwrap();
        assert_eq!(r, VertexSet::from_vertices([0, 2]));
        assert_eq!(s, VertexSet::from_vertices([1, 3]));
        let outside = PartialColoring::from_colors(vec![Some(3), None, None, None]);
        assert!(split_coloring(&l1, &l2, &outside).is_err());
    }

    #[test]
    fn restriction_and_sub_assignment() {
        let g = c4();
        let l = ListAssignment::from_color_lists(&g, &[vec![0, 1], vec![1, 2], vec![0, 2], vec![0, 1]]).unwrap();
        let (h, r, map) = restrict_assignment(&g, &l, g.vertices()).unwrap();
        assert_eq!(h, g);
        assert_eq!(r, l);
        assert_eq!(map, vec![0, 1, 2, 3]);
        let (h, r, _) = restrict_assignment(&g, &l, VertexSet::from_vertices([1, 3])).unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(r.uniform_size(), Some(2));
        assert_eq!(r.masks(), &[0b110, 0b011]);
        assert!(restrict_assignment(&g, &l, VertexSet::EMPTY).is_err());

        assert!(is_sub_assignment(&l, &l).unwrap());
        let zero = ListAssignment::constant(&g, 1).unwrap();
        let zero_one = ListAssignment::constant(&g, 2).unwrap();
        assert!(is_sub_assignment(&zero, &zero_one).unwrap());
        assert!(!is_sub_assignment(&zero_one, &zero).unwrap());
        assert!(!is_sub_assignment(&l, &zero_one).unwrap());
    }

    #[test]
    fn coloring_checks() {
        let g = c4();
        let l = ListAssignment::constant(&g, 2).unwrap();
        let good = PartialColoring::from_colors(vec![Some(0), Some(1), Some(0), Some(1)]);
        assert!(good.validate(&g, &l).is_ok());
        let clash = PartialColoring::from_colors(vec![Some(0), Some(0), None, None]);
        assert!(clash.validate(&g, &l).is_err());
        let off_list = PartialColoring::from_colors(vec![Some(2), None, None, None]);
        assert!(off_list.validate(&g, &l).is_err());
        assert_eq!(good.colored_count(), 4);
    }
}
