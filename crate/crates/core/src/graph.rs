//! Finite simple graphs on small integer labels.
//!
//! Vertex labels follow the usual conventions for the named families:
//! `K_n` and `C_n` live on `{1..n}`, the path `P_n` with `n` edges on `{0..n}`.
//! Labels must be below 64 so that vertex sets fit in a single machine word.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::poset::{Payload, Poset};

pub const MAX_LABEL: u32 = 63;

/// A set of vertex labels in `0..=63`, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "Vec<u32>")]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(label: u32) -> Result<Self> {
        check_label(label)?;
        Ok(VertexSet(1 << label))
    }

    pub fn from_labels<I: IntoIterator<Item = u32>>(labels: I) -> Result<Self> {
        let mut bits = 0u64;
        for l in labels {
            check_label(l)?;
            bits |= 1 << l;
        }
        Ok(VertexSet(bits))
    }

    /// `{lo, lo+1, ..., hi}`; empty when `hi < lo`.
    pub fn range(lo: u32, hi: u32) -> Result<Self> {
        if hi < lo {
            return Ok(VertexSet::EMPTY);
        }
        check_label(hi)?;
        Ok(VertexSet::from_labels(lo..=hi).expect("labels checked"))
    }

    #[inline]
    pub fn contains(self, label: u32) -> bool {
        label <= MAX_LABEL && self.0 >> label & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn with(self, label: u32) -> VertexSet {
        debug_assert!(label <= MAX_LABEL);
        VertexSet(self.0 | 1 << label)
    }

    pub fn without(self, label: u32) -> VertexSet {
        if label > MAX_LABEL {
            return self;
        }
        VertexSet(self.0 & !(1 << label))
    }

    /// Smallest label, if any.
    pub fn min(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros())
    }

    /// Labels in increasing order.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut w = self.0;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let t = w.trailing_zeros();
                w &= w - 1;
                Some(t)
            }
        })
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        // standard submask enumeration, run upward from 0
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(VertexSet(cur))
        })
    }
}

impl From<VertexSet> for Vec<u32> {
    fn from(s: VertexSet) -> Self {
        s.iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, l) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn check_label(label: u32) -> Result<()> {
    if label > MAX_LABEL {
        Err(Error::LabelOverflow(label))
    } else {
        Ok(())
    }
}

/// The named families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Path,
    Complete,
    Cycle,
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" | "P" => Ok(GraphKind::Path),
            "complete" | "K" => Ok(GraphKind::Complete),
            "cycle" | "C" => Ok(GraphKind::Cycle),
            other => Err(Error::InvalidParameter(format!("unknown graph family `{other}`"))),
        }
    }
}

/// A finite simple loopless graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: VertexSet,
    adjacency: [VertexSet; 64],
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and unknown endpoints.
    pub fn new<I>(vertices: VertexSet, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut adjacency = [VertexSet::EMPTY; 64];
        for (u, v) in edges {
            for x in [u, v] {
                check_label(x)?;
                if !vertices.contains(x) {
                    return Err(Error::UnknownVertex(x));
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            if adjacency[u as usize].contains(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adjacency[u as usize] = adjacency[u as usize].with(v);
            adjacency[v as usize] = adjacency[v as usize].with(u);
        }
        Ok(Graph { vertices, adjacency })
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn neighbors(&self, v: u32) -> VertexSet {
        if v > MAX_LABEL {
            return VertexSet::EMPTY;
        }
        self.adjacency[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.neighbors(u).contains(v)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        self.vertices
            .iter()
            .flat_map(|u| self.neighbors(u).iter().filter(move |&v| u < v).map(move |v| (u, v)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    fn check_subset(&self, s: VertexSet) -> Result<()> {
        match s.difference(self.vertices).min() {
            Some(bad) => Err(Error::UnknownVertex(bad)),
            None => Ok(()),
        }
    }

    /// `ν(S)`: vertices adjacent to every element of `S`; `ν(∅) = V(G)`.
    pub fn common_neighbors(&self, s: VertexSet) -> Result<VertexSet> {
        self.check_subset(s)?;
        Ok(s.iter().fold(self.vertices, |acc, v| acc.intersection(self.neighbors(v))))
    }

    /// Same as [`Graph::common_neighbors`] for a set already known to be valid.
    pub(crate) fn nu(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(self.vertices, |acc, v| acc.intersection(self.neighbors(v)))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.is_subset(self.vertices) && s.iter().all(|v| self.neighbors(v).is_disjoint(s))
    }

    /// All independent sets, including `∅`, ordered by size then bitmask.
    pub fn independent_set_list(&self) -> Vec<VertexSet> {
        let verts: Vec<u32> = self.vertices.iter().collect();
        let mut out = Vec::new();
        fn rec(g: &Graph, verts: &[u32], start: usize, cur: VertexSet, out: &mut Vec<VertexSet>) {
            out.push(cur);
            for i in start..verts.len() {
                let v = verts[i];
                if g.neighbors(v).is_disjoint(cur) {
                    rec(g, verts, i + 1, cur.with(v), out);
                }
            }
        }
        rec(self, &verts, 0, VertexSet::EMPTY, &mut out);
        out.sort_by_key(|s| (s.len(), s.bits()));
        out
    }

    /// `ind(G)`: independent sets ordered by inclusion, `∅` included.
    pub fn independent_sets(&self) -> Poset {
        let sets = self.independent_set_list();
        Poset::from_leq(sets.iter().map(|&s| Payload::Set(s)).collect(), |a, b| {
            sets[a].is_subset(sets[b])
        })
        .expect("inclusion is a partial order")
    }

    /// `Ind(G)`: the simplicial complex of nonempty independent sets.
    pub fn independence_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_faces(
            self.independent_set_list()
                .into_iter()
                .filter(|s| !s.is_empty())
                .map(|s| s.iter().collect::<Vec<_>>()),
        )
    }

    /// The induced subgraph on `V(G) \ S`, labels retained.
    pub fn delete_vertices(&self, s: VertexSet) -> Result<Graph> {
        self.check_subset(s)?;
        let keep = self.vertices.difference(s);
        let edges = self.edges().into_iter().filter(|&(u, v)| keep.contains(u) && keep.contains(v));
        Graph::new(keep, edges)
    }

    /// Checks that `f` maps `V(self)` into `V(target)` respecting adjacency.
    pub fn is_homomorphism(&self, target: &Graph, f: &BTreeMap<u32, u32>) -> Result<()> {
        for v in self.vertices.iter() {
            let Some(&fv) = f.get(&v) else {
                return Err(Error::NotHomomorphism(format!("vertex {v} is not mapped")));
            };
            if !target.vertices.contains(fv) {
                return Err(Error::NotHomomorphism(format!("image {fv} of {v} is not a vertex")));
            }
        }
        for (u, v) in self.edges() {
            if !target.has_edge(f[&u], f[&v]) {
                return Err(Error::NotHomomorphism(format!(
                    "edge {{{u},{v}}} maps to non-edge {{{},{}}}",
                    f[&u], f[&v]
                )));
            }
        }
        Ok(())
    }

    /// Parses the plain-text edge list: `n <count>` then one `u v` per line.
    ///
    /// Vertices are `{1..n}` unless label `0` occurs, in which case they are
    /// `{0..n-1}` (the path convention). `#` starts a comment.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut count = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse { line: i + 1, message };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if count.is_none() {
                match fields.as_slice() {
                    ["n", c] => {
                        count = Some(c.parse::<u32>().map_err(|e| err(format!("bad vertex count: {e}")))?)
                    }
                    _ => return Err(err("expected header `n <vertex_count>`".into())),
                }
                continue;
            }
            match fields.as_slice() {
                [u, v] => {
                    let u = u.parse::<u32>().map_err(|e| err(format!("bad label: {e}")))?;
                    let v = v.parse::<u32>().map_err(|e| err(format!("bad label: {e}")))?;
                    if u == v {
                        return Err(err(format!("loop at vertex {u}")));
                    }
                    let key = (u.min(v), u.max(v));
                    if edges.contains(&key) {
                        return Err(err(format!("duplicate edge {{{},{}}}", key.0, key.1)));
                    }
                    edges.push(key);
                }
                _ => return Err(err("expected `u v`".into())),
            }
        }
        let n = count.ok_or(Error::Parse { line: 0, message: "missing header".into() })?;
        let zero_based = edges.iter().any(|&(u, _)| u == 0);
        let vertices = if n == 0 {
            VertexSet::EMPTY
        } else if zero_based {
            VertexSet::range(0, n - 1)?
        } else {
            VertexSet::range(1, n)?
        };
        Graph::new(vertices, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.vertex_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses a literal such as `cycle:5`, `complete:4` or `path:2`.
    pub fn from_literal(literal: &str) -> Result<Graph> {
        let (kind, n) = literal
            .split_once(':')
            .ok_or_else(|| Error::InvalidParameter(format!("graph literal `{literal}` is not kind:n")))?;
        let n = n
            .parse::<u32>()
            .map_err(|_| Error::InvalidParameter(format!("bad size in graph literal `{literal}`")))?;
        build_named(kind.parse()?, n)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("vertices", &self.vertices).field("edges", &self.edges()).finish()
    }
}

/// `P_n`, `K_n` or `C_n` with the standard labelling.
pub fn build_named(kind: GraphKind, n: u32) -> Result<Graph> {
    match kind {
        GraphKind::Path => {
            if n > MAX_LABEL {
                return Err(Error::LabelOverflow(n));
            }
            Graph::new(VertexSet::range(0, n)?, (0..n).map(|i| (i, i + 1)))
        }
        GraphKind::Complete => {
            if n < 1 {
                return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
            }
            let v = VertexSet::range(1, n)?;
            Graph::new(v, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))))
        }
        GraphKind::Cycle => {
            if n < 3 {
                return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
            }
            let v = VertexSet::range(1, n)?;
            Graph::new(v, (1..n).map(|i| (i, i + 1)).chain(std::iter::once((n, 1))))
        }
    }
}

pub fn path(n: u32) -> Graph {
    build_named(GraphKind::Path, n).expect("valid path size")
}

pub fn complete(n: u32) -> Graph {
    build_named(GraphKind::Complete, n).expect("valid complete graph size")
}

pub fn cycle(n: u32) -> Graph {
    build_named(GraphKind::Cycle, n).expect("valid cycle size")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(l: &[u32]) -> VertexSet {
        VertexSet::from_labels(l.iter().copied()).unwrap()
    }

    #[test]
    fn named_families() {
        let c5 = cycle(5);
        assert_eq!(c5.vertices(), set(&[1, 2, 3, 4, 5]));
        assert_eq!(c5.edges(), vec![(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)]);
        assert_eq!(complete(3).edge_count(), 3);
        let p2 = path(2);
        assert_eq!(p2.vertices(), set(&[0, 1, 2]));
        assert_eq!(p2.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(path(0).vertex_count(), 1);
    }

    #[test]
    fn named_family_domain_errors() {
        assert!(matches!(build_named(GraphKind::Cycle, 2), Err(Error::InvalidParameter(_))));
        assert!(matches!(build_named(GraphKind::Complete, 0), Err(Error::InvalidParameter(_))));
        assert!(matches!(build_named(GraphKind::Complete, 64), Err(Error::LabelOverflow(64))));
    }

    #[test]
    fn common_neighbours() {
        let c5 = cycle(5);
        assert_eq!(c5.common_neighbors(set(&[1])).unwrap(), set(&[2, 5]));
        assert_eq!(c5.common_neighbors(set(&[1, 3])).unwrap(), set(&[2]));
        assert_eq!(complete(3).common_neighbors(VertexSet::EMPTY).unwrap(), set(&[1, 2, 3]));
        assert_eq!(c5.common_neighbors(set(&[6])), Err(Error::UnknownVertex(6)));
    }

    #[test]
    fn independent_sets_of_small_graphs() {
        // 1 empty + 5 singletons + 5 non-adjacent pairs
        assert_eq!(cycle(5).independent_set_list().len(), 11);
        assert_eq!(complete(2).independent_set_list(), vec![VertexSet::EMPTY, set(&[1]), set(&[2])]);
        let ind = complete(2).independent_sets();
        assert_eq!(ind.len(), 3);
    }

    #[test]
    fn independence_complexes() {
        let pentagon = cycle(5).independence_complex();
        assert_eq!(pentagon.f_vector().counts, vec![5, 5]);
        let s0 = complete(2).independence_complex();
        assert_eq!(s0.f_vector().counts, vec![2]);
        assert_eq!(complete(1).independence_complex().f_vector().counts, vec![1]);
    }

    #[test]
    fn vertex_deletion() {
        let g = cycle(5).delete_vertices(set(&[2, 4])).unwrap();
        assert_eq!(g.vertices(), set(&[1, 3, 5]));
        assert_eq!(g.edges(), vec![(1, 5)]);
        assert_eq!(complete(3).delete_vertices(set(&[3])).unwrap(), complete(2));
        let p = path(2).delete_vertices(set(&[1])).unwrap();
        assert_eq!(p.vertices(), set(&[0, 2]));
        assert!(p.edges().is_empty());
        assert_eq!(complete(3).delete_vertices(set(&[7])), Err(Error::UnknownVertex(7)));
    }

    #[test]
    fn edge_list_round_trip_and_rejections() {
        let text = "# pentagon\nn 5\n1 2\n2 3\n3 4\n4 5\n5 1\n";
        assert_eq!(Graph::parse_edge_list(text).unwrap(), cycle(5));
        assert_eq!(Graph::parse_edge_list(&path(3).to_edge_list()).unwrap(), path(3));
        assert!(matches!(Graph::parse_edge_list("n 3\n1 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Graph::parse_edge_list("n 3\n1 2\n2 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(Graph::parse_edge_list("n 2\n1 3\n").is_err());
    }

    #[test]
    fn literals() {
        assert_eq!(Graph::from_literal("cycle:5").unwrap(), cycle(5));
        assert_eq!(Graph::from_literal("complete:4").unwrap(), complete(4));
        assert!(Graph::from_literal("star:4").is_err());
    }

    #[test]
    fn subsets_enumerates_all_submasks() {
        let s = set(&[1, 3, 4]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
    }
}
