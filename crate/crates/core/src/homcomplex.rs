//! Multi-homomorphisms, the face posets of `Hom(G, H)`, and their restricted
//! models `Hom_S(G, H)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::homology::{ChainComplex, SparseMatrix};
use crate::poset::{Payload, Poset, PosetMap};

/// A cell of `Hom(G, H)`: a nonempty colour set for each vertex of `G`.
///
/// `colours[i]` belongs to the `i`-th smallest label of `domain`. The derived
/// order (domain, then colour bitmasks vertex by vertex) is the canonical
/// enumeration order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MultiHom {
    domain: VertexSet,
    colours: Vec<VertexSet>,
}

impl MultiHom {
    pub fn new(domain: VertexSet, colours: Vec<VertexSet>) -> Result<Self> {
        if colours.len() != domain.len() {
            return Err(Error::InvalidParameter(format!(
                "{} colour sets for {} vertices",
                colours.len(),
                domain.len()
            )));
        }
        if let Some(i) = colours.iter().position(|c| c.is_empty()) {
            return Err(Error::NotHomomorphism(format!("empty colour set at vertex {}", domain.iter().nth(i).unwrap())));
        }
        Ok(MultiHom { domain, colours })
    }

    pub fn from_pairs<I: IntoIterator<Item = (u32, VertexSet)>>(pairs: I) -> Result<Self> {
        let map: BTreeMap<u32, VertexSet> = pairs.into_iter().collect();
        let domain = VertexSet::from_labels(map.keys().copied())?;
        MultiHom::new(domain, map.into_values().collect())
    }

    pub fn domain(&self) -> VertexSet {
        self.domain
    }

    /// `φ(v)`; empty when `v` is outside the domain.
    pub fn get(&self, v: u32) -> VertexSet {
        if !self.domain.contains(v) {
            return VertexSet::EMPTY;
        }
        let pos = VertexSet::from_bits(self.domain.bits() & ((1u64 << v) - 1)).len();
        self.colours[pos]
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, VertexSet)> + '_ {
        self.domain.iter().zip(self.colours.iter().copied())
    }

    /// Cell dimension `Σ (|φ(v)| - 1)`.
    pub fn dim(&self) -> usize {
        self.colours.iter().map(|c| c.len() - 1).sum()
    }

    /// Vertex-wise inclusion.
    pub fn is_le(&self, other: &MultiHom) -> bool {
        self.domain == other.domain && self.colours.iter().zip(&other.colours).all(|(a, b)| a.is_subset(*b))
    }

    /// Restriction to the vertices in `keep`.
    pub fn restrict(&self, keep: VertexSet) -> MultiHom {
        MultiHom {
            domain: self.domain.intersection(keep),
            colours: self.iter().filter(|(v, _)| keep.contains(*v)).map(|(_, c)| c).collect(),
        }
    }

    /// Checks the multi-homomorphism condition for `G → H`.
    pub fn validate(&self, g: &Graph, h: &Graph) -> Result<()> {
        if self.domain != g.vertices() {
            return Err(Error::NotHomomorphism(format!("domain {} differs from V(G) = {}", self.domain, g.vertices())));
        }
        for (v, c) in self.iter() {
            if !c.is_subset(h.vertices()) {
                return Err(Error::NotHomomorphism(format!("colours {c} of vertex {v} are not vertices of H")));
            }
        }
        for (u, v) in g.edges() {
            if !self.get(v).is_subset(h.nu(self.get(u))) {
                return Err(Error::NotHomomorphism(format!("edge {{{u},{v}}} is not respected")));
            }
        }
        Ok(())
    }

    /// One-line form, e.g. `1:{1} 3:{2} 5:{3,4}`.
    pub fn compact(&self) -> String {
        self.iter().map(|(v, c)| format!("{v}:{c}")).collect::<Vec<_>>().join(" ")
    }

    /// Text form, one `v: {c1,c2}` line per vertex.
    pub fn to_text(&self) -> String {
        self.iter().map(|(v, c)| format!("{v}: {c}\n")).collect()
    }

    pub fn parse(text: &str) -> Result<MultiHom> {
        let mut pairs = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse { line: i + 1, message };
            let (v, rest) = line.split_once(':').ok_or_else(|| err("expected `v: {c1,c2}`".into()))?;
            let v: u32 = v.trim().parse().map_err(|_| err(format!("bad vertex {v:?}")))?;
            let inner = rest
                .trim()
                .strip_prefix('{')
                .and_then(|s| s.strip_suffix('}'))
                .ok_or_else(|| err("expected a braced colour set".into()))?;
            let colours = inner
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse::<u32>().map_err(|_| err(format!("bad colour {s:?}"))))
                .collect::<Result<Vec<u32>>>()?;
            pairs.push((v, VertexSet::from_labels(colours)?));
        }
        MultiHom::from_pairs(pairs)
    }

    /// Colour slices `c ↦ {u : c ∈ φ(u)}` for every vertex `c` of `h`.
    pub fn color_slices(&self, h: &Graph) -> Vec<(u32, VertexSet)> {
        h.vertices()
            .iter()
            .map(|c| {
                let slice = self.iter().filter(|(_, s)| s.contains(c)).map(|(u, _)| u);
                (c, VertexSet::from_labels(slice).expect("labels valid"))
            })
            .collect()
    }
}

impl fmt::Display for MultiHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

impl fmt::Debug for MultiHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiHom({})", self.compact())
    }
}

fn is_complete(h: &Graph) -> bool {
    let n = h.vertex_count();
    h.edge_count() == n * n.saturating_sub(1) / 2
}

/// All multi-homomorphisms `G → H`, sorted canonically.
///
/// Depth-first over the vertices of `G` in increasing label order: the colour
/// set of a vertex ranges over nonempty subsets of the common neighbours of
/// the colours already placed on its earlier neighbours. For complete `H` the
/// common-neighbour set is just the complement of those colours.
pub fn enumerate_multihoms(g: &Graph, h: &Graph) -> Vec<MultiHom> {
    enumerate_with(g, h, is_complete(h))
}

/// Same as [`enumerate_multihoms`] without the complete-graph shortcut.
pub fn enumerate_multihoms_general(g: &Graph, h: &Graph) -> Vec<MultiHom> {
    enumerate_with(g, h, false)
}

fn enumerate_with(g: &Graph, h: &Graph, complete: bool) -> Vec<MultiHom> {
    let verts: Vec<u32> = g.vertices().iter().collect();
    if verts.is_empty() {
        return vec![MultiHom { domain: VertexSet::EMPTY, colours: Vec::new() }];
    }
    // allowed colours for vertex i given the choices for vertices < i
    let allowed = |i: usize, chosen: &[VertexSet]| -> VertexSet {
        let v = verts[i];
        let earlier = verts[..i].iter().zip(chosen).filter(|(u, _)| g.has_edge(**u, v));
        if complete {
            let used = earlier.fold(VertexSet::EMPTY, |acc, (_, c)| acc.union(*c));
            h.vertices().difference(used)
        } else {
            earlier.fold(h.vertices(), |acc, (_, c)| acc.intersection(h.nu(*c)))
        }
    };
    fn rec(
        i: usize,
        chosen: &mut Vec<VertexSet>,
        n: usize,
        allowed: &dyn Fn(usize, &[VertexSet]) -> VertexSet,
        out: &mut Vec<Vec<VertexSet>>,
    ) {
        if i == n {
            out.push(chosen.clone());
            return;
        }
        let a = allowed(i, chosen);
        for s in a.subsets().filter(|s| !s.is_empty()) {
            chosen.push(s);
            rec(i + 1, chosen, n, allowed, out);
            chosen.pop();
        }
    }
    let first: Vec<VertexSet> = allowed(0, &[]).subsets().filter(|s| !s.is_empty()).collect();
    let n = verts.len();
    let domain = g.vertices();
    let mut all: Vec<MultiHom> = first
        .par_iter()
        .flat_map_iter(|&s| {
            let mut out = Vec::new();
            let mut chosen = vec![s];
            rec(1, &mut chosen, n, &allowed, &mut out);
            out.into_iter().map(move |colours| MultiHom { domain, colours })
        })
        .collect();
    all.par_sort_unstable();
    all
}

/// Poset on the given multi-homomorphisms (all with the same domain), ordered
/// by vertex-wise inclusion.
pub fn multihom_poset(cells: Vec<MultiHom>) -> Poset {
    let index: HashMap<&MultiHom, usize> = cells.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut covers = Vec::new();
    for (i, c) in cells.iter().enumerate() {
        for (k, col) in c.colours.iter().enumerate() {
            if col.len() < 2 {
                continue;
            }
            for x in col.iter() {
                let mut smaller = c.clone();
                smaller.colours[k] = col.without(x);
                if let Some(&j) = index.get(&smaller) {
                    covers.push((j, i));
                }
            }
        }
    }
    let elements = cells.iter().cloned().map(Payload::Hom).collect();
    Poset::from_relation(elements, &covers).expect("inclusion order is acyclic")
}

/// Face poset of `Hom(G, H)`.
pub fn hom_poset(g: &Graph, h: &Graph) -> Poset {
    multihom_poset(enumerate_multihoms(g, h))
}

/// How to compute `Hom_S(G, H)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RestrictionMethod {
    /// Restrict every multi-homomorphism of `G → H` to `G \ S` and collect the
    /// distinct results.
    Image,
    /// For independent `S`: keep the multi-homomorphisms `ψ` of `G \ S` with
    /// `ν_H(⋃_{u ∈ ν_G(v)} ψ(u)) ≠ ∅` for every `v ∈ S`.
    Criterion,
}

fn check_restriction_set(g: &Graph, s: VertexSet) -> Result<()> {
    g.common_neighbors(s)?;
    if s == g.vertices() {
        return Err(Error::InvalidParameter("S must be a proper subset of V(G)".into()));
    }
    Ok(())
}

/// Cells of `Hom_S(G, H)` as multi-homomorphisms of `G \ S`, sorted.
pub fn restricted_cells(g: &Graph, h: &Graph, s: VertexSet, method: RestrictionMethod) -> Result<Vec<MultiHom>> {
    check_restriction_set(g, s)?;
    let keep = g.vertices().difference(s);
    match method {
        RestrictionMethod::Image => {
            let mut cells: Vec<MultiHom> = enumerate_multihoms(g, h).into_par_iter().map(|c| c.restrict(keep)).collect();
            cells.par_sort_unstable();
            cells.dedup();
            Ok(cells)
        }
        RestrictionMethod::Criterion => {
            if !g.is_independent(s) {
                return Err(Error::NotIndependent(s.to_string()));
            }
            let rest = g.delete_vertices(s)?;
            Ok(enumerate_multihoms(&rest, h)
                .into_par_iter()
                .filter(|psi| {
                    s.iter().all(|v| {
                        let colours = g.neighbors(v).iter().fold(VertexSet::EMPTY, |acc, u| acc.union(psi.get(u)));
                        !h.nu(colours).is_empty()
                    })
                })
                .collect())
        }
    }
}

/// Face poset of `Hom_S(G, H)`: the criterion for independent `S`, the
/// restriction image otherwise.
pub fn restricted_hom_poset(g: &Graph, h: &Graph, s: VertexSet) -> Result<Poset> {
    let method = if g.is_independent(s) { RestrictionMethod::Criterion } else { RestrictionMethod::Image };
    Ok(multihom_poset(restricted_cells(g, h, s, method)?))
}

/// A verified graph homomorphism.
#[derive(Debug, Clone)]
pub struct GraphHom {
    pub source: Graph,
    pub target: Graph,
    map: BTreeMap<u32, u32>,
}

impl GraphHom {
    pub fn new(source: Graph, target: Graph, map: BTreeMap<u32, u32>) -> Result<Self> {
        source.is_homomorphism(&target, &map)?;
        Ok(GraphHom { source, target, map })
    }

    pub fn identity(g: &Graph) -> Self {
        let map = g.vertices().iter().map(|v| (v, v)).collect();
        GraphHom { source: g.clone(), target: g.clone(), map }
    }

    /// Inclusion of `G \ S` into `G`.
    pub fn inclusion(g: &Graph, s: VertexSet) -> Result<Self> {
        let sub = g.delete_vertices(s)?;
        let map = sub.vertices().iter().map(|v| (v, v)).collect();
        GraphHom::new(sub, g.clone(), map)
    }

    pub fn apply(&self, v: u32) -> u32 {
        self.map[&v]
    }

    pub fn image(&self, s: VertexSet) -> VertexSet {
        VertexSet::from_labels(s.iter().map(|v| self.map[&v])).expect("labels valid")
    }
}

/// The monotone map `Hom(G, H) → Hom(G', H')`, `φ ↦ (v ↦ g[φ(f(v))])`, for
/// `f : G' → G` and `g : H → H'`.
pub fn induced_map<'a>(f: &GraphHom, g: &GraphHom, source: &'a Poset, target: &'a Poset) -> Result<PosetMap<'a>> {
    let index: HashMap<&MultiHom, usize> = target
        .payloads()
        .iter()
        .enumerate()
        .map(|(i, p)| p.as_hom().map(|h| (h, i)))
        .collect::<Result<_>>()?;
    let assignment = source
        .payloads()
        .iter()
        .map(|p| {
            let phi = p.as_hom()?;
            let pairs = f.source.vertices().iter().map(|v| (v, g.image(phi.get(f.apply(v)))));
            let psi = MultiHom::from_pairs(pairs)?;
            index
                .get(&psi)
                .copied()
                .ok_or_else(|| Error::NotHomomorphism(format!("image {psi} of {phi} is not a cell of the target")))
        })
        .collect::<Result<Vec<usize>>>()?;
    PosetMap::new(source, target, assignment)
}

/// The automorphism `φ ↦ φ ∘ (j ↦ 6 - j)` of a poset of multi-homomorphisms
/// on `C_5` (domain `{1..5}`) or on `C_5 \ {2,4}` (domain `{1,3,5}`).
pub fn c5_flip_involution(p: &Poset) -> Result<PosetMap<'_>> {
    let full = VertexSet::range(1, 5)?;
    let small = VertexSet::from_labels([1, 3, 5])?;
    let cells: Vec<&MultiHom> = p.payloads().iter().map(Payload::as_hom).collect::<Result<_>>()?;
    let index: HashMap<&MultiHom, usize> = cells.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let mut assignment = Vec::with_capacity(cells.len());
    for c in &cells {
        if c.domain != full && c.domain != small {
            return Err(Error::InvalidParameter(format!("cell {c} is not on C_5 or C_5 \\ {{2,4}}")));
        }
        let flipped = MultiHom::from_pairs(c.iter().map(|(v, s)| (6 - v, s)))?;
        let j = index
            .get(&flipped)
            .copied()
            .ok_or_else(|| Error::InvalidParameter(format!("flip of {c} is not in the poset")))?;
        assignment.push(j);
    }
    PosetMap::new(p, p, assignment)
}

/// The families `A_v`, `B_v` and `C_M` attached to an independent set `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Families {
    /// `A_v = {I ∈ ind(G) : v ∈ I}` for every vertex `v`.
    pub a: BTreeMap<u32, Vec<VertexSet>>,
    /// `B_v ⊆ ind(G \ S)`: sets containing `v` for `v ∉ S`; sets `I` with
    /// `I ∪ {v}` independent for `v ∈ S` (the empty set included).
    pub b: BTreeMap<u32, Vec<VertexSet>>,
    /// `C_M = {I ∈ ind(G \ S) : M \ S ⊆ I, I ∪ M ∈ ind(G)}` for nonempty
    /// independent `M`.
    pub c: BTreeMap<VertexSet, Vec<VertexSet>>,
}

pub fn families(g: &Graph, s: VertexSet) -> Result<Families> {
    check_restriction_set(g, s)?;
    if !g.is_independent(s) {
        return Err(Error::NotIndependent(s.to_string()));
    }
    let ind = g.independent_set_list();
    let ind_rest: Vec<VertexSet> = ind.iter().copied().filter(|i| i.is_disjoint(s)).collect();
    let mut a = BTreeMap::new();
    let mut b = BTreeMap::new();
    for v in g.vertices().iter() {
        a.insert(v, ind.iter().copied().filter(|i| i.contains(v)).collect());
        let bv = if s.contains(v) {
            ind_rest.iter().copied().filter(|i| g.is_independent(i.with(v))).collect()
        } else {
            ind_rest.iter().copied().filter(|i| i.contains(v)).collect()
        };
        b.insert(v, bv);
    }
    let c = ind
        .iter()
        .filter(|m| !m.is_empty())
        .map(|&m| {
            let need = m.difference(s);
            let cm = ind_rest.iter().copied().filter(|i| need.is_subset(*i) && g.is_independent(i.union(m))).collect();
            (m, cm)
        })
        .collect();
    Ok(Families { a, b, c })
}

/// Cellular chain complex of a downward-closed set of cells of a Hom complex.
///
/// A cell is a product of simplices `φ(v_1) × ... × φ(v_k)`; removing the
/// `j`-th colour of `φ(v_i)` carries sign `(-1)^(Σ_{l<i} dim φ(v_l) + j)`.
pub fn cellular_chain_complex(cells: &[MultiHom]) -> Result<ChainComplex> {
    let top = cells.iter().map(MultiHom::dim).max();
    let Some(top) = top else {
        return Ok(ChainComplex::default());
    };
    let mut by_dim: Vec<Vec<&MultiHom>> = vec![Vec::new(); top + 1];
    for c in cells {
        by_dim[c.dim()].push(c);
    }
    for level in by_dim.iter_mut() {
        level.sort_unstable();
        level.dedup();
    }
    let lookup = |d: usize, c: &MultiHom| by_dim[d].binary_search(&c).ok();
    let mut boundaries = Vec::with_capacity(top);
    for d in 1..=top {
        let cols = by_dim[d]
            .par_iter()
            .map(|c| {
                let mut col = Vec::new();
                let mut offset = 0usize;
                for (i, colours) in c.colours.iter().enumerate() {
                    for (j, x) in colours.iter().enumerate() {
                        if colours.len() < 2 {
                            break;
                        }
                        let mut face = (*c).clone();
                        face.colours[i] = colours.without(x);
                        let row = lookup(d - 1, &face)
                            .ok_or_else(|| Error::NotSubcomplex(format!("face {face} of {c} is missing")))?;
                        col.push((row as u32, if (offset + j) % 2 == 0 { 1 } else { -1 }));
                    }
                    offset += colours.len() - 1;
                }
                col.sort_unstable();
                Ok(col)
            })
            .collect::<Result<Vec<_>>>()?;
        boundaries.push(SparseMatrix::new(by_dim[d - 1].len(), cols));
    }
    Ok(ChainComplex::new(by_dim.iter().map(Vec::len).collect(), boundaries))
}
