//! Finite abstract simplicial complexes.
//!
//! Faces are stored per dimension as sorted flat tables of vertex labels, so
//! membership is a binary search and complexes with millions of faces stay
//! compact. The complex with no faces at all (`void`) is distinguished from the
//! complex whose only face is the empty simplex (`empty`, the sphere `S^{-1}`).

mod io;
mod sphere;

pub use sphere::SphereVerdict;

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poset::{Payload, Poset};

/// Faces of one dimension, sorted lexicographically.
#[derive(Clone, PartialEq, Eq)]
struct FaceTable {
    width: usize,
    data: Vec<u32>,
}

impl FaceTable {
    /// Sorts and deduplicates the faces in `data`; each face must already be
    /// sorted internally.
    fn build(width: usize, data: Vec<u32>) -> FaceTable {
        let count = data.len() / width;
        let mut order: Vec<u32> = (0..count as u32).collect();
        let chunk = |i: u32| &data[i as usize * width..(i as usize + 1) * width];
        order.par_sort_unstable_by(|&a, &b| chunk(a).cmp(chunk(b)));
        order.dedup_by(|a, b| chunk(*a) == chunk(*b));
        let mut sorted = Vec::with_capacity(order.len() * width);
        for i in order {
            sorted.extend_from_slice(chunk(i));
        }
        FaceTable { width, data: sorted }
    }

    fn len(&self) -> usize {
        self.data.len() / self.width
    }

    fn get(&self, i: usize) -> &[u32] {
        &self.data[i * self.width..(i + 1) * self.width]
    }

    fn index_of(&self, face: &[u32]) -> Option<usize> {
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(face) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }
}

/// Face counts per dimension, `counts[d] = f_d`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct FVector {
    pub counts: Vec<usize>,
}

impl FVector {
    pub fn euler(&self) -> i64 {
        self.counts.iter().enumerate().map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A finite abstract simplicial complex on `u32` vertex labels.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    void: bool,
    tables: Vec<FaceTable>,
}

/// Result of [`SimplicialComplex::simplicial_neighborhood`].
#[derive(Debug, Clone)]
pub struct Neighborhood {
    pub complex: SimplicialComplex,
    pub boundary: SimplicialComplex,
    /// Whether the subcomplex was full (induced) in the ambient complex.
    pub full: bool,
}

impl SimplicialComplex {
    /// The complex `{∅}`, i.e. the sphere `S^{-1}`.
    pub fn empty() -> Self {
        SimplicialComplex { void: false, tables: Vec::new() }
    }

    /// The complex with no faces, not even `∅`.
    pub fn void() -> Self {
        SimplicialComplex { void: true, tables: Vec::new() }
    }

    /// The full simplex on `vertices`.
    pub fn simplex(vertices: &[u32]) -> Self {
        SimplicialComplex::from_faces([vertices.to_vec()])
    }

    /// The boundary of the simplex on `vertices`.
    pub fn simplex_boundary(vertices: &[u32]) -> Self {
        let facets = (0..vertices.len()).map(|i| {
            let mut f = vertices.to_vec();
            f.remove(i);
            f
        });
        SimplicialComplex::from_faces(facets)
    }

    /// Downward closure of the given faces. Empty input faces are ignored.
    pub fn from_faces<I>(faces: I) -> Self
    where
        I: IntoIterator<Item = Vec<u32>>,
    {
        let mut by_dim: Vec<BTreeSet<Vec<u32>>> = Vec::new();
        for mut face in faces {
            face.sort_unstable();
            face.dedup();
            if face.is_empty() {
                continue;
            }
            let d = face.len() - 1;
            if by_dim.len() <= d {
                by_dim.resize(d + 1, BTreeSet::new());
            }
            by_dim[d].insert(face);
        }
        for d in (1..by_dim.len()).rev() {
            let subfaces: Vec<Vec<u32>> = by_dim[d]
                .iter()
                .flat_map(|face| {
                    (0..face.len()).map(move |i| {
                        let mut f = face.clone();
                        f.remove(i);
                        f
                    })
                })
                .collect();
            by_dim[d - 1].extend(subfaces);
        }
        let tables = by_dim.into_iter().map(|set| set.into_iter().flatten().collect()).collect();
        SimplicialComplex::from_closed_tables(tables)
    }

    /// Builds from per-dimension flat tables that are already downward closed
    /// (faces internally sorted, table order arbitrary).
    pub(crate) fn from_closed_tables(by_dim: Vec<Vec<u32>>) -> Self {
        let mut tables: Vec<FaceTable> =
            by_dim.into_iter().enumerate().map(|(d, data)| FaceTable::build(d + 1, data)).collect();
        while tables.last().is_some_and(|t| t.len() == 0) {
            tables.pop();
        }
        let complex = SimplicialComplex { void: false, tables };
        debug_assert!(complex.is_closed());
        complex
    }

    fn is_closed(&self) -> bool {
        (1..self.tables.len()).all(|d| {
            self.faces(d as isize).all(|face| {
                (0..face.len()).all(|i| {
                    let mut f = face.to_vec();
                    f.remove(i);
                    self.tables[d - 1].index_of(&f).is_some()
                })
            })
        })
    }

    pub fn is_void(&self) -> bool {
        self.void
    }

    /// True when there are no vertices (for `{∅}` as well as the void complex).
    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }

    /// Maximum face dimension; `-1` for `{∅}` and the void complex.
    pub fn dim(&self) -> isize {
        self.tables.len() as isize - 1
    }

    pub fn face_count(&self, d: isize) -> usize {
        if d < 0 {
            return usize::from(!self.void);
        }
        self.tables.get(d as usize).map_or(0, FaceTable::len)
    }

    /// Faces of dimension `d` in sorted order.
    pub fn faces(&self, d: isize) -> std::slice::ChunksExact<'_, u32> {
        match usize::try_from(d).ok().and_then(|d| self.tables.get(d)) {
            Some(t) => t.data.chunks_exact(t.width),
            None => [].chunks_exact(1),
        }
    }

    /// The `i`-th face of dimension `d`.
    pub fn face(&self, d: usize, i: usize) -> &[u32] {
        self.tables[d].get(i)
    }

    /// Index of a sorted face within its dimension's table.
    pub fn index_of(&self, face: &[u32]) -> Option<usize> {
        let d = face.len().checked_sub(1)?;
        self.tables.get(d)?.index_of(face)
    }

    /// Membership for a sorted face; `∅` is a face unless the complex is void.
    pub fn contains(&self, face: &[u32]) -> bool {
        if face.is_empty() {
            return !self.void;
        }
        self.index_of(face).is_some()
    }

    pub fn vertices(&self) -> Vec<u32> {
        self.faces(0).map(|v| v[0]).collect()
    }

    pub fn f_vector(&self) -> FVector {
        FVector { counts: self.tables.iter().map(FaceTable::len).collect() }
    }

    /// Inclusion-maximal faces, by dimension then lexicographically.
    pub fn facets(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for d in 0..self.tables.len() {
            let mut covered = vec![false; self.tables[d].len()];
            if let Some(up) = self.tables.get(d + 1) {
                for i in 0..up.len() {
                    let face = up.get(i);
                    for j in 0..face.len() {
                        let mut f = face.to_vec();
                        f.remove(j);
                        covered[self.tables[d].index_of(&f).expect("closed")] = true;
                    }
                }
            }
            for (i, c) in covered.into_iter().enumerate() {
                if !c {
                    out.push(self.tables[d].get(i).to_vec());
                }
            }
        }
        out
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets().iter().all(|f| f.len() as isize - 1 == d)
    }

    /// Number of connected components (0 for complexes without vertices).
    pub fn component_count(&self) -> usize {
        let verts = self.vertices();
        let mut parent: Vec<usize> = (0..verts.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut components = verts.len();
        for e in self.faces(1) {
            let a = verts.binary_search(&e[0]).expect("vertex");
            let b = verts.binary_search(&e[1]).expect("vertex");
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                components -= 1;
            }
        }
        components
    }

    /// Checks that every face of `self` is a face of `other`.
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        if self.void {
            return true;
        }
        !other.void
            && self.tables.len() <= other.tables.len()
            && (0..self.tables.len()).all(|d| self.faces(d as isize).all(|f| other.tables[d].index_of(f).is_some()))
    }

    /// Poset of nonempty faces ordered by inclusion; payloads are the faces.
    pub fn face_poset(&self) -> Result<Poset> {
        if self.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let mut offsets = vec![0usize];
        for t in &self.tables {
            offsets.push(offsets.last().unwrap() + t.len());
        }
        let mut elements = Vec::with_capacity(offsets[self.tables.len()]);
        let mut covers = Vec::new();
        for (d, t) in self.tables.iter().enumerate() {
            for i in 0..t.len() {
                let face = t.get(i);
                elements.push(Payload::Face(face.to_vec()));
                if d > 0 {
                    for j in 0..face.len() {
                        let mut f = face.to_vec();
                        f.remove(j);
                        let k = self.tables[d - 1].index_of(&f).expect("closed");
                        covers.push((offsets[d - 1] + k, offsets[d] + i));
                    }
                }
            }
        }
        Poset::from_relation(elements, &covers)
    }

    /// `lk(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}`.
    pub fn link(&self, sigma: &[u32]) -> Result<SimplicialComplex> {
        let mut sigma = sigma.to_vec();
        sigma.sort_unstable();
        if !self.contains(&sigma) {
            return Err(Error::NotAFace(format!("{sigma:?}")));
        }
        let union_with = |tau: &[u32]| -> Vec<u32> {
            let mut u: Vec<u32> = sigma.iter().chain(tau).copied().collect();
            u.sort_unstable();
            u
        };
        let candidates: Vec<u32> = self
            .vertices()
            .into_iter()
            .filter(|v| sigma.binary_search(v).is_err() && self.contains(&union_with(&[*v])))
            .collect();
        let mut by_dim: Vec<Vec<u32>> = Vec::new();
        let mut tau = Vec::new();
        fn rec(
            k: &SimplicialComplex,
            cands: &[u32],
            start: usize,
            tau: &mut Vec<u32>,
            union_with: &dyn Fn(&[u32]) -> Vec<u32>,
            out: &mut Vec<Vec<u32>>,
        ) {
            for i in start..cands.len() {
                tau.push(cands[i]);
                if k.contains(&union_with(tau)) {
                    let d = tau.len() - 1;
                    if out.len() <= d {
                        out.resize(d + 1, Vec::new());
                    }
                    out[d].extend_from_slice(tau);
                    rec(k, cands, i + 1, tau, union_with, out);
                }
                tau.pop();
            }
        }
        rec(self, &candidates, 0, &mut tau, &union_with, &mut by_dim);
        Ok(SimplicialComplex::from_closed_tables(by_dim))
    }

    /// Join with `other`, relabelling `other` past the largest label of `self`
    /// when the vertex sets overlap.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let ours = self.vertices();
        let theirs = other.vertices();
        if ours.iter().any(|v| theirs.binary_search(v).is_ok()) {
            let offset = ours.last().map_or(0, |&m| m + 1);
            self.join_disjoint(&other.relabel(|v| v + offset))
        } else {
            self.join_disjoint(other)
        }
    }

    /// Join of complexes on disjoint vertex sets: all `σ ∪ τ` with
    /// `σ ∈ K ∪ {∅}`, `τ ∈ L ∪ {∅}`. Joining with the void complex gives void.
    pub fn join_disjoint(&self, other: &SimplicialComplex) -> SimplicialComplex {
        if self.void || other.void {
            return SimplicialComplex::void();
        }
        let mut by_dim: Vec<Vec<u32>> = vec![Vec::new(); self.tables.len() + other.tables.len()];
        for a in -1..=self.dim() {
            for b in -1..=other.dim() {
                if a < 0 && b < 0 {
                    continue;
                }
                let d = (a + b + 1) as usize;
                let left: Vec<&[u32]> = if a < 0 { vec![&[]] } else { self.faces(a).collect() };
                let right: Vec<&[u32]> = if b < 0 { vec![&[]] } else { other.faces(b).collect() };
                for s in &left {
                    for t in &right {
                        let mut u: Vec<u32> = s.iter().chain(t.iter()).copied().collect();
                        u.sort_unstable();
                        by_dim[d].extend_from_slice(&u);
                    }
                }
            }
        }
        SimplicialComplex::from_closed_tables(by_dim)
    }

    /// Applies an injective relabelling to every vertex.
    pub fn relabel<F: Fn(u32) -> u32>(&self, f: F) -> SimplicialComplex {
        if self.void {
            return SimplicialComplex::void();
        }
        let by_dim = self
            .tables
            .iter()
            .map(|t| {
                let mut data = Vec::with_capacity(t.data.len());
                for face in t.data.chunks_exact(t.width) {
                    let mut g: Vec<u32> = face.iter().map(|&v| f(v)).collect();
                    g.sort_unstable();
                    data.extend(g);
                }
                data
            })
            .collect();
        SimplicialComplex::from_closed_tables(by_dim)
    }

    /// Order complex of the face poset; vertex `i` is the `i`-th face in
    /// (dimension, lexicographic) order.
    pub fn barycentric(&self) -> Result<SimplicialComplex> {
        Ok(self.face_poset()?.order_complex())
    }

    /// Closure of the codimension-one faces lying in exactly one facet of top
    /// dimension.
    pub fn boundary(&self) -> SimplicialComplex {
        let d = self.dim();
        if d < 1 {
            return SimplicialComplex::void();
        }
        let below = &self.tables[d as usize - 1];
        let mut incidence = vec![0u32; below.len()];
        for face in self.faces(d) {
            for j in 0..face.len() {
                let mut f = face.to_vec();
                f.remove(j);
                incidence[below.index_of(&f).expect("closed")] += 1;
            }
        }
        let faces: Vec<Vec<u32>> =
            (0..below.len()).filter(|&i| incidence[i] == 1).map(|i| below.get(i).to_vec()).collect();
        if faces.is_empty() {
            SimplicialComplex::void()
        } else {
            SimplicialComplex::from_faces(faces)
        }
    }

    /// Simplicial neighbourhood of the subcomplex `x`: faces joinable to some
    /// face of `x`, and the part of it disjoint from `x`.
    pub fn simplicial_neighborhood(&self, x: &SimplicialComplex) -> Result<Neighborhood> {
        if !x.is_subcomplex_of(self) {
            let witness = (0..x.tables.len())
                .flat_map(|d| x.faces(d as isize))
                .find(|f| !self.contains(f))
                .map(|f| format!("{f:?}"))
                .unwrap_or_default();
            return Err(Error::NotSubcomplex(witness));
        }
        let xv = x.vertices();
        let in_x = |v: &u32| xv.binary_search(v).is_ok();
        let mut full = true;
        let mut n_tables: Vec<Vec<u32>> = vec![Vec::new(); self.tables.len()];
        let mut b_tables: Vec<Vec<u32>> = vec![Vec::new(); self.tables.len()];
        for d in 0..self.tables.len() {
            for face in self.faces(d as isize) {
                let hits = face.iter().filter(|v| in_x(v)).count();
                if hits == 0 {
                    continue;
                }
                n_tables[d].extend_from_slice(face);
                if hits == face.len() && !x.contains(face) {
                    full = false;
                }
                // a face with exactly one vertex x of X exhibits face \ {x} as
                // a face of the boundary part
                if hits == 1 && d > 0 {
                    let rest: Vec<u32> = face.iter().copied().filter(|v| !in_x(v)).collect();
                    b_tables[d - 1].extend_from_slice(&rest);
                }
            }
        }
        for d in 0..self.tables.len() {
            let extra = b_tables[d].clone();
            n_tables[d].extend(extra);
        }
        Ok(Neighborhood {
            complex: SimplicialComplex::from_closed_tables(n_tables),
            boundary: SimplicialComplex::from_closed_tables(b_tables),
            full,
        })
    }

    /// Sphere/ball certification, see [`SphereVerdict`].
    pub fn sphere_verdict(&self) -> SphereVerdict {
        sphere::verdict(self)
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.void {
            return f.write_str("SimplicialComplex(void)");
        }
        write!(f, "SimplicialComplex(f={}, facets={:?})", self.f_vector(), self.facets())
    }
}
