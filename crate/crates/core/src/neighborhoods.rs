//! Triple posets over `P^op × Int P` for the face poset `P` of a triangulated
//! manifold:
//!
//! * `N = {(p, q, r) : q ≤ r, p ∩ r ≠ ∅}`,
//! * `B = {(p, q, r) ∈ N : p ⊄ q}`,
//! * `D = {(p, q, r) : p ≤ q ≤ r}`,
//!
//! where `(p, q, r)` stands for `(p^op, (q, r^op))`. `(ΔN, ΔB)` is the
//! simplicial neighbourhood of `ΔD`, and `ΔN` is a manifold with boundary `ΔB`.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::SphereVerdict;
use crate::error::Result;
use crate::graph::VertexSet;
use crate::homology::{homology_summary, mod2_summary};
use crate::poset::{Payload, Poset};
use crate::report::VerificationReport;
use crate::verify::Budget;

/// An element `(p^op, (q, r^op))` of `P^op × Int P`, faces given as vertex sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TripleElement {
    pub p: VertexSet,
    pub q: VertexSet,
    pub r: VertexSet,
}

impl fmt::Display for TripleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(p={}, q={}, r={})", self.p, self.q, self.r)
    }
}

/// A subposet of `P^op × Int P` with its triples and ambient indices.
#[derive(Debug, Clone)]
pub struct TriplePoset {
    pub poset: Poset,
    pub triples: Vec<TripleElement>,
    /// Index of each element in [`TripleSpace::ambient`].
    pub ambient_indices: Vec<usize>,
}

impl TriplePoset {
    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Hash index from triple to element index.
    pub fn lookup(&self) -> HashMap<TripleElement, usize> {
        self.triples.iter().enumerate().map(|(i, t)| (*t, i)).collect()
    }
}

/// The ambient poset `P^op × Int P` for a face poset `P`.
pub struct TripleSpace<'a> {
    faces: &'a Poset,
    sets: Vec<VertexSet>,
    pairs: Vec<[usize; 2]>,
}

impl<'a> TripleSpace<'a> {
    /// Fails unless every payload of `faces` is a vertex set.
    pub fn new(faces: &'a Poset) -> Result<Self> {
        let sets = faces.payloads().iter().map(Payload::as_set).collect::<Result<Vec<_>>>()?;
        let pairs = faces.weak_chains::<2>();
        Ok(TripleSpace { faces, sets, pairs })
    }

    pub fn faces(&self) -> &Poset {
        self.faces
    }

    /// `|P| · |Int P|`.
    pub fn ambient_len(&self) -> usize {
        self.sets.len() * self.pairs.len()
    }

    /// `P^op × Int P` built by the generic poset constructions.
    pub fn ambient(&self) -> Poset {
        self.faces.opposite().product(&self.faces.interval_poset())
    }

    fn payload(&self, p: usize, q: usize, r: usize) -> Payload {
        let f = |i: usize| self.faces.payload(i).clone();
        Payload::Tuple(vec![f(p).dual(), Payload::Tuple(vec![f(q), f(r).dual()])])
    }

    /// The subposet of the ambient poset on triples satisfying `keep`, in
    /// ambient index order.
    pub fn select<F>(&self, keep: F) -> TriplePoset
    where
        F: Fn(&TripleElement) -> bool,
    {
        let mut idx = Vec::new();
        let mut triples = Vec::new();
        let mut ambient_indices = Vec::new();
        for p in 0..self.sets.len() {
            for (j, &[q, r]) in self.pairs.iter().enumerate() {
                let t = TripleElement { p: self.sets[p], q: self.sets[q], r: self.sets[r] };
                if keep(&t) {
                    idx.push((p, q, r));
                    triples.push(t);
                    ambient_indices.push(p * self.pairs.len() + j);
                }
            }
        }
        let faces = self.faces;
        let elements = idx.iter().map(|&(p, q, r)| self.payload(p, q, r)).collect();
        let poset = Poset::from_leq(elements, |a, b| {
            let ((p0, q0, r0), (p1, q1, r1)) = (idx[a], idx[b]);
            faces.leq(p1, p0) && faces.leq(q0, q1) && faces.leq(r1, r0)
        })
        .expect("subposet of a product order");
        TriplePoset { poset, triples, ambient_indices }
    }

    /// `N = {q ≤ r, p ∩ r ≠ ∅}`.
    pub fn n(&self) -> TriplePoset {
        self.select(|t| !t.p.is_disjoint(t.r))
    }

    /// `B = {q ≤ r, p ∩ r ≠ ∅, p ⊄ q}`.
    pub fn b(&self) -> TriplePoset {
        self.select(|t| !t.p.is_disjoint(t.r) && !t.p.is_subset(t.q))
    }

    /// `D = {p ≤ q ≤ r}`.
    pub fn d(&self) -> TriplePoset {
        self.select(|t| t.p.is_subset(t.q))
    }
}

/// Posets `N` and `B` for a face poset `P`.
pub fn build_nb(faces: &Poset) -> Result<(TriplePoset, TriplePoset)> {
    let space = TripleSpace::new(faces)?;
    Ok((space.n(), space.b()))
}

/// Poset `D` for a face poset `P`.
pub fn build_d(faces: &Poset) -> Result<TriplePoset> {
    Ok(TripleSpace::new(faces)?.d())
}

/// Checks the neighbourhood identity and the manifold-with-boundary
/// structure of `(ΔN, ΔB)`.
pub fn verify_neighborhood_pair(faces: &Poset, budget: &Budget) -> Result<VerificationReport> {
    let space = TripleSpace::new(faces)?;
    let mut report = VerificationReport::new("neighborhood", format!("|P|={}", faces.len()));
    let n = space.n();
    let b = space.b();
    let d = space.d();
    report.count("P", faces.len());
    report.count("N", n.len());
    report.count("B", b.len());
    report.count("D", d.len());
    report.count("ambient", space.ambient_len());

    let n_lookup = n.lookup();
    let b_in_n = b.triples.iter().all(|t| n_lookup.contains_key(t));
    let b_is_cut = n.triples.iter().filter(|t| !t.p.is_subset(t.q)).count() == b.len();
    report.check("B = N ∩ {p ⊄ q}", b_in_n && b_is_cut, format!("|B| = {}", b.len()));
    report.check("D ⊆ N", d.triples.iter().all(|t| n_lookup.contains_key(t)), format!("|D| = {}", d.len()));
    let b_lookup = b.lookup();
    report.check("D ∩ B = ∅", d.triples.iter().all(|t| !b_lookup.contains_key(t)), "");

    let ambient = space.ambient();
    let total: u128 = ambient.chain_counts().iter().sum();
    report.count("ambient_order_complex_faces", total);
    if total <= budget.max_order_complex_faces {
        neighborhood_identity(&mut report, &ambient, &n, &b, &d);
    } else {
        report.skip(
            "simplicial neighbourhood of ΔD is (ΔN, ΔB)",
            format!("Δ(P^op × Int P) has {total} faces, budget {}", budget.max_order_complex_faces),
        );
    }

    let n_faces: u128 = n.poset.chain_counts().iter().sum();
    if n_faces > budget.max_order_complex_faces {
        report.skip(
            "ΔN is a manifold with boundary ΔB",
            format!("ΔN has {n_faces} faces, budget {}", budget.max_order_complex_faces),
        );
        return Ok(report);
    }
    let delta_n = n.poset.order_complex();
    let n_pos: HashMap<usize, usize> = n.ambient_indices.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let b_in_n_idx: Vec<usize> = b.ambient_indices.iter().map(|a| n_pos[a]).collect();
    let delta_b = n.poset.order_complex_on(&b_in_n_idx);
    report.count("ΔN_faces", delta_n.f_vector().total());
    report.count("ΔB_faces", delta_b.f_vector().total());
    let boundary = delta_n.boundary();
    report.check(
        "boundary of ΔN is ΔB",
        boundary == delta_b,
        format!("∂ΔN f={} ΔB f={}", boundary.f_vector(), delta_b.f_vector()),
    );

    let dim = delta_n.dim() as i32;
    let mut is_b = vec![false; n.len()];
    for &i in &b_in_n_idx {
        is_b[i] = true;
    }
    let verdicts: Vec<SphereVerdict> = (0..n.len())
        .into_par_iter()
        .map(|x| n.poset.chain_link(&[x]).expect("single element is a chain").sphere_verdict())
        .collect();
    let bad = (0..n.len()).find(|&x| {
        let v = verdicts[x];
        v.dim() != Some(dim - 1) || if is_b[x] { !v.is_ball() } else { !v.is_sphere() }
    });
    let certified = verdicts.iter().filter(|v| v.is_certified()).count();
    report.count("links_certified", certified);
    report.count("links_homology_only", verdicts.len() - certified);
    report.check(
        "ΔN is a manifold with boundary ΔB (interior links spheres, boundary links balls)",
        bad.is_none(),
        match bad {
            None => format!("{} vertex links of dimension {}", n.len(), dim - 1),
            Some(x) => format!(
                "{} element {}: link verdict {:?}",
                if is_b[x] { "boundary" } else { "interior" },
                n.triples[x],
                verdicts[x]
            ),
        },
    );

    let faces_b = delta_b.f_vector().total();
    let hb = if faces_b <= budget.max_integral_cells { homology_summary(&delta_b)? } else { mod2_summary(&delta_b) };
    report.record_homology("ΔB", hb);
    Ok(report)
}

fn neighborhood_identity(
    report: &mut VerificationReport,
    ambient: &Poset,
    n: &TriplePoset,
    b: &TriplePoset,
    d: &TriplePoset,
) {
    let closed_above = d.ambient_indices.iter().all(|&x| {
        let mut above = ambient.up_row(x).clone();
        for &y in &d.ambient_indices {
            above.remove(y);
        }
        above.count() == 0
    });
    report.check("D is closed from above", closed_above, "");
    let y = ambient.order_complex();
    let x = ambient.order_complex_on(&d.ambient_indices);
    match y.simplicial_neighborhood(&x) {
        Ok(nb) => {
            report.check("ΔD is full", nb.full, "");
            let delta_n = ambient.order_complex_on(&n.ambient_indices);
            let delta_b = ambient.order_complex_on(&b.ambient_indices);
            let ok = nb.complex == delta_n && nb.boundary == delta_b;
            report.check(
                "simplicial neighbourhood of ΔD is (ΔN, ΔB)",
                ok,
                format!(
                    "neighbourhood f={} boundary f={}; ΔN f={} ΔB f={}",
                    nb.complex.f_vector(),
                    nb.boundary.f_vector(),
                    delta_n.f_vector(),
                    delta_b.f_vector()
                ),
            );
        }
        Err(e) => {
            report.check("simplicial neighbourhood of ΔD is (ΔN, ΔB)", false, e.to_string());
        }
    }
}
