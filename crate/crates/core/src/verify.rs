//! End-to-end verification scenarios. Each scenario builds its objects from
//! scratch, checks them against explicit maps or committed expected values,
//! and returns a [`VerificationReport`]. Work beyond the configured
//! [`Budget`] is reported as skipped, never as passed.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::{complete, cycle, Graph, VertexSet};
use crate::homcomplex::{
    c5_flip_involution, cellular_chain_complex, enumerate_multihoms, families, multihom_poset, restricted_cells,
    MultiHom, RestrictionMethod,
};
use crate::homology::{homology_summary, mod2_summary, HomologySummary};
use crate::neighborhoods::{build_nb, verify_neighborhood_pair, TripleElement, TripleSpace};
use crate::poset::{Payload, Poset};
use crate::report::VerificationReport;

/// Size limits; anything larger is skipped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    /// Largest `n` accepted by the Stiefel-family scenarios.
    pub max_n: u32,
    /// Largest poset that is materialized with its full order relation.
    pub max_poset_elements: usize,
    /// Largest order complex (total face count) that is built.
    pub max_order_complex_faces: u128,
    /// Largest chain complex (total cell count) given integral homology;
    /// bigger complexes get mod-2 homology only.
    pub max_integral_cells: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_n: 4,
            max_poset_elements: 20_000,
            max_order_complex_faces: 5_000_000,
            max_integral_cells: 300_000,
        }
    }
}

impl Budget {
    fn check_n(&self, n: u32) -> Result<()> {
        if n > self.max_n {
            return Err(Error::InvalidParameter(format!("n = {n} exceeds the configured maximum {}", self.max_n)));
        }
        Ok(())
    }
}

#[derive(Deserialize)]
struct StiefelTables {
    tables: Vec<StiefelEntry>,
}

#[derive(Deserialize)]
struct StiefelEntry {
    n: u32,
    integral: Vec<crate::homology::IntegralGroup>,
    mod2: Vec<usize>,
}

/// Homology of the Stiefel manifold `V_2(R^{n+1})`, from the committed table
/// (`n <= 4`).
pub fn stiefel_homology(n: u32) -> Option<HomologySummary> {
    static TABLES: OnceLock<Vec<StiefelEntry>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| {
        let raw = include_str!("../data/stiefel_homology.json");
        serde_json::from_str::<StiefelTables>(raw).expect("committed table parses").tables
    });
    tables
        .iter()
        .find(|e| e.n == n)
        .map(|e| HomologySummary { integral: Some(e.integral.clone()), mod2: e.mod2.clone() })
}

/// `{1, ..., n + 2}`.
fn ground_set(n: u32) -> Result<VertexSet> {
    VertexSet::range(1, n + 2)
}

/// Face poset of `∂Δ^{n+1}` on the vertices `1..=n+2`.
pub fn sphere_boundary_faces(n: u32) -> Result<Poset> {
    let verts: Vec<u32> = ground_set(n)?.iter().collect();
    SimplicialComplex::simplex_boundary(&verts).face_poset()
}

/// `{2, 4}`.
fn small_model_set() -> VertexSet {
    VertexSet::from_labels([2, 4]).expect("valid labels")
}

/// Cells of the small model `Hom_{{2,4}}(C_5, K_{n+2})`.
pub fn small_model_cells(n: u32) -> Result<Vec<MultiHom>> {
    restricted_cells(&cycle(5), &complete(n + 2), small_model_set(), RestrictionMethod::Criterion)
}

/// `φ ↦ (∁φ(3), φ(1), ∁φ(5))`, defined when the domain of `φ` is `{1, 3, 5}`.
pub fn map_to_triple(phi: &MultiHom, ground: VertexSet) -> Option<TripleElement> {
    if phi.domain() != VertexSet::from_labels([1, 3, 5]).expect("valid labels") {
        return None;
    }
    Some(TripleElement { p: ground.difference(phi.get(3)), q: phi.get(1), r: ground.difference(phi.get(5)) })
}

/// `(p, q, r) ↦ (p, ∁r, ∁q)`.
pub fn triple_involution(t: &TripleElement, ground: VertexSet) -> TripleElement {
    TripleElement { p: t.p, q: ground.difference(t.r), r: ground.difference(t.q) }
}

/// The target triple poset over the faces of `∂Δ^{n+1}`, enumerated directly
/// from the defining predicates on vertex sets.
fn triple_target(ground: VertexSet) -> (Vec<TripleElement>, Poset) {
    let faces: Vec<VertexSet> = ground.subsets().filter(|s| !s.is_empty() && *s != ground).collect();
    let mut triples = Vec::new();
    for &p in &faces {
        for &q in &faces {
            for &r in &faces {
                if q.is_subset(r) && !p.is_disjoint(r) && !p.is_subset(q) {
                    triples.push(TripleElement { p, q, r });
                }
            }
        }
    }
    let elements = triples
        .iter()
        .map(|t| {
            Payload::Tuple(vec![
                Payload::Set(t.p).dual(),
                Payload::Tuple(vec![Payload::Set(t.q), Payload::Set(t.r).dual()]),
            ])
        })
        .collect();
    let poset = Poset::from_leq(elements, |a, b| {
        let (s, t) = (&triples[a], &triples[b]);
        t.p.is_subset(s.p) && s.q.is_subset(t.q) && t.r.is_subset(s.r)
    })
    .expect("product order");
    (triples, poset)
}

/// Number of target triples, counted without building the poset.
fn triple_target_len(ground: VertexSet) -> usize {
    let faces: Vec<VertexSet> = ground.subsets().filter(|s| !s.is_empty() && *s != ground).collect();
    faces
        .iter()
        .map(|&p| {
            faces
                .iter()
                .flat_map(|&q| faces.iter().map(move |&r| (q, r)))
                .filter(|&(q, r)| q.is_subset(r) && !p.is_disjoint(r) && !p.is_subset(q))
                .count()
        })
        .sum()
}

/// Homology of `k`: integral and mod 2 within budget, mod 2 only beyond it.
fn complex_homology(k: &SimplicialComplex, budget: &Budget) -> Result<HomologySummary> {
    if k.f_vector().total() <= budget.max_integral_cells {
        homology_summary(k)
    } else {
        Ok(mod2_summary(k))
    }
}

/// Compares `found` with `expected` on whatever `found` computed.
fn compare_homology(report: &mut VerificationReport, label: &str, expected: &HomologySummary, found: &HomologySummary) {
    if found.integral.is_some() {
        report.check_eq(
            &format!("{label}: integral homology"),
            expected.groups_text().unwrap_or_default(),
            found.groups_text().unwrap_or_default(),
        );
    }
    report.check_eq(&format!("{label}: mod-2 Betti numbers"), &expected.mod2, &found.mod2);
}

/// Integral groups when known, mod-2 Betti numbers otherwise.
fn homology_line(h: &HomologySummary) -> String {
    h.groups_text().unwrap_or_else(|| format!("mod 2 {:?}", h.mod2))
}

fn boundary_squared_detail(defect: &std::result::Result<(), crate::homology::BoundaryDefect>) -> String {
    match defect {
        Ok(()) => String::new(),
        Err(d) => format!("∂∂ ≠ 0 on column {} in degree {}", d.column, d.dim),
    }
}

fn order_complex_checks(report: &mut VerificationReport, label: &str, k: &SimplicialComplex, h: &HomologySummary) {
    report.check_eq(&format!("{label}: χ(f-vector) = χ(Betti)"), k.f_vector().euler(), h.euler());
    report.check(&format!("{label}: universal coefficients"), h.consistent_mod2(), homology_line(h));
}

/// The explicit map `φ ↦ (∁φ(3), φ(1), ∁φ(5))` from the restricted model
/// `Hom_{{2,4}}(G, K_{n+2})` to the triple poset is an order isomorphism.
/// With `G = C_5` this is the small-model isomorphism; other graphs serve as
/// negative controls.
pub fn stiefel_iso_for(g: &Graph, n: u32, budget: &Budget) -> Result<VerificationReport> {
    budget.check_n(n)?;
    let mut report = VerificationReport::new("stiefel", format!("G={} n={n}", graph_label(g)));
    let ground = ground_set(n)?;
    let h = complete(n + 2);
    let s = small_model_set();
    let cells = restricted_cells(g, &h, s, RestrictionMethod::Criterion)?;
    let image = restricted_cells(g, &h, s, RestrictionMethod::Image)?;
    report.count("restricted_model", cells.len());
    report.count("restriction_image", image.len());
    report.check("criterion and restriction image agree", cells == image, format!("{} cells", cells.len()));

    let target_len = triple_target_len(ground);
    report.count("triples", target_len);
    report.check(
        "restricted model and triple poset have equally many elements",
        cells.len() == target_len,
        format!("{} and {}", cells.len(), target_len),
    );
    if cells.len().max(target_len) > budget.max_poset_elements {
        report.skip(
            "map is an order isomorphism",
            format!("{} elements exceed the poset budget {}", cells.len().max(target_len), budget.max_poset_elements),
        );
        return Ok(report.finish());
    }

    let (triples, target) = triple_target(ground);
    let lookup: HashMap<TripleElement, usize> = triples.iter().enumerate().map(|(i, t)| (*t, i)).collect();
    let source = multihom_poset(cells);
    let mut assignment = Vec::with_capacity(source.len());
    let mut witness = None;
    for pay in source.payloads() {
        let phi = pay.as_hom()?;
        match map_to_triple(phi, ground).and_then(|t| lookup.get(&t).copied()) {
            Some(j) => assignment.push(j),
            None => {
                witness.get_or_insert_with(|| match map_to_triple(phi, ground) {
                    None => format!("{phi}: domain is not {{1,3,5}}"),
                    Some(t) => format!("{phi} ↦ {t}, not in the target"),
                });
            }
        }
    }
    let defined = witness.is_none();
    report.check("map is defined and lands in the target", defined, witness.unwrap_or_default());
    if !defined {
        report.skip("map is an order isomorphism", "map is not defined on every element");
        return Ok(report.finish());
    }
    let iso = source.is_isomorphism(&target, &assignment);
    report.check("map is an order isomorphism", iso, format!("{} elements", source.len()));

    let (_, b) = build_nb(&sphere_boundary_faces(n)?)?;
    let same = b.len() == triples.len() && {
        let map: Option<Vec<usize>> = triples.iter().map(|t| b.lookup().get(t).copied()).collect();
        map.is_some_and(|m| target.is_isomorphism(&b.poset, &m))
    };
    report.check("target equals poset B of the neighbourhood construction", same, format!("|B| = {}", b.len()));
    Ok(report.finish())
}

/// Small-model isomorphism for `C_5`.
pub fn stiefel_iso(n: u32, budget: &Budget) -> Result<VerificationReport> {
    stiefel_iso_for(&cycle(5), n, budget)
}

/// Homology of the small model against the Stiefel manifold table, by the
/// order complex and by the cellular chain complex.
pub fn small_model_homology(n: u32, mod2_only: bool, budget: &Budget) -> Result<VerificationReport> {
    budget.check_n(n)?;
    let expected = stiefel_homology(n)
        .ok_or_else(|| Error::InvalidParameter(format!("no expected Stiefel homology for n = {n}")))?;
    let mut report = VerificationReport::new("small-homology", format!("n={n} mod2_only={mod2_only}"));
    let cells = small_model_cells(n)?;
    report.count("cells", cells.len());

    if cells.len() <= budget.max_integral_cells {
        let cc = cellular_chain_complex(&cells)?;
        let defect = cc.check_boundary_squared();
        report.check("cellular: ∂∂ = 0", defect.is_ok(), boundary_squared_detail(&defect));
        let h = if mod2_only { HomologySummary { integral: None, mod2: cc.betti_mod2() } } else { cc.homology()? };
        report.check_eq("cellular: χ(cells) = χ(Betti)", cc.euler(), h.euler());
        compare_homology(&mut report, "cellular", &expected, &h);
        report.record_homology("cellular", h);
    } else {
        report.skip("cellular homology", format!("{} cells exceed {}", cells.len(), budget.max_integral_cells));
    }

    if cells.len() > budget.max_poset_elements {
        report.skip(
            "order complex homology",
            format!("{} elements exceed the poset budget {}", cells.len(), budget.max_poset_elements),
        );
        return Ok(report.finish());
    }
    let poset = multihom_poset(cells);
    let faces: u128 = poset.chain_counts().iter().sum();
    report.count("order_complex_faces", faces);
    if faces > budget.max_order_complex_faces {
        report.skip("order complex homology", format!("{faces} faces exceed {}", budget.max_order_complex_faces));
        return Ok(report.finish());
    }
    let k = poset.order_complex();
    let h = if mod2_only { mod2_summary(&k) } else { complex_homology(&k, budget)? };
    order_complex_checks(&mut report, "order complex", &k, &h);
    compare_homology(&mut report, "order complex", &expected, &h);
    report.record_homology("order_complex", h);
    Ok(report.finish())
}

/// The full complex `Hom(C_5, K_{n+2})` and the small model have the same
/// homology (`n <= 2`).
pub fn full_vs_small_homology(n: u32, budget: &Budget) -> Result<VerificationReport> {
    if n > 2 {
        return Err(Error::InvalidParameter(format!("full model comparison needs n <= 2, got {n}")));
    }
    let mut report = VerificationReport::new("full-vs-small", format!("n={n}"));
    let k = n + 2;
    let full_cells = enumerate_multihoms(&cycle(5), &complete(k));
    let vertices = full_cells.iter().filter(|c| c.dim() == 0).count();
    report.count("full_cells", full_cells.len());
    // chromatic polynomial of C_5
    let proper_colourings = (k as i64 - 1).pow(5) - (k as i64 - 1);
    report.check_eq("vertex cells are the proper colourings", proper_colourings, vertices as i64);
    let full = multihom_poset(full_cells);
    let small = multihom_poset(small_model_cells(n)?);
    let sizes: Vec<u128> = [&full, &small].iter().map(|p| p.chain_counts().iter().sum()).collect();
    if sizes.iter().any(|&s| s > budget.max_order_complex_faces) {
        report.skip("full and small homology agree", format!("order complexes have {sizes:?} faces"));
        return Ok(report.finish());
    }
    let (kf, ks) = (full.order_complex(), small.order_complex());
    let (hf, hs) = (complex_homology(&kf, budget)?, complex_homology(&ks, budget)?);
    order_complex_checks(&mut report, "full", &kf, &hf);
    order_complex_checks(&mut report, "small", &ks, &hs);
    report.check_eq("full and small homology agree", &hf, &hs);
    if let Some(expected) = stiefel_homology(n) {
        compare_homology(&mut report, "full", &expected, &hf);
    }
    report.record_homology("full", hf);
    report.record_homology("small", hs);
    Ok(report.finish())
}

/// `map_to_triple ∘ flip = triple_involution ∘ map_to_triple`, and both
/// involutions are order automorphisms squaring to the identity.
pub fn involution_equivariance(n: u32, budget: &Budget) -> Result<VerificationReport> {
    budget.check_n(n)?;
    let mut report = VerificationReport::new("involution", format!("n={n}"));
    let cells = small_model_cells(n)?;
    report.count("cells", cells.len());
    if cells.len() > budget.max_poset_elements {
        report.skip("square commutes", format!("{} elements exceed the poset budget", cells.len()));
        return Ok(report.finish());
    }
    let ground = ground_set(n)?;
    let source = multihom_poset(cells);
    let flip = c5_flip_involution(&source)?;
    report.check("flip is an order automorphism", flip.is_isomorphism(), "");
    report.check("flip squared is the identity", flip.after(&flip)?.is_identity(), "");
    report.count("flip_fixed_points", (0..source.len()).filter(|&i| flip.apply(i) == i).count());

    let space = TripleSpace::new(&sphere_boundary_faces(n)?)?.b();
    let lookup = space.lookup();
    let images: Vec<TripleElement> = source
        .payloads()
        .iter()
        .map(|p| map_to_triple(p.as_hom()?, ground).ok_or_else(|| Error::InvalidParameter(format!("{p}"))))
        .collect::<Result<_>>()?;
    let broken = (0..source.len()).find(|&i| images[flip.apply(i)] != triple_involution(&images[i], ground));
    report.check(
        "square commutes",
        broken.is_none(),
        match broken {
            None => format!("{} elements", source.len()),
            Some(i) => format!(
                "{}: flip gives {}, involution gives {}",
                source.payload(i),
                images[flip.apply(i)],
                triple_involution(&images[i], ground)
            ),
        },
    );

    let tau: Option<Vec<usize>> =
        space.triples.iter().map(|t| lookup.get(&triple_involution(t, ground)).copied()).collect();
    match tau {
        Some(tau) => {
            report.check("triple involution is an order automorphism", space.poset.is_isomorphism(&space.poset, &tau), "");
            report.check("triple involution squared is the identity", (0..tau.len()).all(|i| tau[tau[i]] == i), "");
        }
        None => {
            report.check("triple involution is an order automorphism", false, "involution leaves the triple poset");
        }
    }
    Ok(report.finish())
}

/// `Ind(G)` is a sphere, `Hom(G, K_n)` has the predicted top dimension, and
/// every vertex link of its order complex is a sphere of complementary
/// dimension.
pub fn manifold_criterion(g: &Graph, n: u32, budget: &Budget) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("manifold", format!("G={} n={n}", graph_label(g)));
    let ind = g.independence_complex();
    let verdict = ind.sphere_verdict();
    report.check("Ind(G) is a sphere", verdict.is_sphere(), format!("{verdict:?}"));
    let cells = enumerate_multihoms(g, &complete(n));
    report.count("cells", cells.len());
    report.count("vertex_cells", cells.iter().filter(|c| c.dim() == 0).count());
    let predicted = n as i64 * (ind.dim() as i64 + 1) - g.vertex_count() as i64;
    let top = cells.iter().map(|c| c.dim() as i64).max().unwrap_or(-1);
    report.check_eq("top cell dimension is n(dim Ind(G) + 1) − |V(G)|", predicted, top);

    let cc = cellular_chain_complex(&cells)?;
    let defect = cc.check_boundary_squared();
    report.check("cellular: ∂∂ = 0", defect.is_ok(), boundary_squared_detail(&defect));
    let hc = if cc.cells.iter().sum::<usize>() <= budget.max_integral_cells {
        cc.homology()?
    } else {
        HomologySummary { integral: None, mod2: cc.betti_mod2() }
    };

    if cells.len() > budget.max_poset_elements {
        report.skip("vertex links are spheres", format!("{} elements exceed the poset budget", cells.len()));
        report.record_homology("cellular", hc);
        return Ok(report.finish());
    }
    let poset = multihom_poset(cells);
    let faces: u128 = poset.chain_counts().iter().sum();
    report.count("order_complex_faces", faces);
    if faces > budget.max_order_complex_faces {
        report.skip("vertex links are spheres", format!("{faces} faces exceed {}", budget.max_order_complex_faces));
        report.record_homology("cellular", hc);
        return Ok(report.finish());
    }
    let k = poset.order_complex();
    let link_dim = k.dim() as i32 - 1;
    let verdicts: Vec<_> = (0..poset.len())
        .into_par_iter()
        .map(|x| poset.chain_link(&[x]).map(|l| l.sphere_verdict()))
        .collect::<Result<_>>()?;
    let bad = verdicts.iter().position(|v| !v.is_sphere() || v.dim() != Some(link_dim));
    report.count("links_certified", verdicts.iter().filter(|v| v.is_certified()).count());
    report.check(
        "vertex links are spheres",
        bad.is_none(),
        match bad {
            None => format!("{} links of dimension {link_dim}", verdicts.len()),
            Some(x) => format!("cell {}: {:?}", poset.payload(x), verdicts[x]),
        },
    );
    let ho = complex_homology(&k, budget)?;
    order_complex_checks(&mut report, "order complex", &k, &ho);
    let agree = if ho.integral.is_some() && hc.integral.is_some() { ho == hc } else { ho.mod2 == hc.mod2 };
    report.check("order complex and cellular homology agree", agree, homology_line(&ho));
    report.record_homology("order_complex", ho);
    report.record_homology("cellular", hc);
    Ok(report.finish())
}

/// The families `C_M` attached to an independent set `S` behave like the dual
/// cells of `Ind(G)`.
pub fn dual_decomposition(g: &Graph, s: VertexSet) -> Result<VerificationReport> {
    let ind = g.independence_complex();
    if !ind.sphere_verdict().is_sphere() {
        return Err(Error::InvalidParameter(format!("Ind({}) is not a sphere", graph_label(g))));
    }
    let fam = families(g, s)?;
    let mut report = VerificationReport::new("dual", format!("G={} S={s}", graph_label(g)));
    let c: Vec<(VertexSet, BTreeSet<VertexSet>)> =
        fam.c.iter().map(|(m, cm)| (*m, cm.iter().copied().collect())).collect();
    let by_index: HashMap<VertexSet, &BTreeSet<VertexSet>> = c.iter().map(|(m, cm)| (*m, cm)).collect();
    report.count("families", c.len());

    let mut law_witness = None;
    for (m, cm) in &c {
        for (n, cn) in &c {
            let meet: BTreeSet<VertexSet> = cm.intersection(cn).copied().collect();
            let expected = by_index.get(&m.union(*n)).map(|x| (*x).clone()).unwrap_or_default();
            if meet != expected && law_witness.is_none() {
                law_witness = Some(format!("M={m} N={n}: |C_M ∩ C_N| = {}, expected {}", meet.len(), expected.len()));
            }
        }
    }
    report.check(
        "C_M ∩ C_N = C_{M ∪ N}, or empty when M ∪ N is dependent",
        law_witness.is_none(),
        law_witness.unwrap_or_else(|| format!("{} pairs", c.len() * c.len())),
    );

    let empty: Vec<String> = c.iter().filter(|(_, cm)| cm.is_empty()).map(|(m, _)| m.to_string()).collect();
    report.check("every C_M is nonempty", empty.is_empty(), empty.join(" "));
    let distinct = c.iter().map(|(_, cm)| cm).collect::<BTreeSet<_>>().len() == c.len();
    let reversing = c.iter().all(|(m, cm)| c.iter().all(|(n, cn)| cm.is_subset(cn) == n.is_subset(*m)));
    report.check("M ↦ C_M is injective and inclusion-reversing", distinct && reversing, "");
    let cells = Poset::from_leq(c.iter().map(|(m, _)| Payload::Set(*m)).collect(), |a, b| c[a].1.is_subset(&c[b].1))?;
    let faces = ind.face_poset()?;
    report.count("face_poset", faces.len());
    let iso = cells.opposite().find_isomorphism(&faces);
    report.check(
        "poset of the C_M is anti-isomorphic to the face poset of Ind(G)",
        iso.is_some(),
        format!("{} cells, {} faces", cells.len(), faces.len()),
    );

    let rest: Vec<VertexSet> = g.independent_set_list().into_iter().filter(|i| i.is_disjoint(s)).collect();
    let pos: HashMap<VertexSet, usize> = rest.iter().enumerate().map(|(i, x)| (*x, i)).collect();
    let ind_rest = Poset::from_leq(rest.iter().map(|x| Payload::Set(*x)).collect(), |a, b| rest[a].is_subset(rest[b]))?;
    let union_of = |families: Vec<&Vec<VertexSet>>| {
        SimplicialComplex::from_faces(
            families
                .into_iter()
                .flat_map(|f| ind_rest.order_complex_on(&f.iter().map(|x| pos[x]).collect::<Vec<_>>()).facets()),
        )
    };
    let from_b = union_of(fam.b.values().collect());
    let from_c = union_of(fam.c.values().collect());
    report.check_eq("the Δ(B_v) cover the union of the Δ(C_M)", from_c.f_vector(), from_b.f_vector());
    report.check("the Δ(B_v) cover exactly the union of the Δ(C_M)", from_b == from_c, "");
    Ok(report.finish())
}

/// Interval-poset subdivision checks for a poset `P`.
pub fn subdivision_suite(label: &str, p: &Poset, budget: &Budget) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("subdivision", label);
    report.count("P", p.len());
    let int = p.interval_poset();
    report.count("Int_P", int.len());
    let c32 = p.chain32_poset();
    report.count("chain32", c32.len());
    let sizes: u128 = [p, &int, &c32].iter().map(|x| x.chain_counts().iter().sum::<u128>()).max().unwrap_or(0);
    if p.len().max(int.len()).max(c32.len()) > budget.max_poset_elements || sizes > budget.max_order_complex_faces {
        report.skip("subdivision suite", "posets exceed the budget");
        return Ok(report.finish());
    }
    let (kp, ki, kc) = (p.order_complex(), int.order_complex(), c32.order_complex());
    let (hp, hi, hc) = (complex_homology(&kp, budget)?, complex_homology(&ki, budget)?, complex_homology(&kc, budget)?);
    report.check_eq("Δ(Int P) and ΔP have the same homology", &hp, &hi);
    report.check_eq("Δ(Int P) and ΔP have the same χ", kp.f_vector().euler(), ki.f_vector().euler());
    report.check_eq("Δ(chain32 P) and ΔP have the same homology", &hp, &hc);
    report.check_eq("vertices of Δ(Int P) are the pairs p ≤ q", p.weak_chains::<2>().len(), ki.face_count(0));

    let lhs = int.interval_poset();
    let rhs = p.iterated_interval_poset();
    report.count("Int_Int_P", lhs.len());
    let iso = lhs.find_isomorphism(&rhs).filter(|a| lhs.is_isomorphism(&rhs, a));
    report.check("Int(Int P) is isomorphic to the 4-chain poset", iso.is_some(), format!("{} elements", lhs.len()));
    report.record_homology("P", hp);
    report.record_homology("Int_P", hi);
    report.record_homology("chain32", hc);
    Ok(report.finish())
}

/// `Hom_{{1}}(K_2, K_{n+2})` is the face poset of `∂Δ^{n+1}` via `ψ ↦ ψ(2)`.
pub fn restriction_example(n: u32, budget: &Budget) -> Result<VerificationReport> {
    budget.check_n(n)?;
    let mut report = VerificationReport::new("restriction", format!("n={n}"));
    let (g, h) = (complete(2), complete(n + 2));
    let s = VertexSet::singleton(1)?;
    let cells = restricted_cells(&g, &h, s, RestrictionMethod::Criterion)?;
    let image = restricted_cells(&g, &h, s, RestrictionMethod::Image)?;
    report.check("criterion and restriction image agree", cells == image, format!("{} cells", cells.len()));
    let source = multihom_poset(cells);
    let target = sphere_boundary_faces(n)?;
    report.count("cells", source.len());
    report.count("faces", target.len());
    let index: HashMap<Vec<u32>, usize> = target
        .payloads()
        .iter()
        .enumerate()
        .map(|(i, f)| f.as_set().map(|s| (Vec::from(s), i)))
        .collect::<Result<_>>()?;
    let assignment: Option<Vec<usize>> = source
        .payloads()
        .iter()
        .map(|p| p.as_hom().ok().and_then(|phi| index.get(&Vec::from(phi.get(2))).copied()))
        .collect();
    let ok = assignment.is_some_and(|a| source.is_isomorphism(&target, &a));
    report.check("ψ ↦ ψ(2) is an isomorphism onto the face poset of ∂Δ^{n+1}", ok, "");
    Ok(report.finish())
}

/// Neighbourhood construction over `∂Δ^{n+1}`, with `ΔB` compared against the
/// Stiefel manifold table.
pub fn neighborhood_suite(n: u32, budget: &Budget) -> Result<VerificationReport> {
    budget.check_n(n)?;
    let mut report = verify_neighborhood_pair(&sphere_boundary_faces(n)?, budget)?;
    report.parameter = format!("∂Δ^{}", n + 1);
    if let (Some(expected), Some(found)) = (stiefel_homology(n), report.homology.get("ΔB").cloned()) {
        compare_homology(&mut report, "ΔB", &expected, &found);
    }
    Ok(report.finish())
}

/// Passes exactly when `inner` failed.
pub fn negative_control(inner: VerificationReport) -> VerificationReport {
    let mut report = VerificationReport::new(&format!("{}-negative-control", inner.scenario), inner.parameter.clone());
    let witness: Vec<String> = inner
        .assertions
        .iter()
        .filter(|a| a.status == crate::report::Status::Fail)
        .map(|a| format!("{} ({})", a.name, a.detail))
        .collect();
    report.check("scenario reports failure", inner.failed(), witness.join("; "));
    report.finish()
}

/// Short name for the named graph families, edge list otherwise.
fn graph_label(g: &Graph) -> String {
    let n = g.vertex_count() as u32;
    if n >= 3 && *g == cycle(n) {
        return format!("cycle:{n}");
    }
    if n >= 1 && *g == complete(n) {
        return format!("complete:{n}");
    }
    if n >= 1 && *g == crate::graph::path(n - 1) {
        return format!("path:{}", n - 1);
    }
    g.to_edge_list().trim_end().replace('\n', ";")
}

/// Scenarios runnable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Scenario {
    Stiefel,
    SmallHomology,
    FullVsSmall,
    Involution,
    Manifold,
    Dual,
    Subdivision,
    Restriction,
    Neighborhood,
}

impl Scenario {
    pub const ALL: [Scenario; 9] = [
        Scenario::Stiefel,
        Scenario::SmallHomology,
        Scenario::FullVsSmall,
        Scenario::Involution,
        Scenario::Manifold,
        Scenario::Dual,
        Scenario::Subdivision,
        Scenario::Restriction,
        Scenario::Neighborhood,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scenario::Stiefel => "stiefel",
            Scenario::SmallHomology => "small-homology",
            Scenario::FullVsSmall => "full-vs-small",
            Scenario::Involution => "involution",
            Scenario::Manifold => "manifold",
            Scenario::Dual => "dual",
            Scenario::Subdivision => "subdivision",
            Scenario::Restriction => "restriction",
            Scenario::Neighborhood => "neighborhood",
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scenario {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scenario::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown scenario {s:?}")))
    }
}

/// A report for a scenario that could not run.
pub fn error_report(scenario: &str, parameter: &str, err: &Error) -> VerificationReport {
    let mut report = VerificationReport::new(scenario, parameter);
    report.check("scenario runs", false, err.to_string());
    report.finish()
}

type Job = Box<dyn Fn(&Budget) -> VerificationReport + Send + Sync>;

fn job<F>(scenario: &'static str, parameter: String, f: F) -> Job
where
    F: Fn(&Budget) -> Result<VerificationReport> + Send + Sync + 'static,
{
    Box::new(move |b| f(b).unwrap_or_else(|e| error_report(scenario, &parameter, &e)))
}

/// The full battery, in a fixed order. Scenarios run in parallel.
pub fn report_all(budget: &Budget) -> Vec<VerificationReport> {
    let mut jobs: Vec<Job> = Vec::new();
    for n in [2, 3, 4] {
        jobs.push(job("manifold", format!("n={n}"), move |b| manifold_criterion(&cycle(5), n, b)));
    }
    jobs.push(job("manifold", "K2 n=4".into(), |b| manifold_criterion(&complete(2), 4, b)));
    for n in 0..=3u32.min(budget.max_n) {
        jobs.push(job("stiefel", format!("n={n}"), move |b| stiefel_iso(n, b)));
    }
    jobs.push(job("stiefel", "C7".into(), |b| stiefel_iso_for(&cycle(7), 1, b).map(negative_control)));
    for n in 0..=budget.max_n {
        jobs.push(job("small-homology", format!("n={n}"), move |b| small_model_homology(n, false, b)));
    }
    for n in 0..=2 {
        jobs.push(job("full-vs-small", format!("n={n}"), move |b| full_vs_small_homology(n, b)));
    }
    for n in 0..=budget.max_n {
        jobs.push(job("restriction", format!("n={n}"), move |b| restriction_example(n, b)));
    }
    for n in 0..=3u32.min(budget.max_n) {
        jobs.push(job("involution", format!("n={n}"), move |b| involution_equivariance(n, b)));
    }
    for n in [1, 2] {
        jobs.push(job("neighborhood", format!("n={n}"), move |b| neighborhood_suite(n, b)));
    }
    let pentagon_s = VertexSet::from_labels([2, 4]).expect("valid labels");
    jobs.push(job("dual", "C5 {2,4}".into(), move |_| dual_decomposition(&cycle(5), pentagon_s)));
    jobs.push(job("dual", "C5 {2}".into(), |_| dual_decomposition(&cycle(5), VertexSet::singleton(2)?)));
    jobs.push(job("dual", "K2 {1}".into(), |_| dual_decomposition(&complete(2), VertexSet::singleton(1)?)));
    jobs.push(job("subdivision", "chain:3".into(), |b| subdivision_suite("chain:3", &Poset::chain(3), b)));
    for n in [1, 2] {
        jobs.push(job("subdivision", format!("n={n}"), move |b| {
            subdivision_suite(&format!("∂Δ^{}", n + 1), &sphere_boundary_faces(n)?, b)
        }));
    }
    jobs.par_iter().map(|j| j(budget)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stiefel_table_is_consistent() {
        for n in 0..=4 {
            let h = stiefel_homology(n).unwrap();
            assert!(h.consistent_mod2(), "n={n}");
        }
        assert_eq!(stiefel_homology(2).unwrap().groups_text().unwrap(), "(Z, Z/2, 0, Z)");
        assert!(stiefel_homology(5).is_none());
    }

    #[test]
    fn map_to_triple_small_example() {
        let phi = MultiHom::from_pairs([
            (1, VertexSet::from_labels([1]).unwrap()),
            (3, VertexSet::from_labels([2]).unwrap()),
            (5, VertexSet::from_labels([2]).unwrap()),
        ])
        .unwrap();
        let ground = ground_set(1).unwrap();
        let t = map_to_triple(&phi, ground).unwrap();
        let set = |x: &[u32]| VertexSet::from_labels(x.iter().copied()).unwrap();
        assert_eq!(t, TripleElement { p: set(&[1, 3]), q: set(&[1]), r: set(&[1, 3]) });
        assert_eq!(triple_involution(&triple_involution(&t, ground), ground), t);
    }

    #[test]
    fn target_count_matches_enumeration() {
        for n in 0..=2 {
            let ground = ground_set(n).unwrap();
            assert_eq!(triple_target_len(ground), triple_target(ground).0.len());
        }
    }

    #[test]
    fn stiefel_iso_small_cases() {
        let b = Budget::default();
        for n in 0..=2 {
            let r = stiefel_iso(n, &b).unwrap();
            assert!(r.passed(), "{}", r.to_text());
        }
        let r = stiefel_iso(1, &b).unwrap();
        assert_eq!(r.counts["restricted_model"], 36);
    }

    #[test]
    fn cycle_seven_is_rejected() {
        let r = stiefel_iso_for(&cycle(7), 1, &Budget::default()).unwrap();
        assert!(r.failed());
        assert!(negative_control(r).passed());
    }

    #[test]
    fn budget_limits_n() {
        let b = Budget { max_n: 2, ..Budget::default() };
        assert!(stiefel_iso(3, &b).is_err());
    }

    #[test]
    fn scenario_names_round_trip() {
        for s in Scenario::ALL {
            assert_eq!(s.name().parse::<Scenario>().unwrap(), s);
        }
        assert!("nope".parse::<Scenario>().is_err());
    }

    #[test]
    fn graph_labels() {
        assert_eq!(graph_label(&cycle(5)), "cycle:5");
        assert_eq!(graph_label(&complete(2)), "complete:2");
        assert_eq!(graph_label(&crate::graph::path(2)), "path:2");
    }
}
