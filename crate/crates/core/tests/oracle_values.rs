//! Counts and f-vectors frozen from the brute-force oracle in
//! `tests/oracles/derive_values.py`, which enumerates subsets and chains
//! directly and shares no code with the library.

use homtop::graph::{complete, cycle, VertexSet};
use homtop::homcomplex::{enumerate_multihoms, multihom_poset, restricted_cells, RestrictionMethod};
use homtop::homology::homology_summary;
use homtop::neighborhoods::{build_d, build_nb, TripleSpace};
use homtop::verify::{small_model_cells, sphere_boundary_faces};
use homtop::{HomologySummary, Poset};

fn set(labels: &[u32]) -> VertexSet {
    VertexSet::from_labels(labels.iter().copied()).unwrap()
}

fn f(p: &Poset) -> Vec<usize> {
    p.order_complex().f_vector().counts
}

#[test]
fn hom_c5_cell_counts() {
    for (k, cells) in [(2, 0), (3, 60), (4, 2160), (5, 45540)] {
        assert_eq!(enumerate_multihoms(&cycle(5), &complete(k)).len(), cells, "K_{k}");
    }
}

#[test]
fn proper_colourings_of_c5() {
    for (k, count) in [(3, 30), (4, 240)] {
        let vertices = enumerate_multihoms(&cycle(5), &complete(k)).iter().filter(|c| c.dim() == 0).count();
        assert_eq!(vertices, count);
    }
}

#[test]
fn small_model_counts_by_both_methods() {
    for (k, cells) in [(2, 0), (3, 36), (4, 480), (5, 4260)] {
        let s = set(&[2, 4]);
        let image = restricted_cells(&cycle(5), &complete(k), s, RestrictionMethod::Image).unwrap();
        let criterion = restricted_cells(&cycle(5), &complete(k), s, RestrictionMethod::Criterion).unwrap();
        assert_eq!(image.len(), cells, "K_{k}");
        assert_eq!(image, criterion, "K_{k}");
    }
}

#[test]
fn hom_k2_k3() {
    assert_eq!(enumerate_multihoms(&complete(2), &complete(3)).len(), 12);
}

#[test]
fn triple_posets_over_the_triangle() {
    let p = sphere_boundary_faces(1).unwrap();
    let (n, b) = build_nb(&p).unwrap();
    assert_eq!((n.len(), b.len(), build_d(&p).unwrap().len()), (54, 36, 18));
    assert_eq!(f(&b.poset), vec![36, 36]);
    assert_eq!(f(&n.poset), vec![54, 126, 72]);
    assert_eq!(f(&TripleSpace::new(&p).unwrap().ambient()), vec![72, 216, 144]);
}

#[test]
fn triple_posets_over_the_tetrahedron() {
    let p = sphere_boundary_faces(2).unwrap();
    let (n, b) = build_nb(&p).unwrap();
    assert_eq!((n.len(), b.len(), build_d(&p).unwrap().len()), (590, 480, 110));
    assert_eq!(f(&b.poset), vec![480, 3360, 5760, 2880]);
}

#[test]
fn interval_constructions_on_sphere_boundaries() {
    let cases = [
        (1, 6, vec![6, 6], 12, vec![12, 12], 24, 18, vec![18, 18]),
        (2, 14, vec![14, 36, 24], 50, vec![50, 144, 96], 194, 110, vec![110, 324, 216]),
    ];
    for (n, size, fp, int_size, fi, four, c32, fc) in cases {
        let p = sphere_boundary_faces(n).unwrap();
        assert_eq!(p.len(), size);
        assert_eq!(f(&p), fp);
        let int = p.interval_poset();
        assert_eq!(int.len(), int_size);
        assert_eq!(f(&int), fi);
        assert_eq!(p.iterated_interval_poset().len(), four);
        assert_eq!(int.interval_poset().len(), four);
        let chain32 = p.chain32_poset();
        assert_eq!(chain32.len(), c32);
        assert_eq!(f(&chain32), fc);
    }
}

#[test]
fn interval_constructions_on_chains() {
    for (m, int, four, c32) in [(2, 3, 5, 4), (3, 6, 15, 10)] {
        let p = Poset::chain(m);
        assert_eq!(p.interval_poset().len(), int);
        assert_eq!(p.iterated_interval_poset().len(), four);
        assert_eq!(p.chain32_poset().len(), c32);
    }
}

#[test]
fn order_complex_of_hom_c5_k4() {
    let cells = enumerate_multihoms(&cycle(5), &complete(4));
    assert_eq!(cells.iter().map(|c| c.dim()).max(), Some(3));
    let k = multihom_poset(cells).order_complex();
    assert_eq!(k.f_vector().counts, vec![2160, 15120, 25920, 12960]);
    assert_eq!(k.f_vector().euler(), 0);
}

/// Betti numbers over `F_p` implied by integral homology.
fn betti_mod(h: &HomologySummary, p: u64) -> Vec<usize> {
    let groups = h.integral.as_ref().unwrap();
    let t = |d: usize| groups[d].torsion.iter().filter(|&&x| x % p == 0).count();
    (0..groups.len()).map(|d| groups[d].betti + t(d) + if d > 0 { t(d - 1) } else { 0 }).collect()
}

#[test]
fn betti_numbers_mod_two_and_three() {
    // the oracle reduces the boundary matrices over F_2 and F_3 directly
    let (_, b) = build_nb(&sphere_boundary_faces(2).unwrap()).unwrap();
    let hb = homology_summary(&b.poset.order_complex()).unwrap();
    assert_eq!(betti_mod(&hb, 2), vec![1, 1, 1, 1]);
    assert_eq!(betti_mod(&hb, 3), vec![1, 0, 0, 1]);
    assert_eq!(hb.mod2, vec![1, 1, 1, 1]);

    let full = multihom_poset(enumerate_multihoms(&cycle(5), &complete(4))).order_complex();
    let hf = homology_summary(&full).unwrap();
    assert_eq!(betti_mod(&hf, 2), vec![1, 1, 1, 1]);
    assert_eq!(betti_mod(&hf, 3), vec![1, 0, 0, 1]);
}

#[test]
fn small_model_is_the_restriction_of_the_full_model() {
    let mut small = small_model_cells(2).unwrap();
    small.sort();
    let keep = set(&[1, 3, 5]);
    let mut restricted: Vec<_> = enumerate_multihoms(&cycle(5), &complete(4)).iter().map(|c| c.restrict(keep)).collect();
    restricted.sort();
    restricted.dedup();
    assert_eq!(restricted, small);
}
