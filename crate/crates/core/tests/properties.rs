//! Randomized invariants over small complexes, graphs, posets and matrices.

use proptest::collection::vec;
use proptest::prelude::*;

use homtop::graph::{complete, Graph, VertexSet};
use homtop::homcomplex::{cellular_chain_complex, enumerate_multihoms, enumerate_multihoms_general, multihom_poset};
use homtop::homcomplex::{restricted_cells, RestrictionMethod};
use homtop::homology::{boundary_matrices, homology_summary, mod2_summary, smith_normal_form, SparseMatrix};
use homtop::{MultiHom, Payload, Poset, SimplicialComplex};

fn complex_strategy(max_vertex: u32, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
    vec(vec(1..=max_vertex, 1..=4), 1..=max_facets).prop_map(SimplicialComplex::from_faces)
}

fn graph_strategy(max_n: u32) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(u32, u32)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
        let m = pairs.len();
        vec(any::<bool>(), m).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(e, _)| *e);
            Graph::new(VertexSet::range(1, n).unwrap(), edges).unwrap()
        })
    })
}

fn poset_strategy(max_n: usize) -> impl Strategy<Value = Poset> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let m = pairs.len();
        vec(prop::bool::weighted(0.35), m).prop_map(move |keep| {
            let rel: Vec<(usize, usize)> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(e, _)| *e).collect();
            Poset::from_relation((0..n).map(Payload::Index).collect(), &rel).unwrap()
        })
    })
}

fn subsets_of(face: &[u32]) -> Vec<Vec<u32>> {
    (1u32..(1 << face.len()))
        .map(|mask| face.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complexes_are_downward_closed(k in complex_strategy(8, 6)) {
        for d in 0..=k.dim() {
            for face in k.faces(d) {
                for sub in subsets_of(face) {
                    prop_assert!(k.contains(&sub), "{:?} missing from closure of {:?}", sub, face);
                }
            }
        }
    }

    #[test]
    fn boundary_squares_to_zero(k in complex_strategy(8, 6)) {
        prop_assert!(boundary_matrices(&k).check_boundary_squared().is_ok());
    }

    #[test]
    fn euler_characteristic_two_ways(k in complex_strategy(8, 6)) {
        let h = homology_summary(&k).unwrap();
        prop_assert_eq!(k.f_vector().euler(), h.euler());
        let b: i64 = h.betti().unwrap().iter().enumerate().map(|(d, &x)| if d % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
        prop_assert_eq!(b, h.euler());
    }

    #[test]
    fn integral_and_mod2_agree_by_universal_coefficients(k in complex_strategy(7, 7)) {
        let h = homology_summary(&k).unwrap();
        prop_assert!(h.consistent_mod2(), "{}", h.to_text());
        prop_assert_eq!(&h.mod2, &mod2_summary(&k).mod2);
        prop_assert_eq!(&h.mod2, &boundary_matrices(&k).betti_mod2());
    }

    #[test]
    fn barycentric_subdivision_preserves_homology(k in complex_strategy(6, 4)) {
        let sd = k.barycentric().unwrap();
        prop_assert_eq!(homology_summary(&k).unwrap(), homology_summary(&sd).unwrap());
    }

    #[test]
    fn join_f_vector_is_a_convolution(a in complex_strategy(5, 3), b in complex_strategy(5, 3)) {
        let j = a.join(&b);
        let with_empty = |k: &SimplicialComplex| {
            let mut f = vec![1usize];
            f.extend(k.f_vector().counts);
            f
        };
        let (fa, fb) = (with_empty(&a), with_empty(&b));
        let mut expected = vec![0usize; fa.len() + fb.len() - 1];
        for (i, x) in fa.iter().enumerate() {
            for (k, y) in fb.iter().enumerate() {
                expected[i + k] += x * y;
            }
        }
        prop_assert_eq!(with_empty(&j), expected);
    }

    #[test]
    fn link_of_a_vertex_in_a_cone_is_the_base(k in complex_strategy(6, 4)) {
        let apex = SimplicialComplex::simplex(&[50]);
        let cone = k.join_disjoint(&apex);
        prop_assert_eq!(cone.link(&[50]).unwrap(), k.clone());
        let mut point = vec![1];
        point.resize(cone.dim() as usize + 1, 0);
        prop_assert_eq!(homology_summary(&cone).unwrap().betti().unwrap(), point);
    }

    #[test]
    fn link_faces_extend_to_faces(k in complex_strategy(7, 5), pick in any::<prop::sample::Index>()) {
        let vertices = k.vertices();
        let v = vertices[pick.index(vertices.len())];
        let link = k.link(&[v]).unwrap();
        for d in 0..=link.dim() {
            for face in link.faces(d) {
                let mut with_v: Vec<u32> = face.to_vec();
                with_v.push(v);
                with_v.sort_unstable();
                prop_assert!(k.contains(&with_v));
                prop_assert!(!face.contains(&v));
            }
        }
    }

    #[test]
    fn common_neighbourhood_is_antitone(g in graph_strategy(7), a in any::<u64>(), b in any::<u64>()) {
        let vs = g.vertices();
        let small = VertexSet::from_bits(a & b & vs.bits());
        let large = VertexSet::from_bits((a & vs.bits()) | small.bits());
        let (ns, nl) = (g.common_neighbors(small).unwrap(), g.common_neighbors(large).unwrap());
        prop_assert!(nl.is_subset(ns));
    }

    #[test]
    fn independence_complex_is_flag(g in graph_strategy(7)) {
        let ind = g.independence_complex();
        for s in g.vertices().subsets().filter(|s| !s.is_empty()) {
            let labels: Vec<u32> = s.iter().collect();
            let pairwise = labels.iter().all(|&u| labels.iter().all(|&v| u == v || ind.contains(&[u.min(v), u.max(v)])));
            let singletons = labels.iter().all(|&u| ind.contains(&[u]));
            prop_assert_eq!(ind.contains(&labels), pairwise && singletons);
        }
    }

    #[test]
    fn multihoms_are_valid_and_enumerations_agree(g in graph_strategy(5), k in 1u32..=4) {
        let h = complete(k);
        let cells = enumerate_multihoms(&g, &h);
        for c in &cells {
            prop_assert!(c.validate(&g, &h).is_ok());
        }
        let mut general = enumerate_multihoms_general(&g, &h);
        general.sort();
        let mut sorted = cells.clone();
        sorted.sort();
        prop_assert_eq!(sorted, general);
    }

    #[test]
    fn multihoms_into_arbitrary_targets(g in graph_strategy(4), h in graph_strategy(4)) {
        for c in enumerate_multihoms(&g, &h) {
            prop_assert!(c.validate(&g, &h).is_ok());
            for (v, colours) in c.iter() {
                for u in g.neighbors(v).iter() {
                    for x in colours.iter() {
                        prop_assert!(c.get(u).is_subset(h.neighbors(x)));
                    }
                }
            }
        }
    }

    #[test]
    fn criterion_matches_restriction_image(g in graph_strategy(6), k in 2u32..=4, mask in any::<u64>()) {
        let s = VertexSet::from_bits(mask & g.vertices().bits());
        prop_assume!(g.is_independent(s) && s != g.vertices());
        let h = complete(k);
        let image = restricted_cells(&g, &h, s, RestrictionMethod::Image).unwrap();
        let mut criterion = restricted_cells(&g, &h, s, RestrictionMethod::Criterion).unwrap();
        criterion.sort();
        prop_assert_eq!(image, criterion);
    }

    #[test]
    fn cellular_and_order_complex_homology_agree(g in graph_strategy(4), k in 2u32..=3) {
        let cells = enumerate_multihoms(&g, &complete(k));
        prop_assume!(!cells.is_empty());
        let cc = cellular_chain_complex(&cells).unwrap();
        prop_assert!(cc.check_boundary_squared().is_ok());
        let order = multihom_poset(cells).order_complex();
        prop_assert_eq!(cc.homology().unwrap(), homology_summary(&order).unwrap());
    }

    #[test]
    fn multihom_text_round_trips(g in graph_strategy(4), k in 1u32..=3) {
        for c in enumerate_multihoms(&g, &complete(k)) {
            prop_assert_eq!(MultiHom::parse(&c.to_text()).unwrap(), c);
        }
    }

    #[test]
    fn edge_and_face_lists_round_trip(g in graph_strategy(7), k in complex_strategy(7, 5)) {
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
        prop_assert_eq!(SimplicialComplex::parse_face_list(&k.to_face_list()).unwrap(), k.clone());
        prop_assert_eq!(SimplicialComplex::parse_face_list(&k.to_full_face_list()).unwrap(), k);
    }

    #[test]
    fn interval_subdivision_preserves_homology(p in poset_strategy(6)) {
        let hp = homology_summary(&p.order_complex()).unwrap();
        prop_assert_eq!(&hp, &homology_summary(&p.interval_poset().order_complex()).unwrap());
        prop_assert_eq!(&hp, &homology_summary(&p.chain32_poset().order_complex()).unwrap());
        let int = p.interval_poset();
        prop_assert!(int.interval_poset().find_isomorphism(&p.iterated_interval_poset()).is_some());
    }

    #[test]
    fn chain_counts_match_order_complex(p in poset_strategy(7)) {
        let counts: Vec<usize> = p.chain_counts().iter().map(|&c| c as usize).collect();
        prop_assert_eq!(counts, p.order_complex().f_vector().counts);
    }

    #[test]
    fn opposite_poset_has_the_same_order_complex(p in poset_strategy(7)) {
        prop_assert_eq!(p.opposite().order_complex(), p.order_complex());
        prop_assert_eq!(p.opposite().opposite(), p);
    }

    #[test]
    fn face_poset_order_complex_is_the_subdivision(k in complex_strategy(6, 4)) {
        let fp = k.face_poset().unwrap();
        prop_assert_eq!(fp.order_complex().f_vector(), k.barycentric().unwrap().f_vector());
    }

    #[test]
    fn isomorphism_search_finds_relabellings(p in poset_strategy(7), seed in any::<u64>()) {
        let n = p.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed | 1;
        for i in (1..n).rev() {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            perm.swap(i, (x % (i as u64 + 1)) as usize);
        }
        let mut rel = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if p.leq(a, b) {
                    rel.push((perm[a], perm[b]));
                }
            }
        }
        let q = Poset::from_relation((0..n).map(Payload::Index).collect(), &rel).unwrap();
        prop_assert!(p.is_isomorphism(&q, &perm));
        let found = p.find_isomorphism(&q).expect("isomorphic posets");
        prop_assert!(p.is_isomorphism(&q, &found));
    }

    #[test]
    fn smith_form_is_invariant_under_unimodular_moves(
        entries in vec(-4i64..=4, 12),
        ops in vec((0usize..4, 0usize..4, -2i64..=2, any::<bool>()), 0..8),
    ) {
        let mut m: Vec<Vec<i64>> = entries.chunks(4).map(|r| r.to_vec()).collect();
        let before = smith_normal_form(&SparseMatrix::from_dense(&m)).unwrap();
        for (i, j, c, rows) in ops {
            if rows {
                let (i, j) = (i % 3, j % 3);
                if i != j {
                    for col in 0..4 {
                        m[i][col] += c * m[j][col];
                    }
                }
            } else if i != j {
                for row in m.iter_mut() {
                    row[i] += c * row[j];
                }
            }
        }
        prop_assume!(m.iter().flatten().all(|x| x.abs() < 1 << 30));
        let after = smith_normal_form(&SparseMatrix::from_dense(&m)).unwrap();
        prop_assert_eq!(&before, &after);
        for w in before.invariant_factors.windows(2) {
            prop_assert_eq!(w[1] % w[0], 0);
        }
    }
}

#[test]
fn sphere_boundaries_are_certified_spheres() {
    for n in 1..=4u32 {
        let verts: Vec<u32> = (1..=n + 1).collect();
        let s = SimplicialComplex::simplex_boundary(&verts);
        let v = s.sphere_verdict();
        assert!(v.is_sphere() && v.dim() == Some(n as i32 - 1), "{v:?}");
        let ball = SimplicialComplex::simplex(&verts).sphere_verdict();
        assert!(ball.is_ball() && ball.dim() == Some(n as i32), "{ball:?}");
    }
}
