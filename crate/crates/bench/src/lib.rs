//! Inputs shared by the benchmarks.

use homtop::graph::{complete, cycle};
use homtop::homcomplex::{restricted_cells, RestrictionMethod};
use homtop::{MultiHom, SimplicialComplex, VertexSet};

/// Cells of the restricted model `Hom_{2,4}(C_5, K_{n+2})`.
pub fn small_model_cells(n: u32) -> Vec<MultiHom> {
    let s = VertexSet::from_labels([2, 4]).expect("valid labels");
    restricted_cells(&cycle(5), &complete(n + 2), s, RestrictionMethod::Criterion).expect("independent set")
}

/// Order complex of the restricted model `Hom_{2,4}(C_5, K_{n+2})`.
pub fn small_model_order_complex(n: u32) -> SimplicialComplex {
    homtop::homcomplex::multihom_poset(small_model_cells(n)).order_complex()
}
