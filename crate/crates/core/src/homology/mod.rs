//! Exact simplicial and cellular homology.
//!
//! Integral homology comes from Smith normal forms of the boundary maps
//! ([`snf`]); mod-2 Betti numbers come from a separate GF(2) elimination
//! ([`gf2`]) that never looks at the integer computation, so the two can be
//! checked against each other through the universal coefficient theorem.

pub mod gf2;
pub mod snf;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::Result;
pub use snf::{smith_normal_form, SmithForm, SparseMatrix};

/// Chain groups and boundary maps; `boundaries[d - 1]` is `∂_d : C_d → C_{d-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ChainComplex {
    pub cells: Vec<usize>,
    pub boundaries: Vec<SparseMatrix>,
}

/// Result of [`ChainComplex::check_boundary_squared`] failing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryDefect {
    pub dim: usize,
    pub column: usize,
}

impl ChainComplex {
    pub fn new(cells: Vec<usize>, boundaries: Vec<SparseMatrix>) -> Self {
        debug_assert_eq!(boundaries.len() + 1, cells.len().max(1));
        ChainComplex { cells, boundaries }
    }

    pub fn top_dim(&self) -> Option<usize> {
        self.cells.len().checked_sub(1)
    }

    /// Verifies `∂_{d-1} ∘ ∂_d = 0` in every degree.
    pub fn check_boundary_squared(&self) -> std::result::Result<(), BoundaryDefect> {
        for d in 2..self.cells.len() {
            let outer = &self.boundaries[d - 2];
            let inner = &self.boundaries[d - 1];
            let bad = inner.cols.par_iter().position_first(|col| {
                let mut acc: std::collections::BTreeMap<u32, i64> = std::collections::BTreeMap::new();
                for &(r, a) in col {
                    for &(s, b) in &outer.cols[r as usize] {
                        *acc.entry(s).or_default() += a as i64 * b as i64;
                    }
                }
                acc.values().any(|&v| v != 0)
            });
            if let Some(column) = bad {
                return Err(BoundaryDefect { dim: d, column });
            }
        }
        Ok(())
    }

    /// Integral homology groups, unreduced.
    pub fn integral_homology(&self) -> Result<Vec<IntegralGroup>> {
        let top = match self.top_dim() {
            Some(t) => t,
            None => return Ok(Vec::new()),
        };
        let mut forms: Vec<Option<SmithForm>> = vec![None; top + 2];
        let mut clear: Vec<bool> = Vec::new();
        for d in (1..=top).rev() {
            let (form, pivot_rows) = snf::reduce_boundary(&self.boundaries[d - 1], &clear)?;
            clear = vec![false; self.cells[d - 1]];
            for r in pivot_rows {
                clear[r as usize] = true;
            }
            forms[d] = Some(form);
        }
        let rank = |d: usize| forms[d].as_ref().map_or(0, |f| f.rank);
        Ok((0..=top)
            .map(|d| IntegralGroup {
                betti: self.cells[d] - rank(d) - rank(d + 1),
                torsion: forms[d + 1].as_ref().map_or(Vec::new(), SmithForm::torsion),
            })
            .collect())
    }

    /// Mod-2 Betti numbers from the integer boundary matrices reduced mod 2.
    pub fn betti_mod2(&self) -> Vec<usize> {
        let top = match self.top_dim() {
            Some(t) => t,
            None => return Vec::new(),
        };
        let mut ranks = vec![0usize; top + 2];
        let mut clear: Vec<bool> = Vec::new();
        for d in (1..=top).rev() {
            let m = &self.boundaries[d - 1];
            let cols: Vec<Vec<u32>> =
                m.cols.iter().map(|c| c.iter().filter(|(_, a)| a % 2 != 0).map(|(r, _)| *r).collect()).collect();
            let (rank, lows) = gf2::reduce(&cols, m.rows, &clear);
            ranks[d] = rank;
            clear = vec![false; self.cells[d - 1]];
            for low in lows {
                clear[low as usize] = true;
            }
        }
        (0..=top).map(|d| self.cells[d] - ranks[d] - ranks[d + 1]).collect()
    }

    /// Integral and mod-2 homology.
    pub fn homology(&self) -> Result<HomologySummary> {
        let (integral, mod2) = rayon::join(|| self.integral_homology(), || self.betti_mod2());
        Ok(HomologySummary { integral: Some(integral?), mod2 })
    }

    pub fn euler(&self) -> i64 {
        alternating_sum(&self.cells)
    }
}

fn alternating_sum(xs: &[usize]) -> i64 {
    xs.iter().enumerate().map(|(d, &x)| if d % 2 == 0 { x as i64 } else { -(x as i64) }).sum()
}

/// `H_d ≅ Z^betti ⊕ ⨁ Z/t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegralGroup {
    pub betti: usize,
    pub torsion: Vec<u64>,
}

impl IntegralGroup {
    pub fn free(betti: usize) -> Self {
        IntegralGroup { betti, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for IntegralGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

/// Per-dimension homology: integral groups (when computed) and mod-2 Betti
/// numbers. Trailing zero dimensions up to the complex's dimension are kept.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologySummary {
    pub integral: Option<Vec<IntegralGroup>>,
    pub mod2: Vec<usize>,
}

impl HomologySummary {
    pub fn betti(&self) -> Option<Vec<usize>> {
        self.integral.as_ref().map(|g| g.iter().map(|x| x.betti).collect())
    }

    /// Euler characteristic from the mod-2 Betti numbers (equal to the
    /// integral one).
    pub fn euler(&self) -> i64 {
        alternating_sum(&self.mod2)
    }

    /// Universal coefficients: `b2_d = b_d + t_d + t_{d-1}` where `t_d` counts
    /// even invariant factors of `H_d`. Vacuously true without integral data.
    pub fn consistent_mod2(&self) -> bool {
        let Some(groups) = &self.integral else {
            return true;
        };
        if groups.len() != self.mod2.len() {
            return false;
        }
        let even = |d: usize| groups[d].torsion.iter().filter(|&&t| t % 2 == 0).count();
        (0..groups.len()).all(|d| self.mod2[d] == groups[d].betti + even(d) + if d > 0 { even(d - 1) } else { 0 })
    }

    /// Stable text form, one line per dimension.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for d in 0..self.mod2.len() {
            match &self.integral {
                Some(g) => {
                    let t: Vec<String> = g[d].torsion.iter().map(|t| t.to_string()).collect();
                    out.push_str(&format!("H_{d}: b={} torsion=[{}] b2={}\n", g[d].betti, t.join(","), self.mod2[d]));
                }
                None => out.push_str(&format!("H_{d}: b=? torsion=? b2={}\n", self.mod2[d])),
            }
        }
        out
    }

    /// Compact group notation, e.g. `(Z, Z/2, 0, Z)`.
    pub fn groups_text(&self) -> Option<String> {
        let g = self.integral.as_ref()?;
        Some(format!("({})", g.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
    }
}

impl fmt::Display for HomologySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Simplicial chain complex of `k` with orientations from sorted vertex order:
/// omitting the `i`-th vertex carries sign `(-1)^i`.
pub fn boundary_matrices(k: &SimplicialComplex) -> ChainComplex {
    let top = k.dim();
    if top < 0 {
        return ChainComplex::default();
    }
    let top = top as usize;
    let cells = (0..=top).map(|d| k.face_count(d as isize)).collect();
    let boundaries = (1..=top)
        .map(|d| {
            let faces: Vec<&[u32]> = k.faces(d as isize).collect();
            let cols = faces
                .par_iter()
                .map(|face| {
                    let mut col: Vec<(u32, i32)> = (0..face.len())
                        .map(|i| {
                            let sub: Vec<u32> =
                                face.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                            let row = k.index_of(&sub).expect("closed complex") as u32;
                            (row, if i % 2 == 0 { 1 } else { -1 })
                        })
                        .collect();
                    col.sort_unstable();
                    col
                })
                .collect();
            SparseMatrix::new(k.face_count(d as isize - 1), cols)
        })
        .collect();
    ChainComplex::new(cells, boundaries)
}

/// Integral homology via SNF and mod-2 Betti numbers via the direct GF(2)
/// route.
pub fn homology_summary(k: &SimplicialComplex) -> Result<HomologySummary> {
    let (integral, mod2) = rayon::join(|| boundary_matrices(k).integral_homology(), || gf2::betti_mod2(k));
    Ok(HomologySummary { integral: Some(integral?), mod2 })
}

/// Mod-2 Betti numbers only, for complexes too large for the integer route.
pub fn mod2_summary(k: &SimplicialComplex) -> HomologySummary {
    HomologySummary { integral: None, mod2: gf2::betti_mod2(k) }
}
