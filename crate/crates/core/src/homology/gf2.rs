//! Ranks of boundary maps over GF(2).
//!
//! Columns are sparse sorted row lists; reduction is by lowest nonzero row,
//! with clearing: a column whose cell is the pivot row of the next-higher
//! boundary map is known to reduce to zero and is skipped.

use rayon::prelude::*;

use crate::complex::SimplicialComplex;

/// Rank of a GF(2) matrix given by sparse columns, skipping flagged columns.
/// Also returns the pivot (lowest) row of each reduced nonzero column.
pub fn reduce(cols: &[Vec<u32>], nrows: usize, skip: &[bool]) -> (usize, Vec<u32>) {
    const NONE: u32 = u32::MAX;
    let mut pivot_of_row = vec![NONE; nrows];
    let mut reduced: Vec<Vec<u32>> = Vec::new();
    let mut scratch = Vec::new();
    for (j, col) in cols.iter().enumerate() {
        if skip.get(j).copied().unwrap_or(false) || col.is_empty() {
            continue;
        }
        let mut cur = col.clone();
        while let Some(&low) = cur.last() {
            let p = pivot_of_row[low as usize];
            if p == NONE {
                break;
            }
            symmetric_difference(&cur, &reduced[p as usize], &mut scratch);
            std::mem::swap(&mut cur, &mut scratch);
        }
        if let Some(&low) = cur.last() {
            pivot_of_row[low as usize] = reduced.len() as u32;
            reduced.push(cur);
        }
    }
    let lows = reduced.iter().map(|c| *c.last().expect("nonzero")).collect();
    (reduced.len(), lows)
}

fn symmetric_difference(a: &[u32], b: &[u32], out: &mut Vec<u32>) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
}

/// GF(2) boundary columns of the `d`-faces (`d >= 1`), rows indexing
/// `(d-1)`-faces.
pub fn boundary_columns(k: &SimplicialComplex, d: usize) -> Vec<Vec<u32>> {
    let faces: Vec<&[u32]> = k.faces(d as isize).collect();
    faces
        .par_iter()
        .map(|face| {
            let mut col: Vec<u32> = (0..face.len())
                .map(|i| {
                    let sub: Vec<u32> = face.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                    k.index_of(&sub).expect("closed complex") as u32
                })
                .collect();
            col.sort_unstable();
            col
        })
        .collect()
}

/// Mod-2 Betti numbers (unreduced) of `k`, computed directly from its faces.
pub fn betti_mod2(k: &SimplicialComplex) -> Vec<usize> {
    let top = k.dim();
    if top < 0 {
        return Vec::new();
    }
    let top = top as usize;
    let mut ranks = vec![0usize; top + 2];
    let mut clear: Vec<bool> = Vec::new();
    for d in (1..=top).rev() {
        let cols = boundary_columns(k, d);
        let (rank, lows) = reduce(&cols, k.face_count(d as isize - 1), &clear);
        ranks[d] = rank;
        clear = vec![false; k.face_count(d as isize - 1)];
        for low in lows {
            clear[low as usize] = true;
        }
    }
    (0..=top).map(|d| k.face_count(d as isize) - ranks[d] - ranks[d + 1]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_plane_mod2() {
        // 6-vertex RP^2
        let faces = [
            [1, 2, 3],
            [1, 3, 4],
            [1, 4, 5],
            [1, 5, 6],
            [1, 2, 6],
            [2, 3, 5],
            [3, 4, 6],
            [2, 4, 5],
            [3, 5, 6],
            [2, 4, 6],
        ];
        let k = SimplicialComplex::from_faces(faces.iter().map(|f| f.to_vec()));
        assert_eq!(betti_mod2(&k), vec![1, 1, 1]);
    }

    #[test]
    fn rank_with_clearing_flags() {
        let cols = vec![vec![0, 1], vec![1, 2], vec![0, 2]];
        assert_eq!(reduce(&cols, 3, &[]).0, 2);
        assert_eq!(reduce(&cols, 3, &[false, false, true]).0, 2);
    }
}
