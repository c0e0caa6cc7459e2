//! Smith normal form over the integers.
//!
//! Sparse phase: columns are reduced against unit pivots (any `±1` entry of a
//! fully reduced column becomes a pivot), which splits off an identity block.
//! The residual block, free of unit pivots, goes through a dense SNF. Both
//! phases run on checked `i64` first and are redone with big integers if any
//! intermediate value overflows.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Sparse integer matrix stored by columns; each column is sorted by row.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: Vec<Vec<(u32, i32)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: Vec<Vec<(u32, i32)>>) -> Self {
        SparseMatrix { rows, cols }
    }

    pub fn from_dense(dense: &[Vec<i64>]) -> Self {
        let rows = dense.len();
        let ncols = dense.first().map_or(0, Vec::len);
        let cols = (0..ncols)
            .map(|j| {
                (0..rows)
                    .filter(|&i| dense[i][j] != 0)
                    .map(|i| (i as u32, i32::try_from(dense[i][j]).expect("entry fits in i32")))
                    .collect()
            })
            .collect();
        SparseMatrix { rows, cols }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0i64; self.cols.len()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, a) in col {
                out[i as usize][j] = a as i64;
            }
        }
        out
    }
}

/// Rank and the nontrivial part of the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub rank: usize,
    /// Invariant factors `d_1 | d_2 | ... | d_r`, all positive.
    pub invariant_factors: Vec<u64>,
}

impl SmithForm {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<u64> {
        self.invariant_factors.iter().copied().filter(|&d| d > 1).collect()
    }
}

/// Smith normal form of `m`.
pub fn smith_normal_form(m: &SparseMatrix) -> Result<SmithForm> {
    Ok(reduce_boundary(m, &[])?.0)
}

/// SNF of `m` with the columns flagged in `skip` removed, together with the
/// rows that carry unit pivots. Those rows index cells whose boundary columns
/// may be skipped in the next-lower boundary map without changing its SNF.
pub(crate) fn reduce_boundary(m: &SparseMatrix, skip: &[bool]) -> Result<(SmithForm, Vec<u32>)> {
    let (units, pivot_rows, residual) = match unit_phase::<i64>(m, skip) {
        Some((u, rows, res)) => (u, rows, densify(&res)),
        None => {
            let (u, rows, res) = unit_phase::<BigInt>(m, skip).expect("big integers do not overflow");
            (u, rows, densify(&res))
        }
    };
    let factors: Vec<BigInt> = match residual {
        Dense::Small(a) => match dense_diagonal(a.clone()) {
            Some(d) => d.into_iter().map(BigInt::from).collect(),
            None => dense_diagonal(a.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect())
                .expect("big integers do not overflow"),
        },
        Dense::Big(a) => dense_diagonal(a).expect("big integers do not overflow"),
    };
    let mut invariant_factors = vec![1u64; units];
    for f in factors {
        invariant_factors.push(ToPrimitive::to_u64(&f).ok_or_else(|| Error::TorsionOverflow(f.to_string()))?);
    }
    invariant_factors.sort_unstable();
    Ok((SmithForm { rank: invariant_factors.len(), invariant_factors }, pivot_rows))
}

enum Dense {
    Small(Vec<Vec<i64>>),
    Big(Vec<Vec<BigInt>>),
}

trait Densify: Sized {
    fn densify_block(rows: Vec<Vec<Self>>) -> Dense;
}

impl Densify for i64 {
    fn densify_block(rows: Vec<Vec<Self>>) -> Dense {
        Dense::Small(rows)
    }
}

impl Densify for BigInt {
    fn densify_block(rows: Vec<Vec<Self>>) -> Dense {
        Dense::Big(rows)
    }
}

/// Residual columns as a dense block on the rows they touch.
fn densify<T: Coeff + Densify>(cols: &[Column<T>]) -> Dense {
    let mut rows: Vec<u32> = cols.iter().flat_map(|c| c.iter().map(|(r, _)| *r)).collect();
    rows.sort_unstable();
    rows.dedup();
    let mut dense = vec![vec![T::from_i64(0); cols.len()]; rows.len()];
    for (j, col) in cols.iter().enumerate() {
        for (r, a) in col {
            let i = rows.binary_search(r).expect("row present");
            dense[i][j] = a.clone();
        }
    }
    T::densify_block(dense)
}

/// Nonzero diagonal of the SNF of a dense matrix (absolute values, in
/// divisibility order); `None` on overflow.
fn dense_diagonal<T: Coeff>(mut a: Vec<Vec<T>>) -> Option<Vec<T>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_entry(&a, t..m, t..n) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t].clone();
            let mut leftover = false;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let (q, r) = a[i][t].div_rem(&p)?;
                for j in t..n {
                    a[i][j] = a[i][j].sub(&q.mul(&a[t][j])?)?;
                }
                leftover |= !r.is_zero();
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let (q, r) = a[t][j].div_rem(&p)?;
                for row in a.iter_mut().skip(t) {
                    row[j] = row[j].sub(&q.mul(&row[t])?)?;
                }
                leftover |= !r.is_zero();
            }
            if leftover {
                // a remainder smaller than the pivot survived; make it the pivot
                let col_best = min_entry(&a, t + 1..m, t..t + 1);
                let row_best = min_entry(&a, t..t + 1, t + 1..n);
                let pick = match (col_best, row_best) {
                    (Some(c), Some(r)) => {
                        if a[c.0][c.1].abs_cmp_key() <= a[r.0][r.1].abs_cmp_key() {
                            c
                        } else {
                            r
                        }
                    }
                    (Some(c), None) => c,
                    (None, Some(r)) => r,
                    (None, None) => unreachable!("leftover implies a nonzero entry"),
                };
                a.swap(t, pick.0);
                for row in a.iter_mut() {
                    row.swap(t, pick.1);
                }
                continue;
            }
            // row and column cleared; enforce divisibility of the remainder
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].div_rem(&p).map_or(true, |(_, r)| r.is_zero())));
            match bad {
                Some(i) => {
                    for j in t..n {
                        a[t][j] = a[t][j].add(&a[i][j])?;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    Some(diag)
}

fn min_entry<T: Coeff>(
    a: &[Vec<T>],
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), u64)> = None;
    for i in rows {
        for j in cols.clone() {
            if a[i][j].is_zero() {
                continue;
            }
            let key = a[i][j].abs_cmp_key()?;
            if best.map_or(true, |(_, k)| key < k) {
                best = Some(((i, j), key));
            }
        }
    }
    best.map(|(p, _)| p)
}

/// Integer arithmetic used by the elimination, checked where it can fail.
pub(crate) trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn from_i64(x: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    /// Floor-style division with remainder `0 <= r < |d|`.
    fn div_rem(&self, d: &Self) -> Option<(Self, Self)>;
    fn abs_cmp_key(&self) -> Option<u64>;
    fn abs(&self) -> Self;
}

impl Coeff for i64 {
    fn from_i64(x: i64) -> Self {
        x
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        Some((self.checked_div_euclid(*d)?, self.checked_rem_euclid(*d)?))
    }
    fn abs_cmp_key(&self) -> Option<u64> {
        Some(self.unsigned_abs())
    }
    fn abs(&self) -> Self {
        i64::abs(*self)
    }
}

impl Coeff for BigInt {
    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        One::is_one(&Signed::abs(self))
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let r = ((self % d) + Signed::abs(d)) % Signed::abs(d);
        let q = (self - &r) / d;
        Some((q, r))
    }
    fn abs_cmp_key(&self) -> Option<u64> {
        // only used to rank pivots; huge values rank last
        Signed::abs(self).to_u64().or(Some(u64::MAX))
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
}

type Column<T> = Vec<(u32, T)>;

/// `a - k * b` for sorted sparse columns.
fn axpy<T: Coeff>(a: &Column<T>, k: &T, b: &Column<T>) -> Option<Column<T>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, T::from_i64(0).sub(&k.mul(&b[j].1)?)?));
            j += 1;
        } else {
            let v = a[i].1.sub(&k.mul(&b[j].1)?)?;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

/// Sparse unit-pivot phase. Returns the number of unit pivots, their rows, and
/// the residual block (non-pivot columns restricted to non-pivot rows), all of
/// whose entries lie outside the pivot rows.
#[allow(clippy::type_complexity)]
fn unit_phase<T: Coeff>(m: &SparseMatrix, skip: &[bool]) -> Option<(usize, Vec<u32>, Vec<Column<T>>)> {
    let mut pivot_of_row: Vec<Option<u32>> = vec![None; m.rows];
    let mut pivots: Vec<(u32, Column<T>)> = Vec::new();
    let mut pending: Vec<Column<T>> = Vec::new();

    let reduce = |col: Column<T>, pivot_of_row: &[Option<u32>], pivots: &[(u32, Column<T>)]| -> Option<Column<T>> {
        let mut col = col;
        // eliminate pivot rows from the highest row down; each step only
        // touches rows below the eliminated one
        loop {
            let Some(pos) = col.iter().rposition(|(r, _)| pivot_of_row[*r as usize].is_some()) else {
                return Some(col);
            };
            let (row, a) = col[pos].clone();
            let (prow, pcol) = &pivots[pivot_of_row[row as usize].expect("pivot") as usize];
            debug_assert_eq!(*prow, row);
            let u = &pcol.iter().find(|(r, _)| *r == row).expect("pivot entry").1;
            // u is ±1, so a / u = a * u
            let k = a.mul(u)?;
            col = axpy(&col, &k, pcol)?;
        }
    };

    // pivot columns must not carry entries in rows of pivots created later
    // than themselves except through the triangular structure; residual
    // columns are re-reduced until no new pivot appears
    let make_pivot = |col: Column<T>,
                          pivot_of_row: &mut Vec<Option<u32>>,
                          pivots: &mut Vec<(u32, Column<T>)>|
     -> Option<Column<T>> {
        match col.iter().rposition(|(_, a)| a.is_unit()) {
            Some(pos) => {
                let row = col[pos].0;
                pivot_of_row[row as usize] = Some(pivots.len() as u32);
                pivots.push((row, col));
                None
            }
            None => Some(col),
        }
    };

    for (j, col) in m.cols.iter().enumerate() {
        if skip.get(j).copied().unwrap_or(false) || col.is_empty() {
            continue;
        }
        let col: Column<T> = col.iter().map(|&(r, a)| (r, T::from_i64(a as i64))).collect();
        let col = reduce(col, &pivot_of_row, &pivots)?;
        if col.is_empty() {
            continue;
        }
        if let Some(rest) = make_pivot(col, &mut pivot_of_row, &mut pivots) {
            pending.push(rest);
        }
    }
    loop {
        let before = pivots.len();
        let mut next = Vec::new();
        for col in pending {
            let col = reduce(col, &pivot_of_row, &pivots)?;
            if col.is_empty() {
                continue;
            }
            if let Some(rest) = make_pivot(col, &mut pivot_of_row, &mut pivots) {
                next.push(rest);
            }
        }
        pending = next;
        if pivots.len() == before {
            break;
        }
    }
    let rows = pivots.iter().map(|(r, _)| *r).collect();
    Some((pivots.len(), rows, pending))
}
