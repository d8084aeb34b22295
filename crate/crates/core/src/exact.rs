//! Sparse matrices over the integers with exact rank, column-space and
//! kernel computations.
//!
//! Rank is computed by fraction-free (Bareiss) elimination. Before
//! eliminating, the matrix is split into the connected components of its
//! row/column incidence graph; the operator matrices built in
//! [`crate::oracle`] preserve total degree, so they fall apart into many
//! small diagonal blocks and elimination stays cheap.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, &v) in row.iter().enumerate() {
                m.add(r, c, BigInt::from(v));
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (r, v) in col.iter().enumerate() {
                m.add(r, c, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of stored (nonzero) entries.
    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> BigInt {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Adds `value` to the entry at `(row, col)`, dropping it if the sum
    /// cancels.
    pub fn add(&mut self, row: usize, col: usize, value: BigInt) {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        if value.is_zero() {
            return;
        }
        let slot = self.entries.entry((row, col)).or_insert_with(BigInt::zero);
        *slot += value;
        if slot.is_zero() {
            self.entries.remove(&(row, col));
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn column(&self, col: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.rows];
        for (&(r, c), v) in &self.entries {
            if c == col {
                out[r] = v.clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut by_row: Vec<Vec<(usize, &BigInt)>> = vec![Vec::new(); other.rows];
        for (&(r, c), v) in &other.entries {
            by_row[r].push((c, v));
        }
        let mut out = ExactMatrix::zeros(self.rows, other.cols);
        for (&(r, t), a) in &self.entries {
            for &(c, b) in &by_row[t] {
                out.add(r, c, a * b);
            }
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> ExactMatrix {
        let mut position = vec![None; self.cols];
        for (n, &c) in cols.iter().enumerate() {
            position[c] = Some(n);
        }
        let mut out = ExactMatrix::zeros(self.rows, cols.len());
        for (&(r, c), v) in &self.entries {
            if let Some(n) = position[c] {
                out.entries.insert((r, n), v.clone());
            }
        }
        out
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.rows, other.rows, "row count mismatch in hstack");
        let mut out = self.clone();
        out.cols += other.cols;
        for (&(r, c), v) in &other.entries {
            out.entries.insert((r, self.cols + c), v.clone());
        }
        out
    }

    /// Reorders rows and columns: entry `(r, c)` moves to
    /// `(row_perm[r], col_perm[c])`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> ExactMatrix {
        assert_eq!(row_perm.len(), self.rows);
        assert_eq!(col_perm.len(), self.cols);
        let mut out = ExactMatrix::zeros(self.rows, self.cols);
        for (&(r, c), v) in &self.entries {
            out.entries.insert((row_perm[r], col_perm[c]), v.clone());
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.pivot_columns().len()
    }

    /// Columns that are not combinations of earlier columns, in increasing
    /// order. They form a basis of the column space.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut pivots: Vec<usize> = self
            .blocks()
            .into_iter()
            .flat_map(|block| {
                let mut dense = block.dense(self);
                echelon_pivots(&mut dense)
                    .into_iter()
                    .map(move |p| block.cols[p])
            })
            .collect();
        pivots.sort_unstable();
        pivots
    }

    pub fn column_space(&self) -> SubspaceBasis {
        let vectors = self
            .pivot_columns()
            .into_iter()
            .map(|c| self.column(c))
            .collect();
        SubspaceBasis {
            ambient: self.rows,
            vectors,
        }
    }

    /// A basis of the right kernel, as primitive integer vectors.
    pub fn kernel(&self) -> SubspaceBasis {
        let mut vectors = Vec::new();
        let mut touched = vec![false; self.cols];
        for block in self.blocks() {
            for &c in &block.cols {
                touched[c] = true;
            }
            for local in rational_kernel(&block.dense(self)) {
                let mut v = vec![BigInt::zero(); self.cols];
                for (n, x) in local.into_iter().enumerate() {
                    v[block.cols[n]] = x;
                }
                vectors.push(v);
            }
        }
        for (c, _) in touched.iter().enumerate().filter(|(_, &t)| !t) {
            let mut v = vec![BigInt::zero(); self.cols];
            v[c] = BigInt::one();
            vectors.push(v);
        }
        SubspaceBasis {
            ambient: self.cols,
            vectors,
        }
    }

    /// Connected components of the bipartite row/column incidence graph,
    /// restricted to rows and columns carrying at least one entry.
    fn blocks(&self) -> Vec<Block> {
        let n = self.rows + self.cols;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(r, c) in self.entries.keys() {
            let a = find(&mut parent, r);
            let b = find(&mut parent, self.rows + c);
            if a != b {
                parent[a] = b;
            }
        }
        let mut groups: BTreeMap<usize, Block> = BTreeMap::new();
        let mut row_seen = vec![false; self.rows];
        let mut col_seen = vec![false; self.cols];
        for &(r, c) in self.entries.keys() {
            let root = find(&mut parent, r);
            let block = groups.entry(root).or_default();
            if !row_seen[r] {
                row_seen[r] = true;
                block.rows.push(r);
            }
            if !col_seen[c] {
                col_seen[c] = true;
                block.cols.push(c);
            }
        }
        groups
            .into_values()
            .map(|mut b| {
                b.rows.sort_unstable();
                b.cols.sort_unstable();
                b
            })
            .collect()
    }
}

#[derive(Debug, Default)]
struct Block {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl Block {
    fn dense(&self, m: &ExactMatrix) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); self.cols.len()]; self.rows.len()];
        for (i, &r) in self.rows.iter().enumerate() {
            for (j, &c) in self.cols.iter().enumerate() {
                if let Some(v) = m.entries.get(&(r, c)) {
                    out[i][j] = v.clone();
                }
            }
        }
        out
    }
}

/// Bareiss elimination in place; returns the pivot columns. Every division
/// is exact because each intermediate entry is a minor of the input.
fn echelon_pivots(m: &mut [Vec<BigInt>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        // smallest nonzero magnitude keeps entries small
        let Some(p) = (rank..rows)
            .filter(|&i| !m[i][c].is_zero())
            .min_by(|&a, &b| m[a][c].abs().cmp(&m[b][c].abs()))
        else {
            continue;
        };
        m.swap(rank, p);
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = pivot_row[c].clone();
        for row in tail.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let num = &pivot * &row[j] - &factor * &pivot_row[j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "inexact Bareiss division");
                row[j] = q;
            }
        }
        prev = pivot;
        pivots.push(c);
        rank += 1;
    }
    pivots
}

/// Kernel of a dense integer matrix via reduced row echelon form over `Q`,
/// returned as primitive integer vectors.
fn rational_kernel(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| row.iter().cloned().map(BigRational::from_integer).collect())
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][c].recip();
        for x in a[rank].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[rank].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != rank && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.into_iter()
        .map(|f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -a[row][f].clone();
            }
            primitive(&v)
        })
        .collect()
}

fn primitive(v: &[BigRational]) -> Vec<BigInt> {
    let denom = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&denom / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

/// A linearly independent set of integer vectors spanning a subspace of
/// `Q^ambient`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient: usize,
    vectors: Vec<Vec<BigInt>>,
}

impl SubspaceBasis {
    /// Keeps the vectors that are independent of their predecessors.
    pub fn from_spanning(ambient: usize, vectors: Vec<Vec<BigInt>>) -> Self {
        ExactMatrix::from_columns(ambient, &vectors).column_space()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }

    pub fn to_matrix(&self) -> ExactMatrix {
        ExactMatrix::from_columns(self.ambient, &self.vectors)
    }

    pub fn sum_dim(&self, other: &SubspaceBasis) -> usize {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        self.to_matrix().hstack(&other.to_matrix()).rank()
    }

    /// `dim(A ∩ B) = dim A + dim B - dim(A + B)`.
    pub fn intersection_dim(&self, other: &SubspaceBasis) -> usize {
        self.dim() + other.dim() - self.sum_dim(other)
    }

    pub fn contains(&self, other: &SubspaceBasis) -> bool {
        self.sum_dim(other) == self.dim()
    }

    pub fn same_subspace(&self, other: &SubspaceBasis) -> bool {
        self.dim() == other.dim() && self.contains(other)
    }
}
