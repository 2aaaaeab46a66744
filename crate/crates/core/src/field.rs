//! Dense linear algebra over a prime field `F_p`.
//!
//! Every dimension computation in the crate bottoms out here. Matrices are
//! small (a few dozen rows at most), so everything is dense and row-major.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The prime field `F_p`. Scalars are stored reduced in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u32,
}

impl Default for PrimeField {
    fn default() -> Self {
        Self::DEFAULT
    }
}

impl PrimeField {
    pub const DEFAULT: PrimeField = PrimeField { p: 5 };

    pub fn new(p: u32) -> Result<Self> {
        if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            return Err(Error::NotPrime(p));
        }
        // products of two reduced scalars must fit in u64
        if p > 1 << 31 {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a % self.p != 0, "inverse of zero in F_{}", self.p);
        let (mut t, mut new_t) = (0i64, 1i64);
        let (mut r, mut new_r) = (self.p as i64, a as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        self.reduce(t)
    }
}

/// A dense `rows x cols` matrix over a prime field.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mat {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Result of row reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub reduced: Mat,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat[F_{}; {}x{}]", self.field.p, self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "\n  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from integer rows, reducing modulo `p`.
    pub fn from_rows<R: AsRef<[i64]>>(field: PrimeField, rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| field.reduce(x)));
        }
        Self { field, rows: rows.len(), cols, data }
    }

    /// Row-major constructor. Entries must already be reduced.
    pub fn from_vec(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&x| x < field.p));
        Self { field, rows, cols, data }
    }

    /// A single column vector.
    pub fn column(field: PrimeField, entries: &[u32]) -> Self {
        Self::from_vec(field, entries.len(), 1, entries.to_vec())
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let f = self.field;
        let p = f.p as u64;
        let mut out = Mat::zeros(f, self.rows, rhs.cols);
        let mut acc = vec![0u64; rhs.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let row = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                for (slot, &b) in acc.iter_mut().zip(row) {
                    *slot = (*slot + a * b as u64) % p;
                }
            }
            for (c, &a) in acc.iter().enumerate() {
                out.data[r * rhs.cols + c] = a as u32;
            }
        }
        out
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.add(a, b)).collect();
        Mat { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Mat { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: u32) -> Mat {
        let f = self.field;
        Mat { field: f, rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| f.mul(a, s)).collect() }
    }

    /// Horizontal concatenation. All blocks need the same row count.
    pub fn hstack(field: PrimeField, rows: usize, blocks: &[&Mat]) -> Mat {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            out.paste(0, off, b);
            off += b.cols;
        }
        out
    }

    /// Vertical concatenation. All blocks need the same column count.
    pub fn vstack(field: PrimeField, cols: usize, blocks: &[&Mat]) -> Mat {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend_from_slice(&b.data);
        }
        Mat { field, rows, cols, data }
    }

    /// Block-diagonal sum.
    pub fn block_diag(field: PrimeField, blocks: &[&Mat]) -> Mat {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.paste(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Mat) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for r in 0..block.rows {
            let dst = (r0 + r) * self.cols + c0;
            self.data[dst..dst + block.cols].copy_from_slice(&block.data[r * block.cols..(r + 1) * block.cols]);
        }
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Mat {
        assert!(rows.end <= self.rows && cols.end <= self.cols);
        let mut out = Mat::zeros(self.field, rows.len(), cols.len());
        for (i, r) in rows.enumerate() {
            let src = r * self.cols + cols.start;
            out.data[i * out.cols..(i + 1) * out.cols].copy_from_slice(&self.data[src..src + cols.len()]);
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Mat {
        let mut out = Mat::zeros(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.data[r * cols.len() + j] = self.data[r * self.cols + c];
            }
        }
        out
    }

    pub fn col(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| m.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for k in 0..cols {
                    m.data.swap(pr * cols + k, r * cols + k);
                }
            }
            let inv = f.inv(m.data[r * cols + c]);
            if inv != 1 {
                for k in c..cols {
                    m.data[r * cols + k] = f.mul(m.data[r * cols + k], inv);
                }
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = m.data[i * cols + c];
                if factor == 0 {
                    continue;
                }
                for k in c..cols {
                    let sub = f.mul(factor, m.data[r * cols + k]);
                    m.data[i * cols + k] = f.sub(m.data[i * cols + k], sub);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { rank: pivots.len(), pivots, reduced: m }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `{x : self * x = 0}` as the columns of the returned matrix.
    pub fn kernel_basis(&self) -> Mat {
        let f = self.field;
        let Rref { pivots, reduced, .. } = self.rref();
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let mut k = Mat::zeros(f, n, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                k.set(pc, j, f.neg(reduced.get(i, fc)));
            }
        }
        k
    }

    /// Basis of the column space, taken from the pivot columns of `self`.
    pub fn column_basis(&self) -> Mat {
        let pivots = self.rref().pivots;
        self.select_columns(&pivots)
    }

    /// Rows spanning `{y : y * self = 0}`, one per row of the result.
    pub fn left_kernel(&self) -> Mat {
        self.transpose().kernel_basis().transpose()
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = Mat::hstack(self.field, n, &[self, &Mat::identity(self.field, n)]);
        let r = aug.rref();
        if r.pivots.iter().take(n).copied().ne(0..n) {
            return None;
        }
        Some(r.reduced.submatrix(0..n, n..2 * n))
    }

    /// Some `x` with `self * x = rhs`, or `None` if the system is inconsistent.
    pub fn solve(&self, rhs: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, rhs.rows, "solve: row mismatch");
        let f = self.field;
        let aug = Mat::hstack(f, self.rows, &[self, rhs]);
        let Rref { pivots, reduced, .. } = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Mat::zeros(f, self.cols, rhs.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, reduced.get(i, self.cols + j));
            }
        }
        Some(x)
    }

    /// A right inverse `s` with `self * s = I` for a matrix of full row rank.
    pub fn right_inverse(&self) -> Option<Mat> {
        self.solve(&Mat::identity(self.field, self.rows))
    }

    /// Standard basis vectors completing the column span of `self` to the
    /// whole ambient space, in ascending coordinate order.
    pub fn complement_basis(&self) -> Mat {
        let f = self.field;
        let n = self.rows;
        let aug = Mat::hstack(f, n, &[&self.column_basis(), &Mat::identity(f, n)]);
        let base = self.rank();
        let extra: Vec<usize> = aug.rref().pivots.into_iter().filter(|&c| c >= base).map(|c| c - base).collect();
        Mat::identity(f, n).select_columns(&extra)
    }
}

/// Basis for the sum of the column spans of `bases`.
pub fn subspace_sum(field: PrimeField, ambient: usize, bases: &[&Mat]) -> Result<Mat> {
    if let Some(b) = bases.iter().find(|b| b.rows() != ambient) {
        return Err(Error::DimensionMismatch(format!(
            "subspace of ambient dimension {} in a sum over dimension {ambient}",
            b.rows()
        )));
    }
    Ok(Mat::hstack(field, ambient, bases).column_basis())
}

pub fn subspace_dim(basis: &Mat) -> usize {
    basis.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    #[test]
    fn primes() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(3).is_ok());
        assert!(PrimeField::new(7).is_ok());
        assert_eq!(PrimeField::new(4), Err(Error::NotPrime(4)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn rref_examples() {
        let f = f5();
        let r = Mat::identity(f, 2).rref();
        assert_eq!((r.rank, r.pivots), (2, vec![0, 1]));
        let r = Mat::zeros(f, 3, 2).rref();
        assert_eq!((r.rank, r.pivots), (0, vec![]));
        let a = Mat::from_rows(f, &[[1, 2], [2, 4]]);
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        let f = f5();
        assert_eq!(Mat::identity(f, 4).kernel_basis().cols(), 0);
        assert_eq!(Mat::zeros(f, 2, 3).kernel_basis().cols(), 3);
        let a = Mat::from_rows(f, &[[1, 2], [2, 4]]);
        let k = a.kernel_basis();
        assert_eq!(k.cols(), 1);
        // proportional to (3, 1)
        let v = k.col(0);
        assert_eq!(f.mul(v[0], f.inv(v[1])), 3);
        assert!(a.mul(&k).is_zero());
    }

    #[test]
    fn sums() {
        let f = f5();
        let e1 = Mat::column(f, &[1, 0]);
        let e2 = Mat::column(f, &[0, 1]);
        assert_eq!(subspace_dim(&subspace_sum(f, 2, &[&e1, &e2]).unwrap()), 2);
        assert_eq!(subspace_dim(&subspace_sum(f, 2, &[&e1, &e1]).unwrap()), 1);
        let a = Mat::column(f, &[1, 1]);
        let b = Mat::column(f, &[1, 4]);
        assert_eq!(subspace_dim(&subspace_sum(f, 2, &[&a, &b]).unwrap()), 2);
        let c = Mat::column(f, &[1, 0, 0]);
        assert!(matches!(subspace_sum(f, 2, &[&a, &c]), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn empty_matrices() {
        let f = f5();
        let z = Mat::zeros(f, 0, 3);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel_basis().cols(), 3);
        let z = Mat::zeros(f, 3, 0);
        assert_eq!(z.kernel_basis().cols(), 0);
        assert_eq!(z.mul(&Mat::zeros(f, 0, 2)), Mat::zeros(f, 3, 2));
        assert_eq!(Mat::zeros(f, 0, 0).inverse(), Some(Mat::zeros(f, 0, 0)));
    }

    #[test]
    fn inverse_and_solve() {
        let f = f5();
        let a = Mat::from_rows(f, &[[1, 2], [3, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(f, 2));
        assert_eq!(Mat::from_rows(f, &[[1, 2], [2, 4]]).inverse(), None);
        let q = Mat::from_rows(f, &[[0, 1, 1]]);
        let s = q.right_inverse().unwrap();
        assert_eq!(q.mul(&s), Mat::identity(f, 1));
        let c = Mat::column(f, &[1, 1, 0]).complement_basis();
        assert_eq!(c.cols(), 2);
        assert_eq!(Mat::hstack(f, 3, &[&Mat::column(f, &[1, 1, 0]), &c]).rank(), 3);
    }

    fn arb_mat() -> impl Strategy<Value = (u32, Mat)> {
        (prop::sample::select(vec![2u32, 3, 5]), 0usize..6, 0usize..6).prop_flat_map(|(p, r, c)| {
            prop::collection::vec(0..p, r * c)
                .prop_map(move |d| (p, Mat::from_vec(PrimeField::new(p).unwrap(), r, c, d)))
        })
    }

    proptest! {
        #[test]
        fn rank_is_transpose_invariant((_p, a) in arb_mat()) {
            prop_assert_eq!(a.rank(), a.transpose().rank());
        }

        #[test]
        fn rank_nullity((_p, a) in arb_mat()) {
            let k = a.kernel_basis();
            prop_assert_eq!(a.cols(), a.rank() + k.cols());
            prop_assert!(a.mul(&k).is_zero());
            prop_assert_eq!(k.rank(), k.cols());
        }

        #[test]
        fn rref_preserves_row_space((_p, a) in arb_mat()) {
            let r = a.rref();
            let stacked = Mat::vstack(a.field(), a.cols(), &[&a, &r.reduced]);
            prop_assert_eq!(stacked.rank(), r.rank);
            prop_assert_eq!(r.rank, r.pivots.len());
        }
    }
}
