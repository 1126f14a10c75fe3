//! The cohit quotient: polynomials in degree `m` modulo hit elements.
//!
//! With `M` the hit matrix in degree `m`, the quotient has dimension
//! `ambient - rank(M)`.  A monomial basis is extracted greedily: walk the
//! degree-`m` monomials in a preference order and keep each one whose unit
//! vector enlarges the span of `M` plus the monomials kept so far.
//!
//! Replaying that greedy walk one rank computation at a time is quadratic
//! in eliminations.  Instead the engine eliminates the single block matrix
//! `[M | e_(c_1) | e_(c_2) | ...]` (unit columns in candidate order) once:
//! a column of any matrix is a pivot column exactly when it is independent
//! of the columns to its left, so the pivots landing in the unit block are
//! precisely the monomials the greedy walk keeps, and the pivots landing
//! in `M` are a greedy independent subset of the hit columns — both from
//! one elimination.  (The acceptance suite replays small instances with
//! the naive loop to pin the equivalence.)
//!
//! The same pivot data feeds the quotient structure: `A = [Q | Mb]` with
//! `Q` the unit columns at the kept monomials and `Mb` the independent hit
//! columns is square and invertible, and the first `dim` rows of `A^-1`
//! read off quotient coordinates of any ambient vector.

use crate::arith::PrimeModulus;
use crate::linalg::{LinalgError, MatrixModP};
use crate::monomials::{self, Order, SparsePoly};
use crate::steenrod::{hit_matrix, HitMatrix, Mode};
use std::collections::HashMap;
use thiserror::Error;

/// Errors from quotient construction and hit tests.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohitError {
    /// The `[Q | Mb]` block decomposition must come out square; anything
    /// else means the kept monomials and independent hit columns do not
    /// complement each other.
    #[error("Block [Q|Mb] is not square ({rows} x {cols})")]
    BlocksNotSquare { rows: usize, cols: usize },
    /// Square but singular `[Q | Mb]` — the blocks fail to span.
    #[error("Block [Q|Mb] is singular")]
    BlocksSingular,
    /// A polynomial handed to a degree-`m` hit test must be homogeneous of
    /// exponent degree `m`.
    #[error("polynomial is not homogeneous of exponent degree {expected}")]
    DegreeMismatch { expected: u32 },
    /// Invalid endomorphism data; the message carries the violated rule.
    #[error("invalid endomorphism: {0}")]
    BadEndomorphism(String),
}

/// Dimensions attached to one cohit computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CohitDims {
    /// Number of degree-`m` monomials.
    pub ambient: usize,
    /// Rank of the hit matrix.
    pub rank: usize,
    /// Quotient dimension `ambient - rank`.
    pub dim: usize,
}

/// Quotient dimension alone (no basis extraction).
pub fn cohit_dimension(h: usize, f: PrimeModulus, m: u32, mode: Mode) -> CohitDims {
    let hm = hit_matrix(h, f, m, mode);
    let rank = hm.matrix.rank();
    CohitDims {
        ambient: hm.ambient.len(),
        rank,
        dim: hm.ambient.len() - rank,
    }
}

/// A greedy monomial basis of the cohit quotient.
#[derive(Debug, Clone)]
pub struct CohitBasis {
    pub dims: CohitDims,
    pub order: Order,
    /// Ambient indices of the kept monomials, in the order the greedy walk
    /// accepted them (= preference order).
    pub reps: Vec<usize>,
    /// Greedy independent column set of the hit matrix (column indices),
    /// from the same elimination.
    pub hit_pivots: Vec<usize>,
    /// The underlying hit matrix, kept for reuse.
    pub hit: HitMatrix,
}

impl CohitBasis {
    /// Exponent tuples of the kept monomials, in acceptance order.
    pub fn rep_exponents(&self) -> Vec<Vec<u32>> {
        self.reps.iter().map(|&i| self.hit.ambient[i].clone()).collect()
    }
}

/// Candidate order for the greedy walk: the `prefer` tuples first (in the
/// given order, ignoring ones outside degree `m`), then every remaining
/// degree-`m` monomial sorted by its [`monomials::score`] under `order`.
/// The sort is stable, so score ties keep enumeration order.
fn candidate_indices(
    ambient: &[Vec<u32>],
    index: &HashMap<Vec<u32>, usize>,
    m: u32,
    order: Order,
    prefer: &[Vec<u32>],
) -> Vec<usize> {
    let mut taken = vec![false; ambient.len()];
    let mut out = Vec::with_capacity(ambient.len());
    for e in prefer {
        if let Some(&i) = index.get(e) {
            if !taken[i] {
                taken[i] = true;
                out.push(i);
            }
        }
    }
    let mut rest: Vec<usize> = (0..ambient.len()).filter(|&i| !taken[i]).collect();
    rest.sort_by_key(|&i| monomials::score(&ambient[i], m, order));
    out.extend(rest);
    out
}

/// Extract the greedy cohit basis in degree `m`.
pub fn cohit_basis(
    h: usize,
    f: PrimeModulus,
    m: u32,
    mode: Mode,
    order: Order,
    prefer: &[Vec<u32>],
) -> CohitBasis {
    let hm = hit_matrix(h, f, m, mode);
    let candidates = candidate_indices(&hm.ambient, &hm.index, m, order, prefer);
    let c = hm.matrix.cols();

    let mut combined = hm.matrix.with_unit_columns(&candidates);
    let pivots = combined.echelonize(false);

    let mut hit_pivots = Vec::new();
    let mut reps = Vec::new();
    for &col in &pivots {
        if col < c {
            hit_pivots.push(col);
        } else {
            reps.push(candidates[col - c]);
        }
    }
    let rank = hit_pivots.len();
    let ambient = hm.ambient.len();
    debug_assert_eq!(rank + reps.len(), ambient, "unit block completes the span");

    CohitBasis {
        dims: CohitDims {
            ambient,
            rank,
            dim: ambient - rank,
        },
        order,
        reps,
        hit_pivots,
        hit: hm,
    }
}

/// The block decomposition `A = [Q | Mb]` and its inverse: quotient
/// coordinates of ambient vectors by one matrix-vector product.
#[derive(Debug, Clone)]
pub struct QuotientBlocks {
    pub f: PrimeModulus,
    pub h: usize,
    pub m: u32,
    /// Quotient dimension (number of kept monomials).
    pub dim: usize,
    /// Ambient indices of the kept monomials, acceptance order.
    pub reps: Vec<usize>,
    /// Degree-`m` monomial enumeration (row basis).
    pub ambient: Vec<Vec<u32>>,
    /// Tuple -> ambient index.
    pub index: HashMap<Vec<u32>, usize>,
    /// Inverse of `[Q | Mb]`.
    pub a_inv: MatrixModP,
}

/// Assemble `[Q | Mb]` from a computed basis and invert it.  `Q` holds the
/// unit columns of the kept monomials (acceptance order) and `Mb` the
/// greedy independent hit columns; a non-square or singular block is a
/// hard error because it falsifies rank bookkeeping.
pub fn build_quotient_blocks(basis: &CohitBasis) -> Result<QuotientBlocks, CohitError> {
    let f = basis.hit.f;
    let n = basis.dims.ambient;
    let q = MatrixModP::zeros(f, n, 0).with_unit_columns(&basis.reps);
    let mb_cols: Vec<Vec<u32>> = basis
        .hit_pivots
        .iter()
        .map(|&j| basis.hit.matrix.column(j))
        .collect();
    let mb = MatrixModP::from_columns(f, n, &mb_cols);
    let a = q.hstack(&mb);
    if a.rows() != a.cols() {
        return Err(CohitError::BlocksNotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let a_inv = a.inverse().map_err(|e| match e {
        LinalgError::Singular => CohitError::BlocksSingular,
        LinalgError::NonSquare { rows, cols } => CohitError::BlocksNotSquare { rows, cols },
    })?;
    Ok(QuotientBlocks {
        f,
        h: basis.hit.h,
        m: basis.hit.m,
        dim: basis.dims.dim,
        reps: basis.reps.clone(),
        ambient: basis.hit.ambient.clone(),
        index: basis.hit.index.clone(),
        a_inv,
    })
}

impl QuotientBlocks {
    /// Coordinates of an ambient coefficient vector in the kept-monomial
    /// basis of the quotient: the first `dim` entries of `A^-1 v`.
    pub fn quotient_coordinates(&self, v: &[u32]) -> Vec<u32> {
        let full = self.a_inv.matvec(v);
        full[..self.dim].to_vec()
    }
}

/// Hit test against a prebuilt matrix.  The zero polynomial is hit; a
/// non-homogeneous or wrong-degree polynomial is an error.
pub fn is_hit_in(hm: &HitMatrix, g: &SparsePoly) -> Result<bool, CohitError> {
    if g.is_zero() {
        return Ok(true);
    }
    match g.homogeneous_degree() {
        Some(d) if d == hm.m => {}
        _ => return Err(CohitError::DegreeMismatch { expected: hm.m }),
    }
    let v = g.to_vector(&hm.index, hm.ambient.len());
    Ok(hm.is_hit_vector(&v))
}

/// Hit test that builds the degree's matrix on the fly.
pub fn is_hit(
    h: usize,
    f: PrimeModulus,
    m: u32,
    mode: Mode,
    g: &SparsePoly,
) -> Result<bool, CohitError> {
    if g.is_zero() {
        return Ok(true);
    }
    match g.homogeneous_degree() {
        Some(d) if d == m => {}
        _ => return Err(CohitError::DegreeMismatch { expected: m }),
    }
    let hm = hit_matrix(h, f, m, mode);
    is_hit_in(&hm, g)
}

/// Hit/non-hit classification of `t^d` in the one-variable algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rank1Class {
    Hit,
    NonHit,
}

/// Closed-form classification for one variable: `t^d` is *not* hit exactly
/// when `d = 0` or `d + 1` has a single nonzero base-p digit, i.e.
/// `d = (i+1) p^k - 1` with `1 <= i <= p-1`.
pub fn classify_rank1(f: PrimeModulus, d: u64) -> Rank1Class {
    if d == 0 {
        return Rank1Class::NonHit;
    }
    let nonzero = f.p_digits(d + 1).into_iter().filter(|&x| x != 0).count();
    if nonzero == 1 {
        Rank1Class::NonHit
    } else {
        Rank1Class::Hit
    }
}

/// Data of a hit-preserving endomorphism `g -> (prod_j t_j^(E_j)) * g^p`
/// with `E_j = q_j * p^(t+1+r_j)` (so `r_j = 0` gives the plain
/// `q_j * p^(t+1)`).
///
/// Validity:
/// * `t >= 1`, and `t >= 2` as soon as any `r_j > 0`;
/// * every `q_j >= 1`;
/// * every `r_j <= p - 1`;
/// * for each `j` with `r_j > 0`: `q_j` not congruent to `p - 1` mod `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndomorphismSpec {
    pub t: u32,
    pub q: Vec<u32>,
    pub r: Vec<u32>,
}

impl EndomorphismSpec {
    pub fn validate(&self, f: PrimeModulus) -> Result<(), CohitError> {
        let p = f.get();
        let bad = |msg: String| Err(CohitError::BadEndomorphism(msg));
        if self.q.len() != self.r.len() {
            return bad(format!(
                "q has {} entries but r has {}",
                self.q.len(),
                self.r.len()
            ));
        }
        if self.t < 1 {
            return bad("t must be at least 1".into());
        }
        let twisted = self.r.iter().any(|&r| r > 0);
        if twisted && self.t < 2 {
            return bad("t must be at least 2 when any r_j is positive".into());
        }
        for (j, (&q, &r)) in self.q.iter().zip(&self.r).enumerate() {
            if q < 1 {
                return bad(format!("q_{} must be positive", j + 1));
            }
            if r > p - 1 {
                return bad(format!("r_{} must be at most p - 1 = {}", j + 1, p - 1));
            }
            if r > 0 && q % p == p - 1 {
                return bad(format!(
                    "q_{} = {} is congruent to p - 1 mod p",
                    j + 1,
                    q
                ));
            }
        }
        Ok(())
    }

    /// The multiplier monomial `prod_j t_j^(q_j p^(t+1+r_j))`.
    pub fn multiplier(&self, f: PrimeModulus) -> Vec<u32> {
        let p = f.get() as u64;
        self.q
            .iter()
            .zip(&self.r)
            .map(|(&q, &r)| {
                let e = q as u64 * p.pow(self.t + 1 + r);
                u32::try_from(e).expect("multiplier exponent exceeds u32")
            })
            .collect()
    }
}

/// Apply the endomorphism: multiplier times the Frobenius power `g^p`.
/// Hit inputs map to hit outputs (in the matching target degree); the
/// acceptance suite exercises that with randomized hit polynomials.
pub fn hit_endomorphism(
    spec: &EndomorphismSpec,
    g: &SparsePoly,
    f: PrimeModulus,
) -> Result<SparsePoly, CohitError> {
    spec.validate(f)?;
    if let Some(e) = g.terms.keys().next() {
        if e.len() != spec.q.len() {
            return Err(CohitError::BadEndomorphism(format!(
                "polynomial has {} variables but the endomorphism has {}",
                e.len(),
                spec.q.len()
            )));
        }
    }
    let mult = SparsePoly::monomial(spec.multiplier(f), 1, f);
    Ok(mult.mul(&g.frobenius(f), f))
}
