//! The action of `GL(h, F_p)` on the cohit quotient and its invariants.
//!
//! The group acts on the polynomial algebra by linear substitution of
//! variables; hit elements form a submodule, so the action descends to
//! each cohit quotient.  Because fixed vectors of a group are exactly the
//! common fixed vectors of any generating set, the engine works with a
//! small fixed generator list: one scaling per variable by the smallest
//! primitive root, the adjacent swaps, and every ordered transvection
//! `t_j -> t_j - t_i`.
//!
//! Quotient matrices never materialize the ambient action: a generator is
//! applied to the handful of kept monomials and the image is read back
//! through the `[Q | Mb]` inverse ([`crate::cohit::QuotientBlocks`]).
//! Invariants are the right kernel of the stacked `(A_g - I)` blocks; the
//! determinant-inverse twist multiplies each `A_g` by `det(g)^-1` first,
//! which computes the invariants of the det-twisted slice (the top
//! exterior layer in the cohomology picture).

use crate::arith::PrimeModulus;
use crate::cohit::QuotientBlocks;
use crate::exec;
use crate::linalg::MatrixModP;
use crate::monomials::weight_of;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

/// One generator of `GL(h, F_p)`, named by its substitution action on
/// variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// `t_var -> lambda^-1 t_var` (the contragredient of scaling by
    /// `lambda`).
    Scale { var: usize, lambda: u32 },
    /// Exchange two variables.
    Swap { a: usize, b: usize },
    /// `t_to -> t_to - t_from`, all other variables fixed.
    Transvection { from: usize, to: usize },
}

/// The fixed generating set: scalings of `t_1, ..., t_h` by the smallest
/// primitive root, adjacent swaps `(1 2), (2 3), ...`, then all ordered
/// transvections row-major (`from` outer, `to` inner, `from != to`).
pub fn gl_generators(h: usize, f: PrimeModulus) -> Vec<Generator> {
    let lambda = f.primitive_root();
    let mut out = Vec::new();
    for var in 0..h {
        out.push(Generator::Scale { var, lambda });
    }
    for a in 0..h.saturating_sub(1) {
        out.push(Generator::Swap { a, b: a + 1 });
    }
    for from in 0..h {
        for to in 0..h {
            if from != to {
                out.push(Generator::Transvection { from, to });
            }
        }
    }
    out
}

/// Determinant of the group element a generator stands for.
pub fn det_of_generator(g: Generator, f: PrimeModulus) -> u32 {
    match g {
        Generator::Scale { lambda, .. } => lambda,
        Generator::Swap { .. } => f.get() - 1, // -1
        Generator::Transvection { .. } => 1,
    }
}

/// Image of a monomial under a generator's substitution, as sparse
/// `(exponent tuple, coefficient)` terms in ascending `u` order.
///
/// * Scale: one term, coefficient `lambda^-exp_var`.
/// * Swap: one term with the two exponents exchanged.
/// * Transvection `t_to -> t_to - t_from` with exponents `a = exp_from`,
///   `b = exp_to`: terms `binom(b, u) (-1)^(b-u) t_from^(a+b-u) t_to^u`
///   for `0 <= u <= b`, zero binomials skipped.
pub fn act_on_monomial(g: Generator, exp: &[u32], f: PrimeModulus) -> Vec<(Vec<u32>, u32)> {
    match g {
        Generator::Scale { var, lambda } => {
            let c = f.pow(f.inv(lambda), exp[var] as u64);
            vec![(exp.to_vec(), c)]
        }
        Generator::Swap { a, b } => {
            let mut e = exp.to_vec();
            e.swap(a, b);
            vec![(e, 1)]
        }
        Generator::Transvection { from, to } => {
            let a = exp[from];
            let b = exp[to];
            let mut out = Vec::new();
            for u in 0..=b {
                let binom = f.lucas_binom(b as u64, u as u64);
                if binom == 0 {
                    continue;
                }
                let coeff = if (b - u) % 2 == 0 { binom } else { f.neg(binom) };
                let mut e = exp.to_vec();
                e[from] = a + b - u;
                e[to] = u;
                out.push((e, coeff));
            }
            out
        }
    }
}

/// Full matrix of a generator on an indexed monomial basis (column `j` is
/// the image of basis monomial `j`).  Only used on small ambient spaces;
/// quotient work goes through [`quotient_action`].
pub fn ambient_matrix(
    basis: &[Vec<u32>],
    index: &HashMap<Vec<u32>, usize>,
    g: Generator,
    f: PrimeModulus,
) -> MatrixModP {
    let n = basis.len();
    let cols: Vec<Vec<u32>> = exec::map_indexed(n, |j| {
        let mut col = vec![0u32; n];
        for (e, c) in act_on_monomial(g, &basis[j], f) {
            let i = index[&e];
            col[i] = f.add(col[i], c);
        }
        col
    });
    MatrixModP::from_columns(f, n, &cols)
}

/// Matrix of a generator on the cohit quotient in the kept-monomial basis:
/// act on each kept monomial, read the image back through `A^-1`.
pub fn quotient_action(blocks: &QuotientBlocks, g: Generator) -> MatrixModP {
    let f = blocks.f;
    let n = blocks.ambient.len();
    let cols: Vec<Vec<u32>> = blocks
        .reps
        .iter()
        .map(|&rep| {
            let mut v = vec![0u32; n];
            for (e, c) in act_on_monomial(g, &blocks.ambient[rep], f) {
                let i = blocks.index[&e];
                v[i] = f.add(v[i], c);
            }
            blocks.quotient_coordinates(&v)
        })
        .collect();
    MatrixModP::from_columns(f, blocks.dim, &cols)
}

/// Character twist applied before extracting invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Twist {
    /// Plain fixed vectors.
    None,
    /// Fixed vectors of `det(g)^-1 A_g`: invariants of the module twisted
    /// by the inverse determinant character (the top-exterior slice).
    DetInverse,
}

/// The invariant subspace of the quotient under the full group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariants {
    pub twist: Twist,
    /// Basis vectors in kept-monomial coordinates, one per dimension, each
    /// normalized with leading free coordinate 1 by the kernel extraction.
    pub vectors: Vec<Vec<u32>>,
}

impl Invariants {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

/// Compute the invariants of the quotient: the common kernel of
/// `(twist(g) A_g - I)` over the generator list, via one stacked kernel
/// computation.
pub fn invariants(blocks: &QuotientBlocks, twist: Twist) -> Invariants {
    let f = blocks.f;
    let d = blocks.dim;
    if d == 0 {
        return Invariants {
            twist,
            vectors: Vec::new(),
        };
    }
    let gens = gl_generators(blocks.h, f);
    let stacked: Vec<MatrixModP> = gens
        .iter()
        .map(|&g| {
            let mut a = quotient_action(blocks, g);
            if twist == Twist::DetInverse {
                let scale = f.inv(det_of_generator(g, f));
                for i in 0..d {
                    for j in 0..d {
                        a.set(i, j, f.mul(a.get(i, j), scale));
                    }
                }
            }
            for i in 0..d {
                let v = a.get(i, i);
                a.set(i, i, f.sub(v, 1));
            }
            a
        })
        .collect();
    let refs: Vec<&MatrixModP> = stacked.iter().collect();
    let big = MatrixModP::vstack(&refs);
    Invariants {
        twist,
        vectors: big.right_kernel_basis(),
    }
}

/// Group a monomial list by weight (exponents mod `p - 1`): weight tuple
/// -> indices into the list, in a deterministic key order.
pub fn weight_blocks(basis: &[Vec<u32>], f: PrimeModulus) -> BTreeMap<Vec<u32>, Vec<usize>> {
    let mut out: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
    for (i, e) in basis.iter().enumerate() {
        out.entry(weight_of(e, f)).or_default().push(i);
    }
    out
}

/// The weight every exponent of a det-twisted invariant must carry:
/// `p - 2` in each variable.
pub fn trivial_block_signature(h: usize, f: PrimeModulus) -> Vec<u32> {
    vec![f.get() - 2; h]
}
