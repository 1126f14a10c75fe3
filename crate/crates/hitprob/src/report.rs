//! Closed-form predictions and structured reports that cross-check the
//! linear algebra: slice-degree bookkeeping, the four generic degree
//! families, p-adic digit reports, and the rank-2 classification table.
//!
//! Everything here is arithmetic on degrees and digits — no matrices — so
//! these values make independent oracles for the engine's computed ranks
//! and invariant dimensions.

use crate::arith::PrimeModulus;
use crate::monomials::enumerate_degree;
use serde::Serialize;
use thiserror::Error;

/// Errors from degree bookkeeping.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReportError {
    /// A top-exterior slice in `h` variables lives in total degrees of the
    /// parity of `h` only.
    #[error("wrong parity; n must satisfy n = h (mod 2).")]
    WrongParity { h: usize, n: u32 },
    /// Parameters violate a family's side conditions.
    #[error("family parameters out of range: {0}")]
    FamilyConstraint(String),
}

/// Exponent degree `m = (n - h) / 2` of the polynomial part of the
/// top-exterior slice in total degree `n`, or a parity error.
///
/// Each variable contributes an exterior class of degree 1 and a
/// polynomial generator of degree 2, so the slice occupies
/// `n = 2m + h`.
pub fn slice_degree(h: usize, n: u32) -> Result<u32, ReportError> {
    if (n as i64 - h as i64) % 2 != 0 || (n as i64) < h as i64 {
        return Err(ReportError::WrongParity { h, n });
    }
    Ok((n - h as u32) / 2)
}

/// One of the four parameterized degree families in which the invariant
/// space of the rank-3 slice is one-dimensional.  Parameters are named as
/// in the defining formulas; all use the coefficient `q = 2(p-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenericFamily {
    /// `q (p^k + p^j + p^i) - 3` with `0 <= k <= j - 2 <= i - 4`.
    F1 { k: u32, j: u32, i: u32 },
    /// `q (p^(i+1) + p^j) - 3` with `j != i + 2`.
    F2 { i: u32, j: u32 },
    /// `q (p^(i+1) + 2 p^i + p^j) - 3` with `j` outside `{i+2, i, i-1}`.
    F3 { i: u32, j: u32 },
    /// `q (2 p^(i+1) + p^i + p^j) - 3` with `j` outside
    /// `{i+2, i+1, i, i-1}`.
    F4 { i: u32, j: u32 },
}

/// Total degree of a generic-family member, enforcing the side conditions.
pub fn generic_degree(fam: GenericFamily, f: PrimeModulus) -> Result<u64, ReportError> {
    let p = f.get() as u64;
    let q = 2 * (p - 1);
    let err = |s: String| Err(ReportError::FamilyConstraint(s));
    match fam {
        GenericFamily::F1 { k, j, i } => {
            if !(k + 2 <= j && j + 2 <= i) {
                return err(format!("need k <= j - 2 <= i - 4, got k={k} j={j} i={i}"));
            }
            Ok(q * (p.pow(k) + p.pow(j) + p.pow(i)) - 3)
        }
        GenericFamily::F2 { i, j } => {
            if j == i + 2 {
                return err(format!("need j != i + 2, got i={i} j={j}"));
            }
            Ok(q * (p.pow(i + 1) + p.pow(j)) - 3)
        }
        GenericFamily::F3 { i, j } => {
            if j == i + 2 || j == i || (i > 0 && j == i - 1) {
                return err(format!("need j outside {{i+2, i, i-1}}, got i={i} j={j}"));
            }
            Ok(q * (p.pow(i + 1) + 2 * p.pow(i) + p.pow(j)) - 3)
        }
        GenericFamily::F4 { i, j } => {
            if j == i + 2 || j == i + 1 || j == i || (i > 0 && j == i - 1) {
                return err(format!(
                    "need j outside {{i+2, i+1, i, i-1}}, got i={i} j={j}"
                ));
            }
            Ok(q * (2 * p.pow(i + 1) + p.pow(i) + p.pow(j)) - 3)
        }
    }
}

/// One active digit level of a degree's p-adic report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DigitLevel {
    /// Level `s` (a nonzero base-p digit of `m` sits here).
    pub s: u32,
    /// The digit `d_s`.
    pub d: u32,
    /// Signatures `(0, ..., d, ..., 0)` concentrated in one variable —
    /// the compositions a level-`s` edge annihilates — sorted ascending.
    pub pivots: Vec<Vec<u32>>,
    /// All other compositions of `d` into `h` parts, in enumeration order.
    pub kept: Vec<Vec<u32>>,
}

/// Digit report of degree `m`: one entry per nonzero base-p digit, levels
/// ascending.
pub fn digit_report(h: usize, f: PrimeModulus, m: u32) -> Vec<DigitLevel> {
    let digits = f.p_digits(m as u64);
    let mut out = Vec::new();
    for (s, &d) in digits.iter().enumerate() {
        if d == 0 {
            continue;
        }
        let all = enumerate_degree(h, d);
        let mut pivots: Vec<Vec<u32>> = all
            .iter()
            .filter(|sig| sig.iter().filter(|&&x| x != 0).count() <= 1)
            .cloned()
            .collect();
        pivots.sort();
        let kept: Vec<Vec<u32>> = all
            .iter()
            .filter(|sig| sig.iter().filter(|&&x| x != 0).count() > 1)
            .cloned()
            .collect();
        out.push(DigitLevel {
            s: s as u32,
            d,
            pivots,
            kept,
        });
    }
    out
}

/// Which published rank-2 family a degree falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossleyFamily {
    /// `n = 2t`, `1 <= t <= p-2`.
    LowDegree { t: u32 },
    /// `n = 2((i+1)p + j + 1) p^s - 2`, `0 <= i, j <= p-1`, `s >= 0`.
    RowA { i: u32, j: u32, s: u32 },
    /// `n = 2((i+1)p^r + (j+1)p^s) - 2`, `1 <= i <= p-1`,
    /// `0 <= j <= p-2`, `r >= s+2`.
    RowB { i: u32, j: u32, r: u32, s: u32 },
    /// `n = 2(p^2 + ip + j + 1) p^s - 2`, `1 <= i <= j <= p-2`.
    RowC { i: u32, j: u32, s: u32 },
}

/// Published invariant dimension, where the source table states one.
/// Two families' conditions are cut off mid-sentence in the source; those
/// are carried as [`InvariantDim::Unspecified`] and consumers must skip
/// the comparison rather than guess.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InvariantDim {
    Known(usize),
    Unspecified,
}

/// Published expectation for the rank-2 top-exterior slice in total
/// degree `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossleyExpectation {
    pub family: CrossleyFamily,
    /// Number of listed basis monomials (= the slice dimension).
    pub basis_size: usize,
    pub invariant_dim: InvariantDim,
}

/// Look `n` up in the published rank-2 tables: the low-degree family
/// first, then the three p-adic families in row order, scanning each
/// family's parameters with `s` ascending (then `r`, `i`, `j`); the first
/// parameterization that produces `n` wins.  `None` when no family
/// matches.
pub fn crossley_expected(n: u64, f: PrimeModulus) -> Option<CrossleyExpectation> {
    let p = f.get() as u64;
    if n == 0 || n % 2 != 0 {
        return None;
    }

    // Low degrees: n = 2t, 1 <= t <= p-2; dim t, invariants 0.
    let t = n / 2;
    if (1..=p - 2).contains(&t) {
        return Some(CrossleyExpectation {
            family: CrossleyFamily::LowDegree { t: t as u32 },
            basis_size: t as usize,
            invariant_dim: InvariantDim::Known(0),
        });
    }

    // Row A: n = 2((i+1)p + j + 1) p^s - 2; dim = p - min(i+1, j) + i;
    // the invariant condition is truncated in the source -> unspecified.
    let mut s = 0u32;
    while 2 * p.pow(s) <= n + 2 {
        for i in 0..p {
            for j in 0..p {
                if 2 * ((i + 1) * p + j + 1) * p.pow(s) - 2 == n {
                    let dim = (p - (i + 1).min(j) + i) as usize;
                    return Some(CrossleyExpectation {
                        family: CrossleyFamily::RowA {
                            i: i as u32,
                            j: j as u32,
                            s,
                        },
                        basis_size: dim,
                        invariant_dim: InvariantDim::Unspecified,
                    });
                }
            }
        }
        s += 1;
    }

    // Row B: n = 2((i+1)p^r + (j+1)p^s) - 2 with r >= s + 2; dim = p + 1;
    // invariants 1 exactly when i = j = p - 2.
    let mut s = 0u32;
    while 2 * p.pow(s) <= n + 2 {
        let mut r = s + 2;
        while 2 * p.pow(r) <= n + 2 {
            for i in 1..p {
                for j in 0..p - 1 {
                    if 2 * ((i + 1) * p.pow(r) + (j + 1) * p.pow(s)) - 2 == n {
                        let inv = usize::from(i == p - 2 && j == p - 2);
                        return Some(CrossleyExpectation {
                            family: CrossleyFamily::RowB {
                                i: i as u32,
                                j: j as u32,
                                r,
                                s,
                            },
                            basis_size: (p + 1) as usize,
                            invariant_dim: InvariantDim::Known(inv),
                        });
                    }
                }
            }
            r += 1;
        }
        s += 1;
    }

    // Row C: n = 2(p^2 + ip + j + 1) p^s - 2 with 1 <= i <= j <= p-2;
    // dim = j - i + 1; the stated invariant condition contradicts the
    // family's own parameter range in the source -> unspecified.
    let mut s = 0u32;
    while 2 * p.pow(s) <= n + 2 {
        for i in 1..=p - 2 {
            for j in i..=p - 2 {
                if 2 * (p * p + i * p + j + 1) * p.pow(s) - 2 == n {
                    return Some(CrossleyExpectation {
                        family: CrossleyFamily::RowC {
                            i: i as u32,
                            j: j as u32,
                            s,
                        },
                        basis_size: (j - i + 1) as usize,
                        invariant_dim: InvariantDim::Unspecified,
                    });
                }
            }
        }
        s += 1;
    }

    None
}
