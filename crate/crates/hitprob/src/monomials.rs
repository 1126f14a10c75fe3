//! Monomials of `F_p[t_1, ..., t_h]`: canonical enumeration by total
//! exponent degree, ordering scores for basis extraction, p-adic
//! comparisons, weights, text rendering, and a sparse polynomial type.
//!
//! Degrees here are always *exponent* degrees (the sum of the exponent
//! tuple).  The topological degree of a monomial is twice that, since every
//! generator sits in cohomological degree 2; the conversion lives at the
//! reporting layer, not here.

use crate::arith::PrimeModulus;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// All exponent tuples of length `h` summing to `m`, ordered with the first
/// coordinate ascending, then recursively on the remaining coordinates.
/// This is the canonical ambient basis order used by every matrix in the
/// engine.
pub fn enumerate_degree(h: usize, m: u32) -> Vec<Vec<u32>> {
    fn rec(h: usize, m: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if h == 1 {
            let mut v = prefix.clone();
            v.push(m);
            out.push(v);
            return;
        }
        for a in 0..=m {
            prefix.push(a);
            rec(h - 1, m - a, prefix, out);
            prefix.pop();
        }
    }
    assert!(h >= 1, "need at least one variable");
    let mut out = Vec::new();
    rec(h, m, &mut Vec::new(), &mut out);
    out
}

/// Position of each tuple in its enumeration, for O(1) column lookups.
pub fn index_map(basis: &[Vec<u32>]) -> HashMap<Vec<u32>, usize> {
    basis
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect()
}

/// Total exponent degree.
#[inline]
pub fn total_degree(exp: &[u32]) -> u32 {
    exp.iter().sum()
}

/// The weight of a monomial: its exponents reduced mod `p - 1`.  The
/// Steenrod powers preserve this vector, which blocks every hit matrix.
pub fn weight_of(exp: &[u32], f: PrimeModulus) -> Vec<u32> {
    let q = f.get() - 1;
    exp.iter().map(|&e| e % q).collect()
}

/// Candidate orderings for greedy basis extraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Order {
    /// Exponent tuple ascending, first variable most significant.
    Lex,
    /// Exponent tuple descending (negated lex).
    Antilex,
    /// Prefer exponents clustered around the mean `m / h`; see [`score`]
    /// for the exact tie-breaking contract.
    Balanced,
}

impl fmt::Display for Order {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Order::Lex => "lex",
            Order::Antilex => "antilex",
            Order::Balanced => "balanced",
        };
        out.write_str(s)
    }
}

impl std::str::FromStr for Order {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" => Ok(Order::Lex),
            "antilex" => Ok(Order::Antilex),
            "balanced" => Ok(Order::Balanced),
            other => Err(format!(
                "unknown order '{other}' (expected lex, antilex, or balanced)"
            )),
        }
    }
}

/// Sort key of a monomial under an [`Order`]: a floating-point leading
/// component followed by an integer tie vector, compared lexicographically.
#[derive(Debug, Clone, PartialEq)]
pub struct Score {
    pub primary: f64,
    pub tie: Vec<i64>,
}

impl Eq for Score {}

impl PartialOrd for Score {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Score {
    fn cmp(&self, other: &Self) -> Ordering {
        self.primary
            .partial_cmp(&other.primary)
            .expect("scores are finite, never NaN")
            .then_with(|| self.tie.cmp(&other.tie))
    }
}

/// Score of `exp` in degree `m` under `order`.  Smaller sorts first.
///
/// For `Balanced` with two variables the key is the integer tuple
/// `(|2a - m|, a, b)`.  With three or more variables the leading component
/// is the sample variance `sum_i (e_i - m/h)^2` *computed in f64, in index
/// order, accumulated left-associatively* (`acc = acc + t*t`, never fused).
/// That evaluation order is part of the contract: when `h` does not divide
/// `m` the mean is not representable and different summation orders round
/// differently, so permuted tuples that are tied in exact arithmetic
/// acquire a deterministic strict order.  The published basis listings were
/// produced under exactly this order, and the regression corpus pins it.
pub fn score(exp: &[u32], m: u32, order: Order) -> Score {
    match order {
        Order::Lex => Score {
            primary: 0.0,
            tie: exp.iter().map(|&e| e as i64).collect(),
        },
        Order::Antilex => Score {
            primary: 0.0,
            tie: exp.iter().map(|&e| -(e as i64)).collect(),
        },
        Order::Balanced => {
            if exp.len() == 2 {
                let a = exp[0] as i64;
                let b = exp[1] as i64;
                Score {
                    primary: 0.0,
                    tie: vec![(2 * a - m as i64).abs(), a, b],
                }
            } else {
                let mu = m as f64 / exp.len() as f64;
                let mut v = 0.0f64;
                for &e in exp {
                    let t = e as f64 - mu;
                    // Keep as separate mul and add: an FMA would round
                    // differently and break the pinned tie order.
                    v = v + t * t;
                }
                Score {
                    primary: v,
                    tie: exp.iter().map(|&e| e as i64).collect(),
                }
            }
        }
    }
}

/// Compare two exponent tuples by their base-p digit matrices: most
/// significant digit level first, and within a level variable 1 first.
/// Used by diagnostics that ask whether hit-matrix blocks are triangular
/// against a p-adic order.
pub fn compare_cartan_lex(a: &[u32], b: &[u32], f: PrimeModulus) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    let levels = |exp: &[u32]| -> u32 {
        exp.iter()
            .map(|&e| f.p_digits(e as u64).len() as u32)
            .max()
            .unwrap_or(1)
    };
    let top = levels(a).max(levels(b));
    for s in (0..top).rev() {
        for j in 0..a.len() {
            let da = f.digit(a[j] as u64, s);
            let db = f.digit(b[j] as u64, s);
            match da.cmp(&db) {
                Ordering::Equal => {}
                other => return other,
            }
        }
    }
    Ordering::Equal
}

/// Print symbol for variable index `j` (0-based): `x, y, z, t4, t5, ...`
pub fn var_symbol(j: usize) -> String {
    match j {
        0 => "x".into(),
        1 => "y".into(),
        2 => "z".into(),
        _ => format!("t{}", j + 1),
    }
}

/// Human form of a monomial: factors joined by `" * "`, unit exponents
/// elided, the empty product rendered `"1"`.  `[8, 10]` becomes
/// `x^8 * y^10`; `[1, 17]` becomes `x * y^17`.
pub fn monomial_string(exp: &[u32]) -> String {
    let parts: Vec<String> = exp
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e > 0)
        .map(|(j, &e)| {
            if e == 1 {
                var_symbol(j)
            } else {
                format!("{}^{}", var_symbol(j), e)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" * ")
    }
}

/// Sparse polynomial over `F_p`: exponent tuple -> nonzero coefficient.
/// The `BTreeMap` keeps term iteration deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparsePoly {
    pub terms: BTreeMap<Vec<u32>, u32>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Single-term polynomial (dropped entirely when the coefficient
    /// reduces to zero).
    pub fn monomial(exp: Vec<u32>, coeff: u32, f: PrimeModulus) -> Self {
        let mut s = SparsePoly::zero();
        s.add_term(exp, coeff, f);
        s
    }

    /// Accumulate `coeff * t^exp`, dropping the term if it cancels.
    pub fn add_term(&mut self, exp: Vec<u32>, coeff: u32, f: PrimeModulus) {
        let c = coeff % f.get();
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry = f.add(*entry, c);
        if *entry == 0 {
            // Remove the key we just zeroed.
            let dead: Vec<u32> = self
                .terms
                .iter()
                .find(|&(_, &v)| v == 0)
                .map(|(k, _)| k.clone())
                .expect("just inserted");
            self.terms.remove(&dead);
        }
    }

    pub fn add(&self, other: &SparsePoly, f: PrimeModulus) -> SparsePoly {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c, f);
        }
        out
    }

    pub fn scale(&self, c: u32, f: PrimeModulus) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (e, &a) in &self.terms {
            out.add_term(e.clone(), f.mul(a, c % f.get()), f);
        }
        out
    }

    pub fn mul(&self, other: &SparsePoly, f: PrimeModulus) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(&a, &b)| a + b).collect();
                out.add_term(exp, f.mul(ca, cb), f);
            }
        }
        out
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, mut k: u32, f: PrimeModulus) -> SparsePoly {
        let h = self.terms.keys().next().map(|e| e.len()).unwrap_or(0);
        let mut acc = SparsePoly::monomial(vec![0; h], 1, f);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            base = base.mul(&base, f);
            k >>= 1;
        }
        acc
    }

    /// The Frobenius `g -> g^p`: every exponent scales by `p` and every
    /// coefficient is fixed (`c^p = c` in `F_p`); cross terms of the
    /// multinomial expansion carry binomials divisible by `p` and vanish.
    pub fn frobenius(&self, f: PrimeModulus) -> SparsePoly {
        let p = f.get();
        let mut out = SparsePoly::zero();
        for (e, &c) in &self.terms {
            let exp: Vec<u32> = e.iter().map(|&a| a * p).collect();
            out.add_term(exp, f.pow(c, p as u64), f);
        }
        out
    }

    /// `Some(d)` when every term has total exponent degree `d` (the zero
    /// polynomial is homogeneous of every degree; it reports `None`).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = total_degree(it.next()?);
        for e in it {
            if total_degree(e) != d {
                return None;
            }
        }
        Some(d)
    }

    /// Coefficient vector against an indexed ambient basis.  Terms outside
    /// the basis are an error for the caller; this panics to surface bugs.
    pub fn to_vector(&self, index: &HashMap<Vec<u32>, usize>, len: usize) -> Vec<u32> {
        let mut v = vec![0u32; len];
        for (e, &c) in &self.terms {
            let i = *index
                .get(e)
                .unwrap_or_else(|| panic!("term {e:?} outside the ambient basis"));
            v[i] = c;
        }
        v
    }
}
