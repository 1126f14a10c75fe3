//! The reduced-power action on polynomials and the hit matrices built
//! from it.
//!
//! On a single variable of cohomological degree 2 the operation `P^k` acts
//! by `P^k(t^r) = binom(r, k) t^(r + (p-1)k)`; on products it spreads by
//! the Cartan formula `P^q(XY) = sum_(u+v=q) P^u(X) P^v(Y)`.  For the hit
//! problem in exponent degree `m` only the operations `P^(p^s)` matter
//! (they generate), and only the *levels* `s` with `(p-1) p^s <= m` can
//! land in degree `m` from below.
//!
//! For `k = p^s`, Lucas' theorem collapses the single-variable coefficient
//! to the `s`-th base-p digit of the exponent: `binom(r, p^s) = r_s`.  The
//! term that bumps one variable's exponent by the full `(p-1) p^s` is the
//! *edge* term; everything else in the Cartan expansion touches only lower
//! digits.
//!
//! A hit matrix collects, column by column, images of `P^(p^s)` landing in
//! degree `m`, over all levels `s` and all source monomials of degree
//! `m - (p-1) p^s`.  Three column layouts are supported ([`Mode`]); they
//! have the same column span in the edge/full pair and the acceptance
//! corpus pins the observed rank agreements.

use crate::arith::PrimeModulus;
use crate::exec;
use crate::linalg::MatrixModP;
use crate::monomials::{enumerate_degree, index_map, SparsePoly};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// Column layout of a hit matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// One column per (level, source): the sum over variables of the edge
    /// terms.  The default working mode.
    EdgeSum,
    /// One column per (level, source, variable): the single-variable edge
    /// term, kept even when its digit coefficient vanishes.
    Graded,
    /// One column per (level, source): the complete Cartan image of
    /// `P^(p^s)` on the source monomial.
    Full,
}

impl fmt::Display for Mode {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Mode::EdgeSum => "edge-sum",
            Mode::Graded => "graded",
            Mode::Full => "full",
        };
        out.write_str(s)
    }
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge-sum" | "edge_sum" => Ok(Mode::EdgeSum),
            "graded" => Ok(Mode::Graded),
            "full" => Ok(Mode::Full),
            other => Err(format!(
                "unknown mode '{other}' (expected edge-sum, graded, or full)"
            )),
        }
    }
}

/// Largest level `s` with `(p-1) p^s <= m`, or `None` when even `s = 0`
/// overshoots (degrees below `p - 1` receive no positive operation).
pub fn max_level(f: PrimeModulus, m: u32) -> Option<u32> {
    let p = f.get() as u64;
    let m = m as u64;
    if p - 1 > m {
        return None;
    }
    let mut s = 0u32;
    while (p - 1) * p.pow(s + 1) <= m {
        s += 1;
    }
    Some(s)
}

/// All levels `0..=max_level`, empty when there are none.
pub fn levels(f: PrimeModulus, m: u32) -> Vec<u32> {
    match max_level(f, m) {
        Some(top) => (0..=top).collect(),
        None => Vec::new(),
    }
}

/// Edge term of `P^(p^s)` hitting variable `var` of a monomial: the target
/// exponent tuple and the digit coefficient, or `None` when the `s`-digit
/// of that exponent vanishes.
pub fn edge_image(
    exp: &[u32],
    var: usize,
    s: u32,
    f: PrimeModulus,
) -> Option<(Vec<u32>, u32)> {
    let d = f.digit(exp[var] as u64, s);
    if d == 0 {
        return None;
    }
    let bump = (f.get() - 1) * (f.get() as u64).pow(s) as u32;
    let mut target = exp.to_vec();
    target[var] += bump;
    Some((target, d))
}

/// Full Cartan image of `P^q` on a monomial: all compositions
/// `k_1 + ... + k_h = q` contribute `prod_j binom(e_j, k_j)` at the tuple
/// `(e_j + (p-1) k_j)_j`.  Compositions whose coefficient prefix already
/// vanishes are pruned.  Terms arrive sorted by target tuple.
pub fn power_on_monomial(exp: &[u32], q: u32, f: PrimeModulus) -> Vec<(Vec<u32>, u32)> {
    fn rec(
        exp: &[u32],
        j: usize,
        rest: u32,
        coeff: u32,
        target: &mut Vec<u32>,
        f: PrimeModulus,
        out: &mut BTreeMap<Vec<u32>, u32>,
    ) {
        let bump = f.get() - 1;
        if j == exp.len() - 1 {
            let c = f.mul(coeff, f.lucas_binom(exp[j] as u64, rest as u64));
            if c != 0 {
                target.push(exp[j] + bump * rest);
                let entry = out.entry(target.clone()).or_insert(0);
                *entry = f.add(*entry, c);
                target.pop();
            }
            return;
        }
        for k in 0..=rest {
            let c = f.mul(coeff, f.lucas_binom(exp[j] as u64, k as u64));
            if c == 0 {
                continue;
            }
            target.push(exp[j] + bump * k);
            rec(exp, j + 1, rest - k, c, target, f, out);
            target.pop();
        }
    }
    assert!(!exp.is_empty());
    let mut out = BTreeMap::new();
    rec(exp, 0, q, 1, &mut Vec::new(), f, &mut out);
    out.into_iter().filter(|&(_, c)| c != 0).collect()
}

/// `P^q` extended linearly to a sparse polynomial.
pub fn power_on_poly(g: &SparsePoly, q: u32, f: PrimeModulus) -> SparsePoly {
    let mut out = SparsePoly::zero();
    for (e, &c) in &g.terms {
        for (target, coeff) in power_on_monomial(e, q, f) {
            out.add_term(target, f.mul(c, coeff), f);
        }
    }
    out
}

/// Provenance of one hit-matrix column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnInfo {
    /// Level `s`: the column is an image of `P^(p^s)`.
    pub level: u32,
    /// Source monomial in degree `m - (p-1) p^s`.
    pub source: Vec<u32>,
    /// Hit variable for [`Mode::Graded`] columns; `None` otherwise.
    pub var: Option<usize>,
}

/// Hit matrix in exponent degree `m`: rows indexed by the canonical
/// degree-`m` monomial enumeration, columns by level/source (/variable)
/// in ascending level order, sources in enumeration order, variables
/// innermost.
#[derive(Debug, Clone)]
pub struct HitMatrix {
    pub f: PrimeModulus,
    pub h: usize,
    pub m: u32,
    pub mode: Mode,
    /// Canonical row basis: all degree-`m` exponent tuples.
    pub ambient: Vec<Vec<u32>>,
    /// Tuple -> row index.
    pub index: HashMap<Vec<u32>, usize>,
    pub matrix: MatrixModP,
    /// Per-column provenance, parallel to the matrix columns.
    pub columns: Vec<ColumnInfo>,
}

impl HitMatrix {
    /// Whether an ambient coefficient vector is hit (lies in the column
    /// span).
    pub fn is_hit_vector(&self, v: &[u32]) -> bool {
        self.matrix.in_column_span(v)
    }
}

/// Build the hit matrix for `h` variables in exponent degree `m`.
pub fn hit_matrix(h: usize, f: PrimeModulus, m: u32, mode: Mode) -> HitMatrix {
    let ambient = enumerate_degree(h, m);
    let index = index_map(&ambient);
    let p = f.get();

    // Column descriptors in contract order: level, then source, then
    // variable for the graded layout.
    let mut infos: Vec<ColumnInfo> = Vec::new();
    for s in levels(f, m) {
        let inc = (p - 1) * (p as u64).pow(s) as u32;
        for source in enumerate_degree(h, m - inc) {
            match mode {
                Mode::Graded => {
                    for var in 0..h {
                        infos.push(ColumnInfo {
                            level: s,
                            source: source.clone(),
                            var: Some(var),
                        });
                    }
                }
                Mode::EdgeSum | Mode::Full => infos.push(ColumnInfo {
                    level: s,
                    source,
                    var: None,
                }),
            }
        }
    }

    // Column contents, built independently and therefore in parallel.
    let sparse: Vec<Vec<(usize, u32)>> = exec::map_indexed(infos.len(), |ci| {
        let info = &infos[ci];
        let mut entries: Vec<(usize, u32)> = Vec::new();
        match mode {
            Mode::Graded => {
                if let Some((target, c)) = edge_image(&info.source, info.var.unwrap(), info.level, f)
                {
                    entries.push((index[&target], c));
                }
            }
            Mode::EdgeSum => {
                let mut acc: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
                for var in 0..h {
                    if let Some((target, c)) = edge_image(&info.source, var, info.level, f) {
                        let e = acc.entry(target).or_insert(0);
                        *e = f.add(*e, c);
                    }
                }
                entries.extend(
                    acc.into_iter()
                        .filter(|&(_, c)| c != 0)
                        .map(|(t, c)| (index[&t], c)),
                );
            }
            Mode::Full => {
                let q = (p as u64).pow(info.level) as u32;
                entries.extend(
                    power_on_monomial(&info.source, q, f)
                        .into_iter()
                        .map(|(t, c)| (index[&t], c)),
                );
            }
        }
        entries
    });

    let mut matrix = MatrixModP::zeros(f, ambient.len(), infos.len());
    for (j, col) in sparse.iter().enumerate() {
        for &(i, c) in col {
            matrix.set(i, j, c);
        }
    }

    HitMatrix {
        f,
        h,
        m,
        mode,
        ambient,
        index,
        matrix,
        columns: infos,
    }
}

/// Check the Cartan identity `P^k(X Y) = sum_{u+v=k} P^u(X) P^v(Y)` for
/// one power on two polynomials by computing the two sides along genuinely
/// different routes: the left side multiplies first and applies the
/// operation to the product; the right side applies operations to each
/// factor separately and multiplies afterwards.
pub fn cartan_check(x: &SparsePoly, y: &SparsePoly, k: u32, f: PrimeModulus) -> bool {
    let direct = power_on_poly(&x.mul(y, f), k, f);
    let mut expanded = SparsePoly::zero();
    for u in 0..=k {
        let term = power_on_poly(x, u, f).mul(&power_on_poly(y, k - u, f), f);
        expanded = expanded.add(&term, f);
    }
    direct == expanded
}

/// Check the Cartan identity through a composite `P^{k1} P^{k2}` on a
/// product of two polynomials: the left side applies both operations to
/// the product; the right side expands both levels over the factors,
/// `sum_{u1+v1=k1} sum_{u2+v2=k2} P^{u1}(P^{u2} A) P^{v1}(P^{v2} B)`,
/// and only multiplies at the end.
pub fn iterated_cartan_check(
    a: &SparsePoly,
    b: &SparsePoly,
    k1: u32,
    k2: u32,
    f: PrimeModulus,
) -> bool {
    let direct = power_on_poly(&power_on_poly(&a.mul(b, f), k2, f), k1, f);
    let mut expanded = SparsePoly::zero();
    for u2 in 0..=k2 {
        let pa = power_on_poly(a, u2, f);
        let pb = power_on_poly(b, k2 - u2, f);
        for u1 in 0..=k1 {
            let term = power_on_poly(&pa, u1, f).mul(&power_on_poly(&pb, k1 - u1, f), f);
            expanded = expanded.add(&term, f);
        }
    }
    direct == expanded
}

/// Level-`s` edge part of a monomial as a sparse polynomial: one term per
/// variable whose `s`-digit is nonzero.
pub fn edge_poly(exp: &[u32], s: u32, f: PrimeModulus) -> SparsePoly {
    let mut out = SparsePoly::zero();
    for var in 0..exp.len() {
        if let Some((target, c)) = edge_image(exp, var, s, f) {
            out.add_term(target, c, f);
        }
    }
    out
}

/// Dual-route check of the graded short-Cartan rule on a pair of
/// monomials: the distributed level-`s` edge of the product,
/// `edge_s(X)·Y + X·edge_s(Y)`, computed once through generic sparse
/// arithmetic (edge polynomials multiplied and summed) and once by direct
/// exponent-tuple construction.  The routes must agree term by term.
pub fn short_cartan_check(ex: &[u32], ey: &[u32], s: u32, f: PrimeModulus) -> bool {
    let x = SparsePoly::monomial(ex.to_vec(), 1, f);
    let y = SparsePoly::monomial(ey.to_vec(), 1, f);
    let generic = edge_poly(ex, s, f)
        .mul(&y, f)
        .add(&x.mul(&edge_poly(ey, s, f), f), f);

    let bump = (f.get() - 1) * (f.get() as u64).pow(s) as u32;
    let mut direct = SparsePoly::zero();
    for (own, other) in [(ex, ey), (ey, ex)] {
        for var in 0..own.len() {
            let c = f.digit(own[var] as u64, s);
            if c != 0 {
                let mut target: Vec<u32> =
                    own.iter().zip(other).map(|(a, b)| a + b).collect();
                target[var] += bump;
                direct.add_term(target, c, f);
            }
        }
    }
    generic == direct
}

/// Two columns of one level sharing a leading row inside one weight block
/// — evidence that the level block is not echelon up to row permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingRowCollision {
    pub level: u32,
    /// Weight signature shared by both sources.
    pub weight: Vec<u32>,
    /// Ambient index of the shared leading row.
    pub row: usize,
    /// Column indices (into the hit matrix) that lead there.
    pub columns: Vec<usize>,
}

/// Triangularity diagnostic: group hit-matrix columns by level and by the
/// weight block of their source, lead each column at its maximal nonzero
/// row under the digit-matrix comparison
/// [`crate::monomials::compare_cartan_lex`], and report every group with a
/// duplicated leading row.  An empty report means each level block is
/// echelon up to row permutation; a nonempty one disproves that reading
/// for this instance.
pub fn leading_row_collisions(hm: &HitMatrix) -> Vec<LeadingRowCollision> {
    use crate::monomials::weight_of;
    use std::cmp::Ordering;

    let mut groups: BTreeMap<(u32, Vec<u32>, usize), Vec<usize>> = BTreeMap::new();
    for (j, info) in hm.columns.iter().enumerate() {
        let mut lead: Option<usize> = None;
        for i in 0..hm.ambient.len() {
            if hm.matrix.get(i, j) == 0 {
                continue;
            }
            let better = match lead {
                None => true,
                Some(l) => {
                    crate::monomials::compare_cartan_lex(&hm.ambient[i], &hm.ambient[l], hm.f)
                        == Ordering::Greater
                }
            };
            if better {
                lead = Some(i);
            }
        }
        if let Some(row) = lead {
            let weight = weight_of(&info.source, hm.f);
            groups
                .entry((info.level, weight, row))
                .or_default()
                .push(j);
        }
    }
    groups
        .into_iter()
        .filter(|(_, cols)| cols.len() > 1)
        .map(|((level, weight, row), columns)| LeadingRowCollision {
            level,
            weight,
            row,
            columns,
        })
        .collect()
}

/// Dual-route check of graded additivity of top indices: the product of
/// the level-`s1` edge of `A` with the level-`s2` edge of `B`, computed
/// once by multiplying the two edge polynomials through generic sparse
/// arithmetic and once directly from the exponent pairs.
pub fn graded_additivity_check(
    ea: &[u32],
    eb: &[u32],
    s1: u32,
    s2: u32,
    f: PrimeModulus,
) -> bool {
    let generic = edge_poly(ea, s1, f).mul(&edge_poly(eb, s2, f), f);

    let bump1 = (f.get() - 1) * (f.get() as u64).pow(s1) as u32;
    let bump2 = (f.get() - 1) * (f.get() as u64).pow(s2) as u32;
    let mut direct = SparsePoly::zero();
    for i in 0..ea.len() {
        let c1 = f.digit(ea[i] as u64, s1);
        if c1 == 0 {
            continue;
        }
        for j in 0..eb.len() {
            let c2 = f.digit(eb[j] as u64, s2);
            if c2 == 0 {
                continue;
            }
            let mut target: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
            target[i] += bump1;
            target[j] += bump2;
            direct.add_term(target, f.mul(c1, c2), f);
        }
    }
    generic == direct
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomials::weight_of;

    fn f3() -> PrimeModulus {
        PrimeModulus::new(3).unwrap()
    }

    #[test]
    fn levels_cut_off_at_degree() {
        let f = f3();
        // (p-1) p^s = 2, 6, 18, 54 <= 65 but 162 > 65.
        assert_eq!(levels(f, 65), vec![0, 1, 2, 3]);
        assert_eq!(levels(f, 5), vec![0]);
        assert_eq!(levels(f, 6), vec![0, 1]);
        assert_eq!(max_level(f, 1), None);
        assert_eq!(levels(f, 0), Vec::<u32>::new());
    }

    #[test]
    fn edge_term_reads_the_digit() {
        let f = f3();
        // 7 = (1, 2) base 3: digit 0 is 1, digit 1 is 2.
        assert_eq!(edge_image(&[7, 0], 0, 0, f), Some((vec![9, 0], 1)));
        assert_eq!(edge_image(&[7, 0], 0, 1, f), Some((vec![13, 0], 2)));
        // 9 = (0, 0, 1): digits 0 and 1 vanish.
        assert_eq!(edge_image(&[9, 4], 0, 0, f), None);
        assert_eq!(edge_image(&[9, 4], 0, 1, f), None);
        assert_eq!(edge_image(&[9, 4], 0, 2, f), Some((vec![27, 4], 1)));
    }

    #[test]
    fn single_variable_power_matches_binomial_rule() {
        let f = f3();
        for r in 0u32..30 {
            for q in 0u32..12 {
                let img = power_on_monomial(&[r], q, f);
                let c = f.lucas_binom(r as u64, q as u64);
                if c == 0 {
                    assert!(img.is_empty());
                } else {
                    assert_eq!(img, vec![(vec![r + 2 * q], c)]);
                }
            }
        }
    }

    #[test]
    fn cartan_formula_on_a_product_of_variables() {
        let f = f3();
        // P^1(x y) = P^1(x) y + x P^1(y) = x^3 y + x y^3.
        let img = power_on_monomial(&[1, 1], 1, f);
        assert_eq!(img, vec![(vec![1, 3], 1), (vec![3, 1], 1)]);
        // P^0 is the identity.
        assert_eq!(power_on_monomial(&[4, 5], 0, f), vec![(vec![4, 5], 1)]);
    }

    #[test]
    fn cartan_identity_on_polynomials() {
        // P^q(X * Y) = sum_(u+v=q) P^u(X) * P^v(Y), with the two sides
        // computed through different code paths.
        let f = f3();
        let x = SparsePoly::monomial(vec![2, 1], 2, f).add(&SparsePoly::monomial(vec![0, 3], 1, f), f);
        let y = SparsePoly::monomial(vec![1, 2], 1, f).add(&SparsePoly::monomial(vec![4, 0], 2, f), f);
        for q in 0..8 {
            let lhs = power_on_poly(&x.mul(&y, f), q, f);
            let mut rhs = SparsePoly::zero();
            for u in 0..=q {
                rhs = rhs.add(&power_on_poly(&x, u, f).mul(&power_on_poly(&y, q - u, f), f), f);
            }
            assert_eq!(lhs, rhs, "q={q}");
        }
    }

    #[test]
    fn edge_of_product_is_not_the_full_story_under_carries() {
        // The naive "edge terms only" identity fails when digits carry:
        // P^3(x^2 * x^2) = P^3(x^4) has coefficient binom(4,3) = 1 mod 3
        // at x^10, but the two edge terms contribute
        // 2 * binom(2,3) = 0.  The off-diagonal Cartan terms make up the
        // difference, which is why product rules are never collapsed to
        // their edges in this engine.
        let f = f3();
        let full = power_on_monomial(&[4], 3, f);
        assert_eq!(full, vec![(vec![10], 1)]);
        let edge_only = 2 * f.lucas_binom(2, 3);
        assert_eq!(edge_only, 0);
    }

    #[test]
    fn hit_matrix_shapes_and_column_order() {
        let f = f3();
        // h = 2, m = 3: levels {0}, sources = degree-1 tuples [0,1],[1,0].
        let hm = hit_matrix(2, f, 3, Mode::EdgeSum);
        assert_eq!(hm.ambient.len(), 4);
        assert_eq!(hm.matrix.cols(), 2);
        assert_eq!(hm.columns[0].source, vec![0, 1]);
        assert_eq!(hm.columns[1].source, vec![1, 0]);
        // Graded mode: one column per variable, in variable order inside
        // each source.
        let hg = hit_matrix(2, f, 3, Mode::Graded);
        assert_eq!(hg.matrix.cols(), 4);
        assert_eq!(hg.columns[1].var, Some(1));
        // Level order is ascending and sources re-enumerate per level.
        let hm = hit_matrix(2, f, 9, Mode::EdgeSum);
        let lvls: Vec<u32> = hm.columns.iter().map(|c| c.level).collect();
        assert!(lvls.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(hm.matrix.cols(), 8 + 4); // deg-7 and deg-3 sources
    }

    #[test]
    fn columns_preserve_weight() {
        let f = f3();
        for mode in [Mode::EdgeSum, Mode::Graded, Mode::Full] {
            let hm = hit_matrix(2, f, 8, mode);
            for (j, info) in hm.columns.iter().enumerate() {
                let w = weight_of(&info.source, f);
                for (i, row_monomial) in hm.ambient.iter().enumerate() {
                    if hm.matrix.get(i, j) != 0 {
                        assert_eq!(weight_of(row_monomial, f), w, "mode {mode} col {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn degree_below_p_minus_one_has_no_columns() {
        let f = PrimeModulus::new(5).unwrap();
        let hm = hit_matrix(2, f, 3, Mode::EdgeSum);
        assert_eq!(hm.matrix.cols(), 0);
        assert_eq!(hm.matrix.rows(), 4);
    }

    #[test]
    fn cartan_checks_on_small_inputs() {
        let f = f3();
        let x = SparsePoly::monomial(vec![3, 0], 1, f);
        let y = SparsePoly::monomial(vec![0, 9], 1, f);
        assert!(cartan_check(&x, &y, 3, f));
        // Multi-term factors exercise cross terms in both routes.
        let mut s = SparsePoly::monomial(vec![2, 1], 1, f);
        s.add_term(vec![0, 3], 2, f);
        let mut t = SparsePoly::monomial(vec![1, 1], 2, f);
        t.add_term(vec![4, 0], 1, f);
        for k in 0..=5 {
            assert!(cartan_check(&s, &t, k, f), "k={k}");
        }
        let a = SparsePoly::monomial(vec![2, 0], 1, f);
        let b = SparsePoly::monomial(vec![0, 4], 1, f);
        assert!(iterated_cartan_check(&a, &b, 1, 3, f));
        assert!(iterated_cartan_check(&s, &t, 2, 3, f));
    }

    #[test]
    fn leading_row_collision_found_and_absent() {
        let f = f3();
        // Degree 6, graded mode: level-0 sources (1,3) hit in x and (3,1)
        // hit in y both lead at (3,3), inside the same (1,1) weight block.
        let hm = hit_matrix(2, f, 6, Mode::Graded);
        let collisions = leading_row_collisions(&hm);
        assert_eq!(collisions.len(), 1);
        let c = &collisions[0];
        assert_eq!(c.level, 0);
        assert_eq!(c.weight, vec![1, 1]);
        assert_eq!(hm.ambient[c.row], vec![3, 3]);
        assert_eq!(c.columns.len(), 2);
        let sources: Vec<&[u32]> = c
            .columns
            .iter()
            .map(|&j| hm.columns[j].source.as_slice())
            .collect();
        assert!(sources.contains(&&[1, 3][..]) && sources.contains(&&[3, 1][..]));

        // Degree 3 has one nonzero column per variable direction; no group
        // holds two leads.
        assert!(leading_row_collisions(&hit_matrix(2, f, 3, Mode::Graded)).is_empty());
    }

    #[test]
    fn dual_route_lemma_checks_on_worked_inputs() {
        let f = f3();
        // Graded short Cartan on x^3 * y^9 at level 1.
        assert!(short_cartan_check(&[3, 0], &[0, 9], 1, f));
        // Graded additivity on (x^2, y^4) at levels (0, 1).
        assert!(graded_additivity_check(&[2, 0], &[0, 4], 0, 1, f));
        // A pair with p-adic carries in the product exponents still agrees
        // route-to-route (both routes distribute over factors).
        assert!(short_cartan_check(&[2, 5], &[2, 4], 1, f));
        assert!(graded_additivity_check(&[5, 1], &[4, 2], 1, 0, f));
        // Zero-digit inputs give the empty edge on both routes.
        assert!(edge_poly(&[0, 0], 0, f).is_zero());
        assert!(short_cartan_check(&[0, 0], &[0, 0], 2, f));
    }
}
