//! Frozen numeric corpus and the runner that re-derives every entry.
//!
//! Each fixture pins an exact published value — quotient dimensions,
//! ordered admissible bases, invariant supports, per-mode ranks, the
//! one-variable classification — that this engine must reproduce.  The
//! corpus was cross-checked against an independent implementation before
//! this crate existed; a red entry here means the engine is wrong, not
//! the table.

use crate::arith::PrimeModulus;
use crate::cohit::{build_quotient_blocks, classify_rank1, cohit_basis, cohit_dimension, Rank1Class};
use crate::glinv::{invariants, Twist};
use crate::monomials::Order;
use crate::steenrod::{graded_additivity_check, short_cartan_check, Mode};
use std::collections::BTreeMap;
use std::time::Instant;

/// Outcome of re-deriving one fixture.
#[derive(Debug, Clone)]
pub struct FixtureResult {
    /// Stable identifier, e.g. `basis(2,3,18)`.
    pub id: String,
    pub passed: bool,
    /// What was compared, and the got/want values on failure.
    pub detail: String,
    /// Wall-clock time spent on this entry.
    pub seconds: f64,
}

impl FixtureResult {
    fn finish(id: String, t0: Instant, passed: bool, detail: String) -> Self {
        FixtureResult {
            id,
            passed,
            detail,
            seconds: t0.elapsed().as_secs_f64(),
        }
    }
}

/// One pinned cohit computation: dimensions, the ordered admissible basis
/// under the balanced order in edge-sum mode, and the invariant data of
/// its quotient.
#[derive(Debug, Clone, Copy)]
pub struct BasisFixture {
    pub h: usize,
    pub p: u32,
    pub m: u32,
    /// `(dim, ambient, rank)`.
    pub dims: (usize, usize, usize),
    /// Kept monomials in acceptance order.
    pub reps: &'static [&'static [u32]],
    /// Dimension of the untwisted invariant space of the quotient.
    pub untwisted_dim: usize,
    /// Support of the det-inverse-twisted invariant (dimension 1), as
    /// `(exponents, coefficient)` pairs; coefficients are compared up to
    /// one global scalar.  `None` means the twisted space is zero.
    pub twisted_support: Option<&'static [(&'static [u32], u32)]>,
}

/// The pinned cohit corpus.  Entry order is roughly by cost; the final
/// `(3, 3, 65)` entry is the large one.
pub const BASIS_FIXTURES: &[BasisFixture] = &[
    BasisFixture {
        h: 2,
        p: 3,
        m: 18,
        dims: (4, 19, 15),
        reps: &[&[8, 10], &[7, 11], &[1, 17], &[17, 1]],
        untwisted_dim: 0,
        twisted_support: Some(&[(&[7, 11], 1), (&[1, 17], 2), (&[17, 1], 1)]),
    },
    BasisFixture {
        h: 3,
        p: 3,
        m: 5,
        dims: (14, 21, 7),
        reps: &[
            &[1, 2, 2],
            &[2, 1, 2],
            &[2, 2, 1],
            &[1, 1, 3],
            &[1, 3, 1],
            &[0, 3, 2],
            &[3, 0, 2],
            &[0, 2, 3],
            &[2, 0, 3],
            &[2, 3, 0],
            &[3, 2, 0],
            &[0, 0, 5],
            &[0, 5, 0],
            &[5, 0, 0],
        ],
        untwisted_dim: 0,
        twisted_support: Some(&[(&[1, 1, 3], 2), (&[1, 3, 1], 1)]),
    },
    BasisFixture {
        h: 3,
        p: 3,
        m: 13,
        dims: (24, 105, 81),
        reps: &[
            &[4, 4, 5],
            &[4, 5, 4],
            &[5, 4, 4],
            &[3, 5, 5],
            &[5, 3, 5],
            &[5, 5, 3],
            &[2, 5, 6],
            &[2, 6, 5],
            &[5, 2, 6],
            &[1, 5, 7],
            &[5, 1, 7],
            &[5, 7, 1],
            &[2, 3, 8],
            &[3, 2, 8],
            &[3, 8, 2],
            &[8, 3, 2],
            &[2, 8, 3],
            &[8, 2, 3],
            &[0, 8, 5],
            &[5, 8, 0],
            &[8, 0, 5],
            &[8, 5, 0],
            &[0, 5, 8],
            &[5, 0, 8],
        ],
        untwisted_dim: 0,
        twisted_support: Some(&[
            (&[3, 5, 5], 1),
            (&[5, 3, 5], 2),
            (&[5, 5, 3], 1),
            (&[1, 5, 7], 1),
            (&[5, 1, 7], 2),
            (&[5, 7, 1], 1),
        ]),
    },
    BasisFixture {
        h: 2,
        p: 13,
        m: 10,
        dims: (11, 11, 0),
        reps: &[
            &[5, 5],
            &[4, 6],
            &[6, 4],
            &[3, 7],
            &[7, 3],
            &[2, 8],
            &[8, 2],
            &[1, 9],
            &[9, 1],
            &[0, 10],
            &[10, 0],
        ],
        untwisted_dim: 0,
        twisted_support: None,
    },
    BasisFixture {
        h: 3,
        p: 5,
        m: 21,
        dims: (97, 253, 156),
        reps: &[
            &[7, 7, 7],
            &[6, 7, 8],
            &[6, 8, 7],
            &[7, 6, 8],
            &[7, 8, 6],
            &[8, 6, 7],
            &[8, 7, 6],
            &[5, 8, 8],
            &[6, 6, 9],
            &[6, 9, 6],
            &[8, 5, 8],
            &[8, 8, 5],
            &[9, 6, 6],
            &[5, 7, 9],
            &[5, 9, 7],
            &[7, 5, 9],
            &[7, 9, 5],
            &[9, 5, 7],
            &[9, 7, 5],
            &[4, 8, 9],
            &[4, 9, 8],
            &[8, 4, 9],
            &[8, 9, 4],
            &[9, 4, 8],
            &[9, 8, 4],
            &[4, 7, 10],
            &[4, 10, 7],
            &[7, 4, 10],
            &[7, 10, 4],
            &[10, 4, 7],
            &[10, 7, 4],
            &[3, 9, 9],
            &[9, 3, 9],
            &[9, 9, 3],
            &[3, 7, 11],
            &[7, 3, 11],
            &[7, 11, 3],
            &[2, 9, 10],
            &[2, 10, 9],
            &[9, 2, 10],
            &[9, 10, 2],
            &[10, 2, 9],
            &[10, 9, 2],
            &[2, 8, 11],
            &[2, 11, 8],
            &[8, 2, 11],
            &[8, 11, 2],
            &[11, 2, 8],
            &[11, 8, 2],
            &[1, 9, 11],
            &[1, 11, 9],
            &[9, 1, 11],
            &[9, 11, 1],
            &[11, 1, 9],
            &[11, 9, 1],
            &[1, 8, 12],
            &[8, 1, 12],
            &[8, 12, 1],
            &[3, 4, 14],
            &[3, 14, 4],
            &[4, 3, 14],
            &[4, 14, 3],
            &[14, 3, 4],
            &[14, 4, 3],
            &[0, 9, 12],
            &[0, 12, 9],
            &[2, 5, 14],
            &[2, 14, 5],
            &[5, 2, 14],
            &[5, 14, 2],
            &[9, 0, 12],
            &[9, 12, 0],
            &[12, 0, 9],
            &[12, 9, 0],
            &[14, 2, 5],
            &[14, 5, 2],
            &[1, 6, 14],
            &[1, 14, 6],
            &[6, 1, 14],
            &[6, 14, 1],
            &[14, 1, 6],
            &[14, 6, 1],
            &[0, 7, 14],
            &[0, 14, 7],
            &[7, 0, 14],
            &[7, 14, 0],
            &[14, 0, 7],
            &[14, 7, 0],
            &[1, 1, 19],
            &[1, 19, 1],
            &[19, 1, 1],
            &[0, 2, 19],
            &[0, 19, 2],
            &[2, 0, 19],
            &[2, 19, 0],
            &[19, 0, 2],
            &[19, 2, 0],
        ],
        untwisted_dim: 0,
        twisted_support: Some(&[
            (&[7, 7, 7], 2),
            (&[3, 7, 11], 1),
            (&[7, 3, 11], 4),
            (&[7, 11, 3], 1),
        ]),
    },
    BasisFixture {
        h: 3,
        p: 3,
        m: 65,
        dims: (13, 2211, 2198),
        reps: &[
            &[17, 25, 23],
            &[16, 23, 26],
            &[16, 26, 23],
            &[23, 16, 26],
            &[7, 26, 32],
            &[26, 7, 32],
            &[26, 32, 7],
            &[7, 23, 35],
            &[23, 7, 35],
            &[23, 35, 7],
            &[5, 7, 53],
            &[5, 53, 7],
            &[53, 5, 7],
        ],
        untwisted_dim: 0,
        twisted_support: Some(&[
            (&[17, 25, 23], 2),
            (&[7, 23, 35], 1),
            (&[23, 7, 35], 2),
            (&[23, 35, 7], 1),
            (&[5, 7, 53], 1),
            (&[5, 53, 7], 2),
            (&[53, 5, 7], 1),
        ]),
    },
];

/// Pinned `(rank, dim)` per matrix mode for small instances.
#[derive(Debug, Clone, Copy)]
pub struct ModeFixture {
    pub h: usize,
    pub p: u32,
    pub m: u32,
    pub graded: (usize, usize),
    pub full: (usize, usize),
}

pub const MODE_FIXTURES: &[ModeFixture] = &[
    ModeFixture { h: 2, p: 3, m: 3, graded: (2, 2), full: (2, 2) },
    ModeFixture { h: 2, p: 3, m: 4, graded: (4, 1), full: (3, 2) },
    ModeFixture { h: 2, p: 3, m: 5, graded: (4, 2), full: (2, 4) },
    ModeFixture { h: 3, p: 3, m: 5, graded: (15, 6), full: (7, 14) },
];

/// The large fixture, exposed so callers can budget it separately.
pub const HUGE: (usize, u32, u32) = (3, 3, 65);

fn fixture_is_huge(fx: &BasisFixture) -> bool {
    (fx.h, fx.p, fx.m) == HUGE
}

/// Normalize a support map so the coefficient at the smallest exponent
/// tuple is 1; two supports are scalar multiples exactly when their
/// normalizations agree.
fn normalize_support(
    map: &BTreeMap<Vec<u32>, u32>,
    f: PrimeModulus,
) -> BTreeMap<Vec<u32>, u32> {
    match map.values().next() {
        Some(&c0) => {
            let s = f.inv(c0);
            map.iter()
                .map(|(k, v)| (k.clone(), f.mul(*v, s)))
                .collect()
        }
        None => BTreeMap::new(),
    }
}

/// Re-derive a basis fixture: dimensions plus the ordered kept-monomial
/// list under the balanced order in edge-sum mode.
pub fn check_basis(fx: &BasisFixture) -> FixtureResult {
    let t0 = Instant::now();
    let id = format!("basis({},{},{})", fx.h, fx.p, fx.m);
    let f = PrimeModulus::new(fx.p).expect("fixture prime");
    let basis = cohit_basis(fx.h, f, fx.m, Mode::EdgeSum, Order::Balanced, &[]);
    let got_dims = (basis.dims.dim, basis.dims.ambient, basis.dims.rank);
    let got_reps = basis.rep_exponents();
    let want_reps: Vec<Vec<u32>> = fx.reps.iter().map(|r| r.to_vec()).collect();
    let dims_ok = got_dims == fx.dims;
    let reps_ok = got_reps == want_reps;
    let detail = if dims_ok && reps_ok {
        format!("dims {:?}, {} ordered reps", got_dims, got_reps.len())
    } else {
        format!(
            "dims got {:?} want {:?}; reps got {:?} want {:?}",
            got_dims, fx.dims, got_reps, want_reps
        )
    };
    FixtureResult::finish(id, t0, dims_ok && reps_ok, detail)
}

/// Identifier of a fixture's slice-invariant entry, named by the slice
/// degree `n = 2m + h`: e.g. `slice-133(3,3,65)`.
fn slice_id(fx: &BasisFixture) -> String {
    format!(
        "slice-{}({},{},{})",
        2 * fx.m as u64 + fx.h as u64,
        fx.h,
        fx.p,
        fx.m
    )
}

/// Re-derive the invariant data of a basis fixture: the untwisted
/// dimension and the det-inverse-twisted dimension, plus — when the
/// twisted space is one-dimensional — its support compared up to a global
/// scalar.
pub fn check_invariants(fx: &BasisFixture) -> FixtureResult {
    let t0 = Instant::now();
    let id = slice_id(fx);
    let f = PrimeModulus::new(fx.p).expect("fixture prime");
    let basis = cohit_basis(fx.h, f, fx.m, Mode::EdgeSum, Order::Balanced, &[]);
    let blocks = match build_quotient_blocks(&basis) {
        Ok(b) => b,
        Err(e) => {
            return FixtureResult::finish(id, t0, false, format!("block assembly failed: {e}"))
        }
    };
    let untw = invariants(&blocks, Twist::None).dim();
    let tw = invariants(&blocks, Twist::DetInverse);
    let want_tw_dim = usize::from(fx.twisted_support.is_some());
    let mut passed = untw == fx.untwisted_dim && tw.dim() == want_tw_dim;
    let mut detail = format!("untwisted dim {untw}, twisted dim {}", tw.dim());
    if !passed {
        detail = format!(
            "untwisted dim got {untw} want {}; twisted dim got {} want {want_tw_dim}",
            fx.untwisted_dim,
            tw.dim()
        );
    } else if let Some(want) = fx.twisted_support {
        let exps = basis.rep_exponents();
        let got: BTreeMap<Vec<u32>, u32> = tw.vectors[0]
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(j, &c)| (exps[j].clone(), c))
            .collect();
        let want: BTreeMap<Vec<u32>, u32> =
            want.iter().map(|&(e, c)| (e.to_vec(), c)).collect();
        let got_n = normalize_support(&got, f);
        let want_n = normalize_support(&want, f);
        passed = got_n == want_n;
        detail = if passed {
            format!("{detail}, support of {} kept monomials matches", got_n.len())
        } else {
            format!("twisted support got {got_n:?} want {want_n:?}")
        };
    }
    FixtureResult::finish(id, t0, passed, detail)
}

/// Re-derive a per-mode rank fixture.
pub fn check_mode(fx: &ModeFixture) -> FixtureResult {
    let t0 = Instant::now();
    let id = format!("modes({},{},{})", fx.h, fx.p, fx.m);
    let f = PrimeModulus::new(fx.p).expect("fixture prime");
    let g = cohit_dimension(fx.h, f, fx.m, Mode::Graded);
    let fl = cohit_dimension(fx.h, f, fx.m, Mode::Full);
    let got_g = (g.rank, g.dim);
    let got_f = (fl.rank, fl.dim);
    let passed = got_g == fx.graded && got_f == fx.full;
    let detail = if passed {
        format!("graded {:?}, full {:?}", got_g, got_f)
    } else {
        format!(
            "graded got {:?} want {:?}; full got {:?} want {:?}",
            got_g, fx.graded, got_f, fx.full
        )
    };
    FixtureResult::finish(id, t0, passed, detail)
}

/// Sweep the one-variable algebra at one prime: the full-mode matrix rank
/// must agree with the closed-form classification for every `d` up to the
/// bound, and the first composite-degree witness `t^(p(p+1)-1)` must be
/// hit.
pub fn check_rank1(p: u32, max_d: u64) -> FixtureResult {
    let t0 = Instant::now();
    let id = format!("rank1(p={p})");
    let f = PrimeModulus::new(p).expect("fixture prime");
    let mut bad = Vec::new();
    for d in 0..=max_d {
        let computed = if cohit_dimension(1, f, d as u32, Mode::Full).dim == 0 {
            Rank1Class::Hit
        } else {
            Rank1Class::NonHit
        };
        if computed != classify_rank1(f, d) {
            bad.push(d);
        }
    }
    let witness = p as u64 * (p as u64 + 1) - 1;
    let witness_hit = classify_rank1(f, witness) == Rank1Class::Hit
        && cohit_dimension(1, f, witness as u32, Mode::Full).dim == 0;
    let passed = bad.is_empty() && witness_hit;
    let detail = if passed {
        format!("agreement for d <= {max_d}; t^{witness} is hit")
    } else {
        format!("disagreements at d in {bad:?}; witness t^{witness} hit = {witness_hit}")
    };
    FixtureResult::finish(id, t0, passed, detail)
}

/// Dual-route lemma checks: the worked example inputs plus deterministic
/// pseudo-random monomial pairs, at `p = 3`.  `which` selects the
/// short-Cartan rule or graded additivity.
pub fn check_lemma(which: LemmaCheck) -> FixtureResult {
    let t0 = Instant::now();
    let f = PrimeModulus::new(3).expect("fixture prime");
    // Small splitmix-style generator: the library keeps no RNG dependency.
    let mut state: u64 = 0x243f6a8885a308d3;
    let mut next = move |bound: u32| -> u32 {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((state >> 33) as u32) % bound
    };
    let mut bad = Vec::new();
    let (id, worked_ok) = match which {
        LemmaCheck::ShortCartan => (
            "lemma-short-cartan",
            short_cartan_check(&[3, 0], &[0, 9], 1, f),
        ),
        LemmaCheck::GradedAdditivity => (
            "lemma-graded-additivity",
            graded_additivity_check(&[2, 0], &[0, 4], 0, 1, f),
        ),
    };
    if !worked_ok {
        bad.push("worked example".to_string());
    }
    for i in 0..100 {
        let h = 1 + (i % 3);
        let ex: Vec<u32> = (0..h).map(|_| next(9)).collect();
        let ey: Vec<u32> = (0..h).map(|_| next(9)).collect();
        let ok = match which {
            LemmaCheck::ShortCartan => short_cartan_check(&ex, &ey, next(3), f),
            LemmaCheck::GradedAdditivity => {
                graded_additivity_check(&ex, &ey, next(3), next(3), f)
            }
        };
        if !ok {
            bad.push(format!("pair {i}: {ex:?} x {ey:?}"));
        }
    }
    let detail = if bad.is_empty() {
        "OK on worked example + 100 random pairs".to_string()
    } else {
        bad.truncate(4);
        bad.join("; ")
    };
    FixtureResult::finish(id.to_string(), t0, bad.is_empty(), detail)
}

/// Selector for [`check_lemma`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaCheck {
    /// Distributed level-`s` edge of a product, both routes.
    ShortCartan,
    /// Product of edge representatives, both routes.
    GradedAdditivity,
}

/// Run every fixture whose id contains `filter` (all of them when `None`;
/// trailing `*` wildcards are stripped, so `lemma-*` selects the lemma
/// entries).  The large `(3, 3, 65)` entries run last.
pub fn run_all(filter: Option<&str>) -> Vec<FixtureResult> {
    let pattern = filter.map(|f| f.trim_end_matches('*'));
    let keep = |id: &str| pattern.map_or(true, |f| id.contains(f));
    let mut out = Vec::new();
    let (small, huge): (Vec<&BasisFixture>, Vec<&BasisFixture>) =
        BASIS_FIXTURES.iter().partition(|fx| !fixture_is_huge(fx));
    for fx in small.iter().chain(huge.iter()) {
        let id = format!("basis({},{},{})", fx.h, fx.p, fx.m);
        if keep(&id) {
            out.push(check_basis(fx));
        }
        if keep(&slice_id(fx)) {
            out.push(check_invariants(fx));
        }
    }
    for which in [LemmaCheck::ShortCartan, LemmaCheck::GradedAdditivity] {
        let id = match which {
            LemmaCheck::ShortCartan => "lemma-short-cartan",
            LemmaCheck::GradedAdditivity => "lemma-graded-additivity",
        };
        if keep(id) {
            out.push(check_lemma(which));
        }
    }
    for fx in MODE_FIXTURES {
        let id = format!("modes({},{},{})", fx.h, fx.p, fx.m);
        if keep(&id) {
            out.push(check_mode(fx));
        }
    }
    for p in [3, 5, 7] {
        let id = format!("rank1(p={p})");
        if keep(&id) {
            out.push(check_rank1(p, 200));
        }
    }
    out
}
