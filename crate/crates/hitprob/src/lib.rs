//! Exact computational engine for the hit problem of the mod-p Steenrod
//! reduced powers acting on a polynomial algebra in `h` variables, for odd
//! primes `p`.
//!
//! The polynomial algebra `F_p[t_1, ..., t_h]` (every generator in degree 2)
//! is a module over the algebra generated by the reduced power operations
//! `P^k`.  A homogeneous element is *hit* when it lies in the image of the
//! positive-degree operations.  The engine computes, degree by degree:
//!
//! * hit matrices — the matrix of the `P^{p^s}` action landing in a fixed
//!   degree, in several column layouts ([`steenrod`]);
//! * the cohit quotient (polynomials modulo hit elements), its dimension and
//!   a preferred monomial basis chosen greedily against an ordering score
//!   ([`cohit`]);
//! * the induced action of `GL(h, F_p)` on the quotient and its invariant
//!   subspace, optionally twisted by the inverse determinant character —
//!   the twist that computes the top exterior slice of cohomology
//!   ([`glinv`]);
//! * closed-form predictions (degree families, p-adic digit reports, the
//!   rank-2 classification) used to cross-check the linear algebra
//!   ([`report`]);
//! * a frozen corpus of verified instances runnable as a self-test
//!   ([`fixtures`]).
//!
//! All linear algebra is exact arithmetic in `F_p` ([`linalg`]); heavy loops
//! are data-parallel through [rayon] when the `parallel` feature (default)
//! is enabled, with a bit-identical sequential fallback ([`exec`]).

pub mod arith;
pub mod cohit;
pub mod exec;
pub mod fixtures;
pub mod glinv;
pub mod linalg;
pub mod monomials;
pub mod report;
pub mod steenrod;
