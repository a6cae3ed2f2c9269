//! # adjlab
//!
//! An exact-arithmetic toolkit for deciding when a knot can be
//! **2-adjacent** — when some diagram contains two crossings such that
//! changing any nonempty subset of them unknots it. The crate combines:
//!
//! - [`algebra`]: exact integer Laurent polynomials, Conway/Alexander
//!   conversions, and evaluation (rational points, Gaussian rationals,
//!   roots of unity);
//! - [`knotdata`]: the curated knot-invariant tables, lift entries, and
//!   validation of every arithmetic identity the tables must satisfy;
//! - [`filters`]: the classical-invariant battery — determinant form
//!   `4ω² ± 1`, signature bounds, rational-knot exclusion, Conway
//!   coefficient constraints, unknotting-crossing sign annotations, and
//!   the HOMFLY-PT `p₀`/`p₂` tests;
//! - [`dinv`]: lens-space d-invariants (recursive and closed form), the
//!   surgery formula `d(S³_{p/q}(J), i) = d(L(p,q), i) − 2·max(V_{⌊i/q⌋},
//!   V_{⌊(p+q−1−i)/q⌋})`, torsion sequences from Alexander polynomials,
//!   and the index-aligned inversion of the surgery formula;
//! - [`vsolver`]: exhaustive, conjugation-equivariant enumeration of all
//!   torsion sequences consistent with a d-invariant multiset;
//! - [`obstruct`]: the root-of-unity criterion — every candidate
//!   Alexander polynomial must evaluate to 1 at all odd `2ω`-th roots of
//!   unity — and the pipeline orchestrating the d-invariant machinery;
//! - [`seifert`]: an explicit two-parameter Seifert-matrix construction
//!   realizing both determinant forms, with closed-form Conway
//!   polynomials verified against exact symbolic determinants;
//! - [`classify`]: verdict assembly and deterministic JSON-line reports.
//!
//! All number theory is exact (`num-bigint` / `num-rational`); the single
//! deliberately inexact step is the final numerical evaluation at roots
//! of unity, guarded by a documented threshold
//! ([`obstruct::DEFAULT_THRESHOLD`]).
//!
//! The `examples/` directory demonstrates each layer end to end; the
//! `adjlab` binary exposes the same functionality as subcommands
//! (`classify`, `drilldown`, `dinv`, `vsolve`, `obstruct`, `construct`).

pub mod algebra;
pub mod classify;
pub mod dinv;
pub mod filters;
pub mod knotdata;
pub mod obstruct;
pub mod seifert;
pub mod vsolver;
