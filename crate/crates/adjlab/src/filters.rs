//! Classical-invariant filters for candidate 2-adjacent knots.
//!
//! A knot that is 2-adjacent must clear a battery of arithmetic conditions
//! on its classical invariants. Each filter here inspects one condition and
//! reports [`FilterOutcome::Pass`], [`FilterOutcome::Fail`] (with a reason),
//! or [`FilterOutcome::Skipped`] (when the condition does not apply to the
//! record, or required optional data is absent — a skip is never evidence
//! in either direction).
//!
//! The battery runs in a fixed order, and a knot's *attribution* is the
//! first filter that fails:
//!
//! 1. [`FilterId::DetForm`] — the determinant must be `4ω² ± 1`;
//! 2. [`FilterId::Signature`] — `|σ| ≤ 2`, and `σ = 0` when the determinant
//!    is `4ω² + 1` (the "positive form", which forces unknotting crossings
//!    of mixed sign);
//! 3. [`FilterId::Rational`] — among rational (two-bridge) knots only `3_1`
//!    and `4_1` qualify;
//! 4. [`FilterId::ConwayA2A4`] — the Conway coefficient `a_2` is `0` or
//!    `±1`, and when `a_2 = 0` the coefficient `|a_4|` is a perfect square;
//! 5. [`FilterId::Mccoy`] — alternating knots with the positive determinant
//!    form must carry both a positive and a negative unknotting crossing;
//! 6. [`FilterId::TaoP0`] — when `a_2 = ±1`, the HOMFLY-PT slice `p_0(ℓ)`
//!    must match one of three torus-type patterns;
//! 7. [`FilterId::TaoP2`] — when `a_2 = 0` and `a_4 ≥ 0`, the derivative of
//!    the HOMFLY-PT slice `p_2` at `ℓ = i` must equal `±2i·√a_4`;
//! 8. [`FilterId::TaoMixed`] — when `a_2 = 0` and `a_4 > 0`, the
//!    2-adjacency must have mixed signs, forcing `σ = 0`;
//! 9. [`FilterId::FloerTorres`] — the Heegaard Floer / root-of-unity
//!    pipeline (driven from [`crate::obstruct`]; the battery here only
//!    reports whether a surgery description is available).

use crate::algebra::{GaussianRational, Laurent};
use crate::knotdata::KnotRecord;
use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, Zero};
use std::fmt;

/// The determinant form of a candidate: `det = 4ω² + 1` or `det = 4ω² - 1`.
///
/// The sign distinguishes two geometric situations: the positive form arises
/// from 2-adjacencies with unknotting crossings of mixed sign, the negative
/// form from crossings of the same sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetForm {
    /// `det = 4ω² + 1` (mixed-sign 2-adjacency; forces signature 0).
    PlusOne {
        /// The parameter `ω ≥ 0`.
        omega: u64,
    },
    /// `det = 4ω² - 1` (same-sign 2-adjacency).
    MinusOne {
        /// The parameter `ω ≥ 1`.
        omega: u64,
    },
}

impl DetForm {
    /// The parameter `ω`.
    pub fn omega(&self) -> u64 {
        match *self {
            DetForm::PlusOne { omega } | DetForm::MinusOne { omega } => omega,
        }
    }
}

impl fmt::Display for DetForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DetForm::PlusOne { omega } => write!(f, "4·{omega}² + 1"),
            DetForm::MinusOne { omega } => write!(f, "4·{omega}² - 1"),
        }
    }
}

/// Decides whether an odd determinant is of the form `4ω² ± 1`.
///
/// Returns `None` when it is neither (which already rules out 2-adjacency).
/// `det = 1` is reported as the positive form with `ω = 0`.
pub fn det_form(det: u64) -> Option<DetForm> {
    debug_assert!(det % 2 == 1, "knot determinants are odd");
    if det % 4 == 1 {
        let w2 = (det - 1) / 4;
        let w = w2.sqrt();
        (w * w == w2).then_some(DetForm::PlusOne { omega: w })
    } else {
        let w2 = (det + 1) / 4;
        let w = w2.sqrt();
        (w * w == w2).then_some(DetForm::MinusOne { omega: w })
    }
}

/// Identifier of one filter in the battery, in battery order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FilterId {
    /// Determinant form `4ω² ± 1`.
    DetForm,
    /// Signature bounds.
    Signature,
    /// Rational-knot exclusion.
    Rational,
    /// Conway coefficients `a_2`, `a_4`.
    ConwayA2A4,
    /// Signed unknotting crossings of alternating positive-form knots.
    Mccoy,
    /// HOMFLY-PT `p_0` pattern (`a_2 = ±1` case).
    TaoP0,
    /// HOMFLY-PT `p_2` derivative (`a_2 = 0` case).
    TaoP2,
    /// Mixed-sign signature constraint (`a_2 = 0`, `a_4 > 0` case).
    TaoMixed,
    /// Heegaard Floer d-invariant / root-of-unity pipeline.
    FloerTorres,
}

impl FilterId {
    /// All filters in battery order.
    pub const ALL: [FilterId; 9] = [
        FilterId::DetForm,
        FilterId::Signature,
        FilterId::Rational,
        FilterId::ConwayA2A4,
        FilterId::Mccoy,
        FilterId::TaoP0,
        FilterId::TaoP2,
        FilterId::TaoMixed,
        FilterId::FloerTorres,
    ];

    /// Stable machine name (used in reports and attribution lists).
    pub fn name(&self) -> &'static str {
        match self {
            FilterId::DetForm => "det_form",
            FilterId::Signature => "signature",
            FilterId::Rational => "rational",
            FilterId::ConwayA2A4 => "conway_a2a4",
            FilterId::Mccoy => "mccoy",
            FilterId::TaoP0 => "tao_p0",
            FilterId::TaoP2 => "tao_p2",
            FilterId::TaoMixed => "tao_mixed",
            FilterId::FloerTorres => "floer_torres",
        }
    }

    /// Parses a stable machine name.
    pub fn from_name(s: &str) -> Option<FilterId> {
        FilterId::ALL.iter().copied().find(|f| f.name() == s)
    }
}

impl fmt::Display for FilterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of running one filter on one record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FilterOutcome {
    /// The record is consistent with 2-adjacency as far as this filter sees.
    Pass,
    /// The record cannot be 2-adjacent; the string explains why.
    Fail(String),
    /// The filter does not apply, or required optional data is missing.
    Skipped(String),
}

impl FilterOutcome {
    /// True for [`FilterOutcome::Fail`].
    pub fn is_fail(&self) -> bool {
        matches!(self, FilterOutcome::Fail(_))
    }
}

impl fmt::Display for FilterOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FilterOutcome::Pass => write!(f, "pass"),
            FilterOutcome::Fail(why) => write!(f, "fail: {why}"),
            FilterOutcome::Skipped(why) => write!(f, "skipped: {why}"),
        }
    }
}

/// Filter 1: the determinant must be `4ω² ± 1`.
pub fn filter_det_form(record: &KnotRecord) -> FilterOutcome {
    match det_form(record.determinant) {
        Some(_) => FilterOutcome::Pass,
        None => FilterOutcome::Fail(format!(
            "determinant {} is not of the form 4ω² ± 1",
            record.determinant
        )),
    }
}

/// Filter 2: `|σ| ≤ 2`, and `σ = 0` for the positive determinant form.
pub fn filter_signature(record: &KnotRecord) -> FilterOutcome {
    let sigma = record.signature;
    if sigma.abs() > 2 {
        return FilterOutcome::Fail(format!("|σ| = {} exceeds 2", sigma.abs()));
    }
    if let Some(DetForm::PlusOne { .. }) = det_form(record.determinant) {
        if sigma != 0 {
            return FilterOutcome::Fail(format!(
                "determinant form 4ω² + 1 forces mixed-sign unknotting crossings and σ = 0, got σ = {sigma}"
            ));
        }
    }
    FilterOutcome::Pass
}

/// Filter 3: the only rational (two-bridge) 2-adjacent knots are `3_1` and
/// `4_1`.
pub fn filter_rational(record: &KnotRecord) -> FilterOutcome {
    if !record.is_rational_knot {
        return FilterOutcome::Skipped("not a rational knot".into());
    }
    if record.name == "3_1" || record.name == "4_1" {
        FilterOutcome::Pass
    } else {
        FilterOutcome::Fail("rational knots other than 3_1 and 4_1 are never 2-adjacent".into())
    }
}

/// Filter 4: `a_2 ∈ {-1, 0, 1}`, and when `a_2 = 0`, `|a_4|` is a perfect
/// square (zero counts).
pub fn filter_conway_a2a4(record: &KnotRecord) -> FilterOutcome {
    let a2 = record.a2();
    let one = BigInt::from(1);
    if a2.abs() > one {
        return FilterOutcome::Fail(format!("Conway coefficient a2 = {a2} is not in {{-1, 0, 1}}"));
    }
    if a2.is_zero() {
        let a4 = record.a4().abs();
        let root = a4.sqrt();
        if &root * &root != a4 {
            return FilterOutcome::Fail(format!(
                "a2 = 0 but |a4| = {a4} is not a perfect square"
            ));
        }
    }
    FilterOutcome::Pass
}

/// Filter 5: an alternating knot with determinant `4ω² + 1` needs both a
/// positive and a negative unknotting crossing, and for alternating knots
/// both are visible in minimal diagrams.
pub fn filter_mccoy(record: &KnotRecord) -> FilterOutcome {
    if !record.alternating {
        return FilterOutcome::Skipped("not alternating".into());
    }
    match det_form(record.determinant) {
        Some(DetForm::PlusOne { .. }) => {}
        _ => return FilterOutcome::Skipped("determinant form is not 4ω² + 1".into()),
    }
    match (record.mccoy_pos, record.mccoy_neg) {
        (Some(pos), Some(neg)) => {
            if pos && neg {
                FilterOutcome::Pass
            } else {
                let missing = if pos { "negative" } else { "positive" };
                FilterOutcome::Fail(format!(
                    "no {missing} unknotting crossing in a minimal diagram; mixed signs are required"
                ))
            }
        }
        _ => FilterOutcome::Skipped("missing data: signed-unknotting annotations".into()),
    }
}

/// The three admissible `p_0(ℓ)` patterns for `a_2 = ±1`.
///
/// These are the `p_0` slices of the two trefoil chiralities and of the
/// figure-eight knot; a 2-adjacent knot with `a_2 = ±1` must reproduce one
/// of them.
pub fn tao_p0_patterns() -> [Laurent; 3] {
    [
        Laurent::from_int_terms(&[(-4, 1), (-2, 2)]),
        Laurent::from_int_terms(&[(4, 1), (2, 2)]),
        Laurent::from_int_terms(&[(-2, 1), (0, 1), (2, 1)]),
    ]
}

/// Filter 6: when `a_2 = ±1`, the slice `p_0(ℓ)` must equal one of the
/// [`tao_p0_patterns`].
pub fn filter_tao_p0(record: &KnotRecord) -> FilterOutcome {
    let a2 = record.a2();
    if a2.abs() != BigInt::from(1) {
        return FilterOutcome::Skipped(format!("applies only when a2 = ±1 (a2 = {a2})"));
    }
    let Some(p0) = record.homfly_p0.as_ref() else {
        return FilterOutcome::Skipped("missing data: homfly_p0".into());
    };
    if tao_p0_patterns().iter().any(|pat| pat == p0) {
        FilterOutcome::Pass
    } else {
        FilterOutcome::Fail(format!(
            "p0 = {p0} matches none of the three admissible patterns"
        ))
    }
}

/// Filter 7: when `a_2 = 0` and `a_4 ≥ 0`, the derivative `p_2'(i)` must be
/// `±2i·√a_4` (evaluated exactly in `Q(i)`).
pub fn filter_tao_p2(record: &KnotRecord) -> FilterOutcome {
    if !record.a2().is_zero() {
        return FilterOutcome::Skipped(format!("applies only when a2 = 0 (a2 = {})", record.a2()));
    }
    let a4 = record.a4();
    if a4.is_negative() {
        return FilterOutcome::Skipped(format!("applies only when a4 ≥ 0 (a4 = {a4})"));
    }
    let Some(p2) = record.homfly_p2.as_ref() else {
        return FilterOutcome::Skipped("missing data: homfly_p2".into());
    };
    let s = a4.sqrt();
    debug_assert!(&s * &s == a4, "a4 must be a perfect square once ConwayA2A4 passed");
    let value = match p2.laurent_derivative().laurent_eval_gaussian(&GaussianRational::i()) {
        Ok(v) => v,
        Err(e) => return FilterOutcome::Fail(format!("cannot evaluate p2'(i): {e}")),
    };
    let target_im = num_rational::BigRational::from(BigInt::from(2) * &s);
    if value.re.is_zero() && (value.im == target_im || value.im == -target_im.clone()) {
        FilterOutcome::Pass
    } else {
        FilterOutcome::Fail(format!(
            "p2'(i) = {} + {}i, expected ±2i·√a4 = ±{}i",
            value.re, value.im, target_im
        ))
    }
}

/// Filter 8: when `a_2 = 0` and `a_4 > 0`, the 2-adjacency must have mixed
/// signs, so the signature must vanish.
pub fn filter_tao_mixed(record: &KnotRecord) -> FilterOutcome {
    if !record.a2().is_zero() {
        return FilterOutcome::Skipped(format!("applies only when a2 = 0 (a2 = {})", record.a2()));
    }
    let a4 = record.a4();
    if !a4.is_positive() {
        return FilterOutcome::Skipped(format!("applies only when a4 > 0 (a4 = {a4})"));
    }
    if record.signature == 0 {
        FilterOutcome::Pass
    } else {
        FilterOutcome::Fail(format!(
            "a2 = 0 and a4 = {a4} > 0 force a mixed-sign 2-adjacency and σ = 0, got σ = {}",
            record.signature
        ))
    }
}

/// Runs filters 1–8 (everything except the Floer pipeline, which needs the
/// lift table) and returns one outcome per filter, in battery order.
pub fn run_battery(record: &KnotRecord) -> Vec<(FilterId, FilterOutcome)> {
    vec![
        (FilterId::DetForm, filter_det_form(record)),
        (FilterId::Signature, filter_signature(record)),
        (FilterId::Rational, filter_rational(record)),
        (FilterId::ConwayA2A4, filter_conway_a2a4(record)),
        (FilterId::Mccoy, filter_mccoy(record)),
        (FilterId::TaoP0, filter_tao_p0(record)),
        (FilterId::TaoP2, filter_tao_p2(record)),
        (FilterId::TaoMixed, filter_tao_mixed(record)),
    ]
}

/// The first failing filter in battery order, if any.
pub fn first_failure(results: &[(FilterId, FilterOutcome)]) -> Option<FilterId> {
    results.iter().find(|(_, o)| o.is_fail()).map(|(id, _)| *id)
}
