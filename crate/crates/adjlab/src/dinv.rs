//! Heegaard Floer correction terms (d-invariants) of lens spaces and of
//! surgeries on knots in the three-sphere.
//!
//! All values are exact rationals. The module provides:
//!
//! * [`lens_d_recursive`] — `d(L(p,q), i)` by the standard recursion on
//!   continued-fraction expansions, with `Spin^c` structures indexed by
//!   `i ∈ {0, …, p-1}`;
//! * [`lens_d2_closed`] — a closed form for `d(L(p,2), i)`, kept as an
//!   independent second route for cross-checking the recursion;
//! * [`v_from_alex`] — the torsion coefficients
//!   `V_j = Σ_{k≥1} k·a_{j+k}` of an L-space knot, computed from the half
//!   form `[a_0, …, a_g]` of its Alexander polynomial;
//! * [`alex_from_v`] — the exact inverse (second differences), used both to
//!   reconstruct polynomials from torsion sequences and to verify
//!   uniqueness searches;
//! * [`niwu_surgery_d`] — the surgery formula
//!   `d(S³_{p/q}(J), i) = d(L(p,q), i) - 2·max(V_{⌊i/q⌋}, V_{⌊(p+q-1-i)/q⌋})`
//!   for positive slopes `p/q`.
//!
//! The `Spin^c` labelling in the surgery formula is the one in which the
//! lens-space term uses the same index `i` as the correction term on the
//! left; no reduction is applied to the partner index `⌊(p+q-1-i)/q⌋`.

use crate::algebra::format_rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Errors from d-invariant computations.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DinvError {
    /// `p` and `q` must be coprime with `0 < q < p` (or `L(1,0) = S³`).
    #[error("invalid lens-space parameters p = {p}, q = {q}")]
    BadLensParams { p: u64, q: u64 },
    /// The `Spin^c` index must lie in `{0, …, p-1}`.
    #[error("Spin^c index {i} out of range for p = {p}")]
    IndexOutOfRange { p: u64, i: u64 },
    /// A torsion sequence must be non-negative, non-increasing with steps of
    /// at most one, and end at zero.
    #[error("invalid torsion sequence: {0}")]
    BadTorsionSequence(String),
    /// The d-invariant vector admits no consistent torsion sequence under
    /// the given slope — itself an obstruction signal.
    #[error("no {p}/{q}-surgery is consistent with the given d-invariants: {detail}")]
    InconsistentInversion { p: u64, q: u64, detail: String },
    /// The d-invariant vector has the wrong length.
    #[error("expected {expected} d-invariant entries, got {got}")]
    WrongLength { expected: usize, got: usize },
}

fn check_lens(p: u64, q: u64) -> Result<(), DinvError> {
    let ok = (p == 1 && q == 0) || (p > q && q >= 1 && p.gcd(&q) == 1);
    if ok {
        Ok(())
    } else {
        Err(DinvError::BadLensParams { p, q })
    }
}

/// `d(-L(p,q), i)`: correction term of the orientation-reversed lens space.
///
/// Defined by `d(-L(1,0), 0) = 0` and the recursion
/// `d(-L(p,q), i) = (pq - (2i+1-p-q)²)/(4pq) - d(-L(q, p mod q), i mod q)`.
pub fn lens_d_neg(p: u64, q: u64, i: u64) -> Result<BigRational, DinvError> {
    check_lens(p, q)?;
    if i >= p {
        return Err(DinvError::IndexOutOfRange { p, i });
    }
    Ok(lens_d_neg_unchecked(p, q, i))
}

fn lens_d_neg_unchecked(p: u64, q: u64, i: u64) -> BigRational {
    if p == 1 {
        // L(1,q) = S³ for any q; the recursion bottoms out here.
        return BigRational::zero();
    }
    let pq = BigInt::from(p) * BigInt::from(q);
    let s = BigInt::from(2) * BigInt::from(i) + 1 - BigInt::from(p) - BigInt::from(q);
    let num = &pq - &s * &s;
    let term = BigRational::new(num, BigInt::from(4u8) * pq);
    term - lens_d_neg_unchecked(q, p % q, i % q)
}

/// `d(L(p,q), i)`: the correction term of the lens space `L(p,q)`, computed
/// via the recursion for `-L(p,q)` and `d(L) = -d(-L)`.
pub fn lens_d_recursive(p: u64, q: u64, i: u64) -> Result<BigRational, DinvError> {
    Ok(-lens_d_neg(p, q, i)?)
}

/// Closed form for `d(L(p,2), i)`, odd `p ≥ 3`:
/// `((2i - p - 1)² - 2p)/(8p) + (-1/4 if i is even, +1/4 if i is odd)`.
///
/// This is an independent derivation (unrolling the recursion through the
/// single step `L(2,1)`) and is used to cross-check [`lens_d_recursive`].
pub fn lens_d2_closed(p: u64, i: u64) -> Result<BigRational, DinvError> {
    if p < 3 || p % 2 == 0 {
        return Err(DinvError::BadLensParams { p, q: 2 });
    }
    if i >= p {
        return Err(DinvError::IndexOutOfRange { p, i });
    }
    let s = BigInt::from(2) * BigInt::from(i) - BigInt::from(p) - 1;
    let main = BigRational::new(&s * &s - BigInt::from(2 * p), BigInt::from(8 * p));
    let corner = BigRational::new(BigInt::one(), BigInt::from(4u8));
    Ok(if i % 2 == 0 { main - corner } else { main + corner })
}

/// Torsion coefficients `V_j = Σ_{k≥1} k·a_{j+k}` for `j = 0, …, g` from the
/// half form `[a_0, …, a_g]` of an Alexander polynomial.
///
/// The returned vector has the same length as the input; its last entry is
/// always zero. For an L-space knot this is the non-increasing sequence of
/// correction-term coefficients; use [`is_valid_v_sequence`] to check that
/// property when it matters.
pub fn v_from_alex(half: &[BigInt]) -> Vec<BigInt> {
    let g = half.len();
    (0..g)
        .map(|j| {
            let mut acc = BigInt::zero();
            for (idx, a) in half.iter().enumerate().skip(j + 1) {
                acc += BigInt::from((idx - j) as u64) * a;
            }
            acc
        })
        .collect()
}

/// Reconstructs the half form `[a_0, …, a_g]` from a torsion sequence via
/// second differences: `a_k = V_{k-1} - 2V_k + V_{k+1}` for `k ≥ 1` and
/// `a_0 = 1 - 2·Σ_{k≥1} a_k` (normalizing `Δ(1) = 1`). Trailing zero
/// coefficients are stripped.
pub fn alex_from_v(v: &[BigInt]) -> Vec<BigInt> {
    let n = v.len();
    let at = |j: i64| -> BigInt {
        if j >= 0 && (j as usize) < n {
            v[j as usize].clone()
        } else {
            BigInt::zero()
        }
    };
    let mut half = vec![BigInt::zero(); n + 1];
    for k in 1..=n as i64 {
        half[k as usize] = at(k - 1) - BigInt::from(2) * at(k) + at(k + 1);
    }
    let tail: BigInt = half[1..].iter().sum();
    half[0] = BigInt::one() - BigInt::from(2) * tail;
    while half.len() > 1 && half.last().map_or(false, Zero::is_zero) {
        half.pop();
    }
    half
}

/// Checks that a sequence is a plausible torsion sequence: non-negative,
/// non-increasing with unit steps (`V_i ≥ V_{i+1} ≥ V_i - 1`), and ending
/// at zero.
pub fn is_valid_v_sequence(v: &[BigInt]) -> bool {
    if v.is_empty() {
        return false;
    }
    if v.last().map_or(true, |x| !x.is_zero()) {
        return false;
    }
    if v.iter().any(|x| x.is_negative()) {
        return false;
    }
    v.windows(2).all(|w| {
        let step = &w[0] - &w[1];
        step.is_zero() || step.is_one()
    })
}

/// The torsion coefficient `V_j`, reading zero beyond the end of the
/// sequence.
fn v_at(v: &[BigInt], j: u64) -> BigInt {
    v.get(j as usize).cloned().unwrap_or_else(BigInt::zero)
}

/// The surgery formula for positive slopes: the correction terms of
/// `S³_{p/q}(J)` in the standard `Spin^c` labelling `i ∈ {0, …, p-1}`,
///
/// `d(S³_{p/q}(J), i) = d(L(p,q), i) - 2·max(V_{⌊i/q⌋}, V_{⌊(p+q-1-i)/q⌋})`.
///
/// `v` is the torsion sequence of `J`; indices past its end read zero.
pub fn niwu_surgery_d(p: u64, q: u64, v: &[BigInt]) -> Result<Vec<BigRational>, DinvError> {
    if !is_valid_v_sequence(v) {
        return Err(DinvError::BadTorsionSequence(format!("{v:?}")));
    }
    (0..p).map(|i| niwu_surgery_d_at(p, q, v, i)).collect()
}

/// One entry of [`niwu_surgery_d`].
pub fn niwu_surgery_d_at(p: u64, q: u64, v: &[BigInt], i: u64) -> Result<BigRational, DinvError> {
    let lens = lens_d_recursive(p, q, i)?;
    let a = v_at(v, i / q);
    let b = v_at(v, (p + q - 1 - i) / q);
    let vmax = a.max(b);
    Ok(lens - BigRational::from(BigInt::from(2) * vmax))
}

/// Trims a torsion sequence to canonical form: a single terminal zero.
pub fn normalize_v(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.len() >= 2 && v[v.len() - 1].is_zero() && v[v.len() - 2].is_zero() {
        v.pop();
    }
    v
}

/// Inverts the surgery formula for an *index-aligned* d-invariant vector:
/// given `sigma_d[i] = d(S³_{p/q}(J), i)` in the same `Spin^c` labelling as
/// [`niwu_surgery_d`], reads off
///
/// `V_m = (d(L(p,q), i) - sigma_d[i]) / 2`, `m = min(⌊i/q⌋, ⌊(p+q-1-i)/q⌋)`
///
/// (the `min` picks the index at which the `max` in the surgery formula
/// resolves for a non-increasing sequence). Every `Spin^c` index is a
/// witness for its slot, and all witnesses must agree.
///
/// Fails with [`DinvError::InconsistentInversion`] if any implied value is
/// negative, non-integral, disagrees across witnesses, or if the sequence
/// violates the unit-step chain or does not end at zero. An inconsistency
/// means no `p/q`-surgery on any L-space knot has these d-invariants — an
/// obstruction signal in its own right.
pub fn invert_niwu(sigma_d: &[BigRational], p: u64, q: u64) -> Result<Vec<BigInt>, DinvError> {
    check_lens(p, q)?;
    if sigma_d.len() != p as usize {
        return Err(DinvError::WrongLength { expected: p as usize, got: sigma_d.len() });
    }
    let fail = |detail: String| DinvError::InconsistentInversion { p, q, detail };
    let mut slots: Vec<Option<(u64, BigInt)>> = Vec::new();
    for i in 0..p {
        let lens = lens_d_recursive(p, q, i)?;
        let twice_v = lens - &sigma_d[i as usize];
        let m = (i / q).min((p + q - 1 - i) / q) as usize;
        if !twice_v.is_integer() {
            return Err(fail(format!(
                "Spin^c index {i} implies V_{m} = ({})/2, which is not an integer",
                format_rational(&twice_v)
            )));
        }
        let twice_v = twice_v.to_integer();
        if twice_v.is_odd() {
            return Err(fail(format!(
                "Spin^c index {i} implies V_{m} = {twice_v}/2, which is not an integer"
            )));
        }
        if twice_v.is_negative() {
            return Err(fail(format!(
                "Spin^c index {i} implies the negative value V_{m} = {}",
                twice_v / 2
            )));
        }
        let v = twice_v / BigInt::from(2);
        if slots.len() <= m {
            slots.resize(m + 1, None);
        }
        match &slots[m] {
            None => slots[m] = Some((i, v)),
            Some((witness, prev)) if *prev != v => {
                return Err(fail(format!(
                    "Spin^c index {i} implies V_{m} = {v}, but index {witness} implied {prev}"
                )));
            }
            Some(_) => {}
        }
    }
    let v: Vec<BigInt> = slots
        .into_iter()
        .enumerate()
        .map(|(m, s)| s.map(|(_, x)| x).ok_or_else(|| fail(format!("slot {m} has no witness"))))
        .collect::<Result<_, _>>()?;
    if !is_valid_v_sequence(&v) {
        return Err(fail(format!(
            "implied sequence {v:?} violates the unit-step chain or does not end at zero"
        )));
    }
    Ok(normalize_v(v))
}

/// Formats a d-invariant vector as the `"num/den"` strings used in reports.
pub fn format_d_vector(d: &[BigRational]) -> Vec<String> {
    d.iter().map(format_rational).collect()
}
