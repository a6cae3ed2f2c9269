//! Exhaustive search for torsion sequences consistent with a d-invariant
//! multiset.
//!
//! The inversion in [`crate::dinv::invert_niwu`] assumes the `Spin^c`
//! labelling of the target vector is already aligned with the lens-space
//! labelling. When the target arises from an unrelated surgery description
//! (or from a mere multiset of correction terms), no alignment is known:
//! the d-invariants of `L(d,2)` may collide modulo 2, and any
//! class-preserving reassignment could be the true one. This module
//! enumerates **all** torsion sequences `V` such that some assignment of
//! the target values to `Spin^c` indices — preserving the mod-2 congruence
//! classes forced by `d(t_i) = d(L(d,2), i) - 2V_{⌊i/2⌋}` and commuting
//! with conjugation — satisfies the surgery formula together with the
//! structural constraints on `V` (non-negativity, unit-step monotonicity,
//! terminal zero).
//!
//! The search works on the conjugation fundamental domain: for odd `d`,
//! every correction-term value of a genuine surgery appears twice except a
//! single self-conjugate one, so the full multiset halves onto
//! representative indices `1 ≤ i ≤ (d+1)/2`, with the self-conjugate value
//! pinned to the last index. A depth-first walk over the slots
//! `V_k ↔ {i = 2k, 2k+1}` with the unit-step bound prunes the space while
//! remaining exhaustive; an empty result is a *no-consistent-surgery*
//! signal (reported in the [`VSolution`], not thrown).

use crate::dinv::{lens_d_recursive, normalize_v};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Errors from the admissibility search (structural misuse only; an empty
/// solution set is a result, not an error).
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum VsolverError {
    /// Only half-integer slopes (`q = 2`) are supported.
    #[error("unsupported surgery denominator q = {0}; the search is defined for q = 2")]
    UnsupportedDenominator(u64),
    /// The lens vector must be the canonical `d(L(d,2), ·)` vector.
    #[error("lens_d is not the canonical d(L({d},2), ·) vector: {detail}")]
    BadLensVector { d: u64, detail: String },
    /// The two vectors must have the same length.
    #[error("lens_d has {lens} entries but sigma_d has {sigma}")]
    LengthMismatch { lens: usize, sigma: usize },
}

/// The result of an admissibility search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VSolution {
    /// All admissible torsion sequences, each trimmed to a single terminal
    /// zero, in lexicographically sorted order (deterministic).
    pub sequences: Vec<Vec<BigInt>>,
    /// True exactly when there is a single admissible sequence.
    pub unique: bool,
}

impl VSolution {
    /// True when no torsion sequence is consistent — the
    /// no-consistent-surgery signal.
    pub fn is_inconsistent(&self) -> bool {
        self.sequences.is_empty()
    }
}

/// Enumerates every torsion sequence `V` consistent with the multiset
/// `sigma_d` of correction terms under some mod-2-class-preserving,
/// conjugation-equivariant assignment to the `Spin^c` indices of `L(d,2)`.
///
/// `lens_d` must be the canonical vector `d(L(d,2), i)` for
/// `i = 0, …, d-1` (validated); `sigma_d` is treated as a multiset — its
/// order never influences the result. `q` must be 2.
pub fn admissible_v_sequences(
    lens_d: &[BigRational],
    sigma_d: &[BigRational],
    q: u64,
) -> Result<VSolution, VsolverError> {
    if q != 2 {
        return Err(VsolverError::UnsupportedDenominator(q));
    }
    let d = lens_d.len() as u64;
    if d < 3 || d % 2 == 0 {
        return Err(VsolverError::BadLensVector {
            d,
            detail: format!("length {d} is not an odd number ≥ 3"),
        });
    }
    if sigma_d.len() != lens_d.len() {
        return Err(VsolverError::LengthMismatch { lens: lens_d.len(), sigma: sigma_d.len() });
    }
    for (i, given) in lens_d.iter().enumerate() {
        let expected = lens_d_recursive(d, 2, i as u64).expect("parameters checked above");
        if *given != expected {
            return Err(VsolverError::BadLensVector {
                d,
                detail: format!(
                    "entry {i} is {}, expected d(L({d},2),{i}) = {}",
                    given, expected
                ),
            });
        }
    }

    // Conjugation structure of the target multiset: every value must pair
    // off, except exactly one self-conjugate value. Anything else cannot
    // come from a surgery, so the solution set is empty.
    let mut counts: BTreeMap<&BigRational, usize> = BTreeMap::new();
    for v in sigma_d {
        *counts.entry(v).or_insert(0) += 1;
    }
    let odd: Vec<&BigRational> = counts
        .iter()
        .filter(|(_, &m)| m % 2 == 1)
        .map(|(&v, _)| v)
        .collect();
    if odd.len() != 1 {
        return Ok(VSolution { sequences: Vec::new(), unique: false });
    }
    let self_conjugate = odd[0].clone();
    // Halve multiplicities onto the fundamental domain (the odd one rounds
    // up: its extra copy is the self-conjugate representative).
    let mut pool: BTreeMap<BigRational, usize> = BTreeMap::new();
    for (v, m) in counts {
        pool.insert(v.clone(), (m + 1) / 2);
    }

    let n = ((d + 1) / 2) as usize; // fundamental indices 1..=n
    let lens_f: Vec<BigRational> = (1..=n).map(|i| lens_d[i].clone()).collect();

    // Slot k covers the fundamental indices {2k, 2k+1} ∩ [1, n]; both share
    // the torsion coefficient V_k.
    let slots: Vec<Vec<usize>> = (0..=n / 2)
        .map(|k| [2 * k, 2 * k + 1].into_iter().filter(|&i| (1..=n).contains(&i)).collect())
        .filter(|idxs: &Vec<usize>| !idxs.is_empty())
        .collect();

    let mut search = Search {
        lens_f,
        n,
        self_conjugate,
        slots,
        solutions: BTreeSet::new(),
    };
    let mut acc = Vec::new();
    search.dfs(0, &mut pool, None, &mut acc);

    let sequences: Vec<Vec<BigInt>> = search.solutions.into_iter().collect();
    let unique = sequences.len() == 1;
    Ok(VSolution { sequences, unique })
}

struct Search {
    lens_f: Vec<BigRational>,
    n: usize,
    self_conjugate: BigRational,
    slots: Vec<Vec<usize>>,
    solutions: BTreeSet<Vec<BigInt>>,
}

impl Search {
    fn dfs(
        &mut self,
        si: usize,
        pool: &mut BTreeMap<BigRational, usize>,
        prev: Option<&BigInt>,
        acc: &mut Vec<BigInt>,
    ) {
        if si == self.slots.len() {
            if acc.last().map_or(false, |v| v.is_zero()) {
                self.solutions.insert(normalize_v(acc.clone()));
            }
            return;
        }
        let idxs = self.slots[si].clone();
        // Candidate V values for this slot, derived from any pool value
        // compatible with the slot's first index; deduplicated and sorted
        // for deterministic traversal.
        let mut candidates: BTreeSet<(BigInt, Vec<(BigRational, usize)>)> = BTreeSet::new();
        let first_lens = self.lens_f[idxs[0] - 1].clone();
        for (value, &count) in pool.iter() {
            if count == 0 {
                continue;
            }
            let twice_v = &first_lens - value;
            if twice_v.is_negative() || !twice_v.is_integer() {
                continue;
            }
            let twice_v = twice_v.to_integer();
            if twice_v.is_odd() {
                continue;
            }
            let vk = twice_v / BigInt::from(2);
            if let Some(prev) = prev {
                // Unit-step chain: prev - 1 ≤ vk ≤ prev.
                if &vk > prev || vk < prev - BigInt::from(1) {
                    continue;
                }
            }
            // Demands this slot places on the pool: one value per index.
            let mut need: BTreeMap<BigRational, usize> = BTreeMap::new();
            let mut feasible = true;
            for &idx in &idxs {
                let want = &self.lens_f[idx - 1]
                    - BigRational::from(BigInt::from(2) * &vk);
                if idx == self.n && want != self.self_conjugate {
                    feasible = false;
                    break;
                }
                *need.entry(want).or_insert(0) += 1;
            }
            if !feasible {
                continue;
            }
            if need.iter().any(|(w, c)| pool.get(w).copied().unwrap_or(0) < *c) {
                continue;
            }
            candidates.insert((vk, need.into_iter().collect()));
        }
        for (vk, need) in candidates {
            for (w, c) in &need {
                *pool.get_mut(w).expect("feasibility checked") -= c;
            }
            acc.push(vk.clone());
            self.dfs(si + 1, pool, Some(&vk), acc);
            acc.pop();
            for (w, c) in &need {
                *pool.get_mut(w).expect("entry exists") += c;
            }
        }
    }
}
