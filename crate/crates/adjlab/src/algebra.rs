//! Exact Laurent-polynomial arithmetic over the integers.
//!
//! Alexander polynomials of knots are symmetric Laurent polynomials in a
//! single variable `t`, and every computation in this crate that touches them
//! must stay exact until the final, explicitly numerical step (evaluating at
//! a point on the unit circle). This module provides:
//!
//! * [`Laurent`] — a sparse Laurent polynomial with [`BigInt`] coefficients,
//!   with ring operations, exact evaluation at rational and Gaussian-rational
//!   points, and floating-point evaluation at roots of unity;
//! * [`symmetrize`] / [`Laurent::from_symmetric`] — conversion between a full
//!   symmetric Laurent polynomial and its compact half-coefficient form
//!   `[a_0, a_1, …, a_g]` (meaning `a_0 + Σ_{k≥1} a_k (t^k + t^{-k})`);
//! * [`alexander_to_conway`] / [`conway_to_alexander`] — the change of
//!   variable `z^2 = t - 2 + t^{-1}` relating the Alexander polynomial to the
//!   Conway polynomial (whose odd coefficients vanish for knots, so only the
//!   even coefficients `[c_0, c_2, c_4, …]` are stored);
//! * [`GaussianRational`] — exact arithmetic in `Q(i)`, used to evaluate
//!   polynomial identities at `ℓ = i` without floating point.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Errors produced by exact algebra routines.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum AlgebraError {
    /// A polynomial expected to satisfy `f(t) = f(t^{-1})` failed the check.
    #[error("polynomial is not symmetric: coefficient of t^{exp} is {plus}, of t^-{exp} is {minus}")]
    NotSymmetric { exp: i64, plus: BigInt, minus: BigInt },
    /// Division during a change of variable left a nonzero remainder.
    #[error("change of variable left a nonzero remainder: {0}")]
    NonzeroRemainder(String),
    /// Evaluation at zero (or at a Gaussian zero) with negative exponents.
    #[error("cannot evaluate negative exponents at zero")]
    EvalAtZero,
}

/// A sparse Laurent polynomial `Σ c_e t^e` with exact integer coefficients.
///
/// The internal map never stores zero coefficients, so equality of maps is
/// equality of polynomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Laurent {
    coeffs: BTreeMap<i64, BigInt>,
}

impl Laurent {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Laurent { coeffs: BTreeMap::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Laurent::monomial(0, BigInt::one())
    }

    /// The monomial `c · t^e` (normalizes away `c = 0`).
    pub fn monomial(exp: i64, coeff: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        Laurent { coeffs }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// duplicates and dropping zeros.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            let entry = coeffs.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(&e);
            }
        }
        Laurent { coeffs }
    }

    /// Convenience constructor from small integer terms.
    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        Laurent::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    /// Builds the symmetric polynomial `a_0 + Σ_{k≥1} a_k (t^k + t^{-k})`
    /// from its half-coefficient form `[a_0, a_1, …, a_g]`.
    pub fn from_symmetric(half: &[BigInt]) -> Self {
        let mut terms = Vec::new();
        for (k, a) in half.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if k == 0 {
                terms.push((0i64, a.clone()));
            } else {
                terms.push((k as i64, a.clone()));
                terms.push((-(k as i64), a.clone()));
            }
        }
        Laurent::from_terms(terms)
    }

    /// Convenience variant of [`Laurent::from_symmetric`] for small integers.
    pub fn from_symmetric_ints(half: &[i64]) -> Self {
        let big: Vec<BigInt> = half.iter().map(|&a| BigInt::from(a)).collect();
        Laurent::from_symmetric(&big)
    }

    /// True if this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The coefficient of `t^e` (zero if absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterates over `(exponent, coefficient)` pairs in increasing exponent
    /// order.
    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.coeffs.iter()
    }

    /// The largest exponent with nonzero coefficient, if any.
    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// The smallest exponent with nonzero coefficient, if any.
    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Multiplies by `t^k` (shifts all exponents).
    pub fn shift(&self, k: i64) -> Self {
        Laurent {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitutes `t ↦ t^{-1}`.
    pub fn invert_variable(&self) -> Self {
        Laurent {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Exact evaluation at a nonzero rational point.
    ///
    /// Negative exponents are evaluated as exact rational powers, so the
    /// result is always exact. Evaluating a polynomial with negative
    /// exponents at zero is an error.
    pub fn laurent_eval_rational(&self, x: &BigRational) -> Result<BigRational, AlgebraError> {
        if x.is_zero() {
            if self.min_exp().map_or(false, |e| e < 0) {
                return Err(AlgebraError::EvalAtZero);
            }
            return Ok(BigRational::from(self.coeff(0)));
        }
        let mut acc = BigRational::zero();
        for (&e, c) in &self.coeffs {
            acc += BigRational::from(c.clone()) * rational_pow(x, e);
        }
        Ok(acc)
    }

    /// Exact evaluation at an integer point (see
    /// [`Laurent::laurent_eval_rational`]).
    pub fn laurent_eval_int(&self, x: i64) -> Result<BigRational, AlgebraError> {
        self.laurent_eval_rational(&BigRational::from(BigInt::from(x)))
    }

    /// Numerical evaluation at the root of unity `e^{2πik/n}`.
    ///
    /// The angle for each term is reduced modulo `n` exactly (in integers)
    /// before conversion to floating point, so precision does not degrade
    /// with large exponents. This is the single intentionally inexact
    /// operation on [`Laurent`]; everything feeding it stays exact.
    pub fn laurent_eval_root_of_unity(&self, n: u64, k: i64) -> Complex64 {
        debug_assert!(n > 0);
        let n_i = n as i128;
        let mut acc = Complex64::new(0.0, 0.0);
        for (&e, c) in &self.coeffs {
            let m = ((k as i128 * e as i128) % n_i + n_i) % n_i;
            let theta = 2.0 * std::f64::consts::PI * (m as f64) / (n as f64);
            acc += Complex64::new(theta.cos(), theta.sin()) * bigint_to_f64(c);
        }
        acc
    }

    /// The formal derivative `Σ e·c_e t^{e-1}`.
    pub fn laurent_derivative(&self) -> Self {
        Laurent::from_terms(
            self.coeffs
                .iter()
                .filter(|(&e, _)| e != 0)
                .map(|(&e, c)| (e - 1, c * BigInt::from(e))),
        )
    }

    /// Exact evaluation at a nonzero Gaussian-rational point.
    pub fn laurent_eval_gaussian(
        &self,
        z: &GaussianRational,
    ) -> Result<GaussianRational, AlgebraError> {
        if z.is_zero() {
            if self.min_exp().map_or(false, |e| e < 0) {
                return Err(AlgebraError::EvalAtZero);
            }
            return Ok(GaussianRational::from_bigint(self.coeff(0)));
        }
        let mut acc = GaussianRational::zero();
        for (&e, c) in &self.coeffs {
            acc = acc.add(&z.pow(e).scale_bigint(c));
        }
        Ok(acc)
    }

    /// Checks the symmetry `f(t) = f(t^{-1})` and returns the
    /// half-coefficient form `[a_0, a_1, …, a_g]`.
    pub fn symmetrize(&self) -> Result<Vec<BigInt>, AlgebraError> {
        let g = self.max_exp().map_or(0, |e| e.max(-self.min_exp().unwrap_or(0)));
        let mut half = Vec::with_capacity(g as usize + 1);
        for k in 0..=g {
            let plus = self.coeff(k);
            let minus = self.coeff(-k);
            if k > 0 && plus != minus {
                return Err(AlgebraError::NotSymmetric { exp: k, plus, minus });
            }
            half.push(plus);
        }
        Ok(half)
    }

    // Shared body for `Debug` and `Display`: terms in increasing exponent
    // order, e.g. `t^-2 - 3 + t^2`.
    fn fmt_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in &self.coeffs {
            let (neg, mag) = if c.is_negative() { (true, -c.clone()) } else { (false, c.clone()) };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{mag}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_terms(f)
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_terms(f)
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        Laurent::from_terms(
            self.coeffs
                .iter()
                .chain(rhs.coeffs.iter())
                .map(|(&e, c)| (e, c.clone())),
        )
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        self + &(-rhs)
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut terms = Vec::with_capacity(self.coeffs.len() * rhs.coeffs.len());
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                terms.push((e1 + e2, c1 * c2));
            }
        }
        Laurent::from_terms(terms)
    }
}

/// Exact `x^e` for rational `x ≠ 0` and any integer `e`.
fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    debug_assert!(e.unsigned_abs() <= i32::MAX as u64, "exponent out of range");
    let p = x.pow(e.unsigned_abs() as i32);
    if e > 0 {
        p
    } else {
        p.recip()
    }
}

/// Lossy conversion of a `BigInt` coefficient to `f64` for the final
/// numerical evaluation step. Alexander coefficients in this crate are tiny,
/// but the conversion stays correct for large values too.
fn bigint_to_f64(c: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(f64::INFINITY)
}

/// An exact element of `Q(i)`: `re + im·i` with rational parts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaussianRational {
    /// Real part.
    pub re: BigRational,
    /// Imaginary part.
    pub im: BigRational,
}

impl GaussianRational {
    /// Zero.
    pub fn zero() -> Self {
        GaussianRational { re: BigRational::zero(), im: BigRational::zero() }
    }

    /// One.
    pub fn one() -> Self {
        GaussianRational { re: BigRational::one(), im: BigRational::zero() }
    }

    /// The imaginary unit `i`.
    pub fn i() -> Self {
        GaussianRational { re: BigRational::zero(), im: BigRational::one() }
    }

    /// Embeds an integer.
    pub fn from_bigint(n: BigInt) -> Self {
        GaussianRational { re: BigRational::from(n), im: BigRational::zero() }
    }

    /// Builds from integer real and imaginary parts.
    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational {
            re: BigRational::from(BigInt::from(re)),
            im: BigRational::from(BigInt::from(im)),
        }
    }

    /// True if both parts are zero.
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Sum.
    pub fn add(&self, rhs: &Self) -> Self {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }

    /// Product.
    pub fn mul(&self, rhs: &Self) -> Self {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }

    /// Multiplies by an integer scalar.
    pub fn scale_bigint(&self, c: &BigInt) -> Self {
        let c = BigRational::from(c.clone());
        GaussianRational { re: &self.re * &c, im: &self.im * &c }
    }

    /// Multiplicative inverse (`self` must be nonzero).
    pub fn recip(&self) -> Self {
        let norm = &self.re * &self.re + &self.im * &self.im;
        assert!(!norm.is_zero(), "division by zero in Q(i)");
        GaussianRational { re: &self.re / &norm, im: -(&self.im / &norm) }
    }

    /// Exact integer power (negative exponents via [`GaussianRational::recip`]).
    pub fn pow(&self, e: i64) -> Self {
        if e == 0 {
            return GaussianRational::one();
        }
        let mut base = if e > 0 { self.clone() } else { self.recip() };
        let mut acc = GaussianRational::one();
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// Converts a symmetric Alexander polynomial (half form `[a_0, …, a_g]`,
/// normalized so `Δ(1) = 1`) to Conway coefficients `[c_0, c_2, …, c_{2g}]`
/// under `z^2 = t - 2 + t^{-1}`.
///
/// The conversion peels leading coefficients: `(t - 2 + t^{-1})^k` has
/// leading term `t^k`, so `c_{2g} = a_g`, and subtracting
/// `c_{2g}(t - 2 + t^{-1})^g` reduces the degree. Fails if the input is not
/// in the image of the substitution or if the constant coefficient does not
/// finish at `∇(0) = 1` (either failure means the data is not the Alexander
/// polynomial of a knot).
pub fn alexander_to_conway(half: &[BigInt]) -> Result<Vec<BigInt>, AlgebraError> {
    let mut rem = Laurent::from_symmetric(half);
    let g = half.len().saturating_sub(1);
    let zsq = Laurent::from_int_terms(&[(1, 1), (0, -2), (-1, 1)]);
    let mut conway = vec![BigInt::zero(); g + 1];
    let mut pows = Vec::with_capacity(g + 1);
    let mut pow = Laurent::one();
    pows.push(pow.clone());
    for _ in 0..g {
        pow = &pow * &zsq;
        pows.push(pow.clone());
    }
    for k in (0..=g).rev() {
        let lead = rem.coeff(k as i64);
        if !lead.is_zero() {
            rem = &rem - &(&Laurent::monomial(0, lead.clone()) * &pows[k]);
            conway[k] = lead;
        }
    }
    if !rem.is_zero() {
        return Err(AlgebraError::NonzeroRemainder(format!("{rem}")));
    }
    if !conway[0].is_one() {
        return Err(AlgebraError::NonzeroRemainder(format!(
            "constant Conway coefficient is {}, expected 1",
            conway[0]
        )));
    }
    Ok(conway)
}

/// Converts Conway coefficients `[c_0, c_2, …]` back to the symmetric
/// Alexander polynomial via `z^2 = t - 2 + t^{-1}` (exact inverse of
/// [`alexander_to_conway`]).
pub fn conway_to_alexander(conway: &[BigInt]) -> Laurent {
    let zsq = Laurent::from_int_terms(&[(1, 1), (0, -2), (-1, 1)]);
    let mut acc = Laurent::zero();
    let mut pow = Laurent::one();
    for (k, c) in conway.iter().enumerate() {
        if k > 0 {
            pow = &pow * &zsq;
        }
        if !c.is_zero() {
            acc = &acc + &(&Laurent::monomial(0, c.clone()) * &pow);
        }
    }
    acc
}

/// Checks the symmetry `f(t) = f(t^{-1})` and returns the half form.
///
/// Free-function alias of [`Laurent::symmetrize`] for call sites that read
/// better with the polynomial as an argument.
pub fn symmetrize(poly: &Laurent) -> Result<Vec<BigInt>, AlgebraError> {
    poly.symmetrize()
}

/// Parses a rational from `"num/den"` or plain `"num"` form.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from(n))
    }
}

/// Formats a rational as `"num/den"` (or `"num"` when the denominator is 1),
/// matching the on-disk representation used by the d-invariant reports.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn ring_ops_agree_with_hand_expansion() {
        // (t - 1 + t^-1)(t + 1 + t^-1) = t^2 + 1 + t^-2.
        let a = Laurent::from_int_terms(&[(1, 1), (0, -1), (-1, 1)]);
        let b = Laurent::from_int_terms(&[(1, 1), (0, 1), (-1, 1)]);
        let prod = &a * &b;
        let expected = Laurent::from_int_terms(&[(2, 1), (0, 1), (-2, 1)]);
        assert_eq!(prod, expected);
        assert_eq!(&(&prod - &a) + &a, prod);
        assert_eq!(a.shift(2).min_exp(), Some(1));
        assert_eq!(a.invert_variable(), a);
    }

    #[test]
    fn eval_int_handles_negative_exponents_exactly() {
        // f = t^-2 + 3t at t = 2: 1/4 + 6 = 25/4.
        let f = Laurent::from_int_terms(&[(-2, 1), (1, 3)]);
        let v = f.laurent_eval_int(2).unwrap();
        assert_eq!(v, BigRational::new(big(25), big(4)));
        // At t = -1 the trefoil polynomial gives ±determinant.
        let trefoil = Laurent::from_symmetric_ints(&[-1, 1]);
        assert_eq!(trefoil.laurent_eval_int(-1).unwrap(), BigRational::from(big(-3)));
        assert_eq!(trefoil.laurent_eval_int(1).unwrap(), BigRational::from(big(1)));
    }

    #[test]
    fn eval_at_zero_is_rejected_when_negative_exponents_exist() {
        let f = Laurent::from_int_terms(&[(-1, 1)]);
        assert_eq!(
            f.laurent_eval_rational(&BigRational::zero()),
            Err(AlgebraError::EvalAtZero)
        );
        let g = Laurent::from_int_terms(&[(0, 7), (2, 1)]);
        assert_eq!(
            g.laurent_eval_rational(&BigRational::zero()).unwrap(),
            BigRational::from(big(7))
        );
    }

    #[test]
    fn root_of_unity_eval_matches_closed_forms() {
        // t + t^-1 at t = e^{2πi/8} is 2cos(π/4) = √2.
        let f = Laurent::from_int_terms(&[(1, 1), (-1, 1)]);
        let v = f.laurent_eval_root_of_unity(8, 1);
        assert!((v.re - 2.0_f64.sqrt()).abs() < 1e-12, "{v}");
        assert!(v.im.abs() < 1e-12);
        // Symmetric polynomials are real on the whole unit circle.
        let g = Laurent::from_symmetric_ints(&[3, -2, 1, 5]);
        for k in 0..14 {
            let v = g.laurent_eval_root_of_unity(14, k);
            assert!(v.im.abs() < 1e-9, "k={k}: {v}");
        }
        // Exact angle reduction: huge exponents keep full precision.
        let h = Laurent::from_int_terms(&[(1_000_000_007, 1)]);
        let v = h.laurent_eval_root_of_unity(12, 5);
        let m = (5i128 * 1_000_000_007i128).rem_euclid(12) as f64;
        let theta = 2.0 * std::f64::consts::PI * m / 12.0;
        assert!((v.re - theta.cos()).abs() < 1e-12);
        assert!((v.im - theta.sin()).abs() < 1e-12);
    }

    #[test]
    fn derivative_is_term_wise() {
        // d/dt (t^3 - 4t^-2 + 9) = 3t^2 + 8t^-3.
        let f = Laurent::from_int_terms(&[(3, 1), (-2, -4), (0, 9)]);
        let expected = Laurent::from_int_terms(&[(2, 3), (-3, 8)]);
        assert_eq!(f.laurent_derivative(), expected);
    }

    #[test]
    fn gaussian_eval_is_exact_at_i() {
        // f = 2ℓ^2: f'(ℓ) = 4ℓ, so f'(i) = 4i.
        let f = Laurent::from_int_terms(&[(2, 2)]);
        let d = f.laurent_derivative();
        let v = d.laurent_eval_gaussian(&GaussianRational::i()).unwrap();
        assert_eq!(v, GaussianRational::from_ints(0, 4));
        // Negative exponents: ℓ^-4 + 2ℓ^-2 at ℓ = i is 1 - 2 = -1.
        let g = Laurent::from_int_terms(&[(-4, 1), (-2, 2)]);
        let v = g.laurent_eval_gaussian(&GaussianRational::i()).unwrap();
        assert_eq!(v, GaussianRational::from_ints(-1, 0));
    }

    #[test]
    fn gaussian_pow_handles_negative_exponents() {
        let z = GaussianRational::from_ints(1, 2);
        let inv = z.pow(-1);
        assert_eq!(z.mul(&inv), GaussianRational::one());
        assert_eq!(z.pow(-3), z.pow(3).recip());
        assert_eq!(GaussianRational::i().pow(4), GaussianRational::one());
    }

    #[test]
    fn symmetrize_roundtrips_and_rejects_asymmetry() {
        let half = vec![big(7), big(-3), big(0), big(2)];
        let f = Laurent::from_symmetric(&half);
        assert_eq!(f.symmetrize().unwrap(), half);
        assert_eq!(symmetrize(&f).unwrap(), half);
        let g = Laurent::from_int_terms(&[(1, 2), (-1, 3)]);
        match g.symmetrize() {
            Err(AlgebraError::NotSymmetric { exp: 1, .. }) => {}
            other => panic!("expected NotSymmetric, got {other:?}"),
        }
    }

    #[test]
    fn conway_conversion_roundtrips_on_knot_polynomials() {
        // Trefoil: Δ = t - 1 + t^-1, ∇ = 1 + z^2.
        let conway = alexander_to_conway(&[big(-1), big(1)]).unwrap();
        assert_eq!(conway, vec![big(1), big(1)]);
        // Figure-eight: Δ = -t + 3 - t^-1, ∇ = 1 - z^2.
        let conway = alexander_to_conway(&[big(3), big(-1)]).unwrap();
        assert_eq!(conway, vec![big(1), big(-1)]);
        // Roundtrip through a genus-3 example.
        let half = vec![big(11), big(-8), big(4), big(-1)];
        let conway = alexander_to_conway(&half).unwrap();
        let back = conway_to_alexander(&conway);
        assert_eq!(back.symmetrize().unwrap(), half);
    }

    #[test]
    fn conway_conversion_rejects_unnormalized_input() {
        // Δ(1) = 3 here, so the constant Conway coefficient comes out as 3.
        let err = alexander_to_conway(&[big(3)]).unwrap_err();
        assert!(matches!(err, AlgebraError::NonzeroRemainder(_)));
    }

    #[test]
    fn rational_string_roundtrip() {
        for s in ["3/4", "-7/2", "5", "0", "-289/286"] {
            let q = parse_rational(s).unwrap();
            assert_eq!(format_rational(&q), s);
        }
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn display_renders_sorted_terms() {
        let f = Laurent::from_int_terms(&[(2, 1), (0, -3), (-2, 1)]);
        assert_eq!(format!("{f}"), "t^-2 - 3 + t^2");
        assert_eq!(format!("{}", Laurent::zero()), "0");
    }
}
