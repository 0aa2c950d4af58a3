//! Sparse Laurent polynomials in `s = q^{1/2}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::PolyError;

/// A Laurent polynomial in `s = q^{1/2}` with integer coefficients.
///
/// Exponents are stored in units of `s`, i.e. the term `c·q^{k}` has key
/// `2k` and `c·q^{k/2}` has key `k`.  The map never contains zero
/// coefficients, so equality of maps is equality of polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

/// Exact variable substitutions on [`LaurentPoly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Substitution {
    /// `s ↦ s^{-1}`, i.e. `q ↦ q^{-1}`.
    SInverse,
    /// `q ↦ -q`; requires all exponents to be integral powers of `q`.
    QNegate,
    /// `q ↦ q^2`; requires all exponents to be integral powers of `q`.
    QSquare,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The constant polynomial `c`.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// The single term `c·s^{s_exp}`.
    pub fn monomial(c: impl Into<BigInt>, s_exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(s_exp, c);
        }
        LaurentPoly { terms }
    }

    /// `s^{e}`, i.e. `q^{e/2}`.
    pub fn s_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    /// `q^{k}`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(1, 2 * k)
    }

    /// `q^{-1/2} + q^{1/2}`, the genus-counting variable of the cosh basis.
    pub fn cosh_unit() -> Self {
        Self::s_pow(-1) + Self::s_pow(1)
    }

    /// `q^{-1} - q`, the genus-counting variable of the signed-sinh basis.
    pub fn sinh_unit() -> Self {
        Self::s_pow(-2) - Self::s_pow(2)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of `s^{e}` (zero if absent).
    pub fn coeff(&self, s_exp: i64) -> BigInt {
        self.terms.get(&s_exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Smallest exponent with nonzero coefficient, in `s`-units.
    pub fn min_s_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Largest exponent with nonzero coefficient, in `s`-units.
    pub fn max_s_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Iterate over `(s_exp, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Add `c·s^{e}` in place.
    pub fn add_term(&mut self, c: impl Into<BigInt>, s_exp: i64) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(s_exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&s_exp);
        }
    }

    /// Multiply by the monomial `s^{ds}`.
    pub fn shifted(&self, ds: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + ds, c.clone())).collect(),
        }
    }

    /// Multiply every coefficient by `c`.
    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Multiply every coefficient by the integer `c`.
    pub fn scaled_int(&self, c: i64) -> Self {
        self.scaled(&BigInt::from(c))
    }

    /// `self^k` by binary exponentiation.
    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Apply an exact substitution.  [`Substitution::QNegate`] and
    /// [`Substitution::QSquare`] fail with [`PolyError::OddPower`] if some
    /// term has a half-integral `q`-exponent.
    pub fn substitute(&self, rule: Substitution) -> Result<Self, PolyError> {
        let mut terms = BTreeMap::new();
        for (&e, c) in &self.terms {
            let (new_e, new_c) = match rule {
                Substitution::SInverse => (-e, c.clone()),
                Substitution::QNegate => {
                    if e % 2 != 0 {
                        return Err(PolyError::OddPower(e));
                    }
                    let c = if (e / 2).rem_euclid(2) == 1 { -c } else { c.clone() };
                    (e, c)
                }
                Substitution::QSquare => {
                    if e % 2 != 0 {
                        return Err(PolyError::OddPower(e));
                    }
                    (2 * e, c.clone())
                }
            };
            terms.insert(new_e, new_c);
        }
        Ok(LaurentPoly { terms })
    }

    /// Whether the polynomial is invariant under `s ↦ s^{-1}`.
    pub fn is_inversion_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| self.coeff(-e) == *c)
    }

    /// Exact division: returns `Some(q)` with `self = q·divisor` when the
    /// quotient exists over the Laurent ring, `None` otherwise.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d_top = divisor.max_s_exp().unwrap();
        let d_lead = divisor.coeff(d_top);
        // Any genuine quotient has exponents bounded below by this.
        let q_min = self.min_s_exp().unwrap() - divisor.min_s_exp().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(r_top) = rem.max_s_exp() {
            let q_exp = r_top - d_top;
            if q_exp < q_min {
                return None;
            }
            let r_lead = rem.coeff(r_top);
            let (q_coeff, leftover) = num_integer::Integer::div_rem(&r_lead, &d_lead);
            if !leftover.is_zero() {
                return None;
            }
            let term = Self::monomial(q_coeff, q_exp);
            rem = &rem - &(&term * divisor);
            quot = &quot + &term;
        }
        Some(quot)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(c.clone(), e);
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(-c.clone(), e);
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

// Owned-operand conveniences so short expressions read naturally.
impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> Self {
        -&self
    }
}

/// Canonical text form: ascending powers of `q`, half-integral exponents
/// written `q^k/2`, e.g. `q^-1 - 3*q + 2*q^3/2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let var = match e {
                0 => None,
                2 => Some("q".to_string()),
                _ if e % 2 == 0 => Some(format!("q^{}", e / 2)),
                _ => Some(format!("q^{e}/2")),
            };
            match var {
                None => write!(f, "{mag}")?,
                Some(v) if mag == BigInt::from(1) => write!(f, "{v}")?,
                Some(v) => write!(f, "{mag}*{v}")?,
            }
        }
        Ok(())
    }
}
