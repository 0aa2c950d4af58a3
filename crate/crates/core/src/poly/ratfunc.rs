//! Dense integer polynomials in `t` and reduced rational functions.
//!
//! These carry the Poincaré-series expressions that get evaluated at
//! `t = 1`: the individual summands have poles at `t = ±1, ±i`, but the
//! sum is regular at `1`, so exact cancellation in the fraction field is
//! essential.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::PolyError;

/// A dense polynomial in `t` with `BigInt` coefficients, ascending order,
/// no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_ints(&[1])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The monomial `c·t^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|k| k * c).collect(),
        }
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + BigRational::from(c.clone());
        }
        acc
    }

    /// Gcd of the coefficients (non-negative; zero only for the zero
    /// polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divide out the content; the zero polynomial stays zero.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|k| k / &c).collect(),
        }
    }

    /// Exact division over the integers: `Some(q)` with `self = q·d`, or
    /// `None` if no such integer-coefficient quotient exists.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = d.degree().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len()];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                return None;
            }
            let (q, leftover) = rem.leading().unwrap().div_rem(d.leading().unwrap());
            if !leftover.is_zero() {
                return None;
            }
            quot[rd - dd] = q.clone();
            rem = &rem - &d.scaled(&q).shift_up(rd - dd);
        }
        Some(Self::new(quot))
    }

    /// Multiply by `t^k`.
    fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Pseudo-remainder of `self` by `d` (both nonzero, `deg self ≥ deg d`
    /// not required — returns `self` unchanged in that case, up to leading
    /// scaling during elimination).
    fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo_rem by zero");
        let dl = d.leading().unwrap().clone();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let rl = rem.leading().unwrap().clone();
            rem = &rem.scaled(&dl) - &d.scaled(&rl).shift_up(rd - dd);
        }
        rem
    }

    /// Primitive polynomial gcd (subresultant-free primitive PRS), with
    /// positive leading coefficient.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let mut a = a.primitive_part();
        let mut b = b.primitive_part();
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        if a.leading().is_some_and(Signed::is_negative) {
            a = -&a;
        }
        a
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        IntPoly::new(coeffs)
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        IntPoly::new(coeffs)
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .enumerate()
        {
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
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{mag}*t^{k}")?,
            }
        }
        Ok(())
    }
}

/// A quotient of integer polynomials, kept fully reduced: the gcd of
/// numerator and denominator is trivial, their joint content is 1 and the
/// denominator has positive leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFunction {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let mut out = RationalFunction { num, den };
        out.reduce();
        Ok(out)
    }

    pub fn from_poly(num: IntPoly) -> Self {
        RationalFunction {
            num,
            den: IntPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(IntPoly::zero())
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = IntPoly::one();
            return;
        }
        let g = IntPoly::gcd(&self.num, &self.den);
        // The primitive gcd divides both exactly over the integers.
        self.num = self.num.div_exact(&g).expect("gcd divides numerator");
        self.den = self.den.div_exact(&g).expect("gcd divides denominator");
        let c = self.num.content().gcd(&self.den.content());
        if !c.is_one() {
            self.num = IntPoly {
                coeffs: self.num.coeffs.iter().map(|k| k / &c).collect(),
            };
            self.den = IntPoly {
                coeffs: self.den.coeffs.iter().map(|k| k / &c).collect(),
            };
        }
        if self.den.leading().is_some_and(Signed::is_negative) {
            self.num = -&self.num;
            self.den = -&self.den;
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        Self::new(num, den).expect("denominators are nonzero")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("denominators are nonzero")
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, PolyError> {
        if rhs.num.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    /// Evaluate at `t`; a zero of the reduced denominator is a genuine
    /// pole and reported as such.
    pub fn eval(&self, t: &BigRational) -> Result<BigRational, PolyError> {
        let den = self.den.eval(t);
        if den.is_zero() {
            return Err(PolyError::Pole(t.to_string()));
        }
        Ok(self.num.eval(t) / den)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == IntPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
