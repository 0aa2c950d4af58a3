//! Two-variable Laurent polynomials in `(a, q)` and fractions with a
//! `(q − q^{-1})`-power denominator.
//!
//! These are exactly what the HOMFLY skein recursion of `(2,n)` torus
//! links produces: the unknot already carries one `(q − q^{-1})` in the
//! denominator, and the recursion never introduces more.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{LaurentPoly, PolyError};

/// A Laurent polynomial in `a` and `s = q^{1/2}`.
///
/// Keys are `(a_exp, s_exp)`; as in [`LaurentPoly`], `q`-exponents are
/// stored doubled so half-integral powers stay exact.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiLaurentPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BiLaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// The single term `c·a^{a_exp}·s^{s_exp}`.
    pub fn monomial(c: impl Into<BigInt>, a_exp: i64, s_exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a_exp, s_exp), c);
        }
        BiLaurentPoly { terms }
    }

    /// `q − q^{-1}` as a polynomial (the recurring skein factor).
    pub fn q_minus_q_inv() -> Self {
        Self::monomial(1, 0, 2) + Self::monomial(-1, 0, -2)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, c: impl Into<BigInt>, a_exp: i64, s_exp: i64) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((a_exp, s_exp)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(a_exp, s_exp));
        }
    }

    /// Multiply by the monomial `a^{da}·s^{ds}`.
    pub fn shifted(&self, da: i64, ds: i64) -> Self {
        BiLaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, s), c)| ((a + da, s + ds), c.clone()))
                .collect(),
        }
    }

    pub fn scaled_int(&self, c: i64) -> Self {
        let c = BigInt::from(c);
        if c.is_zero() {
            return Self::zero();
        }
        BiLaurentPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, v * &c)).collect(),
        }
    }

    /// Smallest `a`-exponent present, `None` for the zero polynomial.
    pub fn min_a_exp(&self) -> Option<i64> {
        self.terms.keys().map(|&(a, _)| a).min()
    }

    /// The distinct `a`-exponents present, ascending.
    pub fn a_support(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self.terms.keys().map(|&(a, _)| a).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The coefficient of `a^{a_exp}` as a one-variable polynomial in `s`.
    pub fn a_slice(&self, a_exp: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(a, s), c) in &self.terms {
            if a == a_exp {
                out.add_term(c.clone(), s);
            }
        }
        out
    }

    /// Rebuild from `a`-slices.
    fn from_slices(slices: BTreeMap<i64, LaurentPoly>) -> Self {
        let mut out = Self::zero();
        for (a, p) in slices {
            for (s, c) in p.terms() {
                out.add_term(c.clone(), a, s);
            }
        }
        out
    }

    /// Exact division by `q − q^{-1}`, slice by slice in `a`.
    pub fn div_exact_q_minus_q_inv(&self) -> Option<Self> {
        let d = LaurentPoly::q_pow(1) - LaurentPoly::q_pow(-1);
        let mut slices = BTreeMap::new();
        for a in self.a_support() {
            slices.insert(a, self.a_slice(a).div_exact(&d)?);
        }
        Some(Self::from_slices(slices))
    }

    /// Evaluate at rational `(a, q)`.  Fails with [`PolyError::OddPower`]
    /// if a half-integral `q`-power is present.
    pub fn eval(
        &self,
        a: &num_rational::BigRational,
        q: &num_rational::BigRational,
    ) -> Result<num_rational::BigRational, PolyError> {
        use num_rational::BigRational;
        let pow = |x: &BigRational, e: i64| -> Result<BigRational, PolyError> {
            if e >= 0 {
                Ok(x.pow(e as i32))
            } else if x.is_zero() {
                Err(PolyError::Pole("0".to_string()))
            } else {
                Ok(x.pow(e as i32))
            }
        };
        let mut acc = BigRational::zero();
        for (&(ae, se), c) in &self.terms {
            if se % 2 != 0 {
                return Err(PolyError::OddPower(se));
            }
            acc += BigRational::from(c.clone()) * pow(a, ae)? * pow(q, se / 2)?;
        }
        Ok(acc)
    }
}

impl Add<&BiLaurentPoly> for &BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn add(self, rhs: &BiLaurentPoly) -> BiLaurentPoly {
        let mut out = self.clone();
        for (&(a, s), c) in &rhs.terms {
            out.add_term(c.clone(), a, s);
        }
        out
    }
}

impl Sub<&BiLaurentPoly> for &BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn sub(self, rhs: &BiLaurentPoly) -> BiLaurentPoly {
        let mut out = self.clone();
        for (&(a, s), c) in &rhs.terms {
            out.add_term(-c.clone(), a, s);
        }
        out
    }
}

impl Mul<&BiLaurentPoly> for &BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn mul(self, rhs: &BiLaurentPoly) -> BiLaurentPoly {
        let mut out = BiLaurentPoly::zero();
        for (&(a1, s1), c1) in &self.terms {
            for (&(a2, s2), c2) in &rhs.terms {
                out.add_term(c1 * c2, a1 + a2, s1 + s2);
            }
        }
        out
    }
}

impl Neg for &BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn neg(self) -> BiLaurentPoly {
        BiLaurentPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Add for BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

/// Text form: terms sorted by `(a, s)`, `a`-powers first, e.g.
/// `a^-1*q^-1 - a^-1*q + a*q^-1`.
impl fmt::Display for BiLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&(ae, se), c)) in self.terms.iter().enumerate() {
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
            let mut factors: Vec<String> = Vec::new();
            match ae {
                0 => {}
                1 => factors.push("a".to_string()),
                _ => factors.push(format!("a^{ae}")),
            }
            match se {
                0 => {}
                2 => factors.push("q".to_string()),
                _ if se % 2 == 0 => factors.push(format!("q^{}", se / 2)),
                _ => factors.push(format!("q^{se}/2")),
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == BigInt::from(1) {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// A fraction `num / (q − q^{-1})^{pole_order}`, kept with the smallest
/// possible pole order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiLaurentFrac {
    num: BiLaurentPoly,
    pole_order: u32,
}

impl BiLaurentFrac {
    /// Build and normalize: while the numerator is divisible by
    /// `q − q^{-1}` and the pole order is positive, cancel one factor.
    pub fn new(num: BiLaurentPoly, pole_order: u32) -> Self {
        let mut out = BiLaurentFrac { num, pole_order };
        while out.pole_order > 0 {
            match out.num.div_exact_q_minus_q_inv() {
                Some(q) => {
                    out.num = q;
                    out.pole_order -= 1;
                }
                None => break,
            }
        }
        if out.num.is_zero() {
            out.pole_order = 0;
        }
        out
    }

    pub fn from_poly(num: BiLaurentPoly) -> Self {
        Self::new(num, 0)
    }

    pub fn zero() -> Self {
        Self::from_poly(BiLaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(BiLaurentPoly::one())
    }

    pub fn numerator(&self) -> &BiLaurentPoly {
        &self.num
    }

    pub fn pole_order(&self) -> u32 {
        self.pole_order
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Multiply by a polynomial.
    pub fn mul_poly(&self, p: &BiLaurentPoly) -> Self {
        Self::new(&self.num * p, self.pole_order)
    }

    pub fn scaled_int(&self, c: i64) -> Self {
        Self::new(self.num.scaled_int(c), self.pole_order)
    }

    /// Evaluate at rational `(a, q)`; a surviving pole is an error.
    pub fn eval(
        &self,
        a: &num_rational::BigRational,
        q: &num_rational::BigRational,
    ) -> Result<num_rational::BigRational, PolyError> {
        use num_rational::BigRational;
        let num = self.num.eval(a, q)?;
        if self.pole_order == 0 {
            return Ok(num);
        }
        if q.is_zero() {
            return Err(PolyError::Pole("q = 0".to_string()));
        }
        let denom_base = q - q.recip();
        if denom_base.is_zero() {
            return Err(PolyError::Pole(format!("q = {q}")));
        }
        let mut den = BigRational::from(BigInt::from(1));
        for _ in 0..self.pole_order {
            den *= &denom_base;
        }
        Ok(num / den)
    }
}

impl Add<&BiLaurentFrac> for &BiLaurentFrac {
    type Output = BiLaurentFrac;
    fn add(self, rhs: &BiLaurentFrac) -> BiLaurentFrac {
        // Bring both over the larger pole order.
        let order = self.pole_order.max(rhs.pole_order);
        let lift = |f: &BiLaurentFrac| -> BiLaurentPoly {
            let mut num = f.num.clone();
            for _ in f.pole_order..order {
                num = &num * &BiLaurentPoly::q_minus_q_inv();
            }
            num
        };
        BiLaurentFrac::new(&lift(self) + &lift(rhs), order)
    }
}

impl Sub<&BiLaurentFrac> for &BiLaurentFrac {
    type Output = BiLaurentFrac;
    fn sub(self, rhs: &BiLaurentFrac) -> BiLaurentFrac {
        self + &-rhs
    }
}

impl Mul<&BiLaurentFrac> for &BiLaurentFrac {
    type Output = BiLaurentFrac;
    fn mul(self, rhs: &BiLaurentFrac) -> BiLaurentFrac {
        BiLaurentFrac::new(&self.num * &rhs.num, self.pole_order + rhs.pole_order)
    }
}

impl Neg for &BiLaurentFrac {
    type Output = BiLaurentFrac;
    fn neg(self) -> BiLaurentFrac {
        BiLaurentFrac {
            num: -&self.num,
            pole_order: self.pole_order,
        }
    }
}

impl fmt::Display for BiLaurentFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pole_order {
            0 => write!(f, "{}", self.num),
            1 => write!(f, "({}) / (q - q^-1)", self.num),
            k => write!(f, "({}) / (q - q^-1)^{k}", self.num),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn slices_and_support_decompose_the_polynomial() {
        // a^2·q − 3·a^2 + a^{-1}·q^{1/2}
        let mut p = BiLaurentPoly::zero();
        p.add_term(1, 2, 2);
        p.add_term(-3, 2, 0);
        p.add_term(1, -1, 1);
        assert_eq!(p.a_support(), vec![-1, 2]);
        assert_eq!(p.min_a_exp(), Some(-1));
        assert_eq!(p.a_slice(2).to_string(), "-3 + q");
        assert_eq!(p.a_slice(-1).to_string(), "q^1/2");
        assert_eq!(p.a_slice(0), LaurentPoly::zero());
    }

    #[test]
    fn fraction_normalization_is_minimal() {
        // (q − q^{-1})·a / (q − q^{-1})^2 reduces to a / (q − q^{-1})
        let a = BiLaurentPoly::monomial(1, 1, 0);
        let f = BiLaurentFrac::new(&a * &BiLaurentPoly::q_minus_q_inv(), 2);
        assert_eq!(f.pole_order(), 1);
        assert_eq!(f.numerator(), &a);
        // a − a^{-1} is not divisible by q − q^{-1}: pole survives
        let g = BiLaurentFrac::new(
            BiLaurentPoly::monomial(1, 1, 0) + BiLaurentPoly::monomial(-1, -1, 0),
            1,
        );
        assert_eq!(g.pole_order(), 1);
        assert_eq!(g.to_string(), "(-a^-1 + a) / (q - q^-1)");
    }

    #[test]
    fn fraction_arithmetic_matches_rational_evaluation() {
        let unknot = BiLaurentFrac::new(
            BiLaurentPoly::monomial(1, 1, 0) + BiLaurentPoly::monomial(-1, -1, 0),
            1,
        );
        let poly = BiLaurentFrac::from_poly(
            BiLaurentPoly::monomial(2, 0, 2) + BiLaurentPoly::monomial(1, 2, 0),
        );
        let sum = &unknot + &poly;
        let prod = &unknot * &poly;
        let (a, q) = (rat(3, 1), rat(5, 2));
        let u = unknot.eval(&a, &q).unwrap();
        let p = poly.eval(&a, &q).unwrap();
        assert_eq!(sum.eval(&a, &q).unwrap(), &u + &p);
        assert_eq!(prod.eval(&a, &q).unwrap(), &u * &p);
        // Evaluating on the pole locus q = ±1 is rejected.
        assert!(matches!(
            unknot.eval(&a, &rat(1, 1)),
            Err(PolyError::Pole(_))
        ));
    }

    #[test]
    fn display_orders_a_then_q() {
        let mut p = BiLaurentPoly::zero();
        p.add_term(1, 1, -2);
        p.add_term(-1, 1, 2);
        p.add_term(1, -1, -2);
        assert_eq!(p.to_string(), "a^-1*q^-1 + a*q^-1 - a*q");
    }
}
