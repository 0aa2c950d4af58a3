//! Gopakumar–Vafa spectra and the change of basis to and from
//! Euler-characteristic Laurent polynomials.
//!
//! Two bases occur.  A *cosh-basis* expansion writes a symmetric
//! polynomial as
//!
//! ```text
//! P(q) = Σ_g n_g · (q^{-1/2} + q^{1/2})^{2g}
//! ```
//!
//! and a *signed-sinh* expansion (relative to a top genus `ḡ`) writes
//!
//! ```text
//! P(q) = q^{2ḡ-2} Σ_g (-1)^g n_g · (q^{-1} - q)^{2g-2}
//! ```
//!
//! Both decompositions peel from the top: the basis element of genus `g`
//! is the unique one reaching width `±g` (resp. degree `2g-2`), so the
//! coefficients are determined greedily and uniquely.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::LaurentPoly;

/// Errors from basis conversion.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BasisError {
    /// The polynomial is not an integer combination of the requested
    /// basis elements.
    #[error("not decomposable in the requested basis: {0}")]
    NotDecomposable(String),
    /// A spectrum with undetermined entries cannot be recomposed into a
    /// polynomial.
    #[error("spectrum has undetermined values for g in {lo}..={hi}")]
    UnknownValues { lo: u32, hi: u32 },
}

/// A Gopakumar–Vafa spectrum: finitely many integers `n_g` indexed by
/// genus, plus an optional contiguous range of *undetermined* genera.
///
/// Determined genera outside the stored map have `n_g = 0`.  The
/// undetermined range is used for base genus ≥ 3, where the middle of the
/// spectrum is only known symbolically.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GVSpectrum {
    values: BTreeMap<u32, BigInt>,
    unknown: Option<(u32, u32)>,
}

impl GVSpectrum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: &[(u32, i64)]) -> Self {
        let mut s = Self::new();
        for &(g, n) in pairs {
            s.set(g, BigInt::from(n));
        }
        s
    }

    /// Set `n_g` (removing the entry when zero).  Panics if `g` lies in
    /// the undetermined range.
    pub fn set(&mut self, g: u32, n: BigInt) {
        assert!(!self.is_unknown(g), "n_{g} is undetermined");
        if n.is_zero() {
            self.values.remove(&g);
        } else {
            self.values.insert(g, n);
        }
    }

    /// Mark `n_g` as undetermined for all `g` in `lo..=hi`, discarding any
    /// stored values there.
    pub fn set_unknown_range(&mut self, lo: u32, hi: u32) {
        assert!(lo <= hi);
        self.values.retain(|g, _| *g < lo || *g > hi);
        self.unknown = Some((lo, hi));
    }

    pub fn unknown_range(&self) -> Option<(u32, u32)> {
        self.unknown
    }

    pub fn is_unknown(&self, g: u32) -> bool {
        self.unknown.is_some_and(|(lo, hi)| lo <= g && g <= hi)
    }

    /// `n_g` when determined, `None` when inside the undetermined range.
    pub fn determined(&self, g: u32) -> Option<BigInt> {
        if self.is_unknown(g) {
            None
        } else {
            Some(self.values.get(&g).cloned().unwrap_or_else(BigInt::zero))
        }
    }

    /// Iterate over the determined, nonzero entries in ascending genus.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.values.iter().map(|(g, n)| (*g, n))
    }

    /// Largest genus carrying a determined nonzero value or an
    /// undetermined slot.
    pub fn max_genus(&self) -> Option<u32> {
        let stored = self.values.keys().next_back().copied();
        let unknown = self.unknown.map(|(_, hi)| hi);
        stored.max(unknown)
    }

    /// Entrywise sum; undetermined ranges merge into their convex hull.
    pub fn add(&self, rhs: &Self) -> Self {
        let unknown = match (self.unknown, rhs.unknown) {
            (None, u) | (u, None) => u,
            (Some((a, b)), Some((c, d))) => Some((a.min(c), b.max(d))),
        };
        let mut out = Self::new();
        if let Some((lo, hi)) = unknown {
            out.set_unknown_range(lo, hi);
        }
        let genera: std::collections::BTreeSet<u32> = self
            .values
            .keys()
            .chain(rhs.values.keys())
            .copied()
            .collect();
        for g in genera {
            if !out.is_unknown(g) {
                let sum = self.values.get(&g).cloned().unwrap_or_else(BigInt::zero)
                    + rhs.values.get(&g).cloned().unwrap_or_else(BigInt::zero);
                out.set(g, sum);
            }
        }
        out
    }

    /// Multiply every determined value by `c`.
    pub fn scaled(&self, c: &BigInt) -> Self {
        let values = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.values.iter().map(|(g, n)| (*g, n * c)).collect()
        };
        GVSpectrum {
            values,
            unknown: self.unknown,
        }
    }

    pub fn scaled_int(&self, c: i64) -> Self {
        self.scaled(&BigInt::from(c))
    }

    /// JSON form: `{"n": {"2": -2, ...}, "unknown": null | [lo, hi]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut n = serde_json::Map::new();
        for (g, v) in &self.values {
            let num: serde_json::Number = v
                .to_string()
                .parse()
                .expect("integer literal is a valid JSON number");
            n.insert(g.to_string(), serde_json::Value::Number(num));
        }
        let unknown = match self.unknown {
            None => serde_json::Value::Null,
            Some((lo, hi)) => serde_json::json!([lo, hi]),
        };
        serde_json::json!({ "n": n, "unknown": unknown })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, String> {
        let obj = v.as_object().ok_or("expected a JSON object")?;
        let mut out = Self::new();
        match obj.get("unknown") {
            None | Some(serde_json::Value::Null) => {}
            Some(serde_json::Value::Array(arr)) if arr.len() == 2 => {
                let lo = arr[0].as_u64().ok_or("unknown bound must be a u32")? as u32;
                let hi = arr[1].as_u64().ok_or("unknown bound must be a u32")? as u32;
                out.set_unknown_range(lo, hi);
            }
            Some(other) => return Err(format!("bad unknown field: {other}")),
        }
        let n = obj
            .get("n")
            .and_then(|n| n.as_object())
            .ok_or("missing n map")?;
        for (k, v) in n {
            let g: u32 = k.parse().map_err(|_| format!("bad genus key {k:?}"))?;
            let num = match v {
                serde_json::Value::Number(num) => num.to_string(),
                _ => return Err(format!("bad value for n_{g}")),
            };
            let big: BigInt = num.parse().map_err(|_| format!("bad integer for n_{g}"))?;
            out.set(g, big);
        }
        Ok(out)
    }
}

impl serde::Serialize for GVSpectrum {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl fmt::Display for GVSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.is_empty() && self.unknown.is_none() {
            return write!(f, "0");
        }
        let mut first = true;
        for (g, n) in &self.values {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "n_{g} = {n}")?;
            first = false;
        }
        if let Some((lo, hi)) = self.unknown {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "n_g undetermined for g in {lo}..={hi}")?;
        }
        Ok(())
    }
}

/// Expand `p` as an integer combination of powers of `q^{-1} - q`,
/// returning the exponent → coefficient map.  Fails if a genuinely
/// negative power would be needed or the peeling leaves a remainder.
pub fn sinh_expand(p: &LaurentPoly) -> Result<BTreeMap<i64, BigInt>, BasisError> {
    let u = LaurentPoly::sinh_unit();
    let mut rem = p.clone();
    let mut out = BTreeMap::new();
    while !rem.is_zero() {
        let top = rem.max_s_exp().unwrap();
        if top < 0 || top % 2 != 0 {
            return Err(BasisError::NotDecomposable(format!(
                "remainder {rem} is not a polynomial in q^-1 - q"
            )));
        }
        let k = top / 2;
        // (q^{-1} - q)^k has top term (-1)^k q^k.
        let mut c = rem.coeff(top);
        if k % 2 != 0 {
            c = -c;
        }
        rem = &rem - &u.pow(k as u32).scaled(&c);
        if !c.is_zero() {
            out.insert(k, c);
        }
        if rem.max_s_exp().is_some_and(|t| t >= top) {
            return Err(BasisError::NotDecomposable(format!(
                "peeling failed to reduce the top degree at q^{k}"
            )));
        }
    }
    Ok(out)
}

/// Decompose `P = Σ_g n_g (q^{-1/2} + q^{1/2})^{2g}`.
pub fn decompose_cosh(p: &LaurentPoly) -> Result<GVSpectrum, BasisError> {
    let unit = LaurentPoly::cosh_unit();
    let mut rem = p.clone();
    let mut out = GVSpectrum::new();
    while !rem.is_zero() {
        let top = rem.max_s_exp().unwrap();
        if top < 0 || top % 2 != 0 {
            return Err(BasisError::NotDecomposable(format!(
                "remainder {rem} has no cosh-basis expansion"
            )));
        }
        let g = (top / 2) as u32;
        let c = rem.coeff(top);
        rem = &rem - &unit.pow(2 * g).scaled(&c);
        out.set(g, c);
        if rem.max_s_exp().is_some_and(|t| t >= top) {
            return Err(BasisError::NotDecomposable(format!(
                "peeling failed to reduce the top degree at genus {g}"
            )));
        }
    }
    Ok(out)
}

/// Recompose `Σ_g n_g (q^{-1/2} + q^{1/2})^{2g}`.
pub fn compose_cosh(s: &GVSpectrum) -> Result<LaurentPoly, BasisError> {
    if let Some((lo, hi)) = s.unknown_range() {
        return Err(BasisError::UnknownValues { lo, hi });
    }
    let unit = LaurentPoly::cosh_unit();
    let mut acc = LaurentPoly::zero();
    for (g, n) in s.iter() {
        acc = &acc + &unit.pow(2 * g).scaled(n);
    }
    Ok(acc)
}

/// Decompose `P = q^{2ḡ-2} Σ_g (-1)^g n_g (q^{-1} - q)^{2g-2}` for the
/// given top genus `ḡ = gbar`.
///
/// Valid inputs are `q^{2ḡ-2}` times a polynomial in `(q^{-1} - q)^2`
/// divided once by `(q^{-1} - q)^2` — i.e. the `g = 0` basis element has a
/// genuine second-order pole, matching the `(q^{-1/2} - q^{1/2})^{-2}`
/// leading behaviour of a degree-one local contribution.
pub fn decompose_signed_sinh(p: &LaurentPoly, gbar: u32) -> Result<GVSpectrum, BasisError> {
    let shifted = p.shifted(-(4 * gbar as i64 - 4));
    // Multiply by (q^{-1} - q)^2 so every basis element becomes a genuine
    // polynomial in the sinh unit; exponent k then corresponds to genus k/2.
    let cleared = &shifted * &LaurentPoly::sinh_unit().pow(2);
    let expansion = sinh_expand(&cleared)?;
    let mut out = GVSpectrum::new();
    for (k, c) in expansion {
        if k % 2 != 0 {
            return Err(BasisError::NotDecomposable(format!(
                "odd sinh power {k} has no genus interpretation"
            )));
        }
        let g = (k / 2) as u32;
        let n = if g % 2 == 0 { c } else { -c };
        out.set(g, n);
    }
    Ok(out)
}

/// Recompose `q^{2ḡ-2} Σ_g (-1)^g n_g (q^{-1} - q)^{2g-2}`.
///
/// A nonzero `n_0` is rejected: the `g = 0` element is not a Laurent
/// polynomial.
pub fn compose_signed_sinh(s: &GVSpectrum, gbar: u32) -> Result<LaurentPoly, BasisError> {
    if let Some((lo, hi)) = s.unknown_range() {
        return Err(BasisError::UnknownValues { lo, hi });
    }
    let u = LaurentPoly::sinh_unit();
    let mut acc = LaurentPoly::zero();
    for (g, n) in s.iter() {
        if g == 0 {
            return Err(BasisError::NotDecomposable(
                "genus-0 signed-sinh element has a pole".to_string(),
            ));
        }
        let signed = if g % 2 == 0 { n.clone() } else { -n };
        acc = &acc + &u.pow(2 * g - 2).scaled(&signed);
    }
    Ok(acc.shifted(4 * gbar as i64 - 4))
}

/// A polynomial displayed in factored sinh form,
/// `q^{p} * { Σ_j c_j (q^{-1} - q)^j }`, the shape in which torus-knot
/// invariants and Hilbert-scheme series are most readable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SinhForm {
    q_power: i64,
    terms: BTreeMap<i64, BigInt>,
}

impl SinhForm {
    /// Factor `p = q^{q_power} · u^{-pole_order} · (polynomial in u)` with
    /// `u = q^{-1} - q`.
    pub fn expand(p: &LaurentPoly, q_power: i64, pole_order: u32) -> Result<Self, BasisError> {
        let shifted = p.shifted(-2 * q_power);
        let expansion = sinh_expand(&shifted)?;
        let terms = expansion
            .into_iter()
            .map(|(k, c)| (k - pole_order as i64, c))
            .collect();
        Ok(SinhForm { q_power, terms })
    }

    pub fn q_power(&self) -> i64 {
        self.q_power
    }

    /// Exponent → coefficient map of the braced polynomial in
    /// `u = q^{-1} - q`.
    pub fn terms(&self) -> &BTreeMap<i64, BigInt> {
        &self.terms
    }

    /// Coefficient of `(q^{-1} - q)^j`.
    pub fn coeff(&self, j: i64) -> BigInt {
        self.terms.get(&j).cloned().unwrap_or_else(BigInt::zero)
    }
}

impl fmt::Display for SinhForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.q_power {
            0 => {}
            1 => write!(f, "q * ")?,
            k => write!(f, "q^{k} * ")?,
        }
        write!(f, "{{")?;
        if self.terms.is_empty() {
            return write!(f, "0}}");
        }
        for (i, (&j, c)) in self.terms.iter().rev().enumerate() {
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
            let var = match j {
                0 => None,
                1 => Some("(q^-1-q)".to_string()),
                _ => Some(format!("(q^-1-q)^{j}")),
            };
            match var {
                None => write!(f, "{mag}")?,
                Some(v) if mag.is_one() => write!(f, "{v}")?,
                Some(v) => write!(f, "{mag}*{v}")?,
            }
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cosh_round_trip_on_known_spectra() {
        // (q^{-1/2}+q^{1/2})^4 − 2: the spectrum {0: −2, 2: 1}.
        let p = LaurentPoly::cosh_unit().pow(4) - LaurentPoly::constant(2);
        let s = decompose_cosh(&p).unwrap();
        assert_eq!(s, GVSpectrum::from_pairs(&[(0, -2), (2, 1)]));
        assert_eq!(compose_cosh(&s).unwrap(), p);
    }

    #[test]
    fn cosh_rejects_non_symmetric_input() {
        let err = decompose_cosh(&LaurentPoly::q_pow(1)).unwrap_err();
        assert!(matches!(err, BasisError::NotDecomposable(_)));
        // Half-integral top power.
        let err = decompose_cosh(&LaurentPoly::s_pow(1)).unwrap_err();
        assert!(matches!(err, BasisError::NotDecomposable(_)));
    }

    #[test]
    fn signed_sinh_matches_hand_composition() {
        // ḡ = 2, spectrum {2: 1}: q^2 · (q^{-1}-q)^2 = 1 − 2q^2 + q^4.
        let s = GVSpectrum::from_pairs(&[(2, 1)]);
        let p = compose_signed_sinh(&s, 2).unwrap();
        let expected = LaurentPoly::constant(1) - LaurentPoly::q_pow(2).scaled_int(2)
            + LaurentPoly::q_pow(4);
        assert_eq!(p, expected);
        assert_eq!(decompose_signed_sinh(&p, 2).unwrap(), s);
        // Odd genus picks up the sign: {1: 5} at ḡ = 1 is the constant 5... times (-1).
        let s1 = GVSpectrum::from_pairs(&[(1, 5)]);
        let p1 = compose_signed_sinh(&s1, 1).unwrap();
        assert_eq!(p1, LaurentPoly::constant(-5));
    }

    #[test]
    fn sinh_expand_handles_constants_and_fails_on_odd_width() {
        let expansion = sinh_expand(&LaurentPoly::constant(7)).unwrap();
        assert_eq!(expansion, BTreeMap::from([(0, BigInt::from(7))]));
        assert!(sinh_expand(&LaurentPoly::sinh_unit()).is_ok());
        assert!(sinh_expand(&LaurentPoly::q_pow(-1)).is_err());
    }

    #[test]
    fn unknown_ranges_propagate_through_add() {
        let mut a = GVSpectrum::from_pairs(&[(2, 4), (10, 1)]);
        a.set_unknown_range(4, 9);
        let b = GVSpectrum::from_pairs(&[(2, -4), (3, 1), (10, 2)]);
        let sum = a.add(&b);
        assert_eq!(sum.determined(2), Some(BigInt::zero()));
        assert_eq!(sum.determined(3), Some(BigInt::from(1)));
        assert_eq!(sum.determined(5), None);
        assert_eq!(sum.determined(10), Some(BigInt::from(3)));
        assert_eq!(sum.unknown_range(), Some((4, 9)));
        assert_eq!(
            compose_cosh(&sum),
            Err(BasisError::UnknownValues { lo: 4, hi: 9 })
        );
    }

    #[test]
    fn json_round_trip_preserves_everything() {
        let mut s = GVSpectrum::from_pairs(&[(2, -2), (3, 8)]);
        let v = s.to_json();
        assert_eq!(v["n"]["2"].to_string(), "-2");
        assert_eq!(v["unknown"], serde_json::Value::Null);
        assert_eq!(GVSpectrum::from_json(&v).unwrap(), s);
        s.set_unknown_range(4, 9);
        assert_eq!(GVSpectrum::from_json(&s.to_json()).unwrap(), s);
        // Big values survive exactly.
        let mut big = GVSpectrum::new();
        big.set(1, BigInt::parse_bytes(b"123456789012345678901234567890", 10).unwrap());
        assert_eq!(GVSpectrum::from_json(&big.to_json()).unwrap(), big);
    }

    #[test]
    fn display_forms_are_stable() {
        let mut s = GVSpectrum::from_pairs(&[(2, -2), (3, 8)]);
        assert_eq!(s.to_string(), "n_2 = -2, n_3 = 8");
        s.set_unknown_range(4, 9);
        assert_eq!(
            s.to_string(),
            "n_2 = -2, n_3 = 8, n_g undetermined for g in 4..=9"
        );
        assert_eq!(GVSpectrum::new().to_string(), "0");
    }

    #[test]
    fn sinh_form_prints_descending_braces() {
        // q^4 · {u^4 + 4u^2 + 3}
        let u = LaurentPoly::sinh_unit();
        let p = (u.pow(4) + u.pow(2).scaled_int(4) + LaurentPoly::constant(3)).shifted(8);
        let form = SinhForm::expand(&p, 4, 0).unwrap();
        assert_eq!(
            form.to_string(),
            "q^4 * {(q^-1-q)^4 + 4*(q^-1-q)^2 + 3}"
        );
        assert_eq!(form.coeff(2), BigInt::from(4));
        // Pole order shifts exponents down: q·{u + u^{-1}} from q·u^{-1}·(u^2 + 1).
        let p2 = (u.pow(2) + LaurentPoly::one()).shifted(2);
        let form2 = SinhForm::expand(&p2, 1, 1).unwrap();
        assert_eq!(form2.to_string(), "q * {(q^-1-q) + (q^-1-q)^-1}");
    }

    prop_compose! {
        fn arb_spectrum()(pairs in prop::collection::vec((0u32..=8, -50i64..=50), 0..6)) -> GVSpectrum {
            let mut s = GVSpectrum::new();
            for (g, n) in pairs {
                let cur = s.determined(g).unwrap();
                s.set(g, cur + BigInt::from(n));
            }
            s
        }
    }

    proptest! {
        #[test]
        fn cosh_decompose_inverts_compose(s in arb_spectrum()) {
            let p = compose_cosh(&s).unwrap();
            prop_assert_eq!(decompose_cosh(&p).unwrap(), s);
        }

        #[test]
        fn signed_sinh_decompose_inverts_compose(s in arb_spectrum(), gbar in 1u32..=6) {
            let mut s = s;
            let n0 = s.determined(0).unwrap();
            if !n0.is_zero() {
                s.set(0, BigInt::zero());
            }
            let p = compose_signed_sinh(&s, gbar).unwrap();
            prop_assert_eq!(decompose_signed_sinh(&p, gbar).unwrap(), s);
        }
    }
}
