//! Degree-two invariants of the total space of a single line bundle of
//! degree `2g-1` on a genus-`g` curve, read off from the perverse
//! filtration on the cohomology of the moduli space of rank-two twisted
//! Higgs bundles.
//!
//! The support pattern is the same for every base genus: the invariants
//! vanish below the base genus and above `4g-2`, the top one is `-1`,
//! and the one at the base genus is minus the Euler characteristic of
//! the PGL₂ moduli space, computed here from its Poincaré series.  For a
//! genus-two base the whole perverse characteristic polynomial is known
//! and the spectrum is complete.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::gvbasis::{decompose_cosh, BasisError, GVSpectrum};
use crate::poly::{IntPoly, LaurentPoly, PolyError, RationalFunction};

/// Errors from the twisted-Higgs side.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HiggsError {
    /// The rank-two story needs base genus at least two.
    #[error("no twisted-Higgs count for base genus {0}")]
    UnsupportedGenus(u32),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Basis(#[from] BasisError),
    /// The Poincaré series evaluated to a non-integer.
    #[error("Euler characteristic {0} is not an integer")]
    NonIntegral(String),
}

/// Euler characteristic of the moduli space of `L`-twisted PGL₂-Higgs
/// bundles of odd degree, `deg L = 2g-1`.
///
/// The signed Poincaré series of the full (GL₂, fixed-determinant-free)
/// space is `(1-t)^{2g}` times a sum of four rational terms; dividing
/// off the Jacobian factor and setting `t = 1` leaves the PGL₂ Euler
/// characteristic.  Exact rational arithmetic keeps the cancellation
/// between the four terms honest.
pub fn euler_mhat(base_genus: u32) -> Result<BigInt, HiggsError> {
    if base_genus < 2 {
        return Err(HiggsError::UnsupportedGenus(base_genus));
    }
    let g = base_genus;
    let one_minus_t = IntPoly::from_ints(&[1, -1]);
    let one_plus_t = IntPoly::from_ints(&[1, 1]);
    let one_plus_t2 = IntPoly::from_ints(&[1, 0, 1]);
    let cyclotomic = IntPoly::from_ints(&[1, 1, 1]);
    let t_high = IntPoly::monomial(1, (4 * g - 2) as usize);

    let t1 = RationalFunction::new(
        &one_minus_t.pow(2 * g - 2) * &cyclotomic.pow(2 * g),
        &one_plus_t.pow(2) * &one_plus_t2,
    )?;
    let t2 = RationalFunction::new(
        one_plus_t.pow(2 * g),
        one_plus_t2.scaled(&BigInt::from(4)),
    )?;
    // (2g - 1/(1+t)) over 2(1+t), cleared to a single fraction.
    let t3 = RationalFunction::new(
        &(&t_high * &one_minus_t.pow(2 * g - 2))
            * &IntPoly::from_ints(&[2 * g as i64 - 1, 2 * g as i64]),
        one_plus_t.pow(2).scaled(&BigInt::from(2)),
    )?;
    let t4 = RationalFunction::new(
        (&t_high * &one_minus_t.pow(2 * g - 1)).scaled(&BigInt::from(1 - 4 * g as i64)),
        one_plus_t.scaled(&BigInt::from(4)),
    )?;

    let series = t1.add(&t2).add(&t3).add(&t4);
    let value = series.eval(&BigRational::one())?;
    if !value.is_integer() {
        return Err(HiggsError::NonIntegral(value.to_string()));
    }
    Ok(value.to_integer())
}

/// Degree-two invariants of the line-bundle total space over a genus-`g`
/// base.
///
/// Genus two is complete.  For higher base genus the two ends and the
/// vanishing ranges are pinned down, while the genera strictly between
/// `g+1` and `4g-3` are marked unknown.
pub fn higgs_spectrum(base_genus: u32) -> Result<GVSpectrum, HiggsError> {
    if base_genus < 2 {
        return Err(HiggsError::UnsupportedGenus(base_genus));
    }
    if base_genus == 2 {
        // q⁻⁴ - 2q⁻² + 4 - 2q² + q⁴, the perverse characteristic of the
        // PGL₂ space; the global sign is (-1)^{dim}.
        let mut bracket = LaurentPoly::zero();
        for (k, c) in [(-2, 1), (-1, -2), (0, 4), (1, -2), (2, 1)] {
            bracket.add_term(c, 4 * k);
        }
        let jacobian = LaurentPoly::cosh_unit().pow(2 * base_genus);
        let perverse = -&(&bracket * &jacobian);
        return Ok(decompose_cosh(&perverse)?);
    }
    let g = base_genus;
    let mut spectrum = GVSpectrum::new();
    spectrum.set(g, -euler_mhat(g)?);
    spectrum.set(4 * g - 2, BigInt::from(-1));
    spectrum.set_unknown_range(g + 1, 4 * g - 3);
    Ok(spectrum)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_two_spectrum_is_complete() {
        let s = higgs_spectrum(2).unwrap();
        let expected =
            GVSpectrum::from_pairs(&[(2, -2), (3, 8), (4, -18), (5, 8), (6, -1)]);
        assert_eq!(s, expected);
        assert_eq!(s.unknown_range(), None);
        assert_eq!(s.determined(1), Some(BigInt::from(0)));
        assert_eq!(s.determined(7), Some(BigInt::from(0)));
    }

    #[test]
    fn euler_characteristic_matches_the_closed_form() {
        for g in 2..=8u32 {
            assert_eq!(
                euler_mhat(g).unwrap(),
                BigInt::from(1) << (2 * g - 3),
                "at base genus {g}"
            );
        }
    }

    #[test]
    fn high_genus_spectra_are_pinned_at_both_ends() {
        let s = higgs_spectrum(3).unwrap();
        assert_eq!(s.determined(3), Some(BigInt::from(-8)));
        assert_eq!(s.determined(10), Some(BigInt::from(-1)));
        assert_eq!(s.unknown_range(), Some((4, 9)));
        assert_eq!(s.determined(2), Some(BigInt::from(0)));
        assert_eq!(s.determined(11), Some(BigInt::from(0)));

        let s = higgs_spectrum(5).unwrap();
        assert_eq!(s.determined(5), Some(BigInt::from(-128)));
        assert_eq!(s.determined(18), Some(BigInt::from(-1)));
        assert!(s.is_unknown(6) && s.is_unknown(17));
    }

    #[test]
    fn base_genus_entry_is_minus_the_euler_characteristic() {
        for g in 2..=4u32 {
            let s = higgs_spectrum(g).unwrap();
            assert_eq!(s.determined(g), Some(-euler_mhat(g).unwrap()));
        }
    }

    #[test]
    fn small_genus_is_rejected() {
        assert_eq!(
            higgs_spectrum(1).unwrap_err(),
            HiggsError::UnsupportedGenus(1)
        );
        assert_eq!(euler_mhat(0).unwrap_err(), HiggsError::UnsupportedGenus(0));
    }
}
