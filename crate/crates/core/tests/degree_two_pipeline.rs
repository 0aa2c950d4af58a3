//! End-to-end checks of the degree-two pipeline, chaining the skein
//! specializations through Hilbert series, stratum weights and both
//! assembly sides, with the Gromov–Witten extraction as the external
//! referee.

use num_bigint::BigInt;

use gvcurves_core::assemble::{full_gv, nearby_gv};
use gvcurves_core::gvbasis::{decompose_signed_sinh, GVSpectrum};
use gvcurves_core::gwside::extract_gw_gv;
use gvcurves_core::higgs::{euler_mhat, higgs_spectrum};
use gvcurves_core::homfly::specialize_a0;
use gvcurves_core::localgv::SpectralType;
use gvcurves_core::partitions::{partitions_of, Partition};
use gvcurves_core::poly::LaurentPoly;
use gvcurves_core::strata::stratum_table;

/// Summing the weighted Hilbert series first and decomposing once must
/// agree with decomposing each series and summing spectra (the route
/// taken by `nearby_gv`).  This exercises linearity of the signed-sinh
/// basis change across every genus-two stratum at once.
#[test]
fn weighted_series_sum_decomposes_to_the_nearby_spectrum() {
    let table = stratum_table(2).unwrap();
    let mut series = LaurentPoly::zero();
    for lambda in partitions_of(6) {
        let weight = table.get(&lambda).unwrap();
        let t = SpectralType::new(lambda, 2).unwrap();
        series = &series + &t.hilb_series().unwrap().scaled_int(weight);
    }
    let spectrum = decompose_signed_sinh(&series, 6).unwrap();
    assert_eq!(spectrum, nearby_gv(2).unwrap());
    assert_eq!(spectrum, GVSpectrum::from_pairs(&[(4, 18), (5, -8), (6, 1)]));
}

/// A product of two trefoil specializations, assembled by hand into the
/// Hilbert series of the `(3,3)` spectral curve, must match what
/// `SpectralType` builds internally.
#[test]
fn hand_assembled_two_cusp_series_matches_the_spectral_type() {
    // χ = 2(2-2g) - r = -6 for g = 2, r = 2; both parts are odd, so no
    // pole correction: series = q^6·(q^2 B_3)^2·(q^{-1}-q)^6.
    let cusp = specialize_a0(3).unwrap();
    assert_eq!(cusp.pole_order(), 0);
    let series = &(cusp.numerator() * cusp.numerator()).shifted(2 * 6)
        * &LaurentPoly::sinh_unit().pow(6);
    let t = SpectralType::new(Partition::new([3, 3]), 2).unwrap();
    assert_eq!(series, t.hilb_series().unwrap());
}

/// Genus-three invariants of genus-two spectral curves come only from
/// profiles with all parts even, always with value -1, and the two
/// stratum weights 128 and -128 cancel in the assembled spectrum.
#[test]
fn genus_three_entries_come_only_from_even_profiles() {
    let table = stratum_table(2).unwrap();
    let mut weighted = BigInt::from(0);
    for lambda in partitions_of(6) {
        let t = SpectralType::new(lambda.clone(), 2).unwrap();
        let n3 = t.local_gv().unwrap().determined(3).unwrap();
        if lambda.is_even() {
            assert_eq!(n3, BigInt::from(-1), "n_3 for {lambda}");
        } else {
            assert_eq!(n3, BigInt::from(0), "n_3 for {lambda}");
        }
        weighted += n3 * BigInt::from(table.get(&lambda).unwrap());
    }
    assert_eq!(weighted, BigInt::from(0));
    assert_eq!(nearby_gv(2).unwrap().determined(3), Some(BigInt::from(0)));
}

/// At the top of the spectrum the two sides always cancel: the smooth
/// spectral curves contribute +1 at genus 4g-2 and the line-bundle side
/// -1, so the total — and the GW extraction — vanish there.
#[test]
fn top_invariants_cancel_between_the_two_sides() {
    for g in 2..=6u32 {
        let top = 4 * g - 2;
        assert_eq!(
            nearby_gv(g).unwrap().determined(top),
            Some(BigInt::from(1)),
            "nearby top at base genus {g}"
        );
        assert_eq!(
            higgs_spectrum(g).unwrap().determined(top),
            Some(BigInt::from(-1)),
            "line-bundle top at base genus {g}"
        );
        let (_, gw) = extract_gw_gv(g).unwrap();
        assert_eq!(gw.determined(top), Some(BigInt::from(0)), "GW top at base genus {g}");
    }
}

/// The lowest nonzero invariant sits at the base genus itself and is
/// carried entirely by the line-bundle side; the GW extraction confirms
/// the value -2^{2g-3} independently for every base genus.
#[test]
fn base_genus_invariant_agrees_with_the_gw_extraction() {
    for g in 2..=5u32 {
        let r = full_gv(g).unwrap();
        let expected = -euler_mhat(g).unwrap();
        assert_eq!(expected, -(BigInt::from(1) << (2 * g - 3)));
        assert_eq!(r.total.determined(g), Some(expected.clone()), "base genus {g}");
        assert_eq!(r.gw_side.determined(g), Some(expected), "GW at base genus {g}");
        for lower in 0..g {
            assert_eq!(r.total.determined(lower), Some(BigInt::from(0)));
        }
    }
}

/// The JSON report round-trips: every spectrum block parses back to the
/// value the assembly computed, and the match map covers exactly the
/// determined genera.
#[test]
fn full_report_json_survives_a_round_trip() {
    let r = full_gv(2).unwrap();
    let v = r.to_json();
    for (key, spectrum) in [
        ("nearby", &r.nearby),
        ("higgs_side", &r.higgs_side),
        ("total", &r.total),
        ("gw_side", &r.gw_side),
    ] {
        assert_eq!(&GVSpectrum::from_json(&v[key]).unwrap(), spectrum, "block {key}");
    }
    let matches = v["match"].as_object().unwrap();
    assert_eq!(matches.len(), 9);
    assert!(matches.values().all(|b| b.as_bool() == Some(true)));

    let v3 = full_gv(3).unwrap().to_json();
    let total3 = GVSpectrum::from_json(&v3["total"]).unwrap();
    assert_eq!(total3.unknown_range(), Some((4, 9)));
    assert_eq!(v3["nearby_symbolic"]["genus"], serde_json::json!(5));
}
