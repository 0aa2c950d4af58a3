//! Report builders behind the `gvcurves` binary.
//!
//! Each subcommand maps to one function here returning the finished
//! text, so the same code is callable from tests.  The [`checks`]
//! module holds the acceptance criteria run by `gvcurves check` and by
//! the acceptance test suite.

pub mod checks;

use std::fmt::Write as _;

use gvcurves_core::assemble::{full_gv, AssembleError};
use gvcurves_core::gwside::{extract_gw_gv, gw_t2_coefficient};
use gvcurves_core::higgs::{euler_mhat, higgs_spectrum};
use gvcurves_core::homfly::{homfly_t2, specialize_a0};
use gvcurves_core::intersect::{
    chern_from_ch, degeneracy_euler, grr_push, CohClass, ProductRing,
};
use gvcurves_core::localgv::SpectralType;
use gvcurves_core::partitions::Partition;
use gvcurves_core::strata::stratum_table;

/// Command failures, split by how the process should exit: a
/// [`CliError::Mismatch`] means a cross-check between two independently
/// computed quantities failed (exit code 2, the regression signal),
/// everything else is a usage or computation error (exit code 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Mismatch(String),
    Failure(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Mismatch(msg) | CliError::Failure(msg) => write!(f, "{msg}"),
        }
    }
}

fn fail(e: impl std::fmt::Display) -> CliError {
    CliError::Failure(e.to_string())
}

/// `homfly --n <k>`: the skein solution and its `a = 0` slice.
pub fn homfly_report(n: u32) -> Result<String, CliError> {
    let p = homfly_t2(n);
    let spec = specialize_a0(n).map_err(fail)?;
    let form = spec.sinh_form(n).map_err(fail)?;
    let mut out = String::new();
    writeln!(out, "P(T_{{2,{n}}}) = {p}").unwrap();
    writeln!(out, "[(q/a)^{} P(T_{{2,{n}}})]_{{a=0}} = {form}", n - 1).unwrap();
    Ok(out)
}

/// `contrib --partition <csv> --base-genus <g>`: one spectral-curve
/// type's Hilbert series and local GV spectrum.
pub fn contrib_report(lambda: &Partition, base_genus: u32) -> Result<String, CliError> {
    let t = SpectralType::new(lambda.clone(), base_genus).map_err(fail)?;
    let form = t.sinh_form().map_err(fail)?;
    let spectrum = t.local_gv().map_err(fail)?;
    let mut out = String::new();
    writeln!(out, "spectral type {lambda} over base genus {base_genus}").unwrap();
    writeln!(
        out,
        "arithmetic genus {}, curve Euler characteristic {}",
        t.gbar(),
        t.spectral_euler()
    )
    .unwrap();
    writeln!(out, "Hilbert series = {form}").unwrap();
    writeln!(out, "local GV: {spectrum}").unwrap();
    Ok(out)
}

/// `strata --base-genus <g>`: the stratum Euler-number table.
pub fn strata_report(base_genus: u32) -> Result<String, CliError> {
    let table = stratum_table(base_genus).map_err(fail)?;
    Ok(format!("{table}\n"))
}

/// `degeneracy --weights <csv> --genus <g> --degL2 <d>`: the pushforward
/// rank, the intersection numbers feeding the degeneracy-locus formula,
/// and the resulting Euler characteristic.
pub fn degeneracy_report(weights: &[u32], genus: u32, deg_l2: i64) -> Result<String, CliError> {
    let ring = ProductRing::new(genus, weights.len() + 1);
    let data = grr_push(weights, deg_l2, ring).map_err(fail)?;
    let target = data.ring();
    let ch1 = data.ch(1);
    let ch1_cubed = ch1
        .mul(&ch1)
        .and_then(|s| s.mul(&ch1))
        .map_err(fail)?
        .integrate();
    let ch1_ch2 = ch1.mul(&data.ch(2)).map_err(fail)?.integrate();
    let chern = chern_from_ch(&data).map_err(fail)?;
    let mut tangent = CohClass::zero(target);
    for i in 0..target.factors {
        tangent = tangent.add(&CohClass::point_at(target, i)).map_err(fail)?;
    }
    let tangent = tangent.scale_int(2 - 2 * genus as i64);
    let c2_c1t = chern[1].mul(&tangent).map_err(fail)?.integrate();
    let euler = degeneracy_euler(&data).map_err(fail)?;

    let weight_list = weights
        .iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join(",");
    let mut out = String::new();
    writeln!(
        out,
        "weighted-jet pushforward: weights ({weight_list}), genus {genus}, deg L^2 = {deg_l2}"
    )
    .unwrap();
    writeln!(out, "rank            = {}", data.rank()).unwrap();
    writeln!(out, "int ch_1^3      = {ch1_cubed}").unwrap();
    writeln!(out, "int ch_1 ch_2   = {ch1_ch2}").unwrap();
    writeln!(out, "int c_2 c_1(T)  = {c2_c1t}").unwrap();
    writeln!(out, "e(Z)            = {euler}").unwrap();
    Ok(out)
}

/// `higgs --base-genus <g>`: the twisted-Higgs side.
pub fn higgs_report(base_genus: u32) -> Result<String, CliError> {
    let spectrum = higgs_spectrum(base_genus).map_err(fail)?;
    let euler = euler_mhat(base_genus).map_err(fail)?;
    let mut out = String::new();
    writeln!(out, "twisted-Higgs side, base genus {base_genus}").unwrap();
    writeln!(out, "spectrum: {spectrum}").unwrap();
    writeln!(
        out,
        "PGL2 moduli Euler characteristic: {euler} (closed form 2^{})",
        2 * base_genus - 3
    )
    .unwrap();
    Ok(out)
}

/// `gw --base-genus <g>`: the degree-two correlator and the invariants
/// extracted from it.
pub fn gw_report(base_genus: u32) -> Result<String, CliError> {
    let correlator = gw_t2_coefficient(base_genus).map_err(fail)?;
    let (degree1, degree2) = extract_gw_gv(base_genus).map_err(fail)?;
    let mut out = String::new();
    writeln!(
        out,
        "degree-two correlator, base genus {base_genus}: {correlator}   (w = Q^1/2 - Q^-1/2)"
    )
    .unwrap();
    writeln!(out, "degree-one invariants: {degree1}").unwrap();
    writeln!(out, "degree-two invariants: {degree2}").unwrap();
    Ok(out)
}

/// `full --base-genus <g> [--json]`: assemble both sides and cross-check
/// against the GW extraction; a disagreement is a [`CliError::Mismatch`].
pub fn full_report(base_genus: u32, json: bool) -> Result<String, CliError> {
    match full_gv(base_genus) {
        Ok(result) => {
            if json {
                let mut text = serde_json::to_string_pretty(&result.to_json())
                    .expect("report JSON serializes");
                text.push('\n');
                Ok(text)
            } else {
                Ok(result.to_string())
            }
        }
        Err(AssembleError::Mismatch { diffs }) => {
            let mut msg = String::from("GV/GW mismatch:\n");
            for (g, total, gw) in diffs {
                writeln!(msg, "  genus {g}: assembled {total}, GW extraction {gw}").unwrap();
            }
            Err(CliError::Mismatch(msg))
        }
        Err(e) => Err(fail(e)),
    }
}

/// `check`: run every acceptance criterion; the second component is
/// `true` only if all of them passed.
pub fn check_report() -> (String, bool) {
    let mut out = String::new();
    let mut passed = 0usize;
    let criteria = checks::all();
    let total = criteria.len();
    for criterion in criteria {
        match (criterion.run)() {
            Ok(detail) => {
                passed += 1;
                writeln!(out, "{:>2}  {:<28} PASS  {detail}", criterion.id, criterion.name)
                    .unwrap();
            }
            Err(reason) => {
                writeln!(out, "{:>2}  {:<28} FAIL  {reason}", criterion.id, criterion.name)
                    .unwrap();
            }
        }
    }
    writeln!(out, "{passed} of {total} criteria passed").unwrap();
    (out, passed == total)
}
