//! The final assembly: degree-two invariants of the rank-two total
//! space over a curve, as the sum of a line-bundle side and a
//! nearby-hyperplane side, cross-checked against the Gromov–Witten
//! extraction genus by genus.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::gvbasis::GVSpectrum;
use crate::gwside::{extract_gw_gv, GwError};
use crate::higgs::{higgs_spectrum, HiggsError};
use crate::localgv::{LocalGvError, SpectralType};
use crate::partitions::partitions_of;
use crate::strata::{stratum_table, StrataError};

/// Errors from the assembly layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AssembleError {
    /// The assembly needs base genus at least two.
    #[error("no degree-two assembly for base genus {0}")]
    UnsupportedGenus(u32),
    /// The sheaf-theoretic total disagrees with the GW extraction;
    /// `diffs` lists `(genus, total, gw)` triples.
    #[error("totals disagree with the GW side at {} genera", diffs.len())]
    Mismatch { diffs: Vec<(u32, BigInt, BigInt)> },
    #[error(transparent)]
    LocalGv(#[from] LocalGvError),
    #[error(transparent)]
    Strata(#[from] StrataError),
    #[error(transparent)]
    Higgs(#[from] HiggsError),
    #[error(transparent)]
    Gw(#[from] GwError),
}

/// A contribution that is known in closed form but deliberately not
/// evaluated, recorded as text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicTerm {
    pub genus: u32,
    pub expression: String,
}

impl fmt::Display for SymbolicTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n_{}(nearby) = {} (not evaluated)", self.genus, self.expression)
    }
}

/// Invariants of the nearby-hyperplane slice: each stratum weights the
/// fibrewise contribution of its spectral-curve type.
///
/// The genus-two table is complete.  For higher base genus only the
/// ends are pinned: the top invariant is `1` (smooth spectral curves),
/// everything below `2g-1` vanishes, and the middle range is unknown.
pub fn nearby_gv(base_genus: u32) -> Result<GVSpectrum, AssembleError> {
    match base_genus {
        0 | 1 => Err(AssembleError::UnsupportedGenus(base_genus)),
        2 => {
            let table = stratum_table(base_genus)?;
            let mut acc = GVSpectrum::new();
            for lambda in partitions_of(4 * base_genus - 2) {
                let weight = table.get(&lambda).expect("table covers every profile");
                let local = SpectralType::new(lambda, base_genus)?.local_gv()?;
                acc = acc.add(&local.scaled_int(weight));
            }
            Ok(acc)
        }
        g => {
            let mut s = GVSpectrum::new();
            s.set(4 * g - 2, BigInt::from(1));
            s.set_unknown_range(2 * g - 1, 4 * g - 3);
            Ok(s)
        }
    }
}

/// The assembled answer for one base genus, with the cross-check
/// attached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullResult {
    pub base_genus: u32,
    pub nearby: GVSpectrum,
    pub higgs_side: GVSpectrum,
    pub total: GVSpectrum,
    pub gw_side: GVSpectrum,
    /// One flag per genus where the total is determined.
    pub matches: BTreeMap<u32, bool>,
    /// The one middle nearby invariant with a closed form that is not
    /// evaluated here (higher base genus only).
    pub nearby_symbolic: Option<SymbolicTerm>,
}

impl FullResult {
    pub fn to_json(&self) -> serde_json::Value {
        let matches: serde_json::Map<String, serde_json::Value> = self
            .matches
            .iter()
            .map(|(g, ok)| (g.to_string(), serde_json::Value::from(*ok)))
            .collect();
        serde_json::json!({
            "base_genus": self.base_genus,
            "nearby": self.nearby.to_json(),
            "higgs_side": self.higgs_side.to_json(),
            "total": self.total.to_json(),
            "gw_side": self.gw_side.to_json(),
            "match": matches,
            "nearby_symbolic": self.nearby_symbolic.as_ref().map(|t| serde_json::json!({
                "genus": t.genus,
                "expression": t.expression,
            })),
        })
    }
}

fn cell(s: &GVSpectrum, g: u32) -> String {
    match s.determined(g) {
        Some(n) => n.to_string(),
        None => "?".into(),
    }
}

impl fmt::Display for FullResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:>3}  {:>8}  {:>8}  {:>8}  {:>8}  match",
            "g", "nearby", "higgs", "total", "gw"
        )?;
        for g in 0..=4 * self.base_genus {
            let flag = match self.matches.get(&g) {
                Some(true) => "ok",
                Some(false) => "MISMATCH",
                None => "-",
            };
            writeln!(
                f,
                "{:>3}  {:>8}  {:>8}  {:>8}  {:>8}  {}",
                g,
                cell(&self.nearby, g),
                cell(&self.higgs_side, g),
                cell(&self.total, g),
                cell(&self.gw_side, g),
                flag
            )?;
        }
        if let Some(term) = &self.nearby_symbolic {
            writeln!(f, "{term}")?;
        }
        Ok(())
    }
}

/// Assemble both sides, compare to the GW extraction at every genus
/// where the total is determined, and fail loudly on any disagreement.
pub fn full_gv(base_genus: u32) -> Result<FullResult, AssembleError> {
    let nearby = nearby_gv(base_genus)?;
    let higgs_side = higgs_spectrum(base_genus)?;
    let total = nearby.add(&higgs_side);
    let (_, gw_side) = extract_gw_gv(base_genus)?;

    let mut matches = BTreeMap::new();
    let mut diffs = Vec::new();
    for g in 0..=4 * base_genus {
        let Some(t) = total.determined(g) else {
            continue;
        };
        let w = gw_side.determined(g).expect("GW side is complete");
        matches.insert(g, t == w);
        if t != w {
            diffs.push((g, t, w));
        }
    }
    if !diffs.is_empty() {
        return Err(AssembleError::Mismatch { diffs });
    }

    let nearby_symbolic = (base_genus >= 3).then(|| SymbolicTerm {
        genus: 2 * base_genus - 1,
        expression: "-Σ_{even λ} e(S_λ ∩ U_ε)".into(),
    });
    Ok(FullResult {
        base_genus,
        nearby,
        higgs_side,
        total,
        gw_side,
        matches,
        nearby_symbolic,
    })
}
