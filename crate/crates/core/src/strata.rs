//! Euler characteristics of the multiplicity strata of a generic net of
//! sections of a degree-six line bundle on a genus-two curve, restricted
//! to the complement of a generic hyperplane.
//!
//! For each partition `λ ⊢ 6` the stratum `S_λ` consists of the sections
//! whose divisor of zeros has multiplicity profile `λ`.  Each stratum is
//! presented by an explicit cover `Z → S̄_λ` (a theta-translate count, a
//! degeneracy locus, a blown-up product surface, …); the open stratum's
//! Euler number is obtained by subtracting the hyperplane section and the
//! lifts of the deeper strata from `e(Z)` and dividing by the degree of
//! the cover.  The entries sum to `e(ℂ⁴) = 1`, which is checked.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::intersect::{
    blowup_divisor_euler, chern_from_ch, degeneracy_euler, express_in, grr_push,
    grr_push_vanishing_sections, theta_count, BlowupSurfaceClass, CohClass, IntersectError,
    ProductRing,
};
use crate::partitions::{aut_factor, lift_count, partitions_of, LiftScheme, Partition};

/// Errors from assembling a stratum table.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StrataError {
    /// Only the genus-two table is implemented.
    #[error("no stratum table for base genus {0}")]
    UnsupportedGenus(u32),
    /// A partition of the wrong degree for the linear system.
    #[error("partition of degree {got} where {expected} is required")]
    WrongDegree { expected: u32, got: u32 },
    /// An internal consistency check failed: a division that must be
    /// exact was not, or the entries do not sum to 1.
    #[error("inconsistent stratum table: {detail}")]
    InconsistentTable { detail: String },
    #[error(transparent)]
    Intersect(#[from] IntersectError),
}

/// How the Euler number of a cover (or of its hyperplane section) was
/// obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    /// Zero-dimensional count of translated theta divisors.
    ThetaCount,
    /// Degree of the hyperplane class, expanded into theta-translate
    /// counts by fixing the vanishing point of the cutting section.
    HyperplaneThetaCount,
    /// Euler number of a degeneracy locus in a triple product, via the
    /// pushed-forward jet bundle and the Thom–Porteous formula.
    DegeneracyLocus,
    /// Blown-up product surface: `e(C×C)` plus one per centre, with the
    /// centres counted by the top Chern class of the section bundle.
    BlowupSurface,
    /// Adjunction on the moving divisor class in the blown-up product.
    BlowupDivisor,
    /// The locus misses a generic hyperplane (or is itself empty).
    Empty,
    /// A small case recorded together with its one-line derivation.
    Recorded(&'static str),
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::ThetaCount => write!(f, "theta-translate count"),
            Source::HyperplaneThetaCount => write!(f, "hyperplane degree via theta translates"),
            Source::DegeneracyLocus => write!(f, "degeneracy locus"),
            Source::BlowupSurface => write!(f, "blown-up product surface"),
            Source::BlowupDivisor => write!(f, "adjunction on the blow-up"),
            Source::Empty => write!(f, "empty"),
            Source::Recorded(note) => write!(f, "{note}"),
        }
    }
}

/// The two Euler numbers feeding a stratum entry: the cover `Z` and its
/// hyperplane section `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseInputs {
    pub euler_z: i64,
    pub euler_d: i64,
    pub z_source: Source,
    pub d_source: Source,
}

fn rat_to_i64(r: &BigRational, what: &str) -> Result<i64, StrataError> {
    if !r.is_integer() {
        return Err(StrataError::InconsistentTable {
            detail: format!("{what} = {r} is not an integer"),
        });
    }
    r.to_integer()
        .to_i64()
        .ok_or(StrataError::Intersect(IntersectError::Overflow))
}

/// The cover data for one stratum of the genus-two table.  Returns
/// `None` for the open stratum of simple zeros, whose entry is fixed at
/// the end by the requirement that the whole table sum to 1.
pub fn case_inputs(base_genus: u32, lambda: &Partition) -> Result<Option<CaseInputs>, StrataError> {
    if base_genus != 2 {
        return Err(StrataError::UnsupportedGenus(base_genus));
    }
    let degree = 4 * base_genus - 2;
    if lambda.sum() != degree {
        return Err(StrataError::WrongDegree {
            expected: degree,
            got: lambda.sum(),
        });
    }
    let inputs = match lambda.parts() {
        // A full-multiplicity zero would force the sixth power of a point
        // to hit the pencil bundle; a generic choice avoids that divisor.
        [6] => CaseInputs {
            euler_z: 0,
            euler_d: 0,
            z_source: Source::Empty,
            d_source: Source::Empty,
        },
        [5, 1] => CaseInputs {
            euler_z: theta_count(&[5, 1], base_genus)?,
            euler_d: 0,
            z_source: Source::ThetaCount,
            d_source: Source::Empty,
        },
        [4, 2] => CaseInputs {
            euler_z: theta_count(&[4, 2], base_genus)?,
            euler_d: 0,
            z_source: Source::ThetaCount,
            d_source: Source::Empty,
        },
        [4, 1, 1] => CaseInputs {
            // Each point of C carries a unique section with a four-fold
            // zero there, so the cover is a copy of the curve itself.
            euler_z: 2 - 2 * base_genus as i64,
            // Cutting with the section vanishing at p: the four-fold zero
            // can sit at p (multiplicity four, one point) or p is one of
            // the two simple zeros.
            euler_d: 4 + theta_count(&[4, 1], base_genus)?,
            z_source: Source::Recorded(
                "a copy of the curve: one section per four-fold zero",
            ),
            d_source: Source::HyperplaneThetaCount,
        },
        [3, 3] => CaseInputs {
            euler_z: theta_count(&[3, 3], base_genus)?,
            euler_d: 0,
            z_source: Source::ThetaCount,
            d_source: Source::Empty,
        },
        [3, 2, 1] => CaseInputs {
            euler_z: {
                let jets = grr_push(&[3, 2, 1], 6, ProductRing::new(base_genus, 4))?;
                degeneracy_euler(&jets)?
            },
            // The hyperplane is equivalent to 3·{p}×C×C + 2·C×{p}×C +
            // C×C×{p}; each summand is a theta-translate count in the
            // remaining two multiplicities.
            euler_d: 3 * theta_count(&[2, 1], base_genus)?
                + 2 * theta_count(&[3, 1], base_genus)?
                + theta_count(&[3, 2], base_genus)?,
            z_source: Source::DegeneracyLocus,
            d_source: Source::HyperplaneThetaCount,
        },
        [3, 1, 1, 1] => CaseInputs {
            // Sections with a triple zero at a moving point form a line
            // bundle pencil: a P¹-bundle over the curve.
            euler_z: 2 * (2 - 2 * base_genus as i64),
            // The hyperplane meets each fibre line once, cutting out a
            // copy of the curve.
            euler_d: 2 - 2 * base_genus as i64,
            z_source: Source::Recorded("a line bundle pencil over the curve"),
            d_source: Source::Recorded("one point per fibre line: a copy of the curve"),
        },
        [2, 2, 2] => CaseInputs {
            // Squares of sections of the sixteen square roots of the
            // pencil bundle: sixteen disjoint conics.
            euler_z: 16 * 2,
            euler_d: 16 * 2,
            z_source: Source::Recorded("sixteen conics, one per square root"),
            d_source: Source::Recorded("a generic hyperplane meets each conic twice"),
        },
        [2, 2, 1, 1] => {
            let ring = ProductRing::new(base_genus, 3);
            let sections = grr_push_vanishing_sections(&[2, 2], 6, ring)?;
            // Centres of the blow-up: points of C×C where the moving
            // part of the doubly-vanishing pencil drops rank.
            let chern = chern_from_ch(&sections)?;
            let centres = rat_to_i64(&chern[1].integrate(), "centre count")?;
            let target = sections.ring();
            let dict = [
                CohClass::point_at(target, 0),
                CohClass::point_at(target, 1),
                CohClass::diagonal(target, 0, 1),
            ];
            let ch1 = express_in(&dict, &sections.ch(1)).ok_or_else(|| {
                StrataError::InconsistentTable {
                    detail: "section-bundle ch₁ is not spanned by fibres and diagonal".into(),
                }
            })?;
            // The moving linear system is the dual of the section line:
            // negate ch₁ to get the divisor class before blowing up.
            let class = BlowupSurfaceClass::proper_transform(
                -rat_to_i64(&ch1[0], "fibre coefficient")?,
                -rat_to_i64(&ch1[1], "fibre coefficient")?,
                -rat_to_i64(&ch1[2], "diagonal coefficient")?,
                centres,
                base_genus,
            );
            let chi_surface = (2 - 2 * base_genus as i64) * (2 - 2 * base_genus as i64);
            CaseInputs {
                euler_z: chi_surface + centres,
                euler_d: blowup_divisor_euler(&class),
                z_source: Source::BlowupSurface,
                d_source: Source::BlowupDivisor,
            }
        }
        [2, 1, 1, 1, 1] => CaseInputs {
            // A net of sections with a double zero at a moving point: a
            // P²-bundle over the curve.
            euler_z: 3 * (2 - 2 * base_genus as i64),
            // The hyperplane cuts each plane fibre in a line.
            euler_d: 2 * (2 - 2 * base_genus as i64),
            z_source: Source::Recorded("a section net over the curve: a plane bundle"),
            d_source: Source::Recorded("a line per plane fibre"),
        },
        [1, 1, 1, 1, 1, 1] => return Ok(None),
        _ => unreachable!("all partitions of 6 are handled"),
    };
    Ok(Some(inputs))
}

/// The finished table: one Euler number per multiplicity profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumTable {
    base_genus: u32,
    entries: BTreeMap<Partition, i64>,
}

impl StratumTable {
    pub fn base_genus(&self) -> u32 {
        self.base_genus
    }

    pub fn get(&self, lambda: &Partition) -> Option<i64> {
        self.entries.get(lambda).copied()
    }

    pub fn entries(&self) -> &BTreeMap<Partition, i64> {
        &self.entries
    }

    /// Sum of all entries; the strata partition an affine space, so this
    /// is 1.
    pub fn total(&self) -> i64 {
        self.entries.values().sum()
    }

    /// Entries as a JSON object, coarsest profile first.
    pub fn to_json(&self) -> serde_json::Value {
        let mut entries = serde_json::Map::new();
        for lambda in partitions_of(4 * self.base_genus - 2) {
            if let Some(e) = self.get(&lambda) {
                entries.insert(lambda.to_string(), serde_json::Value::from(e));
            }
        }
        serde_json::json!({
            "base_genus": self.base_genus,
            "entries": serde_json::Value::Object(entries),
            "total": self.total(),
        })
    }
}

impl fmt::Display for StratumTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lambdas = partitions_of(4 * self.base_genus - 2);
        let width = lambdas
            .iter()
            .map(|l| l.to_string().len())
            .max()
            .unwrap_or(0);
        for lambda in &lambdas {
            if let Some(e) = self.get(lambda) {
                writeln!(f, "{:<width$}  {:>6}", lambda.to_string(), e)?;
            }
        }
        write!(f, "{:<width$}  {:>6}", "total", self.total())
    }
}

/// Build the full table of Euler numbers `e(S_λ ∩ U)` for a genus-two
/// base, coarsest profile first, by inclusion–exclusion down the
/// partition lattice.
pub fn stratum_table(base_genus: u32) -> Result<StratumTable, StrataError> {
    if base_genus != 2 {
        return Err(StrataError::UnsupportedGenus(base_genus));
    }
    let degree = 4 * base_genus - 2;
    let mut entries: BTreeMap<Partition, i64> = BTreeMap::new();
    let lookup = |entries: &BTreeMap<Partition, i64>, mu: &Partition| -> Result<i64, StrataError> {
        entries
            .get(mu)
            .copied()
            .ok_or_else(|| StrataError::InconsistentTable {
                detail: format!("entry {mu} needed before it was computed"),
            })
    };

    for lambda in partitions_of(degree) {
        let Some(inputs) = case_inputs(base_genus, &lambda)? else {
            // Simple zeros: everything else is known, so the entry is
            // pinned by e(ℂ⁴) = 1.
            let rest: i64 = entries.values().sum();
            entries.insert(lambda, 1 - rest);
            continue;
        };
        let entry = if lambda.parts() == [2, 2, 2] {
            // The sixteen conics each map isomorphically, and their
            // closures together meet the deeper locus in a single copy
            // of the double-double stratum: no covering factor here.
            inputs.euler_z - inputs.euler_d
                - lookup(&entries, &Partition::new([4, 2]))?
        } else {
            let scheme = LiftScheme::ones_symmetrized(&lambda);
            let mut acc = inputs.euler_z - inputs.euler_d;
            for mu in lambda.coarsenings() {
                let lifts = lift_count(&scheme, &mu) as i64;
                if lifts != 0 {
                    acc -= lifts * lookup(&entries, &mu)?;
                }
            }
            let aut = aut_factor(&lambda, 1) as i64;
            if acc % aut != 0 {
                return Err(StrataError::InconsistentTable {
                    detail: format!("cover degree {aut} does not divide {acc} at {lambda}"),
                });
            }
            acc / aut
        };
        entries.insert(lambda, entry);
    }

    let table = StratumTable {
        base_genus,
        entries,
    };
    if table.total() != 1 {
        return Err(StrataError::InconsistentTable {
            detail: format!("entries sum to {}, expected 1", table.total()),
        });
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.iter().copied())
    }

    #[test]
    fn genus_two_table() {
        let table = stratum_table(2).unwrap();
        let expected: &[(&[u32], i64)] = &[
            (&[6], 0),
            (&[5, 1], 50),
            (&[4, 2], 128),
            (&[4, 1, 1], -216),
            (&[3, 3], 81),
            (&[3, 2, 1], -668),
            (&[3, 1, 1, 1], 542),
            (&[2, 2, 2], -128),
            (&[2, 2, 1, 1], 968),
            (&[2, 1, 1, 1, 1], -1012),
            (&[1, 1, 1, 1, 1, 1], 256),
        ];
        assert_eq!(table.entries().len(), expected.len());
        for (parts, value) in expected {
            assert_eq!(table.get(&p(parts)), Some(*value), "at {:?}", parts);
        }
        assert_eq!(table.total(), 1);
    }

    #[test]
    fn curve_cover_inputs() {
        // One copy of the curve, cut by the hyperplane in 4 + 32 points.
        let inputs = case_inputs(2, &p(&[4, 1, 1])).unwrap().unwrap();
        assert_eq!((inputs.euler_z, inputs.euler_d), (-2, 36));
        assert_eq!(inputs.d_source, Source::HyperplaneThetaCount);
    }

    #[test]
    fn degeneracy_cover_inputs() {
        let inputs = case_inputs(2, &p(&[3, 2, 1])).unwrap().unwrap();
        assert_eq!((inputs.euler_z, inputs.euler_d), (-196, 132));
        assert_eq!(inputs.z_source, Source::DegeneracyLocus);
    }

    #[test]
    fn blowup_cover_inputs() {
        let inputs = case_inputs(2, &p(&[2, 2, 1, 1])).unwrap().unwrap();
        assert_eq!((inputs.euler_z, inputs.euler_d), (36, -176));
        assert_eq!(inputs.z_source, Source::BlowupSurface);
        assert_eq!(inputs.d_source, Source::BlowupDivisor);
    }

    #[test]
    fn simple_zero_stratum_is_the_complement() {
        assert_eq!(case_inputs(2, &p(&[1; 6])).unwrap(), None);
        // Its entry makes the table close up at 1.
        let table = stratum_table(2).unwrap();
        assert_eq!(table.get(&p(&[1; 6])), Some(256));
    }

    #[test]
    fn input_validation() {
        assert_eq!(
            stratum_table(3).unwrap_err(),
            StrataError::UnsupportedGenus(3)
        );
        assert_eq!(
            case_inputs(2, &p(&[4, 3])).unwrap_err(),
            StrataError::WrongDegree {
                expected: 6,
                got: 7
            }
        );
    }

    #[test]
    fn json_lists_coarse_profiles_first() {
        let table = stratum_table(2).unwrap();
        let json = table.to_json();
        let keys: Vec<&String> = json["entries"].as_object().unwrap().keys().collect();
        assert_eq!(keys.first().unwrap().as_str(), "(6)");
        assert_eq!(keys.last().unwrap().as_str(), "(1,1,1,1,1,1)");
        assert_eq!(json["entries"]["(2,2,1,1)"], 968);
        assert_eq!(json["total"], 1);
    }

    #[test]
    fn table_renders_aligned() {
        let table = stratum_table(2).unwrap();
        let text = table.to_string();
        assert!(text.lines().next().unwrap().starts_with("(6)"));
        let last: Vec<&str> = text.lines().last().unwrap().split_whitespace().collect();
        assert_eq!(last, ["total", "1"]);
        assert_eq!(text.lines().count(), 12);
    }
}
