//! Grothendieck–Riemann–Roch pushforwards along `μ: C×C^m → C^m`.
//!
//! For weights `λ = (λ_1, ..., λ_m)` let `W = Σ λ_i·Δ_{0i}` be the
//! weighted union of graph divisors in `C×C^m`.  The fibrewise jets of a
//! degree-`d` line bundle `L²` along `W` form the sheaf
//! `E = μ_*(σ*L² ⊗ O_W)` of rank `Σ λ_i`, whose Chern character GRR
//! computes as
//!
//! ```text
//! ch(E) = μ_*( (1 + d·η) · (1 - exp(-W)) · (1 - (g-1)·η) ),   η = pt_0.
//! ```
//!
//! Sections of `L²` vanishing along `W` are the K-theoretic complement
//! `μ_!(σ*L²) - E`, with `ch(μ_!(σ*L²)) = (d - g + 1)·1`.

use num_rational::BigRational;
use num_traits::One;

use super::kunneth::{CohClass, Letter, ProductRing};
use super::IntersectError;

/// Chern-character data of a pushforward: `ch[d]` is the degree-`2d`
/// component, a class on the target product `C^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernData {
    ring: ProductRing,
    ch: Vec<CohClass>,
}

impl ChernData {
    pub fn ring(&self) -> ProductRing {
        self.ring
    }

    /// The degree-`2d` Chern character component (zero beyond the stored
    /// range).
    pub fn ch(&self, d: usize) -> CohClass {
        self.ch
            .get(d)
            .cloned()
            .unwrap_or_else(|| CohClass::zero(self.ring))
    }

    /// The rank: coefficient of the unit word in `ch[0]`.
    pub fn rank(&self) -> BigRational {
        let all_one = vec![Letter::One; self.ring.factors];
        self.ch(0)
            .terms()
            .find(|(w, _)| **w == all_one)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| BigRational::from_integer(0.into()))
    }
}

/// Chern character of the weighted-jet bundle `E` on `C^m`: `ring` is the
/// *source* `C×C^m`, so it must have `weights.len() + 1` factors.
pub fn grr_push(
    weights: &[u32],
    deg_l2: i64,
    ring: ProductRing,
) -> Result<ChernData, IntersectError> {
    if ring.factors != weights.len() + 1 {
        return Err(IntersectError::Arity {
            expected: weights.len() + 1,
            got: ring.factors,
        });
    }
    let m = weights.len();
    let unit = CohClass::unit(ring);
    let eta = CohClass::point_at(ring, 0);

    let mut w = CohClass::zero(ring);
    for (i, &wi) in weights.iter().enumerate() {
        w = w.add(&CohClass::diagonal(ring, 0, i + 1).scale_int(wi as i64))?;
    }

    // 1 - exp(-W) = Σ_{k≥1} (-1)^{k+1} W^k / k!; W is nilpotent, so the
    // sum stops by itself.
    let mut one_minus_exp = CohClass::zero(ring);
    let mut w_pow = unit.clone();
    let mut k_factorial = BigRational::one();
    for k in 1..=(m as i64 + 1) {
        w_pow = w_pow.mul(&w)?;
        if w_pow.is_zero() {
            break;
        }
        k_factorial *= BigRational::from_integer(k.into());
        let coeff = if k % 2 == 1 {
            k_factorial.recip()
        } else {
            -k_factorial.recip()
        };
        one_minus_exp = one_minus_exp.add(&w_pow.scale(&coeff))?;
    }

    let ch_line = unit.add(&eta.scale_int(deg_l2))?;
    let todd = unit.sub(&eta.scale_int(ring.genus as i64 - 1))?;
    let total = ch_line.mul(&one_minus_exp)?.mul(&todd)?;

    let target = ProductRing::new(ring.genus, m);
    let mut ch = Vec::with_capacity(m + 1);
    for d in 0..=m {
        // Pushing forward drops the cohomological degree by 2.
        ch.push(total.component(2 * (d as i64 + 1)).push_first()?);
    }
    Ok(ChernData { ring: target, ch })
}

/// Chern character of the bundle of sections of `L²` vanishing along the
/// weighted divisor: `(d - g + 1)·1 - ch(E)`.
pub fn grr_push_vanishing_sections(
    weights: &[u32],
    deg_l2: i64,
    ring: ProductRing,
) -> Result<ChernData, IntersectError> {
    let jets = grr_push(weights, deg_l2, ring)?;
    let target = jets.ring();
    let full_rank = deg_l2 - ring.genus as i64 + 1;
    let mut ch = Vec::with_capacity(jets.ch.len());
    ch.push(
        CohClass::unit(target)
            .scale_int(full_rank)
            .sub(&jets.ch(0))?,
    );
    for d in 1..jets.ch.len() {
        ch.push(jets.ch(d).neg());
    }
    Ok(ChernData { ring: target, ch })
}

/// Chern classes `c_1, c_2, c_3` from Chern characters via the Newton
/// identities.
pub fn chern_from_ch(data: &ChernData) -> Result<Vec<CohClass>, IntersectError> {
    let ch1 = data.ch(1);
    let ch2 = data.ch(2);
    let ch3 = data.ch(3);
    let half = BigRational::new(1.into(), 2.into());
    let sixth = BigRational::new(1.into(), 6.into());
    let c1 = ch1.clone();
    let c2 = ch1.mul(&ch1)?.scale(&half).sub(&ch2)?;
    let c3 = ch1
        .mul(&ch1)?
        .mul(&ch1)?
        .scale(&sixth)
        .sub(&ch1.mul(&ch2)?)?
        .add(&ch3.scale_int(2))?;
    Ok(vec![c1, c2, c3])
}

/// Euler characteristic of the rank-degeneracy locus of a generic
/// morphism into the jet bundle over `C^{×3}`:
///
/// ```text
/// e(Z) = ∫ c_2·c_1(T) - c_1·c_2 - c_3
/// ```
///
/// with `c_1(T) = (2-2g)·(F_1 + F_2 + F_3)` the tangent class of the
/// ambient threefold.
pub fn degeneracy_euler(data: &ChernData) -> Result<i64, IntersectError> {
    let ring = data.ring();
    if ring.factors != 3 {
        return Err(IntersectError::Arity {
            expected: 3,
            got: ring.factors,
        });
    }
    let c = chern_from_ch(data)?;
    let mut tangent = CohClass::zero(ring);
    for i in 0..3 {
        tangent = tangent.add(&CohClass::point_at(ring, i))?;
    }
    let tangent = tangent.scale_int(2 - 2 * ring.genus as i64);
    let val = c[1].mul(&tangent)?.integrate() - c[0].mul(&c[1])?.integrate() - c[2].integrate();
    if !val.is_integer() {
        return Err(IntersectError::NonIntegral(format!(
            "degeneracy Euler characteristic {val}"
        )));
    }
    i64::try_from(val.to_integer()).map_err(|_| IntersectError::Overflow)
}
