//! Zero-dimensional theta-translate counts and Euler characteristics of
//! divisors on blown-up products of curves.

use super::IntersectError;

/// The number of solutions to a zero-dimensional intersection of
/// translated theta divisors in the Jacobian: `g! · Π a_i²`, with one
/// factor per constrained point.
///
/// The count is zero-dimensional only when there are exactly `genus`
/// constraints; anything else is a dimension error.
pub fn theta_count(parts: &[i64], genus: u32) -> Result<i64, IntersectError> {
    if parts.len() != genus as usize {
        return Err(IntersectError::Dimension {
            expected: genus as usize,
            got: parts.len(),
        });
    }
    let mut acc: i128 = (1..=genus as i128).product();
    for &a in parts {
        acc *= (a as i128) * (a as i128);
    }
    i64::try_from(acc).map_err(|_| IntersectError::Overflow)
}

/// A divisor class on the blow-up `Z → C×C` of a product surface at
/// `n_points` distinct points:
///
/// ```text
/// D = a1·f1 + a2·f2 + b·Δ - e·E
/// ```
///
/// with `f_i` the fibre classes, `Δ` the diagonal, and `E` the sum of the
/// exceptional curves.  The intersection form is `f_i² = 0`, `f1·f2 = 1`,
/// `Δ·f_i = 1`, `Δ² = 2-2g`, `E·π*(·) = 0`, `E² = -n_points`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlowupSurfaceClass {
    pub a1: i64,
    pub a2: i64,
    pub b: i64,
    /// Coefficient of the exceptional sum; 1 for a proper transform of a
    /// curve through all the blown-up points.
    pub e: i64,
    pub n_points: i64,
    pub genus: u32,
}

impl BlowupSurfaceClass {
    /// The proper transform of `a1·f1 + a2·f2 + b·Δ` through all
    /// `n_points` centres (multiplicity one each).
    pub fn proper_transform(a1: i64, a2: i64, b: i64, n_points: i64, genus: u32) -> Self {
        BlowupSurfaceClass {
            a1,
            a2,
            b,
            e: 1,
            n_points,
            genus,
        }
    }
}

/// Euler characteristic of a (possibly disconnected) smooth divisor in
/// the class, by adjunction: `e(D) = -(K_Z + D)·D`.
pub fn blowup_divisor_euler(class: &BlowupSurfaceClass) -> i64 {
    let g = class.genus as i64;
    // K_Z + D = π*(p·f1 + q·f2 + b·Δ) + (1-e)·E.
    let p = class.a1 + 2 * g - 2;
    let q = class.a2 + 2 * g - 2;
    let pullback_part = p * class.a2
        + q * class.a1
        + class.b * (p + q + class.a1 + class.a2)
        + class.b * class.b * (2 - 2 * g);
    let exceptional_part = class.e * (1 - class.e) * class.n_points;
    -(pullback_part + exceptional_part)
}
