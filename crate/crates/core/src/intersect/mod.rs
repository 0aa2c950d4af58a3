//! Exact intersection theory on products of curves and blown-up product
//! surfaces: everything needed to evaluate Euler characteristics of the
//! covers appearing in the stratum tables.

mod grr;
mod kunneth;
mod surface;

pub use grr::{
    chern_from_ch, degeneracy_euler, grr_push, grr_push_vanishing_sections, ChernData,
};
pub use kunneth::{express_in, CohClass, Letter, ProductRing};
pub use surface::{blowup_divisor_euler, theta_count, BlowupSurfaceClass};

/// Errors from intersection-theoretic computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntersectError {
    /// Two classes from different ambient rings were combined.
    #[error("ring mismatch: (genus, factors) {left:?} vs {right:?}")]
    RingMismatch {
        left: (u32, usize),
        right: (u32, usize),
    },
    /// An operation needed a specific number of factors.
    #[error("expected {expected} factors, got {got}")]
    Arity { expected: usize, got: usize },
    /// A zero-dimensional count was requested with the wrong number of
    /// constraints.
    #[error("need exactly {expected} parts for a zero-dimensional count, got {got}")]
    Dimension { expected: usize, got: usize },
    /// An integral that must be an integer was not.
    #[error("non-integral value: {0}")]
    NonIntegral(String),
    /// A count exceeded the machine-integer range.
    #[error("count does not fit in 64 bits")]
    Overflow,
}
