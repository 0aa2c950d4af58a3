//! The exact polynomial rings everything else is built from.
//!
//! Three flavours are needed:
//!
//! * [`LaurentPoly`] — sparse Laurent polynomials in `s = q^{1/2}` with
//!   `BigInt` coefficients.  Half-integer powers of `q` show up in HOMFLY
//!   normalizations, so the internal variable is the square root and all
//!   exponents are stored doubled.
//! * [`BiLaurentPoly`] / [`BiLaurentFrac`] — two-variable Laurent
//!   polynomials in `(a, q)` and fractions thereof whose denominator is a
//!   power of `q − q^{-1}`.  These carry the HOMFLY skein recursion.
//! * [`IntPoly`] / [`RationalFunction`] — dense integer polynomials in a
//!   single variable `t` and reduced quotients of them, used to evaluate
//!   Poincaré-series expressions at `t = 1`.

mod bilaurent;
mod laurent;
mod ratfunc;

pub use bilaurent::{BiLaurentFrac, BiLaurentPoly};
pub use laurent::{LaurentPoly, Substitution};
pub use ratfunc::{IntPoly, RationalFunction};

/// Errors from polynomial arithmetic and evaluation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    /// A substitution or evaluation required integral powers of `q`, but
    /// the polynomial has a term with the given odd `s`-exponent.
    #[error("operation needs integral q-powers, found exponent {0}/2")]
    OddPower(i64),
    /// A rational function was evaluated at a zero of its (reduced)
    /// denominator.
    #[error("denominator vanishes at t = {0}")]
    Pole(String),
    /// Division by the zero polynomial.
    #[error("division by zero polynomial")]
    DivisionByZero,
}
