//! Exact arithmetic for degree-two Gopakumar–Vafa invariants of local curves.
//!
//! A local curve is the total space of a rank-two bundle `N` on a smooth
//! projective curve `C` with `det N ≅ ω_C`.  Its degree-two invariants
//! `n_{g,2[C]}` split into a twisted-Higgs-bundle part and a
//! nearby-hyperplane part.  The crate assembles both sides from exact
//! building blocks and cross-checks the total against the invariants
//! extracted from the degree-two Gromov–Witten series.  All arithmetic is
//! integer or rational; there is no floating point anywhere.
//!
//! Module layout, roughly in dependency order:
//!
//! * [`poly`] — Laurent polynomials in `q^{1/2}`, two-variable Laurent
//!   fractions with a `(q − q^{-1})` pole, and rational functions in `t`.
//! * [`gvbasis`] — change of basis between Euler-characteristic polynomials
//!   and GV spectra (cosh and signed-sinh bases).
//! * [`homfly`] — HOMFLY polynomials of `(2,n)` torus knots and their
//!   `a = 0` specializations.
//! * [`partitions`] — integer partitions, coarsening, lift counts.
//! * [`localgv`] — local GV contributions of singular spectral curves via
//!   Hilbert-scheme Euler generating functions.
//! * [`intersect`] — the Künneth cohomology ring of products of curves,
//!   Grothendieck–Riemann–Roch pushforwards, degeneracy loci, theta
//!   counts, blown-up surface divisors.
//! * [`strata`] — the genus-2 stratum Euler-characteristic table of the
//!   nearby hyperplane.
//! * [`higgs`] — the twisted-Higgs side of the decomposition.
//! * [`gwside`] — Gromov–Witten invariants of degree ≤ 2 for comparison.
//! * [`assemble`] — the final assembly `n_{g,2[C]}(Tot_C(N))` and the
//!   GV/GW match report.

pub mod poly;

pub mod gvbasis;

pub mod homfly;

pub mod partitions;

pub mod localgv;

pub mod intersect;

pub mod strata;

pub mod higgs;

pub mod gwside;

pub mod assemble;
