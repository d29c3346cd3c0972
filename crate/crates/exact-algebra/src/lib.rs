//! Exact coefficient arithmetic for colored diagram computations.
//!
//! The crate provides three layers:
//!
//! * [`Rational`]: arbitrary precision rationals in lowest terms.
//! * [`ParamPoly`]: polynomials over `Q` in the six parameters
//!   `alpha, a, b, c, d, r`, with an optional normal form modulo the
//!   quadric `a^2 + b^2 + c^2 + d^2 = 1 + ab + cd`.
//! * [`LaurentPoly`]: Laurent polynomials in `t` whose coefficients are
//!   [`ParamPoly`] values, with the bar involution and reduction modulo the
//!   annihilator described by an [`AnnihilatorSpec`].
//!
//! Everything is immutable value semantics; no floating point is used.

mod annihilator;
mod error;
mod laurent;
mod param;
mod rational;
mod sampling;
mod text;

pub use annihilator::{alpha_allowed, AnnihilatorSpec};
pub use error::AlgebraError;
pub use laurent::{laurent_bar, laurent_mod_delta, split_fraction, LaurentPoly};
pub use param::{param_normalize, Monomial, ParamPoly, Var};
pub use rational::{int, parse_rational, rat, Rational};
pub use sampling::{alpha_samples, chi_points, constraint_points, random_rational, ConstraintPoint};
pub use text::{parse_laurent, parse_param};
