use thiserror::Error;

/// Errors raised by the algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// The difference between a numerator and its prescribed part is not a
    /// multiple of the annihilator.
    #[error("excess is not a polynomial: remainder {remainder} modulo delta")]
    NotPolynomialExcess { remainder: String },
    /// The annihilator coefficient makes `delta(1)` vanish.
    #[error("alpha = -2 is not allowed (delta(1) would vanish)")]
    InvalidAlpha,
    /// Text could not be parsed as a polynomial.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
