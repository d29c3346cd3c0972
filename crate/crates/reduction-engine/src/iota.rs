//! Expansion of a one-copy four-leg diagram over two copies.

use diagram_core::{Leg, LinCombo};

use crate::error::EngineError;
use crate::reducer::Reducer;

/// Interprets a four-leg diagram whose legs all lie in one copy as half the
/// sum of its distributions over two copies, then reduces the result.
pub fn iota_expand(legs: [Leg; 4], reducer: &Reducer) -> Result<LinCombo, EngineError> {
    let single = legs.map(|l| l.with_copy(1));
    reducer.reduc4(single)
}
