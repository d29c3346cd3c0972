//! Rewriting of degree-two colored diagrams to coordinates over essential
//! generators.

mod basis;
mod context;
mod error;
mod general;
mod iota;
mod psi;
mod reducer;

pub use basis::BasisVector;
pub use context::Ctx;
pub use error::EngineError;
pub use general::{
    collect, eliminate_lollipop, eliminate_zero_leg, flip_numerator, omega_reduce, pair_legs, reduce_exponent,
    reduce_exponent_raw, reduce_labels, restore_linkings, GeneralDiagram, RawCombo,
};
pub use iota::iota_expand;
pub use psi::{perfect_matchings, psi2_expand, PsiTerm};
pub use reducer::{nu_on_copy, Reducer};
