//! Relations among colored degree-two diagrams induced by module
//! automorphisms, and exact linear algebra on them.

mod aut;
mod error;
mod families;
mod linalg;

pub use aut::{apply_aut, aut_image, AutSpec, Relation};
pub use error::RelationError;
pub use families::*;
pub use linalg::{
    echelon, normalize_sign, quotient_dimension, rank_at_specialization, rational_rank, reduce_against, ColumnOrder,
    Sample,
};
