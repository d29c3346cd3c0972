//! Degree-two colored diagrams over `N` copies of a `Q`-dimension two
//! Blanchfield module.
//!
//! A diagram is stored with monomial leg labels `t^k x_i`, where `x` is a
//! basis element (`gamma` or `eta`) and `i` the copy index. Linkings are never
//! stored per term: every diagram carries the canonical linking convention of
//! its [`BlanchfieldSpec`], and deviations are expressed through explicit
//! contraction terms.
//!
//! Slot conventions:
//!
//! * `YY[a1,a2,a3;b1,b2,b3]`: two tripods, each listed top first and then
//!   counterclockwise.
//! * `H[x1,x2|x3,x4]`: `x1` top-left, `x2` bottom-left, `x3` bottom-right,
//!   `x4` top-right. The left vertex joins `x1,x2`, the right one `x3,x4`.

mod canonical;
mod combo;
mod contract;
mod conventions;
mod diagram;
mod error;
mod essential;
mod expand;
mod label;
mod leg;
mod parse;
mod spec;

pub use canonical::{canonicalize, canonicalize_diagram, orbit};
pub use combo::{DiagramTerm, LinCombo};
pub use contract::{contract, lower_kind};
pub use conventions::{Conventions, Mode, PushSide};
pub use diagram::{Diagram, ShapeKind};
pub use error::DiagramError;
pub use essential::{EssentialSet, Generator};
pub use expand::{expand_legs, expand_multilinear};
pub use label::Label;
pub use leg::{Basis, Leg};
pub use parse::{parse_combo, parse_diagram};
pub use spec::{conventional_linking, linking, BlanchfieldSpec, ModuleKind};
