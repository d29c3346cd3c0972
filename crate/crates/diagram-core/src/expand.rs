use exact_algebra::ParamPoly;
use itertools::Itertools;

use crate::combo::LinCombo;
use crate::conventions::Conventions;
use crate::diagram::{Diagram, ShapeKind};
use crate::label::Label;
use crate::leg::Leg;

/// Multilinear expansion of a list of general labels into monomial leg
/// tuples with their coefficients. Zero coefficients are skipped.
pub fn expand_legs(labels: &[Label]) -> Vec<(ParamPoly, Vec<Leg>)> {
    labels
        .iter()
        .map(|l| l.monomials())
        .multi_cartesian_product()
        .filter_map(|choice| {
            let mut coeff = ParamPoly::one();
            let mut legs = Vec::with_capacity(choice.len());
            for (c, leg) in choice {
                coeff = &coeff * &c;
                legs.push(leg);
            }
            (!coeff.is_zero()).then_some((coeff, legs))
        })
        .collect()
}

/// Expands a diagram of the given shape with general labels into a
/// canonicalized combination of monomial diagrams.
///
/// Only the leg labels are expanded; the linkings of the result are the
/// conventional ones.
pub fn expand_multilinear(kind: ShapeKind, labels: &[Label], conv: &Conventions) -> LinCombo {
    assert_eq!(labels.len(), kind.n_legs(), "label count must match the shape");
    let mut out = LinCombo::zero();
    if labels.iter().any(Label::is_zero) {
        return out;
    }
    for (c, legs) in expand_legs(labels) {
        out.add(Diagram::from_kind(kind, &legs), &c, conv);
    }
    out
}
