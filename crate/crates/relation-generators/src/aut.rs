//! Automorphism families and the relations they induce.

use std::fmt;

use diagram_core::{Basis, Diagram, Label, LinCombo, ModuleKind, ShapeKind};
use exact_algebra::{laurent_bar, LaurentPoly, ParamPoly, Rational};
use num_traits::{One, Zero};
use reduction_engine::{nu_on_copy, restore_linkings, Ctx, GeneralDiagram, RawCombo, Reducer};

use crate::error::RelationError;

/// A module automorphism, or a holonomy move, acting on diagrams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutSpec {
    /// Multiplication of one copy by `t^power`.
    AutT { copy: u8, power: i64 },
    /// Multiplication of the three legs of one tripod of a YY diagram by
    /// `t`, with the linkings to the other tripod multiplied by `t`.
    HolBar { side: usize },
    /// `gamma_1 -> P gamma_1 + Q gamma_2`, `gamma_2 -> bar(Q) gamma_1 -
    /// bar(P) gamma_2` with `P = a t + b`, `Q = c t + d`.
    AutLambda { a: ParamPoly, b: ParamPoly, c: ParamPoly, d: ParamPoly },
    /// `gamma_1 -> (a t + b) gamma_1`.
    AutChi { a: ParamPoly, b: ParamPoly },
    /// `gamma -> x gamma`, `eta -> eta / x` on one copy.
    Mu { x: Rational, copy: u8 },
    /// `gamma -> eta`, `eta -> -gamma` on one copy.
    Nu { copy: u8 },
    /// `gamma -> gamma + y eta` on one copy.
    Rho { y: Rational, copy: u8 },
}

impl fmt::Display for AutSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutSpec::AutT { copy, power } => write!(f, "aut_t(copy {copy}, t^{power})"),
            AutSpec::HolBar { side } => write!(f, "holbar(tripod {})", side + 1),
            AutSpec::AutLambda { a, b, c, d } => write!(f, "lambda({a}, {b}, {c}, {d})"),
            AutSpec::AutChi { a, b } => write!(f, "chi({a}, {b})"),
            AutSpec::Mu { x, copy } => write!(f, "mu(copy {copy}, {x})"),
            AutSpec::Nu { copy } => write!(f, "nu(copy {copy})"),
            AutSpec::Rho { y, copy } => write!(f, "rho(copy {copy}, {y})"),
        }
    }
}

fn linear(a: &ParamPoly, b: &ParamPoly, k: i64) -> LaurentPoly {
    let mut p = LaurentPoly::monomial(k, a.clone());
    p.add_term(0, b);
    p
}

impl AutSpec {
    fn check(&self, ctx: &Ctx, d: &Diagram) -> Result<(), RelationError> {
        let cyclic = ctx.spec.kind() == ModuleKind::Cyclic;
        let ok = match self {
            AutSpec::AutT { .. } => true,
            AutSpec::HolBar { side } => *side < 2 && d.kind() == Some(ShapeKind::YY),
            AutSpec::AutLambda { .. } | AutSpec::AutChi { .. } => cyclic,
            AutSpec::Mu { x, .. } => !cyclic && !x.is_zero(),
            AutSpec::Nu { .. } => !cyclic,
            AutSpec::Rho { .. } => !cyclic,
        };
        if ok && d.kind().is_some() {
            Ok(())
        } else {
            Err(RelationError::NotApplicable(format!("{self} does not act on {d}")))
        }
    }

    /// Image of a label; the holonomy move has no label-wise action and
    /// returns the label unchanged.
    pub fn map_label(&self, label: &Label) -> Label {
        match self {
            AutSpec::AutT { copy, power } => {
                let mut out = Label::zero();
                for (c, b, p) in label.parts() {
                    out = out.plus(c, b, if c == *copy { p.shift(*power) } else { p.clone() });
                }
                out
            }
            AutSpec::HolBar { .. } => label.clone(),
            AutSpec::AutLambda { a, b, c, d } => {
                let p = linear(a, b, 1);
                let q = linear(c, d, 1);
                let mut out = Label::zero();
                for (copy, basis, x) in label.parts() {
                    out = match copy {
                        1 => out.plus(1, basis, x * &p).plus(2, basis, x * &q),
                        2 => out.plus(1, basis, x * &laurent_bar(&q)).plus(2, basis, -(x * &laurent_bar(&p))),
                        _ => out.plus(copy, basis, x.clone()),
                    };
                }
                out
            }
            AutSpec::AutChi { a, b } => {
                let p = linear(a, b, 1);
                label.parts().fold(Label::zero(), |out, (c, basis, x)| {
                    out.plus(c, basis, if c == 1 { x * &p } else { x.clone() })
                })
            }
            AutSpec::Mu { x, copy } => label.parts().fold(Label::zero(), |out, (c, basis, p)| {
                let s = match (c == *copy, basis) {
                    (false, _) => Rational::one(),
                    (true, Basis::Gamma) => x.clone(),
                    (true, Basis::Eta) => x.recip(),
                };
                out.plus(c, basis, p.scale(&ParamPoly::constant(s)))
            }),
            AutSpec::Nu { copy } => nu_on_copy(label, *copy),
            AutSpec::Rho { y, copy } => label.parts().fold(Label::zero(), |out, (c, basis, p)| {
                if c == *copy && basis == Basis::Gamma {
                    out.plus(c, Basis::Gamma, p.clone()).plus(c, Basis::Eta, p.scale(&ParamPoly::constant(y.clone())))
                } else {
                    out.plus(c, basis, p.clone())
                }
            }),
        }
    }
}

/// The image of a diagram, expanded into monomial diagrams with the
/// linking corrections that make its linkings conventional.
pub fn aut_image(d: &Diagram, aut: &AutSpec, ctx: &Ctx) -> Result<RawCombo, RelationError> {
    aut.check(ctx, d)?;
    let gd = GeneralDiagram::from_diagram(d, &ctx.spec).expect("checked shape");
    let image = match aut {
        AutSpec::HolBar { side } => {
            let labels = gd.labels.iter().enumerate().map(|(i, l)| if i / 3 == *side { l.shift(1) } else { l.clone() });
            GeneralDiagram::conventional(gd.kind, labels.collect(), &ctx.spec)
        }
        _ => gd.relabel(|_, l| aut.map_label(l)),
    };
    Ok(restore_linkings(&image, ctx)?)
}

/// The relation `lhs = aut.lhs`, stored as the reduced difference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Diagram,
    pub aut: AutSpec,
    /// `reduce(lhs) - reduce(aut.lhs)`.
    pub combo: LinCombo,
}

impl Relation {
    pub fn is_trivial(&self) -> bool {
        self.combo.is_zero()
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = 0   [{} on {}]", self.combo, self.aut, self.lhs)
    }
}

/// Applies an automorphism to a diagram and reduces both sides.
pub fn apply_aut(d: &Diagram, aut: &AutSpec, reducer: &Reducer) -> Result<Relation, RelationError> {
    let image = aut_image(d, aut, reducer.ctx())?;
    let mut combo = reducer.reduce(d)?;
    combo.add_combo(&reducer.reduce_raw(&image)?, &ParamPoly::from_int(-1));
    let ctx = reducer.ctx();
    Ok(Relation { lhs: d.clone(), aut: aut.clone(), combo: combo.map_coeffs(|c| ctx.normalize(c)) })
}
