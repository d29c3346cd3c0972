//! Diagrams with general labels and explicit linkings, and the linking
//! corrections that bring them back to the conventional form.

use std::collections::BTreeMap;

use diagram_core::{
    contract, conventional_linking, expand_legs, BlanchfieldSpec, Diagram, DiagramTerm, Label, Leg, LinCombo,
    ModuleKind, ShapeKind,
};
use exact_algebra::{laurent_bar, laurent_mod_delta, split_fraction, LaurentPoly, ParamPoly};

use crate::context::Ctx;
use crate::error::EngineError;

/// Monomial diagrams with coefficients, not yet canonicalized.
pub type RawCombo = Vec<(ParamPoly, Diagram)>;

/// Numerator of `f(w, v)` given the numerator of `f(v, w)`, both over
/// `delta`, using `f(w, v) = bar(f(v, w))`.
pub fn flip_numerator(n: &LaurentPoly, spec: &BlanchfieldSpec) -> LaurentPoly {
    match spec.kind() {
        ModuleKind::Cyclic => laurent_bar(n),
        // delta / bar(delta) = t for delta = t + 1.
        ModuleKind::NonCyclic => laurent_bar(n).shift(1),
    }
}

/// A YY or H diagram whose legs carry general labels and whose linkings
/// are given explicitly as numerators over `delta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralDiagram {
    pub kind: ShapeKind,
    pub labels: Vec<Label>,
    linking: BTreeMap<(usize, usize), LaurentPoly>,
}

impl GeneralDiagram {
    /// A diagram carrying the conventional linkings of its own labels.
    pub fn conventional(kind: ShapeKind, labels: Vec<Label>, spec: &BlanchfieldSpec) -> Self {
        assert_eq!(labels.len(), kind.n_legs(), "label count must match the shape");
        let mut linking = BTreeMap::new();
        for i in 0..labels.len() {
            for j in i + 1..labels.len() {
                linking.insert((i, j), conventional_linking(&labels[i], &labels[j], spec));
            }
        }
        GeneralDiagram { kind, labels, linking }
    }

    /// The conventional form of a monomial YY or H diagram.
    pub fn from_diagram(d: &Diagram, spec: &BlanchfieldSpec) -> Option<Self> {
        let kind = d.kind()?;
        let labels = d.legs().into_iter().map(Label::from_leg).collect();
        Some(GeneralDiagram::conventional(kind, labels, spec))
    }

    /// Numerator of the linking `f(leg_i, leg_j)`.
    pub fn linking(&self, i: usize, j: usize, spec: &BlanchfieldSpec) -> LaurentPoly {
        if i < j {
            self.linking[&(i, j)].clone()
        } else {
            flip_numerator(&self.linking[&(j, i)], spec)
        }
    }

    /// Overrides the linking numerator of an ordered pair.
    pub fn set_linking(&mut self, i: usize, j: usize, n: LaurentPoly, spec: &BlanchfieldSpec) {
        if i < j {
            self.linking.insert((i, j), n);
        } else {
            // Flipping twice is the identity.
            self.linking.insert((j, i), flip_numerator(&n, spec));
        }
    }

    /// Replaces the labels and keeps the linkings: this is how a relation
    /// `D = zeta.D` or a linear rewriting of labels is applied.
    pub fn relabel<F: Fn(usize, &Label) -> Label>(&self, f: F) -> Self {
        GeneralDiagram {
            kind: self.kind,
            labels: self.labels.iter().enumerate().map(|(i, l)| f(i, l)).collect(),
            linking: self.linking.clone(),
        }
    }

    fn probe(&self) -> Diagram {
        let legs: Vec<Leg> = (0..self.labels.len()).map(|i| Leg::g(0, i as u8 + 1)).collect();
        Diagram::from_kind(self.kind, &legs)
    }
}

/// Result of joining two legs of a general diagram.
enum Joined {
    Shape(GeneralDiagram),
    /// A lower-order token given by a probe diagram whose leg `copy - 1`
    /// is the source slot and whose `k` is the exponent shift.
    Token(Diagram, Vec<Label>),
}

/// Joins legs `i` and `j` by an edge labelled `t^m` oriented from `i` to
/// `j`. The result carries the linkings inherited from `gd`.
fn join(gd: &GeneralDiagram, i: usize, j: usize, m: i64, ctx: &Ctx) -> Option<(i64, Joined)> {
    let (sign, probe) = contract(&gd.probe(), i, j, m, &ctx.conv)?;
    let slots: Vec<(usize, i64)> = probe.legs().iter().map(|l| (l.copy as usize - 1, l.k)).collect();
    let labels: Vec<Label> = slots.iter().map(|&(s, k)| gd.labels[s].shift(k)).collect();
    match probe.kind() {
        Some(kind) => {
            let mut linking = BTreeMap::new();
            for p in 0..slots.len() {
                for q in p + 1..slots.len() {
                    let (sp, kp) = slots[p];
                    let (sq, kq) = slots[q];
                    linking.insert((p, q), gd.linking(sp, sq, &ctx.spec).shift(kp - kq));
                }
            }
            Some((sign, Joined::Shape(GeneralDiagram { kind, labels, linking })))
        }
        None => Some((sign, Joined::Token(probe, labels))),
    }
}

/// Multilinear expansion of a lower-order token built on a probe diagram.
fn expand_token(probe: &Diagram, labels: &[Label]) -> RawCombo {
    expand_legs(labels)
        .into_iter()
        .map(|(c, legs)| {
            let token = probe.map_legs(|p| {
                let pos = probe.legs().iter().position(|q| q.copy == p.copy).expect("probe leg");
                legs[pos]
            });
            (c, token)
        })
        .collect()
}

fn expand_shape(gd: &GeneralDiagram) -> RawCombo {
    expand_legs(&gd.labels).into_iter().map(|(c, legs)| (c, Diagram::from_kind(gd.kind, &legs))).collect()
}

fn scale_into(out: &mut RawCombo, terms: RawCombo, c: &ParamPoly, ctx: &Ctx) {
    for (x, d) in terms {
        let y = ctx.normalize(&(&x * c));
        if !y.is_zero() {
            out.push((y, d));
        }
    }
}

/// Expands labels and adds the contraction terms that turn the given
/// linkings into the conventional ones.
///
/// For each pair of legs, the excess `E` with `true = conventional + E *
/// delta` is computed and every monomial `c t^m` of `E` contributes `c`
/// times the diagram where the two legs are joined by an edge labelled
/// `t^m`. Joined diagrams inherit the remaining linkings; in full mode their
/// own corrections are added recursively, down to two-leg tokens, whose
/// linkings are not tracked.
pub fn restore_linkings(gd: &GeneralDiagram, ctx: &Ctx) -> Result<RawCombo, EngineError> {
    let mut out = expand_shape(gd);
    if !ctx.conv.ld_corrections {
        return Ok(out);
    }
    let n = gd.labels.len();
    for i in 0..n {
        for j in i + 1..n {
            let actual = gd.linking(i, j, &ctx.spec);
            let conv = conventional_linking(&gd.labels[i], &gd.labels[j], &ctx.spec);
            if actual == conv {
                continue;
            }
            let excess = split_fraction(&actual, &conv, ctx.annihilator(), ctx.constraint)?;
            for (m, c) in excess.terms() {
                let Some((sign, joined)) = join(gd, i, j, m, ctx) else { continue };
                let c = ctx.normalize(&c.scale(&exact_algebra::int(sign)));
                match joined {
                    Joined::Shape(sub) => {
                        let terms = if ctx.full() { restore_linkings(&sub, ctx)? } else { expand_shape(&sub) };
                        scale_into(&mut out, terms, &c, ctx);
                    }
                    Joined::Token(probe, labels) if ctx.full() => {
                        scale_into(&mut out, expand_token(&probe, &labels), &c, ctx);
                    }
                    Joined::Token(..) => {}
                }
            }
        }
    }
    Ok(out)
}

/// Rewrites every label in the basis of the module (`{gamma, t gamma}` per
/// copy in the cyclic case, `{gamma, eta}` otherwise), keeping linkings.
pub fn reduce_labels(gd: &GeneralDiagram, ctx: &Ctx) -> GeneralDiagram {
    gd.relabel(|_, l| l.map(|p| laurent_mod_delta(p, ctx.annihilator()).normalize(ctx.constraint)))
}

/// Collects raw terms into a canonical combination. Lower-order tokens are
/// dropped in quotient mode.
pub fn collect(terms: &RawCombo, ctx: &Ctx) -> LinCombo {
    let mut out = LinCombo::zero();
    for (c, d) in terms {
        if d.is_lower_order() && !ctx.full() {
            continue;
        }
        out.add(d.clone(), c, &ctx.conv);
    }
    out.normalize(ctx.constraint)
}

/// Canonical reduction of a diagram with arbitrary labels and linkings:
/// labels are written in the basis, linkings are made conventional and
/// zero-labelled legs disappear through their contraction terms.
pub fn omega_reduce(gd: &GeneralDiagram, ctx: &Ctx) -> Result<LinCombo, EngineError> {
    Ok(collect(&restore_linkings(&reduce_labels(gd, ctx), ctx)?, ctx))
}

/// Contraction terms of legs `v` and `w` for a polynomial linking excess.
pub fn pair_legs(term: &DiagramTerm, v: usize, w: usize, excess: &LaurentPoly, ctx: &Ctx) -> LinCombo {
    let mut out = LinCombo::zero();
    for (m, c) in excess.terms() {
        if let Some((sign, d)) = contract(&term.diagram, v, w, m, &ctx.conv) {
            if d.is_lower_order() && !ctx.full() {
                continue;
            }
            let coeff = &(c * &term.coeff) * &ParamPoly::from_int(sign);
            out.add(d, &ctx.normalize(&coeff), &ctx.conv);
        }
    }
    out
}

/// Removes a leg whose label is zero: the diagram equals the sum of its
/// contractions with the other legs, weighted by their linkings with it.
pub fn eliminate_zero_leg(gd: &GeneralDiagram, v: usize, ctx: &Ctx) -> Result<LinCombo, EngineError> {
    assert!(gd.labels[v].is_zero(), "leg {v} must carry the zero label");
    Ok(collect(&restore_linkings(gd, ctx)?, ctx))
}

/// One step of exponent reduction on leg `idx` of a monomial diagram, by the
/// rule `t^k x = -alpha t^(k-1) x - t^(k-2) x` (or its mirror for `k < 0`).
///
/// Legs already in `{x, t x}` are returned unchanged.
pub fn reduce_exponent_raw(d: &Diagram, idx: usize, ctx: &Ctx) -> Result<RawCombo, EngineError> {
    if !ctx.is_cyclic() {
        return Err(EngineError::NonCyclicMode);
    }
    let leg = d.legs()[idx];
    if (0..=1).contains(&leg.k) {
        return Ok(vec![(ParamPoly::one(), d.clone())]);
    }
    let gd = GeneralDiagram::from_diagram(d, &ctx.spec).expect("YY or H diagram");
    let alpha = ctx.spec.annihilator.alpha_poly();
    let (near, far) = if leg.k > 1 { (leg.k - 1, leg.k - 2) } else { (leg.k + 1, leg.k + 2) };
    let mut replacement = LaurentPoly::monomial(near, -&alpha);
    replacement.add_term(far, &ParamPoly::from_int(-1));
    let gd =
        gd.relabel(
            |i, l| {
                if i == idx {
                    Label::zero().plus(leg.copy, leg.basis, replacement.clone())
                } else {
                    l.clone()
                }
            },
        );
    restore_linkings(&gd, ctx)
}

/// Canonical form of [`reduce_exponent_raw`].
pub fn reduce_exponent(term: &DiagramTerm, idx: usize, ctx: &Ctx) -> Result<LinCombo, EngineError> {
    let raw = reduce_exponent_raw(&term.diagram, idx, ctx)?;
    Ok(collect(&raw, ctx).scale(&term.coeff).normalize(ctx.constraint))
}

/// Removes a lollipop component.
///
/// Multiplying the stem label by `delta(t)` gives the zero label while the
/// diagram gets multiplied by `delta(1)`. The zero-labelled stem is then
/// eliminated against the tripod legs, which leaves two-leg tadpoles.
pub fn eliminate_lollipop(term: &DiagramTerm, ctx: &Ctx) -> LinCombo {
    let Diagram::Lollipop { stem, m, tripod } = &term.diagram else {
        return LinCombo::single(term.diagram.clone(), term.coeff.clone(), &ctx.conv);
    };
    if !ctx.full() {
        return LinCombo::zero();
    }
    let inv = ctx.normalize(&ctx.spec.annihilator.delta_at_one()).as_constant().map(|x| ParamPoly::constant(x.recip()));
    let Some(inv) = inv else {
        // Symbolic alpha: 1/delta(1) is not a polynomial, keep the token.
        return LinCombo::single(term.diagram.clone(), term.coeff.clone(), &ctx.conv);
    };
    let mut out = LinCombo::zero();
    for w in 0..3 {
        let n = diagram_core::linking(*stem, tripod[w], &ctx.spec);
        for (e, c) in n.terms() {
            let push = match ctx.conv.push_side {
                diagram_core::PushSide::First => e,
                diagram_core::PushSide::Second => -e,
            };
            let legs = [tripod[(w + 1) % 3].shifted(push), tripod[(w + 2) % 3].shifted(push)];
            let coeff = &(c * &inv) * &term.coeff;
            out.add(Diagram::Tadpole { legs, m: *m }, &ctx.normalize(&coeff), &ctx.conv);
        }
    }
    out
}
