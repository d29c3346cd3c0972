//! The relation families used to present the diagram spaces.

use diagram_core::{BlanchfieldSpec, Diagram, EssentialSet, Generator, LinCombo, ShapeKind};
use exact_algebra::{int, AnnihilatorSpec, ParamPoly, Rational, Var};
use reduction_engine::{Ctx, Reducer};

use crate::aut::{apply_aut, AutSpec, Relation};
use crate::error::RelationError;
use crate::linalg::{echelon, normalize_sign, reduce_against, ColumnOrder};

/// Context for the cyclic module with the given `alpha` (symbolic when
/// `None`) and number of copies.
pub fn cyclic_ctx(alpha: Option<Rational>, copies: u8) -> Result<Ctx, RelationError> {
    let ann = match alpha {
        None => AnnihilatorSpec::symbolic(),
        Some(a) => AnnihilatorSpec::cyclic(a).map_err(reduction_engine::EngineError::from)?,
    };
    Ok(Ctx::new(BlanchfieldSpec::cyclic(ann, copies)))
}

/// Multiplication of each copy met by `d` by `t`, and for YY diagrams the
/// holonomy move on each tripod.
pub fn standard_auts(d: &Diagram) -> Vec<AutSpec> {
    let mut copies = d.copies();
    copies.sort();
    copies.dedup();
    let mut out: Vec<AutSpec> = copies.into_iter().map(|copy| AutSpec::AutT { copy, power: 1 }).collect();
    if d.kind() == Some(ShapeKind::YY) {
        out.extend((0..2).map(|side| AutSpec::HolBar { side }));
    }
    out
}

/// All nontrivial relations obtained from `auts(g)` on the generators of a
/// set.
pub fn relations_on<F>(set: &EssentialSet, reducer: &Reducer, auts: F) -> Result<Vec<Relation>, RelationError>
where
    F: Fn(&Diagram) -> Vec<AutSpec>,
{
    let mut out = Vec::new();
    for g in &set.generators {
        let d = g.diagram();
        for aut in auts(&d) {
            let rel = apply_aut(&d, &aut, reducer)?;
            if !rel.is_trivial() {
                out.push(rel);
            }
        }
    }
    Ok(out)
}

/// Relations from multiplying one copy by `t` and from the holonomy move,
/// on every generator of the set.
pub fn automorphism_relations(set: &EssentialSet, reducer: &Reducer) -> Result<Vec<Relation>, RelationError> {
    relations_on(set, reducer, standard_auts)
}

/// The two relations among four-leg generators: `t` acting on copy 2 of
/// `H2` and on copy 1 of `H3`.
pub fn four_leg_relations(reducer: &Reducer) -> Result<Vec<Relation>, RelationError> {
    Ok(vec![
        apply_aut(&Generator::H2.diagram(), &AutSpec::AutT { copy: 2, power: 1 }, reducer)?,
        apply_aut(&Generator::H3.diagram(), &AutSpec::AutT { copy: 1, power: 1 }, reducer)?,
    ])
}

/// Relations free of the given columns, obtained by eliminating them.
pub fn eliminate_columns(rows: &[LinCombo], columns: &[Diagram], ctx: &Ctx) -> Vec<LinCombo> {
    echelon(rows, &ColumnOrder::new(columns.to_vec()), ctx)
        .into_iter()
        .filter(|(p, _)| !columns.contains(p))
        .map(|(_, r)| r)
        .collect()
}

/// Rewrites a combination with the four-leg relations, eliminating `H1`
/// and `H4`.
pub fn substitute_four_leg(v: &LinCombo, reducer: &Reducer) -> Result<LinCombo, RelationError> {
    let known: Vec<LinCombo> = four_leg_relations(reducer)?.into_iter().map(|r| r.combo).collect();
    let order = ColumnOrder::new(vec![Generator::H1.diagram(), Generator::H4.diagram()]);
    Ok(reduce_against(v, &known, &order, reducer.ctx()))
}

/// Column order used to present relations over two copies.
pub fn cyclic2_order() -> ColumnOrder {
    ColumnOrder::new(EssentialSet::cyclic2().diagrams())
}

/// The relation `alpha Gamma1 + 2 Gamma2 = ...` from `t` acting on copy 1
/// of `Gamma2`, rewritten over `Gamma1, Gamma2, H2, H3`.
pub fn gamma_relation(reducer: &Reducer) -> Result<LinCombo, RelationError> {
    let rel = apply_aut(&Generator::Gamma2.diagram(), &AutSpec::AutT { copy: 1, power: 1 }, reducer)?;
    Ok(normalize_sign(&substitute_four_leg(&rel.combo, reducer)?, &cyclic2_order()))
}

/// Context of the computations with the two-parameter family: two copies,
/// `alpha = 1` and coefficients reduced modulo the quadric in `a, b, c, d`.
pub fn lambda_ctx() -> Ctx {
    cyclic_ctx(Some(int(1)), 2).expect("alpha = 1 is allowed").with_constraint(true)
}

/// Outcome of acting with the two-parameter family on one generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaOutcome {
    pub relation: Relation,
    /// The relation rewritten over `Gamma1, Gamma2, H2, H3` with a
    /// normalized sign.
    pub reduced: LinCombo,
}

impl LambdaOutcome {
    /// The scalar `s` with `reduced = s * k`, if there is one.
    pub fn scalar_multiple_of(&self, k: &LinCombo, ctx: &Ctx) -> Option<ParamPoly> {
        let (pivot, kc) = k.terms().next()?;
        if kc != &ParamPoly::one() {
            return None;
        }
        let s = self.reduced.coeff(pivot);
        let mut diff = self.reduced.clone();
        diff.add_combo(k, &-&s);
        diff.map_coeffs(|c| ctx.normalize(c)).is_zero().then_some(s)
    }
}

/// Acts with `lambda_{a,b,c,d}` on a generator over two copies at
/// `alpha = 1`, with symbolic parameters.
pub fn lambda_relation(g: Generator, reducer: &Reducer) -> Result<LambdaOutcome, RelationError> {
    let [a, b, c, d] = [Var::A, Var::B, Var::C, Var::D].map(ParamPoly::var);
    lambda_relation_at(g, AutSpec::AutLambda { a, b, c, d }, reducer)
}

/// Acts with a given member of the two-parameter family on a generator.
pub fn lambda_relation_at(g: Generator, aut: AutSpec, reducer: &Reducer) -> Result<LambdaOutcome, RelationError> {
    let relation = apply_aut(&g.diagram(), &aut, reducer)?;
    let reduced = normalize_sign(&substitute_four_leg(&relation.combo, reducer)?, &cyclic2_order());
    Ok(LambdaOutcome { relation, reduced })
}

/// Relations from `gamma_1 -> (a t + b) gamma_1` on `Gamma1` and `Gamma2`
/// for each point `(a, b)` of `a^2 + b^2 - ab = 1`.
pub fn chi_relations(points: &[(Rational, Rational)], reducer: &Reducer) -> Result<Vec<Relation>, RelationError> {
    let mut out = Vec::new();
    for (a, b) in points {
        let aut = AutSpec::AutChi { a: ParamPoly::constant(a.clone()), b: ParamPoly::constant(b.clone()) };
        for g in [Generator::Gamma1, Generator::Gamma2] {
            out.push(apply_aut(&g.diagram(), &aut, reducer)?);
        }
    }
    Ok(out)
}

/// The automorphisms of the non-cyclic module used on its generators:
/// the basis swap, the shear and the rescaling on each copy, and the
/// holonomy moves.
pub fn noncyclic_auts(d: &Diagram) -> Vec<AutSpec> {
    let mut copies = d.copies();
    copies.sort();
    copies.dedup();
    let mut out = Vec::new();
    for copy in copies {
        out.push(AutSpec::Nu { copy });
        out.push(AutSpec::Rho { y: int(1), copy });
        out.push(AutSpec::Mu { x: int(2), copy });
    }
    if d.kind() == Some(ShapeKind::YY) {
        out.extend((0..2).map(|side| AutSpec::HolBar { side }));
    }
    out
}

/// Nontrivial relations on the non-cyclic generators.
pub fn noncyclic_relations(reducer: &Reducer) -> Result<Vec<Relation>, RelationError> {
    relations_on(&EssentialSet::noncyclic3(), reducer, noncyclic_auts)
}
