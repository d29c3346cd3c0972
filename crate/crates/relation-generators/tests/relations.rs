use diagram_core::{
    parse_combo, parse_diagram, BlanchfieldSpec, Conventions, Diagram, EssentialSet, Generator, LinCombo, Mode,
};
use exact_algebra::{chi_points, constraint_points, int, rat, ParamPoly, Rational, Var};
use reduction_engine::{Ctx, Reducer};
use relation_generators::*;

fn combo(s: &str) -> LinCombo {
    parse_combo(s, &Conventions::default()).unwrap()
}

fn rows(rels: &[Relation]) -> Vec<LinCombo> {
    rels.iter().map(|r| r.combo.clone()).collect()
}

fn in_span(v: &LinCombo, known: &[LinCombo], ctx: &Ctx) -> bool {
    reduce_against(v, known, &ColumnOrder::default(), ctx).is_zero()
}

fn same(a: &LinCombo, b: &LinCombo, ctx: &Ctx) -> bool {
    let mut d = a.clone();
    d.add_combo(b, &ParamPoly::from_int(-1));
    d.map_coeffs(|c| ctx.normalize(c)).is_zero()
}

fn cyclic3(alpha: Option<Rational>) -> (Reducer, Vec<LinCombo>) {
    let red = Reducer::new(cyclic_ctx(alpha, 3).unwrap());
    let rels = automorphism_relations(&EssentialSet::cyclic3(), &red).unwrap();
    (red, rows(&rels))
}

/// The six relations among the three-copy generators, written by hand.
fn six_relations() -> Vec<LinCombo> {
    [
        "D1 - D2",
        "(alpha + 2)*D1 - r*H3 + r*H4",
        "alpha*G1 + 2*G2 - r*H1",
        "G1 + alpha*G2 + G4 - r*H3",
        "alpha*G3 + 2*G4 - r*H4",
        "(alpha + 1)*G2 + G3 - r*H2",
    ]
    .map(combo)
    .to_vec()
}

fn two_four_leg_relations() -> Vec<LinCombo> {
    ["alpha*H1 + 2*H2", "alpha*H2 + H3 + H4"].map(combo).to_vec()
}

#[test]
fn three_copy_relations_match_hand_derivation() {
    let (red, generated) = cyclic3(None);
    let ctx = red.ctx();
    for r in six_relations() {
        assert!(in_span(&r, &generated, ctx), "not generated: {r}");
    }
    let mut known = six_relations();
    known.extend(two_four_leg_relations());
    for r in &generated {
        assert!(in_span(r, &known, ctx), "extra relation: {r}");
    }
}

#[test]
fn holonomy_identifies_the_d_diagrams() {
    let red = Reducer::new(cyclic_ctx(None, 3).unwrap());
    let rel = apply_aut(&Generator::D1.diagram(), &AutSpec::HolBar { side: 0 }, &red).unwrap();
    assert!(same(&rel.combo, &combo("D1 - D2"), red.ctx()));
}

#[test]
fn eliminating_intermediates_leaves_the_g1_relation() {
    let (red, generated) = cyclic3(None);
    let ctx = red.ctx();
    let cols = ["D1", "D2", "G2", "G3", "G4"].map(|n| n.parse::<Generator>().unwrap().diagram());
    let left = eliminate_columns(&generated, &cols, ctx);
    let g1 = Generator::G1.diagram();
    let with_g1: Vec<_> = left.iter().filter(|r| !r.coeff(&g1).is_zero()).collect();
    assert_eq!(with_g1.len(), 1);
    let expected = combo("(1 - alpha)*(alpha + 2)^2*G1 - 4*r*H3 - 2*alpha*r*H2 + 2*r*H4 + alpha*(alpha + 3)*r*H1");
    assert!(in_span(&expected, &left, ctx));
    // The row is a multiple of the expected relation modulo the H relations.
    let h_rows: Vec<LinCombo> = left.iter().filter(|r| r.coeff(&g1).is_zero()).cloned().collect();
    let mut probe = h_rows.clone();
    probe.push(expected.clone());
    assert!(in_span(with_g1[0], &probe, ctx));
}

#[test]
fn g1_relation_without_r_holds_only_at_r_one() {
    let (red, generated) = cyclic3(None);
    let no_r = combo("(1 - alpha)*(alpha + 2)^2*G1 - 4*H3 - 2*alpha*H2 + 2*H4 + alpha*(alpha + 3)*H1");
    assert!(!in_span(&no_r, &generated, red.ctx()));
    let at_one: Vec<LinCombo> = generated.iter().map(|r| r.map_coeffs(|c| c.specialize(Var::R, &int(1)))).collect();
    assert!(in_span(&no_r, &at_one, red.ctx()));
}

#[test]
fn four_leg_relations_with_lower_order_tokens() {
    let red = Reducer::new(cyclic_ctx(None, 2).unwrap().with_mode(Mode::Full));
    let rels = four_leg_relations(&red).unwrap();
    let ctx = red.ctx();
    assert!(same(&rels[0].combo, &combo("alpha*H1 + 2*H2 + r*Theta[(0,1),(0,1);0]"), ctx));
    assert!(same(&rels[1].combo, &combo("alpha*H2 + H3 + H4 + r*Theta[(0,1),(1,1);0]"), ctx));
    let tokens: Vec<_> = rels.iter().map(|r| r.combo.lower_order()).collect();
    assert_ne!(tokens[0].scale(&ParamPoly::from_int(-1)), tokens[1]);
    assert_ne!(tokens[0], tokens[1]);
}

#[test]
fn quotient_mode_drops_lower_order_tokens() {
    let red = Reducer::new(cyclic_ctx(None, 2).unwrap());
    let rels = four_leg_relations(&red).unwrap();
    assert_eq!(rows(&rels), two_four_leg_relations());
}

#[test]
fn gamma_relation_at_alpha_one() {
    let red = Reducer::new(lambda_ctx());
    let k = gamma_relation(&red).unwrap();
    assert_eq!(k, combo("Gamma1 + 2*Gamma2 - 3*r*H3"));
}

fn k_combo() -> LinCombo {
    combo("Gamma1 + 2*Gamma2 - 3*r*H3")
}

#[test]
fn lambda_family_on_gamma_generators() {
    let red = Reducer::new(lambda_ctx());
    let ctx = red.ctx();
    let k = k_combo();
    let cases =
        [(Generator::Gamma1, "a*b + c*d"), (Generator::Gamma2, "a^2 + c^2"), (Generator::Gamma3, "b^2 + d^2 - 1")];
    for (g, scalar) in cases {
        let out = lambda_relation(g, &red).unwrap();
        let s = out.scalar_multiple_of(&k, ctx).unwrap_or_else(|| panic!("{} not a multiple of K", g.name()));
        let expected = ctx.normalize(&exact_algebra::parse_param(scalar).unwrap());
        assert_eq!(ctx.normalize(&s), expected, "{}", g.name());
        assert!(in_span(&out.reduced, std::slice::from_ref(&k), ctx));
    }
}

#[test]
fn lambda_family_specializes_at_constraint_points() {
    let red = Reducer::new(lambda_ctx());
    let k = k_combo();
    let outs = [Generator::Gamma1, Generator::Gamma2, Generator::Gamma3].map(|g| lambda_relation(g, &red).unwrap());
    let scalars = ["a*b + c*d", "a^2 + c^2", "b^2 + d^2 - 1"].map(|s| exact_algebra::parse_param(s).unwrap());
    for p in constraint_points(30, 2024) {
        let pt = p.with(int(1), rat(3, 7));
        for (out, s) in outs.iter().zip(&scalars) {
            let want = s.eval(&pt);
            for (d, c) in out.reduced.terms() {
                assert_eq!(c.eval(&pt), &want * &k.coeff(d).eval(&pt));
            }
        }
    }
}

#[test]
fn lambda_family_at_numeric_points_directly() {
    let red = Reducer::new(cyclic_ctx(Some(int(1)), 2).unwrap());
    let k = k_combo();
    let c = |x: &Rational| ParamPoly::constant(x.clone());
    for p in constraint_points(3, 99) {
        let aut = AutSpec::AutLambda { a: c(&p.a), b: c(&p.b), c: c(&p.c), d: c(&p.d) };
        let out = lambda_relation_at(Generator::Gamma2, aut, &red).unwrap();
        let s = out.scalar_multiple_of(&k, red.ctx()).unwrap();
        let want = &p.a * &p.a + &p.c * &p.c;
        let s = s.as_constant().unwrap();
        assert!(s == want || s == -want, "{s}");
    }
}

#[test]
fn chi_relations_add_nothing_new() {
    let red = Reducer::new(cyclic_ctx(Some(int(1)), 2).unwrap());
    let mut known = rows(&automorphism_relations(&EssentialSet::cyclic2(), &red).unwrap());
    known.push(gamma_relation(&red).unwrap());
    for rel in chi_relations(&chi_points(4, 5), &red).unwrap() {
        assert!(in_span(&rel.combo, &known, red.ctx()), "{rel}");
    }
}

#[test]
fn t_action_composed_with_its_inverse_is_trivial() {
    for (copies, set) in [(2, EssentialSet::cyclic2()), (3, EssentialSet::cyclic3())] {
        let red = Reducer::new(cyclic_ctx(None, copies).unwrap());
        let ctx = red.ctx();
        for d in set.diagrams() {
            for copy in 1..=copies {
                let fwd = AutSpec::AutT { copy, power: 1 };
                let back = AutSpec::AutT { copy, power: -1 };
                let mut raw = Vec::new();
                for (c, e) in aut_image(&d, &fwd, ctx).unwrap() {
                    for (c2, e2) in aut_image(&e, &back, ctx).unwrap() {
                        raw.push((&c * &c2, e2));
                    }
                }
                let round = red.reduce_raw(&raw).unwrap();
                assert!(same(&round, &red.reduce(&d).unwrap(), ctx), "{d} copy {copy}");
            }
        }
    }
}

fn samples(alphas: &[Rational]) -> Vec<Sample> {
    alphas
        .iter()
        .map(|a| {
            let mut point: [Rational; 6] = Default::default();
            point[Var::Alpha.index()] = a.clone();
            point[Var::R.index()] = rat(2, 3);
            Sample { point, constrained: false }
        })
        .collect()
}

fn h_diagrams() -> Vec<Diagram> {
    [Generator::H1, Generator::H2, Generator::H3, Generator::H4].map(Generator::diagram).to_vec()
}

#[test]
fn quotient_dimensions_of_three_copy_space() {
    let (_, generated) = cyclic3(None);
    let generic = samples(&[int(5), int(3), rat(-1, 2), rat(7, 3), int(-4)]);
    assert_eq!(quotient_dimension(&generated, &h_diagrams(), &generic).unwrap(), vec![2; 5]);
    let pair = [Generator::H1, Generator::H3].map(Generator::diagram);
    assert_eq!(quotient_dimension(&generated, &pair, &generic).unwrap(), vec![2; 5]);
    let all = EssentialSet::cyclic3().diagrams();
    assert_eq!(quotient_dimension(&generated, &all, &generic).unwrap(), vec![2; 5]);
    let one = samples(&[int(1)]);
    assert_eq!(quotient_dimension(&generated, &h_diagrams(), &one).unwrap(), vec![1]);
    assert_eq!(quotient_dimension(&generated, &[Generator::H1.diagram()], &one).unwrap(), vec![1]);
}

#[test]
fn samples_are_validated() {
    let (_, generated) = cyclic3(None);
    assert!(rank_at_specialization(&generated, None, &samples(&[int(-2)])).is_err());
    let mut bad = samples(&[int(1)]);
    bad[0].constrained = true;
    assert!(matches!(rank_at_specialization(&generated, None, &bad), Err(RelationError::ConstraintViolated(_))));
    assert_eq!(rank_at_specialization(&[], None, &samples(&[int(1)])).unwrap(), vec![0]);
}

#[test]
fn kernel_vector_vanishes_only_at_alpha_one() {
    let kernel = combo("2*H1 + H4 - 2*H3 - H2");
    let (red, at_one) = cyclic3(Some(int(1)));
    assert!(in_span(&kernel, &at_one, red.ctx()));

    let two = Reducer::new(cyclic_ctx(Some(int(1)), 2).unwrap());
    let four = rows(&four_leg_relations(&two).unwrap());
    let mut diff = kernel.clone();
    diff.add_combo(&combo("3*H1 - 3*H3"), &ParamPoly::from_int(-1));
    assert!(in_span(&diff, &four, two.ctx()));
    let two_copy = rows(&automorphism_relations(&EssentialSet::cyclic2(), &two).unwrap());
    assert!(!in_span(&combo("3*H1 - 3*H3"), &two_copy, two.ctx()));

    for a in [int(5), int(3), rat(-1, 2), rat(7, 3), int(-4)] {
        let (red, rels) = cyclic3(Some(a.clone()));
        assert!(!in_span(&kernel, &rels, red.ctx()), "alpha = {a}");
    }
}

#[test]
fn iota_image_in_terms_of_g1_and_h1() {
    let (red, generated) = cyclic3(None);
    let iota = combo("H1 + H3 - 2*H4");
    let mut lhs = iota.scale(&ParamPoly::var(Var::R));
    let rhs = combo("1/2*(1 - alpha)*(alpha + 2)^2*G1 + 1/2*r*(alpha + 1)*(alpha + 2)*H1");
    lhs.add_combo(&rhs, &ParamPoly::from_int(-1));
    assert!(in_span(&lhs, &generated, red.ctx()));
}

fn noncyclic(mode: Mode) -> Reducer {
    Reducer::new(Ctx::new(BlanchfieldSpec::non_cyclic(3)).with_mode(mode))
}

#[test]
fn noncyclic_relations_in_full_mode() {
    let red = noncyclic(Mode::Full);
    let ctx = red.ctx();
    let rels = noncyclic_relations(&red).unwrap();
    let find =
        |g: Generator, aut: AutSpec| rels.iter().find(|r| r.lhs == g.diagram() && r.aut == aut).unwrap().combo.clone();
    let y1 = find(Generator::Y1, AutSpec::Nu { copy: 1 });
    assert!(same(&y1, &combo("2*Y1 - X1 + X2"), ctx));
    let y2 = find(Generator::Y2, AutSpec::HolBar { side: 0 });
    assert!(same(&y2.drop_lower_order(), &combo("2*Y2 - 3*X1"), ctx));
    assert!(!y2.lower_order().is_zero());
    let x = find(Generator::X1, AutSpec::Nu { copy: 1 });
    assert!(same(&x, &combo("X1 + X2 + Theta[(0,1),(e,1);0]"), ctx));
}

#[test]
fn noncyclic_dimensions() {
    let red = noncyclic(Mode::Quotient);
    let rels = rows(&noncyclic_relations(&red).unwrap());
    let s = samples(&[int(1)]);
    let all = EssentialSet::noncyclic3().diagrams();
    assert_eq!(rank_at_specialization(&rels, Some(&all), &s).unwrap(), vec![3]);
    assert_eq!(quotient_dimension(&rels, &[Generator::X1.diagram()], &s).unwrap(), vec![1]);
}

#[test]
fn rescaling_kills_unbalanced_diagrams() {
    let red = noncyclic(Mode::Quotient);
    let d = parse_diagram("YY[(0,1),(0,1),(e,2);(e,1),(0,3),(e,3)]").unwrap();
    let image = aut_image(&d, &AutSpec::Mu { x: int(2), copy: 1 }, red.ctx()).unwrap();
    assert_eq!(image, vec![(ParamPoly::from_int(2), d.clone())]);
    assert!(red.reduce(&d).unwrap().is_zero());
}

#[test]
fn automorphism_checks() {
    let red = Reducer::new(cyclic_ctx(None, 2).unwrap());
    let h = Generator::H1.diagram();
    assert!(matches!(apply_aut(&h, &AutSpec::HolBar { side: 0 }, &red), Err(RelationError::NotApplicable(_))));
    let g = Generator::Gamma1.diagram();
    assert!(matches!(apply_aut(&g, &AutSpec::Nu { copy: 1 }, &red), Err(RelationError::NotApplicable(_))));
    let nc = noncyclic(Mode::Quotient);
    let lambda =
        AutSpec::AutLambda { a: ParamPoly::one(), b: ParamPoly::zero(), c: ParamPoly::zero(), d: ParamPoly::zero() };
    assert!(apply_aut(&Generator::Y1.diagram(), &lambda, &nc).is_err());
}
