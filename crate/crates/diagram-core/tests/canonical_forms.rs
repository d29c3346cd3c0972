use std::collections::BTreeSet;

use diagram_core::{
    canonicalize_diagram, conventional_linking, expand_legs, expand_multilinear, linking, orbit, BlanchfieldSpec,
    Conventions, Diagram, EssentialSet, Generator, Label, Leg, LinCombo, ShapeKind,
};
use exact_algebra::{laurent_bar, AnnihilatorSpec};
use proptest::prelude::*;

fn leg() -> impl Strategy<Value = Leg> {
    (1u8..=3, -2i64..=2, any::<bool>()).prop_map(|(c, k, eta)| if eta { Leg::e(k, c) } else { Leg::g(k, c) })
}

fn gamma_leg() -> impl Strategy<Value = Leg> {
    (1u8..=3, -1i64..=2).prop_map(|(c, k)| Leg::g(k, c))
}

fn yy() -> impl Strategy<Value = Diagram> {
    proptest::array::uniform6(gamma_leg()).prop_map(Diagram::YY)
}

fn h() -> impl Strategy<Value = Diagram> {
    proptest::array::uniform4(leg()).prop_map(Diagram::H)
}

fn parity(p: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                odd = !odd;
            }
        }
    }
    odd
}

/// Applies a vertex symmetry chosen by `choice` and returns it with the
/// sign predicted by counting inversions.
fn act(d: &Diagram, choice: (usize, usize, bool, [u8; 3])) -> (i64, Diagram) {
    const P: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let (pa, pb, flip, relabel) = choice;
    let rel = |l: Leg| l.with_copy(relabel[(l.copy - 1) as usize]);
    match d {
        Diagram::YY(l) => {
            let a = P[pa].map(|i| rel(l[i]));
            let b = P[pb].map(|i| rel(l[3 + i]));
            let mut sign = 1;
            if parity(&P[pa]) {
                sign = -sign;
            }
            if parity(&P[pb]) {
                sign = -sign;
            }
            let legs = if flip { [b[0], b[1], b[2], a[0], a[1], a[2]] } else { [a[0], a[1], a[2], b[0], b[1], b[2]] };
            (sign, Diagram::YY(legs))
        }
        Diagram::H(l) => {
            let mut x = l.map(rel);
            let mut sign = 1;
            if pa % 2 == 1 {
                x.swap(0, 1);
                sign = -sign;
            }
            if pb % 2 == 1 {
                x.swap(2, 3);
                sign = -sign;
            }
            if flip {
                x = [x[2], x[3], x[0], x[1]];
            }
            (sign, Diagram::H(x))
        }
        _ => unreachable!(),
    }
}

fn symmetry() -> impl Strategy<Value = (usize, usize, bool, [u8; 3])> {
    let relabels = prop_oneof![
        Just([1u8, 2, 3]),
        Just([2, 1, 3]),
        Just([3, 2, 1]),
        Just([2, 3, 1]),
        Just([3, 1, 2]),
        Just([1, 3, 2]),
    ];
    (0usize..6, 0usize..6, any::<bool>(), relabels)
}

proptest! {
    #[test]
    fn canonical_form_is_idempotent(d in prop_oneof![yy(), h()]) {
        let conv = Conventions::default();
        let (s, rep) = canonicalize_diagram(&d, &conv);
        if s != 0 {
            prop_assert_eq!(canonicalize_diagram(&rep, &conv), (1, rep.clone()));
        }
    }

    #[test]
    fn canonical_form_is_sign_coherent(d in prop_oneof![yy(), h()], g in symmetry()) {
        let conv = Conventions::default();
        let (sg, moved) = act(&d, g);
        let (s0, r0) = canonicalize_diagram(&d, &conv);
        let (s1, r1) = canonicalize_diagram(&moved, &conv);
        prop_assert_eq!(s1 * sg, s0);
        if s0 != 0 {
            prop_assert_eq!(r0, r1);
        }
    }

    #[test]
    fn copy_relabeling_is_invisible(d in yy(), g in symmetry()) {
        let conv = Conventions::default();
        let relabeled = d.map_legs(|l| l.with_copy(g.3[(l.copy - 1) as usize]));
        let (s0, r0) = canonicalize_diagram(&d, &conv);
        let (s1, r1) = canonicalize_diagram(&relabeled, &conv);
        prop_assert_eq!(s0, s1);
        if s0 != 0 {
            prop_assert_eq!(r0, r1);
        }
    }

    #[test]
    fn linking_is_hermitian(v in leg(), w in leg(), cyclic in any::<bool>()) {
        let spec = if cyclic {
            BlanchfieldSpec::cyclic(AnnihilatorSpec::symbolic(), 3)
        } else {
            BlanchfieldSpec::non_cyclic(3)
        };
        let (v, w) = if cyclic {
            (Leg::g(v.k, v.copy), Leg::g(w.k, w.copy))
        } else {
            (v, w)
        };
        let delta = spec.delta();
        let n1 = linking(v, w, &spec);
        let n2 = linking(w, v, &spec);
        prop_assert_eq!(&n2 * &laurent_bar(&delta), &laurent_bar(&n1) * &delta);
    }

    #[test]
    fn general_linking_is_hermitian(a in proptest::collection::vec(leg(), 1..4), b in proptest::collection::vec(leg(), 1..4)) {
        let spec = BlanchfieldSpec::non_cyclic(3);
        let x = a.iter().fold(Label::zero(), |acc, &l| acc.add(&l.into()));
        let y = b.iter().fold(Label::zero(), |acc, &l| acc.add(&l.into()));
        let delta = spec.delta();
        let n1 = conventional_linking(&x, &y, &spec);
        let n2 = conventional_linking(&y, &x, &spec);
        prop_assert_eq!(&n2 * &laurent_bar(&delta), &laurent_bar(&n1) * &delta);
    }

    #[test]
    fn expansion_matches_nested_loops(sizes in proptest::collection::vec(1usize..4, 4)) {
        let labels: Vec<Label> = sizes
            .iter()
            .enumerate()
            .map(|(slot, &n)| {
                (0..n).fold(Label::zero(), |acc, k| acc.add(&Leg::g(k as i64, slot as u8 % 2 + 1).into()))
            })
            .collect();
        let mut count = 0;
        for _ in 0..sizes[0] {
            for _ in 0..sizes[1] {
                for _ in 0..sizes[2] {
                    for _ in 0..sizes[3] {
                        count += 1;
                    }
                }
            }
        }
        prop_assert_eq!(expand_legs(&labels).len(), count);
    }
}

#[test]
fn essentials_are_fixed_points() {
    let conv = Conventions::default();
    for g in Generator::ALL {
        let d = g.diagram();
        assert_eq!(canonicalize_diagram(&d, &conv), (1, d.clone()), "{g}");
    }
}

#[test]
fn essential_sets_have_distinct_orbits() {
    let conv = Conventions::default();
    for set in [EssentialSet::cyclic2(), EssentialSet::cyclic3(), EssentialSet::noncyclic3()] {
        let reps: BTreeSet<_> = set.diagrams().iter().map(|d| canonicalize_diagram(d, &conv).1).collect();
        assert_eq!(reps.len(), set.generators.len(), "{}", set.name);
    }
}

#[test]
fn gamma2_orbit_matches_brute_force() {
    let d = Generator::Gamma2.diagram();
    let mut brute = BTreeSet::new();
    for pa in 0..6 {
        for pb in 0..6 {
            for flip in [false, true] {
                for relabel in [[1, 2, 3], [2, 1, 3]] {
                    brute.insert(act(&d, (pa, pb, flip, relabel)));
                }
            }
        }
    }
    let images: BTreeSet<_> = brute.iter().map(|(_, x)| x.clone()).collect();
    assert_eq!(brute.len(), images.len(), "no sign conflict");
    let orb = orbit(&d, &Conventions::default()).expect("nonzero");
    let ours: BTreeSet<_> = orb.into_iter().map(|(x, s)| (s, x)).collect();
    assert_eq!(ours, brute);
}

#[test]
fn repeated_leg_at_a_vertex_vanishes() {
    let conv = Conventions::default();
    let d = Diagram::YY([Leg::g(0, 1), Leg::g(0, 1), Leg::g(0, 2), Leg::g(0, 1), Leg::g(0, 2), Leg::g(1, 2)]);
    assert_eq!(canonicalize_diagram(&d, &conv).0, 0);
    let h = Diagram::H([Leg::g(0, 1), Leg::g(0, 2), Leg::g(1, 2), Leg::g(1, 2)]);
    assert_eq!(canonicalize_diagram(&h, &conv).0, 0);
}

#[test]
fn flipped_sign_convention_keeps_repeated_legs() {
    let d = Diagram::H([Leg::g(0, 1), Leg::g(0, 1), Leg::g(0, 2), Leg::g(0, 2)]);
    assert_eq!(canonicalize_diagram(&d, &Conventions::flipped_as()).0, 1);
}

#[test]
fn multilinear_expansion_collects_terms() {
    let conv = Conventions::default();
    let x: Label = Label::from_leg(Leg::g(0, 1)).add(&Leg::g(0, 2).into());
    let labels = vec![x.clone(), x.clone(), Leg::g(0, 1).into(), Leg::g(0, 2).into()];
    let c = expand_multilinear(ShapeKind::H, &labels, &conv);
    // H[x,x|g1,g2] with x = g1 + g2: the diagonal terms vanish and the two
    // mixed terms agree up to the vertex sign, so the sum is zero.
    assert_eq!(c, LinCombo::zero());
}
