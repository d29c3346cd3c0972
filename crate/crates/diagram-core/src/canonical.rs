use std::collections::BTreeMap;

use itertools::Itertools;

use crate::combo::DiagramTerm;
use crate::conventions::Conventions;
use crate::diagram::Diagram;
use crate::essential::EssentialSet;
use crate::leg::Leg;

const PERMS3: [([usize; 3], bool); 6] = [
    ([0, 1, 2], false),
    ([1, 2, 0], false),
    ([2, 0, 1], false),
    ([1, 0, 2], true),
    ([0, 2, 1], true),
    ([2, 1, 0], true),
];

/// Relabelings of the copies present onto `1..=n`, as lookup tables.
fn copy_relabelings(d: &Diagram) -> Vec<BTreeMap<u8, u8>> {
    let present = d.copies();
    let n = present.len();
    (1..=n as u8).permutations(n).map(|img| present.iter().copied().zip(img).collect()).collect()
}

/// Shifts each copy so that its smallest exponent is zero.
fn normalize_copy_shifts(d: &Diagram) -> Diagram {
    let legs = d.legs();
    let mut low: BTreeMap<u8, i64> = BTreeMap::new();
    for l in &legs {
        let e = low.entry(l.copy).or_insert(l.k);
        *e = (*e).min(l.k);
    }
    d.map_legs(|l| l.shifted(-low[&l.copy]))
}

/// Images of `d` under vertex symmetries, before copy relabeling.
fn local_images(d: &Diagram, conv: &Conventions) -> Vec<(i64, Diagram)> {
    match d {
        Diagram::YY(l) => {
            let mut out = Vec::with_capacity(72);
            for (pa, oa) in PERMS3 {
                for (pb, ob) in PERMS3 {
                    let a = pa.map(|i| l[i]);
                    let b = pb.map(|i| l[3 + i]);
                    let s = conv.perm_sign(oa) * conv.perm_sign(ob);
                    out.push((s, Diagram::YY([a[0], a[1], a[2], b[0], b[1], b[2]])));
                    out.push((s, Diagram::YY([b[0], b[1], b[2], a[0], a[1], a[2]])));
                }
            }
            out
        }
        Diagram::H(l) => {
            let mut out = Vec::with_capacity(8);
            for rot in [false, true] {
                let base = if rot { [l[2], l[3], l[0], l[1]] } else { *l };
                for sl in [false, true] {
                    for sr in [false, true] {
                        let mut x = base;
                        if sl {
                            x.swap(0, 1);
                        }
                        if sr {
                            x.swap(2, 3);
                        }
                        out.push((conv.perm_sign(sl) * conv.perm_sign(sr), Diagram::H(x)));
                    }
                }
            }
            out
        }
        Diagram::Theta { legs: [x, y], m } => {
            let m = *m;
            let a = (*x, *y, m);
            let b = (x.shifted(-m), *y, -m);
            [a, b, (a.1, a.0, -a.2), (b.1, b.0, -b.2)]
                .into_iter()
                .map(|(x, y, m)| (1, normalize_copy_shifts(&Diagram::Theta { legs: [x, y], m })))
                .collect()
        }
        Diagram::Tadpole { legs: [x, y], m } => {
            let s = conv.as_sign;
            [(1, *x, *y, *m), (s, *y, *x, *m), (s, *x, *y, -m), (1, *y, *x, -m)]
                .into_iter()
                .map(|(sg, x, y, m)| (sg, normalize_copy_shifts(&Diagram::Tadpole { legs: [x, y], m })))
                .collect()
        }
        Diagram::Lollipop { stem, m, tripod } => {
            let mut out = Vec::new();
            for (p, odd) in PERMS3 {
                let t = p.map(|i| tripod[i]);
                for (sm, mm) in [(1, *m), (conv.as_sign, -m)] {
                    let d = Diagram::Lollipop { stem: *stem, m: mm, tripod: t };
                    out.push((sm * conv.perm_sign(odd), normalize_copy_shifts(&d)));
                }
            }
            out
        }
        Diagram::ZeroLeg(_) => vec![(1, d.clone())],
    }
}

/// The orbit of `d` under vertex antisymmetry, the graph symmetries and copy
/// permutations, with the sign relating each element to `d`.
///
/// Returns `None` if some element appears with both signs, in which case the
/// diagram is zero.
pub fn orbit(d: &Diagram, conv: &Conventions) -> Option<BTreeMap<Diagram, i64>> {
    let mut seen: BTreeMap<Diagram, i64> = BTreeMap::new();
    let relabelings = copy_relabelings(d);
    for (s, img) in local_images(d, conv) {
        for table in &relabelings {
            let x = img.map_legs(|l: Leg| l.with_copy(table[&l.copy]));
            match seen.get(&x) {
                Some(&prev) if prev != s => return None,
                Some(_) => {}
                None => {
                    seen.insert(x, s);
                }
            }
        }
    }
    Some(seen)
}

/// Canonical representative of a diagram: `(sign, representative)`, with
/// sign `0` when the diagram vanishes.
///
/// If the orbit contains a named essential generator, that generator is the
/// representative; otherwise the least element in the derived order is.
pub fn canonicalize_diagram(d: &Diagram, conv: &Conventions) -> (i64, Diagram) {
    let Some(orb) = orbit(d, conv) else {
        return (0, d.clone());
    };
    if let Some(e) = EssentialSet::all_diagrams().iter().find(|e| orb.contains_key(e)) {
        return (orb[e], e.clone());
    }
    let (rep, s) = orb.into_iter().next().expect("orbit contains d");
    (s, rep)
}

/// Canonicalizes a term, folding the symmetry sign into its coefficient.
pub fn canonicalize(term: &DiagramTerm, conv: &Conventions) -> DiagramTerm {
    if term.coeff.is_zero() {
        return term.clone();
    }
    let (s, rep) = canonicalize_diagram(&term.diagram, conv);
    DiagramTerm { coeff: term.coeff.scale(&exact_algebra::int(s)), diagram: rep }
}
