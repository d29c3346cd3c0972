//! Reduction of monomial YY and H diagrams to essential generators.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use diagram_core::{canonicalize_diagram, Basis, Diagram, Generator, Label, Leg, LinCombo};
use exact_algebra::ParamPoly;
use itertools::Itertools;

use crate::context::Ctx;
use crate::error::EngineError;
use crate::general::{reduce_exponent_raw, reduce_labels, restore_linkings, GeneralDiagram, RawCombo};

/// Memoized reducer for one ambient space.
///
/// Results are combinations whose YY and H terms are named essential
/// generators; lower-order tokens are kept only in full mode.
pub struct Reducer {
    ctx: Ctx,
    memo4: RefCell<HashMap<[Leg; 4], LinCombo>>,
    memo6: RefCell<HashMap<[Leg; 6], LinCombo>>,
}

fn copy_counts(legs: &[Leg]) -> BTreeMap<u8, usize> {
    legs.iter().map(|l| l.copy).counts().into_iter().collect()
}

fn odd_copy(legs: &[Leg]) -> bool {
    copy_counts(legs).values().any(|n| n % 2 == 1)
}

fn out_of_range(legs: &[Leg]) -> Option<usize> {
    legs.iter().position(|l| !(0..=1).contains(&l.k))
}

fn unit(g: Generator, c: ParamPoly) -> LinCombo {
    let mut out = LinCombo::zero();
    out.add_canonical(g.diagram(), &c);
    out
}

impl Reducer {
    pub fn new(ctx: Ctx) -> Self {
        Reducer { ctx, memo4: RefCell::default(), memo6: RefCell::default() }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    fn sign(&self, s: i64) -> ParamPoly {
        ParamPoly::from_int(s)
    }

    fn as_sign(&self) -> ParamPoly {
        self.sign(self.ctx.conv.as_sign)
    }

    /// Two legs at one vertex with equal labels force the diagram to vanish
    /// when the vertex sign is `-1`.
    fn repeated_at_vertex(&self, groups: &[&[Leg]]) -> bool {
        self.ctx.conv.as_sign < 0 && groups.iter().any(|g| g.iter().duplicates().next().is_some())
    }

    /// Reduces any diagram; lower-order tokens pass through in full mode.
    pub fn reduce(&self, d: &Diagram) -> Result<LinCombo, EngineError> {
        match d {
            Diagram::YY(l) => self.reduc6(*l),
            Diagram::H(l) => self.reduc4(*l),
            _ if self.ctx.full() => Ok(LinCombo::single(d.clone(), ParamPoly::one(), &self.ctx.conv)),
            _ => Ok(LinCombo::zero()),
        }
    }

    /// Reduces and sums raw terms.
    pub fn reduce_raw(&self, terms: &RawCombo) -> Result<LinCombo, EngineError> {
        let mut out = LinCombo::zero();
        for (c, d) in terms {
            out.add_combo(&self.reduce(d)?, c);
        }
        Ok(out.normalize(self.ctx.constraint).map_coeffs(|c| self.ctx.normalize(c)))
    }

    pub fn reduce_combo(&self, combo: &LinCombo) -> Result<LinCombo, EngineError> {
        let raw: RawCombo = combo.terms().map(|(d, c)| (c.clone(), d.clone())).collect();
        self.reduce_raw(&raw)
    }

    /// Reduction of a four-leg tuple `H[x1,x2|x3,x4]`.
    pub fn reduc4(&self, legs: [Leg; 4]) -> Result<LinCombo, EngineError> {
        if let Some(hit) = self.memo4.borrow().get(&legs) {
            return Ok(hit.clone());
        }
        let out =
            if self.ctx.is_cyclic() { self.reduc4_cyclic(legs)? } else { self.reduce_noncyclic(&Diagram::H(legs))? };
        self.memo4.borrow_mut().insert(legs, out.clone());
        Ok(out)
    }

    /// Reduction of a six-leg tuple `YY[a1,a2,a3;b1,b2,b3]`.
    pub fn reduc6(&self, legs: [Leg; 6]) -> Result<LinCombo, EngineError> {
        if let Some(hit) = self.memo6.borrow().get(&legs) {
            return Ok(hit.clone());
        }
        let out =
            if self.ctx.is_cyclic() { self.reduc6_cyclic(legs)? } else { self.reduce_noncyclic(&Diagram::YY(legs))? };
        self.memo6.borrow_mut().insert(legs, out.clone());
        Ok(out)
    }

    fn reduc4_cyclic(&self, l: [Leg; 4]) -> Result<LinCombo, EngineError> {
        if odd_copy(&l) || self.repeated_at_vertex(&[&l[..2], &l[2..]]) {
            return Ok(LinCombo::zero());
        }
        if let Some(i) = out_of_range(&l) {
            return self.reduce_raw(&reduce_exponent_raw(&Diagram::H(l), i, &self.ctx)?);
        }
        let e: Vec<u8> = l.iter().map(|x| x.copy).collect();
        let g = |k: i64, c: u8| Leg::g(k, c);
        if e.iter().all_equal() {
            // Half the sum of the distributions over two copies, with the
            // sign of the vertex transpositions that bring the tuple to
            // (x, tx, x, tx).
            let mut out = LinCombo::zero();
            for t in [
                [g(0, 1), g(1, 1), g(0, 2), g(1, 2)],
                [g(0, 1), g(1, 2), g(0, 1), g(1, 2)],
                [g(0, 1), g(1, 2), g(0, 2), g(1, 1)],
            ] {
                out.add_combo(&self.reduc4(t)?, &ParamPoly::one());
            }
            let odd = (l[0].k + l[2].k) % 2 != 0;
            let s = if odd { self.as_sign() } else { ParamPoly::one() };
            return Ok(out.scale(&s));
        }
        if e[0] == e[1] {
            let mut out = self.reduc4([l[0], l[2], l[1], l[3]])?;
            out.add_combo(&self.reduc4([l[0], l[3], l[1], l[2]])?, &ParamPoly::from_int(-1));
            return Ok(out);
        }
        if e[0] == e[3] {
            return Ok(self.reduc4([l[0], l[1], l[3], l[2]])?.scale(&self.as_sign()));
        }
        let d1 = l[2].k - l[0].k;
        let d2 = l[3].k - l[1].k;
        let h = match (d1, d2) {
            (0, 0) => Generator::H1,
            (0, _) | (_, 0) => Generator::H2,
            _ if d1 == d2 => Generator::H3,
            _ => Generator::H4,
        };
        Ok(unit(h, ParamPoly::one()))
    }

    fn reduc6_cyclic(&self, l: [Leg; 6]) -> Result<LinCombo, EngineError> {
        if odd_copy(&l) || self.repeated_at_vertex(&[&l[..3], &l[3..]]) {
            return Ok(LinCombo::zero());
        }
        if let Some(i) = out_of_range(&l) {
            return self.reduce_raw(&reduce_exponent_raw(&Diagram::YY(l), i, &self.ctx)?);
        }
        let counts = copy_counts(&l);
        match counts.len() {
            2 => self.classify_two_copies(l, &counts),
            3 => self.classify_three_copies(l),
            _ => Err(EngineError::UnmatchedTerm(Diagram::YY(l).to_string())),
        }
    }

    /// Final steps of the six-leg algorithm: relabel copies so that the
    /// rarer one is copy 1, rotate tripods to put it on top and read off
    /// the generator.
    fn classify_two_copies(&self, l: [Leg; 6], counts: &BTreeMap<u8, usize>) -> Result<LinCombo, EngineError> {
        let rare = counts.iter().find(|(_, &n)| n == 2).map(|(&c, _)| c);
        let Some(rare) = rare else {
            return Err(EngineError::UnmatchedTerm(Diagram::YY(l).to_string()));
        };
        let l = l.map(|x| x.with_copy(if x.copy == rare { 1 } else { 2 }));
        let rotate = |t: [Leg; 3]| -> Option<[Leg; 3]> {
            let p = t.iter().position(|x| x.copy == 1)?;
            Some([t[p], t[(p + 1) % 3], t[(p + 2) % 3]])
        };
        let (Some(a), Some(b)) = (rotate([l[0], l[1], l[2]]), rotate([l[3], l[4], l[5]])) else {
            return Err(EngineError::UnmatchedTerm(Diagram::YY(l).to_string()));
        };
        let s = a[2].k + b[1].k - a[1].k - b[2].k;
        let sign = if s == 0 { ParamPoly::one() } else { self.as_sign() };
        let g = if (a[0].k + b[0].k) % 2 == 0 { Generator::Gamma1 } else { Generator::Gamma2 };
        Ok(unit(g, sign))
    }

    /// Identifies a six-leg tuple in three copies with a named generator by
    /// searching through exact symmetries: vertex antisymmetry, tripod swap,
    /// copy permutations, multiplication of one copy by `t`, and, when every
    /// copy meets both tripods, multiplication of one tripod by `t`.
    fn classify_three_copies(&self, l: [Leg; 6]) -> Result<LinCombo, EngineError> {
        let spread = (1..=3u8).all(|c| l[..3].iter().filter(|x| x.copy == c).count() == 1);
        let conv = &self.ctx.conv;
        let in_range = |d: &[Leg; 6]| d.iter().all(|x| (0..=1).contains(&x.k));
        let normalize = |d: [Leg; 6]| {
            let mut low: BTreeMap<u8, i64> = BTreeMap::new();
            for x in &d {
                let e = low.entry(x.copy).or_insert(x.k);
                *e = (*e).min(x.k);
            }
            d.map(|x| x.shifted(-low[&x.copy]))
        };
        let mut seen: BTreeMap<Diagram, i64> = BTreeMap::new();
        let mut queue = VecDeque::from([(1i64, l)]);
        while let Some((sign, cur)) = queue.pop_front() {
            let (s, rep) = canonicalize_diagram(&Diagram::YY(cur), conv);
            if s == 0 {
                return Ok(LinCombo::zero());
            }
            let total = sign * s;
            match seen.get(&rep) {
                Some(&prev) if prev != total => return Ok(LinCombo::zero()),
                Some(_) => continue,
                None => {
                    seen.insert(rep.clone(), total);
                }
            }
            if let Some(g) = Generator::from_diagram(&rep) {
                return Ok(unit(g, self.sign(total)));
            }
            let mut next: BTreeSet<[Leg; 6]> = BTreeSet::new();
            for c in 1..=3u8 {
                for dk in [-1, 1] {
                    next.insert(cur.map(|x| if x.copy == c { x.shifted(dk) } else { x }));
                }
            }
            if spread {
                for side in 0..2 {
                    for dk in [-1, 1] {
                        let mut moved = cur;
                        for x in &mut moved[3 * side..3 * side + 3] {
                            *x = x.shifted(dk);
                        }
                        next.insert(normalize(moved));
                    }
                }
            }
            for n in next.into_iter().filter(in_range) {
                queue.push_back((sign, n));
            }
        }
        Err(EngineError::UnmatchedTerm(Diagram::YY(l).to_string()))
    }

    /// Reduction in the non-cyclic case, where `t` acts as `-1`.
    fn reduce_noncyclic(&self, d: &Diagram) -> Result<LinCombo, EngineError> {
        let legs = d.legs();
        if legs.iter().any(|x| x.k != 0) {
            let gd = GeneralDiagram::from_diagram(d, &self.ctx.spec).expect("YY or H diagram");
            return self.reduce_raw(&restore_linkings(&reduce_labels(&gd, &self.ctx), &self.ctx)?);
        }
        // Scaling gamma_i by x and eta_i by 1/x is an automorphism, so a copy
        // with unbalanced gamma and eta counts kills the diagram.
        let balanced = copy_counts(&legs).keys().all(|&c| {
            let g = legs.iter().filter(|x| x.copy == c && x.basis == Basis::Gamma).count();
            2 * g == legs.iter().filter(|x| x.copy == c).count()
        });
        if !balanced {
            return Ok(LinCombo::zero());
        }
        let groups: Vec<&[Leg]> = match d {
            Diagram::YY(_) => vec![&legs[..3], &legs[3..]],
            _ => vec![&legs[..2], &legs[2..]],
        };
        if self.repeated_at_vertex(&groups) {
            return Ok(LinCombo::zero());
        }
        if let Diagram::H(l) = d {
            if l[0].copy == l[1].copy {
                let mut out = self.reduc4([l[0], l[2], l[1], l[3]])?;
                out.add_combo(&self.reduc4([l[0], l[3], l[1], l[2]])?, &ParamPoly::from_int(-1));
                return Ok(out);
            }
        }
        let (s, rep) = canonicalize_diagram(d, &self.ctx.conv);
        if s == 0 {
            return Ok(LinCombo::zero());
        }
        if let Some(g) = Generator::from_diagram(&rep) {
            return Ok(unit(g, self.sign(s)));
        }
        if let Diagram::YY(l) = d {
            // Every copy meets both tripods but the first tripod mixes gamma
            // and eta: apply the automorphism gamma -> eta, eta -> -gamma to
            // the copy of its first eta leg.
            let spread = copy_counts(&legs).keys().all(|&c| l[..3].iter().filter(|x| x.copy == c).count() == 1);
            if let Some(target) = l[..3].iter().find(|x| x.basis == Basis::Eta).filter(|_| spread) {
                let gd = GeneralDiagram::from_diagram(d, &self.ctx.spec).expect("YY diagram");
                let swapped = gd.relabel(|_, lab| nu_on_copy(lab, target.copy));
                return self.reduce_raw(&restore_linkings(&swapped, &self.ctx)?);
            }
        }
        Err(EngineError::UnmatchedTerm(d.to_string()))
    }
}

/// The automorphism `gamma -> eta`, `eta -> -gamma` on one copy.
pub fn nu_on_copy(label: &Label, copy: u8) -> Label {
    let mut out = Label::zero();
    for (c, b, p) in label.parts() {
        out = match (c == copy, b) {
            (false, _) => out.plus(c, b, p.clone()),
            (true, Basis::Gamma) => out.plus(c, Basis::Eta, p.clone()),
            (true, Basis::Eta) => out.plus(c, Basis::Gamma, -p),
        };
    }
    out
}
