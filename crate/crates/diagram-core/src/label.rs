use std::collections::BTreeMap;

use exact_algebra::{LaurentPoly, ParamPoly};

use crate::leg::{Basis, Leg};

/// A general element of the module sum: a `Q[t^±1]`-combination of the
/// basis elements of each copy, with parameter coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    parts: BTreeMap<(u8, Basis), LaurentPoly>,
}

impl Label {
    pub fn zero() -> Self {
        Label::default()
    }

    /// The monomial label of a leg.
    pub fn from_leg(leg: Leg) -> Self {
        Label::zero().plus(leg.copy, leg.basis, LaurentPoly::t_pow(leg.k))
    }

    /// Adds `coeff * basis_copy`.
    pub fn plus(mut self, copy: u8, basis: Basis, coeff: LaurentPoly) -> Self {
        let entry = self.parts.entry((copy, basis)).or_default();
        *entry = &*entry + &coeff;
        if entry.is_zero() {
            self.parts.remove(&(copy, basis));
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> impl Iterator<Item = (u8, Basis, &LaurentPoly)> {
        self.parts.iter().map(|((c, b), p)| (*c, *b, p))
    }

    pub fn coeff(&self, copy: u8, basis: Basis) -> LaurentPoly {
        self.parts.get(&(copy, basis)).cloned().unwrap_or_default()
    }

    /// Multiplies by `t^s`.
    pub fn shift(&self, s: i64) -> Label {
        self.map(|p| p.shift(s))
    }

    pub fn scale(&self, c: &ParamPoly) -> Label {
        self.map(|p| p.scale(c))
    }

    pub fn add(&self, other: &Label) -> Label {
        let mut out = self.clone();
        for (c, b, p) in other.parts() {
            out = out.plus(c, b, p.clone());
        }
        out
    }

    pub fn map<F: Fn(&LaurentPoly) -> LaurentPoly>(&self, f: F) -> Label {
        let mut out = Label::zero();
        for (c, b, p) in self.parts() {
            out = out.plus(c, b, f(p));
        }
        out
    }

    /// Monomial terms `(coefficient, leg)` of the label.
    pub fn monomials(&self) -> Vec<(ParamPoly, Leg)> {
        let mut out = Vec::new();
        for (copy, basis, p) in self.parts() {
            for (k, c) in p.terms() {
                out.push((c.clone(), Leg { copy, basis, k }));
            }
        }
        out
    }
}

impl From<Leg> for Label {
    fn from(leg: Leg) -> Self {
        Label::from_leg(leg)
    }
}
