//! Coordinates over an essential set.

use std::fmt;

use diagram_core::{EssentialSet, Generator, LinCombo};
use exact_algebra::ParamPoly;

use crate::error::EngineError;

/// A reduced combination written over an essential set, with the
/// lower-order tokens kept apart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisVector {
    pub set: EssentialSet,
    pub coords: Vec<ParamPoly>,
    pub lower: LinCombo,
}

impl BasisVector {
    pub fn zero(set: EssentialSet) -> Self {
        let coords = vec![ParamPoly::zero(); set.generators.len()];
        BasisVector { set, coords, lower: LinCombo::zero() }
    }

    /// Reads coordinates off a reduced combination. Every shape term must be
    /// a generator of `set`.
    pub fn from_combo(combo: &LinCombo, set: &EssentialSet) -> Result<Self, EngineError> {
        let mut out = BasisVector::zero(set.clone());
        for (d, c) in combo.terms() {
            if d.is_lower_order() {
                out.lower.add_canonical(d.clone(), c);
                continue;
            }
            let pos = Generator::from_diagram(d).and_then(|g| set.generators.iter().position(|&h| h == g));
            match pos {
                Some(i) => out.coords[i] += c,
                None => return Err(EngineError::UnmatchedTerm(d.to_string())),
            }
        }
        Ok(out)
    }

    pub fn coord(&self, g: Generator) -> ParamPoly {
        self.set.generators.iter().position(|&h| h == g).map(|i| self.coords[i].clone()).unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero()) && self.lower.is_zero()
    }

    /// The combination of generator diagrams and lower-order tokens.
    pub fn to_combo(&self) -> LinCombo {
        let mut out = self.lower.clone();
        for (g, c) in self.set.generators.iter().zip(&self.coords) {
            out.add_canonical(g.diagram(), c);
        }
        out
    }
}

/// Splits a coefficient into a sign and a printable magnitude.
fn signed_factor(c: &ParamPoly) -> (bool, String) {
    let negative = c.len() == 1 && c.leading_term().is_some_and(|(_, x)| x < exact_algebra::int(0));
    let mag = if negative { -c } else { c.clone() };
    let text = if mag.len() > 1 { format!("({mag})") } else { mag.to_string() };
    (negative, text)
}

impl fmt::Display for BasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (g, c) in self.set.generators.iter().zip(&self.coords) {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = signed_factor(c);
            let body = if mag == "1" { g.name().to_string() } else { format!("{mag}*{}", g.name()) };
            parts.push((neg, body));
        }
        if !self.lower.is_zero() {
            parts.push((false, format!("[{}]", self.lower)));
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        for (i, (neg, body)) in parts.iter().enumerate() {
            match (i, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => f.write_str(body)?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}
