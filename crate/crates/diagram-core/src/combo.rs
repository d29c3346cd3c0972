use std::collections::BTreeMap;
use std::fmt;

use exact_algebra::{param_normalize, ParamPoly};

use crate::canonical::canonicalize_diagram;
use crate::conventions::Conventions;
use crate::diagram::Diagram;

/// A coefficient times a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagramTerm {
    pub coeff: ParamPoly,
    pub diagram: Diagram,
}

impl DiagramTerm {
    pub fn new(coeff: ParamPoly, diagram: Diagram) -> Self {
        DiagramTerm { coeff, diagram }
    }

    pub fn unit(diagram: Diagram) -> Self {
        DiagramTerm { coeff: ParamPoly::one(), diagram }
    }
}

/// A formal linear combination of canonical diagrams.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LinCombo {
    terms: BTreeMap<Diagram, ParamPoly>,
}

impl LinCombo {
    pub fn zero() -> Self {
        LinCombo::default()
    }

    pub fn single(diagram: Diagram, coeff: ParamPoly, conv: &Conventions) -> Self {
        let mut c = LinCombo::zero();
        c.add(diagram, &coeff, conv);
        c
    }

    /// Adds `coeff * d`, canonicalizing `d` first.
    pub fn add(&mut self, d: Diagram, coeff: &ParamPoly, conv: &Conventions) {
        if coeff.is_zero() {
            return;
        }
        let (s, rep) = canonicalize_diagram(&d, conv);
        if s == 0 {
            return;
        }
        let c = if s > 0 { coeff.clone() } else { -coeff };
        self.add_canonical(rep, &c);
    }

    /// Adds a term whose diagram is already canonical.
    pub fn add_canonical(&mut self, d: Diagram, coeff: &ParamPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(d.clone()).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn add_combo(&mut self, other: &LinCombo, scale: &ParamPoly) {
        for (d, c) in &other.terms {
            self.add_canonical(d.clone(), &(c * scale));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &ParamPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &Diagram) -> ParamPoly {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &ParamPoly) -> LinCombo {
        self.map_coeffs(|x| x * c)
    }

    pub fn map_coeffs<F: Fn(&ParamPoly) -> ParamPoly>(&self, f: F) -> LinCombo {
        let mut out = LinCombo::zero();
        for (d, c) in &self.terms {
            out.add_canonical(d.clone(), &f(c));
        }
        out
    }

    pub fn normalize(&self, constraint_enabled: bool) -> LinCombo {
        self.map_coeffs(|c| param_normalize(c, constraint_enabled))
    }

    /// Removes two-leg and zero-leg tokens.
    pub fn drop_lower_order(&self) -> LinCombo {
        LinCombo {
            terms: self
                .terms
                .iter()
                .filter(|(d, _)| !d.is_lower_order())
                .map(|(d, c)| (d.clone(), c.clone()))
                .collect(),
        }
    }

    /// Only the lower-order tokens.
    pub fn lower_order(&self) -> LinCombo {
        LinCombo {
            terms: self.terms.iter().filter(|(d, _)| d.is_lower_order()).map(|(d, c)| (d.clone(), c.clone())).collect(),
        }
    }
}

impl LinCombo {
    /// Prints the combination with each diagram written by `name`.
    pub fn format_with<F: Fn(&Diagram) -> String>(&self, name: F) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (d, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = match c.leading_term() {
                Some((_, lc)) if c.len() == 1 && lc < exact_algebra::int(0) => (true, -c),
                _ => (false, c.clone()),
            };
            let sep = match (i, neg) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            let coeff = if mag.is_one() {
                String::new()
            } else if mag.len() == 1 {
                format!("{mag}*")
            } else {
                format!("({mag})*")
            };
            out.push_str(&format!("{sep}{coeff}{}", name(d)));
        }
        out
    }
}

impl fmt::Display for LinCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(Diagram::to_string))
    }
}
