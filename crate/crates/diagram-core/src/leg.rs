use std::fmt;

/// Basis element of one copy of the module.
///
/// Cyclic modules use `Gamma` only (the basis is `{gamma, t gamma}`);
/// non-cyclic modules use both.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    Gamma,
    Eta,
}

/// Monomial leg label `t^k x_copy`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Leg {
    pub copy: u8,
    pub basis: Basis,
    pub k: i64,
}

impl Leg {
    /// `t^k gamma_copy`.
    pub fn g(k: i64, copy: u8) -> Self {
        Leg { copy, basis: Basis::Gamma, k }
    }

    /// `t^k eta_copy`.
    pub fn e(k: i64, copy: u8) -> Self {
        Leg { copy, basis: Basis::Eta, k }
    }

    pub fn shifted(self, s: i64) -> Self {
        Leg { k: self.k + s, ..self }
    }

    pub fn with_copy(self, copy: u8) -> Self {
        Leg { copy, ..self }
    }
}

impl fmt::Display for Leg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.basis, self.k) {
            (Basis::Gamma, k) => write!(f, "({k},{})", self.copy),
            (Basis::Eta, 0) => write!(f, "(e,{})", self.copy),
            (Basis::Eta, k) => write!(f, "({k},e,{})", self.copy),
        }
    }
}
