use diagram_core::{BlanchfieldSpec, Conventions, Mode};
use exact_algebra::{param_normalize, AnnihilatorSpec, ParamPoly};

/// Everything a rewriting step needs to know about its ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ctx {
    pub spec: BlanchfieldSpec,
    pub conv: Conventions,
    pub mode: Mode,
    /// Reduce coefficients modulo the quadric in `a, b, c, d`.
    pub constraint: bool,
}

impl Ctx {
    pub fn new(spec: BlanchfieldSpec) -> Self {
        Ctx { spec, conv: Conventions::default(), mode: Mode::Quotient, constraint: false }
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_conventions(mut self, conv: Conventions) -> Self {
        self.conv = conv;
        self
    }

    pub fn with_constraint(mut self, on: bool) -> Self {
        self.constraint = on;
        self
    }

    pub fn annihilator(&self) -> &AnnihilatorSpec {
        &self.spec.annihilator
    }

    pub fn is_cyclic(&self) -> bool {
        self.spec.annihilator.is_cyclic()
    }

    pub fn full(&self) -> bool {
        self.mode == Mode::Full
    }

    /// Brings a coefficient to the normal form of the ambient ring.
    pub fn normalize(&self, p: &ParamPoly) -> ParamPoly {
        let p = self.spec.annihilator.fix_alpha(p);
        if self.constraint {
            param_normalize(&p, true)
        } else {
            p
        }
    }
}
