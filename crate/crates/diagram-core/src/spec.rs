use exact_algebra::{laurent_bar, AnnihilatorSpec, LaurentPoly, ParamPoly, Var};

use crate::label::Label;
use crate::leg::{Basis, Leg};

/// Whether the module is cyclic (`{gamma, t gamma}` basis) or a sum of two
/// modules of order `t + 1` (`{gamma, eta}` basis).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleKind {
    Cyclic,
    NonCyclic,
}

/// The module sum the diagrams are colored by.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlanchfieldSpec {
    pub annihilator: AnnihilatorSpec,
    pub copies: u8,
}

impl BlanchfieldSpec {
    pub fn cyclic(annihilator: AnnihilatorSpec, copies: u8) -> Self {
        BlanchfieldSpec { annihilator, copies }
    }

    pub fn non_cyclic(copies: u8) -> Self {
        BlanchfieldSpec { annihilator: AnnihilatorSpec::NonCyclicDim2, copies }
    }

    pub fn kind(&self) -> ModuleKind {
        if self.annihilator.is_cyclic() {
            ModuleKind::Cyclic
        } else {
            ModuleKind::NonCyclic
        }
    }

    /// The denominator shared by all prescribed linkings.
    pub fn delta(&self) -> LaurentPoly {
        self.annihilator.delta()
    }
}

/// Prescribed linking of two monomial legs, as a numerator over `delta`.
///
/// Cyclic: `r t^(k_v - k_w)` for legs of the same copy and `0` otherwise.
/// Non-cyclic (denominator `t + 1`): `gamma` against `eta` gives
/// `t^(k_v - k_w)`, `eta` against `gamma` gives `t^(k_v - k_w + 1)`, and
/// equal basis elements give `0`.
pub fn linking(v: Leg, w: Leg, spec: &BlanchfieldSpec) -> LaurentPoly {
    if v.copy != w.copy {
        return LaurentPoly::zero();
    }
    let d = v.k - w.k;
    match spec.kind() {
        ModuleKind::Cyclic => LaurentPoly::monomial(d, ParamPoly::var(Var::R)),
        ModuleKind::NonCyclic => match (v.basis, w.basis) {
            (Basis::Gamma, Basis::Eta) => LaurentPoly::t_pow(d),
            (Basis::Eta, Basis::Gamma) => LaurentPoly::t_pow(d + 1),
            _ => LaurentPoly::zero(),
        },
    }
}

/// Linking of two general labels under the sesquilinear extension of the
/// prescribed one: `f(P x, Q y) = P * bar(Q) * f(x, y)`.
pub fn conventional_linking(x: &Label, y: &Label, spec: &BlanchfieldSpec) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (cx, bx, px) in x.parts() {
        for (cy, by, py) in y.parts() {
            let f = linking(Leg { copy: cx, basis: bx, k: 0 }, Leg { copy: cy, basis: by, k: 0 }, spec);
            if f.is_zero() {
                continue;
            }
            out += &(&(px * &laurent_bar(py)) * &f);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_algebra::int;

    fn cyc() -> BlanchfieldSpec {
        BlanchfieldSpec::cyclic(AnnihilatorSpec::cyclic(int(1)).unwrap(), 2)
    }

    #[test]
    fn cyclic_examples() {
        let r = ParamPoly::var(Var::R);
        assert_eq!(linking(Leg::g(0, 1), Leg::g(1, 1), &cyc()), LaurentPoly::monomial(-1, r));
        assert!(linking(Leg::g(0, 1), Leg::g(0, 2), &cyc()).is_zero());
    }

    #[test]
    fn non_cyclic_examples() {
        let s = BlanchfieldSpec::non_cyclic(3);
        assert_eq!(linking(Leg::e(0, 1), Leg::g(0, 1), &s), LaurentPoly::t_pow(1));
        assert_eq!(linking(Leg::g(0, 1), Leg::e(0, 1), &s), LaurentPoly::one());
        assert!(linking(Leg::g(0, 1), Leg::g(0, 1), &s).is_zero());
    }

    #[test]
    fn sesquilinear_extension_matches_monomials() {
        let s = cyc();
        let v = Leg::g(2, 1);
        let w = Leg::g(-1, 1);
        assert_eq!(conventional_linking(&v.into(), &w.into(), &s), linking(v, w, &s));
    }
}
