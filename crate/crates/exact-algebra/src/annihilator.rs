use num_traits::Zero;

use crate::laurent::LaurentPoly;
use crate::param::{ParamPoly, Var};
use crate::rational::{int, Rational};
use crate::AlgebraError;

/// The annihilator of a `Q`-dimension two Blanchfield module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AnnihilatorSpec {
    /// `delta = t + alpha + t^-1`; `alpha` is symbolic when `None`.
    CyclicDim2 { alpha: Option<Rational> },
    /// `delta = t + 1` on each summand.
    NonCyclicDim2,
}

impl AnnihilatorSpec {
    /// Cyclic annihilator with symbolic `alpha`.
    pub fn symbolic() -> Self {
        AnnihilatorSpec::CyclicDim2 { alpha: None }
    }

    /// Cyclic annihilator with a fixed rational `alpha != -2`.
    pub fn cyclic(alpha: Rational) -> Result<Self, AlgebraError> {
        if alpha == int(-2) {
            return Err(AlgebraError::InvalidAlpha);
        }
        Ok(AnnihilatorSpec::CyclicDim2 { alpha: Some(alpha) })
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self, AnnihilatorSpec::CyclicDim2 { .. })
    }

    /// The middle coefficient as a polynomial: the variable `alpha` or a
    /// constant. The non-cyclic annihilator reports zero.
    pub fn alpha_poly(&self) -> ParamPoly {
        match self {
            AnnihilatorSpec::CyclicDim2 { alpha: Some(a) } => ParamPoly::constant(a.clone()),
            AnnihilatorSpec::CyclicDim2 { alpha: None } => ParamPoly::var(Var::Alpha),
            AnnihilatorSpec::NonCyclicDim2 => ParamPoly::zero(),
        }
    }

    /// `delta` as a Laurent polynomial.
    pub fn delta(&self) -> LaurentPoly {
        match self {
            AnnihilatorSpec::CyclicDim2 { .. } => {
                let mut d = LaurentPoly::t_pow(1) + LaurentPoly::t_pow(-1);
                d.add_term(0, &self.alpha_poly());
                d
            }
            AnnihilatorSpec::NonCyclicDim2 => LaurentPoly::t_pow(1) + LaurentPoly::one(),
        }
    }

    /// `delta(1)`, which is `alpha + 2` or `2`.
    pub fn delta_at_one(&self) -> ParamPoly {
        self.delta().eval_t(&int(1))
    }

    /// Specializes a coefficient to this annihilator: substitutes a fixed
    /// `alpha` if one is set.
    pub fn fix_alpha(&self, p: &ParamPoly) -> ParamPoly {
        match self {
            AnnihilatorSpec::CyclicDim2 { alpha: Some(a) } => p.specialize(Var::Alpha, a),
            _ => p.clone(),
        }
    }
}

impl Default for AnnihilatorSpec {
    fn default() -> Self {
        AnnihilatorSpec::symbolic()
    }
}

/// True if the rational is a legal numeric `alpha`.
pub fn alpha_allowed(alpha: &Rational) -> bool {
    !(alpha + int(2)).is_zero()
}
