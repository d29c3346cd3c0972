use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::annihilator::AnnihilatorSpec;
use crate::param::{param_normalize, ParamPoly, Var};
use crate::rational::Rational;
use crate::AlgebraError;

/// Laurent polynomial in `t` with [`ParamPoly`] coefficients.
///
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, ParamPoly>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(ParamPoly::one())
    }

    pub fn constant(c: ParamPoly) -> Self {
        LaurentPoly::monomial(0, c)
    }

    /// `c * t^k`.
    pub fn monomial(k: i64, c: ParamPoly) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(k, &c);
        p
    }

    /// `t^k`.
    pub fn t_pow(k: i64) -> Self {
        LaurentPoly::monomial(k, ParamPoly::one())
    }

    /// Builds from `(exponent, rational)` pairs.
    pub fn from_rationals<I: IntoIterator<Item = (i64, Rational)>>(it: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (k, c) in it {
            p.add_term(k, &ParamPoly::constant(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &ParamPoly)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, k: i64) -> ParamPoly {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, k: i64, c: &ParamPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// Multiplies by `t^s`.
    pub fn shift(&self, s: i64) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(k, c)| (k + s, c.clone())).collect() }
    }

    pub fn scale(&self, c: &ParamPoly) -> LaurentPoly {
        self.map_coeffs(|x| x * c)
    }

    /// Applies `f` to every coefficient, dropping results that vanish.
    pub fn map_coeffs<F: Fn(&ParamPoly) -> ParamPoly>(&self, f: F) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (k, c) in &self.terms {
            out.add_term(*k, &f(c));
        }
        out
    }

    /// Normalizes every coefficient with [`param_normalize`].
    pub fn normalize(&self, constraint_enabled: bool) -> LaurentPoly {
        self.map_coeffs(|c| param_normalize(c, constraint_enabled))
    }

    pub fn specialize(&self, var: Var, value: &Rational) -> LaurentPoly {
        self.map_coeffs(|c| c.specialize(var, value))
    }

    /// Substitutes `t = value`.
    pub fn eval_t(&self, value: &Rational) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (k, c) in &self.terms {
            let mut v = Rational::from_integer(1.into());
            let base = if *k >= 0 { value.clone() } else { value.recip() };
            for _ in 0..k.unsigned_abs() {
                v *= &base;
            }
            out += &c.scale(&v);
        }
        out
    }
}

/// The bar involution `t -> t^-1`.
pub fn laurent_bar(q: &LaurentPoly) -> LaurentPoly {
    LaurentPoly { terms: q.terms.iter().map(|(k, c)| (-k, c.clone())).collect() }
}

/// Reduces `q` modulo the annihilator.
///
/// For the cyclic annihilator the result is supported on `{0, 1}` and is
/// obtained with `t^2 = -alpha t - 1` for high exponents and
/// `t^-1 = -t - alpha` for negative ones. For the non-cyclic annihilator
/// `t = -1` and the result is a constant.
pub fn laurent_mod_delta(q: &LaurentPoly, spec: &AnnihilatorSpec) -> LaurentPoly {
    match spec {
        AnnihilatorSpec::NonCyclicDim2 => {
            let mut c = ParamPoly::zero();
            for (k, x) in &q.terms {
                if k.rem_euclid(2) == 0 {
                    c += x;
                } else {
                    c -= x;
                }
            }
            LaurentPoly::constant(c)
        }
        AnnihilatorSpec::CyclicDim2 { .. } => {
            let alpha = spec.alpha_poly();
            let mut work = q.terms.clone();
            while let Some((&k, _)) = work.iter().next_back().filter(|(k, _)| **k >= 2) {
                let c = work.remove(&k).unwrap();
                push(&mut work, k - 1, &-(&alpha * &c));
                push(&mut work, k - 2, &-c);
            }
            while let Some((&k, _)) = work.iter().next().filter(|(k, _)| **k < 0) {
                let c = work.remove(&k).unwrap();
                push(&mut work, k + 1, &-(&alpha * &c));
                push(&mut work, k + 2, &-c);
            }
            LaurentPoly { terms: work }
        }
    }
}

fn push(map: &mut BTreeMap<i64, ParamPoly>, k: i64, c: &ParamPoly) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(k).or_default();
    *entry += c;
    if entry.is_zero() {
        map.remove(&k);
    }
}

/// Divides a polynomial in `t` (non-negative exponents) by a monic divisor.
///
/// Returns `(quotient, remainder)`. Both inputs are given as coefficient
/// maps and the divisor's leading coefficient must be one.
pub(crate) fn divide_monic(num: &LaurentPoly, divisor: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    let dd = divisor.max_exp().expect("nonzero divisor");
    let d0 = divisor.min_exp().expect("nonzero divisor");
    debug_assert!(d0 >= 0 && divisor.coeff(dd).is_one());
    let mut rem = num.clone();
    let mut quot = LaurentPoly::zero();
    while let Some(top) = rem.max_exp().filter(|k| *k >= dd) {
        let c = rem.coeff(top);
        let s = top - dd;
        quot.add_term(s, &c);
        rem = &rem - &divisor.shift(s).scale(&c);
    }
    (quot, rem)
}

/// Splits an element of `(1/delta) Q[t^±1]` into a prescribed fractional
/// part plus a polynomial excess.
///
/// Both `numerator` and `prescribed` are numerators over `delta`. The
/// returned `E` satisfies `numerator = prescribed + E * delta`, with all
/// coefficients brought to normal form (with the quadric constraint when
/// `constraint_enabled`).
pub fn split_fraction(
    numerator: &LaurentPoly,
    prescribed: &LaurentPoly,
    spec: &AnnihilatorSpec,
    constraint_enabled: bool,
) -> Result<LaurentPoly, AlgebraError> {
    let diff = (numerator - prescribed).normalize(constraint_enabled);
    if diff.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    // delta = t^-shift * monic, with monic a polynomial starting at t^0.
    let (monic, delta_shift) = match spec {
        AnnihilatorSpec::CyclicDim2 { .. } => {
            let mut m = LaurentPoly::t_pow(2) + LaurentPoly::one();
            m.add_term(1, &spec.alpha_poly());
            (m, -1)
        }
        AnnihilatorSpec::NonCyclicDim2 => (LaurentPoly::t_pow(1) + LaurentPoly::one(), 0),
    };
    let low = diff.min_exp().unwrap();
    let shifted = diff.shift(-low);
    let (quot, rem) = divide_monic(&shifted, &monic);
    let rem = rem.normalize(constraint_enabled);
    if !rem.is_zero() {
        return Err(AlgebraError::NotPolynomialExcess { remainder: rem.to_string() });
    }
    // diff = t^low * quot * monic = t^(low - delta_shift) * quot * delta
    Ok(quot.shift(low - delta_shift).normalize(constraint_enabled))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_laurent(self))
    }
}

impl From<ParamPoly> for LaurentPoly {
    fn from(c: ParamPoly) -> Self {
        LaurentPoly::constant(c)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c);
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, &-c);
        }
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                out.add_term(k1 + k2, &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
