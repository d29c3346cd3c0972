use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::rational::{int, Rational};

/// The six parameters a [`ParamPoly`] may mention.
///
/// `Alpha` is the middle coefficient of the annihilator `t + alpha + t^-1`,
/// `A..D` parametrize the two-copy automorphisms, and `R` is the pairing
/// scalar of the cyclic module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Alpha,
    A,
    B,
    C,
    D,
    R,
}

impl Var {
    pub const ALL: [Var; 6] = [Var::Alpha, Var::A, Var::B, Var::C, Var::D, Var::R];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Alpha => "alpha",
            Var::A => "a",
            Var::B => "b",
            Var::C => "c",
            Var::D => "d",
            Var::R => "r",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == s)
    }
}

/// Exponent vector `(k_alpha, k_a, k_b, k_c, k_d, k_r)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub [u32; 6]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; 6])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 6];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0) {
            *x += y;
        }
        Monomial(e)
    }

    /// Graded order key used for printing and for picking a leading term.
    fn graded_key(&self) -> (u32, [u32; 6]) {
        (self.degree(), self.0)
    }
}

/// Polynomial over `Q` in the parameters of [`Var`].
///
/// Zero coefficients are never stored, so structural equality is equality of
/// polynomials. Quotient normal forms are produced explicitly by
/// [`param_normalize`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly::default()
    }

    pub fn one() -> Self {
        ParamPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        ParamPoly::term(Monomial::one(), c)
    }

    pub fn from_int(n: i64) -> Self {
        ParamPoly::constant(int(n))
    }

    pub fn var(v: Var) -> Self {
        ParamPoly::term(Monomial::var(v), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = ParamPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::one()).is_some_and(|c| c.is_one())
    }

    /// Returns the constant value if the polynomial has no parameter.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: &Rational) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn pow(&self, n: u32) -> ParamPoly {
        let mut acc = ParamPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at a point given in [`Var`] order.
    pub fn eval(&self, point: &[Rational; 6]) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for var in Var::ALL {
                for _ in 0..m.exp(var) {
                    v *= &point[var.index()];
                }
            }
            total += v;
        }
        total
    }

    /// Substitutes a rational value for one parameter.
    pub fn specialize(&self, var: Var, value: &Rational) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (m, c) in &self.terms {
            let k = m.exp(var);
            let mut e = m.0;
            e[var.index()] = 0;
            let mut coeff = c.clone();
            for _ in 0..k {
                coeff *= value;
            }
            out.add_term(Monomial(e), coeff);
        }
        out
    }

    /// Substitutes a polynomial for one parameter.
    pub fn substitute(&self, var: Var, value: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (m, c) in &self.terms {
            let k = m.exp(var);
            let mut e = m.0;
            e[var.index()] = 0;
            let rest = ParamPoly::term(Monomial(e), c.clone());
            out += &(&rest * &value.pow(k));
        }
        out
    }

    /// Returns true if the polynomial mentions `var`.
    pub fn mentions(&self, var: Var) -> bool {
        self.terms.keys().any(|m| m.exp(var) > 0)
    }

    /// The term that is largest in graded order, used to fix signs.
    pub fn leading_term(&self) -> Option<(Monomial, Rational)> {
        self.terms.iter().max_by_key(|(m, _)| m.graded_key()).map(|(m, c)| (*m, c.clone()))
    }

    /// Terms in printing order: descending graded order.
    pub fn sorted_terms(&self) -> Vec<(Monomial, Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by_key(|x| std::cmp::Reverse(x.0.graded_key()));
        v
    }
}

/// Brings `p` to normal form.
///
/// Without the constraint the polynomial is already canonical. With the
/// constraint every monomial with `k_a >= 2` is rewritten using
/// `a^2 = 1 + ab + cd - b^2 - c^2 - d^2` until no such monomial remains.
/// Each step lowers the `a`-degree, so the loop terminates.
pub fn param_normalize(p: &ParamPoly, constraint_enabled: bool) -> ParamPoly {
    if !constraint_enabled || !p.terms.keys().any(|m| m.exp(Var::A) >= 2) {
        return p.clone();
    }
    let rhs: Vec<(Monomial, Rational)> = vec![
        (Monomial::one(), int(1)),
        (Monomial([0, 1, 1, 0, 0, 0]), int(1)),
        (Monomial([0, 0, 0, 1, 1, 0]), int(1)),
        (Monomial([0, 0, 2, 0, 0, 0]), int(-1)),
        (Monomial([0, 0, 0, 2, 0, 0]), int(-1)),
        (Monomial([0, 0, 0, 0, 2, 0]), int(-1)),
    ];
    let mut out = ParamPoly::zero();
    let mut work: Vec<(Monomial, Rational)> = p.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
    while let Some((m, c)) = work.pop() {
        if m.exp(Var::A) < 2 {
            out.add_term(m, c);
            continue;
        }
        let mut e = m.0;
        e[Var::A.index()] -= 2;
        let base = Monomial(e);
        for (rm, rc) in &rhs {
            work.push((base.mul(rm), &c * rc));
        }
    }
    out
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_param(self))
    }
}

impl<'a> Add<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for ParamPoly {
    type Output = ParamPoly;
    fn add(mut self, rhs: ParamPoly) -> ParamPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&ParamPoly> for ParamPoly {
    fn add_assign(&mut self, rhs: &ParamPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<'a> Sub<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for ParamPoly {
    type Output = ParamPoly;
    fn sub(mut self, rhs: ParamPoly) -> ParamPoly {
        self -= &rhs;
        self
    }
}

impl SubAssign<&ParamPoly> for ParamPoly {
    fn sub_assign(&mut self, rhs: &ParamPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl<'a> Mul<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: ParamPoly) -> ParamPoly {
        &self * &rhs
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -&self
    }
}

impl From<Rational> for ParamPoly {
    fn from(c: Rational) -> Self {
        ParamPoly::constant(c)
    }
}

impl From<Var> for ParamPoly {
    fn from(v: Var) -> Self {
        ParamPoly::var(v)
    }
}
