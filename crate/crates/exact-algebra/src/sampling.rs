use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::param::Var;
use crate::rational::{int, Rational};

/// A rational point `(a, b, c, d)` on the quadric
/// `a^2 + b^2 + c^2 + d^2 = 1 + ab + cd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintPoint {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl ConstraintPoint {
    /// The quadric's left side minus its right side; zero on valid points.
    pub fn defect(&self) -> Rational {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        a * a + b * b + c * c + d * d - a * b - c * d - int(1)
    }

    /// Full evaluation point in [`Var`] order with the given `alpha` and `r`.
    pub fn with(&self, alpha: Rational, r: Rational) -> [Rational; 6] {
        let mut p: [Rational; 6] = Default::default();
        p[Var::Alpha.index()] = alpha;
        p[Var::A.index()] = self.a.clone();
        p[Var::B.index()] = self.b.clone();
        p[Var::C.index()] = self.c.clone();
        p[Var::D.index()] = self.d.clone();
        p[Var::R.index()] = r;
        p
    }
}

/// Random rational `p/q` with `|p| <= bound` and `1 <= q <= bound`.
pub fn random_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    let p = rng.gen_range(-bound..=bound);
    let q = rng.gen_range(1..=bound.max(1));
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Deterministic rational points on the quadric.
///
/// The quadratic form `Q(x) = a^2+b^2+c^2+d^2-ab-cd` is positive definite and
/// `Q(1,0,0,0) = 1`. A line `p0 + s v` through that base point meets the
/// quadric a second time at `s = -2 B(p0, v) / Q(v)`, which is rational.
pub fn constraint_points(n: usize, seed: u64) -> Vec<ConstraintPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let v: [Rational; 4] = std::array::from_fn(|_| random_rational(&mut rng, 5));
        let q = &v[0] * &v[0] + &v[1] * &v[1] + &v[2] * &v[2] + &v[3] * &v[3] - &v[0] * &v[1] - &v[2] * &v[3];
        if q.is_zero() {
            continue;
        }
        let b = &v[0] - &v[1] / int(2);
        let s = -(b * int(2)) / q;
        if s.is_zero() {
            continue;
        }
        let p = ConstraintPoint { a: int(1) + &s * &v[0], b: &s * &v[1], c: &s * &v[2], d: &s * &v[3] };
        debug_assert!(p.defect().is_zero());
        out.push(p);
    }
    out
}

/// Deterministic rational points `(a, b)` on `a^2 + b^2 - ab = 1`, found by
/// the same secant construction through `(1, 0)`.
pub fn chi_points(n: usize, seed: u64) -> Vec<(Rational, Rational)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let v0 = random_rational(&mut rng, 7);
        let v1 = random_rational(&mut rng, 7);
        let q = &v0 * &v0 + &v1 * &v1 - &v0 * &v1;
        if q.is_zero() {
            continue;
        }
        let s = -((&v0 - &v1 / int(2)) * int(2)) / q;
        if s.is_zero() {
            continue;
        }
        out.push((int(1) + &s * &v0, &s * &v1));
    }
    out
}

/// Deterministic distinct rational values of `alpha` avoiding `-2` and `1`.
pub fn alpha_samples(n: usize, seed: u64) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Rational> = Vec::with_capacity(n);
    while out.len() < n {
        let a = random_rational(&mut rng, 9);
        if a != int(-2) && a != int(1) && !out.contains(&a) {
            out.push(a);
        }
    }
    out
}
