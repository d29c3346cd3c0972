//! Acceptance checks, one printed line per criterion.
//!
//! Runs without the libtest harness so that the summary lines always show.

use std::process::{Command, ExitCode};
use std::time::Instant;

use diagram_core::{BlanchfieldSpec, Diagram, Leg, LinCombo};
use exact_algebra::{
    int, laurent_bar, laurent_mod_delta, random_rational, AnnihilatorSpec, LaurentPoly, ParamPoly, Rational, Var,
};
use itertools::Itertools;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reduction_engine::{perfect_matchings, Ctx, Reducer};
use verifier_cli::{run_scenario, Env, Mutation, Status};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn scenarios(ids: &[&str]) -> Check {
    let env = Env::default();
    let mut bad = Vec::new();
    for id in ids {
        let r = run_scenario(id, &env).map_err(|e| e.to_string())?;
        if r.status != Status::Pass {
            bad.push(format!("{id}: computed {} expected {}", r.computed, r.expected));
        }
    }
    if bad.is_empty() {
        Ok(ids.join(", "))
    } else {
        Err(bad.join("; "))
    }
}

fn dense_remainder(mut coeffs: Vec<Rational>, alpha: &Rational) -> Vec<Rational> {
    while coeffs.len() > 2 {
        let top = coeffs.pop().unwrap();
        let n = coeffs.len();
        coeffs[n - 1] -= alpha * &top;
        coeffs[n - 2] -= &top;
    }
    coeffs
}

/// Reduction modulo `t + alpha + t^-1` against schoolbook division of
/// `t^s q(t)` by `t^2 + alpha t + 1`.
fn ring_oracle(rng: &mut ChaCha8Rng) -> Check {
    for case in 0..100 {
        let alpha = loop {
            let a = random_rational(rng, 6);
            if a != int(-2) {
                break a;
            }
        };
        let spec = AnnihilatorSpec::cyclic(alpha.clone()).map_err(|e| e.to_string())?;
        let mut q = LaurentPoly::zero();
        for _ in 0..rng.gen_range(1..6) {
            q.add_term(rng.gen_range(-5..=7), &ParamPoly::constant(random_rational(rng, 9)));
        }
        let res = laurent_mod_delta(&q, &spec);
        let diff = &q - &res;
        let shift = -diff.min_exp().unwrap_or(0).min(0);
        let top = diff.max_exp().unwrap_or(0) + shift;
        let mut dense = vec![int(0); (top + 1).max(1) as usize];
        for (k, c) in diff.terms() {
            dense[(k + shift) as usize] += c.as_constant().unwrap();
        }
        let window = res.terms().all(|(k, _)| k == 0 || k == 1);
        if !window || !dense_remainder(dense, &alpha).iter().all(Zero::is_zero) {
            return Err(format!("ring oracle case {case}: {q} -> {res}"));
        }
    }
    Ok("ring oracle 100/100".into())
}

fn random_laurent(rng: &mut ChaCha8Rng) -> LaurentPoly {
    let vars = [Var::Alpha, Var::A, Var::R];
    let mut q = LaurentPoly::zero();
    for _ in 0..rng.gen_range(0..5) {
        let mut c = ParamPoly::constant(random_rational(rng, 7));
        if rng.gen_bool(0.5) {
            c = &c * &ParamPoly::var(vars[rng.gen_range(0..vars.len())]);
        }
        q.add_term(rng.gen_range(-3..=3), &c);
    }
    q
}

fn bar_checks(rng: &mut ChaCha8Rng) -> Check {
    for case in 0..100 {
        let p = random_laurent(rng);
        let q = random_laurent(rng);
        if laurent_bar(&laurent_bar(&p)) != p || laurent_bar(&(&p * &q)) != &laurent_bar(&p) * &laurent_bar(&q) {
            return Err(format!("bar case {case}: {p}, {q}"));
        }
    }
    Ok("bar involution 100/100".into())
}

fn legs_in(copies: u8, ks: std::ops::RangeInclusive<i64>) -> Vec<Leg> {
    (1..=copies).flat_map(|c| ks.clone().map(move |k| Leg::g(k, c))).collect()
}

fn swap12(l: Leg) -> Leg {
    match l.copy {
        1 => l.with_copy(2),
        2 => l.with_copy(1),
        _ => l,
    }
}

fn negated(a: &LinCombo, b: &LinCombo) -> bool {
    let mut s = a.clone();
    s.add_combo(b, &ParamPoly::one());
    s.is_zero()
}

/// Vertex transpositions negate, exchanging copies 1 and 2 preserves.
fn coherence() -> Check {
    let ann = |a: Option<i64>| match a {
        None => AnnihilatorSpec::symbolic(),
        Some(a) => AnnihilatorSpec::cyclic(int(a)).unwrap(),
    };
    let r4 = Reducer::new(Ctx::new(BlanchfieldSpec::cyclic(ann(None), 2)));
    let legs = legs_in(2, -1..=2);
    let mut n4 = 0;
    for t in (0..4).map(|_| legs.iter().copied()).multi_cartesian_product() {
        let l = [t[0], t[1], t[2], t[3]];
        let v = r4.reduc4(l).map_err(|e| e.to_string())?;
        let a = r4.reduc4([l[1], l[0], l[2], l[3]]).map_err(|e| e.to_string())?;
        let b = r4.reduc4([l[0], l[1], l[3], l[2]]).map_err(|e| e.to_string())?;
        let c = r4.reduc4(l.map(swap12)).map_err(|e| e.to_string())?;
        if !negated(&v, &a) || !negated(&v, &b) || v != c {
            return Err(format!("four-leg coherence at {}", Diagram::H(l)));
        }
        n4 += 1;
    }
    let r6 = Reducer::new(Ctx::new(BlanchfieldSpec::cyclic(ann(Some(1)), 2)));
    let mut n6 = 0;
    for t in (0..6).map(|_| legs.iter().copied()).multi_cartesian_product() {
        let l: [Leg; 6] = t.try_into().unwrap();
        let v = r6.reduc6(l).map_err(|e| e.to_string())?;
        for (i, j) in [(0, 1), (1, 2), (3, 4), (4, 5)] {
            let mut m = l;
            m.swap(i, j);
            if !negated(&v, &r6.reduc6(m).map_err(|e| e.to_string())?) {
                return Err(format!("six-leg sign at {} ({i} {j})", Diagram::YY(l)));
            }
        }
        if v != r6.reduc6(l.map(swap12)).map_err(|e| e.to_string())? {
            return Err(format!("copy exchange at {}", Diagram::YY(l)));
        }
        n6 += 1;
    }
    Ok(format!("coherence over {n4} four-leg and {n6} six-leg tuples"))
}

fn pairings() -> Check {
    let counts: Vec<usize> = (1..=3).map(|m| perfect_matchings(2 * m).len()).collect();
    if counts == [1, 3, 15] {
        Ok("pairings 1, 3, 15".into())
    } else {
        Err(format!("pairings {counts:?}"))
    }
}

fn properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let parts = [
        ring_oracle(&mut rng)?,
        coherence()?,
        pairings()?,
        bar_checks(&mut rng)?,
        scenarios(&["lambda-specialization-points"])?,
    ];
    Ok(parts.join("; "))
}

fn mutations() -> Check {
    let exe = env!("CARGO_BIN_EXE_jdr");
    let mut out = Vec::new();
    for m in Mutation::ALL {
        let status =
            Command::new(exe).args(["verify", "--mutate", m.name()]).output().map_err(|e| e.to_string())?.status;
        if status.code() != Some(1) {
            return Err(format!("{} exited with {status}", m.name()));
        }
        out.push(format!("{} exits 1", m.name()));
    }
    let clean = Command::new(exe).arg("verify").output().map_err(|e| e.to_string())?.status;
    if clean.code() != Some(0) {
        return Err(format!("unmutated suite exited with {clean}"));
    }
    Ok(out.join(", "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("generators reduce to unit vectors, degenerate tuples to 0", || {
            scenarios(&["reduce-generators", "reduce-degenerate"])
        }),
        ("three-copy relations and the G1 elimination", || {
            scenarios(&["three-copy-relations", "holonomy-d1-d2", "g1-elimination"])
        }),
        ("four-leg relations with distinct two-leg tokens", || scenarios(&["four-leg-relations"])),
        ("two-parameter family on Gamma1, Gamma2, Gamma3", || {
            scenarios(&["appendix-lambda-gamma1", "appendix-lambda-gamma2", "appendix-lambda-gamma3", "gamma-relation"])
        }),
        ("kernel vector", || {
            scenarios(&["kernel-generator-vanishes", "kernel-image-two-copy", "kernel-generic-alpha"])
        }),
        ("one-copy four-leg image", || scenarios(&["iota-expansion", "iota-in-g1-h1"])),
        ("quotient dimensions", || {
            scenarios(&["dimension-generic-alpha", "dimension-alpha-one", "dimension-noncyclic-x1"])
        }),
        ("non-cyclic identities", || {
            scenarios(&["noncyclic-y1", "noncyclic-y2", "noncyclic-x-sum", "noncyclic-mu-trivial"])
        }),
        ("property suites", properties),
        ("negative controls", mutations),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let ms = start.elapsed().as_millis();
        match result {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} ({ms} ms) [{detail}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({ms} ms) [{why}]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
