//! Text form of polynomials, for example `3/2*a*b^2*t^-1 + r*t`.

use num_traits::{One, Signed, Zero};

use crate::laurent::LaurentPoly;
use crate::param::{Monomial, ParamPoly, Var};
use crate::rational::{parse_rational, Rational};
use crate::AlgebraError;

fn format_terms(terms: &[(Monomial, i64, Rational)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, k, c)) in terms.iter().enumerate() {
        let mut factors: Vec<String> = Vec::new();
        for v in Var::ALL {
            match m.exp(v) {
                0 => {}
                1 => factors.push(v.name().to_string()),
                e => factors.push(format!("{}^{e}", v.name())),
            }
        }
        match k {
            0 => {}
            1 => factors.push("t".to_string()),
            e => factors.push(format!("t^{e}")),
        }
        let abs = c.abs();
        let body = if factors.is_empty() {
            abs.to_string()
        } else if abs.is_one() {
            factors.join("*")
        } else {
            format!("{abs}*{}", factors.join("*"))
        };
        let neg = c.is_negative();
        match (i, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    out
}

/// Prints a parameter polynomial in descending graded order.
pub fn format_param(p: &ParamPoly) -> String {
    let terms: Vec<_> = p.sorted_terms().into_iter().map(|(m, c)| (m, 0, c)).collect();
    format_terms(&terms)
}

/// Prints a Laurent polynomial, highest power of `t` first.
pub fn format_laurent(q: &LaurentPoly) -> String {
    let mut terms = Vec::new();
    let mut exps: Vec<_> = q.terms().collect();
    exps.reverse();
    for (k, c) in exps {
        for (m, x) in c.sorted_terms() {
            terms.push((m, k, x));
        }
    }
    format_terms(&terms)
}

struct Parser<'s> {
    src: &'s str,
    pos: usize,
}

impl<'s> Parser<'s> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, AlgebraError> {
        Err(AlgebraError::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while let Some(ch) = self.peek_raw() {
            if !ch.is_whitespace() {
                break;
            }
            self.pos += ch.len_utf8();
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn eat(&mut self, ch: char) -> bool {
        if self.peek() == Some(ch) {
            self.pos += ch.len_utf8();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly, AlgebraError> {
        let mut acc = LaurentPoly::zero();
        let mut first = true;
        loop {
            let negative = if self.eat('-') {
                true
            } else if self.eat('+') || first {
                false
            } else {
                break;
            };
            let t = self.term()?;
            acc = if negative { &acc - &t } else { &acc + &t };
            first = false;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<LaurentPoly, AlgebraError> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                let rhs = self.power()?;
                acc = &acc * &rhs;
            } else if self.eat('/') {
                let rhs = self.power()?;
                let divisor = match rhs.terms().collect::<Vec<_>>().as_slice() {
                    [(0, c)] => c.as_constant().filter(|x| !x.is_zero()),
                    _ => None,
                };
                match divisor {
                    Some(x) => acc = acc.scale(&ParamPoly::constant(x.recip())),
                    None => return self.err("division by zero or by a non-constant"),
                }
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<LaurentPoly, AlgebraError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let n = self.integer()?;
        if !negative {
            let mut acc = LaurentPoly::one();
            for _ in 0..n {
                acc = &acc * &base;
            }
            return Ok(acc);
        }
        // Only invertible monomials c*t^k may take negative powers.
        let mut it = base.terms();
        let single = match (it.next(), it.next()) {
            (Some((k, c)), None) => c.as_constant().filter(|x| !x.is_zero()).map(|x| (k, x)),
            _ => None,
        };
        let Some((k, c)) = single else {
            return self.err("negative power of a non-invertible expression");
        };
        let mut coeff = Rational::one();
        for _ in 0..n {
            coeff /= &c;
        }
        Ok(LaurentPoly::monomial(-k * n as i64, ParamPoly::constant(coeff)))
    }

    fn integer(&mut self) -> Result<u32, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| AlgebraError::Parse { pos: start, msg: "integer too large".into() })
    }

    fn atom(&mut self) -> Result<LaurentPoly, AlgebraError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let value = parse_rational(&self.src[start..self.pos])?;
                Ok(LaurentPoly::constant(ParamPoly::constant(value)))
            }
            Some(c) if c.is_alphabetic() => {
                let start = self.pos;
                while self.peek_raw().is_some_and(|c| c.is_alphanumeric() || c == '_') {
                    self.pos += self.peek_raw().unwrap().len_utf8();
                }
                let name = &self.src[start..self.pos];
                match name {
                    "t" => Ok(LaurentPoly::t_pow(1)),
                    "α" => Ok(LaurentPoly::constant(ParamPoly::var(Var::Alpha))),
                    _ => match Var::from_name(name) {
                        Some(v) => Ok(LaurentPoly::constant(ParamPoly::var(v))),
                        None => Err(AlgebraError::Parse { pos: start, msg: format!("unknown symbol {name:?}") }),
                    },
                }
            }
            Some(c) => self.err(format!("unexpected character {c:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a Laurent polynomial in `t` over the parameter ring.
pub fn parse_laurent(s: &str) -> Result<LaurentPoly, AlgebraError> {
    let mut p = Parser { src: s, pos: 0 };
    let value = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(value)
}

/// Parses a parameter polynomial; `t` is rejected.
pub fn parse_param(s: &str) -> Result<ParamPoly, AlgebraError> {
    let q = parse_laurent(s)?;
    if q.terms().any(|(k, _)| k != 0) {
        return Err(AlgebraError::Parse { pos: 0, msg: "unexpected t in parameter polynomial".into() });
    }
    Ok(q.coeff(0))
}
