//! Text form of diagrams and combinations, as printed by `Display`.
//!
//! Legs are written `(k,c)` for `t^k gamma_c`, `(g,c)` for `gamma_c`,
//! `(e,c)` for `eta_c` and `(k,e,c)` for `t^k eta_c`. Diagrams are
//! `YY[l,l,l;l,l,l]`, `H[l,l|l,l]`, `Theta[l,l;m]`, `Tadpole[l,l;m]`,
//! `Lollipop[l;m|l,l,l]`, `Zero[tag]` or a generator name such as `Gamma2`.

use exact_algebra::{parse_param, ParamPoly};

use crate::combo::LinCombo;
use crate::conventions::Conventions;
use crate::diagram::Diagram;
use crate::error::DiagramError;
use crate::essential::Generator;
use crate::leg::{Basis, Leg};

struct Cursor<'s> {
    src: &'s str,
    pos: usize,
    offset: usize,
}

impl<'s> Cursor<'s> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, DiagramError> {
        Err(DiagramError::Parse { pos: self.offset + self.pos, msg: msg.into() })
    }

    fn peek(&mut self) -> Option<char> {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                return Some(c);
            }
            self.pos += c.len_utf8();
        }
        None
    }

    fn eat(&mut self, ch: char) -> bool {
        if self.peek() == Some(ch) {
            self.pos += ch.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, ch: char) -> Result<(), DiagramError> {
        if self.eat(ch) {
            Ok(())
        } else {
            self.err(format!("expected {ch:?}"))
        }
    }

    fn word(&mut self) -> &'s str {
        self.peek();
        let start = self.pos;
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !(c.is_alphanumeric() || c == '_' || c == '-') {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.src[start..self.pos]
    }

    fn integer(&mut self) -> Result<i64, DiagramError> {
        let w = self.word();
        match w.parse() {
            Ok(n) => Ok(n),
            Err(_) => self.err(format!("expected an integer, found {w:?}")),
        }
    }

    fn leg(&mut self) -> Result<Leg, DiagramError> {
        self.expect('(')?;
        let mut fields = vec![self.word().to_string()];
        while self.eat(',') {
            fields.push(self.word().to_string());
        }
        self.expect(')')?;
        let copy = |s: &str| s.parse::<u8>().ok().filter(|&c| c > 0);
        let parsed = match fields.iter().map(String::as_str).collect::<Vec<_>>().as_slice() {
            [b, c] => {
                let basis = match *b {
                    "g" => Some((Basis::Gamma, 0)),
                    "e" => Some((Basis::Eta, 0)),
                    k => k.parse().ok().map(|k| (Basis::Gamma, k)),
                };
                basis.zip(copy(c)).map(|((basis, k), copy)| Leg { copy, basis, k })
            }
            [k, b, c] => {
                let basis = match *b {
                    "g" => Some(Basis::Gamma),
                    "e" => Some(Basis::Eta),
                    _ => None,
                };
                k.parse().ok().zip(basis).zip(copy(c)).map(|((k, basis), copy)| Leg { copy, basis, k })
            }
            _ => None,
        };
        match parsed {
            Some(l) => Ok(l),
            None => self.err("malformed leg"),
        }
    }

    fn legs(&mut self, n: usize, sep: char) -> Result<Vec<Leg>, DiagramError> {
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            if i > 0 {
                self.expect(sep)?;
            }
            out.push(self.leg()?);
        }
        Ok(out)
    }

    fn diagram(&mut self) -> Result<Diagram, DiagramError> {
        self.peek();
        let start = self.pos;
        let name = self.word();
        if self.peek() != Some('[') {
            return name.parse::<Generator>().map(Generator::diagram).map_err(|e| match e {
                DiagramError::UnknownGenerator(_) if name.is_empty() => {
                    DiagramError::Parse { pos: self.offset + start, msg: "expected a diagram".into() }
                }
                e => e,
            });
        }
        self.expect('[')?;
        let d = match name {
            "YY" => {
                let mut l = self.legs(3, ',')?;
                self.expect(';')?;
                l.extend(self.legs(3, ',')?);
                Diagram::YY(l.try_into().expect("six legs"))
            }
            "H" => {
                let mut l = self.legs(2, ',')?;
                self.expect('|')?;
                l.extend(self.legs(2, ',')?);
                Diagram::H(l.try_into().expect("four legs"))
            }
            "Theta" | "Tadpole" => {
                let l = self.legs(2, ',')?;
                self.expect(';')?;
                let m = self.integer()?;
                let legs = [l[0], l[1]];
                if name == "Theta" {
                    Diagram::Theta { legs, m }
                } else {
                    Diagram::Tadpole { legs, m }
                }
            }
            "Lollipop" => {
                let stem = self.leg()?;
                self.expect(';')?;
                let m = self.integer()?;
                self.expect('|')?;
                let t = self.legs(3, ',')?;
                Diagram::Lollipop { stem, m, tripod: [t[0], t[1], t[2]] }
            }
            "Zero" => {
                let s = self.pos;
                let Some(end) = self.src[s..].find(']') else {
                    return self.err("unterminated tag");
                };
                self.pos = s + end;
                Diagram::ZeroLeg(self.src[s..s + end].trim().to_string())
            }
            other => return self.err(format!("unknown diagram shape {other:?}")),
        };
        self.expect(']')?;
        Ok(d)
    }
}

/// Parses a single diagram.
pub fn parse_diagram(s: &str) -> Result<Diagram, DiagramError> {
    let mut cur = Cursor { src: s, pos: 0, offset: 0 };
    let d = cur.diagram()?;
    if cur.peek().is_some() {
        return cur.err("trailing input");
    }
    Ok(d)
}

/// Splits at top-level `+` and `-`, keeping the sign with each piece.
fn split_terms(s: &str) -> Vec<(usize, bool, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut negative = false;
    let mut prev = None;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '+' | '-' if depth == 0 && !matches!(prev, Some('*') | Some('^') | Some('/')) => {
                if !s[start..i].trim().is_empty() {
                    out.push((start, negative, &s[start..i]));
                    negative = false;
                }
                negative ^= c == '-';
                start = i + 1;
            }
            _ => {}
        }
        if !c.is_whitespace() {
            prev = Some(c);
        }
    }
    out.push((start, negative, &s[start..]));
    out
}

/// Parses a linear combination such as `2*H1 - (a*b + c*d)*YY[...]`.
/// Diagrams are canonicalized under `conv`.
pub fn parse_combo(s: &str, conv: &Conventions) -> Result<LinCombo, DiagramError> {
    let mut out = LinCombo::zero();
    if s.trim() == "0" {
        return Ok(out);
    }
    for (offset, negative, piece) in split_terms(s) {
        let mut depth = 0i32;
        let mut split = None;
        for (i, c) in piece.char_indices() {
            match c {
                '(' | '[' => depth += 1,
                ')' | ']' => depth -= 1,
                '*' if depth == 0 => split = Some(i),
                _ => {}
            }
        }
        let (coeff, body, body_offset) = match split {
            Some(i) => (parse_param(&piece[..i])?, &piece[i + 1..], offset + i + 1),
            None => (ParamPoly::one(), piece, offset),
        };
        let mut cur = Cursor { src: body, pos: 0, offset: body_offset };
        let d = cur.diagram()?;
        if cur.peek().is_some() {
            return cur.err("trailing input");
        }
        let coeff = if negative { -coeff } else { coeff };
        out.add(d, &coeff, conv);
    }
    Ok(out)
}
