//! A small recursive-descent parser for integer polynomial expressions such
//! as `x^4 - x^3 - 3*x^2 + x + 1` or `x1*x3 + 2*(x2 - x4)^2`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::invariants::MultiPoly;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(text.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a, F> {
    toks: Vec<Tok>,
    pos: usize,
    n_vars: usize,
    var: F,
    src: &'a str,
}

impl<F: Fn(&str) -> Option<usize>> Parser<'_, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at token {} in {:?}", self.pos, self.src))
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        if self.eat('-') {
            Ok(-self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(e)) => {
                    self.pos += 1;
                    let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(self.err("expected integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(MultiPoly::constant(self.n_vars, v))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let i = (self.var)(&name).ok_or_else(|| {
                    Error::Parse(format!("unknown variable {name:?} in {:?}", self.src))
                })?;
                Ok(MultiPoly::var(self.n_vars, i))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            _ => Err(self.err("expected a number, variable or '('")),
        }
    }
}

/// Parses `s` into a polynomial in `n_vars` variables; `var` maps a
/// variable name to its 0-based index.
pub fn parse_poly<F: Fn(&str) -> Option<usize>>(
    s: &str,
    n_vars: usize,
    var: F,
) -> Result<MultiPoly> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        n_vars,
        var,
        src: s,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

/// Resolver for `x1, …, xn` (1-based names, 0-based indices).
pub fn indexed_vars(n: usize) -> impl Fn(&str) -> Option<usize> {
    move |name: &str| {
        let k: usize = name.strip_prefix('x')?.parse().ok()?;
        (1..=n).contains(&k).then(|| k - 1)
    }
}

/// Largest `k` such that `xk` occurs in `s`.
pub fn max_var_index(s: &str) -> usize {
    lex(s)
        .unwrap_or_default()
        .iter()
        .filter_map(|t| match t {
            Tok::Ident(name) => name.strip_prefix('x')?.parse::<usize>().ok(),
            _ => None,
        })
        .max()
        .unwrap_or(0)
}
