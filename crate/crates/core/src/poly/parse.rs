use num_traits::One;

use super::Poly;
use crate::arith::{Int, Rat};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Int),
    Ident(String),
    Op(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
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
            let s: String = chars[start..i].iter().collect();
            out.push((start, Tok::Num(s.parse().unwrap())));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((start, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Syntax { pos: i, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    vars: &'a [&'a str],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Syntax { pos: self.here(), msg: msg.into() })
    }

    fn zero(&self) -> Poly {
        Poly::zero(self.vars)
    }

    fn expr(&mut self) -> Result<Poly> {
        // a leading sign applies to the first term
        let mut acc = self.zero();
        let mut sign = match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                -1
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(Tok::Op('+')) => sign = 1,
                Some(Tok::Op('-')) => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Op('*')) {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        let b = self.base()?;
        if self.peek() == Some(&Tok::Op('^')) {
            self.pos += 1;
            let at = self.here();
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| Error::BadExponent(at))?;
                    Ok(b.pow(e))
                }
                _ => Err(Error::BadExponent(at)),
            }
        } else {
            Ok(b)
        }
    }

    fn base(&mut self) -> Result<Poly> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut r = Rat::from_integer(n);
                if self.peek() == Some(&Tok::Op('/')) {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) if d != Int::from(0) => {
                            self.pos += 1;
                            r /= Rat::from_integer(d);
                        }
                        Some(Tok::Num(_)) => return self.err("zero denominator"),
                        _ => return self.err("expected integer denominator"),
                    }
                }
                Ok(self.zero().constant_like(r))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let i = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or(Error::UnknownVariable(name))?;
                let mut e = vec![0; self.vars.len()];
                e[i] = 1;
                let mut p = self.zero();
                p.add_term(e, Rat::one());
                Ok(p)
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(Tok::Op(c)) => self.err(&format!("unexpected `{c}`")),
            None => self.err("unexpected end of input"),
        }
    }
}

pub(super) fn parse(text: &str, vars: &[&str]) -> Result<Poly> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: text.chars().count(), vars };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy(s: &str) -> Result<Poly> {
        parse(s, &["x", "y"])
    }

    #[test]
    fn grammar_cases() {
        assert_eq!(xy("x^2+y^2-1").unwrap().to_string(), "-1 + y^2 + x^2");
        assert_eq!(xy("-(x)^3 + 2*x*y").unwrap().to_string(), "2*x*y - x^3");
        assert_eq!(xy("  3/6 ").unwrap().to_string(), "1/2");
        assert_eq!(xy("(x+1)^0").unwrap().to_string(), "1");
    }

    #[test]
    fn errors() {
        assert!(matches!(xy("x +"), Err(Error::Syntax { pos: 3, .. })));
        assert_eq!(xy("z"), Err(Error::UnknownVariable("z".into())));
        assert_eq!(xy("x^y"), Err(Error::BadExponent(2)));
        assert_eq!(xy("x^-1"), Err(Error::BadExponent(2)));
        assert!(matches!(xy("x $ y"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(xy("(x"), Err(Error::Syntax { .. })));
        assert!(matches!(xy("x y"), Err(Error::Syntax { .. })));
        assert!(matches!(xy("1/0"), Err(Error::Syntax { .. })));
    }
}
