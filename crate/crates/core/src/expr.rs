//! Small expression language for composite definitions such as
//! `c2*u9 + 1/2*v4^2`: rational literals, registry variables, named
//! polynomials, `+ - * ^` and parentheses.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::AlgebraError;
use crate::field::Field;
use crate::poly::{Polynomial, VarRegistry};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Name(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>, AlgebraError> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            // `a/b` directly after a number is a rational literal
            if i + 1 < cs.len() && cs[i] == '/' && cs[i + 1].is_ascii_digit() {
                i += 1;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
            }
            let lit: String = cs[start..i].iter().collect();
            let r = lit.parse().map_err(|_| AlgebraError::Parse(lit.clone()))?;
            out.push(Tok::Num(r));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Name(cs[start..i].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(AlgebraError::Parse(alloc::format!("unexpected `{c}` in `{s}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    reg: &'a VarRegistry,
    aliases: &'a [(&'a str, &'a Polynomial)],
    field: Field,
}

impl Parser<'_> {
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

    fn expr(&mut self) -> Result<Polynomial, AlgebraError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.try_add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.try_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, AlgebraError> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = acc.try_mul(&self.unary()?)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, AlgebraError> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(n)) if n.is_integer() && !n.is_negative() => {
                    self.pos += 1;
                    let e =
                        u32::try_from(n.numer()).map_err(|_| AlgebraError::Parse("exponent too large".to_string()))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(AlgebraError::Parse("expected exponent".to_string())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, AlgebraError> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(r)) => {
                self.pos += 1;
                Ok(Polynomial::constant(self.field.rational(&r)?))
            }
            Some(Tok::Name(n)) => {
                self.pos += 1;
                if let Some((_, p)) = self.aliases.iter().find(|(a, _)| *a == n) {
                    return p.to_field(self.field);
                }
                Ok(Polynomial::var(self.field, self.reg.require(&n)?))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(AlgebraError::Parse("missing `)`".to_string()));
                }
                Ok(e)
            }
            other => Err(AlgebraError::Parse(alloc::format!("unexpected token {other:?}"))),
        }
    }
}

/// Evaluates `s` over `field`; names resolve to `aliases` first, then to
/// registry variables.
pub fn eval_expr(
    s: &str,
    reg: &VarRegistry,
    aliases: &[(&str, &Polynomial)],
    field: Field,
) -> Result<Polynomial, AlgebraError> {
    let mut p = Parser { toks: lex(s)?, pos: 0, reg, aliases, field };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(AlgebraError::Parse(alloc::format!("trailing input in `{s}`")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composite() {
        let reg = VarRegistry::new(&["x1", "x2", "x3"]).unwrap();
        let q = Field::Rational;
        let a = Polynomial::parse("x1*x2", &reg, q).unwrap();
        let got = eval_expr("2*a - 1/2*(x3 + x1)^2", &reg, &[("a", &a)], q).unwrap();
        let want = Polynomial::parse("2*x1*x2 - 1/2*x1^2 - x1*x3 - 1/2*x3^2", &reg, q).unwrap();
        assert_eq!(got, want);
        assert!(eval_expr("0", &reg, &[], q).unwrap().is_zero());
        assert_eq!(eval_expr("-a", &reg, &[("a", &a)], q).unwrap(), -&a);
    }

    #[test]
    fn errors() {
        let reg = VarRegistry::new(&["x1"]).unwrap();
        for bad in ["x1 +", "(x1", "y", "x1^x1", "x1 $ 2", "x1 x1"] {
            assert!(eval_expr(bad, &reg, &[], Field::Rational).is_err(), "{bad}");
        }
        assert!(eval_expr("1/3*x1", &reg, &[], Field::Prime(3)).is_err());
    }
}
