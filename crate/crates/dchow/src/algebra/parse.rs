//! Parser for the polynomial literal grammar used by case files and the CLI.
//!
//! Grammar: variables `t1..t9`, integer literals, `+ - * ^ ( )`,
//! whitespace-insensitive.  Any other identifier is a named class alias
//! (`c2`, `p1`, `e4`, `pbar2`, ...) resolved through the symfun module.

use super::poly::Polynomial;
use super::ring::Ctx;
use crate::error::{Error, Result};
use crate::symfun;

pub fn parse_polynomial(ctx: &Ctx, src: &str) -> Result<Polynomial> {
    let mut p = Parser {
        ctx,
        chars: src.chars().collect(),
        pos: 0,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(Error::Parse(format!(
            "unexpected input at offset {}: {:?}",
            p.pos,
            p.rest()
        )));
    }
    Ok(poly)
}

struct Parser<'a> {
    ctx: &'a Ctx,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> String {
        self.chars[self.pos..].iter().collect()
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        self.skip_ws();
        let c = self.chars.get(self.pos).copied();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.bump();
                self.term()?.neg()
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = acc.checked_add(&self.term()?)?;
                }
                Some('-') => {
                    self.bump();
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.bump();
            acc = acc.checked_mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.bump();
            let e = self.natural()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.bump() != Some(')') {
                    return Err(Error::Parse("expected ')'".into()));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.natural()?;
                Ok(Polynomial::constant(self.ctx, n as i64))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident();
                if let Some(idx) = self.ctx.var_index(&name) {
                    return Ok(Polynomial::var(self.ctx, idx));
                }
                symfun::resolve_alias(self.ctx, &name)?.ok_or_else(|| {
                    Error::Parse(format!("unknown variable or class name `{name}`"))
                })
            }
            other => Err(Error::Parse(format!(
                "expected an atom, found {other:?}"
            ))),
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
        {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn natural(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse("expected a number".into()));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse()
            .map_err(|_| Error::Parse(format!("number out of range: {s}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::RingContext;
    use crate::algebra::FieldElement;

    #[test]
    fn parses_arithmetic_with_whitespace() {
        let ctx = RingContext::flag(3, 2);
        let f = parse_polynomial(&ctx, " ( t1 + t2 ) ^2 - t1*t2 ").unwrap();
        let t1 = Polynomial::var(&ctx, 0);
        let t2 = Polynomial::var(&ctx, 1);
        let want = &(&t1 + &t2).pow(2) - &(&t1 * &t2);
        assert_eq!(f, want);
    }

    #[test]
    fn resolves_aliases() {
        let ctx = RingContext::flag(3, 2);
        let f = parse_polynomial(&ctx, "c2").unwrap();
        assert_eq!(f, &Polynomial::var(&ctx, 0) * &Polynomial::var(&ctx, 1));
        let e3 = parse_polynomial(&ctx, "e3").unwrap();
        let c1 = parse_polynomial(&ctx, "c1").unwrap();
        assert_eq!(e3, c1.pow(3));
    }

    #[test]
    fn rejects_junk() {
        let ctx = RingContext::flag(3, 2);
        assert!(parse_polynomial(&ctx, "t1 +").is_err());
        assert!(parse_polynomial(&ctx, "q7").is_err());
        assert!(parse_polynomial(&ctx, "t3").is_err(), "t3 outside a 2-variable ring");
        assert!(parse_polynomial(&ctx, "(t1").is_err());
    }

    #[test]
    fn unary_minus() {
        let ctx = RingContext::flag(3, 2);
        let f = parse_polynomial(&ctx, "-t1 + 3").unwrap();
        assert_eq!(f, Polynomial::var(&ctx, 0).scale(FieldElement::new(-1, 3)));
    }
}
