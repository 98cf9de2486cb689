//! Formal-power-series expressions: the closed right-hand sides that the
//! degree-wise computations are compared against, plus their textual grammar
//! used by case files, e.g. `tensor(freemod(3,4,5), regseq(vars=2, degs=(1,2)))`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// AST of truncatable series factors.  Evaluation is exact over i64.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SeriesExpr {
    /// Polynomial algebra on generators of the given weights:
    /// `prod 1/(1 - x^w)`.
    PolyAlgebra(Vec<u32>),
    /// Quotient of a polynomial algebra by a regular sequence:
    /// `prod (1 - x^d) / prod (1 - x^w)`.
    RegSeqQuotient {
        weights: Vec<u32>,
        degrees: Vec<u32>,
    },
    /// Exterior algebra on generators of the given degrees: `prod (1 + x^d)`.
    Exterior(Vec<u32>),
    /// Positive-degree part of an exterior algebra: `prod (1 + x^d) - 1`.
    ExteriorPlus(Vec<u32>),
    /// Truncated polynomial algebra `F[c]/(c^height)` on one generator:
    /// `1 + x^d + ... + x^(d*(height-1))`.
    Truncated { degree: u32, height: u32 },
    /// Free module on generators of the given degrees (with multiplicity):
    /// `sum x^d`.
    FreeModule(Vec<u32>),
    /// Coefficientwise product of the children's series.
    Tensor(Vec<SeriesExpr>),
    /// Coefficientwise sum.
    Sum(Vec<SeriesExpr>),
    /// Drop the coefficient 1 in degree 0.
    AugmentationIdeal(Box<SeriesExpr>),
}

impl SeriesExpr {
    pub fn regseq_unit_weights(nvars: usize, degrees: Vec<u32>) -> SeriesExpr {
        SeriesExpr::RegSeqQuotient {
            weights: vec![1; nvars],
            degrees,
        }
    }

    /// The all-zero series.
    pub fn zero() -> SeriesExpr {
        SeriesExpr::FreeModule(Vec::new())
    }
}

/// Coefficients `[0..=n]` of the expression expanded to degree `n`.
pub fn series_eval(expr: &SeriesExpr, n: u32) -> Result<Vec<i64>> {
    let len = n as usize + 1;
    match expr {
        SeriesExpr::PolyAlgebra(weights) => {
            let mut acc = unit(len);
            for &w in weights {
                acc = mul_truncated(&acc, &geometric(w, len)?);
            }
            Ok(acc)
        }
        SeriesExpr::RegSeqQuotient { weights, degrees } => {
            let mut acc = unit(len);
            for &w in weights {
                acc = mul_truncated(&acc, &geometric(w, len)?);
            }
            for &d in degrees {
                if d == 0 {
                    return Err(Error::Expression("relation of degree 0".into()));
                }
                acc = mul_truncated(&acc, &one_minus(d, len));
            }
            Ok(acc)
        }
        SeriesExpr::Exterior(degrees) => {
            let mut acc = unit(len);
            for &d in degrees {
                if d == 0 {
                    return Err(Error::Expression("exterior generator of degree 0".into()));
                }
                acc = mul_truncated(&acc, &one_plus(d, len));
            }
            Ok(acc)
        }
        SeriesExpr::ExteriorPlus(degrees) => {
            let mut acc = series_eval(&SeriesExpr::Exterior(degrees.clone()), n)?;
            acc[0] -= 1;
            Ok(acc)
        }
        SeriesExpr::Truncated { degree, height } => {
            if *degree == 0 {
                return Err(Error::Expression("truncated generator of degree 0".into()));
            }
            let mut acc = vec![0i64; len];
            for k in 0..*height {
                let pos = (k * degree) as usize;
                if pos < len {
                    acc[pos] += 1;
                }
            }
            Ok(acc)
        }
        SeriesExpr::FreeModule(degrees) => {
            let mut acc = vec![0i64; len];
            for &d in degrees {
                if (d as usize) < len {
                    acc[d as usize] += 1;
                }
            }
            Ok(acc)
        }
        SeriesExpr::Tensor(children) => {
            if children.is_empty() {
                return Err(Error::Expression("empty tensor".into()));
            }
            let mut acc = unit(len);
            for c in children {
                acc = mul_truncated(&acc, &series_eval(c, n)?);
            }
            Ok(acc)
        }
        SeriesExpr::Sum(children) => {
            if children.is_empty() {
                return Err(Error::Expression("empty sum".into()));
            }
            let mut acc = vec![0i64; len];
            for c in children {
                for (a, b) in acc.iter_mut().zip(series_eval(c, n)?) {
                    *a += b;
                }
            }
            Ok(acc)
        }
        SeriesExpr::AugmentationIdeal(child) => {
            let mut acc = series_eval(child, n)?;
            if acc[0] > 0 {
                acc[0] -= 1;
            }
            Ok(acc)
        }
    }
}

fn unit(len: usize) -> Vec<i64> {
    let mut v = vec![0i64; len];
    v[0] = 1;
    v
}

/// `1/(1 - x^w)` truncated.
fn geometric(w: u32, len: usize) -> Result<Vec<i64>> {
    if w == 0 {
        return Err(Error::Expression("generator of weight 0".into()));
    }
    let mut v = vec![0i64; len];
    let mut i = 0usize;
    while i < len {
        v[i] = 1;
        i += w as usize;
    }
    Ok(v)
}

fn one_minus(d: u32, len: usize) -> Vec<i64> {
    let mut v = vec![0i64; len];
    v[0] = 1;
    if (d as usize) < len {
        v[d as usize] = -1;
    }
    v
}

fn one_plus(d: u32, len: usize) -> Vec<i64> {
    let mut v = vec![0i64; len];
    v[0] = 1;
    if (d as usize) < len {
        v[d as usize] += 1;
    }
    v
}

pub fn mul_truncated(a: &[i64], b: &[i64]) -> Vec<i64> {
    let len = a.len();
    let mut out = vec![0i64; len];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if i + j >= len {
                break;
            }
            out[i + j] += x * y;
        }
    }
    out
}

/// Textual form.  Grammar, whitespace-insensitive:
///
/// ```text
/// expr    := polyalg(w,...) | regseq(vars=N, degs=(d,...))
///          | regseq(weights=(w,...), degs=(d,...))
///          | exterior(d,...) | exteriorplus(d,...)
///          | trunc(d, h) | freemod(d,...)
///          | tensor(expr, ...) | sum(expr, ...) | aug(expr)
/// ```
pub fn parse_series(src: &str) -> Result<SeriesExpr> {
    let mut p = SParser {
        chars: src.chars().collect(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(Error::Parse(format!(
            "unexpected trailing input in series expression at offset {}",
            p.pos
        )));
    }
    Ok(e)
}

struct SParser {
    chars: Vec<char>,
    pos: usize,
}

impl SParser {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "expected '{c}' at offset {} in series expression",
                self.pos
            )))
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
            return Err(Error::Parse("expected a number in series expression".into()));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse()
            .map_err(|_| Error::Parse(format!("number out of range: {s}")))
    }

    /// Comma-separated naturals until the closing paren (may be empty).
    fn nat_list(&mut self) -> Result<Vec<u32>> {
        let mut out = Vec::new();
        if self.peek() == Some(')') {
            return Ok(out);
        }
        loop {
            out.push(self.natural()?);
            match self.peek() {
                Some(',') => {
                    self.pos += 1;
                }
                _ => return Ok(out),
            }
        }
    }

    fn parenthesized_nat_list(&mut self) -> Result<Vec<u32>> {
        self.expect('(')?;
        let v = self.nat_list()?;
        self.expect(')')?;
        Ok(v)
    }

    fn expr(&mut self) -> Result<SeriesExpr> {
        let name = self.ident();
        self.expect('(')?;
        let out = match name.as_str() {
            "polyalg" => SeriesExpr::PolyAlgebra(self.nat_list()?),
            "regseq" => {
                let key = self.ident();
                self.expect('=')?;
                let weights = match key.as_str() {
                    "vars" => vec![1; self.natural()? as usize],
                    "weights" => self.parenthesized_nat_list()?,
                    other => {
                        return Err(Error::Parse(format!(
                            "regseq expects `vars=` or `weights=`, found `{other}`"
                        )))
                    }
                };
                self.expect(',')?;
                let key = self.ident();
                if key != "degs" {
                    return Err(Error::Parse("regseq expects `degs=(...)`".into()));
                }
                self.expect('=')?;
                let degrees = self.parenthesized_nat_list()?;
                SeriesExpr::RegSeqQuotient { weights, degrees }
            }
            "exterior" => SeriesExpr::Exterior(self.nat_list()?),
            "exteriorplus" => SeriesExpr::ExteriorPlus(self.nat_list()?),
            "trunc" => {
                let degree = self.natural()?;
                self.expect(',')?;
                let height = self.natural()?;
                SeriesExpr::Truncated { degree, height }
            }
            "freemod" => SeriesExpr::FreeModule(self.nat_list()?),
            "tensor" | "sum" => {
                let mut children = vec![self.expr()?];
                while self.peek() == Some(',') {
                    self.pos += 1;
                    children.push(self.expr()?);
                }
                if name == "tensor" {
                    SeriesExpr::Tensor(children)
                } else {
                    SeriesExpr::Sum(children)
                }
            }
            "aug" => SeriesExpr::AugmentationIdeal(Box::new(self.expr()?)),
            other => {
                return Err(Error::Parse(format!(
                    "unknown series constructor `{other}`"
                )))
            }
        };
        self.expect(')')?;
        Ok(out)
    }
}

impl fmt::Display for SeriesExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(v: &[u32]) -> String {
            v.iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
        match self {
            SeriesExpr::PolyAlgebra(w) => write!(f, "polyalg({})", list(w)),
            SeriesExpr::RegSeqQuotient { weights, degrees } => {
                if weights.iter().all(|&w| w == 1) {
                    write!(f, "regseq(vars={}, degs=({}))", weights.len(), list(degrees))
                } else {
                    write!(
                        f,
                        "regseq(weights=({}), degs=({}))",
                        list(weights),
                        list(degrees)
                    )
                }
            }
            SeriesExpr::Exterior(d) => write!(f, "exterior({})", list(d)),
            SeriesExpr::ExteriorPlus(d) => write!(f, "exteriorplus({})", list(d)),
            SeriesExpr::Truncated { degree, height } => write!(f, "trunc({degree}, {height})"),
            SeriesExpr::FreeModule(d) => write!(f, "freemod({})", list(d)),
            SeriesExpr::Tensor(c) => {
                let parts: Vec<String> = c.iter().map(|e| e.to_string()).collect();
                write!(f, "tensor({})", parts.join(", "))
            }
            SeriesExpr::Sum(c) => {
                let parts: Vec<String> = c.iter().map(|e| e.to_string()).collect();
                write!(f, "sum({})", parts.join(", "))
            }
            SeriesExpr::AugmentationIdeal(c) => write!(f, "aug({c})"),
        }
    }
}

impl Serialize for SeriesExpr {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SeriesExpr {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_series(&s).map_err(serde::de::Error::custom)
    }
}
