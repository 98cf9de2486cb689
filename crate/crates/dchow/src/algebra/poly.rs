//! Sparse multivariate polynomials over F_p.
//!
//! Terms are kept sorted descending in the context's monomial order with no
//! zero coefficients, so equality of polynomials is equality of
//! representations.

use std::collections::HashMap;
use std::fmt;

use super::field::FieldElement;
use super::monomial::Monomial;
use super::ring::{same_context, Ctx};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    ctx: Ctx,
    /// Sorted descending by the context order; coefficients nonzero.
    terms: Vec<(Monomial, FieldElement)>,
}

impl Polynomial {
    pub fn zero(ctx: &Ctx) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Polynomial::constant(ctx, 1)
    }

    pub fn constant(ctx: &Ctx, c: i64) -> Self {
        let fe = FieldElement::new(c, ctx.prime());
        if fe.is_zero() {
            return Polynomial::zero(ctx);
        }
        Polynomial {
            ctx: ctx.clone(),
            terms: vec![(Monomial::one(ctx.nvars()), fe)],
        }
    }

    pub fn var(ctx: &Ctx, i: usize) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: vec![(
                Monomial::var(ctx.nvars(), i),
                FieldElement::one(ctx.prime()),
            )],
        }
    }

    pub fn monomial(ctx: &Ctx, m: Monomial, c: i64) -> Self {
        Polynomial::from_terms(ctx, vec![(m, FieldElement::new(c, ctx.prime()))])
    }

    /// Canonicalize an arbitrary term list: merge duplicates, strip zeros,
    /// sort descending.
    pub fn from_terms(ctx: &Ctx, terms: Vec<(Monomial, FieldElement)>) -> Self {
        let mut acc: HashMap<Monomial, u64> = HashMap::with_capacity(terms.len());
        let p = ctx.prime() as u64;
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ctx.nvars());
            let e = acc.entry(m).or_insert(0);
            *e = (*e + c.value() as u64) % p;
        }
        let mut out: Vec<(Monomial, FieldElement)> = acc
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(m, c)| (m, FieldElement::new(c as i64, ctx.prime())))
            .collect();
        let order = ctx.order();
        let weights = ctx.weights().to_vec();
        out.sort_by(|a, b| order.cmp(&b.0, &a.0, &weights));
        Polynomial {
            ctx: ctx.clone(),
            terms: out,
        }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading term in the context order.
    pub fn leading(&self) -> Option<(&Monomial, FieldElement)> {
        self.terms.first().map(|(m, c)| (m, *c))
    }

    /// Maximum weighted degree over the terms; zero polynomial has degree 0.
    pub fn degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.weighted_degree(self.ctx.weights()))
            .max()
            .unwrap_or(0)
    }

    /// `Some(d)` when every term has weighted degree `d` (zero counts as
    /// homogeneous of any degree and reports `Some(0)`).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.iter();
        let d = match it.next() {
            None => return Some(0),
            Some((m, _)) => m.weighted_degree(self.ctx.weights()),
        };
        for (m, _) in it {
            if m.weighted_degree(self.ctx.weights()) != d {
                return None;
            }
        }
        Some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    fn check_ctx(&self, other: &Polynomial) -> Result<()> {
        if !same_context(&self.ctx, &other.ctx) {
            return Err(Error::Context(
                "polynomials live in different ring contexts".into(),
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        // Merge two sorted term lists.
        let order = self.ctx.order();
        let weights = self.ctx.weights();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match order.cmp(&self.terms[i].0, &other.terms[j].0, weights) {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = self.terms[i].1.add(&other.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial {
            ctx: self.ctx.clone(),
            terms: out,
        })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.mul(&c)))
                .collect(),
        }
    }

    /// Multiply by a single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc.mul(&c)))
                .collect(),
        }
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        let p = self.ctx.prime() as u64;
        let mut acc: HashMap<Monomial, u64> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca.value() as u64 * cb.value() as u64 % p;
                let e = acc.entry(ma.mul(mb)).or_insert(0);
                *e = (*e + c) % p;
            }
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(m, c)| (m, FieldElement::new(c as i64, self.ctx.prime())))
            .collect();
        Ok(Polynomial::from_terms(&self.ctx, terms))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ctx);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base).expect("same context");
            }
            base = base.checked_mul(&base).expect("same context");
            e >>= 1;
        }
        acc
    }

    /// Sum of the terms of weighted degree exactly `d`.
    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weighted_degree(self.ctx.weights()) == d)
                .cloned()
                .collect(),
        }
    }

    /// Dense coefficient vector over an indexed monomial basis;
    /// `index[m] = column`.  Terms outside the map are rejected by the caller
    /// supplying a complete basis for the polynomial's degree.
    pub fn coeff_vector(&self, index: &HashMap<Monomial, usize>, ncols: usize) -> Vec<u32> {
        let mut row = vec![0u32; ncols];
        for (m, c) in &self.terms {
            let col = *index.get(m).expect("monomial outside the indexed basis");
            row[col] = c.value();
        }
        row
    }
}

/// Operator sugar over the checked operations.  Panics on context mismatch;
/// code paths fed by user input go through the `checked_*` forms.
impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("context mismatch in +")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("context mismatch in -")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("context mismatch in *")
    }
}

/// The unique ring-homomorphism extension of a variable assignment.
/// `images[i]` is the image of variable `i`; every variable must have one and
/// all images must share the target context.
pub fn apply_substitution(images: &[Polynomial], f: &Polynomial) -> Result<Polynomial> {
    let ctx = f.ctx();
    if images.len() != ctx.nvars() {
        return Err(Error::Substitution(format!(
            "substitution assigns {} of {} variables",
            images.len(),
            ctx.nvars()
        )));
    }
    for img in images {
        if !same_context(img.ctx(), ctx) {
            return Err(Error::Context(
                "substitution image lives in a different context".into(),
            ));
        }
    }
    // Memoize powers of each image up to the exponent actually used.
    let mut powers: Vec<Vec<Polynomial>> = images
        .iter()
        .map(|img| vec![Polynomial::one(ctx), img.clone()])
        .collect();
    let mut out = Polynomial::zero(ctx);
    for (m, c) in f.terms() {
        let mut term = Polynomial::constant(ctx, c.value() as i64);
        for (i, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            while powers[i].len() <= e as usize {
                let next = &powers[i][powers[i].len() - 1] * &powers[i][1];
                powers[i].push(next);
            }
            term = &term * &powers[i][e as usize];
        }
        out = &out + &term;
    }
    Ok(out)
}

/// All monomials of weighted degree `d`, sorted descending in the context
/// order (leading monomial first).
pub fn monomials_of_degree(ctx: &Ctx, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; ctx.nvars()];
    enumerate(ctx.weights(), 0, d, &mut exps, &mut out);
    let order = ctx.order();
    let weights = ctx.weights().to_vec();
    out.sort_by(|a, b| order.cmp(b, a, &weights));
    out
}

fn enumerate(weights: &[u32], i: usize, remaining: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if i == weights.len() {
        if remaining == 0 {
            out.push(Monomial::new(exps.clone()));
        }
        return;
    }
    if i == weights.len() - 1 {
        // Last variable must absorb the remainder exactly.
        if remaining % weights[i] == 0 {
            exps[i] = remaining / weights[i];
            out.push(Monomial::new(exps.clone()));
            exps[i] = 0;
        }
        return;
    }
    let mut e = 0;
    while e * weights[i] <= remaining {
        exps[i] = e;
        enumerate(weights, i + 1, remaining - e * weights[i], exps, out);
        e += 1;
    }
    exps[i] = 0;
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            if c.value() != 1 || m.is_one() {
                factors.push(format!("{}", c.value()));
            }
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ctx.var_name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.ctx.var_name(i), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::RingContext;

    fn ctx3() -> Ctx {
        RingContext::flag(3, 2)
    }

    #[test]
    fn add_identity_and_char_reduction() {
        let ctx = ctx3();
        let t1 = Polynomial::var(&ctx, 0);
        let t2 = Polynomial::var(&ctx, 1);
        let f = &t1 + &t2;
        assert_eq!(f.checked_add(&Polynomial::zero(&ctx)).unwrap(), f);
        // (t1 + t2) + (2 t1 + t2) = 2 t2 over F_3.
        let g = &t1.scale(FieldElement::new(2, 3)) + &t2;
        let sum = f.checked_add(&g).unwrap();
        assert_eq!(sum, t2.scale(FieldElement::new(2, 3)));
    }

    #[test]
    fn mul_identity_and_frobenius() {
        let ctx = RingContext::flag(2, 2);
        let t1 = Polynomial::var(&ctx, 0);
        let t2 = Polynomial::var(&ctx, 1);
        let f = &t1 + &t2;
        assert_eq!(f.checked_mul(&Polynomial::one(&ctx)).unwrap(), f);
        let sq = f.pow(2);
        assert_eq!(sq, &t1.pow(2) + &t2.pow(2));
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = Polynomial::var(&RingContext::flag(3, 2), 0);
        let b = Polynomial::var(&RingContext::flag(3, 3), 0);
        assert!(a.checked_add(&b).is_err());
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn homogeneous_components_partition() {
        let ctx = ctx3();
        let t1 = Polynomial::var(&ctx, 0);
        let t2 = Polynomial::var(&ctx, 1);
        let f = &(&Polynomial::one(&ctx) + &t1) + &(&t1 * &t2);
        assert_eq!(f.homogeneous_component(2), &t1 * &t2);
        let resum = (0..=f.degree()).fold(Polynomial::zero(&ctx), |acc, d| {
            &acc + &f.homogeneous_component(d)
        });
        assert_eq!(resum, f);
    }

    #[test]
    fn substitution_is_a_ring_map() {
        let ctx = ctx3();
        let t1 = Polynomial::var(&ctx, 0);
        let t2 = Polynomial::var(&ctx, 1);
        // Identity substitution.
        let id = vec![t1.clone(), t2.clone()];
        let f = &(&t1 * &t2) + &t1.pow(3);
        assert_eq!(apply_substitution(&id, &f).unwrap(), f);
        // Swap fixes t1*t2.
        let swap = vec![t2.clone(), t1.clone()];
        assert_eq!(apply_substitution(&swap, &(&t1 * &t2)).unwrap(), &t1 * &t2);
        // t -> t + t^3 on t1^2 over F_3.
        let img = vec![&t1 + &t1.pow(3), t2.clone()];
        let got = apply_substitution(&img, &t1.pow(2)).unwrap();
        let want = &(&t1.pow(2) + &t1.pow(4).scale(FieldElement::new(2, 3))) + &t1.pow(6);
        assert_eq!(got, want);
    }

    #[test]
    fn monomial_enumeration_counts() {
        let ctx = RingContext::flag(3, 3);
        assert_eq!(monomials_of_degree(&ctx, 0).len(), 1);
        assert_eq!(monomials_of_degree(&ctx, 2).len(), 6);
        let ctx4 = RingContext::flag(3, 4);
        assert_eq!(monomials_of_degree(&ctx4, 30).len(), 5456);
    }

    #[test]
    fn display_round_trips_basics() {
        let ctx = ctx3();
        let t1 = Polynomial::var(&ctx, 0);
        let f = &t1.pow(2).scale(FieldElement::new(2, 3)) + &Polynomial::one(&ctx);
        assert_eq!(format!("{f}"), "2*t1^2 + 1");
    }
}
