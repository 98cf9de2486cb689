//! Constructors for the named polynomial classes: elementary symmetric
//! classes `c_k`, Pontryagin classes `p_k`, powers of `c_1`, the mod-3
//! generator set `pbar2, pbar5, pbar9, pbar12, r15` on four variables, and
//! the Dickson expansion of the spin Euler class.

use crate::algebra::{apply_substitution, Ctx, Monomial, Polynomial, RingContext};
use crate::error::{Error, Result};

/// A named homogeneous class.
#[derive(Clone, Debug)]
pub struct NamedClass {
    pub name: String,
    pub value: Polynomial,
    pub chow_degree: u32,
}

impl NamedClass {
    fn new(name: &str, value: Polynomial) -> Self {
        let chow_degree = value
            .homogeneous_degree()
            .expect("named classes are homogeneous");
        NamedClass {
            name: name.to_string(),
            value,
            chow_degree,
        }
    }
}

/// The k-th elementary symmetric polynomial `e_k(t_1..t_l)`; zero for `k > l`.
pub fn elem_symmetric(ctx: &Ctx, k: usize) -> Polynomial {
    let n = ctx.nvars();
    if k > n {
        return Polynomial::zero(ctx);
    }
    // Coefficient extraction from prod_i (1 + t_i s): dp[j] holds e_j so far.
    let mut dp: Vec<Polynomial> = (0..=k)
        .map(|j| {
            if j == 0 {
                Polynomial::one(ctx)
            } else {
                Polynomial::zero(ctx)
            }
        })
        .collect();
    for i in 0..n {
        let t = Polynomial::var(ctx, i);
        for j in (1..=k).rev() {
            dp[j] = &dp[j] + &(&dp[j - 1] * &t);
        }
    }
    dp.pop().unwrap()
}

/// The k-th Pontryagin class `p_k = e_k(t_1^2, ..., t_l^2)`, homogeneous of
/// Chow degree `2k`.
pub fn pontryagin(ctx: &Ctx, k: usize) -> Polynomial {
    let squares: Vec<Polynomial> = (0..ctx.nvars())
        .map(|i| Polynomial::var(ctx, i).pow(2))
        .collect();
    apply_substitution(&squares, &elem_symmetric(ctx, k)).expect("images share the context")
}

/// The generator set of the rank-4 mod-3 invariant ring: `p1`, `pbar2`,
/// `pbar5`, `pbar9`, `pbar12` and the degree-30 relation class `r15`.
///
/// `pbar9` and `pbar12` are pinned to the representatives `p3^3` and `p4^3`;
/// they are invariant only modulo the ideal `(p1, pbar2)`.
#[derive(Clone, Debug)]
pub struct TodaClasses {
    pub p1: NamedClass,
    pub pbar2: NamedClass,
    pub pbar5: NamedClass,
    pub pbar9: NamedClass,
    pub pbar12: NamedClass,
    pub r15: NamedClass,
}

pub fn toda_generators(ctx: &Ctx) -> Result<TodaClasses> {
    if ctx.prime() != 3 || ctx.nvars() != 4 || !ctx.is_weight_one() {
        return Err(Error::Context(
            "the rank-4 invariant generators need F_3[t1..t4] with weight-1 variables".into(),
        ));
    }
    let p1 = pontryagin(ctx, 1);
    let p2 = pontryagin(ctx, 2);
    let p3 = pontryagin(ctx, 3);
    let p4 = pontryagin(ctx, 4);
    let pbar2 = &p2 - &p1.pow(2);
    let pbar5 = &(&p4 * &p1) + &(&p3 * &pbar2);
    let pbar9 = p3.pow(3);
    let pbar12 = p4.pow(3);
    let r15 = pbar5.pow(3);
    let out = TodaClasses {
        p1: NamedClass::new("p1", p1),
        pbar2: NamedClass::new("pbar2", pbar2),
        pbar5: NamedClass::new("pbar5", pbar5),
        pbar9: NamedClass::new("pbar9", pbar9),
        pbar12: NamedClass::new("pbar12", pbar12),
        r15: NamedClass::new("r15", r15),
    };
    debug_assert_eq!(out.pbar2.chow_degree, 4);
    debug_assert_eq!(out.pbar5.chow_degree, 10);
    debug_assert_eq!(out.pbar9.chow_degree, 18);
    debug_assert_eq!(out.pbar12.chow_degree, 24);
    debug_assert_eq!(out.r15.chow_degree, 30);
    Ok(out)
}

/// The Dickson expansion of the spin Euler class restricted to a maximal
/// elementary abelian 2-group: in `F_2[z, x1..xh]`,
/// `e = prod over lambda in F_2^h of (z + sum lambda_i x_i)`, and the Dickson
/// invariant `d_i` is the coefficient of `z^(2^i)`.
#[derive(Clone, Debug)]
pub struct DicksonExpansion {
    pub ctx: Ctx,
    pub euler: Polynomial,
    /// `d[0] .. d[h-1]`, each a polynomial in the `x` variables only.
    pub d: Vec<Polynomial>,
}

pub fn dickson_expand(h: usize) -> Result<DicksonExpansion> {
    if h < 1 {
        return Err(Error::Size("the expansion needs h >= 1".into()));
    }
    if h > 4 {
        return Err(Error::Size(format!(
            "h = {h} exceeds the desk-scale cap of 4 (2^h factors)"
        )));
    }
    let ctx = RingContext::q_context(h);
    let z = Polynomial::var(&ctx, 0);
    let mut euler = Polynomial::one(&ctx);
    for mask in 0u32..(1 << h) {
        let mut factor = z.clone();
        for i in 0..h {
            if mask & (1 << i) != 0 {
                factor = &factor + &Polynomial::var(&ctx, i + 1);
            }
        }
        euler = &euler * &factor;
    }
    // Split off the coefficient of each z-power and check the Dickson shape:
    // only z^(2^i) and z^(2^h) occur, the top coefficient being 1.
    let mut by_zdeg: Vec<Vec<(Monomial, crate::algebra::FieldElement)>> =
        vec![Vec::new(); (1 << h) + 1];
    for (m, c) in euler.terms() {
        let zd = m.exps()[0] as usize;
        let mut rest = m.exps().to_vec();
        rest[0] = 0;
        by_zdeg[zd].push((Monomial::new(rest), *c));
    }
    let mut d = Vec::with_capacity(h);
    for (zd, terms) in by_zdeg.iter().enumerate() {
        if terms.is_empty() {
            continue;
        }
        if zd == (1 << h) {
            let top = Polynomial::from_terms(&ctx, terms.clone());
            debug_assert_eq!(top, Polynomial::one(&ctx), "top z-coefficient must be 1");
            continue;
        }
        let is_power_of_two = zd.is_power_of_two();
        debug_assert!(
            is_power_of_two && zd < (1 << h),
            "unexpected z-power {zd} in the Euler expansion"
        );
        let _ = is_power_of_two;
    }
    for i in 0..h {
        d.push(Polynomial::from_terms(&ctx, by_zdeg[1 << i].clone()));
    }
    Ok(DicksonExpansion { ctx, euler, d })
}

/// Resolve a named-class alias inside `ctx`, the vocabulary of the polynomial
/// parser.  `Ok(None)` means the name is not an alias at all.
pub fn resolve_alias(ctx: &Ctx, name: &str) -> Result<Option<Polynomial>> {
    if let Some(k) = name.strip_prefix("pbar") {
        if let Ok(k) = k.parse::<usize>() {
            if matches!(k, 2 | 5 | 9 | 12) {
                let toda = toda_generators(ctx)?;
                return Ok(Some(match k {
                    2 => toda.pbar2.value,
                    5 => toda.pbar5.value,
                    9 => toda.pbar9.value,
                    _ => toda.pbar12.value,
                }));
            }
            return Ok(None);
        }
        return Ok(None);
    }
    if name == "r15" {
        return Ok(Some(toda_generators(ctx)?.r15.value));
    }
    let (head, tail) = name.split_at(1);
    if tail.is_empty() || !tail.bytes().all(|b| b.is_ascii_digit()) {
        return Ok(None);
    }
    let k: usize = tail
        .parse()
        .map_err(|_| Error::Parse(format!("index out of range in `{name}`")))?;
    match head {
        "c" => Ok(Some(elem_symmetric(ctx, k))),
        "p" => Ok(Some(pontryagin(ctx, k))),
        // e_j = c_1^j.
        "e" => Ok(Some(elem_symmetric(ctx, 1).pow(k as u32))),
        _ => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FieldElement;

    #[test]
    fn elementary_symmetric_basics() {
        let ctx = RingContext::flag(3, 2);
        assert_eq!(elem_symmetric(&ctx, 0), Polynomial::one(&ctx));
        let t1 = Polynomial::var(&ctx, 0);
        let t2 = Polynomial::var(&ctx, 1);
        assert_eq!(elem_symmetric(&ctx, 1), &t1 + &t2);
        assert_eq!(elem_symmetric(&ctx, 2), &t1 * &t2);
        assert!(elem_symmetric(&ctx, 3).is_zero());
    }

    #[test]
    fn generating_function_identity_rank_4() {
        // prod_i (1 + t_i s): check all coefficients for l = 4 by expanding
        // the product over an extra polynomial variable, done here by
        // comparing against the defining recursion on subsets.
        let ctx = RingContext::flag(5, 4);
        for k in 0..=4usize {
            // Brute force over subsets.
            let mut want = Polynomial::zero(&ctx);
            for mask in 0u32..16 {
                if mask.count_ones() as usize != k {
                    continue;
                }
                let mut term = Polynomial::one(&ctx);
                for i in 0..4 {
                    if mask & (1 << i) != 0 {
                        term = &term * &Polynomial::var(&ctx, i);
                    }
                }
                want = &want + &term;
            }
            assert_eq!(elem_symmetric(&ctx, k), want);
        }
    }

    #[test]
    fn pontryagin_is_frobenius_square_mod_2() {
        let ctx = RingContext::flag(2, 4);
        for k in 1..=4 {
            assert_eq!(pontryagin(&ctx, k), elem_symmetric(&ctx, k).pow(2));
        }
    }

    #[test]
    fn pontryagin_p1_and_p4() {
        let ctx = RingContext::flag(3, 4);
        let want: Polynomial = (0..4)
            .map(|i| Polynomial::var(&ctx, i).pow(2))
            .fold(Polynomial::zero(&ctx), |a, b| &a + &b);
        assert_eq!(pontryagin(&ctx, 1), want);
        let p4 = pontryagin(&ctx, 4);
        let prod = (0..4)
            .map(|i| Polynomial::var(&ctx, i))
            .fold(Polynomial::one(&ctx), |a, b| &a * &b);
        assert_eq!(p4, prod.pow(2));
    }

    #[test]
    fn toda_degrees_and_cube_identity() {
        let ctx = RingContext::flag(3, 4);
        let toda = toda_generators(&ctx).unwrap();
        assert_eq!(toda.pbar5.chow_degree, 10);
        // Frobenius: pbar5^3 = p1^3 pbar12 + pbar2^3 pbar9.
        let lhs = toda.pbar5.value.pow(3);
        let rhs = &(&toda.p1.value.pow(3) * &toda.pbar12.value)
            + &(&toda.pbar2.value.pow(3) * &toda.pbar9.value);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, toda.r15.value);
    }

    #[test]
    fn toda_rejects_wrong_context() {
        assert!(toda_generators(&RingContext::flag(2, 4)).is_err());
        assert!(toda_generators(&RingContext::flag(3, 3)).is_err());
    }

    #[test]
    fn dickson_h1_and_h2() {
        let e1 = dickson_expand(1).unwrap();
        let z = Polynomial::var(&e1.ctx, 0);
        let x1 = Polynomial::var(&e1.ctx, 1);
        assert_eq!(e1.euler, &z.pow(2) + &(&x1 * &z));
        assert_eq!(e1.d[0], x1);

        let e2 = dickson_expand(2).unwrap();
        let x1 = Polynomial::var(&e2.ctx, 1);
        let x2 = Polynomial::var(&e2.ctx, 2);
        // d0 = x1 x2 (x1 + x2).
        let want = &(&x1 * &x2) * &(&x1 + &x2);
        assert_eq!(e2.d[0], want);
    }

    #[test]
    fn dickson_h3_z_powers() {
        let e3 = dickson_expand(3).unwrap();
        assert_eq!(e3.euler.homogeneous_degree(), Some(8));
        let mut zpowers: Vec<u32> = e3
            .euler
            .terms()
            .iter()
            .map(|(m, _)| m.exps()[0])
            .collect();
        zpowers.sort_unstable();
        zpowers.dedup();
        assert_eq!(zpowers, vec![1, 2, 4, 8]);
        assert!(dickson_expand(5).is_err());
    }

    #[test]
    fn alias_resolution_covers_the_vocabulary() {
        let ctx = RingContext::flag(3, 4);
        assert!(resolve_alias(&ctx, "c3").unwrap().is_some());
        assert!(resolve_alias(&ctx, "p2").unwrap().is_some());
        assert_eq!(
            resolve_alias(&ctx, "e4").unwrap().unwrap(),
            elem_symmetric(&ctx, 1).pow(4)
        );
        assert!(resolve_alias(&ctx, "pbar5").unwrap().is_some());
        assert!(resolve_alias(&ctx, "bogus").unwrap().is_none());
        // pbar classes need the F_3 rank-4 context.
        let ctx2 = RingContext::flag(2, 3);
        assert!(resolve_alias(&ctx2, "pbar2").is_err());
        let _ = FieldElement::new(1, 3);
    }
}
