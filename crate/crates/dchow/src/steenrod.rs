//! Reduced-power operations via the total-power endomorphism
//! `t -> t + t^p` on weight-1 Chow-graded contexts, and Milnor derivations
//! `Q_n` on weight-1 mod-2 contexts.

use crate::algebra::{apply_substitution, FieldElement, Monomial, Polynomial};
use crate::error::{Error, Result};

/// The multiplicative total power: the ring endomorphism sending each
/// degree-1 variable to `t + t^p`.  For homogeneous `f` of degree `d` the
/// image has components only in degrees `d, d+(p-1), ..., d*p`.
pub fn total_power(f: &Polynomial) -> Result<Polynomial> {
    let ctx = f.ctx();
    if !ctx.is_weight_one() {
        return Err(Error::Context(
            "the total power is defined on weight-1 contexts only".into(),
        ));
    }
    let p = ctx.prime();
    let images: Vec<Polynomial> = (0..ctx.nvars())
        .map(|i| {
            let t = Polynomial::var(ctx, i);
            &t + &t.pow(p)
        })
        .collect();
    apply_substitution(&images, f)
}

/// The k-th reduced power of a homogeneous polynomial: the homogeneous
/// component of the total power in degree `deg f + k(p-1)`.  `P^0` is the
/// identity; `P^k` vanishes for `k > deg f`, and `P^(deg f)` is the
/// Frobenius power.
pub fn reduced_power(k: u32, f: &Polynomial) -> Result<Polynomial> {
    let Some(d) = f.homogeneous_degree() else {
        return Err(Error::Grading(
            "reduced powers act on homogeneous polynomials".into(),
        ));
    };
    let p = f.ctx().prime();
    Ok(total_power(f)?.homogeneous_component(d + k * (p - 1)))
}

/// The Milnor derivation `Q_n` on a weight-1 mod-2 context: the derivation
/// extension of `x -> x^(2^(n+1))` on degree-1 generators.  Raises degree by
/// `2^(n+1) - 1`, squares to zero.
pub fn milnor_q(n: u32, f: &Polynomial) -> Result<Polynomial> {
    let ctx = f.ctx();
    if ctx.prime() != 2 || !ctx.is_weight_one() {
        return Err(Error::Context(
            "Milnor derivations act on weight-1 mod-2 contexts".into(),
        ));
    }
    let jump = 1u32
        .checked_shl(n + 1)
        .ok_or_else(|| Error::Size(format!("Milnor index {n} too large")))?;
    let one = FieldElement::one(2);
    let mut out = Polynomial::zero(ctx);
    for (m, _) in f.terms() {
        // Derivation on a monomial: sum over variables with odd exponent of
        // the monomial with that exponent shifted by 2^(n+1) - 1.
        for (i, &e) in m.exps().iter().enumerate() {
            if e % 2 == 1 {
                let mut exps = m.exps().to_vec();
                exps[i] = e - 1 + jump;
                out = &out + &Polynomial::from_terms(
                    ctx,
                    vec![(Monomial::new(exps), one)],
                );
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, RingContext};
    use crate::symfun::{dickson_expand, pontryagin, toda_generators};

    #[test]
    fn total_power_basics() {
        let ctx = RingContext::flag(3, 2);
        let one = Polynomial::one(&ctx);
        assert_eq!(total_power(&one).unwrap(), one);
        let got = total_power(&parse_polynomial(&ctx, "t1^2").unwrap()).unwrap();
        let want = parse_polynomial(&ctx, "t1^2 + 2*t1^4 + t1^6").unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn total_power_is_multiplicative() {
        let ctx = RingContext::flag(3, 3);
        let f = parse_polynomial(&ctx, "t1*t2 + t3^2").unwrap();
        let g = parse_polynomial(&ctx, "t1 + 2*t2 + t3").unwrap();
        let lhs = total_power(&f.checked_mul(&g).unwrap()).unwrap();
        let rhs = total_power(&f)
            .unwrap()
            .checked_mul(&total_power(&g).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn total_power_rejects_weighted_contexts() {
        let ctx = RingContext::new(3, vec!["u".into()], vec![2]);
        let u = Polynomial::var(&ctx, 0);
        assert!(total_power(&u).is_err());
    }

    #[test]
    fn reduced_power_zero_is_identity_and_top_is_frobenius() {
        let ctx = RingContext::flag(3, 4);
        let p2 = pontryagin(&ctx, 2);
        assert_eq!(reduced_power(0, &p2).unwrap(), p2);
        let d = p2.homogeneous_degree().unwrap();
        assert_eq!(reduced_power(d, &p2).unwrap(), p2.pow(3));
        assert!(reduced_power(d + 1, &p2).unwrap().is_zero());
    }

    #[test]
    fn first_reduced_power_of_p1() {
        // P^1(p1) = p1^2 - pbar2 over F_3 on four variables.
        let ctx = RingContext::flag(3, 4);
        let toda = toda_generators(&ctx).unwrap();
        let got = reduced_power(1, &toda.p1.value).unwrap();
        let want = &toda.p1.value.pow(2) - &toda.pbar2.value;
        assert_eq!(got, want);
    }

    #[test]
    fn first_reduced_power_of_pbar2() {
        let ctx = RingContext::flag(3, 4);
        let toda = toda_generators(&ctx).unwrap();
        let got = reduced_power(1, &toda.pbar2.value).unwrap();
        let want = &toda.p1.value * &toda.pbar2.value;
        assert_eq!(got, want);
    }

    #[test]
    fn reduced_power_rejects_inhomogeneous_input() {
        let ctx = RingContext::flag(3, 2);
        let f = parse_polynomial(&ctx, "t1 + t1^2").unwrap();
        assert!(matches!(reduced_power(1, &f), Err(Error::Grading(_))));
    }

    #[test]
    fn milnor_rule_and_derivation_law() {
        let ctx = RingContext::q_context(2);
        let x1 = Polynomial::var(&ctx, 1);
        assert_eq!(milnor_q(0, &x1).unwrap(), x1.pow(2));
        let f = parse_polynomial(&ctx, "z*x1 + x2^2").unwrap();
        let g = parse_polynomial(&ctx, "x1 + x2").unwrap();
        for n in 0..3 {
            let lhs = milnor_q(n, &f.checked_mul(&g).unwrap()).unwrap();
            let rhs = &(&milnor_q(n, &f).unwrap() * &g) + &(&f * &milnor_q(n, &g).unwrap());
            assert_eq!(lhs, rhs, "derivation law for Q_{n}");
        }
    }

    #[test]
    fn milnor_squares_to_zero() {
        let ctx = RingContext::q_context(3);
        let f = parse_polynomial(&ctx, "z^3*x1 + x2*x3^2 + x1*x2*x3").unwrap();
        for n in 0..3 {
            let qf = milnor_q(n, &f).unwrap();
            assert!(milnor_q(n, &qf).unwrap().is_zero(), "Q_{n}^2 = 0");
        }
    }

    #[test]
    fn milnor_operators_commute_on_samples() {
        let ctx = RingContext::q_context(3);
        let f = parse_polynomial(&ctx, "z*x1*x2 + x3^3 + z^2*x2").unwrap();
        for m in 0..3 {
            for n in 0..3 {
                let a = milnor_q(m, &milnor_q(n, &f).unwrap()).unwrap();
                let b = milnor_q(n, &milnor_q(m, &f).unwrap()).unwrap();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn milnor_on_euler_class_h2() {
        let e = dickson_expand(2).unwrap();
        assert!(milnor_q(0, &e.euler).unwrap().is_zero());
        let want = e.d[0].checked_mul(&e.euler).unwrap();
        assert_eq!(milnor_q(1, &e.euler).unwrap(), want);
    }

    #[test]
    fn milnor_rejects_odd_characteristic() {
        let ctx = RingContext::flag(3, 2);
        let t = Polynomial::var(&ctx, 0);
        assert!(milnor_q(0, &t).is_err());
    }

    #[test]
    fn cartan_formula_on_samples() {
        let ctx = RingContext::flag(3, 3);
        let f = parse_polynomial(&ctx, "t1*t2 + 2*t3^2").unwrap();
        let g = parse_polynomial(&ctx, "t1^2 + t2*t3").unwrap();
        let fg = f.checked_mul(&g).unwrap();
        for k in 0..=4u32 {
            let lhs = reduced_power(k, &fg).unwrap();
            let mut rhs = Polynomial::zero(&ctx);
            for i in 0..=k {
                rhs = &rhs
                    + &reduced_power(i, &f)
                        .unwrap()
                        .checked_mul(&reduced_power(k - i, &g).unwrap())
                        .unwrap();
            }
            assert_eq!(lhs, rhs, "Cartan at k = {k}");
        }
    }
}
