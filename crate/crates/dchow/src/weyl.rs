//! Weyl-group elements as linear substitutions on the degree-1 variables,
//! invariance checks (exact and modulo an ideal), and invariant-slice
//! dimensions by exact linear algebra.

use std::collections::HashMap;

use crate::algebra::{
    apply_substitution, monomials_of_degree, FieldElement, Ctx, Polynomial,
};
use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::linalg::Echelon;

/// Largest degree-slice monomial count `invariant_dimension` will build a
/// matrix for.
const MAX_SLICE: usize = 200_000;

/// An invertible linear substitution `t_j -> sum_i a[i][j] t_i`.
#[derive(Clone, Debug)]
pub struct GroupElement {
    ctx: Ctx,
    /// Column j holds the image of variable j.
    matrix: Vec<Vec<FieldElement>>,
}

impl GroupElement {
    pub fn new(ctx: &Ctx, matrix: Vec<Vec<i64>>) -> Result<Self> {
        let n = ctx.nvars();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::Context(format!(
                "the action matrix must be {n} x {n}"
            )));
        }
        if !ctx.is_weight_one() {
            return Err(Error::Context(
                "linear substitutions need weight-1 variables".into(),
            ));
        }
        let p = ctx.prime();
        let reduced: Vec<Vec<FieldElement>> = matrix
            .iter()
            .map(|row| row.iter().map(|&v| FieldElement::new(v, p)).collect())
            .collect();
        // Invertibility over F_p.
        let rows: Vec<Vec<u32>> = reduced
            .iter()
            .map(|row| row.iter().map(|c| c.value()).collect())
            .collect();
        if crate::linalg::rank(p, &rows, n) != n {
            return Err(Error::Context("the action matrix is singular".into()));
        }
        Ok(GroupElement {
            ctx: ctx.clone(),
            matrix: reduced,
        })
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn matrix(&self) -> Vec<Vec<u32>> {
        self.matrix
            .iter()
            .map(|r| r.iter().map(|c| c.value()).collect())
            .collect()
    }

    /// Image of variable `j` as a linear form.
    fn image(&self, j: usize) -> Polynomial {
        let mut acc = Polynomial::zero(&self.ctx);
        for i in 0..self.ctx.nvars() {
            let c = self.matrix[i][j];
            if !c.is_zero() {
                acc = &acc + &Polynomial::var(&self.ctx, i).scale(c);
            }
        }
        acc
    }

    /// The degree-preserving ring automorphism on polynomials.
    pub fn act(&self, f: &Polynomial) -> Result<Polynomial> {
        let images: Vec<Polynomial> = (0..self.ctx.nvars()).map(|j| self.image(j)).collect();
        apply_substitution(&images, f)
    }
}

/// Generators of the signed permutation group on the variables: adjacent
/// transpositions plus the sign flip of the first variable (the flip
/// degenerates to the identity over F_2).
pub fn signed_perm_generators(ctx: &Ctx) -> Vec<GroupElement> {
    let n = ctx.nvars();
    let mut out = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut m = identity_matrix(n);
        m[i][i] = 0;
        m[i + 1][i + 1] = 0;
        m[i][i + 1] = 1;
        m[i + 1][i] = 1;
        out.push(GroupElement::new(ctx, m).expect("permutation matrices are invertible"));
    }
    let mut flip = identity_matrix(n);
    flip[0][0] = -1;
    out.push(GroupElement::new(ctx, flip).expect("sign flips are invertible"));
    out
}

fn identity_matrix(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// The extra rank-4 reflection over F_3, in its involutive half-sum form:
/// `t_i -> t_i - 2^(-1) (t_1 + .. + t_4)`, i.e. the matrix `I + J` mod 3
/// (`J` the all-ones matrix).  `(I + J)^2 = I + 6J = I` mod 3, and the form
/// fixes `p_1` and the rest of the invariant generator set.
pub fn f4_reflection(ctx: &Ctx) -> Result<GroupElement> {
    if ctx.prime() != 3 || ctx.nvars() != 4 {
        return Err(Error::Context(
            "the extra reflection lives on F_3[t1..t4]".into(),
        ));
    }
    let m: Vec<Vec<i64>> = (0..4)
        .map(|i| (0..4).map(|j| 1 + i64::from(i == j)).collect())
        .collect();
    GroupElement::new(ctx, m)
}

/// True iff `g . f = f` for every generator; invariance under the generators
/// implies invariance under the generated group.
pub fn is_invariant(f: &Polynomial, gens: &[GroupElement]) -> Result<bool> {
    for g in gens {
        if g.act(f)? != *f {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff `g . f - f` lies in `ideal` for every generator.
pub fn is_invariant_mod_ideal(
    f: &Polynomial,
    gens: &[GroupElement],
    ideal: &IdealHandle,
) -> Result<bool> {
    for g in gens {
        let diff = g.act(f)?.checked_sub(f)?;
        if !ideal.contains(&diff) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dimension of the degree-d slice of the invariant ring, computed as the
/// nullity of the stacked `(g - id)` action matrices on the degree-d
/// monomial basis.
pub fn invariant_dimension(ctx: &Ctx, gens: &[GroupElement], d: u32) -> Result<u64> {
    let monos = monomials_of_degree(ctx, d);
    let ncols = monos.len();
    if ncols > MAX_SLICE {
        return Err(Error::Size(format!(
            "degree-{d} slice has {ncols} monomials, beyond the configured cap"
        )));
    }
    let index: HashMap<_, _> = monos
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    let mut ech = Echelon::new(ctx.prime(), ncols);
    let p = ctx.prime();
    let one = FieldElement::one(p);
    for g in gens {
        // Action matrix B with B[target][source] = coefficient of the target
        // monomial in g . source; the invariants are the right nullspace of
        // the stacked (B - id).  The row convention matters: the dual action
        // can have a different fixed-space dimension when p divides the
        // group order.
        let mut mat = vec![vec![0u32; ncols]; ncols];
        for (col, m) in monos.iter().enumerate() {
            let base = Polynomial::from_terms(ctx, vec![(m.clone(), one)]);
            let img = g.act(&base)?;
            for (mm, c) in img.terms() {
                mat[index[mm]][col] = c.value();
            }
            mat[col][col] = (mat[col][col] + p - 1) % p;
        }
        for row in &mat {
            if row.iter().any(|&v| v != 0) {
                ech.insert_dense(row);
            }
        }
    }
    Ok((ncols - ech.rank()) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, RingContext};
    use crate::symfun::{pontryagin, toda_generators};

    #[test]
    fn generator_counts_and_involutions() {
        let ctx = RingContext::flag(3, 2);
        let gens = signed_perm_generators(&ctx);
        assert_eq!(gens.len(), 2);
        for g in &gens {
            let m = g.matrix();
            // matrix squared = identity
            let n = m.len();
            for i in 0..n {
                for j in 0..n {
                    let mut acc = 0u32;
                    for k in 0..n {
                        acc = (acc + m[i][k] * m[k][j]) % 3;
                    }
                    assert_eq!(acc, u32::from(i == j));
                }
            }
        }
    }

    #[test]
    fn sign_flip_is_identity_mod_2() {
        let ctx = RingContext::flag(2, 3);
        let gens = signed_perm_generators(&ctx);
        let flip = gens.last().unwrap();
        assert_eq!(flip.matrix(), identity_matrix(3)
            .iter()
            .map(|r| r.iter().map(|&v| v as u32).collect::<Vec<_>>())
            .collect::<Vec<_>>());
    }

    #[test]
    fn constants_are_invariant_and_c1_is_not() {
        let ctx = RingContext::flag(3, 2);
        let gens = signed_perm_generators(&ctx);
        let c = Polynomial::constant(&ctx, 2);
        assert!(is_invariant(&c, &gens).unwrap());
        let c1 = parse_polynomial(&ctx, "c1").unwrap();
        assert!(!is_invariant(&c1, &gens).unwrap(), "sign flip negates c1");
    }

    #[test]
    fn pontryagin_classes_are_signed_perm_invariant() {
        for p in [2u32, 3] {
            for l in 2..=5usize {
                let ctx = RingContext::flag(p, l);
                let gens = signed_perm_generators(&ctx);
                for k in 1..=l {
                    assert!(is_invariant(&pontryagin(&ctx, k), &gens).unwrap());
                }
            }
        }
    }

    #[test]
    fn reflection_is_involutive_and_fixes_the_generators() {
        let ctx = RingContext::flag(3, 4);
        let r = f4_reflection(&ctx).unwrap();
        // (I+J)^2 = I mod 3.
        let m = r.matrix();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = 0u32;
                for k in 0..4 {
                    acc = (acc + m[i][k] * m[k][j]) % 3;
                }
                assert_eq!(acc, u32::from(i == j));
            }
        }
        let toda = toda_generators(&ctx).unwrap();
        let mut gens = signed_perm_generators(&ctx);
        gens.push(r);
        assert!(is_invariant(&toda.p1.value, &gens).unwrap());
        assert!(is_invariant(&toda.pbar2.value, &gens).unwrap());
        assert!(is_invariant(&toda.pbar5.value, &gens).unwrap());
    }

    #[test]
    fn reflection_rejects_wrong_context() {
        assert!(f4_reflection(&RingContext::flag(2, 4)).is_err());
        assert!(f4_reflection(&RingContext::flag(3, 3)).is_err());
    }

    #[test]
    fn cube_invariance_mod_ideal() {
        let ctx = RingContext::flag(3, 4);
        let toda = toda_generators(&ctx).unwrap();
        let r = f4_reflection(&ctx).unwrap();
        let modulus = IdealHandle::new(
            &ctx,
            vec![
                ("p1".into(), toda.p1.value.clone()),
                ("pbar2".into(), toda.pbar2.value.clone()),
            ],
        )
        .unwrap();
        let rs = [r];
        assert!(is_invariant_mod_ideal(&toda.pbar9.value, &rs, &modulus).unwrap());
        assert!(is_invariant_mod_ideal(&toda.pbar12.value, &rs, &modulus).unwrap());
        // Exact invariants pass against any ideal.
        assert!(is_invariant_mod_ideal(&toda.pbar5.value, &rs, &modulus).unwrap());
        // p3 alone is not invariant even mod the ideal... it actually is not
        // exactly invariant:
        assert!(!is_invariant(&toda.pbar9.value, &rs).unwrap());
    }

    #[test]
    fn invariant_dimension_small_cases() {
        let ctx = RingContext::flag(3, 2);
        let gens = signed_perm_generators(&ctx);
        assert_eq!(invariant_dimension(&ctx, &gens, 0).unwrap(), 1);
        // Degree 2 invariants of the signed permutations on two variables:
        // spanned by p1.
        assert_eq!(invariant_dimension(&ctx, &gens, 2).unwrap(), 1);
        assert_eq!(invariant_dimension(&ctx, &gens, 1).unwrap(), 0);
    }

    #[test]
    fn group_action_is_multiplicative_and_degree_preserving() {
        let ctx = RingContext::flag(3, 4);
        let r = f4_reflection(&ctx).unwrap();
        let f = parse_polynomial(&ctx, "t1*t2 + t3^2").unwrap();
        let g = parse_polynomial(&ctx, "t4^3 + t1*t2*t3").unwrap();
        let lhs = r.act(&f.checked_mul(&g).unwrap()).unwrap();
        let rhs = r.act(&f).unwrap().checked_mul(&r.act(&g).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(r.act(&f).unwrap().degree(), f.degree());
    }

    #[test]
    fn singular_matrices_are_rejected() {
        let ctx = RingContext::flag(3, 2);
        assert!(GroupElement::new(&ctx, vec![vec![1, 2], vec![2, 4]]).is_err());
    }
}
