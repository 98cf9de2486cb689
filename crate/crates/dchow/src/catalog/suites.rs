//! The companion check suites: reduced-power identities on the rank-4 mod-3
//! generators, Milnor derivations against the Dickson expansion, and
//! Weyl-invariance of the named classes.

use serde::Serialize;

use crate::algebra::{Polynomial, RingContext};
use crate::error::Result;
use crate::groebner::IdealHandle;
use crate::hilbert::{series_eval, SeriesExpr};
use crate::steenrod::{milnor_q, reduced_power};
use crate::symfun::{dickson_expand, toda_generators};
use crate::weyl::{f4_reflection, invariant_dimension, is_invariant, is_invariant_mod_ideal, signed_perm_generators};

/// One pass/fail line of a suite.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn line(name: &str, pass: bool, detail: String) -> CheckLine {
    CheckLine {
        name: name.to_string(),
        pass,
        detail,
    }
}

fn eq_line(name: &str, lhs: &Polynomial, rhs: &Polynomial) -> CheckLine {
    let pass = lhs == rhs;
    line(
        name,
        pass,
        if pass {
            "identical".to_string()
        } else {
            format!("lhs has {} terms, rhs has {}", lhs.num_terms(), rhs.num_terms())
        },
    )
}

/// Reduced-power identities on the rank-4 mod-3 generator set.
pub fn steenrod_suite() -> Result<Vec<CheckLine>> {
    let ctx = RingContext::flag(3, 4);
    let toda = toda_generators(&ctx)?;
    let (p1, pbar2, pbar5, pbar9, pbar12) = (
        &toda.p1.value,
        &toda.pbar2.value,
        &toda.pbar5.value,
        &toda.pbar9.value,
        &toda.pbar12.value,
    );
    let mut out = Vec::new();

    out.push(eq_line(
        "P1(p1) = p1^2 - pbar2",
        &reduced_power(1, p1)?,
        &(&p1.pow(2) - pbar2),
    ));
    out.push(eq_line(
        "P1(pbar2) = p1*pbar2",
        &reduced_power(1, pbar2)?,
        &(p1 * pbar2),
    ));
    out.push(eq_line(
        "P1(pbar5) = 0",
        &reduced_power(1, pbar5)?,
        &Polynomial::zero(&ctx),
    ));
    out.push(eq_line(
        "P3(p1) = 0",
        &reduced_power(3, p1)?,
        &Polynomial::zero(&ctx),
    ));
    out.push(eq_line(
        "P3(pbar2) = pbar5 - p1*pbar2^2",
        &reduced_power(3, pbar2)?,
        &(pbar5 - &(p1 * &pbar2.pow(2))),
    ));
    out.push(eq_line(
        "P3(pbar5) = pbar5*p1*(p1^2 - pbar2)",
        &reduced_power(3, pbar5)?,
        &(&(pbar5 * p1) * &(&p1.pow(2) - pbar2)),
    ));

    // P3(pbar9) = pbar12 modulo (p1, pbar2).
    let modulus = IdealHandle::new(
        &ctx,
        vec![("p1".into(), p1.clone()), ("pbar2".into(), pbar2.clone())],
    )?;
    let diff = &reduced_power(3, pbar9)? - pbar12;
    let pass = modulus.contains(&diff);
    out.push(line(
        "P3(pbar9) = pbar12 mod (p1, pbar2)",
        pass,
        if pass {
            "difference reduces to zero".to_string()
        } else {
            "difference does not reduce to zero".to_string()
        },
    ));

    Ok(out)
}

/// Dickson-expansion checks for a given 2-rank `h`: the z-power shape of the
/// Euler product, linear invariance of the coefficients, and the Milnor
/// derivation identities `Q_k e = 0 (k <= h-2)`, `Q_{h-1} e = d0 e`.
pub fn dickson_suite(h: usize) -> Result<Vec<CheckLine>> {
    let exp = dickson_expand(h)?;
    let ctx = &exp.ctx;
    let mut out = Vec::new();

    let mut zpowers: Vec<u32> = exp.euler.terms().iter().map(|(m, _)| m.exps()[0]).collect();
    zpowers.sort_unstable();
    zpowers.dedup();
    let want: Vec<u32> = (0..h as u32).map(|i| 1 << i).chain([1 << h as u32]).collect();
    out.push(line(
        "euler class has z-powers 2^0..2^h only",
        zpowers == want,
        format!("powers {zpowers:?}"),
    ));

    // Invariance of every d_i under generators of the linear group on the
    // x-variables: swap x1<->x2, transvection x1 -> x1 + x2, full cycle.
    if h >= 2 {
        let n = ctx.nvars();
        let mut gens = Vec::new();
        let mut swap = identity(n);
        swap[1][1] = 0;
        swap[2][2] = 0;
        swap[1][2] = 1;
        swap[2][1] = 1;
        gens.push(crate::weyl::GroupElement::new(ctx, swap)?);
        let mut transvect = identity(n);
        transvect[2][1] = 1; // x1 -> x1 + x2
        gens.push(crate::weyl::GroupElement::new(ctx, transvect)?);
        if h >= 3 {
            let mut cycle = identity(n);
            for i in 1..n {
                for j in 1..n {
                    cycle[i][j] = 0;
                }
            }
            for j in 1..n {
                let i = if j == n - 1 { 1 } else { j + 1 };
                cycle[i][j] = 1; // x_j -> x_{j+1} cyclically
            }
            gens.push(crate::weyl::GroupElement::new(ctx, cycle)?);
        }
        for (i, di) in exp.d.iter().enumerate() {
            let pass = is_invariant(di, &gens)?;
            out.push(line(
                &format!("d{i} is invariant under the linear generators"),
                pass,
                format!("checked {} generators", gens.len()),
            ));
        }
    }

    for k in 0..h.saturating_sub(1) {
        let q = milnor_q(k as u32, &exp.euler)?;
        out.push(line(
            &format!("Q{k}(e) = 0"),
            q.is_zero(),
            format!("{} terms", q.num_terms()),
        ));
    }
    let qtop = milnor_q(h as u32 - 1, &exp.euler)?;
    let want = exp.d[0].checked_mul(&exp.euler)?;
    out.push(eq_line(&format!("Q{}(e) = d0*e", h - 1), &qtop, &want));

    Ok(out)
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// Invariance of the rank-4 mod-3 generator set and the invariant-slice
/// dimension count against the presentation series (generators of degree
/// 2, 4, 10, 18, 24 with a single degree-30 relation).
pub fn invariants_suite(max_degree: u32) -> Result<Vec<CheckLine>> {
    let ctx = RingContext::flag(3, 4);
    let toda = toda_generators(&ctx)?;
    let mut gens = signed_perm_generators(&ctx);
    gens.push(f4_reflection(&ctx)?);
    let mut out = Vec::new();

    for nc in [&toda.p1, &toda.pbar2, &toda.pbar5] {
        let pass = is_invariant(&nc.value, &gens)?;
        out.push(line(
            &format!("{} is invariant under signed permutations and the extra reflection", nc.name),
            pass,
            format!("degree {}", nc.chow_degree),
        ));
    }

    let modulus = IdealHandle::new(
        &ctx,
        vec![
            ("p1".into(), toda.p1.value.clone()),
            ("pbar2".into(), toda.pbar2.value.clone()),
        ],
    )?;
    for nc in [&toda.pbar9, &toda.pbar12] {
        let pass = is_invariant_mod_ideal(&nc.value, &gens, &modulus)?;
        out.push(line(
            &format!("{} is invariant mod (p1, pbar2)", nc.name),
            pass,
            format!("degree {}", nc.chow_degree),
        ));
    }

    let lhs = toda.pbar5.value.pow(3);
    let rhs = &(&toda.p1.value.pow(3) * &toda.pbar12.value)
        + &(&toda.pbar2.value.pow(3) * &toda.pbar9.value);
    out.push(eq_line(
        "pbar5^3 = p1^3*pbar12 + pbar2^3*pbar9",
        &lhs,
        &rhs,
    ));

    let presentation = SeriesExpr::RegSeqQuotient {
        weights: vec![2, 4, 10, 18, 24],
        degrees: vec![30],
    };
    let want = series_eval(&presentation, max_degree)?;
    let mut all = true;
    let mut detail = String::new();
    for d in 0..=max_degree {
        let dim = invariant_dimension(&ctx, &gens, d)?;
        if dim as i64 != want[d as usize] {
            all = false;
            detail = format!(
                "degree {d}: computed {dim}, presentation series gives {}",
                want[d as usize]
            );
            break;
        }
    }
    if all {
        detail = format!("all slice dimensions match for degrees 0..={max_degree}");
    }
    out.push(line(
        "invariant slice dimensions match the presentation series",
        all,
        detail,
    ));

    Ok(out)
}
