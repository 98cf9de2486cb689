//! Degree-wise Hilbert functions of quotients S/I by two independent methods,
//! and the kernel/image difference series D.

mod series;

pub use series::{mul_truncated, parse_series, series_eval, SeriesExpr};

use std::collections::HashMap;

use crate::algebra::{monomials_of_degree, Monomial};
use crate::error::{Error, Result};
use crate::groebner::{ideal_containment, IdealHandle};
use crate::linalg::{remap_row, Echelon};

/// Which Hilbert-function engine to use.  `Both` runs the two independent
/// methods and treats any disagreement as a hard failure.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Method {
    Groebner,
    LinAlg,
    #[default]
    Both,
}

impl Method {
    pub fn parse(s: &str) -> Result<Method> {
        match s {
            "groebner" => Ok(Method::Groebner),
            "linalg" => Ok(Method::LinAlg),
            "both" => Ok(Method::Both),
            other => Err(Error::Parse(format!(
                "unknown method `{other}` (expected groebner, linalg or both)"
            ))),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Groebner => "groebner",
            Method::LinAlg => "linalg",
            Method::Both => "both",
        }
    }
}

fn check_cap(ideal: &IdealHandle, d: u32) {
    if let Some(cap) = ideal.degree_cap() {
        assert!(
            d <= cap,
            "degree {d} beyond the ideal's truncation cap {cap}"
        );
    }
}

/// dim_(F_p) (S/I)_d by staircase counting: degree-d monomials not divisible
/// by any leading term of the reduced Groebner basis.
pub fn hf_staircase(ideal: &IdealHandle, d: u32) -> u64 {
    check_cap(ideal, d);
    let lts = ideal.leading_term_ideal();
    let relevant: Vec<&Monomial> = lts
        .iter()
        .filter(|m| m.weighted_degree(ideal.ctx().weights()) <= d)
        .collect();
    monomials_of_degree(ideal.ctx(), d)
        .iter()
        .filter(|m| !relevant.iter().any(|lt| lt.divides(m)))
        .count() as u64
}

/// dim_(F_p) (S/I)_d as `dim S_d` minus the rank of the Macaulay matrix whose
/// rows are `{m * g : g generator, m a monomial of degree d - deg g}`.
/// Independent of the Groebner route; must agree with `hf_staircase`
/// everywhere.
pub fn hf_linalg(ideal: &IdealHandle, d: u32) -> u64 {
    hf_linalg_upto(ideal, d)[d as usize]
}

/// The linear-algebra Hilbert function for all degrees `0..=n`.
///
/// The rank at each degree is taken over the same row space as the literal
/// Macaulay matrix: the degree-d slice of the ideal is spanned by
/// `x_j * (slice at degree d - w_j)` together with the generators of degree
/// d, so each degree lifts the echelon basis of the previous ones instead of
/// re-reducing every monomial multiple.  The route never touches leading
/// terms or the monomial order, keeping it independent of the Groebner
/// method it cross-checks.
pub fn hf_linalg_upto(ideal: &IdealHandle, n: u32) -> Vec<u64> {
    check_cap(ideal, n);
    {
        let cache = ideal.hf_linalg_cache.lock().unwrap();
        if cache.len() > n as usize {
            return cache[..=n as usize].to_vec();
        }
    }
    let ctx = ideal.ctx();
    let p = ctx.prime();
    let nvars = ctx.nvars();
    let weights = ctx.weights().to_vec();
    let max_w = *weights.iter().max().unwrap_or(&1) as usize;

    let mut hf: Vec<u64> = Vec::with_capacity(n as usize + 1);
    // Sliding window of echelon bases and monomial indices over the last
    // max_w degrees.
    let mut window: Vec<Option<(Vec<Monomial>, HashMap<Monomial, usize>, Echelon)>> =
        (0..=max_w).map(|_| None).collect();

    for d in 0..=n {
        let monos = monomials_of_degree(ctx, d);
        let index: HashMap<Monomial, usize> = monos
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let mut ech = Echelon::new(p, monos.len());

        // Rows x_j * (echelon basis of degree d - w_j).
        for j in 0..nvars {
            let w = weights[j] as usize;
            if (d as usize) < w {
                continue;
            }
            let Some((prev_monos, _, prev_ech)) = window[w - 1].as_ref() else {
                continue;
            };
            // Column remap realizing multiplication by x_j.
            let remap: Vec<usize> = prev_monos.iter().map(|m| index[&m.mul_var(j)]).collect();
            for row in prev_ech.rows() {
                let lifted = remap_row(row, &remap, monos.len());
                ech.insert_row(lifted);
            }
        }
        // Generators of degree exactly d.
        for (_, g) in ideal.generators() {
            if g.homogeneous_degree() == Some(d) && !g.is_zero() {
                ech.insert_dense(&g.coeff_vector(&index, monos.len()));
            }
        }

        hf.push(monos.len() as u64 - ech.rank() as u64);
        window.rotate_right(1);
        window[0] = Some((monos, index, ech));
    }

    let mut cache = ideal.hf_linalg_cache.lock().unwrap();
    if cache.len() < hf.len() {
        *cache = hf.clone();
    }
    hf
}

/// Hilbert function by the requested method; `Both` cross-checks.
pub fn hf(ideal: &IdealHandle, d: u32, method: Method) -> Result<u64> {
    Ok(hf_upto(ideal, d, method)?[d as usize])
}

pub fn hf_upto(ideal: &IdealHandle, n: u32, method: Method) -> Result<Vec<u64>> {
    match method {
        Method::Groebner => Ok((0..=n).map(|d| hf_staircase(ideal, d)).collect()),
        Method::LinAlg => Ok(hf_linalg_upto(ideal, n)),
        Method::Both => {
            let a: Vec<u64> = (0..=n).map(|d| hf_staircase(ideal, d)).collect();
            let b = hf_linalg_upto(ideal, n);
            for d in 0..=n as usize {
                if a[d] != b[d] {
                    return Err(Error::MethodDisagreement {
                        degree: d as u32,
                        staircase: a[d],
                        linalg: b[d],
                    });
                }
            }
            Ok(a)
        }
    }
}

/// The difference series `D_d = HF(S/im, d) - HF(S/ker, d)` for `d = 1..=n`.
///
/// Requires `im` to be contained in `ker`; a containment failure means the
/// composite map is not zero on these generators, i.e. a mis-entered catalog,
/// and is reported as an error rather than a negative series.
pub fn d_series(ker: &IdealHandle, im: &IdealHandle, n: u32, method: Method) -> Result<Vec<u64>> {
    if !ideal_containment(im, ker)? {
        return Err(Error::Containment(
            "the image ideal is not contained in the kernel ideal".into(),
        ));
    }
    let hk = hf_upto(ker, n, method)?;
    let hi = hf_upto(im, n, method)?;
    (1..=n as usize)
        .map(|d| {
            hi[d].checked_sub(hk[d]).ok_or_else(|| {
                Error::Containment(format!(
                    "negative difference at degree {d} despite containment"
                ))
            })
        })
        .collect()
}

/// Exact division of a truncated series by a series with constant term 1
/// (the regular-sequence quotient series).  Returns the quotient
/// coefficients; a negative quotient coefficient is a structural failure of
/// the claimed factorization and is reported as an error.
pub fn divide_by_series(numer: &[i64], denom: &[i64]) -> Result<Vec<i64>> {
    assert!(denom[0] == 1, "denominator must have constant term 1");
    let mut q = vec![0i64; numer.len()];
    for d in 0..numer.len() {
        let mut acc = numer[d];
        for k in 0..d {
            acc -= q[k] * denom[d - k];
        }
        q[d] = acc;
        if q[d] < 0 {
            return Err(Error::Expression(format!(
                "series division leaves a negative coefficient {} at degree {d}",
                q[d]
            )));
        }
    }
    Ok(q)
}
