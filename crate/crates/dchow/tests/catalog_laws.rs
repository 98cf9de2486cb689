//! Cross-case laws of the catalog: the split-minus-versal difference law,
//! the flag factorization, slice-rank oracles for the membership examples,
//! and the behaviour of truncated and series-only cases.

use dchow::algebra::{monomials_of_degree, parse_polynomial, RingContext};
use dchow::catalog::{build_case, validate_case, verify_case};
use dchow::groebner::IdealHandle;
use dchow::hilbert::{series_eval, Method, SeriesExpr};
use dchow::linalg;

fn d_of(id: &str, n: u32) -> Vec<u64> {
    let case = build_case(id, None).unwrap();
    verify_case(&case, n, Method::Both)
        .unwrap()
        .rows
        .iter()
        .map(|r| r.d_value)
        .collect()
}

#[test]
fn split_minus_versal_law_spin7() {
    // The difference of the split and versal series is the free module on
    // the first two transgression degrees tensored with the quotient series.
    let split = d_of("spin7:split", 20);
    let versal = d_of("spin7:versal", 20);
    let law = series_eval(
        &SeriesExpr::Tensor(vec![
            SeriesExpr::FreeModule(vec![2, 3]),
            SeriesExpr::regseq_unit_weights(3, vec![2, 3, 4]),
        ]),
        20,
    )
    .unwrap();
    for d in 1..=20usize {
        assert_eq!(
            split[d - 1] as i64 - versal[d - 1] as i64,
            law[d],
            "difference law fails at degree {d}"
        );
    }
}

#[test]
fn split_minus_versal_law_so_odd() {
    for l in 2..=4u32 {
        let split = d_of(&format!("so_odd:{l}:split"), 14);
        let versal = d_of(&format!("so_odd:{l}:versal"), 14);
        let degrees: Vec<u32> = (1..=l).collect();
        let law = series_eval(
            &SeriesExpr::Tensor(vec![
                SeriesExpr::ExteriorPlus(degrees.clone()),
                SeriesExpr::regseq_unit_weights(l as usize, degrees),
            ]),
            14,
        )
        .unwrap();
        for d in 1..=14usize {
            assert_eq!(
                split[d - 1] as i64 - versal[d - 1] as i64,
                law[d],
                "rank {l}: difference law fails at degree {d}"
            );
        }
    }
}

#[test]
fn nonmembership_confirmed_by_slice_rank_oracle() {
    // c1*c2 does not lie in (c1^2, c1^3, c2^3): the degree-3 slice rank
    // grows when it is adjoined.  This is the class that survives into the
    // projective-unitary difference module.
    let ctx = RingContext::flag(3, 2);
    let gens = ["c1^2", "c1^3", "c2^3"];
    let monos = monomials_of_degree(&ctx, 3);
    let index: std::collections::HashMap<_, _> = monos
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    let mut rows = Vec::new();
    for g in gens {
        let g = parse_polynomial(&ctx, g).unwrap();
        let gd = g.homogeneous_degree().unwrap();
        if gd > 3 {
            continue;
        }
        for m in monomials_of_degree(&ctx, 3 - gd) {
            let prod = g.mul_term(&m, dchow::algebra::FieldElement::one(3));
            rows.push(prod.coeff_vector(&index, monos.len()));
        }
    }
    let base_rank = linalg::rank(3, &rows, monos.len());
    let f = parse_polynomial(&ctx, "c1*c2").unwrap();
    rows.push(f.coeff_vector(&index, monos.len()));
    let extended_rank = linalg::rank(3, &rows, monos.len());
    assert_eq!(base_rank, 2);
    assert_eq!(extended_rank, 3, "c1*c2 must be independent of the slice");
    // And the Groebner route agrees.
    let ideal = IdealHandle::new(
        &ctx,
        gens.iter()
            .map(|s| (s.to_string(), parse_polynomial(&ctx, s).unwrap()))
            .collect(),
    )
    .unwrap();
    assert!(!ideal.contains(&f));
}

#[test]
fn squared_transgression_sum_identity() {
    // p1^2 + pbar2 = p2 on four variables mod 3 (the degree-1 class squared,
    // read through the Pontryagin dictionary).
    let ctx = RingContext::flag(3, 4);
    let p1 = parse_polynomial(&ctx, "p1").unwrap();
    let pbar2 = parse_polynomial(&ctx, "pbar2").unwrap();
    let p2 = parse_polynomial(&ctx, "p2").unwrap();
    assert_eq!(&p1.pow(2) + &pbar2, p2);
}

#[test]
fn every_builtin_case_satisfies_the_casespec_invariants() {
    for id in dchow::catalog::list_cases() {
        if id.contains('<') {
            continue;
        }
        let case = build_case(&id, None).unwrap();
        validate_case(&case).unwrap_or_else(|e| panic!("case {id}: {e}"));
    }
}

#[test]
fn spin_stable_clamps_to_its_truncation_cap() {
    let case = build_case("spin_stable:6:12", None).unwrap();
    let report = verify_case(&case, 24, Method::Both).unwrap();
    assert_eq!(report.max_degree, 12);
    assert!(report
        .notes
        .iter()
        .any(|n| n.contains("clamped to the case truncation cap")));
    assert!(report.passed());
}

#[test]
fn e_upper_emits_bound_rows_only() {
    let case = build_case("e_upper:9:12", None).unwrap();
    let report = verify_case(&case, 20, Method::Both).unwrap();
    assert!(report.passed());
    assert!(report.rows.iter().all(|r| r.d_value == 0 && r.claimed.is_some()));
    // The polynomial generator of degree 9 contributes from degree 9 on.
    assert!(report.rows[8].claimed.unwrap() >= 1);
    assert!(report.rows[3].claimed.unwrap() > 0, "the rank-4 bound enters at degree 4");
}

#[test]
fn spin9_reports_both_readings() {
    let case = build_case("spin9", None).unwrap();
    let report = verify_case(&case, 12, Method::Both).unwrap();
    assert!(report
        .notes
        .iter()
        .any(|n| n.contains("second reading")));
}

#[test]
fn f4_reports_carry_the_reflection_note() {
    for id in ["f4_top", "f4_chow:lambda0", "f4_chow:lambda1"] {
        let case = build_case(id, None).unwrap();
        let report = verify_case(&case, 10, Method::Both).unwrap();
        assert!(
            report.notes.iter().any(|n| n.contains("half-sum")),
            "{id} must flag the reflection reading"
        );
    }
}

#[test]
fn method_disagreement_is_a_hard_failure_shape() {
    // Sanity-check the error variant plumbing: the two methods agree on the
    // catalog, so simulate a disagreement through the error type directly.
    let e = dchow::error::Error::MethodDisagreement {
        degree: 5,
        staircase: 7,
        linalg: 8,
    };
    let msg = format!("{e}");
    assert!(msg.contains("degree 5"));
    assert!(msg.contains('7') && msg.contains('8'));
}
