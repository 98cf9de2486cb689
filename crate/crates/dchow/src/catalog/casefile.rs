//! Structured case files: the JSON document format mirroring `CaseSpec`,
//! with polynomial strings in the algebra grammar and series expressions in
//! the series grammar.  The built-in catalog round-trips through this format
//! and golden copies ship in the repository's `cases/` directory.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::cases::{BoundCheck, CaseSpec};
use crate::algebra::{parse_polynomial, RingContext};
use crate::error::{Error, Result};
use crate::hilbert::{series_eval, SeriesExpr};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct NamedPolyFile {
    pub name: String,
    pub poly: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum BoundFile {
    Dprime,
    SeriesOnly { extra_degrees: Vec<u32> },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CaseFile {
    pub id: String,
    #[serde(default)]
    pub scenario: Option<String>,
    pub prime: u32,
    pub variables: usize,
    #[serde(default)]
    pub ker_generators: Vec<NamedPolyFile>,
    #[serde(default)]
    pub im_generators: Vec<NamedPolyFile>,
    #[serde(default)]
    pub b_degrees: Vec<u32>,
    #[serde(default)]
    pub claimed_d: Option<SeriesExpr>,
    #[serde(default)]
    pub claimed_flag: Option<SeriesExpr>,
    #[serde(default)]
    pub motive_series: Option<SeriesExpr>,
    #[serde(default)]
    pub alt_claimed_d: Option<SeriesExpr>,
    #[serde(default)]
    pub bound: Option<BoundFile>,
    #[serde(default)]
    pub degree_cap: Option<u32>,
    #[serde(default)]
    pub provenance: Vec<String>,
    #[serde(default)]
    pub notes: Vec<String>,
}

/// Materialize a case file into a runnable `CaseSpec`, validating the
/// grading and the flag/motive consistency invariant.
pub fn case_from_file(file: &CaseFile) -> Result<CaseSpec> {
    if file.variables == 0 || file.variables > 9 {
        return Err(Error::Catalog(
            "case files support 1..=9 variables (t1..t9)".into(),
        ));
    }
    let ctx = RingContext::flag(file.prime, file.variables);
    let parse_gens = |gens: &[NamedPolyFile]| -> Result<Vec<_>> {
        gens.iter()
            .map(|g| Ok((g.name.clone(), parse_polynomial(&ctx, &g.poly)?)))
            .collect()
    };
    let spec = CaseSpec {
        id: file.id.clone(),
        scenario: file.scenario.clone(),
        ker_generators: parse_gens(&file.ker_generators)?,
        im_generators: parse_gens(&file.im_generators)?,
        b_degrees: file.b_degrees.clone(),
        claimed_d: file.claimed_d.clone(),
        claimed_flag: file.claimed_flag.clone(),
        motive_series: file.motive_series.clone(),
        alt_claimed_d: file.alt_claimed_d.clone(),
        bound: file.bound.as_ref().map(|b| match b {
            BoundFile::Dprime => BoundCheck::DPrime,
            BoundFile::SeriesOnly { extra_degrees } => BoundCheck::SeriesOnly {
                extra_degrees: extra_degrees.clone(),
            },
        }),
        degree_cap: file.degree_cap,
        provenance: file.provenance.clone(),
        notes: file.notes.clone(),
        ctx,
    };
    validate_case(&spec)?;
    Ok(spec)
}

/// Case invariants checked on entry: homogeneous nonzero generators and, when
/// both a flag series and a motive series are present, their consistency
/// `claimed_flag = motive (x) regseq(b_degrees)` as series.
pub fn validate_case(spec: &CaseSpec) -> Result<()> {
    for (name, g) in spec.ker_generators.iter().chain(&spec.im_generators) {
        if g.is_zero() {
            return Err(Error::Catalog(format!("generator `{name}` is zero")));
        }
        if !g.is_homogeneous() {
            return Err(Error::Grading(format!(
                "generator `{name}` is not homogeneous"
            )));
        }
    }
    if let (Some(flag), Some(motive)) = (&spec.claimed_flag, &spec.motive_series) {
        let tensor = SeriesExpr::Tensor(vec![
            motive.clone(),
            SeriesExpr::regseq_unit_weights(spec.ctx.nvars(), spec.b_degrees.clone()),
        ]);
        let n = 24;
        if series_eval(flag, n)? != series_eval(&tensor, n)? {
            return Err(Error::Catalog(format!(
                "case {}: claimed_flag does not equal motive_series (x) regseq(b_degrees)",
                spec.full_id()
            )));
        }
    }
    Ok(())
}

/// Export a case to the file format.  Generator strings reuse the generator
/// name when it parses back to the same polynomial (the built-in catalog
/// names generators by their defining expressions), otherwise the expanded
/// canonical form.
pub fn case_to_file(spec: &CaseSpec) -> CaseFile {
    let render = |gens: &[(String, crate::algebra::Polynomial)]| {
        gens.iter()
            .map(|(name, poly)| {
                let by_name = parse_polynomial(&spec.ctx, name).ok();
                let poly_str = if by_name.as_ref() == Some(poly) {
                    name.clone()
                } else {
                    poly.to_string()
                };
                NamedPolyFile {
                    name: name.clone(),
                    poly: poly_str,
                }
            })
            .collect()
    };
    CaseFile {
        id: spec.id.clone(),
        scenario: spec.scenario.clone(),
        prime: spec.ctx.prime(),
        variables: spec.ctx.nvars(),
        ker_generators: render(&spec.ker_generators),
        im_generators: render(&spec.im_generators),
        b_degrees: spec.b_degrees.clone(),
        claimed_d: spec.claimed_d.clone(),
        claimed_flag: spec.claimed_flag.clone(),
        motive_series: spec.motive_series.clone(),
        alt_claimed_d: spec.alt_claimed_d.clone(),
        bound: spec.bound.as_ref().map(|b| match b {
            BoundCheck::DPrime => BoundFile::Dprime,
            BoundCheck::SeriesOnly { extra_degrees } => BoundFile::SeriesOnly {
                extra_degrees: extra_degrees.clone(),
            },
        }),
        degree_cap: spec.degree_cap,
        provenance: spec.provenance.clone(),
        notes: spec.notes.clone(),
    }
}

pub fn load_case_file(path: &Path) -> Result<CaseSpec> {
    let text = std::fs::read_to_string(path)?;
    let file: CaseFile = serde_json::from_str(&text)?;
    case_from_file(&file)
}

pub fn case_file_json(file: &CaseFile) -> String {
    let mut s = serde_json::to_string_pretty(file).expect("case serialization cannot fail");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_case;

    #[test]
    fn builtin_cases_round_trip_through_the_file_format() {
        for id in ["pu3", "spin7:versal", "f4_chow:lambda1", "spin_stable:6:12"] {
            let case = build_case(id, None).unwrap();
            let file = case_to_file(&case);
            let json = case_file_json(&file);
            let parsed: CaseFile = serde_json::from_str(&json).unwrap();
            assert_eq!(parsed, file);
            let rebuilt = case_from_file(&parsed).unwrap();
            assert_eq!(rebuilt.ker_generators, case.ker_generators);
            assert_eq!(rebuilt.im_generators, case.im_generators);
            assert_eq!(rebuilt.claimed_d, case.claimed_d);
            assert_eq!(rebuilt.b_degrees, case.b_degrees);
        }
    }

    #[test]
    fn flag_motive_consistency_is_enforced() {
        let case = build_case("pu3", None).unwrap();
        let mut file = case_to_file(&case);
        file.claimed_flag = Some(crate::hilbert::parse_series("freemod(0)").unwrap());
        assert!(case_from_file(&file).is_err());
    }

    #[test]
    fn inhomogeneous_generators_are_rejected() {
        let case = build_case("pu3", None).unwrap();
        let mut file = case_to_file(&case);
        file.ker_generators[0].poly = "t1 + 1".into();
        assert!(case_from_file(&file).is_err());
    }
}
