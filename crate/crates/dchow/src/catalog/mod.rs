//! The verification catalog and pipeline: every case's ring, kernel and
//! image ideals, claimed series and scenarios, the report machinery, the
//! companion suites, and the JSON case-file format.

mod casefile;
mod cases;
mod suites;
mod verify;

pub use casefile::{
    case_file_json, case_from_file, case_to_file, load_case_file, validate_case, BoundFile,
    CaseFile, NamedPolyFile,
};
pub use cases::{build_case, e_upper_series, f4_dprime_series, list_cases, BoundCheck, CaseSpec};
pub use suites::{dickson_suite, invariants_suite, steenrod_suite, CheckLine};
pub use verify::{emit_report, verify_case, DegreeRow, ReportFormat, Suites, VerificationReport};
