//! Verification cases and the JSON report document emitted by the CLI.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;

/// One verified identity instance: both sides, errors, and the verdict.
/// `pass` is relative below tolerance when |rhs| > 1, absolute otherwise.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationCase {
    pub id: String,
    pub params: String,
    pub lhs: [f64; 2],
    pub rhs: [f64; 2],
    pub abs_err: f64,
    pub rel_err: f64,
    pub tol: f64,
    pub pass: bool,
    pub error: Option<String>,
}

impl VerificationCase {
    pub fn from_pair(id: &str, params: String, lhs: Complex64, rhs: Complex64, tol: f64) -> Self {
        let abs_err = (lhs - rhs).norm();
        let scale = rhs.norm();
        let rel_err = if scale > 0.0 {
            abs_err / scale
        } else {
            abs_err
        };
        let pass = if scale > 1.0 {
            rel_err < tol
        } else {
            abs_err < tol
        };
        Self {
            id: id.to_string(),
            params,
            lhs: [lhs.re, lhs.im],
            rhs: [rhs.re, rhs.im],
            abs_err,
            rel_err,
            tol,
            pass,
            error: None,
        }
    }

    /// Exact-track case: passes iff the two expansions agree termwise.
    pub fn from_exact(id: &str, params: String, equal: bool) -> Self {
        Self {
            id: id.to_string(),
            params,
            lhs: [0.0, 0.0],
            rhs: [0.0, 0.0],
            abs_err: if equal { 0.0 } else { 1.0 },
            rel_err: if equal { 0.0 } else { 1.0 },
            tol: 0.0,
            pass: equal,
            error: None,
        }
    }

    /// A case that is supposed to produce a specific error class.
    pub fn from_expected_error(id: &str, params: String, pass: bool, detail: String) -> Self {
        Self {
            id: id.to_string(),
            params,
            lhs: [0.0, 0.0],
            rhs: [0.0, 0.0],
            abs_err: if pass { 0.0 } else { 1.0 },
            rel_err: if pass { 0.0 } else { 1.0 },
            tol: 0.0,
            pass,
            error: Some(detail),
        }
    }

    /// A case whose evaluation failed outright.
    pub fn from_error(id: &str, params: String, tol: f64, detail: String) -> Self {
        Self {
            id: id.to_string(),
            params,
            lhs: [f64::NAN, f64::NAN],
            rhs: [f64::NAN, f64::NAN],
            abs_err: f64::NAN,
            rel_err: f64::NAN,
            tol,
            pass: false,
            error: Some(detail),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// The versioned report: suite metadata, tolerance table, sorted cases, and
/// tallied summary. Serialization is byte-stable for fixed inputs.
#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub schema: u32,
    pub suite: String,
    pub version: String,
    pub seed: u64,
    pub tolerances: BTreeMap<String, f64>,
    pub cases: Vec<VerificationCase>,
    pub summary: Summary,
}

impl ReportDocument {
    pub fn new(
        suite: &str,
        seed: u64,
        tolerances: BTreeMap<String, f64>,
        mut cases: Vec<VerificationCase>,
    ) -> Self {
        cases.sort_by(|a, b| a.id.cmp(&b.id).then_with(|| a.params.cmp(&b.params)));
        let passed = cases.iter().filter(|c| c.pass).count();
        let summary = Summary {
            total: cases.len(),
            passed,
            failed: cases.len() - passed,
        };
        Self {
            schema: 1,
            suite: suite.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            tolerances,
            cases,
            summary,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_rule_switches_between_relative_and_absolute() {
        // |rhs| > 1: relative
        let big = VerificationCase::from_pair(
            "x",
            String::new(),
            Complex64::new(1000.0, 0.0),
            Complex64::new(1000.0 + 1e-7, 0.0),
            1e-9,
        );
        assert!(big.pass, "relative error 1e-10 beats 1e-9");
        // |rhs| <= 1: absolute
        let small = VerificationCase::from_pair(
            "x",
            String::new(),
            Complex64::new(0.0, 0.0),
            Complex64::new(1e-8, 0.0),
            1e-9,
        );
        assert!(!small.pass, "absolute error 1e-8 fails 1e-9");
    }

    #[test]
    fn report_sorts_and_tallies() {
        let cases = vec![
            VerificationCase::from_exact("b", "1".into(), true),
            VerificationCase::from_exact("a", "2".into(), false),
            VerificationCase::from_exact("a", "1".into(), true),
        ];
        let doc = ReportDocument::new("test", 7, BTreeMap::new(), cases);
        assert_eq!(doc.summary.total, 3);
        assert_eq!(doc.summary.failed, 1);
        assert_eq!(doc.cases[0].id, "a");
        assert_eq!(doc.cases[0].params, "1");
        assert!(!doc.all_pass());
        // byte-stable
        assert_eq!(doc.to_json_string(), doc.to_json_string());
    }
}
