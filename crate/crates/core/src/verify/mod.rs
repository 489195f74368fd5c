//! Identity catalog and positivity harness.
//!
//! Every identity is a list of [`Check`]s. A check either compares two
//! truncated series slice by slice (optionally graded by length), asserts
//! Schur positivity of one symmetric function, or records a scalar predicate.
//! [`verify`] evaluates the checks in order and reports the first failing
//! slice.

mod catalog;
mod scan;

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie_modules::{parse_prime_set, prime_list, IntSet, PsiSpec};
use crate::partition::{Partition, PrimeSet};
use crate::plethysm::{Graded, Series};
use crate::symfunc::{is_schur_positive, Coefficient, SymFunc};

pub use catalog::{catalog, criterion_sets, find_identity, IdentityDef, ParamSpec};
pub use scan::{
    hook_content_check, lifting_check, lifting_exceptions, scan_positivity, HookReport, NVerdict,
    PositivityReport, ScanFamily, DEFAULT_BUDGET,
};

/// Cap on the number of differing coefficients listed in a mismatch.
const MAX_DIFFS: usize = 24;

/// Optional parameters shared by all identities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub s: Option<PrimeSet>,
    pub t: Option<IntSet>,
    pub q: Option<u64>,
    pub k: Option<u64>,
    pub r: Option<u64>,
    pub n: Option<usize>,
    pub n_max: Option<usize>,
    pub psi: Option<PsiSpec>,
}

impl Params {
    /// Names of the parameters that are set, in schema order.
    pub fn names(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let flags = [
            ("S", self.s.is_some()),
            ("T", self.t.is_some()),
            ("q", self.q.is_some()),
            ("k", self.k.is_some()),
            ("r", self.r.is_some()),
            ("n", self.n.is_some()),
            ("n_max", self.n_max.is_some()),
            ("psi", self.psi.is_some()),
        ];
        for (name, set) in flags {
            if set {
                out.push(name);
            }
        }
        out
    }

    /// Sets one parameter from its textual form.
    pub fn set(&mut self, name: &str, value: &str) -> Result<()> {
        let number = |v: &str| {
            v.trim()
                .parse::<u64>()
                .map_err(|_| Error::InvalidParams(format!("{name} must be an integer, got '{v}'")))
        };
        match name {
            "S" => self.s = Some(parse_prime_set(value)?),
            "T" => self.t = Some(value.parse()?),
            "q" => self.q = Some(number(value)?),
            "k" => self.k = Some(number(value)?),
            "r" => self.r = Some(number(value)?),
            "n" => self.n = Some(number(value)? as usize),
            "n_max" => self.n_max = Some(number(value)? as usize),
            "psi" => self.psi = Some(value.parse()?),
            _ => return Err(Error::InvalidParams(format!("unknown parameter '{name}'"))),
        }
        Ok(())
    }

    /// Textual values of the set parameters, keyed by name.
    pub fn to_map(&self) -> BTreeMap<String, String> {
        let mut out = BTreeMap::new();
        if let Some(s) = &self.s {
            out.insert("S".into(), prime_list(s));
        }
        if let Some(t) = &self.t {
            out.insert("T".into(), t.to_string());
        }
        for (name, v) in [("q", self.q), ("k", self.k), ("r", self.r)] {
            if let Some(v) = v {
                out.insert(name.into(), v.to_string());
            }
        }
        for (name, v) in [("n", self.n), ("n_max", self.n_max)] {
            if let Some(v) = v {
                out.insert(name.into(), v.to_string());
            }
        }
        if let Some(psi) = &self.psi {
            out.insert("psi".into(), psi.to_string());
        }
        out
    }

    fn missing(name: &str) -> Error {
        Error::InvalidParams(format!("parameter {name} is required"))
    }

    pub fn prime_set(&self) -> Result<&PrimeSet> {
        self.s.as_ref().ok_or_else(|| Self::missing("S"))
    }

    pub fn int_set(&self) -> Result<&IntSet> {
        self.t.as_ref().ok_or_else(|| Self::missing("T"))
    }

    pub fn q(&self) -> Result<u64> {
        self.q.ok_or_else(|| Self::missing("q"))
    }

    pub fn k(&self) -> Result<u64> {
        self.k.ok_or_else(|| Self::missing("k"))
    }
}

/// One exactly checkable statement.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub kind: CheckKind,
}

#[derive(Clone, Debug)]
pub enum CheckKind {
    /// Two series agree in every degree up to their common truncation.
    Equal { left: Series, right: Series },
    /// Two length-graded series agree in every (degree, length) slice.
    GradedEqual { left: Graded, right: Graded },
    /// A homogeneous symmetric function is Schur positive.
    Positive { f: SymFunc },
    /// A scalar fact at a given degree.
    Holds {
        degree: usize,
        ok: bool,
        detail: String,
    },
    /// Informational positivity data; never fails.
    Inform { f: SymFunc },
}

impl Check {
    pub fn equal(name: impl Into<String>, left: Series, right: Series) -> Self {
        Check {
            name: name.into(),
            kind: CheckKind::Equal { left, right },
        }
    }

    pub fn graded(name: impl Into<String>, left: Graded, right: Graded) -> Self {
        Check {
            name: name.into(),
            kind: CheckKind::GradedEqual { left, right },
        }
    }

    pub fn positive(name: impl Into<String>, f: SymFunc) -> Self {
        Check {
            name: name.into(),
            kind: CheckKind::Positive { f },
        }
    }

    pub fn holds(
        name: impl Into<String>,
        degree: usize,
        ok: bool,
        detail: impl Into<String>,
    ) -> Self {
        Check {
            name: name.into(),
            kind: CheckKind::Holds {
                degree,
                ok,
                detail: detail.into(),
            },
        }
    }

    pub fn inform(name: impl Into<String>, f: SymFunc) -> Self {
        Check {
            name: name.into(),
            kind: CheckKind::Inform { f },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// A coefficient of `p_λ` on which the two sides disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermDiff {
    pub partition: Vec<u32>,
    pub left: String,
    pub right: String,
}

/// The first failing slice of a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub check: String,
    pub degree: usize,
    pub length: Option<usize>,
    pub differences: Vec<TermDiff>,
    pub detail: Option<String>,
}

/// A Schur coefficient, recorded for a negative verdict or informationally.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub check: String,
    pub n: usize,
    pub partition: Vec<u32>,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub id: String,
    pub params: BTreeMap<String, String>,
    #[serde(rename = "N")]
    pub max_degree: usize,
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
    pub witnesses: Vec<Witness>,
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }

    /// One-line summary followed by mismatch details, if any.
    pub fn to_text(&self) -> String {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
        };
        let mut out = format!(
            "{} [{}] N={}: {status}",
            self.id,
            params.join(" "),
            self.max_degree
        );
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!(" ({ms} ms)"));
        }
        out.push('\n');
        if let Some(m) = &self.first_mismatch {
            out.push_str(&format!(
                "  first mismatch in '{}' at degree {}",
                m.check, m.degree
            ));
            if let Some(r) = m.length {
                out.push_str(&format!(", length {r}"));
            }
            out.push('\n');
            if let Some(d) = &m.detail {
                out.push_str(&format!("  {d}\n"));
            }
            for diff in &m.differences {
                out.push_str(&format!(
                    "  p{}: {} vs {}\n",
                    Partition::new(diff.partition.clone()),
                    diff.left,
                    diff.right
                ));
            }
        }
        for w in &self.witnesses {
            out.push_str(&format!(
                "  witness {} n={}: s{} has coefficient {}\n",
                w.check,
                w.n,
                Partition::new(w.partition.clone()),
                w.coefficient
            ));
        }
        out
    }
}

fn term_diffs(left: &SymFunc, right: &SymFunc) -> Vec<TermDiff> {
    let keys: BTreeSet<&Partition> = left.terms().chain(right.terms()).map(|(p, _)| p).collect();
    keys.into_iter()
        .rev()
        .filter_map(|p| {
            let (a, b) = (left.coefficient(p), right.coefficient(p));
            (a != b).then(|| TermDiff {
                partition: p.parts().to_vec(),
                left: a.to_string(),
                right: b.to_string(),
            })
        })
        .take(MAX_DIFFS)
        .collect()
}

/// First degree at which two series differ, with the differing coefficients.
pub fn compare_series(name: &str, left: &Series, right: &Series) -> Option<Mismatch> {
    let d = left.first_difference(right)?;
    Some(Mismatch {
        check: name.to_string(),
        degree: d,
        length: None,
        differences: term_diffs(left.component_ref(d), right.component_ref(d)),
        detail: None,
    })
}

/// First (degree, length) slice at which two graded series differ.
pub fn compare_graded(name: &str, left: &Graded, right: &Graded) -> Option<Mismatch> {
    let lengths: BTreeSet<usize> = left.keys().chain(right.keys()).copied().collect();
    let top = left
        .values()
        .chain(right.values())
        .map(Series::max_degree)
        .min()
        .unwrap_or(0);
    for d in 0..=top {
        for &r in &lengths {
            let a = left
                .get(&r)
                .map(|s| s.component(d))
                .unwrap_or_else(|| SymFunc::zero(d));
            let b = right
                .get(&r)
                .map(|s| s.component(d))
                .unwrap_or_else(|| SymFunc::zero(d));
            if a != b {
                return Some(Mismatch {
                    check: name.to_string(),
                    degree: d,
                    length: Some(r),
                    differences: term_diffs(&a, &b),
                    detail: None,
                });
            }
        }
    }
    None
}

/// Schur coefficients below zero, as witnesses.
pub fn negative_witnesses(name: &str, f: &SymFunc) -> Vec<Witness> {
    is_schur_positive(f)
        .1
        .into_iter()
        .map(|(p, c)| Witness {
            check: name.to_string(),
            n: f.degree(),
            partition: p.parts().to_vec(),
            coefficient: c.to_string(),
        })
        .collect()
}

/// Evaluates checks in order; the first failure becomes the mismatch.
pub fn evaluate(id: &str, params: &Params, max_degree: usize, checks: &[Check]) -> Report {
    let mut first: Option<Mismatch> = None;
    let mut witnesses = Vec::new();
    for check in checks {
        let failure = match &check.kind {
            CheckKind::Equal { left, right } => compare_series(&check.name, left, right),
            CheckKind::GradedEqual { left, right } => compare_graded(&check.name, left, right),
            CheckKind::Positive { f } => {
                let neg = negative_witnesses(&check.name, f);
                let failed = (!neg.is_empty()).then(|| Mismatch {
                    check: check.name.clone(),
                    degree: f.degree(),
                    length: None,
                    differences: Vec::new(),
                    detail: Some("not Schur positive".into()),
                });
                witnesses.extend(neg);
                failed
            }
            CheckKind::Holds { degree, ok, detail } => (!ok).then(|| Mismatch {
                check: check.name.clone(),
                degree: *degree,
                length: None,
                differences: Vec::new(),
                detail: Some(detail.clone()),
            }),
            CheckKind::Inform { f } => {
                witnesses.extend(negative_witnesses(&check.name, f));
                None
            }
        };
        if first.is_none() {
            first = failure;
        }
    }
    Report {
        id: id.to_string(),
        params: params.to_map(),
        max_degree,
        status: if first.is_none() {
            Status::Pass
        } else {
            Status::Fail
        },
        first_mismatch: first,
        witnesses,
        elapsed_ms: None,
    }
}

/// Runs the named identity. Missing parameters take the catalog defaults;
/// parameters outside the identity's schema are rejected.
pub fn verify(id: &str, params: &Params, max_degree: Option<usize>) -> Result<Report> {
    let def = find_identity(id)?;
    let mut resolved = params.clone();
    for name in params.names() {
        if !def.params.iter().any(|p| p.name == name) {
            return Err(Error::InvalidParams(format!(
                "parameter {name} does not apply to '{id}'"
            )));
        }
    }
    for spec in def.params {
        if let Some(default) = spec.default {
            if !params.names().contains(&spec.name) {
                resolved.set(spec.name, default)?;
            }
        }
    }
    let n = max_degree.unwrap_or(def.default_n);
    if n == 0 {
        return Err(Error::InvalidParams("N must be at least 1".into()));
    }
    let start = Instant::now();
    let checks = (def.run)(&resolved, n)?;
    let mut report = evaluate(id, &resolved, n, &checks);
    report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

/// Adds `delta` to the coefficient of `p_λ` in the degree-`d` component.
pub fn perturb(series: &Series, d: usize, lambda: &Partition, delta: &Coefficient) -> Series {
    let mut out = series.clone();
    let mut comp = out.component(d);
    comp.add_term(lambda.clone(), delta.clone());
    out.set(d, comp);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plethysm::{pleth_h, product_series, Factor};
    use crate::symfunc::int;

    fn thrall_sides(n: usize) -> (Series, Series) {
        let lie = Series::from_fn(n, crate::lie_modules::lie);
        (
            pleth_h(&lie).unwrap(),
            product_series(&[Factor::geometric(1)], n).unwrap(),
        )
    }

    #[test]
    fn corrupting_one_coefficient_fails_at_that_degree() {
        let (left, right) = thrall_sides(7);
        assert!(compare_series("thrall", &left, &right).is_none());
        for d in 1..=7 {
            let lambda = Partition::rectangle(1, d);
            let bad = perturb(&right, d, &lambda, &int(1));
            let m = compare_series("thrall", &left, &bad).expect("must fail");
            assert_eq!(m.degree, d);
            assert_eq!(m.differences.len(), 1);
            assert_eq!(m.differences[0].partition, lambda.parts().to_vec());
            let report = evaluate(
                "thrall",
                &Params::default(),
                7,
                &[Check::equal("c", left.clone(), bad)],
            );
            assert_eq!(report.status, Status::Fail);
            assert_eq!(report.first_mismatch.unwrap().degree, d);
        }
    }

    #[test]
    fn graded_mismatch_reports_length() {
        let (left, right) = thrall_sides(5);
        let g1: Graded = [(1, left.clone()), (2, right.clone())]
            .into_iter()
            .collect();
        let bad = perturb(&right, 3, &Partition::from(vec![2, 1]), &int(-1));
        let g2: Graded = [(1, left), (2, bad)].into_iter().collect();
        let m = compare_graded("g", &g1, &g2).unwrap();
        assert_eq!((m.degree, m.length), (3, Some(2)));
        assert!(compare_graded("g", &g1, &g1).is_none());
    }

    #[test]
    fn report_json_shape() {
        let r = verify("thrall", &Params::default(), Some(4)).unwrap();
        let mut r2 = r.clone();
        r2.elapsed_ms = None;
        let json: serde_json::Value = serde_json::from_str(&r2.to_json()).unwrap();
        for key in [
            "id",
            "params",
            "N",
            "status",
            "first_mismatch",
            "witnesses",
            "elapsed_ms",
        ] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
        assert_eq!(json["status"], "pass");
        assert!(json["first_mismatch"].is_null());
    }

    #[test]
    fn params_validation() {
        let mut p = Params::default();
        p.set("k", "3").unwrap();
        assert!(matches!(
            verify("thrall", &p, Some(3)),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            verify("nope", &Params::default(), None),
            Err(Error::UnknownIdentity(_))
        ));
        assert!(p.set("q", "x").is_err());
        assert!(p.set("zz", "1").is_err());
        p.set("S", "bar:2,3").unwrap();
        assert_eq!(p.to_map()["S"], "bar:2,3");
    }
}
