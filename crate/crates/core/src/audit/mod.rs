//! Named identities swept over parameter grids, with exact or toleranced
//! comparison and JSON/CSV/markdown reports.

pub mod oracles;
mod registry;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{domain, Error, Result};
use crate::exactnum::ExactRational;

pub use registry::{registry, MANIFEST};

pub const SUITES: [&str; 6] = ["core", "harmonic", "series", "special", "msums", "fourier"];

/// Suites whose failures are recorded but never counted against a run.
pub const REPORT_ONLY_SUITES: [&str; 1] = ["msums"];

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Mode {
    Exact,
    Numeric(f64),
}

/// A single grid coordinate.
#[derive(Debug, Clone, PartialEq)]
pub enum Param {
    Int(i64),
    Real(f64),
    Text(String),
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Int(v) => write!(f, "{v}"),
            Param::Real(v) => write!(f, "{v}"),
            Param::Text(v) => f.write_str(v),
        }
    }
}

impl Serialize for Param {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Param::Int(v) => s.serialize_i64(*v),
            Param::Real(v) => s.serialize_f64(*v),
            Param::Text(v) => s.serialize_str(v),
        }
    }
}

impl From<i64> for Param {
    fn from(v: i64) -> Self {
        Param::Int(v)
    }
}

impl From<f64> for Param {
    fn from(v: f64) -> Self {
        Param::Real(v)
    }
}

impl From<&str> for Param {
    fn from(v: &str) -> Self {
        Param::Text(v.to_string())
    }
}

impl FromStr for Param {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Ok(v) = s.parse::<i64>() {
            return Ok(Param::Int(v));
        }
        if let Ok(v) = s.parse::<f64>() {
            return Ok(Param::Real(v));
        }
        if s.is_empty() {
            return Err(Error::Parse { input: s.to_string(), what: "grid value" });
        }
        Ok(Param::Text(s.to_string()))
    }
}

/// One grid point, keyed by parameter name.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Params(BTreeMap<String, Param>);

impl Params {
    pub fn get(&self, name: &str) -> Option<&Param> {
        self.0.get(name)
    }

    fn int(&self, name: &str) -> Result<i64> {
        match self.get(name) {
            Some(Param::Int(v)) => Ok(*v),
            Some(Param::Real(v)) if v.fract() == 0.0 => Ok(*v as i64),
            _ => Err(domain(format!("grid parameter {name} must be an integer"))),
        }
    }

    fn uint(&self, name: &str) -> Result<usize> {
        let v = self.int(name)?;
        usize::try_from(v).map_err(|_| domain(format!("grid parameter {name} must be >= 0, got {v}")))
    }

    fn real(&self, name: &str) -> Result<f64> {
        match self.get(name) {
            Some(Param::Int(v)) => Ok(*v as f64),
            Some(Param::Real(v)) => Ok(*v),
            _ => Err(domain(format!("grid parameter {name} must be a number"))),
        }
    }

    fn text(&self, name: &str) -> Result<&str> {
        match self.get(name) {
            Some(Param::Text(v)) => Ok(v),
            _ => Err(domain(format!("grid parameter {name} must be a name"))),
        }
    }
}

impl fmt::Display for Params {
    /// `k=3;j=2`, in key order; never contains a comma.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// Replacement axis values, e.g. `n -> [0, 1, 2]`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides(BTreeMap<String, Vec<Param>>);

impl Overrides {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, name: &str, values: Vec<Param>) {
        self.0.insert(name.to_string(), values);
    }

    /// Parses `name=3`, `name=0..5` (inclusive) or `name=0.25,0.5`.
    pub fn parse_assignment(&mut self, s: &str) -> Result<()> {
        let bad = || Error::Parse { input: s.to_string(), what: "override name=values" };
        let (name, rhs) = s.split_once('=').ok_or_else(bad)?;
        let name = name.trim();
        if name.is_empty() {
            return Err(bad());
        }
        let values = if let Some((lo, hi)) = rhs.split_once("..") {
            let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
            let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
            (lo..=hi).map(Param::Int).collect()
        } else {
            rhs.split(',').map(str::parse).collect::<Result<Vec<Param>>>()?
        };
        self.set(name, values);
        Ok(())
    }
}

/// Cartesian grid builder; overrides replace axes of the same name.
struct Grid<'a> {
    overrides: &'a Overrides,
    points: Vec<Params>,
}

impl<'a> Grid<'a> {
    fn new(overrides: &'a Overrides) -> Self {
        Self { overrides, points: vec![Params::default()] }
    }

    fn axis<P: Into<Param>>(mut self, name: &str, values: impl IntoIterator<Item = P>) -> Self {
        let values: Vec<Param> = match self.overrides.0.get(name) {
            Some(v) => v.clone(),
            None => values.into_iter().map(Into::into).collect(),
        };
        self.points = self
            .points
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |v| {
                    let mut q = p.clone();
                    q.0.insert(name.to_string(), v.clone());
                    q
                })
            })
            .collect();
        self
    }

    fn filter(mut self, keep: impl Fn(&Params) -> bool) -> Self {
        self.points.retain(|p| keep(p));
        self
    }

    fn build(self) -> Vec<Params> {
        self.points
    }
}

/// The two evaluated sides of an identity at one grid point.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Exact(ExactRational, ExactRational),
    Numeric(f64, f64),
}

pub type Evaluator = fn(&Params) -> Result<Outcome>;

pub struct IdentitySpec {
    pub id: &'static str,
    pub suite: &'static str,
    pub mode: Mode,
    /// Printed forms kept for the record; never count as failures.
    pub audit_only: bool,
    pub grid: fn(&Overrides) -> Vec<Params>,
    pub eval: Evaluator,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    ExactPass,
    NumericPass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::ExactPass => "exact_pass",
            Status::NumericPass => "numeric_pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ResidualValue {
    Exact(ExactRational),
    Numeric(f64),
    Error(String),
}

impl Serialize for ResidualValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ResidualValue::Exact(q) => s.collect_str(q),
            ResidualValue::Numeric(x) => s.serialize_f64(*x),
            ResidualValue::Error(_) => s.serialize_str("error"),
        }
    }
}

impl fmt::Display for ResidualValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResidualValue::Exact(q) => write!(f, "{q}"),
            ResidualValue::Numeric(x) => write!(f, "{x:e}"),
            ResidualValue::Error(_) => f.write_str("error"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub params: Params,
    pub status: Status,
    pub residual: ResidualValue,
    pub witness: Option<[String; 2]>,
    #[serde(skip)]
    pub suite: &'static str,
    #[serde(skip)]
    pub audit_only: bool,
}

impl IdentityReport {
    /// Whether a failure here should affect an exit status.
    pub fn gating(&self) -> bool {
        !self.audit_only && !REPORT_ONLY_SUITES.contains(&self.suite)
    }
}

fn judge(spec: &IdentitySpec, params: Params) -> IdentityReport {
    let (status, residual, witness) = match (spec.eval)(&params) {
        Ok(Outcome::Exact(lhs, rhs)) => {
            let r = &lhs - &rhs;
            if r.is_zero() {
                (Status::ExactPass, ResidualValue::Exact(r), None)
            } else {
                (Status::Fail, ResidualValue::Exact(r), Some([lhs.to_string(), rhs.to_string()]))
            }
        }
        Ok(Outcome::Numeric(lhs, rhs)) => {
            let r = (lhs - rhs).abs();
            let tol = match spec.mode {
                Mode::Numeric(t) => t,
                Mode::Exact => 0.0,
            };
            if r <= tol {
                (Status::NumericPass, ResidualValue::Numeric(r), None)
            } else {
                (Status::Fail, ResidualValue::Numeric(r), Some([format!("{lhs:e}"), format!("{rhs:e}")]))
            }
        }
        Err(e) => {
            let msg = e.to_string();
            (Status::Fail, ResidualValue::Error(msg.clone()), Some([msg, String::new()]))
        }
    };
    IdentityReport {
        id: spec.id.to_string(),
        params,
        status,
        residual,
        witness,
        suite: spec.suite,
        audit_only: spec.audit_only,
    }
}

fn check_suite(name: &str) -> Result<()> {
    if SUITES.contains(&name) {
        Ok(())
    } else {
        Err(Error::UnknownSuite(name.to_string()))
    }
}

fn run_in_pool(name: &str, overrides: &Overrides) -> Vec<IdentityReport> {
    run_specs(registry().into_iter().filter(|s| s.suite == name).collect(), overrides)
}

fn run_specs(specs: Vec<IdentitySpec>, overrides: &Overrides) -> Vec<IdentityReport> {
    let jobs: Vec<(&IdentitySpec, Params)> = specs
        .iter()
        .flat_map(|s| (s.grid)(overrides).into_iter().map(move |p| (s, p)))
        .collect();
    let mut reports: Vec<IdentityReport> = jobs.into_par_iter().map(|(s, p)| judge(s, p)).collect();
    sort_reports(&mut reports);
    reports
}

/// Stable sort by id; within an id the grid order is kept.
fn sort_reports(reports: &mut [IdentityReport]) {
    reports.sort_by(|a, b| a.id.cmp(&b.id));
}

/// Evaluates every identity of a suite over its grid on the global thread pool.
pub fn run_suite(name: &str, overrides: &Overrides) -> Result<Vec<IdentityReport>> {
    check_suite(name)?;
    Ok(run_in_pool(name, overrides))
}

/// Same as [`run_suite`] on a dedicated pool of `threads` workers.
pub fn run_suite_with_threads(
    name: &str,
    overrides: &Overrides,
    threads: usize,
) -> Result<Vec<IdentityReport>> {
    check_suite(name)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| domain(format!("thread pool: {e}")))?;
    Ok(pool.install(|| run_in_pool(name, overrides)))
}

/// Evaluates the named identities, whatever suite they belong to.
pub fn run_identities(ids: &[&str], overrides: &Overrides) -> Result<Vec<IdentityReport>> {
    let specs: Vec<IdentitySpec> = registry().into_iter().filter(|s| ids.contains(&s.id)).collect();
    if let Some(missing) = ids.iter().find(|id| !specs.iter().any(|s| s.id == **id)) {
        return Err(domain(format!("no identity named {missing}")));
    }
    Ok(run_specs(specs, overrides))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Markdown,
}

pub fn emit_report(reports: &[IdentityReport], format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => serde_json::to_string_pretty(reports).expect("reports serialize"),
        ReportFormat::Csv => {
            let mut out = String::from("id,params,status,residual\n");
            for r in reports {
                out.push_str(&format!("{},{},{},{}\n", r.id, r.params, r.status, r.residual));
            }
            out
        }
        ReportFormat::Markdown => {
            let mut out = String::from("| id | params | status | residual |\n|---|---|---|---|\n");
            for r in reports {
                out.push_str(&format!("| {} | {} | {} | {} |\n", r.id, r.params, r.status, r.residual));
            }
            out
        }
    }
}

/// Gating failures in a report list.
pub fn failures(reports: &[IdentityReport]) -> usize {
    reports.iter().filter(|r| r.gating() && r.status == Status::Fail).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite("nosuch", &Overrides::new()), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn empty_and_single_reports() {
        assert_eq!(emit_report(&[], ReportFormat::Json), "[]");
        let spec = IdentitySpec {
            id: "t.zero",
            suite: "core",
            mode: Mode::Exact,
            audit_only: false,
            grid: |_| vec![Params::default()],
            eval: |_| Ok(Outcome::Exact(ExactRational::one(), ExactRational::one())),
        };
        let r = judge(&spec, Params::default());
        assert_eq!(r.status, Status::ExactPass);
        assert_eq!(emit_report(&[r], ReportFormat::Csv), "id,params,status,residual\nt.zero,,exact_pass,0\n");
    }

    #[test]
    fn failures_carry_witness() {
        let spec = IdentitySpec {
            id: "t.off",
            suite: "core",
            mode: Mode::Numeric(1e-3),
            audit_only: false,
            grid: |_| vec![Params::default()],
            eval: |_| Ok(Outcome::Numeric(1.0, 1.1)),
        };
        let r = judge(&spec, Params::default());
        assert_eq!(r.status, Status::Fail);
        assert!(r.witness.is_some());
        assert_eq!(failures(&[r]), 1);
    }

    #[test]
    fn overrides_replace_axes() {
        let mut ov = Overrides::new();
        ov.parse_assignment("n=2..4").unwrap();
        ov.parse_assignment("x=0.5,2").unwrap();
        let g = Grid::new(&ov).axis("n", 0..=20i64).axis("x", [1.0]).axis("k", [1i64]).build();
        assert_eq!(g.len(), 6);
        assert_eq!(g[0].to_string(), "k=1;n=2;x=0.5");
        assert!(ov.parse_assignment("novalue").is_err());
    }
}
