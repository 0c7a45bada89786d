use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use wfdim_core::classifier::WfReport;
use wfdim_core::corpus::{self, TableRow};
use wfdim_core::verify::SuiteResult;
use wfdim_core::zspace::{ApproxZReport, AssociatedMatrix, ZProblem, ZReport};
use wfdim_core::{FactoredInput, Poly};

use crate::input::{scalar_to_json, JsonField, JsonScalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub text: String,
    /// Ascending coefficients.
    pub coefficients: Vec<JsonScalar>,
}

impl PolyJson {
    pub fn new(p: &Poly) -> Self {
        PolyJson {
            text: p.to_string(),
            coefficients: p.coeffs().iter().map(scalar_to_json).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputEcho {
    pub field: JsonField,
    pub roots: Option<Vec<(JsonScalar, usize)>>,
    pub leading: JsonScalar,
    pub polynomial: PolyJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupingJson {
    pub n1: usize,
    pub n2: usize,
    #[serde(rename = "N3")]
    pub n3: usize,
    pub r: i64,
    pub mu: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ApproxJson {
    pub precision_bits: u32,
    pub rank: usize,
    pub dimension: usize,
    pub degenerate: bool,
}

impl From<&ApproxZReport> for ApproxJson {
    fn from(a: &ApproxZReport) -> Self {
        ApproxJson {
            precision_bits: a.precision_bits,
            rank: a.rank,
            dimension: a.dimension,
            degenerate: a.degenerate,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Timings {
    pub total_us: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportEnvelope {
    pub input: InputEcho,
    pub degree: usize,
    pub grouping: Option<GroupingJson>,
    pub dimension: usize,
    pub dim_oracle: usize,
    pub dim_structural: Option<usize>,
    pub dim_theorem: Option<usize>,
    pub case_tag: Option<String>,
    pub degenerate: Option<bool>,
    pub basis: Vec<PolyJson>,
    pub approx: Option<ApproxJson>,
    pub routes: Vec<String>,
    pub route_agreement: bool,
    pub timings: Timings,
}

pub fn echo(field: JsonField, fi: Option<&FactoredInput>, f: &Poly) -> InputEcho {
    InputEcho {
        field,
        roots: fi.map(|fi| fi.roots().iter().map(|(r, m)| (scalar_to_json(r), *m)).collect()),
        leading: scalar_to_json(f.leading().expect("nonzero input")),
        polynomial: PolyJson::new(f),
    }
}

pub fn factored_envelope(
    input: InputEcho,
    r: &WfReport,
    approx: Option<&ApproxZReport>,
    total_us: u64,
) -> ReportEnvelope {
    let g = &r.grouping;
    let agree = r.dim_oracle == r.dim_structural
        && r.dim_theorem.is_none_or(|d| d == r.dim_oracle)
        && approx.is_none_or(|a| a.dimension == r.dim_structural);
    let mut routes = vec!["oracle".to_string(), "structural".to_string()];
    if r.dim_theorem.is_some() {
        routes.push("closed_form".into());
    }
    ReportEnvelope {
        input,
        degree: g.n,
        grouping: Some(GroupingJson {
            n1: g.n1,
            n2: g.n2,
            n3: g.n3,
            r: g.r,
            mu: g.mu,
        }),
        dimension: r.dim_oracle,
        dim_oracle: r.dim_oracle,
        dim_structural: Some(r.dim_structural),
        dim_theorem: r.dim_theorem,
        case_tag: Some(r.case_tag.to_string()),
        degenerate: Some(r.degenerate),
        basis: r.basis.iter().map(PolyJson::new).collect(),
        approx: approx.map(ApproxJson::from),
        routes,
        route_agreement: agree,
        timings: Timings { total_us },
    }
}

pub fn oracle_envelope(input: InputEcho, degree: usize, dim: usize, basis: &[Poly], total_us: u64) -> ReportEnvelope {
    ReportEnvelope {
        input,
        degree,
        grouping: None,
        dimension: dim,
        dim_oracle: dim,
        dim_structural: None,
        dim_theorem: None,
        case_tag: None,
        degenerate: None,
        basis: basis.iter().map(PolyJson::new).collect(),
        approx: None,
        routes: vec!["oracle".into()],
        route_agreement: true,
        timings: Timings { total_us },
    }
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

pub fn envelope_text(e: &ReportEnvelope) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "f = {}", e.input.polynomial.text);
    let _ = writeln!(s, "degree {}", e.degree);
    if let Some(g) = &e.grouping {
        let _ = writeln!(s, "n1 {}  n2 {}  N3 {}  r {}  mu {}", g.n1, g.n2, g.n3, g.r, g.mu);
    }
    let _ = writeln!(s, "dim W(f) = {}", e.dimension);
    let _ = writeln!(
        s,
        "routes: oracle {}, structural {}, closed form {} ({})",
        e.dim_oracle,
        opt(&e.dim_structural),
        opt(&e.dim_theorem),
        opt(&e.case_tag)
    );
    if let Some(d) = e.degenerate {
        let _ = writeln!(s, "degenerate: {d}");
    }
    if let Some(a) = &e.approx {
        let _ = writeln!(s, "approximate check at {} bits: dim {}", a.precision_bits, a.dimension);
    }
    let _ = writeln!(s, "basis:");
    for p in &e.basis {
        let _ = writeln!(s, "  {}", p.text);
    }
    let _ = writeln!(s, "routes agree: {}", e.route_agreement);
    s
}

pub fn envelope_csv(e: &ReportEnvelope) -> String {
    let g = e.grouping.as_ref();
    let field = |x: Option<String>| x.unwrap_or_default();
    format!(
        "degree,n2,N3,r,n1,mu,dim,basis\n{},{},{},{},{},{},{},{}\n",
        e.degree,
        field(g.map(|g| g.n2.to_string())),
        field(g.map(|g| g.n3.to_string())),
        field(g.map(|g| g.r.to_string())),
        field(g.map(|g| g.n1.to_string())),
        field(g.map(|g| g.mu.to_string())),
        e.dimension,
        e.basis.iter().map(|p| p.text.as_str()).collect::<Vec<_>>().join(";"),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableRowJson {
    pub degree: usize,
    pub n2: usize,
    #[serde(rename = "N3")]
    pub n3: usize,
    pub r: i64,
    pub n1: usize,
    pub mu: i64,
    pub dim: usize,
    pub witness: String,
    pub matches_printed: bool,
}

pub fn table_rows(rows: &[TableRow]) -> Vec<TableRowJson> {
    rows.iter()
        .map(|row| {
            let g = &row.report.grouping;
            TableRowJson {
                degree: g.n,
                n2: g.n2,
                n3: g.n3,
                r: g.r,
                n1: g.n1,
                mu: g.mu,
                dim: row.report.dim_oracle,
                witness: corpus::factored_string(&row.witness),
                matches_printed: row.matches_printed(),
            }
        })
        .collect()
}

pub fn table_csv(rows: &[TableRowJson]) -> String {
    let mut s = String::from("degree,n2,N3,r,n1,mu,dim,witness\n");
    for r in rows {
        let _ = writeln!(s, "{},{},{},{},{},{},{},{}", r.degree, r.n2, r.n3, r.r, r.n1, r.mu, r.dim, r.witness);
    }
    s
}

pub fn table_text(rows: &[TableRowJson]) -> String {
    let mut s = format!(
        "{:>6} {:>3} {:>3} {:>3} {:>3} {:>3} {:>4}  witness\n",
        "degree", "n2", "N3", "r", "n1", "mu", "dim"
    );
    for r in rows {
        let _ = writeln!(
            s,
            "{:>6} {:>3} {:>3} {:>3} {:>3} {:>3} {:>4}  {}",
            r.degree, r.n2, r.n3, r.r, r.n1, r.mu, r.dim, r.witness
        );
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteJson {
    pub suite: String,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl From<&SuiteResult> for SuiteJson {
    fn from(r: &SuiteResult) -> Self {
        SuiteJson {
            suite: r.name.clone(),
            passed: r.passed,
            failed: r.failed,
            failures: r.failures.clone(),
        }
    }
}

pub fn suites_text(results: &[SuiteJson]) -> String {
    let mut s = String::new();
    for r in results {
        let status = if r.failed == 0 { "ok" } else { "FAILED" };
        let _ = writeln!(s, "{:<14} passed {:>5}  failed {:>3}  {status}", r.suite, r.passed, r.failed);
        for f in &r.failures {
            let _ = writeln!(s, "    {f}");
        }
    }
    s
}

pub fn suites_csv(results: &[SuiteJson]) -> String {
    let mut s = String::from("suite,passed,failed\n");
    for r in results {
        let _ = writeln!(s, "{},{},{}", r.suite, r.passed, r.failed);
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZReportJson {
    pub field: JsonField,
    pub eta: Vec<JsonScalar>,
    pub omega: Vec<JsonScalar>,
    pub s: usize,
    pub k: usize,
    pub matrix: Vec<Vec<JsonScalar>>,
    pub rank: usize,
    pub dimension: usize,
    pub degenerate: bool,
    pub basis: Vec<PolyJson>,
    pub approx: ApproxJson,
}

pub fn z_report_json(z: &ZProblem, m: &AssociatedMatrix, rep: &ZReport, approx: &ApproxZReport) -> ZReportJson {
    ZReportJson {
        field: JsonField::from_descriptor(z.field()),
        eta: z.eta().iter().map(scalar_to_json).collect(),
        omega: z.omega().iter().map(scalar_to_json).collect(),
        s: z.s(),
        k: z.k(),
        matrix: m.entries.iter().map(|row| row.iter().map(scalar_to_json).collect()).collect(),
        rank: rep.rank,
        dimension: rep.dimension,
        degenerate: rep.degenerate,
        basis: rep.basis.iter().map(PolyJson::new).collect(),
        approx: approx.into(),
    }
}

pub fn z_report_text(z: &ZReportJson) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "s {}  k {}", z.s, z.k);
    let _ = writeln!(s, "rank {}  dim {}  degenerate {}", z.rank, z.dimension, z.degenerate);
    let _ = writeln!(s, "approximate check at {} bits: dim {}", z.approx.precision_bits, z.approx.dimension);
    let _ = writeln!(s, "basis:");
    for p in &z.basis {
        let _ = writeln!(s, "  {}", p.text);
    }
    s
}
