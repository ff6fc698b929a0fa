//! The operator pipeline `D^{1/2}_x J P_y P_x S_x` and the three-route HSO report.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{self, FamilySpec};
use crate::graphs::{self, SimpleGraph};
use crate::polyring::{BiPoly, RadScalar};
use crate::tables;

/// HSO from an M-polynomial: `D^{1/2}_x J P_y P_x S_x (M)` at `x = 1`.
pub fn hso_via_pipeline(m: &BiPoly) -> Result<RadScalar> {
    Ok(m.s_x()?.p_x().p_y().j_diag().d_half_x().eval_x1())
}

/// Intermediate states of the pipeline, labelled by the operator just applied.
pub fn pipeline_trace(m: &BiPoly) -> Result<Vec<(&'static str, BiPoly)>> {
    let s = m.s_x()?;
    let px = s.p_x();
    let py = px.p_y();
    let j = py.j_diag();
    let d = j.d_half_x();
    Ok(vec![("M", m.clone()), ("S_x", s), ("P_x", px), ("P_y", py), ("J", j), ("D^1/2_x", d)])
}

/// Rounds half-to-even at the fourth decimal.
pub fn round4(v: f64) -> f64 {
    (v * 1e4).round_ties_even() / 1e4
}

pub fn render4(v: f64) -> String {
    format!("{:.4}", round4(v))
}

/// What a report was computed from.
#[derive(Clone, Debug)]
pub enum ReportInput {
    Family(FamilySpec),
    Graph { label: String, graph: SimpleGraph },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Routes {
    pub direct: Option<RadScalar>,
    pub pipeline: RadScalar,
    pub closed: Option<RadScalar>,
}

impl Routes {
    /// True iff every present route is exactly equal to the pipeline value.
    pub fn agree(&self) -> bool {
        [&self.direct, &self.closed]
            .into_iter()
            .flatten()
            .all(|r| *r == self.pipeline)
    }
}

#[derive(Clone, Debug)]
pub struct HsoReport {
    pub input: String,
    pub routes: Routes,
    pub value: f64,
    pub agreement: bool,
    pub table_expected: Option<String>,
    pub table_match: Option<bool>,
    pub warnings: Vec<String>,
}

#[derive(Serialize)]
struct RoutesJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    direct: Option<f64>,
    pipeline: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed: Option<f64>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    input: &'a str,
    hso: f64,
    routes: RoutesJson,
    exact: String,
    agreement: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    table_expected: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    table_match: Option<bool>,
    #[serde(skip_serializing_if = "<[String]>::is_empty")]
    warnings: &'a [String],
}

impl HsoReport {
    /// The value at four decimals, as the tables print it.
    pub fn rendered(&self) -> String {
        render4(self.value)
    }

    pub fn exact(&self) -> &RadScalar {
        &self.routes.pipeline
    }

    pub fn to_json(&self) -> String {
        let doc = ReportJson {
            input: &self.input,
            hso: round4(self.value),
            routes: RoutesJson {
                direct: self.routes.direct.as_ref().map(RadScalar::to_f64),
                pipeline: self.routes.pipeline.to_f64(),
                closed: self.routes.closed.as_ref().map(RadScalar::to_f64),
            },
            exact: self.routes.pipeline.to_string(),
            agreement: self.agreement,
            table_expected: self.table_expected.as_deref(),
            table_match: self.table_match,
            warnings: &self.warnings,
        };
        serde_json::to_string(&doc).expect("report serializes")
    }
}

fn finish(input: String, routes: Routes, warnings: Vec<String>, spec: Option<&FamilySpec>) -> HsoReport {
    let value = routes.pipeline.to_f64();
    let golden = spec.and_then(tables::lookup);
    HsoReport {
        input,
        agreement: routes.agree(),
        value,
        table_expected: golden.map(|c| c.printed.clone()),
        table_match: golden.map(|c| c.matches(value)),
        routes,
        warnings,
    }
}

pub fn compute_family_report(spec: &FamilySpec) -> Result<HsoReport> {
    let mpoly = families::catalog_mpoly(spec)?;
    let pipeline = hso_via_pipeline(&mpoly)?;
    let closed = Some(families::closed_hso(spec)?);
    let mut warnings = Vec::new();
    let direct = if families::constructor_realizes_catalog(spec) {
        Some(graphs::hso_direct(&families::construct(spec)?)?)
    } else {
        if spec.family().has_constructor() {
            let w = format!(
                "{spec}: catalog partition differs from the explicit graph here; direct route skipped"
            );
            log::warn!("{w}");
            warnings.push(w);
        }
        None
    };
    Ok(finish(spec.to_string(), Routes { direct, pipeline, closed }, warnings, Some(spec)))
}

pub fn compute_graph_report(label: &str, g: &SimpleGraph) -> Result<HsoReport> {
    let mut warnings = Vec::new();
    if !g.is_connected() {
        log::warn!("{label}: graph is disconnected; HSO is still well defined");
        warnings.push("graph is disconnected".to_string());
    }
    let direct = Some(graphs::hso_direct(g)?);
    let pipeline = hso_via_pipeline(&graphs::m_polynomial(g)?)?;
    Ok(finish(label.to_string(), Routes { direct, pipeline, closed: None }, warnings, None))
}

/// Runs every applicable route for `input`.
pub fn compute_report(input: &ReportInput) -> Result<HsoReport> {
    match input {
        ReportInput::Family(spec) => compute_family_report(spec),
        ReportInput::Graph { label, graph } => compute_graph_report(label, graph),
    }
}

/// Like [`compute_report`], but route disagreement becomes an error.
pub fn checked_report(input: &ReportInput) -> Result<HsoReport> {
    let r = compute_report(input)?;
    if r.agreement {
        Ok(r)
    } else {
        Err(Error::RouteDisagreement(format!("{}: {:?}", r.input, r.routes)))
    }
}
