use std::fmt;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{Context, Result};
use serde::Serialize;

use mpoly_topo::families::{self, family_info};
use mpoly_topo::graphs::{self, read_edge_list};
use mpoly_topo::indices::{compute_report, pipeline_trace, render4, round4};
use mpoly_topo::polyring::{eval_grid, grid_to_csv, json::to_json_terms, json::TermJson};
use mpoly_topo::tables::{self, TableRow};
use mpoly_topo::{hso_via_pipeline, BiPoly, Error, Family, FamilySpec, ReportInput};

use crate::args::{Format, Source};

/// An input file that could not be read.
#[derive(Debug)]
pub struct Unreadable {
    pub path: PathBuf,
    pub source: std::io::Error,
}

impl fmt::Display for Unreadable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot read {}", self.path.display())
    }
}

impl std::error::Error for Unreadable {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        Some(&self.source)
    }
}

/// Non-error outcomes that still change the exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    TableMismatch,
    Disagreement,
}

fn load(source: &Source) -> Result<ReportInput> {
    if let Some(path) = &source.graph {
        let text = fs::read_to_string(path)
            .map_err(|e| Unreadable { path: path.clone(), source: e })?;
        let graph = read_edge_list(&text).with_context(|| format!("in {}", path.display()))?;
        return Ok(ReportInput::Graph { label: path.display().to_string(), graph });
    }
    let token = source.family.as_deref().expect("clap enforces one input");
    Ok(ReportInput::Family(FamilySpec::parse(token, source.params())?))
}

fn mpoly_of(input: &ReportInput) -> Result<BiPoly> {
    Ok(match input {
        ReportInput::Family(spec) => families::catalog_mpoly(spec)?,
        ReportInput::Graph { graph, .. } => graphs::m_polynomial(graph)?,
    })
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .flexible(true)
        .from_writer(out)
}

pub fn compute(out: &mut dyn Write, source: &Source, format: Format, fail_on_mismatch: bool) -> Result<Status> {
    let report = compute_report(&load(source)?)?;
    match format {
        Format::Text => writeln!(out, "{}", report.rendered())?,
        Format::Json => writeln!(out, "{}", report.to_json())?,
        Format::Csv => {
            let mut w = csv_writer(&mut *out);
            w.write_record(["input", "hso_float", "hso_exact", "agreement", "table_expected", "match"])?;
            w.write_record([
                report.input.clone(),
                report.rendered(),
                report.exact().to_string(),
                report.agreement.to_string(),
                report.table_expected.clone().unwrap_or_default(),
                report.table_match.map(|b| b.to_string()).unwrap_or_default(),
            ])?;
            w.flush()?;
        }
    }
    if !report.agreement {
        log::error!("{}: routes disagree: {:?}", report.input, report.routes);
        return Ok(Status::Disagreement);
    }
    if report.table_match == Some(false) {
        log::warn!(
            "{}: computed {} but the published table prints {}",
            report.input,
            report.rendered(),
            report.table_expected.as_deref().unwrap_or("?")
        );
        if fail_on_mismatch {
            return Ok(Status::TableMismatch);
        }
    }
    Ok(Status::Ok)
}

/// Parses an inclusive integer range `A..B`, `A..=B` or a single `A`.
pub fn parse_int_range(text: &str) -> Result<(u64, u64)> {
    let bad = || Error::BadParams(format!("expected a range like 1..10, got {text:?}"));
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (text, text),
    };
    let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
    Ok((lo, hi))
}

/// Parses a real interval `lo..hi`.
pub fn parse_float_range(text: &str, axis: &str) -> Result<(f64, f64)> {
    let bad = || Error::InvalidRange(format!("{axis}: expected lo..hi, got {text:?}"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
    Ok((lo, hi))
}

#[derive(Serialize)]
struct RowJson {
    input: String,
    family: &'static str,
    params: serde_json::Map<String, serde_json::Value>,
    hso: f64,
    exact: String,
    agreement: bool,
    in_domain: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    table_expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    table_match: Option<bool>,
}

fn row_json(row: &TableRow) -> RowJson {
    let fam = row.spec.family();
    RowJson {
        input: row.spec.to_string(),
        family: fam.token(),
        params: fam
            .param_names()
            .iter()
            .zip(row.spec.params())
            .map(|(k, v)| (k.to_string(), (*v).into()))
            .collect(),
        hso: round4(row.value),
        exact: row.exact.to_string(),
        agreement: row.agreement,
        in_domain: row.in_domain,
        table_expected: row.golden.map(|c| c.printed.clone()),
        table_match: row.table_match(),
    }
}

pub struct TableArgs<'a> {
    pub family: Option<&'a str>,
    pub range: &'a str,
    pub cross: bool,
    pub published: bool,
    pub fail_on_mismatch: bool,
}

pub fn table(out: &mut dyn Write, args: TableArgs<'_>, format: Format) -> Result<Status> {
    let family = args.family.map(Family::from_token).transpose()?;
    let rows = if args.published {
        let rows: Vec<TableRow> = tables::reproduce_published()?
            .into_iter()
            .filter(|r| family.is_none_or(|f| r.spec.family() == f))
            .collect();
        if rows.is_empty() {
            let f = family.map(|f| f.token()).unwrap_or_default();
            return Err(Error::BadParams(format!("no published cells for {f}")).into());
        }
        rows
    } else {
        let (lo, hi) = parse_int_range(args.range)?;
        tables::sweep(family.expect("clap requires --family"), lo, hi, args.cross)?
    };
    match format {
        Format::Csv => out.write_all(tables::rows_to_csv(&rows).as_bytes())?,
        Format::Json => {
            let docs: Vec<RowJson> = rows.iter().map(row_json).collect();
            writeln!(out, "{}", serde_json::to_string(&docs)?)?;
        }
        Format::Text => {
            for row in &rows {
                let note = match (row.golden, row.table_match()) {
                    (Some(c), Some(true)) => format!("  table {}", c.printed),
                    (Some(c), _) => format!("  table {} MISMATCH", c.printed),
                    _ => String::new(),
                };
                let domain = if row.in_domain { "" } else { "  (outside structural domain)" };
                writeln!(out, "{}\t{}{note}{domain}", row.spec, render4(row.value))?;
            }
        }
    }
    if rows.iter().any(|r| !r.agreement) {
        log::error!("catalog pipeline and closed form disagree");
        return Ok(Status::Disagreement);
    }
    let mismatches = rows.iter().filter(|r| r.table_match() == Some(false)).count();
    if mismatches > 0 {
        log::warn!("{mismatches} row(s) differ from the published tables");
        if args.fail_on_mismatch {
            return Ok(Status::TableMismatch);
        }
    }
    Ok(Status::Ok)
}

pub fn grid(out: &mut dyn Write, source: &Source, x: &str, y: &str, steps: usize, format: Format) -> Result<Status> {
    let poly = mpoly_of(&load(source)?)?;
    let points = eval_grid(&poly, parse_float_range(x, "x")?, parse_float_range(y, "y")?, steps)?;
    match format {
        Format::Csv => out.write_all(grid_to_csv(&points).as_bytes())?,
        Format::Json => writeln!(out, "{}", serde_json::to_string(&points)?)?,
        Format::Text => {
            for p in &points {
                writeln!(out, "{}\t{}\t{}", p.x, p.y, p.value)?;
            }
        }
    }
    Ok(Status::Ok)
}

pub fn families(out: &mut dyn Write, format: Format) -> Result<Status> {
    let infos: Vec<_> = Family::ALL.into_iter().map(family_info).collect();
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&infos)?)?,
        Format::Csv => {
            let mut w = csv_writer(&mut *out);
            w.write_record(["token", "name", "params", "domain", "routes"])?;
            for i in &infos {
                w.write_record([i.token, i.name, &i.params.join(";"), i.domain, &i.routes.join(";")])?;
            }
            w.flush()?;
        }
        Format::Text => {
            let rows: Vec<[String; 5]> = infos
                .iter()
                .map(|i| {
                    [i.token.into(), i.params.join(","), i.domain.into(), i.routes.join(","), i.name.into()]
                })
                .collect();
            let width = |k: usize| rows.iter().map(|r| r[k].chars().count()).max().unwrap_or(0);
            let widths = [width(0), width(1), width(2), width(3)];
            for r in &rows {
                writeln!(
                    out,
                    "{:<w0$}  {:<w1$}  {:<w2$}  {:<w3$}  {}",
                    r[0],
                    r[1],
                    r[2],
                    r[3],
                    r[4],
                    w0 = widths[0],
                    w1 = widths[1],
                    w2 = widths[2],
                    w3 = widths[3],
                )?;
            }
        }
    }
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct StageJson {
    stage: &'static str,
    terms: Vec<TermJson>,
}

#[derive(Serialize)]
struct TraceJson {
    stages: Vec<StageJson>,
    hso: String,
    value: f64,
}

pub fn mpoly(out: &mut dyn Write, source: &Source, partition: bool, trace: bool, format: Format) -> Result<Status> {
    let poly = mpoly_of(&load(source)?)?;
    if partition {
        let counts: serde_json::Map<String, serde_json::Value> = poly
            .terms()
            .map(|((i, j), c)| {
                let v = c
                    .as_rational()
                    .filter(|r| r.is_integer())
                    .and_then(|r| r.to_integer().to_string().parse::<u64>().ok())
                    .map_or_else(|| c.to_string().into(), serde_json::Value::from);
                (format!("{i},{j}"), v)
            })
            .collect();
        match format {
            Format::Json => writeln!(out, "{}", serde_json::Value::Object(counts))?,
            _ => {
                for (k, v) in counts {
                    writeln!(out, "{k}\t{v}")?;
                }
            }
        }
    } else if trace {
        let stages = pipeline_trace(&poly)?;
        let hso = hso_via_pipeline(&poly)?;
        match format {
            Format::Json => {
                let doc = TraceJson {
                    stages: stages
                        .iter()
                        .map(|(stage, p)| StageJson { stage, terms: to_json_terms(p) })
                        .collect(),
                    hso: hso.to_string(),
                    value: hso.to_f64(),
                };
                writeln!(out, "{}", serde_json::to_string(&doc)?)?;
            }
            _ => {
                for (stage, p) in &stages {
                    writeln!(out, "{stage}: {p}")?;
                }
                writeln!(out, "x=1: {hso}")?;
            }
        }
    } else {
        match format {
            Format::Json => writeln!(out, "{}", poly.to_json())?,
            _ => writeln!(out, "{poly}")?,
        }
    }
    Ok(Status::Ok)
}
