//! Published HSO tables as golden fixtures, and parameter sweeps that
//! regenerate them.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{self, Family, FamilySpec};
use crate::indices::{hso_via_pipeline, render4, round4};
use crate::polyring::RadScalar;

const TWO_PARAM: &str = include_str!("../data/two_param.csv");
const ONE_PARAM: &str = include_str!("../data/one_param.csv");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CellStatus {
    /// Printed value agrees with the family's own closed form.
    Verified,
    /// Printed value contradicts the closed form and the partition.
    Erratum,
}

/// One printed cell of a published table.
#[derive(Clone, Debug)]
pub struct GoldenCell {
    pub spec: FamilySpec,
    pub printed: String,
    pub status: CellStatus,
}

impl GoldenCell {
    pub fn printed_value(&self) -> f64 {
        self.printed.parse().expect("fixture values are decimal")
    }

    /// Whether `value`, rounded to four decimals, reproduces the cell.
    pub fn matches(&self, value: f64) -> bool {
        (round4(value) - self.printed_value()).abs() <= 5e-5
    }
}

#[derive(Deserialize)]
struct PairRow {
    family: String,
    m: u64,
    n: u64,
    printed: String,
    status: CellStatus,
}

#[derive(Deserialize)]
struct SingleRow {
    family: String,
    n: u64,
    printed: String,
    status: CellStatus,
}

fn parse_fixture<R, F>(text: &str, mut f: F) -> Vec<GoldenCell>
where
    R: for<'de> Deserialize<'de>,
    F: FnMut(R) -> GoldenCell,
{
    csv::Reader::from_reader(text.as_bytes())
        .deserialize::<R>()
        .map(|row| f(row.expect("embedded fixture is well formed")))
        .collect()
}

fn fixture_spec(family: &str, params: &[u64]) -> FamilySpec {
    let fam = Family::from_token(family).expect("fixture family token");
    FamilySpec::new(fam, params).expect("fixture arity")
}

/// All cells of both tables, in fixture order.
pub fn golden_cells() -> &'static [GoldenCell] {
    static CELLS: OnceLock<Vec<GoldenCell>> = OnceLock::new();
    CELLS.get_or_init(|| {
        let mut cells = parse_fixture(TWO_PARAM, |r: PairRow| GoldenCell {
            spec: fixture_spec(&r.family, &[r.m, r.n]),
            printed: r.printed,
            status: r.status,
        });
        cells.extend(parse_fixture(ONE_PARAM, |r: SingleRow| GoldenCell {
            spec: fixture_spec(&r.family, &[r.n]),
            printed: r.printed,
            status: r.status,
        }));
        cells
    })
}

pub fn lookup(spec: &FamilySpec) -> Option<&'static GoldenCell> {
    golden_cells().iter().find(|c| c.spec == *spec)
}

/// Families that appear in the published tables, in print order.
pub fn tabulated_families() -> Vec<Family> {
    let mut out: Vec<Family> = Vec::new();
    for c in golden_cells() {
        if !out.contains(&c.spec.family()) {
            out.push(c.spec.family());
        }
    }
    out
}

/// One computed row of a parameter sweep.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub spec: FamilySpec,
    pub exact: RadScalar,
    pub value: f64,
    /// Pipeline on the catalog equals the closed form.
    pub agreement: bool,
    pub in_domain: bool,
    pub golden: Option<&'static GoldenCell>,
}

impl TableRow {
    pub fn table_match(&self) -> Option<bool> {
        self.golden.map(|c| c.matches(self.value))
    }
}

/// Evaluates the catalog formula at `spec`, inside or outside the
/// structural domain (the published tables include degenerate cells).
pub fn table_row(spec: &FamilySpec) -> Result<TableRow> {
    let exact = hso_via_pipeline(&families::formula_mpoly(spec))?;
    let closed = families::closed_formula(spec);
    Ok(TableRow {
        value: exact.to_f64(),
        agreement: exact == closed,
        in_domain: families::in_structural_domain(spec),
        golden: lookup(spec),
        spec: spec.clone(),
        exact,
    })
}

/// Sweep over `lo..=hi`. Two-parameter families use the diagonal unless
/// `cross` asks for the full product; rows come out in parameter order.
pub fn sweep(family: Family, lo: u64, hi: u64, cross: bool) -> Result<Vec<TableRow>> {
    if lo == 0 {
        return Err(Error::BadParams("table parameters must be >= 1".into()));
    }
    if lo > hi {
        return Err(Error::BadParams(format!("empty range {lo}..{hi}")));
    }
    let arity = family.param_names().len();
    let mut specs = Vec::new();
    for a in lo..=hi {
        match (arity, cross) {
            (1, _) => specs.push(FamilySpec::new(family, &[a])?),
            (_, false) => specs.push(FamilySpec::new(family, &[a, a])?),
            (_, true) => {
                for b in lo..=hi {
                    specs.push(FamilySpec::new(family, &[a, b])?);
                }
            }
        }
    }
    specs.iter().map(table_row).collect()
}

/// Recomputes every published cell.
pub fn reproduce_published() -> Result<Vec<TableRow>> {
    golden_cells().iter().map(|c| table_row(&c.spec)).collect()
}

/// CSV with one column per parameter, then
/// `hso_float,hso_exact,table_expected,match,in_domain`.
pub fn rows_to_csv(rows: &[TableRow]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .flexible(true)
        .from_writer(Vec::new());
    let mut last_header: Option<Vec<String>> = None;
    for row in rows {
        let mut header: Vec<String> = vec!["family".into()];
        header.extend(row.spec.family().param_names().iter().map(|s| s.to_string()));
        header.extend(
            ["hso_float", "hso_exact", "table_expected", "match", "in_domain"].map(String::from),
        );
        if last_header.as_ref() != Some(&header) {
            w.write_record(&header).expect("in-memory write");
            last_header = Some(header);
        }
        let mut rec: Vec<String> = vec![row.spec.family().token().into()];
        rec.extend(row.spec.params().iter().map(u64::to_string));
        rec.push(render4(row.value));
        rec.push(row.exact.to_string());
        rec.push(row.golden.map(|c| c.printed.clone()).unwrap_or_default());
        rec.push(row.table_match().map(|b| b.to_string()).unwrap_or_default());
        rec.push(row.in_domain.to_string());
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}
