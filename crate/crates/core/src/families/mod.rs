//! Standard graphs and chemical graph families.
//!
//! Every family has a parametric M-polynomial (its degree-pair edge
//! partition) and a closed-form HSO expression. The standard graphs also
//! have explicit constructors so the edge-by-edge route can be run on them.

mod catalog;
mod closed;
mod construct;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::SimpleGraph;
use crate::polyring::{BiPoly, RadScalar};

pub use catalog::ExpectedCounts;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    RRegular,
    Tadpole,
    BoronAlphaSheet,
    Petim,
    DnPn,
    Dpzn,
    Petaa,
    JaggedBenzenoid,
    Pah,
    Vphx,
    Vphy,
    PorousGraphene,
    Polyphenylene,
}

impl Family {
    pub const ALL: [Family; 18] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Star,
        Family::RRegular,
        Family::Tadpole,
        Family::BoronAlphaSheet,
        Family::Petim,
        Family::DnPn,
        Family::Dpzn,
        Family::Petaa,
        Family::JaggedBenzenoid,
        Family::Pah,
        Family::Vphx,
        Family::Vphy,
        Family::PorousGraphene,
        Family::Polyphenylene,
    ];

    /// Lowercase CLI token.
    pub fn token(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "kmn",
            Family::Star => "star",
            Family::RRegular => "rregular",
            Family::Tadpole => "tadpole",
            Family::BoronAlphaSheet => "boron",
            Family::Petim => "petim",
            Family::DnPn => "dnpn",
            Family::Dpzn => "dpzn",
            Family::Petaa => "petaa",
            Family::JaggedBenzenoid => "benzenoid",
            Family::Pah => "pah",
            Family::Vphx => "vphx",
            Family::Vphy => "vphy",
            Family::PorousGraphene => "pg",
            Family::Polyphenylene => "polyphenylene",
        }
    }

    pub fn from_token(token: &str) -> Result<Self> {
        let t = token.trim().to_ascii_lowercase();
        Self::ALL
            .into_iter()
            .find(|f| f.token() == t)
            .ok_or_else(|| Error::UnknownFamily(token.to_string()))
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path graph P_n",
            Family::Cycle => "cycle graph C_n",
            Family::Complete => "complete graph K_n",
            Family::CompleteBipartite => "complete bipartite graph K_{m,n}",
            Family::Star => "star graph K_{1,r-1}",
            Family::RRegular => "r-regular graph on n vertices",
            Family::Tadpole => "tadpole graph T(n,m)",
            Family::BoronAlphaSheet => "boron icosahedral alpha sheet B(a,b)",
            Family::Petim => "poly(propyl) ether imine dendrimer",
            Family::DnPn => "porphyrin dendrimer D_nP_n",
            Family::Dpzn => "zinc porphyrin dendrimer DPZ_n",
            Family::Petaa => "poly ethylene amide amine dendrimer",
            Family::JaggedBenzenoid => "jagged-rectangle benzenoid B_{m,n}",
            Family::Pah => "polycyclic aromatic hydrocarbon PAH_n",
            Family::Vphx => "V-phenylenic nanotube VPHX[m,n]",
            Family::Vphy => "V-phenylenic nanotorus VPHY[m,n]",
            Family::PorousGraphene => "porous graphene PG[p,q]",
            Family::Polyphenylene => "polyphenylene P[s,t]",
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::Path | Family::Cycle | Family::Complete => &["n"],
            Family::CompleteBipartite => &["m", "n"],
            Family::Star => &["r"],
            Family::RRegular => &["n", "r"],
            Family::Tadpole => &["n", "m"],
            Family::BoronAlphaSheet => &["a", "b"],
            Family::Petim | Family::DnPn | Family::Dpzn | Family::Petaa | Family::Pah => &["n"],
            Family::JaggedBenzenoid | Family::Vphx | Family::Vphy => &["m", "n"],
            Family::PorousGraphene => &["p", "q"],
            Family::Polyphenylene => &["s", "t"],
        }
    }

    /// Human-readable parameter domain.
    pub fn domain(self) -> &'static str {
        match self {
            Family::Path => "n ≥ 3",
            Family::Cycle => "n ≥ 3",
            Family::Complete => "n ≥ 2",
            Family::CompleteBipartite => "1 ≤ m ≤ n, n ≥ 2",
            Family::Star => "r ≥ 2",
            Family::RRegular => "r ≥ 2, n > r, n*r even",
            Family::Tadpole => "n ≥ 3, m ≥ 1 (catalog valid for m ≥ 2)",
            Family::BoronAlphaSheet => "a, b ≥ 1 with all partition counts ≥ 0",
            Family::JaggedBenzenoid => "m ≥ 2, n ≥ 1",
            _ => "all parameters ≥ 1",
        }
    }

    pub fn has_constructor(self) -> bool {
        matches!(
            self,
            Family::Path
                | Family::Cycle
                | Family::Complete
                | Family::CompleteBipartite
                | Family::Star
                | Family::RRegular
                | Family::Tadpole
        )
    }

    fn domain_error(self, message: impl Into<String>) -> Error {
        Error::Domain { family: self.token().to_string(), message: message.into() }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// A family together with its integer parameters, in `param_names` order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    family: Family,
    params: Vec<u64>,
}

impl FamilySpec {
    pub fn new(family: Family, params: &[u64]) -> Result<Self> {
        let names = family.param_names();
        if params.len() != names.len() {
            return Err(Error::BadParams(format!(
                "{} takes {} parameter(s) ({}), got {}",
                family,
                names.len(),
                names.join(","),
                params.len()
            )));
        }
        Ok(Self { family, params: params.to_vec() })
    }

    /// Parses `"m=2,n=3"` against the family's parameter names.
    pub fn parse(token: &str, params: &str) -> Result<Self> {
        let family = Family::from_token(token)?;
        let names = family.param_names();
        let mut values: Vec<Option<u64>> = vec![None; names.len()];
        for item in params.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, val) = item
                .split_once('=')
                .ok_or_else(|| Error::BadParams(format!("expected key=value, got {item:?}")))?;
            let key = key.trim();
            let idx = names
                .iter()
                .position(|n| *n == key)
                .ok_or_else(|| Error::BadParams(format!("{family} has no parameter {key:?}")))?;
            let v: u64 = val
                .trim()
                .parse()
                .map_err(|_| Error::BadParams(format!("{key}: not a non-negative integer: {val:?}")))?;
            if values[idx].replace(v).is_some() {
                return Err(Error::BadParams(format!("{key} given twice")));
            }
        }
        let params = values
            .into_iter()
            .zip(names)
            .map(|(v, n)| v.ok_or_else(|| Error::BadParams(format!("{family}: missing {n}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(family, &params)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn params(&self) -> &[u64] {
        &self.params
    }

    pub fn param(&self, name: &str) -> u64 {
        let idx = self
            .family
            .param_names()
            .iter()
            .position(|n| *n == name)
            .unwrap_or_else(|| panic!("{} has no parameter {name}", self.family));
        self.params[idx]
    }

    fn int(&self, name: &str) -> BigInt {
        BigInt::from(self.param(name))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kv: Vec<String> = self
            .family
            .param_names()
            .iter()
            .zip(&self.params)
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(f, "{}{{{}}}", self.family, kv.join(","))
    }
}

/// Checks the structural parameter domain, including non-negativity of
/// every partition count.
pub fn check_domain(spec: &FamilySpec) -> Result<()> {
    let fam = spec.family;
    let p = |n: &str| spec.param(n);
    let need = |ok: bool, msg: &str| if ok { Ok(()) } else { Err(fam.domain_error(msg.to_string())) };
    match fam {
        Family::Path | Family::Cycle => need(p("n") >= 3, "requires n >= 3")?,
        Family::Complete => need(p("n") >= 2, "requires n >= 2")?,
        Family::CompleteBipartite => {
            need(p("m") >= 1 && p("m") <= p("n"), "requires 1 <= m <= n")?;
            need(p("n") >= 2, "requires n >= 2")?;
        }
        Family::Star => need(p("r") >= 2, "requires r >= 2")?,
        Family::RRegular => {
            let (n, r) = (p("n"), p("r"));
            need(r >= 2, "requires r >= 2")?;
            need(n > r, "requires n > r")?;
            if (n * r) % 2 == 1 {
                return Err(Error::Infeasible {
                    family: fam.token().into(),
                    message: format!("n*r = {} is odd", n * r),
                });
            }
        }
        Family::Tadpole => {
            need(p("n") >= 3, "requires cycle length n >= 3")?;
            need(p("m") >= 1, "requires path length m >= 1")?;
        }
        Family::JaggedBenzenoid => {
            need(p("m") >= 2, "requires m >= 2")?;
            need(p("n") >= 1, "requires n >= 1")?;
        }
        _ => need(spec.params.iter().all(|&v| v >= 1), "all parameters must be >= 1")?,
    }
    for ((i, j), m) in catalog::partition(spec) {
        if m.is_negative() {
            return Err(fam.domain_error(format!("m_{i}{j} = {m} is negative")));
        }
    }
    Ok(())
}

pub fn in_structural_domain(spec: &FamilySpec) -> bool {
    check_domain(spec).is_ok()
}

/// Catalog M-polynomial for in-domain parameters.
pub fn catalog_mpoly(spec: &FamilySpec) -> Result<BiPoly> {
    check_domain(spec)?;
    Ok(formula_mpoly(spec))
}

/// The catalog formula evaluated at any parameters, without domain checks.
/// Outside the structural domain counts may be negative or fractional.
pub fn formula_mpoly(spec: &FamilySpec) -> BiPoly {
    BiPoly::from_terms(
        catalog::partition(spec)
            .into_iter()
            .map(|(k, m)| (k, RadScalar::rational(m))),
    )
}

/// Closed-form HSO for in-domain parameters.
pub fn closed_hso(spec: &FamilySpec) -> Result<RadScalar> {
    check_domain(spec)?;
    Ok(closed::formula(spec))
}

/// The closed-form HSO expression at any parameters.
pub fn closed_formula(spec: &FamilySpec) -> RadScalar {
    closed::formula(spec)
}

/// Explicit graph for the standard families.
pub fn construct(spec: &FamilySpec) -> Result<SimpleGraph> {
    if !spec.family.has_constructor() {
        return Err(spec
            .family
            .domain_error("catalog-only family, no explicit constructor"));
    }
    check_domain(spec)?;
    Ok(construct::build(spec))
}

/// Whether `construct(spec)` has exactly the catalog M-polynomial. The
/// tadpole catalog misclassifies the pendant edge when the tail is one vertex.
pub fn constructor_realizes_catalog(spec: &FamilySpec) -> bool {
    spec.family.has_constructor() && !(spec.family == Family::Tadpole && spec.param("m") == 1)
}

/// Vertex and edge counts stated alongside each family, when there are any.
pub fn expected_counts(spec: &FamilySpec) -> Option<ExpectedCounts> {
    catalog::expected_counts(spec)
}

/// Sum of the catalog counts, i.e. the edge count implied by the partition.
pub fn catalog_edge_total(spec: &FamilySpec) -> BigRational {
    catalog::partition(spec).into_iter().map(|(_, m)| m).sum()
}

/// Everything known about one parameterized family member.
#[derive(Clone, Debug)]
pub struct FamilyResolution {
    pub spec: FamilySpec,
    pub catalog_mpoly: BiPoly,
    pub closed_hso: RadScalar,
    pub graph: Option<SimpleGraph>,
}

pub fn resolve(spec: &FamilySpec) -> Result<FamilyResolution> {
    let catalog_mpoly = catalog_mpoly(spec)?;
    let closed_hso = closed::formula(spec);
    let graph = if spec.family.has_constructor() { Some(construct(spec)?) } else { None };
    Ok(FamilyResolution { spec: spec.clone(), catalog_mpoly, closed_hso, graph })
}

/// Machine-readable description of a family, for listings.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyInfo {
    pub token: &'static str,
    pub name: &'static str,
    pub params: Vec<&'static str>,
    pub domain: &'static str,
    pub routes: Vec<&'static str>,
}

pub fn family_info(f: Family) -> FamilyInfo {
    let mut routes = Vec::new();
    if f.has_constructor() {
        routes.push("direct");
    }
    routes.extend(["pipeline", "closed"]);
    FamilyInfo {
        token: f.token(),
        name: f.name(),
        params: f.param_names().to_vec(),
        domain: f.domain(),
        routes,
    }
}
