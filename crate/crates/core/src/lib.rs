//! Degree-based topological indices from M-polynomials.
//!
//! The hyperbolic Sombor index `HSO(G) = sum_{uv} sqrt(d(u)^2 + d(v)^2) / min(d(u), d(v))`
//! is computed three ways, all in exact arithmetic over `Q(sqrt 2, sqrt 3, ...)`:
//!
//! * edge by edge on an explicit graph ([`graphs::hso_direct`]),
//! * through the operator pipeline `D^{1/2}_x J P_y P_x S_x` applied to the
//!   M-polynomial and evaluated at `x = 1` ([`indices::hso_via_pipeline`]),
//! * from each catalogued family's closed formula ([`families::closed_hso`]).
//!
//! ```
//! use mpoly_topo::families::FamilySpec;
//! use mpoly_topo::indices::compute_family_report;
//!
//! let report = compute_family_report(&FamilySpec::parse("vphy", "m=2,n=2").unwrap()).unwrap();
//! assert!(report.agreement);
//! assert_eq!(report.rendered(), "50.9117");
//! ```

pub mod error;
pub mod families;
pub mod graphs;
pub mod indices;
pub mod polyring;
pub mod tables;

pub use error::{Error, Result};
pub use families::{Family, FamilySpec};
pub use graphs::{EdgePartition, SimpleGraph};
pub use indices::{compute_report, hso_via_pipeline, HsoReport, ReportInput};
pub use polyring::{BiPoly, RadScalar};
