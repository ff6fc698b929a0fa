//! Wire format for [`BiPoly`]:
//! `[{"i": 1, "j": 3, "coeff": [{"q": "6/1", "r": 1}]}, ...]`.

use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{BiPoly, RadScalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub q: String,
    pub r: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub i: u64,
    pub j: u64,
    pub coeff: Vec<CoeffJson>,
}

fn ratio_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn scalar_to_json(s: &RadScalar) -> Vec<CoeffJson> {
    s.terms().map(|(r, q)| CoeffJson { q: ratio_string(q), r }).collect()
}

pub fn scalar_from_json(coeff: &[CoeffJson]) -> Result<RadScalar> {
    let mut raw = Vec::with_capacity(coeff.len());
    for c in coeff {
        let q = BigRational::from_str(c.q.trim())
            .map_err(|_| Error::Json(format!("bad rational {:?}", c.q)))?;
        raw.push((c.r, q));
    }
    RadScalar::from_terms(raw).map_err(|e| Error::Json(e.to_string()))
}

pub fn to_json_terms(p: &BiPoly) -> Vec<TermJson> {
    p.terms()
        .map(|((i, j), c)| TermJson { i, j, coeff: scalar_to_json(c) })
        .collect()
}

pub fn from_json_terms(terms: &[TermJson]) -> Result<BiPoly> {
    let mut p = BiPoly::zero();
    for t in terms {
        p.add_term(t.i, t.j, scalar_from_json(&t.coeff)?);
    }
    Ok(p)
}

impl BiPoly {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&to_json_terms(self)).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let terms: Vec<TermJson> =
            serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        from_json_terms(&terms)
    }
}
