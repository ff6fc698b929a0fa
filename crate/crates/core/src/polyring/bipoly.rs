use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::RadScalar;
use crate::error::{Error, Result};

/// Sparse polynomial in `x` and `y` with exact radical coefficients.
///
/// Keys are `(x exponent, y exponent)`; zero coefficients are never stored.
/// The operators below act term by term and merge colliding exponent pairs
/// by coefficient addition.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiPoly {
    terms: BTreeMap<(u64, u64), RadScalar>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(coeff: RadScalar, i: u64, j: u64) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, coeff);
        p
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u64, u64), RadScalar)>,
    {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// Polynomial with integer coefficients, e.g. an M-polynomial.
    pub fn from_int_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u64, u64), BigInt)>,
    {
        Self::from_terms(terms.into_iter().map(|(k, m)| (k, RadScalar::from(m))))
    }

    pub fn add_term(&mut self, i: u64, j: u64, coeff: RadScalar) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u64, u64), &RadScalar)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, i: u64, j: u64) -> RadScalar {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn map_terms<F>(&self, mut f: F) -> Self
    where
        F: FnMut(u64, u64, &RadScalar) -> ((u64, u64), RadScalar),
    {
        Self::from_terms(self.terms.iter().map(|((i, j), c)| f(*i, *j, c)))
    }

    /// `S_x`: `c x^a y^b -> (c/a) x^a y^b`. A term with `a = 0` has a
    /// divergent defining integral and is an error.
    pub fn s_x(&self) -> Result<Self> {
        if let Some(((_, b), _)) = self.terms.iter().find(|((a, _), _)| *a == 0) {
            return Err(Error::DivergentIntegral { y_exp: *b });
        }
        Ok(self.map_terms(|a, b, c| {
            let inv = BigRational::new(1.into(), a.into());
            ((a, b), c.scale(&inv))
        }))
    }

    /// `P_x`: squares every x exponent.
    pub fn p_x(&self) -> Self {
        self.map_terms(|a, b, c| ((a * a, b), c.clone()))
    }

    /// `P_y`: squares every y exponent.
    pub fn p_y(&self) -> Self {
        self.map_terms(|a, b, c| ((a, b * b), c.clone()))
    }

    /// `J`: substitutes `y <- x`.
    pub fn j_diag(&self) -> Self {
        self.map_terms(|a, b, c| ((a + b, 0), c.clone()))
    }

    /// Termwise `D^{1/2}_x`: `c x^a y^b -> c*sqrt(a) x^a y^b`; constants in x vanish.
    ///
    /// The operator `sqrt(x df/dx) * sqrt(f)` is not additive, so this is the
    /// monomial-by-monomial reading under which the HSO pipeline is exact.
    pub fn d_half_x(&self) -> Self {
        Self::from_terms(self.terms.iter().filter(|((a, _), _)| *a > 0).map(|((a, b), c)| {
            let scaled = c.mul_sqrt(*a as i64).expect("positive exponent");
            ((*a, *b), scaled)
        }))
    }

    /// Sum of all coefficients, i.e. the value at `x = y = 1`.
    pub fn eval_x1(&self) -> RadScalar {
        let mut acc = RadScalar::zero();
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }

    /// Floating-point value at `(x, y)`.
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|((a, b), c)| c.to_f64() * pow(x, *a) * pow(y, *b))
            .sum()
    }
}

fn pow(base: f64, exp: u64) -> f64 {
    match i32::try_from(exp) {
        Ok(e) => base.powi(e),
        Err(_) => base.powf(exp as f64),
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, ((a, b), c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if c.len() > 1 {
                write!(f, "({c})")?;
            } else {
                write!(f, "{c}")?;
            }
            if *a > 0 {
                write!(f, "*x^{a}")?;
            }
            if *b > 0 {
                write!(f, "*y^{b}")?;
            }
        }
        Ok(())
    }
}
