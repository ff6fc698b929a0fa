//! Exact numbers of the form `q1*sqrt(r1) + q2*sqrt(r2) + ...`.
//!
//! Every radicand is kept squarefree and every stored coefficient is
//! non-zero, so two values are equal exactly when their term maps are equal.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Splits `k` into `(s, f)` with `k = s*s*f` and `f` squarefree.
pub fn split_square(k: u64) -> (u64, u64) {
    debug_assert!(k > 0);
    let mut square = 1u64;
    let mut free = 1u64;
    let mut rest = k;
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0u32;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        square *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    free *= rest;
    (square, free)
}

/// An element of the rationals extended by square roots of integers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RadScalar {
    terms: BTreeMap<u64, BigRational>,
}

impl RadScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn rational(q: BigRational) -> Self {
        let mut s = Self::zero();
        s.push(1, q);
        s
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `p/q` as an exact scalar. Panics if `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        Self::rational(BigRational::new(p.into(), q.into()))
    }

    /// `sqrt(k)` in canonical form; `k = 0` is rejected.
    pub fn sqrt(k: u64) -> Result<Self> {
        Self::one().mul_sqrt(k as i64)
    }

    /// `q * sqrt(r)` for any positive `r`, canonicalized.
    pub fn term(q: BigRational, r: u64) -> Result<Self> {
        Self::from_terms([(r, q)])
    }

    /// Builds a scalar from raw `(radicand, coefficient)` pairs, extracting
    /// square factors and merging equal radicands.
    pub fn from_terms<I>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, BigRational)>,
    {
        let mut s = Self::zero();
        for (r, q) in raw {
            if r == 0 {
                return Err(Error::InvalidRadicand(0));
            }
            let (sq, free) = split_square(r);
            s.push(free, q * BigInt::from(sq));
        }
        Ok(s)
    }

    // `radicand` must already be squarefree.
    fn push(&mut self, radicand: u64, q: BigRational) {
        if q.is_zero() {
            return;
        }
        let slot = self.terms.entry(radicand).or_insert_with(BigRational::zero);
        *slot += q;
        if slot.is_zero() {
            self.terms.remove(&radicand);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Canonical `(radicand, coefficient)` pairs in ascending radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigRational)> + '_ {
        self.terms.iter().map(|(r, q)| (*r, q))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `sqrt(radicand)`, zero when absent.
    pub fn coeff(&self, radicand: u64) -> BigRational {
        self.terms.get(&radicand).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The value as a plain rational, when no irrational part is present.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    /// `self * sqrt(k)`, square part of `k` pulled into the coefficients.
    pub fn mul_sqrt(&self, k: i64) -> Result<Self> {
        if k <= 0 {
            return Err(Error::InvalidRadicand(k));
        }
        let (sq, free) = split_square(k as u64);
        let factor = Self {
            terms: BTreeMap::from([(free, BigRational::from_integer(BigInt::from(sq)))]),
        };
        Ok(self * &factor)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(r, c)| (*r, c * q)).collect(),
        }
    }

    pub fn scale_int(&self, n: &BigInt) -> Self {
        self.scale(&BigRational::from_integer(n.clone()))
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(r, q)| q.to_f64().unwrap_or(f64::NAN) * (*r as f64).sqrt())
            .sum()
    }
}

impl From<BigRational> for RadScalar {
    fn from(q: BigRational) -> Self {
        Self::rational(q)
    }
}

impl From<BigInt> for RadScalar {
    fn from(n: BigInt) -> Self {
        Self::rational(BigRational::from_integer(n))
    }
}

impl From<i64> for RadScalar {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl AddAssign<&RadScalar> for RadScalar {
    fn add_assign(&mut self, rhs: &RadScalar) {
        for (r, q) in &rhs.terms {
            self.push(*r, q.clone());
        }
    }
}

impl AddAssign for RadScalar {
    fn add_assign(&mut self, rhs: RadScalar) {
        *self += &rhs;
    }
}

impl Add<&RadScalar> for &RadScalar {
    type Output = RadScalar;
    fn add(self, rhs: &RadScalar) -> RadScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for RadScalar {
    type Output = RadScalar;
    fn add(mut self, rhs: RadScalar) -> RadScalar {
        self += &rhs;
        self
    }
}

impl Neg for RadScalar {
    type Output = RadScalar;
    fn neg(self) -> RadScalar {
        RadScalar {
            terms: self.terms.into_iter().map(|(r, q)| (r, -q)).collect(),
        }
    }
}

impl Neg for &RadScalar {
    type Output = RadScalar;
    fn neg(self) -> RadScalar {
        -self.clone()
    }
}

impl Sub<&RadScalar> for &RadScalar {
    type Output = RadScalar;
    fn sub(self, rhs: &RadScalar) -> RadScalar {
        self + &(-rhs)
    }
}

impl Sub for RadScalar {
    type Output = RadScalar;
    fn sub(self, rhs: RadScalar) -> RadScalar {
        self + (-rhs)
    }
}

impl Mul<&RadScalar> for &RadScalar {
    type Output = RadScalar;
    fn mul(self, rhs: &RadScalar) -> RadScalar {
        let mut out = RadScalar::zero();
        for (ra, qa) in &self.terms {
            for (rb, qb) in &rhs.terms {
                // sqrt(g*a') * sqrt(g*b') = g * sqrt(a'*b'), and a'*b' stays squarefree
                let g = ra.gcd(rb);
                let radicand = (ra / g) * (rb / g);
                out.push(radicand, qa * qb * BigInt::from(g));
            }
        }
        out
    }
}

impl Mul for RadScalar {
    type Output = RadScalar;
    fn mul(self, rhs: RadScalar) -> RadScalar {
        &self * &rhs
    }
}

impl std::iter::Sum for RadScalar {
    fn sum<I: Iterator<Item = RadScalar>>(iter: I) -> Self {
        iter.fold(RadScalar::zero(), |acc, x| acc + x)
    }
}

/// Renders as e.g. `20/3 + 2*sqrt(5) - 7*sqrt(13)`.
impl fmt::Display for RadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (r, q)) in self.terms.iter().enumerate() {
            let mag = q.abs();
            if idx == 0 {
                if q.is_negative() {
                    write!(f, "-")?;
                }
            } else if q.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (*r, mag.is_one()) {
                (1, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "sqrt({r})")?,
                (_, false) => write!(f, "{mag}*sqrt({r})")?,
            }
        }
        Ok(())
    }
}
