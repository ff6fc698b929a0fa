//! Parametric edge partitions and stated vertex/edge counts.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Family, FamilySpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedCounts {
    pub vertices: Option<BigInt>,
    pub edges: BigInt,
}

pub(crate) fn pow2(e: u64) -> BigInt {
    BigInt::from(1) << e
}

fn i(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Raw partition counts `m_ij`; signed and possibly fractional outside the
/// structural domain.
pub(super) fn partition(spec: &FamilySpec) -> Vec<((u64, u64), BigRational)> {
    let int_terms = |terms: Vec<((u64, u64), BigInt)>| {
        terms
            .into_iter()
            .map(|(k, m)| (k, BigRational::from_integer(m)))
            .collect::<Vec<_>>()
    };
    let p = |name: &str| spec.int(name);
    match spec.family() {
        Family::Path => int_terms(vec![((1, 2), i(2)), ((2, 2), p("n") - 3)]),
        Family::Cycle => int_terms(vec![((2, 2), p("n"))]),
        Family::Complete => {
            let n = spec.param("n");
            let d = n.saturating_sub(1);
            vec![((d, d), BigRational::new(p("n") * (p("n") - 1), i(2)))]
        }
        Family::CompleteBipartite => {
            let (m, n) = (spec.param("m"), spec.param("n"));
            int_terms(vec![((m.min(n), m.max(n)), p("m") * p("n"))])
        }
        Family::Star => {
            let r = spec.param("r");
            int_terms(vec![((1, r.saturating_sub(1)), p("r") - 1)])
        }
        Family::RRegular => {
            let r = spec.param("r");
            vec![((r, r), BigRational::new(p("n") * p("r"), i(2)))]
        }
        Family::Tadpole => {
            int_terms(vec![((1, 2), i(1)), ((2, 2), p("n") + p("m") - 4), ((2, 3), i(3))])
        }
        Family::BoronAlphaSheet => {
            let (a, b) = (p("a"), p("b"));
            let ab = &a * &b;
            int_terms(vec![
                ((5, 5), 46 * &ab + 46 * &a - 48 * &b - 4),
                ((5, 6), 108 * &ab - 2 * &a - 6 * &b - 12),
                ((6, 6), 114 * &ab - 53 * &a - 51 * &b + 18),
            ])
        }
        Family::Petim => {
            let n = spec.param("n");
            int_terms(vec![
                ((1, 2), pow2(n)),
                ((2, 2), pow2(n + 4) - 18),
                ((2, 3), 3 * pow2(n + 1) - 6),
            ])
        }
        Family::DnPn => {
            let n = p("n");
            int_terms(vec![
                ((1, 3), 2 * &n),
                ((1, 4), 24 * &n),
                ((2, 2), 10 * &n - 5),
                ((2, 3), 48 * &n - 6),
                ((3, 3), 13 * &n),
                ((3, 4), 8 * &n),
            ])
        }
        Family::Dpzn => {
            let t = pow2(spec.param("n"));
            int_terms(vec![
                ((2, 2), 16 * &t - 4),
                ((2, 3), 40 * &t - 16),
                ((3, 3), 8 * &t + 12),
                ((3, 4), i(4)),
            ])
        }
        Family::Petaa => {
            let n = spec.param("n");
            int_terms(vec![
                ((1, 2), pow2(n + 2)),
                ((1, 3), pow2(n + 2) - 2),
                ((2, 2), pow2(n + 4) - 8),
                ((2, 3), 20 * pow2(n) - 9),
            ])
        }
        Family::JaggedBenzenoid => {
            let (m, n) = (p("m"), p("n"));
            int_terms(vec![
                ((2, 2), 2 * &n + 4),
                ((2, 3), 4 * &m + 4 * &n - 4),
                ((3, 3), 6 * &m * &n + &m - 5 * &n - 4),
            ])
        }
        Family::Pah => {
            let n = p("n");
            int_terms(vec![((1, 3), 6 * &n), ((3, 3), 9 * &n * &n - 3 * &n)])
        }
        Family::Vphx => {
            let (m, n) = (p("m"), p("n"));
            int_terms(vec![((2, 3), 4 * &m), ((3, 3), &m * (9 * &n - 5))])
        }
        Family::Vphy => int_terms(vec![((3, 3), 9 * p("m") * p("n"))]),
        Family::PorousGraphene => {
            let (pp, q) = (p("p"), p("q"));
            let pq = &pp * &q;
            int_terms(vec![
                ((2, 2), 4 * &pp + 4 * &q + 4),
                ((2, 3), 12 * &pq + 8 * &pp + 8 * &q - 4),
                ((3, 3), 3 * &pq + 2 * &pp + 2 * &q - 1),
            ])
        }
        Family::Polyphenylene => {
            let (s, t) = (p("s"), p("t"));
            let core = 6 * &s * &t + &s - &t;
            int_terms(vec![
                ((2, 2), 4 * (2 * &s + &t)),
                ((2, 3), 4 * &core),
                ((3, 3), core),
            ])
        }
    }
}

pub(super) fn expected_counts(spec: &FamilySpec) -> Option<ExpectedCounts> {
    let p = |name: &str| spec.int(name);
    let both = |v: BigInt, e: BigInt| Some(ExpectedCounts { vertices: Some(v), edges: e });
    match spec.family() {
        Family::Path => both(p("n"), p("n") - 1),
        Family::Cycle => both(p("n"), p("n")),
        Family::Complete => both(p("n"), p("n") * (p("n") - 1) / 2),
        Family::CompleteBipartite => both(p("m") + p("n"), p("m") * p("n")),
        Family::Star => both(p("r"), p("r") - 1),
        Family::RRegular => both(p("n"), p("n") * p("r") / 2),
        Family::Tadpole => both(p("n") + p("m"), p("n") + p("m")),
        Family::BoronAlphaSheet => {
            let (a, b) = (p("a"), p("b"));
            both(96 * &a * &b, 268 * &a * &b - 9 * &a - 9 * &b + 2)
        }
        Family::JaggedBenzenoid => {
            let (m, n) = (p("m"), p("n"));
            both(4 * &m * &n + 4 * &m + 2 * &n - 2, 6 * &m * &n + 5 * &m + &n - 4)
        }
        Family::Pah => {
            let n = p("n");
            both(6 * &n * &n + 6 * &n, 9 * &n * &n + 3 * &n)
        }
        Family::Vphx | Family::Vphy => {
            let mn = p("m") * p("n");
            both(6 * &mn, 9 * &mn)
        }
        Family::PorousGraphene => {
            let (pp, q) = (p("p"), p("q"));
            both(12 * &pp * &q + 12 * &pp + 12 * &q, 15 * &pp * &q + 14 * &pp + 14 * &q - 1)
        }
        Family::Polyphenylene => {
            let (s, t) = (p("s"), p("t"));
            both(24 * &s * &t + 12 * &s, 30 * &s * &t + 13 * &s - &t)
        }
        Family::Petim | Family::DnPn | Family::Dpzn | Family::Petaa => None,
    }
}
