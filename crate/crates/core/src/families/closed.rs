//! Closed-form HSO expressions, one per family, written out directly in
//! surds rather than derived from the catalog partitions.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::catalog::pow2;
use super::{Family, FamilySpec};
use crate::polyring::RadScalar;

fn surd(k: u64) -> RadScalar {
    RadScalar::sqrt(k).expect("positive radicand")
}

fn z(v: BigInt) -> RadScalar {
    RadScalar::from(v)
}

fn frac(num: BigInt, den: i64) -> RadScalar {
    RadScalar::rational(BigRational::new(num, den.into()))
}

pub(super) fn formula(spec: &FamilySpec) -> RadScalar {
    let p = |name: &str| spec.int(name);
    let k = |v: i64| BigInt::from(v);
    match spec.family() {
        // 2*sqrt5 + sqrt2*(n - 3)
        Family::Path => z(k(2)) * surd(5) + surd(2) * z(p("n") - 3),
        Family::Cycle => surd(2) * z(p("n")),
        // n(n-1)/sqrt2
        Family::Complete => frac(p("n") * (p("n") - 1), 2) * surd(2),
        // n*sqrt(m^2 + n^2)
        Family::CompleteBipartite => {
            let (m, n) = (spec.param("m"), spec.param("n"));
            z(p("n")) * surd(m * m + n * n)
        }
        // (r-1)*sqrt(r^2 - 2r + 2)
        Family::Star => {
            let r = spec.param("r");
            z(p("r") - 1) * surd(r * r - 2 * r + 2)
        }
        // nr/sqrt2
        Family::RRegular => frac(p("n") * p("r"), 2) * surd(2),
        // sqrt5 + sqrt2*(n + m - 4) + 3*sqrt13/2
        Family::Tadpole => {
            surd(5) + surd(2) * z(p("n") + p("m") - 4) + frac(k(3), 2) * surd(13)
        }
        Family::BoronAlphaSheet => {
            let (a, b) = (p("a"), p("b"));
            let ab = &a * &b;
            surd(2) * z(46 * &ab + 46 * &a - 48 * &b - 4)
                + frac(108 * &ab - 2 * &a - 6 * &b - 12, 5) * surd(61)
                + surd(2) * z(114 * &ab - 53 * &a - 51 * &b + 18)
        }
        Family::Petim => {
            let n = spec.param("n");
            surd(5) * z(pow2(n))
                + surd(8) * z(pow2(n + 3) - 9)
                + surd(13) * z(3 * pow2(n) - 3)
        }
        Family::DnPn => {
            let n = p("n");
            z(2 * &n) * surd(10)
                + z(24 * &n) * surd(17)
                + surd(2) * z(10 * &n - 5)
                + surd(13) * z(24 * &n - 3)
                + z(13 * &n) * surd(2)
                + frac(40 * &n, 3)
        }
        Family::Dpzn => {
            let n = spec.param("n");
            surd(8) * z(pow2(n + 3) - 2)
                + surd(13) * z(20 * pow2(n) - 8)
                + surd(18) * (frac(pow2(n + 3), 3) + z(k(4)))
                + frac(k(20), 3)
        }
        Family::Petaa => {
            let n = spec.param("n");
            surd(5) * z(pow2(n + 2))
                + surd(10) * z(pow2(n + 2) - 2)
                + surd(8) * z(pow2(n + 3) - 4)
                + surd(13) * frac(20 * pow2(n) - 9, 2)
        }
        Family::JaggedBenzenoid => {
            let (m, n) = (p("m"), p("n"));
            // 2mn + m/3 - 5n/3 - 4/3
            let last = frac(6 * &m * &n + &m - 5 * &n - 4, 3);
            surd(8) * z(&n + 2) + surd(13) * z(2 * &m + 2 * &n - 2) + surd(18) * last
        }
        Family::Pah => {
            let n = p("n");
            z(6 * &n) * surd(10) + surd(18) * z(3 * &n * &n - &n)
        }
        Family::Vphx => {
            let (m, n) = (p("m"), p("n"));
            z(2 * &m) * surd(13) + surd(2) * z(&m * (9 * &n - 5))
        }
        Family::Vphy => z(3 * p("m") * p("n")) * surd(18),
        Family::PorousGraphene => {
            let (pp, q) = (p("p"), p("q"));
            let pq = &pp * &q;
            surd(8) * z(2 * &pp + 2 * &q + 2)
                + surd(13) * z(6 * &pq + 4 * &pp + 4 * &q - 2)
                + surd(2) * z(3 * &pq + 2 * &pp + 2 * &q - 1)
        }
        Family::Polyphenylene => {
            let (s, t) = (p("s"), p("t"));
            z(4 * (2 * &s + &t)) * surd(2)
                + (z(k(2)) * surd(13) + surd(2)) * z(6 * &s * &t + &s - &t)
        }
    }
}
