#![allow(dead_code)]

use std::collections::HashMap;

use mpoly_topo::polyring::RadScalar;
use mpoly_topo::SimpleGraph;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

/// Connected simple graph on `n` vertices: a random recursive tree plus
/// extra edges with a per-graph density, then relabelled.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize) -> SimpleGraph {
    let density: f64 = rng.random_range(0.0..0.7);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 2..n {
            if !edges.contains(&(u, v)) && rng.random_bool(density) {
                edges.push((u, v));
            }
        }
    }
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    SimpleGraph::from_edges(n, edges.into_iter().map(|(u, v)| (label[u], label[v]))).unwrap()
}

/// Degrees recomputed from the edge list alone.
pub fn degrees(g: &SimpleGraph) -> Vec<u64> {
    let mut d = vec![0u64; g.vertex_count()];
    for (u, v) in g.edges() {
        d[u] += 1;
        d[v] += 1;
    }
    d
}

/// Floating-point HSO straight from the edge definition.
pub fn hso_float(g: &SimpleGraph) -> f64 {
    let d = degrees(g);
    g.edges()
        .map(|(u, v)| {
            let (a, b) = (d[u] as f64, d[v] as f64);
            (a * a + b * b).sqrt() / a.min(b)
        })
        .sum()
}

pub fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}

/// `c * sqrt(r)` with `c` an integer.
pub fn surd(c: i64, r: u64) -> RadScalar {
    RadScalar::term(q(c, 1), r).unwrap()
}

/// Naive polynomial: a bag of `(a, b, coeff)` terms, merged only on demand.
pub type TermList = Vec<(u64, u64, RadScalar)>;

pub fn merge(terms: &TermList) -> HashMap<(u64, u64), RadScalar> {
    let mut out: HashMap<(u64, u64), RadScalar> = HashMap::new();
    for (a, b, c) in terms {
        let slot = out.entry((*a, *b)).or_default();
        *slot = &*slot + c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn relative_eq(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}
