//! Simple undirected graphs, their degree-pair edge partitions and
//! M-polynomials, and the edge-by-edge hyperbolic Sombor index.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::polyring::{BiPoly, RadScalar};

/// Undirected simple graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<BTreeSet<usize>>,
}

impl SimpleGraph {
    /// Builds a graph, rejecting self-loops, repeated edges and ids `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidEdge { u, v, reason: format!("vertex id out of range 0..{n}") });
            }
            if u == v {
                return Err(Error::InvalidEdge { u, v, reason: "self-loop".into() });
            }
            if !adj[u].insert(v) {
                return Err(Error::InvalidEdge { u, v, reason: "duplicate edge".into() });
            }
            adj[v].insert(u);
        }
        Ok(Self { adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    /// Each edge once, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(BTreeSet::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(BTreeSet::len).max()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.adj.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    }

    fn check_min_degree(&self) -> Result<()> {
        match self.adj.iter().position(BTreeSet::is_empty) {
            Some(vertex) => Err(Error::DegenerateDegree { vertex }),
            None => Ok(()),
        }
    }

    /// `(min, max)` endpoint degrees of an edge.
    fn degree_pair(&self, u: usize, v: usize) -> (u64, u64) {
        let (a, b) = (self.degree(u) as u64, self.degree(v) as u64);
        (a.min(b), a.max(b))
    }
}

/// Edge counts `m_ij` keyed by degree pairs `(i, j)`, `i <= j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgePartition {
    counts: BTreeMap<(u64, u64), u64>,
}

impl EdgePartition {
    /// Normalizes key order and drops zero counts.
    pub fn from_counts<I>(counts: I) -> Self
    where
        I: IntoIterator<Item = ((u64, u64), u64)>,
    {
        let mut p = Self::default();
        for ((i, j), m) in counts {
            if m > 0 {
                *p.counts.entry((i.min(j), i.max(j))).or_insert(0) += m;
            }
        }
        p
    }

    pub fn get(&self, i: u64, j: u64) -> u64 {
        self.counts.get(&(i.min(j), i.max(j))).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u64, u64), u64)> + '_ {
        self.counts.iter().map(|(k, m)| (*k, *m))
    }

    /// `sum m_ij`, the number of edges.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn to_mpoly(&self) -> BiPoly {
        BiPoly::from_int_terms(self.iter().map(|(k, m)| (k, BigInt::from(m))))
    }

    /// JSON object `{"i,j": count, ...}`.
    pub fn to_json(&self) -> String {
        let map: BTreeMap<String, u64> =
            self.iter().map(|((i, j), m)| (format!("{i},{j}"), m)).collect();
        serde_json::to_string(&map).expect("plain map serializes")
    }
}

pub fn edge_partition(g: &SimpleGraph) -> Result<EdgePartition> {
    g.check_min_degree()?;
    let mut counts = BTreeMap::new();
    for (u, v) in g.edges() {
        *counts.entry(g.degree_pair(u, v)).or_insert(0u64) += 1;
    }
    Ok(EdgePartition { counts })
}

/// `M(G; x, y) = sum m_ij x^i y^j`.
pub fn m_polynomial(g: &SimpleGraph) -> Result<BiPoly> {
    Ok(edge_partition(g)?.to_mpoly())
}

/// `sqrt(i^2 + j^2) / min(i, j)`, the per-edge HSO weight.
pub fn hso_weight(i: u64, j: u64) -> RadScalar {
    let lo = i.min(j);
    assert!(lo > 0, "degree 0 has no HSO weight");
    RadScalar::term(BigRational::new(1.into(), lo.into()), i * i + j * j)
        .expect("i^2 + j^2 > 0")
}

/// Hyperbolic Sombor index summed edge by edge.
pub fn hso_direct(g: &SimpleGraph) -> Result<RadScalar> {
    g.check_min_degree()?;
    let mut acc = RadScalar::zero();
    for (u, v) in g.edges() {
        let (i, j) = g.degree_pair(u, v);
        acc += hso_weight(i, j);
    }
    Ok(acc)
}

/// Values a degree-based index can take.
pub trait IndexValue: Clone + std::fmt::Debug {
    fn zero() -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, m: u64) -> Self;
    /// Equality test used to cross-check the edge and partition sums.
    fn agrees(&self, other: &Self) -> bool;
}

impl IndexValue for RadScalar {
    fn zero() -> Self {
        RadScalar::zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, m: u64) -> Self {
        self.scale_int(&BigInt::from(m))
    }
    fn agrees(&self, other: &Self) -> bool {
        self == other
    }
}

impl IndexValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, m: u64) -> Self {
        self * m as f64
    }
    fn agrees(&self, other: &Self) -> bool {
        let scale = self.abs().max(other.abs()).max(1.0);
        (self - other).abs() <= 1e-12 * scale
    }
}

/// Generic degree-based index `sum_{uv} f(d(u), d(v))`.
///
/// `f` is called with `i <= j`. The edge sum and the partition sum
/// `sum m_ij f(i, j)` are both computed and must agree.
pub fn generic_index<T, F>(g: &SimpleGraph, f: F) -> Result<T>
where
    T: IndexValue,
    F: Fn(u64, u64) -> T,
{
    let partition = edge_partition(g)?;
    let mut by_edge = T::zero();
    for (u, v) in g.edges() {
        let (i, j) = g.degree_pair(u, v);
        by_edge = by_edge.plus(&f(i, j));
    }
    let mut by_class = T::zero();
    for ((i, j), m) in partition.iter() {
        by_class = by_class.plus(&f(i, j).times(m));
    }
    if by_edge.agrees(&by_class) {
        Ok(by_class)
    } else {
        Err(Error::RouteDisagreement(format!(
            "edge sum {by_edge:?} != partition sum {by_class:?}"
        )))
    }
}

/// Parses whitespace-separated vertex pairs, one edge per line.
/// `#` starts a comment; blank lines are skipped.
pub fn read_edge_list(text: &str) -> Result<SimpleGraph> {
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Format {
                line,
                message: format!("expected 2 vertex ids, found {}", tokens.len()),
            });
        }
        let mut ids = [0usize; 2];
        for (slot, tok) in ids.iter_mut().zip(&tokens) {
            *slot = tok.parse().map_err(|_| Error::Parse { line, token: tok.to_string() })?;
        }
        let [u, v] = ids;
        if u == v {
            return Err(Error::Format { line, message: format!("self-loop at vertex {u}") });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Format { line, message: format!("duplicate edge {u}-{v}") });
        }
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Err(Error::Format { line: 0, message: "no edges".into() });
    }
    let n = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0) + 1;
    SimpleGraph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    fn cycle(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> SimpleGraph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        SimpleGraph::from_edges(n, edges).unwrap()
    }

    fn kmn(m: usize, n: usize) -> SimpleGraph {
        let edges = (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v)));
        SimpleGraph::from_edges(m + n, edges).unwrap()
    }

    fn rs(q: i64, r: u64) -> RadScalar {
        RadScalar::term(BigRational::from_integer(q.into()), r).unwrap()
    }

    #[test]
    fn partitions_of_small_graphs() {
        assert_eq!(edge_partition(&path(5)).unwrap(), EdgePartition::from_counts([((1, 2), 2), ((2, 2), 2)]));
        assert_eq!(edge_partition(&cycle(4)).unwrap(), EdgePartition::from_counts([((2, 2), 4)]));
        // tadpole T(4,2): square 0-1-2-3, bridge 0-4, pendant 4-5
        let t = SimpleGraph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]).unwrap();
        let p = edge_partition(&t).unwrap();
        assert_eq!(p, EdgePartition::from_counts([((1, 2), 1), ((2, 2), 2), ((2, 3), 3)]));
        assert_eq!(p.total(), t.edge_count() as u64);
    }

    #[test]
    fn isolated_vertex_is_rejected() {
        let g = SimpleGraph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(edge_partition(&g), Err(Error::DegenerateDegree { vertex: 2 }));
        assert!(hso_direct(&g).is_err());
    }

    #[test]
    fn m_polynomials() {
        assert_eq!(m_polynomial(&complete(4)).unwrap(), BiPoly::monomial(RadScalar::integer(6), 3, 3));
        assert_eq!(m_polynomial(&kmn(2, 3)).unwrap(), BiPoly::monomial(RadScalar::integer(6), 2, 3));
        assert_eq!(m_polynomial(&kmn(1, 4)).unwrap(), BiPoly::monomial(RadScalar::integer(4), 1, 4));
    }

    #[test]
    fn direct_hso() {
        assert_eq!(hso_direct(&cycle(5)).unwrap(), rs(5, 2));
        assert_eq!(hso_direct(&path(3)).unwrap(), rs(2, 5));
        assert_eq!(hso_direct(&kmn(3, 4)).unwrap(), RadScalar::integer(20));
    }

    #[test]
    fn generic_index_examples() {
        let c6 = cycle(6);
        let edges: RadScalar = generic_index(&c6, |_, _| RadScalar::one()).unwrap();
        assert_eq!(edges, RadScalar::integer(6));
        let h: RadScalar = generic_index(&c6, hso_weight).unwrap();
        assert_eq!(h, rs(6, 2));
        let m2: f64 = generic_index(&complete(3), |i, j| (i * j) as f64).unwrap();
        assert_eq!(m2, 12.0);
    }

    #[test]
    fn edge_list_parsing() {
        assert_eq!(read_edge_list("0 1\n1 2").unwrap(), path(3));
        assert_eq!(read_edge_list("# header\n0 1   # first\n\n1\t2\n").unwrap(), path(3));
        assert!(matches!(read_edge_list("0 1\n1 0"), Err(Error::Format { line: 2, .. })));
        assert!(matches!(read_edge_list("0 0"), Err(Error::Format { line: 1, .. })));
        assert!(matches!(read_edge_list("0 a"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(read_edge_list("0 -1"), Err(Error::Parse { .. })));
        assert!(matches!(read_edge_list("0 1 2"), Err(Error::Format { .. })));
        assert!(read_edge_list("# nothing\n").is_err());
    }

    #[test]
    fn connectivity() {
        assert!(path(4).is_connected());
        let g = SimpleGraph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(SimpleGraph::from_edges(2, [(0, 0)]).is_err());
        assert!(SimpleGraph::from_edges(2, [(0, 1), (1, 0)]).is_err());
        assert!(SimpleGraph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn partition_json() {
        let p = EdgePartition::from_counts([((2, 1), 2), ((2, 2), 3)]);
        assert_eq!(p.to_json(), r#"{"1,2":2,"2,2":3}"#);
    }
}
