use super::{Family, FamilySpec};
use crate::graphs::SimpleGraph;

fn graph(n: usize, edges: Vec<(usize, usize)>) -> SimpleGraph {
    SimpleGraph::from_edges(n, edges).expect("generator emits a simple graph")
}

fn path_edges(offset: usize, len: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..len).map(move |v| (offset + v - 1, offset + v))
}

fn cycle_edges(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).map(move |v| (v, (v + 1) % n))
}

fn complete_bipartite(m: usize, n: usize) -> SimpleGraph {
    graph(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))).collect())
}

/// Circulant `C_n(1, ..., floor(r/2))`, plus the antipodal matching for odd `r`.
fn circulant_regular(n: usize, r: usize) -> SimpleGraph {
    let mut edges: Vec<(usize, usize)> =
        (1..=r / 2).flat_map(|d| (0..n).map(move |v| (v, (v + d) % n))).collect();
    if r % 2 == 1 {
        edges.extend((0..n / 2).map(|v| (v, v + n / 2)));
    }
    graph(n, edges)
}

/// Caller has already checked the parameter domain.
pub(super) fn build(spec: &FamilySpec) -> SimpleGraph {
    let p = |name: &str| spec.param(name) as usize;
    match spec.family() {
        Family::Path => graph(p("n"), path_edges(0, p("n")).collect()),
        Family::Cycle => graph(p("n"), cycle_edges(p("n")).collect()),
        Family::Complete => {
            let n = p("n");
            graph(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect())
        }
        Family::CompleteBipartite => complete_bipartite(p("m"), p("n")),
        Family::Star => complete_bipartite(1, p("r") - 1),
        Family::RRegular => circulant_regular(p("n"), p("r")),
        // cycle on 0..n, tail on n..n+m, bridge 0 -- n
        Family::Tadpole => {
            let (n, m) = (p("n"), p("m"));
            let mut edges: Vec<_> = cycle_edges(n).collect();
            edges.push((0, n));
            edges.extend(path_edges(n, m));
            graph(n + m, edges)
        }
        other => unreachable!("{other} has no explicit constructor"),
    }
}
