//! Minimum edge cuts by shortest-augmenting-path max-flow.
//!
//! Two disjoint connected eggs are separated by collapsing each one to a
//! single vertex and computing a minimum `u`-`v` edge cut in the collapsed
//! multigraph. Every edge contributes its multiplicity as capacity in both
//! directions.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexSet};

/// Contracts the connected set `s` to one new vertex.
///
/// Vertices outside `s` keep their relative order and the new vertex gets the
/// last label, which is returned alongside the graph. Edges inside `s`
/// disappear; an outside vertex `w` is joined to the new vertex by
/// `sum over s in S of mult(s, w)` parallel edges.
pub fn collapse(g: &Multigraph, s: VertexSet) -> Result<(Multigraph, usize)> {
    if !g.is_connected_set(s)? {
        return Err(Error::DisconnectedSet);
    }
    contract(g, s)
}

/// [`collapse`] without the connectivity requirement on `s`.
pub fn contract(g: &Multigraph, s: VertexSet) -> Result<(Multigraph, usize)> {
    g.check_set(s)?;
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let survivors = s.complement(g.n()).to_vec();
    let merged = survivors.len();
    let mut label = vec![merged; g.n()];
    for (i, &v) in survivors.iter().enumerate() {
        label[v] = i;
    }
    let mut h = Multigraph::new(merged + 1)?;
    for (a, b, m) in g.edges() {
        let (la, lb) = (label[a], label[b]);
        // both ends inside the merged set: the edge would be a loop
        if la != lb {
            h.add_edges(la, lb, m)?;
        }
    }
    Ok((h, merged))
}

/// Minimum total multiplicity of edges whose removal separates `u` from `v`.
pub fn min_vertex_cut_edges(g: &Multigraph, u: usize, v: usize) -> Result<u64> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::InvalidParameter(
            "source and sink must be distinct".into(),
        ));
    }
    Ok(MaxFlow::new(g).run(u, v))
}

/// Size of the smallest egg-cut with `e1` on one side and `e2` on the other.
pub fn min_egg_separating_cut(g: &Multigraph, e1: VertexSet, e2: VertexSet) -> Result<u64> {
    g.check_set(e1)?;
    g.check_set(e2)?;
    if e1.is_empty() || e2.is_empty() {
        return Err(Error::EmptySet);
    }
    if !e1.is_disjoint(e2) {
        return Err(Error::OverlappingEggs);
    }
    let (h, _) = collapse(g, e1)?;
    // survivors of the first collapse keep their order
    let relabel = |v: usize| e1.complement(g.n()).iter().position(|w| w == v).unwrap();
    let e2_in_h: VertexSet = e2.iter().map(relabel).collect();
    let (h2, sink) = collapse(&h, e2_in_h)?;
    let source = sink - 1;
    min_vertex_cut_edges(&h2, source, sink)
}

/// Edmonds-Karp on a dense residual matrix.
struct MaxFlow {
    n: usize,
    residual: Vec<u64>,
    neighbors: Vec<Vec<usize>>,
}

impl MaxFlow {
    fn new(g: &Multigraph) -> Self {
        let n = g.n();
        let mut residual = vec![0; n * n];
        for (a, b, m) in g.edges() {
            residual[a * n + b] = u64::from(m);
            residual[b * n + a] = u64::from(m);
        }
        let neighbors = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
        MaxFlow {
            n,
            residual,
            neighbors,
        }
    }

    fn run(mut self, source: usize, sink: usize) -> u64 {
        let mut total = 0;
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::with_capacity(self.n);
        loop {
            parent.fill(usize::MAX);
            parent[source] = source;
            queue.clear();
            queue.push_back(source);
            // neighbour lists are ascending, so ties go to the lowest label
            'bfs: while let Some(a) = queue.pop_front() {
                for &b in &self.neighbors[a] {
                    if parent[b] == usize::MAX && self.residual[a * self.n + b] > 0 {
                        parent[b] = a;
                        if b == sink {
                            break 'bfs;
                        }
                        queue.push_back(b);
                    }
                }
            }
            if parent[sink] == usize::MAX {
                return total;
            }
            let mut bottleneck = u64::MAX;
            let mut b = sink;
            while b != source {
                let a = parent[b];
                bottleneck = bottleneck.min(self.residual[a * self.n + b]);
                b = a;
            }
            let mut b = sink;
            while b != source {
                let a = parent[b];
                self.residual[a * self.n + b] -= bottleneck;
                self.residual[b * self.n + a] += bottleneck;
                b = a;
            }
            total += bottleneck;
        }
    }
}
