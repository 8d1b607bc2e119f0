//! Multigraphs on dense vertex labels `0..n` and the structural queries the
//! rest of the crate is built on.

mod generators;
pub(crate) mod io;
mod subsets;
mod vertex_set;

pub use generators::{generate, Family};
pub use io::{parse_edge_list, write_edge_list};
pub use subsets::for_each_connected_subset_rooted;
pub use vertex_set::{Iter as VertexIter, VertexSet};

use std::collections::VecDeque;

use crate::count::ExtendedCount;
use crate::error::{Error, Result};

/// Largest supported vertex count. Vertex sets are 64-bit masks.
pub const MAX_VERTICES: usize = 64;

/// An undirected multigraph without loops.
///
/// Parallel edges are stored as a multiplicity per unordered vertex pair, and
/// every cut size reported by the crate is a sum of multiplicities.
#[derive(Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    mult: Vec<u32>,
    neighbors: Vec<VertexSet>,
    valence: Vec<u64>,
    edge_count: u64,
}

impl Multigraph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Multigraph {
            n,
            mult: vec![0; n * n],
            neighbors: vec![VertexSet::EMPTY; n],
            valence: vec![0; n],
            edge_count: 0,
        })
    }

    /// Builds a graph from a list of edges; repeated pairs become parallel edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Multigraph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.add_edges(u, v, 1)
    }

    /// Adds `count` parallel edges between `u` and `v`.
    pub fn add_edges(&mut self, u: usize, v: usize, count: u32) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop { line: 0, vertex: u });
        }
        if count == 0 {
            return Ok(());
        }
        self.mult[u * self.n + v] += count;
        self.mult[v * self.n + u] += count;
        self.neighbors[u].insert(v);
        self.neighbors[v].insert(u);
        self.valence[u] += u64::from(count);
        self.valence[v] += u64::from(count);
        self.edge_count += u64::from(count);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.edge_count
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Number of parallel edges between `u` and `v`; zero when `u == v`.
    pub fn mult(&self, u: usize, v: usize) -> u32 {
        self.mult[u * self.n + v]
    }

    /// Distinct neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.neighbors[v]
    }

    /// Distinct neighbours of any vertex of `s`, excluding `s` itself.
    pub fn neighborhood(&self, s: VertexSet) -> VertexSet {
        s.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(self.neighbors[v]))
            .difference(s)
    }

    /// Edges `(u, v, multiplicity)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v, self.mult(u, v)))
        })
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.max() {
            Some(v) if v >= self.n => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            }),
            _ => Ok(()),
        }
    }

    /// Number of edge ends at `v`, counted with multiplicity.
    pub fn valence(&self, v: usize) -> Result<u64> {
        self.check_vertex(v)?;
        Ok(self.valence[v])
    }

    pub fn valences(&self) -> &[u64] {
        &self.valence
    }

    /// Minimum valence; zero for the empty graph.
    pub fn min_valence(&self) -> u64 {
        self.valence.iter().copied().min().unwrap_or(0)
    }

    pub fn is_simple(&self) -> bool {
        self.edges().all(|(_, _, m)| m <= 1)
    }

    /// First pair carrying parallel edges, if any.
    pub fn parallel_pair(&self) -> Option<(usize, usize)> {
        self.edges()
            .find(|&(_, _, m)| m > 1)
            .map(|(u, v, _)| (u, v))
    }

    /// Length of a shortest cycle. A pair of parallel edges is a 2-cycle, and
    /// forests have infinite girth.
    pub fn girth(&self) -> ExtendedCount {
        if self.parallel_pair().is_some() {
            return ExtendedCount::Finite(2);
        }
        // BFS from every root; a non-tree edge {u, w} closes a closed walk of
        // length dist(u) + dist(w) + 1 containing a cycle no longer than that,
        // and the root on a shortest cycle sees it exactly.
        let mut best: Option<u64> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if (2 * dist[u] + 1) as u64 >= b {
                        break;
                    }
                }
                for w in self.neighbors[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = (dist[u] + dist[w] + 1) as u64;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best.map_or(ExtendedCount::Infinite, ExtendedCount::Finite)
    }

    /// `|E(S, S^C)|` for a nonempty proper subset `S`.
    pub fn outdegree(&self, s: VertexSet) -> Result<u64> {
        self.check_set(s)?;
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        if s.len() == self.n {
            return Err(Error::FullSet);
        }
        Ok(self.cut_size(s))
    }

    /// Number of edges with exactly one end in `s`; no validation.
    pub fn cut_size(&self, s: VertexSet) -> u64 {
        let outside = s.complement(self.n);
        let mut total = 0u64;
        for u in s {
            let row = &self.mult[u * self.n..(u + 1) * self.n];
            for w in self.neighbors[u].intersection(outside) {
                total += u64::from(row[w]);
            }
        }
        total
    }

    /// Number of edges with one end in `a` and the other in `b`.
    pub fn edges_between(&self, a: VertexSet, b: VertexSet) -> u64 {
        a.iter()
            .map(|u| {
                self.neighbors[u]
                    .intersection(b)
                    .iter()
                    .map(|w| u64::from(self.mult(u, w)))
                    .sum::<u64>()
            })
            .sum()
    }

    /// Vertices of `within` reachable from `start` inside `G[within]`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.neighbors[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connectivity of `G[s]` for nonempty `s`, without validation.
    pub fn induces_connected(&self, s: VertexSet) -> bool {
        match s.first() {
            Some(v) => self.reach(v, s) == s,
            None => false,
        }
    }

    /// Whether `G[S]` is connected.
    pub fn is_connected_set(&self, s: VertexSet) -> Result<bool> {
        self.check_set(s)?;
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(self.induces_connected(s))
    }

    /// Whether the whole graph is connected. The empty graph is not.
    pub fn is_connected(&self) -> bool {
        self.induces_connected(self.vertices())
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::DisconnectedGraph)
        }
    }

    /// Components of `G[s]`, ordered by smallest member.
    pub fn connected_components(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut rest = s;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reach(v, rest);
            out.push(comp);
            rest = rest.difference(comp);
        }
        out
    }

    /// Size of the largest component of `G[s]`.
    pub fn largest_component(&self, s: VertexSet) -> usize {
        let mut rest = s;
        let mut best = 0;
        while let Some(v) = rest.first() {
            let comp = self.reach(v, rest);
            best = best.max(comp.len());
            rest = rest.difference(comp);
        }
        best
    }

    /// All connected vertex sets of size `k`, in lexicographic order.
    pub fn enumerate_connected_subsets(&self, k: usize) -> Result<Vec<VertexSet>> {
        if k == 0 || k > self.n {
            return Err(Error::InvalidParameter(format!(
                "subset size {k} outside 1..={}",
                self.n
            )));
        }
        let mut out = Vec::new();
        for root in 0..self.n {
            for_each_connected_subset_rooted(self, root, self.vertices(), k, |s| {
                if s.len() == k {
                    out.push(s);
                }
            });
        }
        out.sort_unstable();
        Ok(out)
    }

    /// A proper 2-colouring as `(side containing vertex 0, other side)`.
    ///
    /// Each component's smallest vertex is placed on the first side.
    pub fn bipartition(&self) -> Result<(VertexSet, VertexSet)> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return Err(Error::NotBipartite(u));
                    }
                }
            }
        }
        let first = (0..self.n).filter(|&v| color[v] == 0).collect();
        let second = (0..self.n).filter(|&v| color[v] == 1).collect();
        Ok((first, second))
    }

    /// Whether the graph contains three pairwise adjacent vertices.
    pub fn has_triangle(&self) -> bool {
        self.edges()
            .any(|(u, v, _)| !self.neighbors[u].is_disjoint(self.neighbors[v]))
    }

    /// The subgraph induced by `s`, relabelled to `0..|s|` in ascending order.
    pub fn induced(&self, s: VertexSet) -> Multigraph {
        let members = s.to_vec();
        let mut g = Multigraph::new(members.len()).expect("subgraph is smaller");
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                let m = self.mult(u, v);
                if m > 0 {
                    g.add_edges(i, j, m).expect("labels in range");
                }
            }
        }
        g
    }
}

impl std::fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Multigraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
