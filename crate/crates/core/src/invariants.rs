//! Exact graph parameters: order-`k` edge connectivity, minimum `k`-subgraph
//! outdegree, and `l`-component independence.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::count::ExtendedCount;
use crate::error::{Error, Result};
use crate::graph::{for_each_connected_subset_rooted, Multigraph, VertexSet};

/// Which parameter an [`InvariantValue`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InvariantKind {
    LambdaK,
    XiK,
    AlphaC,
    Girth,
    MinValence,
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvariantKind::LambdaK => "lambda_k",
            InvariantKind::XiK => "xi_k",
            InvariantKind::AlphaC => "alpha_c",
            InvariantKind::Girth => "girth",
            InvariantKind::MinValence => "min_valence",
        })
    }
}

/// A computed parameter together with its `k` or `l` (zero when unused).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantValue {
    pub kind: InvariantKind,
    pub parameter: usize,
    pub value: ExtendedCount,
}

impl InvariantValue {
    pub fn compute(g: &Multigraph, kind: InvariantKind, parameter: usize) -> Result<Self> {
        let value = match kind {
            InvariantKind::LambdaK => lambda_k(g, parameter)?,
            InvariantKind::XiK => xi_k(g, parameter)?,
            InvariantKind::AlphaC => ExtendedCount::Finite(alpha_component(g, parameter) as u64),
            InvariantKind::Girth => g.girth(),
            InvariantKind::MinValence => ExtendedCount::Finite(g.min_valence()),
        };
        let parameter = match kind {
            InvariantKind::Girth | InvariantKind::MinValence => 0,
            _ => parameter,
        };
        Ok(InvariantValue {
            kind,
            parameter,
            value,
        })
    }
}

/// Order-`k` edge connectivity.
///
/// The fewest edges whose removal disconnects `G` into components of at least
/// `k` vertices each, or infinite when no such edge set exists. A minimal
/// such edge set is the boundary of one component, and shrinking to the
/// component of each side that keeps the cut minimal leaves both sides
/// connected, so the search runs over bipartitions `(A, A^C)` with both sides
/// connected and at least `k` vertices. `A` is anchored at vertex 0.
pub fn lambda_k(g: &Multigraph, k: usize) -> Result<ExtendedCount> {
    if k == 0 {
        return Err(Error::InvalidParameter("lambda_k needs k >= 1".into()));
    }
    g.require_connected()?;
    let n = g.n();
    if n < 2 * k {
        return Ok(ExtendedCount::Infinite);
    }
    let all = g.vertices();
    let mut best: Option<u64> = None;
    for_each_connected_subset_rooted(g, 0, all, n - k, |a| {
        if a.len() < k {
            return;
        }
        let rest = a.complement(n);
        if g.induces_connected(rest) {
            let cut = g.cut_size(a);
            best = Some(best.map_or(cut, |b| b.min(cut)));
        }
    });
    Ok(best.map_or(ExtendedCount::Infinite, ExtendedCount::Finite))
}

/// Minimum outdegree of a connected `k`-vertex set.
pub fn xi_k(g: &Multigraph, k: usize) -> Result<ExtendedCount> {
    let sets = g.enumerate_connected_subsets(k)?;
    Ok(ExtendedCount::min_of(
        sets.into_iter().map(|s| g.cut_size(s)),
    ))
}

/// A connected `k`-set of minimum outdegree, first in lexicographic order.
pub fn xi_k_witness(g: &Multigraph, k: usize) -> Result<Option<VertexSet>> {
    let sets = g.enumerate_connected_subsets(k)?;
    Ok(sets.into_iter().min_by_key(|&s| g.cut_size(s)))
}

/// Whether `lambda_k(G) = xi_k(G)`, with two infinite values counting as equal.
pub fn is_lambda_k_optimal(g: &Multigraph, k: usize) -> Result<bool> {
    let lambda = lambda_k(g, k)?;
    let xi = if k <= g.n() {
        xi_k(g, k)?
    } else {
        ExtendedCount::Infinite
    };
    Ok(lambda == xi)
}

/// Largest vertex set whose induced components all have at most `l` vertices.
pub fn alpha_component(g: &Multigraph, l: usize) -> usize {
    alpha_component_witness(g, l).len()
}

/// A maximum `l`-component independent set.
///
/// Branch and bound over vertices in label order, including before excluding.
/// A vertex may join only if its component in the chosen set stays within `l`
/// vertices. The bound counts the chosen vertices plus the undecided vertices
/// that could still join on their own.
pub fn alpha_component_witness(g: &Multigraph, l: usize) -> VertexSet {
    let n = g.n();
    if l == 0 || n == 0 {
        return VertexSet::EMPTY;
    }
    if l >= n {
        return g.vertices();
    }
    let mut search = AlphaSearch {
        g,
        limit: l,
        best: VertexSet::EMPTY,
    };
    search.branch(0, VertexSet::EMPTY);
    search.best
}

struct AlphaSearch<'a> {
    g: &'a Multigraph,
    limit: usize,
    best: VertexSet,
}

impl AlphaSearch<'_> {
    fn fits(&self, chosen: VertexSet, v: usize) -> bool {
        let with = chosen.with(v);
        self.g.reach(v, with).len() <= self.limit
    }

    fn branch(&mut self, next: usize, chosen: VertexSet) {
        let n = self.g.n();
        if chosen.len() > self.best.len() {
            self.best = chosen;
        }
        if next == n {
            return;
        }
        let addable = (next..n).filter(|&v| self.fits(chosen, v)).count();
        if chosen.len() + addable <= self.best.len() {
            return;
        }
        if self.fits(chosen, next) {
            self.branch(next + 1, chosen.with(next));
        }
        self.branch(next + 1, chosen);
    }
}
