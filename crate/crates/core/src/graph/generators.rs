use std::fmt;
use std::str::FromStr;

use super::Multigraph;
use crate::error::{Error, Result};

/// Named graph families with fixed vertex labelings.
///
/// * `Hypercube(d)`: vertex `i` is the binary string of `i`; edges join strings
///   at Hamming distance one.
/// * `FoldedCube(d)`: the hypercube plus an edge from `i` to its bitwise
///   complement.
/// * `Crown(m)`: `K_{m,m}` on sides `0..m` and `m..2m` without the perfect
///   matching `i ~ m+i`.
/// * `CompleteBipartite(a, b)`: sides `0..a` and `a..a+b`.
/// * `Complete(n)`, `Cycle(n)` (`i ~ i+1 mod n`), `Path(n)` (`i ~ i+1`).
/// * `Herschel`: 11 vertices, 18 edges; the partite sets are
///   `{0, 2, 5, 6, 8, 9}` and `{1, 3, 4, 7, 10}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Hypercube,
    FoldedCube,
    Crown,
    CompleteBipartite,
    Complete,
    Cycle,
    Path,
    Herschel,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Hypercube,
        Family::FoldedCube,
        Family::Crown,
        Family::CompleteBipartite,
        Family::Complete,
        Family::Cycle,
        Family::Path,
        Family::Herschel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Hypercube => "hypercube",
            Family::FoldedCube => "folded_cube",
            Family::Crown => "crown",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Complete => "complete",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Herschel => "herschel",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::Herschel => 0,
            Family::CompleteBipartite => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.replace('-', "_").to_ascii_lowercase();
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

const HERSCHEL_EDGES: [(usize, usize); 18] = [
    (0, 1),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 5),
    (1, 6),
    (2, 3),
    (2, 7),
    (3, 8),
    (3, 9),
    (4, 5),
    (4, 9),
    (5, 10),
    (6, 7),
    (6, 10),
    (7, 8),
    (8, 10),
    (9, 10),
];

fn invalid(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

/// Builds a member of a named family.
pub fn generate(family: Family, params: &[usize]) -> Result<Multigraph> {
    if params.len() != family.arity() {
        return Err(invalid(format!(
            "{family} takes {} parameter(s), got {}",
            family.arity(),
            params.len()
        )));
    }
    match family {
        Family::Hypercube | Family::FoldedCube => {
            let d = params[0];
            let min = if family == Family::FoldedCube { 2 } else { 0 };
            if d < min || d > 6 {
                return Err(invalid(format!("{family} dimension must be in {min}..=6")));
            }
            let n = 1usize << d;
            let mut g = Multigraph::new(n)?;
            for v in 0..n {
                for bit in 0..d {
                    let w = v ^ (1 << bit);
                    if v < w {
                        g.add_edge(v, w)?;
                    }
                }
                if family == Family::FoldedCube && v < (n - 1) ^ v {
                    g.add_edge(v, (n - 1) ^ v)?;
                }
            }
            Ok(g)
        }
        Family::Crown => {
            let m = params[0];
            if m < 2 {
                return Err(invalid("crown needs m >= 2".into()));
            }
            Multigraph::from_edges(
                2 * m,
                (0..m).flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, m + j))),
            )
        }
        Family::CompleteBipartite => {
            let (a, b) = (params[0], params[1]);
            if a == 0 || b == 0 {
                return Err(invalid(
                    "complete_bipartite needs both sides nonempty".into(),
                ));
            }
            Multigraph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
        }
        Family::Complete => {
            let n = params[0];
            if n == 0 {
                return Err(invalid("complete needs n >= 1".into()));
            }
            Multigraph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
        }
        Family::Cycle => {
            let n = params[0];
            if n < 3 {
                return Err(invalid("cycle needs n >= 3".into()));
            }
            Multigraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Path => {
            let n = params[0];
            if n == 0 {
                return Err(invalid("path needs n >= 1".into()));
            }
            Multigraph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Herschel => Multigraph::from_edges(11, HERSCHEL_EDGES),
    }
}
