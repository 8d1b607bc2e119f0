//! Chip-firing on multigraphs: divisors, firing moves, q-reduced
//! representatives, positive rank, and gonality.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::count::ExtendedCount;
use crate::error::{Error, Result};
use crate::graph::io::content_lines;
use crate::graph::{Multigraph, VertexSet};
use crate::invariants::alpha_component_witness;

/// An integer number of chips on each vertex; negative entries are debt.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Divisor(Vec<i64>);

impl Divisor {
    pub fn new(chips: Vec<i64>) -> Self {
        Divisor(chips)
    }

    pub fn zero(n: usize) -> Self {
        Divisor(vec![0; n])
    }

    /// One chip on each vertex of `s`.
    pub fn indicator(n: usize, s: VertexSet) -> Self {
        Divisor((0..n).map(|v| i64::from(s.contains(v))).collect())
    }

    pub fn chips(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn support(&self) -> VertexSet {
        (0..self.0.len()).filter(|&v| self.0[v] != 0).collect()
    }

    fn bind(&self, g: &Multigraph) -> Result<()> {
        if self.0.len() == g.n() {
            Ok(())
        } else {
            Err(Error::DivisorLength {
                got: self.0.len(),
                n: g.n(),
            })
        }
    }

    /// Parses a single line of whitespace-separated integers (`#` comments allowed).
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (line, body) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "empty divisor file".into(),
        })?;
        let chips = body
            .split_whitespace()
            .map(|t| {
                t.parse::<i64>().map_err(|_| Error::Parse {
                    line,
                    message: format!("expected an integer, found `{t}`"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some((extra, _)) = lines.next() {
            return Err(Error::Parse {
                line: extra,
                message: "a divisor occupies a single line".into(),
            });
        }
        Ok(Divisor(chips))
    }

    /// Parses and checks the length against `g`.
    pub fn parse_for(g: &Multigraph, text: &str) -> Result<Self> {
        let d = Divisor::parse(text)?;
        d.bind(g)?;
        Ok(d)
    }
}

impl std::ops::Index<usize> for Divisor {
    type Output = i64;

    fn index(&self, v: usize) -> &i64 {
        &self.0[v]
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// `v` sends one chip along each incident edge.
pub fn fire_vertex(g: &Multigraph, d: &Divisor, v: usize) -> Result<Divisor> {
    d.bind(g)?;
    g.check_vertex(v)?;
    let mut out = d.clone();
    out.0[v] -= g.valences()[v] as i64;
    for w in g.neighbors(v) {
        out.0[w] += i64::from(g.mult(v, w));
    }
    Ok(out)
}

/// Every vertex of `s` fires once: one chip crosses each edge of `E(S, S^C)`.
pub fn fire_subset(g: &Multigraph, d: &Divisor, s: VertexSet) -> Result<Divisor> {
    d.bind(g)?;
    g.outdegree(s)?;
    let mut out = d.clone();
    fire_times(g, &mut out.0, s, 1);
    Ok(out)
}

fn fire_times(g: &Multigraph, chips: &mut [i64], s: VertexSet, times: i64) {
    let outside = s.complement(g.n());
    for u in s {
        for w in g.neighbors(u).intersection(outside) {
            let moved = times * i64::from(g.mult(u, w));
            chips[u] -= moved;
            chips[w] += moved;
        }
    }
}

/// Edges from `v` into `s`, with multiplicity.
fn edges_into(g: &Multigraph, v: usize, s: VertexSet) -> i64 {
    g.neighbors(v)
        .intersection(s)
        .iter()
        .map(|w| i64::from(g.mult(v, w)))
        .sum()
}

/// Vertices burnt when a fire starts at `q`: a vertex catches fire once
/// the burning edges reaching it outnumber its chips.
fn burn(g: &Multigraph, chips: &[i64], q: usize) -> VertexSet {
    let mut burnt = VertexSet::singleton(q);
    loop {
        let frontier = g.neighborhood(burnt);
        let catching: VertexSet = frontier
            .iter()
            .filter(|&v| edges_into(g, v, burnt) > chips[v])
            .collect();
        if catching.is_empty() {
            return burnt;
        }
        burnt = burnt.union(catching);
    }
}

/// The `q`-reduced divisor equivalent to `d`.
///
/// Debt away from `q` is cleared layer by layer: for each BFS distance from
/// the farthest inwards, the ball of smaller radius fires until the layer is
/// out of debt. Dhar's burning algorithm then repeatedly fires the unburnt
/// set as many times as stays legal, until the fire from `q` burns
/// everything.
pub fn q_reduce(g: &Multigraph, d: &Divisor, q: usize) -> Result<Divisor> {
    d.bind(g)?;
    g.check_vertex(q)?;
    g.require_connected()?;
    let n = g.n();
    let mut chips = d.0.clone();
    let cap =
        4 * n as u64 * (d.0.iter().map(|c| c.unsigned_abs()).sum::<u64>() + g.edge_count()).max(1);
    let mut steps = 0u64;
    let mut step = || {
        steps += 1;
        if steps > cap {
            Err(Error::Internal(format!(
                "q-reduction exceeded {cap} firing rounds"
            )))
        } else {
            Ok(())
        }
    };

    let dist = bfs_distances(g, q);
    let depth = dist.iter().copied().max().unwrap_or(0);
    for layer in (1..=depth).rev() {
        let inner: VertexSet = (0..n).filter(|&v| dist[v] < layer).collect();
        let times = (0..n)
            .filter(|&v| dist[v] == layer && chips[v] < 0)
            .map(|v| {
                let pull = edges_into(g, v, inner);
                (-chips[v] + pull - 1) / pull
            })
            .max();
        if let Some(times) = times {
            step()?;
            fire_times(g, &mut chips, inner, times);
        }
    }

    let all = g.vertices();
    loop {
        let burnt = burn(g, &chips, q);
        if burnt == all {
            return Ok(Divisor(chips));
        }
        let unburnt = burnt.complement(n);
        // each unburnt vertex holds at least as many chips as edges to the fire
        let times = unburnt
            .iter()
            .filter_map(|v| {
                let out = edges_into(g, v, burnt);
                (out > 0).then(|| chips[v] / out)
            })
            .min()
            .unwrap_or(1)
            .max(1);
        step()?;
        fire_times(g, &mut chips, unburnt, times);
    }
}

fn bfs_distances(g: &Multigraph, q: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[q] = 0;
    let mut queue = VecDeque::from([q]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Whether `d1` and `d2` differ by a sequence of chip-firing moves.
pub fn is_equivalent(g: &Multigraph, d1: &Divisor, d2: &Divisor) -> Result<bool> {
    d1.bind(g)?;
    d2.bind(g)?;
    if d1.degree() != d2.degree() {
        return Ok(false);
    }
    if g.n() == 0 {
        return Ok(true);
    }
    Ok(q_reduce(g, d1, 0)? == q_reduce(g, d2, 0)?)
}

/// Whether `d - (q)` is equivalent to an effective divisor for every `q`,
/// i.e. whether the `q`-reduced form of `d` keeps a chip on `q` for all `q`.
pub fn has_positive_rank(g: &Multigraph, d: &Divisor) -> Result<bool> {
    d.bind(g)?;
    g.require_connected()?;
    if d.degree() < 1 {
        return Ok(false);
    }
    let effective = d.is_effective();
    for q in 0..g.n() {
        if effective && d[q] >= 1 {
            continue;
        }
        if q_reduce(g, d, q)?[q] < 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of [`gonality_bruteforce`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GonalitySearch {
    /// The gonality and the lexicographically first effective witness of that degree.
    Found { gonality: u64, witness: Divisor },
    /// No positive-rank divisor of degree at most `max_degree` exists.
    ExceedsMaxDegree { max_degree: u64 },
}

impl GonalitySearch {
    pub fn gonality(&self) -> Option<u64> {
        match self {
            GonalitySearch::Found { gonality, .. } => Some(*gonality),
            GonalitySearch::ExceedsMaxDegree { .. } => None,
        }
    }
}

/// Minimum degree of a positive-rank divisor, by trying every effective
/// divisor of degree `1, 2, ...` in lexicographic order of chip vectors.
///
/// `max_degree` defaults to `n`; connected graphs have gonality at most `n - 1`.
pub fn gonality_bruteforce(g: &Multigraph, max_degree: Option<u64>) -> Result<GonalitySearch> {
    g.require_connected()?;
    let n = g.n();
    let max_degree = max_degree.unwrap_or(n as u64);
    for degree in 1..=max_degree {
        let mut chips = vec![0i64; n];
        if let Some(witness) = first_positive_rank(g, &mut chips, 0, degree as i64)? {
            return Ok(GonalitySearch::Found {
                gonality: degree,
                witness,
            });
        }
    }
    Ok(GonalitySearch::ExceedsMaxDegree { max_degree })
}

/// Walks effective divisors of the given remaining degree over positions
/// `pos..n` in ascending lexicographic order.
fn first_positive_rank(
    g: &Multigraph,
    chips: &mut [i64],
    pos: usize,
    remaining: i64,
) -> Result<Option<Divisor>> {
    let n = chips.len();
    if pos == n - 1 {
        chips[pos] = remaining;
        let d = Divisor(chips.to_vec());
        chips[pos] = 0;
        return Ok(has_positive_rank(g, &d)?.then_some(d));
    }
    for here in 0..=remaining {
        chips[pos] = here;
        if let Some(d) = first_positive_rank(g, chips, pos + 1, remaining - here)? {
            chips[pos] = 0;
            return Ok(Some(d));
        }
    }
    chips[pos] = 0;
    Ok(None)
}

/// Result of [`check_strong_separator`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongSeparatorReport {
    pub separator: VertexSet,
    pub valid: bool,
    /// First component of `G - S` that is not a tree or receives two edges
    /// from one separator vertex.
    pub violating_component: Option<VertexSet>,
}

impl StrongSeparatorReport {
    /// `gon(G) <= |S|` when the separator is valid.
    pub fn gonality_bound(&self) -> Option<u64> {
        self.valid.then(|| self.separator.len() as u64)
    }
}

/// Checks that every component of `G - S` is a tree and that each vertex of
/// `S` has at most one edge into each component.
pub fn check_strong_separator(g: &Multigraph, s: VertexSet) -> Result<StrongSeparatorReport> {
    g.check_set(s)?;
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let rest = s.complement(g.n());
    let violating = g.connected_components(rest).into_iter().find(|&c| {
        let internal: u64 = c.iter().map(|v| edges_into(g, v, c) as u64).sum::<u64>() / 2;
        let is_tree = internal + 1 == c.len() as u64;
        !is_tree || s.iter().any(|v| edges_into(g, v, c) > 1)
    });
    Ok(StrongSeparatorReport {
        separator: s,
        valid: violating.is_none(),
        violating_component: violating,
    })
}

/// Upper bound on gonality from the strong separator `S = V - I`, where `I` is
/// a maximum `l`-component independent set with `l = min(girth - 2, n - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorBound {
    pub bound: u64,
    pub separator: VertexSet,
    pub component_order: usize,
}

pub fn gonality_upper_by_separator(g: &Multigraph) -> Result<SeparatorBound> {
    g.require_connected()?;
    let n = g.n();
    let l = match g.girth() {
        ExtendedCount::Finite(girth) => (girth as usize - 2).min(n - 1),
        ExtendedCount::Infinite => n - 1,
    };
    let independent = alpha_component_witness(g, l);
    let separator = independent.complement(n);
    let report = check_strong_separator(g, separator)?;
    if !report.valid {
        return Err(Error::Internal(format!(
            "complement of a maximum {l}-component independent set is not a strong separator"
        )));
    }
    Ok(SeparatorBound {
        bound: separator.len() as u64,
        separator,
        component_order: l,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn d(v: &[i64]) -> Divisor {
        Divisor::new(v.to_vec())
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn fire_vertex_examples() {
        let k3 = generate(Family::Complete, &[3]).unwrap();
        assert_eq!(fire_vertex(&k3, &d(&[3, 0, 0]), 0).unwrap(), d(&[1, 1, 1]));
        let double = Multigraph::from_edges(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(fire_vertex(&double, &d(&[2, 0]), 0).unwrap(), d(&[0, 2]));
        assert!(fire_vertex(&k3, &d(&[0, 0, 0]), 3).is_err());
        assert!(fire_vertex(&k3, &d(&[0, 0]), 0).is_err());
    }

    #[test]
    fn firing_everything_is_the_identity() {
        let g = generate(Family::Herschel, &[]).unwrap();
        let start = Divisor::new((0..11).map(|i| i as i64 - 4).collect());
        let mut cur = start.clone();
        for v in 0..g.n() {
            cur = fire_vertex(&g, &cur, v).unwrap();
        }
        assert_eq!(cur, start);
    }

    #[test]
    fn fire_subset_examples() {
        let c4 = generate(Family::Cycle, &[4]).unwrap();
        assert_eq!(
            fire_subset(&c4, &d(&[1, 0, 1, 0]), set(&[0, 2])).unwrap(),
            d(&[-1, 2, -1, 2])
        );
        let g = generate(Family::Herschel, &[]).unwrap();
        let x = d(&[1, -2, 0, 3, 0, 0, 1, 0, 5, 0, 0]);
        assert_eq!(
            fire_subset(&g, &x, set(&[4])).unwrap(),
            fire_vertex(&g, &x, 4).unwrap()
        );
        assert!(fire_subset(&c4, &d(&[0; 4]), VertexSet::EMPTY).is_err());
        assert!(fire_subset(&c4, &d(&[0; 4]), c4.vertices()).is_err());
    }

    #[test]
    fn herschel_partite_divisor_moves_to_q() {
        let g = generate(Family::Herschel, &[]).unwrap();
        let (big, small) = g.bipartition().unwrap();
        assert_eq!(small.len(), 5);
        let start = Divisor::indicator(11, small);
        for q in big {
            let after = fire_subset(&g, &start, VertexSet::singleton(q).complement(11)).unwrap();
            // every small-side neighbour of q sends it one chip
            assert_eq!(after[q], g.valences()[q] as i64);
            for b in big.without(q) {
                assert_eq!(after[b], 0);
            }
        }
        assert!(has_positive_rank(&g, &start).unwrap());
    }

    #[test]
    fn q_reduce_examples() {
        let k3 = generate(Family::Complete, &[3]).unwrap();
        assert_eq!(q_reduce(&k3, &d(&[3, 0, 0]), 1).unwrap(), d(&[0, 3, 0]));
        let reduced = d(&[0, 3, 0]);
        assert_eq!(q_reduce(&k3, &reduced, 1).unwrap(), reduced);
        let p5 = generate(Family::Path, &[5]).unwrap();
        assert_eq!(
            q_reduce(&p5, &d(&[1, 0, 0, 0, 0]), 4).unwrap(),
            d(&[0, 0, 0, 0, 1])
        );
        let split = Multigraph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            q_reduce(&split, &d(&[0; 4]), 0),
            Err(Error::DisconnectedGraph)
        );
    }

    #[test]
    fn q_reduce_clears_debt() {
        let g = generate(Family::Hypercube, &[3]).unwrap();
        let x = d(&[-5, 2, 0, 7, -1, 0, 0, -3]);
        let r = q_reduce(&g, &x, 2).unwrap();
        assert_eq!(r.degree(), x.degree());
        assert!((0..8).filter(|&v| v != 2).all(|v| r[v] >= 0));
        assert_eq!(burn(&g, r.chips(), 2), g.vertices());
    }

    #[test]
    fn equivalence_examples() {
        let c4 = generate(Family::Cycle, &[4]).unwrap();
        let x = d(&[2, 0, 0, 0]);
        assert!(is_equivalent(&c4, &x, &fire_vertex(&c4, &x, 1).unwrap()).unwrap());
        assert!(!is_equivalent(&c4, &x, &d(&[1, 0, 0, 0])).unwrap());
        assert!(is_equivalent(&c4, &x, &d(&[0, 0, 2, 0])).unwrap());
        assert!(!is_equivalent(&c4, &d(&[1, 0, 0, 0]), &d(&[0, 1, 0, 0])).unwrap());
        assert!(is_equivalent(&c4, &x, &d(&[0, 0])).is_err());
    }

    #[test]
    fn positive_rank_examples() {
        let tree = generate(Family::Path, &[4]).unwrap();
        assert!(has_positive_rank(&tree, &d(&[0, 0, 1, 0])).unwrap());
        let k3 = generate(Family::Complete, &[3]).unwrap();
        assert!(!has_positive_rank(&k3, &d(&[0, 0, 0])).unwrap());
        assert!(!has_positive_rank(&k3, &d(&[1, 0, 0])).unwrap());
        assert!(has_positive_rank(&k3, &d(&[1, 1, 0])).unwrap());
    }

    #[test]
    fn gonality_examples() {
        let q3 = generate(Family::Hypercube, &[3]).unwrap();
        assert_eq!(gonality_bruteforce(&q3, None).unwrap().gonality(), Some(4));
        let c8 = generate(Family::Cycle, &[8]).unwrap();
        let r = gonality_bruteforce(&c8, None).unwrap();
        // two chips on the last vertex come first lexicographically; firing
        // that vertex splits them onto both neighbours
        assert_eq!(
            r,
            GonalitySearch::Found {
                gonality: 2,
                witness: d(&[0, 0, 0, 0, 0, 0, 0, 2])
            }
        );
        assert_eq!(
            gonality_bruteforce(&q3, Some(3)).unwrap(),
            GonalitySearch::ExceedsMaxDegree { max_degree: 3 }
        );
        let k1 = generate(Family::Complete, &[1]).unwrap();
        assert_eq!(gonality_bruteforce(&k1, None).unwrap().gonality(), Some(1));
    }

    #[test]
    fn strong_separator_examples() {
        let g = generate(Family::Herschel, &[]).unwrap();
        let (big, small) = g.bipartition().unwrap();
        let r = check_strong_separator(&g, small).unwrap();
        assert!(r.valid);
        assert_eq!(r.gonality_bound(), Some(5));
        assert!(check_strong_separator(&g, big).unwrap().valid);

        let k4 = generate(Family::Complete, &[4]).unwrap();
        assert!(check_strong_separator(&k4, set(&[1, 2, 3])).unwrap().valid);
        // a triangle left behind is not a tree
        let r = check_strong_separator(&k4, set(&[0])).unwrap();
        assert_eq!(r.violating_component, Some(set(&[1, 2, 3])));

        let multi = Multigraph::from_edges(3, [(0, 1), (1, 2), (1, 2)]).unwrap();
        let r = check_strong_separator(&multi, set(&[0, 1])).unwrap();
        assert!(!r.valid);
        assert_eq!(r.violating_component, Some(set(&[2])));
        assert!(check_strong_separator(&multi, VertexSet::EMPTY).is_err());
    }

    #[test]
    fn separator_bounds() {
        let h = generate(Family::Herschel, &[]).unwrap();
        let b = gonality_upper_by_separator(&h).unwrap();
        assert_eq!((b.bound, b.component_order), (5, 2));
        let q4 = generate(Family::Hypercube, &[4]).unwrap();
        assert_eq!(gonality_upper_by_separator(&q4).unwrap().bound, 8);
        let tree = generate(Family::Path, &[6]).unwrap();
        assert_eq!(gonality_upper_by_separator(&tree).unwrap().bound, 1);
        let k5 = generate(Family::Complete, &[5]).unwrap();
        assert_eq!(gonality_upper_by_separator(&k5).unwrap().bound, 4);
        let banana = Multigraph::from_edges(2, [(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(gonality_upper_by_separator(&banana).unwrap().bound, 2);
    }

    #[test]
    fn divisor_file_format() {
        assert_eq!(Divisor::parse("# chips\n1 -2 0\n").unwrap(), d(&[1, -2, 0]));
        assert!(matches!(
            Divisor::parse("1 x\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Divisor::parse("1 2\n3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        let k3 = generate(Family::Complete, &[3]).unwrap();
        assert!(matches!(
            Divisor::parse_for(&k3, "1 2"),
            Err(Error::DivisorLength { got: 2, n: 3 })
        ));
        assert_eq!(d(&[1, -2, 0]).to_string(), "1 -2 0");
    }
}
