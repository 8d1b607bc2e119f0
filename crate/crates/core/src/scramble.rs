//! Scrambles, their hitting and egg-cut numbers, and the `k`-uniform scramble.
//!
//! A scramble is a family of connected vertex sets called eggs. Its order is
//! the smaller of two numbers: the fewest vertices meeting every egg, and the
//! fewest edges crossing a bipartition with an egg wholly on each side.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use crate::count::ExtendedCount;
use crate::error::{Error, Result};
use crate::flow::min_egg_separating_cut;
use crate::graph::io::{content_lines, parse_usize};
use crate::graph::{Multigraph, VertexSet};
use crate::invariants::{alpha_component, lambda_k};

/// A deduplicated, lexicographically sorted family of connected eggs.
#[derive(Debug, Clone)]
pub struct Scramble<'g> {
    graph: &'g Multigraph,
    eggs: Vec<VertexSet>,
}

impl<'g> Scramble<'g> {
    /// Validates each egg (nonempty, in range, connected) and canonicalises
    /// the family.
    pub fn new<I>(graph: &'g Multigraph, eggs: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        let mut eggs: Vec<VertexSet> = eggs.into_iter().collect();
        for &egg in &eggs {
            if !graph.is_connected_set(egg)? {
                return Err(Error::DisconnectedSet);
            }
        }
        eggs.sort_unstable();
        eggs.dedup();
        Ok(Scramble { graph, eggs })
    }

    pub fn graph(&self) -> &'g Multigraph {
        self.graph
    }

    pub fn eggs(&self) -> &[VertexSet] {
        &self.eggs
    }

    pub fn len(&self) -> usize {
        self.eggs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eggs.is_empty()
    }

    fn require_eggs(&self) -> Result<()> {
        if self.eggs.is_empty() {
            Err(Error::EmptyScramble)
        } else {
            Ok(())
        }
    }
}

/// The scramble whose eggs are all connected `k`-vertex sets.
pub fn uniform_scramble(g: &Multigraph, k: usize) -> Result<Scramble<'_>> {
    let eggs = g.enumerate_connected_subsets(k)?;
    Ok(Scramble { graph: g, eggs })
}

/// Reads a scramble file: one egg per line as whitespace-separated vertices.
pub fn parse_scramble<'g>(g: &'g Multigraph, text: &str) -> Result<Scramble<'g>> {
    let mut eggs = Vec::new();
    for (line, body) in content_lines(text) {
        let mut egg = VertexSet::EMPTY;
        for token in body.split_whitespace() {
            let v = parse_usize(line, token)?;
            g.check_vertex(v)?;
            egg.insert(v);
        }
        if !g.induces_connected(egg) {
            return Err(Error::Parse {
                line,
                message: format!("egg {egg} is not connected"),
            });
        }
        eggs.push(egg);
    }
    Scramble::new(g, eggs)
}

pub fn write_scramble(s: &Scramble<'_>) -> String {
    let mut out = String::new();
    for egg in s.eggs() {
        let line: Vec<String> = egg.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

/// A minimum hitting set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingSet {
    pub size: usize,
    pub witness: VertexSet,
}

/// Snapshot passed to progress callbacks during long searches.
#[derive(Debug, Clone, Copy)]
pub struct SearchProgress {
    pub nodes: u64,
    pub best: Option<usize>,
    pub elapsed: Duration,
}

/// Caps on a hitting-set search. The default is unlimited.
#[derive(Debug, Clone, Copy, Default)]
pub struct SearchLimits {
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
}

/// Result of asking whether `h(S) >= bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LowerBoundCheck {
    /// Every hitting set has at least `bound` vertices.
    Holds,
    /// A smaller hitting set exists.
    Refuted(VertexSet),
}

/// Exact hitting number with its certificate.
pub fn hitting_number(s: &Scramble<'_>) -> Result<HittingSet> {
    hitting_number_with(s, SearchLimits::default(), |_| {})
}

/// [`hitting_number`] under resource limits, reporting progress periodically.
pub fn hitting_number_with<F>(
    s: &Scramble<'_>,
    limits: SearchLimits,
    progress: F,
) -> Result<HittingSet>
where
    F: FnMut(SearchProgress),
{
    s.require_eggs()?;
    let mut search = HittingSearch::new(s, limits, progress);
    let greedy = search.greedy();
    search.best = Some(greedy);
    search.run()?;
    let witness = search.best.expect("greedy seeds a solution");
    Ok(HittingSet {
        size: witness.len(),
        witness,
    })
}

/// Decides `h(S) >= bound` by searching only for hitting sets smaller than
/// `bound`.
pub fn hitting_lower_bound<F>(
    s: &Scramble<'_>,
    bound: usize,
    limits: SearchLimits,
    progress: F,
) -> Result<LowerBoundCheck>
where
    F: FnMut(SearchProgress),
{
    s.require_eggs()?;
    let mut search = HittingSearch::new(s, limits, progress);
    let greedy = search.greedy();
    if greedy.len() < bound {
        return Ok(LowerBoundCheck::Refuted(greedy));
    }
    search.ceiling = bound;
    search.run()?;
    Ok(match search.best {
        Some(w) => LowerBoundCheck::Refuted(w),
        None => LowerBoundCheck::Holds,
    })
}

/// Branch and bound for minimum hitting set.
///
/// Branches on the uncovered egg with the fewest admissible vertices; after
/// trying a vertex it is forbidden in the sibling branches. The lower bound
/// is a greedy packing of uncovered eggs with pairwise disjoint admissible
/// vertices, each of which needs its own vertex.
struct HittingSearch<F> {
    eggs: Vec<VertexSet>,
    n: usize,
    best: Option<VertexSet>,
    /// Sets of this size or larger are not worth finding.
    ceiling: usize,
    nodes: u64,
    limits: SearchLimits,
    started: Instant,
    progress: F,
}

impl<F: FnMut(SearchProgress)> HittingSearch<F> {
    fn new(s: &Scramble<'_>, limits: SearchLimits, progress: F) -> Self {
        // eggs that contain another egg are hit whenever the smaller one is
        let mut eggs: Vec<VertexSet> = s.eggs().to_vec();
        eggs.sort_by_key(|e| e.len());
        let mut kept: Vec<VertexSet> = Vec::with_capacity(eggs.len());
        // kept[..smaller] holds the eggs strictly smaller than the current one;
        // distinct eggs of equal size never contain each other
        let mut smaller = 0;
        for e in eggs {
            if kept.last().is_some_and(|k| k.len() < e.len()) {
                smaller = kept.len();
            }
            if !kept[..smaller].iter().any(|k| k.is_subset(e)) {
                kept.push(e);
            }
        }
        HittingSearch {
            eggs: kept,
            n: s.graph().n(),
            best: None,
            ceiling: usize::MAX,
            nodes: 0,
            limits,
            started: Instant::now(),
            progress,
        }
    }

    fn greedy(&self) -> VertexSet {
        let mut chosen = VertexSet::EMPTY;
        let mut open: Vec<VertexSet> = self.eggs.clone();
        while !open.is_empty() {
            let mut counts = vec![0usize; self.n];
            for e in &open {
                for v in *e {
                    counts[v] += 1;
                }
            }
            let v = (0..self.n)
                .max_by_key(|&v| (counts[v], std::cmp::Reverse(v)))
                .unwrap();
            chosen.insert(v);
            open.retain(|e| !e.contains(v));
        }
        chosen
    }

    fn limit(&self) -> usize {
        self.best
            .map_or(self.ceiling, |b| b.len())
            .min(self.ceiling)
    }

    fn run(&mut self) -> Result<()> {
        self.branch(VertexSet::EMPTY, VertexSet::EMPTY)
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if let Some(max) = self.limits.max_nodes {
            if self.nodes > max {
                return Err(Error::ResourceLimit(format!(
                    "hitting-set search exceeded {max} nodes"
                )));
            }
        }
        if self.nodes & 0x3ff == 0 {
            let elapsed = self.started.elapsed();
            if let Some(t) = self.limits.time_limit {
                if elapsed > t {
                    return Err(Error::ResourceLimit(format!(
                        "hitting-set search exceeded {:.1}s",
                        t.as_secs_f64()
                    )));
                }
            }
            if self.nodes & 0xffff == 0 {
                let best = self.best.map(|b| b.len());
                (self.progress)(SearchProgress {
                    nodes: self.nodes,
                    best,
                    elapsed,
                });
            }
        }
        Ok(())
    }

    fn branch(&mut self, chosen: VertexSet, forbidden: VertexSet) -> Result<()> {
        self.tick()?;
        let limit = self.limit();
        if chosen.len() >= limit {
            return Ok(());
        }
        let mut open: Vec<VertexSet> = Vec::new();
        let mut pivot: Option<VertexSet> = None;
        for &e in &self.eggs {
            if !e.is_disjoint(chosen) {
                continue;
            }
            let admissible = e.difference(forbidden);
            if admissible.is_empty() {
                return Ok(());
            }
            if pivot.is_none_or(|p| admissible.len() < p.len()) {
                pivot = Some(admissible);
            }
            open.push(admissible);
        }
        let Some(pivot) = pivot else {
            self.best = Some(chosen);
            return Ok(());
        };
        open.sort_by_key(|a| a.len());
        let mut used = VertexSet::EMPTY;
        let mut packing = 0;
        for a in &open {
            if a.is_disjoint(used) {
                used = used.union(*a);
                packing += 1;
                if chosen.len() + packing >= limit {
                    return Ok(());
                }
            }
        }
        let mut banned = forbidden;
        for v in pivot {
            self.branch(chosen.with(v), banned)?;
            banned.insert(v);
        }
        Ok(())
    }
}

/// Minimum egg-cut size: the smallest separating cut over pairs of disjoint
/// eggs, infinite when every pair of eggs meets.
pub fn egg_cut_number(s: &Scramble<'_>) -> Result<ExtendedCount> {
    Ok(egg_cut_witness(s)?.map_or(ExtendedCount::Infinite, |w| ExtendedCount::Finite(w.size)))
}

/// A pair of eggs attaining [`egg_cut_number`], first in pair order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EggCutWitness {
    pub first: VertexSet,
    pub second: VertexSet,
    pub size: u64,
}

pub fn egg_cut_witness(s: &Scramble<'_>) -> Result<Option<EggCutWitness>> {
    s.require_eggs()?;
    let g = s.graph();
    let eggs = s.eggs();
    let mut best: Option<EggCutWitness> = None;
    for (i, &a) in eggs.iter().enumerate() {
        for &b in &eggs[i + 1..] {
            if !a.is_disjoint(b) {
                continue;
            }
            let size = min_egg_separating_cut(g, a, b)?;
            if best.is_none_or(|w| size < w.size) {
                best = Some(EggCutWitness {
                    first: a,
                    second: b,
                    size,
                });
            }
        }
    }
    Ok(best)
}

/// Whether some egg-cut exists, with the first disjoint egg pair as witness.
pub fn eggcut_finite(s: &Scramble<'_>) -> Result<Option<(VertexSet, VertexSet)>> {
    s.require_eggs()?;
    let eggs = s.eggs();
    for (i, &a) in eggs.iter().enumerate() {
        if let Some(&b) = eggs[i + 1..].iter().find(|b| a.is_disjoint(**b)) {
            return Ok(Some((a, b)));
        }
    }
    Ok(None)
}

/// `min(h(S), e(S))`.
pub fn scramble_order(s: &Scramble<'_>) -> Result<ExtendedCount> {
    let h = hitting_number(s)?;
    let e = egg_cut_number(s)?;
    Ok(ExtendedCount::Finite(h.size as u64).min(e))
}

/// The order of the `k`-uniform scramble by its closed form
/// `min(lambda_k(G), n - alpha^c_{k-1}(G))`.
pub fn uniform_order_formula(g: &Multigraph, k: usize) -> Result<ExtendedCount> {
    if k == 0 || k > g.n() {
        return Err(Error::InvalidParameter(format!(
            "k = {k} outside 1..={}",
            g.n()
        )));
    }
    let lambda = lambda_k(g, k)?;
    let hitting = (g.n() - alpha_component(g, k - 1)) as u64;
    Ok(lambda.min(ExtendedCount::Finite(hitting)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    /// Minimum cut over all bipartitions with an egg on each side.
    fn brute_egg_cut(s: &Scramble<'_>) -> ExtendedCount {
        let g = s.graph();
        let n = g.n();
        ExtendedCount::min_of(
            (1u64..(1 << n) - 1)
                .map(VertexSet::from_bits)
                .filter(|a| {
                    let b = a.complement(n);
                    s.eggs().iter().any(|e| e.is_subset(*a))
                        && s.eggs().iter().any(|e| e.is_subset(b))
                })
                .map(|a| g.cut_size(a)),
        )
    }

    fn brute_hitting(s: &Scramble<'_>) -> usize {
        (0u64..1 << s.graph().n())
            .map(VertexSet::from_bits)
            .filter(|c| s.eggs().iter().all(|e| !e.is_disjoint(*c)))
            .map(|c| c.len())
            .min()
            .unwrap()
    }

    #[test]
    fn uniform_small_cases() {
        let g = generate(Family::Herschel, &[]).unwrap();
        let e1 = uniform_scramble(&g, 1).unwrap();
        assert_eq!(e1.len(), 11);
        assert_eq!(hitting_number(&e1).unwrap().size, 11);
        let c4 = generate(Family::Cycle, &[4]).unwrap();
        assert_eq!(uniform_scramble(&c4, 2).unwrap().len(), 4);
        assert!(uniform_scramble(&c4, 0).is_err());
    }

    #[test]
    fn herschel_e3() {
        let g = generate(Family::Herschel, &[]).unwrap();
        let s = uniform_scramble(&g, 3).unwrap();
        let h = hitting_number(&s).unwrap();
        assert_eq!(h.size, 5);
        assert!(s.eggs().iter().all(|e| !e.is_disjoint(h.witness)));
        assert_eq!(egg_cut_number(&s).unwrap(), 5);
        assert_eq!(brute_egg_cut(&s), 5);
        assert_eq!(scramble_order(&s).unwrap(), 5);
        assert_eq!(uniform_order_formula(&g, 3).unwrap(), 5);
    }

    #[test]
    fn cycle_e1_order() {
        let c5 = generate(Family::Cycle, &[5]).unwrap();
        let s = uniform_scramble(&c5, 1).unwrap();
        assert_eq!(scramble_order(&s).unwrap(), 2);
        assert_eq!(uniform_order_formula(&c5, 1).unwrap(), 2);
    }

    #[test]
    fn overlapping_eggs_have_infinite_egg_cut() {
        let g = generate(Family::Cycle, &[5]).unwrap();
        let s = Scramble::new(&g, [set(&[0, 1]), set(&[1, 2]), set(&[0, 1, 2])]).unwrap();
        assert_eq!(egg_cut_number(&s).unwrap(), ExtendedCount::Infinite);
        assert_eq!(eggcut_finite(&s).unwrap(), None);
        assert_eq!(scramble_order(&s).unwrap(), 1);
        let single = Scramble::new(&g, [set(&[3])]).unwrap();
        assert_eq!(egg_cut_number(&single).unwrap(), ExtendedCount::Infinite);
        assert_eq!(hitting_number(&single).unwrap().size, 1);
    }

    #[test]
    fn eggcut_finite_examples() {
        let p2 = generate(Family::Path, &[2]).unwrap();
        let s = uniform_scramble(&p2, 1).unwrap();
        assert_eq!(eggcut_finite(&s).unwrap(), Some((set(&[0]), set(&[1]))));
        let g = generate(Family::Herschel, &[]).unwrap();
        let through_zero: Vec<VertexSet> = (1..=4)
            .flat_map(|k| g.enumerate_connected_subsets(k).unwrap())
            .filter(|e| e.contains(0))
            .collect();
        let s = Scramble::new(&g, through_zero).unwrap();
        assert_eq!(eggcut_finite(&s).unwrap(), None);
    }

    #[test]
    fn empty_scramble_is_an_error() {
        let g = generate(Family::Cycle, &[4]).unwrap();
        let s = Scramble::new(&g, []).unwrap();
        assert_eq!(hitting_number(&s), Err(Error::EmptyScramble));
        assert_eq!(egg_cut_number(&s), Err(Error::EmptyScramble));
        assert_eq!(eggcut_finite(&s), Err(Error::EmptyScramble));
    }

    #[test]
    fn construction_validates_and_dedups() {
        let g = generate(Family::Cycle, &[4]).unwrap();
        assert_eq!(
            Scramble::new(&g, [set(&[0, 2])]).unwrap_err(),
            Error::DisconnectedSet
        );
        assert_eq!(
            Scramble::new(&g, [VertexSet::EMPTY]).unwrap_err(),
            Error::EmptySet
        );
        let s = Scramble::new(&g, [set(&[1, 2]), set(&[0, 1]), set(&[1, 2])]).unwrap();
        assert_eq!(s.eggs(), &[set(&[0, 1]), set(&[1, 2])]);
    }

    #[test]
    fn scramble_file_round_trip() {
        let g = generate(Family::Cycle, &[5]).unwrap();
        let s = parse_scramble(&g, "# eggs\n0 1\n3\n\n2 3 4\n").unwrap();
        assert_eq!(s.len(), 3);
        let again = parse_scramble(&g, &write_scramble(&s)).unwrap();
        assert_eq!(again.eggs(), s.eggs());
        assert!(matches!(
            parse_scramble(&g, "0 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_scramble(&g, "0 9\n"),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn hitting_and_egg_cut_match_brute_force() {
        let graphs = [
            generate(Family::Hypercube, &[3]).unwrap(),
            generate(Family::Crown, &[4]).unwrap(),
            generate(Family::Complete, &[5]).unwrap(),
            Multigraph::from_edges(
                6,
                [
                    (0, 1),
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 0),
                    (1, 4),
                ],
            )
            .unwrap(),
        ];
        for g in &graphs {
            for k in 1..=g.n() {
                let s = uniform_scramble(g, k).unwrap();
                assert_eq!(hitting_number(&s).unwrap().size, brute_hitting(&s), "k={k}");
                assert_eq!(egg_cut_number(&s).unwrap(), brute_egg_cut(&s), "k={k}");
                assert_eq!(
                    scramble_order(&s).unwrap(),
                    uniform_order_formula(g, k).unwrap(),
                    "k={k}"
                );
            }
        }
    }

    #[test]
    fn lower_bound_check() {
        let g = generate(Family::Herschel, &[]).unwrap();
        let s = uniform_scramble(&g, 3).unwrap();
        let none = |_| {};
        assert_eq!(
            hitting_lower_bound(&s, 5, SearchLimits::default(), none).unwrap(),
            LowerBoundCheck::Holds
        );
        assert!(matches!(
            hitting_lower_bound(&s, 6, SearchLimits::default(), none).unwrap(),
            LowerBoundCheck::Refuted(w) if w.len() < 6
        ));
    }

    #[test]
    fn node_cap_is_reported() {
        let g = generate(Family::Hypercube, &[4]).unwrap();
        let s = uniform_scramble(&g, 3).unwrap();
        let limits = SearchLimits {
            max_nodes: Some(1),
            time_limit: None,
        };
        // disjoint 3-paths cannot certify 8 at the root, so the search must branch
        let r = hitting_number_with(&s, limits, |_| {});
        assert!(matches!(r, Err(Error::ResourceLimit(_))));
        assert_eq!(hitting_number(&s).unwrap().size, 8);
    }
}
