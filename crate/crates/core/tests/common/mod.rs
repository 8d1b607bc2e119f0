//! Graph corpora shared by the integration tests.
#![allow(dead_code)]

use num_rational::Ratio;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use scramble_core::divisor::Divisor;
use scramble_core::{Multigraph, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random connected multigraph: a random spanning tree plus `extra`
/// further edges, parallel edges allowed when `multi` is set.
pub fn random_connected(rng: &mut impl Rng, n: usize, extra: usize, multi: bool) -> Multigraph {
    let mut g = Multigraph::new(n).unwrap();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v).unwrap();
    }
    if n < 2 {
        return g;
    }
    let mut added = 0;
    let mut attempts = 0;
    while added < extra && attempts < 50 * (extra + 1) {
        attempts += 1;
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || (!multi && g.mult(u, v) > 0) {
            continue;
        }
        g.add_edge(u, v).unwrap();
        added += 1;
    }
    g
}

/// A random connected multigraph with `n` drawn from `min_n..=max_n`.
pub fn random_graph(rng: &mut impl Rng, min_n: usize, max_n: usize, multi: bool) -> Multigraph {
    let n = rng.gen_range(min_n..=max_n);
    let extra = rng.gen_range(0..=n + 2);
    random_connected(rng, n, extra, multi)
}

pub fn random_tree(rng: &mut impl Rng, n: usize) -> Multigraph {
    random_connected(rng, n, 0, false)
}

/// Upper-triangle adjacency bits of a simple graph under a relabelling.
fn code(n: usize, adj: &[VertexSet], perm: &[usize]) -> u32 {
    let mut bits = 0u32;
    let mut pos = 0;
    for i in 0..n {
        for j in i + 1..n {
            if adj[perm[i]].contains(perm[j]) {
                bits |= 1 << pos;
            }
            pos += 1;
        }
    }
    bits
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap_permute(n, &mut p, &mut out);
    out
}

fn heap_permute(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k {
        heap_permute(k - 1, p, out);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        p.swap(j, k - 1);
    }
}

fn from_code(n: usize, bits: u32) -> Multigraph {
    let mut g = Multigraph::new(n).unwrap();
    let mut pos = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits >> pos & 1 == 1 {
                g.add_edge(i, j).unwrap();
            }
            pos += 1;
        }
    }
    g
}

/// Every connected simple graph on `1..=max_n` vertices, one per
/// isomorphism class.
///
/// Each connected graph has a vertex whose removal leaves it connected, so
/// class representatives on `n` vertices arise from those on `n - 1` by
/// attaching a new vertex to a nonempty neighbour set. Duplicates are
/// removed by the minimum code over all relabellings.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Multigraph> {
    assert!(max_n <= 8);
    let mut all = vec![Multigraph::new(1).unwrap()];
    let mut layer = vec![Multigraph::new(1).unwrap()];
    for n in 2..=max_n {
        let perms = permutations(n);
        let mut seen = std::collections::BTreeSet::new();
        for base in &layer {
            for mask in 1u64..1 << (n - 1) {
                let mut adj: Vec<VertexSet> = (0..n - 1).map(|v| base.neighbors(v)).collect();
                adj.push(VertexSet::from_bits(mask));
                for v in VertexSet::from_bits(mask).iter() {
                    adj[v].insert(n - 1);
                }
                let canon = perms.iter().map(|p| code(n, &adj, p)).min().unwrap();
                seen.insert(canon);
            }
        }
        layer = seen.into_iter().map(|c| from_code(n, c)).collect();
        all.extend(layer.iter().cloned());
    }
    all
}

/// Edges with exactly one end in `s`, counted straight from the edge list.
pub fn crossing(g: &Multigraph, s: VertexSet) -> u64 {
    g.edges()
        .filter(|&(u, v, _)| s.contains(u) != s.contains(v))
        .map(|(_, _, m)| u64::from(m))
        .sum()
}

/// Smallest cut over every bipartition with `a` on one side and `b` on the other.
pub fn exhaustive_separation(g: &Multigraph, a: VertexSet, b: VertexSet) -> u64 {
    (0u64..1 << g.n())
        .map(VertexSet::from_bits)
        .filter(|s| a.is_subset(*s) && s.is_disjoint(b))
        .map(|s| crossing(g, s))
        .min()
        .unwrap()
}

type Q = Ratio<i128>;

/// `d1 - d2` lies in the integer span of the Laplacian columns.
///
/// The Laplacian of a connected graph has kernel spanned by the all-ones
/// vector, so fixing the firing count of vertex 0 at zero leaves the reduced
/// Laplacian, which is invertible. The difference is in the lattice exactly
/// when degrees agree and the reduced system has an integer solution.
pub fn in_laplacian_lattice(g: &Multigraph, d1: &Divisor, d2: &Divisor) -> bool {
    if d1.degree() != d2.degree() {
        return false;
    }
    let n = g.n();
    if n == 1 {
        return true;
    }
    let m = n - 1;
    let mut rows: Vec<Vec<Q>> = (1..n)
        .map(|i| {
            let mut row: Vec<Q> = (1..n)
                .map(|j| {
                    let entry = if i == j {
                        g.valences()[i] as i128
                    } else {
                        -(g.mult(i, j) as i128)
                    };
                    Q::from_integer(entry)
                })
                .collect();
            row.push(Q::from_integer((d1[i] - d2[i]) as i128));
            row
        })
        .collect();
    for col in 0..m {
        let pivot = (col..m)
            .find(|&r| rows[r][col] != Q::from_integer(0))
            .expect("invertible");
        rows.swap(col, pivot);
        let p = rows[col][col];
        for x in rows[col].iter_mut() {
            *x /= p;
        }
        for r in 0..m {
            if r != col && rows[r][col] != Q::from_integer(0) {
                let f = rows[r][col];
                let pivot_row = rows[col].clone();
                for (x, y) in rows[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    rows.iter().all(|row| row[m].is_integer())
}
