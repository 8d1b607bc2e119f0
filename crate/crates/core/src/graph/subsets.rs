use super::{Multigraph, VertexSet};

/// Visits every connected subset of `within` whose smallest vertex is `root`
/// and whose size is at most `max_size`, each exactly once.
///
/// This is the ESU scheme: a set grows only by vertices larger than `root`
/// taken from the exclusive neighbourhood of the vertex just added, which
/// gives every connected set a unique construction path.
pub fn for_each_connected_subset_rooted<F>(
    g: &Multigraph,
    root: usize,
    within: VertexSet,
    max_size: usize,
    mut visit: F,
) where
    F: FnMut(VertexSet),
{
    if !within.contains(root) || max_size == 0 {
        return;
    }
    let allowed = within.intersection(VertexSet::from_bits(
        u64::MAX.checked_shl(root as u32 + 1).unwrap_or(0),
    ));
    let start = VertexSet::singleton(root);
    let closed = start.union(g.neighbors(root));
    let extension = g.neighbors(root).intersection(allowed);
    extend(g, allowed, max_size, start, extension, closed, &mut visit);
}

fn extend<F>(
    g: &Multigraph,
    allowed: VertexSet,
    max_size: usize,
    current: VertexSet,
    mut extension: VertexSet,
    closed: VertexSet,
    visit: &mut F,
) where
    F: FnMut(VertexSet),
{
    visit(current);
    if current.len() == max_size {
        return;
    }
    while let Some(w) = extension.first() {
        extension.remove(w);
        let exclusive = g.neighbors(w).difference(closed).intersection(allowed);
        extend(
            g,
            allowed,
            max_size,
            current.with(w),
            extension.union(exclusive),
            closed.union(g.neighbors(w)),
            visit,
        );
    }
}
