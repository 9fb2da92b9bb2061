//! Brute-force spanning-tree enumeration. This is the independent oracle
//! the matrix-tree code is tested against, so it deliberately shares nothing
//! with the elimination path: plain backtracking over edge
//! include/exclude decisions with a union-find.

use super::{Multigraph, UnionFind};
use crate::{Error, Result};
use num_bigint::BigInt;

/// Enumeration refuses graphs with more edges than this.
pub const ENUMERATION_EDGE_LIMIT: usize = 25;

/// All spanning trees of `g`, each as a sorted list of edge indices.
/// Guarded to [`ENUMERATION_EDGE_LIMIT`] edges.
pub fn enumerate_spanning_trees(g: &Multigraph) -> Result<Vec<Vec<usize>>> {
    if g.edge_count() > ENUMERATION_EDGE_LIMIT {
        return Err(Error::parameter(format!(
            "enumeration limited to {ENUMERATION_EDGE_LIMIT} edges, got {}",
            g.edge_count()
        )));
    }
    if !g.is_connected() {
        return Err(Error::domain("graph is not connected"));
    }
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n == 1 {
        out.push(Vec::new());
        return Ok(out);
    }
    let mut chosen = Vec::new();
    let uf = UnionFind::new(n);
    backtrack(g, 0, uf, &mut chosen, &mut out);
    Ok(out)
}

fn backtrack(
    g: &Multigraph,
    i: usize,
    uf: UnionFind,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if uf.component_count() == 1 {
        out.push(chosen.clone());
        return;
    }
    if i == g.edge_count() {
        return;
    }
    let e = g.edges()[i];
    // include, unless it closes a cycle
    let mut with = UnionFind {
        parent: uf.parent.clone(),
        components: uf.components,
    };
    if with.union(e.u, e.v) {
        chosen.push(i);
        backtrack(g, i + 1, with, chosen, out);
        chosen.pop();
    }
    // exclude
    backtrack(g, i + 1, uf, chosen, out);
}

/// Tally of spanning trees by σ = number of positive edges, via the same
/// enumeration. Entries are `(σ, count)` with nonzero counts, sorted by σ.
pub fn sigma_tallies(g: &Multigraph) -> Result<Vec<(usize, BigInt)>> {
    let trees = enumerate_spanning_trees(g)?;
    let mut counts: std::collections::BTreeMap<usize, u64> = Default::default();
    for t in &trees {
        let sigma = t.iter().filter(|&&i| g.edges()[i].sign > 0).count();
        *counts.entry(sigma).or_insert(0) += 1;
    }
    Ok(counts
        .into_iter()
        .map(|(s, c)| (s, BigInt::from(c)))
        .collect())
}
