//! Stand-alone checkers for the certificates produced by the searches.

use crate::bipartite::BipartiteGraph;
use crate::bits::{self, VertexSet};

use super::order::VertexOrder;

fn is_permutation(v: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    v.len() == n
        && v.iter()
            .all(|&i| i < n && !std::mem::replace(&mut seen[i], true))
}

fn is_pure_order(g: &BipartiteGraph, o: &VertexOrder) -> bool {
    let n = g.num_x();
    if g.num_y() != n || !is_permutation(&o.x, n) || !is_permutation(&o.y, n) {
        return false;
    }
    let diagonal = (0..n).all(|i| g.has_edge(o.x[i], o.y[i]));
    let upper = (0..n).all(|i| (0..i).all(|j| !g.has_edge(o.x[i], o.y[j])));
    diagonal && upper
}

/// Checks conditions (a), (b), (c) position by position.
pub fn verify_herzog_hibi(g: &BipartiteGraph, o: &VertexOrder) -> bool {
    if !is_pure_order(g, o) {
        return false;
    }
    let n = o.len();
    let e = |i: usize, j: usize| g.has_edge(o.x[i], o.y[j]);
    (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(e(i, j) && e(j, k)) || e(i, k))))
}

/// Checks that `o` is a pure order with no cross, in both senses.
pub fn verify_cross_free(g: &BipartiteGraph, o: &VertexOrder) -> bool {
    if !is_pure_order(g, o) {
        return false;
    }
    let n = o.len();
    let e = |i: usize, j: usize| g.has_edge(o.x[i], o.y[j]);
    let pair = (0..n).any(|i| (0..n).any(|j| i != j && e(i, j) && e(j, i)));
    let triple =
        (0..n).any(|i| (i + 1..n).any(|j| (j + 1..n).any(|l| e(i, j) && e(j, l) && !e(i, l))));
    !pair && !triple
}

/// Checks that `order` lists exactly `facets`, and that every facet meets
/// the complex generated by its predecessors in a pure complex of
/// codimension one in the facet.
pub fn verify_shelling(facets: &[VertexSet], order: &[VertexSet]) -> bool {
    let mut a: Vec<VertexSet> = facets.to_vec();
    let mut b: Vec<VertexSet> = order.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return false;
    }
    (1..order.len()).all(|j| {
        let f = order[j];
        let meets: Vec<VertexSet> = order[..j].iter().map(|&p| p & f).collect();
        let maximal = bits::maximal_sets(meets);
        maximal.iter().all(|m| m.count_ones() + 1 == f.count_ones())
    })
}
