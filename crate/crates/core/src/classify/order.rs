use std::collections::BTreeSet;

use serde::Serialize;

use crate::bipartite::{hall_check, BipartiteGraph, HallOutcome, Side};
use crate::bits::{self, VertexSet};
use crate::caps::Caps;
use crate::error::{Error, Result};

/// A simultaneous re-indexing of both sides: position `i` holds the pair
/// `(x[i], y[i])`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexOrder {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl VertexOrder {
    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn labels(&self) -> (Vec<String>, Vec<String>) {
        (
            self.x.iter().map(|&i| BipartiteGraph::x_label(i)).collect(),
            self.y.iter().map(|&j| BipartiteGraph::y_label(j)).collect(),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum SearchFailure {
    /// Condition (iv) needs `|x| = |y|`.
    PartSizes { s: usize, k: usize },
    /// No perfect matching: `subset` has only the listed neighbors.
    NoPerfectMatching {
        subset: Vec<String>,
        neighbors: Vec<String>,
    },
    /// Every perfect matching was tried. `deepest` is the longest partial
    /// assignment `(x, y)` that survived before the search backed out.
    Exhausted {
        branches: u64,
        deepest: Vec<(String, String)>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum OrderSearch {
    Found { order: VertexOrder },
    NotFound { witness: SearchFailure },
}

impl OrderSearch {
    pub fn order(&self) -> Option<&VertexOrder> {
        match self {
            OrderSearch::Found { order } => Some(order),
            OrderSearch::NotFound { .. } => None,
        }
    }

    pub fn is_found(&self) -> bool {
        self.order().is_some()
    }
}

fn check_part_cap(g: &BipartiteGraph, caps: &Caps) -> Result<()> {
    let part = g.num_x().max(g.num_y());
    let cap = caps.search_part.min(bits::MAX_VERTICES);
    if part > cap {
        return Err(Error::cap("ordering search part size", part, cap));
    }
    Ok(())
}

fn x_bitsets(g: &BipartiteGraph) -> Vec<VertexSet> {
    (0..g.num_x())
        .map(|x| bits::from_iter(g.x_neighbors(x).iter().copied()))
        .collect()
}

/// Searches for an ordering with `x_i y_i ∈ E`, `x_i y_j ∈ E ⇒ i ≤ j` and
/// `x_i y_j, x_j y_k ∈ E ⇒ x_i y_k ∈ E`.
///
/// Backtracks over perfect matchings `x ↦ y`; a matching works exactly when
/// the relation `i → j ⟺ x_i y_{σ(j)} ∈ E` is antisymmetric and
/// transitive, and a linear extension (smallest index first) is returned.
pub fn herzog_hibi_search(g: &BipartiteGraph, caps: &Caps) -> Result<OrderSearch> {
    let (s, k) = (g.num_x(), g.num_y());
    if s != k {
        return Ok(OrderSearch::NotFound {
            witness: SearchFailure::PartSizes { s, k },
        });
    }
    check_part_cap(g, caps)?;
    if let HallOutcome::Violation {
        subset, neighbors, ..
    } = hall_check(g, Side::X)
    {
        return Ok(OrderSearch::NotFound {
            witness: SearchFailure::NoPerfectMatching {
                subset: subset.into_iter().map(BipartiteGraph::x_label).collect(),
                neighbors: neighbors.into_iter().map(BipartiteGraph::y_label).collect(),
            },
        });
    }
    let mut search = MatchingSearch {
        adj: x_bitsets(g),
        partner: vec![usize::MAX; s],
        used_y: 0,
        succ: vec![0; s],
        pred: vec![0; s],
        branches: 0,
        deepest: Vec::new(),
    };
    if search.extend(0) {
        let order = linear_extension(&search.succ);
        let y = order.iter().map(|&i| search.partner[i]).collect();
        return Ok(OrderSearch::Found {
            order: VertexOrder { x: order, y },
        });
    }
    let deepest = search
        .deepest
        .iter()
        .map(|&(x, y)| (BipartiteGraph::x_label(x), BipartiteGraph::y_label(y)))
        .collect();
    Ok(OrderSearch::NotFound {
        witness: SearchFailure::Exhausted {
            branches: search.branches,
            deepest,
        },
    })
}

struct MatchingSearch {
    adj: Vec<VertexSet>,
    partner: Vec<usize>,
    used_y: VertexSet,
    /// `succ[i]`: pairs `j` with `x_i y_{σ(j)} ∈ E`, among assigned pairs.
    succ: Vec<VertexSet>,
    pred: Vec<VertexSet>,
    branches: u64,
    deepest: Vec<(usize, usize)>,
}

impl MatchingSearch {
    fn extend(&mut self, t: usize) -> bool {
        let n = self.adj.len();
        if t == n {
            return true;
        }
        for y in bits::members(self.adj[t] & !self.used_y) {
            self.branches += 1;
            let earlier = bits::full(t);
            let out: VertexSet = (0..t)
                .filter(|&u| bits::contains(self.adj[t], self.partner[u]))
                .fold(0, |a, u| a | 1 << u);
            let inc: VertexSet = bits::members(earlier)
                .filter(|&u| bits::contains(self.adj[u], y))
                .fold(0, |a, u| a | 1 << u);
            let consistent = out & inc == 0
                && bits::members(inc).all(|u| bits::is_subset(out, self.succ[u]))
                && bits::members(out).all(|v| bits::is_subset(self.succ[v], out))
                && bits::members(inc).all(|v| bits::is_subset(self.pred[v], inc));
            if !consistent {
                continue;
            }
            self.partner[t] = y;
            self.used_y |= 1 << y;
            self.succ[t] = out;
            self.pred[t] = inc;
            for u in bits::members(inc) {
                self.succ[u] |= 1 << t;
            }
            for v in bits::members(out) {
                self.pred[v] |= 1 << t;
            }
            if t + 1 > self.deepest.len() {
                self.deepest = (0..=t).map(|i| (i, self.partner[i])).collect();
            }
            if self.extend(t + 1) {
                return true;
            }
            for u in bits::members(inc) {
                self.succ[u] &= !(1 << t);
            }
            for v in bits::members(out) {
                self.pred[v] &= !(1 << t);
            }
            self.succ[t] = 0;
            self.pred[t] = 0;
            self.used_y &= !(1 << y);
            self.partner[t] = usize::MAX;
        }
        false
    }
}

/// Topological order of an acyclic relation, smallest available index first.
fn linear_extension(succ: &[VertexSet]) -> Vec<usize> {
    let n = succ.len();
    let mut indegree = vec![0usize; n];
    for &s in succ {
        for v in bits::members(s) {
            indegree[v] += 1;
        }
    }
    let mut ready: BTreeSet<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    let mut out = Vec::with_capacity(n);
    while let Some(v) = ready.pop_first() {
        out.push(v);
        for w in bits::members(succ[v]) {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                ready.insert(w);
            }
        }
    }
    assert_eq!(out.len(), n, "relation is acyclic");
    out
}

/// Searches for a pure order (`x_i y_i ∈ E`, and `x_i y_j ∈ E ⇒ i ≤ j`)
/// without a cross.
///
/// A cross is a pair `i ≠ j` with `x_i y_j, x_j y_i ∈ E`, or a triple
/// `i < j < l` with `x_i y_j, x_j y_l ∈ E` but `x_i y_l ∉ E`. Positions are
/// filled left to right; a curve may only be placed once all of its
/// points have been placed.
pub fn cross_free_pure_order(g: &BipartiteGraph, caps: &Caps) -> Result<Option<VertexOrder>> {
    let (s, k) = (g.num_x(), g.num_y());
    if s != k {
        return Ok(None);
    }
    check_part_cap(g, caps)?;
    let x_adj = x_bitsets(g);
    let y_adj: Vec<VertexSet> = (0..k)
        .map(|y| bits::from_iter(g.y_neighbors(y).iter().copied()))
        .collect();
    let mut placed = Placement {
        x_adj,
        y_adj,
        xs: Vec::new(),
        ys: Vec::new(),
        x_used: 0,
        y_used: 0,
    };
    Ok(placed.fill().then_some(VertexOrder {
        x: placed.xs,
        y: placed.ys,
    }))
}

struct Placement {
    x_adj: Vec<VertexSet>,
    y_adj: Vec<VertexSet>,
    xs: Vec<usize>,
    ys: Vec<usize>,
    x_used: VertexSet,
    y_used: VertexSet,
}

impl Placement {
    fn edge(&self, x: usize, y: usize) -> bool {
        bits::contains(self.x_adj[x], y)
    }

    fn creates_cross(&self, x: usize, y: usize) -> bool {
        let t = self.xs.len();
        for v in 0..t {
            if self.edge(x, self.ys[v]) && self.edge(self.xs[v], y) {
                return true;
            }
            if !self.edge(self.xs[v], y) {
                continue;
            }
            for u in 0..v {
                if self.edge(self.xs[u], self.ys[v]) && !self.edge(self.xs[u], y) {
                    return true;
                }
            }
        }
        false
    }

    fn fill(&mut self) -> bool {
        let n = self.x_adj.len();
        if self.xs.len() == n {
            return true;
        }
        for x in bits::members(bits::full(n) & !self.x_used) {
            for y in bits::members(self.x_adj[x] & !self.y_used) {
                // y's points must all sit at or before this position
                if !bits::is_subset(self.y_adj[y], self.x_used | 1 << x) || self.creates_cross(x, y)
                {
                    continue;
                }
                self.xs.push(x);
                self.ys.push(y);
                self.x_used |= 1 << x;
                self.y_used |= 1 << y;
                if self.fill() {
                    return true;
                }
                self.xs.pop();
                self.ys.pop();
                self.x_used &= !(1 << x);
                self.y_used &= !(1 << y);
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangements::*;
    use crate::bipartite::levi_graph;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn perfect_matching_graph() {
        let g = BipartiteGraph::new(3, 3, [(0, 0), (1, 1), (2, 2)]).unwrap();
        let o = herzog_hibi_search(&g, &caps()).unwrap();
        assert_eq!(
            o.order(),
            Some(&VertexOrder {
                x: vec![0, 1, 2],
                y: vec![0, 1, 2]
            })
        );
        assert_eq!(
            cross_free_pure_order(&g, &caps()).unwrap().unwrap().len(),
            3
        );
    }

    #[test]
    fn four_cycle_fails() {
        let g = BipartiteGraph::new(2, 2, [(0, 1), (1, 0), (0, 0), (1, 1)]).unwrap();
        let o = herzog_hibi_search(&g, &caps()).unwrap();
        assert!(matches!(
            o,
            OrderSearch::NotFound {
                witness: SearchFailure::Exhausted { .. }
            }
        ));
        assert_eq!(cross_free_pure_order(&g, &caps()).unwrap(), None);
    }

    #[test]
    fn path_on_four_vertices() {
        // x1 - y1 - x2 - y2: x2 y1 forces the pair (x2, y2) first.
        let g = BipartiteGraph::new(2, 2, [(0, 0), (1, 0), (1, 1)]).unwrap();
        let o = herzog_hibi_search(&g, &caps()).unwrap();
        assert_eq!(
            o.order(),
            Some(&VertexOrder {
                x: vec![1, 0],
                y: vec![1, 0]
            })
        );
        assert!(cross_free_pure_order(&g, &caps()).unwrap().is_some());
    }

    #[test]
    fn section3_configuration() {
        let g = levi_graph(&gen_marked_triple_point().unwrap());
        assert!(herzog_hibi_search(&g, &caps()).unwrap().is_found());
        assert!(cross_free_pure_order(&g, &caps()).unwrap().is_some());
    }

    #[test]
    fn part_sizes_and_hall() {
        let g = levi_graph(&gen_generic_lines(4).unwrap());
        assert_eq!(
            herzog_hibi_search(&g, &caps()).unwrap(),
            OrderSearch::NotFound {
                witness: SearchFailure::PartSizes { s: 6, k: 4 }
            }
        );
        let h = BipartiteGraph::new(2, 2, [(0, 0), (1, 0)]).unwrap();
        let o = herzog_hibi_search(&h, &caps()).unwrap();
        assert!(matches!(
            o,
            OrderSearch::NotFound {
                witness: SearchFailure::NoPerfectMatching { .. }
            }
        ));
    }

    #[test]
    fn quasi_pencils_fail() {
        for k in 3..=8 {
            let g = levi_graph(&gen_quasi_pencil(k).unwrap());
            assert!(
                !herzog_hibi_search(&g, &caps()).unwrap().is_found(),
                "k = {k}"
            );
            assert_eq!(cross_free_pure_order(&g, &caps()).unwrap(), None);
        }
    }

    #[test]
    fn search_cap() {
        let small = Caps {
            search_part: 3,
            ..Caps::default()
        };
        let g = levi_graph(&gen_quasi_pencil(4).unwrap());
        assert!(matches!(
            herzog_hibi_search(&g, &small),
            Err(Error::CapExceeded { .. })
        ));
    }
}
