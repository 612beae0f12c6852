//! Bipartite incidence graphs and the matching algorithms the bounds rely on.
//!
//! Vertices are split into a point side `x₁..x_s` and a curve side
//! `y₁..y_k`. When a single vertex numbering is needed (edge ideals,
//! independence complexes) points come first: `x_i ↦ i`, `y_j ↦ s + j`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arrangements::Arrangement;
use crate::bits::{self, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "x")]
    X,
    #[serde(rename = "y")]
    Y,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::X => "x",
            Side::Y => "y",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    s: usize,
    k: usize,
    edges: BTreeSet<(usize, usize)>,
    x_adj: Vec<Vec<usize>>,
    y_adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGraph {
    s: usize,
    k: usize,
    edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(
        s: usize,
        k: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (x, y) in edges {
            if x >= s || y >= k {
                return Err(Error::InvalidGraph(format!(
                    "edge ({x}, {y}) out of range for s={s}, k={k}"
                )));
            }
            if !set.insert((x, y)) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({x}, {y})")));
            }
        }
        let mut x_adj = vec![Vec::new(); s];
        let mut y_adj = vec![Vec::new(); k];
        for &(x, y) in &set {
            x_adj[x].push(y);
            y_adj[y].push(x);
        }
        Ok(Self {
            s,
            k,
            edges: set,
            x_adj,
            y_adj,
        })
    }

    pub fn num_x(&self) -> usize {
        self.s
    }

    pub fn num_y(&self) -> usize {
        self.k
    }

    pub fn num_vertices(&self) -> usize {
        self.s + self.k
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.edges.contains(&(x, y))
    }

    pub fn x_neighbors(&self, x: usize) -> &[usize] {
        &self.x_adj[x]
    }

    pub fn y_neighbors(&self, y: usize) -> &[usize] {
        &self.y_adj[y]
    }

    pub fn x_label(x: usize) -> String {
        format!("x{}", x + 1)
    }

    pub fn y_label(y: usize) -> String {
        format!("y{}", y + 1)
    }

    /// Variable names `x1..xs, y1..yk` in the combined numbering.
    pub fn variable_names(&self) -> Vec<String> {
        (0..self.s)
            .map(Self::x_label)
            .chain((0..self.k).map(Self::y_label))
            .collect()
    }

    /// Neighborhoods in the combined numbering, as bitsets.
    pub fn adjacency_sets(&self) -> Result<Vec<VertexSet>> {
        let n = self.num_vertices();
        if n > MAX_VERTICES {
            return Err(Error::cap("graph vertices", n, MAX_VERTICES));
        }
        let mut adj = vec![0u64; n];
        for &(x, y) in &self.edges {
            adj[x] |= 1 << (self.s + y);
            adj[self.s + y] |= 1 << x;
        }
        Ok(adj)
    }

    /// Removes isolated vertices, returning the smaller graph together with
    /// the surviving original indices on each side.
    pub fn without_isolated(&self) -> (Self, Vec<usize>, Vec<usize>) {
        let xs: Vec<usize> = (0..self.s).filter(|&x| !self.x_adj[x].is_empty()).collect();
        let ys: Vec<usize> = (0..self.k).filter(|&y| !self.y_adj[y].is_empty()).collect();
        (self.induced(&xs, &ys), xs, ys)
    }

    /// Subgraph on the given sorted vertex lists, relabelled `0..`.
    pub fn induced(&self, xs: &[usize], ys: &[usize]) -> Self {
        let mut x_new = vec![usize::MAX; self.s];
        let mut y_new = vec![usize::MAX; self.k];
        xs.iter().enumerate().for_each(|(i, &x)| x_new[x] = i);
        ys.iter().enumerate().for_each(|(j, &y)| y_new[y] = j);
        let edges = self
            .edges
            .iter()
            .filter(|&&(x, y)| x_new[x] != usize::MAX && y_new[y] != usize::MAX)
            .map(|&(x, y)| (x_new[x], y_new[y]));
        Self::new(xs.len(), ys.len(), edges).expect("relabelled subgraph is valid")
    }

    /// Connected components as sorted `(xs, ys)` lists, ordered by their
    /// smallest vertex (points before curves).
    pub fn components(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let mut comp_x = vec![usize::MAX; self.s];
        let mut comp_y = vec![usize::MAX; self.k];
        let mut out: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        let starts = (0..self.s)
            .map(|x| (true, x))
            .chain((0..self.k).map(|y| (false, y)));
        for (is_x, v) in starts {
            if (is_x && comp_x[v] != usize::MAX) || (!is_x && comp_y[v] != usize::MAX) {
                continue;
            }
            let c = out.len();
            let (mut xs, mut ys) = (Vec::new(), Vec::new());
            let mut stack = vec![(is_x, v)];
            if is_x {
                comp_x[v] = c
            } else {
                comp_y[v] = c
            }
            while let Some((is_x, v)) = stack.pop() {
                if is_x {
                    xs.push(v);
                    for &y in &self.x_adj[v] {
                        if comp_y[y] == usize::MAX {
                            comp_y[y] = c;
                            stack.push((false, y));
                        }
                    }
                } else {
                    ys.push(v);
                    for &x in &self.y_adj[v] {
                        if comp_x[x] == usize::MAX {
                            comp_x[x] = c;
                            stack.push((true, x));
                        }
                    }
                }
            }
            xs.sort_unstable();
            ys.sort_unstable();
            out.push((xs, ys));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let raw = RawGraph {
            s: self.s,
            k: self.k,
            edges: self.edges.iter().copied().collect(),
        };
        serde_json::to_string(&raw).expect("graph serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawGraph = serde_json::from_str(text)?;
        Self::new(raw.s, raw.k, raw.edges)
    }
}

impl fmt::Display for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|&(x, y)| format!("{}{}", Self::x_label(x), Self::y_label(y)))
            .collect();
        write!(f, "G(s={}, k={}; {})", self.s, self.k, edges.join(", "))
    }
}

/// Levi graph: one x-vertex per point, one y-vertex per curve.
pub fn levi_graph(a: &Arrangement) -> BipartiteGraph {
    let edges = a
        .points()
        .iter()
        .enumerate()
        .flat_map(|(x, p)| p.curves.iter().map(move |&y| (x, y)));
    BipartiteGraph::new(a.num_points(), a.num_curves(), edges)
        .expect("arrangement incidences are valid")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Matching {
    pub size: usize,
    /// `(x, y)` pairs, sorted by `x`.
    pub edges: Vec<(usize, usize)>,
}

struct Augmenter<'a> {
    g: &'a BipartiteGraph,
    mate_x: Vec<Option<usize>>,
    mate_y: Vec<Option<usize>>,
    seen: Vec<bool>,
}

impl Augmenter<'_> {
    fn augment(&mut self, x: usize) -> bool {
        for &y in self.g.x_neighbors(x) {
            if self.seen[y] {
                continue;
            }
            self.seen[y] = true;
            if self.mate_y[y].is_none_or(|other| self.augment(other)) {
                self.mate_x[x] = Some(y);
                self.mate_y[y] = Some(x);
                return true;
            }
        }
        false
    }
}

fn augmenting_matching(g: &BipartiteGraph) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    let mut aug = Augmenter {
        g,
        mate_x: vec![None; g.s],
        mate_y: vec![None; g.k],
        seen: vec![false; g.k],
    };
    for x in 0..g.s {
        aug.seen.iter_mut().for_each(|s| *s = false);
        aug.augment(x);
    }
    (aug.mate_x, aug.mate_y)
}

/// Maximum matching by repeated augmenting-path search.
pub fn max_matching(g: &BipartiteGraph) -> Matching {
    let (mate_x, _) = augmenting_matching(g);
    let edges: Vec<_> = mate_x
        .iter()
        .enumerate()
        .filter_map(|(x, y)| y.map(|y| (x, y)))
        .collect();
    Matching {
        size: edges.len(),
        edges,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum HallOutcome {
    Pass,
    /// A subset of the checked side with fewer neighbors than members.
    Violation {
        side: Side,
        subset: Vec<usize>,
        neighbors: Vec<usize>,
    },
}

impl HallOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, HallOutcome::Pass)
    }
}

/// Hall's condition on one side, with a deficient subset when it fails.
///
/// The witness is the set of `side` vertices reachable by alternating paths
/// from an unmatched vertex of a maximum matching; its neighborhood has
/// exactly one vertex fewer.
pub fn hall_check(g: &BipartiteGraph, side: Side) -> HallOutcome {
    let (mate_x, mate_y) = augmenting_matching(g);
    let (mine, other_mate) = match side {
        Side::X => (&mate_x, &mate_y),
        Side::Y => (&mate_y, &mate_x),
    };
    let nbrs = |v: usize| match side {
        Side::X => g.x_neighbors(v),
        Side::Y => g.y_neighbors(v),
    };
    let Some(root) = mine.iter().position(Option::is_none) else {
        return HallOutcome::Pass;
    };
    let mut subset = BTreeSet::from([root]);
    let mut neighbors = BTreeSet::new();
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        for &u in nbrs(v) {
            if neighbors.insert(u) {
                let partner = other_mate[u].expect("maximum matching leaves no augmenting path");
                if subset.insert(partner) {
                    stack.push(partner);
                }
            }
        }
    }
    HallOutcome::Violation {
        side,
        subset: subset.into_iter().collect(),
        neighbors: neighbors.into_iter().collect(),
    }
}

/// Default cap on edges for the exact induced matching search.
pub const INDUCED_MATCHING_EDGE_CAP: usize = 40;

/// Largest matching whose edges induce no further edges between them.
///
/// Exact branch-and-bound over the edge conflict graph; fails with
/// `CapExceeded` above `cap` edges.
pub fn induced_matching(g: &BipartiteGraph, cap: usize) -> Result<Matching> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    if m > cap || m > 64 {
        return Err(Error::cap("induced matching edges", m, cap.min(64)));
    }
    // conflict[e]: edges that cannot share an induced matching with e.
    let conflict: Vec<u64> = edges
        .iter()
        .map(|&(x, y)| {
            edges.iter().enumerate().fold(0u64, |acc, (f, &(a, b))| {
                let touches = a == x || b == y || g.has_edge(x, b) || g.has_edge(a, y);
                if touches {
                    acc | 1 << f
                } else {
                    acc
                }
            })
        })
        .collect();
    let mut best = 0u64;
    search_independent(&conflict, bits::full(m), 0, &mut best);
    let chosen: Vec<_> = bits::members(best).map(|e| edges[e]).collect();
    Ok(Matching {
        size: chosen.len(),
        edges: chosen,
    })
}

fn search_independent(conflict: &[u64], candidates: u64, current: u64, best: &mut u64) {
    if candidates == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    if current.count_ones() + candidates.count_ones() <= best.count_ones() {
        return;
    }
    let e = candidates.trailing_zeros() as usize;
    search_independent(conflict, candidates & !conflict[e], current | 1 << e, best);
    search_independent(conflict, candidates & !(1 << e), current, best);
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub x_degrees: Vec<usize>,
    pub y_degrees: Vec<usize>,
    pub min_x: Option<usize>,
    pub min_y: Option<usize>,
    pub max_degree: usize,
    /// Degree-one vertices as labels (`x3`, `y1`, ...).
    pub leaves: Vec<String>,
    pub isolated: Vec<String>,
}

pub fn degree_profile(g: &BipartiteGraph) -> DegreeProfile {
    let x_degrees: Vec<usize> = g.x_adj.iter().map(Vec::len).collect();
    let y_degrees: Vec<usize> = g.y_adj.iter().map(Vec::len).collect();
    let labelled = |want: usize| -> Vec<String> {
        let xs = x_degrees
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == want)
            .map(|(i, _)| BipartiteGraph::x_label(i));
        let ys = y_degrees
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == want)
            .map(|(j, _)| BipartiteGraph::y_label(j));
        xs.chain(ys).collect()
    };
    DegreeProfile {
        min_x: x_degrees.iter().copied().min(),
        min_y: y_degrees.iter().copied().min(),
        max_degree: x_degrees
            .iter()
            .chain(&y_degrees)
            .copied()
            .max()
            .unwrap_or(0),
        leaves: labelled(1),
        isolated: labelled(0),
        x_degrees,
        y_degrees,
    }
}
