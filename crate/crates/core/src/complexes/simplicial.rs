use std::collections::HashSet;
use std::fmt;

use crate::bipartite::BipartiteGraph;
use crate::bits::{self, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// Default cap on the number of faces enumerated for a single complex.
pub const FACE_CAP: usize = 1 << 18;

/// A simplicial complex on vertices `0..n`, stored by its facets.
///
/// Two degenerate values are kept apart: the *void* complex has no faces
/// at all, while the *irrelevant* complex `{∅}` has the empty face only.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

/// All faces of a complex grouped by cardinality: `by_size[t]` holds the
/// faces with `t` vertices (dimension `t − 1`), sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FaceList {
    pub by_size: Vec<Vec<VertexSet>>,
}

impl FaceList {
    pub fn total(&self) -> usize {
        self.by_size.iter().map(Vec::len).sum()
    }

    /// Face counts `f_{-1}, f_0, f_1, ...`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.by_size.iter().map(Vec::len).collect()
    }

    pub fn is_void(&self) -> bool {
        self.by_size.is_empty()
    }
}

fn check_vertices(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::cap("complex vertices", n, MAX_VERTICES));
    }
    Ok(())
}

impl SimplicialComplex {
    /// Complex generated by `faces`; non-maximal entries are dropped.
    pub fn new(n: usize, faces: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        check_vertices(n)?;
        let faces: Vec<_> = faces.into_iter().collect();
        if let Some(bad) = faces.iter().find(|&&f| !bits::is_subset(f, bits::full(n))) {
            return Err(Error::InvalidIdeal(format!(
                "face {bad:#b} uses a vertex outside 0..{n}"
            )));
        }
        let facets = if faces.is_empty() {
            faces
        } else {
            bits::maximal_sets(faces)
        };
        Ok(Self { n, facets })
    }

    pub fn void(n: usize) -> Self {
        Self {
            n,
            facets: Vec::new(),
        }
    }

    pub fn irrelevant(n: usize) -> Self {
        Self { n, facets: vec![0] }
    }

    pub fn simplex(n: usize) -> Self {
        Self {
            n,
            facets: vec![bits::full(n)],
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension `max |F| − 1`; `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets
            .iter()
            .map(|f| f.count_ones() as isize - 1)
            .max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets
            .windows(2)
            .all(|w| w[0].count_ones() == w[1].count_ones())
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|&f| bits::is_subset(face, f))
    }

    /// Faces contained in `w`.
    pub fn induced(&self, w: VertexSet) -> Self {
        if self.is_void() {
            return self.clone();
        }
        Self {
            n: self.n,
            facets: bits::maximal_sets(self.facets.iter().map(|f| f & w).collect()),
        }
    }

    /// Vertices lying in every facet.
    pub fn cone_points(&self) -> VertexSet {
        self.facets.iter().fold(
            if self.is_void() {
                0
            } else {
                bits::full(self.n)
            },
            |acc, f| acc & f,
        )
    }

    /// Enumerates every face, level by level, failing above `cap` faces.
    pub fn faces(&self, cap: usize) -> Result<FaceList> {
        let facets = &self.facets;
        enumerate_faces(
            self.n,
            cap,
            |face| facets.iter().any(|&f| bits::is_subset(face, f)),
            !self.is_void(),
        )
    }

    /// Cone over this complex with apex a new vertex `n`.
    pub fn cone(&self) -> Result<Self> {
        check_vertices(self.n + 1)?;
        let apex = 1u64 << self.n;
        Ok(Self {
            n: self.n + 1,
            facets: self.facets.iter().map(|f| f | apex).collect(),
        })
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "void complex on {} vertices", self.n);
        }
        let facets: Vec<String> = self
            .facets
            .iter()
            .map(|&s| {
                format!(
                    "{{{}}}",
                    bits::members(s)
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect();
        write!(f, "<{}>", facets.join(" "))
    }
}

/// Level-wise enumeration: a set of size `t + 1` is generated from its
/// prefix (itself minus the largest vertex) when `is_face` accepts it.
pub(crate) fn enumerate_faces(
    n: usize,
    cap: usize,
    is_face: impl Fn(VertexSet) -> bool,
    nonvoid: bool,
) -> Result<FaceList> {
    if !nonvoid {
        return Ok(FaceList::default());
    }
    let mut by_size = vec![vec![0u64]];
    let mut total = 1usize;
    loop {
        let last = by_size.last().expect("at least the empty face");
        let mut next = Vec::new();
        for &f in last {
            let start = if f == 0 {
                0
            } else {
                64 - f.leading_zeros() as usize
            };
            for v in start..n {
                let g = f | 1 << v;
                if is_face(g) {
                    next.push(g);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        total += next.len();
        if total > cap {
            return Err(Error::cap("complex faces", total, cap));
        }
        next.sort_unstable();
        by_size.push(next);
    }
    Ok(FaceList { by_size })
}

/// Independent sets of the graph induced on `w`, as a face list.
pub fn independent_sets(adj: &[VertexSet], w: VertexSet, cap: usize) -> Result<FaceList> {
    let n = adj.len();
    enumerate_faces(
        n,
        cap,
        |g| {
            if !bits::is_subset(g, w) {
                return false;
            }
            bits::members(g).all(|v| adj[v] & g == 0)
        },
        true,
    )
}

/// Independence complex: facets are the maximal independent sets,
/// enumerated by Bron–Kerbosch with pivoting on the complement graph.
pub fn independence_complex(g: &BipartiteGraph) -> Result<SimplicialComplex> {
    let adj = g.adjacency_sets()?;
    let n = adj.len();
    let all = bits::full(n);
    let co: Vec<VertexSet> = adj
        .iter()
        .enumerate()
        .map(|(v, a)| all & !a & !(1u64 << v))
        .collect();
    SimplicialComplex::new(n, maximal_cliques(&co))
}

/// Maximal cliques of a graph given by neighbor bitsets.
pub(crate) fn maximal_cliques(adj: &[VertexSet]) -> Vec<VertexSet> {
    let mut out = Vec::new();
    bron_kerbosch(adj, 0, bits::full(adj.len()), 0, &mut out);
    out
}

fn bron_kerbosch(
    co: &[VertexSet],
    r: VertexSet,
    p: VertexSet,
    x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let pivot = bits::members(p | x)
        .max_by_key(|&u| (co[u] & p).count_ones())
        .expect("p | x nonempty");
    let mut p = p;
    let mut x = x;
    for v in bits::members(p & !co[pivot]) {
        bron_kerbosch(co, r | 1 << v, p & co[v], x & co[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// All independent sets of a graph, counted by brute force over subsets.
#[cfg(test)]
pub(crate) fn count_independent_sets(adj: &[VertexSet]) -> usize {
    let n = adj.len();
    (0..1u64 << n)
        .filter(|&s| bits::members(s).all(|v| adj[v] & s == 0))
        .count()
}

/// Set-based membership test used by face-heavy algorithms.
pub(crate) fn face_set(list: &FaceList) -> HashSet<VertexSet> {
    list.by_size.iter().flatten().copied().collect()
}
