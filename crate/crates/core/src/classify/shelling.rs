use std::collections::HashSet;

use serde::Serialize;

use crate::bipartite::{degree_profile, BipartiteGraph};
use crate::bits::{self, VertexSet};
use crate::caps::Caps;
use crate::complexes::{independence_complex, FaceList, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{homology_of_faces, PrimeField};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Obstruction {
    /// After removing isolated vertices the graph has edges but no vertex
    /// of degree one.
    NoLeaf,
    /// No ordering of the facets is a shelling.
    Exhausted { facets: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ShellingVerdict {
    /// Facets of the independence complex (graph vertex numbering) in
    /// shelling order.
    Shellable {
        order: Vec<VertexSet>,
    },
    NotShellable {
        obstruction: Obstruction,
    },
}

impl ShellingVerdict {
    pub fn is_shellable(&self) -> bool {
        matches!(self, ShellingVerdict::Shellable { .. })
    }
}

/// Decides shellability of the independence complex of `g`.
///
/// Isolated vertices are cone points and are set aside. The complex of a
/// disconnected graph is the join of the complexes of its components, and a
/// join is shellable exactly when every factor is, so each component is
/// decided on its own: a component with edges but no leaf is rejected
/// outright, otherwise its facet orderings are searched (non-pure
/// shellability). Component shellings are combined in lexicographic order.
pub fn is_shellable(g: &BipartiteGraph, caps: &Caps) -> Result<ShellingVerdict> {
    let s = g.num_x();
    let mut parts = Vec::new();
    let mut cone: VertexSet = 0;
    for (xs, ys) in g.components() {
        let kept: Vec<usize> = xs
            .iter()
            .copied()
            .chain(ys.iter().map(|&y| s + y))
            .collect();
        if kept.len() == 1 {
            cone |= 1 << kept[0];
            continue;
        }
        let comp = g.induced(&xs, &ys);
        if degree_profile(&comp).leaves.is_empty() {
            return Ok(ShellingVerdict::NotShellable {
                obstruction: Obstruction::NoLeaf,
            });
        }
        let facets = independence_complex(&comp)?.facets().to_vec();
        if facets.len() > caps.shelling_facets {
            return Err(Error::cap(
                "shelling search facets",
                facets.len(),
                caps.shelling_facets,
            ));
        }
        let Some(order) = shelling_order(&facets) else {
            let facets = facets.len();
            return Ok(ShellingVerdict::NotShellable {
                obstruction: Obstruction::Exhausted { facets },
            });
        };
        let lift = |f: VertexSet| bits::members(f).fold(0, |acc, v| acc | 1 << kept[v]);
        parts.push(
            order
                .into_iter()
                .map(|i| lift(facets[i]))
                .collect::<Vec<VertexSet>>(),
        );
    }
    let mut order = vec![cone];
    for part in parts {
        order = order
            .iter()
            .flat_map(|&a| part.iter().map(move |&b| a | b))
            .collect();
    }
    Ok(ShellingVerdict::Shellable { order })
}

/// Depth-first search over facet orderings. Whether a facet may come next
/// depends only on the set already placed, so failed sets are remembered.
pub(crate) fn shelling_order(facets: &[VertexSet]) -> Option<Vec<usize>> {
    let m = facets.len();
    // ridge[j]: facets k with |F_j \ F_k| = 1
    let ridge: Vec<u64> = (0..m)
        .map(|j| {
            (0..m)
                .filter(|&k| (facets[j] & !facets[k]).count_ones() == 1)
                .fold(0, |a, k| a | 1 << k)
        })
        .collect();
    let fits = |placed: u64, j: usize| {
        placed == 0
            || bits::members(placed).all(|i| {
                let meet = facets[i] & facets[j];
                bits::members(ridge[j] & placed).any(|k| bits::is_subset(meet, facets[k]))
            })
    };
    let mut dead = HashSet::new();
    let mut order = Vec::with_capacity(m);
    fn go(
        m: usize,
        placed: u64,
        order: &mut Vec<usize>,
        dead: &mut HashSet<u64>,
        fits: &dyn Fn(u64, usize) -> bool,
    ) -> bool {
        if order.len() == m {
            return true;
        }
        if dead.contains(&placed) {
            return false;
        }
        for j in 0..m {
            if placed & 1 << j == 0 && fits(placed, j) {
                order.push(j);
                if go(m, placed | 1 << j, order, dead, fits) {
                    return true;
                }
                order.pop();
            }
        }
        dead.insert(placed);
        false
    }
    go(m, 0, &mut order, &mut dead, &fits).then_some(order)
}

/// Sequential Cohen–Macaulayness of `Δ`, decided without shellings: every
/// pure skeleton `Δ^{[i]}` must be Cohen–Macaulay, which is tested by
/// Reisner's criterion `H̃_j(lk F) = 0` for `j < dim lk F`.
pub fn is_sequentially_cm(
    delta: &SimplicialComplex,
    field: PrimeField,
    caps: &Caps,
) -> Result<bool> {
    let Some(dim) = delta.dim() else {
        return Ok(true);
    };
    let faces = delta.faces(caps.faces)?;
    if faces.total().saturating_mul(faces.total()) > caps.faces.saturating_mul(64) {
        return Err(Error::cap("link computations", faces.total(), caps.faces));
    }
    for i in 0..=dim.max(0) as usize {
        if !is_cm_faces(&pure_skeleton(&faces, i), field) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Faces lying in some face with `i + 1` vertices.
fn pure_skeleton(faces: &FaceList, i: usize) -> FaceList {
    let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); i + 2];
    by_size[i + 1] = faces.by_size.get(i + 1).cloned().unwrap_or_default();
    for t in (0..=i).rev() {
        let mut level: Vec<VertexSet> = by_size[t + 1]
            .iter()
            .flat_map(|&f| bits::members(f).map(move |v| f & !(1 << v)))
            .collect();
        level.sort_unstable();
        level.dedup();
        by_size[t] = level;
    }
    if by_size[0].is_empty() {
        // the skeleton is void when Δ has no i-faces
        return FaceList::default();
    }
    FaceList { by_size }
}

fn is_cm_faces(faces: &FaceList, field: PrimeField) -> bool {
    let top = faces.by_size.len();
    let all: Vec<VertexSet> = faces.by_size.iter().flatten().copied().collect();
    let set: HashSet<VertexSet> = all.iter().copied().collect();
    all.iter().all(|&f| {
        let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); top];
        for &g in &all {
            if g & f == 0 && set.contains(&(g | f)) {
                by_size[g.count_ones() as usize].push(g);
            }
        }
        while by_size.last().is_some_and(Vec::is_empty) {
            by_size.pop();
        }
        let link_dim = by_size.len() as isize - 2;
        let h = homology_of_faces(&FaceList { by_size }, field);
        let acyclic_below = h.nonzero().all(|(j, _)| j >= link_dim);
        acyclic_below
    })
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
    fn star_is_shellable() {
        let g = levi_graph(&gen_pencil(4).unwrap());
        let v = is_shellable(&g, &caps()).unwrap();
        assert_eq!(
            v,
            ShellingVerdict::Shellable {
                order: vec![0b11110, 0b00001]
            }
        );
    }

    #[test]
    fn no_leaf_rejections() {
        for a in [
            gen_quasi_pencil(4).unwrap(),
            gen_conic_6_5().unwrap(),
            gen_generic_lines(4).unwrap(),
        ] {
            let v = is_shellable(&levi_graph(&a), &caps()).unwrap();
            assert_eq!(
                v,
                ShellingVerdict::NotShellable {
                    obstruction: Obstruction::NoLeaf
                }
            );
        }
    }

    #[test]
    fn isolated_vertices_are_cone_points() {
        let g = BipartiteGraph::new(2, 2, [(0, 0)]).unwrap();
        let v = is_shellable(&g, &caps()).unwrap();
        // vertices: x1=0, x2=1, y1=2, y2=3; x2 and y2 are isolated
        assert_eq!(
            v,
            ShellingVerdict::Shellable {
                order: vec![0b1011, 0b1110]
            }
        );
        let empty = BipartiteGraph::new(1, 1, []).unwrap();
        assert_eq!(
            is_shellable(&empty, &caps()).unwrap(),
            ShellingVerdict::Shellable { order: vec![0b11] }
        );
    }

    #[test]
    fn disconnected_facets() {
        // Ind of two disjoint edges is a 4-cycle, which is shellable.
        let g = BipartiteGraph::new(2, 2, [(0, 0), (1, 1)]).unwrap();
        assert!(is_shellable(&g, &caps()).unwrap().is_shellable());
        let facets = [0b0011, 0b1100];
        assert_eq!(shelling_order(&facets), None);
    }

    #[test]
    fn duval_agrees_on_small_cases() {
        let f = PrimeField::GF2;
        let two_edges = SimplicialComplex::new(4, [0b0011, 0b1100]).unwrap();
        assert!(!is_sequentially_cm(&two_edges, f, &caps()).unwrap());
        let edge_and_point = SimplicialComplex::new(3, [0b011, 0b100]).unwrap();
        assert!(is_sequentially_cm(&edge_and_point, f, &caps()).unwrap());
        let qp = independence_complex(&levi_graph(&gen_quasi_pencil(4).unwrap())).unwrap();
        assert!(!is_sequentially_cm(&qp, f, &caps()).unwrap());
        let star = independence_complex(&levi_graph(&gen_pencil(5).unwrap())).unwrap();
        assert!(is_sequentially_cm(&star, f, &caps()).unwrap());
    }
}
