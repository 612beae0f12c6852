//! Cohen–Macaulay and shellability classification of bipartite edge rings,
//! with checkable certificates, and the bound reports for arrangements.

mod bounds;
mod certificates;
mod order;
mod shelling;
mod theorems;

use serde::Serialize;

pub use bounds::{
    bounds_report, bounds_verify, graph_bounds, power_bound_check, BoundCheck, BoundReport,
    PowerCheck, Rational,
};
pub use certificates::{verify_cross_free, verify_herzog_hibi, verify_shelling};
pub use order::{
    cross_free_pure_order, herzog_hibi_search, OrderSearch, SearchFailure, VertexOrder,
};
pub use shelling::{is_sequentially_cm, is_shellable, Obstruction, ShellingVerdict};
pub use theorems::{
    theorem_a_family, theorem_a_verify, theorem_b_verify, TheoremAEntry, TheoremBOutcome,
};

use crate::bipartite::BipartiteGraph;
use crate::bits::{self, VertexSet};
use crate::caps::Caps;
use crate::complexes::independence_complex;
use crate::error::{Error, Result};
use crate::homology::PrimeField;

/// Label of a vertex in the combined numbering `x_i ↦ i`, `y_j ↦ s + j`.
pub fn vertex_label(g: &BipartiteGraph, v: usize) -> String {
    if v < g.num_x() {
        BipartiteGraph::x_label(v)
    } else {
        BipartiteGraph::y_label(v - g.num_x())
    }
}

fn face_labels(g: &BipartiteGraph, f: VertexSet) -> Vec<String> {
    bits::members(f).map(|v| vertex_label(g, v)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelledOrder {
    pub x: Vec<String>,
    pub y: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmVerdict {
    pub is_cm: bool,
    pub order: Option<LabelledOrder>,
    pub witness: Option<SearchFailure>,
    /// Isolated vertices, set aside before the search (free variables).
    pub isolated: Vec<String>,
    /// The independent cross-free pure order search reached the same answer.
    pub cross_free_agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScmVerdict {
    /// `None` when neither the shelling search nor the skeleton test fits
    /// the caps.
    pub is_scm: Option<bool>,
    pub shelling: Option<Vec<Vec<String>>>,
    pub obstruction: Option<Obstruction>,
    /// Set when the shelling search was beyond its cap; the verdict, if
    /// any, then comes from the pure skeletons.
    pub search_skipped: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationVerdict {
    pub s: usize,
    pub k: usize,
    pub edges: usize,
    pub cohen_macaulay: CmVerdict,
    /// `None` for complete bipartite graphs that are not Cohen–Macaulay,
    /// where the equivalence does not apply.
    pub buchsbaum: Option<bool>,
    pub k_buchsbaum: bool,
    pub sequentially_cohen_macaulay: ScmVerdict,
}

/// Classifies `S/I(G)`: Cohen–Macaulay by the ordering criterion,
/// Buchsbaum variants by their equivalence with it, and sequentially
/// Cohen–Macaulay by shellability.
pub fn classify_graph(g: &BipartiteGraph, caps: &Caps) -> Result<ClassificationVerdict> {
    let (core, xs, ys) = g.without_isolated();
    let search = herzog_hibi_search(&core, caps)?;
    let cross_free = cross_free_pure_order(&core, caps)?;
    let isolated = (0..g.num_x())
        .filter(|x| !xs.contains(x))
        .map(BipartiteGraph::x_label)
        .chain(
            (0..g.num_y())
                .filter(|y| !ys.contains(y))
                .map(BipartiteGraph::y_label),
        )
        .collect();
    let (order, witness) = match &search {
        OrderSearch::Found { order } => (
            Some(LabelledOrder {
                x: order
                    .x
                    .iter()
                    .map(|&i| BipartiteGraph::x_label(xs[i]))
                    .collect(),
                y: order
                    .y
                    .iter()
                    .map(|&j| BipartiteGraph::y_label(ys[j]))
                    .collect(),
            }),
            None,
        ),
        OrderSearch::NotFound { witness } => (None, Some(witness.clone())),
    };
    let is_cm = search.is_found();
    let cm = CmVerdict {
        is_cm,
        order,
        witness,
        isolated,
        cross_free_agrees: cross_free.is_some() == is_cm,
    };

    let complete = core.num_edges() == core.num_x() * core.num_y();
    let buchsbaum = if is_cm || !complete {
        Some(is_cm)
    } else {
        None
    };

    let scm = match is_shellable(g, caps) {
        Ok(ShellingVerdict::Shellable { order }) => ScmVerdict {
            is_scm: Some(true),
            shelling: Some(order.iter().map(|&f| face_labels(g, f)).collect()),
            obstruction: None,
            search_skipped: None,
        },
        Ok(ShellingVerdict::NotShellable { obstruction }) => ScmVerdict {
            is_scm: Some(false),
            shelling: None,
            obstruction: Some(obstruction),
            search_skipped: None,
        },
        Err(e @ Error::CapExceeded { .. }) => {
            // shellability of a bipartite graph does not depend on the field
            let by_skeletons = independence_complex(g)
                .and_then(|delta| is_sequentially_cm(&delta, PrimeField::GF2, caps));
            let is_scm = match by_skeletons {
                Ok(b) => Some(b),
                Err(Error::CapExceeded { .. }) => None,
                Err(other) => return Err(other),
            };
            ScmVerdict {
                is_scm,
                shelling: None,
                obstruction: None,
                search_skipped: Some(e.to_string()),
            }
        }
        Err(e) => return Err(e),
    };
    Ok(ClassificationVerdict {
        s: g.num_x(),
        k: g.num_y(),
        edges: g.num_edges(),
        cohen_macaulay: cm,
        buchsbaum,
        k_buchsbaum: is_cm,
        sequentially_cohen_macaulay: scm,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

impl ClassificationVerdict {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("verdict serializes")
    }

    /// Human-readable report naming the criterion behind each answer.
    pub fn report(&self) -> String {
        let cm = &self.cohen_macaulay;
        let mut out = String::new();
        let detail = match (&cm.order, &cm.witness) {
            (Some(o), _) => {
                let pairs: Vec<String> =
                    o.x.iter()
                        .zip(&o.y)
                        .map(|(x, y)| format!("{x}{y}"))
                        .collect();
                format!("ordering {}", pairs.join(" "))
            }
            (None, Some(SearchFailure::PartSizes { s, k })) => format!("{s} points but {k} curves"),
            (None, Some(SearchFailure::NoPerfectMatching { subset, neighbors })) => {
                format!(
                    "no perfect matching: {{{}}} only meets {{{}}}",
                    subset.join(","),
                    neighbors.join(",")
                )
            }
            (None, Some(SearchFailure::Exhausted { branches, .. })) => {
                format!("no admissible ordering after {branches} branches")
            }
            (None, None) => String::new(),
        };
        out.push_str(&format!(
            "Cohen-Macaulay: {} (Herzog-Hibi criterion: {detail})\n",
            yes_no(cm.is_cm)
        ));
        if !cm.isolated.is_empty() {
            out.push_str(&format!(
                "  isolated vertices set aside: {}\n",
                cm.isolated.join(", ")
            ));
        }
        out.push_str(&format!(
            "  cross-free pure order criterion: {}\n",
            if cm.cross_free_agrees {
                "agrees"
            } else {
                "DISAGREES"
            }
        ));
        match self.buchsbaum {
            Some(b) => out.push_str(&format!(
                "Buchsbaum: {} (same as Cohen-Macaulay for non-complete bipartite graphs)\n",
                yes_no(b)
            )),
            None => out.push_str("Buchsbaum: not determined (complete bipartite graph)\n"),
        }
        out.push_str(&format!(
            "k-Buchsbaum for some k: {} (same as Cohen-Macaulay for bipartite graphs)\n",
            yes_no(self.k_buchsbaum)
        ));
        let scm = &self.sequentially_cohen_macaulay;
        let detail = match (&scm.shelling, &scm.obstruction, &scm.search_skipped) {
            (Some(order), _, _) => {
                let facets: Vec<String> = order
                    .iter()
                    .map(|f| format!("{{{}}}", f.join(",")))
                    .collect();
                format!("shelling certificate {}", facets.join(" "))
            }
            (None, Some(Obstruction::NoLeaf), _) => {
                "a component without a vertex of degree one, so not shellable".to_string()
            }
            (None, Some(Obstruction::Exhausted { facets }), _) => {
                format!("no shelling among orders of {facets} facets")
            }
            (None, None, Some(why)) => match scm.is_scm {
                Some(true) => {
                    format!("every pure skeleton is Cohen-Macaulay; no shelling search, {why}")
                }
                Some(false) => {
                    format!("a pure skeleton is not Cohen-Macaulay; no shelling search, {why}")
                }
                None => format!("no shelling search, {why}; pure skeletons also beyond caps"),
            },
            (None, None, None) => String::new(),
        };
        let answer = scm.is_scm.map_or("UNDECIDED", yes_no);
        out.push_str(&format!(
            "sequentially Cohen-Macaulay: {answer} ({detail}; shellable iff sequentially Cohen-Macaulay for bipartite graphs)\n"
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangements::*;
    use crate::bipartite::levi_graph;

    #[test]
    fn pencil_report() {
        let v = classify_graph(&levi_graph(&gen_pencil(5).unwrap()), &Caps::default()).unwrap();
        assert!(!v.cohen_macaulay.is_cm);
        assert_eq!(v.sequentially_cohen_macaulay.is_scm, Some(true));
        let r = v.report();
        assert!(
            r.contains(
                "sequentially Cohen-Macaulay: YES (shelling certificate {y1,y2,y3,y4,y5} {x1}"
            ),
            "{r}"
        );
        assert!(r.contains("Cohen-Macaulay: NO (Herzog-Hibi criterion: 1 points but 5 curves)"));
    }

    #[test]
    fn section3_is_cm() {
        let g = levi_graph(&gen_marked_triple_point().unwrap());
        let v = classify_graph(&g, &Caps::default()).unwrap();
        assert!(v.cohen_macaulay.is_cm && v.cohen_macaulay.cross_free_agrees);
        assert_eq!(v.buchsbaum, Some(true));
        assert_eq!(v.sequentially_cohen_macaulay.is_scm, Some(true));
        let parsed: serde_json::Value = serde_json::from_str(&v.to_json()).unwrap();
        assert_eq!(parsed["cohen_macaulay"]["is_cm"], true);
    }

    #[test]
    fn isolated_vertices_set_aside() {
        let g = BipartiteGraph::new(2, 2, [(0, 0)]).unwrap();
        let v = classify_graph(&g, &Caps::default()).unwrap();
        assert!(v.cohen_macaulay.is_cm);
        assert_eq!(v.cohen_macaulay.isolated, vec!["x2", "y2"]);
        assert_eq!(
            v.cohen_macaulay.order,
            Some(LabelledOrder {
                x: vec!["x1".into()],
                y: vec!["y1".into()]
            })
        );
    }

    #[test]
    fn complete_bipartite_buchsbaum_undetermined() {
        let g = BipartiteGraph::new(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        let v = classify_graph(&g, &Caps::default()).unwrap();
        assert!(!v.cohen_macaulay.is_cm);
        assert_eq!(v.buchsbaum, None);
    }

    #[test]
    fn beyond_shelling_cap_falls_back() {
        // four disjoint edges: Ind is a join of four 0-spheres with 16 facets
        let g = BipartiteGraph::new(4, 4, (0..4).map(|i| (i, i))).unwrap();
        let tight = Caps {
            shelling_facets: 1,
            ..Caps::default()
        };
        let v = classify_graph(&g, &tight).unwrap();
        assert_eq!(v.sequentially_cohen_macaulay.is_scm, Some(true));
        assert!(v.sequentially_cohen_macaulay.search_skipped.is_some());
        assert!(v.report().contains("every pure skeleton is Cohen-Macaulay"));
        let none = Caps {
            shelling_facets: 1,
            faces: 4,
            ..Caps::default()
        };
        let v = classify_graph(&g, &none).unwrap();
        assert_eq!(v.sequentially_cohen_macaulay.is_scm, None);
        assert!(v
            .report()
            .contains("sequentially Cohen-Macaulay: UNDECIDED"));
        let v = classify_graph(&g, &Caps::default()).unwrap();
        assert_eq!(
            v.sequentially_cohen_macaulay
                .shelling
                .as_ref()
                .map(Vec::len),
            Some(16)
        );
    }
}
