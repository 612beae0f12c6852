//! Graded Betti tables of monomial quotients and the invariants read off them.

mod general;
mod hochster;
mod table;

use serde::Serialize;

pub use general::betti_general;
pub use hochster::{betti_squarefree, betti_squarefree_with, Pruning};
pub use table::BettiTable;

use crate::bipartite::BipartiteGraph;
use crate::caps::Caps;
use crate::complexes::{
    alexander_dual, complex_of_ideal, edge_ideal, independence_complex, MonomialIdeal,
    SimplicialComplex,
};
use crate::error::{Error, Result};
use crate::homology::PrimeField;

/// Invariants of `S/I_Δ` derived from its Betti table and `Δ`.
///
/// `reg_ideal` is `reg(S/I) + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HomologicalSummary {
    pub n: usize,
    pub pd: usize,
    pub reg_quotient: usize,
    pub reg_ideal: usize,
    /// Krull dimension, `dim Δ + 1`.
    pub dim: usize,
    /// `n − pd` (Auslander–Buchsbaum).
    pub depth: usize,
    pub codim: usize,
    pub is_cm: bool,
}

pub fn summarize(table: &BettiTable, delta: &SimplicialComplex) -> HomologicalSummary {
    let n = delta.num_vertices();
    let dim = delta.dim().map_or(0, |d| (d + 1) as usize);
    let pd = table.pd();
    let codim = n - dim;
    HomologicalSummary {
        n,
        pd,
        reg_quotient: table.reg(),
        reg_ideal: table.reg() + 1,
        dim,
        depth: n.saturating_sub(pd),
        codim,
        is_cm: pd == codim,
    }
}

/// Betti table of `S/I`, by Hochster's formula when `I` is squarefree and
/// small enough, otherwise from the lcm lattice.
pub fn betti_of_ideal(ideal: &MonomialIdeal, field: PrimeField, caps: &Caps) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_squarefree() && ideal.num_vars() <= caps.hochster_vertices {
        betti_squarefree(&complex_of_ideal(ideal)?, field, caps)
    } else {
        betti_general(ideal, field, caps)
    }
}

/// Betti table of the edge ring `S/I(G)` together with its summary.
pub fn analyze_graph(
    g: &BipartiteGraph,
    field: PrimeField,
    caps: &Caps,
) -> Result<(BettiTable, HomologicalSummary)> {
    if g.num_edges() == 0 {
        return Err(Error::ZeroIdeal);
    }
    let delta = independence_complex(g)?;
    let table = betti_squarefree(&delta, field, caps)?;
    let summary = summarize(&table, &delta);
    Ok((table, summary))
}

/// True when all generators share a degree `d` and `β_{i,j}(S/I) ≠ 0`
/// with `i ≥ 1` forces `j = i + d − 1`.
pub fn has_linear_resolution(
    ideal: &MonomialIdeal,
    field: PrimeField,
    caps: &Caps,
) -> Result<bool> {
    let Some(d) = ideal.generated_in_single_degree() else {
        return Ok(false);
    };
    let table = betti_of_ideal(ideal, field, caps)?;
    let linear = table
        .entries()
        .all(|(i, j, _)| i == 0 || j + 1 == i + d as usize);
    Ok(linear)
}

/// Both sides of the Eagon–Reiner equivalence for an edge ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EagonReiner {
    /// `pd = codim` from the Betti table of `S/I(G)`.
    pub is_cm_direct: bool,
    /// The Alexander dual of `I(G)` has a linear resolution.
    pub dual_linear: bool,
}

impl EagonReiner {
    pub fn agrees(&self) -> bool {
        self.is_cm_direct == self.dual_linear
    }
}

pub fn eagon_reiner_check(
    g: &BipartiteGraph,
    field: PrimeField,
    caps: &Caps,
) -> Result<EagonReiner> {
    let (_, summary) = analyze_graph(g, field, caps)?;
    let dual = alexander_dual(&edge_ideal(g))?;
    Ok(EagonReiner {
        is_cm_direct: summary.is_cm,
        dual_linear: has_linear_resolution(&dual, field, caps)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangements::*;
    use crate::bipartite::levi_graph;
    use crate::complexes::{lcm_lattice, open_interval_complex, power, Monomial};
    use crate::homology::reduced_betti;

    fn caps() -> Caps {
        Caps::default()
    }

    /// Lattice formula evaluated on full order complexes of open intervals.
    fn betti_by_order_complex(ideal: &MonomialIdeal, field: PrimeField) -> BettiTable {
        let lattice = lcm_lattice(ideal, caps().lattice).unwrap();
        let mut t = BettiTable::new(ideal.num_vars());
        t.add(0, 0, 1);
        for m in lattice.elements() {
            let oc = open_interval_complex(&lattice, m).unwrap();
            for (r, b) in reduced_betti(&oc, field, caps().faces).unwrap().nonzero() {
                t.add((r + 2) as usize, m.degree() as usize, b as u64);
            }
        }
        t
    }

    #[test]
    fn koszul_two_variables() {
        let i = MonomialIdeal::with_default_vars(2, [Monomial(vec![1, 0]), Monomial(vec![0, 1])])
            .unwrap();
        let expected = BettiTable::from_entries(2, [(0, 0, 1), (1, 1, 2), (2, 2, 1)]);
        assert_eq!(
            betti_general(&i, PrimeField::GF2, &caps()).unwrap(),
            expected
        );
        assert_eq!(
            betti_squarefree(&complex_of_ideal(&i).unwrap(), PrimeField::GF2, &caps()).unwrap(),
            expected
        );
    }

    #[test]
    fn principal_ideal_is_linear() {
        let i = MonomialIdeal::with_default_vars(2, [Monomial(vec![1, 1])]).unwrap();
        assert!(has_linear_resolution(&i, PrimeField::GF2, &caps()).unwrap());
        let t = betti_general(&i, PrimeField::GF2, &caps()).unwrap();
        assert_eq!(t, BettiTable::from_entries(2, [(0, 0, 1), (1, 2, 1)]));
    }

    #[test]
    fn mixed_degrees_not_linear() {
        let i =
            MonomialIdeal::with_default_vars(3, [Monomial(vec![1, 0, 0]), Monomial(vec![0, 1, 1])])
                .unwrap();
        assert!(!has_linear_resolution(&i, PrimeField::GF2, &caps()).unwrap());
    }

    #[test]
    fn pencil_three_has_linear_resolution() {
        let i = edge_ideal(&levi_graph(&gen_pencil(3).unwrap()));
        let t = betti_general(&i, PrimeField::GF2, &caps()).unwrap();
        assert_eq!(t.reg() + 1, 2);
        assert!(has_linear_resolution(&i, PrimeField::GF2, &caps()).unwrap());
    }

    #[test]
    fn lattice_routes_agree() {
        let ideals = [
            edge_ideal(&levi_graph(&gen_marked_triple_point().unwrap())),
            edge_ideal(&levi_graph(&gen_quasi_pencil(3).unwrap())),
            power(&edge_ideal(&levi_graph(&gen_pencil(3).unwrap())), 2).unwrap(),
            MonomialIdeal::from_text(
                ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect(),
                "a^2*b\nb^2*c\nc^2*d\nd^2*a\na*c",
            )
            .unwrap(),
        ];
        for i in ideals {
            for p in [2, 3] {
                let f = PrimeField::new(p).unwrap();
                assert_eq!(
                    betti_general(&i, f, &caps()).unwrap(),
                    betti_by_order_complex(&i, f),
                    "{i}"
                );
            }
        }
    }

    #[test]
    fn pruning_is_exact() {
        for a in [
            gen_quasi_pencil(4).unwrap(),
            gen_pencil(5).unwrap(),
            gen_marked_triple_point().unwrap(),
        ] {
            let delta = independence_complex(&levi_graph(&a)).unwrap();
            let pruned =
                betti_squarefree_with(&delta, PrimeField::GF2, &caps(), Pruning::Cone).unwrap();
            let full =
                betti_squarefree_with(&delta, PrimeField::GF2, &caps(), Pruning::None).unwrap();
            assert_eq!(pruned, full);
        }
    }

    #[test]
    fn irrelevant_and_simplex() {
        // S/(x1, x2, x3): Koszul complex.
        let t =
            betti_squarefree(&SimplicialComplex::irrelevant(3), PrimeField::GF2, &caps()).unwrap();
        assert_eq!(t.totals(), vec![1, 3, 3, 1]);
        let z = betti_squarefree(&SimplicialComplex::simplex(3), PrimeField::GF2, &caps()).unwrap();
        assert_eq!(z, BettiTable::from_entries(3, [(0, 0, 1)]));
        assert!(matches!(
            betti_squarefree(&SimplicialComplex::void(2), PrimeField::GF2, &caps()),
            Err(Error::UnitIdeal)
        ));
    }

    #[test]
    fn hochster_cap() {
        let small = Caps {
            hochster_vertices: 4,
            ..Caps::default()
        };
        let delta = SimplicialComplex::simplex(5);
        assert!(matches!(
            betti_squarefree(&delta, PrimeField::GF2, &small),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn section3_is_cm() {
        let g = levi_graph(&gen_marked_triple_point().unwrap());
        let (t, s) = analyze_graph(&g, PrimeField::GF2, &caps()).unwrap();
        assert!(s.is_cm);
        assert_eq!(s.depth, s.dim);
        assert_eq!(t.alternating_sum(), 0);
        let er = eagon_reiner_check(&g, PrimeField::GF2, &caps()).unwrap();
        assert_eq!(
            er,
            EagonReiner {
                is_cm_direct: true,
                dual_linear: true
            }
        );
    }

    #[test]
    fn zero_ideal_reported() {
        let g = BipartiteGraph::new(2, 2, []).unwrap();
        assert!(matches!(
            analyze_graph(&g, PrimeField::GF2, &caps()),
            Err(Error::ZeroIdeal)
        ));
    }
}
