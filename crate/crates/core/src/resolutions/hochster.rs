use rayon::prelude::*;

use super::table::BettiTable;
use crate::bits::{self, VertexSet};
use crate::caps::Caps;
use crate::complexes::simplicial::enumerate_faces;
use crate::complexes::{stanley_reisner_ideal, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{homology_of_faces, PrimeField};

/// Which vertex subsets the Hochster sum may skip.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Pruning {
    /// Visit every subset.
    None,
    /// Skip `W` when `Δ|_W` is a cone, i.e. some vertex of `W` lies in no
    /// minimal non-face contained in `W`.
    #[default]
    Cone,
}

/// Betti table of the Stanley–Reisner quotient `S/I_Δ` by Hochster's formula:
/// `β_{i,j} = Σ_{|W| = j} dim H̃_{j−i−1}(Δ|_W)`.
pub fn betti_squarefree(
    delta: &SimplicialComplex,
    field: PrimeField,
    caps: &Caps,
) -> Result<BettiTable> {
    betti_squarefree_with(delta, field, caps, Pruning::Cone)
}

pub fn betti_squarefree_with(
    delta: &SimplicialComplex,
    field: PrimeField,
    caps: &Caps,
    pruning: Pruning,
) -> Result<BettiTable> {
    let n = delta.num_vertices();
    if n > caps.hochster_vertices {
        return Err(Error::cap("Hochster vertices", n, caps.hochster_vertices));
    }
    if delta.is_void() {
        return Err(Error::UnitIdeal);
    }
    let names = (0..n).map(|v| format!("v{v}")).collect();
    let non_faces = stanley_reisner_ideal(delta, names)?.supports()?;

    let subset = |w: VertexSet| -> Result<BettiTable> {
        let mut table = BettiTable::new(n);
        let inside: Vec<VertexSet> = non_faces
            .iter()
            .copied()
            .filter(|&f| bits::is_subset(f, w))
            .collect();
        if pruning == Pruning::Cone && inside.iter().fold(0, |acc, f| acc | f) != w {
            return Ok(table);
        }
        let faces = enumerate_faces(
            n,
            caps.faces,
            |f| bits::is_subset(f, w) && !inside.iter().any(|&nf| bits::is_subset(nf, f)),
            true,
        )?;
        let j = w.count_ones() as usize;
        for (r, b) in homology_of_faces(&faces, field).nonzero() {
            table.add((j as isize - r - 1) as usize, j, b as u64);
        }
        Ok(table)
    };

    (0..1u64 << n).into_par_iter().map(subset).try_reduce(
        || BettiTable::new(n),
        |mut a, b| {
            a.merge(&b);
            Ok(a)
        },
    )
}
