use rayon::prelude::*;

use super::table::BettiTable;
use crate::caps::Caps;
use crate::complexes::{interval_nerve, lcm_lattice, MonomialIdeal};
use crate::error::{Error, Result};
use crate::homology::{reduced_betti, PrimeField};

/// Betti table of `S/I` for any monomial ideal, from its lcm lattice:
/// `β_{i,deg m} = Σ dim H̃_{i−2}((0̂, m))` over lattice elements `m`.
///
/// Interval homology is read off the nerve of the crosscut cover (see
/// [`interval_nerve`]), which lives on at most `n` vertices.
pub fn betti_general(ideal: &MonomialIdeal, field: PrimeField, caps: &Caps) -> Result<BettiTable> {
    let n = ideal.num_vars();
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let lattice = lcm_lattice(ideal, caps.lattice)?;
    let mut table = lattice
        .elements()
        .par_iter()
        .map(|m| -> Result<BettiTable> {
            let mut t = BettiTable::new(n);
            let nerve = interval_nerve(&lattice, m)?;
            if nerve.cone_points() != 0 {
                return Ok(t);
            }
            let j = m.degree() as usize;
            for (r, b) in reduced_betti(&nerve, field, caps.faces)?.nonzero() {
                t.add((r + 2) as usize, j, b as u64);
            }
            Ok(t)
        })
        .try_reduce(
            || BettiTable::new(n),
            |mut a, b| {
                a.merge(&b);
                Ok(a)
            },
        )?;
    table.add(0, 0, 1);
    Ok(table)
}
