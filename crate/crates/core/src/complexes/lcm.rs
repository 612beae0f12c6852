use std::collections::HashSet;

use super::ideal::{Monomial, MonomialIdeal};
use super::simplicial::{maximal_cliques, SimplicialComplex};
use crate::bits::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// Default cap on the number of lattice elements (bottom included).
pub const LATTICE_CAP: usize = 1 << 14;

/// The lcm lattice of a monomial ideal: lcms of all nonempty subsets of
/// generators, ordered by divisibility, with an adjoined bottom `0̂`.
///
/// The bottom is implicit; [`elements`](Self::elements) lists the rest
/// sorted by degree, so the atoms (the generators) come first.
#[derive(Clone, Debug)]
pub struct LcmLattice {
    atoms: Vec<Monomial>,
    elements: Vec<Monomial>,
}

impl LcmLattice {
    pub fn atoms(&self) -> &[Monomial] {
        &self.atoms
    }

    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    /// Number of elements including the bottom.
    pub fn len(&self) -> usize {
        self.elements.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn top(&self) -> &Monomial {
        self.elements
            .last()
            .expect("lattice of a nonzero ideal has a top")
    }

    /// Elements `e` with `0̂ < e < m`.
    pub fn open_interval(&self, m: &Monomial) -> Vec<&Monomial> {
        self.elements
            .iter()
            .filter(|e| *e != m && e.divides(m))
            .collect()
    }

    pub fn atoms_below(&self, m: &Monomial) -> Vec<&Monomial> {
        self.atoms.iter().filter(|a| a.divides(m)).collect()
    }
}

/// Builds the lattice by closing the generators under pairwise lcm.
pub fn lcm_lattice(ideal: &MonomialIdeal, cap: usize) -> Result<LcmLattice> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let atoms = ideal.gens().to_vec();
    let mut seen: HashSet<Monomial> = atoms.iter().cloned().collect();
    let mut frontier = atoms.clone();
    let mut elements = atoms.clone();
    while let Some(e) = frontier.pop() {
        for a in &atoms {
            let j = e.lcm(a);
            if !seen.contains(&j) {
                if seen.len() + 1 >= cap {
                    return Err(Error::cap("lcm lattice elements", seen.len() + 2, cap));
                }
                seen.insert(j.clone());
                frontier.push(j.clone());
                elements.push(j);
            }
        }
    }
    elements.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.0.cmp(&a.0)));
    Ok(LcmLattice { atoms, elements })
}

/// Order complex of the open interval `(0̂, m)`: vertices are the interval
/// elements (in [`LcmLattice::open_interval`] order), faces are chains.
pub fn open_interval_complex(lattice: &LcmLattice, m: &Monomial) -> Result<SimplicialComplex> {
    let interval = lattice.open_interval(m);
    let r = interval.len();
    if r > MAX_VERTICES {
        return Err(Error::cap("open interval elements", r, MAX_VERTICES));
    }
    if r == 0 {
        return Ok(SimplicialComplex::irrelevant(0));
    }
    let comparable: Vec<VertexSet> = interval
        .iter()
        .enumerate()
        .map(|(i, a)| {
            interval
                .iter()
                .enumerate()
                .filter(|&(j, b)| j != i && (a.divides(b) || b.divides(a)))
                .fold(0, |acc, (j, _)| acc | 1 << j)
        })
        .collect();
    SimplicialComplex::new(r, maximal_cliques(&comparable))
}

/// Crosscut complex of `[0̂, m]` on its atoms: a set of atoms is a face
/// when its lcm lies strictly below `m`. Homotopy equivalent to the order
/// complex of `(0̂, m)`.
pub fn crosscut_complex(lattice: &LcmLattice, m: &Monomial) -> Result<SimplicialComplex> {
    let atoms = lattice.atoms_below(m);
    let r = atoms.len();
    if r > MAX_VERTICES {
        return Err(Error::cap("atoms below element", r, MAX_VERTICES));
    }
    // A face misses the full exponent of m in at least one variable.
    let facets =
        m.0.iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| {
                atoms
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.0[v] < e)
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            });
    SimplicialComplex::new(r, facets.chain(std::iter::once(0)))
}

/// Nerve of the cover of the crosscut complex of `[0̂, m]` by the simplices
/// `{atoms a : a_v < m_v}`, one per variable `v` of `m`.
///
/// Lives on the ideal's variables: its facets are `{v : a_v < m_v}` for
/// atoms `a | m`. Every nonempty intersection of the covering simplices is
/// a simplex, so this is homotopy equivalent to the crosscut complex and
/// hence to the order complex of `(0̂, m)`.
pub fn interval_nerve(lattice: &LcmLattice, m: &Monomial) -> Result<SimplicialComplex> {
    let n = m.0.len();
    if n > MAX_VERTICES {
        return Err(Error::cap("ideal variables", n, MAX_VERTICES));
    }
    let facets = lattice.atoms_below(m).into_iter().map(|a| {
        a.0.iter()
            .zip(&m.0)
            .enumerate()
            .filter(|(_, (x, y))| x < y)
            .fold(0u64, |acc, (v, _)| acc | 1 << v)
    });
    SimplicialComplex::new(n, facets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(vars: &[&str], text: &str) -> MonomialIdeal {
        MonomialIdeal::from_text(vars.iter().map(|s| s.to_string()).collect(), text).unwrap()
    }

    #[test]
    fn two_variables() {
        let i = ideal(&["x", "y"], "x\ny");
        let l = lcm_lattice(&i, LATTICE_CAP).unwrap();
        assert_eq!(l.len(), 4);
        assert_eq!(l.top(), &Monomial(vec![1, 1]));
        let c = open_interval_complex(&l, l.top()).unwrap();
        assert_eq!(c.facets(), &[0b01, 0b10]);
    }

    #[test]
    fn pencil_three() {
        let i = ideal(&["x", "y1", "y2", "y3"], "x*y1\nx*y2\nx*y3");
        let l = lcm_lattice(&i, LATTICE_CAP).unwrap();
        let below_top = l.open_interval(l.top());
        assert_eq!(below_top.len(), 6);
        assert_eq!(below_top.iter().filter(|m| m.degree() == 2).count(), 3);
        assert_eq!(below_top.iter().filter(|m| m.degree() == 3).count(), 3);
    }

    #[test]
    fn atom_interval_is_irrelevant() {
        let i = ideal(&["x", "y"], "x\ny");
        let l = lcm_lattice(&i, LATTICE_CAP).unwrap();
        let atom = &l.atoms()[0];
        assert_eq!(open_interval_complex(&l, atom).unwrap().facets(), &[0]);
        assert_eq!(crosscut_complex(&l, atom).unwrap().facets(), &[0]);
        assert_eq!(interval_nerve(&l, atom).unwrap().facets(), &[0]);
    }

    #[test]
    fn lattice_cap() {
        let vars: Vec<String> = (0..16).map(|i| format!("x{i}")).collect();
        let gens = (0..16).map(|v| Monomial::from_support(16, 1 << v));
        let i = MonomialIdeal::new(vars, gens).unwrap();
        assert!(matches!(
            lcm_lattice(&i, LATTICE_CAP),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            lcm_lattice(
                &MonomialIdeal::with_default_vars(2, []).unwrap(),
                LATTICE_CAP
            ),
            Err(Error::ZeroIdeal)
        ));
    }

    #[test]
    fn closed_under_lcm() {
        let i = ideal(&["a", "b", "c", "d"], "a*b\nb*c\nc*d\na^2*d");
        let l = lcm_lattice(&i, LATTICE_CAP).unwrap();
        let set: HashSet<_> = l.elements().iter().cloned().collect();
        for a in l.elements() {
            for b in l.elements() {
                assert!(set.contains(&a.lcm(b)));
            }
        }
    }
}
