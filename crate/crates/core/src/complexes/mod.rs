//! Simplicial complexes, monomial ideals and the constructions linking them.

pub mod ideal;
pub mod lcm;
pub mod simplicial;

pub use ideal::{
    alexander_dual, complex_of_ideal, edge_ideal, power, stanley_reisner_ideal, Monomial,
    MonomialIdeal,
};
pub use lcm::{
    crosscut_complex, interval_nerve, lcm_lattice, open_interval_complex, LcmLattice, LATTICE_CAP,
};
pub use simplicial::{
    independence_complex, independent_sets, FaceList, SimplicialComplex, FACE_CAP,
};
