use crate::bipartite::INDUCED_MATCHING_EDGE_CAP;
use crate::complexes::{FACE_CAP, LATTICE_CAP};

/// Size limits for the exponential algorithms. Exceeding one yields
/// [`Error::CapExceeded`](crate::Error::CapExceeded), never a partial answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Vertices for full Hochster enumeration (`2^n` subsets).
    pub hochster_vertices: usize,
    /// Elements of an lcm lattice, bottom included.
    pub lattice: usize,
    /// Faces enumerated for any single complex.
    pub faces: usize,
    /// Edges for the exact induced-matching search.
    pub induced_matching_edges: usize,
    /// Vertices per side for the ordering searches.
    pub search_part: usize,
    /// Facets for the exhaustive shelling search.
    pub shelling_facets: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            hochster_vertices: 16,
            lattice: LATTICE_CAP,
            faces: FACE_CAP,
            induced_matching_edges: INDUCED_MATCHING_EDGE_CAP,
            search_part: 16,
            shelling_facets: 20,
        }
    }
}
