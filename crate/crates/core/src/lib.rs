//! Edge ideals of Levi graphs of plane curve arrangements.
//!
//! The crate goes from incidence data to the independence complex of the
//! Levi graph and its Stanley–Reisner ring, computes graded Betti tables over
//! prime fields, and checks Cohen–Macaulay, shellability and regularity
//! statements combinatorially.

pub mod arrangements;
pub mod bipartite;
pub mod bits;
pub mod caps;
pub mod classify;
pub mod complexes;
pub mod corpus;
pub mod error;
pub mod homology;
pub mod resolutions;

pub use caps::Caps;
pub use error::{Error, Result};
