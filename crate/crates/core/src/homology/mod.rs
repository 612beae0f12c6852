//! Reduced simplicial homology over a prime field.
//!
//! Chains are indexed by face cardinality: the augmented chain complex has
//! the empty face in size 0, so `H̃_{t−1}` is computed from the size-`t`
//! faces as `f_t − rank ∂_t − rank ∂_{t+1}`.

pub mod field;
pub mod matrix;

use std::fmt;

pub use field::PrimeField;
pub use matrix::GfMatrix;

use crate::bits::{self, VertexSet};
use crate::complexes::{FaceList, SimplicialComplex};
use crate::error::Result;

/// Dimensions of reduced homology `H̃_i` for `i = −1, 0, 1, ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ReducedHomology {
    /// `by_shift[t] = dim H̃_{t−1}`; trailing zeros trimmed.
    by_shift: Vec<usize>,
}

impl ReducedHomology {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Homology of the irrelevant complex `{∅}`.
    pub fn empty_face() -> Self {
        Self { by_shift: vec![1] }
    }

    pub fn from_shifted(mut by_shift: Vec<usize>) -> Self {
        while by_shift.last() == Some(&0) {
            by_shift.pop();
        }
        Self { by_shift }
    }

    /// `dim H̃_i`, zero outside the computed range.
    pub fn get(&self, i: isize) -> usize {
        usize::try_from(i + 1)
            .ok()
            .and_then(|t| self.by_shift.get(t))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.by_shift.is_empty()
    }

    /// Nonzero entries as `(i, dim H̃_i)`.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.by_shift
            .iter()
            .enumerate()
            .filter(|(_, &b)| b > 0)
            .map(|(t, &b)| (t as isize - 1, b))
    }

    /// `Σ (−1)^i dim H̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.nonzero()
            .map(|(i, b)| {
                if i.rem_euclid(2) == 0 {
                    b as i64
                } else {
                    -(b as i64)
                }
            })
            .sum()
    }

    /// Shift so that homology sits one degree higher (suspension).
    pub fn suspend(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut by_shift = vec![0];
        by_shift.extend(&self.by_shift);
        Self { by_shift }
    }

    /// Homology of a join of complexes: `H̃_{i+j+1}(A * B) = ⊕ H̃_i(A) ⊗ H̃_j(B)`
    /// over a field, which is a convolution in the shifted index.
    pub fn join(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0; self.by_shift.len() + other.by_shift.len() - 1];
        for (a, &x) in self.by_shift.iter().enumerate() {
            for (b, &y) in other.by_shift.iter().enumerate() {
                out[a + b] += x * y;
            }
        }
        Self::from_shifted(out)
    }
}

impl fmt::Display for ReducedHomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.nonzero().map(|(i, b)| format!("H~{i}={b}")).collect();
        f.write_str(&parts.join(" "))
    }
}

fn face_index(level: &[VertexSet], face: VertexSet) -> usize {
    level
        .binary_search(&face)
        .expect("boundary face belongs to the complex")
}

/// Boundary map from the `i`-faces to the `(i−1)`-faces: rows are indexed by
/// `(i−1)`-faces and columns by `i`-faces, each in sorted bitset order.
/// Removing the `r`-th smallest vertex carries the sign `(−1)^r`.
pub fn boundary_matrix(
    delta: &SimplicialComplex,
    i: isize,
    field: PrimeField,
    face_cap: usize,
) -> Result<GfMatrix> {
    let faces = delta.faces(face_cap)?;
    Ok(boundary_from_faces(&faces, i, field))
}

pub(crate) fn boundary_from_faces(faces: &FaceList, i: isize, field: PrimeField) -> GfMatrix {
    let level = |t: isize| -> &[VertexSet] {
        usize::try_from(t)
            .ok()
            .and_then(|t| faces.by_size.get(t))
            .map_or(&[], Vec::as_slice)
    };
    let upper = level(i + 1);
    let lower = level(i);
    let mut m = GfMatrix::zeros(field, lower.len(), upper.len());
    if i < 0 {
        return m;
    }
    for (c, &face) in upper.iter().enumerate() {
        for (r, v) in bits::members(face).enumerate() {
            let row = face_index(lower, face & !(1 << v));
            let sign = if r % 2 == 0 { 1 } else { field.neg(1) };
            m.set(row, c, sign);
        }
    }
    m
}

/// Rank of the boundary from size-`t` faces to size-`(t−1)` faces.
fn boundary_rank(faces: &FaceList, t: usize, field: PrimeField) -> usize {
    if t == 0 || t >= faces.by_size.len() {
        return 0;
    }
    let upper = &faces.by_size[t];
    let lower = &faces.by_size[t - 1];
    let cols = lower.len();
    if field.characteristic() == 2 {
        let words = cols.div_ceil(64);
        let rows = upper.iter().map(|&face| {
            let mut row = vec![0u64; words];
            for v in bits::members(face) {
                let c = face_index(lower, face & !(1 << v));
                row[c / 64] |= 1 << (c % 64);
            }
            row
        });
        matrix::rank_gf2(rows, cols)
    } else {
        let minus_one = field.neg(1);
        let rows = upper.iter().map(|&face| {
            let mut row = vec![0u32; cols];
            for (r, v) in bits::members(face).enumerate() {
                row[face_index(lower, face & !(1 << v))] = if r % 2 == 0 { 1 } else { minus_one };
            }
            row
        });
        matrix::rank_mod_p(field, rows, cols)
    }
}

/// Reduced homology of the complex whose faces are listed.
pub fn homology_of_faces(faces: &FaceList, field: PrimeField) -> ReducedHomology {
    let top = faces.by_size.len();
    let ranks: Vec<usize> = (0..=top).map(|t| boundary_rank(faces, t, field)).collect();
    let by_shift = (0..top)
        .map(|t| faces.by_size[t].len() - ranks[t] - ranks[t + 1])
        .collect();
    ReducedHomology::from_shifted(by_shift)
}

/// `dim H̃_i(Δ; GF(p))` for all `i`.
pub fn reduced_betti(
    delta: &SimplicialComplex,
    field: PrimeField,
    face_cap: usize,
) -> Result<ReducedHomology> {
    Ok(homology_of_faces(&delta.faces(face_cap)?, field))
}
