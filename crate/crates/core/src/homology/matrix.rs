use std::fmt;

use super::field::PrimeField;

/// Dense matrix over a prime field, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct GfMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl GfMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Builds a matrix from integer entries, reducing them mod `p`.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data = rows.iter().flatten().map(|&e| field.reduce(e)).collect();
        Self {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: u32) {
        self.data[r * self.cols + c] = value % self.field.characteristic();
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &GfMatrix) -> GfMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        assert_eq!(self.field, other.field, "field mismatch");
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let idx = r * other.cols + c;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(k, c)));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&e| e == 0)
    }

    /// Rank by Gaussian elimination; bit-packed rows over `GF(2)`.
    pub fn rank(&self) -> usize {
        if self.field.characteristic() == 2 {
            let words = self.cols.div_ceil(64);
            let rows = (0..self.rows).map(|r| {
                let mut bits = vec![0u64; words];
                for (c, &e) in self.row(r).iter().enumerate() {
                    if e != 0 {
                        bits[c / 64] |= 1 << (c % 64);
                    }
                }
                bits
            });
            rank_gf2(rows, self.cols)
        } else {
            rank_mod_p(
                self.field,
                (0..self.rows).map(|r| self.row(r).to_vec()),
                self.cols,
            )
        }
    }
}

impl fmt::Debug for GfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "{:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Incremental elimination of bit-packed rows; each pivot is keyed by its
/// lowest set column.
pub(crate) fn rank_gf2(rows: impl IntoIterator<Item = Vec<u64>>, cols: usize) -> usize {
    let mut pivot_of: Vec<Option<usize>> = vec![None; cols];
    let mut pivots: Vec<Vec<u64>> = Vec::new();
    for mut row in rows {
        while let Some(lead) = lowest_bit(&row) {
            match pivot_of[lead] {
                Some(p) => {
                    // pivot rows are zero below their lead word
                    let start = lead / 64;
                    for (a, b) in row[start..].iter_mut().zip(&pivots[p][start..]) {
                        *a ^= b;
                    }
                }
                None => {
                    pivot_of[lead] = Some(pivots.len());
                    pivots.push(row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn lowest_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Incremental elimination over `GF(p)` with rows normalized to a leading 1.
pub(crate) fn rank_mod_p(
    field: PrimeField,
    rows: impl IntoIterator<Item = Vec<u32>>,
    cols: usize,
) -> usize {
    let p = u64::from(field.characteristic());
    let mut pivot_of: Vec<Option<usize>> = vec![None; cols];
    let mut pivots: Vec<Vec<u32>> = Vec::new();
    for mut row in rows {
        let mut c = 0;
        while c < cols {
            let lead = row[c];
            if lead == 0 {
                c += 1;
                continue;
            }
            match pivot_of[c] {
                Some(pi) => {
                    let factor = p - u64::from(lead);
                    let piv = &pivots[pi];
                    for j in c..cols {
                        if piv[j] != 0 {
                            row[j] = ((u64::from(row[j]) + factor * u64::from(piv[j])) % p) as u32;
                        }
                    }
                    c += 1;
                }
                None => {
                    let inv = u64::from(field.inv(lead));
                    for e in &mut row[c..] {
                        *e = (u64::from(*e) * inv % p) as u32;
                    }
                    pivot_of[c] = Some(pivots.len());
                    pivots.push(row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_zero() {
        assert_eq!(GfMatrix::identity(PrimeField::GF2, 3).rank(), 3);
        assert_eq!(GfMatrix::zeros(PrimeField::new(5).unwrap(), 4, 6).rank(), 0);
        assert_eq!(GfMatrix::zeros(PrimeField::GF2, 0, 0).rank(), 0);
    }

    #[test]
    fn characteristic_matters() {
        // det = 2
        let rows = vec![vec![1, 1], vec![1, -1]];
        assert_eq!(GfMatrix::from_rows(PrimeField::GF2, &rows).rank(), 1);
        assert_eq!(
            GfMatrix::from_rows(PrimeField::new(3).unwrap(), &rows).rank(),
            2
        );
    }

    #[test]
    fn wide_gf2_rows() {
        let f = PrimeField::GF2;
        let mut m = GfMatrix::zeros(f, 3, 130);
        m.set(0, 129, 1);
        m.set(1, 129, 1);
        m.set(1, 0, 1);
        m.set(2, 0, 1);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.transpose().rank(), 2);
    }
}
