use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Graded Betti numbers `β_{i,j}` of a quotient `S/I`.
///
/// Only nonzero entries are stored. For a proper nonzero ideal the table
/// has `β_{0,0} = 1` and no other entries with `i = 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTable {
    n: usize,
    entries: Vec<(usize, usize, u64)>,
}

impl BettiTable {
    /// Empty table in `n` variables.
    pub fn new(n: usize) -> Self {
        Self {
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries(n: usize, entries: impl IntoIterator<Item = (usize, usize, u64)>) -> Self {
        let mut t = Self::new(n);
        for (i, j, b) in entries {
            t.add(i, j, b);
        }
        t
    }

    /// Table whose row `r` lists `β_{i, i+r}` starting at column `first`.
    pub fn from_rows(n: usize, rows: &[(usize, usize, &[u64])]) -> Self {
        let mut t = Self::new(n);
        for &(r, first, values) in rows {
            for (offset, &b) in values.iter().enumerate() {
                let i = first + offset;
                t.add(i, i + r, b);
            }
        }
        t
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn add(&mut self, i: usize, j: usize, b: u64) {
        if b > 0 {
            *self.entries.entry((i, j)).or_default() += b;
        }
    }

    pub fn merge(&mut self, other: &BettiTable) {
        for (&(i, j), &b) in &other.entries {
            self.add(i, j, b);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `(i, j, β_{i,j})` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Projective dimension: the largest homological degree present.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Regularity of the quotient: the largest `j − i`.
    pub fn reg(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// Total Betti numbers `β_i = Σ_j β_{i,j}` for `i = 0..=pd`.
    pub fn totals(&self) -> Vec<u64> {
        let mut out = vec![0; if self.is_empty() { 0 } else { self.pd() + 1 }];
        for (&(i, _), &b) in &self.entries {
            out[i] += b;
        }
        out
    }

    /// Row `r` of the diagram: `β_{i, i+r}` for `i = 0..=pd`.
    pub fn row(&self, r: usize) -> Vec<u64> {
        (0..=self.pd()).map(|i| self.get(i, i + r)).collect()
    }

    /// `Σ (−1)^i β_{i,j}`, which vanishes when `I ≠ 0`.
    pub fn alternating_sum(&self) -> i64 {
        self.entries()
            .map(|(i, _, b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn to_json(&self) -> String {
        let raw = RawTable {
            n: self.n,
            entries: self.entries().collect(),
        };
        serde_json::to_string(&raw).expect("betti table serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawTable = serde_json::from_str(text)?;
        if let Some(&(i, j, _)) = raw.entries.iter().find(|&&(i, j, b)| j < i || b == 0) {
            return Err(Error::Parse(format!("bad Betti entry at ({i}, {j})")));
        }
        Ok(Self::from_entries(raw.n, raw.entries))
    }

    /// Diagram with rows `j − i`, columns `i`, `-` for zero and a totals row.
    pub fn diagram(&self) -> String {
        if self.is_empty() {
            return "zero module\n".to_string();
        }
        let cols = self.pd() + 1;
        let rows = self.reg() + 1;
        let totals = self.totals();
        let widest = totals
            .iter()
            .map(|t| t.to_string().len())
            .max()
            .unwrap_or(1);
        let w = (widest + 1).max(6);
        let label = 6;
        let rule = "-".repeat(label + w * cols);
        let mut out = String::new();
        out.push_str(&" ".repeat(label));
        for i in 0..cols {
            out.push_str(&format!("{i:>w$}"));
        }
        out.push('\n');
        out.push_str(&rule);
        out.push('\n');
        for r in 0..rows {
            out.push_str(&format!("{:>label$}", format!("{r}:")));
            for b in self.row(r) {
                let cell = if b == 0 {
                    "-".to_string()
                } else {
                    b.to_string()
                };
                out.push_str(&format!("{cell:>w$}"));
            }
            out.push('\n');
        }
        out.push_str(&rule);
        out.push('\n');
        out.push_str(&format!("{:>label$}", "total:"));
        for t in totals {
            out.push_str(&format!("{t:>w$}"));
        }
        out.push('\n');
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.diagram())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn koszul2() -> BettiTable {
        BettiTable::from_entries(2, [(0, 0, 1), (1, 1, 2), (2, 2, 1)])
    }

    #[test]
    fn invariants() {
        let t = koszul2();
        assert_eq!((t.pd(), t.reg()), (2, 0));
        assert_eq!(t.totals(), vec![1, 2, 1]);
        assert_eq!(t.alternating_sum(), 0);
        assert_eq!(t.row(0), vec![1, 2, 1]);
        assert_eq!(t.row(1), vec![0, 0, 0]);
    }

    #[test]
    fn json_round_trip() {
        let t = koszul2();
        assert_eq!(
            t.to_json(),
            r#"{"n":2,"entries":[[0,0,1],[1,1,2],[2,2,1]]}"#
        );
        assert_eq!(BettiTable::from_json(&t.to_json()).unwrap(), t);
        assert!(BettiTable::from_json(r#"{"n":2,"entries":[[2,1,1]]}"#).is_err());
    }

    #[test]
    fn diagram_layout() {
        let t = BettiTable::from_rows(6, &[(0, 0, &[1]), (1, 1, &[30, 120, 210, 180, 62])]);
        let d = t.diagram();
        let lines: Vec<&str> = d.lines().collect();
        assert_eq!(lines[0], "           0     1     2     3     4     5");
        assert_eq!(lines[2], "    0:     1     -     -     -     -     -");
        assert_eq!(lines[3], "    1:     -    30   120   210   180    62");
        assert_eq!(lines[5], "total:     1    30   120   210   180    62");
        assert_eq!(lines[1].len(), lines[2].len());
    }
}
