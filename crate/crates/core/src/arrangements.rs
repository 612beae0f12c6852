//! Incidence combinatorics of plane curve arrangements.
//!
//! An [`Arrangement`] records `k` curves of a common degree `d` and a list of
//! marked points, each carrying the sorted list of curves passing through
//! it. No coordinates are kept: everything downstream depends only on the
//! point/curve incidences.
//!
//! In [`Mode::Strict`] the incidences must satisfy the two intersection
//! counts of a `d`-arrangement with ordinary singularities:
//!
//! * `d² · C(k, 2) = Σ_p C(m_p, 2)` over all points,
//! * `d² · (k − 1) = Σ_{p ∈ C_j} (m_p − 1)` for every curve `C_j`,
//!
//! together with `k ≥ 3` and `m_p ≥ 2`. [`Mode::Configuration`] drops these
//! checks so that point-line configurations with non-intersection marked
//! points can be represented.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    #[serde(rename = "strict")]
    Strict,
    #[serde(rename = "configuration")]
    Configuration,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point {
    pub id: String,
    pub curves: Vec<usize>,
}

impl Point {
    pub fn new(id: impl Into<String>, curves: impl IntoIterator<Item = usize>) -> Self {
        Self {
            id: id.into(),
            curves: curves.into_iter().collect(),
        }
    }

    /// Number of curves through the point.
    pub fn multiplicity(&self) -> usize {
        self.curves.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Arrangement {
    d: u32,
    k: usize,
    mode: Mode,
    points: Vec<Point>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawArrangement {
    d: u32,
    k: usize,
    mode: Mode,
    points: Vec<Point>,
}

/// Both sides of one intersection count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CountCheck {
    pub lhs: u64,
    pub rhs: u64,
}

impl CountCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub mode: Mode,
    /// `k ≥ 3`; always true outside strict mode.
    pub enough_curves: bool,
    /// Ids of points with multiplicity below 2 (strict mode only).
    pub low_multiplicity: Vec<String>,
    /// Global pair count; `None` in configuration mode.
    pub pair_count: Option<CountCheck>,
    /// Per-curve count, indexed by curve; empty in configuration mode.
    pub curve_counts: Vec<CountCheck>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.enough_curves
            && self.low_multiplicity.is_empty()
            && self.pair_count.is_none_or(|c| c.holds())
            && self.curve_counts.iter().all(CountCheck::holds)
    }

    fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.enough_curves {
            out.push("fewer than 3 curves".to_string());
        }
        if !self.low_multiplicity.is_empty() {
            out.push(format!(
                "points of multiplicity < 2: {}",
                self.low_multiplicity.join(", ")
            ));
        }
        if let Some(c) = self.pair_count.filter(|c| !c.holds()) {
            out.push(format!("pair count {} != {}", c.lhs, c.rhs));
        }
        for (j, c) in self
            .curve_counts
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.holds())
        {
            out.push(format!("curve {j} count {} != {}", c.lhs, c.rhs));
        }
        out
    }
}

/// Number of points of each multiplicity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TVector {
    pub counts: BTreeMap<usize, usize>,
    pub s: usize,
}

impl TVector {
    pub fn get(&self, r: usize) -> usize {
        self.counts.get(&r).copied().unwrap_or(0)
    }
}

fn choose2(m: u64) -> u64 {
    m * m.saturating_sub(1) / 2
}

impl Arrangement {
    /// Builds an arrangement, normalizing each incidence list to sorted order.
    ///
    /// Fails on out-of-range or repeated curve ids, on points lying on no
    /// curve, and in strict mode whenever [`validate`](Self::validate) fails.
    pub fn new(d: u32, k: usize, mode: Mode, points: Vec<Point>) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArrangement("degree must be positive".into()));
        }
        if k == 0 {
            return Err(Error::InvalidArrangement("need at least one curve".into()));
        }
        let mut normalized = Vec::with_capacity(points.len());
        for mut p in points {
            if p.curves.is_empty() {
                return Err(Error::InvalidArrangement(format!(
                    "point {} lies on no curve",
                    p.id
                )));
            }
            p.curves.sort_unstable();
            if p.curves.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidArrangement(format!(
                    "point {} repeats a curve",
                    p.id
                )));
            }
            if let Some(&c) = p.curves.last().filter(|&&c| c >= k) {
                return Err(Error::InvalidArrangement(format!(
                    "point {} references curve {c} but k = {k}",
                    p.id
                )));
            }
            normalized.push(p);
        }
        let a = Self {
            d,
            k,
            mode,
            points: normalized,
        };
        if mode == Mode::Strict {
            let report = a.validate();
            if !report.passed() {
                return Err(Error::InvalidArrangement(report.failures().join("; ")));
            }
        }
        Ok(a)
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn num_curves(&self) -> usize {
        self.k
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Reports every counting condition with both of its sides.
    pub fn validate(&self) -> ValidationReport {
        if self.mode == Mode::Configuration {
            return ValidationReport {
                mode: self.mode,
                enough_curves: true,
                low_multiplicity: Vec::new(),
                pair_count: None,
                curve_counts: Vec::new(),
            };
        }
        let d2 = u64::from(self.d) * u64::from(self.d);
        let k = self.k as u64;
        let pair_count = CountCheck {
            lhs: d2 * choose2(k),
            rhs: self
                .points
                .iter()
                .map(|p| choose2(p.multiplicity() as u64))
                .sum(),
        };
        let mut per_curve = vec![0u64; self.k];
        for p in &self.points {
            for &c in &p.curves {
                per_curve[c] += p.multiplicity() as u64 - 1;
            }
        }
        ValidationReport {
            mode: self.mode,
            enough_curves: self.k >= 3,
            low_multiplicity: self
                .points
                .iter()
                .filter(|p| p.multiplicity() < 2)
                .map(|p| p.id.clone())
                .collect(),
            pair_count: Some(pair_count),
            curve_counts: per_curve
                .into_iter()
                .map(|rhs| CountCheck {
                    lhs: d2 * (k - 1),
                    rhs,
                })
                .collect(),
        }
    }

    pub fn t_vector(&self) -> TVector {
        let mut counts = BTreeMap::new();
        for p in &self.points {
            *counts.entry(p.multiplicity()).or_insert(0) += 1;
        }
        TVector {
            counts,
            s: self.points.len(),
        }
    }

    /// A pencil: lines all passing through one common point.
    pub fn is_pencil(&self) -> bool {
        self.d == 1 && self.points.len() == 1 && self.points[0].multiplicity() == self.k
    }

    /// Same arrangement with points sorted by multiplicity (descending),
    /// then by incidence list. Curves keep their indices.
    pub fn canonical(&self) -> Self {
        let mut points = self.points.clone();
        points.sort_by(|a, b| {
            b.multiplicity()
                .cmp(&a.multiplicity())
                .then_with(|| a.curves.cmp(&b.curves))
        });
        Self {
            points,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("arrangement serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawArrangement = serde_json::from_str(text)?;
        Self::new(raw.d, raw.k, raw.mode, raw.points)
    }
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}-arrangement of {} curves with {} points",
            self.d,
            self.k,
            self.points.len()
        )
    }
}

fn point_ids(s: usize) -> impl Iterator<Item = String> {
    let width = s.to_string().len().max(2);
    (1..=s).map(move |i| format!("p{i:0width$}"))
}

fn from_incidences(
    d: u32,
    k: usize,
    mode: Mode,
    incidences: Vec<Vec<usize>>,
) -> Result<Arrangement> {
    let points = point_ids(incidences.len())
        .zip(incidences)
        .map(|(id, curves)| Point { id, curves })
        .collect();
    Arrangement::new(d, k, mode, points)
}

fn require_lines(k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::InvalidArrangement(format!(
            "need k >= 3 lines, got {k}"
        )));
    }
    Ok(())
}

/// `k` lines through one point.
pub fn gen_pencil(k: usize) -> Result<Arrangement> {
    require_lines(k)?;
    from_incidences(1, k, Mode::Strict, vec![(0..k).collect()])
}

/// Near-pencil: lines `0..k-1` meet at one `(k−1)`-fold point and the last
/// line crosses each of them in a double point.
///
/// Points are emitted as `x₁ = ℓ₁ ∩ … ∩ ℓ_{k−1}`, `xᵢ = ℓᵢ ∩ ℓ_k` for
/// `i = 2..k−1`, and `x_k = ℓ₁ ∩ ℓ_k`.
pub fn gen_quasi_pencil(k: usize) -> Result<Arrangement> {
    require_lines(k)?;
    let last = k - 1;
    let mut incidences = vec![(0..last).collect::<Vec<_>>()];
    incidences.extend((1..last).map(|i| vec![i, last]));
    incidences.push(vec![0, last]);
    from_incidences(1, k, Mode::Strict, incidences)
}

/// `k` lines in general position: one double point per pair of lines.
pub fn gen_generic_lines(k: usize) -> Result<Arrangement> {
    require_lines(k)?;
    let mut incidences = Vec::with_capacity(k * (k - 1) / 2);
    for i in 0..k {
        for j in i + 1..k {
            incidences.push(vec![i, j]);
        }
    }
    from_incidences(1, k, Mode::Strict, incidences)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}

/// Normalized homogeneous coordinates of PG(2, q): first nonzero entry is 1.
fn projective_points(q: u64) -> Vec<[u64; 3]> {
    let mut pts = Vec::new();
    for a in 0..q {
        for b in 0..q {
            pts.push([1, a, b]);
        }
    }
    for b in 0..q {
        pts.push([0, 1, b]);
    }
    pts.push([0, 0, 1]);
    pts
}

/// All lines of the projective plane over `GF(q)`, `q` prime.
///
/// Points and lines are both enumerated as normalized coordinate triples;
/// a point lies on a line when their dot product vanishes mod `q`.
pub fn gen_projective_plane(q: u64) -> Result<Arrangement> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let coords = projective_points(q);
    let incidences = coords
        .iter()
        .map(|p| {
            coords
                .iter()
                .enumerate()
                .filter(|(_, l)| (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0)
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    from_incidences(1, coords.len(), Mode::Strict, incidences)
}

/// Six conics through five of six general points each: point `i` lies on
/// every conic except conic `5 − i`.
pub fn gen_conic_6_5() -> Result<Arrangement> {
    let incidences = (0..6)
        .map(|i| (0..6).filter(|&j| j != 5 - i).collect())
        .collect();
    from_incidences(2, 6, Mode::Strict, incidences)
}

/// Three lines with one triple point, plus one marked non-intersection
/// point on each of the first and last line.
pub fn gen_marked_triple_point() -> Result<Arrangement> {
    from_incidences(
        1,
        3,
        Mode::Configuration,
        vec![vec![0], vec![0, 1, 2], vec![2]],
    )
}
