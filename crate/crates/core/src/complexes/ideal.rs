use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::simplicial::{SimplicialComplex, FACE_CAP};
use crate::bipartite::BipartiteGraph;
use crate::bits::{self, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// A monomial as a dense exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn from_support(n: usize, support: VertexSet) -> Self {
        Monomial(
            (0..n)
                .map(|v| u32::from(bits::contains(support, v)))
                .collect(),
        )
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> VertexSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |acc, (v, _)| acc | 1 << v)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Renders as `x1^2*y3`, or `1` for the unit monomial.
    pub fn render(&self, vars: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.0
            .iter()
            .zip(vars)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, name)| {
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Generator order: by degree, then with earlier variables first.
fn generator_order(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.0.cmp(&a.0))
}

/// A monomial ideal given by its minimal generators.
///
/// Generators are kept divisibility-minimal, duplicate-free and sorted.
/// The zero ideal has no generators; the unit ideal has the generator `1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    vars: Vec<String>,
    gens: Vec<Monomial>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawIdeal {
    vars: Vec<String>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(vars: Vec<String>, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let n = vars.len();
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(g) = gens.iter().find(|g| g.0.len() != n) {
            return Err(Error::InvalidIdeal(format!(
                "generator has {} exponents, expected {n}",
                g.0.len()
            )));
        }
        Ok(Self {
            vars,
            gens: minimalize(gens),
        })
    }

    /// Ideal in variables `x1..xn`.
    pub fn with_default_vars(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("x{i}")).collect(), gens)
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Common degree of all generators, if there is one.
    pub fn generated_in_single_degree(&self) -> Option<u32> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Renders one generator per line.
    pub fn to_text(&self) -> String {
        self.gens
            .iter()
            .map(|g| g.render(&self.vars) + "\n")
            .collect()
    }

    /// Parses the one-generator-per-line format; blank lines are ignored.
    pub fn from_text(vars: Vec<String>, text: &str) -> Result<Self> {
        let mut gens = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let mut exps = vec![0u32; vars.len()];
            if line != "1" {
                for factor in line.split('*').map(str::trim) {
                    let (name, power) = match factor.split_once('^') {
                        Some((name, p)) => (
                            name,
                            p.parse::<u32>()
                                .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                        ),
                        None => (factor, 1),
                    };
                    let v = vars
                        .iter()
                        .position(|x| x == name)
                        .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
                    exps[v] += power;
                }
            }
            gens.push(Monomial(exps));
        }
        Self::new(vars, gens)
    }

    pub fn to_json(&self) -> String {
        let raw = RawIdeal {
            vars: self.vars.clone(),
            gens: self.gens.clone(),
        };
        serde_json::to_string(&raw).expect("ideal serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawIdeal = serde_json::from_str(text)?;
        Self::new(raw.vars, raw.gens)
    }

    pub(crate) fn supports(&self) -> Result<Vec<VertexSet>> {
        if !self.is_squarefree() {
            return Err(Error::NonSquarefree);
        }
        if self.num_vars() > MAX_VERTICES {
            return Err(Error::cap("ideal variables", self.num_vars(), MAX_VERTICES));
        }
        Ok(self.gens.iter().map(Monomial::support).collect())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.render(&self.vars)).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(generator_order);
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // Sorted by degree, so only earlier generators can divide g.
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// One squarefree quadric `x_i y_j` per edge, in variables `x1..xs, y1..yk`.
pub fn edge_ideal(g: &BipartiteGraph) -> MonomialIdeal {
    let n = g.num_vertices();
    let s = g.num_x();
    let gens = g.edges().map(|(x, y)| {
        let mut e = vec![0; n];
        e[x] = 1;
        e[s + y] = 1;
        Monomial(e)
    });
    MonomialIdeal::new(g.variable_names(), gens).expect("edge monomials have the right length")
}

/// Stanley–Reisner ideal: one generator per minimal non-face.
pub fn stanley_reisner_ideal(
    delta: &SimplicialComplex,
    vars: Vec<String>,
) -> Result<MonomialIdeal> {
    let n = delta.num_vertices();
    if vars.len() != n {
        return Err(Error::InvalidIdeal(format!(
            "{} variable names for {n} vertices",
            vars.len()
        )));
    }
    if delta.is_void() {
        return MonomialIdeal::new(vars, [Monomial::one(n)]);
    }
    let faces = delta.faces(FACE_CAP)?;
    let face_set: HashSet<VertexSet> = super::simplicial::face_set(&faces);
    let mut non_faces = Vec::new();
    // A minimal non-face minus its largest vertex is a face; extend every face upward.
    for &f in faces.by_size.iter().flatten() {
        let start = if f == 0 {
            0
        } else {
            64 - f.leading_zeros() as usize
        };
        for v in start..n {
            let cand = f | 1 << v;
            if !face_set.contains(&cand)
                && bits::members(cand).all(|u| face_set.contains(&(cand & !(1 << u))))
            {
                non_faces.push(cand);
            }
        }
    }
    MonomialIdeal::new(
        vars,
        non_faces.into_iter().map(|s| Monomial::from_support(n, s)),
    )
}

/// Minimal transversals of a family of sets (Berge's incremental method).
fn minimal_transversals(edges: &[VertexSet]) -> Vec<VertexSet> {
    let mut current = vec![0u64];
    for &e in edges {
        let mut next = Vec::with_capacity(current.len());
        for &t in &current {
            if t & e != 0 {
                next.push(t);
            } else {
                next.extend(bits::members(e).map(|v| t | 1 << v));
            }
        }
        current = bits::minimal_sets(next);
        if current.is_empty() {
            break;
        }
    }
    current
}

/// Complex whose faces are the squarefree monomials outside `I`.
///
/// Facets are complements of minimal transversals of the generator supports.
pub fn complex_of_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    let supports = ideal.supports()?;
    let n = ideal.num_vars();
    let full = bits::full(n);
    let covers = minimal_transversals(&supports);
    if covers.is_empty() {
        return Ok(SimplicialComplex::void(n));
    }
    SimplicialComplex::new(n, covers.into_iter().map(|c| full & !c))
}

/// Alexander dual: generated by the minimal transversals of the generators,
/// i.e. by complements of the facets of the complex of `I`.
pub fn alexander_dual(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let supports = ideal.supports()?;
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = ideal.num_vars();
    let covers = minimal_transversals(&supports);
    MonomialIdeal::new(
        ideal.vars.clone(),
        covers.into_iter().map(|c| Monomial::from_support(n, c)),
    )
}

/// Minimal generators of `I^q`: all `q`-fold products, reduced.
pub fn power(ideal: &MonomialIdeal, q: u32) -> Result<MonomialIdeal> {
    if q == 0 {
        return Err(Error::InvalidIdeal(
            "power exponent must be at least 1".into(),
        ));
    }
    let gens = ideal.gens();
    let mut products: Vec<(usize, Monomial)> = gens.iter().cloned().enumerate().collect();
    for _ in 1..q {
        let mut next = HashSet::new();
        let mut out = Vec::new();
        for (last, m) in &products {
            for (i, g) in gens.iter().enumerate().skip(*last) {
                let p = m.mul(g);
                if next.insert((i, p.clone())) {
                    out.push((i, p));
                }
            }
        }
        products = out;
    }
    MonomialIdeal::new(ideal.vars.clone(), products.into_iter().map(|(_, m)| m))
}
