use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::arrangements::Arrangement;
use crate::bipartite::{
    degree_profile, induced_matching, levi_graph, max_matching, BipartiteGraph,
};
use crate::caps::Caps;
use crate::complexes::{edge_ideal, power};
use crate::error::{Error, Result};
use crate::homology::PrimeField;
use crate::resolutions::{betti_general, HomologicalSummary};

pub type Rational = Ratio<i64>;

fn ser_ratio<S: Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

/// Combinatorial bounds on `pd(S/I(G))` and `reg(I(G))`.
///
/// The arrangement-specific bounds need `k ≥ 3` curves and no point on all
/// of them (`t_k = 0`); they are `None` otherwise, or when only a graph is
/// known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub s: usize,
    pub k: usize,
    pub n: usize,
    pub degree: Option<u32>,
    pub t_k_zero: Option<bool>,
    /// `⌈(s+k)/2⌉`.
    pub pd_lower: Option<usize>,
    /// `(s+k)(1 − 1/(2d²(k−1)))`.
    #[serde(serialize_with = "ser_ratio")]
    pub pd_upper: Option<Rational>,
    pub max_degree: usize,
    /// `n(1 − 1/(2m))` for maximal vertex degree `m`.
    #[serde(serialize_with = "ser_ratio")]
    pub dhs_upper: Option<Rational>,
    pub matching_number: usize,
    pub induced_matching_number: Option<usize>,
    /// `ν + 1 ≥ reg(I)`.
    pub reg_upper_matching: usize,
    /// `ν′ + 1 ≤ reg(I)`.
    pub reg_lower_induced: Option<usize>,
    /// `k + 1 ≥ reg(I)`.
    pub reg_upper_global: Option<usize>,
    /// The curve side can be matched completely.
    pub matching_covers_curves: bool,
    /// `reg(I^q) ≤ 2q + k − 1` is claimed when `3 ≤ k ≤ s`.
    pub power_bound_applicable: bool,
    /// Regularity of the Rees algebra, `k`; reported, not computed.
    pub rees_reg: Option<usize>,
}

impl BoundReport {
    pub fn power_bound(&self, q: u32) -> usize {
        2 * q as usize + self.k - 1
    }
}

/// Bounds that only need the graph.
pub fn graph_bounds(g: &BipartiteGraph, caps: &Caps) -> BoundReport {
    let (s, k, n) = (g.num_x(), g.num_y(), g.num_vertices());
    let m = degree_profile(g).max_degree;
    let nu = max_matching(g).size;
    let nu_prime = induced_matching(g, caps.induced_matching_edges)
        .ok()
        .map(|mm| mm.size);
    BoundReport {
        s,
        k,
        n,
        degree: None,
        t_k_zero: None,
        pd_lower: None,
        pd_upper: None,
        max_degree: m,
        dhs_upper: (m > 0).then(|| {
            Rational::from_integer(n as i64) * (Rational::ONE - Rational::new(1, 2 * m as i64))
        }),
        matching_number: nu,
        induced_matching_number: nu_prime,
        reg_upper_matching: nu + 1,
        reg_lower_induced: nu_prime.map(|v| v + 1),
        reg_upper_global: None,
        matching_covers_curves: nu == k,
        power_bound_applicable: false,
        rees_reg: None,
    }
}

pub fn bounds_report(a: &Arrangement, caps: &Caps) -> BoundReport {
    let g = levi_graph(a);
    let mut r = graph_bounds(&g, caps);
    let (s, k, d) = (r.s, r.k, a.degree());
    let applicable = k >= 3 && a.t_vector().get(k) == 0;
    r.degree = Some(d);
    r.t_k_zero = Some(a.t_vector().get(k) == 0);
    if applicable {
        let denom = 2 * i64::from(d) * i64::from(d) * (k as i64 - 1);
        r.pd_lower = Some((s + k).div_ceil(2));
        r.pd_upper = Some(
            Rational::from_integer((s + k) as i64) * (Rational::ONE - Rational::new(1, denom)),
        );
        r.reg_upper_global = Some(k + 1);
    }
    r.power_bound_applicable = k >= 3 && k <= s;
    r.rees_reg = (k >= 3).then_some(k);
    r
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: &'static str,
    pub statement: String,
    pub holds: bool,
}

/// Compares every applicable bound with the computed invariants.
pub fn bounds_verify(r: &BoundReport, summary: &HomologicalSummary) -> Vec<BoundCheck> {
    let pd = summary.pd;
    let reg = summary.reg_ideal;
    let pd_q = Rational::from_integer(pd as i64);
    let mut out = Vec::new();
    let mut push = |name, statement: String, holds| {
        out.push(BoundCheck {
            name,
            statement,
            holds,
        })
    };
    if let Some(lo) = r.pd_lower {
        push("pd lower", format!("pd = {pd} >= {lo}"), pd >= lo);
    }
    if let Some(hi) = r.pd_upper {
        push("pd upper", format!("pd = {pd} <= {hi}"), pd_q <= hi);
    }
    if let Some(dhs) = r.dhs_upper {
        push("max-degree pd", format!("pd = {pd} <= {dhs}"), pd_q <= dhs);
    }
    push(
        "matching reg",
        format!("reg(I) = {reg} <= nu + 1 = {}", r.reg_upper_matching),
        reg <= r.reg_upper_matching,
    );
    if let Some(lo) = r.reg_lower_induced {
        push(
            "induced matching reg",
            format!("reg(I) = {reg} >= nu' + 1 = {lo}"),
            reg >= lo,
        );
    }
    if let Some(hi) = r.reg_upper_global {
        push(
            "global reg",
            format!("reg(I) = {reg} <= k + 1 = {hi}"),
            reg <= hi,
        );
        push(
            "Hall matching",
            format!("nu = {} = k = {}", r.matching_number, r.k),
            r.matching_covers_curves,
        );
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PowerCheck {
    pub q: u32,
    pub reg: usize,
    pub bound: usize,
    pub holds: bool,
}

/// `reg(I(G)^q)` from the lcm lattice, against `2q + k − 1`.
pub fn power_bound_check(
    g: &BipartiteGraph,
    q: u32,
    field: PrimeField,
    caps: &Caps,
) -> Result<PowerCheck> {
    let i = edge_ideal(g);
    if i.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let table = betti_general(&power(&i, q)?, field, caps)?;
    let reg = table.reg() + 1;
    let bound = 2 * q as usize + g.num_y() - 1;
    Ok(PowerCheck {
        q,
        reg,
        bound,
        holds: reg <= bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangements::*;

    #[test]
    fn generic_five_interval() {
        let r = bounds_report(&gen_generic_lines(5).unwrap(), &Caps::default());
        assert_eq!(r.pd_lower, Some(8));
        assert_eq!(r.pd_upper, Some(Rational::new(105, 8)));
        assert_eq!(r.reg_upper_global, Some(6));
    }

    #[test]
    fn conic_interval() {
        let r = bounds_report(&gen_conic_6_5().unwrap(), &Caps::default());
        assert_eq!(r.pd_lower, Some(6));
        assert_eq!(r.pd_upper, Some(Rational::new(117, 10)));
    }

    #[test]
    fn pencil_not_applicable() {
        let r = bounds_report(&gen_pencil(4).unwrap(), &Caps::default());
        assert_eq!(r.t_k_zero, Some(false));
        assert_eq!(
            (r.pd_lower, r.pd_upper, r.reg_upper_global),
            (None, None, None)
        );
        assert_eq!(r.matching_number, 1);
        assert!(!r.power_bound_applicable);
    }

    #[test]
    fn json_uses_exact_fractions() {
        let r = bounds_report(&gen_generic_lines(5).unwrap(), &Caps::default());
        let v: serde_json::Value =
            serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(v["pd_upper"], "105/8");
    }

    #[test]
    fn pencil_square() {
        let g = levi_graph(&gen_pencil(3).unwrap());
        let c = power_bound_check(&g, 1, PrimeField::GF2, &Caps::default()).unwrap();
        assert_eq!((c.reg, c.bound), (2, 4));
        let c2 = power_bound_check(&g, 2, PrimeField::GF2, &Caps::default()).unwrap();
        assert!(c2.holds && c2.bound == 6);
    }
}
