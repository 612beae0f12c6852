//! Reference computations with known answers, bundled as one sweep.

use serde::Serialize;

use crate::arrangements::{
    gen_conic_6_5, gen_generic_lines, gen_marked_triple_point, gen_pencil, gen_quasi_pencil,
    Arrangement,
};
use crate::bipartite::{levi_graph, max_matching};
use crate::caps::Caps;
use crate::classify::{
    bounds_report, bounds_verify, is_shellable, power_bound_check, theorem_a_family,
    theorem_a_verify,
};
use crate::complexes::{alexander_dual, complex_of_ideal, edge_ideal, Monomial, MonomialIdeal};
use crate::error::Result;
use crate::homology::PrimeField;
use crate::resolutions::{
    analyze_graph, betti_general, betti_squarefree, has_linear_resolution, BettiTable,
};

/// A reference Betti table with the invariants it should produce.
pub struct ReferenceTable {
    pub name: &'static str,
    pub arrangement: Arrangement,
    pub table: BettiTable,
    pub pd: usize,
    pub reg_quotient: usize,
    pub is_cm: bool,
}

pub fn reference_tables() -> Vec<ReferenceTable> {
    vec![
        ReferenceTable {
            name: "quasi-pencil k=4",
            arrangement: gen_quasi_pencil(4).expect("valid"),
            table: BettiTable::from_rows(
                8,
                &[
                    (0, 0, &[1]),
                    (1, 1, &[9, 12, 2]),
                    (2, 2, &[9, 24, 18, 6, 1]),
                    (3, 3, &[1, 2, 1]),
                ],
            ),
            pd: 6,
            reg_quotient: 3,
            is_cm: false,
        },
        ReferenceTable {
            name: "generic lines k=5",
            arrangement: gen_generic_lines(5).expect("valid"),
            table: BettiTable::from_rows(
                15,
                &[
                    (0, 0, &[1]),
                    (1, 1, &[20, 40, 20, 5]),
                    (2, 2, &[90, 360, 515, 330, 100, 10]),
                    (3, 3, &[80, 470, 1135, 1370, 897, 295, 40]),
                    (4, 4, &[5, 35, 105, 185, 205, 120, 35, 4]),
                ],
            ),
            pd: 11,
            reg_quotient: 4,
            is_cm: false,
        },
        ReferenceTable {
            name: "conic 6_5",
            arrangement: gen_conic_6_5().expect("valid"),
            table: BettiTable::from_rows(
                12,
                &[
                    (0, 0, &[1]),
                    (1, 1, &[30, 120, 210, 180, 62]),
                    (2, 2, &[15, 120, 400, 720, 765, 500, 204, 48, 5]),
                ],
            ),
            pd: 10,
            reg_quotient: 2,
            is_cm: false,
        },
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(
    out: &mut Vec<CorpusCheck>,
    name: impl Into<String>,
    passed: bool,
    detail: impl Into<String>,
) {
    out.push(CorpusCheck {
        name: name.into(),
        passed,
        detail: detail.into(),
    });
}

/// Runs every reference computation over each field in `fields`.
pub fn run_corpus(fields: &[PrimeField], caps: &Caps) -> Result<Vec<CorpusCheck>> {
    let mut out = Vec::new();
    for r in reference_tables() {
        let g = levi_graph(&r.arrangement);
        for &f in fields {
            let (t, s) = analyze_graph(&g, f, caps)?;
            let ok = t == r.table
                && s.pd == r.pd
                && s.reg_quotient == r.reg_quotient
                && s.is_cm == r.is_cm;
            check(
                &mut out,
                format!("{} Betti table over {f}", r.name),
                ok,
                format!("pd={} reg(S/I)={}", s.pd, s.reg_quotient),
            );
        }
    }

    let g3 = levi_graph(&gen_marked_triple_point()?);
    let dual = alexander_dual(&edge_ideal(&g3))?;
    let expected_dual = MonomialIdeal::from_text(
        dual.vars().to_vec(),
        "y1*y2*y3\nx2*y1*y3\nx1*x2*y3\nx2*x3*y1\nx1*x2*x3",
    )?;
    for &f in fields {
        let t = betti_squarefree(&complex_of_ideal(&dual)?, f, caps)?;
        let shape = BettiTable::from_entries(6, [(0, 0, 1), (1, 3, 5), (2, 4, 5), (3, 5, 1)]);
        let linear = has_linear_resolution(&dual, f, caps)?;
        let (_, s) = analyze_graph(&g3, f, caps)?;
        check(
            &mut out,
            format!("marked triple point dual over {f}"),
            dual == expected_dual && t == shape && linear && s.is_cm,
            format!("dual = {dual}"),
        );
    }

    let members = theorem_a_family(8);
    let field = fields.first().copied().unwrap_or_default();
    for e in theorem_a_verify(&members, field, caps)? {
        let detail = format!("no order: {}, pd != codim: {:?}", e.no_order, e.pd_ne_codim);
        check(&mut out, format!("never CM: {}", e.name), e.holds(), detail);
    }

    for k in 3..=8 {
        for (name, a) in [
            ("pencil", gen_pencil(k)?),
            ("quasi-pencil", gen_quasi_pencil(k)?),
            ("generic lines", gen_generic_lines(k)?),
        ] {
            let shellable = is_shellable(&levi_graph(&a), caps)?.is_shellable();
            check(
                &mut out,
                format!("shellable iff pencil: {name} k={k}"),
                shellable == a.is_pencil(),
                format!("shellable: {shellable}"),
            );
        }
    }
    let conic = gen_conic_6_5()?;
    let shellable = is_shellable(&levi_graph(&conic), caps)?.is_shellable();
    check(
        &mut out,
        "shellable iff pencil: conic 6_5",
        !shellable,
        format!("shellable: {shellable}"),
    );

    for (name, a) in bound_members()? {
        let g = levi_graph(&a);
        let report = bounds_report(&a, caps);
        let (_, s) = analyze_graph(&g, field, caps)?;
        let checks = bounds_verify(&report, &s);
        let failed: Vec<&str> = checks.iter().filter(|c| !c.holds).map(|c| c.name).collect();
        let mut ok = failed.is_empty();
        if a.is_pencil() {
            ok &= max_matching(&g).size == 1 && s.reg_ideal == 2;
        } else {
            ok &= report.pd_upper.is_some() && max_matching(&g).size == a.num_curves();
        }
        check(
            &mut out,
            format!("bounds: {name}"),
            ok,
            format!("pd={} reg(I)={} failed={failed:?}", s.pd, s.reg_ideal),
        );
    }

    for (name, a) in [
        ("pencil k=3", gen_pencil(3)?),
        ("quasi-pencil k=3", gen_quasi_pencil(3)?),
    ] {
        let c = power_bound_check(&levi_graph(&a), 2, field, caps)?;
        check(
            &mut out,
            format!("reg(I^2) bound: {name}"),
            c.holds,
            format!("reg(I^2)={} <= {}", c.reg, c.bound),
        );
    }

    for (name, ideal) in squarefree_corpus()? {
        let general = betti_general(&ideal, field, caps)?;
        let hochster = betti_squarefree(&complex_of_ideal(&ideal)?, field, caps)?;
        check(
            &mut out,
            format!("lattice = Hochster: {name}"),
            general == hochster,
            format!("pd={}", general.pd()),
        );
    }
    Ok(out)
}

/// Strict arrangements small enough for a Betti table.
pub fn bound_members() -> Result<Vec<(String, Arrangement)>> {
    let mut v = Vec::new();
    for k in 3..=8 {
        v.push((format!("pencil k={k}"), gen_pencil(k)?));
        v.push((format!("quasi-pencil k={k}"), gen_quasi_pencil(k)?));
    }
    for k in 3..=5 {
        v.push((format!("generic lines k={k}"), gen_generic_lines(k)?));
    }
    v.push(("conic 6_5".into(), gen_conic_6_5()?));
    v.push((
        "projective plane q=2".into(),
        crate::arrangements::gen_projective_plane(2)?,
    ));
    Ok(v)
}

/// Squarefree ideals whose lcm lattices fit the default cap.
pub fn squarefree_corpus() -> Result<Vec<(String, MonomialIdeal)>> {
    let mut v = Vec::new();
    let g3 = edge_ideal(&levi_graph(&gen_marked_triple_point()?));
    v.push(("marked triple point dual".into(), alexander_dual(&g3)?));
    v.push(("marked triple point".into(), g3));
    for k in 3..=6 {
        v.push((
            format!("pencil k={k}"),
            edge_ideal(&levi_graph(&gen_pencil(k)?)),
        ));
    }
    for k in 3..=5 {
        v.push((
            format!("quasi-pencil k={k}"),
            edge_ideal(&levi_graph(&gen_quasi_pencil(k)?)),
        ));
    }
    v.push((
        "generic lines k=3".into(),
        edge_ideal(&levi_graph(&gen_generic_lines(3)?)),
    ));
    v.push((
        "generic lines k=4".into(),
        edge_ideal(&levi_graph(&gen_generic_lines(4)?)),
    ));
    let xs = MonomialIdeal::with_default_vars(2, [Monomial(vec![1, 0]), Monomial(vec![0, 1])])?;
    v.push(("maximal ideal in 2 variables".into(), xs));
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_passes_over_gf2() {
        let checks = run_corpus(&[PrimeField::GF2], &Caps::default()).unwrap();
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
        assert!(failed.is_empty(), "{failed:?}");
    }
}
