use rayon::prelude::*;
use serde::Serialize;

use super::order::herzog_hibi_search;
use super::shelling::is_shellable;
use crate::arrangements::{
    gen_generic_lines, gen_projective_plane, gen_quasi_pencil, Arrangement, Mode,
};
use crate::bipartite::levi_graph;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::homology::PrimeField;
use crate::resolutions::analyze_graph;

/// Members of the never-Cohen–Macaulay families: quasi-pencils and generic
/// line arrangements with `3 ≤ k ≤ k_max`, and the projective planes of
/// orders 2 and 3.
pub fn theorem_a_family(k_max: usize) -> Vec<(String, Arrangement)> {
    let mut out = Vec::new();
    for k in 3..=k_max {
        out.push((
            format!("quasi-pencil k={k}"),
            gen_quasi_pencil(k).expect("k >= 3"),
        ));
    }
    for q in [2, 3] {
        out.push((
            format!("projective plane q={q}"),
            gen_projective_plane(q).expect("q is prime"),
        ));
    }
    for k in 3..=k_max {
        out.push((
            format!("generic lines k={k}"),
            gen_generic_lines(k).expect("k >= 3"),
        ));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremAEntry {
    pub name: String,
    /// The ordering search found nothing.
    pub no_order: bool,
    /// `pd ≠ codim` from the Betti table; `None` when beyond the caps.
    pub pd_ne_codim: Option<bool>,
}

impl TheoremAEntry {
    pub fn holds(&self) -> bool {
        self.no_order && self.pd_ne_codim != Some(false)
    }
}

/// Runs the ordering search on every member, and confirms with a Betti
/// table where the Hochster cap allows.
pub fn theorem_a_verify(
    members: &[(String, Arrangement)],
    field: PrimeField,
    caps: &Caps,
) -> Result<Vec<TheoremAEntry>> {
    members
        .par_iter()
        .map(|(name, a)| {
            let g = levi_graph(a);
            let no_order = !herzog_hibi_search(&g, caps)?.is_found();
            let pd_ne_codim = match analyze_graph(&g, field, caps) {
                Ok((_, summary)) => Some(!summary.is_cm),
                Err(Error::CapExceeded { .. }) => None,
                Err(e) => return Err(e),
            };
            Ok(TheoremAEntry {
                name: name.clone(),
                no_order,
                pd_ne_codim,
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremBOutcome {
    pub is_pencil: bool,
    pub shellable: bool,
}

impl TheoremBOutcome {
    pub fn holds(&self) -> bool {
        self.is_pencil == self.shellable
    }
}

/// Shellability of the Levi graph against being a pencil.
pub fn theorem_b_verify(a: &Arrangement, caps: &Caps) -> Result<TheoremBOutcome> {
    if a.mode() != Mode::Strict {
        return Err(Error::InvalidArrangement(
            "pencil classification needs a strict arrangement".into(),
        ));
    }
    Ok(TheoremBOutcome {
        is_pencil: a.is_pencil(),
        shellable: is_shellable(&levi_graph(a), caps)?.is_shellable(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangements::*;

    #[test]
    fn small_family() {
        let members = theorem_a_family(4);
        assert_eq!(members.len(), 6);
        let report = theorem_a_verify(&members, PrimeField::GF2, &Caps::default()).unwrap();
        assert!(report.iter().all(TheoremAEntry::holds));
        assert!(report
            .iter()
            .find(|e| e.name == "projective plane q=3")
            .unwrap()
            .pd_ne_codim
            .is_none());
    }

    #[test]
    fn pencils_only() {
        let caps = Caps::default();
        assert_eq!(
            theorem_b_verify(&gen_pencil(5).unwrap(), &caps).unwrap(),
            TheoremBOutcome {
                is_pencil: true,
                shellable: true
            }
        );
        assert!(theorem_b_verify(&gen_quasi_pencil(5).unwrap(), &caps)
            .unwrap()
            .holds());
        assert!(theorem_b_verify(&gen_marked_triple_point().unwrap(), &caps).is_err());
    }
}
