//! Small helpers for vertex sets stored as `u64` bitsets.

/// Largest vertex count a bitset can address.
pub const MAX_VERTICES: usize = 63;

pub type VertexSet = u64;

#[inline]
pub fn contains(set: VertexSet, v: usize) -> bool {
    set >> v & 1 == 1
}

#[inline]
pub fn is_subset(a: VertexSet, b: VertexSet) -> bool {
    a & !b == 0
}

#[inline]
pub fn full(n: usize) -> VertexSet {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates over the members of a set in increasing order.
pub fn members(set: VertexSet) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        }
    })
}

pub fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
    iter.into_iter().fold(0, |acc, v| acc | 1 << v)
}

/// Keeps only the inclusion-maximal sets, sorted and deduplicated.
pub fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| is_subset(s, k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// Keeps only the inclusion-minimal sets, sorted and deduplicated.
pub fn minimal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by(|a, b| a.count_ones().cmp(&b.count_ones()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| is_subset(k, s)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn members_round_trip() {
        let s = from_iter([0, 3, 5, 62]);
        assert_eq!(members(s).collect::<Vec<_>>(), vec![0, 3, 5, 62]);
        assert!(contains(s, 62));
        assert!(!contains(s, 1));
    }

    #[test]
    fn antichain_filters() {
        assert_eq!(
            maximal_sets(vec![0b011, 0b001, 0b110, 0b011]),
            vec![0b011, 0b110]
        );
        assert_eq!(minimal_sets(vec![0b011, 0b001, 0b110]), vec![0b001, 0b110]);
        assert_eq!(maximal_sets(vec![0]), vec![0]);
    }
}
