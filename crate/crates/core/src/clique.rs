//! Clique detection on difference sets.
//!
//! A set of differences `D` yields a monochromatic `K_k` (on any window of
//! `max_diff + 1` vertices) exactly when some `(k-1)`-subset of `D` is closed
//! under pairwise differences within `D`. Working on the difference set
//! instead of the vertex set shrinks the subset search from `C(n, k)` to
//! `C(|D|, k-1)` and lets every closure test run as one shift-and-mask.

use crate::coloring::DifferenceSet;
use crate::error::{Error, Result};

/// True iff `d_set` contains a monochromatic `K_k` in the difference-closure
/// sense. `k = 2` degenerates to nonemptiness.
///
/// Subsets are explored in increasing lexicographic order of their smallest
/// members, so the first witness found is the canonical one.
pub fn has_clique(d_set: &DifferenceSet, k: usize) -> bool {
    debug_assert!(k >= 2);
    closed_subset_exists(d_set.bits(), d_set.bits(), k - 1)
}

/// Like [`has_clique`], but returns the witness subset `K` (as differences,
/// increasing) when one exists.
pub fn find_clique_witness(d_set: &DifferenceSet, k: usize) -> Option<Vec<u32>> {
    debug_assert!(k >= 2);
    let mut stack = Vec::with_capacity(k - 1);
    if closed_subset_find(d_set.bits(), d_set.bits(), k - 1, &mut stack) {
        Some(stack)
    } else {
        None
    }
}

/// Converts a witness difference subset into clique vertices anchored at 1:
/// `K = {d_1 < ... < d_{k-1}}` gives the clique `{1, 1+d_1, ..., 1+d_{k-1}}`.
pub fn witness_vertices(witness: &[u32]) -> Vec<u32> {
    let mut v = Vec::with_capacity(witness.len() + 1);
    v.push(1);
    v.extend(witness.iter().map(|d| d + 1));
    v
}

/// Incremental form of the clique test for the level recursion.
///
/// Assuming `has_clique(d_set, k)` is false and `new_diff` is strictly larger
/// than every current member, `d_set ∪ {new_diff}` contains a `K_k` iff some
/// `(k-2)`-subset of `{x ∈ D : new_diff - x ∈ D}` is difference-closed in
/// `D` — the new maximum can only ever appear as a member of the witness
/// subset, never as one of its internal differences.
pub fn creates_clique_with(d_set: &DifferenceSet, new_diff: u32, k: usize) -> Result<bool> {
    debug_assert!(k >= 2);
    let max = d_set.max_member().unwrap_or(0);
    if new_diff <= max {
        return Err(Error::NewDiffNotLargest { new_diff, max });
    }
    if new_diff > crate::coloring::MAX_ELEMENT {
        return Err(Error::CapacityExceeded {
            n: new_diff,
            max: crate::coloring::MAX_ELEMENT,
        });
    }
    Ok(creates_clique_raw(d_set.bits(), new_diff, k))
}

/// Raw-bitmask version of [`creates_clique_with`]; the engine's hot path.
#[inline]
pub(crate) fn creates_clique_raw(bits: u128, new_diff: u32, k: usize) -> bool {
    // {x ∈ D : new_diff - x ∈ D}, via bit reversal around new_diff.
    let partners = bits & (bits.reverse_bits() >> (127 - new_diff));
    if k == 3 {
        return partners != 0;
    }
    closed_subset_exists(partners, bits, k - 2)
}

/// True iff some `need`-subset of `cands` has all pairwise differences in
/// `closure`. Members are chosen in increasing order; picking the minimum
/// first means later picks only need their difference to each earlier pick,
/// which the running candidate mask already encodes.
#[inline]
fn closed_subset_exists(cands: u128, closure: u128, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    if (cands.count_ones() as usize) < need {
        return false;
    }
    if need == 1 {
        return true; // nonempty by the count check
    }
    let mut rest = cands;
    while rest != 0 {
        let x = rest.trailing_zeros();
        rest &= rest - 1;
        // survivors above x whose difference to x lies in the closure
        if closed_subset_exists(rest & (closure << x), closure, need - 1) {
            return true;
        }
    }
    false
}

fn closed_subset_find(cands: u128, closure: u128, need: usize, stack: &mut Vec<u32>) -> bool {
    if need == 0 {
        return true;
    }
    if (cands.count_ones() as usize) < need {
        return false;
    }
    let mut rest = cands;
    while rest != 0 {
        let x = rest.trailing_zeros();
        rest &= rest - 1;
        stack.push(x);
        if closed_subset_find(rest & (closure << x), closure, need - 1, stack) {
            return true;
        }
        stack.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::DifferenceSet;

    fn set(max: u32, members: &[u32]) -> DifferenceSet {
        DifferenceSet::from_members(max, members.iter().copied()).unwrap()
    }

    #[test]
    fn triangle_cases() {
        assert!(has_clique(&set(2, &[1, 2]), 3));
        assert!(!has_clique(&set(4, &[1, 4]), 3));
        assert!(!has_clique(&set(4, &[2, 3]), 3));
        assert!(has_clique(&set(4, &[1, 2, 4]), 3)); // 1 + 1 = 2 style closure
    }

    #[test]
    fn k2_is_nonemptiness() {
        assert!(!has_clique(&set(5, &[]), 2));
        assert!(has_clique(&set(5, &[3]), 2));
    }

    #[test]
    fn witness_is_canonical() {
        let w = find_clique_witness(&set(2, &[1, 2]), 3).unwrap();
        assert_eq!(w, vec![1, 2]);
        assert_eq!(witness_vertices(&w), vec![1, 2, 3]);
        assert!(find_clique_witness(&set(4, &[1, 4]), 3).is_none());
    }

    #[test]
    fn incremental_matches_spec_examples() {
        assert!(creates_clique_with(&set(4, &[1, 4]), 5, 3).unwrap());
        assert!(creates_clique_with(&set(3, &[2, 3]), 5, 3).unwrap());
        assert!(!creates_clique_with(&set(0, &[]), 1, 3).unwrap());
    }

    #[test]
    fn incremental_rejects_non_maximal() {
        let err = creates_clique_with(&set(4, &[1, 4]), 3, 3).unwrap_err();
        assert!(matches!(
            err,
            Error::NewDiffNotLargest {
                new_diff: 3,
                max: 4
            }
        ));
    }

    #[test]
    fn cyclic_59_color1_is_triangle_free() {
        let c = crate::coloring::CyclicColoring::new(
            59,
            &[
                vec![5, 12, 13, 14, 16, 20, 22],
                vec![10, 15, 19, 24, 26, 27],
                vec![1, 2, 3, 4, 6, 7, 8, 9, 11, 17, 18, 21, 23, 25, 28, 29],
            ],
        )
        .unwrap()
        .expand()
        .unwrap();
        assert!(!has_clique(&c.class(1), 3));
    }
}
