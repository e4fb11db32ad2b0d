//! The domination order on equal-size sets, stability, and shifting.
//!
//! `A ≺ B` when the sorted elements satisfy `aᵢ ≤ bᵢ` coordinatewise. A
//! stable (shifted) system is a downset of `≺`. A shift replaces an edge
//! `B` by a non-edge `A ≺ B`; the schedule used here swaps the pair whose
//! `A` is lexicographically first among violated non-edges and, for that
//! `A`, whose `B` is the lexicographically first dominating edge.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::{all_triples, SmallSet, Triple, TripleSystem, Vertex};

/// `A ≺ B` for sets of equal size (reflexive).
pub fn dominates(a: &SmallSet, b: &SmallSet) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.elements().iter().zip(b.elements()).all(|(x, y)| x <= y))
}

/// `A ≺ B` on triples.
#[inline]
pub fn triple_precedes(a: &Triple, b: &Triple) -> bool {
    let (a, b) = (a.elements(), b.elements());
    a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2]
}

/// The triples covered by `t` in `≺`: decrease one coordinate by one.
pub fn lower_covers(t: &Triple) -> impl Iterator<Item = Triple> {
    let [a, b, c] = t.elements();
    let first = (a > 1).then(|| Triple::from_sorted(a - 1, b, c));
    let second = (b - 1 > a).then(|| Triple::from_sorted(a, b - 1, c));
    let third = (c - 1 > b).then(|| Triple::from_sorted(a, b, c - 1));
    first.into_iter().chain(second).chain(third)
}

/// Whether every triple dominated by an edge is an edge.
pub fn is_stable(f: &TripleSystem) -> bool {
    // Checking lower covers suffices: ≺ is the transitive closure of covering.
    f.edges().all(|e| lower_covers(e).all(|c| f.contains(&c)))
}

/// For each `(a, b)`, the largest third element of an edge `(x, y, z)`
/// with `x ≥ a` and `y ≥ b`. A triple `(a, b, c)` is dominated by some
/// edge iff `table[a][b] ≥ c`.
struct DominanceTable {
    stride: usize,
    max_third: Vec<Vertex>,
}

impl DominanceTable {
    fn new(f: &TripleSystem) -> DominanceTable {
        let stride = f.n() + 2;
        let mut max_third = vec![0; stride * stride];
        for e in f.edges() {
            let [x, y, z] = e.elements();
            let cell = &mut max_third[usize::from(x) * stride + usize::from(y)];
            *cell = (*cell).max(z);
        }
        for x in (0..=f.n()).rev() {
            for y in (0..=f.n()).rev() {
                let here = x * stride + y;
                let right = max_third[here + 1];
                let below = max_third[here + stride];
                max_third[here] = max_third[here].max(right).max(below);
            }
        }
        DominanceTable { stride, max_third }
    }

    #[inline]
    fn dominated(&self, t: &Triple) -> bool {
        let [a, b, c] = t.elements();
        self.max_third[usize::from(a) * self.stride + usize::from(b)] >= c
    }
}

/// The pair `(A, B)` the shift schedule would swap: `A ∉ F`, `B ∈ F`,
/// `A ≺ B`, with `A` then `B` lexicographically first. `None` iff stable.
pub fn stability_violation(f: &TripleSystem) -> Option<(Triple, Triple)> {
    let table = DominanceTable::new(f);
    let a = all_triples(f.n()).find(|t| !f.contains(t) && table.dominated(t))?;
    let b = f
        .edges()
        .find(|e| triple_precedes(&a, e))
        .copied()
        .expect("dominance table guarantees a dominating edge");
    Some((a, b))
}

/// Result of one shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shifted {
    pub system: TripleSystem,
    pub added: Triple,
    pub removed: Triple,
}

/// One shift, or `None` when `f` is already stable.
pub fn shift_once(f: &TripleSystem) -> Option<Shifted> {
    let (added, removed) = stability_violation(f)?;
    let mut system = f.clone();
    system.remove(&removed);
    system
        .insert(added)
        .expect("dominated triple lies inside the vertex set");
    Some(Shifted {
        system,
        added,
        removed,
    })
}

/// Shifts to a fixpoint `sh(F)`. Same size as `f`, and stable.
pub fn stabilize(f: &TripleSystem) -> TripleSystem {
    let mut current = f.clone();
    let mut potential = current.potential();
    while let Some((added, removed)) = stability_violation(&current) {
        current.remove(&removed);
        current
            .insert(added)
            .expect("dominated triple lies inside the vertex set");
        let next = current.potential();
        debug_assert!(next < potential, "shift must lower the element sum");
        potential = next;
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{build_a, build_b};

    fn t(a: Vertex, b: Vertex, c: Vertex) -> Triple {
        Triple::new(a, b, c).unwrap()
    }

    fn s(v: &[Vertex]) -> SmallSet {
        SmallSet::new(v).unwrap()
    }

    #[test]
    fn domination_examples() {
        assert!(dominates(&s(&[1, 2, 4]), &s(&[2, 3, 4])).unwrap());
        assert!(!dominates(&s(&[1, 3, 5]), &s(&[2, 3, 4])).unwrap());
        assert!(dominates(&s(&[2, 5, 7]), &s(&[2, 5, 7])).unwrap());
        assert!(dominates(&s(&[1, 4]), &s(&[2, 4])).unwrap());
        assert_eq!(
            dominates(&s(&[1, 2]), &s(&[1, 2, 3])),
            Err(Error::SizeMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn lower_covers_of_corner_cases() {
        assert_eq!(lower_covers(&t(1, 2, 3)).count(), 0);
        assert_eq!(
            lower_covers(&t(2, 3, 4)).collect::<Vec<_>>(),
            vec![t(1, 3, 4)]
        );
        assert_eq!(
            lower_covers(&t(2, 4, 6)).collect::<Vec<_>>(),
            vec![t(1, 4, 6), t(2, 3, 6), t(2, 4, 5)]
        );
    }

    #[test]
    fn constructions_are_stable() {
        for (n, s) in [(9, 2), (12, 3), (7, 1), (6, 0)] {
            assert!(is_stable(&build_b(n, s).unwrap()));
        }
        assert!(is_stable(&build_a(12, 2).unwrap()));
        assert!(is_stable(&TripleSystem::empty(5).unwrap()));
    }

    #[test]
    fn unstable_witness() {
        let f = TripleSystem::from_arrays(4, &[[2, 3, 4]]).unwrap();
        assert!(!is_stable(&f));
        assert_eq!(stability_violation(&f), Some((t(1, 2, 3), t(2, 3, 4))));
    }

    #[test]
    fn shift_single_edge_to_bottom() {
        let f = TripleSystem::from_arrays(4, &[[2, 3, 4]]).unwrap();
        let sh = stabilize(&f);
        assert_eq!(sh, TripleSystem::from_arrays(4, &[[1, 2, 3]]).unwrap());
        let once = shift_once(&f).unwrap();
        assert_eq!(once.system, sh);
    }

    #[test]
    fn shift_once_follows_lexicographic_schedule() {
        // A = {1,2,3} is the first violated non-edge; the first edge above it
        // in lexicographic order is {1,2,4}.
        let f = TripleSystem::from_arrays(4, &[[1, 2, 4], [2, 3, 4]]).unwrap();
        let step = shift_once(&f).unwrap();
        assert_eq!(step.added, t(1, 2, 3));
        assert_eq!(step.removed, t(1, 2, 4));
        assert_eq!(
            step.system,
            TripleSystem::from_arrays(4, &[[1, 2, 3], [2, 3, 4]]).unwrap()
        );
    }

    #[test]
    fn stable_inputs_are_fixpoints() {
        let b = build_b(9, 2).unwrap();
        assert!(shift_once(&b).is_none());
        assert_eq!(stabilize(&b), b);
    }

    #[test]
    fn dominance_table_agrees_with_brute_force() {
        let f = TripleSystem::from_arrays(7, &[[2, 5, 7], [3, 4, 6], [1, 6, 7]]).unwrap();
        let table = DominanceTable::new(&f);
        for a in all_triples(7) {
            let brute = f.edges().any(|e| triple_precedes(&a, e));
            assert_eq!(table.dominated(&a), brute, "{a}");
        }
    }
}
