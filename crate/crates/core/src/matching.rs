//! Exact maximum matchings in families of 1-, 2- and 3-element sets.
//!
//! The solver branches on the smallest vertex that some still-available
//! member can cover: either one of the members whose minimum is that
//! vertex joins the matching, or the vertex stays uncovered. A branch is
//! cut once the matched count plus `free vertices / smallest member size`
//! cannot beat the best (or reach the target). Members are visited in
//! lexicographic order, so the returned witness is reproducible.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::hypergraph::{check_vertex, SmallSet, TraceFamily, TripleSystem, Vertex, MAX_VERTICES};

/// A family of sets of size 1, 2 or 3 on `[n]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MixedFamily {
    n: usize,
    members: BTreeSet<SmallSet>,
}

impl MixedFamily {
    pub fn new(n: usize, members: impl IntoIterator<Item = SmallSet>) -> Result<MixedFamily> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidParameter(format!(
                "n = {n} exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        let mut set = BTreeSet::new();
        for h in members {
            check_vertex(h.largest().into(), n)?;
            set.insert(h);
        }
        Ok(MixedFamily { n, members: set })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> impl Iterator<Item = &SmallSet> + '_ {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, h: &SmallSet) -> bool {
        self.members.contains(h)
    }
}

impl From<&TripleSystem> for MixedFamily {
    fn from(f: &TripleSystem) -> MixedFamily {
        MixedFamily {
            n: f.n(),
            members: f.edges().map(|&t| SmallSet::from(t)).collect(),
        }
    }
}

impl From<&TraceFamily> for MixedFamily {
    fn from(f: &TraceFamily) -> MixedFamily {
        MixedFamily {
            n: f.window(),
            members: f.members().copied().collect(),
        }
    }
}

/// Pairwise disjoint members of some family.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Matching {
    members: Vec<SmallSet>,
}

impl Matching {
    pub fn members(&self) -> &[SmallSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Whether the members are pairwise disjoint and all belong to `family`.
    pub fn is_valid_for(&self, family: &MixedFamily) -> bool {
        self.members.iter().all(|h| family.contains(h))
            && self
                .members
                .iter()
                .enumerate()
                .all(|(i, a)| self.members[i + 1..].iter().all(|b| a.is_disjoint(b)))
    }
}

/// Vertex masks the packer can work with.
pub(crate) trait Mask: Copy {
    fn disjoint(&self, other: &Self) -> bool;
    fn union(&self, other: &Self) -> Self;
    /// Index of the lowest set bit.
    fn low(&self) -> usize;
    /// Number of bits `>= from` that are clear in `self`, up to `limit`.
    fn free_from(&self, from: usize, limit: usize) -> usize;
}

impl Mask for u64 {
    #[inline]
    fn disjoint(&self, other: &Self) -> bool {
        self & other == 0
    }
    #[inline]
    fn union(&self, other: &Self) -> Self {
        self | other
    }
    #[inline]
    fn low(&self) -> usize {
        self.trailing_zeros() as usize
    }
    #[inline]
    fn free_from(&self, from: usize, limit: usize) -> usize {
        let window = if limit >= 64 {
            u64::MAX
        } else {
            (1u64 << limit) - 1
        } & (u64::MAX << from);
        (window & !self).count_ones() as usize
    }
}

impl<const W: usize> Mask for Bits<W> {
    #[inline]
    fn disjoint(&self, other: &Self) -> bool {
        !self.intersects(other)
    }
    #[inline]
    fn union(&self, other: &Self) -> Self {
        self.or(other)
    }
    #[inline]
    fn low(&self) -> usize {
        for (i, w) in self.0.iter().enumerate() {
            if *w != 0 {
                return i * 64 + w.trailing_zeros() as usize;
            }
        }
        usize::MAX
    }
    fn free_from(&self, from: usize, limit: usize) -> usize {
        (from..limit).filter(|&v| !self.get(v)).count()
    }
}

enum Goal {
    Maximum,
    AtLeast(usize),
}

/// Branch-and-bound over a slice of masks sorted by lowest bit.
struct Packer<'a, M: Mask> {
    members: &'a [M],
    min_size: usize,
    limit: usize,
    goal: Goal,
    best: usize,
    stack: Vec<usize>,
    best_stack: Vec<usize>,
    done: bool,
}

impl<'a, M: Mask> Packer<'a, M> {
    fn new(members: &'a [M], min_size: usize, limit: usize, goal: Goal) -> Self {
        Packer {
            members,
            min_size: min_size.max(1),
            limit,
            goal,
            best: 0,
            stack: Vec::new(),
            best_stack: Vec::new(),
            done: false,
        }
    }

    fn run(&mut self, blocked: M) {
        if let Goal::AtLeast(0) = self.goal {
            self.done = true;
            return;
        }
        self.go(0, blocked, 0);
    }

    fn go(&mut self, from: usize, blocked: M, depth: usize) {
        if depth > self.best {
            self.best = depth;
            self.best_stack.clone_from(&self.stack);
            if let Goal::AtLeast(k) = self.goal {
                if depth >= k {
                    self.done = true;
                    return;
                }
            }
        }
        let Some(i) = (from..self.members.len()).find(|&i| self.members[i].disjoint(&blocked))
        else {
            return;
        };
        let v = self.members[i].low();
        let reachable = depth + blocked.free_from(v, self.limit) / self.min_size;
        let hopeless = match self.goal {
            Goal::Maximum => reachable <= self.best,
            Goal::AtLeast(k) => reachable < k,
        };
        if hopeless {
            return;
        }
        let mut end = i;
        while end < self.members.len() && self.members[end].low() == v {
            end += 1;
        }
        for t in i..end {
            let m = self.members[t];
            if m.disjoint(&blocked) {
                self.stack.push(t);
                self.go(end, blocked.union(&m), depth + 1);
                self.stack.pop();
                if self.done {
                    return;
                }
            }
        }
        self.go(end, blocked, depth);
    }
}

/// Whether `k` pairwise disjoint masks avoiding `blocked` exist.
///
/// `masks` must be sorted by lowest set bit (lexicographic order of the
/// underlying sets suffices); `min_size` is a lower bound on member sizes.
pub(crate) fn has_disjoint_masks(masks: &[u64], k: usize, blocked: u64, min_size: usize) -> bool {
    let mut p = Packer::new(masks, min_size, 64, Goal::AtLeast(k));
    p.run(blocked);
    p.done
}

/// Size of a largest set of pairwise disjoint masks, same ordering contract
/// as [`has_disjoint_masks`].
pub(crate) fn max_disjoint_masks(masks: &[u64], min_size: usize) -> usize {
    let mut p = Packer::new(masks, min_size, 64, Goal::Maximum);
    p.run(0);
    p.best
}

fn solve<const W: usize>(
    family: &MixedFamily,
    avoid: &[Vertex],
    goal: Goal,
) -> (usize, Vec<SmallSet>, bool) {
    let to_mask = |vs: &[Vertex]| {
        let mut b = Bits::<W>::empty();
        for &v in vs {
            b.set(usize::from(v) - 1);
        }
        b
    };
    let blocked = to_mask(avoid);
    let sets: Vec<SmallSet> = family.members.iter().copied().collect();
    let masks: Vec<Bits<W>> = sets.iter().map(|h| to_mask(h.elements())).collect();
    let min_size = sets.iter().map(SmallSet::len).min().unwrap_or(1);
    let mut p = Packer::new(&masks, min_size, family.n, goal);
    p.run(blocked);
    let witness = p.best_stack.iter().map(|&i| sets[i]).collect();
    (p.best, witness, p.done)
}

fn dispatch(family: &MixedFamily, avoid: &[Vertex], goal: Goal) -> (usize, Vec<SmallSet>, bool) {
    match family.n {
        0..=64 => solve::<1>(family, avoid, goal),
        65..=256 => solve::<4>(family, avoid, goal),
        _ => solve::<16>(family, avoid, goal),
    }
}

/// A largest matching; its length is `ν(F)`.
pub fn maximum_matching(family: &MixedFamily) -> Matching {
    let (_, members, _) = dispatch(family, &[], Goal::Maximum);
    let m = Matching { members };
    debug_assert!(m.is_valid_for(family));
    m
}

/// The matching number `ν(F)`.
pub fn nu(family: &MixedFamily) -> usize {
    maximum_matching(family).len()
}

/// Whether `k` pairwise disjoint members exist. Stops at the first witness.
pub fn has_matching_of_size(family: &MixedFamily, k: usize) -> bool {
    dispatch(family, &[], Goal::AtLeast(k)).2
}

/// Largest matching among the members disjoint from `avoid`.
pub fn maximum_matching_avoiding(family: &MixedFamily, avoid: &[Vertex]) -> Result<Matching> {
    for &v in avoid {
        check_vertex(v.into(), family.n)?;
    }
    let (_, members, _) = dispatch(family, avoid, Goal::Maximum);
    Ok(Matching { members })
}

/// Whether `k` pairwise disjoint members avoiding `avoid` exist.
pub fn has_matching_avoiding(family: &MixedFamily, avoid: &[Vertex], k: usize) -> Result<bool> {
    for &v in avoid {
        check_vertex(v.into(), family.n)?;
    }
    Ok(dispatch(family, avoid, Goal::AtLeast(k)).2)
}

/// `ν` of the members disjoint from `avoid`.
pub fn nu_with_avoidance(family: &MixedFamily, avoid: &[Vertex]) -> Result<usize> {
    maximum_matching_avoiding(family, avoid).map(|m| m.len())
}

/// [`nu`] for a triple system.
pub fn nu_of(f: &TripleSystem) -> usize {
    nu(&MixedFamily::from(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{build_a, build_b};

    fn fam(n: usize, sets: &[&[Vertex]]) -> MixedFamily {
        MixedFamily::new(n, sets.iter().map(|s| SmallSet::new(s).unwrap())).unwrap()
    }

    /// Exhaustive: largest subfamily of pairwise disjoint members.
    fn naive_nu(f: &MixedFamily) -> usize {
        let members: Vec<SmallSet> = f.members().copied().collect();
        fn rec(ms: &[SmallSet], chosen: &mut Vec<SmallSet>) -> usize {
            let Some((first, rest)) = ms.split_first() else {
                return chosen.len();
            };
            let skip = rec(rest, chosen);
            if chosen.iter().all(|c| c.is_disjoint(first)) {
                chosen.push(*first);
                let take = rec(rest, chosen);
                chosen.pop();
                skip.max(take)
            } else {
                skip
            }
        }
        rec(&members, &mut Vec::new())
    }

    #[test]
    fn complete_systems() {
        let k5 = MixedFamily::from(&TripleSystem::complete(5).unwrap());
        assert_eq!(nu(&k5), 1);
        assert!(!has_matching_of_size(&k5, 2));
        let k8 = MixedFamily::from(&TripleSystem::complete(8).unwrap());
        assert_eq!(nu(&k8), 2);
        let a = MixedFamily::from(&build_a(12, 2).unwrap());
        assert_eq!(nu(&a), 2);
    }

    #[test]
    fn b_9_2_matches_naive() {
        let b = MixedFamily::from(&build_b(9, 2).unwrap());
        assert_eq!(naive_nu(&b), 2);
        assert_eq!(nu(&b), 2);
        assert_eq!(nu_with_avoidance(&b, &[1]).unwrap(), 1);
        assert_eq!(nu_with_avoidance(&b, &[]).unwrap(), 2);
    }

    #[test]
    fn empty_family() {
        let e = MixedFamily::new(4, []).unwrap();
        assert_eq!(nu(&e), 0);
        assert!(maximum_matching(&e).is_empty());
        assert!(has_matching_of_size(&e, 0));
        assert!(!has_matching_of_size(&e, 1));
    }

    #[test]
    fn zero_target_is_always_met() {
        let k5 = MixedFamily::from(&TripleSystem::complete(5).unwrap());
        assert!(has_matching_of_size(&k5, 0));
    }

    #[test]
    fn avoidance_in_a_12_2() {
        let a = MixedFamily::from(&build_a(12, 2).unwrap());
        assert_eq!(nu_with_avoidance(&a, &[1]).unwrap(), 2);
        assert!(nu_with_avoidance(&a, &[13]).is_err());
    }

    #[test]
    fn board_four_matching_example() {
        // 1, d, a1, b1, c1, a2, b2, c2, a3, b3, c3 as 1..=11
        let (one, d, a1, b1, c1, a2, b2, c2, a3, b3) = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10);
        let f = fam(11, &[&[c1, b2], &[b1, a2], &[one, d, b3], &[a1, c2, a3]]);
        assert!(has_matching_of_size(&f, 4));
        assert_eq!(nu(&f), 4);
    }

    #[test]
    fn mixed_sizes_and_singletons() {
        let f = fam(5, &[&[1], &[2], &[1, 2, 3], &[4, 5], &[3]]);
        assert_eq!(nu(&f), 4);
        let m = maximum_matching(&f);
        assert!(m.is_valid_for(&f));
    }

    #[test]
    fn witness_is_lexicographically_first() {
        let k6 = MixedFamily::from(&TripleSystem::complete(6).unwrap());
        let m = maximum_matching(&k6);
        let got: Vec<_> = m.members().iter().map(|h| h.elements().to_vec()).collect();
        assert_eq!(got, vec![vec![1, 2, 3], vec![4, 5, 6]]);
    }

    #[test]
    fn wide_vertex_sets_use_wider_masks() {
        let f = fam(
            300,
            &[&[1, 100, 299], &[2, 150, 300], &[1, 2, 3], &[65, 66, 67]],
        );
        assert_eq!(nu(&f), 3);
        let f = fam(900, &[&[1, 500, 899], &[2, 600, 900], &[1, 2, 3]]);
        assert_eq!(nu(&f), 2);
    }

    #[test]
    fn mask_packer_agrees_on_small_case() {
        let masks = [0b111u64, 0b1_1100, 0b11_1000, 0b1110_0000];
        assert!(has_disjoint_masks(&masks, 2, 0, 3));
        assert!(!has_disjoint_masks(&masks, 3, 0, 3));
        assert!(!has_disjoint_masks(&masks, 2, 0b10_0001, 3));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn family(max_n: usize) -> impl Strategy<Value = MixedFamily> {
            (3..=max_n).prop_flat_map(|n| {
                let set = prop::collection::btree_set(1..=n as Vertex, 1..=3)
                    .prop_map(|s| SmallSet::new(&s.into_iter().collect::<Vec<_>>()).unwrap());
                prop::collection::vec(set, 0..14).prop_map(move |v| MixedFamily::new(n, v).unwrap())
            })
        }

        proptest! {
            #[test]
            fn agrees_with_naive_enumeration(f in family(9)) {
                prop_assert_eq!(nu(&f), naive_nu(&f));
            }

            #[test]
            fn threshold_matches_value(f in family(12), k in 0usize..5) {
                prop_assert_eq!(has_matching_of_size(&f, k), nu(&f) >= k);
            }

            #[test]
            fn witness_is_valid_and_bounded(f in family(12)) {
                let m = maximum_matching(&f);
                prop_assert!(m.is_valid_for(&f));
                let smallest = f.members().map(SmallSet::len).min().unwrap_or(1);
                prop_assert!(m.len() <= f.n() / smallest);
            }

            #[test]
            fn monotone_under_inclusion(f in family(10), extra in family(10)) {
                let n = f.n().max(extra.n());
                let small = MixedFamily::new(n, f.members().copied()).unwrap();
                let big = MixedFamily::new(n, f.members().chain(extra.members()).copied()).unwrap();
                prop_assert!(nu(&small) <= nu(&big));
            }
        }
    }
}
