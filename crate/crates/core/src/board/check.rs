//! Maximum admissible configuration weight, by exhaustive search.
//!
//! An admissible configuration is a set `P` of `d`-free pairs that is a
//! downset, together with a downset `T` of triples. `T` must contain the
//! mandatory triples `M(P)`: the forced ones and every `p ∪ {v}`, closed
//! downward. The outer loop enumerates all `P` for which `P ∪ M(P)` has no
//! 4-matching, one per orbit of the column permutations. For a fixed `P`
//! the weight is `w(P) + W − w(X)`, where `X`, the triples left out, is
//! an upset avoiding `M(P)` that meets every 4-matching of `P ∪ C(V,3)`.
//! Only the maximal elements of such a 4-matching's optional triples
//! matter, since `X` is an upset. The inner search finds the cheapest `X`
//! among those with `w(X) < w(P)`, i.e. configurations heavier than `W`.
//!
//! Weights are integers scaled by `2(s−1)(s−2)` inside the search and are
//! turned back into exact rationals for the report.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::{
    all_board_sets, BoardConfig, BoardSet, BoardVertex, NMode, WeightScheme, PERMUTATIONS_3,
};
use crate::error::{Error, Result};
use crate::matching::has_disjoint_masks;
use crate::weights::{w_complete, ExactRational};

const NT: usize = 165;
const FULL: u16 = (1 << 11) - 1;
/// Node budget of one run.
pub const DEFAULT_BOARD_BUDGET: u64 = 20_000_000_000;

type TSet = [u64; 3];

#[inline]
fn t_set(s: &mut TSet, i: usize) {
    s[i / 64] |= 1 << (i % 64);
}

#[inline]
fn t_get(s: &TSet, i: usize) -> bool {
    s[i / 64] >> (i % 64) & 1 == 1
}

#[inline]
fn t_or(a: &TSet, b: &TSet) -> TSet {
    [a[0] | b[0], a[1] | b[1], a[2] | b[2]]
}

#[inline]
fn t_andnot(a: &TSet, b: &TSet) -> TSet {
    [a[0] & !b[0], a[1] & !b[1], a[2] & !b[2]]
}

#[inline]
fn t_meets(a: &TSet, b: &TSet) -> bool {
    a[0] & b[0] != 0 || a[1] & b[1] != 0 || a[2] & b[2] != 0
}

#[inline]
fn t_is_empty(a: &TSet) -> bool {
    a[0] | a[1] | a[2] == 0
}

fn t_iter(s: TSet) -> impl Iterator<Item = usize> {
    (0..3).flat_map(move |w| {
        let mut bits = s[w];
        core::iter::from_fn(move || {
            (bits != 0).then(|| {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                w * 64 + b
            })
        })
    })
}

/// A feasible set of pairs, with its mandatory triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairDownset {
    pairs: u64,
    mandatory: TSet,
}

impl PairDownset {
    pub fn len(&self) -> usize {
        self.pairs.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.pairs == 0
    }
}

/// Result of the inner search for one [`PairDownset`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairOutcome {
    /// `w(P) − w(X)` scaled, for the cheapest `X` found, when positive.
    excess: Option<(u64, TSet)>,
    pub nodes: u64,
}

impl PairOutcome {
    /// Whether this pair set admits a configuration heavier than `W`.
    pub fn violates(&self) -> bool {
        self.excess.is_some()
    }
}

/// Outcome of one board check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseReport {
    pub s: usize,
    pub mode: NMode,
    pub verified: bool,
    pub max_weight: ExactRational,
    pub w: ExactRational,
    /// Pair sets examined plus inner search nodes.
    pub configs_explored: u64,
    /// Pair sets examined, one per column-permutation orbit.
    pub pair_sets: usize,
    /// A heaviest configuration, present only when it outweighs `W`.
    pub witness: Option<BoardConfig>,
}

impl CaseReport {
    pub fn n(&self) -> Option<usize> {
        match self.mode {
            NMode::Exact(n) => Some(n),
            NMode::Bound => None,
        }
    }
}

/// Precomputed tables for one `(s, mode)`.
pub struct Ineq7Search {
    scheme: WeightScheme,
    budget: u64,
    triples: Vec<u16>,
    up: Vec<TSet>,
    down: Vec<TSet>,
    /// Triples by spread: narrow, medium, wide.
    classes: [TSet; 3],
    class_weight: [u64; 3],
    forced: TSet,
    pairs: Vec<u16>,
    pair_weight: Vec<u64>,
    pair_up: Vec<u64>,
    pair_mandatory: Vec<TSet>,
    pair_perm: Vec<[usize; 6]>,
}

impl Ineq7Search {
    pub fn new(s: usize, mode: NMode) -> Result<Ineq7Search> {
        Self::with_budget(s, mode, DEFAULT_BOARD_BUDGET)
    }

    pub fn with_budget(s: usize, mode: NMode, budget: u64) -> Result<Ineq7Search> {
        let scheme = WeightScheme::new(s, mode)?;
        let sets: Vec<BoardSet> = all_board_sets(3).collect();
        let triples: Vec<u16> = sets.iter().map(|h| h.mask()).collect();
        let mut index_of = vec![usize::MAX; 1 << 11];
        for (i, &m) in triples.iter().enumerate() {
            index_of[usize::from(m)] = i;
        }
        let mut up = vec![[0; 3]; NT];
        let mut down = vec![[0; 3]; NT];
        for (i, a) in sets.iter().enumerate() {
            for (j, b) in sets.iter().enumerate() {
                if a.dominated_by(*b) {
                    t_set(&mut up[i], j);
                    t_set(&mut down[j], i);
                }
            }
        }
        let mut classes = [[0; 3]; 3];
        for (i, h) in sets.iter().enumerate() {
            t_set(&mut classes[h.spread() - 1], i);
        }
        let class_weight = [1, 2, 3].map(|z| {
            let probe = sets
                .iter()
                .find(|h| h.spread() == z)
                .expect("every spread occurs");
            scheme.scaled(*probe)
        });
        let mut forced = [0; 3];
        for h in super::forced_members().members() {
            t_set(&mut forced, index_of[usize::from(h.mask())]);
        }
        let pair_sets: Vec<BoardSet> = all_board_sets(2)
            .filter(|h| !h.contains(BoardVertex::D))
            .collect();
        let pairs: Vec<u16> = pair_sets.iter().map(|h| h.mask()).collect();
        let pair_weight = pair_sets.iter().map(|h| scheme.scaled(*h)).collect();
        let pair_up = pair_sets
            .iter()
            .map(|a| {
                pair_sets
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| a.dominated_by(**b))
                    .fold(0u64, |m, (j, _)| m | 1 << j)
            })
            .collect();
        let pair_mandatory = pairs
            .iter()
            .map(|&p| {
                let mut m = [0; 3];
                for v in 0..11 {
                    if p >> v & 1 == 0 {
                        m = t_or(&m, &down[index_of[usize::from(p | 1 << v)]]);
                    }
                }
                m
            })
            .collect();
        let pair_perm = pair_sets
            .iter()
            .map(|h| {
                PERMUTATIONS_3.map(|perm| {
                    let image = h.permute_columns(&perm).mask();
                    pairs
                        .iter()
                        .position(|&q| q == image)
                        .expect("permutations keep pairs d-free")
                })
            })
            .collect();
        Ok(Ineq7Search {
            scheme,
            budget,
            triples,
            up,
            down,
            classes,
            class_weight,
            forced,
            pairs,
            pair_weight,
            pair_up,
            pair_mandatory,
            pair_perm,
        })
    }

    pub fn scheme(&self) -> &WeightScheme {
        &self.scheme
    }

    #[inline]
    fn cost(&self, s: &TSet) -> u64 {
        (0..3)
            .map(|c| {
                let n = (0..3)
                    .map(|w| (s[w] & self.classes[c][w]).count_ones())
                    .sum::<u32>();
                u64::from(n) * self.class_weight[c]
            })
            .sum()
    }

    fn pairs_weight(&self, pairs: u64) -> u64 {
        (0..self.pairs.len())
            .filter(|&i| pairs >> i & 1 == 1)
            .map(|i| self.pair_weight[i])
            .sum()
    }

    fn has_four_matching(&self, pairs: u64, triples: &TSet) -> bool {
        let mut masks: Vec<u64> = (0..self.pairs.len())
            .filter(|&i| pairs >> i & 1 == 1)
            .map(|i| u64::from(self.pairs[i]))
            .chain(t_iter(*triples).map(|i| u64::from(self.triples[i])))
            .collect();
        masks.sort_by_key(|m| m.trailing_zeros());
        has_disjoint_masks(&masks, 4, !u64::from(FULL), 2)
    }

    fn is_canonical(&self, pairs: u64) -> bool {
        (1..6).all(|g| {
            let image = (0..self.pairs.len())
                .filter(|&i| pairs >> i & 1 == 1)
                .fold(0u64, |m, i| m | 1 << self.pair_perm[i][g]);
            pairs <= image
        })
    }

    /// All feasible pair downsets, one per column-permutation orbit, in a fixed order.
    pub fn pair_downsets(&self) -> Vec<PairDownset> {
        let mut out = Vec::new();
        self.enumerate_pairs(0, 0, 0, self.forced, &mut out);
        out
    }

    fn enumerate_pairs(
        &self,
        i: usize,
        pairs: u64,
        dead: u64,
        mandatory: TSet,
        out: &mut Vec<PairDownset>,
    ) {
        if i == self.pairs.len() {
            if self.is_canonical(pairs) {
                out.push(PairDownset { pairs, mandatory });
            }
            return;
        }
        if dead >> i & 1 == 0 {
            let grown = t_or(&mandatory, &self.pair_mandatory[i]);
            if !self.has_four_matching(pairs | 1 << i, &grown) {
                self.enumerate_pairs(i + 1, pairs | 1 << i, dead, grown, out);
            }
        }
        self.enumerate_pairs(i + 1, pairs, dead | self.pair_up[i], mandatory, out);
    }

    /// Maximal optional triples of every 4-matching that uses at least one pair of `p`.
    fn clauses(&self, p: &PairDownset) -> Vec<TSet> {
        let pair_masks: Vec<u16> = (0..self.pairs.len())
            .filter(|&i| p.pairs >> i & 1 == 1)
            .map(|i| self.pairs[i])
            .collect();
        let mut found = BTreeSet::new();
        let mut chosen = Vec::new();
        self.pair_combos(&pair_masks, 0, 0, &mut chosen, &p.mandatory, &mut found);
        let mut clauses: Vec<TSet> = found.into_iter().collect();
        // a clause containing another is implied by it
        clauses.sort_by_key(|c| {
            (
                c[0].count_ones() + c[1].count_ones() + c[2].count_ones(),
                *c,
            )
        });
        let mut kept: Vec<TSet> = Vec::with_capacity(clauses.len());
        for c in clauses {
            if !kept.iter().any(|k| t_andnot(k, &c) == [0; 3]) {
                kept.push(c);
            }
        }
        kept
    }

    fn pair_combos(
        &self,
        pairs: &[u16],
        from: usize,
        used: u16,
        chosen: &mut Vec<usize>,
        mandatory: &TSet,
        found: &mut BTreeSet<TSet>,
    ) {
        if !chosen.is_empty() {
            let need = 4 - chosen.len();
            let mut picked = Vec::with_capacity(need);
            self.triple_fill(FULL & !used, need, 0, &mut picked, mandatory, found);
        }
        if chosen.len() == 3 {
            return;
        }
        for (i, &q) in pairs.iter().enumerate().skip(from) {
            if q & used == 0 {
                chosen.push(i);
                self.pair_combos(pairs, i + 1, used | q, chosen, mandatory, found);
                chosen.pop();
            }
        }
    }

    fn triple_fill(
        &self,
        free: u16,
        need: usize,
        from: usize,
        picked: &mut Vec<usize>,
        mandatory: &TSet,
        found: &mut BTreeSet<TSet>,
    ) {
        if picked.len() == need {
            let mut clause = [0; 3];
            for &t in picked.iter() {
                if !t_get(mandatory, t) {
                    t_set(&mut clause, t);
                }
            }
            // the outer loop only keeps pair sets whose mandatory part is 4-matching free
            debug_assert!(!t_is_empty(&clause));
            let maximal = t_iter(clause).fold([0; 3], |acc, t| {
                let above = t_andnot(&self.up[t], &{
                    let mut me = [0; 3];
                    t_set(&mut me, t);
                    me
                });
                if t_meets(&above, &clause) {
                    acc
                } else {
                    let mut acc = acc;
                    t_set(&mut acc, t);
                    acc
                }
            });
            found.insert(maximal);
            return;
        }
        for t in from..NT {
            let m = self.triples[t];
            if m & !free == 0 {
                picked.push(t);
                self.triple_fill(free & !m, need, t + 1, picked, mandatory, found);
                picked.pop();
            }
        }
    }

    /// Cheapest upset hitting every clause, among those cheaper than `w(P)`.
    pub fn solve(&self, p: &PairDownset) -> PairOutcome {
        let clauses = self.clauses(p);
        let limit = self.pairs_weight(p.pairs);
        let mut inner = Inner {
            search: self,
            clauses: &clauses,
            cutoff: limit,
            best: None,
            nodes: 0,
            budget: self.budget,
        };
        inner.go([0; 3], p.mandatory, 0);
        PairOutcome {
            excess: inner.best.map(|(cost, x)| (limit - cost, x)),
            nodes: inner.nodes,
        }
    }

    /// Combines outcomes given in [`pair_downsets`](Self::pair_downsets) order.
    pub fn finish(&self, sets: &[PairDownset], outcomes: &[PairOutcome]) -> Result<CaseReport> {
        let explored = outcomes
            .iter()
            .fold(sets.len() as u64, |acc, o| acc.saturating_add(o.nodes));
        if explored > self.budget || outcomes.iter().any(|o| o.nodes > self.budget) {
            return Err(Error::BudgetExceeded {
                budget: "board-check node",
                limit: self.budget,
            });
        }
        let w = w_complete(self.scheme.s())?;
        let mut best: Option<(u64, usize)> = None;
        for (k, o) in outcomes.iter().enumerate() {
            if let Some((excess, _)) = o.excess {
                if best.is_none_or(|(b, _)| excess > b) {
                    best = Some((excess, k));
                }
            }
        }
        let (max_weight, witness) = match best {
            None => (w.clone(), None),
            Some((excess, k)) => {
                let (_, x) = outcomes[k].excess.expect("chosen outcome has an excess");
                let config = self.config_of(&sets[k], &x);
                (w.clone() + self.scheme.unscale(excess), Some(config))
            }
        };
        Ok(CaseReport {
            s: self.scheme.s(),
            mode: self.scheme.mode(),
            verified: max_weight <= w,
            max_weight,
            w,
            configs_explored: explored,
            pair_sets: sets.len(),
            witness,
        })
    }

    fn config_of(&self, p: &PairDownset, x: &TSet) -> BoardConfig {
        let pairs = (0..self.pairs.len())
            .filter(|&i| p.pairs >> i & 1 == 1)
            .map(|i| BoardSet::from_mask_unchecked(self.pairs[i]));
        let triples = (0..NT)
            .filter(|&t| !t_get(x, t))
            .map(|t| BoardSet::from_mask_unchecked(self.triples[t]));
        BoardConfig::new(pairs.chain(triples))
    }

    /// Sequential run.
    pub fn run(&self) -> Result<CaseReport> {
        let sets = self.pair_downsets();
        let outcomes: Vec<PairOutcome> = sets.iter().map(|p| self.solve(p)).collect();
        self.finish(&sets, &outcomes)
    }
}

struct Inner<'a> {
    search: &'a Ineq7Search,
    clauses: &'a [TSet],
    cutoff: u64,
    best: Option<(u64, TSet)>,
    nodes: u64,
    budget: u64,
}

impl Inner<'_> {
    /// `x`: triples left out so far (an upset); `kept`: triples that must stay (a downset).
    fn go(&mut self, x: TSet, kept: TSet, cost: u64) {
        self.nodes += 1;
        if cost >= self.cutoff || self.nodes > self.budget {
            return;
        }
        let search = self.search;
        let mut branch: Option<(usize, TSet)> = None;
        let mut bound = 0u64;
        let mut claimed = [0u64; 3];
        for (k, clause) in self.clauses.iter().enumerate() {
            if t_meets(clause, &x) {
                continue;
            }
            let candidates = t_andnot(clause, &kept);
            if t_is_empty(&candidates) {
                return;
            }
            let mut reach = [0; 3];
            let mut cheapest = u64::MAX;
            for t in t_iter(candidates) {
                let fresh = t_andnot(&search.up[t], &x);
                cheapest = cheapest.min(search.cost(&fresh));
                reach = t_or(&reach, &fresh);
            }
            // clauses with disjoint reach need disjoint additions
            if !t_meets(&reach, &claimed) {
                bound += cheapest;
                claimed = t_or(&claimed, &reach);
            }
            let size = candidates.iter().map(|w| w.count_ones()).sum::<u32>();
            if branch.is_none_or(|(_, c)| size < c.iter().map(|w| w.count_ones()).sum::<u32>()) {
                branch = Some((k, candidates));
            }
        }
        let Some((_, candidates)) = branch else {
            self.cutoff = cost;
            self.best = Some((cost, x));
            return;
        };
        if cost + bound >= self.cutoff {
            return;
        }
        let mut options: Vec<(u64, usize)> = t_iter(candidates)
            .map(|t| (search.cost(&t_andnot(&search.up[t], &x)), t))
            .collect();
        options.sort_unstable();
        let mut kept = kept;
        for (extra, t) in options {
            if t_get(&kept, t) {
                continue;
            }
            self.go(t_or(&x, &search.up[t]), kept, cost + extra);
            kept = t_or(&kept, &search.down[t]);
        }
    }
}

/// The heaviest admissible configuration compared against `W`.
pub fn check_ineq7(s: usize, mode: NMode) -> Result<CaseReport> {
    Ineq7Search::new(s, mode)?.run()
}

/// Smallest `s ≥ s_floor` such that the check passes for every `s'` in `s..=s_max`,
/// found by sweeping down from `s_max`. `None` if it fails at `s_max`.
pub fn min_verified_s(
    s_floor: usize,
    s_max: usize,
    mode_of: impl Fn(usize) -> NMode,
) -> Result<Option<usize>> {
    let mut lowest = None;
    for s in (s_floor.max(4)..=s_max).rev() {
        if !check_ineq7(s, mode_of(s))?.verified {
            break;
        }
        lowest = Some(s);
    }
    Ok(lowest)
}
