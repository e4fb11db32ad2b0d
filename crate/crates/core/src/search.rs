//! Exact values of `m(n, s)` and `m_ONE(n, s)` for small `n`.
//!
//! Two engines:
//!
//! * [`m_bruteforce`] enumerates every subfamily of `C([n], 3)`; only for
//!   `C(n, 3) ≤ 24`.
//! * [`ShiftedSearch`] enumerates stable families (downsets of `≺`) with a
//!   depth-first include/exclude over the triples in lexicographic order,
//!   which is a linear extension of `≺`. Excluding a triple kills its whole
//!   upset. A triple is only includable while `ν ≤ s` survives, and the
//!   search is cut when the included count plus the live undecided triples
//!   cannot beat the incumbent, which starts at the best construction.
//!
//! A stable family with a `t`-matching has one inside `[3t]`: take a
//! matching of least element sum and move any vertex beyond `3t` down to
//! an uncovered vertex of `[3t]`. So every matching test below only looks
//! at included triples inside `[3s+3]`, and a triple outside that window
//! can never raise `ν` above `s` when added to a stable family.

use alloc::format;
use alloc::vec::Vec;

use crate::bits::IndexSet;
use crate::error::{Error, Result};
use crate::extremal::{build_a, build_b};
use crate::hypergraph::{all_triples, Triple, TripleSystem};
use crate::matching::{
    has_disjoint_masks, has_matching_avoiding, max_disjoint_masks, nu, MixedFamily,
};
use crate::shifting::triple_precedes;

/// Largest `C(n, 3)` the brute-force enumeration accepts.
pub const BRUTE_FORCE_MAX_TRIPLES: usize = 24;
/// Default largest `n` for the shifted search.
pub const DEFAULT_MAX_N: usize = 15;
/// Default node budget for one shifted search.
pub const DEFAULT_MAX_NODES: u64 = 5_000_000_000;
/// Number of include/exclude decisions fixed to form independent subproblems.
pub const SPLIT_DEPTH: usize = 6;

/// `ν(F(1̄)) = ν(F)`: some largest matching leaves vertex 1 uncovered.
pub fn has_one(f: &TripleSystem) -> bool {
    if f.n() == 0 {
        return true;
    }
    let family = MixedFamily::from(f);
    let without_one = MixedFamily::from(&f.residual(1).expect("vertex 1 exists"));
    nu(&without_one) == nu(&family)
}

fn require_nu(f: &TripleSystem, s: usize) -> Result<MixedFamily> {
    let family = MixedFamily::from(f);
    let actual = nu(&family);
    if actual != s {
        return Err(Error::MatchingNumber {
            expected: s,
            actual,
        });
    }
    Ok(family)
}

/// Masks of `f`'s edges in lexicographic order (`n ≤ 64`).
fn edge_masks(f: &TripleSystem) -> Vec<u64> {
    f.edges().map(Triple::mask64).collect()
}

/// Whether `f ∪ {e}` has an `(s+1)`-matching, given `ν(f) = s` and `e ∉ f`;
/// such a matching must use `e`, so it is `e` plus an `s`-matching avoiding it.
fn raises_nu(masks: Option<&[u64]>, family: &MixedFamily, e: &Triple, s: usize) -> bool {
    match masks {
        Some(masks) => has_disjoint_masks(masks, s, e.mask64(), 3),
        None => has_matching_avoiding(family, &e.elements(), s).expect("edge lies inside [n]"),
    }
}

/// Every non-edge raises `ν` when added. Requires `ν(f) = s`.
pub fn is_maximal(f: &TripleSystem, s: usize) -> Result<bool> {
    let family = require_nu(f, s)?;
    let masks = (f.n() <= 64).then(|| edge_masks(f));
    Ok(all_triples(f.n())
        .filter(|e| !f.contains(e))
        .all(|e| raises_nu(masks.as_deref(), &family, &e, s)))
}

/// Greedily adds non-edges in lexicographic order while `ν` stays `s`.
/// The result contains `f`, has `ν = s` and is maximal.
pub fn make_maximal(f: &TripleSystem, s: usize) -> Result<TripleSystem> {
    require_nu(f, s)?;
    let mut out = f.clone();
    for e in all_triples(f.n()) {
        if out.contains(&e) {
            continue;
        }
        let family = MixedFamily::from(&out);
        let masks = (out.n() <= 64).then(|| edge_masks(&out));
        if !raises_nu(masks.as_deref(), &family, &e, s) {
            out.insert(e)?;
        }
    }
    Ok(out)
}

/// Which engine produced a [`SearchResult`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SearchMode {
    Brute,
    Shifted,
    ShiftedOne,
}

impl SearchMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            SearchMode::Brute => "brute",
            SearchMode::Shifted => "shifted",
            SearchMode::ShiftedOne => "shifted-ONE",
        }
    }
}

/// An exact maximum together with a family attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub n: usize,
    pub s: usize,
    pub m: usize,
    pub witness: TripleSystem,
    pub mode: SearchMode,
    pub nodes_explored: u64,
}

/// `m(n, s)` for every `s` by enumerating all `2^C(n,3)` families.
///
/// Entry `s` is the largest size with `ν = s` and a witness attaining it
/// (the first such subset in binary counting order).
pub fn m_bruteforce(n: usize) -> Result<Vec<(usize, TripleSystem)>> {
    let triples: Vec<Triple> = all_triples(n).collect();
    if triples.len() > BRUTE_FORCE_MAX_TRIPLES {
        return Err(Error::BudgetExceeded {
            budget: "brute-force triple count",
            limit: BRUTE_FORCE_MAX_TRIPLES as u64,
        });
    }
    let masks: Vec<u64> = triples.iter().map(Triple::mask64).collect();
    let mut best: Vec<Option<(usize, u32)>> = alloc::vec![None; n / 3 + 1];
    let mut chosen = Vec::with_capacity(triples.len());
    for subset in 0u32..(1u32 << triples.len()) {
        chosen.clear();
        chosen.extend(
            (0..triples.len())
                .filter(|&i| subset >> i & 1 == 1)
                .map(|i| masks[i]),
        );
        let matching = max_disjoint_masks(&chosen, 3);
        let size = chosen.len();
        let slot = &mut best[matching];
        if slot.is_none_or(|(m, _)| size > m) {
            *slot = Some((size, subset));
        }
    }
    best.into_iter()
        .map(|entry| {
            let (m, subset) = entry.expect("every s ≤ n/3 is realised by disjoint triples");
            let edges = (0..triples.len())
                .filter(|&i| subset >> i & 1 == 1)
                .map(|i| triples[i]);
            Ok((m, TripleSystem::new(n, edges)?))
        })
        .collect()
}

/// `m(n, s)` from [`m_bruteforce`] as a [`SearchResult`].
pub fn m_brute(n: usize, s: usize) -> Result<SearchResult> {
    let table = m_bruteforce(n)?;
    let nodes = 1u64 << all_triples(n).count();
    let (m, witness) = table
        .into_iter()
        .nth(s)
        .ok_or_else(|| Error::InvalidParameter(format!("no family on {n} vertices has ν = {s}")))?;
    Ok(SearchResult {
        n,
        s,
        m,
        witness,
        mode: SearchMode::Brute,
        nodes_explored: nodes,
    })
}

/// Limits on the shifted search. Exceeding one is a refusal, never a truncated answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_n: usize,
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_n: DEFAULT_MAX_N,
            max_nodes: DEFAULT_MAX_NODES,
        }
    }
}

/// A node of the downset enumeration: decisions fixed for all triples before `next`.
#[derive(Clone, Debug)]
pub struct Subproblem {
    next: usize,
    included: IndexSet,
    dead: IndexSet,
    count: usize,
    core_masks: Vec<u64>,
}

/// Outcome of one subproblem.
#[derive(Clone, Debug)]
pub struct SubResult {
    best: Option<(usize, IndexSet)>,
    pub nodes: u64,
    exhausted: bool,
}

impl SubResult {
    pub fn best_size(&self) -> Option<usize> {
        self.best.as_ref().map(|(m, _)| *m)
    }
}

/// Enumeration of stable families with `ν = s` on `[n]` (optionally with ONE).
pub struct ShiftedSearch {
    n: usize,
    s: usize,
    one_only: bool,
    budget: SearchBudget,
    triples: Vec<Triple>,
    masks: Vec<u64>,
    in_core: Vec<bool>,
    upsets: Vec<IndexSet>,
    initial: usize,
    initial_witness: TripleSystem,
}

struct Walk<'a> {
    search: &'a ShiftedSearch,
    incumbent: usize,
    best: Option<(usize, IndexSet)>,
    nodes: u64,
    exhausted: bool,
    split_at: Option<usize>,
    frontier: Vec<Subproblem>,
}

impl ShiftedSearch {
    pub fn new(n: usize, s: usize, one_only: bool, budget: SearchBudget) -> Result<ShiftedSearch> {
        if n > budget.max_n || n > 64 {
            return Err(Error::BudgetExceeded {
                budget: "shifted-search vertex count",
                limit: budget.max_n.min(64) as u64,
            });
        }
        if 3 * s > n {
            return Err(Error::InvalidParameter(format!(
                "no family on {n} vertices has ν = {s}"
            )));
        }
        let (initial, initial_witness) = best_construction(n, s, one_only)?.ok_or_else(|| {
            Error::InvalidParameter(format!(
                "no stable family on {n} vertices has ν = {s} and ONE"
            ))
        })?;
        let triples: Vec<Triple> = all_triples(n).collect();
        let masks = triples.iter().map(Triple::mask64).collect();
        let core = (3 * s + 3) as u16;
        let in_core = triples.iter().map(|t| t.largest() <= core).collect();
        let upsets = triples
            .iter()
            .map(|a| {
                let mut up = IndexSet::new(triples.len());
                for (j, b) in triples.iter().enumerate() {
                    if triple_precedes(a, b) {
                        up.insert(j);
                    }
                }
                up
            })
            .collect();
        Ok(ShiftedSearch {
            n,
            s,
            one_only,
            budget,
            triples,
            masks,
            in_core,
            upsets,
            initial,
            initial_witness,
        })
    }

    /// Size of the construction the incumbent starts from.
    pub fn initial(&self) -> usize {
        self.initial
    }

    fn mode(&self) -> SearchMode {
        if self.one_only {
            SearchMode::ShiftedOne
        } else {
            SearchMode::Shifted
        }
    }

    /// The open nodes after the first [`SPLIT_DEPTH`] branching decisions,
    /// in depth-first order, plus the nodes spent reaching them.
    pub fn split(&self) -> Result<(Vec<Subproblem>, SubResult)> {
        let root = Subproblem {
            next: 0,
            included: IndexSet::new(self.triples.len()),
            dead: IndexSet::new(self.triples.len()),
            count: 0,
            core_masks: Vec::new(),
        };
        let mut walk = Walk::new(self, Some(SPLIT_DEPTH));
        walk.go(root, 0);
        let result = walk.result();
        if result.exhausted {
            return Err(self.budget_error());
        }
        Ok((walk.frontier, result))
    }

    /// Searches below `sub` for families larger than the initial construction.
    pub fn solve(&self, sub: Subproblem) -> SubResult {
        let mut walk = Walk::new(self, None);
        walk.go(sub, 0);
        walk.result()
    }

    fn budget_error(&self) -> Error {
        Error::BudgetExceeded {
            budget: "shifted-search node",
            limit: self.budget.max_nodes,
        }
    }

    /// Combines results of [`split`](Self::split) and [`solve`](Self::solve),
    /// given in frontier order.
    pub fn finish(&self, parts: impl IntoIterator<Item = SubResult>) -> Result<SearchResult> {
        let mut nodes = 0u64;
        let mut best: Option<(usize, IndexSet)> = None;
        for part in parts {
            nodes = nodes.saturating_add(part.nodes);
            if part.exhausted {
                return Err(self.budget_error());
            }
            if let Some((m, set)) = part.best {
                if best.as_ref().is_none_or(|(b, _)| m > *b) {
                    best = Some((m, set));
                }
            }
        }
        if nodes > self.budget.max_nodes {
            return Err(self.budget_error());
        }
        let (m, witness) = match best {
            Some((m, set)) => (m, self.family_of(&set)),
            None => (self.initial, self.initial_witness.clone()),
        };
        Ok(SearchResult {
            n: self.n,
            s: self.s,
            m,
            witness,
            mode: self.mode(),
            nodes_explored: nodes,
        })
    }

    /// Sequential run; identical output to any parallel schedule of the subproblems.
    pub fn run(&self) -> Result<SearchResult> {
        let (frontier, head) = self.split()?;
        let parts = core::iter::once(head).chain(frontier.into_iter().map(|sub| self.solve(sub)));
        self.finish(parts)
    }

    fn family_of(&self, set: &IndexSet) -> TripleSystem {
        TripleSystem::new(self.n, set.iter().map(|i| self.triples[i]))
            .expect("search triples lie in [n]")
    }
}

impl<'a> Walk<'a> {
    fn new(search: &'a ShiftedSearch, split_at: Option<usize>) -> Self {
        Walk {
            search,
            incumbent: search.initial,
            best: None,
            nodes: 0,
            exhausted: false,
            split_at,
            frontier: Vec::new(),
        }
    }

    fn result(&mut self) -> SubResult {
        SubResult {
            best: self.best.take(),
            nodes: self.nodes,
            exhausted: self.exhausted,
        }
    }

    fn go(&mut self, mut node: Subproblem, depth: usize) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.search.budget.max_nodes {
            self.exhausted = true;
            return;
        }
        let len = self.search.triples.len();
        while node.next < len && node.dead.contains(node.next) {
            node.next += 1;
        }
        // everything from `next` on is undecided
        let live = node.dead.count_absent_from(node.next, len);
        if node.count + live <= self.incumbent {
            return;
        }
        let s = self.search.s;
        if node.next == len {
            let enough = has_disjoint_masks(&node.core_masks, s, 0, 3);
            let one = !self.search.one_only || has_disjoint_masks(&node.core_masks, s, 1, 3);
            if enough && one {
                self.incumbent = node.count;
                self.best = Some((node.count, node.included));
            }
            return;
        }
        if self.split_at == Some(depth) {
            self.frontier.push(node);
            return;
        }
        let i = node.next;
        let mask = self.search.masks[i];
        let includable =
            !self.search.in_core[i] || !has_disjoint_masks(&node.core_masks, s, mask, 3);
        let mut excluded = node.clone();
        excluded.next = i + 1;
        excluded.dead.union_with(&self.search.upsets[i]);
        if includable {
            let mut included = node;
            included.next = i + 1;
            included.included.insert(i);
            included.count += 1;
            if self.search.in_core[i] {
                included.core_masks.push(mask);
            }
            self.go(included, depth + 1);
        }
        self.go(excluded, depth + 1);
    }
}

/// The larger valid construction among `𝒜(n, s)` (or `K³ₙ` when `3s ≤ n < 3s+2`)
/// and `ℬ(n, s)`, restricted to families with ONE when asked.
fn best_construction(n: usize, s: usize, one_only: bool) -> Result<Option<(usize, TripleSystem)>> {
    let mut candidates = Vec::new();
    if n >= 3 * s + 2 {
        candidates.push(build_a(n, s)?);
    } else if n >= 3 * s {
        candidates.push(TripleSystem::complete(n)?);
    }
    if n >= s {
        candidates.push(build_b(n, s)?);
    }
    Ok(candidates
        .into_iter()
        .filter(|f| nu(&MixedFamily::from(f)) == s && (!one_only || has_one(f)))
        .map(|f| (f.len(), f))
        .max_by_key(|(m, _)| *m))
}

/// `m(n, s)` over stable families, or `m_ONE(n, s)` when `one_only` is set.
pub fn m_shifted(n: usize, s: usize, one_only: bool) -> Result<SearchResult> {
    m_shifted_with(n, s, one_only, SearchBudget::default())
}

pub fn m_shifted_with(
    n: usize,
    s: usize,
    one_only: bool,
    budget: SearchBudget,
) -> Result<SearchResult> {
    ShiftedSearch::new(n, s, one_only, budget)?.run()
}
