//! The 11-vertex board and the exhaustive check of the per-board inequality.
//!
//! A board is `{1, d} ∪ F₁ ∪ F₂ ∪ F₃` with `Fᵢ = {aᵢ, bᵢ, cᵢ}`. A
//! configuration is a family of pairs and triples on it, standing for the
//! traces `F₀^τ` of a maximal stable family with property ONE. The order
//! used is deliberately weak: `1` is below everything, `aᵢ < bᵢ < cᵢ`
//! inside a column, and nothing else is comparable. Everything the order
//! does not see enters through the forced triples `Fᵢ`, `{1, d, aᵢ}` and
//! `{1, d, bᵢ}`. Admissible configurations therefore over-approximate the
//! real trace families, so a bound on all of them is a sound bound.

mod check;
mod ineq;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::extremal::binom;
use crate::weights::{ratio, ExactRational};

pub use check::{
    check_ineq7, min_verified_s, CaseReport, Ineq7Search, PairDownset, PairOutcome,
    DEFAULT_BOARD_BUDGET,
};
pub use ineq::{
    check_case1_ineq, check_eq8_bound, check_eq8_bound_at, check_final_ineq, check_xyz,
    min_final_ineq_s,
};

/// Number of board vertices.
pub const BOARD_SIZE: usize = 11;

/// A board vertex: `1`, `d`, or `aᵢ`, `bᵢ`, `cᵢ` for a column `i ∈ {1, 2, 3}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoardVertex(u8);

impl BoardVertex {
    pub const ONE: BoardVertex = BoardVertex(0);
    pub const D: BoardVertex = BoardVertex(1);

    /// `aᵢ`, `bᵢ`, `cᵢ` for `rank` 0, 1, 2 and `column` 1..=3.
    pub fn column_vertex(column: usize, rank: usize) -> Result<BoardVertex> {
        if !(1..=3).contains(&column) || rank > 2 {
            return Err(Error::InvalidParameter(format!(
                "no board vertex at column {column}, rank {rank}"
            )));
        }
        Ok(BoardVertex((2 + 3 * (column - 1) + rank) as u8))
    }

    pub fn a(column: usize) -> BoardVertex {
        Self::column_vertex(column, 0).expect("column in 1..=3")
    }

    pub fn b(column: usize) -> BoardVertex {
        Self::column_vertex(column, 1).expect("column in 1..=3")
    }

    pub fn c(column: usize) -> BoardVertex {
        Self::column_vertex(column, 2).expect("column in 1..=3")
    }

    pub fn all() -> impl Iterator<Item = BoardVertex> {
        (0..BOARD_SIZE as u8).map(BoardVertex)
    }

    pub fn index(self) -> usize {
        usize::from(self.0)
    }

    pub fn from_index(i: usize) -> Option<BoardVertex> {
        (i < BOARD_SIZE).then_some(BoardVertex(i as u8))
    }

    /// The column `1..=3`, or `None` for `1` and `d`.
    pub fn column(self) -> Option<usize> {
        (self.0 >= 2).then(|| usize::from(self.0 - 2) / 3 + 1)
    }

    /// 0 for `aᵢ`, 1 for `bᵢ`, 2 for `cᵢ`.
    pub fn rank(self) -> Option<usize> {
        (self.0 >= 2).then(|| usize::from(self.0 - 2) % 3)
    }

    /// The board order.
    pub fn le(self, other: BoardVertex) -> bool {
        self == other
            || self == Self::ONE
            || (self.column().is_some()
                && self.column() == other.column()
                && self.rank() <= other.rank())
    }

    pub fn parse(label: &str) -> Result<BoardVertex> {
        match label {
            "1" => Ok(Self::ONE),
            "d" => Ok(Self::D),
            _ => {
                let mut chars = label.chars();
                let rank = match chars.next() {
                    Some('a') => 0,
                    Some('b') => 1,
                    Some('c') => 2,
                    _ => {
                        return Err(Error::MalformedSet(format!(
                            "unknown board vertex {label:?}"
                        )))
                    }
                };
                let column: usize = chars
                    .as_str()
                    .parse()
                    .map_err(|_| Error::MalformedSet(format!("unknown board vertex {label:?}")))?;
                Self::column_vertex(column, rank)
                    .map_err(|_| Error::MalformedSet(format!("unknown board vertex {label:?}")))
            }
        }
    }
}

impl fmt::Display for BoardVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.column(), self.rank()) {
            (Some(col), Some(rank)) => write!(f, "{}{}", ['a', 'b', 'c'][rank], col),
            _ if *self == Self::ONE => f.write_str("1"),
            _ => f.write_str("d"),
        }
    }
}

impl fmt::Debug for BoardVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A pair or triple of board vertices, stored as an 11-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoardSet(u16);

impl BoardSet {
    pub fn new(vertices: &[BoardVertex]) -> Result<BoardSet> {
        let mut mask = 0u16;
        for v in vertices {
            if mask >> v.0 & 1 == 1 {
                return Err(Error::MalformedSet(format!("repeated board vertex {v}")));
            }
            mask |= 1 << v.0;
        }
        Self::from_mask(mask)
    }

    pub fn from_mask(mask: u16) -> Result<BoardSet> {
        if mask >> BOARD_SIZE != 0 || !(2..=3).contains(&mask.count_ones()) {
            return Err(Error::MalformedSet(format!(
                "board sets have 2 or 3 vertices, got mask {mask:#x}"
            )));
        }
        Ok(BoardSet(mask))
    }

    pub(crate) const fn from_mask_unchecked(mask: u16) -> BoardSet {
        BoardSet(mask)
    }

    /// Parses `{1,d,a1}`-style notation.
    pub fn parse(text: &str) -> Result<BoardSet> {
        let inner = text
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::MalformedSet(format!("expected {{…}}, got {text:?}")))?;
        let vertices = inner
            .split(',')
            .map(|v| BoardVertex::parse(v.trim()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&vertices)
    }

    pub fn mask(self) -> u16 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_pair(self) -> bool {
        self.len() == 2
    }

    pub fn contains(self, v: BoardVertex) -> bool {
        self.0 >> v.0 & 1 == 1
    }

    pub fn vertices(self) -> impl Iterator<Item = BoardVertex> {
        BoardVertex::all().filter(move |v| self.contains(*v))
    }

    pub fn is_disjoint(self, other: BoardSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Number of columns met.
    pub fn spread(self) -> usize {
        (1..=3).filter(|&c| self.0 & column_mask(c) != 0).count()
    }

    /// `A ⪯ B`: same size and a bijection `φ: A → B` with `x ≤ φ(x)`.
    pub fn dominated_by(self, other: BoardSet) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let (a, k) = self.array();
        let (b, _) = other.array();
        match k {
            2 => (a[0].le(b[0]) && a[1].le(b[1])) || (a[0].le(b[1]) && a[1].le(b[0])),
            _ => PERMUTATIONS_3
                .iter()
                .any(|p| (0..3).all(|i| a[i].le(b[p[i]]))),
        }
    }

    /// Every set dominated by `self`, itself included, possibly with repeats.
    pub fn dominated(self) -> impl Iterator<Item = BoardSet> {
        let (a, k) = self.array();
        let downs = a.map(|v| {
            BoardVertex::all()
                .filter(move |&u| u.le(v))
                .fold(0u16, |m, u| m | 1 << u.0)
        });
        let pick = move |i: usize| -> u16 {
            if i < k {
                downs[i]
            } else {
                1
            }
        };
        let bits = |m: u16| (0..BOARD_SIZE as u16).filter(move |b| m >> b & 1 == 1);
        bits(pick(0)).flat_map(move |x| {
            bits(pick(1)).flat_map(move |y| {
                bits(pick(2)).filter_map(move |z| {
                    let (x, y, z) = (1u16 << x, 1u16 << y, if k == 3 { 1u16 << z } else { 0 });
                    let m = x | y | z;
                    (m.count_ones() as usize == k).then_some(BoardSet(m))
                })
            })
        })
    }

    /// The first three vertices in index order, and the size.
    fn array(self) -> ([BoardVertex; 3], usize) {
        let mut out = [BoardVertex(0); 3];
        for (slot, v) in out.iter_mut().zip(self.vertices()) {
            *slot = v;
        }
        (out, self.len())
    }

    pub(crate) fn permute_columns(self, perm: &[usize; 3]) -> BoardSet {
        let mut mask = self.0 & 0b11;
        for (col, &to) in perm.iter().enumerate() {
            let bits = (self.0 >> (2 + 3 * col)) & 0b111;
            mask |= bits << (2 + 3 * to);
        }
        BoardSet(mask)
    }
}

pub(crate) const PERMUTATIONS_3: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

fn column_mask(c: usize) -> u16 {
    0b111 << (2 + 3 * (c - 1))
}

impl Ord for BoardSet {
    /// Size first, then lexicographic by vertex index.
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        // for equal sizes the lexicographically smaller set owns the lowest differing vertex
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                core::cmp::Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                core::cmp::Ordering::Less
            } else {
                core::cmp::Ordering::Greater
            }
        })
    }
}

impl PartialOrd for BoardSet {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BoardSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for BoardSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All pairs (`size == 2`) or triples (`size == 3`) of board vertices in [`Ord`] order.
pub fn all_board_sets(size: usize) -> impl Iterator<Item = BoardSet> {
    let mut sets: Vec<BoardSet> = (0u16..1 << BOARD_SIZE)
        .filter(move |m| m.count_ones() as usize == size)
        .map(BoardSet)
        .collect();
    sets.sort_unstable();
    sets.into_iter()
}

/// A family of board sets.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BoardConfig {
    members: BTreeSet<BoardSet>,
}

impl BoardConfig {
    pub fn new(members: impl IntoIterator<Item = BoardSet>) -> BoardConfig {
        BoardConfig {
            members: members.into_iter().collect(),
        }
    }

    pub fn members(&self) -> impl Iterator<Item = BoardSet> + '_ {
        self.members.iter().copied()
    }

    pub fn contains(&self, h: BoardSet) -> bool {
        self.members.contains(&h)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn insert(&mut self, h: BoardSet) -> bool {
        self.members.insert(h)
    }

    pub fn pairs(&self) -> impl Iterator<Item = BoardSet> + '_ {
        self.members().filter(|h| h.is_pair())
    }

    pub fn triples(&self) -> impl Iterator<Item = BoardSet> + '_ {
        self.members().filter(|h| !h.is_pair())
    }

    /// Smallest superset closed downward and under pair supersets.
    pub fn closure(&self) -> BoardConfig {
        let mut out = self.clone();
        loop {
            let mut added = Vec::new();
            for h in out.members() {
                for g in h.dominated() {
                    if !out.contains(g) {
                        added.push(g);
                    }
                }
                if h.is_pair() {
                    for v in BoardVertex::all().filter(|v| !h.contains(*v)) {
                        let g = BoardSet(h.0 | 1 << v.0);
                        if !out.contains(g) {
                            added.push(g);
                        }
                    }
                }
            }
            if added.is_empty() {
                return out;
            }
            out.members.extend(added);
        }
    }

    pub fn permute_columns(&self, perm: &[usize; 3]) -> BoardConfig {
        BoardConfig::new(self.members().map(|h| h.permute_columns(perm)))
    }
}

fn seeds() -> Vec<BoardSet> {
    let mut out = Vec::new();
    for col in 1..=3 {
        let (a, b, c) = (
            BoardVertex::a(col),
            BoardVertex::b(col),
            BoardVertex::c(col),
        );
        out.push(BoardSet::new(&[a, b, c]).expect("distinct"));
        out.push(BoardSet::new(&[BoardVertex::ONE, BoardVertex::D, a]).expect("distinct"));
        out.push(BoardSet::new(&[BoardVertex::ONE, BoardVertex::D, b]).expect("distinct"));
    }
    out
}

/// `F₁, F₂, F₃`, `{1, d, aᵢ}`, `{1, d, bᵢ}` and everything they dominate.
pub fn forced_members() -> BoardConfig {
    BoardConfig::new(seeds()).closure()
}

/// The first admissibility clause a configuration breaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    MissingForced(BoardSet),
    NotDownClosed { member: BoardSet, missing: BoardSet },
    MissingSuperset { pair: BoardSet, missing: BoardSet },
    PairWithD(BoardSet),
    FourMatching([BoardSet; 4]),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingForced(h) => write!(f, "forced member {h} is missing"),
            Violation::NotDownClosed { member, missing } => {
                write!(f, "{missing} is dominated by member {member} but missing")
            }
            Violation::MissingSuperset { pair, missing } => {
                write!(
                    f,
                    "pair {pair} is present but its superset {missing} is missing"
                )
            }
            Violation::PairWithD(h) => write!(f, "pair {h} contains d"),
            Violation::FourMatching(m) => {
                write!(f, "4-matching {} {} {} {}", m[0], m[1], m[2], m[3])
            }
        }
    }
}

/// Four pairwise disjoint members, lexicographically first.
pub fn find_four_matching(members: &[BoardSet]) -> Option<[BoardSet; 4]> {
    const FULL: usize = 1 << BOARD_SIZE;
    // fits[k][free]: some k disjoint members lie inside the vertex set `free`
    let mut fits = vec![[false; FULL]; 4];
    fits[0] = [true; FULL];
    for k in 1..4 {
        for free in 0..FULL {
            fits[k][free] = members
                .iter()
                .any(|h| usize::from(h.0) & !free == 0 && fits[k - 1][free & !usize::from(h.0)]);
        }
    }
    fn go(
        members: &[BoardSet],
        fits: &[[bool; FULL]],
        from: usize,
        used: u16,
        stack: &mut Vec<BoardSet>,
    ) -> bool {
        let left = 4 - stack.len();
        if left == 0 {
            return true;
        }
        for (i, h) in members.iter().enumerate().skip(from) {
            if h.0 & used == 0 {
                let free = (FULL - 1) & !usize::from(used | h.0);
                if !fits[left - 1][free] {
                    continue;
                }
                stack.push(*h);
                if go(members, fits, i + 1, used | h.0, stack) {
                    return true;
                }
                stack.pop();
            }
        }
        false
    }
    if !members
        .iter()
        .any(|h| fits[3][(FULL - 1) & !usize::from(h.0)])
    {
        return None;
    }
    let mut stack = Vec::new();
    go(members, &fits, 0, 0, &mut stack).then(|| [stack[0], stack[1], stack[2], stack[3]])
}

/// Checks the five admissibility clauses in order and reports the first failure.
pub fn admissibility(c: &BoardConfig) -> core::result::Result<(), Violation> {
    for h in seeds() {
        if !c.contains(h) {
            return Err(Violation::MissingForced(h));
        }
    }
    for h in c.members() {
        for g in h.dominated() {
            if !c.contains(g) {
                return Err(Violation::NotDownClosed {
                    member: h,
                    missing: g,
                });
            }
        }
    }
    for h in c.pairs() {
        for v in BoardVertex::all().filter(|v| !h.contains(*v)) {
            let g = BoardSet(h.0 | 1 << v.0);
            if !c.contains(g) {
                return Err(Violation::MissingSuperset {
                    pair: h,
                    missing: g,
                });
            }
        }
    }
    if let Some(h) = c.pairs().find(|h| h.contains(BoardVertex::D)) {
        return Err(Violation::PairWithD(h));
    }
    let members: Vec<BoardSet> = c.members().collect();
    if let Some(m) = find_four_matching(&members) {
        return Err(Violation::FourMatching(m));
    }
    Ok(())
}

pub fn is_admissible(c: &BoardConfig) -> bool {
    admissibility(c).is_ok()
}

/// Wide pairs split by the rank classes they meet, plus the within-class pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Classification {
    pub wide_triples: usize,
    pub medium_triples: usize,
    pub narrow_triples: usize,
    pub wide_pairs: usize,
    pub narrow_pairs: usize,
    /// Narrow pairs inside `{1, d} ∪ Fᵢ`, per column.
    pub narrow_pairs_per_column: [usize; 3],
    pub ab: BTreeSet<BoardSet>,
    pub ac: BTreeSet<BoardSet>,
    pub bc: BTreeSet<BoardSet>,
    /// Pairs inside `A`, `B`, `C`.
    pub aa: BTreeSet<BoardSet>,
    pub bb: BTreeSet<BoardSet>,
    pub cc: BTreeSet<BoardSet>,
}

impl Classification {
    /// `BC ∪ (C choose 2)`.
    pub fn bc_over(&self) -> BTreeSet<BoardSet> {
        self.bc.union(&self.cc).copied().collect()
    }

    /// `BC ∪ (C choose 2) ∪ (B choose 2)`.
    pub fn bc_over_under(&self) -> BTreeSet<BoardSet> {
        self.bc_over().union(&self.bb).copied().collect()
    }

    /// `AB ∪ (B choose 2)`.
    pub fn ab_over(&self) -> BTreeSet<BoardSet> {
        self.ab.union(&self.bb).copied().collect()
    }

    /// `AB ∪ (B choose 2) ∪ (A choose 2)`.
    pub fn ab_over_under(&self) -> BTreeSet<BoardSet> {
        self.ab_over().union(&self.aa).copied().collect()
    }

    /// `AC ∪ (C choose 2)`.
    pub fn ac_over(&self) -> BTreeSet<BoardSet> {
        self.ac.union(&self.cc).copied().collect()
    }

    /// `AC ∪ (C choose 2) ∪ (A choose 2)`.
    pub fn ac_over_under(&self) -> BTreeSet<BoardSet> {
        self.ac_over().union(&self.aa).copied().collect()
    }
}

/// Counts by spread and the rank-class pair sets of an admissible configuration.
pub fn classify(c: &BoardConfig) -> Result<Classification> {
    if let Err(v) = admissibility(c) {
        return Err(Error::Precondition(format!(
            "inadmissible configuration: {v}"
        )));
    }
    let mut out = Classification::default();
    for h in c.members() {
        match (h.len(), h.spread()) {
            (3, 3) => out.wide_triples += 1,
            (3, 2) => out.medium_triples += 1,
            (3, _) => out.narrow_triples += 1,
            (_, 2) => {
                out.wide_pairs += 1;
                let mut ranks: Vec<usize> = h.vertices().filter_map(BoardVertex::rank).collect();
                ranks.sort_unstable();
                let bucket = match (ranks[0], ranks[1]) {
                    (0, 0) => &mut out.aa,
                    (1, 1) => &mut out.bb,
                    (2, 2) => &mut out.cc,
                    (0, 1) => &mut out.ab,
                    (0, 2) => &mut out.ac,
                    _ => &mut out.bc,
                };
                bucket.insert(h);
            }
            _ => {
                out.narrow_pairs += 1;
                let col = h
                    .vertices()
                    .find_map(BoardVertex::column)
                    .expect("narrow pairs meet a column");
                out.narrow_pairs_per_column[col - 1] += 1;
            }
        }
    }
    Ok(out)
}

/// How `n − 3s − 2` enters the pair weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NMode {
    /// A fixed `n ≥ 3s+3`.
    Exact(usize),
    /// The bound `n − 3s − 2 ≤ s/2 + 1`, valid for every `n ≤ 3.5s + 3`.
    Bound,
}

impl NMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            NMode::Exact(_) => "exact",
            NMode::Bound => "bound",
        }
    }
}

/// Weights of board sets for given `s` and pair-weight mode.
///
/// Besides exact rationals, it hands out integer weights scaled by
/// `2(s−1)(s−2)`, which makes every weight integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightScheme {
    s: usize,
    mode: NMode,
}

impl WeightScheme {
    pub fn new(s: usize, mode: NMode) -> Result<WeightScheme> {
        if s < 4 {
            return Err(Error::InvalidParameter(format!(
                "board weights need s ≥ 4, got {s}"
            )));
        }
        if let NMode::Exact(n) = mode {
            if n < 3 * s + 3 {
                return Err(Error::InvalidParameter(format!(
                    "need n ≥ 3s+3, got n = {n}, s = {s}"
                )));
            }
        }
        if s > 1_000_000 {
            return Err(Error::InvalidParameter(format!(
                "s = {s} is too large for the scaled weights"
            )));
        }
        Ok(WeightScheme { s, mode })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn mode(&self) -> NMode {
        self.mode
    }

    /// `n − 3s − 2`, or `s/2 + 1` in bound mode.
    pub fn outside(&self) -> ExactRational {
        match self.mode {
            NMode::Exact(n) => ratio(BigUint::from(n - 3 * self.s - 2), 1u32.into()),
            NMode::Bound => ratio(BigUint::from(self.s + 2), 2u32.into()),
        }
    }

    /// `w(H)`.
    pub fn weight(&self, h: BoardSet) -> ExactRational {
        let z = h.spread();
        let den = binom((self.s - z) as u64, (3 - z) as u32);
        if h.is_pair() {
            self.outside() / ratio(den, 1u32.into())
        } else {
            ratio(1u32.into(), den)
        }
    }

    /// The common denominator `2(s−1)(s−2)`.
    pub fn scale(&self) -> u64 {
        let s = self.s as u64;
        2 * (s - 1) * (s - 2)
    }

    /// `w(H) · 2(s−1)(s−2)`, an integer.
    pub fn scaled(&self, h: BoardSet) -> u64 {
        let s = self.s as u64;
        let (wide_pair, narrow_pair) = match self.mode {
            NMode::Exact(n) => {
                let out = n as u64 - 3 * s - 2;
                (2 * (s - 1) * out, 4 * out)
            }
            NMode::Bound => ((s - 1) * (s + 2), 2 * (s + 2)),
        };
        match (h.len(), h.spread()) {
            (3, 3) => self.scale(),
            (3, 2) => 2 * (s - 1),
            (3, _) => 4,
            (_, 2) => wide_pair,
            _ => narrow_pair,
        }
    }

    pub fn unscale(&self, scaled: u64) -> ExactRational {
        ratio(BigUint::from(scaled), BigUint::from(self.scale()))
    }
}

/// `Σ w(H)` over the members.
pub fn config_weight(c: &BoardConfig, scheme: &WeightScheme) -> ExactRational {
    c.members()
        .fold(ExactRational::zero(), |acc, h| acc + scheme.weight(h))
}

/// The per-board weight of the complete family: all 165 triples.
pub fn complete_config() -> BoardConfig {
    BoardConfig::new(all_board_sets(3))
}

/// Members as labels such as `{1,d,a1}`, in board-set order.
pub fn describe_members(c: &BoardConfig) -> Vec<String> {
    c.members().map(|h| format!("{h}")).collect()
}
