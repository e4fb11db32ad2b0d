//! Closed-form extremal quantities for triple systems with matching
//! number `s`, the two extremal constructions, and the threshold `n₁(s)`.
//!
//! * `a(s) = C(3s+2, 3)`: the clique on `3s+2` vertices.
//! * `b(n, s) = C(n, 3) - C(n-s, 3)`: all triples meeting `[s]`.
//! * `M(n, s) = max(a(s), b(n, s))`.
//! * `n₁(s) = min { n : a(s) ≤ b(n, s) }`.
//!
//! Public sizes are arbitrary precision. The sweeps behind the numeric
//! checks use `u128`/`i128`, which is exact for every `n` below `10¹²`.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::{all_triples, Triple, TripleSystem, Vertex};

/// `C(n, k)` for small `k`, arbitrary precision.
pub fn binom(n: u64, k: u32) -> BigUint {
    if u64::from(k) > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..u64::from(k) {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k)` for `k ≤ 3` in `i128`; zero when `n < k` (including negative `n`).
#[inline]
pub(crate) fn binom_small(n: i128, k: u32) -> i128 {
    if n < i128::from(k) {
        return 0;
    }
    match k {
        0 => 1,
        1 => n,
        2 => n * (n - 1) / 2,
        3 => n * (n - 1) * (n - 2) / 6,
        _ => unreachable!("only k ≤ 3 is needed"),
    }
}

#[inline]
fn a_small(s: i128) -> i128 {
    binom_small(3 * s + 2, 3)
}

#[inline]
fn b_small(n: i128, s: i128) -> i128 {
    binom_small(n, 3) - binom_small(n - s, 3)
}

/// `a(s) = C(3s+2, 3)`.
pub fn a_of(s: u64) -> BigUint {
    binom(3 * s + 2, 3)
}

/// `b(n, s) = C(n, 3) - C(n-s, 3)`.
pub fn b_of(n: u64, s: u64) -> Result<BigUint> {
    if n < s {
        return Err(Error::InvalidParameter(format!(
            "b(n, s) needs n ≥ s, got n = {n}, s = {s}"
        )));
    }
    Ok(binom(n, 3) - binom(n - s, 3))
}

/// `M(n, s) = max(a(s), b(n, s))`.
pub fn m_of(n: u64, s: u64) -> Result<BigUint> {
    let b = b_of(n, s)?;
    Ok(a_of(s).max(b))
}

/// The quantities attached to a pair `(n, s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalRecord {
    pub s: u64,
    pub n: u64,
    pub a: BigUint,
    pub b: BigUint,
    pub m: BigUint,
    pub n1: u64,
}

impl ExtremalRecord {
    pub fn new(n: u64, s: u64) -> Result<ExtremalRecord> {
        if s == 0 {
            return Err(Error::InvalidParameter("n₁(s) needs s ≥ 1".into()));
        }
        let a = a_of(s);
        let b = b_of(n, s)?;
        let m = a.clone().max(b.clone());
        Ok(ExtremalRecord {
            s,
            n,
            a,
            b,
            m,
            n1: n1_exact(s)?,
        })
    }
}

fn check_s(s: u64) -> Result<()> {
    if s == 0 {
        return Err(Error::InvalidParameter("n₁(s) needs s ≥ 1".into()));
    }
    if s > 10_000_000_000 {
        return Err(Error::InvalidParameter(format!(
            "s = {s} is beyond the exact integer range"
        )));
    }
    Ok(())
}

/// `n₁(s)` by monotone search upward from `3s+2`, using only integer comparisons.
pub fn n1_exact(s: u64) -> Result<u64> {
    check_s(s)?;
    let s = i128::from(s);
    let a = a_small(s);
    let mut n = 3 * s + 2;
    while b_small(n, s) < a {
        n += 1;
    }
    Ok(n as u64)
}

/// `n₁(s) = 1 + ⌈s/2 + √g(s)/6⌉` with `g(s) = 321s² + 324s + 84`.
///
/// The ceiling is the least `k` with `6k - 3s ≥ √g`, decided by squaring,
/// so the surd is never approximated.
pub fn n1_formula(s: u64) -> Result<u64> {
    check_s(s)?;
    let s = u128::from(s);
    let g = 321 * s * s + 324 * s + 84;
    let root = isqrt(g);
    let mut k = (3 * s + root) / 6;
    while !(6 * k >= 3 * s && (6 * k - 3 * s) * (6 * k - 3 * s) >= g) {
        k += 1;
    }
    Ok(1 + k as u64)
}

/// Floor of the square root.
pub(crate) fn isqrt(x: u128) -> u128 {
    if x < 2 {
        return x;
    }
    // Newton from above; the first estimate is at least the root.
    let mut r = 1u128 << (128 - x.leading_zeros()).div_ceil(2);
    loop {
        let next = (r + x / r) / 2;
        if next >= r {
            return r;
        }
        r = next;
    }
}

/// Exact `n₁(s)` for `s = 1..=s_max`, each found by monotone search.
///
/// Consecutive searches start from the previous value after confirming that
/// the step below it still fails, so every reported value is a verified
/// minimum without assuming monotonicity of `n₁`.
pub fn n1_sweep(s_max: u64) -> Result<Vec<u64>> {
    check_s(s_max)?;
    let mut out = Vec::with_capacity(s_max as usize);
    let mut prev: i128 = 0;
    for s in 1..=i128::from(s_max) {
        let a = a_small(s);
        let mut n = (3 * s + 2).max(prev);
        if n > 3 * s + 2 && b_small(n - 1, s) >= a {
            n = 3 * s + 2;
        }
        while b_small(n, s) < a {
            n += 1;
        }
        out.push(n as u64);
        prev = n;
    }
    Ok(out)
}

/// The three estimates on `n₁(s)`: `n₁(s) ≤ 3.5s + 3`, `n₁(s) ≥ 3.4s + 1`,
/// and `n₁(s) - n₁(s-1) ≥ 2` (the last only for `s ≥ 2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fact2 {
    pub upper: bool,
    pub lower: bool,
    pub gap: Option<bool>,
}

impl Fact2 {
    pub fn all(&self) -> bool {
        self.upper && self.lower && self.gap.unwrap_or(true)
    }
}

/// Evaluates the three estimates from known values `n₁(s)` and `n₁(s-1)`.
pub fn fact2_from(s: u64, n1: u64, n1_prev: Option<u64>) -> Fact2 {
    let (s, n1) = (u128::from(s), u128::from(n1));
    Fact2 {
        // n₁ ≤ 7s/2 + 3
        upper: 2 * n1 <= 7 * s + 6,
        // n₁ ≥ 17s/5 + 1
        lower: 5 * n1 >= 17 * s + 5,
        gap: n1_prev.map(|p| n1 >= u128::from(p) + 2),
    }
}

pub fn fact2_check(s: u64) -> Result<Fact2> {
    let n1 = n1_exact(s)?;
    let prev = if s >= 2 { Some(n1_exact(s - 1)?) } else { None };
    Ok(fact2_from(s, n1, prev))
}

/// Which term of the graph bound attains the maximum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EgBranch {
    /// `C(2s+1, 2)`: a clique on `2s+1` vertices.
    Clique,
    /// `C(n-1, 2) - C(n-1-s, 2)`: all pairs meeting `s` fixed vertices.
    Star,
}

/// The graph bound applied to the link of the last vertex:
/// `max(C(2s+1, 2), C(n-1, 2) - C(n-1-s, 2))`. Ties report [`EgBranch::Star`].
pub fn eg_bound(n: u64, s: u64) -> Result<(BigUint, EgBranch)> {
    if n == 0 {
        return Err(Error::InvalidParameter("graph bound needs n ≥ 1".into()));
    }
    let clique = binom(2 * s + 1, 2);
    let star = binom(n - 1, 2) - binom((n - 1).saturating_sub(s), 2);
    Ok(if star >= clique {
        (star, EgBranch::Star)
    } else {
        (clique, EgBranch::Clique)
    })
}

/// `C(n-1,3) - C(n-1-s,3) + C(n-1,2) - C(n-1-s,2) = C(n,3) - C(n-s,3)`.
pub fn fact1_identity_check(n: u64, s: u64) -> Result<bool> {
    if n < s + 1 {
        return Err(Error::InvalidParameter(format!(
            "needs n ≥ s + 1, got n = {n}, s = {s}"
        )));
    }
    let lhs = binom(n - 1, 3) - binom(n - 1 - s, 3) + binom(n - 1, 2) - binom(n - 1 - s, 2);
    Ok(lhs == b_of(n, s)?)
}

/// Largest `q` for which some `n ≥ ⌈17s/5⌉` satisfies `n - q ≤ 4(s - q) + 3`.
///
/// Solves `⌈17s/5⌉ ≤ 4s - 3q + 3` for `q`; `None` if no `q ≥ 0` qualifies.
pub fn q0_bound(s: u64) -> Option<u64> {
    let s = i128::from(s);
    let n_min = (17 * s).div_euclid(5) + i128::from((17 * s).rem_euclid(5) != 0);
    let slack = 4 * s + 3 - n_min;
    (slack >= 0).then_some((slack / 3) as u64)
}

/// For every `s ≤ s_max`, every `q > s/5 + 1` and every `n ≥ ⌈17s/5⌉`,
/// checks `n - q > 4(s - q) + 3`, so that `n - q ≤ 4(s - q) + 3` forces
/// `q ≤ s/5 + 1`.
///
/// Only `n = ⌈17s/5⌉` is evaluated: the inequality only gets easier as
/// `n` grows. All `q` up to `s` are checked.
pub fn fact4_q0_check(s_max: u64) -> bool {
    (1..=i128::from(s_max)).all(|s| {
        let n = (17 * s + 4) / 5;
        // q > s/5 + 1  ⇔  5q > s + 5
        let q_first = (s + 5) / 5 + 1;
        (q_first..=s).all(|q| n - q > 4 * (s - q) + 3)
    })
}

/// `𝒜(n, s)`: all triples inside `[3s+2]`, with the remaining `n - 3s - 2`
/// vertices isolated.
pub fn build_a(n: usize, s: usize) -> Result<TripleSystem> {
    let core = 3 * s + 2;
    if n < core {
        return Err(Error::InvalidParameter(format!(
            "𝒜(n, s) needs n ≥ 3s + 2, got n = {n}, s = {s}"
        )));
    }
    TripleSystem::new(n, all_triples(core))
}

/// `ℬ(n, s)`: all triples of `[n]` meeting `[s]`.
pub fn build_b(n: usize, s: usize) -> Result<TripleSystem> {
    if n < s {
        return Err(Error::InvalidParameter(format!(
            "ℬ(n, s) needs n ≥ s, got n = {n}, s = {s}"
        )));
    }
    let s = s as Vertex;
    TripleSystem::new(n, all_triples(n).filter(|t: &Triple| t.elements()[0] <= s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::nu_of;
    use crate::shifting::is_stable;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn closed_forms() {
        assert_eq!(a_of(1), big(10));
        assert_eq!(a_of(2), big(56));
        assert_eq!(b_of(6, 1).unwrap(), big(10));
        assert_eq!(b_of(9, 2).unwrap(), big(49));
        assert_eq!(m_of(9, 2).unwrap(), big(56));
        assert!(b_of(2, 3).is_err());
    }

    #[test]
    fn n1_examples() {
        assert_eq!(n1_exact(1).unwrap(), 6);
        assert_eq!(n1_exact(2).unwrap(), 10);
        assert_eq!(n1_exact(25).unwrap(), 90);
        assert_eq!(b_of(90, 25).unwrap(), big(73_800));
        assert_eq!(a_of(25), big(73_150));
        assert_eq!(b_of(89, 25).unwrap(), big(71_900));
        assert_eq!(n1_formula(1).unwrap(), 6);
        assert_eq!(n1_formula(2).unwrap(), 10);
        assert!(n1_exact(0).is_err());
    }

    #[test]
    fn formula_boundary_with_perfect_square() {
        // g(1) = 729 = 27², so the ceiling is attained exactly
        assert_eq!(isqrt(729), 27);
        assert_eq!(isqrt(728), 26);
        assert_eq!(isqrt(u128::from(u64::MAX)), u128::from(u32::MAX));
    }

    #[test]
    fn formula_matches_search_on_prefix() {
        let sweep = n1_sweep(500).unwrap();
        for (i, &n1) in sweep.iter().enumerate() {
            let s = i as u64 + 1;
            assert_eq!(n1, n1_exact(s).unwrap());
            assert_eq!(n1, n1_formula(s).unwrap(), "s = {s}");
        }
    }

    #[test]
    fn m_switches_at_n1() {
        for s in 1..=8u64 {
            let n1 = n1_exact(s).unwrap();
            for n in 3 * s + 2..n1 + 10 {
                let m = m_of(n, s).unwrap();
                if n < n1 {
                    assert_eq!(m, a_of(s));
                } else {
                    assert_eq!(m, b_of(n, s).unwrap());
                }
                assert!(b_of(n + 1, s).unwrap() > b_of(n, s).unwrap());
            }
        }
    }

    #[test]
    fn fact2_examples() {
        let f = fact2_check(25).unwrap();
        assert_eq!(
            f,
            Fact2 {
                upper: true,
                lower: true,
                gap: Some(true)
            }
        );
        assert_eq!(
            fact2_check(1).unwrap(),
            Fact2 {
                upper: true,
                lower: true,
                gap: None
            }
        );
    }

    #[test]
    fn graph_bound_examples() {
        assert_eq!(eg_bound(9, 2).unwrap(), (big(13), EgBranch::Star));
        assert_eq!(eg_bound(7, 1).unwrap(), (big(5), EgBranch::Star));
        assert_eq!(eg_bound(3, 1).unwrap(), (big(3), EgBranch::Clique));
        assert_eq!(eg_bound(1, 0).unwrap(), (big(0), EgBranch::Star));
    }

    #[test]
    fn fact1_examples() {
        assert!(fact1_identity_check(9, 2).unwrap());
        assert!(fact1_identity_check(6, 1).unwrap());
        assert!(fact1_identity_check(2, 2).is_err());
    }

    #[test]
    fn q0_examples() {
        // s = 25: any q ≥ 7 leaves no admissible n
        assert_eq!(q0_bound(25), Some(6));
        assert_eq!(q0_bound(5), Some(2));
        assert!(fact4_q0_check(200));
    }

    #[test]
    fn constructions() {
        let a = build_a(12, 2).unwrap();
        assert_eq!(a.len(), 56);
        assert_eq!(nu_of(&a), 2);
        let b = build_b(9, 2).unwrap();
        assert_eq!(b.len(), 49);
        assert_eq!(nu_of(&b), 2);
        assert!(build_b(7, 0).unwrap().is_empty());
        assert!(build_a(7, 2).is_err());
        for (n, s) in [(9usize, 2usize), (10, 3), (12, 3), (8, 1)] {
            let b = build_b(n, s).unwrap();
            assert_eq!(big(b.len() as u64), b_of(n as u64, s as u64).unwrap());
            assert_eq!(nu_of(&b), s);
            assert!(is_stable(&b));
        }
        for (n, s) in [(11usize, 3usize), (12, 3), (8, 2)] {
            let a = build_a(n, s).unwrap();
            assert_eq!(big(a.len() as u64), a_of(s as u64));
            assert_eq!(nu_of(&a), s);
            assert!(is_stable(&a));
        }
    }
}
