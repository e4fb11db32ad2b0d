use em3_core::extremal::{
    a_of, b_of, eg_bound, fact1_identity_check, m_of, n1_exact, n1_formula, n1_sweep, EgBranch,
};
use num_bigint::BigUint;
use proptest::prelude::*;

fn c(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Least `n ≥ 3s+2` with `C(n,3) − C(n−s,3) ≥ C(3s+2,3)`, by walking up.
fn n1_walk(s: u128) -> u128 {
    let a = c(3 * s + 2, 3);
    (3 * s + 2..).find(|&n| c(n, 3) - c(n - s, 3) >= a).unwrap()
}

#[test]
fn threshold_matches_a_direct_walk() {
    let sweep = n1_sweep(2000).unwrap();
    for s in 1..=2000u64 {
        let expect = n1_walk(u128::from(s)) as u64;
        assert_eq!(sweep[s as usize - 1], expect, "s = {s}");
        assert_eq!(n1_formula(s).unwrap(), expect, "s = {s}");
    }
    assert_eq!(n1_exact(25).unwrap(), 90);
}

proptest! {
    #[test]
    fn closed_forms_match_small_binomials(s in 1u64..300, extra in 0u64..400) {
        let n = 3 * s + 2 + extra;
        let (n128, s128) = (u128::from(n), u128::from(s));
        prop_assert_eq!(a_of(s), BigUint::from(c(3 * s128 + 2, 3)));
        prop_assert_eq!(b_of(n, s).unwrap(), BigUint::from(c(n128, 3) - c(n128 - s128, 3)));
        let m = c(3 * s128 + 2, 3).max(c(n128, 3) - c(n128 - s128, 3));
        prop_assert_eq!(m_of(n, s).unwrap(), BigUint::from(m));
        prop_assert!(fact1_identity_check(n, s).unwrap());
    }

    #[test]
    fn graph_bound_takes_the_larger_term(s in 1u64..200, n in 4u64..900) {
        prop_assume!(n > s + 1);
        let (v, branch) = eg_bound(n, s).unwrap();
        let clique = c(2 * u128::from(s) + 1, 2);
        let star = c(u128::from(n) - 1, 2) - c(u128::from(n - 1 - s), 2);
        prop_assert_eq!(v, BigUint::from(clique.max(star)));
        prop_assert_eq!(branch == EgBranch::Star, star >= clique);
    }
}
