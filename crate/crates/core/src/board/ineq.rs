//! Scalar inequalities used by the hand proof, checked in exact arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::extremal::n1_exact;

fn q(num: i128, den: i128) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `x (s/2+1)/(s−2) + 9s/((s−1)(s−2)) ≤ y`. False for `s < 3`.
pub fn check_xyz(x: u64, y: u64, s: u64) -> bool {
    if s < 3 {
        return false;
    }
    let (x, y, s) = (i128::from(x), i128::from(y), i128::from(s));
    q(x * (s + 2), 2 * (s - 2)) + q(9 * s, (s - 1) * (s - 2)) <= q(y, 1)
}

/// `3s/((s−1)(s−2)) ≤ 9/(s−2)`. False for `s < 3`.
pub fn check_case1_ineq(s: u64) -> bool {
    if s < 3 {
        return false;
    }
    let s = i128::from(s);
    q(3 * s, (s - 1) * (s - 2)) <= q(9, s - 2)
}

/// `12 (s/2+1)/(s−2) + 9s/((s−1)(s−2)) − 12/(s−2) ≤ 7`. False for `s < 3`.
pub fn check_final_ineq(s: u64) -> bool {
    if s < 3 {
        return false;
    }
    let s = i128::from(s);
    q(12 * (s + 2), 2 * (s - 2)) + q(9 * s, (s - 1) * (s - 2)) - q(12, s - 2) <= q(7, 1)
}

/// `(n−3s−3)/C(s−1,2) ≤ s/((s−1)(s−2))` at a given `n`. False for `s < 3`.
pub fn check_eq8_bound_at(n: u64, s: u64) -> bool {
    if s < 3 {
        return false;
    }
    let (n, s) = (i128::from(n), i128::from(s));
    q(2 * (n - 3 * s - 3), (s - 1) * (s - 2)) <= q(s, (s - 1) * (s - 2))
}

/// [`check_eq8_bound_at`] with `n = n₁(s)`.
pub fn check_eq8_bound(s: u64) -> bool {
    match n1_exact(s) {
        Ok(n) => check_eq8_bound_at(n, s),
        Err(_) => false,
    }
}

/// Least `s ≥ 3` from which [`check_final_ineq`] holds for every `s' ≤ s_max`.
pub fn min_final_ineq_s(s_max: u64) -> Option<u64> {
    let mut lowest = None;
    for s in (3..=s_max).rev() {
        if !check_final_ineq(s) {
            break;
        }
        lowest = Some(s);
    }
    lowest
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xyz_examples() {
        assert!(check_xyz(12, 9, 14));
        assert!(!check_xyz(12, 9, 13));
        assert!(check_xyz(5, 4, 25));
        // 10·(27/2)/23 + 225/552 = 1155/184 > 6: this pair of bounds only closes from s = 32 on
        assert!(!check_xyz(10, 6, 25));
        assert!(!check_xyz(10, 6, 31));
        assert!(check_xyz(10, 6, 32));
        assert!(check_xyz(11, 7, 25));
        // x = 12, y = 7 closes from s = 36 on
        assert!(!check_xyz(12, 7, 35));
        assert!(check_xyz(12, 7, 36));
        assert!(!check_xyz(0, 0, 2));
    }

    #[test]
    fn case1_examples() {
        assert!(check_case1_ineq(3));
        assert!(!check_case1_ineq(2));
        assert!((3..=10_000).all(check_case1_ineq));
    }

    #[test]
    fn final_examples() {
        assert!(check_final_ineq(25));
        assert!(!check_final_ineq(20));
        let lowest = min_final_ineq_s(1000).unwrap();
        assert!(lowest <= 25);
        assert!(!check_final_ineq(lowest - 1));
    }

    #[test]
    fn eq8_examples() {
        assert!(check_eq8_bound_at(90, 25));
        assert!(check_eq8_bound(25));
        assert!((3..=10_000).all(check_eq8_bound));
        // at n = 3.5s + 4 the bound fails
        assert!(!check_eq8_bound_at(92, 24));
    }
}
