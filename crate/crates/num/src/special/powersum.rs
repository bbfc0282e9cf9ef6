//! Exact integer power sums S_{n,j} = 1^j + 2^j + ... + n^j.

use rug::ops::Pow;
use rug::Integer;

/// Exact `S_{n,j} = sum_{k=1}^n k^j`, no floating intermediates.
///
/// # Panics
/// If `n == 0` (the sum is defined for `n >= 1`).
#[must_use]
pub fn power_sum(n: u64, j: u32) -> Integer {
    assert!(n >= 1, "power_sum requires n >= 1");
    let mut s = Integer::new();
    for k in 1..=n {
        s += Integer::from(k).pow(j);
    }
    s
}

/// Incremental ladder of power sums `S_{n,0}, S_{n,1}, ..., S_{n,j_max}`.
///
/// Maintains k^j for each k and multiplies by k per step, which is linear in
/// the operand size and far cheaper than independent exponentiations when a
/// whole ladder is needed.
#[must_use]
pub fn power_sum_ladder(n: u64, j_max: u32) -> Vec<Integer> {
    assert!(n >= 1, "power_sum_ladder requires n >= 1");
    let mut powers: Vec<Integer> = (1..=n).map(Integer::from).collect();
    let mut out = Vec::with_capacity(j_max as usize + 1);
    out.push(Integer::from(n)); // j = 0: n ones.
    if j_max == 0 {
        return out;
    }
    let total = |ps: &[Integer]| ps.iter().fold(Integer::new(), |acc, p| acc + p);
    // powers currently holds k^1.
    out.push(total(&powers));
    for _ in 2..=j_max {
        for (k, p) in powers.iter_mut().enumerate() {
            *p *= k as u64 + 1;
        }
        out.push(total(&powers));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values_match_hand_sums() {
        assert_eq!(power_sum(2, 2), 5);
        assert_eq!(power_sum(3, 4), 98);
        assert_eq!(power_sum(1, 100), 1);
        assert_eq!(power_sum(10, 0), 10);
        assert_eq!(power_sum(10, 1), 55);
    }

    #[test]
    fn ladder_matches_direct_computation() {
        let n = 7;
        let ladder = power_sum_ladder(n, 40);
        for (j, s) in ladder.iter().enumerate() {
            assert_eq!(*s, power_sum(n, j as u32), "mismatch at j = {j}");
        }
    }

    #[test]
    fn sandwich_bound_holds_on_a_grid() {
        // n^j + (n-1)^(j+1)/(j+1) < S_{n,j} < n^j + n^(j+1)/(j+1),
        // checked in exact rational arithmetic as
        // (j+1) n^j + (n-1)^(j+1) < (j+1) S < (j+1) n^j + n^(j+1).
        for n in 2_u64..=12 {
            for j in 1_u32..=24 {
                let s = power_sum(n, j);
                let jp1 = Integer::from(j + 1);
                let npj = Integer::from(n).pow(j);
                let lower = jp1.clone() * &npj + Integer::from(n - 1).pow(j + 1);
                let upper = jp1.clone() * &npj + Integer::from(n).pow(j + 1);
                let mid = jp1 * s;
                assert!(lower < mid, "lower bound fails at n={n}, j={j}");
                assert!(mid < upper, "upper bound fails at n={n}, j={j}");
            }
        }
    }
}
