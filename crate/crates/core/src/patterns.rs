//! Pattern avoidance in symmetric groups and the Fibonacci sequence.

use itertools::Itertools;

use crate::error::{Error, Result};

/// Largest `n` accepted by [`pattern_avoidance_count`] (permutations of `n + 1` letters).
pub const MAX_PATTERN_RANK: usize = 8;

/// Whether `p` contains `3 2 1`: a decreasing subsequence of length three.
pub fn contains_321(p: &[usize]) -> bool {
    // For each middle entry, look for a larger entry before it and a smaller after.
    (1..p.len()).any(|j| p[..j].iter().any(|&a| a > p[j]) && p[j + 1..].iter().any(|&c| c < p[j]))
}

/// Whether `p` contains `3 4 1 2`: `i < j < k < l` with `p(k) < p(l) < p(i) < p(j)`.
pub fn contains_3412(p: &[usize]) -> bool {
    let n = p.len();
    for i in 0..n {
        for j in i + 1..n {
            if p[i] > p[j] {
                continue;
            }
            for k in j + 1..n {
                if p[k] > p[i] {
                    continue;
                }
                if (k + 1..n).any(|l| p[k] < p[l] && p[l] < p[i]) {
                    return true;
                }
            }
        }
    }
    false
}

/// Permutations of `n + 1` letters avoiding both 321 and 3412.
pub fn pattern_avoidance_count(n: usize) -> Result<u64> {
    if n > MAX_PATTERN_RANK {
        return Err(Error::Precondition(format!(
            "pattern avoidance is enumerated for n <= {MAX_PATTERN_RANK}"
        )));
    }
    Ok((0..n + 1)
        .permutations(n + 1)
        .filter(|p| !contains_321(p) && !contains_3412(p))
        .count() as u64)
}

/// Fibonacci numbers seeded `Fib_0 = 1`, `Fib_1 = 2`, so that `a_n = Fib_{2n-1}`.
pub fn fib(k: usize) -> u128 {
    let (mut a, mut b) = (1u128, 2u128);
    for _ in 0..k {
        (a, b) = (b, a + b);
    }
    a
}
