//! Brute-force reference path for the Landau tables.
//!
//! Enumerates the defining multisets directly and takes exact lcms, with no
//! shared code with the knapsack. Exponential; meant for `n <= ~30` as the
//! oracle side of `verify landau-oracle`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use super::LandauTable;
use crate::exec;

/// Max of `lcm(a_i)` over multisets of positive integers with `sum a_i = n`,
/// by enumerating partitions of `n` into parts `>= 2` (1-parts never change
/// an lcm, so every prefix with leftover budget is already a candidate).
pub fn brute_g(n: u64) -> BigUint {
    let mut best = BigUint::one();
    descend_g(n, n, &BigUint::one(), &mut best);
    best
}

fn descend_g(remaining: u64, max_part: u64, lcm_so_far: &BigUint, best: &mut BigUint) {
    if lcm_so_far > best {
        *best = lcm_so_far.clone();
    }
    let mut part = remaining.min(max_part);
    while part >= 2 {
        let next = lcm_so_far.lcm(&BigUint::from(part));
        descend_g(remaining - part, part, &next, best);
        part -= 1;
    }
}

/// Max of `lcm(a_i)` over multisets of integers `a_i >= 2` with
/// `sum (a_i - 1) = n`, enumerated with the exact-sum constraint.
pub fn brute_g1(n: u64) -> BigUint {
    let mut best = BigUint::one();
    descend_g1(n, n + 1, &BigUint::one(), &mut best);
    best
}

fn descend_g1(remaining: u64, max_a: u64, lcm_so_far: &BigUint, best: &mut BigUint) {
    if remaining == 0 {
        if lcm_so_far > best {
            *best = lcm_so_far.clone();
        }
        return;
    }
    let mut a = (remaining + 1).min(max_a);
    while a >= 2 {
        let next = lcm_so_far.lcm(&BigUint::from(a));
        descend_g1(remaining - (a - 1), a, &next, best);
        a -= 1;
    }
}

/// Every `n <= hi` where the knapsack tables disagree with the brute-force
/// enumeration. Expected empty.
pub fn oracle_mismatches(table: &LandauTable, hi: u64) -> Vec<u64> {
    let hi = hi.min(table.max_n());
    exec::map_range(0, hi, |n| {
        let ok = table.g(n) == &brute_g(n) && table.g1(n) == &brute_g1(n);
        (n, ok)
    })
    .into_iter()
    .filter_map(|(n, ok)| (!ok).then_some(n))
    .collect()
}
