//! Exhaustive check of the fundamental-group lcm against the `g1` table.
//!
//! For a semisimple shape with simple factors of exponents `e_i`, the
//! product of centers has exponent `lcm(e_i)`, and each `e_i <= rank_i + 1`.
//! So `lcm(e_i) <= g1(sum (e_i - 1)) <= g1(total rank)`: the multiset
//! `{e_i}` is one of the candidates over which `g1` maximizes. This module
//! enumerates every multiset of admissible simple types up to a total rank
//! and confirms both inequalities hold, reporting the maximizing multiset
//! per rank.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use super::{fundamental_group_exponent, SimpleType};
use crate::exec;
use crate::landau::LandauTable;

/// One multiset that breaks an inequality (expected never).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UVsG1Violation {
    pub factors: Vec<SimpleType>,
    pub lcm: BigUint,
    pub bound: BigUint,
}

/// The lcm-maximizing multiset at one total rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankMaximum {
    pub rank: usize,
    pub max_lcm: BigUint,
    pub factors: Vec<SimpleType>,
}

#[derive(Debug, Clone)]
pub struct UVsG1Report {
    pub max_rank: usize,
    pub multisets_checked: usize,
    pub violations: Vec<UVsG1Violation>,
    /// Indexed by total rank, ascending from 1 to `max_rank`.
    pub per_rank: Vec<RankMaximum>,
}

impl UVsG1Report {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Enumerates all nonempty multisets of admissible simple types with total
/// rank `<= max_rank` (as canonical nondecreasing sequences, so each
/// multiset appears once) and checks `lcm(e_i) <= g1(sum (e_i - 1))` and
/// `g1(sum (e_i - 1)) <= g1(total rank)`.
pub fn verify_u_vs_g1(max_rank: usize) -> UVsG1Report {
    assert!(max_rank >= 1, "max_rank must be positive");
    let types = SimpleType::all_with_rank_at_most(max_rank);
    let table = LandauTable::build(max_rank as u64);

    let mut multisets: Vec<Vec<SimpleType>> = Vec::new();
    let mut current = Vec::new();
    collect_multisets(&types, 0, max_rank, &mut current, &mut multisets);

    let evaluated = exec::map_slice(&multisets, |factors| {
        let total_rank: usize = factors.iter().map(|t| t.rank()).sum();
        let exponents: Vec<u64> = factors
            .iter()
            .map(|&t| fundamental_group_exponent(t))
            .collect();
        let lcm = exponents
            .iter()
            .fold(BigUint::one(), |acc, &e| acc.lcm(&BigUint::from(e)));
        let cost: u64 = exponents.iter().map(|&e| e - 1).sum();
        (total_rank, lcm, cost)
    });

    let mut violations = Vec::new();
    let mut per_rank: Vec<Option<RankMaximum>> = vec![None; max_rank + 1];
    for (factors, (total_rank, lcm, cost)) in multisets.iter().zip(evaluated) {
        let inner = table.g1(cost);
        let outer = table.g1(total_rank as u64);
        if &lcm > inner {
            violations.push(UVsG1Violation {
                factors: factors.clone(),
                lcm: lcm.clone(),
                bound: inner.clone(),
            });
        }
        if inner > outer {
            violations.push(UVsG1Violation {
                factors: factors.clone(),
                lcm: inner.clone(),
                bound: outer.clone(),
            });
        }
        let slot = &mut per_rank[total_rank];
        let better = slot.as_ref().is_none_or(|best| lcm > best.max_lcm);
        if better {
            *slot = Some(RankMaximum {
                rank: total_rank,
                max_lcm: lcm,
                factors: factors.clone(),
            });
        }
    }

    UVsG1Report {
        max_rank,
        multisets_checked: multisets.len(),
        violations,
        per_rank: per_rank.into_iter().flatten().collect(),
    }
}

fn collect_multisets(
    types: &[SimpleType],
    start: usize,
    budget: usize,
    current: &mut Vec<SimpleType>,
    out: &mut Vec<Vec<SimpleType>>,
) {
    for (offset, &t) in types[start..].iter().enumerate() {
        if t.rank() > budget {
            continue;
        }
        current.push(t);
        out.push(current.clone());
        collect_multisets(types, start + offset, budget - t.rank(), current, out);
        current.pop();
    }
}
