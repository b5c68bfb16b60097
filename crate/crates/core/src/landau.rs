//! Landau's function `g(n)`, the variant `g1(n)`, and the normalized
//! statistic `alpha(n)`.
//!
//! `g(n)` is the maximal lcm over multisets of positive integers with
//! `sum a_i = n` (the maximal order of an element of the symmetric group
//! `S_n`). `g1(n)` maximizes the lcm over multisets of integers `a_i >= 2`
//! with `sum (a_i - 1) = n`. Both are computed by a knapsack over prime
//! powers: an optimal multiset may be assumed to consist of pairwise coprime
//! prime powers, because splitting `a = b * c` with coprime `b, c >= 2`
//! never increases the cost (`b + c <= b * c`, and `(b-1) + (c-1) <= b*c - 1`)
//! while preserving the lcm contribution, and repeating a value never helps.
//!
//! The tables hold exact `BigUint` values; `g(n)` grows like `e^sqrt(n ln n)`
//! so floating point would silently lose ties exactly at the powers of two
//! that the rank bounds care about.

use num_bigint::BigUint;
use num_integer::Roots;
use num_traits::One;

use crate::exec;
use crate::numeric::{ln_big, log2_big};

pub mod brute;

/// Constant from Massias' bound `ln g(n) < 1.05314 sqrt(n ln n)`.
pub const MASSIAS_CONST: f64 = 1.05314;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LandauError {
    #[error("alpha(n) requires n >= 2, got {0}")]
    AlphaDomain(u64),
}

/// The statistic `alpha(n) = log2 g1(n) / sqrt(n ln n)` together with the
/// quantities it is built from. The denominator uses the natural log of `n`;
/// the numerator is the base-2 log of the exact `g1(n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaValue {
    pub n: u64,
    pub alpha: f64,
    pub log2_g1: f64,
    /// `1.05314 sqrt(f(n)) / ln 2`, the decreasing analytic envelope that
    /// dominates `alpha(n)` for `n >= 9`.
    pub envelope: f64,
}

/// Precomputed tables of `g` and `g1` on `0..=max_n`.
///
/// Immutable after construction and safe to share across threads; all sweep
/// methods borrow it read-only.
#[derive(Debug, Clone)]
pub struct LandauTable {
    max_n: u64,
    g: Vec<BigUint>,
    g1: Vec<BigUint>,
}

impl LandauTable {
    /// Builds both tables up to `max_n` inclusive.
    pub fn build(max_n: u64) -> Self {
        LandauTable {
            max_n,
            g: knapsack_table(max_n, 0),
            g1: knapsack_table(max_n, 1),
        }
    }

    pub fn max_n(&self) -> u64 {
        self.max_n
    }

    /// `g(n)`. Panics if `n` exceeds the table size.
    pub fn g(&self, n: u64) -> &BigUint {
        assert!(n <= self.max_n, "g({n}) beyond table size {}", self.max_n);
        &self.g[n as usize]
    }

    /// `g1(n)`. Panics if `n` exceeds the table size.
    pub fn g1(&self, n: u64) -> &BigUint {
        assert!(n <= self.max_n, "g1({n}) beyond table size {}", self.max_n);
        &self.g1[n as usize]
    }

    /// `alpha(n)` for `n >= 2`, along with its envelope value.
    pub fn alpha(&self, n: u64) -> Result<AlphaValue, LandauError> {
        if n < 2 {
            return Err(LandauError::AlphaDomain(n));
        }
        let log2_g1 = log2_big(self.g1(n));
        let denom = ((n as f64) * (n as f64).ln()).sqrt();
        Ok(AlphaValue {
            n,
            alpha: log2_g1 / denom,
            log2_g1,
            envelope: alpha_envelope(n),
        })
    }

    /// The sandwich `g(n) <= g1(n) <= g(n + floor(sqrt(2n)))`, checked in
    /// exact integers. The table must extend to `n + floor(sqrt(2n))`.
    pub fn sandwich_check(&self, n: u64) -> bool {
        assert!(n >= 1, "sandwich_check needs n >= 1");
        let upper = n + (2 * n).sqrt();
        self.g(n) <= self.g1(n) && self.g1(n) <= self.g(upper)
    }

    /// Massias' bound `ln g(n) < 1.05314 sqrt(n ln n)` for `n >= 2`,
    /// evaluated in double precision on the exact `g(n)`.
    pub fn massias_check(&self, n: u64) -> bool {
        assert!(n >= 2, "massias_check needs n >= 2");
        ln_big(self.g(n)) < MASSIAS_CONST * ((n as f64) * (n as f64).ln()).sqrt()
    }

    /// `alpha` rows for `lo..=hi`, in order. Requires `lo >= 2`.
    pub fn alpha_rows(&self, lo: u64, hi: u64) -> Result<Vec<AlphaValue>, LandauError> {
        if lo < 2 {
            return Err(LandauError::AlphaDomain(lo));
        }
        let rows = exec::map_range(lo, hi, |n| self.alpha(n).expect("n >= 2"));
        Ok(rows)
    }

    /// All `n` in `lo..=hi` (with `lo >= 2`) where `alpha(n) >= 2`.
    /// Expected empty on every range this crate handles.
    pub fn alpha_exceedances(&self, lo: u64, hi: u64) -> Vec<u64> {
        violations(lo.max(2), hi, |n| self.alpha(n).expect("n >= 2").alpha < 2.0)
    }

    /// All `n` in `lo..=hi` (with `lo >= 9`) where the chain
    /// `alpha(n) < envelope(n) < 2` breaks.
    pub fn envelope_violations(&self, lo: u64, hi: u64) -> Vec<u64> {
        violations(lo.max(9), hi, |n| {
            let a = self.alpha(n).expect("n >= 9");
            a.alpha < a.envelope && a.envelope < 2.0
        })
    }

    /// All `n` in `lo..=hi` failing [`Self::sandwich_check`].
    pub fn sandwich_violations(&self, lo: u64, hi: u64) -> Vec<u64> {
        violations(lo.max(1), hi, |n| self.sandwich_check(n))
    }

    /// All `n` in `lo..=hi` failing [`Self::massias_check`].
    pub fn massias_violations(&self, lo: u64, hi: u64) -> Vec<u64> {
        violations(lo.max(2), hi, |n| self.massias_check(n))
    }
}

fn violations<F>(lo: u64, hi: u64, ok: F) -> Vec<u64>
where
    F: Fn(u64) -> bool + Sync + Send,
{
    exec::map_range(lo, hi, |n| (n, ok(n)))
        .into_iter()
        .filter_map(|(n, ok)| (!ok).then_some(n))
        .collect()
}

/// `g(n)` for a single `n`. Builds a throwaway table; use [`LandauTable`]
/// for sweeps.
pub fn landau_g(n: u64) -> BigUint {
    LandauTable::build(n).g(n).clone()
}

/// `g1(n)` for a single `n`.
pub fn landau_g1(n: u64) -> BigUint {
    LandauTable::build(n).g1(n).clone()
}

/// The decreasing envelope `1.05314 sqrt(f(n)) / ln 2` with
/// `f(x) = ((x + sqrt(2x)) ln(x + sqrt(2x))) / (x ln x)`, defined for
/// `n >= 2`. Combines Massias' bound with the sandwich
/// `g1(n) <= g(n + floor(sqrt(2n)))`; it dominates `alpha(n)` for `n >= 9`
/// and stays below 2 there.
pub fn alpha_envelope(n: u64) -> f64 {
    assert!(n >= 2, "alpha_envelope needs n >= 2");
    MASSIAS_CONST * envelope_f(n as f64).sqrt() / std::f64::consts::LN_2
}

fn envelope_f(x: f64) -> f64 {
    let y = x + (2.0 * x).sqrt();
    (y * y.ln()) / (x * x.ln())
}

/// One knapsack pass producing the whole table `0..=max_n`.
///
/// `cost_offset` is 0 for `g` (item cost `p^k`) and 1 for `g1` (item cost
/// `p^k - 1`). Budgets run downward within each prime so each candidate
/// combines one power of `p` with a `p`-free optimum; the "cost <= budget"
/// relaxation computes the true equality optimum because a deficit can
/// always be padded (with 1-parts for `g`, with extra 2-parts for `g1`,
/// neither of which lowers the lcm), which also makes both tables
/// nondecreasing.
fn knapsack_table(max_n: u64, cost_offset: u64) -> Vec<BigUint> {
    let len = (max_n + 1) as usize;
    let mut dp = vec![BigUint::one(); len];
    for p in primes_up_to(max_n + cost_offset) {
        for budget in (1..=max_n).rev() {
            let mut pk = p;
            loop {
                let cost = pk - cost_offset;
                if cost > budget {
                    break;
                }
                let cand = &dp[(budget - cost) as usize] * pk;
                if cand > dp[budget as usize] {
                    dp[budget as usize] = cand;
                }
                match pk.checked_mul(p) {
                    Some(next) if next - cost_offset <= budget => pk = next,
                    _ => break,
                }
            }
        }
    }
    dp
}

fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2;
    while p * p <= n {
        if sieve[p] {
            let mut q = p * p;
            while q <= n {
                sieve[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    (2..=n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}
