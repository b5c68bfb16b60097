//! The classification of minuscule representations.

use num_bigint::BigUint;
use num_integer::binomial;

use super::{weight, Family, SimpleType, Weight};
use crate::numeric::pow2;

/// A minuscule representation: all of its weights form a single Weyl orbit
/// of a fundamental weight, each with multiplicity 1, so `dimension` equals
/// the orbit size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinusculeRep {
    pub simple_type: SimpleType,
    pub fundamental_weight_index: usize,
    pub dimension: BigUint,
}

impl MinusculeRep {
    /// The highest weight `varpi_k` in the standard realization.
    pub fn highest_weight(&self) -> Weight {
        weight::minuscule_weight(self.simple_type, self.fundamental_weight_index)
    }
}

/// All minuscule representations of `t`, by the standard classification:
/// every `varpi_k` for `A_n` (dimension `C(n+1, k)`), the spin
/// representation `varpi_n` for `B_n` (dimension `2^n`), the vector
/// representation `varpi_1` for `C_n` (dimension `2n`), the vector and two
/// half-spin representations for `D_n` (dimensions `2n`, `2^{n-1}`,
/// `2^{n-1}`), the two 27-dimensional representations of `E6`, the
/// 56-dimensional representation of `E7`, and nothing for `E8`, `F4`, `G2`
/// (trivial fundamental group admits no minuscule weight).
pub fn minuscule_catalog(t: SimpleType) -> Vec<MinusculeRep> {
    let n = t.rank();
    let rep = |k: usize, dimension: BigUint| MinusculeRep {
        simple_type: t,
        fundamental_weight_index: k,
        dimension,
    };
    match t.family() {
        Family::A => (1..=n)
            .map(|k| rep(k, binomial(BigUint::from(n + 1), BigUint::from(k))))
            .collect(),
        Family::B => vec![rep(n, pow2(n as u64))],
        Family::C => vec![rep(1, BigUint::from(2 * n))],
        Family::D => vec![
            rep(1, BigUint::from(2 * n)),
            rep(n - 1, pow2(n as u64 - 1)),
            rep(n, pow2(n as u64 - 1)),
        ],
        Family::E if n == 6 => vec![rep(1, BigUint::from(27u32)), rep(6, BigUint::from(27u32))],
        Family::E if n == 7 => vec![rep(7, BigUint::from(56u32))],
        _ => Vec::new(),
    }
}
