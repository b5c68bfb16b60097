//! Shared numeric helpers: exact powers of two and float logarithms of
//! arbitrary-precision integers.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `2^k` as an exact integer.
pub fn pow2(k: u64) -> BigUint {
    BigUint::one() << k
}

/// True if `x` is a power of two (including `1`).
pub fn is_power_of_two(x: &BigUint) -> bool {
    !x.is_zero() && x.count_ones() == 1
}

/// `log2(x)` for `x >= 1`, accurate to f64 precision regardless of size.
///
/// Splits off the bit length so only a 64-bit mantissa window is converted
/// to float: `log2(x) = (bits - 64) + log2(x >> (bits - 64))`.
pub fn log2_big(x: &BigUint) -> f64 {
    assert!(!x.is_zero(), "log2 of zero");
    let bits = x.bits();
    if bits <= 64 {
        let lead: u64 = x.try_into().expect("fits in u64");
        return (lead as f64).log2();
    }
    let shift = bits - 64;
    let lead: u64 = (x >> shift).try_into().expect("64-bit window");
    (lead as f64).log2() + shift as f64
}

/// Natural log of `x >= 1` via [`log2_big`].
pub fn ln_big(x: &BigUint) -> f64 {
    log2_big(x) * std::f64::consts::LN_2
}
