//! Exact-arithmetic toolkit for rank bounds on Mumford-Tate groups of
//! abelian varieties and the combinatorics behind them.
//!
//! The crate is organized around four pillars:
//!
//! * [`landau`]: tables of the Landau function `g(n)` (maximal lcm of a
//!   partition of `n`) and the variant `g1(n)` (maximal lcm of integers
//!   `a_i >= 2` with `sum (a_i - 1) = n`), plus the normalized growth
//!   statistic `alpha(n) = log2 g1(n) / sqrt(n ln n)` and its analytic
//!   envelope.
//! * [`lattice`]: Smith normal form over arbitrary-precision integers and
//!   the invariants of finitely generated abelian quotients, used to compute
//!   exponents of character-lattice quotients.
//! * [`rootsys`]: simple root systems in exact rational coordinates, Cartan
//!   matrices, fundamental groups, minuscule representations and their Weyl
//!   orbits.
//! * [`bounds`] and [`sharpness`]: the rank bounds themselves (character
//!   count, dimension, commutative and general lower bounds) together with
//!   the four families of abelian varieties that witness their sharpness.
//!
//! All order-sensitive quantities (lcm values, matrix entries, weight
//! coordinates) are exact: `BigUint`/`BigInt` for integers and `Ratio<i64>`
//! for weight coordinates. Floating point appears only in the final
//! logarithmic statistics, where it is explicitly part of the contract.
//!
//! Sweep-style verification (oracle comparisons, inequality scans over
//! ranges of `n`, exhaustive enumeration of semisimple shapes) is
//! data-parallel. The `parallel` feature (on by default) runs these sweeps
//! on a rayon pool; disabling it falls back to equivalent sequential loops
//! with identical, deterministic results.

pub mod bounds;
pub mod landau;
pub mod lattice;
pub mod rootsys;
pub mod sharpness;

mod exec;
mod numeric;

pub use numeric::{is_power_of_two, log2_big, pow2};
