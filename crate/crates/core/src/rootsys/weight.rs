//! Weights in exact rational coordinates and the standard orthonormal
//! realizations of the simple root systems.
//!
//! Realizations follow Bourbaki: `A_n` uses the differences `e_i - e_{i+1}`
//! inside an `(n+1)`-space, `B/C/D_n` live in an `n`-space with short/long/
//! fork end roots, `E6/E7/E8` share the `R^8` realization (`E6`, `E7` as the
//! subsystems on the first 6 or 7 simple roots), `F4` sits in `R^4`, `G2` in
//! the sum-zero plane of `R^3`. Half-integer and third-integer coordinates
//! are exact `Ratio<i64>` values.

use num_rational::Ratio;
use std::fmt;

use super::{Family, SimpleType};

type Q = Ratio<i64>;

/// A vector in the ambient realization space, with exact rational
/// coordinates. The ordering is lexicographic on coordinates, giving
/// orbit sets a canonical deterministic layout.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    coords: Vec<Q>,
}

impl Weight {
    pub fn new(coords: Vec<Q>) -> Self {
        Weight { coords }
    }

    pub fn from_integers(xs: &[i64]) -> Self {
        Weight {
            coords: xs.iter().map(|&x| Q::from_integer(x)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    /// Euclidean inner product. Panics on dimension mismatch; callers go
    /// through [`super::weyl_orbit`], which checks dimensions up front.
    pub fn dot(&self, other: &Weight) -> Q {
        assert_eq!(self.dim(), other.dim(), "weight dimension mismatch");
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm2(&self) -> Q {
        self.dot(self)
    }

    /// Reflection through the hyperplane orthogonal to `root`:
    /// `w - (2 (w, root) / (root, root)) root`.
    pub fn reflect(&self, root: &Weight) -> Weight {
        let coeff = self.dot(root) * Q::from_integer(2) / root.norm2();
        let coords = self
            .coords
            .iter()
            .zip(&root.coords)
            .map(|(w, r)| w - coeff * r)
            .collect();
        Weight { coords }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|q| q.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn q(n: i64, d: i64) -> Q {
    Ratio::new(n, d)
}

/// Unit vector difference `e_i - e_j` in `dim` coordinates (0-indexed).
fn e_diff(dim: usize, i: usize, j: usize) -> Weight {
    let mut coords = vec![Q::from_integer(0); dim];
    coords[i] = Q::from_integer(1);
    coords[j] = Q::from_integer(-1);
    Weight::new(coords)
}

fn e_scaled(dim: usize, i: usize, c: i64) -> Weight {
    let mut coords = vec![Q::from_integer(0); dim];
    coords[i] = Q::from_integer(c);
    Weight::new(coords)
}

/// The simple roots of `t` in Bourbaki numbering.
pub fn simple_roots(t: SimpleType) -> Vec<Weight> {
    let n = t.rank();
    let dim = t.ambient_dim();
    match t.family() {
        Family::A => (0..n).map(|i| e_diff(dim, i, i + 1)).collect(),
        Family::B => {
            let mut roots: Vec<Weight> = (0..n - 1).map(|i| e_diff(dim, i, i + 1)).collect();
            roots.push(e_scaled(dim, n - 1, 1));
            roots
        }
        Family::C => {
            let mut roots: Vec<Weight> = (0..n - 1).map(|i| e_diff(dim, i, i + 1)).collect();
            roots.push(e_scaled(dim, n - 1, 2));
            roots
        }
        Family::D => {
            let mut roots: Vec<Weight> = (0..n - 1).map(|i| e_diff(dim, i, i + 1)).collect();
            let mut fork = vec![Q::from_integer(0); dim];
            fork[n - 2] = Q::from_integer(1);
            fork[n - 1] = Q::from_integer(1);
            roots.push(Weight::new(fork));
            roots
        }
        Family::E => e8_roots().into_iter().take(n).collect(),
        Family::F => vec![
            e_diff(4, 1, 2),
            e_diff(4, 2, 3),
            e_scaled(4, 3, 1),
            Weight::new(vec![q(1, 2), q(-1, 2), q(-1, 2), q(-1, 2)]),
        ],
        Family::G => vec![
            e_diff(3, 0, 1),
            Weight::new(vec![q(-2, 1), q(1, 1), q(1, 1)]),
        ],
    }
}

fn e8_roots() -> Vec<Weight> {
    let mut roots = vec![
        Weight::new(vec![
            q(1, 2),
            q(-1, 2),
            q(-1, 2),
            q(-1, 2),
            q(-1, 2),
            q(-1, 2),
            q(-1, 2),
            q(1, 2),
        ]),
        Weight::new(vec![
            q(1, 1),
            q(1, 1),
            q(0, 1),
            q(0, 1),
            q(0, 1),
            q(0, 1),
            q(0, 1),
            q(0, 1),
        ]),
    ];
    // alpha_k = e_{k-2} - e_{k-3} for k = 3..8 (1-based Bourbaki indices).
    for k in 3..=8 {
        roots.push(e_diff(8, k - 2, k - 3));
    }
    roots
}

/// Highest weight of the minuscule representation `(t, varpi_k)`.
///
/// Defined exactly for the entries of the minuscule catalog; internal
/// callers never ask for anything else.
pub(super) fn minuscule_weight(t: SimpleType, k: usize) -> Weight {
    let n = t.rank();
    match (t.family(), k) {
        (Family::A, k) if 1 <= k && k <= n => {
            // e_1 + ... + e_k minus its average, landing in the sum-zero
            // hyperplane.
            let shift = q(k as i64, (n + 1) as i64);
            let coords = (0..n + 1)
                .map(|i| if i < k { Q::from_integer(1) - shift } else { -shift })
                .collect();
            Weight::new(coords)
        }
        (Family::B, k) if k == n => Weight::new(vec![q(1, 2); n]),
        (Family::C, 1) => e_scaled(n, 0, 1),
        (Family::D, 1) => e_scaled(n, 0, 1),
        (Family::D, k) if k == n - 1 => {
            let mut coords = vec![q(1, 2); n];
            coords[n - 1] = q(-1, 2);
            Weight::new(coords)
        }
        (Family::D, k) if k == n => Weight::new(vec![q(1, 2); n]),
        (Family::E, 1) if n == 6 => Weight::new(vec![
            q(0, 1),
            q(0, 1),
            q(0, 1),
            q(0, 1),
            q(0, 1),
            q(-2, 3),
            q(-2, 3),
            q(2, 3),
        ]),
        (Family::E, 6) if n == 6 => Weight::new(vec![
            q(0, 1),
            q(0, 1),
            q(0, 1),
            q(0, 1),
            q(1, 1),
            q(-1, 3),
            q(-1, 3),
            q(1, 3),
        ]),
        (Family::E, 7) if n == 7 => Weight::new(vec![
            q(0, 1),
            q(0, 1),
            q(0, 1),
            q(0, 1),
            q(0, 1),
            q(1, 1),
            q(-1, 2),
            q(1, 2),
        ]),
        _ => panic!("no minuscule fundamental weight varpi_{k} for {t}"),
    }
}
