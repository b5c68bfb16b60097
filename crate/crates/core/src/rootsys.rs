//! Simple root systems: labels, Cartan matrices, fundamental groups, and
//! the `u`-invariant bound for reductive shapes.
//!
//! A [`SimpleType`] is a validated label (family letter plus rank) for one
//! of the simple root systems `A_n, B_n, C_n, D_n, E6, E7, E8, F4, G2`.
//! Rank conventions exclude the low-rank coincidences (`B1 = A1`,
//! `C1 = A1`, `C2 = B2`, `D2 = A1 x A1`, `D3 = A3`); rejecting the aliases
//! keeps the exhaustive multiset enumeration in [`verify`] duplicate-free.
//!
//! All numeric data is derived from one source of truth: the exact rational
//! simple-root realizations in [`weight`]. The Cartan matrix is assembled
//! from root inner products, the fundamental group comes from its Smith
//! normal form, and Weyl orbits are reflection closures of the same vectors.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::One;
use std::fmt;
use std::str::FromStr;

use crate::lattice::{smith_normal_form, IntMatrix, QuotientInvariants};

mod minuscule;
mod orbit;
pub mod verify;
mod weight;

pub use minuscule::{minuscule_catalog, MinusculeRep};
pub use orbit::weyl_orbit;
pub use verify::verify_u_vs_g1;
pub use weight::{simple_roots, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("inadmissible rank {rank} for family {family}: {note}")]
    InadmissibleRank {
        family: Family,
        rank: usize,
        note: &'static str,
    },
    #[error("cannot parse {0:?} as a simple type (expected a family letter followed by a rank, e.g. A4 or e7)")]
    Parse(String),
    #[error("weight has dimension {got}, but the {simple_type} realization has dimension {expected}")]
    DimensionMismatch {
        simple_type: SimpleType,
        expected: usize,
        got: usize,
    },
}

/// A validated simple root-system label.
///
/// Ordering is by family letter then rank, which is the canonical order
/// used for multiset enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSystemError> {
        let note = match (family, rank) {
            (Family::A, n) if n >= 1 => None,
            (Family::A, _) => Some("family A requires rank >= 1"),
            (Family::B, n) if n >= 2 => None,
            (Family::B, 1) => Some("B1 coincides with A1; use A1"),
            (Family::B, _) => Some("family B requires rank >= 2"),
            (Family::C, n) if n >= 3 => None,
            (Family::C, 1) => Some("C1 coincides with A1; use A1"),
            (Family::C, 2) => Some("C2 coincides with B2; use B2"),
            (Family::C, _) => Some("family C requires rank >= 3"),
            (Family::D, n) if n >= 4 => None,
            (Family::D, 2) => Some("D2 coincides with A1 x A1; use two A1 factors"),
            (Family::D, 3) => Some("D3 coincides with A3; use A3"),
            (Family::D, _) => Some("family D requires rank >= 4"),
            (Family::E, 6..=8) => None,
            (Family::E, _) => Some("family E exists for ranks 6, 7, 8 only"),
            (Family::F, 4) => None,
            (Family::F, _) => Some("family F exists for rank 4 only"),
            (Family::G, 2) => None,
            (Family::G, _) => Some("family G exists for rank 2 only"),
        };
        match note {
            None => Ok(SimpleType { family, rank }),
            Some(note) => Err(RootSystemError::InadmissibleRank { family, rank, note }),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the standard orthonormal realization: `A_n` lives in the
    /// sum-zero hyperplane of an `(n+1)`-space, `B/C/D` in an `n`-space, and
    /// the exceptional types in their Bourbaki ambient spaces.
    pub fn ambient_dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::B | Family::C | Family::D => self.rank,
            Family::E => 8,
            Family::F => 4,
            Family::G => 3,
        }
    }

    /// All admissible simple types of rank `<= max_rank`, in canonical order.
    pub fn all_with_rank_at_most(max_rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for n in 1..=max_rank {
            out.extend(SimpleType::new(Family::A, n));
            out.extend(SimpleType::new(Family::B, n));
            out.extend(SimpleType::new(Family::C, n));
            out.extend(SimpleType::new(Family::D, n));
            out.extend(SimpleType::new(Family::E, n));
            out.extend(SimpleType::new(Family::F, n));
            out.extend(SimpleType::new(Family::G, n));
        }
        out.sort();
        out
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = RootSystemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(RootSystemError::Parse(s.to_string())),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(RootSystemError::Parse(s.to_string()));
        }
        let rank: usize = digits.parse().map_err(|_| RootSystemError::Parse(s.to_string()))?;
        SimpleType::new(family, rank)
    }
}

/// Root-system decomposition of a connected reductive group: a multiset of
/// simple factors plus the rank of the central torus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductiveShape {
    simple_factors: Vec<SimpleType>,
    central_rank: usize,
}

impl ReductiveShape {
    /// Builds a shape; the factor list is kept in canonical sorted order.
    pub fn new(mut simple_factors: Vec<SimpleType>, central_rank: usize) -> Self {
        simple_factors.sort();
        ReductiveShape {
            simple_factors,
            central_rank,
        }
    }

    pub fn simple_factors(&self) -> &[SimpleType] {
        &self.simple_factors
    }

    pub fn central_rank(&self) -> usize {
        self.central_rank
    }

    /// Total rank: sum of factor ranks plus the central rank.
    pub fn rank(&self) -> usize {
        self.simple_factors.iter().map(|t| t.rank).sum::<usize>() + self.central_rank
    }
}

/// The Cartan matrix `c[i][j] = 2 (a_i, a_j) / (a_i, a_i)` in Bourbaki
/// numbering, assembled from the exact simple-root realization.
pub fn cartan_matrix(t: SimpleType) -> IntMatrix {
    let roots = simple_roots(t);
    let n = roots.len();
    let mut entries = Vec::with_capacity(n * n);
    for a_i in &roots {
        let norm = a_i.norm2();
        for a_j in &roots {
            let c = a_i.dot(a_j) * Ratio::from_integer(2) / norm;
            assert!(c.is_integer(), "Cartan entry not integral for {t}");
            entries.push(BigInt::from(c.to_integer()));
        }
    }
    IntMatrix::new(n, n, entries).expect("rank >= 1")
}

/// Invariants of the fundamental group (weight lattice over root lattice),
/// read off the Smith normal form of the Cartan matrix.
pub fn fundamental_group_invariants(t: SimpleType) -> QuotientInvariants {
    smith_normal_form(&cartan_matrix(t))
}

/// Exponent `e` of the fundamental group. Satisfies `e <= rank + 1`, with
/// equality exactly for family A.
pub fn fundamental_group_exponent(t: SimpleType) -> u64 {
    u64::try_from(&fundamental_group_invariants(t).torsion_exponent())
        .expect("fundamental group exponent is at most rank + 1")
}

/// Upper bound for `u(G)` on a reductive shape: the lcm of the fundamental
/// group exponents of the simple factors (1 for a pure torus).
pub fn u_upper_bound(shape: &ReductiveShape) -> BigUint {
    shape
        .simple_factors
        .iter()
        .map(|&t| BigUint::from(fundamental_group_exponent(t)))
        .fold(BigUint::one(), |acc, e| acc.lcm(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::quotient_exponent;

    fn st(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(st("A4").to_string(), "A4");
        assert_eq!(st("e7").to_string(), "E7");
        assert_eq!(st(" d12 ").rank(), 12);
        assert!("H3".parse::<SimpleType>().is_err());
        assert!("A".parse::<SimpleType>().is_err());
        assert!("A0".parse::<SimpleType>().is_err());
        assert!("4A".parse::<SimpleType>().is_err());
    }

    #[test]
    fn aliases_are_rejected_with_hints() {
        for (bad, needle) in [
            ("B1", "use A1"),
            ("C1", "use A1"),
            ("C2", "use B2"),
            ("D2", "A1 x A1"),
            ("D3", "use A3"),
            ("E5", "ranks 6, 7, 8"),
            ("F3", "rank 4 only"),
            ("G4", "rank 2 only"),
        ] {
            let err = bad.parse::<SimpleType>().unwrap_err();
            assert!(
                err.to_string().contains(needle),
                "{bad}: {err} missing {needle:?}"
            );
        }
    }

    #[test]
    fn cartan_small_examples() {
        assert_eq!(cartan_matrix(st("A1")), IntMatrix::from_i64_rows(&[vec![2]]).unwrap());
        assert_eq!(
            cartan_matrix(st("A2")),
            IntMatrix::from_i64_rows(&[vec![2, -1], vec![-1, 2]]).unwrap()
        );
        assert_eq!(
            cartan_matrix(st("B2")),
            IntMatrix::from_i64_rows(&[vec![2, -1], vec![-2, 2]]).unwrap()
        );
    }

    #[test]
    fn cartan_c_is_transpose_of_b() {
        for n in 3..=6 {
            let b = cartan_matrix(SimpleType::new(Family::B, n).unwrap());
            let c = cartan_matrix(SimpleType::new(Family::C, n).unwrap());
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(b.get(i, j), c.get(j, i), "B{n}/C{n} at ({i},{j})");
                }
            }
        }
    }

    /// Classification of fundamental groups, used as the oracle for the
    /// SNF-of-Cartan computation.
    fn classified_divisors(t: SimpleType) -> Vec<u64> {
        match (t.family(), t.rank()) {
            (Family::A, n) => vec![(n + 1) as u64],
            (Family::B, _) | (Family::C, _) => vec![2],
            (Family::D, n) if n % 2 == 1 => vec![4],
            (Family::D, _) => vec![2, 2],
            (Family::E, 6) => vec![3],
            (Family::E, 7) => vec![2],
            _ => vec![],
        }
    }

    #[test]
    fn fundamental_groups_match_classification_to_rank_12() {
        for t in SimpleType::all_with_rank_at_most(12) {
            let inv = fundamental_group_invariants(t);
            assert_eq!(inv.free_rank, 0, "{t}: Cartan matrix must be nonsingular");
            let got: Vec<u64> = inv
                .elementary_divisors
                .iter()
                .map(|d| u64::try_from(d).unwrap())
                .collect();
            assert_eq!(got, classified_divisors(t), "{t}");
        }
    }

    #[test]
    fn exponent_bound_equality_iff_family_a() {
        for t in SimpleType::all_with_rank_at_most(12) {
            let e = fundamental_group_exponent(t);
            let bound = (t.rank() + 1) as u64;
            assert!(e <= bound, "{t}: e = {e} > rank + 1");
            assert_eq!(e == bound, t.family() == Family::A, "{t}");
        }
    }

    #[test]
    fn sl_n_quotient_via_explicit_lattice() {
        // The A_{n-1} Cartan matrix rows generate the root lattice inside
        // the weight lattice; the quotient is the fundamental group Z/n.
        for n in 2..=13usize {
            let t = SimpleType::new(Family::A, n - 1).unwrap();
            let m = cartan_matrix(t);
            assert_eq!(
                quotient_exponent(n - 1, &m).unwrap(),
                BigUint::from(n),
                "A{}",
                n - 1
            );
        }
    }

    #[test]
    fn u_upper_bound_examples() {
        let torus = ReductiveShape::new(vec![], 3);
        assert_eq!(torus.rank(), 3);
        assert_eq!(u_upper_bound(&torus), BigUint::one());

        let a2a3 = ReductiveShape::new(vec![st("A3"), st("A2")], 0);
        assert_eq!(a2a3.simple_factors(), &[st("A2"), st("A3")]);
        assert_eq!(a2a3.rank(), 5);
        assert_eq!(u_upper_bound(&a2a3), BigUint::from(12u32));

        let b5d5 = ReductiveShape::new(vec![st("B5"), st("D5")], 1);
        assert_eq!(b5d5.rank(), 11);
        assert_eq!(u_upper_bound(&b5d5), BigUint::from(4u32));
    }

    #[test]
    fn admissible_enumeration_is_sorted_and_deduplicated() {
        let all = SimpleType::all_with_rank_at_most(4);
        // A1..A4, B2..B4, C3, C4, D4, F4, G2.
        assert_eq!(all.len(), 12);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(all, sorted);
    }
}
