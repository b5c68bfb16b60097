//! Integer matrices, Smith normal form, and invariants of finitely
//! generated abelian quotients.
//!
//! The quotient of interest is `Z^c / rowspace(M)` for an integer matrix `M`
//! whose rows generate a sublattice in a fixed basis of the ambient lattice.
//! Its isomorphism type is read off the Smith form: one `Z/d` per diagonal
//! entry `d > 1`, plus a free part of rank `cols - rank(M)`. The exponent of
//! the torsion part (the largest divisor) is the `u`-invariant consumed by
//! the rank bounds.
//!
//! Everything is exact `BigInt`; matrices here are at most ~16x16
//! (Cartan-sized), where coefficient growth is a non-issue.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("matrix dimensions must be positive, got {rows}x{cols}")]
    BadDimensions { rows: usize, cols: usize },
    #[error("entry count {len} does not match {rows}x{cols}")]
    BadEntryCount { rows: usize, cols: usize, len: usize },
    #[error("ragged rows: row {row} has {len} entries, expected {cols}")]
    RaggedRows { row: usize, len: usize, cols: usize },
    #[error("generator matrix has {got} columns, ambient rank is {expected}")]
    ColumnMismatch { expected: usize, got: usize },
    #[error("infinite quotient: free rank {free_rank} > 0")]
    InfiniteQuotient { free_rank: usize },
}

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, LatticeError> {
        if rows == 0 || cols == 0 {
            return Err(LatticeError::BadDimensions { rows, cols });
        }
        if entries.len() != rows * cols {
            return Err(LatticeError::BadEntryCount {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, LatticeError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(LatticeError::RaggedRows {
                    row: i,
                    len: row.len(),
                    cols: c,
                });
            }
        }
        let entries = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| BigInt::from(x)))
            .collect();
        IntMatrix::new(r, c, entries)
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigInt::one();
        }
        IntMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    /// Rows as plain vectors, for serialization.
    pub fn row_vectors(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Invariants of the abelian group `Z^cols / rowspace`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientInvariants {
    /// Nontrivial elementary divisors (each `> 1`), forming a divisibility
    /// chain `d1 | d2 | ... | dk`.
    pub elementary_divisors: Vec<BigUint>,
    /// Rank of the free part of the quotient.
    pub free_rank: usize,
}

impl QuotientInvariants {
    /// Exponent of the torsion part: the largest divisor, or 1 if none.
    pub fn torsion_exponent(&self) -> BigUint {
        self.elementary_divisors
            .last()
            .cloned()
            .unwrap_or_else(BigUint::one)
    }

    /// Order of the torsion part.
    pub fn torsion_order(&self) -> BigUint {
        self.elementary_divisors
            .iter()
            .product::<BigUint>()
            .max(BigUint::one())
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }
}

/// Smith normal form over the integers.
///
/// Reduces a working copy by elementary row/column operations with a
/// deterministic pivot rule (minimal absolute value, first hit in row-major
/// scan order), enforcing the divisibility chain before each pivot is
/// finalized. Output is independent of any pivot strategy by the uniqueness
/// of the Smith form; the fixed rule just makes runs reproducible.
pub fn smith_normal_form(m: &IntMatrix) -> QuotientInvariants {
    let (r, c) = (m.rows, m.cols);
    let mut a = m.entries.clone();
    let idx = |i: usize, j: usize| i * c + j;

    let mut t = 0;
    while t < r.min(c) {
        let Some((pi, pj)) = min_abs_pivot(&a, r, c, t) else {
            break;
        };
        swap_rows(&mut a, c, t, pi);
        swap_cols(&mut a, r, c, t, pj);
        if a[idx(t, t)].is_negative() {
            for j in 0..c {
                let v = -a[idx(t, j)].clone();
                a[idx(t, j)] = v;
            }
        }

        // Clear column t then row t with Euclidean steps. Any leftover
        // remainder is strictly smaller than the pivot, so re-selecting
        // terminates.
        let mut clean = true;
        for i in t + 1..r {
            if !a[idx(i, t)].is_zero() {
                let q = &a[idx(i, t)] / &a[idx(t, t)];
                if !q.is_zero() {
                    for j in 0..c {
                        let v = &a[idx(i, j)] - &q * &a[idx(t, j)];
                        a[idx(i, j)] = v;
                    }
                }
                if !a[idx(i, t)].is_zero() {
                    clean = false;
                }
            }
        }
        for j in t + 1..c {
            if !a[idx(t, j)].is_zero() {
                let q = &a[idx(t, j)] / &a[idx(t, t)];
                if !q.is_zero() {
                    for i in 0..r {
                        let v = &a[idx(i, j)] - &q * &a[idx(i, t)];
                        a[idx(i, j)] = v;
                    }
                }
                if !a[idx(t, j)].is_zero() {
                    clean = false;
                }
            }
        }
        if !clean {
            continue;
        }

        // Divisibility: the pivot must divide every remaining entry. If it
        // does not, fold the offending row in and reduce again.
        let mut chained = true;
        'sweep: for i in t + 1..r {
            for j in t + 1..c {
                if !(&a[idx(i, j)] % &a[idx(t, t)]).is_zero() {
                    for k in 0..c {
                        let v = &a[idx(t, k)] + &a[idx(i, k)];
                        a[idx(t, k)] = v;
                    }
                    chained = false;
                    break 'sweep;
                }
            }
        }
        if chained {
            t += 1;
        }
    }

    let elementary_divisors = (0..t)
        .map(|k| a[idx(k, k)].magnitude().clone())
        .filter(|d| d > &BigUint::one())
        .collect();
    QuotientInvariants {
        elementary_divisors,
        free_rank: c - t,
    }
}

/// Exponent of `Z^ambient_rank / rowspace(sublattice_gens)`.
///
/// Rows of `sublattice_gens` are generators of the sublattice written in a
/// basis of the ambient lattice. Errors if the quotient is infinite.
pub fn quotient_exponent(
    ambient_rank: usize,
    sublattice_gens: &IntMatrix,
) -> Result<BigUint, LatticeError> {
    if sublattice_gens.cols != ambient_rank {
        return Err(LatticeError::ColumnMismatch {
            expected: ambient_rank,
            got: sublattice_gens.cols,
        });
    }
    let inv = smith_normal_form(sublattice_gens);
    if !inv.is_finite() {
        return Err(LatticeError::InfiniteQuotient {
            free_rank: inv.free_rank,
        });
    }
    Ok(inv.torsion_exponent())
}

fn min_abs_pivot(a: &[BigInt], r: usize, c: usize, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..r {
        for j in t..c {
            let v = &a[i * c + j];
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a[bi * c + bj].abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

fn swap_rows(a: &mut [BigInt], c: usize, i: usize, k: usize) {
    if i != k {
        for j in 0..c {
            a.swap(i * c + j, k * c + j);
        }
    }
}

fn swap_cols(a: &mut [BigInt], r: usize, c: usize, j: usize, k: usize) {
    if j != k {
        for i in 0..r {
            a.swap(i * c + j, i * c + k);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    fn divisors(m: &IntMatrix) -> Vec<u64> {
        smith_normal_form(m)
            .elementary_divisors
            .iter()
            .map(|d| u64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn diagonal_and_identity() {
        let d = mat(&[vec![2, 0], vec![0, 2]]);
        let inv = smith_normal_form(&d);
        assert_eq!(divisors(&d), vec![2, 2]);
        assert_eq!(inv.free_rank, 0);
        let id = IntMatrix::identity(3);
        let inv = smith_normal_form(&id);
        assert!(inv.elementary_divisors.is_empty());
        assert_eq!(inv.free_rank, 0);
        assert_eq!(inv.torsion_exponent(), BigUint::one());
    }

    #[test]
    fn classic_two_by_two() {
        // |det| = 2, entry gcd 1: divisors (1, 2).
        let m = mat(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(divisors(&m), vec![2]);
        assert_eq!(smith_normal_form(&m).free_rank, 0);
    }

    #[test]
    fn divisibility_chain_is_enforced() {
        // diag(2, 3) ~ diag(1, 6).
        let m = mat(&[vec![2, 0, 0], vec![0, 3, 0]]);
        let inv = smith_normal_form(&m);
        assert_eq!(divisors(&m), vec![6]);
        assert_eq!(inv.free_rank, 1);
        assert!(!inv.is_finite());
    }

    #[test]
    fn zero_matrix() {
        let m = mat(&[vec![0, 0], vec![0, 0]]);
        let inv = smith_normal_form(&m);
        assert!(inv.elementary_divisors.is_empty());
        assert_eq!(inv.free_rank, 2);
    }

    #[test]
    fn quotient_exponent_examples() {
        let two_id = mat(&[vec![2, 0], vec![0, 2]]);
        assert_eq!(quotient_exponent(2, &two_id).unwrap(), BigUint::from(2u32));
        // A2 Cartan matrix: quotient Z/3.
        let a2 = mat(&[vec![2, -1], vec![-1, 2]]);
        assert_eq!(quotient_exponent(2, &a2).unwrap(), BigUint::from(3u32));
    }

    #[test]
    fn quotient_exponent_errors() {
        let m = mat(&[vec![1, 0]]);
        assert_eq!(
            quotient_exponent(3, &m),
            Err(LatticeError::ColumnMismatch {
                expected: 3,
                got: 2
            })
        );
        assert_eq!(
            quotient_exponent(2, &m),
            Err(LatticeError::InfiniteQuotient { free_rank: 1 })
        );
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            IntMatrix::new(0, 2, vec![]),
            Err(LatticeError::BadDimensions { .. })
        ));
        assert!(matches!(
            IntMatrix::new(2, 2, vec![BigInt::one()]),
            Err(LatticeError::BadEntryCount { .. })
        ));
        assert!(matches!(
            IntMatrix::from_i64_rows(&[vec![1, 2], vec![3]]),
            Err(LatticeError::RaggedRows { .. })
        ));
    }

    // Fraction-free Bareiss determinant: an independent reference for the
    // property tests below.
    fn det_bareiss(m: &IntMatrix) -> BigInt {
        assert_eq!(m.rows(), m.cols());
        let n = m.rows();
        let mut a = m.row_vectors();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n.saturating_sub(1) {
            if a[k][k].is_zero() {
                let Some(s) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, s);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }

    fn matmul(x: &IntMatrix, y: &IntMatrix) -> IntMatrix {
        assert_eq!(x.cols(), y.rows());
        let mut out = vec![BigInt::zero(); x.rows() * y.cols()];
        for i in 0..x.rows() {
            for j in 0..y.cols() {
                let mut acc = BigInt::zero();
                for k in 0..x.cols() {
                    acc += x.get(i, k) * y.get(k, j);
                }
                out[i * y.cols() + j] = acc;
            }
        }
        IntMatrix::new(x.rows(), y.cols(), out).unwrap()
    }

    /// Unimodular matrix built from a seed sequence of elementary ops.
    fn unimodular(n: usize, ops: &[(u8, usize, usize, i8)]) -> IntMatrix {
        let mut u = IntMatrix::identity(n);
        for &(kind, i, j, c) in ops {
            let (i, j) = (i % n, j % n);
            match kind % 3 {
                0 if i != j => {
                    // row_i += c * row_j
                    for k in 0..n {
                        let v = u.get(i, k) + BigInt::from(c) * u.get(j, k);
                        u.set(i, k, v);
                    }
                }
                1 if i != j => {
                    for k in 0..n {
                        let (a, b) = (u.get(i, k).clone(), u.get(j, k).clone());
                        u.set(i, k, b);
                        u.set(j, k, a);
                    }
                }
                _ => {
                    for k in 0..n {
                        let v = -u.get(i, k).clone();
                        u.set(i, k, v);
                    }
                }
            }
        }
        u
    }

    fn entries_strategy(n: usize) -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-6i64..=6, n * n)
    }

    fn ops_strategy() -> impl Strategy<Value = Vec<(u8, usize, usize, i8)>> {
        prop::collection::vec((0u8..3, 0usize..8, 0usize..8, -3i8..=3), 0..12)
    }

    proptest! {
        #[test]
        fn divisor_product_matches_determinant(entries in entries_strategy(4)) {
            let m = IntMatrix::new(
                4,
                4,
                entries.iter().map(|&x| BigInt::from(x)).collect(),
            )
            .unwrap();
            let det = det_bareiss(&m);
            let inv = smith_normal_form(&m);
            if det.is_zero() {
                prop_assert!(inv.free_rank > 0);
            } else {
                prop_assert_eq!(inv.free_rank, 0);
                prop_assert_eq!(inv.torsion_order(), det.magnitude().clone());
            }
        }

        #[test]
        fn snf_invariant_under_unimodular_action(
            entries in entries_strategy(3),
            left in ops_strategy(),
            right in ops_strategy(),
        ) {
            let m = IntMatrix::new(
                3,
                3,
                entries.iter().map(|&x| BigInt::from(x)).collect(),
            )
            .unwrap();
            let u = unimodular(3, &left);
            let v = unimodular(3, &right);
            let transformed = matmul(&matmul(&u, &m), &v);
            prop_assert_eq!(smith_normal_form(&m), smith_normal_form(&transformed));
        }

        #[test]
        fn divisibility_chain_holds(entries in entries_strategy(4)) {
            let m = IntMatrix::new(
                4,
                4,
                entries.iter().map(|&x| BigInt::from(x)).collect(),
            )
            .unwrap();
            let inv = smith_normal_form(&m);
            for w in inv.elementary_divisors.windows(2) {
                prop_assert!((&w[1] % &w[0]).is_zero(), "chain broken: {:?}", inv);
            }
        }
    }
}
