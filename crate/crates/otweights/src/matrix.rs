//! Dense exact matrices over a prime field: RREF, rank, kernel.

use crate::error::{Error, Result};
use crate::field::{PrimeField, Scalar};

/// Row-major dense matrix with all entries in one prime field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

/// Output of [`DenseMatrix::rref`].
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: DenseMatrix,
    /// Strictly increasing pivot column indices.
    pub pivot_columns: Vec<usize>,
    pub rank: usize,
}

impl DenseMatrix {
    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> Self {
        DenseMatrix {
            field,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds from signed integer rows, reducing each entry mod p.
    /// Panics if the rows are ragged.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged matrix rows");
            entries.extend(row.iter().map(|&x| field.reduce(x)));
        }
        DenseMatrix {
            field,
            rows: nrows,
            cols: ncols,
            entries,
        }
    }

    pub fn from_residue_rows(field: PrimeField, rows: &[Vec<u64>]) -> Self {
        let signed: Vec<Vec<i64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| (x % field.modulus()) as i64).collect())
            .collect();
        Self::from_rows(field, &signed)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    pub fn scalar_at(&self, r: usize, c: usize) -> Scalar {
        self.field.scalar(self.get(r, c) as i64)
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        debug_assert!(v < self.field.modulus());
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut t = Self::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mat_mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mat_mul");
        assert_eq!(self.field, other.field);
        let f = self.field;
        let mut out = Self::zero(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = f.add(out.get(r, c), f.mul(a, other.get(k, c)));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn column_is_zero(&self, c: usize) -> bool {
        (0..self.rows).all(|r| self.get(r, c) == 0)
    }

    /// Returns the submatrix consisting of the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> DenseMatrix {
        let mut out = Self::zero(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    /// Reduced row-echelon form by Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if src != pivot_row {
                for c in 0..m.cols {
                    let a = m.get(src, c);
                    let b = m.get(pivot_row, c);
                    m.set(src, c, b);
                    m.set(pivot_row, c, a);
                }
            }
            let inv = f.inv(m.get(pivot_row, col));
            for c in col..m.cols {
                m.set(pivot_row, c, f.mul(inv, m.get(pivot_row, c)));
            }
            for r in 0..m.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let v = f.sub(m.get(r, c), f.mul(factor, m.get(pivot_row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        let rank = pivots.len();
        Rref {
            matrix: m,
            pivot_columns: pivots,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Rank of the submatrix on the given column set. Errors on an
    /// out-of-range index; the empty set has rank 0.
    pub fn rank_of_columns(&self, cols: &[usize]) -> Result<usize> {
        for &c in cols {
            if c >= self.cols {
                return Err(Error::IndexOutOfRange {
                    index: c,
                    cols: self.cols,
                });
            }
        }
        if cols.is_empty() {
            return Ok(0);
        }
        Ok(self.select_columns(cols).rank())
    }

    /// Canonical basis of the right null space. Free variables are assigned
    /// unit vectors in increasing free-column order, so the output is
    /// deterministic given the matrix.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let f = self.field;
        let Rref {
            matrix: r,
            pivot_columns,
            rank,
        } = self.rref();
        let pivot_set: std::collections::HashSet<usize> = pivot_columns.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::with_capacity(self.cols - rank);
        for &fc in &free {
            let mut v = vec![0u64; self.cols];
            v[fc] = 1;
            for (i, &pc) in pivot_columns.iter().enumerate() {
                v[pc] = f.neg(r.get(i, fc));
            }
            basis.push(v);
        }
        basis
    }

    /// Multiplies the matrix by a column vector.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let f = self.field;
        (0..self.rows)
            .map(|r| {
                let mut acc = 0u64;
                for c in 0..self.cols {
                    acc = f.add(acc, f.mul(self.get(r, c), v[c]));
                }
                acc
            })
            .collect()
    }

    /// Row spaces compared through canonical RREFs (zero rows dropped).
    pub fn row_space_eq(&self, other: &DenseMatrix) -> bool {
        if self.cols != other.cols || self.field != other.field {
            return false;
        }
        let a = self.rref();
        let b = other.rref();
        if a.rank != b.rank {
            return false;
        }
        (0..a.rank).all(|r| a.matrix.row(r) == b.matrix.row(r))
    }
}

impl std::fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    /// Parity-check matrix of the [7,3] ternary code used across the test suite.
    pub(crate) fn ternary_733_check() -> DenseMatrix {
        DenseMatrix::from_rows(
            f3(),
            &[
                vec![2, 0, 0, 1, 0, 0, 0],
                vec![2, 2, 0, 0, 1, 0, 0],
                vec![2, 2, 1, 0, 0, 1, 0],
                vec![2, 0, 2, 0, 0, 0, 1],
            ],
        )
    }

    #[test]
    fn rref_of_identity() {
        let id = DenseMatrix::identity(f3(), 4);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivot_columns, vec![0, 1, 2, 3]);
        assert_eq!(r.rank, 4);
    }

    #[test]
    fn parity_check_has_full_rank() {
        assert_eq!(ternary_733_check().rank(), 4);
    }

    #[test]
    fn dependent_triple_has_rank_two() {
        // Columns {4,7} of the check matrix are e_1-like; {3,6,7} computed by
        // hand Gaussian elimination: third column equals a combination of the
        // other two, so the rank drops to 2.
        let h = ternary_733_check();
        assert_eq!(h.rank_of_columns(&[2, 5, 6]).unwrap(), 2);
        assert_eq!(h.rank_of_columns(&[]).unwrap(), 0);
        assert!(h.rank_of_columns(&[7]).is_err());
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(DenseMatrix::identity(f3(), 3).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_dependent_triple() {
        let h = ternary_733_check();
        let sub = h.select_columns(&[2, 5, 6]);
        let basis = sub.kernel_basis();
        assert_eq!(basis.len(), 1);
        // Proportional to (1, -1, 1) over F_3, i.e. (1, 2, 1).
        assert_eq!(basis[0], vec![1, 2, 1]);
        assert!(sub.apply(&basis[0]).iter().all(|&x| x == 0));
    }

    #[test]
    fn single_parity_check_kernel() {
        let f2 = PrimeField::new(2).unwrap();
        let ones = DenseMatrix::from_rows(f2, &[vec![1; 5]]);
        assert_eq!(ones.kernel_basis().len(), 4);
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(seed in 0u64..500) {
            let m = random_matrix(seed, 4, 6, 5);
            let r = m.rref();
            let rr = r.matrix.rref();
            prop_assert_eq!(&rr.matrix, &r.matrix);
            prop_assert_eq!(rr.pivot_columns, r.pivot_columns);
        }

        #[test]
        fn rank_matches_transpose(seed in 0u64..500) {
            let m = random_matrix(seed, 5, 7, 3);
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_plus_nullity(seed in 0u64..500) {
            let m = random_matrix(seed, 4, 7, 7);
            let kernel = m.kernel_basis();
            prop_assert_eq!(m.cols(), m.rank() + kernel.len());
            for v in kernel {
                prop_assert!(m.apply(&v).iter().all(|&x| x == 0));
            }
        }
    }

    fn random_matrix(seed: u64, rows: usize, cols: usize, p: u64) -> DenseMatrix {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let f = PrimeField::new(p).unwrap();
        let rows: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(0..p as i64)).collect())
            .collect();
        DenseMatrix::from_rows(f, &rows)
    }
}
