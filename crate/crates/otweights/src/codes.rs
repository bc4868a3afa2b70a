//! Linear codes over prime fields: duality, minimum distance, and the
//! generalized Hamming weight hierarchy computed along three independent
//! routes (support enumeration on the check matrix, the generator-matrix
//! column count, and direct subcode enumeration).

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::DenseMatrix;
use crate::subsets::Combinations;

/// A linear code presented by a full-row-rank generator matrix.
#[derive(Debug, Clone)]
pub struct LinearCode {
    g: DenseMatrix,
    name: Option<String>,
}

/// Parameters [n, k, d] together with the full weight hierarchy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// d_1 .. d_k, strictly increasing.
    pub ghw: Vec<usize>,
    /// True when some generator column is zero.
    pub degenerate: bool,
}

/// Enumeration limits. All searches stay exact; exceeding a cap is an error,
/// never an approximation.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    /// Bound on q^k for codeword enumeration.
    pub max_codewords: u128,
    /// Bound on the length n for subset enumeration.
    pub max_columns: usize,
    /// Bound on the number of r-dimensional subcodes for the oracle route.
    pub max_subspaces: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_codewords: 1 << 24,
            max_columns: 24,
            max_subspaces: 1_000_000,
        }
    }
}

impl LinearCode {
    /// Wraps a generator matrix; the rows must be independent.
    pub fn new(g: DenseMatrix) -> Result<Self> {
        if g.rows() == 0 || g.rows() > g.cols() || g.rank() != g.rows() {
            return Err(Error::RankDeficient);
        }
        Ok(LinearCode { g, name: None })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn generator(&self) -> &DenseMatrix {
        &self.g
    }

    pub fn field(&self) -> PrimeField {
        self.g.field()
    }

    pub fn length(&self) -> usize {
        self.g.cols()
    }

    pub fn dimension(&self) -> usize {
        self.g.rows()
    }

    pub fn is_degenerate(&self) -> bool {
        (0..self.length()).any(|c| self.g.column_is_zero(c))
    }
}

/// Brings the generator to the form [I_k | P] by row reduction plus the
/// minimal column permutation (RREF pivots are the lexicographically
/// smallest independent column set). Returns the permuted matrix and the
/// permutation, as `perm[new_position] = old_column`.
pub fn standard_form(code: &LinearCode) -> Result<(DenseMatrix, Vec<usize>)> {
    let k = code.dimension();
    let n = code.length();
    let r = code.generator().rref();
    if r.rank != k {
        return Err(Error::RankDeficient);
    }
    let pivot_set: std::collections::HashSet<usize> = r.pivot_columns.iter().copied().collect();
    let mut perm = r.pivot_columns.clone();
    perm.extend((0..n).filter(|c| !pivot_set.contains(c)));
    Ok((r.matrix.select_columns(&perm), perm))
}

/// The (n-k) x n parity-check matrix, in [-P^T | I] form relative to the
/// standard form, with the column permutation undone so that G H^T = 0 for
/// the original generator.
pub fn parity_check(code: &LinearCode) -> Result<DenseMatrix> {
    let k = code.dimension();
    let n = code.length();
    if k == n {
        return Err(Error::NoDual);
    }
    let f = code.field();
    let (std_g, perm) = standard_form(code)?;
    let mut h = DenseMatrix::zero(f, n - k, n);
    for row in 0..n - k {
        for col in 0..k {
            // -P^T block: P = std_g[:, k..]
            h.set(row, perm[col], f.neg(std_g.get(col, k + row)));
        }
        h.set(row, perm[k + row], 1);
    }
    debug_assert!(code.generator().mat_mul(&h.transpose()).is_zero());
    Ok(h)
}

/// Exact minimum distance by enumerating the message space. Scalar multiples
/// share a weight, so only messages whose first nonzero coefficient is 1 are
/// visited.
pub fn min_distance(code: &LinearCode, caps: &Caps) -> Result<usize> {
    let q = code.field().modulus() as u128;
    let k = code.dimension();
    let total = q.checked_pow(k as u32).unwrap_or(u128::MAX);
    if total > caps.max_codewords {
        return Err(Error::TooLarge {
            context: "codeword enumeration".into(),
            needed: total,
            cap: caps.max_codewords,
        });
    }
    let f = code.field();
    let n = code.length();
    let g = code.generator();
    let mut best = n + 1;
    let mut word = vec![0u64; n];
    fn rec(
        g: &DenseMatrix,
        f: PrimeField,
        row: usize,
        normalized: bool,
        word: &mut Vec<u64>,
        best: &mut usize,
    ) {
        if row == g.rows() {
            if normalized {
                let w = word.iter().filter(|&&x| x != 0).count();
                if w < *best {
                    *best = w;
                }
            }
            return;
        }
        // coefficient 0
        rec(g, f, row + 1, normalized, word, best);
        let coeffs: Vec<u64> = if normalized {
            (1..f.modulus()).collect()
        } else {
            vec![1]
        };
        for c in coeffs {
            for j in 0..g.cols() {
                word[j] = f.add(word[j], f.mul(c, g.get(row, j)));
            }
            rec(g, f, row + 1, true, word, best);
            for j in 0..g.cols() {
                word[j] = f.sub(word[j], f.mul(c, g.get(row, j)));
            }
        }
    }
    rec(g, f, 0, false, &mut word, &mut best);
    debug_assert!(best <= n);
    Ok(best)
}

fn check_ghw_inputs(n: usize, k: usize, r: usize, caps: &Caps) -> Result<()> {
    if r == 0 || r > k {
        return Err(Error::IndexOutOfRange { index: r, cols: k });
    }
    if n > caps.max_columns {
        return Err(Error::TooLarge {
            context: "column subset enumeration".into(),
            needed: n as u128,
            cap: caps.max_columns as u128,
        });
    }
    Ok(())
}

/// r-th generalized Hamming weight from a parity-check matrix: the smallest
/// |I| with |I| - rank(H_I) >= r, scanning subsets by increasing size then
/// colex.
pub fn ghw_wei(h: &DenseMatrix, r: usize, caps: &Caps) -> Result<usize> {
    let n = h.cols();
    let k = n - h.rank();
    check_ghw_inputs(n, k, r, caps)?;
    for size in 1..=n {
        for subset in Combinations::new(n, size) {
            let rank = h.rank_of_columns(&subset)?;
            if size - rank >= r {
                return Ok(size);
            }
        }
    }
    unreachable!("d_r <= n for r <= k");
}

/// Same weight from the generator matrix: n minus the maximum number of
/// columns of G spanning a subspace of dimension at most k - r.
pub fn ghw_generator(code: &LinearCode, r: usize, caps: &Caps) -> Result<usize> {
    let n = code.length();
    let k = code.dimension();
    check_ghw_inputs(n, k, r, caps)?;
    let g = code.generator();
    for size in (0..=n).rev() {
        for subset in Combinations::new(n, size) {
            if g.rank_of_columns(&subset)? <= k - r {
                return Ok(n - size);
            }
        }
    }
    unreachable!("the empty set spans a 0-dimensional space");
}

fn gaussian_binomial(k: u32, r: u32, q: u128) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (q.pow(k - i) - 1) / (q.pow(i + 1) - 1);
    }
    acc
}

/// Independent oracle: enumerates every r-dimensional subcode (canonical
/// RREF bases of the message space) and minimizes the support size.
pub fn ghw_subcode_oracle(code: &LinearCode, r: usize, caps: &Caps) -> Result<usize> {
    let k = code.dimension();
    let n = code.length();
    if r == 0 || r > k {
        return Err(Error::IndexOutOfRange { index: r, cols: k });
    }
    let q = code.field().modulus() as u128;
    let count = gaussian_binomial(k as u32, r as u32, q);
    if count > caps.max_subspaces {
        return Err(Error::TooLarge {
            context: "subcode enumeration".into(),
            needed: count,
            cap: caps.max_subspaces,
        });
    }
    let f = code.field();
    let g = code.generator();
    let mut best = n + 1;
    for pivots in Combinations::new(k, r) {
        // Free entries of an RREF basis matrix: in row i, the columns right
        // of pivot i that are not pivots themselves.
        let mut free_pos = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for j in p + 1..k {
                if !pivots.contains(&j) {
                    free_pos.push((i, j));
                }
            }
        }
        let mut assignment = vec![0u64; free_pos.len()];
        loop {
            let mut basis = DenseMatrix::zero(f, r, k);
            for (i, &p) in pivots.iter().enumerate() {
                basis.set(i, p, 1);
            }
            for (idx, &(i, j)) in free_pos.iter().enumerate() {
                basis.set(i, j, assignment[idx]);
            }
            let rows = basis.mat_mul(g);
            let support = (0..n)
                .filter(|&c| (0..r).any(|i| rows.get(i, c) != 0))
                .count();
            if support < best {
                best = support;
            }
            // odometer
            let mut pos = 0;
            loop {
                if pos == assignment.len() {
                    break;
                }
                assignment[pos] += 1;
                if assignment[pos] < f.modulus() {
                    break;
                }
                assignment[pos] = 0;
                pos += 1;
            }
            if pos == assignment.len() {
                break;
            }
        }
    }
    Ok(best)
}

/// Computes [n, k, d] and the full hierarchy (via the check-matrix route).
pub fn code_params(code: &LinearCode, caps: &Caps) -> Result<CodeParams> {
    let n = code.length();
    let k = code.dimension();
    let d = min_distance(code, caps)?;
    let ghw = if k == n {
        (1..=k).collect()
    } else {
        let h = parity_check(code)?;
        (1..=k)
            .map(|r| ghw_wei(&h, r, caps))
            .collect::<Result<Vec<_>>>()?
    };
    debug_assert_eq!(ghw[0], d);
    Ok(CodeParams {
        n,
        k,
        d,
        ghw,
        degenerate: code.is_degenerate(),
    })
}
