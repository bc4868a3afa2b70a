//! Exact Hilbert series of monomial quotients.
//!
//! Series are represented by their numerator over (1-s)^n. The numerator of
//! S/I for a monomial ideal I comes from the classical pivot recursion
//! N(I) = N(I + (v)) + s * N(I : v); quotients of arbitrary homogeneous
//! ideals inherit the numerator of any initial ideal.

use crate::poly::Monomial;
use crate::subsets::binomial;

/// Polynomial product over Z.
pub fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by_key(|m| m.degree());
    sorted.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in sorted {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator N(s) with HS(S/I) = N(s) / (1-s)^nvars, exact over Z.
pub fn hilbert_numerator(gens: &[Monomial], nvars: usize) -> Vec<i64> {
    let gens = minimalize(gens);
    numerator_rec(gens, nvars, 0)
}

fn numerator_rec(gens: Vec<Monomial>, nvars: usize, depth: usize) -> Vec<i64> {
    assert!(depth < 10_000, "Hilbert recursion runaway");
    if gens.iter().any(|g| g.is_one()) {
        return vec![]; // unit ideal: zero module
    }
    let pairwise_coprime = (0..gens.len())
        .all(|i| (i + 1..gens.len()).all(|j| gens[i].coprime(&gens[j])));
    if pairwise_coprime {
        // monomial complete intersection
        let mut num = vec![1i64];
        for g in &gens {
            let d = g.degree() as usize;
            let mut factor = vec![0i64; d + 1];
            factor[0] = 1;
            factor[d] = -1;
            num = poly_mul(&num, &factor);
        }
        return trim(num);
    }
    // pivot: the most frequent variable, smallest index on ties
    let mut freq = vec![0usize; nvars];
    for g in &gens {
        for v in g.support() {
            freq[v] += 1;
        }
    }
    let pivot = (0..nvars).max_by_key(|&v| freq[v]).unwrap();
    debug_assert!(freq[pivot] >= 2);

    // I + (pivot)
    let mut plus: Vec<Monomial> = gens
        .iter()
        .filter(|g| g.exponents()[pivot] == 0)
        .cloned()
        .collect();
    plus.push(Monomial::var(nvars, pivot));
    let n_plus = numerator_rec(minimalize(&plus), nvars, depth + 1);

    // I : pivot
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut exps = g.exponents().to_vec();
            if exps[pivot] > 0 {
                exps[pivot] -= 1;
            }
            Monomial::from_exponents(exps)
        })
        .collect();
    let n_colon = numerator_rec(minimalize(&colon), nvars, depth + 1);

    // N = N_plus + s * N_colon
    let mut out = vec![0i64; n_plus.len().max(n_colon.len() + 1)];
    for (i, &x) in n_plus.iter().enumerate() {
        out[i] += x;
    }
    for (i, &x) in n_colon.iter().enumerate() {
        out[i + 1] += x;
    }
    trim(out)
}

/// Value of the Hilbert function at degree m read off the numerator:
/// sum_t N_t * C(m - t + n - 1, n - 1).
pub fn expand_hf(numerator: &[i64], nvars: usize, m: usize) -> i64 {
    let mut acc: i128 = 0;
    for (t, &c) in numerator.iter().enumerate() {
        if c == 0 || t > m {
            continue;
        }
        let ways = binomial((m - t + nvars - 1) as u64, (nvars - 1) as u64) as i128;
        acc += c as i128 * ways;
    }
    i64::try_from(acc).expect("Hilbert function value overflows i64")
}

/// Splits N = (1-s)^e * M with M(1) != 0; returns (e, M).
/// For HS = N/(1-s)^n this gives dim = n - e and multiplicity M(1).
pub fn strip_poles(numerator: &[i64]) -> (usize, Vec<i64>) {
    let mut current = trim(numerator.to_vec());
    let mut e = 0;
    while !current.is_empty() && current.iter().sum::<i64>() == 0 {
        // synthetic division by (1 - s): q_j = n_j + q_{j-1}
        let mut q = vec![0i64; current.len() - 1];
        let mut carry = 0i64;
        for j in 0..current.len() - 1 {
            carry += current[j];
            q[j] = carry;
        }
        current = trim(q);
        e += 1;
    }
    (e, current)
}

pub fn eval_at_one(poly: &[i64]) -> i64 {
    poly.iter().sum()
}

/// Numerator over (1-s)^nvars of the series sum_i f[i] s^i / (1-s)^i
/// determined by a complex's face counts (f[i] = number of faces with i
/// vertices).
pub fn numerator_from_fvector(fvec: &[u64], nvars: usize) -> Vec<i64> {
    let mut acc = vec![0i64; nvars + 1];
    for (i, &count) in fvec.iter().enumerate() {
        if count == 0 {
            continue;
        }
        assert!(i <= nvars, "face dimension exceeds the variable count");
        // s^i * (1-s)^(n-i)
        let mut part = vec![0i64; i + 1];
        part[i] = count as i64;
        for _ in 0..nvars - i {
            part = poly_mul(&part, &[1, -1]);
        }
        for (j, &x) in part.iter().enumerate() {
            acc[j] += x;
        }
    }
    trim(acc)
}
