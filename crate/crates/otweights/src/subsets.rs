//! Subset enumeration in colexicographic order.
//!
//! All exhaustive searches in the crate walk subsets by increasing size and,
//! within one size, in colex order, so results of min/max scans are
//! reproducible regardless of internal short-circuiting.

/// Iterates the k-subsets of {0, .., n-1} in colexicographic order:
/// S < T iff the largest element of the symmetric difference lies in T.
pub struct Combinations {
    n: usize,
    state: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        let state = if k <= n {
            Some((0..k).collect())
        } else {
            None
        };
        Combinations { n, state }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.state.clone()?;
        let k = current.len();
        // Advance: bump the first element that has room before its successor.
        let mut next = current.clone();
        let mut i = 0;
        loop {
            if i == k {
                self.state = None;
                break;
            }
            let limit = if i + 1 < k { next[i + 1] } else { self.n };
            if next[i] + 1 < limit {
                next[i] += 1;
                for (j, slot) in next.iter_mut().enumerate().take(i) {
                    *slot = j;
                }
                self.state = Some(next);
                break;
            }
            i += 1;
        }
        Some(current)
    }
}

/// All subsets of {0, .., n-1}, by increasing size then colex.
pub fn subsets_by_size(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..=n).flat_map(move |k| Combinations::new(n, k))
}

pub fn bitmask(set: &[usize]) -> u32 {
    set.iter().fold(0u32, |m, &i| m | (1 << i))
}

pub fn from_bitmask(mut mask: u32) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        let i = mask.trailing_zeros() as usize;
        out.push(i);
        mask &= mask - 1;
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colex_order_of_pairs() {
        let pairs: Vec<Vec<usize>> = Combinations::new(4, 2).collect();
        assert_eq!(
            pairs,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 3],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn counts_match_binomials() {
        for n in 0..=8 {
            for k in 0..=n {
                let count = Combinations::new(n, k).count() as u128;
                assert_eq!(count, binomial(n as u64, k as u64));
            }
        }
        assert_eq!(subsets_by_size(6).count(), 64);
    }

    #[test]
    fn mask_roundtrip() {
        let s = vec![0, 3, 5];
        assert_eq!(from_bitmask(bitmask(&s)), s);
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 5), 0);
    }
}
