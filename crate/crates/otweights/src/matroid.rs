//! The vector matroid of a matrix: circuits with exact dependency
//! coefficients, broken circuits, connected components, loops, and the
//! f-vector of the no-broken-circuit complex.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::DenseMatrix;
use crate::poly::TermOrder;
use crate::subsets::{bitmask, Combinations};

/// Default bound on the ground set size for circuit enumeration.
pub const GROUND_CAP: usize = 20;

/// Column matroid of a matrix; ground set = column indices 0..n-1.
#[derive(Debug, Clone)]
pub struct VectorMatroid {
    matrix: DenseMatrix,
    rank: usize,
}

impl VectorMatroid {
    pub fn new(matrix: DenseMatrix) -> Self {
        let rank = matrix.rank();
        VectorMatroid { matrix, rank }
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.matrix
    }

    pub fn ground_size(&self) -> usize {
        self.matrix.cols()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// A minimal dependent column set together with its dependency vector,
/// normalized so the coefficient at the smallest support index is 1.
#[derive(Debug, Clone)]
pub struct Circuit {
    pub support: Vec<usize>,
    pub dependency: Vec<Scalar>,
}

impl Circuit {
    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }
}

/// Stanley-Reisner data of a broken-circuit complex: the inclusion-minimal
/// broken circuits under a fixed variable order.
#[derive(Debug, Clone)]
pub struct BrokenCircuitIdeal {
    pub order: TermOrder,
    pub minimal_nonfaces: Vec<Vec<usize>>,
}

/// Partition of the ground set into connected components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl ComponentPartition {
    pub fn count(&self) -> usize {
        self.blocks.len()
    }
}

/// Enumerates all circuits by increasing size then colex, pruning supersets
/// of circuits already found. A subset surviving the pruning is a circuit
/// exactly when its rank is one less than its cardinality.
pub fn circuits(matroid: &VectorMatroid) -> Result<Vec<Circuit>> {
    circuits_with_cap(matroid, GROUND_CAP)
}

pub fn circuits_with_cap(matroid: &VectorMatroid, cap: usize) -> Result<Vec<Circuit>> {
    let n = matroid.ground_size();
    if n > cap {
        return Err(Error::TooLarge {
            context: "circuit enumeration".into(),
            needed: n as u128,
            cap: cap as u128,
        });
    }
    let m = matroid.matrix();
    let mut found: Vec<Circuit> = Vec::new();
    let mut masks: Vec<u32> = Vec::new();
    for size in 1..=matroid.rank() + 1 {
        for subset in Combinations::new(n, size) {
            let mask = bitmask(&subset);
            if masks.iter().any(|&c| c & mask == c) {
                continue;
            }
            let rank = m.rank_of_columns(&subset)?;
            if rank == size {
                continue;
            }
            debug_assert_eq!(rank, size - 1, "pruned subsets contain no smaller circuit");
            let sub = m.select_columns(&subset);
            let kernel = sub.kernel_basis();
            debug_assert_eq!(kernel.len(), 1, "a circuit has a 1-dimensional kernel");
            let f = m.field();
            let lead_inv = f.inv(kernel[0][0]);
            let dependency: Vec<Scalar> = kernel[0]
                .iter()
                .map(|&c| f.scalar(f.mul(c, lead_inv) as i64))
                .collect();
            debug_assert!(dependency.iter().all(|c| !c.is_zero()));
            masks.push(mask);
            found.push(Circuit {
                support: subset,
                dependency,
            });
        }
    }
    Ok(found)
}

/// Minimum circuit size; errors if the matroid is free.
pub fn smallest_circuit_size(circuits: &[Circuit]) -> Result<usize> {
    circuits
        .iter()
        .map(Circuit::len)
        .min()
        .ok_or(Error::NoCircuits)
}

/// Removes from each circuit the element whose variable is least in the
/// order, so the surviving set supports the graded-reverse-lex leading
/// monomial of the circuit polynomial, then minimalizes by inclusion.
pub fn broken_circuits(circuits: &[Circuit], order: &TermOrder) -> BrokenCircuitIdeal {
    let mut broken: Vec<Vec<usize>> = circuits
        .iter()
        .map(|c| {
            let &least = c
                .support
                .iter()
                .max_by_key(|&&v| order.rank_of_var(v))
                .expect("circuits are nonempty");
            c.support.iter().copied().filter(|&v| v != least).collect()
        })
        .collect();
    broken.sort_by(|a, b| compare_sets(a, b));
    broken.dedup();
    let mut minimal: Vec<Vec<usize>> = Vec::new();
    let mut kept_masks: Vec<u32> = Vec::new();
    for set in broken {
        let mask = bitmask(&set);
        if kept_masks.iter().any(|&m| m & mask == m) {
            continue;
        }
        kept_masks.push(mask);
        minimal.push(set);
    }
    BrokenCircuitIdeal {
        order: order.clone(),
        minimal_nonfaces: minimal,
    }
}

/// (size, colex) comparison used for all deterministic set listings.
pub fn compare_sets(a: &[usize], b: &[usize]) -> std::cmp::Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

/// Transitive closure of "lie in a common circuit"; elements in no circuit
/// (including coloops) are singleton blocks.
pub fn components(circuits: &[Circuit], ground_size: usize) -> ComponentPartition {
    let mut parent: Vec<usize> = (0..ground_size).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for c in circuits {
        for w in c.support.windows(2) {
            let a = find(&mut parent, w[0]);
            let b = find(&mut parent, w[1]);
            parent[a] = b;
        }
    }
    let mut blocks: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for x in 0..ground_size {
        let root = find(&mut parent, x);
        blocks.entry(root).or_default().push(x);
    }
    let mut blocks: Vec<Vec<usize>> = blocks.into_values().collect();
    blocks.sort_by_key(|b| b[0]);
    ComponentPartition { blocks }
}

/// Indices of zero columns.
pub fn loops(matroid: &VectorMatroid) -> Vec<usize> {
    (0..matroid.ground_size())
        .filter(|&c| matroid.matrix().column_is_zero(c))
        .collect()
}

/// Face counts of the complex whose minimal nonfaces are given:
/// entry i is the number of i-subsets of the ground set containing no
/// minimal nonface (so entry 0 counts the empty face).
pub fn nbc_f_vector(bc: &BrokenCircuitIdeal, n: usize) -> Vec<u64> {
    let nonface_masks: Vec<u32> = bc.minimal_nonfaces.iter().map(|s| bitmask(s)).collect();
    let mut f = vec![0u64; n + 1];
    for mask in 0u32..(1 << n) {
        if nonface_masks.iter().all(|&nf| nf & mask != nf) {
            f[mask.count_ones() as usize] += 1;
        }
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn f3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    fn ternary_733_matroid() -> VectorMatroid {
        VectorMatroid::new(DenseMatrix::from_rows(
            f3(),
            &[
                vec![2, 0, 0, 1, 0, 0, 0],
                vec![2, 2, 0, 0, 1, 0, 0],
                vec![2, 2, 1, 0, 0, 1, 0],
                vec![2, 0, 2, 0, 0, 0, 1],
            ],
        ))
    }

    fn odd_635_matroid() -> VectorMatroid {
        VectorMatroid::new(DenseMatrix::from_rows(
            PrimeField::new(5).unwrap(),
            &[
                vec![1, 0, 0, 1, 1, 0],
                vec![0, 1, 0, -1, 0, 1],
                vec![0, 0, 1, 0, -1, -1],
            ],
        ))
    }

    fn split_732_matroid() -> VectorMatroid {
        VectorMatroid::new(DenseMatrix::from_rows(
            f3(),
            &[
                vec![1, 0, 0, 0, -1, 0, 0],
                vec![0, 1, 0, 0, -1, 0, 0],
                vec![0, 0, 1, 0, 0, -1, 1],
                vec![0, 0, 0, 1, 0, -1, 0],
            ],
        ))
    }

    fn supports(circuits: &[Circuit]) -> Vec<Vec<usize>> {
        circuits.iter().map(|c| c.support.clone()).collect()
    }

    fn one_based(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
        sets.iter()
            .map(|s| s.iter().map(|&x| x + 1).collect())
            .collect()
    }

    #[test]
    fn nine_circuits_of_ternary_733() {
        let cs = circuits(&ternary_733_matroid()).unwrap();
        let mut got = one_based(&supports(&cs));
        got.sort();
        let mut expected = vec![
            vec![3, 6, 7],
            vec![2, 5, 6],
            vec![1, 2, 4, 7],
            vec![2, 3, 5, 7],
            vec![1, 2, 3, 4, 5],
            vec![1, 2, 3, 4, 6],
            vec![1, 3, 4, 5, 6],
            vec![1, 3, 4, 5, 7],
            vec![1, 4, 5, 6, 7],
        ];
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn circuits_of_odd_635() {
        let cs = circuits(&odd_635_matroid()).unwrap();
        let mut got = one_based(&supports(&cs));
        got.sort();
        let mut expected = vec![
            vec![1, 2, 4],
            vec![1, 3, 5],
            vec![4, 5, 6],
            vec![2, 3, 6],
            vec![1, 2, 5, 6],
            vec![1, 3, 4, 6],
            vec![2, 3, 4, 5],
        ];
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn circuits_of_split_732() {
        let cs = circuits(&split_732_matroid()).unwrap();
        let got = one_based(&supports(&cs));
        assert_eq!(
            got,
            vec![vec![3, 7], vec![1, 2, 5], vec![3, 4, 6], vec![4, 6, 7]]
        );
    }

    #[test]
    fn circuit_dependencies_annihilate_columns() {
        for m in [
            ternary_733_matroid(),
            odd_635_matroid(),
            split_732_matroid(),
        ] {
            for c in circuits(&m).unwrap() {
                let sub = m.matrix().select_columns(&c.support);
                let v: Vec<u64> = c.dependency.iter().map(|s| s.value()).collect();
                assert!(sub.apply(&v).iter().all(|&x| x == 0));
                assert_eq!(c.dependency[0].value(), 1, "leading coefficient normalized");
                // minimality: every proper subset is independent
                for skip in 0..c.support.len() {
                    let proper: Vec<usize> = c
                        .support
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, &v)| v)
                        .collect();
                    assert_eq!(
                        m.matrix().rank_of_columns(&proper).unwrap(),
                        proper.len(),
                        "proper subsets of a circuit are independent"
                    );
                }
            }
        }
    }

    #[test]
    fn smallest_circuit_sizes() {
        assert_eq!(
            smallest_circuit_size(&circuits(&ternary_733_matroid()).unwrap()).unwrap(),
            3
        );
        assert_eq!(
            smallest_circuit_size(&circuits(&split_732_matroid()).unwrap()).unwrap(),
            2
        );
        let free = VectorMatroid::new(DenseMatrix::identity(f3(), 4));
        assert!(matches!(
            smallest_circuit_size(&circuits(&free).unwrap()),
            Err(Error::NoCircuits)
        ));
    }

    #[test]
    fn zero_column_is_a_loop_and_a_one_circuit() {
        let m = VectorMatroid::new(DenseMatrix::from_rows(
            f3(),
            &[vec![1, 0, 0], vec![0, 0, 1]],
        ));
        assert_eq!(loops(&m), vec![1]);
        let cs = circuits(&m).unwrap();
        assert_eq!(supports(&cs), vec![vec![1]]);
        assert_eq!(loops(&ternary_733_matroid()), Vec::<usize>::new());
    }

    #[test]
    fn broken_circuits_default_order() {
        // Under y1 > ... > y7 the removed element is always the largest index.
        let cs = circuits(&ternary_733_matroid()).unwrap();
        let order = TermOrder::standard(7);
        let bc = broken_circuits(&cs, &order);
        let mut got = one_based(&bc.minimal_nonfaces);
        got.sort();
        let mut expected = vec![
            vec![3, 6],
            vec![2, 5],
            vec![1, 2, 4],
            vec![1, 3, 4, 5],
            vec![1, 4, 5, 6],
        ];
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn broken_circuits_alternate_order() {
        // Priority y1>y2>y3>y4>y6>y7>y5 demotes y5 below y7.
        let cs = circuits(&ternary_733_matroid()).unwrap();
        let order = TermOrder::from_one_based(&[1, 2, 3, 4, 6, 7, 5]).unwrap();
        let bc = broken_circuits(&cs, &order);
        let mut got = one_based(&bc.minimal_nonfaces);
        got.sort();
        let mut expected = vec![
            vec![3, 6],
            vec![2, 6],
            vec![2, 3, 7],
            vec![1, 2, 4],
            vec![1, 4, 6, 7],
            vec![1, 3, 4, 7],
        ];
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn single_circuit_broken() {
        // Columns e1, e2, e1+e2: the unique circuit is the whole ground set.
        let m = VectorMatroid::new(DenseMatrix::from_rows(
            f3(),
            &[vec![1, 0, 1], vec![0, 1, 1]],
        ));
        let cs = circuits(&m).unwrap();
        assert_eq!(supports(&cs), vec![vec![0, 1, 2]]);
        let bc = broken_circuits(&cs, &TermOrder::standard(3));
        assert_eq!(bc.minimal_nonfaces, vec![vec![0, 1]]);
    }

    #[test]
    fn component_counts() {
        let cs = circuits(&split_732_matroid()).unwrap();
        let parts = components(&cs, 7);
        assert_eq!(parts.count(), 2);
        assert_eq!(parts.blocks, vec![vec![0, 1, 4], vec![2, 3, 5, 6]]);

        let cs = circuits(&ternary_733_matroid()).unwrap();
        assert_eq!(components(&cs, 7).count(), 1);

        let free = VectorMatroid::new(DenseMatrix::identity(f3(), 4));
        assert_eq!(components(&circuits(&free).unwrap(), 4).count(), 4);
    }

    #[test]
    fn f_vector_of_full_simplex() {
        let bc = BrokenCircuitIdeal {
            order: TermOrder::standard(4),
            minimal_nonfaces: vec![],
        };
        assert_eq!(nbc_f_vector(&bc, 4), vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn f_vector_with_single_nonface() {
        let bc = BrokenCircuitIdeal {
            order: TermOrder::standard(3),
            minimal_nonfaces: vec![vec![0, 1]],
        };
        assert_eq!(nbc_f_vector(&bc, 3), vec![1, 3, 2, 0]);
    }

    #[test]
    fn f_vector_of_ternary_733_nbc_complex() {
        let cs = circuits(&ternary_733_matroid()).unwrap();
        let bc = broken_circuits(&cs, &TermOrder::standard(7));
        assert_eq!(nbc_f_vector(&bc, 7), vec![1, 7, 19, 24, 11, 0, 0, 0]);
    }

    #[test]
    fn f_vector_is_order_invariant() {
        let cs = circuits(&ternary_733_matroid()).unwrap();
        let reference = nbc_f_vector(&broken_circuits(&cs, &TermOrder::standard(7)), 7);
        for perm in [
            vec![1, 2, 3, 4, 6, 7, 5],
            vec![7, 6, 5, 4, 3, 2, 1],
            vec![2, 4, 6, 1, 3, 5, 7],
            vec![5, 1, 7, 3, 2, 6, 4],
        ] {
            let order = TermOrder::from_one_based(&perm).unwrap();
            assert_eq!(
                nbc_f_vector(&broken_circuits(&cs, &order), 7),
                reference,
                "Whitney invariance failed for {perm:?}"
            );
        }
    }
}
