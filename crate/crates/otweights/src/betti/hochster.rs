//! Hochster's formula: graded Betti numbers of a square-free monomial ideal
//! from reduced simplicial homology of induced subcomplexes, computed by
//! boundary-matrix ranks over the given field.

use super::BettiTable;
use crate::field::PrimeField;
use crate::matrix::DenseMatrix;
use crate::subsets::{bitmask, from_bitmask};
use std::collections::{BTreeMap, HashMap};

/// beta_{i,j}(S/I_Delta) = sum over j-subsets W of dim H~_{j-i-1}(Delta|_W).
///
/// `nonfaces` lists the minimal nonfaces of the complex (the supports of the
/// minimal monomial generators).
pub fn hochster_betti(nonfaces: &[Vec<usize>], n: usize, field: PrimeField) -> BettiTable {
    assert!(n <= 24, "ground set too large for subset enumeration");
    let nonface_masks: Vec<u32> = nonfaces.iter().map(|s| bitmask(s)).collect();
    let mut entries: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    entries.insert((0, 0), 1);

    for w in 1u32..(1 << n) {
        let j = w.count_ones() as usize;
        // Faces of the induced subcomplex, grouped by cardinality.
        let mut faces: Vec<Vec<u32>> = vec![Vec::new(); j + 1];
        let mut sub = w;
        loop {
            // iterate all subsets of w, including 0
            let face = w & !sub;
            if nonface_masks.iter().all(|&nf| nf & face != nf) {
                faces[face.count_ones() as usize].push(face);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & w;
        }
        for level in &mut faces {
            level.sort_unstable();
        }

        // rank of the boundary map from cardinality c to c-1
        let boundary_rank = |c: usize| -> usize {
            if c == 0 || c > j || faces[c].is_empty() || faces[c - 1].is_empty() {
                return 0;
            }
            let index: HashMap<u32, usize> = faces[c - 1]
                .iter()
                .enumerate()
                .map(|(idx, &m)| (m, idx))
                .collect();
            let mut mat = DenseMatrix::zero(field, faces[c - 1].len(), faces[c].len());
            for (col, &face) in faces[c].iter().enumerate() {
                for (pos, v) in from_bitmask(face).into_iter().enumerate() {
                    let smaller = face & !(1 << v);
                    if let Some(&row) = index.get(&smaller) {
                        let sign = if pos % 2 == 0 { 1 } else { field.modulus() - 1 };
                        mat.set(row, col, sign);
                    }
                }
            }
            mat.rank()
        };

        let ranks: Vec<usize> = (0..=j + 1).map(boundary_rank).collect();
        for c in 0..=j {
            let cycles = faces[c].len() - ranks[c];
            let homology = cycles - ranks[c + 1];
            if homology > 0 {
                // homology at cardinality c sits in homological degree j - c
                let i = j - c;
                debug_assert!(i >= 1, "top homology of an induced complex vanishes");
                *entries.entry((i, j)).or_insert(0) += homology as u64;
            }
        }
    }

    BettiTable {
        entries,
        i_max: n,
        j_max: n,
        truncated: false,
        field_modulus: field.modulus(),
        nvars: n,
    }
}
