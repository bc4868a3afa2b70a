//! Graded Betti numbers as Koszul strand homology.
//!
//! beta_{i,j}(S/I) is the dimension of the degree-j homology of
//! (S/I) (x) Lambda^{i+1} -> (S/I) (x) Lambda^i -> (S/I) (x) Lambda^{i-1},
//! with graded pieces spanned by standard monomials and differentials
//! assembled from normal-form multiplication by each variable.
//!
//! Two exact reductions keep the rank computations small without changing a
//! single table entry:
//!
//! * a square-free monomial ideal is Z^n-graded and its Tor modules live in
//!   square-free multidegrees (the Taylor complex has square-free shifts),
//!   so the strands split into one tiny block per subset of the variables;
//! * for a general ideal, quotienting by a linear form that is verified to
//!   be a nonzerodivisor (exact Hilbert-numerator comparison) preserves all
//!   graded Betti numbers, so the module is first cut down by a maximal
//!   verified regular sequence of linear forms.

use super::BettiTable;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::{
    buchberger, hilbert_function, initial_ideal, normal_form, standard_monomials, GroebnerBasis,
};
use crate::hilbert::{hilbert_numerator, strip_poles};
use crate::matrix::DenseMatrix;
use crate::poly::{Monomial, Polynomial, PolyRing};
use crate::subsets::{bitmask, Combinations};
use rand::{Rng, SeedableRng};
use std::collections::{BTreeMap, HashMap, HashSet};

/// Largest dense rank block the strand engine will allocate.
const BLOCK_ENTRY_CAP: u128 = 16_000_000;
/// Random linear-form candidates tried per reduction step when exhausting
/// all normalized forms is too costly.
const SAMPLED_CANDIDATES: usize = 64;
/// Exhaust all normalized linear forms when there are at most this many.
const EXHAUSTIVE_FORMS: u128 = 4096;

/// Betti numbers of S/I for the homogeneous ideal with the given reduced
/// Groebner basis, for 0 <= i <= i_max and j <= j_max.
pub fn koszul_betti(gb: &GroebnerBasis, i_max: usize, j_max: usize) -> Result<BettiTable> {
    let ring = gb.ring();
    let n = ring.nvars();
    for g in gb.elements() {
        if !g.is_homogeneous() {
            return Err(Error::Inhomogeneous);
        }
        assert!(
            g.degree().unwrap_or(1) >= 1,
            "the unit ideal has no minimal resolution"
        );
    }
    if gb.elements().is_empty() {
        let mut entries = BTreeMap::new();
        entries.insert((0, 0), 1u64);
        return Ok(BettiTable {
            entries,
            i_max,
            j_max,
            truncated: false,
            field_modulus: ring.field().modulus(),
            nvars: n,
        });
    }
    if gb.is_monomial() {
        let lms = initial_ideal(gb);
        if lms.iter().all(Monomial::is_squarefree) {
            return squarefree_strands(ring.field(), &lms, n, i_max, j_max);
        }
    }
    let reduced = reduce_by_regular_linear_forms(gb);
    strand_table(&reduced, n, i_max, j_max)
}

/// Strand homology of a square-free monomial quotient, split by square-free
/// multidegree. The block in multidegree W at position i is spanned by the
/// pairs (y^F, e_S) with S (x) F = W and F a face of the complex.
fn squarefree_strands(
    field: PrimeField,
    gens: &[Monomial],
    n: usize,
    i_max: usize,
    j_max: usize,
) -> Result<BettiTable> {
    assert!(n <= 24, "multidegree enumeration bound");
    let nonface_masks: Vec<u32> = gens.iter().map(|m| bitmask(&m.support())).collect();
    let mut entries: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    let mut truncated = false;

    for w in 0u32..(1 << n) {
        let j = w.count_ones() as usize;
        if j > j_max {
            continue;
        }
        // Position i basis: subsets S of W with W \ S a face.
        let mut levels: Vec<Vec<u32>> = vec![Vec::new(); j + 1];
        let mut sub = w;
        loop {
            let s_mask = sub;
            let face = w & !s_mask;
            if nonface_masks.iter().all(|&nf| nf & face != nf) {
                levels[s_mask.count_ones() as usize].push(s_mask);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & w;
        }
        for level in &mut levels {
            level.sort_unstable();
        }

        let rank_at = |i: usize| -> usize {
            if i == 0 || i > j || levels[i].is_empty() || levels[i - 1].is_empty() {
                return 0;
            }
            let index: HashMap<u32, usize> = levels[i - 1]
                .iter()
                .enumerate()
                .map(|(idx, &m)| (m, idx))
                .collect();
            let mut mat = DenseMatrix::zero(field, levels[i - 1].len(), levels[i].len());
            for (col, &s_mask) in levels[i].iter().enumerate() {
                let mut pos = 0;
                let mut rest = s_mask;
                while rest != 0 {
                    let v = rest.trailing_zeros();
                    rest &= rest - 1;
                    let smaller = s_mask & !(1 << v);
                    // multiplication by y_v must stay standard
                    if let Some(&row) = index.get(&smaller) {
                        let sign = if pos % 2 == 0 { 1 } else { field.modulus() - 1 };
                        mat.set(row, col, sign);
                    }
                    pos += 1;
                }
            }
            mat.rank()
        };

        let ranks: Vec<usize> = (0..=j + 1).map(rank_at).collect();
        for i in 0..=j.min(i_max) {
            let dim = levels[i].len();
            if dim == 0 {
                continue;
            }
            let homology = dim - ranks[i] - ranks[i + 1];
            if homology > 0 {
                debug_assert!(i > 0 || j == 0, "H_0 of a positive-degree strand vanishes");
                *entries.entry((i, j)).or_insert(0) += homology as u64;
                if j == j_max {
                    truncated = true;
                }
            }
        }
    }

    Ok(BettiTable {
        entries,
        i_max,
        j_max,
        truncated,
        field_modulus: field.modulus(),
        nvars: n,
    })
}

/// A quotient presentation carried through the linear reductions.
struct Presentation {
    ring: PolyRing,
    elements: Vec<Polynomial>,
    init: Vec<Monomial>,
    /// Numerator of the Hilbert series over (1-s)^nvars. Invariant under a
    /// regular linear quotient (one variable and one (1-s) factor cancel).
    kpoly: Vec<i64>,
    /// Krull dimension of the quotient.
    dim: usize,
}

fn presentation_of(ring: PolyRing, elements: Vec<Polynomial>) -> Presentation {
    let gb = buchberger(&ring, &elements);
    let init = initial_ideal(&gb);
    let kpoly = hilbert_numerator(&init, ring.nvars());
    let (codim, _) = strip_poles(&kpoly);
    let dim = ring.nvars() - codim;
    Presentation {
        elements: gb.elements().to_vec(),
        ring,
        init,
        kpoly,
        dim,
    }
}

/// Quotients by linear forms as long as a verified nonzerodivisor can be
/// found. Each accepted step is certified by exact equality of Hilbert
/// numerators, so the output presentation has identical graded Betti
/// numbers; ideally it ends Artinian (always, for a Cohen-Macaulay input
/// over a field with enough linear forms).
fn reduce_by_regular_linear_forms(gb: &GroebnerBasis) -> Presentation {
    let mut current = presentation_of(gb.ring().clone(), gb.elements().to_vec());
    while current.dim > 0 {
        match find_regular_quotient(&current) {
            Some(next) => current = next,
            None => break,
        }
    }
    current
}

fn find_regular_quotient(pres: &Presentation) -> Option<Presentation> {
    let ring = &pres.ring;
    let n = ring.nvars();
    let field = ring.field();
    for coeffs in linear_form_candidates(field, n) {
        // Eliminate the least-priority variable in the support.
        let support: Vec<usize> = (0..n).filter(|&v| coeffs[v] != 0).collect();
        let &elim = support
            .iter()
            .max_by_key(|&&v| ring.order().rank_of_var(v))
            .expect("candidates are nonzero");
        let scale = field.inv(coeffs[elim]);
        // y_elim = -sum_{v != elim} c_v y_v
        let replacement_terms: Vec<(u64, Monomial)> = support
            .iter()
            .filter(|&&v| v != elim)
            .map(|&v| {
                (
                    field.neg(field.mul(coeffs[v], scale)),
                    Monomial::var(n, v),
                )
            })
            .collect();
        let replacement = ring.poly_from_terms(replacement_terms);

        let new_ring = PolyRing::new(field, n - 1, ring.order().drop_var(elim));
        let substituted: Vec<Polynomial> = pres
            .elements
            .iter()
            .map(|g| {
                let s = ring.substitute(g, elim, &replacement);
                new_ring.adopt(&ring.drop_variable(&s, elim))
            })
            .filter(|g| !g.is_zero())
            .collect();
        let candidate = presentation_of(new_ring, substituted);
        if candidate.kpoly == pres.kpoly {
            return Some(candidate);
        }
    }
    None
}

/// Deterministic candidate stream: the all-ones form first, then either
/// every normalized nonzero linear form (small fields) or a seeded sample.
fn linear_form_candidates(field: PrimeField, n: usize) -> Vec<Vec<u64>> {
    let p = field.modulus();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut out: Vec<Vec<u64>> = Vec::new();
    let push = |v: Vec<u64>, out: &mut Vec<Vec<u64>>, seen: &mut HashSet<Vec<u64>>| {
        if v.iter().any(|&c| c != 0) && seen.insert(v.clone()) {
            out.push(v);
        }
    };
    push(vec![1; n], &mut out, &mut seen);

    let normalized_count = {
        let mut total: u128 = 1;
        for _ in 0..n {
            total = total.saturating_mul(p as u128);
        }
        (total - 1) / (p as u128 - 1).max(1)
    };
    if normalized_count <= EXHAUSTIVE_FORMS {
        let mut v = vec![0u64; n];
        loop {
            let mut pos = 0;
            loop {
                if pos == n {
                    return out;
                }
                v[pos] += 1;
                if v[pos] < p {
                    break;
                }
                v[pos] = 0;
                pos += 1;
            }
            if v.iter().find(|&&c| c != 0) == Some(&1) {
                push(v.clone(), &mut out, &mut seen);
            }
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x0717_5eed);
    let mut attempts = 0;
    while out.len() < SAMPLED_CANDIDATES && attempts < SAMPLED_CANDIDATES * 20 {
        attempts += 1;
        let raw: Vec<u64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
        let Some(first) = raw.iter().position(|&c| c != 0) else {
            continue;
        };
        let inv = field.inv(raw[first]);
        let normalized: Vec<u64> = raw.iter().map(|&c| field.mul(c, inv)).collect();
        push(normalized, &mut out, &mut seen);
    }
    out
}

/// Literal strand computation over the (possibly reduced) presentation.
fn strand_table(
    pres: &Presentation,
    reported_nvars: usize,
    i_max: usize,
    j_max: usize,
) -> Result<BettiTable> {
    let mut engine = StrandEngine::build(pres, j_max)?;
    let n = pres.ring.nvars();
    let mut entries: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    let mut truncated = false;
    for i in 0..=i_max.min(n) {
        for delta in 0..engine.bases.len() {
            let j = i + delta;
            if j > j_max {
                break;
            }
            let dim = engine.bases[delta].len() * engine.subsets[i].len();
            if dim == 0 {
                continue;
            }
            let betti = dim - engine.rank(i, j)? - engine.rank(i + 1, j)?;
            if betti > 0 {
                if i == 0 {
                    assert_eq!(j, 0, "H_0 must be the residue field in degree 0");
                    assert_eq!(betti, 1);
                }
                entries.insert((i, j), betti as u64);
                if j == j_max {
                    truncated = true;
                }
            }
        }
    }
    Ok(BettiTable {
        entries,
        i_max,
        j_max,
        truncated,
        field_modulus: pres.ring.field().modulus(),
        nvars: reported_nvars,
    })
}

/// Strand data shared across the rank computations of one quotient: graded
/// bases, multiplication tables, exterior index sets, memoized ranks.
struct StrandEngine {
    field: PrimeField,
    nvars: usize,
    /// Standard-monomial basis of each graded piece, decreasing order.
    bases: Vec<Vec<Monomial>>,
    /// mult[degree][var][monomial] = NF(monomial * y_var) in the next basis.
    mult: Vec<Vec<Vec<Vec<(usize, u64)>>>>,
    /// i-subsets of the variables in colex order, with a mask lookup.
    subsets: Vec<Vec<Vec<usize>>>,
    subset_index: Vec<HashMap<u32, usize>>,
    ranks: BTreeMap<(usize, usize), usize>,
}

impl StrandEngine {
    fn build(pres: &Presentation, j_max: usize) -> StrandEngine {
        let ring = &pres.ring;
        let n = ring.nvars();
        let mut bases: Vec<Vec<Monomial>> = Vec::new();
        for degree in 0..=j_max as u32 {
            let basis = standard_monomials(&pres.init, degree, ring);
            if basis.is_empty() && pres.dim == 0 {
                break; // an Artinian standard graded algebra stays zero
            }
            debug_assert_eq!(basis.len() as u64, hilbert_function(&pres.init, degree, n));
            bases.push(basis);
        }
        let index: Vec<HashMap<Monomial, usize>> = bases
            .iter()
            .map(|b| b.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect())
            .collect();

        let mut mult = Vec::new();
        for degree in 0..bases.len().saturating_sub(1) {
            let mut per_var = Vec::with_capacity(n);
            for v in 0..n {
                let column: Vec<Vec<(usize, u64)>> = bases[degree]
                    .iter()
                    .map(|m| {
                        let product = ring.monomial_poly(m.mul(&Monomial::var(n, v)));
                        let nf = normal_form(ring, &product, &pres.elements);
                        nf.terms()
                            .iter()
                            .map(|(c, mono)| (index[degree + 1][mono], *c))
                            .collect()
                    })
                    .collect();
                per_var.push(column);
            }
            mult.push(per_var);
        }

        let subsets: Vec<Vec<Vec<usize>>> =
            (0..=n).map(|i| Combinations::new(n, i).collect()).collect();
        let subset_index: Vec<HashMap<u32, usize>> = subsets
            .iter()
            .map(|level| {
                level
                    .iter()
                    .enumerate()
                    .map(|(idx, s)| (bitmask(s), idx))
                    .collect()
            })
            .collect();

        StrandEngine {
            field: ring.field(),
            nvars: n,
            bases,
            mult,
            subsets,
            subset_index,
            ranks: BTreeMap::new(),
        }
    }

    /// Rank of the differential leaving position i of the degree-j strand,
    /// i.e. A_{j-i} (x) Lambda^i -> A_{j-i+1} (x) Lambda^{i-1}.
    fn rank(&mut self, i: usize, j: usize) -> Result<usize> {
        if i == 0 || i > self.nvars || j < i {
            return Ok(0);
        }
        if let Some(&r) = self.ranks.get(&(i, j)) {
            return Ok(r);
        }
        let delta = j - i;
        let dom_m = self.bases.get(delta).map_or(0, |b| b.len());
        let cod_m = self.bases.get(delta + 1).map_or(0, |b| b.len());
        let rows = cod_m * self.subsets[i - 1].len();
        let cols = dom_m * self.subsets[i].len();
        if rows == 0 || cols == 0 {
            self.ranks.insert((i, j), 0);
            return Ok(0);
        }
        let needed = rows as u128 * cols as u128;
        if needed > BLOCK_ENTRY_CAP {
            return Err(Error::TooLarge {
                context: format!("Koszul strand block at (i={i}, j={j})"),
                needed,
                cap: BLOCK_ENTRY_CAP,
            });
        }
        let mut mat = DenseMatrix::zero(self.field, rows, cols);
        let cod_width = self.subsets[i - 1].len();
        for m_idx in 0..dom_m {
            for (s_idx, subset) in self.subsets[i].iter().enumerate() {
                let col = m_idx * self.subsets[i].len() + s_idx;
                let full = bitmask(subset);
                for (pos, &v) in subset.iter().enumerate() {
                    let smaller = full & !(1 << v);
                    let s_small = self.subset_index[i - 1][&smaller];
                    for &(m2, c) in &self.mult[delta][v][m_idx] {
                        let row = m2 * cod_width + s_small;
                        let value = if pos % 2 == 0 { c } else { self.field.neg(c) };
                        let acc = self.field.add(mat.get(row, col), value);
                        mat.set(row, col, acc);
                    }
                }
            }
        }
        let r = mat.rank();
        self.ranks.insert((i, j), r);
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::super::hochster::hochster_betti;
    use super::*;
    use crate::poly::TermOrder;

    fn ring(p: u64, n: usize) -> PolyRing {
        PolyRing::new(PrimeField::new(p).unwrap(), n, TermOrder::standard(n))
    }

    fn gb_of(ring: &PolyRing, gens: &[Polynomial]) -> GroebnerBasis {
        buchberger(ring, gens)
    }

    fn expect(entries: &[(usize, usize, u64)]) -> BTreeMap<(usize, usize), u64> {
        let mut m: BTreeMap<(usize, usize), u64> =
            entries.iter().map(|&(i, j, b)| ((i, j), b)).collect();
        m.insert((0, 0), 1);
        m
    }

    #[test]
    fn zero_ideal() {
        let r = ring(3, 4);
        let gb = gb_of(&r, &[]);
        let table = koszul_betti(&gb, 4, 6).unwrap();
        assert_eq!(table.entries, expect(&[]));
    }

    #[test]
    fn koszul_complex_of_the_variables() {
        let r = ring(3, 3);
        let gens: Vec<Polynomial> = (0..3).map(|v| r.variable(v)).collect();
        let table = koszul_betti(&gb_of(&r, &gens), 3, 5).unwrap();
        assert_eq!(table.entries, expect(&[(1, 1, 3), (2, 2, 3), (3, 3, 1)]));
    }

    #[test]
    fn principal_quadric() {
        let r = ring(5, 3);
        let f = r.poly_from_terms(vec![
            (1, Monomial::from_set(3, &[0, 1])),
            (4, Monomial::from_set(3, &[1, 2])),
        ]);
        let table = koszul_betti(&gb_of(&r, &[f]), 3, 5).unwrap();
        assert_eq!(table.entries, expect(&[(1, 2, 1)]));
    }

    #[test]
    fn complete_intersection_of_two_quadrics() {
        let r = ring(3, 2);
        let gens = vec![
            r.poly_from_terms(vec![(1, Monomial::from_exponents(vec![2, 0]))]),
            r.poly_from_terms(vec![(1, Monomial::from_exponents(vec![0, 2]))]),
        ];
        let table = koszul_betti(&gb_of(&r, &gens), 2, 5).unwrap();
        assert_eq!(table.entries, expect(&[(1, 2, 2), (2, 4, 1)]));
    }

    #[test]
    fn squarefree_route_matches_hochster() {
        let f3 = PrimeField::new(3).unwrap();
        let cases: Vec<Vec<Vec<usize>>> = vec![
            vec![vec![0, 1]],
            vec![vec![0, 1], vec![1, 2], vec![2, 3]],
            vec![vec![0, 1, 2], vec![1, 3], vec![2, 3, 4]],
            vec![vec![0], vec![1, 2]],
        ];
        for nonfaces in cases {
            let n = 5;
            let r = ring(3, n);
            let gens: Vec<Polynomial> = nonfaces
                .iter()
                .map(|s| r.monomial_poly(Monomial::from_set(n, s)))
                .collect();
            let koszul = koszul_betti(&gb_of(&r, &gens), n, n + 2).unwrap();
            let hochster = hochster_betti(&nonfaces, n, f3);
            assert_eq!(koszul.entries, hochster.entries, "case {nonfaces:?}");
        }
    }

    #[test]
    fn non_squarefree_monomial_ideal_uses_the_general_route() {
        // I = (x^2, xy) in 2 variables: 0 -> S(-3) -> S(-2)^2 -> S.
        let r = ring(3, 2);
        let gens = vec![
            r.poly_from_terms(vec![(1, Monomial::from_exponents(vec![2, 0]))]),
            r.poly_from_terms(vec![(1, Monomial::from_exponents(vec![1, 1]))]),
        ];
        let table = koszul_betti(&gb_of(&r, &gens), 2, 5).unwrap();
        assert_eq!(table.entries, expect(&[(1, 2, 2), (2, 3, 1)]));
    }

    #[test]
    fn inhomogeneous_input_is_rejected() {
        let r = ring(3, 2);
        let f = r.add(&r.variable(0), &r.constant(1));
        let gb = gb_of(&r, &[f]);
        assert!(matches!(
            koszul_betti(&gb, 2, 4),
            Err(Error::Inhomogeneous)
        ));
    }

    #[test]
    fn oversized_blocks_report_too_large() {
        // A single quadric in 14 variables leaves a 12-dimensional quotient;
        // no linear form is regular beyond the dimension, and the middle
        // strand blocks exceed the entry cap.
        let n = 14;
        let r = ring(3, n);
        let f = r.poly_from_terms(vec![
            (1, Monomial::from_set(n, &[0, 1])),
            (1, Monomial::from_set(n, &[2, 3])),
        ]);
        let gb = gb_of(&r, &[f]);
        match koszul_betti(&gb, n, n + 2) {
            Err(Error::TooLarge { context, .. }) => {
                assert!(context.contains("Koszul strand block"), "{context}")
            }
            other => panic!("expected TooLarge, got {other:?}"),
        }
    }

    #[test]
    fn twisted_cubic_betti_numbers() {
        // The ideal of 2x2 minors of [[y1, y2, y3], [y2, y3, y4]]:
        // 0 -> S^2(-3) -> S^3(-2) -> S, a classical CM curve of codim 2.
        let r = ring(7, 4);
        let m = |a: usize, b: usize| Monomial::from_set(4, &[a, b]).mul(&Monomial::one(4));
        let sq = |a: usize| Monomial::from_exponents({
            let mut e = vec![0u32; 4];
            e[a] = 2;
            e
        });
        let f = r.poly_from_terms(vec![(1, m(0, 2)), (6, sq(1))]);
        let g = r.poly_from_terms(vec![(1, m(0, 3)), (6, m(1, 2))]);
        let h = r.poly_from_terms(vec![(1, m(1, 3)), (6, sq(2))]);
        let table = koszul_betti(&gb_of(&r, &[f, g, h]), 4, 6).unwrap();
        assert_eq!(table.entries, expect(&[(1, 2, 3), (2, 3, 2)]));
    }
}
