//! Buchberger's algorithm with the product and chain criteria, reduced
//! bases, normal forms, initial ideals, and standard-monomial bases of
//! graded pieces.

use crate::poly::{Monomial, Polynomial, PolyRing};
use std::collections::{BTreeSet, HashSet};

/// A reduced Groebner basis: monic, interreduced, no leading monomial
/// dividing another, elements sorted by increasing leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: PolyRing,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(&self.ring, f, &self.elements)
    }

    /// True when the basis consists of monomials only.
    pub fn is_monomial(&self) -> bool {
        self.elements.iter().all(|g| g.len() == 1)
    }
}

/// Remainder of the division algorithm: no term of the result is divisible
/// by any leading monomial of the divisors. Divisors are tried in slice
/// order, so the result is deterministic.
pub fn normal_form(ring: &PolyRing, f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let field = ring.field();
    let mut work = f.clone();
    let mut remainder: Vec<(u64, Monomial)> = Vec::new();
    'outer: while let Some((lc, lm)) = work.leading().map(|(c, m)| (c, m.clone())) {
        for g in divisors {
            let Some((gc, gm)) = g.leading() else { continue };
            if gm.divides(&lm) {
                let factor = field.div(lc, gc);
                let shift = gm.quotient_into(&lm);
                work = ring.sub(&work, &ring.mul_term(g, factor, &shift));
                continue 'outer;
            }
        }
        // Leading term is irreducible: move it to the remainder. Subsequent
        // leading terms are strictly smaller, so the remainder stays sorted.
        remainder.push((lc, lm));
        let mut terms = work.terms().to_vec();
        terms.remove(0);
        work = ring.poly_from_terms(terms);
    }
    ring.poly_from_terms(remainder)
}

fn s_polynomial(ring: &PolyRing, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fc, fm) = f.leading().expect("nonzero");
    let (gc, gm) = g.leading().expect("nonzero");
    let lcm = fm.lcm(gm);
    let field = ring.field();
    let a = ring.mul_term(f, field.inv(fc), &fm.quotient_into(&lcm));
    let b = ring.mul_term(g, field.inv(gc), &gm.quotient_into(&lcm));
    ring.sub(&a, &b)
}

/// Buchberger with the normal selection strategy. Pairs are processed by
/// (lcm degree, colex of the index pair); the product and chain criteria
/// prune the queue. Returns the reduced basis.
pub fn buchberger(ring: &PolyRing, gens: &[Polynomial]) -> GroebnerBasis {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            let monic = ring.monic(g);
            if !basis.contains(&monic) {
                basis.push(monic);
            }
        }
    }

    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let enqueue = |queue: &mut BTreeSet<(u32, usize, usize)>,
                       pending: &mut HashSet<(usize, usize)>,
                       basis: &[Polynomial],
                       i: usize,
                       j: usize| {
        let lcm = basis[i]
            .leading_monomial()
            .unwrap()
            .lcm(basis[j].leading_monomial().unwrap());
        queue.insert((lcm.degree(), j, i));
        pending.insert((i, j));
    };
    for j in 1..basis.len() {
        for i in 0..j {
            enqueue(&mut queue, &mut pending, &basis, i, j);
        }
    }

    let mut rounds = 0usize;
    while let Some(&(deg, j, i)) = queue.iter().next() {
        queue.remove(&(deg, j, i));
        pending.remove(&(i, j));
        rounds += 1;
        assert!(rounds < 1_000_000, "Buchberger failed to terminate");

        let lm_i = basis[i].leading_monomial().unwrap();
        let lm_j = basis[j].leading_monomial().unwrap();
        if lm_i.coprime(lm_j) {
            continue;
        }
        let lcm = lm_i.lcm(lm_j);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }

        let s = s_polynomial(ring, &basis[i], &basis[j]);
        let reduced = normal_form(ring, &s, &basis);
        if !reduced.is_zero() {
            let monic = ring.monic(&reduced);
            let new = basis.len();
            basis.push(monic);
            for t in 0..new {
                enqueue(&mut queue, &mut pending, &basis, t, new);
            }
        }
    }

    GroebnerBasis {
        ring: ring.clone(),
        elements: reduce_basis(ring, basis),
    }
}

/// Interreduction: drop elements whose leading monomial is divisible by
/// another's, reduce each survivor by the others, sort by leading monomial.
fn reduce_basis(ring: &PolyRing, mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    basis.sort_by(|a, b| {
        ring.order()
            .cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(lm))
        {
            continue;
        }
        minimal.push(g);
    }
    let snapshot = minimal.clone();
    for (idx, g) in minimal.iter_mut().enumerate() {
        let others: Vec<Polynomial> = snapshot
            .iter()
            .enumerate()
            .filter(|&(t, _)| t != idx)
            .map(|(_, h)| h.clone())
            .collect();
        let reduced = normal_form(ring, g, &others);
        debug_assert!(!reduced.is_zero(), "minimal basis element reduced to zero");
        *g = ring.monic(&reduced);
    }
    minimal.sort_by(|a, b| {
        ring.order()
            .cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    minimal
}

/// Minimal monomial generators of the initial ideal: the leading monomials
/// of the reduced basis.
pub fn initial_ideal(gb: &GroebnerBasis) -> Vec<Monomial> {
    let lms: Vec<Monomial> = gb
        .elements
        .iter()
        .map(|g| g.leading_monomial().unwrap().clone())
        .collect();
    debug_assert!(lms
        .iter()
        .enumerate()
        .all(|(i, a)| lms.iter().enumerate().all(|(j, b)| i == j || !a.divides(b))));
    lms
}

/// All degree-m monomials outside the monomial ideal, in decreasing order.
pub fn standard_monomials(init: &[Monomial], degree: u32, ring: &PolyRing) -> Vec<Monomial> {
    let n = ring.nvars();
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn rec(
        v: usize,
        remaining: u32,
        n: usize,
        exps: &mut Vec<u32>,
        init: &[Monomial],
        out: &mut Vec<Monomial>,
    ) {
        if v == n {
            if remaining == 0 {
                let m = Monomial::from_exponents(exps.clone());
                if !init.iter().any(|g| g.divides(&m)) {
                    out.push(m);
                }
            }
            return;
        }
        for e in 0..=remaining {
            exps[v] = e;
            rec(v + 1, remaining - e, n, exps, init, out);
        }
        exps[v] = 0;
    }
    rec(0, degree, n, &mut exps, init, &mut out);
    out.sort_by(|a, b| ring.order().cmp(b, a));
    out
}

/// Hilbert function of the quotient by a monomial ideal: the number of
/// standard monomials of the given degree. Counting walks the exponent tree
/// and prunes a branch as soon as some generator is forced to divide.
pub fn hilbert_function(init: &[Monomial], degree: u32, nvars: usize) -> u64 {
    // max support variable per generator: once every variable of a generator
    // has been fixed, divisibility is decided.
    let max_var: Vec<usize> = init
        .iter()
        .map(|g| g.support().last().copied().unwrap_or(0))
        .collect();
    fn rec(
        v: usize,
        remaining: u32,
        nvars: usize,
        exps: &mut Vec<u32>,
        init: &[Monomial],
        max_var: &[usize],
    ) -> u64 {
        if v == nvars {
            return if remaining == 0 { 1 } else { 0 };
        }
        let mut total = 0;
        for e in 0..=remaining {
            exps[v] = e;
            let divisible = init.iter().zip(max_var).any(|(g, &mv)| {
                mv == v && g.exponents()[..=v].iter().zip(exps.iter()).all(|(a, b)| a <= b)
            });
            if !divisible {
                total += rec(v + 1, remaining - e, nvars, exps, init, max_var);
            }
        }
        exps[v] = 0;
        total
    }
    // Degree-0 generators (the unit ideal) kill everything.
    if init.iter().any(|g| g.is_one()) {
        return 0;
    }
    let mut exps = vec![0u32; nvars];
    rec(0, degree, nvars, &mut exps, init, &max_var)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::TermOrder;

    fn ring(p: u64, n: usize) -> PolyRing {
        PolyRing::new(PrimeField::new(p).unwrap(), n, TermOrder::standard(n))
    }

    fn sf(ring: &PolyRing, sets: &[(i64, &[usize])]) -> Polynomial {
        ring.poly_from_terms(
            sets.iter()
                .map(|&(c, s)| {
                    (
                        ring.field().reduce(c),
                        Monomial::from_set(ring.nvars(), s),
                    )
                })
                .collect(),
        )
    }

    #[test]
    fn normal_form_of_member_is_zero() {
        let r = ring(3, 3);
        let f = sf(&r, &[(1, &[0]), (1, &[1])]);
        let g = sf(&r, &[(1, &[1]), (1, &[2])]);
        let gb = buchberger(&r, &[f.clone(), g.clone()]);
        let member = r.add(&r.mul(&f, &r.variable(2)), &r.mul(&g, &r.variable(0)));
        assert!(gb.normal_form(&member).is_zero());
    }

    #[test]
    fn standard_monomial_is_its_own_normal_form() {
        let r = ring(3, 3);
        let f = sf(&r, &[(1, &[0, 1])]);
        let m = r.monomial_poly(Monomial::from_set(3, &[0, 2]));
        assert_eq!(normal_form(&r, &m, &[f]), m);
    }

    #[test]
    fn single_polynomial_becomes_monic() {
        let r = ring(5, 2);
        let f = r.scale(&sf(&r, &[(1, &[0]), (1, &[1])]), 3);
        let gb = buchberger(&r, &[f]);
        assert_eq!(gb.elements().len(), 1);
        assert_eq!(gb.elements()[0].leading().unwrap().0, 1);
    }

    #[test]
    fn monomial_generators_interreduce() {
        let r = ring(3, 7);
        let a = r.monomial_poly(Monomial::from_set(7, &[2, 5]));
        let b = r.monomial_poly(Monomial::from_set(7, &[0, 2, 5]));
        let gb = buchberger(&r, &[a.clone(), b]);
        assert_eq!(gb.elements(), &[a]);
    }

    #[test]
    fn buchberger_is_stable_on_its_output() {
        let r = ring(3, 4);
        let gens = vec![
            sf(&r, &[(1, &[0, 1]), (-1, &[2, 3])]),
            sf(&r, &[(1, &[1, 2]), (1, &[0, 3])]),
        ];
        let gb = buchberger(&r, &gens);
        let again = buchberger(&r, gb.elements());
        assert_eq!(gb.elements(), again.elements());
    }

    #[test]
    fn s_polynomials_of_reduced_basis_vanish() {
        let r = ring(5, 3);
        let gens = vec![
            sf(&r, &[(1, &[0]), (2, &[1]), (1, &[2])]),
            sf(&r, &[(1, &[0, 1]), (4, &[1, 2])]),
        ];
        let gb = buchberger(&r, &gens);
        for i in 0..gb.elements().len() {
            for j in i + 1..gb.elements().len() {
                let s = s_polynomial(&r, &gb.elements()[i], &gb.elements()[j]);
                assert!(gb.normal_form(&s).is_zero());
            }
        }
    }

    #[test]
    fn random_bases_pass_the_full_s_polynomial_test() {
        // The pair-elimination criteria must not change the result: every
        // S-polynomial of the output reduces to zero, checked exhaustively.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for case in 0..30 {
            let n = rng.gen_range(3..=4usize);
            let p = [3u64, 5][rng.gen_range(0..2usize)];
            let r = ring(p, n);
            let gens: Vec<Polynomial> = (0..rng.gen_range(2..=4usize))
                .map(|_| {
                    let terms: Vec<(u64, Monomial)> = (0..rng.gen_range(2..=3usize))
                        .map(|_| {
                            let mut exps = vec![0u32; n];
                            for _ in 0..2 {
                                exps[rng.gen_range(0..n)] += 1;
                            }
                            (rng.gen_range(1..p), Monomial::from_exponents(exps))
                        })
                        .collect();
                    r.poly_from_terms(terms)
                })
                .filter(|f| !f.is_zero())
                .collect();
            if gens.is_empty() {
                continue;
            }
            let gb = buchberger(&r, &gens);
            for i in 0..gb.elements().len() {
                for j in i + 1..gb.elements().len() {
                    let s = s_polynomial(&r, &gb.elements()[i], &gb.elements()[j]);
                    assert!(
                        gb.normal_form(&s).is_zero(),
                        "case {case}: S({i},{j}) does not reduce to zero"
                    );
                }
            }
            for g in gens {
                assert!(gb.normal_form(&g).is_zero(), "case {case}: input escaped");
            }
        }
    }

    #[test]
    fn initial_ideal_of_principal_ideal() {
        let r = ring(3, 3);
        let f = sf(&r, &[(1, &[0, 1]), (1, &[1, 2])]);
        let gb = buchberger(&r, &[f]);
        assert_eq!(initial_ideal(&gb), vec![Monomial::from_set(3, &[0, 1])]);
    }

    #[test]
    fn standard_monomials_basics() {
        let r = ring(3, 7);
        assert_eq!(standard_monomials(&[], 0, &r), vec![Monomial::one(7)]);
        let vars = standard_monomials(&[], 1, &r);
        assert_eq!(vars.len(), 7);
        // decreasing: y1 first
        assert_eq!(vars[0], Monomial::var(7, 0));
        let maximal: Vec<Monomial> = (0..7).map(|v| Monomial::var(7, v)).collect();
        assert!(standard_monomials(&maximal, 2, &r).is_empty());
    }

    #[test]
    fn hilbert_function_matches_enumeration() {
        let r = ring(3, 5);
        let init = vec![
            Monomial::from_set(5, &[0, 1]),
            Monomial::from_set(5, &[2, 3, 4]),
            Monomial::from_exponents(vec![0, 3, 0, 0, 0]),
        ];
        for m in 0..=8 {
            assert_eq!(
                hilbert_function(&init, m, 5),
                standard_monomials(&init, m, &r).len() as u64
            );
        }
    }

    #[test]
    fn hilbert_function_of_free_ring() {
        // dim of degree-m piece of a polynomial ring in n variables
        assert_eq!(hilbert_function(&[], 4, 3), 15);
        assert_eq!(hilbert_function(&[Monomial::one(3)], 2, 3), 0);
    }
}
