//! Cross-module invariants exercised on seeded random inputs.

use otweights::codes::{min_distance, parity_check, Caps};
use otweights::groebner::{buchberger, normal_form};
use otweights::matroid::{circuits, smallest_circuit_size, VectorMatroid};
use otweights::orlik_terao::{alpha, ot_ideal};
use otweights::poly::{Polynomial, PolyRing, TermOrder};
use otweights::verify::random_code_with_clean_dual;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn smallest_circuit_equals_min_distance() {
    // Any d-1 columns of a check matrix are independent and some d columns
    // are dependent, so the smallest circuit size is the minimum distance.
    let caps = Caps::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..40 {
        let k = rng.gen_range(2..=4usize);
        let n = rng.gen_range(k + 2..=8usize);
        let p = [2u64, 3, 5][rng.gen_range(0..3usize)];
        let code = random_code_with_clean_dual(rng.gen(), n, k, p).unwrap();
        let h = parity_check(&code).unwrap();
        let all = circuits(&VectorMatroid::new(h)).unwrap();
        assert_eq!(
            smallest_circuit_size(&all).unwrap(),
            min_distance(&code, &caps).unwrap()
        );
    }
}

#[test]
fn initial_degree_is_min_distance_minus_one() {
    let caps = Caps::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..25 {
        let k = rng.gen_range(2..=3usize);
        let n = rng.gen_range(k + 2..=7usize);
        let code = random_code_with_clean_dual(rng.gen(), n, k, 3).unwrap();
        let pres = ot_ideal(&code).unwrap();
        assert_eq!(
            alpha(&pres).unwrap() + 1,
            min_distance(&code, &caps).unwrap()
        );
    }
}

#[test]
fn boundary_polynomials_encode_their_dependencies() {
    // Each term of a circuit polynomial omits exactly one support variable
    // and carries that variable's dependency coefficient.
    let code = random_code_with_clean_dual(99, 7, 3, 5).unwrap();
    let pres = ot_ideal(&code).unwrap();
    for (circuit, poly) in pres.generators() {
        assert_eq!(poly.len(), circuit.support.len());
        assert!(poly.is_homogeneous());
        for (coeff, monomial) in poly.terms() {
            let support = monomial.support();
            let omitted: Vec<usize> = circuit
                .support
                .iter()
                .copied()
                .filter(|v| !support.contains(v))
                .collect();
            assert_eq!(omitted.len(), 1, "each term omits one variable");
            let j = circuit
                .support
                .iter()
                .position(|&v| v == omitted[0])
                .unwrap();
            assert_eq!(*coeff, circuit.dependency[j].value());
            assert!(monomial.is_squarefree());
        }
    }
}

#[test]
fn reduction_certifies_membership() {
    // f - normal_form(f, G) lies in the ideal: reducing it again gives zero,
    // and members themselves reduce to zero.
    let code = random_code_with_clean_dual(3, 6, 3, 3).unwrap();
    let pres = ot_ideal(&code).unwrap();
    let n = code.length();
    let ring = PolyRing::new(code.field(), n, TermOrder::standard(n));
    let gens: Vec<Polynomial> = pres
        .generators()
        .iter()
        .map(|(_, p)| ring.adopt(p))
        .collect();
    let gb = buchberger(&ring, &gens);
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..20 {
        // random combination of generators plus random noise polynomial
        let mut member = ring.zero();
        for g in &gens {
            let v = rng.gen_range(0..n);
            let c = rng.gen_range(0..code.field().modulus());
            member = ring.add(
                &member,
                &ring.mul_term(g, c, &otweights::poly::Monomial::var(n, v)),
            );
        }
        assert!(gb.normal_form(&member).is_zero(), "members reduce to zero");

        let noise = ring.poly_from_terms(vec![
            (
                rng.gen_range(1..code.field().modulus()),
                otweights::poly::Monomial::var(n, rng.gen_range(0..n)),
            ),
            (1, otweights::poly::Monomial::from_set(n, &[0, 1])),
        ]);
        let f = ring.add(&member, &noise);
        let nf = gb.normal_form(&f);
        let difference = ring.sub(&f, &nf);
        assert!(
            gb.normal_form(&difference).is_zero(),
            "f - nf(f) lies in the ideal"
        );
        assert_eq!(gb.normal_form(&nf), nf, "normal forms are fixed points");
    }
}
