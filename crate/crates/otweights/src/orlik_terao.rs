//! The Orlik-Terao ideal of the arrangement dual to a parity-check matrix,
//! presented by the boundary polynomials of the matroid circuits. By the
//! Proudfoot-Speyer theorem these generators are a universal Groebner basis;
//! `check_proudfoot_speyer` verifies that claim computationally for a given
//! order instead of assuming it.

use crate::codes::{parity_check, LinearCode};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::groebner::{buchberger, initial_ideal};
use crate::matrix::DenseMatrix;
use crate::matroid::{broken_circuits, circuits, Circuit, VectorMatroid};
use crate::poly::{Monomial, Polynomial, PolyRing, TermOrder};

/// Circuit presentation of an Orlik-Terao ideal in K[y_1..y_n].
#[derive(Debug, Clone)]
pub struct OTPresentation {
    ring: PolyRing,
    check_matrix: DenseMatrix,
    generators: Vec<(Circuit, Polynomial)>,
}

/// Outcome of the universal-Groebner-basis verification for one order.
#[derive(Debug, Clone)]
pub struct PsCheck {
    /// No S-polynomial contributed a new leading monomial.
    pub holds: bool,
    /// Minimal monomial generators of the initial ideal.
    pub initial: Vec<Monomial>,
    /// The initial ideal coincides with the broken-circuit ideal.
    pub matches_broken_circuits: bool,
}

impl OTPresentation {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn check_matrix(&self) -> &DenseMatrix {
        &self.check_matrix
    }

    pub fn generators(&self) -> &[(Circuit, Polynomial)] {
        &self.generators
    }

    pub fn circuits(&self) -> Vec<Circuit> {
        self.generators.iter().map(|(c, _)| c.clone()).collect()
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.generators.iter().map(|(_, p)| p.clone()).collect()
    }
}

/// The boundary of a dependency sum_j a_j y_{i_j}: the alternating-free sum
/// sum_j a_j * prod_{l != j} y_{i_l}, homogeneous of degree u-1 with exactly
/// u square-free terms.
pub fn del_operator(ring: &PolyRing, support: &[usize], coeffs: &[Scalar]) -> Result<Polynomial> {
    if support.len() < 2 || support.len() != coeffs.len() {
        return Err(Error::MalformedDependency);
    }
    if coeffs.iter().any(Scalar::is_zero) {
        return Err(Error::MalformedDependency);
    }
    debug_assert!(support.windows(2).all(|w| w[0] < w[1]));
    let terms = coeffs
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let rest: Vec<usize> = support
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != j)
                .map(|(_, &v)| v)
                .collect();
            (c.value(), Monomial::from_set(ring.nvars(), &rest))
        })
        .collect();
    let poly = ring.poly_from_terms(terms);
    debug_assert_eq!(poly.len(), support.len());
    debug_assert!(poly.is_homogeneous());
    Ok(poly)
}

/// Builds the Orlik-Terao presentation for the dual arrangement of a code:
/// one generator per circuit of the parity-check matroid. Requires d >= 2,
/// equivalently no zero column in the check matrix.
pub fn ot_ideal(code: &LinearCode) -> Result<OTPresentation> {
    let h = parity_check(code)?;
    ot_ideal_from_check(&h)
}

/// Same construction starting from an explicit check matrix.
pub fn ot_ideal_from_check(h: &DenseMatrix) -> Result<OTPresentation> {
    let n = h.cols();
    if (0..n).any(|c| h.column_is_zero(c)) {
        return Err(Error::DegenerateDual);
    }
    let matroid = VectorMatroid::new(h.clone());
    let all = circuits(&matroid)?;
    let ring = PolyRing::new(h.field(), n, TermOrder::standard(n));
    let generators = all
        .into_iter()
        .map(|c| {
            let poly = del_operator(&ring, &c.support, &c.dependency)?;
            Ok((c, poly))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OTPresentation {
        ring,
        check_matrix: h.clone(),
        generators,
    })
}

/// Initial degree: the smallest generator degree, i.e. the smallest circuit
/// size minus one.
pub fn alpha(pres: &OTPresentation) -> Result<usize> {
    pres.generators
        .iter()
        .map(|(c, _)| c.len() - 1)
        .min()
        .ok_or(Error::NoCircuits)
}

/// Runs Buchberger on the circuit generators under the given order and
/// reports whether they were already a Groebner basis (no new leading
/// monomials), together with the initial ideal and its comparison against
/// the broken-circuit ideal.
pub fn check_proudfoot_speyer(pres: &OTPresentation, order: &TermOrder) -> PsCheck {
    let ring = PolyRing::new(pres.ring.field(), pres.ring.nvars(), order.clone());
    let gens: Vec<Polynomial> = pres
        .generators
        .iter()
        .map(|(_, p)| ring.adopt(p))
        .collect();
    let gb = buchberger(&ring, &gens);
    let initial = initial_ideal(&gb);

    // Minimalized leading monomials of the inputs.
    let mut input_lms: Vec<Monomial> = gens
        .iter()
        .filter_map(|g| g.leading_monomial().cloned())
        .collect();
    input_lms.sort();
    input_lms.dedup();
    let input_lms: Vec<Monomial> = input_lms
        .iter()
        .filter(|m| !input_lms.iter().any(|d| d != *m && d.divides(m)))
        .cloned()
        .collect();

    let mut lhs = initial.clone();
    let mut rhs = input_lms;
    lhs.sort();
    rhs.sort();
    let holds = lhs == rhs;

    let circuits = pres.circuits();
    let bc = broken_circuits(&circuits, order);
    let mut bc_monomials: Vec<Monomial> = bc
        .minimal_nonfaces
        .iter()
        .map(|s| Monomial::from_set(pres.ring.nvars(), s))
        .collect();
    bc_monomials.sort();
    let matches_broken_circuits = lhs == bc_monomials;

    PsCheck {
        holds,
        initial,
        matches_broken_circuits,
    }
}
