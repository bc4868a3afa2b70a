//! Multivariate polynomials over F_p under graded reverse-lexicographic
//! orders with an arbitrary variable priority permutation.
//!
//! A polynomial is a list of (coefficient, monomial) terms kept strictly
//! decreasing in the ambient order, so equality of canonical forms is plain
//! structural equality. All arithmetic goes through a [`PolyRing`] context
//! carrying the field, the variable count, and the order.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use std::cmp::Ordering;

/// Exponent vector. The 1-monomial has all-zero exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[v] = 1;
        m
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// Square-free monomial supported on the given set.
    pub fn from_set(nvars: usize, set: &[usize]) -> Self {
        let mut m = Self::one(nvars);
        for &v in set {
            m.exps[v] = 1;
        }
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&v| self.exps[v] > 0).collect()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Graded reverse-lexicographic order with respect to a variable priority
/// permutation; `priority[0]` is the greatest variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermOrder {
    priority: Vec<usize>,
    rank: Vec<usize>,
}

impl TermOrder {
    /// y1 > y2 > ... > yn.
    pub fn standard(nvars: usize) -> Self {
        Self::new((0..nvars).collect()).expect("identity is a permutation")
    }

    pub fn new(priority: Vec<usize>) -> Result<Self> {
        let n = priority.len();
        let mut rank = vec![usize::MAX; n];
        for (pos, &v) in priority.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(Error::BadCodeFile(format!(
                    "order is not a permutation of 1..={n}"
                )));
            }
            rank[v] = pos;
        }
        Ok(TermOrder { priority, rank })
    }

    /// Accepts the external convention: variable indices 1..=n listed from
    /// greatest to least priority.
    pub fn from_one_based(order: &[usize]) -> Result<Self> {
        if order.iter().any(|&v| v == 0) {
            return Err(Error::BadCodeFile("order indices are 1-based".into()));
        }
        Self::new(order.iter().map(|&v| v - 1).collect())
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.priority.iter().map(|&v| v + 1).collect()
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    /// Position of the variable in the priority list; 0 is greatest.
    pub fn rank_of_var(&self, v: usize) -> usize {
        self.rank[v]
    }

    /// Degree first; ties broken reverse-lexicographically, scanning from the
    /// least-priority variable: the first difference found makes the monomial
    /// with the *smaller* exponent the greater one.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), self.nvars());
        debug_assert_eq!(b.nvars(), self.nvars());
        match a.degree().cmp(&b.degree()) {
            Ordering::Equal => {}
            other => return other,
        }
        for &v in self.priority.iter().rev() {
            match a.exps[v].cmp(&b.exps[v]) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {}
            }
        }
        Ordering::Equal
    }

    /// Order on the ring with `var` removed (indices above it shift down).
    pub fn drop_var(&self, var: usize) -> TermOrder {
        let priority = self
            .priority
            .iter()
            .filter(|&&v| v != var)
            .map(|&v| if v > var { v - 1 } else { v })
            .collect();
        TermOrder::new(priority).expect("dropping a variable keeps a permutation")
    }
}

/// Context for polynomial arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    field: PrimeField,
    nvars: usize,
    order: TermOrder,
}

/// Terms strictly decreasing in the ring order, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    terms: Vec<(u64, Monomial)>,
}

impl PolyRing {
    pub fn new(field: PrimeField, nvars: usize, order: TermOrder) -> Self {
        assert_eq!(order.nvars(), nvars);
        PolyRing {
            field,
            nvars,
            order,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        self.poly_from_terms(vec![(self.field.reduce(c), Monomial::one(self.nvars))])
    }

    pub fn variable(&self, v: usize) -> Polynomial {
        self.poly_from_terms(vec![(1, Monomial::var(self.nvars, v))])
    }

    pub fn monomial_poly(&self, m: Monomial) -> Polynomial {
        self.poly_from_terms(vec![(1, m)])
    }

    /// Canonicalizes an arbitrary term list: sorts, combines duplicates,
    /// drops zeros.
    pub fn poly_from_terms(&self, mut terms: Vec<(u64, Monomial)>) -> Polynomial {
        terms.retain(|(c, _)| *c % self.field.modulus() != 0);
        terms.sort_by(|a, b| self.order.cmp(&b.1, &a.1));
        let mut out: Vec<(u64, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            let c = c % self.field.modulus();
            match out.last_mut() {
                Some((lc, lm)) if *lm == m => {
                    *lc = self.field.add(*lc, c);
                }
                _ => out.push((c, m)),
            }
        }
        out.retain(|(c, _)| *c != 0);
        Polynomial { terms: out }
    }

    /// Re-canonicalizes a polynomial coming from a ring with another order.
    pub fn adopt(&self, poly: &Polynomial) -> Polynomial {
        self.poly_from_terms(poly.terms.clone())
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let mut terms = Vec::with_capacity(f.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < f.terms.len() && j < g.terms.len() {
            match self.order.cmp(&f.terms[i].1, &g.terms[j].1) {
                Ordering::Greater => {
                    terms.push(f.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(g.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.field.add(f.terms[i].0, g.terms[j].0);
                    if c != 0 {
                        terms.push((c, f.terms[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&f.terms[i..]);
        terms.extend_from_slice(&g.terms[j..]);
        Polynomial { terms }
    }

    pub fn negate(&self, f: &Polynomial) -> Polynomial {
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|(c, m)| (self.field.neg(*c), m.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.add(f, &self.negate(g))
    }

    /// f times the single term c * m.
    pub fn mul_term(&self, f: &Polynomial, c: u64, m: &Monomial) -> Polynomial {
        if c == 0 {
            return self.zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|(fc, fm)| (self.field.mul(*fc, c), fm.mul(m)))
                .collect(),
        }
    }

    pub fn scale(&self, f: &Polynomial, c: u64) -> Polynomial {
        self.mul_term(f, c, &Monomial::one(self.nvars))
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let mut acc = self.zero();
        for (c, m) in &f.terms {
            acc = self.add(&acc, &self.mul_term(g, *c, m));
        }
        acc
    }

    pub fn monic(&self, f: &Polynomial) -> Polynomial {
        match f.leading() {
            None => self.zero(),
            Some((lc, _)) => self.scale(f, self.field.inv(lc)),
        }
    }

    /// True when g = c * f for a nonzero scalar c.
    pub fn proportional(&self, f: &Polynomial, g: &Polynomial) -> bool {
        if f.terms.len() != g.terms.len() {
            return false;
        }
        if f.is_zero() {
            return true;
        }
        let c = self.field.div(g.terms[0].0, f.terms[0].0);
        f.terms
            .iter()
            .zip(&g.terms)
            .all(|((fc, fm), (gc, gm))| fm == gm && self.field.mul(*fc, c) == *gc)
    }

    /// Substitutes `replacement` for the variable `var`.
    pub fn substitute(&self, f: &Polynomial, var: usize, replacement: &Polynomial) -> Polynomial {
        let mut acc = self.zero();
        for (c, m) in &f.terms {
            let e = m.exponents()[var];
            let mut rest = m.clone();
            rest.exps[var] = 0;
            let mut part = self.poly_from_terms(vec![(*c, rest)]);
            for _ in 0..e {
                part = self.mul(&part, replacement);
            }
            acc = self.add(&acc, &part);
        }
        acc
    }

    /// Moves a polynomial with no occurrence of `var` into the ring with that
    /// variable deleted.
    pub fn drop_variable(&self, f: &Polynomial, var: usize) -> Polynomial {
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|(c, m)| {
                    debug_assert_eq!(m.exponents()[var], 0);
                    let exps: Vec<u32> = m
                        .exponents()
                        .iter()
                        .enumerate()
                        .filter(|&(v, _)| v != var)
                        .map(|(_, &e)| e)
                        .collect();
                    (*c, Monomial::from_exponents(exps))
                })
                .collect(),
        }
    }

    /// Renders with variables y1..yn, terms in decreasing order, p-1 shown
    /// as a minus sign.
    pub fn render(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let p = self.field.modulus();
        let mut out = String::new();
        for (idx, (c, m)) in f.terms.iter().enumerate() {
            let negative = p > 2 && *c == p - 1;
            let body = {
                let mono = render_monomial(m);
                if mono.is_empty() {
                    format!("{c}")
                } else if *c == 1 || negative {
                    mono
                } else {
                    format!("{c}*{mono}")
                }
            };
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&body);
        }
        out
    }
}

fn render_monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (v, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("y{}", v + 1)),
            _ => parts.push(format!("y{}^{}", v + 1, e)),
        }
    }
    parts.join("*")
}

impl Polynomial {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(u64, Monomial)] {
        &self.terms
    }

    pub fn leading(&self) -> Option<(u64, &Monomial)> {
        self.terms.first().map(|(c, m)| (*c, m))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m0)) => {
                let d = m0.degree();
                self.terms.iter().all(|(_, m)| m.degree() == d)
            }
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}
