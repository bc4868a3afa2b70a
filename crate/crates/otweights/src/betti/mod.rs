//! Graded Betti numbers and derived resolution invariants.
//!
//! Two engines populate the same table type: [`koszul::koszul_betti`]
//! computes Tor dimensions from Koszul strand homology for arbitrary
//! homogeneous ideals, and [`hochster::hochster_betti`] evaluates Hochster's
//! formula for square-free monomial ideals. The two must agree exactly on
//! their common domain; the test suites enforce this.

pub mod hochster;
pub mod koszul;

use crate::error::{Error, Result};
use crate::hilbert::{eval_at_one, strip_poles};
use crate::poly::Monomial;
use crate::subsets::binomial;
use std::collections::BTreeMap;

/// Map (homological degree i, internal degree j) -> beta_{i,j}(S/I).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, usize), u64>,
    pub i_max: usize,
    pub j_max: usize,
    /// Set when some beta_{i, j_max} is nonzero, i.e. the table may continue
    /// past the computed window.
    pub truncated: bool,
    /// The prime the homology ranks were computed over.
    pub field_modulus: u64,
    pub nvars: usize,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn pdim(&self) -> usize {
        self.entries
            .iter()
            .filter(|(_, &b)| b > 0)
            .map(|(&(i, _), _)| i)
            .max()
            .unwrap_or(0)
    }

    /// Alternating column sums: the numerator of HS * (1-s)^nvars.
    pub fn kpoly(&self) -> Vec<i64> {
        let jmax = self
            .entries
            .iter()
            .filter(|(_, &b)| b > 0)
            .map(|(&(_, j), _)| j)
            .max()
            .unwrap_or(0);
        let mut out = vec![0i64; jmax + 1];
        for (&(i, j), &b) in &self.entries {
            if b == 0 {
                continue;
            }
            let signed = if i % 2 == 0 { b as i64 } else { -(b as i64) };
            out[j] += signed;
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    /// Sorted [i, j, beta] triples, zeros dropped.
    pub fn triples(&self) -> Vec<[u64; 3]> {
        self.entries
            .iter()
            .filter(|(_, &b)| b > 0)
            .map(|(&(i, j), &b)| [i as u64, j as u64, b])
            .collect()
    }

    /// Macaulay-style text: rows indexed by j - i, columns by i.
    pub fn render(&self) -> String {
        let nonzero: Vec<((usize, usize), u64)> = self
            .entries
            .iter()
            .filter(|(_, &b)| b > 0)
            .map(|(&k, &b)| (k, b))
            .collect();
        if nonzero.is_empty() {
            return "empty Betti table\n".into();
        }
        let max_i = nonzero.iter().map(|&((i, _), _)| i).max().unwrap();
        let max_row = nonzero.iter().map(|&((i, j), _)| j - i).max().unwrap();
        let mut out = String::new();
        out.push_str("      ");
        for i in 0..=max_i {
            out.push_str(&format!("{i:>6}"));
        }
        out.push('\n');
        for row in 0..=max_row {
            out.push_str(&format!("{row:>4}: "));
            for i in 0..=max_i {
                let b = self.get(i, i + row);
                if b == 0 {
                    out.push_str("     .");
                } else {
                    out.push_str(&format!("{b:>6}"));
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Shifts and invariants read off a complete Betti table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionSummary {
    /// Minimal shifts t_1..t_p.
    pub t: Vec<usize>,
    /// Maximal shifts T_1..T_p.
    pub big_t: Vec<usize>,
    pub pdim: usize,
    pub reg: usize,
    pub multiplicity: i64,
    /// Krull dimension of the quotient (pole order of its Hilbert series).
    pub dim: usize,
    /// Cohen-Macaulay: pdim equals the codimension.
    pub cm: bool,
}

/// Derives shifts, regularity, projective dimension, multiplicity and the
/// Cohen-Macaulay flag. Errors on truncated input.
pub fn summarize(table: &BettiTable, nvars: usize) -> Result<ResolutionSummary> {
    if table.truncated {
        return Err(Error::Truncated(table.j_max));
    }
    assert_eq!(table.get(0, 0), 1, "beta_{{0,0}} must be 1");
    let pdim = table.pdim();
    let mut t = Vec::with_capacity(pdim);
    let mut big_t = Vec::with_capacity(pdim);
    for i in 1..=pdim {
        let js: Vec<usize> = table
            .entries
            .iter()
            .filter(|(&(row, _), &b)| row == i && b > 0)
            .map(|(&(_, j), _)| j)
            .collect();
        assert!(!js.is_empty(), "resolution rows cannot have gaps");
        t.push(*js.iter().min().unwrap());
        big_t.push(*js.iter().max().unwrap());
    }
    assert!(
        t.windows(2).all(|w| w[0] < w[1]),
        "minimal shifts must strictly increase"
    );
    let reg = (1..=pdim)
        .map(|i| big_t[i - 1] - i)
        .max()
        .unwrap_or(0);
    let (codim, reduced) = strip_poles(&table.kpoly());
    let multiplicity = eval_at_one(&reduced);
    let dim = nvars - codim;
    Ok(ResolutionSummary {
        t,
        big_t,
        pdim,
        reg,
        multiplicity,
        dim,
        cm: pdim == codim,
    })
}

/// Exact rational bounds of the multiplicity conjecture evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub lower_product: u128,
    pub upper_product: u128,
    pub factorial: u128,
    pub multiplicity: i64,
    pub holds: bool,
}

impl std::fmt::Display for MultiplicityReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}/{} <= {} <= {}/{}: {}",
            self.lower_product,
            self.factorial,
            self.multiplicity,
            self.upper_product,
            self.factorial,
            if self.holds { "holds" } else { "VIOLATED" }
        )
    }
}

/// Checks prod(t_i)/p! <= e(S/I) <= prod(T_i)/p! for a Cohen-Macaulay
/// quotient. A violation is reported in the result, not raised as an error;
/// calling this on a non-CM summary is an error.
pub fn multiplicity_conjecture_check(summary: &ResolutionSummary, nvars: usize) -> Result<MultiplicityReport> {
    if !summary.cm {
        return Err(Error::NotCM {
            pdim: summary.pdim,
            codim: nvars - summary.dim,
        });
    }
    let factorial: u128 = (1..=summary.pdim as u128).product();
    let lower: u128 = summary.t.iter().map(|&x| x as u128).product();
    let upper: u128 = summary.big_t.iter().map(|&x| x as u128).product();
    let e = summary.multiplicity;
    let holds = e >= 0 && lower <= e as u128 * factorial && e as u128 * factorial <= upper;
    Ok(MultiplicityReport {
        lower_product: lower,
        upper_product: upper,
        factorial,
        multiplicity: e,
        holds,
    })
}

/// Verifies that the alternating Betti sums reproduce the Hilbert series of
/// the quotient (numerator computed termwise from standard monomial counts)
/// up to `degree_bound`, and optionally that the face-count series of a
/// complex agrees with the same Hilbert function.
pub fn hs_check(
    table: &BettiTable,
    init: &[Monomial],
    nvars: usize,
    degree_bound: usize,
    fvector: Option<&[u64]>,
) -> Result<()> {
    if table.truncated {
        return Err(Error::Truncated(table.j_max));
    }
    let hf: Vec<i64> = (0..=degree_bound)
        .map(|m| crate::groebner::hilbert_function(init, m as u32, nvars) as i64)
        .collect();
    let kpoly = table.kpoly();
    for j in 0..=degree_bound {
        let mut expected: i64 = 0;
        for t in 0..=j.min(nvars) {
            let sign = if t % 2 == 0 { 1i64 } else { -1 };
            expected += sign * binomial(nvars as u64, t as u64) as i64 * hf[j - t];
        }
        let got = kpoly.get(j).copied().unwrap_or(0);
        if got != expected {
            return Err(Error::HilbertMismatch {
                degree: j,
                lhs: got,
                rhs: expected,
                context: "alternating Betti sums vs standard monomial counts".into(),
            });
        }
    }
    if let Some(f) = fvector {
        for m in 0..=degree_bound {
            let from_faces: i64 = if m == 0 {
                *f.first().unwrap_or(&0) as i64
            } else {
                f.iter()
                    .enumerate()
                    .skip(1)
                    .map(|(i, &count)| count as i64 * binomial(m as u64 - 1, i as u64 - 1) as i64)
                    .sum()
            };
            if from_faces != hf[m] {
                return Err(Error::HilbertMismatch {
                    degree: m,
                    lhs: from_faces,
                    rhs: hf[m],
                    context: "face-count series vs standard monomial counts".into(),
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(entries: &[(usize, usize, u64)], nvars: usize) -> BettiTable {
        let mut map = BTreeMap::new();
        map.insert((0, 0), 1);
        for &(i, j, b) in entries {
            map.insert((i, j), b);
        }
        BettiTable {
            entries: map,
            i_max: nvars,
            j_max: nvars + 2,
            truncated: false,
            field_modulus: 3,
            nvars,
        }
    }

    #[test]
    fn summary_of_published_ot_table() {
        // 0 -> S^3(-6) -> S(-4) + S^5(-5) -> S^2(-2) + S(-3) + S(-4) -> S
        let t = table(
            &[(1, 2, 2), (1, 3, 1), (1, 4, 1), (2, 4, 1), (2, 5, 5), (3, 6, 3)],
            7,
        );
        let s = summarize(&t, 7).unwrap();
        assert_eq!(s.t, vec![2, 4, 6]);
        assert_eq!(s.big_t, vec![4, 5, 6]);
        assert_eq!(s.pdim, 3);
        assert_eq!(s.reg, 3);
        assert_eq!(s.dim, 4);
        assert!(s.cm);
        assert_eq!(s.multiplicity, 11);
        let report = multiplicity_conjecture_check(&s, 7).unwrap();
        assert_eq!(report.lower_product, 48);
        assert_eq!(report.upper_product, 120);
        assert_eq!(report.factorial, 6);
        assert!(report.holds);
    }

    #[test]
    fn summary_of_zero_ideal() {
        let t = table(&[], 5);
        let s = summarize(&t, 5).unwrap();
        assert_eq!(s.pdim, 0);
        assert_eq!(s.reg, 0);
        assert_eq!(s.dim, 5);
        assert_eq!(s.multiplicity, 1);
        assert!(s.cm);
    }

    #[test]
    fn complete_intersection_collapses_bounds() {
        // Two quadrics in two variables: Koszul resolution, e = 4.
        let t = table(&[(1, 2, 2), (2, 4, 1)], 2);
        let s = summarize(&t, 2).unwrap();
        assert_eq!(s.t, vec![2, 4]);
        assert_eq!(s.big_t, vec![2, 4]);
        assert!(s.cm);
        assert_eq!(s.multiplicity, 4);
        let report = multiplicity_conjecture_check(&s, 2).unwrap();
        assert_eq!(report.lower_product, report.upper_product);
        assert!(report.holds);
    }

    #[test]
    fn truncated_tables_are_rejected() {
        let mut t = table(&[(1, 2, 1)], 3);
        t.truncated = true;
        assert!(matches!(summarize(&t, 3), Err(Error::Truncated(_))));
    }

    #[test]
    fn non_cm_is_rejected_by_the_conjecture_check() {
        // pdim 2 but codim 1: not CM.
        let t = table(&[(1, 2, 1), (2, 3, 1)], 4);
        let s = summarize(&t, 4).unwrap();
        assert!(!s.cm);
        assert!(matches!(
            multiplicity_conjecture_check(&s, 4),
            Err(Error::NotCM { .. })
        ));
    }

    #[test]
    fn render_shape() {
        let t = table(&[(1, 2, 2), (2, 4, 1)], 4);
        let text = t.render();
        assert!(text.contains("0:"));
        assert!(text.lines().count() >= 3);
    }
}
