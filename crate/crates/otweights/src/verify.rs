//! The verification pipeline: runs every computation on a code, evaluates
//! the identities and bounds tying the weight hierarchy to the resolution
//! invariants of the dual-arrangement ideals, and assembles a deterministic
//! report.
//!
//! Conjectural statements are *reported*, never asserted: a counterexample
//! is surfaced prominently in the report but does not fail the run.

use crate::betti::hochster::hochster_betti;
use crate::betti::koszul::koszul_betti;
use crate::betti::{
    hs_check, multiplicity_conjecture_check, summarize, BettiTable, ResolutionSummary,
};
use crate::codes::{
    code_params, ghw_generator, ghw_subcode_oracle, min_distance, parity_check, Caps, CodeParams,
    LinearCode,
};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::{buchberger, initial_ideal, GroebnerBasis};
use crate::hilbert::hilbert_numerator;
use crate::matrix::DenseMatrix;
use crate::matroid::{broken_circuits, circuits, components, loops, nbc_f_vector, Circuit, VectorMatroid};
use crate::orlik_terao::{alpha, check_proudfoot_speyer, ot_ideal_from_check, PsCheck};
use crate::poly::{Polynomial, PolyRing, TermOrder};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub const CHECK_NAMES: [&str; 11] = [
    "ghw_consistency",
    "thm_2_3",
    "thm_3_4",
    "jove_identity",
    "prs_universal",
    "macaulay_hs",
    "dk_identity",
    "reg_identity",
    "cm_pdim",
    "conjecture",
    "mult_conj",
];

/// Number of randomly sampled variable orders for the universality check.
const SAMPLED_ORDERS: usize = 10;
/// Degree window for the termwise Hilbert series comparisons.
const HS_DEGREE_BOUND: usize = 10;

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub order: TermOrder,
    pub jmax: Option<usize>,
    pub seed: u64,
    pub caps: Caps,
}

impl VerifyOptions {
    pub fn new(n: usize) -> Self {
        VerifyOptions {
            order: TermOrder::standard(n),
            jmax: None,
            seed: 0,
            caps: Caps::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Reported,
    Skipped,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub details: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub ghw: Vec<usize>,
    pub degenerate: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<usize>,
    pub betti: Vec<[u64; 3]>,
    pub t: Vec<usize>,
    #[serde(rename = "T")]
    pub big_t: Vec<usize>,
    pub pdim: usize,
    pub reg: usize,
    pub multiplicity: i64,
    pub cm: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub params: ReportParams,
    /// 1-based circuit supports, by increasing size then colex.
    pub circuits: Vec<Vec<usize>>,
    pub ot: Option<IdealReport>,
    pub sr: IdealReport,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// True when some check among the first nine (the theorems and computed
    /// facts) failed; reported findings never count.
    pub fn has_hard_failure(&self) -> bool {
        self.checks
            .iter()
            .take(9)
            .any(|c| c.status == CheckStatus::Fail)
    }
}

fn ideal_report(summary: &ResolutionSummary, table: &BettiTable, alpha: Option<usize>) -> IdealReport {
    IdealReport {
        alpha,
        betti: table.triples(),
        t: summary.t.clone(),
        big_t: summary.big_t.clone(),
        pdim: summary.pdim,
        reg: summary.reg,
        multiplicity: summary.multiplicity,
        cm: summary.cm,
    }
}

/// Everything the checks consume, computed once.
struct Workspace {
    params: CodeParams,
    circuits: Vec<Circuit>,
    /// Zero columns of the generator matrix: coordinates outside the support
    /// of the code. These are exactly the loops of the code's own matroid,
    /// and d_k = n minus their number.
    generator_loops: usize,
    component_count: usize,
    sr_table: BettiTable,
    sr_summary: ResolutionSummary,
    /// Populated when d >= 2 and every computation succeeded.
    ot: std::result::Result<OtWorkspace, String>,
}

struct OtWorkspace {
    groebner: GroebnerBasis,
    table: BettiTable,
    summary: ResolutionSummary,
    alpha: usize,
    /// Proudfoot-Speyer verification per order: the requested order first,
    /// then the sampled ones.
    ps_checks: Vec<(TermOrder, PsCheck)>,
}

pub fn sampled_orders(n: usize, seed: u64, count: usize) -> Vec<TermOrder> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            TermOrder::new(perm).expect("shuffled permutation")
        })
        .collect()
}

fn build_workspace(code: &LinearCode, opts: &VerifyOptions) -> Result<Workspace> {
    let n = code.length();
    let k = code.dimension();
    let params = code_params(code, &opts.caps)?;
    let check_matrix = if k < n {
        parity_check(code)?
    } else {
        DenseMatrix::zero(code.field(), 0, n)
    };
    let matroid = VectorMatroid::new(check_matrix.clone());
    let all_circuits = circuits(&matroid)?;
    let generator_loops = loops(&VectorMatroid::new(code.generator().clone())).len();
    let component_count = components(&all_circuits, n).count();

    let nonfaces: Vec<Vec<usize>> = all_circuits.iter().map(|c| c.support.clone()).collect();
    let sr_table = hochster_betti(&nonfaces, n, code.field());
    let sr_summary = summarize(&sr_table, n)?;

    let ot = if params.d < 2 {
        Err("minimum distance 1: the dual arrangement is degenerate".to_string())
    } else {
        build_ot_workspace(code.field(), &check_matrix, n, opts).map_err(|e| e.to_string())
    };

    Ok(Workspace {
        params,
        circuits: all_circuits,
        generator_loops,
        component_count,
        sr_table,
        sr_summary,
        ot,
    })
}

fn build_ot_workspace(
    field: PrimeField,
    check_matrix: &DenseMatrix,
    n: usize,
    opts: &VerifyOptions,
) -> Result<OtWorkspace> {
    let presentation = ot_ideal_from_check(check_matrix)?;
    let ring = PolyRing::new(field, n, opts.order.clone());
    let gens: Vec<Polynomial> = presentation
        .generators()
        .iter()
        .map(|(_, p)| ring.adopt(p))
        .collect();
    let groebner = buchberger(&ring, &gens);
    let jmax = opts.jmax.unwrap_or(n + 2);
    let table = koszul_betti(&groebner, n, jmax)?;
    let summary = summarize(&table, n)?;
    let a = alpha(&presentation)?;

    let mut ps_checks = Vec::with_capacity(SAMPLED_ORDERS + 1);
    ps_checks.push((
        opts.order.clone(),
        check_proudfoot_speyer(&presentation, &opts.order),
    ));
    for order in sampled_orders(n, opts.seed, SAMPLED_ORDERS) {
        let result = check_proudfoot_speyer(&presentation, &order);
        ps_checks.push((order, result));
    }

    Ok(OtWorkspace {
        groebner,
        table,
        summary,
        alpha: a,
        ps_checks,
    })
}

fn pass(name: &str, details: String) -> CheckResult {
    CheckResult {
        name: name.into(),
        status: CheckStatus::Pass,
        details,
    }
}

fn fail(name: &str, details: String) -> CheckResult {
    CheckResult {
        name: name.into(),
        status: CheckStatus::Fail,
        details,
    }
}

fn skipped(name: &str, details: String) -> CheckResult {
    CheckResult {
        name: name.into(),
        status: CheckStatus::Skipped,
        details,
    }
}

fn reported(name: &str, details: String) -> CheckResult {
    CheckResult {
        name: name.into(),
        status: CheckStatus::Reported,
        details,
    }
}

fn verdict(name: &str, ok: bool, details: String) -> CheckResult {
    if ok {
        pass(name, details)
    } else {
        fail(name, details)
    }
}

/// Runs every check and assembles the report. Input errors (caps, malformed
/// codes) surface as `Err`; failures of individual identities are statuses
/// inside the report.
pub fn verify(code: &LinearCode, opts: &VerifyOptions) -> Result<VerificationReport> {
    let ws = build_workspace(code, opts)?;
    let n = ws.params.n;
    let k = ws.params.k;
    let mut checks = Vec::with_capacity(CHECK_NAMES.len());

    // 1. ghw_consistency: three routes agree.
    checks.push(check_ghw_consistency(code, &ws, opts));

    let ot_skip = |name: &str, reason: &String| skipped(name, reason.clone());

    // 2. thm_2_3: d = alpha + 1.
    checks.push(match &ws.ot {
        Err(reason) => ot_skip("thm_2_3", reason),
        Ok(ot) => verdict(
            "thm_2_3",
            ws.params.d == ot.alpha + 1,
            format!("d = {}, alpha = {}", ws.params.d, ot.alpha),
        ),
    });

    // 3. thm_3_4: t_2 + 1 <= d_2 <= t_2 + 2.
    checks.push(match &ws.ot {
        Err(reason) => ot_skip("thm_3_4", reason),
        Ok(ot) => {
            if k < 2 {
                skipped("thm_3_4", "k = 1: no second weight".into())
            } else if ot.summary.t.len() < 2 {
                fail(
                    "thm_3_4",
                    format!("projective dimension {} < 2", ot.summary.pdim),
                )
            } else {
                let t2 = ot.summary.t[1];
                let d2 = ws.params.ghw[1];
                verdict(
                    "thm_3_4",
                    t2 + 1 <= d2 && d2 <= t2 + 2,
                    format!("t_2 = {t2}, d_2 = {d2}"),
                )
            }
        }
    });

    // 4. jove_identity: d_r = t_r of the circuit Stanley-Reisner ideal.
    checks.push(verdict(
        "jove_identity",
        ws.sr_summary.t == ws.params.ghw,
        format!(
            "weights {:?} vs Stanley-Reisner shifts {:?}",
            ws.params.ghw, ws.sr_summary.t
        ),
    ));

    // 5. prs_universal: circuit generators form a Groebner basis under the
    // requested order and the sampled ones.
    checks.push(match &ws.ot {
        Err(reason) => ot_skip("prs_universal", reason),
        Ok(ot) => {
            let bad: Vec<String> = ot
                .ps_checks
                .iter()
                .filter(|(_, c)| !c.holds || !c.matches_broken_circuits)
                .map(|(order, _)| format!("{:?}", order.one_based()))
                .collect();
            verdict(
                "prs_universal",
                bad.is_empty(),
                if bad.is_empty() {
                    format!("verified on {} orders", ot.ps_checks.len())
                } else {
                    format!("failed for orders: {}", bad.join("; "))
                },
            )
        }
    });

    // 6. macaulay_hs: Hilbert series equalities across the quotient, its
    // initial ideals and the broken-circuit complex.
    checks.push(match &ws.ot {
        Err(reason) => ot_skip("macaulay_hs", reason),
        Ok(ot) => check_macaulay_hs(&ws, ot, n),
    });

    // 7. dk_identity: d_k = n - loops.
    checks.push(if k == n {
        skipped("dk_identity", "code equals the full space: no check matrix".into())
    } else {
        verdict(
            "dk_identity",
            ws.params.ghw[k - 1] == n - ws.generator_loops,
            format!(
                "d_k = {}, n - loops = {}",
                ws.params.ghw[k - 1],
                n - ws.generator_loops
            ),
        )
    });

    // 8. reg_identity: reg = n - k - c and n = T_k + c.
    checks.push(match &ws.ot {
        Err(reason) => ot_skip("reg_identity", reason),
        Ok(ot) => {
            let c = ws.component_count;
            if ot.summary.big_t.len() < k {
                fail(
                    "reg_identity",
                    format!("projective dimension {} < k = {k}", ot.summary.pdim),
                )
            } else {
                let reg_ok = ot.summary.reg == n - k - c;
                let tk_ok = n == ot.summary.big_t[k - 1] + c;
                verdict(
                    "reg_identity",
                    reg_ok && tk_ok,
                    format!(
                        "reg = {}, n-k-c = {}, T_k = {}, c = {c}",
                        ot.summary.reg,
                        n - k - c,
                        ot.summary.big_t[k - 1]
                    ),
                )
            }
        }
    });

    // 9. cm_pdim: the quotient is Cohen-Macaulay of projective dimension k.
    checks.push(match &ws.ot {
        Err(reason) => ot_skip("cm_pdim", reason),
        Ok(ot) => verdict(
            "cm_pdim",
            ot.summary.pdim == k && ot.summary.cm,
            format!("pdim = {}, k = {k}, cm = {}", ot.summary.pdim, ot.summary.cm),
        ),
    });

    // 10. conjecture: d_r >= t_r + 1 for every r (open statement; reported).
    checks.push(match &ws.ot {
        Err(reason) => ot_skip("conjecture", reason),
        Ok(ot) => {
            if ot.summary.t.len() != k {
                reported(
                    "conjecture",
                    format!("not evaluated: pdim {} != k = {k}", ot.summary.pdim),
                )
            } else {
                let margins: Vec<i64> = (0..k)
                    .map(|r| ws.params.ghw[r] as i64 - ot.summary.t[r] as i64)
                    .collect();
                let ok = margins.iter().all(|&m| m >= 1);
                reported(
                    "conjecture",
                    if ok {
                        format!("holds: d_r - t_r = {margins:?}")
                    } else {
                        format!("COUNTEREXAMPLE: d_r - t_r = {margins:?}")
                    },
                )
            }
        }
    });

    // 11. mult_conj: multiplicity bounds for the Cohen-Macaulay quotient.
    checks.push(match &ws.ot {
        Err(reason) => ot_skip("mult_conj", reason),
        Ok(ot) => match multiplicity_conjecture_check(&ot.summary, n) {
            Err(e) => reported("mult_conj", format!("not evaluated: {e}")),
            Ok(report) => reported(
                "mult_conj",
                if report.holds {
                    format!("holds: {report}")
                } else {
                    format!("COUNTEREXAMPLE: {report}")
                },
            ),
        },
    });

    debug_assert_eq!(checks.len(), CHECK_NAMES.len());
    debug_assert!(checks
        .iter()
        .zip(CHECK_NAMES.iter())
        .all(|(c, &n)| c.name == n));

    let ot_report = match &ws.ot {
        Err(_) => None,
        Ok(ot) => Some(ideal_report(&ot.summary, &ot.table, Some(ot.alpha))),
    };
    Ok(VerificationReport {
        params: ReportParams {
            n,
            k,
            d: ws.params.d,
            ghw: ws.params.ghw.clone(),
            degenerate: ws.params.degenerate,
        },
        circuits: ws
            .circuits
            .iter()
            .map(|c| c.support.iter().map(|&v| v + 1).collect())
            .collect(),
        ot: ot_report,
        sr: ideal_report(&ws.sr_summary, &ws.sr_table, None),
        checks,
    })
}

fn check_ghw_consistency(code: &LinearCode, ws: &Workspace, opts: &VerifyOptions) -> CheckResult {
    let name = "ghw_consistency";
    let k = ws.params.k;
    let mut oracle_note = String::new();
    for r in 1..=k {
        let expected = ws.params.ghw[r - 1];
        match ghw_generator(code, r, &opts.caps) {
            Err(e) => return fail(name, format!("generator route failed at r = {r}: {e}")),
            Ok(v) if v != expected => {
                return fail(
                    name,
                    format!("generator route gives d_{r} = {v}, check-matrix route {expected}"),
                )
            }
            Ok(_) => {}
        }
        match ghw_subcode_oracle(code, r, &opts.caps) {
            Err(Error::TooLarge { .. }) => {
                oracle_note = format!("; subcode oracle capped beyond r = {}", r - 1);
                break;
            }
            Err(e) => return fail(name, format!("subcode oracle failed at r = {r}: {e}")),
            Ok(v) if v != expected => {
                return fail(
                    name,
                    format!("subcode oracle gives d_{r} = {v}, check-matrix route {expected}"),
                )
            }
            Ok(_) => {}
        }
    }
    let strictly_increasing = ws.params.ghw.windows(2).all(|w| w[0] < w[1]);
    if !strictly_increasing {
        return fail(name, format!("hierarchy not strictly increasing: {:?}", ws.params.ghw));
    }
    pass(
        name,
        format!("three routes agree: d = {:?}{oracle_note}", ws.params.ghw),
    )
}

fn check_macaulay_hs(ws: &Workspace, ot: &OtWorkspace, n: usize) -> CheckResult {
    let name = "macaulay_hs";
    let init = initial_ideal(&ot.groebner);
    let bc = broken_circuits(&ws.circuits, ot.groebner.ring().order());
    let fvec = nbc_f_vector(&bc, n);
    if let Err(e) = hs_check(&ot.table, &init, n, HS_DEGREE_BOUND, Some(&fvec)) {
        return fail(name, format!("quotient table vs initial ideal: {e}"));
    }
    let circuit_monomials: Vec<crate::poly::Monomial> = ws
        .circuits
        .iter()
        .map(|c| crate::poly::Monomial::from_set(n, &c.support))
        .collect();
    if let Err(e) = hs_check(&ws.sr_table, &circuit_monomials, n, HS_DEGREE_BOUND, None) {
        return fail(name, format!("circuit-ideal table vs its monomials: {e}"));
    }
    // Macaulay equality across orders: initial ideals from different orders
    // share the Hilbert numerator.
    let reference = hilbert_numerator(&init, n);
    for (order, check) in ot.ps_checks.iter().skip(1).take(3) {
        let other = hilbert_numerator(&check.initial, n);
        if other != reference {
            return fail(
                name,
                format!(
                    "initial ideal under order {:?} has a different Hilbert numerator",
                    order.one_based()
                ),
            );
        }
    }
    pass(
        name,
        "series agree termwise across the quotient, its initial ideals, and the face counts"
            .into(),
    )
}

/// Deterministic full-rank random generator matrix.
pub fn random_code(seed: u64, n: usize, k: usize, p: u64) -> Result<LinearCode> {
    assert!(k >= 1 && k < n, "need 1 <= k < n");
    let field = PrimeField::new(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let rows: Vec<Vec<i64>> = (0..k)
            .map(|_| (0..n).map(|_| rng.gen_range(0..p) as i64).collect())
            .collect();
        let m = DenseMatrix::from_rows(field, &rows);
        if m.rank() == k {
            return Ok(LinearCode::new(m)?);
        }
    }
    unreachable!("random matrices over F_p are full rank with high probability")
}

/// Random code with a non-degenerate dual (d >= 2), retrying with
/// incremented sub-seeds until one is found.
pub fn random_code_with_clean_dual(seed: u64, n: usize, k: usize, p: u64) -> Result<LinearCode> {
    let caps = Caps::default();
    for sub in 0.. {
        let code = random_code(seed.wrapping_add(sub), n, k, p)?;
        if min_distance(&code, &caps)? >= 2 {
            return Ok(code);
        }
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    fn ternary_733() -> LinearCode {
        LinearCode::new(DenseMatrix::from_rows(
            f3(),
            &[
                vec![1, 0, 0, 1, 1, 1, 1],
                vec![0, 1, 0, 0, 1, 1, 0],
                vec![0, 0, 1, 0, 0, 2, 1],
            ],
        ))
        .unwrap()
    }

    #[test]
    fn report_of_ternary_733() {
        let code = ternary_733();
        let report = verify(&code, &VerifyOptions::new(7)).unwrap();
        assert_eq!(report.params.ghw, vec![3, 5, 7]);
        assert_eq!(report.circuits.len(), 9);
        let ot = report.ot.as_ref().unwrap();
        assert_eq!(ot.alpha, Some(2));
        assert_eq!(ot.t, vec![2, 4, 6]);
        assert_eq!(ot.big_t, vec![4, 5, 6]);
        assert_eq!(
            ot.betti,
            vec![
                [0, 0, 1],
                [1, 2, 2],
                [1, 3, 1],
                [1, 4, 1],
                [2, 4, 1],
                [2, 5, 5],
                [3, 6, 3]
            ]
        );
        assert_eq!(report.sr.t, vec![3, 5, 7]);
        for check in &report.checks[..9] {
            assert_eq!(
                check.status,
                CheckStatus::Pass,
                "{}: {}",
                check.name,
                check.details
            );
        }
        for check in &report.checks[9..] {
            assert_eq!(check.status, CheckStatus::Reported);
            assert!(check.details.starts_with("holds"), "{}", check.details);
        }
        assert!(!report.has_hard_failure());
    }

    #[test]
    fn report_is_deterministic_and_roundtrips() {
        let code = ternary_733();
        let a = verify(&code, &VerifyOptions::new(7)).unwrap().to_json();
        let b = verify(&code, &VerifyOptions::new(7)).unwrap().to_json();
        assert_eq!(a, b);
        let parsed: VerificationReport = serde_json::from_str(&a).unwrap();
        assert_eq!(parsed.to_json(), a);
    }

    #[test]
    fn degenerate_code_skips_the_ideal_checks() {
        let g = DenseMatrix::from_rows(f3(), &[vec![1, 0, 0], vec![0, 1, 1]]);
        let code = LinearCode::new(g).unwrap();
        let report = verify(&code, &VerifyOptions::new(3)).unwrap();
        assert!(report.ot.is_none());
        assert_eq!(report.params.d, 1);
        let by_name = |n: &str| {
            report
                .checks
                .iter()
                .find(|c| c.name == n)
                .unwrap()
                .status
        };
        assert_eq!(by_name("thm_2_3"), CheckStatus::Skipped);
        assert_eq!(by_name("ghw_consistency"), CheckStatus::Pass);
        assert_eq!(by_name("jove_identity"), CheckStatus::Pass);
        assert_eq!(by_name("dk_identity"), CheckStatus::Pass);
        assert!(!report.has_hard_failure());
    }

    #[test]
    fn random_codes_are_reproducible() {
        let a = random_code(1, 8, 3, 3).unwrap();
        let b = random_code(1, 8, 3, 3).unwrap();
        assert_eq!(a.generator(), b.generator());
        let c = random_code_with_clean_dual(5, 6, 2, 2).unwrap();
        assert!(min_distance(&c, &Caps::default()).unwrap() >= 2);
    }

    #[test]
    fn check_names_are_stable() {
        let report = verify(&ternary_733(), &VerifyOptions::new(7)).unwrap();
        let names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, CHECK_NAMES.to_vec());
    }
}
