use clap::{Args, Parser, Subcommand, ValueEnum};
use otweights::betti::hochster::hochster_betti;
use otweights::betti::koszul::koszul_betti;
use otweights::betti::{summarize, BettiTable};
use otweights::codefile::{load, LoadedCode};
use otweights::codes::{code_params, parity_check, Caps};
use otweights::error::Error;
use otweights::groebner::{buchberger, hilbert_function, initial_ideal};
use otweights::hilbert::{hilbert_numerator, strip_poles};
use otweights::matroid::{broken_circuits, circuits, nbc_f_vector, VectorMatroid};
use otweights::orlik_terao::{alpha, check_proudfoot_speyer, ot_ideal};
use otweights::poly::{Monomial, Polynomial, PolyRing, TermOrder};
use otweights::verify::{verify, VerifyOptions};
use std::path::PathBuf;
use std::process::ExitCode;

/// Weight hierarchies of linear codes through the commutative algebra of
/// their dual arrangements.
#[derive(Parser)]
#[command(name = "otweights", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Code parameters [n, k, d] and the full weight hierarchy
    Info(CommonArgs),
    /// Circuits of the check-matrix matroid with their dependencies
    Circuits(CommonArgs),
    /// Orlik-Terao presentation: generators, initial degree, Groebner check
    Ot(CommonArgs),
    /// Stanley-Reisner data: circuit ideal and broken-circuit ideal
    Sr(CommonArgs),
    /// Graded Betti table of a chosen ideal
    Betti(BettiArgs),
    /// Hilbert function, series numerator, and face counts
    Hilbert(CommonArgs),
    /// Run every check and emit the verification report
    Verify(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Code file (JSON)
    file: PathBuf,
    /// Variable priority, greatest first (e.g. 1,2,3,4,6,7,5); overrides the file
    #[arg(long, value_delimiter = ',')]
    order: Option<Vec<usize>>,
    /// Internal degree bound for Betti tables (default n + 2)
    #[arg(long)]
    jmax: Option<usize>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for sampled variable orders
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Cap on enumerated codewords (q^k)
    #[arg(long)]
    max_codewords: Option<u128>,
    /// Cap on the code length for subset enumeration
    #[arg(long)]
    max_columns: Option<usize>,
}

#[derive(Args)]
struct BettiArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Which ideal to resolve
    #[arg(long, value_enum, default_value_t = IdealChoice::Ot)]
    ideal: IdealChoice,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IdealChoice {
    /// Orlik-Terao ideal of the dual arrangement
    Ot,
    /// Stanley-Reisner ideal of the circuit complex
    Sr,
    /// Stanley-Reisner ideal of the broken-circuit complex
    Bc,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

struct Session {
    loaded: LoadedCode,
    order: TermOrder,
    caps: Caps,
    jmax: Option<usize>,
    seed: u64,
    format: Format,
}

fn open(common: &CommonArgs) -> Result<Session, Error> {
    let loaded = load(&common.file)?;
    let order = match &common.order {
        Some(listed) => {
            if listed.len() != loaded.code.length() {
                return Err(Error::BadCodeFile(format!(
                    "order must list all {} variables",
                    loaded.code.length()
                )));
            }
            TermOrder::from_one_based(listed)?
        }
        None => loaded.order.clone(),
    };
    let mut caps = Caps::default();
    if let Some(c) = common.max_codewords {
        caps.max_codewords = c;
    }
    if let Some(c) = common.max_columns {
        caps.max_columns = c;
    }
    Ok(Session {
        loaded,
        order,
        caps,
        jmax: common.jmax,
        seed: common.seed,
        format: common.format,
    })
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Info(args) => {
            let s = open(&args)?;
            let params = code_params(&s.loaded.code, &s.caps)?;
            match s.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "name": s.loaded.code.name(),
                        "field": s.loaded.code.field().modulus(),
                        "n": params.n,
                        "k": params.k,
                        "d": params.d,
                        "ghw": params.ghw,
                        "degenerate": params.degenerate,
                    })
                ),
                Format::Text => {
                    if let Some(name) = s.loaded.code.name() {
                        println!("name: {name}");
                    }
                    println!("field: F_{}", s.loaded.code.field().modulus());
                    println!("[n, k, d] = [{}, {}, {}]", params.n, params.k, params.d);
                    println!("weight hierarchy: {:?}", params.ghw);
                    println!("degenerate: {}", params.degenerate);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Circuits(args) => {
            let s = open(&args)?;
            let h = parity_check(&s.loaded.code)?;
            let matroid = VectorMatroid::new(h);
            let all = circuits(&matroid)?;
            let n = s.loaded.code.length();
            let ring = PolyRing::new(s.loaded.code.field(), n, TermOrder::standard(n));
            match s.format {
                Format::Json => {
                    let list: Vec<serde_json::Value> = all
                        .iter()
                        .map(|c| {
                            serde_json::json!({
                                "support": c.support.iter().map(|v| v + 1).collect::<Vec<_>>(),
                                "dependency": c.dependency.iter().map(|s| s.value()).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::json!({ "circuits": list }));
                }
                Format::Text => {
                    for c in &all {
                        let dep = ring.poly_from_terms(
                            c.support
                                .iter()
                                .zip(&c.dependency)
                                .map(|(&v, s)| (s.value(), Monomial::var(n, v)))
                                .collect(),
                        );
                        let support: Vec<usize> = c.support.iter().map(|v| v + 1).collect();
                        println!("{support:?}  {}", ring.render(&dep));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Ot(args) => {
            let s = open(&args)?;
            let pres = ot_ideal(&s.loaded.code)?;
            let a = alpha(&pres)?;
            let ps = check_proudfoot_speyer(&pres, &s.order);
            let (table, summary) = ot_betti(&s)?;
            match s.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "alpha": a,
                        "generators": pres.generators().iter()
                            .map(|(_, p)| pres.ring().render(p)).collect::<Vec<_>>(),
                        "groebner_holds": ps.holds,
                        "initial_ideal": render_monomials(&ps.initial),
                        "betti": table.triples(),
                        "t": summary.t,
                        "T": summary.big_t,
                        "pdim": summary.pdim,
                        "reg": summary.reg,
                        "multiplicity": summary.multiplicity,
                        "cm": summary.cm,
                    })
                ),
                Format::Text => {
                    println!("generators (one per circuit):");
                    for (c, p) in pres.generators() {
                        let support: Vec<usize> = c.support.iter().map(|v| v + 1).collect();
                        println!("  {support:?}  {}", pres.ring().render(p));
                    }
                    println!("alpha = {a}");
                    println!(
                        "circuit generators form a Groebner basis under {:?}: {}",
                        s.order.one_based(),
                        ps.holds
                    );
                    println!("initial ideal: {}", render_monomials(&ps.initial).join(", "));
                    print!("{}", table.render());
                    print_summary(&summary);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Sr(args) => {
            let s = open(&args)?;
            let h = parity_check(&s.loaded.code)?;
            let matroid = VectorMatroid::new(h);
            let all = circuits(&matroid)?;
            let n = s.loaded.code.length();
            let field = s.loaded.code.field();
            let nonfaces: Vec<Vec<usize>> = all.iter().map(|c| c.support.clone()).collect();
            let table = hochster_betti(&nonfaces, n, field);
            let summary = summarize(&table, n)?;
            let bc = broken_circuits(&all, &s.order);
            let bc_table = hochster_betti(&bc.minimal_nonfaces, n, field);
            let bc_summary = summarize(&bc_table, n)?;
            let one_based =
                |sets: &[Vec<usize>]| -> Vec<Vec<usize>> {
                    sets.iter()
                        .map(|s| s.iter().map(|&v| v + 1).collect())
                        .collect()
                };
            match s.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "circuit_ideal": {
                            "nonfaces": one_based(&nonfaces),
                            "betti": table.triples(),
                            "t": summary.t, "T": summary.big_t,
                            "pdim": summary.pdim, "reg": summary.reg,
                        },
                        "broken_circuit_ideal": {
                            "order": s.order.one_based(),
                            "nonfaces": one_based(&bc.minimal_nonfaces),
                            "betti": bc_table.triples(),
                            "t": bc_summary.t, "T": bc_summary.big_t,
                            "pdim": bc_summary.pdim, "reg": bc_summary.reg,
                        },
                    })
                ),
                Format::Text => {
                    println!("circuit ideal nonfaces: {:?}", one_based(&nonfaces));
                    print!("{}", table.render());
                    print_summary(&summary);
                    println!(
                        "broken-circuit ideal under {:?}: {:?}",
                        s.order.one_based(),
                        one_based(&bc.minimal_nonfaces)
                    );
                    print!("{}", bc_table.render());
                    print_summary(&bc_summary);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Betti(args) => {
            let s = open(&args.common)?;
            let n = s.loaded.code.length();
            let field = s.loaded.code.field();
            let (table, summary) = match args.ideal {
                IdealChoice::Ot => ot_betti(&s)?,
                IdealChoice::Sr => {
                    let h = parity_check(&s.loaded.code)?;
                    let all = circuits(&VectorMatroid::new(h))?;
                    let nonfaces: Vec<Vec<usize>> =
                        all.iter().map(|c| c.support.clone()).collect();
                    let table = hochster_betti(&nonfaces, n, field);
                    let summary = summarize(&table, n)?;
                    (table, summary)
                }
                IdealChoice::Bc => {
                    let h = parity_check(&s.loaded.code)?;
                    let all = circuits(&VectorMatroid::new(h))?;
                    let bc = broken_circuits(&all, &s.order);
                    let table = hochster_betti(&bc.minimal_nonfaces, n, field);
                    let summary = summarize(&table, n)?;
                    (table, summary)
                }
            };
            match s.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "betti": table.triples(),
                        "t": summary.t, "T": summary.big_t,
                        "pdim": summary.pdim, "reg": summary.reg,
                        "multiplicity": summary.multiplicity, "cm": summary.cm,
                        "field": table.field_modulus,
                    })
                ),
                Format::Text => {
                    print!("{}", table.render());
                    print_summary(&summary);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Hilbert(args) => {
            let s = open(&args)?;
            let pres = ot_ideal(&s.loaded.code)?;
            let n = s.loaded.code.length();
            let ring = PolyRing::new(s.loaded.code.field(), n, s.order.clone());
            let gens: Vec<Polynomial> = pres
                .generators()
                .iter()
                .map(|(_, p)| ring.adopt(p))
                .collect();
            let gb = buchberger(&ring, &gens);
            let init = initial_ideal(&gb);
            let bound = s.jmax.unwrap_or(10);
            let hf: Vec<u64> = (0..=bound)
                .map(|m| hilbert_function(&init, m as u32, n))
                .collect();
            let numerator = hilbert_numerator(&init, n);
            let (codim, reduced) = strip_poles(&numerator);
            let h = parity_check(&s.loaded.code)?;
            let all = circuits(&VectorMatroid::new(h))?;
            let bc = broken_circuits(&all, &s.order);
            let fvec = nbc_f_vector(&bc, n);
            match s.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "hilbert_function": hf,
                        "numerator": numerator,
                        "reduced_numerator": reduced,
                        "dim": n - codim,
                        "fvector": fvec,
                    })
                ),
                Format::Text => {
                    println!("Hilbert function (degrees 0..={bound}): {hf:?}");
                    println!("numerator over (1-s)^{n}: {numerator:?}");
                    println!("reduced numerator over (1-s)^{}: {reduced:?}", n - codim);
                    println!("face counts of the broken-circuit complex: {fvec:?}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let s = open(&args)?;
            let opts = VerifyOptions {
                order: s.order.clone(),
                jmax: s.jmax,
                seed: s.seed,
                caps: s.caps,
            };
            let report = verify(&s.loaded.code, &opts)?;
            match s.format {
                Format::Json => print!("{}", report.to_json()),
                Format::Text => {
                    println!(
                        "[n, k, d] = [{}, {}, {}], ghw = {:?}",
                        report.params.n, report.params.k, report.params.d, report.params.ghw
                    );
                    println!("circuits: {:?}", report.circuits);
                    for check in &report.checks {
                        println!(
                            "{:<16} {:<9} {}",
                            check.name,
                            format!("{:?}", check.status).to_lowercase(),
                            check.details
                        );
                    }
                }
            }
            if report.has_hard_failure() {
                Ok(ExitCode::FAILURE)
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}

fn ot_betti(s: &Session) -> Result<(BettiTable, otweights::betti::ResolutionSummary), Error> {
    let pres = ot_ideal(&s.loaded.code)?;
    let n = s.loaded.code.length();
    let ring = PolyRing::new(s.loaded.code.field(), n, s.order.clone());
    let gens: Vec<Polynomial> = pres
        .generators()
        .iter()
        .map(|(_, p)| ring.adopt(p))
        .collect();
    let gb = buchberger(&ring, &gens);
    let table = koszul_betti(&gb, n, s.jmax.unwrap_or(n + 2))?;
    let summary = summarize(&table, n)?;
    Ok((table, summary))
}

fn render_monomials(monomials: &[Monomial]) -> Vec<String> {
    monomials
        .iter()
        .map(|m| {
            let vars: Vec<String> = m
                .support()
                .iter()
                .map(|&v| format!("y{}", v + 1))
                .collect();
            vars.join("*")
        })
        .collect()
}

fn print_summary(summary: &otweights::betti::ResolutionSummary) {
    println!(
        "t = {:?}, T = {:?}, pdim = {}, reg = {}, multiplicity = {}, cm = {}",
        summary.t,
        summary.big_t,
        summary.pdim,
        summary.reg,
        summary.multiplicity,
        summary.cm
    );
}
