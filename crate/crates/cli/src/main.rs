use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use letproof::cutelim::cut_eliminate;
use letproof::display::{deduction_latex, deduction_text, sequent_proof_latex, sequent_proof_text};
use letproof::formula::{parse, render, Formula, Language, RenderFormat};
use letproof::interchange::{
    calculus_from_name, deduction_from_str, deduction_to_string, nd_system_from_name,
    sequent_proof_from_str, sequent_proof_to_string, InterchangeError,
};
use letproof::nd::{check_deduction, normalize, Deduction, NdSystem, NormalizeError};
use letproof::search::{decide, DecideResult, SearchBudget};
use letproof::sequent::{check_sequent_proof, parse_sequent, CalculusId, SequentProof};
use letproof::translate::{nd_to_sequent, port_gb_to_gletj, sequent_to_nd};
use serde_json::{json, Value};
use thiserror::Error;

const UNPROVABLE: u8 = 1;
const INPUT_ERROR: u8 = 2;
const BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "letproof", version, about = "Proof tools for LET_J and LET_F")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Lang {
    Letj,
    Letf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Logic {
    Letj,
    Letf,
    GbCutfree,
}

#[derive(Clone, Copy, ValueEnum)]
enum NegCirc {
    Corrected,
    Printed,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Seq,
    Nd,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a formula and print it back.
    Parse {
        formula: String,
        #[arg(long, value_enum, default_value = "letj")]
        lang: Lang,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Decide cut-free provability of a sequent such as "@p, p, ~p => q".
    Decide {
        sequent: String,
        #[arg(long, value_enum)]
        logic: Logic,
        #[arg(long = "letf-negcirc", value_enum, default_value = "corrected")]
        negcirc: NegCirc,
        /// Maximum number of distinct sequents to visit.
        #[arg(long)]
        budget: Option<usize>,
        /// Wall-clock limit in seconds.
        #[arg(long = "time-limit")]
        time_limit: Option<f64>,
        /// Write the proof to FILE (JSON unless --format says otherwise).
        #[arg(long = "emit-proof")]
        emit_proof: Option<PathBuf>,
        /// Also print the proof to standard output in this format.
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Validate a proof file.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        /// gb, gletj, gletf, gletf-printed, nletj or nletf; defaults to the file's own.
        #[arg(long)]
        system: Option<String>,
    },
    /// Eliminate all cuts from a GLETJ or GLETF proof.
    Cutelim {
        file: PathBuf,
        #[arg(long)]
        system: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Normalize a deduction.
    Normalize {
        file: PathBuf,
        #[arg(long)]
        system: Option<String>,
        /// Print each conversion with its measure (n, m) to standard error.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Translate between sequent proofs and deductions.
    Translate {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: Kind,
        #[arg(long)]
        system: Option<String>,
        /// With --to seq on an NLETJ deduction: port the GB result to GLETJ.
        #[arg(long)]
        gletj: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Interchange(#[from] InterchangeError),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Budget(_) => BUDGET,
            _ => INPUT_ERROR,
        }
    }
}

fn input(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn calculus(name: Option<&str>) -> Result<Option<CalculusId>, CliError> {
    name.map(|n| calculus_from_name(n).ok_or_else(|| input(format!("unknown sequent calculus `{n}`"))))
        .transpose()
}

fn nd_system(name: Option<&str>) -> Result<Option<NdSystem>, CliError> {
    name.map(|n| nd_system_from_name(n).ok_or_else(|| input(format!("unknown deduction system `{n}`"))))
        .transpose()
}

fn formula_json(f: &Formula) -> Value {
    match f {
        Formula::Atom(a) => json!({ "atom": &**a }),
        Formula::Neg(a) => json!({ "not": formula_json(a) }),
        Formula::Circ(a) => json!({ "circ": formula_json(a) }),
        Formula::And(a, b) => json!({ "and": [formula_json(a), formula_json(b)] }),
        Formula::Or(a, b) => json!({ "or": [formula_json(a), formula_json(b)] }),
        Formula::Imp(a, b) => json!({ "imp": [formula_json(a), formula_json(b)] }),
    }
}

fn show_proof(calc: CalculusId, p: &SequentProof, format: Format) -> String {
    match format {
        Format::Text => sequent_proof_text(p),
        Format::Json => sequent_proof_to_string(calc, p) + "\n",
        Format::Latex => sequent_proof_latex(p),
    }
}

fn show_deduction(system: NdSystem, d: &Deduction, format: Format) -> String {
    match format {
        Format::Text => deduction_text(d),
        Format::Json => deduction_to_string(system, d) + "\n",
        Format::Latex => deduction_latex(d),
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Parse { formula, lang, format } => {
            let lang = match lang {
                Lang::Letj => Language::LJ,
                Lang::Letf => Language::LF,
            };
            let f = parse(&formula, lang).map_err(input)?;
            match format {
                Format::Text => println!("{}", render(&f, RenderFormat::Ascii)),
                Format::Json => println!("{}", formula_json(&f)),
                Format::Latex => println!("{}", render(&f, RenderFormat::Latex)),
            }
            Ok(0)
        }
        Command::Decide {
            sequent,
            logic,
            negcirc,
            budget,
            time_limit,
            emit_proof,
            format,
        } => {
            let calc = match (logic, negcirc) {
                (Logic::Letj, _) => CalculusId::GLETJ,
                (Logic::GbCutfree, _) => CalculusId::GB,
                (Logic::Letf, NegCirc::Corrected) => CalculusId::GLETF,
                (Logic::Letf, NegCirc::Printed) => CalculusId::GLETF_PRINTED,
            };
            let goal = parse_sequent(&sequent, calc.language()).map_err(input)?;
            let mut b = SearchBudget::default();
            if let Some(n) = budget {
                b.max_visited_sequents = n;
            }
            if let Some(s) = time_limit {
                b.wall_time_limit = Duration::try_from_secs_f64(s).map_err(input)?;
            }
            let r = decide(calc, &goal, b).map_err(input)?;
            let stats = r.stats();
            eprintln!("visited {} sequents, {} rule instances", stats.visited, stats.expansions);
            match r {
                DecideResult::Provable { proof, .. } => {
                    println!("provable");
                    if let Some(fmt) = format {
                        print!("{}", show_proof(calc, &proof, fmt));
                    }
                    if let Some(path) = emit_proof {
                        let text = show_proof(calc, &proof, format.unwrap_or(Format::Json));
                        fs::write(&path, text).map_err(|source| CliError::Io { path, source })?;
                    }
                    Ok(0)
                }
                DecideResult::Unprovable { saturation, .. } => {
                    println!("unprovable");
                    eprintln!("{} refuted sequents", saturation.len());
                    Ok(UNPROVABLE)
                }
                DecideResult::BudgetExceeded { .. } => {
                    println!("budget-exceeded");
                    Ok(BUDGET)
                }
            }
        }
        Command::Check { file, kind, system } => {
            let text = read(&file)?;
            match kind {
                Kind::Seq => {
                    let (calc, p) = sequent_proof_from_str(&text, calculus(system.as_deref())?)?;
                    check_sequent_proof(calc, &p).map_err(input)?;
                    println!("valid {} proof of {}", calc, p.sequent);
                }
                Kind::Nd => {
                    let (sys, d) = deduction_from_str(&text, nd_system(system.as_deref())?)?;
                    let c = check_deduction(sys, &d).map_err(input)?;
                    let open: Vec<String> = c
                        .open_assumptions
                        .iter()
                        .map(|f| render(f, RenderFormat::Ascii))
                        .collect();
                    println!(
                        "valid {} deduction of {} from {{{}}}",
                        sys,
                        render(&c.conclusion, RenderFormat::Ascii),
                        open.join(", ")
                    );
                }
            }
            Ok(0)
        }
        Command::Cutelim { file, system, format } => {
            let (calc, p) = sequent_proof_from_str(&read(&file)?, calculus(system.as_deref())?)?;
            let q = cut_eliminate(calc, &p).map_err(input)?;
            print!("{}", show_proof(calc, &q, format));
            Ok(0)
        }
        Command::Normalize {
            file,
            system,
            trace,
            format,
        } => {
            let (sys, d) = deduction_from_str(&read(&file)?, nd_system(system.as_deref())?)?;
            let n = normalize(sys, &d).map_err(|e| match e {
                NormalizeError::StepLimit(_) => CliError::Budget(e.to_string()),
                e => input(e),
            })?;
            if trace {
                if let Some(first) = n.trace().first() {
                    eprintln!("start ({}, {})", first.n, first.m);
                }
                for (i, s) in n.steps.iter().enumerate() {
                    eprintln!(
                        "step {}: {} at {:?} ({}, {})",
                        i + 1,
                        s.kind,
                        s.site,
                        s.after.n,
                        s.after.m
                    );
                }
            }
            print!("{}", show_deduction(sys, &n.deduction, format));
            Ok(0)
        }
        Command::Translate {
            file,
            to,
            system,
            gletj,
            format,
        } => {
            let text = read(&file)?;
            match to {
                Kind::Nd => {
                    let (calc, p) = sequent_proof_from_str(&text, calculus(system.as_deref())?)?;
                    let target = if calc.is_multi() { NdSystem::NLETF } else { NdSystem::NLETJ };
                    let d = sequent_to_nd(calc, &p).map_err(input)?;
                    print!("{}", show_deduction(target, &d, format));
                }
                Kind::Seq => {
                    let (sys, d) = deduction_from_str(&text, nd_system(system.as_deref())?)?;
                    let mut p = nd_to_sequent(sys, &d).map_err(input)?;
                    let mut calc = letproof::translate::nd_calculus(sys);
                    if gletj && sys == NdSystem::NLETJ {
                        p = port_gb_to_gletj(&p).map_err(input)?;
                        calc = CalculusId::GLETJ;
                    }
                    print!("{}", show_proof(calc, &p, format));
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
