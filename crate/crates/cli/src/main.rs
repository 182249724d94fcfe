//! The `unsharp` command-line tool.
//!
//! Exit codes: 0 success, 1 axiom/check failure or theorem violation,
//! 2 parse or usage error, 3 refused or exhausted budgets.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use unsharp_cli::format::{parse_structure, render_structure, FileError, Structure};
use unsharp_cli::render;
use unsharp_core::builtin::{example_one, example_two};
use unsharp_core::effect::MonotonicityMode;
use unsharp_core::enumerate::{enumerate_structures, EnumError, Predicate, SearchSpec, StructureKind};
use unsharp_core::pseudo::{embed_commutative, forget_commutative};
use unsharp_core::report::{CheckError, Report};
use unsharp_core::transforms::{curp_to_ea, ea_to_curp, pea_to_urp, roundtrip_ea, roundtrip_pea, urp_to_pea};

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "unsharp", version, about = "Finite effect algebras, pseudoeffect algebras and unsharp residuated posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Effect,
    Pea,
    Curp,
    Urp,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumKindArg {
    Effect,
    Pea,
}

#[derive(Subcommand)]
enum Command {
    /// Run the kind-appropriate axiom suite, plus optional property checks
    Check {
        /// Structure file; standard input when omitted or `-`
        file: Option<PathBuf>,
        /// Also check the cone-monotonicity condition (effect/pea)
        #[arg(long)]
        monotonous: bool,
        /// Also check goodness (pea)
        #[arg(long)]
        good: bool,
        /// Also check divisibility (curp/urp)
        #[arg(long)]
        divisible: bool,
        /// Also check lattice-orderedness of the underlying order
        #[arg(long)]
        lattice: bool,
        /// Quantifier strategy for --monotonous
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: ModeArg,
        /// Trial count for sampled mode
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        /// Seed for sampled mode
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Convert between structure kinds and write the result to stdout
    Convert {
        #[arg(long, value_enum)]
        to: KindArg,
        file: Option<PathBuf>,
    },
    /// Construct, invert, and compare; prints EQUAL or the first difference
    Roundtrip { file: Option<PathBuf> },
    /// Render the operation tables as aligned text
    Tables { file: Option<PathBuf> },
    /// DOT output of the covering relation
    Hasse { file: Option<PathBuf> },
    /// Census of all structures of a given order, up to isomorphism
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum)]
        kind: EnumKindArg,
        /// Predicates to group the census by (monotonous, lattice_ordered, good, commutative)
        #[arg(long)]
        predicate: Vec<String>,
        /// Node budget; the census is flagged incomplete when exhausted
        #[arg(long)]
        max_nodes: Option<u64>,
    },
    /// Emit a built-in example as a structure file
    Example { which: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(AppError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(AppError::File(e)) => {
            eprintln!("error: {e}");
            match e {
                FileError::Parse { .. } => ExitCode::from(EXIT_INPUT),
                FileError::Semantic { .. } => ExitCode::from(EXIT_FAIL),
            }
        }
        Err(AppError::Check(e)) => {
            eprintln!("error: {e}");
            match e {
                CheckError::CarrierTooLarge { .. } | CheckError::BudgetExceeded { .. } => {
                    ExitCode::from(EXIT_BUDGET)
                }
                _ => ExitCode::from(EXIT_INPUT),
            }
        }
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

enum AppError {
    Io(std::io::Error),
    File(FileError),
    Check(CheckError),
    Usage(String),
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Io(e)
    }
}

impl From<FileError> for AppError {
    fn from(e: FileError) -> Self {
        AppError::File(e)
    }
}

impl From<CheckError> for AppError {
    fn from(e: CheckError) -> Self {
        AppError::Check(e)
    }
}

fn read_input(file: &Option<PathBuf>) -> Result<String, AppError> {
    match file {
        Some(path) if path.as_os_str() != "-" => Ok(std::fs::read_to_string(path)?),
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn load(file: &Option<PathBuf>) -> Result<Structure, AppError> {
    let text = read_input(file)?;
    match parse_structure(&text) {
        Ok(s) => Ok(s),
        Err(FileError::Semantic { message, report }) => {
            // axiom failures still get their witnesses printed
            if let Some(r) = &report {
                println!("{r}");
            }
            Err(AppError::File(FileError::Semantic { message, report }))
        }
        Err(e) => Err(AppError::File(e)),
    }
}

fn run(command: Command) -> Result<ExitCode, AppError> {
    match command {
        Command::Check { file, monotonous, good, divisible, lattice, mode, trials, seed } => {
            let structure = load(&file)?;
            let mode = match mode {
                ModeArg::Exhaustive => MonotonicityMode::Exhaustive,
                ModeArg::Sampled => MonotonicityMode::Sampled { trials, seed },
            };
            check_command(&structure, monotonous, good, divisible, lattice, mode)
        }
        Command::Convert { to, file } => {
            let structure = load(&file)?;
            convert_command(&structure, to)
        }
        Command::Roundtrip { file } => {
            let structure = load(&file)?;
            roundtrip_command(&structure)
        }
        Command::Tables { file } => {
            let structure = load(&file)?;
            print!("{}", render::tables_text(&structure));
            Ok(ExitCode::SUCCESS)
        }
        Command::Hasse { file } => {
            let structure = load(&file)?;
            match render::structure_order(&structure) {
                Ok(order) => {
                    print!("{}", render::hasse_dot(structure.carrier(), &order));
                    Ok(ExitCode::SUCCESS)
                }
                Err(defect) => {
                    eprintln!("order relation is not a bounded poset: {defect}");
                    Ok(ExitCode::from(EXIT_FAIL))
                }
            }
        }
        Command::Enumerate { order, kind, predicate, max_nodes } => {
            enumerate_command(order, kind, &predicate, max_nodes)
        }
        Command::Example { which } => {
            let e = match which.as_str() {
                "ex1" => example_one(),
                "ex2" => example_two(),
                other => return Err(AppError::Usage(format!("unknown example `{other}` (try ex1 or ex2)"))),
            };
            print!("{}", render_structure(&Structure::Effect(e)));
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Prints a report and folds it into the running exit status.
fn show(report: &Report, failed: &mut bool) {
    println!("{report}");
    if !report.passed() {
        *failed = true;
    }
}

fn check_command(
    structure: &Structure,
    monotonous: bool,
    good: bool,
    divisible: bool,
    lattice: bool,
    mode: MonotonicityMode,
) -> Result<ExitCode, AppError> {
    let mut failed = false;
    match structure {
        Structure::Effect(e) => {
            if good || divisible {
                return Err(AppError::Usage("--good/--divisible do not apply to kind effect".into()));
            }
            // parsing already verified E1-E4
            println!("effect axioms: PASS");
            if monotonous {
                show(&e.check_monotonous(mode)?, &mut failed);
            }
            if lattice {
                show(&e.induced_order().is_lattice(e.carrier()), &mut failed);
            }
        }
        Structure::Pseudo(p) => {
            if divisible {
                return Err(AppError::Usage("--divisible does not apply to kind pea".into()));
            }
            println!("pseudoeffect axioms: PASS");
            if good {
                show(&p.check_good(), &mut failed);
            }
            if monotonous {
                show(&p.check_monotonous(mode)?, &mut failed);
            }
            if lattice {
                show(&p.induced_order().is_lattice(p.carrier()), &mut failed);
            }
        }
        Structure::Curp(c) => {
            if monotonous || good {
                return Err(AppError::Usage("--monotonous/--good do not apply to kind curp".into()));
            }
            let axioms = c.check_axioms()?;
            show(&axioms, &mut failed);
            if divisible {
                show(&c.check_divisible()?, &mut failed);
            }
            if lattice {
                match c.order() {
                    Ok(order) => show(&order.is_lattice(c.carrier()), &mut failed),
                    Err(_) => failed = true,
                }
            }
        }
        Structure::Urp(r) => {
            if monotonous || good {
                return Err(AppError::Usage("--monotonous/--good do not apply to kind urp".into()));
            }
            let axioms = r.check_axioms()?;
            show(&axioms, &mut failed);
            if divisible {
                show(&r.check_divisible()?, &mut failed);
            }
            if lattice {
                match r.order() {
                    Ok(order) => show(&order.is_lattice(r.carrier()), &mut failed),
                    Err(_) => failed = true,
                }
            }
        }
    }
    Ok(if failed { ExitCode::from(EXIT_FAIL) } else { ExitCode::SUCCESS })
}

/// Construction plus theorem-level post-checks. The constructed structure
/// is always written to stdout so pipelines can consume it; post-check
/// failures go to stderr and set the exit code.
fn convert_command(structure: &Structure, to: KindArg) -> Result<ExitCode, AppError> {
    let mut failed = false;
    let output = match (structure, to) {
        (Structure::Effect(e), KindArg::Curp) => {
            let curp = ea_to_curp(e);
            post_check(&mut failed, "curp axioms", curp.check_axioms()?);
            post_check(&mut failed, "curp divisibility", curp.check_divisible()?);
            Structure::Curp(curp)
        }
        (Structure::Effect(e), KindArg::Pea) => Structure::Pseudo(embed_commutative(e)),
        (Structure::Pseudo(p), KindArg::Urp) => {
            let g = p.check_good();
            if !g.passed() {
                eprintln!("input is not good; the conversion theorem does not apply\n{g}");
                return Ok(ExitCode::from(EXIT_FAIL));
            }
            let urp = pea_to_urp(p);
            post_check(&mut failed, "urp axioms", urp.check_axioms()?);
            post_check(&mut failed, "urp divisibility", urp.check_divisible()?);
            Structure::Urp(urp)
        }
        (Structure::Pseudo(p), KindArg::Effect) => match forget_commutative(p) {
            Ok(e) => Structure::Effect(e),
            Err(err) => {
                eprintln!("input is not commutative: {err}");
                return Ok(ExitCode::from(EXIT_FAIL));
            }
        },
        (Structure::Curp(c), KindArg::Effect) => match curp_to_ea(c) {
            Ok(e) => Structure::Effect(e),
            Err(v) => {
                eprintln!("THEOREM VIOLATION: {v}");
                return Ok(ExitCode::from(EXIT_FAIL));
            }
        },
        (Structure::Urp(r), KindArg::Pea) => match urp_to_pea(r) {
            Ok(p) => Structure::Pseudo(p),
            Err(v) => {
                eprintln!("THEOREM VIOLATION: {v}");
                return Ok(ExitCode::from(EXIT_FAIL));
            }
        },
        (s, to) => {
            let to = match to {
                KindArg::Effect => "effect",
                KindArg::Pea => "pea",
                KindArg::Curp => "curp",
                KindArg::Urp => "urp",
            };
            return Err(AppError::Usage(format!("no conversion from kind {} to {to}", s.kind_name())));
        }
    };
    print!("{}", render_structure(&output));
    Ok(if failed { ExitCode::from(EXIT_FAIL) } else { ExitCode::SUCCESS })
}

fn post_check(failed: &mut bool, what: &str, report: Report) {
    if !report.passed() {
        eprintln!("THEOREM VIOLATION ({what}): the construction does not satisfy its target axioms;");
        eprintln!("the input fails the monotonicity hypothesis of the conversion theorem.");
        eprintln!("{report}");
        *failed = true;
    }
}

fn roundtrip_command(structure: &Structure) -> Result<ExitCode, AppError> {
    let report = match structure {
        Structure::Effect(e) => roundtrip_ea(e),
        Structure::Pseudo(p) => {
            let g = p.check_good();
            if !g.passed() {
                eprintln!("input is not good; the round-trip theorem does not apply\n{g}");
                return Ok(ExitCode::from(EXIT_FAIL));
            }
            roundtrip_pea(p)
        }
        _ => {
            return Err(AppError::Usage(
                "roundtrip applies to effect and pea inputs (the theorems invert those constructions)".into(),
            ))
        }
    };
    if report.passed() {
        println!("EQUAL");
        Ok(ExitCode::SUCCESS)
    } else {
        for f in report.failures() {
            println!("DIFFER: {}", f.witness);
        }
        Ok(ExitCode::from(EXIT_FAIL))
    }
}

fn enumerate_command(
    order: usize,
    kind: EnumKindArg,
    predicates: &[String],
    max_nodes: Option<u64>,
) -> Result<ExitCode, AppError> {
    let kind = match kind {
        EnumKindArg::Effect => StructureKind::Effect,
        EnumKindArg::Pea => StructureKind::Pseudoeffect,
    };
    let mut spec = SearchSpec::new(order, kind);
    spec.limits.max_nodes = max_nodes;
    if !predicates.is_empty() {
        let mut chosen = Vec::new();
        for name in predicates {
            let p = match name.as_str() {
                "monotonous" => Predicate::Monotonous,
                "lattice_ordered" => Predicate::LatticeOrdered,
                "good" => Predicate::Good,
                "commutative" => Predicate::Commutative,
                other => return Err(AppError::Usage(format!("unknown predicate `{other}`"))),
            };
            if !p.applies_to(kind) {
                return Err(AppError::Usage(format!("predicate `{name}` does not apply to this kind")));
            }
            chosen.push(p);
        }
        spec.predicates = chosen;
    }
    let row = match enumerate_structures(&spec) {
        Ok(row) => row,
        Err(e @ EnumError::OrderTooLarge { .. }) | Err(e @ EnumError::OrderTooSmall { .. }) => {
            return Err(AppError::Usage(format!("{e}")))
        }
        Err(e) => return Err(AppError::Usage(format!("{e}"))),
    };
    print!("{}", render::census_tsv(&row, &spec.predicates));
    Ok(if row.complete { ExitCode::SUCCESS } else { ExitCode::from(EXIT_BUDGET) })
}
