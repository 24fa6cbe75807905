use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pbent::formats::{read_oa, spectrum_dump, write_oa, FunctionTable};
use pbent::report::analyze;
use pbent::{exit, CliError};
use pbent_core::cayley::feasibility_verdict;
use pbent_core::construct::{bent_from_oa, bush_construct};
use pbent_core::duality::{classify_regularity, verify_dual_structure};
use pbent_core::pfunc::parse_poly;
use pbent_core::spectral::walsh_transform;
use pbent_core::{Anf, Feasibility, PAryFunction, PrimeModulus, RowPartition, TransformMethod};

#[derive(Parser)]
#[command(
    name = "pbent",
    version,
    about = "Analysis of p-ary bent functions, their Cayley graphs and association schemes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis report for one function.
    Analyze {
        #[command(flatten)]
        input: FunctionInput,
        /// Analyse f - f(0) instead of f.
        #[arg(long)]
        normalize: bool,
        /// Write the report here instead of stdout.
        #[arg(long, value_name = "FILE")]
        report: Option<PathBuf>,
        /// Emit the JSON form of the report.
        #[arg(long)]
        json: bool,
        /// Advisory; results never depend on it.
        #[arg(long, value_name = "K")]
        threads: Option<usize>,
    },
    /// Orthogonal arrays from the Bush construction.
    #[command(subcommand)]
    Oa(OaCommand),
    /// Dual function, regularity and the dual-structure checks.
    Dual {
        #[command(flatten)]
        input: FunctionInput,
    },
    /// Dump the Walsh spectrum, one point per line.
    Spectrum {
        #[command(flatten)]
        input: FunctionInput,
        #[arg(long, value_enum, default_value_t = Method::Fast)]
        method: Method,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum OaCommand {
    /// Write the OA(N+1, N) over GF(p^m).
    Gen {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Check the orthogonality of an array file.
    Check {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Build a function table from a partition of the rows.
    Bent {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Groups separated by '|', rows by ',', with an optional ':value'
        /// per group, e.g. "0|1|2,3:0".
        #[arg(long)]
        partition: Option<String>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "source")]
struct Source {
    /// Polynomial in x0, ..., x{n-1}, e.g. "-x0^2+x1^2".
    #[arg(long, allow_hyphen_values = true)]
    poly: Option<String>,
    /// JSON function table {"p", "n", "values"}.
    #[arg(long, value_name = "FILE")]
    table: Option<PathBuf>,
}

#[derive(Args)]
struct FunctionInput {
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[command(flatten)]
    source: Source,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Naive,
    Fast,
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path.display().to_string(), e))
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::io(path.display().to_string(), e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

impl FunctionInput {
    fn load(&self) -> Result<PAryFunction, CliError> {
        if let Some(src) = &self.source.poly {
            let (Some(p), Some(n)) = (self.p, self.n) else {
                return Err(CliError::Usage("--poly needs both --p and --n".into()));
            };
            return Ok(parse_poly(src, PrimeModulus::new(p)?, n)?.evaluate());
        }
        let path = self.source.table.as_ref().expect("clap enforces one source");
        let table = FunctionTable::parse(&read_file(path)?)?;
        if self.p.is_some_and(|p| p != table.p) || self.n.is_some_and(|n| n != table.n) {
            return Err(CliError::Usage(format!(
                "table {} is over p = {}, n = {}, which contradicts --p/--n",
                path.display(),
                table.p,
                table.n
            )));
        }
        Ok(table.into_function()?)
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Analyze { input, normalize, report, json, threads: _ } => {
            let f = input.load()?;
            let r = analyze(&f, normalize)?;
            let text = if json { r.to_json() } else { r.to_text() };
            write_or_print(report.as_deref(), &text)?;
        }
        Command::Oa(OaCommand::Gen { p, m, out }) => {
            let oa = bush_construct(PrimeModulus::new(p)?, m)?;
            write_or_print(out.as_deref(), &write_oa(&oa))?;
        }
        Command::Oa(OaCommand::Check { input }) => {
            let oa = read_oa(&read_file(&input)?)?;
            match oa.validate() {
                Ok(()) => println!("valid OA({}, {})", oa.row_count(), oa.symbols()),
                Err(w) => {
                    println!(
                        "not an orthogonal array: rows {} and {} repeat the pair ({}, {}) at columns {} and {}",
                        w.rows.0, w.rows.1, w.pair.0, w.pair.1, w.columns.0, w.columns.1
                    );
                    return Ok(exit::PRECONDITION);
                }
            }
        }
        Command::Oa(OaCommand::Bent { input, partition, out }) => {
            let oa = read_oa(&read_file(&input)?)?;
            let part = match &partition {
                Some(spec) => RowPartition::parse(spec, oa.row_count(), oa.p())?,
                None => RowPartition::default_for(&oa)?,
            };
            let f = bent_from_oa(&oa, &part)?;
            eprintln!("partition: {part}");
            write_or_print(out.as_deref(), &(FunctionTable::from_function(&f).to_json() + "\n"))?;
        }
        Command::Dual { input } => {
            let f = input.load()?;
            let rep = classify_regularity(&f)?;
            println!("regularity: {}", rep.kind);
            match &rep.dual {
                Some(d) => {
                    let anf = Anf::interpolate(d);
                    println!("dual: {}", anf.to_signed_string());
                    println!("dual (canonical): {anf}");
                }
                None => println!("dual: none"),
            }
            let feasible = f.require_even_vanishing().is_ok()
                && matches!(feasibility_verdict(&f)?.overall, Feasibility::Lst | Feasibility::Nlst);
            if feasible {
                let ds = verify_dual_structure(&f)?;
                let names = [
                    "|D_i*| = |D_i|",
                    "dual indicators from eigenvalues",
                    "eigenvalues of dual indicators",
                    "dual graphs have the same parameters",
                ];
                for (k, name) in (1u8..=4).zip(names) {
                    println!("check {k} ({name}): {}", if ds.check_passed(k) { "pass" } else { "FAIL" });
                }
                let matches: Vec<String> = ds
                    .set_matches
                    .iter()
                    .enumerate()
                    .map(|(i, m)| match m {
                        Some(j) => format!("D_{}* = D_{j}", i + 1),
                        None => format!("D_{}* new", i + 1),
                    })
                    .collect();
                println!("level sets: {}", matches.join(", "));
                if !ds.passed() {
                    return Err(CliError::Core(pbent_core::Error::Inconsistency(format!(
                        "dual-structure checks failed: {:?}",
                        ds.failures
                    ))));
                }
            } else {
                println!("dual structure: not checked (not of feasible type)");
            }
        }
        Command::Spectrum { input, method, out } => {
            let f = input.load()?;
            let method = match method {
                Method::Naive => TransformMethod::Naive,
                Method::Fast => TransformMethod::Fast,
            };
            let w = walsh_transform(&f, method);
            write_or_print(out.as_deref(), &spectrum_dump(w.values()))?;
        }
    }
    Ok(exit::OK)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
