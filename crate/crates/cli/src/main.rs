//! `polyconn`: checks and transforms for set functions stored as `setfn v1` files.
//!
//! Exit codes: 0 on success or when the checked property holds, 1 when it
//! fails (the witness goes to standard error), 2 on usage, parse or
//! precondition errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use polyconn::constructors::random::{
    element_labels, random_connectivity, random_coverage_polymatroid, random_matroid,
    random_multigraph, random_polymatroid, ConnectivitySource,
};
use polyconn::constructors::{
    cycle_matroid, graph_connectivity, graph_rank, matroid_check, uniform_matroid,
};
use polyconn::identities::{all_identities, DEFAULT_SUBSET_LIMIT};
use polyconn::io::{parse, parse_graph, parse_subset, serialize, serialize_graph};
use polyconn::ops::{self, raw};
use polyconn::rat::{format_rat, parse_rat};
use polyconn::{check, classify, CheckReport, Rat, SetFunction, Subset};

#[derive(Parser)]
#[command(
    name = "polyconn",
    version,
    about = "Exact connectivity functions and polymatroids"
)]
struct Cli {
    /// Compute transforms even when the input is outside their hypotheses.
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the classification; exit 0 if the requested kind holds.
    Verify {
        file: PathBuf,
        #[arg(long = "as", value_enum, default_value_t = Kind::Auto)]
        kind: Kind,
    },
    /// r*(X) = r(E-X) + ||X|| - r(E).
    Dual(Transform),
    /// r*k(X) = r(E-X) + k|X| - r(E).
    Kdual {
        #[command(flatten)]
        io: Transform,
        #[arg(long, value_parser = rat_arg)]
        k: Rat,
    },
    /// The compactification of a polymatroid.
    Compactify(Transform),
    /// The connectivity function of a polymatroid.
    Connectivity(Transform),
    /// The polymatroid induced by a connectivity function.
    Induce(Transform),
    /// The half-scaled induced polymatroid: compact, self-dual, same connectivity.
    Canonical(Transform),
    /// Print the compact elements of a polymatroid.
    Compact { file: PathBuf },
    /// Delete and/or contract disjoint subsets.
    Minor {
        #[command(flatten)]
        io: Transform,
        #[arg(long, default_value = "{}")]
        delete: String,
        #[arg(long, default_value = "{}")]
        contract: String,
    },
    /// Multiply every value by a positive rational.
    Scale {
        #[command(flatten)]
        io: Transform,
        #[arg(long, value_parser = rat_arg)]
        factor: Rat,
    },
    /// Pointwise sum of two functions on the same ground set.
    Sum {
        left: PathBuf,
        right: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the value at a subset such as `{a,c}`.
    Eval { file: PathBuf, subset: String },
    /// Exit 0 if the two files hold the same function.
    Eq { left: PathBuf, right: PathBuf },
    /// Run every applicable identity and print a pass/fail table.
    Lemmas {
        file: PathBuf,
        /// Largest ground set for identities quantified over all subsets.
        #[arg(long, default_value_t = DEFAULT_SUBSET_LIMIT)]
        subset_limit: usize,
    },
    /// Generate a random instance from a seed.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Universe size for coverage polymatroids.
        #[arg(long, default_value_t = 4)]
        universe: usize,
        /// Rank for uniform matroids (default: n/2).
        #[arg(long)]
        rank: Option<usize>,
        /// Source for random connectivity functions.
        #[arg(long, value_enum, default_value_t = Source::Coverage)]
        source: Source,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a set function on the edges of a `graph v1` file.
    Fromgraph {
        file: PathBuf,
        #[arg(long, value_enum)]
        what: GraphFunction,
        /// Drop vertices that meet no edge instead of rejecting them.
        #[arg(long)]
        strip_isolated: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct Transform {
    file: PathBuf,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Connectivity,
    Polymatroid,
    Matroid,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Graph,
    Coverage,
    Uniform,
    Connectivity,
    Polymatroid,
    Matroid,
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    Coverage,
    Graph,
    MatroidLambda,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFunction {
    Lambda,
    Rank,
    Cycle,
}

fn rat_arg(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

/// Anything that ends the command with exit code 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
    }
}

fn read_function(path: &Path) -> Result<SetFunction, Failure> {
    parse(&read_text(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn write_text(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) if path != Path::new("-") => {
            fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))
        }
        _ => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn emit(output: &Option<PathBuf>, f: &SetFunction) -> Outcome {
    write_text(output.as_deref(), &serialize(f))?;
    Ok(ExitCode::SUCCESS)
}

fn property_failed(report: &CheckReport) -> ExitCode {
    eprintln!("{report}");
    ExitCode::from(1)
}

/// Runs `checked`, or `unchecked` under `--force`.
fn transform(
    force: bool,
    io: &Transform,
    checked: impl Fn(&SetFunction) -> polyconn::Result<SetFunction>,
    unchecked: impl Fn(&SetFunction) -> SetFunction,
) -> Outcome {
    let f = read_function(&io.file)?;
    let out = if force { unchecked(&f) } else { checked(&f)? };
    emit(&io.output, &out)
}

fn verify(file: &Path, kind: Kind) -> Outcome {
    let f = read_function(file)?;
    let classification = classify(&f);
    println!("{classification}");
    let report = match kind {
        Kind::Connectivity => check::check_connectivity_function(&f),
        Kind::Polymatroid => check::check_polymatroid(&f),
        Kind::Matroid => matroid_check(&f),
        Kind::Auto => {
            let poly = check::check_polymatroid(&f);
            if poly.holds() {
                poly
            } else {
                let conn = check::check_connectivity_function(&f);
                if !conn.holds() {
                    eprintln!("{poly}");
                }
                conn
            }
        }
    };
    if report.holds() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(property_failed(&report))
    }
}

fn subset_arg(f: &SetFunction, text: &str) -> Result<Subset, Failure> {
    parse_subset(text, f.ground()).map_err(|e| Failure(format!("subset {text}: {e}")))
}

fn minor(force: bool, io: &Transform, delete: &str, contract: &str) -> Outcome {
    let f = read_function(&io.file)?;
    let d = subset_arg(&f, delete)?;
    let c = subset_arg(&f, contract)?;
    if !d.intersection(c).is_empty() {
        return Err(Failure(format!(
            "deleted and contracted sets overlap in {}",
            f.ground().format(d.intersection(c))
        )));
    }
    // minors are taken on the reduced ground set, so the contracted set is
    // re-read against the labels that survive deletion
    let out = if force {
        let deleted = raw::delete(&f, d);
        let c = subset_arg(&deleted, contract)?;
        raw::contract(&deleted, c)
    } else {
        let deleted = ops::delete(&f, d)?;
        let c = subset_arg(&deleted, contract)?;
        ops::contract(&deleted, c)?
    };
    emit(&io.output, &out)
}

fn lemmas(file: &Path, subset_limit: usize) -> Outcome {
    let f = read_function(file)?;
    let results = all_identities(&f, subset_limit);
    if results.is_empty() {
        return Err(Failure(
            "input is neither a polymatroid nor a connectivity function".to_string(),
        ));
    }
    let mut failed = false;
    for r in &results {
        match &r.report {
            None => println!("SKIP  {}", r.name),
            Some(report) if report.holds() => println!("PASS  {}", r.name),
            Some(report) => {
                failed = true;
                println!("FAIL  {}", r.name);
                eprintln!("{report}");
            }
        }
    }
    Ok(if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

#[allow(clippy::too_many_arguments)]
fn generate(
    kind: GenKind,
    n: usize,
    seed: u64,
    universe: usize,
    rank: Option<usize>,
    source: Source,
    max_n: usize,
    output: &Option<PathBuf>,
) -> Outcome {
    if n > max_n.min(polyconn::ground::MAX_ELEMENTS) {
        return Err(Failure(format!("n = {n} exceeds the cap of {max_n}")));
    }
    let f = match kind {
        GenKind::Graph => {
            write_text(
                output.as_deref(),
                &serialize_graph(&random_multigraph(n, seed)),
            )?;
            return Ok(ExitCode::SUCCESS);
        }
        GenKind::Coverage => random_coverage_polymatroid(n, universe, seed),
        GenKind::Uniform => uniform_matroid(rank.unwrap_or(n / 2), element_labels(n))?,
        GenKind::Connectivity => {
            let source = match source {
                Source::Coverage => ConnectivitySource::Coverage,
                Source::Graph => ConnectivitySource::Graph,
                Source::MatroidLambda => ConnectivitySource::MatroidLambda,
            };
            random_connectivity(n, seed, source)
        }
        GenKind::Polymatroid => random_polymatroid(n, seed),
        GenKind::Matroid => random_matroid(n, seed),
    };
    emit(output, &f)
}

fn from_graph(
    file: &Path,
    what: GraphFunction,
    strip_isolated: bool,
    output: &Option<PathBuf>,
) -> Outcome {
    let text = read_text(file)?;
    let mut g = parse_graph(&text).map_err(|e| Failure(format!("{}: {e}", file.display())))?;
    if strip_isolated {
        g = g.without_isolated();
    }
    let f = match what {
        GraphFunction::Lambda => graph_connectivity(&g)?,
        GraphFunction::Rank => graph_rank(&g),
        GraphFunction::Cycle => cycle_matroid(&g),
    };
    emit(output, &f)
}

fn run(cli: Cli) -> Outcome {
    let force = cli.force;
    match cli.command {
        Command::Verify { file, kind } => verify(&file, kind),
        Command::Dual(io) => transform(force, &io, ops::dual, raw::dual),
        Command::Kdual { io, k } => {
            transform(force, &io, |f| ops::k_dual(f, &k), |f| raw::k_dual(f, &k))
        }
        Command::Compactify(io) => transform(force, &io, ops::compactify, raw::compactify),
        Command::Connectivity(io) => transform(force, &io, ops::connectivity_of, raw::connectivity),
        Command::Induce(io) => transform(
            force,
            &io,
            ops::induced_polymatroid,
            raw::induced_polymatroid,
        ),
        Command::Canonical(io) => transform(
            force,
            &io,
            ops::canonical_self_dual,
            raw::canonical_self_dual,
        ),
        Command::Compact { file } => {
            let f = read_function(&file)?;
            let elements = if force {
                raw::compact_elements(&f)
            } else {
                ops::compact_elements(&f)?
            };
            println!("{}", f.ground().format(elements));
            Ok(ExitCode::SUCCESS)
        }
        Command::Minor {
            io,
            delete,
            contract,
        } => minor(force, &io, &delete, &contract),
        Command::Scale { io, factor } => {
            // a non-positive factor is rejected even under --force
            let f = read_function(&io.file)?;
            emit(&io.output, &ops::scale(&f, &factor)?)
        }
        Command::Sum {
            left,
            right,
            output,
        } => {
            let (l, r) = (read_function(&left)?, read_function(&right)?);
            emit(&output, &ops::sum(&l, &r)?)
        }
        Command::Eval { file, subset } => {
            let f = read_function(&file)?;
            let s = subset_arg(&f, &subset)?;
            println!("{}", format_rat(f.value(s)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Eq { left, right } => {
            let (l, r) = (read_function(&left)?, read_function(&right)?);
            let report = check::check_equal("equal", &l, &r);
            Ok(if report.holds() {
                ExitCode::SUCCESS
            } else {
                property_failed(&report)
            })
        }
        Command::Lemmas { file, subset_limit } => lemmas(&file, subset_limit),
        Command::Gen {
            kind,
            n,
            seed,
            universe,
            rank,
            source,
            max_n,
            output,
        } => generate(kind, n, seed, universe, rank, source, max_n, &output),
        Command::Fromgraph {
            file,
            what,
            strip_isolated,
            output,
        } => from_graph(&file, what, strip_isolated, &output),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
