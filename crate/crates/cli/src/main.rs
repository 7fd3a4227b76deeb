mod commands;
mod input;

use std::fmt::Display;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

/// Analyse magic sets of Pauli observables.
///
/// Files are JSON (`{"vertices": m, "edges": [[...]]}`) or bracketed edge lists
/// (`[[1,2,3],[4,5,6]]`). A bundled dataset entry can be named as `@NAME`, e.g. `@MS3-29`.
#[derive(Debug, Parser)]
#[command(name = "magicsets", version)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Proper-Eulerian check, magic decision, minimality and minimum qubit count.
    Check(CheckArgs),
    /// Synthesize a Pauli assignment on a given number of qubits.
    Assign(AssignArgs),
    /// Noncontextual bound b, quantum value Q and tolerated error per context.
    Bound(BoundArgs),
    /// Reduce a hypergraph by a recipe, a Gram matrix, or a search for minimal descendants.
    Reduce(ReduceArgs),
    /// Decide planarity of a simple graph through the dual hypergraph.
    Planarity(PlanarityArgs),
    /// Orbits of a permutation group on subsets, and the 4-regular hypergraphs they form.
    Orbits(OrbitsArgs),
    /// Check every bundled entry against its expected metrics.
    VerifyDataset,
    /// List or print bundled entries.
    #[command(subcommand)]
    Dataset(DatasetCommand),
}

#[derive(Debug, Args)]
struct CheckArgs {
    file: String,
    /// Largest nonmagic dimension enumerated exactly for the qubit count.
    #[arg(long, default_value_t = magicsets::gram::DEFAULT_ENUMERATION_CAP)]
    cap: usize,
    /// Write a minimum-rank magic Gram matrix to this file.
    #[arg(long, value_name = "PATH")]
    dump_gram: Option<String>,
}

#[derive(Debug, Args)]
struct AssignArgs {
    file: String,
    #[arg(long, short = 'k')]
    qubits: usize,
    /// Gram matrix to realize; defaults to a minimum-rank magic Gram matrix.
    #[arg(long)]
    gram: Option<String>,
    /// Number of distinct assignments to list.
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long, default_value_t = magicsets::assign::DEFAULT_NODE_BUDGET)]
    node_budget: u64,
    /// Write the first assignment to this file.
    #[arg(long, short = 'o', value_name = "PATH")]
    out: Option<String>,
}

#[derive(Debug, Args)]
struct BoundArgs {
    file: String,
    /// Context signs: 0/1 or +/- per context, a JSON list, or a file holding either.
    #[arg(long, conflicts_with = "assignment")]
    signs: Option<String>,
    /// Assignment file (or `@NAME`) whose context signs are used.
    #[arg(long)]
    assignment: Option<String>,
    /// Also compute the bound by enumerating all classical assignments.
    #[arg(long)]
    brute_force: bool,
    /// Without signs: only consider sign patterns of Pauli assignments.
    #[arg(long)]
    pauli_only: bool,
    #[arg(long, default_value_t = magicsets::gf2::DEFAULT_COSET_CAP)]
    cap: usize,
}

#[derive(Debug, Args)]
struct ReduceArgs {
    file: String,
    /// Replay a recipe `{"delete": [...], "identify": {"1": [...]}}`.
    #[arg(long, conflicts_with_all = ["gram", "search"])]
    recipe: Option<String>,
    /// Reduce along this magic Gram matrix.
    #[arg(long, conflicts_with = "search")]
    gram: Option<String>,
    /// Search for all minimal descendants.
    #[arg(long)]
    search: bool,
    #[arg(long, default_value_t = 10_000_000)]
    max_reductions: u64,
    /// Wall-clock limit for the search, in seconds.
    #[arg(long)]
    time_limit: Option<u64>,
    /// Treat isomorphic hypergraphs as the same node during the search.
    #[arg(long)]
    up_to_isomorphism: bool,
    /// Write the reduced hypergraph (or the descendants) to this file.
    #[arg(long, short = 'o', value_name = "PATH")]
    out: Option<String>,
}

#[derive(Debug, Args)]
struct PlanarityArgs {
    graph: String,
}

#[derive(Debug, Args)]
struct OrbitsArgs {
    /// JSON generators: a list of 1-based image lists, or {"degree": N, "generators": [...]}.
    generators: String,
    #[arg(long, short = 's')]
    size: usize,
    #[arg(long, default_value_t = magicsets::orbits::DEFAULT_SUBSET_CAP)]
    cap: usize,
}

#[derive(Debug, Subcommand)]
enum DatasetCommand {
    List,
    Show { name: String },
}

/// Errors that stop a command: bad input (exit 2).
#[derive(Debug)]
pub struct CliError {
    module: &'static str,
    message: String,
}

impl CliError {
    pub fn input(module: &'static str, message: impl Display) -> Self {
        Self {
            module,
            message: message.to_string(),
        }
    }
}

/// A finished command: its report, text rendering, and whether the checked property held.
pub struct Outcome {
    pub report: Value,
    pub text: String,
    pub ok: bool,
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Check(a) => commands::check(&a.file, a.cap, a.dump_gram.as_deref()),
        Command::Assign(a) => commands::assign(
            &a.file,
            a.qubits,
            a.gram.as_deref(),
            a.count,
            a.node_budget,
            a.out.as_deref(),
        ),
        Command::Bound(a) => commands::bound(
            &a.file,
            a.signs.as_deref(),
            a.assignment.as_deref(),
            a.brute_force,
            a.pauli_only,
            a.cap,
        ),
        Command::Reduce(a) => commands::reduce(&commands::ReduceOptions {
            file: &a.file,
            recipe: a.recipe.as_deref(),
            gram: a.gram.as_deref(),
            search: a.search,
            max_reductions: a.max_reductions,
            time_limit: a.time_limit,
            up_to_isomorphism: a.up_to_isomorphism,
            out: a.out.as_deref(),
        }),
        Command::Planarity(a) => commands::planarity(&a.graph),
        Command::Orbits(a) => commands::orbits(&a.generators, a.size, a.cap),
        Command::VerifyDataset => commands::verify_dataset(),
        Command::Dataset(DatasetCommand::List) => commands::dataset_list(),
        Command::Dataset(DatasetCommand::Show { name }) => commands::dataset_show(name),
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Check(_) => "check",
        Command::Assign(_) => "assign",
        Command::Bound(_) => "bound",
        Command::Reduce(_) => "reduce",
        Command::Planarity(_) => "planarity",
        Command::Orbits(_) => "orbits",
        Command::VerifyDataset => "verify-dataset",
        Command::Dataset(_) => "dataset",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    match run(&cli) {
        Ok(outcome) => {
            if cli.json {
                let mut report = json!({"schema": 1, "command": name, "ok": outcome.ok});
                if let (Value::Object(target), Value::Object(body)) = (&mut report, outcome.report) {
                    target.extend(body);
                }
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                print!("{}", outcome.text);
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            if cli.json {
                let report = json!({
                    "schema": 1,
                    "command": name,
                    "ok": false,
                    "error": {"module": err.module, "message": err.message},
                });
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                eprintln!("error[{}]: {}", err.module, err.message);
            }
            ExitCode::from(2)
        }
    }
}
