//! Thin command-line front end over the `circmagic` library.
//!
//! Exit codes: 0 success/yes, 1 no/failure, 2 usage error, 3
//! unknown/budget. Primary output is one JSON record per line; pass
//! `--format table` for a human-readable view. The environment variable
//! `CIRCMAGIC_HARD_CAP` overrides the order ceiling for exhaustive
//! non-existence claims.

use circmagic::cli::{self, CmdOutput};
use circmagic::oracle::SearchBudget;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "circmagic", version)]
#[command(about = "Distance magic labelings of valency-6 circulant graphs")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct BudgetArgs {
    /// Node-expansion cap for search (0 = unlimited)
    #[arg(long, default_value_t = SearchBudget::DEFAULT_NODES)]
    budget_nodes: u64,

    /// Wall-clock cap in seconds for search (0 = unlimited)
    #[arg(long, default_value_t = 0)]
    budget_seconds: u64,
}

impl BudgetArgs {
    fn budget(&self) -> SearchBudget {
        SearchBudget {
            max_nodes: self.budget_nodes,
            max_seconds: self.budget_seconds,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Admissible characters of a set with type tags and witnesses
    Admissible {
        /// Connection set as "n:a,b,c" (residues may be unnormalized)
        set: String,
    },
    /// Decide distance magicness (exit 0 yes, 1 no, 3 unknown)
    Decide {
        set: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Match a set against the classified families
    Recognize { set: String },
    /// Construct a verified labeling for a family spec or a set
    Label {
        /// "Ml[m]", "Pr[m]", "C3K[m]", "T1a[d,d']", "T1b[d,d',d'']",
        /// "T2[d,d']", or a connection set "n:a,b,c"
        spec: String,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Write the labeling to a file (JSON array; CSV with --csv or a
        /// .csv extension)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        csv: bool,
    },
    /// Verify a labeling file against a set (exit 0 magic, 1 not)
    Verify {
        set: String,
        /// Labeling file: JSON array or two-column CSV
        #[arg(long)]
        labeling: PathBuf,
    },
    /// Exhaustive backtracking search (exit 0 found, 1 none, 3 budget)
    Search {
        set: String,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Disable the symmetry reductions
        #[arg(long)]
        no_symmetry: bool,
    },
    /// Connected classes of one order up to multiplier equivalence, or
    /// its family instances
    Enumerate {
        #[arg(long)]
        n: i64,
        /// List family instances instead of classes
        #[arg(long)]
        families: bool,
    },
    /// Sweep every class of every order up to a bound, comparing the
    /// decision procedure against independent search
    Scan {
        #[arg(long)]
        nmax: i64,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Worker threads (0 = default pool size)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Run the built-in fixture suite (exit 0 iff all pass)
    Selftest,
}

fn run(cmd: &Cmd) -> circmagic::Result<CmdOutput> {
    match cmd {
        Cmd::Admissible { set } => cli::cmd_admissible(set),
        Cmd::Decide { set, budget } => cli::cmd_decide(set, &budget.budget()),
        Cmd::Recognize { set } => cli::cmd_recognize(set),
        Cmd::Label {
            spec,
            budget,
            out,
            csv,
        } => cli::cmd_label(spec, &budget.budget(), out.as_deref(), *csv),
        Cmd::Verify { set, labeling } => cli::cmd_verify(set, labeling),
        Cmd::Search {
            set,
            budget,
            no_symmetry,
        } => cli::cmd_search(set, &budget.budget(), !no_symmetry),
        Cmd::Enumerate { n, families } => cli::cmd_enumerate(*n, *families),
        Cmd::Scan { nmax, budget, jobs } => cli::cmd_scan(*nmax, &budget.budget(), *jobs),
        Cmd::Selftest => cli::cmd_selftest(),
    }
}

fn main() {
    let args = Cli::parse();
    match run(&args.command) {
        Ok(output) => {
            for report in &output.reports {
                match args.format {
                    Format::Json => println!("{}", report.to_json_line()),
                    Format::Table => print!("{}", cli::render_table(report)),
                }
            }
            std::process::exit(output.exit);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(cli::error_exit_code(&e));
        }
    }
}
