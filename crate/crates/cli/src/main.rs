//! `disthom`: distributive homology from the command line.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 input error, 3 budget.

mod args;
mod commands;
mod reproduce;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use disthom::algorithms::{Conjecture, ReductionMode};
use disthom::complex::DEFAULT_BUDGET;
use disthom::enumeration::CensusTable;
use disthom::Error;

use args::{load_magma, parse_dedup, parse_part, parse_predicate, parse_scalars, parse_sizes};
use commands::{Family, Outcome};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Budget(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget { .. } => CliError::Budget(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(name = "disthom", version, about = "Multi-term distributive homology of finite magmas")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

/// Flags shared by commands that read a magma file.
#[derive(clap::Args)]
struct Input {
    /// Magma JSON: `{"size": n, "ops": [[[..]]]}`, `ops[i][x][y] = x ⋆ᵢ y`.
    input: PathBuf,
    /// Adjoin `◁` and/or `▷`: `left`, `right` or `left,right`.
    #[arg(long)]
    adjoin_trivial: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Axioms, units, projectors and lattice invariants.
    Check {
        #[command(flatten)]
        input: Input,
    },
    /// Homology by exact Smith normal form.
    Homology {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        scalars: String,
        /// full, reduced[:t], f[:t], cf[:t], filtration:p, degenerate, normalized.
        #[arg(long, default_value = "full")]
        part: String,
        #[arg(long)]
        augmented: bool,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        /// Largest basis, in tuples, any degree may have.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Homology from the closed forms.
    ClosedForm {
        /// Lattice file; its `|L|` and `J` are used.
        input: Option<PathBuf>,
        #[arg(long)]
        adjoin_trivial: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        scalars: String,
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
        /// The two-element lattice, through its dedicated formulas.
        #[arg(long)]
        b1: bool,
        /// The one-point space; `--scalars` is then Σ alone.
        #[arg(long)]
        point: bool,
        /// cf, f, reduced, full or normalized.
        #[arg(long, default_value = "cf")]
        part: String,
        #[arg(long)]
        augmented: bool,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// SNF against closed forms and the orbit reduction, each where it applies.
    Compare {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        scalars: String,
        #[arg(long, default_value_t = 0)]
        basepoint: usize,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Predict `H(CF)` and `H(F)` by splitting along orbits.
    Reduce {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        scalars: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        /// Skip the hypothesis checks and report the prediction anyway.
        #[arg(long)]
        lenient: bool,
    },
    /// Mayer–Vietoris rank accounting for the two orbits of a pivot.
    Mv {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        pivot: usize,
        #[arg(long, allow_hyphen_values = true)]
        scalars: String,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
    },
    /// List small structures up to relabeling.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        predicate: String,
        /// none, iso or iso-duality.
        #[arg(long, default_value = "iso")]
        dedup: String,
    },
    /// Counts per cell of the spindle (1) or multishelf (2) table.
    Census {
        #[arg(long)]
        table: u8,
        #[arg(long, default_value = "3..4")]
        sizes: String,
    },
    /// Check the orbit and vanishing statements on every small structure.
    Scan {
        /// A conjecture name, or `all`.
        #[arg(long, default_value = "all")]
        conjecture: String,
        #[arg(long, default_value = "2..4")]
        sizes: String,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
    },
    /// Recompute a published table and diff it against the embedded golden.
    Reproduce {
        #[arg(long, value_parser = reproduce::TARGETS)]
        target: String,
    },
}

fn scalars_for(text: &str, m: &disthom::MultiMagma) -> Result<disthom::complex::ScalarVector, CliError> {
    parse_scalars(text, Some(m.num_ops()))
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Check { input } => {
            let m = load_magma(&input.input, input.adjoin_trivial.as_deref())?;
            commands::check(&m)
        }
        Command::Homology { input, scalars, part, augmented, max_degree, budget } => {
            let m = load_magma(&input.input, input.adjoin_trivial.as_deref())?;
            let s = scalars_for(&scalars, &m)?;
            commands::homology(&m, &s, parse_part(&part, augmented)?, max_degree, budget)
        }
        Command::ClosedForm { input, adjoin_trivial, scalars, size, j, b1, point, part, augmented, max_degree } => {
            let family = if point {
                Family::Point
            } else if b1 {
                Family::B1
            } else if let Some(path) = input {
                let m = load_magma(&path, adjoin_trivial.as_deref())?;
                let info = disthom::lattice::lattice_info(&m)?;
                if !info.is_distributive {
                    return Err(CliError::Input("closed forms need a distributive lattice".into()));
                }
                Family::Lattice { size: info.size(), j: info.j }
            } else {
                match (size, j) {
                    (Some(size), Some(j)) => Family::Lattice { size, j },
                    _ => return Err(CliError::Input("give a lattice file, --size and --j, --b1 or --point".into())),
                }
            };
            commands::closed_form(family, &parse_scalars(&scalars, None)?, &part, augmented, max_degree)
        }
        Command::Compare { input, scalars, basepoint, max_degree, budget } => {
            let m = load_magma(&input.input, input.adjoin_trivial.as_deref())?;
            let s = scalars_for(&scalars, &m)?;
            commands::compare(&m, &s, basepoint, max_degree, budget)
        }
        Command::Reduce { input, scalars, max_degree, lenient } => {
            let m = load_magma(&input.input, input.adjoin_trivial.as_deref())?;
            let s = scalars_for(&scalars, &m)?;
            let mode = if lenient { ReductionMode::Lenient } else { ReductionMode::Strict };
            commands::reduce(&m, &s, max_degree, mode)
        }
        Command::Mv { input, pivot, scalars, max_degree } => {
            let m = load_magma(&input.input, input.adjoin_trivial.as_deref())?;
            let s = scalars_for(&scalars, &m)?;
            commands::mv(&m, pivot, &s, max_degree)
        }
        Command::Enumerate { size, predicate, dedup } => {
            commands::enumerate(size, parse_predicate(&predicate)?, parse_dedup(&dedup)?)
        }
        Command::Census { table, sizes } => {
            let table = CensusTable::from_number(table)
                .ok_or_else(|| CliError::Input(format!("--table must be 1 or 2, got {table}")))?;
            commands::census_cmd(parse_sizes(&sizes)?, table, cli.format == Format::Csv)
        }
        Command::Scan { conjecture, sizes, max_degree } => {
            let which: Vec<Conjecture> = if conjecture == "all" {
                Conjecture::all().to_vec()
            } else {
                vec![conjecture.parse()?]
            };
            commands::scan(&which, parse_sizes(&sizes)?, max_degree)
        }
        Command::Reproduce { target } => reproduce::run(&target),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("serialisable")),
                Format::Text | Format::Csv => print!("{}", out.text),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification mismatch");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
