use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ewd_core::{Budget, BudgetExceeded, DomainError, ParseError};

mod commands;

#[derive(Debug, Parser)]
#[command(name = "ewd", version, about = "Worm battles, ordinal notations below ε₀ and Hardy hierarchies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Options,
}

#[derive(Debug, Args)]
struct Options {
    /// Output format. csv is only available for battle traces.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Print big values in full instead of summarizing past 10^4 digits.
    #[arg(long, global = true)]
    full: bool,
    #[arg(long, global = true, env = "EWD_MAX_STEPS", value_parser = clap::value_parser!(u64).range(1..))]
    max_steps: Option<u64>,
    #[arg(long, global = true, env = "EWD_MAX_BITS", value_parser = clap::value_parser!(u64).range(1..))]
    max_bits: Option<u64>,
    #[arg(long, global = true, env = "EWD_MAX_TERM_SIZE", value_parser = clap::value_parser!(u64).range(1..))]
    max_term_size: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    JsonLines,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the battle A, A⟦1⟧, A⟦1⟧⟦2⟧, ... until ⊤.
    Battle { worm: String },
    /// Evaluate a Hardy or fast-growing function.
    Hardy {
        #[arg(long, value_enum)]
        flavor: HardyFlavor,
        #[arg(long)]
        index: String,
        #[arg(long)]
        arg: u64,
        /// Also emit the evaluation sequence (step flavors only).
        #[arg(long)]
        trace: bool,
    },
    /// Print τ(A), o(A) and their norms.
    Translate { worm: String },
    /// Compare two worms in <₀.
    Compare { left: String, right: String },
    /// Check a lemma on random or given instances.
    Check {
        suite: String,
        #[arg(long, conflicts_with = "instance", default_value_t = 100)]
        random: u64,
        #[arg(long, conflicts_with = "instance", default_value_t = 0)]
        seed: u64,
        /// JSON instances, one per line.
        #[arg(long)]
        instance: Option<PathBuf>,
    },
    /// Print the canonical form of a term.
    Parse {
        term: String,
        #[arg(long, value_enum, default_value_t = TermKind::Ordinal)]
        kind: TermKind,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HardyFlavor {
    #[value(name = "H-ord")]
    HOrd,
    #[value(name = "H-tree")]
    HTree,
    #[value(name = "h-tree")]
    HTreeWorm,
    #[value(name = "h-worm")]
    HWorm,
    #[value(name = "F")]
    Fast,
    #[value(name = "collapsed")]
    Collapsed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TermKind {
    Ordinal,
    Tree,
    Worm,
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error("cannot parse {what} `{input}`: {source}")]
    Parse { what: &'static str, input: String, source: ParseError },
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("{0}")]
    Unknown(String),
    #[error("{0}")]
    Check(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse { .. } | Failure::Domain(_) | Failure::Usage(_) | Failure::Io(_) => 1,
            Failure::Budget(_) | Failure::Unknown(_) => 2,
            Failure::Check(_) => 3,
        }
    }
}

struct Ctx {
    out: Box<dyn Write>,
    format: Format,
    full: bool,
    budget: Budget,
}

fn budget(opts: &Options) -> Budget {
    let mut b = Budget::default();
    if let Some(s) = opts.max_steps {
        b.max_steps = s;
    }
    if let Some(s) = opts.max_bits {
        b.max_bits = s;
    }
    if let Some(s) = opts.max_term_size {
        b.max_term_size = s;
    }
    b
}

fn run(cli: Cli) -> Result<(), Failure> {
    if cli.opts.format == Format::Csv && !matches!(cli.command, Command::Battle { .. }) {
        return Err(Failure::Usage("csv output is only available for battle".into()));
    }
    let out: Box<dyn Write> = match &cli.opts.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let mut ctx = Ctx { out, format: cli.opts.format, full: cli.opts.full, budget: budget(&cli.opts) };
    let result = match cli.command {
        Command::Battle { worm } => commands::battle(&mut ctx, &worm),
        Command::Hardy { flavor, index, arg, trace } => commands::hardy(&mut ctx, flavor, &index, arg, trace),
        Command::Translate { worm } => commands::translate(&mut ctx, &worm),
        Command::Compare { left, right } => commands::compare(&mut ctx, &left, &right),
        Command::Check { suite, random, seed, instance } => match instance {
            Some(path) => commands::check_file(&mut ctx, &suite, &path),
            None => commands::check_random(&mut ctx, &suite, random, seed),
        },
        Command::Parse { term, kind } => commands::parse(&mut ctx, &term, kind),
    };
    ctx.out.flush()?;
    result
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
