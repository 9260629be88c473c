mod commands;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use artin_core::config::Config;
use artin_core::Error;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "artin", version, about = "Garside normal forms, summit sets and parabolic subgroups")]
pub struct Cli {
    /// Group type such as A4, B3, I2(5), A2xA1, or `custom` to use the
    /// Coxeter matrix from the config file.
    pub group: String,

    #[command(subcommand)]
    pub command: Command,

    /// Exponent N of the Garside element Δ^N.
    #[arg(long = "n", visible_alias = "N", global = true, default_value_t = 1)]
    pub n: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// JSON file with budgets and limits.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Upper bound on worker threads.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Left normal form.
    Nf { word: String },
    /// Negative-positive normal form x^-1 y.
    Np { word: String },
    /// Positive-negative normal form a b^-1.
    Pn { word: String },
    /// Support of an element.
    Supp { word: String },
    Cycle { word: String },
    Decycle { word: String },
    Twist { word: String },
    /// Graph of a summit set.
    Summit {
        #[arg(long, default_value = "uss")]
        kind: String,
        word: String,
    },
    /// Parabolic closure of an element.
    Closure { word: String },
    Phi { word: String },
    /// Central element of a parabolic subgroup, written `BASE` or `BASE:CONJUGATOR`.
    Z { parabolic: String },
    /// Minimal standardizer of a parabolic subgroup.
    Standardize { parabolic: String },
    CommuteZ { p: String, q: String },
    /// Adjacency verdict for two proper irreducible parabolic subgroups.
    Adjacent {
        p: String,
        q: String,
        #[arg(long)]
        budget: Option<usize>,
    },
    Intersect {
        p: String,
        q: String,
        #[arg(long)]
        budget: Option<usize>,
    },
    Join {
        p: String,
        q: String,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Ball in the complex of irreducible parabolic subgroups.
    ComplexBall {
        p: String,
        #[arg(long, default_value_t = 1)]
        radius: usize,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Data of the positive-conjugate graph of s1 s2 in A4 and its action on
    /// central elements.
    Figures,
}

/// Result of a command: rendered output plus the exit status to report.
pub struct Emitted {
    pub text: String,
    pub code: u8,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::InvalidMatrix(_) | Error::NonSphericalType(_) | Error::RankTooLarge { .. } => 2,
        Error::BudgetExceeded(_) | Error::NoMinimumFound(_) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
    }
    let config = match &cli.config {
        None => Ok(Config::default()),
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
            .and_then(|text| Config::from_json(&text)),
    };
    let result = config.and_then(|config| commands::run(&cli, &config));
    match result {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &out.text),
                None => std::io::stdout().write_all(out.text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
