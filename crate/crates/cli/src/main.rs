use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

mod commands;
mod parse;
mod report;

use report::{Format, Report};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error(transparent)]
    Core(#[from] adlv_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Parser, Debug)]
#[command(name = "adlv", version, about = "Cell tables, lambda invariants and orbit counts for Res GL_n")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the sweep map on one rearrangement class.
    SweepCheck {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        d: usize,
        /// Letters per component, components separated by ';'.
        #[arg(long, allow_hyphen_values = true)]
        alphabet: String,
    },
    /// Type, cotype and sweep data of an EL-chart given as JSON.
    Chart {
        /// JSON file, or '-' for stdin.
        #[arg(long, conflicts_with = "json")]
        input: Option<PathBuf>,
        /// Inline JSON, e.g. '{"n":7,"m_vec":[5],"minima":[[0,1,2,3,4,5,6]]}'.
        #[arg(long)]
        json: Option<String>,
    },
    /// List P_{m,n,d}, or P_mu with --mu.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        m_vec: Option<String>,
        /// Hodge point rows separated by ';'.
        #[arg(long)]
        mu: Option<String>,
    },
    /// Superbasic cell table for a minuscule mu.
    Cells {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        m_vec: Option<String>,
        #[arg(long)]
        mu: String,
    },
    /// The lambda invariant of a class given by Newton and Kottwitz points.
    Lambda {
        #[arg(long)]
        group: String,
        /// Rationals p/q, factors separated by '|'.
        #[arg(long, allow_hyphen_values = true)]
        newton: String,
        #[arg(long, allow_hyphen_values = true)]
        kappa: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
    },
    /// A straight element of the affine Weyl group of GL_n in a class.
    Straight {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        newton: String,
        #[arg(long, allow_hyphen_values = true)]
        kappa: Option<String>,
    },
    /// Count W.mu in the coset of lambda.
    Count {
        #[arg(long)]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        newton: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        kappa: Option<String>,
        #[arg(long, default_value_t = 1000)]
        max_witnesses: usize,
    },
    /// Run every grid check.
    VerifyAll,
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("ADLV_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t >= 1)
        .ok_or_else(|| CliError::Validation(format!("ADLV_THREADS must be an integer >= 1, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Validation(e.to_string()))
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn run(command: Command) -> Result<Report, CliError> {
    match command {
        Command::SweepCheck { n, d, alphabet } => commands::sweep_check(n, d, &alphabet),
        Command::Chart { input, json } => {
            let text = match (input, json) {
                (Some(p), _) => read_input(&p)?,
                (None, Some(j)) => j,
                (None, None) => return Err(CliError::Validation("give --input or --json".into())),
            };
            commands::chart(&text)
        }
        Command::Enumerate { n, m, d, m_vec, mu } => {
            let spec = commands::spec_from(n, m, m_vec.as_deref(), d)?;
            commands::enumerate(&spec, mu.as_deref())
        }
        Command::Cells { n, m, d, m_vec, mu } => {
            let spec = commands::spec_from(n, m, m_vec.as_deref(), d)?;
            commands::cells(&spec, &mu)
        }
        Command::Lambda { group, newton, kappa, mu } => {
            let g = parse::group(&group)?;
            let inv = parse::invariants(&newton, kappa.as_deref())?;
            let mu = mu.as_deref().map(parse::cochar).transpose()?;
            commands::lambda(&g, &inv, mu.as_ref())
        }
        Command::Straight { n, newton, kappa } => {
            let inv = parse::invariants(&newton, kappa.as_deref())?;
            commands::straight(n, &inv)
        }
        Command::Count { group, mu, lambda, newton, kappa, max_witnesses } => {
            let g = parse::group(&group)?;
            let mu = parse::cochar(&mu)?;
            commands::count(commands::CountArgs {
                group: &g,
                mu: &mu,
                lambda: lambda.as_deref(),
                newton: newton.as_deref(),
                kappa: kappa.as_deref(),
                max_witnesses,
            })
        }
        Command::VerifyAll => commands::verify(),
    }
}

fn diagnostic(kind: &str, message: &str) {
    let line = json!({ "error": kind, "message": message });
    let _ = writeln!(std::io::stderr(), "{line}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            diagnostic("usage", e.to_string().trim());
            return ExitCode::from(1);
        }
    };
    let outcome = configure_threads().and_then(|()| {
        let report = run(cli.command)?;
        let text = report.render(cli.format)?;
        match &cli.output {
            Some(path) => std::fs::write(path, &text)?,
            None => std::io::stdout().write_all(text.as_bytes())?,
        }
        Ok(report.violation)
    });
    match outcome {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(v)) => {
            diagnostic("property_violation", &v);
            ExitCode::from(2)
        }
        Err(e) => {
            let kind = match e {
                CliError::Io(_) => "io",
                _ => "validation",
            };
            diagnostic(kind, &e.to_string());
            ExitCode::from(1)
        }
    }
}
