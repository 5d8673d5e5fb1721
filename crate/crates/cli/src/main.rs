use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use monocone::pareto::QueueDiscipline;
use monocone_cli::{
    cmd_bound, cmd_dual, cmd_solve, cmd_verify, components_json, components_tsv, render, verdict_json, CliError,
    Format, SolveFlags,
};

#[derive(Parser)]
#[command(name = "monocone", version, about = "Exact nondominated sets of discrete multicriteria problems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Tsv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Tsv => Format::Tsv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the nondominated set and the local upper bounds.
    Solve {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Maximum number of scalarizations before giving up (exit code 3).
        #[arg(long)]
        max_iter: Option<u64>,
        /// Pending-apex order: fifo, lifo or random:<seed>.
        #[arg(long, default_value = "fifo", value_parser = parse_queue)]
        queue: QueueDiscipline,
        /// Ignore the problem's translation vector.
        #[arg(long)]
        no_translate: bool,
        /// Print run statistics and timing to stderr.
        #[arg(long)]
        report: bool,
    },
    /// Check a problem (or a stored result with --expected) against brute force.
    Verify {
        path: PathBuf,
        #[arg(long)]
        expected: Option<PathBuf>,
    },
    /// Irreducible components of a monomial ideal.
    Dual {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Print U(n + d, d).
    Bound { n: u64, d: u64 },
}

fn parse_queue(s: &str) -> Result<QueueDiscipline, String> {
    s.parse().map_err(|e: monocone::Error| e.to_string())
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Solve {
            path,
            format,
            max_iter,
            queue,
            no_translate,
            report,
        } => {
            let flags = SolveFlags {
                format: format.into(),
                max_iter,
                queue,
                no_translate,
            };
            let out = cmd_solve(&path, &flags)?;
            print!("{}", render(&out.document, flags.format));
            if report {
                eprintln!("{}", out.report);
            }
            Ok(0)
        }
        Command::Verify { path, expected } => {
            let verdict = cmd_verify(&path, expected.as_deref())?;
            print!("{}", verdict_json(&verdict));
            Ok(if verdict.pass { 0 } else { 1 })
        }
        Command::Dual { path, format } => {
            let components = cmd_dual(&path)?;
            match Format::from(format) {
                Format::Json => print!("{}", components_json(&components)),
                Format::Tsv => print!("{}", components_tsv(&components)),
            }
            Ok(0)
        }
        Command::Bound { n, d } => {
            println!("{}", cmd_bound(n, d));
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
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
