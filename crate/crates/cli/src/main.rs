use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use cdgraph::{Exec, Family};
use cdgraph_cli::commands::{self, Outcome};
use cdgraph_cli::{Format, Span, Which, EXIT_USAGE};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "cdgraph",
    version,
    about = "Exact spectra and validity checks for character degree graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family graph and write it as a graph file.
    Construct {
        #[arg(value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        n1: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Comma-separated vertex labels carried into the output.
        #[arg(long)]
        labels: Option<String>,
    },
    /// Run every necessary-condition check on a graph file.
    Check {
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        labels: Option<String>,
    },
    /// Exact characteristic polynomial and integer spectrum.
    Spectrum {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "laplacian")]
        which: WhichArg,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        labels: Option<String>,
    },
    /// Compare a family sweep against its closed forms.
    Verify {
        #[arg(value_parser = parse_family)]
        family: Family,
        /// `a..b` (inclusive) or a single value.
        #[arg(long)]
        n: Span,
        #[arg(long)]
        n1: Option<Span>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichArg {
    Laplacian,
    DistanceLaplacian,
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::from_name(s).ok_or_else(|| {
        let names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
        format!("unknown family `{s}`; expected one of {}", names.join(", "))
    })
}

fn read_input(path: Option<&PathBuf>) -> Result<String, Outcome> {
    let mut text = String::new();
    let result = match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p).map(|t| text = t),
        _ => io::stdin().read_to_string(&mut text).map(|_| ()),
    };
    result.map_err(|e| Outcome::usage(format!("cannot read input: {e}")))?;
    Ok(text)
}

fn run(cli: Cli) -> (Outcome, Option<PathBuf>) {
    let exec = Exec::default();
    match cli.command {
        Command::Construct {
            family,
            n,
            n1,
            format,
            output,
            labels,
        } => {
            let format = match format {
                FormatArg::Json => Format::Json,
                FormatArg::Edgelist => Format::Edgelist,
            };
            (
                commands::construct(family, n, n1, format, labels.as_deref()),
                output,
            )
        }
        Command::Check {
            input,
            output,
            labels,
        } => {
            let outcome = read_input(input.as_ref())
                .and_then(|t| commands::load(&t, labels.as_deref()))
                .map_or_else(|o| o, |f| commands::check(&f));
            (outcome, output)
        }
        Command::Spectrum {
            input,
            which,
            output,
            labels,
        } => {
            let which = match which {
                WhichArg::Laplacian => Which::Laplacian,
                WhichArg::DistanceLaplacian => Which::DistanceLaplacian,
            };
            let outcome = read_input(input.as_ref())
                .and_then(|t| commands::load(&t, labels.as_deref()))
                .map_or_else(|o| o, |f| commands::spectrum(&f, which, exec));
            (outcome, output)
        }
        Command::Verify {
            family,
            n,
            n1,
            output,
        } => (commands::verify(family, n, n1, exec), output),
    }
}

fn main() -> ExitCode {
    let (outcome, output) = run(Cli::parse());
    if !outcome.output.is_empty() {
        let written = match &output {
            Some(path) => std::fs::write(path, &outcome.output),
            None => io::stdout().write_all(outcome.output.as_bytes()),
        };
        if let Err(e) = written {
            eprintln!("error: cannot write output: {e}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    }
    if !outcome.message.is_empty() {
        eprintln!("{}", outcome.message);
    }
    ExitCode::from(outcome.code as u8)
}
