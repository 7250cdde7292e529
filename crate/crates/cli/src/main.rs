//! `mck`: runs the verification suites of mck-core and prints reports.

mod checks;
mod report;

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use checks::Job;
use report::{Format, Report};

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Report(#[from] report::ReportError),
    #[error("reading input: {0}")]
    Io(#[from] std::io::Error),
    #[error("worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

#[derive(Parser, Debug)]
#[command(
    name = "mck",
    version,
    about = "Exact verification reports for cubic hypersurfaces"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Worker threads; 0 picks one per core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Schubert expansion and degree of g^a c^b on Gr(2, m).
    Schubert {
        #[arg(long)]
        m: u32,
        /// A monomial in g and c, e.g. g^6c or g^4*c^2.
        #[arg(long)]
        monomial: String,
    },
    /// Checks on the tautological ring of the Fano variety of lines.
    Fano {
        #[arg(long)]
        n: u32,
        #[arg(value_enum)]
        check: FanoCheck,
    },
    /// CK projectors and multiplicativity obstructions of a cubic n-fold.
    Mck {
        #[arg(long)]
        n: u32,
        /// A single triple i,j,k instead of the full sweep.
        #[arg(long)]
        triple: Option<String>,
    },
    /// Hodge diamonds and Betti numbers.
    Hodge {
        #[arg(value_enum)]
        variety: Variety,
        #[arg(long, default_value_t = 4)]
        n: u32,
    },
    /// The full acceptance suite.
    VerifyAll {
        #[arg(long, default_value_t = 8)]
        n_max: u32,
    },
    /// Re-renders a JSON report read from a file, or stdin for "-".
    Render { input: String },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FanoCheck {
    Hilbert,
    Socle,
    Recurrence,
    Dims,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Variety {
    Cubic,
    KuechleC7,
    FanoOfLines,
}

/// Parses g^a c^b, with optional `*` or `·` between factors.
fn parse_monomial(s: &str) -> Result<(u32, u32), CliError> {
    let bad = || {
        CliError::Usage(format!(
            "malformed monomial {s:?}; expected e.g. g^6c or g^4*c^2"
        ))
    };
    let mut exps = [0u32, 0u32];
    let mut chars = s.trim().chars().filter(|c| !c.is_whitespace()).peekable();
    if chars.peek().is_none() {
        return Err(bad());
    }
    if s.trim() == "1" {
        return Ok((0, 0));
    }
    while let Some(c) = chars.next() {
        let slot = match c {
            'g' => 0,
            'c' => 1,
            '*' | '·' => continue,
            _ => return Err(bad()),
        };
        let mut e = 1;
        if chars.peek() == Some(&'^') {
            chars.next();
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            e = digits.parse().map_err(|_| bad())?;
        }
        exps[slot] += e;
    }
    Ok((exps[0], exps[1]))
}

fn parse_triple(s: &str, n: u32) -> Result<(usize, usize, usize), CliError> {
    let bad = || {
        CliError::Usage(format!(
            "malformed triple {s:?}; expected i,j,k with entries in 0..={}",
            2 * n
        ))
    };
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    match parts[..] {
        [i, j, k] if [i, j, k].iter().all(|&x| x <= 2 * n as usize) => Ok((i, j, k)),
        _ => Err(bad()),
    }
}

fn jobs_for(command: &Command) -> Result<Vec<Job>, CliError> {
    Ok(match *command {
        Command::Schubert { m, ref monomial } => {
            if m < 3 {
                return Err(CliError::Usage(format!("--m {m}: need m >= 3")));
            }
            let (a, b) = parse_monomial(monomial)?;
            vec![checks::schubert_product(m, a, b)]
        }
        Command::Fano { n, check } => match check {
            FanoCheck::Hilbert => vec![checks::fano_hilbert(n)],
            FanoCheck::Socle => vec![checks::fano_socle(n), checks::bd_pairing(n)],
            FanoCheck::Recurrence => {
                vec![
                    checks::fano_recurrence(n),
                    checks::fano_recurrence_closed_form(n),
                ]
            }
            FanoCheck::Dims => vec![checks::fano_dims_f(n), checks::fano_dims_fxf(n)],
        },
        Command::Mck { n, ref triple } => {
            if n < 2 {
                return Err(CliError::Usage(format!("--n {n}: need n >= 2")));
            }
            match triple {
                Some(t) => vec![checks::mck_triple(n, parse_triple(t, n)?)],
                None => vec![
                    checks::mck_ck_axioms(n),
                    checks::mck_self_duality(n),
                    checks::mck_sweep_job(n),
                    checks::diagonal_gate(n),
                ],
            }
        }
        Command::Hodge { variety, n } => match variety {
            Variety::Cubic => vec![checks::hodge_cubic(n)],
            Variety::KuechleC7 => vec![checks::hodge_kuechle_c7()],
            Variety::FanoOfLines => vec![checks::hodge_fano_of_lines(n)],
        },
        Command::VerifyAll { n_max } => checks::verify_all(n_max),
        Command::Render { .. } => Vec::new(),
    })
}

fn command_echo() -> String {
    std::env::args().skip(1).collect::<Vec<_>>().join(" ")
}

fn run(cli: Cli) -> Result<Report, CliError> {
    if let Command::Render { input } = &cli.command {
        let mut text = String::new();
        if input == "-" {
            std::io::stdin().read_to_string(&mut text)?;
        } else {
            text = std::fs::read_to_string(input)?;
        }
        return Ok(Report::from_json(&text)?);
    }
    let jobs = jobs_for(&cli.command)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()?;
    let checks = pool.install(|| checks::run_jobs(jobs));
    Ok(Report {
        version: env!("CARGO_PKG_VERSION").into(),
        command: command_echo(),
        checks,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let report = match run(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("mck: {e}");
            return ExitCode::from(match e {
                CliError::Usage(_) => 2,
                _ => 1,
            });
        }
    };
    match report.render(format) {
        Ok(s) => print!("{s}"),
        Err(e) => {
            eprintln!("mck: {e}");
            return ExitCode::from(1);
        }
    }
    if report.has_failure() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomials() {
        assert_eq!(parse_monomial("g^8").unwrap(), (8, 0));
        assert_eq!(parse_monomial("g^6c").unwrap(), (6, 1));
        assert_eq!(parse_monomial("g^4*c^2").unwrap(), (4, 2));
        assert_eq!(parse_monomial("c").unwrap(), (0, 1));
        assert!(parse_monomial("g^").is_err());
        assert!(parse_monomial("x^2").is_err());
        assert!(parse_monomial("").is_err());
    }

    #[test]
    fn triples() {
        assert_eq!(parse_triple("2,2,0", 4).unwrap(), (2, 2, 0));
        assert!(parse_triple("2,2", 4).is_err());
        assert!(parse_triple("9,0,0", 4).is_err());
    }
}
