//! `kjac`: evaluate third-order k-Jacobsthal terms and matrices, tabulate
//! them, and run the identity checks.
//!
//! Exit codes: 0 success, 1 an identity check failed, 2 usage or domain error.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kjacobsthal::identities::{self, IdentityId, IndexRange};
use kjacobsthal::{Error, KValue};

use output::Payload;

#[derive(Parser, Debug)]
#[command(
    name = "kjac",
    version,
    about = "Exact third-order k-Jacobsthal numbers and matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the formatted payload to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print one term of a scalar sequence.
    Term {
        /// J, j, T, t, or the k = 2 classics Jc, Kc, Z, Y.
        #[arg(long)]
        family: String,
        /// Positive rational `p` or `p/q`, or `sym` for symbolic k.
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Print a 3×3 matrix: M, N (n ≥ 0), Jn or jn (any n).
    Matrix {
        #[arg(long)]
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Print a run of consecutive terms of a scalar sequence.
    Table {
        #[arg(long)]
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
        #[arg(long, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Check identities over an index grid; `all` runs the whole registry.
    Verify {
        #[arg(long, default_value = "all")]
        identity: String,
        /// Comma-separated k values, e.g. `2,7/3,sym`.
        #[arg(long, default_value = "1/2,1,2,3,7/3,sym", allow_hyphen_values = true)]
        k: String,
        /// Inclusive range `a..b`.
        #[arg(long, default_value = "1..10", allow_hyphen_values = true)]
        n: String,
        #[arg(long, default_value = "1..10", allow_hyphen_values = true)]
        m: String,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
}

fn parse_k(k: Option<&str>) -> Result<KValue, Error> {
    k.ok_or_else(|| Error::Usage("--k is required for this family".into()))?
        .parse()
}

fn parse_k_list(list: &str) -> Result<Vec<KValue>, Error> {
    list.split(',').map(|s| s.parse()).collect()
}

fn run(command: Command) -> Result<(Payload, bool), Error> {
    match command {
        Command::Term {
            family,
            k,
            n,
            format,
        } => {
            let value = output::term_value(&family, || parse_k(k.as_deref()), n)?;
            Ok((output::term(&family, k.as_deref(), n, &value, format), true))
        }
        Command::Matrix {
            family,
            k,
            n,
            format,
        } => {
            let kv = parse_k(k.as_deref())?;
            let term = kjacobsthal::matrices::matrix(&kv, family.parse()?, n)?;
            Ok((output::matrix(&term.matrix, format), true))
        }
        Command::Table {
            family,
            k,
            from,
            to,
            format,
        } => {
            if from > to {
                return Err(Error::Usage(format!("empty range --from {from} --to {to}")));
            }
            let rows = output::table_values(&family, || parse_k(k.as_deref()), from, to)?;
            Ok((output::table(&rows, format), true))
        }
        Command::Verify {
            identity,
            k,
            n,
            m,
            format,
        } => {
            let ks = parse_k_list(&k)?;
            let n: IndexRange = n.parse()?;
            let m: IndexRange = m.parse()?;
            let reports = if identity == "all" {
                identities::verify_all(&ks, n, m)?
            } else {
                let id: IdentityId = identity.parse()?;
                let m = id.uses_m().then_some(m);
                vec![identities::verify_identity(id, &ks, n, m)?]
            };
            let ok = reports.iter().all(|r| r.passed());
            Ok((output::reports(&reports, format), ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((payload, ok)) => {
            if let Err(e) = payload.emit(cli.out.as_deref()) {
                eprintln!("kjac: {e}");
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("kjac: {e}");
            match e {
                Error::Consistency(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
