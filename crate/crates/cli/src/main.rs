use std::process::ExitCode;

use clap::{Parser, Subcommand};

use nominal_cli::{run, ArgError, Builder, Query, DEFAULT_FUEL, EXIT_ERROR};

/// Queries over untyped λ-terms up to α-equivalence.
///
/// Terms use `\x. body` (or `λx. body`) for abstraction and juxtaposition for
/// application. Exit status is 0 for an affirmative answer, 1 for a negative
/// one and 2 for errors.
#[derive(Parser)]
#[command(name = "nominal", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Are the two terms α-equivalent?
    Alphaeq { t: String, u: String },
    /// Free variables, sorted and space-separated.
    Fv { t: String },
    /// Capture-avoiding substitution t[name := u].
    Subst { t: String, name: String, u: String },
    /// Apply a permutation such as "(a b)(c d)" to every name in the term.
    Perm { perm: String, t: String },
    /// Is the name fresh for the term?
    Fresh { name: String, t: String },
    /// Leftmost-outermost β-reduction.
    Normalize {
        t: String,
        #[arg(long, default_value_t = DEFAULT_FUEL)]
        fuel: usize,
    },
}

fn build(cmd: Cmd) -> Result<nominal_cli::Command, ArgError> {
    let mut b = Builder::new();
    let query = match cmd {
        Cmd::Alphaeq { t, u } => Query::AlphaEq(b.term("t", &t)?, b.term("u", &u)?),
        Cmd::Fv { t } => Query::Fv(b.term("t", &t)?),
        Cmd::Subst { t, name, u } => {
            Query::Subst(b.term("t", &t)?, b.name("name", &name)?, b.term("u", &u)?)
        }
        Cmd::Perm { perm, t } => Query::Perm(b.perm("perm", &perm)?, b.term("t", &t)?),
        Cmd::Fresh { name, t } => Query::Fresh(b.name("name", &name)?, b.term("t", &t)?),
        Cmd::Normalize { t, fuel } => Query::Normalize(b.term("t", &t)?, fuel),
    };
    Ok(b.build(query))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match build(cli.command) {
        Ok(cmd) => {
            let out = run(cmd);
            print!("{}", out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
