//! Command-line queries over λ-terms.
//!
//! Every argument of one invocation is parsed against a shared
//! [`SymbolTable`], so the same identifier denotes the same name in all of
//! them.

use std::fmt;

use nominal::freshness::fresh_dec;
use nominal::lambda::{alpha_eq, fv, normalize, subst, term_act};
use nominal::syntax::{parse_name, parse_perm, parse_term, print_term, ParseError, SymbolTable};
use nominal::{Name, Perm, Term};

pub const DEFAULT_FUEL: usize = 1000;

/// Exit status: affirmative verdict or success.
pub const EXIT_OK: i32 = 0;
/// Exit status: negative verdict.
pub const EXIT_NEGATIVE: i32 = 1;
/// Exit status: parse or usage error.
pub const EXIT_ERROR: i32 = 2;

/// A parsed query. All terms and names are resolved against `table`.
#[derive(Clone, Debug)]
pub struct Command {
    pub query: Query,
    pub table: SymbolTable,
}

#[derive(Clone, Debug)]
pub enum Query {
    AlphaEq(Term, Term),
    Fv(Term),
    Subst(Term, Name, Term),
    Perm(Perm, Term),
    Fresh(Name, Term),
    Normalize(Term, usize),
}

/// Which argument failed to parse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArgError {
    pub argument: &'static str,
    pub error: ParseError,
}

impl fmt::Display for ArgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "in {}: {}", self.argument, self.error)
    }
}

impl std::error::Error for ArgError {}

/// Resolves textual arguments into a [`Command`].
pub struct Builder {
    table: SymbolTable,
}

impl Default for Builder {
    fn default() -> Self {
        Builder::new()
    }
}

impl Builder {
    pub fn new() -> Builder {
        Builder {
            table: SymbolTable::new(),
        }
    }

    pub fn term(&mut self, argument: &'static str, src: &str) -> Result<Term, ArgError> {
        parse_term(src, &mut self.table).map_err(|error| ArgError { argument, error })
    }

    pub fn name(&mut self, argument: &'static str, src: &str) -> Result<Name, ArgError> {
        parse_name(src, &mut self.table).map_err(|error| ArgError { argument, error })
    }

    pub fn perm(&mut self, argument: &'static str, src: &str) -> Result<Perm, ArgError> {
        parse_perm(src, &mut self.table).map_err(|error| ArgError { argument, error })
    }

    pub fn build(self, query: Query) -> Command {
        Command {
            query,
            table: self.table,
        }
    }
}

/// Text for standard output together with the exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

fn verdict(b: bool) -> Output {
    Output {
        stdout: format!("{}\n", b),
        code: if b { EXIT_OK } else { EXIT_NEGATIVE },
    }
}

pub fn run(cmd: Command) -> Output {
    let mut table = cmd.table;
    match cmd.query {
        Query::AlphaEq(t, u) => verdict(alpha_eq(&t, &u)),
        Query::Fresh(a, t) => verdict(fresh_dec(a, &t)),
        Query::Fv(t) => {
            let mut labels: Vec<String> = fv(&t)
                .iter()
                .map(|a| table.ensure_label(a).to_string())
                .collect();
            labels.sort();
            Output {
                stdout: format!("{}\n", labels.join(" ")),
                code: EXIT_OK,
            }
        }
        Query::Subst(t, a, u) => Output {
            stdout: format!("{}\n", print_term(&subst(&t, a, &u), &mut table)),
            code: EXIT_OK,
        },
        Query::Perm(p, t) => Output {
            stdout: format!("{}\n", print_term(&term_act(&p, &t), &mut table)),
            code: EXIT_OK,
        },
        Query::Normalize(t, fuel) => {
            let r = normalize(&t, fuel);
            let status = if r.normal {
                format!("steps={}", r.steps)
            } else {
                "fuel-exhausted".to_string()
            };
            Output {
                stdout: format!("{}\n{}\n", print_term(&r.term, &mut table), status),
                code: if r.normal { EXIT_OK } else { EXIT_NEGATIVE },
            }
        }
    }
}
