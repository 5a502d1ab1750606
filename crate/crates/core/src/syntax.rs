//! Concrete syntax for λ-terms and permutations.
//!
//! ```text
//! term  ::= ("\" | "λ") ident "." term
//!         | atom atom*
//! atom  ::= ident | "(" term ")"
//! ident ::= [a-zA-Z_][a-zA-Z0-9_']*
//! perm  ::= ("(" ident ident ")")*
//! ```
//!
//! Application is left-associative and an abstraction body extends as far to
//! the right as possible. Identifiers are mapped to [`Name`]s through a
//! [`SymbolTable`], in order of first appearance.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::atoms::Name;
use crate::lambda::Term;
use crate::perm::{Perm, Swap};

/// A bijection between identifiers and names.
#[derive(Clone, Debug, Default)]
pub struct SymbolTable {
    labels: Vec<Option<String>>,
    names: HashMap<String, Name>,
}

impl SymbolTable {
    pub fn new() -> SymbolTable {
        SymbolTable::default()
    }

    /// Table labelling `Name::new(i)` with `labels[i]`.
    pub fn with_labels<I, S>(labels: I) -> SymbolTable
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut t = SymbolTable::new();
        for l in labels {
            t.intern(&l.into());
        }
        t
    }

    /// The name for `label`, allocating the next unused index on first use.
    pub fn intern(&mut self, label: &str) -> Name {
        if let Some(&n) = self.names.get(label) {
            return n;
        }
        let n = Name::new(self.labels.len() as u32);
        self.labels.push(Some(label.to_string()));
        self.names.insert(label.to_string(), n);
        n
    }

    pub fn lookup(&self, label: &str) -> Option<Name> {
        self.names.get(label).copied()
    }

    pub fn label(&self, name: Name) -> Option<&str> {
        self.labels.get(name.index() as usize)?.as_deref()
    }

    /// Gives `name` a label if it has none. Generated labels run `a`, `b`, …,
    /// `z`, `a1`, …, skipping labels already taken.
    pub fn ensure_label(&mut self, name: Name) -> &str {
        let i = name.index() as usize;
        if self.labels.len() <= i {
            self.labels.resize(i + 1, None);
        }
        if self.labels[i].is_none() {
            let label = (0..)
                .flat_map(|round: u32| {
                    (b'a'..=b'z').map(move |c| match round {
                        0 => (c as char).to_string(),
                        r => format!("{}{}", c as char, r),
                    })
                })
                .find(|l| !self.names.contains_key(l))
                .unwrap();
            self.names.insert(label.clone(), name);
            self.labels[i] = Some(label);
        }
        self.labels[i].as_deref().unwrap()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Lambda,
    Dot,
    Open,
    Close,
    Ident(String),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Lambda => f.write_str("'\\'"),
            Tok::Dot => f.write_str("'.'"),
            Tok::Open => f.write_str("'('"),
            Tok::Close => f.write_str("')'"),
            Tok::Ident(s) => write!(f, "identifier '{}'", s),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let simple = match c {
            '\\' | 'λ' => Some(Tok::Lambda),
            '.' => Some(Tok::Dot),
            '(' => Some(Tok::Open),
            ')' => Some(Tok::Close),
            _ => None,
        };
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
        } else if c.is_whitespace() {
            chars.next();
            column += 1;
        } else if let Some(tok) = simple {
            chars.next();
            column += 1;
            out.push(Token { tok, line: l, column: col });
        } else if is_ident_start(c) {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if !is_ident_continue(c) {
                    break;
                }
                s.push(c);
                chars.next();
                column += 1;
            }
            out.push(Token { tok: Tok::Ident(s), line: l, column: col });
        } else {
            return Err(ParseError {
                line: l,
                column: col,
                message: format!("unexpected character '{}'", c),
            });
        }
    }
    out.push(Token { tok: Tok::End, line, column });
    Ok(out)
}

struct Parser<'t> {
    tokens: Vec<Token>,
    pos: usize,
    table: &'t mut SymbolTable,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ParseError {
        let t = self.peek();
        ParseError {
            line: t.line,
            column: t.column,
            message: format!("expected {}, found {}", expected, t.tok),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if self.peek().tok == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&tok.to_string()))
        }
    }

    fn ident(&mut self) -> Result<Name, ParseError> {
        match &self.peek().tok {
            Tok::Ident(s) => {
                let n = self.table.intern(&s.clone());
                self.bump();
                Ok(n)
            }
            _ => Err(self.error("identifier")),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        if self.peek().tok == Tok::Lambda {
            self.bump();
            let binder = self.ident()?;
            self.expect(Tok::Dot)?;
            let body = self.term()?;
            return Ok(Term::lam(binder, body));
        }
        let mut t = self.atom()?;
        while matches!(self.peek().tok, Tok::Ident(_) | Tok::Open) {
            let a = self.atom()?;
            t = Term::app(t, a);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        match self.peek().tok {
            Tok::Ident(_) => Ok(Term::var(self.ident()?)),
            Tok::Open => {
                self.bump();
                let t = self.term()?;
                self.expect(Tok::Close)?;
                Ok(t)
            }
            _ => Err(self.error("identifier, '(' or '\\'")),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.peek().tok == Tok::End {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }
}

pub fn parse_term(src: &str, table: &mut SymbolTable) -> Result<Term, ParseError> {
    let mut p = Parser { tokens: lex(src)?, pos: 0, table };
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

/// A single identifier, as used for the substituted or tested name.
pub fn parse_name(src: &str, table: &mut SymbolTable) -> Result<Name, ParseError> {
    let mut p = Parser { tokens: lex(src)?, pos: 0, table };
    let n = p.ident()?;
    p.finish()?;
    Ok(n)
}

/// A sequence of swaps such as `(a b)(c d)`, applied left to right. The empty
/// string is the identity.
pub fn parse_perm(src: &str, table: &mut SymbolTable) -> Result<Perm, ParseError> {
    let mut p = Parser { tokens: lex(src)?, pos: 0, table };
    let mut swaps = Vec::new();
    while p.peek().tok == Tok::Open {
        p.bump();
        let a = p.ident()?;
        let b = p.ident()?;
        p.expect(Tok::Close)?;
        swaps.push(Swap::new(a, b));
    }
    if p.peek().tok != Tok::End {
        return Err(p.error("'(' or end of input"));
    }
    Ok(Perm::from_swaps(swaps))
}

/// Renders `t` in the grammar above with as few parentheses as it allows.
/// Names without a label in `table` receive generated ones.
pub fn print_term(t: &Term, table: &mut SymbolTable) -> String {
    let mut out = String::new();
    write_term(t, table, &mut out);
    out
}

fn write_term(t: &Term, table: &mut SymbolTable, out: &mut String) {
    match t {
        Term::Var(a) => out.push_str(table.ensure_label(*a)),
        Term::Lam(b, body) => {
            out.push('\\');
            out.push_str(table.ensure_label(*b));
            out.push_str(". ");
            write_term(body, table, out);
        }
        Term::App(f, a) => {
            if matches!(**f, Term::Lam(..)) {
                out.push('(');
                write_term(f, table, out);
                out.push(')');
            } else {
                write_term(f, table, out);
            }
            out.push(' ');
            if matches!(**a, Term::Var(_)) {
                write_term(a, table, out);
            } else {
                out.push('(');
                write_term(a, table, out);
                out.push(')');
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(src: &str) -> (Term, SymbolTable) {
        let mut table = SymbolTable::new();
        let t = parse_term(src, &mut table).unwrap();
        (t, table)
    }

    #[test]
    fn grammar_examples() {
        let (t, table) = parse("\\x. x");
        let x = table.lookup("x").unwrap();
        assert_eq!(t, Term::lam(x, Term::var(x)));

        let (t, table) = parse("(\\x. x y) z");
        let [x, y, z] = ["x", "y", "z"].map(|l| table.lookup(l).unwrap());
        assert_eq!(
            t,
            Term::app(
                Term::lam(x, Term::app(Term::var(x), Term::var(y))),
                Term::var(z)
            )
        );

        let (t, table) = parse("λf. f a b");
        let [f, a, b] = ["f", "a", "b"].map(|l| table.lookup(l).unwrap());
        assert_eq!(
            t,
            Term::lam(f, Term::app(Term::app(Term::var(f), Term::var(a)), Term::var(b)))
        );
    }

    #[test]
    fn errors_carry_position() {
        let mut table = SymbolTable::new();
        let e = parse_term("\\x.", &mut table).unwrap_err();
        assert_eq!((e.line, e.column), (1, 4));
        assert!(e.message.contains("expected"), "{}", e);
        let e = parse_term("x\n  )", &mut table).unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = parse_term("x $", &mut table).unwrap_err();
        assert_eq!((e.line, e.column), (1, 3));
        assert!(parse_term("", &mut table).is_err());
        assert!(parse_term("\\x x", &mut table).is_err());
        assert!(parse_term("(x", &mut table).is_err());
    }

    #[test]
    fn identifiers() {
        let (t, table) = parse("x_1' _y");
        assert_eq!(t.size(), 3);
        assert!(table.lookup("x_1'").is_some());
        assert!(table.lookup("_y").is_some());
        assert!(parse_term("1x", &mut SymbolTable::new()).is_err());
    }

    #[test]
    fn permutations() {
        let mut table = SymbolTable::new();
        let p = parse_perm("(a b)(c d)", &mut table).unwrap();
        assert_eq!(p.swaps().len(), 2);
        assert_eq!(p.apply(table.lookup("a").unwrap()), table.lookup("b").unwrap());
        assert!(parse_perm("", &mut table).unwrap().is_empty());
        assert!(parse_perm("(a)", &mut table).is_err());
        assert!(parse_perm("a b", &mut table).is_err());
    }

    #[test]
    fn printing() {
        for src in ["\\x. x", "(\\x. x) y", "x (y z)", "x y z", "\\x. \\y. x y", "(\\x. x) (\\y. y)"] {
            let (t, mut table) = parse(src);
            assert_eq!(print_term(&t, &mut table), src);
        }
    }

    #[test]
    fn generated_labels_avoid_taken_ones() {
        let mut table = SymbolTable::with_labels(["a", "y"]);
        let t = Term::lam(Name::new(5), Term::var(Name::new(1)));
        assert_eq!(print_term(&t, &mut table), "\\b. y");
        assert_eq!(table.label(Name::new(5)), Some("b"));
    }
}
