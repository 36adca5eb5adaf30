//! The ring-and-ideal input language.
//!
//! ```text
//! ring R = F101[x,y] degrevlex;          # field: Q | F<p>; order optional
//! ring S = Q[x,y] / (x*y);               # optional defining relations
//! use R;                                 # switch the active ring
//! ideal I = (x^2, x*y + y^2);
//! ideal J = colon(I, maxideal);
//! print length(I);
//! check stability(J, I, 4) == 1;
//! ```
//!
//! Polynomials use integer literals, variables of the active ring and
//! `+ - * / ^` (division only by integer constants). Names are resolved while
//! parsing, so a parsed [`Script`] only refers to bound rings, ideals and
//! variables.

mod ast;
mod eval;
mod lexer;
mod parser;

use std::fmt;

pub use ast::{ArgKind, Expr, Func, PolyExpr, RingSpec, Script, Statement, Stmt, ValueKind};
pub use eval::{run_script, CheckOutcome, Interpreter, ScriptOutcome, Value};
pub use parser::{parse_poly_expr, parse_ring_spec_ast, parse_script, parse_value_list};

/// 1-based line and column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    UnboundRing,
    UnboundName,
    UnknownVariable,
    Arity,
    Type,
    Invalid,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{pos}: {message}{}", expected_suffix(.expected))]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub pos: Pos,
    pub message: String,
    /// Tokens that would have been accepted, for syntax errors.
    pub expected: Vec<String>,
}

fn expected_suffix(expected: &[String]) -> String {
    if expected.is_empty() {
        String::new()
    } else {
        format!(" (expected one of: {})", expected.join(", "))
    }
}

impl ParseError {
    pub(crate) fn syntax(pos: Pos, message: impl Into<String>, expected: Vec<String>) -> Self {
        ParseError { kind: ParseErrorKind::Syntax, pos, message: message.into(), expected }
    }

    pub(crate) fn new(kind: ParseErrorKind, pos: Pos, message: impl Into<String>) -> Self {
        ParseError { kind, pos, message: message.into(), expected: Vec::new() }
    }

    pub fn pos(&self) -> Option<Pos> {
        Some(self.pos)
    }
}
