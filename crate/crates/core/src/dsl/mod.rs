//! A small expression language for writing predicates and brick functions
//! as text.
//!
//! A program is one expression over the cell coordinates `x`, `y`, `z`.
//! Programs of type `Bool` are predicates; programs of type `Brick` are brick
//! functions. The language has no recursion or loops, so evaluation always
//! terminates.
//!
//! ```text
//! program  = expr EOF
//! expr     = "if" expr "then" expr "else" expr
//!          | "let" IDENT "=" expr "in" expr
//!          | or
//! or       = xor { "or" xor }
//! xor      = and { "xor" and }
//! and      = cmp { "and" cmp }
//! cmp      = sum [ ( "<" | "<=" | "=" | "<>" | ">=" | ">" ) sum ]
//! sum      = term { ( "+" | "-" ) term }
//! term     = unary { ( "*" | "div" | "mod" ) unary }
//! unary    = ( "-" | "not" ) unary | atom
//! atom     = INT | FLOAT | "true" | "false" | BRICK | IDENT
//!          | FUNC "(" expr ")" | "(" expr ")"
//! FUNC     = "sin" | "cos" | "abs" | "toFloat" | "round"
//! BRICK    = palette name, optionally written "Pieces.NAME"
//! INT      = ["~"] digits
//! FLOAT    = ["~"] digits [ "." digits ] [ ("e" | "E") ["+" | "-"] digits ]
//! ```
//!
//! A `FLOAT` needs a fraction or an exponent. `~` marks a negative literal;
//! `-` is the negation operator. `#` starts a comment that runs to the end
//! of the line.

mod ast;
mod eval;
mod lexer;
mod parser;
mod print;
mod types;

use std::fmt;

use thiserror::Error;

pub use ast::{BinOp, Expr, Func, UnOp};
pub use eval::{eval, EvalError, Value};
pub use lexer::Pos;
pub use parser::parse;
pub use types::{typecheck, ExprType, COORDINATES};

use crate::traversal::{BrickFunction, Predicate};
use crate::{Brick, Point};

/// A lexing or parsing failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct SyntaxError {
    pub pos: Pos,
    pub message: String,
    /// What the parser would have accepted at `pos`.
    pub expected: Vec<String>,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at {}: {}", self.pos, self.message)?;
        if !self.expected.is_empty() {
            write!(f, "; expected one of: {}", self.expected.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("type error in `{expr}`: {message}")]
pub struct TypeError {
    pub message: String,
    /// The offending subexpression, printed.
    pub expr: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error("expected {expected}, found {found}")]
    Role {
        expected: &'static str,
        found: ExprType,
    },
}

fn compile(text: &str, want: ExprType, role: &'static str) -> Result<Expr, DslError> {
    let expr = parse(text)?;
    let ty = typecheck(&expr)?;
    if ty != want {
        return Err(DslError::Role {
            expected: role,
            found: ty,
        });
    }
    Ok(expr)
}

/// A typechecked `Bool` program.
#[derive(Debug, Clone, PartialEq)]
pub struct CompiledPredicate {
    expr: Expr,
}

impl CompiledPredicate {
    pub fn expr(&self) -> &Expr {
        &self.expr
    }
}

impl Predicate for CompiledPredicate {
    fn holds(&self, p: Point) -> Result<bool, EvalError> {
        match eval(&self.expr, p)? {
            Value::Bool(b) => Ok(b),
            _ => Err(EvalError::IllTyped {
                expr: self.expr.to_string(),
                point: p,
            }),
        }
    }
}

/// A typechecked `Brick` program.
#[derive(Debug, Clone, PartialEq)]
pub struct CompiledBrickFn {
    expr: Expr,
}

impl CompiledBrickFn {
    pub fn expr(&self) -> &Expr {
        &self.expr
    }
}

impl BrickFunction for CompiledBrickFn {
    fn brick_at(&self, p: Point) -> Result<Brick, EvalError> {
        match eval(&self.expr, p)? {
            Value::Brick(b) => Ok(b),
            _ => Err(EvalError::IllTyped {
                expr: self.expr.to_string(),
                point: p,
            }),
        }
    }
}

/// Parses and typechecks a predicate program.
pub fn compile_predicate(text: &str) -> Result<CompiledPredicate, DslError> {
    compile(text, ExprType::Bool, "predicate").map(|expr| CompiledPredicate { expr })
}

/// Parses and typechecks a brick-function program.
pub fn compile_brickfn(text: &str) -> Result<CompiledBrickFn, DslError> {
    compile(text, ExprType::Brick, "brick function").map(|expr| CompiledBrickFn { expr })
}
