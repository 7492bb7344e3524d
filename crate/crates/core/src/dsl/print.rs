use std::fmt::{self, Display, Write};

use super::ast::{Expr, UnOp};

// Precedence levels used when deciding on parentheses.
const TOP: u8 = 0;
const UNARY: u8 = 7;
const ATOM: u8 = 8;

fn level(e: &Expr) -> u8 {
    match e {
        Expr::If(..) | Expr::Let(..) => TOP,
        Expr::Binary(op, ..) => op.precedence(),
        Expr::Unary(..) => UNARY,
        // Negative literals print as `~n`, which lexes as one token.
        _ => ATOM,
    }
}

fn write_float(out: &mut impl Write, v: f64) -> fmt::Result {
    if v.is_sign_negative() {
        write!(out, "~{:?}", -v)
    } else {
        write!(out, "{v:?}")
    }
}

fn write_expr(out: &mut impl Write, e: &Expr, min: u8) -> fmt::Result {
    let paren = level(e) < min;
    if paren {
        out.write_char('(')?;
    }
    match e {
        Expr::Int(v) if *v < 0 => write!(out, "~{}", v.unsigned_abs())?,
        Expr::Int(v) => write!(out, "{v}")?,
        Expr::Float(v) => write_float(out, *v)?,
        Expr::Bool(b) => write!(out, "{b}")?,
        Expr::Brick(b) => write!(out, "{b}")?,
        Expr::Var(name) => out.write_str(name)?,
        Expr::Unary(op, inner) => {
            out.write_str(match op {
                UnOp::Neg => "-",
                UnOp::Not => "not ",
            })?;
            write_expr(out, inner, UNARY)?;
        }
        Expr::Binary(op, l, r) => {
            let p = op.precedence();
            // comparisons are non-associative; the rest associate left
            let left_min = if op.is_comparison() { p + 1 } else { p };
            write_expr(out, l, left_min)?;
            write!(out, " {} ", op.symbol())?;
            write_expr(out, r, p + 1)?;
        }
        Expr::Call(f, arg) => {
            write!(out, "{}(", f.name())?;
            write_expr(out, arg, TOP)?;
            out.write_char(')')?;
        }
        Expr::If(c, t, f) => {
            out.write_str("if ")?;
            write_expr(out, c, TOP)?;
            out.write_str(" then ")?;
            write_expr(out, t, TOP)?;
            out.write_str(" else ")?;
            write_expr(out, f, TOP)?;
        }
        Expr::Let(name, bound, body) => {
            write!(out, "let {name} = ")?;
            write_expr(out, bound, TOP)?;
            out.write_str(" in ")?;
            write_expr(out, body, TOP)?;
        }
    }
    if paren {
        out.write_char(')')?;
    }
    Ok(())
}

/// Prints source text that parses back to an equal tree.
impl Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expr(f, self, TOP)
    }
}
