use std::fmt;

use super::ast::{BinOp, Expr, Func, UnOp};
use super::TypeError;

/// The four value types of the expression language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExprType {
    Int,
    Float,
    Bool,
    Brick,
}

impl fmt::Display for ExprType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExprType::Int => "Int",
            ExprType::Float => "Float",
            ExprType::Bool => "Bool",
            ExprType::Brick => "Brick",
        })
    }
}

/// Coordinates available to every program.
pub const COORDINATES: [&str; 3] = ["x", "y", "z"];

fn err(e: &Expr, message: String) -> TypeError {
    TypeError {
        message,
        expr: e.to_string(),
    }
}

fn check(e: &Expr, env: &mut Vec<(String, ExprType)>) -> Result<ExprType, TypeError> {
    use ExprType::*;
    Ok(match e {
        Expr::Int(_) => Int,
        Expr::Float(_) => Float,
        Expr::Bool(_) => Bool,
        Expr::Brick(_) => Brick,
        Expr::Var(name) => match env.iter().rev().find(|(n, _)| n == name) {
            Some((_, t)) => *t,
            None if COORDINATES.contains(&name.as_str()) => Int,
            None => return Err(err(e, format!("unbound variable `{name}`"))),
        },
        Expr::Unary(op, inner) => {
            let t = check(inner, env)?;
            match (op, t) {
                (UnOp::Neg, Int | Float) => t,
                (UnOp::Not, Bool) => Bool,
                (UnOp::Neg, _) => return Err(err(e, format!("cannot negate a {t}"))),
                (UnOp::Not, _) => return Err(err(e, format!("`not` expects Bool, found {t}"))),
            }
        }
        Expr::Binary(op, l, r) => {
            let (lt, rt) = (check(l, env)?, check(r, env)?);
            let sym = op.symbol();
            match op {
                BinOp::Add | BinOp::Sub | BinOp::Mul => match (lt, rt) {
                    (Int, Int) => Int,
                    (Float, Float) => Float,
                    _ => return Err(err(e, format!("`{sym}` expects two Ints or two Floats, found {lt} and {rt}"))),
                },
                BinOp::Div | BinOp::Mod => match (lt, rt) {
                    (Int, Int) => Int,
                    _ => return Err(err(e, format!("`{sym}` expects two Ints, found {lt} and {rt}"))),
                },
                BinOp::Lt | BinOp::Le | BinOp::Ge | BinOp::Gt => match (lt, rt) {
                    (Int, Int) | (Float, Float) => Bool,
                    _ => return Err(err(e, format!("`{sym}` expects two Ints or two Floats, found {lt} and {rt}"))),
                },
                BinOp::Eq | BinOp::Ne => {
                    if lt == rt {
                        Bool
                    } else {
                        return Err(err(e, format!("`{sym}` compares values of one type, found {lt} and {rt}")));
                    }
                }
                BinOp::And | BinOp::Or | BinOp::Xor => match (lt, rt) {
                    (Bool, Bool) => Bool,
                    _ => return Err(err(e, format!("`{sym}` expects two Bools, found {lt} and {rt}"))),
                },
            }
        }
        Expr::Call(f, arg) => {
            let t = check(arg, env)?;
            match (f, t) {
                (Func::Sin | Func::Cos, Float) => Float,
                (Func::Abs, Int | Float) => t,
                (Func::ToFloat, Int) => Float,
                (Func::Round, Float) => Int,
                _ => return Err(err(e, format!("`{}` cannot take a {t}", f.name()))),
            }
        }
        Expr::If(c, t, f) => {
            let ct = check(c, env)?;
            if ct != Bool {
                return Err(err(c, format!("`if` condition must be Bool, found {ct}")));
            }
            let (tt, ft) = (check(t, env)?, check(f, env)?);
            if tt != ft {
                return Err(err(e, format!("`if` branches disagree: {tt} vs {ft}")));
            }
            tt
        }
        Expr::Let(name, bound, body) => {
            let bt = check(bound, env)?;
            env.push((name.clone(), bt));
            let t = check(body, env);
            env.pop();
            t?
        }
    })
}

/// Infers the type of a closed program (free variables limited to `x`,
/// `y`, `z`).
pub fn typecheck(e: &Expr) -> Result<ExprType, TypeError> {
    check(e, &mut Vec::new())
}
