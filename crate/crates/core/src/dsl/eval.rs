use std::fmt;

use num_integer::Integer;
use thiserror::Error;

use super::ast::{BinOp, Expr, Func, UnOp};
use super::types::ExprType;
use crate::{Brick, Point};

/// A runtime value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Value {
    Int(i64),
    Float(f64),
    Bool(bool),
    Brick(Brick),
}

impl Value {
    pub fn ty(self) -> ExprType {
        match self {
            Value::Int(_) => ExprType::Int,
            Value::Float(_) => ExprType::Float,
            Value::Bool(_) => ExprType::Bool,
            Value::Brick(_) => ExprType::Brick,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Float(v) => write!(f, "{v:?}"),
            Value::Bool(v) => write!(f, "{v}"),
            Value::Brick(b) => write!(f, "{b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("`{op}` by zero at {point}")]
    DivisionByZero { op: &'static str, point: Point },
    /// Only reachable for trees that were never typechecked.
    #[error("ill-typed expression `{expr}` at {point}")]
    IllTyped { expr: String, point: Point },
}

struct Evaluator {
    point: Point,
    env: Vec<(String, Value)>,
}

impl Evaluator {
    fn ill_typed(&self, e: &Expr) -> EvalError {
        EvalError::IllTyped {
            expr: e.to_string(),
            point: self.point,
        }
    }

    fn eval(&mut self, e: &Expr) -> Result<Value, EvalError> {
        use Value::*;
        Ok(match e {
            Expr::Int(v) => Int(*v),
            Expr::Float(v) => Float(*v),
            Expr::Bool(v) => Bool(*v),
            Expr::Brick(b) => Brick(*b),
            Expr::Var(name) => match self.env.iter().rev().find(|(n, _)| n == name) {
                Some((_, v)) => *v,
                None => match name.as_str() {
                    "x" => Int(self.point.x.into()),
                    "y" => Int(self.point.y.into()),
                    "z" => Int(self.point.z.into()),
                    _ => return Err(self.ill_typed(e)),
                },
            },
            Expr::Unary(op, inner) => match (op, self.eval(inner)?) {
                (UnOp::Neg, Int(v)) => Int(v.wrapping_neg()),
                (UnOp::Neg, Float(v)) => Float(-v),
                (UnOp::Not, Bool(v)) => Bool(!v),
                _ => return Err(self.ill_typed(e)),
            },
            Expr::Binary(op, l, r) => {
                let (a, b) = (self.eval(l)?, self.eval(r)?);
                self.binary(e, *op, a, b)?
            }
            Expr::Call(f, arg) => match (f, self.eval(arg)?) {
                (Func::Sin, Float(v)) => Float(v.sin()),
                (Func::Cos, Float(v)) => Float(v.cos()),
                (Func::Abs, Int(v)) => Int(v.wrapping_abs()),
                (Func::Abs, Float(v)) => Float(v.abs()),
                (Func::ToFloat, Int(v)) => Float(v as f64),
                // half-to-even, saturating at the i64 range (NaN -> 0)
                (Func::Round, Float(v)) => Int(v.round_ties_even() as i64),
                _ => return Err(self.ill_typed(e)),
            },
            Expr::If(c, t, f) => match self.eval(c)? {
                Bool(true) => self.eval(t)?,
                Bool(false) => self.eval(f)?,
                _ => return Err(self.ill_typed(e)),
            },
            Expr::Let(name, bound, body) => {
                let v = self.eval(bound)?;
                self.env.push((name.clone(), v));
                let out = self.eval(body);
                self.env.pop();
                out?
            }
        })
    }

    fn binary(&self, e: &Expr, op: BinOp, a: Value, b: Value) -> Result<Value, EvalError> {
        use Value::*;
        Ok(match (op, a, b) {
            (BinOp::Add, Int(a), Int(b)) => Int(a.wrapping_add(b)),
            (BinOp::Sub, Int(a), Int(b)) => Int(a.wrapping_sub(b)),
            (BinOp::Mul, Int(a), Int(b)) => Int(a.wrapping_mul(b)),
            (BinOp::Add, Float(a), Float(b)) => Float(a + b),
            (BinOp::Sub, Float(a), Float(b)) => Float(a - b),
            (BinOp::Mul, Float(a), Float(b)) => Float(a * b),
            (BinOp::Div | BinOp::Mod, Int(_), Int(0)) => {
                return Err(EvalError::DivisionByZero {
                    op: op.symbol(),
                    point: self.point,
                })
            }
            // i64::MIN div ~1 is the one overflowing case
            (BinOp::Div, Int(a), Int(-1)) => Int(a.wrapping_neg()),
            (BinOp::Mod, Int(_), Int(-1)) => Int(0),
            (BinOp::Div, Int(a), Int(b)) => Int(Integer::div_floor(&a, &b)),
            (BinOp::Mod, Int(a), Int(b)) => Int(Integer::mod_floor(&a, &b)),
            (BinOp::Lt, Int(a), Int(b)) => Bool(a < b),
            (BinOp::Le, Int(a), Int(b)) => Bool(a <= b),
            (BinOp::Ge, Int(a), Int(b)) => Bool(a >= b),
            (BinOp::Gt, Int(a), Int(b)) => Bool(a > b),
            (BinOp::Lt, Float(a), Float(b)) => Bool(a < b),
            (BinOp::Le, Float(a), Float(b)) => Bool(a <= b),
            (BinOp::Ge, Float(a), Float(b)) => Bool(a >= b),
            (BinOp::Gt, Float(a), Float(b)) => Bool(a > b),
            (BinOp::Eq, a, b) if a.ty() == b.ty() => Bool(a == b),
            (BinOp::Ne, a, b) if a.ty() == b.ty() => Bool(a != b),
            (BinOp::And, Bool(a), Bool(b)) => Bool(a && b),
            (BinOp::Or, Bool(a), Bool(b)) => Bool(a || b),
            (BinOp::Xor, Bool(a), Bool(b)) => Bool(a ^ b),
            _ => return Err(self.ill_typed(e)),
        })
    }
}

/// Evaluates `e` with `x`, `y`, `z` bound to the coordinates of `p`.
///
/// Evaluation is strict and always terminates. Integer `div`/`mod` round
/// toward negative infinity; integer arithmetic wraps on overflow.
pub fn eval(e: &Expr, p: Point) -> Result<Value, EvalError> {
    Evaluator {
        point: p,
        env: Vec::new(),
    }
    .eval(e)
}
