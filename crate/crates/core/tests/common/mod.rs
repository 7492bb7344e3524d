//! Shared helpers for the integration tests: a seeded generator of
//! well-typed DSL programs and a few space utilities.

#![allow(dead_code)]

use std::collections::BTreeMap;

use brickforge::dsl::{BinOp, Expr, ExprType, Func, UnOp};
use brickforge::{Brick, Point, VirtualSpace};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random well-typed expressions with no division by zero.
pub struct ExprGen<'r> {
    rng: &'r mut ChaCha8Rng,
    env: Vec<(String, ExprType)>,
    next_var: usize,
}

impl<'r> ExprGen<'r> {
    pub fn new(rng: &'r mut ChaCha8Rng) -> Self {
        ExprGen {
            rng,
            env: Vec::new(),
            next_var: 0,
        }
    }

    pub fn gen(&mut self, ty: ExprType, depth: u32) -> Expr {
        if depth == 0 || self.rng.random_ratio(1, 4) {
            return self.leaf(ty);
        }
        let d = depth - 1;
        match self.rng.random_range(0..10) {
            0 => Expr::if_(self.gen(ExprType::Bool, d), self.gen(ty, d), self.gen(ty, d)),
            1 => self.let_in(ty, d),
            _ => match ty {
                ExprType::Bool => self.bool_node(d),
                ExprType::Int => self.int_node(d),
                ExprType::Float => self.float_node(d),
                ExprType::Brick => self.leaf(ty),
            },
        }
    }

    fn let_in(&mut self, ty: ExprType, d: u32) -> Expr {
        let bound_ty = *[ExprType::Int, ExprType::Bool, ExprType::Float, ExprType::Brick]
            .choose(self.rng)
            .unwrap();
        let bound = self.gen(bound_ty, d);
        let name = format!("v{}", self.next_var);
        self.next_var += 1;
        self.env.push((name.clone(), bound_ty));
        let body = self.gen(ty, d);
        self.env.pop();
        Expr::let_(&name, bound, body)
    }

    fn bound_var(&mut self, ty: ExprType) -> Option<Expr> {
        let names: Vec<&String> = self.env.iter().filter(|(_, t)| *t == ty).map(|(n, _)| n).collect();
        names.choose(self.rng).map(|n| Expr::var(n))
    }

    fn leaf(&mut self, ty: ExprType) -> Expr {
        if self.rng.random_ratio(1, 3) {
            if let Some(v) = self.bound_var(ty) {
                return v;
            }
        }
        match ty {
            ExprType::Bool => Expr::Bool(self.rng.random()),
            ExprType::Int => {
                if self.rng.random_ratio(2, 3) {
                    Expr::var(["x", "y", "z"].choose(self.rng).unwrap())
                } else {
                    Expr::Int(self.rng.random_range(-20..=20))
                }
            }
            ExprType::Float => Expr::Float(f64::from(self.rng.random_range(-40..=40)) / 4.0),
            ExprType::Brick => Expr::Brick(*Brick::ALL.choose(self.rng).unwrap()),
        }
    }

    fn bool_node(&mut self, d: u32) -> Expr {
        match self.rng.random_range(0..5) {
            0 => Expr::unary(UnOp::Not, self.gen(ExprType::Bool, d)),
            1 => {
                let op = *[BinOp::And, BinOp::Or, BinOp::Xor].choose(self.rng).unwrap();
                Expr::binary(op, self.gen(ExprType::Bool, d), self.gen(ExprType::Bool, d))
            }
            2 => {
                let ty = *[ExprType::Bool, ExprType::Brick, ExprType::Int].choose(self.rng).unwrap();
                let op = *[BinOp::Eq, BinOp::Ne].choose(self.rng).unwrap();
                Expr::binary(op, self.gen(ty, d), self.gen(ty, d))
            }
            _ => {
                let ty = *[ExprType::Int, ExprType::Int, ExprType::Float].choose(self.rng).unwrap();
                let op = *[BinOp::Lt, BinOp::Le, BinOp::Ge, BinOp::Gt, BinOp::Eq]
                    .choose(self.rng)
                    .unwrap();
                Expr::binary(op, self.gen(ty, d), self.gen(ty, d))
            }
        }
    }

    fn int_node(&mut self, d: u32) -> Expr {
        match self.rng.random_range(0..6) {
            0 => Expr::unary(UnOp::Neg, self.gen(ExprType::Int, d)),
            1 => Expr::call(Func::Abs, self.gen(ExprType::Int, d)),
            2 => Expr::call(Func::Round, self.gen(ExprType::Float, d)),
            3 => {
                // divisor is a non-zero literal so evaluation never fails
                let op = *[BinOp::Div, BinOp::Mod].choose(self.rng).unwrap();
                let k = *[-3, -2, 1, 2, 3, 4, 5].choose(self.rng).unwrap();
                Expr::binary(op, self.gen(ExprType::Int, d), Expr::Int(k))
            }
            _ => {
                let op = *[BinOp::Add, BinOp::Sub, BinOp::Mul].choose(self.rng).unwrap();
                Expr::binary(op, self.gen(ExprType::Int, d), self.gen(ExprType::Int, d))
            }
        }
    }

    fn float_node(&mut self, d: u32) -> Expr {
        match self.rng.random_range(0..5) {
            0 => Expr::call(Func::ToFloat, self.gen(ExprType::Int, d)),
            1 => Expr::call(*[Func::Sin, Func::Cos].choose(self.rng).unwrap(), self.gen(ExprType::Float, d)),
            2 => Expr::call(Func::Abs, self.gen(ExprType::Float, d)),
            3 => Expr::unary(UnOp::Neg, self.gen(ExprType::Float, d)),
            _ => {
                let op = *[BinOp::Add, BinOp::Sub, BinOp::Mul].choose(self.rng).unwrap();
                Expr::binary(op, self.gen(ExprType::Float, d), self.gen(ExprType::Float, d))
            }
        }
    }
}

/// A predicate program that usually holds on a reasonable share of cells.
pub fn random_predicate(rng: &mut ChaCha8Rng, depth: u32) -> Expr {
    ExprGen::new(rng).gen(ExprType::Bool, depth)
}

pub fn random_brickfn(rng: &mut ChaCha8Rng, depth: u32) -> Expr {
    let mut g = ExprGen::new(rng);
    // an outer conditional so the function is rarely constant
    let c = g.gen(ExprType::Bool, depth);
    let t = g.gen(ExprType::Brick, depth);
    let e = g.gen(ExprType::Brick, depth);
    Expr::if_(c, t, e)
}

pub fn cells(space: &VirtualSpace) -> BTreeMap<Point, Brick> {
    space.occupied().collect()
}

pub fn all_points(n: usize) -> impl Iterator<Item = Point> {
    let n = n as i32;
    (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| Point::new(x, y, z))))
}

/// Pascal's triangle mod 2, built row by row by addition and laid out as
/// 2x1 bricks: row `k` sits at `y = mid - k`, entry `j` covers
/// `x = mid - k + 2j` and the cell to its right. Odd entries get `odd`.
pub fn pascal_oracle(n: usize, odd: Brick, even: Brick) -> BTreeMap<Point, Brick> {
    let mid = (n as i32 - 1) / 2;
    let mut out = BTreeMap::new();
    let mut row = vec![1u8];
    for k in 0..mid {
        for (j, &v) in row.iter().enumerate() {
            let x = mid - k + 2 * j as i32;
            let b = if v == 1 { odd } else { even };
            out.insert(Point::new(x, mid - k, 0), b);
            out.insert(Point::new(x + 1, mid - k, 0), b);
        }
        let mut next = vec![1u8; row.len() + 1];
        for j in 1..row.len() {
            next[j] = (row[j - 1] + row[j]) % 2;
        }
        row = next;
    }
    out
}

/// Cells visited by a unit-step turtle path, in drawing order. Each `F`
/// contributes its far endpoint; the start cell comes first.
pub fn turtle_path(symbols: &str) -> Vec<Point> {
    let mut t = brickforge::turtle::TurtleState::default();
    let segments = t.segments(symbols, 1).unwrap();
    let mut path = vec![Point::ORIGIN];
    path.extend(segments.iter().map(|&(_, q)| q));
    path
}

/// Writes `f` into a fresh cube visiting cells in the reverse of the
/// usual order; EMPTY leaves a cell alone.
pub fn render_reversed(n: usize, f: &dyn Fn(Point) -> Brick) -> VirtualSpace {
    let mut space = VirtualSpace::cube(n).unwrap();
    let mut points: Vec<Point> = all_points(n).collect();
    points.reverse();
    for p in points {
        let b = f(p);
        if !b.is_empty() {
            space.update(b, p).unwrap();
        }
    }
    space
}

/// Every gallery construction at a few sizes, with a label.
pub fn gallery_outputs() -> Vec<(String, VirtualSpace)> {
    use brickforge::gallery::*;
    let mut out = Vec::new();
    for n in [3, 5, 9, 17, 33] {
        out.push((format!("sierpinski({n})"), sierpinski(SierpinskiParams::new(n)).unwrap()));
    }
    for (b, s) in [(4, 2), (8, 2), (9, 3), (6, 1), (5, 5)] {
        out.push((
            format!("checkerboard({b},{s})"),
            big_checkerboard(CheckerboardParams::new(b, s)).unwrap(),
        ));
    }
    for (n, inset) in [(10, 2), (5, 2), (7, 1)] {
        out.push((format!("nested_cubes({n},{inset})"), nested_cubes(n, inset, Brick::Blue).unwrap()));
    }
    out.push((
        "sine(8)".into(),
        sine_shading(8, 2.0, std::f64::consts::FRAC_PI_4, &Brick::BLUES).unwrap(),
    ));
    out.push(("sine(12)".into(), sine_shading(12, 3.5, 0.3, &[Brick::Green, Brick::White]).unwrap()));
    for order in 1..=3 {
        out.push((format!("hilbert({order})"), hilbert_cube(order, Brick::Blue).unwrap()));
    }
    out.push(("hilbert(2, step 3)".into(), hilbert_cube_scaled(2, 3, Brick::Red).unwrap()));
    out
}

/// Predicates built from half-spaces and residue classes; these carve
/// sizeable, overlapping regions where fully random trees are often constant.
pub fn shape_predicate(rng: &mut ChaCha8Rng) -> Expr {
    let atom = |rng: &mut ChaCha8Rng| -> Expr {
        let axis = |rng: &mut ChaCha8Rng| Expr::var(["x", "y", "z"].choose(rng).unwrap());
        if rng.random_ratio(1, 3) {
            let sum = Expr::binary(BinOp::Add, axis(rng), axis(rng));
            let m = rng.random_range(2..=4);
            let r = rng.random_range(0..m);
            let op = *[BinOp::Eq, BinOp::Ne, BinOp::Lt].choose(rng).unwrap();
            return Expr::binary(op, Expr::binary(BinOp::Mod, sum, Expr::Int(m)), Expr::Int(r));
        }
        let mut lin = Expr::binary(BinOp::Mul, Expr::Int(rng.random_range(1..=2)), axis(rng));
        for _ in 0..rng.random_range(0..=2) {
            let op = *[BinOp::Add, BinOp::Sub].choose(rng).unwrap();
            lin = Expr::binary(op, lin, axis(rng));
        }
        let op = *[BinOp::Lt, BinOp::Le, BinOp::Gt, BinOp::Ge].choose(rng).unwrap();
        Expr::binary(op, lin, Expr::Int(rng.random_range(0..=12)))
    };
    let mut e = atom(rng);
    for _ in 0..rng.random_range(0..=2) {
        let op = *[BinOp::And, BinOp::Or, BinOp::Xor].choose(rng).unwrap();
        e = Expr::binary(op, e, atom(rng));
    }
    e
}
