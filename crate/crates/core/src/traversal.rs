//! Generic traversals: apply a predicate or brick function to every cell of
//! a region, leaving the visiting order to the library.

use crate::dsl::EvalError;
use crate::{Brick, Error, Point, Result, VirtualSpace};

/// A pure function from cells to booleans.
///
/// Implemented for every `Fn(Point) -> bool`. Compiled DSL programs also
/// implement it; their evaluation can fail, hence the `Result`.
pub trait Predicate {
    fn holds(&self, p: Point) -> Result<bool, EvalError>;
}

impl<F: Fn(Point) -> bool + ?Sized> Predicate for F {
    fn holds(&self, p: Point) -> Result<bool, EvalError> {
        Ok(self(p))
    }
}

/// A pure function from cells to bricks. `EMPTY` means "no brick here".
pub trait BrickFunction {
    fn brick_at(&self, p: Point) -> Result<Brick, EvalError>;
}

impl<F: Fn(Point) -> Brick + ?Sized> BrickFunction for F {
    fn brick_at(&self, p: Point) -> Result<Brick, EvalError> {
        Ok(self(p))
    }
}

/// An axis-aligned plane, identified by the two axes it spans and the value
/// of the third.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Plane {
    /// Fixed `z`.
    Xy(i32),
    /// Fixed `y`.
    Xz(i32),
    /// Fixed `x`.
    Yz(i32),
}

/// Applies `f` to every cell of the box `[lo, hi]`.
///
/// Cells where `f` yields a brick take that brick; cells where it yields
/// `EMPTY` keep their current contents. Visiting order is `x` outermost, then
/// `y`, then `z`, all ascending. On error the space is left untouched.
pub fn traverse_within<F>(space: &mut VirtualSpace, lo: Point, hi: Point, f: &F) -> Result<()>
where
    F: BrickFunction + ?Sized,
{
    for p in [lo, hi] {
        if !space.in_bounds(p) {
            return Err(Error::OutOfBounds {
                point: p,
                dims: space.dims(),
            });
        }
    }
    if lo.x > hi.x || lo.y > hi.y || lo.z > hi.z {
        return Err(Error::EmptyBox { lo, hi });
    }
    let mut writes = Vec::new();
    for x in lo.x..=hi.x {
        for y in lo.y..=hi.y {
            for z in lo.z..=hi.z {
                let p = Point::new(x, y, z);
                let b = f.brick_at(p)?;
                if !b.is_empty() {
                    writes.push((p, b));
                }
            }
        }
    }
    for (p, b) in writes {
        space.set_unchecked(p, b);
    }
    Ok(())
}

/// [`traverse_within`] over the whole space.
pub fn traverse_xyz<F>(space: &mut VirtualSpace, f: &F) -> Result<()>
where
    F: BrickFunction + ?Sized,
{
    let hi = space.dims().max_point();
    traverse_within(space, Point::ORIGIN, hi, f)
}

/// [`traverse_within`] restricted to one plane of the space.
pub fn traverse_plane<F>(space: &mut VirtualSpace, plane: Plane, f: &F) -> Result<()>
where
    F: BrickFunction + ?Sized,
{
    let max = space.dims().max_point();
    let (lo, hi) = match plane {
        Plane::Xy(z) => (Point::new(0, 0, z), Point::new(max.x, max.y, z)),
        Plane::Xz(y) => (Point::new(0, y, 0), Point::new(max.x, y, max.z)),
        Plane::Yz(x) => (Point::new(x, 0, 0), Point::new(x, max.y, max.z)),
    };
    traverse_within(space, lo, hi, f)
}

/// Renders a monochrome artifact: an `n`-cube holding `brick` exactly where
/// `pred` holds.
pub fn predicate_show<P>(n: usize, pred: &P, brick: Brick) -> Result<VirtualSpace>
where
    P: Predicate + ?Sized,
{
    if brick.is_empty() {
        return Err(Error::InvalidBrick("a predicate artifact cannot be drawn in EMPTY"));
    }
    brickfn_show(
        n,
        &Fallible(|p: Point| -> Result<Brick, EvalError> {
            Ok(if pred.holds(p)? { brick } else { Brick::Empty })
        }),
    )
}

/// Renders an `n`-cube whose cell `c` holds `f(c)`.
pub fn brickfn_show<F>(n: usize, f: &F) -> Result<VirtualSpace>
where
    F: BrickFunction + ?Sized,
{
    let mut space = VirtualSpace::cube(n)?;
    traverse_xyz(&mut space, f)?;
    Ok(space)
}

// Lets fallible closures act as brick functions inside this crate.
impl<F: Fn(Point) -> Result<Brick, EvalError>> BrickFunction for Fallible<F> {
    fn brick_at(&self, p: Point) -> Result<Brick, EvalError> {
        (self.0)(p)
    }
}

pub(crate) struct Fallible<F>(pub F);
