//! Cell-by-cell comparison of two predicate artifacts.
//!
//! Colors follow the usual grading convention: cells only the first
//! predicate accepts, cells only the second accepts, and cells both accept
//! each get their own brick.

use crate::dsl::EvalError;
use crate::traversal::{brickfn_show, predicate_show, Fallible, Predicate};
use crate::{Brick, Error, Point, Result, VirtualSpace};

fn require_bricks(bricks: &[Brick]) -> Result<()> {
    if bricks.iter().any(|b| b.is_empty()) {
        Err(Error::InvalidBrick("comparison bricks must not be EMPTY"))
    } else {
        Ok(())
    }
}

fn compare<P1, P2>(
    n: usize,
    p1: &P1,
    p2: &P2,
    paint: impl Fn(bool, bool) -> Brick,
) -> Result<VirtualSpace>
where
    P1: Predicate + ?Sized,
    P2: Predicate + ?Sized,
{
    brickfn_show(
        n,
        &Fallible(|p: Point| -> Result<Brick, EvalError> {
            Ok(paint(p1.holds(p)?, p2.holds(p)?))
        }),
    )
}

/// Symmetric difference: `b1` where only `p1` holds, `b2` where only `p2`
/// holds.
pub fn xor_show<P1, P2>(n: usize, p1: &P1, b1: Brick, p2: &P2, b2: Brick) -> Result<VirtualSpace>
where
    P1: Predicate + ?Sized,
    P2: Predicate + ?Sized,
{
    require_bricks(&[b1, b2])?;
    compare(n, p1, p2, |a, b| match (a, b) {
        (true, false) => b1,
        (false, true) => b2,
        _ => Brick::Empty,
    })
}

/// Union with the three-color convention: `b1` for `p1` only, `b2` for `p2`
/// only, `both` where the two agree.
pub fn union_show<P1, P2>(
    n: usize,
    p1: &P1,
    b1: Brick,
    p2: &P2,
    b2: Brick,
    both: Brick,
) -> Result<VirtualSpace>
where
    P1: Predicate + ?Sized,
    P2: Predicate + ?Sized,
{
    require_bricks(&[b1, b2, both])?;
    compare(n, p1, p2, |a, b| match (a, b) {
        (true, true) => both,
        (true, false) => b1,
        (false, true) => b2,
        (false, false) => Brick::Empty,
    })
}

pub fn intersection_show<P1, P2>(n: usize, p1: &P1, p2: &P2, brick: Brick) -> Result<VirtualSpace>
where
    P1: Predicate + ?Sized,
    P2: Predicate + ?Sized,
{
    require_bricks(&[brick])?;
    compare(n, p1, p2, |a, b| if a && b { brick } else { Brick::Empty })
}

/// Cells where `p1` holds and `p2` does not.
pub fn difference_show<P1, P2>(n: usize, p1: &P1, p2: &P2, brick: Brick) -> Result<VirtualSpace>
where
    P1: Predicate + ?Sized,
    P2: Predicate + ?Sized,
{
    require_bricks(&[brick])?;
    compare(n, p1, p2, |a, b| if a && !b { brick } else { Brick::Empty })
}

pub fn complement_show<P>(n: usize, p: &P, brick: Brick) -> Result<VirtualSpace>
where
    P: Predicate + ?Sized,
{
    require_bricks(&[brick])?;
    brickfn_show(
        n,
        &Fallible(|c: Point| -> Result<Brick, EvalError> {
            Ok(if p.holds(c)? { Brick::Empty } else { brick })
        }),
    )
}

/// Alias kept for the original spelling of the operation.
pub use complement_show as compliment_show;

/// Bottom-up growth animation of a predicate artifact.
///
/// Returns `n` frames; frame `k` holds the cells of the finished artifact
/// with `y <= k`, so the last frame is the whole artifact.
pub fn slide_show<P>(n: usize, p: &P, brick: Brick) -> Result<Vec<VirtualSpace>>
where
    P: Predicate + ?Sized,
{
    let full = predicate_show(n, p, brick)?;
    let mut frame = VirtualSpace::with_dims(full.dims())?;
    let mut layers: Vec<Vec<Point>> = vec![Vec::new(); n];
    for (c, _) in full.occupied() {
        layers[c.y as usize].push(c);
    }
    let mut frames = Vec::with_capacity(n);
    for layer in layers {
        for c in layer {
            frame.update(brick, c)?;
        }
        frames.push(frame.clone());
    }
    Ok(frames)
}
