//! The bounded virtual space and direct cell-level drawing.

use std::fmt;

use crate::line::line_cells;
use crate::traversal::BrickFunction;
use crate::{Brick, Error, Point, Result};

/// Upper bound on the number of cells in one space.
pub const MAX_CELLS: usize = 1 << 30;

/// Extent of a space along each axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dims {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl Dims {
    pub fn cube(n: usize) -> Self {
        Dims { x: n, y: n, z: n }
    }

    pub fn volume(self) -> usize {
        self.x * self.y * self.z
    }

    pub fn contains(self, p: Point) -> bool {
        let inside = |c: i32, d: usize| c >= 0 && (c as usize) < d;
        inside(p.x, self.x) && inside(p.y, self.y) && inside(p.z, self.z)
    }

    /// The corner opposite the origin.
    pub fn max_point(self) -> Point {
        Point::new(self.x as i32 - 1, self.y as i32 - 1, self.z as i32 - 1)
    }
}

impl fmt::Display for Dims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}x{}", self.x, self.y, self.z)
    }
}

/// A bounded 3D grid of cells, each holding one [`Brick`].
///
/// Cells are addressed by [`Point`]s with `0 <= x < dims.x` and likewise for
/// `y` and `z`. A fresh space is entirely `EMPTY`. Spaces are plain values:
/// clone one to branch a construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VirtualSpace {
    dims: Dims,
    // x-major, then y, then z: storage order is lexicographic cell order.
    cells: Vec<Brick>,
}

impl fmt::Debug for VirtualSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("VirtualSpace")
            .field("dims", &self.dims)
            .field("occupied", &self.occupied_count())
            .finish()
    }
}

impl VirtualSpace {
    /// Creates an all-`EMPTY` space.
    pub fn new(x: usize, y: usize, z: usize) -> Result<Self> {
        let volume = x
            .checked_mul(y)
            .and_then(|v| v.checked_mul(z))
            .filter(|&v| v > 0 && v <= MAX_CELLS);
        match volume {
            Some(v) => Ok(VirtualSpace {
                dims: Dims { x, y, z },
                cells: vec![Brick::Empty; v],
            }),
            None => Err(Error::InvalidDimension { dims: [x, y, z] }),
        }
    }

    /// Creates an all-`EMPTY` `n`x`n`x`n` cube.
    pub fn cube(n: usize) -> Result<Self> {
        Self::new(n, n, n)
    }

    pub fn with_dims(dims: Dims) -> Result<Self> {
        Self::new(dims.x, dims.y, dims.z)
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn in_bounds(&self, p: Point) -> bool {
        self.dims.contains(p)
    }

    fn check(&self, p: Point) -> Result<usize> {
        if self.in_bounds(p) {
            Ok(self.index(p))
        } else {
            Err(Error::OutOfBounds {
                point: p,
                dims: self.dims,
            })
        }
    }

    fn index(&self, p: Point) -> usize {
        (p.x as usize * self.dims.y + p.y as usize) * self.dims.z + p.z as usize
    }

    fn point_at(&self, i: usize) -> Point {
        let z = i % self.dims.z;
        let y = (i / self.dims.z) % self.dims.y;
        let x = i / (self.dims.z * self.dims.y);
        Point::new(x as i32, y as i32, z as i32)
    }

    /// The brick stored at `p`.
    pub fn access(&self, p: Point) -> Result<Brick> {
        self.check(p).map(|i| self.cells[i])
    }

    /// Stores `brick` at `p`. Writing `EMPTY` clears the cell.
    pub fn update(&mut self, brick: Brick, p: Point) -> Result<()> {
        let i = self.check(p)?;
        self.cells[i] = brick;
        Ok(())
    }

    /// Fills the `w`x`h`x`d` cuboid whose lowest corner is `origin`.
    ///
    /// Nothing is written unless the whole cuboid fits.
    pub fn place_brick(
        &mut self,
        w: usize,
        h: usize,
        d: usize,
        brick: Brick,
        origin: Point,
    ) -> Result<()> {
        if w == 0 || h == 0 || d == 0 {
            return Err(Error::InvalidParameter(format!(
                "cuboid extent {w}x{h}x{d} must be positive in every axis"
            )));
        }
        self.check(origin)?;
        let far = [(origin.x, w), (origin.y, h), (origin.z, d)]
            .map(|(o, n)| i64::from(o) + n as i64 - 1)
            .map(|c| i32::try_from(c).unwrap_or(i32::MAX));
        let far = Point::from_array(far);
        self.check(far)?;
        for x in origin.x..=far.x {
            for y in origin.y..=far.y {
                for z in origin.z..=far.z {
                    let i = self.index(Point::new(x, y, z));
                    self.cells[i] = brick;
                }
            }
        }
        Ok(())
    }

    /// Draws a single-brick digital line from `p` to `q` (see [`line_cells`]).
    pub fn line(&mut self, p: Point, q: Point, brick: Brick) -> Result<()> {
        self.check(p)?;
        self.check(q)?;
        for c in line_cells(p, q) {
            let i = self.index(c);
            self.cells[i] = brick;
        }
        Ok(())
    }

    /// Like [`line`](Self::line), but each visited cell `c` receives `f(c)`.
    /// `EMPTY` results clear the cell.
    pub fn multi_brick_line<F>(&mut self, p: Point, q: Point, f: &F) -> Result<()>
    where
        F: BrickFunction + ?Sized,
    {
        self.check(p)?;
        self.check(q)?;
        let painted = line_cells(p, q)
            .into_iter()
            .map(|c| f.brick_at(c).map(|b| (c, b)))
            .collect::<Result<Vec<_>, _>>()?;
        for (c, b) in painted {
            let i = self.index(c);
            self.cells[i] = b;
        }
        Ok(())
    }

    /// Pointwise composite: cells of `top` that are not `EMPTY` win.
    pub fn overlay(&self, top: &VirtualSpace) -> Result<VirtualSpace> {
        if self.dims != top.dims {
            return Err(Error::ShapeMismatch {
                left: self.dims,
                right: top.dims,
            });
        }
        let cells = self
            .cells
            .iter()
            .zip(&top.cells)
            .map(|(&b, &t)| if t.is_empty() { b } else { t })
            .collect();
        Ok(VirtualSpace {
            dims: self.dims,
            cells,
        })
    }

    /// Occupied cells in ascending lexicographic `(x, y, z)` order.
    pub fn occupied(&self) -> impl Iterator<Item = (Point, Brick)> + '_ {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.is_empty())
            .map(|(i, &b)| (self.point_at(i), b))
    }

    pub fn occupied_count(&self) -> usize {
        self.cells.iter().filter(|b| !b.is_empty()).count()
    }

    /// Number of cells holding exactly `brick`.
    pub fn count(&self, brick: Brick) -> usize {
        self.cells.iter().filter(|&&b| b == brick).count()
    }

    /// Every cell in lexicographic order, including `EMPTY` ones.
    pub fn cells(&self) -> impl Iterator<Item = (Point, Brick)> + '_ {
        self.cells
            .iter()
            .enumerate()
            .map(|(i, &b)| (self.point_at(i), b))
    }

    /// Writes a cell known to be in bounds.
    pub(crate) fn set_unchecked(&mut self, p: Point, brick: Brick) {
        debug_assert!(self.in_bounds(p));
        let i = self.index(p);
        self.cells[i] = brick;
    }
}
