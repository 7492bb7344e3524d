//! Ready-made constructions.

use crate::lsystem::hilbert_3d;
use crate::traversal::brickfn_show;
use crate::turtle::TurtleState;
use crate::{Brick, Error, Point, Result, VirtualSpace};

fn param(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SierpinskiParams {
    /// Side of the slab; must be `2^m + 1` with `m >= 1`.
    pub n: usize,
    pub even_brick: Brick,
    pub odd_brick: Brick,
}

impl SierpinskiParams {
    pub fn new(n: usize) -> Self {
        SierpinskiParams {
            n,
            even_brick: Brick::Red,
            odd_brick: Brick::Blue,
        }
    }
}

/// Sierpinski gasket as Pascal's triangle mod 2, built from 2x1 bricks in an
/// `n`x`n`x1 slab.
///
/// The first brick sits at row `mid` covering `x = mid, mid+1`. Each lower
/// row places bricks at `x = lo, lo+2, .., hi` and colors a brick even when
/// the two cells directly above it hold the same non-empty brick, odd
/// otherwise. Rows stop once `hi` reaches `n - 1`, so row `y = 0` stays
/// empty. Bricks are placed strictly in order: each row reads the one above.
pub fn sierpinski(params: SierpinskiParams) -> Result<VirtualSpace> {
    let SierpinskiParams {
        n,
        even_brick,
        odd_brick,
    } = params;
    if n < 3 || !(n - 1).is_power_of_two() || n > i32::MAX as usize {
        return Err(param(format!("sierpinski size must be 2^m + 1 with m >= 1, got {n}")));
    }
    if even_brick.is_empty() || odd_brick.is_empty() {
        return Err(Error::InvalidBrick("sierpinski bricks must not be EMPTY"));
    }
    let max = n as i32 - 1;
    let mid = max / 2;
    let mut space = VirtualSpace::new(n, n, 1)?;

    let above_same = |space: &VirtualSpace, x: i32, y: i32| -> Result<bool> {
        let above_left = space.access(Point::new(x, y + 1, 0))?;
        let above_right = space.access(Point::new(x + 1, y + 1, 0))?;
        Ok(!above_left.is_empty() && above_left == above_right)
    };

    let (mut lo, mut hi) = (mid, mid);
    while hi < max {
        let y = lo;
        let mut x = lo;
        while x <= hi {
            let brick = if above_same(&space, x, y)? {
                even_brick
            } else {
                odd_brick
            };
            space.place_brick(2, 1, 1, brick, Point::new(x, y, 0))?;
            x += 2;
        }
        lo -= 1;
        hi += 1;
    }
    Ok(space)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckerboardParams {
    pub board_size: usize,
    /// Must divide `board_size`.
    pub square_size: usize,
    pub black: Brick,
    pub other: Brick,
}

impl CheckerboardParams {
    pub fn new(board_size: usize, square_size: usize) -> Self {
        CheckerboardParams {
            board_size,
            square_size,
            black: Brick::Black,
            other: Brick::Orange,
        }
    }
}

/// A checkerboard of `square_size`-wide squares on the ground plane of a
/// `board_size` cube.
///
/// Coordinates fall into equivalence classes `(v div square_size) mod 2`;
/// a cell is black when its `x` and `z` classes agree.
pub fn big_checkerboard(params: CheckerboardParams) -> Result<VirtualSpace> {
    let CheckerboardParams {
        board_size,
        square_size,
        black,
        other,
    } = params;
    if board_size == 0 || square_size == 0 || board_size % square_size != 0 {
        return Err(param(format!(
            "board size {board_size} must be a positive multiple of square size {square_size}"
        )));
    }
    let square = square_size as i32;
    let equiv_class = |v: i32| (v / square) % 2;
    brickfn_show(board_size, &|p: Point| {
        if p.y == 0 {
            if equiv_class(p.x) == equiv_class(p.z) {
                black
            } else {
                other
            }
        } else {
            Brick::Empty
        }
    })
}

/// Draws the 12 edges of the cube `[lo, hi]^3`.
pub fn wireframe_cube(space: &mut VirtualSpace, lo: i32, hi: i32, brick: Brick) -> Result<()> {
    let corner = |bits: [bool; 3]| Point::from_array(bits.map(|b| if b { hi } else { lo }));
    for a in [false, true] {
        for b in [false, true] {
            space.line(corner([false, a, b]), corner([true, a, b]), brick)?;
            space.line(corner([a, false, b]), corner([a, true, b]), brick)?;
            space.line(corner([a, b, false]), corner([a, b, true]), brick)?;
        }
    }
    Ok(())
}

/// Concentric wireframe cubes: the outer `n`-cube, then boxes shrunk by
/// `inset` on every side for as long as their side is at least 2.
pub fn nested_cubes(n: usize, inset: usize, brick: Brick) -> Result<VirtualSpace> {
    if n < 2 || inset < 1 || n > i32::MAX as usize {
        return Err(param(format!(
            "nested cubes need n >= 2 and inset >= 1, got n = {n}, inset = {inset}"
        )));
    }
    let mut space = VirtualSpace::cube(n)?;
    let inset = inset.min(n) as i32;
    let (mut lo, mut hi) = (0, n as i32 - 1);
    while hi - lo + 1 >= 2 {
        wireframe_cube(&mut space, lo, hi, brick)?;
        lo += inset;
        hi -= inset;
    }
    Ok(space)
}

/// Diagonal sine waves with height-banded shading.
///
/// Column `(x, z)` rises to `h = round(amplitude * (sin(frequency * (x + z)) + 1))`
/// (half to even). Cell `y <= h` takes
/// `palette[min(y * len / (max_h + 1), len - 1)]`, where `max_h` is the
/// tallest column. The space is `n` x `(max_h + 1)` x `n`.
pub fn sine_shading(n: usize, amplitude: f64, frequency: f64, palette: &[Brick]) -> Result<VirtualSpace> {
    if n == 0 || n > i32::MAX as usize {
        return Err(param(format!("sine size must be positive, got {n}")));
    }
    if !amplitude.is_finite() || amplitude < 0.0 || !frequency.is_finite() {
        return Err(param(format!(
            "amplitude must be finite and non-negative and frequency finite, got {amplitude} and {frequency}"
        )));
    }
    if palette.is_empty() || palette.iter().any(|b| b.is_empty()) {
        return Err(param("palette must be non-empty and free of EMPTY".to_string()));
    }
    let height = |s: i32| -> i64 { (amplitude * ((frequency * f64::from(s)).sin() + 1.0)).round_ties_even() as i64 };
    let n_i = n as i32;
    let max_h = (0..2 * n_i - 1).map(height).max().unwrap_or(0);
    let rows = usize::try_from(max_h + 1)
        .ok()
        .filter(|&r| r <= crate::space::MAX_CELLS)
        .ok_or_else(|| param(format!("sine amplitude {amplitude} is too large")))?;
    let mut space = VirtualSpace::new(n, rows, n)?;
    let len = palette.len() as i64;
    for x in 0..n_i {
        for z in 0..n_i {
            for y in 0..=height(x + z) {
                let band = (y * len / (max_h + 1)).min(len - 1);
                space.update(palette[band as usize], Point::new(x, y as i32, z))?;
            }
        }
    }
    Ok(space)
}

/// Largest Hilbert order accepted.
pub const MAX_HILBERT_ORDER: u32 = 7;

/// 3D Hilbert curve of the given order drawn with unit steps.
pub fn hilbert_cube(order: u32, brick: Brick) -> Result<VirtualSpace> {
    hilbert_cube_scaled(order, 1, brick)
}

/// 3D Hilbert curve whose segments are `step` cells long.
///
/// The turtle starts at the origin heading `+x` with `+y` up; the curve
/// then stays inside the cube of side `(2^order - 1) * step + 1`.
pub fn hilbert_cube_scaled(order: u32, step: u32, brick: Brick) -> Result<VirtualSpace> {
    if !(1..=MAX_HILBERT_ORDER).contains(&order) {
        return Err(param(format!(
            "hilbert order must be between 1 and {MAX_HILBERT_ORDER}, got {order}"
        )));
    }
    if step == 0 || step > 1024 {
        return Err(param(format!("hilbert step must be between 1 and 1024, got {step}")));
    }
    if brick.is_empty() {
        return Err(Error::InvalidBrick("the hilbert curve cannot be drawn in EMPTY"));
    }
    let side = ((1usize << order) - 1) * step as usize + 1;
    let mut space = VirtualSpace::cube(side)?;
    let mut turtle = TurtleState::default();
    turtle.pen = brick;
    turtle.interpret(&hilbert_3d().expand(order as usize), step as i32, &mut space)?;
    Ok(space)
}
