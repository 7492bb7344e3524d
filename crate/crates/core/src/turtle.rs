//! A 3D turtle that draws voxel lines.
//!
//! Commands (all turns are 90 degrees):
//!
//! | symbol | action |
//! |--------|--------|
//! | `F` | draw `step` cells ahead and move to the far end |
//! | `f` | move `step` cells ahead without drawing |
//! | `+` / `-` | yaw: heading toward left / right |
//! | `&` / `^` | pitch: heading toward up / down |
//! | `\` / `/` | roll: left toward up / down |
//! | `\|` | turn around (yaw 180) |
//! | `[` / `]` | push / pop position, frame and pen |
//!
//! Any other symbol is ignored.

use crate::{Brick, Error, Point, Result, VirtualSpace};

/// Symbols with a turtle meaning.
pub const COMMANDS: [char; 11] = ['F', 'f', '+', '-', '&', '^', '\\', '/', '|', '[', ']'];

/// Orientation of the turtle: heading, up and left unit vectors with
/// `heading x left = up`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Frame {
    pub heading: Point,
    pub up: Point,
    pub left: Point,
}

impl Frame {
    /// Heading along `heading`, with `up` as up; left completes the frame.
    pub fn new(heading: Point, up: Point) -> Self {
        Frame {
            heading,
            up,
            left: up.cross(heading),
        }
    }

    pub fn is_orthonormal(&self) -> bool {
        let unit = |v: Point| v.dot(v) == 1;
        unit(self.heading)
            && unit(self.up)
            && unit(self.left)
            && self.heading.dot(self.up) == 0
            && self.heading.dot(self.left) == 0
            && self.up.dot(self.left) == 0
            && self.heading.cross(self.left) == self.up
    }

    // (a, b) -> (b, -a): quarter turn of `a` toward `b`.
    fn quarter(a: &mut Point, b: &mut Point) {
        let old = *a;
        *a = *b;
        *b = -old;
    }

    fn apply(&mut self, symbol: char) {
        let Frame { heading: h, up: u, left: l } = self;
        match symbol {
            '+' => Frame::quarter(h, l),
            '-' => Frame::quarter(l, h),
            '&' => Frame::quarter(h, u),
            '^' => Frame::quarter(u, h),
            '\\' => Frame::quarter(l, u),
            '/' => Frame::quarter(u, l),
            '|' => {
                *h = -*h;
                *l = -*l;
            }
            _ => {}
        }
        debug_assert!(self.is_orthonormal(), "frame drifted after `{symbol}`: {self:?}");
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TurtleState {
    pub position: Point,
    pub frame: Frame,
    pub pen: Brick,
    stack: Vec<(Point, Frame, Brick)>,
}

impl Default for TurtleState {
    /// At the origin, heading `+x`, up `+y`, drawing `BLUE`.
    fn default() -> Self {
        TurtleState::new(
            Point::ORIGIN,
            Frame::new(Point::new(1, 0, 0), Point::new(0, 1, 0)),
            Brick::Blue,
        )
    }
}

impl TurtleState {
    pub fn new(position: Point, frame: Frame, pen: Brick) -> Self {
        TurtleState {
            position,
            frame,
            pen,
            stack: Vec::new(),
        }
    }

    pub fn stack_depth(&self) -> usize {
        self.stack.len()
    }

    /// Runs `symbols`, calling `draw(index, from, to)` for every `F`.
    fn walk(
        &mut self,
        symbols: &str,
        step: i32,
        mut draw: impl FnMut(usize, char, Point, Point, Brick) -> Result<()>,
    ) -> Result<()> {
        for (index, symbol) in symbols.chars().enumerate() {
            match symbol {
                'F' | 'f' => {
                    let to = self.position + self.frame.heading * step;
                    if symbol == 'F' {
                        draw(index, symbol, self.position, to, self.pen)?;
                    }
                    self.position = to;
                }
                '[' => self.stack.push((self.position, self.frame, self.pen)),
                ']' => {
                    let (p, f, b) = self.stack.pop().ok_or(Error::StackUnderflow { index })?;
                    self.position = p;
                    self.frame = f;
                    self.pen = b;
                }
                other => self.frame.apply(other),
            }
        }
        Ok(())
    }

    /// Line segments `F` would draw, without a space to draw into.
    pub fn segments(&mut self, symbols: &str, step: i32) -> Result<Vec<(Point, Point)>> {
        let mut out = Vec::new();
        self.walk(symbols, step, |_, _, from, to, _| {
            out.push((from, to));
            Ok(())
        })?;
        Ok(out)
    }

    /// Interprets `symbols`, drawing into `space`.
    ///
    /// A segment leaving the space fails with the index of its `F`; the
    /// segments before it stay drawn.
    pub fn interpret(&mut self, symbols: &str, step: i32, space: &mut VirtualSpace) -> Result<()> {
        if step < 1 {
            return Err(Error::InvalidParameter(format!("turtle step must be positive, got {step}")));
        }
        self.walk(symbols, step, |index, symbol, from, to, pen| {
            for p in [from, to] {
                if !space.in_bounds(p) {
                    return Err(Error::TurtleOutOfBounds {
                        index,
                        symbol,
                        point: p,
                        dims: space.dims(),
                    });
                }
            }
            space.line(from, to, pen)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn pt(x: i32, y: i32, z: i32) -> Point {
        Point::new(x, y, z)
    }

    fn draw(symbols: &str, start: Point, step: i32, n: usize) -> VirtualSpace {
        let mut space = VirtualSpace::cube(n).unwrap();
        let mut t = TurtleState {
            position: start,
            ..TurtleState::default()
        };
        t.interpret(symbols, step, &mut space).unwrap();
        space
    }

    fn cells(s: &VirtualSpace) -> BTreeSet<Point> {
        s.occupied().map(|(p, _)| p).collect()
    }

    #[test]
    fn default_frame_is_right_handed() {
        let f = TurtleState::default().frame;
        assert!(f.is_orthonormal());
        assert_eq!(f.left, pt(0, 0, -1));
    }

    #[test]
    fn straight_run() {
        let s = draw("FFFF", pt(0, 0, 0), 1, 5);
        assert_eq!(cells(&s), (0..5).map(|x| pt(x, 0, 0)).collect());
    }

    #[test]
    fn corner() {
        // yaw left from +x heads toward left = -z
        let s = draw("F+F", pt(0, 0, 1), 1, 3);
        assert_eq!(cells(&s), BTreeSet::from([pt(0, 0, 1), pt(1, 0, 1), pt(1, 0, 0)]));
        let s = draw("F&F", pt(0, 0, 0), 1, 3);
        assert_eq!(cells(&s), BTreeSet::from([pt(0, 0, 0), pt(1, 0, 0), pt(1, 1, 0)]));
    }

    #[test]
    fn branches() {
        assert_eq!(cells(&draw("[F]F", pt(0, 0, 0), 1, 3)), cells(&draw("F", pt(0, 0, 0), 1, 3)));
        let s = draw("[-F]F", pt(0, 0, 0), 1, 3);
        // right arm toward +z, main arm toward +x
        assert_eq!(cells(&s), BTreeSet::from([pt(0, 0, 0), pt(0, 0, 1), pt(1, 0, 0)]));
    }

    #[test]
    fn moves_without_drawing() {
        let s = draw("fF", pt(0, 0, 0), 2, 5);
        assert_eq!(cells(&s), BTreeSet::from([pt(2, 0, 0), pt(3, 0, 0), pt(4, 0, 0)]));
    }

    #[test]
    fn errors() {
        let mut space = VirtualSpace::cube(3).unwrap();
        let err = TurtleState::default().interpret("FF+F", 1, &mut space).unwrap_err();
        assert!(matches!(err, Error::TurtleOutOfBounds { index: 3, symbol: 'F', .. }), "{err:?}");
        let err = TurtleState::default().interpret("F]", 1, &mut space).unwrap_err();
        assert_eq!(err, Error::StackUnderflow { index: 1 });
        assert!(TurtleState::default().interpret("F", 0, &mut space).is_err());
    }

    #[test]
    fn every_rotation_keeps_frame() {
        let mut f = TurtleState::default().frame;
        for c in "+-&^\\/|+&\\+&\\|^^/--".chars() {
            f.apply(c);
            assert!(f.is_orthonormal());
        }
    }

    fn balanced() -> impl Strategy<Value = String> {
        let leaf = prop::sample::select(vec!['F', 'f', '+', '-', '&', '^', '\\', '/', '|', 'A'])
            .prop_map(String::from);
        leaf.prop_recursive(4, 32, 6, |inner| {
            prop::collection::vec(
                prop_oneof![inner.clone(), inner.prop_map(|s| format!("[{s}]"))],
                0..6,
            )
            .prop_map(|v| v.concat())
        })
    }

    proptest! {
        #[test]
        fn brackets_restore_state(s in balanced()) {
            let start = TurtleState::new(pt(3, -2, 7), Frame::new(pt(0, 0, 1), pt(-1, 0, 0)), Brick::Red);
            let mut t = start.clone();
            t.segments(&format!("[{s}]"), 2).unwrap();
            prop_assert_eq!(t, start);
        }
    }
}
