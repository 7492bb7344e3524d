use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An integer cell coordinate. `y` is the vertical axis.
///
/// Also used as an integer direction vector by the turtle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Point {
    pub x: i32,
    pub y: i32,
    pub z: i32,
}

impl Point {
    pub const ORIGIN: Point = Point::new(0, 0, 0);

    pub const fn new(x: i32, y: i32, z: i32) -> Self {
        Point { x, y, z }
    }

    pub fn to_array(self) -> [i32; 3] {
        [self.x, self.y, self.z]
    }

    pub fn from_array([x, y, z]: [i32; 3]) -> Self {
        Point { x, y, z }
    }

    pub fn cross(self, o: Point) -> Point {
        Point::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn dot(self, o: Point) -> i32 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    /// Largest absolute coordinate difference.
    pub fn chebyshev(self, o: Point) -> i32 {
        let d = self - o;
        d.x.abs().max(d.y.abs()).max(d.z.abs())
    }

    /// Sum of absolute coordinate differences.
    pub fn manhattan(self, o: Point) -> i32 {
        let d = self - o;
        d.x.abs() + d.y.abs() + d.z.abs()
    }
}

impl From<(i32, i32, i32)> for Point {
    fn from((x, y, z): (i32, i32, i32)) -> Self {
        Point { x, y, z }
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<i32> for Point {
    type Output = Point;
    fn mul(self, k: i32) -> Point {
        Point::new(self.x * k, self.y * k, self.z * k)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}
