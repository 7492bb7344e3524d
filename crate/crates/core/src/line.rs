//! Integer 3D digital lines.

use crate::Point;

/// Cells of the digital line between `p` and `q`, both endpoints included.
///
/// Integer Bresenham stepping along the dominant axis (ties resolved x, then
/// y, then z). Endpoints are first put in lexicographic order, so
/// `line_cells(p, q)` and `line_cells(q, p)` return the same sequence and the
/// first cell is always `min(p, q)`. The result holds
/// `1 + max(|dx|, |dy|, |dz|)` cells and consecutive cells are 26-adjacent.
pub fn line_cells(p: Point, q: Point) -> Vec<Point> {
    let (start, end) = if q < p { (q, p) } else { (p, q) };
    let s = start.to_array().map(i64::from);
    let e = end.to_array().map(i64::from);
    let delta: [i64; 3] = std::array::from_fn(|i| (e[i] - s[i]).abs());
    let step: [i64; 3] = std::array::from_fn(|i| (e[i] - s[i]).signum());

    let major = if delta[0] >= delta[1] && delta[0] >= delta[2] {
        0
    } else if delta[1] >= delta[2] {
        1
    } else {
        2
    };
    let minors = [(major + 1) % 3, (major + 2) % 3];

    let n = delta[major];
    let mut cur = s;
    let mut err = minors.map(|m| 2 * delta[m] - n);
    let mut cells = Vec::with_capacity(n as usize + 1);
    cells.push(start);
    for _ in 0..n {
        cur[major] += step[major];
        for (k, &m) in minors.iter().enumerate() {
            if err[k] >= 0 {
                cur[m] += step[m];
                err[k] -= 2 * n;
            }
            err[k] += 2 * delta[m];
        }
        cells.push(Point::from_array(cur.map(|c| c as i32)));
    }
    cells
}
