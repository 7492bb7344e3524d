//! Serialization: the BVOX text format and LXFML for LEGO Digital Designer.
//!
//! BVOX is line-based and canonical:
//!
//! ```text
//! BVOX 1 <dimX> <dimY> <dimZ>
//! <x> <y> <z> <BRICK>
//! ...
//! ```
//!
//! One line per occupied cell, in ascending `(x, y, z)` order, single
//! spaces, `\n` line endings and a final newline. `EMPTY` cells are not
//! listed.

use std::fmt::Write;

use thiserror::Error;

use crate::{Brick, Point, VirtualSpace};

/// LDD design id of the 1x1 brick.
pub const BRICK_1X1_DESIGN_ID: u32 = 3005;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("BVOX line {line}: {message}")]
pub struct BvoxError {
    pub line: usize,
    pub message: String,
}

pub fn emit_bvox(space: &VirtualSpace) -> String {
    let d = space.dims();
    let mut out = format!("BVOX 1 {} {} {}\n", d.x, d.y, d.z);
    for (p, b) in space.occupied() {
        // writing to a String cannot fail
        let _ = writeln!(out, "{} {} {} {}", p.x, p.y, p.z, b.name());
    }
    out
}

// Canonical non-negative decimal: no sign, no leading zeros.
fn canonical_uint(s: &str) -> Option<usize> {
    let ok = !s.is_empty()
        && s.bytes().all(|b| b.is_ascii_digit())
        && (s == "0" || !s.starts_with('0'));
    if ok {
        s.parse().ok()
    } else {
        None
    }
}

/// Parses canonical BVOX text. Anything [`emit_bvox`] would not produce is
/// rejected with the offending line number.
pub fn parse_bvox(text: &str) -> Result<VirtualSpace, BvoxError> {
    let err = |line: usize, message: String| BvoxError { line, message };
    let Some(body) = text.strip_suffix('\n') else {
        return Err(err(text.lines().count().max(1), "missing final newline".into()));
    };
    let mut lines = body.split('\n').enumerate().map(|(i, l)| (i + 1, l));

    let (_, header) = lines.next().ok_or_else(|| err(1, "missing header".into()))?;
    let fields: Vec<&str> = header.split(' ').collect();
    let dims = match fields.as_slice() {
        ["BVOX", "1", x, y, z] => [x, y, z].map(|s| canonical_uint(s)),
        _ => return Err(err(1, format!("malformed header `{header}`"))),
    };
    let [Some(x), Some(y), Some(z)] = dims else {
        return Err(err(1, format!("malformed dimensions in `{header}`")));
    };
    let mut space = VirtualSpace::new(x, y, z).map_err(|e| err(1, e.to_string()))?;

    let mut prev: Option<Point> = None;
    for (n, line) in lines {
        let fields: Vec<&str> = line.split(' ').collect();
        let [xs, ys, zs, name] = fields.as_slice() else {
            return Err(err(n, format!("expected `X Y Z BRICK`, found `{line}`")));
        };
        let coords = [xs, ys, zs].map(|s| canonical_uint(s).and_then(|v| i32::try_from(v).ok()));
        let [Some(cx), Some(cy), Some(cz)] = coords else {
            return Err(err(n, format!("malformed coordinates in `{line}`")));
        };
        let p = Point::new(cx, cy, cz);
        let brick = match Brick::from_name(name) {
            Some(Brick::Empty) => return Err(err(n, "EMPTY cells are not listed".into())),
            Some(b) => b,
            None => return Err(err(n, format!("unknown brick `{name}`"))),
        };
        if !space.in_bounds(p) {
            return Err(err(n, format!("cell {p} is out of bounds for {}", space.dims())));
        }
        match prev {
            Some(q) if q == p => return Err(err(n, format!("duplicate cell {p}"))),
            Some(q) if q > p => return Err(err(n, format!("cell {p} is out of order after {q}"))),
            _ => {}
        }
        prev = Some(p);
        space.update(brick, p).map_err(|e| err(n, e.to_string()))?;
    }
    Ok(space)
}

fn escape_attr(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            '\t' | '\n' | '\r' => {
                let _ = write!(out, "&#{};", c as u32);
            }
            // not representable in XML 1.0
            c if (c as u32) < 0x20 => {}
            c => out.push(c),
        }
    }
    out
}

// `units * scale / 100` printed with exactly two decimals, in integer
// arithmetic so output is stable across platforms.
fn fixed2(units: i32, scale: i64) -> String {
    let hundredths = i64::from(units) * scale;
    let sign = if hundredths < 0 { "-" } else { "" };
    let h = hundredths.abs();
    format!("{sign}{}.{:02}", h / 100, h % 100)
}

/// Stud pitch along x and z, in hundredths of an LDD unit.
const STUD_PITCH: i64 = 80;
/// Height of one brick along y, in hundredths of an LDD unit.
const BRICK_HEIGHT: i64 = 96;

/// Writes an LXFML 5 scene with one 1x1 brick per occupied cell.
///
/// Cell `(x, y, z)` is placed at `(0.8x, 0.96y, 0.8z)` LDD units. Reference
/// ids are dense and follow BVOX cell order.
pub fn emit_lxfml(space: &VirtualSpace, title: &str) -> String {
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\" ?>\n");
    let _ = writeln!(
        out,
        "<LXFML versionMajor=\"5\" versionMinor=\"0\" name=\"{}\">",
        escape_attr(title)
    );
    out.push_str("  <Meta>\n");
    out.push_str("    <Application name=\"LEGO Digital Designer\" versionMajor=\"4\" versionMinor=\"3\"/>\n");
    out.push_str("    <Brand name=\"LDD\"/>\n");
    out.push_str("    <BrickSet version=\"1264\"/>\n");
    out.push_str("  </Meta>\n");
    out.push_str("  <Cameras>\n");
    out.push_str("    <Camera refID=\"0\" fieldOfView=\"80\" distance=\"0\" transformation=\"1,0,0,0,1,0,0,0,1,0,0,0\"/>\n");
    out.push_str("  </Cameras>\n");
    out.push_str("  <Bricks cameraRef=\"0\">\n");
    for (id, (p, b)) in space.occupied().enumerate() {
        // occupied cells always carry a material
        let material = b.material_id().unwrap_or_default();
        let _ = writeln!(
            out,
            "    <Brick refID=\"{id}\" designID=\"{BRICK_1X1_DESIGN_ID}\">\
             <Part refID=\"{id}\" designID=\"{BRICK_1X1_DESIGN_ID}\" materials=\"{material}\">\
             <Bone refID=\"{id}\" transformation=\"1,0,0,0,1,0,0,0,1,{},{},{}\"/>\
             </Part></Brick>",
            fixed2(p.x, STUD_PITCH),
            fixed2(p.y, BRICK_HEIGHT),
            fixed2(p.z, STUD_PITCH),
        );
    }
    out.push_str("  </Bricks>\n");
    out.push_str("  <RigidSystems/>\n");
    out.push_str("  <GroupSystems/>\n");
    out.push_str("  <BuildingInstructions/>\n");
    out.push_str("</LXFML>\n");
    out
}
