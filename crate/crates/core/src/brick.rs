//! The brick palette.
//!
//! Every cell of a [`VirtualSpace`](crate::VirtualSpace) holds exactly one
//! [`Brick`]. `EMPTY` marks an unoccupied cell and has no LDD material.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A brick color from the fixed palette.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Brick {
    #[default]
    Empty,
    Blue,
    Red,
    Green,
    DarkGreen,
    Yellow,
    Black,
    Orange,
    White,
    Gray,
    DarkGray,
    LightBlue,
    MediumBlue,
    DarkBlue,
}

/// Name and LDD material code for every brick. `EMPTY` carries no material.
const PALETTE: [(Brick, &str, Option<u32>); 14] = [
    (Brick::Empty, "EMPTY", None),
    (Brick::Blue, "BLUE", Some(23)),
    (Brick::Red, "RED", Some(21)),
    (Brick::Green, "GREEN", Some(37)),
    (Brick::DarkGreen, "DARK_GREEN", Some(28)),
    (Brick::Yellow, "YELLOW", Some(24)),
    (Brick::Black, "BLACK", Some(26)),
    (Brick::Orange, "ORANGE", Some(106)),
    (Brick::White, "WHITE", Some(1)),
    (Brick::Gray, "GRAY", Some(194)),
    (Brick::DarkGray, "DARK_GRAY", Some(199)),
    (Brick::LightBlue, "LIGHT_BLUE", Some(45)),
    (Brick::MediumBlue, "MEDIUM_BLUE", Some(102)),
    (Brick::DarkBlue, "DARK_BLUE", Some(140)),
];

impl Brick {
    /// All palette entries, `EMPTY` first.
    pub const ALL: [Brick; 14] = [
        Brick::Empty,
        Brick::Blue,
        Brick::Red,
        Brick::Green,
        Brick::DarkGreen,
        Brick::Yellow,
        Brick::Black,
        Brick::Orange,
        Brick::White,
        Brick::Gray,
        Brick::DarkGray,
        Brick::LightBlue,
        Brick::MediumBlue,
        Brick::DarkBlue,
    ];

    /// Shades of blue from light to dark, used for height banding.
    pub const BLUES: [Brick; 4] = [
        Brick::LightBlue,
        Brick::MediumBlue,
        Brick::Blue,
        Brick::DarkBlue,
    ];

    fn entry(self) -> &'static (Brick, &'static str, Option<u32>) {
        // PALETTE is indexed in declaration order.
        &PALETTE[self as usize]
    }

    /// Uppercase palette name, e.g. `DARK_GREEN`.
    pub fn name(self) -> &'static str {
        self.entry().1
    }

    /// LDD material code; `None` for `EMPTY`.
    pub fn material_id(self) -> Option<u32> {
        self.entry().2
    }

    pub fn is_empty(self) -> bool {
        self == Brick::Empty
    }

    /// Looks up a brick by its uppercase palette name.
    pub fn from_name(name: &str) -> Option<Brick> {
        PALETTE.iter().find(|e| e.1 == name).map(|e| e.0)
    }
}

impl fmt::Display for Brick {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown brick name `{0}`")]
pub struct UnknownBrick(pub String);

impl FromStr for Brick {
    type Err = UnknownBrick;

    /// Accepts palette names case-insensitively, with `-` in place of `_`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        Brick::from_name(&norm).ok_or_else(|| UnknownBrick(s.to_string()))
    }
}
