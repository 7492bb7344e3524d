//! Voxel artifact engine.
//!
//! Artifacts live in a bounded [`VirtualSpace`] of [`Brick`]s. They are
//! produced by rendering predicates and brick functions over generic
//! traversals, by drawing cells, lines and cuboids directly, or by driving
//! a 3D turtle with an L-system. Finished spaces are written as LXFML for
//! LEGO Digital Designer or as the plain-text BVOX format.
//!
//! Module overview:
//! - `space`, `line`: the virtual space and direct drawing.
//! - `traversal`: predicates, brick functions and region traversals.
//! - `setops`: cell-by-cell comparison of two predicate artifacts.
//! - `dsl`: the text expression language used for predicates and brick functions.
//! - `lsystem`, `turtle`: string rewriting and the 3D turtle.
//! - `gallery`: ready-made constructions (Sierpinski, checkerboard, ...).
//! - `io`: BVOX and LXFML encoders.

mod brick;
pub mod dsl;
mod error;
pub mod gallery;
pub mod io;
pub mod line;
pub mod lsystem;
mod point;
pub mod setops;
pub mod space;
pub mod traversal;
pub mod turtle;

pub use brick::{Brick, UnknownBrick};
pub use error::{Error, Result};
pub use point::Point;
pub use space::{Dims, VirtualSpace};
pub use traversal::{BrickFunction, Plane, Predicate};
