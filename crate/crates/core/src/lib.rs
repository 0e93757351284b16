//! Tiling engine for translation-only ribbon L-shaped n-ominoes.

pub mod constructions;
pub mod error;
pub mod flipgraph;
pub mod geometry;
pub mod pattern;
pub mod render;
pub mod solver;
pub mod tiles;
pub mod verify;

pub use error::{Result, TilingError};
pub use geometry::{Cell, Region};
pub use solver::{Solver, Tiling};
pub use tiles::{Placement, TileId, TileSet, TileShape};
