//! The rectangular pattern: a tiling by T1..T5 that decomposes into `n × 2`,
//! `2 × n` and `2 × 2` blocks with even corners, each long block covered by
//! its two L tiles. Also the map from pattern tilings to half-scale bar
//! tilings.
//!
//! Parity is measured relative to the region anchor (lower-left corner of its
//! bounding box). For regions anchored at the origin this is plain lattice
//! parity.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Result, TilingError};
use crate::geometry::{Cell, Region};
use crate::solver::Tiling;
use crate::tiles::{Placement, TileId, TileShape};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum BlockKind {
    /// `n × 2`: n tall, 2 wide.
    V,
    /// `2 × n`: 2 tall, n wide.
    H,
    /// `2 × 2`.
    S,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Block {
    pub kind: BlockKind,
    pub corner: Cell,
    pub n: u32,
}

impl Block {
    pub fn new(kind: BlockKind, corner: Cell, n: u32) -> Block {
        Block { kind, corner, n }
    }

    /// (height, base) of the block.
    pub fn dims(&self) -> (i32, i32) {
        let n = self.n as i32;
        match self.kind {
            BlockKind::V => (n, 2),
            BlockKind::H => (2, n),
            BlockKind::S => (2, 2),
        }
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        let (h, b) = self.dims();
        (0..h).flat_map(move |j| (0..b).map(move |i| self.corner.offset(i, j)))
    }

    /// The placements that cover this block: `T1@(x,y), T2@(x,y+1)` for V,
    /// `T3@(x,y), T4@(x+1,y)` for H, and `T5@(x,y)` for S.
    pub fn fill(&self) -> Result<Vec<Placement>> {
        let c = self.corner;
        let l = |id, at| TileShape::ribbon_l(id, self.n).map(|s| Placement::new(Arc::new(s), at));
        Ok(match self.kind {
            BlockKind::V => vec![l(TileId::T1, c)?, l(TileId::T2, c.offset(0, 1))?],
            BlockKind::H => vec![l(TileId::T3, c)?, l(TileId::T4, c.offset(1, 0))?],
            BlockKind::S => vec![Placement::new(Arc::new(TileShape::square()), c)],
        })
    }
}

impl Ord for Block {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.corner, self.kind, self.n).cmp(&(other.corner, other.kind, other.n))
    }
}

impl PartialOrd for Block {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}@{}", self.kind, self.n, self.corner)
    }
}

/// The block a placement would belong to if it sits in a pattern block.
pub fn partner_block(p: &Placement) -> Result<Block> {
    let c = p.offset();
    let n = p.n();
    Ok(match p.id() {
        TileId::T1 => Block::new(BlockKind::V, c, n),
        TileId::T2 => Block::new(BlockKind::V, c.offset(0, -1), n),
        TileId::T3 => Block::new(BlockKind::H, c, n),
        TileId::T4 => Block::new(BlockKind::H, c.offset(-1, 0), n),
        TileId::T5 => Block::new(BlockKind::S, c, 2),
        _ => {
            return Err(TilingError::Precondition(format!("{p} is neither a ribbon L tile nor the square")));
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternDecomposition {
    blocks: Vec<Block>,
    partners: BTreeMap<Placement, Placement>,
    anchor: Cell,
}

impl PatternDecomposition {
    /// Blocks in (corner, kind) order.
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// The other L tile in the same block.
    pub fn partner(&self, p: &Placement) -> Option<&Placement> {
        self.partners.get(p)
    }

    pub fn anchor(&self) -> Cell {
        self.anchor
    }
}

#[derive(Clone, Debug)]
pub struct PatternVerdict {
    pub follows: bool,
    pub decomposition: Option<PatternDecomposition>,
    /// First offending placement and the reason, when `follows` is false.
    pub witness: Option<String>,
    /// Origin of the parity test.
    pub anchor: Cell,
}

impl PatternVerdict {
    /// Parity was measured relative to an anchor other than the origin.
    pub fn anchor_relative(&self) -> bool {
        self.anchor != Cell::ORIGIN
    }

    /// `PATTERN yes|no` plus, on `no`, a witness line.
    pub fn report(&self) -> String {
        let mut out = format!("PATTERN {}\n", if self.follows { "yes" } else { "no" });
        if let Some(w) = &self.witness {
            out.push_str(&format!("WITNESS {w}\n"));
        }
        if self.anchor_relative() {
            out.push_str(&format!("ANCHOR {} {}\n", self.anchor.x, self.anchor.y));
        }
        out
    }
}

fn even_relative(c: Cell, anchor: Cell) -> bool {
    (c.x - anchor.x).rem_euclid(2) == 0 && (c.y - anchor.y).rem_euclid(2) == 0
}

/// Decides whether a (valid) tiling follows the rectangular pattern. Runs in
/// linear time: each L tile's block and partner are forced.
pub fn follows_rectangular_pattern(t: &Tiling) -> PatternVerdict {
    let anchor = t.region().anchor();
    let present: HashSet<&Placement> = t.placements().iter().collect();
    let mut blocks = BTreeSet::new();
    let mut partners = BTreeMap::new();
    let fail = |p: &Placement, why: String| PatternVerdict {
        follows: false,
        decomposition: None,
        witness: Some(format!("{p}: {why}")),
        anchor,
    };
    for p in t.placements() {
        let block = match partner_block(p) {
            Ok(b) => b,
            Err(_) => return fail(p, "tile is not a ribbon L tile or the 2x2 square".into()),
        };
        if !even_relative(block.corner, anchor) {
            return fail(p, format!("block {block} has a corner with odd coordinates"));
        }
        if block.kind != BlockKind::S {
            let pair = block.fill().expect("L tiles carry n >= 3");
            let other = if pair[0] == *p { &pair[1] } else { &pair[0] };
            if !present.contains(other) {
                return fail(p, format!("partner {other} of block {block} is missing"));
            }
            partners.insert(p.clone(), other.clone());
        }
        blocks.insert(block);
    }
    PatternVerdict {
        follows: true,
        decomposition: Some(PatternDecomposition { blocks: blocks.into_iter().collect(), partners, anchor }),
        witness: None,
        anchor,
    }
}

/// Shrinks a pattern decomposition by 2: a V block becomes a vertical
/// `(n/2) × 1` bar, an H block a horizontal bar, and an S block a `1 × 1`
/// tile (`R:1x1`). Coordinates are relative to the decomposition anchor.
pub fn to_bar_tiling(d: &PatternDecomposition) -> Result<Tiling> {
    let long: BTreeSet<u32> = d.blocks.iter().filter(|b| b.kind != BlockKind::S).map(|b| b.n).collect();
    if long.len() > 1 {
        return Err(TilingError::Precondition(format!("mixed block sizes {long:?}")));
    }
    let n = long.into_iter().next().unwrap_or(2);
    if !n.is_multiple_of(2) {
        return Err(TilingError::Precondition(format!("odd block length {n} has no half-scale bar")));
    }
    let k = n / 2;
    let vertical = Arc::new(TileShape::bar(false, k)?);
    let horizontal = Arc::new(TileShape::bar(true, k)?);
    let unit = Arc::new(TileShape::rect(1, 1)?);
    let mut out = Vec::with_capacity(d.blocks.len());
    for b in &d.blocks {
        let (dx, dy) = (b.corner.x - d.anchor.x, b.corner.y - d.anchor.y);
        if dx.rem_euclid(2) != 0 || dy.rem_euclid(2) != 0 {
            return Err(TilingError::Precondition(format!("block {b} has an odd corner")));
        }
        let at = Cell::new(dx / 2, dy / 2);
        let shape = match b.kind {
            BlockKind::V => &vertical,
            BlockKind::H => &horizontal,
            BlockKind::S => &unit,
        };
        out.push(Placement::new(shape.clone(), at));
    }
    let region = Region::new(out.iter().flat_map(|p| p.cells().collect::<Vec<_>>()));
    Ok(Tiling::new(Arc::new(region), out))
}
