//! Explicit tilings and the rectangle classification predicates.

use std::sync::Arc;

use crate::error::{invalid, Result, TilingError};
use crate::geometry::{rect_region, Cell, Region};
use crate::pattern::{Block, BlockKind};
use crate::solver::{validate_tiling, Tiling};
use crate::tiles::{Placement, TileId, TileShape};

/// The placements covering a block: two L tiles for V/H, one T5 for S.
pub fn fill_block(b: &Block) -> Result<Vec<Placement>> {
    b.fill()
}

fn fill_all(blocks: impl IntoIterator<Item = Block>) -> Result<Vec<Placement>> {
    let mut out = Vec::new();
    for b in blocks {
        out.extend(b.fill()?);
    }
    Ok(out)
}

/// `count` H blocks stacked upward from `corner`.
fn stacked_h(corner: Cell, count: i32, n: u32) -> impl Iterator<Item = Block> {
    (0..count).map(move |i| Block::new(BlockKind::H, corner.offset(0, 2 * i), n))
}

/// `count` V blocks side by side to the right of `corner`.
fn row_of_v(corner: Cell, count: i32, n: u32) -> impl Iterator<Item = Block> {
    (0..count).map(move |i| Block::new(BlockKind::V, corner.offset(2 * i, 0), n))
}

/// Inflates a tiling of the `(a/2) × (b/2)` grid by `(n/2)`-bars (and
/// optionally `R:1x1` cells) into a pattern tiling of the `a × b` rectangle.
pub fn pattern_tiling(a: i32, b: i32, n: u32, layout: &Tiling) -> Result<Tiling> {
    if a % 2 != 0 || b % 2 != 0 || a < 2 || b < 2 {
        return Err(invalid(format!("pattern tilings need positive even sides, got {a}x{b}")));
    }
    if n < 4 || !n.is_multiple_of(2) {
        return Err(invalid(format!("pattern tilings need even n >= 4, got {n}")));
    }
    let half = rect_region(a / 2, b / 2, Cell::ORIGIN)?;
    if *layout.region() != half {
        return Err(invalid(format!("layout does not cover the {}x{} half grid", a / 2, b / 2)));
    }
    if let Some(problem) = validate_tiling(layout).first_problem() {
        return Err(invalid(format!("layout is not a tiling: {problem}")));
    }
    let k = n / 2;
    let mut blocks = Vec::new();
    for p in layout.placements() {
        let corner = Cell::new(2 * p.offset().x, 2 * p.offset().y);
        let kind = match (p.id(), p.n()) {
            (TileId::BarV, len) if len == k => BlockKind::V,
            (TileId::BarH, len) if len == k => BlockKind::H,
            (TileId::RectExtra { height: 1, base: 1 }, _) => BlockKind::S,
            _ => return Err(invalid(format!("layout piece {p} is not a {k}-bar or unit cell"))),
        };
        blocks.push(Block::new(kind, corner, n));
    }
    let region = rect_region(a, b, Cell::ORIGIN)?;
    Ok(Tiling::new(Arc::new(region), fill_all(blocks)?))
}

/// A tiling of the `3n × (3n+1)` rectangle by T_n for odd `n`.
///
/// Six sub-rectangles are filled with blocks and two L tiles glue the
/// leftover staircase:
///
/// ```text
///   A = [0,n]×[0,2n]        n stacked H blocks
///   B = [0,n+1]×[2n,3n]     (n+1)/2 V blocks
///   C = [n+1,2n+1]×[2n-1,3n] (n+1)/2 stacked H blocks
///   D = [2n+1,3n+1]×[n,3n]  n stacked H blocks
///   E = [2n,3n+1]×[0,n]     (n+1)/2 V blocks
///   F = [n,2n]×[0,2n-2]     n-1 stacked H blocks
///   glue: T3@(n,2n-2), T2@(2n-1,n)
/// ```
pub fn odd_rect_tiling(n: u32) -> Result<Tiling> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(invalid(format!("the (3n)x(3n+1) construction needs odd n >= 3, got {n}")));
    }
    let m = n as i32;
    let half_up = (m + 1) / 2;
    let blocks = stacked_h(Cell::new(0, 0), m, n)
        .chain(row_of_v(Cell::new(0, 2 * m), half_up, n))
        .chain(stacked_h(Cell::new(m + 1, 2 * m - 1), half_up, n))
        .chain(stacked_h(Cell::new(2 * m + 1, m), m, n))
        .chain(row_of_v(Cell::new(2 * m, 0), half_up, n))
        .chain(stacked_h(Cell::new(m, 0), m - 1, n));
    let mut placements = fill_all(blocks)?;
    placements.push(Placement::new(Arc::new(TileShape::ribbon_l(TileId::T3, n)?), Cell::new(m, 2 * m - 2)));
    placements.push(Placement::new(Arc::new(TileShape::ribbon_l(TileId::T2, n)?), Cell::new(2 * m - 1, m)));
    let region = rect_region(3 * m, 3 * m + 1, Cell::ORIGIN)?;
    Ok(Tiling::new(Arc::new(region), placements))
}

/// A tiling of the 6×10 rectangle by T_4 ∪ T_6 that is not a pattern
/// tiling: two 4×4 squares filled with V blocks, and a ring of six L tiles.
pub fn mixed_6x10_tiling() -> Tiling {
    let blocks = row_of_v(Cell::new(0, 0), 2, 4).chain(row_of_v(Cell::new(6, 2), 2, 4));
    let mut placements = fill_all(blocks).expect("n = 4 is a valid arm parameter");
    let ring = [
        (TileId::T3, 4, 0, 4),
        (TileId::T4, 6, 1, 4),
        (TileId::T2, 4, 3, 2),
        (TileId::T1, 4, 5, 1),
        (TileId::T3, 6, 4, 0),
        (TileId::T4, 4, 7, 0),
    ];
    for (id, n, x, y) in ring {
        let shape = TileShape::ribbon_l(id, n).expect("n >= 3");
        placements.push(Placement::new(Arc::new(shape), Cell::new(x, y)));
    }
    let region = rect_region(6, 10, Cell::ORIGIN).expect("positive sides");
    Tiling::new(Arc::new(region), placements)
}

/// Classification of `a × b` rectangles tileable by T_n, for even `n`.
pub fn rect_tileable_tn(n: u32, a: i32, b: i32) -> Result<bool> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(TilingError::Unsupported(format!(
            "no rectangle classification is known for n = {n}; only even n >= 4"
        )));
    }
    let n = n as i32;
    Ok(a % 2 == 0 && b % 2 == 0 && (a % n == 0 || b % n == 0))
}

/// Classification of rectangles tileable by T_n ∪ {2×2}.
pub fn rect_tileable_tn_plus(a: i32, b: i32) -> bool {
    a % 2 == 0 && b % 2 == 0
}

/// Rectangles tileable by `1 × k` and `k × 1` bars.
pub fn bar_tileable(k: i32, a: i32, b: i32) -> bool {
    a % k == 0 || b % k == 0
}

/// One predicted-versus-observed comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub claim: String,
    pub instance: String,
    pub predicted: bool,
    pub observed: bool,
    pub agree: bool,
}

impl TheoremVerdict {
    pub fn new(claim: impl Into<String>, instance: impl Into<String>, predicted: bool, observed: bool) -> Self {
        TheoremVerdict {
            claim: claim.into(),
            instance: instance.into(),
            predicted,
            observed,
            agree: predicted == observed,
        }
    }

    pub fn line(&self) -> String {
        let yn = |b: bool| if b { "yes" } else { "no" };
        format!(
            "{:<18} {:<40} predicted={:<3} observed={:<3} {}",
            self.claim,
            self.instance,
            yn(self.predicted),
            yn(self.observed),
            if self.agree { "AGREE" } else { "DISAGREE" }
        )
    }
}

/// Named region of the k-copy fixture: the `k`-copy of T1 with parameter `n`.
pub fn k_copy_fixture(n: u32, k: i32) -> Result<Region> {
    crate::geometry::k_copy_region(&TileShape::ribbon_l(TileId::T1, n)?, k)
}
