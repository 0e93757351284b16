//! Tile shapes, tile sets, and placements.
//!
//! The four ribbon L tiles of parameter `n`, normalized so the bounding box
//! starts at the origin:
//!
//! ```text
//!  T1        T2        T3            T4
//!  #          ##       #             ####
//!  #          .#       ####          ...#
//!  ##         .#
//! ```
//!
//! (drawn for n = 4, top row first). `T1@(x,y) ∪ T2@(x,y+1)` is the `n × 2`
//! rectangle at `(x,y)` and `T3@(x,y) ∪ T4@(x+1,y)` is the `2 × n` rectangle.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{invalid, Result, TilingError};
use crate::geometry::{is_connected, Cell, Region};

/// Identity tag of a tile shape. Together with the shape parameter `n` it
/// determines the cells completely.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum TileId {
    T1,
    T2,
    T3,
    T4,
    /// The 2×2 square.
    T5,
    /// Horizontal `1 × k` bar.
    BarH,
    /// Vertical `k × 1` bar.
    BarV,
    /// An additional solid rectangle, height × base.
    RectExtra {
        height: u32,
        base: u32,
    },
}

impl TileId {
    pub fn is_ribbon_l(self) -> bool {
        matches!(self, TileId::T1 | TileId::T2 | TileId::T3 | TileId::T4)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TileShape {
    id: TileId,
    n: u32,
    cells: Vec<Cell>,
}

impl TileShape {
    /// One of T1..T4 with arm parameter `n`.
    pub fn ribbon_l(id: TileId, n: u32) -> Result<TileShape> {
        if n < 3 {
            return Err(invalid(format!("ribbon L tiles need n >= 3, got {n}")));
        }
        let arm = n as i32 - 1;
        let cells: Vec<Cell> = match id {
            TileId::T1 => (0..arm).map(|j| Cell::new(0, j)).chain([Cell::new(1, 0)]).collect(),
            TileId::T2 => (0..arm).map(|j| Cell::new(1, j)).chain([Cell::new(0, arm - 1)]).collect(),
            TileId::T3 => (0..arm).map(|i| Cell::new(i, 0)).chain([Cell::new(0, 1)]).collect(),
            TileId::T4 => (0..arm).map(|i| Cell::new(i, 1)).chain([Cell::new(arm - 1, 0)]).collect(),
            other => return Err(invalid(format!("{other:?} is not a ribbon L tile"))),
        };
        Ok(TileShape::from_cells(id, n, cells))
    }

    pub fn square() -> TileShape {
        TileShape::from_cells(TileId::T5, 2, solid(2, 2))
    }

    pub fn bar(horizontal: bool, k: u32) -> Result<TileShape> {
        if k < 1 {
            return Err(invalid("bar length must be positive"));
        }
        Ok(if horizontal {
            TileShape::from_cells(TileId::BarH, k, solid(1, k))
        } else {
            TileShape::from_cells(TileId::BarV, k, solid(k, 1))
        })
    }

    pub fn rect(height: u32, base: u32) -> Result<TileShape> {
        if height < 1 || base < 1 {
            return Err(invalid(format!("rectangle tile must be nonempty, got {height}x{base}")));
        }
        Ok(TileShape::from_cells(TileId::RectExtra { height, base }, 0, solid(height, base)))
    }

    fn from_cells(id: TileId, n: u32, mut cells: Vec<Cell>) -> TileShape {
        cells.sort();
        TileShape { id, n, cells }
    }

    pub fn id(&self) -> TileId {
        self.id
    }

    /// Shape parameter: the arm parameter for T1..T4, 2 for T5, the length
    /// for bars, 0 for extra rectangles.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Normalized cells in (y, x) order; min x = min y = 0.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn area(&self) -> usize {
        self.cells.len()
    }

    /// Short token used in tiling files and rendered output: `T1:4`, `T5`,
    /// `BH:3`, `BV:3`, `R:2x3`.
    pub fn label(&self) -> String {
        match self.id {
            TileId::T1 | TileId::T2 | TileId::T3 | TileId::T4 => format!("{:?}:{}", self.id, self.n),
            TileId::T5 => "T5".to_string(),
            TileId::BarH => format!("BH:{}", self.n),
            TileId::BarV => format!("BV:{}", self.n),
            TileId::RectExtra { height, base } => format!("R:{height}x{base}"),
        }
    }

    fn key(&self) -> (TileId, u32) {
        (self.id, self.n)
    }
}

impl FromStr for TileShape {
    type Err = TilingError;

    fn from_str(s: &str) -> Result<TileShape> {
        let bad = || invalid(format!("unknown tile token {s:?}"));
        if s == "T5" {
            return Ok(TileShape::square());
        }
        let (head, tail) = s.split_once(':').ok_or_else(bad)?;
        let num = |t: &str| t.parse::<u32>().map_err(|_| bad());
        match head {
            "T1" => TileShape::ribbon_l(TileId::T1, num(tail)?),
            "T2" => TileShape::ribbon_l(TileId::T2, num(tail)?),
            "T3" => TileShape::ribbon_l(TileId::T3, num(tail)?),
            "T4" => TileShape::ribbon_l(TileId::T4, num(tail)?),
            "BH" => TileShape::bar(true, num(tail)?),
            "BV" => TileShape::bar(false, num(tail)?),
            "R" => {
                let (h, b) = parse_dims(tail).ok_or_else(bad)?;
                TileShape::rect(h, b)
            }
            _ => Err(bad()),
        }
    }
}

fn solid(height: u32, base: u32) -> Vec<Cell> {
    (0..height as i32).flat_map(|y| (0..base as i32).map(move |x| Cell::new(x, y))).collect()
}

fn parse_dims(s: &str) -> Option<(u32, u32)> {
    let (a, b) = s.split_once('x')?;
    Some((a.parse().ok()?, b.parse().ok()?))
}

/// T1, T2, T3, T4 for arm parameter `n`.
pub fn ribbon_l_tiles(n: u32) -> Result<[TileShape; 4]> {
    Ok([
        TileShape::ribbon_l(TileId::T1, n)?,
        TileShape::ribbon_l(TileId::T2, n)?,
        TileShape::ribbon_l(TileId::T3, n)?,
        TileShape::ribbon_l(TileId::T4, n)?,
    ])
}

/// A nonempty, edge-connected cell set whose anti-diagonal indices `y − x`
/// are pairwise distinct.
pub fn is_ribbon(cells: &[Cell]) -> bool {
    let set: BTreeSet<Cell> = cells.iter().copied().collect();
    if set.is_empty() || !is_connected(&set) {
        return false;
    }
    let mut diagonals = BTreeSet::new();
    set.iter().all(|c| diagonals.insert(c.y - c.x))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TileSetKind {
    Tn,
    TnPlus,
    Bars,
    Custom,
}

/// An ordered list of distinct tile shapes. The order is the branching order
/// of the solver.
#[derive(Clone, Debug)]
pub struct TileSet {
    tiles: Vec<Arc<TileShape>>,
    name: String,
}

impl PartialEq for TileSet {
    fn eq(&self, other: &Self) -> bool {
        self.tiles == other.tiles
    }
}

impl TileSet {
    pub fn new(tiles: Vec<TileShape>, name: impl Into<String>) -> Result<TileSet> {
        let mut seen = BTreeSet::new();
        for t in &tiles {
            if !seen.insert(t.key()) {
                return Err(invalid(format!("tile {} appears twice in the tile set", t.label())));
            }
        }
        Ok(TileSet { tiles: tiles.into_iter().map(Arc::new).collect(), name: name.into() })
    }

    pub fn tiles(&self) -> &[Arc<TileShape>] {
        &self.tiles
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    /// Concatenation, keeping `self` first.
    pub fn union(&self, other: &TileSet) -> Result<TileSet> {
        let tiles = self.tiles.iter().chain(&other.tiles).map(|t| (**t).clone()).collect();
        TileSet::new(tiles, format!("{}+{}", self.name, other.name))
    }

    /// Looks a shape up by its identity and returns the shared copy.
    pub fn get(&self, id: TileId, n: u32) -> Option<&Arc<TileShape>> {
        self.tiles.iter().find(|t| t.id == id && t.n == n)
    }

    /// Finds the tile whose normalized cells equal `cells` (which need not be
    /// normalized), with the offset that places it there.
    pub fn identify(&self, cells: &BTreeSet<Cell>) -> Option<Placement> {
        let min_x = cells.iter().map(|c| c.x).min()?;
        let min_y = cells.iter().map(|c| c.y).min()?;
        let offset = Cell::new(min_x, min_y);
        let normalized: Vec<Cell> = cells.iter().map(|c| c.offset(-min_x, -min_y)).collect();
        let tile = self.tiles.iter().find(|t| t.cells == normalized)?;
        Some(Placement::new(tile.clone(), offset))
    }

    /// gcd of the tile areas; every tileable region has area divisible by it.
    pub fn area_gcd(&self) -> usize {
        self.tiles.iter().map(|t| t.area()).fold(0, gcd)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for TileSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Builds one of the standard tile sets, with optional extra rectangle tiles
/// (height, base) appended.
pub fn make_tileset(kind: TileSetKind, n: u32, extras: &[(u32, u32)]) -> Result<TileSet> {
    let mut tiles: Vec<TileShape> = Vec::new();
    let mut name = match kind {
        TileSetKind::Tn => {
            tiles.extend(ribbon_l_tiles(n)?);
            format!("Tn:{n}")
        }
        TileSetKind::TnPlus => {
            tiles.extend(ribbon_l_tiles(n)?);
            tiles.push(TileShape::square());
            format!("Tn+:{n}")
        }
        TileSetKind::Bars => {
            if n < 2 {
                return Err(invalid(format!("bars need k >= 2, got {n}")));
            }
            tiles.push(TileShape::bar(true, n)?);
            tiles.push(TileShape::bar(false, n)?);
            format!("bars:{n}")
        }
        TileSetKind::Custom => String::new(),
    };
    for &(h, b) in extras {
        tiles.push(TileShape::rect(h, b)?);
        if !name.is_empty() {
            name.push(',');
        }
        name.push_str(&format!("rect:{h}x{b}"));
    }
    TileSet::new(tiles, name)
}

impl FromStr for TileSet {
    type Err = TilingError;

    /// Parses tile set specs such as `Tn:4`, `Tn+:6`, `bars:3`,
    /// `Tn:4,rect:2x3`, and `Tn:4+Tn:6`.
    fn from_str(spec: &str) -> Result<TileSet> {
        let spec = spec.trim();
        let mut parts = Vec::new();
        let mut start = 0;
        let bytes = spec.as_bytes();
        for (i, &b) in bytes.iter().enumerate() {
            let splits = b == b',' || (b == b'+' && bytes.get(i + 1).is_some_and(|c| c.is_ascii_alphabetic()));
            if splits {
                parts.push(&spec[start..i]);
                start = i + 1;
            }
        }
        parts.push(&spec[start..]);

        let bad = |p: &str| invalid(format!("unknown tile spec component {p:?} in {spec:?}"));
        let mut tiles = Vec::new();
        for part in parts {
            let (kind, arg) = part.split_once(':').ok_or_else(|| bad(part))?;
            let num = || arg.parse::<u32>().map_err(|_| bad(part));
            let set = match kind {
                "Tn" => make_tileset(TileSetKind::Tn, num()?, &[])?,
                "Tn+" => make_tileset(TileSetKind::TnPlus, num()?, &[])?,
                "bars" => make_tileset(TileSetKind::Bars, num()?, &[])?,
                "rect" => {
                    let dims = parse_dims(arg).ok_or_else(|| bad(part))?;
                    make_tileset(TileSetKind::Custom, 0, &[dims])?
                }
                _ => return Err(bad(part)),
            };
            tiles.extend(set.tiles.iter().map(|t| (**t).clone()));
        }
        TileSet::new(tiles, spec)
    }
}

/// A tile translated by `offset`. Two placements are equal iff they agree on
/// tile identity and offset.
#[derive(Clone, Debug)]
pub struct Placement {
    tile: Arc<TileShape>,
    offset: Cell,
}

impl Placement {
    pub fn new(tile: Arc<TileShape>, offset: Cell) -> Placement {
        Placement { tile, offset }
    }

    pub fn tile(&self) -> &Arc<TileShape> {
        &self.tile
    }

    pub fn id(&self) -> TileId {
        self.tile.id
    }

    pub fn n(&self) -> u32 {
        self.tile.n
    }

    pub fn offset(&self) -> Cell {
        self.offset
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.tile.cells.iter().map(move |c| c.translate(self.offset))
    }

    /// Mirror image about y = x, expressed with a tile from `ts`; `None` if
    /// the mirrored shape is not in the set.
    pub fn reflect_diag(&self, ts: &TileSet) -> Option<Placement> {
        ts.identify(&self.cells().map(Cell::transpose).collect())
    }

    fn sort_key(&self) -> (Cell, TileId, u32) {
        (self.offset, self.tile.id, self.tile.n)
    }
}

impl PartialEq for Placement {
    fn eq(&self, other: &Self) -> bool {
        self.sort_key() == other.sort_key()
    }
}

impl Eq for Placement {}

impl Hash for Placement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.sort_key().hash(state);
    }
}

/// Canonical order: by offset (y, then x), then by tile identity.
impl Ord for Placement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Placement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.tile.label(), self.offset)
    }
}

/// Every placement of a tile of `ts` that lies inside `r`, ordered by tile,
/// then by offset (y, then x).
pub fn placements(ts: &TileSet, r: &Region) -> Vec<Placement> {
    let mut out = Vec::new();
    for tile in ts.tiles() {
        let Some(&first) = tile.cells.first() else { continue };
        for anchor in r.iter() {
            let offset = Cell::new(anchor.x - first.x, anchor.y - first.y);
            if tile.cells.iter().all(|c| r.contains(c.translate(offset))) {
                out.push(Placement::new(tile.clone(), offset));
            }
        }
    }
    out
}
