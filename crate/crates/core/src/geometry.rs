//! Lattice primitives: cells, finite regions, and the diagonal reflection.
//!
//! A cell `(x, y)` names the unit square `[x, x+1] × [y, y+1]`; x grows to the
//! right and y grows upward. Rectangles are always given as (height, base).

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{invalid, Result, TilingError};
use crate::tiles::TileShape;

/// A unit square of the lattice, named by its lower-left corner.
///
/// Cells order row-major from the bottom: first by `y`, then by `x`. This is
/// the "lowest, then leftmost" order the solver branches in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Cell {
    pub x: i32,
    pub y: i32,
}

impl Cell {
    pub const ORIGIN: Cell = Cell { x: 0, y: 0 };

    pub const fn new(x: i32, y: i32) -> Self {
        Cell { x, y }
    }

    pub const fn offset(self, dx: i32, dy: i32) -> Self {
        Cell { x: self.x + dx, y: self.y + dy }
    }

    pub const fn translate(self, by: Cell) -> Self {
        self.offset(by.x, by.y)
    }

    /// Reflection about the line y = x.
    pub const fn transpose(self) -> Self {
        Cell { x: self.y, y: self.x }
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A finite set of cells with an optional label.
///
/// Equality is set equality of the cells; the label is ignored.
#[derive(Clone, Debug, Default)]
pub struct Region {
    cells: BTreeSet<Cell>,
    name: Option<String>,
}

impl PartialEq for Region {
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells
    }
}

impl Eq for Region {}

/// Inclusive bounding box of a non-empty cell set.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Bounds {
    pub min: Cell,
    pub max: Cell,
}

impl Bounds {
    pub fn height(&self) -> u32 {
        (self.max.y - self.min.y + 1) as u32
    }

    pub fn base(&self) -> u32 {
        (self.max.x - self.min.x + 1) as u32
    }
}

impl Region {
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Self {
        Region { cells: cells.into_iter().collect(), name: None }
    }

    pub fn empty() -> Self {
        Region::default()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn iter(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn area(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    pub fn bounds(&self) -> Option<Bounds> {
        let first = self.cells.iter().next()?;
        let mut min = *first;
        let mut max = *first;
        for c in &self.cells {
            min.x = min.x.min(c.x);
            min.y = min.y.min(c.y);
            max.x = max.x.max(c.x);
            max.y = max.y.max(c.y);
        }
        Some(Bounds { min, max })
    }

    /// Lower-left corner of the bounding box; the origin for an empty region.
    pub fn anchor(&self) -> Cell {
        self.bounds().map_or(Cell::ORIGIN, |b| b.min)
    }

    pub fn translate(&self, by: Cell) -> Region {
        Region { cells: self.cells.iter().map(|c| c.translate(by)).collect(), name: self.name.clone() }
    }

    /// The mirror image about y = x.
    pub fn reflect_diag(&self) -> Region {
        Region { cells: reflect_diag(&self.cells), name: self.name.clone() }
    }

    pub fn union(&self, other: &Region) -> Region {
        Region::new(self.cells.union(&other.cells).copied())
    }

    pub fn difference(&self, other: &Region) -> Region {
        Region::new(self.cells.difference(&other.cells).copied())
    }

    /// True if the cells form one edge-connected component (vacuously for
    /// the empty region).
    pub fn is_connected(&self) -> bool {
        is_connected(&self.cells)
    }

    /// Serializes in the `grid` text format anchored at the bounding box.
    pub fn to_grid_text(&self) -> String {
        let Some(b) = self.bounds() else {
            return "cells\n".to_string();
        };
        let mut out = format!("grid {} {} {} {}\n", b.height(), b.base(), b.min.x, b.min.y);
        for y in (b.min.y..=b.max.y).rev() {
            for x in b.min.x..=b.max.x {
                out.push(if self.contains(Cell::new(x, y)) { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }

    /// Serializes in the `cells` text format, one `x y` pair per line.
    pub fn to_cells_text(&self) -> String {
        let mut out = String::from("cells\n");
        for c in &self.cells {
            let _ = writeln!(out, "{} {}", c.x, c.y);
        }
        out
    }

    /// Parses either text format. Duplicate cells in the `cells` format are
    /// dropped silently; use [`region_from_cells`] to see them.
    pub fn parse(text: &str) -> Result<Region> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end()))
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with("//"));
        let (line_no, header) =
            lines.next().ok_or(TilingError::Parse { line: 1, message: "empty region text".into() })?;
        let mut words = header.split_whitespace();
        match words.next() {
            Some("cells") => {
                let mut cells = Vec::new();
                for (no, line) in lines {
                    let nums = parse_ints(line, no)?;
                    if nums.len() != 2 {
                        return Err(parse_err(no, "expected `x y`"));
                    }
                    cells.push(Cell::new(nums[0], nums[1]));
                }
                Ok(Region::new(cells))
            }
            Some("grid") => {
                let rest: Vec<&str> = words.collect();
                let nums = parse_ints(&rest.join(" "), line_no)?;
                let [rows, cols, x0, y0] = nums[..] else {
                    return Err(parse_err(line_no, "expected `grid <rows> <cols> <x0> <y0>`"));
                };
                if rows < 0 || cols < 0 {
                    return Err(parse_err(line_no, "negative grid dimension"));
                }
                let body: Vec<(usize, &str)> = lines.collect();
                if body.len() != rows as usize {
                    return Err(parse_err(line_no, &format!("expected {rows} rows, found {}", body.len())));
                }
                let mut cells = Vec::new();
                for (r, (no, line)) in body.iter().enumerate() {
                    let line = line.trim();
                    if line.chars().count() != cols as usize {
                        return Err(parse_err(*no, &format!("expected {cols} columns")));
                    }
                    let y = y0 + rows - 1 - r as i32;
                    for (i, ch) in line.chars().enumerate() {
                        match ch {
                            '#' => cells.push(Cell::new(x0 + i as i32, y)),
                            '.' => {}
                            other => return Err(parse_err(*no, &format!("unexpected character {other:?}"))),
                        }
                    }
                }
                Ok(Region::new(cells))
            }
            _ => Err(parse_err(line_no, "expected `grid` or `cells` header")),
        }
    }
}

impl FromStr for Region {
    type Err = TilingError;

    fn from_str(s: &str) -> Result<Self> {
        Region::parse(s)
    }
}

impl FromIterator<Cell> for Region {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        Region::new(iter)
    }
}

fn parse_err(line: usize, message: &str) -> TilingError {
    TilingError::Parse { line, message: message.to_string() }
}

fn parse_ints(s: &str, line: usize) -> Result<Vec<i32>> {
    s.split_whitespace()
        .map(|w| w.parse::<i32>().map_err(|_| parse_err(line, &format!("not an integer: {w:?}"))))
        .collect()
}

/// The `a × b` rectangle (height `a`, base `b`) with lower-left cell `anchor`.
pub fn rect_region(height: i32, base: i32, anchor: Cell) -> Result<Region> {
    if height < 1 || base < 1 {
        return Err(invalid(format!("rectangle dimensions must be positive, got {height}x{base}")));
    }
    let cells = (0..height).flat_map(|j| (0..base).map(move |i| anchor.offset(i, j)));
    Ok(Region::new(cells).with_name(format!("rect:{height}x{base}")))
}

/// Replaces every cell of `shape` by a `k × k` block.
pub fn k_copy_region(shape: &TileShape, k: i32) -> Result<Region> {
    if k < 1 {
        return Err(invalid(format!("scale factor must be at least 1, got {k}")));
    }
    let cells = shape
        .cells()
        .iter()
        .flat_map(|c| (0..k).flat_map(move |j| (0..k).map(move |i| Cell::new(k * c.x + i, k * c.y + j))));
    Ok(Region::new(cells).with_name(format!("kcopy:{}x{k}", shape.label())))
}

pub fn reflect_diag<'a>(cells: impl IntoIterator<Item = &'a Cell>) -> BTreeSet<Cell> {
    cells.into_iter().map(|c| c.transpose()).collect()
}

/// Builds a region from a list that may repeat cells; repeated cells are
/// returned alongside (each extra occurrence once, in input order).
pub fn region_from_cells(cells: &[Cell]) -> (Region, Vec<Cell>) {
    let mut seen = BTreeSet::new();
    let mut duplicates = Vec::new();
    for &c in cells {
        if !seen.insert(c) {
            duplicates.push(c);
        }
    }
    (Region { cells: seen, name: None }, duplicates)
}

pub(crate) fn is_connected(cells: &BTreeSet<Cell>) -> bool {
    let Some(&start) = cells.iter().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for n in [c.offset(1, 0), c.offset(-1, 0), c.offset(0, 1), c.offset(0, -1)] {
            if cells.contains(&n) && seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    seen.len() == cells.len()
}
