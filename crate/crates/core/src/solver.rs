//! Exact-cover search over a region and a tile set.
//!
//! The search always branches on the lowest, then leftmost, uncovered cell and
//! tries the placements whose first cell (in the same order) is that cell, in
//! tile-set order. Every cell before the branching cell is already covered, so
//! no other placement can cover it. Regions of at most 128 cells run on a
//! `u128` occupancy mask; larger ones on a word-vector bitset.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::ControlFlow;
use std::sync::Arc;

use crate::error::{Result, TilingError};
use crate::geometry::{Cell, Region};
use crate::tiles::{placements, Placement, TileSet, TileShape};

/// An exact cover of a region, placements kept in canonical order.
#[derive(Clone, Debug)]
pub struct Tiling {
    region: Arc<Region>,
    placements: Vec<Placement>,
}

impl PartialEq for Tiling {
    fn eq(&self, other: &Self) -> bool {
        self.placements == other.placements && self.region == other.region
    }
}

impl Eq for Tiling {}

impl Tiling {
    /// Wraps placements without checking them; see [`validate_tiling`].
    pub fn new(region: Arc<Region>, mut placements: Vec<Placement>) -> Tiling {
        placements.sort();
        Tiling { region, placements }
    }

    /// A tiling whose region is the union of its placements.
    pub fn from_placements(placements: Vec<Placement>) -> Tiling {
        let region = Region::new(placements.iter().flat_map(|p| p.cells().collect::<Vec<_>>()));
        Tiling::new(Arc::new(region), placements)
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn region_arc(&self) -> &Arc<Region> {
        &self.region
    }

    pub fn placements(&self) -> &[Placement] {
        &self.placements
    }

    pub fn len(&self) -> usize {
        self.placements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placements.is_empty()
    }

    pub fn contains(&self, p: &Placement) -> bool {
        self.placements.binary_search(p).is_ok()
    }

    /// Canonical text form: one `TOKEN x y` line per placement.
    pub fn to_text(&self) -> String {
        self.placements.iter().map(|p| format!("{} {} {}\n", p.tile().label(), p.offset().x, p.offset().y)).collect()
    }

    /// Parses the text form. Without an explicit region, the region is the
    /// union of the placements.
    pub fn parse(text: &str, region: Option<Region>) -> Result<Tiling> {
        let mut shapes: BTreeMap<String, Arc<TileShape>> = BTreeMap::new();
        let mut out = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |m: &str| TilingError::Parse { line: i + 1, message: m.to_string() };
            let words: Vec<&str> = line.split_whitespace().collect();
            let [token, x, y] = words[..] else {
                return Err(err("expected `TILE x y`"));
            };
            let x: i32 = x.parse().map_err(|_| err("bad x coordinate"))?;
            let y: i32 = y.parse().map_err(|_| err("bad y coordinate"))?;
            let shape = match shapes.get(token) {
                Some(s) => s.clone(),
                None => {
                    let s = Arc::new(token.parse::<TileShape>().map_err(|e| err(&e.to_string()))?);
                    shapes.insert(token.to_string(), s.clone());
                    s
                }
            };
            out.push(Placement::new(shape, Cell::new(x, y)));
        }
        Ok(match region {
            Some(r) => Tiling::new(Arc::new(r), out),
            None => Tiling::from_placements(out),
        })
    }

    /// Mirror image about y = x with tiles from `ts`; `None` if some mirrored
    /// piece is not in the set.
    pub fn reflect_diag(&self, ts: &TileSet) -> Option<Tiling> {
        let placements = self.placements.iter().map(|p| p.reflect_diag(ts)).collect::<Option<Vec<_>>>()?;
        Some(Tiling::new(Arc::new(self.region.reflect_diag()), placements))
    }
}

impl fmt::Display for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct SolveStats {
    /// Search-tree nodes visited (one per branching cell).
    pub nodes: u64,
    pub solutions: u64,
    /// An enumeration or count limit was hit.
    pub truncated: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct SolveOptions {
    /// Drop a tiling when its mirror image about y = x (same region, tiles
    /// from the same set) sorts before it. Exploratory only: counts under
    /// this flag are not raw tiling counts.
    pub dedup_diagonal: bool,
}

trait CellMask: Clone + Eq + std::hash::Hash {
    fn empty(len: usize) -> Self;
    fn set(&mut self, i: usize);
    fn intersects(&self, other: &Self) -> bool;
    fn toggle(&mut self, other: &Self);
    fn first_clear(&self, len: usize) -> Option<usize>;
}

impl CellMask for u128 {
    fn empty(_: usize) -> Self {
        0
    }

    fn set(&mut self, i: usize) {
        *self |= 1 << i;
    }

    fn intersects(&self, other: &Self) -> bool {
        self & other != 0
    }

    fn toggle(&mut self, other: &Self) {
        *self ^= other;
    }

    fn first_clear(&self, len: usize) -> Option<usize> {
        let i = self.trailing_ones() as usize;
        (i < len).then_some(i)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct WideMask(Vec<u64>);

impl CellMask for WideMask {
    fn empty(len: usize) -> Self {
        WideMask(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersects(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).any(|(a, b)| a & b != 0)
    }

    fn toggle(&mut self, other: &Self) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a ^= b;
        }
    }

    fn first_clear(&self, len: usize) -> Option<usize> {
        let (w, word) = self.0.iter().enumerate().find(|(_, w)| **w != u64::MAX)?;
        let i = w * 64 + word.trailing_ones() as usize;
        (i < len).then_some(i)
    }
}

struct Kernel<M> {
    len: usize,
    /// Candidates per branching cell: (occupancy mask, index into `placements`).
    candidates: Vec<Vec<(M, usize)>>,
}

impl<M: CellMask> Kernel<M> {
    fn build(region: &Region, placements: &[Placement]) -> Self {
        let index: BTreeMap<Cell, usize> = region.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let len = index.len();
        let mut candidates: Vec<Vec<(M, usize)>> = vec![Vec::new(); len];
        for (pi, p) in placements.iter().enumerate() {
            let mut mask = M::empty(len);
            let mut first = usize::MAX;
            for c in p.cells() {
                let i = index[&c];
                mask.set(i);
                first = first.min(i);
            }
            // coinciding shapes (the n = 3 tiles pair up) cover the same cells
            if !candidates[first].iter().any(|(m, _)| *m == mask) {
                candidates[first].push((mask, pi));
            }
        }
        Kernel { len, candidates }
    }

    /// Depth-first search from `covered`. Returns whether any tiling was
    /// reached below this node; masks with no completion go into `dead`.
    fn search(&self, state: &mut SearchState<'_, M>, covered: &mut M) -> ControlFlow<(), bool> {
        let Some(cell) = covered.first_clear(self.len) else {
            (state.visit)(&state.stack)?;
            return ControlFlow::Continue(true);
        };
        if state.dead.contains(covered) {
            return ControlFlow::Continue(false);
        }
        state.stats.nodes += 1;
        let mut any = false;
        for (mask, pi) in &self.candidates[cell] {
            if covered.intersects(mask) {
                continue;
            }
            covered.toggle(mask);
            state.stack.push(*pi);
            let flow = self.search(state, covered);
            state.stack.pop();
            covered.toggle(mask);
            any |= flow?;
        }
        if !any && state.dead.len() < DEAD_STATE_LIMIT {
            state.dead.insert(covered.clone());
        }
        ControlFlow::Continue(any)
    }

    fn run(&self, stats: &mut SolveStats, visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) {
        let mut covered = M::empty(self.len);
        let mut state = SearchState { stack: Vec::new(), stats, dead: HashSet::new(), visit };
        let _ = self.search(&mut state, &mut covered);
    }
}

/// Bound on memoized dead masks; past it the search continues unmemoized.
const DEAD_STATE_LIMIT: usize = 1 << 22;

struct SearchState<'a, M> {
    stack: Vec<usize>,
    stats: &'a mut SolveStats,
    dead: HashSet<M>,
    visit: &'a mut dyn FnMut(&[usize]) -> ControlFlow<()>,
}

/// Precomputed search problem for one (region, tile set) pair.
pub struct Solver {
    region: Arc<Region>,
    tileset: TileSet,
    placements: Vec<Placement>,
    options: SolveOptions,
}

const NARROW_LIMIT: usize = 128;

impl Solver {
    pub fn new(region: &Region, tileset: &TileSet) -> Solver {
        Solver::with_region(Arc::new(region.clone()), tileset)
    }

    pub fn with_region(region: Arc<Region>, tileset: &TileSet) -> Solver {
        let placements = placements(tileset, &region);
        Solver { region, tileset: tileset.clone(), placements, options: SolveOptions::default() }
    }

    pub fn options(mut self, options: SolveOptions) -> Solver {
        self.options = options;
        self
    }

    pub fn region(&self) -> &Arc<Region> {
        &self.region
    }

    /// False when the region area rules out any tiling.
    fn area_admissible(&self) -> bool {
        let g = self.tileset.area_gcd();
        self.region.is_empty() || (g != 0 && self.region.area().is_multiple_of(g))
    }

    /// Calls `visit` on each tiling in search order until it breaks.
    fn walk(&self, stats: &mut SolveStats, visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) {
        if !self.area_admissible() {
            return;
        }
        if self.region.area() <= NARROW_LIMIT {
            Kernel::<u128>::build(&self.region, &self.placements).run(stats, visit);
        } else {
            Kernel::<WideMask>::build(&self.region, &self.placements).run(stats, visit);
        }
    }

    fn materialize(&self, indices: &[usize]) -> Tiling {
        Tiling::new(self.region.clone(), indices.iter().map(|&i| self.placements[i].clone()).collect())
    }

    fn keep(&self, t: &Tiling, symmetric: bool) -> bool {
        if !symmetric {
            return true;
        }
        match t.reflect_diag(&self.tileset) {
            Some(mirror) => t.placements() <= mirror.placements(),
            None => true,
        }
    }

    fn symmetric(&self) -> bool {
        self.options.dedup_diagonal && self.region.reflect_diag() == *self.region
    }

    /// The first tiling in search order, if any.
    pub fn find(&self) -> Option<Tiling> {
        self.enumerate(1).0.into_iter().next()
    }

    /// Counts tilings, stopping once the count would exceed `cap`; in that
    /// case the result is `cap` with `truncated` set.
    pub fn count(&self, cap: u64) -> Result<(u64, SolveStats)> {
        if cap < 1 {
            return Err(TilingError::InvalidArgument("count cap must be at least 1".into()));
        }
        let symmetric = self.symmetric();
        let mut stats = SolveStats::default();
        let mut count: u64 = 0;
        let mut overflow = false;
        let mut truncated = false;
        self.walk(&mut stats, &mut |stack| {
            if symmetric && !self.keep(&self.materialize(stack), true) {
                return ControlFlow::Continue(());
            }
            if count == cap {
                truncated = true;
                return ControlFlow::Break(());
            }
            match count.checked_add(1) {
                Some(c) => {
                    count = c;
                    ControlFlow::Continue(())
                }
                None => {
                    overflow = true;
                    ControlFlow::Break(())
                }
            }
        });
        if overflow {
            return Err(TilingError::Overflow);
        }
        stats.truncated = truncated;
        stats.solutions = count;
        Ok((count, stats))
    }

    /// Streams up to `limit` tilings in search order. Returns the stats;
    /// `truncated` is set if more tilings exist.
    pub fn for_each(&self, limit: usize, mut sink: impl FnMut(Tiling)) -> SolveStats {
        let symmetric = self.symmetric();
        let mut stats = SolveStats::default();
        let mut emitted = 0usize;
        let mut truncated = false;
        self.walk(&mut stats, &mut |stack| {
            let t = self.materialize(stack);
            if !self.keep(&t, symmetric) {
                return ControlFlow::Continue(());
            }
            if emitted == limit {
                truncated = true;
                return ControlFlow::Break(());
            }
            emitted += 1;
            sink(t);
            ControlFlow::Continue(())
        });
        stats.solutions = emitted as u64;
        stats.truncated = truncated;
        stats
    }

    pub fn enumerate(&self, limit: usize) -> (Vec<Tiling>, SolveStats) {
        let mut out = Vec::new();
        let stats = self.for_each(limit, |t| out.push(t));
        (out, stats)
    }
}

pub fn find_tiling(r: &Region, ts: &TileSet) -> Option<Tiling> {
    Solver::new(r, ts).find()
}

pub fn count_tilings(r: &Region, ts: &TileSet, cap: u64) -> Result<(u64, SolveStats)> {
    Solver::new(r, ts).count(cap)
}

pub fn enumerate_tilings(r: &Region, ts: &TileSet, limit: usize) -> Result<(Vec<Tiling>, SolveStats)> {
    if limit < 1 {
        return Err(TilingError::InvalidArgument("enumeration limit must be at least 1".into()));
    }
    Ok(Solver::new(r, ts).enumerate(limit))
}

/// Outcome of checking a proposed tiling against its region.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Validation {
    /// Cells covered more than once (each listed once, in cell order).
    pub overlaps: Vec<Cell>,
    /// Region cells no placement covers.
    pub uncovered: Vec<Cell>,
    /// Covered cells outside the region.
    pub outside: Vec<Cell>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.overlaps.is_empty() && self.uncovered.is_empty() && self.outside.is_empty()
    }

    /// One-line description of the first violation found.
    pub fn first_problem(&self) -> Option<String> {
        if let Some(c) = self.overlaps.first() {
            Some(format!("overlap at {c}"))
        } else if let Some(c) = self.outside.first() {
            Some(format!("cell {c} lies outside the region"))
        } else {
            self.uncovered.first().map(|c| format!("uncovered cell {c}"))
        }
    }
}

pub fn validate_tiling(t: &Tiling) -> Validation {
    let mut seen: HashSet<Cell> = HashSet::new();
    let mut overlaps = Vec::new();
    let mut outside = Vec::new();
    for p in t.placements() {
        for c in p.cells() {
            if !seen.insert(c) {
                overlaps.push(c);
            }
            if !t.region().contains(c) {
                outside.push(c);
            }
        }
    }
    overlaps.sort();
    overlaps.dedup();
    outside.sort();
    outside.dedup();
    let uncovered = t.region().iter().filter(|c| !seen.contains(c)).collect();
    Validation { overlaps, uncovered, outside }
}
