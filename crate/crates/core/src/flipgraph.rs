//! Square moves and flip graphs.
//!
//! A move takes an `n × n` square covered by `n/2` parallel V blocks and
//! re-covers it with `n/2` H blocks, or the reverse. The bar analogue turns a
//! `k × k` square of `k` parallel bars. The flip graph has one vertex per
//! tiling and one edge per move.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{invalid, Result, TilingError};
use crate::geometry::{Cell, Region};
use crate::pattern::{follows_rectangular_pattern, Block, BlockKind};
use crate::solver::{Solver, Tiling};
use crate::tiles::{Placement, TileId, TileSet, TileShape};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Orientation {
    V,
    H,
}

impl Orientation {
    pub fn flipped(self) -> Orientation {
        match self {
            Orientation::V => Orientation::H,
            Orientation::H => Orientation::V,
        }
    }
}

/// A square whose cover by parallel strips can be rotated.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MoveSite {
    pub corner: Cell,
    /// Orientation of the strips before the move.
    pub before: Orientation,
    /// Side of the square.
    pub n: u32,
}

impl fmt::Display for MoveSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}@{}", self.before, self.n, self.corner)
    }
}

/// Strips of a square of side `n`, `thickness` wide each.
fn strip_corners(site: &MoveSite, orientation: Orientation, thickness: i32) -> impl Iterator<Item = Cell> {
    let count = site.n as i32 / thickness;
    let corner = site.corner;
    (0..count).map(move |i| match orientation {
        Orientation::V => corner.offset(thickness * i, 0),
        Orientation::H => corner.offset(0, thickness * i),
    })
}

fn sites_from_strips(strips: &BTreeSet<(Orientation, Cell)>, n: u32, thickness: i32) -> Vec<MoveSite> {
    let mut sites: Vec<MoveSite> = strips
        .iter()
        .map(|&(o, c)| MoveSite { corner: c, before: o, n })
        .filter(|s| strip_corners(s, s.before, thickness).all(|c| strips.contains(&(s.before, c))))
        .collect();
    sites.sort();
    sites
}

fn pattern_blocks(t: &Tiling) -> Result<(Vec<Block>, u32)> {
    let verdict = follows_rectangular_pattern(t);
    let Some(d) = verdict.decomposition else {
        return Err(TilingError::Precondition(format!(
            "tiling does not follow the rectangular pattern: {}",
            verdict.witness.unwrap_or_default()
        )));
    };
    let lengths: BTreeSet<u32> = d.blocks().iter().filter(|b| b.kind != BlockKind::S).map(|b| b.n).collect();
    if lengths.len() > 1 {
        return Err(TilingError::Precondition(format!("tiling mixes block lengths {lengths:?}")));
    }
    let n = lengths.into_iter().next().unwrap_or(0);
    if !n.is_multiple_of(2) {
        return Err(TilingError::Precondition(format!("square moves need even n, got {n}")));
    }
    Ok((d.blocks().to_vec(), n))
}

/// All corners whose `n × n` square is exactly `n/2` parallel blocks of the
/// tiling's pattern decomposition.
pub fn local_move_sites(t: &Tiling) -> Result<Vec<MoveSite>> {
    let (blocks, n) = pattern_blocks(t)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let strips = blocks
        .iter()
        .filter_map(|b| match b.kind {
            BlockKind::V => Some((Orientation::V, b.corner)),
            BlockKind::H => Some((Orientation::H, b.corner)),
            BlockKind::S => None,
        })
        .collect();
    Ok(sites_from_strips(&strips, n, 2))
}

fn site_placements(site: &MoveSite, orientation: Orientation) -> Result<Vec<Placement>> {
    let kind = match orientation {
        Orientation::V => BlockKind::V,
        Orientation::H => BlockKind::H,
    };
    let mut out = Vec::new();
    for c in strip_corners(site, orientation, 2) {
        out.extend(Block::new(kind, c, site.n).fill()?);
    }
    Ok(out)
}

/// Rotates the blocks of `site`, refilling each new block with its L pair.
pub fn apply_move(t: &Tiling, site: &MoveSite) -> Result<Tiling> {
    let removed = site_placements(site, site.before)?;
    if !removed.iter().all(|p| t.contains(p)) {
        return Err(TilingError::Precondition(format!("{site} is not a move site of this tiling")));
    }
    let added = site_placements(site, site.before.flipped())?;
    Ok(swap(t, &removed, added))
}

fn swap(t: &Tiling, removed: &[Placement], added: Vec<Placement>) -> Tiling {
    let gone: BTreeSet<&Placement> = removed.iter().collect();
    let mut placements: Vec<Placement> = t.placements().iter().filter(|p| !gone.contains(p)).cloned().collect();
    placements.extend(added);
    Tiling::new(t.region_arc().clone(), placements)
}

/// Squares of side `k` covered by `k` parallel bars of length `k`.
pub fn bar_move_sites(t: &Tiling) -> Vec<MoveSite> {
    let mut by_len: HashMap<u32, BTreeSet<(Orientation, Cell)>> = HashMap::new();
    for p in t.placements() {
        let o = match p.id() {
            TileId::BarV => Orientation::V,
            TileId::BarH => Orientation::H,
            _ => continue,
        };
        by_len.entry(p.n()).or_default().insert((o, p.offset()));
    }
    let mut sites: Vec<MoveSite> =
        by_len.into_iter().flat_map(|(k, strips)| sites_from_strips(&strips, k, 1)).collect();
    sites.sort();
    sites
}

fn bar_site_placements(site: &MoveSite, orientation: Orientation) -> Result<Vec<Placement>> {
    let shape = Arc::new(TileShape::bar(orientation == Orientation::H, site.n)?);
    Ok(strip_corners(site, orientation, 1).map(|c| Placement::new(shape.clone(), c)).collect())
}

pub fn apply_bar_move(t: &Tiling, site: &MoveSite) -> Result<Tiling> {
    let removed = bar_site_placements(site, site.before)?;
    if !removed.iter().all(|p| t.contains(p)) {
        return Err(TilingError::Precondition(format!("{site} is not a bar move site of this tiling")));
    }
    let added = bar_site_placements(site, site.before.flipped())?;
    Ok(swap(t, &removed, added))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FlipEdge {
    pub a: usize,
    pub b: usize,
    /// The move as seen from vertex `a`.
    pub site: MoveSite,
}

/// Undirected graph on canonical tiling serializations.
#[derive(Clone, Debug, Default)]
pub struct FlipGraph {
    pub vertices: Vec<String>,
    pub edges: Vec<FlipEdge>,
}

impl FlipGraph {
    /// Builds the graph over explicit tilings. `sites` lists the moves at a
    /// tiling and `apply` performs one. A move leading outside the vertex set
    /// is an error.
    pub fn build(
        tilings: &[Tiling],
        sites: impl Fn(&Tiling) -> Vec<MoveSite>,
        apply: impl Fn(&Tiling, &MoveSite) -> Result<Tiling>,
    ) -> Result<FlipGraph> {
        let vertices: Vec<String> = tilings.iter().map(Tiling::to_text).collect();
        let index: HashMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        if index.len() != vertices.len() {
            return Err(invalid("duplicate tilings in vertex list"));
        }
        let mut edges = Vec::new();
        for (a, t) in tilings.iter().enumerate() {
            for site in sites(t) {
                let next = apply(t, &site)?.to_text();
                let b = *index
                    .get(next.as_str())
                    .ok_or_else(|| TilingError::Precondition(format!("move {site} leaves the enumerated tilings")))?;
                if a < b {
                    edges.push(FlipEdge { a, b, site });
                }
            }
        }
        Ok(FlipGraph { vertices, edges })
    }

    /// Component sizes, largest first.
    pub fn components(&self) -> Vec<usize> {
        let mut adjacency = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adjacency[e.a].push(e.b);
            adjacency[e.b].push(e.a);
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut sizes = Vec::new();
        for start in 0..self.vertices.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut size = 0;
            while let Some(v) = queue.pop_front() {
                size += 1;
                for &w in &adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            sizes.push(size);
        }
        sizes.sort_by(|a, b| b.cmp(a));
        sizes
    }

    /// One component, or at most one vertex.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// `CONNECTED`, `VERTICES`, `EDGES`, and `COMPONENTS` lines.
    pub fn summary(&self) -> String {
        let sizes: Vec<String> = self.components().iter().map(ToString::to_string).collect();
        format!(
            "CONNECTED {}\nVERTICES {}\nEDGES {}\nCOMPONENTS {}\n",
            if self.is_connected() { "yes" } else { "no" },
            self.vertices.len(),
            self.edges.len(),
            sizes.join(" ")
        )
    }

    /// `a b site` per line.
    pub fn edge_list(&self) -> String {
        self.edges.iter().map(|e| format!("{} {} {}\n", e.a, e.b, e.site)).collect()
    }
}

fn enumerate_all(r: &Region, ts: &TileSet, limit: usize) -> Result<Vec<Tiling>> {
    if limit < 1 {
        return Err(invalid("enumeration limit must be at least 1"));
    }
    let (tilings, stats) = Solver::new(r, ts).enumerate(limit);
    if stats.truncated {
        return Err(TilingError::Truncated { limit });
    }
    Ok(tilings)
}

/// Flip graph of all tilings of `r` by `ts` under the square move. Tilings
/// that are not pattern tilings have no move sites. Refuses when there are
/// more than `limit` tilings.
pub fn flip_connected(r: &Region, ts: &TileSet, limit: usize) -> Result<(bool, FlipGraph)> {
    let tilings = enumerate_all(r, ts, limit)?;
    let graph = FlipGraph::build(&tilings, |t| local_move_sites(t).unwrap_or_default(), apply_move)?;
    Ok((graph.is_connected(), graph))
}

/// Flip graph of the tilings of `r` by `k`-bars under the `k × k` move.
pub fn bar_flip_graph(r: &Region, k: u32, limit: usize) -> Result<FlipGraph> {
    let ts: TileSet = crate::tiles::make_tileset(crate::tiles::TileSetKind::Bars, k, &[])?;
    let tilings = enumerate_all(r, &ts, limit)?;
    FlipGraph::build(&tilings, bar_move_sites, apply_bar_move)
}

/// The two-tiling region for even `n` with `extra` inserted staircase steps,
/// and its first tiling: `n/2 - 1` H blocks at the bottom, a staircase of
/// `K = n/2 + extra` T3 tiles and `K` T2 tiles, and an H block on top,
/// shifted up by `n - 2`.
pub fn two_tiling_region(n: u32, extra: u32) -> Result<(Region, Tiling)> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(invalid(format!("the two-tiling family needs even n >= 4, got {n}")));
    }
    let m = n as i32;
    let steps = (n / 2 + extra) as i32;
    let shift = m - 2;
    let t3 = Arc::new(TileShape::ribbon_l(TileId::T3, n)?);
    let t2 = Arc::new(TileShape::ribbon_l(TileId::T2, n)?);
    let mut placements = Vec::new();
    for i in 0..(m / 2 - 1) {
        placements.extend(Block::new(BlockKind::H, Cell::new(0, -shift + 2 * i), n).fill()?);
    }
    for k in 0..steps {
        placements.push(Placement::new(t3.clone(), Cell::new(k, k)));
        placements.push(Placement::new(t2.clone(), Cell::new(m - 1 + k, -shift + k)));
    }
    placements.extend(Block::new(BlockKind::H, Cell::new(steps, steps), n).fill()?);
    let placements: Vec<Placement> =
        placements.into_iter().map(|p| Placement::new(p.tile().clone(), p.offset().offset(0, shift))).collect();
    let tiling = Tiling::from_placements(placements);
    let region = tiling.region().clone().with_name(format!("twotiling:{n}:{extra}"));
    Ok((region, tiling))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::pattern_tiling;
    use crate::geometry::rect_region;
    use crate::solver::{count_tilings, enumerate_tilings, validate_tiling};

    fn all_vertical(a: i32, b: i32, n: u32) -> Tiling {
        let k = n as i32 / 2;
        let mut text = String::new();
        for u in 0..b / 2 {
            for v in (0..a / 2).step_by(k as usize) {
                text.push_str(&format!("BV:{k} {u} {v}\n"));
            }
        }
        let layout = Tiling::parse(&text, Some(rect_region(a / 2, b / 2, Cell::ORIGIN).unwrap())).unwrap();
        pattern_tiling(a, b, n, &layout).unwrap()
    }

    #[test]
    fn sites_on_vertical_tilings() {
        let t = all_vertical(4, 4, 4);
        assert_eq!(local_move_sites(&t).unwrap(), [MoveSite { corner: Cell::ORIGIN, before: Orientation::V, n: 4 }]);
        let t = all_vertical(4, 8, 4);
        let corners: Vec<Cell> = local_move_sites(&t).unwrap().iter().map(|s| s.corner).collect();
        assert_eq!(corners, [Cell::new(0, 0), Cell::new(2, 0), Cell::new(4, 0)]);
    }

    #[test]
    fn move_rotates_and_reverts() {
        let t = all_vertical(4, 4, 4);
        let site = local_move_sites(&t).unwrap()[0];
        let rotated = apply_move(&t, &site).unwrap();
        assert_eq!(rotated.to_text(), "T3:4 0 0\nT4:4 1 0\nT3:4 0 2\nT4:4 1 2\n");
        let back_site = MoveSite { before: Orientation::H, ..site };
        assert_eq!(local_move_sites(&rotated).unwrap(), [back_site]);
        assert_eq!(apply_move(&rotated, &back_site).unwrap(), t);
        assert!(apply_move(&rotated, &site).is_err());
    }

    #[test]
    fn disjoint_moves_commute() {
        let t = all_vertical(8, 8, 4);
        let s1 = MoveSite { corner: Cell::new(0, 0), before: Orientation::V, n: 4 };
        let s2 = MoveSite { corner: Cell::new(4, 4), before: Orientation::V, n: 4 };
        let sites = local_move_sites(&t).unwrap();
        assert!(sites.contains(&s1) && sites.contains(&s2));
        let a = apply_move(&apply_move(&t, &s1).unwrap(), &s2).unwrap();
        let b = apply_move(&apply_move(&t, &s2).unwrap(), &s1).unwrap();
        assert_eq!(a, b);
        assert!(validate_tiling(&a).is_valid());
        assert_ne!(a, t);
    }

    #[test]
    fn sites_need_a_pattern_tiling() {
        let t = crate::constructions::odd_rect_tiling(3).unwrap();
        assert!(matches!(local_move_sites(&t), Err(TilingError::Precondition(_))));
    }

    #[test]
    fn rectangles_are_connected() {
        let tn: TileSet = "Tn:4".parse().unwrap();
        let (connected, g) = flip_connected(&rect_region(4, 8, Cell::ORIGIN).unwrap(), &tn, 100).unwrap();
        assert!(connected);
        assert_eq!(g.vertices.len(), 5);
        let (connected, g) = flip_connected(&rect_region(8, 8, Cell::ORIGIN).unwrap(), &tn, 100).unwrap();
        assert!(connected);
        assert_eq!(g.vertices.len(), 36);
        assert!(g.summary().starts_with("CONNECTED yes\nVERTICES 36\n"));
    }

    #[test]
    fn truncated_enumeration_is_refused() {
        let tn: TileSet = "Tn:4".parse().unwrap();
        let err = flip_connected(&rect_region(8, 8, Cell::ORIGIN).unwrap(), &tn, 10).unwrap_err();
        assert_eq!(err, TilingError::Truncated { limit: 10 });
    }

    #[test]
    fn two_tiling_family() {
        let (region, first) = two_tiling_region(6, 0).unwrap();
        assert_eq!(region.area(), 72);
        assert!(validate_tiling(&first).is_valid());
        assert!(first.contains(&Placement::new(Arc::new("T3:6".parse().unwrap()), Cell::new(0, 4))));
        assert!(first.contains(&Placement::new(Arc::new("T2:6".parse().unwrap()), Cell::new(5, 0))));
        assert_eq!(local_move_sites(&first).unwrap_or_default(), []);

        let tn: TileSet = "Tn:6".parse().unwrap();
        let (tilings, _) = enumerate_tilings(&region, &tn, 10).unwrap();
        assert_eq!(tilings.len(), 2);
        let second = tilings.iter().find(|t| **t != first).unwrap();
        assert!(second.placements().iter().all(|p| !first.contains(p)));

        let (connected, g) = flip_connected(&region, &tn, 10).unwrap();
        assert!(!connected);
        assert_eq!((g.vertices.len(), g.edges.len()), (2, 0));

        let (region, _) = two_tiling_region(6, 1).unwrap();
        assert_eq!(region.area(), 84);
        assert_eq!(count_tilings(&region, &tn, 10).unwrap().0, 2);
        assert!(two_tiling_region(5, 0).is_err());
    }

    #[test]
    fn bar_moves() {
        let g = bar_flip_graph(&rect_region(2, 4, Cell::ORIGIN).unwrap(), 2, 100).unwrap();
        assert_eq!(g.vertices.len(), 5);
        assert!(g.is_connected());
        // ||||, =||, |=|, ||=, == : the all-vertical tiling has three flips,
        // =|| and ||= one more each to ==.
        assert_eq!(g.edges.len(), 5);
    }
}
