//! Text and SVG drawings of tilings.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::geometry::Cell;
use crate::solver::Tiling;
use crate::tiles::TileId;

const LETTERS: &[u8] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

/// Letter of the `i`-th placement in canonical order.
pub fn letter(i: usize) -> char {
    LETTERS[i % LETTERS.len()] as char
}

/// One letter per placement, rows top first. Cells of the bounding box that
/// are outside the region print as `.`, uncovered region cells as `?`.
pub fn render_text(t: &Tiling) -> String {
    let Some(b) = t.region().bounds() else {
        return String::new();
    };
    let mut owner: BTreeMap<Cell, char> = BTreeMap::new();
    for (i, p) in t.placements().iter().enumerate() {
        for c in p.cells() {
            owner.insert(c, letter(i));
        }
    }
    let mut out = String::new();
    for y in (b.min.y..=b.max.y).rev() {
        for x in b.min.x..=b.max.x {
            let c = Cell::new(x, y);
            out.push(match owner.get(&c) {
                Some(&ch) if t.region().contains(c) => ch,
                _ if t.region().contains(c) => '?',
                _ => '.',
            });
        }
        out.push('\n');
    }
    out
}

fn fill_for(id: TileId) -> &'static str {
    match id {
        TileId::T1 => "#e76f51",
        TileId::T2 => "#f4a261",
        TileId::T3 => "#2a9d8f",
        TileId::T4 => "#8ab17d",
        TileId::T5 => "#9c89b8",
        TileId::BarH | TileId::BarV => "#e9c46a",
        TileId::RectExtra { .. } => "#adb5bd",
    }
}

/// Boundary loops of a cell set, counter-clockwise in lattice coordinates,
/// with collinear vertices dropped.
pub fn outline(cells: &BTreeSet<Cell>) -> Vec<Vec<(i32, i32)>> {
    let mut edges: BTreeMap<(i32, i32), Vec<(i32, i32)>> = BTreeMap::new();
    let mut all = BTreeSet::new();
    for c in cells {
        let (x, y) = (c.x, c.y);
        for e in
            [((x, y), (x + 1, y)), ((x + 1, y), (x + 1, y + 1)), ((x + 1, y + 1), (x, y + 1)), ((x, y + 1), (x, y))]
        {
            all.insert(e);
        }
    }
    for &(a, b) in &all {
        if !all.contains(&(b, a)) {
            edges.entry(a).or_default().push(b);
        }
    }
    let mut loops = Vec::new();
    while let Some((&start, _)) = edges.iter().find(|(_, v)| !v.is_empty()) {
        let mut points = vec![start];
        let mut at = start;
        loop {
            let next = edges.get_mut(&at).and_then(|v| v.pop()).expect("boundary edges form closed loops");
            if next == start {
                break;
            }
            points.push(next);
            at = next;
        }
        loops.push(drop_collinear(points));
        edges.retain(|_, v| !v.is_empty());
    }
    loops
}

fn drop_collinear(points: Vec<(i32, i32)>) -> Vec<(i32, i32)> {
    let n = points.len();
    (0..n)
        .filter(|&i| {
            let (p, q, r) = (points[(i + n - 1) % n], points[i], points[(i + 1) % n]);
            (q.0 - p.0) * (r.1 - q.1) != (q.1 - p.1) * (r.0 - q.0)
        })
        .map(|i| points[i])
        .collect()
}

const CELL_PX: i32 = 24;
const MARGIN_PX: i32 = 4;

/// SVG 1.1 document with one filled polygon per placement.
pub fn render_svg(t: &Tiling) -> String {
    let (min, max) = match t.region().bounds() {
        Some(b) => (b.min, b.max),
        None => (Cell::ORIGIN, Cell::new(-1, -1)),
    };
    let width = (max.x - min.x + 1) * CELL_PX + 2 * MARGIN_PX;
    let height = (max.y - min.y + 1) * CELL_PX + 2 * MARGIN_PX;
    let px = |(x, y): (i32, i32)| ((x - min.x) * CELL_PX + MARGIN_PX, (max.y + 1 - y) * CELL_PX + MARGIN_PX);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#);
    for (i, p) in t.placements().iter().enumerate() {
        let cells: BTreeSet<Cell> = p.cells().collect();
        let loops = outline(&cells);
        let fill = fill_for(p.id());
        let title = format!("{} {}", letter(i), p);
        if let [single] = &loops[..] {
            let pts: Vec<String> = single.iter().map(|&v| px(v)).map(|(x, y)| format!("{x},{y}")).collect();
            let _ = writeln!(
                out,
                r##"<polygon points="{}" fill="{fill}" stroke="#222" stroke-width="2"><title>{title}</title></polygon>"##,
                pts.join(" ")
            );
        } else {
            let mut d = String::new();
            for l in &loops {
                for (j, &v) in l.iter().enumerate() {
                    let (x, y) = px(v);
                    let _ = write!(d, "{}{x},{y} ", if j == 0 { "M" } else { "L" });
                }
                d.push_str("Z ");
            }
            let _ = writeln!(
                out,
                r##"<path d="{}" fill="{fill}" fill-rule="evenodd" stroke="#222" stroke-width="2"><title>{title}</title></path>"##,
                d.trim_end()
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
