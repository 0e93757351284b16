//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Three operations: browse the tilings of a rectangle, build the flip graph
//! of a rectangle, and draw the explicit constructions. Each has a plain Rust
//! form (tested natively) and a `#[wasm_bindgen]` wrapper.

use ribbon_tiling::constructions::{mixed_6x10_tiling, odd_rect_tiling};
use ribbon_tiling::flipgraph::{flip_connected, local_move_sites, two_tiling_region};
use ribbon_tiling::geometry::rect_region;
use ribbon_tiling::pattern::follows_rectangular_pattern;
use ribbon_tiling::render::{render_svg, render_text};
use ribbon_tiling::{Cell, Solver, TileSet, Tiling, TilingError};
use wasm_bindgen::prelude::*;

/// Largest board side the page accepts.
pub const MAX_SIDE: i32 = 24;
/// Tilings counted before the page reports "at least".
pub const COUNT_CAP: u64 = 100_000;

/// One tiling of a rectangle, with context for the page.
#[wasm_bindgen]
#[derive(Clone, Debug)]
pub struct View {
    svg: String,
    text: String,
    tiling: String,
    pattern: String,
    index: usize,
    count: u64,
    count_capped: bool,
    move_sites: usize,
}

#[wasm_bindgen]
impl View {
    #[wasm_bindgen(getter)]
    pub fn svg(&self) -> String {
        self.svg.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn text(&self) -> String {
        self.text.clone()
    }

    /// `TILE x y` lines.
    #[wasm_bindgen(getter)]
    pub fn tiling(&self) -> String {
        self.tiling.clone()
    }

    /// `PATTERN yes|no` report.
    #[wasm_bindgen(getter)]
    pub fn pattern(&self) -> String {
        self.pattern.clone()
    }

    /// Position of the shown tiling in canonical order.
    #[wasm_bindgen(getter)]
    pub fn index(&self) -> usize {
        self.index
    }

    /// Number of tilings, or [`COUNT_CAP`] if `count_capped`.
    #[wasm_bindgen(getter)]
    pub fn count(&self) -> f64 {
        self.count as f64
    }

    #[wasm_bindgen(getter, js_name = countCapped)]
    pub fn count_capped(&self) -> bool {
        self.count_capped
    }

    #[wasm_bindgen(getter, js_name = moveSites)]
    pub fn move_sites(&self) -> usize {
        self.move_sites
    }
}

impl View {
    fn of(t: &Tiling, index: usize, count: u64, count_capped: bool) -> View {
        View {
            svg: render_svg(t),
            text: render_text(t),
            tiling: t.to_text(),
            pattern: follows_rectangular_pattern(t).report(),
            index,
            count,
            count_capped,
            move_sites: local_move_sites(t).map_or(0, |s| s.len()),
        }
    }
}

fn board(height: i32, base: i32) -> Result<ribbon_tiling::Region, String> {
    if !(1..=MAX_SIDE).contains(&height) || !(1..=MAX_SIDE).contains(&base) {
        return Err(format!("sides must be between 1 and {MAX_SIDE}"));
    }
    rect_region(height, base, Cell::ORIGIN).map_err(|e| e.to_string())
}

fn tiles(spec: &str) -> Result<TileSet, String> {
    spec.trim().parse().map_err(|e: TilingError| e.to_string())
}

/// The `index`-th tiling (canonical order, wrapping around) of a
/// `height × base` rectangle. `Ok(None)` if there is none.
pub fn explore(height: i32, base: i32, tile_spec: &str, index: usize) -> Result<Option<View>, String> {
    let (region, ts) = (board(height, base)?, tiles(tile_spec)?);
    let solver = Solver::new(&region, &ts);
    let (count, stats) = solver.count(COUNT_CAP).map_err(|e| e.to_string())?;
    if count == 0 {
        return Ok(None);
    }
    let index = index % count as usize;
    let (mut tilings, _) = solver.enumerate(index + 1);
    let t = tilings.pop().expect("index is below the count");
    Ok(Some(View::of(&t, index, count, stats.truncated)))
}

/// Flip graph summary of a rectangle (`CONNECTED`, `VERTICES`, `EDGES`,
/// `COMPONENTS` lines).
pub fn flip_summary(height: i32, base: i32, tile_spec: &str, limit: usize) -> Result<String, String> {
    let (region, ts) = (board(height, base)?, tiles(tile_spec)?);
    match flip_connected(&region, &ts, limit) {
        Ok((_, graph)) => Ok(graph.summary()),
        Err(TilingError::Truncated { limit }) => Err(format!("more than {limit} tilings")),
        Err(e) => Err(e.to_string()),
    }
}

/// One of `odd-rect` (with `n` odd), `mixed`, or `two-tiling` (with `n` even).
pub fn fixture(name: &str, n: u32) -> Result<View, String> {
    let t = match name {
        "odd-rect" => odd_rect_tiling(n).map_err(|e| e.to_string())?,
        "mixed" => mixed_6x10_tiling(),
        "two-tiling" => two_tiling_region(n, 0).map_err(|e| e.to_string())?.1,
        other => return Err(format!("unknown fixture `{other}`")),
    };
    Ok(View::of(&t, 0, 1, false))
}

#[wasm_bindgen(js_name = explore)]
pub fn explore_js(height: i32, base: i32, tile_spec: &str, index: usize) -> Result<Option<View>, JsError> {
    explore(height, base, tile_spec, index).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = flipSummary)]
pub fn flip_summary_js(height: i32, base: i32, tile_spec: &str, limit: usize) -> Result<String, JsError> {
    flip_summary(height, base, tile_spec, limit).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = fixture)]
pub fn fixture_js(name: &str, n: u32) -> Result<View, JsError> {
    fixture(name, n).map_err(|e| JsError::new(&e))
}
