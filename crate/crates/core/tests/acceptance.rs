//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{bar_count, l_shapes, naive_tilings, rect};
use ribbon_tiling::constructions::{bar_tileable, mixed_6x10_tiling, odd_rect_tiling, rect_tileable_tn_plus};
use ribbon_tiling::flipgraph::{apply_move, flip_connected, local_move_sites, two_tiling_region, MoveSite};
use ribbon_tiling::geometry::{k_copy_region, rect_region};
use ribbon_tiling::pattern::follows_rectangular_pattern;
use ribbon_tiling::solver::validate_tiling;
use ribbon_tiling::tiles::ribbon_l_tiles;
use ribbon_tiling::verify::{self, extra_rectangle_witness, Suite};
use ribbon_tiling::{Cell, Region, Solver, TileSet};

const MAX_SIDE: i32 = 12;
const MAX_AREA: i32 = 128;
const RIGIDITY_CAP: usize = 500;
const FLIP_LIMIT: u64 = 200;

struct Outcome {
    pass: bool,
    detail: String,
}

/// Id, description, time limit in seconds, check.
type Criterion = (u32, &'static str, Option<u64>, fn() -> Outcome);

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn board(a: i32, b: i32) -> Region {
    rect_region(a, b, Cell::ORIGIN).unwrap()
}

fn tileset(spec: &str) -> TileSet {
    spec.parse().unwrap()
}

fn sweep() -> impl Iterator<Item = (i32, i32)> {
    (1..=MAX_SIDE).flat_map(|a| (1..=MAX_SIDE).map(move |b| (a, b))).filter(|(a, b)| a * b <= MAX_AREA)
}

fn classification() -> Outcome {
    let mut checked = 0;
    let mut wrong = Vec::new();
    for n in [4, 6] {
        let ts = tileset(&format!("Tn:{n}"));
        for (a, b) in sweep() {
            let predicted = a % 2 == 0 && b % 2 == 0 && (a % n == 0 || b % n == 0);
            let observed = Solver::new(&board(a, b), &ts).find().is_some();
            checked += 1;
            if predicted != observed {
                wrong.push(format!("n={n} {a}x{b}"));
            }
        }
    }
    outcome(wrong.is_empty(), format!("{checked} rectangles, {} disagreements {wrong:?}", wrong.len()))
}

fn rigidity() -> Outcome {
    let (mut tilings, mut bad, mut capped) = (0, 0, Vec::new());
    for n in [4, 6] {
        let ts = tileset(&format!("Tn:{n}"));
        for (a, b) in sweep() {
            let stats = Solver::new(&board(a, b), &ts).for_each(RIGIDITY_CAP, |t| {
                tilings += 1;
                if !follows_rectangular_pattern(&t).follows {
                    bad += 1;
                }
            });
            if stats.truncated {
                capped.push(format!("n={n} {a}x{b}"));
            }
        }
    }
    outcome(
        bad == 0,
        format!(
            "{tilings} tilings, {bad} off-pattern; cap {RIGIDITY_CAP} reached on {} rectangles {capped:?}",
            capped.len()
        ),
    )
}

fn tn_plus_rectangles() -> Outcome {
    let ts = tileset("Tn+:4");
    let (mut wrong, mut tilings, mut bad) = (Vec::new(), 0, 0);
    for a in 1..=8 {
        for b in 1..=8 {
            let mut found = false;
            Solver::new(&board(a, b), &ts).for_each(RIGIDITY_CAP, |t| {
                found = true;
                tilings += 1;
                if !follows_rectangular_pattern(&t).follows {
                    bad += 1;
                }
            });
            if found != (a % 2 == 0 && b % 2 == 0) || found != rect_tileable_tn_plus(a, b) {
                wrong.push(format!("{a}x{b}"));
            }
        }
    }
    outcome(
        wrong.is_empty() && bad == 0,
        format!("64 rectangles, {} disagreements, {tilings} tilings, {bad} off-pattern", wrong.len()),
    )
}

fn k_copy() -> Outcome {
    let ts = tileset("Tn+:4");
    let mut parts = Vec::new();
    let mut pass = true;
    for shape in ribbon_l_tiles(4).unwrap() {
        let region = k_copy_region(&shape, 3).unwrap();
        let (count, _) = Solver::new(&region, &ts).count(u64::MAX).unwrap();
        pass &= region.area() == 36 && count == 0;
        parts.push(format!("{} area={} tilings={count}", shape.label(), region.area()));
    }
    outcome(pass, parts.join(", "))
}

fn bars() -> Outcome {
    let mut wrong = Vec::new();
    for k in 2..=4 {
        let ts = tileset(&format!("bars:{k}"));
        for a in 1..=10 {
            for b in 1..=10 {
                let observed = Solver::new(&board(a, b), &ts).find().is_some();
                if observed != (a % k == 0 || b % k == 0) || observed != bar_tileable(k, a, b) {
                    wrong.push(format!("k={k} {a}x{b}"));
                }
            }
        }
    }
    outcome(wrong.is_empty(), format!("300 rectangles, {} disagreements {wrong:?}", wrong.len()))
}

fn bijection() -> Outcome {
    let mut spot = Vec::new();
    let mut pass = true;
    let ts4 = tileset("Tn:4");
    for (a, b, expected) in [(4, 4, 2u64), (4, 6, 3), (8, 8, 36)] {
        let naive = naive_tilings(&rect(a, b), &l_shapes(4), 1 << 16).len() as u64;
        let (ours, _) = Solver::new(&board(a, b), &ts4).count(u64::MAX).unwrap();
        pass &= naive == expected && ours == expected;
        spot.push(format!("{a}x{b}={ours}"));
    }
    let mut compared = 0;
    let mut wrong = Vec::new();
    for n in [4usize, 6] {
        let ts = tileset(&format!("Tn:{n}"));
        for a in (2..=MAX_SIDE).step_by(2) {
            for b in (2..=MAX_SIDE).step_by(2) {
                let (ours, stats) = Solver::new(&board(a, b), &ts).count(u64::MAX).unwrap();
                let bars = bar_count(a as usize / 2, b as usize / 2, n / 2);
                compared += 1;
                if stats.truncated || ours as u128 != bars {
                    wrong.push(format!("n={n} {a}x{b}: {ours} vs {bars}"));
                }
            }
        }
    }
    pass &= wrong.is_empty();
    outcome(pass, format!("{compared} rectangles, {} mismatches {wrong:?}; spot {}", wrong.len(), spot.join(" ")))
}

fn connectivity() -> Outcome {
    let ts = tileset("Tn:4");
    let (mut graphs, mut edges, mut skipped) = (0, 0, 0);
    let mut problems = Vec::new();
    for (a, b) in sweep() {
        let region = board(a, b);
        let solver = Solver::new(&region, &ts);
        let (count, stats) = solver.count(FLIP_LIMIT).unwrap();
        if count == 0 {
            continue;
        }
        if stats.truncated {
            skipped += 1;
            continue;
        }
        let (tilings, _) = solver.enumerate(FLIP_LIMIT as usize);
        let (connected, graph) = flip_connected(&region, &ts, FLIP_LIMIT as usize).unwrap();
        graphs += 1;
        if !connected {
            problems.push(format!("{a}x{b} disconnected"));
        }
        for e in &graph.edges {
            edges += 1;
            let there = apply_move(&tilings[e.a], &e.site).unwrap();
            let back = MoveSite { before: e.site.before.flipped(), ..e.site };
            if there.to_text() != graph.vertices[e.b] || apply_move(&there, &back).unwrap() != tilings[e.a] {
                problems.push(format!("{a}x{b} edge at {}", e.site));
            }
        }
    }
    outcome(
        problems.is_empty() && graphs > 0,
        format!("{graphs} graphs, {edges} edges, {skipped} rectangles over {FLIP_LIMIT} tilings skipped {problems:?}"),
    )
}

fn two_tilings() -> Outcome {
    let ts = tileset("Tn:6");
    let mut parts = Vec::new();
    let mut pass = true;
    for extra in 0..=2 {
        let (region, _) = two_tiling_region(6, extra).unwrap();
        let (tilings, _) = Solver::new(&region, &ts).enumerate(16);
        let disjoint = tilings.len() == 2 && tilings[0].placements().iter().all(|p| !tilings[1].contains(p));
        let sites: usize = tilings.iter().map(|t| local_move_sites(t).map_or(0, |s| s.len())).sum();
        pass &= tilings.len() == 2 && disjoint && sites == 0;
        parts.push(format!(
            "e={extra} area={} tilings={} disjoint={disjoint} sites={sites}",
            region.area(),
            tilings.len()
        ));
    }
    outcome(pass, parts.join(", "))
}

fn fixtures() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for n in [3, 5, 7] {
        let t = odd_rect_tiling(n).unwrap();
        let b = t.region().bounds().unwrap();
        let ok = validate_tiling(&t).is_valid() && b.height() == 3 * n && b.base() == 3 * n + 1;
        pass &= ok;
        parts.push(format!("odd n={n} {}x{} valid={ok}", b.height(), b.base()));
    }
    let mixed = mixed_6x10_tiling();
    let mixed_ok = validate_tiling(&mixed).is_valid() && !follows_rectangular_pattern(&mixed).follows;
    pass &= mixed_ok;
    parts.push(format!("mixed 6x10 valid and off-pattern={mixed_ok}"));
    match extra_rectangle_witness(60).unwrap() {
        Some((a, b, t)) => {
            let ok = validate_tiling(&t).is_valid() && !follows_rectangular_pattern(&t).follows;
            pass &= ok && a * b <= 60;
            parts.push(format!("Tn:4,rect:2x3 off-pattern tiling of {a}x{b}"));
        }
        None => {
            pass = false;
            parts.push("no off-pattern tiling with Tn:4,rect:2x3 up to area 60".into());
        }
    }
    outcome(pass, parts.join(", "))
}

fn determinism() -> Outcome {
    let params = Suite::All.default_params();
    let first = verify::transcript(&verify::run(Suite::All, params).unwrap());
    let second = verify::transcript(&verify::run(Suite::All, params).unwrap());
    let summary = first.lines().last().unwrap_or("").to_string();
    outcome(
        first == second && !first.is_empty(),
        format!("{} bytes, identical={}; {summary}", first.len(), first == second),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "rectangle classification by Tn, n in {4,6}", Some(60), classification),
        (2, "every enumerated rectangle tiling follows the pattern", None, rigidity),
        (3, "Tn+ (n=4) classification and pattern for sides <= 8", Some(30), tn_plus_rectangles),
        (4, "3-copy of the n=4 L has no Tn+ tiling", Some(10), k_copy),
        (5, "bar tileability, k in {2,3,4}", Some(30), bars),
        (6, "tiling counts equal half-scale bar counts", None, bijection),
        (7, "flip graphs connected and moves involutive", Some(60), connectivity),
        (8, "two-tiling family", Some(60), two_tilings),
        (9, "explicit constructions", Some(30), fixtures),
        (10, "verify all transcript is deterministic", None, determinism),
    ];
    let mut failed = 0;
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|s| elapsed <= Duration::from_secs(s));
        let pass = result.pass && in_time;
        if !pass {
            failed += 1;
        }
        let budget = limit.map_or(String::new(), |s| format!(" limit {s}s"));
        println!(
            "{} criterion {id}: {name} [{:.2}s{budget}] {}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            result.detail
        );
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
