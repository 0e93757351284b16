mod common;

use std::collections::{BTreeSet, HashSet};

use common::{bar_count, bars, l_shapes, naive_tilings, partition_of, rect, square, to_region, Partition, Pt};
use proptest::prelude::*;
use ribbon_tiling::constructions::pattern_tiling;
use ribbon_tiling::flipgraph::{apply_move, local_move_sites};
use ribbon_tiling::geometry::rect_region;
use ribbon_tiling::pattern::{follows_rectangular_pattern, to_bar_tiling};
use ribbon_tiling::render::render_text;
use ribbon_tiling::solver::validate_tiling;
use ribbon_tiling::{Cell, Region, Solver, TileSet, Tiling};

const ALL: usize = 1 << 20;

fn shapes_for(spec: &str) -> Vec<Vec<Pt>> {
    match spec {
        "Tn:3" => l_shapes(3),
        "Tn:4" => l_shapes(4),
        "Tn:5" => l_shapes(5),
        "Tn:6" => l_shapes(6),
        "Tn+:4" => {
            let mut v = l_shapes(4);
            v.push(square());
            v
        }
        "bars:2" => bars(2),
        "bars:3" => bars(3),
        "bars:4" => bars(4),
        _ => unreachable!("{spec}"),
    }
}

const SPECS: [&str; 8] = ["Tn:3", "Tn:4", "Tn:5", "Tn:6", "Tn+:4", "bars:2", "bars:3", "bars:4"];

fn solver_partitions(region: &Region, spec: &str) -> Vec<Partition> {
    let ts: TileSet = spec.parse().unwrap();
    let (tilings, stats) = Solver::new(region, &ts).enumerate(ALL);
    assert!(!stats.truncated);
    tilings.iter().map(partition_of).collect()
}

fn agree_on(cells: &HashSet<Pt>, spec: &str) {
    let region = to_region(cells);
    let ours: BTreeSet<Partition> = solver_partitions(&region, spec).into_iter().collect();
    let theirs: BTreeSet<Partition> = naive_tilings(cells, &shapes_for(spec), ALL).into_iter().collect();
    assert_eq!(ours.len(), theirs.len(), "{spec} on {:?}", region.bounds());
    assert!(ours == theirs, "{spec}: different tilings");
    let ts: TileSet = spec.parse().unwrap();
    let (count, _) = Solver::new(&region, &ts).count(u64::MAX).unwrap();
    assert_eq!(count as usize, theirs.len());
}

#[test]
fn small_rectangles_match_naive_enumeration() {
    for spec in SPECS {
        for h in 1..=12 {
            for w in 1..=12 {
                if h * w <= 36 {
                    agree_on(&rect(h, w), spec);
                }
            }
        }
    }
}

#[test]
fn spot_counts() {
    for (h, w, expected) in [(4, 4, 2), (4, 6, 3), (8, 8, 36)] {
        assert_eq!(naive_tilings(&rect(h, w), &l_shapes(4), ALL).len(), expected);
        assert_eq!(bar_count(h as usize / 2, w as usize / 2, 2), expected as u128);
        let ts: TileSet = "Tn:4".parse().unwrap();
        let (count, _) = Solver::new(&rect_region(h, w, Cell::ORIGIN).unwrap(), &ts).count(1000).unwrap();
        assert_eq!(count, expected as u64);
    }
}

#[test]
fn bar_dp_matches_naive() {
    for k in 2..=4 {
        for h in 1..=6 {
            for w in 1..=6 {
                let naive = naive_tilings(&rect(h, w), &bars(k), ALL).len() as u128;
                assert_eq!(bar_count(h as usize, w as usize, k as usize), naive, "{h}x{w} k={k}");
            }
        }
    }
}

#[test]
fn two_rectangle_tilings_differ_by_one_move() {
    let ts: TileSet = "Tn:4".parse().unwrap();
    let (tilings, _) = Solver::new(&rect_region(4, 4, Cell::ORIGIN).unwrap(), &ts).enumerate(10);
    let sites = local_move_sites(&tilings[0]).unwrap();
    assert_eq!(sites.len(), 1);
    assert_eq!(apply_move(&tilings[0], &sites[0]).unwrap(), tilings[1]);
}

/// Union of tiles dropped at random spots of a small box, skipping overlaps.
fn dropped_region(spec: &'static str) -> impl Strategy<Value = HashSet<Pt>> {
    let shapes = shapes_for(spec);
    let count = shapes.len();
    prop::collection::vec((0..count, 0..7i32, 0..7i32), 1..7).prop_map(move |drops| {
        let mut cells = HashSet::new();
        for (i, dx, dy) in drops {
            let moved: Vec<Pt> = shapes[i].iter().map(|&(x, y)| (x + dx, y + dy)).collect();
            if moved.iter().all(|c| !cells.contains(c)) && cells.len() + moved.len() <= 32 {
                cells.extend(moved);
            }
        }
        cells
    })
}

fn half_layout(a: i32, b: i32, k: u32, pick: usize) -> Tiling {
    let ts: TileSet = format!("bars:{k}").parse().unwrap();
    let (layouts, _) = Solver::new(&rect_region(a / 2, b / 2, Cell::ORIGIN).unwrap(), &ts).enumerate(64);
    layouts[pick % layouts.len()].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dropped_regions_match_naive(cells in dropped_region("Tn+:4")) {
        agree_on(&cells, "Tn+:4");
        agree_on(&cells, "Tn:4");
    }

    #[test]
    fn dropped_regions_match_naive_odd(cells in dropped_region("Tn:3")) {
        agree_on(&cells, "Tn:3");
        agree_on(&cells, "bars:3");
    }

    #[test]
    fn enumerated_tilings_are_valid_and_distinct(cells in dropped_region("Tn+:4")) {
        let region = to_region(&cells);
        let ts: TileSet = "Tn+:4".parse().unwrap();
        let (tilings, _) = Solver::new(&region, &ts).enumerate(ALL);
        for t in &tilings {
            prop_assert!(validate_tiling(t).is_valid());
            let again = Tiling::parse(&t.to_text(), Some(region.clone())).unwrap();
            prop_assert_eq!(&again, t);
        }
        let distinct: BTreeSet<String> = tilings.iter().map(|t| t.to_text()).collect();
        prop_assert_eq!(distinct.len(), tilings.len());
    }

    #[test]
    fn diagonal_reflection_preserves_counts(cells in dropped_region("Tn:4")) {
        let region = to_region(&cells);
        let ts: TileSet = "Tn:4".parse().unwrap();
        let (a, _) = Solver::new(&region, &ts).count(u64::MAX).unwrap();
        let (b, _) = Solver::new(&region.reflect_diag(), &ts).count(u64::MAX).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn translation_preserves_counts(cells in dropped_region("Tn+:4"), dx in -9i32..9, dy in -9i32..9) {
        let region = to_region(&cells);
        let ts: TileSet = "Tn+:4".parse().unwrap();
        let (a, _) = Solver::new(&region, &ts).count(u64::MAX).unwrap();
        let (b, _) = Solver::new(&region.translate(Cell::new(dx, dy)), &ts).count(u64::MAX).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn inflated_layouts_follow_the_pattern(half_a in 1..5i32, half_b in 1..5i32, pick in 0usize..64, wide in any::<bool>()) {
        let n = if wide { 6 } else { 4 };
        let (a, b) = (2 * half_a * (n as i32 / 2), 2 * half_b);
        let layout = half_layout(a, b, n / 2, pick);
        let t = pattern_tiling(a, b, n, &layout).unwrap();
        prop_assert!(validate_tiling(&t).is_valid());
        let verdict = follows_rectangular_pattern(&t);
        prop_assert!(verdict.follows);
        let back = to_bar_tiling(&verdict.decomposition.unwrap()).unwrap();
        prop_assert_eq!(back.to_text(), layout.to_text());
    }

    #[test]
    fn moves_revert(half_a in 1..4i32, half_b in 1..4i32, pick in 0usize..64) {
        let (a, b) = (4 * half_a, 2 * half_b);
        let t = pattern_tiling(a, b, 4, &half_layout(a, b, 2, pick)).unwrap();
        for site in local_move_sites(&t).unwrap() {
            let moved = apply_move(&t, &site).unwrap();
            prop_assert!(validate_tiling(&moved).is_valid());
            prop_assert!(follows_rectangular_pattern(&moved).follows);
            prop_assert!(site.corner.x % 2 == 0 && site.corner.y % 2 == 0);
            let back = local_move_sites(&moved).unwrap().into_iter().find(|s| s.corner == site.corner && s.n == site.n).unwrap();
            prop_assert_eq!(apply_move(&moved, &back).unwrap(), t.clone());
        }
    }

    #[test]
    fn text_render_covers_exactly_the_region(cells in dropped_region("Tn+:4")) {
        let region = to_region(&cells);
        let ts: TileSet = "Tn+:4".parse().unwrap();
        if let Some(t) = Solver::new(&region, &ts).find() {
            let text = render_text(&t);
            let b = region.bounds().unwrap();
            let mut lettered = BTreeSet::new();
            for (row, line) in text.lines().enumerate() {
                for (col, ch) in line.chars().enumerate() {
                    if ch.is_ascii_alphabetic() {
                        lettered.insert(Cell::new(b.min.x + col as i32, b.max.y - row as i32));
                    }
                }
            }
            prop_assert_eq!(&lettered, region.cells());
            prop_assert_eq!(text, render_text(&t));
        }
    }
}
