//! Reference implementations that share no code with the library: shapes
//! are spelled out from scratch, the enumerator is a plain recursive search
//! over hash sets, and bar tilings are counted by a column profile DP.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

pub type Pt = (i32, i32);
pub type Partition = BTreeSet<BTreeSet<Pt>>;

/// The four ribbon L n-ominoes with `n - 1` arm cells and a foot.
pub fn l_shapes(n: i32) -> Vec<Vec<Pt>> {
    let arm = n - 1;
    let mut v1: Vec<Pt> = (0..arm).map(|j| (0, j)).collect();
    v1.push((1, 0));
    let mut v2: Vec<Pt> = (0..arm).map(|j| (1, j)).collect();
    v2.push((0, arm - 1));
    let mut h1: Vec<Pt> = (0..arm).map(|i| (i, 0)).collect();
    h1.push((0, 1));
    let mut h2: Vec<Pt> = (0..arm).map(|i| (i, 1)).collect();
    h2.push((arm - 1, 0));
    vec![v1, v2, h1, h2]
}

pub fn square() -> Vec<Pt> {
    vec![(0, 0), (1, 0), (0, 1), (1, 1)]
}

pub fn block(h: i32, w: i32) -> Vec<Pt> {
    (0..w).flat_map(|x| (0..h).map(move |y| (x, y))).collect()
}

pub fn bars(k: i32) -> Vec<Vec<Pt>> {
    vec![block(1, k), block(k, 1)]
}

pub fn rect(h: i32, w: i32) -> HashSet<Pt> {
    block(h, w).into_iter().collect()
}

/// Every exact cover of `region` by translates of `shapes`, as partitions of
/// the cell set. Stops after `limit` covers.
pub fn naive_tilings(region: &HashSet<Pt>, shapes: &[Vec<Pt>], limit: usize) -> Vec<Partition> {
    fn go(
        left: &mut HashSet<Pt>,
        shapes: &[Vec<Pt>],
        acc: &mut Vec<BTreeSet<Pt>>,
        out: &mut Vec<Partition>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        let Some(&target) = left.iter().min_by_key(|&&(x, y)| (x, y)) else {
            out.push(acc.iter().cloned().collect());
            return;
        };
        for shape in shapes {
            // any cell of the shape may land on the target
            for &(sx, sy) in shape {
                let (dx, dy) = (target.0 - sx, target.1 - sy);
                let cells: BTreeSet<Pt> = shape.iter().map(|&(x, y)| (x + dx, y + dy)).collect();
                if !cells.iter().all(|c| left.contains(c)) {
                    continue;
                }
                for c in &cells {
                    left.remove(c);
                }
                acc.push(cells.clone());
                go(left, shapes, acc, out, limit);
                acc.pop();
                left.extend(cells);
            }
        }
    }
    let mut left = region.clone();
    let mut out = Vec::new();
    go(&mut left, shapes, &mut Vec::new(), &mut out, limit);
    // distinct shapes may coincide as cell sets, e.g. 1x1 bars
    let unique: BTreeSet<Partition> = out.into_iter().collect();
    unique.into_iter().collect()
}

/// Number of tilings of an `h × w` rectangle by `1 × k` and `k × 1` bars,
/// scanning columns left to right; the profile records, per row, how many
/// more columns a horizontal bar started earlier still occupies.
pub fn bar_count(h: usize, w: usize, k: usize) -> u128 {
    if k == 1 {
        return 1;
    }
    fn fill_column(
        row: usize,
        h: usize,
        k: usize,
        incoming: &[usize],
        next: &mut Vec<usize>,
        out: &mut HashMap<Vec<usize>, u128>,
        ways: u128,
    ) {
        if row == h {
            *out.entry(next.clone()).or_default() += ways;
            return;
        }
        if incoming[row] > 0 {
            next[row] = incoming[row] - 1;
            fill_column(row + 1, h, k, incoming, next, out, ways);
            next[row] = 0;
            return;
        }
        // horizontal bar starting here
        next[row] = k - 1;
        fill_column(row + 1, h, k, incoming, next, out, ways);
        next[row] = 0;
        // vertical bar starting here
        if row + k <= h && (row..row + k).all(|r| incoming[r] == 0) {
            fill_column(row + k, h, k, incoming, next, out, ways);
        }
    }
    let mut states: HashMap<Vec<usize>, u128> = HashMap::from([(vec![0; h], 1)]);
    for _ in 0..w {
        let mut out = HashMap::new();
        for (profile, ways) in &states {
            let mut next = vec![0; h];
            fill_column(0, h, k, profile, &mut next, &mut out, *ways);
        }
        states = out;
    }
    states.get(&vec![0; h]).copied().unwrap_or(0)
}

/// Cell partition of a library tiling.
pub fn partition_of(t: &ribbon_tiling::Tiling) -> Partition {
    t.placements().iter().map(|p| p.cells().map(|c| (c.x, c.y)).collect()).collect()
}

pub fn to_region(cells: &HashSet<Pt>) -> ribbon_tiling::Region {
    ribbon_tiling::Region::new(cells.iter().map(|&(x, y)| ribbon_tiling::Cell::new(x, y)))
}
