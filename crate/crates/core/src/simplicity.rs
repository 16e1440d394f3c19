//! Exact simplicity tests for closed polygons on a general-position set.
//!
//! Two interchangeable implementations sit behind [`SimplicityTest`]: a
//! Shamos–Hoey sweep (`O(n log n)` comparisons) used by the candidate
//! pipeline, and the all-pairs check it is validated against.

use std::cmp::Ordering;

use crate::point::Point;
use crate::pointset::PointSet;
use crate::predicates::{cross, segments_cross_properly, segments_intersect};

pub trait SimplicityTest: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    /// `order` must be a permutation of the set's indices.
    fn is_simple(&self, set: &PointSet, order: &[usize]) -> bool;
}

#[derive(Debug, Default, Clone, Copy)]
pub struct Sweep;

#[derive(Debug, Default, Clone, Copy)]
pub struct Pairwise;

impl SimplicityTest for Sweep {
    fn name(&self) -> &'static str {
        "sweep"
    }

    fn description(&self) -> &'static str {
        "Shamos-Hoey sweep with exact orientation predicates"
    }

    fn is_simple(&self, set: &PointSet, order: &[usize]) -> bool {
        sweep_is_simple(set.points(), order)
    }
}

impl SimplicityTest for Pairwise {
    fn name(&self) -> &'static str {
        "pairwise"
    }

    fn description(&self) -> &'static str {
        "exact test of every edge pair, O(n^2)"
    }

    fn is_simple(&self, set: &PointSet, order: &[usize]) -> bool {
        pairwise_is_simple(set.points(), order)
    }
}

/// Default checker.
pub fn is_simple(set: &PointSet, order: &[usize]) -> bool {
    sweep_is_simple(set.points(), order)
}

/// All-pairs test. Handles arbitrary input: non-adjacent edges must not meet
/// at all, adjacent edges only at their shared vertex.
pub fn pairwise_is_simple(points: &[Point], order: &[usize]) -> bool {
    let n = order.len();
    if n < 3 {
        return false;
    }
    let p = |k: usize| points[order[k % n]];
    for i in 0..n {
        let (a, b) = (p(i), p(i + 1));
        if a == b {
            return false;
        }
        for j in i + 1..n {
            let (c, d) = (p(j), p(j + 1));
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                // shared vertex only: the far endpoints must not fold back onto the other edge
                let (shared, other_a, other_b) = if j == i + 1 { (b, a, d) } else { (a, b, c) };
                if cross(shared, other_a, other_b) == 0 {
                    let da = (other_a.x - shared.x, other_a.y - shared.y);
                    let db = (other_b.x - shared.x, other_b.y - shared.y);
                    if (da.0 as i128) * (db.0 as i128) + (da.1 as i128) * (db.1 as i128) > 0 {
                        return false;
                    }
                }
                if n == 3 && cross(a, b, c) == 0 {
                    return false;
                }
            } else if segments_intersect(a, b, c, d) {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Copy)]
struct Seg {
    left: Point,
    right: Point,
}

/// True when `t` lies above the segment `s` that starts at the current event
/// point `s.left`. Both are in the sweep status at that point.
fn above(t: &Seg, s: &Seg) -> bool {
    let o = cross(t.left, t.right, s.left);
    if o != 0 {
        return o < 0;
    }
    // shared left endpoint: order by direction
    cross(t.left, t.right, s.right) < 0
}

/// Shamos–Hoey sweep. Assumes the points are in general position, so
/// non-adjacent edges can only fail by crossing properly.
pub fn sweep_is_simple(points: &[Point], order: &[usize]) -> bool {
    let n = order.len();
    if n < 3 {
        return false;
    }
    if n == 3 {
        return cross(points[order[0]], points[order[1]], points[order[2]]) != 0;
    }
    let segs: Vec<Seg> = (0..n)
        .map(|i| {
            let (a, b) = (points[order[i]], points[order[(i + 1) % n]]);
            if a.lex_cmp(&b) == Ordering::Less {
                Seg { left: a, right: b }
            } else {
                Seg { left: b, right: a }
            }
        })
        .collect();
    let cross_pair = |a: usize, b: usize| -> bool {
        let (s, t) = (&segs[a], &segs[b]);
        segments_cross_properly(s.left, s.right, t.left, t.right)
    };

    // vertex k of the cycle has incoming edge k-1 and outgoing edge k
    let mut events: Vec<usize> = (0..n).collect();
    events.sort_by(|&a, &b| points[order[a]].lex_cmp(&points[order[b]]));

    let mut status: Vec<usize> = Vec::with_capacity(n);
    for &k in &events {
        let v = points[order[k]];
        let incident = [(k + n - 1) % n, k];
        let (ending, starting): (Vec<usize>, Vec<usize>) =
            incident.iter().partition(|&&e| segs[e].right == v);

        if !ending.is_empty() {
            let mut lo = usize::MAX;
            for e in &ending {
                let pos = status
                    .iter()
                    .position(|&x| x == *e)
                    .expect("ending edge was inserted");
                status.remove(pos);
                lo = lo.min(pos);
            }
            if lo > 0 && lo < status.len() && cross_pair(status[lo - 1], status[lo]) {
                return false;
            }
        }
        for &e in &starting {
            let pos = status.partition_point(|&t| !above(&segs[t], &segs[e]));
            status.insert(pos, e);
            if pos > 0 && cross_pair(status[pos - 1], e) {
                return false;
            }
            if pos + 1 < status.len() && cross_pair(e, status[pos + 1]) {
                return false;
            }
        }
    }
    true
}
