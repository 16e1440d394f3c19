//! Maximal arcs of admissible viewpoints on the enclosing circle.
//!
//! Every line through two points of the set meets the circle twice. The
//! union of those intersection angles cuts the circle into open arcs; any
//! two viewpoints inside one arc see the set identically.

use std::f64::consts::TAU;

use crate::angle::normalize;
use crate::circle::Circle;
use crate::point::Vec2;
use crate::pointset::PointSet;

/// Cut points closer than this (radians) are merged.
pub const CUT_MERGE_EPS: f64 = 1e-12;
/// Minimum `|signed area|` of every triangle `(d, p, q)`, relative to `r^2`.
pub const VIEWPOINT_MARGIN: f64 = 1e-9;

/// Fractions of an arc tried, in order, when placing a representative.
pub const REPRESENTATIVE_FRACTIONS: [f64; 11] = [
    0.5, 0.25, 0.75, 0.0625, 0.1875, 0.3125, 0.4375, 0.5625, 0.6875, 0.8125, 0.9375,
];

#[derive(Debug, Clone, PartialEq)]
pub struct ArcInterval {
    /// Polar angle of the counterclockwise start, in `[0, 2π)`.
    pub start_angle: f64,
    /// `start_angle + measure`; may exceed `2π` for the wrapping arc.
    pub end_angle: f64,
    pub measure: f64,
    /// `None` when no probe position passed the general-position margin.
    pub representative: Option<Vec2>,
}

impl ArcInterval {
    pub fn is_usable(&self) -> bool {
        self.representative.is_some()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ArcPartition {
    pub arcs: Vec<ArcInterval>,
    /// Sorted distinct cut angles.
    pub cuts: Vec<f64>,
    /// Raw intersections folded into a neighbouring cut (shared support
    /// points, tangencies, coincident cuts).
    pub merged_cuts: usize,
}

impl ArcPartition {
    pub fn usable(&self) -> impl Iterator<Item = (usize, &ArcInterval)> {
        self.arcs.iter().enumerate().filter(|(_, a)| a.is_usable())
    }

    pub fn total_measure(&self) -> f64 {
        self.arcs.iter().map(|a| a.measure).sum()
    }

    /// Index of the arc whose closure contains polar angle `theta`.
    pub fn locate(&self, theta: f64) -> usize {
        let t = normalize(theta);
        self.arcs
            .iter()
            .position(|a| {
                let off = normalize(t - a.start_angle);
                off <= a.measure || off >= TAU - CUT_MERGE_EPS
            })
            .unwrap_or(0)
    }
}

/// Both intersection angles of the line through `p` and `q` with `circle`.
fn line_cuts(circle: &Circle, p: Vec2, q: Vec2) -> Option<[f64; 2]> {
    let u = q.minus(p);
    let w = p.minus(circle.center);
    let a = u.dot(u);
    let b = 2.0 * w.dot(u);
    let c = w.dot(w) - circle.radius * circle.radius;
    let disc = b * b - 4.0 * a * c;
    if a == 0.0 || disc < 0.0 {
        return None;
    }
    let sq = disc.sqrt();
    // stable quadratic roots
    let qv = -0.5 * (b + b.signum() * sq);
    let (t1, t2) = if qv == 0.0 {
        (0.0, 0.0)
    } else {
        (qv / a, c / qv)
    };
    Some([
        circle.angle_of(p.plus(u.scale(t1))),
        circle.angle_of(p.plus(u.scale(t2))),
    ])
}

/// True when every triangle `(d, p, q)` has area above the margin.
pub fn viewpoint_admissible(set: &PointSet, circle: &Circle, d: Vec2) -> bool {
    let rel: Vec<Vec2> = set.points().iter().map(|p| p.to_vec2().minus(d)).collect();
    let limit = 2.0 * VIEWPOINT_MARGIN * circle.radius * circle.radius;
    for i in 0..rel.len() {
        for j in i + 1..rel.len() {
            if rel[i].cross(rel[j]).abs() <= limit {
                return false;
            }
        }
    }
    true
}

/// First probe position inside the arc that passes the margin check.
pub fn representative(arc: &ArcInterval, set: &PointSet, circle: &Circle) -> Option<Vec2> {
    if arc.measure <= 0.0 {
        return None;
    }
    REPRESENTATIVE_FRACTIONS
        .iter()
        .map(|f| circle.at(arc.start_angle + f * arc.measure))
        .find(|&d| viewpoint_admissible(set, circle, d))
}

/// Cuts the circle at every line–circle intersection and picks a
/// representative viewpoint for each resulting arc.
pub fn maximal_arcs(set: &PointSet, circle: &Circle) -> ArcPartition {
    let mut part = cut_arcs(set, circle);
    for arc in part.arcs.iter_mut() {
        arc.representative = representative(arc, set, circle);
        if arc.representative.is_none() {
            log::warn!(
                "arc at {:.6} (measure {:.3e}) has no admissible viewpoint; skipped",
                arc.start_angle,
                arc.measure
            );
        }
    }
    part
}

/// The arc partition alone; representatives are left unset.
pub fn cut_arcs(set: &PointSet, circle: &Circle) -> ArcPartition {
    let pts: Vec<Vec2> = set.points().iter().map(|p| p.to_vec2()).collect();
    let n = pts.len();
    let mut raw = Vec::with_capacity(n * (n - 1));
    for i in 0..n {
        for j in i + 1..n {
            if let Some(c) = line_cuts(circle, pts[i], pts[j]) {
                raw.extend_from_slice(&c);
            }
        }
    }
    raw.sort_by(f64::total_cmp);
    let mut cuts: Vec<f64> = Vec::with_capacity(raw.len());
    for &t in &raw {
        match cuts.last() {
            Some(&last) if t - last <= CUT_MERGE_EPS => {}
            _ => cuts.push(t),
        }
    }
    while cuts.len() > 1 && cuts[0] + TAU - cuts[cuts.len() - 1] <= CUT_MERGE_EPS {
        cuts.pop();
    }
    let merged_cuts = raw.len() - cuts.len();

    let mut arcs: Vec<ArcInterval> = Vec::with_capacity(cuts.len());
    let k = cuts.len();
    for i in 0..k {
        let start = cuts[i];
        let end = if i + 1 < k {
            cuts[i + 1]
        } else {
            cuts[0] + TAU
        };
        arcs.push(ArcInterval {
            start_angle: start,
            end_angle: end,
            measure: end - start,
            representative: None,
        });
    }
    if k == 0 {
        arcs.push(ArcInterval {
            start_angle: 0.0,
            end_angle: TAU,
            measure: TAU,
            representative: None,
        });
    }
    ArcPartition {
        arcs,
        cuts,
        merged_cuts,
    }
}
