//! Reference configurations: the eight-point figure set and the
//! regular-star-plus-center family.

use std::f64::consts::TAU;

use crate::error::{GeomError, Result};
use crate::point::Point;
use crate::pointset::{general_position, PointSet};

pub const FIG1: [(i64, i64); 8] = [
    (0, 5),
    (5, 0),
    (3, -4),
    (-3, -4),
    (-4, -1),
    (-2, 3),
    (2, 2),
    (-1, 0),
];

/// The polygonization drawn next to the hull in the first figure.
pub const FIG1_POLYGON: [(i64, i64); 8] = [
    (0, 5),
    (5, 0),
    (3, -4),
    (2, 2),
    (-3, -4),
    (-4, -1),
    (-1, 0),
    (-2, 3),
];

/// The completed polygon built from viewpoint `FIG2_VIEWPOINT`.
pub const FIG2_POLYGON: [(i64, i64); 8] = [
    (-4, -1),
    (-3, -4),
    (3, -4),
    (5, 0),
    (0, 5),
    (-2, 3),
    (2, 2),
    (-1, 0),
];

pub const FIG2_VIEWPOINT: (f64, f64) = (-4.0, 3.0);

pub fn fig1_points() -> Vec<Point> {
    FIG1.iter().map(|&(x, y)| Point::from_int(x, y)).collect()
}

pub fn fig1() -> PointSet {
    PointSet::new(fig1_points()).expect("figure set is in general position")
}

/// Maps coordinate pairs to indices of `set`.
pub fn order_of(set: &PointSet, coords: &[(i64, i64)]) -> Vec<usize> {
    coords
        .iter()
        .map(|&(x, y)| {
            set.index_of(Point::from_int(x, y))
                .expect("coordinate belongs to the set")
        })
        .collect()
}

/// `m` points equally spaced on the unit circle (rounded to the coordinate
/// grid) followed by the center. `m` must be odd: for even `m` antipodal
/// pairs are collinear with the center.
pub fn star_points(m: usize) -> Result<Vec<Point>> {
    if m < 3 {
        return Err(GeomError::TooFewPoints(m + 1));
    }
    if m.is_multiple_of(2) {
        return Err(GeomError::Collinear(0, m / 2, m));
    }
    let mut offset = 0.0;
    for _ in 0..16 {
        let mut pts = Vec::with_capacity(m + 1);
        for k in 0..m {
            let a = TAU * k as f64 / m as f64 + offset;
            pts.push(Point::from_f64(a.cos(), a.sin())?);
        }
        pts.push(Point::from_scaled(0, 0));
        if general_position(&pts)?.is_none() {
            return Ok(pts);
        }
        offset += 1e-6;
    }
    Err(GeomError::Internal(format!(
        "star with m = {m} stays degenerate after rotation"
    )))
}

/// Star fixture for tests; panics on invalid `m`.
pub fn star(m: usize) -> PointSet {
    PointSet::new(star_points(m).expect("valid star")).expect("star in general position")
}
