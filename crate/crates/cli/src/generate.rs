//! Seeded random sets and the regular star construction.

use maxangle_core::fixtures::star_points;
use maxangle_core::point::{Point, SCALE};
use maxangle_core::predicates::{orientation, Orientation};
use maxangle_core::GeomError;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::pointfile::PointSetFile;

/// Grid resolution per axis for random sets.
pub const GRID: i64 = 1_000_000;

#[derive(Debug, Error, PartialEq)]
pub enum GenError {
    #[error("need n > 3, got {0}")]
    TooFew(usize),
    #[error("m must be at least 3, got {0}")]
    StarTooSmall(usize),
    #[error("m = {0} is even: antipodal outer points are collinear with the center")]
    StarEven(usize),
    #[error("bounding box must have positive width and height")]
    EmptyBox,
    #[error("no general-position set after {0} attempts")]
    BudgetExhausted(usize),
    #[error(transparent)]
    Geometry(#[from] GeomError),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BBox {
    pub min: Point,
    pub max: Point,
}

impl Default for BBox {
    fn default() -> Self {
        BBox {
            min: Point::from_scaled(0, 0),
            max: Point::from_scaled(SCALE, SCALE),
        }
    }
}

fn grid_coord(lo: i64, hi: i64, k: i64) -> i64 {
    lo + ((hi as i128 - lo as i128) * k as i128 / GRID as i128) as i64
}

/// `n` points drawn uniformly from the `10^6 x 10^6` grid over `bbox`,
/// resampling any point that duplicates or is collinear with two earlier ones.
pub fn gen_random(n: usize, seed: u64, bbox: BBox) -> Result<PointSetFile, GenError> {
    if n <= 3 {
        return Err(GenError::TooFew(n));
    }
    if bbox.max.x <= bbox.min.x || bbox.max.y <= bbox.min.y {
        return Err(GenError::EmptyBox);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = 1000 * n;
    let mut attempts = 0;
    let mut pts: Vec<Point> = Vec::with_capacity(n);
    while pts.len() < n {
        if attempts == budget {
            return Err(GenError::BudgetExhausted(budget));
        }
        attempts += 1;
        let p = Point::from_scaled(
            grid_coord(bbox.min.x, bbox.max.x, rng.gen_range(0..=GRID)),
            grid_coord(bbox.min.y, bbox.max.y, rng.gen_range(0..=GRID)),
        );
        let clash = pts.iter().enumerate().any(|(i, &a)| {
            a == p
                || pts[i + 1..]
                    .iter()
                    .any(|&b| orientation(a, b, p) == Orientation::Collinear)
        });
        if !clash {
            pts.push(p);
        }
    }
    Ok(PointSetFile::new(
        pts,
        Some(format!("random n={n} seed={seed}")),
    ))
}

/// `m` equally spaced unit-circle points plus the center (`n = m + 1`).
pub fn gen_star(m: usize) -> Result<PointSetFile, GenError> {
    if m < 3 {
        return Err(GenError::StarTooSmall(m));
    }
    if m.is_multiple_of(2) {
        return Err(GenError::StarEven(m));
    }
    Ok(PointSetFile::new(
        star_points(m)?,
        Some(format!("star m={m}")),
    ))
}
