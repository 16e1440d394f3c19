//! Smallest enclosing circle.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{GeomError, Result};
use crate::point::{Point, Vec2};

/// Fixed shuffle seed: the circle (and every arc cut derived from it) must be
/// reproducible across runs.
const SHUFFLE_SEED: u64 = 0x5eed_c1c1e;

const CONTAIN_EPS: f64 = 1e-12;
/// Tolerance (relative to the radius) for the post-conditions.
pub const CIRCLE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct Circle {
    pub center: Vec2,
    pub radius: f64,
    /// Two or three indices of points on the boundary that determine the circle.
    pub support: Vec<usize>,
}

impl Circle {
    pub fn contains(&self, p: Vec2, tol: f64) -> bool {
        p.dist(self.center) <= self.radius + tol
    }

    /// Point on the circle at polar angle `theta`.
    pub fn at(&self, theta: f64) -> Vec2 {
        Vec2::new(
            self.center.x + self.radius * theta.cos(),
            self.center.y + self.radius * theta.sin(),
        )
    }

    /// Polar angle of `p` around the center, in `[0, 2π)`.
    pub fn angle_of(&self, p: Vec2) -> f64 {
        p.minus(self.center).angle()
    }
}

fn from_two(pts: &[Vec2], a: usize, b: usize) -> Circle {
    let center = pts[a].plus(pts[b]).scale(0.5);
    let radius = pts[a].dist(center).max(pts[b].dist(center));
    Circle {
        center,
        radius,
        support: vec![a, b],
    }
}

fn from_three(pts: &[Vec2], a: usize, b: usize, c: usize) -> Option<Circle> {
    let (pa, pb, pc) = (pts[a], pts[b], pts[c]);
    let u = pb.minus(pa);
    let v = pc.minus(pa);
    let d = 2.0 * u.cross(v);
    if d == 0.0 {
        return None;
    }
    let uu = u.dot(u);
    let vv = v.dot(v);
    let off = Vec2::new((v.y * uu - u.y * vv) / d, (u.x * vv - v.x * uu) / d);
    let center = pa.plus(off);
    let radius = pa.dist(center).max(pb.dist(center)).max(pc.dist(center));
    Some(Circle {
        center,
        radius,
        support: vec![a, b, c],
    })
}

/// Smallest circle through `a` and `b` containing all of `pts[idx]`.
fn with_two(pts: &[Vec2], idx: &[usize], a: usize, b: usize) -> Circle {
    let mut c = from_two(pts, a, b);
    for &i in idx {
        if !c.contains(pts[i], CONTAIN_EPS * c.radius.max(1e-300)) {
            // collinear triples cannot occur in a general-position set; if one
            // does, keep the widest pair
            c = from_three(pts, a, b, i).unwrap_or_else(|| {
                [
                    from_two(pts, a, i),
                    from_two(pts, b, i),
                    from_two(pts, a, b),
                ]
                .into_iter()
                .max_by(|x, y| x.radius.total_cmp(&y.radius))
                .unwrap()
            });
        }
    }
    c
}

fn with_one(pts: &[Vec2], idx: &[usize], a: usize) -> Circle {
    let mut c = Circle {
        center: pts[a],
        radius: 0.0,
        support: vec![a],
    };
    for (k, &i) in idx.iter().enumerate() {
        if !c.contains(pts[i], CONTAIN_EPS * c.radius) {
            c = with_two(pts, &idx[..k], a, i);
        }
    }
    c
}

/// Minimal enclosing circle (Welzl, iterative, fixed-seed order).
///
/// The result is checked: every point within `1e-9·r`, support points on the
/// boundary, and the support forms a minimal configuration (diametral pair or
/// a triangle whose circumcenter it contains).
pub fn min_enclosing_circle(points: &[Point]) -> Result<Circle> {
    if points.len() < 2 {
        return Err(GeomError::TooFewPoints(points.len()));
    }
    let pts: Vec<Vec2> = points.iter().map(|p| p.to_vec2()).collect();
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(SHUFFLE_SEED));

    let mut c = from_two(&pts, order[0], order[1]);
    for k in 2..order.len() {
        let i = order[k];
        if !c.contains(pts[i], CONTAIN_EPS * c.radius) {
            c = with_one(&pts, &order[..k], i);
        }
    }
    c.support.sort_unstable();
    verify(&pts, &c)?;
    Ok(c)
}

fn verify(pts: &[Vec2], c: &Circle) -> Result<()> {
    let tol = CIRCLE_TOL * c.radius;
    if let Some(i) = (0..pts.len()).find(|&i| !c.contains(pts[i], tol)) {
        return Err(GeomError::Internal(format!(
            "enclosing circle misses point {i}"
        )));
    }
    for &s in &c.support {
        if (pts[s].dist(c.center) - c.radius).abs() > tol {
            return Err(GeomError::Internal(format!(
                "support point {s} off the circle"
            )));
        }
    }
    if c.support.len() == 3 {
        // minimality: the center lies in the closed support triangle
        let (a, b, d) = (pts[c.support[0]], pts[c.support[1]], pts[c.support[2]]);
        let s1 = b.minus(a).cross(c.center.minus(a));
        let s2 = d.minus(b).cross(c.center.minus(b));
        let s3 = a.minus(d).cross(c.center.minus(d));
        let eps = tol * c.radius;
        let neg = s1 < -eps || s2 < -eps || s3 < -eps;
        let pos = s1 > eps || s2 > eps || s3 > eps;
        if neg && pos {
            return Err(GeomError::Internal(
                "support triangle is obtuse; circle not minimal".into(),
            ));
        }
    }
    Ok(())
}
