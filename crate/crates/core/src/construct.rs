//! The viewpoint polygonization `P(d)`.
//!
//! Hull edges whose supporting line has `d` on the interior side form a
//! connected chain `x .. y`. Every other point is sorted by the angle it
//! makes at `d` with the ray `d -> x`, and the fan path
//! `x, x_1, .., x_k, y` closes the polygon.

use crate::error::{GeomError, Result};
use crate::point::Vec2;
use crate::pointset::PointSet;
use crate::polygon::Polygonization;
use crate::simplicity::{SimplicityTest, Sweep};

/// Relative threshold for treating `d` as lying on a line it must avoid.
const SIDE_EPS: f64 = 1e-12;

/// Hull chain facing away from `d` and the fan order around `d`.
#[derive(Debug, Clone, PartialEq)]
pub struct ViewpointLayout {
    /// Hull vertices `x = chain[0] .. y = chain[last]`, counterclockwise.
    pub chain: Vec<usize>,
    /// `x_1 .. x_k`: points off the chain, sorted by angle around `d`.
    pub fan: Vec<usize>,
}

impl ViewpointLayout {
    /// Cyclic vertex order `x, x_1, .., x_k, y, (chain back to x)`.
    pub fn cycle(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.chain.len() + self.fan.len());
        order.push(self.chain[0]);
        order.extend_from_slice(&self.fan);
        order.extend(self.chain[1..].iter().rev());
        order
    }
}

fn side(a: Vec2, b: Vec2, p: Vec2) -> f64 {
    b.minus(a).cross(p.minus(a))
}

/// Chain and fan order for viewpoint `d`, before any simplicity check.
pub fn viewpoint_layout(set: &PointSet, d: Vec2) -> Result<ViewpointLayout> {
    let hull = set.hull();
    let h = hull.len();
    let pts: Vec<Vec2> = set.points().iter().map(|p| p.to_vec2()).collect();
    let centroid = hull
        .iter()
        .fold(Vec2::default(), |acc, &i| acc.plus(pts[i]))
        .scale(1.0 / h as f64);

    let mut keep = vec![false; h];
    for e in 0..h {
        let (a, b) = (pts[hull[e]], pts[hull[(e + 1) % h]]);
        let sd = side(a, b, d);
        let scale = b.minus(a).norm() * d.minus(a).norm().max(b.minus(a).norm());
        if sd.abs() <= SIDE_EPS * scale {
            return Err(GeomError::DegenerateViewpoint(
                "viewpoint on a hull edge line",
            ));
        }
        let sc = side(a, b, centroid);
        keep[e] = (sd > 0.0) == (sc > 0.0);
    }
    if keep.iter().all(|&k| k) {
        return Err(GeomError::ViewpointInsideHull);
    }
    let starts: Vec<usize> = (0..h)
        .filter(|&e| keep[e] && !keep[(e + h - 1) % h])
        .collect();
    if starts.len() != 1 {
        return Err(GeomError::Internal(format!(
            "kept hull edges form {} chains",
            starts.len()
        )));
    }
    let first = starts[0];
    let len = (0..h).take_while(|&k| keep[(first + k) % h]).count();
    let chain: Vec<usize> = (0..=len).map(|k| hull[(first + k) % h]).collect();

    let mut on_chain = vec![false; pts.len()];
    for &c in &chain {
        on_chain[c] = true;
    }
    let x = pts[chain[0]].minus(d);
    let y = pts[*chain.last().unwrap()].minus(d);
    let turn = x.cross(y).signum();
    let key = |p: Vec2| {
        let r = p.minus(d);
        (turn * x.cross(r)).atan2(x.dot(r))
    };
    let mut fan: Vec<(f64, usize)> = (0..pts.len())
        .filter(|&i| !on_chain[i])
        .map(|i| (key(pts[i]), i))
        .collect();
    fan.sort_by(|a, b| a.0.total_cmp(&b.0));

    // consecutive fan points (including x and y at the ends) must be strictly
    // separated as seen from d
    let mut seq = Vec::with_capacity(fan.len() + 2);
    seq.push(chain[0]);
    seq.extend(fan.iter().map(|&(_, i)| i));
    seq.push(*chain.last().unwrap());
    for w in seq.windows(2) {
        let (a, b) = (pts[w[0]].minus(d), pts[w[1]].minus(d));
        if turn * a.cross(b) <= SIDE_EPS * a.norm() * b.norm() {
            return Err(GeomError::DegenerateViewpoint(
                "two fan points collinear with the viewpoint",
            ));
        }
    }
    Ok(ViewpointLayout {
        chain,
        fan: fan.into_iter().map(|(_, i)| i).collect(),
    })
}

/// `P(d)`, verified simple with the sweep.
pub fn build_polygonization(set: &PointSet, d: Vec2) -> Result<Polygonization> {
    build_polygonization_with(set, d, &Sweep)
}

pub fn build_polygonization_with(
    set: &PointSet,
    d: Vec2,
    checker: &dyn SimplicityTest,
) -> Result<Polygonization> {
    let order = viewpoint_layout(set, d)?.cycle();
    if !checker.is_simple(set, &order) {
        return Err(GeomError::Internal(format!(
            "P(d) for d = ({}, {}) is not simple: {order:?}",
            d.x, d.y
        )));
    }
    Ok(Polygonization::measure(set, &order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::point::Point;
    use crate::polygon::canonical_cycle;
    use std::f64::consts::PI;

    fn coords(set: &PointSet, idx: &[usize]) -> Vec<(i64, i64)> {
        idx.iter()
            .map(|&i| {
                (
                    set.point(i).x / crate::point::SCALE,
                    set.point(i).y / crate::point::SCALE,
                )
            })
            .collect()
    }

    #[test]
    fn fig2_chain_and_fan() {
        let s = fixtures::fig1();
        let layout = viewpoint_layout(&s, Vec2::new(-4.0, 3.0)).unwrap();
        assert_eq!(
            coords(&s, &layout.chain),
            vec![(-4, -1), (-3, -4), (3, -4), (5, 0), (0, 5)]
        );
        assert_eq!(coords(&s, &layout.fan), vec![(-1, 0), (2, 2), (-2, 3)]);
        let p = build_polygonization(&s, Vec2::new(-4.0, 3.0)).unwrap();
        let expected = fixtures::order_of(&s, &fixtures::FIG2_POLYGON);
        assert_eq!(p.canonical(), canonical_cycle(&expected).as_slice());
    }

    #[test]
    fn convex_set_yields_hull() {
        let s = PointSet::from_ints(&[(0, 0), (4, -1), (6, 2), (4, 5), (-1, 3)]).unwrap();
        assert!(s.is_convex_position());
        let p = build_polygonization(&s, Vec2::new(10.0, -7.0)).unwrap();
        assert_eq!(p.canonical(), canonical_cycle(s.hull()).as_slice());
        assert!(p.max_angle() < PI);
    }

    #[test]
    fn star3_viewpoint_opposite_outer_point() {
        let s = fixtures::star(3);
        // outer point 0 sits at angle 0; look from just past angle π
        let p = build_polygonization(&s, Vec2::new(3.3f64.cos(), 3.3f64.sin())).unwrap();
        assert_eq!(p.max_vertex(), 3);
        assert!((p.max_angle() - 4.0 * PI / 3.0).abs() < 1e-8);
        // the center joins the two outer points nearest the viewpoint
        let k = p.position(3).unwrap();
        let (a, b) = p.neighbours(k);
        let mut nb = [a, b];
        nb.sort_unstable();
        assert_eq!(nb, [1, 2]);
    }

    #[test]
    fn viewpoint_inside_hull_rejected() {
        let s = fixtures::fig1();
        assert_eq!(
            build_polygonization(&s, Vec2::new(0.5, 0.5)),
            Err(GeomError::ViewpointInsideHull)
        );
    }

    #[test]
    fn viewpoint_on_hull_edge_line_rejected() {
        let s = PointSet::new(
            [(0, 0), (4, 0), (4, 4), (0, 4), (1, 2)]
                .iter()
                .map(|&(x, y)| Point::from_int(x, y))
                .collect(),
        )
        .unwrap();
        assert!(matches!(
            build_polygonization(&s, Vec2::new(8.0, 0.0)),
            Err(GeomError::DegenerateViewpoint(_))
        ));
    }
}
