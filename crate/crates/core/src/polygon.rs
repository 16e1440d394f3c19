//! Polygonizations and their interior angles.

use std::cmp::Ordering;
use std::f64::consts::{PI, TAU};

use crate::error::{GeomError, Result};
use crate::pointset::PointSet;
use crate::predicates::cross;
use crate::simplicity::{SimplicityTest, Sweep};

/// A simple polygon through every point of a set, stored counterclockwise.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygonization {
    order: Vec<usize>,
    interior_angles: Vec<f64>,
    max_angle: f64,
    max_vertex: usize,
    reflex: Vec<usize>,
    canonical: Vec<usize>,
}

/// Least rotation/reflection of a cyclic index sequence.
pub fn canonical_cycle(order: &[usize]) -> Vec<usize> {
    let n = order.len();
    if n == 0 {
        return Vec::new();
    }
    let start = (0..n).min_by_key(|&i| order[i]).unwrap();
    let forward: Vec<usize> = (0..n).map(|k| order[(start + k) % n]).collect();
    let backward: Vec<usize> = (0..n).map(|k| order[(start + n - k) % n]).collect();
    forward.min(backward)
}

fn check_permutation(n: usize, order: &[usize]) -> Result<()> {
    if order.len() != n {
        return Err(GeomError::NotPermutation(n));
    }
    let mut seen = vec![false; n];
    for &i in order {
        if i >= n || std::mem::replace(&mut seen[i], true) {
            return Err(GeomError::NotPermutation(n));
        }
    }
    Ok(())
}

/// Validates `order` with `checker` and measures its interior angles.
pub fn polygonize_order(
    set: &PointSet,
    order: &[usize],
    checker: &dyn SimplicityTest,
) -> Result<Polygonization> {
    check_permutation(set.len(), order)?;
    if !checker.is_simple(set, order) {
        return Err(GeomError::NotSimple);
    }
    Ok(Polygonization::measure(set, order))
}

/// Interior angles of a simple polygonization (verified with the sweep).
pub fn interior_angles(set: &PointSet, order: &[usize]) -> Result<Polygonization> {
    polygonize_order(set, order, &Sweep)
}

impl Polygonization {
    /// Measures a polygon already known to be simple.
    pub(crate) fn measure(set: &PointSet, order: &[usize]) -> Polygonization {
        let n = order.len();
        let pts = set.points();
        // the lexicographically least vertex is convex, so its turn gives the orientation
        let low = (0..n)
            .min_by(|&a, &b| pts[order[a]].lex_cmp(&pts[order[b]]))
            .unwrap();
        let turn = cross(
            pts[order[(low + n - 1) % n]],
            pts[order[low]],
            pts[order[(low + 1) % n]],
        );
        let order: Vec<usize> = if turn > 0 {
            order.to_vec()
        } else {
            order.iter().rev().copied().collect()
        };

        let mut angles = Vec::with_capacity(n);
        for k in 0..n {
            let u = pts[order[(k + n - 1) % n]];
            let v = pts[order[k]];
            let w = pts[order[(k + 1) % n]];
            let a = ((w.x - v.x) as f64, (w.y - v.y) as f64);
            let b = ((u.x - v.x) as f64, (u.y - v.y) as f64);
            let base = (a.0 * b.1 - a.1 * b.0).abs().atan2(a.0 * b.0 + a.1 * b.1);
            // exact turn decides convex vs reflex
            let angle = if cross(v, w, u) > 0 { base } else { TAU - base };
            angles.push(angle);
        }
        let mut max_k = 0;
        for k in 1..n {
            match angles[k].total_cmp(&angles[max_k]) {
                Ordering::Greater => max_k = k,
                Ordering::Equal if order[k] < order[max_k] => max_k = k,
                _ => {}
            }
        }
        let mut reflex: Vec<usize> = (0..n)
            .filter(|&k| angles[k] > PI)
            .map(|k| order[k])
            .collect();
        reflex.sort_unstable();
        Polygonization {
            canonical: canonical_cycle(&order),
            max_angle: angles[max_k],
            max_vertex: order[max_k],
            interior_angles: angles,
            order,
            reflex,
        }
    }

    /// Vertex indices in counterclockwise order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Interior angle at each position of [`order`](Self::order).
    pub fn interior_angles(&self) -> &[f64] {
        &self.interior_angles
    }

    pub fn max_angle(&self) -> f64 {
        self.max_angle
    }

    /// Point index with the largest interior angle (least index on ties).
    pub fn max_vertex(&self) -> usize {
        self.max_vertex
    }

    /// Point indices of reflex vertices, ascending.
    pub fn reflex_vertices(&self) -> &[usize] {
        &self.reflex
    }

    pub fn canonical(&self) -> &[usize] {
        &self.canonical
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn angle_sum(&self) -> f64 {
        self.interior_angles.iter().sum()
    }

    /// Position of point `i` in the counterclockwise order.
    pub fn position(&self, i: usize) -> Option<usize> {
        self.order.iter().position(|&v| v == i)
    }

    /// Neighbours `(previous, next)` of the vertex at position `k`.
    pub fn neighbours(&self, k: usize) -> (usize, usize) {
        let n = self.order.len();
        (self.order[(k + n - 1) % n], self.order[(k + 1) % n])
    }

    /// Total order used to pick a winner: max angle, reflex count, canonical form.
    pub fn rank_cmp(&self, other: &Polygonization) -> Ordering {
        self.max_angle
            .total_cmp(&other.max_angle)
            .then(self.reflex.len().cmp(&other.reflex.len()))
            .then_with(|| self.canonical.cmp(&other.canonical))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::predicates::{orientation, Orientation};

    #[test]
    fn canonical_forms() {
        assert_eq!(canonical_cycle(&[2, 0, 3, 1]), vec![0, 2, 1, 3]);
        assert_eq!(canonical_cycle(&[3, 2, 1, 0]), vec![0, 1, 2, 3]);
        assert_eq!(canonical_cycle(&[1, 3, 0, 2]), vec![0, 2, 1, 3]);
    }

    #[test]
    fn unit_square_right_angles() {
        let s = PointSet::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        for order in [[0, 1, 2, 3], [3, 2, 1, 0]] {
            let p = interior_angles(&s, &order).unwrap();
            for a in p.interior_angles() {
                assert!((a - PI / 2.0).abs() < 1e-15);
            }
            assert!((p.max_angle() - PI / 2.0).abs() < 1e-15);
            assert_eq!(p.order(), &[0, 1, 2, 3]);
            assert!(p.reflex_vertices().is_empty());
        }
    }

    #[test]
    fn fig1_polygon_has_internal_reflex_vertex() {
        let s = fixtures::fig1();
        let order = fixtures::order_of(&s, &fixtures::FIG1_POLYGON);
        let p = interior_angles(&s, &order).unwrap();
        assert!(p.max_angle() > PI);
        assert!((p.angle_sum() - 6.0 * PI).abs() < 1e-9);
        // independent check: reflex exactly where the CCW traversal turns clockwise
        let n = p.len();
        let pts = s.points();
        for k in 0..n {
            let (u, w) = p.neighbours(k);
            let turns_cw = orientation(pts[u], pts[p.order()[k]], pts[w]) == Orientation::Cw;
            assert_eq!(turns_cw, p.interior_angles()[k] > PI);
            if turns_cw {
                assert!(!s.is_extremal(p.order()[k]));
            }
        }
        assert!(!p.reflex_vertices().is_empty());
    }

    #[test]
    fn star_center_skipping_one_wedge() {
        let s = fixtures::star(3);
        // outer 0,1,2; center 3 inserted between 1 and 2
        let p = interior_angles(&s, &[0, 1, 3, 2]).unwrap();
        assert_eq!(p.max_vertex(), 3);
        assert!((p.max_angle() - 4.0 * PI / 3.0).abs() < 1e-8);
        assert!((p.angle_sum() - 2.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn non_simple_and_non_permutation_rejected() {
        let s = PointSet::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        assert_eq!(
            interior_angles(&s, &[0, 2, 1, 3]),
            Err(GeomError::NotSimple)
        );
        assert_eq!(
            interior_angles(&s, &[0, 1, 1, 3]),
            Err(GeomError::NotPermutation(4))
        );
        assert_eq!(
            interior_angles(&s, &[0, 1, 2]),
            Err(GeomError::NotPermutation(4))
        );
    }
}
