//! Point sets in general position with their hull classification.

use crate::error::{GeomError, Result};
use crate::point::Point;
use crate::predicates::{cross, orientation, Orientation};

/// Returns the lexicographically first collinear triple `(i, j, k)`, `i < j < k`,
/// or `None` when no three points are collinear.
pub fn general_position(points: &[Point]) -> Result<Option<(usize, usize, usize)>> {
    let n = points.len();
    if n < 3 {
        return Err(GeomError::TooFewForTriples(n));
    }
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                // coincident points are collinear with anything
                let k = if j + 1 < n {
                    j + 1
                } else {
                    (0..n).find(|&k| k != i && k != j).unwrap()
                };
                let mut t = [i, j, k];
                t.sort_unstable();
                return Ok(Some((t[0], t[1], t[2])));
            }
            for k in j + 1..n {
                if orientation(points[i], points[j], points[k]) == Orientation::Collinear {
                    return Ok(Some((i, j, k)));
                }
            }
        }
    }
    Ok(None)
}

/// Counterclockwise hull indices, starting at the lexicographically smallest
/// point. Assumes general position (no collinear boundary points to drop).
pub fn convex_hull(points: &[Point]) -> Vec<usize> {
    let n = points.len();
    if n < 3 {
        return (0..n).collect();
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| points[a].lex_cmp(&points[b]));
    let mut hull: Vec<usize> = Vec::with_capacity(2 * n);
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(idx.iter())
        } else {
            Box::new(idx.iter().rev())
        };
        for &i in iter {
            while hull.len() >= start + 2
                && cross(
                    points[hull[hull.len() - 2]],
                    points[hull[hull.len() - 1]],
                    points[i],
                ) <= 0
            {
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    hull
}

/// A validated planar point set: `n > 3`, general position, hull computed.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    points: Vec<Point>,
    hull: Vec<usize>,
    internal: Vec<usize>,
    is_hull: Vec<bool>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.len() <= 3 {
            return Err(GeomError::TooFewPoints(points.len()));
        }
        if let Some((i, j, k)) = general_position(&points)? {
            return Err(GeomError::Collinear(i, j, k));
        }
        let hull = convex_hull(&points);
        let mut is_hull = vec![false; points.len()];
        for &h in &hull {
            is_hull[h] = true;
        }
        let internal = (0..points.len()).filter(|&i| !is_hull[i]).collect();
        Ok(PointSet {
            points,
            hull,
            internal,
            is_hull,
        })
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Result<Self> {
        Self::new(coords.iter().map(|&(x, y)| Point::from_int(x, y)).collect())
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> Point {
        self.points[i]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Extremal points, counterclockwise.
    pub fn hull(&self) -> &[usize] {
        &self.hull
    }

    pub fn internal(&self) -> &[usize] {
        &self.internal
    }

    pub fn x_count(&self) -> usize {
        self.hull.len()
    }

    pub fn is_extremal(&self, i: usize) -> bool {
        self.is_hull[i]
    }

    pub fn is_convex_position(&self) -> bool {
        self.internal.is_empty()
    }

    pub fn index_of(&self, p: Point) -> Option<usize> {
        self.points.iter().position(|&q| q == p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::point::Point;

    fn cyclic_eq(a: &[usize], b: &[usize]) -> bool {
        a.len() == b.len()
            && (0..a.len()).any(|r| (0..a.len()).all(|i| a[(i + r) % a.len()] == b[i]))
    }

    #[test]
    fn general_position_examples() {
        let fig = fixtures::fig1_points();
        assert_eq!(general_position(&fig).unwrap(), None);
        let bad: Vec<Point> = [(0, 0), (1, 0), (2, 0), (0, 1)]
            .iter()
            .map(|&(x, y)| Point::from_int(x, y))
            .collect();
        assert_eq!(general_position(&bad).unwrap(), Some((0, 1, 2)));
        let tri: Vec<Point> = [(0, 0), (3, 1), (1, 4)]
            .iter()
            .map(|&(x, y)| Point::from_int(x, y))
            .collect();
        assert_eq!(general_position(&tri).unwrap(), None);
        assert!(general_position(&tri[..2]).is_err());
    }

    #[test]
    fn lexicographically_first_triple() {
        let pts: Vec<Point> = [(0, 0), (5, 1), (1, 1), (2, 2), (9, 3)]
            .iter()
            .map(|&(x, y)| Point::from_int(x, y))
            .collect();
        assert_eq!(general_position(&pts).unwrap(), Some((0, 2, 3)));
    }

    #[test]
    fn fig1_hull_and_internal() {
        let s = fixtures::fig1();
        let hull_pts: Vec<Point> = s.hull().iter().map(|&i| s.point(i)).collect();
        let expected: Vec<Point> = [(0, 5), (5, 0), (3, -4), (-3, -4), (-4, -1), (-2, 3)]
            .iter()
            .map(|&(x, y)| Point::from_int(x, y))
            .collect();
        assert_eq!(hull_pts.len(), 6);
        for p in &expected {
            assert!(hull_pts.contains(p));
        }
        let internal: Vec<Point> = s.internal().iter().map(|&i| s.point(i)).collect();
        assert_eq!(
            internal,
            vec![Point::from_int(2, 2), Point::from_int(-1, 0)]
        );
        assert_eq!(s.x_count(), 6);
    }

    #[test]
    fn hull_is_ccw_and_encloses_rest() {
        let s = fixtures::fig1();
        let h = s.hull();
        for k in 0..h.len() {
            let (a, b) = (s.point(h[k]), s.point(h[(k + 1) % h.len()]));
            for i in 0..s.len() {
                if i != h[k] && i != h[(k + 1) % h.len()] {
                    assert_eq!(orientation(a, b, s.point(i)), Orientation::Ccw);
                }
            }
        }
    }

    #[test]
    fn square_and_star_hulls() {
        let sq = PointSet::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        assert_eq!(sq.x_count(), 4);
        assert!(sq.is_convex_position());
        let star = fixtures::star(5);
        assert_eq!(star.x_count(), 5);
        assert_eq!(star.internal(), &[5]);
    }

    #[test]
    fn rejects_small_and_collinear() {
        assert_eq!(
            PointSet::from_ints(&[(0, 0), (1, 0), (0, 1)]),
            Err(GeomError::TooFewPoints(3))
        );
        assert_eq!(
            PointSet::from_ints(&[(0, 0), (1, 0), (2, 0), (0, 1)]),
            Err(GeomError::Collinear(0, 1, 2))
        );
    }

    #[test]
    fn hull_permutation_invariant() {
        let s = fixtures::fig1();
        let perm = [3usize, 7, 0, 5, 1, 6, 2, 4];
        let pts: Vec<Point> = perm.iter().map(|&i| s.point(i)).collect();
        let h2: Vec<usize> = convex_hull(&pts).into_iter().map(|i| perm[i]).collect();
        assert!(cyclic_eq(&h2, s.hull()));
    }
}
