//! Potential exterior angles and the bookkeeping behind the bound.
//!
//! At an internal point `p`, the rays to the other `n − 1` points cut the
//! full turn into `n − 1` wedges. For every arc, the wedge at the vertex of
//! smallest exterior angle that contains the viewpoint goes into the "pot";
//! the largest pot wedge `m` then caps the best max angle at `2π − m`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::{PI, TAU};

use crate::angle::ccw_delta;
use crate::arcs::ArcInterval;
use crate::candidates::{candidate_set, theorem_bound, CandidateSet, BOUND_TOL};
use crate::circle::Circle;
use crate::error::{GeomError, Result};
use crate::point::{Point, Vec2};
use crate::pointset::PointSet;
use crate::polygon::Polygonization;
use crate::predicates::cross;

/// Tolerance when locating a direction inside a half-open wedge.
pub const WEDGE_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Wedge {
    /// Direction of the clockwise bounding ray, in `[0, 2π)`.
    pub start: f64,
    pub measure: f64,
}

impl Wedge {
    /// Half-open membership `[start, start + measure)`.
    pub fn contains(&self, theta: f64) -> bool {
        let off = ccw_delta(self.start, theta);
        off < self.measure - WEDGE_EPS || off >= TAU - WEDGE_EPS
    }

    /// Signed offset of `theta` from `start`, in `[−π, π)`.
    fn offset(&self, theta: f64) -> f64 {
        let off = ccw_delta(self.start, theta);
        if off >= PI {
            off - TAU
        } else {
            off
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PeaFan {
    pub vertex: usize,
    /// Ray directions, counterclockwise, with their target point indices.
    pub rays: Vec<(f64, usize)>,
    /// `wedges[i]` spans from ray `i` to ray `i + 1`.
    pub wedges: Vec<Wedge>,
}

impl PeaFan {
    pub fn locate(&self, theta: f64) -> usize {
        self.wedges
            .iter()
            .position(|w| w.contains(theta))
            .unwrap_or_else(|| {
                // float slack at a boundary: nearest start wins
                (0..self.wedges.len())
                    .min_by(|&a, &b| {
                        self.wedges[a]
                            .offset(theta)
                            .abs()
                            .total_cmp(&self.wedges[b].offset(theta).abs())
                    })
                    .unwrap()
            })
    }
}

fn half(dx: i64, dy: i64) -> u8 {
    u8::from(dy < 0 || (dy == 0 && dx < 0))
}

fn direction(from: Point, to: Point) -> f64 {
    Vec2::new((to.x - from.x) as f64, (to.y - from.y) as f64).angle()
}

/// The `n − 1` potential exterior angles at internal point `p`.
pub fn pea_fan(set: &PointSet, p: usize) -> Result<PeaFan> {
    if p >= set.len() || set.is_extremal(p) {
        return Err(GeomError::NotInternal(p));
    }
    let origin = set.point(p);
    let mut others: Vec<usize> = (0..set.len()).filter(|&i| i != p).collect();
    // exact angular sort: upper half-plane first, then by orientation
    others.sort_by(|&a, &b| {
        let (pa, pb) = (set.point(a), set.point(b));
        let ha = half(pa.x - origin.x, pa.y - origin.y);
        let hb = half(pb.x - origin.x, pb.y - origin.y);
        ha.cmp(&hb)
            .then_with(|| match cross(origin, pa, pb).signum() {
                1 => Ordering::Less,
                -1 => Ordering::Greater,
                _ => Ordering::Equal,
            })
    });
    let rays: Vec<(f64, usize)> = others
        .iter()
        .map(|&i| (direction(origin, set.point(i)), i))
        .collect();
    let k = rays.len();
    let wedges = (0..k)
        .map(|i| Wedge {
            start: rays[i].0,
            measure: ccw_delta(rays[i].0, rays[(i + 1) % k].0),
        })
        .collect();
    Ok(PeaFan {
        vertex: p,
        rays,
        wedges,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct PotRecord {
    pub arc_index: usize,
    pub arc: ArcInterval,
    pub phi_vertex: usize,
    pub phi_wedge: usize,
    pub phi: Wedge,
    pub phi_measure: f64,
    /// Smallest exterior angle of `P(d)`, attained at `phi_vertex`.
    pub min_exterior: f64,
    /// The viewpoint lies inside that exterior angle.
    pub exterior_contains_viewpoint: bool,
}

/// Identifies `φ(d)` for the arc's representative `d` and its polygon.
pub fn phi_of_arc(
    set: &PointSet,
    arc_index: usize,
    arc: &ArcInterval,
    poly: &Polygonization,
) -> Result<PotRecord> {
    if set.is_convex_position() || poly.reflex_vertices().is_empty() {
        return Err(GeomError::NoReflexVertex);
    }
    let d = arc
        .representative
        .ok_or_else(|| GeomError::Internal(format!("arc {arc_index} has no representative")))?;
    // smallest exterior angle = largest interior angle; least index on ties
    let s = poly.max_vertex();
    let k = poly.position(s).expect("vertex in polygon");
    let min_exterior = TAU - poly.max_angle();

    let origin = set.point(s);
    let ov = origin.to_vec2();
    let theta = d.minus(ov).angle();
    let fan = pea_fan(set, s)?;
    let w = fan.locate(theta);

    let (prev, _next) = poly.neighbours(k);
    let ext_start = direction(origin, set.point(prev));
    let exterior_contains_viewpoint = ccw_delta(ext_start, theta) < min_exterior;

    Ok(PotRecord {
        arc_index,
        arc: arc.clone(),
        phi_vertex: s,
        phi_wedge: w,
        phi: fan.wedges[w],
        phi_measure: fan.wedges[w].measure,
        min_exterior,
        exterior_contains_viewpoint,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyCheck {
    pub pass: bool,
    pub witness: Option<String>,
}

impl PropertyCheck {
    fn ok() -> Self {
        PropertyCheck {
            pass: true,
            witness: None,
        }
    }

    fn fail(w: String) -> Self {
        PropertyCheck {
            pass: false,
            witness: Some(w),
        }
    }
}

/// The whole arc lies in the closure of `φ`, and its measure is at most
/// twice that of `φ`.
pub fn verify_property1(set: &PointSet, circle: &Circle, rec: &PotRecord) -> PropertyCheck {
    let s = set.point(rec.phi_vertex).to_vec2();
    let a = circle.at(rec.arc.start_angle).minus(s).angle();
    let b = circle.at(rec.arc.end_angle).minus(s).angle();
    // direction from an interior point turns monotonically along the circle
    let start_off = rec.phi.offset(a);
    let subtended = ccw_delta(a, b);
    if start_off < -BOUND_TOL || start_off > rec.phi.measure + BOUND_TOL {
        return PropertyCheck::fail(format!(
            "arc start direction {a:.12} outside wedge [{:.12}, +{:.12}]",
            rec.phi.start, rec.phi.measure
        ));
    }
    if start_off + subtended > rec.phi.measure + BOUND_TOL {
        return PropertyCheck::fail(format!(
            "arc end direction {b:.12} outside wedge [{:.12}, +{:.12}]",
            rec.phi.start, rec.phi.measure
        ));
    }
    if rec.arc.measure > 2.0 * rec.phi_measure + BOUND_TOL {
        return PropertyCheck::fail(format!(
            "arc measure {:.12} > 2 * {:.12}",
            rec.arc.measure, rec.phi_measure
        ));
    }
    PropertyCheck::ok()
}

/// `φ` is no larger than the smallest exterior angle of `P(d)`.
pub fn verify_property2(rec: &PotRecord) -> PropertyCheck {
    if rec.phi_measure > rec.min_exterior + BOUND_TOL {
        return PropertyCheck::fail(format!(
            "phi {:.12} > min exterior {:.12}",
            rec.phi_measure, rec.min_exterior
        ));
    }
    if !rec.exterior_contains_viewpoint {
        return PropertyCheck::fail("viewpoint outside the smallest exterior angle".into());
    }
    PropertyCheck::ok()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub property1: bool,
    pub property2: bool,
    /// `|distinct PEAs| <= (n−1)(n−x)`.
    pub pot_size: bool,
    /// `2π <= 2m(n−1)(n−x)`.
    pub inequality: bool,
    /// Arcs grouped by pot PEA total at most twice its measure.
    pub grouped_arcs: bool,
    /// Best max angle `<= 2π − m`.
    pub best_within_m: bool,
    /// Best max angle `<= 2π − π/((n−1)(n−x))`.
    pub theorem: bool,
}

impl TheoremVerdict {
    pub fn all(&self) -> bool {
        self.property1
            && self.property2
            && self.pot_size
            && self.inequality
            && self.grouped_arcs
            && self.best_within_m
            && self.theorem
    }
}

#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub records: Vec<PotRecord>,
    pub property1: Vec<PropertyCheck>,
    pub property2: Vec<PropertyCheck>,
    pub distinct_peas: BTreeSet<(usize, usize)>,
    /// Largest pot measure.
    pub m: f64,
    pub pot_bound: usize,
    pub lower_bound_on_m: f64,
    pub theorem_bound: f64,
    pub best_max_angle: f64,
    /// Total measure of arcs that produced a record.
    pub covered_measure: f64,
    pub verdict: TheoremVerdict,
}

pub fn verify_theorem(set: &PointSet) -> Result<TheoremReport> {
    if set.is_convex_position() {
        return Err(GeomError::NoReflexVertex);
    }
    let cands = candidate_set(set)?;
    verify_theorem_with(set, &cands)
}

/// Runs the PEA bookkeeping over an existing candidate set.
pub fn verify_theorem_with(set: &PointSet, cands: &CandidateSet) -> Result<TheoremReport> {
    let (n, x) = (set.len(), set.x_count());
    let bound = theorem_bound(n, x)?;
    let pot_bound = (n - 1) * (n - x);

    let mut records = Vec::with_capacity(cands.candidates.len());
    for c in &cands.candidates {
        let poly = &cands.distinct[c.distinct];
        records.push(phi_of_arc(set, c.arc, &cands.arcs()[c.arc], poly)?);
    }
    let property1: Vec<PropertyCheck> = records
        .iter()
        .map(|r| verify_property1(set, &cands.circle, r))
        .collect();
    let property2: Vec<PropertyCheck> = records.iter().map(verify_property2).collect();

    let mut groups: BTreeMap<(usize, usize), (f64, f64)> = BTreeMap::new();
    for r in &records {
        let g = groups
            .entry((r.phi_vertex, r.phi_wedge))
            .or_insert((r.phi_measure, 0.0));
        g.1 += r.arc.measure;
    }
    let distinct_peas: BTreeSet<(usize, usize)> = groups.keys().copied().collect();
    let m = records.iter().map(|r| r.phi_measure).fold(0.0, f64::max);
    let best_max_angle = cands.best().max_angle();
    let covered_measure = records.iter().map(|r| r.arc.measure).sum();

    let verdict = TheoremVerdict {
        property1: property1.iter().all(|c| c.pass),
        property2: property2.iter().all(|c| c.pass),
        pot_size: distinct_peas.len() <= pot_bound,
        inequality: TAU <= 2.0 * m * pot_bound as f64 + BOUND_TOL,
        grouped_arcs: groups
            .values()
            .all(|&(measure, total)| total <= 2.0 * measure + BOUND_TOL),
        best_within_m: best_max_angle <= TAU - m + BOUND_TOL,
        theorem: best_max_angle <= bound + BOUND_TOL,
    };
    Ok(TheoremReport {
        records,
        property1,
        property2,
        distinct_peas,
        m,
        pot_bound,
        lower_bound_on_m: PI / pot_bound as f64,
        theorem_bound: bound,
        best_max_angle,
        covered_measure,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn star5_center_fan() {
        let s = fixtures::star(5);
        let fan = pea_fan(&s, 5).unwrap();
        assert_eq!(fan.wedges.len(), 5);
        for w in &fan.wedges {
            assert!((w.measure - TAU / 5.0).abs() < 1e-8);
        }
    }

    #[test]
    fn fig1_fans_sum_to_full_turn() {
        let s = fixtures::fig1();
        for &p in s.internal() {
            let fan = pea_fan(&s, p).unwrap();
            assert_eq!(fan.wedges.len(), 7);
            let total: f64 = fan.wedges.iter().map(|w| w.measure).sum();
            assert!((total - TAU).abs() < 1e-9);
            assert!(fan.wedges.iter().all(|w| w.measure > 0.0 && w.measure < PI));
        }
        assert_eq!(pea_fan(&s, 0), Err(GeomError::NotInternal(0)));
    }

    #[test]
    fn fig1_all_records_pass() {
        let s = fixtures::fig1();
        let c = candidate_set(&s).unwrap();
        let report = verify_theorem_with(&s, &c).unwrap();
        assert!(report.verdict.all(), "{:?}", report.verdict);
        assert!(report.m >= PI / 14.0);
        assert!(report.distinct_peas.len() <= 14);
        for r in &report.records {
            assert!(!s.is_extremal(r.phi_vertex));
            assert!(r.phi_measure <= r.min_exterior + 1e-9);
        }
    }

    #[test]
    fn fig2_viewpoint_neighbourhood_has_vertex_22() {
        // representatives of the arcs touching d = (-4, 3) build the figure
        // polygon, whose smallest exterior angle is at (2, 2)
        let s = fixtures::fig1();
        let c = candidate_set(&s).unwrap();
        let theta = c.circle.angle_of(Vec2::new(-4.0, 3.0));
        let arc = c.partition.locate(theta + 1e-9);
        let rec = phi_of_arc(&s, arc, &c.arcs()[arc], c.for_arc(arc).unwrap()).unwrap();
        assert_eq!(s.point(rec.phi_vertex), Point::from_int(2, 2));
        assert!(rec.phi_measure < rec.min_exterior);
        // the minimum exterior angle at s is made of more than one PEA here
        assert!(rec.min_exterior > rec.phi_measure + 1e-6);
    }

    #[test]
    fn star3_records() {
        let s = fixtures::star(3);
        let report = verify_theorem(&s).unwrap();
        assert!(report.verdict.all());
        for r in &report.records {
            assert_eq!(r.phi_vertex, 3);
            assert!((r.phi_measure - TAU / 3.0).abs() < 1e-8);
            assert!(r.arc.measure <= 4.0 * PI / 3.0);
        }
        assert!((report.m - TAU / 3.0).abs() < 1e-8);
        assert!(report.m >= PI / 3.0);
    }

    #[test]
    fn mismatched_record_fails_property1() {
        let s = fixtures::fig1();
        let c = candidate_set(&s).unwrap();
        let cand = c.candidates[0];
        let mut rec = phi_of_arc(
            &s,
            cand.arc,
            &c.arcs()[cand.arc],
            &c.distinct[cand.distinct],
        )
        .unwrap();
        let fan = pea_fan(&s, rec.phi_vertex).unwrap();
        let other = (rec.phi_wedge + fan.wedges.len() / 2) % fan.wedges.len();
        rec.phi_wedge = other;
        rec.phi = fan.wedges[other];
        rec.phi_measure = rec.phi.measure;
        assert!(!verify_property1(&s, &c.circle, &rec).pass);
    }

    #[test]
    fn convex_input_rejected() {
        let s = PointSet::from_ints(&[(0, 0), (4, 1), (5, 5), (1, 3)]).unwrap();
        assert!(matches!(verify_theorem(&s), Err(GeomError::NoReflexVertex)));
    }
}
