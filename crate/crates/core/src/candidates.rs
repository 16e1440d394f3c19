//! The candidate family `{P(d)}`: one polygonization per maximal arc,
//! deduplicated, with the min-max winner and the bound it must satisfy.

use std::collections::HashMap;
use std::f64::consts::{PI, TAU};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::arcs::{
    cut_arcs, viewpoint_admissible, ArcInterval, ArcPartition, REPRESENTATIVE_FRACTIONS,
};
use crate::circle::{min_enclosing_circle, Circle};
use crate::construct::build_polygonization_with;
use crate::error::{GeomError, Result};
use crate::point::Vec2;
use crate::pointset::PointSet;
use crate::polygon::Polygonization;
use crate::simplicity::{SimplicityTest, Sweep};

/// Absolute slack on every angle bound.
pub const BOUND_TOL: f64 = 1e-9;

/// `2π − π/((n−1)(n−x))`, defined for `3 <= x < n`.
pub fn theorem_bound(n: usize, x: usize) -> Result<f64> {
    if n <= 3 {
        return Err(GeomError::TooFewPoints(n));
    }
    if x >= n {
        return Err(GeomError::ConvexPosition { n, x });
    }
    if x < 3 {
        return Err(GeomError::Internal(format!("hull of {x} points")));
    }
    Ok(TAU - PI / ((n - 1) * (n - x)) as f64)
}

/// Conjectured tight bound `2π − 2π/(n−1)`.
pub fn conjecture_bound(n: usize) -> f64 {
    TAU - TAU / (n - 1) as f64
}

#[derive(Clone, Copy)]
pub struct CandidateConfig<'a> {
    pub simplicity: &'a dyn SimplicityTest,
    /// Map arcs to candidates on the current rayon pool.
    pub parallel: bool,
}

impl Default for CandidateConfig<'_> {
    fn default() -> Self {
        CandidateConfig {
            simplicity: &Sweep,
            parallel: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Candidate {
    pub arc: usize,
    /// Index into [`CandidateSet::distinct`].
    pub distinct: usize,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct StageTimings {
    pub circle: Duration,
    pub arcs: Duration,
    pub candidates: Duration,
    pub selection: Duration,
}

#[derive(Debug, Clone)]
pub struct CandidateSet {
    pub circle: Circle,
    pub partition: ArcPartition,
    pub candidates: Vec<Candidate>,
    pub distinct: Vec<Polygonization>,
    pub best: usize,
    pub timings: StageTimings,
}

impl CandidateSet {
    pub fn arcs(&self) -> &[ArcInterval] {
        &self.partition.arcs
    }

    pub fn best(&self) -> &Polygonization {
        &self.distinct[self.best]
    }

    /// Polygonization built for arc `arc`, if the arc was usable.
    pub fn for_arc(&self, arc: usize) -> Option<&Polygonization> {
        self.candidates
            .iter()
            .find(|c| c.arc == arc)
            .map(|c| &self.distinct[c.distinct])
    }

    pub fn usable_arcs(&self) -> usize {
        self.candidates.len()
    }
}

enum ArcOutcome {
    Built(Vec2, Polygonization),
    Unusable,
}

fn build_for_arc(
    set: &PointSet,
    circle: &Circle,
    arc: &ArcInterval,
    checker: &dyn SimplicityTest,
) -> Result<ArcOutcome> {
    let mut failure = None;
    for f in REPRESENTATIVE_FRACTIONS {
        let d = circle.at(arc.start_angle + f * arc.measure);
        if !viewpoint_admissible(set, circle, d) {
            continue;
        }
        match build_polygonization_with(set, d, checker) {
            Ok(p) => return Ok(ArcOutcome::Built(d, p)),
            Err(GeomError::DegenerateViewpoint(_)) => continue,
            Err(e) => failure = Some(e),
        }
    }
    match failure {
        Some(e) => Err(e),
        None => Ok(ArcOutcome::Unusable),
    }
}

pub fn candidate_set(set: &PointSet) -> Result<CandidateSet> {
    candidate_set_with(set, CandidateConfig::default())
}

pub fn candidate_set_with(set: &PointSet, cfg: CandidateConfig<'_>) -> Result<CandidateSet> {
    let t0 = Instant::now();
    let circle = min_enclosing_circle(set.points())?;
    let t1 = Instant::now();
    let mut partition = cut_arcs(set, &circle);
    let t2 = Instant::now();

    let work = |arc: &ArcInterval| build_for_arc(set, &circle, arc, cfg.simplicity);
    let outcomes: Vec<Result<ArcOutcome>> = if cfg.parallel {
        partition.arcs.par_iter().map(work).collect()
    } else {
        partition.arcs.iter().map(work).collect()
    };

    let mut candidates = Vec::new();
    let mut distinct: Vec<Polygonization> = Vec::new();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    for (arc_idx, outcome) in outcomes.into_iter().enumerate() {
        match outcome? {
            ArcOutcome::Built(d, poly) => {
                partition.arcs[arc_idx].representative = Some(d);
                let next = distinct.len();
                let slot = *index.entry(poly.canonical().to_vec()).or_insert(next);
                if slot == next {
                    distinct.push(poly);
                }
                candidates.push(Candidate {
                    arc: arc_idx,
                    distinct: slot,
                });
            }
            ArcOutcome::Unusable => {
                let a = &partition.arcs[arc_idx];
                log::warn!(
                    "arc at {:.6} (measure {:.3e}) has no admissible viewpoint; skipped",
                    a.start_angle,
                    a.measure
                );
            }
        }
    }
    let t3 = Instant::now();
    if distinct.is_empty() {
        return Err(GeomError::Internal("no usable arc".into()));
    }
    let best = (0..distinct.len())
        .min_by(|&a, &b| distinct[a].rank_cmp(&distinct[b]))
        .unwrap();
    let t4 = Instant::now();
    Ok(CandidateSet {
        circle,
        partition,
        candidates,
        distinct,
        best,
        timings: StageTimings {
            circle: t1 - t0,
            arcs: t2 - t1,
            candidates: t3 - t2,
            selection: t4 - t3,
        },
    })
}

/// A best candidate exceeding the theorem bound.
#[derive(Debug, Clone, PartialEq)]
pub struct Falsification {
    pub max_angle: f64,
    pub bound: f64,
    pub excess: f64,
    pub order: Vec<usize>,
    pub max_vertex: usize,
}

#[derive(Debug, Clone)]
pub struct BestPolygonization {
    pub polygon: Polygonization,
    pub max_angle: f64,
    /// `None` for sets in convex position.
    pub bound: Option<f64>,
    pub falsification: Option<Falsification>,
}

/// Checks the winner of `cands` against the theorem bound.
pub fn assess_best(set: &PointSet, cands: &CandidateSet) -> BestPolygonization {
    let polygon = cands.best().clone();
    let max_angle = polygon.max_angle();
    let bound = theorem_bound(set.len(), set.x_count()).ok();
    let falsification = bound
        .filter(|&b| max_angle > b + BOUND_TOL)
        .map(|b| Falsification {
            max_angle,
            bound: b,
            excess: max_angle - b,
            order: polygon.order().to_vec(),
            max_vertex: polygon.max_vertex(),
        });
    if let Some(f) = &falsification {
        log::error!(
            "bound violated: max angle {} > {} for order {:?}",
            f.max_angle,
            f.bound,
            f.order
        );
    }
    BestPolygonization {
        polygon,
        max_angle,
        bound,
        falsification,
    }
}

pub fn best_polygonization(set: &PointSet) -> Result<BestPolygonization> {
    let cands = candidate_set(set)?;
    Ok(assess_best(set, &cands))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::polygon::canonical_cycle;

    #[test]
    fn bound_values() {
        assert!((theorem_bound(8, 6).unwrap() - (TAU - PI / 14.0)).abs() < 1e-15);
        assert!((theorem_bound(8, 6).unwrap() - 6.0588).abs() < 1e-4);
        assert!((theorem_bound(4, 3).unwrap() - (TAU - PI / 3.0)).abs() < 1e-15);
        assert!((theorem_bound(10, 7).unwrap() - (TAU - PI / 27.0)).abs() < 1e-15);
        assert_eq!(
            theorem_bound(6, 6),
            Err(GeomError::ConvexPosition { n: 6, x: 6 })
        );
        assert!(theorem_bound(3, 3).is_err());
    }

    #[test]
    fn convex_set_single_candidate() {
        let s = PointSet::from_ints(&[(0, 0), (4, -1), (6, 2), (4, 5), (0, 4), (-2, 2)]).unwrap();
        assert!(s.is_convex_position());
        let c = candidate_set(&s).unwrap();
        assert_eq!(c.distinct.len(), 1);
        assert_eq!(c.best().canonical(), canonical_cycle(s.hull()).as_slice());
        let b = best_polygonization(&s).unwrap();
        assert!(b.max_angle < PI);
        assert!(b.bound.is_none() && b.falsification.is_none());
    }

    #[test]
    fn fig1_candidates() {
        let s = fixtures::fig1();
        let c = candidate_set(&s).unwrap();
        assert!(c.arcs().len() <= 56);
        assert!(c.distinct.len() <= c.arcs().len());
        for p in &c.distinct {
            assert!(crate::simplicity::pairwise_is_simple(s.points(), p.order()));
            assert_eq!(p.len(), 8);
            for &r in p.reflex_vertices() {
                assert!(!s.is_extremal(r));
            }
        }
        let b = assess_best(&s, &c);
        assert!(b.max_angle <= TAU - PI / 14.0 + BOUND_TOL);
        assert!(b.falsification.is_none());
    }

    #[test]
    fn star3_three_distinct() {
        let s = fixtures::star(3);
        let c = candidate_set(&s).unwrap();
        assert_eq!(c.distinct.len(), 3);
        for p in &c.distinct {
            assert_eq!(p.max_vertex(), 3);
            assert!((p.max_angle() - 4.0 * PI / 3.0).abs() < 1e-8);
        }
    }

    #[test]
    fn star5_within_bound() {
        let s = fixtures::star(5);
        let b = best_polygonization(&s).unwrap();
        assert!(b.max_angle <= TAU - PI / 5.0 + BOUND_TOL);
        assert!((b.max_angle - (TAU - TAU / 5.0)).abs() < 1e-8);
    }

    #[test]
    fn sequential_equals_parallel() {
        let s = fixtures::fig1();
        let a = candidate_set_with(
            &s,
            CandidateConfig {
                parallel: false,
                ..Default::default()
            },
        )
        .unwrap();
        let b = candidate_set_with(
            &s,
            CandidateConfig {
                parallel: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(a.distinct, b.distinct);
        assert_eq!(a.candidates, b.candidates);
        assert_eq!(a.best, b.best);
    }
}
