//! Exhaustive ground truth for small sets: every simple polygonization,
//! the exact min-max interior angle, and the conjectured bound.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::candidates::{conjecture_bound, theorem_bound, BOUND_TOL};
use crate::error::{GeomError, Result};
use crate::pointset::PointSet;
use crate::polygon::Polygonization;
use crate::predicates::segments_cross_properly;

pub const DEFAULT_LIMIT: usize = 10;

#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    pub limit: usize,
    pub parallel: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            limit: DEFAULT_LIMIT,
            parallel: true,
        }
    }
}

struct Search<'a, F> {
    set: &'a PointSet,
    path: Vec<usize>,
    used: Vec<bool>,
    emit: F,
}

impl<F: FnMut(&[usize])> Search<'_, F> {
    fn crosses_path(&self, from: usize, to: usize, skip_first: bool) -> bool {
        let pts = self.set.points();
        let (a, b) = (pts[from], pts[to]);
        let len = self.path.len();
        // the edge ending at `from` is adjacent; so is the first edge when closing
        let lo = usize::from(skip_first);
        (lo..len.saturating_sub(2))
            .any(|i| segments_cross_properly(a, b, pts[self.path[i]], pts[self.path[i + 1]]))
    }

    fn extend(&mut self) {
        let n = self.set.len();
        let last = *self.path.last().unwrap();
        if self.path.len() == n {
            if !self.crosses_path(last, self.path[0], true) {
                (self.emit)(&self.path);
            }
            return;
        }
        let second = self.path[1];
        // reflection quotient: the last vertex must exceed the second
        if !(second + 1..n).any(|v| !self.used[v]) {
            return;
        }
        let closing = self.path.len() == n - 1;
        for v in 1..n {
            if self.used[v] || (closing && v < second) {
                continue;
            }
            if self.crosses_path(last, v, false) {
                continue;
            }
            self.used[v] = true;
            self.path.push(v);
            self.extend();
            self.path.pop();
            self.used[v] = false;
        }
    }
}

fn check_limit(set: &PointSet, limit: usize) -> Result<()> {
    if set.len() > limit {
        return Err(GeomError::OracleLimit {
            n: set.len(),
            limit,
        });
    }
    Ok(())
}

/// Visits every simple polygonization whose canonical form starts `0, second`.
fn for_each_with_second(set: &PointSet, second: usize, emit: impl FnMut(&[usize])) {
    let n = set.len();
    let mut used = vec![false; n];
    used[0] = true;
    used[second] = true;
    let mut search = Search {
        set,
        path: vec![0, second],
        used,
        emit,
    };
    search.extend();
}

/// Calls `emit` with the canonical order of every simple polygonization.
pub fn for_each_simple(set: &PointSet, limit: usize, mut emit: impl FnMut(&[usize])) -> Result<()> {
    check_limit(set, limit)?;
    for second in 1..set.len() {
        for_each_with_second(set, second, &mut emit);
    }
    Ok(())
}

/// All simple polygonizations, as canonical orders in lexicographic order.
pub fn enumerate_simple(set: &PointSet, limit: usize) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for_each_simple(set, limit, |o| out.push(o.to_vec()))?;
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    pub n: usize,
    pub num_simple: usize,
    pub minmax_angle: f64,
    pub argmin: Vec<usize>,
    pub conjecture_bound: f64,
    /// `None` in convex position.
    pub theorem_bound: Option<f64>,
    pub satisfies_conjecture: bool,
}

struct Best {
    count: usize,
    angle: f64,
    order: Vec<usize>,
}

impl Best {
    fn empty() -> Self {
        Best {
            count: 0,
            angle: f64::INFINITY,
            order: Vec::new(),
        }
    }

    fn better(&self, angle: f64, order: &[usize]) -> bool {
        match angle.total_cmp(&self.angle) {
            Ordering::Less => true,
            Ordering::Equal => order < self.order.as_slice(),
            Ordering::Greater => false,
        }
    }

    fn merge(mut self, other: Best) -> Best {
        self.count += other.count;
        if other.count > 0 && self.better(other.angle, &other.order) {
            self.angle = other.angle;
            self.order = other.order;
        }
        self
    }
}

fn best_with_second(set: &PointSet, second: usize) -> Best {
    let mut best = Best::empty();
    for_each_with_second(set, second, |order| {
        best.count += 1;
        let angle = Polygonization::measure(set, order).max_angle();
        if best.better(angle, order) {
            best.angle = angle;
            best.order = order.to_vec();
        }
    });
    best
}

/// Exact minimum, over all simple polygonizations, of the max interior angle.
pub fn oracle_minmax(set: &PointSet, cfg: OracleConfig) -> Result<OracleResult> {
    check_limit(set, cfg.limit)?;
    let n = set.len();
    let best = if cfg.parallel {
        (1..n)
            .into_par_iter()
            .map(|s| best_with_second(set, s))
            .collect::<Vec<_>>()
    } else {
        (1..n).map(|s| best_with_second(set, s)).collect()
    }
    .into_iter()
    .fold(Best::empty(), Best::merge);
    if best.count == 0 {
        return Err(GeomError::Internal("no simple polygonization found".into()));
    }
    let conj = conjecture_bound(n);
    Ok(OracleResult {
        n,
        num_simple: best.count,
        minmax_angle: best.angle,
        argmin: best.order,
        conjecture_bound: conj,
        theorem_bound: theorem_bound(n, set.x_count()).ok(),
        satisfies_conjecture: best.angle <= conj + BOUND_TOL,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum ConjectureVerdict {
    Holds { equality: bool },
    Violated,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConjectureOutcome {
    pub verdict: ConjectureVerdict,
    pub result: OracleResult,
}

pub fn conjecture_check(set: &PointSet, cfg: OracleConfig) -> Result<ConjectureOutcome> {
    let result = oracle_minmax(set, cfg)?;
    let verdict = if result.satisfies_conjecture {
        ConjectureVerdict::Holds {
            equality: (result.minmax_angle - result.conjecture_bound).abs() <= BOUND_TOL,
        }
    } else {
        log::warn!(
            "conjecture violated: minmax {} > {}",
            result.minmax_angle,
            result.conjecture_bound
        );
        ConjectureVerdict::Violated
    };
    Ok(ConjectureOutcome { verdict, result })
}
