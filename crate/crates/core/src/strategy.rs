//! Named, runtime-selectable algorithm variants.
//!
//! Min-max solvers and simplicity tests are registered by name so the CLI
//! (or any caller) can pick one from configuration.

use std::fmt;

use crate::candidates::{candidate_set_with, CandidateConfig, CandidateSet};
use crate::error::{GeomError, Result};
use crate::oracle::{oracle_minmax, OracleConfig};
use crate::pointset::PointSet;
use crate::polygon::{polygonize_order, Polygonization};
use crate::simplicity::{Pairwise, SimplicityTest, Sweep};

/// Options shared by solvers.
#[derive(Clone, Copy)]
pub struct SolveOptions<'a> {
    pub simplicity: &'a dyn SimplicityTest,
    pub parallel: bool,
    pub oracle_limit: usize,
}

impl Default for SolveOptions<'_> {
    fn default() -> Self {
        SolveOptions {
            simplicity: &Sweep,
            parallel: true,
            oracle_limit: crate::oracle::DEFAULT_LIMIT,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Solution {
    pub polygon: Polygonization,
    /// Polygonizations examined (distinct candidates or simple polygons).
    pub examined: usize,
    /// The full candidate family, for solvers that build one.
    pub candidates: Option<CandidateSet>,
}

/// Produces a polygonization with small maximum interior angle.
pub trait MinMaxSolver: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn solve(&self, set: &PointSet, opts: &SolveOptions<'_>) -> Result<Solution>;
}

/// Best of the viewpoint candidates `P(d)`, `O(n^3 log n)`.
pub struct CandidateSolver;

/// Exhaustive search over every simple polygonization.
pub struct OracleSolver;

impl MinMaxSolver for CandidateSolver {
    fn name(&self) -> &'static str {
        "candidates"
    }

    fn description(&self) -> &'static str {
        "best viewpoint polygonization over the maximal arcs of the enclosing circle"
    }

    fn solve(&self, set: &PointSet, opts: &SolveOptions<'_>) -> Result<Solution> {
        let cands = candidate_set_with(
            set,
            CandidateConfig {
                simplicity: opts.simplicity,
                parallel: opts.parallel,
            },
        )?;
        Ok(Solution {
            examined: cands.distinct.len(),
            polygon: cands.best().clone(),
            candidates: Some(cands),
        })
    }
}

impl MinMaxSolver for OracleSolver {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn description(&self) -> &'static str {
        "exhaustive enumeration of simple polygonizations (small n only)"
    }

    fn solve(&self, set: &PointSet, opts: &SolveOptions<'_>) -> Result<Solution> {
        let r = oracle_minmax(
            set,
            OracleConfig {
                limit: opts.oracle_limit,
                parallel: opts.parallel,
            },
        )?;
        let polygon = polygonize_order(set, &r.argmin, opts.simplicity)?;
        Ok(Solution {
            polygon,
            examined: r.num_simple,
            candidates: None,
        })
    }
}

/// Name-keyed collection of boxed strategies, in registration order.
pub struct Registry<T: ?Sized> {
    entries: Vec<Box<T>>,
}

impl<T: ?Sized> Default for Registry<T> {
    fn default() -> Self {
        Registry {
            entries: Vec::new(),
        }
    }
}

pub trait Named {
    fn entry_name(&self) -> &'static str;
}

impl Named for dyn MinMaxSolver {
    fn entry_name(&self) -> &'static str {
        self.name()
    }
}

impl Named for dyn SimplicityTest {
    fn entry_name(&self) -> &'static str {
        self.name()
    }
}

impl<T: ?Sized + Named> Registry<T> {
    /// Adds `entry`, replacing any entry of the same name.
    pub fn register(&mut self, entry: Box<T>) {
        let name = entry.entry_name();
        match self.entries.iter().position(|e| e.entry_name() == name) {
            Some(i) => self.entries[i] = entry,
            None => self.entries.push(entry),
        }
    }

    pub fn get(&self, name: &str) -> Result<&T> {
        self.entries
            .iter()
            .find(|e| e.entry_name() == name)
            .map(|b| b.as_ref())
            .ok_or_else(|| GeomError::UnknownStrategy(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.entry_name()).collect()
    }
}

impl<T: ?Sized + Named> fmt::Debug for Registry<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names()).finish()
    }
}

pub fn solvers() -> Registry<dyn MinMaxSolver> {
    let mut r: Registry<dyn MinMaxSolver> = Registry::default();
    r.register(Box::new(CandidateSolver));
    r.register(Box::new(OracleSolver));
    r
}

pub fn simplicity_tests() -> Registry<dyn SimplicityTest> {
    let mut r: Registry<dyn SimplicityTest> = Registry::default();
    r.register(Box::new(Sweep));
    r.register(Box::new(Pairwise));
    r
}
