//! Min-max interior angle polygonizations of planar point sets.
//!
//! For a set `S` of `n > 3` points in general position with `x < n` hull
//! vertices, the viewpoint construction over the smallest enclosing circle
//! yields a polygonization whose interior angles are all at most
//! `2π − π/((n−1)(n−x))`. This crate builds that candidate family, picks
//! the best member, re-checks the potential-exterior-angle argument behind
//! the bound, and provides an exhaustive oracle for small `n`.
//!
//! Combinatorial decisions (orientation, hull, simplicity, general
//! position) are exact over coordinates scaled to a `10^-9` grid; angles,
//! the circle and arc parameters are `f64`.

pub mod angle;
pub mod arcs;
pub mod candidates;
pub mod circle;
pub mod construct;
pub mod error;
pub mod fixtures;
pub mod oracle;
pub mod pea;
pub mod point;
pub mod pointset;
pub mod polygon;
pub mod predicates;
pub mod simplicity;
pub mod strategy;

pub use arcs::{maximal_arcs, representative, ArcInterval, ArcPartition};
pub use candidates::{
    best_polygonization, candidate_set, candidate_set_with, conjecture_bound, theorem_bound,
    BestPolygonization, CandidateConfig, CandidateSet, BOUND_TOL,
};
pub use circle::{min_enclosing_circle, Circle};
pub use construct::build_polygonization;
pub use error::{GeomError, Result};
pub use oracle::{
    conjecture_check, enumerate_simple, oracle_minmax, ConjectureVerdict, OracleConfig,
    OracleResult,
};
pub use pea::{
    pea_fan, phi_of_arc, verify_property1, verify_property2, verify_theorem, PeaFan, PotRecord,
    TheoremReport,
};
pub use point::{Point, Vec2};
pub use pointset::{convex_hull, general_position, PointSet};
pub use polygon::{canonical_cycle, interior_angles, Polygonization};
pub use predicates::{orientation, Orientation};
pub use simplicity::{is_simple, SimplicityTest};
pub use strategy::{simplicity_tests, solvers, MinMaxSolver, SolveOptions};
