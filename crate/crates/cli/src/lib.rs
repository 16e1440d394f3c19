//! Command-line surface for `maxangle-core`: point files, generators, JSON
//! reports and SVG figures.

pub mod app;
pub mod generate;
pub mod pointfile;
pub mod report;
pub mod svg;

pub use app::run_cli;
pub use generate::{gen_random, gen_star, BBox};
pub use pointfile::{parse_pointset, PointSetFile};
pub use svg::{render_svg, SvgScene};
