//! JSON run reports. Key order is the struct field order; floats carry 12
//! significant digits so identical runs print identical bytes.

use maxangle_core::candidates::{CandidateSet, StageTimings};
use maxangle_core::oracle::{ConjectureOutcome, ConjectureVerdict};
use maxangle_core::pea::TheoremReport;
use maxangle_core::{Circle, OracleResult, PointSet, Polygonization};
use serde::Serialize;

/// Rounds to 12 significant digits.
pub fn sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Units {
    pub degrees: bool,
}

impl Units {
    pub fn angle(&self, rad: f64) -> f64 {
        sig12(if self.degrees { rad.to_degrees() } else { rad })
    }

    pub fn name(&self) -> &'static str {
        if self.degrees {
            "degrees"
        } else {
            "radians"
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotRun,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Debug, Serialize)]
pub struct InputSummary {
    pub n: usize,
    pub x_count: usize,
    pub hull: Vec<usize>,
    pub internal: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct CircleSummary {
    pub center: [f64; 2],
    pub radius: f64,
    pub support: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct ArcSummary {
    pub count: usize,
    pub usable: usize,
    pub merged_cut_points: usize,
    pub total_measure: f64,
    pub measures: Vec<f64>,
}

#[derive(Debug, Serialize)]
pub struct CandidateSummary {
    pub count: usize,
    pub distinct: usize,
}

#[derive(Debug, Serialize)]
pub struct BestSummary {
    pub order: Vec<usize>,
    pub max_angle: f64,
    pub max_vertex: usize,
    pub reflex_vertices: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct Verdicts {
    pub theorem: Verdict,
    pub property1: Verdict,
    pub property2: Verdict,
}

#[derive(Debug, Serialize)]
pub struct PotSummary {
    pub records: usize,
    pub distinct_peas: usize,
    pub pot_bound: usize,
    pub lower_bound_on_m: f64,
    pub covered_measure: f64,
    pub inequality: Verdict,
    pub grouped_arcs: Verdict,
    pub best_within_m: Verdict,
    pub failures: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct OracleBlock {
    pub num_simple: usize,
    pub minmax: f64,
    pub argmin: Vec<usize>,
    pub conjecture_bound: f64,
    pub conjecture: &'static str,
}

#[derive(Debug, Serialize)]
pub struct Timings {
    pub circle_ms: f64,
    pub arcs_ms: f64,
    pub candidates_ms: f64,
    pub selection_ms: f64,
    pub verification_ms: Option<f64>,
    pub oracle_ms: Option<f64>,
}

impl Timings {
    pub fn from_stages(t: &StageTimings) -> Self {
        let ms = |d: std::time::Duration| sig12(d.as_secs_f64() * 1e3);
        Timings {
            circle_ms: ms(t.circle),
            arcs_ms: ms(t.arcs),
            candidates_ms: ms(t.candidates),
            selection_ms: ms(t.selection),
            verification_ms: None,
            oracle_ms: None,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub label: Option<String>,
    pub angle_unit: &'static str,
    pub solver: String,
    pub input: InputSummary,
    pub circle: CircleSummary,
    pub arcs: Option<ArcSummary>,
    pub candidates: CandidateSummary,
    pub best: BestSummary,
    pub theorem_bound: Option<f64>,
    pub conjecture_bound: f64,
    pub m: Option<f64>,
    pub verdicts: Verdicts,
    pub pot: Option<PotSummary>,
    pub oracle: Option<OracleBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

pub fn input_summary(set: &PointSet) -> InputSummary {
    InputSummary {
        n: set.len(),
        x_count: set.x_count(),
        hull: set.hull().to_vec(),
        internal: set.internal().to_vec(),
    }
}

pub fn circle_summary(c: &Circle) -> CircleSummary {
    CircleSummary {
        center: [sig12(c.center.x), sig12(c.center.y)],
        radius: sig12(c.radius),
        support: c.support.clone(),
    }
}

pub fn arc_summary(c: &CandidateSet, units: Units) -> ArcSummary {
    ArcSummary {
        count: c.arcs().len(),
        usable: c.usable_arcs(),
        merged_cut_points: c.partition.merged_cuts,
        total_measure: units.angle(c.partition.total_measure()),
        measures: c.arcs().iter().map(|a| units.angle(a.measure)).collect(),
    }
}

pub fn best_summary(p: &Polygonization, units: Units) -> BestSummary {
    BestSummary {
        order: p.canonical().to_vec(),
        max_angle: units.angle(p.max_angle()),
        max_vertex: p.max_vertex(),
        reflex_vertices: p.reflex_vertices().to_vec(),
    }
}

pub fn pot_summary(r: &TheoremReport, units: Units) -> PotSummary {
    let failures = r
        .records
        .iter()
        .zip(r.property1.iter().zip(&r.property2))
        .flat_map(|(rec, (p1, p2))| {
            [("property1", p1), ("property2", p2)]
                .into_iter()
                .filter_map(move |(name, c)| {
                    c.witness
                        .as_ref()
                        .map(|w| format!("arc {}: {name}: {w}", rec.arc_index))
                })
        })
        .collect();
    PotSummary {
        records: r.records.len(),
        distinct_peas: r.distinct_peas.len(),
        pot_bound: r.pot_bound,
        lower_bound_on_m: units.angle(r.lower_bound_on_m),
        covered_measure: units.angle(r.covered_measure),
        inequality: Verdict::from_bool(r.verdict.inequality && r.verdict.pot_size),
        grouped_arcs: Verdict::from_bool(r.verdict.grouped_arcs),
        best_within_m: Verdict::from_bool(r.verdict.best_within_m),
        failures,
    }
}

pub fn conjecture_label(outcome: &ConjectureOutcome) -> &'static str {
    match outcome.verdict {
        ConjectureVerdict::Holds { equality: true } => "holds-with-equality",
        ConjectureVerdict::Holds { equality: false } => "holds",
        ConjectureVerdict::Violated => "violated",
    }
}

pub fn oracle_block(outcome: &ConjectureOutcome, units: Units) -> OracleBlock {
    let r: &OracleResult = &outcome.result;
    OracleBlock {
        num_simple: r.num_simple,
        minmax: units.angle(r.minmax_angle),
        argmin: r.argmin.clone(),
        conjecture_bound: units.angle(r.conjecture_bound),
        conjecture: conjecture_label(outcome),
    }
}

#[derive(Debug, Serialize)]
pub struct OracleReport {
    pub label: Option<String>,
    pub angle_unit: &'static str,
    pub n: usize,
    pub x_count: usize,
    pub num_simple: usize,
    pub minmax_angle: f64,
    pub argmin: Vec<usize>,
    pub conjecture_bound: f64,
    pub theorem_bound: Option<f64>,
    pub satisfies_conjecture: bool,
    pub conjecture: &'static str,
    pub theorem: Verdict,
}

pub fn oracle_report(
    set: &PointSet,
    label: Option<String>,
    outcome: &ConjectureOutcome,
    units: Units,
) -> OracleReport {
    let r = &outcome.result;
    OracleReport {
        label,
        angle_unit: units.name(),
        n: r.n,
        x_count: set.x_count(),
        num_simple: r.num_simple,
        minmax_angle: units.angle(r.minmax_angle),
        argmin: r.argmin.clone(),
        conjecture_bound: units.angle(r.conjecture_bound),
        theorem_bound: r.theorem_bound.map(|b| units.angle(b)),
        satisfies_conjecture: r.satisfies_conjecture,
        conjecture: conjecture_label(outcome),
        theorem: match r.theorem_bound {
            Some(b) => Verdict::from_bool(r.minmax_angle <= b + maxangle_core::BOUND_TOL),
            None => Verdict::NotRun,
        },
    }
}
