//! Command dispatch. Exit codes: 0 success, 1 a verdict failed (witness
//! written), 2 input or usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use maxangle_core::candidates::{assess_best, CandidateConfig};
use maxangle_core::oracle::{conjecture_check, ConjectureVerdict, OracleConfig, DEFAULT_LIMIT};
use maxangle_core::pea::verify_theorem_with;
use maxangle_core::point::parse_scaled;
use maxangle_core::{
    candidate_set_with, conjecture_bound, min_enclosing_circle, simplicity_tests, solvers,
    theorem_bound, GeomError, Point, PointSet, SolveOptions, BOUND_TOL,
};
use serde::Serialize;
use serde_json::Value;

use crate::generate::{gen_random, gen_star, BBox};
use crate::pointfile::{parse_pointset, InputError, PointSetFile};
use crate::report::{self, sig12, Units, Verdict};
use crate::svg::{write_svg, SvgScene};

pub const ORACLE_LIMIT_ENV: &str = "MAXANGLE_ORACLE_LIMIT";
pub const DEFAULT_WITNESS: &str = "maxangle-witness.json";

#[derive(Debug, Parser)]
#[command(
    name = "maxangle",
    version,
    about = "Min-max interior angle polygonizations of planar point sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Point file: {"points": [[x, y], ...], "label": "..."}
    #[arg(long)]
    input: PathBuf,
    /// Write the JSON report here instead of stdout
    #[arg(long)]
    report: Option<PathBuf>,
    /// Worker threads (1 = sequential)
    #[arg(long)]
    parallel: Option<usize>,
    /// Report angles in degrees
    #[arg(long)]
    degrees: bool,
    /// Where to persist a counterexample on a failed verdict
    #[arg(long, default_value = DEFAULT_WITNESS)]
    witness: PathBuf,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the best polygonization and check it against the bound
    Polygonize {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Min-max solver (see `strategies`)
        #[arg(long, default_value = "candidates")]
        solver: String,
        /// Simplicity test (see `strategies`)
        #[arg(long, default_value = "sweep")]
        simplicity: String,
        /// Oracle size limit when --solver oracle
        #[arg(long)]
        limit: Option<usize>,
        /// Include stage timings (makes the report run-dependent)
        #[arg(long)]
        timings: bool,
    },
    /// Check the bound together with the PEA properties behind it
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        timings: bool,
    },
    /// Exhaustive min-max over all simple polygonizations
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Test the conjectured bound 2π − 2π/(n−1) with the oracle
    Conjecture {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Print 2π − π/((n−1)(n−x))
    Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: usize,
        #[arg(long)]
        degrees: bool,
    },
    /// Generate point files
    #[command(subcommand)]
    Gen(GenCommand),
    /// List registered solvers and simplicity tests
    Strategies,
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    /// Uniform points on a 10^6 grid, in general position
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// xmin,ymin,xmax,ymax
        #[arg(long, default_value = "0,0,1,1", allow_hyphen_values = true)]
        bbox: String,
    },
    /// m equally spaced unit-circle points plus the center
    Star {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Verdict(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<GeomError> for Failure {
    fn from(e: GeomError) -> Self {
        match e {
            GeomError::Internal(msg) => Failure::Verdict(format!("internal inconsistency: {msg}")),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

struct Io<'a> {
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn emit<T: Serialize>(&mut self, value: &T, dest: Option<&Path>) -> Outcome {
        let mut text = serde_json::to_string_pretty(value).expect("report serializes");
        text.push('\n');
        match dest {
            Some(p) => std::fs::write(p, text)
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
            None => self
                .out
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Usage(e.to_string())),
        }
    }
}

fn write_witness(
    path: &Path,
    kind: &str,
    set: &PointSet,
    label: Option<&str>,
    details: Value,
) -> Outcome {
    let mut doc = PointSetFile::new(set.points().to_vec(), label.map(str::to_string)).to_json();
    let obj = doc.as_object_mut().expect("object");
    obj.insert("kind".into(), Value::String(kind.to_string()));
    obj.insert("details".into(), details);
    let mut text = serde_json::to_string_pretty(&doc).expect("witness serializes");
    text.push('\n');
    std::fs::write(path, text)
        .map_err(|e| Failure::Usage(format!("cannot write witness {}: {e}", path.display())))
}

fn with_pool<T: Send>(
    threads: Option<usize>,
    job: impl FnOnce(bool) -> T + Send,
) -> Result<T, Failure> {
    match threads {
        None => Ok(job(true)),
        Some(0) => Err(Failure::Usage("--parallel must be at least 1".into())),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Failure::Usage(format!("thread pool: {e}")))?;
            Ok(pool.install(|| job(n > 1)))
        }
    }
}

fn oracle_limit(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(l) = flag {
        return Ok(l);
    }
    match std::env::var(ORACLE_LIMIT_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{ORACLE_LIMIT_ENV}={v:?} is not a count"))),
        Err(_) => Ok(DEFAULT_LIMIT),
    }
}

fn parse_bbox(text: &str) -> Result<BBox, Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 4 {
        return Err(Failure::Usage(format!(
            "--bbox expects xmin,ymin,xmax,ymax, got {text:?}"
        )));
    }
    let v: Vec<i64> = parts
        .iter()
        .map(|p| parse_scaled(p))
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(BBox {
        min: Point::from_scaled(v[0], v[1]),
        max: Point::from_scaled(v[2], v[3]),
    })
}

fn polygonize(
    io: &mut Io<'_>,
    common: &Common,
    svg: Option<&Path>,
    solver: &str,
    simplicity: &str,
    limit: Option<usize>,
    timings: bool,
) -> Outcome {
    let units = Units {
        degrees: common.degrees,
    };
    let (set, label) = parse_pointset(&common.input)?;
    let registry = solvers();
    let checks = simplicity_tests();
    let solver = registry.get(solver)?;
    let checker = checks.get(simplicity)?;
    let limit = oracle_limit(limit)?;
    let started = Instant::now();
    let solution = with_pool(common.parallel, |parallel| {
        solver.solve(
            &set,
            &SolveOptions {
                simplicity: checker,
                parallel,
                oracle_limit: limit,
            },
        )
    })??;
    let elapsed = started.elapsed();
    let circle = match &solution.candidates {
        Some(c) => c.circle.clone(),
        None => min_enclosing_circle(set.points())?,
    };
    let bound = theorem_bound(set.len(), set.x_count()).ok();
    let max_angle = solution.polygon.max_angle();
    let theorem = match bound {
        Some(b) => Verdict::from_bool(max_angle <= b + BOUND_TOL),
        None => Verdict::NotRun,
    };
    let report = report::RunReport {
        label: label.clone(),
        angle_unit: units.name(),
        solver: solver.name().to_string(),
        input: report::input_summary(&set),
        circle: report::circle_summary(&circle),
        arcs: solution
            .candidates
            .as_ref()
            .map(|c| report::arc_summary(c, units)),
        candidates: report::CandidateSummary {
            count: solution
                .candidates
                .as_ref()
                .map_or(solution.examined, |c| c.usable_arcs()),
            distinct: solution.examined,
        },
        best: report::best_summary(&solution.polygon, units),
        theorem_bound: bound.map(|b| units.angle(b)),
        conjecture_bound: units.angle(conjecture_bound(set.len())),
        m: None,
        verdicts: report::Verdicts {
            theorem,
            property1: Verdict::NotRun,
            property2: Verdict::NotRun,
        },
        pot: None,
        oracle: None,
        timings: timings.then(|| match &solution.candidates {
            Some(c) => report::Timings::from_stages(&c.timings),
            None => report::Timings {
                circle_ms: 0.0,
                arcs_ms: 0.0,
                candidates_ms: 0.0,
                selection_ms: 0.0,
                verification_ms: None,
                oracle_ms: Some(sig12(elapsed.as_secs_f64() * 1e3)),
            },
        }),
    };
    if let Some(path) = svg {
        let scene = SvgScene {
            set: &set,
            circle: &circle,
            polygon: &solution.polygon,
            label: label.as_deref(),
            cuts: solution
                .candidates
                .as_ref()
                .map(|c| c.partition.cuts.as_slice()),
            phi: None,
        };
        write_svg(&scene, path)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    io.emit(&report, common.report.as_deref())?;
    if theorem == Verdict::Fail {
        let details = serde_json::to_value(&report).expect("report serializes");
        write_witness(
            &common.witness,
            "theorem-bound",
            &set,
            label.as_deref(),
            details,
        )?;
        return Err(Failure::Verdict(format!(
            "max angle exceeds the bound; witness in {}",
            common.witness.display()
        )));
    }
    Ok(())
}

fn verify(io: &mut Io<'_>, common: &Common, svg: Option<&Path>, timings: bool) -> Outcome {
    let units = Units {
        degrees: common.degrees,
    };
    let (set, label) = parse_pointset(&common.input)?;
    let checker = simplicity_tests();
    let cfg_checker = checker.get("sweep")?;
    let (cands, theorem_report, verify_time) =
        with_pool(common.parallel, |parallel| -> Result<_, GeomError> {
            let cands = candidate_set_with(
                &set,
                CandidateConfig {
                    simplicity: cfg_checker,
                    parallel,
                },
            )?;
            let t = Instant::now();
            let rep = if set.is_convex_position() {
                None
            } else {
                Some(verify_theorem_with(&set, &cands)?)
            };
            Ok((cands, rep, t.elapsed()))
        })??;
    let best = assess_best(&set, &cands);

    let (verdicts, m, pot, phi) = match &theorem_report {
        Some(r) => {
            let v = r.verdict;
            let theorem_ok =
                v.theorem && v.inequality && v.pot_size && v.grouped_arcs && v.best_within_m;
            let crit = r
                .records
                .iter()
                .max_by(|a, b| a.phi_measure.total_cmp(&b.phi_measure))
                .map(|rec| (rec.phi_vertex, rec.phi));
            (
                report::Verdicts {
                    theorem: Verdict::from_bool(theorem_ok),
                    property1: Verdict::from_bool(v.property1),
                    property2: Verdict::from_bool(v.property2),
                },
                Some(units.angle(r.m)),
                Some(report::pot_summary(r, units)),
                crit,
            )
        }
        None => (
            report::Verdicts {
                theorem: Verdict::NotRun,
                property1: Verdict::NotRun,
                property2: Verdict::NotRun,
            },
            None,
            None,
            None,
        ),
    };
    let report = report::RunReport {
        label: label.clone(),
        angle_unit: units.name(),
        solver: "candidates".into(),
        input: report::input_summary(&set),
        circle: report::circle_summary(&cands.circle),
        arcs: Some(report::arc_summary(&cands, units)),
        candidates: report::CandidateSummary {
            count: cands.usable_arcs(),
            distinct: cands.distinct.len(),
        },
        best: report::best_summary(&best.polygon, units),
        theorem_bound: best.bound.map(|b| units.angle(b)),
        conjecture_bound: units.angle(conjecture_bound(set.len())),
        m,
        verdicts,
        pot,
        oracle: None,
        timings: timings.then(|| {
            let mut t = report::Timings::from_stages(&cands.timings);
            t.verification_ms = Some(sig12(verify_time.as_secs_f64() * 1e3));
            t
        }),
    };
    if let Some(path) = svg {
        let scene = SvgScene {
            set: &set,
            circle: &cands.circle,
            polygon: &best.polygon,
            label: label.as_deref(),
            cuts: Some(&cands.partition.cuts),
            phi,
        };
        write_svg(&scene, path)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    io.emit(&report, common.report.as_deref())?;
    let failed = [
        report.verdicts.theorem,
        report.verdicts.property1,
        report.verdicts.property2,
    ]
    .contains(&Verdict::Fail);
    if failed {
        let details = serde_json::to_value(&report).expect("report serializes");
        write_witness(
            &common.witness,
            "theorem-verification",
            &set,
            label.as_deref(),
            details,
        )?;
        return Err(Failure::Verdict(format!(
            "verification failed; witness in {}",
            common.witness.display()
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct OracleCommandReport {
    #[serde(flatten)]
    oracle: report::OracleReport,
    candidate_optimum: f64,
    candidates_in_enumeration: bool,
    dominance: Verdict,
}

fn oracle(
    io: &mut Io<'_>,
    common: &Common,
    limit: Option<usize>,
    with_candidates: bool,
) -> Outcome {
    let units = Units {
        degrees: common.degrees,
    };
    let (set, label) = parse_pointset(&common.input)?;
    let limit = oracle_limit(limit)?;
    let (outcome, cands) = with_pool(common.parallel, |parallel| -> Result<_, GeomError> {
        let outcome = conjecture_check(&set, OracleConfig { limit, parallel })?;
        let cands = if with_candidates {
            Some(candidate_set_with(
                &set,
                CandidateConfig {
                    parallel,
                    ..Default::default()
                },
            )?)
        } else {
            None
        };
        Ok((outcome, cands))
    })??;
    let base = report::oracle_report(&set, label.clone(), &outcome, units);
    let theorem_failed = base.theorem == Verdict::Fail;
    let violated = outcome.verdict == ConjectureVerdict::Violated;
    let mut dominance_failed = false;
    let details = match cands {
        Some(c) => {
            let all: std::collections::HashSet<Vec<usize>> =
                maxangle_core::enumerate_simple(&set, limit)?
                    .into_iter()
                    .collect();
            let subset = c.distinct.iter().all(|p| all.contains(p.canonical()));
            let opt = c.best().max_angle();
            let dom = outcome.result.minmax_angle <= opt + BOUND_TOL && subset;
            dominance_failed = !dom;
            let rep = OracleCommandReport {
                oracle: base,
                candidate_optimum: units.angle(opt),
                candidates_in_enumeration: subset,
                dominance: Verdict::from_bool(dom),
            };
            io.emit(&rep, common.report.as_deref())?;
            serde_json::to_value(&rep).expect("report serializes")
        }
        None => {
            io.emit(&base, common.report.as_deref())?;
            serde_json::to_value(&base).expect("report serializes")
        }
    };
    if violated || theorem_failed || dominance_failed {
        let kind = if violated {
            "conjecture-violation"
        } else {
            "oracle-check"
        };
        write_witness(&common.witness, kind, &set, label.as_deref(), details)?;
        return Err(Failure::Verdict(format!(
            "{kind}; witness in {}",
            common.witness.display()
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct BoundReport {
    n: usize,
    x: usize,
    pot_bound: usize,
    expression: String,
    bound: f64,
    angle_unit: &'static str,
    conjecture_bound: f64,
}

fn bound(io: &mut Io<'_>, n: usize, x: usize, degrees: bool) -> Outcome {
    let units = Units { degrees };
    let b = theorem_bound(n, x)?;
    let pot = (n - 1) * (n - x);
    let rep = BoundReport {
        n,
        x,
        pot_bound: pot,
        expression: format!("2π − π/{pot}"),
        bound: units.angle(b),
        angle_unit: units.name(),
        conjecture_bound: units.angle(conjecture_bound(n)),
    };
    io.emit(&rep, None)
}

fn generate(io: &mut Io<'_>, cmd: &GenCommand) -> Outcome {
    let (file, out) = match cmd {
        GenCommand::Random { n, seed, out, bbox } => (
            gen_random(*n, *seed, parse_bbox(bbox)?).map_err(|e| Failure::Usage(e.to_string()))?,
            out,
        ),
        GenCommand::Star { m, out } => (
            gen_star(*m).map_err(|e| Failure::Usage(e.to_string()))?,
            out,
        ),
    };
    file.write(out)
        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", out.display())))?;
    io.emit(&serde_json::json!({ "out": out.display().to_string(), "n": file.points.len(), "label": file.label }), None)
}

fn strategies(io: &mut Io<'_>) -> Outcome {
    let s = solvers();
    let c = simplicity_tests();
    let list = |names: Vec<&'static str>, desc: &dyn Fn(&str) -> &'static str| -> Vec<Value> {
        names
            .into_iter()
            .map(|n| serde_json::json!({ "name": n, "description": desc(n) }))
            .collect()
    };
    let solvers_json = list(s.names(), &|n| {
        s.get(n).map(|x| x.description()).unwrap_or("")
    });
    let checks_json = list(c.names(), &|n| {
        c.get(n).map(|x| x.description()).unwrap_or("")
    });
    io.emit(
        &serde_json::json!({ "solvers": solvers_json, "simplicity": checks_json }),
        None,
    )
}

/// Runs the command line `args` (including the program name).
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut io = Io { out };
    let result = match &cli.command {
        Command::Polygonize {
            common,
            svg,
            solver,
            simplicity,
            limit,
            timings,
        } => polygonize(
            &mut io,
            common,
            svg.as_deref(),
            solver,
            simplicity,
            *limit,
            *timings,
        ),
        Command::Verify {
            common,
            svg,
            timings,
        } => verify(&mut io, common, svg.as_deref(), *timings),
        Command::Oracle { common, limit } => oracle(&mut io, common, *limit, true),
        Command::Conjecture { common, limit } => oracle(&mut io, common, *limit, false),
        Command::Bound { n, x, degrees } => bound(&mut io, *n, *x, *degrees),
        Command::Gen(cmd) => generate(&mut io, cmd),
        Command::Strategies => strategies(&mut io),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Verdict(msg)) => {
            let _ = writeln!(err, "verdict failed: {msg}");
            1
        }
    }
}
