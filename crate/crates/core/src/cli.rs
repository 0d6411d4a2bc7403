//! The `eqlines` command line.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 degenerate surface,
//! 3 lines not closed under the group, 4 table cross-check mismatch,
//! 5 Segre violation, 6 conservation mismatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::burnside::{
    marks, multiply, parse_element, perm_character, restrict_to, solve_character, transfer_by_label, BurnsideError,
};
use crate::config::{ConfigError, RunConfig};
use crate::equivariant::{
    compare_to_reference, euler_number, line_character, reference_row, table1_rows, EquivariantError,
    OrbitDecomposition, RowMatch,
};
use crate::export::{export_real_lines, AffineChart, LineGroup};
use crate::geometry::{
    find_lines, random_symmetric_cubic, CubicSurface, GeometryError, LineFinderReport, LineJson, NewtonStats,
    SurfaceJson,
};
use crate::group::{ClassName, GroupLattice};
use crate::real::{analyze_real, RealError};

const THEOREM_ANSWER: &str = "[S4/C2o] + [S4/C2e] + [S4/D8]";

#[derive(Parser, Debug)]
#[command(name = "eqlines", version, about = "Burnside-ring counts of lines on symmetric cubic surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct SurfaceArgs {
    /// Built-in surface: fermat or clebsch.
    #[arg(long, conflicts_with_all = ["surface_file", "random"])]
    surface: Option<String>,
    /// Surface JSON file.
    #[arg(long, conflicts_with = "random")]
    surface_file: Option<PathBuf>,
    /// Sample a random smooth symmetric cubic from this seed.
    #[arg(long)]
    random: Option<u64>,
}

#[derive(Args, Debug, Clone)]
struct RunArgs {
    /// Master seed for the Newton starts.
    #[arg(long)]
    seed: Option<u64>,
    /// JSON file overriding the default run parameters.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    threads: Option<usize>,
    /// Newton starts per chart.
    #[arg(long)]
    newton_starts: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Find the 27 lines and print them as JSON.
    FindLines {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Orbit decomposition under one subgroup class.
    Orbits {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// Orbits under every subgroup class, checked against restriction.
    Table1 {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        json: bool,
    },
    /// Real lines and their hyperbolic/elliptic types.
    Real {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Burnside ring arithmetic.
    Burnside {
        #[command(subcommand)]
        op: BurnsideOp,
    },
    /// Write the real lines as segments, one group per S4-orbit.
    ExportLines {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, default_value = "obj", value_parser = ["obj"])]
        format: String,
        /// Clipping radius in the affine chart.
        #[arg(long, default_value_t = 3.0)]
        radius: f64,
        /// Affine chart: x0, sum, tilted or generic. Chosen automatically if absent.
        #[arg(long)]
        chart: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare Euler numbers of random symmetric cubics with the expected answer.
    VerifyConservation {
        #[arg(long)]
        trials: usize,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Subcommand, Debug)]
enum BurnsideOp {
    /// Product of two elements.
    Mul { a: String, b: String },
    /// Restriction to a subgroup class.
    Res {
        #[arg(long)]
        to: String,
        x: String,
    },
    /// The orbit `[G/H]`.
    Tr {
        #[arg(long)]
        from: String,
        #[arg(long, default_value = "S4")]
        group: String,
    },
    /// Mark vector.
    Marks { x: String },
    /// Permutation character on element classes.
    Character { x: String },
    /// Nonnegative elements with a given permutation character.
    SolveCharacter {
        #[arg(long)]
        group: String,
        /// Use the character of the lines on a built-in surface.
        #[arg(long, conflicts_with = "values")]
        of_lines: Option<String>,
        /// Comma-separated character values in element class order.
        #[arg(long)]
        values: Option<String>,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Equivariant(#[from] EquivariantError),
    #[error(transparent)]
    Real(#[from] RealError),
    #[error(transparent)]
    Burnside(#[from] BurnsideError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("table mismatch in rows: {0}")]
    TableMismatch(String),
    #[error("{failed} of {trials} trials differ from {expected}")]
    Conservation {
        failed: usize,
        trials: usize,
        expected: &'static str,
    },
    #[error("no real lines to export")]
    NoRealLines,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Geometry(GeometryError::DegenerateSurface(_) | GeometryError::BudgetExhausted(_)) => 2,
            CliError::Equivariant(EquivariantError::Geometry(
                GeometryError::DegenerateSurface(_) | GeometryError::BudgetExhausted(_),
            )) => 2,
            CliError::Real(RealError::DegenerateInvolution { .. }) => 2,
            CliError::Equivariant(EquivariantError::NotClosed { .. }) => 3,
            CliError::Equivariant(EquivariantError::Mismatch { .. }) | CliError::TableMismatch(_) => 4,
            CliError::Real(RealError::SegreViolation { .. }) => 5,
            CliError::Conservation { .. } => 6,
            _ => 1,
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn config(run: &RunArgs) -> Result<RunConfig, CliError> {
    let mut cfg = match &run.config {
        Some(path) => RunConfig::from_json_file(path)?,
        None => RunConfig::default(),
    };
    if let Some(s) = run.seed {
        cfg.seed = s;
    }
    if let Some(t) = run.threads {
        cfg.threads = Some(t);
    }
    if let Some(n) = run.newton_starts {
        cfg.newton_starts = n;
    }
    cfg.validate()?;
    Ok(cfg)
}

struct Loaded {
    surface: CubicSurface,
    report: LineFinderReport,
}

fn load_surface(args: &SurfaceArgs) -> Result<Option<CubicSurface>, CliError> {
    if let Some(name) = &args.surface {
        return Ok(Some(CubicSurface::builtin(name)?));
    }
    if let Some(path) = &args.surface_file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        let json: SurfaceJson =
            serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("malformed surface file: {e}")))?;
        return Ok(Some(CubicSurface::from_json(&json)?));
    }
    Ok(None)
}

fn load(args: &SurfaceArgs, cfg: &RunConfig) -> Result<Loaded, CliError> {
    let opts = cfg.finder_options();
    if let Some(surface) = load_surface(args)? {
        let report = find_lines(&surface, cfg.seed, &opts)?;
        return Ok(Loaded { surface, report });
    }
    if let Some(seed) = args.random {
        let s = random_symmetric_cubic(seed, cfg.retry_budget, &opts)?;
        return Ok(Loaded {
            surface: s.surface,
            report: s.report,
        });
    }
    Err(CliError::Usage("one of --surface, --surface-file or --random is required".into()))
}

fn class_name(s: &str) -> Result<ClassName, CliError> {
    s.parse().map_err(|_| CliError::Usage(format!("unknown group {s:?}")))
}

fn print_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Usage(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

#[derive(Serialize)]
struct FindLinesJson {
    seed: u64,
    stats: NewtonStats,
    lines: Vec<LineJson>,
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::FindLines { surface, run, out: path } => {
            let cfg = config(&run)?;
            let loaded = load(&surface, &cfg)?;
            let doc = FindLinesJson {
                seed: loaded.report.seed,
                stats: loaded.report.stats,
                lines: loaded.report.to_json(),
            };
            match path {
                Some(p) => {
                    let mut buf = Vec::new();
                    print_json(&mut buf, &doc)?;
                    std::fs::write(&p, buf)?;
                    writeln!(err, "wrote {} lines to {}", doc.lines.len(), p.display())?;
                }
                None => print_json(out, &doc)?,
            }
            Ok(())
        }
        Command::Orbits { surface, run, group, json } => {
            let name = class_name(&group)?;
            let cfg = config(&run)?;
            let loaded = load(&surface, &cfg)?;
            let d = euler_number(&loaded.report.lines, &GroupLattice::shared(name), cfg.tol_match)?;
            if json {
                print_json(out, &d.to_json())
            } else {
                writeln!(out, "{}", d.euler_number())?;
                write_orbit_table(out, &d)?;
                Ok(())
            }
        }
        Command::Table1 { surface, run, json } => cmd_table1(&surface, &run, json, out),
        Command::Real { surface, run } => {
            let cfg = config(&run)?;
            let loaded = load(&surface, &cfg)?;
            if !loaded.surface.is_real() {
                return Err(RealError::SurfaceNotReal.into());
            }
            let a = analyze_real(&loaded.surface, &loaded.report.lines, cfg.tol_real)?;
            print_json(out, &a)
        }
        Command::Burnside { op } => cmd_burnside(op, out),
        Command::ExportLines {
            surface,
            run,
            format: _,
            radius,
            chart,
            out: path,
        } => {
            if !(radius > 0.0) {
                return Err(CliError::Usage("--radius must be positive".into()));
            }
            let chart = match chart {
                Some(c) => Some(AffineChart::by_name(&c).ok_or_else(|| CliError::Usage(format!("unknown chart {c:?}")))?),
                None => None,
            };
            let cfg = config(&run)?;
            let loaded = load(&surface, &cfg)?;
            if !loaded.surface.is_real() {
                return Err(RealError::SurfaceNotReal.into());
            }
            let lines = &loaded.report.lines;
            let groups = orbit_groups(lines, cfg.tol_match)?;
            let export = export_real_lines(lines, &groups, radius, cfg.tol_real, chart);
            let text = export.to_obj();
            match path {
                Some(p) => std::fs::write(p, &text)?,
                None => write!(out, "{text}")?,
            }
            if export.segment_count() == 0 {
                return Err(CliError::NoRealLines);
            }
            Ok(())
        }
        Command::VerifyConservation { trials, run } => cmd_conservation(trials, &run, out),
    }
}

fn write_orbit_table(out: &mut dyn Write, d: &OrbitDecomposition) -> Result<(), CliError> {
    writeln!(out, "{:<10} {:>4}  members", "stabilizer", "size")?;
    for o in d.orbits() {
        let members: Vec<String> = o.members.iter().map(|m| m.to_string()).collect();
        writeln!(out, "{:<10} {:>4}  {}", d.label(o), o.members.len(), members.join(" "))?;
    }
    Ok(())
}

/// One group per S₄-orbit; per-line groups if the lines are not S₄-closed.
fn orbit_groups(lines: &[crate::geometry::ProjectiveLine], tol: f64) -> Result<Vec<LineGroup>, CliError> {
    let named: Vec<(String, Vec<usize>)> = match euler_number(lines, &GroupLattice::shared(ClassName::S4), tol) {
        Ok(d) => d
            .orbits()
            .iter()
            .map(|o| (d.label(o).to_string(), o.members.clone()))
            .collect(),
        Err(EquivariantError::NotClosed { .. }) => (0..lines.len()).map(|i| ("e".to_string(), vec![i])).collect(),
        Err(e) => return Err(e.into()),
    };
    let mut seen: Vec<String> = Vec::new();
    Ok(named
        .into_iter()
        .map(|(label, lines)| {
            let k = seen.iter().filter(|s| **s == label).count();
            seen.push(label.clone());
            let name = if k == 0 {
                format!("orbit-{label}")
            } else {
                format!("orbit-{label}-{}", k + 1)
            };
            LineGroup { name, lines }
        })
        .collect())
}

#[derive(Serialize)]
struct Table1Json {
    group: String,
    direct: String,
    restricted: String,
    agree: bool,
    reference: &'static str,
    reference_match: &'static str,
}

fn cmd_table1(surface: &SurfaceArgs, run: &RunArgs, json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = config(run)?;
    let loaded = load(surface, &cfg)?;
    let rows = table1_rows(&loaded.report.lines, cfg.tol_match)?;
    let docs: Vec<Table1Json> = rows
        .iter()
        .map(|r| {
            let reference = reference_row(r.group);
            Table1Json {
                group: r.group.to_string(),
                direct: r.direct.euler_number().to_string(),
                restricted: r.restricted.to_string(),
                agree: r.agrees(),
                reference: reference.printed,
                reference_match: match compare_to_reference(r.direct.euler_number(), reference) {
                    RowMatch::Exact => "exact",
                    RowMatch::SwappedLR => "swapped-LR",
                    RowMatch::Differs => "differs",
                },
            }
        })
        .collect();
    if json {
        print_json(out, &docs)?;
    } else {
        let width = docs.iter().map(|d| d.direct.chars().count()).max().unwrap_or(0);
        for d in &docs {
            let status = if d.agree { "ok" } else { "MISMATCH" };
            writeln!(
                out,
                "{:<7} {:<width$}  restriction {:<8}  published {}",
                d.group, d.direct, status, d.reference_match
            )?;
        }
    }
    let bad: Vec<&str> = docs.iter().filter(|d| !d.agree).map(|d| d.group.as_str()).collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(CliError::TableMismatch(bad.join(", ")))
    }
}

fn cmd_burnside(op: BurnsideOp, out: &mut dyn Write) -> Result<(), CliError> {
    match op {
        BurnsideOp::Mul { a, b } => {
            let x = parse_element(&a)?;
            let y = parse_element(&b)?;
            writeln!(out, "{}", multiply(&x, &y)?)?;
        }
        BurnsideOp::Res { to, x } => {
            let x = parse_element(&x)?;
            let target = GroupLattice::shared(class_name(&to)?);
            writeln!(out, "{}", restrict_to(&x, &target)?)?;
        }
        BurnsideOp::Tr { from, group } => {
            let ring = GroupLattice::shared(class_name(&group)?);
            writeln!(out, "{}", transfer_by_label(&ring, &from)?)?;
        }
        BurnsideOp::Marks { x } => {
            let x = parse_element(&x)?;
            let ring = x.ring();
            let classes: Vec<&str> = ring.classes().iter().map(|c| c.label.as_str()).collect();
            print_json(out, &json!({ "group": ring.name().to_string(), "classes": classes, "marks": marks(&x) }))?;
        }
        BurnsideOp::Character { x } => {
            let x = parse_element(&x)?;
            let chi = perm_character(&x);
            let reps: Vec<String> = x.ring().element_classes().iter().map(|c| c.representative.to_string()).collect();
            print_json(
                out,
                &json!({ "group": x.ring().name().to_string(), "classes": reps, "values": chi.values() }),
            )?;
        }
        BurnsideOp::SolveCharacter {
            group,
            of_lines,
            values,
            run,
        } => {
            let ring = GroupLattice::shared(class_name(&group)?);
            let chi = match (of_lines, values) {
                (Some(name), None) => {
                    let cfg = config(&run)?;
                    let surface = CubicSurface::builtin(&name)?;
                    let report = find_lines(&surface, cfg.seed, &cfg.finder_options())?;
                    line_character(&report.lines, &ring, cfg.tol_match)
                }
                (None, Some(v)) => {
                    let values = v
                        .split(',')
                        .map(|s| s.trim().parse::<i64>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| CliError::Usage(format!("bad character value: {e}")))?;
                    if values.len() != ring.element_classes().len() {
                        return Err(CliError::Usage(format!(
                            "{} has {} element classes, got {} values",
                            ring.name(),
                            ring.element_classes().len(),
                            values.len()
                        )));
                    }
                    crate::burnside::ClassFunction::new(&ring, values)
                }
                _ => return Err(CliError::Usage("give exactly one of --of-lines or --values".into())),
            };
            let sol = solve_character(&chi)?;
            let solutions: Vec<String> = sol.solutions.iter().map(|s| s.to_string()).collect();
            print_json(
                out,
                &json!({
                    "group": ring.name().to_string(),
                    "character": chi.values(),
                    "unique": sol.unique,
                    "solutions": solutions,
                }),
            )?;
        }
    }
    Ok(())
}

fn cmd_conservation(trials: usize, run: &RunArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let cfg = config(run)?;
    let expected = parse_element(THEOREM_ANSWER)?;
    let s4 = GroupLattice::shared(ClassName::S4);
    let mut failed = 0;
    for t in 0..trials {
        let seed = cfg.seed.wrapping_add(t as u64);
        let sample = random_symmetric_cubic(seed, cfg.retry_budget, &cfg.finder_options())?;
        let verdict = match euler_number(&sample.report.lines, &s4, cfg.tol_match) {
            Ok(d) => {
                let ok = d.euler_number() == &expected;
                (ok, d.euler_number().to_string())
            }
            Err(e @ EquivariantError::NotClosed { .. }) => (false, e.to_string()),
            Err(e) => return Err(e.into()),
        };
        let [a, b, c] = sample.coefficients;
        writeln!(
            out,
            "trial {:>3} seed {seed}: coefficients [{a:.6}, {b:.6}, {c:.6}] -> {} {}",
            t + 1,
            verdict.1,
            if verdict.0 { "pass" } else { "FAIL" }
        )?;
        if !verdict.0 {
            failed += 1;
        }
    }
    writeln!(out, "{}/{} equal to {}", trials - failed, trials, THEOREM_ANSWER)?;
    if failed > 0 {
        return Err(CliError::Conservation {
            failed,
            trials,
            expected: THEOREM_ANSWER,
        });
    }
    Ok(())
}

/// Reads a surface JSON file; used by examples and tests.
pub fn read_surface_file(path: &Path) -> Result<CubicSurface, CliError> {
    load_surface(&SurfaceArgs {
        surface: None,
        surface_file: Some(path.to_path_buf()),
        random: None,
    })
    .map(|s| s.expect("file given"))
}
