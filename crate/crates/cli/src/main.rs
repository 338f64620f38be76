use std::collections::BTreeSet;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand};
use matchstick::analysis::analyze;
use matchstick::faces::{classify_faces, enumerate_faces};
use matchstick::generators::{gen_disk_lattice, gen_grid, gen_rhombus_strip, gen_triangle_free, gen_zonotope};
use matchstick::graph::{load, save, validate};
use matchstick::pathfinder::{sample_edges, Context};
use matchstick::reduction::reduce;
use matchstick::render::{render_svg, RenderStyle};
use matchstick::search::{conjecture_probe, max_edges_over_family, Family, DEFAULT_BUDGET};
use matchstick::{Check, DiskSpec, Error, MatchstickGraph, Point, Tolerance};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "matchstick",
    version,
    about = "Construct, validate and analyze matchstick graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and write it as JSON.
    Generate {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(short = 'o', global = true)]
        out: Option<PathBuf>,
    },
    /// Check geometric validity; exit 1 if any requested check fails.
    Validate {
        file: PathBuf,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        triangle_free: bool,
        /// Also require containment in the disk of this radius.
        #[arg(long)]
        disk: Option<f64>,
    },
    /// Face counts, identities, chains and bounds.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        r: Option<f64>,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Strip triangles, then fat rhombi.
    Reduce {
        file: PathBuf,
        #[arg(long)]
        r: f64,
        #[arg(short = 'o')]
        out: PathBuf,
    },
    /// Run Extend-Path from the edge I-J (or a seeded random regular edge).
    ExtendPath {
        file: PathBuf,
        #[arg(long, num_args = 2, value_names = ["I", "J"])]
        edge: Option<Vec<usize>>,
        #[arg(long)]
        r: f64,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Reduce the graph first.
        #[arg(long)]
        reduce: bool,
    },
    /// Extremal search oracle.
    Search {
        #[command(subcommand)]
        kind: SearchKind,
        #[arg(short = 'o', global = true)]
        out: Option<PathBuf>,
    },
    /// Draw a graph as SVG.
    Render {
        file: PathBuf,
        #[arg(short = 'o')]
        out: PathBuf,
        /// Fill faces by class.
        #[arg(long)]
        faces: bool,
        /// Draw the graph's disk.
        #[arg(long)]
        disk: bool,
    },
}

#[derive(Subcommand)]
enum GenKind {
    Grid {
        #[arg(long)]
        k: usize,
    },
    Zonotope {
        #[arg(long)]
        k: usize,
    },
    TriangleFree {
        #[arg(long)]
        n: usize,
    },
    DiskLattice {
        #[arg(long)]
        r: f64,
        #[arg(long)]
        n: usize,
    },
    Strip {
        #[arg(long)]
        count: usize,
        #[arg(long, allow_negative_numbers = true)]
        theta: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        tilt: f64,
    },
}

#[derive(Subcommand)]
enum SearchKind {
    /// Compare best known values with the conjectured maximum for n = 1..N.
    Probe {
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Exhaust one family.
    Family {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

/// A failure reported as a JSON object on stderr, exit code 1.
struct Failure(Value);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let kind = format!("{e:?}");
        let kind = kind.split(['(', ' ', '{']).next().unwrap_or("Error").to_string();
        let mut obj = json!({ "error": kind, "message": e.to_string() });
        if let Error::BudgetExceeded { best, .. } = &e {
            obj["best"] = serde_json::to_value(best).unwrap_or(Value::Null);
        }
        Failure(obj)
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure(json!({ "error": "Io", "message": format!("{}: {e}", path.display()) }))
}

type Outcome = Result<(), Failure>;

/// Writes to stdout; a closed pipe is not an error.
fn say(text: &str) {
    let mut stdout = std::io::stdout().lock();
    let _ = writeln!(stdout, "{}", text.trim_end());
}

fn emit(text: &str, out: Option<&Path>) -> Outcome {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| io_failure(p, e)),
        None => {
            say(text);
            Ok(())
        }
    }
}

fn pretty<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn store(g: &MatchstickGraph, out: &Path) -> Outcome {
    save(g, out).map_err(|e| io_failure(out, e))?;
    say(&json!({ "file": out.display().to_string(), "n": g.n(), "e": g.e() }).to_string());
    Ok(())
}

fn generate(kind: GenKind, out: Option<PathBuf>) -> Outcome {
    let Some(out) = out else {
        Cli::command()
            .error(ErrorKind::MissingRequiredArgument, "generate needs -o FILE")
            .exit();
    };
    let g = match kind {
        GenKind::Grid { k } => gen_grid(k)?,
        GenKind::Zonotope { k } => gen_zonotope(k)?,
        GenKind::TriangleFree { n } => gen_triangle_free(n)?,
        GenKind::DiskLattice { r, n } => gen_disk_lattice(r, n)?.0,
        GenKind::Strip { count, theta, tilt } => gen_rhombus_strip(count, theta, tilt)?,
    };
    store(&g, &out)
}

fn run_validate(file: &Path, tol: Option<f64>, triangle_free: bool, disk: Option<f64>) -> Outcome {
    let mut g = load(file)?;
    let tol = match tol {
        Some(t) => Tolerance::with_unit_tol(t)?,
        None => Tolerance::default(),
    };
    let mut checks = Check::basic();
    if triangle_free {
        checks.insert(Check::TriangleFree);
    }
    if let Some(r) = disk {
        let center = g.disk().map_or(Point::ORIGIN, |d| d.center);
        g = g.with_disk(Some(DiskSpec::new(center, r)?));
        checks.insert(Check::DiskContained);
    }
    let report = validate(&g, &tol, &checks);
    say(&pretty(&report));
    if report.ok() {
        Ok(())
    } else {
        let failed: BTreeSet<String> = report.violations.iter().map(|v| format!("{:?}", v.check)).collect();
        let failed: Vec<String> = failed.into_iter().collect();
        Err(Failure(json!({
            "error": "ValidationFailed",
            "message": format!("failed checks: {}", failed.join(", ")),
            "violations": report.violations.len(),
        })))
    }
}

fn run_extend_path(
    file: &Path,
    edge: Option<Vec<usize>>,
    r: f64,
    out: Option<&Path>,
    seed: u64,
    do_reduce: bool,
) -> Outcome {
    let tol = Tolerance::default();
    let mut g = load(file)?;
    if do_reduce {
        g = reduce(&g, r, &tol)?.after_fat_rhombi;
    }
    let ctx = Context::new(&g, r, &tol)?;
    let alpha = match edge.as_deref() {
        Some(&[i, j]) => g.edge_id(i, j).ok_or(Error::MissingEdge(i, j))?,
        _ => *sample_edges(ctx.regular(), 1, seed)
            .first()
            .ok_or_else(|| Error::InvalidParameter("graph has no edges".into()))?,
    };
    let trace = ctx.run(alpha, g.n() * (g.n() + 1))?;
    emit(&trace.to_json(), out)
}

fn run_render(file: &Path, out: &Path, faces: bool, disk: bool) -> Outcome {
    let tol = Tolerance::default();
    let g = load(file)?;
    let style = RenderStyle {
        face_fill: faces,
        disk,
        ..RenderStyle::default()
    };
    let svg = if faces {
        let (core, _) = g.without_isolated();
        let fd = enumerate_faces(&core, &tol)?;
        let classes = classify_faces(&core, &fd, g.disk().map(|d| d.radius), &tol);
        render_svg(&g, Some((&core, &fd, &classes)), &style)?
    } else {
        render_svg(&g, None, &style)?
    };
    std::fs::write(out, svg).map_err(|e| io_failure(out, e))
}

fn run(cli: Cli) -> Outcome {
    let tol = Tolerance::default();
    match cli.command {
        Command::Generate { kind, out } => generate(kind, out),
        Command::Validate {
            file,
            tol,
            triangle_free,
            disk,
        } => run_validate(&file, tol, triangle_free, disk),
        Command::Analyze { file, r, out } => {
            let report = analyze(&load(&file)?, r, &tol)?;
            emit(&report.to_json(), out.as_deref())
        }
        Command::Reduce { file, r, out } => {
            let trace = reduce(&load(&file)?, r, &tol)?;
            save(&trace.after_fat_rhombi, &out).map_err(|e| io_failure(&out, e))?;
            say(&pretty(&trace.summary()));
            Ok(())
        }
        Command::ExtendPath {
            file,
            edge,
            r,
            out,
            seed,
            reduce,
        } => run_extend_path(&file, edge, r, out.as_deref(), seed, reduce),
        Command::Search { kind, out } => {
            let text = match kind {
                SearchKind::Probe { n_max, budget } => pretty(&conjecture_probe(n_max, budget)?),
                SearchKind::Family { name, n, budget } => {
                    pretty(&max_edges_over_family(Family::parse(&name, n)?, n, budget)?)
                }
            };
            emit(&text, out.as_deref())
        }
        Command::Render { file, out, faces, disk } => run_render(&file, &out, faces, disk),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(obj)) => {
            eprintln!("{obj}");
            ExitCode::from(1)
        }
    }
}
