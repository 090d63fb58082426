//! The `hodist` command line.
//!
//! Every subcommand renders either human text or a JSON record
//! (`--format json`). Exit status 0 means success, 1 means a checked
//! property failed (the output names a witness), 2 means bad input or a
//! size-guard refusal.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::circle::{basis_and_compactness, circle_ball, circle_distance, SymbolicSet};
use crate::corpus::{self, Corpus, SweepReport};
use crate::distance::{axiom_report, cat, good_open_family, homotopic_distance, tc, AxiomReport, CatMethod, Distance, Verdict};
use crate::error::{Error, Result};
use crate::homotopy::homotopy_classes;
use crate::io::{load_map, load_pl_map, load_space};
use crate::limits::Limits;
use crate::maps::ContinuousMap;
use crate::space::FiniteSpace;
use crate::topology::{induced_space, PropertyReport, Radius};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "hodist", version, about = "Homotopic distance on finite spaces")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Cover,
    Dist,
    Incl,
}

impl From<MethodArg> for CatMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Cover => CatMethod::Cover,
            MethodArg::Dist => CatMethod::Dist,
            MethodArg::Incl => CatMethod::Incl,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Inspect a space file.
    Space {
        #[command(subcommand)]
        command: SpaceCommand,
    },
    /// Summarize Map(X, Y).
    Maps { x: PathBuf, y: PathBuf },
    /// Homotopic distance D(f, g) with a cover certificate.
    Dist { x: PathBuf, y: PathBuf, f: PathBuf, g: PathBuf },
    /// LS-category of X.
    Cat {
        x: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Cover)]
        method: MethodArg,
        /// Basepoint name for `dist` and `incl` (default: the first point).
        #[arg(long)]
        basepoint: Option<String>,
    },
    /// Topological complexity of X.
    Tc {
        x: PathBuf,
        /// Refuse when X × X has more points than this.
        #[arg(long)]
        max_points: Option<usize>,
    },
    /// Distance matrix and induced topology on Map(X, Y).
    Topology {
        x: PathBuf,
        y: PathBuf,
        /// One point per homotopy class.
        #[arg(long)]
        quotient: bool,
    },
    /// Pseudometric axioms on Map(X, Y).
    Axioms { x: PathBuf, y: PathBuf },
    /// Degree classes of circle maps.
    Circle {
        #[command(subcommand)]
        command: CircleCommand,
    },
    /// Corpus sweeps.
    Corpus {
        #[command(subcommand)]
        command: CorpusCommand,
    },
}

#[derive(Subcommand, Debug)]
enum SpaceCommand {
    Check { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum CircleCommand {
    /// Distance between the classes of degree n and m.
    Dist {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(allow_negative_numbers = true)]
        m: i64,
    },
    /// The ball of radius r around the class of degree n.
    Ball {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(allow_hyphen_values = true)]
        r: String,
    },
    /// A degree missed by a finite subfamily of the canonical cover; `c` is the constants ball.
    Witness {
        #[arg(allow_hyphen_values = true)]
        members: Vec<String>,
    },
    /// Degree of a PL circle map file.
    Degree { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum CorpusCommand {
    /// Run the full invariant suite over a corpus directory.
    Run { dir: PathBuf },
    /// Write the standard corpus with oracle fixtures.
    Generate {
        dir: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_points: usize,
        #[arg(long, default_value = "oracle-run-1")]
        run_id: String,
    },
}

struct Rendered {
    json: Value,
    text: String,
    failed: bool,
}

impl Rendered {
    fn ok(json: Value, text: String) -> Self {
        Rendered { json, text, failed: false }
    }
}

/// Parses `args` (including the program name) and runs the command with
/// limits from the environment.
pub fn run_cli<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_cli_with(args, &Limits::from_env())
}

pub fn run_cli_with<I, T>(args: I, limits: &Limits) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if status == EXIT_OK {
                CliOutput { status, stdout: text, stderr: String::new() }
            } else {
                CliOutput { status, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli.command, limits) {
        Ok(r) => {
            let stdout = match cli.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&r.json).expect("serializable");
                    s.push('\n');
                    s
                }
                Format::Text => r.text,
            };
            let status = if r.failed { EXIT_CHECK_FAILED } else { EXIT_OK };
            CliOutput { status, stdout, stderr: String::new() }
        }
        Err(e) => CliOutput { status: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn space_at(path: &Path) -> Result<Arc<FiniteSpace>> {
    load_space(path).map(Arc::new)
}

fn braces(names: &[String]) -> String {
    format!("{{{}}}", names.join(","))
}

fn assignment_json(map: &ContinuousMap) -> Value {
    Value::Object(map.assignment().into_iter().map(|(x, y)| (x, Value::String(y))).collect())
}

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("serializable")
}

fn execute(command: &Command, limits: &Limits) -> Result<Rendered> {
    match command {
        Command::Space { command: SpaceCommand::Check { file } } => space_check(file, limits),
        Command::Maps { x, y } => maps(x, y, limits),
        Command::Dist { x, y, f, g } => dist(x, y, f, g, limits),
        Command::Cat { x, method, basepoint } => cat_command(x, (*method).into(), basepoint.as_deref(), limits),
        Command::Tc { x, max_points } => tc_command(x, *max_points, limits),
        Command::Topology { x, y, quotient } => topology(x, y, *quotient, limits),
        Command::Axioms { x, y } => axioms(x, y, limits),
        Command::Circle { command } => circle(command),
        Command::Corpus { command: CorpusCommand::Run { dir } } => corpus_run(dir, limits),
        Command::Corpus { command: CorpusCommand::Generate { dir, max_points, run_id } } => {
            let manifest = corpus::generate(dir, *max_points, run_id, limits)?;
            let text = format!("wrote {} entries to {}\n", manifest.entries.len(), dir.display());
            Ok(Rendered::ok(to_json(&manifest), text))
        }
    }
}

fn space_check(file: &Path, limits: &Limits) -> Result<Rendered> {
    let space = load_space(file)?;
    let report = space.report(limits)?;
    let mut text = String::new();
    writeln!(text, "points: {}", report.points).unwrap();
    writeln!(text, "T0: {}", report.t0).unwrap();
    match &report.normality_witness {
        None => writeln!(text, "normal: {}", report.normal).unwrap(),
        Some(w) => writeln!(
            text,
            "normal: {} (closed sets {} and {} have no disjoint neighbourhoods)",
            report.normal,
            braces(&w.first),
            braces(&w.second)
        )
        .unwrap(),
    }
    let comps: Vec<String> = report.connected_components.iter().map(|c| braces(c)).collect();
    writeln!(text, "components: {} {}", comps.len(), comps.join(" ")).unwrap();
    writeln!(text, "opens: {}", report.opens).unwrap();
    writeln!(text, "contractible: {}", report.contractible).unwrap();
    Ok(Rendered::ok(to_json(&report), text))
}

fn maps(x: &Path, y: &Path, limits: &Limits) -> Result<Rendered> {
    let (x, y) = (space_at(x)?, space_at(y)?);
    let classes = homotopy_classes(&x, &y, limits)?;
    let reps = classes.representatives();
    let sizes: Vec<usize> = classes.blocks.iter().map(Vec::len).collect();
    let json = json!({
        "maps": classes.maps.len(),
        "classes": classes.blocks.len(),
        "class_sizes": sizes,
        "representatives": reps.iter().map(|&i| assignment_json(&classes.maps[i])).collect::<Vec<_>>(),
    });
    let mut text = format!("maps: {}\nclasses: {}\n", classes.maps.len(), classes.blocks.len());
    for (&i, size) in reps.iter().zip(&sizes) {
        writeln!(text, "  {:?} ({size} maps)", classes.maps[i]).unwrap();
    }
    Ok(Rendered::ok(json, text))
}

fn distance_json(space: &FiniteSpace, d: &Distance) -> (Value, String) {
    let cert = d.certificate_names(space);
    let mut text = format!("D = {}\n", d.value);
    if let Some(c) = &cert {
        let sets: Vec<String> = c.iter().map(|s| braces(s)).collect();
        writeln!(text, "certificate: {}", sets.join(" ")).unwrap();
    }
    (json!({ "distance": d.value, "certificate": cert }), text)
}

fn dist(x: &Path, y: &Path, f: &Path, g: &Path, limits: &Limits) -> Result<Rendered> {
    let (xs, ys) = (space_at(x)?, space_at(y)?);
    let f = load_map(f, &xs, &ys)?;
    let g = load_map(g, &xs, &ys)?;
    let family = good_open_family(&f, &g, limits)?;
    let d = homotopic_distance(&f, &g, limits)?;
    let (mut json, mut text) = distance_json(&xs, &d);
    let maximal: Vec<Vec<String>> = family.maximal.iter().map(|o| xs.names_of(o.points())).collect();
    let shown: Vec<String> = maximal.iter().map(|s| braces(s)).collect();
    writeln!(text, "maximal good opens: {}", shown.join(" ")).unwrap();
    json["maximal_good_opens"] = to_json(&maximal);
    Ok(Rendered::ok(json, text))
}

fn cat_command(x: &Path, method: CatMethod, basepoint: Option<&str>, limits: &Limits) -> Result<Rendered> {
    let space = space_at(x)?;
    let base = match (method, basepoint) {
        (CatMethod::Cover, _) => None,
        (_, Some(name)) => Some(space.index_of(name)?),
        (_, None) if space.is_empty() => None,
        (_, None) => Some(0),
    };
    let result = cat(&space, method, base, limits)?;
    let (mut json, body) = distance_json(&space, &result.distance);
    json["method"] = to_json(&result.method);
    json["basepoint"] = to_json(&base.map(|b| space.name(b)));
    json["warning"] = to_json(&result.warning);
    let mut text = body.replacen("D = ", "cat = ", 1);
    if let Some(b) = base {
        text.insert_str(0, &format!("basepoint: {}\n", space.name(b)));
    }
    if let Some(w) = &result.warning {
        writeln!(text, "warning: {w}").unwrap();
    }
    Ok(Rendered::ok(json, text))
}

fn tc_command(x: &Path, max_points: Option<usize>, limits: &Limits) -> Result<Rendered> {
    let space = space_at(x)?;
    let square = space.len() * space.len();
    if let Some(limit) = max_points {
        if square > limit {
            return Err(Error::SizeGuard { what: format!("the product X×X with {square} points"), limit, knob: "--max-points" });
        }
    }
    let d = tc(&space, limits)?;
    let product = space.product(&space)?;
    let (mut json, body) = distance_json(&product, &d);
    json["product_points"] = json!(square);
    Ok(Rendered::ok(json, body.replacen("D = ", "tc = ", 1)))
}

fn first_ball(report: &PropertyReport, labels: &[String]) -> Option<String> {
    report
        .small_ball_violations
        .iter()
        .chain(&report.large_ball_violations)
        .next()
        .map(|w| format!("ball B_{}({}) with members {:?}", w.radius, labels[w.center], w.members))
}

fn topology(x: &Path, y: &Path, quotient: bool, limits: &Limits) -> Result<Rendered> {
    let (x, y) = (space_at(x)?, space_at(y)?);
    let space = induced_space(&x, &y, quotient, limits)?;
    let topology = space.generate_topology(None)?;
    let report = space.property_report()?;
    let minimal: Vec<Vec<usize>> = (0..space.len()).map(|i| topology.minimal_open(i)).collect();
    let json = json!({
        "quotiented": quotient,
        "carrier": space.labels(),
        "matrix": space.matrix(),
        "minimal_open_neighbourhoods": minimal,
        "report": report,
    });
    let mut text = String::new();
    writeln!(text, "carrier: {} {}", space.len(), if quotient { "classes" } else { "maps" }).unwrap();
    for (i, label) in space.labels().iter().enumerate() {
        let row: Vec<String> = space.matrix()[i].iter().map(|d| format!("{d:>3}")).collect();
        writeln!(text, "  {i:>3} {} {label}", row.join("")).unwrap();
    }
    let verdict = |b: bool| if b { "holds" } else { "FAILS" };
    writeln!(text, "indiscrete: {}", report.indiscrete).unwrap();
    writeln!(text, "connected: {} ({} components)", report.connected, report.components.len()).unwrap();
    writeln!(text, "balls of radius <= 1 indiscrete: {}", verdict(report.small_balls_indiscrete)).unwrap();
    let large = if report.large_balls_vacuous { "vacuous".to_string() } else { format!("{} ({} checked)", verdict(report.large_balls_disconnected), report.large_balls_checked) };
    writeln!(text, "larger balls split off B_1 as a clopen set: {large}").unwrap();
    writeln!(text, "not indiscrete implies disconnected: {}", verdict(report.not_indiscrete_implies_disconnected)).unwrap();
    writeln!(text, "pairs at distance inf separated: {}", verdict(report.infinite_pairs_separated)).unwrap();
    if let Some(w) = first_ball(&report, space.labels()) {
        writeln!(text, "witness: {w}").unwrap();
    }
    Ok(Rendered { json, text, failed: !report.passed() })
}

fn axioms(x: &Path, y: &Path, limits: &Limits) -> Result<Rendered> {
    let (x, y) = (space_at(x)?, space_at(y)?);
    let report = axiom_report(&x, &y, limits)?;
    Ok(Rendered { json: to_json(&report), text: axiom_text(&report), failed: !report.passed() })
}

fn axiom_text(report: &AxiomReport) -> String {
    let mut text = format!("maps: {}\n", report.maps.len());
    let line = |text: &mut String, name: &str, v: &Verdict| {
        let status = if v.holds { "holds" } else { "FAILS" };
        write!(text, "{name}: {status}").unwrap();
        if let Some(w) = &v.witness {
            let maps: Vec<&str> = w.iter().map(|&i| report.maps[i].as_str()).collect();
            write!(text, " witness {}", maps.join(" ")).unwrap();
        }
        text.push('\n');
    };
    line(&mut text, "M1 D(f,f) = 0", &report.zero_diagonal);
    line(&mut text, "M2 D(f,g) = D(g,f)", &report.symmetric);
    line(&mut text, "D(f,g) = 0 iff f ~ g", &report.zero_iff_homotopic);
    let t = &report.triangle;
    line(&mut text, "M3 triangle inequality", &Verdict { holds: t.holds, witness: t.witness.clone() });
    if !t.asserted {
        text.push_str("  (domain is not normal: recorded, not asserted)\n");
    }
    text
}

fn parse_member(s: &str) -> Result<SymbolicSet> {
    match s {
        "c" | "C" => Ok(SymbolicSet::ConstantsClass),
        "all" | "ALL" => Ok(SymbolicSet::All),
        _ => s
            .parse::<i64>()
            .map(SymbolicSet::Singleton)
            .map_err(|_| Error::Parse(s.to_string(), "expected a degree or `c`".into())),
    }
}

fn circle(command: &CircleCommand) -> Result<Rendered> {
    match command {
        CircleCommand::Dist { n, m } => {
            let d = circle_distance(*n, *m);
            Ok(Rendered::ok(json!({ "n": n, "m": m, "distance": d }), format!("D = {d}\n")))
        }
        CircleCommand::Ball { n, r } => {
            let radius: Radius = r.parse()?;
            let ball = circle_ball(*n, radius);
            let mut text = format!("B_{}(f_{}) = {}\n", radius, n, ball.set);
            if let Some(note) = ball.note {
                writeln!(text, "note: {note}").unwrap();
            }
            Ok(Rendered::ok(to_json(&ball), text))
        }
        CircleCommand::Witness { members } => {
            let family = members.iter().map(|m| parse_member(m)).collect::<Result<Vec<_>>>()?;
            let report = basis_and_compactness(&family)?;
            let text = format!(
                "uncovered degree: {}\nbasis: {} and {} (radius {})\ndiscrete on classes: {}\n",
                report.uncovered_witness,
                report.basis.singletons,
                report.basis.constants_ball,
                report.basis.constants_ball_radius,
                report.discrete_on_classes
            );
            Ok(Rendered::ok(to_json(&report), text))
        }
        CircleCommand::Degree { file } => {
            let map = load_pl_map(file)?;
            let degree = map.degree();
            let json = json!({ "degree": degree, "subdivision": map.subdivision(), "vertices": map.images().len() });
            Ok(Rendered::ok(json, format!("degree = {degree}\n")))
        }
    }
}

fn corpus_run(dir: &Path, limits: &Limits) -> Result<Rendered> {
    let corpus = Corpus::load(dir)?;
    let report = corpus::run(&corpus, limits);
    Ok(Rendered { json: to_json(&report), text: sweep_text(&report), failed: !report.passed() })
}

fn sweep_text(report: &SweepReport) -> String {
    let mut text = format!("spaces: {}  pairs: {}  maps: {}\n", report.spaces, report.pairs, report.maps);
    for (name, t) in &report.tallies {
        writeln!(text, "  {name:<40} {:>8} checked {:>4} failed", t.checked, t.failed).unwrap();
    }
    let failing = report.triangle_archive.iter().filter(|t| !t.holds).count();
    writeln!(
        text,
        "triangle reports for non-normal domains: {} archived, {failing} with a violation",
        report.triangle_archive.len()
    )
    .unwrap();
    writeln!(text, "contractible domain with disconnected codomain (excluded): {}", report.contractible_exceptions.len()).unwrap();
    for s in &report.skipped {
        writeln!(text, "skipped {}: {}", s.instance, s.reason).unwrap();
    }
    for v in &report.violations {
        writeln!(text, "VIOLATION {} on {}: {}", v.check, v.instance, v.witness).unwrap();
    }
    writeln!(text, "{}", if report.passed() { "all checks passed" } else { "checks failed" }).unwrap();
    text
}
