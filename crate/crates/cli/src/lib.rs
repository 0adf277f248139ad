//! Command line front end: parses requests, runs them against `atilde_core`, emits JSON or SVG.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use atilde_core::arcs::{ArcDiagram, PairRelation};
use atilde_core::families::{dehn_twist_times, enumerate_collections, family_representatives};
use atilde_core::io::{parse_diagram, parse_module, parse_modules, parse_quiver, DiagramJson, FamilyJson, IoError, ModuleJson};
use atilde_core::oracle::dim_hom_linear_algebra;
use atilde_core::render::{render_svg, SvgStyle};
use atilde_core::{
    canonical_small, count_families, dim_ext, dim_hom, euler_form, pair_relation, relation_algebraic, Execution,
    Quiver, StringModule,
};
use clap::{Args, Parser, Subcommand};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

pub const REPORT_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Input(#[from] IoError),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(name = "atilde", version, about = "Exceptional sequences over affine type A quivers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Run enumeration on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Debug, Args)]
struct DiagramInput {
    /// Diagram JSON (inline or a file path) with "quiver" and "modules" or "arcs".
    #[arg(long, conflicts_with_all = ["quiver", "modules"])]
    diagram: Option<String>,
    /// Quiver JSON, inline, a file path, or a sign word such as `-++`.
    #[arg(long, allow_hyphen_values = true)]
    quiver: Option<String>,
    /// Array of module triples (inline or a file path).
    #[arg(long, requires = "quiver")]
    modules: Option<String>,
}

#[derive(Debug, Args)]
struct QuiverInput {
    /// Quiver JSON, inline, a file path, or a sign word such as `-++`.
    #[arg(long, allow_hyphen_values = true)]
    quiver: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether a collection is exceptional and order it.
    Check(DiagramInput),
    /// Print the exceptional order of a collection.
    Order(DiagramInput),
    /// Dimension of Hom(from, to).
    Hom(PairInput),
    /// Dimension of Ext(from, to).
    Ext(PairInput),
    /// Auslander-Reiten translate of a module.
    Tau {
        #[command(flatten)]
        quiver: QuiverInput,
        #[arg(long)]
        module: String,
        /// Apply the inverse translate.
        #[arg(long)]
        inverse: bool,
    },
    /// Twist a diagram `times` times clockwise and report its family.
    Twist {
        #[command(flatten)]
        input: DiagramInput,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        times: i64,
    },
    /// Count families of complete exceptional collections.
    Families(QuiverInput),
    /// List complete exceptional collections with bounded winding.
    Enumerate {
        #[command(flatten)]
        quiver: QuiverInput,
        #[arg(long, default_value_t = 0)]
        lambda_max: u32,
    },
    /// Draw a diagram as SVG.
    Render(DiagramInput),
    /// Randomized self-check of Hom, Ext and the arc model.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

#[derive(Debug, Args)]
struct PairInput {
    #[command(flatten)]
    quiver: QuiverInput,
    #[arg(long)]
    from: String,
    #[arg(long)]
    to: String,
}

/// Inline JSON, else the contents of the named file.
fn load(arg: &str) -> Result<String, CliError> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(arg.to_string());
    }
    let path = Path::new(arg);
    std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })
}

fn load_quiver(arg: &str) -> Result<Quiver, CliError> {
    if !arg.is_empty() && arg.chars().all(|c| c == '+' || c == '-') {
        return arg.parse().map_err(|e| CliError::Usage(format!("{e}")));
    }
    Ok(parse_quiver(&load(arg)?)?)
}

fn load_diagram(input: &DiagramInput) -> Result<ArcDiagram, CliError> {
    match (&input.diagram, &input.quiver, &input.modules) {
        (Some(d), None, None) => Ok(parse_diagram(&load(d)?)?),
        (None, Some(q), Some(m)) => {
            let q = load_quiver(q)?;
            let modules = parse_modules(&q, &load(m)?)?;
            Ok(ArcDiagram::new(q, modules))
        }
        _ => Err(CliError::Usage("give --diagram, or --quiver with --modules".into())),
    }
}

fn module_json(q: &Quiver, m: &StringModule) -> Value {
    serde_json::to_value(ModuleJson::of(q, m)).expect("module JSON")
}

fn modules_json(q: &Quiver, ms: &[StringModule]) -> Value {
    Value::Array(ms.iter().map(|m| module_json(q, m)).collect())
}

fn diagram_json(d: &ArcDiagram) -> Value {
    serde_json::to_value(DiagramJson::of(d)).expect("diagram JSON")
}

fn report(command: &str, mut body: Value) -> Value {
    let map = body.as_object_mut().expect("reports are objects");
    map.insert("version".into(), json!(REPORT_VERSION));
    map.insert("command".into(), json!(command));
    body
}

enum Output {
    Json(Value),
    Svg(String),
}

struct Outcome {
    output: Output,
    code: i32,
}

impl Outcome {
    fn ok(output: Output) -> Outcome {
        Outcome { output, code: EXIT_OK }
    }
}

fn check_body(d: &ArcDiagram) -> Result<(Value, bool), CliError> {
    let q = &d.quiver;
    let exceptional = d.is_exceptional().map_err(IoError::from)?;
    let violations: Vec<Value> = d
        .violations()
        .iter()
        .map(|v| {
            json!({
                "first": module_json(q, &v.first),
                "second": module_json(q, &v.second),
                "relation": v.relation.as_str(),
            })
        })
        .collect();
    let order = d.order().map(|o| modules_json(q, &o)).unwrap_or(Value::Null);
    Ok((json!({ "exceptional": exceptional, "order": order, "violations": violations }), exceptional))
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let exec = if cli.sequential { Execution::Sequential } else { Execution::Parallel };
    match &cli.command {
        Command::Check(input) => {
            let d = load_diagram(input)?;
            let (body, ok) = check_body(&d)?;
            let code = if ok { EXIT_OK } else { EXIT_VIOLATION };
            Ok(Outcome { output: Output::Json(report("check", body)), code })
        }
        Command::Order(input) => {
            let d = load_diagram(input)?;
            let (body, ok) = check_body(&d)?;
            if !ok {
                return Ok(Outcome { output: Output::Json(report("order", body)), code: EXIT_VIOLATION });
            }
            let order = body["order"].clone();
            Ok(Outcome::ok(Output::Json(report("order", json!({ "order": order })))))
        }
        Command::Hom(p) | Command::Ext(p) => {
            let q = load_quiver(&p.quiver.quiver)?;
            let from = parse_module(&q, &load(&p.from)?)?;
            let to = parse_module(&q, &load(&p.to)?)?;
            let (name, dim) = match cli.command {
                Command::Hom(_) => ("hom", dim_hom(&q, &from, &to)),
                _ => ("ext", dim_ext(&q, &from, &to)),
            };
            Ok(Outcome::ok(Output::Json(report(name, json!({ "dim": dim })))))
        }
        Command::Tau { quiver, module, inverse } => {
            let q = load_quiver(&quiver.quiver)?;
            let m = parse_module(&q, &load(module)?)?;
            let image = if *inverse { m.tau_inv(&q) } else { m.tau(&q) };
            let body = json!({
                "module": module_json(&q, &m),
                "class": m.classify(&q).as_str(),
                "inverse": inverse,
                "result": image.map(|t| module_json(&q, &t)).unwrap_or(Value::Null),
            });
            Ok(Outcome::ok(Output::Json(report("tau", body))))
        }
        Command::Twist { input, times } => {
            let d = load_diagram(input)?;
            let t = dehn_twist_times(&d, *times);
            let family = match t.is_exceptional() {
                Ok(true) => {
                    let f = canonical_small(&t).map_err(|e| CliError::Usage(e.to_string()))?;
                    serde_json::to_value(FamilyJson::of(&f)).expect("family JSON")
                }
                _ => Value::Null,
            };
            let body = json!({ "times": times, "diagram": diagram_json(&t), "family": family });
            Ok(Outcome::ok(Output::Json(report("twist", body))))
        }
        Command::Families(input) => {
            let q = load_quiver(&input.quiver)?;
            let count = count_families(&q, exec);
            let reps = family_representatives(&q, exec).map_err(|e| CliError::Usage(e.to_string()))?;
            let body = json!({
                "quiver": q,
                "families": count,
                "representatives": reps.iter().map(diagram_json).collect::<Vec<_>>(),
            });
            Ok(Outcome::ok(Output::Json(report("families", body))))
        }
        Command::Enumerate { quiver, lambda_max } => {
            let q = load_quiver(&quiver.quiver)?;
            let mut ds: Vec<ArcDiagram> = enumerate_collections(&q, *lambda_max, exec).iter().map(|d| d.sorted()).collect();
            ds.sort_by(|a, b| a.modules.cmp(&b.modules));
            let body = json!({
                "quiver": q,
                "lambda_max": lambda_max,
                "count": ds.len(),
                "diagrams": ds.iter().map(diagram_json).collect::<Vec<_>>(),
            });
            Ok(Outcome::ok(Output::Json(report("enumerate", body))))
        }
        Command::Render(input) => {
            let d = load_diagram(input)?;
            Ok(Outcome::ok(Output::Svg(render_svg(&d, &SvgStyle::default()))))
        }
        Command::Verify { seed, samples, max_n } => verify(*seed, *samples, *max_n),
    }
}

fn verify(seed: u64, samples: usize, max_n: usize) -> Result<Outcome, CliError> {
    if max_n < 2 {
        return Err(CliError::Usage("--max-n must be at least 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0usize;
    let mut mismatches = Vec::new();
    for _ in 0..samples {
        let n = rng.gen_range(2..=max_n);
        let all = Quiver::all(n);
        let q = &all[rng.gen_range(0..all.len())];
        let pool = StringModule::all_up_to(q, 3 * n as i64);
        let u = pool[rng.gen_range(0..pool.len())];
        let v = pool[rng.gen_range(0..pool.len())];
        let label = || format!("{q} {} {}", u.label(q), v.label(q));
        let hom = dim_hom(q, &u, &v);
        checked += 1;
        if hom != dim_hom_linear_algebra(q, &u, &v) {
            mismatches.push(format!("hom {}", label()));
        }
        let e = euler_form(q, &u.dimension_vector(q), &v.dimension_vector(q));
        checked += 1;
        if hom as i64 - dim_ext(q, &u, &v) as i64 != e {
            mismatches.push(format!("euler {}", label()));
        }
        if u != v && u.is_exceptional(q) && v.is_exceptional(q) {
            checked += 1;
            let g = pair_relation(q, &u, &v).ok();
            let a = relation_algebraic(q, &u, &v).ok();
            if g != a {
                let show = |r: Option<PairRelation>| r.map(|r| r.as_str()).unwrap_or("error");
                mismatches.push(format!("relation {}: {} vs {}", label(), show(g), show(a)));
            }
        }
    }
    let code = if mismatches.is_empty() { EXIT_OK } else { EXIT_VIOLATION };
    let body = json!({ "seed": seed, "samples": samples, "checked": checked, "mismatches": mismatches });
    Ok(Outcome { output: Output::Json(report("verify", body)), code })
}

fn emit(out: Option<&Path>, output: &Output, stdout: &mut dyn Write) -> Result<(), CliError> {
    let mut text = match output {
        Output::Json(v) => serde_json::to_string_pretty(v).expect("JSON values serialize"),
        Output::Svg(s) => s.clone(),
    };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Write { path: path.to_path_buf(), source }),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Write { path: "<stdout>".into(), source }),
    }
}

/// Runs one command line, writing the report to `stdout` and diagnostics to `stderr`.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = execute(&cli).and_then(|o| emit(cli.out.as_deref(), &o.output, stdout).map(|_| o.code));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INVALID
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
