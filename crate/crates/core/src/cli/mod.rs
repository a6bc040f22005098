//! The `flamingo` command line: argument parsing, file input, output
//! formatting and dispatch to the library.
//!
//! Output is one line of JSON by default; `--pretty` switches to a human
//! readable form. Exit status is 0 on success, 1 when a verification fails
//! and 2 on usage or input errors.

mod cache;
mod input;
mod render;
mod suites;

pub use cache::augmented_webs;
pub use input::{parse_partition, read_json, read_web};
pub use render::{render, tutte_layout, Format};
pub use suites::{run_suite, Check, Suite, SuiteReport};

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::invariants::{find_perfect_orientation, jellyfish_invariant, web_invariant, PerfectOrientation};
use crate::plabic::PlabicGraph;
use crate::sieving::csp_report;
use crate::skein::{apply_transposition, reduce_to_basis};
use crate::tableaux::*;
use crate::weblike::{decompose_invariant, nonempty};
use crate::webs::{phi, phi_inverse, AugmentedWeb};

/// A usage or input error, reported with exit status 2.
#[derive(Debug)]
pub struct CliError(String);

impl CliError {
    pub fn new(msg: impl Into<String>) -> Self {
        CliError(msg.into())
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(name = "flamingo", version, about = "Augmented webs and the flamingo Specht modules")]
struct Cli {
    /// Human-readable output instead of a single line of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Directory where enumerations of AW(n, d) are cached.
    #[arg(long, global = true, value_name = "DIR")]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
enum Kind {
    Syt,
    Rect,
    Wnc,
    Aw,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the objects of one kind for a shape.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Carry objects along the bijections syt - rect - wnc - aw.
    Biject {
        #[arg(long, value_enum)]
        from: Kind,
        #[arg(long, value_enum)]
        to: Kind,
        /// Number of rows, needed when leaving wnc towards rect.
        #[arg(long, default_value_t = 3)]
        r: usize,
        /// A JSON object or a list of them.
        #[arg(long)]
        input: PathBuf,
    },
    /// The web invariant of a web, and optionally a jellyfish invariant.
    Invariant {
        #[arg(long)]
        web: Option<PathBuf>,
        /// An ordered set partition such as `1,2,3|4,5,6`.
        #[arg(long)]
        jellyfish: Option<String>,
    },
    /// Apply s_i to a web and reduce the result to the augmented web basis.
    Skein {
        #[arg(long)]
        web: PathBuf,
        #[arg(long)]
        si: usize,
    },
    /// Split a web invariant into weblike-subgraph groups.
    Decompose {
        #[arg(long)]
        web: PathBuf,
    },
    /// Cyclic sieving report for AW(n, d).
    Csp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Run a verification suite at (n, d).
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Draw a web.
    Render {
        #[arg(long)]
        web: PathBuf,
        #[arg(long, value_enum, default_value = "svg")]
        format: Format,
        /// Output file; the document goes to standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// What a subcommand produced.
struct Output {
    json: Value,
    text: Option<String>,
    pass: bool,
}

impl Output {
    fn ok(json: Value) -> Self {
        Output { json, text: None, pass: true }
    }
}

/// Run the command line `argv` (program name first), writing to the process's
/// standard streams, and return the exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Render { web, format, out: Some(path) } => render_to_file(&web, format, &path),
        Command::Render { web, format, out: None } => {
            return match read_web(&web).and_then(|(g, _)| Ok(render(&g, format)?)) {
                Ok(doc) => {
                    let _ = out.write_all(doc.as_bytes());
                    0
                }
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    2
                }
            };
        }
        command => dispatch(command, &Settings { cache: cli.cache.clone() }),
    };
    match result {
        Ok(output) => {
            let body = match (&output.text, cli.pretty) {
                (Some(text), true) => text.clone(),
                (None, true) => serde_json::to_string_pretty(&output.json).expect("json") + "\n",
                (_, false) => serde_json::to_string(&output.json).expect("json") + "\n",
            };
            let _ = out.write_all(body.as_bytes());
            if output.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

struct Settings {
    cache: Option<PathBuf>,
}

fn dispatch(command: Command, settings: &Settings) -> Result<Output, CliError> {
    match command {
        Command::Enumerate { n, d, r, kind } => enumerate(settings, n, d, r, kind),
        Command::Biject { from, to, r, input } => biject(from, to, r, &read_json(&input)?),
        Command::Invariant { web, jellyfish } => invariant(web, jellyfish),
        Command::Skein { web, si } => skein(&web, si),
        Command::Decompose { web } => decompose(&web),
        Command::Csp { n, d } => {
            let webs = augmented_webs(settings.cache.as_deref(), n, d)?;
            let report = csp_report(n, d, &webs)?;
            Ok(Output { json: report.to_json(), text: Some(report.to_text()), pass: report.passed() })
        }
        Command::Verify { suite, n, d } => {
            let webs = augmented_webs(settings.cache.as_deref(), n, d)?;
            let report = run_suite(suite, n, d, &webs)?;
            Ok(Output { json: report.to_json(), text: Some(report.to_text()), pass: report.passed() })
        }
        Command::Render { .. } => unreachable!("handled by run_with"),
    }
}

fn enumerate(settings: &Settings, n: usize, d: usize, r: usize, kind: Kind) -> Result<Output, CliError> {
    let shape = FlamingoShape::new(n, d, r)?;
    let items: Vec<Value> = match kind {
        Kind::Syt => enumerate_syt(&shape).iter().map(|t| t.to_json()).collect(),
        Kind::Rect => enumerate_rect(&shape).iter().map(|t| t.to_json()).collect(),
        Kind::Wnc => enumerate_wnc(&shape).iter().map(|p| p.to_json()).collect(),
        Kind::Aw => {
            if r != 3 {
                return Err(CliError::new("augmented webs need r = 3"));
            }
            augmented_webs(settings.cache.as_deref(), n, d)?.iter().map(|w| w.graph().to_json()).collect()
        }
    };
    Ok(Output::ok(json!({ "kind": kind_name(kind), "n": n, "d": d, "r": r, "count": items.len(), "items": items })))
}

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::Syt => "syt",
        Kind::Rect => "rect",
        Kind::Wnc => "wnc",
        Kind::Aw => "aw",
    }
}

enum Item {
    Syt(StandardYoungTableau),
    Rect(RectTableau),
    Wnc(SetPartition),
    Aw(AugmentedWeb),
}

impl Item {
    fn parse(kind: Kind, value: &Value) -> crate::Result<Item> {
        Ok(match kind {
            Kind::Syt => Item::Syt(StandardYoungTableau::from_json(value)?),
            Kind::Rect => Item::Rect(RectTableau::from_json(value)?),
            Kind::Wnc => Item::Wnc(SetPartition::from_json(value)?),
            Kind::Aw => Item::Aw(AugmentedWeb::new(&PlabicGraph::from_json(value)?)?),
        })
    }

    fn to_json(&self) -> Value {
        match self {
            Item::Syt(t) => t.to_json(),
            Item::Rect(t) => t.to_json(),
            Item::Wnc(p) => p.to_json(),
            Item::Aw(w) => w.graph().to_json(),
        }
    }

    /// One step along syt - rect - wnc - aw, towards `up` or back.
    fn step(self, up: bool, r: usize) -> crate::Result<Item> {
        Ok(match (self, up) {
            (Item::Syt(t), true) => Item::Rect(syt_to_rect(&t)),
            (Item::Rect(t), true) => Item::Wnc(rect_to_wnc(&t)),
            (Item::Wnc(p), true) => Item::Aw(phi(&p)?),
            (Item::Aw(w), false) => Item::Wnc(phi_inverse(&w)?),
            (Item::Wnc(p), false) => Item::Rect(wnc_to_rect(&p, r)?),
            (Item::Rect(t), false) => Item::Syt(rect_to_syt(&t)),
            (item, _) => item,
        })
    }
}

fn biject(from: Kind, to: Kind, r: usize, input: &Value) -> Result<Output, CliError> {
    let convert = |v: &Value| -> Result<Value, CliError> {
        let mut item = Item::parse(from, v)?;
        let (mut at, up) = (from, from < to);
        while at != to {
            item = item.step(up, r)?;
            at = [Kind::Syt, Kind::Rect, Kind::Wnc, Kind::Aw][if up { at as usize + 1 } else { at as usize - 1 }];
        }
        Ok(item.to_json())
    };
    let json = match input {
        Value::Array(list) => Value::Array(list.iter().map(convert).collect::<Result<_, _>>()?),
        single => convert(single)?,
    };
    Ok(Output::ok(json))
}

fn web_and_orientation(path: &std::path::Path) -> Result<(PlabicGraph, PerfectOrientation), CliError> {
    let (g, o) = read_web(path)?;
    let o = match o {
        Some(o) => o,
        None => find_perfect_orientation(&g)?,
    };
    Ok((g, o))
}

fn invariant(web: Option<PathBuf>, jellyfish: Option<String>) -> Result<Output, CliError> {
    if web.is_none() && jellyfish.is_none() {
        return Err(CliError::new("invariant needs --web, --jellyfish or both"));
    }
    let mut json = json!({});
    let mut text = String::new();
    let mut polys = Vec::new();
    if let Some(path) = web {
        let (g, o) = web_and_orientation(&path)?;
        let p = web_invariant(&g, &o)?;
        json["orientation"] = o.to_json();
        json["invariant"] = p.to_json();
        text.push_str(&format!("[W, O]:\n{}", p.to_text()));
        polys.push(p);
    }
    if let Some(spec) = jellyfish {
        let pi = parse_partition(&spec)?;
        let p = jellyfish_invariant(&pi, 3)?;
        json["jellyfish"] = json!({ "partition": pi.blocks(), "invariant": p.to_json() });
        text.push_str(&format!("[pi]_3:\n{}", p.to_text()));
        polys.push(p);
    }
    if let [a, b] = polys.as_slice() {
        json["equal"] = json!(a == b);
        text.push_str(&format!("equal: {}\n", a == b));
    }
    Ok(Output { json, text: Some(text), pass: true })
}

fn skein(path: &std::path::Path, i: usize) -> Result<Output, CliError> {
    let (g, o) = web_and_orientation(path)?;
    let n = g.n();
    if i == 0 || i >= n {
        return Err(CliError::new(format!("--si must lie in 1..{}", n - 1)));
    }
    let crossing = apply_transposition(i, &g, &o)?;
    let reduced = reduce_to_basis(&crossing)?;
    let mut sigma: Vec<usize> = (1..=n).collect();
    sigma.swap(i - 1, i);
    let consistent = reduced.invariant()? == web_invariant(&g, &o)?.permute(&sigma)?;
    let json = json!({
        "si": i,
        "crossing": crossing.to_json(),
        "reduced": reduced.to_json(),
        "consistent": consistent,
    });
    Ok(Output { json, text: None, pass: consistent })
}

fn decompose(path: &std::path::Path) -> Result<Output, CliError> {
    let (g, o) = web_and_orientation(path)?;
    let groups = decompose_invariant(&g, &o)?;
    let shown: Vec<Value> = nonempty(&groups).map(|gr| gr.to_json()).collect();
    let json = json!({
        "weblike_subgraphs": groups.len(),
        "groups": shown,
    });
    Ok(Output::ok(json))
}

fn render_to_file(web: &std::path::Path, format: Format, path: &std::path::Path) -> Result<Output, CliError> {
    let (g, _) = read_web(web)?;
    let doc = render(&g, format)?;
    std::fs::write(path, &doc)?;
    Ok(Output::ok(json!({ "out": path.display().to_string(), "bytes": doc.len() })))
}
