//! Command-line surface. Exit codes: 0 pass, 1 check failed (witnesses
//! printed), 2 usage, input or parse error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{IsTerminal, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{check_axioms, Axiom, AxiomMode, HyperVectorSpace};
use crate::hvs_ops::{scalar_product, soft_extended_sum, soft_negate, soft_sum};
use crate::io::{self, Document, Section};
use crate::lab::{
    evaluate, run_in_pool, run_suite, search_counterexamples, FieldChoice, Instance, InstanceSpec, Outcome, Pool,
    PropertyId, PropertyResult, Strategy, SuiteConfig, Verdict,
};
use crate::soft::{
    and_product, extended_intersection, intersection, is_subset, or_product, restricted_union, union,
    BipolarFuzzySoftSet,
};
use crate::structure::{is_bfs_hypervector_space, is_subhyperspace};
use crate::transform::{classify_map, image, preimage, FuzzySoftFunction};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "hypersoft",
    version,
    about = "Exact checks and operations for finite hypervector spaces and bipolar fuzzy soft sets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Inputs {
    /// Input files in the section format.
    #[arg(required = true, value_name = "FILE")]
    files: Vec<PathBuf>,
    /// Additional file holding the hypervector space.
    #[arg(long, value_name = "FILE")]
    hvs: Option<PathBuf>,
    /// Name of the hvs section to use when the inputs hold several.
    #[arg(long, value_name = "NAME")]
    space: Option<String>,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Write the result to a file instead of stdout.
    #[arg(short, long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Strict,
    Compat,
}

impl From<ModeArg> for AxiomMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Strict => AxiomMode::STRICT,
            ModeArg::Compat => AxiomMode::COMPAT,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpKind {
    Subset,
    Meet,
    Emeet,
    Join,
    Rjoin,
    And,
    Or,
    Sum,
    Esum,
    Scale,
    Neg,
    Image,
    Preimage,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Audit H1–H5 and strong distributivity of a hypervector space.
    CheckAxioms {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, value_enum, default_value = "strict")]
        mode: ModeArg,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check one parameter's bipolar fuzzy set against the subhyperspace conditions.
    CheckSubhyperspace {
        #[command(flatten)]
        inputs: Inputs,
        /// The bfss section to read.
        #[arg(long, value_name = "NAME")]
        bfss: Option<String>,
        /// The parameter to check; required when the soft set has several.
        #[arg(long, value_name = "NAME")]
        param: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check every parameter of a soft set against the subhyperspace conditions.
    CheckBfshvs {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, value_name = "NAME")]
        bfss: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Apply a soft set operation; the result is printed as a bfss section.
    Op {
        #[arg(value_enum)]
        op: OpKind,
        #[command(flatten)]
        inputs: Inputs,
        /// Operand bfss sections in order (default: every bfss section in input order).
        #[arg(long = "bfss", value_name = "NAME")]
        operands: Vec<String>,
        /// Scalar for `scale`.
        #[arg(long)]
        scalar: Option<usize>,
        /// Map section for `image` and `preimage`.
        #[arg(long, value_name = "NAME")]
        map: Option<String>,
        /// Section name of the result.
        #[arg(long, default_value = "result")]
        name: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Classify a map section as additive, linear and good. Exits 0 when linear.
    ClassifyMap {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, value_name = "NAME")]
        map: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Search for a counterexample to a property (P1..P10 or a probe).
    Fuzz {
        property: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Qualifying instances to try.
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        #[arg(long, value_enum, default_value = "strict")]
        mode: ModeArg,
        /// `mixed` (every family plus random tables) or a single strategy.
        #[arg(long, default_value = "mixed")]
        strategy: String,
        /// Field for a single strategy: z2 or z3.
        #[arg(long, default_value = "z2")]
        field: String,
        #[arg(long, default_value_t = 9)]
        max_carrier: usize,
        /// Re-evaluate the property on a saved counterexample instead of searching.
        #[arg(long, value_name = "FILE")]
        replay: Option<PathBuf>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the full property suite.
    Report {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Instances per closure property.
        #[arg(long, default_value_t = 100)]
        budget: usize,
        /// Instances for P1–P3.
        #[arg(long, default_value_t = 200)]
        basic_budget: usize,
        /// Instances for the union-overlap probe.
        #[arg(long, default_value_t = 10_000)]
        probe_budget: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug)]
struct CliError(String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

struct Style {
    color: bool,
}

impl Style {
    fn verdict(&self, ok: bool) -> String {
        let (word, code) = if ok { ("pass", "32") } else { ("fail", "31") };
        if self.color {
            format!("\x1b[{code}m{word}\x1b[0m")
        } else {
            word.to_string()
        }
    }
}

/// Entry point for the binary: real stdout/stderr, colour unless
/// `NO_COLOR` is set or stdout is not a terminal.
pub fn main_entry() -> i32 {
    let color = std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && std::io::stdout().is_terminal();
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    run(std::env::args_os(), color, &mut out, &mut err)
}

pub fn run<I, T>(args: I, color: bool, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let style = Style { color };
    match dispatch(cli.command, &style, stdout) {
        Ok(code) => code,
        Err(CliError(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn load(inputs: &Inputs) -> CliResult<Document> {
    let paths: Vec<&PathBuf> = inputs.hvs.iter().chain(inputs.files.iter()).collect();
    let texts = paths
        .iter()
        .map(|p| {
            fs::read_to_string(p)
                .map(|t| (p.display().to_string(), t))
                .map_err(|e| CliError(format!("cannot read {}: {e}", p.display())))
        })
        .collect::<CliResult<Vec<_>>>()?;
    let sources: Vec<(&str, &str)> = texts.iter().map(|(l, t)| (l.as_str(), t.as_str())).collect();
    Ok(io::parse_sources(&sources)?)
}

fn pick_hvs<'a>(doc: &'a Document, name: Option<&str>) -> CliResult<(&'a str, &'a HyperVectorSpace)> {
    let all: Vec<&Section> = doc.of_kind("hvs").collect();
    let section = match name {
        Some(n) => doc.get(n).filter(|s| s.kind() == "hvs").ok_or_else(|| CliError(format!("no hvs section `{n}`")))?,
        None => match all.as_slice() {
            [one] => one,
            [] => return Err(CliError("the inputs contain no hvs section".into())),
            _ => return Err(CliError("the inputs contain several hvs sections; choose one with --space".into())),
        },
    };
    match section {
        Section::Hvs { name, space, .. } => Ok((name, space)),
        _ => unreachable!("filtered by kind"),
    }
}

fn pick_bfss<'a>(doc: &'a Document, names: &[String]) -> CliResult<Vec<(&'a str, &'a BipolarFuzzySoftSet)>> {
    let as_pair = |s: &'a Section| match s {
        Section::Bfss { name, set } => Some((name.as_str(), set)),
        _ => None,
    };
    if names.is_empty() {
        return Ok(doc.sections.iter().filter_map(as_pair).collect());
    }
    names
        .iter()
        .map(|n| doc.get(n).and_then(as_pair).ok_or_else(|| CliError(format!("no bfss section `{n}`"))))
        .collect()
}

fn pick_one_bfss<'a>(doc: &'a Document, name: Option<&String>) -> CliResult<(&'a str, &'a BipolarFuzzySoftSet)> {
    let found = pick_bfss(doc, name.map(std::slice::from_ref).unwrap_or(&[]))?;
    match found.as_slice() {
        [one] => Ok(*one),
        [] => Err(CliError("the inputs contain no bfss section".into())),
        _ => Err(CliError("the inputs contain several bfss sections; choose one with --bfss".into())),
    }
}

fn pick_map<'a>(
    doc: &'a Document,
    name: Option<&str>,
) -> CliResult<(&'a str, &'a str, &'a str, &'a FuzzySoftFunction)> {
    let maps: Vec<&Section> = doc.of_kind("map").collect();
    let section = match name {
        Some(n) => doc.get(n).filter(|s| s.kind() == "map").ok_or_else(|| CliError(format!("no map section `{n}`")))?,
        None => match maps.as_slice() {
            [one] => one,
            [] => return Err(CliError("the inputs contain no map section".into())),
            _ => return Err(CliError("the inputs contain several map sections; choose one with --map".into())),
        },
    };
    match section {
        Section::Map { name, from, to, function } => Ok((name, from, to, function)),
        _ => unreachable!("filtered by kind"),
    }
}

fn emit(out: &OutputArgs, text: &str, stdout: &mut dyn Write) -> CliResult<()> {
    match &out.output {
        Some(path) => fs::write(path, text).map_err(|e| CliError(format!("cannot write {}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(CliError::from),
    }
}

fn json<T: Serialize>(value: &T) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn code(ok: bool) -> i32 {
    if ok {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn dispatch(command: Command, style: &Style, stdout: &mut dyn Write) -> CliResult<i32> {
    match command {
        Command::CheckAxioms { inputs, mode, out } => {
            let doc = load(&inputs)?;
            let (name, v) = pick_hvs(&doc, inputs.space.as_deref())?;
            let report = check_axioms(v, mode.into());
            let text = if out.json {
                json(&report)?
            } else {
                let mut t = format!("hvs {name} (mode {})\n", report.mode);
                for ax in Axiom::ALL {
                    let ws: Vec<_> = report.witnesses_for(ax).collect();
                    let _ = write!(t, "{ax} {}", style.verdict(report.verdict(ax)));
                    if !ws.is_empty() {
                        let _ = write!(t, " ({} witnesses)", ws.len());
                    }
                    t.push('\n');
                    for w in ws {
                        let _ = writeln!(t, "  {w}");
                    }
                }
                let _ = writeln!(t, "strongly right distributive: {}", report.strongly_right_distributive);
                let _ = writeln!(t, "strongly left distributive: {}", report.strongly_left_distributive);
                let _ = writeln!(t, "verdict: {}", style.verdict(report.passed()));
                t
            };
            emit(&out, &text, stdout)?;
            Ok(code(report.passed()))
        }
        Command::CheckSubhyperspace { inputs, bfss, param, out } => {
            let doc = load(&inputs)?;
            let (_, v) = pick_hvs(&doc, inputs.space.as_deref())?;
            let (set_name, set) = pick_one_bfss(&doc, bfss.as_ref())?;
            let p = match param {
                Some(p) => p,
                None if set.len() == 1 => set.params().next().unwrap().to_string(),
                None => {
                    return Err(CliError(format!(
                        "bfss `{set_name}` has {} parameters; choose one with --param",
                        set.len()
                    )))
                }
            };
            let b = set.get(&p).ok_or_else(|| CliError(format!("bfss `{set_name}` has no parameter `{p}`")))?;
            let report = is_subhyperspace(b, v)?;
            let text = if out.json {
                json(&report)?
            } else {
                let mut t = format!("{set_name}[{p}]: {}\n", style.verdict(report.verdict));
                for w in &report.witnesses {
                    let _ = writeln!(t, "  {w}");
                }
                t
            };
            emit(&out, &text, stdout)?;
            Ok(code(report.verdict))
        }
        Command::CheckBfshvs { inputs, bfss, out } => {
            let doc = load(&inputs)?;
            let (hvs_name, v) = pick_hvs(&doc, inputs.space.as_deref())?;
            let (set_name, set) = pick_one_bfss(&doc, bfss.as_ref())?;
            let report = is_bfs_hypervector_space(set, v)?;
            let text = if out.json {
                json(&report)?
            } else {
                let mut t = format!("bfss {set_name} over {hvs_name}\n");
                for (p, r) in &report.per_param {
                    let _ = writeln!(t, "param {p}: {}", style.verdict(r.verdict));
                    for w in &r.witnesses {
                        let _ = writeln!(t, "  {w}");
                    }
                }
                let _ = writeln!(t, "verdict: {}", style.verdict(report.verdict));
                t
            };
            emit(&out, &text, stdout)?;
            Ok(code(report.verdict))
        }
        Command::Op { op, inputs, operands, scalar, map, name, out } => {
            run_op(op, &inputs, &operands, scalar, map, &name, &out, style, stdout)
        }
        Command::ClassifyMap { inputs, map, out } => {
            let doc = load(&inputs)?;
            let (name, from, to, t) = pick_map(&doc, map.as_deref())?;
            let (v, w) = (doc.hvs(from).expect("resolved"), doc.hvs(to).expect("resolved"));
            let report = classify_map(t.phi(), v, w)?;
            let text = if out.json {
                json(&report)?
            } else {
                let mut t = format!("map {name}: {from} -> {to}\n");
                let _ = write!(t, "additive: {}", report.additive);
                if let Some(w) = &report.additive_witness {
                    let _ = write!(
                        t,
                        " (x={}, y={}: T(x+y)={} but T(x)+T(y)={})",
                        w.x, w.y, w.image_of_sum, w.sum_of_images
                    );
                }
                let _ = write!(t, "\nlinear: {}", report.linear);
                if let Some(w) = &report.linear_witness {
                    let _ = write!(t, " (a={}, x={}: T(a∘x)={} not within a∘T(x)={})", w.a, w.x, w.image, w.target);
                }
                let _ = write!(t, "\ngood: {}", report.good);
                if let Some(w) = &report.good_witness {
                    let _ = write!(t, " (a={}, x={}: T(a∘x)={} but a∘T(x)={})", w.a, w.x, w.image, w.target);
                }
                t.push('\n');
                t
            };
            emit(&out, &text, stdout)?;
            Ok(code(report.linear))
        }
        Command::Fuzz { property, seed, budget, mode, strategy, field, max_carrier, replay, out } => {
            let pid: PropertyId = property.parse().map_err(CliError)?;
            let mode: AxiomMode = mode.into();
            if let Some(path) = replay {
                let text =
                    fs::read_to_string(&path).map_err(|e| CliError(format!("cannot read {}: {e}", path.display())))?;
                let doc = io::parse_sources(&[(&path.display().to_string(), &text)])?;
                let inst = Instance::from_document(&doc).map_err(CliError)?;
                let outcome = evaluate(pid, mode, &inst);
                let text = if out.json {
                    json(&outcome)?
                } else {
                    match &outcome {
                        Outcome::Holds => format!("{pid}: holds on this instance\n"),
                        Outcome::Rejected(why) => format!("{pid}: instance rejected: {why}\n"),
                        Outcome::Fails(w) => format!("{pid}: counterexample confirmed\n  {w}\n"),
                    }
                };
                emit(&out, &text, stdout)?;
                return Ok(code(outcome == Outcome::Holds));
            }
            let result = if strategy == "mixed" {
                let mut pool = Pool::strict(seed, 6);
                if mode == AxiomMode::COMPAT {
                    pool = pool.with_fixture();
                    pool.mode = mode;
                }
                run_in_pool(pid, &pool, seed, budget)
            } else {
                let spec = InstanceSpec {
                    max_carrier,
                    field: field.parse::<FieldChoice>().map_err(CliError)?,
                    strategy: strategy.parse::<Strategy>().map_err(CliError)?,
                    mode,
                    seed,
                };
                search_counterexamples(pid, &spec, budget)
            };
            if out.json {
                emit(&out, &json(&result)?, stdout)?;
            } else {
                let mut t = result_line(&result, style);
                if let Some(cx) = &result.counterexample {
                    let _ = writeln!(t, "witness: {}", cx.witness);
                    match &out.output {
                        Some(path) => {
                            fs::write(path, &cx.document)
                                .map_err(|e| CliError(format!("cannot write {}: {e}", path.display())))?;
                            let _ = writeln!(t, "counterexample written to {}", path.display());
                        }
                        None => {
                            t.push('\n');
                            t.push_str(&cx.document);
                        }
                    }
                }
                stdout.write_all(t.as_bytes())?;
            }
            Ok(code(result.verdict == Verdict::Pass))
        }
        Command::Report { seed, budget, basic_budget, probe_budget, out } => {
            let config =
                SuiteConfig { seed, basic_budget, closure_budget: budget, probe_budget, ..SuiteConfig::default() };
            let report = run_suite(&config);
            let text = if out.json {
                json(&report)?
            } else {
                let mut t = format!("seed {seed}\n");
                for (title, rs) in [
                    ("theorems", &report.theorems),
                    ("fixture (compat)", &report.fixture_compat),
                    ("probes", &report.probes),
                ] {
                    let _ = writeln!(t, "\n{title}");
                    for r in rs.iter() {
                        t.push_str("  ");
                        t.push_str(&result_line(r, style));
                        if let Some(cx) = &r.counterexample {
                            let _ = writeln!(t, "    witness: {}", cx.witness);
                        }
                    }
                }
                t
            };
            emit(&out, &text, stdout)?;
            Ok(code(report.failing_theorems.is_empty()))
        }
    }
}

fn result_line(r: &PropertyResult, style: &Style) -> String {
    let verdict = match r.verdict {
        Verdict::Pass => style.verdict(true),
        Verdict::Fail => style.verdict(false),
        Verdict::Exhausted => "exhausted".to_string(),
    };
    let kind = if r.probe { " (probe)" } else { "" };
    format!(
        "{:<18} {verdict:<9} pool={} mode={} accepted={}/{} tried={} rejected={}{kind}\n",
        r.id.id(),
        r.pool,
        r.mode,
        r.accepted,
        r.budget,
        r.tried,
        r.rejected
    )
}

#[allow(clippy::too_many_arguments)]
fn run_op(
    op: OpKind,
    inputs: &Inputs,
    operands: &[String],
    scalar: Option<usize>,
    map: Option<String>,
    name: &str,
    out: &OutputArgs,
    style: &Style,
    stdout: &mut dyn Write,
) -> CliResult<i32> {
    let doc = load(inputs)?;
    let sets = pick_bfss(&doc, operands)?;
    let arity = match op {
        OpKind::Scale | OpKind::Neg | OpKind::Image | OpKind::Preimage => 1,
        _ => 2,
    };
    if sets.len() != arity {
        return Err(CliError(format!("`{op:?}` takes {arity} bfss operand(s), found {}", sets.len()).to_lowercase()));
    }
    let hvs = || pick_hvs(&doc, inputs.space.as_deref()).map(|(_, v)| v);
    let (f, g) = (sets[0].1, sets.get(1).map(|s| s.1));
    let g2 = || g.expect("arity checked");
    let result = match op {
        OpKind::Subset => {
            let verdict = is_subset(f, g2())?;
            let ok = verdict.is_ok();
            let text = if out.json {
                json(&serde_json::json!({ "subset": ok, "witness": verdict.err() }))?
            } else {
                let mut t = format!("{} ⊑ {}: {}\n", sets[0].0, sets[1].0, style.verdict(ok));
                if let Err(w) = verdict {
                    match (w.element, w.component) {
                        (Some(x), Some(c)) => {
                            let _ = writeln!(t, "  param {} element {x}: {} degree exceeds", w.param, c.name());
                        }
                        _ => {
                            let _ = writeln!(t, "  param {} missing from {}", w.param, sets[1].0);
                        }
                    }
                }
                t
            };
            emit(out, &text, stdout)?;
            return Ok(code(ok));
        }
        OpKind::Meet => intersection(f, g2())?,
        OpKind::Emeet => extended_intersection(f, g2())?,
        OpKind::Join => union(f, g2())?,
        OpKind::Rjoin => restricted_union(f, g2())?,
        OpKind::And => and_product(f, g2())?,
        OpKind::Or => or_product(f, g2())?,
        OpKind::Sum => soft_sum(f, g2(), hvs()?)?,
        OpKind::Esum => soft_extended_sum(f, g2(), hvs()?)?,
        OpKind::Scale => {
            let a = scalar.ok_or_else(|| CliError("`scale` needs --scalar".into()))?;
            scalar_product(a, f, hvs()?)?
        }
        OpKind::Neg => soft_negate(f, hvs()?)?,
        OpKind::Image | OpKind::Preimage => {
            let (_, from, to, t) = pick_map(&doc, map.as_deref())?;
            let expected = if op == OpKind::Image { doc.hvs(from) } else { doc.hvs(to) };
            if expected.map(|v| v.dim()) != Some(f.carrier()) {
                return Err(CliError(format!("operand carrier {} does not match the map", f.carrier())));
            }
            if op == OpKind::Image {
                image(t, f)?
            } else {
                preimage(t, f)?
            }
        }
    };
    let text = if out.json {
        json(&serde_json::json!({ "name": name, "bfss": result }))?
    } else {
        io::print_bfss(name, &result)
    };
    emit(out, &text, stdout)?;
    Ok(EXIT_PASS)
}
