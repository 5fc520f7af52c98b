//! The `mvtool` command line: argument parsing, report building and exit
//! codes. Report builders are public so other front ends emit the same JSON.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::{json, Map, Value as Json};

use crate::decompose::{decompose_product_unchecked, product_reconstruction_check};
use crate::descriptor::{
    parse_element, parse_elements, parse_group, parse_monoid, parse_mv, parse_structure,
};
use crate::equivalence::{self, RoundTrip};
use crate::error::{Error, Result};
use crate::lgroup::{LGroup, Monoid, Verdict};
use crate::model::{ModelHandle, Structure};
use crate::mv::MvAlgebra;
use crate::sequent::{self, registry, CheckOptions, CheckReport, Env, FamilyReport, Sampling, Sequent};
use crate::value::Value;

/// Version of the JSON report layout.
pub const SCHEMA: u64 = 1;

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    CounterExample,
    Inconclusive,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Holds => EXIT_HOLDS,
            Outcome::CounterExample => EXIT_COUNTEREXAMPLE,
            Outcome::Inconclusive => EXIT_INCONCLUSIVE,
        }
    }

    fn of<W>(v: &Verdict<W>) -> Self {
        match v {
            Verdict::Holds => Outcome::Holds,
            Verdict::CounterExample(_) => Outcome::CounterExample,
            Verdict::Inconclusive(_) => Outcome::Inconclusive,
        }
    }

    fn of_label(label: &str) -> Self {
        match label {
            "holds" => Outcome::Holds,
            "inconclusive" => Outcome::Inconclusive,
            _ => Outcome::CounterExample,
        }
    }

    /// Counterexamples dominate inconclusive results.
    fn worst(self, other: Outcome) -> Outcome {
        use Outcome::*;
        match (self, other) {
            (CounterExample, _) | (_, CounterExample) => CounterExample,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            _ => Holds,
        }
    }
}

/// A finished command: its JSON report, a text rendering and the outcome.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub json: Json,
    pub text: String,
    pub outcome: Outcome,
}

impl Report {
    /// The JSON report with `elapsed_ms` attached when given.
    pub fn to_json_string(&self, elapsed_ms: Option<u64>) -> String {
        let mut j = self.json.clone();
        if let (Some(ms), Json::Object(m)) = (elapsed_ms, &mut j) {
            m.insert("elapsed_ms".into(), ms.into());
        }
        serde_json::to_string_pretty(&j).expect("reports serialize")
    }
}

fn header(command: &str) -> Map<String, Json> {
    let mut m = Map::new();
    m.insert("schema".into(), SCHEMA.into());
    m.insert("command".into(), command.into());
    m
}

fn big(n: u128) -> Json {
    u64::try_from(n).map(Json::from).unwrap_or_else(|_| n.to_string().into())
}

/// `{"x": "1/2", ...}`.
pub fn env_json(env: &Env) -> Json {
    Json::Object(env.iter().map(|(k, v)| (k.clone(), v.to_string().into())).collect())
}

fn env_text(env: &Env) -> String {
    env.iter().map(|(k, v)| format!("{k} = {v}")).collect::<Vec<_>>().join(", ")
}

pub fn check_report_json(r: &CheckReport) -> Json {
    let mut m = Map::new();
    m.insert("model".into(), r.model.clone().into());
    m.insert("sequent".into(), r.sequent.clone().into());
    m.insert("bound".into(), r.bound.into());
    m.insert("verdict".into(), r.verdict.label().into());
    match &r.verdict {
        Verdict::CounterExample(env) => {
            m.insert("counterexample".into(), env_json(env));
        }
        Verdict::Inconclusive(env) => {
            m.insert("unsettled".into(), env_json(env));
        }
        Verdict::Holds => {}
    }
    m.insert("environments".into(), big(r.environments));
    m.insert("examined".into(), r.examined.into());
    m.insert("caveats".into(), r.caveats.clone().into());
    Json::Object(m)
}

fn check_report_text(r: &CheckReport) -> String {
    let mut s = format!("{}: {} in {} at bound {}", r.sequent, r.verdict.label(), r.model, r.bound);
    match &r.verdict {
        Verdict::CounterExample(env) => s += &format!("\n  counterexample: {}", env_text(env)),
        Verdict::Inconclusive(env) => s += &format!("\n  unsettled at: {}", env_text(env)),
        Verdict::Holds => {}
    }
    for c in &r.caveats {
        s += &format!("\n  note: {c}");
    }
    s
}

pub fn check(model: &ModelHandle, s: &Sequent, opts: &CheckOptions) -> Result<Report> {
    let r = sequent::check_sequent(model, s, opts)?;
    let mut m = header("check");
    if let Json::Object(body) = check_report_json(&r) {
        m.extend(body);
    }
    if let Some(sm) = opts.sampling {
        m.insert("sampling".into(), json!({"seed": sm.seed, "samples": sm.samples}));
    }
    Ok(Report { json: Json::Object(m), text: check_report_text(&r), outcome: Outcome::of(&r.verdict) })
}

pub fn family_report_json(r: &FamilyReport) -> Json {
    json!({
        "model": r.model,
        "bound": r.bound,
        "verdict": r.verdict(),
        "entries": r.entries.iter().map(check_report_json).collect::<Vec<_>>(),
        "comparisons": r.comparisons.iter().map(|c| json!({
            "left": c.left,
            "right": c.right,
            "left_verdict": c.left_verdict,
            "right_verdict": c.right_verdict,
            "agree": c.agree(),
        })).collect::<Vec<_>>(),
    })
}

pub fn check_family(model: &ModelHandle, labels: &[&str], opts: &CheckOptions) -> Result<Report> {
    let r = sequent::check_family(model, labels, opts)?;
    let mut m = header("check-family");
    if let Json::Object(body) = family_report_json(&r) {
        m.extend(body);
    }
    let mut text: Vec<String> = r.entries.iter().map(check_report_text).collect();
    for c in &r.comparisons {
        text.push(format!(
            "{{{}}} {} vs {{{}}} {}: {}",
            c.left.join(","),
            c.left_verdict,
            c.right.join(","),
            c.right_verdict,
            if c.agree() { "agree" } else { "DISAGREE" }
        ));
    }
    text.push(format!("family: {}", r.verdict()));
    Ok(Report { json: Json::Object(m), text: text.join("\n"), outcome: Outcome::of_label(r.verdict()) })
}

/// What a round trip runs on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RoundTripTarget {
    /// `G -> Delta(Sigma(G))`.
    Group(LGroup),
    /// `A -> Sigma(Delta(A))`.
    Algebra(MvAlgebra),
    /// `M -> PosCone(Groth(M))`.
    Monoid(Monoid),
    /// `G -> Groth(PosCone(G))`.
    Chi(LGroup),
    /// Pair arithmetic in `Delta(A)` against the algebra.
    Pairs(MvAlgebra),
}

pub fn roundtrip_json(r: &RoundTrip) -> Json {
    serde_json::to_value(r).expect("round trips serialize")
}

pub fn roundtrip(target: &RoundTripTarget, bound: u64) -> Result<Report> {
    let r = match target {
        RoundTripTarget::Group(g) => equivalence::roundtrip_group(g, bound)?,
        RoundTripTarget::Algebra(a) => equivalence::roundtrip_algebra(a, bound)?,
        RoundTripTarget::Monoid(m) => equivalence::roundtrip_monoid(m, bound)?,
        RoundTripTarget::Chi(g) => equivalence::roundtrip_chi(g, bound)?,
        RoundTripTarget::Pairs(a) => equivalence::roundtrip_pairs(a, bound)?,
    };
    let mut m = header("roundtrip");
    if let Json::Object(body) = roundtrip_json(&r) {
        m.extend(body);
    }
    let outcome = if r.holds() { Outcome::Holds } else { Outcome::CounterExample };
    m.insert("verdict".into(), if r.holds() { "holds" } else { "counterexample" }.into());
    let mut text = format!(
        "{}: {} pairs checked at bound {}, {} failure(s)",
        r.direction,
        r.checked_pairs,
        r.bound,
        r.failures.len()
    );
    for f in &r.failures {
        text += &format!("\n  {f}");
    }
    Ok(Report { json: Json::Object(m), text, outcome })
}

/// Splits `a` along its generators, checks each factor for perfection and
/// the product map for being an isomorphism.
pub fn decompose(a: &MvAlgebra, gens: &[Value], bound: u64) -> Result<Report> {
    let d = decompose_product_unchecked(a, gens)?;
    let mut outcome = Outcome::Holds;
    let mut perfect = Vec::new();
    let mut text = vec![d.to_string()];
    for (q, at) in d.factors.iter().zip(&d.atoms) {
        let v = q.algebra.check_perfect(bound)?;
        outcome = outcome.worst(Outcome::of(&v));
        let mut entry = json!({"verdict": v.label()});
        let mut line = format!("  atom {at}: {} perfect: {}", q.algebra, v.label());
        if let Verdict::CounterExample(f) | Verdict::Inconclusive(f) = &v {
            entry["axiom"] = f.axiom.into();
            entry["x"] = f.x.to_string().into();
            line += &format!(" ({} at {})", f.axiom, f.x);
        }
        perfect.push(entry);
        text.push(line);
    }
    let rec = product_reconstruction_check(&d, bound)?;
    outcome = outcome.worst(Outcome::of(&rec));
    let mut rec_json = json!({"verdict": rec.label()});
    text.push(format!("  reconstruction: {}", rec.label()));
    if let Verdict::CounterExample(f) | Verdict::Inconclusive(f) = &rec {
        rec_json["check"] = f.check.into();
        rec_json["element"] = f.element.to_string().into();
        text.push(format!("    {} fails at {}", f.check, f.element));
    }
    let mut m = header("decompose");
    m.insert("model".into(), a.to_string().into());
    m.insert("bound".into(), bound.into());
    m.insert("generators".into(), gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().into());
    m.insert("atoms".into(), d.atoms.iter().map(|x| x.to_string()).collect::<Vec<_>>().into());
    m.insert(
        "factor_descriptors".into(),
        d.factors.iter().map(|q| q.algebra.to_string()).collect::<Vec<_>>().into(),
    );
    m.insert("perfect_verdicts".into(), perfect.into());
    m.insert("reconstruction_verdict".into(), rec_json);
    m.insert("verdict".into(), label(outcome).into());
    Ok(Report { json: Json::Object(m), text: text.join("\n"), outcome })
}

fn label(o: Outcome) -> &'static str {
    match o {
        Outcome::Holds => "holds",
        Outcome::CounterExample => "counterexample",
        Outcome::Inconclusive => "inconclusive",
    }
}

pub fn ant_check(g: &LGroup, u: &Value, bound: u64) -> Result<Report> {
    let v = equivalence::ant_check(g, u, bound)?;
    let mut m = header("ant-check");
    m.insert("model".into(), format!("{g}/{u}").into());
    m.insert("bound".into(), bound.into());
    m.insert("verdict".into(), v.label().into());
    let mut text = format!("{g} with unit {u}: {} at bound {bound}", v.label());
    if let Verdict::CounterExample(f) | Verdict::Inconclusive(f) = &v {
        m.insert("counterexample".into(), json!({"sequent": f.sequent, "x": f.x.to_string()}));
        text += &format!("\n  {} fails at x = {}", f.sequent, f.x);
    }
    Ok(Report { json: Json::Object(m), text, outcome: Outcome::of(&v) })
}

pub fn registry_list() -> Report {
    let entries = registry::entries();
    let width = entries.iter().map(|e| e.label.len()).max().unwrap_or(0);
    let text =
        entries.iter().map(|e| format!("{:width$}  {}", e.label, e.location)).collect::<Vec<_>>().join("\n");
    let list: Vec<Json> = entries
        .iter()
        .map(|e| {
            json!({
                "label": e.label,
                "location": e.location,
                "theory": e.theory.to_string(),
                "status": match e.status {
                    registry::Status::Axiom => "axiom",
                    registry::Status::Provable => "provable",
                },
                "sequent": e.source,
            })
        })
        .collect();
    let mut m = header("registry-list");
    m.insert("entries".into(), list.into());
    Report { json: Json::Object(m), text, outcome: Outcome::Holds }
}

/// A model descriptor with an optional distinguished element.
pub fn load_model(descriptor: &str, unit: Option<&str>) -> Result<ModelHandle> {
    let s = parse_structure(descriptor)?;
    Ok(match unit {
        Some(u) => {
            let u = parse_element(&s, u)?;
            ModelHandle::with_unit(s, u)
        }
        None => ModelHandle::new(s),
    })
}

/// A registry label, `@path`, `@-` for stdin, or an inline sequent.
pub fn load_sequent(source: &str) -> Result<Sequent> {
    if let Some(path) = source.strip_prefix('@') {
        let mut src = String::new();
        if path == "-" {
            io::stdin().read_to_string(&mut src)
        } else {
            std::fs::File::open(path).and_then(|mut f| f.read_to_string(&mut src))
        }
        .map_err(|e| Error::NotFound(format!("cannot read {path}: {e}")))?;
        return sequent::parse_sequent(&src);
    }
    match registry::lookup(source) {
        Ok(s) => Ok(s),
        Err(not_found) if !source.contains("|-") => Err(not_found),
        Err(_) => sequent::parse_sequent(source),
    }
}

#[derive(Parser, Debug)]
#[command(name = "mvtool", version, about = "Bounded model checking for MV-algebras and l-groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Enumeration bound.
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
    bound: u64,
    /// Emit a JSON report.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct ModelArgs {
    /// Model descriptor, e.g. `C`, `Prod(C,B)`, `Lex(Z,Z)`.
    #[arg(long)]
    model: String,
    /// Distinguished element (`u` or `a` in sequents).
    #[arg(long)]
    unit: Option<String>,
}

#[derive(Args, Debug)]
struct SamplingArgs {
    /// Seed for sampled checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Check this many random environments instead of all of them.
    #[arg(long)]
    samples: Option<u64>,
    /// Enumeration bound for existential witnesses (default twice the bound).
    #[arg(long)]
    witness_bound: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check one sequent in one model.
    Check {
        #[command(flatten)]
        model: ModelArgs,
        /// Registry label, `@file`, `@-` or an inline sequent.
        #[arg(long)]
        sequent: String,
        #[command(flatten)]
        sampling: SamplingArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Check a list of registry sequents and compare equivalent families.
    CheckFamily {
        #[command(flatten)]
        model: ModelArgs,
        /// Comma-separated registry labels.
        #[arg(long, value_delimiter = ',', required = true)]
        sequents: Vec<String>,
        #[command(flatten)]
        sampling: SamplingArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Check a functor round trip.
    #[command(group(ArgGroup::new("target").required(true).args(["group", "algebra", "monoid", "chi", "pairs"])))]
    Roundtrip {
        /// l-group G: G -> Delta(Sigma(G)).
        #[arg(long)]
        group: Option<String>,
        /// Perfect algebra A: A -> Sigma(Delta(A)).
        #[arg(long)]
        algebra: Option<String>,
        /// Monoid M: M -> PosCone(Groth(M)).
        #[arg(long)]
        monoid: Option<String>,
        /// l-group G: G -> Groth(PosCone(G)).
        #[arg(long)]
        chi: Option<String>,
        /// Perfect algebra A: pair arithmetic of Delta(A).
        #[arg(long)]
        pairs: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Split an algebra into perfect factors along Boolean atoms.
    Decompose {
        #[arg(long)]
        model: String,
        /// Comma-separated generators.
        #[arg(long)]
        gens: String,
        #[command(flatten)]
        common: Common,
    },
    /// Check the antiarchimedean sequents on a unital l-group.
    AntCheck {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        common: Common,
    },
    /// List the sequent registry.
    RegistryList {
        #[arg(long)]
        json: bool,
    },
}

fn options(bound: u64, s: &SamplingArgs) -> CheckOptions {
    CheckOptions {
        bound,
        witness_bound: s.witness_bound,
        sampling: s.samples.map(|samples| Sampling { seed: s.seed, samples }),
    }
}

fn dispatch(command: Command) -> Result<(Report, bool)> {
    Ok(match command {
        Command::Check { model, sequent, sampling, common } => {
            let m = load_model(&model.model, model.unit.as_deref())?;
            let s = load_sequent(&sequent)?;
            (check(&m, &s, &options(common.bound, &sampling))?, common.json)
        }
        Command::CheckFamily { model, sequents, sampling, common } => {
            let m = load_model(&model.model, model.unit.as_deref())?;
            let labels: Vec<&str> = sequents.iter().map(|s| s.trim()).collect();
            (check_family(&m, &labels, &options(common.bound, &sampling))?, common.json)
        }
        Command::Roundtrip { group, algebra, monoid, chi, pairs, common } => {
            let target = if let Some(g) = group {
                RoundTripTarget::Group(parse_group(&g)?)
            } else if let Some(a) = algebra {
                RoundTripTarget::Algebra(parse_mv(&a)?)
            } else if let Some(m) = monoid {
                RoundTripTarget::Monoid(parse_monoid(&m)?)
            } else if let Some(g) = chi {
                RoundTripTarget::Chi(parse_group(&g)?)
            } else {
                RoundTripTarget::Pairs(parse_mv(pairs.as_deref().unwrap_or_default())?)
            };
            (roundtrip(&target, common.bound)?, common.json)
        }
        Command::Decompose { model, gens, common } => {
            let a = parse_mv(&model)?;
            let gens = parse_elements(&Structure::Mv(a.clone()), &gens)?;
            (decompose(&a, &gens, common.bound)?, common.json)
        }
        Command::AntCheck { model, common } => {
            let g = parse_group(&model.model)?;
            let unit = model.unit.ok_or_else(|| Error::InvalidArgument("ant-check needs --unit".into()))?;
            let u = parse_element(&Structure::Group(g.clone()), &unit)?;
            (ant_check(&g, &u, common.bound)?, common.json)
        }
        Command::RegistryList { json } => (registry_list(), json),
    })
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_HOLDS };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let start = Instant::now();
    match dispatch(cli.command) {
        Ok((report, as_json)) => {
            let written = if as_json {
                let ms = start.elapsed().as_millis() as u64;
                writeln!(out, "{}", report.to_json_string(Some(ms)))
            } else {
                writeln!(out, "{}", report.text)
            };
            if written.is_err() {
                return EXIT_USAGE;
            }
            report.outcome.exit_code()
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
