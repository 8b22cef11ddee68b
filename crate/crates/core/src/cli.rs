//! The `segkit` command line: enumeration, conversion along the chain of
//! bijections, counting, and verification reports.
//!
//! [`run`] takes explicit streams and returns the exit code, so it can be
//! driven in-process. Exit codes: 0 success, 1 verification failure,
//! 2 usage or validation error.

use std::collections::{BTreeMap, VecDeque};
use std::ffi::OsString;
use std::io::{Read, Write};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::correspondences::{
    drinfeld_from_multipartition, eta, partial_inverse, partial_map, skew_drinfeld,
    skew_multisegment, theta, DrinfeldRoots,
};
use crate::error::Error;
use crate::hecke::{Bounds, QParam};
use crate::kleshchev::{
    column_residual_segments, enumerate_kleshchev, enumerate_standard_kleshchev, Charge,
};
use crate::partitions::{Multipartition, Partition, SkewShape};
use crate::report::Check;
use crate::segments::{
    multisegment_to_word, multisegments_in_window, standard_words_in_window, word_to_multisegment,
    MultisegmentZ, StandardWord,
};
use crate::suites;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "segkit",
    version,
    about = "Integral multisegments, Kleshchev multipartitions and Drinfeld roots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stream every object of a kind as JSON Lines.
    Enumerate(EnumArgs),
    /// Print the number of objects `enumerate` would stream.
    Count(EnumArgs),
    /// Convert a JSON payload between representations.
    Convert(ConvertArgs),
    /// Run a verification suite and emit a JSON report.
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum EnumKind {
    Kleshchev,
    StandardKleshchev,
    Multisegments,
    StandardWords,
    SkewShapes,
}

#[derive(clap::Args, Debug)]
struct EnumArgs {
    kind: EnumKind,
    /// Charge as a comma list, e.g. `2,0,-1`.
    #[arg(long, allow_hyphen_values = true)]
    f: Option<String>,
    /// Size.
    #[arg(long)]
    r: Option<usize>,
    /// Bound on segment endpoints, `lo..hi`.
    #[arg(long, allow_hyphen_values = true)]
    window: Option<String>,
    /// Largest `|λ|` for skew shapes `λ/ν`.
    #[arg(long)]
    outer_max: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ObjKind {
    Word,
    Multisegment,
    Kleshchev,
    Multipartition,
    Drinfeld,
    Skew,
}

impl ObjKind {
    fn name(self) -> &'static str {
        match self {
            ObjKind::Word => "word",
            ObjKind::Multisegment => "multisegment",
            ObjKind::Kleshchev => "kleshchev",
            ObjKind::Multipartition => "multipartition",
            ObjKind::Drinfeld => "drinfeld",
            ObjKind::Skew => "skew",
        }
    }
}

#[derive(clap::Args, Debug)]
struct ConvertArgs {
    #[arg(long, value_enum)]
    from: ObjKind,
    #[arg(long, value_enum)]
    to: ObjKind,
    /// Payload file, `-` for stdin.
    #[arg(long, default_value = "-")]
    input: String,
    /// Number of Drinfeld polynomials; defaults to the size `r`.
    #[arg(long)]
    n: Option<usize>,
    /// Include every intermediate object.
    #[arg(long)]
    trace: bool,
    /// Skip converting the result back to the source kind.
    #[arg(long)]
    no_roundtrip: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Suite {
    Relations,
    Specht,
    Jm,
    Bijections,
    Duality,
    Drinfeld,
    Skew,
    Lr,
    All,
}

#[derive(clap::Args, Debug)]
struct VerifyArgs {
    suite: Suite,
    #[arg(long)]
    r_max: Option<usize>,
    /// `q0` as an integer or `p/q`.
    #[arg(long, default_value = "2", allow_hyphen_values = true)]
    q0: String,
    /// Restrict Jucys–Murphy eigenvalue checks to one partition, e.g. `2,1`.
    #[arg(long)]
    lambda: Option<String>,
    /// Largest `|λ|` for skew shapes.
    #[arg(long)]
    outer_max: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<String>,
    /// Add wall-clock time to the report (makes output non-reproducible).
    #[arg(long)]
    timing: bool,
}

/// Failure modes mapped to exit codes.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Parse `args` (including the program name) and run.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{text}");
            } else {
                let _ = write!(stderr, "{text}");
            }
            return code;
        }
    };
    let res = match cli.command {
        Command::Enumerate(a) => cmd_enumerate(&a, stdout),
        Command::Count(a) => cmd_count(&a, stdout),
        Command::Convert(a) => cmd_convert(&a, stdin, stdout),
        Command::Verify(a) => cmd_verify(&a, stdout),
    };
    match res {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

pub fn parse_charge(s: &str) -> crate::Result<Charge> {
    Charge::new(parse_list(s, "charge")?)
}

pub fn parse_partition(s: &str) -> crate::Result<Partition> {
    let parts: Vec<i64> = parse_list(s, "partition")?;
    if parts.iter().any(|&p| p < 0) {
        return Err(Error::Parse {
            what: "partition",
            input: s.into(),
        });
    }
    Partition::new(parts.into_iter().map(|p| p as usize).collect())
}

fn parse_list(s: &str, what: &'static str) -> crate::Result<Vec<i64>> {
    let err = || Error::Parse {
        what,
        input: s.into(),
    };
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|x| x.trim().parse().map_err(|_| err()))
        .collect()
}

/// `lo..hi`, inclusive.
pub fn parse_window(s: &str) -> crate::Result<(i64, i64)> {
    let err = || Error::Parse {
        what: "window lo..hi",
        input: s.into(),
    };
    let (a, b) = s.split_once("..").ok_or_else(err)?;
    let lo: i64 = a.trim().parse().map_err(|_| err())?;
    let hi: i64 = b.trim().parse().map_err(|_| err())?;
    if lo > hi {
        return Err(err());
    }
    Ok((lo, hi))
}

fn enumerate_items(a: &EnumArgs) -> CliResult<Vec<Value>> {
    let charge = a.f.as_deref().map(parse_charge).transpose()?;
    let window = a.window.as_deref().map(parse_window).transpose()?;
    let need_r = || a.r.ok_or_else(|| usage("--r is required for this kind"));
    Ok(match a.kind {
        EnumKind::Kleshchev | EnumKind::StandardKleshchev => {
            let f = charge.ok_or_else(|| usage("--f is required for this kind"))?;
            let r = need_r()?;
            let items = if a.kind == EnumKind::Kleshchev {
                enumerate_kleshchev(&f, r)
            } else {
                enumerate_standard_kleshchev(&f, r)
            };
            items.iter().map(|x| json!(x)).collect()
        }
        EnumKind::Multisegments | EnumKind::StandardWords => {
            let r = need_r()?;
            let mss: Vec<MultisegmentZ> = match (window, charge) {
                (Some((lo, hi)), _) => {
                    if a.kind == EnumKind::StandardWords {
                        let ws = standard_words_in_window(r, lo, hi);
                        return Ok(ws.iter().map(|w| json!(w)).collect());
                    }
                    multisegments_in_window(r, lo, hi)
                }
                (None, Some(f)) => {
                    // The image of θ: multisegments whose η-charge is f.
                    let mut out = Vec::new();
                    for g in enumerate_standard_kleshchev(&f.f_star(), r) {
                        out.push(word_to_multisegment(&theta(&g, &f)?));
                    }
                    out.sort();
                    out
                }
                (None, None) => {
                    return Err(usage(
                        "the set of multisegments of a given size is infinite; pass --window lo..hi or --f",
                    ))
                }
            };
            if a.kind == EnumKind::StandardWords {
                mss.iter().map(|m| json!(multisegment_to_word(m))).collect()
            } else {
                mss.iter().map(|m| json!(m)).collect()
            }
        }
        EnumKind::SkewShapes => {
            let om = a
                .outer_max
                .ok_or_else(|| usage("--outer-max is required for skew-shapes"))?;
            SkewShape::all_with_outer_max(om)
                .into_iter()
                .filter(|s| a.r.is_none_or(|r| s.size() == r))
                .map(|s| json!(s))
                .collect()
        }
    })
}

fn cmd_enumerate(a: &EnumArgs, out: &mut dyn Write) -> CliResult<()> {
    for v in enumerate_items(a)? {
        writeln!(out, "{v}")?;
    }
    Ok(())
}

fn cmd_count(a: &EnumArgs, out: &mut dyn Write) -> CliResult<()> {
    let n = enumerate_items(a)?.len();
    let kind = a.kind.to_possible_value().expect("no skipped variants");
    writeln!(out, "{}", json!({"kind": kind.get_name(), "count": n}))?;
    Ok(())
}

/// An object in one of the convertible representations.
#[derive(Debug, Clone, PartialEq)]
pub enum Obj {
    Word(StandardWord),
    Multisegment(MultisegmentZ),
    Kleshchev { gamma: Multipartition, f: Charge },
    Multipartition { lambda: Multipartition, f: Charge },
    Drinfeld(DrinfeldRoots),
    Skew(SkewShape),
}

impl Obj {
    pub fn kind(&self) -> ObjKind {
        match self {
            Obj::Word(_) => ObjKind::Word,
            Obj::Multisegment(_) => ObjKind::Multisegment,
            Obj::Kleshchev { .. } => ObjKind::Kleshchev,
            Obj::Multipartition { .. } => ObjKind::Multipartition,
            Obj::Drinfeld(_) => ObjKind::Drinfeld,
            Obj::Skew(_) => ObjKind::Skew,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Obj::Word(w) => json!(w),
            Obj::Multisegment(m) => json!(m),
            Obj::Kleshchev { gamma, f } => json!({"gamma": gamma, "f": f}),
            Obj::Multipartition { lambda, f } => json!({"lambda": lambda, "f": f}),
            Obj::Drinfeld(d) => json!(d),
            Obj::Skew(s) => json!(s),
        }
    }

    pub fn from_json(kind: ObjKind, v: Value) -> crate::Result<Obj> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct K {
            gamma: Multipartition,
            f: Charge,
        }
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct L {
            lambda: Multipartition,
            f: Charge,
        }
        let bad = |e: serde_json::Error| Error::Parse {
            what: "payload",
            input: format!("{} ({e})", kind.name()),
        };
        Ok(match kind {
            ObjKind::Word => Obj::Word(serde_json::from_value(v).map_err(bad)?),
            ObjKind::Multisegment => Obj::Multisegment(serde_json::from_value(v).map_err(bad)?),
            ObjKind::Kleshchev => {
                let k: K = serde_json::from_value(v).map_err(bad)?;
                Obj::Kleshchev {
                    gamma: k.gamma,
                    f: k.f,
                }
            }
            ObjKind::Multipartition => {
                let l: L = serde_json::from_value(v).map_err(bad)?;
                Obj::Multipartition {
                    lambda: l.lambda,
                    f: l.f,
                }
            }
            ObjKind::Drinfeld => Obj::Drinfeld(serde_json::from_value(v).map_err(bad)?),
            ObjKind::Skew => Obj::Skew(serde_json::from_value(v).map_err(bad)?),
        })
    }
}

/// Directed edges of the conversion graph, in the order searched.
const EDGES: [(ObjKind, ObjKind); 11] = [
    (ObjKind::Word, ObjKind::Multisegment),
    (ObjKind::Multisegment, ObjKind::Word),
    (ObjKind::Multisegment, ObjKind::Kleshchev),
    (ObjKind::Multisegment, ObjKind::Drinfeld),
    (ObjKind::Kleshchev, ObjKind::Word),
    (ObjKind::Kleshchev, ObjKind::Multipartition),
    (ObjKind::Multipartition, ObjKind::Kleshchev),
    (ObjKind::Multipartition, ObjKind::Drinfeld),
    (ObjKind::Drinfeld, ObjKind::Multisegment),
    (ObjKind::Skew, ObjKind::Multisegment),
    (ObjKind::Skew, ObjKind::Drinfeld),
];

/// Shortest path in the conversion graph, ties broken by edge order.
pub fn conversion_path(from: ObjKind, to: ObjKind) -> Option<Vec<ObjKind>> {
    let mut prev: BTreeMap<ObjKind, ObjKind> = BTreeMap::new();
    let mut queue = VecDeque::from([from]);
    while let Some(k) = queue.pop_front() {
        if k == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[&cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &(a, b) in &EDGES {
            if a == k && b != from && !prev.contains_key(&b) {
                prev.insert(b, a);
                queue.push_back(b);
            }
        }
    }
    None
}

/// `n = r`, so that every multisegment of size `r` is in range.
fn default_n(obj: &Obj) -> usize {
    match obj {
        Obj::Multisegment(m) => m.size().max(1),
        Obj::Multipartition { lambda, .. } => lambda.size().max(1),
        Obj::Skew(s) => s.size().max(1),
        Obj::Drinfeld(d) => d.n(),
        _ => 1,
    }
}

/// One step along an edge of the conversion graph.
pub fn convert_step(obj: &Obj, to: ObjKind, n: Option<usize>) -> crate::Result<Obj> {
    let n_for = |o: &Obj| n.unwrap_or_else(|| default_n(o));
    Ok(match (obj, to) {
        (Obj::Word(w), ObjKind::Multisegment) => Obj::Multisegment(word_to_multisegment(w)),
        (Obj::Multisegment(m), ObjKind::Word) => Obj::Word(multisegment_to_word(m)),
        (Obj::Multisegment(m), ObjKind::Kleshchev) => {
            let (gamma, f) = eta(m)?;
            Obj::Kleshchev { gamma, f }
        }
        (Obj::Multisegment(m), ObjKind::Drinfeld) => Obj::Drinfeld(partial_map(m, n_for(obj))?),
        (Obj::Kleshchev { gamma, f }, ObjKind::Word) => Obj::Word(theta(gamma, f)?),
        (Obj::Kleshchev { gamma, f }, ObjKind::Multipartition) => Obj::Multipartition {
            lambda: gamma.conjugate(),
            f: f.clone(),
        },
        (Obj::Multipartition { lambda, f }, ObjKind::Kleshchev) => Obj::Kleshchev {
            gamma: lambda.conjugate(),
            f: f.clone(),
        },
        (Obj::Multipartition { lambda, f }, ObjKind::Drinfeld) => {
            Obj::Drinfeld(drinfeld_from_multipartition(lambda, f, n_for(obj))?)
        }
        (Obj::Drinfeld(d), ObjKind::Multisegment) => Obj::Multisegment(partial_inverse(d)?),
        (Obj::Skew(s), ObjKind::Multisegment) => {
            Obj::Multisegment(MultisegmentZ::from(skew_multisegment(s)?))
        }
        (Obj::Skew(s), ObjKind::Drinfeld) => Obj::Drinfeld(skew_drinfeld(s, n_for(obj))?),
        (o, k) => {
            return Err(Error::Parse {
                what: "conversion",
                input: format!("no direct map {} -> {}", o.kind().name(), k.name()),
            })
        }
    })
}

/// Convert along `path`, returning every object visited (source included).
pub fn convert_along(obj: Obj, path: &[ObjKind], n: Option<usize>) -> crate::Result<Vec<Obj>> {
    let mut out = vec![obj];
    for &k in &path[1..] {
        let next = convert_step(out.last().expect("non-empty"), k, n)?;
        out.push(next);
    }
    Ok(out)
}

fn path_json(path: &[ObjKind]) -> Value {
    json!(path.iter().map(|k| k.name()).collect::<Vec<_>>())
}

/// Column residual segments of a multipartition, as an extra trace entry.
fn column_segments_note(obj: &Obj) -> Option<Value> {
    match obj {
        Obj::Multipartition { lambda, f } => {
            column_residual_segments(lambda, f).ok().map(|s| json!(s))
        }
        _ => None,
    }
}

fn cmd_convert(a: &ConvertArgs, stdin: &mut dyn Read, out: &mut dyn Write) -> CliResult<()> {
    let path = conversion_path(a.from, a.to).ok_or_else(|| {
        usage(format!(
            "no conversion from {} to {}",
            a.from.name(),
            a.to.name()
        ))
    })?;
    let mut text = String::new();
    if a.input == "-" {
        stdin.read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(&a.input)?;
    }
    let payload: Value =
        serde_json::from_str(&text).map_err(|e| usage(format!("invalid JSON: {e}")))?;
    let source = Obj::from_json(a.from, payload)?;
    let visited = convert_along(source.clone(), &path, a.n)?;
    let result = visited.last().expect("non-empty").clone();

    let mut report = serde_json::Map::new();
    report.insert("schema_version".into(), json!(SCHEMA_VERSION));
    report.insert("from".into(), json!(a.from.name()));
    report.insert("to".into(), json!(a.to.name()));
    report.insert("path".into(), path_json(&path));
    report.insert("result".into(), result.to_json());
    if a.trace {
        let steps: Vec<Value> = visited
            .iter()
            .map(|o| {
                let mut s = json!({"kind": o.kind().name(), "value": o.to_json()});
                if let Some(c) = column_segments_note(o) {
                    s["column_segments"] = c;
                }
                s
            })
            .collect();
        report.insert("trace".into(), json!(steps));
    }
    let mut ok = true;
    if !a.no_roundtrip && a.from != a.to {
        if let Some(back) = conversion_path(a.to, a.from) {
            let n = match &source {
                Obj::Drinfeld(d) => Some(d.n()),
                _ => a.n,
            };
            let entry = match convert_along(result, &back, n) {
                Ok(v) => {
                    let got = v.last().expect("non-empty");
                    let same = *got == source;
                    ok &= same;
                    let mut e = json!({"path": path_json(&back), "ok": same});
                    if !same {
                        e["got"] = got.to_json();
                    }
                    e
                }
                Err(err) => {
                    ok = false;
                    json!({"path": path_json(&back), "ok": false, "error": err.to_string()})
                }
            };
            report.insert("roundtrip".into(), entry);
        }
    }
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&Value::Object(report)).expect("json")
    )?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

/// Run one suite, echoing its resolved bounds into `input`.
fn suite_checks(
    suite: Suite,
    a: &VerifyArgs,
    q: &QParam,
    bounds: Bounds,
    input: &mut serde_json::Map<String, Value>,
) -> CliResult<Vec<Check>> {
    let cap = |default: usize, hard: usize| -> CliResult<usize> {
        match a.r_max {
            Some(r) if r > hard => Err(usage(format!(
                "--r-max {r} exceeds the bound {hard} (built in or set by SEGKIT_MAX_R)"
            ))),
            Some(r) => Ok(r),
            None => Ok(default.min(hard)),
        }
    };
    let combinatorial = env_cap().unwrap_or(usize::MAX);
    let key = format!("{suite:?}").to_lowercase();
    let mut echo = |v: Value| {
        input.insert(key.clone(), v);
    };
    Ok(match suite {
        Suite::Relations => {
            let r = cap(bounds.regular, bounds.regular)?;
            echo(json!({"r_max": r}));
            suites::relations_suite(r, q)?
        }
        Suite::Specht => {
            let r = cap(bounds.ideal, bounds.ideal)?;
            echo(json!({"r_max": r, "sharp_max": r.min(4)}));
            suites::specht_suite(r, r.min(4), q)?
        }
        Suite::Jm => match a.lambda.as_deref() {
            Some(l) => {
                let lam = parse_partition(l)?;
                if lam.size() > bounds.ideal {
                    return Err(usage(format!(
                        "|lambda| = {} exceeds the bound {}",
                        lam.size(),
                        bounds.ideal
                    )));
                }
                echo(json!({"lambda": lam}));
                suites::jm_suite(lam.size(), Some(&lam), q)?
            }
            None => {
                let r = cap(bounds.ideal, bounds.ideal)?;
                echo(json!({"r_max": r}));
                suites::jm_suite(r, None, q)?
            }
        },
        Suite::Bijections => {
            let r = cap(6, combinatorial)?;
            echo(json!({"r_max": r, "m_max": 3, "charge_entries": [-3, 3]}));
            suites::bijection_suite(r, 3, -3, 3)?
        }
        Suite::Duality => {
            let r = cap(6, combinatorial)?;
            echo(json!({"r_max": r, "m_max": 3, "charge_entries": [-2, 2]}));
            suites::duality_suite(r, 3, -2, 2)?
        }
        Suite::Drinfeld => {
            let r = cap(6, combinatorial)?;
            echo(
                json!({"r_max": r, "n": 6, "window": [-4, 4], "m_max": 3, "charge_entries": [-3, 3]}),
            );
            suites::drinfeld_suite(r, 6, (-4, 4), 3, (-3, 3))?
        }
        Suite::Skew => {
            let r = cap(bounds.skew.min(6), bounds.skew)?;
            let om = a.outer_max.unwrap_or(10);
            echo(json!({"r_max": r, "outer_max": om, "commutant_max": r.min(5)}));
            suites::skew_suite(r, om, r.min(5), q)?
        }
        Suite::Lr => {
            let om = a.outer_max.unwrap_or(8);
            echo(json!({"outer_max": om}));
            suites::lr_suite(om)
        }
        Suite::All => unreachable!("expanded by the caller"),
    })
}

fn env_cap() -> Option<usize> {
    std::env::var("SEGKIT_MAX_R")
        .ok()
        .and_then(|s| s.trim().parse().ok())
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CliResult<()> {
    let q = QParam::parse(&a.q0)?;
    let bounds = Bounds::current();
    let start = Instant::now();
    let list = if a.suite == Suite::All {
        vec![
            Suite::Relations,
            Suite::Specht,
            Suite::Jm,
            Suite::Bijections,
            Suite::Duality,
            Suite::Drinfeld,
            Suite::Skew,
            Suite::Lr,
        ]
    } else {
        vec![a.suite]
    };
    let mut input = serde_json::Map::new();
    let mut checks = Vec::new();
    for s in list {
        checks.extend(suite_checks(s, a, &q, bounds, &mut input)?);
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    let total = checks.len();
    let mut report = json!({
        "schema_version": SCHEMA_VERSION,
        "tool": "segkit",
        "version": env!("CARGO_PKG_VERSION"),
        "suite": format!("{:?}", a.suite).to_lowercase(),
        "q0": q.to_string(),
        "input": input,
        "checks": checks,
        "summary": {
            "total": total,
            "passed": passed,
            "failed": total - passed,
            "pass": passed == total,
        },
    });
    if a.timing {
        report["elapsed_ms"] = json!(start.elapsed().as_millis() as u64);
    }
    let text = serde_json::to_string_pretty(&report).expect("json") + "\n";
    match &a.output {
        Some(p) => std::fs::write(p, &text)?,
        None => out.write_all(text.as_bytes())?,
    }
    if passed == total {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], input: &str) -> (i32, String, String) {
        let mut stdin = input.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("segkit").chain(args.iter().copied()),
            &mut stdin,
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn paths_exist_where_expected() {
        use ObjKind::*;
        assert_eq!(
            conversion_path(Word, Kleshchev).unwrap(),
            vec![Word, Multisegment, Kleshchev]
        );
        assert_eq!(
            conversion_path(Kleshchev, Drinfeld).unwrap(),
            vec![Kleshchev, Multipartition, Drinfeld]
        );
        assert!(conversion_path(Word, Skew).is_none());
    }

    #[test]
    fn window_and_lists_parse() {
        assert_eq!(parse_window("-1..1").unwrap(), (-1, 1));
        assert!(parse_window("2..1").is_err());
        assert_eq!(parse_charge("2,0,-1").unwrap().entries(), &[2, 0, -1]);
        assert!(parse_charge("0,1").is_err());
    }

    #[test]
    fn unbounded_enumeration_is_a_usage_error() {
        let (code, _, err) = run_str(&["enumerate", "multisegments", "--r", "2"], "");
        assert_eq!(code, 2);
        assert!(err.contains("--window"));
    }

    #[test]
    fn theta_precondition_failure_names_the_clause() {
        let (code, _, err) = run_str(
            &["convert", "--from", "kleshchev", "--to", "word"],
            r#"{"gamma": [[1], []], "f": [0, 0]}"#,
        );
        assert_eq!(code, 2);
        assert!(err.contains("SK1"), "{err}");
    }
}
