//! `jstrata`: command-line front end for jordan-strata.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use jordan_strata::acceptance;
use jordan_strata::exactnum::io::{format_matrix, parse_matrix};
use jordan_strata::exactnum::{ExactMatrix, Field};
use jordan_strata::jclass::{
    closure_contains, dim_class, dim_orbit, enumerate_classes, induce, is_closure_normal_gl, local_data,
    regular_closure_contains, sheets, ClassDatum, ClassPoset, LeviShape, Mode, Slot,
};
use jordan_strata::loglike::{
    etale_certificate, minimal_levi_survey, sl2_char2_report, sp4_isolated_report, verify, Claim, LogLikeMap, MapKind,
    VerifyOptions,
};
use jordan_strata::rootcore::{
    centralizer_subsystem, classify_prime, is_rationally_closed, pseudo_levis, pseudo_levis_in_char, rational_closure,
    RootSystem, Subsystem, TorusElement,
};
use jordan_strata::{Error, Partition};

const USAGE: u8 = 2;
const FAILED: u8 = 1;

#[derive(Parser)]
#[command(name = "jstrata", version, about = "Jordan classes, sheets and log-like maps in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Characteristic (a prime, or 0 for the rationals where allowed).
    #[arg(long, global = true)]
    p: Option<u64>,
    /// Matrix size or rank.
    #[arg(long, global = true)]
    n: Option<usize>,
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 1000)]
    samples: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Directory of golden files to compare against.
    #[arg(long, global = true)]
    golden_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Group,
    Liealg,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Group => Mode::Group,
            ModeArg::Liealg => Mode::Liealg,
        }
    }
}

#[derive(Args)]
struct ClassArgs {
    /// Slots as partitions separated by `;`, e.g. "2,1;1", or the JSON slot list.
    #[arg(long)]
    class: String,
    #[arg(long, value_enum, default_value_t = ModeArg::Liealg)]
    mode: ModeArg,
}

#[derive(Args)]
struct PairArgs {
    #[command(flatten)]
    class: ClassArgs,
    /// Point pattern, in the same syntax as --class.
    #[arg(long)]
    pattern: String,
}

#[derive(Subcommand)]
enum Verb {
    /// Good, very good, torsion and bad verdicts of --p.
    Primes {
        /// Type letter, or a full label such as E8 or A1xG2.
        kind: String,
        rank: Option<usize>,
        /// Order of the fundamental group, for the group-level torsion verdict.
        #[arg(long)]
        pi1: Option<u64>,
    },
    /// Roots killed by a torus element.
    Subsystem {
        system: String,
        /// Coordinates, e.g. "1/2,0": angles mod 1, or values with --additive.
        #[arg(long)]
        theta: String,
        #[arg(long)]
        additive: bool,
    },
    /// Rational closure of the subsystem generated by some roots.
    RationalClosure {
        system: String,
        /// Roots in simple-root coordinates separated by `;`, e.g. "2,1;0,1".
        #[arg(long)]
        roots: String,
    },
    /// Pseudo-Levi subsystems, realizable in characteristic --p if given.
    PseudoLevi { system: String },
    /// All class data of size --n.
    Classes {
        #[arg(long, value_enum, default_value_t = ModeArg::Liealg)]
        mode: ModeArg,
    },
    /// Orbit and class dimensions.
    Dim(ClassArgs),
    /// Induced nilpotent orbit from a Levi of gl_n.
    Induce {
        /// Ambient algebra; only gl.
        ambient: String,
        /// Block sizes, e.g. "2,1"; read off --parts when omitted.
        #[arg(long)]
        blocks: Option<String>,
        /// One partition per block, separated by `;`.
        #[arg(long)]
        parts: String,
    },
    /// Whether the pattern lies in the closure of the class.
    Closure(PairArgs),
    /// Whether the pattern lies in the regular closure of the class.
    RegClosure(PairArgs),
    /// Closure and regular-closure orders on the classes of size --n.
    Poset {
        #[arg(long, value_enum, default_value_t = ModeArg::Liealg)]
        mode: ModeArg,
    },
    /// Sheets of size --n, listed by their maximal classes.
    Sheets {
        #[arg(long, value_enum, default_value_t = ModeArg::Liealg)]
        mode: ModeArg,
    },
    /// Local index set of the class at a point of the pattern.
    LocalData(PairArgs),
    /// Normality of the closure of a Jordan class of GL_n.
    NormalGl {
        #[arg(long)]
        class: String,
    },
    /// Applies a log-like map to a matrix file ("-" for stdin).
    LoglikeApply {
        #[arg(long)]
        map: MapKind,
        #[arg(long)]
        matrix: String,
    },
    /// Etale certificate of the SL_n map over a trace-zero matrix (zero if omitted).
    Etale {
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Seeded batch verification of a claim.
    Verify {
        claim: Claim,
        #[arg(long, default_value = "gl")]
        map: MapKind,
    },
    /// The isolated element diag(1,-1,1,-1) of Sp4.
    Sp4Report,
    /// Exhaustive checks of sl2 in characteristic 2.
    Sl2Char2,
    /// Minimal-Levi survey over the split torus of Sp4(F_p).
    MinimalLevi {
        #[arg(long, default_value_t = 5)]
        witnesses: usize,
    },
    /// Runs the acceptance suite, or one criterion.
    Accept {
        #[arg(long)]
        only: Option<usize>,
        /// Appends wall times to the table.
        #[arg(long)]
        timings: bool,
    },
}

/// A verb's result: the value to print and whether a check failed.
struct Output {
    value: Value,
    table: Option<String>,
    failed: bool,
}

impl Output {
    fn ok(value: impl Serialize) -> Output {
        Output { value: to_value(&value), table: None, failed: false }
    }

    fn checked(value: impl Serialize, passed: bool) -> Output {
        Output { value: to_value(&value), table: None, failed: !passed }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, Error> {
    s.split(',').map(|x| x.trim().parse().map_err(|_| parse_err(format!("bad {what} {x:?} in {s:?}")))).collect()
}

fn parse_partition(s: &str) -> Result<Partition, Error> {
    Partition::new(parse_list(s, "part")?)
}

fn parse_partitions(s: &str) -> Result<Vec<Partition>, Error> {
    s.split(';').map(parse_partition).collect()
}

fn parse_class(s: &str, mode: Mode) -> Result<ClassDatum, Error> {
    let s = s.trim();
    if s.starts_with('[') {
        let slots: Vec<Slot> = serde_json::from_str(s).map_err(|e| parse_err(e.to_string()))?;
        return ClassDatum::new(mode, slots);
    }
    let slots = parse_partitions(s)?.into_iter().map(Slot::new).collect::<Result<Vec<_>, _>>()?;
    ClassDatum::new(mode, slots)
}

fn parse_ratio(s: &str) -> Result<(i64, i64), Error> {
    let bad = || parse_err(format!("bad rational {s:?}"));
    match s.trim().split_once('/') {
        Some((a, b)) => Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)),
        None => Ok((s.trim().parse().map_err(|_| bad())?, 1)),
    }
}

fn read_matrix(path: &str) -> Result<ExactMatrix, Error> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| parse_err(e.to_string()))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| parse_err(format!("{path}: {e}")))?
    };
    parse_matrix(&text)
}

fn require<T>(x: Option<T>, flag: &str) -> Result<T, Error> {
    x.ok_or_else(|| parse_err(format!("{flag} is required")))
}

fn root_system(label: &str) -> Result<Arc<RootSystem>, Error> {
    Ok(Arc::new(RootSystem::from_label(label)?))
}

fn subsystem_value(psi: &Subsystem) -> Value {
    let rs = psi.parent();
    json!({
        "subsystem": psi,
        "type": psi.type_label(),
        "roots": psi.members().iter().map(|&i| rs.root(i)).collect::<Vec<_>>(),
        "rationally_closed": is_rationally_closed(psi),
    })
}

fn golden_check(dir: &Path, name: &str, value: &Value) -> Result<bool, Error> {
    let path = dir.join(name);
    let text = fs::read_to_string(&path).map_err(|e| parse_err(format!("{}: {e}", path.display())))?;
    let golden: Value = serde_json::from_str(&text).map_err(|e| parse_err(format!("{}: {e}", path.display())))?;
    Ok(&golden == value)
}

fn run(cli: Cli) -> Result<Output, Error> {
    let g = &cli.global;
    match cli.verb {
        Verb::Primes { kind, rank, pi1 } => {
            let label = match rank {
                Some(r) => format!("{kind}{r}"),
                None => kind,
            };
            let rs = RootSystem::from_label(&label)?;
            Ok(Output::ok(classify_prime(&rs, require(g.p, "--p")?, pi1)?))
        }
        Verb::Subsystem { system, theta, additive } => {
            let rs = root_system(&system)?;
            let coords = theta.split(',').map(parse_ratio).collect::<Result<Vec<_>, _>>()?;
            let p = g.p.unwrap_or(0);
            let s =
                if additive { TorusElement::from_values(&coords, p)? } else { TorusElement::from_angles(&coords, p)? };
            Ok(Output::ok(subsystem_value(&centralizer_subsystem(&rs, &s)?)))
        }
        Verb::RationalClosure { system, roots } => {
            let rs = root_system(&system)?;
            let generators = roots
                .split(';')
                .map(|r| {
                    let v: Vec<i64> = parse_list(r, "coordinate")?;
                    rs.index_of(&v).ok_or_else(|| Error::InvalidSubsystem(format!("{r:?} is not a root of {system}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let psi = Subsystem::generated_by(rs, &generators);
            Ok(Output::ok(json!({
                "generated": subsystem_value(&psi),
                "closure": subsystem_value(&rational_closure(&psi)),
            })))
        }
        Verb::PseudoLevi { system } => {
            let rs = root_system(&system)?;
            let list = match g.p {
                Some(p) => pseudo_levis_in_char(&rs, p)?,
                None => pseudo_levis(&rs)?,
            };
            Ok(Output::ok(list))
        }
        Verb::Classes { mode } => Ok(Output::ok(enumerate_classes(require(g.n, "--n")?, mode.into())?)),
        Verb::Dim(c) => {
            let j = parse_class(&c.class, c.mode.into())?;
            Ok(Output::ok(json!({ "class": j, "dim_orbit": dim_orbit(&j), "dim_class": dim_class(&j) })))
        }
        Verb::Induce { ambient, blocks, parts } => {
            if ambient != "gl" {
                return Err(parse_err(format!("induction is implemented for gl, not {ambient:?}")));
            }
            let parts = parse_partitions(&parts)?;
            let ls = match blocks {
                Some(b) => LeviShape::from_blocks(&parse_list(&b, "block size")?, parts)?,
                None => LeviShape::new(parts)?,
            };
            let lambda = induce(&ls);
            let text: Vec<String> = lambda.parts().iter().map(ToString::to_string).collect();
            let text = text.join(",");
            Ok(Output { value: Value::String(text.clone()), table: Some(text), failed: false })
        }
        Verb::Closure(a) => pair(a, |j, p| closure_contains(j, p)),
        Verb::RegClosure(a) => pair(a, |j, p| regular_closure_contains(j, p)),
        Verb::Poset { mode } => {
            let mode: Mode = mode.into();
            let n = require(g.n, "--n")?;
            let value = to_value(&ClassPoset::build(n, mode)?);
            match &g.golden_dir {
                Some(dir) => {
                    let same = golden_check(dir, &format!("poset_{mode}_{n}.json"), &value)?;
                    Ok(Output::checked(json!({ "matches_golden": same, "poset": value }), same))
                }
                None => Ok(Output { value, table: None, failed: false }),
            }
        }
        Verb::Sheets { mode } => Ok(Output::ok(sheets(require(g.n, "--n")?, mode.into())?)),
        Verb::LocalData(a) => {
            let mode = a.class.mode.into();
            let j = parse_class(&a.class.class, mode)?;
            let p = parse_class(&a.pattern, mode)?;
            let families = local_data(&j, &p)?;
            Ok(Output::ok(json!({ "size": families.len(), "families": families })))
        }
        Verb::NormalGl { class } => {
            let j = parse_class(&class, Mode::Group)?;
            Ok(Output::ok(json!({ "class": j, "normal": is_closure_normal_gl(&j)? })))
        }
        Verb::LoglikeApply { map, matrix } => {
            let g_mat = read_matrix(&matrix)?;
            let lambda = LogLikeMap::new(map, g_mat.n(), g_mat.field().characteristic())?;
            let image = lambda.apply(&g_mat)?;
            Ok(Output { value: to_value(&image), table: Some(format_matrix(&image)), failed: false })
        }
        Verb::Etale { matrix } => {
            let x = match matrix {
                Some(path) => read_matrix(&path)?,
                None => ExactMatrix::zero(Field::new(require(g.p, "--p")?)?, require(g.n, "--n")?),
            };
            Ok(Output::ok(etale_certificate(x.n(), x.field().characteristic(), &x)?))
        }
        Verb::Verify { claim, map } => {
            let n = g.n.unwrap_or(if map == MapKind::Sp4Cayley { 4 } else { 3 });
            let opts = VerifyOptions { map, n, p: g.p.unwrap_or(101), samples: g.samples, seed: g.seed };
            let report = verify(claim, &opts)?;
            let passed = report.passed();
            Ok(Output::checked(report, passed))
        }
        Verb::Sp4Report => {
            let report = sp4_isolated_report(g.p.unwrap_or(5))?;
            let holds = report.holds();
            Ok(Output::checked(json!({ "holds": holds, "report": report }), holds))
        }
        Verb::Sl2Char2 => {
            let report = sl2_char2_report();
            let holds = report.holds();
            Ok(Output::checked(json!({ "holds": holds, "report": report }), holds))
        }
        Verb::MinimalLevi { witnesses } => Ok(Output::ok(minimal_levi_survey(g.p.unwrap_or(7), witnesses)?)),
        Verb::Accept { only, timings } => {
            let outcomes = match only {
                Some(k) if (1..=acceptance::CRITERIA.len()).contains(&k) => vec![acceptance::run(k)],
                Some(k) => {
                    return Err(parse_err(format!(
                        "criteria are numbered 1 to {}, got {k}",
                        acceptance::CRITERIA.len()
                    )))
                }
                None => acceptance::run_all(),
            };
            let passed = outcomes.iter().all(|o| o.passed);
            let lines: Vec<String> = outcomes
                .iter()
                .map(|o| if timings { format!("{o}  [{} ms]", o.millis) } else { o.to_string() })
                .collect();
            Ok(Output { value: to_value(&outcomes), table: Some(lines.join("\n")), failed: !passed })
        }
    }
}

fn pair(a: PairArgs, test: impl Fn(&ClassDatum, &ClassDatum) -> Result<bool, Error>) -> Result<Output, Error> {
    let mode = a.class.mode.into();
    let j = parse_class(&a.class.class, mode)?;
    let p = parse_class(&a.pattern, mode)?;
    let contains = test(&j, &p)?;
    Ok(Output::ok(json!({ "class": j, "pattern": p, "contains": contains })))
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Plain-text rendering: objects as `key  value` lines, arrays of objects
/// as aligned columns.
fn render_table(v: &Value) -> String {
    match v {
        Value::Object(map) => {
            let width = map.keys().map(String::len).max().unwrap_or(0);
            map.iter().map(|(k, x)| format!("{k:<width$}  {}", cell(x))).collect::<Vec<_>>().join("\n")
        }
        Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
            let keys: Vec<&String> = items[0].as_object().expect("object").keys().collect();
            let rows: Vec<Vec<String>> = items
                .iter()
                .map(|it| keys.iter().map(|k| it.get(k.as_str()).map(cell).unwrap_or_default()).collect())
                .collect();
            let widths: Vec<usize> = (0..keys.len())
                .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0).max(keys[c].len()))
                .collect();
            let line = |cells: Vec<&str>| {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            let mut out = vec![line(keys.iter().map(|k| k.as_str()).collect())];
            out.extend(rows.iter().map(|r| line(r.iter().map(String::as_str).collect())));
            out.join("\n")
        }
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join("\n"),
        other => cell(other),
    }
}

fn error_json(kind: &str, message: &str) -> String {
    json!({ "error": kind, "message": message }).to_string()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprintln!("{}", error_json("usage", e.to_string().trim_end()));
            return ExitCode::from(USAGE);
        }
    };
    let format = cli.global.format;
    match run(cli) {
        Ok(out) => {
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.value).expect("serializable")),
                Format::Table => println!("{}", out.table.unwrap_or_else(|| render_table(&out.value))),
            }
            if out.failed {
                ExitCode::from(FAILED)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("{}", error_json(e.kind(), &e.to_string()));
            ExitCode::from(USAGE)
        }
    }
}
