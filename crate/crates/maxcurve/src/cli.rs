//! Command-line front end.
//!
//! Exit codes: 0 success, 2 usage error or refused request, 3 a requested
//! verification failed, 4 an internal invariant broke.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::curve_models::{genus, params_from_s, CurveParams, Family};
use crate::genus_catalog::{self, GenusRecord, Spectrum, Table1Row};
use crate::group_action;
use crate::point_count::{count_points, CountError, CountOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "maxcurve",
    version,
    about = "Maximal Suzuki and Ree covers: point counts, automorphisms, quotient genera"
)]
pub struct Cli {
    /// Worker threads for count and spectrum.
    #[arg(long, global = true, env = "MAXCURVE_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Genus and parameters of a curve.
    Genus {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        json: bool,
    },
    /// Count F_{q^ext}-rational places.
    Count {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        ext: u32,
        /// Exit 3 unless the count attains the Hasse-Weil bound.
        #[arg(long)]
        verify_maximal: bool,
        /// Allow counts that take hours.
        #[arg(long)]
        long: bool,
    },
    /// Genera of quotients of the cover.
    Spectrum {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        s: u32,
        /// Known genera, one per line, '#' starts a comment.
        #[arg(long)]
        baseline: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Check the table of new genera for this field.
        #[arg(long)]
        check_table1: bool,
    },
    /// Brute-force checks of the automorphism group action for q = 8.
    VerifyGroup {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            if !message.is_empty() {
                let _ = writeln!(err, "error: {message}");
            }
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: msg.into(),
    }
}

fn internal(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INTERNAL,
        message: msg.into(),
    }
}

fn io(e: std::io::Error) -> Failure {
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        return Failure {
            code: EXIT_OK,
            message: String::new(),
        };
    }
    internal(format!("write failed: {e}"))
}

/// Integers that fit in i64 as JSON numbers, larger ones as decimal strings.
pub fn big_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => Value::String(v.to_string()),
    }
}

fn params_json(p: &CurveParams) -> Value {
    json!({ "family": p.family.as_str(), "s": p.s, "q0": p.q0, "q": p.q, "m": p.m })
}

fn envelope(
    command: &str,
    inputs: Value,
    results: Value,
    modulus: Option<String>,
    start: Instant,
) -> Value {
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    m.insert("inputs".into(), inputs);
    m.insert("results".into(), results);
    m.insert(
        "timing_ms".into(),
        json!(start.elapsed().as_millis() as u64),
    );
    m.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    m.insert(
        "modulus".into(),
        modulus.map(Value::String).unwrap_or(Value::Null),
    );
    Value::Object(m)
}

fn print_json(out: &mut dyn Write, v: &Value) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, v).map_err(|e| match e.io_error_kind() {
        Some(kind) => io(kind.into()),
        None => internal(e.to_string()),
    })?;
    writeln!(out).map_err(io)
}

fn params_for(family: Family, s: u32) -> Result<CurveParams, Failure> {
    params_from_s(family, s).map_err(|e| usage(e.to_string()))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    if cli.threads == Some(0) {
        return Err(usage("--threads must be positive"));
    }
    let start = Instant::now();
    match &cli.command {
        Command::Genus { family, s, json } => {
            let p = params_for(*family, *s)?;
            let g = genus(&p);
            if *json {
                let results = json!({ "params": params_json(&p), "genus": big_json(&g) });
                let inputs = json!({ "family": family.as_str(), "s": s });
                print_json(out, &envelope("genus", inputs, results, None, start))?;
            } else {
                writeln!(out, "{g}").map_err(io)?;
                writeln!(
                    out,
                    "family={} s={} q0={} q={} m={}",
                    p.family, p.s, p.q0, p.q, p.m
                )
                .map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Count {
            family,
            s,
            ext,
            verify_maximal,
            long,
        } => {
            let p = params_for(*family, *s)?;
            if *ext == 0 {
                return Err(usage("--ext must be positive"));
            }
            let opts = CountOptions {
                threads: cli.threads,
                allow_long: *long,
            };
            let rep = count_points(&p, *ext, &opts).map_err(|e| match e {
                CountError::LongRunning { .. } => usage(format!("{e}; pass --long to run it")),
                CountError::Unsupported { .. } => usage(e.to_string()),
                other => internal(other.to_string()),
            })?;
            let results = json!({
                "params": params_json(&p),
                "ext": rep.r,
                "field_size": rep.field_size,
                "points": rep.points,
                "genus": big_json(&genus(&p)),
                "hasse_weil_target": rep.hasse_weil_target.as_ref().map(big_json),
                "is_maximal": rep.is_maximal,
                "note": rep.note,
                "count_ms": rep.wall_time.as_millis() as u64,
            });
            let inputs = json!({
                "family": family.as_str(), "s": s, "ext": ext,
                "verify_maximal": verify_maximal, "long": long, "threads": cli.threads,
            });
            print_json(
                out,
                &envelope("count", inputs, results, Some(rep.modulus.clone()), start),
            )?;
            Ok(if *verify_maximal && !rep.is_maximal {
                EXIT_VERIFY
            } else {
                EXIT_OK
            })
        }
        Command::Spectrum {
            family,
            s,
            baseline,
            format,
            check_table1,
        } => {
            let p = params_for(*family, *s)?;
            let known = baseline.as_ref().map(read_baseline).transpose()?;
            let sp = match cli.threads {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| internal(e.to_string()))?
                    .install(|| genus_catalog::spectrum(&p)),
                None => genus_catalog::spectrum(&p),
            };
            spectrum_output(cli, &sp, known.as_ref(), *format, *check_table1, start, out)
        }
        Command::VerifyGroup { s, json } => {
            if *s != 1 {
                return Err(usage("verify-group only runs for s = 1 (q = 8)"));
            }
            let p = params_for(Family::SuzukiCover, 1)?;
            let places = group_action::build_places(&p).map_err(|e| internal(e.to_string()))?;
            let rep = group_action::verify(&places).map_err(|e| internal(e.to_string()))?;
            if *json {
                let results = serde_json::to_value(&rep).map_err(|e| internal(e.to_string()))?;
                let inputs = json!({ "s": s });
                print_json(
                    out,
                    &envelope(
                        "verify-group",
                        inputs,
                        results,
                        Some(rep.modulus.clone()),
                        start,
                    ),
                )?;
            } else {
                writeln!(
                    out,
                    "q={} places={} orbits={:?} modulus={}",
                    rep.q, rep.places, rep.orbit_sizes, rep.modulus
                )
                .map_err(io)?;
                for r in &rep.rows {
                    let mark = if r.pass { "ok  " } else { "FAIL" };
                    writeln!(
                        out,
                        "{mark} {:<34} expected {:?} observed {:?}",
                        r.check, r.expected, r.observed
                    )
                    .map_err(io)?;
                }
            }
            Ok(if rep.pass { EXIT_OK } else { EXIT_VERIFY })
        }
    }
}

/// Nonnegative integers, one per line; blank lines and '#' comments are skipped.
pub fn parse_baseline(text: &str) -> Result<BTreeSet<BigInt>, String> {
    let mut set = BTreeSet::new();
    for (no, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if !body.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!(
                "line {}: expected a nonnegative integer, got {body:?}",
                no + 1
            ));
        }
        set.insert(
            body.parse::<BigInt>()
                .map_err(|e| format!("line {}: {e}", no + 1))?,
        );
    }
    Ok(set)
}

fn read_baseline(path: &PathBuf) -> Result<BTreeSet<BigInt>, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_baseline(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn record_json(r: &GenusRecord) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), json!(r.spec.kind.id()));
    m.insert("params".into(), json!(r.spec.args.to_string()));
    m.insert("order".into(), big_json(&r.order));
    m.insert("delta".into(), big_json(&r.delta));
    m.insert("genus".into(), big_json(&r.genus));
    m.insert("certified".into(), json!(r.certified));
    if let Some(mm) = &r.mismatch {
        m.insert("closed_form".into(), json!(mm.closed.to_string()));
        m.insert(
            "mismatch".into(),
            json!(mm.documented.unwrap_or("unexplained")),
        );
    }
    Value::Object(m)
}

fn spectrum_output(
    cli: &Cli,
    sp: &Spectrum,
    known: Option<&BTreeSet<BigInt>>,
    format: Format,
    check_table1: bool,
    start: Instant,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let violations = genus_catalog::boundary_violations(sp);
    let unexplained: Vec<&GenusRecord> = sp.unexplained_mismatches().collect();
    let verdict = if check_table1 {
        let row = Table1Row::for_params(&sp.params).ok_or_else(|| {
            usage(format!(
                "no table row for {} s={}",
                sp.params.family, sp.params.s
            ))
        })?;
        Some(genus_catalog::table1_check(row, sp))
    } else {
        None
    };
    let fresh: Option<Vec<&BigInt>> =
        known.map(|k| sp.genera.iter().filter(|g| !k.contains(g)).collect());
    let shown: Vec<&GenusRecord> = sp
        .records
        .iter()
        .filter(|r| r.certified)
        .filter(|r| known.is_none_or(|k| !k.contains(&r.genus)))
        .collect();

    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["kind", "params", "order", "delta", "genus"])
                .map_err(|e| internal(e.to_string()))?;
            for r in &shown {
                w.write_record([
                    r.spec.kind.id().to_string(),
                    r.spec.args.to_string(),
                    r.order.to_string(),
                    r.delta.to_string(),
                    r.genus.to_string(),
                ])
                .map_err(|e| internal(e.to_string()))?;
            }
            w.flush().map_err(io)?;
        }
        Format::Json => {
            let mut res = Map::new();
            res.insert("params".into(), params_json(&sp.params));
            res.insert(
                "genera".into(),
                Value::Array(sp.genera.iter().map(big_json).collect()),
            );
            res.insert(
                "records".into(),
                Value::Array(shown.iter().map(|r| record_json(r)).collect()),
            );
            let uncertified: Vec<Value> = sp
                .records
                .iter()
                .filter(|r| !r.certified)
                .map(record_json)
                .collect();
            res.insert("uncertified".into(), Value::Array(uncertified));
            let mism: Vec<Value> = sp.mismatches().map(record_json).collect();
            res.insert("mismatches".into(), Value::Array(mism));
            res.insert("rejected".into(), json!(sp.rejected.len()));
            if let Some(f) = &fresh {
                res.insert(
                    "not_in_baseline".into(),
                    Value::Array(f.iter().map(|g| big_json(g)).collect()),
                );
            }
            if let Some(v) = &verdict {
                res.insert(
                    "table1".into(),
                    serde_json::to_value(v).map_err(|e| internal(e.to_string()))?,
                );
            }
            res.insert("boundary_violations".into(), json!(violations));
            let inputs = json!({
                "family": sp.params.family.as_str(),
                "s": sp.params.s,
                "baseline": known.map(|k| k.len()),
                "check_table1": check_table1,
                "threads": cli.threads,
            });
            print_json(
                out,
                &envelope("spectrum", inputs, Value::Object(res), None, start),
            )?;
        }
    }
    if !violations.is_empty() || !unexplained.is_empty() {
        return Err(internal(format!(
            "{} boundary violations, {} unexplained closed-form mismatches",
            violations.len(),
            unexplained.len()
        )));
    }
    if let Some(v) = verdict {
        if !v.contained {
            return Err(Failure {
                code: EXIT_VERIFY,
                message: format!(
                    "{} values missing from the spectrum: {:?}",
                    v.row, v.missing
                ),
            });
        }
    }
    Ok(EXIT_OK)
}
