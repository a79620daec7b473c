//! Command-line front end. `run` returns the exit code so it can be driven in-process.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error, 3 internal inconsistency.

use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use crate::cohomology::{h_all_with_budget, BranchStep};
use crate::effectivity::{e_full, e_number, e_positive, is_effective, reduce, EffWitness, Method, Reduction};
use crate::error::Error;
use crate::picard::{canonical_class, parse, DivisorClass, NumClass};
use crate::selftest;
use crate::tables;
use crate::ulrich::{default_window, rank2_d1, ulrich_line_search, verify_rank2};

const DEFAULT_BUDGET: usize = 10_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "burniat",
    version,
    about = "Divisor classes and line bundle cohomology on the primary Burniat surface"
)]
struct Cli {
    /// Print one JSON object (JSON lines in batch mode).
    #[arg(long, global = true)]
    json: bool,
    /// Include the branch trace of the cohomology computation.
    #[arg(long, global = true)]
    trace: bool,
    /// Read one divisor per line from FILE instead of the command line.
    #[arg(long, global = true, value_name = "FILE")]
    batch: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coordinates, intersection data, cohomology and effectiveness.
    Show { divisor: Option<String> },
    /// h^0, h^1, h^2.
    H {
        divisor: Option<String>,
        /// Abort after this many trim, peel and boundary steps.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        max_steps: usize,
    },
    /// Effectiveness test with a witness.
    Effective { divisor: Option<String> },
    /// Trim elliptic curves from the fixed part until the class is of reduced form.
    Reduce { divisor: Option<String> },
    /// e([d;a,b,c]) by brute force and by the closed-form criteria.
    #[command(allow_negative_numbers = true)]
    Enumber { d: i64, a: i64, b: i64, c: i64 },
    /// Regenerate a table and compare it with the embedded values.
    Table {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(tables::TABLE_NAMES))]
        name: String,
    },
    /// Search for Ulrich line bundles with respect to a polarization.
    #[command(allow_negative_numbers = true)]
    UlrichSearch {
        #[arg(long = "h", default_value = "3K")]
        polarization: String,
        #[arg(long)]
        lo: Option<i64>,
        #[arg(long)]
        hi: Option<i64>,
    },
    /// Check the cohomological data of the rank-2 Ulrich construction.
    VerifyRank2 {
        #[arg(long)]
        d1: Option<String>,
    },
    /// Run the acceptance criteria.
    Selftest {
        /// Only these criteria (1-12).
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
    /// Time the cohomology computation on growing inputs.
    Bench,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ClassificationGap(_) | Error::InvalidTau { .. } | Error::InternalInconsistency(_) => 3,
        _ => 1,
    }
}

#[derive(Serialize)]
struct Coords {
    d: i64,
    ell: i64,
    slots: Vec<(i64, String)>,
}

/// Key order is part of the output contract.
#[derive(Serialize)]
struct Record {
    input: String,
    coords: Coords,
    num_class: [i64; 4],
    chi: i64,
    h: [u64; 3],
    effective: bool,
    witness: Option<EffWitness>,
    trace: Vec<BranchStep>,
}

#[derive(Serialize)]
struct ErrorRecord<'a> {
    input: &'a str,
    error: String,
    exit: i32,
}

fn record(input: &str, max_steps: usize, with_trace: bool) -> Result<(DivisorClass, Record), Error> {
    let d = parse(input)?;
    let h = h_all_with_budget(&d, max_steps)?;
    let witness = is_effective(&d)?;
    if witness.is_some() != (h.h0 > 0) {
        return Err(Error::InternalInconsistency(format!("{d}: witness and h0 = {} disagree", h.h0)));
    }
    let nc = d.num_class();
    let rec = Record {
        input: input.to_string(),
        coords: Coords {
            d: d.d(),
            ell: d.ell(),
            slots: d.slots().iter().map(|s| (s.deg, s.tor.to_string())).collect(),
        },
        num_class: [nc.d, nc.a, nc.b, nc.c],
        chi: d.chi(),
        h: [h.h0, h.h1, h.h2],
        effective: witness.is_some(),
        witness,
        trace: if with_trace { h.trace } else { Vec::new() },
    };
    Ok((d, rec))
}

fn human(cmd: &Command, d: &DivisorClass, r: &Record, trace: bool) -> String {
    let mut s = String::new();
    let witness = r.witness.map_or("none".to_string(), |w| w.to_string());
    let h = format!("h0 = {}, h1 = {}, h2 = {}", r.h[0], r.h[1], r.h[2]);
    match cmd {
        Command::H { .. } => s += &format!("{h}\n"),
        Command::Effective { .. } => s += &format!("effective = {}\nwitness = {witness}\n", r.effective),
        _ => {
            let kind = if d.is_ample() {
                "ample"
            } else if d.is_nef() {
                "nef"
            } else {
                "not nef"
            };
            s += &format!("class     {d}\n");
            s += &format!("row       {}\n", d.table_row());
            s += &format!("numerical {}  l = {}\n", d.num_class(), r.coords.ell);
            s += &format!("D^2 = {}, D.K = {}, chi = {}, {kind}\n", d.self_intersection(), d.d(), r.chi);
            s += &format!("{h}\n");
            s += &format!("effective = {}, witness = {witness}\n", r.effective);
        }
    }
    if trace {
        for (i, step) in r.trace.iter().enumerate() {
            s += &format!("  {i:>3}  {step}\n");
        }
    }
    s
}

fn divisor_command(cmd: &Command, input: &str, json: bool, trace: bool) -> Result<String, Error> {
    let max_steps = match cmd {
        Command::H { max_steps, .. } => *max_steps,
        _ => DEFAULT_BUDGET,
    };
    if let Command::Reduce { .. } = cmd {
        return reduce_command(input, json);
    }
    let (d, r) = record(input, max_steps, trace || json)?;
    Ok(if json {
        let mut r = r;
        if !trace {
            r.trace.clear();
        }
        serde_json::to_string(&r).expect("serializable") + "\n"
    } else {
        human(cmd, &d, &r, trace)
    })
}

fn reduce_command(input: &str, json: bool) -> Result<String, Error> {
    let d = parse(input)?;
    let red = reduce(&d)?;
    let (status, form) = match &red {
        Reduction::Reduced { form, .. } => ("reduced", form),
        Reduction::NotEffective { last, .. } => ("not-effective", last),
    };
    if json {
        #[derive(Serialize)]
        struct Out<'a> {
            input: &'a str,
            status: &'a str,
            form: String,
            steps: &'a [crate::effectivity::TrimStep],
        }
        let out = Out { input, status, form: form.to_string(), steps: red.steps() };
        return Ok(serde_json::to_string(&out).expect("serializable") + "\n");
    }
    let mut s = String::new();
    for step in red.steps() {
        s += &format!("{}\n", BranchStep::from(*step));
    }
    s += &format!("{status}: {form}\n");
    Ok(s)
}

fn enumber_command(nc: NumClass, json: bool) -> Result<String, Error> {
    nc.ell_or_err()?;
    let brute = e_number(&nc)?;
    let (pos, full) = (e_positive(&nc)?, e_full(&nc)?);
    let criterion = if full.holds {
        "64"
    } else if pos.holds {
        "1-63"
    } else {
        "0"
    };
    let method = if pos.method == Method::ClosedForm { "closed-form" } else { "brute-force" };
    Ok(if json {
        serde_json::json!({"num_class": [nc.d, nc.a, nc.b, nc.c], "brute": brute, "criterion": criterion, "method": method})
            .to_string()
            + "\n"
    } else {
        format!("{nc}: brute={brute} criterion={criterion} ({method})\n")
    })
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable") + "\n"
}

/// Output text and exit code of a command that does not take a divisor.
fn other_command(cmd: &Command, json: bool) -> Result<(String, i32), Error> {
    match cmd {
        Command::Enumber { d, a, b, c } => Ok((enumber_command(NumClass::new(*d, *a, *b, *c), json)?, 0)),
        Command::Table { name } => {
            let rep = tables::table(name)?;
            let code = if rep.ok() { 0 } else { 3 };
            if json {
                return Ok((to_json(&rep), code));
            }
            let mut s: String = rep.rows.iter().map(|r| format!("{r}\n")).collect();
            for d in &rep.diffs {
                s += &format!("DIFF {d}\n");
            }
            s += &format!("{} rows, {} differences\n", rep.rows.len(), rep.diffs.len());
            Ok((s, code))
        }
        Command::UlrichSearch { polarization, lo, hi } => {
            let h = parse(polarization)?;
            let (dlo, dhi) = default_window(&h);
            let rep = ulrich_line_search(&h, lo.unwrap_or(dlo), hi.unwrap_or(dhi))?;
            if json {
                return Ok((to_json(&rep), 0));
            }
            let mut s = format!(
                "H = {}, D.K in [{}, {}]: {} chi = 0 classes, {} divisors, {} hits, {:.2}s\n",
                rep.polarization,
                rep.d_lo,
                rep.d_hi,
                rep.classes_scanned,
                rep.divisors_scanned,
                rep.hits.len(),
                rep.elapsed.as_secs_f64()
            );
            for d in &rep.hits {
                s += &format!("  {d}\n");
            }
            Ok((s, 0))
        }
        Command::VerifyRank2 { d1 } => {
            let d1 = match d1 {
                Some(t) => parse(t)?,
                None => rank2_d1(),
            };
            let rep = verify_rank2(&d1)?;
            let code = if rep.pass() { 0 } else { 1 };
            if json {
                return Ok((to_json(&rep), code));
            }
            let mut s = format!("D1 = {}\nD2 = {}\n", rep.d1, rep.d2);
            for c in &rep.checks {
                s += &format!(
                    "  [{}] {}: {} (expected {})\n",
                    if c.pass { "ok" } else { "FAIL" },
                    c.name,
                    c.actual,
                    c.expected
                );
            }
            Ok((s, code))
        }
        Command::Selftest { only } => {
            let ids: Vec<u8> = if only.is_empty() { (1..=12).collect() } else { only.clone() };
            if let Some(bad) = ids.iter().find(|&&i| !(1..=12).contains(&i)) {
                return Err(Error::Precondition(format!("no criterion {bad}")));
            }
            let mut s = String::new();
            let mut pass = true;
            for id in ids {
                let o = selftest::run(id);
                pass &= o.pass;
                s += &if json { to_json(&o) } else { format!("{o}\n") };
            }
            Ok((s, if pass { 0 } else { 3 }))
        }
        Command::Bench => {
            let mut s = String::new();
            for d in [1_000i64, 10_000, 100_000, 1_000_000] {
                let x = selftest::complexity_divisor(d)?;
                let start = Instant::now();
                let r = h_all_with_budget(&x, 2 * d as usize)?;
                let t = start.elapsed().as_secs_f64();
                let steps = r.trace.iter().filter(|s| s.is_work()).count();
                s += &if json {
                    serde_json::json!({"d": d, "steps": steps, "seconds": t}).to_string() + "\n"
                } else {
                    format!("d = {d:>8}: {steps:>7} steps, {:>9.3} ms, h0 = {}\n", t * 1e3, r.h0)
                };
            }
            let k = canonical_class();
            let start = Instant::now();
            let n = (-20..=20)
                .flat_map(|d| (-5..=5).map(move |a| (d, a)))
                .filter_map(|(d, a)| NumClass::new(d, a, 0, 0).untwisted().ok());
            let mut count = 0;
            for x in n {
                h_all_with_budget(&x.checked_add(&k)?, DEFAULT_BUDGET)?;
                count += 1;
            }
            let t = start.elapsed().as_secs_f64();
            if !json {
                s += &format!("{count} small divisors: {:.3} us each\n", t * 1e6 / count as f64);
            }
            Ok((s, 0))
        }
        Command::Show { .. } | Command::H { .. } | Command::Effective { .. } | Command::Reduce { .. } => {
            unreachable!("divisor commands are dispatched separately")
        }
    }
}

fn divisor_arg(cmd: &Command) -> Option<Option<&String>> {
    match cmd {
        Command::Show { divisor }
        | Command::H { divisor, .. }
        | Command::Effective { divisor }
        | Command::Reduce { divisor } => Some(divisor.as_ref()),
        _ => None,
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("BURNIAT_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn batch(cmd: &Command, path: &std::path::Path, trace: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            return 1;
        }
    };
    let lines: Vec<&str> = text.lines().collect();
    let results: Vec<(String, i32)> = lines
        .par_iter()
        .map(|line| match divisor_command(cmd, line.trim(), true, trace) {
            Ok(s) => (s, 0),
            Err(e) => {
                let code = exit_code(&e);
                (to_json(&ErrorRecord { input: line, error: e.to_string(), exit: code }), code)
            }
        })
        .collect();
    let mut code = 0;
    for (s, c) in results {
        let _ = out.write_all(s.as_bytes());
        code = code.max(c);
    }
    code
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    configure_threads();
    let result = match (divisor_arg(&cli.command), &cli.batch) {
        (Some(_), Some(path)) => return batch(&cli.command, path, cli.trace, out, err),
        (Some(Some(input)), None) => divisor_command(&cli.command, input, cli.json, cli.trace).map(|s| (s, 0)),
        (Some(None), None) => {
            let _ = writeln!(err, "error: a divisor argument or --batch FILE is required");
            return 2;
        }
        (None, Some(_)) => {
            let _ = writeln!(err, "error: --batch applies to show, h, effective and reduce");
            return 2;
        }
        (None, None) => other_command(&cli.command, cli.json),
    };
    match result {
        Ok((s, code)) => {
            let _ = out.write_all(s.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn main() -> ! {
    let code = run(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code)
}
