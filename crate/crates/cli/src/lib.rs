//! Command-line front end. [`run`] parses arguments, dispatches to the core
//! library and maps outcomes onto exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | computed; the property holds or the requested object was found |
//! | 1 | computed; the property fails or nothing was found |
//! | 2 | usage or input error |
//! | 3 | search budget or enumeration guard exceeded |

mod args;

use std::fs::File;
use std::io::{BufWriter, Write};

use clap::Parser;
use serde_json::{json, Value};
use unambig_core::explorer::{conjecture_scan_with, search_1uniform, search_sigma_ij, ScanOptions};
use unambig_core::generators::{
    alpha_squares, debruijn, double_letters, enumerate_debruijn, exponent_pattern, pi_db, shortest_succinct, thue_word,
};
use unambig_core::verify::{run_check, CheckArgs};
use unambig_core::{is_ambiguous, is_fixed_point, Ambiguity, Budget, Error, FixedPoint, SearchMode};

pub use args::parse_range;
use args::{Cli, Command, Common, Family};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

/// Exit code for an error surfaced by the core library.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Domain(_) => EXIT_USAGE,
        Error::Guard(_) | Error::BudgetExhausted { .. } => EXIT_LIMIT,
        Error::TheoremViolation { .. } => EXIT_FAILS,
    }
}

enum Failure {
    Core(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Prints either the human line or the JSON object.
struct Output<'a> {
    out: &'a mut dyn Write,
    json: bool,
}

impl Output<'_> {
    fn emit(&mut self, human: impl AsRef<str>, value: Value) -> std::io::Result<()> {
        if self.json {
            writeln!(self.out, "{value}")
        } else {
            writeln!(self.out, "{}", human.as_ref())
        }
    }
}

fn budget(common: &Common) -> Result<Budget, Failure> {
    Ok(Budget::new(common.budget)?)
}

/// Runs the CLI on `argv` (program name first) and returns the exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_HOLDS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure::Core(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        // The reader went away (`| head`); nothing left to report.
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_HOLDS,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::CheckAmbiguity {
            pattern,
            morphism,
            nonerasing_only,
            common,
        } => {
            let mode = if nonerasing_only {
                SearchMode::NONERASING
            } else {
                SearchMode::ERASING
            };
            let verdict = is_ambiguous(&morphism, &pattern, mode, budget(&common)?)?;
            let mut o = Output { out, json: common.json };
            let base = json!({
                "pattern": pattern,
                "morphism": morphism,
                "mode": if nonerasing_only { "nonerasing" } else { "erasing" },
            });
            let code = match verdict {
                Ambiguity::Ambiguous(w) => {
                    let x = w.differing_variable.map(|v| v.get());
                    let human = match x {
                        Some(x) => format!("ambiguous: {} (differs on {x})", w.tau),
                        None => format!("ambiguous: {}", w.tau),
                    };
                    o.emit(
                        human,
                        merge(base, json!({"outcome": "ambiguous", "witness": w.tau, "differing_variable": x, "nodes_explored": w.nodes_explored})),
                    )?;
                    EXIT_FAILS
                }
                Ambiguity::Unambiguous => {
                    o.emit("unambiguous", merge(base, json!({"outcome": "unambiguous"})))?;
                    EXIT_HOLDS
                }
                Ambiguity::BudgetExhausted => {
                    o.emit(
                        format!("budget of {} nodes exhausted", common.budget),
                        merge(base, json!({"outcome": "budget_exhausted"})),
                    )?;
                    EXIT_LIMIT
                }
            };
            Ok(code)
        }

        Command::FixedPoint { pattern, common } => {
            let verdict = is_fixed_point(&pattern, budget(&common)?)?;
            let mut o = Output { out, json: common.json };
            let code = match verdict {
                FixedPoint::FixedPoint(w) => {
                    o.emit(
                        format!("fixed point: {}", w.to_text()),
                        json!({"pattern": pattern, "outcome": "fixed_point", "phi": w.to_text(), "differing_variable": w.differing_variable.get()}),
                    )?;
                    EXIT_HOLDS
                }
                FixedPoint::NotFixedPoint => {
                    o.emit(
                        "not a fixed point",
                        json!({"pattern": pattern, "outcome": "not_fixed_point"}),
                    )?;
                    EXIT_FAILS
                }
                FixedPoint::BudgetExhausted => {
                    o.emit(
                        format!("budget of {} nodes exhausted", common.budget),
                        json!({"pattern": pattern, "outcome": "budget_exhausted"}),
                    )?;
                    EXIT_LIMIT
                }
            };
            Ok(code)
        }

        Command::SearchSigmaIj { pattern, common } => {
            let hit = search_sigma_ij(&pattern, budget(&common)?)?;
            let mut o = Output { out, json: common.json };
            match hit {
                Some(h) => {
                    o.emit(
                        format!("sigma_{},{}: {}", h.i, h.j, h.morphism),
                        json!({"pattern": pattern, "found": true, "i": h.i.get(), "j": h.j.get(), "morphism": h.morphism, "decided_by": h.decided_by}),
                    )?;
                    Ok(EXIT_HOLDS)
                }
                None => {
                    o.emit("no unambiguous sigma_ij", json!({"pattern": pattern, "found": false}))?;
                    Ok(EXIT_FAILS)
                }
            }
        }

        Command::SearchUniform {
            pattern,
            alphabet_size,
            common,
        } => {
            let hit = search_1uniform(&pattern, alphabet_size, budget(&common)?)?;
            let mut o = Output { out, json: common.json };
            let base = json!({"pattern": pattern, "alphabet_size": alphabet_size});
            match hit {
                Some(m) => {
                    o.emit(m.to_string(), merge(base, json!({"found": true, "morphism": m})))?;
                    Ok(EXIT_HOLDS)
                }
                None => {
                    o.emit(
                        format!("no unambiguous 1-uniform morphism into {alphabet_size} letters"),
                        merge(base, json!({"found": false})),
                    )?;
                    Ok(EXIT_FAILS)
                }
            }
        }

        Command::Generate { family, common } => {
            generate(family, &mut Output { out, json: common.json })?;
            Ok(EXIT_HOLDS)
        }

        Command::Scan {
            target,
            max_len,
            workers,
            out: path,
            common,
        } => {
            let opts = ScanOptions {
                budget: budget(&common)?,
                workers,
            };
            let mut file = BufWriter::new(File::create(&path)?);
            let mut seen = 0usize;
            let summary = conjecture_scan_with(max_len, target, opts, |rec| {
                seen += 1;
                if seen % 10_000 == 0 {
                    let _ = writeln!(err, "{seen} patterns, at length {}", rec.pattern.len());
                }
                let line = serde_json::to_string(rec).expect("records serialise");
                writeln!(file, "{line}").map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display())))
            });
            file.flush()?;
            let summary = summary?;
            let _ = writeln!(err, "scanned {} patterns", summary.records);
            Output { out, json: common.json }.emit(
                format!(
                    "{target}: {} records, {} findings, {} budget hits -> {}",
                    summary.records,
                    summary.findings,
                    summary.budget_hits,
                    path.display()
                ),
                json!({"target": target.name(), "records": summary.records, "findings": summary.findings, "budget_hits": summary.budget_hits, "out": path}),
            )?;
            Ok(if summary.findings > 0 {
                EXIT_FAILS
            } else if summary.budget_hits > 0 {
                EXIT_LIMIT
            } else {
                EXIT_HOLDS
            })
        }

        Command::Verify {
            name,
            m,
            n,
            k,
            max_len,
            common,
        } => {
            let args = match (name.as_str(), m, n, k, max_len) {
                ("thue", Some(r), None, None, None)
                | ("shortest", None, Some(r), None, None)
                | ("pi-db", None, None, Some(r), None) => CheckArgs::Range(r),
                ("pair-theorem" | "un-factors" | "prolix", None, None, None, Some(l)) => CheckArgs::MaxLen(l),
                ("thue", ..) => return usage(err, "verify thue needs --m RANGE"),
                ("shortest", ..) => return usage(err, "verify shortest needs --n RANGE"),
                ("pi-db", ..) => return usage(err, "verify pi-db needs --k RANGE"),
                ("pair-theorem" | "un-factors" | "prolix", ..) => {
                    return usage(err, &format!("verify {name} needs --max-len L"))
                }
                _ => {
                    return usage(
                        err,
                        &format!(
                        "unknown check `{name}`; expected thue, shortest, pi-db, pair-theorem, un-factors or prolix"
                    ),
                    )
                }
            };
            let report = run_check(&name, &args, budget(&common)?)?;
            let mut human = format!(
                "{}: {} ({} checked)",
                report.name,
                if report.passed { "PASS" } else { "FAIL" },
                report.checked
            );
            for v in &report.violations {
                human.push_str("\n  ");
                human.push_str(v);
            }
            Output { out, json: common.json }.emit(human, serde_json::to_value(&report).expect("report serialises"))?;
            Ok(if report.passed { EXIT_HOLDS } else { EXIT_FAILS })
        }
    }
}

fn generate(family: Family, o: &mut Output<'_>) -> Result<(), Failure> {
    match family {
        Family::Thue { length } => {
            let w = thue_word(length);
            o.emit(w.to_string(), json!({ "word": w }))?;
        }
        Family::Doubled { length } => {
            let w = double_letters(&thue_word(length));
            o.emit(w.to_string(), json!({ "word": w }))?;
        }
        Family::AlphaM { m } => {
            let p = alpha_squares(m)?;
            o.emit(p.to_string(), json!({ "pattern": p }))?;
        }
        Family::Exponent { beta } => {
            let p = exponent_pattern(&beta.0)?;
            o.emit(p.to_string(), json!({ "pattern": p }))?;
        }
        Family::Shortest { n } => {
            let (p, s) = shortest_succinct(n)?;
            o.emit(format!("{p}\t{s}"), json!({ "pattern": p, "morphism": s }))?;
        }
        Family::Debruijn { k, n, enumerate } => {
            if enumerate {
                for w in enumerate_debruijn(k, n)? {
                    o.emit(w.to_string(), json!({ "word": w }))?;
                }
            } else {
                let w = debruijn(k, n)?;
                o.emit(w.to_string(), json!({ "word": w }))?;
            }
        }
        Family::PiDb { k } => {
            for item in pi_db(k)? {
                o.emit(
                    format!("{}\t{}\t{}", item.pattern, item.natural_morphism, item.source_word),
                    json!({
                        "pattern": item.pattern,
                        "natural_morphism": item.natural_morphism,
                        "source_word": item.source_word,
                    }),
                )?;
            }
        }
    }
    Ok(())
}

fn usage(err: &mut dyn Write, msg: &str) -> Result<i32, Failure> {
    writeln!(err, "error: {msg}")?;
    Ok(EXIT_USAGE)
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}
