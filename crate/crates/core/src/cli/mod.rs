//! The `fcmt` command line: structure files, law checks, Bim and demos.
//!
//! Exit codes: 0 when everything checked passes, 1 when a law fails
//! (including a failing source for `derive-bim`), 2 for unreadable or
//! malformed input.

pub mod commands;
pub mod demo;
pub mod format;
pub mod model;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use commands::{bim, check, compose_span, derive_bim, CheckConfig};
pub use format::{parse, to_string, Structure, FORMAT_VERSION};

use crate::error::Error;
use crate::fc::{Bounds, LawReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Human,
    Machine,
}

#[derive(Debug, Parser)]
#[command(
    name = "fcmt",
    version,
    about = "Law checking and constructions for finite fc-multicategories"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, default_value_t = 3)]
    max_arity: usize,
    #[arg(long, global = true, default_value_t = 2)]
    max_nesting: usize,
    #[arg(long, global = true, default_value_t = 10_000)]
    max_cells_per_frame: usize,
    /// Seed for randomly generated demos
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Check frames in parallel; reports are identical either way
    #[arg(long, global = true)]
    parallel: bool,
    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Human)]
    format: ReportFormat,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the laws of a structure file
    Check { file: PathBuf },
    /// List monads, monad maps, bimodules and cell counts of Bim
    Bim { file: PathBuf },
    /// Transfer an enriched category or subset family to Bim and check it
    DeriveBim { file: PathBuf },
    /// Write a demo structure file to $FCMT_DEMO_DIR, or to stdout
    Demo { name: String },
    /// Compose a path of spans of a span universe
    ComposeSpan {
        file: PathBuf,
        #[arg(required = true)]
        spans: Vec<String>,
    },
}

/// Exit code for an error: 1 for law failures, 2 for everything else.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotMonic { .. }
        | Error::NotACategory(_)
        | Error::NotAMonad(_)
        | Error::NotAFunctor(_)
        | Error::NotAProfunctor(_)
        | Error::ClosureViolation(_)
        | Error::SourceInvalid(_) => 1,
        _ => 2,
    }
}

#[derive(Serialize)]
struct Tagged<'a, T> {
    kind: &'a str,
    seed: u64,
    #[serde(flatten)]
    body: T,
}

fn machine<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("outputs serialize");
    s.push('\n');
    s
}

fn human_report(kind: &str, r: &LawReport) -> String {
    let mut s = format!("kind: {kind}\n");
    if let Some(b) = r.bounds {
        s += &format!(
            "bounds: max-arity {}, max-nesting {}, max-cells-per-frame {}\n",
            b.max_arity, b.max_nesting, b.max_cells_per_frame
        );
    }
    s += &format!("checked: {} instances\n", r.checked_total());
    for (law, n) in &r.checked {
        s += &format!("  {law}: {n}\n");
    }
    if r.pass {
        s += "result: pass\n";
    } else {
        s += &format!("result: FAIL ({} violations)\n", r.violations.len());
        for v in &r.violations {
            s += &format!("  [{}] {}\n", v.law, v.witness);
        }
    }
    s
}

fn human_inventory(inv: &commands::BimInventory) -> String {
    let mut s = format!("monads: {}\n", inv.monads.len());
    for (i, m) in inv.monads.iter().enumerate() {
        s += &format!(
            "  #{i} {} on {}: mult {} unit {}\n",
            m.endo, m.carrier, m.mult, m.unit
        );
    }
    s += &format!("monad maps: {}\n", inv.monad_maps.len());
    for m in &inv.monad_maps {
        s += &format!(
            "  #{} -> #{} along {}: {}\n",
            m.source, m.target, m.vertical, m.cell
        );
    }
    s += &format!("bimodules: {}\n", inv.bimodules.len());
    for b in &inv.bimodules {
        s += &format!(
            "  #{} -> #{} on {}: src {} tgt {}\n",
            b.source, b.target, b.carrier, b.act_src, b.act_tgt
        );
    }
    for c in &inv.cells {
        s += &format!(
            "arity {}: {} frames, {} cells\n",
            c.arity, c.frames, c.cells
        );
    }
    s
}

fn human_span(u: &crate::instances::SpanUniverse, span: &crate::instances::Span) -> String {
    let (src, dst) = (&u.sets[span.src], &u.sets[span.dst]);
    let mut s = format!("{}: {} -> {}\n", span.name, src.name, dst.name);
    for (i, a) in span.apex.iter().enumerate() {
        s += &format!(
            "  {a}: {} -> {}\n",
            src.elements[span.leg_l[i] as usize], dst.elements[span.leg_r[i] as usize]
        );
    }
    s
}

/// Runs the command line on `args` (including the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Error> {
    let config = CheckConfig {
        bounds: Bounds::new(cli.max_arity, cli.max_nesting, cli.max_cells_per_frame),
        seed: cli.seed,
        parallel: cli.parallel,
    };
    let io = |e: std::io::Error| Error::Io(e.to_string());
    let human = cli.format == ReportFormat::Human;
    match &cli.command {
        Command::Check { file } => {
            let s = format::read(file)?;
            let report = check(&s, &config)?;
            let text = if human {
                human_report(s.kind(), &report)
            } else {
                machine(&Tagged {
                    kind: s.kind(),
                    seed: cli.seed,
                    body: &report,
                })
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(if report.pass { 0 } else { 1 })
        }
        Command::Bim { file } => {
            let s = format::read(file)?;
            let inv = bim(&s, &config)?;
            let text = if human {
                human_inventory(&inv)
            } else {
                machine(&inv)
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(0)
        }
        Command::DeriveBim { file } => {
            let s = format::read(file)?;
            let d = derive_bim(&s, &config)?;
            let text = if human {
                let mut t = format!("objects: {}\n", d.objects.join(", "));
                t += &human_inventory(&d.inventory);
                t += &human_report("enriched over Bim", &d.report);
                t
            } else {
                machine(&d)
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(if d.report.pass { 0 } else { 1 })
        }
        Command::Demo { name } => {
            let text = to_string(&demo::demo(name, cli.seed)?);
            match std::env::var_os("FCMT_DEMO_DIR") {
                Some(dir) => {
                    let path = PathBuf::from(dir).join(format!("{name}.json"));
                    std::fs::write(&path, text)
                        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                    writeln!(out, "{}", path.display()).map_err(io)?;
                }
                None => out.write_all(text.as_bytes()).map_err(io)?,
            }
            Ok(0)
        }
        Command::ComposeSpan { file, spans } => {
            let s = format::read(file)?;
            let span = compose_span(&s, spans)?;
            let text = match &s {
                Structure::SpanUniverse(u) if human => human_span(u, &span),
                _ => machine(&span),
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(0)
        }
    }
}
