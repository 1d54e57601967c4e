//! The `sigbasis` command.
//!
//! Exit codes: 0 success, 1 verification failure, 2 bad input or usage,
//! 3 a run stopped at its iteration cap.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Parser, ValueEnum};
use sigbasis::baselines::SlbRule;
use sigbasis::bench::{builtin, homogenize_system, Algorithm, BenchmarkSystem};
use sigbasis::siggb::SgbOptions;
use sigbasis::ModuleOrderKind;

use crate::experiment::{canonical_text, run_experiment, ExperimentConfig, ExperimentResult, Status};
use crate::parse::parse_system_file;
use crate::table::{align, emit_table, Format, Metric};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_CAPPED: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmArg {
    Sgb,
    Buchberger,
    Slb,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModuleOrderArg {
    Pot,
    Top,
    Appendix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SlbRuleArg {
    Sound,
    /// May return a set that is not a Gröbner basis.
    Printed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputArg {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    ZeroReductions,
    BasisSize,
    ReducedSize,
}

/// Compute Gröbner bases with a signature-based algorithm and its baselines.
#[derive(Debug, Parser)]
#[command(name = "sigbasis", version)]
pub struct Args {
    /// `builtin:NAME` (mmt92, cyclic-N, katsura-N) or a system file path.
    #[arg(long = "system", required = true)]
    pub systems: Vec<String>,
    /// Homogenize each system with a new smallest variable `h`.
    #[arg(long)]
    pub homogenize: bool,
    #[arg(long, value_enum, default_value = "sgb")]
    pub algorithm: AlgorithmArg,
    /// Module order for the signature algorithm.
    #[arg(long, value_enum, default_value = "pot")]
    pub module_order: ModuleOrderArg,
    /// Skip principal syzygy augmentation.
    #[arg(long)]
    pub no_augment: bool,
    /// Skip the rewritable criterion.
    #[arg(long)]
    pub no_rewritable: bool,
    /// Track and check module representations.
    #[arg(long)]
    pub certified: bool,
    /// Stop the signature algorithm after N reductions.
    #[arg(long, value_name = "N")]
    pub cap: Option<u64>,
    /// Pair rejection rule of the staggered linear basis method.
    #[arg(long, value_enum, default_value = "sound")]
    pub slb_rule: SlbRuleArg,
    #[arg(long, value_enum, default_value = "json")]
    pub output: OutputArg,
    /// Print an algorithm × system grid of one metric instead of records.
    #[arg(long, value_enum, value_name = "METRIC")]
    pub table: Option<MetricArg>,
    /// Print the reduced basis on stdout (records go to stderr).
    #[arg(long)]
    pub emit_basis: bool,
    /// Fail unless every run produced a basis and all algorithms agree.
    #[arg(long)]
    pub verify: bool,
    /// Record wall-clock time (output is no longer reproducible).
    #[arg(long)]
    pub timing: bool,
}

/// Reads `builtin:NAME` or a system file.
pub fn resolve_system(source: &str) -> Result<BenchmarkSystem, String> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return builtin(name).map_err(|e| format!("{source}: {e}"));
    }
    let path = Path::new(source);
    let text = std::fs::read_to_string(path).map_err(|e| format!("{source}: {e}"))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| source.to_string());
    parse_system_file(&text, &name).map_err(|e| format!("{source}: {e}"))
}

fn records(results: &[ExperimentResult], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(results).expect("serializable");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in results {
                w.serialize(r).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
        Format::Text => {
            let mut rows = vec![["system", "algorithm", "zero_red", "|G|", "reduced", "status"]
                .map(String::from)
                .to_vec()];
            for r in results {
                let status = serde_json::to_value(r.status).expect("serializable");
                rows.push(vec![
                    r.system.clone(),
                    r.algorithm.to_string(),
                    r.zero_reductions.to_string(),
                    r.basis_size.to_string(),
                    r.reduced_size.map_or("-".into(), |v| v.to_string()),
                    status.as_str().unwrap_or_default().to_string(),
                ]);
            }
            align(&rows)
        }
    }
}

/// Problems found by `--verify`, one line each.
fn verification_failures(results: &[ExperimentResult]) -> Vec<String> {
    let mut out = Vec::new();
    for r in results {
        if r.status == Status::NotABasis {
            out.push(format!("{} / {}: output is not a Gröbner basis", r.system, r.algorithm));
        }
    }
    for (i, a) in results.iter().enumerate() {
        let Some(ha) = &a.gb_hash else { continue };
        if let Some(b) = results[..i]
            .iter()
            .find(|b| b.system == a.system && b.gb_hash.as_ref().is_some_and(|hb| hb != ha))
        {
            out.push(format!(
                "{}: reduced bases of {} and {} differ",
                a.system, b.algorithm, a.algorithm
            ));
        }
    }
    out
}

/// Runs the command with `argv` (program name first) and returns the exit
/// code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(&args, out, err) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn execute(args: &Args, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, String> {
    let module_order = match args.module_order {
        ModuleOrderArg::Pot => ModuleOrderKind::Pot,
        ModuleOrderArg::Top => ModuleOrderKind::Top,
        ModuleOrderArg::Appendix => ModuleOrderKind::Appendix,
    };
    if module_order == ModuleOrderKind::Appendix && args.cap.is_none() {
        return Err("--module-order appendix does not terminate; pass --cap N".into());
    }
    let algorithms: Vec<Algorithm> = match args.algorithm {
        AlgorithmArg::Sgb => vec![Algorithm::Sgb],
        AlgorithmArg::Buchberger => vec![Algorithm::Buchberger],
        AlgorithmArg::Slb => vec![Algorithm::Slb],
        AlgorithmArg::All => Algorithm::ALL.to_vec(),
    };
    if args.emit_basis && (args.systems.len() != 1 || algorithms.len() != 1) {
        return Err("--emit-basis needs exactly one system and one algorithm".into());
    }
    let cfg = ExperimentConfig {
        module_order,
        sgb: SgbOptions {
            pot_augmentation: !args.no_augment,
            rewritable: !args.no_rewritable,
            certified: args.certified,
            iteration_cap: args.cap,
            eager_prune: false,
        },
        buchberger_criteria: true,
        slb_rule: match args.slb_rule {
            SlbRuleArg::Sound => SlbRule::Sound,
            SlbRuleArg::Printed => SlbRule::AsPrinted,
        },
        timing: args.timing,
    };

    let mut systems = Vec::new();
    for source in &args.systems {
        let s = resolve_system(source)?;
        systems.push(if args.homogenize { homogenize_system(&s) } else { s });
    }
    let mut results = Vec::new();
    for s in &systems {
        for &a in &algorithms {
            let r = run_experiment(s, a, &cfg).map_err(|e| format!("{} / {}: {e}", s.name, a.name()))?;
            results.push(r);
        }
    }

    let format = match args.output {
        OutputArg::Json => Format::Json,
        OutputArg::Csv => Format::Csv,
        OutputArg::Text => Format::Text,
    };
    let report = match args.table {
        Some(m) => {
            let metric = match m {
                MetricArg::ZeroReductions => Metric::ZeroReductions,
                MetricArg::BasisSize => Metric::BasisSize,
                MetricArg::ReducedSize => Metric::ReducedSize,
            };
            emit_table(&results, metric, format)
        }
        None => records(&results, format),
    };
    let io = |e: std::io::Error| e.to_string();
    if args.emit_basis {
        let r = &results[0];
        match &r.reduced {
            Some(g) => out.write_all(canonical_text(&systems[0], g).as_bytes()).map_err(io)?,
            None => writeln!(err, "no reduced basis: run status is not complete").map_err(io)?,
        }
        err.write_all(report.as_bytes()).map_err(io)?;
    } else {
        out.write_all(report.as_bytes()).map_err(io)?;
    }

    if args.verify {
        let failures = verification_failures(&results);
        if !failures.is_empty() {
            for f in failures {
                writeln!(err, "verify: {f}").map_err(io)?;
            }
            return Ok(EXIT_VERIFY);
        }
    }
    if results.iter().any(|r| r.status == Status::Capped) {
        return Ok(EXIT_CAPPED);
    }
    Ok(EXIT_OK)
}
