//! Running one algorithm on one system and summarizing the outcome.

use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};
use sigbasis::baselines::{buchberger, reduced_gb, slb_state, SlbRule};
use sigbasis::bench::{Algorithm, BenchmarkSystem};
use sigbasis::siggb::{sgb, RunStatus, SgbOptions};
use sigbasis::{Error, ModuleOrderKind, Polynomial, RunStats};

use crate::parse::format_system;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub module_order: ModuleOrderKind,
    pub sgb: SgbOptions,
    pub buchberger_criteria: bool,
    pub slb_rule: SlbRule,
    pub timing: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            module_order: ModuleOrderKind::Pot,
            sgb: SgbOptions::default(),
            buchberger_criteria: true,
            slb_rule: SlbRule::Sound,
            timing: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Complete,
    Capped,
    NotABasis,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExperimentResult {
    pub system: String,
    pub algorithm: &'static str,
    pub field_char: u32,
    pub term_order: &'static str,
    pub module_order: Option<&'static str>,
    pub options: String,
    pub zero_reductions: u64,
    pub basis_size: u64,
    pub reduced_size: Option<u64>,
    pub wall_ms: Option<f64>,
    pub gb_hash: Option<String>,
    pub status: Status,
    #[serde(skip)]
    pub stats: RunStats,
    #[serde(skip)]
    pub basis: Vec<Polynomial>,
    #[serde(skip)]
    pub reduced: Option<Vec<Polynomial>>,
}

/// Canonical text of a basis: the system-file form, which is also what
/// `--emit-basis` prints.
pub fn canonical_text(system: &BenchmarkSystem, polys: &[Polynomial]) -> String {
    format_system(&system.ring, &system.variables, polys)
}

pub fn basis_hash(system: &BenchmarkSystem, reduced: &[Polynomial]) -> String {
    hex::encode(Sha256::digest(canonical_text(system, reduced).as_bytes()))
}

fn option_string(algorithm: Algorithm, cfg: &ExperimentConfig) -> String {
    let mut parts: Vec<String> = Vec::new();
    match algorithm {
        Algorithm::Sgb => {
            let o = &cfg.sgb;
            if o.pot_augmentation && cfg.module_order == ModuleOrderKind::Pot {
                parts.push("augment".into());
            }
            if o.rewritable {
                parts.push("rewritable".into());
            }
            if o.certified {
                parts.push("certified".into());
            }
            if let Some(cap) = o.iteration_cap {
                parts.push(format!("cap={cap}"));
            }
        }
        Algorithm::Buchberger if cfg.buchberger_criteria => parts.push("criteria".into()),
        Algorithm::Slb if cfg.slb_rule == SlbRule::AsPrinted => parts.push("printed-rule".into()),
        _ => {}
    }
    parts.join(";")
}

/// Runs `algorithm` on `system`, then reduces and hashes its output. A run
/// whose output is not a Gröbner basis is reported with
/// [`Status::NotABasis`] rather than an error.
pub fn run_experiment(
    system: &BenchmarkSystem,
    algorithm: Algorithm,
    cfg: &ExperimentConfig,
) -> Result<ExperimentResult, Error> {
    let ring = &system.ring;
    let start = Instant::now();
    let (basis, stats, capped) = match algorithm {
        Algorithm::Sgb => {
            let out = sgb(ring, &system.polynomials, cfg.module_order, cfg.sgb)?;
            let capped = out.status == RunStatus::Capped;
            (out.polynomials(), out.stats, capped)
        }
        Algorithm::Buchberger => {
            let (g, s) = buchberger(ring, &system.polynomials, cfg.buchberger_criteria);
            (g, s, false)
        }
        Algorithm::Slb => {
            let (st, s) = slb_state(ring, &system.polynomials, cfg.slb_rule);
            (st.basis, s, false)
        }
    };
    let wall = start.elapsed();
    let (status, reduced) = if capped {
        (Status::Capped, None)
    } else {
        match reduced_gb(ring, &basis) {
            Ok(r) => (Status::Complete, Some(r)),
            Err(Error::NotAGroebnerBasis) => (Status::NotABasis, None),
            Err(e) => return Err(e),
        }
    };
    Ok(ExperimentResult {
        system: system.name.clone(),
        algorithm: algorithm.name(),
        field_char: ring.field.characteristic(),
        term_order: ring.order.name(),
        module_order: (algorithm == Algorithm::Sgb).then(|| cfg.module_order.name()),
        options: option_string(algorithm, cfg),
        zero_reductions: stats.zero_reductions,
        basis_size: basis.len() as u64,
        reduced_size: reduced.as_ref().map(|r| r.len() as u64),
        wall_ms: cfg.timing.then_some(wall.as_secs_f64() * 1e3),
        gb_hash: reduced.as_ref().map(|r| basis_hash(system, r)),
        status,
        stats,
        basis,
        reduced,
    })
}
