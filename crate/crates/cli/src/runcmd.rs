//! The `run` subcommand: advance a job to t_end, streaming diag.csv rows and
//! snapshots, then write final_state and a manifest echoing the fully
//! resolved configuration.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::SystemTime;

use anyhow::{Context, Result};
use serde::Serialize;

use gmhd_core::diag::{self, RegimeReport, CSV_HEADER};
use gmhd_core::solver::{self, RunOutcome, RunSinks};

use crate::config::{self, JobConfig};

#[derive(Serialize)]
struct Manifest {
    code_version: String,
    mode: String,
    /// The resolved job config: every default the code filled in is explicit.
    resolved: JobConfig,
    regime: RegimeReport,
    warnings: Vec<String>,
    outcome: String,
    records_written: usize,
    /// Wall-clock timestamps (unix seconds); they live only here so that
    /// diag.csv stays byte-identical across reruns.
    started_unix: f64,
    finished_unix: f64,
}

fn unix_now() -> f64 {
    SystemTime::now()
        .duration_since(SystemTime::UNIX_EPOCH)
        .map(|d| d.as_secs_f64())
        .unwrap_or(0.0)
}

pub fn output_dir_override(configured: &Path) -> PathBuf {
    match std::env::var_os("GMHD_OUTPUT_DIR") {
        Some(dir) if !dir.is_empty() => PathBuf::from(dir),
        _ => configured.to_path_buf(),
    }
}

pub fn cmd_run(config_path: &Path) -> Result<i32> {
    let started = unix_now();
    let mut cfg = config::load(config_path)?;

    // Resolve every default so the manifest is complete.
    cfg.mode = Some("run".to_string());
    cfg.output_dir = output_dir_override(&cfg.output_dir);
    cfg.solver.hk_order = Some(cfg.solver.hk_order_effective());

    let out_dir = cfg.output_dir.clone();
    fs::create_dir_all(&out_dir)
        .with_context(|| format!("creating output dir {}", out_dir.display()))?;

    let m = &cfg.solver.multiplier;
    let regime =
        diag::regime_classify(m.alpha, 0.0, m.g_family, m.gamma, cfg.solver.grid.dim)?;
    let mut warnings = Vec::new();
    if !regime.main_condition {
        warnings.push(format!(
            "regime warning: main condition fails (alpha = {}, gamma = {}, n = {}); \
             no global-regularity guarantee applies to this configuration",
            m.alpha, m.gamma, cfg.solver.grid.dim
        ));
    }
    for w in &warnings {
        eprintln!("{w}");
    }

    let init = solver::init_fields(&cfg.init, cfg.solver.grid, cfg.rng_seed)?;

    let diag_path = out_dir.join("diag.csv");
    let mut diag_file = std::io::BufWriter::new(
        fs::File::create(&diag_path).with_context(|| format!("creating {}", diag_path.display()))?,
    );
    writeln!(diag_file, "{CSV_HEADER}")?;

    let snapshot_dir = out_dir.join("snapshots");
    let mut sinks = RunSinks {
        on_record: Some(Box::new(|rec: &diag::DiagRecord| {
            writeln!(diag_file, "{}", rec.csv_row()).map_err(gmhd_core::Error::Io)
        })),
        snapshot_dir: if cfg.solver.snapshot_every > 0 { Some(snapshot_dir) } else { None },
    };

    let artifacts = solver::run(&cfg.solver, init, &mut sinks)?;
    drop(sinks);

    solver::write_state_snapshot(&out_dir.join("final_state"), &artifacts.final_state)?;

    let outcome = match artifacts.outcome {
        RunOutcome::Completed => "completed",
        RunOutcome::BlowUp => "blow_up",
    };
    let manifest = Manifest {
        code_version: env!("CARGO_PKG_VERSION").to_string(),
        mode: "run".to_string(),
        resolved: cfg,
        regime,
        warnings,
        outcome: outcome.to_string(),
        records_written: artifacts.records.len(),
        started_unix: started,
        finished_unix: unix_now(),
    };
    let manifest_path = out_dir.join("manifest.json");
    fs::write(&manifest_path, serde_json::to_string_pretty(&manifest)?)
        .with_context(|| format!("writing {}", manifest_path.display()))?;

    println!(
        "run {}: {} records, final t = {:e}, outputs in {}",
        outcome,
        artifacts.records.len(),
        artifacts.final_state.t,
        out_dir.display()
    );
    Ok(match artifacts.outcome {
        RunOutcome::Completed => 0,
        RunOutcome::BlowUp => 2,
    })
}
