//! Job configuration: JSON on disk, fully resolved (every default explicit)
//! in the manifest. Malformed or invalid configs are reported with a JSON
//! pointer to the offending field.

use std::path::{Path, PathBuf};

use anyhow::{anyhow, Result};
use serde::{Deserialize, Serialize};

use gmhd_core::solver::{DtPolicy, InitSpec, SolverConfig};

fn default_output_dir() -> PathBuf {
    PathBuf::from("gmhd_out")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JobConfig {
    /// Optional mode tag; must be "run" when present.
    #[serde(default)]
    pub mode: Option<String>,
    pub solver: SolverConfig,
    pub init: InitSpec,
    #[serde(default = "default_output_dir")]
    pub output_dir: PathBuf,
    #[serde(default)]
    pub rng_seed: u64,
}

fn pointer_of(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    let mut out = String::new();
    for seg in path.iter() {
        match seg {
            Segment::Seq { index } => out.push_str(&format!("/{index}")),
            Segment::Map { key } => out.push_str(&format!("/{key}")),
            Segment::Enum { variant } => out.push_str(&format!("/{variant}")),
            Segment::Unknown => out.push_str("/?"),
        }
    }
    if out.is_empty() {
        "/".to_string()
    } else {
        out
    }
}

fn err_at(pointer: &str, msg: impl std::fmt::Display) -> anyhow::Error {
    anyhow!("config field {pointer}: {msg}")
}

pub fn load(path: &Path) -> Result<JobConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| anyhow!("cannot read config {}: {e}", path.display()))?;
    let mut de = serde_json::Deserializer::from_str(&text);
    let cfg: JobConfig = serde_path_to_error::deserialize(&mut de)
        .map_err(|e| err_at(&pointer_of(e.path()), e.inner()))?;
    validate(&cfg)?;
    Ok(cfg)
}

/// Field-pointed semantic validation.
pub fn validate(cfg: &JobConfig) -> Result<()> {
    if let Some(mode) = &cfg.mode {
        if mode != "run" {
            return Err(err_at("/mode", format!("expected \"run\", got {mode:?}")));
        }
    }
    let g = &cfg.solver.grid;
    if g.dim != 2 && g.dim != 3 {
        return Err(err_at("/solver/grid/dim", format!("must be 2 or 3, got {}", g.dim)));
    }
    if g.points_per_axis < 8 || !g.points_per_axis.is_power_of_two() {
        return Err(err_at(
            "/solver/grid/points_per_axis",
            format!("must be a power of two >= 8, got {}", g.points_per_axis),
        ));
    }
    let m = &cfg.solver.multiplier;
    if !(m.alpha >= 0.0) {
        return Err(err_at("/solver/multiplier/alpha", format!("must be >= 0, got {}", m.alpha)));
    }
    if !(m.gamma >= 0.0) {
        return Err(err_at("/solver/multiplier/gamma", format!("must be >= 0, got {}", m.gamma)));
    }
    if !(m.nu >= 0.0) {
        return Err(err_at("/solver/multiplier/nu", format!("must be >= 0, got {}", m.nu)));
    }
    match cfg.solver.dt_policy {
        DtPolicy::Fixed { dt } => {
            if !(dt > 0.0) {
                return Err(err_at("/solver/dt_policy/dt", format!("must be > 0, got {dt}")));
            }
        }
        DtPolicy::Cfl { safety } => {
            if !(safety > 0.0 && safety <= 1.0) {
                return Err(err_at(
                    "/solver/dt_policy/safety",
                    format!("must be in (0, 1], got {safety}"),
                ));
            }
        }
    }
    if !(cfg.solver.t_end > 0.0) {
        return Err(err_at("/solver/t_end", format!("must be > 0, got {}", cfg.solver.t_end)));
    }
    if cfg.solver.diag_every == 0 {
        return Err(err_at("/solver/diag_every", "must be >= 1"));
    }
    match &cfg.init {
        InitSpec::RandomBand { band: [lo, hi], .. } => {
            if !(*lo >= 1.0 && hi >= lo && *hi <= g.points_per_axis as f64 / 2.0) {
                return Err(err_at(
                    "/init/band",
                    format!("need 1 <= lo <= hi <= N/2, got [{lo}, {hi}]"),
                ));
            }
        }
        InitSpec::TaylorGreen { b_band: Some([lo, hi]), .. } => {
            if !(*lo >= 1.0 && hi >= lo && *hi <= g.points_per_axis as f64 / 2.0) {
                return Err(err_at(
                    "/init/b_band",
                    format!("need 1 <= lo <= hi <= N/2, got [{lo}, {hi}]"),
                ));
            }
        }
        InitSpec::OrszagTang2d if g.dim != 2 => {
            return Err(err_at("/init/kind", "orszag_tang_2d requires dim = 2"));
        }
        _ => {}
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_error_carries_a_pointer() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cfg.json");
        std::fs::write(
            &path,
            r#"{"solver": {"grid": {"dim": 2, "points_per_axis": "many"},
                "multiplier": {"alpha": 2.0, "g_family": "unity", "nu": 1.0},
                "t_end": 1.0},
                "init": {"kind": "taylor_green"}}"#,
        )
        .unwrap();
        let err = load(&path).unwrap_err().to_string();
        assert!(err.contains("/solver/grid/points_per_axis"), "{err}");
    }

    #[test]
    fn semantic_error_carries_a_pointer() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cfg.json");
        std::fs::write(
            &path,
            r#"{"solver": {"grid": {"dim": 2, "points_per_axis": 48},
                "multiplier": {"alpha": 2.0, "g_family": "unity", "nu": 1.0},
                "t_end": 1.0},
                "init": {"kind": "taylor_green"}}"#,
        )
        .unwrap();
        let err = load(&path).unwrap_err().to_string();
        assert!(err.contains("/solver/grid/points_per_axis"), "{err}");
        assert!(err.contains("power of two"), "{err}");
    }
}
