//! Time integration of the generalized MHD system on the torus:
//!
//!   u_t + u·∇u = -∇p + b·∇b - ν𝓛²u,   b_t + u·∇b = b·∇u,   ∇·u = ∇·b = 0,
//!
//! with 𝓛 = Λ^α/g(Λ) and zero magnetic resistivity. Pressure is eliminated
//! by Leray projection; quadratic terms are formed pseudo-spectrally with
//! 2/3-rule dealiasing; the stiff diagonal dissipation is integrated exactly
//! inside a fourth-order integrating-factor Runge-Kutta step.

mod init;
mod rhs;
mod run;
mod step;

pub use init::{init_fields, init_taylor_green, state_from_snapshot, write_state_snapshot, InitSpec};
pub use rhs::nonlinear_rhs;
pub use run::{run, RunArtifacts, RunOutcome, RunSinks};
pub use step::{step, Stepper};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::VectorField;
use crate::grid::GridSpec;
use crate::multiplier::MultiplierSpec;

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DtPolicy {
    Fixed { dt: f64 },
    Cfl { safety: f64 },
}

impl Default for DtPolicy {
    fn default() -> Self {
        DtPolicy::Cfl { safety: 0.4 }
    }
}

fn default_true() -> bool {
    true
}

fn default_diag_every() -> usize {
    1
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolverConfig {
    pub grid: GridSpec,
    pub multiplier: MultiplierSpec,
    #[serde(default)]
    pub dt_policy: DtPolicy,
    pub t_end: f64,
    /// Two-thirds rule on nonlinear products; on by default.
    #[serde(default = "default_true")]
    pub dealias: bool,
    /// Snapshot cadence in steps; 0 disables periodic snapshots.
    #[serde(default)]
    pub snapshot_every: usize,
    #[serde(default = "default_diag_every")]
    pub diag_every: usize,
    /// Sobolev index monitored in the diagnostics; defaults to the smallest
    /// integer above 1 + n/2 with headroom (3 in 2-D, 4 in 3-D).
    #[serde(default)]
    pub hk_order: Option<u32>,
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        self.grid.validate()?;
        self.multiplier.validate()?;
        match self.dt_policy {
            DtPolicy::Fixed { dt } => {
                if !(dt > 0.0) {
                    return Err(Error::Config(format!("dt must be > 0, got {dt}")));
                }
            }
            DtPolicy::Cfl { safety } => {
                if !(safety > 0.0 && safety <= 1.0) {
                    return Err(Error::Config(format!("cfl safety must be in (0, 1], got {safety}")));
                }
            }
        }
        if !(self.t_end > 0.0) {
            return Err(Error::Config(format!("t_end must be > 0, got {}", self.t_end)));
        }
        if self.diag_every == 0 {
            return Err(Error::Config("diag_every must be >= 1".into()));
        }
        Ok(())
    }

    pub fn hk_order_effective(&self) -> u32 {
        self.hk_order.unwrap_or(match self.grid.dim {
            2 => 3,
            _ => 4,
        })
    }
}

/// Instantaneous solver state: both fields divergence-free and Hermitian.
#[derive(Debug, Clone)]
pub struct State {
    pub u: VectorField,
    pub b: VectorField,
    pub t: f64,
}

impl State {
    pub fn grid(&self) -> GridSpec {
        self.u.grid()
    }

    pub fn check_invariants(&self) -> Result<()> {
        for (name, f) in [("u", &self.u), ("b", &self.b)] {
            let res = f.div_residual();
            if res > 1e-10 {
                return Err(Error::Parameter(format!("divergence residual of {name} is {res}")));
            }
        }
        Ok(())
    }
}
