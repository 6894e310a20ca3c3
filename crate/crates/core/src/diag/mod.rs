//! Monitored quantities of a run: the energy ledger terms, the running
//! supremum M(t) = e + ‖u‖_{H^k} + ‖b‖_{H^k}, and the criterion integrals
//! I_L = ∫‖𝓛u‖_{L²} dτ and I_inf = ∫‖∇u‖_{L^∞} dτ (trapezoidal in the
//! record times).

mod exponents;
mod ledger;
mod regime;

pub use exponents::{exponents, lambda_window, ExponentSet};
pub use ledger::{energy_ledger, find_t0};
pub use regime::{regime_classify, RegimeReport};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Raw per-time measurements handed to the record store.
#[derive(Debug, Clone, Copy)]
pub struct DiagSample {
    pub t: f64,
    pub e_kin: f64,
    pub e_mag: f64,
    /// ν‖𝓛u‖²_{L²}.
    pub dissipation: f64,
    /// ‖𝓛u‖_{L²}, the criterion integrand.
    pub lu_l2: f64,
    pub grad_u_linf: f64,
    pub grad_b_linf: f64,
    pub u_hk: f64,
    pub b_hk: f64,
    pub div_u_res: f64,
    pub div_b_res: f64,
}

/// One row of the diagnostics time series (the diag.csv schema).
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct DiagRecord {
    pub t: f64,
    pub e_kin: f64,
    pub e_mag: f64,
    pub dissipation: f64,
    pub grad_u_linf: f64,
    pub grad_b_linf: f64,
    pub u_hk: f64,
    pub b_hk: f64,
    pub m_t: f64,
    pub i_l: f64,
    pub i_inf: f64,
    pub div_u_res: f64,
    pub div_b_res: f64,
    pub energy_residual: f64,
}

/// Fixed CSV column order; the header row is written verbatim.
pub const CSV_HEADER: &str = "t,e_kin,e_mag,dissipation,grad_u_linf,grad_b_linf,u_hk,b_hk,m_t,i_l,i_inf,div_u_res,div_b_res,energy_residual";

impl DiagRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{:e},{:e},{:e},{:e},{:e},{:e},{:e},{:e},{:e},{:e},{:e},{:e},{:e},{:e}",
            self.t,
            self.e_kin,
            self.e_mag,
            self.dissipation,
            self.grad_u_linf,
            self.grad_b_linf,
            self.u_hk,
            self.b_hk,
            self.m_t,
            self.i_l,
            self.i_inf,
            self.div_u_res,
            self.div_b_res,
            self.energy_residual
        )
    }

    pub fn parse_csv_row(row: &str) -> Result<Self> {
        let vals: Vec<f64> = row
            .split(',')
            .map(|s| s.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Config(format!("bad diag row {row:?}: {e}")))?;
        if vals.len() != 14 {
            return Err(Error::Config(format!("diag row has {} columns, want 14", vals.len())));
        }
        Ok(DiagRecord {
            t: vals[0],
            e_kin: vals[1],
            e_mag: vals[2],
            dissipation: vals[3],
            grad_u_linf: vals[4],
            grad_b_linf: vals[5],
            u_hk: vals[6],
            b_hk: vals[7],
            m_t: vals[8],
            i_l: vals[9],
            i_inf: vals[10],
            div_u_res: vals[11],
            div_b_res: vals[12],
            energy_residual: vals[13],
        })
    }

    pub fn total_energy(&self) -> f64 {
        self.e_kin + self.e_mag
    }
}

/// Single-writer record store maintaining the running quantities.
#[derive(Debug, Default, Clone)]
pub struct RecordStore {
    records: Vec<DiagRecord>,
    prev: Option<DiagSample>,
    diss_integral: f64,
    e0: f64,
}

impl RecordStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn records(&self) -> &[DiagRecord] {
        &self.records
    }

    pub fn into_records(self) -> Vec<DiagRecord> {
        self.records
    }

    /// Extend the series by one sample; rejects non-monotone time.
    pub fn push(&mut self, s: DiagSample) -> Result<&DiagRecord> {
        let (m_prev, il_prev, iinf_prev) = match self.records.last() {
            Some(r) => {
                if s.t <= r.t {
                    return Err(Error::Parameter(format!(
                        "time regression: sample at t = {} after record at t = {}",
                        s.t, r.t
                    )));
                }
                (r.m_t, r.i_l, r.i_inf)
            }
            None => {
                self.e0 = s.e_kin + s.e_mag;
                (f64::NEG_INFINITY, 0.0, 0.0)
            }
        };
        let (i_l, i_inf) = match self.prev {
            Some(p) => {
                let dt = s.t - p.t;
                self.diss_integral += 0.5 * dt * (s.dissipation + p.dissipation);
                (il_prev + 0.5 * dt * (s.lu_l2 + p.lu_l2), iinf_prev + 0.5 * dt * (s.grad_u_linf + p.grad_u_linf))
            }
            None => (0.0, 0.0),
        };
        let m_t = m_prev.max(std::f64::consts::E + s.u_hk + s.b_hk);
        let energy_residual = if self.e0 > 0.0 {
            ((s.e_kin + s.e_mag) - self.e0 + self.diss_integral) / self.e0
        } else {
            0.0
        };
        self.records.push(DiagRecord {
            t: s.t,
            e_kin: s.e_kin,
            e_mag: s.e_mag,
            dissipation: s.dissipation,
            grad_u_linf: s.grad_u_linf,
            grad_b_linf: s.grad_b_linf,
            u_hk: s.u_hk,
            b_hk: s.b_hk,
            m_t,
            i_l,
            i_inf,
            div_u_res: s.div_u_res,
            div_b_res: s.div_b_res,
            energy_residual,
        });
        self.prev = Some(s);
        Ok(self.records.last().expect("just pushed"))
    }
}
