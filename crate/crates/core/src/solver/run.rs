//! Run orchestration: step to t_end (or blow-up), emit diagnostic records and
//! snapshots on their configured cadences.

use std::path::PathBuf;

use super::{nonlinear_rhs, step, write_state_snapshot, SolverConfig, State, Stepper};
use crate::diag::{DiagSample, RecordStore};
use crate::error::{Error, Result};
use crate::norms;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunOutcome {
    Completed,
    BlowUp,
}

pub struct RunArtifacts {
    pub final_state: State,
    pub records: Vec<crate::diag::DiagRecord>,
    pub outcome: RunOutcome,
}

/// Output hooks; both optional.
#[derive(Default)]
pub struct RunSinks<'a> {
    pub on_record: Option<Box<dyn FnMut(&crate::diag::DiagRecord) -> Result<()> + 'a>>,
    pub snapshot_dir: Option<PathBuf>,
}

fn measure(state: &State, cfg: &SolverConfig) -> DiagSample {
    let m = &cfg.multiplier;
    let k = cfg.hk_order_effective() as f64;
    let u_l2 = norms::vec_l2(&state.u);
    let b_l2 = norms::vec_l2(&state.b);
    let lu = norms::vec_dissipation(&state.u, m);
    DiagSample {
        t: state.t,
        e_kin: 0.5 * u_l2 * u_l2,
        e_mag: 0.5 * b_l2 * b_l2,
        dissipation: m.nu * lu * lu,
        lu_l2: lu,
        grad_u_linf: norms::vec_grad_linf(&state.u),
        grad_b_linf: norms::vec_grad_linf(&state.b),
        u_hk: norms::vec_hk(&state.u, k),
        b_hk: norms::vec_hk(&state.b, k),
        div_u_res: state.u.div_residual(),
        div_b_res: state.b.div_residual(),
    }
}

fn cfl_dt(state: &State, safety: f64, remaining: f64) -> f64 {
    let h = state.grid().spacing();
    let vmax = norms::vec_linf(&state.u) + norms::vec_linf(&state.b);
    let dt = safety * h / vmax.max(h);
    dt.min(remaining)
}

/// Advance `init` to cfg.t_end. A blow-up signal ends the run gracefully with
/// the records collected so far; I/O failures from sinks are surfaced with
/// partial outputs intact.
pub fn run(cfg: &SolverConfig, init: State, sinks: &mut RunSinks) -> Result<RunArtifacts> {
    cfg.validate()?;
    if init.grid() != cfg.grid {
        return Err(Error::GridMismatch("initial state grid differs from config".into()));
    }
    // Probing the RHS at t = 0 catches non-finite initial data early.
    nonlinear_rhs(&init, cfg.dealias)?;

    let mut store = RecordStore::new();
    let mut state = init;
    let t0 = state.t;

    let emit = |store: &mut RecordStore, state: &State, sinks: &mut RunSinks| -> Result<()> {
        let rec = *store.push(measure(state, cfg))?;
        if let Some(f) = sinks.on_record.as_mut() {
            f(&rec)?;
        }
        Ok(())
    };
    emit(&mut store, &state, sinks)?;

    let mut stepper: Option<Stepper> = None;
    let mut step_idx: usize = 0;
    let mut outcome = RunOutcome::Completed;

    loop {
        let remaining = cfg.t_end - state.t;
        if remaining <= 1e-12 * cfg.t_end.max(1.0) {
            break;
        }
        let dt = match cfg.dt_policy {
            super::DtPolicy::Fixed { dt } => dt.min(remaining),
            super::DtPolicy::Cfl { safety } => cfl_dt(&state, safety, remaining),
        };
        let reuse = stepper.as_ref().is_some_and(|s| s.dt() == dt);
        if !reuse {
            stepper = Some(Stepper::new(cfg.grid, &cfg.multiplier, dt));
        }
        match step(&state, stepper.as_ref().expect("just built"), cfg) {
            Ok(next) => state = next,
            Err(Error::BlowUp { .. }) => {
                outcome = RunOutcome::BlowUp;
                break;
            }
            Err(e) => return Err(e),
        }
        step_idx += 1;
        // Keep the time grid exactly aligned for fixed dt so restarted runs
        // land on the same step times.
        if let super::DtPolicy::Fixed { dt: fixed } = cfg.dt_policy {
            if dt == fixed {
                state.t = t0 + step_idx as f64 * fixed;
            }
        }

        let finished = cfg.t_end - state.t <= 1e-12 * cfg.t_end.max(1.0);
        if step_idx % cfg.diag_every == 0 || finished {
            emit(&mut store, &state, sinks)?;
        }
        if cfg.snapshot_every > 0 && step_idx % cfg.snapshot_every == 0 {
            if let Some(dir) = &sinks.snapshot_dir {
                write_state_snapshot(&dir.join(format!("snap_{step_idx:08}")), &state)?;
            }
        }
        if finished {
            break;
        }
    }

    Ok(RunArtifacts { final_state: state, records: store.into_records(), outcome })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridSpec;
    use crate::multiplier::MultiplierSpec;
    use crate::solver::{init_fields, DtPolicy, InitSpec};

    fn quick_config(n: usize, t_end: f64, dt: f64) -> SolverConfig {
        SolverConfig {
            grid: GridSpec::new(2, n).unwrap(),
            multiplier: MultiplierSpec::log_power(2.0, 0.5, 1.0).unwrap(),
            dt_policy: DtPolicy::Fixed { dt },
            t_end,
            dealias: true,
            snapshot_every: 0,
            diag_every: 1,
            hk_order: None,
        }
    }

    #[test]
    fn short_run_completes_with_records() {
        let cfg = quick_config(16, 0.05, 1e-2);
        let init = init_fields(&InitSpec::TaylorGreen { b_band: None, b_amplitude: 0.0 }, cfg.grid, 0)
            .unwrap();
        let out = run(&cfg, init, &mut RunSinks::default()).unwrap();
        assert_eq!(out.outcome, RunOutcome::Completed);
        assert!(out.records.len() >= 2);
        assert!((out.final_state.t - 0.05).abs() <= 1e-12);
        // Energy nonincreasing between records for ν > 0.
        for w in out.records.windows(2) {
            assert!(w[1].total_energy() <= w[0].total_energy() * (1.0 + 1e-12));
        }
    }

    #[test]
    fn zero_b_stays_zero_through_a_run() {
        let cfg = quick_config(32, 0.1, 2e-3);
        let init = init_fields(&InitSpec::OrszagTang2d, cfg.grid, 0).unwrap();
        let init = State { b: crate::field::VectorField::zeros(cfg.grid), ..init };
        let out = run(&cfg, init, &mut RunSinks::default()).unwrap();
        for r in &out.records {
            assert!(r.e_mag <= 1e-13);
            assert!(r.b_hk <= 1e-13);
        }
    }

    #[test]
    fn cfl_policy_advances_to_t_end() {
        let mut cfg = quick_config(16, 0.03, 0.0);
        cfg.dt_policy = DtPolicy::Cfl { safety: 0.4 };
        let init = init_fields(&InitSpec::OrszagTang2d, cfg.grid, 0).unwrap();
        let out = run(&cfg, init, &mut RunSinks::default()).unwrap();
        assert_eq!(out.outcome, RunOutcome::Completed);
        assert!((out.final_state.t - 0.03).abs() <= 1e-10);
    }

    #[test]
    fn blow_up_signal_terminates_gracefully() {
        // ν = 0 with a huge amplitude and large dt destabilizes RK4 quickly.
        let mut cfg = quick_config(16, 10.0, 0.5);
        cfg.multiplier = MultiplierSpec::unity(2.0, 0.0).unwrap();
        let mut init = init_fields(&InitSpec::OrszagTang2d, cfg.grid, 0).unwrap();
        init.u.scale(1e6);
        init.b.scale(1e6);
        let out = run(&cfg, init, &mut RunSinks::default()).unwrap();
        assert_eq!(out.outcome, RunOutcome::BlowUp);
        assert!(!out.records.is_empty());
    }
}
