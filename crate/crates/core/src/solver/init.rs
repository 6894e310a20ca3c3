//! Initial conditions. All of them are artifact choices: divergence-free by
//! construction and deterministic given (spec, grid, seed).

use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::State;
use crate::error::{Error, Result};
use crate::field::{SpectralField, VectorField};
use crate::grid::GridSpec;
use crate::sampling;
use crate::snapshot;

fn default_amplitude() -> f64 {
    1.0
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InitSpec {
    /// u = (sin x₀ cos x₁, -cos x₀ sin x₁), b = 0, optionally with a small
    /// band-limited random b perturbation.
    TaylorGreen {
        #[serde(default)]
        b_band: Option<[f64; 2]>,
        #[serde(default)]
        b_amplitude: f64,
    },
    /// u = (-2 sin x₁, 2 sin x₀), b = (-sin x₁, sin 2x₀).
    OrszagTang2d,
    /// Divergence-free random fields with spectrum in lo ≤ |ξ| ≤ hi.
    RandomBand {
        band: [f64; 2],
        #[serde(default = "default_amplitude")]
        u_amplitude: f64,
        #[serde(default)]
        b_amplitude: f64,
    },
    FromSnapshot { path: PathBuf },
}

/// Taylor-Green velocity with b = 0.
pub fn init_taylor_green(grid: GridSpec) -> Result<State> {
    let mut u0 = SpectralField::zeros(grid);
    let mut u1 = SpectralField::zeros(grid);
    match grid.dim {
        2 => {
            // sin x₀ cos x₁ = (sin(x₀+x₁) + sin(x₀-x₁))/2 and
            // -cos x₀ sin x₁ = (sin(x₀-x₁) - sin(x₀+x₁))/2; each sine mode
            // carries ∓ iπ at ±k under the unitary convention.
            let q = std::f64::consts::PI / 2.0;
            u0.set_mode_pair(&[1, 1], Complex64::new(0.0, -q));
            u0.set_mode_pair(&[1, -1], Complex64::new(0.0, -q));
            u1.set_mode_pair(&[1, 1], Complex64::new(0.0, q));
            u1.set_mode_pair(&[1, -1], Complex64::new(0.0, -q));
        }
        3 => {
            // Classical vortex u = (sin x₀ cos x₁ cos x₂, -cos x₀ sin x₁ cos x₂, 0),
            // built from physical samples for clarity.
            let n = grid.points_per_axis;
            let h = grid.spacing();
            let mut s0 = vec![0.0; grid.len()];
            let mut s1 = vec![0.0; grid.len()];
            for flat in 0..grid.len() {
                let i2 = flat % n;
                let r = flat / n;
                let i1 = r % n;
                let i0 = r / n;
                let (x, y, z) = (i0 as f64 * h, i1 as f64 * h, i2 as f64 * h);
                s0[flat] = x.sin() * y.cos() * z.cos();
                s1[flat] = -x.cos() * y.sin() * z.cos();
            }
            u0 = SpectralField::from_physical(grid, &s0)?;
            u1 = SpectralField::from_physical(grid, &s1)?;
        }
        _ => unreachable!("validated dim"),
    }
    let mut comps = vec![u0, u1];
    if grid.dim == 3 {
        comps.push(SpectralField::zeros(grid));
    }
    let u = VectorField::new(comps, true)?;
    Ok(State { u, b: VectorField::zeros(grid), t: 0.0 })
}

fn init_orszag_tang(grid: GridSpec) -> Result<State> {
    if grid.dim != 2 {
        return Err(Error::Config("orszag_tang_2d requires a 2-D grid".into()));
    }
    // Single sine modes: sin(k·x) has coefficients ∓ i (2π)^{n/2}/2 at ±k.
    let q = std::f64::consts::PI; // (2π)/2 in 2-D
    let mut u0 = SpectralField::zeros(grid);
    let mut u1 = SpectralField::zeros(grid);
    let mut b0 = SpectralField::zeros(grid);
    let mut b1 = SpectralField::zeros(grid);
    // u = (-2 sin x₁, 2 sin x₀)
    u0.set_mode_pair(&[0, 1], Complex64::new(0.0, 2.0 * q));
    u1.set_mode_pair(&[1, 0], Complex64::new(0.0, -2.0 * q));
    // b = (-sin x₁, sin 2x₀)
    b0.set_mode_pair(&[0, 1], Complex64::new(0.0, q));
    b1.set_mode_pair(&[2, 0], Complex64::new(0.0, -q));
    let u = VectorField::new(vec![u0, u1], true)?;
    let b = VectorField::new(vec![b0, b1], true)?;
    Ok(State { u, b, t: 0.0 })
}

/// Rebuild a state from snapshot physical samples (fields u0..u{n-1}, b0..).
pub fn state_from_snapshot(path: &Path, grid: GridSpec) -> Result<State> {
    let (header, fields) = snapshot::read_snapshot(path)?;
    let snap_grid = header.grid()?;
    if snap_grid != grid {
        return Err(Error::SnapshotMismatch(format!(
            "snapshot grid {}^{} differs from configured {}^{}",
            header.n, header.dim, grid.points_per_axis, grid.dim
        )));
    }
    let expected: Vec<String> = (0..grid.dim)
        .map(|i| format!("u{i}"))
        .chain((0..grid.dim).map(|i| format!("b{i}")))
        .collect();
    if header.fields != expected {
        return Err(Error::SnapshotMismatch(format!(
            "snapshot fields {:?}, expected {:?}",
            header.fields, expected
        )));
    }
    let mut comps = Vec::with_capacity(2 * grid.dim);
    for data in &fields {
        comps.push(SpectralField::from_physical(grid, data)?);
    }
    let b_comps = comps.split_off(grid.dim);
    let u = VectorField::new(comps, true)?;
    let b = VectorField::new(b_comps, true)?;
    Ok(State { u, b, t: header.time })
}

/// Write a state as a snapshot readable by `state_from_snapshot`.
pub fn write_state_snapshot(dir: &Path, state: &State) -> Result<()> {
    let grid = state.grid();
    let mut named: Vec<(String, Vec<f64>)> = Vec::new();
    for (prefix, field) in [("u", &state.u), ("b", &state.b)] {
        for i in 0..grid.dim {
            named.push((format!("{prefix}{i}"), field.component(i).to_physical()));
        }
    }
    let borrowed: Vec<(&str, &[f64])> =
        named.iter().map(|(n, d)| (n.as_str(), d.as_slice())).collect();
    snapshot::write_snapshot(dir, grid, state.t, &borrowed)
}

pub fn init_fields(spec: &InitSpec, grid: GridSpec, seed: u64) -> Result<State> {
    grid.validate()?;
    match spec {
        InitSpec::TaylorGreen { b_band, b_amplitude } => {
            let mut state = init_taylor_green(grid)?;
            if let Some([lo, hi]) = b_band {
                if !(*lo >= 1.0 && hi >= lo) {
                    return Err(Error::Config(format!("bad b_band [{lo}, {hi}]")));
                }
                let mut rng = sampling::rng_for("init:taylor_green:b", seed, 0);
                state.b = sampling::random_band_vector(grid, *lo, *hi, *b_amplitude, &mut rng);
            }
            Ok(state)
        }
        InitSpec::OrszagTang2d => init_orszag_tang(grid),
        InitSpec::RandomBand { band: [lo, hi], u_amplitude, b_amplitude } => {
            if !(*lo >= 1.0 && hi >= lo && *hi <= grid.points_per_axis as f64 / 2.0) {
                return Err(Error::Config(format!("bad band [{lo}, {hi}] for N = {}", grid.points_per_axis)));
            }
            let mut rng_u = sampling::rng_for("init:random_band:u", seed, 0);
            let u = sampling::random_band_vector(grid, *lo, *hi, *u_amplitude, &mut rng_u);
            let mut rng_b = sampling::rng_for("init:random_band:b", seed, 0);
            let b = sampling::random_band_vector(grid, *lo, *hi, *b_amplitude, &mut rng_b);
            Ok(State { u, b, t: 0.0 })
        }
        InitSpec::FromSnapshot { path } => state_from_snapshot(path, grid),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norms;

    #[test]
    fn taylor_green_is_solenoidal() {
        let grid = GridSpec::new(2, 64).unwrap();
        let s = init_fields(&InitSpec::TaylorGreen { b_band: None, b_amplitude: 0.0 }, grid, 0).unwrap();
        assert!(s.u.div_residual() <= 1e-12);
        assert_eq!(norms::vec_l2(&s.b), 0.0);
        // Spot-check physical values against the closed form.
        let phys0 = s.u.component(0).to_physical();
        let n = grid.points_per_axis;
        let h = grid.spacing();
        let at = |i0: usize, i1: usize| phys0[i0 * n + i1];
        for (i0, i1) in [(3, 7), (10, 20), (40, 5)] {
            let expected = (i0 as f64 * h).sin() * (i1 as f64 * h).cos();
            assert!((at(i0, i1) - expected).abs() <= 1e-12);
        }
    }

    #[test]
    fn orszag_tang_divergence_and_modes() {
        let grid = GridSpec::new(2, 32).unwrap();
        let s = init_fields(&InitSpec::OrszagTang2d, grid, 0).unwrap();
        assert!(s.u.div_residual() <= 1e-13);
        assert!(s.b.div_residual() <= 1e-13);
        // u₁ = 2 sin x₀ peaks at 2; b₁ = sin 2x₀ peaks at 1.
        assert!((norms::linf(s.u.component(1)) - 2.0).abs() <= 1e-12);
        assert!((norms::linf(s.b.component(1)) - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn random_band_is_deterministic_bitwise() {
        let grid = GridSpec::new(2, 32).unwrap();
        let spec = InitSpec::RandomBand { band: [4.0, 8.0], u_amplitude: 1.0, b_amplitude: 0.1 };
        let a = init_fields(&spec, grid, 7).unwrap();
        let b = init_fields(&spec, grid, 7).unwrap();
        for (x, y) in a.u.component(0).coeffs().iter().zip(b.u.component(0).coeffs()) {
            assert_eq!(x.re.to_bits(), y.re.to_bits());
            assert_eq!(x.im.to_bits(), y.im.to_bits());
        }
        let c = init_fields(&spec, grid, 8).unwrap();
        assert_ne!(
            a.u.component(0).coeffs()[grid.flat_index(&[4, 1])],
            c.u.component(0).coeffs()[grid.flat_index(&[4, 1])]
        );
    }

    #[test]
    fn snapshot_roundtrip_recovers_state() {
        let grid = GridSpec::new(2, 16).unwrap();
        let spec = InitSpec::RandomBand { band: [1.0, 5.0], u_amplitude: 1.0, b_amplitude: 0.3 };
        let s = init_fields(&spec, grid, 3).unwrap();
        let dir = tempfile::tempdir().unwrap();
        write_state_snapshot(dir.path(), &s).unwrap();
        let back = state_from_snapshot(dir.path(), grid).unwrap();
        assert_eq!(back.t, s.t);
        let err = norms::vec_l2(&{
            let mut d = back.u.clone();
            d.axpy(-1.0, &s.u);
            d
        });
        assert!(err <= 1e-13, "u mismatch {err}");
    }

    #[test]
    fn snapshot_grid_mismatch_is_detected() {
        let grid = GridSpec::new(2, 16).unwrap();
        let s = init_taylor_green(grid).unwrap();
        let dir = tempfile::tempdir().unwrap();
        write_state_snapshot(dir.path(), &s).unwrap();
        let other = GridSpec::new(2, 32).unwrap();
        assert!(matches!(
            state_from_snapshot(dir.path(), other),
            Err(Error::SnapshotMismatch(_))
        ));
    }

    #[test]
    fn out_of_range_band_is_rejected() {
        let grid = GridSpec::new(2, 16).unwrap();
        let spec = InitSpec::RandomBand { band: [4.0, 20.0], u_amplitude: 1.0, b_amplitude: 0.0 };
        assert!(init_fields(&spec, grid, 0).is_err());
    }
}
