//! Forward and inverse transforms between physical samples and Fourier
//! coefficients, in the unitary convention
//!
//!   û(ξ) = (2π)^{-n/2} ∫ e^{-ix·ξ} f(x) dx
//!        = (2π)^{n/2} N^{-n} Σ_m f(x_m) e^{-i x_m·ξ},
//!   f(x_m) = (2π)^{-n/2} Σ_ξ û(ξ) e^{i x_m·ξ}.
//!
//! With this normalization Σ_ξ |û(ξ)|² equals the physical integral ∫|f|² dx
//! (Plancherel), which every norm closed-form in the test suite relies on.
//! The normalization is fixed here once and used repo-wide.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_complex::Complex64;
use once_cell::sync::Lazy;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};
use crate::exec;
use crate::grid::{GridSpec, TAU};

type Plan = Arc<dyn Fft<f64>>;

static PLANS: Lazy<Mutex<HashMap<(usize, bool), Plan>>> = Lazy::new(|| Mutex::new(HashMap::new()));

fn plan(len: usize, inverse: bool) -> Plan {
    let mut map = PLANS.lock().expect("plan cache poisoned");
    map.entry((len, inverse))
        .or_insert_with(|| {
            let mut planner = FftPlanner::new();
            if inverse {
                planner.plan_fft_inverse(len)
            } else {
                planner.plan_fft_forward(len)
            }
        })
        .clone()
}

fn fft_lines(data: &mut [Complex64], len: usize, fft: &Plan) {
    let scratch_len = fft.get_inplace_scratch_len();
    exec::for_each_chunk_mut(data, len, |_c, line| {
        let mut scratch = vec![Complex64::new(0.0, 0.0); scratch_len];
        fft.process_with_scratch(line, &mut scratch);
    });
}

/// dst (cols x rows) = transpose of src (rows x cols).
fn transpose(src: &[Complex64], dst: &mut [Complex64], rows: usize, cols: usize) {
    debug_assert_eq!(src.len(), rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            dst[c * rows + r] = src[r * cols + c];
        }
    }
}

/// In-place unnormalized n-dimensional FFT, one axis at a time.
fn fft_nd(grid: GridSpec, data: &mut [Complex64], inverse: bool) {
    let n = grid.points_per_axis;
    let fft = plan(n, inverse);
    match grid.dim {
        2 => {
            fft_lines(data, n, &fft);
            let mut tmp = vec![Complex64::new(0.0, 0.0); data.len()];
            transpose(data, &mut tmp, n, n);
            fft_lines(&mut tmp, n, &fft);
            transpose(&tmp, data, n, n);
        }
        3 => {
            let plane = n * n;
            fft_lines(data, n, &fft);
            // Middle axis: transpose within each leading plane.
            let scratch_len = fft.get_inplace_scratch_len();
            exec::for_each_chunk_mut(data, plane, |_p, pl| {
                let mut tmp = vec![Complex64::new(0.0, 0.0); plane];
                transpose(pl, &mut tmp, n, n);
                let mut scratch = vec![Complex64::new(0.0, 0.0); scratch_len];
                for row in tmp.chunks_mut(n) {
                    fft.process_with_scratch(row, &mut scratch);
                }
                transpose(&tmp, pl, n, n);
            });
            // Leading axis: full transpose of the (n, n²) view.
            let mut tmp = vec![Complex64::new(0.0, 0.0); data.len()];
            transpose(data, &mut tmp, n, plane);
            fft_lines(&mut tmp, n, &fft);
            transpose(&tmp, data, plane, n);
        }
        _ => unreachable!("validated dim"),
    }
}

fn scale_in_place(data: &mut [Complex64], s: f64) {
    exec::for_each_chunk_mut(data, exec::CHUNK, |_c, chunk| {
        for v in chunk.iter_mut() {
            *v *= s;
        }
    });
}

/// Transform real physical samples (row-major) to Fourier coefficients.
pub fn forward(grid: GridSpec, samples: &[f64]) -> Result<Vec<Complex64>> {
    if samples.len() != grid.len() {
        return Err(Error::Config(format!(
            "sample count {} does not match grid size {}",
            samples.len(),
            grid.len()
        )));
    }
    let mut data: Vec<Complex64> = samples.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    fft_nd(grid, &mut data, false);
    let scale = TAU.powf(grid.dim as f64 / 2.0) / grid.len() as f64;
    scale_in_place(&mut data, scale);
    Ok(data)
}

/// Inverse transform to complex physical samples.
pub fn inverse_complex(grid: GridSpec, coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    if coeffs.len() != grid.len() {
        return Err(Error::Config(format!(
            "coefficient count {} does not match grid size {}",
            coeffs.len(),
            grid.len()
        )));
    }
    let mut data = coeffs.to_vec();
    fft_nd(grid, &mut data, true);
    let scale = TAU.powf(-(grid.dim as f64) / 2.0);
    scale_in_place(&mut data, scale);
    Ok(data)
}

/// Inverse transform, real parts only. For Hermitian-symmetric coefficient
/// sets the imaginary parts are rounding noise.
pub fn inverse_real(grid: GridSpec, coeffs: &[Complex64]) -> Result<Vec<f64>> {
    Ok(inverse_complex(grid, coeffs)?.into_iter().map(|c| c.re).collect())
}
