//! Two-thirds rule dealiasing: zero every mode with any |ξ_i| > N/3, so that
//! quadratic products formed in physical space are exact convolutions on the
//! retained modes.

use num_complex::Complex64;

use crate::exec;
use crate::field::{SpectralField, VectorField};
use crate::grid::GridSpec;

/// Largest retained wavenumber magnitude, floor(N/3).
pub fn cutoff(points_per_axis: usize) -> f64 {
    (points_per_axis / 3) as f64
}

fn masked(grid: GridSpec, flat: usize) -> bool {
    let xi = grid.xi(flat);
    let c = cutoff(grid.points_per_axis);
    xi.iter().take(grid.dim).any(|k| k.abs() > c)
}

pub fn apply(u: &mut SpectralField) {
    let grid = u.grid();
    exec::for_each_chunk_mut(u.coeffs_mut(), exec::CHUNK, |ci, chunk| {
        let base = ci * exec::CHUNK;
        for (off, v) in chunk.iter_mut().enumerate() {
            if masked(grid, base + off) {
                *v = Complex64::new(0.0, 0.0);
            }
        }
    });
}

pub fn apply_vec(v: &mut VectorField) {
    for i in 0..v.dim() {
        apply(v.component_mut(i));
    }
}

pub fn dealiased(u: &SpectralField) -> SpectralField {
    let mut out = u.clone();
    apply(&mut out);
    out
}

pub fn dealiased_vec(v: &VectorField) -> VectorField {
    let mut out = v.clone();
    apply_vec(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cutoff_keeps_low_modes_only() {
        let grid = GridSpec::new(2, 64).unwrap();
        let mut u = SpectralField::zeros(grid);
        u.set_mode_pair(&[21, 0], Complex64::new(1.0, 0.0));
        u.set_mode_pair(&[22, 0], Complex64::new(1.0, 0.0));
        u.set_mode_pair(&[5, -30], Complex64::new(1.0, 0.0));
        apply(&mut u);
        assert_ne!(u.mode(&[21, 0]).re, 0.0, "|ξ| = 21 = floor(64/3) is retained");
        assert_eq!(u.mode(&[22, 0]).re, 0.0);
        assert_eq!(u.mode(&[5, -30]).re, 0.0);
    }
}
