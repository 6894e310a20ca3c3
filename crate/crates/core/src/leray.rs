//! Leray projection onto divergence-free fields: û(ξ) ↦ (I - ξξᵀ/|ξ|²) û(ξ)
//! for ξ ≠ 0, mean mode untouched. Eliminates the pressure gradient on the
//! torus.

use num_complex::Complex64;

use crate::exec;
use crate::field::{SpectralField, VectorField};

pub fn leray_project(v: &VectorField) -> VectorField {
    let grid = v.grid();
    let dim = v.dim();
    let comps: Vec<&[Complex64]> = v.components().iter().map(|c| c.coeffs()).collect();

    // ξ·û per mode, then subtract the longitudinal part componentwise.
    let dot: Vec<Complex64> = exec::map_indexed(grid.len(), |flat| {
        let xi = grid.xi(flat);
        let mut d = Complex64::new(0.0, 0.0);
        for (i, c) in comps.iter().enumerate().take(dim) {
            d += xi[i] * c[flat];
        }
        d
    });

    let mut out = Vec::with_capacity(dim);
    for (i, c) in comps.iter().enumerate().take(dim) {
        let coeffs = exec::map_indexed(grid.len(), |flat| {
            let xi = grid.xi(flat);
            let q = xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2];
            if q == 0.0 {
                c[flat]
            } else {
                c[flat] - dot[flat] * (xi[i] / q)
            }
        });
        out.push(SpectralField::from_coeffs(grid, coeffs).expect("length invariant"));
    }
    VectorField::new(out, true).expect("component grids match")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridSpec;
    use crate::solver::init_taylor_green;

    #[test]
    fn gradient_fields_project_to_zero() {
        // v = ∇φ with φ = sin(x0)cos(x1): modes of ∂_i φ are i ξ_i φ̂.
        let grid = GridSpec::new(2, 32).unwrap();
        let n = grid.points_per_axis;
        let h = grid.spacing();
        let samples: Vec<f64> = (0..grid.len())
            .map(|f| ((f / n) as f64 * h).sin() * ((f % n) as f64 * h).cos())
            .collect();
        let phi = SpectralField::from_physical(grid, &samples).unwrap();
        let gradient: Vec<SpectralField> = (0..2)
            .map(|axis| {
                phi.map_symbol(|xi| Complex64::new(0.0, xi[axis]))
            })
            .collect();
        let v = VectorField::new(gradient, false).unwrap();
        let projected = leray_project(&v);
        for comp in projected.components() {
            let max = comp.coeffs().iter().map(|c| c.norm()).fold(0.0f64, f64::max);
            assert!(max <= 1e-13, "gradient survived projection: {max}");
        }
    }

    #[test]
    fn divergence_free_fields_are_fixed_points() {
        let grid = GridSpec::new(2, 32).unwrap();
        let state = init_taylor_green(grid).unwrap();
        let projected = leray_project(&state.u);
        for (a, b) in state.u.components().iter().zip(projected.components()) {
            for (x, y) in a.coeffs().iter().zip(b.coeffs()) {
                assert!((x - y).norm() <= 1e-14);
            }
        }
        assert!(projected.divergence_free);
        assert!(projected.div_residual() <= 1e-10);
    }
}
