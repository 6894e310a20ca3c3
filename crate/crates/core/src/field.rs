//! Scalar and vector fields stored as Fourier coefficients over the full
//! wavenumber lattice.
//!
//! Fields that represent real data carry Hermitian symmetry
//! coeffs(-ξ) = conj(coeffs(ξ)); `symmetrize` re-enforces it after nonlinear
//! steps and `hermitian_defect` measures the violation.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exec;
use crate::grid::GridSpec;
use crate::transform;

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralField {
    grid: GridSpec,
    coeffs: Vec<Complex64>,
}

impl SpectralField {
    pub fn zeros(grid: GridSpec) -> Self {
        SpectralField { grid, coeffs: vec![Complex64::new(0.0, 0.0); grid.len()] }
    }

    pub fn from_coeffs(grid: GridSpec, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != grid.len() {
            return Err(Error::GridMismatch(format!(
                "coefficient count {} vs grid size {}",
                coeffs.len(),
                grid.len()
            )));
        }
        Ok(SpectralField { grid, coeffs })
    }

    /// Forward-transform real physical samples (row-major).
    pub fn from_physical(grid: GridSpec, samples: &[f64]) -> Result<Self> {
        Ok(SpectralField { grid, coeffs: transform::forward(grid, samples)? })
    }

    /// Inverse-transform to real physical samples.
    pub fn to_physical(&self) -> Vec<f64> {
        transform::inverse_real(self.grid, &self.coeffs).expect("length invariant")
    }

    pub fn to_physical_complex(&self) -> Vec<Complex64> {
        transform::inverse_complex(self.grid, &self.coeffs).expect("length invariant")
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [Complex64] {
        &mut self.coeffs
    }

    pub fn mode(&self, modes: &[i64]) -> Complex64 {
        self.coeffs[self.grid.flat_index(modes)]
    }

    /// Set a single coefficient without touching its conjugate partner.
    pub fn set_mode(&mut self, modes: &[i64], value: Complex64) {
        let i = self.grid.flat_index(modes);
        self.coeffs[i] = value;
    }

    /// Set û(ξ) = value and û(-ξ) = conj(value), keeping the field real.
    pub fn set_mode_pair(&mut self, modes: &[i64], value: Complex64) {
        let i = self.grid.flat_index(modes);
        let j = self.grid.conj_index(i);
        self.coeffs[i] = value;
        if j == i {
            self.coeffs[i] = Complex64::new(value.re, 0.0);
        } else {
            self.coeffs[j] = value.conj();
        }
    }

    /// New field with coefficients multiplied by a symbol of the wavevector.
    pub fn map_symbol<F>(&self, f: F) -> SpectralField
    where
        F: Fn(&[f64; 3]) -> Complex64 + Sync,
    {
        let grid = self.grid;
        let src = &self.coeffs;
        let coeffs = exec::map_indexed(src.len(), |i| src[i] * f(&grid.xi(i)));
        SpectralField { grid, coeffs }
    }

    pub fn scale(&mut self, c: f64) {
        exec::for_each_chunk_mut(&mut self.coeffs, exec::CHUNK, |_i, chunk| {
            for v in chunk.iter_mut() {
                *v *= c;
            }
        });
    }

    /// self += c * other.
    pub fn axpy(&mut self, c: f64, other: &SpectralField) {
        assert_eq!(self.grid, other.grid, "grid mismatch");
        let src = &other.coeffs;
        exec::for_each_chunk_mut(&mut self.coeffs, exec::CHUNK, |ci, chunk| {
            let base = ci * exec::CHUNK;
            for (off, v) in chunk.iter_mut().enumerate() {
                *v += src[base + off] * c;
            }
        });
    }

    /// Average conjugate pairs so that coeffs(-ξ) = conj(coeffs(ξ)) exactly.
    pub fn symmetrize(&mut self) {
        let grid = self.grid;
        for flat in 0..self.coeffs.len() {
            let partner = grid.conj_index(flat);
            if partner == flat {
                self.coeffs[flat].im = 0.0;
            } else if partner > flat {
                let avg = 0.5 * (self.coeffs[flat] + self.coeffs[partner].conj());
                self.coeffs[flat] = avg;
                self.coeffs[partner] = avg.conj();
            }
        }
    }

    /// max_ξ |coeffs(-ξ) - conj(coeffs(ξ))|.
    pub fn hermitian_defect(&self) -> f64 {
        let grid = self.grid;
        let src = &self.coeffs;
        exec::max_terms(src.len(), |flat| {
            (src[grid.conj_index(flat)] - src[flat].conj()).norm()
        })
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }
}

/// n spectral components plus a divergence-free marker; houses u and b.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorField {
    components: Vec<SpectralField>,
    pub divergence_free: bool,
}

impl VectorField {
    pub fn zeros(grid: GridSpec) -> Self {
        let components = (0..grid.dim).map(|_| SpectralField::zeros(grid)).collect();
        VectorField { components, divergence_free: true }
    }

    pub fn new(components: Vec<SpectralField>, divergence_free: bool) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::GridMismatch("vector field needs components".into()));
        }
        let grid = components[0].grid();
        if components.len() != grid.dim || components.iter().any(|c| c.grid() != grid) {
            return Err(Error::GridMismatch(
                "component count and grids must match the field dimension".into(),
            ));
        }
        Ok(VectorField { components, divergence_free })
    }

    pub fn grid(&self) -> GridSpec {
        self.components[0].grid()
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn component(&self, i: usize) -> &SpectralField {
        &self.components[i]
    }

    pub fn component_mut(&mut self, i: usize) -> &mut SpectralField {
        &mut self.components[i]
    }

    pub fn components(&self) -> &[SpectralField] {
        &self.components
    }

    pub fn symmetrize(&mut self) {
        for c in &mut self.components {
            c.symmetrize();
        }
    }

    pub fn scale(&mut self, c: f64) {
        for comp in &mut self.components {
            comp.scale(c);
        }
    }

    /// self += c * other, componentwise.
    pub fn axpy(&mut self, c: f64, other: &VectorField) {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        for (a, b) in self.components.iter_mut().zip(&other.components) {
            a.axpy(c, b);
        }
    }

    pub fn is_finite(&self) -> bool {
        self.components.iter().all(SpectralField::is_finite)
    }

    /// Normalized divergence residual max_ξ |ξ·û(ξ)| / max(1, max_ξ |û(ξ)|).
    pub fn div_residual(&self) -> f64 {
        let grid = self.grid();
        let dim = self.dim();
        let comps: Vec<&[Complex64]> = self.components.iter().map(|c| c.coeffs()).collect();
        let max_div = exec::max_terms(grid.len(), |flat| {
            let xi = grid.xi(flat);
            let mut dot = Complex64::new(0.0, 0.0);
            for (i, c) in comps.iter().enumerate().take(dim) {
                dot += xi[i] * c[flat];
            }
            dot.norm()
        });
        let max_amp = exec::max_terms(grid.len(), |flat| {
            comps.iter().take(dim).map(|c| c[flat].norm_sqr()).sum::<f64>().sqrt()
        });
        max_div / max_amp.max(1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetrize_zeroes_defect() {
        let grid = GridSpec::new(2, 16).unwrap();
        let mut u = SpectralField::zeros(grid);
        u.set_mode(&[2, 3], Complex64::new(1.0, 0.5));
        u.set_mode(&[-2, -3], Complex64::new(0.2, 0.9));
        assert!(u.hermitian_defect() > 0.1);
        u.symmetrize();
        assert!(u.hermitian_defect() <= 1e-15);
        // Physical samples are now real.
        let phys = u.to_physical_complex();
        let max_im = phys.iter().map(|c| c.im.abs()).fold(0.0f64, f64::max);
        assert!(max_im <= 1e-12);
    }

    #[test]
    fn set_mode_pair_keeps_reality() {
        let grid = GridSpec::new(2, 16).unwrap();
        let mut u = SpectralField::zeros(grid);
        u.set_mode_pair(&[1, 4], Complex64::new(0.3, -0.7));
        assert_eq!(u.hermitian_defect(), 0.0);
    }

    #[test]
    fn nyquist_self_conjugate_mode_is_real_after_pair_set() {
        let grid = GridSpec::new(2, 8).unwrap();
        let mut u = SpectralField::zeros(grid);
        u.set_mode_pair(&[4, 0], Complex64::new(1.0, 2.0));
        assert_eq!(u.mode(&[4, 0]), Complex64::new(1.0, 0.0));
    }
}
