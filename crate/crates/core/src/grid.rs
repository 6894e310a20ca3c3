//! Periodic grids on the torus [0, 2π)^n with unit-spaced integer wavenumbers.
//!
//! The wavenumber lattice along each axis is ℤ truncated to (-N/2, N/2] in FFT
//! ordering: index i maps to i for i ≤ N/2 and to i - N otherwise.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const TAU: f64 = std::f64::consts::TAU;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    /// Spatial dimension, 2 or 3.
    pub dim: usize,
    /// Points per axis; a power of two, at least 8.
    pub points_per_axis: usize,
}

impl GridSpec {
    pub fn new(dim: usize, points_per_axis: usize) -> Result<Self> {
        let g = GridSpec { dim, points_per_axis };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim != 2 && self.dim != 3 {
            return Err(Error::Config(format!("dim must be 2 or 3, got {}", self.dim)));
        }
        let n = self.points_per_axis;
        if n < 8 || !n.is_power_of_two() {
            return Err(Error::Config(format!(
                "points_per_axis must be a power of two >= 8, got {n}"
            )));
        }
        Ok(())
    }

    /// Total number of lattice points, N^dim.
    pub fn len(&self) -> usize {
        self.points_per_axis.pow(self.dim as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Grid spacing h = 2π/N.
    pub fn spacing(&self) -> f64 {
        TAU / self.points_per_axis as f64
    }

    /// Wavenumber for axis index i in FFT ordering.
    #[inline]
    pub fn wavenumber(&self, i: usize) -> f64 {
        let n = self.points_per_axis;
        if i <= n / 2 {
            i as f64
        } else {
            i as f64 - n as f64
        }
    }

    /// Wavevector of the flat lattice index, zero-padded to three entries.
    #[inline]
    pub fn xi(&self, flat: usize) -> [f64; 3] {
        let n = self.points_per_axis;
        match self.dim {
            2 => {
                let i1 = flat % n;
                let i0 = flat / n;
                [self.wavenumber(i0), self.wavenumber(i1), 0.0]
            }
            3 => {
                let i2 = flat % n;
                let r = flat / n;
                let i1 = r % n;
                let i0 = r / n;
                [self.wavenumber(i0), self.wavenumber(i1), self.wavenumber(i2)]
            }
            _ => unreachable!("validated dim"),
        }
    }

    #[inline]
    pub fn xi_norm_sq(&self, flat: usize) -> f64 {
        let x = self.xi(flat);
        x[0] * x[0] + x[1] * x[1] + x[2] * x[2]
    }

    #[inline]
    pub fn xi_norm(&self, flat: usize) -> f64 {
        self.xi_norm_sq(flat).sqrt()
    }

    /// Flat index of a signed mode vector (entries wrapped modulo N).
    pub fn flat_index(&self, modes: &[i64]) -> usize {
        assert_eq!(modes.len(), self.dim, "mode vector length must match dim");
        let n = self.points_per_axis as i64;
        let mut flat = 0usize;
        for &m in modes {
            let i = m.rem_euclid(n) as usize;
            flat = flat * self.points_per_axis + i;
        }
        flat
    }

    /// Flat index of -ξ for the given flat index of ξ.
    pub fn conj_index(&self, flat: usize) -> usize {
        let n = self.points_per_axis;
        match self.dim {
            2 => {
                let i1 = flat % n;
                let i0 = flat / n;
                ((n - i0) % n) * n + (n - i1) % n
            }
            3 => {
                let i2 = flat % n;
                let r = flat / n;
                let i1 = r % n;
                let i0 = r / n;
                (((n - i0) % n) * n + (n - i1) % n) * n + (n - i2) % n
            }
            _ => unreachable!("validated dim"),
        }
    }

    /// Largest |ξ| on the lattice, √dim · N/2.
    pub fn max_xi_norm(&self) -> f64 {
        (self.dim as f64).sqrt() * self.points_per_axis as f64 / 2.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_grids() {
        assert!(GridSpec::new(1, 16).is_err());
        assert!(GridSpec::new(2, 48).is_err());
        assert!(GridSpec::new(2, 4).is_err());
        assert!(GridSpec::new(3, 16).is_ok());
    }

    #[test]
    fn fft_ordering_covers_half_open_band() {
        let g = GridSpec::new(2, 8).unwrap();
        let ks: Vec<f64> = (0..8).map(|i| g.wavenumber(i)).collect();
        assert_eq!(ks, vec![0.0, 1.0, 2.0, 3.0, 4.0, -3.0, -2.0, -1.0]);
    }

    #[test]
    fn conj_index_is_involutive() {
        let g = GridSpec::new(3, 8).unwrap();
        for flat in 0..g.len() {
            let c = g.conj_index(flat);
            assert_eq!(g.conj_index(c), flat);
            let a = g.xi(flat);
            let b = g.xi(c);
            for d in 0..3 {
                // -N/2 is its own conjugate representative (maps to +N/2).
                if a[d].abs() != (g.points_per_axis / 2) as f64 {
                    assert_eq!(a[d], -b[d]);
                }
            }
        }
    }

    #[test]
    fn flat_index_roundtrip() {
        let g = GridSpec::new(2, 16).unwrap();
        let flat = g.flat_index(&[-3, 5]);
        assert_eq!(g.xi(flat), [-3.0, 5.0, 0.0]);
    }
}
