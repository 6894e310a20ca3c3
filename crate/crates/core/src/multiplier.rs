//! The dissipation operator with radial symbol m(ξ) = |ξ|^α / g(|ξ|).
//!
//! g ≥ 1 weakens the fractional dissipation logarithmically. Two families are
//! supported: g ≡ 1 and g(s) = (log(e + s))^γ.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{SpectralField, VectorField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GFamily {
    Unity,
    LogPower,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MultiplierSpec {
    /// Dissipation order α ≥ 0.
    pub alpha: f64,
    pub g_family: GFamily,
    /// Exponent γ ≥ 0 of the log_power family; ignored for unity.
    #[serde(default)]
    pub gamma: f64,
    /// Viscosity ν ≥ 0 (0 selects the inviscid diagnostic mode).
    pub nu: f64,
}

impl MultiplierSpec {
    pub fn new(alpha: f64, g_family: GFamily, gamma: f64, nu: f64) -> Result<Self> {
        let m = MultiplierSpec { alpha, g_family, gamma, nu };
        m.validate()?;
        Ok(m)
    }

    pub fn unity(alpha: f64, nu: f64) -> Result<Self> {
        Self::new(alpha, GFamily::Unity, 0.0, nu)
    }

    pub fn log_power(alpha: f64, gamma: f64, nu: f64) -> Result<Self> {
        Self::new(alpha, GFamily::LogPower, gamma, nu)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha >= 0.0) {
            return Err(Error::Parameter(format!("alpha must be >= 0, got {}", self.alpha)));
        }
        if !(self.gamma >= 0.0) {
            return Err(Error::Parameter(format!("gamma must be >= 0, got {}", self.gamma)));
        }
        if !(self.nu >= 0.0) {
            return Err(Error::Parameter(format!("nu must be >= 0, got {}", self.nu)));
        }
        // g >= 1 holds analytically for both families; spot-check by sampling.
        for i in 0..=64 {
            let s = if i == 0 { 0.0 } else { 10f64.powf(-3.0 + 9.0 * i as f64 / 64.0) };
            if self.g(s) < 1.0 - 1e-12 {
                return Err(Error::Parameter(format!("g({s}) = {} < 1", self.g(s))));
            }
        }
        Ok(())
    }

    /// g(s) ≥ 1 for s ≥ 0.
    #[inline]
    pub fn g(&self, s: f64) -> f64 {
        match self.g_family {
            GFamily::Unity => 1.0,
            GFamily::LogPower => {
                if self.gamma == 0.0 {
                    1.0
                } else {
                    (std::f64::consts::E + s).ln().powf(self.gamma)
                }
            }
        }
    }

    /// Radial symbol m(r) = r^α / g(r); m(0) = 0 whenever α > 0.
    #[inline]
    pub fn symbol(&self, r: f64) -> f64 {
        if r == 0.0 && self.alpha > 0.0 {
            return 0.0;
        }
        r.powf(self.alpha) / self.g(r)
    }

    #[inline]
    fn symbol_pow(&self, r: f64, power: f64) -> f64 {
        let s = self.symbol(r);
        if power == 1.0 {
            s
        } else if power == 2.0 {
            s * s
        } else if s == 0.0 && power <= 0.0 {
            // 0^0 := 1 by convention; negative powers of a vanishing symbol
            // are annihilated rather than propagating infinities.
            if power == 0.0 {
                1.0
            } else {
                0.0
            }
        } else {
            s.powf(power)
        }
    }

    /// Apply 𝓛^power: scale û(ξ) by (|ξ|^α/g(|ξ|))^power.
    pub fn apply(&self, u: &SpectralField, power: f64) -> SpectralField {
        u.map_symbol(|xi| {
            let r = (xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]).sqrt();
            Complex64::new(self.symbol_pow(r, power), 0.0)
        })
    }

    pub fn apply_vec(&self, v: &VectorField, power: f64) -> VectorField {
        let comps = v.components().iter().map(|c| self.apply(c, power)).collect();
        VectorField::new(comps, v.divergence_free).expect("component grids match")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridSpec;

    #[test]
    fn symbol_is_identity_on_unit_circle_for_unity_g() {
        // |ξ|^α = 1 at |ξ| = 1 regardless of α, so 𝓛 sin(x0) = sin(x0).
        let grid = GridSpec::new(2, 32).unwrap();
        let m = MultiplierSpec::unity(2.0, 1.0).unwrap();
        let mut u = SpectralField::zeros(grid);
        // sin(x0) = (e^{ix0} - e^{-ix0})/(2i): û(1,0) = -iπ, û(-1,0) = iπ.
        u.set_mode_pair(&[1, 0], Complex64::new(0.0, -std::f64::consts::PI));
        let lu = m.apply(&u, 1.0);
        for (a, b) in u.coeffs().iter().zip(lu.coeffs()) {
            assert!((a - b).norm() <= 1e-15);
        }
    }

    #[test]
    fn log_power_symbol_hand_value() {
        // Mode (3,4): |ξ| = 5, α = 2, γ = 1/2: scale = 25/sqrt(log(e+5)).
        let grid = GridSpec::new(2, 32).unwrap();
        let m = MultiplierSpec::log_power(2.0, 0.5, 1.0).unwrap();
        let mut u = SpectralField::zeros(grid);
        u.set_mode_pair(&[3, 4], Complex64::new(1.0, 0.0));
        let lu = m.apply(&u, 1.0);
        let got = lu.mode(&[3, 4]).re;
        assert!((got - 17.48811237477686).abs() <= 1e-10, "got {got}");
    }

    #[test]
    fn zero_mode_is_annihilated_for_positive_alpha() {
        let m = MultiplierSpec::log_power(2.0, 0.5, 1.0).unwrap();
        assert_eq!(m.symbol(0.0), 0.0);
        let m0 = MultiplierSpec::unity(0.0, 1.0).unwrap();
        assert_eq!(m0.symbol(0.0), 1.0);
    }

    #[test]
    fn composition_matches_squared_power() {
        let grid = GridSpec::new(2, 16).unwrap();
        let m = MultiplierSpec::log_power(1.5, 0.5, 1.0).unwrap();
        let mut u = SpectralField::zeros(grid);
        for (k, v) in [([1i64, 2], 0.7), ([5, -3], -0.2), ([0, 7], 1.3)] {
            u.set_mode_pair(&k, Complex64::new(v, 0.1 * v));
        }
        let twice = m.apply(&m.apply(&u, 1.0), 1.0);
        let squared = m.apply(&u, 2.0);
        for (a, b) in twice.coeffs().iter().zip(squared.coeffs()) {
            let denom = b.norm().max(1e-300);
            assert!((a - b).norm() / denom <= 1e-13);
        }
    }

    #[test]
    fn negative_parameters_rejected() {
        assert!(MultiplierSpec::new(-1.0, GFamily::Unity, 0.0, 1.0).is_err());
        assert!(MultiplierSpec::new(2.0, GFamily::LogPower, -0.5, 1.0).is_err());
        assert!(MultiplierSpec::new(2.0, GFamily::Unity, 0.0, -1.0).is_err());
    }
}
