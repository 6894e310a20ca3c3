//! Littlewood-Paley dyadic decomposition on the wavenumber lattice.
//!
//! The radial profile is built by telescoping a smooth cutoff χ based on the
//! exp(-1/t) transition: φ̂(r) = χ(r) - χ(2r). Then supp φ̂ ⊆ [1/2, 2],
//! φ̂ > 0 on (1/2, 2), 0 ≤ φ̂ ≤ 1, and Σ_j φ̂(2^{-j} r) = 1 for r > 0 by
//! construction, so the dyadic sum needs no numerical normalization.
//!
//! Block operators: Δ_j has symbol φ̂(2^{-j}|ξ|) and the low-pass S_k has
//! symbol 1 - Σ_{j≥k+1} φ̂_j = χ(2^{-k}|ξ|).

mod bernstein;
mod gn;
mod lemma1;
mod report;

pub use bernstein::{bernstein_ratio, LebesgueExponent};
pub use gn::{gn_ratio, GnKind};
pub use lemma1::{lemma1_bound, Lemma1Report};
pub use report::{log2_slope, BandStat, InequalityReport, Verdict};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exec;
use crate::field::SpectralField;
use crate::grid::GridSpec;

fn bump(t: f64) -> f64 {
    if t <= 0.0 {
        0.0
    } else {
        (-1.0 / t).exp()
    }
}

/// C^∞ step: 0 for t ≤ 0, 1 for t ≥ 1, strictly increasing in between.
fn smooth_step(t: f64) -> f64 {
    let a = bump(t);
    let b = bump(1.0 - t);
    a / (a + b)
}

/// Smooth cutoff: 1 for r ≤ 1, 0 for r ≥ 2.
pub fn chi(r: f64) -> f64 {
    1.0 - smooth_step(r - 1.0)
}

/// Radial bump φ̂(r) = χ(r) - χ(2r): supported in [1/2, 2], equal to 1 at r = 1.
pub fn profile(r: f64) -> f64 {
    chi(r) - chi(2.0 * r)
}

/// φ̂_j(ξ) evaluated at radius r: φ̂(2^{-j} r).
#[inline]
pub fn phi_j(j: i32, r: f64) -> f64 {
    profile(r * (-j as f64).exp2())
}

/// Low-pass symbol of S_k at radius r: χ(2^{-k} r).
#[inline]
pub fn lowpass_symbol(k: i32, r: f64) -> f64 {
    chi(r * (-k as f64).exp2())
}

/// Dyadic partition over bands jmin..=jmax on a grid. The partition-of-unity
/// window is 2^{jmin} ≤ |ξ| ≤ 2^{jmax}; blocks themselves are defined for
/// every j.
#[derive(Debug, Clone, Copy)]
pub struct DyadicPartition {
    grid: GridSpec,
    jmin: i32,
    jmax: i32,
}

impl DyadicPartition {
    pub fn new(grid: GridSpec, jmin: i32, jmax: i32) -> Result<Self> {
        grid.validate()?;
        if jmin > 0 || jmax < 0 {
            return Err(Error::Config(format!("need jmin <= 0 <= jmax, got [{jmin}, {jmax}]")));
        }
        let half = grid.points_per_axis as f64 / 2.0;
        if (jmax as f64).exp2() > half {
            return Err(Error::Config(format!(
                "2^jmax = {} exceeds N/2 = {half}",
                (jmax as f64).exp2()
            )));
        }
        Ok(DyadicPartition { grid, jmin, jmax })
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn jmin(&self) -> i32 {
        self.jmin
    }

    pub fn jmax(&self) -> i32 {
        self.jmax
    }

    /// Smallest J such that blocks j ≤ J cover the whole lattice.
    pub fn cover_jmax(grid: GridSpec) -> i32 {
        grid.max_xi_norm().log2().ceil() as i32 + 1
    }

    /// Max lattice defect |1 - Σ_{j∈[jmin,jmax]} φ̂_j(ξ)| over rmin ≤ |ξ| ≤ rmax.
    pub fn partition_defect(&self, rmin: f64, rmax: f64) -> f64 {
        let (jmin, jmax) = (self.jmin, self.jmax);
        let grid = self.grid;
        exec::max_terms(grid.len(), |flat| {
            let r = grid.xi_norm(flat);
            if r < rmin || r > rmax {
                return 0.0;
            }
            let sum: f64 = (jmin..=jmax).map(|j| phi_j(j, r)).sum();
            (1.0 - sum).abs()
        })
    }

    /// Dyadic block Δ_j u.
    pub fn block(&self, u: &SpectralField, j: i32) -> SpectralField {
        u.map_symbol(move |xi| {
            let r = (xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]).sqrt();
            Complex64::new(phi_j(j, r), 0.0)
        })
    }

    /// Low-pass S_k u.
    pub fn lowpass(&self, u: &SpectralField, k: i32) -> SpectralField {
        u.map_symbol(move |xi| {
            let r = (xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]).sqrt();
            Complex64::new(lowpass_symbol(k, r), 0.0)
        })
    }
}

/// Pick s_j ∈ (2^{j-1}, 2^{j+1}) with g(s_j) ≥ ½ sup g over the interval,
/// by sampling 64 log-spaced points.
pub fn select_g_peak<G>(g: G, j: i32) -> f64
where
    G: Fn(f64) -> f64,
{
    const SAMPLES: usize = 64;
    let lo = (j as f64 - 1.0).exp2();
    let hi = (j as f64 + 1.0).exp2();
    // Keep strictly inside the open interval.
    let margin = 1.0 / 256.0;
    let llo = lo.ln() + margin;
    let lhi = hi.ln() - margin;
    let mut best_s = (j as f64).exp2();
    let mut best_g = f64::NEG_INFINITY;
    for i in 0..SAMPLES {
        let s = (llo + (lhi - llo) * i as f64 / (SAMPLES - 1) as f64).exp();
        let v = g(s);
        if v > best_g {
            best_g = v;
            best_s = s;
        }
    }
    best_s
}

/// s_j selection for a multiplier g family; unity returns 2^j directly.
pub fn sj_select(m: &crate::multiplier::MultiplierSpec, j: i32) -> f64 {
    match m.g_family {
        crate::multiplier::GFamily::Unity => (j as f64).exp2(),
        crate::multiplier::GFamily::LogPower => select_g_peak(|s| m.g(s), j),
    }
}
