//! Constant-free Bernstein ratios for band-limited fields:
//! ‖Δ_j Λ^d u‖_{L^q} / (2^{dj} 2^{jn(1/p - 1/q)} ‖u‖_{L^p}).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::SpectralField;
use crate::norms;

use super::{phi_j, DyadicPartition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LebesgueExponent {
    Two,
    Infinity,
}

impl LebesgueExponent {
    fn reciprocal(self) -> f64 {
        match self {
            LebesgueExponent::Two => 0.5,
            LebesgueExponent::Infinity => 0.0,
        }
    }
}

/// Ratio for a field band-limited to shell j. The derivative order d scales
/// by the radial symbol |ξ|^d, so the support fact confines single-mode
/// ratios to [1/2, 2].
pub fn bernstein_ratio(
    part: &DyadicPartition,
    u: &SpectralField,
    j: i32,
    p: LebesgueExponent,
    q: LebesgueExponent,
    deriv_order: u32,
) -> Result<f64> {
    if p != LebesgueExponent::Two {
        return Err(Error::Parameter("only p = 2 is supported".into()));
    }
    if u.grid() != part.grid() {
        return Err(Error::GridMismatch("field grid differs from partition grid".into()));
    }
    let denom_norm = norms::l2(u);
    if denom_norm == 0.0 {
        return Err(Error::Degenerate("empty shell: zero L^p norm".into()));
    }
    let d = deriv_order as f64;
    let weighted = u.map_symbol(move |xi| {
        let r = (xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]).sqrt();
        let deriv = if r == 0.0 && d == 0.0 { 1.0 } else { r.powf(d) };
        Complex64::new(phi_j(j, r) * deriv, 0.0)
    });
    let numer = match q {
        LebesgueExponent::Two => norms::l2(&weighted),
        LebesgueExponent::Infinity => norms::linf(&weighted),
    };
    let n = u.grid().dim as f64;
    let scaling = (d * j as f64).exp2() * (j as f64 * n * (p.reciprocal() - q.reciprocal())).exp2();
    Ok(numer / (scaling * denom_norm))
}
