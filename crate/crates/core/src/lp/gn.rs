//! Constant-free Gagliardo-Nirenberg interpolation ratios. Four forms are
//! checked, matching the trilinear-term estimates of the H^k energy argument:
//!
//!   sup-interp:  ‖Λ^k u‖_{L^∞} vs ‖u‖_{L²}^a ‖Λ^{k+λ}u‖_{L²}^{1-a},  a = (λ-n/2)/(k+λ)
//!   deriv-L²:    ‖Λ^l u‖_{L²} vs ‖Λu‖_{L²}^ξ ‖Λ^k u‖_{L²}^{1-ξ},     ξ = (k-l)/(k-1)
//!   grad-inf:    ‖∇u‖_{L^∞} vs ‖Λu‖_{L²}^ξ ‖Λ^k u‖_{L²}^{1-ξ},       ξ = (k-1-n/2)/(k-1)
//!   high-mode:   ‖Λ^k u‖_{L²} vs ‖Λ^λ u‖_{L²}^η ‖Λ^{k+λ}u‖_{L²}^{1-η}, η = λ/k

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::SpectralField;
use crate::norms;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GnKind {
    SupInterp,
    /// The ξ/η forms for ‖∂^l b‖ and ‖∂^m b‖ share this shape; `order` is l or m.
    DerivL2 {
        order: u32,
    },
    GradInf,
    HighMode,
}

fn radial_power(u: &SpectralField, s: f64) -> SpectralField {
    u.map_symbol(move |xi| {
        let r = (xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]).sqrt();
        let w = if r == 0.0 && s == 0.0 { 1.0 } else { r.powf(s) };
        Complex64::new(w, 0.0)
    })
}

/// LHS / RHS with the interpolation exponents; the unknown constant dropped.
pub fn gn_ratio(u: &SpectralField, kind: GnKind, k: u32, lambda: f64) -> Result<f64> {
    let n2 = u.grid().dim as f64 / 2.0;
    let kf = k as f64;
    let (lhs, rhs) = match kind {
        GnKind::SupInterp => {
            if lambda <= n2 {
                return Err(Error::Parameter(format!(
                    "sup interpolation needs lambda > n/2 = {n2}, got {lambda}"
                )));
            }
            let a = (lambda - n2) / (kf + lambda);
            let lhs = norms::linf(&radial_power(u, kf));
            let rhs = norms::l2(u).powf(a) * norms::hom(u, kf + lambda).powf(1.0 - a);
            (lhs, rhs)
        }
        GnKind::DerivL2 { order } => {
            if order < 1 || order > k || k < 2 {
                return Err(Error::Parameter(format!(
                    "derivative order must satisfy 1 <= l <= k with k >= 2, got l = {order}, k = {k}"
                )));
            }
            let xi = (kf - order as f64) / (kf - 1.0);
            let lhs = norms::hom(u, order as f64);
            let rhs = norms::hom(u, 1.0).powf(xi) * norms::hom(u, kf).powf(1.0 - xi);
            (lhs, rhs)
        }
        GnKind::GradInf => {
            if kf <= 1.0 + n2 {
                return Err(Error::Parameter(format!(
                    "gradient interpolation needs k > 1 + n/2 = {}, got {k}",
                    1.0 + n2
                )));
            }
            let xi = (kf - 1.0 - n2) / (kf - 1.0);
            let lhs = norms::grad_linf(u);
            let rhs = norms::hom(u, 1.0).powf(xi) * norms::hom(u, kf).powf(1.0 - xi);
            (lhs, rhs)
        }
        GnKind::HighMode => {
            if lambda <= 0.0 || lambda >= kf {
                return Err(Error::Parameter(format!(
                    "high-mode interpolation needs 0 < lambda < k = {k}, got {lambda}"
                )));
            }
            let eta = lambda / kf;
            let lhs = norms::hom(u, kf);
            let rhs = norms::hom(u, lambda).powf(eta) * norms::hom(u, kf + lambda).powf(1.0 - eta);
            (lhs, rhs)
        }
    };
    if rhs == 0.0 {
        return Err(Error::Degenerate("zero field: interpolation denominator vanishes".into()));
    }
    Ok(lhs / rhs)
}
