//! Norms used throughout: Plancherel L², collocation L^∞, inhomogeneous
//! Sobolev H^s in the Bessel-potential convention (1+|ξ|²)^{s/2}, homogeneous
//! |ξ|^s norms, and the dissipation norm ‖𝓛u‖_{L²}.

use num_complex::Complex64;

use crate::exec;
use crate::field::{SpectralField, VectorField};
use crate::multiplier::MultiplierSpec;

/// Plancherel norm: (Σ_ξ |û|²)^{1/2}, equal to the physical L² integral norm.
pub fn l2(u: &SpectralField) -> f64 {
    let c = u.coeffs();
    exec::sum_terms(c.len(), |i| c[i].norm_sqr()).sqrt()
}

/// Collocation maximum of |u| over the grid (real part of the samples).
pub fn linf(u: &SpectralField) -> f64 {
    let phys = u.to_physical();
    exec::max_terms(phys.len(), |i| phys[i].abs())
}

/// Inhomogeneous H^s norm (Σ (1+|ξ|²)^s |û|²)^{1/2}.
pub fn hk(u: &SpectralField, s: f64) -> f64 {
    let grid = u.grid();
    let c = u.coeffs();
    exec::sum_terms(c.len(), |i| (1.0 + grid.xi_norm_sq(i)).powf(s) * c[i].norm_sqr()).sqrt()
}

/// Homogeneous norm (Σ |ξ|^{2s} |û|²)^{1/2}; the ξ = 0 term uses 0^0 = 1 at s = 0.
pub fn hom(u: &SpectralField, s: f64) -> f64 {
    let grid = u.grid();
    let c = u.coeffs();
    exec::sum_terms(c.len(), |i| {
        let r2 = grid.xi_norm_sq(i);
        if r2 == 0.0 && s == 0.0 {
            c[i].norm_sqr()
        } else {
            r2.powf(s) * c[i].norm_sqr()
        }
    })
    .sqrt()
}

/// Dissipation norm ‖𝓛u‖_{L²}, routed through the multiplier application.
pub fn dissipation(u: &SpectralField, m: &MultiplierSpec) -> f64 {
    l2(&m.apply(u, 1.0))
}

/// Real L² inner product Re Σ_ξ û(ξ) conj(v̂(ξ)).
pub fn inner(u: &SpectralField, v: &SpectralField) -> f64 {
    let (a, b) = (u.coeffs(), v.coeffs());
    exec::sum_terms(a.len(), |i| (a[i] * b[i].conj()).re)
}

/// Collocation sup of the gradient magnitude |∇u| of a scalar field.
pub fn grad_linf(u: &SpectralField) -> f64 {
    weighted_grad_sup(u, |_| 1.0)
}

/// sup_x |∇(Wu)(x)| where W is a radial Fourier weight. Shared by the
/// dyadic-block estimates.
pub fn weighted_grad_sup<F>(u: &SpectralField, weight: F) -> f64
where
    F: Fn(f64) -> f64 + Sync,
{
    let grid = u.grid();
    let mut sumsq = vec![0.0f64; grid.len()];
    for axis in 0..grid.dim {
        let deriv = u.map_symbol(|xi| {
            let r = (xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]).sqrt();
            Complex64::new(0.0, xi[axis] * weight(r))
        });
        let phys = deriv.to_physical();
        exec::for_each_chunk_mut(&mut sumsq, exec::CHUNK, |ci, chunk| {
            let base = ci * exec::CHUNK;
            for (off, s) in chunk.iter_mut().enumerate() {
                let x = phys[base + off];
                *s += x * x;
            }
        });
    }
    exec::max_terms(sumsq.len(), |i| sumsq[i]).sqrt()
}

pub fn vec_l2(v: &VectorField) -> f64 {
    v.components().iter().map(|c| l2(c).powi(2)).sum::<f64>().sqrt()
}

pub fn vec_hk(v: &VectorField, s: f64) -> f64 {
    v.components().iter().map(|c| hk(c, s).powi(2)).sum::<f64>().sqrt()
}

pub fn vec_dissipation(v: &VectorField, m: &MultiplierSpec) -> f64 {
    v.components().iter().map(|c| dissipation(c, m).powi(2)).sum::<f64>().sqrt()
}

/// Collocation sup of the pointwise vector magnitude.
pub fn vec_linf(v: &VectorField) -> f64 {
    let grid = v.grid();
    let phys: Vec<Vec<f64>> = v.components().iter().map(|c| c.to_physical()).collect();
    exec::max_terms(grid.len(), |i| {
        phys.iter().map(|p| p[i] * p[i]).sum::<f64>().sqrt()
    })
}

/// Collocation sup of the Jacobian Frobenius norm |∇v|.
pub fn vec_grad_linf(v: &VectorField) -> f64 {
    let grid = v.grid();
    let mut sumsq = vec![0.0f64; grid.len()];
    for comp in v.components() {
        for axis in 0..grid.dim {
            let deriv = comp.map_symbol(|xi| Complex64::new(0.0, xi[axis]));
            let phys = deriv.to_physical();
            exec::for_each_chunk_mut(&mut sumsq, exec::CHUNK, |ci, chunk| {
                let base = ci * exec::CHUNK;
                for (off, s) in chunk.iter_mut().enumerate() {
                    let x = phys[base + off];
                    *s += x * x;
                }
            });
        }
    }
    exec::max_terms(sumsq.len(), |i| sumsq[i]).sqrt()
}

/// Lattice certificate constant for ‖u‖_{H^{m+λ}} ≤ C (‖u‖_{L²} + ‖𝓛Λ^m u‖_{L²}):
/// C = max over the lattice of (1+|ξ|²)^{(m+λ)/2} / (1 + |ξ|^m m(|ξ|)).
/// This is a lattice-dependent certificate, not the continuum constant.
pub fn norm_equivalence_certificate(
    grid: crate::grid::GridSpec,
    mult: &MultiplierSpec,
    lambda: f64,
    m_order: f64,
) -> f64 {
    exec::max_terms(grid.len(), |flat| {
        let r2 = grid.xi_norm_sq(flat);
        let r = r2.sqrt();
        let numer = (1.0 + r2).powf((m_order + lambda) / 2.0);
        let hom_m = if r == 0.0 && m_order == 0.0 { 1.0 } else { r.powf(m_order) };
        numer / (1.0 + hom_m * mult.symbol(r))
    })
}
