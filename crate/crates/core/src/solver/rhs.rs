//! Pseudo-spectral quadratic terms in convective form:
//!
//!   du = P[ -(u·∇)u + (b·∇)b ],   db = -(u·∇)b + (b·∇)u,
//!
//! with P the Leray projection. Inputs are truncated by the 2/3 rule before
//! the physical-space products and the transformed products truncated again,
//! so retained modes carry the exact convolution. db is divergence-free
//! identically (the two divergence contributions cancel term by term), so
//! only du needs the projection.

use num_complex::Complex64;

use super::State;
use crate::dealias;
use crate::error::{Error, Result};
use crate::exec;
use crate::field::{SpectralField, VectorField};
use crate::leray::leray_project;

fn gradients(v: &VectorField, use_dealias: bool) -> Result<(Vec<Vec<f64>>, Vec<Vec<Vec<f64>>>)> {
    let grid = v.grid();
    let dim = grid.dim;
    let mut phys = Vec::with_capacity(dim);
    let mut grads = Vec::with_capacity(dim);
    for i in 0..dim {
        let comp = if use_dealias {
            dealias::dealiased(v.component(i))
        } else {
            v.component(i).clone()
        };
        phys.push(comp.to_physical());
        let mut comp_grads = Vec::with_capacity(dim);
        for axis in 0..dim {
            let d = comp.map_symbol(|xi| Complex64::new(0.0, xi[axis]));
            comp_grads.push(d.to_physical());
        }
        grads.push(comp_grads);
    }
    Ok((phys, grads))
}

/// Advection tendencies (du, db) of the current state.
pub fn nonlinear_rhs(state: &State, use_dealias: bool) -> Result<(VectorField, VectorField)> {
    let grid = state.grid();
    let dim = grid.dim;
    let (u_phys, gu) = gradients(&state.u, use_dealias)?;
    let (b_phys, gb) = gradients(&state.b, use_dealias)?;

    let mut du_comps = Vec::with_capacity(dim);
    let mut db_comps = Vec::with_capacity(dim);
    for i in 0..dim {
        // Pairwise differences per advecting component: cancels exactly when
        // u == b (the aligned Elsässer case).
        let du_i: Vec<f64> = exec::map_indexed(grid.len(), |x| {
            let mut acc = 0.0;
            for j in 0..dim {
                acc += b_phys[j][x] * gb[i][j][x] - u_phys[j][x] * gu[i][j][x];
            }
            acc
        });
        let db_i: Vec<f64> = exec::map_indexed(grid.len(), |x| {
            let mut acc = 0.0;
            for j in 0..dim {
                acc += b_phys[j][x] * gu[i][j][x] - u_phys[j][x] * gb[i][j][x];
            }
            acc
        });
        let mut du_hat = SpectralField::from_physical(grid, &du_i)?;
        let mut db_hat = SpectralField::from_physical(grid, &db_i)?;
        if use_dealias {
            dealias::apply(&mut du_hat);
            dealias::apply(&mut db_hat);
        }
        du_hat.symmetrize();
        db_hat.symmetrize();
        du_comps.push(du_hat);
        db_comps.push(db_hat);
    }

    let du = leray_project(&VectorField::new(du_comps, false)?);
    let db = VectorField::new(db_comps, true)?;
    if !du.is_finite() || !db.is_finite() {
        return Err(Error::BlowUp { t: state.t });
    }
    Ok((du, db))
}
