//! Closed-form exponent algebra of the H¹/H^k energy argument.
//!
//! For k > 1 + n/2 the interpolation index λ must sit in the window
//! n/2 · k/(k-1) < λ < 1 + n/2. The derived quantities are
//!
//!   a  = (λ - n/2)/(k + λ)
//!   2δ = min( ((k+λ)(k-1) - k(k-1+n/2)) / (k(k-1-n/2)),  (λ - n/2)/(k + λ) )
//!   A  = 2k(k-1-n/2) / ((k+λ)(k-1))
//!   B  = 2k(k-1+n/2) / ((k+λ)(k-1))   (< 2)
//!   C  = 2λ/(k+λ)                     (< 2)
//!
//! together with the L² interpolation exponents ξ(l) = (k-l)/(k-1),
//! η(m) = (k-m)/(k-1) and the high-mode exponent η = λ/k. The window makes
//! every invariant below hold: δ > 0, a ∈ (0,1), Aδ + B ≤ 2, and
//! (2/(1+a))(δ + 1) ≤ 2.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ExponentSet {
    pub k: u32,
    pub n: usize,
    pub lambda: f64,
    pub a: f64,
    pub delta: f64,
    #[serde(rename = "A")]
    pub big_a: f64,
    #[serde(rename = "B")]
    pub big_b: f64,
    #[serde(rename = "Cexp")]
    pub c_exp: f64,
}

impl ExponentSet {
    /// ξ(l) = (k - l)/(k - 1) for 1 ≤ l ≤ k.
    pub fn xi(&self, l: u32) -> f64 {
        (self.k as f64 - l as f64) / (self.k as f64 - 1.0)
    }

    /// η(m) = (k - m)/(k - 1) for 1 ≤ m ≤ k.
    pub fn eta(&self, m: u32) -> f64 {
        self.xi(m)
    }

    /// High-mode interpolation exponent η = λ/k.
    pub fn eta_lambda(&self) -> f64 {
        self.lambda / self.k as f64
    }
}

/// Open admissible window (n/2 · k/(k-1), 1 + n/2) for λ.
pub fn lambda_window(k: u32, n: usize) -> Result<(f64, f64)> {
    let kf = k as f64;
    let half_n = n as f64 / 2.0;
    if n != 2 && n != 3 {
        return Err(Error::Parameter(format!("n must be 2 or 3, got {n}")));
    }
    if kf <= 1.0 + half_n {
        return Err(Error::Parameter(format!("k must exceed 1 + n/2 = {}, got {k}", 1.0 + half_n)));
    }
    let lo = half_n * kf / (kf - 1.0);
    let hi = 1.0 + half_n;
    if lo >= hi {
        return Err(Error::Parameter(format!(
            "empty lambda window for k = {k}, n = {n}: ({lo}, {hi})"
        )));
    }
    Ok((lo, hi))
}

pub fn exponents(k: u32, n: usize, lambda: f64) -> Result<ExponentSet> {
    let (lo, hi) = lambda_window(k, n)?;
    if lambda <= lo {
        return Err(Error::Parameter(format!("lambda <= n/2 * k/(k-1) = {lo}, got {lambda}")));
    }
    if lambda >= hi {
        return Err(Error::Parameter(format!("lambda >= 1 + n/2 = {hi}, got {lambda}")));
    }
    let kf = k as f64;
    let half_n = n as f64 / 2.0;
    let a = (lambda - half_n) / (kf + lambda);
    let bracket1 = ((kf + lambda) * (kf - 1.0) - kf * (kf - 1.0 + half_n)) / (kf * (kf - 1.0 - half_n));
    let bracket2 = (lambda - half_n) / (kf + lambda);
    let two_delta = bracket1.min(bracket2);
    let delta = 0.5 * two_delta;
    let big_a = 2.0 * kf * (kf - 1.0 - half_n) / ((kf + lambda) * (kf - 1.0));
    let big_b = 2.0 * kf * (kf - 1.0 + half_n) / ((kf + lambda) * (kf - 1.0));
    let c_exp = 2.0 * lambda / (kf + lambda);

    let set = ExponentSet { k, n, lambda, a, delta, big_a, big_b, c_exp };
    debug_assert!(set.delta > 0.0);
    debug_assert!(set.a > 0.0 && set.a < 1.0);
    debug_assert!(set.big_b < 2.0 && set.c_exp < 2.0);
    debug_assert!(set.big_a * set.delta + set.big_b <= 2.0);
    debug_assert!((2.0 / (1.0 + set.a)) * (set.delta + 1.0) <= 2.0);
    Ok(set)
}
