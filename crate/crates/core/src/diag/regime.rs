//! Dissipation-regime classifier. Decides, in closed form for the unity and
//! log-power families, which of three sufficient conditions for global
//! regularity hold:
//!
//! main:  α ≥ 1 + n/2 and g(s)² ≤ C log(e+s); for g = (log(e+s))^γ that is
//!        γ ≤ 1/2 (the resistivity-free regime, β = 0).
//! wu:    α ≥ 1/2 + n/4, β > 0, α + β ≥ 1 + n/2, and
//!        ∫ ds / (s (g₁² + g₂²)²) diverges; for the log-power family γ ≤ 1/4.
//! tao:   α ≥ 1/2 + n/4 and ∫ ds / (s g₁⁴) diverges; log-power γ ≤ 1/4.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiplier::GFamily;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RegimeReport {
    pub alpha: f64,
    pub beta: f64,
    pub g_family: GFamily,
    pub gamma: f64,
    pub n: usize,
    pub main_condition: bool,
    pub wu_condition: bool,
    pub tao_condition: bool,
}

/// True when ∫_1^∞ ds/(s (log(e+s))^p) = +∞, i.e. p ≤ 1.
fn log_integral_diverges(p: f64) -> bool {
    p <= 1.0
}

pub fn regime_classify(
    alpha: f64,
    beta: f64,
    g_family: GFamily,
    gamma: f64,
    n: usize,
) -> Result<RegimeReport> {
    if n != 2 && n != 3 {
        return Err(Error::Parameter(format!("n must be 2 or 3, got {n}")));
    }
    if !(gamma >= 0.0) {
        return Err(Error::Parameter(format!("gamma must be >= 0, got {gamma}")));
    }
    let half_n = n as f64 / 2.0;
    let quarter_n = n as f64 / 4.0;

    let g_log_condition = match g_family {
        // g ≡ 1: g² = 1 ≤ log(e+s) always.
        GFamily::Unity => true,
        // (log(e+s))^{2γ} ≤ C log(e+s) for all s iff 2γ ≤ 1.
        GFamily::LogPower => gamma <= 0.5,
    };
    let main_condition = alpha >= 1.0 + half_n && g_log_condition;

    // Both g factors are the same family here, so (g₁²+g₂²)² ~ (log)^{4γ}.
    let wu_integral = match g_family {
        GFamily::Unity => true,
        GFamily::LogPower => log_integral_diverges(4.0 * gamma),
    };
    let wu_condition = alpha >= 0.5 + quarter_n
        && beta > 0.0
        && alpha + beta >= 1.0 + half_n
        && wu_integral;

    let tao_integral = match g_family {
        GFamily::Unity => true,
        GFamily::LogPower => log_integral_diverges(4.0 * gamma),
    };
    let tao_condition = alpha >= 0.5 + quarter_n && tao_integral;

    Ok(RegimeReport { alpha, beta, g_family, gamma, n, main_condition, wu_condition, tao_condition })
}
