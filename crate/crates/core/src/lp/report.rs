//! Constant-free inequality reports. The unknown constants of the continuum
//! inequalities are never estimated; instead ratios are tracked across scale
//! doublings and flagged as growing when the log-log slope exceeds 0.1.

use serde::{Deserialize, Serialize};

/// Least-squares slope of y against x.
pub fn log2_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    if points.len() < 2 {
        return 0.0;
    }
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (x, y) in points {
        num += (x - mx) * (y - my);
        den += (x - mx) * (x - mx);
    }
    if den == 0.0 {
        0.0
    } else {
        num / den
    }
}

pub const DOUBLING_SLOPE_LIMIT: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Bounded,
    Growing,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BandStat {
    /// log2 position of the band (shell index or log2 bandwidth).
    pub band: i64,
    pub ratio_max: f64,
    pub ratio_mean: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InequalityReport {
    pub family_id: String,
    pub samples: usize,
    pub ratio_max: f64,
    pub ratio_mean: f64,
    pub per_band: Vec<BandStat>,
    pub slope: f64,
    pub verdict: Verdict,
}

impl InequalityReport {
    /// Build a report from per-band sample ratios; bands keyed by their log2
    /// position.
    pub fn from_band_ratios(family_id: &str, bands: &[(i64, Vec<f64>)]) -> Self {
        let mut per_band = Vec::with_capacity(bands.len());
        let mut all = Vec::new();
        for (band, ratios) in bands {
            let max = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let mean = ratios.iter().sum::<f64>() / ratios.len().max(1) as f64;
            per_band.push(BandStat { band: *band, ratio_max: max, ratio_mean: mean });
            all.extend_from_slice(ratios);
        }
        let points: Vec<(f64, f64)> =
            per_band.iter().map(|b| (b.band as f64, b.ratio_max.log2())).collect();
        let slope = log2_slope(&points);
        let ratio_max = all.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let ratio_mean = all.iter().sum::<f64>() / all.len().max(1) as f64;
        let verdict = if slope <= DOUBLING_SLOPE_LIMIT { Verdict::Bounded } else { Verdict::Growing };
        InequalityReport {
            family_id: family_id.to_string(),
            samples: all.len(),
            ratio_max,
            ratio_mean,
            per_band,
            slope,
            verdict,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_flat_series_is_zero() {
        let pts: Vec<(f64, f64)> = (0..5).map(|i| (i as f64, 3.0)).collect();
        assert_eq!(log2_slope(&pts), 0.0);
    }

    #[test]
    fn growing_ratios_are_flagged() {
        let bands: Vec<(i64, Vec<f64>)> =
            (2..6).map(|j| (j, vec![(j as f64).exp2()])).collect();
        let rep = InequalityReport::from_band_ratios("test", &bands);
        assert_eq!(rep.verdict, Verdict::Growing);
        assert!((rep.slope - 1.0).abs() < 1e-12);
        assert!(rep.ratio_max >= rep.ratio_mean && rep.ratio_mean >= 0.0);
    }

    #[test]
    fn decaying_ratios_are_bounded() {
        let bands: Vec<(i64, Vec<f64>)> =
            (2..6).map(|j| (j, vec![(-(j as f64)).exp2(), (-(j as f64)).exp2() * 0.5])).collect();
        let rep = InequalityReport::from_band_ratios("test", &bands);
        assert_eq!(rep.verdict, Verdict::Bounded);
    }
}
