//! Summary statistics over per-scale dimension series: mean, sample
//! standard deviation, and the Pearson correlation between two series.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum StatsError {
    #[error("series {label:?} needs at least 2 values, got {len}")]
    TooShort { label: String, len: usize },
    #[error("series {label:?} contains a non-finite value")]
    NonFinite { label: String },
    #[error("series lengths differ: {a} has {len_a}, {b} has {len_b}")]
    LengthMismatch { a: String, len_a: usize, b: String, len_b: usize },
    #[error("series {label:?} is constant; correlation undefined")]
    ZeroVariance { label: String },
}

/// A labeled column of per-scale dimension values, table row order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DimSeries {
    label: String,
    values: Vec<f64>,
}

impl DimSeries {
    pub fn new(label: impl Into<String>, values: Vec<f64>) -> Result<Self, StatsError> {
        let label = label.into();
        if values.len() < 2 {
            return Err(StatsError::TooShort { label, len: values.len() });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(StatsError::NonFinite { label });
        }
        Ok(Self { label, values })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesStats {
    pub mean: f64,
    pub sample_std: f64,
    pub n: usize,
}

/// Mean and sample (n-1) standard deviation.
pub fn summarize(s: &DimSeries) -> SeriesStats {
    let n = s.values.len();
    let mean = s.values.iter().sum::<f64>() / n as f64;
    let ss: f64 = s.values.iter().map(|v| (v - mean).powi(2)).sum();
    SeriesStats { mean, sample_std: (ss / (n - 1) as f64).sqrt(), n }
}

/// Pearson product-moment correlation of two equal-length series.
pub fn pearson(a: &DimSeries, b: &DimSeries) -> Result<f64, StatsError> {
    if a.values.len() != b.values.len() {
        return Err(StatsError::LengthMismatch {
            a: a.label.clone(),
            len_a: a.values.len(),
            b: b.label.clone(),
            len_b: b.values.len(),
        });
    }
    let n = a.values.len() as f64;
    let mean_a = a.values.iter().sum::<f64>() / n;
    let mean_b = b.values.iter().sum::<f64>() / n;
    let saa: f64 = a.values.iter().map(|v| (v - mean_a).powi(2)).sum();
    let sbb: f64 = b.values.iter().map(|v| (v - mean_b).powi(2)).sum();
    for (s, ss) in [(a, saa), (b, sbb)] {
        if ss == 0.0 {
            return Err(StatsError::ZeroVariance { label: s.label.clone() });
        }
    }
    let sab: f64 = a.values.iter().zip(&b.values).map(|(x, y)| (x - mean_a) * (y - mean_b)).sum();
    Ok(sab / (saa * sbb).sqrt())
}
