//! Shared domain types: the sampling grid, time series, seeded uniform fields,
//! one-sided spectra, and power-law fit results.
//!
//! Every type validates its invariants at construction and is immutable
//! afterwards, so instances are safe to share across threads.

use serde::Serialize;

use crate::error::{ensure_finite, CoreError, Result};

/// Sample rate and record length; the time grid every series shares.
///
/// Defaults used by the batch presets are 100 Hz and, per experiment, a record
/// long enough to resolve the band under test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SamplingSpec {
    sample_rate_hz: f64,
    num_samples: usize,
}

impl SamplingSpec {
    pub fn new(sample_rate_hz: f64, num_samples: usize) -> Result<Self> {
        ensure_finite(sample_rate_hz, "sample_rate_hz")?;
        if sample_rate_hz <= 0.0 {
            return Err(CoreError::InvalidParameter {
                name: "sample_rate_hz",
                reason: format!("must be > 0, got {sample_rate_hz}"),
            });
        }
        if num_samples < 2 {
            return Err(CoreError::InvalidParameter {
                name: "num_samples",
                reason: format!("must be >= 2, got {num_samples}"),
            });
        }
        Ok(Self {
            sample_rate_hz,
            num_samples,
        })
    }

    pub fn sample_rate_hz(&self) -> f64 {
        self.sample_rate_hz
    }

    pub fn num_samples(&self) -> usize {
        self.num_samples
    }

    pub fn dt(&self) -> f64 {
        1.0 / self.sample_rate_hz
    }

    pub fn duration_s(&self) -> f64 {
        self.num_samples as f64 / self.sample_rate_hz
    }

    pub fn nyquist_hz(&self) -> f64 {
        self.sample_rate_hz / 2.0
    }

    /// Time of sample `i` on the grid, `i / sample_rate`.
    pub fn time_at(&self, i: usize) -> f64 {
        i as f64 / self.sample_rate_hz
    }
}

/// Real-valued samples bound to a sampling grid.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    spec: SamplingSpec,
    samples: Vec<f64>,
}

impl TimeSeries {
    /// Builds a series, checking the length matches the spec and all samples are finite.
    pub fn new(spec: SamplingSpec, samples: Vec<f64>) -> Result<Self> {
        if samples.len() != spec.num_samples() {
            return Err(CoreError::InvalidParameter {
                name: "samples",
                reason: format!(
                    "length {} does not match spec.num_samples {}",
                    samples.len(),
                    spec.num_samples()
                ),
            });
        }
        if let Some(i) = samples.iter().position(|v| !v.is_finite()) {
            return Err(CoreError::InvalidParameter {
                name: "samples",
                reason: format!("non-finite sample at index {i}"),
            });
        }
        Ok(Self { spec, samples })
    }

    pub fn spec(&self) -> SamplingSpec {
        self.spec
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn mean(&self) -> f64 {
        self.samples.iter().sum::<f64>() / self.samples.len() as f64
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.samples
    }
}

/// Parameters of a seeded i.i.d. uniform draw on `[range_lo, range_hi]`.
///
/// Regenerating with the same seed yields bit-identical values. The degenerate
/// `range_lo == range_hi` field is allowed and produces the constant value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RandomField {
    seed: u64,
    range_lo: f64,
    range_hi: f64,
    count: usize,
}

impl RandomField {
    pub fn new(seed: u64, range_lo: f64, range_hi: f64, count: usize) -> Result<Self> {
        ensure_finite(range_lo, "range_lo")?;
        ensure_finite(range_hi, "range_hi")?;
        if range_lo > range_hi {
            return Err(CoreError::InvalidParameter {
                name: "range",
                reason: format!("range_lo {range_lo} > range_hi {range_hi}"),
            });
        }
        if count == 0 {
            return Err(CoreError::InvalidParameter {
                name: "count",
                reason: "count must be >= 1".into(),
            });
        }
        Ok(Self {
            seed,
            range_lo,
            range_hi,
            count,
        })
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn range_lo(&self) -> f64 {
        self.range_lo
    }

    pub fn range_hi(&self) -> f64 {
        self.range_hi
    }

    pub fn count(&self) -> usize {
        self.count
    }
}

/// One-sided power spectral density on a strictly increasing positive grid.
///
/// `convention_tag` names the normalization the estimator used, so downstream
/// consumers and output files can state what the numbers mean.
#[derive(Debug, Clone, PartialEq)]
pub struct Psd {
    freqs_hz: Vec<f64>,
    power: Vec<f64>,
    convention_tag: String,
}

impl Psd {
    pub fn new(freqs_hz: Vec<f64>, power: Vec<f64>, convention_tag: String) -> Result<Self> {
        if freqs_hz.len() != power.len() {
            return Err(CoreError::InvalidParameter {
                name: "psd",
                reason: format!(
                    "freqs length {} != power length {}",
                    freqs_hz.len(),
                    power.len()
                ),
            });
        }
        if freqs_hz.is_empty() {
            return Err(CoreError::InvalidParameter {
                name: "psd",
                reason: "empty spectrum".into(),
            });
        }
        let mut prev = 0.0;
        for (i, &f) in freqs_hz.iter().enumerate() {
            if !f.is_finite() || f <= prev {
                return Err(CoreError::InvalidParameter {
                    name: "freqs_hz",
                    reason: format!("frequencies must be positive and strictly increasing (index {i})"),
                });
            }
            prev = f;
        }
        if let Some(i) = power.iter().position(|p| !p.is_finite() || *p < 0.0) {
            return Err(CoreError::InvalidParameter {
                name: "power",
                reason: format!("power must be finite and >= 0 (index {i})"),
            });
        }
        Ok(Self {
            freqs_hz,
            power,
            convention_tag,
        })
    }

    pub fn freqs_hz(&self) -> &[f64] {
        &self.freqs_hz
    }

    pub fn power(&self) -> &[f64] {
        &self.power
    }

    pub fn len(&self) -> usize {
        self.freqs_hz.len()
    }

    pub fn is_empty(&self) -> bool {
        self.freqs_hz.is_empty()
    }

    pub fn convention_tag(&self) -> &str {
        &self.convention_tag
    }

    /// Total power in `[lo, hi]` (inclusive), integrating bin values times the
    /// local grid spacing.
    pub fn band_power(&self, lo: f64, hi: f64) -> f64 {
        let df: Vec<f64> = self
            .freqs_hz
            .windows(2)
            .map(|w| w[1] - w[0])
            .chain(std::iter::once(0.0))
            .collect();
        // use the leading spacing for the first bin as well
        let first_df = if self.freqs_hz.len() > 1 {
            self.freqs_hz[1] - self.freqs_hz[0]
        } else {
            1.0
        };
        self.freqs_hz
            .iter()
            .zip(self.power.iter())
            .zip(df.iter())
            .map(|((f, p), d)| {
                let d = if *d > 0.0 { *d } else { first_df };
                if *f >= lo && *f <= hi {
                    p * d
                } else {
                    0.0
                }
            })
            .sum()
    }
}

/// Log-log power-law fit over a frequency band.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SlopeFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub band_lo_hz: f64,
    pub band_hi_hz: f64,
    pub decades: f64,
    pub points_used: usize,
    /// OLS standard error of the slope estimate.
    pub slope_std_error: f64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_spec_validates() {
        assert!(SamplingSpec::new(100.0, 10_000).is_ok());
        assert!(SamplingSpec::new(0.0, 10).is_err());
        assert!(SamplingSpec::new(-1.0, 10).is_err());
        assert!(SamplingSpec::new(f64::NAN, 10).is_err());
        assert!(SamplingSpec::new(100.0, 1).is_err());
    }

    #[test]
    fn sampling_spec_derived_quantities() {
        let s = SamplingSpec::new(100.0, 10_000).unwrap();
        assert_eq!(s.dt(), 0.01);
        assert_eq!(s.duration_s(), 100.0);
        assert_eq!(s.nyquist_hz(), 50.0);
        assert_eq!(s.time_at(250), 2.5);
    }

    #[test]
    fn time_series_rejects_bad_input() {
        let s = SamplingSpec::new(10.0, 4).unwrap();
        assert!(TimeSeries::new(s, vec![0.0; 3]).is_err());
        assert!(TimeSeries::new(s, vec![0.0, 1.0, f64::NAN, 2.0]).is_err());
        assert!(TimeSeries::new(s, vec![0.0, 1.0, f64::INFINITY, 2.0]).is_err());
        assert!(TimeSeries::new(s, vec![0.0; 4]).is_ok());
    }

    #[test]
    fn random_field_validates() {
        assert!(RandomField::new(7, 0.0, 0.0, 3).is_ok());
        assert!(RandomField::new(7, 1.0, 0.0, 3).is_err());
        assert!(RandomField::new(7, 0.0, 1.0, 0).is_err());
        assert!(RandomField::new(7, f64::NAN, 1.0, 3).is_err());
    }

    #[test]
    fn psd_validates_grid() {
        assert!(Psd::new(vec![1.0, 2.0], vec![1.0, 1.0], "t".into()).is_ok());
        assert!(Psd::new(vec![2.0, 1.0], vec![1.0, 1.0], "t".into()).is_err());
        assert!(Psd::new(vec![0.0, 1.0], vec![1.0, 1.0], "t".into()).is_err());
        assert!(Psd::new(vec![1.0, 2.0], vec![-1.0, 1.0], "t".into()).is_err());
        assert!(Psd::new(vec![1.0], vec![1.0, 2.0], "t".into()).is_err());
    }
}
