//! The demodulation catalog: samplewise and segmentwise transformations
//! applied to a series before spectral analysis. Squaring, thresholding,
//! rectification, segment averaging, and naive decimation all expose the
//! amplitude envelope in different ways.

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::types::{SamplingSpec, TimeSeries};

/// Kinds of demodulation, mirroring the catalog of operations below.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DemodKind {
    Identity,
    Square,
    ThresholdKeepAboveMean,
    BinaryAboveMean,
    BinaryBelowMean,
    ThresholdRawAboveMean,
    HalfWaveRectify,
    SegmentQuadraticMean,
    SegmentMean,
    Decimate,
}

/// A demodulation step; `segments`/`factor` must be present exactly when the
/// kind needs them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DemodSpec {
    pub kind: DemodKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub segments: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factor: Option<usize>,
}

impl DemodSpec {
    pub fn plain(kind: DemodKind) -> Self {
        Self {
            kind,
            segments: None,
            factor: None,
        }
    }

    pub fn segmented(kind: DemodKind, segments: usize) -> Self {
        Self {
            kind,
            segments: Some(segments),
            factor: None,
        }
    }

    pub fn decimate(factor: usize) -> Self {
        Self {
            kind: DemodKind::Decimate,
            segments: None,
            factor: Some(factor),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let needs_segments = matches!(
            self.kind,
            DemodKind::SegmentQuadraticMean | DemodKind::SegmentMean
        );
        if needs_segments != self.segments.is_some() {
            return Err(CoreError::InvalidParameter {
                name: "segments",
                reason: if needs_segments {
                    "segment kinds require `segments`".into()
                } else {
                    "`segments` is only a parameter of the segment kinds".into()
                },
            });
        }
        let needs_factor = matches!(self.kind, DemodKind::Decimate);
        if needs_factor != self.factor.is_some() {
            return Err(CoreError::InvalidParameter {
                name: "factor",
                reason: if needs_factor {
                    "decimation requires `factor`".into()
                } else {
                    "`factor` is only a parameter of decimation".into()
                },
            });
        }
        Ok(())
    }
}

/// Applies one demodulation step.
pub fn apply(spec: &DemodSpec, x: &TimeSeries) -> Result<TimeSeries> {
    spec.validate()?;
    match spec.kind {
        DemodKind::Identity => Ok(x.clone()),
        DemodKind::Square => Ok(square(x)),
        DemodKind::ThresholdKeepAboveMean => Ok(threshold_keep_above_mean(x)),
        DemodKind::BinaryAboveMean => Ok(binary_above_mean(x)),
        DemodKind::BinaryBelowMean => Ok(binary_below_mean(x)),
        DemodKind::ThresholdRawAboveMean => Ok(threshold_raw_above_mean(x)),
        DemodKind::HalfWaveRectify => Ok(half_wave_rectify(x)),
        DemodKind::SegmentQuadraticMean => {
            segment_aggregate(x, spec.segments.expect("validated"), SegmentMode::QuadraticMean)
        }
        DemodKind::SegmentMean => {
            segment_aggregate(x, spec.segments.expect("validated"), SegmentMode::Mean)
        }
        DemodKind::Decimate => decimate(x, spec.factor.expect("validated")),
    }
}

fn map_samples(x: &TimeSeries, f: impl Fn(f64) -> f64) -> TimeSeries {
    let samples = x.samples().iter().map(|&v| f(v)).collect();
    TimeSeries::new(x.spec(), samples).expect("samplewise map preserves shape")
}

/// Samplewise square; the basic envelope demodulator.
pub fn square(x: &TimeSeries) -> TimeSeries {
    map_samples(x, |v| v * v)
}

/// Keeps samples at or above the mean, zeroes the rest.
///
/// Tie rule: values exactly equal to the mean are kept ("smaller than the
/// mean" is what gets zeroed).
pub fn threshold_keep_above_mean(x: &TimeSeries) -> TimeSeries {
    let mean = x.mean();
    map_samples(x, |v| if v >= mean { v } else { 0.0 })
}

/// 1 where the sample is at or above the mean, else 0.
pub fn binary_above_mean(x: &TimeSeries) -> TimeSeries {
    let mean = x.mean();
    map_samples(x, |v| if v >= mean { 1.0 } else { 0.0 })
}

/// 1 where the sample is below the mean, else 0 — the complement of
/// [`binary_above_mean`], so the two PSDs agree except in the DC bin.
pub fn binary_below_mean(x: &TimeSeries) -> TimeSeries {
    let mean = x.mean();
    map_samples(x, |v| if v < mean { 1.0 } else { 0.0 })
}

/// Mean threshold applied to a raw (not squared) series; the same rule as
/// [`threshold_keep_above_mean`], kept separate because the catalog treats
/// raw-signal thresholding as its own case.
pub fn threshold_raw_above_mean(x: &TimeSeries) -> TimeSeries {
    threshold_keep_above_mean(x)
}

/// Zeroes negative samples.
pub fn half_wave_rectify(x: &TimeSeries) -> TimeSeries {
    map_samples(x, |v| v.max(0.0))
}

/// Per-segment aggregation rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SegmentMode {
    /// Arithmetic mean of the segment.
    Mean,
    /// Root of the mean square (the default reading of "quadratic average").
    QuadraticMean,
    /// Mean of squares, the alternative reading; kept switchable.
    MeanSquare,
}

/// Splits the series into `segments` equal blocks (tail samples beyond an
/// even split are dropped) and aggregates each block.
///
/// The output has `segments` samples at `input_rate / block_len`, which equals
/// the input rate scaled by `segments / num_samples` whenever the split is
/// even.
pub fn segment_aggregate(
    x: &TimeSeries,
    segments: usize,
    mode: SegmentMode,
) -> Result<TimeSeries> {
    let n = x.len();
    if segments == 0 {
        return Err(CoreError::InvalidParameter {
            name: "segments",
            reason: "must be >= 1".into(),
        });
    }
    if segments > n {
        return Err(CoreError::InvalidParameter {
            name: "segments",
            reason: format!("segments {segments} exceeds series length {n}"),
        });
    }
    let block = n / segments;
    let mut out = Vec::with_capacity(segments);
    for s in 0..segments {
        let chunk = &x.samples()[s * block..(s + 1) * block];
        let v = match mode {
            SegmentMode::Mean => chunk.iter().sum::<f64>() / block as f64,
            SegmentMode::QuadraticMean => {
                (chunk.iter().map(|v| v * v).sum::<f64>() / block as f64).sqrt()
            }
            SegmentMode::MeanSquare => chunk.iter().map(|v| v * v).sum::<f64>() / block as f64,
        };
        out.push(v);
    }
    let rate = x.spec().sample_rate_hz() / block as f64;
    let spec = SamplingSpec::new(rate, segments)?;
    TimeSeries::new(spec, out)
}

/// Keeps every `factor`-th sample starting from the first, with no
/// anti-aliasing filter — deliberately the naive "coarser time resolution"
/// measurement. The sample rate divides by `factor`.
pub fn decimate(x: &TimeSeries, factor: usize) -> Result<TimeSeries> {
    if factor < 2 {
        return Err(CoreError::InvalidParameter {
            name: "factor",
            reason: format!("must be >= 2, got {factor}"),
        });
    }
    let out: Vec<f64> = x.samples().iter().step_by(factor).copied().collect();
    let spec = SamplingSpec::new(x.spec().sample_rate_hz() / factor as f64, out.len())?;
    TimeSeries::new(spec, out)
}
