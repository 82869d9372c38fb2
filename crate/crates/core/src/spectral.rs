//! PSD estimation, log-binned power-law fitting, and the pink-noise verdict.
//!
//! The estimator is a single full-length periodogram by design: the records
//! under test carry their information in the lowest decades, which segment
//! averaging would destroy. One-sided density normalization:
//! `power[k] = 2 |X_k|^2 / (fs * M * W)` on the grid `k fs / M`,
//! `k = 1 ..= floor(M/2)`, with `W` the window mean-square and no doubling at
//! the Nyquist bin, so `sum(power) * fs / M` equals the variance of the
//! windowed, detrended record divided by `W`.

use rustfft::num_complex::Complex;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::types::{Psd, SlopeFit, TimeSeries};

/// Taper applied before the FFT.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Window {
    /// No taper. The default; keeps the full low-frequency content.
    Rect,
    /// Periodic Hann taper, for leakage-sensitive checks and for banks whose
    /// zero-phase onset would otherwise dominate the low band.
    Hann,
}

impl Window {
    pub fn name(&self) -> &'static str {
        match self {
            Window::Rect => "rect",
            Window::Hann => "hann",
        }
    }
}

/// Detrending applied before windowing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Detrend {
    SubtractMean,
    None,
}

impl Detrend {
    pub fn name(&self) -> &'static str {
        match self {
            Detrend::SubtractMean => "subtract-mean",
            Detrend::None => "none",
        }
    }
}

/// Settings for the log-binned power-law fit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitConfig {
    pub band_lo_hz: f64,
    pub band_hi_hz: f64,
    pub bins_per_decade: usize,
    pub detrend: Detrend,
    pub window: Window,
}

impl FitConfig {
    pub fn validate(&self) -> Result<()> {
        if !self.band_lo_hz.is_finite() || !self.band_hi_hz.is_finite() {
            return Err(CoreError::NonFinite { name: "band" });
        }
        if self.band_lo_hz <= 0.0 || self.band_lo_hz >= self.band_hi_hz {
            return Err(CoreError::InvalidParameter {
                name: "band",
                reason: format!(
                    "need 0 < band_lo < band_hi, got [{}, {}]",
                    self.band_lo_hz, self.band_hi_hz
                ),
            });
        }
        if self.bins_per_decade == 0 {
            return Err(CoreError::InvalidParameter {
                name: "bins_per_decade",
                reason: "must be >= 1".into(),
            });
        }
        Ok(())
    }
}

/// One-sided periodogram of the series.
///
/// The grid is `k fs / M` for `k = 1 ..= floor(M/2)`; the DC bin is never part
/// of the spectrum (with mean subtraction it is zero anyway).
pub fn periodogram(x: &TimeSeries, window: Window, detrend: Detrend) -> Result<Psd> {
    let m = x.len();
    if m < 8 {
        return Err(CoreError::SeriesTooShort { len: m, min: 8 });
    }
    let fs = x.spec().sample_rate_hz();

    let mean = match detrend {
        Detrend::SubtractMean => x.mean(),
        Detrend::None => 0.0,
    };
    let mut buf: Vec<Complex<f64>> = match window {
        Window::Rect => x
            .samples()
            .iter()
            .map(|&v| Complex::new(v - mean, 0.0))
            .collect(),
        Window::Hann => x
            .samples()
            .iter()
            .enumerate()
            .map(|(n, &v)| {
                let w = 0.5 - 0.5 * (std::f64::consts::TAU * n as f64 / m as f64).cos();
                Complex::new((v - mean) * w, 0.0)
            })
            .collect(),
    };
    let window_power = match window {
        Window::Rect => 1.0,
        // mean square of the periodic Hann taper is 3/8
        Window::Hann => 0.375,
    };

    let mut planner = FftPlanner::new();
    planner.plan_fft_forward(m).process(&mut buf);

    let half = m / 2;
    let scale = 2.0 / (fs * m as f64 * window_power);
    let mut freqs = Vec::with_capacity(half);
    let mut power = Vec::with_capacity(half);
    for k in 1..=half {
        let mag_sq = buf[k].norm_sqr();
        let mut p = scale * mag_sq;
        if m % 2 == 0 && k == half {
            p /= 2.0; // the Nyquist bin has no mirror image
        }
        freqs.push(k as f64 * fs / m as f64);
        power.push(p);
    }
    Psd::new(
        freqs,
        power,
        format!(
            "onesided-per-hz;window={};detrend={}",
            window.name(),
            detrend.name()
        ),
    )
}

/// Geometric-mean frequency and arithmetic-mean power per logarithmic bin;
/// empty bins are dropped.
pub fn log_bin(psd: &Psd, bins_per_decade: usize, band_lo: f64, band_hi: f64) -> Result<Psd> {
    if bins_per_decade == 0 {
        return Err(CoreError::InvalidParameter {
            name: "bins_per_decade",
            reason: "must be >= 1".into(),
        });
    }
    if !(band_lo > 0.0 && band_lo < band_hi) {
        return Err(CoreError::InvalidParameter {
            name: "band",
            reason: format!("need 0 < lo < hi, got [{band_lo}, {band_hi}]"),
        });
    }
    let first = *psd.freqs_hz().first().expect("psd non-empty");
    let last = *psd.freqs_hz().last().expect("psd non-empty");
    if band_hi <= first || band_lo >= last {
        return Err(CoreError::Domain {
            name: "band",
            reason: format!(
                "band [{band_lo}, {band_hi}] does not overlap spectrum range [{first}, {last}]"
            ),
        });
    }

    let decades = (band_hi / band_lo).log10();
    let n_bins = (decades * bins_per_decade as f64).ceil().max(1.0) as usize;
    let log_lo = band_lo.log10();
    let bin_width = decades / n_bins as f64;

    let mut sum_log_f = vec![0.0f64; n_bins];
    let mut sum_p = vec![0.0f64; n_bins];
    let mut counts = vec![0usize; n_bins];
    for (&f, &p) in psd.freqs_hz().iter().zip(psd.power()) {
        if f < band_lo || f > band_hi {
            continue;
        }
        let idx = (((f.log10() - log_lo) / bin_width) as usize).min(n_bins - 1);
        sum_log_f[idx] += f.ln();
        sum_p[idx] += p;
        counts[idx] += 1;
    }

    let mut freqs = Vec::new();
    let mut power = Vec::new();
    for i in 0..n_bins {
        if counts[i] > 0 {
            freqs.push((sum_log_f[i] / counts[i] as f64).exp());
            power.push(sum_p[i] / counts[i] as f64);
        }
    }
    if freqs.len() < 2 {
        return Err(CoreError::InsufficientPoints {
            available: freqs.len(),
            required: 2,
        });
    }
    Psd::new(
        freqs,
        power,
        format!("{};logbin={bins_per_decade}", psd.convention_tag()),
    )
}

/// Ordinary least squares of `log10(power)` on `log10(freq)` over the
/// log-binned points in the configured band.
pub fn fit_slope(psd: &Psd, cfg: &FitConfig) -> Result<SlopeFit> {
    cfg.validate()?;
    let binned = log_bin(psd, cfg.bins_per_decade, cfg.band_lo_hz, cfg.band_hi_hz)?;

    let pts: Vec<(f64, f64)> = binned
        .freqs_hz()
        .iter()
        .zip(binned.power())
        .filter(|(_, &p)| p > 0.0)
        .map(|(&f, &p)| (f.log10(), p.log10()))
        .collect();
    if pts.is_empty() {
        return Err(CoreError::ZeroPowerInBand);
    }
    if pts.len() < 5 {
        return Err(CoreError::InsufficientPoints {
            available: pts.len(),
            required: 5,
        });
    }

    let n = pts.len() as f64;
    let mean_u = pts.iter().map(|(u, _)| u).sum::<f64>() / n;
    let mean_v = pts.iter().map(|(_, v)| v).sum::<f64>() / n;
    let mut s_uu = 0.0;
    let mut s_uv = 0.0;
    let mut s_vv = 0.0;
    for &(u, v) in &pts {
        s_uu += (u - mean_u) * (u - mean_u);
        s_uv += (u - mean_u) * (v - mean_v);
        s_vv += (v - mean_v) * (v - mean_v);
    }
    let slope = s_uv / s_uu;
    let intercept = mean_v - slope * mean_u;
    let ss_res = (s_vv - slope * s_uv).max(0.0);
    let r_squared = if s_vv > 0.0 {
        (1.0 - ss_res / s_vv).clamp(0.0, 1.0)
    } else {
        1.0
    };
    let slope_std_error = if pts.len() > 2 {
        (ss_res / (n - 2.0) / s_uu).sqrt()
    } else {
        0.0
    };

    // record the part of the requested band the spectrum actually covers, so
    // the decade span never overstates the evidence
    let grid_lo = *psd.freqs_hz().first().expect("psd non-empty");
    let grid_hi = *psd.freqs_hz().last().expect("psd non-empty");
    let band_lo_hz = cfg.band_lo_hz.max(grid_lo);
    let band_hi_hz = cfg.band_hi_hz.min(grid_hi);

    Ok(SlopeFit {
        slope,
        intercept,
        r_squared,
        band_lo_hz,
        band_hi_hz,
        decades: (band_hi_hz / band_lo_hz).log10(),
        points_used: pts.len(),
        slope_std_error,
    })
}

/// Classification thresholds: slope in `[-1.5, -0.5]`, at least two decades,
/// fit quality `r^2 >= 0.8`.
pub const PINK_SLOPE_RANGE: (f64, f64) = (-1.5, -0.5);
pub const PINK_MIN_DECADES: f64 = 2.0;
pub const PINK_MIN_R_SQUARED: f64 = 0.8;

/// Pink-noise classification of a fit, with the reason for any rejection.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PinkVerdict {
    pub is_pink: bool,
    pub slope_ok: bool,
    pub decades_ok: bool,
    pub r_squared_ok: bool,
    pub rationale: String,
}

/// True iff the fitted slope lies in the pink band over at least two decades
/// with adequate fit quality; the rationale lists every failed condition.
pub fn pink_verdict(fit: &SlopeFit) -> PinkVerdict {
    let slope_ok = fit.slope >= PINK_SLOPE_RANGE.0 && fit.slope <= PINK_SLOPE_RANGE.1;
    let decades_ok = fit.decades >= PINK_MIN_DECADES;
    let r_squared_ok = fit.r_squared >= PINK_MIN_R_SQUARED;
    let is_pink = slope_ok && decades_ok && r_squared_ok;
    let mut reasons = Vec::new();
    if !slope_ok {
        reasons.push(format!(
            "slope {:.3} outside [{}, {}]",
            fit.slope, PINK_SLOPE_RANGE.0, PINK_SLOPE_RANGE.1
        ));
    }
    if !decades_ok {
        reasons.push(format!(
            "span {:.2} decades < {PINK_MIN_DECADES}",
            fit.decades
        ));
    }
    if !r_squared_ok {
        reasons.push(format!(
            "r^2 {:.3} < {PINK_MIN_R_SQUARED}",
            fit.r_squared
        ));
    }
    let rationale = if is_pink {
        format!(
            "pink: slope {:.3} over {:.2} decades, r^2 {:.3}",
            fit.slope, fit.decades, fit.r_squared
        )
    } else {
        reasons.join("; ")
    };
    PinkVerdict {
        is_pink,
        slope_ok,
        decades_ok,
        r_squared_ok,
        rationale,
    }
}
