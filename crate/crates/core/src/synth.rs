//! Wave-bank synthesis for each concentration mechanism: exponential
//! synchronization, power-law approach, resonance, the soft-emission cascade,
//! and the two-wave beat demonstration.
//!
//! Determinism contract: all draws come from one ChaCha8 stream seeded by the
//! config's field seed, in a fixed order — frequency-field draws first
//! (including any rejection redraws, which consume the stream inline), then
//! the phase draws when `phase_mode` is `UniformRandom`. Rendering sums waves
//! in index order per sample, so results are independent of thread count.

use std::f64::consts::TAU;

use rayon::prelude::*;
use serde::Serialize;

use crate::analytic::{resonance_inverse, ResonanceParams};
use crate::error::{ensure_finite, CoreError, Result};
use crate::random::{draw_uniform, rng_from_seed, SeededRng};
use crate::types::{RandomField, SamplingSpec, TimeSeries};

/// Frequency-concentration mechanism of a wave bank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Mechanism {
    Exponential,
    Power,
    Resonance,
    IrCascade,
    TwoWave,
}

impl Mechanism {
    pub fn name(&self) -> &'static str {
        match self {
            Mechanism::Exponential => "exponential",
            Mechanism::Power => "power",
            Mechanism::Resonance => "resonance",
            Mechanism::IrCascade => "ir-cascade",
            Mechanism::TwoWave => "two-wave",
        }
    }
}

/// Phase convention for the superposed sinusoids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PhaseMode {
    /// All phases zero (the banks' plain form).
    Zero,
    /// Independent uniform phases on `[0, 2*pi)`, drawn after the field draws.
    UniformRandom,
}

/// Parameters of a superposition of sinusoids.
///
/// `fiducial_hz` carries one carrier for the plain banks or several for the
/// multi-carrier variant (waves are split evenly across them in index order).
/// Mechanism-specific parameters must be present exactly when the mechanism
/// needs them: `alpha` only for `Power`, `resonance` only for `Resonance`
/// (which takes its center frequency from the resonance parameters and leaves
/// `fiducial_hz` empty).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WaveBankConfig {
    pub mechanism: Mechanism,
    pub fiducial_hz: Vec<f64>,
    pub mixing: f64,
    pub alpha: Option<f64>,
    pub resonance: Option<ResonanceParams>,
    pub field: RandomField,
    pub phase_mode: PhaseMode,
    pub num_waves: usize,
}

impl WaveBankConfig {
    pub fn validate(&self) -> Result<()> {
        ensure_finite(self.mixing, "mixing")?;
        if self.num_waves == 0 {
            return Err(CoreError::InvalidParameter {
                name: "num_waves",
                reason: "must be >= 1".into(),
            });
        }
        if self.num_waves != self.field.count() {
            return Err(CoreError::InvalidParameter {
                name: "num_waves",
                reason: format!(
                    "num_waves {} != field.count {}",
                    self.num_waves,
                    self.field.count()
                ),
            });
        }
        for &f in &self.fiducial_hz {
            ensure_finite(f, "fiducial_hz")?;
            if f <= 0.0 {
                return Err(CoreError::InvalidParameter {
                    name: "fiducial_hz",
                    reason: format!("fiducials must be > 0, got {f}"),
                });
            }
        }
        let needs_fiducial = !matches!(self.mechanism, Mechanism::Resonance);
        if needs_fiducial && self.fiducial_hz.is_empty() {
            return Err(CoreError::InvalidParameter {
                name: "fiducial_hz",
                reason: format!("mechanism {} requires a fiducial", self.mechanism.name()),
            });
        }
        if !needs_fiducial && !self.fiducial_hz.is_empty() {
            return Err(CoreError::InvalidParameter {
                name: "fiducial_hz",
                reason: "resonance banks take their center from the resonance parameters".into(),
            });
        }
        match self.mechanism {
            Mechanism::Power => {
                let alpha = self.alpha.ok_or(CoreError::InvalidParameter {
                    name: "alpha",
                    reason: "power mechanism requires alpha".into(),
                })?;
                ensure_finite(alpha, "alpha")?;
                if alpha == 0.0 {
                    return Err(CoreError::InvalidParameter {
                        name: "alpha",
                        reason: "must be nonzero".into(),
                    });
                }
            }
            _ => {
                if self.alpha.is_some() {
                    return Err(CoreError::InvalidParameter {
                        name: "alpha",
                        reason: format!("not a parameter of the {} mechanism", self.mechanism.name()),
                    });
                }
            }
        }
        match self.mechanism {
            Mechanism::Resonance => {
                if self.resonance.is_none() {
                    return Err(CoreError::InvalidParameter {
                        name: "resonance",
                        reason: "resonance mechanism requires resonance parameters".into(),
                    });
                }
            }
            _ => {
                if self.resonance.is_some() {
                    return Err(CoreError::InvalidParameter {
                        name: "resonance",
                        reason: format!("not a parameter of the {} mechanism", self.mechanism.name()),
                    });
                }
            }
        }
        Ok(())
    }

    fn expect_mechanism(&self, expected: Mechanism) -> Result<()> {
        if self.mechanism != expected {
            return Err(CoreError::MechanismMismatch {
                expected: expected.name(),
                actual: self.mechanism.name().to_string(),
            });
        }
        Ok(())
    }

    /// Fiducial assigned to wave `i`: waves are split evenly across the list.
    fn fiducial_for(&self, i: usize) -> f64 {
        let n = self.fiducial_hz.len();
        self.fiducial_hz[i * n / self.num_waves]
    }
}

/// Phase draws for a bank; must run after the frequency-field draws.
fn draw_phases(rng: &mut SeededRng, mode: PhaseMode, count: usize) -> Vec<f64> {
    match mode {
        PhaseMode::Zero => vec![0.0; count],
        PhaseMode::UniformRandom => (0..count).map(|_| draw_uniform(rng, 0.0, TAU)).collect(),
    }
}

/// Renders `sum_i sin(2 pi f_i t + theta_i)` on the sampling grid.
///
/// Samples are independent, so the work parallelizes over the output with the
/// wave sum kept in index order; the result is bit-identical for any thread
/// count.
fn render(waves: &[(f64, f64)], spec: SamplingSpec) -> Result<TimeSeries> {
    let dt = spec.dt();
    let mut out = vec![0.0f64; spec.num_samples()];
    const CHUNK: usize = 4096;
    out.par_chunks_mut(CHUNK).enumerate().for_each(|(ci, chunk)| {
        let base = ci * CHUNK;
        for (j, y) in chunk.iter_mut().enumerate() {
            let t = (base + j) as f64 * dt;
            let mut acc = 0.0;
            for &(f, theta) in waves {
                acc += (TAU * f * t + theta).sin();
            }
            *y = acc;
        }
    });
    TimeSeries::new(spec, out)
}

/// Exponential-synchronization bank: frequencies `w_i = f (1 + c e^(-r_i))`.
///
/// For `c > 0` every instantaneous frequency lies in `[f, f (1 + c)]`.
pub fn synth_exponential(cfg: &WaveBankConfig, spec: SamplingSpec) -> Result<TimeSeries> {
    cfg.expect_mechanism(Mechanism::Exponential)?;
    cfg.validate()?;
    let c = cfg.mixing;
    for &f in &cfg.fiducial_hz {
        let max_freq = f * (1.0 + c.abs());
        if max_freq > spec.nyquist_hz() {
            return Err(CoreError::NyquistViolation {
                freq_hz: max_freq,
                limit_hz: spec.nyquist_hz(),
            });
        }
    }
    let mut rng = rng_from_seed(cfg.field.seed());
    let draws: Vec<f64> = (0..cfg.num_waves)
        .map(|_| draw_uniform(&mut rng, cfg.field.range_lo(), cfg.field.range_hi()))
        .collect();
    let phases = draw_phases(&mut rng, cfg.phase_mode, cfg.num_waves);
    let waves: Vec<(f64, f64)> = draws
        .iter()
        .enumerate()
        .map(|(i, &r)| {
            let f = cfg.fiducial_for(i) * (1.0 + c * (-r).exp());
            (f, phases[i])
        })
        .collect();
    if let Some(&(f, _)) = waves.iter().find(|(f, _)| *f <= 0.0) {
        return Err(CoreError::InvalidParameter {
            name: "mixing",
            reason: format!("produced non-positive frequency {f}"),
        });
    }
    render(&waves, spec)
}

/// Smallest admissible field draw when `alpha > 0` (`r -> 0` is singular).
pub const POWER_EPS: f64 = 1e-3;
const MAX_REDRAWS: usize = 100;

/// Power-approach bank: frequencies `w_i = f (1 + c r_i^(-alpha))`.
///
/// For `alpha > 0` the draws are clipped to `[max(range_lo, 1e-3), range_hi]`
/// and any frequency above 0.9x Nyquist is rejected and redrawn (bounded);
/// for `alpha < 0`, `r = 0` is regular and the range is used as given.
pub fn synth_power(cfg: &WaveBankConfig, spec: SamplingSpec) -> Result<TimeSeries> {
    cfg.expect_mechanism(Mechanism::Power)?;
    cfg.validate()?;
    let alpha = cfg.alpha.expect("validated");
    let c = cfg.mixing;
    let fiducial = cfg.fiducial_hz[0];
    let (lo, hi) = if alpha > 0.0 {
        let lo = cfg.field.range_lo().max(POWER_EPS);
        if lo > cfg.field.range_hi() {
            return Err(CoreError::InvalidParameter {
                name: "field",
                reason: format!(
                    "clipped draw range [{lo}, {}] is empty",
                    cfg.field.range_hi()
                ),
            });
        }
        (lo, cfg.field.range_hi())
    } else {
        (cfg.field.range_lo(), cfg.field.range_hi())
    };
    if lo < 0.0 {
        return Err(CoreError::InvalidParameter {
            name: "field",
            reason: "power-mechanism draws must be nonnegative".into(),
        });
    }
    let freq_cap = 0.9 * spec.nyquist_hz();
    let mut rng = rng_from_seed(cfg.field.seed());
    let mut freqs = Vec::with_capacity(cfg.num_waves);
    for _ in 0..cfg.num_waves {
        let mut accepted = None;
        for _ in 0..MAX_REDRAWS {
            let r = draw_uniform(&mut rng, lo, hi);
            let f = fiducial * (1.0 + c * r.powf(-alpha));
            if f > 0.0 && f <= freq_cap {
                accepted = Some(f);
                break;
            }
        }
        match accepted {
            Some(f) => freqs.push(f),
            None => {
                return Err(CoreError::NyquistViolation {
                    freq_hz: fiducial * (1.0 + c * lo.powf(-alpha)),
                    limit_hz: freq_cap,
                })
            }
        }
    }
    let phases = draw_phases(&mut rng, cfg.phase_mode, cfg.num_waves);
    let waves: Vec<(f64, f64)> = freqs.into_iter().zip(phases).collect();
    render(&waves, spec)
}

/// Resonance bank: frequencies are `resonance_inverse(r_i)` with the draws
/// clipped into the invertible range `[t_min, 4/kappa^2]`.
pub fn synth_resonance(cfg: &WaveBankConfig, spec: SamplingSpec) -> Result<TimeSeries> {
    cfg.expect_mechanism(Mechanism::Resonance)?;
    cfg.validate()?;
    let params = cfg.resonance.as_ref().expect("validated");
    let mut rng = rng_from_seed(cfg.field.seed());
    let draws: Vec<f64> = (0..cfg.num_waves)
        .map(|_| draw_uniform(&mut rng, cfg.field.range_lo(), cfg.field.range_hi()))
        .collect();
    let phases = draw_phases(&mut rng, cfg.phase_mode, cfg.num_waves);
    let mut waves = Vec::with_capacity(cfg.num_waves);
    for (i, &raw) in draws.iter().enumerate() {
        let t = raw.clamp(params.t_min(), params.t_max());
        let f = resonance_inverse(t, params)?;
        waves.push((f, phases[i]));
    }
    if waves.is_empty() {
        return Err(CoreError::InvalidParameter {
            name: "field",
            reason: "no valid draws after clipping".into(),
        });
    }
    render(&waves, spec)
}

/// Soft-emission cascade bank: each wave is shifted below the fiducial by an
/// energy loss drawn with density proportional to `1/w` on
/// `[shift_lo, shift_hi]` (log-uniform, via `w = lo (hi/lo)^u`).
pub fn synth_ir_cascade(
    cfg: &WaveBankConfig,
    spec: SamplingSpec,
    shift_lo: f64,
    shift_hi: f64,
) -> Result<TimeSeries> {
    cfg.expect_mechanism(Mechanism::IrCascade)?;
    cfg.validate()?;
    ensure_finite(shift_lo, "shift_lo")?;
    ensure_finite(shift_hi, "shift_hi")?;
    let fiducial = cfg.fiducial_hz[0];
    // shift_lo == shift_hi is the degenerate single-shift case
    if shift_lo <= 0.0 || shift_lo > shift_hi || shift_hi >= fiducial {
        return Err(CoreError::InvalidParameter {
            name: "shifts",
            reason: format!(
                "need 0 < shift_lo <= shift_hi < fiducial, got [{shift_lo}, {shift_hi}] vs {fiducial}"
            ),
        });
    }
    if fiducial > spec.nyquist_hz() {
        return Err(CoreError::NyquistViolation {
            freq_hz: fiducial,
            limit_hz: spec.nyquist_hz(),
        });
    }
    let mut rng = rng_from_seed(cfg.field.seed());
    let shifts = draw_log_uniform(&mut rng, shift_lo, shift_hi, cfg.num_waves);
    let phases = draw_phases(&mut rng, cfg.phase_mode, cfg.num_waves);
    let waves: Vec<(f64, f64)> = shifts
        .into_iter()
        .map(|w| fiducial - w)
        .zip(phases)
        .collect();
    render(&waves, spec)
}

/// `count` draws with density proportional to `1/w` on `[lo, hi]`.
pub fn draw_log_uniform(rng: &mut SeededRng, lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let ratio = hi / lo;
    (0..count)
        .map(|_| {
            let u = draw_uniform(rng, 0.0, 1.0);
            lo * ratio.powf(u)
        })
        .collect()
}

/// Two-wave beat demonstration: `sin(2 pi (w + l) t) + sin(2 pi (w - l) t)`,
/// identically `2 cos(2 pi l t) sin(2 pi w t)`.
///
/// Requires `w >= 10 l` so the beat is well separated from the carrier.
pub fn synth_two_wave(omega_hz: f64, lambda_hz: f64, spec: SamplingSpec) -> Result<TimeSeries> {
    ensure_finite(omega_hz, "omega_hz")?;
    ensure_finite(lambda_hz, "lambda_hz")?;
    if lambda_hz <= 0.0 || omega_hz < 10.0 * lambda_hz {
        return Err(CoreError::InvalidParameter {
            name: "omega_hz/lambda_hz",
            reason: format!("need omega >= 10 lambda > 0, got {omega_hz}, {lambda_hz}"),
        });
    }
    let top = omega_hz + lambda_hz;
    if top > spec.nyquist_hz() {
        return Err(CoreError::NyquistViolation {
            freq_hz: top,
            limit_hz: spec.nyquist_hz(),
        });
    }
    render(
        &[(omega_hz + lambda_hz, 0.0), (omega_hz - lambda_hz, 0.0)],
        spec,
    )
}
