//! Synthesis and verification of 1/f ("pink") noise built from wave beats.
//!
//! The crate provides, in order of a typical pipeline:
//!
//! * [`types`] — sampling grids, time series, seeded uniform fields, spectra,
//!   and fit results;
//! * [`analytic`] — closed-form frequency and beat-frequency distributions
//!   for the exponential, power-law, and resonance concentration mechanisms,
//!   plus the adaptive-quadrature oracle that validates them;
//! * [`synth`] — wave banks realizing each mechanism as a superposition of
//!   sinusoids;
//! * [`demod`] — the demodulation catalog (squaring, thresholding,
//!   rectification, segment averaging, decimation);
//! * [`spectral`] — periodogram estimation, log-binned power-law fitting,
//!   and the pink-noise verdict.
//!
//! Everything stochastic is a pure function of a 64-bit seed.

pub mod analytic;
pub mod demod;
pub mod error;
pub mod quadrature;
pub mod random;
pub mod spectral;
pub mod synth;
pub mod types;

pub use analytic::{
    beat_quadrature_oracle, exp_approx_at_inflection, p_exp, p_pow, p_resonance, q_exp, q_pow,
    resonance_curve, resonance_inverse, ExpApprox, ExpSyncParams, PowerSyncParams, ResonanceParams,
};
pub use demod::{
    apply as apply_demod, binary_above_mean, binary_below_mean, decimate, half_wave_rectify,
    segment_aggregate, square, threshold_keep_above_mean, threshold_raw_above_mean, DemodKind,
    DemodSpec, SegmentMode,
};
pub use error::{CoreError, Result};
pub use random::{make_uniform_field, realize_field, rng_from_seed, SeededRng};
pub use spectral::{
    fit_slope, log_bin, periodogram, pink_verdict, Detrend, FitConfig, PinkVerdict, Window,
};
pub use synth::{
    synth_exponential, synth_ir_cascade, synth_power, synth_resonance, synth_two_wave, Mechanism,
    PhaseMode, WaveBankConfig,
};
pub use types::{Psd, RandomField, SamplingSpec, SlopeFit, TimeSeries};
