//! Error type shared by every module in the crate.

use thiserror::Error;

/// Errors produced by the synthesis, analysis, and estimation operations.
#[derive(Debug, Error)]
pub enum CoreError {
    /// A parameter failed validation (wrong range, wrong sign, missing, ...).
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// A non-finite value (NaN or infinity) was passed where a real number is required.
    #[error("non-finite value in `{name}`")]
    NonFinite { name: &'static str },

    /// A synthesis operation was called with a config built for a different mechanism.
    #[error("mechanism mismatch: operation requires {expected}, config has {actual}")]
    MechanismMismatch {
        expected: &'static str,
        actual: String,
    },

    /// An instantaneous frequency would exceed the representable band.
    #[error("Nyquist violation: frequency {freq_hz} Hz exceeds limit {limit_hz} Hz")]
    NyquistViolation { freq_hz: f64, limit_hz: f64 },

    /// The adaptive integrator exhausted its panel budget before reaching tolerance.
    #[error("quadrature did not converge: {detail}")]
    QuadratureNoConvergence { detail: String },

    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error in `{name}`: {reason}")]
    Domain { name: &'static str, reason: String },

    /// Input series has too few samples for the requested operation.
    #[error("series too short: {len} samples, need at least {min}")]
    SeriesTooShort { len: usize, min: usize },

    /// Too few usable points in the requested frequency band.
    #[error("insufficient points in band: {available} available, {required} required")]
    InsufficientPoints { available: usize, required: usize },

    /// Every binned power value in the fit band is zero, so log-log fitting is undefined.
    #[error("no positive power in fit band")]
    ZeroPowerInBand,
}

pub type Result<T> = std::result::Result<T, CoreError>;

pub(crate) fn ensure_finite(value: f64, name: &'static str) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(CoreError::NonFinite { name })
    }
}
