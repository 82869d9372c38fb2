//! Closed-form frequency distributions, beat-frequency distributions,
//! resonance geometry, and the quadrature oracle used to validate them.
//!
//! Conventions: `p_exp`/`p_pow` are densities over frequency; `q_exp`/`q_pow`
//! are the corresponding beat-frequency distributions
//! `Q(d) = integral P(w + d) P(w) dw` over `[omega1, omega2]`.

use serde::Serialize;

use crate::error::{ensure_finite, CoreError, Result};
use crate::quadrature::integrate;

/// Relative tolerance used by the beat-distribution quadratures.
pub const QUAD_REL_TOL: f64 = 1e-8;

/// Exponential-approach frequency distribution parameters.
///
/// `p` is the stationary time density, `lambda` the approach rate; the
/// distribution `P(w) = p / (lambda w)` is supported on `[omega1, omega2]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExpSyncParams {
    pub p: f64,
    pub lambda: f64,
    pub omega1: f64,
    pub omega2: f64,
}

impl ExpSyncParams {
    pub fn new(p: f64, lambda: f64, omega1: f64, omega2: f64) -> Result<Self> {
        for (v, name) in [
            (p, "p"),
            (lambda, "lambda"),
            (omega1, "omega1"),
            (omega2, "omega2"),
        ] {
            ensure_finite(v, name)?;
        }
        if p <= 0.0 || lambda <= 0.0 {
            return Err(CoreError::InvalidParameter {
                name: "p/lambda",
                reason: "p and lambda must be > 0".into(),
            });
        }
        if omega1 <= 0.0 || omega1 > omega2 {
            // omega1 == omega2 is the degenerate empty integration domain
            return Err(CoreError::InvalidParameter {
                name: "omega1/omega2",
                reason: format!("need 0 < omega1 <= omega2, got {omega1}, {omega2}"),
            });
        }
        Ok(Self {
            p,
            lambda,
            omega1,
            omega2,
        })
    }
}

/// `P(w) = p / (lambda w)`, the density produced by an exponential frequency
/// approach.
pub fn p_exp(omega: f64, params: &ExpSyncParams) -> Result<f64> {
    ensure_finite(omega, "omega")?;
    if omega <= 0.0 {
        return Err(CoreError::Domain {
            name: "omega",
            reason: format!("must be > 0, got {omega}"),
        });
    }
    Ok(params.p / (params.lambda * omega))
}

/// Closed form of the beat distribution for the exponential approach:
/// `Q(d) = p^2 / (lambda^2 d) * ln[omega2 (omega1 + d) / (omega1 (omega2 + d))]`.
pub fn q_exp(delta: f64, params: &ExpSyncParams) -> Result<f64> {
    ensure_finite(delta, "delta")?;
    if delta <= 0.0 {
        return Err(CoreError::Domain {
            name: "delta",
            reason: format!("must be > 0, got {delta}"),
        });
    }
    let ExpSyncParams {
        p,
        lambda,
        omega1,
        omega2,
    } = *params;
    let ratio = (omega2 * (omega1 + delta)) / (omega1 * (omega2 + delta));
    Ok(p * p / (lambda * lambda * delta) * ratio.ln())
}

/// Power-approach frequency distribution parameters.
///
/// The derived constants are `c = p / alpha` and `beta = 1 + 1/alpha`; the
/// density magnitude `|c| w^(-beta)` is used, since `c < 0` for `alpha < 0`
/// has no probabilistic reading.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PowerSyncParams {
    pub p: f64,
    pub alpha: f64,
    pub omega1: f64,
    pub omega2: f64,
}

impl PowerSyncParams {
    pub fn new(p: f64, alpha: f64, omega1: f64, omega2: f64) -> Result<Self> {
        for (v, name) in [
            (p, "p"),
            (alpha, "alpha"),
            (omega1, "omega1"),
            (omega2, "omega2"),
        ] {
            ensure_finite(v, name)?;
        }
        if p <= 0.0 {
            return Err(CoreError::InvalidParameter {
                name: "p",
                reason: "must be > 0".into(),
            });
        }
        if alpha == 0.0 {
            return Err(CoreError::InvalidParameter {
                name: "alpha",
                reason: "must be nonzero".into(),
            });
        }
        if omega1 <= 0.0 || omega1 > omega2 {
            return Err(CoreError::InvalidParameter {
                name: "omega1/omega2",
                reason: format!("need 0 < omega1 <= omega2, got {omega1}, {omega2}"),
            });
        }
        Ok(Self {
            p,
            alpha,
            omega1,
            omega2,
        })
    }

    /// Mixing coefficient `c = p / alpha` (signed).
    pub fn c(&self) -> f64 {
        self.p / self.alpha
    }

    /// Density exponent `beta = 1 + 1/alpha`.
    pub fn beta(&self) -> f64 {
        1.0 + 1.0 / self.alpha
    }
}

/// `P(w) = |c| w^(-beta)` for the power approach.
pub fn p_pow(omega: f64, params: &PowerSyncParams) -> Result<f64> {
    ensure_finite(omega, "omega")?;
    if omega <= 0.0 {
        return Err(CoreError::Domain {
            name: "omega",
            reason: format!("must be > 0, got {omega}"),
        });
    }
    Ok(params.c().abs() * omega.powf(-params.beta()))
}

/// Beat distribution for the power approach, by adaptive quadrature of the
/// defining integral over `[omega1, omega2]` (relative tolerance 1e-8).
///
/// There is no usable closed form here; the small-delta log-log slope of this
/// integral is bounded below by `-beta` (the lower integration edge dominates
/// for beta > 1), which the tests pin down numerically.
pub fn q_pow(delta: f64, params: &PowerSyncParams) -> Result<f64> {
    ensure_finite(delta, "delta")?;
    if delta <= 0.0 {
        return Err(CoreError::Domain {
            name: "delta",
            reason: format!("must be > 0, got {delta}"),
        });
    }
    if params.omega1 == params.omega2 {
        return Ok(0.0);
    }
    let coeff = params.c().abs();
    let beta = params.beta();
    let f = |w: f64| coeff * (w + delta).powf(-beta) * coeff * w.powf(-beta);
    let (value, _err) = integrate(f, params.omega1, params.omega2, QUAD_REL_TOL)?;
    Ok(value)
}

/// Lorentzian resonance response with width `kappa` around `omega0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ResonanceParams {
    pub omega0: f64,
    pub kappa: f64,
    pub p: f64,
}

impl ResonanceParams {
    pub fn new(omega0: f64, kappa: f64, p: f64) -> Result<Self> {
        for (v, name) in [(omega0, "omega0"), (kappa, "kappa"), (p, "p")] {
            ensure_finite(v, name)?;
        }
        if omega0 <= 0.0 || kappa <= 0.0 || p <= 0.0 {
            return Err(CoreError::InvalidParameter {
                name: "resonance",
                reason: "omega0, kappa, p must all be > 0".into(),
            });
        }
        Ok(Self { omega0, kappa, p })
    }

    /// Upper end of the response range, `4 / kappa^2` (the peak value).
    pub fn t_max(&self) -> f64 {
        4.0 / (self.kappa * self.kappa)
    }

    /// Smallest response value consumers may invert, `1e-12 * t_max`; the
    /// inverse diverges as t -> 0.
    pub fn t_min(&self) -> f64 {
        1e-12 * self.t_max()
    }
}

/// `R[w] = 1 / ((kappa/2)^2 + (w - omega0)^2)`, maximal at `omega0`.
pub fn resonance_curve(omega: f64, params: &ResonanceParams) -> Result<f64> {
    ensure_finite(omega, "omega")?;
    let half = params.kappa / 2.0;
    let d = omega - params.omega0;
    Ok(1.0 / (half * half + d * d))
}

/// Upper branch of the inverse response: the frequency at which the response
/// equals `t`, for `t` in `(0, 4/kappa^2]`.
pub fn resonance_inverse(t: f64, params: &ResonanceParams) -> Result<f64> {
    ensure_finite(t, "t")?;
    let t_max = params.t_max();
    if t <= 0.0 || t > t_max {
        return Err(CoreError::Domain {
            name: "t",
            reason: format!("must be in (0, {t_max}], got {t}"),
        });
    }
    // sqrt(-t (kappa^2 t - 4)) / (2 t) = sqrt(4/t - kappa^2) / 2
    let radicand = 4.0 / t - params.kappa * params.kappa;
    Ok(params.omega0 + 0.5 * radicand.max(0.0).sqrt())
}

/// Frequency density induced by the resonance curve:
/// `P(w) = 32 p (w - omega0) / (kappa^2 + 4 (w - omega0)^2)^2`.
///
/// Antisymmetric about `omega0`; for `w > omega0` it equals
/// `p / |d resonance_inverse/dt|` through the chain rule.
pub fn p_resonance(omega: f64, params: &ResonanceParams) -> Result<f64> {
    ensure_finite(omega, "omega")?;
    let d = omega - params.omega0;
    let k2 = params.kappa * params.kappa;
    let denom = k2 + 4.0 * d * d;
    Ok(32.0 * params.p * d / (denom * denom))
}

/// Exponential approximation `w(t) ~ A exp(-B t)` anchored at the inflection
/// point of `ln w(t)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExpApprox {
    /// Prefactor; the approximation passes through `w(t_star)`.
    pub a: f64,
    /// Decay rate, `-d ln w / dt` at the inflection point.
    pub b: f64,
    /// Inflection point of `ln w(t)` on `(0, 4/kappa^2)`.
    pub t_star: f64,
}

/// Second derivative of `ln resonance_inverse` by central differences with a
/// relative step.
fn log_omega_dd(t: f64, params: &ResonanceParams) -> f64 {
    let h = t * 1e-4;
    let g = |x: f64| resonance_inverse(x, params).map(|w| w.ln()).unwrap_or(f64::NAN);
    (g(t + h) - 2.0 * g(t) + g(t - h)) / (h * h)
}

/// Finds the inflection point of `ln w(t)` in log-linear coordinates and the
/// exponential `A e^(-B t)` tangent to `ln w` there.
///
/// The sign change of the second derivative is bracketed on a log-spaced grid
/// and bisected to a relative tolerance of 1e-9 in `t`; `B` uses a central
/// difference with relative step 1e-6.
pub fn exp_approx_at_inflection(params: &ResonanceParams) -> Result<ExpApprox> {
    let t_max = params.t_max();
    let lo = params.t_min();
    let hi = t_max * (1.0 - 1e-9);

    const GRID: usize = 512;
    let ratio = (hi / lo).powf(1.0 / (GRID - 1) as f64);
    let mut bracket = None;
    let mut prev_t = lo;
    let mut prev_s = log_omega_dd(lo, params);
    let mut t = lo;
    for _ in 1..GRID {
        t *= ratio;
        let s = log_omega_dd(t, params);
        if prev_s > 0.0 && s < 0.0 {
            bracket = Some((prev_t, t));
            break;
        }
        prev_t = t;
        prev_s = s;
    }
    let (mut a, mut b) = bracket.ok_or_else(|| CoreError::Domain {
        name: "inflection",
        reason: format!(
            "no sign change of d^2 ln w/dt^2 found in ({lo:.3e}, {hi:.3e})"
        ),
    })?;

    while (b - a) > 1e-9 * b {
        let mid = 0.5 * (a + b);
        if log_omega_dd(mid, params) > 0.0 {
            a = mid;
        } else {
            b = mid;
        }
    }
    let t_star = 0.5 * (a + b);

    let h = t_star * 1e-6;
    let w_plus = resonance_inverse(t_star + h, params)?;
    let w_minus = resonance_inverse(t_star - h, params)?;
    let slope = (w_plus.ln() - w_minus.ln()) / (2.0 * h);
    let b_coef = -slope;
    let w_star = resonance_inverse(t_star, params)?;
    let a_coef = w_star * (b_coef * t_star).exp();

    Ok(ExpApprox {
        a: a_coef,
        b: b_coef,
        t_star,
    })
}

/// Adaptive quadrature of the generic beat integral
/// `integral_lo^hi P(w + delta) P(w) dw`, relative tolerance 1e-8.
///
/// This is the independent oracle the closed forms are checked against; it
/// only assumes `P` is integrable on `[lo, hi + delta]`.
pub fn beat_quadrature_oracle<F: Fn(f64) -> f64>(
    p: F,
    delta: f64,
    lo: f64,
    hi: f64,
) -> Result<f64> {
    ensure_finite(delta, "delta")?;
    ensure_finite(lo, "lo")?;
    ensure_finite(hi, "hi")?;
    if delta <= 0.0 {
        return Err(CoreError::Domain {
            name: "delta",
            reason: format!("must be > 0, got {delta}"),
        });
    }
    if lo == hi {
        return Ok(0.0);
    }
    let f = |w: f64| p(w + delta) * p(w);
    let (value, _err) = integrate(f, lo, hi, QUAD_REL_TOL)?;
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1_params(omega1: f64) -> ExpSyncParams {
        ExpSyncParams::new(1.0, 1.0, omega1, 1e5).unwrap()
    }

    fn rel_err(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn p_exp_direct_values() {
        let p = ExpSyncParams::new(1.0, 1.0, 1e-4, 1e5).unwrap();
        assert_eq!(p_exp(1.0, &p).unwrap(), 1.0);
        assert!((p_exp(10.0, &p).unwrap() - 0.1).abs() < 1e-15);
        let p2 = ExpSyncParams::new(3.0, 0.5, 1e-4, 1e5).unwrap();
        assert!((p_exp(2.0, &p2).unwrap() - 3.0).abs() < 1e-15);
        assert!(p_exp(0.0, &p).is_err());
        assert!(p_exp(-1.0, &p).is_err());
        assert!(p_exp(f64::NAN, &p).is_err());
    }

    #[test]
    fn q_exp_degenerate_domain_is_zero() {
        let p = ExpSyncParams::new(1.0, 1.0, 2.0, 2.0).unwrap();
        for delta in [1e-3, 1.0, 50.0] {
            assert_eq!(q_exp(delta, &p).unwrap(), 0.0);
        }
    }

    #[test]
    fn q_exp_matches_quadrature_oracle() {
        let params = fig1_params(1e-4);
        let closed = q_exp(1.0, &params).unwrap();
        // frozen closed-form value for delta = 1 (ln of the boundary ratio)
        assert!(rel_err(closed, 9.210430367026516) < 1e-12);
        let oracle = beat_quadrature_oracle(
            |w| p_exp(w, &params).unwrap(),
            1.0,
            params.omega1,
            params.omega2,
        )
        .unwrap();
        assert!(
            rel_err(closed, oracle) < 1e-6,
            "closed {closed} vs oracle {oracle}"
        );
    }

    #[test]
    fn q_exp_small_delta_slope_near_minus_one() {
        // the finite lower bound contributes a log factor; with omega1 = 1e-6
        // the [1e-2, 1] window slope sits within 0.1 of -1
        let params = fig1_params(1e-6);
        let q_lo = q_exp(1e-2, &params).unwrap();
        let q_hi = q_exp(1.0, &params).unwrap();
        let slope = (q_hi.log10() - q_lo.log10()) / 2.0;
        assert!((slope - (-1.0)).abs() < 0.1, "slope {slope}");
        // frozen two-point values from the closed form
        assert!(rel_err(q_lo, 921.0440266976522) < 1e-9, "q_lo {q_lo}");
        assert!(rel_err(q_hi, 13.815501558013773) < 1e-9, "q_hi {q_hi}");
    }

    #[test]
    fn p_pow_direct_values() {
        let p = PowerSyncParams::new(1.0, 1.0, 1e-4, 1e5).unwrap();
        assert_eq!(p_pow(1.0, &p).unwrap(), 1.0);
        let p3 = PowerSyncParams::new(1.0, 3.0, 1e-4, 1e5).unwrap();
        let expect = (1.0 / 3.0) * 10f64.powf(-4.0 / 3.0);
        assert!(rel_err(p_pow(10.0, &p3).unwrap(), expect) < 1e-14);
        // alpha < 0: c = p/alpha is negative; the density uses |c|
        let pm3 = PowerSyncParams::new(1.0, -3.0, 1e-4, 1e5).unwrap();
        let expect_mag = ((-1.0 / 3.0) * 10f64.powf(-2.0 / 3.0)).abs();
        assert!(rel_err(p_pow(10.0, &pm3).unwrap(), expect_mag) < 1e-14);
        assert!(PowerSyncParams::new(1.0, 0.0, 1.0, 2.0).is_err());
    }

    #[test]
    fn q_pow_degenerate_domain_is_zero() {
        let p = PowerSyncParams::new(1.0, 3.0, 5.0, 5.0).unwrap();
        assert_eq!(q_pow(1.0, &p).unwrap(), 0.0);
    }

    #[test]
    fn q_pow_negative_alpha_matches_scale_free_exponent() {
        // for alpha < 0 (beta < 1) the integral is edge-insensitive and the
        // scale-free exponent -1 - 2/alpha is the true small-delta slope
        let p = PowerSyncParams::new(1.0, -3.0, 1e-4, 1e5).unwrap();
        let q1 = q_pow(1e-2, &p).unwrap();
        let q2 = q_pow(1e-1, &p).unwrap();
        let slope = (q2.log10() - q1.log10()) / 1.0;
        let expect = -1.0 - 2.0 / -3.0; // -1/3
        assert!((slope - expect).abs() < 0.15, "slope {slope} vs {expect}");
    }

    #[test]
    fn q_pow_positive_alpha_slope_is_edge_bounded() {
        // for beta > 1 the lower integration edge dominates:
        // d ln Q / d ln delta = -beta * <delta/(w+delta)> > -beta, so the
        // two-decade slope stays strictly above -(1 + 1/alpha) = -4/3 and
        // never reaches the scale-free value -1 - 2/alpha
        let p = PowerSyncParams::new(1.0, 3.0, 1e-4, 1e5).unwrap();
        let q1 = q_pow(1e-3, &p).unwrap();
        let q2 = q_pow(1e-1, &p).unwrap();
        let slope = (q2.log10() - q1.log10()) / 2.0;
        assert!(slope > -4.0 / 3.0, "slope {slope} must exceed -beta");
        // frozen oracle values (quadrature, rel tol 1e-8)
        assert!(rel_err(q1, 30762.193040965503) < 1e-6, "q1 {q1:e}");
        assert!(rel_err(q2, 133.64274142229974) < 1e-6, "q2 {q2:e}");
        assert!((slope - (-1.18104)).abs() < 5e-3, "slope {slope}");
    }

    #[test]
    fn resonance_curve_peak_and_half_width() {
        let r = ResonanceParams::new(10.0, 0.1, 1.0).unwrap();
        let peak = resonance_curve(10.0, &r).unwrap();
        assert!(rel_err(peak, (2.0 / 0.1) * (2.0 / 0.1)) < 1e-14);
        assert!(rel_err(peak, 400.0) < 1e-14);
        for sign in [-1.0, 1.0] {
            let half = resonance_curve(10.0 + sign * 0.05, &r).unwrap();
            assert!(rel_err(half, peak / 2.0) < 1e-12);
        }
    }

    #[test]
    fn resonance_inverse_roundtrip_and_values() {
        let r = ResonanceParams::new(10.0, 0.1, 1.0).unwrap();
        let t_max = r.t_max();
        assert!((t_max - 400.0).abs() < 1e-10);
        // at the peak the radicand vanishes
        assert!(rel_err(resonance_inverse(t_max, &r).unwrap(), 10.0) < 1e-12);
        // direct evaluation at t = 1
        let w1 = resonance_inverse(1.0, &r).unwrap();
        assert!(rel_err(w1, 10.0 + (3.99f64).sqrt() / 2.0) < 1e-14);
        // roundtrip over 100 log-spaced t in (0, t_max]
        for i in 0..100 {
            let t = r.t_min() * (t_max / r.t_min()).powf(i as f64 / 99.0);
            let w = resonance_inverse(t, &r).unwrap();
            let back = resonance_curve(w, &r).unwrap();
            assert!(rel_err(back, t) < 1e-10, "t {t} -> {back}");
        }
        assert!(resonance_inverse(0.0, &r).is_err());
        assert!(resonance_inverse(t_max * 1.0001, &r).is_err());
    }

    #[test]
    fn p_resonance_zero_at_center_and_antisymmetric() {
        let r = ResonanceParams::new(10.0, 0.1, 1.0).unwrap();
        assert_eq!(p_resonance(10.0, &r).unwrap(), 0.0);
        for x in [1e-3, 0.05, 0.5, 3.0] {
            let up = p_resonance(10.0 + x, &r).unwrap();
            let dn = p_resonance(10.0 - x, &r).unwrap();
            assert_eq!(up, -dn);
        }
    }

    #[test]
    fn p_resonance_maximum_location_by_grid_scan() {
        let r = ResonanceParams::new(10.0, 0.1, 1.0).unwrap();
        let mut best = (0.0, f64::MIN);
        for i in 0..200_000 {
            let w = 10.0 + 0.5 * (i as f64 + 0.5) / 200_000.0;
            let v = p_resonance(w, &r).unwrap();
            if v > best.1 {
                best = (w, v);
            }
        }
        let predicted = 10.0 + 0.1 / (2.0 * 3f64.sqrt());
        assert!(
            (best.0 - predicted).abs() < 1e-5,
            "scan max at {} vs {predicted}",
            best.0
        );
    }

    #[test]
    fn p_resonance_consistent_with_inverse_derivative() {
        // p / |d resonance_inverse / dt| at t = R[w] equals p_resonance(w)
        let r = ResonanceParams::new(10.0, 0.1, 1.0).unwrap();
        for w in [10.03, 10.3, 11.0, 13.0] {
            let t = resonance_curve(w, &r).unwrap();
            let h = t * 1e-6;
            let d = (resonance_inverse(t + h, &r).unwrap()
                - resonance_inverse(t - h, &r).unwrap())
                / (2.0 * h);
            let via_chain = r.p / d.abs();
            let direct = p_resonance(w, &r).unwrap();
            assert!(
                rel_err(direct, via_chain) < 1e-6,
                "w {w}: {direct} vs {via_chain}"
            );
        }
    }

    #[test]
    fn exp_approx_construction_and_agreement_band() {
        let r = ResonanceParams::new(10.0, 0.1, 1.0).unwrap();
        let ea = exp_approx_at_inflection(&r).unwrap();
        assert!(ea.b > 0.0);
        assert!(ea.a > r.omega0);
        // the inflection of ln w sits just below the linear-coordinate value 3/kappa^2
        assert!(
            (ea.t_star - 299.7).abs() < 1.0,
            "t_star {} not near 299.7",
            ea.t_star
        );
        // tangency at t_star
        let w_star = resonance_inverse(ea.t_star, &r).unwrap();
        let approx = ea.a.ln() - ea.b * ea.t_star;
        assert!((approx - w_star.ln()).abs() < 1e-8);
        // agreement over the large-t half of the domain
        let t_hi = r.t_max() * 0.9;
        let mut worst = 0.0f64;
        for i in 0..200 {
            let t = ea.t_star + (t_hi - ea.t_star) * i as f64 / 199.0;
            let w = resonance_inverse(t, &r).unwrap();
            let line = ea.a.ln() - ea.b * t;
            let err = (line - w.ln()).abs() / w.ln().abs();
            worst = worst.max(err);
        }
        assert!(worst < 0.05, "worst relative ln error {worst}");
    }

    #[test]
    fn oracle_trivial_cases() {
        // unit integrand on [0, 1]
        let v = beat_quadrature_oracle(|_| 1.0, 0.5, 0.0, 1.0).unwrap();
        assert!((v - 1.0).abs() < 1e-10);
        // empty domain
        assert_eq!(beat_quadrature_oracle(|_| 1.0, 0.5, 2.0, 2.0).unwrap(), 0.0);
        assert!(beat_quadrature_oracle(|_| 1.0, 0.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn closed_form_oracle_equivalence_over_delta_sweep() {
        // 50 log-spaced deltas across [1e-3, 1e2]
        let params = fig1_params(1e-4);
        for i in 0..50 {
            let delta = 1e-3 * (1e5f64).powf(i as f64 / 49.0);
            let closed = q_exp(delta, &params).unwrap();
            let oracle = beat_quadrature_oracle(
                |w| params.p / (params.lambda * w),
                delta,
                params.omega1,
                params.omega2,
            )
            .unwrap();
            assert!(
                rel_err(closed, oracle) <= 1e-6,
                "delta {delta:e}: closed {closed:e} oracle {oracle:e}"
            );
        }
    }
}
