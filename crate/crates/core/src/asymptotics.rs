//! Small-cutoff expansions.
//!
//! Excited states: κ = 2n + ν + 2εₙ with εₙ ∝ δ^{2ν−1}.
//! Ground state (−1/4 ≤ α < 0): κ = −2c₀/δ² − 1/2 + O(δ²), i.e. E₀ = −2c₀/δ².

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{BranchLabel, Parity, PotentialSpec};
use crate::roots::{scan_sign_changes, solve_bracketed};
use crate::specfun::{bessel_k_scaled, ln_gamma, ln_gamma_ratio_symmetric, rgamma, sin_pi, BesselOrderArg};
use crate::unreg::nu_of_alpha;

/// Largest cutoff for which εₙ is offered.
pub const EPSILON_DELTA_MAX: f64 = 0.1;
/// Threshold on 4c₀/(1+√(1/4+α)) for the closed-form c₀ to be flagged valid.
pub const C0_VALIDITY_RATIO: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlphaSign {
    Negative,
    Positive,
}

/// Leading small-δ correction to κ for an excited state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorrectionTerm {
    pub parity: Parity,
    pub alpha_sign: AlphaSign,
    /// Display label.
    pub n: usize,
    /// Radial index entering the formula.
    pub n_radial: usize,
    pub epsilon_n: f64,
    /// εₙ ∝ δ^{leading_power}, with leading_power = 2ν − 1.
    pub leading_power: f64,
    /// Set when 1/Γ(1/2 − ν − n) is within 1e-8 of a zero, so εₙ vanishes at this order.
    pub precision_warning: bool,
}

/// Interior factor x·f(x) with f = cot, −tan, coth or tanh at x = √|α|.
fn interior_factor(parity: Parity, alpha: f64) -> f64 {
    let x = alpha.abs().sqrt();
    match (parity, alpha < 0.0) {
        (Parity::Odd, true) => x / x.tan(),
        (Parity::Even, true) => -x * x.tan(),
        (Parity::Odd, false) => x / x.tanh(),
        (Parity::Even, false) => x * x.tanh(),
    }
}

/// εₙ = [(ν − F)/(ν − 1 + F)] · (−1)ⁿ Γ(3/2−ν) / (Γ(1/2−ν−n) n! Γ(ν+1/2)) · δ^{2ν−1},
/// with F the interior factor. `n_display` follows [`BranchLabel`] conventions.
pub fn epsilon_n(spec: &PotentialSpec, parity: Parity, n_display: usize) -> Result<CorrectionTerm> {
    let alpha = spec.alpha;
    let delta = spec.require_delta()?;
    if alpha == 0.0 {
        return Err(Error::Domain(
            "epsilon_n degenerates at alpha = 0; the oscillator closed form applies".into(),
        ));
    }
    if delta >= EPSILON_DELTA_MAX {
        return Err(Error::Domain(format!(
            "epsilon_n needs delta < {EPSILON_DELTA_MAX}, got {delta}"
        )));
    }
    let label = BranchLabel::from_display(parity, n_display, alpha);
    if label.ground {
        return Err(Error::Domain(
            "even n_display = 0 for alpha < 0 is the ground state; use the c0 expansion".into(),
        ));
    }
    let nu = nu_of_alpha(alpha)?;
    let n = label.n;
    let f = interior_factor(parity, alpha);
    let denom = nu - 1.0 + f;
    if denom == 0.0 {
        return Err(Error::Domain(format!(
            "epsilon_n prefactor is singular at alpha = {alpha}"
        )));
    }
    // Γ(3/2−ν)/Γ(1/2−ν−n) = Π_{j=1}^{n+1} (3/2 − ν − j): finite even where both gammas have poles.
    let mut ratio = 1.0;
    for j in 1..=n + 1 {
        ratio *= 1.5 - nu - j as f64;
    }
    let sign_n = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let tail = ratio * sign_n * (-(ln_gamma(n as f64 + 1.0) + ln_gamma(nu + 0.5))).exp();
    let power = 2.0 * nu - 1.0;
    let epsilon = (nu - f) / denom * tail * delta.powf(power);
    let near_pole = sin_pi(0.5 - nu - n as f64).abs() < 1e-8;
    debug_assert!(near_pole || (rgamma(0.5 - nu - n as f64) != 0.0));
    Ok(CorrectionTerm {
        parity,
        alpha_sign: if alpha < 0.0 {
            AlphaSign::Negative
        } else {
            AlphaSign::Positive
        },
        n: n_display,
        n_radial: n,
        epsilon_n: epsilon,
        leading_power: power,
        precision_warning: near_pole,
    })
}

/// κ ≈ 2n + ν + 2εₙ for an excited state.
pub fn kappa_asymptotic(spec: &PotentialSpec, parity: Parity, n_display: usize) -> Result<f64> {
    let corr = epsilon_n(spec, parity, n_display)?;
    let nu = nu_of_alpha(spec.alpha)?;
    Ok(2.0 * corr.n_radial as f64 + nu + 2.0 * corr.epsilon_n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum C0Method {
    SelfConsistent,
    ClosedForm,
    SmallAlpha,
}

/// Leading coefficients of the ground-state expansion κ = −2c₀/δ² + c₁ − 1/2 + O(δ²).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GroundStateExpansion {
    pub alpha: f64,
    pub c0: f64,
    /// Identically zero.
    pub c1: f64,
    pub method: C0Method,
    /// 4c₀/(1 + √(1/4+α)).
    pub validity_ratio: f64,
    pub validity_ok: bool,
}

impl GroundStateExpansion {
    fn new(alpha: f64, c0: f64, method: C0Method) -> Self {
        let s = (0.25 + alpha).sqrt();
        let ratio = 4.0 * c0 / (1.0 + s);
        Self {
            alpha,
            c0,
            c1: 0.0,
            method,
            validity_ratio: ratio,
            validity_ok: ratio < C0_VALIDITY_RATIO,
        }
    }

    /// E₀/ħω ≈ −2c₀/δ².
    pub fn energy_estimate(&self, delta: f64) -> f64 {
        -2.0 * self.c0 / (delta * delta)
    }

    /// κ ≈ −2c₀/δ² − 1/2.
    pub fn kappa_estimate(&self, delta: f64) -> f64 {
        self.energy_estimate(delta) - 0.5
    }
}

fn check_ground_alpha(alpha: f64) -> Result<()> {
    if !(-0.25..0.0).contains(&alpha) {
        return Err(Error::Domain(format!(
            "the ground-state expansion needs -1/4 <= alpha < 0, got {alpha}"
        )));
    }
    Ok(())
}

/// Residual g(c) = c − (1/4){[√(|α|−4c) tan√(|α|−4c) + ν] K_{ν−1/2}(2√c)/K_{ν+1/2}(2√c)}².
fn c0_residual(alpha: f64, nu: f64, c: f64) -> Result<f64> {
    let q = (alpha.abs() - 4.0 * c).max(0.0).sqrt();
    let z = 2.0 * c.sqrt();
    let k_lo = bessel_k_scaled(BesselOrderArg::new(nu - 0.5, z)?)?;
    let k_hi = bessel_k_scaled(BesselOrderArg::new(nu + 0.5, z)?)?;
    let inner = (q * q.tan() + nu) * k_lo / k_hi;
    Ok(c - 0.25 * inner * inner)
}

/// c₀ from its self-consistent equation, by bisection on (0, |α|/4).
pub fn c0_self_consistent(alpha: f64) -> Result<GroundStateExpansion> {
    check_ground_alpha(alpha)?;
    let nu = nu_of_alpha(alpha)?;
    let top = alpha.abs() / 4.0;
    // Log-spaced scan; the residual is smooth on the open interval.
    let lo = (top * 1e-12).ln();
    let hi = (top * (1.0 - 1e-12)).ln();
    let brackets = scan_sign_changes(|t| c0_residual(alpha, nu, t.exp()).map(Some), lo, hi, (hi - lo) / 600.0)?;
    let Some(br) = brackets.first() else {
        return Err(Error::NoBracket {
            lo: lo.exp(),
            hi: hi.exp(),
            context: format!("c0 self-consistent equation at alpha = {alpha}"),
        });
    };
    let mut bracket = *br;
    bracket.lo = bracket.lo.exp();
    bracket.hi = bracket.hi.exp();
    let c0 = solve_bracketed(
        |c| c0_residual(alpha, nu, c),
        bracket,
        1e-10 * bracket.lo,
        1e-16 * bracket.lo,
    )?;
    Ok(GroundStateExpansion::new(alpha, c0, C0Method::SelfConsistent))
}

/// Closed-form c₀ = {[1 − 2s/(√|α| tan√|α| + 1/2 + s)] Γ(1+s)/Γ(1−s)}^{1/s}, s = √(1/4+α).
pub fn c0_closed_form(alpha: f64) -> Result<GroundStateExpansion> {
    check_ground_alpha(alpha)?;
    let s = (0.25 + alpha).sqrt();
    let r = alpha.abs().sqrt();
    let a0 = r * r.tan() + 0.5 + s;
    let ln_c0 = if s == 0.0 {
        -2.0 / a0 - 2.0 * crate::specfun::EULER_GAMMA
    } else {
        ((-2.0 * s / a0).ln_1p() + ln_gamma_ratio_symmetric(s)) / s
    };
    Ok(GroundStateExpansion::new(alpha, ln_c0.exp(), C0Method::ClosedForm))
}

/// c₀ ≈ |α|^{2/√(1−4|α|)} for small |α|.
pub fn c0_small_alpha(alpha: f64) -> Result<GroundStateExpansion> {
    check_ground_alpha(alpha)?;
    let a = alpha.abs();
    let c0 = a.powf(2.0 / (1.0 - 4.0 * a).sqrt());
    Ok(GroundStateExpansion::new(alpha, c0, C0Method::SmallAlpha))
}

pub fn c0(alpha: f64, method: C0Method) -> Result<GroundStateExpansion> {
    match method {
        C0Method::SelfConsistent => c0_self_consistent(alpha),
        C0Method::ClosedForm => c0_closed_form(alpha),
        C0Method::SmallAlpha => c0_small_alpha(alpha),
    }
}

/// E₀/ħω ≈ −2c₀/δ².
pub fn ground_state_energy_estimate(alpha: f64, delta: f64, method: C0Method) -> Result<f64> {
    if !(delta > 0.0) {
        return Err(Error::Domain(format!("delta must be positive, got {delta}")));
    }
    Ok(c0(alpha, method)?.energy_estimate(delta))
}

/// Smallest |κ| for which the limiting form is offered.
pub const LIMITING_KAPPA_MIN: f64 = 10.0;

/// (2|κ|)^{1/4} e^{−√(2|κ|)|x|}, the δ → 0 form of the ground state.
pub fn limiting_ground_wavefunction(kappa: f64, x: f64) -> Result<f64> {
    if !(kappa <= -LIMITING_KAPPA_MIN) {
        return Err(Error::Domain(format!(
            "limiting ground state needs kappa <= -{LIMITING_KAPPA_MIN}, got {kappa}"
        )));
    }
    let k = (2.0 * kappa.abs()).sqrt();
    Ok(k.sqrt() * (-k * x.abs()).exp())
}

/// √(2|κ|) e^{−2√(2|κ|)|x|}; integrates to 1 and tends to a delta function.
pub fn limiting_ground_density(kappa: f64, x: f64) -> Result<f64> {
    Ok(limiting_ground_wavefunction(kappa, x)?.powi(2))
}
