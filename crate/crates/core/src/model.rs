//! Problem definition and solution records shared by the solvers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible cutoff.
pub const DELTA_MAX: f64 = 0.2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    Transcendental,
    Asymptotic,
    Matrix,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::Transcendental => "transcendental",
            Method::Asymptotic => "asymptotic",
            Method::Matrix => "matrix",
        }
    }
}

/// Dimensionless problem: `V(x) = x²/2 + α/(2x²)`, optionally held constant for |x| < δ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialSpec {
    pub alpha: f64,
    pub delta: Option<f64>,
    /// Admits α < −1/4 for the regularized potential (no accuracy claims).
    #[serde(default)]
    pub experimental: bool,
}

impl PotentialSpec {
    pub fn unregularized(alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        Ok(Self {
            alpha,
            delta: None,
            experimental: false,
        })
    }

    pub fn regularized(alpha: f64, delta: f64) -> Result<Self> {
        check_alpha(alpha)?;
        check_delta(delta)?;
        Ok(Self {
            alpha,
            delta: Some(delta),
            experimental: false,
        })
    }

    /// Regularized potential with any finite α, including α < −1/4.
    pub fn regularized_experimental(alpha: f64, delta: f64) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(Error::Domain(format!("alpha must be finite, got {alpha}")));
        }
        check_delta(delta)?;
        Ok(Self {
            alpha,
            delta: Some(delta),
            experimental: alpha < -0.25,
        })
    }

    pub fn nu(&self) -> Result<f64> {
        crate::unreg::nu_of_alpha(self.alpha)
    }

    pub fn require_delta(&self) -> Result<f64> {
        self.delta
            .ok_or_else(|| Error::Domain("operation requires a regularized potential".into()))
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !alpha.is_finite() || alpha < -0.25 {
        return Err(Error::Domain(format!(
            "alpha must be >= -1/4 for a real exponent nu, got {alpha}"
        )));
    }
    Ok(())
}

fn check_delta(delta: f64) -> Result<()> {
    if !(delta > 0.0 && delta < DELTA_MAX) {
        return Err(Error::Domain(format!(
            "delta must lie in (0, {DELTA_MAX}), got {delta}"
        )));
    }
    Ok(())
}

/// State label. `n` is the radial index of the closed-form solution; `n_display`
/// follows the plotting convention where the even branch for α < 0 starts at 1.
/// The even ground state of the regularized potential with α < 0 has
/// `n_display = 0` and no radial index (`ground = true`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchLabel {
    pub parity: Parity,
    pub n: usize,
    pub n_display: usize,
    #[serde(default)]
    pub ground: bool,
}

impl BranchLabel {
    pub fn new(parity: Parity, n: usize, alpha: f64) -> Self {
        let shift = usize::from(parity == Parity::Even && alpha < 0.0);
        Self {
            parity,
            n,
            n_display: n + shift,
            ground: false,
        }
    }

    /// Label from the display index. For α < 0, even `n_display = 0` is the ground state.
    pub fn from_display(parity: Parity, n_display: usize, alpha: f64) -> Self {
        if parity == Parity::Even && alpha < 0.0 {
            if n_display == 0 {
                return Self::ground_state();
            }
            return Self::new(parity, n_display - 1, alpha);
        }
        Self::new(parity, n_display, alpha)
    }

    pub fn ground_state() -> Self {
        Self {
            parity: Parity::Even,
            n: 0,
            n_display: 0,
            ground: true,
        }
    }
}

/// One bound state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenSolution {
    pub label: BranchLabel,
    pub nu: f64,
    pub kappa: f64,
    /// Energy in units of ħω, always `kappa + 1/2`.
    pub energy: f64,
    pub method: Method,
    #[serde(default)]
    pub experimental: bool,
}

impl EigenSolution {
    pub fn new(label: BranchLabel, nu: f64, kappa: f64, method: Method) -> Self {
        Self {
            label,
            nu,
            kappa,
            energy: kappa + 0.5,
            method,
            experimental: false,
        }
    }
}

/// Energy units for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EnergyUnit {
    /// ħω
    Hw,
    /// Ground energy E₁ of the enclosing infinite well; needs ρ = ħω/E₁.
    E1,
}

/// Converts an energy in ħω to the requested unit.
pub fn energy_in(unit: EnergyUnit, energy_hw: f64, rho: f64) -> f64 {
    match unit {
        EnergyUnit::Hw => energy_hw,
        EnergyUnit::E1 => energy_hw * rho,
    }
}
