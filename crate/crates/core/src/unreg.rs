//! Closed-form spectrum and eigenfunctions of the singular potential.
//!
//! κ = 2n + ν, E = κ + 1/2, and
//! ψ(x) = N (−1)ⁿ e^{−x²/2} |x|^ν Lₙ^{(ν−1/2)}(x²) with N² = n!/Γ(n+ν+1/2),
//! made even or odd in x. Both parities share the energy.

use crate::error::{Error, Result};
use crate::model::{BranchLabel, EigenSolution, Method, Parity, PotentialSpec};
use crate::specfun::{laguerre, ln_gamma};

/// ν = 1/2 + √(1/4 + α), the only root giving a square-integrable solution.
pub fn nu_of_alpha(alpha: f64) -> Result<f64> {
    if !alpha.is_finite() || alpha < -0.25 {
        return Err(Error::Domain(format!(
            "nu is complex for alpha < -1/4 (alpha = {alpha})"
        )));
    }
    Ok(0.5 + (0.25 + alpha).sqrt())
}

fn check_label(label: &BranchLabel) -> Result<()> {
    if label.ground {
        return Err(Error::Domain(
            "the even ground state exists only for the regularized potential".into(),
        ));
    }
    Ok(())
}

/// Closed-form eigenvalue for a label of the singular potential.
pub fn unreg_energy(spec: &PotentialSpec, label: BranchLabel) -> Result<EigenSolution> {
    if spec.delta.is_some() {
        return Err(Error::Domain(
            "closed-form energies apply to the unregularized potential".into(),
        ));
    }
    check_label(&label)?;
    let nu = nu_of_alpha(spec.alpha)?;
    let kappa = 2.0 * label.n as f64 + nu;
    Ok(EigenSolution::new(label, nu, kappa, Method::ClosedForm))
}

/// Normalized eigenfunction at x.
pub fn unreg_psi(spec: &PotentialSpec, label: BranchLabel, x: f64) -> Result<f64> {
    check_label(&label)?;
    let nu = nu_of_alpha(spec.alpha)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    let n = label.n;
    let ax = x.abs();
    let l = laguerre(n, nu - 0.5, ax * ax)?;
    let log_norm = 0.5 * (ln_gamma(n as f64 + 1.0) - ln_gamma(n as f64 + nu + 0.5));
    let sign_n = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let parity = match label.parity {
        Parity::Even => 1.0,
        Parity::Odd => x.signum(),
    };
    Ok(parity * sign_n * l * (log_norm - 0.5 * ax * ax + nu * ax.ln()).exp())
}
