//! Bound states of the regularized potential, where V is held at its value V(δ) for |x| < δ.
//!
//! With s² = (2κ+1)δ² − δ⁴ − α, the interior solution is sin/cos(s x/δ) when s² > 0
//! and sinh/cosh(k x/δ), k² = −s², otherwise. Outside, ψ ∝ y^ν e^{−y²/2} U(a, b, y²)
//! with a = (ν−κ)/2, b = ν + 1/2. Matching δψ'/ψ at y = δ gives
//!
//! ```text
//! odd:  s cot s  (k coth k)  = L(κ)
//! even: −s tan s (k tanh k)  = L(κ),      L = δ² + ν − 2δ² U(a,b+1,δ²)/U(a,b,δ²).
//! ```
//!
//! Roots are located on the equivalent Wronskian-type determinant, which is analytic in κ
//! and has neither the trigonometric poles nor the poles at zeros of U(a,b,δ²).

use serde::{Deserialize, Serialize};

use crate::asymptotics::{c0_closed_form, c0_self_consistent, kappa_asymptotic};
use crate::error::{Error, Result};
use crate::model::{BranchLabel, EigenSolution, Method, Parity, PotentialSpec};
use crate::quad::{integrate_points, QuadOptions};
use crate::roots::{scan_sign_changes, solve_bracketed, Bracket};
use crate::specfun::{tricomi_u_ratio, tricomi_u_scaled, HypergeomArgs, Scaled};

/// Scan step in κ for excited states.
pub const SCAN_STEP: f64 = 0.05;
/// Bisection stops at this bracket width before the secant polish.
pub const BISECT_TOL: f64 = 1e-8;
/// Target accuracy of excited-state roots in κ.
pub const ROOT_TOL: f64 = 1e-12;
/// Largest radial index accepted by the excited-state solver.
pub const N_MAX: usize = 50;
/// Largest cutoff accepted by the ground-state solver.
pub const GROUND_DELTA_MAX: f64 = 0.05;
/// Distance from a trigonometric pole below which the raw residual is flagged.
pub const POLE_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// E > V(δ): sin/cos interior.
    Oscillatory,
    /// E < V(δ): sinh/cosh interior.
    Evanescent,
}

/// Interior wavenumber times δ and its regime.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MatchingState {
    pub q_or_k: f64,
    pub regime: Regime,
    /// (qδ)² in the oscillatory regime, −(kδ)² in the evanescent one.
    pub s_squared: f64,
}

fn s_squared(alpha: f64, delta: f64, kappa: f64) -> f64 {
    let d2 = delta * delta;
    (2.0 * kappa + 1.0) * d2 - d2 * d2 - alpha
}

pub fn matching_state(spec: &PotentialSpec, kappa: f64) -> Result<MatchingState> {
    let delta = spec.require_delta()?;
    let s2 = s_squared(spec.alpha, delta, kappa);
    Ok(if s2 >= 0.0 {
        MatchingState {
            q_or_k: s2.sqrt(),
            regime: Regime::Oscillatory,
            s_squared: s2,
        }
    } else {
        MatchingState {
            q_or_k: (-s2).sqrt(),
            regime: Regime::Evanescent,
            s_squared: s2,
        }
    })
}

/// (sin s/s, cos s) continued analytically in s² (sinh k/k, cosh k for s² < 0).
fn sinc_cos(s2: f64) -> (f64, f64) {
    if s2 > 0.0 {
        let s = s2.sqrt();
        if s < 1e-8 {
            (1.0 - s2 / 6.0, 1.0 - s2 / 2.0)
        } else {
            (s.sin() / s, s.cos())
        }
    } else if s2 < 0.0 {
        let k = (-s2).sqrt();
        if k < 1e-8 {
            (1.0 - s2 / 6.0, 1.0 - s2 / 2.0)
        } else {
            (k.sinh() / k, k.cosh())
        }
    } else {
        (1.0, 1.0)
    }
}

/// Interior (ψ(δ), δψ'(δ)) up to normalization, for ψ = sin(st)/s or cos(st), t = x/δ.
fn interior(parity: Parity, s2: f64) -> (f64, f64) {
    let (sn, cs) = sinc_cos(s2);
    match parity {
        Parity::Odd => (sn, cs),
        Parity::Even => (cs, -s2 * sn),
    }
}

fn hyper_args(nu: f64, kappa: f64, z: f64) -> HypergeomArgs {
    HypergeomArgs {
        a: 0.5 * (nu - kappa),
        b: nu + 0.5,
        z,
    }
}

/// (U(a,b,δ²), U(a,b+1,δ²)/U(a,b,δ²)) at energy κ.
fn outer_pair(nu: f64, delta: f64, kappa: f64) -> Result<(Scaled, f64)> {
    let args = hyper_args(nu, kappa, delta * delta);
    let u = tricomi_u_scaled(args).map_err(|e| e.at_kappa(kappa))?;
    let w = tricomi_u_ratio(
        HypergeomArgs {
            b: args.b + 1.0,
            ..args
        },
        args,
    )
    .map_err(|e| e.at_kappa(kappa))?
    .value();
    Ok((u, w))
}

/// Value of the eigenvalue condition at κ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConditionResidual {
    /// Interior δψ'/ψ: s cot s, −s tan s, k coth k or k tanh k.
    pub lhs: f64,
    /// Exterior δψ'/ψ = δ² + ν − 2δ² U(a,b+1,δ²)/U(a,b,δ²).
    pub rhs: f64,
    pub residual: f64,
    /// True at (or within 1e-12 of) a pole of cot/tan, or at a zero of U(a,b,δ²).
    pub pole: bool,
    pub state: MatchingState,
}

/// LHS − RHS of the matching condition δψ_I'/ψ_I = δψ_II'/ψ_II at y = δ.
pub fn eig_condition_residual(spec: &PotentialSpec, parity: Parity, kappa: f64) -> Result<ConditionResidual> {
    let delta = spec.require_delta()?;
    let nu = spec.nu()?;
    let state = matching_state(spec, kappa)?;
    let s = state.q_or_k;
    let (lhs, trig_pole) = match (state.regime, parity) {
        (Regime::Oscillatory, Parity::Odd) => {
            let sn = s.sin();
            (s * s.cos() / sn, sn.abs() < POLE_EPS && s > 0.0)
        }
        (Regime::Oscillatory, Parity::Even) => {
            let c = s.cos();
            (-s * s.sin() / c, c.abs() < POLE_EPS)
        }
        (Regime::Evanescent, Parity::Odd) => (if s == 0.0 { 1.0 } else { s / s.tanh() }, false),
        (Regime::Evanescent, Parity::Even) => (s * s.tanh(), false),
    };
    let (u, w) = outer_pair(nu, delta, kappa)?;
    let u_pole = u.mantissa == 0.0 || !w.is_finite();
    let d2 = delta * delta;
    let rhs = if u_pole { f64::INFINITY } else { d2 + nu - 2.0 * d2 * w };
    let pole = trig_pole || u_pole;
    Ok(ConditionResidual {
        lhs,
        rhs,
        residual: if pole { f64::NAN } else { lhs - rhs },
        pole,
        state,
    })
}

/// Pole-free matching determinant δψ_I'(δ)·U − ψ_I(δ)·[(δ²+ν)U − 2δ²U(a,b+1)], as a scaled value.
/// Its zeros in κ are the eigenvalues of the given parity.
pub fn matching_determinant(spec: &PotentialSpec, parity: Parity, kappa: f64) -> Result<Scaled> {
    let delta = spec.require_delta()?;
    let nu = spec.nu()?;
    let s2 = s_squared(spec.alpha, delta, kappa);
    let (psi, dpsi) = interior(parity, s2);
    let (u, w) = outer_pair(nu, delta, kappa)?;
    let d2 = delta * delta;
    // U·W rather than U(a,b+1) keeps the product finite across zeros of U.
    let m = u.mantissa;
    Ok(Scaled::new(
        m * (dpsi - psi * (d2 + nu)) + 2.0 * d2 * psi * (m * w),
        u.log_scale,
    ))
}

/// Window [lo, hi] that must contain the excited root by comparison arguments, and a seed.
fn excited_window(spec: &PotentialSpec, label: BranchLabel, nu: f64) -> (f64, f64, f64) {
    let n = label.n as f64;
    let alpha = spec.alpha;
    let (lo, hi) = match (label.parity, alpha.partial_cmp(&0.0)) {
        (Parity::Even, Some(std::cmp::Ordering::Greater)) => (2.0 * n, 2.0 * n + nu),
        (Parity::Odd, Some(std::cmp::Ordering::Greater)) => (2.0 * n + 1.0, 2.0 * n + nu),
        (Parity::Odd, Some(std::cmp::Ordering::Less)) => (2.0 * n + nu, 2.0 * n + 1.0),
        (Parity::Even, Some(std::cmp::Ordering::Less)) => (2.0 * n + nu, 2.0 * n + 2.0),
        (Parity::Even, _) => (2.0 * n - 0.1, 2.0 * n + 0.5),
        (Parity::Odd, _) => (2.0 * n + 0.9, 2.0 * n + 1.5),
    };
    let (lo, hi) = (lo.min(hi) - SCAN_STEP, lo.max(hi) + SCAN_STEP);
    let seed = if alpha == 0.0 {
        2.0 * n + nu - if label.parity == Parity::Even { 1.0 } else { 0.0 }
    } else {
        kappa_asymptotic(spec, label.parity, label.n_display).unwrap_or(2.0 * n + nu)
    };
    (lo, hi, seed.clamp(lo, hi))
}

/// Excited state with display label `n_display` (radial index n ≤ 50).
pub fn solve_excited(spec: &PotentialSpec, parity: Parity, n_display: usize) -> Result<EigenSolution> {
    let label = BranchLabel::from_display(parity, n_display, spec.alpha);
    if label.ground {
        return solve_ground_even(spec);
    }
    solve_excited_label(spec, label)
}

fn solve_excited_label(spec: &PotentialSpec, label: BranchLabel) -> Result<EigenSolution> {
    spec.require_delta()?;
    if label.n > N_MAX {
        return Err(Error::Domain(format!("radial index {} exceeds {N_MAX}", label.n)));
    }
    let nu = spec.nu()?;
    let (lo, hi, seed) = excited_window(spec, label, nu);
    let reference = matching_determinant(spec, label.parity, seed)?.log_scale;
    let f = |k: f64| -> Result<f64> {
        let d = matching_determinant(spec, label.parity, k)?;
        Ok(d.mantissa * (d.log_scale - reference).exp())
    };
    let brackets = scan_sign_changes(|k| f(k).map(Some), lo, hi, SCAN_STEP)?;
    let best = brackets
        .iter()
        .min_by(|a, b| {
            let da = (0.5 * (a.lo + a.hi) - seed).abs();
            let db = (0.5 * (b.lo + b.hi) - seed).abs();
            da.total_cmp(&db)
        })
        .copied()
        .ok_or_else(|| Error::NoBracket {
            lo,
            hi,
            context: format!(
                "{} state n_display = {} (alpha = {}, delta = {:?})",
                label.parity, label.n_display, spec.alpha, spec.delta
            ),
        })?;
    let kappa = solve_bracketed(f, best, BISECT_TOL, ROOT_TOL)?;
    Ok(EigenSolution::new(label, nu, kappa, Method::Transcendental))
}

/// Lowest κ allowed by E > min V = V(δ).
fn kappa_floor(alpha: f64, delta: f64) -> f64 {
    let d2 = delta * delta;
    0.5 * ((d2 * d2 + alpha) / d2 - 1.0)
}

/// Ground-state residual −s²S − C(δ² + ν − 2δ²W): the determinant divided by U(a,b,δ²) > 0.
fn ground_residual(spec: &PotentialSpec, nu: f64, delta: f64, kappa: f64) -> Result<f64> {
    let s2 = s_squared(spec.alpha, delta, kappa);
    let (psi, dpsi) = interior(Parity::Even, s2);
    let (_, w) = outer_pair(nu, delta, kappa)?;
    let d2 = delta * delta;
    Ok(dpsi - psi * (d2 + nu - 2.0 * d2 * w))
}

/// The even state whose energy diverges as −2c₀/δ² (−1/4 ≤ α < 0, δ ≤ 0.05).
///
/// Scans upward from the bottom of the potential, V(δ), so the first sign change is the
/// ground state; the solution lies in the oscillatory regime E > V(δ).
pub fn solve_ground_even(spec: &PotentialSpec) -> Result<EigenSolution> {
    let delta = spec.require_delta()?;
    let alpha = spec.alpha;
    if !(-0.25..0.0).contains(&alpha) {
        return Err(Error::Domain(format!(
            "the diverging ground state needs -1/4 <= alpha < 0, got {alpha}"
        )));
    }
    if delta > GROUND_DELTA_MAX {
        return Err(Error::Domain(format!(
            "ground-state solver needs delta <= {GROUND_DELTA_MAX}, got {delta}"
        )));
    }
    let nu = spec.nu()?;
    let expansion = c0_self_consistent(alpha).or_else(|_| c0_closed_form(alpha))?;
    let seed = expansion.kappa_estimate(delta);
    let floor = kappa_floor(alpha, delta);
    let f = |k: f64| ground_residual(spec, nu, delta, k);
    let mut width = (0.02 * seed.abs()).max(1.0);
    let mut found: Option<Bracket> = None;
    let mut hi = seed + width;
    for _ in 0..6 {
        let lo = floor + 1e-9 * floor.abs().max(1.0);
        let step = ((hi - lo) / 400.0).min(width / 10.0);
        let brackets = scan_sign_changes(|k| f(k).map(Some), lo, hi, step)?;
        if let Some(b) = brackets.first() {
            found = Some(*b);
            break;
        }
        width *= 4.0;
        hi = seed + width;
    }
    let bracket = found.ok_or_else(|| Error::NoBracket {
        lo: floor,
        hi,
        context: format!(
            "ground state (alpha = {alpha}, delta = {delta}, c0 = {}, seed kappa = {seed})",
            expansion.c0
        ),
    })?;
    let scale = seed.abs().max(1.0);
    let kappa = solve_bracketed(f, bracket, BISECT_TOL * scale, 1e-14 * scale)?;
    Ok(EigenSolution::new(
        BranchLabel::ground_state(),
        nu,
        kappa,
        Method::Transcendental,
    ))
}

/// Dispatches on the label: the ground state or an excited state.
pub fn solve_state(spec: &PotentialSpec, label: BranchLabel) -> Result<EigenSolution> {
    if label.ground {
        solve_ground_even(spec)
    } else {
        solve_excited_label(spec, label)
    }
}

/// Outer (u, u') = (ψ, xψ') at x = δ for the solution decaying at infinity, scaled to unit length.
/// Integrates u'' − u' = (x⁴ − 2Ex² + α)u in t = ln x inward with fixed-step RK4.
fn shoot_outer(alpha: f64, delta: f64, kappa: f64) -> (f64, f64) {
    let e = kappa + 0.5;
    let x_max = (2.0 * e).max(0.0).sqrt() + 7.0;
    let rhs = |t: f64, u: f64, du: f64| {
        let x2 = (2.0 * t).exp();
        (du, du + (x2 * x2 - 2.0 * e * x2 + alpha) * u)
    };
    let t0 = x_max.ln();
    let t1 = delta.ln();
    let steps = (((t0 - t1) * x_max * x_max) / 0.05).ceil().max(2000.0) as usize;
    let h = (t1 - t0) / steps as f64;
    let x2 = x_max * x_max;
    let mut u = 1.0f64;
    let mut du = -x_max * (x2 + alpha / x2 - 2.0 * e).max(0.0).sqrt();
    let norm = u.hypot(du);
    u /= norm;
    du /= norm;
    let mut t = t0;
    for _ in 0..steps {
        let (k1u, k1d) = rhs(t, u, du);
        let (k2u, k2d) = rhs(t + 0.5 * h, u + 0.5 * h * k1u, du + 0.5 * h * k1d);
        let (k3u, k3d) = rhs(t + 0.5 * h, u + 0.5 * h * k2u, du + 0.5 * h * k2d);
        let (k4u, k4d) = rhs(t + h, u + h * k3u, du + h * k3d);
        u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        du += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
        t += h;
        let norm = u.hypot(du);
        u /= norm;
        du /= norm;
    }
    (u, du)
}

fn experimental_determinant(alpha: f64, delta: f64, parity: Parity, kappa: f64) -> f64 {
    let (psi, dpsi) = interior(parity, s_squared(alpha, delta, kappa));
    let (u, du) = shoot_outer(alpha, delta, kappa);
    (dpsi * u - psi * du) / psi.hypot(dpsi)
}

/// Every bound state of both parities with κ ≤ `kappa_max` for an experimental spec,
/// found by shooting. Results carry `experimental = true`, ν is reported as its real part 1/2,
/// and labels are ordinals within each parity. No accuracy is claimed.
pub fn solve_experimental(spec: &PotentialSpec, kappa_max: f64) -> Result<Vec<EigenSolution>> {
    let delta = spec.require_delta()?;
    let alpha = spec.alpha;
    let floor = kappa_floor(alpha, delta);
    let joint = (-20.0f64).max(floor);
    let mut grid = Vec::new();
    if joint > floor {
        let s2_top = s_squared(alpha, delta, joint);
        let d2 = delta * delta;
        for i in 1..2000 {
            let s2 = s2_top * i as f64 / 2000.0;
            grid.push(((s2 + d2 * d2 + alpha) / d2 - 1.0) / 2.0);
        }
    }
    let steps = ((kappa_max - joint) / SCAN_STEP).ceil().max(1.0) as usize;
    grid.extend((0..=steps).map(|i| joint + (kappa_max - joint) * i as f64 / steps as f64));
    let mut out = Vec::new();
    for parity in [Parity::Even, Parity::Odd] {
        let f = |k: f64| experimental_determinant(alpha, delta, parity, k);
        let values: Vec<f64> = grid.iter().map(|&k| f(k)).collect();
        let mut ordinal = 0;
        for i in 1..grid.len() {
            if values[i - 1].signum() == values[i].signum() && values[i] != 0.0 {
                continue;
            }
            let bracket = Bracket {
                lo: grid[i - 1],
                hi: grid[i],
                f_lo: values[i - 1],
                f_hi: values[i],
            };
            let scale = grid[i].abs().max(1.0);
            let kappa = solve_bracketed(|k| Ok(f(k)), bracket, BISECT_TOL * scale, 1e-12 * scale)?;
            let label = BranchLabel {
                parity,
                n: ordinal,
                n_display: ordinal,
                ground: false,
            };
            let mut sol = EigenSolution::new(label, 0.5, kappa, Method::Transcendental);
            sol.experimental = true;
            out.push(sol);
            ordinal += 1;
        }
    }
    out.sort_by(|a, b| a.kappa.total_cmp(&b.kappa));
    Ok(out)
}

/// Normalization bookkeeping of a wavefunction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormReport {
    /// ∫₀¹ φ(st)² dt.
    pub inner_integral: f64,
    /// ∫_δ^∞ (y/δ)^{2ν} e^{−(y²−δ²)} [U(y²)/U(δ²)]² dy.
    pub outer_integral: f64,
    pub outer_abs_error: f64,
    /// Outer integration stopped where the integrand fell below 1e-18 of its peak.
    pub outer_cutoff: f64,
}

/// Normalized piecewise eigenfunction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PiecewiseWaveFunction {
    pub spec: PotentialSpec,
    pub solution: EigenSolution,
    /// A_I (even) or B_I (odd), multiplying cos/sin/cosh/sinh(q x).
    pub inner_coeff: f64,
    /// B_II multiplying y^ν e^{−y²/2} U(a,b,y²); kept scaled because U(a,b,δ²) may leave f64 range.
    pub outer_coeff: Scaled,
    pub matching_point: f64,
    pub state: MatchingState,
    pub norm: NormReport,
    /// U(a, b, δ²); outer values are formed as ratios to it.
    pub u_at_delta: Scaled,
}

fn inner_shape(parity: Parity, state: &MatchingState, t: f64) -> f64 {
    let st = state.q_or_k * t;
    match (state.regime, parity) {
        (Regime::Oscillatory, Parity::Odd) => st.sin(),
        (Regime::Oscillatory, Parity::Even) => st.cos(),
        (Regime::Evanescent, Parity::Odd) => st.sinh(),
        (Regime::Evanescent, Parity::Even) => st.cosh(),
    }
}

/// ∫₀¹ φ(st)² dt in closed form.
fn inner_integral(parity: Parity, state: &MatchingState) -> f64 {
    let s = state.q_or_k;
    let x2 = s * s;
    match (state.regime, parity) {
        (Regime::Oscillatory, Parity::Odd) if s < 1e-2 => x2 / 3.0 - x2 * x2 / 15.0 + 2.0 * x2 * x2 * x2 / 315.0,
        (Regime::Evanescent, Parity::Odd) if s < 1e-2 => x2 / 3.0 + x2 * x2 / 15.0 + 2.0 * x2 * x2 * x2 / 315.0,
        (Regime::Oscillatory, Parity::Odd) => 0.5 - (2.0 * s).sin() / (4.0 * s),
        (Regime::Oscillatory, Parity::Even) if s == 0.0 => 1.0,
        (Regime::Oscillatory, Parity::Even) => 0.5 + (2.0 * s).sin() / (4.0 * s),
        (Regime::Evanescent, Parity::Odd) => (2.0 * s).sinh() / (4.0 * s) - 0.5,
        (Regime::Evanescent, Parity::Even) if s == 0.0 => 1.0,
        (Regime::Evanescent, Parity::Even) => (2.0 * s).sinh() / (4.0 * s) + 0.5,
    }
}

impl PiecewiseWaveFunction {
    fn outer_args(&self, y: f64) -> HypergeomArgs {
        hyper_args(self.solution.nu, self.solution.kappa, y * y)
    }

    /// ψ(x) for |x| ≥ δ from the region-II closure, as ψ(δ)·(y/δ)^ν e^{−(y²−δ²)/2} U(y²)/U(δ²).
    pub fn outer_value(&self, x: f64) -> Result<f64> {
        let y = x.abs();
        let d = self.matching_point;
        let ratio = tricomi_u_ratio(self.outer_args(y), self.outer_args(d))?;
        let nu = self.solution.nu;
        let anchor = self.inner_coeff * inner_shape(self.solution.label.parity, &self.state, 1.0);
        let l = ratio.log_scale + nu * (y / d).ln() - 0.5 * (y - d) * (y + d);
        let v = anchor * ratio.mantissa * l.exp();
        Ok(self.parity_sign(x) * v)
    }

    /// δ-scaled interior log-derivative ψ'/ψ at |x| ≤ δ, x > 0.
    pub fn inner_log_derivative(&self, x: f64) -> f64 {
        let q = self.state.q_or_k / self.matching_point;
        let st = q * x.abs();
        let r = match (self.state.regime, self.solution.label.parity) {
            (Regime::Oscillatory, Parity::Odd) => q / st.tan(),
            (Regime::Oscillatory, Parity::Even) => -q * st.tan(),
            (Regime::Evanescent, Parity::Odd) => q / st.tanh(),
            (Regime::Evanescent, Parity::Even) => q * st.tanh(),
        };
        r * x.signum()
    }

    /// ψ(x) for |x| ≤ δ from the region-I closure.
    pub fn inner_value(&self, x: f64) -> f64 {
        let t = x.abs() / self.matching_point;
        self.parity_sign(x) * self.inner_coeff * inner_shape(self.solution.label.parity, &self.state, t)
    }

    fn parity_sign(&self, x: f64) -> f64 {
        match self.solution.label.parity {
            Parity::Even => 1.0,
            Parity::Odd => {
                if x < 0.0 {
                    -1.0
                } else {
                    1.0
                }
            }
        }
    }

    pub fn value(&self, x: f64) -> Result<f64> {
        if x.abs() <= self.matching_point {
            Ok(self.inner_value(x))
        } else {
            self.outer_value(x)
        }
    }

    pub fn sample(&self, xs: &[f64]) -> Result<Vec<f64>> {
        xs.iter().map(|&x| self.value(x)).collect()
    }
}

/// Log of the outer normalization integrand, relative to its value at y = δ.
fn outer_log_density(nu: f64, kappa: f64, delta: f64, y: f64) -> Result<f64> {
    let r = tricomi_u_ratio(hyper_args(nu, kappa, y * y), hyper_args(nu, kappa, delta * delta))?;
    if r.mantissa == 0.0 {
        return Ok(f64::NEG_INFINITY);
    }
    Ok(2.0 * nu * (y / delta).ln() - (y - delta) * (y + delta) + 2.0 * r.ln_abs())
}

/// Normalized wavefunction for a solution returned by this module.
pub fn build_wavefunction(spec: &PotentialSpec, solution: &EigenSolution) -> Result<PiecewiseWaveFunction> {
    let delta = spec.require_delta()?;
    let nu = solution.nu;
    let kappa = solution.kappa;
    let parity = solution.label.parity;
    let state = matching_state(spec, kappa)?;
    let u_delta = tricomi_u_scaled(hyper_args(nu, kappa, delta * delta))?;

    // Breakpoints: geometric from δ, then linear steps on the oscillation/decay scale.
    let decay = 1.0 / (2.0 * kappa.abs() + 1.0).sqrt();
    let turning = (2.0 * kappa + 1.0).max(0.0).sqrt();
    let mut pts = vec![delta];
    let mut peak = 0.0f64;
    let mut y = delta;
    let mut cutoff = None;
    let floor = (1e-18f64).ln();
    for _ in 0..20_000 {
        let step_geo = 0.5 * y;
        let step_lin = 0.25 * decay.min(1.0);
        y += step_geo.min(step_lin);
        let ld = outer_log_density(nu, kappa, delta, y)?;
        peak = peak.max(ld);
        pts.push(y);
        if y > turning && ld < peak + floor {
            cutoff = Some(y);
            break;
        }
    }
    let cutoff = cutoff.ok_or(Error::Quadrature {
        requested: 1e-18,
        achieved: f64::NAN,
    })?;
    let density = |y: f64| {
        outer_log_density(nu, kappa, delta, y)
            .map(|l| (l - peak).exp())
            .unwrap_or(f64::NAN)
    };
    // U carries ~1e-14 relative noise, which can stall the 1e-12 target on narrow peaks.
    let outer = match integrate_points(density, &pts, QuadOptions::rel(1e-12)) {
        Err(Error::Quadrature { .. }) => integrate_points(density, &pts, QuadOptions::rel(1e-10))?,
        other => other?,
    };
    let peak_scale = peak.exp();
    let outer_integral = outer.value * peak_scale;
    let inner = inner_integral(parity, &state);
    let phi = inner_shape(parity, &state, 1.0);
    // 1/A² = 2[δ·∫₀¹φ² + φ(s)² ∫_δ^∞ ...]
    let inner_coeff = (1.0 / (2.0 * (delta * inner + phi * phi * outer_integral))).sqrt();
    // B_II = A φ(s) / (δ^ν e^{−δ²/2} U(a,b,δ²))
    let outer_coeff = Scaled::new(
        inner_coeff * phi / u_delta.mantissa,
        -u_delta.log_scale - nu * delta.ln() + 0.5 * delta * delta,
    );
    Ok(PiecewiseWaveFunction {
        spec: *spec,
        solution: *solution,
        inner_coeff,
        outer_coeff,
        matching_point: delta,
        state,
        norm: NormReport {
            inner_integral: inner,
            outer_integral,
            outer_abs_error: outer.abs_error * peak_scale,
            outer_cutoff: cutoff,
        },
        u_at_delta: u_delta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reg(alpha: f64, delta: f64) -> PotentialSpec {
        PotentialSpec::regularized(alpha, delta).unwrap()
    }

    #[test]
    fn residual_brackets_unreg_level() {
        let s = reg(0.1, 1e-3);
        let k = solve_excited(&s, Parity::Odd, 1).unwrap().kappa;
        let lo = eig_condition_residual(&s, Parity::Odd, k - 1e-7).unwrap();
        let hi = eig_condition_residual(&s, Parity::Odd, k + 1e-7).unwrap();
        assert!(lo.residual.signum() != hi.residual.signum());
        let at = eig_condition_residual(&s, Parity::Odd, k).unwrap();
        assert!(at.residual.abs() < 1e-6 * at.rhs.abs());
    }

    #[test]
    fn pole_is_flagged() {
        let (alpha, delta) = (-0.1, 0.01);
        let s = reg(alpha, delta);
        // s = π/2  ⇒  (2κ+1)δ² = π²/4 + δ⁴ + α
        let target = std::f64::consts::FRAC_PI_2;
        let kappa = ((target * target + delta.powi(4) + alpha) / (delta * delta) - 1.0) / 2.0;
        let r = eig_condition_residual(&s, Parity::Even, kappa).unwrap();
        assert!(r.pole);
    }

    #[test]
    fn odd_ground_of_positive_alpha() {
        let s = reg(0.1, 1e-4);
        let sol = solve_excited(&s, Parity::Odd, 0).unwrap();
        assert!((sol.kappa - sol.nu).abs() < 1e-5);
        assert!(sol.kappa < sol.nu);
        assert_eq!(sol.energy, sol.kappa + 0.5);
    }

    #[test]
    fn shooting_agrees_with_exact_solver() {
        // Above −1/4 the shooting route must reproduce the hypergeometric one.
        let s = PotentialSpec::regularized_experimental(-0.1, 0.01).unwrap();
        let roots = solve_experimental(&s, 4.0).unwrap();
        let exact = reg(-0.1, 0.01);
        let g = solve_ground_even(&exact).unwrap().kappa;
        let o1 = solve_excited(&exact, Parity::Odd, 1).unwrap().kappa;
        assert!(roots.iter().any(|r| (r.kappa / g - 1.0).abs() < 1e-6), "{roots:?}");
        assert!(roots.iter().any(|r| (r.kappa - o1).abs() < 1e-6));
        assert!(roots.iter().all(|r| r.experimental));
    }

    #[test]
    fn ground_state_table_value() {
        let s = reg(-0.05, 0.002);
        let sol = solve_ground_even(&s).unwrap();
        assert!((sol.energy / -828.489_889_4 - 1.0).abs() < 1e-6, "{}", sol.energy);
        assert_eq!(matching_state(&s, sol.kappa).unwrap().regime, Regime::Oscillatory);
    }
}
