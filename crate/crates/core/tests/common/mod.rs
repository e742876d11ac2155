//! Independent oracles for the integration tests.
//!
//! Quadrature here is double-exponential (tanh-sinh / exp-sinh) so that it shares no code
//! with the library's Gauss–Kronrod integrator.

#![allow(dead_code)]

use std::f64::consts::PI;

use pseudoharm_core::regspec::build_wavefunction;
use pseudoharm_core::specfun::{tricomi_u_scaled, HypergeomArgs};
use pseudoharm_core::{EigenSolution, PotentialSpec};

pub fn rel_err(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        ((got - want) / want).abs()
    }
}

/// Tanh-sinh quadrature on [a, b], refined by halving the step until two levels agree.
pub fn tanh_sinh<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel_tol: f64) -> f64 {
    let r = 0.5 * (b - a);
    let t_max = 4.0;
    let mut h = 0.5;
    let eval = |t: f64| -> f64 {
        let s = 0.5 * PI * t.sinh();
        let w = 0.5 * PI * t.cosh() / s.cosh().powi(2);
        // Distance to the nearer endpoint, computed without cancellation.
        let gap = r / (s.abs().exp() * s.cosh());
        let x = if t >= 0.0 { b - gap } else { a + gap };
        if gap == 0.0 || !(x > a && x < b) || w == 0.0 {
            return 0.0;
        }
        r * w * f(x)
    };
    let mut sum = eval(0.0);
    let mut k = 1;
    while (k as f64) * h <= t_max {
        let t = k as f64 * h;
        sum += eval(t) + eval(-t);
        k += 1;
    }
    let mut prev = sum * h;
    for _ in 0..9 {
        h *= 0.5;
        let mut k = 1;
        while (k as f64) * h <= t_max {
            let t = k as f64 * h;
            sum += eval(t) + eval(-t);
            k += 2;
        }
        let cur = sum * h;
        if (cur - prev).abs() <= rel_tol * cur.abs() {
            return cur;
        }
        prev = cur;
    }
    prev
}

/// Tanh-sinh over consecutive breakpoints.
pub fn tanh_sinh_points<F: Fn(f64) -> f64>(f: F, points: &[f64], rel_tol: f64) -> f64 {
    points.windows(2).map(|w| tanh_sinh(&f, w[0], w[1], rel_tol)).sum()
}

/// Exp-sinh quadrature on [a, ∞) for integrands with exponential decay.
pub fn exp_sinh<F: Fn(f64) -> f64>(f: F, a: f64, rel_tol: f64) -> f64 {
    let eval = |t: f64| -> f64 {
        let s = 0.5 * PI * t.sinh();
        let x = a + s.exp();
        let w = 0.5 * PI * t.cosh() * s.exp();
        let v = f(x);
        if v == 0.0 || !w.is_finite() {
            0.0
        } else {
            w * v
        }
    };
    let (t_lo, t_hi) = (-4.5, 4.0);
    let mut h = 0.25;
    let level = |h: f64, offset: bool| -> f64 {
        let start = if offset { t_lo + h } else { t_lo };
        let step = if offset { 2.0 * h } else { h };
        let mut t = start;
        let mut s = 0.0;
        while t <= t_hi {
            s += eval(t);
            t += step;
        }
        s
    };
    let mut sum = level(h, false);
    let mut prev = sum * h;
    for _ in 0..12 {
        h *= 0.5;
        sum += level(h, true);
        let cur = sum * h;
        if (cur - prev).abs() <= rel_tol * cur.abs() {
            return cur;
        }
        prev = cur;
    }
    prev
}

/// K_λ(z) = ∫₀^∞ e^{−z cosh t} cosh(λt) dt.
pub fn bessel_k_integral(lambda: f64, z: f64) -> f64 {
    let t_end = (2.0 * (40.0 / z + 1.0)).ln().max(1.0) + 2.0;
    tanh_sinh(|t| (-z * t.cosh()).exp() * (lambda * t).cosh(), 0.0, t_end, 1e-14)
}

/// Si(z) = ∫₀^z sin t / t dt.
pub fn sine_integral_quad(z: f64) -> f64 {
    tanh_sinh(|t| if t == 0.0 { 1.0 } else { t.sin() / t }, 0.0, z, 1e-15)
}

/// Lₙ^(λ)(x) from the explicit sum Σ_k (−1)^k C(n+λ, n−k) x^k / k!, plus the sum of |terms|.
pub fn laguerre_sum(n: usize, lambda: f64, x: f64) -> (f64, f64) {
    let mut total = 0.0;
    let mut scale = 0.0;
    for k in 0..=n {
        // C(n+λ, n−k) = Π_{j=1}^{n−k} (k+λ+j)/j
        let mut binom = 1.0;
        for j in 1..=(n - k) {
            binom *= (k as f64 + lambda + j as f64) / j as f64;
        }
        let mut term = binom;
        for j in 1..=k {
            term *= x / j as f64;
        }
        if k % 2 == 1 {
            term = -term;
        }
        total += term;
        scale += term.abs();
    }
    (total, scale)
}

pub fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Five-point centred second derivative.
pub fn second_derivative<F: Fn(f64) -> f64>(f: &F, x: f64, h: f64) -> f64 {
    (-f(x + 2.0 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2.0 * h)) / (12.0 * h * h)
}

/// Five-point centred first derivative.
pub fn first_derivative<F: Fn(f64) -> f64>(f: &F, x: f64, h: f64) -> f64 {
    (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) / (12.0 * h)
}

/// H_{nm}/E₁ in the sine basis of width a = π√(ρ/2), by direct quadrature of the
/// regularized potential centred in the well.
pub fn matrix_element_quadrature(alpha: f64, rho: f64, epsilon: f64, n: usize, m: usize) -> f64 {
    let a = PI * (rho / 2.0).sqrt();
    let e1 = PI * PI / (2.0 * a * a);
    let delta = epsilon * a / 2.0;
    let v = |x: f64| {
        let u = (x - a / 2.0).abs().max(delta);
        0.5 * u * u + alpha / (2.0 * u * u)
    };
    let phi = |k: usize, x: f64| (2.0 / a).sqrt() * (k as f64 * PI * x / a).sin();
    // Break at the cutoff kinks and at every node period to keep panels smooth.
    let mut pts = vec![0.0, a / 2.0 - delta, a / 2.0 + delta, a];
    let nodes = n.max(m).max(1);
    for i in 1..(2 * nodes) {
        pts.push(a * i as f64 / (2 * nodes) as f64);
    }
    pts.sort_by(f64::total_cmp);
    pts.dedup_by(|x, y| (*x - *y).abs() < 1e-14);
    let pot = tanh_sinh_points(|x| phi(n, x) * v(x) * phi(m, x), &pts, 1e-13) / e1;
    let kin = if n == m { (n * n) as f64 } else { 0.0 };
    kin + pot
}

/// Forward five-point derivative.
pub fn forward_derivative<F: Fn(f64) -> f64>(f: &F, x: f64, h: f64) -> f64 {
    (-25.0 * f(x) + 48.0 * f(x + h) - 36.0 * f(x + 2.0 * h) + 16.0 * f(x + 3.0 * h) - 3.0 * f(x + 4.0 * h)) / (12.0 * h)
}

/// Checks applied to every state of the wavefunction suite.
pub struct WaveChecks {
    pub norm_error: f64,
    pub value_jump: f64,
    pub log_derivative_jump: f64,
}

pub fn check_wavefunction(spec: &PotentialSpec, sol: &EigenSolution) -> WaveChecks {
    let wf = build_wavefunction(spec, sol).unwrap();
    let d = wf.matching_point;
    // Outer value at δ rebuilt from B_II δ^ν e^{−δ²/2} U(a,b,δ²), bypassing the ratio path.
    let u = tricomi_u_scaled(HypergeomArgs::new(0.5 * (sol.nu - sol.kappa), sol.nu + 0.5, d * d).unwrap()).unwrap();
    let log_outer = wf.outer_coeff.log_scale + u.log_scale + sol.nu * d.ln() - 0.5 * d * d;
    let outer_at_d = wf.outer_coeff.mantissa * u.mantissa * log_outer.exp();
    let inner_at_d = wf.inner_value(d);
    let value_jump = ((outer_at_d - inner_at_d) / inner_at_d).abs();

    let width = if sol.kappa < 0.0 {
        1.0 / (2.0 * sol.kappa.abs()).sqrt()
    } else {
        1.0
    };
    let h = 1e-3 * d.min(width);
    let outer = |x: f64| wf.value(x).unwrap();
    let lo = forward_derivative(&outer, d, h) / outer(d);
    let li = wf.inner_log_derivative(d);
    let scale = li.abs().max(1.0 / d.max(width));
    let log_derivative_jump = (lo - li).abs() / scale;

    // Norm by an independent quadrature over geometrically spaced panels.
    let mut pts = vec![0.0, d];
    let mut x = d;
    while x < 12.0 {
        x = (2.0 * x).min(x + width.max(d)).max(x + 1e-3 * width);
        pts.push(x.min(12.0));
    }
    let norm = 2.0 * tanh_sinh_points(|x| wf.value(x).unwrap().powi(2), &pts, 1e-10);
    WaveChecks {
        norm_error: (norm - 1.0).abs(),
        value_jump,
        log_derivative_jump,
    }
}
