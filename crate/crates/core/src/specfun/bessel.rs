//! Modified Bessel functions I_λ and K_λ of real order and positive argument.

use std::f64::consts::PI;

use super::gamma::{rgamma, sin_pi};
use crate::error::{Error, Result};

const EPS: f64 = 1e-16;
const MAX_ITER: usize = 100_000;

/// Order and argument of a modified Bessel function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselOrderArg {
    pub order: f64,
    pub z: f64,
}

impl BesselOrderArg {
    pub fn new(order: f64, z: f64) -> Result<Self> {
        if !(z > 0.0) || !z.is_finite() || !order.is_finite() {
            return Err(Error::Domain(format!(
                "Bessel argument must be finite and positive (order {order}, z {z})"
            )));
        }
        Ok(Self { order, z })
    }
}

/// Taylor coefficients of 1/Γ(x) about 0 (c_1 .. c_26).
const RGAMMA_TAYLOR: [f64; 26] = [
    1.0,
    0.577_215_664_901_532_9,
    -0.655_878_071_520_253_8,
    -0.042_002_635_034_095_2,
    0.166_538_611_382_291_5,
    -0.042_197_734_555_544_3,
    -0.009_621_971_527_877_0,
    0.007_218_943_246_663_0,
    -0.001_165_167_591_859_1,
    -0.000_215_241_674_114_9,
    0.000_128_050_282_388_2,
    -0.000_020_134_854_780_7,
    -0.000_001_250_493_482_1,
    0.000_001_133_027_232_0,
    -0.000_000_205_633_841_7,
    0.000_000_006_116_095_0,
    0.000_000_005_002_007_5,
    -0.000_000_001_181_274_6,
    0.000_000_000_104_342_7,
    0.000_000_000_007_782_3,
    -0.000_000_000_003_696_8,
    0.000_000_000_000_510_0,
    -0.000_000_000_000_020_6,
    -0.000_000_000_000_005_4,
    0.000_000_000_000_001_4,
    0.000_000_000_000_000_1,
];

/// Returns (gam1, gam2, 1/Γ(1+μ), 1/Γ(1−μ)) for |μ| ≤ 1/2.
fn temme_gammas(mu: f64) -> (f64, f64, f64, f64) {
    let m2 = mu * mu;
    let mut gam1 = 0.0;
    let mut gam2 = 0.0;
    // Horner over the even (gam1) and odd (gam2) indexed coefficients.
    for k in (0..13).rev() {
        gam1 = gam1 * m2 - RGAMMA_TAYLOR[2 * k + 1];
        gam2 = gam2 * m2 + RGAMMA_TAYLOR[2 * k];
    }
    (gam1, gam2, gam2 - mu * gam1, gam2 + mu * gam1)
}

/// e^x·(K_μ(x), K_{μ+1}(x)) for |μ| ≤ 1/2.
fn k_pair_scaled(mu: f64, x: f64) -> Result<(f64, f64)> {
    if x < 2.0 {
        let x2 = 0.5 * x;
        let pimu = PI * mu;
        let fact = if pimu.abs() < EPS { 1.0 } else { pimu / pimu.sin() };
        let d = -x2.ln();
        let e = mu * d;
        let fact2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
        let (gam1, gam2, gampl, gammi) = temme_gammas(mu);
        let mut ff = fact * (gam1 * e.cosh() + gam2 * fact2 * d);
        let mut sum = ff;
        let ee = e.exp();
        let mut p = 0.5 * ee / gampl;
        let mut q = 0.5 / (ee * gammi);
        let mut c = 1.0;
        let dd = x2 * x2;
        let mut sum1 = p;
        let mu2 = mu * mu;
        let mut converged = false;
        for i in 1..MAX_ITER {
            let fi = i as f64;
            ff = (fi * ff + p + q) / (fi * fi - mu2);
            c *= dd / fi;
            p /= fi - mu;
            q /= fi + mu;
            let del = c * ff;
            sum += del;
            let del1 = c * (p - fi * ff);
            sum1 += del1;
            if del.abs() < sum.abs() * EPS {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NonConvergence {
                function: "bessel_k (Temme series)",
                terms: MAX_ITER,
            });
        }
        let scale = x.exp();
        Ok((sum * scale, sum1 * (2.0 / x) * scale))
    } else {
        let mut b = 2.0 * (1.0 + x);
        let mut d = 1.0 / b;
        let mut h = d;
        let mut delh = d;
        let mut q1 = 0.0;
        let mut q2 = 1.0;
        let a1 = 0.25 - mu * mu;
        let mut q = a1;
        let mut c = a1;
        let mut a = -a1;
        let mut s = 1.0 + q * delh;
        let mut converged = false;
        for i in 2..MAX_ITER {
            let fi = i as f64;
            a -= 2.0 * (fi - 1.0);
            c = -a * c / fi;
            let qnew = (q1 - b * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += c * qnew;
            b += 2.0;
            d = 1.0 / (b + a * d);
            delh *= b * d - 1.0;
            h += delh;
            let dels = q * delh;
            s += dels;
            if (dels / s).abs() < EPS {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NonConvergence {
                function: "bessel_k (Steed continued fraction)",
                terms: MAX_ITER,
            });
        }
        let h = a1 * h;
        let k_mu = (PI / (2.0 * x)).sqrt() / s;
        let k_mu1 = k_mu * (mu + x + 0.5 - h) / x;
        Ok((k_mu, k_mu1))
    }
}

fn half_integer_scaled(n: usize, x: f64) -> f64 {
    // K_{n+1/2}(x) e^x = √(π/2x) Σ_k (n+k)!/(k!(n-k)!) (2x)^{-k}
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..=n {
        let kf = k as f64;
        term *= ((n + k) as f64) * ((n + 1 - k) as f64) / (kf * 2.0 * x);
        sum += term;
    }
    (PI / (2.0 * x)).sqrt() * sum
}

fn hankel_scaled(order: f64, x: f64) -> Option<f64> {
    let m = 4.0 * order * order;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..60 {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        let next = term * (m - odd * odd) / (kf * 8.0 * x);
        if next.abs() > term.abs() {
            return None;
        }
        term = next;
        sum += term;
        if term.abs() < EPS * sum.abs() {
            return Some((PI / (2.0 * x)).sqrt() * sum);
        }
    }
    None
}

/// e^z·K_λ(z).
pub fn bessel_k_scaled(arg: BesselOrderArg) -> Result<f64> {
    let order = arg.order.abs();
    let x = arg.z;
    let twice = 2.0 * order;
    if twice == twice.round() && twice.round() as i64 % 2 == 1 && order < 50.0 {
        return Ok(half_integer_scaled((order - 0.5).round() as usize, x));
    }
    if x >= 50.0 {
        if let Some(v) = hankel_scaled(order, x) {
            return Ok(v);
        }
    }
    let nl = (order + 0.5).floor();
    let mu = order - nl;
    let (mut k0, mut k1) = k_pair_scaled(mu, x)?;
    for i in 1..=(nl as usize) {
        let k2 = (mu + i as f64) * (2.0 / x) * k1 + k0;
        k0 = k1;
        k1 = k2;
    }
    Ok(k0)
}

/// K_λ(z).
pub fn bessel_k(arg: BesselOrderArg) -> Result<f64> {
    let scaled = bessel_k_scaled(arg)?;
    let v = scaled * (-arg.z).exp();
    if v == 0.0 && scaled != 0.0 {
        return Err(Error::Range {
            function: "bessel_k",
            log_magnitude: scaled.ln() - arg.z,
            threshold: f64::MIN_POSITIVE.ln(),
        });
    }
    Ok(v)
}

/// I_λ(z) by its power series (λ real, z moderate).
pub fn bessel_i(arg: BesselOrderArg) -> Result<f64> {
    let (lambda, x) = (arg.order, arg.z);
    if lambda < 0.0 && lambda == lambda.round() {
        return bessel_i(BesselOrderArg { order: -lambda, z: x });
    }
    let q = 0.25 * x * x;
    let mut sum = 0.0;
    let mut term = rgamma(lambda + 1.0);
    let mut k = 0usize;
    loop {
        sum += term;
        k += 1;
        if k > 1_000_000 {
            return Err(Error::NonConvergence {
                function: "bessel_i",
                terms: k,
            });
        }
        term *= q / (k as f64 * (k as f64 + lambda));
        if term.abs() < EPS * sum.abs() && k as f64 > q.sqrt() {
            break;
        }
    }
    Ok(sum * (0.5 * x).powf(lambda))
}

/// K_λ(z) from π/2 · (I_{−λ} − I_λ)/sin(λπ). Refuses orders within 1e-3 of an integer.
pub fn bessel_k_from_i(arg: BesselOrderArg) -> Result<f64> {
    let s = sin_pi(arg.order);
    if s.abs() < PI * 1e-3 {
        return Err(Error::OrderNearInteger { order: arg.order });
    }
    let ip = bessel_i(arg)?;
    let im = bessel_i(BesselOrderArg {
        order: -arg.order,
        z: arg.z,
    })?;
    Ok(0.5 * PI * (im - ip) / s)
}
