//! Gamma function, its logarithm and reciprocal.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

/// `sin(πx)` with exact zeros at integers.
pub fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).floor();
    // r in [0, 2)
    let (r, sign) = if r >= 1.0 { (r - 1.0, -1.0) } else { (r, 1.0) };
    let v = if r == 0.0 {
        0.0
    } else if r <= 0.25 {
        (PI * r).sin()
    } else if r <= 0.75 {
        (PI * (0.5 - r)).cos()
    } else {
        (PI * (1.0 - r)).sin()
    };
    sign * v
}

/// `cos(πx)` with exact zeros at half-integers.
pub fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}

fn lanczos_sum(x: f64) -> f64 {
    // x >= 0.5, evaluated at x-1 in the usual form
    let xm = x - 1.0;
    let mut s = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        s += c / (xm + i as f64);
    }
    s
}

/// Γ(x). Overflow above x ≈ 171.6 is reported as a range error.
pub fn gamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("gamma of non-finite argument {x}")));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole {
            function: "gamma",
            at: x,
        });
    }
    if x < 0.5 {
        let g = gamma(1.0 - x)?;
        return Ok(PI / (sin_pi(x) * g));
    }
    if x > 171.5 {
        return Err(Error::Range {
            function: "gamma",
            log_magnitude: ln_gamma(x),
            threshold: f64::MAX.ln(),
        });
    }
    if x == x.round() && x <= 23.0 {
        let mut f = 1.0;
        for k in 2..(x as u32) {
            f *= k as f64;
        }
        return Ok(f);
    }
    let t = x - 0.5 + LANCZOS_G;
    // Split the power to delay overflow for x near 171.
    let p = t.powf(0.5 * (x - 0.5));
    Ok((2.0 * PI).sqrt() * p * (p * (-t).exp()) * lanczos_sum(x))
}

fn stirling_ln_gamma(x: f64) -> f64 {
    let r = 1.0 / x;
    let r2 = r * r;
    let series = r
        * (1.0 / 12.0
            + r2 * (-1.0 / 360.0
                + r2 * (1.0 / 1260.0
                    + r2 * (-1.0 / 1680.0 + r2 * (1.0 / 1188.0 + r2 * (-691.0 / 360_360.0 + r2 / 156.0))))));
    (x - 0.5) * x.ln() - x + LN_SQRT_2PI + series
}

/// ln|Γ(x)|; `+∞` at the poles.
pub fn ln_gamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return f64::INFINITY;
    }
    if x < 0.5 {
        return (PI / sin_pi(x).abs()).ln() - ln_gamma(1.0 - x);
    }
    if x >= 10.0 {
        return stirling_ln_gamma(x);
    }
    let t = x - 0.5 + LANCZOS_G;
    LN_SQRT_2PI + (x - 0.5) * t.ln() - t + lanczos_sum(x).ln()
}

/// Sign of Γ(x) (zero at the poles).
pub fn gamma_sign(x: f64) -> f64 {
    if x > 0.0 {
        return 1.0;
    }
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    // Γ(x) for x in (-k-1, -k) has sign (-1)^(k+1).
    let k = (-x).floor();
    if (k as i64) % 2 == 0 {
        -1.0
    } else {
        1.0
    }
}

/// 1/Γ(x), zero at the poles.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x > 0.5 && x < 171.0 {
        if let Ok(g) = gamma(x) {
            return 1.0 / g;
        }
    }
    if x < 0.5 {
        // Reflection: 1/Γ(x) = sin(πx) Γ(1-x) / π.
        let s = sin_pi(x);
        let l = ln_gamma(1.0 - x);
        return s * (l - PI.ln()).exp();
    }
    (-ln_gamma(x)).exp()
}

/// ln Γ(1+s) − ln Γ(1−s), accurate for small |s|.
pub fn ln_gamma_ratio_symmetric(s: f64) -> f64 {
    if s.abs() < 0.2 {
        // -2γs - 2 Σ_{k odd ≥ 3} ζ(k) s^k / k
        const ZETA_ODD: [f64; 12] = [
            1.202_056_903_159_594_3,
            1.036_927_755_143_369_9,
            1.008_349_277_381_922_8,
            1.002_008_392_826_082_2,
            1.000_494_188_604_119_5,
            1.000_122_713_347_578_5,
            1.000_030_588_236_307_0,
            1.000_007_637_197_637_9,
            1.000_001_908_212_716_6,
            1.000_000_476_932_986_8,
            1.000_000_119_209_736_8,
            1.000_000_029_803_503_5,
        ];
        let s2 = s * s;
        let mut sk = s * s2;
        let mut sum = 0.0;
        for (i, z) in ZETA_ODD.iter().enumerate() {
            let k = (2 * i + 3) as f64;
            sum += z * sk / k;
            sk *= s2;
        }
        return -2.0 * EULER_GAMMA * s - 2.0 * sum;
    }
    ln_gamma(1.0 + s) - ln_gamma(1.0 - s)
}
