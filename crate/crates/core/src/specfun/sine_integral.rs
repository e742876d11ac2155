//! Sine integral Si(z) = ∫₀^z sin t / t dt.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

const SERIES_LIMIT: f64 = 4.0;

/// Si(z) for real z (odd extension for z < 0).
pub fn sine_integral(z: f64) -> f64 {
    if z < 0.0 {
        return -sine_integral(-z);
    }
    if z == 0.0 {
        return 0.0;
    }
    if z < SERIES_LIMIT {
        let z2 = z * z;
        let mut term = z;
        let mut sum = z;
        for k in 1..100 {
            let kf = k as f64;
            term *= -z2 / ((2.0 * kf) * (2.0 * kf + 1.0));
            let add = term / (2.0 * kf + 1.0);
            sum += add;
            if add.abs() < 1e-17 * sum.abs() {
                break;
            }
        }
        return sum;
    }
    // E1(iz) = -Ci(z) + i(Si(z) - π/2) via the Lentz continued fraction.
    let b0 = Complex64::new(1.0, z);
    let mut b = b0;
    let mut c = Complex64::new(1.0 / f64::MIN_POSITIVE, 0.0);
    let mut d = Complex64::new(1.0, 0.0) / b;
    let mut h = d;
    for i in 2..10_000 {
        let a = -((i - 1) as f64).powi(2);
        b += Complex64::new(2.0, 0.0);
        d = Complex64::new(1.0, 0.0) / (d * a + b);
        c = b + Complex64::new(a, 0.0) / c;
        let del = c * d;
        h *= del;
        if (del.re - 1.0).abs() + del.im.abs() < 1e-16 {
            break;
        }
    }
    let phase = Complex64::new(z.cos(), -z.sin());
    let h = h * phase;
    FRAC_PI_2 + h.im
}
