//! Generalized Laguerre polynomials.

use crate::error::{Error, Result};

pub const MAX_DEGREE: usize = 200;

/// L_n^{(λ)}(x) by the three-term recurrence in n.
pub fn laguerre(n: usize, lambda: f64, x: f64) -> Result<f64> {
    if n > MAX_DEGREE {
        return Err(Error::Domain(format!("Laguerre degree {n} exceeds {MAX_DEGREE}")));
    }
    if !(lambda > -1.0) || !(x >= 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!(
            "Laguerre needs lambda > -1 and finite x >= 0 (lambda {lambda}, x {x})"
        )));
    }
    let mut prev = 1.0;
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = 1.0 + lambda - x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + lambda - x) * cur - (kf + lambda) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degrees() {
        assert_eq!(laguerre(0, 0.3, 2.0).unwrap(), 1.0);
        assert!((laguerre(1, 0.5, 0.8).unwrap() - 0.7).abs() < 1e-15);
        // L_2^{(1/2)}(w) = 15/8 - 5w/2 + w²/2
        let w = 1.3;
        let exact = 15.0 / 8.0 - 2.5 * w + 0.5 * w * w;
        assert!((laguerre(2, 0.5, w).unwrap() - exact).abs() < 1e-14);
    }

    #[test]
    fn value_at_origin_is_binomial() {
        // L_n^{(λ)}(0) = Γ(n+λ+1)/(n! Γ(λ+1))
        let (n, lambda) = (7usize, 0.37);
        let mut expected = 1.0;
        for k in 1..=n {
            expected *= (k as f64 + lambda) / k as f64;
        }
        assert!((laguerre(n, lambda, 0.0).unwrap() - expected).abs() < 1e-13 * expected);
    }

    #[test]
    fn domain() {
        assert!(laguerre(201, 0.0, 1.0).is_err());
        assert!(laguerre(2, -1.0, 1.0).is_err());
        assert!(laguerre(2, 0.0, -1.0).is_err());
    }
}
