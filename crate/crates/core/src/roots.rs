//! Bracketing and polishing of real roots.

use crate::error::{Error, Result};

/// A bracket `[lo, hi]` with function values of opposite sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

/// Samples `f` on `[lo, hi]` with spacing at most `step` and returns all sign changes.
/// Points where `f` is `None` (e.g. poles) break the scan without creating a bracket.
pub fn scan_sign_changes<F>(mut f: F, lo: f64, hi: f64, step: f64) -> Result<Vec<Bracket>>
where
    F: FnMut(f64) -> Result<Option<f64>>,
{
    let n = ((hi - lo) / step).ceil().max(1.0) as usize;
    let mut out = Vec::new();
    let mut prev: Option<(f64, f64)> = None;
    for i in 0..=n {
        let x = lo + (hi - lo) * i as f64 / n as f64;
        let fx = f(x)?;
        match (prev, fx) {
            (Some((xp, fp)), Some(v)) => {
                if v == 0.0 {
                    out.push(Bracket {
                        lo: x,
                        hi: x,
                        f_lo: 0.0,
                        f_hi: 0.0,
                    });
                } else if fp.signum() != v.signum() && fp != 0.0 {
                    out.push(Bracket {
                        lo: xp,
                        hi: x,
                        f_lo: fp,
                        f_hi: v,
                    });
                }
                prev = Some((x, v));
            }
            (None, Some(v)) => {
                if v == 0.0 {
                    out.push(Bracket {
                        lo: x,
                        hi: x,
                        f_lo: 0.0,
                        f_hi: 0.0,
                    });
                }
                prev = Some((x, v));
            }
            (_, None) => prev = None,
        }
    }
    Ok(out)
}

/// Bisection until the bracket is narrower than `bisect_tol`, then a safeguarded
/// secant iteration until the step falls below `tol`.
pub fn solve_bracketed<F>(mut f: F, bracket: Bracket, bisect_tol: f64, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let Bracket {
        mut lo,
        mut hi,
        mut f_lo,
        mut f_hi,
    } = bracket;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::RootNotConverged(format!(
            "interval [{lo}, {hi}] does not bracket a root"
        )));
    }
    let floor = |x: f64| tol.max(4.0 * f64::EPSILON * x.abs());
    let mut iterations = 0;
    while hi - lo > bisect_tol.max(floor(lo)) {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == f_lo.signum() {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
            f_hi = fm;
        }
        iterations += 1;
        if iterations > 400 {
            return Err(Error::RootNotConverged("bisection stalled".into()));
        }
    }
    // Secant on the bracket, falling back to bisection whenever the step leaves it.
    let mut x = lo - f_lo * (hi - lo) / (f_hi - f_lo);
    for _ in 0..100 {
        if !(x > lo && x < hi) {
            x = 0.5 * (lo + hi);
        }
        let fx = f(x)?;
        if fx == 0.0 {
            return Ok(x);
        }
        if fx.signum() == f_lo.signum() {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
            f_hi = fx;
        }
        let next = lo - f_lo * (hi - lo) / (f_hi - f_lo);
        if (next - x).abs() <= floor(x) || hi - lo <= floor(x) {
            return Ok(next.clamp(lo, hi));
        }
        x = next;
    }
    Err(Error::RootNotConverged(format!(
        "secant polish did not reach {tol:e} in [{lo}, {hi}]"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_cosine_roots() {
        let br = scan_sign_changes(|x: f64| Ok(Some(x.cos())), 0.0, 10.0, 0.05).unwrap();
        assert_eq!(br.len(), 3);
        let r = solve_bracketed(|x: f64| Ok(x.cos()), br[1], 1e-8, 1e-14).unwrap();
        assert!((r - 1.5 * std::f64::consts::PI).abs() < 1e-13);
    }

    #[test]
    fn poles_do_not_bracket() {
        // tan changes sign across its pole at π/2; flagging the pole removes the false bracket.
        let f = |x: f64| {
            let c = x.cos();
            Ok(if c.abs() < 0.05 { None } else { Some(x.tan()) })
        };
        let br = scan_sign_changes(f, 0.1, 3.0, 0.05).unwrap();
        assert!(br.is_empty());
    }
}
