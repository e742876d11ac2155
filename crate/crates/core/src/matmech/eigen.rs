//! Dense real symmetric eigensolver: Householder tridiagonalization, implicit QL for
//! eigenvalues, and inverse iteration with back-transformation for selected eigenvectors.

use crate::error::{Error, Result};

/// Sweeps allowed per eigenvalue in the QL iteration.
const MAX_QL_ITER: usize = 60;

/// Tridiagonal form T = Qᵀ A Q with the reflectors defining Q.
#[derive(Debug, Clone)]
pub struct Tridiagonal {
    pub diag: Vec<f64>,
    /// off[i] couples i and i+1.
    pub off: Vec<f64>,
    /// Reflector k acts on indices k+1..n; vectors are stored in `reflectors[k*n + k + 1 ..]`.
    reflectors: Vec<f64>,
    betas: Vec<f64>,
    n: usize,
}

/// Reduces the symmetric `n × n` row-major matrix `a` to tridiagonal form in place.
/// Only the upper triangle is read.
pub fn tridiagonalize(mut a: Vec<f64>, n: usize) -> Tridiagonal {
    assert_eq!(a.len(), n * n);
    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n.saturating_sub(1)];
    let mut betas = vec![0.0; n.saturating_sub(1)];
    let mut p = vec![0.0; n];
    let mut w = vec![0.0; n];
    for k in 0..n.saturating_sub(2) {
        let m = n - k - 1;
        let base = k * n + k + 1;
        let x = &a[base..base + m];
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        diag[k] = a[k * n + k];
        if norm == 0.0 {
            off[k] = 0.0;
            betas[k] = 0.0;
            continue;
        }
        let alpha = if x[0] > 0.0 { -norm } else { norm };
        let v0 = x[0] - alpha;
        // vᵀv = |x|² − 2 x₀ α + α²
        let vtv = 2.0 * (norm * norm - x[0] * alpha);
        let beta = 2.0 / vtv;
        a[base] = v0;
        off[k] = alpha;
        betas[k] = beta;
        let (head, tail) = a.split_at_mut((k + 1) * n);
        let v = &head[base..base + m];
        // p = β B v from the upper triangle of the trailing block B.
        let p = &mut p[..m];
        p.iter_mut().for_each(|x| *x = 0.0);
        for i in 0..m {
            let row = &tail[i * n + k + 1..i * n + k + 1 + m];
            let vi = v[i];
            let mut s = row[i] * vi;
            for j in i + 1..m {
                s += row[j] * v[j];
                p[j] += row[j] * vi;
            }
            p[i] += s;
        }
        let mut ptv = 0.0;
        for i in 0..m {
            p[i] *= beta;
            ptv += p[i] * v[i];
        }
        let kk = 0.5 * beta * ptv;
        let w = &mut w[..m];
        for i in 0..m {
            w[i] = p[i] - kk * v[i];
        }
        // B ← B − v wᵀ − w vᵀ on the upper triangle.
        for i in 0..m {
            let row = &mut tail[i * n + k + 1..i * n + k + 1 + m];
            let (vi, wi) = (v[i], w[i]);
            for j in i..m {
                row[j] -= vi * w[j] + wi * v[j];
            }
        }
    }
    if n >= 2 {
        diag[n - 2] = a[(n - 2) * n + n - 2];
        off[n - 2] = a[(n - 2) * n + n - 1];
    }
    if n >= 1 {
        diag[n - 1] = a[(n - 1) * n + n - 1];
    }
    Tridiagonal {
        diag,
        off,
        reflectors: a,
        betas,
        n,
    }
}

impl Tridiagonal {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Max-row-sum norm of T.
    pub fn norm(&self) -> f64 {
        (0..self.n)
            .map(|i| {
                let l = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
                let r = if i + 1 < self.n { self.off[i].abs() } else { 0.0 };
                l + self.diag[i].abs() + r
            })
            .fold(0.0, f64::max)
    }

    /// All eigenvalues in ascending order. `block` labels errors.
    pub fn eigenvalues(&self, block: &'static str) -> Result<Vec<f64>> {
        let mut d = self.diag.clone();
        let mut e = self.off.clone();
        e.push(0.0);
        tql(&mut d, &mut e, block)?;
        d.sort_by(f64::total_cmp);
        Ok(d)
    }

    /// Eigenvector of T for eigenvalue `lambda` by inverse iteration, orthogonalized against `previous`.
    pub fn tridiagonal_eigenvector(&self, lambda: f64, previous: &[Vec<f64>]) -> Vec<f64> {
        let n = self.n;
        let tiny = f64::EPSILON * self.norm().max(f64::MIN_POSITIVE);
        let lu = TriLu::factor(&self.diag, &self.off, lambda, tiny);
        let mut x: Vec<f64> = (0..n).map(|i| 1.0 + 0.1 * ((i * 7 + 3) % 11) as f64 / 11.0).collect();
        for _ in 0..4 {
            lu.solve(&mut x);
            for q in previous {
                let dot: f64 = q.iter().zip(&x).map(|(a, b)| a * b).sum();
                x.iter_mut().zip(q).for_each(|(xi, qi)| *xi -= dot * qi);
            }
            let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            x.iter_mut().for_each(|v| *v /= norm);
        }
        x
    }

    /// Maps an eigenvector of T to one of the original matrix: x = H₀ H₁ ⋯ H_{n−3} y.
    pub fn back_transform(&self, mut y: Vec<f64>) -> Vec<f64> {
        let n = self.n;
        for k in (0..n.saturating_sub(2)).rev() {
            let beta = self.betas[k];
            if beta == 0.0 {
                continue;
            }
            let v = &self.reflectors[k * n + k + 1..k * n + n];
            let tail = &mut y[k + 1..];
            let dot: f64 = v.iter().zip(tail.iter()).map(|(a, b)| a * b).sum();
            let s = beta * dot;
            tail.iter_mut().zip(v).for_each(|(t, vi)| *t -= s * vi);
        }
        y
    }
}

/// Implicit QL with Wilkinson-type shifts on (d, e), e[i] coupling i and i+1, e[n−1] = 0.
fn tql(d: &mut [f64], e: &mut [f64], block: &'static str) -> Result<()> {
    let n = d.len();
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_QL_ITER {
                return Err(Error::Eigensolver { block, index: l });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut underflow = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// LU factors of T − λI with partial pivoting.
struct TriLu {
    dl: Vec<f64>,
    d: Vec<f64>,
    du: Vec<f64>,
    du2: Vec<f64>,
    pivot: Vec<bool>,
}

impl TriLu {
    fn factor(diag: &[f64], off: &[f64], lambda: f64, tiny: f64) -> Self {
        let n = diag.len();
        let mut d: Vec<f64> = diag.iter().map(|x| x - lambda).collect();
        let mut dl = off.to_vec();
        let mut du = off.to_vec();
        let mut du2 = vec![0.0; n.saturating_sub(2)];
        let mut pivot = vec![false; n.saturating_sub(1)];
        for i in 0..n.saturating_sub(1) {
            if d[i].abs() >= dl[i].abs() {
                if d[i] == 0.0 {
                    d[i] = tiny;
                }
                let fact = dl[i] / d[i];
                dl[i] = fact;
                d[i + 1] -= fact * du[i];
            } else {
                let fact = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = fact;
                let temp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = temp - fact * d[i + 1];
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] *= -fact;
                }
                pivot[i] = true;
            }
        }
        for v in d.iter_mut() {
            if v.abs() < tiny {
                *v = tiny.copysign(*v);
            }
        }
        Self { dl, d, du, du2, pivot }
    }

    fn solve(&self, b: &mut [f64]) {
        let n = self.d.len();
        for i in 0..n.saturating_sub(1) {
            if self.pivot[i] {
                let temp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = temp - self.dl[i] * b[i];
            } else {
                b[i + 1] -= self.dl[i] * b[i];
            }
        }
        b[n - 1] /= self.d[n - 1];
        if n >= 2 {
            b[n - 2] = (b[n - 2] - self.du[n - 2] * b[n - 1]) / self.d[n - 2];
        }
        for i in (0..n.saturating_sub(2)).rev() {
            b[i] = (b[i] - self.du[i] * b[i + 1] - self.du2[i] * b[i + 2]) / self.d[i];
        }
    }
}

/// Lowest `k` eigenpairs of the symmetric matrix `a` (row-major, `n × n`).
pub fn lowest_eigenpairs(a: Vec<f64>, n: usize, k: usize, block: &'static str) -> Result<Vec<(f64, Vec<f64>)>> {
    let t = tridiagonalize(a, n);
    let values = t.eigenvalues(block)?;
    let scale = t.norm().max(f64::MIN_POSITIVE);
    let mut tri_vecs: Vec<Vec<f64>> = Vec::with_capacity(k);
    let mut out = Vec::with_capacity(k);
    for (i, &lambda) in values.iter().take(k).enumerate() {
        // Orthogonalize only inside clusters of nearly equal eigenvalues.
        let start = (0..i)
            .rev()
            .take_while(|&j| (values[j] - lambda).abs() < 1e-8 * scale)
            .last()
            .unwrap_or(i);
        let y = t.tridiagonal_eigenvector(lambda, &tri_vecs[start..i]);
        tri_vecs.push(y.clone());
        out.push((lambda, t.back_transform(y)));
    }
    Ok(out)
}

/// All eigenvalues of the symmetric matrix `a`, ascending.
pub fn symmetric_eigenvalues(a: Vec<f64>, n: usize, block: &'static str) -> Result<Vec<f64>> {
    tridiagonalize(a, n).eigenvalues(block)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn test_matrix(n: usize) -> Vec<f64> {
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = if i == j {
                    (i * i) as f64 + 1.0
                } else {
                    1.0 / (1.0 + (i + j) as f64) * if (i + j) % 3 == 0 { -1.0 } else { 1.0 }
                };
                a[i * n + j] = v;
                a[j * n + i] = v;
            }
        }
        a
    }

    #[test]
    fn two_by_two() {
        let vals = symmetric_eigenvalues(vec![2.0, 1.0, 1.0, 2.0], 2, "t").unwrap();
        assert!((vals[0] - 1.0).abs() < 1e-15 && (vals[1] - 3.0).abs() < 1e-15);
    }

    #[test]
    fn trace_and_residuals() {
        let n = 40;
        let a = test_matrix(n);
        let trace: f64 = (0..n).map(|i| a[i * n + i]).sum();
        let vals = symmetric_eigenvalues(a.clone(), n, "t").unwrap();
        assert!((vals.iter().sum::<f64>() - trace).abs() < 1e-10 * trace);
        let pairs = lowest_eigenpairs(a.clone(), n, 5, "t").unwrap();
        for (lambda, v) in &pairs {
            let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            assert!((norm - 1.0).abs() < 1e-12);
            let res: f64 = (0..n)
                .map(|i| {
                    let hv: f64 = (0..n).map(|j| a[i * n + j] * v[j]).sum();
                    (hv - lambda * v[i]).powi(2)
                })
                .sum::<f64>()
                .sqrt();
            assert!(res < 1e-12 * vals[n - 1], "{res}");
        }
        let dot: f64 = pairs[0].1.iter().zip(&pairs[1].1).map(|(a, b)| a * b).sum();
        assert!(dot.abs() < 1e-12);
    }

    #[test]
    fn degenerate_spectrum() {
        let n = 6;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            a[i * n + i] = if i < 3 { 1.0 } else { 2.0 };
        }
        let pairs = lowest_eigenpairs(a, n, 3, "t").unwrap();
        for i in 0..3 {
            for j in 0..i {
                let dot: f64 = pairs[i].1.iter().zip(&pairs[j].1).map(|(a, b)| a * b).sum();
                assert!(dot.abs() < 1e-12);
            }
        }
    }
}
