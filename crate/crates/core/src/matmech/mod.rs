//! Matrix mechanics for the regularized potential centred in an infinite square well of width a.
//!
//! Basis φₙ(x) = √(2/a) sin(nπx/a), n = 1..N. Energies are in units of the well's ground
//! energy E₁ = π²/(2a²); ρ = ħω/E₁ fixes a = π√(ρ/2) in oscillator lengths, and the
//! well-relative cutoff is ε = (2/π)√(2/ρ)·δ. Matrix elements with n + m odd vanish, so the
//! Hamiltonian splits into a block of odd n (even about the centre, holding the ground state)
//! and a block of even n (odd about the centre).

pub mod eigen;

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::Parity;
use crate::specfun::sine_integral;

/// Default basis size for ground-state work.
pub const DEFAULT_N_MAX: usize = 2000;
/// Default ρ = ħω/E₁ for ground-state work.
pub const DEFAULT_RHO: f64 = 5.0;
/// Basis size of the long run behind the opt-in flag.
pub const LONG_RUN_N_MAX: usize = 10_000;

/// Well-relative cutoff ε for a cutoff δ in oscillator lengths.
pub fn epsilon_from_delta(delta: f64, rho: f64) -> f64 {
    2.0 / PI * (2.0 / rho).sqrt() * delta
}

pub fn delta_from_epsilon(epsilon: f64, rho: f64) -> f64 {
    epsilon * PI / 2.0 * (rho / 2.0).sqrt()
}

/// Well width a in oscillator lengths.
pub fn well_width(rho: f64) -> f64 {
    PI * (rho / 2.0).sqrt()
}

/// Dense symmetric block, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymBlock {
    pub parity: Parity,
    /// Basis indices n (1-based) of the rows.
    pub indices: Vec<usize>,
    pub data: Vec<f64>,
}

impl SymBlock {
    pub fn dim(&self) -> usize {
        self.indices.len()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim() + j]
    }

    /// Max-row-sum norm.
    pub fn norm(&self) -> f64 {
        let d = self.dim();
        (0..d)
            .map(|i| self.data[i * d..(i + 1) * d].iter().map(|v| v.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        let d = self.dim();
        (0..d)
            .map(|i| self.data[i * d..(i + 1) * d].iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// Per-index tables of g, h, k at p = πj, j = 0..=2N.
#[derive(Debug, Clone, PartialEq)]
struct ElementTables {
    g: Vec<f64>,
    h: Vec<f64>,
    k: Vec<f64>,
}

/// cos(πj/2) exactly.
fn cos_half_pi(j: usize) -> f64 {
    match j % 4 {
        0 => 1.0,
        2 => -1.0,
        _ => 0.0,
    }
}

fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-8 {
        1.0 - x * x / 6.0
    } else {
        x.sin() / x
    }
}

/// ℓ(p) = ∫_{ε/2}^{1/2} (1 − cos px)/x² dx.
fn ell(p: f64, epsilon: f64, si_half: f64, si_eps: f64) -> f64 {
    if p == 0.0 {
        return 0.0;
    }
    let q = (0.25 * p * epsilon).sin();
    4.0 * q * q / epsilon - 2.0 * (1.0 - (0.5 * p).cos()) + p * (si_half - si_eps)
}

impl ElementTables {
    fn new(epsilon: f64, n_max: usize) -> Self {
        let len = 2 * n_max + 1;
        let mut g = vec![0.0; len];
        let mut h = vec![0.0; len];
        let mut k = vec![0.0; len];
        for j in 0..len {
            let p = PI * j as f64;
            let c = cos_half_pi(j);
            let pe = 0.5 * p * epsilon;
            g[j] = c * sinc(pe);
            if j > 0 {
                let (s, ce) = pe.sin_cos();
                h[j] = c * (2.0 * s / (p * p * p) + (c - epsilon * ce) / (p * p) - epsilon * epsilon * s / (4.0 * p));
            }
            // Si is evaluated once per distinct argument; only even j enter the elements.
            let l = if j % 2 == 0 && j > 0 {
                ell(p, epsilon, sine_integral(0.5 * p), sine_integral(pe))
            } else {
                0.0
            };
            k[j] = c * (2.0 * (1.0 - epsilon) / epsilon - l);
        }
        Self { g, h, k }
    }
}

/// Sine-basis Hamiltonian of the regularized potential, split by parity about the well centre.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixModel {
    pub alpha: f64,
    pub rho: f64,
    pub epsilon: f64,
    pub n_max: usize,
    /// v_ε = V(ε a/2)/E₁.
    pub v_epsilon: f64,
    /// [even block (odd n), odd block (even n)].
    pub blocks: [SymBlock; 2],
    tables: ElementTables,
}

/// Builds the model. Requires n_max ≥ 4 and ε ∈ (0, 1/2).
pub fn assemble(alpha: f64, rho: f64, epsilon: f64, n_max: usize) -> Result<MatrixModel> {
    if n_max < 4 {
        return Err(Error::Domain(format!("n_max must be at least 4, got {n_max}")));
    }
    if !(epsilon > 0.0 && epsilon < 0.5) {
        return Err(Error::Domain(format!("epsilon must lie in (0, 1/2), got {epsilon}")));
    }
    if !(rho > 0.0 && rho.is_finite()) || !alpha.is_finite() {
        return Err(Error::Domain(format!(
            "need finite alpha and rho > 0 (alpha = {alpha}, rho = {rho})"
        )));
    }
    let v_epsilon = PI * PI * rho * rho * epsilon * epsilon / 16.0 + 4.0 * alpha / (PI * PI * epsilon * epsilon);
    if !v_epsilon.is_finite() || !(epsilon * v_epsilon).is_finite() {
        let min_epsilon = (4.0 * alpha.abs() / (PI * PI * f64::MAX)).sqrt();
        return Err(Error::MatrixOverflow { min_epsilon });
    }
    let tables = ElementTables::new(epsilon, n_max);
    let mut model = MatrixModel {
        alpha,
        rho,
        epsilon,
        n_max,
        v_epsilon,
        blocks: [
            SymBlock {
                parity: Parity::Even,
                indices: Vec::new(),
                data: Vec::new(),
            },
            SymBlock {
                parity: Parity::Odd,
                indices: Vec::new(),
                data: Vec::new(),
            },
        ],
        tables,
    };
    for parity in [Parity::Even, Parity::Odd] {
        let block = model.build_block(parity);
        model.blocks[block_slot(parity)] = block;
    }
    Ok(model)
}

fn block_slot(parity: Parity) -> usize {
    match parity {
        Parity::Even => 0,
        Parity::Odd => 1,
    }
}

/// Parity about the well centre of φₙ.
pub fn basis_parity(n: usize) -> Parity {
    if n % 2 == 1 {
        Parity::Even
    } else {
        Parity::Odd
    }
}

impl MatrixModel {
    /// H_{nm}/E₁ for 1-based basis indices.
    pub fn element(&self, n: usize, m: usize) -> f64 {
        if (n + m) % 2 == 1 {
            return 0.0;
        }
        let t = &self.tables;
        let eps = self.epsilon;
        let diff = n.abs_diff(m);
        let sum = n + m;
        let shape = PI * PI * self.rho * self.rho / 4.0;
        let (kin, con, ext_sho) = if n == m {
            let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
            (
                (n * n) as f64,
                1.0 - sign * sinc(PI * n as f64 * eps),
                (1.0 - eps * eps * eps) / 24.0 - t.h[2 * n],
            )
        } else {
            (0.0, t.g[diff] - t.g[sum], t.h[diff] - t.h[sum])
        };
        let ext = 2.0 * (ext_sho * shape + self.alpha / (PI * PI) * (t.k[diff] - t.k[sum]));
        kin + eps * self.v_epsilon * con + ext
    }

    fn build_block(&self, parity: Parity) -> SymBlock {
        let indices: Vec<usize> = (1..=self.n_max).filter(|&n| basis_parity(n) == parity).collect();
        let d = indices.len();
        let mut data = vec![0.0; d * d];
        for i in 0..d {
            for j in i..d {
                let v = self.element(indices[i], indices[j]);
                data[i * d + j] = v;
                data[j * d + i] = v;
            }
        }
        SymBlock { parity, indices, data }
    }

    pub fn block(&self, parity: Parity) -> &SymBlock {
        &self.blocks[block_slot(parity)]
    }

    /// The unsplit N × N matrix, row-major.
    pub fn full_matrix(&self) -> Vec<f64> {
        let n = self.n_max;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                a[i * n + j] = self.element(i + 1, j + 1);
            }
        }
        a
    }

    pub fn well_width(&self) -> f64 {
        well_width(self.rho)
    }

    pub fn delta(&self) -> f64 {
        delta_from_epsilon(self.epsilon, self.rho)
    }

    /// Converts E/E₁ to E/ħω.
    pub fn to_hw(&self, energy_e1: f64) -> f64 {
        energy_e1 / self.rho
    }
}

/// One eigenpair of a parity block.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixEigenpair {
    /// E/E₁.
    pub energy: f64,
    /// E/ħω.
    pub energy_hw: f64,
    /// Coefficients c_m, m = 1..N, zero outside the block.
    pub coefficients: Vec<f64>,
    pub block: Parity,
    /// Position within the block, from 0.
    pub index: usize,
    pub n_max_used: usize,
    /// ‖Hc − Ec‖ / ‖H‖.
    pub relative_residual: f64,
}

/// Largest accepted ‖Hc − Ec‖/‖H‖.
pub const RESIDUAL_TOL: f64 = 1e-10;

/// Lowest `k` eigenpairs of each block, merged and sorted by energy.
pub fn eigensolve(model: &MatrixModel, k: usize) -> Result<Vec<MatrixEigenpair>> {
    if k > model.n_max {
        return Err(Error::Domain(format!("k = {k} exceeds n_max = {}", model.n_max)));
    }
    let mut out = Vec::new();
    for parity in [Parity::Even, Parity::Odd] {
        out.extend(eigensolve_block(model, parity, k)?);
    }
    out.sort_by(|a, b| a.energy.total_cmp(&b.energy));
    Ok(out)
}

/// Lowest `k` eigenpairs of one block.
pub fn eigensolve_block(model: &MatrixModel, parity: Parity, k: usize) -> Result<Vec<MatrixEigenpair>> {
    let block = model.block(parity);
    let d = block.dim();
    let k = k.min(d);
    let name = parity.as_str();
    let pairs = eigen::lowest_eigenpairs(block.data.clone(), d, k, name)?;
    let norm = block.norm();
    pairs
        .into_iter()
        .enumerate()
        .map(|(index, (energy, v))| {
            let hv = block.mul_vec(&v);
            let res = hv
                .iter()
                .zip(&v)
                .map(|(h, c)| (h - energy * c).powi(2))
                .sum::<f64>()
                .sqrt()
                / norm;
            if !(res <= RESIDUAL_TOL) {
                return Err(Error::Eigensolver { block: name, index });
            }
            let mut coefficients = vec![0.0; model.n_max];
            for (c, &n) in v.iter().zip(&block.indices) {
                coefficients[n - 1] = *c;
            }
            Ok(MatrixEigenpair {
                energy,
                energy_hw: model.to_hw(energy),
                coefficients,
                block: parity,
                index,
                n_max_used: model.n_max,
                relative_residual: res,
            })
        })
        .collect()
}

/// All eigenvalues (E/E₁) of one block, ascending; no eigenvectors.
pub fn block_eigenvalues(model: &MatrixModel, parity: Parity) -> Result<Vec<f64>> {
    let block = model.block(parity);
    eigen::symmetric_eigenvalues(block.data.clone(), block.dim(), parity.as_str())
}

/// ψ(x) = Σ c_m φ_m(x) on a grid in [0, a] (oscillator lengths). The overall sign is fixed so
/// the first sample right of the centre with |ψ| > 1e-8 is positive.
pub fn reconstruct_wavefunction(pair: &MatrixEigenpair, model: &MatrixModel, x_grid: &[f64]) -> Result<Vec<f64>> {
    let a = model.well_width();
    if let Some(x) = x_grid.iter().find(|x| !(**x >= 0.0 && **x <= a)) {
        return Err(Error::Domain(format!("grid point {x} outside the well [0, {a}]")));
    }
    let norm = (2.0 / a).sqrt();
    let mut values: Vec<f64> = x_grid
        .iter()
        .map(|&x| {
            if x == 0.0 || x == a {
                return 0.0;
            }
            let theta = PI * x / a;
            pair.coefficients
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0.0)
                .map(|(i, c)| c * ((i + 1) as f64 * theta).sin())
                .sum::<f64>()
                * norm
        })
        .collect();
    let centre = 0.5 * a;
    let flip = x_grid
        .iter()
        .zip(&values)
        .filter(|(x, v)| **x > centre && v.abs() > 1e-8)
        .min_by(|a, b| a.0.total_cmp(b.0))
        .is_some_and(|(_, v)| *v < 0.0);
    if flip {
        values.iter_mut().for_each(|v| *v = -*v);
    }
    Ok(values)
}
