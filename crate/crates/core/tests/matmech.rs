mod common;

use common::*;
use pseudoharm_core::matmech::eigen::symmetric_eigenvalues;
use pseudoharm_core::matmech::*;
use pseudoharm_core::reference::table1;
use pseudoharm_core::regspec::{build_wavefunction, solve_ground_even};
use pseudoharm_core::{Error, Parity, PotentialSpec};

fn model(alpha: f64, rho: f64, delta: f64, n_max: usize) -> MatrixModel {
    assemble(alpha, rho, epsilon_from_delta(delta, rho), n_max).unwrap()
}

#[test]
fn elements_match_quadrature() {
    for (alpha, rho, eps) in [
        (0.0, 50.0, 1e-3),
        (0.0, 5.0, 0.05),
        (-0.1, 5.0, 0.02),
        (0.3, 25.0, 0.01),
    ] {
        let m = assemble(alpha, rho, eps, 12).unwrap();
        let scale = 1.0 + (m.v_epsilon * eps).abs();
        for n in 1..=12 {
            for k in n..=12 {
                let got = m.element(n, k);
                if (n + k) % 2 == 1 {
                    assert_eq!(got, 0.0);
                    continue;
                }
                let want = matrix_element_quadrature(alpha, rho, eps, n, k);
                assert!(
                    (got - want).abs() < 1e-8 * want.abs().max(scale),
                    "alpha {alpha} rho {rho} eps {eps} ({n},{k}): {got} vs {want}"
                );
            }
        }
    }
}

#[test]
fn kinetic_diagonal_is_exact() {
    let m = assemble(0.0, 1e-9, 0.2, 40).unwrap();
    for n in 1..=40 {
        assert!((m.element(n, n) - (n * n) as f64).abs() < 1e-12 * (n * n) as f64);
    }
}

#[test]
fn assembly_is_symmetric_and_reproducible() {
    let a = model(-0.05, 5.0, 0.002, 300);
    let b = model(-0.05, 5.0, 0.002, 300);
    assert_eq!(a, b);
    let n = a.n_max;
    let full = a.full_matrix();
    for i in 0..n {
        for j in 0..n {
            assert_eq!(full[i * n + j], full[j * n + i]);
            if (i + j) % 2 == 1 {
                assert_eq!(full[i * n + j], 0.0);
            }
        }
    }
}

#[test]
fn parity_blocks_reproduce_full_spectrum() {
    let m = model(-0.1, 5.0, 0.01, 240);
    let mut blocks: Vec<f64> = [Parity::Even, Parity::Odd]
        .iter()
        .flat_map(|&p| block_eigenvalues(&m, p).unwrap())
        .collect();
    blocks.sort_by(f64::total_cmp);
    let full = symmetric_eigenvalues(m.full_matrix(), m.n_max, "full").unwrap();
    let norm = m.block(Parity::Even).norm().max(m.block(Parity::Odd).norm());
    for (x, y) in blocks.iter().zip(&full) {
        assert!((x - y).abs() <= 1e-12 * x.abs().max(1e-3 * norm), "{x} vs {y}");
    }
}

#[test]
fn eigenpairs_are_accurate_and_ordered() {
    let m = model(-0.1, 5.0, 0.01, 400);
    let pairs = eigensolve(&m, 6).unwrap();
    assert_eq!(pairs.len(), 12);
    assert!(pairs.windows(2).all(|w| w[0].energy <= w[1].energy));
    for p in &pairs {
        let block = m.block(p.block);
        let c: Vec<f64> = block.indices.iter().map(|&n| p.coefficients[n - 1]).collect();
        let norm: f64 = c.iter().map(|v| v * v).sum::<f64>().sqrt();
        assert!((norm - 1.0).abs() < 1e-12);
        let hc = block.mul_vec(&c);
        let res = hc
            .iter()
            .zip(&c)
            .map(|(h, v)| (h - p.energy * v).powi(2))
            .sum::<f64>()
            .sqrt()
            / block.norm();
        assert!(res <= 1e-10);
        assert!(p.relative_residual <= RESIDUAL_TOL);
        assert_eq!(p.energy_hw, m.to_hw(p.energy));
        assert_eq!(p.n_max_used, 400);
    }
    for parity in [Parity::Even, Parity::Odd] {
        let all = block_eigenvalues(&m, parity).unwrap();
        assert!(all.windows(2).all(|w| w[0] <= w[1]));
        let lowest: Vec<f64> = pairs.iter().filter(|p| p.block == parity).map(|p| p.energy).collect();
        for (x, y) in lowest.iter().zip(&all) {
            assert!((x - y).abs() < 1e-10 * m.block(parity).norm());
        }
    }
}

#[test]
fn harmonic_limit() {
    let m = assemble(0.0, 50.0, 1e-3, 800).unwrap();
    let lowest = block_eigenvalues(&m, Parity::Even).unwrap()[0];
    assert!(rel_err(lowest, 25.0) < 1e-3);
    let first_odd = block_eigenvalues(&m, Parity::Odd).unwrap()[0];
    assert!(rel_err(m.to_hw(first_odd), 1.5) < 1e-3);
}

#[test]
fn ground_energy_decreases_with_basis_size() {
    let e: Vec<f64> = [500, 1000, 2000]
        .iter()
        .map(|&n| m_lowest(&model(-0.05, 5.0, 0.002, n)))
        .collect();
    assert!(e[0] >= e[1] && e[1] >= e[2], "{e:?}");
    let exact = table1().row(-0.05).unwrap().tricomi;
    assert!(e.iter().all(|&v| v > exact));
}

fn m_lowest(m: &MatrixModel) -> f64 {
    m.to_hw(block_eigenvalues(m, Parity::Even).unwrap()[0])
}

#[test]
fn excited_levels_do_not_depend_on_the_box() {
    for alpha in [-0.1, 0.1] {
        let spectra: Vec<(Vec<f64>, Vec<f64>)> = [25.0, 50.0]
            .iter()
            .map(|&rho| {
                let m = model(alpha, rho, 0.01, 2000);
                let hw = |p| {
                    block_eigenvalues(&m, p)
                        .unwrap()
                        .iter()
                        .map(|&e| m.to_hw(e))
                        .collect::<Vec<_>>()
                };
                (hw(Parity::Even), hw(Parity::Odd))
            })
            .collect();
        // For α < 0 the lowest even level is the collapsing ground state.
        let skip = usize::from(alpha < 0.0);
        for i in 0..3 {
            let (e25, e50) = (spectra[0].0[i + skip], spectra[1].0[i + skip]);
            assert!(rel_err(e25, e50) < 1e-6, "alpha {alpha} even {i}: {e25} {e50}");
            let (o25, o50) = (spectra[0].1[i], spectra[1].1[i]);
            assert!(rel_err(o25, o50) < 1e-6, "alpha {alpha} odd {i}: {o25} {o50}");
        }
    }
}

#[test]
fn reconstruction_endpoints_parity_and_sign() {
    let m = model(-0.1, 5.0, 0.01, 300);
    let a = m.well_width();
    let grid: Vec<f64> = (0..=1000).map(|i| a * i as f64 / 1000.0).collect();
    for p in eigensolve(&m, 2).unwrap() {
        let psi = reconstruct_wavefunction(&p, &m, &grid).unwrap();
        assert_eq!(psi[0], 0.0);
        assert_eq!(psi[1000], 0.0);
        let peak = psi.iter().fold(0.0f64, |s, v| s.max(v.abs()));
        for i in 0..=500 {
            let mirrored = if p.block == Parity::Even {
                psi[1000 - i]
            } else {
                -psi[1000 - i]
            };
            assert!((psi[i] - mirrored).abs() < 1e-10 * peak);
        }
        let first = psi[501..].iter().find(|v| v.abs() > 1e-8).unwrap();
        assert!(*first > 0.0);
    }
    assert!(reconstruct_wavefunction(&eigensolve(&m, 1).unwrap()[0], &m, &[a + 1e-9]).is_err());
}

#[test]
fn ground_state_agrees_with_transcendental_solution() {
    let (alpha, delta, rho) = (-0.1, 0.01, 5.0);
    let m = model(alpha, rho, delta, 2000);
    let pair = eigensolve_block(&m, Parity::Even, 1).unwrap().remove(0);
    let spec = PotentialSpec::regularized(alpha, delta).unwrap();
    let exact = solve_ground_even(&spec).unwrap();
    let wf = build_wavefunction(&spec, &exact).unwrap();
    let centre = 0.5 * m.well_width();
    let h = 2e-4;
    let us: Vec<f64> = (-5000..=5000).map(|i| i as f64 * h).collect();
    let xs: Vec<f64> = us.iter().map(|u| centre + u).collect();
    let pm = reconstruct_wavefunction(&pair, &m, &xs).unwrap();
    let pr: Vec<f64> = us.iter().map(|&u| wf.value(u).unwrap()).collect();
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>() * h;
    let fidelity = dot(&pm, &pr).powi(2) / (dot(&pm, &pm) * dot(&pr, &pr));
    assert!(fidelity > 0.999, "fidelity {fidelity}");
    assert!(rel_err(pair.energy_hw, exact.energy) < 1e-3);
}

#[test]
fn domain_and_overflow_errors() {
    assert!(matches!(assemble(-0.1, 5.0, 0.01, 3), Err(Error::Domain(_))));
    assert!(matches!(assemble(-0.1, 5.0, 0.5, 10), Err(Error::Domain(_))));
    assert!(matches!(
        assemble(1e300, 5.0, 1e-10, 10),
        Err(Error::MatrixOverflow { .. })
    ));
    assert!((delta_from_epsilon(epsilon_from_delta(0.002, 5.0), 5.0) - 0.002).abs() < 1e-18);
}

#[test]
#[ignore = "long run: n_max = 10000 (minutes)"]
fn reference_long_run() {
    let r = table1();
    let target = r.matrix_small_well.energy;
    let m = model(-0.05, r.matrix_small_well.rho, r.delta, r.matrix_small_well.n_max);
    let e = m_lowest(&m);
    assert!(rel_err(e, target) < 1e-5, "{e} vs {target}");
}
