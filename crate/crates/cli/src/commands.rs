use std::collections::BTreeMap;

use pseudoharm_core::asymptotics::{
    c0_closed_form, c0_self_consistent, ground_state_energy_estimate, kappa_asymptotic, limiting_ground_wavefunction,
    C0Method,
};
use pseudoharm_core::matmech::{
    assemble, block_eigenvalues, eigensolve_block, epsilon_from_delta, reconstruct_wavefunction, MatrixModel,
};
use pseudoharm_core::model::energy_in;
use pseudoharm_core::reference::table1;
use pseudoharm_core::regspec::{build_wavefunction, solve_experimental, solve_ground_even, solve_state};
use pseudoharm_core::unreg::{unreg_energy, unreg_psi};
use pseudoharm_core::{BranchLabel, Error as CoreError, Method, Parity, PotentialSpec};
use rayon::prelude::*;

use crate::args::{
    MatmechArgs, MethodArg, ParityArg, PotentialArgs, ScanArgs, SpectrumArgs, Table1Args, Units, WavefunctionArgs,
};
use crate::error::{CliError, Failure};
use crate::output::{Cell, Settings, SpecParams, Table};

/// A command's deterministic result, before timing and serialization.
pub struct Outcome {
    pub command: &'static str,
    pub spec: SpecParams,
    pub settings: Settings,
    pub table: Table,
    pub summary: BTreeMap<String, f64>,
}

struct Level {
    parity: Parity,
    n_display: usize,
    kappa: f64,
    energy_hw: f64,
    method: Method,
}

fn state_name(parity: Parity, n_display: usize) -> String {
    format!("{parity} n_display={n_display}")
}

/// Runs `f` over `items` in parallel, keeping order; every failure is collected.
fn solve_all<T: Sync, R: Send>(
    items: &[T],
    name: impl Fn(&T) -> String + Sync,
    f: impl Fn(&T) -> Result<R, CoreError> + Sync,
) -> Result<Vec<R>, CliError> {
    let results: Vec<Result<R, CoreError>> = items.par_iter().map(&f).collect();
    let total = results.len();
    let mut ok = Vec::with_capacity(total);
    let mut failures = Vec::new();
    for (item, r) in items.iter().zip(results) {
        match r {
            Ok(v) => ok.push(v),
            Err(error) => failures.push(Failure {
                state: name(item),
                error,
            }),
        }
    }
    if failures.is_empty() {
        Ok(ok)
    } else {
        Err(CliError::Solves { total, failures })
    }
}

fn need_delta(p: &PotentialArgs, method: MethodArg) -> Result<f64, CliError> {
    p.delta
        .ok_or_else(|| CliError::usage(format!("--method {} needs --delta", method.name())))
}

/// Potential for the given method, enforcing the experimental gate below α = −1/4.
fn potential(p: &PotentialArgs, method: MethodArg) -> Result<PotentialSpec, CliError> {
    let below = p.alpha < -0.25;
    if below && !p.experimental_alpha_below_quarter {
        return Err(CliError::usage(format!(
            "alpha = {} < -1/4 needs --experimental-alpha-below-quarter",
            p.alpha
        )));
    }
    match method {
        MethodArg::Closed => {
            if p.delta.is_some() {
                return Err(CliError::usage(
                    "--method closed is the singular potential; omit --delta",
                ));
            }
            Ok(PotentialSpec::unregularized(p.alpha)?)
        }
        MethodArg::Transcendental | MethodArg::Matrix if below => Ok(PotentialSpec::regularized_experimental(
            p.alpha,
            need_delta(p, method)?,
        )?),
        _ if below => Err(CliError::usage(format!(
            "--method {} is not available for alpha < -1/4",
            method.name()
        ))),
        _ => Ok(PotentialSpec::regularized(p.alpha, need_delta(p, method)?)?),
    }
}

fn default_method(p: &PotentialArgs, method: Option<MethodArg>) -> MethodArg {
    method.unwrap_or(if p.delta.is_some() {
        MethodArg::Transcendental
    } else {
        MethodArg::Closed
    })
}

fn spec_params(p: &PotentialArgs) -> SpecParams {
    SpecParams {
        alpha: Some(p.alpha),
        delta: p.delta,
        experimental: p.alpha < -0.25,
    }
}

fn energy_column(units: Units) -> String {
    format!("energy_{}", units.suffix())
}

fn matrix_model(spec: &PotentialSpec, n_max: usize, rho: f64) -> Result<MatrixModel, CoreError> {
    let delta = spec.require_delta()?;
    assemble(spec.alpha, rho, epsilon_from_delta(delta, rho), n_max)
}

pub fn spectrum(a: &SpectrumArgs, units: Units) -> Result<Outcome, CliError> {
    let p = &a.potential;
    let method = default_method(p, a.method);
    let spec = potential(p, method)?;
    let (parities, displays) = if a.ground {
        (vec![Parity::Even], vec![0])
    } else {
        (a.parity.list(), a.n.0.clone())
    };
    let mut states: Vec<(Parity, usize)> = displays
        .iter()
        .flat_map(|&d| parities.iter().map(move |&q| (q, d)))
        .collect();
    if method == MethodArg::Closed && p.alpha < 0.0 && states.len() > 1 {
        // The singular potential has no even level with display index 0 for α < 0.
        states.retain(|&(q, d)| {
            let keep = !(q == Parity::Even && d == 0);
            if !keep {
                eprintln!(
                    "note: skipping even n_display=0, which does not exist for the singular potential with alpha < 0"
                );
            }
            keep
        });
    }
    let name = |s: &(Parity, usize)| state_name(s.0, s.1);
    let levels = match method {
        MethodArg::Closed => solve_all(&states, name, |&(q, d)| {
            let sol = unreg_energy(&spec, BranchLabel::from_display(q, d, spec.alpha))?;
            Ok(level(q, d, sol.kappa, sol.method))
        })?,
        MethodArg::Transcendental if spec.experimental => experimental_levels(&spec, &states)?,
        MethodArg::Transcendental => solve_all(&states, name, |&(q, d)| {
            let sol = solve_state(&spec, BranchLabel::from_display(q, d, spec.alpha))?;
            Ok(level(q, d, sol.kappa, sol.method))
        })?,
        MethodArg::Asymptotic => {
            let delta = spec.require_delta()?;
            solve_all(&states, name, |&(q, d)| {
                let label = BranchLabel::from_display(q, d, spec.alpha);
                let kappa = if label.ground {
                    ground_state_energy_estimate(spec.alpha, delta, C0Method::SelfConsistent)? - 0.5
                } else {
                    kappa_asymptotic(&spec, q, d)?
                };
                Ok(level(q, d, kappa, Method::Asymptotic))
            })?
        }
        MethodArg::Matrix => matrix_levels(&spec, &states, a.matrix.nmax, a.matrix.rho)?,
    };

    let rho = a.matrix.rho;
    let mut table = Table::new([
        "alpha".to_string(),
        "delta".to_string(),
        "parity".to_string(),
        "n_display".to_string(),
        "kappa_hw".to_string(),
        energy_column(units),
        "method".to_string(),
    ]);
    for l in &levels {
        table.push(vec![
            p.alpha.into(),
            p.delta.into(),
            l.parity.as_str().into(),
            l.n_display.into(),
            l.kappa.into(),
            energy_in(units.core(), l.energy_hw, rho).into(),
            l.method.as_str().into(),
        ]);
    }
    let uses_rho = method == MethodArg::Matrix || units == Units::E1;
    Ok(Outcome {
        command: "spectrum",
        spec: spec_params(p),
        settings: Settings {
            method: Some(method.name().into()),
            parity: Some(if a.ground { "even" } else { a.parity.name() }.into()),
            states: Some(displays),
            ground: Some(a.ground),
            n_max: (method == MethodArg::Matrix).then_some(a.matrix.nmax),
            rho: uses_rho.then_some(rho),
            units: units.suffix().into(),
            ..Settings::default()
        },
        table,
        summary: BTreeMap::new(),
    })
}

fn level(parity: Parity, n_display: usize, kappa: f64, method: Method) -> Level {
    Level {
        parity,
        n_display,
        kappa,
        energy_hw: kappa + 0.5,
        method,
    }
}

fn experimental_levels(spec: &PotentialSpec, states: &[(Parity, usize)]) -> Result<Vec<Level>, CliError> {
    let top = states.iter().map(|s| s.1).max().unwrap_or(0);
    let kappa_max = 2.0 * top as f64 + 4.0;
    let found = solve_experimental(spec, kappa_max)?;
    let mut failures = Vec::new();
    let mut out = Vec::new();
    for &(q, d) in states {
        match found.iter().find(|s| s.label.parity == q && s.label.n_display == d) {
            Some(s) => out.push(level(q, d, s.kappa, s.method)),
            None => failures.push(Failure {
                state: state_name(q, d),
                error: CoreError::NoBracket {
                    lo: f64::NEG_INFINITY,
                    hi: kappa_max,
                    context: "experimental scan found fewer states of this parity".into(),
                },
            }),
        }
    }
    if failures.is_empty() {
        Ok(out)
    } else {
        Err(CliError::Solves {
            total: states.len(),
            failures,
        })
    }
}

/// Block eigenpairs; the block index equals the display index.
fn matrix_levels(
    spec: &PotentialSpec,
    states: &[(Parity, usize)],
    n_max: usize,
    rho: f64,
) -> Result<Vec<Level>, CliError> {
    let model = matrix_model(spec, n_max, rho)?;
    let blocks: Vec<Parity> = [Parity::Even, Parity::Odd]
        .into_iter()
        .filter(|q| states.iter().any(|s| s.0 == *q))
        .collect();
    let energies = solve_all(
        &blocks,
        |q| format!("{q} block"),
        |&q| {
            let k = states.iter().filter(|s| s.0 == q).map(|s| s.1 + 1).max().unwrap_or(1);
            let pairs = eigensolve_block(&model, q, k)?;
            Ok((q, pairs.into_iter().map(|p| p.energy_hw).collect::<Vec<f64>>()))
        },
    )?;
    let mut out = Vec::new();
    let mut failures = Vec::new();
    for &(q, d) in states {
        let list = &energies.iter().find(|e| e.0 == q).expect("block solved").1;
        match list.get(d) {
            Some(&e) => out.push(level(q, d, e - 0.5, Method::Matrix)),
            None => failures.push(Failure {
                state: state_name(q, d),
                error: CoreError::Domain(format!("block has only {} states at n_max = {n_max}", list.len())),
            }),
        }
    }
    if failures.is_empty() {
        Ok(out)
    } else {
        Err(CliError::Solves {
            total: states.len(),
            failures,
        })
    }
}

/// Equispaced grid whose midpoint is exactly 0 for symmetric bounds.
fn grid(lo: f64, hi: f64, samples: usize) -> Vec<f64> {
    let m = (samples - 1) as f64;
    (0..samples)
        .map(|i| (lo * (m - i as f64) + hi * i as f64) / m)
        .collect()
}

pub fn wavefunction(a: &WavefunctionArgs, units: Units) -> Result<Outcome, CliError> {
    let p = &a.potential;
    if a.parity == ParityArg::Both {
        return Err(CliError::usage("wavefunction needs --parity even or odd"));
    }
    if a.samples < 2 || !(a.x_min < a.x_max) {
        return Err(CliError::usage("need --samples >= 2 and --x-min < --x-max"));
    }
    let method = default_method(p, a.method);
    let spec = potential(p, method)?;
    if spec.experimental {
        return Err(CliError::usage("wavefunctions are not available for alpha < -1/4"));
    }
    let parity = if a.ground { Parity::Even } else { a.parity.list()[0] };
    let display = if a.ground { 0 } else { a.n };
    let label = BranchLabel::from_display(parity, display, spec.alpha);
    let xs = grid(a.x_min, a.x_max, a.samples);
    let mut summary = BTreeMap::new();
    let wrap = |e: CoreError| CliError::Solves {
        total: 1,
        failures: vec![Failure {
            state: state_name(parity, display),
            error: e,
        }],
    };
    let psi: Vec<f64> = match method {
        MethodArg::Closed => {
            let e = unreg_energy(&spec, label).map_err(wrap)?;
            summary.insert("energy-hw".into(), e.energy);
            xs.iter()
                .map(|&x| unreg_psi(&spec, label, x))
                .collect::<Result<_, _>>()?
        }
        MethodArg::Transcendental => {
            let sol = solve_state(&spec, label).map_err(wrap)?;
            let wf = build_wavefunction(&spec, &sol).map_err(wrap)?;
            summary.insert("energy-hw".into(), sol.energy);
            summary.insert("kappa".into(), sol.kappa);
            summary.insert("norm-inner-integral".into(), wf.norm.inner_integral);
            summary.insert("norm-outer-integral".into(), wf.norm.outer_integral);
            summary.insert("norm-outer-abs-error".into(), wf.norm.outer_abs_error);
            summary.insert("norm-outer-cutoff".into(), wf.norm.outer_cutoff);
            summary.insert("psi-at-origin".into(), wf.value(0.0)?);
            if label.ground {
                summary.insert("limiting-peak".into(), limiting_ground_wavefunction(sol.kappa, 0.0)?);
            }
            wf.sample(&xs)?
        }
        MethodArg::Matrix => {
            let model = matrix_model(&spec, a.matrix.nmax, a.matrix.rho)?;
            let pair = eigensolve_block(&model, parity, display + 1)
                .map_err(wrap)?
                .into_iter()
                .nth(display)
                .ok_or_else(|| {
                    wrap(CoreError::Domain(format!(
                        "block has fewer than {} states",
                        display + 1
                    )))
                })?;
            let centre = 0.5 * model.well_width();
            summary.insert("energy-hw".into(), pair.energy_hw);
            summary.insert("relative-residual".into(), pair.relative_residual);
            summary.insert("well-half-width".into(), centre);
            // ψ vanishes outside the enclosing well.
            let inside: Vec<f64> = xs.iter().filter(|x| x.abs() <= centre).map(|x| centre + x).collect();
            let mut values = reconstruct_wavefunction(&pair, &model, &inside)?.into_iter();
            xs.iter()
                .map(|&x| {
                    if x.abs() > centre {
                        return 0.0;
                    }
                    let v = values.next().expect("one value per interior point");
                    // Exact node at the centre; the sine sum leaves ~1e-16 there.
                    if x == 0.0 && parity == Parity::Odd {
                        0.0
                    } else {
                        v
                    }
                })
                .collect()
        }
        MethodArg::Asymptotic => {
            if !label.ground {
                return Err(CliError::usage(
                    "--method asymptotic gives only the limiting ground state (use --ground)",
                ));
            }
            let delta = spec.require_delta()?;
            let kappa = ground_state_energy_estimate(spec.alpha, delta, C0Method::SelfConsistent)? - 0.5;
            summary.insert("kappa".into(), kappa);
            summary.insert("energy-hw".into(), kappa + 0.5);
            xs.iter()
                .map(|&x| limiting_ground_wavefunction(kappa, x))
                .collect::<Result<_, _>>()?
        }
    };
    let sampled_norm: f64 = xs
        .windows(2)
        .zip(psi.windows(2))
        .map(|(x, v)| 0.5 * (x[1] - x[0]) * (v[0] * v[0] + v[1] * v[1]))
        .sum();
    summary.insert("sampled-norm-trapezoid".into(), sampled_norm);

    let mut table = Table::new(["x_osc", "psi"]);
    for (x, v) in xs.iter().zip(&psi) {
        table.push(vec![(*x).into(), (*v).into()]);
    }
    Ok(Outcome {
        command: "wavefunction",
        spec: spec_params(p),
        settings: Settings {
            method: Some(method.name().into()),
            parity: Some(parity.as_str().into()),
            states: Some(vec![display]),
            ground: Some(label.ground),
            n_max: (method == MethodArg::Matrix).then_some(a.matrix.nmax),
            rho: (method == MethodArg::Matrix).then_some(a.matrix.rho),
            x_min: Some(a.x_min),
            x_max: Some(a.x_max),
            samples: Some(a.samples),
            units: units.suffix().into(),
            ..Settings::default()
        },
        table,
        summary,
    })
}

pub fn table1_cmd(a: &Table1Args, units: Units) -> Result<Outcome, CliError> {
    let reference = table1();
    let delta = a.delta.unwrap_or(reference.delta);
    let alphas = a.alpha.clone().map_or_else(|| reference.alphas(), |r| r.0);
    let rho = a.rho.unwrap_or(reference.matrix_rho);
    let n_max = if a.long_run { reference.matrix_n_max } else { a.nmax };
    let rows = solve_all(
        &alphas,
        |al| format!("alpha={al}"),
        |&alpha| {
            let spec = PotentialSpec::regularized(alpha, delta)?;
            let model = matrix_model(&spec, n_max, rho)?;
            let matrix = model.to_hw(block_eigenvalues(&model, Parity::Even)?[0]);
            let tricomi = solve_ground_even(&spec)?.energy;
            let sc = ground_state_energy_estimate(alpha, delta, C0Method::SelfConsistent)?;
            let cf = ground_state_energy_estimate(alpha, delta, C0Method::ClosedForm)?;
            Ok([matrix, tricomi, sc, cf])
        },
    )?;
    let u = units.suffix();
    let names = ["matrix", "tricomi", "c0_selfconsistent", "c0_closedform"];
    let mut columns = vec!["alpha".to_string()];
    columns.extend(names.iter().map(|n| format!("E_{n}_{u}")));
    columns.extend(names.iter().map(|n| format!("ref_E_{n}_{u}")));
    columns.extend(names.iter().map(|n| format!("rel_dev_{n}")));
    let mut table = Table::new(columns);
    let same_delta = delta == reference.delta;
    for (alpha, ours) in alphas.iter().zip(&rows) {
        let tabulated = reference
            .row(*alpha)
            .filter(|_| same_delta)
            .map(|r| [r.matrix, r.tricomi, r.c0_self_consistent, r.c0_closed_form]);
        let mut row: Vec<Cell> = vec![(*alpha).into()];
        row.extend(ours.iter().map(|&e| energy_in(units.core(), e, rho).into()));
        row.extend((0..4).map(|i| tabulated.map(|p| energy_in(units.core(), p[i], rho)).into()));
        row.extend((0..4).map(|i| tabulated.map(|p| (ours[i] - p[i]) / p[i].abs()).into()));
        table.push(row);
    }
    let summary = BTreeMap::from([
        ("reference-matrix-n-max".to_string(), reference.matrix_n_max as f64),
        ("reference-matrix-rho".to_string(), reference.matrix_rho),
    ]);
    Ok(Outcome {
        command: "table1",
        spec: SpecParams {
            alpha: None,
            delta: Some(delta),
            experimental: false,
        },
        settings: Settings {
            alphas: Some(alphas),
            deltas: Some(vec![delta]),
            n_max: Some(n_max),
            rho: Some(rho),
            units: u.into(),
            ..Settings::default()
        },
        table,
        summary,
    })
}

pub fn groundstate_scan(a: &ScanArgs, units: Units) -> Result<Outcome, CliError> {
    let alphas = match &a.alpha {
        Some(list) => list.0.clone(),
        None => {
            if a.steps < 2 {
                return Err(CliError::usage("--steps must be at least 2"));
            }
            let (lo, hi) = a.alpha_range;
            grid(lo, hi, a.steps)
        }
    };
    if let Some(bad) = alphas.iter().find(|al| !(**al >= -0.25 && **al < 0.0)) {
        return Err(CliError::usage(format!("alpha = {bad} is outside [-1/4, 0)")));
    }
    let deltas = a.delta.0.clone();
    let pairs: Vec<(f64, f64)> = alphas
        .iter()
        .flat_map(|&al| deltas.iter().map(move |&d| (al, d)))
        .collect();
    let rows = solve_all(
        &pairs,
        |(al, d)| format!("alpha={al} delta={d}"),
        |&(alpha, delta)| {
            let exact = solve_ground_even(&PotentialSpec::regularized(alpha, delta)?)?.energy;
            let sc = c0_self_consistent(alpha)?;
            let cf = c0_closed_form(alpha)?;
            Ok([
                exact,
                sc.energy_estimate(delta),
                cf.energy_estimate(delta),
                sc.c0,
                cf.c0,
            ])
        },
    )?;
    let u = units.suffix();
    let mut table = Table::new([
        "alpha".to_string(),
        "delta".to_string(),
        format!("E_exact_{u}"),
        format!("E_estimate_selfconsistent_{u}"),
        format!("E_estimate_closedform_{u}"),
        "c0_sc".to_string(),
        "c0_cf".to_string(),
    ]);
    for ((alpha, delta), r) in pairs.iter().zip(&rows) {
        let e = |v: f64| Cell::from(energy_in(units.core(), v, a.rho));
        table.push(vec![
            (*alpha).into(),
            (*delta).into(),
            e(r[0]),
            e(r[1]),
            e(r[2]),
            r[3].into(),
            r[4].into(),
        ]);
    }
    Ok(Outcome {
        command: "groundstate-scan",
        spec: SpecParams {
            alpha: None,
            delta: None,
            experimental: false,
        },
        settings: Settings {
            alphas: Some(alphas),
            deltas: Some(deltas),
            rho: (units == Units::E1).then_some(a.rho),
            units: u.into(),
            ..Settings::default()
        },
        table,
        summary: BTreeMap::new(),
    })
}

pub fn matmech(a: &MatmechArgs, units: Units) -> Result<Outcome, CliError> {
    let p = &a.potential;
    let spec = potential(p, MethodArg::Matrix)?;
    let (n_max, rho) = (a.matrix.nmax, a.matrix.rho);
    let model = matrix_model(&spec, n_max, rho)?;
    let k = a.n.0.iter().max().copied().unwrap_or(0) + 1;
    let parities = a.parity.list();
    let blocks = solve_all(&parities, |q| format!("{q} block"), |&q| eigensolve_block(&model, q, k))?;
    let mut table = Table::new([
        "alpha".to_string(),
        "delta".to_string(),
        "epsilon".to_string(),
        "rho".to_string(),
        "n_max".to_string(),
        "parity".to_string(),
        "index".to_string(),
        energy_column(units),
        "relative_residual".to_string(),
    ]);
    let mut failures = Vec::new();
    for (q, pairs) in parities.iter().zip(&blocks) {
        for &i in &a.n.0 {
            match pairs.get(i) {
                Some(pair) => table.push(vec![
                    p.alpha.into(),
                    p.delta.into(),
                    model.epsilon.into(),
                    rho.into(),
                    n_max.into(),
                    q.as_str().into(),
                    i.into(),
                    energy_in(units.core(), pair.energy_hw, rho).into(),
                    pair.relative_residual.into(),
                ]),
                None => failures.push(Failure {
                    state: format!("{q} index={i}"),
                    error: CoreError::Domain(format!("block has only {} states at n_max = {n_max}", pairs.len())),
                }),
            }
        }
    }
    if !failures.is_empty() {
        return Err(CliError::Solves {
            total: parities.len() * a.n.0.len(),
            failures,
        });
    }
    Ok(Outcome {
        command: "matmech",
        spec: spec_params(p),
        settings: Settings {
            method: Some("matrix".into()),
            parity: Some(a.parity.name().into()),
            states: Some(a.n.0.clone()),
            n_max: Some(n_max),
            rho: Some(rho),
            units: units.suffix().into(),
            ..Settings::default()
        },
        table,
        summary: BTreeMap::new(),
    })
}
