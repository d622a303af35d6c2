use serde::Serialize;
use trexp_core::closed_form::rho_closed;
use trexp_core::word_measure::build_rho_n;

use crate::cli::{ApproxArgs, ExactArgs};
use crate::error::{CliError, CliResult};
use crate::format::general;
use crate::input::finite;
use crate::report::{emit, to_json, write_file, Check};

const CSV_DIGITS: usize = 12;
const EXACT_MASS_TOL: f64 = 1e-9;

#[derive(Debug, Serialize)]
struct AtomRow {
    s: usize,
    mu: f64,
    weight: f64,
}

#[derive(Debug, Serialize)]
struct ApproxOutput {
    #[serde(rename = "type")]
    kind: &'static str,
    n: usize,
    beta: f64,
    atoms: Vec<AtomRow>,
    mass: f64,
    mass_bound: f64,
    checks: Vec<Check>,
}

#[derive(Debug, Serialize)]
struct PointMass {
    mu: f64,
    weight: f64,
}

#[derive(Debug, Serialize)]
struct DensityRow {
    mu: f64,
    density: f64,
}

#[derive(Debug, Serialize)]
struct ExactOutput {
    #[serde(rename = "type")]
    kind: &'static str,
    beta: f64,
    atom: PointMass,
    continuous_mass: f64,
    mass: f64,
    mass_bound: f64,
    density_grid: Vec<DensityRow>,
    checks: Vec<Check>,
}

fn check_beta(beta: f64) -> CliResult<f64> {
    let beta = finite("beta", beta)?;
    if beta < 0.0 {
        return Err(CliError::Domain(format!(
            "beta must be non-negative, got {beta}"
        )));
    }
    Ok(beta)
}

/// `mass < e^beta`, with equality allowed only for the point mass at `beta = 0`.
fn mass_bound_check(mass: f64, beta: f64) -> Check {
    let bound = beta.exp();
    Check {
        name: "mass_below_exp_beta".into(),
        pass: mass < bound || (beta == 0.0 && mass == 1.0),
        measured: mass,
        tolerance: format!("< {bound}"),
    }
}

fn finish(checks: &[Check]) -> CliResult<()> {
    let failed: Vec<&str> = checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.name.as_str())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Invariant(failed.join(", ")))
    }
}

fn csv<const N: usize>(header: &str, rows: impl Iterator<Item = [String; N]>) -> String {
    let mut out = format!("{header}\n");
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn approx(args: &ApproxArgs) -> CliResult<()> {
    if args.n < 2 {
        return Err(CliError::Domain(format!(
            "n must be at least 2, got {}",
            args.n
        )));
    }
    let beta = check_beta(args.beta)?;
    let rho = build_rho_n(args.n, beta)?;
    let mass = rho.total_mass();
    let checks = vec![mass_bound_check(mass, beta)];

    if let Some(path) = &args.csv {
        let rows = rho.atoms.iter().map(|a| {
            [
                a.s.to_string(),
                general(a.location, CSV_DIGITS),
                general(a.weight, CSV_DIGITS),
            ]
        });
        write_file(path, &csv("s,mu,weight", rows))?;
    }
    let out = ApproxOutput {
        kind: "approx",
        n: args.n,
        beta,
        atoms: rho
            .atoms
            .iter()
            .map(|a| AtomRow {
                s: a.s,
                mu: a.location,
                weight: a.weight,
            })
            .collect(),
        mass,
        mass_bound: beta.exp(),
        checks,
    };
    emit(args.json.as_deref(), &to_json(&out))?;
    finish(&out.checks)
}

pub fn exact(args: &ExactArgs) -> CliResult<()> {
    let beta = check_beta(args.beta)?;
    if args.grid_points < 2 {
        return Err(CliError::Domain(format!(
            "grid-points must be at least 2, got {}",
            args.grid_points
        )));
    }
    let rho = rho_closed(beta)?;
    let continuous_mass = rho.continuous_mass()?;
    let mass = rho.atom_weight_at_one + continuous_mass;
    let cosh = beta.cosh();
    let checks = vec![
        mass_bound_check(mass, beta),
        Check::at_most(
            "mass_equals_cosh_beta",
            (mass - cosh).abs() / cosh,
            EXACT_MASS_TOL,
        ),
    ];
    let grid = rho.density_grid(args.grid_points);

    if let Some(path) = &args.csv {
        let rows = grid
            .iter()
            .map(|&(mu, d)| [general(mu, CSV_DIGITS), general(d, CSV_DIGITS)]);
        write_file(path, &csv("mu,density", rows))?;
    }
    let out = ExactOutput {
        kind: "hybrid",
        beta,
        atom: PointMass {
            mu: 1.0,
            weight: rho.atom_weight_at_one,
        },
        continuous_mass,
        mass,
        mass_bound: beta.exp(),
        density_grid: grid
            .into_iter()
            .map(|(mu, density)| DensityRow { mu, density })
            .collect(),
        checks,
    };
    emit(args.json.as_deref(), &to_json(&out))?;
    finish(&out.checks)
}
