use serde::Serialize;
use serde_json::json;
use trexp_core::closed_form::{e_pair, f_closed, laplace_eval, rho_closed};
use trexp_core::convexity::{aggregate_verdict, check_exp_convex, Verdict, CERTIFY_TOL, MAX_GRID};
use trexp_core::reduction::f_direct;
use trexp_core::sampling::{random_grids, seeded};
use trexp_core::word_measure::convergence_table;

use crate::cli::{ConvergenceArgs, ConvexityArgs, ReportArgs, RepresentationArgs};
use crate::error::{CliError, CliResult};
use crate::input::{finite, read_matrix};
use crate::report::{emit, to_json, Check, RunReport};

const RATIO_LO: f64 = 1.7;
const RATIO_HI: f64 = 2.3;
const REPRESENTATION_TOL: f64 = 1e-8;
const GRID_LO: f64 = -3.0;
const GRID_HI: f64 = 3.0;

fn publish(report: RunReport, args: &ReportArgs) -> CliResult<()> {
    emit(args.report.as_deref(), &to_json(&report))?;
    report.into_result().map(drop)
}

#[derive(Debug, Serialize)]
struct ConvergenceRowOut {
    n: usize,
    error: f64,
    ratio: Option<f64>,
}

pub fn convergence(args: &ConvergenceArgs) -> CliResult<()> {
    let alpha = finite("alpha", args.alpha)?;
    let beta = finite("beta", args.beta)?;
    let t = finite("t", args.t)?;
    let ns = &args.n_list;
    if ns.len() < 2 {
        return Err(CliError::Domain("n-list needs at least two entries".into()));
    }
    if ns[0] == 0 || ns.windows(2).any(|w| w[1] != 2 * w[0]) {
        return Err(CliError::Domain(format!(
            "n-list must start at n >= 1 and double at each step, got {ns:?}"
        )));
    }

    let rows = convergence_table(alpha, beta, t, ns);
    eprintln!("{:>8} {:>14} {:>8}", "n", "error", "ratio");
    for r in &rows {
        let ratio = r
            .ratio
            .map_or_else(|| "-".to_string(), |x| format!("{x:.4}"));
        eprintln!("{:>8} {:>14.6e} {:>8}", r.n, r.error, ratio);
    }
    let checks = rows
        .windows(2)
        .map(|w| {
            let ratio = w[1].ratio.expect("not the first row");
            Check::within(
                format!("ratio_{}_{}", w[0].n, w[1].n),
                ratio,
                RATIO_LO,
                RATIO_HI,
            )
        })
        .collect();
    let table: Vec<ConvergenceRowOut> = rows
        .iter()
        .map(|r| ConvergenceRowOut {
            n: r.n,
            error: r.error,
            ratio: r.ratio,
        })
        .collect();
    let report = RunReport {
        command: "verify convergence".into(),
        parameters: json!({ "alpha": alpha, "beta": beta, "t": t, "n_list": ns }),
        outputs: json!({ "table": table }),
        checks,
    };
    publish(report, &args.out)
}

#[derive(Debug, Serialize)]
struct RepresentationRow {
    t: f64,
    e1: f64,
    e2: f64,
    f: f64,
    laplace_plus: f64,
    laplace_minus: f64,
}

/// `|got - want| / max(1, |want|)`.
fn scaled_residual(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(1.0)
}

pub fn representation(args: &RepresentationArgs) -> CliResult<()> {
    let alpha = finite("alpha", args.alpha)?;
    let beta = finite("beta", args.beta)?;
    let rho = rho_closed(beta)?;

    let mut rows = Vec::with_capacity(args.t_range.count);
    let (mut worst_e1, mut worst_e2, mut worst_f) = (0.0f64, 0.0f64, 0.0f64);
    for t in args.t_range.points() {
        let x = alpha * t;
        let plus = laplace_eval(&rho, x, 1.0)?;
        let minus = laplace_eval(&rho, x, -1.0)?;
        let (e1, e2) = e_pair(x, beta);
        let f = f_closed(alpha, beta, t);
        worst_e1 = worst_e1.max(scaled_residual(plus, e1));
        worst_e2 = worst_e2.max(scaled_residual(minus, e2));
        worst_f = worst_f.max(scaled_residual(plus + minus, f));
        rows.push(RepresentationRow {
            t,
            e1,
            e2,
            f,
            laplace_plus: plus,
            laplace_minus: minus,
        });
    }
    let report = RunReport {
        command: "verify representation".into(),
        parameters: json!({ "alpha": alpha, "beta": beta, "t_range": args.t_range.to_string() }),
        outputs: json!({ "table": rows }),
        checks: vec![
            Check::at_most("laplace_plus_vs_e1", worst_e1, REPRESENTATION_TOL),
            Check::at_most("laplace_minus_vs_e2", worst_e2, REPRESENTATION_TOL),
            Check::at_most("laplace_sum_vs_f", worst_f, REPRESENTATION_TOL),
        ],
    };
    publish(report, &args.out)
}

#[derive(Debug, Serialize)]
struct GridOut {
    points: Vec<f64>,
    min_eigenvalue: f64,
    scale: f64,
    verdict: &'static str,
}

pub fn convexity(args: &ConvexityArgs) -> CliResult<()> {
    let a = read_matrix(&args.matrix_a)?;
    let b = read_matrix(&args.matrix_b)?;
    if args.grids == 0 {
        return Err(CliError::Domain("grids must be at least 1".into()));
    }
    if !(2..=MAX_GRID).contains(&args.max_grid_size) {
        return Err(CliError::Domain(format!(
            "max-grid-size must lie in [2, {MAX_GRID}], got {}",
            args.max_grid_size
        )));
    }

    let mut rng = seeded(args.seed);
    let grids = random_grids(&mut rng, args.grids, args.max_grid_size, GRID_LO, GRID_HI);
    let reports = check_exp_convex(|t| f_direct(&a, &b, t), &grids)?;
    let verdict = aggregate_verdict(&reports);
    let worst = reports
        .iter()
        .map(|r| r.min_eigenvalue / r.scale)
        .fold(f64::INFINITY, f64::min);

    let report = RunReport {
        command: "verify convexity".into(),
        parameters: json!({
            "matrix_a": args.matrix_a.display().to_string(),
            "matrix_b": args.matrix_b.display().to_string(),
            "grids": args.grids,
            "max_grid_size": args.max_grid_size,
            "interval": [GRID_LO, GRID_HI],
            "seed": args.seed,
        }),
        outputs: json!({
            "verdict": verdict.as_str(),
            "grids": reports.iter().map(|r| GridOut {
                points: r.grid.clone(),
                min_eigenvalue: r.min_eigenvalue,
                scale: r.scale,
                verdict: r.verdict.as_str(),
            }).collect::<Vec<_>>(),
        }),
        checks: vec![Check {
            name: "exp_convexity".into(),
            pass: verdict == Verdict::CertifiedPsd,
            measured: worst,
            tolerance: format!(">= {:e} (min eigenvalue / scale)", -CERTIFY_TOL),
        }],
    };
    publish(report, &args.out)
}
