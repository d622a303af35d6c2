use serde::Serialize;
use trexp_core::reduction::{f_canonical, f_direct, reduce};
use trexp_core::Matrix2;

use crate::cli::ReduceArgs;
use crate::error::{CliError, CliResult};
use crate::input::read_matrix;
use crate::report::{emit, to_json, Check};

const RESIDUAL_TOL: f64 = 1e-10;

#[derive(Debug, Serialize)]
struct ReduceOutput {
    lambda: f64,
    mu: f64,
    t0: f64,
    c: f64,
    alpha: f64,
    beta: f64,
    /// Rows of `U`, entries as `[re, im]`.
    #[serde(rename = "U")]
    u: [[[f64; 2]; 2]; 2],
    degenerate: bool,
    checks: Vec<Check>,
}

fn complex_rows(m: &Matrix2) -> [[[f64; 2]; 2]; 2] {
    let e = |z: trexp_core::Complex| [z.re, z.im];
    [[e(m.m11), e(m.m12)], [e(m.m21), e(m.m22)]]
}

pub fn run(args: &ReduceArgs) -> CliResult<()> {
    let a = read_matrix(&args.matrix_a)?;
    let b = read_matrix(&args.matrix_b)?;
    let dec = reduce(&a, &b);

    let residual = (-4..=4)
        .map(|t| {
            let t = t as f64;
            let direct = f_direct(&a, &b, t);
            (f_canonical(&dec, t) - direct).abs() / direct
        })
        .fold(0.0, f64::max);
    let check = Check::at_most("round_trip_residual", residual, RESIDUAL_TOL);
    let pass = check.pass;

    let out = ReduceOutput {
        lambda: dec.lambda,
        mu: dec.mu,
        t0: dec.t0,
        c: dec.c,
        alpha: dec.alpha,
        beta: dec.beta,
        u: complex_rows(&dec.u),
        degenerate: dec.degenerate,
        checks: vec![check],
    };
    emit(args.json.as_deref(), &to_json(&out))?;
    if pass {
        Ok(())
    } else {
        Err(CliError::Invariant(format!(
            "round-trip residual {residual:e} exceeds {RESIDUAL_TOL:e}"
        )))
    }
}
