//! Composite Gauss–Legendre quadrature with panel doubling.

use std::sync::OnceLock;

use crate::{Error, Result};

pub const NODES_PER_PANEL: usize = 32;
pub const MAX_PANELS: usize = 1 << 10;
/// Successive estimates closer than this (relative) are accepted.
pub const TARGET_REL: f64 = 1e-11;
/// At the panel cap, anything looser than this is a failure.
pub const FAILURE_REL: f64 = 1e-10;

/// Nodes and weights of the `NODES_PER_PANEL`-point rule on `[-1, 1]`.
pub fn gauss_legendre_rule() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| legendre_rule(NODES_PER_PANEL))
}

/// Roots of `P_n` by Newton iteration from the Tricomi initial guesses.
fn legendre_rule(n: usize) -> Vec<(f64, f64)> {
    let nf = n as f64;
    let mut rule = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        rule.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    rule.reverse();
    rule
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// `(integral f, integral |f|)` over `[a, b]` with `panels` equal panels.
fn composite<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: usize) -> (f64, f64) {
    let rule = gauss_legendre_rule();
    let width = (b - a) / panels as f64;
    let half = 0.5 * width;
    let mut total = 0.0;
    let mut total_abs = 0.0;
    for i in 0..panels {
        let mid = a + (i as f64 + 0.5) * width;
        let (mut s, mut s_abs) = (0.0, 0.0);
        for &(x, w) in rule {
            let v = w * f(mid + half * x);
            s += v;
            s_abs += v.abs();
        }
        total += half * s;
        total_abs += half * s_abs;
    }
    (total, total_abs)
}

/// `integral_a^b f`, doubling the panel count until two successive
/// estimates agree to [`TARGET_REL`] of `integral |f|`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let mut panels = 1;
    let (mut prev, _) = composite(&f, a, b, panels);
    let mut rel_change = f64::INFINITY;
    while panels < MAX_PANELS {
        panels *= 2;
        let (cur, scale) = composite(&f, a, b, panels);
        if !cur.is_finite() {
            return Err(Error::QuadratureNoConvergence {
                rel_change: f64::NAN,
                panels,
            });
        }
        let diff = (cur - prev).abs();
        if diff <= TARGET_REL * scale || scale == 0.0 {
            return Ok(cur);
        }
        rel_change = diff / scale;
        prev = cur;
    }
    if rel_change <= FAILURE_REL {
        Ok(prev)
    } else {
        Err(Error::QuadratureNoConvergence { rel_change, panels })
    }
}
