//! Numerical certification of exponential convexity.
//!
//! `f` is exponentially convex when every Gram matrix `[f(t_r + t_s)]` is
//! positive semidefinite. Since `f` is real the matrix is real symmetric and
//! checking real coefficient vectors suffices. A certificate here only ever
//! means "PSD on the grids that were tried".

mod jacobi;

pub use jacobi::{eigenvalues_sym, min_eig_sym, SymmetricMatrix, MAX_SWEEPS};

use crate::{Error, Result};

/// Largest grid accepted by [`gram_matrix`].
pub const MAX_GRID: usize = 64;
/// Largest grid used for certification runs.
pub const CERTIFY_GRID: usize = 12;
/// `min_eig >= -CERTIFY_TOL * scale` certifies.
pub const CERTIFY_TOL: f64 = 1e-9;
/// `min_eig < -VIOLATE_TOL * scale` is a violation.
pub const VIOLATE_TOL: f64 = 1e-6;
/// Relative slack for the `f(t1 + t2) <= sqrt(f(2 t1) f(2 t2))` check.
pub const SQRT_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    CertifiedPsd,
    Inconclusive,
    Violated,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::CertifiedPsd => "certified-psd",
            Verdict::Inconclusive => "inconclusive",
            Verdict::Violated => "violated",
        }
    }

    /// Worst of several verdicts: any violation wins, then any inconclusive.
    pub fn aggregate<I: IntoIterator<Item = Verdict>>(verdicts: I) -> Verdict {
        verdicts
            .into_iter()
            .fold(Verdict::CertifiedPsd, |acc, v| match (acc, v) {
                (Verdict::Violated, _) | (_, Verdict::Violated) => Verdict::Violated,
                (Verdict::Inconclusive, _) | (_, Verdict::Inconclusive) => Verdict::Inconclusive,
                _ => Verdict::CertifiedPsd,
            })
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GramReport {
    pub grid: Vec<f64>,
    pub gram: SymmetricMatrix,
    pub min_eigenvalue: f64,
    /// `max(1, largest diagonal entry)`.
    pub scale: f64,
    pub tolerance: f64,
    pub verdict: Verdict,
}

/// `[f(t_r + t_s)]` over the grid.
pub fn gram_matrix<F: Fn(f64) -> f64>(f: F, grid: &[f64]) -> Result<SymmetricMatrix> {
    if grid.len() > MAX_GRID {
        return Err(Error::GridTooLarge(grid.len()));
    }
    if grid.iter().any(|t| !t.is_finite()) {
        return Err(Error::NonFinite("grid"));
    }
    let gram = SymmetricMatrix::from_fn(grid.len(), |r, s| f(grid[r] + grid[s]));
    if (0..gram.dim()).any(|r| (0..gram.dim()).any(|s| !gram.get(r, s).is_finite())) {
        return Err(Error::NonFinite("Gram matrix entry"));
    }
    Ok(gram)
}

pub fn classify(min_eigenvalue: f64, scale: f64) -> Verdict {
    if min_eigenvalue >= -CERTIFY_TOL * scale {
        Verdict::CertifiedPsd
    } else if min_eigenvalue < -VIOLATE_TOL * scale {
        Verdict::Violated
    } else {
        Verdict::Inconclusive
    }
}

pub fn gram_report<F: Fn(f64) -> f64>(f: F, grid: &[f64]) -> Result<GramReport> {
    let gram = gram_matrix(f, grid)?;
    report_for(grid.to_vec(), gram)
}

fn report_for(grid: Vec<f64>, gram: SymmetricMatrix) -> Result<GramReport> {
    let min_eigenvalue = min_eig_sym(&gram)?;
    let scale = gram.max_diagonal().max(1.0);
    Ok(GramReport {
        grid,
        gram,
        min_eigenvalue,
        scale,
        tolerance: CERTIFY_TOL,
        verdict: classify(min_eigenvalue, scale),
    })
}

/// One [`GramReport`] per grid.
pub fn check_exp_convex<F: Fn(f64) -> f64>(f: F, grids: &[Vec<f64>]) -> Result<Vec<GramReport>> {
    grids.iter().map(|g| gram_report(&f, g)).collect()
}

pub fn aggregate_verdict(reports: &[GramReport]) -> Verdict {
    Verdict::aggregate(reports.iter().map(|r| r.verdict))
}

/// Parameters of the derived functions checked by [`hadamard_and_sum_checks`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosureParams {
    /// Non-negative multiplier for `c f1`.
    pub c: f64,
    /// `f1(a t + b)`.
    pub a: f64,
    pub b: f64,
}

impl Default for ClosureParams {
    fn default() -> Self {
        Self {
            c: 2.5,
            a: -1.0,
            b: 0.3,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub verdict: Verdict,
    /// Smallest `min_eig / scale` over all grids.
    pub worst_normalized_min_eig: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClosureReport {
    pub checks: Vec<PropertyCheck>,
}

impl ClosureReport {
    pub fn verdict(&self) -> Verdict {
        Verdict::aggregate(self.checks.iter().map(|c| c.verdict))
    }

    pub fn get(&self, name: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn property<F: Fn(f64) -> f64>(
    name: &'static str,
    f: F,
    grids: &[Vec<f64>],
) -> Result<PropertyCheck> {
    let reports = check_exp_convex(f, grids)?;
    Ok(PropertyCheck {
        name,
        verdict: aggregate_verdict(&reports),
        worst_normalized_min_eig: reports
            .iter()
            .map(|r| r.min_eigenvalue / r.scale)
            .fold(f64::INFINITY, f64::min),
    })
}

/// Certifies `f1`, `f2` and the closure combinations `c f1`, `f1 + f2`,
/// `f1 f2` and `f1(a t + b)` on the same grids.
pub fn hadamard_and_sum_checks<F1, F2>(
    f1: F1,
    f2: F2,
    grids: &[Vec<f64>],
    params: ClosureParams,
) -> Result<ClosureReport>
where
    F1: Fn(f64) -> f64,
    F2: Fn(f64) -> f64,
{
    if params.c.is_nan() || params.c < 0.0 {
        return Err(Error::Domain(format!(
            "scale factor c = {} must be non-negative",
            params.c
        )));
    }
    let ClosureParams { c, a, b } = params;
    let checks = vec![
        property("f1", &f1, grids)?,
        property("f2", &f2, grids)?,
        property("scaled", |t| c * f1(t), grids)?,
        property("sum", |t| f1(t) + f2(t), grids)?,
        property("product", |t| f1(t) * f2(t), grids)?,
        property("affine", |t| f1(a * t + b), grids)?,
    ];
    Ok(ClosureReport { checks })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SqrtInequalityReport {
    pub pairs_checked: usize,
    /// Pairs with `f(t1 + t2) > sqrt(f(2 t1) f(2 t2)) (1 + slack)`.
    pub violations: Vec<(f64, f64)>,
    /// Largest `f(t1 + t2) / sqrt(f(2 t1) f(2 t2)) - 1` seen (infinite when the
    /// right-hand side is zero but the left is not).
    pub worst_excess: f64,
}

impl SqrtInequalityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the necessary condition `f(t1 + t2) <= sqrt(f(2 t1) f(2 t2))`.
pub fn sqrt_inequality_check<F: Fn(f64) -> f64>(
    f: F,
    pairs: &[(f64, f64)],
) -> SqrtInequalityReport {
    let mut violations = Vec::new();
    let mut worst_excess = f64::NEG_INFINITY;
    for &(t1, t2) in pairs {
        let lhs = f(t1 + t2);
        let rhs = (f(2.0 * t1) * f(2.0 * t2)).sqrt();
        let excess = if rhs > 0.0 {
            lhs / rhs - 1.0
        } else if lhs > 0.0 {
            f64::INFINITY
        } else {
            0.0
        };
        worst_excess = worst_excess.max(excess);
        if lhs > rhs * (1.0 + SQRT_SLACK) {
            violations.push((t1, t2));
        }
    }
    SqrtInequalityReport {
        pairs_checked: pairs.len(),
        violations,
        worst_excess,
    }
}
