//! Closed-form targets: `f_{alpha sigma, beta tau}`, the diagonal entries of
//! `E(t; beta)`, the limiting measure with its Bessel density, and the
//! spectral measure of a general pair.
//!
//! The limiting measure is
//!
//! `rho(d mu) = delta(mu - 1) d mu + (1 + mu) dhat(mu, beta) d mu`,
//! `dhat(mu, beta) = beta I_1(beta sqrt(1 - mu^2)) / (2 sqrt(1 - mu^2))`,
//!
//! and `integral e^{t mu sigma} rho(d mu) = diag(e1(t, beta), e2(t, beta))`.

mod bessel;
pub mod quadrature;
mod spectral;

pub use bessel::{bessel_i1, I1_MAX_ARG};
pub use quadrature::integrate;
pub use spectral::{spectral_measure, ContinuousPiece, SpectralAtom, SpectralMeasure};

use crate::pauli::{sinhc, Matrix2};
use crate::{Error, Result};

/// Below this value of `1 - mu^2` the density uses its endpoint expansion.
const ENDPOINT_WIDTH: f64 = 1e-12;

/// `2 cosh sqrt(alpha^2 t^2 + beta^2)`.
pub fn f_closed(alpha: f64, beta: f64, t: f64) -> f64 {
    2.0 * (alpha * t).hypot(beta).cosh()
}

/// `(e1(t, beta), e2(t, beta))` where
/// `e1,2 = cosh r +- t sinh(r) / r`, `r = sqrt(t^2 + beta^2)`.
pub fn e_pair(t: f64, beta: f64) -> (f64, f64) {
    let r = t.hypot(beta);
    let k = t.abs();
    let ch = r.cosh();
    let larger = ch + k * sinhc(r);
    let smaller = if r > 1.0 {
        // cosh r - (k/r) sinh r = ((r - k) e^r + (r + k) e^{-r}) / 2r, r - k = beta^2 / (r + k)
        (beta * beta / (r + k) * r.exp() + (r + k) * (-r).exp()) / (2.0 * r)
    } else {
        ch - k * sinhc(r)
    };
    if t >= 0.0 {
        (larger, smaller)
    } else {
        (smaller, larger)
    }
}

pub fn e1(t: f64, beta: f64) -> f64 {
    e_pair(t, beta).0
}

pub fn e2(t: f64, beta: f64) -> f64 {
    e_pair(t, beta).1
}

/// `E(t; alpha, beta) = (e^{t alpha sigma + beta tau} + e^{t alpha sigma - beta tau}) / 2`,
/// which is `diag(e1(alpha t, beta), e2(alpha t, beta))`.
pub fn e_matrix(t: f64, alpha: f64, beta: f64) -> Matrix2 {
    let (d1, d2) = e_pair(alpha * t, beta);
    Matrix2::diag(d1, d2)
}

/// `beta I_1(beta sqrt(1 - mu^2)) / (2 sqrt(1 - mu^2))`; equals `beta^2 / 4` at `mu = +-1`.
pub fn density_dhat(mu: f64, beta: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&mu) {
        return Err(Error::Domain(format!(
            "density argument mu = {mu} outside [-1, 1]"
        )));
    }
    check_beta(beta)?;
    Ok(dhat(mu, beta))
}

fn check_beta(beta: f64) -> Result<()> {
    if !(0.0..=I1_MAX_ARG).contains(&beta) {
        return Err(Error::Domain(format!(
            "beta = {beta} outside [0, {I1_MAX_ARG}]"
        )));
    }
    Ok(())
}

/// Unchecked density; callers guarantee `|mu| <= 1` and `0 <= beta <= 100`.
fn dhat(mu: f64, beta: f64) -> f64 {
    let w = (1.0 - mu) * (1.0 + mu);
    if w < ENDPOINT_WIDTH {
        let z2 = beta * beta * w.max(0.0);
        return 0.25 * beta * beta * (1.0 + z2 / 8.0);
    }
    let root = w.sqrt();
    beta / (2.0 * root) * bessel::i1_series(beta * root)
}

/// Atom at `mu = 1` plus the density `(1 + mu) dhat(mu, beta)` on `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HybridMeasure {
    pub atom_weight_at_one: f64,
    pub beta: f64,
}

impl HybridMeasure {
    pub fn density(&self, mu: f64) -> f64 {
        if !(-1.0..=1.0).contains(&mu) {
            return 0.0;
        }
        (1.0 + mu) * dhat(mu, self.beta)
    }

    pub fn continuous_mass(&self) -> Result<f64> {
        integrate(|mu| self.density(mu), -1.0, 1.0)
    }

    pub fn total_mass(&self) -> Result<f64> {
        Ok(self.atom_weight_at_one + self.continuous_mass()?)
    }

    /// `integral mu^k rho(d mu)`.
    pub fn moment(&self, k: i32) -> Result<f64> {
        Ok(self.atom_weight_at_one + integrate(|mu| mu.powi(k) * self.density(mu), -1.0, 1.0)?)
    }

    /// `count` equally spaced samples `(mu, density(mu))` over `[-1, 1]`.
    pub fn density_grid(&self, count: usize) -> Vec<(f64, f64)> {
        grid(-1.0, 1.0, count)
            .into_iter()
            .map(|mu| (mu, self.density(mu)))
            .collect()
    }
}

pub(crate) fn grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..count)
            .map(|i| {
                if i == count - 1 {
                    hi
                } else {
                    lo + (hi - lo) * i as f64 / (count - 1) as f64
                }
            })
            .collect(),
    }
}

/// The limiting measure for the canonical pair with parameter `beta`.
pub fn rho_closed(beta: f64) -> Result<HybridMeasure> {
    check_beta(beta)?;
    Ok(HybridMeasure {
        atom_weight_at_one: 1.0,
        beta,
    })
}

/// `atom e^{sign t} + integral e^{sign t mu} (1 + mu) dhat(mu, beta) d mu`;
/// `sign = +1` gives `e1(t, beta)`, `sign = -1` gives `e2(t, beta)`.
pub fn laplace_eval(m: &HybridMeasure, t: f64, sign: f64) -> Result<f64> {
    if !t.is_finite() {
        return Err(Error::NonFinite("laplace_eval t"));
    }
    let x = sign.signum() * t;
    let continuous = integrate(|mu| (x * mu).exp() * m.density(mu), -1.0, 1.0)?;
    Ok(m.atom_weight_at_one * x.exp() + continuous)
}
