use std::fmt;
use std::sync::Arc;

use super::{check_beta, dhat, grid, integrate};
use crate::pauli::HermitianMatrix2;
use crate::reduction::reduce;
use crate::Result;

pub type DensityFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralAtom {
    pub location: f64,
    pub weight: f64,
}

/// A density on `[lo, hi]`, evaluated on demand.
#[derive(Clone)]
pub struct ContinuousPiece {
    pub lo: f64,
    pub hi: f64,
    pub density: DensityFn,
}

impl fmt::Debug for ContinuousPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ContinuousPiece")
            .field("lo", &self.lo)
            .field("hi", &self.hi)
            .finish_non_exhaustive()
    }
}

impl ContinuousPiece {
    pub fn value(&self, nu: f64) -> f64 {
        if nu < self.lo || nu > self.hi {
            0.0
        } else {
            (self.density)(nu)
        }
    }
}

/// Non-negative measure `sigma_{A,B}` with `f_{A,B}(t) = integral e^{t nu} sigma(d nu)`.
#[derive(Debug, Clone)]
pub struct SpectralMeasure {
    pub support_lo: f64,
    pub support_hi: f64,
    pub atoms: Vec<SpectralAtom>,
    pub pieces: Vec<ContinuousPiece>,
}

impl SpectralMeasure {
    /// Bilateral Laplace transform `integral e^{t nu} sigma(d nu)`.
    pub fn laplace(&self, t: f64) -> Result<f64> {
        let mut total: f64 = self
            .atoms
            .iter()
            .map(|a| a.weight * (t * a.location).exp())
            .sum();
        for piece in &self.pieces {
            total += integrate(
                |nu| (t * nu).exp() * (piece.density)(nu),
                piece.lo,
                piece.hi,
            )?;
        }
        Ok(total)
    }

    pub fn total_mass(&self) -> Result<f64> {
        self.laplace(0.0)
    }

    /// Sum of all continuous pieces sampled at `count` equally spaced points
    /// over the support.
    pub fn density_grid(&self, count: usize) -> Vec<(f64, f64)> {
        grid(self.support_lo, self.support_hi, count)
            .into_iter()
            .map(|nu| (nu, self.pieces.iter().map(|p| p.value(nu)).sum()))
            .collect()
    }
}

/// Push the limiting measure of the canonical pair forward to `sigma_{A,B}`.
///
/// With `reduce(a, b) = (lambda, t0, c, alpha, beta, U)`, each `mu`-mass
/// `rho(d mu)` lands at `lambda + alpha mu` with weight `c e^{t0 alpha mu}`
/// and at `lambda - alpha mu` with weight `c e^{-t0 alpha mu}`. The support is
/// `[lambda - alpha, lambda + alpha]`, the eigenvalue interval of `a`.
pub fn spectral_measure(a: &HermitianMatrix2, b: &HermitianMatrix2) -> Result<SpectralMeasure> {
    let dec = reduce(a, b);
    check_beta(dec.beta)?;
    let (lambda, alpha, beta, c) = (dec.lambda, dec.alpha, dec.beta, dec.c);

    if dec.degenerate {
        return Ok(SpectralMeasure {
            support_lo: lambda,
            support_hi: lambda,
            atoms: vec![SpectralAtom {
                location: lambda,
                weight: 2.0 * c * beta.cosh(),
            }],
            pieces: Vec::new(),
        });
    }

    let tilt = dec.t0 * alpha;
    let (lo, hi) = (lambda - alpha, lambda + alpha);
    let atoms = vec![
        SpectralAtom {
            location: lo,
            weight: c * (-tilt).exp(),
        },
        SpectralAtom {
            location: hi,
            weight: c * tilt.exp(),
        },
    ];

    let mut pieces = Vec::new();
    if beta > 0.0 {
        for sign in [1.0f64, -1.0] {
            let density: DensityFn = Arc::new(move |nu: f64| {
                let mu = (sign * (nu - lambda) / alpha).clamp(-1.0, 1.0);
                c * (sign * tilt * mu).exp() * (1.0 + mu) * dhat(mu, beta) / alpha
            });
            pieces.push(ContinuousPiece { lo, hi, density });
        }
    }

    Ok(SpectralMeasure {
        support_lo: lo,
        support_hi: hi,
        atoms,
        pieces,
    })
}
