//! Reduction of an arbitrary Hermitian pair `(A, B)` to the canonical pair.
//!
//! Writing `A = lambda I + A0` and `B = mu I + t0 A0 + B0` with
//! `tr A0 = tr B0 = tr A0 B0 = 0`, the pencil splits as
//! `tA + B = (t lambda + mu) I + (t + t0) A0 + B0`, and a unitary `U` maps
//! `(A0, B0)` to `(alpha sigma, beta tau)`. Hence
//!
//! `f_{A,B}(t) = e^mu e^{t lambda} 2 cosh sqrt(alpha^2 (t + t0)^2 + beta^2)`.

use crate::closed_form::f_closed;
use crate::pauli::{eigen2, herm_exp, pauli_sigma, pauli_tau, Complex, HermitianMatrix2, Matrix2};
use crate::{Error, Result};

/// `A0` counts as zero when `tr A0^2` falls below this.
pub const DEGENERACY_THRESHOLD: f64 = 1e-24;

/// Entrywise tolerance used when accepting general matrices as Hermitian.
pub const HERMITIAN_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalDecomposition {
    /// `tr A / 2`.
    pub lambda: f64,
    /// `tr B / 2`.
    pub mu: f64,
    pub t0: f64,
    /// `e^mu`.
    pub c: f64,
    /// Positive eigenvalue of `A0`; zero on the degenerate path.
    pub alpha: f64,
    /// `|b12|` of `U B0 U^*`. On the degenerate path this holds the half
    /// spread of the eigenvalues of `B`, so the same formula applies.
    pub beta: f64,
    /// Unitary with `U A0 U^* = alpha sigma` and `U B0 U^* = beta tau`.
    pub u: Matrix2,
    pub degenerate: bool,
}

impl CanonicalDecomposition {
    /// `U^* (alpha sigma) U`.
    pub fn reconstructed_a0(&self) -> Matrix2 {
        pauli_sigma()
            .scale(self.alpha)
            .to_matrix()
            .conjugate_by(&self.u.adjoint())
    }

    /// `U^* (beta tau) U`. Zero on the degenerate path.
    pub fn reconstructed_b0(&self) -> Matrix2 {
        if self.degenerate {
            return Matrix2::zero();
        }
        pauli_tau()
            .scale(self.beta)
            .to_matrix()
            .conjugate_by(&self.u.adjoint())
    }
}

/// `a = lambda I + a0` with `tr a0 = 0`.
pub fn traceless_split(a: &HermitianMatrix2) -> (f64, HermitianMatrix2) {
    let lambda = 0.5 * a.trace();
    let d = 0.5 * (a.a11() - a.a22());
    let a0 = HermitianMatrix2::new(d, -d, a.a12()).expect("finite input gives finite split");
    (lambda, a0)
}

/// `tr(a0 b) / tr(a0^2)`.
pub fn compute_t0(a0: &HermitianMatrix2, b: &HermitianMatrix2) -> Result<f64> {
    let trace_sq = a0.trace_product(a0);
    if trace_sq <= DEGENERACY_THRESHOLD {
        return Err(Error::DegenerateA { trace_sq });
    }
    Ok(a0.trace_product(b) / trace_sq)
}

pub fn reduce(a: &HermitianMatrix2, b: &HermitianMatrix2) -> CanonicalDecomposition {
    let (lambda, a0) = traceless_split(a);
    let (mu, b_traceless) = traceless_split(b);
    let c = mu.exp();

    let t0 = match compute_t0(&a0, b) {
        Ok(t0) => t0,
        Err(_) => {
            return CanonicalDecomposition {
                lambda,
                mu,
                t0: 0.0,
                c,
                alpha: 0.0,
                beta: b.half_spread(),
                u: Matrix2::identity(),
                degenerate: true,
            }
        }
    };

    let b0 = b_traceless - a0.scale(t0);
    let (alpha, _, u) = eigen2(&a0);
    let b12 = b0.conjugate_by(&u).a12();
    // diag(e^{i theta}, 1) leaves sigma alone and rotates b12 onto the positive axis
    let theta = if b12 == Complex::new(0.0, 0.0) {
        0.0
    } else {
        -b12.arg()
    };
    let phase = Matrix2::new(
        Complex::from_polar(1.0, theta),
        Complex::new(0.0, 0.0),
        Complex::new(0.0, 0.0),
        Complex::new(1.0, 0.0),
    );

    CanonicalDecomposition {
        lambda,
        mu,
        t0,
        c,
        alpha,
        beta: b12.norm(),
        u: phase * u,
        degenerate: false,
    }
}

/// [`reduce`] for general matrices, which must be Hermitian to within
/// [`HERMITIAN_TOLERANCE`].
pub fn reduce_matrices(a: &Matrix2, b: &Matrix2) -> Result<CanonicalDecomposition> {
    let a = HermitianMatrix2::try_from_matrix(a, HERMITIAN_TOLERANCE)?;
    let b = HermitianMatrix2::try_from_matrix(b, HERMITIAN_TOLERANCE)?;
    Ok(reduce(&a, &b))
}

/// `tr exp(tA + B)`.
pub fn f_direct(a: &HermitianMatrix2, b: &HermitianMatrix2, t: f64) -> f64 {
    herm_exp(&(a.scale(t) + *b)).trace().re
}

/// `c e^{t lambda} 2 cosh sqrt(alpha^2 (t + t0)^2 + beta^2)`.
pub fn f_canonical(dec: &CanonicalDecomposition, t: f64) -> f64 {
    dec.c * (t * dec.lambda).exp() * f_closed(dec.alpha, dec.beta, t + dec.t0)
}
