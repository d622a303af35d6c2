//! Trace-exponential functions `t -> tr exp(tA + B)` of 2x2 Hermitian pencils.
//!
//! The crate reduces an arbitrary Hermitian pair to the canonical pair
//! `(alpha * sigma, beta * tau)`, builds the non-negative representing measure
//! of the resulting function in two independent ways (the discrete measures
//! that fall out of the Lie-product word expansion, and the closed-form
//! Bessel-density limit) and certifies exponential convexity numerically by
//! checking Gram matrices `[f(t_r + t_s)]` for positive semidefiniteness.
//!
//! Module map:
//!
//! * [`pauli`]: closed-form 2x2 complex linear algebra and the Pauli constants.
//! * [`reduction`]: rewriting `f_{A,B}` as `c e^{t lambda} f_{alpha sigma, beta tau}(t + t0)`.
//! * [`word_measure`]: the discrete measures `rho_N` and the approximants `E_N`.
//! * [`closed_form`]: `2 cosh sqrt(alpha^2 t^2 + beta^2)`, the Bessel density,
//!   quadrature and the spectral measure of a general pair.
//! * [`convexity`]: Gram-matrix certification and closure-property checks.
//! * [`sampling`]: reproducible random Hermitian pairs, unitaries and grids.

pub mod closed_form;
pub mod convexity;
mod error;
pub mod pauli;
pub mod reduction;
pub mod sampling;
pub mod word_measure;

pub use error::{Error, Result};
pub use pauli::{Complex, HermitianMatrix2, Matrix2};
