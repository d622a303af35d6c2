//! Closed-form 2x2 complex linear algebra.
//!
//! Everything here is exact up to floating-point rounding: the exponential of
//! a 2x2 Hermitian matrix and its eigendecomposition are written out by hand,
//! so no iterative linear-algebra backend is involved.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result};

pub type Complex = num_complex::Complex64;

const ZERO: Complex = Complex::new(0.0, 0.0);
const ONE: Complex = Complex::new(1.0, 0.0);

/// Below this argument `sinhc` switches to its Taylor polynomial.
const SINHC_SERIES_THRESHOLD: f64 = 1e-4;

/// A general 2x2 complex matrix, row-major.
#[derive(Clone, Copy, PartialEq)]
pub struct Matrix2 {
    pub m11: Complex,
    pub m12: Complex,
    pub m21: Complex,
    pub m22: Complex,
}

impl Matrix2 {
    pub const fn new(m11: Complex, m12: Complex, m21: Complex, m22: Complex) -> Self {
        Self { m11, m12, m21, m22 }
    }

    pub const fn from_real(rows: [[f64; 2]; 2]) -> Self {
        Self::new(
            Complex::new(rows[0][0], 0.0),
            Complex::new(rows[0][1], 0.0),
            Complex::new(rows[1][0], 0.0),
            Complex::new(rows[1][1], 0.0),
        )
    }

    pub const fn identity() -> Self {
        Self::new(ONE, ZERO, ZERO, ONE)
    }

    pub const fn zero() -> Self {
        Self::new(ZERO, ZERO, ZERO, ZERO)
    }

    pub const fn diag(d1: f64, d2: f64) -> Self {
        Self::from_real([[d1, 0.0], [0.0, d2]])
    }

    pub fn entries(&self) -> [Complex; 4] {
        [self.m11, self.m12, self.m21, self.m22]
    }

    pub fn scale(&self, c: Complex) -> Self {
        Self::new(c * self.m11, c * self.m12, c * self.m21, c * self.m22)
    }

    pub fn scale_real(&self, c: f64) -> Self {
        self.scale(Complex::new(c, 0.0))
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::new(
            self.m11.conj(),
            self.m21.conj(),
            self.m12.conj(),
            self.m22.conj(),
        )
    }

    pub fn trace(&self) -> Complex {
        self.m11 + self.m22
    }

    pub fn det(&self) -> Complex {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries().iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn is_finite(&self) -> bool {
        self.entries()
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        (*self * self.adjoint()).max_abs_diff(&Self::identity()) <= tol
    }

    /// `u * self * u^*`.
    pub fn conjugate_by(&self, u: &Matrix2) -> Self {
        *u * *self * u.adjoint()
    }
}

impl Add for Matrix2 {
    type Output = Matrix2;
    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.m11 + rhs.m11,
            self.m12 + rhs.m12,
            self.m21 + rhs.m21,
            self.m22 + rhs.m22,
        )
    }
}

impl Sub for Matrix2 {
    type Output = Matrix2;
    fn sub(self, rhs: Self) -> Self {
        Self::new(
            self.m11 - rhs.m11,
            self.m12 - rhs.m12,
            self.m21 - rhs.m21,
            self.m22 - rhs.m22,
        )
    }
}

impl Neg for Matrix2 {
    type Output = Matrix2;
    fn neg(self) -> Self {
        self.scale_real(-1.0)
    }
}

impl Mul for Matrix2 {
    type Output = Matrix2;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.m11 * rhs.m11 + self.m12 * rhs.m21,
            self.m11 * rhs.m12 + self.m12 * rhs.m22,
            self.m21 * rhs.m11 + self.m22 * rhs.m21,
            self.m21 * rhs.m12 + self.m22 * rhs.m22,
        )
    }
}

impl fmt::Debug for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.m11, self.m12, self.m21, self.m22
        )
    }
}

/// A 2x2 Hermitian matrix stored by its independent entries; `a21` is the
/// conjugate of `a12`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianMatrix2 {
    a11: f64,
    a22: f64,
    a12: Complex,
}

impl HermitianMatrix2 {
    pub fn new(a11: f64, a22: f64, a12: Complex) -> Result<Self> {
        if !(a11.is_finite() && a22.is_finite() && a12.re.is_finite() && a12.im.is_finite()) {
            return Err(Error::NonFinite("HermitianMatrix2"));
        }
        Ok(Self { a11, a22, a12 })
    }

    /// Real symmetric matrix `[[a11, a12], [a12, a22]]`.
    pub fn real(a11: f64, a22: f64, a12: f64) -> Result<Self> {
        Self::new(a11, a22, Complex::new(a12, 0.0))
    }

    pub const fn zero() -> Self {
        Self {
            a11: 0.0,
            a22: 0.0,
            a12: ZERO,
        }
    }

    pub const fn identity() -> Self {
        Self {
            a11: 1.0,
            a22: 1.0,
            a12: ZERO,
        }
    }

    /// Accepts `m` if `|m - m^*| <= tol` entrywise and returns its Hermitian part.
    pub fn try_from_matrix(m: &Matrix2, tol: f64) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::NonFinite("Matrix2"));
        }
        let residual = m.max_abs_diff(&m.adjoint());
        if residual > tol {
            return Err(Error::NotHermitian { residual });
        }
        Ok(Self::hermitian_part(m))
    }

    /// `(m + m^*) / 2`, taken without any check.
    pub fn hermitian_part(m: &Matrix2) -> Self {
        Self {
            a11: m.m11.re,
            a22: m.m22.re,
            a12: (m.m12 + m.m21.conj()) * 0.5,
        }
    }

    pub fn a11(&self) -> f64 {
        self.a11
    }

    pub fn a22(&self) -> f64 {
        self.a22
    }

    pub fn a12(&self) -> Complex {
        self.a12
    }

    pub fn to_matrix(&self) -> Matrix2 {
        Matrix2::new(
            Complex::new(self.a11, 0.0),
            self.a12,
            self.a12.conj(),
            Complex::new(self.a22, 0.0),
        )
    }

    pub fn trace(&self) -> f64 {
        self.a11 + self.a22
    }

    /// `tr(self * other)`, which is real for Hermitian factors.
    pub fn trace_product(&self, other: &Self) -> f64 {
        self.a11 * other.a11 + self.a22 * other.a22 + 2.0 * (self.a12 * other.a12.conj()).re
    }

    pub fn scale(&self, c: f64) -> Self {
        Self {
            a11: c * self.a11,
            a22: c * self.a22,
            a12: self.a12 * c,
        }
    }

    /// `self + shift * I`.
    pub fn shift(&self, shift: f64) -> Self {
        Self {
            a11: self.a11 + shift,
            a22: self.a22 + shift,
            a12: self.a12,
        }
    }

    /// `u * self * u^*`, re-symmetrized.
    pub fn conjugate_by(&self, u: &Matrix2) -> Self {
        Self::hermitian_part(&self.to_matrix().conjugate_by(u))
    }

    /// Half the spread of the eigenvalues, `sqrt(((a11 - a22) / 2)^2 + |a12|^2)`.
    pub fn half_spread(&self) -> f64 {
        (0.5 * (self.a11 - self.a22)).hypot(self.a12.norm())
    }

    pub fn max_abs(&self) -> f64 {
        self.a11.abs().max(self.a22.abs()).max(self.a12.norm())
    }
}

impl Add for HermitianMatrix2 {
    type Output = HermitianMatrix2;
    fn add(self, rhs: Self) -> Self {
        Self {
            a11: self.a11 + rhs.a11,
            a22: self.a22 + rhs.a22,
            a12: self.a12 + rhs.a12,
        }
    }
}

impl Sub for HermitianMatrix2 {
    type Output = HermitianMatrix2;
    fn sub(self, rhs: Self) -> Self {
        Self {
            a11: self.a11 - rhs.a11,
            a22: self.a22 - rhs.a22,
            a12: self.a12 - rhs.a12,
        }
    }
}

impl Mul<HermitianMatrix2> for f64 {
    type Output = HermitianMatrix2;
    fn mul(self, rhs: HermitianMatrix2) -> HermitianMatrix2 {
        rhs.scale(self)
    }
}

/// `diag(1, -1)`.
pub const fn pauli_sigma() -> HermitianMatrix2 {
    HermitianMatrix2 {
        a11: 1.0,
        a22: -1.0,
        a12: ZERO,
    }
}

/// `[[0, 1], [1, 0]]`.
pub const fn pauli_tau() -> HermitianMatrix2 {
    HermitianMatrix2 {
        a11: 0.0,
        a22: 0.0,
        a12: ONE,
    }
}

/// `sinh(r) / r`, continuous at zero.
pub fn sinhc(r: f64) -> f64 {
    let r = r.abs();
    if r < SINHC_SERIES_THRESHOLD {
        let r2 = r * r;
        1.0 + r2 / 6.0 * (1.0 + r2 / 20.0)
    } else {
        r.sinh() / r
    }
}

/// Matrix exponential of a Hermitian matrix.
///
/// With `h = lambda I + h0`, `tr h0 = 0` and `r^2 = tr(h0^2) / 2` we have
/// `h0^2 = r^2 I`, hence `e^h = e^lambda (cosh(r) I + sinhc(r) h0)`.
pub fn herm_exp(h: &HermitianMatrix2) -> Matrix2 {
    let lambda = 0.5 * h.trace();
    let d = 0.5 * (h.a11 - h.a22);
    let r = d.hypot(h.a12.norm());
    let scale = lambda.exp();
    let ch = scale * r.cosh();
    let sc = scale * sinhc(r);
    Matrix2::new(
        Complex::new(ch + sc * d, 0.0),
        h.a12 * sc,
        h.a12.conj() * sc,
        Complex::new(ch - sc * d, 0.0),
    )
}

/// Eigendecomposition `u h u^* = diag(lambda1, lambda2)` with `lambda1 >= lambda2`.
///
/// Row `i` of `u` is the conjugate of the `i`-th unit eigenvector. The
/// `lambda1` eigenvector is `(a12, lambda1 - a11)` normalized and rotated so
/// its first component is real and positive; the second row is its
/// orthogonal complement. Diagonal input yields the identity or the swap.
pub fn eigen2(h: &HermitianMatrix2) -> (f64, f64, Matrix2) {
    let mean = 0.5 * h.trace();
    let d = 0.5 * (h.a11 - h.a22);
    let off = h.a12.norm();
    let r = d.hypot(off);
    let (l1, l2) = (mean + r, mean - r);

    if off == 0.0 {
        let u = if h.a11 >= h.a22 {
            Matrix2::identity()
        } else {
            Matrix2::from_real([[0.0, 1.0], [1.0, 0.0]])
        };
        return (l1, l2, u);
    }

    // lambda1 - a11 = r - d, evaluated without cancellation.
    let gap = if d > 0.0 { off * off / (r + d) } else { r - d };
    let phase = h.a12.conj() / off;
    let norm = off.hypot(gap);
    let v0 = Complex::new(off / norm, 0.0);
    let v1 = phase * (gap / norm);
    let u = Matrix2::new(v0.conj(), v1.conj(), -v1, v0);
    (l1, l2, u)
}
