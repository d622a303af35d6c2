use crate::{Error, Result};

pub const MAX_SWEEPS: usize = 100;
const OFF_DIAGONAL_REL: f64 = 1e-14;

/// Dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    /// Builds the matrix from its entry function; only `(r, s)` with `r <= s`
    /// is evaluated and mirrored, so the result is symmetric by construction.
    pub fn from_fn(dim: usize, mut entry: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; dim * dim];
        for r in 0..dim {
            for s in r..dim {
                let v = entry(r, s);
                data[r * dim + s] = v;
                data[s * dim + r] = v;
            }
        }
        Self { dim, data }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        Self::from_fn(rows.len(), |r, s| rows[r][s])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, s: usize) -> f64 {
        self.data[r * self.dim + s]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data
            .chunks(self.dim.max(1))
            .take(self.dim)
            .map(<[f64]>::to_vec)
            .collect()
    }

    pub fn max_diagonal(&self) -> f64 {
        (0..self.dim)
            .map(|i| self.get(i, i))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Principal submatrix on the given indices.
    pub fn principal(&self, indices: &[usize]) -> Self {
        Self::from_fn(indices.len(), |r, s| self.get(indices[r], indices[s]))
    }

    fn frobenius(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for r in 0..n {
        for s in 0..n {
            if r != s {
                sum += a[r * n + s].powi(2);
            }
        }
    }
    sum.sqrt()
}

/// All eigenvalues, ascending, by cyclic Jacobi rotations.
pub fn eigenvalues_sym(m: &SymmetricMatrix) -> Result<Vec<f64>> {
    let n = m.dim;
    let mut a = m.data.clone();
    let threshold = OFF_DIAGONAL_REL * m.frobenius();
    let mut converged = off_diagonal_norm(&a, n) <= threshold;

    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
        converged = off_diagonal_norm(&a, n) <= threshold;
    }
    if !converged {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

/// Smallest eigenvalue of a symmetric matrix.
pub fn min_eig_sym(m: &SymmetricMatrix) -> Result<f64> {
    Ok(eigenvalues_sym(m)?
        .first()
        .copied()
        .unwrap_or(f64::INFINITY))
}
