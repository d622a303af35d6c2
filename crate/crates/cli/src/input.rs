use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::Deserialize;
use trexp_core::{Complex, HermitianMatrix2};

use crate::error::{CliError, CliResult};

/// `{"a11": x, "a22": y, "a12": [re, im]}`; Hermitian by construction.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixInput {
    pub a11: f64,
    pub a22: f64,
    pub a12: [f64; 2],
}

impl MatrixInput {
    pub fn to_hermitian(self) -> CliResult<HermitianMatrix2> {
        HermitianMatrix2::new(self.a11, self.a22, Complex::new(self.a12[0], self.a12[1]))
            .map_err(|e| CliError::Input(e.to_string()))
    }
}

pub fn read_matrix(path: &Path) -> CliResult<HermitianMatrix2> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let parsed: MatrixInput = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parsed.to_hermitian()
}

/// `lo:hi:count`, inclusive on both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TRange {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
}

impl TRange {
    pub fn points(&self) -> Vec<f64> {
        match self.count {
            1 => vec![self.lo],
            n => (0..n)
                .map(|i| {
                    if i == n - 1 {
                        self.hi
                    } else {
                        self.lo + (self.hi - self.lo) * i as f64 / (n - 1) as f64
                    }
                })
                .collect(),
        }
    }
}

impl FromStr for TRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [lo, hi, count] = parts.as_slice() else {
            return Err(format!("expected lo:hi:count, got {s:?}"));
        };
        let lo: f64 = lo
            .trim()
            .parse()
            .map_err(|_| format!("bad lower bound {lo:?}"))?;
        let hi: f64 = hi
            .trim()
            .parse()
            .map_err(|_| format!("bad upper bound {hi:?}"))?;
        let count: usize = count
            .trim()
            .parse()
            .map_err(|_| format!("bad count {count:?}"))?;
        if !lo.is_finite() || !hi.is_finite() {
            return Err("range bounds must be finite".into());
        }
        if lo > hi {
            return Err(format!("lower bound {lo} exceeds upper bound {hi}"));
        }
        if count == 0 {
            return Err("count must be at least 1".into());
        }
        Ok(Self { lo, hi, count })
    }
}

impl fmt::Display for TRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.lo, self.hi, self.count)
    }
}

pub fn finite(name: &str, x: f64) -> CliResult<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(CliError::Input(format!("{name} must be finite, got {x}")))
    }
}
