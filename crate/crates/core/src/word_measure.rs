//! Discrete representing measures from the Lie-product word expansion.
//!
//! Expanding `(e^{t alpha sigma / N} (I +- beta tau / N))^N` gives a sum of
//! words in two letters, `e^{t alpha sigma / N}` and `+-beta tau / N`. A word
//! with `m` tau-letters is indexed by their positions `p_1 < ... < p_m`
//! (see [`PositionSet`]). Averaging the `+` and `-` expansions kills every
//! odd `m`; for `m = 2l` the relation `tau e^{x sigma} tau = e^{-x sigma}`
//! collapses the word to `beta^{2l} e^{t alpha mu sigma}` with
//!
//! `mu = 1 - (2 / N) * sum_j (p_{2j} - p_{2j-1} - 1)`.
//!
//! So `E_N` is a non-negative combination of `e^{t alpha mu sigma}`: the
//! atoms of `rho_N`. The number of position sets with `2l` entries and gap
//! sum `s` is `C(s - 1, l - 1) * C(N - s, l)`, which lets [`build_rho_n`]
//! run in `O(N^2)` instead of summing `2^N` words.

use std::collections::BTreeMap;

use crate::closed_form::e_matrix;
use crate::pauli::{herm_exp, pauli_sigma, pauli_tau, Complex, Matrix2};
use crate::{Error, Result};

/// Largest `n + m` accepted by [`enumerate_position_sets`].
pub const ENUMERATION_GUARD: usize = 40;

/// Positions `p_1 < ... < p_m` of the tau-letters in a word of length `n + m`.
///
/// Admissible sets satisfy `1 < p_1`, `p_j + 1 < p_{j+1}` and `p_m <= n + m`:
/// every tau-letter follows at least one exponential letter.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PositionSet {
    n: usize,
    positions: Vec<usize>,
}

impl PositionSet {
    pub fn new(n: usize, positions: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Range("n must be positive".into()));
        }
        let m = positions.len();
        let mut prev = 0usize;
        for (j, &p) in positions.iter().enumerate() {
            let lower = if j == 0 { 2 } else { prev + 2 };
            if p < lower || p > n + m {
                return Err(Error::Range(format!(
                    "position set {positions:?} is not admissible for n = {n}"
                )));
            }
            prev = p;
        }
        Ok(Self { n, positions })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// `sum_j (p_{2j} - p_{2j-1} - 1)`: how many exponential letters sit
    /// between the paired tau-letters.
    pub fn gap_sum(&self) -> Result<usize> {
        if self.positions.len() % 2 == 1 {
            return Err(Error::OddLength(self.positions.len()));
        }
        Ok(self
            .positions
            .chunks_exact(2)
            .map(|pair| pair[1] - pair[0] - 1)
            .sum())
    }
}

/// All admissible position sets with `m` entries, in lexicographic order.
pub fn enumerate_position_sets(n: usize, m: usize) -> Result<Vec<PositionSet>> {
    if n == 0 || m > n {
        return Err(Error::Range(format!(
            "need 0 <= m <= n and n >= 1, got n = {n}, m = {m}"
        )));
    }
    if n + m > ENUMERATION_GUARD {
        return Err(Error::SizeGuard(n + m));
    }

    fn extend(n: usize, m: usize, current: &mut Vec<usize>, out: &mut Vec<PositionSet>) {
        let j = current.len();
        if j == m {
            out.push(PositionSet {
                n,
                positions: current.clone(),
            });
            return;
        }
        let lo = current.last().map_or(2, |p| p + 2);
        // room for the remaining m - j - 1 entries, two apart
        let hi = n + m - 2 * (m - j - 1);
        for p in lo..=hi {
            current.push(p);
            extend(n, m, current, out);
            current.pop();
        }
    }

    let mut out = Vec::new();
    extend(n, m, &mut Vec::with_capacity(m), &mut out);
    Ok(out)
}

/// Location `mu` of the atom contributed by an even-length position set:
/// `(2 p_1 - 2 p_2 + ... + 2 p_{2l-1} - 2 p_{2l} + N + 2l) / N`.
pub fn atom_location(ps: &PositionSet) -> Result<f64> {
    if ps.len() % 2 == 1 {
        return Err(Error::OddLength(ps.len()));
    }
    let alternating: i64 = ps
        .positions
        .iter()
        .enumerate()
        .map(|(j, &p)| {
            if j % 2 == 0 {
                2 * p as i64
            } else {
                -2 * (p as i64)
            }
        })
        .sum();
    let numerator = alternating + ps.n as i64 + ps.len() as i64;
    Ok(numerator as f64 / ps.n as f64)
}

/// Location of the atom with gap sum `s`.
pub fn location_of_gap(n: usize, s: usize) -> f64 {
    (n as f64 - 2.0 * s as f64) / n as f64
}

/// Exact `C(n, k)`, or `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        // acc * (n - k + i) is divisible by i after the multiplication
        acc = acc.checked_mul(n as u128 - k as u128 + i)? / i;
    }
    Some(acc)
}

/// Number of admissible position sets with `2l` entries over `n` whose gap
/// sum is `s`, i.e. the multiplicity of the atom at `1 - 2s/n` in level `l`.
pub fn gap_count(n: usize, l: usize, s: usize) -> Result<u128> {
    if l == 0 || 2 * l > n {
        return Err(Error::Range(format!(
            "need 1 <= l <= n/2, got n = {n}, l = {l}"
        )));
    }
    if s < l || s > n - l {
        return Err(Error::Range(format!(
            "gap sum {s} outside [{l}, {}] for n = {n}, l = {l}",
            n - l
        )));
    }
    let left = binomial((s - 1) as u64, (l - 1) as u64).ok_or(Error::Overflow("gap_count"))?;
    let right = binomial((n - s) as u64, l as u64).ok_or(Error::Overflow("gap_count"))?;
    left.checked_mul(right).ok_or(Error::Overflow("gap_count"))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    /// Gap sum; the location is `1 - 2s/n`.
    pub s: usize,
    pub location: f64,
    pub weight: f64,
}

/// Finite non-negative atomic measure on `[-1, 1]`, atoms sorted by ascending
/// location with distinct locations.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteMeasure {
    pub n: usize,
    pub beta: f64,
    pub atoms: Vec<Atom>,
}

impl DiscreteMeasure {
    pub fn total_mass(&self) -> f64 {
        self.atoms.iter().map(|a| a.weight).sum()
    }

    /// `integral mu^k d rho`.
    pub fn moment(&self, k: i32) -> f64 {
        self.atoms
            .iter()
            .map(|a| a.weight * a.location.powi(k))
            .sum()
    }

    /// `integral e^{x mu} d rho`.
    pub fn laplace(&self, x: f64) -> f64 {
        self.atoms
            .iter()
            .map(|a| a.weight * (x * a.location).exp())
            .sum()
    }
}

/// Positive float carried with a separate binary exponent so that long
/// products of huge and tiny factors neither overflow nor flush to zero.
#[derive(Debug, Clone, Copy)]
struct Scaled {
    mant: f64,
    exp2: i32,
}

impl Scaled {
    const STEP: i32 = 256;

    fn new(x: f64) -> Self {
        let mut v = Self { mant: x, exp2: 0 };
        v.normalize();
        v
    }

    fn mul(mut self, x: f64) -> Self {
        self.mant *= x;
        self.normalize();
        self
    }

    fn normalize(&mut self) {
        let big = 2f64.powi(Self::STEP);
        let small = 2f64.powi(-Self::STEP);
        if self.mant == 0.0 {
            return;
        }
        while self.mant > big {
            self.mant *= small;
            self.exp2 += Self::STEP;
        }
        while self.mant < small {
            self.mant *= big;
            self.exp2 -= Self::STEP;
        }
    }

    fn to_f64(self) -> f64 {
        let mut x = self.mant;
        let mut e = self.exp2;
        while e > 0 && x.is_finite() {
            x *= 2f64.powi(Self::STEP);
            e -= Self::STEP;
        }
        while e < 0 && x != 0.0 {
            x *= 2f64.powi(-Self::STEP);
            e += Self::STEP;
        }
        x
    }
}

/// The measure `rho_N`: an atom of weight 1 at `mu = 1` plus, for every
/// `1 <= l <= n/2` and gap sum `s`, weight `(beta/n)^{2l} gap_count(n, l, s)`
/// at `1 - 2s/n`.
///
/// Weights come from exact ratio recurrences of the binomials, interleaved
/// with the `(beta/n)^2` factors. Contributions are merged on the integer
/// `s` grid and added in ascending `l`, so the result is bit-reproducible.
/// Atoms whose weight is zero (all of them when `beta = 0`) are dropped.
pub fn build_rho_n(n: usize, beta: f64) -> Result<DiscreteMeasure> {
    if n < 2 {
        return Err(Error::Range(format!("n must be at least 2, got {n}")));
    }
    if !beta.is_finite() || beta < 0.0 {
        return Err(Error::Domain(format!(
            "beta must be finite and non-negative, got {beta}"
        )));
    }

    let mut by_gap = vec![0.0f64; n + 1];
    by_gap[0] = 1.0;

    if beta > 0.0 {
        let x2 = (beta / n as f64).powi(2);
        let nf = n as f64;
        // w(l, s = l) = x2^l C(n - l, l)
        let mut level_start = Scaled::new(x2 * (nf - 1.0));
        for l in 1..=n / 2 {
            if l > 1 {
                let lf = (l - 1) as f64;
                level_start = level_start
                    .mul(x2)
                    .mul((nf - 2.0 * lf) * (nf - 2.0 * lf - 1.0))
                    .mul(1.0 / ((lf + 1.0) * (nf - lf)));
            }
            let mut w = level_start;
            for (s, slot) in by_gap.iter_mut().enumerate().take(n - l + 1).skip(l) {
                if s > l {
                    // C(s-1, l-1) -> C(s, l-1) and C(n-s+1, l) -> C(n-s, l)
                    let sp = (s - 1) as f64;
                    w = w
                        .mul(sp / (sp - l as f64 + 1.0))
                        .mul((nf - sp - l as f64) / (nf - sp));
                }
                *slot += w.to_f64();
            }
        }
    }

    let atoms = by_gap
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &w)| w > 0.0)
        .map(|(s, &weight)| Atom {
            s,
            location: location_of_gap(n, s),
            weight,
        })
        .collect();
    Ok(DiscreteMeasure { n, beta, atoms })
}

/// `E_N` from its measure: `diag(sum w e^{t alpha mu}, sum w e^{-t alpha mu})`.
pub fn eval_e_n_measure(t: f64, alpha: f64, m: &DiscreteMeasure) -> Matrix2 {
    let x = t * alpha;
    Matrix2::diag(m.laplace(x), m.laplace(-x))
}

/// `E_N` by direct multiplication:
/// `((e^{t alpha sigma/n}(I + beta tau/n))^n + (e^{t alpha sigma/n}(I - beta tau/n))^n) / 2`.
pub fn eval_e_n_direct(t: f64, alpha: f64, beta: f64, n: usize) -> Matrix2 {
    assert!(n >= 1, "n must be positive");
    let nf = n as f64;
    let step = herm_exp(&pauli_sigma().scale(t * alpha / nf));
    let kick = pauli_tau().to_matrix().scale_real(beta / nf);
    let plus = step * (Matrix2::identity() + kick);
    let minus = step * (Matrix2::identity() - kick);
    let (mut p, mut q) = (plus, minus);
    for _ in 1..n {
        p = p * plus;
        q = q * minus;
    }
    (p + q).scale_real(0.5)
}

/// The word `W^{sign}_{p_1..p_m}` with its `(sign * beta)^m` prefactor:
/// `e^{t alpha (p_1 - 1)/n sigma} tau e^{t alpha (p_2 - p_1 - 1)/n sigma} tau ...
/// tau e^{t alpha (1 - (p_m - m)/n) sigma}`.
pub fn word_product(ps: &PositionSet, t: f64, alpha: f64, beta: f64, sign: f64) -> Matrix2 {
    let n = ps.n as f64;
    let tau = pauli_tau().to_matrix();
    let exp_sigma = |letters: f64| herm_exp(&pauli_sigma().scale(t * alpha * letters / n));
    let mut out = Matrix2::identity();
    let mut last = 0usize;
    for &p in &ps.positions {
        out = out * exp_sigma((p - last - 1) as f64) * tau;
        last = p;
    }
    let remaining = ps.n - (last - ps.len());
    out = out * exp_sigma(remaining as f64);
    let prefactor = (sign * beta).powi(ps.len() as i32);
    out.scale(Complex::new(prefactor, 0.0))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub n: usize,
    /// `max |E_n - E|` entrywise.
    pub error: f64,
    /// `error(previous n) / error(n)`; `None` on the first row.
    pub ratio: Option<f64>,
}

pub fn convergence_table(alpha: f64, beta: f64, t: f64, n_list: &[usize]) -> Vec<ConvergenceRow> {
    let exact = e_matrix(t, alpha, beta);
    let mut prev: Option<f64> = None;
    n_list
        .iter()
        .map(|&n| {
            let error = eval_e_n_direct(t, alpha, beta, n).max_abs_diff(&exact);
            let ratio = prev.map(|p| p / error);
            prev = Some(error);
            ConvergenceRow { n, error, ratio }
        })
        .collect()
}

/// Multiplicity of each gap sum among the `2l`-entry position sets, counted
/// by brute force.
pub fn gap_histogram_by_enumeration(n: usize, l: usize) -> Result<BTreeMap<usize, u128>> {
    let mut hist = BTreeMap::new();
    for ps in enumerate_position_sets(n, 2 * l)? {
        *hist.entry(ps.gap_sum()?).or_insert(0u128) += 1;
    }
    Ok(hist)
}
