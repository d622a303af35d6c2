use crate::{Error, Result};

/// Largest argument accepted by [`bessel_i1`].
pub const I1_MAX_ARG: f64 = 100.0;

/// Modified Bessel function `I_1(z) = sum_k (z/2)^{2k+1} / (k! (k+1)!)` for
/// `0 <= z <= 100`, summed until the next term is below `1e-17` of the sum.
pub fn bessel_i1(z: f64) -> Result<f64> {
    if !(0.0..=I1_MAX_ARG).contains(&z) {
        return Err(Error::Domain(format!(
            "I1 argument {z} outside [0, {I1_MAX_ARG}]"
        )));
    }
    Ok(i1_series(z))
}

pub(crate) fn i1_series(z: f64) -> f64 {
    let half = 0.5 * z;
    let q = half * half;
    let mut term = half;
    let mut sum = half;
    let mut k = 0.0;
    while term > 1e-17 * sum {
        k += 1.0;
        term *= q / (k * (k + 1.0));
        sum += term;
    }
    sum
}
