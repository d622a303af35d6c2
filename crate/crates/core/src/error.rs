use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("matrix is not Hermitian (residual {residual:e})")]
    NotHermitian { residual: f64 },
    #[error("traceless part of A vanishes (tr A0^2 = {trace_sq:e}); take the degenerate path")]
    DegenerateA { trace_sq: f64 },
    #[error("enumeration guard exceeded: n + m = {0} > 40")]
    SizeGuard(usize),
    #[error("position set has odd length {0}; atom locations need an even count")]
    OddLength(usize),
    #[error("argument out of range: {0}")]
    Range(String),
    #[error("integer overflow computing {0}")]
    Overflow(&'static str),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("quadrature did not converge (relative change {rel_change:e} after {panels} panels)")]
    QuadratureNoConvergence { rel_change: f64, panels: usize },
    #[error("Jacobi iteration did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("grid of size {0} exceeds the 64-point limit")]
    GridTooLarge(usize),
}
