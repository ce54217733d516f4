use num_complex::Complex64;
use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum GbfError {
    /// Input violates a documented precondition (bad coefficients,
    /// non-coprime GBF support, malformed polynomial, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Self-refining quadrature failed to converge; carries the last two
    /// iterates so the caller can judge how far apart they are.
    #[error("quadrature did not converge: last two iterates {prev} and {last} (nodes {nodes})")]
    Accuracy {
        prev: Complex64,
        last: Complex64,
        nodes: usize,
    },

    /// An elimination step produced an identically zero resultant, which
    /// means the system has a common factor and the cascade cannot proceed.
    #[error("degenerate system: {0}")]
    DegenerateSystem(String),

    /// A series closed form was requested beyond the orders it exists for.
    #[error("unsupported order: {op} has closed form only for ell <= {max_ell}, got {ell}")]
    UnsupportedOrder {
        op: &'static str,
        max_ell: u32,
        ell: u32,
    },

    /// Point outside the domain of validity (for example a Kapteyn
    /// evaluation outside the monotonicity region).
    #[error("domain error: {0}")]
    Domain(String),

    /// Stationary-phase approximation refused: the stationary set is empty
    /// (decay regime) so the leading-order formula does not apply.
    #[error("decay regime: stationary set is empty, the integral decays superpolynomially")]
    DecayRegime,

    /// Stationary-phase approximation refused: a stationary point has a
    /// near-vanishing second derivative.
    #[error("near-critical stationary point at theta = {theta} (|f''| = {f_second_abs:.3e})")]
    NearCritical { theta: f64, f_second_abs: f64 },

    /// Invariant violation that should be unreachable.
    #[error("internal error: {0}")]
    Internal(String),
}

impl GbfError {
    /// Process exit code used by the CLI: 2 invalid input, 3 accuracy,
    /// 4 degenerate algebra.
    pub fn exit_code(&self) -> i32 {
        match self {
            GbfError::Accuracy { .. } => 3,
            GbfError::DegenerateSystem(_) => 4,
            GbfError::Internal(_) => 70,
            _ => 2,
        }
    }
}
