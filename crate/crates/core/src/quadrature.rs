//! Periodic trapezoid quadrature for the defining integrals.
//!
//! The integrands are analytic and 2*pi periodic, so the uniform trapezoid
//! rule on [-pi, pi) converges spectrally once the node count exceeds the
//! Fourier bandwidth of the integrand. The default node count follows the
//! bandwidth heuristic 64 + 8*(|n| + sum_k k(|x_k| + |y_k|)), rounded up to
//! a power of two.

use num_complex::Complex64;

use crate::harmonics::HarmonicCoefficients;
use crate::{GbfError, Result};

/// Hard ceiling for self-refining mode.
pub const MAX_NODES: usize = 1 << 22;

/// Smallest admissible node count.
pub const MIN_NODES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadMode {
    /// Single evaluation at a fixed node count.
    Fixed,
    /// Double the node count until two successive values agree to the
    /// requested tolerance (or `MAX_NODES` is hit, which is an error).
    SelfRefining,
}

#[derive(Clone, Copy, Debug)]
pub struct QuadratureSpec {
    /// Node count (power of two, >= 64). `None` selects the bandwidth
    /// heuristic; in self-refining mode this is the starting count.
    pub node_count: Option<usize>,
    pub mode: QuadMode,
    /// Successive-value agreement target for self-refining mode.
    pub tolerance: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            node_count: None,
            mode: QuadMode::Fixed,
            tolerance: 1e-13,
        }
    }
}

impl QuadratureSpec {
    pub fn fixed(nodes: usize) -> Self {
        Self {
            node_count: Some(nodes),
            ..Self::default()
        }
    }

    /// The oracle protocol: start at 64 nodes, double until successive
    /// values agree to 1e-13.
    pub fn self_refining() -> Self {
        Self {
            node_count: None,
            mode: QuadMode::SelfRefining,
            tolerance: 1e-13,
        }
    }

    pub fn self_refining_to(tolerance: f64) -> Self {
        Self {
            node_count: None,
            mode: QuadMode::SelfRefining,
            tolerance,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(n) = self.node_count {
            if n < MIN_NODES || !n.is_power_of_two() {
                return Err(GbfError::InvalidInput(format!(
                    "node count must be a power of two >= {MIN_NODES}, got {n}"
                )));
            }
        }
        if !(self.tolerance > 0.0) {
            return Err(GbfError::InvalidInput(
                "quadrature tolerance must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Bandwidth-heuristic node count for J_n evaluated on the phase `h`.
pub fn heuristic_nodes(h: &HarmonicCoefficients, n: i64) -> usize {
    let need = 64.0 + 8.0 * (n.unsigned_abs() as f64 + h.k_weighted_mass());
    let need = need.min(MAX_NODES as f64) as usize;
    need.next_power_of_two().max(MIN_NODES)
}

/// (1/2pi) * integral of w(theta) exp(i (n theta - h(theta))) d theta by the
/// N-node periodic trapezoid rule, with compensated summation.
pub fn trapezoid_weighted(
    h: &HarmonicCoefficients,
    n: i64,
    nodes: usize,
    mut weight: impl FnMut(f64) -> Complex64,
) -> Complex64 {
    let nf = n as f64;
    let step = 2.0 * std::f64::consts::PI / nodes as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut comp = Complex64::new(0.0, 0.0);
    for j in 0..nodes {
        let theta = -std::f64::consts::PI + step * j as f64;
        let phase = nf * theta - h.phase(theta, 0);
        let (s, c) = phase.sin_cos();
        let term = weight(theta) * Complex64::new(c, s);
        // Kahan compensation keeps the odd-part cancellation near machine eps
        // even at large node counts.
        let t = term - comp;
        let next = sum + t;
        comp = (next - sum) - t;
        sum = next;
    }
    sum / nodes as f64
}

/// Unweighted version: (1/2pi) * integral of exp(i (n theta - h(theta))).
pub fn trapezoid(h: &HarmonicCoefficients, n: i64, nodes: usize) -> Complex64 {
    trapezoid_weighted(h, n, nodes, |_| Complex64::new(1.0, 0.0))
}

/// Evaluate per `spec`, returning the value and the node count actually used.
pub fn integrate(
    h: &HarmonicCoefficients,
    n: i64,
    spec: &QuadratureSpec,
) -> Result<(Complex64, usize)> {
    spec.validate()?;
    match spec.mode {
        QuadMode::Fixed => {
            let nodes = spec.node_count.unwrap_or_else(|| heuristic_nodes(h, n));
            Ok((trapezoid(h, n, nodes), nodes))
        }
        QuadMode::SelfRefining => {
            let mut nodes = spec.node_count.unwrap_or(MIN_NODES);
            let mut prev = trapezoid(h, n, nodes);
            loop {
                nodes *= 2;
                let next = trapezoid(h, n, nodes);
                if (next - prev).norm() <= spec.tolerance {
                    return Ok((next, nodes));
                }
                if nodes >= MAX_NODES {
                    return Err(GbfError::Accuracy {
                        prev,
                        last: next,
                        nodes,
                    });
                }
                prev = next;
            }
        }
    }
}
