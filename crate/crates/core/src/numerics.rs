//! Evaluation of GBFs, MT-GBFs, 1-D Bessel functions, and their partial
//! derivatives with respect to the phase coefficients.
//!
//! J_n(x; y) = (1/2pi) * integral over [-pi, pi) of
//! exp(i (n theta - sum_k (x_k sin k theta + y_k cos k theta))).
//! The pure-sine case is the m-dimensional GBF and is real; the mixed case
//! is complex. Derivatives use the shift recursions
//! dJ_n/dx_k = (J_{n-k} - J_{n+k})/2 and dJ_n/dy_k = (J_{n-k} + J_{n+k})/(2i),
//! composed for higher and mixed orders.

use num_complex::Complex64;

use crate::harmonics::HarmonicCoefficients;
use crate::quadrature::{self, QuadratureSpec};
use crate::{GbfError, Result};

/// Imaginary parts of pure-sine GBF quadratures must vanish to this level;
/// the integrand's imaginary part is odd so anything larger signals a bug.
const GBF_IMAG_TOL: f64 = 1e-12;

/// m-dimensional GBF J_n^p(x): pure-sine phase, real result.
///
/// Errors with `InvalidInput` if the phase carries cosine terms or the
/// nonzero sine support is not coprime, and with `Accuracy` if self-refining
/// quadrature fails to converge.
pub fn eval_gbf(h: &HarmonicCoefficients, n: i64, spec: &QuadratureSpec) -> Result<f64> {
    Ok(eval_gbf_with_nodes(h, n, spec)?.0)
}

/// As [`eval_gbf`], also returning the node count used.
pub fn eval_gbf_with_nodes(
    h: &HarmonicCoefficients,
    n: i64,
    spec: &QuadratureSpec,
) -> Result<(f64, usize)> {
    h.validate_gbf()?;
    let (value, nodes) = quadrature::integrate(h, n, spec)?;
    if value.im.abs() >= GBF_IMAG_TOL {
        return Err(GbfError::Internal(format!(
            "pure-sine GBF quadrature returned imaginary part {:.3e}",
            value.im
        )));
    }
    Ok((value.re, nodes))
}

/// Mixed-type GBF J_n(x; y); complex in general, reduces to [`eval_gbf`]
/// when all cosine coefficients vanish.
pub fn eval_mtgbf(h: &HarmonicCoefficients, n: i64, spec: &QuadratureSpec) -> Result<Complex64> {
    Ok(quadrature::integrate(h, n, spec)?.0)
}

/// As [`eval_mtgbf`], also returning the node count used.
pub fn eval_mtgbf_with_nodes(
    h: &HarmonicCoefficients,
    n: i64,
    spec: &QuadratureSpec,
) -> Result<(Complex64, usize)> {
    quadrature::integrate(h, n, spec)
}

/// One-dimensional Bessel function J_n(x) through the same quadrature path.
pub fn eval_bessel1d(n: i64, x: f64) -> f64 {
    let h = HarmonicCoefficients::from_sine(&[1], &[x]).expect("finite coefficient");
    let nodes = quadrature::heuristic_nodes(&h, n);
    quadrature::trapezoid(&h, n, nodes).re
}

/// Which coefficient slot a partial derivative acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffSlot {
    /// x_k, the sin(k theta) coefficient.
    Sine,
    /// y_k, the cos(k theta) coefficient.
    Cosine,
}

/// A formal linear combination sum c_s J_{n+s}, the closure of J_n under the
/// derivative recursions.
#[derive(Clone, Debug)]
pub struct ShiftCombination {
    terms: Vec<(i64, Complex64)>,
}

impl ShiftCombination {
    /// The identity combination J_n itself.
    pub fn identity() -> Self {
        Self {
            terms: vec![(0, Complex64::new(1.0, 0.0))],
        }
    }

    /// Apply d/dx_k or d/dy_k through the recursion.
    pub fn apply_partial(&self, k: u32, slot: CoeffSlot) -> Self {
        let k = i64::from(k);
        let mut out: std::collections::BTreeMap<i64, Complex64> = Default::default();
        for &(s, c) in &self.terms {
            let (w_minus, w_plus) = match slot {
                // d/dx_k J_m = (J_{m-k} - J_{m+k}) / 2
                CoeffSlot::Sine => (Complex64::new(0.5, 0.0), Complex64::new(-0.5, 0.0)),
                // d/dy_k J_m = (J_{m-k} + J_{m+k}) / (2i)
                CoeffSlot::Cosine => (Complex64::new(0.0, -0.5), Complex64::new(0.0, -0.5)),
            };
            *out.entry(s - k).or_default() += c * w_minus;
            *out.entry(s + k).or_default() += c * w_plus;
        }
        Self {
            terms: out.into_iter().filter(|(_, c)| c.norm() != 0.0).collect(),
        }
    }

    /// Evaluate sum c_s J_{n+s}(h) by quadrature.
    pub fn eval(
        &self,
        h: &HarmonicCoefficients,
        n: i64,
        spec: &QuadratureSpec,
    ) -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for &(s, c) in &self.terms {
            acc += c * eval_mtgbf(h, n + s, spec)?;
        }
        Ok(acc)
    }
}

/// First or second partial derivative of J_n with respect to x_k or y_k.
///
/// `order` must be 1 or 2; mixed partials are available through
/// [`gbf_partial_mixed`].
pub fn gbf_partial(
    h: &HarmonicCoefficients,
    n: i64,
    k: u32,
    slot: CoeffSlot,
    order: u8,
    spec: &QuadratureSpec,
) -> Result<Complex64> {
    if !(1..=2).contains(&order) {
        return Err(GbfError::InvalidInput(format!(
            "partial derivative order must be 1 or 2, got {order}"
        )));
    }
    let mut comb = ShiftCombination::identity();
    for _ in 0..order {
        comb = comb.apply_partial(k, slot);
    }
    comb.eval(h, n, spec)
}

/// Mixed partial derivative: apply the recursion once per (k, slot) entry,
/// left to right.
pub fn gbf_partial_mixed(
    h: &HarmonicCoefficients,
    n: i64,
    ops: &[(u32, CoeffSlot)],
    spec: &QuadratureSpec,
) -> Result<Complex64> {
    let mut comb = ShiftCombination::identity();
    for &(k, slot) in ops {
        comb = comb.apply_partial(k, slot);
    }
    comb.eval(h, n, spec)
}

/// Partial sum of the Jacobi-Anger expansion,
/// sum over |n| <= N of J_n(h) exp(-i n theta) -> exp(-i h(theta)).
pub fn jacobi_anger_partial_sum(
    h: &HarmonicCoefficients,
    theta: f64,
    n_max: u32,
    spec: &QuadratureSpec,
) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for n in -i64::from(n_max)..=i64::from(n_max) {
        let phase = Complex64::from_polar(1.0, -(n as f64) * theta);
        acc += eval_mtgbf(h, n, spec)? * phase;
    }
    Ok(acc)
}
