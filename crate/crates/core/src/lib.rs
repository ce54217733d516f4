//! Numerical and exact-algebra toolkit for m-dimensional generalized Bessel
//! functions (GBFs) and their mixed-type variants (MT-GBFs).
//!
//! A GBF is the n-th Fourier coefficient of `exp(-i h(theta))` where the
//! phase `h` is a finite trigonometric sum; the mixed-type variant allows
//! cosine terms and is generally complex-valued. This crate provides:
//!
//! * [`numerics`]: quadrature evaluation of GBFs/MT-GBFs, derivative
//!   recursions, phase evaluation, Jacobi-Anger partial sums;
//! * [`poly`]: exact multivariate polynomial arithmetic over big integers,
//!   Chebyshev polynomials, Sylvester resultants, elimination cascades,
//!   and real-root isolation;
//! * [`surfaces`]: bifurcation surfaces (large argument, large order and
//!   argument) and Schlomilch smoothness boundaries as exact polynomials,
//!   with numeric validity filtering;
//! * [`pde`]: residual checks for the PDE identities satisfied by the
//!   index-(1,2) GBF and by MT-GBFs;
//! * [`series`]: Neumann, Kapteyn, and Schlomilch series moments with
//!   closed forms cross-checked against direct sums;
//! * [`asymptotics`]: stationary-phase machinery and decay-rate probes.

pub mod error;
pub mod harmonics;
pub mod numerics;
pub mod quadrature;
pub mod poly;
pub mod suite;

pub use error::GbfError;
pub use harmonics::HarmonicCoefficients;
pub use quadrature::{QuadMode, QuadratureSpec};

/// Crate result alias.
pub type Result<T> = std::result::Result<T, GbfError>;
