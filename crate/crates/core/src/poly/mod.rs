//! Exact multivariate polynomial algebra over arbitrary-precision integers.
//!
//! This is the carrier for the Chebyshev rewriting of the stationary-phase
//! systems, the Sylvester-resultant elimination cascades, and the real-root
//! isolation used by validity filtering. Coefficients are `BigInt`;
//! rational inputs are handled by content scaling.

mod chebyshev;
mod gcd;
mod multipoly;
mod resultant;
mod roots;

pub use chebyshev::{chebyshev, ChebyshevKind};
pub use gcd::{multivariate_gcd, squarefree_primitive};
pub use multipoly::{MultiPoly, Quotient};
pub use resultant::{eliminate, sylvester_resultant};
pub use roots::{real_roots, real_roots_f64, RootIsolate, UniPoly};
