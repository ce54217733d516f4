//! Chebyshev polynomials as exact `MultiPoly` values in the variable `u`.
//!
//! T_n(cos theta) = cos(n theta) and U_{n-1}(cos theta) = sin(n theta)/sin(theta)
//! turn the stationary-phase systems into polynomial systems in u = cos theta.

use num_bigint::BigInt;

use super::multipoly::MultiPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebyshevKind {
    First,
    Second,
}

/// T_k or U_k in the variable `u`, by the three-term recurrence
/// P_{k+1} = 2u P_k - P_{k-1}.
pub fn chebyshev(kind: ChebyshevKind, k: u32) -> MultiPoly {
    let two_u = MultiPoly::var("u").scale(&BigInt::from(2));
    let mut prev = MultiPoly::constant(1);
    let mut cur = match kind {
        ChebyshevKind::First => MultiPoly::var("u"),
        ChebyshevKind::Second => two_u.clone(),
    };
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = two_u.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}
