//! Sylvester resultants of multivariate polynomials and the iterated
//! elimination cascade they support.
//!
//! The determinant of the polynomial-entry Sylvester matrix is computed by
//! Bareiss fraction-free elimination: every division is exact in Z[vars],
//! which keeps intermediate coefficient growth polynomial instead of
//! exponential.

use super::multipoly::MultiPoly;
use crate::{GbfError, Result};

/// Res(f, g; var): the resultant polynomial in the remaining variables.
/// Vanishes at every coefficient point where f and g share a root in `var`.
pub fn sylvester_resultant(f: &MultiPoly, g: &MultiPoly, var: &str) -> Result<MultiPoly> {
    let m = f.degree(var) as usize;
    let n = g.degree(var) as usize;
    if m == 0 || n == 0 {
        return Err(GbfError::InvalidInput(format!(
            "resultant requires positive degree in {var} (got {m} and {n})"
        )));
    }
    let fc = f.coeffs_wrt(var); // index = power
    let gc = g.coeffs_wrt(var);
    let size = m + n;
    let universe: Vec<String> = {
        let mut u = Vec::new();
        for c in fc.iter().chain(&gc) {
            for v in c.vars() {
                if !u.contains(v) {
                    u.push(v.clone());
                }
            }
        }
        u
    };
    let zero = MultiPoly::zero(&universe.iter().map(|s| s.as_str()).collect::<Vec<_>>());
    let mut matrix = vec![vec![zero.clone(); size]; size];
    // n rows of f coefficients (descending powers), then m rows of g
    for row in 0..n {
        for (p, c) in fc.iter().enumerate() {
            matrix[row][row + (m - p)] = c.clone();
        }
    }
    for row in 0..m {
        for (p, c) in gc.iter().enumerate() {
            matrix[n + row][row + (n - p)] = c.clone();
        }
    }
    Ok(bareiss_determinant(matrix))
}

/// Fraction-free determinant; consumes the matrix.
fn bareiss_determinant(mut m: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let size = m.len();
    if size == 0 {
        return MultiPoly::constant(1);
    }
    let mut sign = 1i8;
    let mut prev = MultiPoly::constant(1);
    for k in 0..size - 1 {
        if m[k][k].is_zero() {
            match (k + 1..size).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return MultiPoly::constant(0),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("bareiss division is exact over an integral domain");
            }
            m[i][k] = MultiPoly::constant(0);
        }
        prev = m[k][k].clone();
    }
    let det = m[size - 1][size - 1].clone();
    if sign < 0 {
        det.neg()
    } else {
        det
    }
}

/// Iterated resultant cascade: eliminate `vars` in order, pairing each
/// polynomial that involves the variable with the last such polynomial as
/// pivot. Stops early once a single polynomial remains and returns it.
///
/// The output vanishes at every projection of a simultaneous solution; it
/// may vanish at extra points (resultants are a superset certificate).
pub fn eliminate(system: &[MultiPoly], vars: &[&str]) -> Result<MultiPoly> {
    if system.is_empty() {
        return Err(GbfError::InvalidInput("empty system".into()));
    }
    let mut current: Vec<MultiPoly> = system.to_vec();
    for &v in vars {
        if current.len() == 1 {
            break;
        }
        let (mut with_v, without): (Vec<_>, Vec<_>) =
            current.into_iter().partition(|p| p.degree(v) > 0);
        if with_v.is_empty() {
            current = without;
            continue;
        }
        if with_v.len() == 1 {
            return Err(GbfError::InvalidInput(format!(
                "variable {v} occurs in only one polynomial; cannot eliminate"
            )));
        }
        let pivot = with_v.pop().expect("len >= 2");
        let mut next = Vec::with_capacity(with_v.len() + without.len());
        for p in with_v {
            let r = sylvester_resultant(&p, &pivot, v)?;
            if r.is_zero() {
                return Err(GbfError::DegenerateSystem(format!(
                    "resultant in {v} vanished identically (common factor present)"
                )));
            }
            next.push(r);
        }
        next.extend(without);
        current = next;
    }
    if current.len() == 1 {
        Ok(current.pop().expect("len 1").prune_vars())
    } else {
        Err(GbfError::DegenerateSystem(format!(
            "elimination left {} polynomials",
            current.len()
        )))
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::super::chebyshev::{chebyshev, ChebyshevKind};
    use super::super::roots::real_roots;
    use super::*;

    fn lin(vars: &[&str], coefs: &[i64], cst: i64) -> MultiPoly {
        let mut p = MultiPoly::constant(cst);
        for (v, &c) in vars.iter().zip(coefs) {
            p = p.add(&MultiPoly::var(v).scale(&BigInt::from(c)));
        }
        p
    }

    #[test]
    fn paper_micro_example() {
        // Res(ax + b + 1, cx + d; x) = ad - bc - c
        let f = MultiPoly::var("a")
            .mul(&MultiPoly::var("x"))
            .add(&MultiPoly::var("b"))
            .add(&MultiPoly::constant(1));
        let g = MultiPoly::var("c")
            .mul(&MultiPoly::var("x"))
            .add(&MultiPoly::var("d"));
        let r = sylvester_resultant(&f, &g, "x").unwrap();
        let expect = MultiPoly::var("a")
            .mul(&MultiPoly::var("d"))
            .sub(&MultiPoly::var("b").mul(&MultiPoly::var("c")))
            .sub(&MultiPoly::var("c"));
        assert_eq!(r, expect);
    }

    #[test]
    fn substitution_example() {
        // Res(x^2 - t, x - s; x) = s^2 - t
        let x = MultiPoly::var("x");
        let f = x.mul(&x).sub(&MultiPoly::var("t"));
        let g = x.sub(&MultiPoly::var("s"));
        let r = sylvester_resultant(&f, &g, "x").unwrap();
        let expect = MultiPoly::var("s")
            .mul(&MultiPoly::var("s"))
            .sub(&MultiPoly::var("t"));
        assert_eq!(r, expect);
    }

    #[test]
    fn degree_zero_input_is_rejected() {
        let f = MultiPoly::var("y");
        let g = MultiPoly::var("x");
        assert!(sylvester_resultant(&f, &g, "x").is_err());
    }

    #[test]
    fn chebyshev_system_shares_root_where_resultant_vanishes() {
        // Res(T2(u) - c2, U1(u) - c1; u) vanishes exactly when the two
        // univariate polynomials share a root; cross-check numerically.
        let t2 = chebyshev(ChebyshevKind::First, 2);
        let u1 = chebyshev(ChebyshevKind::Second, 1);
        let f = t2.sub(&MultiPoly::var("c2"));
        let g = u1.sub(&MultiPoly::var("c1"));
        let r = sylvester_resultant(&f, &g, "u").unwrap();
        // pick a shared numeric root u0: c2 = T2(u0), c1 = U1(u0)
        let u0 = 0.37f64;
        let c2 = 2.0 * u0 * u0 - 1.0;
        let c1 = 2.0 * u0;
        let val = r.eval_f64(&[("c1", c1), ("c2", c2)]);
        assert!(val.abs() < 1e-12, "resultant at shared root: {val}");
        // a generic point without a shared root stays away from zero
        let val = r.eval_f64(&[("c1", 1.9), ("c2", -0.3)]);
        assert!(val.abs() > 1e-3);
    }

    #[test]
    fn eliminate_linear_system() {
        // {x + y - 1, x - y}: eliminating x leaves a polynomial whose root
        // y = 1/2 matches the unique solution; the cascade then stops.
        let s1 = lin(&["x", "y"], &[1, 1], -1);
        let s2 = lin(&["x", "y"], &[1, -1], 0);
        let e = eliminate(&[s1, s2], &["x", "y"]).unwrap();
        let roots = real_roots(&e, -2.0, 2.0).unwrap();
        assert_eq!(roots.len(), 1);
        assert!((roots[0].midpoint - 0.5).abs() < 1e-10);
    }

    #[test]
    fn eliminate_detects_common_factor() {
        let x = MultiPoly::var("x");
        let y = MultiPoly::var("y");
        let f = x.mul(&y); // x*y
        let g = x.mul(&y.add(&MultiPoly::constant(1))); // x*(y+1)
        // common factor x makes the resultant in x vanish identically
        match eliminate(&[f, g], &["x"]) {
            Err(GbfError::DegenerateSystem(_)) => {}
            other => panic!("expected degenerate system, got {other:?}"),
        }
    }

    #[test]
    fn random_linear_systems_match_substitution() {
        // 2x2 integer systems: eliminate x and compare the surviving
        // y-polynomial's root with direct solution by substitution.
        let cases = [
            ([2i64, 3, -4], [1i64, -2, 5]),
            ([1, -1, 2], [3, 1, -7]),
            ([5, 2, 1], [-2, 4, 3]),
        ];
        for ([a1, b1, c1], [a2, b2, c2]) in cases {
            let f = lin(&["x", "y"], &[a1, b1], c1);
            let g = lin(&["x", "y"], &[a2, b2], c2);
            let e = eliminate(&[f, g], &["x"]).unwrap();
            let det = (a1 * b2 - a2 * b1) as f64;
            assert!(det != 0.0);
            let y_sol = -(a1 as f64 * c2 as f64 - a2 as f64 * c1 as f64) / det;
            let val = e.eval_f64(&[("y", y_sol)]);
            assert!(val.abs() < 1e-9, "eliminant at substitution root: {val}");
        }
    }
}
