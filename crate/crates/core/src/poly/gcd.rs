//! Multivariate gcd by the primitive polynomial remainder sequence, and the
//! squarefree primitive part built on it.
//!
//! Elimination outputs carry extraneous repeated factors; the acceptance
//! path needs their radicals, which is exactly the squarefree part. Desk
//! scale inputs keep the PRS cheap.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::multipoly::MultiPoly;
use crate::{GbfError, Result};

/// gcd over Z[vars] (integer content included), sign-normalized so the
/// leading coefficient is positive.
pub fn multivariate_gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    if let (Some(ca), Some(cb)) = (a.constant_value(), b.constant_value()) {
        return MultiPoly::constant(int_gcd(&ca, &cb));
    }
    if let Some(ca) = a.constant_value() {
        return MultiPoly::constant(int_gcd(&ca, &b.content()));
    }
    if let Some(cb) = b.constant_value() {
        return MultiPoly::constant(int_gcd(&cb, &a.content()));
    }

    // main variable: any variable of positive degree in either operand
    let universe = a.merged_universe(b);
    let v = universe
        .iter()
        .find(|v| a.degree(v) > 0 || b.degree(v) > 0)
        .expect("non-constant operands have a variable")
        .clone();

    if a.degree(&v) == 0 {
        return multivariate_gcd(a, &content_wrt(b, &v));
    }
    if b.degree(&v) == 0 {
        return multivariate_gcd(&content_wrt(a, &v), b);
    }

    let (ca, pa) = content_primitive_wrt(a, &v);
    let (cb, pb) = content_primitive_wrt(b, &v);
    let cg = multivariate_gcd(&ca, &cb);

    let (mut g, mut h) = if pa.degree(&v) >= pb.degree(&v) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    loop {
        let r = pseudo_rem(&g, &h, &v);
        if r.is_zero() {
            let result = primitive_wrt(&h, &v);
            return normalize_sign(cg.mul(&result));
        }
        if r.degree(&v) == 0 {
            return normalize_sign(cg);
        }
        g = h;
        h = primitive_wrt(&r, &v);
    }
}

/// Pseudo-remainder of f by g with respect to `v`:
/// lc(g)^(deg f - deg g + 1) * f = q * g + prem.
fn pseudo_rem(f: &MultiPoly, g: &MultiPoly, v: &str) -> MultiPoly {
    let dg = g.degree(v);
    debug_assert!(dg > 0 || !g.is_constant());
    let lc_g = g.coeffs_wrt(v).pop().expect("nonzero");
    let mut r = f.clone();
    let mut steps = f.degree(v) as i64 - dg as i64 + 1;
    while !r.is_zero() && r.degree(v) >= dg {
        let dr = r.degree(v);
        let lc_r = r.coeffs_wrt(v).pop().expect("nonzero");
        r = r
            .mul(&lc_g)
            .sub(&lc_r.mul(g).mul_var_pow(v, dr - dg));
        steps -= 1;
    }
    // pad to the full lc(g)^(df-dg+1) factor so prem is the textbook value
    for _ in 0..steps.max(0) {
        r = r.mul(&lc_g);
    }
    r
}

/// Content with respect to `v`: gcd of the coefficient polynomials.
fn content_wrt(f: &MultiPoly, v: &str) -> MultiPoly {
    let mut c = MultiPoly::constant(0);
    for coef in f.coeffs_wrt(v) {
        if coef.is_zero() {
            continue;
        }
        c = multivariate_gcd(&c, &coef);
        if c.constant_value().map(|k| k.is_one()) == Some(true) {
            break;
        }
    }
    c
}

fn content_primitive_wrt(f: &MultiPoly, v: &str) -> (MultiPoly, MultiPoly) {
    let c = content_wrt(f, v);
    let p = f.exact_div(&c).expect("content divides");
    (c, p)
}

fn primitive_wrt(f: &MultiPoly, v: &str) -> MultiPoly {
    content_primitive_wrt(f, v).1
}

/// Squarefree primitive part: content 1, same radical, positive leading
/// coefficient under the canonical term order. Errors on the zero input.
pub fn squarefree_primitive(f: &MultiPoly) -> Result<MultiPoly> {
    if f.is_zero() {
        return Err(GbfError::InvalidInput(
            "squarefree part of the zero polynomial".into(),
        ));
    }
    let g = f.normalize_primitive();
    if g.is_constant() {
        return Ok(MultiPoly::constant(1));
    }
    let mut d = g.clone();
    for v in g.vars().to_vec() {
        if g.degree(&v) > 0 {
            d = multivariate_gcd(&d, &g.derivative(&v));
        }
    }
    let d = d.normalize_primitive();
    let sq = g
        .exact_div(&d)
        .ok_or_else(|| GbfError::Internal("squarefree division must be exact".into()))?;
    Ok(sq.normalize_primitive())
}

fn normalize_sign(p: MultiPoly) -> MultiPoly {
    if p.leading_coefficient().is_negative() {
        p.neg()
    } else {
        p
    }
}

fn int_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    let g = a.gcd(b);
    if g.is_negative() {
        -g
    } else {
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(vars: &[&str], terms: &[(&[u32], i64)]) -> MultiPoly {
        MultiPoly::from_terms(
            vars,
            terms
                .iter()
                .map(|&(e, c)| (e.to_vec(), BigInt::from(c))),
        )
        .unwrap()
    }

    #[test]
    fn gcd_of_products() {
        let x = MultiPoly::var("x");
        let y = MultiPoly::var("y");
        let xpy = x.add(&y);
        let xmy = x.sub(&y);
        let a = xpy.mul(&xpy).mul(&xmy); // (x+y)^2 (x-y)
        let b = xpy.mul(&xmy).mul(&xmy); // (x+y)(x-y)^2
        let g = multivariate_gcd(&a, &b);
        assert_eq!(g, xpy.mul(&xmy));
    }

    #[test]
    fn gcd_with_integer_content() {
        let a = p(&["x"], &[(&[2], 6), (&[0], -6)]); // 6x^2 - 6
        let b = p(&["x"], &[(&[1], 4), (&[0], 4)]); // 4x + 4
        let g = multivariate_gcd(&a, &b);
        // gcd = 2(x+1)
        assert_eq!(g, p(&["x"], &[(&[1], 2), (&[0], 2)]));
    }

    #[test]
    fn squarefree_examples() {
        // 4x^2y^2 -> xy
        let f = p(&["x", "y"], &[(&[2, 2], 4)]);
        assert_eq!(
            squarefree_primitive(&f).unwrap(),
            p(&["x", "y"], &[(&[1, 1], 1)])
        );
        // (x+y)^2 (x-y) -> (x+y)(x-y) up to sign
        let x = MultiPoly::var("x");
        let y = MultiPoly::var("y");
        let xpy = x.add(&y);
        let xmy = x.sub(&y);
        let f = xpy.mul(&xpy).mul(&xmy);
        let sq = squarefree_primitive(&f).unwrap();
        assert_eq!(sq, xpy.mul(&xmy).normalize_primitive());
        // 6x^2 + 12xy + 6y^2 -> x + y
        let f = p(&["x", "y"], &[(&[2, 0], 6), (&[1, 1], 12), (&[0, 2], 6)]);
        assert_eq!(squarefree_primitive(&f).unwrap(), xpy);
    }

    #[test]
    fn squarefree_of_constant_and_zero() {
        assert_eq!(
            squarefree_primitive(&MultiPoly::constant(-12)).unwrap(),
            MultiPoly::constant(1)
        );
        assert!(squarefree_primitive(&MultiPoly::constant(0)).is_err());
    }
}
