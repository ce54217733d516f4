//! Real-root isolation for univariate polynomials by exact Sturm sequences,
//! with bisection refinement of each isolating interval.
//!
//! Floating-point coefficient inputs are converted exactly (every f64 is a
//! dyadic rational), so root counting stays rigorous even for numerically
//! awkward inputs like the validity checks on |cos theta| <= 1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::multipoly::MultiPoly;
use crate::{GbfError, Result};

/// Width target for refined isolating intervals.
const REFINE_WIDTH: f64 = 1e-12;

/// An isolated real root: exactly one root of the target polynomial lies in
/// [lo, hi] (lo == hi when the root was hit exactly).
#[derive(Clone, Debug)]
pub struct RootIsolate {
    pub lo: BigRational,
    pub hi: BigRational,
    /// f64 midpoint of the final interval.
    pub midpoint: f64,
    /// `false` when the root is a multiple root of the input polynomial.
    pub simple: bool,
}

/// Dense univariate polynomial over the rationals.
#[derive(Clone, Debug)]
pub struct UniPoly {
    /// coeffs[i] multiplies x^i; no trailing zeros.
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().map(|c| c.is_zero()) == Some(true) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_bigint_coeffs(coeffs: &[BigInt]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Exact conversion: every finite f64 is a dyadic rational.
    pub fn from_f64_coeffs(coeffs: &[f64]) -> Result<Self> {
        let mut out = Vec::with_capacity(coeffs.len());
        for &c in coeffs {
            let r = BigRational::from_float(c).ok_or_else(|| {
                GbfError::InvalidInput(format!("non-finite coefficient {c}"))
            })?;
            out.push(r);
        }
        Ok(Self::new(out))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    fn rem(&self, other: &Self) -> Self {
        let mut r = self.coeffs.clone();
        let d = other.degree();
        let lead = &other.coeffs[d];
        while r.len() > d && !r.is_empty() {
            let k = r.len() - 1;
            let factor = r[k].clone() / lead;
            if !factor.is_zero() {
                for (i, c) in other.coeffs.iter().enumerate() {
                    let idx = k - d + i;
                    let val = r[idx].clone() - &factor * c;
                    r[idx] = val;
                }
            }
            r.pop();
            while r.last().map(|c| c.is_zero()) == Some(true) {
                r.pop();
            }
        }
        Self::new(r)
    }

    fn div_exactish(&self, other: &Self) -> Self {
        // quotient over Q; used where divisibility is known (gcd factors)
        let mut r = self.coeffs.clone();
        let d = other.degree();
        let lead = &other.coeffs[d];
        let mut q = vec![BigRational::zero(); r.len().saturating_sub(d)];
        while r.len() > d {
            let k = r.len() - 1;
            let factor = r[k].clone() / lead;
            q[k - d] = factor.clone();
            for (i, c) in other.coeffs.iter().enumerate() {
                let idx = k - d + i;
                let val = r[idx].clone() - &factor * c;
                r[idx] = val;
            }
            r.pop();
        }
        Self::new(q)
    }

    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        // monic normalization
        let lead = a.coeffs.last().expect("nonzero").clone();
        UniPoly::new(a.coeffs.iter().map(|c| c / &lead).collect())
    }

    /// Cauchy bound: all real roots lie in [-M, M].
    pub fn cauchy_root_bound(&self) -> f64 {
        if self.coeffs.len() <= 1 {
            return 1.0;
        }
        let lead = self.coeffs.last().expect("nonzero");
        let max_ratio = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
        1.0 + max_ratio.to_f64().unwrap_or(f64::MAX / 4.0)
    }
}

struct SturmChain {
    chain: Vec<UniPoly>,
}

impl SturmChain {
    fn new(squarefree: &UniPoly) -> Self {
        let mut chain = vec![squarefree.clone(), squarefree.derivative()];
        loop {
            let k = chain.len();
            if chain[k - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[k - 2].rem(&chain[k - 1]);
            if r.is_zero() {
                break;
            }
            let mut neg = r;
            for c in &mut neg.coeffs {
                *c = -c.clone();
            }
            chain.push(neg);
        }
        Self { chain }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for p in &self.chain {
            let v = p.eval(x);
            if v.is_zero() {
                continue;
            }
            let sign = v.is_positive();
            if let Some(prev) = last {
                if prev != sign {
                    count += 1;
                }
            }
            last = Some(sign);
        }
        count
    }

    /// Number of distinct roots in the half-open interval (a, b].
    fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

fn rational_from_f64(x: f64) -> Result<BigRational> {
    BigRational::from_float(x)
        .ok_or_else(|| GbfError::InvalidInput(format!("non-finite interval endpoint {x}")))
}

/// All real roots of `f` inside [lo, hi], isolated and refined to 1e-12.
/// Errors on the zero polynomial or a non-univariate input.
pub fn real_roots(f: &MultiPoly, lo: f64, hi: f64) -> Result<Vec<RootIsolate>> {
    if f.is_zero() {
        return Err(GbfError::InvalidInput(
            "cannot isolate roots of the zero polynomial".into(),
        ));
    }
    let active: Vec<&String> = f.vars().iter().filter(|v| f.degree(v) > 0).collect();
    if active.len() > 1 {
        return Err(GbfError::InvalidInput(format!(
            "expected a univariate polynomial, got variables {active:?}"
        )));
    }
    let poly = match active.first() {
        None => return Ok(Vec::new()), // nonzero constant: no roots
        Some(v) => {
            let coeffs: Vec<BigInt> = f
                .coeffs_wrt(v)
                .into_iter()
                .map(|c| c.constant_value().expect("univariate coefficients"))
                .collect();
            UniPoly::from_bigint_coeffs(&coeffs)
        }
    };
    real_roots_of(&poly, lo, hi)
}

/// As [`real_roots`] for dense f64 coefficients (converted exactly).
pub fn real_roots_f64(coeffs: &[f64], lo: f64, hi: f64) -> Result<Vec<RootIsolate>> {
    let poly = UniPoly::from_f64_coeffs(coeffs)?;
    if poly.is_zero() {
        return Err(GbfError::InvalidInput(
            "cannot isolate roots of the zero polynomial".into(),
        ));
    }
    real_roots_of(&poly, lo, hi)
}

fn real_roots_of(f: &UniPoly, lo: f64, hi: f64) -> Result<Vec<RootIsolate>> {
    if !(lo <= hi) {
        return Err(GbfError::InvalidInput(format!(
            "bad interval [{lo}, {hi}]"
        )));
    }
    if f.degree() == 0 {
        return Ok(Vec::new());
    }
    let lo = rational_from_f64(lo)?;
    let hi = rational_from_f64(hi)?;

    // isolate on the squarefree part; multiplicity is recovered afterwards
    let deriv = f.derivative();
    let gcd = f.gcd(&deriv);
    let squarefree = if gcd.degree() == 0 {
        f.clone()
    } else {
        f.div_exactish(&gcd)
    };
    let chain = SturmChain::new(&squarefree);
    // multiple roots of f are exactly the roots of gcd(squarefree, gcd(f, f')),
    // which is itself squarefree, so Sturm counting on it is valid
    let mult_part = if gcd.degree() == 0 {
        None
    } else {
        Some(squarefree.gcd(&gcd))
    };
    let mult_chain = mult_part.as_ref().map(SturmChain::new);

    let mut isolates: Vec<(BigRational, BigRational)> = Vec::new();
    if squarefree.eval(&lo).is_zero() {
        isolates.push((lo.clone(), lo.clone()));
    }
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        if a == b {
            continue;
        }
        let count = chain.count(&a, &b);
        if count == 0 {
            continue;
        }
        if count == 1 {
            isolates.push((a, b));
            continue;
        }
        let mid = pick_split_point(&squarefree, &a, &b);
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    isolates.sort_by(|x, y| x.0.cmp(&y.0));

    let mut out = Vec::with_capacity(isolates.len());
    for (a, b) in isolates {
        let (a, b) = refine(&squarefree, a, b);
        let simple = match (&mult_part, &mult_chain) {
            (Some(mp), Some(mc)) => {
                if a == b {
                    !mp.eval(&a).is_zero()
                } else {
                    mc.count(&a, &b) == 0
                }
            }
            _ => true,
        };
        let midpoint = ((&a + &b) / BigRational::from_integer(BigInt::from(2)))
            .to_f64()
            .unwrap_or(f64::NAN);
        out.push(RootIsolate {
            lo: a,
            hi: b,
            midpoint,
            simple,
        });
    }
    Ok(out)
}

/// A point strictly inside (a, b) that is not a root of `f`: the midpoint
/// when possible, else one of deg+1 equispaced probes (a polynomial cannot
/// vanish at all of them). Roots that happen to sit at rejected probes stay
/// strictly inside one half and are isolated normally.
fn pick_split_point(f: &UniPoly, a: &BigRational, b: &BigRational) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    let mid = (a + b) / &two;
    if !f.eval(&mid).is_zero() {
        return mid;
    }
    let slots = f.degree() + 2;
    let denom = BigRational::from_integer(BigInt::from(slots as i64));
    for j in 1..slots {
        let t = a + (b - a) * BigRational::from_integer(BigInt::from(j as i64)) / &denom;
        if !f.eval(&t).is_zero() {
            return t;
        }
    }
    unreachable!("a nonzero polynomial cannot vanish at deg+1 distinct points")
}

/// Shrink an isolating interval below `REFINE_WIDTH` by sign bisection.
fn refine(f: &UniPoly, mut a: BigRational, mut b: BigRational) -> (BigRational, BigRational) {
    if a == b {
        return (a, b);
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let width_target = BigRational::from_float(REFINE_WIDTH).expect("finite");
    // ensure the sign change brackets the root: the open interval holds one
    // simple root, endpoints may need nudging when f(b) = 0
    if f.eval(&b).is_zero() {
        return (b.clone(), b);
    }
    if f.eval(&a).is_zero() {
        return (a.clone(), a);
    }
    let mut sign_a = f.eval(&a).is_positive();
    while &b - &a > width_target {
        let mid = (&a + &b) / &two;
        let v = f.eval(&mid);
        if v.is_zero() {
            return (mid.clone(), mid);
        }
        if v.is_positive() == sign_a {
            a = mid;
            sign_a = v.is_positive();
        } else {
            b = mid;
        }
    }
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_i64(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_bigint_coeffs(&coeffs.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>())
    }

    #[test]
    fn quadratic_roots_in_unit_interval() {
        // u^2 - 1/4 on [-1, 1] -> +-1/2
        let roots = real_roots_f64(&[-0.25, 0.0, 1.0], -1.0, 1.0).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0].midpoint + 0.5).abs() < 1e-12);
        assert!((roots[1].midpoint - 0.5).abs() < 1e-12);
        assert!(roots.iter().all(|r| r.simple));
    }

    #[test]
    fn chebyshev_t3_roots() {
        // T3(u) = 4u^3 - 3u: roots -sqrt(3)/2, 0, sqrt(3)/2
        let roots = real_roots_f64(&[0.0, -3.0, 0.0, 4.0], -1.0, 1.0).unwrap();
        assert_eq!(roots.len(), 3);
        let expect = [-(3.0f64).sqrt() / 2.0, 0.0, (3.0f64).sqrt() / 2.0];
        for (r, e) in roots.iter().zip(expect) {
            assert!((r.midpoint - e).abs() < 1e-11, "{} vs {e}", r.midpoint);
        }
    }

    #[test]
    fn multiple_root_is_flagged() {
        // (x - 1)^2 (x + 2)
        let p = from_i64(&[2, -3, 0, 1]);
        let roots = real_roots_of(&p, -3.0, 3.0).unwrap();
        assert_eq!(roots.len(), 2);
        let double = roots.iter().find(|r| (r.midpoint - 1.0).abs() < 1e-9);
        let single = roots.iter().find(|r| (r.midpoint + 2.0).abs() < 1e-9);
        assert!(!double.expect("root at 1").simple);
        assert!(single.expect("root at -2").simple);
    }

    #[test]
    fn endpoint_and_exact_roots() {
        // x(x-1): roots at interval endpoints
        let p = from_i64(&[0, -1, 1]);
        let roots = real_roots_of(&p, 0.0, 1.0).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0].midpoint - 0.0).abs() < 1e-12);
        assert!((roots[1].midpoint - 1.0).abs() < 1e-12);
    }

    #[test]
    fn random_cubics_match_dense_sign_scan() {
        let cases: [[f64; 4]; 4] = [
            [0.3, -2.0, -0.5, 1.0],
            [-1.0, 3.0, 1.5, 0.7],
            [0.0, 0.25, -1.0, 1.0],
            [2.0, -3.7, 0.4, 0.9],
        ];
        for coeffs in cases {
            let roots = real_roots_f64(&coeffs, -10.0, 10.0).unwrap();
            // dense sign-scan oracle
            let eval = |x: f64| coeffs[0] + coeffs[1] * x + coeffs[2] * x * x + coeffs[3] * x * x * x;
            let mut scan = Vec::new();
            let n = 400_000;
            let mut prev = eval(-10.0);
            for i in 1..=n {
                let x = -10.0 + 20.0 * i as f64 / n as f64;
                let v = eval(x);
                if prev == 0.0 {
                    scan.push(x - 20.0 / n as f64);
                } else if prev.signum() != v.signum() && v != 0.0 {
                    // bisect
                    let (mut a, mut b) = (x - 20.0 / n as f64, x);
                    for _ in 0..80 {
                        let m = 0.5 * (a + b);
                        if eval(a).signum() == eval(m).signum() {
                            a = m;
                        } else {
                            b = m;
                        }
                    }
                    scan.push(0.5 * (a + b));
                }
                prev = v;
            }
            assert_eq!(roots.len(), scan.len(), "coeffs {coeffs:?}");
            for (r, s) in roots.iter().zip(&scan) {
                assert!((r.midpoint - s).abs() < 1e-10, "{} vs {s}", r.midpoint);
            }
        }
    }

    #[test]
    fn rejects_zero_polynomial() {
        assert!(real_roots_f64(&[0.0, 0.0], -1.0, 1.0).is_err());
        let z = MultiPoly::constant(0);
        assert!(real_roots(&z, -1.0, 1.0).is_err());
    }

    #[test]
    fn count_matches_sign_variation_bound() {
        // Descartes-style check: the Sturm count over the whole line equals
        // the number of distinct real roots
        let p = from_i64(&[-2, 0, 1]); // x^2 - 2
        let m = p.cauchy_root_bound();
        let roots = real_roots_of(&p, -m, m).unwrap();
        assert_eq!(roots.len(), 2);
    }
}
