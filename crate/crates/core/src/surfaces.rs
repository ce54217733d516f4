//! Bifurcation surfaces and Schlomilch smoothness boundaries as exact
//! polynomials.
//!
//! For a pure-sine GBF the critical-point system f'(theta) = nu,
//! f''(theta) = 0 rewrites through Chebyshev polynomials in u = cos(theta);
//! factoring sin(theta) out of f'' yields two linear ("trivial") surfaces
//! plus a nontrivial eliminant obtained by a Sylvester-resultant cascade.
//! The symbol `nu` stands for the order n (large-order surfaces) or 2*pi*n
//! (smoothness boundaries). Membership of the u-root in [-1, 1] is not
//! encoded in the resultant, so validity is checked numerically per point.

use serde::Serialize;

use crate::poly::{
    chebyshev, eliminate, real_roots_f64, squarefree_primitive, ChebyshevKind, MultiPoly,
};
use crate::{GbfError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SurfaceKind {
    TrivialLinear,
    OddAlternate,
    NontrivialEliminant,
    SmoothnessBoundary,
}

#[derive(Clone, Debug)]
pub struct SurfaceEntry {
    /// Squarefree primitive part, canonical form.
    pub poly: MultiPoly,
    /// Raw eliminant when it differs from `poly` (extraneous factors kept).
    pub raw: Option<MultiPoly>,
    pub kind: SurfaceKind,
    pub validity_note: String,
}

#[derive(Clone, Debug)]
pub struct SurfaceFamily {
    pub entries: Vec<SurfaceEntry>,
    /// Argument variable names, in order.
    pub arg_vars: Vec<String>,
}

impl SurfaceEntry {
    pub fn to_json_value(&self) -> serde_json::Value {
        let mut obj = serde_json::json!({
            "kind": serde_json::to_value(self.kind).expect("serializable"),
            "validity_note": self.validity_note,
            "poly": self.poly.to_json_value(),
            "text": self.poly.to_text(),
        });
        if let Some(raw) = &self.raw {
            obj["raw"] = raw.to_json_value();
            obj["raw_text"] = serde_json::Value::String(raw.to_text());
        }
        obj
    }
}

impl SurfaceFamily {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "arg_vars": self.arg_vars,
            "surfaces": self.entries.iter().map(|e| e.to_json_value()).collect::<Vec<_>>(),
        })
    }
}

/// Argument variable names: x for m = 1, (x, y) for m = 2, x1..xm beyond.
pub fn arg_var_names(m: usize) -> Vec<String> {
    match m {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        _ => (1..=m).map(|i| format!("x{i}")).collect(),
    }
}

fn validate_index_set(p: &[u32]) -> Result<()> {
    if p.is_empty() {
        return Err(GbfError::InvalidInput("empty index set".into()));
    }
    let mut seen = std::collections::BTreeSet::new();
    for &k in p {
        if k == 0 {
            return Err(GbfError::InvalidInput("indices must be >= 1".into()));
        }
        if !seen.insert(k) {
            return Err(GbfError::InvalidInput(format!("duplicate index {k}")));
        }
    }
    let g = p.iter().copied().reduce(gcd_u32).expect("nonempty");
    if g != 1 {
        return Err(GbfError::InvalidInput(format!(
            "index set must be coprime, gcd = {g}"
        )));
    }
    Ok(())
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

fn linear_surface(p: &[u32], vars: &[String], weight: impl Fn(u32) -> i64) -> MultiPoly {
    let mut poly = MultiPoly::constant(0);
    for (i, &k) in p.iter().enumerate() {
        let term = MultiPoly::var(&vars[i]).scale(&num_bigint::BigInt::from(weight(k)));
        poly = poly.add(&term);
    }
    poly
}

fn canonical(poly: MultiPoly) -> MultiPoly {
    squarefree_primitive(&poly).unwrap_or(poly)
}

fn push_unique(entries: &mut Vec<SurfaceEntry>, entry: SurfaceEntry) {
    if !entries.iter().any(|e| e.poly == entry.poly) {
        entries.push(entry);
    }
}

/// Large-argument bifurcation surfaces of J_n^p(t x) for t -> infinity:
/// sum x_k p_k = 0 and sum x_k p_k (-1)^{p_k} = 0; when every index is odd
/// the two coincide and the alternate surface
/// sum x_k p_k^2 (-1)^{(p_k+1)/2} = 0 is appended.
pub fn large_arg_surfaces(p: &[u32]) -> Result<SurfaceFamily> {
    validate_index_set(p)?;
    let vars = arg_var_names(p.len());
    let mut entries = Vec::new();
    let s1 = canonical(linear_surface(p, &vars, |k| i64::from(k)));
    let s2 = canonical(linear_surface(p, &vars, |k| {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        sign * i64::from(k)
    }));
    let note = "stationary point at theta in {0, pi}".to_string();
    push_unique(
        &mut entries,
        SurfaceEntry {
            poly: s1,
            raw: None,
            kind: SurfaceKind::TrivialLinear,
            validity_note: note.clone(),
        },
    );
    push_unique(
        &mut entries,
        SurfaceEntry {
            poly: s2,
            raw: None,
            kind: SurfaceKind::TrivialLinear,
            validity_note: note,
        },
    );
    if p.iter().all(|&k| k % 2 == 1) {
        let alt = canonical(linear_surface(p, &vars, |k| {
            let sign = if (k + 1) / 2 % 2 == 0 { 1 } else { -1 };
            sign * i64::from(k) * i64::from(k)
        }));
        push_unique(
            &mut entries,
            SurfaceEntry {
                poly: alt,
                raw: None,
                kind: SurfaceKind::OddAlternate,
                validity_note: "stationary point at theta in {pi/2, 3pi/2}".to_string(),
            },
        );
    }
    Ok(SurfaceFamily {
        entries,
        arg_vars: vars,
    })
}

/// The Chebyshev-form critical system for the large-order regime:
/// A(u) = sum x_k p_k T_{p_k}(u) - nu and B(u) = sum x_k p_k^2 U_{p_k - 1}(u)
/// (f'' pre-factored by sin(theta)).
fn chebyshev_system(p: &[u32], vars: &[String]) -> (MultiPoly, MultiPoly) {
    let mut a = MultiPoly::var("nu").neg();
    let mut b = MultiPoly::constant(0);
    for (i, &k) in p.iter().enumerate() {
        let xk = MultiPoly::var(&vars[i]);
        let t = chebyshev(ChebyshevKind::First, k).scale(&num_bigint::BigInt::from(i64::from(k)));
        a = a.add(&xk.mul(&t));
        let u = chebyshev(ChebyshevKind::Second, k - 1)
            .scale(&num_bigint::BigInt::from(i64::from(k) * i64::from(k)));
        b = b.add(&xk.mul(&u));
    }
    (a, b)
}

/// Large order-and-argument bifurcation surfaces of J_{tn}^p(t x): the two
/// trivial linear surfaces (now distinct even for all-odd index sets) plus
/// the nontrivial eliminant in {x_k} and symbolic nu.
pub fn large_order_surfaces(p: &[u32]) -> Result<SurfaceFamily> {
    validate_index_set(p)?;
    let vars = arg_var_names(p.len());
    let nu = MultiPoly::var("nu");
    let mut entries = Vec::new();
    for (weight, label) in [
        (Box::new(|k: u32| i64::from(k)) as Box<dyn Fn(u32) -> i64>, "theta = 0"),
        (
            Box::new(|k: u32| if k % 2 == 0 { 1 } else { -1 } * i64::from(k)),
            "theta = pi",
        ),
    ] {
        let poly = canonical(linear_surface(p, &vars, weight).sub(&nu));
        push_unique(
            &mut entries,
            SurfaceEntry {
                poly,
                raw: None,
                kind: SurfaceKind::TrivialLinear,
                validity_note: format!("trivial branch, stationary point at {label}"),
            },
        );
    }
    let (a, b) = chebyshev_system(p, &vars);
    if b.degree("u") > 0 {
        let raw = eliminate(&[a, b], &["u"])?;
        let poly = squarefree_primitive(&raw)?;
        entries.push(SurfaceEntry {
            raw: (raw != poly).then_some(raw),
            poly,
            kind: SurfaceKind::NontrivialEliminant,
            validity_note: "valid only where the common root satisfies |u| <= 1".to_string(),
        });
    }
    Ok(SurfaceFamily {
        entries,
        arg_vars: vars,
    })
}

/// Mixed-type large-argument surface for the given harmonic support: the
/// eliminant of {h'(s,c), h''(s,c), s^2 + c^2 - 1} over s then c in the
/// symbolic coefficients x_k, y_k. No sin(theta) factor exists here, so the
/// result is a single higher-order algebraic surface (eighth order for
/// support {1, 2}); it has no closed-form ground truth and is validated by
/// sampling.
pub fn large_arg_mt_surface(indices: &[u32]) -> Result<SurfaceFamily> {
    validate_index_set(indices)?;
    let vars: Vec<String> = indices
        .iter()
        .flat_map(|k| [format!("x{k}"), format!("y{k}")])
        .collect();
    let s = MultiPoly::var("s");
    let mut h1 = MultiPoly::constant(0); // h'
    let mut h2 = MultiPoly::constant(0); // h''
    for &k in indices {
        let kf = i64::from(k);
        let xk = MultiPoly::var(&format!("x{k}"));
        let yk = MultiPoly::var(&format!("y{k}"));
        let t = chebyshev(ChebyshevKind::First, k);
        let u = chebyshev(ChebyshevKind::Second, k - 1);
        let sin_k = s.mul(&u);
        // h' = sum k x_k cos k theta - k y_k sin k theta
        h1 = h1
            .add(&xk.mul(&t).scale(&num_bigint::BigInt::from(kf)))
            .sub(&yk.mul(&sin_k).scale(&num_bigint::BigInt::from(kf)));
        // h'' = sum -k^2 x_k sin k theta - k^2 y_k cos k theta
        h2 = h2
            .sub(&xk.mul(&sin_k).scale(&num_bigint::BigInt::from(kf * kf)))
            .sub(&yk.mul(&t).scale(&num_bigint::BigInt::from(kf * kf)));
    }
    let circle = s
        .mul(&s)
        .add(&MultiPoly::var("c").mul(&MultiPoly::var("c")))
        .sub(&MultiPoly::constant(1));
    let raw = eliminate(&[h1, h2, circle], &["s", "c"])?;
    let poly = squarefree_primitive(&raw)?;
    Ok(SurfaceFamily {
        entries: vec![SurfaceEntry {
            raw: (raw != poly).then_some(raw),
            poly,
            kind: SurfaceKind::NontrivialEliminant,
            validity_note: "valid only where a common root lies on the unit circle".to_string(),
        }],
        arg_vars: vars,
    })
}

/// Smoothness boundaries of the Schlomilch series for a symbolic support:
/// the eliminant of {h(s,c) - nu, h'(s,c), s^2 + c^2 - 1} over s then c,
/// with nu standing for 2*pi*n. Sine coefficients are named positionally
/// (x, y) for supports of at most two sine harmonics, x{k}/y{k} otherwise.
pub fn schlomilch_boundaries(sine: &[u32], cosine: &[u32]) -> Result<SurfaceFamily> {
    if sine.is_empty() && cosine.is_empty() {
        return Err(GbfError::InvalidInput("empty support".into()));
    }
    let positional = cosine.is_empty() && sine.len() <= 2;
    let sine_name = |i: usize, k: u32| {
        if positional {
            arg_var_names(sine.len())[i].clone()
        } else {
            format!("x{k}")
        }
    };
    let s = MultiPoly::var("s");
    let mut h = MultiPoly::constant(0);
    let mut h1 = MultiPoly::constant(0);
    let mut arg_vars = Vec::new();
    for (i, &k) in sine.iter().enumerate() {
        let name = sine_name(i, k);
        arg_vars.push(name.clone());
        let xk = MultiPoly::var(&name);
        let sin_k = s.mul(&chebyshev(ChebyshevKind::Second, k - 1));
        let cos_k = chebyshev(ChebyshevKind::First, k);
        h = h.add(&xk.mul(&sin_k));
        h1 = h1.add(&xk.mul(&cos_k).scale(&num_bigint::BigInt::from(i64::from(k))));
    }
    for &k in cosine {
        let name = format!("y{k}");
        arg_vars.push(name.clone());
        let yk = MultiPoly::var(&name);
        let sin_k = s.mul(&chebyshev(ChebyshevKind::Second, k - 1));
        let cos_k = chebyshev(ChebyshevKind::First, k);
        h = h.add(&yk.mul(&cos_k));
        h1 = h1.sub(&yk.mul(&sin_k).scale(&num_bigint::BigInt::from(i64::from(k))));
    }
    let circle = s
        .mul(&s)
        .add(&MultiPoly::var("c").mul(&MultiPoly::var("c")))
        .sub(&MultiPoly::constant(1));
    let raw = eliminate(&[h.sub(&MultiPoly::var("nu")), h1, circle], &["s", "c"])?;
    let poly = squarefree_primitive(&raw)?;
    Ok(SurfaceFamily {
        entries: vec![SurfaceEntry {
            raw: (raw != poly).then_some(raw),
            poly,
            kind: SurfaceKind::SmoothnessBoundary,
            validity_note: "branch-point touching: h(theta) = nu with h'(theta) = 0".to_string(),
        }],
        arg_vars,
    })
}

/// Split a surface polynomial into known small factors (coordinate
/// monomials and the family's linear surfaces) times a remainder. Used for
/// reporting; no general factorization is attempted.
pub fn split_known_factors(poly: &MultiPoly, knowns: &[MultiPoly]) -> (Vec<MultiPoly>, MultiPoly) {
    let mut factors = Vec::new();
    let mut rest = poly.normalize_primitive();
    let mut candidates: Vec<MultiPoly> = poly
        .vars()
        .iter()
        .map(|v| MultiPoly::var(v))
        .collect();
    candidates.extend(knowns.iter().map(|p| p.normalize_primitive()));
    loop {
        let mut progress = false;
        for cand in &candidates {
            if cand.total_degree() == 0 || *cand == rest {
                continue;
            }
            while let Some(q) = rest.exact_div(cand) {
                factors.push(cand.clone());
                rest = q.normalize_primitive();
                progress = true;
            }
        }
        if !progress {
            break;
        }
    }
    (factors, rest)
}

/// One candidate u = cos(theta) root of the critical system at a point.
#[derive(Clone, Debug, Serialize)]
pub struct CandidateRoot {
    pub u: f64,
    pub in_range: bool,
    /// |f'(theta) - nu| at the candidate, scaled.
    pub fprime_residual: f64,
    /// |f''(theta)/sin(theta)| at the candidate, scaled.
    pub fsecond_residual: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidityReport {
    pub point: Vec<f64>,
    pub n: f64,
    pub candidates: Vec<CandidateRoot>,
    pub valid: bool,
}

const VALIDITY_RESIDUAL_TOL: f64 = 1e-8;

/// Check whether a point on a bifurcation surface actually admits a
/// stationary angle: the common root u = cos(theta) must lie in [-1, 1]
/// ("otherwise theta is not in the region of integration"). Roots are
/// isolated directly, so y-denominator-zero closed forms need no special
/// casing.
pub fn validate_surface_point(p: &[u32], n: f64, point: &[f64]) -> Result<ValidityReport> {
    validate_index_set(p)?;
    if point.len() != p.len() {
        return Err(GbfError::InvalidInput(format!(
            "point has {} coordinates for {} indices",
            point.len(),
            p.len()
        )));
    }
    // dense f64 coefficients of A(u) and B(u)
    let max_p = *p.iter().max().expect("nonempty") as usize;
    let mut a = vec![0.0f64; max_p + 1];
    let mut b = vec![0.0f64; max_p];
    for (i, &k) in p.iter().enumerate() {
        let t = chebyshev(ChebyshevKind::First, k);
        for (exp, coef) in t.terms() {
            let pow = exp.first().copied().unwrap_or(0) as usize;
            a[pow] += point[i] * f64::from(k) * bigint_f64(coef);
        }
        let u = chebyshev(ChebyshevKind::Second, k - 1);
        for (exp, coef) in u.terms() {
            let pow = exp.first().copied().unwrap_or(0) as usize;
            b[pow] += point[i] * f64::from(k) as f64 * f64::from(k) * bigint_f64(coef);
        }
    }
    a[0] -= n;
    let eval = |c: &[f64], u: f64| c.iter().rev().fold(0.0, |acc, &k| acc * u + k);
    let scale_a = 1.0 + a.iter().map(|c| c.abs()).sum::<f64>();
    let scale_b = 1.0 + b.iter().map(|c| c.abs()).sum::<f64>();

    let mut candidates = Vec::new();
    // sin(theta) = 0 branch: u = +-1 solves the factored f'' identically
    for u in [1.0, -1.0] {
        candidates.push(CandidateRoot {
            u,
            in_range: true,
            fprime_residual: eval(&a, u).abs() / scale_a,
            fsecond_residual: 0.0,
        });
    }
    if b.iter().any(|&c| c != 0.0) {
        let bound = 1.0
            + b[..b.len() - b.iter().rev().take_while(|&&c| c == 0.0).count()]
                .iter()
                .map(|c| c.abs())
                .fold(0.0f64, f64::max)
                / b.iter()
                    .rev()
                    .find(|&&c| c != 0.0)
                    .map(|c| c.abs())
                    .expect("nonzero");
        if b.iter().filter(|&&c| c != 0.0).count() >= 1
            && b.iter().skip(1).any(|&c| c != 0.0)
        {
            for root in real_roots_f64(&b, -bound, bound)? {
                let u = root.midpoint;
                candidates.push(CandidateRoot {
                    u,
                    in_range: u.abs() <= 1.0 + 1e-9,
                    fprime_residual: eval(&a, u).abs() / scale_a,
                    fsecond_residual: eval(&b, u).abs() / scale_b,
                });
            }
        }
    }
    let valid = candidates.iter().any(|c| {
        c.in_range
            && c.fprime_residual < VALIDITY_RESIDUAL_TOL
            && c.fsecond_residual < VALIDITY_RESIDUAL_TOL
    });
    Ok(ValidityReport {
        point: point.to_vec(),
        n,
        candidates,
        valid,
    })
}

fn bigint_f64(c: &num_bigint::BigInt) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(f64::NAN)
}

/// Zero-crossing samples of a surface polynomial over a box, with nu fixed.
/// Grid edges whose endpoints change sign are bisected to 1e-8.
pub fn sample_surface(
    poly: &MultiPoly,
    n_value: f64,
    x_range: (f64, f64),
    y_range: (f64, f64),
    resolution: usize,
) -> Vec<[f64; 2]> {
    let vars = poly.vars();
    debug_assert!(
        vars.iter().all(|v| v == "x" || v == "y" || v == "nu"),
        "sample_surface expects variables x, y, nu"
    );
    let f = |x: f64, y: f64| poly.eval_f64(&[("x", x), ("y", y), ("nu", n_value)]);
    let res = resolution.max(2);
    let xs: Vec<f64> = (0..=res)
        .map(|i| x_range.0 + (x_range.1 - x_range.0) * i as f64 / res as f64)
        .collect();
    let ys: Vec<f64> = (0..=res)
        .map(|i| y_range.0 + (y_range.1 - y_range.0) * i as f64 / res as f64)
        .collect();
    let values: Vec<Vec<f64>> = xs
        .iter()
        .map(|&x| ys.iter().map(|&y| f(x, y)).collect())
        .collect();
    let mut points = Vec::new();
    let mut bisect = |mut lo: [f64; 2], mut hi: [f64; 2]| {
        let mut flo = f(lo[0], lo[1]);
        for _ in 0..60 {
            let mid = [0.5 * (lo[0] + hi[0]), 0.5 * (lo[1] + hi[1])];
            if (hi[0] - lo[0]).abs().max((hi[1] - lo[1]).abs()) < 1e-8 {
                return mid;
            }
            let fm = f(mid[0], mid[1]);
            if fm == 0.0 {
                return mid;
            }
            if (fm > 0.0) == (flo > 0.0) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        [0.5 * (lo[0] + hi[0]), 0.5 * (lo[1] + hi[1])]
    };
    for i in 0..=res {
        for j in 0..=res {
            let v = values[i][j];
            if v == 0.0 {
                points.push([xs[i], ys[j]]);
                continue;
            }
            // edge to the next x
            if i < res && values[i + 1][j] != 0.0 && (v > 0.0) != (values[i + 1][j] > 0.0) {
                points.push(bisect([xs[i], ys[j]], [xs[i + 1], ys[j]]));
            }
            // edge to the next y
            if j < res && values[i][j + 1] != 0.0 && (v > 0.0) != (values[i][j + 1] > 0.0) {
                points.push(bisect([xs[i], ys[j]], [xs[i], ys[j + 1]]));
            }
        }
    }
    points
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly_from_text_terms(vars: &[&str], terms: &[(&[u32], i64)]) -> MultiPoly {
        MultiPoly::from_terms(
            vars,
            terms
                .iter()
                .map(|&(e, c)| (e.to_vec(), num_bigint::BigInt::from(c))),
        )
        .unwrap()
    }

    #[test]
    fn large_arg_even_odd_pairs() {
        let fam = large_arg_surfaces(&[1, 2]).unwrap();
        assert_eq!(fam.entries.len(), 2);
        assert_eq!(fam.entries[0].poly.to_text(), "x + 2*y");
        assert_eq!(fam.entries[1].poly.to_text(), "x - 2*y");
    }

    #[test]
    fn large_arg_all_odd_appends_alternate() {
        let fam = large_arg_surfaces(&[1, 3]).unwrap();
        assert_eq!(fam.entries.len(), 2);
        assert_eq!(fam.entries[0].poly.to_text(), "x + 3*y");
        assert_eq!(fam.entries[0].kind, SurfaceKind::TrivialLinear);
        // -x + 9y canonicalizes to x - 9y (same surface)
        assert_eq!(fam.entries[1].poly.to_text(), "x - 9*y");
        assert_eq!(fam.entries[1].kind, SurfaceKind::OddAlternate);
    }

    #[test]
    fn large_arg_single_index() {
        let fam = large_arg_surfaces(&[1]).unwrap();
        assert_eq!(fam.entries.len(), 1);
        assert_eq!(fam.entries[0].poly.to_text(), "x");
        assert!(large_arg_surfaces(&[2, 4]).is_err());
    }

    #[test]
    fn large_order_12_contains_paper_curve() {
        let fam = large_order_surfaces(&[1, 2]).unwrap();
        let trivial: Vec<_> = fam
            .entries
            .iter()
            .filter(|e| e.kind == SurfaceKind::TrivialLinear)
            .collect();
        assert_eq!(trivial.len(), 2);
        assert_eq!(trivial[0].poly.to_text(), "x + 2*y - nu");
        assert_eq!(trivial[1].poly.to_text(), "x - 2*y - nu");
        let nontrivial = fam
            .entries
            .iter()
            .find(|e| e.kind == SurfaceKind::NontrivialEliminant)
            .expect("eliminant entry");
        // x^2 + 32y^2 + 16y*nu divides both the squarefree part and the raw
        let target = poly_from_text_terms(
            &["x", "y", "nu"],
            &[(&[2, 0, 0], 1), (&[0, 2, 0], 32), (&[0, 1, 1], 16)],
        );
        assert!(target.divides(&nontrivial.poly).is_some());
        let raw = nontrivial.raw.as_ref().expect("raw kept");
        assert!(target.divides(raw).is_some());
        // and the known-factor split exposes it directly
        let knowns: Vec<MultiPoly> = trivial.iter().map(|e| e.poly.clone()).collect();
        let (factors, rest) = split_known_factors(&nontrivial.poly, &knowns);
        assert_eq!(rest, target);
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].to_text(), "y");
    }

    #[test]
    fn large_order_13_contains_paper_curve() {
        let fam = large_order_surfaces(&[1, 3]).unwrap();
        let nontrivial = fam
            .entries
            .iter()
            .find(|e| e.kind == SurfaceKind::NontrivialEliminant)
            .expect("eliminant entry");
        // (x - 9y)^3 + 81 y nu^2
        let target = poly_from_text_terms(
            &["x", "y", "nu"],
            &[
                (&[3, 0, 0], 1),
                (&[2, 1, 0], -27),
                (&[1, 2, 0], 243),
                (&[0, 3, 0], -729),
                (&[0, 1, 2], 81),
            ],
        );
        assert!(target.divides(&nontrivial.poly).is_some());
        // trivial pair stays distinct for the all-odd set in this regime
        let trivial: Vec<_> = fam
            .entries
            .iter()
            .filter(|e| e.kind == SurfaceKind::TrivialLinear)
            .collect();
        assert_eq!(trivial.len(), 2);
    }

    #[test]
    fn large_order_single_index_has_no_eliminant() {
        let fam = large_order_surfaces(&[1]).unwrap();
        assert!(fam
            .entries
            .iter()
            .all(|e| e.kind == SurfaceKind::TrivialLinear));
        assert_eq!(fam.entries.len(), 2); // x - nu and -x - nu
    }

    #[test]
    fn schlomilch_12_matches_paper_sextic() {
        let fam = schlomilch_boundaries(&[1, 2], &[]).unwrap();
        let e = &fam.entries[0];
        // 64 nu^4 y^2 + nu^2 (x^4 - 80x^2y^2 - 128y^4) + (64y^6 - 48x^2y^4 + 12x^4y^2 - x^6)
        let target = poly_from_text_terms(
            &["x", "y", "nu"],
            &[
                (&[0, 2, 4], 64),
                (&[4, 0, 2], 1),
                (&[2, 2, 2], -80),
                (&[0, 4, 2], -128),
                (&[0, 6, 0], 64),
                (&[2, 4, 0], -48),
                (&[4, 2, 0], 12),
                (&[6, 0, 0], -1),
            ],
        );
        assert!(target.divides(&e.poly).is_some(), "sextic must divide");
        assert!(target.divides(e.raw.as_ref().expect("raw")).is_some());
    }

    #[test]
    fn schlomilch_13_cubic_carries_factor_27() {
        // critical values of h = x sin + y sin3 satisfy 27 nu^2 y = (x+3y)^3
        // on the nontrivial branch (the displayed paper curve drops the 27)
        let fam = schlomilch_boundaries(&[1, 3], &[]).unwrap();
        let e = &fam.entries[0];
        let target = poly_from_text_terms(
            &["x", "y", "nu"],
            &[
                (&[3, 0, 0], 1),
                (&[2, 1, 0], 9),
                (&[1, 2, 0], 27),
                (&[0, 3, 0], 27),
                (&[0, 1, 2], -27),
            ],
        );
        assert!(target.divides(&e.poly).is_some());
        // the theta = pi/2 linear family (x - y)^2 - nu^2 is also present
        let linear = poly_from_text_terms(
            &["x", "y", "nu"],
            &[(&[1, 0, 0], 1), (&[0, 1, 0], -1), (&[0, 0, 1], -1)],
        );
        assert!(linear.divides(&e.poly).is_some());
        // numeric cross-check: extremum of h at x=1, y=0.2 on the cubic
        let (x, y) = (1.0f64, 0.2f64);
        let nu2 = (x + 3.0 * y).powi(3) / (27.0 * y);
        let val = e.poly.eval_f64(&[("x", x), ("y", y), ("nu", nu2.sqrt())]);
        let scale: f64 = e.poly.terms().map(|(_, c)| bigint_f64(c).abs()).sum();
        assert!(val.abs() / scale < 1e-9, "cubic surface residual {val}");
    }

    #[test]
    fn schlomilch_single_sine_gives_nu2_minus_x2_family() {
        let fam = schlomilch_boundaries(&[1], &[]).unwrap();
        let e = &fam.entries[0];
        let target = poly_from_text_terms(&["x", "nu"], &[(&[2, 0], 1), (&[0, 2], -1)]);
        assert!(target.divides(&e.poly).is_some());
    }

    #[test]
    fn mt_surface_is_eighth_order_and_samples_lie_on_critical_locus() {
        let fam = large_arg_mt_surface(&[1, 2]).unwrap();
        let e = &fam.entries[0];
        assert_eq!(e.kind, SurfaceKind::NontrivialEliminant);
        assert!(e.poly.total_degree() >= 8);
        // pick a point with a genuine double root of f': theta0 with
        // h'(theta0) = h''(theta0) = 0 constructed by solving for (x2, y2)
        // given (x1, y1) and theta0.
        let (x1, y1, th) = (1.0f64, 0.5f64, 0.9f64);
        // solve 2x2 linear system for x2, y2:
        // x1 cos th - y1 sin th + 2 x2 cos 2th - 2 y2 sin 2th = 0
        // -x1 sin th - y1 cos th - 4 x2 sin 2th - 4 y2 cos 2th = 0
        let (s2, c2) = (2.0 * th).sin_cos();
        let b1 = -(x1 * th.cos() - y1 * th.sin());
        let b2 = x1 * th.sin() + y1 * th.cos();
        let det = 2.0 * c2 * (-4.0 * c2) - (-2.0 * s2) * (-4.0 * s2);
        let x2 = (b1 * (-4.0 * c2) - (-2.0 * s2) * b2) / det;
        let y2 = (2.0 * c2 * b2 - b1 * (-4.0 * s2)) / det;
        let val = e.poly.eval_f64(&[("x1", x1), ("y1", y1), ("x2", x2), ("y2", y2)]);
        let scale: f64 = e
            .poly
            .terms()
            .map(|(_, c)| bigint_f64(c).abs())
            .sum::<f64>()
            * 4.0f64.max(x2.abs().powi(8));
        assert!(val.abs() / scale < 1e-9, "surface residual {val}");
    }

    #[test]
    fn validity_filters_upper_ellipse_arc() {
        // p = (1,2), n = 40: x^2 + 32y^2 + 16*40*y = 0
        let n = 40.0f64;
        let on_ellipse = |y: f64| (-(32.0 * y * y) - 16.0 * n * y).sqrt();
        // upper arc: |x/(8y)| > 1 -> invalid
        let y_up = -1.0;
        let x_up = on_ellipse(y_up);
        assert!((x_up / (8.0 * y_up)).abs() > 1.0);
        let report = validate_surface_point(&[1, 2], n, &[x_up, y_up]).unwrap();
        assert!(!report.valid);
        // lower arc: |x/(8y)| <= 1 -> valid
        let y_lo = -18.0;
        let x_lo = on_ellipse(y_lo);
        assert!((x_lo / (8.0 * y_lo)).abs() <= 1.0);
        let report = validate_surface_point(&[1, 2], n, &[x_lo, y_lo]).unwrap();
        assert!(report.valid, "report: {report:?}");
    }

    #[test]
    fn validity_13_matches_closed_form_bound() {
        // for p = (1,3) the in-range condition is 0 <= 1/4 - x/(36y) <= 1
        let n = 40.0f64;
        // pick y, solve the cubic (x-9y)^3 = -81 y n^2 for x
        let y = 5.0f64;
        let x = 9.0 * y + (-81.0 * y * n * n).cbrt();
        let u2 = 0.25 - x / (36.0 * y);
        let report = validate_surface_point(&[1, 3], n, &[x, y]).unwrap();
        assert_eq!(report.valid, (0.0..=1.0).contains(&u2), "u^2 = {u2}");
    }

    #[test]
    fn sampling_finds_the_ellipse_and_respects_empty_boxes() {
        let fam = large_order_surfaces(&[1, 2]).unwrap();
        let target = fam
            .entries
            .iter()
            .find(|e| e.kind == SurfaceKind::NontrivialEliminant)
            .unwrap();
        // strip the y factor to sample the ellipse itself
        let (_, ellipse) = split_known_factors(&target.poly, &[]);
        let pts = sample_surface(&ellipse, 40.0, (-100.0, 100.0), (-100.0, 100.0), 120);
        assert!(!pts.is_empty());
        for [x, y] in &pts {
            let v = x * x + 32.0 * y * y + 16.0 * y * 40.0;
            assert!(v.abs() < 1e-2, "sample off surface: {v}");
        }
        // a straight line samples as itself
        let line = poly_from_text_terms(&["x", "y"], &[(&[1, 0], 1), (&[0, 1], 2)]);
        let pts = sample_surface(&line, 0.0, (-1.0, 1.0), (-1.0, 1.0), 16);
        assert!(!pts.is_empty());
        for [x, y] in &pts {
            assert!((x + 2.0 * y).abs() < 1e-7);
        }
        // no roots in the box -> empty
        let circle_far = poly_from_text_terms(
            &["x", "y"],
            &[(&[2, 0], 1), (&[0, 2], 1), (&[0, 0], -10000)],
        );
        assert!(sample_surface(&circle_far, 0.0, (-1.0, 1.0), (-1.0, 1.0), 16).is_empty());
    }
}
