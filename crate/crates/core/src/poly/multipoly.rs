//! Sparse multivariate polynomials with `BigInt` coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{GbfError, Result};

/// A polynomial over an ordered list of named variables. Terms map exponent
/// vectors (aligned with `vars`) to nonzero integer coefficients; the term
/// order is lexicographic in the declared variable order.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

/// Result of an exact division over the rationals: g = f * poly * num/den.
#[derive(Clone, Debug)]
pub struct Quotient {
    /// Primitive integer quotient.
    pub poly: MultiPoly,
    /// Rational scalar numerator.
    pub num: BigInt,
    /// Rational scalar denominator (positive).
    pub den: BigInt,
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> Self {
        Self {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Self {
            vars: Vec::new(),
            terms,
        }
    }

    /// The variable `name` as a polynomial.
    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], BigInt::one());
        Self {
            vars: vec![name.to_string()],
            terms,
        }
    }

    /// Build from explicit (exponent vector, coefficient) pairs.
    pub fn from_terms(
        vars: &[&str],
        terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>,
    ) -> Result<Self> {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let mut map = BTreeMap::new();
        for (exp, coef) in terms {
            if exp.len() != vars.len() {
                return Err(GbfError::InvalidInput(format!(
                    "exponent vector length {} does not match {} variables",
                    exp.len(),
                    vars.len()
                )));
            }
            if !coef.is_zero() {
                let entry: &mut BigInt = map.entry(exp).or_insert_with(BigInt::zero);
                *entry += coef;
                if entry.is_zero() {
                    // removed below by retain
                }
            }
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Self { vars, terms: map })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&p| p == 0))
    }

    /// The constant value, when [`is_constant`](Self::is_constant).
    pub fn constant_value(&self) -> Option<BigInt> {
        if !self.is_constant() {
            return None;
        }
        Some(
            self.terms
                .values()
                .next()
                .cloned()
                .unwrap_or_else(BigInt::zero),
        )
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Degree in one variable (0 when absent); -1 is not used, the zero
    /// polynomial reports degree 0.
    pub fn degree(&self, name: &str) -> u32 {
        match self.var_index(name) {
            None => 0,
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    /// Re-express over a variable universe that must contain every current
    /// variable.
    pub fn align_to(&self, universe: &[String]) -> Self {
        if self.vars == universe {
            return self.clone();
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                universe
                    .iter()
                    .position(|u| u == v)
                    .expect("universe must contain all variables")
            })
            .collect();
        let mut terms = BTreeMap::new();
        for (exp, coef) in &self.terms {
            let mut new_exp = vec![0u32; universe.len()];
            for (i, &e) in exp.iter().enumerate() {
                new_exp[map[i]] = e;
            }
            terms.insert(new_exp, coef.clone());
        }
        Self {
            vars: universe.to_vec(),
            terms,
        }
    }

    /// Merged universe: self's variables followed by the other's new ones.
    pub fn merged_universe(&self, other: &Self) -> Vec<String> {
        let mut universe = self.vars.clone();
        for v in &other.vars {
            if !universe.contains(v) {
                universe.push(v.clone());
            }
        }
        universe
    }

    /// Drop variables that no term uses.
    pub fn prune_vars(&self) -> Self {
        let used: Vec<usize> = (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|e| e[i] > 0))
            .collect();
        if used.len() == self.vars.len() {
            return self.clone();
        }
        let vars = used.iter().map(|&i| self.vars[i].clone()).collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (used.iter().map(|&i| e[i]).collect(), c.clone()))
            .collect();
        Self { vars, terms }
    }

    pub fn add(&self, other: &Self) -> Self {
        let universe = self.merged_universe(other);
        let mut out = self.align_to(&universe);
        for (exp, coef) in other.align_to(&universe).terms {
            let entry = out.terms.entry(exp).or_insert_with(BigInt::zero);
            *entry += coef;
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let universe = self.merged_universe(other);
        let a = self.align_to(&universe);
        let b = other.align_to(&universe);
        let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = terms.entry(exp).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Self {
            vars: universe,
            terms,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(1);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiply by `name^power`.
    pub fn mul_var_pow(&self, name: &str, power: u32) -> Self {
        self.mul(&Self::var(name).pow(power))
    }

    /// Partial derivative.
    pub fn derivative(&self, name: &str) -> Self {
        let Some(i) = self.var_index(name) else {
            return Self {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        };
        let mut terms = BTreeMap::new();
        for (exp, coef) in &self.terms {
            if exp[i] == 0 {
                continue;
            }
            let mut e = exp.clone();
            let p = e[i];
            e[i] -= 1;
            terms.insert(e, coef * BigInt::from(p));
        }
        Self {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Coefficients with respect to one variable: index = power, entries are
    /// polynomials in the remaining variables.
    pub fn coeffs_wrt(&self, name: &str) -> Vec<Self> {
        let deg = self.degree(name) as usize;
        let rest: Vec<String> = self.vars.iter().filter(|v| *v != name).cloned().collect();
        let mut out = vec![
            Self {
                vars: rest.clone(),
                terms: BTreeMap::new(),
            };
            deg + 1
        ];
        let idx = self.var_index(name);
        for (exp, coef) in &self.terms {
            let (p, rest_exp): (u32, Vec<u32>) = match idx {
                None => (0, exp.clone()),
                Some(i) => (
                    exp[i],
                    exp.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != i)
                        .map(|(_, &e)| e)
                        .collect(),
                ),
            };
            out[p as usize].terms.insert(rest_exp, coef.clone());
        }
        out
    }

    /// Leading (lexicographically greatest) term.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> BigInt {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigInt::zero)
    }

    /// Positive gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = integer_gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn normalize_primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut content = self.content();
        if self.leading_coefficient().is_negative() {
            content = -content;
        }
        Self {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c / &content))
                .collect(),
        }
    }

    /// Exact division over the integers; `None` when `d` does not divide
    /// `self` in Z[vars].
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let universe = self.merged_universe(d);
        let mut r = self.align_to(&universe);
        let d = d.align_to(&universe);
        let (d_exp, d_coef) = {
            let (e, c) = d.leading_term().expect("nonzero divisor");
            (e.clone(), c.clone())
        };
        let mut q_terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        while !r.is_zero() {
            let (r_exp, r_coef) = {
                let (e, c) = r.leading_term().unwrap();
                (e.clone(), c.clone())
            };
            // monomial divisibility
            let mut t_exp = Vec::with_capacity(r_exp.len());
            for (re, de) in r_exp.iter().zip(&d_exp) {
                if re < de {
                    return None;
                }
                t_exp.push(re - de);
            }
            // coefficient divisibility
            let (t_coef, rem) = num_integer_div_rem(&r_coef, &d_coef);
            if !rem.is_zero() {
                return None;
            }
            let t = Self {
                vars: universe.clone(),
                terms: BTreeMap::from([(t_exp.clone(), t_coef.clone())]),
            };
            r = r.sub(&t.mul(&d));
            q_terms.insert(t_exp, t_coef);
        }
        Some(Self {
            vars: universe,
            terms: q_terms,
        })
    }

    /// `true` when `g = self * q` exactly over the rationals, with the
    /// quotient in primitive integer form and its rational scalar.
    pub fn divides(&self, g: &Self) -> Option<Quotient> {
        if self.is_zero() {
            return None;
        }
        if g.is_zero() {
            return Some(Quotient {
                poly: MultiPoly::constant(0),
                num: BigInt::zero(),
                den: BigInt::one(),
            });
        }
        let cf = self.content();
        let cg = g.content();
        let fp = self.normalize_primitive();
        let gp = g.normalize_primitive();
        // Gauss: f | g over Q iff pp(f) | pp(g) over Z
        let q = gp.exact_div(&fp)?;
        // reconstruct signs: g = sign_g cg gp, f = sign_f cf fp, gp = fp q
        let sign_f = if self.leading_coefficient().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let sign_g = if g.leading_coefficient().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let q_sign = if q.leading_coefficient().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let qp = q.normalize_primitive();
        let qc = q.content();
        // g = f * qp * (sign_g cg q_sign qc) / (sign_f cf)
        let num = sign_g * cg * q_sign * qc;
        let den = sign_f * cf;
        let (num, den) = reduce_fraction(num, den);
        Some(Quotient { poly: qp, num, den })
    }

    /// Evaluate at named f64 values; unlisted variables default to 0.
    pub fn eval_f64(&self, values: &[(&str, f64)]) -> f64 {
        let assignment: Vec<f64> = self
            .vars
            .iter()
            .map(|v| {
                values
                    .iter()
                    .find(|(name, _)| name == v)
                    .map(|&(_, x)| x)
                    .unwrap_or(0.0)
            })
            .collect();
        let mut acc = 0.0;
        for (exp, coef) in &self.terms {
            let mut term = bigint_to_f64(coef);
            for (i, &e) in exp.iter().enumerate() {
                term *= assignment[i].powi(e as i32);
            }
            acc += term;
        }
        acc
    }

    /// Substitute a numeric value for one variable, scaling by `den^deg` to
    /// stay in integer coefficients: returns p(..., v = num/den, ...) * den^deg.
    pub fn substitute_rational(&self, name: &str, num: &BigInt, den: &BigInt) -> Self {
        let Some(i) = self.var_index(name) else {
            return self.clone();
        };
        let deg = self.degree(name);
        let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (exp, coef) in &self.terms {
            let p = exp[i];
            let mut e = exp.clone();
            e[i] = 0;
            let factor = num.pow(p) * den.pow(deg - p);
            let entry = terms.entry(e).or_insert_with(BigInt::zero);
            *entry += coef * factor;
        }
        terms.retain(|_, c| !c.is_zero());
        Self {
            vars: self.vars.clone(),
            terms,
        }
        .prune_vars()
    }

    /// Canonical text: terms in descending lexicographic order, explicit
    /// exponents, e.g. `x^2 + 32*y^2 + 16*y*nu`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (exp, coef)) in self.terms.iter().rev().enumerate() {
            let neg = coef.is_negative();
            let mag = coef.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || exp.iter().all(|&e| e == 0) {
                factors.push(mag.to_string());
            }
            for (v, &e) in self.vars.iter().zip(exp) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(PolyRepr::from(self)).expect("serializable")
    }

    pub fn from_json_value(value: &serde_json::Value) -> Result<Self> {
        let repr: PolyRepr = serde_json::from_value(value.clone())
            .map_err(|e| GbfError::InvalidInput(format!("bad polynomial JSON: {e}")))?;
        repr.try_into()
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        let universe = self.merged_universe(other);
        self.align_to(&universe).terms == other.align_to(&universe).terms
    }
}

impl Eq for MultiPoly {}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// JSON shape: {"vars": [...], "terms": [{"exp": [...], "coef": "..."}]}
#[derive(Serialize, Deserialize)]
struct PolyRepr {
    vars: Vec<String>,
    terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<u32>,
    coef: String,
}

impl From<&MultiPoly> for PolyRepr {
    fn from(p: &MultiPoly) -> Self {
        Self {
            vars: p.vars.clone(),
            terms: p
                .terms
                .iter()
                .rev()
                .map(|(e, c)| TermRepr {
                    exp: e.clone(),
                    coef: c.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<PolyRepr> for MultiPoly {
    type Error = GbfError;

    fn try_from(repr: PolyRepr) -> Result<Self> {
        let vars: Vec<&str> = repr.vars.iter().map(|s| s.as_str()).collect();
        let mut terms = Vec::new();
        for t in repr.terms {
            let coef: BigInt = t
                .coef
                .parse()
                .map_err(|e| GbfError::InvalidInput(format!("bad coefficient: {e}")))?;
            terms.push((t.exp, coef));
        }
        MultiPoly::from_terms(&vars, terms)
    }
}

fn integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.gcd(b)
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    use num_integer::Integer;
    a.div_rem(b)
}

fn reduce_fraction(num: BigInt, den: BigInt) -> (BigInt, BigInt) {
    if num.is_zero() {
        return (num, BigInt::one());
    }
    let g = integer_gcd(&num, &den);
    let (mut num, mut den) = (num / &g, den / &g);
    if den.is_negative() {
        num = -num;
        den = -den;
    }
    (num, den)
}

fn bigint_to_f64(c: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(f64::NAN)
}
