//! The phase function h(theta) = sum_k (x_k sin k*theta + y_k cos k*theta)
//! behind every GBF/MT-GBF integral, stored as a finite sparse map.

use std::collections::BTreeMap;

use crate::{GbfError, Result};

/// Finite sparse map from harmonic index k >= 1 to the coefficient pair
/// (x_k, y_k) of sin(k theta) and cos(k theta).
///
/// A pure-GBF instance has all y_k = 0; its support indices with x_k != 0
/// must be coprime (`gcd = 1`) before it may be evaluated through the GBF
/// entry points, which is checked there rather than at construction so that
/// intermediate objects (for example the single-harmonic integrands of the
/// square identities) remain representable.
#[derive(Clone, Debug, PartialEq)]
pub struct HarmonicCoefficients {
    entries: BTreeMap<u32, (f64, f64)>,
}

impl HarmonicCoefficients {
    /// Build from (k, (x_k, y_k)) pairs. Indices must be >= 1 and distinct,
    /// coefficients finite.
    pub fn new(entries: impl IntoIterator<Item = (u32, (f64, f64))>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (k, (x, y)) in entries {
            if k == 0 {
                return Err(GbfError::InvalidInput(
                    "harmonic indices must be >= 1".into(),
                ));
            }
            if !x.is_finite() || !y.is_finite() {
                return Err(GbfError::InvalidInput(format!(
                    "non-finite coefficient at harmonic {k}"
                )));
            }
            if map.insert(k, (x, y)).is_some() {
                return Err(GbfError::InvalidInput(format!(
                    "duplicate harmonic index {k}"
                )));
            }
        }
        Ok(Self { entries: map })
    }

    /// Pure-sine constructor: indices `p` aligned positionally with `x`.
    pub fn from_sine(p: &[u32], x: &[f64]) -> Result<Self> {
        if p.len() != x.len() {
            return Err(GbfError::InvalidInput(format!(
                "index/coefficient length mismatch: {} vs {}",
                p.len(),
                x.len()
            )));
        }
        Self::new(p.iter().zip(x).map(|(&k, &xv)| (k, (xv, 0.0))))
    }

    /// Mixed constructor with aligned sine and cosine coefficient lists.
    pub fn from_sine_cosine(p: &[u32], x: &[f64], y: &[f64]) -> Result<Self> {
        if p.len() != x.len() || p.len() != y.len() {
            return Err(GbfError::InvalidInput(
                "index/coefficient length mismatch".into(),
            ));
        }
        Self::new(
            p.iter()
                .zip(x.iter().zip(y))
                .map(|(&k, (&xv, &yv))| (k, (xv, yv))),
        )
    }

    /// The zero phase (h identically 0).
    pub fn zero() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, (f64, f64))> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn get(&self, k: u32) -> (f64, f64) {
        self.entries.get(&k).copied().unwrap_or((0.0, 0.0))
    }

    /// Harmonic indices in increasing order.
    pub fn support(&self) -> Vec<u32> {
        self.entries.keys().copied().collect()
    }

    pub fn is_pure_sine(&self) -> bool {
        self.entries.values().all(|&(_, y)| y == 0.0)
    }

    pub fn is_zero_phase(&self) -> bool {
        self.entries.values().all(|&(x, y)| x == 0.0 && y == 0.0)
    }

    /// gcd of the indices carrying a nonzero sine coefficient; `None` when
    /// no such index exists (the zero phase, which is allowed).
    pub fn sine_support_gcd(&self) -> Option<u32> {
        self.entries
            .iter()
            .filter(|(_, &(x, _))| x != 0.0)
            .map(|(&k, _)| k)
            .reduce(gcd_u32)
    }

    /// Check the pure-GBF invariants: all cosine coefficients zero and the
    /// nonzero sine support coprime.
    pub fn validate_gbf(&self) -> Result<()> {
        if !self.is_pure_sine() {
            return Err(GbfError::InvalidInput(
                "GBF evaluation requires all cosine coefficients to be zero".into(),
            ));
        }
        if let Some(g) = self.sine_support_gcd() {
            if g != 1 {
                return Err(GbfError::InvalidInput(format!(
                    "GBF index support must be coprime, gcd = {g}"
                )));
            }
        }
        Ok(())
    }

    /// h(theta) or one of its first three derivatives, as an exact
    /// trigonometric sum (no quadrature).
    ///
    /// `order` must be 0..=3.
    pub fn phase(&self, theta: f64, order: u8) -> f64 {
        assert!(order <= 3, "phase derivative order must be 0..=3");
        let mut acc = 0.0;
        for (&k, &(x, y)) in &self.entries {
            let kf = f64::from(k);
            let (s, c) = (kf * theta).sin_cos();
            acc += match order {
                0 => x * s + y * c,
                1 => kf * (x * c - y * s),
                2 => kf * kf * (-x * s - y * c),
                _ => kf * kf * kf * (-x * c + y * s),
            };
        }
        acc
    }

    /// sum_k k (|x_k| + |y_k|), the bandwidth of exp(-i h).
    pub fn k_weighted_mass(&self) -> f64 {
        self.entries
            .iter()
            .map(|(&k, &(x, y))| f64::from(k) * (x.abs() + y.abs()))
            .sum()
    }

    /// All coefficients multiplied by `t`.
    pub fn scaled(&self, t: f64) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .map(|(&k, &(x, y))| (k, (t * x, t * y)))
                .collect(),
        }
    }

    /// Map each coefficient pair through `f`, keeping the support.
    pub fn map_coeffs(&self, mut f: impl FnMut(u32, (f64, f64)) -> (f64, f64)) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .map(|(&k, &v)| (k, f(k, v)))
                .collect(),
        }
    }
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}
