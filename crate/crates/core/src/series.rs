//! Truncated complex power series.
//!
//! Two carriers are used throughout the crate:
//!
//! * [`TruncatedSeries`] stores `a_1..a_N` with 1-based indexing, matching the
//!   usual `f(z) = z + a_2 z² + …` subscripts. When it holds the coefficients of
//!   a Carathéodory function `g(z) = 1 + p_1 z + p_2 z² + …`, the constant term
//!   `1` is implicit and slot `k` holds `p_k`.
//! * [`PowerSeries`] stores `c_0..c_N` including the constant term.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

const UNIMODULAR_TOL: f64 = 1e-12;

/// Coefficients `a_1..a_N` of a series without constant term.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

impl TruncatedSeries {
    /// Builds a series from `a_1..a_N`. At least one coefficient is required.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(invalid("a truncated series needs order ≥ 1"));
        }
        Ok(Self { coeffs })
    }

    /// Builds `a_k = f(k)` for `k = 1..=order`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Complex64) -> Self {
        assert!(order >= 1, "order must be positive");
        Self {
            coeffs: (1..=order).map(f).collect(),
        }
    }

    /// Normalized series with `a_1 = 1` and `a_k = f(k)` for `k ≥ 2`.
    pub fn normalized_from_fn(order: usize, mut f: impl FnMut(usize) -> Complex64) -> Self {
        Self::from_fn(order, |k| if k == 1 { Complex64::new(1.0, 0.0) } else { f(k) })
    }

    /// The identity function `z`.
    pub fn identity(order: usize) -> Self {
        Self::normalized_from_fn(order, |_| Complex64::new(0.0, 0.0))
    }

    /// The Koebe function `z/(1−z)²`, `a_k = k`.
    pub fn koebe(order: usize) -> Self {
        Self::from_fn(order, |k| Complex64::new(k as f64, 0.0))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient `a_k` (1-based). Panics when `k` is outside `1..=order`.
    pub fn coeff(&self, k: usize) -> Complex64 {
        assert!(
            k >= 1 && k <= self.coeffs.len(),
            "coefficient index {k} outside 1..={}",
            self.coeffs.len()
        );
        self.coeffs[k - 1]
    }

    /// Coefficient `a_k`, or `None` outside `1..=order`.
    pub fn get(&self, k: usize) -> Option<Complex64> {
        if k == 0 {
            None
        } else {
            self.coeffs.get(k - 1).copied()
        }
    }

    pub fn set(&mut self, k: usize, value: Complex64) {
        assert!(k >= 1 && k <= self.coeffs.len());
        self.coeffs[k - 1] = value;
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    /// Fails with [`Error::InsufficientTruncation`] unless the order reaches `needed`.
    pub fn require_order(&self, needed: usize) -> Result<()> {
        if self.order() < needed {
            Err(Error::InsufficientTruncation {
                needed,
                available: self.order(),
            })
        } else {
            Ok(())
        }
    }

    /// Copy truncated (or zero-padded) to `order`.
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_fn(order, |k| self.get(k).unwrap_or_default())
    }

    /// Partial sum `∑ a_k z^k` for `|z| < 1`.
    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        if z.norm() >= 1.0 {
            return Err(Error::Domain(format!(
                "evaluation point |z| = {} is not inside the unit disk",
                z.norm()
            )));
        }
        Ok(self.evaluate_unchecked(z))
    }

    pub(crate) fn evaluate_unchecked(&self, z: Complex64) -> Complex64 {
        let inner = self
            .coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a);
        inner * z
    }

    /// Rotation `c̄ f(cz)`: coefficient `k` becomes `c^{k−1} a_k`.
    pub fn rotate(&self, c: Complex64) -> Result<Self> {
        if (c.norm() - 1.0).abs() > UNIMODULAR_TOL {
            return Err(invalid(format!("rotation factor must be unimodular, |c| = {}", c.norm())));
        }
        let mut power = Complex64::new(1.0, 0.0);
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| {
                let out = power * a;
                power *= c;
                out
            })
            .collect();
        Ok(Self { coeffs })
    }

    /// Derivative `f′`, a series with constant term: `c_k = (k+1)·a_{k+1}`.
    pub fn differentiate(&self) -> PowerSeries {
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, &a)| a * (i + 1) as f64)
                .collect(),
        }
    }

    /// View as a series with zero constant term.
    pub fn to_power_series(&self) -> PowerSeries {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::new(0.0, 0.0));
        coeffs.extend_from_slice(&self.coeffs);
        PowerSeries { coeffs }
    }
}

/// Coefficients `c_0..c_N` of a series with constant term.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(invalid("a power series needs at least the constant term"));
        }
        Ok(Self { coeffs })
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Complex64) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        assert!(!coeffs.is_empty());
        Self {
            coeffs: coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect(),
        }
    }

    /// The constant series `1`.
    pub fn one(order: usize) -> Self {
        Self::from_fn(order, |k| Complex64::new(if k == 0 { 1.0 } else { 0.0 }, 0.0))
    }

    /// Highest stored power.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Cauchy product truncated at `z^order`.
    pub fn multiply(&self, other: &PowerSeries, order: usize) -> Result<PowerSeries> {
        if self.order() < order || other.order() < order {
            return Err(invalid(format!(
                "cannot multiply to order {order}: operand orders are {} and {}",
                self.order(),
                other.order()
            )));
        }
        let coeffs = (0..=order)
            .map(|k| (0..=k).map(|i| self.coeffs[i] * other.coeffs[k - i]).sum())
            .collect();
        Ok(PowerSeries { coeffs })
    }

    /// Termwise derivative: `c'_k = (k+1)·c_{k+1}`. The constant series maps to `0`.
    pub fn differentiate(&self) -> PowerSeries {
        if self.coeffs.len() == 1 {
            return PowerSeries {
                coeffs: vec![Complex64::new(0.0, 0.0)],
            };
        }
        PowerSeries {
            coeffs: self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| c * (i + 1) as f64)
                .collect(),
        }
    }

    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        if z.norm() >= 1.0 {
            return Err(Error::Domain(format!(
                "evaluation point |z| = {} is not inside the unit disk",
                z.norm()
            )));
        }
        Ok(self
            .coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c))
    }
}
