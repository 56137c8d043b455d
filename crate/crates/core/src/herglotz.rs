//! Finite atomic Herglotz measures and the Carathéodory functions they generate.
//!
//! A probability measure `μ = ∑ w_j δ_{η_j}` on the unit circle gives
//! `g(z) = ∑ w_j (1 + η_j z)/(1 − η_j z)`, which has positive real part in the
//! disk and `g(0) = 1`. Its coefficients are `p_n = 2 ∑ w_j η_j^n`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, Exp1};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::series::TruncatedSeries;

const WEIGHT_TOL: f64 = 1e-12;
const UNIMODULAR_TOL: f64 = 1e-12;

/// One atom: weight `w` at the point `e^{iθ}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Atom {
    pub w: f64,
    pub theta: f64,
}

impl Atom {
    pub fn position(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.theta)
    }
}

/// Probability measure with finitely many atoms on the unit circle.
///
/// Positions are stored as angles so that `|η| = 1` holds exactly and survives
/// a JSON round-trip.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawMeasure")]
pub struct HerglotzMeasure {
    atoms: Vec<Atom>,
}

#[derive(Deserialize)]
struct RawMeasure {
    atoms: Vec<Atom>,
}

impl TryFrom<RawMeasure> for HerglotzMeasure {
    type Error = Error;

    fn try_from(raw: RawMeasure) -> Result<Self> {
        HerglotzMeasure::new(raw.atoms)
    }
}

impl HerglotzMeasure {
    /// Validates and renormalizes. Weights must be nonnegative and sum to 1 within `1e−12`.
    pub fn new(atoms: Vec<Atom>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(invalid("a Herglotz measure needs at least one atom"));
        }
        for a in &atoms {
            if !a.w.is_finite() || a.w < 0.0 {
                return Err(invalid(format!("atom weight {} is not a nonnegative number", a.w)));
            }
            if !a.theta.is_finite() {
                return Err(invalid("atom angle is not finite"));
            }
        }
        let total: f64 = atoms.iter().map(|a| a.w).sum();
        if (total - 1.0).abs() > WEIGHT_TOL {
            return Err(invalid(format!("atom weights sum to {total}, expected 1")));
        }
        Ok(Self::renormalized(atoms))
    }

    /// Builds from weights and unimodular positions `η_j`.
    pub fn from_points(weights: &[f64], positions: &[Complex64]) -> Result<Self> {
        if weights.len() != positions.len() {
            return Err(invalid("weights and positions differ in length"));
        }
        let mut atoms = Vec::with_capacity(weights.len());
        for (&w, &eta) in weights.iter().zip(positions) {
            if (eta.norm() - 1.0).abs() > UNIMODULAR_TOL {
                return Err(invalid(format!("atom position has modulus {}", eta.norm())));
            }
            atoms.push(Atom { w, theta: eta.arg() });
        }
        Self::new(atoms)
    }

    /// Builds from arbitrary nonnegative weights (not all zero), rescaled to sum 1.
    pub(crate) fn from_unnormalized(atoms: Vec<Atom>) -> Result<Self> {
        let total: f64 = atoms.iter().map(|a| a.w).sum();
        if atoms.is_empty() || total.is_nan() || total <= 0.0 || atoms.iter().any(|a| a.w < 0.0) {
            return Err(invalid("weights must be nonnegative with positive total"));
        }
        Ok(Self::renormalized(atoms))
    }

    fn renormalized(mut atoms: Vec<Atom>) -> Self {
        let total: f64 = atoms.iter().map(|a| a.w).sum();
        for a in &mut atoms {
            if total != 1.0 {
                a.w /= total;
            }
            a.theta = a.theta.rem_euclid(TAU);
        }
        Self { atoms }
    }

    /// Point mass at `e^{iθ}`.
    pub fn point_mass(theta: f64) -> Self {
        Self::renormalized(vec![Atom { w: 1.0, theta }])
    }

    /// Uniform measure on the `q`-th roots of unity.
    pub fn roots_of_unity(q: usize) -> Result<Self> {
        if q == 0 {
            return Err(invalid("q must be positive"));
        }
        Ok(Self::renormalized(
            (0..q)
                .map(|j| Atom {
                    w: 1.0,
                    theta: TAU * j as f64 / q as f64,
                })
                .collect(),
        ))
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// `(1−t)·self + t·other`.
    pub fn mix(&self, other: &HerglotzMeasure, t: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&t) {
            return Err(invalid(format!("mixing parameter {t} outside [0, 1]")));
        }
        let atoms = self
            .atoms
            .iter()
            .map(|a| Atom { w: a.w * (1.0 - t), theta: a.theta })
            .chain(other.atoms.iter().map(|a| Atom { w: a.w * t, theta: a.theta }))
            .collect();
        Self::from_unnormalized(atoms)
    }

    /// Coefficients `p_1..p_N` of the generated Carathéodory function.
    pub fn caratheodory_coefficients(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_fn(order, |n| {
            let s: Complex64 = self
                .atoms
                .iter()
                .map(|a| Complex64::from_polar(a.w, a.theta * n as f64))
                .sum();
            s * 2.0
        })
    }

    /// Closed-form value `∑ w_j (1 + η_j z)/(1 − η_j z)` for `|z| < 1`.
    pub fn value(&self, z: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        self.atoms
            .iter()
            .map(|a| {
                let ez = a.position() * z;
                (one + ez) / (one - ez) * a.w
            })
            .sum()
    }

    /// Minimum of `Re g` over the polar grid `radii × angles` (closed-form kernel).
    pub fn verify_positive_real_part(&self, radii: &[f64], angles: usize) -> Result<f64> {
        if let Some(r) = radii.iter().find(|r| !(0.0..1.0).contains(*r)) {
            return Err(Error::Domain(format!("grid radius {r} is not in [0, 1)")));
        }
        let mut min = f64::INFINITY;
        for &r in radii {
            for k in 0..angles.max(1) {
                let z = Complex64::from_polar(r, TAU * k as f64 / angles.max(1) as f64);
                min = min.min(self.value(z).re);
            }
        }
        Ok(min)
    }
}

/// Random measure with `atoms` atoms: uniform angles, weights from normalized
/// exponential draws (a flat Dirichlet law on the simplex).
pub fn sample_measure<R: Rng + ?Sized>(atoms: usize, rng: &mut R) -> Result<HerglotzMeasure> {
    if atoms == 0 {
        return Err(invalid("atom count must be at least 1"));
    }
    let raw = (0..atoms)
        .map(|_| {
            let w: f64 = Exp1.sample(rng);
            let theta = rng.random_range(0.0..TAU);
            // Exp1 can return 0 only with vanishing probability; keep weights positive.
            Atom { w: w.max(f64::MIN_POSITIVE), theta }
        })
        .collect();
    HerglotzMeasure::from_unnormalized(raw)
}
