//! Function classes: constructive samplers, membership residuals and
//! closed-form extremal functions.
//!
//! Apart from the Hurwitz class, every class here is the image of the
//! Carathéodory class under a coefficient map `a_n = c_n · p_{n−1}`:
//!
//! | class                         | `c_n`     |
//! |-------------------------------|-----------|
//! | Noshiro-Warschawski (`f′ ∈ P`)| `1/n`     |
//! | closed hull of convex         | `1/2`     |
//! | closed hull of `C(α)`         | `A_n/2`   |
//! | closed hull of starlike       | `n/2`     |
//!
//! so sampling reduces to sampling a Herglotz measure.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::herglotz::{sample_measure, HerglotzMeasure};
use crate::series::TruncatedSeries;

/// Radii of the polar grid used by membership checks.
pub const MEMBERSHIP_RADII: [f64; 3] = [0.5, 0.9, 0.99];
/// Angular resolution of the membership grid.
pub const MEMBERSHIP_ANGLES: usize = 256;

/// Class tag without parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassTag {
    Hurwitz,
    NoshiroWarschawski,
    HullConvex,
    HullConvexOrderAlpha,
    HullStarlike,
    KoebeFamily,
}

impl ClassTag {
    pub const ALL: [ClassTag; 6] = [
        ClassTag::Hurwitz,
        ClassTag::NoshiroWarschawski,
        ClassTag::HullConvex,
        ClassTag::HullConvexOrderAlpha,
        ClassTag::HullStarlike,
        ClassTag::KoebeFamily,
    ];

    /// Name used in JSON and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            ClassTag::Hurwitz => "hurwitz",
            ClassTag::NoshiroWarschawski => "nw",
            ClassTag::HullConvex => "hull_convex",
            ClassTag::HullConvexOrderAlpha => "hull_convex_alpha",
            ClassTag::HullStarlike => "hull_starlike",
            ClassTag::KoebeFamily => "koebe",
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| {
                invalid(format!(
                    "unknown class '{s}' (expected one of hurwitz, nw, hull_convex, hull_convex_alpha, hull_starlike, koebe)"
                ))
            })
    }
}

/// One of the supported function classes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawClassSpec", into = "RawClassSpec")]
pub enum ClassSpec {
    /// `∑ n|a_n| ≤ 1`.
    Hurwitz,
    /// `Re f′ > 0`.
    NoshiroWarschawski,
    /// Closed convex hull of convex functions, `Re f(z)/z > 1/2`.
    HullConvex,
    /// Closed convex hull of `C(α)`, `α < 1`.
    HullConvexOrderAlpha { alpha: f64 },
    /// Closed convex hull of starlike functions.
    HullStarlike,
    /// Rotations of the Koebe function.
    KoebeFamily,
}

#[derive(Serialize, Deserialize)]
struct RawClassSpec {
    class: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alpha: Option<f64>,
}

impl TryFrom<RawClassSpec> for ClassSpec {
    type Error = Error;

    fn try_from(raw: RawClassSpec) -> Result<Self> {
        ClassSpec::from_tag(raw.class.parse()?, raw.alpha)
    }
}

impl From<ClassSpec> for RawClassSpec {
    fn from(spec: ClassSpec) -> Self {
        RawClassSpec {
            class: spec.tag().name().to_string(),
            alpha: spec.alpha(),
        }
    }
}

impl ClassSpec {
    /// `C(α)` hull; fails unless `α < 1`.
    pub fn order_alpha(alpha: f64) -> Result<Self> {
        let spec = ClassSpec::HullConvexOrderAlpha { alpha };
        spec.validate()?;
        Ok(spec)
    }

    /// Builds a spec from a tag and the optional order parameter.
    pub fn from_tag(tag: ClassTag, alpha: Option<f64>) -> Result<Self> {
        let spec = match (tag, alpha) {
            (ClassTag::HullConvexOrderAlpha, Some(alpha)) => ClassSpec::HullConvexOrderAlpha { alpha },
            (ClassTag::HullConvexOrderAlpha, None) => {
                return Err(invalid("class hull_convex_alpha requires alpha"))
            }
            (_, Some(_)) => return Err(invalid(format!("class {tag} takes no alpha"))),
            (ClassTag::Hurwitz, None) => ClassSpec::Hurwitz,
            (ClassTag::NoshiroWarschawski, None) => ClassSpec::NoshiroWarschawski,
            (ClassTag::HullConvex, None) => ClassSpec::HullConvex,
            (ClassTag::HullStarlike, None) => ClassSpec::HullStarlike,
            (ClassTag::KoebeFamily, None) => ClassSpec::KoebeFamily,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn tag(&self) -> ClassTag {
        match self {
            ClassSpec::Hurwitz => ClassTag::Hurwitz,
            ClassSpec::NoshiroWarschawski => ClassTag::NoshiroWarschawski,
            ClassSpec::HullConvex => ClassTag::HullConvex,
            ClassSpec::HullConvexOrderAlpha { .. } => ClassTag::HullConvexOrderAlpha,
            ClassSpec::HullStarlike => ClassTag::HullStarlike,
            ClassSpec::KoebeFamily => ClassTag::KoebeFamily,
        }
    }

    pub fn alpha(&self) -> Option<f64> {
        match self {
            ClassSpec::HullConvexOrderAlpha { alpha } => Some(*alpha),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ClassSpec::HullConvexOrderAlpha { alpha } if !(alpha.is_finite() && *alpha < 1.0) => {
                Err(invalid(format!("order parameter alpha = {alpha} must satisfy alpha < 1")))
            }
            _ => Ok(()),
        }
    }

    /// Label used in reports, e.g. `hull_convex_alpha(0.25)`.
    pub fn label(&self) -> String {
        match self {
            ClassSpec::HullConvexOrderAlpha { alpha } => format!("hull_convex_alpha({alpha})"),
            other => other.tag().name().to_string(),
        }
    }

    /// Whether the class is the image of the Carathéodory class under a coefficient map.
    pub fn is_herglotz_parametrized(&self) -> bool {
        !matches!(self, ClassSpec::Hurwitz | ClassSpec::KoebeFamily)
    }

    /// Factor `c_n` in `a_n = c_n · p_{n−1}`. Koebe rotations use the starlike-hull map.
    pub fn coefficient_factor(&self, n: usize) -> Result<f64> {
        match self {
            ClassSpec::NoshiroWarschawski => Ok(1.0 / n as f64),
            ClassSpec::HullConvex => Ok(0.5),
            ClassSpec::HullConvexOrderAlpha { alpha } => Ok(coefficient_a(n, *alpha)? / 2.0),
            ClassSpec::HullStarlike | ClassSpec::KoebeFamily => Ok(n as f64 / 2.0),
            ClassSpec::Hurwitz => Err(Error::Unsupported(
                "the Hurwitz class has no Carathéodory coefficient map".into(),
            )),
        }
    }

    /// Normalized series `z + ∑ c_n p_{n−1} z^n` built from Carathéodory coefficients.
    pub fn from_caratheodory(&self, p: &TruncatedSeries, order: usize) -> Result<TruncatedSeries> {
        if order >= 2 {
            p.require_order(order - 1)?;
        }
        let factors = (2..=order)
            .map(|n| self.coefficient_factor(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(TruncatedSeries::normalized_from_fn(order, |n| p.coeff(n - 1) * factors[n - 2]))
    }

    /// Image of a Herglotz measure under the class map.
    pub fn from_measure(&self, mu: &HerglotzMeasure, order: usize) -> Result<TruncatedSeries> {
        let p = mu.caratheodory_coefficients(order.saturating_sub(1).max(1));
        self.from_caratheodory(&p, order)
    }

    /// Inverse of the class map: `p_{n−1} = a_n / c_n` for `n = 2..=order`.
    pub fn to_caratheodory(&self, f: &TruncatedSeries) -> Result<Vec<Complex64>> {
        (2..=f.order())
            .map(|n| Ok(f.coeff(n) / self.coefficient_factor(n)?))
            .collect()
    }

    /// Random member truncated at `order`.
    ///
    /// Herglotz-parametrized classes draw a measure whose atom count is itself
    /// uniform in `1..=max(8, order)`, so both single-atom (boundary) and diffuse
    /// measures are exercised.
    pub fn sample<R: Rng + ?Sized>(&self, order: usize, rng: &mut R) -> Result<TruncatedSeries> {
        self.validate()?;
        if order < 2 {
            return Err(invalid("sampling needs order ≥ 2"));
        }
        match self {
            ClassSpec::Hurwitz => {
                let raw: Vec<f64> = (2..=order).map(|_| 1.0 - rng.random::<f64>()).collect();
                let total: f64 = raw.iter().sum();
                let scale: f64 = rng.random();
                let coeffs: Vec<Complex64> = raw
                    .iter()
                    .enumerate()
                    .map(|(i, w)| {
                        let phase = rng.random_range(0.0..TAU);
                        Complex64::from_polar(w / total * scale / (i + 2) as f64, phase)
                    })
                    .collect();
                Ok(TruncatedSeries::normalized_from_fn(order, |n| coeffs[n - 2]))
            }
            ClassSpec::KoebeFamily => {
                let c = Complex64::from_polar(1.0, rng.random_range(0.0..TAU));
                TruncatedSeries::koebe(order).rotate(c)
            }
            _ => {
                let atoms = rng.random_range(1..=order.max(8));
                let mu = sample_measure(atoms, rng)?;
                self.from_measure(&mu, order)
            }
        }
    }

    /// Violation of the class's defining condition; `0` for members.
    ///
    /// Hurwitz uses `max(0, ∑ n|a_n| − 1)`. The other classes check positivity of
    /// the real part of the underlying Carathéodory function (equivalently
    /// `Re f′ > 0` or `Re f(z)/z > 1/2`) on the polar grid
    /// [`MEMBERSHIP_RADII`] × [`MEMBERSHIP_ANGLES`]. A truncated series is only a
    /// section of the function, so the check is applied to its Fejér mean, which
    /// stays in the class whenever the full function does. Any deviation of `a_1`
    /// from `1` is added to the residual.
    pub fn membership_residual(&self, f: &TruncatedSeries) -> MembershipResidual {
        let normalization = (f.coeff(1) - Complex64::new(1.0, 0.0)).norm();
        let violation = match self {
            ClassSpec::Hurwitz => {
                let total: f64 = (2..=f.order()).map(|n| n as f64 * f.coeff(n).norm()).sum();
                (total - 1.0).max(0.0)
            }
            ClassSpec::HullConvexOrderAlpha { alpha } if *alpha >= 1.0 => f64::INFINITY,
            _ => {
                let p = self
                    .to_caratheodory(f)
                    .expect("coefficient map is defined for Herglotz-parametrized classes");
                let min_re = fejer_min_real_part(&p, &MEMBERSHIP_RADII, MEMBERSHIP_ANGLES);
                let scale = match self {
                    // Re f(z)/z − 1/2 = Re g / 2
                    ClassSpec::HullConvex => 0.5,
                    _ => 1.0,
                };
                (-min_re).max(0.0) * scale
            }
        };
        MembershipResidual(normalization + violation)
    }

    /// Closed-form extremal function for `Φ = λ a_m a_n − a_{m+n−1}`.
    ///
    /// `Generic` is the full-support extremal (Hurwitz monomials `z + α zⁿ/n` or
    /// `z + α z^m/(2m) + β zⁿ/(2n)`, `2 log 1/(1−z) − z`, `z/(1−z)`, `f_α`, Koebe).
    /// `Resonant` is the `z^{m+n−2}`-periodic extremal. For classes other than
    /// Hurwitz the phase `α` rotates the result.
    pub fn extremal(
        &self,
        m: usize,
        n: usize,
        branch: Branch,
        phases: Phases,
        order: usize,
    ) -> Result<TruncatedSeries> {
        self.validate()?;
        if m < 2 || n < 2 {
            return Err(invalid(format!("indices must satisfy m, n ≥ 2 (got m={m}, n={n})")));
        }
        if order < m + n - 1 {
            return Err(Error::InsufficientTruncation {
                needed: m + n - 1,
                available: order,
            });
        }
        phases.validate()?;
        let period = m + n - 2;
        let on_lattice = |k: usize| (k - 1).is_multiple_of(period);
        let zero = Complex64::new(0.0, 0.0);
        let real = |x: f64| Complex64::new(x, 0.0);

        let base = match (self, branch) {
            (ClassSpec::Hurwitz, Branch::Generic) if m == n => {
                return Ok(TruncatedSeries::normalized_from_fn(order, |k| {
                    if k == n {
                        phases.alpha / n as f64
                    } else {
                        zero
                    }
                }))
            }
            (ClassSpec::Hurwitz, Branch::Generic) => {
                return Ok(TruncatedSeries::normalized_from_fn(order, |k| {
                    if k == m {
                        phases.alpha / (2 * m) as f64
                    } else if k == n {
                        phases.beta / (2 * n) as f64
                    } else {
                        zero
                    }
                }))
            }
            (ClassSpec::Hurwitz, Branch::Resonant) => {
                let top = m + n - 1;
                return Ok(TruncatedSeries::normalized_from_fn(order, |k| {
                    if k == top {
                        phases.alpha / top as f64
                    } else {
                        zero
                    }
                }));
            }
            (ClassSpec::NoshiroWarschawski, Branch::Generic) => {
                TruncatedSeries::normalized_from_fn(order, |k| real(2.0 / k as f64))
            }
            (ClassSpec::NoshiroWarschawski, Branch::Resonant) => {
                TruncatedSeries::normalized_from_fn(order, |k| {
                    if on_lattice(k) {
                        real(2.0 / k as f64)
                    } else {
                        zero
                    }
                })
            }
            (ClassSpec::HullConvex, Branch::Generic) => TruncatedSeries::from_fn(order, |_| real(1.0)),
            (ClassSpec::HullConvex, Branch::Resonant) => {
                TruncatedSeries::from_fn(order, |k| if on_lattice(k) { real(1.0) } else { zero })
            }
            (ClassSpec::HullConvexOrderAlpha { alpha }, branch) => {
                let coeffs = (1..=order)
                    .map(|k| coefficient_a(k, *alpha))
                    .collect::<Result<Vec<_>>>()?;
                TruncatedSeries::from_fn(order, |k| match branch {
                    Branch::Generic => real(coeffs[k - 1]),
                    // root-of-unity average of f_α keeps exactly the lattice terms
                    Branch::Resonant if on_lattice(k) => real(coeffs[k - 1]),
                    Branch::Resonant => zero,
                })
            }
            (ClassSpec::HullStarlike, Branch::Generic) | (ClassSpec::KoebeFamily, Branch::Generic) => {
                TruncatedSeries::koebe(order)
            }
            (ClassSpec::HullStarlike, Branch::Resonant) => {
                TruncatedSeries::from_fn(order, |k| if on_lattice(k) { real(k as f64) } else { zero })
            }
            (ClassSpec::KoebeFamily, Branch::Resonant) => {
                return Err(Error::Unsupported(
                    "the Koebe family has no resonant extremal".into(),
                ))
            }
        };
        base.rotate(phases.alpha)
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Nonnegative violation of a class condition (`0` = member).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct MembershipResidual(pub f64);

impl MembershipResidual {
    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_member(self, tol: f64) -> bool {
        self.0 <= tol
    }
}

/// Which extremal to emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// Full-support extremal (large-λ regime for Hurwitz, `|1 − …| ≥ 1` regime otherwise).
    Generic,
    /// `z^{m+n−2}`-periodic extremal.
    Resonant,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Generic => "generic",
            Branch::Resonant => "resonant",
        })
    }
}

/// Unimodular phases of an extremal function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Phases {
    pub alpha: Complex64,
    pub beta: Complex64,
}

impl Default for Phases {
    fn default() -> Self {
        Phases {
            alpha: Complex64::new(1.0, 0.0),
            beta: Complex64::new(1.0, 0.0),
        }
    }
}

impl Phases {
    pub fn new(alpha: Complex64, beta: Complex64) -> Result<Self> {
        let p = Phases { alpha, beta };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        for c in [self.alpha, self.beta] {
            if (c.norm() - 1.0).abs() > 1e-12 {
                return Err(invalid(format!("phase has modulus {}, expected 1", c.norm())));
            }
        }
        Ok(())
    }
}

/// `A_n = (1/n!) ∏_{k=2}^{n} (k − 2α)`, the coefficients of the `C(α)` extremal `f_α`.
pub fn coefficient_a(n: usize, alpha: f64) -> Result<f64> {
    if !(alpha.is_finite() && alpha < 1.0) {
        return Err(invalid(format!("alpha = {alpha} must satisfy alpha < 1")));
    }
    if n == 0 {
        return Err(invalid("A_n is defined for n ≥ 1"));
    }
    Ok((2..=n).map(|k| (k as f64 - 2.0 * alpha) / k as f64).product())
}

/// Minimum over `radii × angles` of the real part of the Fejér mean
/// `1 + ∑_{k=1}^{M} (1 − k/(M+1)) p_k z^k`.
fn fejer_min_real_part(p: &[Complex64], radii: &[f64], angles: usize) -> f64 {
    let terms = p.len();
    let weighted: Vec<Complex64> = p
        .iter()
        .enumerate()
        .map(|(i, &pk)| pk * (1.0 - (i + 1) as f64 / (terms + 1) as f64))
        .collect();
    let mut min = f64::INFINITY;
    for &r in radii {
        for j in 0..angles {
            let z = Complex64::from_polar(r, TAU * j as f64 / angles as f64);
            let tail = weighted
                .iter()
                .rev()
                .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c);
            min = min.min(1.0 + (tail * z).re);
        }
    }
    min
}
