//! The generalized Zalcman functional `Φ(f) = λ a_m a_n − a_{m+n−1}` and its
//! sharp bounds.
//!
//! Every bound comes in two equivalent forms: a max-form inequality valid for
//! all complex `λ`, and a single `λ`-free sum-form inequality. The equivalence
//! is the elementary fact that `|a + λb| ≤ M max{C, |λ|}` for all `λ` iff
//! `|a| + |b|C ≤ MC`, exercised by [`lemma_equivalence`].

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::classes::{coefficient_a, Branch, ClassSpec};
use crate::error::{invalid, Error, Result};
use crate::series::TruncatedSeries;

/// The triple `(λ, m, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FunctionalSpec {
    pub lambda: Complex64,
    pub m: usize,
    pub n: usize,
}

impl FunctionalSpec {
    pub fn new(lambda: Complex64, m: usize, n: usize) -> Result<Self> {
        if m < 2 || n < 2 {
            return Err(invalid(format!("indices must satisfy m, n ≥ 2 (got m={m}, n={n})")));
        }
        if !(lambda.re.is_finite() && lambda.im.is_finite()) {
            return Err(invalid("lambda must be finite"));
        }
        Ok(Self { lambda, m, n })
    }

    pub fn real(lambda: f64, m: usize, n: usize) -> Result<Self> {
        Self::new(Complex64::new(lambda, 0.0), m, n)
    }

    /// Index `m + n − 1` of the subtracted coefficient.
    pub fn top(&self) -> usize {
        self.m + self.n - 1
    }

    /// Default truncation order `2·max(m, n)`.
    pub fn default_order(&self) -> usize {
        2 * self.m.max(self.n)
    }

    pub fn with_lambda(&self, lambda: Complex64) -> Self {
        Self { lambda, ..*self }
    }
}

/// `λ a_m a_n − a_{m+n−1}`.
pub fn zalcman(f: &TruncatedSeries, spec: &FunctionalSpec) -> Result<Complex64> {
    f.require_order(spec.top())?;
    Ok(spec.lambda * f.coeff(spec.m) * f.coeff(spec.n) - f.coeff(spec.top()))
}

/// Sharp upper bound on `|Φ|` over the class.
pub fn sharp_bound(class: &ClassSpec, spec: &FunctionalSpec) -> Result<f64> {
    class.validate()?;
    let (m, n) = (spec.m as f64, spec.n as f64);
    let top = m + n - 1.0;
    let lam = spec.lambda;
    let one = Complex64::new(1.0, 0.0);
    Ok(match class {
        ClassSpec::Hurwitz if spec.m == spec.n => (lam.norm() / (n * n)).max(1.0 / (2.0 * n - 1.0)),
        ClassSpec::Hurwitz => (lam.norm() / (4.0 * m * n)).max(1.0 / top),
        ClassSpec::NoshiroWarschawski => 2.0 / top * (one - lam * (2.0 * top / (m * n))).norm().max(1.0),
        ClassSpec::HullConvex => (one - lam).norm().max(1.0),
        ClassSpec::HullConvexOrderAlpha { alpha } => {
            let (am, an, at) = a_triple(*alpha, spec)?;
            at.max((lam * (am * an) - at).norm())
        }
        ClassSpec::HullStarlike => top * (one - lam * (m * n / top)).norm().max(1.0),
        ClassSpec::KoebeFamily => {
            return Err(Error::Unsupported(
                "no sharp bound is defined for the Koebe family".into(),
            ))
        }
    })
}

fn a_triple(alpha: f64, spec: &FunctionalSpec) -> Result<(f64, f64, f64)> {
    Ok((
        coefficient_a(spec.m, alpha)?,
        coefficient_a(spec.n, alpha)?,
        coefficient_a(spec.top(), alpha)?,
    ))
}

/// `RHS − LHS` of the class's `λ`-free inequality.
pub fn sum_form_check(class: &ClassSpec, f: &TruncatedSeries, m: usize, n: usize) -> Result<f64> {
    class.validate()?;
    let spec = FunctionalSpec::real(0.0, m, n)?;
    f.require_order(spec.top())?;
    let am = f.coeff(m);
    let an = f.coeff(n);
    let at = f.coeff(spec.top());
    let prod = am * an;
    let (mf, nf) = (m as f64, n as f64);
    let top = mf + nf - 1.0;
    Ok(match class {
        ClassSpec::Hurwitz if m == n => 1.0 - (nf * nf * prod.norm() + (2.0 * nf - 1.0) * at.norm()),
        ClassSpec::Hurwitz => 1.0 - (4.0 * mf * nf * prod.norm() + top * at.norm()),
        ClassSpec::NoshiroWarschawski => {
            let c = mf * nf / (2.0 * top);
            2.0 / top - ((prod * c - at).norm() + c * prod.norm())
        }
        ClassSpec::HullConvex => 1.0 - ((prod - at).norm() + prod.norm()),
        ClassSpec::HullConvexOrderAlpha { alpha } => {
            let (a_m, a_n, a_t) = a_triple(*alpha, &spec)?;
            let scaled = prod / (a_m * a_n);
            1.0 - ((scaled - at / a_t).norm() + scaled.norm())
        }
        ClassSpec::HullStarlike => {
            let scaled = prod / (mf * nf);
            1.0 - ((scaled - at / top).norm() + scaled.norm())
        }
        ClassSpec::KoebeFamily => {
            return Err(Error::Unsupported(
                "no sum-form inequality is defined for the Koebe family".into(),
            ))
        }
    })
}

/// Which side of the threshold `λ` falls on: the extremal is [`Branch::Generic`]
/// when `quantity ≥ threshold` and [`Branch::Resonant`] when `quantity ≤ threshold`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Regime {
    pub quantity: f64,
    pub threshold: f64,
}

impl Regime {
    /// Branches whose extremal attains the bound, treating `|quantity − threshold|`
    /// below `tol` (relative to the threshold) as the threshold itself.
    pub fn branches(&self, tol: f64) -> Vec<Branch> {
        let slack = tol * self.threshold.max(1.0);
        let mut out = Vec::with_capacity(2);
        if self.quantity >= self.threshold - slack {
            out.push(Branch::Generic);
        }
        if self.quantity <= self.threshold + slack {
            out.push(Branch::Resonant);
        }
        out
    }
}

/// Regime quantity and threshold read off each theorem's case split.
pub fn regime(class: &ClassSpec, spec: &FunctionalSpec) -> Result<Regime> {
    class.validate()?;
    let (m, n) = (spec.m as f64, spec.n as f64);
    let top = m + n - 1.0;
    let lam = spec.lambda;
    let one = Complex64::new(1.0, 0.0);
    Ok(match class {
        ClassSpec::Hurwitz if spec.m == spec.n => Regime {
            quantity: lam.norm(),
            threshold: n * n / (2.0 * n - 1.0),
        },
        ClassSpec::Hurwitz => Regime {
            quantity: lam.norm(),
            threshold: 4.0 * m * n / top,
        },
        ClassSpec::NoshiroWarschawski => Regime {
            quantity: (one - lam * (2.0 * top / (m * n))).norm(),
            threshold: 1.0,
        },
        ClassSpec::HullConvex => Regime {
            quantity: (one - lam).norm(),
            threshold: 1.0,
        },
        ClassSpec::HullConvexOrderAlpha { alpha } => {
            let (am, an, at) = a_triple(*alpha, spec)?;
            Regime {
                quantity: (lam * (am * an) - at).norm(),
                threshold: at,
            }
        }
        ClassSpec::HullStarlike => Regime {
            quantity: (one - lam * (m * n / top)).norm(),
            threshold: 1.0,
        },
        ClassSpec::KoebeFamily => {
            return Err(Error::Unsupported("the Koebe family has no regime split".into()))
        }
    })
}

/// Theorem-critical `λ` values: `0`, `1`, and `8` points on each of the circles
/// `ρ·(critical circle)` for `ρ ∈ {0.99, 1, 1.01}`, so that both branches of the
/// max are exercised together with the threshold itself.
pub fn critical_lambdas(class: &ClassSpec, m: usize, n: usize) -> Result<Vec<Complex64>> {
    const ANGLES: usize = 8;
    const SCALES: [f64; 3] = [0.99, 1.0, 1.01];
    let spec = FunctionalSpec::real(0.0, m, n)?;
    let (mf, nf) = (m as f64, n as f64);
    let top = mf + nf - 1.0;
    let one = Complex64::new(1.0, 0.0);
    // λ = scale · (1 − ρ e^{iφ}) for the |1 − λ/scale| = 1 family, λ = ρ R e^{iφ} for Hurwitz
    let shifted = |scale: f64| -> Vec<Complex64> {
        SCALES
            .iter()
            .flat_map(|&rho| {
                (0..ANGLES).map(move |k| (one - Complex64::from_polar(rho, TAU * k as f64 / ANGLES as f64)) * scale)
            })
            .collect()
    };
    let mut out = vec![Complex64::new(0.0, 0.0), one];
    match class {
        ClassSpec::Hurwitz => {
            let radius = regime(class, &spec)?.threshold;
            out.push(Complex64::new(radius, 0.0));
            for rho in SCALES {
                for k in 0..ANGLES {
                    out.push(Complex64::from_polar(rho * radius, TAU * k as f64 / ANGLES as f64));
                }
            }
        }
        ClassSpec::NoshiroWarschawski => out.extend(shifted(mf * nf / (2.0 * top))),
        ClassSpec::HullConvex => out.extend(shifted(1.0)),
        ClassSpec::HullConvexOrderAlpha { alpha } => {
            let (am, an, at) = a_triple(*alpha, &spec)?;
            out.extend(shifted(at / (am * an)));
        }
        ClassSpec::HullStarlike => out.extend(shifted(top / (mf * nf))),
        ClassSpec::KoebeFamily => {
            return Err(Error::Unsupported("the Koebe family has no critical values".into()))
        }
    }
    Ok(out)
}

/// Per-sample record of `|Φ|` against its bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub value: f64,
    pub bound: f64,
    pub slack: f64,
    pub residual: f64,
}

impl BoundReport {
    pub fn evaluate(class: &ClassSpec, f: &TruncatedSeries, spec: &FunctionalSpec, residual: f64) -> Result<Self> {
        let value = zalcman(f, spec)?.norm();
        let bound = sharp_bound(class, spec)?;
        Ok(Self {
            value,
            bound,
            slack: bound - value,
            residual,
        })
    }
}

/// Data `(a, b, C, M)` of the max/sum equivalence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EquivalenceInstance {
    pub a: Complex64,
    pub b: Complex64,
    pub c: f64,
    pub m: f64,
}

impl EquivalenceInstance {
    pub fn new(a: Complex64, b: Complex64, c: f64, m: f64) -> Result<Self> {
        if !(c > 0.0 && m > 0.0) {
            return Err(invalid(format!("C and M must be positive (got C={c}, M={m})")));
        }
        Ok(Self { a, b, c, m })
    }

    /// `λ* = C·exp(i(arg a − arg b))`, where both forms are tight; `None` when `b = 0`.
    pub fn critical_lambda(&self) -> Option<Complex64> {
        if self.b == Complex64::new(0.0, 0.0) {
            None
        } else {
            Some(Complex64::from_polar(self.c, self.a.arg() - self.b.arg()))
        }
    }
}

/// Outcome of [`lemma_equivalence`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EquivalenceOutcome {
    pub sum_holds: bool,
    pub max_holds_on_grid: bool,
    pub worst_lambda: Complex64,
}

/// Radii multipliers and angle count of the `λ` grid in [`lemma_equivalence`].
pub const EQUIVALENCE_RADII: [f64; 5] = [0.0, 0.5, 1.0, 2.0, 10.0];
pub const EQUIVALENCE_ANGLES: usize = 72;

/// Compares `|a| + |b|C ≤ MC` with `|a + λb| ≤ M max{C, |λ|}` on a polar grid
/// (augmented with `λ*`), at tolerance `1e−12`.
pub fn lemma_equivalence(inst: &EquivalenceInstance) -> EquivalenceOutcome {
    lemma_equivalence_with_tol(inst, 1e-12)
}

pub fn lemma_equivalence_with_tol(inst: &EquivalenceInstance, tol: f64) -> EquivalenceOutcome {
    let sum_holds = inst.a.norm() + inst.b.norm() * inst.c <= inst.m * inst.c + tol;

    let mut grid = Vec::with_capacity(EQUIVALENCE_RADII.len() * EQUIVALENCE_ANGLES + 1);
    for &rho in &EQUIVALENCE_RADII {
        if rho == 0.0 {
            grid.push(Complex64::new(0.0, 0.0));
            continue;
        }
        for k in 0..EQUIVALENCE_ANGLES {
            grid.push(Complex64::from_polar(rho * inst.c, TAU * k as f64 / EQUIVALENCE_ANGLES as f64));
        }
    }
    grid.extend(inst.critical_lambda());

    let mut max_holds = true;
    let mut worst: Option<(f64, Complex64)> = None;
    for lam in grid {
        let lhs = (inst.a + lam * inst.b).norm();
        let scale = inst.c.max(lam.norm());
        if lhs > inst.m * scale + tol {
            max_holds = false;
        }
        let ratio = lhs / scale;
        // first maximizer wins; ratios equal to rounding count as ties
        match worst {
            Some((best, _)) if ratio <= best + 1e-12 * best.max(1.0) => {}
            _ => worst = Some((ratio, lam)),
        }
    }
    EquivalenceOutcome {
        sum_holds,
        max_holds_on_grid: max_holds,
        worst_lambda: worst.map_or(Complex64::new(0.0, 0.0), |w| w.1),
    }
}

/// Slacks of `|p_n − w p_k p_{n−k}| ≤ 2 max{1, |1−2w|}` and of
/// `|p_n − ½ p_k p_{n−k}| + ½|p_k p_{n−k}| ≤ 2` for Carathéodory coefficients `p`.
pub fn caratheodory_checks(p: &TruncatedSeries, n: usize, k: usize, w: Complex64) -> Result<(f64, f64)> {
    if k < 1 || k + 1 > n {
        return Err(invalid(format!("need 1 ≤ k ≤ n − 1 (got n={n}, k={k})")));
    }
    if p.order() < n {
        return Err(invalid(format!("need p_1..p_{n}, series has order {}", p.order())));
    }
    let pn = p.coeff(n);
    let prod = p.coeff(k) * p.coeff(n - k);
    let one = Complex64::new(1.0, 0.0);
    let with_w = 2.0 * (one - w * 2.0).norm().max(1.0) - (pn - w * prod).norm();
    let half = 2.0 - (pn - prod * 0.5).norm() - 0.5 * prod.norm();
    Ok((with_w, half))
}
