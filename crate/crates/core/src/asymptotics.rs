//! Asymptotic and equivalence machinery for univalent coefficients.
//!
//! * Hayman index estimates `(1−r)² M∞(r, f)` along `r_j = 1 − 2^{−j}`.
//! * Coefficient ratios `|λ a_m a_n − a_{m+n−1}| / |λmn − m − n + 1|` along
//!   three paths to infinity.
//! * The audit of the four equivalent forms of Zalcman's inequality.
//! * Weak-conjecture predicates `(B_t)`, `(C_r)`, `(D_r)` scanned over class samples.
//! * The square-root iteration `C ↦ √C` that upgrades `|a_n| ≤ Cn` to `|a_n| ≤ n`.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::series::TruncatedSeries;

/// Anything that can be evaluated inside the unit disk.
pub trait Analytic {
    fn value(&self, z: Complex64) -> Complex64;
}

/// Anything with Taylor coefficients `a_k`, `k ≥ 1`.
pub trait CoefficientSource {
    /// `a_k`, or `None` when unavailable (e.g. beyond a truncation).
    fn coefficient(&self, k: usize) -> Option<Complex64>;
}

impl Analytic for TruncatedSeries {
    fn value(&self, z: Complex64) -> Complex64 {
        self.evaluate_unchecked(z)
    }
}

impl CoefficientSource for TruncatedSeries {
    fn coefficient(&self, k: usize) -> Option<Complex64> {
        self.get(k)
    }
}

/// Closed-form functions usable arbitrarily close to the boundary.
#[derive(Debug, Clone, PartialEq)]
pub enum ClosedForm {
    /// `z`
    Identity,
    /// `z/(1−z)²`
    Koebe,
    /// `z/(1−z)`
    HalfPlane,
    /// `z/(1−z²)`
    OddHalfPlane,
    /// `c̄ f(cz)`
    Rotated(Box<ClosedForm>, Complex64),
}

impl ClosedForm {
    pub fn rotated(self, c: Complex64) -> Result<Self> {
        if (c.norm() - 1.0).abs() > 1e-12 {
            return Err(invalid(format!("rotation factor must be unimodular, |c| = {}", c.norm())));
        }
        Ok(ClosedForm::Rotated(Box::new(self), c))
    }

    pub fn name(&self) -> String {
        match self {
            ClosedForm::Identity => "identity".into(),
            ClosedForm::Koebe => "koebe".into(),
            ClosedForm::HalfPlane => "half_plane".into(),
            ClosedForm::OddHalfPlane => "odd_half_plane".into(),
            ClosedForm::Rotated(f, c) => format!("rotated({}, {c})", f.name()),
        }
    }
}

impl FromStr for ClosedForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "identity" => Ok(ClosedForm::Identity),
            "koebe" => Ok(ClosedForm::Koebe),
            "half_plane" => Ok(ClosedForm::HalfPlane),
            "odd_half_plane" => Ok(ClosedForm::OddHalfPlane),
            other => Err(invalid(format!(
                "unknown function '{other}' (expected identity, koebe, half_plane, odd_half_plane)"
            ))),
        }
    }
}

impl Analytic for ClosedForm {
    fn value(&self, z: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        match self {
            ClosedForm::Identity => z,
            ClosedForm::Koebe => z / ((one - z) * (one - z)),
            ClosedForm::HalfPlane => z / (one - z),
            ClosedForm::OddHalfPlane => z / (one - z * z),
            ClosedForm::Rotated(f, c) => c.conj() * f.value(c * z),
        }
    }
}

impl CoefficientSource for ClosedForm {
    fn coefficient(&self, k: usize) -> Option<Complex64> {
        if k == 0 {
            return None;
        }
        let real = |x: f64| Some(Complex64::new(x, 0.0));
        match self {
            ClosedForm::Identity => real(if k == 1 { 1.0 } else { 0.0 }),
            ClosedForm::Koebe => real(k as f64),
            ClosedForm::HalfPlane => real(1.0),
            ClosedForm::OddHalfPlane => real(if k % 2 == 1 { 1.0 } else { 0.0 }),
            ClosedForm::Rotated(f, c) => f.coefficient(k).map(|a| a * c.powu(k as u32 - 1)),
        }
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

const GOLDEN: f64 = 0.618_033_988_749_894_9;

/// `max_{|z|=r} |f(z)|` over `samples` equally spaced points, refined by a
/// golden-section search around the discrete maximizer.
pub fn max_modulus<F: Analytic + ?Sized>(f: &F, r: f64, samples: usize) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Domain(format!("radius {r} must lie in (0, 1)")));
    }
    let samples = samples.max(3);
    let h = TAU / samples as f64;
    let at = |theta: f64| f.value(Complex64::from_polar(r, theta)).norm();
    let (best_k, mut best) = (0..samples)
        .map(|k| (k, at(h * k as f64)))
        .fold((0, f64::NEG_INFINITY), |acc, (k, v)| if v > acc.1 { (k, v) } else { acc });

    let (mut lo, mut hi) = (h * best_k as f64 - h, h * best_k as f64 + h);
    let mut x1 = hi - GOLDEN * (hi - lo);
    let mut x2 = lo + GOLDEN * (hi - lo);
    let (mut f1, mut f2) = (at(x1), at(x2));
    for _ in 0..60 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + GOLDEN * (hi - lo);
            f2 = at(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - GOLDEN * (hi - lo);
            f1 = at(x1);
        }
    }
    best = best.max(f1).max(f2);
    Ok(best)
}

/// Angular resolution used by [`hayman_index`].
pub const HAYMAN_SAMPLES: usize = 360;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HaymanEstimate {
    pub alpha_hat: f64,
    pub radii: Vec<f64>,
    pub values: Vec<f64>,
}

/// `(1−r_j)² M∞(r_j, f)` for `r_j = 1 − 2^{−j}`, `j = 1..=levels`; the estimate is the last value.
pub fn hayman_index<F: Analytic + ?Sized>(f: &F, levels: usize) -> Result<HaymanEstimate> {
    if levels == 0 {
        return Err(invalid("at least one radius is required"));
    }
    let mut radii = Vec::with_capacity(levels);
    let mut values = Vec::with_capacity(levels);
    for j in 1..=levels {
        let gap = 0.5f64.powi(j as i32);
        let r = 1.0 - gap;
        radii.push(r);
        values.push(gap * gap * max_modulus(f, r, HAYMAN_SAMPLES)?);
    }
    Ok(HaymanEstimate {
        alpha_hat: *values.last().expect("levels ≥ 1"),
        radii,
        values,
    })
}

/// Paths `(m, n) → (∞, ∞)` used as a finite proxy for unconditional convergence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanPath {
    /// `m = n`
    Diagonal,
    /// `m = 2n`
    Double,
    /// `m = n + 5`
    Offset,
}

impl ScanPath {
    pub const ALL: [ScanPath; 3] = [ScanPath::Diagonal, ScanPath::Double, ScanPath::Offset];

    pub fn pair(self, n: usize) -> (usize, usize) {
        match self {
            ScanPath::Diagonal => (n, n),
            ScanPath::Double => (2 * n, n),
            ScanPath::Offset => (n + 5, n),
        }
    }

    pub fn pairs(self, ns: impl IntoIterator<Item = usize>) -> Vec<(usize, usize)> {
        ns.into_iter().map(|n| self.pair(n)).collect()
    }

    pub fn name(self) -> &'static str {
        match self {
            ScanPath::Diagonal => "diagonal",
            ScanPath::Double => "double",
            ScanPath::Offset => "offset",
        }
    }
}

/// `|λmn − m − n + 1|`, the Koebe value of `|Φ|`.
pub fn koebe_value(lambda: Complex64, m: usize, n: usize) -> f64 {
    (lambda * (m * n) as f64 - (m + n - 1) as f64).norm()
}

/// Ratios `|λ a_m a_n − a_{m+n−1}| / |λmn − m − n + 1|` for each pair.
pub fn ratio_convergence<F: CoefficientSource + ?Sized>(
    f: &F,
    lambda: Complex64,
    pairs: &[(usize, usize)],
) -> Result<Vec<f64>> {
    pairs
        .iter()
        .map(|&(m, n)| {
            if m < 1 || n < 1 {
                return Err(invalid(format!("indices must be positive (got m={m}, n={n})")));
            }
            let denom = koebe_value(lambda, m, n);
            let scale = lambda.norm() * (m * n) as f64 + (m + n) as f64;
            if denom <= 1e-14 * scale {
                return Err(Error::ExcludedPair { m, n });
            }
            let coeff = |k: usize| {
                f.coefficient(k).ok_or(Error::InsufficientTruncation {
                    needed: m + n - 1,
                    available: k - 1,
                })
            };
            let num = (lambda * coeff(m)? * coeff(n)? - coeff(m + n - 1)?).norm();
            Ok(num / denom)
        })
        .collect()
}

/// First index `i` in `ns` such that `|λ a_m a_n − a_{m+n−1}| ≤ (1−δ)|λmn − m − n + 1|`
/// holds for every pair of `path` from `ns[i]` on; `None` if it fails at the last one.
pub fn corollary_witness<F: CoefficientSource + ?Sized>(
    f: &F,
    lambda: Complex64,
    delta: f64,
    path: ScanPath,
    ns: &[usize],
) -> Result<Option<(usize, usize)>> {
    if !(0.0..1.0).contains(&delta) {
        return Err(invalid(format!("delta {delta} must lie in [0, 1)")));
    }
    let pairs = path.pairs(ns.iter().copied());
    let ratios = ratio_convergence(f, lambda, &pairs)?;
    let start = ratios.iter().rposition(|&r| r > 1.0 - delta).map_or(0, |i| i + 1);
    Ok(pairs.get(start).copied())
}

/// Grids for the four-statement audit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditGrids {
    /// Values of `t ∈ [0, 1]`; must include `1`.
    pub t: Vec<f64>,
    /// Values of `r ≥ 0`; must include `0`.
    pub r: Vec<f64>,
    /// Radii of the circles `|w − 1| = ρ`.
    pub w_radii: Vec<f64>,
    pub w_angles: usize,
    /// Additional points, e.g. negative reals.
    pub w_extra: Vec<Complex64>,
}

impl Default for AuditGrids {
    fn default() -> Self {
        Self {
            t: (0..=10).map(|k| k as f64 / 10.0).collect(),
            r: vec![0.0, 0.25, 0.5, 1.0, 2.0, 5.0],
            w_radii: vec![0.0, 0.5, 1.0],
            w_angles: 16,
            w_extra: vec![Complex64::new(-1.0, 0.0), Complex64::new(-5.0, 0.0)],
        }
    }
}

impl AuditGrids {
    /// The `w` grid for a given pair: circles, extras, every `t` (as a real `w`) and,
    /// for each `r` in the `r` grid, the two points `1 ∓ r e^{i(arg A − arg B)}` with
    /// `A = a_n² − a_{2n−1}`, `B = a_{2n−1}`.
    pub fn w_points(&self, a_n: Complex64, a_2n1: Complex64) -> Vec<Complex64> {
        let one = Complex64::new(1.0, 0.0);
        let mut out = Vec::new();
        for &rho in &self.w_radii {
            if rho == 0.0 {
                out.push(one);
                continue;
            }
            for k in 0..self.w_angles.max(1) {
                out.push(one + Complex64::from_polar(rho, TAU * k as f64 / self.w_angles.max(1) as f64));
            }
        }
        out.extend(self.w_extra.iter().copied());
        out.extend(self.t.iter().map(|&t| Complex64::new(t, 0.0)));
        let a = a_n * a_n - a_2n1;
        if a.norm() > 0.0 && a_2n1.norm() > 0.0 {
            let dir = Complex64::from_polar(1.0, a.arg() - a_2n1.arg());
            for &r in &self.r {
                out.push(one - dir * r);
                out.push(one + dir * r);
            }
        }
        out
    }
}

/// The four statement-booleans of the audit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditOutcome {
    /// `|a_n² − a_{2n−1}| ≤ (n−1)²`
    pub a: bool,
    /// `|a_n² − t a_{2n−1}| ≤ n² − t(2n−1)` on the `t` grid
    pub b: bool,
    /// `|a_n² − a_{2n−1}| + r|a_{2n−1}| ≤ (n−1)² + r(2n−1)` on the `r` grid
    pub c: bool,
    /// `|a_n² − w a_{2n−1}| ≤ (n−1)² + |w−1|(2n−1)` on the `w` grid
    pub d: bool,
    /// Whether (a) holds with equality (to rounding).
    pub a_equality: bool,
}

impl AuditOutcome {
    pub fn agree(&self) -> bool {
        self.a == self.b && self.b == self.c && self.c == self.d
    }
}

/// Evaluates the four equivalent statements for one coefficient pair.
///
/// Requires `|a_{2n−1}| ≤ 2n − 1`.
pub fn zalcman_equivalence_audit(
    a_n: Complex64,
    a_2n1: Complex64,
    n: usize,
    grids: &AuditGrids,
) -> Result<AuditOutcome> {
    if n < 2 {
        return Err(invalid("n must be at least 2"));
    }
    let nf = n as f64;
    let odd = 2.0 * nf - 1.0;
    if a_2n1.norm() > odd * (1.0 + 1e-12) {
        return Err(Error::HypothesisViolated(format!(
            "|a_{{2n−1}}| = {} exceeds 2n − 1 = {odd}",
            a_2n1.norm()
        )));
    }
    let tol = 1e-12 * nf * nf;
    let sq = a_n * a_n;
    let base = (nf - 1.0) * (nf - 1.0);
    let zalcman = (sq - a_2n1).norm();

    let a = zalcman <= base + tol;
    let b = grids
        .t
        .iter()
        .all(|&t| (sq - a_2n1 * t).norm() <= nf * nf - t * odd + tol);
    let c = grids
        .r
        .iter()
        .all(|&r| zalcman + r * a_2n1.norm() <= base + r * odd + tol);
    let one = Complex64::new(1.0, 0.0);
    let d = grids
        .w_points(a_n, a_2n1)
        .into_iter()
        .all(|w| (sq - w * a_2n1).norm() <= base + (w - one).norm() * odd + tol);
    Ok(AuditOutcome {
        a,
        b,
        c,
        d,
        a_equality: (zalcman - base).abs() <= tol,
    })
}

/// Weak forms of Zalcman's inequality.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Predicate {
    /// `|a_n² − t a_{2n−1}| ≤ n² − t(2n−1)`
    B(f64),
    /// `|a_n² − a_{2n−1}| + r|a_{2n−1}| ≤ (n−1)² + r(2n−1)`
    C(f64),
    /// `|a_n² − w a_{2n−1}| ≤ (n−1)² + r(2n−1)` for all `|w − 1| = r`
    D(f64),
}

/// Angles sampled on the circle `|w − 1| = r` for `(D_r)`, in addition to the critical point.
pub const D_ANGLES: usize = 64;

impl Predicate {
    pub fn parse(name: &str, param: f64) -> Result<Self> {
        let p = match name {
            "B" | "b" => Predicate::B(param),
            "C" | "c" => Predicate::C(param),
            "D" | "d" => Predicate::D(param),
            other => return Err(invalid(format!("unknown predicate '{other}' (expected B, C or D)"))),
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Predicate::B(t) if !(0.0..=1.0).contains(&t) => Err(invalid(format!("t = {t} outside [0, 1]"))),
            Predicate::C(r) | Predicate::D(r) if !(r >= 0.0 && r.is_finite()) => {
                Err(invalid(format!("r = {r} must be nonnegative")))
            }
            _ => Ok(()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Predicate::B(_) => "B",
            Predicate::C(_) => "C",
            Predicate::D(_) => "D",
        }
    }

    pub fn param(&self) -> f64 {
        match *self {
            Predicate::B(x) | Predicate::C(x) | Predicate::D(x) => x,
        }
    }

    /// `RHS − LHS` for the coefficient pair `(a_n, a_{2n−1})`.
    pub fn slack(&self, a_n: Complex64, a_2n1: Complex64, n: usize) -> f64 {
        let nf = n as f64;
        let odd = 2.0 * nf - 1.0;
        let sq = a_n * a_n;
        let base = (nf - 1.0) * (nf - 1.0);
        match *self {
            Predicate::B(t) => nf * nf - t * odd - (sq - a_2n1 * t).norm(),
            Predicate::C(r) => base + r * odd - (sq - a_2n1).norm() - r * a_2n1.norm(),
            Predicate::D(r) => {
                let one = Complex64::new(1.0, 0.0);
                let mut ws: Vec<Complex64> = (0..D_ANGLES)
                    .map(|k| one + Complex64::from_polar(r, TAU * k as f64 / D_ANGLES as f64))
                    .collect();
                let a = sq - a_2n1;
                if a.norm() > 0.0 && a_2n1.norm() > 0.0 {
                    ws.push(one - Complex64::from_polar(r, a.arg() - a_2n1.arg()));
                }
                ws.into_iter()
                    .map(|w| base + r * odd - (sq - w * a_2n1).norm())
                    .fold(f64::INFINITY, f64::min)
            }
        }
    }
}

/// Parameters `t ∈ [0, 1]`, `r ≥ 0` and `w` of the weak forms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConjectureParams {
    pub t: f64,
    pub r: f64,
    pub w: Complex64,
}

impl ConjectureParams {
    pub fn new(t: f64, r: f64, w: Complex64) -> Result<Self> {
        Predicate::B(t).validate()?;
        Predicate::C(r).validate()?;
        Ok(Self { t, r, w })
    }

    /// `(B_t)`, `(C_r)` and `(D_r)`.
    pub fn predicates(&self) -> [Predicate; 3] {
        [Predicate::B(self.t), Predicate::C(self.r), Predicate::D(self.r)]
    }

    /// Slack of `|a_n² − w a_{2n−1}| ≤ (n−1)² + |w−1|(2n−1)` at this single `w`.
    pub fn w_slack(&self, a_n: Complex64, a_2n1: Complex64, n: usize) -> f64 {
        let nf = n as f64;
        let dist = (self.w - Complex64::new(1.0, 0.0)).norm();
        (nf - 1.0) * (nf - 1.0) + dist * (2.0 * nf - 1.0) - (a_n * a_n - self.w * a_2n1).norm()
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.name(), self.param())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub predicate: Predicate,
    pub n: usize,
    pub sample_index: usize,
    pub slack: f64,
    pub violated: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
    pub min_slack: f64,
    /// First row with the smallest slack among violations, if any.
    pub witness: Option<ScanRow>,
}

/// Evaluates `predicate` on every sample and every `n` in `ns`.
///
/// Rows are ordered by `(sample_index, n)`. A row counts as a violation when its
/// slack is below `−1e−9·max(1, n²)`.
pub fn conjecture_scan(samples: &[TruncatedSeries], predicate: Predicate, ns: &[usize]) -> Result<ScanReport> {
    predicate.validate()?;
    let mut rows = Vec::with_capacity(samples.len() * ns.len());
    for (i, f) in samples.iter().enumerate() {
        for &n in ns {
            if n < 2 {
                return Err(invalid("n must be at least 2"));
            }
            f.require_order(2 * n - 1)?;
            let slack = predicate.slack(f.coeff(n), f.coeff(2 * n - 1), n);
            let tol = 1e-9 * ((n * n) as f64).max(1.0);
            rows.push(ScanRow {
                predicate,
                n,
                sample_index: i,
                slack,
                violated: slack < -tol,
            });
        }
    }
    let min_slack = rows.iter().map(|r| r.slack).fold(f64::INFINITY, f64::min);
    let witness = rows
        .iter()
        .filter(|r| r.violated)
        .fold(None::<ScanRow>, |acc, r| match acc {
            Some(a) if a.slack <= r.slack => Some(a),
            _ => Some(*r),
        });
    Ok(ScanReport {
        rows,
        min_slack,
        witness,
    })
}

/// `n² + t(C−1)(2n−1) ≤ C n²`, the step that upgrades `|a_n| ≤ Cn` to `|a_n| ≤ √C n`.
pub fn step_inequality(n: usize, t: f64, c: f64) -> bool {
    let nf = n as f64;
    nf * nf + t * (c - 1.0) * (2.0 * nf - 1.0) <= c * nf * nf
}

/// Largest `n` at which [`bieberbach_iterate`] validates the step inequality.
pub const STEP_CHECK_MAX_N: usize = 64;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BieberbachIteration {
    /// `C0^{2^{−j}}` for `j = 0..=k`.
    pub sequence: Vec<f64>,
    /// Whether the step inequality held for every iterate and `n = 2..=64`.
    pub steps_valid: bool,
}

impl BieberbachIteration {
    /// First `j` with `C0^{2^{−j}} < level`.
    pub fn first_below(&self, level: f64) -> Option<usize> {
        self.sequence.iter().position(|&c| c < level)
    }
}

/// The sequence `C0, √C0, C0^{1/4}, …` of `k + 1` terms.
pub fn bieberbach_iterate(c0: f64, t: f64, k: usize) -> Result<BieberbachIteration> {
    if !(c0 > 1.0 && c0.is_finite()) {
        return Err(invalid(format!("starting constant {c0} must exceed 1")));
    }
    if !(t > 0.0 && t <= 1.0) {
        return Err(invalid(format!("t = {t} must lie in (0, 1]")));
    }
    let mut sequence = Vec::with_capacity(k + 1);
    let mut c = c0;
    for _ in 0..=k {
        sequence.push(c);
        c = c.sqrt();
    }
    let steps_valid = sequence
        .iter()
        .all(|&c| (2..=STEP_CHECK_MAX_N).all(|n| step_inequality(n, t, c)));
    Ok(BieberbachIteration { sequence, steps_valid })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn max_modulus_examples() {
        assert!((max_modulus(&ClosedForm::Koebe, 0.5, 64).unwrap() - 2.0).abs() < 1e-12);
        assert!((max_modulus(&ClosedForm::Identity, 0.3, 64).unwrap() - 0.3).abs() < 1e-15);
        assert!((max_modulus(&ClosedForm::HalfPlane, 0.9, 64).unwrap() - 9.0).abs() < 1e-9);
        assert!(max_modulus(&ClosedForm::Koebe, 1.0, 64).is_err());
    }

    #[test]
    fn max_modulus_refines_off_grid_maximum() {
        // Koebe rotated so that its maximum sits between grid points
        let c = Complex64::from_polar(1.0, 0.1234);
        let f = ClosedForm::Koebe.rotated(c).unwrap();
        let v = max_modulus(&f, 0.5, 7).unwrap();
        assert!((v - 2.0).abs() < 1e-9, "{v}");
    }

    #[test]
    fn max_modulus_on_series() {
        let f = TruncatedSeries::koebe(60);
        assert!((max_modulus(&f, 0.5, 32).unwrap() - 2.0).abs() < 1e-6);
    }

    #[test]
    fn hayman_examples() {
        let k = hayman_index(&ClosedForm::Koebe, 20).unwrap();
        for (r, v) in k.radii.iter().zip(&k.values) {
            assert!((v - r).abs() < 1e-9);
        }
        assert!(k.values.windows(2).all(|w| w[1] > w[0]));
        assert!(hayman_index(&ClosedForm::Identity, 20).unwrap().alpha_hat < 1e-11);
        let odd = hayman_index(&ClosedForm::OddHalfPlane, 20).unwrap();
        let r = odd.radii[19];
        assert!((odd.alpha_hat - r * (1.0 - r) / (1.0 + r)).abs() < 1e-12);
    }

    #[test]
    fn ratio_examples() {
        let r = ratio_convergence(&ClosedForm::Koebe, re(2.0), &[(100, 100)]).unwrap();
        assert_eq!(r, vec![1.0]);
        let r = ratio_convergence(&ClosedForm::OddHalfPlane, re(1.0), &[(200, 200)]).unwrap();
        assert!((r[0] - 1.0 / 39601.0).abs() < 1e-18);
        let r = ratio_convergence(&ClosedForm::Identity, Complex64::new(0.3, 2.0), &[(3, 7), (10, 10)]).unwrap();
        assert_eq!(r, vec![0.0, 0.0]);
    }

    #[test]
    fn vanishing_denominator_names_pair() {
        let r = ratio_convergence(&ClosedForm::Koebe, re(0.75), &[(3, 3), (2, 2)]);
        assert_eq!(r, Err(Error::ExcludedPair { m: 2, n: 2 }));
    }

    #[test]
    fn ratio_needs_coefficients() {
        let f = TruncatedSeries::koebe(5);
        assert!(matches!(
            ratio_convergence(&f, re(1.0), &[(3, 4)]),
            Err(Error::InsufficientTruncation { .. })
        ));
    }

    #[test]
    fn corollary_witness_for_odd_half_plane() {
        let ns: Vec<usize> = (2..=60).collect();
        let w = corollary_witness(&ClosedForm::OddHalfPlane, re(1.0), 0.5, ScanPath::Diagonal, &ns).unwrap();
        let (m, n) = w.expect("ratios decay to zero");
        assert_eq!(m, n);
        // Koebe never gets strictly below the Koebe value
        let w = corollary_witness(&ClosedForm::Koebe, re(1.0), 0.1, ScanPath::Diagonal, &ns).unwrap();
        assert_eq!(w, None);
    }

    #[test]
    fn audit_examples() {
        let grids = AuditGrids::default();
        let out = zalcman_equivalence_audit(re(5.0), re(9.0), 5, &grids).unwrap();
        assert!(out.a && out.b && out.c && out.d && out.a_equality);
        let out = zalcman_equivalence_audit(re(0.0), re(0.0), 4, &grids).unwrap();
        assert!(out.a && out.b && out.c && out.d);
        let err = zalcman_equivalence_audit(re(0.0), re(10.0), 5, &grids);
        assert!(matches!(err, Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn audit_failure_propagates_to_every_statement() {
        // |a_n² − a_{2n−1}| = 25 + 9 > 16
        let out = zalcman_equivalence_audit(re(5.0), re(-9.0), 5, &AuditGrids::default()).unwrap();
        assert!(!out.a && !out.b && !out.c && !out.d);
    }

    #[test]
    fn predicates() {
        assert!(Predicate::parse("B", 1.5).is_err());
        assert!(Predicate::parse("Q", 0.5).is_err());
        // Koebe pair attains (B_t) with equality for every t
        for t in [0.0, 0.3, 1.0] {
            assert!(Predicate::B(t).slack(re(4.0), re(7.0), 4).abs() < 1e-12);
        }
        assert!(Predicate::C(1.0).slack(re(0.0), re(0.0), 3) > 0.0);
        assert!(Predicate::D(0.5).slack(re(3.0), re(5.0), 3).abs() < 1e-12);
    }

    #[test]
    fn conjecture_params() {
        assert!(ConjectureParams::new(1.5, 0.0, re(0.0)).is_err());
        assert!(ConjectureParams::new(0.5, -1.0, re(0.0)).is_err());
        let p = ConjectureParams::new(0.5, 2.0, re(-1.0)).unwrap();
        assert_eq!(p.predicates()[2], Predicate::D(2.0));
        // negative reals satisfy (d) for the Koebe pair with equality
        assert!(p.w_slack(re(3.0), re(5.0), 3).abs() < 1e-12);
    }

    #[test]
    fn scan_orders_rows_and_flags_violations() {
        let samples = vec![TruncatedSeries::koebe(9), TruncatedSeries::identity(9)];
        let rep = conjecture_scan(&samples, Predicate::B(0.0), &[2, 3, 4, 5]).unwrap();
        assert_eq!(rep.rows.len(), 8);
        assert_eq!(rep.rows[4].sample_index, 1);
        assert!(rep.witness.is_none());

        let bad = TruncatedSeries::normalized_from_fn(5, |k| re(if k == 3 { -5.0 } else { 2.0 }));
        let rep = conjecture_scan(&[bad], Predicate::B(1.0), &[2]).unwrap();
        assert!(rep.witness.is_some());
        assert!(rep.min_slack < 0.0);
    }

    #[test]
    fn bieberbach_examples() {
        let it = bieberbach_iterate(E, 1.0, 10).unwrap();
        assert!((it.sequence[1] - 1.648_721_270_700_128).abs() < 1e-12);
        assert!(it.steps_valid);
        let long = bieberbach_iterate(E, 1.0, 40).unwrap();
        assert!((long.sequence[40] - 1.0).abs() < 1e-11);
        assert!(bieberbach_iterate(1.0, 1.0, 3).is_err());
        assert!(step_inequality(2, 1.0, E));
        let lhs = 4.0 + (E - 1.0) * 3.0;
        assert!((lhs - 9.154_845_485).abs() < 1e-8 && lhs <= 4.0 * E);
    }
}
