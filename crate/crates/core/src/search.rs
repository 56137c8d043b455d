//! Derivative-free maximization of `|Φ|` over a class's parametrization.
//!
//! Herglotz-parametrized classes are searched over atomic measures with
//! `J = max(8, m+n−2)` atoms (weights on the probability simplex, positions on
//! the circle). The Hurwitz class is searched over weight/phase vectors with
//! `a_k = e^{iφ_k} w_k / k`, weights constrained to `w ≥ 0, ∑ w ≤ 1`.
//!
//! The optimizer is a cyclic coordinate search: each coordinate is moved by
//! `±step`, projected back onto the feasible set, and the move is kept if it
//! strictly improves the objective. A sweep without improvement shrinks the step.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::classes::{Branch, ClassSpec};
use crate::error::{invalid, Error, Result};
use crate::functional::{sharp_bound, zalcman, FunctionalSpec};
use crate::herglotz::{sample_measure, Atom, HerglotzMeasure};
use crate::rng::stream;
use crate::series::TruncatedSeries;

const GAP_STOP: f64 = 1e-8;
const STEP_STOP: f64 = 1e-10;
const PROBE_COUNT: u64 = 32;
const PROBE_SEED: u64 = 0x5eed_0f3c;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub restarts: usize,
    /// Maximum number of coordinate sweeps per restart.
    pub max_iterations: usize,
    pub initial_step: f64,
    pub decay: f64,
    pub seed: u64,
    /// Known optimum; a restart stops once it is within `1e−8`.
    pub target: Option<f64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            restarts: 20,
            max_iterations: 20_000,
            initial_step: 0.25,
            decay: 0.5,
            seed: 0,
            target: None,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.restarts == 0 || self.max_iterations == 0 {
            return Err(invalid("restarts and max_iterations must be positive"));
        }
        if !(self.decay > 0.0 && self.decay < 1.0) {
            return Err(invalid(format!("decay {} must lie in (0, 1)", self.decay)));
        }
        if self.initial_step.is_nan() || self.initial_step <= 0.0 {
            return Err(invalid("initial step must be positive"));
        }
        Ok(())
    }
}

/// Parameters of a class member.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SearchParams {
    Measure(HerglotzMeasure),
    /// Weights and phases for `a_2..a_N`.
    Hurwitz { weights: Vec<f64>, phases: Vec<f64> },
}

impl SearchParams {
    /// Truncated series of the parametrized member.
    pub fn to_series(&self, class: &ClassSpec, order: usize) -> Result<TruncatedSeries> {
        match (self, class) {
            (SearchParams::Hurwitz { weights, phases }, ClassSpec::Hurwitz) => {
                if weights.len() != phases.len() {
                    return Err(invalid("weights and phases differ in length"));
                }
                Ok(TruncatedSeries::normalized_from_fn(order, |k| {
                    weights
                        .get(k - 2)
                        .map(|&w| Complex64::from_polar(w / k as f64, phases[k - 2]))
                        .unwrap_or_default()
                }))
            }
            (SearchParams::Measure(mu), c) if c.is_herglotz_parametrized() => c.from_measure(mu, order),
            _ => Err(invalid(format!("parameters do not match class {class}"))),
        }
    }

    /// Parameters of the closed-form extremal with unit phases.
    pub fn extremal(class: &ClassSpec, m: usize, n: usize, branch: Branch) -> Result<Self> {
        let spec = FunctionalSpec::real(0.0, m, n)?;
        match class {
            ClassSpec::Hurwitz => {
                let len = spec.default_order() - 1;
                let mut weights = vec![0.0; len];
                match branch {
                    Branch::Generic if m == n => weights[n - 2] = 1.0,
                    Branch::Generic => {
                        weights[m - 2] = 0.5;
                        weights[n - 2] = 0.5;
                    }
                    Branch::Resonant => weights[spec.top() - 2] = 1.0,
                }
                Ok(SearchParams::Hurwitz {
                    weights,
                    phases: vec![0.0; len],
                })
            }
            ClassSpec::KoebeFamily => Err(Error::Unsupported("the Koebe family is not searched".into())),
            _ => Ok(SearchParams::Measure(match branch {
                Branch::Generic => HerglotzMeasure::point_mass(0.0),
                Branch::Resonant => HerglotzMeasure::roots_of_unity(m + n - 2)?,
            })),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub best_value: f64,
    pub bound: f64,
    pub gap: f64,
    pub params: SearchParams,
    pub restarts_used: usize,
    pub seed: u64,
    pub iterations: usize,
}

/// Objective in flat coordinates.
struct Problem {
    class: ClassSpec,
    spec: FunctionalSpec,
    kind: Kind,
    /// Class factors `c_m, c_n, c_{m+n−1}` (Herglotz classes only).
    factors: [f64; 3],
}

#[derive(Clone, Copy)]
enum Kind {
    /// `[w_1..w_J, θ_1..θ_J]`
    Herglotz { atoms: usize },
    /// `[w_2..w_N, φ_2..φ_N]`
    Hurwitz { slots: usize },
}

impl Problem {
    fn new(class: &ClassSpec, spec: &FunctionalSpec) -> Result<Self> {
        class.validate()?;
        let kind = match class {
            ClassSpec::KoebeFamily => {
                return Err(Error::Unsupported("the Koebe family is not searched".into()))
            }
            ClassSpec::Hurwitz => Kind::Hurwitz {
                slots: spec.default_order() - 1,
            },
            _ => Kind::Herglotz {
                atoms: 8.max(spec.m + spec.n - 2),
            },
        };
        let factors = if class.is_herglotz_parametrized() {
            [
                class.coefficient_factor(spec.m)?,
                class.coefficient_factor(spec.n)?,
                class.coefficient_factor(spec.top())?,
            ]
        } else {
            [0.0; 3]
        };
        Ok(Self {
            class: *class,
            spec: *spec,
            kind,
            factors,
        })
    }

    fn half(&self) -> usize {
        match self.kind {
            Kind::Herglotz { atoms } => atoms,
            Kind::Hurwitz { slots } => slots,
        }
    }

    fn dim(&self) -> usize {
        2 * self.half()
    }

    fn objective(&self, x: &[f64]) -> f64 {
        let h = self.half();
        let (w, th) = x.split_at(h);
        let FunctionalSpec { lambda, m, n } = self.spec;
        let top = self.spec.top();
        let (am, an, at) = match self.kind {
            Kind::Herglotz { .. } => {
                let p = |k: usize| -> Complex64 {
                    w.iter()
                        .zip(th)
                        .map(|(&wj, &tj)| Complex64::from_polar(wj, tj * k as f64))
                        .sum::<Complex64>()
                        * 2.0
                };
                (
                    p(m - 1) * self.factors[0],
                    p(n - 1) * self.factors[1],
                    p(top - 1) * self.factors[2],
                )
            }
            Kind::Hurwitz { .. } => {
                let a = |k: usize| Complex64::from_polar(w[k - 2] / k as f64, th[k - 2]);
                (a(m), a(n), a(top))
            }
        };
        (lambda * am * an - at).norm()
    }

    fn project(&self, x: &mut [f64]) {
        let h = self.half();
        let (w, th) = x.split_at_mut(h);
        match self.kind {
            Kind::Herglotz { .. } => project_simplex(w, 1.0),
            Kind::Hurwitz { .. } => project_budget(w, 1.0),
        }
        for t in th {
            *t = t.rem_euclid(TAU);
        }
    }

    fn random_point<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        let h = self.half();
        let mut x = Vec::with_capacity(2 * h);
        match self.kind {
            Kind::Herglotz { atoms } => {
                let mu = sample_measure(atoms, rng).expect("atom count is positive");
                x.extend(mu.atoms().iter().map(|a| a.w));
                x.extend(mu.atoms().iter().map(|a| a.theta));
            }
            Kind::Hurwitz { slots } => {
                let raw: Vec<f64> = (0..slots).map(|_| 1.0 - rng.random::<f64>()).collect();
                let total: f64 = raw.iter().sum();
                let scale: f64 = rng.random();
                x.extend(raw.iter().map(|r| r / total * scale));
                x.extend((0..slots).map(|_| rng.random_range(0.0..TAU)));
            }
        }
        x
    }

    fn params(&self, x: &[f64]) -> SearchParams {
        let (w, th) = x.split_at(self.half());
        match self.kind {
            Kind::Herglotz { .. } => SearchParams::Measure(
                HerglotzMeasure::from_unnormalized(
                    w.iter().zip(th).map(|(&w, &theta)| Atom { w, theta }).collect(),
                )
                .expect("projected weights lie on the simplex"),
            ),
            Kind::Hurwitz { .. } => SearchParams::Hurwitz {
                weights: w.to_vec(),
                phases: th.to_vec(),
            },
        }
    }

    fn flatten(&self, params: &SearchParams) -> Result<Vec<f64>> {
        match (params, self.kind) {
            (SearchParams::Measure(mu), Kind::Herglotz { .. }) => {
                let mut x: Vec<f64> = mu.atoms().iter().map(|a| a.w).collect();
                x.extend(mu.atoms().iter().map(|a| a.theta));
                Ok(x)
            }
            (SearchParams::Hurwitz { weights, phases }, Kind::Hurwitz { slots }) => {
                if weights.len() != slots || phases.len() != slots {
                    return Err(invalid(format!("Hurwitz parameters need {slots} weights and phases")));
                }
                let mut x = weights.clone();
                x.extend_from_slice(phases);
                Ok(x)
            }
            _ => Err(invalid(format!("parameters do not match class {}", self.class))),
        }
    }

    /// One coordinate-search run from `x`; returns the final value and sweep count.
    fn climb(&self, x: &mut [f64], cfg: &SearchConfig) -> (f64, usize) {
        let h = self.half();
        let mut best = self.objective(x);
        let mut step = cfg.initial_step;
        let mut sweeps = 0;
        let mut trial = x.to_vec();
        while sweeps < cfg.max_iterations {
            sweeps += 1;
            let mut improved = false;
            for i in 0..self.dim() {
                // angles move on the scale of π, weights on the scale of 1
                let delta = if i < h { step } else { step * PI };
                for dir in [1.0, -1.0] {
                    trial.copy_from_slice(x);
                    trial[i] += dir * delta;
                    self.project(&mut trial);
                    let v = self.objective(&trial);
                    if v > best {
                        best = v;
                        x.copy_from_slice(&trial);
                        improved = true;
                        break;
                    }
                }
            }
            if cfg.target.is_some_and(|t| t - best <= GAP_STOP) {
                break;
            }
            if !improved {
                step *= cfg.decay;
                if step < STEP_STOP {
                    break;
                }
            }
        }
        (best, sweeps)
    }
}

/// Maximizes `|Φ|` over the class from `cfg.restarts` random starts.
///
/// Restart `r` draws its start from stream `r` of `cfg.seed`. The first restart
/// reaching the best value (up to rounding) wins.
pub fn maximize_functional(class: &ClassSpec, spec: &FunctionalSpec, cfg: &SearchConfig) -> Result<SearchResult> {
    cfg.validate()?;
    let problem = Problem::new(class, spec)?;
    let bound = sharp_bound(class, spec)?;

    let mut best: Option<(f64, Vec<f64>)> = None;
    let mut restarts_used = 0;
    let mut iterations = 0;
    for r in 0..cfg.restarts {
        restarts_used += 1;
        let mut rng = stream(cfg.seed, r as u64);
        let mut x = problem.random_point(&mut rng);
        problem.project(&mut x);
        let (value, sweeps) = problem.climb(&mut x, cfg);
        iterations += sweeps;
        let better = match &best {
            None => true,
            Some((b, _)) => value > *b + 4.0 * f64::EPSILON * b.abs().max(1.0),
        };
        if better {
            best = Some((value, x));
        }
        if cfg.target.is_some_and(|t| t - best.as_ref().map_or(0.0, |b| b.0) <= GAP_STOP) {
            break;
        }
    }
    let (best_value, x) = best.expect("at least one restart runs");
    Ok(SearchResult {
        best_value,
        bound,
        gap: bound - best_value,
        params: problem.params(&x),
        restarts_used,
        seed: cfg.seed,
        iterations,
    })
}

/// Largest `|Φ|` over 32 fixed random perturbations of size `eps` around `params`.
///
/// A perturbation mixes the parameters with a random feasible point,
/// `(1−ε)·x + ε·u`, and jitters every angle by at most `επ`; the result is
/// feasible by convexity. `eps = 0` reproduces the unperturbed value.
pub fn strictness_probe(class: &ClassSpec, spec: &FunctionalSpec, params: &SearchParams, eps: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&eps) {
        return Err(invalid(format!("perturbation size {eps} outside [0, 1]")));
    }
    let problem = Problem::new(class, spec)?;
    let base = problem.flatten(params)?;
    let h = problem.half();
    let mut worst = 0.0f64;
    for i in 0..PROBE_COUNT {
        let mut rng = stream(PROBE_SEED, i);
        let x = if eps == 0.0 {
            base.clone()
        } else {
            match problem.kind {
                Kind::Herglotz { .. } => {
                    let SearchParams::Measure(mu) = params else { unreachable!() };
                    let other = sample_measure(mu.len(), &mut rng)?;
                    let mixed = mu.mix(&other, eps)?;
                    let jittered: Vec<Atom> = mixed
                        .atoms()
                        .iter()
                        .map(|a| Atom {
                            w: a.w,
                            theta: a.theta + eps * PI * rng.random_range(-1.0..=1.0),
                        })
                        .collect();
                    let mu = HerglotzMeasure::from_unnormalized(jittered)?;
                    let mut x: Vec<f64> = mu.atoms().iter().map(|a| a.w).collect();
                    x.extend(mu.atoms().iter().map(|a| a.theta));
                    x
                }
                Kind::Hurwitz { .. } => {
                    let u = problem.random_point(&mut rng);
                    let mut x = base.clone();
                    for j in 0..h {
                        x[j] = (1.0 - eps) * base[j] + eps * u[j];
                        x[h + j] = base[h + j] + eps * PI * rng.random_range(-1.0..=1.0);
                    }
                    x
                }
            }
        };
        let value = match problem.kind {
            // mixed measures have more atoms than the search layout; evaluate directly
            Kind::Herglotz { .. } => {
                let (w, th) = x.split_at(x.len() / 2);
                let mu = HerglotzMeasure::from_unnormalized(
                    w.iter().zip(th).map(|(&w, &theta)| Atom { w, theta }).collect(),
                )?;
                let f = class.from_measure(&mu, spec.default_order())?;
                zalcman(&f, spec)?.norm()
            }
            Kind::Hurwitz { .. } => problem.objective(&x),
        };
        worst = worst.max(value);
    }
    Ok(worst)
}

/// Euclidean projection onto `{w ≥ 0, ∑ w = total}`.
pub fn project_simplex(w: &mut [f64], total: f64) {
    let mut sorted: Vec<f64> = w.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let mut cumulative = 0.0;
    let mut tau = 0.0;
    for (i, &u) in sorted.iter().enumerate() {
        cumulative += u;
        let t = (cumulative - total) / (i + 1) as f64;
        if u - t > 0.0 {
            tau = t;
        }
    }
    for x in w.iter_mut() {
        *x = (*x - tau).max(0.0);
    }
}

/// Euclidean projection onto `{w ≥ 0, ∑ w ≤ budget}`.
pub fn project_budget(w: &mut [f64], budget: f64) {
    for x in w.iter_mut() {
        *x = x.max(0.0);
    }
    if w.iter().sum::<f64>() > budget {
        project_simplex(w, budget);
    }
}
