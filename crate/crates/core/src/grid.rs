//! Parsing of `λ` grids, complex literals and index ranges.
//!
//! A grid string is either polar, `"r1,r2,... x K"` (every radius times `K`
//! equally spaced angles, radius `0` contributing a single point), or an
//! explicit comma-separated list of complex literals such as `"3,1-2i,0.5i"`.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::classes::ClassSpec;
use crate::error::{invalid, Result};
use crate::functional::critical_lambdas;

/// Default polar grid: 96 points.
pub const DEFAULT_LAMBDA_GRID: &str = "0,0.5,1,1.3333,2,10 x 16";

#[derive(Debug, Clone, PartialEq)]
pub enum LambdaGrid {
    Polar { radii: Vec<f64>, angles: usize },
    Explicit(Vec<Complex64>),
}

impl LambdaGrid {
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some((radii, angles)) = text.split_once(['x', 'X']) {
            let radii = radii
                .split(',')
                .map(|r| {
                    let r: f64 = r.trim().parse().map_err(|_| invalid(format!("bad radius '{r}'")))?;
                    if r < 0.0 || !r.is_finite() {
                        return Err(invalid(format!("radius {r} must be finite and nonnegative")));
                    }
                    Ok(r)
                })
                .collect::<Result<Vec<_>>>()?;
            let angles: usize = angles
                .trim()
                .parse()
                .map_err(|_| invalid(format!("bad angle count '{}'", angles.trim())))?;
            if angles == 0 {
                return Err(invalid("angle count must be positive"));
            }
            Ok(LambdaGrid::Polar { radii, angles })
        } else {
            let values = text.split(',').map(parse_complex).collect::<Result<Vec<_>>>()?;
            Ok(LambdaGrid::Explicit(values))
        }
    }

    /// Points of the grid itself.
    pub fn points(&self) -> Vec<Complex64> {
        match self {
            LambdaGrid::Explicit(v) => v.clone(),
            LambdaGrid::Polar { radii, angles } => {
                let mut out = Vec::new();
                for &r in radii {
                    if r == 0.0 {
                        out.push(Complex64::new(0.0, 0.0));
                        continue;
                    }
                    for k in 0..*angles {
                        out.push(Complex64::from_polar(r, TAU * k as f64 / *angles as f64));
                    }
                }
                out
            }
        }
    }

    /// Polar grids get the class's critical values appended; explicit lists are used as given.
    pub fn theorem_aware(&self, class: &ClassSpec, m: usize, n: usize) -> Result<Vec<Complex64>> {
        let mut pts = self.points();
        if matches!(self, LambdaGrid::Polar { .. }) {
            pts.extend(critical_lambdas(class, m, n)?);
        }
        Ok(pts)
    }
}

/// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i`.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || invalid(format!("bad complex literal '{text}'"));
    if s.is_empty() {
        return Err(err());
    }
    let Some(body) = s.strip_suffix(['i', 'j']) else {
        return s.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| err());
    };
    // split at the last sign that is not part of an exponent and not leading
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse::<f64>().map_err(|_| err())?,
    };
    let re = re.parse::<f64>().map_err(|_| err())?;
    Ok(Complex64::new(re, im))
}

/// Parses `"5"`, `"2..5"` (inclusive) or `"2,3,7"`.
pub fn parse_indices(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    let bad = || invalid(format!("bad index list '{text}'"));
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: usize = lo.trim().parse().map_err(|_| bad())?;
        let hi: usize = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        return Ok((lo..=hi).collect());
    }
    text.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect()
}
