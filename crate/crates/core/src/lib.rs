//! Numerical toolkit for the generalized Zalcman functional
//! `Φ(f) = λ·a_m·a_n − a_{m+n−1}`.
//!
//! The crate is organized bottom-up:
//!
//! * [`series`]: truncated complex power series, the carrier for every coefficient computation.
//! * [`herglotz`]: finite atomic probability measures on the unit circle and the
//!   Carathéodory coefficients they generate.
//! * [`classes`]: samplers, membership residuals and closed-form extremals for the
//!   Hurwitz, Noshiro-Warschawski, convex-hull and starlike-hull classes.
//! * [`functional`]: the functional itself, the sharp bounds in max-form and sum-form,
//!   and the max/sum equivalence check.
//! * [`search`]: derivative-free maximization of `|Φ|` over each class.
//! * [`asymptotics`]: Hayman index estimates, coefficient ratio limits, the
//!   Zalcman equivalence audit, weak-conjecture scans and the Bieberbach iteration.
//! * [`report`] and [`cli`]: CSV/JSON reports and the batch driver behind the `zalcman` binary.

pub mod asymptotics;
pub mod classes;
pub mod cli;
pub mod error;
pub mod functional;
pub mod grid;
pub mod herglotz;
pub mod report;
pub mod rng;
pub mod search;
pub mod series;

pub use num_complex::Complex64;

pub use classes::{Branch, ClassSpec, ClassTag, MembershipResidual};
pub use error::{Error, Result};
pub use functional::{BoundReport, EquivalenceInstance, FunctionalSpec};
pub use herglotz::{Atom, HerglotzMeasure};
pub use search::{SearchConfig, SearchParams, SearchResult};
pub use series::{PowerSeries, TruncatedSeries};
