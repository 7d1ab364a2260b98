//! Simulation and numerical-approximation toolkit for coalescing Brownian
//! (Arratia) flows and the random shift operator they induce on L2(R).
//!
//! The crate is organised around the objects the experiments need:
//!
//! - [`flow`] — finitely many coalescing Brownian particles, free Wiener
//!   families, and the analytic coalescence-time law.
//! - [`step`] — calculus of monotone right-continuous step functions:
//!   dual snapshots by monotone inversion, Lebesgue–Stieltjes sums,
//!   pushforward integrals.
//! - [`funcs`] — explicit function families (indicator combs, hat bases),
//!   closed-form Gaussian mollification, weighted Sobolev energies.
//! - [`shift`] — the shift operator acting through a realization's jump
//!   measure: images, essentiality events, kernel forms, Gram matrices.
//! - [`widths`] — Kolmogorov n-widths of a weighted Sobolev ellipsoid and
//!   of its images, via dense symmetric-definite generalized eigenproblems.
//! - [`stats`] — Monte Carlo statistics: Wilson intervals, KS tests,
//!   analytic oracle bounds.
//! - [`io`] — CSV/JSON export with bit-exact float round-trips.
//!
//! Everything stochastic is driven by splittable deterministic streams
//! ([`rng`]); a configuration reproduces its realization bit for bit.

pub mod error;
pub mod flow;
pub mod funcs;
pub mod gauss;
pub mod io;
pub mod rng;
pub mod shift;
pub mod stats;
pub mod step;
pub mod widths;

pub use error::{Error, Result};
