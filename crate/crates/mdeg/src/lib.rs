//! Exact symbolic computation of Mustafin degenerations of generalised
//! multi-view varieties over the valuation ring of rational functions in `t`.
//!
//! The crate is organised in layers:
//!
//! * [`scalar`] — exact rationals, polynomials in `t`, and the fraction field
//!   with its t-adic valuation;
//! * [`matrix`] — dense exact linear algebra over any coefficient field;
//! * [`poly`] — a sparse multivariate polynomial engine with block-structured
//!   variables: monomial orders, Buchberger Gröbner bases, elimination,
//!   saturation, multigraded K-polynomials and multidegrees;
//! * [`building`] — lattices over the valuation ring, homothety classes,
//!   invariant factors, adjacency, convex hulls, quotient-lattice data;
//! * [`multiview`] — generalised multi-view varieties: vision ideals, the
//!   combinatorial dimension/Chow-class formula, component candidates;
//! * [`degeneration`] — the end-to-end degeneration pipeline: generic fibre,
//!   t-saturation, special fibre, component verdicts and the generic-initial-
//!   ideal experiment.
//!
//! The `examples/` directory of this crate contains one runnable example per
//! capability; the thin `mdeg` binary exposes the same pipeline as subcommands.

pub mod building;
pub mod degeneration;
pub mod matrix;
pub mod multiview;
pub mod poly;
pub mod scalar;

pub use scalar::{Rat, TPoly, TScalar};
