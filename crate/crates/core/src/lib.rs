//! Estimation of the quadratic functional θ = μᵀΣ⁻¹μ (the squared maximum
//! Sharpe ratio) and the coefficient vector α = Σ⁻¹μ from i.i.d. samples in
//! the high-dimensional sparse regime.
//!
//! The crate provides:
//!
//! - [`moments`]: sample, pooled and element-wise truncated (heavy-tail
//!   robust) mean/covariance estimators,
//! - [`solver`]: the ℓ1-regularized quadratic program with an ℓ2-ball
//!   safeguard solved by accelerated proximal gradient, an MCP variant for
//!   support recovery, a Dantzig-selector linear program, and an exhaustive
//!   ℓ0 oracle,
//! - [`functionals`]: the de-biased functional estimate 2μ̂ᵀα̃ − α̃ᵀΣ̂α̃, its
//!   plug-in relatives, and the dense-regime family,
//! - [`tuning`]: theory-driven, cross-validated and oracle tuning of (λ, γ),
//! - [`simulation`]: seeded Monte Carlo scenarios and empirical
//!   convergence-rate fits,
//! - [`portfolio`]: Markowitz weights, short-selling constraints, market
//!   hedging, rolling backtests and performance metrics,
//! - [`io`]: CSV/JSON interchange for datasets, return tables and results.

pub mod error;
pub mod functionals;
pub mod io;
pub mod linalg;
pub mod moments;
pub mod portfolio;
pub mod simulation;
pub mod solver;
pub mod tuning;

pub use error::{Error, Result};
pub use functionals::FunctionalEstimate;
pub use moments::{Dataset, MomentPair, TruncationConfig};
pub use solver::{QuadProblem, Solution, SolverConfig};
