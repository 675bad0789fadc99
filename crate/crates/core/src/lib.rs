//! Baskakov operators and their left quasi-interpolants on the half-line.
//!
//! The crate is split along the computation:
//!
//! * [`exactalg`]: exact rationals, polynomials and Stirling numbers;
//! * [`coeffs`]: the differential-operator coefficients `θ_r^(n)`, `η_r^(n)`
//!   by recurrence and by direct construction, with their asymptotic limits;
//! * [`evaluator`]: floating-point evaluation of `V_{n,N} f`, its derivatives
//!   and the quasi-interpolants from uniform samples `f(k/n)`;
//! * [`lebesgue`]: quasi-Lagrange functions, Lebesgue functions and norms;
//! * [`experiments`]: error tables, convergence-rate checks and reports.

pub mod cli;
pub mod coeffs;
pub mod error;
pub mod evaluator;
pub mod exactalg;
pub mod experiments;
pub mod lebesgue;

pub use error::{Error, Result};
