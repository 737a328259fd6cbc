//! Active learning of unknown dynamics with Gaussian-process models whose
//! sampling policy is steered by an imperfect prior physics model.
//!
//! The crate implements the full episodic loop: a GP with a non-zero prior
//! mean models the system `x' = f(x, u) + w`; each episode freezes the
//! current posterior mean as the next episode's prior and replans action
//! sequences that maximize a discrepancy-based UCB acquisition
//!
//! ```text
//! A(z) = ‖μ(z) − m(z)‖ + √β · σ(z) + s(z)
//! ```
//!
//! along mean-dynamics rollouts. Baselines (variance-only planning and a
//! myopic σ-greedy policy), simulated environments, and the metrics needed
//! to verify the posterior-variance convergence rate on a finite
//! state-action grid are included.
//!
//! The crate is `no_std` (with `alloc`); all IO, configuration, and file
//! formats live in the companion CLI crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod env;
pub mod episodic;
mod error;
pub mod gp;
pub mod kernel;
pub mod linalg;
pub(crate) mod math;
pub mod metrics;
pub mod planner;
pub mod prior;
pub mod seed;
pub mod space;

pub use error::{Error, Result};

/// Jitter added to every regularized Gram diagonal to guard the Cholesky
/// factorization against breakdown on duplicate sample points.
pub const JITTER: f64 = 1e-10;
