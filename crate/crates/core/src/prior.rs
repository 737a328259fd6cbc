//! Prior mean functions for the GP: analytic physics models and frozen
//! posterior-mean snapshots.
//!
//! A frozen snapshot is stored in collapsed form: the analytic root `p₀`
//! plus one kernel expansion `Σᵢ wᵢ k(zᵢ, ·)` per output dimension. Chaining
//! episode snapshots concatenates (or, when the datasets are nested,
//! merges) expansions, so evaluating a depth-τ chain costs one pass over
//! the accumulated points instead of τ recursive passes. This is the same
//! arithmetic as the recursive definition, reassociated; it is not a refit
//! of a single GP against the root prior, which would change results.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::env::{linear_env_step, pendulum_step, EnvSpec, PendulumParams};
use crate::kernel::Kernel;
use crate::linalg::DenseMat;
use crate::space::StateActionPoint;
use crate::{Error, Result};

/// A pure analytic model `p₀ : Z → X` supplied as side information.
#[derive(Debug, Clone, PartialEq)]
pub enum AnalyticPrior {
    /// The zero function (no side information).
    Zero { output_dim: usize },
    /// A pendulum step with (possibly mis-specified) physical parameters.
    Pendulum { params: PendulumParams, spec: EnvSpec },
    /// A linear model `x' = A·x + B·u`.
    Linear { a: DenseMat, b: DenseMat },
}

impl AnalyticPrior {
    pub fn output_dim(&self) -> usize {
        match self {
            AnalyticPrior::Zero { output_dim } => *output_dim,
            AnalyticPrior::Pendulum { .. } => 2,
            AnalyticPrior::Linear { a, .. } => a.rows(),
        }
    }

    pub fn eval(&self, z: &StateActionPoint) -> Result<Vec<f64>> {
        match self {
            AnalyticPrior::Zero { output_dim } => Ok(alloc::vec![0.0; *output_dim]),
            AnalyticPrior::Pendulum { params, spec } => {
                pendulum_step(&z.state, &z.action, params, spec)
            }
            AnalyticPrior::Linear { a, b } => linear_env_step(&z.state, &z.action, a, b),
        }
    }
}

/// A frozen posterior mean: analytic root plus a kernel expansion.
#[derive(Debug, Clone)]
pub struct FrozenPrior {
    pub root: AnalyticPrior,
    pub kernel: Kernel,
    pub points: Arc<Vec<StateActionPoint>>,
    /// Per-point expansion coefficients, one row per point, `output_dim`
    /// entries per row.
    pub coefficients: Arc<Vec<Vec<f64>>>,
    /// Number of freezes between this snapshot and the analytic root.
    pub depth: usize,
}

/// The GP's mean function: either raw side information or a frozen model
/// from an earlier episode. Evaluation is pure and snapshots never change
/// after construction.
#[derive(Debug, Clone)]
pub enum PriorMean {
    Analytic(AnalyticPrior),
    Frozen(FrozenPrior),
}

impl PriorMean {
    pub fn output_dim(&self) -> usize {
        match self {
            PriorMean::Analytic(p) => p.output_dim(),
            PriorMean::Frozen(f) => f.root.output_dim(),
        }
    }

    /// Number of freezes separating this prior from its analytic root.
    pub fn chain_depth(&self) -> usize {
        match self {
            PriorMean::Analytic(_) => 0,
            PriorMean::Frozen(f) => f.depth,
        }
    }

    pub fn eval(&self, z: &StateActionPoint) -> Result<Vec<f64>> {
        self.eval_with_kernel_prefix(z, None)
    }

    /// Evaluates the prior. When the caller has already computed kernel
    /// values of `z` against the expansion points (they are a prefix of the
    /// caller's own dataset), it can pass them to avoid recomputation.
    pub fn eval_with_kernel_prefix(
        &self,
        z: &StateActionPoint,
        kernel_values: Option<&[f64]>,
    ) -> Result<Vec<f64>> {
        match self {
            PriorMean::Analytic(p) => p.eval(z),
            PriorMean::Frozen(f) => {
                let mut out = f.root.eval(z)?;
                match kernel_values {
                    Some(kv) => {
                        debug_assert_eq!(kv.len(), f.points.len());
                        for (k, w) in kv.iter().zip(f.coefficients.iter()) {
                            for (o, c) in out.iter_mut().zip(w) {
                                *o += k * c;
                            }
                        }
                    }
                    None => {
                        for (p, w) in f.points.iter().zip(f.coefficients.iter()) {
                            let k = f.kernel.eval(p, z)?;
                            if !k.is_finite() {
                                return Err(Error::Numeric(
                                    "non-finite kernel value in prior expansion".into(),
                                ));
                            }
                            for (o, c) in out.iter_mut().zip(w) {
                                *o += k * c;
                            }
                        }
                    }
                }
                Ok(out)
            }
        }
    }
}
