//! Simulated ground-truth dynamics, noise injection, and evaluation grids.
//!
//! Two environments are provided: the torque-limited pendulum
//! `m l² θ̈ + 3 m g l sin(θ) = 3u` integrated with explicit forward Euler,
//! and a finite-grid linear system `x' = snap(A·x + B·u)` whose state set is
//! a product grid, used for the desk-scale verification of the
//! posterior-variance convergence rate.

use alloc::vec;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::kernel::{Kernel, KernelParams};
use crate::linalg::DenseMat;
use crate::math;
use crate::space::{CoordKind, InputMetric, StateActionPoint};
use crate::{Error, Result};

/// Refuse to materialize grids larger than this.
pub const MAX_GRID_POINTS: usize = 2_000_000;

/// Geometry of a state-action space: per-coordinate bounds, which state
/// coordinates are angles (wrapped into their bounds), and the integration
/// step.
#[derive(Debug, Clone, PartialEq)]
pub struct EnvSpec {
    pub state_bounds: Vec<(f64, f64)>,
    pub action_bounds: Vec<(f64, f64)>,
    pub wrap_state: Vec<bool>,
    pub dt: f64,
}

impl EnvSpec {
    pub fn new(
        state_bounds: Vec<(f64, f64)>,
        action_bounds: Vec<(f64, f64)>,
        wrap_state: Vec<bool>,
        dt: f64,
    ) -> Result<Self> {
        if wrap_state.len() != state_bounds.len() {
            return Err(Error::DimensionMismatch {
                expected: state_bounds.len(),
                got: wrap_state.len(),
            });
        }
        if !(dt > 0.0) {
            return Err(Error::InvalidInput("dt must be positive".into()));
        }
        for (lo, hi) in state_bounds.iter().chain(action_bounds.iter()) {
            if !(lo < hi) {
                return Err(Error::InvalidInput("bounds must satisfy lo < hi".into()));
            }
        }
        Ok(EnvSpec {
            state_bounds,
            action_bounds,
            wrap_state,
            dt,
        })
    }

    pub fn state_dim(&self) -> usize {
        self.state_bounds.len()
    }

    pub fn action_dim(&self) -> usize {
        self.action_bounds.len()
    }

    /// Wraps angle coordinates into their bounds and clips the rest.
    pub fn wrap_clip_state(&self, x: &[f64]) -> Vec<f64> {
        x.iter()
            .enumerate()
            .map(|(i, &v)| {
                let (lo, hi) = self.state_bounds[i];
                if self.wrap_state[i] {
                    math::wrap(v, lo, hi)
                } else {
                    math::clamp(v, lo, hi)
                }
            })
            .collect()
    }

    pub fn clip_action(&self, u: &[f64]) -> Vec<f64> {
        u.iter()
            .enumerate()
            .map(|(i, &v)| {
                let (lo, hi) = self.action_bounds[i];
                math::clamp(v, lo, hi)
            })
            .collect()
    }

    /// The kernel over `Z` induced by this space: wrapped state coordinates
    /// become angular (chordal) distances, everything else is Euclidean.
    pub fn kernel(&self, gamma: f64) -> Result<Kernel> {
        let mut kinds = Vec::with_capacity(self.state_dim() + self.action_dim());
        for (i, &(lo, hi)) in self.state_bounds.iter().enumerate() {
            if self.wrap_state[i] {
                kinds.push(CoordKind::Angular { period: hi - lo });
            } else {
                kinds.push(CoordKind::Linear);
            }
        }
        kinds.extend(core::iter::repeat(CoordKind::Linear).take(self.action_dim()));
        Ok(Kernel::new(KernelParams::new(gamma)?, InputMetric::new(kinds)?))
    }
}

/// Physical parameters of the pendulum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PendulumParams {
    pub gravity: f64,
    pub mass: f64,
    pub length: f64,
}

impl PendulumParams {
    pub fn new(gravity: f64, mass: f64, length: f64) -> Result<Self> {
        if !(mass > 0.0) || !(length > 0.0) {
            return Err(Error::InvalidInput("mass and length must be positive".into()));
        }
        Ok(PendulumParams {
            gravity,
            mass,
            length,
        })
    }

    /// True benchmark parameters g = 9.81, m = 1, l = 1.
    pub fn nominal() -> Self {
        PendulumParams {
            gravity: 9.81,
            mass: 1.0,
            length: 1.0,
        }
    }

    /// Mis-specified side-information parameters g = 9.0, m = 0.5, l = 2.0.
    pub fn biased() -> Self {
        PendulumParams {
            gravity: 9.0,
            mass: 0.5,
            length: 2.0,
        }
    }
}

/// The benchmark pendulum space: θ ∈ [−π, π] wrapped, θ̇ ∈ [−8, 8],
/// u ∈ [−2, 2].
pub fn pendulum_spec(dt: f64) -> Result<EnvSpec> {
    EnvSpec::new(
        vec![
            (-core::f64::consts::PI, core::f64::consts::PI),
            (-8.0, 8.0),
        ],
        vec![(-2.0, 2.0)],
        vec![true, false],
        dt,
    )
}

/// One explicit forward-Euler step of `θ̈ = 3u/(m l²) − 3 g sin(θ)/l`.
///
/// The angle is wrapped back into its bounds and the velocity clipped; the
/// action is clipped before use.
pub fn pendulum_step(x: &[f64], u: &[f64], p: &PendulumParams, spec: &EnvSpec) -> Result<Vec<f64>> {
    if x.len() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: x.len() });
    }
    if u.len() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, got: u.len() });
    }
    if !x.iter().all(|v| v.is_finite()) || !u[0].is_finite() {
        return Err(Error::InvalidInput("non-finite pendulum input".into()));
    }
    let torque = spec.clip_action(u)[0];
    let (theta, theta_dot) = (x[0], x[1]);
    let accel = 3.0 * torque / (p.mass * p.length * p.length)
        - 3.0 * p.gravity * math::sin(theta) / p.length;
    let next = vec![theta + spec.dt * theta_dot, theta_dot + spec.dt * accel];
    Ok(spec.wrap_clip_state(&next))
}

/// `x' = A·x + B·u`.
pub fn linear_env_step(x: &[f64], u: &[f64], a: &DenseMat, b: &DenseMat) -> Result<Vec<f64>> {
    let ax = a.mul_vec(x)?;
    let bu = b.mul_vec(u)?;
    if ax.len() != bu.len() {
        return Err(Error::DimensionMismatch {
            expected: ax.len(),
            got: bu.len(),
        });
    }
    Ok(ax.iter().zip(&bu).map(|(p, q)| p + q).collect())
}

/// Process/observation noise: per-coordinate `N(0, std²)` from a seeded
/// stream.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseSpec {
    pub std: f64,
    pub seed: u64,
}

impl NoiseSpec {
    pub fn new(std: f64, seed: u64) -> Result<Self> {
        if !(std >= 0.0) || !std.is_finite() {
            return Err(Error::InvalidInput("noise std must be non-negative".into()));
        }
        Ok(NoiseSpec { std, seed })
    }
}

/// A seeded Gaussian noise stream; deterministic given `(seed, draw index)`.
#[derive(Debug, Clone)]
pub struct NoiseStream {
    std: f64,
    rng: ChaCha12Rng,
}

impl NoiseStream {
    pub fn new(spec: NoiseSpec) -> Self {
        NoiseStream {
            std: spec.std,
            rng: ChaCha12Rng::seed_from_u64(spec.seed),
        }
    }

    /// Draws one noise vector of length `dim`.
    pub fn draw(&mut self, dim: usize) -> Vec<f64> {
        (0..dim)
            .map(|_| {
                let g: f64 = StandardNormal.sample(&mut self.rng);
                self.std * g
            })
            .collect()
    }
}

/// Ground-truth transition models.
#[derive(Debug, Clone, PartialEq)]
pub enum Dynamics {
    Pendulum { params: PendulumParams },
    /// Linear map whose outputs are snapped to the nearest point of a
    /// per-coordinate state grid, so the reachable state set is finite.
    LinearGrid {
        a: DenseMat,
        b: DenseMat,
        state_axes: Vec<Vec<f64>>,
    },
}

/// A simulated environment: a deterministic step function over an
/// [`EnvSpec`] geometry.
#[derive(Debug, Clone, PartialEq)]
pub struct Env {
    pub spec: EnvSpec,
    pub dynamics: Dynamics,
}

impl Env {
    pub fn pendulum(params: PendulumParams, dt: f64) -> Result<Self> {
        Ok(Env {
            spec: pendulum_spec(dt)?,
            dynamics: Dynamics::Pendulum { params },
        })
    }

    /// Noiseless transition `f(x, u)`, wrapped/clipped (and snapped for the
    /// finite-grid dynamics) into the state space.
    pub fn step(&self, x: &[f64], u: &[f64]) -> Result<Vec<f64>> {
        match &self.dynamics {
            Dynamics::Pendulum { params } => pendulum_step(x, u, params, &self.spec),
            Dynamics::LinearGrid { a, b, state_axes } => {
                let raw = linear_env_step(x, &self.spec.clip_action(u), a, b)?;
                let clipped = self.spec.wrap_clip_state(&raw);
                Ok(snap_to_axes(&clipped, state_axes))
            }
        }
    }

    /// Observes a transition `y = f(x, u) + w`. The noisy value is wrapped
    /// back into the state space (and snapped for finite-grid dynamics), so
    /// it can serve directly as the successor state.
    pub fn observe(&self, x: &[f64], u: &[f64], noise: &mut NoiseStream) -> Result<Vec<f64>> {
        let clean = self.step(x, u)?;
        let w = noise.draw(clean.len());
        let noisy: Vec<f64> = clean.iter().zip(&w).map(|(c, n)| c + n).collect();
        let bounded = self.spec.wrap_clip_state(&noisy);
        Ok(match &self.dynamics {
            Dynamics::LinearGrid { state_axes, .. } => snap_to_axes(&bounded, state_axes),
            Dynamics::Pendulum { .. } => bounded,
        })
    }

    pub fn state_dim(&self) -> usize {
        self.spec.state_dim()
    }

    pub fn action_dim(&self) -> usize {
        self.spec.action_dim()
    }
}

fn snap_to_axes(x: &[f64], axes: &[Vec<f64>]) -> Vec<f64> {
    x.iter()
        .zip(axes)
        .map(|(&v, axis)| {
            let mut best = axis[0];
            let mut best_d = math::abs(v - best);
            for &a in axis.iter().skip(1) {
                let d = math::abs(v - a);
                if d < best_d {
                    best = a;
                    best_d = d;
                }
            }
            best
        })
        .collect()
}

/// `count` evenly spaced values including both endpoints.
pub fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    assert!(count >= 2, "linspace needs at least two points");
    let step = (hi - lo) / (count - 1) as f64;
    (0..count)
        .map(|i| if i + 1 == count { hi } else { lo + step * i as f64 })
        .collect()
}

fn cartesian(axes: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = vec![vec![]];
    for axis in axes {
        let mut next = Vec::with_capacity(out.len() * axis.len());
        for prefix in &out {
            for &v in axis {
                let mut row = prefix.clone();
                row.push(v);
                next.push(row);
            }
        }
        out = next;
    }
    out
}

/// Evenly spaced product grid over the full state-action space, inclusive of
/// the bounds; `counts` has one entry per `(x, u)` coordinate.
pub fn state_action_grid(spec: &EnvSpec, counts: &[usize]) -> Result<Vec<StateActionPoint>> {
    let dim = spec.state_dim() + spec.action_dim();
    if counts.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: counts.len(),
        });
    }
    if counts.iter().any(|&c| c < 2) {
        return Err(Error::InvalidInput("grid counts must be >= 2 per coordinate".into()));
    }
    let total: usize = counts.iter().try_fold(1usize, |acc, &c| {
        acc.checked_mul(c).filter(|&t| t <= MAX_GRID_POINTS)
    })
    .ok_or_else(|| Error::InvalidInput("grid size exceeds the configured cap".into()))?;
    let axes: Vec<Vec<f64>> = spec
        .state_bounds
        .iter()
        .chain(spec.action_bounds.iter())
        .zip(counts)
        .map(|(&(lo, hi), &c)| linspace(lo, hi, c))
        .collect();
    let sd = spec.state_dim();
    let mut grid = Vec::with_capacity(total);
    for row in cartesian(&axes) {
        grid.push(StateActionPoint::new(row[..sd].to_vec(), row[sd..].to_vec())?);
    }
    Ok(grid)
}

/// Evenly spaced product grid over the state space only.
pub fn state_grid(spec: &EnvSpec, counts: &[usize]) -> Result<Vec<Vec<f64>>> {
    if counts.len() != spec.state_dim() {
        return Err(Error::DimensionMismatch {
            expected: spec.state_dim(),
            got: counts.len(),
        });
    }
    if counts.iter().any(|&c| c < 2) {
        return Err(Error::InvalidInput("grid counts must be >= 2 per coordinate".into()));
    }
    counts.iter().try_fold(1usize, |acc, &c| {
        acc.checked_mul(c).filter(|&t| t <= MAX_GRID_POINTS)
    })
    .ok_or_else(|| Error::InvalidInput("grid size exceeds the configured cap".into()))?;
    let axes: Vec<Vec<f64>> = spec
        .state_bounds
        .iter()
        .zip(counts)
        .map(|(&(lo, hi), &c)| linspace(lo, hi, c))
        .collect();
    Ok(cartesian(&axes))
}
