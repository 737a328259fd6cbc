//! Gaussian-process regression with non-zero mean priors and incremental
//! Cholesky updates.
//!
//! The posterior at a test point `z*` given `n` observations is
//!
//! ```text
//! μ(z*)  = (Y − M)ᵀ (G + σ²I)⁻¹ k_{z*} + m(z*)
//! σ²(z*) = k(z*, z*) − k_{z*}ᵀ (G + σ²I)⁻¹ k_{z*}
//! ```
//!
//! with `G` the kernel Gram matrix of the sample points, `m` the prior mean,
//! and `σ²` a regularization parameter that the episodic schedule may change
//! between iterations. All output dimensions share one Gram factor and one
//! scalar variance; each dimension is an independent residual regression.
//!
//! Observations are appended via an incremental factor update (one new
//! Cholesky row, no refactorization). Changing `σ²` triggers a full refit,
//! since row updates are only valid at fixed regularization. Repeated
//! observations of the same point can optionally be merged into a weighted
//! observation with noise `σ²/c`, which is algebraically identical to the
//! appended formulation and keeps the factor small when sampling on a
//! finite grid.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::kernel::Kernel;
use crate::linalg::LowerTriangular;
use crate::prior::{FrozenPrior, PriorMean};
use crate::space::StateActionPoint;
use crate::{Error, Result, JITTER};

/// Variance values in `[−NEG_VARIANCE_TOL, 0)` clamp to zero; anything lower
/// is reported as a numeric error rather than roundoff.
pub const NEG_VARIANCE_TOL: f64 = 1e-10;

/// Ordered transition observations `(z, y)` with `y = f(x, u) + w`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct TransitionDataset {
    points: Vec<StateActionPoint>,
    targets: Vec<Vec<f64>>,
}

impl TransitionDataset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, z: StateActionPoint, y: Vec<f64>) -> Result<()> {
        if !z.is_finite() || y.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("non-finite observation".into()));
        }
        if let Some(first) = self.targets.first() {
            if y.len() != first.len() {
                return Err(Error::DimensionMismatch {
                    expected: first.len(),
                    got: y.len(),
                });
            }
        }
        self.points.push(z);
        self.targets.push(y);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[StateActionPoint] {
        &self.points
    }

    pub fn targets(&self) -> &[Vec<f64>] {
        &self.targets
    }
}

/// GP posterior over the transition function, with snapshot semantics:
/// every mutation returns a new model and the receiver is never changed.
#[derive(Debug, Clone)]
pub struct GpModel {
    kernel: Kernel,
    prior: PriorMean,
    output_dim: usize,
    reg: f64,
    points: Vec<StateActionPoint>,
    /// Sum of targets per point (merged duplicates accumulate here).
    target_sums: Vec<Vec<f64>>,
    /// Observation multiplicity per point.
    counts: Vec<u32>,
    /// Cached prior mean at each sample point.
    prior_at_points: Vec<Vec<f64>>,
    /// Cholesky factor of `G + diag(σ²/cᵢ) + jitter·I`.
    factor: LowerTriangular,
    /// `(G + D)⁻¹ (Ȳ − M)`, one row per point, `output_dim` entries per row.
    alpha: Vec<Vec<f64>>,
    /// When the prior is a frozen snapshot whose expansion points are a
    /// bit-exact prefix of `points` (the episodic case), its length; lets
    /// prediction reuse the kernel vector for the prior evaluation.
    prior_prefix: Option<usize>,
}

impl GpModel {
    /// Creates an empty model.
    pub fn new(kernel: Kernel, prior: PriorMean, output_dim: usize, reg: f64) -> Result<Self> {
        if output_dim == 0 {
            return Err(Error::InvalidInput("output_dim must be positive".into()));
        }
        if prior.output_dim() != output_dim {
            return Err(Error::DimensionMismatch {
                expected: output_dim,
                got: prior.output_dim(),
            });
        }
        check_reg(reg)?;
        let prior_prefix = match &prior {
            PriorMean::Frozen(f) if f.points.is_empty() && f.kernel == kernel => Some(0),
            _ => None,
        };
        Ok(GpModel {
            kernel,
            prior,
            output_dim,
            reg,
            points: Vec::new(),
            target_sums: Vec::new(),
            counts: Vec::new(),
            prior_at_points: Vec::new(),
            factor: LowerTriangular::empty(),
            alpha: Vec::new(),
            prior_prefix,
        })
    }

    /// Fits a model to a whole dataset at once.
    pub fn fit(
        kernel: Kernel,
        prior: PriorMean,
        output_dim: usize,
        reg: f64,
        data: &TransitionDataset,
    ) -> Result<Self> {
        let mut model = GpModel::new(kernel, prior, output_dim, reg)?;
        for (z, y) in data.points().iter().zip(data.targets()) {
            model.push_observation(z.clone(), y.clone())?;
        }
        Ok(model)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Total observation count including merged duplicates.
    pub fn observation_count(&self) -> u64 {
        self.counts.iter().map(|&c| u64::from(c)).sum()
    }

    pub fn reg(&self) -> f64 {
        self.reg
    }

    pub fn kernel(&self) -> &Kernel {
        &self.kernel
    }

    pub fn prior(&self) -> &PriorMean {
        &self.prior
    }

    pub fn output_dim(&self) -> usize {
        self.output_dim
    }

    pub fn points(&self) -> &[StateActionPoint] {
        &self.points
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn target_sums(&self) -> &[Vec<f64>] {
        &self.target_sums
    }

    pub fn factor(&self) -> &LowerTriangular {
        &self.factor
    }

    /// Mean observed target at sample point `i`.
    pub fn target_mean(&self, i: usize) -> Vec<f64> {
        let c = f64::from(self.counts[i]);
        self.target_sums[i].iter().map(|s| s / c).collect()
    }

    fn check_input(&self, z: &StateActionPoint) -> Result<()> {
        if z.dim() != self.kernel.metric.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.kernel.metric.dim(),
                got: z.dim(),
            });
        }
        if !z.is_finite() {
            return Err(Error::InvalidInput("non-finite query point".into()));
        }
        Ok(())
    }

    /// Kernel vector `k_z` against the sample points.
    fn kernel_vector(&self, z: &StateActionPoint) -> Result<Vec<f64>> {
        let mut kv = Vec::with_capacity(self.points.len());
        for p in &self.points {
            let k = self.kernel.eval(p, z)?;
            if !k.is_finite() {
                return Err(Error::Numeric("non-finite kernel vector entry".into()));
            }
            kv.push(k);
        }
        Ok(kv)
    }

    fn prior_eval(&self, z: &StateActionPoint, kv: &[f64]) -> Result<Vec<f64>> {
        match self.prior_prefix {
            Some(p) if p <= kv.len() => self.prior.eval_with_kernel_prefix(z, Some(&kv[..p])),
            _ => self.prior.eval(z),
        }
    }

    fn mean_from_kvec(&self, z: &StateActionPoint, kv: &[f64]) -> Result<Vec<f64>> {
        let mut out = self.prior_eval(z, kv)?;
        for (row, k) in self.alpha.iter().zip(kv) {
            for (o, a) in out.iter_mut().zip(row) {
                *o += k * a;
            }
        }
        Ok(out)
    }

    fn variance_from_solved(&self, solved: &[f64]) -> Result<f64> {
        let quad: f64 = solved.iter().map(|h| h * h).sum();
        let v = 1.0 - quad;
        if v < -NEG_VARIANCE_TOL {
            return Err(Error::Numeric(alloc::format!(
                "predictive variance {v:e} below the roundoff floor"
            )));
        }
        Ok(v.max(0.0))
    }

    /// Posterior mean at `z`; with no data this is exactly the prior mean.
    pub fn predict_mean(&self, z: &StateActionPoint) -> Result<Vec<f64>> {
        self.check_input(z)?;
        if self.points.is_empty() {
            return self.prior.eval(z);
        }
        let kv = self.kernel_vector(z)?;
        self.mean_from_kvec(z, &kv)
    }

    /// Posterior variance at `z`, shared across output dimensions; lies in
    /// `[0, k(z, z)]`.
    pub fn predict_variance(&self, z: &StateActionPoint) -> Result<f64> {
        self.check_input(z)?;
        if self.points.is_empty() {
            return Ok(1.0);
        }
        let kv = self.kernel_vector(z)?;
        let solved = self.factor.forward_solve(&kv)?;
        self.variance_from_solved(&solved)
    }

    /// Mean and variance together, sharing one kernel vector; the planner's
    /// hot path.
    pub fn predict(&self, z: &StateActionPoint) -> Result<(Vec<f64>, f64)> {
        self.check_input(z)?;
        if self.points.is_empty() {
            return Ok((self.prior.eval(z)?, 1.0));
        }
        let kv = self.kernel_vector(z)?;
        let mean = self.mean_from_kvec(z, &kv)?;
        let solved = self.factor.forward_solve(&kv)?;
        Ok((mean, self.variance_from_solved(&solved)?))
    }

    /// Predicted posterior variance at `z` if `z*` were observed next, via
    /// the rank-one variance identity
    ///
    /// ```text
    /// σ²ₙ₊₁(z) = σ²ₙ(z) − cov²(z*, z) / (σ²ₙ(z*) + σ²)
    /// cov(z*, z) = k(z*, z) − k_{z*}ᵀ (G + σ²I)⁻¹ k_z
    /// ```
    pub fn lemma2_variance_update(
        &self,
        z_star: &StateActionPoint,
        z: &StateActionPoint,
    ) -> Result<f64> {
        self.check_input(z_star)?;
        self.check_input(z)?;
        let kv_star = self.kernel_vector(z_star)?;
        let kv_z = self.kernel_vector(z)?;
        let h_star = self.factor.forward_solve(&kv_star)?;
        let h_z = self.factor.forward_solve(&kv_z)?;
        let var_star = self.variance_from_solved(&h_star)?;
        let var_z = self.variance_from_solved(&h_z)?;
        let cross: f64 = h_star.iter().zip(&h_z).map(|(a, b)| a * b).sum();
        let cov = self.kernel.eval(z_star, z)? - cross;
        Ok(var_z - cov * cov / (var_star + self.reg))
    }

    /// Returns a model extended by the observation `(z, y)`. The factor
    /// gains one row; no refactorization happens. On error the receiver is
    /// unchanged.
    pub fn with_observation(&self, z: StateActionPoint, y: Vec<f64>) -> Result<GpModel> {
        let mut next = self.clone();
        next.push_observation(z, y)?;
        Ok(next)
    }

    /// Like [`GpModel::with_observation`], but an observation at a point
    /// already in the dataset is merged into it as a repeated measurement
    /// (weight `c`, noise `σ²/c`) instead of appending a duplicate row.
    /// Predictions are identical to the appended formulation.
    pub fn with_observation_merged(&self, z: StateActionPoint, y: Vec<f64>) -> Result<GpModel> {
        self.check_observation(&z, &y)?;
        if let Some(i) = self.points.iter().position(|p| p.bits_eq(&z)) {
            let mut next = self.clone();
            for (s, v) in next.target_sums[i].iter_mut().zip(&y) {
                *s += v;
            }
            next.counts[i] += 1;
            next.rebuild_factor()?;
            next.rebuild_alpha()?;
            Ok(next)
        } else {
            self.with_observation(z, y)
        }
    }

    /// Returns a model with a new regularization value. A changed value
    /// forces a full refactorization; row updates only hold at fixed `σ²`.
    pub fn with_reg(&self, reg: f64) -> Result<GpModel> {
        check_reg(reg)?;
        let mut next = self.clone();
        if reg.to_bits() != self.reg.to_bits() {
            next.reg = reg;
            next.rebuild_factor()?;
            next.rebuild_alpha()?;
        }
        Ok(next)
    }

    /// Returns a model whose prior mean is replaced; residuals are
    /// recomputed against the new prior (the Gram factor is unaffected).
    pub fn with_prior(&self, prior: PriorMean) -> Result<GpModel> {
        if prior.output_dim() != self.output_dim {
            return Err(Error::DimensionMismatch {
                expected: self.output_dim,
                got: prior.output_dim(),
            });
        }
        let mut next = self.clone();
        next.prior = prior;
        next.prior_prefix = next.detect_prior_prefix();
        next.prior_at_points.clear();
        for i in 0..next.points.len() {
            let m = next.prior.eval(&next.points[i])?;
            next.prior_at_points.push(m);
        }
        next.rebuild_alpha()?;
        Ok(next)
    }

    /// Freezes the current posterior mean as an immutable prior. The source
    /// model may keep evolving without affecting the snapshot.
    pub fn freeze_as_prior(&self) -> PriorMean {
        let frozen = match &self.prior {
            PriorMean::Analytic(root) => FrozenPrior {
                root: root.clone(),
                kernel: self.kernel.clone(),
                points: Arc::new(self.points.clone()),
                coefficients: Arc::new(self.alpha.clone()),
                depth: 1,
            },
            PriorMean::Frozen(prev) => {
                if self.prior_prefix.is_some() {
                    // nested datasets: sum coefficients point-wise
                    let mut coefs = self.alpha.clone();
                    for (c, prev_c) in coefs.iter_mut().zip(prev.coefficients.iter()) {
                        for (a, b) in c.iter_mut().zip(prev_c) {
                            *a += b;
                        }
                    }
                    FrozenPrior {
                        root: prev.root.clone(),
                        kernel: self.kernel.clone(),
                        points: Arc::new(self.points.clone()),
                        coefficients: Arc::new(coefs),
                        depth: prev.depth + 1,
                    }
                } else {
                    // unrelated datasets: concatenate expansions
                    let mut points = prev.points.as_ref().clone();
                    points.extend(self.points.iter().cloned());
                    let mut coefs = prev.coefficients.as_ref().clone();
                    coefs.extend(self.alpha.iter().cloned());
                    FrozenPrior {
                        root: prev.root.clone(),
                        kernel: self.kernel.clone(),
                        points: Arc::new(points),
                        coefficients: Arc::new(coefs),
                        depth: prev.depth + 1,
                    }
                }
            }
        };
        PriorMean::Frozen(frozen)
    }

    fn check_observation(&self, z: &StateActionPoint, y: &[f64]) -> Result<()> {
        self.check_input(z)?;
        if y.len() != self.output_dim {
            return Err(Error::DimensionMismatch {
                expected: self.output_dim,
                got: y.len(),
            });
        }
        if y.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("non-finite observation target".into()));
        }
        Ok(())
    }

    fn push_observation(&mut self, z: StateActionPoint, y: Vec<f64>) -> Result<()> {
        self.check_observation(&z, &y)?;
        let kv = self.kernel_vector(&z)?;
        let prior_here = self.prior.eval(&z)?;
        self.factor.append_row(&kv, 1.0 + self.reg + JITTER)?;
        self.points.push(z);
        self.target_sums.push(y);
        self.counts.push(1);
        self.prior_at_points.push(prior_here);
        self.rebuild_alpha()
    }

    fn detect_prior_prefix(&self) -> Option<usize> {
        match &self.prior {
            PriorMean::Frozen(f) if f.kernel == self.kernel && f.points.len() <= self.points.len() => {
                let shared = f
                    .points
                    .iter()
                    .zip(&self.points)
                    .all(|(a, b)| a.bits_eq(b));
                shared.then_some(f.points.len())
            }
            _ => None,
        }
    }

    fn rebuild_factor(&mut self) -> Result<()> {
        let n = self.points.len();
        let mut gram = alloc::vec![0.0; n * (n + 1) / 2];
        for i in 0..n {
            for j in 0..=i {
                gram[i * (i + 1) / 2 + j] = if i == j {
                    1.0 + self.reg / f64::from(self.counts[i]) + JITTER
                } else {
                    self.kernel.eval(&self.points[i], &self.points[j])?
                };
            }
        }
        self.factor = LowerTriangular::factorize(n, |i, j| gram[i * (i + 1) / 2 + j])?;
        Ok(())
    }

    fn rebuild_alpha(&mut self) -> Result<()> {
        let n = self.points.len();
        self.alpha = alloc::vec![alloc::vec![0.0; self.output_dim]; n];
        for d in 0..self.output_dim {
            let rhs: Vec<f64> = (0..n)
                .map(|i| {
                    self.target_sums[i][d] / f64::from(self.counts[i]) - self.prior_at_points[i][d]
                })
                .collect();
            let col = self.factor.solve(&rhs)?;
            for (row, v) in self.alpha.iter_mut().zip(col) {
                row[d] = v;
            }
        }
        Ok(())
    }
}

fn check_reg(reg: f64) -> Result<()> {
    if !(reg > 0.0) || !reg.is_finite() {
        return Err(Error::InvalidInput("regularization must be positive and finite".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::KernelParams;
    use crate::prior::AnalyticPrior;
    use crate::space::InputMetric;
    use alloc::vec;

    fn z(coords: &[f64]) -> StateActionPoint {
        StateActionPoint::new(coords[..2].to_vec(), coords[2..].to_vec()).unwrap()
    }

    fn empty_model(reg: f64) -> GpModel {
        let kernel = Kernel::new(KernelParams::new(0.5).unwrap(), InputMetric::euclidean(3));
        GpModel::new(kernel, PriorMean::Analytic(AnalyticPrior::Zero { output_dim: 1 }), 1, reg)
            .unwrap()
    }

    #[test]
    fn empty_model_returns_prior_and_unit_variance() {
        let m = empty_model(0.1);
        let q = z(&[0.3, -0.7, 1.1]);
        assert_eq!(m.predict_mean(&q).unwrap(), vec![0.0]);
        assert_eq!(m.predict_variance(&q).unwrap(), 1.0);
    }

    #[test]
    fn single_observation_interpolates_in_noiseless_limit() {
        let m = empty_model(1e-9);
        let p = z(&[0.5, 0.5, 0.0]);
        let m = m.with_observation(p.clone(), vec![2.5]).unwrap();
        let mean = m.predict_mean(&p).unwrap();
        assert!((mean[0] - 2.5).abs() < 1e-8, "mean {}", mean[0]);
    }

    #[test]
    fn one_by_one_cholesky_value() {
        let reg = 0.25;
        let m = empty_model(reg).with_observation(z(&[0.0, 0.0, 0.0]), vec![1.0]).unwrap();
        assert_eq!(m.factor().dim(), 1);
        let want = libm::sqrt(1.0 + reg + crate::JITTER);
        assert!((m.factor().get(0, 0) - want).abs() < 1e-15);
    }

    #[test]
    fn observed_point_variance_matches_closed_form() {
        let reg = 0.3;
        let p = z(&[1.0, -1.0, 0.5]);
        let m = empty_model(reg).with_observation(p.clone(), vec![0.7]).unwrap();
        let v = m.predict_variance(&p).unwrap();
        assert!((v - reg / (1.0 + reg)).abs() < 1e-9, "variance {v}");
    }

    #[test]
    fn duplicate_observation_strictly_decreases_variance() {
        let p = z(&[0.2, 0.4, -0.6]);
        let m1 = empty_model(0.5).with_observation(p.clone(), vec![1.0]).unwrap();
        let v1 = m1.predict_variance(&p).unwrap();
        let m2 = m1.with_observation(p.clone(), vec![1.2]).unwrap();
        let v2 = m2.predict_variance(&p).unwrap();
        assert!(v2 < v1);

        // merged path agrees with the appended path
        let m2m = m1.with_observation_merged(p.clone(), vec![1.2]).unwrap();
        assert_eq!(m2m.len(), 1);
        assert_eq!(m2m.observation_count(), 2);
        let q = z(&[0.1, 0.1, 0.1]);
        assert!((m2m.predict_variance(&q).unwrap() - m2.predict_variance(&q).unwrap()).abs() < 1e-10);
        let (a, b) = (m2m.predict_mean(&q).unwrap(), m2.predict_mean(&q).unwrap());
        assert!((a[0] - b[0]).abs() < 1e-10);
    }

    #[test]
    fn variance_is_target_independent() {
        let pts = [
            z(&[0.0, 0.0, 0.0]),
            z(&[1.0, 0.5, -0.5]),
            z(&[-1.0, 2.0, 0.3]),
        ];
        let mut m1 = empty_model(0.2);
        let mut m2 = empty_model(0.2);
        for (i, p) in pts.iter().enumerate() {
            m1 = m1.with_observation(p.clone(), vec![i as f64]).unwrap();
            m2 = m2.with_observation(p.clone(), vec![-3.0 * i as f64 + 1.0]).unwrap();
        }
        let q = z(&[0.4, 0.4, 0.4]);
        assert_eq!(m1.predict_variance(&q).unwrap(), m2.predict_variance(&q).unwrap());
    }

    #[test]
    fn lemma2_closed_forms() {
        // empty data: sigma^2_1(z) = 1 - k(z*, z)^2 / (1 + reg)
        let reg = 0.4;
        let m = empty_model(reg);
        let (a, b) = (z(&[0.0, 0.0, 0.0]), z(&[1.0, 0.0, 0.0]));
        let c = m.kernel().eval(&a, &b).unwrap();
        let got = m.lemma2_variance_update(&a, &b).unwrap();
        assert!((got - (1.0 - c * c / (1.0 + reg))).abs() < 1e-12);

        // z == z*: sigma^2 * reg / (sigma^2 + reg)
        let m = m.with_observation(z(&[0.3, 0.3, 0.3]), vec![1.0]).unwrap();
        let q = z(&[-0.5, 0.2, 0.9]);
        let v = m.predict_variance(&q).unwrap();
        let got = m.lemma2_variance_update(&q, &q).unwrap();
        assert!((got - v * reg / (v + reg)).abs() < 1e-12);
    }

    #[test]
    fn frozen_prior_is_immutable_and_matches_source_at_freeze_time() {
        let mut m = empty_model(0.1);
        for i in 0..5 {
            let p = z(&[i as f64 * 0.3, -(i as f64) * 0.2, 0.1 * i as f64]);
            m = m.with_observation(p, vec![(i as f64).sin()]).unwrap();
        }
        let frozen = m.freeze_as_prior();
        let queries: Vec<StateActionPoint> =
            (0..20).map(|i| z(&[0.05 * i as f64, 0.1 * i as f64 - 1.0, 0.02 * i as f64])).collect();
        let at_freeze: Vec<Vec<f64>> =
            queries.iter().map(|q| m.predict_mean(q).unwrap()).collect();
        // frozen prior equals source predictions at freeze time
        for (q, want) in queries.iter().zip(&at_freeze) {
            let got = frozen.eval(q).unwrap();
            assert!((got[0] - want[0]).abs() < 1e-12);
        }
        // mutate the source; frozen outputs must not move
        let mut m2 = m.clone();
        for i in 0..10 {
            let p = z(&[1.0 + 0.1 * i as f64, 0.5, -0.5]);
            m2 = m2.with_observation(p, vec![2.0]).unwrap();
        }
        for (q, want) in queries.iter().zip(&at_freeze) {
            let got = frozen.eval(q).unwrap();
            assert!((got[0] - want[0]).abs() < 1e-12);
        }
    }

    #[test]
    fn freezing_an_empty_model_reproduces_the_analytic_prior() {
        let m = empty_model(0.1);
        let frozen = m.freeze_as_prior();
        assert_eq!(frozen.chain_depth(), 1);
        let q = z(&[0.4, 0.4, 0.4]);
        assert_eq!(frozen.eval(&q).unwrap(), vec![0.0]);
    }

    #[test]
    fn update_failure_leaves_model_unchanged() {
        let m = empty_model(0.5);
        let err = m.with_observation(z(&[f64::NAN, 0.0, 0.0]), vec![1.0]).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
        assert!(m.is_empty());
    }

    #[test]
    fn reg_swap_keeps_dataset_and_changes_variance() {
        let p = z(&[0.0, 0.0, 0.0]);
        let m = empty_model(0.5).with_observation(p.clone(), vec![1.0]).unwrap();
        let tightened = m.with_reg(0.05).unwrap();
        assert_eq!(tightened.len(), 1);
        assert!(tightened.predict_variance(&p).unwrap() < m.predict_variance(&p).unwrap());
    }
}
