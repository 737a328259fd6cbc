//! The squared-exponential (RBF) covariance function
//! `k(z, z') = exp(−γ‖z − z'‖²)`.

use crate::math;
use crate::space::{InputMetric, StateActionPoint};
use crate::{Error, Result};

/// RBF hyperparameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelParams {
    /// Inverse squared length-scale γ > 0.
    pub gamma: f64,
}

impl KernelParams {
    pub fn new(gamma: f64) -> Result<Self> {
        if !(gamma > 0.0) || !gamma.is_finite() {
            return Err(Error::InvalidInput("kernel gamma must be positive and finite".into()));
        }
        Ok(KernelParams { gamma })
    }
}

/// An RBF kernel over `Z`, paired with the input metric that defines
/// `‖z − z'‖`.
#[derive(Debug, Clone, PartialEq)]
pub struct Kernel {
    pub params: KernelParams,
    pub metric: InputMetric,
}

impl Kernel {
    pub fn new(params: KernelParams, metric: InputMetric) -> Self {
        Kernel { params, metric }
    }

    /// Evaluates `k(a, b) = exp(−γ‖a − b‖²)`; always in `(0, 1]`.
    pub fn eval(&self, a: &StateActionPoint, b: &StateActionPoint) -> Result<f64> {
        let d2 = self.metric.squared_distance(a, b)?;
        Ok(math::exp(-self.params.gamma * d2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    fn z(coords: &[f64]) -> StateActionPoint {
        StateActionPoint::new(coords.to_vec(), vec![]).unwrap()
    }

    fn kernel(gamma: f64, dim: usize) -> Kernel {
        Kernel::new(KernelParams::new(gamma).unwrap(), InputMetric::euclidean(dim))
    }

    #[test]
    fn zero_distance_gives_one() {
        let k = kernel(0.5, 3);
        let p = z(&[0.4, -1.2, 7.0]);
        assert_eq!(k.eval(&p, &p).unwrap(), 1.0);
    }

    #[test]
    fn known_value() {
        // gamma = 0.5, squared distance 2 -> e^{-1}
        let k = kernel(0.5, 2);
        let v = k.eval(&z(&[0.0, 0.0]), &z(&[1.0, 1.0])).unwrap();
        assert!((v - (-1.0f64).exp()).abs() < 1e-12);
        assert!((v - 0.367_879_441_171_442_3).abs() < 1e-12);
    }

    #[test]
    fn symmetric_and_bounded_on_random_pairs() {
        let k = kernel(0.7, 4);
        let mut rng = ChaCha12Rng::seed_from_u64(7);
        for _ in 0..100 {
            let a: Vec<f64> = (0..4).map(|_| rng.gen_range(-5.0..5.0)).collect();
            let b: Vec<f64> = (0..4).map(|_| rng.gen_range(-5.0..5.0)).collect();
            let (a, b) = (z(&a), z(&b));
            let kab = k.eval(&a, &b).unwrap();
            let kba = k.eval(&b, &a).unwrap();
            assert_eq!(kab, kba);
            assert!(kab > 0.0 && kab <= 1.0);
        }
    }

    #[test]
    fn gamma_must_be_positive() {
        assert!(KernelParams::new(0.0).is_err());
        assert!(KernelParams::new(-1.0).is_err());
    }

    #[test]
    fn dimension_mismatch_is_input_error() {
        let k = kernel(0.5, 2);
        assert!(matches!(
            k.eval(&z(&[0.0, 0.0]), &z(&[0.0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
