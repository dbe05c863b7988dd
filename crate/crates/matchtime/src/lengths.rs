//! Discrete Gamma model for random sequence lengths.
//!
//! The integer length `t >= 1` has pmf `g(t) = G(t) − G(t−1)` where `G` is
//! the CDF of a continuous Gamma distribution with shape `k` and rate `λ`
//! (the regularized lower incomplete gamma function `P(k, λx)`). Sampling is
//! conditioned on a window `t_min <= t <= t_max` by inverse-CDF on the
//! truncated support, i.e. out-of-window lengths are rejected rather than
//! clipped.
//!
//! The defaults (`k = 1`, `λ = 1/1921`, window `[10³, 1.5·10⁴]`) mimic the
//! empirical length distribution of human DNA coding sequences, which makes
//! synthetic experiments comparable to the genomic pipeline.

use rand::Rng;
use statrs::function::gamma::gamma_lr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LengthModelError {
    #[error("shape parameter must be positive and finite, got {0}")]
    InvalidShape(f64),

    #[error("rate parameter must be positive and finite, got {0}")]
    InvalidRate(f64),

    #[error("need 2 <= t_min <= t_max, got [{t_min}, {t_max}]")]
    InvalidWindow { t_min: u64, t_max: u64 },

    #[error("truncation window [{t_min}, {t_max}] carries no probability mass")]
    EmptyWindow { t_min: u64, t_max: u64 },

    #[error("pmf requires t >= 1, got {0}")]
    LengthOutOfDomain(u64),
}

/// Gamma CDF `P(k, λx)` with shape `k` and rate `λ`. Negative `x` maps to 0
/// by convention. For `k = 1` this is `1 − e^{−λx}`.
pub fn gamma_cdf(x: f64, k: f64, lambda: f64) -> Result<f64, LengthModelError> {
    if !(k.is_finite() && k > 0.0) {
        return Err(LengthModelError::InvalidShape(k));
    }
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(LengthModelError::InvalidRate(lambda));
    }
    if x <= 0.0 {
        return Ok(0.0);
    }
    Ok(gamma_lr(k, lambda * x))
}

/// Truncated discrete Gamma length model.
#[derive(Debug, Clone, PartialEq)]
pub struct LengthModel {
    k: f64,
    lambda: f64,
    t_min: u64,
    t_max: u64,
}

impl Default for LengthModel {
    fn default() -> Self {
        Self::new(1.0, 1.0 / 1921.0, 1_000, 15_000).expect("default parameters are valid")
    }
}

impl LengthModel {
    pub fn new(k: f64, lambda: f64, t_min: u64, t_max: u64) -> Result<Self, LengthModelError> {
        if !(k.is_finite() && k > 0.0) {
            return Err(LengthModelError::InvalidShape(k));
        }
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(LengthModelError::InvalidRate(lambda));
        }
        if t_min < 2 || t_min > t_max {
            return Err(LengthModelError::InvalidWindow { t_min, t_max });
        }
        let model = Self {
            k,
            lambda,
            t_min,
            t_max,
        };
        if model.window_mass() <= 0.0 {
            return Err(LengthModelError::EmptyWindow { t_min, t_max });
        }
        Ok(model)
    }

    pub fn shape(&self) -> f64 {
        self.k
    }

    pub fn rate(&self) -> f64 {
        self.lambda
    }

    pub fn t_min(&self) -> u64 {
        self.t_min
    }

    pub fn t_max(&self) -> u64 {
        self.t_max
    }

    /// Continuous Gamma CDF of this model's parameters.
    pub fn cdf(&self, x: f64) -> f64 {
        gamma_cdf(x, self.k, self.lambda).expect("parameters validated at construction")
    }

    /// Untruncated pmf `g(t) = G(t) − G(t−1)` for integer `t >= 1`.
    pub fn pmf(&self, t: u64) -> Result<f64, LengthModelError> {
        if t < 1 {
            return Err(LengthModelError::LengthOutOfDomain(t));
        }
        Ok(self.cdf(t as f64) - self.cdf(t as f64 - 1.0))
    }

    /// Probability mass carried by the truncation window,
    /// `G(t_max) − G(t_min − 1)`.
    pub fn window_mass(&self) -> f64 {
        self.cdf(self.t_max as f64) - self.cdf(self.t_min as f64 - 1.0)
    }

    /// Mean of the truncated (renormalized) distribution, by direct
    /// summation of the pmf over the window.
    pub fn truncated_mean(&self) -> f64 {
        let mut acc = 0.0;
        for t in self.t_min..=self.t_max {
            acc += t as f64 * self.pmf(t).expect("t >= t_min >= 2");
        }
        acc / self.window_mass()
    }

    /// Draws one length from the window-conditioned pmf by inverse CDF:
    /// a uniform variate is mapped into the window's CDF range and the
    /// smallest `t` with `G(t)` at or above it is found by bisection.
    /// Deterministic given the RNG state.
    pub fn sample_length(&self, rng: &mut impl Rng) -> u64 {
        let cdf_lo = self.cdf(self.t_min as f64 - 1.0);
        let target = cdf_lo + rng.gen::<f64>() * self.window_mass();
        let (mut lo, mut hi) = (self.t_min, self.t_max);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if self.cdf(mid as f64) >= target {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        lo
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::LN_2;

    #[test]
    fn cdf_examples() {
        assert_eq!(gamma_cdf(0.0, 1.0, 0.37).unwrap(), 0.0);
        assert_eq!(gamma_cdf(-3.0, 1.0, 0.37).unwrap(), 0.0);
        assert_abs_diff_eq!(gamma_cdf(1.0, 1.0, LN_2).unwrap(), 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(
            gamma_cdf(1921.0, 1.0, 1.0 / 1921.0).unwrap(),
            1.0 - (-1.0f64).exp(),
            epsilon = 1e-12
        );
        assert!(gamma_cdf(1.0, 0.0, 1.0).is_err());
        assert!(gamma_cdf(1.0, 1.0, -2.0).is_err());
    }

    #[test]
    fn pmf_examples() {
        let model = LengthModel::new(1.0, LN_2, 2, 100).unwrap();
        assert_abs_diff_eq!(model.pmf(1).unwrap(), 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(model.pmf(2).unwrap(), 0.25, epsilon = 1e-12);
        assert!(model.pmf(0).is_err());
    }

    #[test]
    fn pmf_sum_telescopes_to_cdf() {
        let model = LengthModel::default();
        let total: f64 = (1..=40_000).map(|t| model.pmf(t).unwrap()).sum();
        assert_abs_diff_eq!(total, model.cdf(40_000.0), epsilon = 1e-9);
    }

    #[test]
    fn pmf_is_monotone_decreasing_for_unit_shape() {
        let model = LengthModel::default();
        let mut prev = model.pmf(1).unwrap();
        for t in 2..=2_000 {
            let next = model.pmf(t).unwrap();
            assert!(next <= prev);
            prev = next;
        }
    }

    /// For k = 1 the pmf has the exact closed form
    /// `e^{−λ(t−1)} − e^{−λt}`; the generic incomplete-gamma path must agree.
    #[test]
    fn unit_shape_closed_form_agreement() {
        let lambda = 1.0 / 1921.0;
        let model = LengthModel::new(1.0, lambda, 2, 20_000).unwrap();
        for t in (1..=20_000).step_by(97) {
            let closed = (-lambda * (t as f64 - 1.0)).exp() - (-lambda * t as f64).exp();
            assert_abs_diff_eq!(model.pmf(t).unwrap(), closed, epsilon = 1e-12);
        }
    }

    #[test]
    fn cdf_is_nondecreasing() {
        for k in [0.5, 1.0, 2.5] {
            let mut prev = 0.0;
            for i in 0..200 {
                let x = i as f64 * 37.0;
                let c = gamma_cdf(x, k, 1.0 / 500.0).unwrap();
                assert!(c >= prev);
                assert!((0.0..=1.0).contains(&c));
                prev = c;
            }
        }
    }

    #[test]
    fn degenerate_window_always_returns_it() {
        let model = LengthModel::new(1.0, 1.0 / 1921.0, 1_000, 1_000).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            assert_eq!(model.sample_length(&mut rng), 1_000);
        }
    }

    #[test]
    fn sampler_stays_in_window_and_is_deterministic() {
        let model = LengthModel::default();
        let draw = |seed: u64| -> Vec<u64> {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..500).map(|_| model.sample_length(&mut rng)).collect()
        };
        let a = draw(11);
        assert_eq!(a, draw(11));
        assert_ne!(a, draw(12));
        for &t in &a {
            assert!((model.t_min()..=model.t_max()).contains(&t));
        }
    }

    #[test]
    fn truncated_mean_matches_sampler_roughly() {
        let model = LengthModel::default();
        let analytic = model.truncated_mean();
        assert_abs_diff_eq!(analytic, 2910.9248, epsilon = 1e-3);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let n = 20_000;
        let mean = (0..n).map(|_| model.sample_length(&mut rng)).sum::<u64>() as f64 / n as f64;
        assert_abs_diff_eq!(mean, analytic, epsilon = analytic * 0.02);
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(matches!(
            LengthModel::new(0.0, 1.0, 2, 10),
            Err(LengthModelError::InvalidShape(_))
        ));
        assert!(matches!(
            LengthModel::new(1.0, 0.0, 2, 10),
            Err(LengthModelError::InvalidRate(_))
        ));
        assert!(matches!(
            LengthModel::new(1.0, 1.0, 1, 10),
            Err(LengthModelError::InvalidWindow { .. })
        ));
        assert!(matches!(
            LengthModel::new(1.0, 1.0, 20, 10),
            Err(LengthModelError::InvalidWindow { .. })
        ));
        // A window so deep in the exponential tail that its mass underflows.
        assert!(matches!(
            LengthModel::new(1.0, 1.0, 100_000, 100_010),
            Err(LengthModelError::EmptyWindow { .. })
        ));
    }
}
