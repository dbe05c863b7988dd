//! Maximum-likelihood entropy estimators over inhomogeneous matching-time
//! samples.
//!
//! The input is a set of `(ℓ⁺, ℓ⁻, t)` observations in which every sequence
//! may have its own length `t_i` — the samples come from different
//! distributions, but all of them are parameterized by the same entropy rate.
//! Modelling `ℓ_i / ln t_i` as normal with mean `1/h` and variance
//! `σ² / (h³ ln t_i)` gives closed-form ML estimates:
//!
//! ```text
//! ĥ  = Σ ln t_i / Σ ℓ_i⁺          σ̂²  = ĥ² (ĥ ĉ⁺ − â⁺)
//! ĥ_R = Σ ln t_i / Σ ℓ_i⁻          σ̂²_R = ĥ_R² (ĥ_R ĉ⁻ − â⁻)
//! ```
//!
//! with sample functions `â± = mean(ℓ_i±)` and `ĉ± = mean((ℓ_i±)²/ln t_i)`.
//! The finite-length error is `ε̂² = (σ̂²/ĥ) · mean(1/ln t_i)`; it does not
//! vanish with the number of samples, only as the `t_i` grow. The entropy
//! production rate is reported as `ê_p = ĥ_R − ĥ`.
//!
//! None of the estimates depends on the distribution of the lengths
//! themselves; fitting a length model (see [`fit_length_rate`]) is a fully
//! decoupled problem.

use crate::matching::MatchingSample;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EstimateError {
    #[error("sample set must contain at least one sample")]
    EmptySampleSet,

    #[error("length list must be nonempty")]
    EmptyLengths,

    #[error("lengths must be >= 1, got {0}")]
    InvalidLength(u64),

    #[error("variance estimate {sigma2} is negative: the normal model is inconsistent with this sample")]
    DegenerateVariance { sigma2: f64 },
}

/// Which matching time a quantity is estimated from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `ℓ⁺` samples; estimates the entropy rate `h`.
    Forward,
    /// `ℓ⁻` samples; estimates the reversed entropy rate `h_R`.
    Reversed,
}

impl MatchingSample {
    fn ell(&self, direction: Direction) -> u64 {
        match direction {
            Direction::Forward => self.ell_plus(),
            Direction::Reversed => self.ell_minus(),
        }
    }
}

/// A nonempty collection of matching-time samples, possibly with different
/// sequence lengths `t_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleSet {
    samples: Vec<MatchingSample>,
}

impl SampleSet {
    pub fn new(samples: Vec<MatchingSample>) -> Result<Self, EstimateError> {
        if samples.is_empty() {
            return Err(EstimateError::EmptySampleSet);
        }
        Ok(Self { samples })
    }

    /// Number of samples `m` (always >= 1).
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn samples(&self) -> &[MatchingSample] {
        &self.samples
    }

    /// Arithmetic mean of the sequence lengths.
    pub fn mean_length(&self) -> f64 {
        let sum: u64 = self.samples.iter().map(|s| s.t()).sum();
        sum as f64 / self.samples.len() as f64
    }

    /// Mean of `ln t_i` (the sample function `b̂`).
    pub fn mean_log_length(&self) -> f64 {
        self.samples.iter().map(|s| (s.t() as f64).ln()).sum::<f64>() / self.samples.len() as f64
    }
}

/// The sample functions entering the variance estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleFunctions {
    /// `â = mean(ℓ_i)`.
    pub a_hat: f64,
    /// `b̂ = mean(ln t_i)`.
    pub b_hat: f64,
    /// `ĉ = mean(ℓ_i² / ln t_i)`.
    pub c_hat: f64,
}

/// ML entropy-rate estimate `Σ ln t_i / Σ ℓ_i` for the chosen direction, in
/// nats per symbol. Finite and positive for every valid sample set.
pub fn estimate_entropy_rate(set: &SampleSet, direction: Direction) -> f64 {
    let log_sum: f64 = set.samples().iter().map(|s| (s.t() as f64).ln()).sum();
    let ell_sum: u64 = set.samples().iter().map(|s| s.ell(direction)).sum();
    log_sum / ell_sum as f64
}

/// The sample functions `(â, b̂, ĉ)` for the chosen direction.
pub fn sample_functions(set: &SampleSet, direction: Direction) -> SampleFunctions {
    let m = set.len() as f64;
    let mut a = 0.0;
    let mut b = 0.0;
    let mut c = 0.0;
    for s in set.samples() {
        let ell = s.ell(direction) as f64;
        let log_t = (s.t() as f64).ln();
        a += ell;
        b += log_t;
        c += ell * ell / log_t;
    }
    SampleFunctions {
        a_hat: a / m,
        b_hat: b / m,
        c_hat: c / m,
    }
}

/// Variance parameter estimate `σ̂² = ĥ²(ĥ ĉ − â)`.
///
/// May be negative on pathological small samples; the value is returned as
/// computed (never clamped) so that callers can flag the inconsistency — a
/// negative σ̂² means the normal model does not describe the sample.
pub fn estimate_sigma2(set: &SampleSet, direction: Direction) -> f64 {
    let h = estimate_entropy_rate(set, direction);
    let f = sample_functions(set, direction);
    h * h * (h * f.c_hat - f.a_hat)
}

/// Finite-length error `ε̂ = sqrt((σ̂²/ĥ) · mean(1/ln t_i))`, in nats per
/// symbol.
///
/// This error stems from the finiteness of the underlying sequences and does
/// not shrink as more samples are added; it vanishes only as the `t_i` grow.
/// Returns [`EstimateError::DegenerateVariance`] when `σ̂² < 0`.
pub fn estimate_error(set: &SampleSet, direction: Direction) -> Result<f64, EstimateError> {
    let sigma2 = estimate_sigma2(set, direction);
    if sigma2 < 0.0 {
        return Err(EstimateError::DegenerateVariance { sigma2 });
    }
    let h = estimate_entropy_rate(set, direction);
    let mean_inv_log: f64 = set
        .samples()
        .iter()
        .map(|s| 1.0 / (s.t() as f64).ln())
        .sum::<f64>()
        / set.len() as f64;
    Ok((sigma2 / h * mean_inv_log).sqrt())
}

/// Full set of estimates derived from one sample set.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyReport {
    /// Entropy rate estimate ĥ, nats/symbol.
    pub h_hat: f64,
    /// Reversed entropy rate estimate ĥ_R, nats/symbol.
    pub h_r_hat: f64,
    /// Entropy production rate ê_p = ĥ_R − ĥ, nats/symbol.
    pub ep_hat: f64,
    /// Variance parameter σ̂² of the forward direction.
    pub sigma2_hat: f64,
    /// Variance parameter σ̂²_R of the reversed direction.
    pub sigma2_r_hat: f64,
    /// Finite-length error on ĥ; `None` when σ̂² < 0 (degenerate variance).
    pub err_h: Option<f64>,
    /// Finite-length error on ĥ_R; `None` when σ̂²_R < 0.
    pub err_h_r: Option<f64>,
    /// Number of samples.
    pub m: usize,
    /// Mean of ln t_i.
    pub mean_log_t: f64,
}

impl EntropyReport {
    /// True when either variance estimate came out negative, i.e. the normal
    /// model is inconsistent with the sample (typically very short
    /// sequences).
    pub fn degenerate_variance(&self) -> bool {
        self.sigma2_hat < 0.0 || self.sigma2_r_hat < 0.0
    }

    /// True when ĥ exceeds `ln(alphabet size)` by more than the estimated
    /// finite-length error — a sanity flag, not an enforced bound.
    pub fn exceeds_alphabet_bound(&self, alphabet_size: usize) -> bool {
        self.h_hat > (alphabet_size as f64).ln() + self.err_h.unwrap_or(0.0)
    }
}

/// Computes every estimate for a sample set. `ep_hat` is exactly
/// `h_r_hat − h_hat`.
pub fn full_report(set: &SampleSet) -> EntropyReport {
    let h_hat = estimate_entropy_rate(set, Direction::Forward);
    let h_r_hat = estimate_entropy_rate(set, Direction::Reversed);
    EntropyReport {
        h_hat,
        h_r_hat,
        ep_hat: h_r_hat - h_hat,
        sigma2_hat: estimate_sigma2(set, Direction::Forward),
        sigma2_r_hat: estimate_sigma2(set, Direction::Reversed),
        err_h: estimate_error(set, Direction::Forward).ok(),
        err_h_r: estimate_error(set, Direction::Reversed).ok(),
        m: set.len(),
        mean_log_t: set.mean_log_length(),
    }
}

/// ML rate of the exponential (shape-1 Gamma) length model: `λ̂ = 1/mean(t_i)`.
///
/// Length-model fitting is decoupled from entropy estimation: the likelihood
/// factorizes, so the length parameter is estimated from the lengths alone.
pub fn fit_length_rate(lengths: &[u64]) -> Result<f64, EstimateError> {
    if lengths.is_empty() {
        return Err(EstimateError::EmptyLengths);
    }
    if let Some(&bad) = lengths.iter().find(|&&t| t < 1) {
        return Err(EstimateError::InvalidLength(bad));
    }
    let sum: u64 = lengths.iter().sum();
    Ok(lengths.len() as f64 / sum as f64)
}
