//! Three-state cyclic Markov chain with closed-form entropy rates.
//!
//! The chain moves on states `{1, 2, 3}` with transition matrix
//!
//! ```text
//!         ( 0    p    1−p )
//!     M = ( 1−p  0    p   )
//!         ( p    1−p  0   )
//! ```
//!
//! i.e. from any state it steps `+1 (mod 3)` with probability `p` and
//! `+2 (mod 3)` otherwise. `M` is doubly stochastic, so the stationary
//! distribution is uniform. The chain is reversible exactly at `p = 1/2`;
//! elsewhere it produces entropy at rate `e_p(p) = (2p−1) ln(p/(1−p))`.
//! Closed forms for `h`, `h_R` and `e_p` make the chain a ground-truth
//! source for validating the matching-time estimators.
//!
//! Simulated states are encoded as symbols `0, 1, 2` (state `i+1` ↔ code
//! `i`) over the dense 3-symbol alphabet.

use crate::estimators::{EstimateError, SampleSet};
use crate::lengths::LengthModel;
use crate::matching::{extract_sample, Alphabet, MatchingError, SymbolSequence};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MarkovError {
    #[error("transition parameter must lie in [0, 1], got {0}")]
    InvalidProbability(f64),

    #[error("entropy closed forms require p strictly inside (0, 1), got {0}")]
    OutsideOpenUnitInterval(f64),

    #[error("simulated sequences must have length >= 2, got {0}")]
    LengthTooShort(u64),

    #[error("need at least one realization")]
    NoRealizations,

    #[error(transparent)]
    Matching(#[from] MatchingError),

    #[error(transparent)]
    Estimate(#[from] EstimateError),
}

/// The parameterized three-state chain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarkovChainSpec {
    p: f64,
}

impl MarkovChainSpec {
    pub fn new(p: f64) -> Result<Self, MarkovError> {
        if !(0.0..=1.0).contains(&p) {
            return Err(MarkovError::InvalidProbability(p));
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// Row-stochastic (and column-stochastic) transition matrix.
    pub fn transition_matrix(&self) -> [[f64; 3]; 3] {
        let p = self.p;
        let q = 1.0 - p;
        [[0.0, p, q], [q, 0.0, p], [p, q, 0.0]]
    }

    /// Uniform stationary distribution of the doubly stochastic matrix.
    pub fn stationary_distribution(&self) -> [f64; 3] {
        [1.0 / 3.0; 3]
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::of_size(3).expect("3 is a valid alphabet size")
    }

    /// Simulates one realization of `length` symbols. The initial state is
    /// drawn from the stationary distribution; the sequence is fully
    /// determined by the RNG state.
    pub fn simulate(
        &self,
        length: u64,
        rng: &mut impl Rng,
    ) -> Result<SymbolSequence, MarkovError> {
        if length < 2 {
            return Err(MarkovError::LengthTooShort(length));
        }
        let mut data = Vec::with_capacity(length as usize);
        let mut state: u8 = rng.gen_range(0..3);
        data.push(state);
        for _ in 1..length {
            let step = if rng.gen::<f64>() < self.p { 1 } else { 2 };
            state = (state + step) % 3;
            data.push(state);
        }
        Ok(SymbolSequence::new(data, self.alphabet())?)
    }
}

fn require_open_unit(p: f64) -> Result<(), MarkovError> {
    if !(p > 0.0 && p < 1.0) {
        return Err(MarkovError::OutsideOpenUnitInterval(p));
    }
    Ok(())
}

/// Exact entropy rate `h(p) = −p ln p − (1−p) ln(1−p)`, nats/symbol.
pub fn exact_entropy_rate(p: f64) -> Result<f64, MarkovError> {
    require_open_unit(p)?;
    Ok(-p * p.ln() - (1.0 - p) * (1.0 - p).ln())
}

/// Exact reversed entropy rate `h_R(p) = −(1−p) ln p − p ln(1−p)`,
/// nats/symbol.
pub fn exact_reversed_entropy_rate(p: f64) -> Result<f64, MarkovError> {
    require_open_unit(p)?;
    Ok(-(1.0 - p) * p.ln() - p * (1.0 - p).ln())
}

/// Exact entropy production rate `e_p(p) = (2p−1) ln(p/(1−p))`, nats/symbol.
/// Zero exactly at `p = 1/2`, positive elsewhere on `(0, 1)`.
pub fn exact_entropy_production(p: f64) -> Result<f64, MarkovError> {
    require_open_unit(p)?;
    Ok((2.0 * p - 1.0) * (p / (1.0 - p)).ln())
}

/// One row of a closed-form sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExactRates {
    pub p: f64,
    pub h: f64,
    pub h_r: f64,
    pub e_p: f64,
}

/// Evaluates the three closed forms on a grid of parameters.
pub fn sweep_exact(grid: &[f64]) -> Result<Vec<ExactRates>, MarkovError> {
    grid.iter()
        .map(|&p| {
            Ok(ExactRates {
                p,
                h: exact_entropy_rate(p)?,
                h_r: exact_reversed_entropy_rate(p)?,
                e_p: exact_entropy_production(p)?,
            })
        })
        .collect()
}

/// Length policy for simulated realizations.
#[derive(Debug, Clone, PartialEq)]
pub enum LengthSpec {
    /// Every realization has the same length.
    Fixed(u64),
    /// Lengths drawn from a truncated discrete Gamma model.
    Random(LengthModel),
}

/// A reproducible multi-realization experiment: `m` independent realizations
/// of the chain, each reduced to its matching-time sample.
///
/// Realization `i` draws from stream `i` of a ChaCha8 generator keyed with
/// `seed` (length first when random, then the initial state, then the
/// transitions), so runs are reproducible and realizations can be generated
/// in parallel in any order.
#[derive(Debug, Clone, PartialEq)]
pub struct SimulationConfig {
    pub p: f64,
    pub lengths: LengthSpec,
    pub m: usize,
    pub seed: u64,
}

/// Runs the experiment described by `cfg` and pools the per-realization
/// samples into a [`SampleSet`]. Deterministic in `cfg` regardless of worker
/// count.
pub fn run_simulation(cfg: &SimulationConfig) -> Result<SampleSet, MarkovError> {
    if cfg.m == 0 {
        return Err(MarkovError::NoRealizations);
    }
    let chain = MarkovChainSpec::new(cfg.p)?;
    if let LengthSpec::Fixed(t) = cfg.lengths {
        if t < 2 {
            return Err(MarkovError::LengthTooShort(t));
        }
    }
    let samples = (0..cfg.m)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(i as u64);
            let t = match &cfg.lengths {
                LengthSpec::Fixed(t) => *t,
                LengthSpec::Random(model) => model.sample_length(&mut rng),
            };
            let x = chain.simulate(t, &mut rng)?;
            Ok(extract_sample(&x)?)
        })
        .collect::<Result<Vec<_>, MarkovError>>()?;
    Ok(SampleSet::new(samples)?)
}
