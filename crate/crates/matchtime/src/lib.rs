//! Entropy rate, reversed entropy rate and entropy production (irreversibility)
//! estimation for symbolic sequences via matching-time statistics.
//!
//! The pipeline runs in three stages:
//!
//! 1. [`matching`] turns each finite symbolic sequence into a matching time
//!    `L_t⁺` and a reversed matching time `L_t⁻` (linear-time, with quadratic
//!    reference oracles for differential testing).
//! 2. [`estimators`] pools the resulting `(ℓ⁺, ℓ⁻, t)` samples — which may
//!    come from sequences of *different* lengths — into maximum-likelihood
//!    estimates of the entropy rate `h`, the reversed entropy rate `h_R`, the
//!    entropy production rate `e_p = h_R − h`, plus variance parameters and
//!    finite-length error bars.
//! 3. Sources of sequences: [`markov`] (a three-state chain with closed-form
//!    ground truth, for validation), [`lengths`] (a discrete Gamma model for
//!    random sequence lengths) and [`genomics`] (FASTA ingestion of DNA
//!    coding sequences grouped per chromosome).
//!
//! All estimators use natural logarithms; rates are in nats per symbol.

#![forbid(unsafe_code)]

pub mod estimators;
pub mod genomics;
pub mod lengths;
pub mod markov;
pub mod matching;

pub use estimators::{full_report, Direction, EntropyReport, SampleSet};
pub use matching::{extract_sample, Alphabet, MatchingSample, SymbolSequence};
