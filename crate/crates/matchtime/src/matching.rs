//! Matching times of symbolic sequences.
//!
//! For a sequence `x = x_0 … x_{n−1}` the *matching time* `L⁺` is the shortest
//! prefix length `ℓ` such that `x_0^{ℓ−1}` occurs at no start position
//! `j ∈ [1, n−ℓ]`, and the *reversed matching time* `L⁻` is the shortest `ℓ`
//! such that the time-reversed prefix `x_{ℓ−1} … x_0` occurs at no such
//! position. The trivial self-match at `j = 0` is excluded in both cases, so
//! both quantities exist and lie in `[1, n]` (`ℓ = n` never fits at `j ≥ 1`).
//!
//! `L⁺` is computed from the Z-array and `L⁻` by walking the prefix of `x`
//! through a suffix automaton of the truncated reversal of `x`; both run in
//! linear time. The `naive_*` double-loop transcriptions of the definitions
//! serve as oracles for differential testing.

pub mod automaton;

use automaton::SuffixAutomaton;
use thiserror::Error;

/// Errors from alphabet, sequence and sample construction.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error("alphabet must have between 2 and 256 symbols, got {0}")]
    BadAlphabetSize(usize),

    #[error("alphabet symbols must be distinct (symbol {0} repeats)")]
    DuplicateSymbol(u8),

    #[error("sequence must contain at least one symbol")]
    EmptySequence,

    #[error("symbol {symbol} at position {position} is not in the alphabet")]
    SymbolOutsideAlphabet { symbol: u8, position: usize },

    #[error("sequence of length {0} is too short to sample (need length >= 2)")]
    SequenceTooShort(usize),

    #[error("invalid sample: need 1 <= ell <= t and t >= 2, got ell+={ell_plus}, ell-={ell_minus}, t={t}")]
    InvalidSample { ell_plus: u64, ell_minus: u64, t: u64 },
}

/// A finite set of symbol codes. Codes are arbitrary distinct `u8` values;
/// sequences are validated against the alphabet at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<u8>,
    membership: [u64; 4],
    span: usize,
}

impl Alphabet {
    /// Builds an alphabet from an explicit list of symbol codes.
    pub fn new(symbols: impl Into<Vec<u8>>) -> Result<Self, MatchingError> {
        let symbols = symbols.into();
        if symbols.len() < 2 || symbols.len() > 256 {
            return Err(MatchingError::BadAlphabetSize(symbols.len()));
        }
        let mut membership = [0u64; 4];
        let mut span = 0usize;
        for &s in &symbols {
            let (word, bit) = (s as usize / 64, s as usize % 64);
            if membership[word] >> bit & 1 == 1 {
                return Err(MatchingError::DuplicateSymbol(s));
            }
            membership[word] |= 1 << bit;
            span = span.max(s as usize + 1);
        }
        Ok(Self {
            symbols,
            membership,
            span,
        })
    }

    /// The dense alphabet `{0, 1, …, size−1}`.
    pub fn of_size(size: usize) -> Result<Self, MatchingError> {
        if size < 2 || size > 256 {
            return Err(MatchingError::BadAlphabetSize(size));
        }
        Self::new((0..size as u16).map(|s| s as u8).collect::<Vec<_>>())
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn contains(&self, symbol: u8) -> bool {
        self.membership[symbol as usize / 64] >> (symbol as usize % 64) & 1 == 1
    }

    /// One more than the largest symbol code; transition-table stride for
    /// indexes built over sequences of this alphabet.
    pub(crate) fn span(&self) -> usize {
        self.span
    }
}

/// A nonempty sequence of symbol codes over a fixed alphabet.
///
/// Indexing is 0-based; `x_a^b` denotes the symbols at `a..=b`, read in
/// reverse when `b < a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolSequence {
    data: Vec<u8>,
    alphabet: Alphabet,
}

impl SymbolSequence {
    pub fn new(data: Vec<u8>, alphabet: Alphabet) -> Result<Self, MatchingError> {
        if data.is_empty() {
            return Err(MatchingError::EmptySequence);
        }
        for (position, &symbol) in data.iter().enumerate() {
            if !alphabet.contains(symbol) {
                return Err(MatchingError::SymbolOutsideAlphabet { symbol, position });
            }
        }
        Ok(Self { data, alphabet })
    }

    /// Number of symbols `n` (always >= 1).
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.data
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
}

/// One matching-time observation: `(ℓ⁺, ℓ⁻, t)` extracted from a single
/// sequence of length `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchingSample {
    ell_plus: u64,
    ell_minus: u64,
    t: u64,
}

impl MatchingSample {
    /// Validates `1 <= ℓ± <= t` and `t >= 2` (`ln t` must be bounded away
    /// from zero for estimation).
    pub fn new(ell_plus: u64, ell_minus: u64, t: u64) -> Result<Self, MatchingError> {
        let ell_ok = |ell| (1..=t).contains(&ell);
        if t < 2 || !ell_ok(ell_plus) || !ell_ok(ell_minus) {
            return Err(MatchingError::InvalidSample {
                ell_plus,
                ell_minus,
                t,
            });
        }
        Ok(Self {
            ell_plus,
            ell_minus,
            t,
        })
    }

    pub fn ell_plus(&self) -> u64 {
        self.ell_plus
    }

    pub fn ell_minus(&self) -> u64 {
        self.ell_minus
    }

    pub fn t(&self) -> u64 {
        self.t
    }
}

pub(crate) fn z_array_slice(s: &[u8]) -> Vec<usize> {
    let n = s.len();
    let mut z = vec![0usize; n];
    z[0] = n;
    // [l, r) is the rightmost window known to match a prefix.
    let (mut l, mut r) = (0usize, 0usize);
    for i in 1..n {
        let mut k = if i < r { z[i - l].min(r - i) } else { 0 };
        while i + k < n && s[k] == s[i + k] {
            k += 1;
        }
        z[i] = k;
        if i + k > r {
            l = i;
            r = i + k;
        }
    }
    z
}

/// Z-array of `x`: `Z[0] = n` and, for `j >= 1`, `Z[j]` is the length of the
/// longest common prefix of `x` and the suffix of `x` starting at `j`.
/// Runs in O(n).
pub fn z_array(x: &SymbolSequence) -> Vec<usize> {
    z_array_slice(x.symbols())
}

/// Matching time `L⁺`: the shortest `ℓ >= 1` such that the prefix
/// `x_0^{ℓ−1}` occurs at no start position `j ∈ [1, n−ℓ]`.
///
/// Equals `1 + max_{j>=1} Z[j]` (an occurrence of the length-`Z[j]` prefix at
/// `j` contains every shorter prefix, and no longer prefix occurs anywhere).
pub fn matching_time_forward(x: &SymbolSequence) -> usize {
    let z = z_array_slice(x.symbols());
    1 + z[1..].iter().copied().max().unwrap_or(0)
}

/// Reversed matching time `L⁻`: the shortest `ℓ >= 1` such that the
/// time-reversed prefix `x_{ℓ−1} x_{ℓ−2} … x_0` occurs at no start position
/// `j ∈ [1, n−ℓ]`.
///
/// An occurrence of the reversed prefix at `j ∈ [1, n−ℓ]` in `x` is, after
/// reversing positions, exactly an occurrence of the *forward* prefix inside
/// the first `n−1` symbols of `reverse(x)`. So `L⁻` is found by walking the
/// prefix of `x` through a suffix automaton of that truncated reversal.
pub fn matching_time_reversed(x: &SymbolSequence) -> usize {
    let s = x.symbols();
    let mut sa = SuffixAutomaton::with_capacity(x.alphabet().span(), s.len() - 1);
    for &c in s[1..].iter().rev() {
        sa.push(c);
    }
    // The length-n prefix cannot fit in an (n−1)-symbol text, so the walk
    // always stops before the end of x.
    sa.longest_prefix_substring(s) + 1
}

/// Literal double-loop transcription of the `L⁺` definition; oracle for
/// differential tests.
pub fn naive_matching_time_forward(x: &SymbolSequence) -> usize {
    let s = x.symbols();
    let n = s.len();
    for ell in 1..=n {
        let word = &s[..ell];
        let recurs = (1..=n - ell).any(|j| &s[j..j + ell] == word);
        if !recurs {
            return ell;
        }
    }
    unreachable!("ell = n admits no start position j >= 1")
}

/// Literal double-loop transcription of the `L⁻` definition; oracle for
/// differential tests.
pub fn naive_matching_time_reversed(x: &SymbolSequence) -> usize {
    let s = x.symbols();
    let n = s.len();
    for ell in 1..=n {
        let word: Vec<u8> = s[..ell].iter().rev().copied().collect();
        let occurs = (1..=n - ell).any(|j| s[j..j + ell] == word[..]);
        if !occurs {
            return ell;
        }
    }
    unreachable!("ell = n admits no start position j >= 1")
}

/// Computes the `(L⁺, L⁻, n)` sample of one sequence. Requires `n >= 2`.
pub fn extract_sample(x: &SymbolSequence) -> Result<MatchingSample, MatchingError> {
    if x.len() < 2 {
        return Err(MatchingError::SequenceTooShort(x.len()));
    }
    MatchingSample::new(
        matching_time_forward(x) as u64,
        matching_time_reversed(x) as u64,
        x.len() as u64,
    )
}
