//! Suffix automaton over small integer alphabets.
//!
//! The automaton accepts exactly the substrings of the pushed text and
//! answers membership queries in O(1) per symbol. Construction is the
//! standard online algorithm with suffix links and node cloning; total time
//! and space are O(n · span) for a text of n symbols.

/// Absent transition / absent suffix link.
const NONE: u32 = u32::MAX;

/// Online suffix automaton. Transitions are stored in a flat table with one
/// row of `span` entries per state, so symbol codes must be `< span`.
#[derive(Debug, Clone)]
pub struct SuffixAutomaton {
    span: usize,
    next: Vec<u32>,
    link: Vec<u32>,
    len: Vec<u32>,
    last: u32,
}

impl SuffixAutomaton {
    pub fn new(span: usize) -> Self {
        Self::with_capacity(span, 0)
    }

    /// Pre-allocates for a text of `text_len` symbols (at most `2·n − 1`
    /// states plus the root).
    pub fn with_capacity(span: usize, text_len: usize) -> Self {
        assert!(span >= 1, "alphabet span must be positive");
        let cap = 2 * text_len + 1;
        let mut sa = Self {
            span,
            next: Vec::with_capacity(cap * span),
            link: Vec::with_capacity(cap),
            len: Vec::with_capacity(cap),
            last: 0,
        };
        sa.add_state(0, NONE);
        sa
    }

    fn add_state(&mut self, len: u32, link: u32) -> u32 {
        let id = self.len.len() as u32;
        self.next.extend(std::iter::repeat(NONE).take(self.span));
        self.len.push(len);
        self.link.push(link);
        id
    }

    fn clone_state(&mut self, from: u32, len: u32) -> u32 {
        let id = self.add_state(len, self.link[from as usize]);
        let src = from as usize * self.span;
        let dst = id as usize * self.span;
        for k in 0..self.span {
            self.next[dst + k] = self.next[src + k];
        }
        id
    }

    #[inline]
    fn transition(&self, state: u32, c: u8) -> u32 {
        self.next[state as usize * self.span + c as usize]
    }

    #[inline]
    fn set_transition(&mut self, state: u32, c: u8, to: u32) {
        self.next[state as usize * self.span + c as usize] = to;
    }

    /// Number of automaton states.
    pub fn states(&self) -> usize {
        self.len.len()
    }

    /// Appends one symbol to the indexed text.
    pub fn push(&mut self, c: u8) {
        debug_assert!((c as usize) < self.span, "symbol out of span");
        let cur = self.add_state(self.len[self.last as usize] + 1, NONE);
        let mut p = self.last;
        self.last = cur;
        while p != NONE && self.transition(p, c) == NONE {
            self.set_transition(p, c, cur);
            p = self.link[p as usize];
        }
        if p == NONE {
            self.link[cur as usize] = 0;
            return;
        }
        let q = self.transition(p, c);
        if self.len[p as usize] + 1 == self.len[q as usize] {
            self.link[cur as usize] = q;
            return;
        }
        let clone = self.clone_state(q, self.len[p as usize] + 1);
        self.link[q as usize] = clone;
        self.link[cur as usize] = clone;
        while p != NONE && self.transition(p, c) == q {
            self.set_transition(p, c, clone);
            p = self.link[p as usize];
        }
    }

    /// Whether `word` is a substring of the indexed text.
    pub fn contains(&self, word: &[u8]) -> bool {
        self.longest_prefix_substring(word) == word.len()
    }

    /// Length of the longest prefix of `word` that is a substring of the
    /// indexed text.
    pub fn longest_prefix_substring(&self, word: &[u8]) -> usize {
        let mut state = 0u32;
        for (i, &c) in word.iter().enumerate() {
            if c as usize >= self.span {
                return i;
            }
            let to = self.transition(state, c);
            if to == NONE {
                return i;
            }
            state = to;
        }
        word.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn automaton_of(text: &[u8], span: usize) -> SuffixAutomaton {
        let mut sa = SuffixAutomaton::with_capacity(span, text.len());
        for &c in text {
            sa.push(c);
        }
        sa
    }

    fn is_substring(text: &[u8], word: &[u8]) -> bool {
        word.is_empty() || text.windows(word.len()).any(|w| w == word)
    }

    #[test]
    fn empty_text_accepts_only_empty_word() {
        let sa = SuffixAutomaton::new(2);
        assert!(sa.contains(&[]));
        assert!(!sa.contains(&[0]));
        assert_eq!(sa.longest_prefix_substring(&[0, 1]), 0);
    }

    #[test]
    fn small_example() {
        // text "abcbc"
        let sa = automaton_of(&[0, 1, 2, 1, 2], 3);
        for word in [&[0][..], &[1, 2], &[2, 1], &[1, 2, 1], &[0, 1, 2, 1, 2]] {
            assert!(sa.contains(word), "{word:?}");
        }
        for word in [&[2, 2][..], &[0, 0], &[2, 0], &[0, 1, 2, 1, 2, 0]] {
            assert!(!sa.contains(word), "{word:?}");
        }
        assert_eq!(sa.longest_prefix_substring(&[1, 2, 1, 1]), 3);
    }

    #[test]
    fn state_count_is_linear() {
        let text: Vec<u8> = (0..200).map(|i| (i * 7 % 3) as u8).collect();
        let sa = automaton_of(&text, 3);
        assert!(sa.states() <= 2 * text.len());
    }

    proptest! {
        /// Every queried word is accepted iff it is a substring of the text.
        #[test]
        fn membership_matches_windows(
            (text, word) in (2usize..=4).prop_flat_map(|k| {
                (
                    proptest::collection::vec(0..k as u8, 0..120),
                    proptest::collection::vec(0..k as u8, 0..12),
                )
            })
        ) {
            let sa = automaton_of(&text, 4);
            prop_assert_eq!(sa.contains(&word), is_substring(&text, &word));
        }

        /// The walk stops exactly at the first prefix that is absent.
        #[test]
        fn longest_prefix_is_exact(
            (text, word) in (2usize..=3).prop_flat_map(|k| {
                (
                    proptest::collection::vec(0..k as u8, 0..120),
                    proptest::collection::vec(0..k as u8, 0..20),
                )
            })
        ) {
            let sa = automaton_of(&text, 3);
            let got = sa.longest_prefix_substring(&word);
            let expected = (0..=word.len())
                .rev()
                .find(|&l| is_substring(&text, &word[..l]))
                .unwrap_or(0);
            prop_assert_eq!(got, expected);
        }
    }
}
