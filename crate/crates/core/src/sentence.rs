//! Tokenized sentences.
//!
//! Tokens are whitespace-separated words with clause and sentence-final
//! punctuation split off. Abbreviations that carry their own period
//! (`Alm.`) keep it when the tokenizer is told about them.

use std::collections::HashSet;
use std::fmt;

use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};

/// Punctuation split off the edges of a whitespace token.
const EDGE_PUNCT: &[char] = &[
    '.', ',', ';', ':', '!', '?', '"', '(', ')', '[', ']', '…', '«', '»', '“', '”',
];

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Sentence {
    tokens: Vec<String>,
}

impl Sentence {
    pub fn new(tokens: Vec<String>) -> Self {
        Self { tokens }
    }

    /// Splits on single spaces only, as used in M2 `S` lines.
    pub fn from_spaced(text: &str) -> Self {
        Self::new(
            text.split(' ')
                .filter(|t| !t.is_empty())
                .map(str::to_owned)
                .collect(),
        )
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn into_tokens(self) -> Vec<String> {
        self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn token(&self, index: usize) -> Result<&str> {
        self.tokens
            .get(index)
            .map(String::as_str)
            .ok_or(Error::IndexOutOfRange {
                index,
                len: self.tokens.len(),
            })
    }

    /// Character offsets `(start, end)` of each token in [`Sentence::text`].
    pub fn char_offsets(&self) -> Vec<(usize, usize)> {
        let mut pos = 0;
        self.tokens
            .iter()
            .map(|t| {
                let start = pos;
                let end = start + t.chars().count();
                pos = end + 1;
                (start, end)
            })
            .collect()
    }

    /// Tokens joined by single spaces.
    pub fn text(&self) -> String {
        self.tokens.join(" ")
    }

    /// Replaces `start..end` with `replacement`, returning the new sentence.
    pub fn splice(&self, start: usize, end: usize, replacement: &[String]) -> Sentence {
        let mut tokens = Vec::with_capacity(self.tokens.len() + replacement.len());
        tokens.extend_from_slice(&self.tokens[..start]);
        tokens.extend_from_slice(replacement);
        tokens.extend_from_slice(&self.tokens[end..]);
        Sentence::new(tokens)
    }
}

impl fmt::Display for Sentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

impl From<Vec<String>> for Sentence {
    fn from(tokens: Vec<String>) -> Self {
        Self::new(tokens)
    }
}

impl From<&[&str]> for Sentence {
    fn from(tokens: &[&str]) -> Self {
        Self::new(tokens.iter().map(|t| (*t).to_owned()).collect())
    }
}

/// NFC-normalizes and collapses runs of whitespace to single spaces.
pub fn normalize_line(line: &str) -> String {
    let nfc: String = line.nfc().collect();
    nfc.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Splits raw text into tokens.
#[derive(Debug, Clone, Default)]
pub struct Tokenizer {
    protected: HashSet<String>,
}

impl Tokenizer {
    pub fn new() -> Self {
        Self::default()
    }

    /// Tokens listed here (e.g. `Alm.`) are never split.
    pub fn with_protected<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self {
            protected: words.into_iter().map(Into::into).collect(),
        }
    }

    pub fn tokenize(&self, text: &str) -> Sentence {
        let text = normalize_line(text);
        let mut tokens = Vec::new();
        for word in text.split(' ').filter(|w| !w.is_empty()) {
            self.split_word(word, &mut tokens);
        }
        Sentence::new(tokens)
    }

    fn split_word(&self, word: &str, out: &mut Vec<String>) {
        if self.protected.contains(word) {
            out.push(word.to_owned());
            return;
        }
        let chars: Vec<char> = word.chars().collect();
        let mut lo = 0;
        let mut hi = chars.len();
        while lo < hi && EDGE_PUNCT.contains(&chars[lo]) {
            out.push(chars[lo].to_string());
            lo += 1;
        }
        let mut trailing = Vec::new();
        while hi > lo && EDGE_PUNCT.contains(&chars[hi - 1]) {
            let core: String = chars[lo..hi].iter().collect();
            if self.protected.contains(&core) {
                break;
            }
            trailing.push(chars[hi - 1].to_string());
            hi -= 1;
        }
        if lo < hi {
            out.push(chars[lo..hi].iter().collect());
        }
        out.extend(trailing.into_iter().rev());
    }
}
