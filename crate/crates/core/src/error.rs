use std::path::PathBuf;

use crate::rules::RuleId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("lexicon {lexicon}, line {line}: {message}")]
    LexiconLine {
        lexicon: String,
        line: usize,
        message: String,
    },

    #[error("lexicon {lexicon}: duplicate key {key:?}")]
    DuplicateKey { lexicon: String, key: String },

    #[error("lexicon {lexicon}: value {value:?} is mapped from more than one key")]
    DuplicateValue { lexicon: String, value: String },

    #[error("unknown lexicon {0:?}")]
    UnknownLexicon(String),

    #[error("unknown rule id {0:?}")]
    UnknownRule(String),

    #[error("token index {index} out of range for sentence of {len} tokens")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("{rule}: not eligible at token {index}")]
    NotEligible { rule: RuleId, index: usize },

    #[error("{rule}: span {start}..{end} does not match the corrupted pattern")]
    PatternMismatch {
        rule: RuleId,
        start: usize,
        end: usize,
    },

    #[error("preceding token {0:?} has no vowel")]
    NoVowel(String),

    #[error("unsupported clitic {0:?}")]
    UnsupportedClitic(String),

    #[error("M2 record {record}, line {line}: {message}")]
    M2 {
        record: usize,
        line: usize,
        message: String,
    },

    #[error("edits overlap: {first_start}..{first_end} and {second_start}..{second_end}")]
    OverlappingEdits {
        first_start: usize,
        first_end: usize,
        second_start: usize,
        second_end: usize,
    },

    #[error("invalid config: {0}")]
    Config(String),

    #[error("input contains no sentences")]
    EmptyInput,

    #[error("length mismatch: {hypotheses} hypotheses vs {gold} gold records")]
    LengthMismatch { hypotheses: usize, gold: usize },

    #[error("empty sentence")]
    EmptySentence,
}
