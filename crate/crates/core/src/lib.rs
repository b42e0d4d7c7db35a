//! Reversible rule-based error injection for Turkish text, with an M2
//! corpus writer, a rule-driven corrector and GEC scoring.
//!
//! Every corruption rule has an exact inverse, so each generated pair can be
//! checked by undoing its edits before it is written.

pub mod corrector;
pub mod error;
pub mod lexicon;
pub mod m2;
pub mod morphology;
pub mod pipeline;
pub mod rules;
pub mod scoring;
pub mod sentence;

pub use corrector::{correct, correct_sentence, detect, Detection};
pub use error::{Error, Result};
pub use lexicon::{Lexicon, Lexicons};
pub use m2::{AnnotatedPair, Edit};
pub use morphology::{HeuristicAnalyzer, MorphInfo, MorphProvider};
pub use pipeline::{generate_corpus, Corpus, Execution, GenerationReport, PipelineConfig};
pub use rules::{Provenance, RuleId, Rules};
pub use scoring::{score_correction, score_detection, ScoreReport};
pub use sentence::{Sentence, Tokenizer};
