//! The writing-rule registry.
//!
//! Each rule is a pair of span transformations: `propose` corrupts a clean
//! span anchored at a token, `restore` recognizes a corrupted span and maps it
//! back. A proposal is only offered when `restore` inverts it exactly in
//! context, so every eligible site is reversible by construction.

mod clitic;
mod lexical;
mod orthography;
mod verbs;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lexicon::{self, Lexicons};
use crate::m2::Edit;
use crate::morphology::{HeuristicAnalyzer, MorphInfo, MorphProvider};
use crate::sentence::{Sentence, Tokenizer};

/// Rule identifiers, ordered by their catalog number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RuleId {
    ConjDeSep,
    ConjDeVh,
    ConjDeAr,
    Yada,
    ConjDeApos,
    CaseDe,
    ConjKiSep,
    ConjKiExc,
    ForeignR1,
    PronouncExc,
    BisyllHaplVow,
    BisyllHaplVowExc,
    ForeignR2,
    ForeignR2Exc,
    LightVerbSep,
    LightVerbAdj,
    CompVerbAdj,
    PronounExc,
    SentCap,
    Capped,
    Abbrev,
}

impl RuleId {
    pub const ALL: [RuleId; 21] = [
        RuleId::ConjDeSep,
        RuleId::ConjDeVh,
        RuleId::ConjDeAr,
        RuleId::Yada,
        RuleId::ConjDeApos,
        RuleId::CaseDe,
        RuleId::ConjKiSep,
        RuleId::ConjKiExc,
        RuleId::ForeignR1,
        RuleId::PronouncExc,
        RuleId::BisyllHaplVow,
        RuleId::BisyllHaplVowExc,
        RuleId::ForeignR2,
        RuleId::ForeignR2Exc,
        RuleId::LightVerbSep,
        RuleId::LightVerbAdj,
        RuleId::CompVerbAdj,
        RuleId::PronounExc,
        RuleId::SentCap,
        RuleId::Capped,
        RuleId::Abbrev,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::ConjDeSep => "CONJ_DE_SEP",
            RuleId::ConjDeVh => "CONJ_DE_VH",
            RuleId::ConjDeAr => "CONJ_DE_AR",
            RuleId::Yada => "YADA",
            RuleId::ConjDeApos => "CONJ_DE_APOS",
            RuleId::CaseDe => "CASE_DE",
            RuleId::ConjKiSep => "CONJ_KI_SEP",
            RuleId::ConjKiExc => "CONJ_KI_EXC",
            RuleId::ForeignR1 => "FOREIGN_R1",
            RuleId::PronouncExc => "PRONOUNC_EXC",
            RuleId::BisyllHaplVow => "BISYLL_HAPL_VOW",
            RuleId::BisyllHaplVowExc => "BISYLL_HAPL_VOW_EXC",
            RuleId::ForeignR2 => "FOREIGN_R2",
            RuleId::ForeignR2Exc => "FOREIGN_R2_EXC",
            RuleId::LightVerbSep => "LIGHT_VERB_SEP",
            RuleId::LightVerbAdj => "LIGHT_VERB_ADJ",
            RuleId::CompVerbAdj => "COMP_VERB_ADJ",
            RuleId::PronounExc => "PRONOUN_EXC",
            RuleId::SentCap => "SENT_CAP",
            RuleId::Capped => "CAPPED",
            RuleId::Abbrev => "ABBREV",
        }
    }

    /// Catalog number of the rule.
    pub fn number(self) -> u8 {
        match self {
            RuleId::ConjDeSep => 1,
            RuleId::ConjDeVh => 2,
            RuleId::ConjDeAr => 3,
            RuleId::Yada => 4,
            RuleId::ConjDeApos => 5,
            RuleId::CaseDe => 6,
            RuleId::ConjKiSep => 7,
            RuleId::ConjKiExc => 8,
            RuleId::ForeignR1 => 9,
            RuleId::PronouncExc => 12,
            RuleId::BisyllHaplVow => 13,
            RuleId::BisyllHaplVowExc => 14,
            RuleId::ForeignR2 => 15,
            RuleId::ForeignR2Exc => 16,
            RuleId::LightVerbSep => 17,
            RuleId::LightVerbAdj => 18,
            RuleId::CompVerbAdj => 20,
            RuleId::PronounExc => 22,
            RuleId::SentCap => 23,
            RuleId::Capped => 24,
            RuleId::Abbrev => 25,
        }
    }

    /// Observed annotation count used to scale the default probability.
    pub fn frequency(self) -> u32 {
        match self {
            RuleId::ConjDeSep => 12962,
            RuleId::ConjDeVh => 101,
            RuleId::ConjDeAr => 99,
            RuleId::Yada => 472,
            RuleId::ConjDeApos => 10859,
            RuleId::CaseDe => 37462,
            RuleId::ConjKiSep => 1817,
            RuleId::ConjKiExc => 1395,
            RuleId::ForeignR1 => 307,
            RuleId::PronouncExc => 12750,
            RuleId::BisyllHaplVow => 1567,
            RuleId::BisyllHaplVowExc => 866,
            RuleId::ForeignR2 => 327,
            RuleId::ForeignR2Exc => 422,
            RuleId::LightVerbSep => 460,
            RuleId::LightVerbAdj => 547,
            RuleId::CompVerbAdj => 7840,
            RuleId::PronounExc => 3867,
            RuleId::SentCap => 2613,
            RuleId::Capped => 834,
            RuleId::Abbrev => 359,
        }
    }

    /// `0.9 * frequency / max frequency`.
    pub fn default_p(self) -> f64 {
        let max = RuleId::ALL.iter().map(|r| r.frequency()).max().unwrap_or(1);
        0.9 * f64::from(self.frequency()) / f64::from(max)
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RuleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RuleId::ALL
            .iter()
            .copied()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| Error::UnknownRule(s.to_owned()))
    }
}

/// Static description of one rule.
#[derive(Debug, Clone, Serialize)]
pub struct RuleSpec {
    pub id: RuleId,
    pub description: &'static str,
    /// Tokens consumed by the forward transformation.
    pub consumes: usize,
    /// Possible token counts it emits.
    pub emits: &'static [usize],
    pub default_p: f64,
    pub required_lexicons: &'static [&'static str],
}

/// The specification of every shipped rule, in catalog order.
pub fn catalog() -> Vec<RuleSpec> {
    use lexicon::*;
    RuleId::ALL
        .iter()
        .map(|&id| {
            let (description, consumes, emits, required_lexicons): (
                &'static str,
                usize,
                &'static [usize],
                &'static [&'static str],
            ) = match id {
                RuleId::ConjDeSep => (
                    "separate clitic de/da joined onto the preceding word",
                    2,
                    &[1],
                    &[],
                ),
                RuleId::ConjDeVh => (
                    "clitic de/da given the vowel of the wrong harmony class",
                    1,
                    &[1],
                    &[],
                ),
                RuleId::ConjDeAr => (
                    "clitic de/da devoiced to te/ta after a voiceless consonant",
                    1,
                    &[1],
                    &[],
                ),
                RuleId::Yada => ("ya da written as one word", 2, &[1], &[]),
                RuleId::ConjDeApos => (
                    "clitic de/da attached to a proper noun with an apostrophe",
                    2,
                    &[1],
                    &[PERSON_NAMES],
                ),
                RuleId::CaseDe => (
                    "locative suffix split off its stem",
                    1,
                    &[2],
                    &[LOC_EXC, LOC_STEMS],
                ),
                RuleId::ConjKiSep => (
                    "separate conjunction ki joined onto the preceding word",
                    2,
                    &[1],
                    &[CONJ_KI_EXC],
                ),
                RuleId::ConjKiExc => (
                    "conventionally joined ki-words split or misspelled",
                    1,
                    &[1, 2],
                    &[CONJ_KI_EXC],
                ),
                RuleId::ForeignR1 => (
                    "vowel inserted into a word-initial consonant cluster",
                    1,
                    &[1],
                    &[FOREIGN_R1],
                ),
                RuleId::PronouncExc => (
                    "stem-final a/e raised to a close vowel before y-suffixes",
                    1,
                    &[1],
                    &[VERB_STEMS],
                ),
                RuleId::BisyllHaplVow => (
                    "dropped stem vowel reinserted before a vowel suffix",
                    1,
                    &[1],
                    &[BISYLL_HAPL_VOW],
                ),
                RuleId::BisyllHaplVowExc => (
                    "stem vowel dropped where it must stay",
                    1,
                    &[1],
                    &[BISYLL_HAPL_VOW_EXC],
                ),
                RuleId::ForeignR2 => (
                    "stem-final softening undone before a vowel suffix",
                    1,
                    &[1],
                    &[FOREIGN_R2],
                ),
                RuleId::ForeignR2Exc => (
                    "stem-final consonant softened where it must not be",
                    1,
                    &[1],
                    &[FOREIGN_R2_EXC],
                ),
                RuleId::LightVerbSep => (
                    "noun and light verb written as one word",
                    2,
                    &[1],
                    &[LIGHT_NOUNS, LIGHT_VERB_ADJ, VERB_STEMS],
                ),
                RuleId::LightVerbAdj => (
                    "fused noun + light verb split back into two words",
                    1,
                    &[2],
                    &[LIGHT_VERB_ADJ],
                ),
                RuleId::CompVerbAdj => (
                    "compound verb split before its auxiliary",
                    1,
                    &[2],
                    &[VERB_STEMS],
                ),
                RuleId::PronounExc => (
                    "conventionally joined pronoun split in two",
                    1,
                    &[2],
                    &[PRONOUN_EXC],
                ),
                RuleId::SentCap => ("sentence-initial capital lowercased", 1, &[1], &[]),
                RuleId::Capped => (
                    "circumflex dropped from a word that requires it",
                    1,
                    &[1],
                    &[CAPPED],
                ),
                RuleId::Abbrev => (
                    "abbreviation period dropped or suffix vowel misharmonized",
                    1,
                    &[1],
                    &[ABBREV],
                ),
            };
            RuleSpec {
                id,
                description,
                consumes,
                emits,
                default_p: id.default_p(),
                required_lexicons,
            }
        })
        .collect()
}

/// A span rewrite anchored at a token index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transform {
    pub consumed: usize,
    pub replacement: Vec<String>,
}

impl Transform {
    pub(crate) fn new(consumed: usize, replacement: Vec<String>) -> Self {
        Self {
            consumed,
            replacement,
        }
    }

    pub(crate) fn one(consumed: usize, token: String) -> Self {
        Self::new(consumed, vec![token])
    }
}

/// How a corrupted-pattern match was confirmed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Lexicon,
    Pattern,
}

/// Rule engine bound to a set of lexicons.
#[derive(Debug, Clone)]
pub struct Rules {
    lexicons: Lexicons,
    analyzer: HeuristicAnalyzer,
    tokenizer: Tokenizer,
}

impl Rules {
    pub fn new(lexicons: Lexicons, strict_locatives: bool) -> Self {
        let analyzer = HeuristicAnalyzer::new(&lexicons, strict_locatives);
        let tokenizer = Tokenizer::with_protected(
            lexicons
                .get(lexicon::ABBREV)
                .iter()
                .filter(|e| e.key.ends_with('.'))
                .map(|e| e.key.clone()),
        );
        Self {
            lexicons,
            analyzer,
            tokenizer,
        }
    }

    pub fn embedded() -> Result<Self> {
        Ok(Self::new(Lexicons::embedded()?, false))
    }

    pub fn lexicons(&self) -> &Lexicons {
        &self.lexicons
    }

    pub fn analyzer(&self) -> &HeuristicAnalyzer {
        &self.analyzer
    }

    /// Tokenizer that keeps the periods of known abbreviations.
    pub fn tokenizer(&self) -> &Tokenizer {
        &self.tokenizer
    }

    pub fn analyze(&self, tokens: &[String]) -> Vec<MorphInfo> {
        self.analyzer.analyze(tokens)
    }

    fn raw_propose(
        &self,
        rule: RuleId,
        tokens: &[String],
        morph: &[MorphInfo],
        i: usize,
    ) -> Option<Transform> {
        match rule {
            RuleId::ConjDeSep => clitic::de_sep_propose(tokens, morph, i),
            RuleId::ConjDeVh => clitic::de_vh_propose(tokens, morph, i),
            RuleId::ConjDeAr => clitic::de_ar_propose(tokens, morph, i),
            RuleId::Yada => clitic::yada_propose(tokens, i),
            RuleId::ConjDeApos => clitic::de_apos_propose(self, tokens, morph, i),
            RuleId::CaseDe => clitic::case_de_propose(morph, i),
            RuleId::ConjKiSep => clitic::ki_sep_propose(self, tokens, morph, i),
            RuleId::LightVerbSep => verbs::light_sep_propose(self, tokens, i),
            RuleId::CompVerbAdj => verbs::comp_propose(tokens, i),
            RuleId::PronouncExc => verbs::pronounc_propose(tokens, morph, i),
            RuleId::SentCap => orthography::sent_cap_propose(tokens, i),
            RuleId::Abbrev => orthography::abbrev_propose(self, tokens, i),
            other => lexical::engine(other)
                .expect("remaining rules are lexicon-driven")
                .propose(self, tokens, i),
        }
    }

    /// Restoration of a corrupted span anchored at `i`, if the tokens there
    /// have the shape this rule's forward transformation produces.
    pub fn restore(&self, rule: RuleId, tokens: &[String], i: usize) -> Option<Transform> {
        if i >= tokens.len() {
            return None;
        }
        match rule {
            RuleId::ConjDeSep => clitic::de_sep_restore(tokens, i),
            RuleId::ConjDeVh => clitic::de_vh_restore(tokens, i),
            RuleId::ConjDeAr => clitic::de_ar_restore(tokens, i),
            RuleId::Yada => clitic::yada_restore(tokens, i),
            RuleId::ConjDeApos => clitic::de_apos_restore(tokens, i),
            RuleId::CaseDe => clitic::case_de_restore(self, tokens, i),
            RuleId::ConjKiSep => clitic::ki_sep_restore(self, tokens, i),
            RuleId::LightVerbSep => verbs::light_sep_restore(tokens, i),
            RuleId::CompVerbAdj => verbs::comp_restore(tokens, i),
            RuleId::PronouncExc => verbs::pronounc_restore(tokens, i),
            RuleId::SentCap => orthography::sent_cap_restore(tokens, i),
            RuleId::Abbrev => orthography::abbrev_restore(self, tokens, i),
            other => lexical::engine(other)
                .expect("remaining rules are lexicon-driven")
                .restore(self, tokens, i),
        }
    }

    /// Forward corruption at `i`, offered only when [`Rules::restore`]
    /// inverts it in the resulting sentence.
    pub fn propose(
        &self,
        rule: RuleId,
        tokens: &[String],
        morph: &[MorphInfo],
        i: usize,
    ) -> Option<Transform> {
        if i >= tokens.len() {
            return None;
        }
        let t = self.raw_propose(rule, tokens, morph, i)?;
        if i + t.consumed > tokens.len() || t.replacement.is_empty() {
            return None;
        }
        let mut corrupted = Vec::with_capacity(tokens.len() + 1);
        corrupted.extend_from_slice(&tokens[..i]);
        corrupted.extend_from_slice(&t.replacement);
        corrupted.extend_from_slice(&tokens[i + t.consumed..]);
        let back = self.restore(rule, &corrupted, i)?;
        (back.consumed == t.replacement.len() && back.replacement == tokens[i..i + t.consumed])
            .then_some(t)
    }

    /// A restoration that also passes the rule's precision filter, used for
    /// detection on text of unknown origin.
    pub fn recognize(
        &self,
        rule: RuleId,
        tokens: &[String],
        i: usize,
    ) -> Option<(Transform, Provenance)> {
        let t = self.restore(rule, tokens, i)?;
        let provenance = match rule {
            RuleId::ConjDeSep => clitic::de_sep_filter(self, &t),
            RuleId::ConjDeVh | RuleId::ConjDeAr | RuleId::SentCap => Some(Provenance::Pattern),
            RuleId::Yada => Some(Provenance::Lexicon),
            RuleId::ConjDeApos => clitic::de_apos_filter(self, &t),
            RuleId::CaseDe => clitic::case_de_filter(self, &t),
            RuleId::ConjKiSep => clitic::ki_sep_filter(&t),
            RuleId::LightVerbSep => verbs::light_sep_filter(self, &t),
            RuleId::CompVerbAdj => verbs::comp_filter(self, &t),
            RuleId::PronouncExc => verbs::pronounc_filter(self, &t),
            _ => Some(Provenance::Lexicon),
        }?;
        Some((t, provenance))
    }

    pub fn is_eligible(
        &self,
        rule: RuleId,
        sentence: &Sentence,
        morph: &[MorphInfo],
        index: usize,
    ) -> Result<bool> {
        sentence.token(index)?;
        Ok(self
            .propose(rule, sentence.tokens(), morph, index)
            .is_some())
    }

    /// Corrupts the span at `index`. The edit indexes the corrupted sentence
    /// (before any other rule shifts it).
    pub fn apply_forward(
        &self,
        rule: RuleId,
        sentence: &Sentence,
        index: usize,
    ) -> Result<(Vec<String>, Edit)> {
        sentence.token(index)?;
        let morph = self.analyze(sentence.tokens());
        let t = self
            .propose(rule, sentence.tokens(), &morph, index)
            .ok_or(Error::NotEligible { rule, index })?;
        let correction = sentence.tokens()[index..index + t.consumed].join(" ");
        let edit = Edit::new(index, index + t.replacement.len(), rule, correction);
        Ok((t.replacement, edit))
    }

    /// Restores the corrupted span `start..end`.
    pub fn apply_reverse(
        &self,
        rule: RuleId,
        sentence: &Sentence,
        start: usize,
        end: usize,
    ) -> Result<Vec<String>> {
        if start >= end || end > sentence.len() {
            return Err(Error::PatternMismatch { rule, start, end });
        }
        match self.restore(rule, sentence.tokens(), start) {
            Some(t) if t.consumed == end - start => Ok(t.replacement),
            _ => Err(Error::PatternMismatch { rule, start, end }),
        }
    }
}
