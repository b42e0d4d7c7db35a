//! Surface-level Turkish phonology and morphology.
//!
//! [`HeuristicAnalyzer`] derives the per-token features the rules need
//! (harmony class, final consonant class, a few suffix shapes) without a full
//! morphological analyzer. Any other analyzer can be plugged in through
//! [`MorphProvider`].

pub mod alphabet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lexicon::{self, Lexicon, Lexicons};
use alphabet::{
    has_apostrophe, has_vowel, is_fortis, is_vowel, is_word, last_vowel, lower_char, to_lower_tr,
    vowel_class, vowel_count, Backness,
};

/// Vowel class of a token's last vowel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Harmony {
    Back { rounded: bool },
    Front { rounded: bool },
    None,
}

impl Harmony {
    pub fn of(text: &str) -> Self {
        match last_vowel(text).and_then(vowel_class) {
            Some((Backness::Back, rounded)) => Harmony::Back { rounded },
            Some((Backness::Front, rounded)) => Harmony::Front { rounded },
            None => Harmony::None,
        }
    }

    pub fn backness(self) -> Option<Backness> {
        match self {
            Harmony::Back { .. } => Some(Backness::Back),
            Harmony::Front { .. } => Some(Backness::Front),
            Harmony::None => None,
        }
    }

    pub fn rounded(self) -> bool {
        matches!(
            self,
            Harmony::Back { rounded: true } | Harmony::Front { rounded: true }
        )
    }

    /// Parses `back-unrounded`, `front-rounded` and so on.
    pub fn parse(label: &str) -> Option<Self> {
        let (backness, rounding) = label.split_once('-')?;
        let rounded = match rounding {
            "rounded" => true,
            "unrounded" => false,
            _ => return None,
        };
        match backness {
            "back" => Some(Harmony::Back { rounded }),
            "front" => Some(Harmony::Front { rounded }),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FinalClass {
    Fortis,
    Lenis,
    Vowel,
    Other,
}

impl FinalClass {
    pub fn of(token: &str) -> Self {
        match token.chars().rev().find(|c| c.is_alphabetic()) {
            None => FinalClass::Other,
            Some(c) if is_vowel(c) => FinalClass::Vowel,
            Some(c) if is_fortis(c) => FinalClass::Fortis,
            Some(c) if is_turkish_consonant(c) => FinalClass::Lenis,
            Some(_) => FinalClass::Other,
        }
    }
}

fn is_turkish_consonant(c: char) -> bool {
    "bcçdfgğhjklmnprsştvyzqwx".contains(lower_char(c))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuffixKind {
    Locative,
    CliticCandidate,
    PronounceableFuture,
}

/// A recognized suffix. `stem + surface` is always the token.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DetectedSuffix {
    pub surface: String,
    pub kind: SuffixKind,
    pub stem: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PosGuess {
    Conjunction,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MorphInfo {
    pub harmony: Harmony,
    pub final_consonant: FinalClass,
    pub syllables: usize,
    pub detected_suffix: Option<DetectedSuffix>,
    pub pos_guess: PosGuess,
    pub is_capitalized: bool,
    pub has_apostrophe: bool,
}

/// Source of per-token morphological features.
pub trait MorphProvider: Send + Sync {
    fn analyze(&self, tokens: &[String]) -> Vec<MorphInfo>;
}

/// Closed-class words that never carry a locative reading when written
/// together with a following clitic.
pub const FUNCTION_WORDS: &[&str] = &[
    "hem", "ben", "sen", "o", "biz", "siz", "onlar", "bu", "şu", "bunlar", "şunlar", "ama",
    "fakat", "şimdi", "yine", "bir", "ve", "çok", "daha", "en", "gibi", "için", "kadar", "ile",
    "ne", "ki", "ya", "da", "de", "mi", "mı", "mu", "mü", "her", "hiç", "bazen", "bile", "sonra",
    "önce", "artık", "hep", "zaten", "tabii", "belki", "ancak", "hâlâ", "bunu", "onu", "şunu",
    "bana", "sana", "ona", "bize", "size", "onlara",
];

pub fn is_function_word(token: &str) -> bool {
    FUNCTION_WORDS.contains(&to_lower_tr(token).as_str())
}

/// Suffix openings that follow the `y` buffer in future, participle and
/// converb forms.
pub const FUTURE_SUFFIXES: &[&str] = &[
    "acak", "ecek", "acağ", "eceğ", "arak", "erek", "alı", "eli", "an", "en",
];

/// The conjunction clitic `de` in the form required after `preceding`.
///
/// The vowel follows the last vowel of `preceding`; the consonant is `t` only
/// when `assimilate` is set and `preceding` ends in a voiceless consonant.
pub fn harmony_variant(base: &str, preceding: &str, assimilate: bool) -> Result<String> {
    if !matches!(base, "de" | "da" | "te" | "ta") {
        return Err(Error::UnsupportedClitic(base.to_owned()));
    }
    let backness = Harmony::of(preceding)
        .backness()
        .ok_or_else(|| Error::NoVowel(preceding.to_owned()))?;
    let consonant = if assimilate && FinalClass::of(preceding) == FinalClass::Fortis {
        't'
    } else {
        'd'
    };
    Ok(format!("{consonant}{}", alphabet::open_vowel(backness)))
}

pub fn is_de_clitic(token: &str) -> bool {
    matches!(token, "de" | "da")
}

/// Whether `stem + suffix` is a well-formed locative: the suffix vowel
/// harmonizes with the stem and its consonant assimilates to the stem's final
/// consonant.
pub fn locative_consistent(stem: &str, suffix: &str) -> bool {
    let mut chars = suffix.chars();
    let (Some(consonant), Some(vowel), None) = (chars.next(), chars.next(), chars.next()) else {
        return false;
    };
    if !matches!(consonant, 'd' | 't') || !matches!(vowel, 'a' | 'e') {
        return false;
    }
    let Some(backness) = Harmony::of(stem).backness() else {
        return false;
    };
    let expected_t = FinalClass::of(stem) == FinalClass::Fortis;
    alphabet::open_vowel(backness) == vowel && (consonant == 't') == expected_t
}

/// Char index of the stem-final `a`/`e` in a `…a-y-acak` style form, scanning
/// from the right. `close` selects the mispronounced shape (`ı`/`i`) instead.
pub fn future_vowel_position(token: &str, close: bool) -> Option<usize> {
    if has_apostrophe(token) {
        return None;
    }
    let chars: Vec<char> = token.chars().map(lower_char).collect();
    (1..chars.len().saturating_sub(2)).rev().find(|&k| {
        let v = chars[k];
        let candidates: &[char] = if close { &['ı', 'i'] } else { &['a', 'e'] };
        if !candidates.contains(&v) || chars[k + 1] != 'y' {
            return false;
        }
        if !chars[..k].iter().any(|&c| is_vowel(c)) {
            return false;
        }
        let rest: String = chars[k + 2..].iter().collect();
        let Some(suffix) = FUTURE_SUFFIXES.iter().find(|s| rest.starts_with(**s)) else {
            return false;
        };
        let suffix_backness = suffix.chars().find_map(vowel_class).map(|(b, _)| b);
        suffix_backness == vowel_class(v).map(|(b, _)| b)
    })
}

/// The default analyzer: surface heuristics plus lexicon lookups.
#[derive(Debug, Clone)]
pub struct HeuristicAnalyzer {
    loc_stems: Option<Lexicon>,
    loc_exclusions: Lexicon,
}

impl HeuristicAnalyzer {
    /// With `strict_locatives`, locative splits require the stem to be listed
    /// in the locative stem lexicon.
    pub fn new(lexicons: &Lexicons, strict_locatives: bool) -> Self {
        Self {
            loc_stems: strict_locatives.then(|| lexicons.get(lexicon::LOC_STEMS).clone()),
            loc_exclusions: lexicons.get(lexicon::LOC_EXC).clone(),
        }
    }

    /// Splits a locative form into stem and suffix, e.g. `Evde` → (`Ev`, `de`).
    pub fn locative_split(&self, token: &str) -> Option<(String, String)> {
        if has_apostrophe(token) || !is_word(token) {
            return None;
        }
        let chars: Vec<char> = token.chars().collect();
        if chars.len() < 4 {
            return None;
        }
        let stem: String = chars[..chars.len() - 2].iter().collect();
        let suffix: String = chars[chars.len() - 2..].iter().collect();
        if !stem.chars().all(char::is_alphabetic) || !has_vowel(&stem) {
            return None;
        }
        if !locative_consistent(&stem, &suffix) {
            return None;
        }
        if self.loc_exclusions.contains(&to_lower_tr(token)) {
            return None;
        }
        if let Some(stems) = &self.loc_stems {
            if !stems.contains(&to_lower_tr(&stem)) {
                return None;
            }
        }
        Some((stem, suffix))
    }

    fn detect_suffix(&self, token: &str) -> Option<DetectedSuffix> {
        if matches!(token, "de" | "da" | "ki") {
            return Some(DetectedSuffix {
                surface: token.to_owned(),
                kind: SuffixKind::CliticCandidate,
                stem: String::new(),
            });
        }
        if let Some((stem, surface)) = self.locative_split(token) {
            return Some(DetectedSuffix {
                surface,
                kind: SuffixKind::Locative,
                stem,
            });
        }
        if let Some(k) = future_vowel_position(token, false) {
            let chars: Vec<char> = token.chars().collect();
            return Some(DetectedSuffix {
                stem: chars[..=k].iter().collect(),
                surface: chars[k + 1..].iter().collect(),
                kind: SuffixKind::PronounceableFuture,
            });
        }
        None
    }

    pub fn analyze_token(&self, tokens: &[String], index: usize) -> MorphInfo {
        let token = &tokens[index];
        let detected_suffix = self.detect_suffix(token);
        let standalone_clitic = matches!(token.as_str(), "de" | "da" | "ki");
        let after_word = index > 0 && is_word(&tokens[index - 1]);
        MorphInfo {
            harmony: Harmony::of(token),
            final_consonant: FinalClass::of(token),
            syllables: vowel_count(token),
            detected_suffix,
            pos_guess: if standalone_clitic && after_word {
                PosGuess::Conjunction
            } else {
                PosGuess::Other
            },
            is_capitalized: token
                .chars()
                .find(|c| c.is_alphabetic())
                .is_some_and(char::is_uppercase),
            has_apostrophe: has_apostrophe(token),
        }
    }
}

impl MorphProvider for HeuristicAnalyzer {
    fn analyze(&self, tokens: &[String]) -> Vec<MorphInfo> {
        (0..tokens.len())
            .map(|i| self.analyze_token(tokens, i))
            .collect()
    }
}
