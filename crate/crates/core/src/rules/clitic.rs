//! The de/da and ki clitics.

use super::{Provenance, Rules, Transform};
use crate::lexicon;
use crate::morphology::alphabet::{has_apostrophe, has_vowel, is_word, to_lower_tr, CasePattern};
use crate::morphology::{
    harmony_variant, is_de_clitic, is_function_word, FinalClass, MorphInfo, PosGuess, SuffixKind,
};

pub(super) fn letters_only(token: &str) -> bool {
    !token.is_empty() && token.chars().all(char::is_alphabetic)
}

/// Splits off the last `n` chars.
pub(super) fn split_tail(token: &str, n: usize) -> Option<(&str, &str)> {
    let (idx, _) = token.char_indices().rev().nth(n - 1)?;
    Some((&token[..idx], &token[idx..]))
}

fn is_conjunction(morph: &[MorphInfo], i: usize) -> bool {
    morph
        .get(i)
        .is_some_and(|m| m.pos_guess == PosGuess::Conjunction)
}

/// `stem` followed by clitic `de` in its harmonizing, unassimilated form.
fn takes_clitic(stem: &str, clitic: &str) -> bool {
    harmony_variant("de", stem, false).is_ok_and(|v| v == clitic)
}

fn flip_clitic_vowel(clitic: &str) -> String {
    clitic
        .chars()
        .map(|c| match c {
            'a' => 'e',
            'e' => 'a',
            other => other,
        })
        .collect()
}

pub(super) fn de_sep_propose(
    tokens: &[String],
    morph: &[MorphInfo],
    i: usize,
) -> Option<Transform> {
    let (word, clitic) = (&tokens[i], tokens.get(i + 1)?);
    if !is_de_clitic(clitic) || !is_conjunction(morph, i + 1) {
        return None;
    }
    if !letters_only(word) || to_lower_tr(word) == "ya" || !takes_clitic(word, clitic) {
        return None;
    }
    Some(Transform::one(2, format!("{word}{clitic}")))
}

pub(super) fn de_sep_restore(tokens: &[String], i: usize) -> Option<Transform> {
    let token = &tokens[i];
    if !letters_only(token) {
        return None;
    }
    let (stem, clitic) = split_tail(token, 2)?;
    if !is_de_clitic(clitic) || to_lower_tr(stem) == "ya" || !takes_clitic(stem, clitic) {
        return None;
    }
    Some(Transform::new(1, vec![stem.to_owned(), clitic.to_owned()]))
}

/// Inflectional endings a bare noun stem does not have: dative, past tense
/// and evidential.
fn looks_inflected(stem: &str) -> bool {
    let lower = to_lower_tr(stem);
    let chars: Vec<char> = lower.chars().collect();
    let n = chars.len();
    let ends = |suffixes: &[&str]| suffixes.iter().any(|s| lower.ends_with(s));
    let dative = n >= 5
        && matches!(chars[n - 1], 'a' | 'e')
        && matches!(chars[n - 2], 'n' | 'y')
        && crate::morphology::alphabet::is_vowel(chars[n - 3]);
    dative
        || ends(&[
            "dı", "di", "du", "dü", "tı", "ti", "tu", "tü", "mış", "miş", "muş", "müş",
        ])
}

pub(super) fn de_sep_filter(rules: &Rules, t: &Transform) -> Option<Provenance> {
    let (stem, clitic) = (&t.replacement[0], &t.replacement[1]);
    let lower = to_lower_tr(stem);
    // A locative on a name takes an apostrophe, and after a voiceless
    // consonant it would be -te/-ta.
    if CasePattern::of(stem) == CasePattern::Title
        && rules.lexicons().get(lexicon::PERSON_NAMES).contains(&lower)
    {
        return Some(Provenance::Lexicon);
    }
    if FinalClass::of(stem) == FinalClass::Fortis && clitic.starts_with('d') {
        return Some(Provenance::Pattern);
    }
    if rules.lexicons().get(lexicon::LOC_STEMS).contains(&lower) {
        return None;
    }
    if is_function_word(stem) {
        Some(Provenance::Lexicon)
    } else if looks_inflected(stem) {
        Some(Provenance::Pattern)
    } else {
        None
    }
}

pub(super) fn de_vh_propose(tokens: &[String], morph: &[MorphInfo], i: usize) -> Option<Transform> {
    let clitic = &tokens[i];
    if i == 0 || !is_de_clitic(clitic) || !is_conjunction(morph, i) {
        return None;
    }
    takes_clitic(&tokens[i - 1], clitic).then(|| Transform::one(1, flip_clitic_vowel(clitic)))
}

pub(super) fn de_vh_restore(tokens: &[String], i: usize) -> Option<Transform> {
    let clitic = &tokens[i];
    if i == 0 || !is_de_clitic(clitic) || !is_word(&tokens[i - 1]) {
        return None;
    }
    let fixed = flip_clitic_vowel(clitic);
    takes_clitic(&tokens[i - 1], &fixed).then(|| Transform::one(1, fixed))
}

pub(super) fn de_ar_propose(tokens: &[String], morph: &[MorphInfo], i: usize) -> Option<Transform> {
    let clitic = &tokens[i];
    if i == 0 || !is_de_clitic(clitic) || !is_conjunction(morph, i) {
        return None;
    }
    if morph[i - 1].final_consonant != FinalClass::Fortis || !takes_clitic(&tokens[i - 1], clitic) {
        return None;
    }
    Some(Transform::one(1, clitic.replacen('d', "t", 1)))
}

pub(super) fn de_ar_restore(tokens: &[String], i: usize) -> Option<Transform> {
    let clitic = &tokens[i];
    if i == 0 || !matches!(clitic.as_str(), "te" | "ta") {
        return None;
    }
    let prev = &tokens[i - 1];
    let fixed = clitic.replacen('t', "d", 1);
    (FinalClass::of(prev) == FinalClass::Fortis && takes_clitic(prev, &fixed))
        .then(|| Transform::one(1, fixed))
}

pub(super) fn yada_propose(tokens: &[String], i: usize) -> Option<Transform> {
    let (ya, da) = (&tokens[i], tokens.get(i + 1)?);
    (to_lower_tr(ya) == "ya" && da == "da").then(|| Transform::one(2, format!("{ya}da")))
}

pub(super) fn yada_restore(tokens: &[String], i: usize) -> Option<Transform> {
    let token = &tokens[i];
    if to_lower_tr(token) != "yada" {
        return None;
    }
    let (ya, da) = split_tail(token, 2)?;
    (da == "da").then(|| Transform::new(1, vec![ya.to_owned(), da.to_owned()]))
}

pub(super) fn de_apos_propose(
    rules: &Rules,
    tokens: &[String],
    morph: &[MorphInfo],
    i: usize,
) -> Option<Transform> {
    let (name, clitic) = (&tokens[i], tokens.get(i + 1)?);
    if !is_de_clitic(clitic) || !is_conjunction(morph, i + 1) {
        return None;
    }
    if !letters_only(name) || CasePattern::of(name) != CasePattern::Title {
        return None;
    }
    let sentence_initial = tokens[..i].iter().all(|t| !is_word(t));
    let known_name = rules
        .lexicons()
        .get(lexicon::PERSON_NAMES)
        .contains(&to_lower_tr(name));
    if sentence_initial && !known_name {
        return None;
    }
    takes_clitic(name, clitic).then(|| Transform::one(2, format!("{name}'{clitic}")))
}

pub(super) fn de_apos_restore(tokens: &[String], i: usize) -> Option<Transform> {
    let token = &tokens[i];
    let (name, clitic) = token.split_once('\'')?;
    if !is_de_clitic(clitic) || !letters_only(name) || CasePattern::of(name) != CasePattern::Title {
        return None;
    }
    takes_clitic(name, clitic).then(|| Transform::new(1, vec![name.to_owned(), clitic.to_owned()]))
}

pub(super) fn de_apos_filter(rules: &Rules, t: &Transform) -> Option<Provenance> {
    let name = &t.replacement[0];
    if rules
        .lexicons()
        .get(lexicon::PERSON_NAMES)
        .contains(&to_lower_tr(name))
    {
        Some(Provenance::Lexicon)
    } else if FinalClass::of(name) == FinalClass::Fortis {
        // a locative after a voiceless consonant would be spelled 'te/'ta
        Some(Provenance::Pattern)
    } else {
        None
    }
}

pub(super) fn case_de_propose(morph: &[MorphInfo], i: usize) -> Option<Transform> {
    let suffix = morph[i].detected_suffix.as_ref()?;
    (suffix.kind == SuffixKind::Locative)
        .then(|| Transform::new(1, vec![suffix.stem.clone(), suffix.surface.clone()]))
}

pub(super) fn case_de_restore(rules: &Rules, tokens: &[String], i: usize) -> Option<Transform> {
    let (stem, suffix) = (&tokens[i], tokens.get(i + 1)?);
    if !matches!(suffix.as_str(), "de" | "da" | "te" | "ta") {
        return None;
    }
    let joined = format!("{stem}{suffix}");
    let (s, x) = rules.analyzer().locative_split(&joined)?;
    (s == *stem && x == *suffix).then(|| Transform::one(2, joined))
}

pub(super) fn case_de_filter(rules: &Rules, t: &Transform) -> Option<Provenance> {
    let (stem, _) = split_tail(&t.replacement[0], 2)?;
    if CasePattern::of(stem) == CasePattern::Title
        && rules
            .lexicons()
            .get(lexicon::PERSON_NAMES)
            .contains(&to_lower_tr(stem))
    {
        return None;
    }
    rules
        .lexicons()
        .get(lexicon::LOC_STEMS)
        .contains(&to_lower_tr(stem))
        .then_some(Provenance::Lexicon)
}

fn ki_exception(rules: &Rules, stem: &str) -> bool {
    let lex = rules.lexicons().get(lexicon::CONJ_KI_EXC);
    let lower = to_lower_tr(stem);
    lex.contains(&format!("{lower}ki"))
        || lex.lookup_reverse(&format!("{lower} ki")).is_some()
        || lex.lookup_reverse(&format!("{lower}ki")).is_some()
}

pub(super) fn ki_sep_propose(
    rules: &Rules,
    tokens: &[String],
    morph: &[MorphInfo],
    i: usize,
) -> Option<Transform> {
    let (word, ki) = (&tokens[i], tokens.get(i + 1)?);
    if ki != "ki" || !is_conjunction(morph, i + 1) {
        return None;
    }
    if !letters_only(word) || !has_vowel(word) || ki_exception(rules, word) {
        return None;
    }
    Some(Transform::one(2, format!("{word}ki")))
}

pub(super) fn ki_sep_restore(rules: &Rules, tokens: &[String], i: usize) -> Option<Transform> {
    let token = &tokens[i];
    if !letters_only(token) {
        return None;
    }
    let (stem, ki) = split_tail(token, 2)?;
    if ki != "ki" || !has_vowel(stem) || ki_exception(rules, stem) {
        return None;
    }
    Some(Transform::new(1, vec![stem.to_owned(), ki.to_owned()]))
}

/// Finite verb endings that a following `ki` can only be the conjunction
/// after.
const VERBAL_ENDINGS: &[&str] = &[
    "mış", "miş", "muş", "müş", "dı", "di", "du", "dü", "tı", "ti", "tu", "tü", "dım", "dim",
    "dum", "düm", "tım", "tim", "tum", "tüm", "dık", "dik", "duk", "dük", "yor", "yorum", "acak",
    "ecek", "malı", "meli", "dır", "dir", "dur", "dür", "tır", "tir", "tur", "tür",
];

pub(super) fn ki_sep_filter(t: &Transform) -> Option<Provenance> {
    let stem = to_lower_tr(&t.replacement[0]);
    if stem.ends_with("de") || stem.ends_with("da") || has_apostrophe(&stem) {
        return None;
    }
    VERBAL_ENDINGS
        .iter()
        .any(|e| stem.ends_with(e))
        .then_some(Provenance::Pattern)
}
