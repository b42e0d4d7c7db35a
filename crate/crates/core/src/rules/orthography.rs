//! Capitalization and abbreviations.

use super::{Rules, Transform};
use crate::lexicon;
use crate::morphology::alphabet::{
    capitalize_first, close_vowel, flip_backness, is_vowel, is_word, lowercase_first, open_vowel,
    vowel_class, CasePattern,
};
use crate::morphology::Harmony;

fn is_first_word(tokens: &[String], i: usize) -> bool {
    is_word(&tokens[i]) && tokens[..i].iter().all(|t| !is_word(t))
}

fn first_is_letter(token: &str, upper: bool) -> bool {
    token
        .chars()
        .next()
        .is_some_and(|c| c.is_alphabetic() && c.is_uppercase() == upper)
}

pub(super) fn sent_cap_propose(tokens: &[String], i: usize) -> Option<Transform> {
    let token = &tokens[i];
    (is_first_word(tokens, i)
        && first_is_letter(token, true)
        && CasePattern::of(token) == CasePattern::Title)
        .then(|| Transform::one(1, lowercase_first(token)))
}

pub(super) fn sent_cap_restore(tokens: &[String], i: usize) -> Option<Transform> {
    let token = &tokens[i];
    (is_first_word(tokens, i) && first_is_letter(token, false))
        .then(|| Transform::one(1, capitalize_first(token)))
}

/// Harmony class of an abbreviation as pronounced, looked up by its bare form.
fn abbrev_class(rules: &Rules, bare: &str) -> Option<Harmony> {
    let lex = rules.lexicons().get(lexicon::ABBREV);
    let key = lex.lookup_reverse(bare)?;
    Harmony::parse(lex.entry(key)?.extra.as_deref()?)
}

/// Accusative `(y)ı/i/u/ü`: returns the buffer and the vowel.
fn accusative(suffix: &str) -> Option<(&str, char)> {
    let (buffer, rest) = match suffix.strip_prefix('y') {
        Some(rest) => ("y", rest),
        None => ("", suffix),
    };
    let mut chars = rest.chars();
    match (chars.next(), chars.next()) {
        (Some(v), None) if matches!(v, 'ı' | 'i' | 'u' | 'ü') => Some((buffer, v)),
        _ => None,
    }
}

fn open_form(suffix: &str) -> Option<(&str, char)> {
    let (buffer, rest) = match suffix.strip_prefix('y') {
        Some(rest) => ("y", rest),
        None => ("", suffix),
    };
    let mut chars = rest.chars();
    match (chars.next(), chars.next()) {
        (Some(v), None) if matches!(v, 'a' | 'e') => Some((buffer, v)),
        _ => None,
    }
}

/// Suffix vowels' backness relative to the class: `Some(true)` when every
/// vowel agrees, `Some(false)` when every vowel disagrees.
fn suffix_agreement(suffix: &str, class: Harmony) -> Option<bool> {
    let target = class.backness()?;
    let backs: Vec<_> = suffix
        .chars()
        .filter(|&c| is_vowel(c))
        .map(|c| vowel_class(c).map(|(b, _)| b))
        .collect::<Option<_>>()?;
    if backs.is_empty() || !suffix.chars().all(char::is_alphabetic) {
        return None;
    }
    if backs.iter().all(|&b| b == target) {
        Some(true)
    } else if backs.iter().all(|&b| b != target) {
        Some(false)
    } else {
        None
    }
}

pub(super) fn abbrev_propose(rules: &Rules, tokens: &[String], i: usize) -> Option<Transform> {
    let token = &tokens[i];
    let lex = rules.lexicons().get(lexicon::ABBREV);
    if token.ends_with('.') {
        let bare = lex.lookup_forward(token)?;
        return (bare != token).then(|| Transform::one(1, bare.to_owned()));
    }
    let (bare, suffix) = token.split_once('\'')?;
    let class = abbrev_class(rules, bare)?;
    if let Some((buffer, v)) = accusative(suffix) {
        let backness = class.backness()?;
        if v == close_vowel(backness, class.rounded()) {
            let open = open_vowel(backness);
            return Some(Transform::one(1, format!("{bare}'{buffer}{open}")));
        }
    }
    if suffix_agreement(suffix, class)? {
        let flipped: String = suffix.chars().map(flip_backness).collect();
        return Some(Transform::one(1, format!("{bare}'{flipped}")));
    }
    None
}

pub(super) fn abbrev_restore(rules: &Rules, tokens: &[String], i: usize) -> Option<Transform> {
    let token = &tokens[i];
    let lex = rules.lexicons().get(lexicon::ABBREV);
    if let Some(key) = lex.lookup_reverse(token) {
        if key != token && key.ends_with('.') {
            return Some(Transform::one(1, key.to_owned()));
        }
    }
    let (bare, suffix) = token.split_once('\'')?;
    let class = abbrev_class(rules, bare)?;
    let backness = class.backness()?;
    match suffix_agreement(suffix, class)? {
        false => {
            let flipped: String = suffix.chars().map(flip_backness).collect();
            Some(Transform::one(1, format!("{bare}'{flipped}")))
        }
        true => {
            let (buffer, _) = open_form(suffix)?;
            let close = close_vowel(backness, class.rounded());
            Some(Transform::one(1, format!("{bare}'{buffer}{close}")))
        }
    }
}
