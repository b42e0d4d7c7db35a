//! Light verbs, compound verbs and the y-buffered future.

use super::clitic::letters_only;
use super::lexical::LIGHT_VERB_FORMS;
use super::{Provenance, Rules, Transform};
use crate::lexicon;
use crate::morphology::alphabet::{
    close_vowel, has_vowel, is_vowel, lower_char, to_lower_tr, vowel_class, vowel_count, Backness,
    CasePattern,
};
use crate::morphology::{future_vowel_position, is_function_word, MorphInfo, SuffixKind};

fn noun_ok(noun: &str) -> bool {
    noun.chars().count() >= 3
        && letters_only(noun)
        && has_vowel(noun)
        && CasePattern::of(noun) != CasePattern::Other
        && !is_function_word(noun)
}

pub(super) fn light_sep_propose(rules: &Rules, tokens: &[String], i: usize) -> Option<Transform> {
    let (noun, aux) = (&tokens[i], tokens.get(i + 1)?);
    if !noun_ok(noun) || !LIGHT_VERB_FORMS.contains(&aux.as_str()) {
        return None;
    }
    let joined = format!("{noun}{aux}");
    if starts_with_fused_verb(rules, &joined) || is_split_fused_verb(rules, noun, aux) {
        return None;
    }
    Some(Transform::one(2, joined))
}

/// Splits at the longest light-verb suffix that leaves a plausible noun.
fn split_light(token: &str) -> Option<(&str, &str)> {
    if !letters_only(token) {
        return None;
    }
    LIGHT_VERB_FORMS
        .iter()
        .filter(|aux| token.len() > aux.len() && token.ends_with(**aux))
        .map(|aux| token.split_at(token.len() - aux.len()))
        .filter(|(noun, _)| noun_ok(noun))
        .max_by_key(|(_, aux)| aux.len())
}

pub(super) fn light_sep_restore(tokens: &[String], i: usize) -> Option<Transform> {
    let (noun, aux) = split_light(&tokens[i])?;
    Some(Transform::new(1, vec![noun.to_owned(), aux.to_owned()]))
}

/// Tokens such as `emretti` whose fused spelling is correct.
fn starts_with_fused_verb(rules: &Rules, token: &str) -> bool {
    let lower = to_lower_tr(token);
    let found = rules
        .lexicons()
        .get(lexicon::LIGHT_VERB_ADJ)
        .key_prefixes(&lower)
        .next()
        .is_some();
    found
}

/// Pairs such as `emir etti` whose correct form drops a stem vowel.
fn is_split_fused_verb(rules: &Rules, noun: &str, aux: &str) -> bool {
    let pair = to_lower_tr(&format!("{noun} {aux}"));
    let found = rules
        .lexicons()
        .get(lexicon::LIGHT_VERB_ADJ)
        .value_prefixes(&pair)
        .next()
        .is_some();
    found
}

pub(super) fn light_sep_filter(rules: &Rules, t: &Transform) -> Option<Provenance> {
    let (noun, aux) = (&t.replacement[0], &t.replacement[1]);
    let joined = format!("{noun}{aux}");
    if starts_with_fused_verb(rules, &joined) {
        return None;
    }
    let noun_lower = to_lower_tr(noun);
    let aux_stem: String = aux.chars().take(2).collect();
    let verb_stems = rules.lexicons().get(lexicon::VERB_STEMS);
    if verb_stems.contains(&format!("{noun_lower}{aux_stem}")) {
        return None;
    }
    if rules
        .lexicons()
        .get(lexicon::LIGHT_NOUNS)
        .contains(&noun_lower)
    {
        return Some(Provenance::Lexicon);
    }
    let consonant_final = noun_lower.chars().last().is_some_and(|c| !is_vowel(c));
    (consonant_final && !matches!(aux.as_str(), "eden" | "olan")).then_some(Provenance::Pattern)
}

/// Auxiliary stems of compound verbs.
const AUX_STEMS: &[&str] = &["bil", "ver", "kal", "dur", "gel", "yaz"];

/// Suffix openings that can follow an auxiliary stem.
const VERBAL_SUFFIXES: &[&str] = &[
    "mak", "mek", "ma", "me", "dı", "di", "du", "dü", "ır", "ir", "ur", "ür", "ar", "er", "acak",
    "ecek", "acağ", "eceğ", "ıyor", "iyor", "uyor", "üyor", "mış", "miş", "muş", "müş", "sa", "se",
    "malı", "meli", "ip", "ıp", "up", "üp", "ınca", "ince", "unca", "ünce", "arak", "erek", "an",
    "en", "sın", "sin", "sun", "sün", "ın", "in", "un", "ün", "dık", "dik", "duk", "dük", "dığ",
    "diğ", "duğ", "düğ", "ken",
];

/// Splits a fused compound verb before its auxiliary, keeping the converb
/// vowel on the first part.
fn comp_split(token: &str) -> Option<(&str, &str)> {
    if !letters_only(token) {
        return None;
    }
    let lower = to_lower_tr(token);
    let offsets: Vec<usize> = token.char_indices().map(|(b, _)| b).collect();
    let lower_offsets: Vec<usize> = lower.char_indices().map(|(b, _)| b).collect();
    if offsets.len() != lower_offsets.len() {
        return None;
    }
    (3..offsets.len()).find_map(|p| {
        let head = &token[..offsets[p]];
        let tail_lower = &lower[lower_offsets[p]..];
        let last = head.chars().last().map(lower_char)?;
        if !matches!(last, 'a' | 'e' | 'ı' | 'i' | 'u' | 'ü') || vowel_count(head) < 2 {
            return None;
        }
        let aux = AUX_STEMS.iter().find(|a| tail_lower.starts_with(**a))?;
        let after = &tail_lower[aux.len()..];
        VERBAL_SUFFIXES
            .iter()
            .any(|s| after.starts_with(s))
            .then(|| (head, &token[offsets[p]..]))
    })
}

pub(super) fn comp_propose(tokens: &[String], i: usize) -> Option<Transform> {
    let (head, tail) = comp_split(&tokens[i])?;
    Some(Transform::new(1, vec![head.to_owned(), tail.to_owned()]))
}

pub(super) fn comp_restore(tokens: &[String], i: usize) -> Option<Transform> {
    let (head, tail) = (&tokens[i], tokens.get(i + 1)?);
    let joined = format!("{head}{tail}");
    let (h, t) = comp_split(&joined)?;
    (h == head && t == tail).then(|| Transform::one(2, joined.clone()))
}

pub(super) fn comp_filter(rules: &Rules, t: &Transform) -> Option<Provenance> {
    let joined = &t.replacement[0];
    let (head, aux) = comp_split(joined)?;
    let mut stem = to_lower_tr(head);
    if rules.lexicons().get(lexicon::PERSON_NAMES).contains(&stem) {
        return None;
    }
    // -ver takes a close converb vowel, the other auxiliaries a/e.
    let close = !matches!(stem.pop()?, 'a' | 'e');
    if close != to_lower_tr(aux).starts_with("ver") {
        return None;
    }
    let stems = rules.lexicons().get(lexicon::VERB_STEMS);
    if stems.contains(&stem) {
        return Some(Provenance::Lexicon);
    }
    stem.strip_suffix('y')
        .is_some_and(|s| stems.contains(s))
        .then_some(Provenance::Lexicon)
}

fn replace_char(token: &str, k: usize, with: char) -> String {
    token
        .chars()
        .enumerate()
        .map(|(j, c)| if j == k { with } else { c })
        .collect()
}

pub(super) fn pronounc_propose(
    tokens: &[String],
    morph: &[MorphInfo],
    i: usize,
) -> Option<Transform> {
    let suffix = morph[i].detected_suffix.as_ref()?;
    if suffix.kind != SuffixKind::PronounceableFuture {
        return None;
    }
    let token = &tokens[i];
    let k = future_vowel_position(token, false)?;
    let v = token.chars().nth(k)?;
    let (backness, _) = vowel_class(v)?;
    Some(Transform::one(
        1,
        replace_char(token, k, close_vowel(backness, false)),
    ))
}

pub(super) fn pronounc_restore(tokens: &[String], i: usize) -> Option<Transform> {
    let token = &tokens[i];
    let k = future_vowel_position(token, true)?;
    let open = match token.chars().nth(k)? {
        'ı' => 'a',
        'i' => 'e',
        _ => return None,
    };
    Some(Transform::one(1, replace_char(token, k, open)))
}

pub(super) fn pronounc_filter(rules: &Rules, t: &Transform) -> Option<Provenance> {
    let original = &t.replacement[0];
    let k = future_vowel_position(original, false)?;
    let open = original.chars().nth(k)?;
    let close = close_vowel(
        if open == 'a' {
            Backness::Back
        } else {
            Backness::Front
        },
        false,
    );
    let stem: String = to_lower_tr(&replace_char(original, k, close))
        .chars()
        .take(k + 1)
        .collect();
    (!rules.lexicons().get(lexicon::VERB_STEMS).contains(&stem)).then_some(Provenance::Pattern)
}
