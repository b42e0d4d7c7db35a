//! Lexicon-driven substitutions.
//!
//! A lexicon row `key<TAB>value` maps the correct stem to its corrupted
//! counterpart. The token is matched on its lowercased form, with the longest
//! key that is a prefix; the rest of the token is carried over unchanged and
//! must satisfy the rule's [`Remainder`] condition. Values may span two tokens.

use super::{RuleId, Rules, Transform};
use crate::lexicon;
use crate::morphology::alphabet::{is_vowel, to_lower_tr, CasePattern};

/// Inflected forms of the light verbs etmek, edilmek, eylemek, olmak and
/// olunmak that may stand after a noun.
pub(crate) const LIGHT_VERB_FORMS: &[&str] = &[
    // etmek
    "etmek",
    "etmeden",
    "etme",
    "etmedi",
    "etmedim",
    "etmez",
    "etmem",
    "etti",
    "ettim",
    "ettin",
    "ettik",
    "ettiniz",
    "ettiler",
    "etmiş",
    "etmişti",
    "etsin",
    "etse",
    "etsem",
    "etmeli",
    "etmesi",
    "etmesini",
    "ettiği",
    "ettiğini",
    "etmekte",
    "etmeye",
    "etmiyor",
    "eder",
    "ederim",
    "ederiz",
    "edersin",
    "eden",
    "ederek",
    "edecek",
    "edeceğim",
    "edeceğini",
    "ediyor",
    "ediyorum",
    "ediyordu",
    "edin",
    "edince",
    "edip",
    "edemedi",
    "edemez",
    // edilmek
    "edilmek",
    "edildi",
    "edilir",
    "edilen",
    "edilmiş",
    "edilecek",
    "edilmedi",
    "ediliyor",
    // eylemek
    "eylemek",
    "eyledi",
    "eyler",
    "eylesin",
    // olmak
    "olmak",
    "oldu",
    "oldum",
    "olduk",
    "olur",
    "olurum",
    "olacak",
    "olacağım",
    "oluyor",
    "oluyorum",
    "olmuş",
    "olmuştu",
    "olan",
    "olsun",
    "olmadı",
    "olmaz",
    "olsa",
    "olmalı",
    "olduğu",
    "olduğunu",
    "olunca",
    "olup",
    // olunmak
    "olunmak",
    "olundu",
    "olunur",
    "olunan",
];

/// Condition on the part of the token after the matched stem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(super) enum Remainder {
    Any,
    Empty,
    VowelInitial,
    DInitial,
    Inflection,
    /// The value's last word plus the remainder is a light-verb form.
    LightVerb,
}

impl Remainder {
    fn accepts(self, rest: &str, value: &str) -> bool {
        match self {
            Remainder::Any => true,
            Remainder::Empty => rest.is_empty(),
            Remainder::VowelInitial => rest.chars().next().is_some_and(is_vowel),
            Remainder::DInitial => rest.starts_with('d'),
            Remainder::Inflection => rest.chars().all(char::is_alphabetic),
            Remainder::LightVerb => {
                let aux = value.rsplit(' ').next().unwrap_or(value);
                LIGHT_VERB_FORMS.contains(&format!("{aux}{rest}").as_str())
            }
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub(super) struct LexRule {
    lexicon: &'static str,
    remainder: Remainder,
}

pub(super) fn engine(rule: RuleId) -> Option<LexRule> {
    use Remainder::*;
    let (lexicon, remainder) = match rule {
        RuleId::ConjKiExc => (lexicon::CONJ_KI_EXC, Empty),
        RuleId::ForeignR1 => (lexicon::FOREIGN_R1, Any),
        RuleId::BisyllHaplVow => (lexicon::BISYLL_HAPL_VOW, VowelInitial),
        RuleId::BisyllHaplVowExc => (lexicon::BISYLL_HAPL_VOW_EXC, DInitial),
        RuleId::ForeignR2 => (lexicon::FOREIGN_R2, VowelInitial),
        RuleId::ForeignR2Exc => (lexicon::FOREIGN_R2_EXC, VowelInitial),
        RuleId::LightVerbAdj => (lexicon::LIGHT_VERB_ADJ, LightVerb),
        RuleId::PronounExc => (lexicon::PRONOUN_EXC, Inflection),
        RuleId::Capped => (lexicon::CAPPED, Any),
        _ => return None,
    };
    Some(LexRule { lexicon, remainder })
}

fn case_of(token: &str) -> Option<CasePattern> {
    match CasePattern::of(token) {
        CasePattern::Other => None,
        case => Some(case),
    }
}

impl LexRule {
    pub(super) fn propose(&self, rules: &Rules, tokens: &[String], i: usize) -> Option<Transform> {
        let token = &tokens[i];
        let case = case_of(token)?;
        let lower = to_lower_tr(token);
        let lex = rules.lexicons().get(self.lexicon);
        let (entry, rest) = lex.key_prefixes(&lower).find(|(e, rest)| {
            e.value
                .as_deref()
                .is_some_and(|v| self.remainder.accepts(rest, v))
        })?;
        let value = entry.value.as_deref()?;
        let corrupted = format!("{value}{rest}");
        let mut out: Vec<String> = corrupted.split(' ').map(str::to_owned).collect();
        out[0] = case.apply(&out[0]);
        Some(Transform::new(1, out))
    }

    pub(super) fn restore(&self, rules: &Rules, tokens: &[String], i: usize) -> Option<Transform> {
        let lex = rules.lexicons().get(self.lexicon);
        let case = case_of(&tokens[i])?;
        let first = to_lower_tr(&tokens[i]);
        if let Some(next) = tokens.get(i + 1) {
            if CasePattern::of(next) == CasePattern::Lower {
                let joined = format!("{first} {next}");
                let hit = lex.value_prefixes(&joined).find(|(_, head, rest)| {
                    head.len() > first.len() && self.remainder.accepts(rest, head)
                });
                if let Some((key, _, rest)) = hit {
                    return Some(Transform::one(2, case.apply(&format!("{key}{rest}"))));
                }
            }
        }
        let (key, _, rest) = lex
            .value_prefixes(&first)
            .find(|(_, head, rest)| self.remainder.accepts(rest, head))?;
        Some(Transform::one(1, case.apply(&format!("{key}{rest}"))))
    }
}
