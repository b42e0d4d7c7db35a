//! Turkish letters: vowel classes, consonant classes and casing.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backness {
    Back,
    Front,
}

impl Backness {
    pub fn flip(self) -> Self {
        match self {
            Backness::Back => Backness::Front,
            Backness::Front => Backness::Back,
        }
    }
}

/// Voiceless consonants that trigger d→t assimilation.
pub const FORTIS: &[char] = &['p', 'ç', 't', 'k', 'f', 'h', 's', 'ş'];

pub fn is_vowel(c: char) -> bool {
    vowel_class(c).is_some()
}

/// Backness and rounding of a vowel, case-insensitive.
pub fn vowel_class(c: char) -> Option<(Backness, bool)> {
    use Backness::*;
    Some(match lower_char(c) {
        'a' | 'â' => (Back, false),
        'ı' => (Back, false),
        'o' => (Back, true),
        'u' | 'û' => (Back, true),
        'e' => (Front, false),
        'i' | 'î' => (Front, false),
        'ö' => (Front, true),
        'ü' => (Front, true),
        _ => return None,
    })
}

pub fn is_fortis(c: char) -> bool {
    FORTIS.contains(&lower_char(c))
}

pub fn vowel_count(s: &str) -> usize {
    s.chars().filter(|&c| is_vowel(c)).count()
}

pub fn last_vowel(s: &str) -> Option<char> {
    s.chars().rev().find(|&c| is_vowel(c))
}

pub fn has_vowel(s: &str) -> bool {
    s.chars().any(is_vowel)
}

/// A token that contains at least one letter.
pub fn is_word(token: &str) -> bool {
    token.chars().any(char::is_alphabetic)
}

pub fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '’'
}

pub fn has_apostrophe(token: &str) -> bool {
    token.chars().any(is_apostrophe)
}

pub fn lower_char(c: char) -> char {
    match c {
        'I' => 'ı',
        'İ' => 'i',
        _ => {
            let mut l = c.to_lowercase();
            match (l.next(), l.next()) {
                (Some(x), None) => x,
                _ => c,
            }
        }
    }
}

pub fn upper_char(c: char) -> char {
    match c {
        'i' => 'İ',
        'ı' => 'I',
        _ => {
            let mut u = c.to_uppercase();
            match (u.next(), u.next()) {
                (Some(x), None) => x,
                _ => c,
            }
        }
    }
}

pub fn to_lower_tr(text: &str) -> String {
    text.chars().map(lower_char).collect()
}

pub fn to_upper_tr(text: &str) -> String {
    text.chars().map(upper_char).collect()
}

pub fn is_upper(c: char) -> bool {
    c.is_uppercase()
}

pub fn is_lower(c: char) -> bool {
    c.is_lowercase()
}

pub fn capitalize_first(text: &str) -> String {
    let mut chars = text.chars();
    match chars.next() {
        Some(c) => std::iter::once(upper_char(c)).chain(chars).collect(),
        None => String::new(),
    }
}

pub fn lowercase_first(text: &str) -> String {
    let mut chars = text.chars();
    match chars.next() {
        Some(c) => std::iter::once(lower_char(c)).chain(chars).collect(),
        None => String::new(),
    }
}

/// Casing shape of a token, used to carry capitalization through lexicon
/// substitutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CasePattern {
    Lower,
    Title,
    Other,
}

impl CasePattern {
    pub fn of(token: &str) -> Self {
        let mut letters = token.chars().filter(|c| c.is_alphabetic());
        let Some(first) = letters.next() else {
            return CasePattern::Other;
        };
        let rest_lower = letters.all(is_lower);
        if !rest_lower {
            CasePattern::Other
        } else if is_upper(first) {
            CasePattern::Title
        } else {
            CasePattern::Lower
        }
    }

    pub fn apply(self, text: &str) -> String {
        match self {
            CasePattern::Title => capitalize_first(text),
            _ => text.to_owned(),
        }
    }
}

/// The vowel of the same height and rounding with the other backness.
pub fn flip_backness(c: char) -> char {
    match c {
        'a' => 'e',
        'e' => 'a',
        'ı' => 'i',
        'i' => 'ı',
        'o' => 'ö',
        'ö' => 'o',
        'u' => 'ü',
        'ü' => 'u',
        'A' => 'E',
        'E' => 'A',
        'I' => 'İ',
        'İ' => 'I',
        'O' => 'Ö',
        'Ö' => 'O',
        'U' => 'Ü',
        'Ü' => 'U',
        other => other,
    }
}

/// Open unrounded vowel of a class: `a` or `e`.
pub fn open_vowel(backness: Backness) -> char {
    match backness {
        Backness::Back => 'a',
        Backness::Front => 'e',
    }
}

/// Close vowel of a class: `ı`, `u`, `i` or `ü`.
pub fn close_vowel(backness: Backness, rounded: bool) -> char {
    match (backness, rounded) {
        (Backness::Back, false) => 'ı',
        (Backness::Back, true) => 'u',
        (Backness::Front, false) => 'i',
        (Backness::Front, true) => 'ü',
    }
}
