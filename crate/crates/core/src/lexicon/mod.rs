//! Word lists used by rule eligibility checks.
//!
//! File format: UTF-8, one record per line, `correct<TAB>corrupted[<TAB>extra]`.
//! Single-column lines declare set membership. Lines starting with `#` are
//! comments. Every field is stored NFC-normalized.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};

pub const CONJ_KI_EXC: &str = "CONJ_KI_EXC";
pub const FOREIGN_R1: &str = "FOREIGN_R1";
pub const FOREIGN_R2: &str = "FOREIGN_R2";
pub const FOREIGN_R2_EXC: &str = "FOREIGN_R2_EXC";
pub const BISYLL_HAPL_VOW: &str = "BISYLL_HAPL_VOW";
pub const BISYLL_HAPL_VOW_EXC: &str = "BISYLL_HAPL_VOW_EXC";
pub const LIGHT_VERB_ADJ: &str = "LIGHT_VERB_ADJ";
pub const LIGHT_NOUNS: &str = "LIGHT_NOUNS";
pub const PRONOUN_EXC: &str = "PRONOUN_EXC";
pub const CAPPED: &str = "CAPPED";
pub const ABBREV: &str = "ABBREV";
pub const LOC_STEMS: &str = "LOC_STEMS";
pub const LOC_EXC: &str = "LOC_EXC";
pub const PERSON_NAMES: &str = "PERSON_NAMES";
pub const VERB_STEMS: &str = "VERB_STEMS";

/// Every lexicon name with its embedded seed data.
pub const EMBEDDED: &[(&str, &str)] = &[
    (CONJ_KI_EXC, include_str!("../../data/CONJ_KI_EXC.tsv")),
    (FOREIGN_R1, include_str!("../../data/FOREIGN_R1.tsv")),
    (FOREIGN_R2, include_str!("../../data/FOREIGN_R2.tsv")),
    (
        FOREIGN_R2_EXC,
        include_str!("../../data/FOREIGN_R2_EXC.tsv"),
    ),
    (
        BISYLL_HAPL_VOW,
        include_str!("../../data/BISYLL_HAPL_VOW.tsv"),
    ),
    (
        BISYLL_HAPL_VOW_EXC,
        include_str!("../../data/BISYLL_HAPL_VOW_EXC.tsv"),
    ),
    (
        LIGHT_VERB_ADJ,
        include_str!("../../data/LIGHT_VERB_ADJ.tsv"),
    ),
    (LIGHT_NOUNS, include_str!("../../data/LIGHT_NOUNS.tsv")),
    (PRONOUN_EXC, include_str!("../../data/PRONOUN_EXC.tsv")),
    (CAPPED, include_str!("../../data/CAPPED.tsv")),
    (ABBREV, include_str!("../../data/ABBREV.tsv")),
    (LOC_STEMS, include_str!("../../data/LOC_STEMS.tsv")),
    (LOC_EXC, include_str!("../../data/LOC_EXC.tsv")),
    (PERSON_NAMES, include_str!("../../data/PERSON_NAMES.tsv")),
    (VERB_STEMS, include_str!("../../data/VERB_STEMS.tsv")),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub key: String,
    pub value: Option<String>,
    pub extra: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexicon {
    name: String,
    entries: BTreeMap<String, Entry>,
    reverse: HashMap<String, String>,
}

fn nfc(s: &str) -> String {
    s.nfc().collect()
}

impl Lexicon {
    pub fn empty(name: &str) -> Self {
        Self {
            name: name.to_owned(),
            entries: BTreeMap::new(),
            reverse: HashMap::new(),
        }
    }

    pub fn parse(name: &str, text: &str) -> Result<Self> {
        let mut lex = Self::empty(name);
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() > 3 {
                return Err(Error::LexiconLine {
                    lexicon: name.to_owned(),
                    line: line_no,
                    message: format!("expected at most 3 fields, found {}", fields.len()),
                });
            }
            if fields.iter().any(|f| f.trim().is_empty()) {
                return Err(Error::LexiconLine {
                    lexicon: name.to_owned(),
                    line: line_no,
                    message: "empty field".into(),
                });
            }
            let entry = Entry {
                key: nfc(fields[0]),
                value: fields.get(1).map(|v| nfc(v)),
                extra: fields.get(2).map(|v| nfc(v)),
            };
            lex.insert(entry)?;
        }
        Ok(lex)
    }

    fn insert(&mut self, entry: Entry) -> Result<()> {
        if self.entries.contains_key(&entry.key) {
            return Err(Error::DuplicateKey {
                lexicon: self.name.clone(),
                key: entry.key,
            });
        }
        if let Some(value) = &entry.value {
            if self.reverse.contains_key(value) {
                return Err(Error::DuplicateValue {
                    lexicon: self.name.clone(),
                    value: value.clone(),
                });
            }
            self.reverse.insert(value.clone(), entry.key.clone());
        }
        self.entries.insert(entry.key.clone(), entry);
        Ok(())
    }

    pub fn load(name: &str, path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })?;
        Self::parse(name, &text)
    }

    pub fn embedded(name: &str) -> Result<Self> {
        let (_, text) = EMBEDDED
            .iter()
            .find(|(n, _)| *n == name)
            .ok_or_else(|| Error::UnknownLexicon(name.to_owned()))?;
        Self::parse(name, text)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, key: &str) -> bool {
        self.entries.contains_key(key)
    }

    pub fn entry(&self, key: &str) -> Option<&Entry> {
        self.entries.get(key)
    }

    pub fn lookup_forward(&self, key: &str) -> Option<&str> {
        self.entries.get(key)?.value.as_deref()
    }

    pub fn lookup_reverse(&self, value: &str) -> Option<&str> {
        self.reverse.get(value).map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Entry> {
        self.entries.values()
    }

    /// Longest key that is a prefix of `text`, with the remaining suffix.
    pub fn longest_key_prefix<'t>(&self, text: &'t str) -> Option<(&Entry, &'t str)> {
        prefixes(text).find_map(|(head, rest)| self.entries.get(head).map(|e| (e, rest)))
    }

    /// Every key that is a prefix of `text`, longest first.
    pub fn key_prefixes<'s, 't: 's>(
        &'s self,
        text: &'t str,
    ) -> impl Iterator<Item = (&'s Entry, &'t str)> + 's {
        prefixes(text).filter_map(|(head, rest)| self.entries.get(head).map(|e| (e, rest)))
    }

    /// Every value that is a prefix of `text`, longest first, with its key.
    pub fn value_prefixes<'s, 't: 's>(
        &'s self,
        text: &'t str,
    ) -> impl Iterator<Item = (&'s str, &'t str, &'t str)> + 's {
        prefixes(text)
            .filter_map(|(head, rest)| self.reverse.get(head).map(|key| (key.as_str(), head, rest)))
    }
}

/// Non-empty prefixes of `text` at char boundaries, longest first.
fn prefixes(text: &str) -> impl Iterator<Item = (&str, &str)> {
    text.char_indices()
        .map(|(i, c)| i + c.len_utf8())
        .collect::<Vec<_>>()
        .into_iter()
        .rev()
        .map(move |end| (&text[..end], &text[end..]))
}

/// The full set of lexicons consulted by the rules and the analyzer.
#[derive(Debug, Clone)]
pub struct Lexicons {
    by_name: BTreeMap<String, Lexicon>,
}

impl Lexicons {
    pub fn embedded() -> Result<Self> {
        let mut by_name = BTreeMap::new();
        for (name, _) in EMBEDDED {
            by_name.insert((*name).to_owned(), Lexicon::embedded(name)?);
        }
        Ok(Self { by_name })
    }

    /// Embedded defaults, with `<dir>/<NAME>.tsv` taking precedence when present.
    pub fn from_dir(dir: &Path) -> Result<Self> {
        if !dir.is_dir() {
            return Err(Error::Io {
                path: dir.to_path_buf(),
                source: std::io::Error::new(
                    std::io::ErrorKind::NotFound,
                    "lexicon directory not found",
                ),
            });
        }
        let mut lexicons = Self::embedded()?;
        for (name, _) in EMBEDDED {
            let path = dir.join(format!("{name}.tsv"));
            if path.is_file() {
                lexicons.replace(Lexicon::load(name, &path)?)?;
            }
        }
        Ok(lexicons)
    }

    pub fn replace(&mut self, lexicon: Lexicon) -> Result<()> {
        if !EMBEDDED.iter().any(|(n, _)| *n == lexicon.name) {
            return Err(Error::UnknownLexicon(lexicon.name));
        }
        self.by_name.insert(lexicon.name.clone(), lexicon);
        Ok(())
    }

    pub fn get(&self, name: &str) -> &Lexicon {
        self.by_name
            .get(name)
            .unwrap_or_else(|| panic!("lexicon {name} is always present"))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.by_name.keys().map(String::as_str)
    }
}
