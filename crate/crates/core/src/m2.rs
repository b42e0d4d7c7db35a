//! Reading and writing M² annotation records.
//!
//! ```text
//! S Ev de hiç süt kalmamıştı .
//! A 0 2|||CASE_DE|||Evde|||REQUIRED|||-NONE-|||0
//! ```
//!
//! Records are separated by a blank line. Edit spans index the `S` tokens.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rules::RuleId;
use crate::sentence::Sentence;

const REQUIRED: &str = "REQUIRED";
const NO_COMMENT: &str = "-NONE-";

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Edit {
    pub start: usize,
    pub end: usize,
    pub rule: RuleId,
    /// Replacement tokens joined by single spaces.
    pub correction: String,
    pub annotator: u32,
}

impl Edit {
    pub fn new(start: usize, end: usize, rule: RuleId, correction: impl Into<String>) -> Self {
        Self {
            start,
            end,
            rule,
            correction: correction.into(),
            annotator: 0,
        }
    }

    pub fn a_line(&self) -> String {
        format!(
            "A {} {}|||{}|||{}|||{REQUIRED}|||{NO_COMMENT}|||{}",
            self.start, self.end, self.rule, self.correction, self.annotator
        )
    }

    fn correction_tokens(&self) -> Vec<String> {
        Sentence::from_spaced(&self.correction).into_tokens()
    }
}

/// A corrupted sentence with the edits that correct it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedPair {
    pub corrupted: Sentence,
    pub edits: Vec<Edit>,
    pub correct: Sentence,
}

impl AnnotatedPair {
    /// Derives `correct` by applying `edits`.
    pub fn new(corrupted: Sentence, edits: Vec<Edit>) -> Result<Self> {
        let correct = apply_edits(&corrupted, &edits)?;
        Ok(Self {
            corrupted,
            edits,
            correct,
        })
    }

    pub fn error_free(sentence: Sentence) -> Self {
        Self {
            corrupted: sentence.clone(),
            edits: Vec::new(),
            correct: sentence,
        }
    }

    pub fn is_error_free(&self) -> bool {
        self.edits.is_empty()
    }

    /// Per-token rule labels on the corrupted sentence.
    pub fn labels(&self) -> Vec<Option<RuleId>> {
        let mut labels = vec![None; self.corrupted.len()];
        for e in &self.edits {
            for l in &mut labels[e.start..e.end] {
                *l = Some(e.rule);
            }
        }
        labels
    }
}

fn check_order(edits: &[Edit]) -> Result<()> {
    for w in edits.windows(2) {
        if w[1].start < w[0].end {
            return Err(Error::OverlappingEdits {
                first_start: w[0].start,
                first_end: w[0].end,
                second_start: w[1].start,
                second_end: w[1].end,
            });
        }
    }
    Ok(())
}

/// Replaces each edit span with its correction, right to left.
pub fn apply_edits(sentence: &Sentence, edits: &[Edit]) -> Result<Sentence> {
    check_order(edits)?;
    let mut tokens = sentence.tokens().to_vec();
    for e in edits.iter().rev() {
        if e.start >= e.end || e.end > tokens.len() {
            return Err(Error::IndexOutOfRange {
                index: e.end,
                len: tokens.len(),
            });
        }
        tokens.splice(e.start..e.end, e.correction_tokens());
    }
    Ok(Sentence::new(tokens))
}

/// One record, terminated by a newline (no trailing blank line).
pub fn serialize(pair: &AnnotatedPair) -> String {
    let mut out = format!("S {}\n", pair.corrupted.text());
    for e in &pair.edits {
        out.push_str(&e.a_line());
        out.push('\n');
    }
    out
}

/// Records each followed by a blank line.
pub fn serialize_all<'a, I>(pairs: I) -> String
where
    I: IntoIterator<Item = &'a AnnotatedPair>,
{
    let mut out = String::new();
    for p in pairs {
        out.push_str(&serialize(p));
        out.push('\n');
    }
    out
}

fn parse_a_line(body: &str, record: usize, line: usize, len: usize) -> Result<Edit> {
    let err = |message: String| Error::M2 {
        record,
        line,
        message,
    };
    let fields: Vec<&str> = body.split("|||").collect();
    if fields.len() != 6 {
        return Err(err(format!("expected 6 fields, found {}", fields.len())));
    }
    let mut span = fields[0].split(' ');
    let (Some(start), Some(end), None) = (span.next(), span.next(), span.next()) else {
        return Err(err(format!("malformed span {:?}", fields[0])));
    };
    let start: usize = start
        .parse()
        .map_err(|_| err(format!("bad start index {start:?}")))?;
    let end: usize = end
        .parse()
        .map_err(|_| err(format!("bad end index {end:?}")))?;
    if end <= start {
        return Err(err(format!("end {end} is not after start {start}")));
    }
    if end > len {
        return Err(err(format!("span {start}..{end} exceeds {len} tokens")));
    }
    let rule: RuleId = fields[1]
        .parse()
        .map_err(|_| err(format!("unknown rule id {:?}", fields[1])))?;
    if fields[3] != REQUIRED || fields[4] != NO_COMMENT {
        return Err(err("expected REQUIRED and -NONE- fields".into()));
    }
    let annotator: u32 = fields[5]
        .parse()
        .map_err(|_| err(format!("bad annotator {:?}", fields[5])))?;
    Ok(Edit {
        start,
        end,
        rule,
        correction: fields[2].to_owned(),
        annotator,
    })
}

/// Parses every record. Record and line numbers in errors are 1-based.
pub fn parse(text: &str) -> Result<Vec<AnnotatedPair>> {
    let mut pairs = Vec::new();
    // (record number, line of the S line, sentence, edits)
    type Open = Option<(usize, usize, Sentence, Vec<Edit>)>;
    let mut current: Open = None;
    let finish = |cur: Open, pairs: &mut Vec<AnnotatedPair>| -> Result<()> {
        if let Some((record, line, sentence, edits)) = cur {
            let pair = AnnotatedPair::new(sentence, edits).map_err(|e| Error::M2 {
                record,
                line,
                message: e.to_string(),
            })?;
            pairs.push(pair);
        }
        Ok(())
    };
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.trim_end();
        if line.is_empty() {
            finish(current.take(), &mut pairs)?;
            continue;
        }
        if let Some(body) = line.strip_prefix("S ").or((line == "S").then_some("")) {
            finish(current.take(), &mut pairs)?;
            current = Some((
                pairs.len() + 1,
                line_no,
                Sentence::from_spaced(body),
                Vec::new(),
            ));
        } else if let Some(body) = line.strip_prefix("A ") {
            let Some((record, _, sentence, edits)) = current.as_mut() else {
                return Err(Error::M2 {
                    record: pairs.len() + 1,
                    line: line_no,
                    message: "A line before any S line".into(),
                });
            };
            edits.push(parse_a_line(body, *record, line_no, sentence.len())?);
        } else {
            return Err(Error::M2 {
                record: pairs.len() + 1,
                line: line_no,
                message: format!("unrecognized line {line:?}"),
            });
        }
    }
    finish(current, &mut pairs)?;
    Ok(pairs)
}
