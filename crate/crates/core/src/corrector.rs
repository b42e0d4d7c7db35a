//! Detection of corrupted spans and correction by reverse transformation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::m2::{AnnotatedPair, Edit};
use crate::rules::{Provenance, RuleId, Rules};
use crate::sentence::Sentence;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Detection {
    pub start: usize,
    pub end: usize,
    pub rule: RuleId,
    pub provenance: Provenance,
}

/// Finds every span some rule recognizes as corrupted, then keeps a
/// non-overlapping subset: longer spans first, then lexicon-backed matches,
/// then lower rule numbers, then earlier positions.
pub fn detect(rules: &Rules, sentence: &Sentence) -> Vec<Detection> {
    let tokens = sentence.tokens();
    let mut candidates = Vec::new();
    for start in 0..tokens.len() {
        for rule in RuleId::ALL {
            if let Some((t, provenance)) = rules.recognize(rule, tokens, start) {
                candidates.push(Detection {
                    start,
                    end: start + t.consumed,
                    rule,
                    provenance,
                });
            }
        }
    }
    candidates.sort_by_key(|d| {
        (
            std::cmp::Reverse(d.end - d.start),
            d.provenance,
            d.rule,
            d.start,
        )
    });
    let mut taken = vec![false; tokens.len()];
    let mut chosen = Vec::new();
    for d in candidates {
        if taken[d.start..d.end].iter().any(|&t| t) {
            continue;
        }
        taken[d.start..d.end].iter_mut().for_each(|t| *t = true);
        chosen.push(d);
    }
    chosen.sort_by_key(|d| d.start);
    chosen
}

/// Applies each detection's reverse transformation, right to left.
pub fn correct(rules: &Rules, sentence: &Sentence, detections: &[Detection]) -> Result<Sentence> {
    let mut sorted: Vec<&Detection> = detections.iter().collect();
    sorted.sort_by_key(|d| d.start);
    for w in sorted.windows(2) {
        if w[1].start < w[0].end {
            return Err(Error::OverlappingEdits {
                first_start: w[0].start,
                first_end: w[0].end,
                second_start: w[1].start,
                second_end: w[1].end,
            });
        }
    }
    let mut current = sentence.clone();
    for d in sorted.iter().rev() {
        let replacement = rules.apply_reverse(d.rule, &current, d.start, d.end)?;
        current = current.splice(d.start, d.end, &replacement);
    }
    Ok(current)
}

/// Detects and corrects in one step, returning the hypothesis as an
/// annotated pair over the input sentence.
pub fn correct_sentence(rules: &Rules, sentence: &Sentence) -> Result<AnnotatedPair> {
    let detections = detect(rules, sentence);
    let mut edits = Vec::with_capacity(detections.len());
    for d in &detections {
        let replacement = rules.apply_reverse(d.rule, sentence, d.start, d.end)?;
        edits.push(Edit::new(d.start, d.end, d.rule, replacement.join(" ")));
    }
    let corrected = correct(rules, sentence, &detections)?;
    Ok(AnnotatedPair {
        corrupted: sentence.clone(),
        edits,
        correct: corrected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rules() -> Rules {
        Rules::embedded().unwrap()
    }

    #[test]
    fn detects_joined_clitic() {
        let r = rules();
        let d = detect(&r, &Sentence::from_spaced("Durumu oğlunada bildirdi ."));
        assert_eq!(d.len(), 1);
        assert_eq!((d[0].start, d[0].end, d[0].rule), (1, 2, RuleId::ConjDeSep));
    }

    #[test]
    fn yada_correction() {
        let r = rules();
        let s = Sentence::from_spaced("Sen yada o buradan gidecek .");
        let det = [Detection {
            start: 1,
            end: 2,
            rule: RuleId::Yada,
            provenance: Provenance::Lexicon,
        }];
        assert_eq!(
            correct(&r, &s, &det).unwrap().text(),
            "Sen ya da o buradan gidecek ."
        );
        assert_eq!(correct(&r, &s, &[]).unwrap(), s);
    }

    #[test]
    fn mismatched_detection_is_an_error() {
        let r = rules();
        let s = Sentence::from_spaced("Sen ya da o .");
        let det = [Detection {
            start: 1,
            end: 2,
            rule: RuleId::Yada,
            provenance: Provenance::Lexicon,
        }];
        let err = correct(&r, &s, &det).unwrap_err();
        assert!(matches!(
            err,
            Error::PatternMismatch {
                rule: RuleId::Yada,
                ..
            }
        ));
    }

    #[test]
    fn clean_sentence_has_no_detections() {
        let r = rules();
        for text in [
            "Evde hiç süt kalmamıştı .",
            "Ayşe de geldi .",
            "Sen ya da o buradan gidecek .",
        ] {
            assert!(
                detect(&r, &Sentence::from_spaced(text)).is_empty(),
                "{text}"
            );
        }
    }
}
