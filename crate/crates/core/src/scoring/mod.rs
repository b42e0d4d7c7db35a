//! Correction scoring (P/R/F0.5 over extracted edits) and detection scoring
//! (macro P/R/F1 over rule classes).

mod align;

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

pub use align::{align, edits_from_ops, extract_edits, Op, SpanEdit};

use crate::error::{Error, Result};
use crate::m2::AnnotatedPair;
use crate::rules::RuleId;
use crate::sentence::Sentence;

/// `(1 + b²)PR / (b²P + R)`, 0 when the denominator is 0.
pub fn f_beta(precision: f64, recall: f64, beta: f64) -> f64 {
    let b2 = beta * beta;
    let denom = b2 * precision + recall;
    if denom == 0.0 {
        0.0
    } else {
        (1.0 + b2) * precision * recall / denom
    }
}

fn ratio(num: usize, den: usize) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassScore {
    pub precision: f64,
    pub recall: f64,
    pub f_score: f64,
    pub matched: usize,
    pub proposed: usize,
    pub gold: usize,
}

impl ClassScore {
    fn new(matched: usize, proposed: usize, gold: usize, beta: f64) -> Self {
        let precision = ratio(matched, proposed);
        let recall = ratio(matched, gold);
        Self {
            precision,
            recall,
            f_score: f_beta(precision, recall, beta),
            matched,
            proposed,
            gold,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScoreReport {
    pub beta: f64,
    pub precision: f64,
    pub recall: f64,
    pub f_score: f64,
    pub matched: usize,
    pub proposed: usize,
    pub gold: usize,
    /// Detection only.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub per_class: BTreeMap<RuleId, ClassScore>,
}

impl ScoreReport {
    pub fn to_table(&self) -> String {
        let mut out = format!(
            "{:<22}{:>10}{:>10}{:>10}{:>9}{:>9}{:>9}\n",
            "",
            "P",
            "R",
            format!("F{}", self.beta),
            "match",
            "prop",
            "gold"
        );
        let line = |name: &str, p: f64, r: f64, f: f64, m: usize, pr: usize, g: usize| {
            format!("{name:<22}{p:>10.4}{r:>10.4}{f:>10.4}{m:>9}{pr:>9}{g:>9}\n")
        };
        for (rule, c) in &self.per_class {
            out.push_str(&line(
                rule.as_str(),
                c.precision,
                c.recall,
                c.f_score,
                c.matched,
                c.proposed,
                c.gold,
            ));
        }
        out.push_str(&line(
            if self.per_class.is_empty() {
                "overall"
            } else {
                "macro"
            },
            self.precision,
            self.recall,
            self.f_score,
            self.matched,
            self.proposed,
            self.gold,
        ));
        out
    }
}

/// Counts for one record. A system edit that covers consecutive gold edits
/// exactly, with their corrections concatenated, counts as those gold edits.
fn count_record(system: &[SpanEdit], gold: &[SpanEdit]) -> (usize, usize) {
    let gold_set: HashSet<&SpanEdit> = gold.iter().collect();
    let (mut matched, mut proposed) = (0, 0);
    for s in system {
        if gold_set.contains(s) {
            matched += 1;
            proposed += 1;
            continue;
        }
        match tiling(s, gold) {
            Some(k) => {
                matched += k;
                proposed += k;
            }
            None => proposed += 1,
        }
    }
    (matched, proposed)
}

fn tiling(s: &SpanEdit, gold: &[SpanEdit]) -> Option<usize> {
    let first = gold.iter().position(|g| g.start == s.start)?;
    let mut pos = s.start;
    let mut words = Vec::new();
    for (k, g) in gold[first..].iter().enumerate() {
        if g.start != pos {
            return None;
        }
        pos = g.end;
        if !g.correction.is_empty() {
            words.push(g.correction.as_str());
        }
        if pos == s.end {
            return (k > 0 && words.join(" ") == s.correction).then_some(k + 1);
        }
        if pos > s.end {
            return None;
        }
    }
    None
}

fn gold_span_edits(pair: &AnnotatedPair) -> Vec<SpanEdit> {
    pair.edits
        .iter()
        .map(|e| SpanEdit::new(e.start, e.end, e.correction.clone()))
        .collect()
}

/// Corpus-level P, R and F0.5 of corrected hypotheses against gold records.
pub fn score_correction(hypotheses: &[Sentence], gold: &[AnnotatedPair]) -> Result<ScoreReport> {
    if hypotheses.len() != gold.len() {
        return Err(Error::LengthMismatch {
            hypotheses: hypotheses.len(),
            gold: gold.len(),
        });
    }
    let (mut matched, mut proposed, mut gold_total) = (0, 0, 0);
    for (hyp, pair) in hypotheses.iter().zip(gold) {
        let system = extract_edits(pair.corrupted.tokens(), hyp.tokens());
        let gold_edits = gold_span_edits(pair);
        let (m, p) = count_record(&system, &gold_edits);
        matched += m;
        proposed += p;
        gold_total += gold_edits.len();
    }
    let c = ClassScore::new(matched, proposed, gold_total, 0.5);
    Ok(ScoreReport {
        beta: 0.5,
        precision: c.precision,
        recall: c.recall,
        f_score: c.f_score,
        matched,
        proposed,
        gold: gold_total,
        per_class: BTreeMap::new(),
    })
}

/// Per-token label; `None` is the no-error label.
pub type Label = Option<RuleId>;

/// Maximal runs of one rule label as `(start, end, rule)`.
pub fn label_spans(labels: &[Label]) -> Vec<(usize, usize, RuleId)> {
    let mut spans = Vec::new();
    let mut i = 0;
    while i < labels.len() {
        let Some(rule) = labels[i] else {
            i += 1;
            continue;
        };
        let start = i;
        while i < labels.len() && labels[i] == Some(rule) {
            i += 1;
        }
        spans.push((start, i, rule));
    }
    spans
}

/// Macro-averaged detection scores. Span level by default: a predicted span
/// is correct when a gold span has the same boundaries and rule. With
/// `token_level`, each labeled token is scored on its own.
pub fn score_detection(
    predicted: &[Vec<Label>],
    gold: &[Vec<Label>],
    token_level: bool,
) -> Result<ScoreReport> {
    if predicted.len() != gold.len() {
        return Err(Error::LengthMismatch {
            hypotheses: predicted.len(),
            gold: gold.len(),
        });
    }
    // per class: (matched, proposed, gold)
    let mut counts: BTreeMap<RuleId, (usize, usize, usize)> = BTreeMap::new();
    for (p, g) in predicted.iter().zip(gold) {
        if p.len() != g.len() {
            return Err(Error::LengthMismatch {
                hypotheses: p.len(),
                gold: g.len(),
            });
        }
        let (pu, gu): (Vec<_>, Vec<_>) = if token_level {
            let units = |ls: &[Label]| {
                ls.iter()
                    .enumerate()
                    .filter_map(|(i, l)| l.map(|r| (i, i + 1, r)))
                    .collect::<Vec<_>>()
            };
            (units(p), units(g))
        } else {
            (label_spans(p), label_spans(g))
        };
        let gold_set: HashSet<_> = gu.iter().collect();
        for s in &pu {
            let c = counts.entry(s.2).or_default();
            c.1 += 1;
            if gold_set.contains(s) {
                c.0 += 1;
            }
        }
        for s in &gu {
            counts.entry(s.2).or_default().2 += 1;
        }
    }
    let per_class: BTreeMap<RuleId, ClassScore> = counts
        .iter()
        .map(|(&r, &(m, p, g))| (r, ClassScore::new(m, p, g, 1.0)))
        .collect();
    let k = per_class.len();
    let mean = |f: fn(&ClassScore) -> f64| {
        if k == 0 {
            0.0
        } else {
            per_class.values().map(f).sum::<f64>() / k as f64
        }
    };
    Ok(ScoreReport {
        beta: 1.0,
        precision: mean(|c| c.precision),
        recall: mean(|c| c.recall),
        f_score: mean(|c| c.f_score),
        matched: counts.values().map(|c| c.0).sum(),
        proposed: counts.values().map(|c| c.1).sum(),
        gold: counts.values().map(|c| c.2).sum(),
        per_class,
    })
}
