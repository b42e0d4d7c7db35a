use std::collections::BTreeMap;

use serde::Serialize;

use crate::rules::RuleId;

/// How many dropped pairs are kept verbatim in the report.
pub const DROPPED_SAMPLE_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DroppedSample {
    /// Index of the sentence after deduplication.
    pub index: usize,
    pub original: String,
    pub corrupted: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SplitSizes {
    pub train: usize,
    pub val: usize,
    pub test: usize,
}

/// Counts describing one generation run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GenerationReport {
    pub seed: u64,
    pub config_digest: String,
    /// Non-empty input lines.
    pub input_sentences: usize,
    pub duplicates_removed: usize,
    /// Records written across all splits.
    pub emitted: usize,
    /// Corrupted pairs that failed round-trip validation.
    pub dropped: usize,
    pub dropped_samples: Vec<DroppedSample>,
    /// Emitted records without edits.
    pub error_free: usize,
    /// Sentences chosen to stay clean by the sentence-level draw.
    pub selected_error_free: usize,
    /// Emitted records with at least one edit.
    pub corrupted: usize,
    /// Sentences chosen for corruption that had no eligible site.
    pub ineligible: usize,
    /// Corrupted records whose single edit came from the fallback pass.
    pub forced: usize,
    pub per_rule: BTreeMap<RuleId, usize>,
    pub total_annotations: usize,
    pub splits: SplitSizes,
    pub warnings: Vec<String>,
}

impl GenerationReport {
    pub fn error_free_share(&self) -> f64 {
        if self.emitted == 0 {
            0.0
        } else {
            self.error_free as f64 / self.emitted as f64
        }
    }

    /// Human-readable summary table.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let row = |out: &mut String, k: &str, v: String| out.push_str(&format!("{k:<22}{v}\n"));
        row(&mut out, "seed", self.seed.to_string());
        row(&mut out, "config digest", self.config_digest.clone());
        row(
            &mut out,
            "input sentences",
            self.input_sentences.to_string(),
        );
        row(
            &mut out,
            "duplicates removed",
            self.duplicates_removed.to_string(),
        );
        row(&mut out, "emitted", self.emitted.to_string());
        row(&mut out, "dropped", self.dropped.to_string());
        row(
            &mut out,
            "error free",
            format!("{} ({:.3})", self.error_free, self.error_free_share()),
        );
        row(&mut out, "corrupted", self.corrupted.to_string());
        row(&mut out, "ineligible", self.ineligible.to_string());
        row(&mut out, "annotations", self.total_annotations.to_string());
        row(
            &mut out,
            "splits",
            format!(
                "{} / {} / {}",
                self.splits.train, self.splits.val, self.splits.test
            ),
        );
        for (rule, n) in &self.per_rule {
            row(&mut out, &format!("  {rule}"), n.to_string());
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out
    }
}
