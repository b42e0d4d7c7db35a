use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::rules::RuleId;

/// Generation settings, usually read from a TOML file:
///
/// ```toml
/// seed = 42
/// error_free_fraction = 0.5
/// split_ratios = [0.7, 0.15, 0.15]
/// enabled_rules = ["CASE_DE", "CONJ_DE_SEP"]
///
/// [probabilities]
/// CASE_DE = 0.9
/// ```
///
/// Rules missing from `probabilities` use [`RuleId::default_p`]. A probability
/// of 0 disables a rule.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PipelineConfig {
    pub seed: u64,
    pub error_free_fraction: f64,
    pub split_ratios: [f64; 3],
    pub probabilities: BTreeMap<RuleId, f64>,
    pub enabled_rules: BTreeSet<RuleId>,
    /// Apply one eligible edit when the probabilistic pass leaves a
    /// sentence selected for corruption untouched.
    pub force_error: bool,
    /// Directory of lexicon overrides (`<NAME>.tsv`).
    pub lexicon_dir: Option<PathBuf>,
    /// Only split locatives whose stem is in the stem lexicon.
    pub strict_locatives: bool,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            error_free_fraction: 0.5,
            split_ratios: [0.70, 0.15, 0.15],
            probabilities: RuleId::ALL.iter().map(|&r| (r, r.default_p())).collect(),
            enabled_rules: RuleId::ALL.into_iter().collect(),
            force_error: true,
            lexicon_dir: None,
            strict_locatives: false,
        }
    }
}

impl PipelineConfig {
    /// Every rule disabled except `rules`, which fire with probability `p`.
    pub fn only(rules: &[RuleId], p: f64) -> Self {
        let mut config = Self::default();
        for (rule, prob) in config.probabilities.iter_mut() {
            *prob = if rules.contains(rule) { p } else { 0.0 };
        }
        config.enabled_rules = rules.iter().copied().collect();
        config
    }

    pub fn from_toml_str(text: &str) -> Result<Self> {
        let mut config: Self = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        for rule in RuleId::ALL {
            config.probabilities.entry(rule).or_insert(rule.default_p());
        }
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })?;
        Self::from_toml_str(&text).map_err(|e| match e {
            Error::Config(m) => Error::Config(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn validate(&self) -> Result<()> {
        let sum: f64 = self.split_ratios.iter().sum();
        if self.split_ratios.iter().any(|r| !(0.0..=1.0).contains(r)) || (sum - 1.0).abs() > 1e-9 {
            return Err(Error::Config(format!(
                "split ratios {:?} must be in [0, 1] and sum to 1",
                self.split_ratios
            )));
        }
        if !(0.0..=1.0).contains(&self.error_free_fraction) {
            return Err(Error::Config(format!(
                "error_free_fraction {} is outside [0, 1]",
                self.error_free_fraction
            )));
        }
        for (rule, p) in &self.probabilities {
            if !(0.0..=1.0).contains(p) {
                return Err(Error::Config(format!(
                    "probability {p} for {rule} is outside [0, 1]"
                )));
            }
        }
        Ok(())
    }

    pub fn probability(&self, rule: RuleId) -> f64 {
        if !self.enabled_rules.contains(&rule) {
            return 0.0;
        }
        self.probabilities
            .get(&rule)
            .copied()
            .unwrap_or_else(|| rule.default_p())
    }

    /// Enabled rules with a positive probability, in catalog order.
    pub fn active_rules(&self) -> Vec<RuleId> {
        RuleId::ALL
            .into_iter()
            .filter(|&r| self.probability(r) > 0.0)
            .collect()
    }

    /// SHA-256 of the canonical JSON form, hex encoded.
    pub fn digest(&self) -> String {
        let json = serde_json::to_vec(self).expect("config serializes");
        hex::encode(Sha256::digest(json))
    }
}
