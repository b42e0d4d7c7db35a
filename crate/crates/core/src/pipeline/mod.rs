//! Corpus generation.
//!
//! Each sentence draws from its own ChaCha stream (`stream = index + 1`; the
//! master stream 0 shuffles the splits), so results do not depend on how
//! sentences are scheduled across threads.

mod config;
mod report;

use std::collections::{BTreeMap, HashSet};
use std::path::Path;

use rand::distributions::{Distribution, WeightedIndex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use config::PipelineConfig;
pub use report::{DroppedSample, GenerationReport, SplitSizes, DROPPED_SAMPLE_LIMIT};

use crate::error::{Error, Result};
use crate::lexicon::Lexicons;
use crate::m2::{self, AnnotatedPair, Edit};
use crate::rules::{RuleId, Rules};
use crate::sentence::{normalize_line, Sentence};

/// How sentences are scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Uses the current rayon pool. Without the `parallel` feature this runs
    /// sequentially.
    #[default]
    Parallel,
}

/// Builds the rule engine described by `config`.
pub fn rules_for(config: &PipelineConfig) -> Result<Rules> {
    let lexicons = match &config.lexicon_dir {
        Some(dir) => Lexicons::from_dir(dir)?,
        None => Lexicons::embedded()?,
    };
    Ok(Rules::new(lexicons, config.strict_locatives))
}

/// RNG for sentence `index`.
pub fn sentence_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64 + 1);
    rng
}

fn master_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

struct Corruptor<'a> {
    rules: &'a Rules,
    tokens: Vec<String>,
    transformed: Vec<bool>,
    edits: Vec<Edit>,
    morph: Vec<crate::morphology::MorphInfo>,
}

impl<'a> Corruptor<'a> {
    fn new(rules: &'a Rules, sentence: &Sentence) -> Self {
        let tokens = sentence.tokens().to_vec();
        Self {
            rules,
            transformed: vec![false; tokens.len()],
            morph: rules.analyze(&tokens),
            tokens,
            edits: Vec::new(),
        }
    }

    fn free(&self, start: usize, len: usize) -> bool {
        self.transformed[start..start + len].iter().all(|f| !f)
    }

    fn apply(&mut self, rule: RuleId, i: usize, consumed: usize, replacement: Vec<String>) {
        let emitted = replacement.len();
        let correction = self.tokens[i..i + consumed].join(" ");
        self.tokens.splice(i..i + consumed, replacement);
        self.transformed
            .splice(i..i + consumed, std::iter::repeat_n(true, emitted));
        for e in &mut self.edits {
            if e.start >= i + consumed {
                e.start = e.start + emitted - consumed;
                e.end = e.end + emitted - consumed;
            }
        }
        self.edits.push(Edit::new(i, i + emitted, rule, correction));
        self.morph = self.rules.analyze(&self.tokens);
    }

    fn finish(mut self, original: &Sentence) -> AnnotatedPair {
        self.edits.sort_by_key(|e| e.start);
        AnnotatedPair {
            corrupted: Sentence::new(self.tokens),
            edits: self.edits,
            correct: original.clone(),
        }
    }
}

/// One probabilistic corruption pass over `sentence`.
///
/// Active rules are visited in a shuffled order; each scans the tokens left
/// to right and, at every untransformed eligible site, fires with its
/// probability. Tokens produced by a rule are never transformed again.
pub fn corrupt_sentence<R: Rng>(
    rules: &Rules,
    sentence: &Sentence,
    config: &PipelineConfig,
    rng: &mut R,
) -> AnnotatedPair {
    let mut order = config.active_rules();
    order.shuffle(rng);
    let mut c = Corruptor::new(rules, sentence);
    for rule in order {
        let p = config.probability(rule);
        let mut i = 0;
        while i < c.tokens.len() {
            if !c.transformed[i] {
                if let Some(t) = rules.propose(rule, &c.tokens, &c.morph, i) {
                    if c.free(i, t.consumed) && rng.gen_bool(p) {
                        let emitted = t.replacement.len();
                        c.apply(rule, i, t.consumed, t.replacement);
                        i += emitted;
                        continue;
                    }
                }
            }
            i += 1;
        }
    }
    c.finish(sentence)
}

/// Applies exactly one eligible edit, picking the site with weight equal to
/// its rule's probability. `None` when nothing is eligible.
pub fn force_one_edit<R: Rng>(
    rules: &Rules,
    sentence: &Sentence,
    config: &PipelineConfig,
    rng: &mut R,
) -> Option<AnnotatedPair> {
    let mut c = Corruptor::new(rules, sentence);
    let mut sites = Vec::new();
    for rule in config.active_rules() {
        for i in 0..c.tokens.len() {
            if let Some(t) = rules.propose(rule, &c.tokens, &c.morph, i) {
                sites.push((rule, i, t));
            }
        }
    }
    let weights: Vec<f64> = sites
        .iter()
        .map(|(r, _, _)| config.probability(*r))
        .collect();
    let pick = WeightedIndex::new(&weights).ok()?.sample(rng);
    let (rule, i, t) = sites.swap_remove(pick);
    c.apply(rule, i, t.consumed, t.replacement);
    Some(c.finish(sentence))
}

/// Whether reversing every edit, right to left, recovers `pair.correct`, and
/// the edits' correction fields agree with it.
pub fn validate_roundtrip(rules: &Rules, pair: &AnnotatedPair) -> bool {
    match m2::apply_edits(&pair.corrupted, &pair.edits) {
        Ok(s) if s == pair.correct => {}
        _ => return false,
    }
    let mut tokens = pair.corrupted.tokens().to_vec();
    for e in pair.edits.iter().rev() {
        match rules.restore(e.rule, &tokens, e.start) {
            Some(t) if t.consumed == e.end - e.start => {
                tokens.splice(e.start..e.end, t.replacement);
            }
            _ => return false,
        }
    }
    tokens == pair.correct.tokens()
}

enum Outcome {
    Selected(AnnotatedPair),
    Ineligible(AnnotatedPair),
    Corrupted { pair: AnnotatedPair, forced: bool },
    Dropped(DroppedSample),
}

fn process(rules: &Rules, config: &PipelineConfig, index: usize, sentence: &Sentence) -> Outcome {
    let mut rng = sentence_rng(config.seed, index);
    if rng.gen_bool(config.error_free_fraction) {
        return Outcome::Selected(AnnotatedPair::error_free(sentence.clone()));
    }
    let mut pair = corrupt_sentence(rules, sentence, config, &mut rng);
    let mut forced = false;
    if pair.edits.is_empty() && config.force_error {
        match force_one_edit(rules, sentence, config, &mut rng) {
            Some(p) => {
                pair = p;
                forced = true;
            }
            None => return Outcome::Ineligible(pair),
        }
    }
    if pair.edits.is_empty() {
        return Outcome::Ineligible(pair);
    }
    if validate_roundtrip(rules, &pair) {
        Outcome::Corrupted { pair, forced }
    } else {
        log::warn!(
            "dropping sentence {index}: round trip failed for {:?}",
            pair.corrupted.text()
        );
        Outcome::Dropped(DroppedSample {
            index,
            original: sentence.text(),
            corrupted: pair.corrupted.text(),
        })
    }
}

/// Generated records split into train, validation and test sets.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub train: Vec<AnnotatedPair>,
    pub val: Vec<AnnotatedPair>,
    pub test: Vec<AnnotatedPair>,
    pub report: GenerationReport,
}

/// Normalizes, drops blank lines and removes exact duplicates, keeping the
/// first occurrence. Returns the unique lines and the number removed.
pub fn deduplicate<S: AsRef<str>>(lines: &[S]) -> (Vec<String>, usize) {
    let mut seen = HashSet::new();
    let mut unique = Vec::new();
    let mut removed = 0;
    for line in lines {
        let norm = normalize_line(line.as_ref());
        if norm.is_empty() {
            continue;
        }
        if seen.insert(norm.clone()) {
            unique.push(norm);
        } else {
            removed += 1;
        }
    }
    (unique, removed)
}

fn run<T, F>(n: usize, execution: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    match execution {
        Execution::Sequential => (0..n).map(f).collect(),
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(f).collect()
        }
        #[cfg(not(feature = "parallel"))]
        Execution::Parallel => (0..n).map(f).collect(),
    }
}

/// Runs the full pipeline over clean sentences, one per line.
pub fn generate_corpus<S: AsRef<str> + Sync>(
    rules: &Rules,
    lines: &[S],
    config: &PipelineConfig,
    execution: Execution,
) -> Result<Corpus> {
    config.validate()?;
    let input_sentences = lines
        .iter()
        .filter(|l| !l.as_ref().trim().is_empty())
        .count();
    let (unique, duplicates_removed) = deduplicate(lines);
    if unique.is_empty() {
        return Err(Error::EmptyInput);
    }
    let tokenizer = rules.tokenizer();
    let outcomes = run(unique.len(), execution, |i| {
        process(rules, config, i, &tokenizer.tokenize(&unique[i]))
    });

    let mut per_rule: BTreeMap<RuleId, usize> = RuleId::ALL.iter().map(|&r| (r, 0)).collect();
    let mut emitted = Vec::with_capacity(outcomes.len());
    let mut dropped_samples = Vec::new();
    let (mut dropped, mut selected, mut ineligible, mut forced_count) = (0, 0, 0, 0);
    for outcome in outcomes {
        match outcome {
            Outcome::Selected(p) => {
                selected += 1;
                emitted.push(p);
            }
            Outcome::Ineligible(p) => {
                ineligible += 1;
                emitted.push(p);
            }
            Outcome::Corrupted { pair, forced } => {
                forced_count += usize::from(forced);
                for e in &pair.edits {
                    *per_rule.entry(e.rule).or_default() += 1;
                }
                emitted.push(pair);
            }
            Outcome::Dropped(sample) => {
                dropped += 1;
                if dropped_samples.len() < DROPPED_SAMPLE_LIMIT {
                    dropped_samples.push(sample);
                }
            }
        }
    }

    let n = emitted.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut master_rng(config.seed));
    let n_train = ((n as f64) * config.split_ratios[0]).round() as usize;
    let n_val = (((n as f64) * config.split_ratios[1]).round() as usize).min(n - n_train.min(n));
    let n_train = n_train.min(n);
    let mut slots: Vec<Option<AnnotatedPair>> = emitted.into_iter().map(Some).collect();
    let mut take = |idx: &[usize]| -> Vec<AnnotatedPair> {
        idx.iter()
            .map(|&i| slots[i].take().expect("each record is taken once"))
            .collect()
    };
    let train = take(&order[..n_train]);
    let val = take(&order[n_train..n_train + n_val]);
    let test = take(&order[n_train + n_val..]);

    let all = || train.iter().chain(&val).chain(&test);
    let error_free = all().filter(|p| p.is_error_free()).count();
    let total_annotations: usize = all().map(|p| p.edits.len()).sum();
    let attempted = n - selected - ineligible + dropped;
    let mut warnings = Vec::new();
    if attempted > 0 && dropped * 2 > attempted {
        warnings.push(format!(
            "round-trip validation dropped {dropped} of {attempted} corrupted sentences"
        ));
    }
    let report = GenerationReport {
        seed: config.seed,
        config_digest: config.digest(),
        input_sentences,
        duplicates_removed,
        emitted: n,
        dropped,
        dropped_samples,
        error_free,
        selected_error_free: selected,
        corrupted: n - error_free,
        ineligible,
        forced: forced_count,
        per_rule,
        total_annotations,
        splits: SplitSizes {
            train: train.len(),
            val: val.len(),
            test: test.len(),
        },
        warnings,
    };
    Ok(Corpus {
        train,
        val,
        test,
        report,
    })
}

/// Reads one sentence per line.
pub fn read_lines(path: &Path) -> Result<Vec<String>> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    Ok(text.lines().map(str::to_owned).collect())
}

/// Writes `train.m2`, `val.m2`, `test.m2` and `report.json` into `dir`.
pub fn write_corpus(dir: &Path, corpus: &Corpus) -> Result<()> {
    let io = |path: &Path| {
        let path = path.to_owned();
        move |source| Error::Io { path, source }
    };
    std::fs::create_dir_all(dir).map_err(io(dir))?;
    for (name, pairs) in [
        ("train.m2", &corpus.train),
        ("val.m2", &corpus.val),
        ("test.m2", &corpus.test),
    ] {
        let path = dir.join(name);
        std::fs::write(&path, m2::serialize_all(pairs)).map_err(io(&path))?;
    }
    let path = dir.join("report.json");
    let mut json = serde_json::to_string_pretty(&corpus.report).expect("report serializes");
    json.push('\n');
    std::fs::write(&path, json).map_err(io(&path))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rules() -> Rules {
        Rules::embedded().unwrap()
    }

    #[test]
    fn worked_example_corruption() {
        let r = rules();
        let s = Sentence::from_spaced(
            "Uyuyakaldığı için hem işe gitmedi hem de akşamki yemeğe gelemeyecek .",
        );
        let config = PipelineConfig::only(
            &[RuleId::CompVerbAdj, RuleId::ConjDeSep, RuleId::PronouncExc],
            1.0,
        );
        let pair = corrupt_sentence(&r, &s, &config, &mut sentence_rng(1, 0));
        assert_eq!(
            pair.corrupted.text(),
            "Uyuya kaldığı için hem işe gitmedi hemde akşamki yemeğe gelemiyecek ."
        );
        let spans: Vec<_> = pair
            .edits
            .iter()
            .map(|e| (e.start, e.end, e.rule))
            .collect();
        assert_eq!(
            spans,
            [
                (0, 2, RuleId::CompVerbAdj),
                (6, 7, RuleId::ConjDeSep),
                (9, 10, RuleId::PronouncExc)
            ]
        );
        assert!(validate_roundtrip(&r, &pair));
    }

    #[test]
    fn yada_indices() {
        let r = rules();
        let s = Sentence::from_spaced("Sen ya da o buradan gidecek .");
        let config = PipelineConfig::only(&[RuleId::Yada], 1.0);
        let pair = corrupt_sentence(&r, &s, &config, &mut sentence_rng(3, 0));
        assert_eq!(pair.corrupted.text(), "Sen yada o buradan gidecek .");
        assert_eq!(pair.edits, [Edit::new(1, 2, RuleId::Yada, "ya da")]);
    }

    #[test]
    fn zero_probabilities_change_nothing() {
        let r = rules();
        let s = Sentence::from_spaced("Durumu oğluna da bildirdi .");
        let config = PipelineConfig::only(&[], 1.0);
        let pair = corrupt_sentence(&r, &s, &config, &mut sentence_rng(0, 0));
        assert!(pair.edits.is_empty());
        assert_eq!(pair.corrupted, s);
        assert!(force_one_edit(&r, &s, &config, &mut sentence_rng(0, 0)).is_none());
    }

    #[test]
    fn tampering_fails_validation() {
        let r = rules();
        let s = Sentence::from_spaced("Sen ya da o buradan gidecek .");
        let config = PipelineConfig::only(&[RuleId::Yada], 1.0);
        let mut pair = corrupt_sentence(&r, &s, &config, &mut sentence_rng(3, 0));
        assert!(validate_roundtrip(&r, &pair));
        pair.corrupted = Sentence::from_spaced("Sen yadda o buradan gidecek .");
        assert!(!validate_roundtrip(&r, &pair));
        assert!(validate_roundtrip(&r, &AnnotatedPair::error_free(s)));
    }

    #[test]
    fn small_corpus_splits() {
        let r = rules();
        let lines: Vec<String> = (0..100).map(|i| format!("Evde {i} elma var .")).collect();
        let corpus = generate_corpus(
            &r,
            &lines,
            &PipelineConfig::default(),
            Execution::Sequential,
        )
        .unwrap();
        let s = corpus.report.splits;
        assert_eq!((s.train, s.val, s.test), (70, 15, 15));
    }

    #[test]
    fn empty_input_is_an_error() {
        let r = rules();
        let lines = ["", "   "];
        assert!(matches!(
            generate_corpus(
                &r,
                &lines,
                &PipelineConfig::default(),
                Execution::Sequential
            ),
            Err(Error::EmptyInput)
        ));
    }

    #[test]
    fn dedup_normalizes() {
        let (u, removed) = deduplicate(&["Ev  de .", "Ev de .", "", "Ev de ."]);
        assert_eq!(u, ["Ev de ."]);
        assert_eq!(removed, 2);
    }
}
