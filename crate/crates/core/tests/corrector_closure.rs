mod common;

use common::golden_cases::{EXTRA, GOLDEN};
use common::WORKED_CLEAN;
use turkgec::m2;
use turkgec::pipeline::{generate_corpus, Execution, PipelineConfig};
use turkgec::{correct, correct_sentence, detect, RuleId, Rules, Sentence};

#[test]
fn golden_pairs_are_corrected_exactly() {
    let rules = Rules::embedded().unwrap();
    for case in GOLDEN.iter().chain(&EXTRA) {
        let corrupted = Sentence::from_spaced(case.corrupted);
        let detections = detect(&rules, &corrupted);
        assert!(
            detections.iter().all(|d| d.rule == case.rule),
            "{}: {detections:?}",
            case.corrupted
        );
        let fixed = correct(&rules, &corrupted, &detections).unwrap();
        assert_eq!(fixed.text(), case.correct, "{}", case.rule);
    }
}

#[test]
fn worked_example_is_corrected_exactly() {
    let rules = Rules::embedded().unwrap();
    let gold = m2::parse(common::WORKED_M2).unwrap().remove(0);
    let pair = correct_sentence(&rules, &gold.corrupted).unwrap();
    assert_eq!(pair.edits, gold.edits);
    assert_eq!(pair.correct.text(), WORKED_CLEAN);
    let found: Vec<(usize, usize, RuleId)> = pair
        .edits
        .iter()
        .map(|e| (e.start, e.end, e.rule))
        .collect();
    assert_eq!(
        found,
        [
            (0, 2, RuleId::CompVerbAdj),
            (6, 7, RuleId::ConjDeSep),
            (9, 10, RuleId::PronouncExc)
        ]
    );
}

#[test]
fn clean_golden_sentences_stay_clean() {
    let rules = Rules::embedded().unwrap();
    for case in &GOLDEN {
        let clean = Sentence::from_spaced(case.correct);
        assert_eq!(detect(&rules, &clean), [], "{}", case.correct);
    }
}

#[test]
fn correction_stays_inside_detected_spans() {
    let rules = Rules::embedded().unwrap();
    let lines = common::lines(common::SAMPLE_CORPUS);
    let corpus = generate_corpus(
        &rules,
        &lines,
        &PipelineConfig::default(),
        Execution::Parallel,
    )
    .unwrap();
    let (mut exact, mut reconstructed) = (0, 0);
    for pair in corpus.train.iter().chain(&corpus.val).chain(&corpus.test) {
        let detections = detect(&rules, &pair.corrupted);
        let fixed = correct(&rules, &pair.corrupted, &detections).unwrap();

        // Tokens before the first and after the last detection are untouched.
        let tokens = pair.corrupted.tokens();
        if let (Some(first), Some(last)) = (detections.first(), detections.last()) {
            assert_eq!(fixed.tokens()[..first.start], tokens[..first.start]);
            let tail = tokens.len() - last.end;
            assert_eq!(fixed.tokens()[fixed.len() - tail..], tokens[last.end..]);
        } else {
            assert_eq!(fixed, pair.corrupted);
        }

        let found: Vec<_> = detections
            .iter()
            .map(|d| (d.start, d.end, d.rule))
            .collect();
        let gold: Vec<_> = pair
            .edits
            .iter()
            .map(|e| (e.start, e.end, e.rule))
            .collect();
        if found == gold {
            exact += 1;
            reconstructed += usize::from(fixed == pair.correct);
        }
    }
    assert!(exact > 900, "exact detections on {exact} records");
    assert_eq!(reconstructed, exact);
}
