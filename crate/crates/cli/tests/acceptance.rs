//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::fs;
use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::alignment_oracle::{oracle, random_pairs};
use common::detection_table::{to_vecs, CASES};
use common::golden_cases::GOLDEN;
use turkgec::m2::{self, Edit};
use turkgec::pipeline::{
    corrupt_sentence, generate_corpus, sentence_rng, validate_roundtrip, Execution, PipelineConfig,
};
use turkgec::scoring::{extract_edits, score_correction, score_detection};
use turkgec::{correct, detect, AnnotatedPair, RuleId, Rules, Sentence};

const BIN: &str = env!("CARGO_BIN_EXE_turkgec");

const GOLDEN_BUDGET: Duration = Duration::from_secs(1);
const WORKED_BUDGET: Duration = Duration::from_secs(1);
const ROUNDTRIP_BUDGET: Duration = Duration::from_secs(30);
const COMPOSITION_BUDGET: Duration = Duration::from_secs(10);
const SCORER_BUDGET: Duration = Duration::from_secs(10);
const ROUNDTRIP_SEEDS: u64 = 20;
/// Three binomial standard deviations at n = 1000, p = 0.5.
const ERROR_FREE_TOLERANCE: f64 = 0.03;
const ORACLE_PAIRS: usize = 200;
const F_HALF_TOLERANCE: f64 = 1e-6;
const DETECTION_TOLERANCE: f64 = 1e-12;
const MIN_SENTENCES_PER_MINUTE: f64 = 10_000.0;
const PARALLEL_WORKERS: &str = "4";

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn within(budget: Duration, start: Instant) -> Result<(), String> {
    let spent = start.elapsed();
    if spent > budget {
        Err(format!("took {spent:.2?}, budget {budget:?}"))
    } else {
        Ok(())
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden_suite() -> Check {
    let start = Instant::now();
    let rules = Rules::embedded().map_err(|e| e.to_string())?;
    let (mut forward, mut reverse) = (0, 0);
    for case in &GOLDEN {
        let clean = Sentence::from_spaced(case.correct);
        let (replacement, edit) = rules
            .apply_forward(case.rule, &clean, case.index)
            .map_err(|e| format!("{}: {e}", case.rule))?;
        let consumed = edit.correction.split(' ').count();
        let corrupted = clean.splice(case.index, case.index + consumed, &replacement);
        ensure(corrupted.text() == case.corrupted, || {
            format!("{} forward gave {:?}", case.rule, corrupted.text())
        })?;
        forward += 1;
        let restored = rules
            .apply_reverse(case.rule, &corrupted, edit.start, edit.end)
            .map_err(|e| format!("{}: {e}", case.rule))?;
        ensure(
            corrupted.splice(edit.start, edit.end, &restored) == clean,
            || format!("{} reverse gave {restored:?}", case.rule),
        )?;
        reverse += 1;
    }
    ensure(forward == RuleId::ALL.len(), || {
        format!("{forward} rules covered")
    })?;
    within(GOLDEN_BUDGET, start)?;
    Ok(format!(
        "{forward} forward + {reverse} reverse in {:.2?}",
        start.elapsed()
    ))
}

fn worked_example() -> Check {
    let start = Instant::now();
    let rules = Rules::embedded().map_err(|e| e.to_string())?;
    let config = PipelineConfig::only(
        &[RuleId::CompVerbAdj, RuleId::ConjDeSep, RuleId::PronouncExc],
        1.0,
    );
    let clean = rules.tokenizer().tokenize(common::WORKED_CLEAN);
    let pair = corrupt_sentence(&rules, &clean, &config, &mut sentence_rng(config.seed, 0));
    let record = m2::serialize(&pair);
    ensure(record == common::WORKED_M2, || format!("got\n{record}"))?;
    within(WORKED_BUDGET, start)?;
    Ok(format!(
        "S line and 3 A lines byte-exact in {:.2?}",
        start.elapsed()
    ))
}

fn roundtrip() -> Check {
    let start = Instant::now();
    let rules = Rules::embedded().map_err(|e| e.to_string())?;
    let lines = common::lines(common::FUZZ_CORPUS);
    ensure(lines.len() == 500, || {
        format!("fuzz corpus has {} lines", lines.len())
    })?;
    let (mut emitted, mut dropped, mut edits) = (0, 0, 0);
    for seed in 0..ROUNDTRIP_SEEDS {
        let config = PipelineConfig {
            seed,
            ..PipelineConfig::default()
        };
        let corpus = generate_corpus(&rules, &lines, &config, Execution::Parallel)
            .map_err(|e| e.to_string())?;
        dropped += corpus.report.dropped;
        for pair in corpus.train.iter().chain(&corpus.val).chain(&corpus.test) {
            emitted += 1;
            edits += pair.edits.len();
            ensure(validate_roundtrip(&rules, pair), || {
                format!("seed {seed}: {}", m2::serialize(pair))
            })?;
        }
    }
    within(ROUNDTRIP_BUDGET, start)?;
    Ok(format!(
        "{emitted} pairs ({edits} edits) over {ROUNDTRIP_SEEDS} seeds all round-trip, \
         {dropped} dropped at generation, {:.2?}",
        start.elapsed()
    ))
}

fn composition() -> Check {
    let start = Instant::now();
    let rules = Rules::embedded().map_err(|e| e.to_string())?;
    let lines = common::lines(common::SAMPLE_CORPUS);
    ensure(lines.len() == 1000, || {
        format!("sample corpus has {} lines", lines.len())
    })?;
    let corpus = generate_corpus(
        &rules,
        &lines,
        &PipelineConfig::default(),
        Execution::Parallel,
    )
    .map_err(|e| e.to_string())?;
    let r = &corpus.report;
    let share = r.error_free_share();
    ensure((share - 0.5).abs() <= ERROR_FREE_TOLERANCE, || {
        format!("error-free share {share:.3}")
    })?;
    let sizes = (r.splits.train, r.splits.val, r.splits.test);
    ensure(sizes == (700, 150, 150), || format!("splits {sizes:?}"))?;
    within(COMPOSITION_BUDGET, start)?;
    Ok(format!(
        "error-free share {share:.3} (tolerance {ERROR_FREE_TOLERANCE}), splits 700/150/150, {:.2?}",
        start.elapsed()
    ))
}

fn scorer() -> Check {
    let start = Instant::now();
    for (src, hyp) in random_pairs(ORACLE_PAIRS, 7) {
        let fast = extract_edits(&src, &hyp);
        let slow = oracle(&src, &hyp);
        ensure(fast == slow, || {
            format!("{src:?} -> {hyp:?}: {fast:?} vs {slow:?}")
        })?;
    }
    let gold = AnnotatedPair::new(
        Sentence::from_spaced("Sen yada o hemde gel ."),
        vec![
            Edit::new(1, 2, RuleId::Yada, "ya da"),
            Edit::new(3, 4, RuleId::ConjDeSep, "hem de"),
        ],
    )
    .map_err(|e| e.to_string())?;
    let perfect = score_correction(
        std::slice::from_ref(&gold.correct),
        std::slice::from_ref(&gold),
    )
    .map_err(|e| e.to_string())?;
    ensure(perfect.f_score == 1.0, || {
        format!("perfect F0.5 {}", perfect.f_score)
    })?;
    let half = score_correction(
        &[Sentence::from_spaced("Sen ya da o hemde gel .")],
        std::slice::from_ref(&gold),
    )
    .map_err(|e| e.to_string())?;
    // 1.25 * 1 * 0.5 / (0.25 * 1 + 0.5) = 5/6, printed as 0.8333.
    ensure(
        half.precision == 1.0
            && half.recall == 0.5
            && (half.f_score - 5.0 / 6.0).abs() < F_HALF_TOLERANCE,
        || format!("P {} R {} F {}", half.precision, half.recall, half.f_score),
    )?;
    within(SCORER_BUDGET, start)?;
    Ok(format!(
        "{ORACLE_PAIRS} oracle pairs agree, F0.5 perfect 1.0, P=1 R=0.5 case {:.6}",
        half.f_score
    ))
}

fn detection() -> Check {
    let mut worst: f64 = 0.0;
    for case in CASES {
        let r = score_detection(
            &to_vecs(case.predicted),
            &to_vecs(case.gold),
            case.token_level,
        )
        .map_err(|e| e.to_string())?;
        let diff = (r.f_score - case.macro_f1).abs();
        worst = worst.max(diff);
        ensure(diff < DETECTION_TOLERANCE, || {
            format!("{}: {} vs {}", case.name, r.f_score, case.macro_f1)
        })?;
    }
    ensure(CASES.len() >= 10, || format!("only {} cases", CASES.len()))?;
    Ok(format!(
        "{} crafted cases, max deviation {worst:e}",
        CASES.len()
    ))
}

fn closure() -> Check {
    let rules = Rules::embedded().map_err(|e| e.to_string())?;
    let worked = m2::parse(common::WORKED_M2).map_err(|e| e.to_string())?;
    let mut pairs: Vec<(Sentence, Sentence)> = GOLDEN
        .iter()
        .map(|c| {
            (
                Sentence::from_spaced(c.corrupted),
                Sentence::from_spaced(c.correct),
            )
        })
        .collect();
    pairs.push((worked[0].corrupted.clone(), worked[0].correct.clone()));
    let mut ok = 0;
    for (corrupted, clean) in &pairs {
        let fixed =
            correct(&rules, corrupted, &detect(&rules, corrupted)).map_err(|e| e.to_string())?;
        if fixed == *clean {
            ok += 1;
        } else {
            eprintln!(
                "  not reconstructed: {} -> {}",
                corrupted.text(),
                fixed.text()
            );
        }
    }
    let rate = ok as f64 / pairs.len() as f64;
    ensure(rate == 1.0, || format!("reconstruction rate {rate:.3}"))?;
    Ok(format!(
        "reconstruction rate {rate:.1} over {} pairs",
        pairs.len()
    ))
}

fn cli_generate(input: &Path, out: &Path, workers: &str) -> Result<Duration, String> {
    let start = Instant::now();
    let o = Command::new(BIN)
        .args(["generate", "--seed", "42", "--workers", workers, "--input"])
        .arg(input)
        .arg("--out")
        .arg(out)
        .env_remove("TURKGEC_LEXICON_DIR")
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(o.status.success(), || {
        String::from_utf8_lossy(&o.stderr).into_owned()
    })?;
    Ok(elapsed)
}

fn outputs(dir: &Path) -> Result<Vec<Vec<u8>>, String> {
    ["train.m2", "val.m2", "test.m2", "report.json"]
        .iter()
        .map(|f| fs::read(dir.join(f)).map_err(|e| format!("{f}: {e}")))
        .collect()
}

fn sample_path() -> String {
    format!(
        "{}/../../data/sample_corpus.txt",
        env!("CARGO_MANIFEST_DIR")
    )
}

fn determinism() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let input = sample_path();
    let runs = [("a", "1"), ("b", "1"), ("c", PARALLEL_WORKERS)];
    let mut files = Vec::new();
    for (name, workers) in runs {
        let out = dir.path().join(name);
        cli_generate(Path::new(&input), &out, workers)?;
        files.push(outputs(&out)?);
    }
    ensure(files[0] == files[1], || "two 1-worker runs differ".into())?;
    ensure(files[0] == files[2], || {
        format!("1-worker and {PARALLEL_WORKERS}-worker runs differ")
    })?;
    Ok(format!(
        "train/val/test/report byte-identical across reruns and 1 vs {PARALLEL_WORKERS} workers"
    ))
}

fn throughput() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let input = dir.path().join("input.txt");
    let mut text = common::SAMPLE_CORPUS.to_owned();
    text.push_str(common::FUZZ_CORPUS);
    fs::write(&input, &text).map_err(|e| e.to_string())?;
    let n = common::lines(&text).len();
    let elapsed = cli_generate(&input, &dir.path().join("out"), PARALLEL_WORKERS)?;
    let rate = n as f64 / elapsed.as_secs_f64() * 60.0;
    ensure(rate >= MIN_SENTENCES_PER_MINUTE, || {
        format!("{rate:.0} sentences/minute")
    })?;
    Ok(format!(
        "{rate:.0} sentences/minute ({n} sentences in {elapsed:.2?}, minimum {MIN_SENTENCES_PER_MINUTE})"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("rule golden suite, forward and reverse", golden_suite),
        ("three-rule worked M2 record byte-exact", worked_example),
        ("round trip over fuzz corpus x 20 seeds", roundtrip),
        ("corpus composition and splits", composition),
        ("edit extraction oracle and F0.5", scorer),
        ("detection macro F1 crafted cases", detection),
        ("corrector closure", closure),
        ("CLI determinism across runs and workers", determinism),
        ("generation throughput", throughput),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let result =
            panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", n + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail}", n + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
