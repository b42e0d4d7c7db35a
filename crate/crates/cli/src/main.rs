use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use turkgec::m2::{self, AnnotatedPair};
use turkgec::pipeline::{self, Execution, PipelineConfig};
use turkgec::rules::{catalog, RuleId, Rules};
use turkgec::scoring::{self, Label};
use turkgec::sentence::{normalize_line, Sentence};
use turkgec::{corrector, Error};

/// `print!` that exits quietly when stdout is a closed pipe.
macro_rules! out {
    ($($arg:tt)*) => {
        write_stdout(format_args!($($arg)*))
    };
}

macro_rules! outln {
    () => {
        out!("\n")
    };
    ($($arg:tt)*) => {{
        out!($($arg)*);
        out!("\n");
    }};
}

fn write_stdout(args: std::fmt::Arguments) {
    use std::io::Write;
    if let Err(e) = std::io::stdout().lock().write_fmt(args) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: writing to stdout: {e}");
        std::process::exit(2);
    }
}

/// Reversible Turkish writing-rule corruption, rule-based correction and
/// GEC scoring.
///
/// Exit codes: 0 success, 1 usage error or missing/empty input, 2 data error.
#[derive(Debug, Parser)]
#[command(name = "turkgec", version, about, long_about)]
struct Cli {
    /// Directory of lexicon overrides, one `<NAME>.tsv` per lexicon.
    /// Takes precedence over `lexicon_dir` in a config file.
    #[arg(long, global = true, env = "TURKGEC_LEXICON_DIR", value_name = "DIR")]
    lexicon_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate train/val/test M2 files and report.json from clean sentences.
    Generate(GenerateArgs),
    /// Corrupt one sentence and print it with its M2 record.
    Corrupt(CorruptArgs),
    /// Detect and reverse rule errors in sentences.
    Correct(CorrectArgs),
    /// Score system output against gold M2 records.
    Score(ScoreArgs),
    /// Check that every M2 record's edits reverse to its correct sentence.
    Validate(ValidateArgs),
    /// Per-rule annotation counts and error-free share of an M2 file.
    Stats(StatsArgs),
    /// List the supported writing rules.
    Rules(RulesArgs),
}

#[derive(Debug, Args)]
struct GenerateArgs {
    /// Clean input, one sentence per line.
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
    /// TOML pipeline config. Defaults apply when omitted.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Overrides the config seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory, created if missing.
    #[arg(long, value_name = "DIR")]
    out: PathBuf,
    /// Worker threads. 1 runs sequentially; the default uses all cores.
    #[arg(long)]
    workers: Option<usize>,
    /// Print the report as JSON instead of a table.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct CorruptArgs {
    /// Sentence to corrupt, tokens separated by spaces.
    #[arg(value_name = "SENTENCE", required_unless_present = "sentence")]
    text: Option<String>,
    /// Same as the positional argument.
    #[arg(long, conflicts_with = "text")]
    sentence: Option<String>,
    /// Comma-separated rule ids. All rules when omitted.
    #[arg(long, value_delimiter = ',', value_name = "RULES")]
    rules: Vec<String>,
    /// Firing probability for every selected rule. Rule defaults when omitted.
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    M2,
}

#[derive(Debug, Args)]
struct CorrectArgs {
    /// Sentences to correct: plain text, one per line, or an M2 file whose
    /// source sentences are used.
    #[arg(long, value_name = "PATH", required_unless_present = "sentence")]
    input: Option<PathBuf>,
    /// A single sentence to correct.
    #[arg(long, conflicts_with = "input")]
    sentence: Option<String>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScoreMode {
    /// P/R/F0.5 over token edits.
    Correction,
    /// Macro P/R/F1 over rule labels.
    Detection,
}

#[derive(Debug, Args)]
struct ScoreArgs {
    #[arg(value_enum)]
    mode: ScoreMode,
    /// System output. For correction: corrected sentences, one per line, or
    /// M2. For detection: M2 over the same source sentences as the gold file.
    #[arg(long, value_name = "PATH")]
    hyp: PathBuf,
    /// Gold M2 file.
    #[arg(long, value_name = "PATH")]
    gold: PathBuf,
    /// Detection only: score each labeled token instead of each span.
    #[arg(long)]
    token_level: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct ValidateArgs {
    #[arg(long, value_name = "PATH")]
    m2: PathBuf,
}

#[derive(Debug, Args)]
struct StatsArgs {
    #[arg(long, value_name = "PATH")]
    m2: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct RulesArgs {
    #[arg(long)]
    json: bool,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Data(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io { .. } | Error::EmptyInput | Error::UnknownRule(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Data(e.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let lexicon_dir = cli.lexicon_dir;
    let result = match cli.command {
        Command::Generate(a) => generate(a, lexicon_dir),
        Command::Corrupt(a) => corrupt(a, lexicon_dir),
        Command::Correct(a) => correct(a, lexicon_dir),
        Command::Score(a) => score(a),
        Command::Validate(a) => validate(a, lexicon_dir),
        Command::Stats(a) => stats(a),
        Command::Rules(a) => list_rules(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn rules_with(lexicon_dir: Option<PathBuf>, config: &mut PipelineConfig) -> Result<Rules, Failure> {
    if lexicon_dir.is_some() {
        config.lexicon_dir = lexicon_dir;
    }
    Ok(pipeline::rules_for(config)?)
}

fn print_json(value: &impl serde::Serialize) {
    outln!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serializes")
    );
}

fn generate(a: GenerateArgs, lexicon_dir: Option<PathBuf>) -> CmdResult {
    let lines = pipeline::read_lines(&a.input)?;
    if lines.iter().all(|l| l.trim().is_empty()) {
        return Err(Failure::Usage(format!(
            "{}: input contains no sentences",
            a.input.display()
        )));
    }
    let mut config = match &a.config {
        Some(path) => PipelineConfig::load(path)?,
        None => PipelineConfig::default(),
    };
    if let Some(seed) = a.seed {
        config.seed = seed;
    }
    let rules = rules_with(lexicon_dir, &mut config)?;
    let corpus = match a.workers {
        Some(0) => return Err(Failure::Usage("--workers must be at least 1".into())),
        Some(1) => pipeline::generate_corpus(&rules, &lines, &config, Execution::Sequential)?,
        workers => run_parallel(workers, || {
            pipeline::generate_corpus(&rules, &lines, &config, Execution::Parallel)
        })?,
    };
    pipeline::write_corpus(&a.out, &corpus)?;
    for w in &corpus.report.warnings {
        log::warn!("{w}");
    }
    if a.json {
        print_json(&corpus.report);
    } else {
        out!("{}", corpus.report.to_table());
        outln!("{:<22}{}", "output", a.out.display());
    }
    Ok(())
}

#[cfg(feature = "parallel")]
fn run_parallel<T: Send>(
    workers: Option<usize>,
    f: impl FnOnce() -> turkgec::Result<T> + Send,
) -> Result<T, Failure> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = workers {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| Failure::Usage(format!("thread pool: {e}")))?;
    Ok(pool.install(f)?)
}

#[cfg(not(feature = "parallel"))]
fn run_parallel<T: Send>(
    _workers: Option<usize>,
    f: impl FnOnce() -> turkgec::Result<T> + Send,
) -> Result<T, Failure> {
    Ok(f()?)
}

fn parse_rules(names: &[String]) -> Result<Vec<RuleId>, Failure> {
    if names.is_empty() {
        return Ok(RuleId::ALL.to_vec());
    }
    names
        .iter()
        .map(|n| n.trim().parse::<RuleId>().map_err(Failure::from))
        .collect()
}

fn corrupt(a: CorruptArgs, lexicon_dir: Option<PathBuf>) -> CmdResult {
    let text = a.text.or(a.sentence).unwrap_or_default();
    let selected = parse_rules(&a.rules)?;
    let mut config = match a.p {
        Some(p) => PipelineConfig::only(&selected, p),
        None => PipelineConfig {
            enabled_rules: selected.iter().copied().collect(),
            ..PipelineConfig::default()
        },
    };
    config.seed = a.seed;
    config.validate()?;
    let rules = rules_with(lexicon_dir, &mut config)?;
    let sentence = rules.tokenizer().tokenize(&normalize_line(&text));
    if sentence.is_empty() {
        return Err(Failure::Usage("sentence is empty".into()));
    }
    let mut rng = pipeline::sentence_rng(a.seed, 0);
    let pair = pipeline::corrupt_sentence(&rules, &sentence, &config, &mut rng);
    outln!("# seed {}", a.seed);
    outln!("{}", pair.corrupted.text());
    out!("{}", m2::serialize(&pair));
    Ok(())
}

/// Source sentences of an M2 file, or non-empty lines of a text file.
fn load_sentences(rules: &Rules, text: &str) -> Result<Vec<Sentence>, Failure> {
    if is_m2(text) {
        return Ok(m2::parse(text)?.into_iter().map(|p| p.corrupted).collect());
    }
    Ok(text
        .lines()
        .map(normalize_line)
        .filter(|l| !l.is_empty())
        .map(|l| rules.tokenizer().tokenize(&l))
        .collect())
}

fn is_m2(text: &str) -> bool {
    text.lines()
        .find(|l| !l.trim().is_empty())
        .is_some_and(|l| l.starts_with("S "))
}

fn correct(a: CorrectArgs, lexicon_dir: Option<PathBuf>) -> CmdResult {
    let mut config = PipelineConfig::default();
    let rules = rules_with(lexicon_dir, &mut config)?;
    let sentences = match (&a.input, &a.sentence) {
        (Some(path), _) => load_sentences(&rules, &read(path)?)?,
        (None, Some(s)) => load_sentences(&rules, s)?,
        (None, None) => unreachable!("clap requires one input"),
    };
    if sentences.is_empty() {
        return Err(Failure::Usage("input contains no sentences".into()));
    }
    let mut out = String::new();
    for s in &sentences {
        let pair = corrector::correct_sentence(&rules, s)?;
        match a.format {
            OutputFormat::Text => {
                out.push_str(&pair.correct.text());
                out.push('\n');
            }
            OutputFormat::M2 => {
                out.push_str(&m2::serialize(&pair));
                out.push('\n');
            }
        }
    }
    out!("{out}");
    Ok(())
}

fn load_gold(path: &Path) -> Result<Vec<AnnotatedPair>, Failure> {
    let text = read(path)?;
    Ok(m2::parse(&text)?)
}

fn score(a: ScoreArgs) -> CmdResult {
    let gold = load_gold(&a.gold)?;
    let hyp_text = read(&a.hyp)?;
    let report = match a.mode {
        ScoreMode::Correction => {
            let hyps: Vec<Sentence> = if is_m2(&hyp_text) {
                m2::parse(&hyp_text)?
                    .into_iter()
                    .map(|p| p.correct)
                    .collect()
            } else {
                hyp_text
                    .lines()
                    .map(normalize_line)
                    .filter(|l| !l.is_empty())
                    .map(|l| Sentence::from_spaced(&l))
                    .collect()
            };
            scoring::score_correction(&hyps, &gold)?
        }
        ScoreMode::Detection => {
            if !is_m2(&hyp_text) {
                return Err(Failure::Data(format!(
                    "{}: detection scoring needs an M2 hypothesis file",
                    a.hyp.display()
                )));
            }
            let hyps = m2::parse(&hyp_text)?;
            let predicted: Vec<Vec<Label>> = hyps.iter().map(AnnotatedPair::labels).collect();
            let gold_labels: Vec<Vec<Label>> = gold.iter().map(AnnotatedPair::labels).collect();
            scoring::score_detection(&predicted, &gold_labels, a.token_level)?
        }
    };
    if a.json {
        print_json(&report);
    } else {
        out!("{}", report.to_table());
    }
    Ok(())
}

fn validate(a: ValidateArgs, lexicon_dir: Option<PathBuf>) -> CmdResult {
    let records = load_gold(&a.m2)?;
    let mut config = PipelineConfig::default();
    let rules = rules_with(lexicon_dir, &mut config)?;
    let failed: Vec<usize> = records
        .iter()
        .enumerate()
        .filter(|(_, p)| !pipeline::validate_roundtrip(&rules, p))
        .map(|(i, _)| i + 1)
        .collect();
    outln!("records {}", records.len());
    outln!("failed  {}", failed.len());
    if failed.is_empty() {
        return Ok(());
    }
    for r in &failed {
        eprintln!("{}: record {r} does not round-trip", a.m2.display());
    }
    Err(Failure::Data(format!(
        "{} of {} records failed round-trip validation",
        failed.len(),
        records.len()
    )))
}

fn stats(a: StatsArgs) -> CmdResult {
    let records = load_gold(&a.m2)?;
    let mut per_rule: BTreeMap<RuleId, usize> = RuleId::ALL.iter().map(|&r| (r, 0)).collect();
    let mut sentences_per_rule: BTreeMap<RuleId, usize> = per_rule.clone();
    for p in &records {
        let mut seen = Vec::new();
        for e in &p.edits {
            *per_rule.entry(e.rule).or_default() += 1;
            if !seen.contains(&e.rule) {
                seen.push(e.rule);
                *sentences_per_rule.entry(e.rule).or_default() += 1;
            }
        }
    }
    let error_free = records.iter().filter(|p| p.is_error_free()).count();
    let share = if records.is_empty() {
        0.0
    } else {
        error_free as f64 / records.len() as f64
    };
    let annotations: usize = per_rule.values().sum();
    if a.json {
        print_json(&json!({
            "records": records.len(),
            "error_free": error_free,
            "error_free_share": share,
            "annotations": annotations,
            "per_rule": per_rule,
            "sentences_per_rule": sentences_per_rule,
        }));
        return Ok(());
    }
    outln!("{:<22}{}", "records", records.len());
    outln!("{:<22}{} ({share:.3})", "error free", error_free);
    outln!("{:<22}{}", "annotations", annotations);
    outln!("{:<22}{:>8}{:>11}", "rule", "edits", "sentences");
    for (rule, n) in &per_rule {
        outln!(
            "{:<22}{n:>8}{:>11}",
            rule.as_str(),
            sentences_per_rule[rule]
        );
    }
    Ok(())
}

fn list_rules(a: RulesArgs) -> CmdResult {
    let specs = catalog();
    if a.json {
        let rows: Vec<_> = specs
            .iter()
            .map(|s| {
                json!({
                    "number": s.id.number(),
                    "id": s.id,
                    "default_p": s.default_p,
                    "description": s.description,
                    "lexicons": s.required_lexicons,
                })
            })
            .collect();
        print_json(&rows);
        return Ok(());
    }
    for s in specs {
        outln!(
            "{:>3}  {:<20} p={:.4}  {}",
            s.id.number(),
            s.id.as_str(),
            s.default_p,
            s.description
        );
    }
    Ok(())
}
