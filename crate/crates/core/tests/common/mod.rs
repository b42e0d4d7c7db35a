#![allow(dead_code)]

pub mod alignment_oracle;
pub mod detection_table;
pub mod golden_cases;

use turkgec::{Rules, Sentence};

pub const FUZZ_CORPUS: &str = include_str!("../../../../data/fuzz_corpus.txt");
pub const SAMPLE_CORPUS: &str = include_str!("../../../../data/sample_corpus.txt");

pub const WORKED_CLEAN: &str =
    "Uyuyakaldığı için hem işe gitmedi hem de akşamki yemeğe gelemeyecek .";
pub const WORKED_M2: &str = "\
S Uyuya kaldığı için hem işe gitmedi hemde akşamki yemeğe gelemiyecek .
A 0 2|||COMP_VERB_ADJ|||Uyuyakaldığı|||REQUIRED|||-NONE-|||0
A 6 7|||CONJ_DE_SEP|||hem de|||REQUIRED|||-NONE-|||0
A 9 10|||PRONOUNC_EXC|||gelemeyecek|||REQUIRED|||-NONE-|||0
";

pub fn lines(corpus: &str) -> Vec<&str> {
    corpus.lines().filter(|l| !l.trim().is_empty()).collect()
}

pub fn tokenized(rules: &Rules, corpus: &str) -> Vec<Sentence> {
    lines(corpus)
        .into_iter()
        .map(|l| rules.tokenizer().tokenize(l))
        .collect()
}
