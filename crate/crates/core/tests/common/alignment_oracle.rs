//! Exhaustive alignment search used as the reference for edit extraction.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use turkgec::scoring::SpanEdit;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Step {
    Keep,
    Drop,
    Add,
}

struct Search<'a> {
    src: &'a [String],
    hyp: &'a [String],
    path: Vec<Step>,
    best: Option<(usize, Vec<Step>)>,
}

impl Search<'_> {
    /// Depth-first over every monotone alignment, visiting steps in the order
    /// Keep, Drop, Add. Only strictly cheaper paths replace the incumbent, so
    /// the first optimal path found is the lexicographically smallest one.
    fn walk(&mut self, i: usize, j: usize, cost: usize) {
        let (n, m) = (self.src.len(), self.hyp.len());
        if let Some((best, _)) = &self.best {
            if cost + (n - i).abs_diff(m - j) >= *best {
                return;
            }
        }
        if i == n && j == m {
            self.best = Some((cost, self.path.clone()));
            return;
        }
        if i < n && j < m {
            self.path.push(Step::Keep);
            self.walk(i + 1, j + 1, cost + usize::from(self.src[i] != self.hyp[j]));
            self.path.pop();
        }
        if i < n {
            self.path.push(Step::Drop);
            self.walk(i + 1, j, cost + 1);
            self.path.pop();
        }
        if j < m {
            self.path.push(Step::Add);
            self.walk(i, j + 1, cost + 1);
            self.path.pop();
        }
    }
}

pub fn oracle(src: &[String], hyp: &[String]) -> Vec<SpanEdit> {
    let mut search = Search {
        src,
        hyp,
        path: Vec::new(),
        best: None,
    };
    search.walk(0, 0, 0);
    let (_, path) = search.best.expect("some alignment exists");

    let mut edits = Vec::new();
    let (mut i, mut j) = (0, 0);
    let mut pending: Option<(usize, Vec<String>)> = None;
    for step in path {
        let same = step == Step::Keep && src[i] == hyp[j];
        if same {
            if let Some((start, words)) = pending.take() {
                edits.push(SpanEdit::new(start, i, words.join(" ")));
            }
        } else {
            let entry = pending.get_or_insert_with(|| (i, Vec::new()));
            if step != Step::Drop {
                entry.1.push(hyp[j].clone());
            }
        }
        match step {
            Step::Keep => (i, j) = (i + 1, j + 1),
            Step::Drop => i += 1,
            Step::Add => j += 1,
        }
    }
    if let Some((start, words)) = pending {
        edits.push(SpanEdit::new(start, i, words.join(" ")));
    }
    edits
}

pub fn random_tokens(rng: &mut ChaCha8Rng, vocab: &[&str]) -> Vec<String> {
    let len = rng.gen_range(0..=8);
    (0..len)
        .map(|_| vocab[rng.gen_range(0..vocab.len())].to_owned())
        .collect()
}

/// Deterministic source/hypothesis pairs of at most 8 tokens. Odd cases are
/// small perturbations of the source, even ones are unrelated.
pub fn random_pairs(count: usize, seed: u64) -> Vec<(Vec<String>, Vec<String>)> {
    let vocab = ["ev", "de", "da", "ya", "yada", "hem", "hemde", "ki", "."];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|case| {
            let src = random_tokens(&mut rng, &vocab);
            let hyp = if case % 2 == 0 {
                random_tokens(&mut rng, &vocab)
            } else {
                perturb(&mut rng, &src, &vocab)
            };
            (src, hyp)
        })
        .collect()
}

fn perturb(rng: &mut ChaCha8Rng, src: &[String], vocab: &[&str]) -> Vec<String> {
    let mut h = src.to_vec();
    for _ in 0..rng.gen_range(1..=3) {
        match rng.gen_range(0..3) {
            0 if !h.is_empty() => {
                let k = rng.gen_range(0..h.len());
                h.remove(k);
            }
            1 if !h.is_empty() => {
                let k = rng.gen_range(0..h.len());
                h[k] = vocab[rng.gen_range(0..vocab.len())].to_owned();
            }
            _ => {
                let k = rng.gen_range(0..=h.len());
                h.insert(k, vocab[rng.gen_range(0..vocab.len())].to_owned());
            }
        }
    }
    h.truncate(8);
    h
}
