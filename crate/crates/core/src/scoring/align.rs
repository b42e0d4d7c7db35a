//! Token alignment and edit extraction.

use serde::Serialize;

/// One alignment step from source to hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Op {
    /// Match or substitution.
    Diag,
    Delete,
    Insert,
}

/// A source span and the hypothesis tokens replacing it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SpanEdit {
    pub start: usize,
    pub end: usize,
    pub correction: String,
}

impl SpanEdit {
    pub fn new(start: usize, end: usize, correction: impl Into<String>) -> Self {
        Self {
            start,
            end,
            correction: correction.into(),
        }
    }
}

/// Minimum unit-cost alignment. Among optimal alignments the one that is
/// lexicographically smallest under `Diag < Delete < Insert` is returned.
pub fn align<S: AsRef<str>>(source: &[S], hypothesis: &[S]) -> Vec<Op> {
    let (n, m) = (source.len(), hypothesis.len());
    // cost[i][j]: distance between source[i..] and hypothesis[j..]
    let mut cost = vec![vec![0usize; m + 1]; n + 1];
    for i in (0..=n).rev() {
        for j in (0..=m).rev() {
            cost[i][j] = if i == n {
                m - j
            } else if j == m {
                n - i
            } else {
                let sub = usize::from(source[i].as_ref() != hypothesis[j].as_ref());
                (cost[i + 1][j + 1] + sub)
                    .min(cost[i + 1][j] + 1)
                    .min(cost[i][j + 1] + 1)
            };
        }
    }
    let mut ops = Vec::with_capacity(n.max(m));
    let (mut i, mut j) = (0, 0);
    while i < n || j < m {
        if i < n && j < m {
            let sub = usize::from(source[i].as_ref() != hypothesis[j].as_ref());
            if cost[i][j] == cost[i + 1][j + 1] + sub {
                ops.push(Op::Diag);
                i += 1;
                j += 1;
                continue;
            }
        }
        if i < n && cost[i][j] == cost[i + 1][j] + 1 {
            ops.push(Op::Delete);
            i += 1;
        } else {
            ops.push(Op::Insert);
            j += 1;
        }
    }
    ops
}

/// Merges maximal runs of non-matching steps into edits.
pub fn edits_from_ops<S: AsRef<str>>(source: &[S], hypothesis: &[S], ops: &[Op]) -> Vec<SpanEdit> {
    let mut edits = Vec::new();
    let (mut i, mut j) = (0, 0);
    let mut open: Option<(usize, Vec<&str>)> = None;
    for &op in ops {
        let matched = op == Op::Diag && source[i].as_ref() == hypothesis[j].as_ref();
        if matched {
            if let Some((start, words)) = open.take() {
                edits.push(SpanEdit::new(start, i, words.join(" ")));
            }
        } else {
            let (_, words) = open.get_or_insert((i, Vec::new()));
            if op != Op::Delete {
                words.push(hypothesis[j].as_ref());
            }
        }
        match op {
            Op::Diag => {
                i += 1;
                j += 1;
            }
            Op::Delete => i += 1,
            Op::Insert => j += 1,
        }
    }
    if let Some((start, words)) = open {
        edits.push(SpanEdit::new(start, i, words.join(" ")));
    }
    edits
}

/// Edits turning `source` into `hypothesis`.
pub fn extract_edits<S: AsRef<str>>(source: &[S], hypothesis: &[S]) -> Vec<SpanEdit> {
    let ops = align(source, hypothesis);
    edits_from_ops(source, hypothesis, &ops)
}
