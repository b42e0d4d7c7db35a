//! Detection scoring cases with macro F1 worked out by hand.

use turkgec::scoring::Label;
use turkgec::RuleId;

const A: Label = Some(RuleId::Yada);
const B: Label = Some(RuleId::CaseDe);
const C: Label = Some(RuleId::SentCap);
const O: Label = None;

pub struct DetectionCase {
    pub name: &'static str,
    pub predicted: &'static [&'static [Label]],
    pub gold: &'static [&'static [Label]],
    pub token_level: bool,
    pub macro_f1: f64,
}

const fn f1(p: f64, r: f64) -> f64 {
    2.0 * p * r / (p + r)
}

pub const CASES: &[DetectionCase] = &[
    // A: 1/1 matched. B: nothing predicted, one gold span. (1 + 0) / 2.
    DetectionCase {
        name: "one of two classes found",
        predicted: &[&[A, O, O, O]],
        gold: &[&[A, O, B, B]],
        token_level: false,
        macro_f1: 0.5,
    },
    DetectionCase {
        name: "perfect prediction",
        predicted: &[&[A, O, B, B, C]],
        gold: &[&[A, O, B, B, C]],
        token_level: false,
        macro_f1: 1.0,
    },
    DetectionCase {
        name: "nothing predicted",
        predicted: &[&[O, O, O]],
        gold: &[&[A, O, O]],
        token_level: false,
        macro_f1: 0.0,
    },
    // No class occurs at all, so the macro average is over nothing.
    DetectionCase {
        name: "no labels anywhere",
        predicted: &[&[O, O]],
        gold: &[&[O, O]],
        token_level: false,
        macro_f1: 0.0,
    },
    // Span (0,1) against (0,2) is a miss.
    DetectionCase {
        name: "span boundary must match",
        predicted: &[&[B, O, O]],
        gold: &[&[B, B, O]],
        token_level: false,
        macro_f1: 0.0,
    },
    // Tokens: P = 1/1, R = 1/2.
    DetectionCase {
        name: "token level credits overlap",
        predicted: &[&[B, O, O]],
        gold: &[&[B, B, O]],
        token_level: true,
        macro_f1: f1(1.0, 0.5),
    },
    // A: P 0/0, R 0/1. B: P 0/1, R 0/0.
    DetectionCase {
        name: "wrong class on the right span",
        predicted: &[&[B]],
        gold: &[&[A]],
        token_level: false,
        macro_f1: 0.0,
    },
    // A: 1 matched, 3 predicted, 2 gold. P 1/3, R 1/2, F1 0.4.
    DetectionCase {
        name: "counts pool across sentences",
        predicted: &[&[A, O], &[O, A], &[A, O]],
        gold: &[&[A, O], &[A, O], &[O, O]],
        token_level: false,
        macro_f1: 0.4,
    },
    // A and B perfect, C missed. 2/3.
    DetectionCase {
        name: "three classes one missed",
        predicted: &[&[A, B, O]],
        gold: &[&[A, B, C]],
        token_level: false,
        macro_f1: 2.0 / 3.0,
    },
    DetectionCase {
        name: "adjacent same-class tokens form one span",
        predicted: &[&[A, O, O]],
        gold: &[&[A, A, O]],
        token_level: false,
        macro_f1: 0.0,
    },
    // A perfect. C predicted with no gold support scores 0. (1 + 0) / 2.
    DetectionCase {
        name: "class only in predictions counts",
        predicted: &[&[A, O, C]],
        gold: &[&[A, O, O]],
        token_level: false,
        macro_f1: 0.5,
    },
    // A: P 2/2, R 2/3, F1 0.8. B perfect. (0.8 + 1) / 2.
    DetectionCase {
        name: "partial recall with a second class",
        predicted: &[&[A, O, A, O, O], &[B, O]],
        gold: &[&[A, O, A, O, A], &[B, O]],
        token_level: false,
        macro_f1: 0.9,
    },
    // Tokens. A: P 1, R 2/3. B: P 1, R 1/2.
    DetectionCase {
        name: "token level over partial spans",
        predicted: &[&[A, A, O, O, B]],
        gold: &[&[A, A, A, B, B]],
        token_level: true,
        macro_f1: (f1(1.0, 2.0 / 3.0) + f1(1.0, 0.5)) / 2.0,
    },
    DetectionCase {
        name: "partial spans score zero at span level",
        predicted: &[&[A, A, O, O, B]],
        gold: &[&[A, A, A, B, B]],
        token_level: false,
        macro_f1: 0.0,
    },
];

pub fn to_vecs(rows: &[&[Label]]) -> Vec<Vec<Label>> {
    rows.iter().map(|r| r.to_vec()).collect()
}
