//! Embedded regression datasets with their published outcomes.

use crate::criterion::{eno_crit, Mode};
use crate::fusion_type::FusionType;
use crate::input::parse_type;

#[derive(Debug, Clone, Copy)]
pub struct GoldenDataset {
    pub name: &'static str,
    pub description: &'static str,
    /// One type literal per line, in `sieve check` input format.
    pub source: &'static str,
    /// Expected `survives` (paper mode) for each line of `source`.
    pub expected: &'static [bool],
}

const ALL_FALSE_27: [bool; 27] = [false; 27];
const ALL_FALSE_3: [bool; 3] = [false; 3];
const ALL_TRUE_18: [bool; 18] = [true; 18];

pub const DATASETS: &[GoldenDataset] = &[
    GoldenDataset {
        name: "rank14_nonperfect",
        description: "rank-14 non-pointed non-perfect candidates; only the first two survive",
        source: include_str!("../data/golden/rank14_nonperfect.jsonl"),
        expected: &[true, true, false, false, false, false, false],
    },
    GoldenDataset {
        name: "rank14_perfect",
        description: "rank-14 perfect candidates; all excluded",
        source: include_str!("../data/golden/rank14_perfect.jsonl"),
        expected: &ALL_FALSE_27,
    },
    GoldenDataset {
        name: "rank25_odd_perfect",
        description: "rank-25 odd-dimensional perfect candidates (compact form); all excluded",
        source: include_str!("../data/golden/rank25_odd_perfect.jsonl"),
        expected: &ALL_FALSE_3,
    },
    GoldenDataset {
        name: "rank15_survivors",
        description: "sample of rank-15 types that survive the criterion",
        source: include_str!("../data/golden/rank15_survivors.jsonl"),
        expected: &ALL_TRUE_18,
    },
    GoldenDataset {
        name: "closing_examples",
        description: "Z(Rep(A5)) type (survives) and a rank-14 perfect type (excluded)",
        source: include_str!("../data/golden/closing_examples.jsonl"),
        expected: &[true, false],
    },
];

impl GoldenDataset {
    pub fn lines(&self) -> impl Iterator<Item = &'static str> {
        self.source.lines().map(str::trim).filter(|l| !l.is_empty())
    }

    /// Parsed types paired with their expected outcome.
    pub fn entries(&self) -> Vec<(FusionType, bool)> {
        let types: Vec<FusionType> = self
            .lines()
            .map(|l| {
                parse_type(l).unwrap_or_else(|e| panic!("{}: bad literal {l}: {e}", self.name))
            })
            .collect();
        assert_eq!(
            types.len(),
            self.expected.len(),
            "{}: expectation count",
            self.name
        );
        types
            .into_iter()
            .zip(self.expected.iter().copied())
            .collect()
    }

    /// Runs the paper-mode criterion on every entry; returns the entries
    /// whose outcome differs from the expectation.
    pub fn mismatches(&self) -> Vec<(FusionType, bool)> {
        self.entries()
            .into_iter()
            .filter(|(t, expected)| {
                eno_crit(t, Mode::Paper).map(|v| v.survives).ok() != Some(*expected)
            })
            .collect()
    }
}

pub fn dataset(name: &str) -> Option<&'static GoldenDataset> {
    DATASETS.iter().find(|d| d.name == name)
}

/// Every embedded literal, one per line.
pub fn concatenated_inputs() -> String {
    let mut out = String::new();
    for d in DATASETS {
        for line in d.lines() {
            out.push_str(line);
            out.push('\n');
        }
    }
    out
}
