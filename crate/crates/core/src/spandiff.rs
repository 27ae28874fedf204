//! Single-span diff between a claim and its negated variant.
//!
//! Two token sequences are compared as a prefix, a replaced middle, and a
//! suffix. The common prefix is taken greedily and the common suffix is capped
//! so the two never overlap, which yields the smallest contiguous replacement
//! that turns one sequence into the other.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::tokenizer::TokenSeq;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanDiff {
    /// Replaced tokens in the positive claim.
    pub src_range: Range<usize>,
    /// Substituted tokens in the negative claim.
    pub tgt_range: Range<usize>,
}

impl SpanDiff {
    pub fn src_len(&self) -> usize {
        self.src_range.len()
    }

    pub fn tgt_len(&self) -> usize {
        self.tgt_range.len()
    }

    /// True when nothing was removed from the source, only inserted.
    pub fn is_insertion(&self) -> bool {
        self.src_range.is_empty()
    }
}

/// Which span lengths count against the replacement threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ThresholdStrategy {
    #[default]
    Max,
    SrcOnly,
    TgtOnly,
}

impl FromStr for ThresholdStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "max" => Ok(Self::Max),
            "src" | "src-only" | "src_only" => Ok(Self::SrcOnly),
            "tgt" | "tgt-only" | "tgt_only" => Ok(Self::TgtOnly),
            other => Err(format!("unknown threshold strategy `{other}` (expected max, src or tgt)")),
        }
    }
}

impl fmt::Display for ThresholdStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Max => "max",
            Self::SrcOnly => "src",
            Self::TgtOnly => "tgt",
        })
    }
}

/// Diff over arbitrary comparable token slices. `None` iff the slices are equal.
pub fn span_diff_slices<T: PartialEq>(pos: &[T], neg: &[T]) -> Option<SpanDiff> {
    if pos == neg {
        return None;
    }
    let prefix = pos.iter().zip(neg).take_while(|(a, b)| a == b).count();
    let cap = pos.len().min(neg.len()) - prefix;
    let suffix = pos
        .iter()
        .rev()
        .zip(neg.iter().rev())
        .take(cap)
        .take_while(|(a, b)| a == b)
        .count();
    Some(SpanDiff {
        src_range: prefix..pos.len() - suffix,
        tgt_range: prefix..neg.len() - suffix,
    })
}

/// Case-sensitive diff over token texts.
pub fn span_diff(pos: &TokenSeq, neg: &TokenSeq) -> Option<SpanDiff> {
    span_diff_slices(&pos.texts(), &neg.texts())
}

/// Whether the replacement is small enough to carry over to the evidence.
pub fn within_threshold(diff: &SpanDiff, tau: usize, strategy: ThresholdStrategy) -> bool {
    let size = match strategy {
        ThresholdStrategy::Max => diff.src_len().max(diff.tgt_len()),
        ThresholdStrategy::SrcOnly => diff.src_len(),
        ThresholdStrategy::TgtOnly => diff.tgt_len(),
    };
    size <= tau
}
