//! Carries a claim edit over to the evidence.
//!
//! The tokens replaced in the positive claim are searched for in the evidence
//! and substituted with the negative claim's replacement text, producing a
//! modified evidence that supports the negative claim.

use std::ops::Range;

use crate::spandiff::SpanDiff;
use crate::tokenizer::{splice_bytes, tokenize, TokenSeq};

/// Matching behaviour between claim span and evidence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MatchOptions {
    /// Require exact case instead of case-insensitive token equality.
    pub match_case: bool,
    /// Replace every non-overlapping occurrence instead of the leftmost one.
    pub replace_all: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvidenceEdit {
    pub match_token_range: Range<usize>,
    /// Verbatim bytes of the negative claim covering its target span.
    pub replacement_text: String,
}

fn tokens_match(a: &str, b: &str, match_case: bool) -> bool {
    if match_case {
        a == b
    } else {
        a == b || a.to_lowercase() == b.to_lowercase()
    }
}

fn matches_at(evidence: &TokenSeq, at: usize, src: &[&str], match_case: bool) -> bool {
    evidence.tokens()[at..at + src.len()]
        .iter()
        .zip(src)
        .all(|(tok, want)| tokens_match(&tok.text, want, match_case))
}

/// Leftmost case-insensitive occurrence of `src_tokens` in the evidence.
pub fn find_span(evidence: &TokenSeq, src_tokens: &[&str]) -> Option<Range<usize>> {
    find_span_with(evidence, src_tokens, MatchOptions::default())
}

pub fn find_span_with(
    evidence: &TokenSeq,
    src_tokens: &[&str],
    opts: MatchOptions,
) -> Option<Range<usize>> {
    if src_tokens.is_empty() || src_tokens.len() > evidence.len() {
        return None;
    }
    (0..=evidence.len() - src_tokens.len())
        .find(|&at| matches_at(evidence, at, src_tokens, opts.match_case))
        .map(|at| at..at + src_tokens.len())
}

/// All non-overlapping occurrences, scanning left to right.
pub fn find_all_spans(
    evidence: &TokenSeq,
    src_tokens: &[&str],
    match_case: bool,
) -> Vec<Range<usize>> {
    let mut found = Vec::new();
    if src_tokens.is_empty() || src_tokens.len() > evidence.len() {
        return found;
    }
    let mut at = 0;
    while at + src_tokens.len() <= evidence.len() {
        if matches_at(evidence, at, src_tokens, match_case) {
            found.push(at..at + src_tokens.len());
            at += src_tokens.len();
        } else {
            at += 1;
        }
    }
    found
}

/// Locates the edit sites. Empty when the source span is empty (a pure
/// insertion has nothing to search for) or absent from the evidence.
pub fn plan_edits(
    evidence: &TokenSeq,
    diff: &SpanDiff,
    pos: &TokenSeq,
    neg: &TokenSeq,
    opts: MatchOptions,
) -> Vec<EvidenceEdit> {
    if diff.src_range.is_empty() || diff.src_range.end > pos.len() || diff.tgt_range.end > neg.len() {
        return Vec::new();
    }
    let src: Vec<&str> = pos.tokens()[diff.src_range.clone()].iter().map(|t| t.text.as_str()).collect();
    let replacement = neg
        .covered_text(diff.tgt_range.clone())
        .expect("tgt range checked above")
        .to_owned();

    let ranges = if opts.replace_all {
        find_all_spans(evidence, &src, opts.match_case)
    } else {
        find_span_with(evidence, &src, opts).into_iter().collect()
    };
    ranges
        .into_iter()
        .map(|match_token_range| EvidenceEdit { match_token_range, replacement_text: replacement.clone() })
        .collect()
}

/// Applies non-overlapping edits. Edits are applied right to left so byte
/// offsets of earlier sites stay valid.
pub fn apply_edits(evidence: &TokenSeq, edits: &[EvidenceEdit]) -> String {
    let mut ordered: Vec<&EvidenceEdit> = edits.iter().collect();
    ordered.sort_by_key(|e| std::cmp::Reverse(e.match_token_range.start));
    let mut text = evidence.source().to_owned();
    for edit in ordered {
        let bytes = evidence
            .byte_range(edit.match_token_range.clone())
            .expect("edit range comes from this token sequence");
        let deletion = !edit.match_token_range.is_empty() && edit.replacement_text.is_empty();
        text = splice_bytes(&text, bytes, &edit.replacement_text, deletion);
    }
    text
}

/// Modified evidence, or `None` when the claim's replaced tokens cannot be
/// found in it.
pub fn modify_evidence(
    evidence_text: &str,
    diff: &SpanDiff,
    pos: &TokenSeq,
    neg: &TokenSeq,
    opts: MatchOptions,
) -> Option<String> {
    let evidence = tokenize(evidence_text);
    let edits = plan_edits(&evidence, diff, pos, neg, opts);
    if edits.is_empty() {
        return None;
    }
    Some(apply_edits(&evidence, &edits))
}
