//! Word-level tokenization with byte offsets back into the source string.
//!
//! Tokens are maximal runs of characters that are neither whitespace nor
//! standalone punctuation. A character from [`PUNCTUATION`] becomes a token of
//! its own unless it sits between two word characters (`don't`, `3.5`).

use std::ops::Range;

use thiserror::Error;

/// Characters split off as single-character tokens when not word-internal.
pub const PUNCTUATION: &[char] = &['.', ',', ';', ':', '!', '?', '"', '\'', '(', ')', '[', ']'];

/// Closing punctuation that should hug the preceding word after a deletion.
const CLOSING: &[char] = &['.', ',', ';', ':', '!', '?', ')', ']'];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Token {
    pub text: String,
    /// Inclusive byte offset into the source.
    pub start: usize,
    /// Exclusive byte offset into the source.
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenSeq {
    source: String,
    tokens: Vec<Token>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpliceError {
    #[error("token range {start}..{end} is invalid for a sequence of {len} tokens")]
    OutOfRange { start: usize, end: usize, len: usize },
}

fn is_punct(c: char) -> bool {
    PUNCTUATION.contains(&c)
}

fn is_word_char(c: char) -> bool {
    !c.is_whitespace() && !is_punct(c)
}

/// Splits `text` into tokens. Pure and deterministic.
pub fn tokenize(text: &str) -> TokenSeq {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut tokens = Vec::new();
    let mut current: Option<usize> = None;

    let close = |tokens: &mut Vec<Token>, current: &mut Option<usize>, end: usize| {
        if let Some(start) = current.take() {
            tokens.push(Token { text: text[start..end].to_owned(), start, end });
        }
    };

    for (idx, &(offset, c)) in chars.iter().enumerate() {
        if c.is_whitespace() {
            close(&mut tokens, &mut current, offset);
            continue;
        }
        if is_punct(c) {
            let internal = idx > 0
                && idx + 1 < chars.len()
                && is_word_char(chars[idx - 1].1)
                && is_word_char(chars[idx + 1].1);
            if !internal {
                close(&mut tokens, &mut current, offset);
                let end = offset + c.len_utf8();
                tokens.push(Token { text: text[offset..end].to_owned(), start: offset, end });
                continue;
            }
        }
        if current.is_none() {
            current = Some(offset);
        }
    }
    close(&mut tokens, &mut current, text.len());

    TokenSeq { source: text.to_owned(), tokens }
}

impl TokenSeq {
    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn texts(&self) -> Vec<&str> {
        self.tokens.iter().map(|t| t.text.as_str()).collect()
    }

    /// Byte range of the source covered by tokens `range`. For an empty token
    /// range this is the zero-width insertion point before `range.start` (or
    /// the end of the source).
    pub fn byte_range(&self, range: Range<usize>) -> Result<Range<usize>, SpliceError> {
        if range.start > range.end || range.end > self.tokens.len() {
            return Err(SpliceError::OutOfRange {
                start: range.start,
                end: range.end,
                len: self.tokens.len(),
            });
        }
        if range.is_empty() {
            let at = self.tokens.get(range.start).map_or(self.source.len(), |t| t.start);
            return Ok(at..at);
        }
        Ok(self.tokens[range.start].start..self.tokens[range.end - 1].end)
    }

    /// Exact source bytes covered by a token range (empty for an empty range).
    pub fn covered_text(&self, range: Range<usize>) -> Result<&str, SpliceError> {
        let bytes = self.byte_range(range)?;
        Ok(&self.source[bytes])
    }

    /// Replaces the source bytes covered by `range` with `replacement`.
    ///
    /// Deleting a non-empty range (empty replacement) collapses the
    /// whitespace left at the seam, so `"a b c"` minus `b` is `"a c"`.
    pub fn splice(&self, range: Range<usize>, replacement: &str) -> Result<String, SpliceError> {
        let deletion = !range.is_empty() && replacement.is_empty();
        let bytes = self.byte_range(range)?;
        Ok(splice_bytes(&self.source, bytes, replacement, deletion))
    }
}

/// Byte-level splice shared by [`TokenSeq::splice`] and multi-site edits.
pub(crate) fn splice_bytes(
    source: &str,
    bytes: Range<usize>,
    replacement: &str,
    collapse_seam: bool,
) -> String {
    let left = &source[..bytes.start];
    let right = &source[bytes.end..];
    if !collapse_seam {
        let mut out = String::with_capacity(left.len() + replacement.len() + right.len());
        out.push_str(left);
        out.push_str(replacement);
        out.push_str(right);
        return out;
    }

    let left_core = left.trim_end();
    let right_core = right.trim_start();
    let left_ws = &left[left_core.len()..];
    let right_ws = &right[..right.len() - right_core.len()];

    let seam = if left_core.is_empty() || right_core.is_empty() || right_core.starts_with(CLOSING) {
        ""
    } else if !left_ws.is_empty() {
        left_ws
    } else {
        right_ws
    };

    let mut out = String::with_capacity(source.len());
    out.push_str(left_core);
    out.push_str(seam);
    out.push_str(right_core);
    out
}
