//! Contrastive data augmentation for claim/evidence fact-verification corpora.
//!
//! For every supported claim `c` with evidence `e`, a negative claim `c'` is
//! generated, the span that changed between `c` and `c'` is located in `e` and
//! substituted to form a modified evidence `e'`, and the four texts are paired
//! cross-wise:
//!
//! | claim | evidence | label |
//! |-------|----------|-------|
//! | `c`   | `e`      | SUP (original) |
//! | `c'`  | `e`      | REF |
//! | `c`   | `e'`     | REF |
//! | `c'`  | `e'`     | SUP |
//!
//! The crate also provides class-balanced subsampling and a command-line
//! front end (see [`cli`]).

pub mod cli;
pub mod corpus;
pub mod evidencemod;
pub mod negator;
pub mod pipeline;
pub mod spandiff;
pub mod subsample;
pub mod tokenizer;

pub use corpus::{Dataset, Label, Provenance, Sample};
pub use pipeline::{AugmentationOutcome, OutcomeKind, Pipeline, PipelineConfig, PipelineStats};
pub use spandiff::{span_diff, SpanDiff, ThresholdStrategy};
pub use tokenizer::{tokenize, Token, TokenSeq};
