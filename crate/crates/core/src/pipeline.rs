//! Two-stage augmentation of supported claim/evidence pairs.
//!
//! For a SUP sample `(c, e)` the negator proposes `c'`. If `c'` differs from
//! `c` the pair `(c', e, REF)` is always emitted. When the edit between `c`
//! and `c'` is a small enough span whose source tokens appear in `e`, the
//! evidence is edited into `e'` and `(c, e', REF)` and `(c', e', SUP)` follow.
//!
//! Emission order per original is fixed: original, `#nc`, `#ne-pos`, `#ne-neg`.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::corpus::{Dataset, Label, Provenance, Sample};
use crate::evidencemod::{modify_evidence, MatchOptions};
use crate::negator::{ClaimNegator, GenerationStatus, GeneratorSpec};
use crate::spandiff::{span_diff, within_threshold, ThresholdStrategy};
use crate::tokenizer::tokenize;

pub const NEG_CLAIM_SUFFIX: &str = "#nc";
pub const NEG_EVIDENCE_POS_SUFFIX: &str = "#ne-pos";
pub const NEG_EVIDENCE_NEG_SUFFIX: &str = "#ne-neg";

pub const DEFAULT_TAU: usize = 3;
pub const DEFAULT_ABORT_THRESHOLD: f64 = 0.10;

#[derive(Debug, Clone)]
pub struct PipelineConfig {
    /// Largest replaced span (in tokens) that is carried over to the evidence.
    pub tau: usize,
    pub generator: GeneratorSpec,
    pub keep_originals: bool,
    pub threshold_strategy: ThresholdStrategy,
    pub match_options: MatchOptions,
    /// Worker threads for per-sample augmentation.
    pub concurrency: usize,
    /// Fraction of failed generator requests above which a run is aborted.
    pub abort_threshold: f64,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            tau: DEFAULT_TAU,
            generator: GeneratorSpec::default(),
            keep_originals: true,
            threshold_strategy: ThresholdStrategy::Max,
            match_options: MatchOptions::default(),
            concurrency: 1,
            abort_threshold: DEFAULT_ABORT_THRESHOLD,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OutcomeKind {
    SkippedUnchanged,
    SkippedFailed,
    SkippedNotSup,
    ClaimOnly,
    Full,
}

impl OutcomeKind {
    pub fn emitted_count(self) -> usize {
        match self {
            OutcomeKind::ClaimOnly => 1,
            OutcomeKind::Full => 3,
            _ => 0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            OutcomeKind::SkippedUnchanged => "skipped_unchanged",
            OutcomeKind::SkippedFailed => "skipped_failed",
            OutcomeKind::SkippedNotSup => "skipped_not_sup",
            OutcomeKind::ClaimOnly => "claim_only",
            OutcomeKind::Full => "full",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentationOutcome {
    pub kind: OutcomeKind,
    /// Augmented samples in emission order; the original is not included.
    pub emitted: Vec<Sample>,
    /// Generator failure message for `SkippedFailed`.
    pub detail: Option<String>,
}

impl AugmentationOutcome {
    fn skipped(kind: OutcomeKind) -> Self {
        AugmentationOutcome { kind, emitted: Vec::new(), detail: None }
    }
}

/// Outcome counters. Merging is commutative, so aggregation order does not
/// matter.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PipelineStats {
    pub originals: usize,
    pub sup_originals: usize,
    pub skipped_unchanged: usize,
    pub skipped_failed: usize,
    pub skipped_not_sup: usize,
    pub claim_only: usize,
    pub full: usize,
    pub augmented_total: usize,
}

impl PipelineStats {
    pub fn record(&mut self, sample: &Sample, kind: OutcomeKind) {
        self.originals += 1;
        if sample.label == Label::Sup && sample.provenance == Provenance::Original {
            self.sup_originals += 1;
        }
        match kind {
            OutcomeKind::SkippedUnchanged => self.skipped_unchanged += 1,
            OutcomeKind::SkippedFailed => self.skipped_failed += 1,
            OutcomeKind::SkippedNotSup => self.skipped_not_sup += 1,
            OutcomeKind::ClaimOnly => self.claim_only += 1,
            OutcomeKind::Full => self.full += 1,
        }
        self.augmented_total += kind.emitted_count();
    }

    pub fn merge(&mut self, other: &PipelineStats) {
        self.originals += other.originals;
        self.sup_originals += other.sup_originals;
        self.skipped_unchanged += other.skipped_unchanged;
        self.skipped_failed += other.skipped_failed;
        self.skipped_not_sup += other.skipped_not_sup;
        self.claim_only += other.claim_only;
        self.full += other.full;
        self.augmented_total += other.augmented_total;
    }

    pub fn count(&self, kind: OutcomeKind) -> usize {
        match kind {
            OutcomeKind::SkippedUnchanged => self.skipped_unchanged,
            OutcomeKind::SkippedFailed => self.skipped_failed,
            OutcomeKind::SkippedNotSup => self.skipped_not_sup,
            OutcomeKind::ClaimOnly => self.claim_only,
            OutcomeKind::Full => self.full,
        }
    }

    /// Number of generator calls made (every SUP original).
    pub fn generator_requests(&self) -> usize {
        self.skipped_unchanged + self.skipped_failed + self.claim_only + self.full
    }

    /// Augmented samples per original.
    pub fn ratio(&self) -> f64 {
        if self.originals == 0 {
            0.0
        } else {
            self.augmented_total as f64 / self.originals as f64
        }
    }

    /// Ratio rounded half-up to two decimals, computed exactly.
    pub fn ratio_string(&self) -> String {
        format_ratio(self.augmented_total, self.originals)
    }

    /// Flat `key=value` report, one key per line, fixed key order.
    pub fn report(&self) -> String {
        let mut out = String::new();
        for (key, value) in [
            ("originals", self.originals),
            ("sup_originals", self.sup_originals),
            ("skipped_unchanged", self.skipped_unchanged),
            ("skipped_failed", self.skipped_failed),
            ("skipped_not_sup", self.skipped_not_sup),
            ("claim_only", self.claim_only),
            ("full", self.full),
            ("augmented_total", self.augmented_total),
        ] {
            out.push_str(&format!("{key}={value}\n"));
        }
        out.push_str(&format!("ratio={}\n", self.ratio_string()));
        out
    }
}

impl fmt::Display for PipelineStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.report())
    }
}

/// `numerator / denominator` rounded half-up to two decimals; `0.00` for an
/// empty denominator.
pub fn format_ratio(numerator: usize, denominator: usize) -> String {
    if denominator == 0 {
        return "0.00".to_owned();
    }
    let (n, d) = (numerator as u128, denominator as u128);
    let hundredths = (n * 200 + d) / (2 * d);
    format!("{}.{:02}", hundredths / 100, hundredths % 100)
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("invalid pipeline configuration: {0}")]
    InvalidConfig(String),
    #[error("cannot start worker pool: {0}")]
    ThreadPool(String),
    #[error("generator failed on {failed} of {requests} requests (abort threshold {threshold:.0}%)")]
    GeneratorAbort { failed: usize, requests: usize, threshold: f64, stats: PipelineStats },
}

pub struct Pipeline {
    config: PipelineConfig,
    negator: Box<dyn ClaimNegator>,
}

impl Pipeline {
    /// Builds the negator described by `config.generator`.
    pub fn new(config: PipelineConfig) -> Result<Self, PipelineError> {
        let negator = config.generator.build();
        Self::with_negator(config, negator)
    }

    /// Uses a caller-supplied negator; `config.generator` is ignored.
    pub fn with_negator(
        config: PipelineConfig,
        negator: Box<dyn ClaimNegator>,
    ) -> Result<Self, PipelineError> {
        if config.concurrency == 0 {
            return Err(PipelineError::InvalidConfig("concurrency must be positive".into()));
        }
        if !(0.0..=1.0).contains(&config.abort_threshold) {
            return Err(PipelineError::InvalidConfig("abort threshold must be within [0, 1]".into()));
        }
        Ok(Pipeline { config, negator })
    }

    pub fn config(&self) -> &PipelineConfig {
        &self.config
    }

    pub fn augment_sample(&self, sample: &Sample) -> AugmentationOutcome {
        if sample.label != Label::Sup || sample.provenance != Provenance::Original {
            return AugmentationOutcome::skipped(OutcomeKind::SkippedNotSup);
        }

        let generated = self.negator.negate(&sample.id, &sample.claim);
        match generated.status {
            GenerationStatus::Unchanged => {
                return AugmentationOutcome::skipped(OutcomeKind::SkippedUnchanged)
            }
            GenerationStatus::Failed => {
                return AugmentationOutcome {
                    kind: OutcomeKind::SkippedFailed,
                    emitted: Vec::new(),
                    detail: generated.detail,
                }
            }
            GenerationStatus::Ok => {}
        }
        let negative_claim = generated.negative_claim;

        let derived = |suffix: &str, claim: &str, evidence: &str, label, provenance| Sample {
            id: format!("{}{suffix}", sample.id),
            claim: claim.to_owned(),
            evidence: evidence.to_owned(),
            label,
            provenance,
            origin_id: sample.id.clone(),
        };

        let mut emitted = vec![derived(
            NEG_CLAIM_SUFFIX,
            &negative_claim,
            &sample.evidence,
            Label::Ref,
            Provenance::NegClaim,
        )];

        if let Some(modified) = self.modified_evidence(sample, &negative_claim) {
            emitted.push(derived(
                NEG_EVIDENCE_POS_SUFFIX,
                &sample.claim,
                &modified,
                Label::Ref,
                Provenance::PosClaimNegEvidence,
            ));
            emitted.push(derived(
                NEG_EVIDENCE_NEG_SUFFIX,
                &negative_claim,
                &modified,
                Label::Sup,
                Provenance::NegClaimNegEvidence,
            ));
        }

        let kind = if emitted.len() == 3 { OutcomeKind::Full } else { OutcomeKind::ClaimOnly };
        AugmentationOutcome { kind, emitted, detail: None }
    }

    fn modified_evidence(&self, sample: &Sample, negative_claim: &str) -> Option<String> {
        let pos = tokenize(&sample.claim);
        let neg = tokenize(negative_claim);
        let diff = span_diff(&pos, &neg)?;
        if diff.is_insertion() || !within_threshold(&diff, self.config.tau, self.config.threshold_strategy) {
            return None;
        }
        let modified = modify_evidence(&sample.evidence, &diff, &pos, &neg, self.config.match_options)?;
        // identical texts with opposite labels would contradict each other
        (modified != sample.evidence).then_some(modified)
    }

    /// Augments every sample on a pool of `config.concurrency` workers.
    /// Output order depends only on input order.
    pub fn augment_dataset(&self, dataset: &Dataset) -> Result<(Dataset, PipelineStats), PipelineError> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.config.concurrency)
            .build()
            .map_err(|e| PipelineError::ThreadPool(e.to_string()))?;
        let outcomes: Vec<AugmentationOutcome> =
            pool.install(|| dataset.samples.par_iter().map(|s| self.augment_sample(s)).collect());

        let mut stats = PipelineStats::default();
        for (sample, outcome) in dataset.iter().zip(&outcomes) {
            stats.record(sample, outcome.kind);
        }

        let requests = stats.generator_requests();
        if requests > 0
            && stats.skipped_failed as f64 > self.config.abort_threshold * requests as f64
        {
            return Err(PipelineError::GeneratorAbort {
                failed: stats.skipped_failed,
                requests,
                threshold: self.config.abort_threshold * 100.0,
                stats,
            });
        }

        let capacity = stats.augmented_total + if self.config.keep_originals { dataset.len() } else { 0 };
        let mut samples = Vec::with_capacity(capacity);
        for (sample, outcome) in dataset.iter().zip(outcomes) {
            if self.config.keep_originals {
                samples.push(sample.clone());
            }
            samples.extend(outcome.emitted);
        }
        Ok((Dataset::new(samples), stats))
    }
}
