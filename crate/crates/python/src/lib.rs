//! Python bindings for the `crossaug` crate.
//!
//! Samples cross the boundary as the immutable `Sample` class; datasets are
//! plain Python lists of them. Corpus text goes in and out as JSONL strings.

use std::collections::BTreeMap;
use std::time::Duration;

use crossaug::corpus::{parse_records, record_line, validate as validate_dataset, ParseMode};
use crossaug::evidencemod::{modify_evidence as modify, MatchOptions};
use crossaug::negator::{generate_negative as generate, GenerationStatus, GeneratorSpec, Lexicon, RemoteSpec};
use crossaug::pipeline::PipelineError;
use crossaug::subsample::{class_balanced_subsample, SubsampleConfig};
use crossaug::{Dataset, Label, Pipeline, PipelineConfig, PipelineStats, Provenance, ThresholdStrategy};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Sample", module = "crossaug", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PySample(crossaug::Sample);

#[pymethods]
impl PySample {
    #[new]
    #[pyo3(signature = (id, claim, evidence, label, provenance = "ORIGINAL", origin_id = None))]
    fn new(
        id: String,
        claim: String,
        evidence: String,
        label: &str,
        provenance: &str,
        origin_id: Option<String>,
    ) -> PyResult<Self> {
        let label: Label = label.parse().map_err(value_err)?;
        let provenance: Provenance = provenance.parse().map_err(value_err)?;
        let origin_id = origin_id.unwrap_or_else(|| id.clone());
        Ok(PySample(crossaug::Sample { id, claim, evidence, label, provenance, origin_id }))
    }

    #[getter]
    fn id(&self) -> &str {
        &self.0.id
    }

    #[getter]
    fn claim(&self) -> &str {
        &self.0.claim
    }

    #[getter]
    fn evidence(&self) -> &str {
        &self.0.evidence
    }

    #[getter]
    fn label(&self) -> &'static str {
        self.0.label.as_str()
    }

    #[getter]
    fn provenance(&self) -> &'static str {
        self.0.provenance.as_str()
    }

    #[getter]
    fn origin_id(&self) -> &str {
        &self.0.origin_id
    }

    /// The sample as one JSONL record, without the trailing newline.
    fn to_json(&self) -> String {
        record_line(&self.0)
    }

    fn __repr__(&self) -> String {
        format!("Sample({})", record_line(&self.0))
    }
}

fn to_dataset(samples: Vec<PySample>) -> Dataset {
    samples.into_iter().map(|s| s.0).collect()
}

fn to_list(dataset: Dataset) -> Vec<PySample> {
    dataset.samples.into_iter().map(PySample).collect()
}

fn generator_spec(
    generator: &str,
    lexicon: Option<&str>,
    timeout_ms: u64,
    max_in_flight: usize,
) -> PyResult<GeneratorSpec> {
    if generator == "rule" {
        let lexicon = match lexicon {
            Some(path) => Lexicon::from_path(path).map_err(value_err)?,
            None => Lexicon::bundled(),
        };
        return Ok(GeneratorSpec::Rule { lexicon });
    }
    let spec = RemoteSpec::new(generator, Duration::from_millis(timeout_ms), max_in_flight).map_err(value_err)?;
    Ok(GeneratorSpec::Remote(spec))
}

fn stats_dict(stats: &PipelineStats) -> BTreeMap<&'static str, usize> {
    BTreeMap::from([
        ("originals", stats.originals),
        ("sup_originals", stats.sup_originals),
        ("skipped_unchanged", stats.skipped_unchanged),
        ("skipped_failed", stats.skipped_failed),
        ("skipped_not_sup", stats.skipped_not_sup),
        ("claim_only", stats.claim_only),
        ("full", stats.full),
        ("augmented_total", stats.augmented_total),
    ])
}

/// Tokens of `text` as `(text, start_byte, end_byte)` triples.
#[pyfunction]
fn tokenize(text: &str) -> Vec<(String, usize, usize)> {
    crossaug::tokenize(text).tokens().iter().map(|t| (t.text.clone(), t.start, t.end)).collect()
}

type Span = (usize, usize);

/// Token ranges `((src_start, src_end), (tgt_start, tgt_end))` replaced
/// between two claims, or `None` if they tokenize identically.
#[pyfunction]
fn span_diff(pos: &str, neg: &str) -> Option<(Span, Span)> {
    crossaug::span_diff(&crossaug::tokenize(pos), &crossaug::tokenize(neg))
        .map(|d| ((d.src_range.start, d.src_range.end), (d.tgt_range.start, d.tgt_range.end)))
}

#[pyfunction]
#[pyo3(signature = (diff, tau, strategy = "max"))]
fn within_threshold(diff: (Span, Span), tau: usize, strategy: &str) -> PyResult<bool> {
    let strategy: ThresholdStrategy = strategy.parse().map_err(value_err)?;
    let ((a, b), (c, d)) = diff;
    if a > b || c > d {
        return Err(PyValueError::new_err("span ranges must be (start, end) with start <= end"));
    }
    let diff = crossaug::SpanDiff { src_range: a..b, tgt_range: c..d };
    Ok(crossaug::spandiff::within_threshold(&diff, tau, strategy))
}

/// Returns `(negative_claim, status, detail)` where status is one of
/// `"ok"`, `"unchanged"` or `"failed"`.
#[pyfunction]
#[pyo3(signature = (claim, generator = "rule", lexicon = None, timeout_ms = 30_000, max_in_flight = 8))]
fn generate_negative(
    py: Python<'_>,
    claim: &str,
    generator: &str,
    lexicon: Option<&str>,
    timeout_ms: u64,
    max_in_flight: usize,
) -> PyResult<(String, &'static str, Option<String>)> {
    let spec = generator_spec(generator, lexicon, timeout_ms, max_in_flight)?;
    let r = py.detach(|| generate(claim, &spec));
    let status = match r.status {
        GenerationStatus::Ok => "ok",
        GenerationStatus::Unchanged => "unchanged",
        GenerationStatus::Failed => "failed",
    };
    Ok((r.negative_claim, status, r.detail))
}

/// Evidence with the claim's replaced span swapped for the negative claim's,
/// or `None` when the span is not found or the claims are identical.
#[pyfunction]
#[pyo3(signature = (evidence, claim, negative_claim, match_case = false, replace_all = false))]
fn modify_evidence(
    evidence: &str,
    claim: &str,
    negative_claim: &str,
    match_case: bool,
    replace_all: bool,
) -> Option<String> {
    let pos = crossaug::tokenize(claim);
    let neg = crossaug::tokenize(negative_claim);
    let diff = crossaug::span_diff(&pos, &neg)?;
    modify(evidence, &diff, &pos, &neg, MatchOptions { match_case, replace_all })
}

/// Runs the augmentation pipeline. Returns the output samples and a dict of
/// outcome counts plus `"ratio"` (formatted to two decimals).
#[pyfunction]
#[pyo3(signature = (
    samples,
    tau = 3,
    generator = "rule",
    lexicon = None,
    keep_originals = true,
    threshold_strategy = "max",
    match_case = false,
    replace_all = false,
    concurrency = 1,
    timeout_ms = 30_000,
    max_in_flight = 8,
    abort_threshold = 0.10,
))]
#[allow(clippy::too_many_arguments)]
fn augment(
    py: Python<'_>,
    samples: Vec<PySample>,
    tau: usize,
    generator: &str,
    lexicon: Option<&str>,
    keep_originals: bool,
    threshold_strategy: &str,
    match_case: bool,
    replace_all: bool,
    concurrency: usize,
    timeout_ms: u64,
    max_in_flight: usize,
    abort_threshold: f64,
) -> PyResult<(Vec<PySample>, Py<PyDict>)> {
    let config = PipelineConfig {
        tau,
        generator: generator_spec(generator, lexicon, timeout_ms, max_in_flight)?,
        keep_originals,
        threshold_strategy: threshold_strategy.parse().map_err(value_err)?,
        match_options: MatchOptions { match_case, replace_all },
        concurrency,
        abort_threshold,
    };
    let pipeline = Pipeline::new(config).map_err(value_err)?;
    let input = to_dataset(samples);
    let (out, stats) = py.detach(|| pipeline.augment_dataset(&input)).map_err(|e| match e {
        PipelineError::GeneratorAbort { .. } => PyRuntimeError::new_err(e.to_string()),
        other => value_err(other),
    })?;
    let dict = PyDict::new(py);
    for (key, value) in stats_dict(&stats) {
        dict.set_item(key, value)?;
    }
    dict.set_item("ratio", stats.ratio_string())?;
    Ok((to_list(out), dict.unbind()))
}

#[pyfunction]
#[pyo3(signature = (text, lenient = false))]
fn parse_jsonl(text: &str, lenient: bool) -> PyResult<Vec<PySample>> {
    let mode = if lenient { ParseMode::Lenient } else { ParseMode::Strict };
    let parsed = parse_records(text.as_bytes(), mode).map_err(value_err)?;
    Ok(to_list(parsed.dataset))
}

#[pyfunction]
fn to_jsonl(samples: Vec<PySample>) -> String {
    samples.iter().map(|s| record_line(&s.0) + "\n").collect()
}

/// Class-balanced subsample. `fraction` is a decimal or `"a/b"` string so
/// the per-class counts are computed exactly.
#[pyfunction]
fn subsample(samples: Vec<PySample>, fraction: &str, seed: u64) -> PyResult<Vec<PySample>> {
    let config = SubsampleConfig { fraction: fraction.parse().map_err(value_err)?, seed };
    let out = class_balanced_subsample(&to_dataset(samples), config).map_err(value_err)?;
    Ok(to_list(out.dataset))
}

/// Human-readable violations; empty when the dataset is consistent.
#[pyfunction]
fn validate(samples: Vec<PySample>) -> Vec<String> {
    validate_dataset(&to_dataset(samples)).violations.iter().map(ToString::to_string).collect()
}

#[pymodule(name = "crossaug")]
fn crossaug_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySample>()?;
    m.add_function(wrap_pyfunction!(tokenize, m)?)?;
    m.add_function(wrap_pyfunction!(span_diff, m)?)?;
    m.add_function(wrap_pyfunction!(within_threshold, m)?)?;
    m.add_function(wrap_pyfunction!(generate_negative, m)?)?;
    m.add_function(wrap_pyfunction!(modify_evidence, m)?)?;
    m.add_function(wrap_pyfunction!(augment, m)?)?;
    m.add_function(wrap_pyfunction!(parse_jsonl, m)?)?;
    m.add_function(wrap_pyfunction!(to_jsonl, m)?)?;
    m.add_function(wrap_pyfunction!(subsample, m)?)?;
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    Ok(())
}
