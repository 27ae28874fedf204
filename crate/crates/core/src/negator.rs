//! Negative claim generation.
//!
//! A [`ClaimNegator`] turns a supported claim into one candidate claim that
//! the same evidence refutes. Two implementations ship here: [`RuleNegator`],
//! a deterministic rule set (auxiliary negation, then antonym substitution),
//! and [`RemoteNegator`], a client for an external generator service speaking
//! the `/negate` JSON protocol.

use std::collections::HashMap;
use std::fs;
use std::io::Read;
use std::path::Path;
use std::sync::{Condvar, Mutex};
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use url::Url;

use crate::tokenizer::tokenize;

/// Auxiliaries and copulas that take a following "not".
pub const AUXILIARIES: &[&str] = &[
    "is", "are", "was", "were", "has", "have", "had", "can", "could", "will", "would", "must",
    "may", "might", "does", "do", "did",
];

const BUNDLED_LEXICON: &str = include_str!("../data/antonyms.tsv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenerationStatus {
    Ok,
    Unchanged,
    Failed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenerationResult {
    pub negative_claim: String,
    pub status: GenerationStatus,
    pub detail: Option<String>,
}

impl GenerationResult {
    /// Classifies a generator output against its input claim.
    pub fn from_output(claim: &str, output: String) -> Self {
        let status = if output == claim {
            GenerationStatus::Unchanged
        } else {
            GenerationStatus::Ok
        };
        GenerationResult { negative_claim: output, status, detail: None }
    }

    pub fn failed(claim: &str, detail: impl Into<String>) -> Self {
        GenerationResult {
            negative_claim: claim.to_owned(),
            status: GenerationStatus::Failed,
            detail: Some(detail.into()),
        }
    }
}

/// Produces exactly one negative claim per input claim.
pub trait ClaimNegator: Send + Sync {
    /// `id` identifies the request to remote services; local generators ignore it.
    fn negate(&self, id: &str, claim: &str) -> GenerationResult;
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LexiconError {
    #[error("lexicon line {line}: expected `word<TAB>antonym`")]
    Malformed { line: usize },
    #[error("cannot read lexicon {path}: {message}")]
    Io { path: String, message: String },
}

/// Case-insensitive word → antonym table.
///
/// Pairs are symmetric: a line `hot<TAB>cold` also maps `cold` to `hot`
/// unless `cold` has its own earlier entry.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: HashMap<String, String>,
}

impl Lexicon {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The antonym list compiled into the crate.
    pub fn bundled() -> Self {
        Self::parse(BUNDLED_LEXICON).expect("bundled lexicon is well-formed")
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, LexiconError> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| LexiconError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::parse(&text)
    }

    /// Parses `word<TAB>antonym` lines; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self, LexiconError> {
        let mut forward = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let mut parts = line.split('\t');
            let (Some(word), Some(antonym), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(LexiconError::Malformed { line: idx + 1 });
            };
            let (word, antonym) = (word.trim(), antonym.trim());
            if word.is_empty() || antonym.is_empty() {
                return Err(LexiconError::Malformed { line: idx + 1 });
            }
            forward.push((word.to_lowercase(), antonym.to_owned()));
        }

        let mut entries = HashMap::new();
        for (word, antonym) in &forward {
            entries.entry(word.clone()).or_insert_with(|| antonym.clone());
        }
        for (word, antonym) in &forward {
            entries.entry(antonym.to_lowercase()).or_insert_with(|| word.clone());
        }
        Ok(Lexicon { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn antonym(&self, word: &str) -> Option<&str> {
        self.entries.get(&word.to_lowercase()).map(String::as_str)
    }
}

/// Deterministic rule-based negator. Rules, first match wins:
///
/// 1. insert `not` after the first auxiliary not already followed by `not`;
/// 2. replace the first lexicon word with its antonym, keeping an initial capital;
/// 3. otherwise return the claim unchanged.
#[derive(Debug, Clone, Default)]
pub struct RuleNegator {
    lexicon: Lexicon,
}

impl RuleNegator {
    pub fn new(lexicon: Lexicon) -> Self {
        RuleNegator { lexicon }
    }

    pub fn lexicon(&self) -> &Lexicon {
        &self.lexicon
    }

    pub fn apply(&self, claim: &str) -> String {
        let seq = tokenize(claim);
        let tokens = seq.tokens();

        let aux = tokens.iter().enumerate().find(|(i, t)| {
            AUXILIARIES.contains(&t.text.to_lowercase().as_str())
                && !tokens.get(i + 1).is_some_and(|next| next.text.eq_ignore_ascii_case("not"))
        });
        if let Some((_, tok)) = aux {
            return format!("{} not{}", &claim[..tok.end], &claim[tok.end..]);
        }

        for tok in tokens {
            if let Some(antonym) = self.lexicon.antonym(&tok.text) {
                let replacement = match_initial_case(&tok.text, antonym);
                return format!("{}{}{}", &claim[..tok.start], replacement, &claim[tok.end..]);
            }
        }

        claim.to_owned()
    }
}

fn match_initial_case(original: &str, replacement: &str) -> String {
    let starts_upper = original.chars().next().is_some_and(char::is_uppercase);
    let mut chars = replacement.chars();
    match chars.next() {
        Some(first) if starts_upper => first.to_uppercase().chain(chars).collect(),
        _ => replacement.to_owned(),
    }
}

impl ClaimNegator for RuleNegator {
    fn negate(&self, _id: &str, claim: &str) -> GenerationResult {
        GenerationResult::from_output(claim, self.apply(claim))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("invalid generator endpoint `{0}`")]
    BadEndpoint(String),
    #[error("generator timeout must be positive")]
    ZeroTimeout,
    #[error("max_in_flight must be positive")]
    ZeroInFlight,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemoteSpec {
    pub endpoint: Url,
    pub timeout: Duration,
    pub max_in_flight: usize,
}

impl RemoteSpec {
    pub fn new(endpoint: &str, timeout: Duration, max_in_flight: usize) -> Result<Self, GeneratorError> {
        let endpoint =
            Url::parse(endpoint).map_err(|_| GeneratorError::BadEndpoint(endpoint.to_owned()))?;
        if !matches!(endpoint.scheme(), "http" | "https") || endpoint.host().is_none() {
            return Err(GeneratorError::BadEndpoint(endpoint.to_string()));
        }
        if timeout.is_zero() {
            return Err(GeneratorError::ZeroTimeout);
        }
        if max_in_flight == 0 {
            return Err(GeneratorError::ZeroInFlight);
        }
        Ok(RemoteSpec { endpoint, timeout, max_in_flight })
    }
}

/// How negative claims are produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    Rule { lexicon: Lexicon },
    Remote(RemoteSpec),
}

impl Default for GeneratorSpec {
    fn default() -> Self {
        GeneratorSpec::Rule { lexicon: Lexicon::bundled() }
    }
}

impl GeneratorSpec {
    pub fn is_remote(&self) -> bool {
        matches!(self, GeneratorSpec::Remote(_))
    }

    pub fn build(&self) -> Box<dyn ClaimNegator> {
        match self {
            GeneratorSpec::Rule { lexicon } => Box::new(RuleNegator::new(lexicon.clone())),
            GeneratorSpec::Remote(spec) => Box::new(RemoteNegator::new(spec.clone())),
        }
    }
}

/// One-shot generation. Builds the generator on every call; reuse a
/// [`ClaimNegator`] from [`GeneratorSpec::build`] for batches.
pub fn generate_negative(claim: &str, spec: &GeneratorSpec) -> GenerationResult {
    spec.build().negate("0", claim)
}

#[derive(Serialize)]
struct NegateRequest<'a> {
    id: &'a str,
    claim: &'a str,
}

#[derive(Deserialize)]
struct NegateResponse {
    id: String,
    negative_claim: String,
}

/// Counting semaphore bounding concurrent requests.
struct InFlight {
    available: Mutex<usize>,
    released: Condvar,
}

impl InFlight {
    fn acquire(&self) -> InFlightGuard<'_> {
        let mut n = self.available.lock().unwrap_or_else(|e| e.into_inner());
        while *n == 0 {
            n = self.released.wait(n).unwrap_or_else(|e| e.into_inner());
        }
        *n -= 1;
        InFlightGuard(self)
    }
}

struct InFlightGuard<'a>(&'a InFlight);

impl Drop for InFlightGuard<'_> {
    fn drop(&mut self) {
        *self.0.available.lock().unwrap_or_else(|e| e.into_inner()) += 1;
        self.0.released.notify_one();
    }
}

/// Client for `POST {endpoint}/negate`.
///
/// Request body `{"id": ..., "claim": ...}`; a 200 response must carry
/// `{"id": <same>, "negative_claim": ...}`. Anything else is a failure.
pub struct RemoteNegator {
    url: Url,
    agent: ureq::Agent,
    in_flight: InFlight,
}

impl RemoteNegator {
    pub fn new(spec: RemoteSpec) -> Self {
        let url = negate_url(&spec.endpoint);
        let agent: ureq::Agent = ureq::Agent::config_builder()
            .timeout_global(Some(spec.timeout))
            .http_status_as_error(false)
            .build()
            .into();
        RemoteNegator {
            url,
            agent,
            in_flight: InFlight { available: Mutex::new(spec.max_in_flight), released: Condvar::new() },
        }
    }

    pub fn url(&self) -> &Url {
        &self.url
    }

    fn request(&self, id: &str, claim: &str) -> Result<String, String> {
        let _slot = self.in_flight.acquire();
        let mut response = self
            .agent
            .post(self.url.as_str())
            .send_json(NegateRequest { id, claim })
            .map_err(|e| format!("request failed: {e}"))?;
        let status = response.status();
        let mut body = String::new();
        response
            .body_mut()
            .as_reader()
            .read_to_string(&mut body)
            .map_err(|e| format!("cannot read response: {e}"))?;
        if status != 200 {
            return Err(format!("generator returned HTTP {}", status.as_u16()));
        }
        let parsed: NegateResponse =
            serde_json::from_str(&body).map_err(|e| format!("malformed response: {e}"))?;
        if parsed.id != id {
            return Err(format!("response id `{}` does not match request id `{id}`", parsed.id));
        }
        let negative = parsed.negative_claim.trim();
        if negative.is_empty() {
            return Err("empty negative_claim".to_owned());
        }
        Ok(negative.to_owned())
    }
}

impl ClaimNegator for RemoteNegator {
    fn negate(&self, id: &str, claim: &str) -> GenerationResult {
        match self.request(id, claim) {
            Ok(output) => GenerationResult::from_output(claim, output),
            Err(detail) => GenerationResult::failed(claim, detail),
        }
    }
}

/// `http://host:1234` and `http://host:1234/` both become `http://host:1234/negate`;
/// an endpoint already ending in `/negate` is used as is.
fn negate_url(endpoint: &Url) -> Url {
    if endpoint.path().ends_with("/negate") {
        return endpoint.clone();
    }
    let mut url = endpoint.clone();
    let path = format!("{}/negate", endpoint.path().trim_end_matches('/'));
    url.set_path(&path);
    url
}
