//! Claim/evidence records: data model, line-delimited JSON I/O and validation.
//!
//! One record per line, a flat object with string values:
//!
//! ```text
//! {"id":"s1","claim":"...","evidence":"...","label":"SUP","provenance":"ORIGINAL","origin_id":"s1"}
//! ```
//!
//! `provenance` and `origin_id` are optional on input and always written on
//! output, in the key order above. Labels are read in short (`SUP`) or long
//! (`SUPPORTS`) form and always written short.

use std::collections::HashMap;
use std::fmt;
use std::io::{self, BufRead, Write};
use std::str::FromStr;

use serde::Serialize;
use serde_json::{Map, Value};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Sup,
    Ref,
    Nei,
}

impl Label {
    pub const ALL: [Label; 3] = [Label::Sup, Label::Ref, Label::Nei];

    pub fn as_str(self) -> &'static str {
        match self {
            Label::Sup => "SUP",
            Label::Ref => "REF",
            Label::Nei => "NEI",
        }
    }
}

impl FromStr for Label {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "SUP" | "SUPPORTS" => Ok(Label::Sup),
            "REF" | "REFUTES" => Ok(Label::Ref),
            "NEI" | "NOT ENOUGH INFO" => Ok(Label::Nei),
            other => Err(other.to_owned()),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where a sample came from. Augmented variants name the claim/evidence
/// pair they hold: `c'` is the negative claim, `e'` the modified evidence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    Original,
    /// `(c', e)`
    NegClaim,
    /// `(c, e')`
    PosClaimNegEvidence,
    /// `(c', e')`
    NegClaimNegEvidence,
}

impl Provenance {
    pub const ALL: [Provenance; 4] = [
        Provenance::Original,
        Provenance::NegClaim,
        Provenance::PosClaimNegEvidence,
        Provenance::NegClaimNegEvidence,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Original => "ORIGINAL",
            Provenance::NegClaim => "NEG_CLAIM",
            Provenance::PosClaimNegEvidence => "POS_CLAIM_NEG_EVIDENCE",
            Provenance::NegClaimNegEvidence => "NEG_CLAIM_NEG_EVIDENCE",
        }
    }

    /// The label every augmented sample of this provenance must carry.
    pub fn required_label(self) -> Option<Label> {
        match self {
            Provenance::Original => None,
            Provenance::NegClaim | Provenance::PosClaimNegEvidence => Some(Label::Ref),
            Provenance::NegClaimNegEvidence => Some(Label::Sup),
        }
    }
}

impl FromStr for Provenance {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Provenance::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| s.to_owned())
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sample {
    pub id: String,
    pub claim: String,
    pub evidence: String,
    pub label: Label,
    pub provenance: Provenance,
    pub origin_id: String,
}

impl Sample {
    /// An ORIGINAL sample; `origin_id` is set to `id`.
    pub fn original(
        id: impl Into<String>,
        claim: impl Into<String>,
        evidence: impl Into<String>,
        label: Label,
    ) -> Self {
        let id = id.into();
        Sample {
            origin_id: id.clone(),
            id,
            claim: claim.into(),
            evidence: evidence.into(),
            label,
            provenance: Provenance::Original,
        }
    }
}

/// Ordered collection of samples.
///
/// [`parse_records`] and the augmentation pipeline only ever produce datasets
/// with unique ids; [`validate`] checks this for datasets built by hand.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Dataset {
    pub samples: Vec<Sample>,
}

impl Dataset {
    pub fn new(samples: Vec<Sample>) -> Self {
        Dataset { samples }
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Sample> {
        self.samples.iter()
    }
}

impl FromIterator<Sample> for Dataset {
    fn from_iter<I: IntoIterator<Item = Sample>>(iter: I) -> Self {
        Dataset { samples: iter.into_iter().collect() }
    }
}

impl<'a> IntoIterator for &'a Dataset {
    type Item = &'a Sample;
    type IntoIter = std::slice::Iter<'a, Sample>;

    fn into_iter(self) -> Self::IntoIter {
        self.samples.iter()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ParseMode {
    /// Abort on the first malformed line.
    #[default]
    Strict,
    /// Skip malformed lines and report them.
    Lenient,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecordErrorKind {
    #[error("line is not valid UTF-8")]
    InvalidUtf8,
    #[error("invalid JSON: {0}")]
    InvalidJson(String),
    #[error("record is not a JSON object")]
    NotAnObject,
    #[error("missing key `{0}`")]
    MissingKey(&'static str),
    #[error("key `{0}` must be a string")]
    NotAString(&'static str),
    #[error("multi-evidence records are not supported; split them into single-evidence records")]
    MultiEvidence,
    #[error("`{0}` must not be empty")]
    EmptyField(&'static str),
    #[error("unknown label `{0}`")]
    BadLabel(String),
    #[error("unknown provenance `{0}`")]
    BadProvenance(String),
    #[error("origin_id `{origin_id}` is inconsistent with provenance {provenance}")]
    OriginMismatch { provenance: Provenance, origin_id: String },
    #[error("duplicate id `{id}` (first seen on line {first_line})")]
    DuplicateId { id: String, first_line: usize },
}

/// A rejected record with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct RecordError {
    pub line: usize,
    pub kind: RecordErrorKind,
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error(transparent)]
    Record(#[from] RecordError),
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Parsed {
    pub dataset: Dataset,
    /// Lines skipped in lenient mode. Always empty in strict mode.
    pub rejections: Vec<RecordError>,
}

fn normalize_text(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut in_break = false;
    for c in text.chars() {
        if c == '\n' || c == '\r' {
            if !in_break {
                out.push(' ');
            }
            in_break = true;
        } else {
            out.push(c);
            in_break = false;
        }
    }
    out
}

fn string_field(obj: &Map<String, Value>, key: &'static str) -> Result<Option<String>, RecordErrorKind> {
    match obj.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(Value::String(s)) => Ok(Some(s.clone())),
        Some(Value::Array(_)) if key == "evidence" => Err(RecordErrorKind::MultiEvidence),
        Some(_) => Err(RecordErrorKind::NotAString(key)),
    }
}

fn required(obj: &Map<String, Value>, key: &'static str) -> Result<String, RecordErrorKind> {
    string_field(obj, key)?.ok_or(RecordErrorKind::MissingKey(key))
}

fn non_empty(value: String, key: &'static str) -> Result<String, RecordErrorKind> {
    if value.trim().is_empty() {
        Err(RecordErrorKind::EmptyField(key))
    } else {
        Ok(value)
    }
}

/// Parses a single record line. Does not check id uniqueness.
pub fn parse_record(line: &str) -> Result<Sample, RecordErrorKind> {
    let value: Value =
        serde_json::from_str(line).map_err(|e| RecordErrorKind::InvalidJson(e.to_string()))?;
    let Value::Object(obj) = value else {
        return Err(RecordErrorKind::NotAnObject);
    };

    let id = non_empty(required(&obj, "id")?, "id")?;
    let claim = non_empty(normalize_text(&required(&obj, "claim")?), "claim")?;
    let evidence = non_empty(normalize_text(&required(&obj, "evidence")?), "evidence")?;
    let label = required(&obj, "label")?
        .parse::<Label>()
        .map_err(RecordErrorKind::BadLabel)?;
    let provenance = match string_field(&obj, "provenance")? {
        Some(p) => p.parse::<Provenance>().map_err(RecordErrorKind::BadProvenance)?,
        None => Provenance::Original,
    };
    let origin_id = string_field(&obj, "origin_id")?.unwrap_or_else(|| id.clone());

    let is_original = provenance == Provenance::Original;
    if is_original != (origin_id == id) || origin_id.is_empty() {
        return Err(RecordErrorKind::OriginMismatch { provenance, origin_id });
    }

    Ok(Sample { id, claim, evidence, label, provenance, origin_id })
}

/// Reads line-delimited records. Blank lines are ignored.
pub fn parse_records<R: BufRead>(mut reader: R, mode: ParseMode) -> Result<Parsed, CorpusError> {
    let mut parsed = Parsed::default();
    let mut seen: HashMap<String, usize> = HashMap::new();
    let mut buf = Vec::new();
    let mut line_no = 0;

    loop {
        buf.clear();
        if reader.read_until(b'\n', &mut buf)? == 0 {
            break;
        }
        line_no += 1;

        let result = std::str::from_utf8(&buf)
            .map_err(|_| RecordErrorKind::InvalidUtf8)
            .and_then(|line| {
                let line = line.trim_end_matches(['\n', '\r']);
                if line.trim().is_empty() {
                    return Ok(None);
                }
                let sample = parse_record(line)?;
                if let Some(&first_line) = seen.get(&sample.id) {
                    return Err(RecordErrorKind::DuplicateId { id: sample.id, first_line });
                }
                Ok(Some(sample))
            });

        match result {
            Ok(None) => {}
            Ok(Some(sample)) => {
                seen.insert(sample.id.clone(), line_no);
                parsed.dataset.samples.push(sample);
            }
            Err(kind) => {
                let err = RecordError { line: line_no, kind };
                match mode {
                    ParseMode::Strict => return Err(err.into()),
                    ParseMode::Lenient => parsed.rejections.push(err),
                }
            }
        }
    }
    Ok(parsed)
}

#[derive(Serialize)]
struct RecordOut<'a> {
    id: &'a str,
    claim: &'a str,
    evidence: &'a str,
    label: &'static str,
    provenance: &'static str,
    origin_id: &'a str,
}

/// Serializes one sample as a single JSON line without the trailing newline.
pub fn record_line(sample: &Sample) -> String {
    let out = RecordOut {
        id: &sample.id,
        claim: &sample.claim,
        evidence: &sample.evidence,
        label: sample.label.as_str(),
        provenance: sample.provenance.as_str(),
        origin_id: &sample.origin_id,
    };
    serde_json::to_string(&out).expect("string-only record always serializes")
}

pub fn write_records<W: Write>(dataset: &Dataset, mut sink: W) -> io::Result<()> {
    for sample in dataset {
        sink.write_all(record_line(sample).as_bytes())?;
        sink.write_all(b"\n")?;
    }
    sink.flush()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicateId { id: String, first: usize, second: usize },
    EmptyField { id: String, field: &'static str },
    ContainsNewline { id: String, field: &'static str },
    OriginMismatch { id: String },
    DanglingOrigin { id: String, origin_id: String },
    OriginNotOriginal { id: String, origin_id: String },
    OriginNotSupported { id: String, origin_id: String },
    WrongLabel { id: String, provenance: Provenance, label: Label, expected: Label },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateId { id, first, second } => {
                write!(f, "{id}: duplicate id (samples {first} and {second})")
            }
            Violation::EmptyField { id, field } => write!(f, "{id}: empty {field}"),
            Violation::ContainsNewline { id, field } => {
                write!(f, "{id}: {field} contains a line break")
            }
            Violation::OriginMismatch { id } => {
                write!(f, "{id}: origin_id must equal id exactly when provenance is ORIGINAL")
            }
            Violation::DanglingOrigin { id, origin_id } => {
                write!(f, "{id}: dangling origin `{origin_id}`")
            }
            Violation::OriginNotOriginal { id, origin_id } => {
                write!(f, "{id}: origin `{origin_id}` is not an ORIGINAL sample")
            }
            Violation::OriginNotSupported { id, origin_id } => {
                write!(f, "{id}: origin `{origin_id}` is not labeled SUP")
            }
            Violation::WrongLabel { id, provenance, label, expected } => {
                let what = match provenance {
                    Provenance::NegClaim => "augmented claim-only sample",
                    Provenance::PosClaimNegEvidence => "augmented modified-evidence sample",
                    _ => "augmented negative-claim/modified-evidence sample",
                };
                write!(f, "{id}: {what} must be {expected} (found {label})")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Structural and label-rule checks. Sample indices in messages are 1-based.
pub fn validate(dataset: &Dataset) -> ValidationReport {
    let mut violations = Vec::new();
    let mut by_id: HashMap<&str, usize> = HashMap::new();

    for (idx, s) in dataset.iter().enumerate() {
        if let Some(&first) = by_id.get(s.id.as_str()) {
            violations.push(Violation::DuplicateId {
                id: s.id.clone(),
                first: first + 1,
                second: idx + 1,
            });
        } else {
            by_id.insert(&s.id, idx);
        }
    }

    for s in dataset {
        for (field, text) in [("id", &s.id), ("claim", &s.claim), ("evidence", &s.evidence)] {
            if text.trim().is_empty() {
                violations.push(Violation::EmptyField { id: s.id.clone(), field });
            } else if field != "id" && text.contains(['\n', '\r']) {
                violations.push(Violation::ContainsNewline { id: s.id.clone(), field });
            }
        }

        if (s.provenance == Provenance::Original) != (s.origin_id == s.id) {
            violations.push(Violation::OriginMismatch { id: s.id.clone() });
        }

        if let Some(expected) = s.provenance.required_label() {
            if s.label != expected {
                violations.push(Violation::WrongLabel {
                    id: s.id.clone(),
                    provenance: s.provenance,
                    label: s.label,
                    expected,
                });
            }
            match by_id.get(s.origin_id.as_str()).map(|&i| &dataset.samples[i]) {
                None => violations.push(Violation::DanglingOrigin {
                    id: s.id.clone(),
                    origin_id: s.origin_id.clone(),
                }),
                Some(origin) if origin.provenance != Provenance::Original => {
                    violations.push(Violation::OriginNotOriginal {
                        id: s.id.clone(),
                        origin_id: s.origin_id.clone(),
                    })
                }
                Some(origin) if origin.label != Label::Sup => {
                    violations.push(Violation::OriginNotSupported {
                        id: s.id.clone(),
                        origin_id: s.origin_id.clone(),
                    })
                }
                Some(_) => {}
            }
        }
    }

    ValidationReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(input: &str, mode: ParseMode) -> Result<Parsed, CorpusError> {
        parse_records(input.as_bytes(), mode)
    }

    #[test]
    fn long_label_alias() {
        let parsed = parse(
            r#"{"id":"s1","claim":"A.","evidence":"B.","label":"SUPPORTS"}"#,
            ParseMode::Strict,
        )
        .unwrap();
        assert_eq!(parsed.dataset.samples, vec![Sample::original("s1", "A.", "B.", Label::Sup)]);
        assert_eq!(
            record_line(&parsed.dataset.samples[0]),
            r#"{"id":"s1","claim":"A.","evidence":"B.","label":"SUP","provenance":"ORIGINAL","origin_id":"s1"}"#
        );
    }

    #[test]
    fn empty_stream() {
        assert!(parse("", ParseMode::Strict).unwrap().dataset.is_empty());
        assert!(parse("\n\n", ParseMode::Strict).unwrap().dataset.is_empty());
    }

    const THREE_GOOD_ONE_BAD: &str = concat!(
        r#"{"id":"a","claim":"A.","evidence":"E.","label":"SUP"}"#, "\n",
        r#"{"id":"b","claim":"B.","evidence":"E.","label":"REF"}"#, "\n",
        r#"{"id":"c","claim":"C.","evidence":"E.","label":"MAYBE"}"#, "\n",
        r#"{"id":"d","claim":"D.","evidence":"E.","label":"NOT ENOUGH INFO"}"#, "\n",
    );

    #[test]
    fn strict_reports_bad_label_line() {
        let err = parse(THREE_GOOD_ONE_BAD, ParseMode::Strict).unwrap_err();
        match err {
            CorpusError::Record(RecordError { line, kind }) => {
                assert_eq!(line, 3);
                assert_eq!(kind, RecordErrorKind::BadLabel("MAYBE".into()));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn lenient_skips_bad_line() {
        let parsed = parse(THREE_GOOD_ONE_BAD, ParseMode::Lenient).unwrap();
        assert_eq!(parsed.dataset.len(), 3);
        assert_eq!(parsed.rejections.len(), 1);
        assert_eq!(parsed.rejections[0].line, 3);
        assert_eq!(parsed.dataset.samples[2].label, Label::Nei);
    }

    #[test]
    fn malformed_lines() {
        let cases: &[(&str, RecordErrorKind)] = &[
            ("[1,2]", RecordErrorKind::NotAnObject),
            (r#"{"id":"x","claim":"c","label":"SUP"}"#, RecordErrorKind::MissingKey("evidence")),
            (r#"{"id":"x","claim":"","evidence":"e","label":"SUP"}"#, RecordErrorKind::EmptyField("claim")),
            (r#"{"id":"x","claim":"c","evidence":"  ","label":"SUP"}"#, RecordErrorKind::EmptyField("evidence")),
            (r#"{"id":"x","claim":"c","evidence":["e1","e2"],"label":"SUP"}"#, RecordErrorKind::MultiEvidence),
            (r#"{"id":7,"claim":"c","evidence":"e","label":"SUP"}"#, RecordErrorKind::NotAString("id")),
            (
                r#"{"id":"x","claim":"c","evidence":"e","label":"SUP","provenance":"COPY"}"#,
                RecordErrorKind::BadProvenance("COPY".into()),
            ),
        ];
        for (line, kind) in cases {
            let input = format!("\n{line}\n");
            match parse(&input, ParseMode::Strict).unwrap_err() {
                CorpusError::Record(err) => {
                    assert_eq!(err.line, 2, "{line}");
                    assert_eq!(&err.kind, kind, "{line}");
                }
                other => panic!("unexpected {other:?}"),
            }
        }
        let err = parse("{not json", ParseMode::Strict).unwrap_err();
        assert!(matches!(
            err,
            CorpusError::Record(RecordError { line: 1, kind: RecordErrorKind::InvalidJson(_) })
        ));
    }

    #[test]
    fn invalid_utf8_line() {
        let mut bytes = br#"{"id":"a","claim":"A.","evidence":"E.","label":"SUP"}"#.to_vec();
        bytes.extend_from_slice(b"\n\xff\xfe\n");
        let parsed = parse_records(&bytes[..], ParseMode::Lenient).unwrap();
        assert_eq!(parsed.dataset.len(), 1);
        assert_eq!(parsed.rejections[0].line, 2);
        assert_eq!(parsed.rejections[0].kind, RecordErrorKind::InvalidUtf8);
    }

    #[test]
    fn duplicate_names_both_lines() {
        let input = concat!(
            r#"{"id":"a","claim":"A.","evidence":"E.","label":"SUP"}"#, "\n",
            r#"{"id":"b","claim":"A.","evidence":"E.","label":"SUP"}"#, "\n",
            r#"{"id":"a","claim":"A.","evidence":"E.","label":"SUP"}"#, "\n",
        );
        let err = parse(input, ParseMode::Strict).unwrap_err();
        assert_eq!(err.to_string(), "line 3: duplicate id `a` (first seen on line 1)");
    }

    #[test]
    fn origin_consistency_on_ingest() {
        let bad = r#"{"id":"a","claim":"A.","evidence":"E.","label":"SUP","origin_id":"z"}"#;
        assert!(parse(bad, ParseMode::Strict).is_err());
        let bad = r#"{"id":"a","claim":"A.","evidence":"E.","label":"REF","provenance":"NEG_CLAIM"}"#;
        assert!(parse(bad, ParseMode::Strict).is_err());
    }

    #[test]
    fn newlines_become_spaces() {
        let line = r#"{"id":"a","claim":"two\r\nlines","evidence":"x\n\ny","label":"SUP"}"#;
        let s = &parse(line, ParseMode::Strict).unwrap().dataset.samples[0];
        assert_eq!(s.claim, "two lines");
        assert_eq!(s.evidence, "x y");
    }

    #[test]
    fn crlf_records() {
        let input = "{\"id\":\"a\",\"claim\":\"A.\",\"evidence\":\"E.\",\"label\":\"SUP\"}\r\n";
        assert_eq!(parse(input, ParseMode::Strict).unwrap().dataset.len(), 1);
    }

    #[test]
    fn write_empty() {
        let mut out = Vec::new();
        write_records(&Dataset::default(), &mut out).unwrap();
        assert!(out.is_empty());
    }

    fn aug(id: &str, origin: &str, provenance: Provenance, label: Label) -> Sample {
        Sample {
            id: id.into(),
            claim: "c".into(),
            evidence: "e".into(),
            label,
            provenance,
            origin_id: origin.into(),
        }
    }

    #[test]
    fn validate_clean_originals() {
        let ds = Dataset::new(vec![
            Sample::original("a", "c", "e", Label::Sup),
            Sample::original("b", "c", "e", Label::Nei),
        ]);
        assert!(validate(&ds).is_clean());
    }

    #[test]
    fn validate_label_rules() {
        let ds = Dataset::new(vec![
            Sample::original("a", "c", "e", Label::Sup),
            aug("a#nc", "a", Provenance::NegClaim, Label::Sup),
            aug("a#ne-pos", "a", Provenance::PosClaimNegEvidence, Label::Ref),
            aug("a#ne-neg", "a", Provenance::NegClaimNegEvidence, Label::Ref),
        ]);
        let report = validate(&ds);
        assert_eq!(report.violations.len(), 2);
        assert_eq!(
            report.violations[0].to_string(),
            "a#nc: augmented claim-only sample must be REF (found SUP)"
        );
        assert!(matches!(report.violations[1], Violation::WrongLabel { expected: Label::Sup, .. }));
    }

    #[test]
    fn validate_dangling_and_duplicates() {
        let ds = Dataset::new(vec![
            Sample::original("a", "c", "e", Label::Ref),
            aug("x#nc", "x", Provenance::NegClaim, Label::Ref),
            aug("a#nc", "a", Provenance::NegClaim, Label::Ref),
            Sample::original("a", "c", "e", Label::Sup),
            Sample::original("b", "c", "", Label::Sup),
        ]);
        let report = validate(&ds);
        assert!(report.violations.contains(&Violation::DuplicateId { id: "a".into(), first: 1, second: 4 }));
        assert!(report.violations.iter().any(|v| v.to_string().contains("dangling origin")));
        assert!(report.violations.contains(&Violation::OriginNotSupported {
            id: "a#nc".into(),
            origin_id: "a".into()
        }));
        assert!(report.violations.contains(&Violation::EmptyField { id: "b".into(), field: "evidence" }));
    }
}
