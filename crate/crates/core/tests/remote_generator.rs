use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};
use std::thread;
use std::time::Duration;

use crossaug::negator::{ClaimNegator, GenerationStatus, GeneratorSpec, RemoteNegator, RemoteSpec};
use crossaug::pipeline::{OutcomeKind, PipelineError};
use crossaug::{Dataset, Label, Pipeline, PipelineConfig, Sample};
use serde_json::{json, Value};
use tiny_http::{Header, Response, Server};

/// What the mock service sends back: status and raw body.
type Behaviour = dyn Fn(&str, &str) -> (u16, String) + Send + Sync;

struct MockService {
    url: String,
    requests: Arc<Mutex<Vec<Value>>>,
    max_concurrent: Arc<AtomicUsize>,
    _server: Arc<Server>,
}

fn ok_body(id: &str, negative: &str) -> (u16, String) {
    (200, json!({"id": id, "negative_claim": negative}).to_string())
}

fn spawn(behaviour: Arc<Behaviour>, delay: impl Fn(&str) -> Duration + Send + Sync + 'static) -> MockService {
    let server = Arc::new(Server::http("127.0.0.1:0").unwrap());
    let port = server.server_addr().to_ip().unwrap().port();
    let requests = Arc::new(Mutex::new(Vec::new()));
    let active = Arc::new(AtomicUsize::new(0));
    let max_concurrent = Arc::new(AtomicUsize::new(0));
    let delay = Arc::new(delay);

    for _ in 0..16 {
        let server = Arc::clone(&server);
        let behaviour = Arc::clone(&behaviour);
        let requests = Arc::clone(&requests);
        let active = Arc::clone(&active);
        let max_concurrent = Arc::clone(&max_concurrent);
        let delay = Arc::clone(&delay);
        thread::spawn(move || {
            while let Ok(mut req) = server.recv() {
                let now = active.fetch_add(1, Ordering::SeqCst) + 1;
                max_concurrent.fetch_max(now, Ordering::SeqCst);

                let mut body = String::new();
                req.as_reader().read_to_string(&mut body).unwrap();
                let (status, reply) = if req.method().as_str() != "POST" || req.url() != "/negate" {
                    (404, String::new())
                } else {
                    match serde_json::from_str::<Value>(&body) {
                        Ok(v) => {
                            requests.lock().unwrap().push(v.clone());
                            let id = v["id"].as_str().unwrap_or_default().to_owned();
                            let claim = v["claim"].as_str().unwrap_or_default().to_owned();
                            thread::sleep(delay(&claim));
                            behaviour(&id, &claim)
                        }
                        Err(_) => (400, "{\"error\":\"bad request\"}".to_owned()),
                    }
                };
                active.fetch_sub(1, Ordering::SeqCst);
                let header = Header::from_bytes("Content-Type", "application/json").unwrap();
                let _ = req.respond(Response::from_string(reply).with_status_code(status).with_header(header));
            }
        });
    }

    MockService { url: format!("http://127.0.0.1:{port}"), requests, max_concurrent, _server: server }
}

fn negate_north(id: &str, claim: &str) -> (u16, String) {
    ok_body(id, &format!("  {}  ", claim.replace("north", "south")))
}

fn remote(url: &str, timeout_ms: u64, max_in_flight: usize) -> GeneratorSpec {
    GeneratorSpec::Remote(RemoteSpec::new(url, Duration::from_millis(timeout_ms), max_in_flight).unwrap())
}

fn corpus(n: usize) -> Dataset {
    (0..n)
        .map(|i| {
            Sample::original(
                format!("r{i}"),
                format!("Road {i} runs north."),
                format!("Built in 1990, road {i} runs north to the coast."),
                Label::Sup,
            )
        })
        .collect()
}

#[test]
fn protocol_round_trip() {
    let svc = spawn(Arc::new(negate_north), |_| Duration::ZERO);
    let negator = RemoteNegator::new(RemoteSpec::new(&svc.url, Duration::from_secs(5), 1).unwrap());
    let r = negator.negate("req-7", "The river flows north.");
    assert_eq!(r.status, GenerationStatus::Ok);
    assert_eq!(r.negative_claim, "The river flows south.");

    let seen = svc.requests.lock().unwrap();
    assert_eq!(seen.len(), 1);
    assert_eq!(seen[0], json!({"id": "req-7", "claim": "The river flows north."}));
}

#[test]
fn same_claim_is_unchanged() {
    let svc = spawn(Arc::new(|id: &str, claim: &str| ok_body(id, &format!("{claim}\n"))), |_| Duration::ZERO);
    let r = RemoteNegator::new(RemoteSpec::new(&svc.url, Duration::from_secs(5), 1).unwrap()).negate("1", "X is Y.");
    assert_eq!(r.status, GenerationStatus::Unchanged);
}

#[test]
fn bad_responses_fail() {
    let svc = spawn(
        Arc::new(|id: &str, claim: &str| match claim {
            "status" => (500, "{\"error\":\"boom\"}".to_owned()),
            "schema" => (200, json!({"id": id, "text": "x"}).to_string()),
            "id" => ok_body("someone-else", "x"),
            "garbage" => (200, "not json".to_owned()),
            "empty" => ok_body(id, "   "),
            _ => ok_body(id, "fine"),
        }),
        |claim| if claim == "slow" { Duration::from_millis(800) } else { Duration::ZERO },
    );
    let negator = RemoteNegator::new(RemoteSpec::new(&svc.url, Duration::from_millis(300), 4).unwrap());
    for claim in ["status", "schema", "id", "garbage", "empty", "slow"] {
        let r = negator.negate("1", claim);
        assert_eq!(r.status, GenerationStatus::Failed, "{claim}: {r:?}");
        assert!(r.detail.is_some());
    }
    assert_eq!(negator.negate("1", "ok").status, GenerationStatus::Ok);
}

#[test]
fn output_order_ignores_arrival_order() {
    // later ids answer first
    let svc = spawn(Arc::new(negate_north), |claim| {
        let n: u64 = claim.split_whitespace().nth(1).unwrap().parse().unwrap();
        Duration::from_millis(5 * (20 - n.min(20)))
    });
    let input = corpus(20);

    let run = |concurrency: usize| {
        let config = PipelineConfig {
            generator: remote(&svc.url, 5_000, concurrency),
            concurrency,
            ..PipelineConfig::default()
        };
        Pipeline::new(config).unwrap().augment_dataset(&input).unwrap()
    };
    let (serial, stats) = run(1);
    let (parallel, _) = run(8);
    assert_eq!(serial, parallel);
    assert_eq!(stats.full, 20);
    assert_eq!(stats.skipped_failed, 0);
    assert_eq!(serial.samples[1].claim, "Road 0 runs south.");
}

#[test]
fn in_flight_limit_is_respected() {
    let svc = spawn(Arc::new(negate_north), |_| Duration::from_millis(30));
    let config = PipelineConfig { generator: remote(&svc.url, 5_000, 2), concurrency: 8, ..PipelineConfig::default() };
    Pipeline::new(config).unwrap().augment_dataset(&corpus(12)).unwrap();
    assert!(svc.max_concurrent.load(Ordering::SeqCst) <= 2);
    assert!(svc.max_concurrent.load(Ordering::SeqCst) >= 1);
}

#[test]
fn failure_rate_aborts() {
    // two of ten requests fail: 20% > 10%
    let svc = spawn(
        Arc::new(|id: &str, claim: &str| {
            if claim.starts_with("Road 3 ") || claim.starts_with("Road 7 ") {
                (500, "{}".to_owned())
            } else {
                negate_north(id, claim)
            }
        }),
        |_| Duration::ZERO,
    );
    let config = PipelineConfig { generator: remote(&svc.url, 5_000, 4), concurrency: 4, ..PipelineConfig::default() };
    let pipeline = Pipeline::new(config.clone()).unwrap();
    match pipeline.augment_dataset(&corpus(10)) {
        Err(PipelineError::GeneratorAbort { failed, requests, stats, .. }) => {
            assert_eq!((failed, requests), (2, 10));
            assert_eq!(stats.count(OutcomeKind::Full), 8);
        }
        other => panic!("expected abort, got {other:?}"),
    }

    // within threshold: failures are skipped and counted
    let relaxed = PipelineConfig { abort_threshold: 0.25, ..config };
    let (out, stats) = Pipeline::new(relaxed).unwrap().augment_dataset(&corpus(10)).unwrap();
    assert_eq!(stats.skipped_failed, 2);
    assert_eq!(out.len(), 10 + 8 * 3);
}
