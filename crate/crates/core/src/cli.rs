//! `crossaug` command-line interface.
//!
//! Exit codes: 0 success, 1 data or I/O error (including a failed
//! `validate`), 2 usage error, 3 generator failure rate above the abort
//! threshold.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use crate::corpus::{self, Dataset, Label, ParseMode, Provenance};
use crate::evidencemod::MatchOptions;
use crate::negator::{GeneratorSpec, Lexicon, RemoteSpec};
use crate::pipeline::{format_ratio, Pipeline, PipelineConfig, PipelineError, DEFAULT_TAU};
use crate::spandiff::ThresholdStrategy;
use crate::subsample::{class_balanced_subsample, Fraction, SubsampleConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DATA: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ABORT: i32 = 3;

pub const GENERATOR_ENV: &str = "CROSSAUG_GENERATOR_URL";

#[derive(Debug, Parser)]
#[command(name = "crossaug", version, about = "Contrastive augmentation for fact-verification corpora")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Input record file, `-` for standard input.
    #[arg(long = "in", value_name = "PATH")]
    input: PathBuf,
    /// Skip malformed lines instead of failing on the first one.
    #[arg(long)]
    lenient: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate contrastive samples for every SUP record.
    Augment(AugmentArgs),
    /// Draw a class-balanced random subset.
    Subsample {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long = "out", value_name = "PATH")]
        output: PathBuf,
        /// Fraction of each class to keep, in (0, 1].
        #[arg(long)]
        fraction: String,
        #[arg(long)]
        seed: u64,
    },
    /// Check structure and label rules; exits 1 on any violation.
    Validate {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Label/provenance counts and augmentation ratio of an augmented file.
    Stats {
        #[command(flatten)]
        input: InputArgs,
    },
}

#[derive(Debug, Args)]
struct AugmentArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long = "out", value_name = "PATH")]
    output: PathBuf,
    /// Largest replaced span (tokens) carried over to the evidence.
    #[arg(long, default_value_t = DEFAULT_TAU)]
    tau: usize,
    /// `rule` or the base URL of a generator service.
    #[arg(long, env = GENERATOR_ENV, default_value = "rule")]
    generator: String,
    /// Antonym lexicon (`word<TAB>antonym` lines) for the rule generator.
    #[arg(long, value_name = "PATH")]
    lexicon: Option<PathBuf>,
    #[arg(long, default_value = "max", value_parser = ["max", "src", "tgt"])]
    threshold_strategy: String,
    /// Match claim spans in the evidence case-sensitively.
    #[arg(long)]
    match_case: bool,
    /// Replace every occurrence in the evidence, not only the leftmost.
    #[arg(long)]
    replace_all: bool,
    /// Emit only augmented samples.
    #[arg(long)]
    no_keep_originals: bool,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    concurrency: u16,
    /// Write the stats report here instead of standard error.
    #[arg(long, value_name = "PATH")]
    report: Option<PathBuf>,
    /// Remote generator request timeout.
    #[arg(long, default_value_t = 30_000)]
    timeout_ms: u64,
    /// Concurrent requests to the remote generator (defaults to --concurrency).
    #[arg(long)]
    max_in_flight: Option<usize>,
    /// Abort when more than this fraction of generator requests fail.
    #[arg(long, default_value_t = crate::pipeline::DEFAULT_ABORT_THRESHOLD)]
    abort_threshold: f64,
}

/// Error carrying the exit code it maps to.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn data(message: impl ToString) -> Self {
        Failure { code: EXIT_DATA, message: message.to_string() }
    }

    fn usage(message: impl ToString) -> Self {
        Failure { code: EXIT_USAGE, message: message.to_string() }
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match cli.command {
        Command::Augment(args) => augment(args),
        Command::Subsample { input, output, fraction, seed } => subsample(input, output, &fraction, seed),
        Command::Validate { input } => validate(input),
        Command::Stats { input } => stats(input),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("crossaug: {}", failure.message);
            failure.code
        }
    }
}

fn is_stdio(path: &Path) -> bool {
    path.as_os_str() == "-"
}

fn read_input(args: &InputArgs) -> Result<Dataset, Failure> {
    let mode = if args.lenient { ParseMode::Lenient } else { ParseMode::Strict };
    let parsed = if is_stdio(&args.input) {
        corpus::parse_records(io::stdin().lock(), mode)
    } else {
        let file = File::open(&args.input)
            .map_err(|e| Failure::data(format!("{}: {e}", args.input.display())))?;
        corpus::parse_records(BufReader::new(file), mode)
    }
    .map_err(|e| Failure::data(format!("{}: {e}", args.input.display())))?;

    for rejection in &parsed.rejections {
        eprintln!("crossaug: {}: skipped {rejection}", args.input.display());
    }
    Ok(parsed.dataset)
}

fn write_text_or_stdout(path: &PathBuf, write: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Result<(), Failure> {
    let result = if is_stdio(path) {
        let stdout = io::stdout();
        let mut lock = stdout.lock();
        write(&mut lock).and_then(|_| lock.flush())
    } else {
        File::create(path).and_then(|f| {
            let mut w = BufWriter::new(f);
            write(&mut w).and_then(|_| w.flush())
        })
    };
    result.map_err(|e| Failure::data(format!("{}: {e}", path.display())))
}

fn write_output(path: &PathBuf, dataset: &Dataset) -> Result<(), Failure> {
    write_text_or_stdout(path, |w| corpus::write_records(dataset, w))
}

fn generator_spec(args: &AugmentArgs) -> Result<GeneratorSpec, Failure> {
    if args.generator == "rule" {
        let lexicon = match &args.lexicon {
            Some(path) => Lexicon::from_path(path).map_err(Failure::data)?,
            None => Lexicon::bundled(),
        };
        return Ok(GeneratorSpec::Rule { lexicon });
    }
    let max_in_flight = args.max_in_flight.unwrap_or(args.concurrency as usize);
    RemoteSpec::new(&args.generator, Duration::from_millis(args.timeout_ms), max_in_flight)
        .map(GeneratorSpec::Remote)
        .map_err(Failure::usage)
}

fn augment(args: AugmentArgs) -> CmdResult {
    let threshold_strategy: ThresholdStrategy = args.threshold_strategy.parse().map_err(Failure::usage)?;
    let config = PipelineConfig {
        tau: args.tau,
        generator: generator_spec(&args)?,
        keep_originals: !args.no_keep_originals,
        threshold_strategy,
        match_options: MatchOptions { match_case: args.match_case, replace_all: args.replace_all },
        concurrency: args.concurrency as usize,
        abort_threshold: args.abort_threshold,
    };
    let pipeline = Pipeline::new(config).map_err(Failure::usage)?;
    let dataset = read_input(&args.input)?;

    let (output, stats) = match pipeline.augment_dataset(&dataset) {
        Ok(result) => result,
        Err(err @ PipelineError::GeneratorAbort { .. }) => {
            if let PipelineError::GeneratorAbort { stats, .. } = &err {
                eprint!("{}", stats.report());
            }
            return Err(Failure { code: EXIT_ABORT, message: err.to_string() });
        }
        Err(err) => return Err(Failure::data(err)),
    };

    write_output(&args.output, &output)?;
    let report = stats.report();
    match &args.report {
        Some(path) => write_text_or_stdout(path, |w| w.write_all(report.as_bytes()))?,
        None => eprint!("{report}"),
    }
    Ok(EXIT_OK)
}

fn subsample(input: InputArgs, output: PathBuf, fraction: &str, seed: u64) -> CmdResult {
    let fraction: Fraction = fraction.parse().map_err(Failure::usage)?;
    let dataset = read_input(&input)?;
    let result =
        class_balanced_subsample(&dataset, SubsampleConfig { fraction, seed }).map_err(Failure::data)?;
    for warning in &result.warnings {
        eprintln!("crossaug: warning: {warning}");
    }
    for class in &result.classes {
        eprintln!("class.{}={}/{}", class.label, class.selected, class.available);
    }
    write_output(&output, &result.dataset)?;
    Ok(EXIT_OK)
}

fn validate(input: InputArgs) -> CmdResult {
    let dataset = read_input(&input)?;
    let report = corpus::validate(&dataset);
    if report.is_clean() {
        println!("ok: {} samples, no violations", dataset.len());
        Ok(EXIT_OK)
    } else {
        print!("{report}");
        println!("{} violation(s)", report.violations.len());
        Ok(EXIT_DATA)
    }
}

/// Summary of an already-augmented file.
pub fn describe(dataset: &Dataset) -> String {
    let mut labels: BTreeMap<Label, usize> = Label::ALL.iter().map(|&l| (l, 0)).collect();
    let mut provenances: BTreeMap<Provenance, usize> = Provenance::ALL.iter().map(|&p| (p, 0)).collect();
    let mut groups: BTreeMap<&str, (bool, bool)> = BTreeMap::new();
    for s in dataset {
        *labels.entry(s.label).or_default() += 1;
        *provenances.entry(s.provenance).or_default() += 1;
        match s.provenance {
            Provenance::Original => {}
            Provenance::NegClaimNegEvidence | Provenance::PosClaimNegEvidence => {
                groups.entry(&s.origin_id).or_default().1 = true
            }
            Provenance::NegClaim => groups.entry(&s.origin_id).or_default().0 = true,
        }
    }
    let originals = provenances[&Provenance::Original];
    let augmented = dataset.len() - originals;
    let full = groups.values().filter(|(_, e)| *e).count();
    let claim_only = groups.values().filter(|(c, e)| *c && !*e).count();

    let mut out = format!("samples={}\n", dataset.len());
    for (label, n) in &labels {
        out.push_str(&format!("label.{label}={n}\n"));
    }
    for (provenance, n) in &provenances {
        out.push_str(&format!("provenance.{provenance}={n}\n"));
    }
    out.push_str(&format!("originals={originals}\n"));
    out.push_str(&format!("claim_only={claim_only}\n"));
    out.push_str(&format!("full={full}\n"));
    out.push_str(&format!("augmented_total={augmented}\n"));
    out.push_str(&format!("ratio={}\n", format_ratio(augmented, originals)));
    out
}

fn stats(input: InputArgs) -> CmdResult {
    let dataset = read_input(&input)?;
    print!("{}", describe(&dataset));
    Ok(EXIT_OK)
}
