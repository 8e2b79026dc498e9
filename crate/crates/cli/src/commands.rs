use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use regmatch::characterization::{self, CharacterizationError};
use regmatch::gallai_edmonds;
use regmatch::graphgen::{
    enumerate_regular, ingest, random_regular, GenError, GenSpec, IngestError,
};
use regmatch::harness::{self, RunSummary};
use regmatch::independence;
use regmatch::matching;
use regmatch::{to_graph6, Graph};

use crate::records::{Origin, Record, Sink};
use crate::{GenArgs, IoArgs, VerifyArgs};

/// Graphs handed to the worker pool at a time. Results within a chunk are
/// written in input order.
const CHUNK: usize = 4096;

enum Input {
    Graph(Origin, Graph),
    Bad(Origin, String),
}

fn read_input(path: Option<&Path>) -> io::Result<Box<dyn Iterator<Item = Input>>> {
    let reader: Box<dyn BufRead> = match path {
        Some(p) => {
            let file = File::open(p)
                .map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", p.display())))?;
            Box::new(BufReader::new(file))
        }
        None => Box::new(BufReader::new(io::stdin())),
    };
    Ok(Box::new(ingest(reader).enumerate().map(
        |(index, item)| match item {
            Ok((line, g)) => Input::Graph(
                Origin {
                    index,
                    line: Some(line),
                },
                g,
            ),
            Err(IngestError::Parse { line, error }) => Input::Bad(
                Origin {
                    index,
                    line: Some(line),
                },
                error.to_string(),
            ),
            Err(IngestError::Io { line, message }) => Input::Bad(
                Origin {
                    index,
                    line: Some(line),
                },
                message,
            ),
        },
    )))
}

fn run_ordered<T: Send, U: Send>(
    mut items: impl Iterator<Item = T>,
    work: impl Fn(T) -> U + Sync + Send,
    mut emit: impl FnMut(U) -> io::Result<()>,
) -> io::Result<()> {
    loop {
        let chunk: Vec<T> = items.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            return Ok(());
        }
        let done: Vec<U> = chunk.into_par_iter().map(&work).collect();
        for u in done {
            emit(u)?;
        }
    }
}

fn json(record: &Record) -> String {
    serde_json::to_string(record).expect("records serialize")
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Clean,
    Disagreement,
    Skipped,
    Failed,
}

struct Line {
    text: String,
    status: Status,
    low_degree: bool,
}

impl Line {
    fn clean(text: String) -> Line {
        Line {
            text,
            status: Status::Clean,
            low_degree: false,
        }
    }
}

fn bad_line(origin: Origin, message: &str) -> Line {
    Line {
        text: json(&Record::Error {
            origin: Some(origin),
            message,
        }),
        status: Status::Failed,
        low_degree: false,
    }
}

/// Shared driver for the per-graph query commands.
fn per_graph(
    io_args: &IoArgs,
    work: impl Fn(Origin, &Graph) -> Line + Sync + Send,
) -> io::Result<u8> {
    let inputs = read_input(io_args.input.as_deref())?;
    let mut sink = Sink::open(io_args.out.as_deref())?;
    let (mut errors, mut disagreements, mut skipped, mut total) = (0, 0, 0, 0);
    let mut noticed = false;
    run_ordered(
        inputs,
        |input| match input {
            Input::Graph(origin, g) => work(origin, &g),
            Input::Bad(origin, message) => bad_line(origin, &message),
        },
        |line| {
            total += 1;
            match line.status {
                Status::Clean => {}
                Status::Disagreement => disagreements += 1,
                Status::Skipped => skipped += 1,
                Status::Failed => errors += 1,
            }
            if line.low_degree && !noticed {
                noticed = true;
                eprintln!("notice: input contains regular graphs of degree below 3");
            }
            sink.line(&line.text)
        },
    )?;
    sink.finish()?;
    if errors + disagreements + skipped > 0 {
        eprintln!("{total} records: {errors} parse errors, {disagreements} disagreements, {skipped} skipped");
    }
    Ok(if errors > 0 {
        2
    } else if disagreements > 0 {
        1
    } else {
        0
    })
}

pub fn alpha(io_args: &IoArgs) -> io::Result<u8> {
    per_graph(io_args, |origin, g| {
        let result = independence::max_independent_set(g);
        Line::clean(json(&Record::Alpha {
            origin,
            graph6: &to_graph6(g),
            n: g.n(),
            alpha: result.alpha,
            witness: &result.witness,
        }))
    })
}

pub fn mu(io_args: &IoArgs) -> io::Result<u8> {
    per_graph(io_args, |origin, g| {
        let m = matching::maximum_matching(g);
        let edges: Vec<_> = m.edges().collect();
        Line::clean(json(&Record::Mu {
            origin,
            graph6: &to_graph6(g),
            n: g.n(),
            mu: m.size(),
            matching: &edges,
        }))
    })
}

pub fn decompose(io_args: &IoArgs) -> io::Result<u8> {
    per_graph(io_args, |origin, g| {
        let d = gallai_edmonds::decompose(g);
        Line::clean(json(&Record::Decompose {
            origin,
            graph6: &to_graph6(g),
            decomposition: &d,
        }))
    })
}

fn skip_reason(e: &CharacterizationError) -> &'static str {
    match e {
        CharacterizationError::EmptyGraph => "empty graph",
        CharacterizationError::Disconnected => "disconnected",
        CharacterizationError::NotRegular => "not regular",
        CharacterizationError::ZeroDegree => "zero degree",
        _ => "outside the characterization's scope",
    }
}

/// The degree of a connected regular graph with `r >= 1`, or a skip line.
fn scope(origin: Origin, g: &Graph, graph6: &str) -> Result<usize, Line> {
    characterization::require_connected_regular(g).map_err(|e| Line {
        text: json(&Record::Skip {
            origin,
            graph6,
            reason: skip_reason(&e),
        }),
        status: Status::Skipped,
        low_degree: false,
    })
}

pub fn check(io_args: &IoArgs) -> io::Result<u8> {
    per_graph(io_args, |origin, g| {
        let graph6 = to_graph6(g);
        let r = match scope(origin, g, &graph6) {
            Ok(r) => r,
            Err(skip) => return skip,
        };
        match characterization::check(g) {
            Ok(report) => Line {
                text: json(&Record::Check {
                    origin,
                    graph6: &graph6,
                    report: &report,
                }),
                status: if report.agree == Some(true) {
                    Status::Clean
                } else {
                    Status::Disagreement
                },
                low_degree: r < 3,
            },
            Err(e) => bad_line(origin, &e.to_string()),
        }
    })
}

fn gen_spec(args: &GenArgs) -> Result<GenSpec, String> {
    let (Some(n), Some(r)) = (args.n, args.r) else {
        return Err("--n and --r are required".into());
    };
    let spec = if args.random {
        GenSpec::random(n, r, args.count, args.seed)
    } else {
        GenSpec::exhaustive(n, r)
    };
    Ok(if args.dedup { spec.with_dedup() } else { spec })
}

type GraphStream = Box<dyn Iterator<Item = Result<Graph, GenError>>>;

fn generate(spec: &GenSpec) -> Result<GraphStream, GenError> {
    if spec.mode == regmatch::graphgen::GenMode::Random {
        Ok(Box::new(random_regular(spec)?))
    } else {
        Ok(Box::new(enumerate_regular(spec)?.map(Ok)))
    }
}

pub fn gen(args: &GenArgs) -> io::Result<u8> {
    let stream = match gen_spec(args).and_then(|spec| generate(&spec).map_err(|e| e.to_string())) {
        Ok(stream) => stream,
        Err(message) => {
            eprintln!("regmatch gen: {message}");
            return Ok(2);
        }
    };
    let mut sink = Sink::open(args.out.as_deref())?;
    for item in stream {
        match item {
            Ok(g) => sink.line(&to_graph6(&g))?,
            Err(e) => {
                sink.finish()?;
                eprintln!("regmatch gen: {e}");
                return Ok(2);
            }
        }
    }
    sink.finish()?;
    Ok(0)
}

enum Audited {
    Graph(Box<harness::GraphAudit>, Option<String>),
    Skipped(String),
    Filtered,
    Failed(String),
}

pub fn verify(args: &VerifyArgs, argv: &[String]) -> io::Result<u8> {
    let started = Instant::now();
    let mut sink = Sink::open(args.gen.out.as_deref())?;
    sink.record(&Record::Header {
        command: "verify",
        args: argv,
    })?;
    let mut summary = RunSummary::default();

    let ingesting = args.input.is_some();
    let inputs: Box<dyn Iterator<Item = Input>> = if let Some(path) = &args.input {
        read_input(Some(path))?
    } else {
        match gen_spec(&args.gen).and_then(|spec| generate(&spec).map_err(|e| e.to_string())) {
            Ok(stream) => {
                if args.gen.r.is_some_and(|r| r < 3) {
                    eprintln!("notice: degree below 3");
                }
                Box::new(stream.enumerate().map(|(index, item)| {
                    let origin = Origin { index, line: None };
                    match item {
                        Ok(g) => Input::Graph(origin, g),
                        Err(e) => Input::Bad(origin, e.to_string()),
                    }
                }))
            }
            Err(message) => {
                eprintln!("regmatch verify: {message}");
                summary.errors += 1;
                sink.record(&Record::Error {
                    origin: None,
                    message: &message,
                })?;
                sink.record(&Record::Summary {
                    generated: Some(0),
                    filtered_disconnected: Some(0),
                    run: &summary,
                    audit_records: 0,
                    exit_status: 2,
                })?;
                sink.finish()?;
                return Ok(2);
            }
        }
    };

    let (mut generated, mut filtered, mut audit_records) = (0, 0, 0);
    let all_records = args.all_records;
    run_ordered(
        inputs,
        |input| match input {
            Input::Bad(origin, message) => Audited::Failed(json(&Record::Error {
                origin: Some(origin),
                message: &message,
            })),
            Input::Graph(origin, g) => {
                if ingesting {
                    let graph6 = to_graph6(&g);
                    if let Err(skip) = scope(origin, &g, &graph6) {
                        return Audited::Skipped(skip.text);
                    }
                } else if !g.is_connected() {
                    return Audited::Filtered;
                }
                let audit = harness::audit(&g);
                let text = (all_records || !audit.passed()).then(|| {
                    json(&Record::Audit {
                        origin,
                        audit: &audit,
                    })
                });
                Audited::Graph(Box::new(audit), text)
            }
        },
        |outcome| {
            match outcome {
                Audited::Graph(audit, text) => {
                    generated += 1;
                    summary.add(&audit);
                    if let Some(text) = text {
                        audit_records += 1;
                        sink.line(&text)?;
                    }
                }
                Audited::Filtered => {
                    generated += 1;
                    filtered += 1;
                }
                Audited::Skipped(text) => {
                    summary.skipped += 1;
                    sink.line(&text)?;
                }
                Audited::Failed(text) => {
                    summary.errors += 1;
                    sink.line(&text)?;
                }
            }
            Ok(())
        },
    )?;

    let exit_status = summary.exit_code();
    sink.record(&Record::Summary {
        generated: (!ingesting).then_some(generated),
        filtered_disconnected: (!ingesting).then_some(filtered),
        run: &summary,
        audit_records,
        exit_status,
    })?;
    sink.finish()?;
    eprintln!(
        "verified {} graphs: {} agreements, {} disagreements, {} skipped, {} errors ({:.1}s)",
        summary.processed,
        summary.agreements,
        summary.disagreements,
        summary.skipped,
        summary.errors,
        started.elapsed().as_secs_f64()
    );
    Ok(exit_status as u8)
}
