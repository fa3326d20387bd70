use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use seidel_core::formats::{parse_graph, to_dot, to_edgelist, to_graph6, Format};
use seidel_core::graph::Graph;
use seidel_core::halfgraph_fast::HalfGraphDescriptor;
use seidel_core::harness::{
    bench_csv, bench_fastmove_rounds, verify, verify_move_sequences, verify_staircase_moves,
    GraphSpace, MoveWorkload, Mutation, Property, SeidelOperator, VerifyOptions,
    DEFAULT_MAX_COUNTEREXAMPLES,
};
use seidel_core::modular::{is_module, is_prime, md_tree};
use seidel_core::recognition::{
    find_any, find_induced, is_cograph, Pattern, PatternMatch, P5_HOUSE_BULL,
};
use seidel_core::seidel::seidel_complement;
use seidel_core::structure::{
    classify_prime, find_buoy, make_halfgraph, recognize_halfgraph, standard_form,
};

#[derive(Parser)]
#[command(
    name = "seidel",
    version,
    about = "Seidel complementation and (P5, House, Bull)-free graph structure"
)]
struct Cli {
    /// Input graph file, `-` for stdin.
    #[arg(long = "in", global = true, default_value = "-")]
    input: String,
    /// Input format; guessed from the content when omitted.
    #[arg(long, global = true, value_enum)]
    format: Option<InFormat>,
    /// Output format.
    #[arg(long, global = true, value_enum)]
    out: Option<OutFormat>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum InFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Graph6,
    Edgelist,
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Apply G * v and emit the result.
    Seidel { v: usize },
    /// Report (P5, House, Bull)-freeness with a witness, plus a few side facts.
    Recognize,
    /// Classify a prime graph into the three alternatives.
    Classify,
    /// Modular decomposition tree.
    Mdtree,
    /// Buoy around an induced C5 (the first one found unless given).
    Buoy {
        #[arg(long, value_delimiter = ',')]
        cycle: Option<Vec<usize>>,
    },
    /// Recognize a half-graph, or emit the staircase with `--make k`.
    Halfgraph {
        #[arg(long)]
        make: Option<usize>,
    },
    /// Run descriptor moves on a half-graph (or its complement).
    Fastmove {
        moves: Vec<usize>,
        /// Start from the staircase H_k instead of reading a graph.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        materialize: bool,
    },
    /// Check a property over a graph space.
    Verify(VerifyArgs),
    /// Time descriptor moves; prints CSV.
    BenchFastmove {
        #[arg(long, value_delimiter = ',', default_values_t = [1usize << 10, 1 << 20])]
        k: Vec<usize>,
        #[arg(long, default_value_t = 1 << 21)]
        moves: usize,
        /// `uniform` or `working-set:<size>`.
        #[arg(long, default_value = "working-set:256")]
        workload: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Interleaved rounds; the median round per k is reported.
        #[arg(long, default_value_t = 5)]
        rounds: usize,
    },
}

#[derive(Args)]
struct VerifyArgs {
    property: String,
    /// Graph order.
    #[arg(long)]
    n: Option<usize>,
    /// Sample this many random graphs instead of enumerating.
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// One graph per isomorphism class.
    #[arg(long, conflicts_with_all = ["samples", "bipartite"])]
    classes: bool,
    /// All bipartite graphs with sides {0..a} and the rest.
    #[arg(long, conflicts_with = "samples")]
    bipartite: bool,
    /// Seeded operator fault: `drop-e3` or `asymmetric-e1`.
    #[arg(long)]
    mutant: Option<String>,
    /// Use the classify-and-rebuild operator instead of row XOR.
    #[arg(long, conflicts_with = "mutant")]
    classified: bool,
    /// PROP2_EQUIV only: every vertex of every staircase up to this k.
    #[arg(long)]
    kmax: Option<usize>,
    /// PROP2_EQUIV only: this many random move sequences.
    #[arg(long, conflicts_with = "kmax")]
    sequences: Option<u64>,
    #[arg(long, default_value_t = 100)]
    length: usize,
    #[arg(long, default_value_t = 16)]
    k: usize,
    /// Include elapsed time in the report.
    #[arg(long)]
    timing: bool,
    #[arg(long)]
    serial: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_COUNTEREXAMPLES)]
    max_counterexamples: usize,
}

enum Failure {
    /// Exit 1.
    Violation(String),
    /// Exit 2.
    Usage(String),
}

type Outcome = Result<String, Failure>;

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let (text, code) = match run(&cli) {
        Ok(text) => (text, 0),
        Err(Failure::Violation(text)) => {
            eprintln!("property violated");
            (text, 1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let mut stdout = io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes());
    if !text.ends_with('\n') {
        let _ = stdout.write_all(b"\n");
    }
    ExitCode::from(code)
}

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("SEIDEL_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .parse()
        .map_err(|_| format!("SEIDEL_THREADS must be a positive integer, got `{value}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Seidel { v } => {
            let g = read_graph(cli)?;
            emit_graph(&seidel_complement(&g, *v).map_err(usage)?, cli.out)
        }
        Command::Recognize => recognize(&read_graph(cli)?, cli.out),
        Command::Classify => {
            let g = read_graph(cli)?;
            let report = classify_prime(&g).map_err(usage)?;
            emit_json(
                cli.out,
                &json!({ "schema": "v1", "conditions": report.conditions(), "report": report }),
            )
        }
        Command::Mdtree => {
            let tree = md_tree(&read_graph(cli)?).map_err(usage)?;
            emit_json(cli.out, &json!({ "schema": "v1", "tree": tree }))
        }
        Command::Buoy { cycle } => buoy(&read_graph(cli)?, cycle.as_deref(), cli.out),
        Command::Halfgraph { make: Some(k) } => {
            let g = make_halfgraph(*k).map_err(usage)?;
            if cli.out == Some(OutFormat::Json) {
                let form = standard_form(*k).map_err(usage)?;
                return emit_json(
                    cli.out,
                    &json!({ "schema": "v1", "form": form, "graph": g }),
                );
            }
            emit_graph(&g, cli.out)
        }
        Command::Halfgraph { make: None } => {
            let g = read_graph(cli)?;
            let form = recognize_halfgraph(&g);
            emit_json(
                cli.out,
                &json!({ "schema": "v1", "halfgraph": form.is_some(), "form": form }),
            )
        }
        Command::Fastmove {
            moves,
            k,
            materialize,
        } => fastmove(cli, moves, *k, *materialize),
        Command::Verify(args) => run_verify(args, cli.out),
        Command::BenchFastmove {
            k,
            moves,
            workload,
            seed,
            rounds,
        } => {
            let workload = parse_workload(workload)?;
            if let Some(&bad) = k.iter().find(|&&k| k < 2) {
                return Err(Failure::Usage(format!("k must be at least 2, got {bad}")));
            }
            Ok(bench_csv(&bench_fastmove_rounds(
                k, workload, *moves, *seed, *rounds,
            )))
        }
    }
}

fn read_graph(cli: &Cli) -> Result<Graph, Failure> {
    let mut text = String::new();
    if cli.input == "-" {
        io::stdin().read_to_string(&mut text).map_err(usage)?;
    } else {
        text = fs::read_to_string(&cli.input)
            .map_err(|e| Failure::Usage(format!("{}: {e}", cli.input)))?;
    }
    let format = match cli.format {
        Some(InFormat::Graph6) => Format::Graph6,
        Some(InFormat::Edgelist) => Format::Edgelist,
        None => guess_format(&text),
    };
    parse_graph(format, &text).map_err(|e| Failure::Usage(format!("{}: {e}", cli.input)))
}

fn guess_format(text: &str) -> Format {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first {
        Some(l) if l.starts_with('#') || l.starts_with("n ") || l == "n" => Format::Edgelist,
        _ => Format::Graph6,
    }
}

fn emit_graph(g: &Graph, out: Option<OutFormat>) -> Outcome {
    Ok(match out.unwrap_or(OutFormat::Graph6) {
        OutFormat::Graph6 => to_graph6(g),
        OutFormat::Edgelist => to_edgelist(g),
        OutFormat::Dot => to_dot(g),
        OutFormat::Json => pretty(&json!({ "schema": "v1", "graph": g })),
    })
}

/// Reports are JSON only.
fn emit_json<T: Serialize>(out: Option<OutFormat>, value: &T) -> Outcome {
    match out {
        None | Some(OutFormat::Json) => Ok(pretty(value)),
        Some(_) => Err(Failure::Usage(
            "this command only produces JSON (use --out json)".into(),
        )),
    }
}

fn pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn recognize(g: &Graph, out: Option<OutFormat>) -> Outcome {
    let witness: Option<PatternMatch> = find_any(g, &P5_HOUSE_BULL);
    emit_json(
        out,
        &json!({
            "schema": "v1",
            "order": g.order(),
            "p5_house_bull_free": witness.is_none(),
            "witness": witness,
            "prime": is_prime(g),
            "cograph": is_cograph(g),
            "bipartite": g.is_bipartite(),
            "halfgraph": recognize_halfgraph(g).is_some(),
        }),
    )
}

fn buoy(g: &Graph, cycle: Option<&[usize]>, out: Option<OutFormat>) -> Outcome {
    let start = match cycle {
        Some(c) => {
            let m = PatternMatch {
                pattern: Pattern::C5,
                vertices: c.to_vec(),
            };
            if c.len() != 5 || c.iter().any(|&v| v >= g.order()) || !m.validate(g) {
                return Err(Failure::Usage(format!(
                    "{c:?} is not an induced C5 of the graph"
                )));
            }
            m
        }
        None => find_induced(g, Pattern::C5)
            .ok_or_else(|| Failure::Usage("graph has no induced C5".into()))?,
    };
    let b = find_buoy(g, &start).map_err(usage)?;
    let union = b.union();
    emit_json(
        out,
        &json!({
            "schema": "v1",
            "cycle": start.vertices,
            "classes": b.classes,
            "union": union,
            "whole_graph": union.len() == g.order(),
            "module": is_module(g, &union),
        }),
    )
}

fn fastmove(cli: &Cli, moves: &[usize], k: Option<usize>, materialize: bool) -> Outcome {
    let mut d = match k {
        Some(k) => HalfGraphDescriptor::from_form(&standard_form(k).map_err(usage)?),
        None => HalfGraphDescriptor::from_graph(&read_graph(cli)?).ok_or_else(|| {
            Failure::Usage("input is neither a half-graph nor the complement of one".into())
        })?,
    };
    for &x in moves {
        d.seidel_move(x).map_err(usage)?;
    }
    match cli.out {
        None | Some(OutFormat::Json) => {
            let graph = materialize.then(|| to_graph6(&d.materialize()));
            Ok(pretty(&json!({
                "schema": "v1",
                "k": d.k(),
                "moves": moves,
                "complemented": d.is_complemented(),
                "realizer": d.realizer(),
                "form": d.implied_form().ok(),
                "graph6": graph,
            })))
        }
        Some(_) if materialize => emit_graph(&d.materialize(), cli.out),
        Some(_) => Err(Failure::Usage("graph output needs --materialize".into())),
    }
}

fn parse_workload(s: &str) -> Result<MoveWorkload, Failure> {
    if s == "uniform" {
        return Ok(MoveWorkload::Uniform);
    }
    s.strip_prefix("working-set:")
        .and_then(|m| m.parse().ok())
        .filter(|&m: &usize| m > 0)
        .map(MoveWorkload::WorkingSet)
        .ok_or_else(|| Failure::Usage(format!("unknown workload `{s}`")))
}

fn run_verify(args: &VerifyArgs, out: Option<OutFormat>) -> Outcome {
    let property: Property = args.property.parse().map_err(usage)?;
    let operator = match (&args.mutant, args.classified) {
        (Some(m), _) => SeidelOperator::Mutant(m.parse::<Mutation>().map_err(usage)?),
        (None, true) => SeidelOperator::Classified,
        (None, false) => SeidelOperator::Bitwise,
    };
    let opts = VerifyOptions {
        operator,
        parallel: !args.serial,
        max_counterexamples: args.max_counterexamples,
    };
    let staircase = args.kmax.is_some() || args.sequences.is_some();
    if staircase && property != Property::Prop2Equiv {
        return Err(Failure::Usage(
            "--kmax and --sequences apply to PROP2_EQUIV only".into(),
        ));
    }
    let report = if let Some(kmax) = args.kmax {
        verify_staircase_moves(kmax, opts)
    } else if let Some(count) = args.sequences {
        if args.k < 2 {
            return Err(Failure::Usage("--k must be at least 2".into()));
        }
        verify_move_sequences(args.k, count, args.length, args.seed, opts)
    } else {
        let n = args
            .n
            .ok_or_else(|| Failure::Usage("--n is required".into()))?;
        let space = if let Some(count) = args.samples {
            GraphSpace::Sampled {
                n,
                count,
                seed: args.seed,
            }
        } else if args.classes {
            GraphSpace::Classes { n }
        } else if args.bipartite {
            GraphSpace::Bipartite { n }
        } else {
            GraphSpace::Exhaustive { n }
        };
        verify(property, &space, opts).map_err(usage)?
    };
    let passed = report.passed();
    let report = if args.timing {
        report
    } else {
        report.without_timing()
    };
    let text = emit_json(out, &report)?;
    if passed {
        Ok(text)
    } else {
        Err(Failure::Violation(text))
    }
}
