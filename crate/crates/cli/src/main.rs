//! Command-line front end: measure graphs, decide profile
//! feasibility, build self-verified witnesses, and tally censuses.
//!
//! Exit codes are a stable contract:
//!   0 success, 1 infeasible or not realizable, 2 parse or usage
//!   error, 3 disconnected input, 4 order below the characterized
//!   range, 5 internal self-verification mismatch.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use deltagraph::{
    analyze, census_with_workers, construct_witness, decode_graph6, encode_graph6, feasible,
    from_json, soundness_sweep, to_dot, to_json, Error, Graph, Query, Universe,
};

#[derive(Parser)]
#[command(
    name = "deltagraph",
    version,
    about = "Free vertices, diameter, and connectivity of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Measure a graph: free vertices, diameter, connectivity.
    ///
    /// INPUT is a graph6 string, or a path to a file holding either a
    /// graph6 line or the JSON edge-list form.
    Analyze { input: String },
    /// Decide whether some connected non-complete graph on n vertices
    /// has the profile (f, d, k).
    Check {
        n: usize,
        f: usize,
        d: usize,
        k: usize,
    },
    /// Build a graph with profile exactly (f, d, k), re-measured
    /// before printing.
    Build {
        n: usize,
        f: usize,
        d: usize,
        k: usize,
        /// Output encoding for the witness graph.
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        /// Also print the construction trace to stderr.
        #[arg(long)]
        recipe: bool,
        /// Write the graph here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tally the profiles of every graph in an enumerated universe,
    /// as CSV (one row per profile, ordered).
    Census {
        n: usize,
        /// Universe to enumerate: all labeled graphs (n <= 7), one
        /// graph per isomorphism class (n <= 8), or seeded uniform
        /// samples.
        #[arg(long, value_enum, default_value_t = Mode::Canonical)]
        mode: Mode,
        /// Sample-mode generator seed; required with --mode sampled.
        #[arg(long)]
        seed: Option<u64>,
        /// Sample-mode draw count.
        #[arg(long, default_value_t = 100_000)]
        draws: u64,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rebuild and re-measure every feasible profile for each n in
    /// the range; fails loudly on any mismatch.
    VerifyRange { n_lo: usize, n_hi: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Labeled,
    Canonical,
    Sampled,
}

/// Message plus the process exit code it should produce.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotRealizable { .. } => 1,
            Error::NotConnected => 3,
            Error::OutOfTheoremRange { .. } => 4,
            Error::ConstructionMismatch { .. } => 5,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Analyze { input } => cmd_analyze(&input),
        Cmd::Check { n, f, d, k } => cmd_check(Query::new(n, f, d, k)),
        Cmd::Build {
            n,
            f,
            d,
            k,
            format,
            recipe,
            out,
        } => cmd_build(Query::new(n, f, d, k), format, recipe, out),
        Cmd::Census {
            n,
            mode,
            seed,
            draws,
            jobs,
            out,
        } => cmd_census(n, mode, seed, draws, jobs, out),
        Cmd::VerifyRange { n_lo, n_hi } => cmd_verify_range(n_lo, n_hi),
    }
}

/// A literal graph6 string, or a file holding graph6 or JSON.
fn read_graph(input: &str) -> Result<Graph, Failure> {
    let text = if std::path::Path::new(input).is_file() {
        fs::read_to_string(input).map_err(|e| Failure::usage(format!("{input}: {e}")))?
    } else {
        input.to_string()
    };
    let trimmed = text.trim();
    let g = if trimmed.starts_with('{') {
        from_json(trimmed)?
    } else {
        decode_graph6(trimmed)?
    };
    Ok(g)
}

fn cmd_analyze(input: &str) -> Result<(), Failure> {
    let g = read_graph(input)?;
    let report = analyze(&g).map_err(|e| match e {
        // A one-vertex graph parses but has no diameter to report.
        Error::Degenerate => Failure::usage("graph has a single vertex; nothing to measure"),
        other => other.into(),
    })?;
    println!("n={} m={}", g.order(), g.edge_count());
    println!(
        "f={} d={} k={} phi={}",
        report.delta.f, report.delta.d, report.delta.k, report.phi
    );
    let labels: Vec<String> = report
        .free_set
        .iter()
        .map(|v| (v + 1).to_string())
        .collect();
    if labels.is_empty() {
        println!("free:");
    } else {
        println!("free: {}", labels.join(" "));
    }
    Ok(())
}

fn cmd_check(q: Query) -> Result<(), Failure> {
    let verdict = feasible(q)?;
    let word = if verdict.feasible {
        "FEASIBLE"
    } else {
        "INFEASIBLE"
    };
    match verdict.bound_detail {
        Some(bound) => println!("{word} {} (threshold {bound})", verdict.clause),
        None => println!("{word} {}", verdict.clause),
    }
    if verdict.feasible {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            message: format!(
                "no graph on {} vertices has profile ({},{},{})",
                q.n, q.f, q.d, q.k
            ),
        })
    }
}

fn cmd_build(q: Query, format: Format, recipe: bool, out: Option<PathBuf>) -> Result<(), Failure> {
    let (g, trace) = construct_witness(q)?;
    if recipe {
        eprintln!("family: {}", trace.family_tag);
        for step in &trace.steps {
            eprintln!("  {step}");
        }
    }
    let text = match format {
        Format::Graph6 => format!("{}\n", encode_graph6(&g)),
        Format::Dot => to_dot(&g, true),
        Format::Json => format!("{}\n", to_json(&g)),
    };
    emit(text, out)
}

fn cmd_census(
    n: usize,
    mode: Mode,
    seed: Option<u64>,
    draws: u64,
    jobs: usize,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    if jobs == 0 {
        return Err(Failure::usage("--jobs must be at least 1"));
    }
    let universe = match mode {
        Mode::Labeled => Universe::LabeledAll,
        Mode::Canonical => Universe::CanonicalAll,
        Mode::Sampled => {
            let seed = seed.ok_or_else(|| Failure::usage("--mode sampled requires --seed"))?;
            Universe::Sampled { seed, draws }
        }
    };
    let table = census_with_workers(n, universe, jobs)?;
    emit(table.to_csv(), out)
}

fn cmd_verify_range(n_lo: usize, n_hi: usize) -> Result<(), Failure> {
    if n_lo > n_hi {
        return Err(Failure::usage("empty range: n_lo exceeds n_hi"));
    }
    let mut tuples = 0usize;
    let mut broken = 0usize;
    for n in n_lo..=n_hi {
        let report = soundness_sweep(n)?;
        println!(
            "n={}: {} feasible, {} verified, {} mismatches",
            n,
            report.feasible_count,
            report.verified,
            report.mismatches.len()
        );
        for (q, got) in &report.mismatches {
            eprintln!(
                "mismatch: wanted {q}, measured ({},{},{})",
                got.f, got.d, got.k
            );
        }
        tuples += report.feasible_count;
        broken += report.mismatches.len();
    }
    println!("total: {tuples} tuples, {broken} mismatches");
    if broken == 0 {
        Ok(())
    } else {
        Err(Failure {
            code: 5,
            message: format!("{broken} constructions measured wrong"),
        })
    }
}

fn emit(text: String, out: Option<PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(&path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
