//! Command-line front end: `enumerate`, `count`, `verify` and `bench`.

use std::io::{self, Read, Write};
use std::path::PathBuf;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclori::{
    parse_edge_list, prepare, solutions, verify, Algorithm, DelayRecorder, HoleStrategy, Options,
    OrientationBits, UndirectedGraph,
};

#[derive(Parser, Debug)]
#[command(
    name = "cyclori",
    version,
    about = "Enumerate the cyclic orientations of an undirected graph"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stream every cyclic orientation.
    Enumerate(Common),
    /// Print the number of cyclic orientations.
    Count(Common),
    /// Compare against the brute-force oracle (at most 24 edges).
    Verify(Common),
    /// Run with step instrumentation and print delay statistics.
    Bench(Common),
}

#[derive(Args, Debug)]
struct Common {
    /// Edge-list file, or `-` for standard input.
    file: PathBuf,
    #[arg(long, default_value = "fast", value_parser = parse_algorithm)]
    algorithm: Algorithm,
    #[arg(long, default_value = "fast", value_parser = parse_strategy)]
    hole_strategy: HoleStrategy,
    #[arg(long, value_enum, default_value_t = OutputFormat::Bits)]
    output: OutputFormat,
    /// Stop after this many solutions.
    #[arg(long)]
    limit: Option<u64>,
    /// Print step statistics as key=value lines on standard error.
    #[arg(long)]
    stats: bool,
    /// Reject inputs with more than one connected component.
    #[arg(long)]
    strict_connected: bool,
    /// Print the compressed multigraph and exit.
    #[arg(long)]
    dump_multigraph: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum OutputFormat {
    Bits,
    Arcs,
    None,
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse()
}

fn parse_strategy(s: &str) -> Result<HoleStrategy, String> {
    s.parse::<HoleStrategy>().map_err(|e| e.to_string())
}

const EXIT_INPUT: i32 = 1;
const EXIT_MISMATCH: i32 = 2;

/// Runs the command line `argv` (program name first) and returns the exit
/// code.
pub fn run_cli<I, T>(
    argv: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                EXIT_INPUT
            } else {
                let _ = write!(stdout, "{}", e.render());
                0
            };
            return code;
        }
    };
    match execute(cli.command, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(e) if is_broken_pipe(&e) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            EXIT_INPUT
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<io::Error>()
        .is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe)
}

fn load(args: &Common, stdin: &mut dyn Read) -> anyhow::Result<UndirectedGraph> {
    let mut text = String::new();
    if args.file.as_os_str() == "-" {
        stdin
            .read_to_string(&mut text)
            .context("reading standard input")?;
    } else {
        text = std::fs::read_to_string(&args.file)
            .with_context(|| format!("reading {}", args.file.display()))?;
    }
    parse_edge_list(&text, args.strict_connected)
        .with_context(|| format!("parsing {}", args.file.display()))
}

fn write_solution(
    out: &mut dyn Write,
    g: &UndirectedGraph,
    bits: &OrientationBits,
    format: OutputFormat,
) -> io::Result<()> {
    match format {
        OutputFormat::None => Ok(()),
        OutputFormat::Bits => writeln!(out, "{bits}"),
        OutputFormat::Arcs => {
            let line: Vec<String> = g
                .arcs(bits)
                .iter()
                .map(|&(u, v)| format!("{}>{}", g.label(u), g.label(v)))
                .collect();
            writeln!(out, "{}", line.join(" "))
        }
    }
}

fn execute(
    command: Command,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> anyhow::Result<i32> {
    let (mode, args) = match command {
        Command::Enumerate(a) => ("enumerate", a),
        Command::Count(a) => ("count", a),
        Command::Verify(a) => ("verify", a),
        Command::Bench(a) => ("bench", a),
    };
    let g = load(&args, stdin)?;
    let mut out = io::BufWriter::new(stdout);
    if args.dump_multigraph {
        let p = prepare(&g);
        write!(out, "{}", p.multigraph.dump(|v| g.label(v)))?;
        out.flush()?;
        return Ok(0);
    }
    if mode == "verify" {
        let report = verify(&g, args.algorithm, args.hole_strategy)?;
        if report.equal {
            writeln!(out, "OK: {} solutions", report.expected)?;
            out.flush()?;
            return Ok(0);
        }
        writeln!(
            out,
            "MISMATCH: expected {} solutions, produced {}; missing {}, extra {}, duplicate {}",
            report.expected,
            report.produced,
            report.missing.len(),
            report.extra.len(),
            report.duplicate.len()
        )?;
        for (kind, list) in [
            ("missing", &report.missing),
            ("extra", &report.extra),
            ("duplicate", &report.duplicate),
        ] {
            for b in list.iter().take(10) {
                writeln!(out, "{kind} {b}")?;
            }
        }
        out.flush()?;
        return Ok(EXIT_MISMATCH);
    }

    let opts = Options {
        algorithm: args.algorithm,
        hole_strategy: args.hole_strategy,
    };
    let stream = solutions(&g, &opts)?;
    let meter = stream.meter().clone();
    let mut recorder = DelayRecorder::new(meter.clone());
    let limit = args.limit.unwrap_or(u64::MAX);
    let emit = mode == "enumerate";
    for bits in stream.take(limit.try_into().unwrap_or(usize::MAX)) {
        recorder.on_solution();
        if emit {
            write_solution(&mut out, &g, &bits, args.output)?;
        }
    }
    let stats = recorder.finish();
    if mode == "count" {
        writeln!(out, "{}", stats.solutions)?;
    }
    out.flush()?;

    if mode == "bench" || args.stats {
        let r = meter.reading();
        let opt = |v: Option<u64>| v.map_or_else(|| "none".to_string(), |v| v.to_string());
        let lines = [
            ("algorithm", opts.algorithm.to_string()),
            ("hole_strategy", opts.hole_strategy.to_string()),
            ("nodes", g.node_count().to_string()),
            ("edges", g.edge_count().to_string()),
            ("solutions", stats.solutions.to_string()),
            ("setup_steps", opt(r.setup_steps)),
            ("first_solution_steps", opt(stats.first_solution_steps)),
            ("max_gap_steps", stats.max_gap.to_string()),
            ("median_gap_steps", stats.median_gap.to_string()),
            ("total_steps", stats.total_steps.to_string()),
            ("hole_search_steps", r.hole_search_steps.to_string()),
            ("recursive_calls", r.recursive_calls.to_string()),
            ("dead_calls", r.dead_calls.to_string()),
            ("peak_dictionary_bits", r.peak_dictionary_bits.to_string()),
            ("producer_branch", r.took_producer_branch.to_string()),
        ];
        let sink: &mut dyn Write = if mode == "bench" { &mut out } else { stderr };
        for (k, v) in lines {
            writeln!(sink, "{k}={v}")?;
        }
        out.flush()?;
    }
    Ok(0)
}
