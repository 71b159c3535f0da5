use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use sphere_laman::{cmd_count, cmd_sweep, cmd_verify, Fault, InputError, Settings, SweepOptions, DEFAULT_SWEEP_MAX};
use sphere_laman_core::generator::MAX_ENUMERATION_N;
use sphere_laman_core::{parse_graphs, Format};

const THREADS_ENV: &str = "SPHERE_LAMAN_THREADS";

/// Number of complex realizations of Laman graphs on the sphere.
#[derive(Parser, Debug)]
#[command(name = "sphere-laman", version)]
struct Cli {
    /// Worker threads [env: SPHERE_LAMAN_THREADS] [default: available parallelism].
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Memoize subproblems of the recursion.
    #[arg(long, global = true, value_enum, default_value_t = Toggle::On)]
    memo: Toggle,

    /// Add elapsed time and memo statistics to each report.
    #[arg(long, global = true)]
    stats: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count realizations of the graphs in the given files (stdin if none).
    Count {
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = InputFormat::EdgeList)]
        format: InputFormat,
        /// Also count graphs that are not Laman.
        #[arg(long)]
        force: bool,
    },
    /// Count every Laman graph on `n` vertices and report the maximum.
    Sweep {
        #[arg(long)]
        n: u32,
        /// Print only the summary line.
        #[arg(long)]
        max_only: bool,
        /// Write the enumerated corpus (graph6, one per line) to this file.
        #[arg(long)]
        corpus_out: Option<PathBuf>,
        /// Allow n = 10 (about 110k graphs; a long run).
        #[arg(long)]
        full: bool,
    },
    /// Check the recursion against the exact solver on small graphs.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InputFormat {
    EdgeList,
    Graph6,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            // Bad input is 2; anything else that stops a run is a failure.
            ExitCode::from(if e.is::<InputError>() { 2 } else { 1 })
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let threads = match cli.threads {
        Some(t) => t,
        None => match std::env::var(THREADS_ENV) {
            Ok(v) => v.trim().parse().map_err(|_| InputError(format!("{THREADS_ENV}={v:?} is not a thread count")))?,
            Err(_) => 0,
        },
    };
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().context("starting thread pool")?;
    let settings = Settings { memo: matches!(cli.memo, Toggle::On), parallel: threads != 1, stats: cli.stats };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());

    let code = match cli.command {
        Command::Count { files, format, force } => {
            let format = match format {
                InputFormat::EdgeList => Format::EdgeList,
                InputFormat::Graph6 => Format::Graph6,
            };
            let graphs = read_graphs(&files, format)?;
            cmd_count(&graphs, force, &settings, &mut out)?;
            ExitCode::SUCCESS
        }
        Command::Sweep { n, max_only, corpus_out, full } => {
            let bound = if full { MAX_ENUMERATION_N } else { DEFAULT_SWEEP_MAX };
            let opts = SweepOptions { n, max_only, bound, corpus_out: corpus_out.as_deref() };
            cmd_sweep(&opts, &settings, &mut out)?;
            ExitCode::SUCCESS
        }
        Command::Verify { seed, inject_fault } => {
            let fault = if inject_fault { Fault::OffByOne } else { Fault::None };
            if cmd_verify(seed, fault, &settings, &mut out)? {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    };
    out.flush()?;
    Ok(code)
}

fn read_graphs(files: &[PathBuf], format: Format) -> Result<Vec<(String, sphere_laman_core::Graph)>> {
    let stdin = [PathBuf::from("-")];
    let files = if files.is_empty() { &stdin[..] } else { files };
    let mut sources = Vec::new();
    for f in files {
        let (name, text) = if f.as_os_str() == "-" {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text).map_err(|e| InputError(format!("stdin: {e}")))?;
            ("stdin".to_string(), text)
        } else {
            let text = std::fs::read_to_string(f).map_err(|e| InputError(format!("{}: {e}", f.display())))?;
            (f.display().to_string(), text)
        };
        sources.push((name, text));
    }
    let mut graphs = Vec::new();
    for (name, text) in sources {
        let parsed = parse_graphs(&text, format).map_err(|e| InputError(format!("{name}: {e}")))?;
        graphs.extend(parsed.into_iter().enumerate().map(|(i, g)| (format!("{name}#{}", i + 1), g)));
    }
    Ok(graphs)
}
