use std::fs::File;
use std::io::{self, BufWriter};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use vizstate::bench::{run_benchmark, summarize, write_csv, BenchConfig};
use vizstate::Tracking;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Dirty,
    Naive,
}

/// Headless frame-time benchmark for animated scatter-plot state.
#[derive(Debug, Parser)]
#[command(version)]
struct Args {
    /// Number of points.
    #[arg(long, default_value_t = 10_000)]
    marks: usize,
    /// Length of the position animation in milliseconds.
    #[arg(long = "duration-ms", default_value_t = 5000.0)]
    duration_ms: f64,
    /// Fraction of points that fade out (and are replaced) during the run.
    #[arg(long, default_value_t = 0.25)]
    churn: f64,
    /// Simulated frame step in milliseconds.
    #[arg(long = "frame-dt", default_value_t = 16.667)]
    frame_dt: f64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, value_enum, default_value_t = Mode::Dirty)]
    mode: Mode,
    /// Fraction of the original points that move.
    #[arg(long = "animate-fraction", default_value_t = 1.0)]
    animate_fraction: f64,
    /// CSV destination; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn run(args: Args) -> Result<(), String> {
    let config = BenchConfig {
        n_marks: args.marks,
        animation_duration: args.duration_ms,
        churn_fraction: args.churn,
        frame_dt: args.frame_dt,
        seed: args.seed,
        mode: match args.mode {
            Mode::Dirty => Tracking::Dirty,
            Mode::Naive => Tracking::Naive,
        },
        trials: args.trials,
        animate_fraction: args.animate_fraction,
    };
    let trials = run_benchmark(&config).map_err(|e| e.to_string())?;
    let records = trials.iter().flatten();
    match &args.out {
        Some(path) => {
            let file = File::create(path).map_err(|e| format!("{}: {e}", path.display()))?;
            write_csv(records, BufWriter::new(file))
        }
        None => write_csv(records, io::stdout().lock()),
    }
    .map_err(|e| e.to_string())?;

    let s = summarize(&trials);
    eprintln!(
        "mode={:?} marks={} trials={} frames={} mean_frame_ms={:.4} mean_advance_ms={:.4} p95_frame_ms={:.4}",
        config.mode, config.n_marks, config.trials, s.frames, s.mean_frame_ms, s.mean_advance_ms, s.p95_frame_ms
    );
    Ok(())
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let msg = e.to_string();
            eprintln!("{}", msg.lines().next().unwrap_or("invalid arguments"));
            return ExitCode::from(2);
        }
    };
    match run(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
