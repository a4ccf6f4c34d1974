//! Headless frame-time benchmark.
//!
//! Scenario: `n_marks` points onstage; every point animates to a new random
//! location over `animation_duration`, while `churn_fraction` of them fade
//! out and as many new points fade in. The clock steps by `frame_dt` until
//! the group reports no change. Each frame times `advance` plus a read of
//! every onstage mark's momentary x, y, and alpha, folded into a checksum.
//!
//! Timings cover state management only; nothing is drawn.

use std::cell::Cell;
use std::io::{Read, Write};
use std::rc::Rc;
use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::attribute::AnimationSpec;
use crate::clock::{FrameClock, Millis};
use crate::error::{Error, Result};
use crate::mark::Mark;
use crate::render_group::{MarkRenderGroup, Tracking};
use crate::staging::StagingConfig;
use crate::value::Value;

pub const CSV_HEADER: [&str; 5] = ["trial", "frame_index", "advance_ms", "n_onstage", "checksum"];

/// Side of the square the points live in.
const EXTENT: f64 = 1000.0;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub n_marks: usize,
    pub animation_duration: Millis,
    pub churn_fraction: f64,
    pub frame_dt: Millis,
    pub seed: u64,
    pub mode: Tracking,
    pub trials: usize,
    /// Fraction of the original points that move. 1.0 reproduces the
    /// standard scenario; small values exercise dirty tracking.
    pub animate_fraction: f64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            n_marks: 10_000,
            animation_duration: 5000.0,
            churn_fraction: 0.25,
            frame_dt: 16.667,
            seed: 42,
            mode: Tracking::Dirty,
            trials: 20,
            animate_fraction: 1.0,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.n_marks < 1 {
            return bad("marks must be at least 1".into());
        }
        if !(0.0..=1.0).contains(&self.churn_fraction) {
            return bad(format!("churn must be in [0, 1], got {}", self.churn_fraction));
        }
        if !(0.0..=1.0).contains(&self.animate_fraction) {
            return bad(format!(
                "animate fraction must be in [0, 1], got {}",
                self.animate_fraction
            ));
        }
        if !self.frame_dt.is_finite() || self.frame_dt <= 0.0 {
            return bad(format!("frame dt must be positive, got {}", self.frame_dt));
        }
        if !self.animation_duration.is_finite() || self.animation_duration < 0.0 {
            return bad(format!(
                "duration must be non-negative, got {}",
                self.animation_duration
            ));
        }
        Ok(())
    }

    /// Marks that fade out (and, equally, in) per trial.
    pub fn churn_count(&self) -> usize {
        (self.churn_fraction * self.n_marks as f64).round() as usize
    }

    pub fn moving_count(&self) -> usize {
        (self.animate_fraction * self.n_marks as f64).round() as usize
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FrameRecord {
    pub trial: usize,
    pub frame_index: usize,
    /// Advance plus evaluation of every onstage mark.
    pub advance_ms: f64,
    /// Advance alone (not written to CSV).
    pub advance_only_ms: f64,
    pub n_onstage: usize,
    pub checksum: f64,
    /// Marks the advance visited (not written to CSV).
    pub visits: usize,
    /// What the group advance returned (not written to CSV).
    pub changed: bool,
}

/// Runs `config.trials` trials in `config.mode`. Trial `i` is seeded with
/// `seed + i`, so every mode sees the same scenarios.
pub fn run_benchmark(config: &BenchConfig) -> Result<Vec<Vec<FrameRecord>>> {
    config.validate()?;
    (0..config.trials).map(|trial| run_trial(config, trial)).collect()
}

/// The same scenario with every mark visited every frame.
pub fn run_baseline(config: &BenchConfig) -> Result<Vec<Vec<FrameRecord>>> {
    run_benchmark(&BenchConfig {
        mode: Tracking::Naive,
        ..config.clone()
    })
}

fn random_point(rng: &mut ChaCha8Rng) -> (f64, f64) {
    (rng.gen_range(0.0..EXTENT), rng.gen_range(0.0..EXTENT))
}

fn point_mark(i: usize, (x, y): (f64, f64)) -> Mark {
    Mark::builder(format!("p{i}"))
        .attr("x", x)
        .attr("y", y)
        .attr("alpha", 1.0)
        .attr("radius", 3.0)
        .build()
        .expect("distinct attribute names")
}

pub fn run_trial(config: &BenchConfig, trial: usize) -> Result<Vec<FrameRecord>> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(trial as u64));
    let clock = FrameClock::new();
    let fade = Rc::new(Cell::new(0.0));

    let mut group = MarkRenderGroup::new();
    group.set_tracking(config.mode);
    let (enter_clock, exit_clock) = (clock.clone(), clock.clone());
    let (enter_fade, exit_fade) = (fade.clone(), fade.clone());
    group.configure_staging(
        StagingConfig::new(
            move |m| {
                m.animate_to("alpha", 1.0, AnimationSpec::new(enter_fade.get()), &enter_clock)
                    .expect("points have alpha")
            },
            move |m| {
                m.animate_to("alpha", 0.0, AnimationSpec::new(exit_fade.get()), &exit_clock)
                    .expect("points have alpha")
            },
        )
        .with_initialize(|m| m.set("alpha", Value::from(0.0)).expect("points have alpha")),
    );

    // initial points arrive instantly
    let n = config.n_marks;
    let mut original = Vec::with_capacity(n);
    for i in 0..n {
        let mark = point_mark(i, random_point(&mut rng));
        original.push(mark.clone());
        group.show_mark(mark)?;
    }
    group.advance(clock.now())?;

    fade.set(config.animation_duration);
    let spec = AnimationSpec::new(config.animation_duration);
    let mut leaving = sample(&mut rng, n, config.churn_count()).into_vec();
    leaving.sort_unstable();
    for i in leaving {
        group.hide(original[i].id().as_str())?;
    }
    let mut moving = sample(&mut rng, n, config.moving_count()).into_vec();
    moving.sort_unstable();
    for i in moving {
        let (x, y) = random_point(&mut rng);
        original[i].animate_to("x", x, spec.clone(), &clock)?;
        original[i].animate_to("y", y, spec.clone(), &clock)?;
    }
    for j in 0..config.churn_count() {
        group.show_mark(point_mark(n + j, random_point(&mut rng)))?;
    }

    let max_frames = (config.animation_duration / config.frame_dt).ceil() as usize + 1000;
    let mut records = Vec::new();
    for frame_index in 1..=max_frames {
        let t = clock.tick(config.frame_dt)?;
        let start = Instant::now();
        let changed = group.advance(t)?;
        let advanced = start.elapsed();
        let mut checksum = 0.0;
        let mut n_onstage = 0;
        for mark in group.stage() {
            checksum += mark.number("x")? + 2.0 * mark.number("y")? + 4.0 * mark.number("alpha")?;
            n_onstage += 1;
        }
        let checksum = std::hint::black_box(checksum);
        let total = start.elapsed();
        records.push(FrameRecord {
            trial,
            frame_index,
            advance_ms: total.as_secs_f64() * 1e3,
            advance_only_ms: advanced.as_secs_f64() * 1e3,
            n_onstage,
            checksum,
            visits: group.last_visit_count(),
            changed,
        });
        if !changed {
            break;
        }
    }
    Ok(records)
}

/// Writes `trial,frame_index,advance_ms,n_onstage,checksum` rows with reals
/// at six decimals.
pub fn write_csv<'a, W: Write>(records: impl IntoIterator<Item = &'a FrameRecord>, out: W) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([
            r.trial.to_string(),
            r.frame_index.to_string(),
            format!("{:.6}", r.advance_ms),
            r.n_onstage.to_string(),
            format!("{:.6}", r.checksum),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Parses what [`write_csv`] produced. Fields not in the CSV come back zeroed.
pub fn read_csv<R: Read>(input: R) -> Result<Vec<FrameRecord>, csv::Error> {
    let mut rd = csv::Reader::from_reader(input);
    let mut out = Vec::new();
    for row in rd.records() {
        let row = row?;
        let field = |i: usize| row.get(i).unwrap_or_default();
        let num = |i: usize| field(i).parse::<f64>().unwrap_or(f64::NAN);
        let int = |i: usize| field(i).parse::<usize>().unwrap_or(usize::MAX);
        out.push(FrameRecord {
            trial: int(0),
            frame_index: int(1),
            advance_ms: num(2),
            advance_only_ms: 0.0,
            n_onstage: int(3),
            checksum: num(4),
            visits: 0,
            changed: false,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Summary {
    pub frames: usize,
    pub mean_frame_ms: f64,
    pub mean_advance_ms: f64,
    pub p95_frame_ms: f64,
}

pub fn summarize(trials: &[Vec<FrameRecord>]) -> Summary {
    let mut frames: Vec<f64> = trials.iter().flatten().map(|r| r.advance_ms).collect();
    let n = frames.len();
    if n == 0 {
        return Summary {
            frames: 0,
            mean_frame_ms: 0.0,
            mean_advance_ms: 0.0,
            p95_frame_ms: 0.0,
        };
    }
    let mean_frame_ms = frames.iter().sum::<f64>() / n as f64;
    let mean_advance_ms = trials.iter().flatten().map(|r| r.advance_only_ms).sum::<f64>() / n as f64;
    frames.sort_by(f64::total_cmp);
    let p95_frame_ms = frames[((n as f64 * 0.95).ceil() as usize).clamp(1, n) - 1];
    Summary {
        frames: n,
        mean_frame_ms,
        mean_advance_ms,
        p95_frame_ms,
    }
}
