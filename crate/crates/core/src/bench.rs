//! Measurement harness: replay a stream through a backend and record what
//! it cost.
//!
//! Each repetition gets a fresh archive and a fresh counter. With shuffling
//! enabled repetition `r` replays the stream in an order drawn from stream
//! `r` of a ChaCha8 generator seeded with the run seed, so comparison
//! counts are reproducible. The clock covers only the updates.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::archive::{BackendKind, ParetoArchive};
use crate::datasets::PointStream;
use crate::dominance::{ComparisonCounter, Point};
use crate::error::{ArchiveError, IoError};
use crate::nds::nondominated_subset;
use crate::par;

pub const CSV_HEADER: [&str; 11] = [
    "backend",
    "shape",
    "p",
    "n",
    "epsilon",
    "seed",
    "repetition",
    "total_comparisons",
    "mean_comparisons_per_insert",
    "wall_time_ns",
    "final_archive_size",
];

/// Streams longer than this skip the per-insert trace unless asked.
pub const AUTO_TRACE_LIMIT: usize = 10_000;

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub repetitions: usize,
    pub shuffle: bool,
    pub seed: u64,
    /// Record comparisons per insert; `None` means only for streams of at
    /// most [`AUTO_TRACE_LIMIT`] points.
    pub trace: Option<bool>,
    /// Take a `(processed, elapsed)` checkpoint every this many updates.
    pub checkpoint_every: Option<usize>,
    /// Run repetitions concurrently. Wall times are then flagged contended.
    pub parallel: bool,
    /// Keep each repetition's final archive in its metrics.
    pub keep_archive: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            repetitions: 10,
            shuffle: true,
            seed: 0,
            trace: None,
            checkpoint_every: None,
            parallel: false,
            keep_archive: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Checkpoint {
    pub processed: usize,
    pub elapsed_ns: u64,
}

#[derive(Debug, Clone)]
pub struct RunMetrics {
    pub backend: &'static str,
    /// Shape of the generated stream, `None` when read from a file.
    pub shape: Option<String>,
    pub p: usize,
    pub n: usize,
    pub epsilon: Option<f64>,
    /// The run seed that drove the shuffle.
    pub seed: u64,
    pub repetition: usize,
    pub total_comparisons: u64,
    pub wall_time_ns: u64,
    pub final_archive_size: usize,
    pub per_insert_comparisons: Option<Vec<u32>>,
    pub checkpoints: Vec<Checkpoint>,
    /// Measured while other repetitions ran concurrently.
    pub contended: bool,
    pub archive: Option<Vec<Point>>,
}

impl RunMetrics {
    pub fn mean_comparisons_per_insert(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            self.total_comparisons as f64 / self.n as f64
        }
    }

    /// Mean of the per-insert trace over inserts `range` (0-based).
    pub fn mean_over(&self, range: std::ops::Range<usize>) -> Option<f64> {
        let trace = self.per_insert_comparisons.as_ref()?;
        let part = trace.get(range)?;
        if part.is_empty() {
            return None;
        }
        Some(part.iter().map(|&c| c as f64).sum::<f64>() / part.len() as f64)
    }

    /// Elapsed nanoseconds at the first checkpoint with at least
    /// `processed` updates.
    pub fn elapsed_at(&self, processed: usize) -> Option<u64> {
        self.checkpoints
            .iter()
            .find(|c| c.processed >= processed)
            .map(|c| c.elapsed_ns)
    }
}

/// Replays `stream` through fresh `backend` archives, once per repetition.
pub fn run_stream(
    backend: BackendKind,
    stream: &PointStream,
    opts: &RunOptions,
) -> Result<Vec<RunMetrics>, ArchiveError> {
    backend.check_supports(stream.p)?;
    if let Some(y) = stream.points.iter().find(|y| y.dim() != stream.p) {
        return Err(ArchiveError::DimensionMismatch {
            expected: stream.p,
            found: y.dim(),
        });
    }
    let trace = opts.trace.unwrap_or(stream.len() <= AUTO_TRACE_LIMIT);
    let contended = opts.parallel && par::available() && opts.repetitions > 1;
    let runs = par::map_range(opts.repetitions, opts.parallel, |rep| {
        run_once(backend, stream, opts, rep, trace, contended)
    });
    runs.into_iter().collect()
}

fn run_once(
    backend: BackendKind,
    stream: &PointStream,
    opts: &RunOptions,
    rep: usize,
    trace: bool,
    contended: bool,
) -> Result<RunMetrics, ArchiveError> {
    let mut order: Vec<Point> = stream.points.clone();
    if opts.shuffle {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        rng.set_stream(rep as u64);
        order.shuffle(&mut rng);
    }
    let n = order.len();
    let every = opts.checkpoint_every.filter(|&e| e > 0);
    let mut archive = backend.build();
    let mut counter = ComparisonCounter::new();
    let mut per_insert = trace.then(|| Vec::with_capacity(n));
    let mut checkpoints = Vec::new();

    let start = Instant::now();
    for (i, y) in order.into_iter().enumerate() {
        let before = counter.count();
        archive.update(y, &mut counter)?;
        if let Some(t) = per_insert.as_mut() {
            t.push((counter.count() - before) as u32);
        }
        if every.is_some_and(|e| (i + 1) % e == 0) {
            checkpoints.push(Checkpoint {
                processed: i + 1,
                elapsed_ns: start.elapsed().as_nanos() as u64,
            });
        }
    }
    let wall_time_ns = start.elapsed().as_nanos() as u64;
    if every.is_some() && checkpoints.last().is_none_or(|c| c.processed != n) {
        checkpoints.push(Checkpoint {
            processed: n,
            elapsed_ns: wall_time_ns,
        });
    }

    let spec = stream.spec.as_ref();
    Ok(RunMetrics {
        backend: backend.id(),
        shape: spec.map(|s| s.shape.to_string()),
        p: stream.p,
        n,
        epsilon: spec.map(|s| s.epsilon),
        seed: opts.seed,
        repetition: rep,
        total_comparisons: counter.count(),
        wall_time_ns,
        final_archive_size: archive.len(),
        per_insert_comparisons: per_insert,
        checkpoints,
        contended,
        archive: opts.keep_archive.then(|| sorted(archive.points())),
    })
}

fn sorted(mut points: Vec<Point>) -> Vec<Point> {
    points.sort_unstable();
    points
}

/// Whether the run's final archive equals `oracle` (sorted) as a set.
/// Runs without a kept archive fall back to comparing sizes.
pub fn matches_oracle(metrics: &RunMetrics, oracle: &[Point]) -> bool {
    match &metrics.archive {
        Some(a) => a == oracle,
        None => metrics.final_archive_size == oracle.len(),
    }
}

/// The non-dominated subset of `points`, sorted, for checking runs.
pub fn oracle_set(points: &[Point]) -> Vec<Point> {
    nondominated_subset(points)
}

pub fn write_csv(metrics: &[RunMetrics], path: impl AsRef<Path>) -> Result<(), IoError> {
    let path = path.as_ref();
    let file = fs::File::create(path).map_err(|e| IoError::io(path, e))?;
    write_csv_to(metrics, file)
}

pub fn write_csv_to<W: Write>(metrics: &[RunMetrics], w: W) -> Result<(), IoError> {
    let mut out = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(w);
    out.write_record(CSV_HEADER)?;
    for m in metrics {
        out.write_record([
            m.backend.to_string(),
            m.shape.clone().unwrap_or_else(|| "file".into()),
            m.p.to_string(),
            m.n.to_string(),
            m.epsilon.map(|e| e.to_string()).unwrap_or_default(),
            m.seed.to_string(),
            m.repetition.to_string(),
            m.total_comparisons.to_string(),
            m.mean_comparisons_per_insert().to_string(),
            m.wall_time_ns.to_string(),
            m.final_archive_size.to_string(),
        ])?;
    }
    out.flush().map_err(csv::Error::from)?;
    Ok(())
}
