//! `ndtree` command-line driver.
//!
//! Exit codes: 0 on success, 1 when `--verify` or `audit` finds a problem,
//! 2 for bad flags, unsupported configurations and unreadable files.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ndtree::baselines::LinearListArchive;
use ndtree::bench::{self, RunMetrics, RunOptions};
use ndtree::datasets::{self, GeneratorSpec, PointStream, Shape};
use ndtree::nds::{self, FrontAssignment};
use ndtree::{
    BackendKind, ComparisonCounter, NdTree, NdTreeConfig, ParetoArchive, Point, Uncounted,
};

#[derive(Parser)]
#[command(
    name = "ndtree",
    version,
    about = "Pareto archive maintenance with ND-Tree and baselines"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write an artificial benchmark stream.
    Generate(GenerateArgs),
    /// Replay a stream through one or all archive backends.
    Bench(BenchArgs),
    /// Non-dominated sorting of a population file.
    Sort(SortArgs),
    /// Stream a file into an ND-Tree, checking its invariants as it grows.
    Audit(AuditArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ShapeArg {
    Convex,
    Nonconvex,
    Clustered,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    shape: ShapeArg,
    /// Number of points; clustered sets default to clusters * cluster size.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: usize,
    #[arg(long, default_value_t = GeneratorSpec::DEFAULT_V_MAX)]
    vmax: u32,
    #[arg(long)]
    epsilon: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = GeneratorSpec::DEFAULT_CLUSTERS)]
    clusters: usize,
    #[arg(long, default_value_t = GeneratorSpec::DEFAULT_CLUSTER_SIZE)]
    cluster_size: usize,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum BackendArg {
    Ndtree,
    List,
    Sortedlist,
    Quadtree,
    Mfront2,
    All,
}

#[derive(Args, Clone, Copy)]
struct TreeArgs {
    #[arg(long, default_value_t = NdTreeConfig::DEFAULT.max_leaf_size)]
    max_leaf_size: usize,
    /// Children per internal node [default: p + 1].
    #[arg(long)]
    children: Option<usize>,
}

impl TreeArgs {
    fn config(&self) -> NdTreeConfig {
        NdTreeConfig::new(self.max_leaf_size, self.children)
    }
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = BackendArg::All)]
    backend: BackendArg,
    #[arg(long, default_value_t = 10)]
    reps: usize,
    /// Replay each repetition in a different random order.
    #[arg(long)]
    shuffle: bool,
    /// Check every final archive against the linear-list result.
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    csv: Option<PathBuf>,
    #[command(flatten)]
    tree: TreeArgs,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run repetitions concurrently; wall times become contended.
    #[arg(long)]
    parallel: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SortBackend {
    Ndtree,
    Mfront2,
    Bruteforce,
}

#[derive(Args)]
struct SortArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = SortBackend::Ndtree)]
    backend: SortBackend,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct AuditArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[command(flatten)]
    tree: TreeArgs,
    /// Audit after every K updates.
    #[arg(long, default_value_t = 100)]
    check_every: usize,
}

/// A failed command: usage problems exit 2, failed checks exit 1.
enum Failure {
    Usage(String),
    Check(String),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(a) => generate(a),
        Command::Bench(a) => bench(a),
        Command::Sort(a) => sort(a),
        Command::Audit(a) => audit(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("ndtree: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("ndtree: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &PathBuf) -> Result<PointStream, Failure> {
    datasets::read_stream(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn generate(a: GenerateArgs) -> Result<(), Failure> {
    let shape = match a.shape {
        ShapeArg::Convex => Shape::Convex,
        ShapeArg::Nonconvex => Shape::NonConvex,
        ShapeArg::Clustered => Shape::Clustered,
    };
    let n = match (a.n, shape) {
        (Some(n), _) => n,
        (None, Shape::Clustered) => a.clusters * a.cluster_size,
        (None, _) => return Err(Failure::Usage("--n is required for this shape".into())),
    };
    let spec = GeneratorSpec {
        n,
        p: a.p,
        v_max: a.vmax,
        epsilon: a.epsilon,
        shape,
        seed: a.seed,
        clusters: a.clusters,
        cluster_size: a.cluster_size,
    };
    let stream = datasets::generate(&spec)?;
    datasets::write_stream(&stream, &a.out)?;

    let mut tree = NdTree::default();
    for y in &stream.points {
        tree.update(y.clone(), &mut Uncounted)?;
    }
    println!(
        "wrote {} {}-objective points to {}; non-dominated: {}",
        stream.len(),
        stream.p,
        a.out.display(),
        tree.len()
    );
    Ok(())
}

fn selected_backends(
    arg: BackendArg,
    tree: NdTreeConfig,
    p: usize,
) -> Result<Vec<BackendKind>, Failure> {
    let one = |b: BackendKind| -> Result<Vec<BackendKind>, Failure> {
        b.check_supports(p)?;
        Ok(vec![b])
    };
    match arg {
        BackendArg::Ndtree => one(BackendKind::NdTree(tree)),
        BackendArg::List => one(BackendKind::LinearList),
        BackendArg::Sortedlist => one(BackendKind::SortedList),
        BackendArg::Quadtree => one(BackendKind::QuadTree),
        BackendArg::Mfront2 => one(BackendKind::MFront2),
        BackendArg::All => {
            let mut all = Vec::new();
            for b in BackendKind::ALL {
                let b = match b {
                    BackendKind::NdTree(_) => BackendKind::NdTree(tree),
                    other => other,
                };
                if b.supports(p) {
                    b.check_supports(p)?;
                    all.push(b);
                } else {
                    eprintln!("skipping {b}: needs 2 objectives, stream has {p}");
                }
            }
            Ok(all)
        }
    }
}

fn linear_list_front(points: &[Point]) -> Result<Vec<Point>, Failure> {
    let mut list = LinearListArchive::new();
    for y in points {
        list.update(y.clone(), &mut Uncounted)?;
    }
    let mut front = list.points();
    front.sort_unstable();
    Ok(front)
}

fn bench(a: BenchArgs) -> Result<(), Failure> {
    if a.reps == 0 {
        return Err(Failure::Usage("--reps must be at least 1".into()));
    }
    let stream = read(&a.input)?;
    let backends = selected_backends(a.backend, a.tree.config(), stream.p)?;
    let opts = RunOptions {
        repetitions: a.reps,
        shuffle: a.shuffle,
        seed: a.seed,
        trace: Some(false),
        checkpoint_every: None,
        parallel: a.parallel,
        keep_archive: a.verify,
    };
    let oracle = if a.verify {
        Some(linear_list_front(&stream.points)?)
    } else {
        None
    };

    let mut all: Vec<RunMetrics> = Vec::new();
    let mut mismatches = Vec::new();
    for b in backends {
        let runs = bench::run_stream(b, &stream, &opts)?;
        let reps = runs.len() as f64;
        let mean_cmp = runs
            .iter()
            .map(|m| m.mean_comparisons_per_insert())
            .sum::<f64>()
            / reps;
        let mean_ms = runs.iter().map(|m| m.wall_time_ns as f64).sum::<f64>() / reps / 1e6;
        let size = runs[0].final_archive_size;
        println!(
            "{:<10} comparisons/insert {:>12.2}  time {:>10.3} ms{}  archive {}",
            b.id(),
            mean_cmp,
            mean_ms,
            if runs[0].contended {
                " (contended)"
            } else {
                ""
            },
            size
        );
        if let Some(oracle) = &oracle {
            for m in runs.iter().filter(|m| !bench::matches_oracle(m, oracle)) {
                mismatches.push(format!("{} repetition {}", b.id(), m.repetition));
            }
        }
        all.extend(runs);
    }
    if let Some(path) = &a.csv {
        bench::write_csv(&all, path)?;
    }
    if !mismatches.is_empty() {
        return Err(Failure::Check(format!(
            "archive differs from the linear list: {}",
            mismatches.join(", ")
        )));
    }
    if oracle.is_some() {
        println!("verified: every archive matches the linear list");
    }
    Ok(())
}

fn sort(a: SortArgs) -> Result<(), Failure> {
    let stream = read(&a.input)?;
    let points = &stream.points;
    let (fronts, comparisons): (FrontAssignment, u64) = match a.backend {
        SortBackend::Bruteforce => {
            let n = points.len() as u64;
            (nds::brute_force_sort(points)?, n * n)
        }
        SortBackend::Ndtree | SortBackend::Mfront2 => {
            let kind = match a.backend {
                SortBackend::Ndtree => BackendKind::NdTree(NdTreeConfig::DEFAULT),
                _ => BackendKind::MFront2,
            };
            let mut counter = ComparisonCounter::new();
            (nds::nd_sort(points, kind, &mut counter)?, counter.count())
        }
    };
    fronts.write(&a.out)?;
    println!("fronts: {}", fronts.num_fronts());
    println!("comparisons: {comparisons}");
    Ok(())
}

fn audit(a: AuditArgs) -> Result<(), Failure> {
    if a.check_every == 0 {
        return Err(Failure::Usage("--check-every must be at least 1".into()));
    }
    let stream = read(&a.input)?;
    let mut tree = NdTree::with_dim(a.tree.config(), stream.p)?;
    let mut checks = 0;
    for (i, y) in stream.points.iter().enumerate() {
        let out = tree.update(y.clone(), &mut Uncounted)?;
        if (i + 1) % a.check_every == 0 {
            checks += 1;
            let violations = if out.accepted {
                tree.audit_newcomer(y)
            } else {
                tree.audit_structure()
            };
            if !violations.is_empty() {
                let list: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
                return Err(Failure::Check(format!(
                    "after update {}: {}",
                    i + 1,
                    list.join("; ")
                )));
            }
        }
    }
    let violations = tree.audit();
    if !violations.is_empty() {
        let list: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        return Err(Failure::Check(format!("final tree: {}", list.join("; "))));
    }
    println!(
        "ok: {} points, {} audits, archive {}, depth {}, nodes {}",
        stream.len(),
        checks + 1,
        tree.len(),
        tree.depth(),
        tree.node_count()
    );
    Ok(())
}
