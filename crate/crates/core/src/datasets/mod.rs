//! Artificial benchmark streams and their text file format.
//!
//! Convex sets are integer points of `{0..=V}^p` drawn uniformly and kept
//! only when they fall in the spherical shell
//! `(1-ε)V² <= Σ (V - y_k)² <= V²` around `(V,...,V)`. Smaller ε means a
//! thinner shell and a larger share of non-dominated points. Non-convex
//! sets negate a convex one; clustered sets pick tight groups out of a
//! convex pool twice the requested size.
//!
//! Sampling is split into fixed-size chunks, each with its own ChaCha8
//! stream derived from the seed, so the output is identical whether chunks
//! run in parallel or not.

mod stream_file;

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dominance::Point;
use crate::error::ArchiveError;
use crate::par;

pub use stream_file::{parse_stream, read_stream, write_stream, write_stream_to};

/// Accepted points produced per RNG stream.
const CHUNK: usize = 1024;

/// RNG stream reserved for cluster picks, far from any chunk index.
const CLUSTER_STREAM: u64 = u64::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    Convex,
    NonConvex,
    Clustered,
}

impl Shape {
    pub fn id(&self) -> &'static str {
        match self {
            Shape::Convex => "convex",
            Shape::NonConvex => "nonconvex",
            Shape::Clustered => "clustered",
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Shape {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "convex" => Ok(Shape::Convex),
            "nonconvex" | "non-convex" => Ok(Shape::NonConvex),
            "clustered" => Ok(Shape::Clustered),
            other => Err(format!("unknown shape `{other}`")),
        }
    }
}

/// The five quality levels, q1 (thickest shell) to q5 (thinnest).
pub const QUALITY_LEVELS: [f64; 5] = [0.5, 0.25, 0.1, 0.05, 0.01];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorSpec {
    pub n: usize,
    pub p: usize,
    pub v_max: u32,
    pub epsilon: f64,
    pub shape: Shape,
    pub seed: u64,
    pub clusters: usize,
    pub cluster_size: usize,
}

impl GeneratorSpec {
    pub const DEFAULT_V_MAX: u32 = 10_000;
    pub const DEFAULT_CLUSTERS: usize = 100;
    pub const DEFAULT_CLUSTER_SIZE: usize = 1000;

    pub fn new(shape: Shape, n: usize, p: usize, epsilon: f64, seed: u64) -> Self {
        GeneratorSpec {
            n,
            p,
            v_max: Self::DEFAULT_V_MAX,
            epsilon,
            shape,
            seed,
            clusters: Self::DEFAULT_CLUSTERS,
            cluster_size: Self::DEFAULT_CLUSTER_SIZE,
        }
    }

    pub fn convex(n: usize, p: usize, epsilon: f64, seed: u64) -> Self {
        Self::new(Shape::Convex, n, p, epsilon, seed)
    }

    pub fn with_v_max(mut self, v_max: u32) -> Self {
        self.v_max = v_max;
        self
    }

    /// Clustered spec with `n = clusters * cluster_size`.
    pub fn clustered(
        clusters: usize,
        cluster_size: usize,
        p: usize,
        epsilon: f64,
        seed: u64,
    ) -> Self {
        GeneratorSpec {
            clusters,
            cluster_size,
            ..Self::new(Shape::Clustered, clusters * cluster_size, p, epsilon, seed)
        }
    }

    pub fn validate(&self) -> Result<(), ArchiveError> {
        let bad = |msg: String| Err(ArchiveError::InvalidConfig(msg));
        if self.p < 2 {
            return Err(ArchiveError::TooFewObjectives(self.p));
        }
        if self.v_max == 0 {
            return bad("v_max must be positive".into());
        }
        if !(self.epsilon > 0.0 && self.epsilon <= 1.0) {
            return bad(format!("epsilon must lie in (0, 1], got {}", self.epsilon));
        }
        if self.shape == Shape::Clustered {
            if self.clusters == 0 || self.cluster_size == 0 {
                return bad("clusters and cluster size must be positive".into());
            }
            if self.clusters.checked_mul(self.cluster_size) != Some(self.n) {
                return bad(format!(
                    "clustered sets need n = clusters * cluster_size, got {} != {} * {}",
                    self.n, self.clusters, self.cluster_size
                ));
            }
        }
        Ok(())
    }
}

/// A point sequence, with the spec that produced it when known.
#[derive(Debug, Clone, PartialEq)]
pub struct PointStream {
    pub spec: Option<GeneratorSpec>,
    pub p: usize,
    pub points: Vec<Point>,
}

impl PointStream {
    pub fn new(p: usize, points: Vec<Point>) -> Self {
        PointStream {
            spec: None,
            p,
            points,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Shell test for a convex candidate.
pub fn in_shell(y: &[f64], v_max: u32, epsilon: f64) -> bool {
    let v = v_max as f64;
    let s: f64 = y.iter().map(|&c| (v - c) * (v - c)).sum();
    (1.0 - epsilon) * v * v <= s && s <= v * v
}

/// Generates the stream described by `spec`, using the thread pool when
/// available.
pub fn generate(spec: &GeneratorSpec) -> Result<PointStream, ArchiveError> {
    generate_with(spec, true)
}

/// As [`generate`], choosing explicitly whether chunks run in parallel. The
/// output does not depend on the choice.
pub fn generate_with(spec: &GeneratorSpec, parallel: bool) -> Result<PointStream, ArchiveError> {
    spec.validate()?;
    let points = match spec.shape {
        Shape::Convex => convex_points(spec.n, spec, parallel),
        Shape::NonConvex => convex_points(spec.n, spec, parallel)
            .iter()
            .map(Point::negated)
            .collect(),
        Shape::Clustered => clustered_points(spec, parallel),
    };
    Ok(PointStream {
        spec: Some(*spec),
        p: spec.p,
        points,
    })
}

pub fn gen_convex(spec: &GeneratorSpec) -> Result<PointStream, ArchiveError> {
    generate(&GeneratorSpec {
        shape: Shape::Convex,
        ..*spec
    })
}

pub fn gen_nonconvex(spec: &GeneratorSpec) -> Result<PointStream, ArchiveError> {
    generate(&GeneratorSpec {
        shape: Shape::NonConvex,
        ..*spec
    })
}

pub fn gen_clustered(spec: &GeneratorSpec) -> Result<PointStream, ArchiveError> {
    generate(&GeneratorSpec {
        shape: Shape::Clustered,
        ..*spec
    })
}

/// `n` points uniform on `{0..=v_max}^p` with no shell constraint.
pub fn uniform_cube(n: usize, p: usize, v_max: u32, seed: u64) -> Vec<Point> {
    sample_chunked(n, p, seed, true, |rng, buf| {
        buf.iter_mut()
            .for_each(|c| *c = rng.random_range(0..=v_max) as f64);
        true
    })
}

fn convex_points(n: usize, spec: &GeneratorSpec, parallel: bool) -> Vec<Point> {
    let (v_max, epsilon) = (spec.v_max, spec.epsilon);
    sample_chunked(n, spec.p, spec.seed, parallel, |rng, buf| {
        buf.iter_mut()
            .for_each(|c| *c = rng.random_range(0..=v_max) as f64);
        in_shell(buf, v_max, epsilon)
    })
}

/// Rejection sampling split into chunks of [`CHUNK`] accepted points; chunk
/// `i` draws from stream `i` of the seeded generator. `draw` fills a
/// candidate and says whether to keep it.
fn sample_chunked<F>(n: usize, p: usize, seed: u64, parallel: bool, draw: F) -> Vec<Point>
where
    F: Fn(&mut ChaCha8Rng, &mut [f64]) -> bool + Sync + Send,
{
    let chunks = n.div_ceil(CHUNK);
    let parts = par::map_range(chunks, parallel, |i| {
        let want = CHUNK.min(n - i * CHUNK);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i as u64);
        let mut buf = vec![0.0; p];
        let mut out = Vec::with_capacity(want);
        while out.len() < want {
            if draw(&mut rng, &mut buf) {
                out.push(Point::new(buf.clone()).expect("sampled coordinates are finite"));
            }
        }
        out
    });
    parts.into_iter().flatten().collect()
}

fn clustered_points(spec: &GeneratorSpec, parallel: bool) -> Vec<Point> {
    let pool = convex_points(2 * spec.n, spec, parallel);
    let mut remaining: Vec<u32> = (0..pool.len() as u32).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    rng.set_stream(CLUSTER_STREAM);
    let mut out = Vec::with_capacity(spec.n);
    for _ in 0..spec.clusters {
        let centre = remaining[rng.random_range(0..remaining.len())];
        let c = &pool[centre as usize];
        let mut near: Vec<(f64, u32)> = par::map_slice(&remaining, parallel, |&i| {
            let d: f64 = c
                .iter()
                .zip(pool[i as usize].iter())
                .map(|(a, b)| (a - b) * (a - b))
                .sum();
            (d, i)
        });
        // The centre sits at distance zero with its own index; any exact
        // duplicate with a lower index would come first, so pull it out
        // explicitly.
        near.retain(|&(_, i)| i != centre);
        let by_key = |a: &(f64, u32), b: &(f64, u32)| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1));
        let take = spec.cluster_size - 1;
        if take < near.len() {
            near.select_nth_unstable_by(take, by_key);
            near.truncate(take);
        }
        near.sort_unstable_by(by_key);

        out.push(c.clone());
        out.extend(near.iter().map(|&(_, i)| pool[i as usize].clone()));
        let mut taken: Vec<u32> = near.iter().map(|&(_, i)| i).collect();
        taken.push(centre);
        taken.sort_unstable();
        remaining.retain(|i| taken.binary_search(i).is_err());
    }
    out
}
