//! Non-dominated sorting.
//!
//! [`nd_sort`] peels a population front by front: all remaining points are
//! offered to a fresh archive, whatever survives is the next front.
//! [`brute_force_sort`] is the pairwise oracle it is checked against.

use std::collections::HashMap;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::archive::{BackendKind, ParetoArchive};
use crate::dominance::{compare, Comparator, DominanceOutcome, Point};
use crate::error::{ArchiveError, IoError};
use crate::par;

/// A partition of a population into ranked fronts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontAssignment {
    /// Input indices of each front, ascending within a front.
    pub fronts: Vec<Vec<usize>>,
    /// Front index of every input point.
    pub front_of: Vec<usize>,
}

impl FrontAssignment {
    fn from_fronts(fronts: Vec<Vec<usize>>, len: usize) -> Self {
        let mut front_of = vec![usize::MAX; len];
        for (f, members) in fronts.iter().enumerate() {
            for &i in members {
                front_of[i] = f;
            }
        }
        debug_assert!(front_of.iter().all(|&f| f != usize::MAX));
        FrontAssignment { fronts, front_of }
    }

    pub fn num_fronts(&self) -> usize {
        self.fronts.len()
    }

    /// Writes one `index front` line per input point.
    pub fn write(&self, path: impl AsRef<Path>) -> Result<(), IoError> {
        let path = path.as_ref();
        let file = fs::File::create(path).map_err(|e| IoError::io(path, e))?;
        let mut w = BufWriter::new(file);
        let result: std::io::Result<()> = (|| {
            for (i, f) in self.front_of.iter().enumerate() {
                writeln!(w, "{i} {f}")?;
            }
            w.flush()
        })();
        result.map_err(|e| IoError::io(path, e))
    }
}

fn check_population(points: &[Point]) -> Result<usize, ArchiveError> {
    let p = points.first().ok_or(ArchiveError::EmptyInput)?.dim();
    if let Some(y) = points.iter().find(|y| y.dim() != p) {
        return Err(ArchiveError::DimensionMismatch {
            expected: p,
            found: y.dim(),
        });
    }
    Ok(p)
}

/// Sorts `points` into fronts by repeatedly filling a fresh archive of kind
/// `backend`. Exact duplicates share the front of their first occurrence.
pub fn nd_sort<C: Comparator>(
    points: &[Point],
    backend: BackendKind,
    cmp: &mut C,
) -> Result<FrontAssignment, ArchiveError> {
    let p = check_population(points)?;
    backend.check_supports(p)?;

    let mut first_of: HashMap<&Point, usize> = HashMap::with_capacity(points.len());
    let mut copies: Vec<Vec<usize>> = vec![Vec::new(); points.len()];
    let mut remaining = Vec::new();
    for (i, y) in points.iter().enumerate() {
        match first_of.get(y) {
            Some(&rep) => copies[rep].push(i),
            None => {
                first_of.insert(y, i);
                remaining.push(i);
            }
        }
    }

    let mut fronts = Vec::new();
    while !remaining.is_empty() {
        let mut archive = backend.build();
        for &i in &remaining {
            archive.update(points[i].clone(), cmp)?;
        }
        let mut in_front = vec![false; points.len()];
        for y in archive.points() {
            in_front[first_of[&y]] = true;
        }
        let mut front = Vec::new();
        remaining.retain(|&i| {
            if in_front[i] {
                front.push(i);
                front.extend_from_slice(&copies[i]);
                false
            } else {
                true
            }
        });
        front.sort_unstable();
        fronts.push(front);
    }
    Ok(FrontAssignment::from_fronts(fronts, points.len()))
}

/// Pairwise oracle: counts the dominators of every point, then releases
/// fronts as those counts drop to zero.
pub fn brute_force_sort(points: &[Point]) -> Result<FrontAssignment, ArchiveError> {
    brute_force_sort_with(points, true)
}

/// As [`brute_force_sort`], choosing whether rows are computed in parallel.
pub fn brute_force_sort_with(
    points: &[Point],
    parallel: bool,
) -> Result<FrontAssignment, ArchiveError> {
    check_population(points)?;
    let n = points.len();
    let rows: Vec<(usize, Vec<u32>)> = par::map_range(n, parallel, |i| {
        let mut dominators = 0;
        let mut dominated = Vec::new();
        for (j, z) in points.iter().enumerate() {
            match compare(&points[i], z) {
                DominanceOutcome::Dominates => dominated.push(j as u32),
                DominanceOutcome::DominatedBy => dominators += 1,
                _ => {}
            }
        }
        (dominators, dominated)
    });

    let mut count: Vec<usize> = rows.iter().map(|r| r.0).collect();
    let mut current: Vec<usize> = (0..n).filter(|&i| count[i] == 0).collect();
    let mut fronts = Vec::new();
    while !current.is_empty() {
        let mut next = Vec::new();
        for &i in &current {
            for &j in &rows[i].1 {
                let j = j as usize;
                count[j] -= 1;
                if count[j] == 0 {
                    next.push(j);
                }
            }
        }
        current.sort_unstable();
        fronts.push(std::mem::replace(&mut current, next));
    }
    Ok(FrontAssignment::from_fronts(fronts, n))
}

/// The distinct non-dominated points of `points`, sorted, by pairwise
/// testing.
pub fn nondominated_subset(points: &[Point]) -> Vec<Point> {
    nondominated_subset_with(points, true)
}

pub fn nondominated_subset_with(points: &[Point], parallel: bool) -> Vec<Point> {
    let mut unique = points.to_vec();
    unique.sort_unstable();
    unique.dedup();
    let keep = par::map_slice(&unique, parallel, |y| {
        !unique
            .iter()
            .any(|z| compare(z, y) == DominanceOutcome::Dominates)
    });
    unique
        .into_iter()
        .zip(keep)
        .filter_map(|(y, k)| k.then_some(y))
        .collect()
}
