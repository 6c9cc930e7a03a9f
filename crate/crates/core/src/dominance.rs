//! Points in objective space and the Pareto dominance algebra.
//!
//! All objectives are minimized. Every archive reaches dominance through a
//! [`Comparator`], so the number of point comparisons an update performs can
//! be tallied by a [`ComparisonCounter`] owned by the caller.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Deref;

use crate::error::ArchiveError;

/// A vector of `p >= 2` finite objective values, all minimized.
///
/// Negative zero is stored as positive zero so that bitwise hashing agrees
/// with numeric equality.
#[derive(Clone, PartialEq)]
pub struct Point(Box<[f64]>);

impl Point {
    pub fn new(coords: impl Into<Vec<f64>>) -> Result<Self, ArchiveError> {
        let mut coords: Vec<f64> = coords.into();
        if coords.len() < 2 {
            return Err(ArchiveError::TooFewObjectives(coords.len()));
        }
        for (index, value) in coords.iter_mut().enumerate() {
            if !value.is_finite() {
                return Err(ArchiveError::NonFinite {
                    index,
                    value: *value,
                });
            }
            if *value == 0.0 {
                *value = 0.0;
            }
        }
        Ok(Point(coords.into_boxed_slice()))
    }

    /// Number of objectives.
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    /// Coordinate-wise negation; turns a maximization vector into a
    /// minimization one.
    pub fn negated(&self) -> Point {
        Point::new(self.0.iter().map(|v| -v).collect::<Vec<_>>())
            .expect("negation keeps a valid point valid")
    }
}

impl Deref for Point {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl AsRef<[f64]> for Point {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

impl TryFrom<Vec<f64>> for Point {
    type Error = ArchiveError;

    fn try_from(coords: Vec<f64>) -> Result<Self, Self::Error> {
        Point::new(coords)
    }
}

impl TryFrom<&[f64]> for Point {
    type Error = ArchiveError;

    fn try_from(coords: &[f64]) -> Result<Self, Self::Error> {
        Point::new(coords.to_vec())
    }
}

// Coordinates are finite and zero is normalized, so `==` is an equivalence.
impl Eq for Point {}

impl Hash for Point {
    fn hash<H: Hasher>(&self, state: &mut H) {
        for v in self.0.iter() {
            v.to_bits().hash(state);
        }
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order, used to canonicalize point sets.
impl Ord for Point {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            match a.total_cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// Result of comparing `u` against `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DominanceOutcome {
    /// `u` is no worse everywhere and strictly better somewhere.
    Dominates,
    /// `v` dominates `u`.
    DominatedBy,
    Equal,
    Incomparable,
}

impl DominanceOutcome {
    /// `u` covers `v`: dominates or equals.
    #[inline]
    pub fn covers(self) -> bool {
        matches!(self, DominanceOutcome::Dominates | DominanceOutcome::Equal)
    }

    /// `v` covers `u`.
    #[inline]
    pub fn is_covered(self) -> bool {
        matches!(
            self,
            DominanceOutcome::DominatedBy | DominanceOutcome::Equal
        )
    }

    pub fn reversed(self) -> Self {
        match self {
            DominanceOutcome::Dominates => DominanceOutcome::DominatedBy,
            DominanceOutcome::DominatedBy => DominanceOutcome::Dominates,
            other => other,
        }
    }
}

/// Single left-to-right pass over both coordinate vectors.
///
/// Panics when the dimensions differ; mixing dimensions is a programming
/// error, not a data condition.
#[inline]
pub fn compare(u: &[f64], v: &[f64]) -> DominanceOutcome {
    assert_eq!(u.len(), v.len(), "comparing points of different dimension");
    let mut better = false;
    let mut worse = false;
    for (a, b) in u.iter().zip(v) {
        if a < b {
            if worse {
                return DominanceOutcome::Incomparable;
            }
            better = true;
        } else if a > b {
            if better {
                return DominanceOutcome::Incomparable;
            }
            worse = true;
        }
    }
    match (better, worse) {
        (true, false) => DominanceOutcome::Dominates,
        (false, true) => DominanceOutcome::DominatedBy,
        _ => DominanceOutcome::Equal,
    }
}

/// The comparison context an archive performs all dominance tests through.
///
/// Each method call is one point comparison.
pub trait Comparator {
    fn compare(&mut self, u: &[f64], v: &[f64]) -> DominanceOutcome;

    fn covers(&mut self, u: &[f64], v: &[f64]) -> bool {
        self.compare(u, v).covers()
    }

    fn dominates(&mut self, u: &[f64], v: &[f64]) -> bool {
        self.compare(u, v) == DominanceOutcome::Dominates
    }
}

/// Tally of point-vs-point dominance evaluations for one run.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct ComparisonCounter {
    count: u64,
}

impl ComparisonCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&self) -> u64 {
        self.count
    }
}

impl Comparator for ComparisonCounter {
    #[inline]
    fn compare(&mut self, u: &[f64], v: &[f64]) -> DominanceOutcome {
        self.count += 1;
        compare(u, v)
    }
}

/// Comparator that does not count, for callers that only need answers.
#[derive(Debug, Default, Clone, Copy)]
pub struct Uncounted;

impl Comparator for Uncounted {
    #[inline]
    fn compare(&mut self, u: &[f64], v: &[f64]) -> DominanceOutcome {
        compare(u, v)
    }
}
