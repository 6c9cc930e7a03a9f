//! The dynamic non-dominance contract shared by every backend.

use std::fmt;
use std::str::FromStr;

use crate::baselines::{LinearListArchive, MFrontArchive, QuadTreeArchive, SortedListArchive};
use crate::dominance::{Comparator, Point};
use crate::error::ArchiveError;
use crate::ndtree::{NdTree, NdTreeConfig};

/// What happened to a candidate offered to an archive.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct UpdateOutcome {
    pub accepted: bool,
    /// Archived points removed because the candidate dominates them.
    pub evicted: Vec<Point>,
}

impl UpdateOutcome {
    pub fn rejected() -> Self {
        UpdateOutcome::default()
    }

    pub fn accepted(evicted: Vec<Point>) -> Self {
        UpdateOutcome {
            accepted: true,
            evicted,
        }
    }
}

/// An online Pareto archive.
///
/// After `update(y)` the archive holds exactly the non-dominated subset of
/// its previous contents plus `y`. A candidate covered by an archived point
/// (including an equal one) is rejected and nothing changes.
pub trait ParetoArchive {
    fn update<C: Comparator>(
        &mut self,
        y: Point,
        cmp: &mut C,
    ) -> Result<UpdateOutcome, ArchiveError>;

    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Number of objectives, fixed by the first accepted point.
    fn dim(&self) -> Option<usize>;

    /// Snapshot of the archived points, in no particular order.
    fn points(&self) -> Vec<Point>;
}

pub(crate) fn check_dim(expected: Option<usize>, y: &Point) -> Result<(), ArchiveError> {
    match expected {
        Some(expected) if expected != y.dim() => Err(ArchiveError::DimensionMismatch {
            expected,
            found: y.dim(),
        }),
        _ => Ok(()),
    }
}

/// Archive backends selectable at run time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BackendKind {
    NdTree(NdTreeConfig),
    LinearList,
    SortedList,
    QuadTree,
    MFront2,
}

impl BackendKind {
    /// Every backend with default parameters, in reporting order.
    pub const ALL: [BackendKind; 5] = [
        BackendKind::NdTree(NdTreeConfig::DEFAULT),
        BackendKind::LinearList,
        BackendKind::SortedList,
        BackendKind::QuadTree,
        BackendKind::MFront2,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            BackendKind::NdTree(_) => "ndtree",
            BackendKind::LinearList => "list",
            BackendKind::SortedList => "sortedlist",
            BackendKind::QuadTree => "quadtree",
            BackendKind::MFront2 => "mfront2",
        }
    }

    /// Whether this backend can hold `p`-objective points.
    pub fn supports(&self, p: usize) -> bool {
        match self {
            BackendKind::SortedList => p == 2,
            _ => p >= 2,
        }
    }

    pub fn check_supports(&self, p: usize) -> Result<(), ArchiveError> {
        if !self.supports(p) {
            return Err(ArchiveError::UnsupportedDimension {
                backend: self.id(),
                p,
            });
        }
        if let BackendKind::NdTree(config) = self {
            config.resolve(p)?;
        }
        Ok(())
    }

    pub fn build(&self) -> AnyArchive {
        match *self {
            BackendKind::NdTree(config) => AnyArchive::NdTree(NdTree::new(config)),
            BackendKind::LinearList => AnyArchive::LinearList(LinearListArchive::new()),
            BackendKind::SortedList => AnyArchive::SortedList(SortedListArchive::new()),
            BackendKind::QuadTree => AnyArchive::QuadTree(QuadTreeArchive::new()),
            BackendKind::MFront2 => AnyArchive::MFront2(MFrontArchive::new()),
        }
    }
}

impl fmt::Display for BackendKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for BackendKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ndtree" => Ok(BackendKind::NdTree(NdTreeConfig::DEFAULT)),
            "list" => Ok(BackendKind::LinearList),
            "sortedlist" => Ok(BackendKind::SortedList),
            "quadtree" => Ok(BackendKind::QuadTree),
            "mfront2" => Ok(BackendKind::MFront2),
            other => Err(format!("unknown backend `{other}`")),
        }
    }
}

/// Static dispatch over the concrete backends.
#[derive(Debug, Clone)]
pub enum AnyArchive {
    NdTree(NdTree),
    LinearList(LinearListArchive),
    SortedList(SortedListArchive),
    QuadTree(QuadTreeArchive),
    MFront2(MFrontArchive),
}

macro_rules! dispatch {
    ($self:ident, $a:ident => $e:expr) => {
        match $self {
            AnyArchive::NdTree($a) => $e,
            AnyArchive::LinearList($a) => $e,
            AnyArchive::SortedList($a) => $e,
            AnyArchive::QuadTree($a) => $e,
            AnyArchive::MFront2($a) => $e,
        }
    };
}

impl ParetoArchive for AnyArchive {
    fn update<C: Comparator>(
        &mut self,
        y: Point,
        cmp: &mut C,
    ) -> Result<UpdateOutcome, ArchiveError> {
        dispatch!(self, a => a.update(y, cmp))
    }

    fn len(&self) -> usize {
        dispatch!(self, a => a.len())
    }

    fn dim(&self) -> Option<usize> {
        dispatch!(self, a => a.dim())
    }

    fn points(&self) -> Vec<Point> {
        dispatch!(self, a => a.points())
    }
}
