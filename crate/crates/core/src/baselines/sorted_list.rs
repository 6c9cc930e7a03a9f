use crate::archive::{ParetoArchive, UpdateOutcome};
use crate::dominance::{Comparator, Point};
use crate::error::ArchiveError;

/// Biobjective archive sorted ascending on the first objective, which makes
/// it sorted descending on the second.
#[derive(Debug, Clone, Default)]
pub struct SortedListArchive {
    points: Vec<Point>,
}

impl SortedListArchive {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn as_slice(&self) -> &[Point] {
        &self.points
    }

    /// Strictly increasing first objective and strictly decreasing second.
    pub fn is_bisorted(&self) -> bool {
        self.points
            .windows(2)
            .all(|w| w[0][0] < w[1][0] && w[0][1] > w[1][1])
    }
}

impl ParetoArchive for SortedListArchive {
    fn update<C: Comparator>(
        &mut self,
        y: Point,
        cmp: &mut C,
    ) -> Result<UpdateOutcome, ArchiveError> {
        if y.dim() != 2 {
            return Err(ArchiveError::UnsupportedDimension {
                backend: "sortedlist",
                p: y.dim(),
            });
        }
        let i = self.points.partition_point(|z| z[0] < y[0]);

        // A point sharing y's first objective either covers y or is
        // dominated by it; the sweep below handles the latter.
        if let Some(same) = self.points.get(i).filter(|z| z[0] == y[0]) {
            if cmp.covers(same, &y) {
                return Ok(UpdateOutcome::rejected());
            }
        }
        if i > 0 && cmp.covers(&self.points[i - 1], &y) {
            return Ok(UpdateOutcome::rejected());
        }

        let mut end = i;
        while end < self.points.len() && cmp.dominates(&y, &self.points[end]) {
            end += 1;
        }
        let evicted: Vec<Point> = self.points.splice(i..end, [y]).collect();
        Ok(UpdateOutcome::accepted(evicted))
    }

    fn len(&self) -> usize {
        self.points.len()
    }

    fn dim(&self) -> Option<usize> {
        self.points.first().map(|_| 2)
    }

    fn points(&self) -> Vec<Point> {
        self.points.clone()
    }
}
