use crate::archive::{check_dim, ParetoArchive, UpdateOutcome};
use crate::dominance::{Comparator, DominanceOutcome, Point};
use crate::error::ArchiveError;

/// Unordered list; every update scans until a covering point is found.
#[derive(Debug, Clone, Default)]
pub struct LinearListArchive {
    points: Vec<Point>,
}

impl LinearListArchive {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn as_slice(&self) -> &[Point] {
        &self.points
    }
}

impl ParetoArchive for LinearListArchive {
    fn update<C: Comparator>(
        &mut self,
        y: Point,
        cmp: &mut C,
    ) -> Result<UpdateOutcome, ArchiveError> {
        check_dim(self.dim(), &y)?;
        let mut dominated = Vec::new();
        for (i, z) in self.points.iter().enumerate() {
            match cmp.compare(&y, z) {
                DominanceOutcome::DominatedBy | DominanceOutcome::Equal => {
                    return Ok(UpdateOutcome::rejected());
                }
                DominanceOutcome::Dominates => dominated.push(i),
                DominanceOutcome::Incomparable => {}
            }
        }
        // Descending indices keep swap_remove targets valid.
        let evicted = dominated
            .into_iter()
            .rev()
            .map(|i| self.points.swap_remove(i))
            .collect();
        self.points.push(y);
        Ok(UpdateOutcome::accepted(evicted))
    }

    fn len(&self) -> usize {
        self.points.len()
    }

    fn dim(&self) -> Option<usize> {
        self.points.first().map(Point::dim)
    }

    fn points(&self) -> Vec<Point> {
        self.points.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dominance::ComparisonCounter;

    fn p(c: &[f64]) -> Point {
        Point::new(c.to_vec()).unwrap()
    }

    #[test]
    fn accepts_into_empty() {
        let mut a = LinearListArchive::new();
        assert!(
            a.update(p(&[1., 2.]), &mut ComparisonCounter::new())
                .unwrap()
                .accepted
        );
    }

    #[test]
    fn full_scan_for_non_dominated_candidate() {
        let mut a = LinearListArchive::new();
        let mut c = ComparisonCounter::new();
        for i in 0..7 {
            a.update(p(&[i as f64, 10.0 - i as f64]), &mut c).unwrap();
        }
        let mut fresh = ComparisonCounter::new();
        assert!(a.update(p(&[7.0, 2.5]), &mut fresh).unwrap().accepted);
        assert_eq!(fresh.count(), 7);
    }

    #[test]
    fn evicts_dominated_points() {
        let mut a = LinearListArchive::new();
        let mut c = ComparisonCounter::new();
        for z in [[1., 1., 1.], [0., 2., 2.], [2., 2., 0.]] {
            a.update(p(&z), &mut c).unwrap();
        }
        let mut out = a.update(p(&[1., 1., 0.]), &mut c).unwrap();
        out.evicted.sort();
        assert!(out.accepted);
        assert_eq!(out.evicted, vec![p(&[1., 1., 1.]), p(&[2., 2., 0.])]);
        let mut rest = a.points();
        rest.sort();
        assert_eq!(rest, vec![p(&[0., 2., 2.]), p(&[1., 1., 0.])]);
    }
}
