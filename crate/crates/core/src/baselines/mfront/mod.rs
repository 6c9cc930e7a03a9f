//! M-Front-II: per-objective sorted indexes plus a k-d tree reference
//! finder.
//!
//! Given a reference point `r` from the archive close to the candidate `y`,
//! any archived point covering `y` has some objective `k` with
//! `r_k <= z_k <= y_k`, and any point dominated by `y` has some objective
//! with `y_k <= z_k <= r_k`. The update walks those intervals over the
//! sorted indexes, comparing points as it meets them, objectives with
//! `r_k <= y_k` first so covered candidates are rejected early. A point met
//! on several objectives is compared once.

mod kdtree;

use std::cmp::Ordering;

use kdtree::KdTree;

use crate::archive::{check_dim, ParetoArchive, UpdateOutcome};
use crate::dominance::{Comparator, DominanceOutcome, Point};
use crate::error::ArchiveError;

type SlotId = u32;

#[derive(Debug, Clone, Default)]
pub struct MFrontArchive {
    slots: Vec<Option<Point>>,
    free: Vec<SlotId>,
    /// One index per objective, ordered by `(coordinate, slot id)`.
    indexes: Vec<Vec<SlotId>>,
    kd: KdTree,
    visited: Vec<u32>,
    epoch: u32,
    len: usize,
    dim: Option<usize>,
}

impl MFrontArchive {
    pub fn new() -> Self {
        Self::default()
    }

    fn point(&self, id: SlotId) -> &Point {
        self.slots[id as usize].as_ref().expect("live slot")
    }

    fn key_cmp(&self, k: usize, a: SlotId, b: (f64, SlotId)) -> Ordering {
        self.point(a)[k].total_cmp(&b.0).then(a.cmp(&b.1))
    }

    /// The archived point the k-d tree offers as reference for `y`.
    pub fn approx_nearest(&self, y: &[f64]) -> Option<&Point> {
        let slots = &self.slots;
        self.kd
            .approx_nearest(y, |id| slots[id as usize].as_deref().expect("live slot"))
            .map(|id| self.point(id))
    }

    fn add(&mut self, y: Point) {
        let id = match self.free.pop() {
            Some(id) => {
                self.slots[id as usize] = Some(y);
                id
            }
            None => {
                self.slots.push(Some(y));
                self.visited.push(0);
                (self.slots.len() - 1) as SlotId
            }
        };
        for k in 0..self.indexes.len() {
            let key = (self.point(id)[k], id);
            let pos =
                self.indexes[k].partition_point(|&o| self.key_cmp(k, o, key) == Ordering::Less);
            self.indexes[k].insert(pos, id);
        }
        let slots = &self.slots;
        let y = slots[id as usize].as_deref().unwrap();
        self.kd
            .insert(id, y, |o| slots[o as usize].as_deref().expect("live slot"));
        self.len += 1;
    }

    fn remove(&mut self, id: SlotId) -> (Point, bool) {
        for k in 0..self.indexes.len() {
            let key = (self.point(id)[k], id);
            let pos = self.indexes[k]
                .binary_search_by(|&o| self.key_cmp(k, o, key))
                .expect("indexed slot");
            self.indexes[k].remove(pos);
        }
        let rebuild = self.kd.remove(id);
        self.free.push(id);
        self.len -= 1;
        (self.slots[id as usize].take().unwrap(), rebuild)
    }

    fn rebuild_kd(&mut self) {
        self.kd.clear();
        let slots = &self.slots;
        for (id, slot) in slots.iter().enumerate() {
            if let Some(p) = slot {
                self.kd.insert(id as SlotId, p, |o| {
                    slots[o as usize].as_deref().expect("live slot")
                });
            }
        }
    }

    fn next_epoch(&mut self) -> u32 {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.visited.iter_mut().for_each(|v| *v = 0);
            self.epoch = 1;
        }
        self.epoch
    }

    /// Each index is a permutation of the live slots sorted by its objective,
    /// and the k-d tree holds exactly the live slots.
    pub fn check_indexes(&self) -> bool {
        let mut live: Vec<SlotId> = (0..self.slots.len() as SlotId)
            .filter(|&id| self.slots[id as usize].is_some())
            .collect();
        live.sort_unstable();
        self.indexes.iter().enumerate().all(|(k, index)| {
            let sorted = index
                .windows(2)
                .all(|w| self.key_cmp(k, w[0], (self.point(w[1])[k], w[1])) == Ordering::Less);
            let mut ids = index.clone();
            ids.sort_unstable();
            sorted && ids == live
        }) && self.kd.live_leaves() == live.len()
    }
}

impl ParetoArchive for MFrontArchive {
    fn update<C: Comparator>(
        &mut self,
        y: Point,
        cmp: &mut C,
    ) -> Result<UpdateOutcome, ArchiveError> {
        check_dim(self.dim, &y)?;
        let p = y.dim();
        if self.dim.is_none() {
            self.dim = Some(p);
            self.indexes = vec![Vec::new(); p];
        }
        if self.len == 0 {
            self.add(y);
            return Ok(UpdateOutcome::accepted(Vec::new()));
        }

        let reference = self.approx_nearest(&y).expect("non-empty archive").clone();
        let (upper, lower): (Vec<usize>, Vec<usize>) = (0..p).partition(|&k| reference[k] <= y[k]);
        let epoch = self.next_epoch();
        let mut dominated = Vec::new();

        for k in upper.into_iter().chain(lower) {
            let (lo, hi) = if reference[k] <= y[k] {
                (reference[k], y[k])
            } else {
                (y[k], reference[k])
            };
            let slots = &self.slots;
            let visited = &mut self.visited;
            let live = |id: SlotId| slots[id as usize].as_ref().expect("live slot");
            let index = &self.indexes[k];
            let start = index.partition_point(|&id| live(id)[k] < lo);
            for &id in &index[start..] {
                let z = live(id);
                if z[k] > hi {
                    break;
                }
                if visited[id as usize] == epoch {
                    continue;
                }
                visited[id as usize] = epoch;
                match cmp.compare(&y, z) {
                    DominanceOutcome::DominatedBy | DominanceOutcome::Equal => {
                        return Ok(UpdateOutcome::rejected());
                    }
                    DominanceOutcome::Dominates => dominated.push(id),
                    DominanceOutcome::Incomparable => {}
                }
            }
        }

        let mut rebuild = false;
        let evicted = dominated
            .into_iter()
            .map(|id| {
                let (z, r) = self.remove(id);
                rebuild |= r;
                z
            })
            .collect();
        if rebuild {
            self.rebuild_kd();
        }
        self.add(y);
        Ok(UpdateOutcome::accepted(evicted))
    }

    fn len(&self) -> usize {
        self.len
    }

    fn dim(&self) -> Option<usize> {
        self.dim
    }

    fn points(&self) -> Vec<Point> {
        self.slots.iter().flatten().cloned().collect()
    }
}
