//! Quad-tree archive with one point per node.
//!
//! A child slot is addressed by the successorship mask of its points
//! relative to the node point: bit `k` is set iff `z_k >= x_k`. Among
//! mutually non-dominated points the all-zeros mask (strictly better
//! everywhere) and the all-ones mask (covered) never occur, so a node has at
//! most `2^p - 2` children.
//!
//! For a candidate with mask `a` at node `x`, a coverer of the candidate can
//! only sit under a child `b` with `b ⊆ a`, and a point the candidate
//! dominates only under a child with `a ⊆ b`. Removing a node re-inserts
//! every surviving point of its subtree.

use crate::archive::{check_dim, ParetoArchive, UpdateOutcome};
use crate::dominance::{Comparator, DominanceOutcome, Point};
use crate::error::ArchiveError;

type NodeId = usize;
/// A child slot: parent node and the mask it is filed under.
type Slot = Option<(NodeId, u32)>;

#[derive(Debug, Clone)]
struct QNode {
    point: Point,
    /// `(mask, child)` pairs sorted by mask.
    children: Vec<(u32, NodeId)>,
    dominated: bool,
}

#[derive(Debug, Clone, Default)]
pub struct QuadTreeArchive {
    nodes: Vec<QNode>,
    free: Vec<NodeId>,
    root: Option<NodeId>,
    len: usize,
    dim: Option<usize>,
}

/// Bit `k` set iff `y_k >= x_k`.
fn successorship(y: &[f64], x: &[f64]) -> u32 {
    y.iter().zip(x).enumerate().fold(
        0,
        |mask, (k, (a, b))| if a >= b { mask | (1 << k) } else { mask },
    )
}

impl QuadTreeArchive {
    pub fn new() -> Self {
        Self::default()
    }

    fn full_mask(&self) -> u32 {
        (1u32 << self.dim.unwrap_or(0)) - 1
    }

    fn alloc(&mut self, point: Point) -> NodeId {
        let node = QNode {
            point,
            children: Vec::new(),
            dominated: false,
        };
        match self.free.pop() {
            Some(id) => {
                self.nodes[id] = node;
                id
            }
            None => {
                self.nodes.push(node);
                self.nodes.len() - 1
            }
        }
    }

    /// Navigates by successorship and hangs `y` as a new leaf. `y` must be
    /// mutually non-dominated with every stored point.
    fn insert<C: Comparator>(&mut self, y: Point, cmp: &mut C) {
        let Some(mut id) = self.root else {
            self.root = Some(self.alloc(y));
            return;
        };
        loop {
            cmp.compare(&y, &self.nodes[id].point);
            let mask = successorship(&y, &self.nodes[id].point);
            debug_assert!(mask != 0 && mask != self.full_mask());
            let children = &self.nodes[id].children;
            match children.binary_search_by_key(&mask, |&(m, _)| m) {
                Ok(pos) => id = children[pos].1,
                Err(pos) => {
                    let child = self.alloc(y);
                    self.nodes[id].children.insert(pos, (mask, child));
                    return;
                }
            }
        }
    }

    /// Every point stored at `id` or below, skipping dominated nodes; frees
    /// the visited nodes.
    fn drain_subtree(&mut self, id: NodeId, survivors: &mut Vec<Point>, evicted: &mut Vec<Point>) {
        let mut stack = vec![id];
        while let Some(id) = stack.pop() {
            let children = std::mem::take(&mut self.nodes[id].children);
            // Children in reverse so the pre-order visits masks ascending.
            stack.extend(children.iter().rev().map(|&(_, c)| c));
            let point = self.nodes[id].point.clone();
            if self.nodes[id].dominated {
                evicted.push(point);
            } else {
                survivors.push(point);
            }
            self.nodes[id].dominated = false;
            self.free.push(id);
        }
    }

    /// Whether every stored child mask avoids the all-zeros and all-ones
    /// patterns and agrees with the points beneath it.
    pub fn check_masks(&self) -> bool {
        let Some(root) = self.root else { return true };
        let full = self.full_mask();
        let mut stack = vec![root];
        while let Some(id) = stack.pop() {
            let x = &self.nodes[id].point;
            for &(mask, child) in &self.nodes[id].children {
                if mask == 0 || mask == full {
                    return false;
                }
                let mut sub = vec![child];
                while let Some(s) = sub.pop() {
                    if successorship(&self.nodes[s].point, x) != mask {
                        return false;
                    }
                    sub.extend(self.nodes[s].children.iter().map(|&(_, c)| c));
                }
                stack.push(child);
            }
        }
        true
    }
}

impl ParetoArchive for QuadTreeArchive {
    fn update<C: Comparator>(
        &mut self,
        y: Point,
        cmp: &mut C,
    ) -> Result<UpdateOutcome, ArchiveError> {
        check_dim(self.dim, &y)?;
        if self.dim.is_none() {
            if y.dim() > 31 {
                return Err(ArchiveError::UnsupportedDimension {
                    backend: "quadtree",
                    p: y.dim(),
                });
            }
            self.dim = Some(y.dim());
        }
        let Some(root) = self.root else {
            self.insert(y, cmp);
            self.len = 1;
            return Ok(UpdateOutcome::accepted(Vec::new()));
        };

        // (node, parent slot) of dominated nodes with no dominated ancestor.
        let mut topmost: Vec<(NodeId, Slot)> = Vec::new();
        let mut marked: Vec<NodeId> = Vec::new();
        let mut stack: Vec<(NodeId, Slot, bool)> = vec![(root, None, false)];
        while let Some((id, slot, under_dominated)) = stack.pop() {
            let x = &self.nodes[id].point;
            match cmp.compare(&y, x) {
                DominanceOutcome::DominatedBy | DominanceOutcome::Equal => {
                    for id in marked {
                        self.nodes[id].dominated = false;
                    }
                    return Ok(UpdateOutcome::rejected());
                }
                DominanceOutcome::Dominates => {
                    self.nodes[id].dominated = true;
                    marked.push(id);
                    if !under_dominated {
                        topmost.push((id, slot));
                    }
                }
                DominanceOutcome::Incomparable => {}
            }
            let a = successorship(&y, &self.nodes[id].point);
            let is_dominated = self.nodes[id].dominated;
            for &(b, child) in self.nodes[id].children.iter().rev() {
                if b & a == b || a & b == a {
                    stack.push((child, Some((id, b)), under_dominated || is_dominated));
                }
            }
        }

        let mut survivors = Vec::new();
        let mut evicted = Vec::new();
        for (id, slot) in topmost {
            match slot {
                None => self.root = None,
                Some((parent, mask)) => {
                    let children = &mut self.nodes[parent].children;
                    let pos = children
                        .binary_search_by_key(&mask, |&(m, _)| m)
                        .expect("child slot present");
                    children.remove(pos);
                }
            }
            self.drain_subtree(id, &mut survivors, &mut evicted);
        }

        self.insert(y, cmp);
        for z in survivors {
            self.insert(z, cmp);
        }
        self.len = self.len + 1 - evicted.len();
        Ok(UpdateOutcome::accepted(evicted))
    }

    fn len(&self) -> usize {
        self.len
    }

    fn dim(&self) -> Option<usize> {
        self.dim
    }

    fn points(&self) -> Vec<Point> {
        let mut out = Vec::with_capacity(self.len);
        let Some(root) = self.root else { return out };
        let mut stack = vec![root];
        while let Some(id) = stack.pop() {
            out.push(self.nodes[id].point.clone());
            stack.extend(self.nodes[id].children.iter().map(|&(_, c)| c));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dominance::{ComparisonCounter, Uncounted};

    fn p(c: &[f64]) -> Point {
        Point::new(c.to_vec()).unwrap()
    }

    #[test]
    fn first_point_becomes_root() {
        let mut q = QuadTreeArchive::new();
        assert!(q.update(p(&[1., 2.]), &mut Uncounted).unwrap().accepted);
        assert_eq!(q.points(), vec![p(&[1., 2.])]);
    }

    #[test]
    fn covered_by_root_after_one_comparison() {
        let mut q = QuadTreeArchive::new();
        q.update(p(&[5., 5.]), &mut Uncounted).unwrap();
        let mut c = ComparisonCounter::new();
        assert!(!q.update(p(&[6., 6.]), &mut c).unwrap().accepted);
        assert_eq!(c.count(), 1);
    }

    #[test]
    fn successorship_masks() {
        assert_eq!(successorship(&[1., 5.], &[3., 3.]), 0b10);
        assert_eq!(successorship(&[3., 3.], &[3., 3.]), 0b11);
        assert_eq!(successorship(&[0., 2., 9.], &[1., 1., 1.]), 0b110);
    }

    #[test]
    fn removing_root_reinserts_subtree() {
        let mut q = QuadTreeArchive::new();
        for z in [
            [5., 5., 5.],
            [1., 9., 6.],
            [9., 1., 6.],
            [6., 6., 1.],
            [2., 8., 7.],
        ] {
            assert!(q.update(p(&z), &mut Uncounted).unwrap().accepted);
        }
        // Dominates (5,5,5) and (6,6,1) but nothing else.
        let mut out = q.update(p(&[4., 4., 1.]), &mut Uncounted).unwrap();
        out.evicted.sort();
        assert_eq!(out.evicted, vec![p(&[5., 5., 5.]), p(&[6., 6., 1.])]);
        let mut rest = q.points();
        rest.sort();
        assert_eq!(
            rest,
            vec![
                p(&[1., 9., 6.]),
                p(&[2., 8., 7.]),
                p(&[4., 4., 1.]),
                p(&[9., 1., 6.])
            ]
        );
        assert_eq!(q.len(), 4);
        assert!(q.check_masks());
    }
}
