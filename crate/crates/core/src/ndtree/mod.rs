//! ND-Tree: a Pareto archive organized as a tree of hyperrectangles.
//!
//! Every node keeps an approximate local ideal point (covering every point
//! below it) and an approximate local nadir point (covered by every point
//! below it). An update compares the candidate with those two corners first
//! and only descends into a node when the box comparison is inconclusive:
//!
//! * the nadir covers `y`: every point below covers `y`, so reject;
//! * `y` dominates the ideal: `y` dominates every point below, so drop the
//!   whole subtree;
//! * `y` is incomparable to both corners: nothing below interacts with `y`,
//!   so skip the subtree.
//!
//! Points are inserted into the leaf reached by always stepping into the
//! child whose box middle is closest to `y`; overfull leaves are split with
//! a farthest-point seeding heuristic. Bounds only ever grow, they are not
//! tightened when points leave.

mod audit;
mod worst_case;

pub use audit::Violation;
pub use worst_case::worst_case_stream;

use crate::archive::{check_dim, ParetoArchive, UpdateOutcome};
use crate::dominance::{Comparator, DominanceOutcome, Point};
use crate::error::ArchiveError;

/// Leaf capacity and fan-out of an [`NdTree`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NdTreeConfig {
    pub max_leaf_size: usize,
    /// Children created when a leaf splits; `None` means `p + 1`, fixed when
    /// the first point arrives.
    pub n_children: Option<usize>,
}

impl NdTreeConfig {
    pub const DEFAULT: NdTreeConfig = NdTreeConfig {
        max_leaf_size: 20,
        n_children: None,
    };

    pub fn new(max_leaf_size: usize, n_children: Option<usize>) -> Self {
        NdTreeConfig {
            max_leaf_size,
            n_children,
        }
    }

    /// Concrete `(max_leaf_size, n_children)` for `p` objectives.
    pub fn resolve(&self, p: usize) -> Result<(usize, usize), ArchiveError> {
        let children = self.n_children.unwrap_or(p + 1);
        if children < 2 {
            return Err(ArchiveError::InvalidConfig(format!(
                "an ND-Tree node needs at least 2 children, got {children}"
            )));
        }
        if self.max_leaf_size + 1 < children {
            return Err(ArchiveError::InvalidConfig(format!(
                "a split leaf of {} points cannot seed {children} children",
                self.max_leaf_size + 1
            )));
        }
        Ok((self.max_leaf_size, children))
    }
}

impl Default for NdTreeConfig {
    fn default() -> Self {
        Self::DEFAULT
    }
}

pub(crate) type NodeId = usize;

#[derive(Debug, Clone)]
pub(crate) enum NodeKind {
    Leaf(Vec<Point>),
    Internal(Vec<NodeId>),
}

#[derive(Debug, Clone)]
pub(crate) struct Node {
    pub(crate) ideal: Vec<f64>,
    pub(crate) nadir: Vec<f64>,
    pub(crate) parent: Option<NodeId>,
    pub(crate) kind: NodeKind,
}

impl Node {
    fn leaf(seed: &Point, parent: Option<NodeId>) -> Self {
        Node {
            ideal: seed.to_vec(),
            nadir: seed.to_vec(),
            parent,
            kind: NodeKind::Leaf(vec![seed.clone()]),
        }
    }

    fn middle_distance2(&self, y: &[f64]) -> f64 {
        self.ideal
            .iter()
            .zip(&self.nadir)
            .zip(y)
            .map(|((lo, hi), v)| {
                let d = v - 0.5 * (lo + hi);
                d * d
            })
            .sum()
    }
}

/// Result of running the update pass over one subtree.
enum Visit {
    /// A point below covers the candidate.
    Rejected,
    /// Subtree still holds points (possibly fewer).
    Kept,
    /// Subtree lost all its points and its node was freed.
    Emptied,
    /// Node collapsed; its only surviving child takes its place.
    Replaced(NodeId),
}

#[derive(Debug, Clone)]
pub struct NdTree {
    config: NdTreeConfig,
    max_leaf_size: usize,
    n_children: usize,
    dim: Option<usize>,
    nodes: Vec<Node>,
    free: Vec<NodeId>,
    root: Option<NodeId>,
    len: usize,
}

impl NdTree {
    pub fn new(config: NdTreeConfig) -> Self {
        NdTree {
            config,
            max_leaf_size: config.max_leaf_size,
            n_children: config.n_children.unwrap_or(0),
            dim: None,
            nodes: Vec::new(),
            free: Vec::new(),
            root: None,
            len: 0,
        }
    }

    /// Tree for `p` objectives with the configuration validated up front.
    pub fn with_dim(config: NdTreeConfig, p: usize) -> Result<Self, ArchiveError> {
        let mut tree = NdTree::new(config);
        tree.fix_dim(p)?;
        Ok(tree)
    }

    pub fn config(&self) -> NdTreeConfig {
        self.config
    }

    /// Children per split, once the dimension is known.
    pub fn n_children(&self) -> Option<usize> {
        self.dim.map(|_| self.n_children)
    }

    pub fn max_leaf_size(&self) -> usize {
        self.max_leaf_size
    }

    /// Longest root-to-leaf path counted in nodes; 0 for an empty tree.
    pub fn depth(&self) -> usize {
        let Some(root) = self.root else { return 0 };
        let mut best = 0;
        let mut stack = vec![(root, 1)];
        while let Some((id, d)) = stack.pop() {
            best = best.max(d);
            if let NodeKind::Internal(children) = &self.nodes[id].kind {
                stack.extend(children.iter().map(|&c| (c, d + 1)));
            }
        }
        best
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len() - self.free.len()
    }

    fn fix_dim(&mut self, p: usize) -> Result<(), ArchiveError> {
        let (max_leaf_size, n_children) = self.config.resolve(p)?;
        self.max_leaf_size = max_leaf_size;
        self.n_children = n_children;
        self.dim = Some(p);
        Ok(())
    }

    fn alloc(&mut self, node: Node) -> NodeId {
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

    fn release(&mut self, id: NodeId) {
        self.nodes[id].kind = NodeKind::Internal(Vec::new());
        self.nodes[id].parent = None;
        self.free.push(id);
    }

    /// Frees `id` and everything below it, moving its points into `sink`.
    fn remove_subtree(&mut self, id: NodeId, sink: &mut Vec<Point>) {
        let mut stack = vec![id];
        while let Some(id) = stack.pop() {
            match std::mem::replace(&mut self.nodes[id].kind, NodeKind::Internal(Vec::new())) {
                NodeKind::Leaf(points) => sink.extend(points),
                NodeKind::Internal(children) => stack.extend(children),
            }
            self.release(id);
        }
    }

    fn update_node<C: Comparator>(
        &mut self,
        id: NodeId,
        y: &Point,
        cmp: &mut C,
        evicted: &mut Vec<Point>,
    ) -> Visit {
        let node = &self.nodes[id];
        let nadir_vs_y = cmp.compare(&node.nadir, y);
        if nadir_vs_y.covers() {
            return Visit::Rejected;
        }
        let y_vs_ideal = cmp.compare(y, &node.ideal);
        // Strict dominance only: when y equals the ideal, a point equal to y
        // may still sit below and must reject it.
        if y_vs_ideal == DominanceOutcome::Dominates {
            let before = evicted.len();
            self.remove_subtree(id, evicted);
            self.len -= evicted.len() - before;
            return Visit::Emptied;
        }
        let inside = y_vs_ideal.is_covered() || nadir_vs_y == DominanceOutcome::DominatedBy;
        if !inside {
            return Visit::Kept;
        }

        match &mut self.nodes[id].kind {
            NodeKind::Leaf(points) => {
                let mut i = 0;
                while i < points.len() {
                    match cmp.compare(y, &points[i]) {
                        DominanceOutcome::DominatedBy | DominanceOutcome::Equal => {
                            return Visit::Rejected;
                        }
                        DominanceOutcome::Dominates => {
                            evicted.push(points.remove(i));
                            self.len -= 1;
                        }
                        DominanceOutcome::Incomparable => i += 1,
                    }
                }
                if points.is_empty() {
                    self.release(id);
                    Visit::Emptied
                } else {
                    Visit::Kept
                }
            }
            NodeKind::Internal(children) => {
                let mut children = std::mem::take(children);
                let mut i = 0;
                while i < children.len() {
                    match self.update_node(children[i], y, cmp, evicted) {
                        Visit::Rejected => {
                            self.nodes[id].kind = NodeKind::Internal(children);
                            return Visit::Rejected;
                        }
                        Visit::Kept => i += 1,
                        Visit::Emptied => {
                            children.remove(i);
                        }
                        Visit::Replaced(grandchild) => {
                            self.nodes[grandchild].parent = Some(id);
                            children[i] = grandchild;
                            i += 1;
                        }
                    }
                }
                match children.len() {
                    0 => {
                        self.release(id);
                        Visit::Emptied
                    }
                    1 => {
                        let only = children[0];
                        self.release(id);
                        Visit::Replaced(only)
                    }
                    _ => {
                        self.nodes[id].kind = NodeKind::Internal(children);
                        Visit::Kept
                    }
                }
            }
        }
    }

    /// Child of an internal node whose box middle is closest to `y`; the
    /// lowest index wins ties.
    fn closest_child(&self, children: &[NodeId], y: &[f64]) -> usize {
        let mut best = 0;
        let mut best_d = f64::INFINITY;
        for (i, &c) in children.iter().enumerate() {
            let d = self.nodes[c].middle_distance2(y);
            if d < best_d {
                best = i;
                best_d = d;
            }
        }
        best
    }

    fn insert(&mut self, root: NodeId, y: Point) {
        let mut id = root;
        while let NodeKind::Internal(children) = &self.nodes[id].kind {
            id = children[self.closest_child(children, &y)];
        }
        self.update_ideal_nadir(id, &y);
        let NodeKind::Leaf(points) = &mut self.nodes[id].kind else {
            unreachable!()
        };
        points.push(y);
        self.len += 1;
        if points.len() > self.max_leaf_size {
            self.split(id);
        }
    }

    /// Widens the box of `id` to include `y` and walks up while boxes change.
    fn update_ideal_nadir(&mut self, mut id: NodeId, y: &[f64]) {
        loop {
            let node = &mut self.nodes[id];
            let mut changed = false;
            for ((lo, hi), &v) in node.ideal.iter_mut().zip(node.nadir.iter_mut()).zip(y) {
                if v < *lo {
                    *lo = v;
                    changed = true;
                }
                if v > *hi {
                    *hi = v;
                    changed = true;
                }
            }
            match node.parent {
                Some(parent) if changed => id = parent,
                _ => return,
            }
        }
    }

    /// Turns an overfull leaf into an internal node with `n_children` leaves.
    fn split(&mut self, id: NodeId) {
        let NodeKind::Leaf(points) =
            std::mem::replace(&mut self.nodes[id].kind, NodeKind::Internal(Vec::new()))
        else {
            unreachable!("only leaves split")
        };
        let mut remaining: Vec<Option<Point>> = points.into_iter().map(Some).collect();

        // Sum of distances stands in for the average: same divisor per step.
        let first = argmax(remaining.iter().enumerate().map(|(i, z)| {
            let z = z.as_ref().unwrap();
            remaining
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, w)| euclidean(z, w.as_ref().unwrap()))
                .sum::<f64>()
        }));
        let mut seeds: Vec<Point> = vec![remaining[first].take().unwrap()];
        let mut children = vec![self.alloc(Node::leaf(&seeds[0], Some(id)))];

        // Subsequent seeds maximize distance to every point already placed;
        // at this stage the placed points are exactly the seeds.
        while children.len() < self.n_children {
            let next = argmax(remaining.iter().map(|z| match z {
                Some(z) => seeds.iter().map(|s| euclidean(z, s)).sum(),
                None => f64::NEG_INFINITY,
            }));
            let seed = remaining[next].take().unwrap();
            children.push(self.alloc(Node::leaf(&seed, Some(id))));
            seeds.push(seed);
        }

        for z in remaining.into_iter().flatten() {
            let target = children[self.closest_child(&children, &z)];
            self.update_ideal_nadir(target, &z);
            let NodeKind::Leaf(list) = &mut self.nodes[target].kind else {
                unreachable!()
            };
            list.push(z);
        }
        self.nodes[id].kind = NodeKind::Internal(children);
    }
}

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Index of the first maximum.
fn argmax(values: impl Iterator<Item = f64>) -> usize {
    let mut best = 0;
    let mut best_v = f64::NEG_INFINITY;
    for (i, v) in values.enumerate() {
        if v > best_v {
            best = i;
            best_v = v;
        }
    }
    best
}

impl Default for NdTree {
    fn default() -> Self {
        NdTree::new(NdTreeConfig::DEFAULT)
    }
}

impl ParetoArchive for NdTree {
    fn update<C: Comparator>(
        &mut self,
        y: Point,
        cmp: &mut C,
    ) -> Result<UpdateOutcome, ArchiveError> {
        check_dim(self.dim, &y)?;
        if self.dim.is_none() {
            self.fix_dim(y.dim())?;
        }
        let Some(root) = self.root else {
            self.root = Some(self.alloc(Node::leaf(&y, None)));
            self.len = 1;
            return Ok(UpdateOutcome::accepted(Vec::new()));
        };

        let mut evicted = Vec::new();
        match self.update_node(root, &y, cmp, &mut evicted) {
            Visit::Rejected => return Ok(UpdateOutcome::rejected()),
            Visit::Kept => {}
            Visit::Emptied => self.root = None,
            Visit::Replaced(child) => {
                self.nodes[child].parent = None;
                self.root = Some(child);
            }
        }
        match self.root {
            Some(root) => self.insert(root, y),
            None => {
                self.root = Some(self.alloc(Node::leaf(&y, None)));
                self.len = 1;
            }
        }
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
            match &self.nodes[id].kind {
                NodeKind::Leaf(points) => out.extend(points.iter().cloned()),
                NodeKind::Internal(children) => stack.extend(children.iter().rev()),
            }
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

    fn sorted(mut v: Vec<Point>) -> Vec<Point> {
        v.sort();
        v
    }

    fn tree_of(config: NdTreeConfig, pts: &[&[f64]]) -> NdTree {
        let mut t = NdTree::new(config);
        for c in pts {
            t.update(p(c), &mut Uncounted).unwrap();
        }
        t
    }

    fn leaf_points(t: &NdTree, id: NodeId) -> &[Point] {
        match &t.nodes[id].kind {
            NodeKind::Leaf(points) => points,
            NodeKind::Internal(_) => panic!("not a leaf"),
        }
    }

    fn children(t: &NdTree, id: NodeId) -> &[NodeId] {
        match &t.nodes[id].kind {
            NodeKind::Internal(c) => c,
            NodeKind::Leaf(_) => panic!("not internal"),
        }
    }

    #[test]
    fn empty_tree_accepts_first_point() {
        let mut t = NdTree::default();
        let out = t.update(p(&[5., 5.]), &mut Uncounted).unwrap();
        assert!(out.accepted && out.evicted.is_empty());
        assert_eq!(t.points(), vec![p(&[5., 5.])]);
    }

    #[test]
    fn covered_candidate_is_rejected() {
        let s: &[&[f64]] = &[&[1., 1., 1.], &[0., 2., 2.], &[2., 2., 0.]];
        let mut t = tree_of(NdTreeConfig::DEFAULT, s);
        let out = t.update(p(&[1., 1., 2.]), &mut Uncounted).unwrap();
        assert!(!out.accepted);
        assert_eq!(t.len(), 3);
    }

    #[test]
    fn dominating_candidate_evicts() {
        let s: &[&[f64]] = &[&[1., 1., 1.], &[0., 2., 2.], &[2., 2., 0.]];
        let mut t = tree_of(NdTreeConfig::DEFAULT, s);
        let out = t.update(p(&[1., 1., 0.]), &mut Uncounted).unwrap();
        assert!(out.accepted);
        assert_eq!(
            sorted(out.evicted),
            vec![p(&[1., 1., 1.]), p(&[2., 2., 0.])]
        );
        assert_eq!(sorted(t.points()), vec![p(&[0., 2., 2.]), p(&[1., 1., 0.])]);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let mut t = tree_of(NdTreeConfig::DEFAULT, &[&[1., 2.]]);
        assert_eq!(
            t.update(p(&[1., 2., 3.]), &mut Uncounted).unwrap_err(),
            ArchiveError::DimensionMismatch {
                expected: 2,
                found: 3
            }
        );
    }

    #[test]
    fn invalid_config_is_reported_on_first_point() {
        let mut t = NdTree::new(NdTreeConfig::new(2, None));
        assert!(matches!(
            t.update(p(&[1., 2., 3.]), &mut Uncounted),
            Err(ArchiveError::InvalidConfig(_))
        ));
        assert!(NdTreeConfig::new(5, Some(1)).resolve(2).is_err());
        assert_eq!(NdTreeConfig::DEFAULT.resolve(4).unwrap(), (20, 5));
    }

    fn single_node(ideal: &[f64], nadir: &[f64], point: &[f64]) -> NdTree {
        let mut t = NdTree::with_dim(NdTreeConfig::DEFAULT, ideal.len()).unwrap();
        let mut node = Node::leaf(&p(point), None);
        node.ideal = ideal.to_vec();
        node.nadir = nadir.to_vec();
        t.root = Some(t.alloc(node));
        t.len = 1;
        t
    }

    #[test]
    fn update_node_skips_incomparable_box() {
        let mut t = single_node(&[0., 1., 0.], &[2., 2., 2.], &[1., 1., 1.]);
        let mut c = ComparisonCounter::new();
        let mut ev = Vec::new();
        let root = t.root.unwrap();
        assert!(matches!(
            t.update_node(root, &p(&[3., 0., 3.]), &mut c, &mut ev),
            Visit::Kept
        ));
        // Only the two box corners were consulted.
        assert_eq!(c.count(), 2);
    }

    #[test]
    fn update_node_rejects_on_nadir_equality() {
        let mut t = single_node(&[0., 1., 0.], &[2., 2., 2.], &[1., 1., 1.]);
        let mut c = ComparisonCounter::new();
        let root = t.root.unwrap();
        assert!(matches!(
            t.update_node(root, &p(&[2., 2., 2.]), &mut c, &mut Vec::new()),
            Visit::Rejected
        ));
        assert_eq!(c.count(), 1);
    }

    #[test]
    fn update_node_drops_dominated_subtree() {
        let mut t = single_node(&[0., 1., 0.], &[2., 2., 2.], &[1., 1., 1.]);
        let mut ev = Vec::new();
        let root = t.root.unwrap();
        assert!(matches!(
            t.update_node(root, &p(&[0., 0., 0.]), &mut Uncounted, &mut ev),
            Visit::Emptied
        ));
        assert_eq!(ev, vec![p(&[1., 1., 1.])]);
    }

    #[test]
    fn root_deletion_recreates_single_leaf() {
        let mut t = tree_of(NdTreeConfig::DEFAULT, &[&[1., 5.], &[5., 1.], &[3., 3.]]);
        let out = t.update(p(&[0., 0.]), &mut Uncounted).unwrap();
        assert!(out.accepted);
        assert_eq!(out.evicted.len(), 3);
        assert_eq!(t.points(), vec![p(&[0., 0.])]);
        assert_eq!(t.node_count(), 1);
        assert!(t.audit().is_empty());
    }

    #[test]
    fn reoffering_point_equal_to_stale_ideal_is_rejected() {
        // A nadir that still remembers an evicted (3,3) is legal; the ideal
        // then equals the lone point, and an equal candidate must not be
        // mistaken for one that wipes the node out.
        let mut t = tree_of(NdTreeConfig::DEFAULT, &[&[2., 2.]]);
        let root = t.root.unwrap();
        t.nodes[root].nadir = vec![3., 3.];
        assert!(t.audit().is_empty());
        let out = t.update(p(&[2., 2.]), &mut Uncounted).unwrap();
        assert!(!out.accepted);
        assert!(out.evicted.is_empty());
        assert_eq!(t.points(), vec![p(&[2., 2.])]);
    }

    #[test]
    fn insert_widens_leaf_box() {
        let t = tree_of(NdTreeConfig::new(2, Some(2)), &[&[1., 5.], &[5., 1.]]);
        let root = t.root.unwrap();
        assert_eq!(leaf_points(&t, root), &[p(&[1., 5.]), p(&[5., 1.])]);
        assert_eq!(t.nodes[root].ideal, vec![1., 1.]);
        assert_eq!(t.nodes[root].nadir, vec![5., 5.]);
    }

    #[test]
    fn closest_child_by_middle_point() {
        let mut t = NdTree::with_dim(NdTreeConfig::new(2, Some(2)), 2).unwrap();
        let mut a = Node::leaf(&p(&[0., 2.]), None);
        a.nadir = vec![2., 2.];
        a.ideal = vec![0., 0.];
        let mut b = Node::leaf(&p(&[8., 10.]), None);
        b.ideal = vec![8., 8.];
        b.nadir = vec![10., 10.];
        let ids = vec![t.alloc(a), t.alloc(b)];
        assert_eq!(t.closest_child(&ids, &[2., 2.]), 0);
        assert_eq!(t.closest_child(&ids, &[8., 9.]), 1);
        // Equidistant: lowest index.
        assert_eq!(t.closest_child(&ids, &[5., 5.]), 0);
    }

    #[test]
    fn split_seeds_farthest_points_with_first_index_ties() {
        let t = tree_of(
            NdTreeConfig::new(2, Some(2)),
            &[&[0., 10.], &[10., 0.], &[5., 5.]],
        );
        let root = t.root.unwrap();
        let kids = children(&t, root);
        assert_eq!(kids.len(), 2);
        assert_eq!(leaf_points(&t, kids[0]), &[p(&[0., 10.]), p(&[5., 5.])]);
        assert_eq!(leaf_points(&t, kids[1]), &[p(&[10., 0.])]);
        assert_eq!(t.nodes[kids[0]].ideal, vec![0., 5.]);
        assert_eq!(t.nodes[kids[0]].nadir, vec![5., 10.]);
    }

    #[test]
    fn split_outlier_becomes_first_seed() {
        // Mutually non-dominated cluster near (5,5) plus one far point.
        let t = tree_of(
            NdTreeConfig::new(3, Some(2)),
            &[&[5., 5.], &[4.9, 5.1], &[5.1, 4.9], &[-100., 100.]],
        );
        let kids = children(&t, t.root.unwrap());
        assert_eq!(leaf_points(&t, kids[0]), &[p(&[-100., 100.])]);
    }

    #[test]
    fn split_conserves_points_and_creates_n_children() {
        let pts: Vec<Vec<f64>> = (0..6).map(|i| vec![i as f64, 5.0 - i as f64]).collect();
        let refs: Vec<&[f64]> = pts.iter().map(|v| v.as_slice()).collect();
        let t = tree_of(NdTreeConfig::new(5, Some(3)), &refs);
        let kids = children(&t, t.root.unwrap());
        assert_eq!(kids.len(), 3);
        let mut all: Vec<Point> = kids
            .iter()
            .flat_map(|&k| leaf_points(&t, k).to_vec())
            .collect();
        all.sort();
        let expected: Vec<Point> = pts.iter().map(|v| p(v)).collect();
        assert_eq!(all, sorted(expected));
    }

    #[test]
    fn update_ideal_nadir_widens_and_propagates() {
        let mut t = tree_of(
            NdTreeConfig::new(2, Some(2)),
            &[&[0., 10.], &[10., 0.], &[5., 5.]],
        );
        let root = t.root.unwrap();
        let kid = children(&t, root)[1];
        t.nodes[kid].ideal = vec![1., 1.];
        t.nodes[kid].nadir = vec![5., 5.];
        t.update_ideal_nadir(kid, &[0., 6.]);
        assert_eq!(t.nodes[kid].ideal, vec![0., 1.]);
        assert_eq!(t.nodes[kid].nadir, vec![5., 6.]);
        // Parent already contained (0,6): unchanged.
        assert_eq!(t.nodes[root].ideal, vec![0., 0.]);
        // A new global minimum reaches the root.
        t.update_ideal_nadir(kid, &[-1., 3.]);
        assert_eq!(t.nodes[root].ideal, vec![-1., 0.]);

        let before = (t.nodes[kid].ideal.clone(), t.nodes[kid].nadir.clone());
        t.update_ideal_nadir(kid, &[2., 2.]);
        assert_eq!(
            (t.nodes[kid].ideal.clone(), t.nodes[kid].nadir.clone()),
            before
        );
    }

    #[test]
    fn single_surviving_child_replaces_parent() {
        let mut t = tree_of(
            NdTreeConfig::new(2, Some(2)),
            &[&[0., 10.], &[10., 0.], &[5., 5.]],
        );
        // (9,-1) dominates (10,0), emptying the second child.
        let out = t.update(p(&[9., -1.]), &mut Uncounted).unwrap();
        assert!(out.accepted);
        assert_eq!(out.evicted, vec![p(&[10., 0.])]);
        assert!(t.audit().is_empty());
        let root = t.root.unwrap();
        assert!(t.nodes[root].parent.is_none());
        assert_eq!(
            sorted(t.points()),
            vec![p(&[0., 10.]), p(&[5., 5.]), p(&[9., -1.])]
        );
    }
}
