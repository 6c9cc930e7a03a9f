//! Leaf-only k-d tree over archive slot ids, used to pick a reference point
//! close to a candidate.
//!
//! Intermediate nodes hold only a split objective and value; the objective
//! cycles with depth. Deleted points leave tombstone leaves that are reused
//! by later insertions and swept by a rebuild once they make up more than
//! half of all leaves.

const MAX_DISTANCE_EVALS: usize = 4;

#[derive(Debug, Clone)]
enum KdNode {
    Split {
        dim: usize,
        value: f64,
        left: usize,
        right: usize,
    },
    Leaf(Option<u32>),
}

#[derive(Debug, Clone, Default)]
pub(crate) struct KdTree {
    nodes: Vec<KdNode>,
    root: Option<usize>,
    /// Leaf node of each live slot id.
    leaf_of: Vec<usize>,
    leaves: usize,
    tombstones: usize,
}

impl KdTree {
    #[cfg(test)]
    pub(crate) fn new() -> Self {
        Self::default()
    }

    fn push(&mut self, node: KdNode) -> usize {
        self.nodes.push(node);
        self.nodes.len() - 1
    }

    fn record(&mut self, id: u32, leaf: usize) {
        let id = id as usize;
        if self.leaf_of.len() <= id {
            self.leaf_of.resize(id + 1, usize::MAX);
        }
        self.leaf_of[id] = leaf;
    }

    /// Adds `id` whose coordinates are `y`; `coords(id)` resolves stored ids.
    pub(crate) fn insert<'a>(&mut self, id: u32, y: &[f64], coords: impl Fn(u32) -> &'a [f64]) {
        let Some(mut node) = self.root else {
            let leaf = self.push(KdNode::Leaf(Some(id)));
            self.root = Some(leaf);
            self.leaves = 1;
            self.record(id, leaf);
            return;
        };
        let mut depth = 0;
        loop {
            match self.nodes[node] {
                KdNode::Split {
                    dim,
                    value,
                    left,
                    right,
                } => {
                    node = if y[dim] < value { left } else { right };
                    depth += 1;
                }
                KdNode::Leaf(None) => {
                    self.nodes[node] = KdNode::Leaf(Some(id));
                    self.tombstones -= 1;
                    self.record(id, node);
                    return;
                }
                KdNode::Leaf(Some(other)) => {
                    let q = coords(other);
                    let dim = depth % y.len();
                    let value = 0.5 * (y[dim] + q[dim]);
                    let mine = self.push(KdNode::Leaf(Some(id)));
                    let theirs = self.push(KdNode::Leaf(Some(other)));
                    let (left, right) = if y[dim] < value {
                        (mine, theirs)
                    } else {
                        (theirs, mine)
                    };
                    self.nodes[node] = KdNode::Split {
                        dim,
                        value,
                        left,
                        right,
                    };
                    self.leaves += 1;
                    self.record(id, mine);
                    self.record(other, theirs);
                    return;
                }
            }
        }
    }

    /// Tombstones the leaf of `id`. Returns true when the tree has become
    /// mostly tombstones and should be rebuilt.
    pub(crate) fn remove(&mut self, id: u32) -> bool {
        let leaf = self.leaf_of[id as usize];
        debug_assert!(matches!(self.nodes[leaf], KdNode::Leaf(Some(x)) if x == id));
        self.nodes[leaf] = KdNode::Leaf(None);
        self.leaf_of[id as usize] = usize::MAX;
        self.tombstones += 1;
        2 * self.tombstones > self.leaves
    }

    pub(crate) fn clear(&mut self) {
        self.nodes.clear();
        self.root = None;
        self.leaves = 0;
        self.tombstones = 0;
        self.leaf_of.iter_mut().for_each(|l| *l = usize::MAX);
    }

    pub(crate) fn live_leaves(&self) -> usize {
        self.leaves - self.tombstones
    }

    /// Nearest-neighbour descent with backtracking that stops after four
    /// distance evaluations; returns the closest live id seen.
    pub(crate) fn approx_nearest<'a>(
        &self,
        y: &[f64],
        coords: impl Fn(u32) -> &'a [f64],
    ) -> Option<u32> {
        let root = self.root?;
        let mut best: Option<(f64, u32)> = None;
        let mut evals = 0;
        // (node, squared distance from y to the node's side of the split)
        let mut stack = vec![(root, 0.0)];
        while let Some((node, bound)) = stack.pop() {
            if evals >= MAX_DISTANCE_EVALS {
                break;
            }
            if best.is_some_and(|(d, _)| bound >= d) {
                continue;
            }
            match self.nodes[node] {
                KdNode::Leaf(None) => {}
                KdNode::Leaf(Some(id)) => {
                    let d = distance2(y, coords(id));
                    evals += 1;
                    if best.is_none_or(|(b, _)| d < b) {
                        best = Some((d, id));
                    }
                }
                KdNode::Split {
                    dim,
                    value,
                    left,
                    right,
                } => {
                    let diff = y[dim] - value;
                    let (near, far) = if diff < 0.0 {
                        (left, right)
                    } else {
                        (right, left)
                    };
                    stack.push((far, diff * diff));
                    stack.push((near, bound));
                }
            }
        }
        best.map(|(_, id)| id)
    }
}

fn distance2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}
