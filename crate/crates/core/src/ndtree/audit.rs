use std::fmt;

use super::{NdTree, NodeId, NodeKind};
use crate::archive::ParetoArchive;
use crate::dominance::{compare, DominanceOutcome, Point};

/// A broken structural invariant found by [`NdTree::audit`].
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    LeafSize { node: NodeId, size: usize },
    ChildCount { node: NodeId, count: usize },
    BrokenParentLink { node: NodeId },
    IdealDoesNotCover { node: NodeId },
    NadirNotCovered { node: NodeId },
    ChildEscapesParent { parent: NodeId, child: NodeId },
    LengthMismatch { recorded: usize, actual: usize },
    MutuallyDominated,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::LeafSize { node, size } => write!(f, "leaf {node} holds {size} points"),
            Violation::ChildCount { node, count } => {
                write!(f, "internal node {node} has {count} children")
            }
            Violation::BrokenParentLink { node } => {
                write!(f, "node {node} has a stale parent link")
            }
            Violation::IdealDoesNotCover { node } => {
                write!(
                    f,
                    "approximate ideal of node {node} does not cover all its points"
                )
            }
            Violation::NadirNotCovered { node } => {
                write!(
                    f,
                    "approximate nadir of node {node} is not covered by all its points"
                )
            }
            Violation::ChildEscapesParent { parent, child } => {
                write!(
                    f,
                    "box of node {child} is not contained in its parent {parent}"
                )
            }
            Violation::LengthMismatch { recorded, actual } => {
                write!(f, "tree records {recorded} points but holds {actual}")
            }
            Violation::MutuallyDominated => write!(f, "archive holds a covered point"),
        }
    }
}

impl NdTree {
    /// Structural check plus pairwise mutual non-dominance of all points.
    ///
    /// The pairwise check is quadratic; [`NdTree::audit_structure`] skips
    /// it.
    pub fn audit(&self) -> Vec<Violation> {
        let mut violations = self.audit_structure();
        let points = self.points();
        'outer: for (i, a) in points.iter().enumerate() {
            for b in &points[i + 1..] {
                if compare(a, b) != DominanceOutcome::Incomparable {
                    violations.push(Violation::MutuallyDominated);
                    break 'outer;
                }
            }
        }
        violations
    }

    /// Structural check plus mutual non-dominance between `y`, which must
    /// have just been accepted, and every other archived point.
    ///
    /// Removals never create dominance, so running this after each accepted
    /// update of a stream that started from a clean tree verifies the whole
    /// archive in linear time per step.
    pub fn audit_newcomer(&self, y: &Point) -> Vec<Violation> {
        let mut violations = self.audit_structure();
        let mut copies = 0;
        let mut clash = false;
        self.for_each_point(|z| match compare(y, z) {
            DominanceOutcome::Equal => copies += 1,
            DominanceOutcome::Incomparable => {}
            _ => clash = true,
        });
        if clash || copies != 1 {
            violations.push(Violation::MutuallyDominated);
        }
        violations
    }

    fn for_each_point(&self, mut f: impl FnMut(&Point)) {
        let Some(root) = self.root else { return };
        let mut stack = vec![root];
        while let Some(id) = stack.pop() {
            match &self.nodes[id].kind {
                NodeKind::Leaf(points) => points.iter().for_each(&mut f),
                NodeKind::Internal(children) => stack.extend(children),
            }
        }
    }

    /// Leaf sizes, fan-out, parent links and box containment at every node.
    pub fn audit_structure(&self) -> Vec<Violation> {
        let mut violations = Vec::new();
        let Some(root) = self.root else {
            if self.len != 0 {
                violations.push(Violation::LengthMismatch {
                    recorded: self.len,
                    actual: 0,
                });
            }
            return violations;
        };
        if self.nodes[root].parent.is_some() {
            violations.push(Violation::BrokenParentLink { node: root });
        }

        let mut total = 0;
        let mut stack = vec![root];
        while let Some(id) = stack.pop() {
            let node = &self.nodes[id];
            match &node.kind {
                NodeKind::Leaf(points) => {
                    total += points.len();
                    if points.is_empty() || points.len() > self.max_leaf_size {
                        violations.push(Violation::LeafSize {
                            node: id,
                            size: points.len(),
                        });
                    }
                    if points.iter().any(|z| !compare(&node.ideal, z).covers()) {
                        violations.push(Violation::IdealDoesNotCover { node: id });
                    }
                    if points.iter().any(|z| !compare(z, &node.nadir).covers()) {
                        violations.push(Violation::NadirNotCovered { node: id });
                    }
                }
                NodeKind::Internal(children) => {
                    if children.len() < 2 || children.len() > self.n_children {
                        violations.push(Violation::ChildCount {
                            node: id,
                            count: children.len(),
                        });
                    }
                    for &child in children {
                        let c = &self.nodes[child];
                        if c.parent != Some(id) {
                            violations.push(Violation::BrokenParentLink { node: child });
                        }
                        // Leaf-level coverage plus containment at every edge
                        // gives coverage of S(n) at every node by transitivity.
                        if !compare(&node.ideal, &c.ideal).covers()
                            || !compare(&c.nadir, &node.nadir).covers()
                        {
                            violations.push(Violation::ChildEscapesParent { parent: id, child });
                        }
                        stack.push(child);
                    }
                }
            }
        }
        if total != self.len {
            violations.push(Violation::LengthMismatch {
                recorded: self.len,
                actual: total,
            });
        }
        violations
    }
}
