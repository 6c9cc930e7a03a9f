//! Online Pareto archives.
//!
//! [`NdTree`] maintains a set of mutually non-dominated points under a
//! stream of candidates, pruning whole subtrees with approximate local ideal
//! and nadir points. The baseline archives in [`baselines`] implement the
//! same [`ParetoArchive`] contract so their comparison counts can be
//! measured side by side with [`bench`]. [`datasets`] generates the
//! artificial benchmark streams and [`nds`] peels populations into fronts.
//!
//! All objectives are minimized.

pub mod archive;
pub mod baselines;
pub mod bench;
pub mod datasets;
pub mod dominance;
pub mod error;
pub mod nds;
pub mod ndtree;
pub mod par;

pub use archive::{AnyArchive, BackendKind, ParetoArchive, UpdateOutcome};
pub use dominance::{compare, Comparator, ComparisonCounter, DominanceOutcome, Point, Uncounted};
pub use error::{ArchiveError, IoError};
pub use ndtree::{worst_case_stream, NdTree, NdTreeConfig, Violation};
