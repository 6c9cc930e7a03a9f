//! Reference archives the ND-Tree is measured against.

mod list;
mod mfront;
mod quad_tree;
mod sorted_list;

pub use list::LinearListArchive;
pub use mfront::MFrontArchive;
pub use quad_tree::QuadTreeArchive;
pub use sorted_list::SortedListArchive;
