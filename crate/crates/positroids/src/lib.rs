//! Matroid computation over small ground sets, centered on positroids:
//! recognizing positroid orders through their equivalent
//! characterizations, searching for such orders, bonding (free amalgams)
//! with its structural identities, and generators for the known
//! excluded-minor families.
//!
//! Ground sets are capped at 16 elements so subsets are single machine
//! words; all values are immutable after construction and freely
//! shareable.

pub mod bonding;
pub mod check;
pub mod construct;
pub mod corpus;
pub mod error;
pub mod exmin;
pub mod mask;
pub mod matroid;
pub mod order;
pub mod report;
pub mod search;

pub use error::{Error, Result};
pub use mask::Mask;
pub use matroid::{Matroid, Partition};
pub use order::{BoundOrder, LinearOrder};
pub use report::{Certificate, CheckReport, Verdict};
