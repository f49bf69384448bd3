//! Enumeration of the dominant trapping sets of an LDPC code by recursive
//! expansion of short cycles, with classification, size bounds and a
//! brute-force reference enumerator.

pub mod bounds;
pub mod cycles;
pub mod error;
pub mod expansion;
pub mod graph;
pub mod oracle;
pub mod report;
pub mod trapset;

pub use error::{Error, Result};
pub use expansion::{search, ExpansionConfig, SearchResult, ThresholdPolicy, TrapSetStore};
pub use graph::{girth, parse_alist, write_alist, Girth, TannerGraph};
pub use report::{CodeMeta, RunReport};
pub use trapset::{ClassFlags, ClassifyMode, TrappingSet};
