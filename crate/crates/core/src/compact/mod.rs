//! Step 2: reduce the segment set to one byte array while tracking where
//! every row lands.
//!
//! Stages run in a fixed order: mapping elimination, lossy merging,
//! sub-array removal, then greedy overlap merging. Reversal is not a stage
//! of its own; when enabled it widens the candidates that containment and
//! overlap scans consider (see [`Orientation`]).

mod greedy;
mod lossy;
mod mapping;
mod oracle;
pub mod overlap;
mod pipeline;
mod subarrays;

use std::collections::BTreeMap;
use std::time::Duration;

use thiserror::Error;

use crate::transform::RowPath;

pub use greedy::{greedy_compact, GreedyConfig, GreedyOutcome, MergeStep};
pub use lossy::{lossy_merge, LossyMerge, LossyOutcome};
pub use mapping::{apply_mappings, MappingAccessor};
pub use oracle::{brute_force_superstring, OracleLimits};
pub use overlap::overlap_len;
pub use pipeline::{compact_spec, run_pipeline};
pub use subarrays::remove_subarrays;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompactError {
    #[error("cannot compact an empty segment list")]
    Empty,
    #[error("mapping {source_name} -> {target}: mapping does not hold (first mismatch at index {index})")]
    MappingDoesNotHold {
        source_name: String,
        target: String,
        index: usize,
    },
    #[error("oracle instance too large: {0}")]
    TooLarge(String),
    #[error("internal error: {0}")]
    Internal(String),
}

/// Which segment orientations containment and overlap scans may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Orientation {
    #[default]
    Forward,
    /// Each segment may also be used byte-reversed, but only where that
    /// yields a containment or a strictly larger overlap than forward.
    WithReversal,
}

impl Orientation {
    pub fn allows_reversal(self) -> bool {
        self == Orientation::WithReversal
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Placement {
    /// Row bytes at `compacted[offset..offset + len]`, byte-reversed when
    /// `reversed`.
    At {
        offset: usize,
        len: usize,
        reversed: bool,
    },
    Null,
    /// Served through `accessors[index]`.
    Mapped(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlacementEntry {
    pub row: RowPath,
    pub placement: Placement,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompactionResult {
    pub compacted: Vec<u8>,
    /// One entry per slot of every input array, in declaration order.
    pub placements: Vec<PlacementEntry>,
    pub accessors: Vec<MappingAccessor>,
    pub lossy_merges: Vec<LossyMerge>,
    /// Post-merge bytes of rows whose content changed during lossy merging.
    pub adjusted_rows: BTreeMap<RowPath, Vec<u8>>,
    pub greedy_steps: Vec<MergeStep>,
    /// Wall-clock time per stage, in execution order.
    pub timings: Vec<(String, Duration)>,
}

impl CompactionResult {
    pub fn placement(&self, row: &RowPath) -> Option<Placement> {
        self.placements.iter().find(|e| &e.row == row).map(|e| e.placement)
    }

    /// Largest per-byte deviation any row suffered from lossy merging.
    pub fn max_drift(&self, original: &BTreeMap<RowPath, Vec<u8>>) -> u8 {
        self.adjusted_rows
            .iter()
            .filter_map(|(row, now)| {
                let before = original.get(row)?;
                before.iter().zip(now).map(|(&a, &b)| a.abs_diff(b)).max()
            })
            .max()
            .unwrap_or(0)
    }
}
