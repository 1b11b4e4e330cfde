//! Data compaction for read-only array data.
//!
//! Typed arrays are encoded to bytes for a target platform, packed into a
//! single byte array that contains every row as a contiguous run, and
//! rendered as C source in which each original array becomes a pointer (or
//! pointer table) into the shared bytes. Reading the data needs no
//! decompression step.
//!
//! The pipeline has three steps:
//!
//! 1. [`transform`] encodes each row of each array into a byte [`Segment`].
//! 2. [`compact`] merges the segments into one superstring, recording a
//!    [`Placement`](compact::Placement) for every row.
//! 3. [`codegen`] emits the compacted C source (and an uncompacted reference).
//!
//! ```
//! use compactor::{compact::compact_spec, parse_spec};
//!
//! let spec = parse_spec(r#"{
//!     "platform": {"int_bytes": 2, "endianness": "little"},
//!     "arrays": [
//!         {"name": "iA", "ctype": "int", "dims": [2, 2], "data": [[-32768, -1], [0, 32767]]},
//!         {"name": "ucA", "ctype": "unsigned char", "dims": [4], "data": [0, 255, 127, 16]}
//!     ]
//! }"#).unwrap();
//! let result = compact_spec(&spec, false).unwrap();
//! assert_eq!(result.compacted, vec![0, 128, 255, 255, 0, 0, 255, 127, 16]);
//! ```

pub mod codegen;
pub mod compact;
pub mod model;
pub mod report;
pub mod transform;

pub use compact::{CompactError, CompactionResult};
pub use model::{parse_spec, ArraySpec, CompactionOptions, CompactionSpec, ElementType, PlatformConfig, SpecError};
pub use transform::{RowPath, Segment};
