//! Size and timing reports, and the operations behind the command-line tool.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codegen::{
    emit_compacted, emit_reference, verify_placements, CodegenError, EmitOptions, EmittedUnit, VerifyError,
};
use crate::compact::{
    brute_force_superstring, compact_spec, greedy_compact, remove_subarrays, CompactError, CompactionResult,
    GreedyConfig, OracleLimits, Orientation,
};
use crate::model::{CompactionSpec, TieStrategy};
use crate::transform::{flatten, Segment};

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Compact(#[from] CompactError),
    #[error(transparent)]
    Codegen(#[from] CodegenError),
    #[error("verification failed, output withheld: {0}")]
    Verify(#[from] VerifyError),
}

fn round2(x: f64) -> f64 {
    (x * 100.0).round() / 100.0
}

/// Output size as a percentage of input size, rounded to two decimals.
/// An empty input counts as 100%.
pub fn ratio_percent(output: usize, input: usize) -> f64 {
    if input == 0 {
        return 100.0;
    }
    round2(output as f64 / input as f64 * 100.0)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompactionReport {
    /// Bytes of array data before compaction; scalars are not counted.
    pub input_bytes: usize,
    pub output_bytes: usize,
    /// `output_bytes` as a percentage of `input_bytes`.
    pub ratio_percent: f64,
    pub pointer_overhead_bytes: usize,
    /// `output_bytes` plus the pointer tables.
    pub net_bytes: usize,
    pub phase_times_ms: BTreeMap<String, f64>,
    pub method_list: Vec<String>,
    pub tie_strategy: String,
    pub seed: Option<u64>,
    pub lossy_merges: usize,
    /// Sizes from other tools supplied by the user, e.g. `"bz2": 62`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub comparisons: BTreeMap<String, f64>,
}

impl CompactionReport {
    pub fn new(spec: &CompactionSpec, result: &CompactionResult, pointer_slots: usize) -> Self {
        let input_bytes = spec.input_bytes();
        let output_bytes = result.compacted.len();
        let overhead = pointer_slots * spec.platform.pointer_bytes as usize;
        let mut phase_times_ms = BTreeMap::new();
        for (name, d) in &result.timings {
            *phase_times_ms.entry(name.clone()).or_insert(0.0) += d.as_secs_f64() * 1000.0;
        }
        for t in phase_times_ms.values_mut() {
            *t = round2(*t);
        }
        Self {
            input_bytes,
            output_bytes,
            ratio_percent: ratio_percent(output_bytes, input_bytes),
            pointer_overhead_bytes: overhead,
            net_bytes: output_bytes + overhead,
            phase_times_ms,
            method_list: spec.options.methods.iter().map(|m| m.as_str().to_string()).collect(),
            tie_strategy: strategy_name(spec.options.tie_strategy).to_string(),
            seed: spec.options.seed,
            lossy_merges: result.lossy_merges.len(),
            comparisons: BTreeMap::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// The report with timings removed, for comparing runs.
    pub fn without_timings(&self) -> Self {
        Self {
            phase_times_ms: BTreeMap::new(),
            ..self.clone()
        }
    }
}

pub fn strategy_name(s: TieStrategy) -> &'static str {
    match s {
        TieStrategy::First => "first",
        TieStrategy::Last => "last",
        TieStrategy::Random => "random",
    }
}

#[derive(Debug, Clone)]
pub struct CompactOutput {
    pub result: CompactionResult,
    pub unit: EmittedUnit,
    pub reference: Option<String>,
    pub report: CompactionReport,
}

/// Compacts, verifies and renders `spec`. Nothing is rendered unless every
/// row reads back correctly.
pub fn compact_and_emit(
    spec: &CompactionSpec,
    parallel: bool,
    with_reference: bool,
) -> Result<CompactOutput, RunError> {
    let result = compact_spec(spec, parallel)?;
    verify_placements(&result, &spec.arrays, &spec.platform)?;
    let emit = EmitOptions::from(&spec.options);
    let unit = emit_compacted(&result, &spec.arrays, &spec.scalars, &spec.platform, &emit)?;
    let reference = if with_reference {
        Some(emit_reference(&spec.arrays, &spec.scalars, &emit)?)
    } else {
        None
    };
    let report = CompactionReport::new(spec, &result, unit.pointer_slots);
    Ok(CompactOutput {
        result,
        unit,
        reference,
        report,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub greedy_len: usize,
    pub optimal_len: usize,
    /// `greedy_len / optimal_len`; 1.0 when both are empty.
    pub ratio: f64,
}

/// Greedy superstring (after sub-array removal, forward orientation only)
/// against the exact optimum.
pub fn oracle_compare(
    rows: &[Vec<u8>],
    strategy: TieStrategy,
    seed: u64,
    limits: OracleLimits,
) -> Result<OracleReport, CompactError> {
    let optimal = brute_force_superstring(rows, limits)?;
    let segments: Vec<Segment> = rows
        .iter()
        .filter(|r| !r.is_empty())
        .cloned()
        .map(Segment::bare)
        .collect();
    let greedy_len = if segments.is_empty() {
        0
    } else {
        let survivors = remove_subarrays(segments, Orientation::Forward);
        let cfg = GreedyConfig {
            strategy,
            seed,
            ..GreedyConfig::default()
        };
        greedy_compact(survivors, &cfg)?.merged.len()
    };
    let ratio = if optimal.is_empty() {
        1.0
    } else {
        greedy_len as f64 / optimal.len() as f64
    };
    Ok(OracleReport {
        greedy_len,
        optimal_len: optimal.len(),
        ratio,
    })
}

/// Runs [`oracle_compare`] on the distinct encoded rows of a spec.
pub fn oracle_for_spec(spec: &CompactionSpec, limits: OracleLimits) -> Result<OracleReport, CompactError> {
    let rows: Vec<Vec<u8>> = flatten(&spec.arrays, &spec.platform)
        .into_iter()
        .map(|s| s.bytes)
        .collect();
    oracle_compare(&rows, spec.options.tie_strategy, spec.options.seed.unwrap_or(0), limits)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitProbe {
    pub parts: usize,
    pub pieces: usize,
    pub unsplit_bytes: usize,
    pub split_bytes: usize,
}

/// Smallest piece, in bytes, worth splitting off.
pub const MIN_PIECE_BYTES: usize = 2;

/// Splits `bytes` into `parts` near-equal pieces on `width`-byte element
/// boundaries. Rows shorter than twice [`MIN_PIECE_BYTES`] stay whole.
pub fn split_row(bytes: &[u8], width: usize, parts: usize) -> Vec<Vec<u8>> {
    let width = width.max(1);
    let elems = bytes.len() / width;
    if bytes.len() < 2 * MIN_PIECE_BYTES || elems < 2 || parts < 2 {
        return vec![bytes.to_vec()];
    }
    let parts = parts.min(elems);
    let (base, extra) = (elems / parts, elems % parts);
    let mut pieces = Vec::with_capacity(parts);
    let mut at = 0;
    for k in 0..parts {
        let n = (base + usize::from(k < extra)) * width;
        pieces.push(bytes[at..at + n].to_vec());
        at += n;
    }
    pieces
}

/// Estimates how small the data would get if every row were split into
/// `parts` pieces. Only sizes are reported: the index rewriting needed to
/// read split rows is not generated.
pub fn probe_split(segments: &[Segment], parts: usize, cfg: &GreedyConfig) -> Result<SplitProbe, CompactError> {
    if parts < 2 {
        return Err(CompactError::Internal(format!("parts must be at least 2, got {parts}")));
    }
    let compacted_len = |segs: Vec<Segment>| -> Result<usize, CompactError> {
        if segs.is_empty() {
            return Ok(0);
        }
        let survivors = remove_subarrays(segs, cfg.orientation);
        Ok(greedy_compact(survivors, cfg)?.merged.len())
    };
    let unsplit = compacted_len(segments.iter().map(|s| Segment::bare(s.bytes.clone())).collect())?;
    let mut pieces: Vec<Vec<u8>> = Vec::new();
    for s in segments {
        for piece in split_row(&s.bytes, s.max_width(), parts) {
            if !pieces.contains(&piece) {
                pieces.push(piece);
            }
        }
    }
    let count = pieces.len();
    let split = compacted_len(pieces.into_iter().map(Segment::bare).collect())?;
    Ok(SplitProbe {
        parts,
        pieces: count,
        unsplit_bytes: unsplit,
        split_bytes: split,
    })
}
