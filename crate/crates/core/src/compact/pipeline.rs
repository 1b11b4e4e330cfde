use std::collections::{BTreeMap, HashMap, HashSet};
use std::time::Instant;

use super::greedy::{greedy_compact, GreedyConfig};
use super::lossy::lossy_merge;
use super::mapping::apply_mappings;
use super::subarrays::remove_subarrays;
use super::{CompactError, CompactionResult, Orientation, Placement, PlacementEntry};
use crate::model::{CompactionSpec, Method};
use crate::transform::{flatten, RowPath, Segment};

/// Flattens the spec's arrays and runs the enabled compaction stages.
pub fn compact_spec(spec: &CompactionSpec, parallel: bool) -> Result<CompactionResult, CompactError> {
    let start = Instant::now();
    let segments = flatten(&spec.arrays, &spec.platform);
    let elapsed = start.elapsed();
    let mut result = run_pipeline(spec, segments, parallel)?;
    result.timings.insert(0, ("flatten".to_string(), elapsed));
    Ok(result)
}

/// Runs MAPPING, LOSSY, REMOVE_SUBARRAYS and GREEDY (those enabled in
/// `spec.options`) over `segments` and resolves a placement for every slot
/// of every array. Without GREEDY the survivors are concatenated in order.
pub fn run_pipeline(
    spec: &CompactionSpec,
    segments: Vec<Segment>,
    parallel: bool,
) -> Result<CompactionResult, CompactError> {
    let opts = &spec.options;
    let orientation = if opts.has(Method::Reverse) {
        Orientation::WithReversal
    } else {
        Orientation::Forward
    };
    let original: BTreeMap<RowPath, Vec<u8>> = segments
        .iter()
        .flat_map(|s| s.consumers.iter().map(|c| (c.row.clone(), c.read(&s.bytes))))
        .collect();
    let mut timings = Vec::new();
    let mut timed = |name: &str, start: Instant| timings.push((name.to_string(), start.elapsed()));

    let mut segments = segments;
    let mut accessors = Vec::new();
    if opts.has(Method::Mapping) && !spec.mappings.is_empty() {
        let start = Instant::now();
        (segments, accessors) = apply_mappings(segments, &spec.mappings, &spec.arrays)?;
        timed("mapping", start);
    }

    let mut lossy_merges = Vec::new();
    let mut adjusted_rows = BTreeMap::new();
    if opts.has(Method::Lossy) {
        let start = Instant::now();
        let threshold = opts
            .lossy_threshold
            .ok_or_else(|| CompactError::Internal("lossy enabled without threshold".into()))?;
        // Mapping sources stay exact so their accessors keep holding.
        let sources: HashSet<&RowPath> = accessors.iter().map(|a| &a.source_row).collect();
        let outcome = lossy_merge(segments, threshold, |s| {
            s.consumers.iter().all(|c| c.width == 1 && !sources.contains(&c.row))
        });
        segments = outcome.segments;
        lossy_merges = outcome.merges;
        for s in &segments {
            for c in &s.consumers {
                let now = c.read(&s.bytes);
                if original.get(&c.row) != Some(&now) {
                    adjusted_rows.insert(c.row.clone(), now);
                }
            }
        }
        timed("lossy", start);
    }

    if opts.has(Method::RemoveSubarrays) {
        let start = Instant::now();
        segments = remove_subarrays(segments, orientation);
        timed("remove_subarrays", start);
    }

    let mut greedy_steps = Vec::new();
    let merged = if segments.is_empty() {
        Segment::bare(Vec::new())
    } else if opts.has(Method::Greedy) {
        let start = Instant::now();
        let cfg = GreedyConfig {
            strategy: opts.tie_strategy,
            seed: opts.seed.unwrap_or(0),
            orientation,
            parallel,
        };
        let outcome = greedy_compact(segments, &cfg)?;
        greedy_steps = outcome.steps;
        timed("greedy", start);
        outcome.merged
    } else {
        let mut all = Segment::bare(Vec::new());
        for s in segments {
            let at = all.len();
            all.bytes.extend_from_slice(&s.bytes);
            all.absorb(s, at, false);
        }
        all
    };

    let located: HashMap<&RowPath, Placement> = merged
        .consumers
        .iter()
        .map(|c| {
            (
                &c.row,
                Placement::At {
                    offset: c.offset,
                    len: c.len,
                    reversed: c.reversed,
                },
            )
        })
        .collect();
    let mapped: HashMap<&RowPath, usize> = accessors.iter().enumerate().map(|(i, a)| (&a.target_row, i)).collect();

    let mut placements = Vec::new();
    for array in &spec.arrays {
        for slot in array.slots() {
            let row = RowPath::new(array.name.clone(), slot.indices);
            let placement = if slot.row.is_none() {
                Placement::Null
            } else if let Some(&i) = mapped.get(&row) {
                Placement::Mapped(i)
            } else {
                *located
                    .get(&row)
                    .ok_or_else(|| CompactError::Internal(format!("row {row} lost during compaction")))?
            };
            placements.push(PlacementEntry { row, placement });
        }
    }

    Ok(CompactionResult {
        compacted: merged.bytes,
        placements,
        accessors,
        lossy_merges,
        adjusted_rows,
        greedy_steps,
        timings,
    })
}
