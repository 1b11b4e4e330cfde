use super::CompactError;
use crate::model::{ArraySpec, MappingDecl};
use crate::transform::{RowPath, Segment};

/// A target array served through a declared mapping of a window of its
/// source array. `target[i] == decl.apply(source[window + i])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappingAccessor {
    pub decl: MappingDecl,
    pub source_row: RowPath,
    pub target_row: RowPath,
    /// Element index in the source where the target's image starts.
    pub window: usize,
    pub len: usize,
}

/// Searches every window of each mapping's source for an exact image of the
/// target. On success the target's consumer leaves the segment list (and
/// the segment goes with it once nobody else uses it). A mapping that does
/// not hold is an error naming the first mismatching index of the best
/// window.
pub fn apply_mappings(
    segments: Vec<Segment>,
    mappings: &[MappingDecl],
    arrays: &[ArraySpec],
) -> Result<(Vec<Segment>, Vec<MappingAccessor>), CompactError> {
    let mut segments = segments;
    let mut accessors = Vec::with_capacity(mappings.len());
    for decl in mappings {
        let values = |name: &str| {
            arrays
                .iter()
                .find(|a| a.name == name)
                .and_then(ArraySpec::values_1d)
                .ok_or_else(|| CompactError::Internal(format!("mapping names unvalidated array `{name}`")))
        };
        let source = values(&decl.source)?;
        let target = values(&decl.target)?;
        let window = find_window(decl, source, target)?;

        let target_row = RowPath::new(decl.target.clone(), vec![]);
        for seg in segments.iter_mut() {
            seg.consumers.retain(|c| c.row != target_row);
        }
        segments.retain(|s| !s.consumers.is_empty());
        accessors.push(MappingAccessor {
            decl: decl.clone(),
            source_row: RowPath::new(decl.source.clone(), vec![]),
            target_row,
            window,
            len: target.len(),
        });
    }
    Ok((segments, accessors))
}

fn find_window(decl: &MappingDecl, source: &[i64], target: &[i64]) -> Result<usize, CompactError> {
    let fail = |index| CompactError::MappingDoesNotHold {
        source_name: decl.source.clone(),
        target: decl.target.clone(),
        index,
    };
    if target.len() > source.len() {
        return Err(fail(source.len()));
    }
    // Furthest first mismatch over all windows, earliest window on ties.
    let mut best_mismatch = 0;
    for w in 0..=source.len() - target.len() {
        let mismatch = target
            .iter()
            .enumerate()
            .position(|(k, &t)| decl.apply(source[w + k]) != t);
        match mismatch {
            None => return Ok(w),
            Some(k) => best_mismatch = best_mismatch.max(k),
        }
    }
    Err(fail(best_mismatch))
}
